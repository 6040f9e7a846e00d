use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, MutexGuard};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner;
use crate::linalg::SparseVec;
use crate::monomial::{Monomial, OrderKind};
use crate::poly::{PolyRing, Polynomial};

/// A standard graded algebra `R = S / I` with `S = F_p[x_1..x_n]` and `I`
/// homogeneous.
///
/// Cloning is cheap; clones share the Gröbner basis and the per-degree
/// tables (standard monomial bases, normal forms of monomials), which are
/// filled lazily behind a mutex.
#[derive(Clone)]
pub struct GradedRing {
    inner: Arc<RingData>,
}

struct RingData {
    poly: PolyRing,
    ideal: Vec<Polynomial>,
    gb: Vec<Polynomial>,
    top_degree: Option<u32>,
    tables: Mutex<Tables>,
}

/// Standard monomials of one degree, descending in the monomial order.
#[derive(Debug)]
pub struct StdBasis {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
}

impl StdBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }
}

#[derive(Default)]
struct Tables {
    bases: Vec<Arc<StdBasis>>,
    nf: HashMap<Monomial, Arc<[(u32, u32)]>>,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ideal: Vec<String> = self.inner.ideal.iter().map(|g| self.poly().format(g)).collect();
        write!(f, "GradedRing(p={}; {}) / ({})", self.field().modulus(), self.vars().join(","), ideal.join(", "))
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || (self.inner.poly == other.inner.poly && self.inner.gb == other.inner.gb)
    }
}

impl Eq for GradedRing {}

impl GradedRing {
    /// Builds `S / (ideal)`. Generators must be homogeneous of positive degree.
    pub fn new(poly: PolyRing, ideal: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in ideal {
            if g.is_zero() {
                continue;
            }
            match g.homogeneous_degree() {
                None => return Err(Error::NotHomogeneous(poly.format(&g))),
                Some(0) => return Err(Error::Invalid("defining ideal contains a unit".into())),
                Some(_) => gens.push(g),
            }
        }
        let gb = groebner::ideal_groebner_basis(&poly, &gens);
        let top_degree = artinian_top_degree(&poly, &gb);
        Ok(GradedRing { inner: Arc::new(RingData { poly, ideal: gens, gb, top_degree, tables: Mutex::default() }) })
    }

    pub fn polynomial_ring(field: PrimeField, vars: &[&str]) -> Self {
        let poly = PolyRing::new(field, vars.iter().map(|v| v.to_string()).collect(), OrderKind::DegRevLex);
        Self::new(poly, Vec::new()).expect("zero ideal")
    }

    /// Convenience constructor from polynomial strings.
    pub fn parse(field: PrimeField, vars: &[&str], relations: &[&str]) -> Result<Self> {
        let poly = PolyRing::new(field, vars.iter().map(|v| v.to_string()).collect(), OrderKind::DegRevLex);
        let rels = relations.iter().map(|r| poly.parse(r)).collect::<Result<Vec<_>>>()?;
        Self::new(poly, rels)
    }

    /// `R / (extra)` as a new ring over the same variables.
    pub fn quotient(&self, extra: &[Polynomial]) -> Result<Self> {
        let mut rels = self.inner.ideal.clone();
        rels.extend(extra.iter().cloned());
        Self::new(self.inner.poly.clone(), rels)
    }

    pub fn poly(&self) -> &PolyRing {
        &self.inner.poly
    }

    pub fn field(&self) -> PrimeField {
        self.inner.poly.field()
    }

    pub fn vars(&self) -> &[String] {
        self.inner.poly.vars()
    }

    pub fn nvars(&self) -> usize {
        self.inner.poly.nvars()
    }

    pub fn defining_ideal(&self) -> &[Polynomial] {
        &self.inner.ideal
    }

    /// Reduced, monic Gröbner basis of the defining ideal.
    pub fn defining_gb(&self) -> &[Polynomial] {
        &self.inner.gb
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.inner.gb.is_empty()
    }

    /// Largest `d` with `R_d != 0` when `R` is Artinian.
    pub fn top_degree(&self) -> Option<u32> {
        self.inner.top_degree
    }

    /// A Gröbner basis of degree at most two certifies Koszulness (the
    /// initial algebra is a quotient by linear and quadratic monomials, and
    /// the residue field's regularity can only drop under the deformation).
    pub fn has_quadratic_gb(&self) -> bool {
        self.inner.gb.iter().all(|g| g.homogeneous_degree().is_some_and(|d| d <= 2))
    }

    pub fn same_as(&self, other: &GradedRing) -> bool {
        self == other
    }

    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        let f = self.poly().parse(text)?;
        Ok(self.reduce(&f))
    }

    pub fn format(&self, f: &Polynomial) -> String {
        self.poly().format(f)
    }

    /// `dim_k R_d`.
    pub fn hilbert_function(&self, d: i32) -> usize {
        if d < 0 {
            return 0;
        }
        self.tables().basis(d as u32).len()
    }

    /// Normal form modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        if self.is_polynomial_ring() || f.is_zero() {
            return f.clone();
        }
        let mut t = self.tables();
        let mut by_degree: Vec<(u32, Vec<(u32, u32)>)> = Vec::new();
        let fld = self.field();
        let mut acc: HashMap<(u32, u32), u32> = HashMap::new();
        for (m, c) in f.terms() {
            let nf = t.nf(m);
            for &(i, x) in nf.iter() {
                let e = acc.entry((m.degree(), i)).or_insert(0);
                *e = fld.add(*e, fld.mul(x, *c));
            }
        }
        for ((d, i), c) in acc {
            if c != 0 {
                match by_degree.iter_mut().find(|(dd, _)| *dd == d) {
                    Some((_, v)) => v.push((i, c)),
                    None => by_degree.push((d, vec![(i, c)])),
                }
            }
        }
        let mut terms = Vec::new();
        for (d, v) in by_degree {
            let b = t.basis(d);
            for (i, c) in v {
                terms.push((b.monomials[i as usize].clone(), c));
            }
        }
        drop(t);
        self.poly().from_terms(terms)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.reduce(&self.poly().mul(f, g))
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.poly().add(f, g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.poly().sub(f, g)
    }

    pub fn is_zero_in_ring(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Exclusive access to the per-degree tables. Do not call other methods
    /// of this ring that take the lock while holding the guard.
    pub(crate) fn tables(&self) -> TablesGuard<'_> {
        TablesGuard { ring: &self.inner, guard: self.inner.tables.lock().unwrap_or_else(|e| e.into_inner()) }
    }
}

pub(crate) struct TablesGuard<'a> {
    ring: &'a RingData,
    guard: MutexGuard<'a, Tables>,
}

impl TablesGuard<'_> {
    pub fn field(&self) -> PrimeField {
        self.ring.poly.field()
    }

    pub fn basis(&mut self, d: u32) -> Arc<StdBasis> {
        let d = d as usize;
        while self.guard.bases.len() <= d {
            let deg = self.guard.bases.len() as u32;
            let b = compute_basis(&self.ring.poly, &self.ring.gb, deg);
            self.guard.bases.push(Arc::new(b));
        }
        Arc::clone(&self.guard.bases[d])
    }

    /// Coordinates of the monomial `m` in the standard basis of `R_{deg m}`.
    pub fn nf(&mut self, m: &Monomial) -> Arc<[(u32, u32)]> {
        if let Some(v) = self.guard.nf.get(m) {
            return Arc::clone(v);
        }
        let b = self.basis(m.degree());
        if let Some(i) = b.index_of(m) {
            let v: Arc<[(u32, u32)]> = Arc::from(vec![(i, 1)]);
            self.guard.nf.insert(m.clone(), Arc::clone(&v));
            return v;
        }
        let g = self
            .ring
            .gb
            .iter()
            .find(|g| g.terms()[0].0.divides(m))
            .expect("non-standard monomial has a reducer");
        let q = g.terms()[0].0.quotient_of(m).expect("divides");
        let fld = self.field();
        let p = fld.modulus() as u64;
        let mut acc: HashMap<u32, u64> = HashMap::new();
        for (t, c) in &g.terms()[1..] {
            let sub = self.nf(&t.mul(&q));
            let f = p - *c as u64;
            for &(i, x) in sub.iter() {
                let e = acc.entry(i).or_insert(0);
                *e = (*e + f * x as u64) % p;
            }
        }
        let mut v: SparseVec = acc.into_iter().filter(|(_, x)| *x != 0).map(|(i, x)| (i, x as u32)).collect();
        v.sort_unstable_by_key(|e| e.0);
        let v: Arc<[(u32, u32)]> = Arc::from(v);
        self.guard.nf.insert(m.clone(), Arc::clone(&v));
        v
    }
}

fn compute_basis(poly: &PolyRing, gb: &[Polynomial], d: u32) -> StdBasis {
    let mut monomials: Vec<Monomial> = Monomial::all_of_degree(poly.nvars(), d)
        .into_iter()
        .filter(|m| !gb.iter().any(|g| g.terms()[0].0.divides(m)))
        .collect();
    monomials.sort_by(|a, b| poly.cmp(b, a));
    let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
    StdBasis { degree: d, monomials, index }
}

fn artinian_top_degree(poly: &PolyRing, gb: &[Polynomial]) -> Option<u32> {
    let n = poly.nvars();
    let mut bound = 0u32;
    for v in 0..n {
        let e = gb
            .iter()
            .filter_map(|g| {
                let m = &g.terms()[0].0;
                let pure = m.exponents().iter().enumerate().all(|(i, &e)| i == v || e == 0);
                pure.then(|| m.exponents()[v] as u32)
            })
            .min()?;
        bound += e - 1;
    }
    // R_d = 0 for d > sum (e_v - 1); find the exact top degree below that
    let mut top = 0;
    for d in 0..=bound {
        let empty = compute_basis(poly, gb, d).is_empty();
        if !empty {
            top = d;
        }
    }
    Some(top)
}
