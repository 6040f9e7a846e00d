//! Finitely generated graded modules as subquotients of graded free modules,
//! and ideals.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graded::{self, Piece};
use crate::groebner::FreeVector;
use crate::linalg::Echelon;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::GradedRing;

/// `M = (<gens> + K) / K` inside `F = ⊕ R(-shifts[c])`, where `K` is
/// spanned by `rels`. A cokernel has unit vectors as `gens`, a submodule
/// has no `rels`.
#[derive(Clone, Debug)]
pub struct GradedModule {
    ring: GradedRing,
    shifts: Vec<i32>,
    gens: Vec<FreeVector>,
    rels: Vec<FreeVector>,
}

fn check(ring: &GradedRing, shifts: &[i32], vs: &[FreeVector], what: &str) -> Result<()> {
    for v in vs {
        if v.rank() != shifts.len() {
            return Err(Error::AmbientMismatch(format!(
                "{what} has {} entries but the ambient free module has rank {}",
                v.rank(),
                shifts.len()
            )));
        }
        if !v.is_homogeneous(shifts) {
            let parts: Vec<String> = v.entries.iter().map(|f| ring.format(f)).collect();
            return Err(Error::NotHomogeneous(format!("{what} [{}]", parts.join(", "))));
        }
    }
    Ok(())
}

/// Degree first, then position over term on the leading entry.
pub(crate) fn vector_cmp(ring: &GradedRing, shifts: &[i32], a: &FreeVector, b: &FreeVector) -> Ordering {
    let da = a.degree(shifts).unwrap_or(i32::MIN);
    let db = b.degree(shifts).unwrap_or(i32::MIN);
    da.cmp(&db).then_with(|| {
        for (fa, fb) in a.entries.iter().zip(&b.entries) {
            for (ta, tb) in fa.terms().iter().zip(fb.terms()) {
                let o = ring.poly().cmp(&tb.0, &ta.0).then(ta.1.cmp(&tb.1));
                if o != Ordering::Equal {
                    return o;
                }
            }
            let o = fb.len().cmp(&fa.len());
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

impl GradedModule {
    pub fn subquotient(ring: &GradedRing, shifts: Vec<i32>, gens: Vec<FreeVector>, rels: Vec<FreeVector>) -> Result<Self> {
        check(ring, &shifts, &gens, "generator")?;
        check(ring, &shifts, &rels, "relation")?;
        let clean = |vs: Vec<FreeVector>| -> Vec<FreeVector> {
            vs.iter().map(|v| graded::reduce_vector(ring, v)).filter(|v| !v.is_zero()).collect()
        };
        Ok(GradedModule { ring: ring.clone(), shifts, gens: clean(gens), rels: clean(rels) })
    }

    pub fn free(ring: &GradedRing, shifts: Vec<i32>) -> Self {
        let n = shifts.len();
        let gens = (0..n).map(|j| FreeVector::unit(ring.poly(), n, j)).collect();
        GradedModule { ring: ring.clone(), shifts, gens, rels: Vec::new() }
    }

    /// `coker(⊕ R(-src_i) -> ⊕ R(-tgt_c))` for the matrix with the given
    /// columns. `src` may be omitted; when given it must match the column
    /// degrees.
    pub fn cokernel(ring: &GradedRing, tgt: Vec<i32>, src: Option<&[i32]>, columns: Vec<FreeVector>) -> Result<Self> {
        check(ring, &tgt, &columns, "column")?;
        if let Some(src) = src {
            if src.len() != columns.len() {
                return Err(Error::AmbientMismatch(format!("{} source shifts for {} columns", src.len(), columns.len())));
            }
            for (k, (c, &s)) in columns.iter().zip(src).enumerate() {
                if let Some(d) = c.degree(&tgt) {
                    if d != s {
                        return Err(Error::NotHomogeneous(format!("column {} has degree {d}, expected {s}", k + 1)));
                    }
                }
            }
        }
        let free = Self::free(ring, tgt);
        Self::subquotient(ring, free.shifts.clone(), free.gens, columns)
    }

    pub fn submodule(ring: &GradedRing, shifts: Vec<i32>, gens: Vec<FreeVector>) -> Result<Self> {
        Self::subquotient(ring, shifts, gens, Vec::new())
    }

    pub fn residue_field(ring: &GradedRing) -> Self {
        Ideal::maximal(ring).quotient_module()
    }

    pub fn zero(ring: &GradedRing) -> Self {
        GradedModule { ring: ring.clone(), shifts: Vec::new(), gens: Vec::new(), rels: Vec::new() }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn shifts(&self) -> &[i32] {
        &self.shifts
    }

    pub fn generators(&self) -> &[FreeVector] {
        &self.gens
    }

    pub fn relations(&self) -> &[FreeVector] {
        &self.rels
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn generator_degrees(&self) -> Vec<i32> {
        graded::degrees_of(&self.gens, &self.shifts)
    }

    fn same_ambient(&self, other: &GradedModule) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.shifts != other.shifts {
            return Err(Error::AmbientMismatch(format!("shifts {:?} vs {:?}", self.shifts, other.shifts)));
        }
        Ok(())
    }

    /// A minimal homogeneous generating set, sorted by degree and then by
    /// the module order; ties between equally good choices go to the
    /// earlier generator in that order.
    pub fn minimal_generators(&self) -> Vec<FreeVector> {
        let mut sorted = self.gens.clone();
        sorted.sort_by(|a, b| vector_cmp(&self.ring, &self.shifts, a, b));
        let keep = graded::minimal_subset(&self.ring, &self.shifts, &sorted, &self.rels);
        keep.into_iter().map(|i| sorted[i].clone()).collect()
    }

    pub fn minimalize(&self) -> GradedModule {
        GradedModule { gens: self.minimal_generators(), ..self.clone() }
    }

    pub fn num_generators(&self) -> usize {
        self.minimal_generators().len()
    }

    pub fn is_zero(&self) -> bool {
        self.minimal_generators().is_empty()
    }

    /// Relations among the minimal generators: columns of a minimal
    /// presentation `⊕ R(-b) -> ⊕ R(-a) -> M -> 0`, with the `a` returned
    /// alongside.
    pub fn presentation(&self) -> Result<(Vec<i32>, Vec<FreeVector>)> {
        let gens = self.minimal_generators();
        let degs = graded::degrees_of(&gens, &self.shifts);
        let ker = graded::kernel_generators(&self.ring, &degs, &gens, &self.shifts, &self.rels)?;
        Ok((degs, ker))
    }

    /// The same module as a cokernel of its minimal presentation.
    pub fn to_cokernel(&self) -> Result<GradedModule> {
        let (degs, cols) = self.presentation()?;
        GradedModule::cokernel(&self.ring, degs, None, cols)
    }

    fn piece(&self, d: i32) -> (Echelon, Echelon, Piece) {
        let mut t = self.ring.tables();
        let piece = Piece::new(&mut t, &self.shifts, d);
        let rel_degs = graded::degrees_of(&self.rels, &self.shifts);
        let k = graded::span_in_degree(&mut t, &piece, &self.rels, &rel_degs);
        let mut all = k.clone();
        let degs = graded::degrees_of(&self.gens, &self.shifts);
        let g = graded::span_in_degree(&mut t, &piece, &self.gens, &degs);
        for r in g.into_rows() {
            all.insert(r);
        }
        (all, k, piece)
    }

    /// `dim_k M_d`.
    pub fn hilbert_function(&self, d: i32) -> usize {
        let (all, k, _) = self.piece(d);
        all.rank() - k.rank()
    }

    /// Whether `v` (an element of the ambient free module) lies in
    /// `<gens> + K`, i.e. represents an element of `M`.
    pub fn contains(&self, v: &FreeVector) -> Result<bool> {
        check(&self.ring, &self.shifts, std::slice::from_ref(v), "element")?;
        let Some(d) = v.degree(&self.shifts) else {
            return Ok(true);
        };
        let (all, _, piece) = self.piece(d);
        let mut t = self.ring.tables();
        let c = graded::coords_times(&mut t, &piece, v, None);
        Ok(all.contains(&c))
    }

    /// Whether `v` represents zero in `M`, i.e. lies in `K`.
    pub fn is_zero_element(&self, v: &FreeVector) -> Result<bool> {
        check(&self.ring, &self.shifts, std::slice::from_ref(v), "element")?;
        let Some(d) = v.degree(&self.shifts) else {
            return Ok(true);
        };
        let (_, k, piece) = self.piece(d);
        let mut t = self.ring.tables();
        let c = graded::coords_times(&mut t, &piece, v, None);
        Ok(k.contains(&c))
    }

    /// Whether `self ⊆ other` as subquotients with the same `K`.
    pub fn is_submodule_of(&self, other: &GradedModule) -> Result<bool> {
        self.same_ambient(other)?;
        for g in self.gens.iter().chain(&self.rels) {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &GradedModule) -> Result<bool> {
        Ok(self.is_submodule_of(other)? && other.is_submodule_of(self)?)
    }

    /// `m^s M`.
    pub fn power_times(&self, s: u32) -> GradedModule {
        if s == 0 {
            return self.minimalize();
        }
        let monos = Monomial::all_of_degree(self.ring.nvars(), s);
        let mut gens = Vec::new();
        for g in self.minimal_generators() {
            for mu in &monos {
                let v = FreeVector::new(g.entries.iter().map(|f| self.ring.poly().mul_term(f, mu, 1)).collect());
                let v = graded::reduce_vector(&self.ring, &v);
                if !v.is_zero() {
                    gens.push(v);
                }
            }
        }
        GradedModule { gens, ..self.clone() }.minimalize()
    }

    /// `M_<d>`: the submodule generated by the degree-`d` piece.
    pub fn truncate_component(&self, d: i32) -> GradedModule {
        let (all, k, piece) = self.piece(d);
        let mut e = k;
        let mut gens = Vec::new();
        let mut all = all;
        all.to_rref();
        for r in all.rows() {
            if e.insert(r.clone()) {
                gens.push(graded::from_coords(&self.ring, &piece, r));
            }
        }
        GradedModule { gens, ..self.clone() }.minimalize()
    }

    /// Submodule sum with the same ambient and `K`.
    pub fn plus(&self, other: &GradedModule) -> Result<GradedModule> {
        self.same_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(GradedModule { gens, ..self.clone() }.minimalize())
    }

    /// `self ∩ other` for submodules of the same subquotient ambient.
    pub fn intersect(&self, other: &GradedModule) -> Result<GradedModule> {
        self.same_ambient(other)?;
        let fld = self.ring.field();
        let a = self.minimal_generators();
        let b = other.minimal_generators();
        let mut cols = a.clone();
        for v in &b {
            cols.push(FreeVector::new(v.entries.iter().map(|f| self.ring.poly().scale(f, fld.neg(1))).collect()));
        }
        let mut src = graded::degrees_of(&a, &self.shifts);
        src.extend(graded::degrees_of(&b, &self.shifts));
        let ker = graded::kernel_generators(&self.ring, &src, &cols, &self.shifts, &self.rels)?;
        let gens = ker
            .iter()
            .map(|k| {
                let first = FreeVector::new(k.entries[..a.len()].to_vec());
                graded::apply(&self.ring, &a, self.shifts.len(), &first)
            })
            .collect();
        Ok(GradedModule { gens, ..self.clone() }.minimalize())
    }

    /// The ideal `(self :_R v) = {r : r v ∈ self}`.
    pub fn colon_element(&self, v: &FreeVector) -> Result<Ideal> {
        check(&self.ring, &self.shifts, std::slice::from_ref(v), "element")?;
        let Some(d) = v.degree(&self.shifts) else {
            return Ok(Ideal::unit(&self.ring));
        };
        let mut modulo = self.gens.clone();
        modulo.extend(self.rels.iter().cloned());
        let ker = graded::kernel_generators(&self.ring, &[d], std::slice::from_ref(v), &self.shifts, &modulo)?;
        Ideal::new(&self.ring, ker.into_iter().map(|k| k.entries.into_iter().next().expect("rank one")).collect())
    }

    /// `P / M` for `M ⊆ P` with the same ambient.
    pub fn quotient_by(&self, sub: &GradedModule) -> Result<GradedModule> {
        self.same_ambient(sub)?;
        let mut rels = self.rels.clone();
        rels.extend(sub.gens.iter().cloned());
        Ok(GradedModule { rels, ..self.clone() }.minimalize())
    }

    /// Whether `m * M = 0`.
    pub fn is_killed_by_maximal_ideal(&self) -> bool {
        let n = self.ring.nvars();
        for g in &self.gens {
            for v in 0..n {
                let x = Monomial::var(n, v);
                let w = FreeVector::new(g.entries.iter().map(|f| self.ring.poly().mul_term(f, &x, 1)).collect());
                if !self.is_zero_element(&w).expect("same ambient") {
                    return false;
                }
            }
        }
        true
    }

    pub fn format_vector(&self, v: &FreeVector) -> String {
        let parts: Vec<String> = v.entries.iter().map(|f| self.ring.format(f)).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// A homogeneous ideal of `R`, stored by a minimal generating set sorted by
/// degree and then by the monomial order.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: GradedRing,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &GradedRing, gens: Vec<Polynomial>) -> Result<Self> {
        let vs: Vec<FreeVector> = gens.into_iter().map(|g| FreeVector::new(vec![g])).collect();
        let m = GradedModule::submodule(ring, vec![0], vs)?;
        Ok(Self::from_module(&m))
    }

    pub fn parse(ring: &GradedRing, gens: &[&str]) -> Result<Self> {
        let ps = gens.iter().map(|g| ring.parse_poly(g)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, ps)
    }

    fn from_module(m: &GradedModule) -> Self {
        let gens = m.minimal_generators().into_iter().map(|v| v.entries.into_iter().next().expect("rank one")).collect();
        Ideal { ring: m.ring.clone(), gens }
    }

    pub fn zero(ring: &GradedRing) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &GradedRing) -> Self {
        Ideal { ring: ring.clone(), gens: vec![ring.poly().one()] }
    }

    pub fn maximal(ring: &GradedRing) -> Self {
        let n = ring.nvars();
        Ideal::new(ring, (0..n).map(|i| ring.poly().var(i)).collect()).expect("variables are homogeneous")
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.homogeneous_degree() == Some(0))
    }

    /// Generated by linear forms.
    pub fn is_linear(&self) -> bool {
        self.gens.iter().all(|g| g.homogeneous_degree() == Some(1))
    }

    pub fn as_module(&self) -> GradedModule {
        let gens = self.gens.iter().map(|g| FreeVector::new(vec![g.clone()])).collect();
        GradedModule { ring: self.ring.clone(), shifts: vec![0], gens, rels: Vec::new() }
    }

    /// `R / I` as a cyclic module.
    pub fn quotient_module(&self) -> GradedModule {
        let rels = self.gens.iter().map(|g| FreeVector::new(vec![g.clone()])).collect();
        GradedModule { ring: self.ring.clone(), shifts: vec![0], gens: vec![FreeVector::unit(self.ring.poly(), 1, 0)], rels }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.as_module().contains(&FreeVector::new(vec![f.clone()]))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.as_module().equals(&other.as_module())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.as_module().is_submodule_of(&other.as_module())
    }

    pub fn hilbert_function(&self, d: i32) -> usize {
        self.as_module().hilbert_function(d)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Self::from_module(&self.as_module().intersect(&other.as_module())?))
    }

    /// `I : f`. For `f = 0` this is the unit ideal.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() || self.ring.is_zero_in_ring(f) {
            return Ok(Ideal::unit(&self.ring));
        }
        self.as_module().colon_element(&FreeVector::new(vec![f.clone()]))
    }

    pub fn plus(&self, other: &Ideal) -> Result<Ideal> {
        Ok(Self::from_module(&self.as_module().plus(&other.as_module())?))
    }

    pub fn times(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(self.ring.mul(f, g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, e: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..e {
            acc = acc.times(self)?;
        }
        Ok(acc)
    }

    /// `I_<d>`.
    pub fn truncate_component(&self, d: i32) -> Ideal {
        Self::from_module(&self.as_module().truncate_component(d))
    }

    pub fn format(&self) -> String {
        let g: Vec<String> = self.gens.iter().map(|f| self.ring.format(f)).collect();
        format!("({})", g.join(", "))
    }
}
