//! Buchberger's algorithm for ideals of `S` and for submodules of graded free
//! `S`-modules, position over term or induced through a map.
//!
//! Arithmetic over `R = S/I` is done by adjoining `g * e_j` for every `g` in
//! the reduced basis of `I` and every ambient generator `e_j`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::GradedRing;

/// An element of a graded free module `⊕ R(-d_j)`; one polynomial per
/// ambient generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeVector {
    pub entries: Vec<Polynomial>,
}

impl FreeVector {
    pub fn new(entries: Vec<Polynomial>) -> Self {
        FreeVector { entries }
    }

    pub fn zero(rank: usize) -> Self {
        FreeVector { entries: vec![Polynomial::zero(); rank] }
    }

    /// The unit vector `e_j`.
    pub fn unit(poly: &PolyRing, rank: usize, j: usize) -> Self {
        let mut v = Self::zero(rank);
        v.entries[j] = poly.one();
        v
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// Total degree against the ambient shifts, `None` for zero or
    /// inhomogeneous vectors.
    pub fn degree(&self, shifts: &[i32]) -> Option<i32> {
        let mut deg = None;
        for (f, &s) in self.entries.iter().zip(shifts) {
            if f.is_zero() {
                continue;
            }
            let d = f.homogeneous_degree()? as i32 + s;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self, shifts: &[i32]) -> bool {
        self.is_zero() || self.degree(shifts).is_some()
    }
}

type Term = (u32, Monomial, u32);

/// Vector as a term list, descending in position-over-term order (lower
/// component index first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Vect(Vec<Term>);

fn pot_cmp(poly: &PolyRing, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| poly.cmp(a.1, b.1))
}

/// Term order on a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    PositionOverTerm,
    /// Induced by a map to another free module: `m e_j` is compared through
    /// `m * mu_j` at `c_j` there (position over term), ties going to the
    /// lower index.
    Schreyer(Vec<(u32, Monomial)>),
}

impl TermOrder {
    /// The order induced by `cols`, each read through its leading term in
    /// position over term order.
    pub fn schreyer(cols: &[FreeVector], poly: &PolyRing) -> TermOrder {
        let nv = poly.nvars();
        TermOrder::Schreyer(
            cols.iter()
                .map(|c| {
                    let v = Vect::from_free(c, poly, &TermOrder::PositionOverTerm);
                    v.lead().map_or((0, Monomial::one(nv)), |t| (t.0, t.1.clone()))
                })
                .collect(),
        )
    }

    fn cmp(&self, poly: &PolyRing, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        match self {
            TermOrder::PositionOverTerm => pot_cmp(poly, a, b),
            TermOrder::Schreyer(leads) => {
                let (ca, ma) = &leads[a.0 as usize];
                let (cb, mb) = &leads[b.0 as usize];
                pot_cmp(poly, (*ca, &a.1.mul(ma)), (*cb, &b.1.mul(mb))).then_with(|| b.0.cmp(&a.0))
            }
        }
    }
}

impl Vect {
    fn lead(&self) -> Option<&Term> {
        self.0.first()
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn from_free(v: &FreeVector, poly: &PolyRing, order: &TermOrder) -> Self {
        let mut t = Vec::new();
        for (j, f) in v.entries.iter().enumerate() {
            t.extend(f.terms().iter().map(|(m, c)| (j as u32, m.clone(), *c)));
        }
        if *order != TermOrder::PositionOverTerm {
            t.sort_by(|a, b| order.cmp(poly, (b.0, &b.1), (a.0, &a.1)));
        }
        Vect(t)
    }

    fn to_free(&self, rank: usize) -> FreeVector {
        let mut parts: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); rank];
        for (j, m, c) in &self.0 {
            parts[*j as usize].push((m.clone(), *c));
        }
        FreeVector { entries: parts.into_iter().map(Polynomial::from_sorted_terms).collect() }
    }

    fn poly_in(f: &Polynomial, comp: u32) -> Self {
        Vect(f.terms().iter().map(|(m, c)| (comp, m.clone(), *c)).collect())
    }

    /// `self + c * mono * g`.
    fn add_scaled(&self, poly: &PolyRing, order: &TermOrder, g: &Vect, c: u32, mono: &Monomial) -> Vect {
        let fld = poly.field();
        let mut out = Vec::with_capacity(self.0.len() + g.0.len());
        let f = &self.0;
        let mut i = 0;
        for (gj, gm, gc) in &g.0 {
            let m = gm.mul(mono);
            let gc = fld.mul(*gc, c);
            while i < f.len() && order.cmp(poly, (f[i].0, &f[i].1), (*gj, &m)) == Ordering::Greater {
                out.push(f[i].clone());
                i += 1;
            }
            if i < f.len() && f[i].0 == *gj && f[i].1 == m {
                let s = fld.add(f[i].2, gc);
                if s != 0 {
                    out.push((*gj, m, s));
                }
                i += 1;
            } else if gc != 0 {
                out.push((*gj, m, gc));
            }
        }
        out.extend_from_slice(&f[i..]);
        Vect(out)
    }

    fn monic(&self, poly: &PolyRing) -> Vect {
        match self.lead() {
            Some(&(_, _, c)) if c != 1 => {
                let fld = poly.field();
                let inv = fld.inv(c).expect("nonzero");
                Vect(self.0.iter().map(|(j, m, a)| (*j, m.clone(), fld.mul(*a, inv))).collect())
            }
            _ => self.clone(),
        }
    }
}

/// A Gröbner basis of a submodule of `⊕ S(-d_j)` containing `I * e_j` for all
/// `j`. Only the module elements are stored; the ring part is implied.
#[derive(Clone, Debug)]
pub struct ModuleGB {
    pub shifts: Vec<i32>,
    pub generators: Vec<FreeVector>,
    pub reduced: bool,
    elems: Vec<Vect>,
    ring_gb: Vec<Polynomial>,
    poly: PolyRing,
    order: TermOrder,
    syzygy_degree_bound: Option<i32>,
}

/// Pair bookkeeping: `b` indexes the ring basis when `ring` is set.
#[derive(Clone, Debug)]
struct Pair {
    degree: i32,
    a: usize,
    b: usize,
    ring: bool,
    lcm: Monomial,
}

struct Engine<'a> {
    poly: &'a PolyRing,
    order: &'a TermOrder,
    shifts: &'a [i32],
    ring_gb: &'a [Polynomial],
    elems: Vec<Vect>,
    max_pair_degree: Option<i32>,
}

impl Engine<'_> {
    fn find_reducer(&self, j: u32, m: &Monomial) -> Option<(Vect, Monomial)> {
        for e in &self.elems {
            let (ej, em, _) = e.lead().expect("nonzero element");
            if *ej == j {
                if let Some(q) = em.quotient_of(m) {
                    return Some((e.clone(), q));
                }
            }
        }
        for g in self.ring_gb {
            let lm = &g.terms()[0].0;
            if let Some(q) = lm.quotient_of(m) {
                return Some((Vect::poly_in(g, j), q));
            }
        }
        None
    }

    /// Full reduction; the remainder has no term divisible by a leading term.
    fn reduce(&self, v: &Vect) -> Vect {
        let fld = self.poly.field();
        let mut rest = v.clone();
        let mut out: Vec<Term> = Vec::new();
        while let Some((j, m, c)) = rest.lead().cloned() {
            match self.find_reducer(j, &m) {
                Some((g, q)) => {
                    let lc = g.lead().expect("nonzero").2;
                    let f = fld.neg(fld.div(c, lc).expect("nonzero"));
                    rest = rest.add_scaled(self.poly, self.order, &g, f, &q);
                }
                None => {
                    out.push((j, m, c));
                    rest.0.remove(0);
                }
            }
        }
        Vect(out)
    }

    fn spoly(&self, p: &Pair) -> Vect {
        let fld = self.poly.field();
        let f = &self.elems[p.a];
        let (j, fm, fc) = f.lead().cloned().expect("nonzero");
        let g = if p.ring { Vect::poly_in(&self.ring_gb[p.b], j) } else { self.elems[p.b].clone() };
        let (_, gm, gc) = g.lead().cloned().expect("nonzero");
        let qf = fm.quotient_of(&p.lcm).expect("lcm");
        let qg = gm.quotient_of(&p.lcm).expect("lcm");
        let left = Vect(Vec::new()).add_scaled(self.poly, self.order, f, fld.inv(fc).expect("nonzero"), &qf);
        left.add_scaled(self.poly, self.order, &g, fld.neg(fld.inv(gc).expect("nonzero")), &qg)
    }

    fn pair_degree(&self, comp: u32, lcm: &Monomial) -> i32 {
        self.shifts[comp as usize] + lcm.degree() as i32
    }

    /// Gebauer–Möller update for a newly added element `k`.
    fn update(&mut self, pairs: &mut Vec<Pair>, k: usize) {
        let (kj, km, _) = self.elems[k].lead().cloned().expect("nonzero");
        // old pairs whose lcm is strictly divisible by the new lead
        pairs.retain(|p| {
            if p.ring || p.a == k || p.b == k {
                return true;
            }
            let comp = self.elems[p.a].lead().expect("nonzero").0;
            if comp != kj || !km.divides(&p.lcm) {
                return true;
            }
            let la = self.elems[p.a].lead().expect("nonzero").1.lcm(&km);
            let lb = self.elems[p.b].lead().expect("nonzero").1.lcm(&km);
            la == p.lcm || lb == p.lcm
        });
        let mut fresh: Vec<Pair> = Vec::new();
        for i in 0..k {
            let (ij, im, _) = self.elems[i].lead().expect("nonzero");
            if *ij != kj {
                continue;
            }
            let lcm = im.lcm(&km);
            fresh.push(Pair { degree: self.pair_degree(kj, &lcm), a: k, b: i, ring: false, lcm });
        }
        // chain criterion among the new pairs: drop pairs whose lcm is a
        // proper multiple of another new lcm, keep one per repeated lcm
        let snapshot = fresh.clone();
        let mut seen: Vec<Monomial> = Vec::new();
        fresh.retain(|p| {
            let dominated = snapshot.iter().any(|q| q.lcm != p.lcm && q.lcm.divides(&p.lcm));
            if dominated || seen.contains(&p.lcm) {
                return false;
            }
            seen.push(p.lcm.clone());
            true
        });
        for (r, g) in self.ring_gb.iter().enumerate() {
            let gm = &g.terms()[0].0;
            let lcm = gm.lcm(&km);
            let degree = self.pair_degree(kj, &lcm);
            self.note_pair_degree(degree);
            // product criterion, valid for a module element against a ring element
            if gm.is_coprime(&km) {
                continue;
            }
            pairs.push(Pair { degree, a: k, b: r, ring: true, lcm });
        }
        for p in &snapshot {
            self.note_pair_degree(p.degree);
        }
        pairs.extend(fresh);
    }

    fn note_pair_degree(&mut self, d: i32) {
        self.max_pair_degree = Some(self.max_pair_degree.map_or(d, |m| m.max(d)));
    }

    fn run(&mut self, mut inputs: Vec<(i32, Vect)>) {
        inputs.sort_by_key(|(d, _)| *d);
        let mut pairs: Vec<Pair> = Vec::new();
        let mut next_input = 0;
        loop {
            let pd = pairs.iter().map(|p| p.degree).min();
            let id = inputs.get(next_input).map(|(d, _)| *d);
            let d = match (pd, id) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            let mut todo: Vec<Vect> = Vec::new();
            let (now, later): (Vec<Pair>, Vec<Pair>) = pairs.drain(..).partition(|p| p.degree == d);
            pairs = later;
            for p in &now {
                todo.push(self.spoly(p));
            }
            while next_input < inputs.len() && inputs[next_input].0 == d {
                todo.push(inputs[next_input].1.clone());
                next_input += 1;
            }
            for v in todo {
                let r = self.reduce(&v);
                if !r.is_zero() {
                    self.elems.push(r.monic(self.poly));
                    let k = self.elems.len() - 1;
                    self.update(&mut pairs, k);
                }
            }
        }
    }

    /// Drops redundant leads, tail-reduces and normalizes.
    fn finish(mut self) -> Vec<Vect> {
        let leads: Vec<(u32, Monomial)> =
            self.elems.iter().map(|e| e.lead().map(|t| (t.0, t.1.clone())).expect("nonzero")).collect();
        let mut keep = Vec::new();
        for (i, (j, m)) in leads.iter().enumerate() {
            let redundant = leads.iter().enumerate().any(|(k, (jk, mk))| {
                k != i && jk == j && mk.divides(m) && (mk != m || k < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let kept: Vec<Vect> = keep.iter().map(|&i| self.elems[i].clone()).collect();
        let mut out = Vec::with_capacity(kept.len());
        for (i, e) in kept.iter().enumerate() {
            self.elems = kept.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| v.clone()).collect();
            let head = Vect(vec![e.0[0].clone()]);
            let tail = self.reduce(&Vect(e.0[1..].to_vec()));
            let mut t = head.0;
            t.extend(tail.0);
            out.push(Vect(t).monic(self.poly));
        }
        let poly = self.poly;
        let order = self.order;
        let shifts = self.shifts;
        out.sort_by(|a, b| {
            let (aj, am, _) = a.lead().expect("nonzero");
            let (bj, bm, _) = b.lead().expect("nonzero");
            let da = shifts[*aj as usize] + am.degree() as i32;
            let db = shifts[*bj as usize] + bm.degree() as i32;
            da.cmp(&db).then_with(|| order.cmp(poly, (*bj, bm), (*aj, am)))
        });
        out
    }
}

fn check_vectors(gens: &[FreeVector], shifts: &[i32], poly: &PolyRing) -> Result<()> {
    for g in gens {
        if g.rank() != shifts.len() {
            return Err(Error::AmbientMismatch(format!("vector of rank {} in a free module of rank {}", g.rank(), shifts.len())));
        }
        if !g.is_homogeneous(shifts) {
            let parts: Vec<String> = g.entries.iter().map(|f| poly.format(f)).collect();
            return Err(Error::NotHomogeneous(format!("[{}]", parts.join(", "))));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the submodule generated by `gens` and
/// `I * e_j`, over the polynomial ring of `ring`.
pub fn buchberger(gens: &[FreeVector], shifts: &[i32], ring: &GradedRing) -> Result<ModuleGB> {
    buchberger_in(gens, shifts, ring, TermOrder::PositionOverTerm)
}

/// [`buchberger`] for an arbitrary term order on the free module.
pub fn buchberger_in(gens: &[FreeVector], shifts: &[i32], ring: &GradedRing, order: TermOrder) -> Result<ModuleGB> {
    let poly = ring.poly();
    check_vectors(gens, shifts, poly)?;
    if let TermOrder::Schreyer(leads) = &order {
        if leads.len() != shifts.len() {
            return Err(Error::AmbientMismatch(format!("order for rank {} on a free module of rank {}", leads.len(), shifts.len())));
        }
    }
    let mut eng = Engine { poly, order: &order, shifts, ring_gb: ring.defining_gb(), elems: Vec::new(), max_pair_degree: None };
    let inputs: Vec<(i32, Vect)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.degree(shifts).expect("homogeneous"), Vect::from_free(g, poly, &order)))
        .collect();
    let gen_max = inputs.iter().map(|(d, _)| *d).max();
    eng.run(inputs);
    let pair_max = eng.max_pair_degree;
    let elems = eng.finish();
    let bound = match (gen_max, pair_max) {
        (None, _) => None,
        (Some(a), None) => Some(a),
        (Some(a), Some(b)) => Some(a.max(b)),
    };
    Ok(ModuleGB {
        shifts: shifts.to_vec(),
        generators: elems.iter().map(|e| e.to_free(shifts.len())).collect(),
        reduced: true,
        elems,
        ring_gb: ring.defining_gb().to_vec(),
        poly: poly.clone(),
        order: order.clone(),
        syzygy_degree_bound: bound,
    })
}

impl ModuleGB {
    /// Every minimal syzygy over `R` of the original generators has degree at
    /// most this (Schreyer: syzygies of a Gröbner basis are generated by its
    /// S-pairs, and the original generators add their own degrees).
    pub fn syzygy_degree_bound(&self) -> Option<i32> {
        self.syzygy_degree_bound
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Leading component and monomial of each basis element.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems.iter().map(|e| e.lead().map(|t| (t.0 as usize, t.1.clone())).expect("nonzero")).collect()
    }

    fn engine(&self) -> Engine<'_> {
        Engine { poly: &self.poly, order: &self.order, shifts: &self.shifts, ring_gb: &self.ring_gb, elems: self.elems.clone(), max_pair_degree: None }
    }

    /// Re-checks Buchberger's criterion on every pair sharing a component.
    pub fn verify(&self) -> bool {
        let eng = self.engine();
        for a in 0..self.elems.len() {
            let (ja, ma, _) = self.elems[a].lead().expect("nonzero");
            for b in 0..a {
                let (jb, mb, _) = self.elems[b].lead().expect("nonzero");
                if ja == jb {
                    let p = Pair { degree: 0, a, b, ring: false, lcm: ma.lcm(mb) };
                    if !eng.reduce(&eng.spoly(&p)).is_zero() {
                        return false;
                    }
                }
            }
            for (r, g) in self.ring_gb.iter().enumerate() {
                let p = Pair { degree: 0, a, b: r, ring: true, lcm: ma.lcm(&g.terms()[0].0) };
                if !eng.reduce(&eng.spoly(&p)).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Remainder of `v` modulo `gb` and the defining ideal.
pub fn normal_form(v: &FreeVector, gb: &ModuleGB) -> Result<FreeVector> {
    if v.rank() != gb.rank() {
        return Err(Error::AmbientMismatch(format!("vector of rank {} against a basis of rank {}", v.rank(), gb.rank())));
    }
    Ok(gb.engine().reduce(&Vect::from_free(v, &gb.poly, &gb.order)).to_free(gb.rank()))
}

/// Generators of the syzygy module over `R` of `gens`, computed by
/// elimination: a basis of the module spanned by `(g_i, e_i)` in
/// `G ⊕ R^m`, position over term with `G` first, meets `0 ⊕ R^m` in the
/// syzygies.
pub fn syzygy_basis(gens: &[FreeVector], shifts: &[i32], ring: &GradedRing) -> Result<Vec<FreeVector>> {
    let poly = ring.poly();
    check_vectors(gens, shifts, poly)?;
    let r = shifts.len();
    let m = gens.len();
    let mut ext_shifts = shifts.to_vec();
    for g in gens {
        ext_shifts.push(g.degree(shifts).unwrap_or(0));
    }
    let mut ext = Vec::with_capacity(m);
    for (i, g) in gens.iter().enumerate() {
        let mut entries = g.entries.clone();
        entries.extend((0..m).map(|k| if k == i { poly.one() } else { Polynomial::zero() }));
        ext.push(FreeVector::new(entries));
    }
    let gb = buchberger(&ext, &ext_shifts, ring)?;
    let mut out = Vec::new();
    for e in &gb.elems {
        if e.lead().expect("nonzero").0 as usize >= r {
            let full = e.to_free(r + m);
            out.push(FreeVector::new(full.entries[r..].to_vec()));
        }
    }
    Ok(out)
}

/// Reduced, monic Gröbner basis of an ideal of `S`.
pub fn ideal_groebner_basis(poly: &PolyRing, gens: &[Polynomial]) -> Vec<Polynomial> {
    let shifts = [0];
    let mut eng = Engine { poly, order: &TermOrder::PositionOverTerm, shifts: &shifts, ring_gb: &[], elems: Vec::new(), max_pair_degree: None };
    let inputs: Vec<(i32, Vect)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.max_degree().unwrap_or(0) as i32, Vect::poly_in(g, 0)))
        .collect();
    eng.run(inputs);
    eng.finish().into_iter().map(|v| v.to_free(1).entries.pop().expect("rank one")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(vars: &[&str], rels: &[&str]) -> GradedRing {
        GradedRing::parse(PrimeField::default(), vars, rels).unwrap()
    }

    fn vecs(r: &GradedRing, rows: &[&[&str]]) -> Vec<FreeVector> {
        rows.iter().map(|row| FreeVector::new(row.iter().map(|s| r.poly().parse(s).unwrap()).collect())).collect()
    }

    fn fmt(r: &GradedRing, v: &FreeVector) -> Vec<String> {
        v.entries.iter().map(|f| r.format(f)).collect()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"], &[]);
        let gb = buchberger(&vecs(&r, &[&["x*y"]]), &[0], &r).unwrap();
        assert!(normal_form(&vecs(&r, &[&["x*y"]])[0], &gb).unwrap().is_zero());
        assert_eq!(fmt(&r, &normal_form(&vecs(&r, &[&["x^2 + x*y"]])[0], &gb).unwrap()), ["x^2"]);

        let r = ring(&["x1", "x2", "y1", "y2"], &[]);
        let gb = buchberger(&vecs(&r, &[&["x1*y2 - x2*y1"]]), &[0], &r).unwrap();
        let nf = normal_form(&vecs(&r, &[&["x1*y2"]])[0], &gb).unwrap();
        // degrevlex with x1 > x2 > y1 > y2: the lead is x2*y1
        assert_eq!(gb.leading_terms()[0].1, r.poly().parse("x2*y1").unwrap().terms()[0].0);
        assert_eq!(fmt(&r, &nf), ["x1*y2"]);
        let nf = normal_form(&vecs(&r, &[&["x2*y1"]])[0], &gb).unwrap();
        assert_eq!(fmt(&r, &nf), ["x1*y2"]);
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(&["x", "y"], &[]);
        let gb = buchberger(&vecs(&r, &[&["x^2"], &["x*y + y^2"]]), &[0], &r).unwrap();
        let got: Vec<String> = gb.generators.iter().map(|v| r.format(&v.entries[0])).collect();
        assert_eq!(got, ["x^2", "x*y + y^2", "y^3"]);
        assert!(gb.verify());

        let r = ring(&["x1", "x2", "x3", "y1", "y2", "y3"], &[]);
        let minors = vecs(&r, &[&["x1*y2 - x2*y1"], &["x1*y3 - x3*y1"], &["x2*y3 - x3*y2"]]);
        let gb = buchberger(&minors, &[0], &r).unwrap();
        assert_eq!(gb.generators.len(), 3);
        assert!(gb.verify());
        for g in &gb.generators {
            let g = r.poly().monic(&g.entries[0]);
            assert!(minors.iter().any(|m| r.poly().monic(&m.entries[0]) == g));
        }
    }

    #[test]
    fn syzygy_examples() {
        let r = ring(&["x", "y"], &[]);
        let s = syzygy_basis(&vecs(&r, &[&["x"], &["y"]]), &[0], &r).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(fmt(&r, &s[0]), ["y", "-x"]);

        let r = ring(&["x", "y"], &["x*y"]);
        let s = syzygy_basis(&vecs(&r, &[&["x"], &["y"]]), &[0], &r).unwrap();
        let mut got: Vec<Vec<String>> = s.iter().map(|v| fmt(&r, v)).collect();
        got.sort();
        assert_eq!(got, [["0", "x"], ["y", "0"]]);

        let r = ring(&["x", "y", "z", "t"], &[]);
        let s = syzygy_basis(&vecs(&r, &[&["x*y"], &["z*t"]]), &[0], &r).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(fmt(&r, &s[0]), ["z*t", "-x*y"]);
    }

    #[test]
    fn module_basis_over_quotient() {
        let r = ring(&["x", "y"], &["x*y"]);
        let g = vecs(&r, &[&["x", "y"], &["y", "0"]]);
        let gb = buchberger(&g, &[0, 0], &r).unwrap();
        assert!(gb.verify());
        for v in &g {
            assert!(normal_form(v, &gb).unwrap().is_zero());
        }
        let w = FreeVector::new(vec![r.poly().parse("x^2").unwrap(), Polynomial::zero()]);
        // x*(x,y) = (x^2, xy) = (x^2, 0) modulo xy
        assert!(normal_form(&w, &gb).unwrap().is_zero());
    }

    #[test]
    fn rejects_mismatched_and_inhomogeneous() {
        let r = ring(&["x", "y"], &[]);
        assert!(matches!(buchberger(&vecs(&r, &[&["x", "y"]]), &[0], &r), Err(Error::AmbientMismatch(_))));
        assert!(matches!(buchberger(&vecs(&r, &[&["x", "y^2"]]), &[0, 0], &r), Err(Error::NotHomogeneous(_))));
        assert!(buchberger(&vecs(&r, &[&["x", "y^2"]]), &[0, -1], &r).is_ok());
    }
}
