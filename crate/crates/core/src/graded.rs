//! Graded pieces of free modules as coordinate spaces, and the degree-wise
//! kernel and minimal-generator computations everything else is built on.

use std::sync::Arc;

use crate::error::Result;
use crate::groebner::{self, FreeVector, ModuleGB, TermOrder};
use crate::hilbert;
use crate::linalg::{self, Echelon, SparseVec};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{GradedRing, StdBasis, TablesGuard};

/// Coordinates of `(⊕_c R(-s_c))_d`: the standard bases of `R_{d - s_c}`
/// laid out one after another.
#[derive(Clone, Debug)]
pub struct Piece {
    pub degree: i32,
    pub offsets: Vec<usize>,
    pub bases: Vec<Option<Arc<StdBasis>>>,
    pub dim: usize,
}

impl Piece {
    pub(crate) fn new(t: &mut TablesGuard<'_>, shifts: &[i32], d: i32) -> Piece {
        let mut offsets = Vec::with_capacity(shifts.len());
        let mut bases = Vec::with_capacity(shifts.len());
        let mut dim = 0;
        for &s in shifts {
            offsets.push(dim);
            if d - s >= 0 {
                let b = t.basis((d - s) as u32);
                dim += b.len();
                bases.push(Some(b));
            } else {
                bases.push(None);
            }
        }
        Piece { degree: d, offsets, bases, dim }
    }

    pub fn component_dim(&self, c: usize) -> usize {
        self.bases[c].as_ref().map_or(0, |b| b.len())
    }

    /// Component and monomial of a coordinate.
    pub fn locate(&self, idx: usize) -> (usize, &Monomial) {
        let c = match self.offsets.binary_search(&idx) {
            Ok(mut c) => {
                // skip empty components sharing the offset
                while self.component_dim(c) == 0 {
                    c += 1;
                }
                c
            }
            Err(c) => c - 1,
        };
        let b = self.bases[c].as_ref().expect("nonempty component");
        (c, &b.monomials[idx - self.offsets[c]])
    }
}

/// Collects `(index, value)` pairs into a sorted sparse vector.
pub(crate) fn collect_sparse(t: &TablesGuard<'_>, mut raw: Vec<(u32, u32)>) -> SparseVec {
    let fld = t.field();
    raw.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(raw.len());
    for (i, x) in raw {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = fld.add(last.1, x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// Coordinates of `mu * v` in `piece`, where `v` is homogeneous and
/// `deg(mu) + deg(v) = piece.degree`.
pub(crate) fn coords_times(t: &mut TablesGuard<'_>, piece: &Piece, v: &FreeVector, mu: Option<&Monomial>) -> SparseVec {
    let fld = t.field();
    let mut raw = Vec::new();
    for (c, f) in v.entries.iter().enumerate() {
        if f.is_zero() || piece.bases[c].is_none() {
            continue;
        }
        let off = piece.offsets[c] as u32;
        for (m, a) in f.terms() {
            let mm = match mu {
                Some(u) => m.mul(u),
                None => m.clone(),
            };
            let nf = t.nf(&mm);
            for &(i, x) in nf.iter() {
                raw.push((off + i, fld.mul(x, *a)));
            }
        }
    }
    collect_sparse(t, raw)
}

pub(crate) fn from_coords(ring: &GradedRing, piece: &Piece, v: &[(u32, u32)]) -> FreeVector {
    let mut parts: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); piece.offsets.len()];
    for &(i, x) in v {
        let (c, m) = piece.locate(i as usize);
        parts[c].push((m.clone(), x));
    }
    FreeVector::new(parts.into_iter().map(|p| ring.poly().from_terms(p)).collect())
}

/// Matrix of `⊕ R(-a_i) -> ⊕ R(-b_c)`, `e_i -> cols[i]`, in degree `d`: one
/// column per coordinate of the source piece.
pub(crate) fn map_columns(t: &mut TablesGuard<'_>, src: &Piece, cols: &[FreeVector], tgt: &Piece) -> Vec<SparseVec> {
    let mut out = Vec::with_capacity(src.dim);
    for (i, col) in cols.iter().enumerate() {
        let Some(b) = src.bases[i].clone() else { continue };
        for mu in &b.monomials {
            out.push(coords_times(t, tgt, col, Some(mu)));
        }
    }
    out
}

/// Span of all `mu * g` of degree `d` for homogeneous `g` of degree
/// `degrees[k]`.
pub(crate) fn span_in_degree(
    t: &mut TablesGuard<'_>,
    piece: &Piece,
    gens: &[FreeVector],
    degrees: &[i32],
) -> Echelon {
    let mut e = Echelon::new(t.field(), piece.dim);
    for (g, &dg) in gens.iter().zip(degrees) {
        if dg > piece.degree || g.is_zero() {
            continue;
        }
        let b = t.basis((piece.degree - dg) as u32);
        for mu in &b.monomials {
            let v = coords_times(t, piece, g, Some(mu));
            e.insert(v);
        }
    }
    e
}

/// `x_v * (vector in piece a)` expressed in piece `b = a + 1`.
pub(crate) fn times_variable(t: &mut TablesGuard<'_>, a: &Piece, b: &Piece, v: &[(u32, u32)], var: usize) -> SparseVec {
    let fld = t.field();
    let mut raw = Vec::new();
    for &(i, x) in v {
        let (c, m) = a.locate(i as usize);
        let m = m.mul_var(var);
        let off = b.offsets[c] as u32;
        let nf = t.nf(&m);
        for &(j, y) in nf.iter() {
            raw.push((off + j, fld.mul(x, y)));
        }
    }
    collect_sparse(t, raw)
}

pub(crate) fn degrees_of(vs: &[FreeVector], shifts: &[i32]) -> Vec<i32> {
    vs.iter().map(|v| v.degree(shifts).unwrap_or(i32::MIN)).collect()
}

/// An upper bound for the degrees of minimal generators of the kernel of
/// `⊕ R(-src_i) -> (⊕ R(-tgt_c)) / <modulo>`, `e_i -> cols[i]`.
pub fn kernel_degree_bound(ring: &GradedRing, src: &[i32], cols: &[FreeVector], tgt: &[i32], modulo: &[FreeVector]) -> Result<Option<i32>> {
    let Some(&max_src) = src.iter().max() else {
        return Ok(None);
    };
    if let Some(top) = ring.top_degree() {
        return Ok(Some(max_src + top as i32));
    }
    Ok(Some(match image_basis(ring, cols, tgt, modulo, TermOrder::PositionOverTerm)? {
        Some(gb) => gb.syzygy_degree_bound().map_or(max_src, |b| b.max(max_src)),
        None => max_src,
    }))
}

fn image_basis(ring: &GradedRing, cols: &[FreeVector], tgt: &[i32], modulo: &[FreeVector], order: TermOrder) -> Result<Option<ModuleGB>> {
    let mut gens: Vec<FreeVector> = cols.iter().filter(|c| !c.is_zero()).cloned().collect();
    gens.extend(modulo.iter().filter(|c| !c.is_zero()).cloned());
    if gens.is_empty() {
        return Ok(None);
    }
    Ok(Some(groebner::buchberger_in(&gens, tgt, ring, order)?))
}

/// Minimal homogeneous generators of the kernel of
/// `⊕ R(-src_i) -> (⊕ R(-tgt_c)) / <modulo>`, `e_i -> cols[i]`, sorted by
/// degree. Each degree contributes the rows of the reduced echelon basis of
/// the kernel piece that are independent of what the lower degrees already
/// generate.
pub fn kernel_generators(ring: &GradedRing, src: &[i32], cols: &[FreeVector], tgt: &[i32], modulo: &[FreeVector]) -> Result<Vec<FreeVector>> {
    kernel_generators_in(ring, src, cols, tgt, modulo, TermOrder::PositionOverTerm)
}

/// [`kernel_generators`] with the Gröbner computations on the target done in
/// `tgt_order`. Over rings of infinite length the search stops as soon as
/// the generators found have the Hilbert series of the kernel.
pub fn kernel_generators_in(
    ring: &GradedRing,
    src: &[i32],
    cols: &[FreeVector],
    tgt: &[i32],
    modulo: &[FreeVector],
    tgt_order: TermOrder,
) -> Result<Vec<FreeVector>> {
    let Some(&max_src) = src.iter().max() else {
        return Ok(Vec::new());
    };
    if let Some(top) = ring.top_degree() {
        return Ok(kernel_generators_upto(ring, src, cols, tgt, modulo, max_src + top as i32, None));
    }
    let Some(gb) = image_basis(ring, cols, tgt, modulo, tgt_order)? else {
        return Ok(kernel_generators_upto(ring, src, cols, tgt, modulo, max_src, None));
    };
    let bound = gb.syzygy_degree_bound().map_or(max_src, |b| b.max(max_src));
    // the kernel has the Hilbert series of src minus that of the image
    let ambient = if modulo.iter().all(|v| v.is_zero()) {
        hilbert::free(ring, tgt)
    } else {
        hilbert::quotient(ring, tgt, &groebner::buchberger(modulo, tgt, ring)?)
    };
    let image = hilbert::sub(&ambient, &hilbert::quotient(ring, tgt, &gb));
    Ok(kernel_generators_upto(ring, src, cols, tgt, modulo, bound, Some(&image)))
}

/// Whether `found` already spans a submodule of `src` whose cokernel has
/// the Hilbert series `image`.
fn spans_kernel(ring: &GradedRing, src: &[i32], cols: &[FreeVector], found: &[FreeVector], image: &hilbert::Series) -> bool {
    let order = TermOrder::schreyer(cols, ring.poly());
    match groebner::buchberger_in(found, src, ring, order) {
        Ok(gb) => hilbert::quotient(ring, src, &gb) == *image,
        Err(_) => false,
    }
}

pub(crate) fn kernel_generators_upto(
    ring: &GradedRing,
    src: &[i32],
    cols: &[FreeVector],
    tgt: &[i32],
    modulo: &[FreeVector],
    bound: i32,
    image: Option<&hilbert::Series>,
) -> Vec<FreeVector> {
    let Some(&lo) = src.iter().min() else {
        return Vec::new();
    };
    if image.is_some_and(|im| hilbert::free(ring, src) == *im) {
        return Vec::new();
    }
    let n = ring.nvars();
    let fld = ring.field();
    let mod_deg = degrees_of(modulo, tgt);
    let mut out = Vec::new();
    let mut t = ring.tables();
    let mut prev: Option<(Piece, Vec<SparseVec>)> = None;
    for d in lo..=bound {
        let sp = Piece::new(&mut t, src, d);
        let tp = Piece::new(&mut t, tgt, d);
        let mut columns = map_columns(&mut t, &sp, cols, &tp);
        let na = columns.len();
        for (g, &dg) in modulo.iter().zip(&mod_deg) {
            if dg > d || g.is_zero() {
                continue;
            }
            let b = t.basis((d - dg) as u32);
            for mu in &b.monomials {
                columns.push(coords_times(&mut t, &tp, g, Some(mu)));
            }
        }
        let ker = linalg::kernel(fld, tp.dim, &columns);
        let mut kd = Echelon::new(fld, sp.dim);
        for v in ker {
            let proj: SparseVec = v.into_iter().take_while(|e| (e.0 as usize) < na).collect();
            kd.insert(proj);
        }
        kd.to_rref();
        let mut lower = Echelon::new(fld, sp.dim);
        if let Some((pp, basis)) = &prev {
            for v in basis {
                for var in 0..n {
                    lower.insert(times_variable(&mut t, pp, &sp, v, var));
                }
            }
        }
        let before = out.len();
        for row in kd.rows() {
            if lower.insert(row.clone()) {
                out.push(from_coords(ring, &sp, row));
            }
        }
        prev = Some((sp, kd.into_rows()));
        if let Some(image) = image {
            if out.len() > before && d < bound && spans_kernel(ring, src, cols, &out, image) {
                break;
            }
        }
    }
    out
}

/// Indices of a minimal generating subset of `(gens + K) / K`, where `K` is
/// spanned by `rels`: greedy in input order within each degree.
pub fn minimal_subset(ring: &GradedRing, shifts: &[i32], gens: &[FreeVector], rels: &[FreeVector]) -> Vec<usize> {
    let degs = degrees_of(gens, shifts);
    let rel_degs = degrees_of(rels, shifts);
    let mut order: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    order.sort_by_key(|&i| degs[i]);
    let mut chosen = Vec::new();
    let mut t = ring.tables();
    let mut i = 0;
    while i < order.len() {
        let d = degs[order[i]];
        let piece = Piece::new(&mut t, shifts, d);
        let lower: Vec<usize> = order[..i].to_vec();
        let lower_gens: Vec<FreeVector> = lower.iter().map(|&k| gens[k].clone()).collect();
        let lower_degs: Vec<i32> = lower.iter().map(|&k| degs[k]).collect();
        let mut span = span_in_degree(&mut t, &piece, &lower_gens, &lower_degs);
        let kspan = span_in_degree(&mut t, &piece, rels, &rel_degs);
        for r in kspan.into_rows() {
            span.insert(r);
        }
        while i < order.len() && degs[order[i]] == d {
            let k = order[i];
            let v = coords_times(&mut t, &piece, &gens[k], None);
            if span.insert(v) {
                chosen.push(k);
            }
            i += 1;
        }
    }
    chosen
}

/// Some `a` with `sum_i a_i * cols[i] ≡ target` modulo `<modulo>`, where
/// `target` is homogeneous. The zero vector lifts to zero.
pub fn solve_lift(
    ring: &GradedRing,
    src: &[i32],
    cols: &[FreeVector],
    tgt: &[i32],
    modulo: &[FreeVector],
    target: &FreeVector,
) -> Option<FreeVector> {
    let Some(d) = target.degree(tgt) else {
        return Some(FreeVector::zero(src.len()));
    };
    let mut t = ring.tables();
    let sp = Piece::new(&mut t, src, d);
    let tp = Piece::new(&mut t, tgt, d);
    let mut columns = map_columns(&mut t, &sp, cols, &tp);
    let na = columns.len();
    let mod_deg = degrees_of(modulo, tgt);
    for (g, &dg) in modulo.iter().zip(&mod_deg) {
        if dg > d || g.is_zero() {
            continue;
        }
        let b = t.basis((d - dg) as u32);
        for mu in &b.monomials {
            columns.push(coords_times(&mut t, &tp, g, Some(mu)));
        }
    }
    let b = coords_times(&mut t, &tp, target, None);
    let x = linalg::solve(t.field(), tp.dim, &columns, &b)?;
    let proj: SparseVec = x.into_iter().take_while(|e| (e.0 as usize) < na).collect();
    drop(t);
    Some(from_coords(ring, &sp, &proj))
}

/// Normal form of every entry modulo the defining ideal.
pub fn reduce_vector(ring: &GradedRing, v: &FreeVector) -> FreeVector {
    FreeVector::new(v.entries.iter().map(|f| ring.reduce(f)).collect())
}

/// `sum_i a_i * cols[i]`, reduced in `R`.
pub fn apply(ring: &GradedRing, cols: &[FreeVector], rank: usize, a: &FreeVector) -> FreeVector {
    let poly = ring.poly();
    let mut acc = vec![Polynomial::zero(); rank];
    for (ai, col) in a.entries.iter().zip(cols) {
        if ai.is_zero() {
            continue;
        }
        for (c, f) in col.entries.iter().enumerate() {
            if !f.is_zero() {
                acc[c] = poly.add(&acc[c], &poly.mul(ai, f));
            }
        }
    }
    reduce_vector(ring, &FreeVector::new(acc))
}
