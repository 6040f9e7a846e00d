//! Linear parts of minimal resolutions, the linearity defect, and the
//! Tor-map criterion over `R/m^s` used to cross-check it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{self, Piece};
use crate::groebner::{FreeVector, TermOrder};
use crate::linalg::{self, Echelon, SparseVec};
use crate::module::GradedModule;
use crate::resolution::{resolve, MinimalResolution, Status};
use crate::ring::{GradedRing, TablesGuard};

pub const DEFAULT_SMAX: u32 = 4;
pub const SMAX_CAP: u32 = 8;

/// The resolution with every differential entry of degree other than one
/// replaced by zero.
#[derive(Clone, Debug)]
pub struct LinearPartComplex {
    ring: GradedRing,
    shifts: Vec<Vec<i32>>,
    maps: Vec<Vec<FreeVector>>,
}

pub fn linear_part(res: &MinimalResolution) -> Result<LinearPartComplex> {
    if !res.is_minimal() {
        return Err(Error::Invalid("linear part of a non-minimal resolution".into()));
    }
    let shifts: Vec<Vec<i32>> = (0..res.len()).map(|i| res.shifts(i).to_vec()).collect();
    let mut maps = Vec::new();
    for i in 1..res.len() {
        let tgt = res.shifts(i - 1);
        let cols = res
            .differential(i)
            .iter()
            .zip(res.shifts(i))
            .map(|(c, &s)| {
                FreeVector::new(
                    c.entries
                        .iter()
                        .zip(tgt)
                        .map(|(f, &t)| if s - t == 1 { f.clone() } else { crate::poly::Polynomial::zero() })
                        .collect(),
                )
            })
            .collect();
        maps.push(cols);
    }
    let lin = LinearPartComplex { ring: res.ring().clone(), shifts, maps };
    if !lin.is_complex() {
        return Err(Error::Invalid("linear part is not a complex".into()));
    }
    Ok(lin)
}

impl LinearPartComplex {
    pub fn shifts(&self, i: usize) -> &[i32] {
        self.shifts.get(i).map_or(&[], |s| s.as_slice())
    }

    pub fn differential(&self, i: usize) -> &[FreeVector] {
        if i >= 1 && i <= self.maps.len() {
            &self.maps[i - 1]
        } else {
            &[]
        }
    }

    pub fn is_complex(&self) -> bool {
        for i in 1..self.maps.len() {
            for col in &self.maps[i] {
                if !graded::apply(&self.ring, &self.maps[i - 1], self.shifts[i - 1].len(), col).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every entry of every differential is a linear form.
    pub fn all_entries_linear(&self) -> bool {
        self.maps.iter().all(|m| m.iter().all(|c| c.entries.iter().all(|f| f.is_zero() || f.homogeneous_degree() == Some(1))))
    }

    fn rank_in_degree(&self, t: &mut TablesGuard<'_>, i: usize, d: i32) -> usize {
        if i == 0 || i > self.maps.len() {
            return 0;
        }
        let sp = Piece::new(t, &self.shifts[i], d);
        let tp = Piece::new(t, &self.shifts[i - 1], d);
        let cols = graded::map_columns(t, &sp, &self.maps[i - 1], &tp);
        linalg::rank(t.field(), tp.dim, &cols)
    }

    /// `dim_k H_i(lin F)_d`.
    pub fn homology_dim(&self, i: usize, d: i32) -> usize {
        let mut t = self.ring.tables();
        let dim = Piece::new(&mut t, self.shifts(i), d).dim;
        dim - self.rank_in_degree(&mut t, i, d) - self.rank_in_degree(&mut t, i + 1, d)
    }

    /// Whether `H_i(lin F) != 0`. The homology is generated in the degrees
    /// of the kernel generators of the `i`-th differential, so only those
    /// degrees are inspected.
    pub fn homology_nonzero(&self, i: usize) -> Result<bool> {
        if self.shifts(i).is_empty() {
            return Ok(false);
        }
        let tgt = if i == 0 { &[][..] } else { self.shifts(i - 1) };
        let cols = if i == 0 || self.differential(i).is_empty() {
            vec![FreeVector::zero(tgt.len()); self.shifts(i).len()]
        } else {
            self.differential(i).to_vec()
        };
        let order = if i >= 2 && !self.differential(i - 1).is_empty() {
            TermOrder::schreyer(self.differential(i - 1), self.ring.poly())
        } else {
            TermOrder::PositionOverTerm
        };
        let ker = graded::kernel_generators_in(&self.ring, self.shifts(i), &cols, tgt, &[], order)?;
        let mut degs: Vec<i32> = ker.iter().filter_map(|v| v.degree(self.shifts(i))).collect();
        degs.dedup();
        Ok(degs.into_iter().any(|d| self.homology_dim(i, d) > 0))
    }
}

/// Why an exact value is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "index")]
pub enum Certificate {
    ZeroModule,
    Terminated,
    /// `R` is Koszul and `m` kills the syzygy module with this index.
    SyzygyKilledByMaximalIdeal(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LindResult {
    pub nonzero_homology_indices: Vec<usize>,
    pub value: usize,
    pub status: Status,
    pub window: usize,
    pub certificate: Option<Certificate>,
}

impl LindResult {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// The value when certified, `None` otherwise.
    pub fn exact(&self) -> Option<usize> {
        self.is_exact().then_some(self.value)
    }

    /// The largest nonzero index not exceeding `h`.
    pub fn windowed(&self, h: usize) -> usize {
        self.nonzero_homology_indices.iter().copied().filter(|&i| i <= h).max().unwrap_or(0)
    }
}

/// Whether the ring is certified Koszul: a polynomial ring, or one whose
/// defining ideal has a Gröbner basis of degree at most two.
pub fn ring_is_certified_koszul(ring: &GradedRing) -> bool {
    ring.is_polynomial_ring() || ring.has_quadratic_gb()
}

/// Reads `lind` off a resolution computed through `h + 1`.
pub fn lind_from_resolution(res: &MinimalResolution, h: usize) -> Result<LindResult> {
    if res.is_empty() {
        return Ok(LindResult {
            nonzero_homology_indices: Vec::new(),
            value: 0,
            status: Status::Exact,
            window: h,
            certificate: Some(Certificate::ZeroModule),
        });
    }
    let lin = linear_part(res)?;
    let top = if res.terminated() { (res.len() - 1).max(h) } else { h.min(res.computed_to().saturating_sub(1)) };
    let mut nz = Vec::new();
    for i in 1..=top {
        if lin.homology_nonzero(i)? {
            nz.push(i);
        }
    }
    let value = nz.last().copied().unwrap_or(0);
    let mut certificate = None;
    if res.terminated() {
        certificate = Some(Certificate::Terminated);
    } else if ring_is_certified_koszul(res.ring()) {
        certificate = (0..=top.min(res.len() - 1)).find(|&i| res.syzygy_killed_by_maximal_ideal(i)).map(Certificate::SyzygyKilledByMaximalIdeal);
    }
    let status = if certificate.is_some() {
        Status::Exact
    } else if nz.is_empty() {
        Status::ZeroUpToWindow
    } else {
        Status::AtLeast
    };
    Ok(LindResult { nonzero_homology_indices: nz, value, status, window: h, certificate })
}

/// `lind_R M` through homological degree `h`.
pub fn linearity_defect(m: &GradedModule, h: usize) -> Result<LindResult> {
    let res = resolve(m, h + 1)?;
    lind_from_resolution(&res, h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegaMap {
    pub i: usize,
    pub s: u32,
    pub zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorDim {
    pub i: usize,
    pub s: u32,
    pub j: i32,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegaReport {
    pub maps: Vec<SegaMap>,
    pub bound: usize,
    pub s_max: u32,
    pub window: usize,
    pub tor_dims: Vec<TorDim>,
}

impl SegaReport {
    pub fn map_is_zero(&self, i: usize, s: u32) -> Option<bool> {
        self.maps.iter().find(|m| m.i == i && m.s == s).map(|m| m.zero)
    }

    /// `dim_k Tor_i(R/m^s, M)` summed over internal degrees.
    pub fn tor_dim(&self, i: usize, s: u32) -> usize {
        self.tor_dims.iter().filter(|t| t.i == i && t.s == s).map(|t| t.dim).sum()
    }

    pub fn tor_dim_in_degree(&self, i: usize, s: u32, j: i32) -> usize {
        self.tor_dims.iter().filter(|t| t.i == i && t.s == s && t.j == j).map(|t| t.dim).sum()
    }
}

/// `(F_i ⊗ R/m^s)_j`: components `c` with `0 <= j - shift_c < s`.
pub(crate) fn truncated_piece(t: &mut TablesGuard<'_>, shifts: &[i32], j: i32, s: u32) -> Piece {
    let mut p = Piece::new(t, shifts, j);
    let mut dim = 0;
    for (c, &sh) in shifts.iter().enumerate() {
        p.offsets[c] = dim;
        if j - sh >= s as i32 {
            p.bases[c] = None;
        }
        dim += p.component_dim(c);
    }
    p.dim = dim;
    p
}

/// Re-indexes a vector of piece `a` into piece `b`, dropping components `b`
/// lacks.
fn project(a: &Piece, b: &Piece, v: &[(u32, u32)]) -> SparseVec {
    let mut out = Vec::new();
    for &(i, x) in v {
        let (c, _) = a.locate(i as usize);
        if b.bases[c].is_some() {
            out.push(((i as usize - a.offsets[c] + b.offsets[c]) as u32, x));
        }
    }
    out
}

pub(crate) struct TorPiece {
    pub(crate) cycles: Vec<SparseVec>,
    pub(crate) boundaries: Echelon,
    pub(crate) piece: Piece,
}

pub(crate) fn tor_piece(t: &mut TablesGuard<'_>, res: &MinimalResolution, i: usize, j: i32, s: u32) -> TorPiece {
    let fld = t.field();
    let src = truncated_piece(t, res.shifts(i), j, s);
    let cycles = if i == 0 {
        let mut e = Echelon::new(fld, src.dim);
        for k in 0..src.dim {
            e.insert(vec![(k as u32, 1)]);
        }
        e.into_rows()
    } else {
        let tgt = truncated_piece(t, res.shifts(i - 1), j, s);
        let cols = graded::map_columns(t, &src, res.differential(i), &tgt);
        linalg::kernel(fld, tgt.dim, &cols)
    };
    let up = truncated_piece(t, res.shifts(i + 1), j, s);
    let bcols = graded::map_columns(t, &up, res.differential(i + 1), &src);
    let boundaries = Echelon::from_rows(fld, src.dim, bcols);
    TorPiece { cycles, boundaries, piece: src }
}

/// The maps `Tor_i(R/m^{s+1}, M) -> Tor_i(R/m^s, M)` for `1 <= i <= h`,
/// `1 <= s <= s_max`, from a resolution computed through `h + 1`.
pub fn sega_from_resolution(res: &MinimalResolution, h: usize, s_max: u32) -> SegaReport {
    let mut maps = Vec::new();
    let mut tor_dims = Vec::new();
    if res.is_empty() {
        return SegaReport { maps, bound: 0, s_max, window: h, tor_dims };
    }
    let ring = res.ring().clone();
    let mut t = ring.tables();
    for i in 0..=h.min(res.len().saturating_sub(1)) {
        let shifts = res.shifts(i);
        let (Some(&lo), Some(&hi)) = (shifts.iter().min(), shifts.iter().max()) else { continue };
        for s in 1..=s_max + 1 {
            for j in lo..hi + s as i32 {
                let tp = tor_piece(&mut t, res, i, j, s);
                let dim = tp.cycles.len() - tp.boundaries.rank();
                if dim > 0 {
                    tor_dims.push(TorDim { i, s, j, dim });
                }
            }
        }
        if i == 0 {
            continue;
        }
        for s in 1..=s_max {
            let mut zero = true;
            for j in lo..=hi + s as i32 {
                let big = tor_piece(&mut t, res, i, j, s + 1);
                let small = tor_piece(&mut t, res, i, j, s);
                if big.cycles.iter().any(|z| !small.boundaries.contains(&project(&big.piece, &small.piece, z))) {
                    zero = false;
                    break;
                }
            }
            maps.push(SegaMap { i, s, zero });
        }
    }
    let bound = maps.iter().filter(|m| !m.zero).map(|m| m.i).max().unwrap_or(0);
    SegaReport { maps, bound, s_max, window: h, tor_dims }
}

pub fn sega_check(m: &GradedModule, h: usize, s_max: u32) -> Result<SegaReport> {
    let res = resolve(m, h + 1)?;
    Ok(sega_from_resolution(&res, h, s_max))
}

/// `lind` with the Tor-map criterion attached and compared.
#[derive(Clone, Debug, Serialize)]
pub struct LindAnalysis {
    pub lind: LindResult,
    pub sega: SegaReport,
    /// Window suprema of both methods coincide.
    pub agree: bool,
}

pub fn analyze(m: &GradedModule, h: usize, s_max: u32) -> Result<LindAnalysis> {
    let res = resolve(m, h + 1)?;
    analyze_resolution(&res, h, s_max)
}

/// Raises `s_max` up to [`SMAX_CAP`] while the criterion stays below the
/// linear-part value.
pub fn analyze_resolution(res: &MinimalResolution, h: usize, s_max: u32) -> Result<LindAnalysis> {
    let lind = lind_from_resolution(res, h)?;
    let target = lind.windowed(h);
    let mut s = s_max.max(1);
    let mut sega = sega_from_resolution(res, h, s);
    while sega.bound < target && s < SMAX_CAP {
        s = (s + 1).min(SMAX_CAP);
        sega = sega_from_resolution(res, h, s);
    }
    let agree = sega.bound == target;
    Ok(LindAnalysis { lind, sega, agree })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulVerdict {
    pub koszul: bool,
    pub status: Status,
}

pub fn is_koszul(m: &GradedModule, h: usize) -> Result<KoszulVerdict> {
    let l = linearity_defect(m, h)?;
    Ok(match (l.status, l.value) {
        (Status::Exact, 0) => KoszulVerdict { koszul: true, status: Status::Exact },
        (Status::ZeroUpToWindow, _) => KoszulVerdict { koszul: true, status: Status::ZeroUpToWindow },
        (s, _) => KoszulVerdict { koszul: false, status: if s == Status::Exact { Status::Exact } else { Status::AtLeast } },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentEvidence {
    pub degree: i32,
    pub linear: bool,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentwiseReport {
    pub ring_koszul: bool,
    pub componentwise_linear: bool,
    pub status: Status,
    pub components: Vec<ComponentEvidence>,
}

/// Whether `F_i` sits in degree `d + i` for every computed `i`.
fn has_linear_resolution(res: &MinimalResolution, d: i32) -> bool {
    (0..res.len()).all(|i| res.shifts(i).iter().all(|&s| s == d + i as i32))
}

/// Tests `M_<d>` for a `d`-linear resolution over the generator-degree
/// range of `M` and one degree above.
pub fn componentwise_linear(m: &GradedModule, h: usize) -> Result<ComponentwiseReport> {
    let ring = m.ring();
    let ring_koszul = ring_is_certified_koszul(ring) || {
        let k = linearity_defect(&GradedModule::residue_field(ring), h)?;
        k.nonzero_homology_indices.is_empty()
    };
    let degs = m.minimalize().generator_degrees();
    let (Some(&lo), Some(&hi)) = (degs.iter().min(), degs.iter().max()) else {
        return Ok(ComponentwiseReport { ring_koszul, componentwise_linear: true, status: Status::Exact, components: Vec::new() });
    };
    let mut components = Vec::new();
    let mut all = true;
    let mut exact = true;
    for d in lo..=hi + 1 {
        let md = m.truncate_component(d);
        let res = resolve(&md, h)?;
        let linear = has_linear_resolution(&res, d);
        let status = if res.terminated() || !linear { Status::Exact } else { Status::ZeroUpToWindow };
        all &= linear;
        exact &= status == Status::Exact;
        components.push(ComponentEvidence { degree: d, linear, status });
    }
    let status = if !ring_koszul {
        Status::AtLeast
    } else if exact || !all {
        Status::Exact
    } else {
        Status::ZeroUpToWindow
    };
    Ok(ComponentwiseReport { ring_koszul, componentwise_linear: all, status, components })
}
