//! Minimal graded free resolutions, Betti tables, and chain-map lifts.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded;
use crate::groebner::{FreeVector, TermOrder};
use crate::module::GradedModule;
use crate::ring::GradedRing;

/// Certification attached to a windowed invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    AtLeast,
    ZeroUpToWindow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounded {
    pub value: Option<i32>,
    pub status: Status,
}

/// `F_h -> ... -> F_1 -> F_0 (-> M)`.
#[derive(Clone, Debug)]
pub struct MinimalResolution {
    module: GradedModule,
    generators: Vec<FreeVector>,
    shifts: Vec<Vec<i32>>,
    maps: Vec<Vec<FreeVector>>,
    computed_to: usize,
    terminated: bool,
}

/// Resolves `m` through homological degree `h`.
pub fn resolve(m: &GradedModule, h: usize) -> Result<MinimalResolution> {
    let ring = m.ring().clone();
    let gens = m.minimal_generators();
    let f0 = graded::degrees_of(&gens, m.shifts());
    let mut res = MinimalResolution {
        module: m.clone(),
        generators: gens.clone(),
        shifts: vec![f0.clone()],
        maps: Vec::new(),
        computed_to: h,
        terminated: false,
    };
    if gens.is_empty() {
        res.terminated = true;
        return Ok(res);
    }
    let mut prev_shifts = f0;
    let mut prev_cols: Option<Vec<FreeVector>> = None;
    for i in 1..=h + 1 {
        if i == h + 1 {
            // probe whether F_{h+1} vanishes; over an Artinian ring a module
            // of finite projective dimension is free, so F_1 != 0 settles it
            if ring.top_degree().is_some() && !res.maps.is_empty() && !res.maps[0].is_empty() {
                break;
            }
        }
        let cols = match &prev_cols {
            None => graded::kernel_generators(&ring, &prev_shifts, &gens, m.shifts(), m.relations())?,
            Some(p) => {
                let tgt = &res.shifts[i - 2];
                let order = if i == 2 { TermOrder::PositionOverTerm } else { TermOrder::schreyer(&res.maps[i - 3], ring.poly()) };
                graded::kernel_generators_in(&ring, &prev_shifts, p, tgt, &[], order)?
            }
        };
        if cols.is_empty() {
            res.terminated = true;
            break;
        }
        if i == h + 1 {
            break;
        }
        let s = graded::degrees_of(&cols, &prev_shifts);
        res.shifts.push(s.clone());
        res.maps.push(cols.clone());
        prev_shifts = s;
        prev_cols = Some(cols);
    }
    Ok(res)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
    pub window: usize,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    /// `"i,j" -> count`.
    pub fn keyed(&self) -> BTreeMap<String, usize> {
        self.entries.iter().map(|((i, j), v)| (format!("{i},{j}"), *v)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub projective_dimension: Bounded,
    pub regularity: Bounded,
}

impl MinimalResolution {
    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn ring(&self) -> &GradedRing {
        self.module.ring()
    }

    /// Images of the basis of `F_0` in the ambient of the module.
    pub fn augmentation(&self) -> &[FreeVector] {
        &self.generators
    }

    pub fn computed_to(&self) -> usize {
        self.computed_to
    }

    pub fn terminated(&self) -> bool {
        self.terminated
    }

    /// Number of free modules stored, `F_0 ..`; zero for the zero module.
    pub fn len(&self) -> usize {
        if self.generators.is_empty() {
            0
        } else {
            self.shifts.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Shifts of `F_i`; empty beyond the stored range.
    pub fn shifts(&self, i: usize) -> &[i32] {
        if i < self.len() {
            &self.shifts[i]
        } else {
            &[]
        }
    }

    pub fn rank(&self, i: usize) -> usize {
        self.shifts(i).len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.computed_to).map(|i| self.rank(i)).collect()
    }

    /// Columns of `∂_i : F_i -> F_{i-1}`, `i >= 1`.
    pub fn differential(&self, i: usize) -> &[FreeVector] {
        if i >= 1 && i <= self.maps.len() {
            &self.maps[i - 1]
        } else {
            &[]
        }
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for i in 0..self.len() {
            for &s in &self.shifts[i] {
                *entries.entry((i, s)).or_insert(0) += 1;
            }
        }
        BettiTable { entries, window: self.computed_to }
    }

    pub fn invariants(&self) -> InvariantReport {
        let status = if self.terminated { Status::Exact } else { Status::AtLeast };
        if self.is_empty() {
            let z = Bounded { value: None, status: Status::Exact };
            return InvariantReport { projective_dimension: z, regularity: z };
        }
        let pd = (0..self.len()).rev().find(|&i| self.rank(i) > 0).unwrap_or(0) as i32;
        let reg = (0..self.len()).flat_map(|i| self.shifts[i].iter().map(move |&s| s - i as i32)).max();
        InvariantReport {
            projective_dimension: Bounded { value: Some(pd), status },
            regularity: Bounded { value: reg, status },
        }
    }

    /// `Ω_i`: the image of `∂_i` in `F_{i-1}`; `Ω_0` is the module itself.
    pub fn syzygy_module(&self, i: usize) -> Result<GradedModule> {
        if i > self.computed_to {
            return Err(Error::OutOfWindow { index: i, window: self.computed_to });
        }
        if i == 0 {
            return Ok(self.module.clone());
        }
        if i > self.maps.len() {
            return Ok(GradedModule::zero(self.ring()));
        }
        GradedModule::submodule(self.ring(), self.shifts[i - 1].clone(), self.maps[i - 1].clone())
    }

    /// Every entry of every differential lies in `m`.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|cols| {
            cols.iter().all(|c| c.entries.iter().all(|f| f.is_zero() || f.homogeneous_degree().is_some_and(|d| d >= 1)))
        })
    }

    /// `∂_{i} ∘ ∂_{i+1} = 0` and `∂_1` lands in the relations of the module.
    pub fn is_complex(&self) -> bool {
        let ring = self.ring();
        for col in self.differential(1) {
            let img = graded::apply(ring, &self.generators, self.module.rank(), col);
            if !self.module.is_zero_element(&img).unwrap_or(false) {
                return false;
            }
        }
        for i in 1..self.maps.len() {
            let a = &self.maps[i - 1];
            for col in &self.maps[i] {
                if !graded::apply(ring, a, self.rank(i - 1), col).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `m * Ω_i = 0`, for `i <= ` the stored range.
    pub fn syzygy_killed_by_maximal_ideal(&self, i: usize) -> bool {
        if i == 0 {
            return self.module.is_killed_by_maximal_ideal();
        }
        let ring = self.ring();
        let n = ring.nvars();
        self.differential(i).iter().all(|col| {
            (0..n).all(|v| {
                let x = ring.poly().var(v);
                col.entries.iter().all(|f| ring.mul(f, &x).is_zero())
            })
        })
    }
}

/// A lift `φ_i : F_i -> G_i` of a module map, one column per basis vector
/// of `F_i`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub maps: Vec<Vec<FreeVector>>,
}

impl ChainMap {
    /// The degree-zero part of `φ_i`: `Tor_i(k, φ)` as a scalar matrix with
    /// `rank G_i` rows, stored by columns.
    pub fn tor_matrix(&self, i: usize, src: &MinimalResolution, tgt: &MinimalResolution) -> Vec<Vec<u32>> {
        let rows = tgt.rank(i);
        let Some(cols) = self.maps.get(i) else {
            return vec![vec![0; rows]; src.rank(i)];
        };
        cols.iter()
            .map(|c| {
                (0..rows)
                    .map(|r| match c.entries[r].terms().first() {
                        Some((m, a)) if m.is_one() => *a,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    }
}

/// Lifts `M -> P` to resolutions, where `images[k]` is the image of the
/// `k`-th generator of `src.module()` written in the ambient of
/// `tgt.module()`.
pub fn lift_map(src: &MinimalResolution, tgt: &MinimalResolution, images: &[FreeVector]) -> Result<ChainMap> {
    let ring = src.ring();
    let p = tgt.module();
    let mut maps: Vec<Vec<FreeVector>> = Vec::new();
    if src.is_empty() {
        return Ok(ChainMap { maps });
    }
    let mut phi0 = Vec::new();
    for img in images {
        let a = graded::solve_lift(ring, tgt.shifts(0), tgt.augmentation(), p.shifts(), p.relations(), img)
            .ok_or_else(|| Error::Invalid("map does not land in the target module".into()))?;
        phi0.push(a);
    }
    maps.push(phi0);
    let top = src.len().min(src.computed_to + 1);
    for i in 1..top {
        let prev = &maps[i - 1];
        let mut phi = Vec::new();
        for col in src.differential(i) {
            let img = graded::apply(ring, prev, tgt.rank(i - 1), col);
            let a = graded::solve_lift(ring, tgt.shifts(i), tgt.differential(i), tgt.shifts(i - 1), &[], &img)
                .ok_or_else(|| Error::Invalid(format!("chain map does not lift at step {i}")))?;
            phi.push(a);
        }
        maps.push(phi);
    }
    Ok(ChainMap { maps })
}
