//! Executable forms of the structural results on linearity defect: short
//! exact sequences, Koszul filtrations, linear quotients, change of rings
//! and intersections of linear ideals.

use serde::Serialize;

use crate::lindefect::LindResult;

mod applications;
mod filtration;
mod ses;

pub use applications::{
    change_of_rings, linear_intersection, linear_quotients, special_three_ideals, three_ideals, ChangeOfRingsReport,
    LinearQuotientsReport, QuotientStep, RegularityRelation, ThreeIdealsReport,
};
pub use filtration::{
    conca_gen_filtration, verify_koszul_filtration, ConcaReport, F2Entry, F3Entry, FiltrationMember, FiltrationReport,
    FiltrationSpec,
};
pub use ses::{
    analyze_ses, check_pure_extension, check_small_inclusion, submodule_of, CriterionEntry, DNumber, Hypotheses,
    InequalityCheck, RigidityCheck, SesReport, ShortExactSequence, TheoremCheck, TorMapEntry, TorRow,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    Inconclusive,
}

impl Verdict {
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Violated, _) | (_, Verdict::Violated) => Verdict::Violated,
            (Verdict::Holds, Verdict::Holds) => Verdict::Holds,
            _ => Verdict::Inconclusive,
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Violated
        }
    }
}

/// `[lo, hi]` with `hi = None` for an unbounded upper end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: Option<i64>,
}

impl Interval {
    pub fn exact(v: i64) -> Self {
        Interval { lo: v, hi: Some(v) }
    }

    pub fn at_least(v: i64) -> Self {
        Interval { lo: v, hi: None }
    }

    pub fn is_exact(&self) -> bool {
        self.hi == Some(self.lo)
    }

    pub fn max(self, o: Interval) -> Interval {
        Interval { lo: self.lo.max(o.lo), hi: self.hi.zip(o.hi).map(|(a, b)| a.max(b)) }
    }

    pub fn min(self, o: Interval) -> Interval {
        let hi = match (self.hi, o.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        };
        Interval { lo: self.lo.min(o.lo), hi }
    }

    pub fn add(self, k: i64) -> Interval {
        Interval { lo: self.lo + k, hi: self.hi.map(|v| v + k) }
    }
}

/// `a <= b` for values known to lie in the intervals.
pub fn compare_le(a: Interval, b: Interval) -> Verdict {
    match (a.hi, b.hi) {
        (Some(ah), _) if ah <= b.lo => Verdict::Holds,
        (_, Some(bh)) if a.lo > bh => Verdict::Violated,
        _ => Verdict::Inconclusive,
    }
}

/// The range of values `lind` can take given a windowed result.
pub fn lind_interval(l: &LindResult) -> Interval {
    match l.exact() {
        Some(v) => Interval::exact(v as i64),
        None => Interval::at_least(l.value as i64),
    }
}
