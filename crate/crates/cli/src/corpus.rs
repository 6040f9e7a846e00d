//! Random corpora: short exact sequences checked against the structural
//! inequalities and theorems, and modules checked for agreement between the
//! linear part and the Tor-map criterion.

use serde::Serialize;

use lindef::lindefect::analyze;
use lindef::random::Sampler;
use lindef::structure::{analyze_ses, ShortExactSequence};
use lindef::{GradedModule, GradedRing, PrimeField, Status};
use rand::Rng;

use crate::commands::{CommandError, Params};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Ses,
    Sega,
}

#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub index: usize,
    pub ring: String,
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub drawn: usize,
    pub degenerate: usize,
    pub certified: usize,
    pub pure_theorem_checked: usize,
    pub small_theorem_checked: usize,
    pub failures: Vec<Finding>,
    /// Sequences with `M` and `P` Koszul and `lind N` not bounded in the
    /// window. Logged only; nothing is claimed about them.
    pub candidates: Vec<Finding>,
    /// Largest `lind` window supremum seen, a sampled lower bound.
    pub sampled_lind_max: usize,
}

enum Item {
    Degenerate,
    Ses { certified: bool, pure: bool, small: bool, failure: Option<Finding>, candidate: Option<Finding> },
    Module { lind: usize, failure: Option<Finding> },
}

fn describe_ring(r: &GradedRing) -> String {
    let rels: Vec<String> = r.defining_ideal().iter().map(|g| r.format(g)).collect();
    if rels.is_empty() {
        format!("k[{}]", r.vars().join(","))
    } else {
        format!("k[{}]/({})", r.vars().join(","), rels.join(", "))
    }
}

fn describe_module(m: &GradedModule) -> String {
    let gens: Vec<String> = m.generators().iter().map(|g| m.format_vector(g)).collect();
    let rels: Vec<String> = m.relations().iter().map(|g| m.format_vector(g)).collect();
    format!("<{}> / <{}> in shifts {:?}", gens.join(", "), rels.join(", "), m.shifts())
}

fn describe_ses(s: &ShortExactSequence) -> String {
    format!("M = {}; P = {}", describe_module(s.sub()), describe_module(s.middle()))
}

fn ses_item(index: usize, seed: u64, p: &Params) -> Result<Item, CommandError> {
    let mut s = Sampler::new(seed, PrimeField::new(p.prime)?);
    let n = s.rng().gen_range(2..=3);
    let ring = if s.rng().gen_bool(0.7) { s.polynomial_ring(n) } else { s.quadric_ring(n, 2)? };
    let mode = s.choose_mode();
    let Some(seq) = s.ses(&ring, mode)? else { return Ok(Item::Degenerate) };
    let h = p.steps.min(n + 2);
    let rep = analyze_ses(&seq, h, p.smax)?;
    let finding = |detail: String| Finding { index, ring: describe_ring(&ring), instance: describe_ses(&seq), detail };
    let violations = rep.violations();
    let failure = (!violations.is_empty()).then(|| finding(violations.join("; ")));
    let koszul = |l: &lindef::LindResult| l.nonzero_homology_indices.is_empty();
    let candidate = (koszul(&rep.lind_m) && koszul(&rep.lind_p) && rep.lind_n.status == Status::AtLeast)
        .then(|| finding(format!("lind N >= {}", rep.lind_n.value)));
    Ok(Item::Ses {
        certified: rep.certified,
        pure: rep.certified && rep.pure_extension.failing_condition.is_none(),
        small: rep.certified && rep.small_inclusion.failing_condition.is_none(),
        failure,
        candidate,
    })
}

fn sega_item(index: usize, seed: u64, p: &Params) -> Result<Item, CommandError> {
    let mut s = Sampler::new(seed, PrimeField::new(p.prime)?);
    let n = s.rng().gen_range(1..=3);
    let ring = s.quadric_ring(n, 1)?;
    let m = s.small_module(&ring)?;
    if m.is_zero() {
        return Ok(Item::Degenerate);
    }
    let h = p.steps.min(5);
    let a = analyze(&m, h, p.smax)?;
    let failure = (!a.agree).then(|| Finding {
        index,
        ring: describe_ring(&ring),
        instance: describe_module(&m),
        detail: format!("linear part {} vs Tor maps {}", a.lind.windowed(h), a.sega.bound),
    });
    Ok(Item::Module { lind: a.lind.windowed(h), failure })
}

/// `count` instances drawn from consecutive seeds starting at `p.seed`.
pub fn run(kind: Kind, count: usize, p: &Params) -> Result<Summary, CommandError> {
    let seeds: Vec<u64> = (0..count as u64).map(|i| p.seed.wrapping_add(i)).collect();
    let items = par::map(&seeds, p.jobs, |i, &seed| match kind {
        Kind::Ses => ses_item(i, seed, p),
        Kind::Sega => sega_item(i, seed, p),
    });
    let mut sum = Summary { drawn: count, ..Summary::default() };
    for item in items {
        match item? {
            Item::Degenerate => sum.degenerate += 1,
            Item::Ses { certified, pure, small, failure, candidate } => {
                sum.certified += certified as usize;
                sum.pure_theorem_checked += pure as usize;
                sum.small_theorem_checked += small as usize;
                sum.failures.extend(failure);
                sum.candidates.extend(candidate);
            }
            Item::Module { lind, failure } => {
                sum.sampled_lind_max = sum.sampled_lind_max.max(lind);
                sum.failures.extend(failure);
            }
        }
    }
    Ok(sum)
}
