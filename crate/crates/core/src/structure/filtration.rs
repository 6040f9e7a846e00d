//! Koszul filtrations: verification of the three defining conditions, and
//! the filtration attached to an ideal `q` with `m^2 = qm` and `q^2 = 0`.

use serde::Serialize;

use super::applications::{linear_quotients, LinearQuotientsReport};
use super::Verdict;
use crate::error::{Error, Result};
use crate::groebner::FreeVector;
use crate::lindefect::{linearity_defect, LindResult};
use crate::module::{GradedModule, Ideal};
use crate::poly::Polynomial;
use crate::ring::GradedRing;

#[derive(Clone, Debug)]
pub struct FiltrationMember {
    pub name: String,
    pub ideal: Ideal,
    /// `x_1, .., x_n` with `I_j = (x_1, .., x_j)`; empty for the zero ideal.
    pub chain: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct FiltrationSpec {
    pub ring: GradedRing,
    pub members: Vec<FiltrationMember>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2Entry {
    pub member: String,
    pub s: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F3Entry {
    pub member: String,
    pub j: usize,
    /// `I_j` is a member; for the last step, `I_n = I`.
    pub step_in_family: bool,
    /// `x_j ∉ I_{j-1}`.
    pub proper: bool,
    pub colon: String,
    pub colon_in_family: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conclusion {
    pub member: String,
    pub lind: LindResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub f1: bool,
    pub f2: Vec<F2Entry>,
    /// `m^{s+1} = 0` was reached, so (F2) is settled for every `s`.
    pub f2_exhaustive: bool,
    pub f3: Vec<F3Entry>,
    pub valid: bool,
    pub conclusions: Vec<Conclusion>,
    pub residue_field: Option<LindResult>,
    pub conclusion_verdict: Verdict,
}

fn find_member(spec: &FiltrationSpec, i: &Ideal) -> Result<Option<usize>> {
    for (k, m) in spec.members.iter().enumerate() {
        if m.ideal.equals(i)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn validate(spec: &FiltrationSpec) -> Result<()> {
    let mut names = std::collections::HashSet::new();
    for m in &spec.members {
        if !names.insert(m.name.as_str()) {
            return Err(Error::Invalid(format!("filtration member {} declared twice", m.name)));
        }
        if !m.ideal.ring().same_as(&spec.ring) {
            return Err(Error::RingMismatch);
        }
        if m.ideal.is_zero() != m.chain.is_empty() {
            return Err(Error::Invalid(format!("member {} needs a chain exactly when it is nonzero", m.name)));
        }
        if m.chain.iter().any(|x| x.homogeneous_degree().is_none()) {
            return Err(Error::NotHomogeneous(format!("chain of filtration member {}", m.name)));
        }
    }
    Ok(())
}

pub fn verify_koszul_filtration(spec: &FiltrationSpec, h: usize, s_max: u32) -> Result<FiltrationReport> {
    validate(spec)?;
    let ring = &spec.ring;
    let zero = Ideal::zero(ring);
    let max = Ideal::maximal(ring);
    let f1 = find_member(spec, &zero)?.is_some() && find_member(spec, &max)?.is_some();

    let mut f2 = Vec::new();
    let mut f2_exhaustive = false;
    for s in 1..=s_max {
        let ms1 = max.power(s + 1)?;
        if ms1.is_zero() {
            f2_exhaustive = true;
            break;
        }
        for m in &spec.members {
            let lhs = m.ideal.intersect(&ms1)?;
            let rhs = max.power(s)?.times(&m.ideal)?;
            f2.push(F2Entry { member: m.name.clone(), s, holds: lhs.equals(&rhs)? });
        }
    }

    let mut f3 = Vec::new();
    for m in &spec.members {
        let mut prev = Ideal::zero(ring);
        for (j, x) in m.chain.iter().enumerate() {
            let mut gens = prev.generators().to_vec();
            gens.push(x.clone());
            let cur = Ideal::new(ring, gens)?;
            let last = j + 1 == m.chain.len();
            let step_in_family = find_member(spec, &cur)?.is_some() && (!last || cur.equals(&m.ideal)?);
            let proper = !prev.contains(x)?;
            let colon = prev.colon(x)?;
            let colon_in_family = find_member(spec, &colon)?.is_some();
            f3.push(F3Entry { member: m.name.clone(), j: j + 1, step_in_family, proper, colon: colon.format(), colon_in_family });
            prev = cur;
        }
    }

    let valid = f1 && f2.iter().all(|e| e.holds) && f3.iter().all(|e| e.step_in_family && e.proper && e.colon_in_family);
    let mut conclusions = Vec::new();
    let mut residue_field = None;
    let mut conclusion_verdict = Verdict::Inconclusive;
    if valid {
        let mut ok = true;
        for m in &spec.members {
            let lind = linearity_defect(&m.ideal.quotient_module(), h)?;
            ok &= lind.nonzero_homology_indices.is_empty();
            conclusions.push(Conclusion { member: m.name.clone(), lind });
        }
        let k = linearity_defect(&GradedModule::residue_field(ring), h)?;
        ok &= k.nonzero_homology_indices.is_empty();
        residue_field = Some(k);
        conclusion_verdict = Verdict::from_bool(ok);
    }
    Ok(FiltrationReport { f1, f2, f2_exhaustive, f3, valid, conclusions, residue_field, conclusion_verdict })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConcaReport {
    pub accepted: bool,
    pub failing_identity: Option<String>,
    pub members: Vec<String>,
    pub filtration: Option<FiltrationReport>,
    pub modules: Vec<LinearQuotientsReport>,
}

/// Chain `y_1, .., y_e, z_1, .., z_n` for an ideal containing `q`.
fn chain_over(q: &Ideal, i: &Ideal) -> Result<Vec<Polynomial>> {
    let mut chain = q.generators().to_vec();
    let mut cur = q.clone();
    for g in i.generators() {
        if !cur.contains(g)? {
            chain.push(g.clone());
            let mut gens = cur.generators().to_vec();
            gens.push(g.clone());
            cur = Ideal::new(i.ring(), gens)?;
        }
    }
    Ok(chain)
}

/// The filtration `{0, (y_1), .., (y_1..y_{e-1})} ∪ {ideals ⊇ q}` closed
/// under the chains and colons it needs, starting from `m`, `q` and the
/// caller's ideals. Modules with `qM = 0` are run through
/// [`linear_quotients`].
pub fn conca_gen_filtration(
    ring: &GradedRing,
    q: &Ideal,
    extra: &[Ideal],
    modules: &[GradedModule],
    h: usize,
    s_max: u32,
) -> Result<ConcaReport> {
    let max = Ideal::maximal(ring);
    let reject = |why: &str| ConcaReport {
        accepted: false,
        failing_identity: Some(why.to_string()),
        members: Vec::new(),
        filtration: None,
        modules: Vec::new(),
    };
    if !q.is_subset_of(&max)? {
        return Ok(reject("q ⊆ m"));
    }
    if !max.power(2)?.equals(&q.times(&max)?)? {
        return Ok(reject("m^2 = q*m"));
    }
    if !q.times(q)?.is_zero() {
        return Ok(reject("q^2 = 0"));
    }
    for e in extra {
        if !q.is_subset_of(e)? || !e.is_subset_of(&max)? {
            return Err(Error::Invalid(format!("requested ideal {} does not lie between q and m", e.format())));
        }
    }

    let ys = q.generators().to_vec();
    let mut members: Vec<FiltrationMember> = Vec::new();
    let push = |members: &mut Vec<FiltrationMember>, ideal: Ideal, chain: Vec<Polynomial>| -> Result<bool> {
        for m in members.iter() {
            if m.ideal.equals(&ideal)? {
                return Ok(false);
            }
        }
        let name = format!("F{}", members.len());
        members.push(FiltrationMember { name, ideal, chain });
        Ok(true)
    };
    push(&mut members, Ideal::zero(ring), Vec::new())?;
    for j in 1..ys.len() {
        push(&mut members, Ideal::new(ring, ys[..j].to_vec())?, ys[..j].to_vec())?;
    }
    let mut queue: Vec<Ideal> = vec![q.clone(), max.clone()];
    queue.extend(extra.iter().cloned());
    let mut rounds = 0;
    while let Some(i) = queue.pop() {
        rounds += 1;
        if rounds > 256 {
            return Err(Error::Invalid("filtration closure does not stabilise".into()));
        }
        if i.is_zero() {
            continue;
        }
        let chain = if q.is_subset_of(&i)? { chain_over(q, &i)? } else { i.generators().to_vec() };
        if !push(&mut members, i.clone(), chain.clone())? {
            continue;
        }
        let mut prev = Ideal::zero(ring);
        for x in &chain {
            let colon = prev.colon(x)?;
            if q.is_subset_of(&colon)? && !colon.is_unit() {
                queue.push(colon);
            }
            let mut gens = prev.generators().to_vec();
            gens.push(x.clone());
            prev = Ideal::new(ring, gens)?;
            if q.is_subset_of(&prev)? {
                queue.push(prev.clone());
            }
        }
    }
    let spec = FiltrationSpec { ring: ring.clone(), members };
    let filtration = verify_koszul_filtration(&spec, h, s_max)?;

    let mut reports = Vec::new();
    for m in modules {
        let killed = m.minimal_generators().iter().all(|g| {
            q.generators().iter().all(|y| {
                let v = FreeVector::new(g.entries.iter().map(|f| ring.mul(f, y)).collect());
                m.is_zero_element(&v).unwrap_or(false)
            })
        });
        if !killed {
            return Err(Error::Invalid("module is not annihilated by q".into()));
        }
        reports.push(linear_quotients(m, &m.minimal_generators(), h)?);
    }
    Ok(ConcaReport {
        accepted: true,
        failing_identity: None,
        members: spec.members.iter().map(|m| format!("{} = {}", m.name, m.ideal.format())).collect(),
        filtration: Some(filtration),
        modules: reports,
    })
}
