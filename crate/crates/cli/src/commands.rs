use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use lindef::lindefect::{analyze_resolution, componentwise_linear, linear_part, sega_from_resolution};
use lindef::structure::{
    analyze_ses, change_of_rings, conca_gen_filtration, linear_intersection, linear_quotients, special_three_ideals,
    verify_koszul_filtration, Verdict,
};
use lindef::{resolve, Error as CoreError, GradedModule, GradedRing, MinimalResolution, OrderKind, PrimeField};

use crate::session::{LookupError, Session};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub prime: u32,
    pub order: OrderKind,
    pub steps: usize,
    pub smax: u32,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params { prime: 32003, order: OrderKind::DegRevLex, steps: 6, smax: 4, seed: 0, jobs: 1 }
    }
}

/// Maps onto the exit codes 0, 1 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Ok,
    Violation,
    Inconclusive,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Violation => 1,
            Outcome::Inconclusive => 3,
        }
    }

    fn from_verdicts(vs: &[Verdict]) -> Outcome {
        if vs.contains(&Verdict::Violated) {
            Outcome::Violation
        } else if !vs.is_empty() && vs.iter().all(|v| *v == Verdict::Inconclusive) {
            Outcome::Inconclusive
        } else {
            Outcome::Ok
        }
    }
}

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Lookup(#[from] LookupError),
    #[error(transparent)]
    Engine(#[from] CoreError),
    #[error("{0}")]
    Input(String),
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub outcome: Outcome,
    pub results: Value,
}

impl CommandResult {
    fn new(outcome: Outcome, results: Value) -> Self {
        CommandResult { outcome, results }
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn matrix_rows(ring: &GradedRing, rank: usize, cols: &[lindef::FreeVector]) -> Vec<Vec<String>> {
    (0..rank).map(|r| cols.iter().map(|c| ring.format(&c.entries[r])).collect()).collect()
}

pub fn resolution_json(res: &MinimalResolution) -> Value {
    let inv = res.invariants();
    let ring = res.ring();
    let differentials: Vec<Vec<Vec<String>>> =
        (1..res.len()).map(|i| matrix_rows(ring, res.rank(i - 1), res.differential(i))).collect();
    json!({
        "betti": res.betti().keyed(),
        "pd": inv.projective_dimension,
        "reg": inv.regularity,
        "terminated": res.terminated(),
        "ranks": (0..res.len()).map(|i| res.rank(i)).collect::<Vec<_>>(),
        "shifts": (0..res.len()).map(|i| res.shifts(i).to_vec()).collect::<Vec<_>>(),
        "differentials": differentials,
    })
}

pub fn resolve_module(m: &GradedModule, p: &Params) -> Result<CommandResult, CommandError> {
    let res = resolve(m, p.steps)?;
    let ok = res.is_complex() && res.is_minimal();
    let mut v = resolution_json(&res);
    v["checks"] = json!({ "complex": res.is_complex(), "minimal": res.is_minimal() });
    Ok(CommandResult::new(if ok { Outcome::Ok } else { Outcome::Violation }, v))
}

pub fn lind_module(m: &GradedModule, p: &Params) -> Result<CommandResult, CommandError> {
    let res = resolve(m, p.steps + 1)?;
    let lin = linear_part(&res)?;
    let a = analyze_resolution(&res, p.steps, p.smax)?;
    let complex = lin.is_complex();
    let v = json!({
        "lind": {
            "value": a.lind.value,
            "status": a.lind.status,
            "nonzero_h": a.lind.nonzero_homology_indices,
            "window": a.lind.window,
            "certificate": a.lind.certificate,
        },
        "sega": {
            "maps": a.sega.maps,
            "bound": a.sega.bound,
            "s_max": a.sega.s_max,
        },
        "agree": a.agree,
        "linear_part_is_complex": complex,
    });
    let violated = !complex || (res.terminated() && !a.agree);
    Ok(CommandResult::new(if violated { Outcome::Violation } else { Outcome::Ok }, v))
}

pub fn sega_module(m: &GradedModule, p: &Params) -> Result<CommandResult, CommandError> {
    let res = resolve(m, p.steps + 1)?;
    Ok(CommandResult::new(Outcome::Ok, to_value(&sega_from_resolution(&res, p.steps, p.smax))))
}

pub fn componentwise(m: &GradedModule, p: &Params) -> Result<CommandResult, CommandError> {
    let rep = componentwise_linear(m, p.steps)?;
    let outcome = if rep.ring_koszul { Outcome::Ok } else { Outcome::Inconclusive };
    Ok(CommandResult::new(outcome, to_value(&rep)))
}

pub fn ses(s: &Session, name: &str, p: &Params) -> Result<CommandResult, CommandError> {
    let rep = analyze_ses(s.ses(name)?, p.steps, p.smax)?;
    let violations = rep.violations();
    let mut verdicts: Vec<Verdict> = rep.inequalities.iter().map(|q| q.verdict).collect();
    verdicts.push(rep.pure_extension.verdict);
    verdicts.push(rep.small_inclusion.verdict);
    let outcome = if !violations.is_empty() { Outcome::Violation } else { Outcome::from_verdicts(&verdicts) };
    let mut v = to_value(&rep);
    v["violations"] = json!(violations);
    Ok(CommandResult::new(outcome, v))
}

pub fn filtration(s: &Session, name: &str, p: &Params) -> Result<CommandResult, CommandError> {
    let rep = verify_koszul_filtration(s.filtration(name)?, p.steps, p.smax)?;
    let outcome = match (rep.valid, rep.conclusion_verdict) {
        (_, Verdict::Violated) => Outcome::Violation,
        (false, _) | (_, Verdict::Inconclusive) => Outcome::Inconclusive,
        _ => Outcome::Ok,
    };
    Ok(CommandResult::new(outcome, to_value(&rep)))
}

pub fn conca(s: &Session, q: &str, extra: &[String], modules: &[String], p: &Params) -> Result<CommandResult, CommandError> {
    let q = s.ideal(q)?;
    let extra = extra.iter().map(|n| s.ideal(n).cloned()).collect::<Result<Vec<_>, _>>()?;
    let modules = modules.iter().map(|n| s.module(n)).collect::<Result<Vec<_>, _>>()?;
    let rep = conca_gen_filtration(q.ring(), q, &extra, &modules, p.steps, p.smax)?;
    let mut verdicts = Vec::new();
    if let Some(f) = &rep.filtration {
        verdicts.push(f.conclusion_verdict);
    }
    for m in &rep.modules {
        verdicts.extend([m.betti_additivity, m.regularity_formula, m.koszul_verdict]);
    }
    let outcome = if verdicts.contains(&Verdict::Violated) { Outcome::Violation } else { Outcome::Ok };
    Ok(CommandResult::new(outcome, to_value(&rep)))
}

pub fn quotients(m: &GradedModule, p: &Params) -> Result<CommandResult, CommandError> {
    let m = m.minimalize();
    let rep = linear_quotients(&m, m.generators(), p.steps)?;
    let vs = [rep.koszul_verdict, rep.betti_additivity, rep.regularity_formula, rep.projective_dimension_formula];
    let outcome = if vs.contains(&Verdict::Violated) { Outcome::Violation } else { Outcome::Ok };
    Ok(CommandResult::new(outcome, to_value(&rep)))
}

pub fn chrings(s: &Session, ring: &str, ideal: &str, module: &str, p: &Params) -> Result<CommandResult, CommandError> {
    let r = s.ring(ring)?;
    let j = s.ideal(ideal)?;
    let n = s.module(module)?;
    let rep = change_of_rings(r, j, &n, p.steps)?;
    let mut verdicts = vec![rep.equality];
    verdicts.extend(rep.regularity_relations.iter().map(|q| q.verdict));
    let outcome = if verdicts.contains(&Verdict::Violated) {
        Outcome::Violation
    } else if rep.equality == Verdict::Inconclusive {
        Outcome::Inconclusive
    } else {
        Outcome::Ok
    };
    Ok(CommandResult::new(outcome, to_value(&rep)))
}

pub fn three_ideals(s: &Session, names: &[String], p: &Params) -> Result<CommandResult, CommandError> {
    let ideals = names.iter().map(|n| s.ideal(n).cloned()).collect::<Result<Vec<_>, _>>()?;
    let rep = linear_intersection(&ideals, p.steps)?;
    Ok(CommandResult::new(Outcome::from_verdicts(&[rep.verdict]), to_value(&rep)))
}

/// The special family in `k[x_1..x_a, y_1..y_b, z_1..z_c]` with `s` mixed
/// generators.
pub fn special_family(a: usize, b: usize, c: usize, s: usize, p: &Params) -> Result<CommandResult, CommandError> {
    let field = PrimeField::new(p.prime)?;
    let rep = special_three_ideals(field, a, b, c, s, p.steps)?;
    let mut outcome = Outcome::from_verdicts(&[rep.verdict]);
    if rep.minors_identity == Some(false) {
        outcome = Outcome::Violation;
    }
    Ok(CommandResult::new(outcome, to_value(&rep)))
}

/// The parsed session written back out, with a summary per declaration.
pub fn describe(s: &Session) -> CommandResult {
    use crate::session::Object;
    let decls: Vec<Value> = s
        .decls()
        .iter()
        .map(|d| {
            let detail = match &d.object {
                Object::Ring(r) => json!({ "vars": r.vars(), "p": r.field().modulus(), "gb": r.defining_gb().iter().map(|g| r.format(g)).collect::<Vec<_>>() }),
                Object::Ideal(i) => json!({ "generators": i.format() }),
                Object::Module(m) => json!({ "shifts": m.shifts(), "generators": m.generators().len(), "relations": m.relations().len() }),
                Object::Ses { sub, ambient, .. } => json!({ "sub": sub, "ambient": ambient }),
                Object::Filtration(f) => json!({ "members": f.members.iter().map(|m| m.name.clone()).collect::<Vec<_>>() }),
            };
            json!({ "name": d.name, "line": d.line, "ring": d.ring, "detail": detail })
        })
        .collect();
    CommandResult::new(Outcome::Ok, json!({ "declarations": decls, "canonical": s.render() }))
}
