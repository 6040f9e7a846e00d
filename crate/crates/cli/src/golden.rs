//! Golden examples with pinned expected values. Each case builds its
//! objects from session text, so the parser is exercised along the way.

use serde::Serialize;

use lindef::lindefect::{is_koszul, linear_part, linearity_defect, lind_from_resolution};
use lindef::structure::{analyze_ses, change_of_rings, linear_intersection, special_three_ideals, Verdict};
use lindef::{resolve, GradedModule, Ideal, PrimeField, Status};

use crate::commands::CommandError;
use crate::par;
use crate::session::Session;

pub const EXAMPLES: [&str; 5] = ["periodic", "roos", "threeideals", "remarks", "squares"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub example: &'static str,
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

struct Checks {
    example: &'static str,
    out: Vec<Check>,
}

impl Checks {
    fn eq<T: std::fmt::Debug + PartialEq>(&mut self, check: &str, expected: T, actual: T) {
        let pass = expected == actual;
        self.out.push(Check {
            example: self.example,
            check: check.to_string(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            pass,
        });
    }
}

type CResult<T> = Result<T, CommandError>;

fn parse(text: &str) -> CResult<Session> {
    Session::parse(text).map_err(|e| CommandError::Input(format!("golden session: {e}")))
}

pub fn run(name: &str, jobs: usize) -> CResult<Vec<Check>> {
    let names: Vec<&'static str> = match name {
        "all" => EXAMPLES.to_vec(),
        other => match EXAMPLES.iter().find(|e| **e == other) {
            Some(e) => vec![*e],
            None => return Err(CommandError::Input(format!("unknown example `{other}`; known: all, {}", EXAMPLES.join(", ")))),
        },
    };
    let results = par::map(&names, jobs, |_, n| run_one(n));
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

fn run_one(name: &'static str) -> CResult<Vec<Check>> {
    let mut c = Checks { example: name, out: Vec::new() };
    match name {
        "periodic" => periodic(&mut c)?,
        "roos" => roos(&mut c)?,
        "threeideals" => three_ideals(&mut c)?,
        "remarks" => remarks(&mut c)?,
        "squares" => squares(&mut c)?,
        _ => unreachable!("names come from EXAMPLES"),
    }
    Ok(c.out)
}

fn periodic(c: &mut Checks) -> CResult<()> {
    let s = parse(
        "ring R = poly(x,y) / (x*y);\nideal m = maximal;\nmodule k = R / m;\n\
         ideal M = (x^3, y^2);\nideal P = (x^2, y^2);\nses E = (M in P);",
    )?;
    let res = resolve(&s.module("k")?, 4)?;
    c.eq("ranks of the resolution of k", vec![1, 2, 2, 2, 2], res.ranks()[..5].to_vec());
    let lin = linear_part(&res)?;
    let same = (1..=4).all(|i| lin.differential(i) == res.differential(i));
    c.eq("linear part keeps every differential", true, same);
    c.eq("lind k", 0, lind_from_resolution(&res, 4)?.value);

    let rp = resolve(&s.module("P")?, 6)?;
    c.eq("dim Tor_4(k, P)", 2, rp.rank(4));
    c.eq("dim Tor_6(k, P)", 2, rp.rank(6));
    c.eq("P is Koszul", true, is_koszul(&s.module("P")?, 5)?.koszul);

    let rep = analyze_ses(s.ses("E")?, 6, 3)?;
    for i in [4, 6] {
        let row = &rep.tor[i];
        c.eq(&format!("Tor_{i}(k, phi) has a kernel"), true, row.rank_phi < row.beta_m);
    }
    for (label, d) in [("d_M", &rep.d_m), ("d_P", &rep.d_p), ("d_N", &rep.d_n)] {
        c.eq(&format!("{label} nonzero at every tested index"), true, d.zero.iter().all(|z| !z) && !d.value.is_exact());
    }
    c.eq("lind N", Some(0), rep.lind_n.exact());
    c.eq("M and P Koszul in the window", true, rep.lind_m.nonzero_homology_indices.is_empty() && rep.lind_p.nonzero_homology_indices.is_empty());
    Ok(())
}

fn roos(c: &mut Checks) -> CResult<()> {
    let s = parse(
        "ring R = poly(x,y,z,t) / (x^2, x*y, y^2, z^2, z*t, t^2);\n\
         module N = coker R(-1)^3 -> R^2 [[y, x+3*t, t],[z, -t, x+t]];\n\
         ideal m = maximal;\nideal m2 = power(m, 2);\nmodule Q = R / m2;",
    )?;
    let r = s.ring("R")?;
    c.eq("m^3 = 0", true, s.ideal("m")?.power(3)?.is_zero());
    c.eq("dim R_2", 4, r.hilbert_function(2));
    let n = s.module("N")?;
    c.eq("generators of N", 2, n.minimalize().num_generators());
    let l = linearity_defect(&n, 5)?;
    c.eq("lind N status", Status::AtLeast, l.status);
    c.eq("H_i(lin F) nonzero for i = 1..5", vec![1, 2, 3, 4, 5], l.nonzero_homology_indices.iter().copied().filter(|&i| i <= 5).collect());
    c.eq("lind R/m^2", Some(1), linearity_defect(&s.module("Q")?, 5)?.exact());
    Ok(())
}

fn three_ideals(c: &mut Checks) -> CResult<()> {
    let rep = special_three_ideals(PrimeField::default(), 2, 2, 0, 2, 4)?;
    c.eq("H_<2> is the 2-minors ideal", Some(true), rep.minors_identity);
    c.eq("lind H", 0, rep.lind.value);
    c.eq("theorem verdict", Verdict::Holds, rep.verdict);
    let s = parse(
        "ring S = poly(x,y,z,t);\nideal A = (x, z);\nideal B = (x, t);\nideal C = (y, z);\nideal D = (y, t);\n\
         ideal H = intersect(A, B, C, D);",
    )?;
    let r = s.ring("S")?;
    let target = Ideal::new(r, vec![r.parse_poly("x*y")?, r.parse_poly("z*t")?])?;
    c.eq("four ideals intersect to (xy, zt)", true, s.ideal("H")?.equals(&target)?);
    let ideals: Vec<Ideal> = ["A", "B", "C", "D"].iter().map(|n| s.ideal(n).cloned()).collect::<Result<_, _>>()?;
    let rep = linear_intersection(&ideals, 4)?;
    c.eq("lind (xy, zt)", Some(1), rep.lind.exact());
    c.eq("theorem applies to four ideals", false, rep.theorem_applies);
    Ok(())
}

fn remarks(c: &mut Checks) -> CResult<()> {
    let s = parse("ring S = poly(x,y);\nideal M = (x^2);\nideal P = (x^2, y);\nses E = (M in P);")?;
    let rep = analyze_ses(s.ses("E")?, 4, 3)?;
    c.eq("pure hypothesis", true, rep.hypotheses.pure);
    c.eq("lind P'", Some(0), rep.lind_p.exact());
    c.eq("lind N' = lind R/(x^2)", Some(1), rep.lind_n.exact());
    c.eq("pure extension verdict", Verdict::Holds, rep.pure_extension.verdict);

    let s = parse("ring T = poly(x,y,z);\nideal M = (x^2, y^2);\nideal P = (x^2, y^2, x*z);\nses E = (M in P);")?;
    let rep = analyze_ses(s.ses("E")?, 4, 3)?;
    c.eq("refusal", Some("M is not Koszul".to_string()), rep.pure_extension.failing_condition.clone());
    c.eq("lind P'", Some(1), rep.lind_p.exact());
    // the quotient is generated by xz with annihilator (x, y^2)
    c.eq("lind N'", Some(1), rep.lind_n.exact());

    for (rel, lind_s_k) in [("x^3", Some(Status::AtLeast)), ("x^2", None)] {
        let s = parse(&format!(
            "ring R = poly(x,y);\nideal J = ({rel});\nring S = R / ({rel});\nideal m = maximal;\nmodule k = S / m;"
        ))?;
        let rep = change_of_rings(s.ring("R")?, s.ideal("J")?, &s.module("k")?, 4)?;
        c.eq(&format!("lind_R R/({rel})"), Some(1), rep.lind_r_s.exact());
        c.eq(&format!("theorem applies over R/({rel})"), false, rep.theorem_applies);
        if let Some(st) = lind_s_k {
            c.eq(&format!("lind k over R/({rel})"), st, rep.lind_s_n.status);
            c.eq("lind k over R", Some(0), rep.lind_r_n.exact());
        }
    }
    Ok(())
}

fn squares(c: &mut Checks) -> CResult<()> {
    for n in [2usize, 3] {
        let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let sq: Vec<String> = vars.iter().map(|v| format!("{v}^2")).collect();
        let s = parse(&format!("ring S = poly({});\nmodule Q = S / ({});", vars.join(","), sq.join(", ")))?;
        let q: GradedModule = s.module("Q")?;
        c.eq(&format!("lind k[x]/(squares), n = {n}"), Some(n), linearity_defect(&q, n + 2)?.exact());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    #[test]
    fn unknown_example_is_an_input_error() {
        assert!(super::run("nope", 1).is_err());
    }

    #[test]
    fn squares_pass() {
        let checks = super::run("squares", 1).unwrap();
        assert_eq!(checks.len(), 2);
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }
}
