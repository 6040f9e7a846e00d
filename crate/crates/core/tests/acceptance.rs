use std::process::ExitCode;
use std::time::{Duration, Instant};

use lindef::graded::kernel_generators;
use lindef::lindefect::{analyze, lind_from_resolution, linear_part};
use lindef::random::Sampler;
use lindef::structure::*;
use lindef::*;
use rand::Rng;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn field() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn ring(vars: &[&str], rels: &[&str]) -> GradedRing {
    GradedRing::parse(field(), vars, rels).unwrap()
}

fn ideal(r: &GradedRing, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

/// Reads back an ideal printed as `(f1, f2, ...)`.
fn reparse(r: &GradedRing, printed: &str) -> Ideal {
    let inner = printed.trim().trim_start_matches('(').trim_end_matches(')');
    let gens: Vec<&str> = inner.split(',').map(str::trim).filter(|g| !g.is_empty()).collect();
    ideal(r, &gens)
}

fn vector(r: &GradedRing, entries: &[&str]) -> FreeVector {
    FreeVector::new(entries.iter().map(|e| r.parse_poly(e).unwrap()).collect())
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent vectors of degree `d` in `n` variables.
fn exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in 0..=d {
        for mut rest in exponents(n - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// Hilbert function of `k[x_1..x_n]/(monomials)` by counting standard
/// monomials.
fn monomial_hilbert(n: usize, rels: &[Vec<u32>], d: u32) -> i64 {
    exponents(n, d).iter().filter(|e| !rels.iter().any(|r| r.iter().zip(e.iter()).all(|(a, b)| a <= b))).count() as i64
}

/// Betti numbers of `k` over a Koszul algebra: coefficients of `1/H_R(-t)`.
fn koszul_betti(hilbert: &[i64]) -> Vec<i64> {
    let h: Vec<i64> = hilbert.iter().enumerate().map(|(i, &v)| if i % 2 == 0 { v } else { -v }).collect();
    let mut inv = vec![0i64; h.len()];
    inv[0] = 1;
    for i in 1..h.len() {
        inv[i] = -(1..=i).map(|j| h[j] * inv[i - j]).sum::<i64>();
    }
    inv
}

fn lind_is_zero(l: &LindResult) -> bool {
    l.value == 0 && l.nonzero_homology_indices.is_empty()
}

fn criterion_1() -> Outcome {
    let r = ring(&["x", "y"], &["x*y"]);
    let k = GradedModule::residue_field(&r);
    let res = resolve(&k, 4).map_err(|e| e.to_string())?;
    let hilbert: Vec<i64> = (0..5).map(|d| monomial_hilbert(2, &[vec![1, 1]], d)).collect();
    let oracle = koszul_betti(&hilbert);
    let ranks: Vec<i64> = res.ranks().iter().take(5).map(|&v| v as i64).collect();
    ensure!(ranks == oracle && ranks == vec![1, 2, 2, 2, 2], "ranks {ranks:?}, oracle {oracle:?}");
    for i in 0..5 {
        ensure!(res.shifts(i).iter().all(|&s| s == i as i32), "F_{i} not generated in degree {i}");
    }
    let lin = linear_part(&res).map_err(|e| e.to_string())?;
    for i in 1..5 {
        ensure!(lin.differential(i) == res.differential(i), "linear part differs from the resolution at {i}");
    }
    let l = linearity_defect(&k, 4).map_err(|e| e.to_string())?;
    ensure!(lind_is_zero(&l), "lind k = {} ({:?})", l.value, l.status);
    Ok(format!("ranks {ranks:?}, lind k = 0 ({:?})", l.status))
}

fn criterion_2() -> Outcome {
    let r = ring(&["x", "y"], &["x*y"]);
    let p = ideal(&r, &["x^2", "y^2"]).as_module();
    let res = resolve(&p, 6).map_err(|e| e.to_string())?;
    for i in [4, 6] {
        ensure!(res.rank(i) == 2, "dim Tor_{i}(k, (x^2,y^2)) = {}", res.rank(i));
    }
    let m = ideal(&r, &["x^3", "y^2"]).as_module();
    let ses = ShortExactSequence::new(m, p).map_err(|e| e.to_string())?;
    let rep = analyze_ses(&ses, 6, 3).map_err(|e| e.to_string())?;
    for i in [4, 6] {
        let row = &rep.tor[i];
        ensure!(row.rank_phi < row.beta_m, "Tor_{i}(k, phi) injective (rank {} of {})", row.rank_phi, row.beta_m);
    }
    ensure!(rep.violations().is_empty(), "violations {:?}", rep.violations());
    Ok("dim Tor_4 = dim Tor_6 = 2; Tor(k, phi) has kernel at 4 and 6".into())
}

fn roos_ring() -> GradedRing {
    ring(&["x", "y", "z", "t"], &["x^2", "x*y", "y^2", "z^2", "z*t", "t^2"])
}

fn roos_columns(r: &GradedRing) -> Vec<FreeVector> {
    vec![vector(r, &["y", "z"]), vector(r, &["x+3*t", "-t"]), vector(r, &["t", "x+t"])]
}

fn criterion_3() -> Outcome {
    let r = roos_ring();
    ensure!(Ideal::maximal(&r).power(3).map_err(|e| e.to_string())?.is_zero(), "m^3 != 0");
    let rels: Vec<Vec<u32>> = vec![vec![2, 0, 0, 0], vec![1, 1, 0, 0], vec![0, 2, 0, 0], vec![0, 0, 2, 0], vec![0, 0, 1, 1], vec![0, 0, 0, 2]];
    let oracle = monomial_hilbert(4, &rels, 2);
    ensure!(oracle == 10 - 6, "oracle miscounted");
    ensure!(r.hilbert_function(2) as i64 == oracle, "dim R_2 = {}", r.hilbert_function(2));
    let n = GradedModule::cokernel(&r, vec![0, 0], Some(&[1, 1, 1]), roos_columns(&r)).map_err(|e| e.to_string())?;
    ensure!(n.minimalize().num_generators() == 2, "N needs {} generators", n.minimalize().num_generators());
    let l = linearity_defect(&n, 5).map_err(|e| e.to_string())?;
    for i in 1..=5 {
        ensure!(l.nonzero_homology_indices.contains(&i), "H_{i}(lin F) = 0; indices {:?}", l.nonzero_homology_indices);
    }
    ensure!(l.status == Status::AtLeast, "status {:?}", l.status);
    let q = ideal(&r, &["x^2", "x*y", "x*z", "x*t", "y^2", "y*z", "y*t", "z^2", "z*t", "t^2"]).quotient_module();
    let lq = linearity_defect(&q, 5).map_err(|e| e.to_string())?;
    ensure!(lq.exact() == Some(1), "lind R/m^2 = {} ({:?})", lq.value, lq.status);
    Ok(format!("m^3 = 0, dim R_2 = 4, lind N >= {} (indices {:?}), lind R/m^2 = 1", l.value, l.nonzero_homology_indices))
}

fn criterion_4() -> Outcome {
    let r = ring(&["x", "y"], &["x^2"]);
    let mut s = Sampler::new(4, field());
    let h = 4;
    let mut best = 0;
    let mut drawn = 0;
    while drawn < 20 {
        let u = s.ideal(&r, 3, 3, false).map_err(|e| e.to_string())?;
        if u.is_zero() {
            continue;
        }
        drawn += 1;
        let l = linearity_defect(&u.quotient_module(), h).map_err(|e| e.to_string())?;
        let w = l.windowed(h);
        ensure!(w <= 1, "lind R/{} = {w} in window {h}", u.format());
        best = best.max(w);
    }
    ensure!(best == 1, "no sampled module attains 1");
    Ok(format!("20 ideals, all lind <= 1 in window {h}; sampled glind >= {best}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let s2 = ring(&["x", "y"], &[]);
    let l = linearity_defect(&ideal(&s2, &["x^2"]).quotient_module(), 4).map_err(|e| e.to_string())?;
    ensure!(l.exact() == Some(1), "lind k[x,y]/(x^2) = {} ({:?})", l.value, l.status);

    let s3 = ring(&["x", "y", "z"], &[]);
    let l = linearity_defect(&ideal(&s3, &["x^2", "y^2", "x*z"]).as_module(), 4).map_err(|e| e.to_string())?;
    ensure!(l.exact() == Some(1), "lind (x^2,y^2,xz) = {} ({:?})", l.value, l.status);

    // xy, zt have coprime supports, so the Koszul complex on them resolves
    // the quotient: the ideal has beta_{0,2} = 2, beta_{1,4} = 1.
    let s4 = ring(&["x", "y", "z", "t"], &[]);
    let m = ideal(&s4, &["x*y", "z*t"]).as_module();
    let res = resolve(&m, 5).map_err(|e| e.to_string())?;
    let b = res.betti();
    let degs = [2, 2];
    let koszul: Vec<(usize, i32, usize)> = vec![(0, degs[0], 2), (1, degs[0] + degs[1], 1)];
    for &(i, j, v) in &koszul {
        ensure!(b.get(i, j) == v, "beta_{i},{j} = {}", b.get(i, j));
    }
    ensure!((0..4).map(|i| b.total(i)).sum::<usize>() == 3, "extra Betti numbers");
    let oracle_pd = 1;
    let oracle_reg = koszul.iter().map(|&(i, j, _)| j - i as i32).max().unwrap();
    let inv = res.invariants();
    ensure!(inv.projective_dimension.value == Some(oracle_pd), "pd {:?}", inv.projective_dimension);
    ensure!(inv.regularity.value == Some(oracle_reg) && oracle_reg == 3, "reg {:?}", inv.regularity);
    let l = lind_from_resolution(&res, 4).map_err(|e| e.to_string())?;
    ensure!(l.exact() == Some(1), "lind (xy,zt) = {} ({:?})", l.value, l.status);

    for n in [2usize, 3] {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let r = ring(&refs, &[]);
        let sq: Vec<String> = names.iter().map(|v| format!("{v}^2")).collect();
        let sqr: Vec<&str> = sq.iter().map(|s| s.as_str()).collect();
        let q = ideal(&r, &sqr).quotient_module();
        let res = resolve(&q, n + 2).map_err(|e| e.to_string())?;
        let b = res.betti();
        for i in 0..=n {
            ensure!(b.get(i, 2 * i as i32) as u64 == binomial(n as u64, i as u64), "beta_{i} of the squares, n = {n}");
        }
        let l = lind_from_resolution(&res, n + 1).map_err(|e| e.to_string())?;
        ensure!(l.exact() == Some(n), "lind for n = {n}: {} ({:?})", l.value, l.status);
    }
    ensure!(start.elapsed() < Duration::from_secs(20), "took {:?}", start.elapsed());
    Ok("1, 1, (xy,zt): lind 1 pd 1 reg 3, squares: 2 and 3".into())
}

fn criterion_6() -> Outcome {
    let mut s = Sampler::new(6, field());
    let mut disagreements = Vec::new();
    let mut escalated = 0;
    for _ in 0..50 {
        let n = s.rng().gen_range(1..=3);
        let r = s.quadric_ring(n, 1).map_err(|e| e.to_string())?;
        let m = s.small_module(&r).map_err(|e| e.to_string())?;
        let a = analyze(&m, 4, 4).map_err(|e| e.to_string())?;
        if a.sega.s_max > 4 {
            escalated += 1;
        }
        if !a.agree {
            disagreements.push(format!("{:?} vs {}", a.lind.windowed(4), a.sega.bound));
        }
    }
    ensure!(disagreements.is_empty(), "disagreements: {disagreements:?}");
    Ok(format!("50 modules, 0 disagreements, {escalated} escalated"))
}

fn pure_guard() -> Outcome {
    let r = ring(&["x", "y", "z"], &[]);
    let m = ideal(&r, &["x^2", "y^2"]).as_module();
    let p = ideal(&r, &["x^2", "y^2", "x*z"]).as_module();
    let ses = ShortExactSequence::new(m, p).map_err(|e| e.to_string())?;
    let rep = analyze_ses(&ses, 4, 3).map_err(|e| e.to_string())?;
    ensure!(rep.pure_extension.failing_condition.as_deref() == Some("M is not Koszul"), "pure: {:?}", rep.pure_extension.failing_condition);
    ensure!(rep.pure_extension.verdict == Verdict::Inconclusive, "pure verdict {:?}", rep.pure_extension.verdict);
    ensure!(rep.lind_p.exact() == Some(1), "lind P' = {:?}", rep.lind_p.exact());
    // N' is generated by xz with annihilator (x, y^2): the Koszul complex
    // on x, y^2 has a quadratic entry, so lind N' = 1.
    let oracle = ideal(&r, &["x", "y^2"]).quotient_module();
    let lo = linearity_defect(&oracle, 4).map_err(|e| e.to_string())?;
    ensure!(rep.lind_n.exact() == lo.exact() && lo.exact() == Some(1), "lind N' = {:?}", rep.lind_n.exact());
    Ok("pure refused (M is not Koszul)".into())
}

fn roos_guard() -> Outcome {
    let r = roos_ring();
    let shifts = vec![1, 1, 1];
    let cols = roos_columns(&r);
    let d = kernel_generators(&r, &shifts, &cols, &[0, 0], &[]).map_err(|e| e.to_string())?;
    let units: Vec<FreeVector> = (0..3)
        .map(|c| {
            let mut e = vec!["0"; 3];
            e[c] = "1";
            vector(&r, &e)
        })
        .collect();
    let quadrics = ["x^2", "x*y", "x*z", "x*t", "y^2", "y*z", "y*t", "z^2", "z*t", "t^2"];
    let mut rels = Vec::new();
    for c in 0..3 {
        for q in quadrics {
            let mut e = vec!["0"; 3];
            e[c] = q;
            rels.push(vector(&r, &e));
        }
    }
    let p = GradedModule::subquotient(&r, shifts.clone(), units, rels.clone()).map_err(|e| e.to_string())?;
    let m = GradedModule::subquotient(&r, shifts, d, rels).map_err(|e| e.to_string())?;
    let ses = ShortExactSequence::new(m, p).map_err(|e| e.to_string())?;
    ensure!(ses.is_small().map_err(|e| e.to_string())?, "D is not inside mP");
    let rep = analyze_ses(&ses, 4, 3).map_err(|e| e.to_string())?;
    ensure!(rep.small_inclusion.failing_condition.as_deref() == Some("P is not Koszul"), "small: {:?}", rep.small_inclusion.failing_condition);
    ensure!(rep.lind_p.exact() == Some(1), "lind (R/m^2)^3 = {:?}", rep.lind_p.exact());
    ensure!(rep.lind_n.status == Status::AtLeast, "lind N status {:?}", rep.lind_n.status);
    ensure!(rep.pure_extension.verdict == Verdict::Inconclusive, "pure verdict {:?}", rep.pure_extension.verdict);
    Ok(format!("small refused (P is not Koszul), lind N >= {}", rep.lind_n.value))
}

fn periodic_guard() -> Outcome {
    let r = ring(&["x", "y"], &["x*y"]);
    let m = ideal(&r, &["x^3", "y^2"]).as_module();
    let p = ideal(&r, &["x^2", "y^2"]).as_module();
    let ses = ShortExactSequence::new(m, p).map_err(|e| e.to_string())?;
    let rep = analyze_ses(&ses, 5, 3).map_err(|e| e.to_string())?;
    for (name, d) in [("d_M", &rep.d_m), ("d_P", &rep.d_p), ("d_N", &rep.d_n)] {
        ensure!(d.zero.iter().all(|&z| !z) && !d.value.is_exact(), "{name} = {:?}", d);
    }
    ensure!(lind_is_zero(&rep.lind_m) && lind_is_zero(&rep.lind_p), "M or P not Koszul in window");
    ensure!(rep.lind_n.exact() == Some(0), "lind N = {:?}", rep.lind_n.exact());
    ensure!(rep.violations().is_empty(), "violations {:?}", rep.violations());
    Ok("d_M, d_P, d_N nonzero at every tested index".into())
}

fn criterion_7() -> Outcome {
    let mut s = Sampler::new(7, field());
    let (mut certified, mut tried, mut pure, mut small) = (0, 0, 0, 0);
    while certified < 100 {
        tried += 1;
        ensure!(tried <= 2000, "only {certified} certified sequences in {tried} draws");
        let n = s.rng().gen_range(2..=3);
        let r = if s.rng().gen_bool(0.7) { s.polynomial_ring(n) } else { s.quadric_ring(n, 2).map_err(|e| e.to_string())? };
        let mode = s.choose_mode();
        let Some(ses) = s.ses(&r, mode).map_err(|e| e.to_string())? else { continue };
        let rep = analyze_ses(&ses, n + 2, 3).map_err(|e| e.to_string())?;
        let v = rep.violations();
        ensure!(v.is_empty(), "violations {v:?}");
        if !rep.certified {
            continue;
        }
        certified += 1;
        for q in &rep.inequalities {
            ensure!(q.verdict == Verdict::Holds, "inequality {} is {:?}", q.label, q.verdict);
        }
        for (t, count) in [(&rep.pure_extension, &mut pure), (&rep.small_inclusion, &mut small)] {
            if t.failing_condition.is_none() {
                ensure!(t.verdict == Verdict::Holds, "theorem verdict {:?}", t);
                ensure!(t.criterion_verdict != Verdict::Violated, "criterion violated");
                *count += 1;
            }
        }
    }
    let guards = [pure_guard()?, roos_guard()?, periodic_guard()?];
    Ok(format!("{certified} certified of {tried}; pure applied {pure}, small applied {small}; guards: {}", guards.join("; ")))
}

fn member(r: &GradedRing, name: &str, gens: &[&str]) -> FiltrationMember {
    FiltrationMember {
        name: name.into(),
        ideal: ideal(r, gens),
        chain: gens.iter().map(|g| r.parse_poly(g).unwrap()).collect(),
    }
}

fn criterion_8() -> Outcome {
    let r = ring(&["x", "y"], &[]);
    let f = FiltrationSpec { ring: r.clone(), members: vec![member(&r, "0", &[]), member(&r, "X", &["x"]), member(&r, "M", &["x", "y"])] };
    let rep = verify_koszul_filtration(&f, 4, 4).map_err(|e| e.to_string())?;
    ensure!(rep.valid && rep.conclusion_verdict == Verdict::Holds, "k[x,y] filtration: valid {} {:?}", rep.valid, rep.conclusion_verdict);
    ensure!(rep.residue_field.as_ref().is_some_and(lind_is_zero), "lind k over k[x,y]");

    let r = ring(&["x", "y"], &["x*y"]);
    let f = FiltrationSpec {
        ring: r.clone(),
        members: vec![member(&r, "0", &[]), member(&r, "X", &["x"]), member(&r, "Y", &["y"]), member(&r, "M", &["x", "y"])],
    };
    let rep = verify_koszul_filtration(&f, 4, 4).map_err(|e| e.to_string())?;
    ensure!(rep.valid && rep.conclusion_verdict == Verdict::Holds, "k[x,y]/(xy) filtration: valid {} {:?}", rep.valid, rep.conclusion_verdict);
    ensure!(rep.conclusions.iter().all(|c| lind_is_zero(&c.lind)), "a member has lind != 0");
    ensure!(rep.residue_field.as_ref().is_some_and(lind_is_zero), "lind k over k[x,y]/(xy)");

    let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
    for q in [Ideal::maximal(&r), Ideal::zero(&r)] {
        let c = conca_gen_filtration(&r, &q, &[], &[GradedModule::residue_field(&r)], 4, 4).map_err(|e| e.to_string())?;
        ensure!(c.accepted, "q = {} rejected: {:?}", q.format(), c.failing_identity);
        ensure!(c.filtration.as_ref().is_some_and(|f| f.valid && f.conclusion_verdict == Verdict::Holds), "q = {} filtration", q.format());
    }

    let r = ring(&["x", "y"], &["x^2", "y^2"]);
    let c = conca_gen_filtration(&r, &ideal(&r, &["x+y"]), &[], &[], 4, 4).map_err(|e| e.to_string())?;
    ensure!(!c.accepted && c.failing_identity.as_deref() == Some("q^2 = 0"), "q = (x+y): {:?}", c.failing_identity);
    let r = ring(&["x", "y"], &["x^2", "x*y", "y^3"]);
    let c = conca_gen_filtration(&r, &ideal(&r, &["x"]), &[], &[], 4, 4).map_err(|e| e.to_string())?;
    ensure!(!c.accepted && c.failing_identity.as_deref() == Some("m^2 = q*m"), "q = (x): {:?}", c.failing_identity);
    Ok("both hand filtrations valid; Conca accepts q = m, 0 and rejects q^2 = 0, m^2 = q*m".into())
}

fn criterion_9() -> Outcome {
    let r = ring(&["x", "y"], &[]);
    let m = ideal(&r, &["x", "y"]).as_module();
    let rep = linear_quotients(&m, &[vector(&r, &["x"]), vector(&r, &["y"])], 4).map_err(|e| e.to_string())?;
    let res = resolve(&m, 3).map_err(|e| e.to_string())?;
    ensure!(res.rank(0) as u64 == binomial(2, 1) && res.rank(1) as u64 == binomial(2, 2), "Betti numbers of m");
    ensure!(rep.has_linear_quotients && rep.betti_additivity == Verdict::Holds && rep.regularity_formula == Verdict::Holds, "m = (x,y): {rep:?}");

    let m = ideal(&r, &["x^2", "x*y"]).as_module();
    let rep = linear_quotients(&m, &[vector(&r, &["x^2"]), vector(&r, &["x*y"])], 4).map_err(|e| e.to_string())?;
    ensure!(rep.koszul_verdict == Verdict::Holds && rep.betti_additivity == Verdict::Holds && rep.regularity_formula == Verdict::Holds, "(x^2,xy): {rep:?}");

    let mut s = Sampler::new(9, field());
    let (mut runs, mut successes) = (0, 0);
    while runs < 30 {
        let n = s.rng().gen_range(2..=3);
        let r = s.polynomial_ring(n);
        let i = s.ideal(&r, 3, 2, true).map_err(|e| e.to_string())?;
        if i.is_zero() {
            continue;
        }
        runs += 1;
        let m = i.as_module();
        let order = m.minimal_generators();
        let rep = linear_quotients(&m, &order, 4).map_err(|e| e.to_string())?;
        if rep.has_linear_quotients {
            successes += 1;
            ensure!(rep.betti_additivity == Verdict::Holds && rep.regularity_formula == Verdict::Holds, "{}: {rep:?}", i.format());
        }
    }
    Ok(format!("m = (x,y): beta = (2,1); (x^2,xy) Koszul; {successes} of {runs} random runs had linear quotients, formulas exact"))
}

fn criterion_10() -> Outcome {
    let mut s = Sampler::new(10, field());
    for _ in 0..20 {
        let n = s.rng().gen_range(2..=6);
        let r = s.polynomial_ring(n);
        let ids: Vec<Ideal> = (0..3).map(|_| s.linear_ideal(&r, 3)).collect::<Result<_>>().map_err(|e| e.to_string())?;
        let rep = three_ideals(&ids[0], &ids[1], &ids[2], n).map_err(|e| e.to_string())?;
        ensure!(rep.theorem_applies && lind_is_zero(&rep.lind), "lind of {} = {} ({:?})", rep.intersection, rep.lind.value, rep.lind.status);
        ensure!(rep.regularity.value.is_some_and(|v| v <= 3), "reg of {} = {:?}", rep.intersection, rep.regularity);
        ensure!(rep.verdict == Verdict::Holds, "verdict {:?}", rep.verdict);
    }
    let sp = special_three_ideals(field(), 2, 2, 0, 2, 4).map_err(|e| e.to_string())?;
    let r = ring(&["x1", "x2", "y1", "y2"], &[]);
    let minor = ideal(&r, &["x1*y2 - x2*y1"]);
    let h2 = reparse(&r, &sp.degree_two_component);
    ensure!(sp.minors_identity == Some(true) && h2.equals(&minor).map_err(|e| e.to_string())?, "H_<2> = {}", sp.degree_two_component);
    ensure!(lind_is_zero(&sp.lind), "special lind {}", sp.lind.value);

    let r = ring(&["x", "y", "z", "t"], &[]);
    let four = [ideal(&r, &["x", "z"]), ideal(&r, &["x", "t"]), ideal(&r, &["y", "z"]), ideal(&r, &["y", "t"])];
    let rep = linear_intersection(&four, 4).map_err(|e| e.to_string())?;
    ensure!(ideal(&r, &["x*y", "z*t"]).equals(&reparse(&r, &rep.intersection)).map_err(|e| e.to_string())?, "intersection {}", rep.intersection);
    ensure!(!rep.theorem_applies && rep.lind.exact() == Some(1), "four ideals: lind {} applies {}", rep.lind.value, rep.theorem_applies);
    Ok(format!("20 triples lind 0 reg <= 3; H_<2> = {}; four ideals lind 1", sp.degree_two_component))
}

fn criterion_11() -> Outcome {
    let mut s = Sampler::new(11, field());
    let mut done = 0;
    while done < 20 {
        let n = s.rng().gen_range(2..=4);
        let r = s.polynomial_ring(n);
        let j = s.linear_ideal(&r, n - 1).map_err(|e| e.to_string())?;
        let sr = r.quotient(j.generators()).map_err(|e| e.to_string())?;
        let module = s.small_module(&sr).map_err(|e| e.to_string())?;
        if module.is_zero() {
            continue;
        }
        let rep = change_of_rings(&r, &j, &module, 4).map_err(|e| e.to_string())?;
        ensure!(rep.lind_r_s.exact() == Some(0) && rep.theorem_applies, "lind_R S = {:?}", rep.lind_r_s.exact());
        ensure!(rep.lind_r_n.is_exact() && rep.lind_r_n.exact() == rep.lind_s_n.exact(), "lind_R N {:?} vs lind_S N {:?}", rep.lind_r_n, rep.lind_s_n);
        ensure!(rep.equality == Verdict::Holds, "equality {:?}", rep.equality);
        ensure!(rep.regularity_relations.iter().all(|q| q.verdict != Verdict::Violated), "regularity {:?}", rep.regularity_relations);
        done += 1;
    }
    let r = ring(&["x", "y"], &[]);
    for (g, k_at_least) in [("x^3", true), ("x^2", false)] {
        let j = ideal(&r, &[g]);
        let sr = r.quotient(j.generators()).map_err(|e| e.to_string())?;
        let rep = change_of_rings(&r, &j, &GradedModule::residue_field(&sr), 4).map_err(|e| e.to_string())?;
        ensure!(rep.lind_r_s.exact() == Some(1) && !rep.theorem_applies, "S = R/({g}): lind_R S {:?}", rep.lind_r_s.exact());
        ensure!(rep.equality == Verdict::Inconclusive, "S = R/({g}): equality asserted");
        if k_at_least {
            ensure!(rep.lind_s_n.status == Status::AtLeast && rep.lind_r_n.exact() == Some(0), "S = R/(x^3): lind_S k {:?}, lind_R k {:?}", rep.lind_s_n, rep.lind_r_n);
        }
    }
    Ok("20 instances with lind_R N = lind_S N; guards R/(x^3), R/(x^2) report lind_R S = 1".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("periodic resolution", criterion_1, 1),
        ("Tor dimensions", criterion_2, 5),
        ("Roos ring", criterion_3, 60),
        ("hypersurface witnesses", criterion_4, 120),
        ("small examples", criterion_5, 20),
        ("Sega cross-validation", criterion_6, 300),
        ("SES fuzzing", criterion_7, 600),
        ("filtrations", criterion_8, 120),
        ("linear quotients", criterion_9, 120),
        ("three ideals", criterion_10, 300),
        ("change of rings", criterion_11, 300),
    ];
    let mut failed = 0;
    for (idx, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > Duration::from_secs(*limit) {
            outcome = Err(format!("took {elapsed:.2?}, limit {limit}s"));
        }
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}) [{elapsed:.2?}]", idx + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}) [{elapsed:.2?}]", idx + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
