use lindef::lindefect::{componentwise_linear, is_koszul, linear_part};
use lindef::structure::{
    analyze_ses, change_of_rings, check_small_inclusion, linear_quotients, verify_koszul_filtration, FiltrationMember,
    FiltrationSpec, ShortExactSequence, Verdict,
};
use lindef::*;

fn ring(vars: &[&str], rels: &[&str]) -> GradedRing {
    GradedRing::parse(PrimeField::default(), vars, rels).unwrap()
}

fn ideal(r: &GradedRing, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn member(r: &GradedRing, name: &str, chain: &[&str]) -> FiltrationMember {
    let chain: Vec<Polynomial> = chain.iter().map(|c| r.parse_poly(c).unwrap()).collect();
    FiltrationMember { name: name.into(), ideal: Ideal::new(r, chain.clone()).unwrap(), chain }
}

#[test]
fn four_primes_intersect_to_two_quadrics() {
    let r = ring(&["x", "y", "z", "t"], &[]);
    let h = ideal(&r, &["x", "z"])
        .intersect(&ideal(&r, &["x", "t"]))
        .and_then(|a| a.intersect(&ideal(&r, &["y", "z"])))
        .and_then(|a| a.intersect(&ideal(&r, &["y", "t"])))
        .unwrap();
    assert!(h.equals(&ideal(&r, &["x*y", "z*t"])).unwrap());
    let m = h.as_module();
    assert_eq!(m.generator_degrees(), vec![2, 2]);
    let res = resolve(&m, 3).unwrap();
    assert_eq!((res.rank(0), res.rank(1), res.rank(2)), (2, 1, 0));
    assert!(res.terminated());
    let lin = linear_part(&res).unwrap();
    assert!(lin.differential(1).iter().all(|c| c.is_zero()));
    assert_eq!(linearity_defect(&m, 3).unwrap().exact(), Some(1));
    assert!(!componentwise_linear(&m, 3).unwrap().componentwise_linear);
}

#[test]
fn minors_identity_and_membership() {
    let r = ring(&["x1", "x2", "y1", "y2"], &[]);
    let f = r.parse_poly("x1*y2 - x2*y1").unwrap();
    assert!(ideal(&r, &["x1+y1", "x2+y2"]).contains(&f).unwrap());
    let h = ideal(&r, &["x1", "x2"])
        .intersect(&ideal(&r, &["y1", "y2"]))
        .and_then(|a| a.intersect(&ideal(&r, &["x1+y1", "x2+y2"])))
        .unwrap();
    let h2 = h.truncate_component(2);
    assert!(h2.equals(&Ideal::new(&r, vec![f]).unwrap()).unwrap());
    let k = is_koszul(&h.as_module(), 4).unwrap();
    assert!(k.koszul);
    let res = resolve(&h.as_module(), 4).unwrap();
    assert!(res.invariants().regularity.value.unwrap() <= 3);
}

#[test]
fn pure_extension_guard_refuses() {
    let r = ring(&["x", "y", "z"], &[]);
    let m = ideal(&r, &["x^2", "y^2"]).as_module();
    let p = ideal(&r, &["x^2", "y^2", "x*z"]).as_module();
    let ses = ShortExactSequence::new(m.clone(), p).unwrap();
    assert!(!is_koszul(&m, 4).unwrap().koszul);
    let rep = analyze_ses(&ses, 4, 3).unwrap();
    assert_eq!(rep.pure_extension.verdict, Verdict::Inconclusive);
    assert_eq!(rep.lind_p.exact(), Some(1));
    assert!(rep.violations().is_empty());
}

#[test]
fn syzygy_inclusion_into_a_free_module() {
    let r = ring(&["x", "y"], &[]);
    let n = ideal(&r, &["x^2"]).quotient_module();
    let res = resolve(&n, 3).unwrap();
    let omega = res.syzygy_module(1).unwrap();
    let ses = ShortExactSequence::new(omega, GradedModule::free(&r, vec![0])).unwrap();
    assert!(ses.is_small().unwrap());
    let check = check_small_inclusion(&ses, 3, 3).unwrap();
    assert_ne!(check.verdict, Verdict::Violated);
    let rep = analyze_ses(&ses, 3, 3).unwrap();
    assert_eq!(rep.lind_m.exact(), Some(0));
    assert_eq!(rep.lind_n.exact(), Some(1));
}

#[test]
fn maximal_ideal_times_a_koszul_module() {
    let r = ring(&["x", "y", "z"], &[]);
    let m = ideal(&r, &["x", "y"]).as_module();
    let mm = m.power_times(1);
    let ses = ShortExactSequence::new(mm.clone(), m).unwrap();
    let rep = analyze_ses(&ses, 4, 3).unwrap();
    assert!(rep.violations().is_empty());
    assert_eq!(rep.lind_m.exact(), Some(0));
    assert!(is_koszul(&mm, 4).unwrap().koszul);
}

#[test]
fn restriction_to_a_hyperplane() {
    let r = ring(&["x", "y", "z"], &[]);
    let j = ideal(&r, &["z"]);
    let s = r.quotient(j.generators()).unwrap();
    let n = ideal(&s, &["x^2"]).quotient_module();
    let rep = change_of_rings(&r, &j, &n, 4).unwrap();
    assert_eq!(rep.lind_r_s.exact(), Some(0));
    assert!(rep.theorem_applies);
    assert_eq!(rep.lind_r_n.exact(), Some(1));
    assert_eq!(rep.lind_s_n.exact(), Some(1));
    assert_eq!(rep.equality, Verdict::Holds);
    assert!(rep.regularity_relations.iter().all(|q| q.verdict != Verdict::Violated));
}

#[test]
fn filtrations_of_small_rings() {
    let r = ring(&["x", "y"], &[]);
    let spec = FiltrationSpec {
        ring: r.clone(),
        members: vec![member(&r, "0", &[]), member(&r, "x", &["x"]), member(&r, "m", &["x", "y"])],
    };
    let rep = verify_koszul_filtration(&spec, 3, 3).unwrap();
    assert!(rep.valid);
    assert_eq!(rep.residue_field.unwrap().exact(), Some(0));

    let r = ring(&["x", "y"], &["x*y"]);
    let spec = FiltrationSpec {
        ring: r.clone(),
        members: vec![
            member(&r, "0", &[]),
            member(&r, "x", &["x"]),
            member(&r, "y", &["y"]),
            member(&r, "m", &["x", "y"]),
        ],
    };
    let rep = verify_koszul_filtration(&spec, 4, 3).unwrap();
    assert!(rep.valid);
    assert_ne!(rep.conclusion_verdict, Verdict::Violated);
    assert!(rep.conclusions.iter().all(|c| c.lind.value == 0));
}

#[test]
fn linear_quotients_of_monomial_ideals() {
    let r = ring(&["x", "y"], &[]);
    let m = ideal(&r, &["x", "y"]).as_module();
    let rep = linear_quotients(&m, m.generators(), 3).unwrap();
    assert!(rep.has_linear_quotients);
    assert_eq!(rep.betti_additivity, Verdict::Holds);
    assert_eq!(rep.steps[1].colon, "(x)");

    let m = ideal(&r, &["x^2", "x*y"]).as_module();
    let rep = linear_quotients(&m, m.generators(), 3).unwrap();
    assert!(rep.has_linear_quotients);
    assert_eq!(rep.koszul_verdict, Verdict::Holds);
    assert_eq!(rep.regularity_formula, Verdict::Holds);
}

#[test]
fn componentwise_linear_mixed_degrees() {
    let r = ring(&["x", "y"], &[]);
    let m = ideal(&r, &["x", "y^2"]).as_module();
    assert!(componentwise_linear(&m, 3).unwrap().componentwise_linear);
    assert!(is_koszul(&m, 3).unwrap().koszul);
}
