use std::collections::HashMap;

use lindef::graded::{apply, kernel_generators, kernel_generators_in};
use lindef::groebner::{buchberger, buchberger_in, normal_form, syzygy_basis, TermOrder};
use lindef::lindefect::{analyze, is_koszul, lind_from_resolution, linear_part, sega_from_resolution};
use lindef::linalg;
use lindef::random::Sampler;
use lindef::structure::analyze_ses;
use lindef::*;
use proptest::prelude::*;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn sampler(seed: u64) -> Sampler {
    Sampler::new(seed, PrimeField::default())
}

fn small_ring(s: &mut Sampler) -> GradedRing {
    let n = s.rng().gen_range(2..=3);
    if s.rng().gen_bool(0.5) {
        s.polynomial_ring(n)
    } else {
        s.quadric_ring(n, 2).unwrap()
    }
}

/// `dim_k (S/I)_d` by Gaussian elimination on the monomial multiples of the
/// generators.
fn hilbert_by_elimination(r: &GradedRing, d: u32) -> usize {
    let n = r.nvars();
    let monos = Monomial::all_of_degree(n, d);
    let index: HashMap<Monomial, u32> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i as u32)).collect();
    let poly = r.poly();
    let mut cols = Vec::new();
    for g in r.defining_ideal() {
        let Some(dg) = g.homogeneous_degree() else { continue };
        if dg > d {
            continue;
        }
        for mu in Monomial::all_of_degree(n, d - dg) {
            let f = poly.mul_term(g, &mu, 1);
            let mut v: Vec<(u32, u32)> = f.terms().iter().map(|(m, c)| (index[m], *c)).collect();
            v.sort();
            cols.push(v);
        }
    }
    monos.len() - linalg::rank(poly.field(), monos.len(), &cols)
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn groebner_bases_pass_the_pair_criterion(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let r = small_ring(&mut s);
        let homog = s.rng().gen_bool(0.5);
        let i = s.ideal(&r, 3, 3, homog).unwrap();
        let gens: Vec<FreeVector> = i.generators().iter().map(|g| FreeVector::new(vec![g.clone()])).collect();
        let gb = buchberger(&gens, &[0], &r).unwrap();
        prop_assert!(gb.verify());
        for g in &gens {
            prop_assert!(normal_form(g, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_sound(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let r = small_ring(&mut s);
        let rank = s.rng().gen_range(1..=2);
        let shifts = vec![0; rank];
        let gens: Vec<FreeVector> = (0..3).map(|_| s.vector(&r, &shifts, 2, true)).filter(|v| !v.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = buchberger(&gens, &shifts, &r).unwrap();
        let v = s.vector(&r, &shifts, 3, false);
        let once = normal_form(&v, &gb).unwrap();
        prop_assert_eq!(normal_form(&once, &gb).unwrap(), once);
        // a random combination of the generators reduces to zero
        let mut w = FreeVector::zero(rank);
        for g in &gens {
            let c = s.form(&r, 1, 2);
            for (a, b) in w.entries.iter_mut().zip(&g.entries) {
                *a = r.add(a, &r.mul(&c, b));
            }
        }
        prop_assert!(normal_form(&w, &gb).unwrap().is_zero());
    }

    #[test]
    fn syzygies_are_sound_and_complete(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let r = small_ring(&mut s);
        let i = s.ideal(&r, 4, 3, true).unwrap();
        let gens: Vec<FreeVector> = i.generators().iter().map(|g| FreeVector::new(vec![g.clone()])).collect();
        prop_assume!(!gens.is_empty());
        let degs: Vec<i32> = gens.iter().map(|g| g.degree(&[0]).unwrap()).collect();
        let syz = syzygy_basis(&gens, &[0], &r).unwrap();
        for z in &syz {
            prop_assert!(r.reduce(&apply(&r, &gens, 1, z).entries[0]).is_zero());
        }
        // every syzygy found degree by degree lies in the computed module
        let brute = kernel_generators(&r, &degs, &gens, &[0], &[]).unwrap();
        let module = GradedModule::submodule(&r, degs.clone(), syz).unwrap();
        for z in &brute {
            prop_assert!(module.contains(z).unwrap());
        }
    }

    #[test]
    fn induced_order_gives_the_same_kernel(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let n = s.rng().gen_range(2..=4);
        let r = s.polynomial_ring(n);
        let homog = s.rng().gen_bool(0.5);
        let i = s.ideal(&r, 4, 2, homog).unwrap();
        let m = i.as_module();
        let gens = m.minimal_generators();
        prop_assume!(!gens.is_empty());
        let degs: Vec<i32> = gens.iter().map(|g| g.degree(&[0]).unwrap()).collect();
        let syz = kernel_generators(&r, &degs, &gens, &[0], &[]).unwrap();
        prop_assume!(!syz.is_empty());
        let sdeg: Vec<i32> = syz.iter().map(|z| z.degree(&degs).unwrap()).collect();
        let a = kernel_generators(&r, &sdeg, &syz, &degs, &[]).unwrap();
        let b = kernel_generators_in(&r, &sdeg, &syz, &degs, &[], TermOrder::schreyer(&gens, r.poly())).unwrap();
        let ma = GradedModule::submodule(&r, sdeg.clone(), a).unwrap();
        let mb = GradedModule::submodule(&r, sdeg.clone(), b).unwrap();
        prop_assert!(ma.equals(&mb).unwrap());
        let gb = buchberger_in(&syz, &degs, &r, TermOrder::schreyer(&gens, r.poly())).unwrap();
        prop_assert!(gb.verify());
    }

    #[test]
    fn hilbert_function_matches_elimination(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let n = s.rng().gen_range(2..=4);
        let r = s.quadric_ring(n, 3).unwrap();
        for d in 0..=4 {
            prop_assert_eq!(r.hilbert_function(d as i32), hilbert_by_elimination(&r, d));
        }
    }

    #[test]
    fn ideal_operations_are_consistent(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let r = small_ring(&mut s);
        let i = s.ideal(&r, 2, 2, true).unwrap();
        let j = s.ideal(&r, 2, 2, true).unwrap();
        let both = i.intersect(&j).unwrap();
        prop_assert!(both.is_subset_of(&i).unwrap());
        prop_assert!(both.is_subset_of(&j).unwrap());
        let f = s.form(&r, 1, 2);
        prop_assume!(!r.reduce(&f).is_zero());
        let c = i.colon(&f).unwrap();
        for g in c.generators() {
            prop_assert!(i.contains(&r.mul(g, &f)).unwrap());
        }
        prop_assert!(i.is_subset_of(&c).unwrap());
    }

    #[test]
    fn minimal_generators_are_minimal(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let r = small_ring(&mut s);
        let m = s.small_module(&r).unwrap();
        let gens = m.minimal_generators();
        let mm = m.power_times(1);
        for k in 0..gens.len() {
            let others: Vec<FreeVector> = gens.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
            let rest = GradedModule::subquotient(&r, m.shifts().to_vec(), others, m.relations().to_vec()).unwrap();
            let span = rest.plus(&mm).unwrap();
            prop_assert!(!span.contains(&gens[k]).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn resolutions_are_minimal_complexes(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let n = s.rng().gen_range(2..=4);
        let r = if s.rng().gen_bool(0.5) { s.polynomial_ring(n) } else { s.quadric_ring(n.min(3), 2).unwrap() };
        let m = if s.rng().gen_bool(0.5) {
            s.ideal(&r, 4, 3, true).unwrap().quotient_module()
        } else {
            s.cokernel(&r, 2, 3, 2, true).unwrap()
        };
        let res = resolve(&m, 4).unwrap();
        prop_assert!(res.is_complex());
        prop_assert!(res.is_minimal());
        // beta_{i,j} equals dim Tor_i(k, M)_j from the tensor-with-k side
        let sega = sega_from_resolution(&res, 3, 1);
        let b = res.betti();
        for i in 0..=3 {
            for j in 0..=8 {
                prop_assert_eq!(b.get(i, j), sega.tor_dim_in_degree(i, 1, j));
            }
        }
        let inv = res.invariants();
        prop_assert_eq!(inv.projective_dimension.status == Status::Exact, res.terminated());
    }

    #[test]
    fn linear_part_invariants(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let r = small_ring(&mut s);
        let m = s.small_module(&r).unwrap();
        let res = resolve(&m, 5).unwrap();
        let lin = linear_part(&res).unwrap();
        prop_assert!(lin.is_complex());
        prop_assert!(lin.all_entries_linear());
        let l = lind_from_resolution(&res, 4).unwrap();
        let pd = res.invariants().projective_dimension;
        if l.is_exact() && pd.status == Status::Exact {
            prop_assert!(l.value as i32 <= pd.value.unwrap_or(0));
        }
    }

    #[test]
    fn sega_agrees_with_the_linear_part(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let n = s.rng().gen_range(1..=3);
        let r = s.quadric_ring(n, 1).unwrap();
        let m = s.small_module(&r).unwrap();
        let a = analyze(&m, 4, 2).unwrap();
        prop_assert!(a.agree, "linear part {} vs Sega {}", a.lind.windowed(4), a.sega.bound);
    }

    #[test]
    fn syzygy_law(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let n = s.rng().gen_range(2..=3);
        let r = s.polynomial_ring(n);
        let nmod = if s.rng().gen_bool(0.5) { s.small_module(&r).unwrap() } else { s.cokernel(&r, 2, 3, 2, true).unwrap() };
        let res = resolve(&nmod, 6).unwrap();
        let ln = lind_from_resolution(&res, 5).unwrap();
        let omega = res.syzygy_module(1).unwrap();
        let lm = linearity_defect(&omega, 5).unwrap();
        if let (Some(a), Some(b)) = (ln.exact(), lm.exact()) {
            if a >= 1 {
                prop_assert_eq!(b, a - 1);
            } else {
                prop_assert_eq!(b, 0);
            }
        }
    }

    #[test]
    fn maximal_ideal_keeps_koszul_modules_koszul(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let n = s.rng().gen_range(2..=3);
        let r = s.polynomial_ring(n);
        let i = s.linear_ideal(&r, 2).unwrap();
        let m = if s.rng().gen_bool(0.5) { i.as_module() } else { i.quotient_module() };
        let k = is_koszul(&m, 4).unwrap();
        prop_assume!(k.koszul && k.status == Status::Exact);
        let mm = m.power_times(1);
        let kk = is_koszul(&mm, 4).unwrap();
        prop_assert!(kk.koszul, "m*M is not Koszul");
    }

    #[test]
    fn short_exact_sequences_have_no_violations(seed in any::<u64>()) {
        let mut s = sampler(seed);
        let n = s.rng().gen_range(2..=3);
        let r = if s.rng().gen_bool(0.7) { s.polynomial_ring(n) } else { s.quadric_ring(n, 2).unwrap() };
        let mode = s.choose_mode();
        let Some(ses) = s.ses(&r, mode).unwrap() else { return Ok(()) };
        let rep = analyze_ses(&ses, n + 2, 3).unwrap();
        prop_assert!(rep.violations().is_empty(), "{:?}", rep.violations());
        prop_assert!(rep.les_consistent);
    }
}
