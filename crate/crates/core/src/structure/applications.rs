//! Linear quotients, change of rings, and intersections of linear ideals.

use serde::Serialize;

use super::{compare_le, Interval, Verdict};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::FreeVector;
use crate::lindefect::{lind_from_resolution, ring_is_certified_koszul, LindResult};
use crate::module::{GradedModule, Ideal};
use crate::resolution::{resolve, Bounded, MinimalResolution, Status};
use crate::ring::GradedRing;

#[derive(Clone, Debug, Serialize)]
pub struct QuotientStep {
    pub index: usize,
    pub degree: i32,
    pub colon: String,
    pub lind: LindResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearQuotientsReport {
    pub steps: Vec<QuotientStep>,
    /// Every `R/I_i` is Koszul in the window.
    pub has_linear_quotients: bool,
    pub module_lind: LindResult,
    pub koszul_verdict: Verdict,
    pub betti_additivity: Verdict,
    pub regularity: Option<i32>,
    pub predicted_regularity: Option<i32>,
    pub regularity_formula: Verdict,
    pub projective_dimension_formula: Verdict,
}

/// `max(j - i)` over the computed Betti numbers.
fn windowed_regularity(res: &MinimalResolution, h: usize) -> Option<i32> {
    (0..res.len().min(h + 1)).flat_map(|i| res.shifts(i).iter().map(move |&s| s - i as i32)).max()
}

/// Colon ideals `I_i = (m_1, .., m_{i-1}) : m_i` along an ordered minimal
/// generating set, with the Betti and regularity formulas checked against
/// the resolution of `m`.
pub fn linear_quotients(m: &GradedModule, ordered: &[FreeVector], h: usize) -> Result<LinearQuotientsReport> {
    let ring = m.ring();
    for g in ordered {
        if !m.contains(g)? {
            return Err(Error::Invalid(format!("{} is not an element of the module", m.format_vector(g))));
        }
    }
    let span = GradedModule::subquotient(ring, m.shifts().to_vec(), ordered.to_vec(), m.relations().to_vec())?;
    if !m.is_submodule_of(&span)? || ordered.len() != m.num_generators() {
        return Err(Error::Invalid("not a minimal generating set".into()));
    }

    let mut steps = Vec::new();
    let mut quotients = Vec::new();
    for (i, g) in ordered.iter().enumerate() {
        let prev = GradedModule::subquotient(ring, m.shifts().to_vec(), ordered[..i].to_vec(), m.relations().to_vec())?;
        let colon = prev.colon_element(g)?;
        let res = resolve(&colon.quotient_module(), h + 1)?;
        let lind = lind_from_resolution(&res, h)?;
        let degree = g.degree(m.shifts()).unwrap_or(0);
        steps.push(QuotientStep { index: i + 1, degree, colon: colon.format(), lind });
        quotients.push((degree, res));
    }
    let res_m = resolve(m, h + 1)?;
    let module_lind = lind_from_resolution(&res_m, h)?;
    let has_linear_quotients = steps.iter().all(|s| s.lind.nonzero_homology_indices.is_empty());

    let regularity = windowed_regularity(&res_m, h);
    let predicted_regularity = quotients.iter().filter_map(|(d, r)| windowed_regularity(r, h).map(|v| v + d)).max();
    let (mut koszul_verdict, mut betti_additivity, mut regularity_formula, mut projective_dimension_formula) =
        (Verdict::Inconclusive, Verdict::Inconclusive, Verdict::Inconclusive, Verdict::Inconclusive);
    if has_linear_quotients {
        koszul_verdict = Verdict::from_bool(module_lind.nonzero_homology_indices.is_empty());
        let bm = res_m.betti();
        let tables: Vec<_> = quotients.iter().map(|(d, r)| (*d, r.betti())).collect();
        let mut degs: Vec<i32> = bm.entries.keys().map(|k| k.1).collect();
        for (d, b) in &tables {
            degs.extend(b.entries.keys().map(|k| k.1 + d));
        }
        let mut ok = true;
        if let (Some(&lo), Some(&hi)) = (degs.iter().min(), degs.iter().max()) {
            for s in 0..=h {
                for j in lo..=hi {
                    let predicted: usize = tables.iter().map(|(d, b)| b.get(s, j - d)).sum();
                    ok &= bm.get(s, j) == predicted;
                }
            }
        }
        betti_additivity = Verdict::from_bool(ok);
        regularity_formula = Verdict::from_bool(regularity == predicted_regularity);
        let all_terminated = res_m.terminated() && quotients.iter().all(|(_, r)| r.terminated());
        projective_dimension_formula = if all_terminated {
            let pd = |r: &MinimalResolution| r.invariants().projective_dimension.value;
            Verdict::from_bool(pd(&res_m) == quotients.iter().filter_map(|(_, r)| pd(r)).max())
        } else if res_m.terminated() != quotients.iter().all(|(_, r)| r.terminated()) {
            Verdict::Violated
        } else {
            Verdict::Inconclusive
        };
    }
    Ok(LinearQuotientsReport {
        steps,
        has_linear_quotients,
        module_lind,
        koszul_verdict,
        betti_additivity,
        regularity,
        predicted_regularity,
        regularity_formula,
        projective_dimension_formula,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityRelation {
    pub label: String,
    pub lhs: Interval,
    pub rhs: Interval,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChangeOfRingsReport {
    pub lind_r_s: LindResult,
    pub theorem_applies: bool,
    pub lind_r_n: LindResult,
    pub lind_s_n: LindResult,
    pub equality: Verdict,
    pub reg_r_s: Interval,
    pub reg_s_n: Interval,
    pub reg_r_n: Interval,
    pub regularity_relations: Vec<RegularityRelation>,
}

/// Regularity as an interval: exact for finite resolutions, and for Koszul
/// modules over certified Koszul rings, where it is the top generator
/// degree.
fn regularity_interval(res: &MinimalResolution, lind: &LindResult, h: usize) -> Interval {
    let inv = res.invariants();
    let w = windowed_regularity(res, h).unwrap_or(i32::MIN) as i64;
    if res.is_empty() {
        // the zero module: minus infinity, kept finite for the arithmetic
        return Interval::exact(i64::MIN / 4);
    }
    if inv.regularity.status == Status::Exact {
        return Interval::exact(inv.regularity.value.unwrap_or(0) as i64);
    }
    if lind.exact() == Some(0) && ring_is_certified_koszul(res.ring()) {
        let top = res.shifts(0).iter().copied().max().unwrap_or(0) as i64;
        return Interval::exact(top);
    }
    Interval::at_least(w)
}

/// Compares `lind_R N` with `lind_S N` for `S = R / J` and an `S`-module
/// `N`, pulled back to `R` through its presentation.
pub fn change_of_rings(r: &GradedRing, j: &Ideal, n: &GradedModule, h: usize) -> Result<ChangeOfRingsReport> {
    if !j.ring().same_as(r) {
        return Err(Error::RingMismatch);
    }
    let s = r.quotient(j.generators())?;
    if !n.ring().same_as(&s) {
        return Err(Error::RingMismatch);
    }
    let (degs, cols) = n.presentation()?;
    let mut rcols: Vec<FreeVector> = cols.iter().map(|c| FreeVector::new(c.entries.iter().map(|f| r.reduce(f)).collect())).collect();
    for c in 0..degs.len() {
        for g in j.generators() {
            let mut v = FreeVector::zero(degs.len());
            v.entries[c] = g.clone();
            rcols.push(v);
        }
    }
    let n_r = GradedModule::cokernel(r, degs, None, rcols)?;

    let res_rs = resolve(&j.quotient_module(), h + 1)?;
    let lind_r_s = lind_from_resolution(&res_rs, h)?;
    let res_rn = resolve(&n_r, h + 1)?;
    let lind_r_n = lind_from_resolution(&res_rn, h)?;
    let res_sn = resolve(n, h + 1)?;
    let lind_s_n = lind_from_resolution(&res_sn, h)?;

    let theorem_applies = lind_r_s.exact() == Some(0);
    let equality = if !theorem_applies {
        Verdict::Inconclusive
    } else {
        match (lind_r_n.exact(), lind_s_n.exact()) {
            (Some(a), Some(b)) => Verdict::from_bool(a == b),
            (Some(v), None) | (None, Some(v)) => {
                let other = if lind_r_n.is_exact() { &lind_s_n } else { &lind_r_n };
                if v <= h && other.windowed(h) != v {
                    Verdict::Violated
                } else {
                    Verdict::Inconclusive
                }
            }
            (None, None) => Verdict::Inconclusive,
        }
    };

    let reg_r_s = regularity_interval(&res_rs, &lind_r_s, h);
    let reg_s_n = regularity_interval(&res_sn, &lind_s_n, h);
    let reg_r_n = regularity_interval(&res_rn, &lind_r_n, h);
    let sum = Interval {
        lo: reg_r_s.lo + reg_s_n.lo,
        hi: reg_r_s.hi.zip(reg_s_n.hi).map(|(a, b)| a + b),
    };
    let mut regularity_relations = vec![RegularityRelation {
        label: "reg_R N <= reg_R S + reg_S N".into(),
        lhs: reg_r_n,
        rhs: sum,
        verdict: compare_le(reg_r_n, sum),
    }];
    let le1 = compare_le(reg_r_s, Interval::exact(1));
    regularity_relations.push(RegularityRelation {
        label: "reg_R S <= 1 implies reg_S N <= reg_R N".into(),
        lhs: reg_s_n,
        rhs: reg_r_n,
        verdict: if le1 == Verdict::Holds { compare_le(reg_s_n, reg_r_n) } else { Verdict::Inconclusive },
    });
    let zero = reg_r_s == Interval::exact(0);
    regularity_relations.push(RegularityRelation {
        label: "reg_R S = 0 implies reg_S N = reg_R N".into(),
        lhs: reg_s_n,
        rhs: reg_r_n,
        verdict: if zero { compare_le(reg_s_n, reg_r_n).and(compare_le(reg_r_n, reg_s_n)) } else { Verdict::Inconclusive },
    });
    Ok(ChangeOfRingsReport {
        lind_r_s,
        theorem_applies,
        lind_r_n,
        lind_s_n,
        equality,
        reg_r_s,
        reg_s_n,
        reg_r_n,
        regularity_relations,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeIdealsReport {
    pub count: usize,
    pub intersection: String,
    pub lind: LindResult,
    pub regularity: Bounded,
    pub theorem_applies: bool,
    pub verdict: Verdict,
    pub degree_two_component: String,
    pub minors_identity: Option<bool>,
}

/// `lind` and regularity of an intersection of linear ideals. The
/// Koszulness claim is made only for at most three ideals in a polynomial
/// ring.
pub fn linear_intersection(ideals: &[Ideal], h: usize) -> Result<ThreeIdealsReport> {
    let Some(first) = ideals.first() else {
        return Err(Error::Invalid("no ideals given".into()));
    };
    let ring = first.ring();
    for i in ideals {
        if !i.ring().same_as(ring) {
            return Err(Error::RingMismatch);
        }
        if !i.is_linear() {
            return Err(Error::Invalid(format!("{} is not generated by linear forms", i.format())));
        }
    }
    let mut hh = first.clone();
    for i in &ideals[1..] {
        hh = hh.intersect(i)?;
    }
    let res = resolve(&hh.as_module(), h + 1)?;
    let lind = lind_from_resolution(&res, h)?;
    let regularity = res.invariants().regularity;
    let theorem_applies = ideals.len() <= 3 && ring.is_polynomial_ring();
    let verdict = if !theorem_applies {
        Verdict::Inconclusive
    } else {
        let reg_ok = match (regularity.value, regularity.status) {
            (None, _) => Verdict::Holds,
            (Some(v), Status::Exact) => Verdict::from_bool(v <= 3),
            (Some(v), _) if v > 3 => Verdict::Violated,
            _ => Verdict::Inconclusive,
        };
        let lind_ok = match lind.exact() {
            Some(v) => Verdict::from_bool(v == 0),
            None if !lind.nonzero_homology_indices.is_empty() => Verdict::Violated,
            None => Verdict::Inconclusive,
        };
        lind_ok.and(reg_ok)
    };
    Ok(ThreeIdealsReport {
        count: ideals.len(),
        intersection: hh.format(),
        lind,
        regularity,
        theorem_applies,
        verdict,
        degree_two_component: hh.truncate_component(2).format(),
        minors_identity: None,
    })
}

pub fn three_ideals(i: &Ideal, j: &Ideal, k: &Ideal, h: usize) -> Result<ThreeIdealsReport> {
    linear_intersection(&[i.clone(), j.clone(), k.clone()], h)
}

/// `(x_1..x_p) ∩ (y_1..y_q) ∩ (x_1+y_1, .., x_s+y_s, z_1..z_r)` in
/// `k[x, y, z]`, with its degree-two component compared to the 2-minors of
/// the generic matrix with rows `x_1..x_s` and `y_1..y_s`.
pub fn special_three_ideals(field: PrimeField, p: usize, q: usize, r: usize, s: usize, h: usize) -> Result<ThreeIdealsReport> {
    if s > p.min(q) {
        return Err(Error::Invalid("s must not exceed p and q".into()));
    }
    let names: Vec<String> = (1..=p)
        .map(|i| format!("x{i}"))
        .chain((1..=q).map(|i| format!("y{i}")))
        .chain((1..=r).map(|i| format!("z{i}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = GradedRing::polynomial_ring(field, &refs);
    let var = |i: usize| ring.poly().var(i);
    let x = |i: usize| var(i);
    let y = |i: usize| var(p + i);
    let i1 = Ideal::new(&ring, (0..p).map(x).collect())?;
    let i2 = Ideal::new(&ring, (0..q).map(y).collect())?;
    let mut kg: Vec<_> = (0..s).map(|i| ring.add(&x(i), &y(i))).collect();
    kg.extend((0..r).map(|i| var(p + q + i)));
    let i3 = Ideal::new(&ring, kg)?;
    let mut rep = three_ideals(&i1, &i2, &i3, h)?;
    let mut minors = Vec::new();
    for a in 0..s {
        for b in a + 1..s {
            minors.push(ring.sub(&ring.mul(&x(a), &y(b)), &ring.mul(&x(b), &y(a))));
        }
    }
    let l = Ideal::new(&ring, minors)?;
    let hh = i1.intersect(&i2)?.intersect(&i3)?;
    rep.minors_identity = Some(hh.truncate_component(2).equals(&l)?);
    Ok(rep)
}
