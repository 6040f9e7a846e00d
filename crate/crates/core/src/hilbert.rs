//! Hilbert series numerators of monomial quotients, `HS = N(t) / (1-t)^n`.

use std::collections::BTreeMap;

use crate::groebner::ModuleGB;
use crate::monomial::Monomial;
use crate::ring::GradedRing;

/// Laurent polynomial in `t`, zero coefficients dropped.
pub(crate) type Series = BTreeMap<i32, i64>;

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn colon(gens: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    gens.iter()
        .map(|g| {
            let e: Vec<u16> = g.exponents().iter().zip(m.exponents()).map(|(&a, &b)| a.saturating_sub(b)).collect();
            Monomial::from_exponents(&e)
        })
        .collect()
}

fn shift_sub(acc: &mut Vec<i64>, other: &[i64], by: usize) {
    if acc.len() < other.len() + by {
        acc.resize(other.len() + by, 0);
    }
    for (i, &c) in other.iter().enumerate() {
        acc[i + by] -= c;
    }
}

/// Numerator of the Hilbert series of `k[x]/(gens)`.
pub(crate) fn numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimize(gens.to_vec());
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[..i].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let prev = acc.clone();
            shift_sub(&mut acc, &prev, g.degree() as usize);
        }
        return acc;
    }
    let (last, rest) = gens.split_last().expect("nonempty");
    let mut acc = numerator(rest);
    let q = numerator(&colon(rest, last));
    shift_sub(&mut acc, &q, last.degree() as usize);
    acc
}

fn add_shifted(out: &mut Series, num: &[i64], shift: i32, sign: i64) {
    for (i, &c) in num.iter().enumerate() {
        if c != 0 {
            *out.entry(shift + i as i32).or_insert(0) += sign * c;
        }
    }
    out.retain(|_, c| *c != 0);
}

pub(crate) fn sub(a: &Series, b: &Series) -> Series {
    let mut out = a.clone();
    for (&k, &v) in b {
        *out.entry(k).or_insert(0) -= v;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn ring_leads(ring: &GradedRing) -> Vec<Monomial> {
    ring.defining_gb().iter().filter_map(|f| f.leading().map(|t| t.0.clone())).collect()
}

/// Numerator for the free module `⊕ R(-shifts_c)`.
pub(crate) fn free(ring: &GradedRing, shifts: &[i32]) -> Series {
    let n = numerator(&ring_leads(ring));
    let mut out = Series::new();
    for &s in shifts {
        add_shifted(&mut out, &n, s, 1);
    }
    out
}

/// Numerator for `(⊕ R(-shifts_c)) / <gb>`.
pub(crate) fn quotient(ring: &GradedRing, shifts: &[i32], gb: &ModuleGB) -> Series {
    let base = ring_leads(ring);
    let mut per: Vec<Vec<Monomial>> = vec![base; shifts.len()];
    for (c, m) in gb.leading_terms() {
        per[c].push(m);
    }
    let mut out = Series::new();
    for (c, gens) in per.iter().enumerate() {
        add_shifted(&mut out, &numerator(gens), shifts[c], 1);
    }
    out
}
