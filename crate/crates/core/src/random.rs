//! Seeded generators for the randomized corpora: rings, ideals, modules,
//! short exact sequences and change-of-rings instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::PrimeField;
use crate::groebner::FreeVector;
use crate::module::{GradedModule, Ideal};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use crate::structure::ShortExactSequence;

/// Which special hypothesis a sampled sequence aims at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SesMode {
    /// `M` spanned by part of a minimal generating set of `P`.
    Pure,
    /// `M` spanned by elements of `mP`.
    Small,
    General,
}

pub struct Sampler {
    rng: ChaCha8Rng,
    field: PrimeField,
}

const VARS: [&str; 6] = ["x", "y", "z", "t", "u", "v"];

impl Sampler {
    pub fn new(seed: u64, field: PrimeField) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), field }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn coefficient(&mut self) -> u32 {
        let c: i64 = self.rng.gen_range(1..=5) * if self.rng.gen_bool(0.3) { -1 } else { 1 };
        self.field.from_i64(c)
    }

    fn monomial(&mut self, n: usize, d: u32) -> Monomial {
        let all = Monomial::all_of_degree(n, d);
        all.choose(&mut self.rng).expect("nonempty").clone()
    }

    /// A homogeneous form of degree `d` with at most `terms` terms.
    pub fn form(&mut self, ring: &GradedRing, d: u32, terms: usize) -> Polynomial {
        let n = ring.nvars();
        let k = self.rng.gen_range(1..=terms.max(1));
        let mut ts = Vec::new();
        for _ in 0..k {
            let m = self.monomial(n, d);
            let c = self.coefficient();
            ts.push((m, c));
        }
        ring.reduce(&ring.poly().from_terms(ts))
    }

    /// A monomial, or a binomial `m1 - m2`, of degree `d`.
    pub fn binomial(&mut self, ring: &GradedRing, d: u32) -> Polynomial {
        let n = ring.nvars();
        let a = self.monomial(n, d);
        let mut ts = vec![(a, 1)];
        if self.rng.gen_bool(0.5) {
            let b = self.monomial(n, d);
            ts.push((b, self.field.neg(1)));
        }
        ring.reduce(&ring.poly().from_terms(ts))
    }

    pub fn linear_form(&mut self, ring: &GradedRing, sparse: bool) -> Polynomial {
        let n = ring.nvars();
        let mut ts = Vec::new();
        for v in 0..n {
            if sparse && self.rng.gen_bool(0.6) {
                continue;
            }
            let c = self.coefficient();
            ts.push((Monomial::var(n, v), c));
        }
        if ts.is_empty() {
            let v = self.rng.gen_range(0..n);
            ts.push((Monomial::var(n, v), 1));
        }
        ring.poly().from_terms(ts)
    }

    pub fn polynomial_ring(&mut self, n: usize) -> GradedRing {
        GradedRing::polynomial_ring(self.field, &VARS[..n])
    }

    /// `k[x_1..x_n]` modulo at most `max_rels` monomial or binomial quadrics.
    pub fn quadric_ring(&mut self, n: usize, max_rels: usize) -> Result<GradedRing> {
        let base = self.polynomial_ring(n);
        let k = self.rng.gen_range(0..=max_rels);
        let rels: Vec<Polynomial> = (0..k).map(|_| self.binomial(&base, 2)).filter(|f| !f.is_zero()).collect();
        base.quotient(&rels)
    }

    /// An ideal with `1..=max_gens` generators of degree `1..=max_deg`.
    pub fn ideal(&mut self, ring: &GradedRing, max_gens: usize, max_deg: u32, binomial: bool) -> Result<Ideal> {
        let k = self.rng.gen_range(1..=max_gens);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| {
                let d = self.rng.gen_range(1..=max_deg);
                if binomial {
                    self.binomial(ring, d)
                } else {
                    self.form(ring, d, 3)
                }
            })
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn linear_ideal(&mut self, ring: &GradedRing, max_gens: usize) -> Result<Ideal> {
        let k = self.rng.gen_range(1..=max_gens);
        let sparse = self.rng.gen_bool(0.5);
        let gens = (0..k).map(|_| self.linear_form(ring, sparse)).collect();
        Ideal::new(ring, gens)
    }

    /// A vector in `⊕ R(-shifts)` of degree `d`.
    pub fn vector(&mut self, ring: &GradedRing, shifts: &[i32], d: i32, binomial: bool) -> FreeVector {
        let entries = shifts
            .iter()
            .map(|&s| {
                if d < s || self.rng.gen_bool(0.3) {
                    Polynomial::zero()
                } else if binomial {
                    self.binomial(ring, (d - s) as u32)
                } else {
                    self.form(ring, (d - s) as u32, 2)
                }
            })
            .collect();
        FreeVector::new(entries)
    }

    /// The cokernel of a random homogeneous matrix with `rows x cols`
    /// entries, target in degree 0.
    pub fn cokernel(&mut self, ring: &GradedRing, rows: usize, cols: usize, max_deg: i32, binomial: bool) -> Result<GradedModule> {
        let tgt = vec![0; rows];
        let columns: Vec<FreeVector> = (0..cols)
            .map(|_| {
                let d = self.rng.gen_range(1..=max_deg);
                self.vector(ring, &tgt, d, binomial)
            })
            .collect();
        GradedModule::cokernel(ring, tgt, None, columns)
    }

    /// Either `R/U` or a small cokernel, built from monomials and binomials.
    pub fn small_module(&mut self, ring: &GradedRing) -> Result<GradedModule> {
        if self.rng.gen_bool(0.6) {
            Ok(self.ideal(ring, 3, 2, true)?.quotient_module())
        } else {
            let rows = self.rng.gen_range(1..=2);
            let cols = self.rng.gen_range(1..=3);
            self.cokernel(ring, rows, cols, 2, true)
        }
    }

    /// `M ⊆ P` in a common subquotient ambient, with all three terms of the
    /// sequence nonzero. Returns `None` when the draw is degenerate.
    pub fn ses(&mut self, ring: &GradedRing, mode: SesMode) -> Result<Option<ShortExactSequence>> {
        let rank = if self.rng.gen_bool(0.6) { 1 } else { 2 };
        let shifts = vec![0; rank];
        let k = self.rng.gen_range(1..=3);
        let pgens: Vec<FreeVector> = (0..k)
            .map(|_| {
                let d = self.rng.gen_range(1..=2);
                let b = self.rng.gen_bool(0.5);
                self.vector(ring, &shifts, d, b)
            })
            .filter(|v| !v.is_zero())
            .collect();
        let rels = if rank == 1 && self.rng.gen_bool(0.25) {
            let d = 3;
            vec![self.vector(ring, &shifts, d, true)]
        } else {
            Vec::new()
        };
        let p = GradedModule::subquotient(ring, shifts.clone(), pgens, rels.clone())?;
        let pmin = p.minimal_generators();
        if pmin.is_empty() {
            return Ok(None);
        }
        let poly = ring.poly();
        let mgens: Vec<FreeVector> = match mode {
            SesMode::Pure => {
                let mut idx: Vec<usize> = (0..pmin.len()).collect();
                idx.shuffle(&mut self.rng);
                let take = self.rng.gen_range(1..=pmin.len());
                idx[..take].iter().map(|&i| pmin[i].clone()).collect()
            }
            SesMode::Small | SesMode::General => {
                let lo = if mode == SesMode::Small { 1 } else { 0 };
                let count = self.rng.gen_range(1..=2);
                (0..count)
                    .map(|_| {
                        let mut acc = FreeVector::zero(rank);
                        let target = self.rng.gen_range(2..=3);
                        for g in &pmin {
                            let dg = g.degree(&shifts).unwrap_or(0);
                            let e = target - dg;
                            if e < lo || self.rng.gen_bool(0.3) {
                                continue;
                            }
                            let c = self.form(ring, e as u32, 2);
                            for (a, b) in acc.entries.iter_mut().zip(&g.entries) {
                                *a = poly.add(a, &ring.mul(&c, b));
                            }
                        }
                        acc
                    })
                    .filter(|v| !v.is_zero())
                    .collect()
            }
        };
        let m = GradedModule::subquotient(ring, shifts, mgens, rels)?;
        let ses = ShortExactSequence::new(m, p)?;
        if ses.has_zero_term() {
            return Ok(None);
        }
        Ok(Some(ses))
    }

    pub fn choose_mode(&mut self) -> SesMode {
        match self.rng.gen_range(0..3) {
            0 => SesMode::Pure,
            1 => SesMode::Small,
            _ => SesMode::General,
        }
    }
}
