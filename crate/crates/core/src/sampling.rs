//! Seeded random samples for the verification suites.
//!
//! Sample `i` of a run with seed `s` is drawn from its own generator seeded
//! with `s + i`, so samples are reproducible and independent of evaluation
//! order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{partitions_up_to, Signature};
use crate::qfield::CoeffRat;
use crate::sympoly::{m_sym, NPoly, SymLaurent};

/// The generator for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(index))
}

/// A small random coefficient `c·q^a·t^b` with `c ∈ [-3, 3] \ {0}`.
pub fn random_coeff<R: Rng>(rng: &mut R) -> CoeffRat {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    let a = rng.gen_range(-1..=1);
    let b = rng.gen_range(-1..=1);
    CoeffRat::from_int(c).mul_ref(&CoeffRat::q_pow(a)).mul_ref(&CoeffRat::t_pow(b))
}

/// A random integer-coefficient constant, nonzero.
pub fn random_int<R: Rng>(rng: &mut R) -> CoeffRat {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    CoeffRat::from_int(c)
}

/// A random Laurent polynomial in `n` variables with exponents in
/// `[-maxdeg, maxdeg]` (or `[0, maxdeg]` when `laurent` is false) and up to
/// `terms` monomials.
pub fn random_npoly<R: Rng>(rng: &mut R, n: usize, maxdeg: i64, terms: usize, laurent: bool) -> NPoly {
    let lo = if laurent { -maxdeg } else { 0 };
    let mut f = NPoly::zero(n);
    for _ in 0..terms.max(1) {
        let e: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=maxdeg)).collect();
        f.add_term(e, &random_coeff(rng));
    }
    if f.is_zero() {
        NPoly::one(n)
    } else {
        f
    }
}

/// A random symmetric polynomial in `n` variables: a combination of up to
/// `terms` orbit sums `m_λ` with `|λ| ≤ maxdeg`.
pub fn random_sym<R: Rng>(rng: &mut R, n: usize, maxdeg: i64, terms: usize) -> SymLaurent {
    let basis: Vec<Signature> = partitions_up_to(maxdeg, n);
    let mut f = SymLaurent::zero(n);
    for _ in 0..terms.max(1) {
        let lam = &basis[rng.gen_range(0..basis.len())];
        let m = m_sym(lam, n).expect("partition is dominant");
        f = f.add(&m.scalar_mul(&random_int(rng)));
    }
    if f.is_zero() {
        SymLaurent::one(n)
    } else {
        f
    }
}
