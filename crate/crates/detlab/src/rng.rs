//! Deterministic randomness. Every randomized operation takes an explicit
//! 64-bit seed; identical seeds give identical runs on every platform.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ring::{Coeff, FieldSpec, Polynomial, Ring};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform field element. For the rationals, a small integer in `-20..=20`.
pub fn random_coeff(ring: &Ring, rng: &mut SeededRng) -> Coeff {
    match ring.field() {
        FieldSpec::Prime(p) => Coeff::Fp(rng.gen_range(0..*p)),
        FieldSpec::Rationals => ring.cfrom_i64(rng.gen_range(-20..=20)),
    }
}

/// Uniform nonzero field element.
pub fn random_nonzero(ring: &Ring, rng: &mut SeededRng) -> Coeff {
    match ring.field() {
        FieldSpec::Prime(p) => Coeff::Fp(rng.gen_range(1..*p)),
        FieldSpec::Rationals => {
            let v = rng.gen_range(1..=20i64);
            ring.cfrom_i64(if rng.gen_bool(0.5) { v } else { -v })
        }
    }
}

/// Nonzero element avoiding 1 as well (used where 0 and 1 are degenerate).
pub fn random_parameter(ring: &Ring, rng: &mut SeededRng) -> Coeff {
    loop {
        let c = random_nonzero(ring, rng);
        if !ring.cis_one(&c) {
            return c;
        }
    }
}

/// Linear form with uniform coefficients, retried until nonzero.
pub fn random_linear_form(ring: &Ring, rng: &mut SeededRng) -> Polynomial {
    loop {
        let mut acc = Polynomial::zero(ring);
        for i in 0..ring.n_vars() {
            let c = random_coeff(ring, rng);
            acc = acc.add(&Polynomial::var(ring, i).scalar_mul(&c));
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}

/// Linear form in the variables listed by `support` only.
pub fn random_linear_form_in(ring: &Ring, support: &[usize], rng: &mut SeededRng) -> Polynomial {
    loop {
        let mut acc = Polynomial::zero(ring);
        for &i in support {
            let c = random_coeff(ring, rng);
            acc = acc.add(&Polynomial::var(ring, i).scalar_mul(&c));
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}
