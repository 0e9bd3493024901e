//! Deterministic input generators shared by the criterion benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coadq_core::{HPoly, Monomial, Poly, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random tensor word over `n` generators.
pub fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.random_range(0..n)).collect()
}

/// A random polynomial with small rational coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, terms: usize) -> Poly {
    let mut p = Poly::zero(n);
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        let deg = rng.random_range(0..=max_deg);
        for _ in 0..deg {
            exps[rng.random_range(0..n)] += 1;
        }
        let coeff = Rational::new(rng.random_range(-9..=9), rng.random_range(1..=4));
        p.add_term(Monomial(exps), HPoly::constant(coeff));
    }
    p
}
