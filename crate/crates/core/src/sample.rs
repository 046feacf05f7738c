//! Seeded random generators used by the randomized searches and the
//! Monte-Carlo membership tests. Everything is driven by a `ChaCha8Rng`
//! created from an explicit seed, so results are reproducible.

use crate::matrix::RatMatrix;
use crate::rational::{rat, Rational};
use crate::subspace::Subspace;
use num::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_int(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

pub fn rand_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let n = rand_int(rng, bound);
    let d = rng.gen_range(1..=3i64);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rand_vec(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<Rational> {
    (0..len).map(|_| rat(rand_int(rng, bound))).collect()
}

pub fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| rat(rand_int(rng, bound)))
}

/// Random invertible square matrix with entries in `[-bound, bound]`.
pub fn rand_invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> RatMatrix {
    loop {
        let m = rand_matrix(rng, n, n, bound);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn rand_subspace(rng: &mut ChaCha8Rng, ambient: usize) -> Subspace {
    let k = rng.gen_range(0..=ambient);
    let rows: Vec<Vec<Rational>> = (0..k).map(|_| rand_vec(rng, ambient, 3)).collect();
    Subspace::from_rows(ambient, rows).expect("ambient lengths match")
}
