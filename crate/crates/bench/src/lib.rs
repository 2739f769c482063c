//! Seeded fixtures shared by the benchmarks.

use std::sync::Arc;

use entourage::{Carrier, Entourage, FiniteEntourageSpace};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn carrier(n: usize) -> Arc<Carrier> {
    Carrier::numbered(n).expect("n ≥ 1").shared()
}

/// Each off-diagonal pair present with probability `density`.
pub fn random_relation(n: usize, density: f64, seed: u64) -> Entourage {
    let mut rng = StdRng::seed_from_u64(seed);
    Entourage::from_fn(&carrier(n), |_, _| rng.gen_bool(density))
}

pub fn random_space(n: usize, density: f64, seed: u64) -> FiniteEntourageSpace {
    FiniteEntourageSpace::principal(random_relation(n, density, seed))
}

/// Sparse enough that the transitive closure is not simply `X × X`.
pub fn sparse_density(n: usize) -> f64 {
    1.0 / n as f64
}
