//! Seeded random posets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::{numeric_labels, Poset};

/// Largest size accepted by [`random_poset`].
pub const RANDOM_MAX_ELEMENTS: usize = 25;

/// Each pair `i < j` becomes a relation `i < j` with probability `density`;
/// the result is the transitive closure. Density 0 gives an antichain and
/// density 1 a chain.
pub fn random_poset(n: usize, density: f64, seed: u64) -> Result<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_poset_with(n, density, &mut rng)
}

pub fn random_poset_with<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Result<Poset> {
    if !(1..=RANDOM_MAX_ELEMENTS).contains(&n) {
        return Err(Error::BadParams(format!(
            "random poset size must be in 1..={RANDOM_MAX_ELEMENTS}, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::BadParams(format!(
            "density must be in [0, 1], got {density}"
        )));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Poset::from_covers(numeric_labels(n), &edges)
}
