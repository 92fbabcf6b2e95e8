//! Seeded random point sets.
//!
//! Scheme v1, part of the report contract: a ChaCha8 stream keyed with
//! `seed_from_u64`, one `f64` draw per window cell in canonical order,
//! cell included when the draw falls below the density. Identical
//! parameters give identical sets on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::harness::Window;
use crate::khalimsky::KSet;
use crate::rosenfeld::GridSet;

pub fn random_grid_set(w: &Window, density: f64, seed: u64) -> GridSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    w.points()
        .filter(|_| rng.gen::<f64>() < density)
        .collect()
}

pub fn random_k_set(w: &Window, density: f64, seed: u64) -> KSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    w.points()
        .filter(|_| rng.gen::<f64>() < density)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_densities() {
        let w = Window::of_size(5, 5).unwrap();
        assert!(random_grid_set(&w, 0.0, 1).is_empty());
        assert_eq!(random_grid_set(&w, 1.0, 1).len(), 25);
    }

    #[test]
    fn deterministic_per_seed() {
        let w = Window::of_size(6, 6).unwrap();
        assert_eq!(random_grid_set(&w, 0.4, 99), random_grid_set(&w, 0.4, 99));
        assert_ne!(random_grid_set(&w, 0.4, 99), random_grid_set(&w, 0.4, 100));
    }
}
