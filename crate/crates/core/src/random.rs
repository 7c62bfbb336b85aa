//! Seeded random monomial ideals.
//!
//! The generator is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`;
//! every bounded draw is `Rng::gen_range` over an inclusive range. Draw order
//! per ideal is: ambient `n`, count, then each exponent vector slot by slot.
//! A draw yielding the unit or zero ideal is discarded and redrawn from the
//! same stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::{irredundantize, recompose, IrreducibleComponent};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Box in which random instances are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceBounds {
    pub max_n: usize,
    /// Maximum number of generators (or of components, for [`InstanceGenerator::from_components`]).
    pub max_count: usize,
    pub max_exponent: u32,
}

impl Default for InstanceBounds {
    fn default() -> Self {
        InstanceBounds { max_n: 4, max_count: 4, max_exponent: 3 }
    }
}

pub struct InstanceGenerator {
    rng: ChaCha8Rng,
}

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        InstanceGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }

    pub fn gen_range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    fn exponent_vector(&mut self, n: usize, max_exponent: u32) -> Vec<u32> {
        (0..n).map(|_| self.rng.gen_range(0..=max_exponent)).collect()
    }

    /// A proper nonzero ideal generated by uniformly drawn exponent vectors.
    pub fn from_generators(&mut self, bounds: &InstanceBounds) -> MonomialIdeal {
        loop {
            let n = self.rng.gen_range(1..=bounds.max_n);
            let count = self.rng.gen_range(1..=bounds.max_count);
            let gens: Vec<Monomial> =
                (0..count).map(|_| Monomial::new(self.exponent_vector(n, bounds.max_exponent))).collect();
            let ideal = MonomialIdeal::new(n, gens).expect("uniform ambient");
            if ideal.ensure_proper().is_ok() {
                return ideal;
            }
        }
    }

    /// The intersection of uniformly drawn irreducible components.
    pub fn from_components(&mut self, bounds: &InstanceBounds) -> MonomialIdeal {
        loop {
            let n = self.rng.gen_range(1..=bounds.max_n);
            let count = self.rng.gen_range(1..=bounds.max_count);
            let comps: Vec<IrreducibleComponent> = (0..count)
                .filter_map(|_| IrreducibleComponent::new(self.exponent_vector(n, bounds.max_exponent)).ok())
                .collect();
            if let Ok(d) = irredundantize(comps, n) {
                return recompose(&d);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let bounds = InstanceBounds::default();
        let mut a = InstanceGenerator::new(42);
        let mut b = InstanceGenerator::new(42);
        for _ in 0..20 {
            assert_eq!(a.from_generators(&bounds), b.from_generators(&bounds));
            assert_eq!(a.from_components(&bounds), b.from_components(&bounds));
        }
    }

    #[test]
    fn draws_stay_in_bounds() {
        let bounds = InstanceBounds { max_n: 3, max_count: 2, max_exponent: 2 };
        let mut g = InstanceGenerator::new(1);
        for _ in 0..100 {
            let i = g.from_generators(&bounds);
            assert!(i.n() <= 3 && i.generators().len() <= 2 && i.max_exponent() <= 2);
            assert!(i.ensure_proper().is_ok());
        }
    }
}
