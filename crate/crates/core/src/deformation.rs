//! Deformations of generator exponents and genericity.
//!
//! A deformation adds a non-negative vector to every minimal generator while
//! keeping, variable by variable, every strict order between generator degrees
//! and every zero degree.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::{lcm_exps, strictly_divides_exps, Monomial};
use crate::size::size_with;

/// Per-generator shifts, aligned with the canonical generator order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DeformationVectors {
    pub shifts: Vec<Vec<u32>>,
}

impl DeformationVectors {
    pub fn zero(ideal: &MonomialIdeal) -> Self {
        DeformationVectors { shifts: vec![vec![0; ideal.n()]; ideal.generators().len()] }
    }

    pub fn is_zero(&self) -> bool {
        self.shifts.iter().flatten().all(|&e| e == 0)
    }

    /// The shifts taking the generators of `ideal` to `deformed`, paired in the given order.
    pub fn between(originals: &[Monomial], deformed: &[Monomial]) -> Result<Self> {
        if originals.len() != deformed.len() {
            return Err(Error::DeformationShape(format!(
                "{} generators vs {} deformed generators",
                originals.len(),
                deformed.len()
            )));
        }
        let mut shifts = Vec::with_capacity(originals.len());
        for (g, h) in originals.iter().zip(deformed) {
            if g.n() != h.n() {
                return Err(Error::AmbientMismatch { left: g.n(), right: h.n() });
            }
            let row = g
                .exps()
                .iter()
                .zip(h.exps())
                .map(|(&a, &b)| b.checked_sub(a))
                .collect::<Option<Vec<u32>>>()
                .ok_or(Error::InvalidDeformation)?;
            shifts.push(row);
        }
        Ok(DeformationVectors { shifts })
    }
}

fn check_shape(ideal: &MonomialIdeal, eps: &DeformationVectors) -> Result<()> {
    let gens = ideal.generators();
    if eps.shifts.len() != gens.len() {
        return Err(Error::DeformationShape(format!(
            "{} shift vectors for {} generators",
            eps.shifts.len(),
            gens.len()
        )));
    }
    if let Some(row) = eps.shifts.iter().find(|row| row.len() != ideal.n()) {
        return Err(Error::DeformationShape(format!(
            "shift vector of length {} in {} variables",
            row.len(),
            ideal.n()
        )));
    }
    Ok(())
}

/// True iff `eps` preserves strict degree order and zero degrees.
pub fn validate_deformation(ideal: &MonomialIdeal, eps: &DeformationVectors) -> Result<bool> {
    check_shape(ideal, eps)?;
    let gens = ideal.generators();
    for (g, shift) in gens.iter().zip(&eps.shifts) {
        if g.exps().iter().zip(shift).any(|(&a, &e)| a == 0 && e != 0) {
            return Ok(false);
        }
    }
    for j in 0..ideal.n() {
        for (gi, si) in gens.iter().zip(&eps.shifts) {
            for (gk, sk) in gens.iter().zip(&eps.shifts) {
                let (a, b) = (gi.exp(j), gk.exp(j));
                if a > b && (a as u64 + si[j] as u64) <= (b as u64 + sk[j] as u64) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The ideal generated by the shifted generators.
pub fn apply_deformation(ideal: &MonomialIdeal, eps: &DeformationVectors) -> Result<MonomialIdeal> {
    if !validate_deformation(ideal, eps)? {
        return Err(Error::InvalidDeformation);
    }
    let shifted = ideal
        .generators()
        .iter()
        .zip(&eps.shifts)
        .map(|(g, s)| Monomial::new(g.exps().iter().zip(s).map(|(&a, &e)| a + e).collect()));
    MonomialIdeal::new(ideal.n(), shifted.collect())
}

/// Generic in the sense that any two minimal generators with the same positive
/// degree in some variable have a third minimal generator strictly dividing
/// their lcm.
pub fn is_generic(ideal: &MonomialIdeal) -> bool {
    generic_violation(ideal).is_none()
}

/// First pair of generator indices breaking [`is_generic`].
pub fn generic_violation(ideal: &MonomialIdeal) -> Option<(usize, usize)> {
    let gens = ideal.generators();
    for i in 0..gens.len() {
        for k in i + 1..gens.len() {
            let (a, b) = (gens[i].exps(), gens[k].exps());
            if !a.iter().zip(b).any(|(&x, &y)| x > 0 && x == y) {
                continue;
            }
            let lcm = lcm_exps(a, b);
            let witnessed = gens
                .iter()
                .enumerate()
                .any(|(t, g)| t != i && t != k && strictly_divides_exps(g.exps(), &lcm));
            if !witnessed {
                return Some((i, k));
            }
        }
    }
    None
}

/// No two minimal generators share a positive degree in any variable.
pub fn is_strongly_generic(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.generators();
    (0..ideal.n()).all(|j| {
        let mut degrees: Vec<u32> = gens.iter().map(|g| g.exp(j)).filter(|&e| e > 0).collect();
        let total = degrees.len();
        degrees.sort_unstable();
        degrees.dedup();
        degrees.len() == total
    })
}

/// A deformation whose result is strongly generic.
///
/// Per variable, generators with positive degree are sorted by degree (ties
/// ordered by a seeded shuffle) and each receives the smallest new degree
/// above its predecessor's, never below its own. Already distinct degrees are
/// left alone.
pub fn find_generic_deformation(ideal: &MonomialIdeal, seed: u64) -> Result<DeformationVectors> {
    ideal.ensure_proper()?;
    let gens = ideal.generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut eps = DeformationVectors::zero(ideal);
    for j in 0..ideal.n() {
        let mut order: Vec<usize> = (0..gens.len()).filter(|&i| gens[i].exp(j) > 0).collect();
        order.shuffle(&mut rng);
        // stable sort keeps the shuffled order among ties
        order.sort_by_key(|&i| gens[i].exp(j));
        let mut previous = 0u32;
        for i in order {
            let new = gens[i].exp(j).max(previous + 1);
            eps.shifts[i][j] = new - gens[i].exp(j);
            previous = new;
        }
    }
    Ok(eps)
}

/// Sizes of an ideal and of a deformation of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeformationSizes {
    pub size_i: usize,
    pub size_eps: usize,
    /// The deformed ideal is generic; the inequality is only claimed in that case.
    pub generic: bool,
    pub inequality_holds: bool,
    pub deformed: String,
}

pub fn size_under_deformation(ideal: &MonomialIdeal, eps: &DeformationVectors) -> Result<DeformationSizes> {
    size_under_deformation_with(ideal, eps, &Limits::default())
}

pub fn size_under_deformation_with(
    ideal: &MonomialIdeal,
    eps: &DeformationVectors,
    limits: &Limits,
) -> Result<DeformationSizes> {
    let deformed = apply_deformation(ideal, eps)?;
    let size_i = size_with(ideal, limits)?.size;
    let size_eps = size_with(&deformed, limits)?.size;
    Ok(DeformationSizes {
        size_i,
        size_eps,
        generic: is_generic(&deformed),
        inequality_holds: size_i >= size_eps,
        deformed: deformed.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    #[test]
    fn zero_deformation_is_identity() {
        let i = ideal(2, &[&[1, 1], &[0, 2]]);
        let eps = DeformationVectors::zero(&i);
        assert!(validate_deformation(&i, &eps).unwrap());
        assert_eq!(apply_deformation(&i, &eps).unwrap(), i);
    }

    #[test]
    fn tie_must_not_be_created() {
        // (x1*x2, x2^2): raising x2 in x1*x2 by one ties the x2-degrees
        let i = ideal(2, &[&[1, 1], &[0, 2]]);
        let (a, b) = (i.generators()[0].exps().to_vec(), i.generators()[1].exps().to_vec());
        let mut shifts = vec![vec![0, 0], vec![0, 0]];
        let low = if a[1] < b[1] { 0 } else { 1 };
        shifts[low][1] = 1;
        let eps = DeformationVectors { shifts };
        assert!(!validate_deformation(&i, &eps).unwrap());
        assert_eq!(apply_deformation(&i, &eps), Err(Error::InvalidDeformation));
    }

    #[test]
    fn zero_degrees_stay_zero() {
        let i = ideal(2, &[&[1, 0]]);
        let eps = DeformationVectors { shifts: vec![vec![0, 1]] };
        assert!(!validate_deformation(&i, &eps).unwrap());
    }

    #[test]
    fn shape_mismatch() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let eps = DeformationVectors { shifts: vec![vec![0, 0]] };
        assert!(matches!(validate_deformation(&i, &eps), Err(Error::DeformationShape(_))));
        let eps = DeformationVectors { shifts: vec![vec![0], vec![0]] };
        assert!(matches!(validate_deformation(&i, &eps), Err(Error::DeformationShape(_))));
    }

    #[test]
    fn single_generator_is_generic() {
        let i = ideal(3, &[&[2, 1, 0]]);
        assert!(is_generic(&i));
        assert!(is_strongly_generic(&i));
    }

    #[test]
    fn strongly_generic_gets_zero_deformation() {
        let i = ideal(2, &[&[1, 1], &[2, 0]]);
        assert!(is_strongly_generic(&i));
        assert!(find_generic_deformation(&i, 7).unwrap().is_zero());
    }

    #[test]
    fn synthesized_deformation_separates_ties() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(!is_strongly_generic(&i));
        for seed in 0..5 {
            let eps = find_generic_deformation(&i, seed).unwrap();
            assert!(validate_deformation(&i, &eps).unwrap());
            let deformed = apply_deformation(&i, &eps).unwrap();
            assert!(is_strongly_generic(&deformed));
            assert!(is_generic(&deformed));
            assert_eq!(find_generic_deformation(&i, seed).unwrap(), eps);
        }
    }
}
