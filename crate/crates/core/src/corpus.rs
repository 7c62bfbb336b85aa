//! Worked examples with their reference values, replayable as a regression corpus.
//!
//! Components are listed in the order the examples number them, which differs
//! from the canonical order of a [`Decomposition`]; cover indices reported
//! here use the example numbering (1-based).

use std::collections::BTreeSet;
use std::fmt::Debug;

use serde::Serialize;

use crate::decomposition::{irreducible_decomposition, irredundantize, Decomposition, IrreducibleComponent};
use crate::deformation::{
    apply_deformation, is_generic, size_under_deformation, validate_deformation, DeformationVectors,
};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polarization::{
    bar_family, build_top_base, enumerate_top_bases, predict_equality, size_of_polarization, EqualityVerdict,
    PowerMatrix,
};
use crate::size::{minimal_covers, size};

/// An ideal given by its irredundant components in a fixed numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberedIdeal {
    pub name: String,
    pub n: usize,
    pub components: Vec<IrreducibleComponent>,
}

impl NumberedIdeal {
    fn new(name: impl Into<String>, rows: &[&[u32]]) -> Self {
        NumberedIdeal {
            name: name.into(),
            n: rows[0].len(),
            components: rows
                .iter()
                .map(|r| IrreducibleComponent::new(r.to_vec()).expect("nonempty component"))
                .collect(),
        }
    }

    pub fn decomposition(&self) -> Decomposition {
        irredundantize(self.components.clone(), self.n).expect("nonempty")
    }

    pub fn ideal(&self) -> MonomialIdeal {
        crate::decomposition::recompose(&self.decomposition())
    }

    /// 1-based number of canonical component `index`.
    pub fn number_of(&self, d: &Decomposition, index: usize) -> usize {
        let c = &d.components()[index];
        self.components.iter().position(|x| x == c).expect("same components") + 1
    }

    /// Minimal covers in this numbering, each sorted, in lexicographic order.
    pub fn numbered_covers(&self) -> Result<Vec<Vec<usize>>> {
        let d = self.decomposition();
        let family = minimal_covers(&d)?;
        let mut covers: Vec<Vec<usize>> = family
            .covers
            .iter()
            .map(|c| {
                let mut v: Vec<usize> = c.iter().map(|&i| self.number_of(&d, i)).collect();
                v.sort_unstable();
                v
            })
            .collect();
        covers.sort();
        Ok(covers)
    }

    /// Variables (1-based) failing condition (2)(A), and those failing (2)(B).
    pub fn failing_conditions(&self, verdict: &EqualityVerdict) -> (Vec<usize>, Vec<usize>) {
        let failing_a = verdict
            .per_variable
            .iter()
            .filter(|v| !v.condition_1 && !v.condition_2a)
            .map(|v| v.var + 1)
            .collect();
        let failing_b = verdict
            .per_variable
            .iter()
            .filter(|v| !v.condition_1 && !v.condition_2b)
            .map(|v| v.var + 1)
            .collect();
        (failing_a, failing_b)
    }
}

/// `(x^10,y^10,z) ∩ (x^10,y^2) ∩ (x,z^4)` as a power matrix.
pub fn top_base_matrix() -> PowerMatrix {
    PowerMatrix::new(vec![vec![10, 10, 1], vec![10, 2, 0], vec![1, 0, 4]])
}

/// `(x1^2,x2^2) ∩ (x3^2,x4^2)`.
pub fn two_squares() -> NumberedIdeal {
    NumberedIdeal::new("two-squares", &[&[2, 2, 0, 0], &[0, 0, 2, 2]])
}

/// `(x1^2,x2) ∩ (x2,x3) ∩ (x3,x4) ∩ (x2,x4)`: equality holds.
pub fn equality_example() -> NumberedIdeal {
    NumberedIdeal::new("equality", &[&[2, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[0, 1, 0, 1]])
}

/// `(x1^2,x2) ∩ (x1,x3) ∩ (x2,x3)`: fails condition (2)(A).
pub fn condition_a_example() -> NumberedIdeal {
    NumberedIdeal::new("condition-a", &[&[2, 1, 0], &[1, 0, 1], &[0, 1, 1]])
}

/// `(x1^2,x2) ∩ (x3,x4) ∩ (x1,x4^2)`: fails condition (2)(B) at `x1`.
pub fn condition_b_example() -> NumberedIdeal {
    NumberedIdeal::new("condition-b", &[&[2, 1, 0, 0], &[0, 0, 1, 1], &[1, 0, 0, 2]])
}

/// `(x1^{k+1},x2^k) ∩ (x1,x2^{k+1})`: `size I^p = size I + c - k`.
pub fn staircase(k: u32) -> NumberedIdeal {
    NumberedIdeal::new(format!("staircase-k{k}"), &[&[k + 1, k], &[1, k + 1]])
}

/// The deformation example in `K[x,y,z,t,w]`, variables numbered in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationExample {
    /// Generators in their listed order.
    pub generators: Vec<Monomial>,
    /// A non-generic deformation, listed in the same order.
    pub first: Vec<Monomial>,
    /// A generic deformation, listed in the same order.
    pub second: Vec<Monomial>,
}

fn monomials(rows: &[[u32; 5]]) -> Vec<Monomial> {
    rows.iter().map(|r| Monomial::new(r.to_vec())).collect()
}

impl DeformationExample {
    pub fn new() -> Self {
        DeformationExample {
            // xyt, xyw, xtw, yzt, yzw, ztw
            generators: monomials(&[
                [1, 1, 0, 1, 0],
                [1, 1, 0, 0, 1],
                [1, 0, 0, 1, 1],
                [0, 1, 1, 1, 0],
                [0, 1, 1, 0, 1],
                [0, 0, 1, 1, 1],
            ]),
            // xyt, xyw, xt^3w, yzt^2, yzw, ztw
            first: monomials(&[
                [1, 1, 0, 1, 0],
                [1, 1, 0, 0, 1],
                [1, 0, 0, 3, 1],
                [0, 1, 1, 2, 0],
                [0, 1, 1, 0, 1],
                [0, 0, 1, 1, 1],
            ]),
            // x^3y^4t, x^2y^2w, xt^3w^3, y^3zt^2, yz^2w^2, z^3tw^4
            second: monomials(&[
                [3, 4, 0, 1, 0],
                [2, 2, 0, 0, 1],
                [1, 0, 0, 3, 3],
                [0, 3, 1, 2, 0],
                [0, 1, 2, 0, 2],
                [0, 0, 3, 1, 4],
            ]),
        }
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(5, self.generators.clone()).expect("five variables")
    }

    /// Shift vectors taking the listed generators to `deformed`, in canonical generator order.
    pub fn shifts_to(&self, deformed: &[Monomial]) -> Result<DeformationVectors> {
        let listed = DeformationVectors::between(&self.generators, deformed)?;
        let ideal = self.ideal();
        let shifts = ideal
            .generators()
            .iter()
            .map(|g| {
                let i = self.generators.iter().position(|x| x == g).expect("listed generator");
                listed.shifts[i].clone()
            })
            .collect();
        Ok(DeformationVectors { shifts })
    }
}

impl Default for DeformationExample {
    fn default() -> Self {
        Self::new()
    }
}

/// One replayed reference value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusCheck {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

struct Checks(Vec<CorpusCheck>);

impl Checks {
    fn eq<T: Debug + PartialEq>(&mut self, name: &str, expected: T, observed: T) {
        self.0.push(CorpusCheck {
            name: name.to_string(),
            expected: format!("{expected:?}"),
            observed: format!("{observed:?}"),
            passed: expected == observed,
        });
    }
}

fn supports_of(d: &Decomposition) -> BTreeSet<Vec<usize>> {
    d.components().iter().map(|c| c.support().map(|k| k + 1).collect()).collect()
}

fn numbered_report(
    checks: &mut Checks,
    ex: &NumberedIdeal,
    size_i: usize,
    c: usize,
    covers: Option<Vec<Vec<usize>>>,
    size_p: usize,
) -> Result<EqualityVerdict> {
    let ideal = ex.ideal();
    let d = irreducible_decomposition(&ideal)?;
    checks.eq(&format!("{}: decomposition", ex.name), ex.decomposition().to_string(), d.to_string());
    checks.eq(&format!("{}: size I", ex.name), size_i, size(&ideal)?.size);
    let pol = size_of_polarization(&ideal)?;
    checks.eq(&format!("{}: c", ex.name), c, pol.c);
    checks.eq(&format!("{}: size I^p", ex.name), size_p, pol.size_p);
    if let Some(covers) = covers {
        checks.eq(&format!("{}: minimal covers", ex.name), covers, ex.numbered_covers()?);
    }
    predict_equality(&d)
}

/// Replay every reference value; the returned list holds one entry per value.
pub fn replay() -> Result<Vec<CorpusCheck>> {
    let mut checks = Checks(Vec::new());

    let m = top_base_matrix();
    checks.eq("top-base: deterministic build", vec![10, 0, 4], build_top_base(&m).values());
    let all: BTreeSet<Vec<u32>> = enumerate_top_bases(&m)?.iter().map(|t| t.values()).collect();
    checks.eq("top-base: all choices", BTreeSet::from([vec![10, 0, 4], vec![10, 10, 4]]), all);

    let ex = two_squares();
    numbered_report(&mut checks, &ex, 1, 4, None, 3)?;
    let d = ex.decomposition();
    let bar = bar_family(&d, &build_top_base(&PowerMatrix::from_decomposition(&d)))?;
    checks.eq("two-squares: bar ideals", 4, bar.members.len());
    let bar_size = crate::size::size_of_decomposition(&bar.decomposition()?)?.size;
    checks.eq("two-squares: size of bar ideals", 3, bar_size);

    let ex = equality_example();
    let v = numbered_report(&mut checks, &ex, 2, 1, Some(vec![vec![1, 2, 3], vec![1, 2, 4]]), 3)?;
    checks.eq("equality: predicted", true, v.predicted);

    let ex = condition_a_example();
    let v = numbered_report(&mut checks, &ex, 1, 1, Some(vec![vec![1, 2], vec![1, 3], vec![2, 3]]), 1)?;
    checks.eq("condition-a: predicted", false, v.predicted);
    checks.eq("condition-a: fails (2)(A) at", vec![1], ex.failing_conditions(&v).0);

    let ex = condition_b_example();
    let v = numbered_report(&mut checks, &ex, 1, 2, Some(vec![vec![1, 2]]), 2)?;
    checks.eq("condition-b: predicted", false, v.predicted);
    let (fail_a, fail_b) = ex.failing_conditions(&v);
    checks.eq("condition-b: fails (2)(A) at", Vec::<usize>::new(), fail_a);
    checks.eq("condition-b: fails (2)(B) at", vec![1], fail_b);

    for k in 1..=3 {
        let ex = staircase(k);
        let v = numbered_report(&mut checks, &ex, 0, 2 * k as usize, None, k as usize)?;
        checks.eq(&format!("{}: predicted", ex.name), false, v.predicted);
    }

    let ex = DeformationExample::new();
    let ideal = ex.ideal();
    let d = irreducible_decomposition(&ideal)?;
    checks.eq(
        "deformation: primes of I",
        // x, y, z, t, w are x1..x5
        BTreeSet::from([vec![1, 3], vec![2, 4], vec![2, 5], vec![4, 5]]),
        supports_of(&d),
    );
    checks.eq("deformation: size I", 2, size(&ideal)?.size);
    checks.eq("deformation: I is generic", false, is_generic(&ideal));
    for (label, deformed, generic) in [("first", &ex.first, false), ("second", &ex.second, true)] {
        let eps = ex.shifts_to(deformed)?;
        checks.eq(&format!("deformation: {label} is valid"), true, validate_deformation(&ideal, &eps)?);
        let applied = apply_deformation(&ideal, &eps)?;
        let expected = MonomialIdeal::new(5, deformed.clone())?;
        checks.eq(&format!("deformation: {label} generators"), expected.to_string(), applied.to_string());
        checks.eq(&format!("deformation: {label} is generic"), generic, is_generic(&applied));
        let sizes = size_under_deformation(&ideal, &eps)?;
        checks.eq(&format!("deformation: size of {label}"), 1, sizes.size_eps);
        checks.eq(&format!("deformation: {label} strictly smaller"), true, sizes.size_i > sizes.size_eps);
    }
    let second = MonomialIdeal::new(5, ex.second.clone())?;
    let primes: BTreeSet<Vec<usize>> = [
        &[1, 3][..],
        &[2, 4],
        &[2, 5],
        &[4, 5],
        &[2, 4, 5],
        &[1, 4, 5],
        &[2, 3, 5],
        &[1, 3, 5],
        &[1, 2, 5],
        &[2, 3, 4],
        &[1, 3, 4],
        &[1, 2, 3],
        &[1, 2, 3, 5],
        &[1, 2, 3, 4],
    ]
    .iter()
    .map(|p| p.to_vec())
    .collect();
    checks.eq("deformation: primes of second", primes, supports_of(&irreducible_decomposition(&second)?));
    let first = MonomialIdeal::new(5, ex.first.clone())?;
    let comps = [
        [1, 0, 1, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 1, 0, 0, 1],
        [0, 0, 0, 1, 1],
        [1, 0, 0, 2, 1],
        [0, 1, 1, 3, 0],
    ];
    let expected = irredundantize(
        comps.iter().map(|c| IrreducibleComponent::new(c.to_vec())).collect::<Result<_>>()?,
        5,
    )?;
    checks.eq(
        "deformation: first decomposition",
        expected.to_string(),
        irreducible_decomposition(&first)?.to_string(),
    );

    Ok(checks.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values_replay() {
        let checks = replay().unwrap();
        assert!(checks.len() > 40);
        // The equality example's printed size, covers and polarization size
        // do not follow from the size formula; see `equality_example_by_hand`.
        let disputed = ["equality: size I", "equality: size I^p", "equality: minimal covers"];
        for c in &checks {
            assert_eq!(c.passed, !disputed.contains(&c.name.as_str()), "{c:?}");
        }
    }

    #[test]
    fn equality_example_by_hand() {
        // Supports {1,2}, {2,3}, {3,4}, {2,4}: components 1 and 3 already
        // cover all four variables, so v = 2 and size = 2 + 0 - 1 = 1.
        let ex = equality_example();
        assert_eq!(size(&ex.ideal()).unwrap().size, 1);
        assert_eq!(ex.numbered_covers().unwrap(), vec![vec![1, 3]]);
        // Bar ideals (x1_1,x2_1), (x1_2,x2_1), (x2_1,x3_1), (x3_1,x4_1), (x2_1,x4_1):
        // both x1 levels force the first two, x3 and x4 need one more, so size 2.
        let sizes = size_of_polarization(&ex.ideal()).unwrap();
        assert_eq!((sizes.size_p, sizes.size_bar, sizes.c), (2, 2, 1));
        assert!(sizes.is_equality());
        assert!(predict_equality(&ex.decomposition()).unwrap().predicted);
    }
}
