//! Irredundant irreducible decomposition of monomial ideals.
//!
//! An irreducible monomial ideal `(x_k^{a_k} : a_k > 0)` is stored as its
//! exponent vector, with `0` meaning the variable is absent. The irredundant
//! irreducible decomposition of a monomial ideal is unique, so a
//! [`Decomposition`] is kept in canonical (lexicographic) component order.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimal_elements, MonomialIdeal, PrimeSupport};
use crate::limits::Limits;
use crate::monomial::Monomial;

/// An irreducible monomial ideal `(x_k^{exps[k]} : exps[k] > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IrreducibleComponent {
    exps: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.iter().all(|&e| e == 0) {
            return Err(Error::EmptyComponent);
        }
        Ok(IrreducibleComponent { exps })
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    /// Variables of the associated prime.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k)
    }

    pub fn prime(&self) -> PrimeSupport {
        PrimeSupport { variables: self.support().collect() }
    }

    /// Radical: every positive exponent clamped to 1.
    pub fn radical(&self) -> IrreducibleComponent {
        IrreducibleComponent { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// The component as an ideal generated by pure powers.
    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.n();
        let gens = self.support().map(|k| Monomial::pure_power(n, k, self.exps[k])).collect();
        MonomialIdeal::new(n, gens).expect("pure powers share the ambient")
    }

    /// `self ⊆ other` as ideals: every pure power generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&mine, &theirs)| mine == 0 || (theirs > 0 && theirs <= mine))
    }

    fn embed(&self, extra: usize) -> IrreducibleComponent {
        let mut exps = self.exps.clone();
        exps.resize(self.exps.len() + extra, 0);
        IrreducibleComponent { exps }
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.support().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match self.exps[k] {
                1 => write!(f, "x{}", k + 1)?,
                e => write!(f, "x{}^{}", k + 1, e)?,
            }
        }
        f.write_str(")")
    }
}

/// An irredundant list of irreducible components in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    n: usize,
    components: Vec<IrreducibleComponent>,
}

impl Decomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Index of `component` in the canonical order, if present.
    pub fn position(&self, component: &IrreducibleComponent) -> Option<usize> {
        self.components.binary_search(component).ok()
    }

    /// The decomposition of the same ideal in `n + extra` variables.
    pub fn embed(&self, extra: usize) -> Decomposition {
        Decomposition {
            n: self.n + extra,
            components: self.components.iter().map(|c| c.embed(extra)).collect(),
        }
    }

    /// Render with `sep` between components, e.g. `" & "` or `" ∩ "`.
    pub fn render(&self, sep: &str) -> String {
        self.components.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(" & "))
    }
}

/// Drop redundant components, scanning in canonical order.
///
/// An irreducible ideal contains an intersection of irreducible ideals only if
/// it contains one of them, so component `j` is redundant exactly when some
/// other kept component is contained in it.
pub fn irredundantize(components: Vec<IrreducibleComponent>, n: usize) -> Result<Decomposition> {
    if components.is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    let mut comps = components;
    for c in &comps {
        if c.n() != n {
            return Err(Error::AmbientMismatch { left: n, right: c.n() });
        }
        if c.exps.iter().all(|&e| e == 0) {
            return Err(Error::EmptyComponent);
        }
    }
    comps.sort();
    comps.dedup();
    let mut alive = vec![true; comps.len()];
    for j in 0..comps.len() {
        let redundant = (0..comps.len()).any(|i| i != j && alive[i] && comps[i].is_subset_of(&comps[j]));
        if redundant {
            alive[j] = false;
        }
    }
    let components = comps.into_iter().zip(alive).filter_map(|(c, keep)| keep.then_some(c)).collect();
    Ok(Decomposition { n, components })
}

/// Intersection of all components.
pub fn recompose(d: &Decomposition) -> MonomialIdeal {
    let mut iter = d.components.iter();
    let Some(first) = iter.next() else {
        return MonomialIdeal::unit(d.n);
    };
    iter.fold(first.to_ideal(), |acc, c| acc.intersect(&c.to_ideal()).expect("components share the ambient"))
}

/// The unique irredundant irreducible decomposition of a proper nonzero ideal.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    irreducible_decomposition_with(ideal, &Limits::default())
}

/// [`irreducible_decomposition`] under explicit caps.
///
/// Splits a mixed generator `m = x_k^a * v` (with `k` its lowest variable)
/// into the branches where `m` is replaced by `x_k^a` and by `v`, until every
/// generator is a pure power. Ideals already visited are skipped.
pub fn irreducible_decomposition_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<Decomposition> {
    ideal.ensure_proper()?;
    let leaves = split_leaves(ideal, limits.max_components)?;
    irredundantize(leaves.into_iter().collect(), ideal.n())
}

fn split_leaves(ideal: &MonomialIdeal, limit: usize) -> Result<BTreeSet<IrreducibleComponent>> {
    let n = ideal.n();
    let mut leaves = BTreeSet::new();
    let mut seen: HashSet<Vec<Monomial>> = HashSet::new();
    let mut stack = vec![ideal.generators().to_vec()];
    while let Some(gens) = stack.pop() {
        if !seen.insert(gens.clone()) {
            continue;
        }
        let Some(pos) = gens.iter().position(|g| g.support_len() > 1) else {
            let mut exps = vec![0; n];
            for g in &gens {
                let k = g.support().next().expect("proper ideal has no unit generator");
                exps[k] = g.exp(k);
            }
            leaves.insert(IrreducibleComponent { exps });
            if leaves.len() > limit {
                return Err(Error::ComponentLimit { limit });
            }
            continue;
        };
        let m = &gens[pos];
        let k = m.support().next().expect("mixed generator");
        let power = Monomial::pure_power(n, k, m.exp(k));
        let mut rest_exps = m.exps().to_vec();
        rest_exps[k] = 0;
        let rest = Monomial::new(rest_exps);
        for part in [power, rest] {
            let mut next: Vec<Monomial> =
                gens.iter().enumerate().filter(|&(i, _)| i != pos).map(|(_, g)| g.clone()).collect();
            next.push(part);
            stack.push(minimal_elements(next));
        }
    }
    Ok(leaves)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(e: &[u32]) -> IrreducibleComponent {
        IrreducibleComponent::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    /// Oracle: the intersection regenerates the ideal and no component can be dropped.
    fn check_decomposition(i: &MonomialIdeal, d: &Decomposition) {
        assert_eq!(&recompose(d), i);
        for j in 0..d.len() {
            let mut rest = d.components().to_vec();
            let dropped = rest.remove(j);
            if rest.is_empty() {
                continue;
            }
            let others = Decomposition { n: d.n(), components: rest };
            assert!(!recompose(&others).is_subset_of(&dropped.to_ideal()).unwrap());
        }
    }

    #[test]
    fn already_irreducible() {
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(d.components(), &[comp(&[2, 1])]);
    }

    #[test]
    fn mixed_generators() {
        let i = ideal(3, &[&[2, 1, 0], &[1, 0, 1]]);
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(d.components(), &[comp(&[0, 1, 1]), comp(&[1, 0, 0]), comp(&[2, 0, 1])]);
        check_decomposition(&i, &d);
    }

    #[test]
    fn two_disjoint_components() {
        let q1 = ideal(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0]]);
        let q2 = ideal(4, &[&[0, 0, 2, 0], &[0, 0, 0, 2]]);
        let i = q1.intersect(&q2).unwrap();
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(d.components(), &[comp(&[0, 0, 2, 2]), comp(&[2, 2, 0, 0])]);
        assert_eq!(recompose(&d), i);
    }

    #[test]
    fn irredundantize_examples() {
        let d = irredundantize(vec![comp(&[1, 0]), comp(&[1, 1])], 2).unwrap();
        assert_eq!(d.components(), &[comp(&[1, 0])]);

        let d = irredundantize(vec![comp(&[2, 1]), comp(&[1, 2])], 2).unwrap();
        assert_eq!(d.components(), &[comp(&[1, 2]), comp(&[2, 1])]);

        // raw split with a redundant fourth component (x1^2, x2, x3) ⊇ (x2, x3)
        let raw = vec![comp(&[2, 1, 1]), comp(&[1, 0, 0]), comp(&[0, 1, 1]), comp(&[2, 0, 1])];
        let d = irredundantize(raw, 3).unwrap();
        assert_eq!(d.components(), &[comp(&[0, 1, 1]), comp(&[1, 0, 0]), comp(&[2, 0, 1])]);
        assert_eq!(irredundantize(vec![], 3), Err(Error::EmptyDecomposition));
    }

    #[test]
    fn recompose_examples() {
        let d = irredundantize(vec![comp(&[2, 1])], 2).unwrap();
        assert_eq!(recompose(&d), ideal(2, &[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn rejects_improper() {
        assert_eq!(irreducible_decomposition(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
        assert_eq!(irreducible_decomposition(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn component_limit() {
        // (x1*x2, x3*x4, x5*x6) has 8 components
        let i = ideal(6, &[&[1, 1, 0, 0, 0, 0], &[0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 1, 1]]);
        let limits = Limits { max_components: 4, ..Limits::default() };
        assert_eq!(irreducible_decomposition_with(&i, &limits), Err(Error::ComponentLimit { limit: 4 }));
        assert_eq!(irreducible_decomposition(&i).unwrap().len(), 8);
    }

    #[test]
    fn component_containment() {
        assert!(comp(&[2, 0]).is_subset_of(&comp(&[1, 1])));
        assert!(!comp(&[1, 1]).is_subset_of(&comp(&[2, 0])));
        assert!(!comp(&[1, 0]).is_subset_of(&comp(&[0, 1])));
    }

    #[test]
    fn display() {
        let d = irredundantize(vec![comp(&[2, 1, 0]), comp(&[0, 1, 1])], 3).unwrap();
        assert_eq!(d.to_string(), "(x2,x3) & (x1^2,x2)");
    }
}
