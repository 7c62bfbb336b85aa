//! Monomial ideals given by their minimal generating sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{divides_exps, lcm_exps, Monomial};

/// A monomial ideal in `n` variables, stored as its minimal generators in
/// lexicographic order.
///
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
/// Two ideals are equal iff their canonical generator lists are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// The variable set of a monomial prime ideal (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport {
    pub variables: BTreeSet<usize>,
}

impl PrimeSupport {
    pub fn height(&self) -> usize {
        self.variables.len()
    }
}

/// Keep the divisibility-minimal elements of `gens`, canonically ordered.
pub fn minimalize<I>(gens: I, n: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        if g.n() != n {
            return Err(Error::AmbientMismatch { left: n, right: g.n() });
        }
        all.push(g);
    }
    Ok(MonomialIdeal { n, gens: minimal_elements(all) })
}

pub(crate) fn minimal_elements(mut all: Vec<Monomial>) -> Vec<Monomial> {
    all.sort();
    all.dedup();
    // a divisor of m is lex-smaller than m, so only earlier kept elements can divide it
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for m in all {
        if !kept.iter().any(|k| divides_exps(k.exps(), m.exps())) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Build the ideal generated by `gens`; non-minimal generators are dropped.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(gens, n)
    }

    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        minimalize(gens.iter().map(|e| Monomial::new(e.to_vec())), n)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Error unless the ideal is proper and nonzero.
    pub fn ensure_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Largest exponent of any generator.
    pub fn max_exponent(&self) -> u32 {
        self.gens.iter().flat_map(|g| g.exps().iter().copied()).max().unwrap_or(0)
    }

    /// `a_k`: the largest degree in `x_k` over the generators, for every `k`.
    pub fn degree_bounds(&self) -> Vec<u32> {
        let mut bounds = vec![0; self.n];
        for g in &self.gens {
            for (b, &e) in bounds.iter_mut().zip(g.exps()) {
                *b = (*b).max(e);
            }
        }
        bounds
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::AmbientMismatch { left: self.n, right: n });
        }
        Ok(())
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check(m.n())?;
        Ok(self.contains_exps(m.exps()))
    }

    pub(crate) fn contains_exps(&self, e: &[u32]) -> bool {
        self.gens.iter().any(|g| divides_exps(g.exps(), e))
    }

    /// Intersection, generated by the pairwise lcms of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other.n)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(Monomial::new(lcm_exps(g.exps(), h.exps())));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimal_elements(lcms) })
    }

    /// Sum of two ideals.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other.n)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_elements(all) })
    }

    /// Containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check(other.n)?;
        Ok(self.gens.iter().all(|g| other.contains_exps(g.exps())))
    }

    /// The same ideal in `n + extra` variables; the new variables are unused.
    pub fn embed(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal { n: self.n + extra, gens: self.gens.iter().map(|g| g.embed(extra)).collect() }
    }

    /// Apply `f` to every generator exponent vector and re-minimalize.
    pub fn map_generators<F>(&self, n: usize, f: F) -> Result<MonomialIdeal>
    where
        F: FnMut(&Monomial) -> Monomial,
    {
        minimalize(self.gens.iter().map(f), n)
    }
}

impl fmt::Display for MonomialIdeal {
    /// Renders as `(x1^2*x2, x1*x3)`; the zero ideal renders as `(0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
