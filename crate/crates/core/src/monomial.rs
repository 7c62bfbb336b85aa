//! Monomials as exponent vectors.

use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x1^e1 * ... * xn^en`, stored as its exponent vector.
///
/// Ordering is lexicographic on the exponent vector, which is the canonical
/// order used for generator lists everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_var^exp` in `n` variables (`var` is 0-based).
    pub fn pure_power(n: usize, var: usize, exp: u32) -> Self {
        let mut exps = vec![0; n];
        exps[var] = exp;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exps(self) -> Vec<u32> {
        self.exps
    }

    /// Ambient variable count.
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k)
    }

    /// Number of variables with positive exponent.
    pub fn support_len(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch { left: self.n(), right: other.n() });
        }
        Ok(())
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check(other)?;
        Ok(divides_exps(&self.exps, &other.exps))
    }

    /// True iff `self` divides `other` and `other / x_i` for every variable `x_i` dividing `other`.
    pub fn strictly_divides(&self, other: &Monomial) -> Result<bool> {
        self.check(other)?;
        Ok(strictly_divides_exps(&self.exps, &other.exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial { exps: lcm_exps(&self.exps, &other.exps) })
    }

    /// Append `extra` variables with exponent zero.
    pub fn embed(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(self.exps.len() + extra, 0);
        Monomial { exps }
    }
}

pub(crate) fn divides_exps(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn strictly_divides_exps(a: &[u32], b: &[u32]) -> bool {
    // decrementing slot i of b only matters in slot i
    a.iter().zip(b).all(|(&x, &y)| if y > 0 { x < y } else { x == 0 })
}

pub(crate) fn lcm_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

impl fmt::Display for Monomial {
    /// Renders as `x1^2*x3`; the constant monomial renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}
