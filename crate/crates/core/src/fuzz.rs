//! Differential property suite over seeded random ideals.
//!
//! Every property compares two independent routes to the same quantity (or a
//! quantity against a proven bound). A violation is recorded with the ideal
//! that produced it; a correct implementation records none.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decomposition::{irreducible_decomposition_with, recompose, Decomposition};
use crate::deformation::{
    apply_deformation, find_generic_deformation, is_generic, is_strongly_generic, validate_deformation,
};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::polarization::{
    bar_family, enumerate_top_bases_with, polarize_with, predict_equality_with, PowerMatrix,
};
use crate::random::{InstanceBounds, InstanceGenerator};
use crate::size::{radical, size_of_decomposition_with, size_with};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Intersection of the components regenerates the ideal and none can be dropped.
    Decomposition,
    /// `size I = size √I`.
    RadicalInvariance,
    /// Adding unused variables adds their number to the size.
    InessentialVariables,
    /// `size I^p <= size I + c`.
    Bound,
    /// Bar ideals of every top base have the size of `I^p`.
    BarIdentity,
    /// The equality criterion predicts `size I^p = size I + c` exactly.
    EqualityIff,
    /// `size I >= size I_eps` for a synthesized generic deformation.
    DeformationInequality,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Decomposition => "decomposition",
            Property::RadicalInvariance => "radical-invariance",
            Property::InessentialVariables => "inessential-variables",
            Property::Bound => "bound",
            Property::BarIdentity => "bar-identity",
            Property::EqualityIff => "equality-iff",
            Property::DeformationInequality => "deformation-inequality",
        }
    }
}

/// One failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: Property,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub ideal: String,
    pub n: usize,
    pub property: Property,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub instances: usize,
    /// Number of checks run per property.
    pub checks: BTreeMap<Property, usize>,
    /// Instances where the deformed size was strictly smaller.
    pub strict_deformations: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub bounds: InstanceBounds,
    pub limits: Limits,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig { seed: 0, count: 500, bounds: InstanceBounds::default(), limits: Limits::default() }
    }
}

fn violation(property: Property, observed: impl Into<String>) -> Vec<Violation> {
    vec![Violation { property, observed: observed.into() }]
}

/// Internal-consistency errors become violations; cap errors propagate.
fn absorb(property: Property, result: Result<Vec<Violation>>) -> Result<Vec<Violation>> {
    match result {
        Err(e) if !e.is_cap_exceeded() => Ok(violation(property, e.to_string())),
        other => other,
    }
}

fn without(d: &Decomposition, j: usize) -> Option<MonomialIdeal> {
    if d.len() < 2 {
        return None;
    }
    let rest = d
        .components()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, c)| c.to_ideal())
        .reduce(|a, b| a.intersect(&b).expect("same ambient"))?;
    Some(rest)
}

/// Recomposition gives back the ideal and dropping any component changes it.
pub fn check_decomposition(ideal: &MonomialIdeal, limits: &Limits) -> Result<Vec<Violation>> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    if &recompose(&d) != ideal {
        return Ok(violation(Property::Decomposition, format!("recomposed {}", recompose(&d))));
    }
    for j in 0..d.len() {
        if let Some(rest) = without(&d, j) {
            if &rest == ideal {
                return Ok(violation(
                    Property::Decomposition,
                    format!("component {} is redundant", d.components()[j]),
                ));
            }
        }
    }
    Ok(Vec::new())
}

/// Size of the ideal equals size of its radical, decomposed from scratch.
pub fn check_radical(ideal: &MonomialIdeal, limits: &Limits) -> Result<Vec<Violation>> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    let rad = recompose(&radical(&d));
    let (a, b) = (size_with(ideal, limits)?.size, size_with(&rad, limits)?.size);
    if a != b {
        return Ok(violation(Property::RadicalInvariance, format!("size {a}, size of radical {rad} is {b}")));
    }
    Ok(Vec::new())
}

/// `size` of the ideal in `n + extra` variables is `size + extra`.
pub fn check_inessential(ideal: &MonomialIdeal, extra: usize, limits: &Limits) -> Result<Vec<Violation>> {
    let base = size_with(ideal, limits)?;
    let embedded = size_with(&ideal.embed(extra), limits)?;
    if embedded.size != base.size + extra || embedded.inessential.len() != base.inessential.len() + extra {
        return Ok(violation(
            Property::InessentialVariables,
            format!("size {} in {} vars, {} after adding {extra}", base.size, ideal.n(), embedded.size),
        ));
    }
    Ok(Vec::new())
}

/// The polarization bound, and the bar identity for every top base.
pub fn check_polarization(ideal: &MonomialIdeal, limits: &Limits) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let d = irreducible_decomposition_with(ideal, limits)?;
    let size_i = size_of_decomposition_with(&d, limits)?.size;
    let pol = polarize_with(ideal, limits)?;
    let dp = irreducible_decomposition_with(&pol.ideal, limits)?;
    let size_p = size_of_decomposition_with(&dp, limits)?.size;
    if size_p > size_i + pol.c {
        out.extend(violation(Property::Bound, format!("size_p {size_p} > size {size_i} + c {}", pol.c)));
    }
    let matrix = PowerMatrix::from_decomposition(&d);
    for tb in enumerate_top_bases_with(&matrix, limits)? {
        let bar = bar_family(&d, &tb)?;
        let size_bar = size_of_decomposition_with(&bar.decomposition()?, limits)?.size;
        if size_bar != size_p {
            out.extend(violation(
                Property::BarIdentity,
                format!(
                    "top base {:?} in columns {:?}: bar size {size_bar}, size_p {size_p}",
                    tb.values(),
                    tb.entries.iter().map(|e| e.map(|e| e.column + 1)).collect::<Vec<_>>()
                ),
            ));
        }
    }
    Ok(out)
}

/// The criterion's prediction against the observed sizes.
pub fn check_equality_iff(ideal: &MonomialIdeal, limits: &Limits) -> Result<Vec<Violation>> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    let verdict = predict_equality_with(&d, limits)?;
    let size_i = size_of_decomposition_with(&d, limits)?.size;
    let pol = polarize_with(ideal, limits)?;
    let size_p =
        size_of_decomposition_with(&irreducible_decomposition_with(&pol.ideal, limits)?, limits)?.size;
    let equal = size_p == size_i + pol.c;
    if equal != verdict.predicted {
        return Ok(violation(
            Property::EqualityIff,
            format!("predicted {}, size_p {size_p}, size {size_i}, c {}", verdict.predicted, pol.c),
        ));
    }
    Ok(Vec::new())
}

/// Outcome of the deformation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationCheck {
    pub violations: Vec<Violation>,
    pub strict: bool,
}

/// Synthesize a generic deformation and compare sizes.
pub fn check_deformation(ideal: &MonomialIdeal, seed: u64, limits: &Limits) -> Result<DeformationCheck> {
    let eps = find_generic_deformation(ideal, seed)?;
    let fail = |observed: String| DeformationCheck {
        violations: violation(Property::DeformationInequality, observed),
        strict: false,
    };
    if !validate_deformation(ideal, &eps)? {
        return Ok(fail(format!("synthesized {:?} is not a deformation", eps.shifts)));
    }
    let deformed = apply_deformation(ideal, &eps)?;
    if !is_strongly_generic(&deformed) || !is_generic(&deformed) {
        return Ok(fail(format!("deformed ideal {deformed} is not generic")));
    }
    let size_i = size_with(ideal, limits)?.size;
    let size_eps = size_with(&deformed, limits)?.size;
    if size_i < size_eps {
        return Ok(fail(format!("size {size_i} < deformed size {size_eps} for {deformed}")));
    }
    Ok(DeformationCheck { violations: Vec::new(), strict: size_i > size_eps })
}

/// Run the whole property suite on `count` ideals drawn from `seed`.
///
/// Each instance draws its ideal, then a deformation seed, then the number of
/// extra variables (1 or 2), all from the same stream.
pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    let mut gen = InstanceGenerator::new(config.seed);
    let limits = &config.limits;
    let mut report = FuzzReport {
        seed: config.seed,
        instances: 0,
        checks: BTreeMap::new(),
        strict_deformations: 0,
        counterexamples: Vec::new(),
    };
    for _ in 0..config.count {
        let ideal = gen.from_generators(&config.bounds);
        let deformation_seed = gen.next_u64();
        let extra = gen.gen_range(1, 2);

        let mut found = Vec::new();
        found.extend(absorb(Property::Decomposition, check_decomposition(&ideal, limits))?);
        found.extend(absorb(Property::RadicalInvariance, check_radical(&ideal, limits))?);
        found.extend(absorb(Property::InessentialVariables, check_inessential(&ideal, extra, limits))?);
        found.extend(absorb(Property::Bound, check_polarization(&ideal, limits))?);
        found.extend(absorb(Property::EqualityIff, check_equality_iff(&ideal, limits))?);
        match check_deformation(&ideal, deformation_seed, limits) {
            Ok(check) => {
                report.strict_deformations += usize::from(check.strict);
                found.extend(check.violations);
            }
            Err(e) if !e.is_cap_exceeded() => {
                found.extend(violation(Property::DeformationInequality, e.to_string()))
            }
            Err(e) => return Err(e),
        }
        for p in [
            Property::Decomposition,
            Property::RadicalInvariance,
            Property::InessentialVariables,
            Property::Bound,
            Property::BarIdentity,
            Property::EqualityIff,
            Property::DeformationInequality,
        ] {
            *report.checks.entry(p).or_default() += 1;
        }
        report.instances += 1;
        report.counterexamples.extend(found.into_iter().map(|v| Counterexample {
            ideal: ideal.to_string(),
            n: ideal.n(),
            property: v.property,
            observed: v.observed,
        }));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_reproducible() {
        let config = FuzzConfig { count: 25, seed: 3, ..FuzzConfig::default() };
        let a = run_fuzz(&config).unwrap();
        assert_eq!(a.instances, 25);
        assert_eq!(a, run_fuzz(&config).unwrap());
    }

    #[test]
    fn proven_properties_hold_on_small_run() {
        let config = FuzzConfig { count: 40, seed: 11, ..FuzzConfig::default() };
        let report = run_fuzz(&config).unwrap();
        let proven = [
            Property::Decomposition,
            Property::InessentialVariables,
            Property::Bound,
            Property::DeformationInequality,
        ];
        let bad: Vec<_> = report.counterexamples.iter().filter(|c| proven.contains(&c.property)).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn embedded_prime_changes_size_of_radical() {
        // (x1^2) & (x3) & (x2^3,x3^2): the embedded prime (x2,x3) makes the
        // height 3 and v = 2, so size 1; the radical (x1*x3) has size 2.
        let ideal = MonomialIdeal::from_exponents(3, &[&[2, 0, 2], &[2, 3, 1]]).unwrap();
        let found = check_radical(&ideal, &Limits::default()).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].property, Property::RadicalInvariance);
    }

    #[test]
    fn squarefree_ideal_passes_every_check() {
        let ideal = MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        let limits = Limits::default();
        assert!(check_decomposition(&ideal, &limits).unwrap().is_empty());
        assert!(check_radical(&ideal, &limits).unwrap().is_empty());
        assert!(check_inessential(&ideal, 2, &limits).unwrap().is_empty());
        assert!(check_polarization(&ideal, &limits).unwrap().is_empty());
        assert!(check_equality_iff(&ideal, &limits).unwrap().is_empty());
        assert!(check_deformation(&ideal, 5, &limits).unwrap().violations.is_empty());
    }
}
