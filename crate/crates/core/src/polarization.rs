//! Polarization, top bases, bar ideals, and the size bound under polarization.
//!
//! Polarized variables are laid out in blocks: variable `x_k` with degree
//! bound `a_k` owns the slots `offset(k) .. offset(k) + max(a_k, 1)`, slot
//! `offset(k) + l - 1` holding `x_{k,l}`. A variable that no generator uses
//! keeps a single slot, so a squarefree ideal polarizes to itself and
//! `c = n' - n` never goes negative.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::decomposition::{
    irreducible_decomposition_with, irredundantize, Decomposition, IrreducibleComponent,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::Monomial;
use crate::size::{minimal_covers_with, size_of_decomposition_with, CoverFamily};

/// The polarized variable `x_{k,l}`; `var` is 0-based, `level` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PolarizedVariable {
    pub var: usize,
    pub level: u32,
}

impl fmt::Display for PolarizedVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}_{}", self.var + 1, self.level)
    }
}

/// Slot layout of the polarized ring for a given vector of degree bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarLayout {
    bounds: Vec<u32>,
    offsets: Vec<usize>,
    n_prime: usize,
}

impl PolarLayout {
    pub fn new(bounds: Vec<u32>) -> Self {
        let mut offsets = Vec::with_capacity(bounds.len());
        let mut next = 0usize;
        for &a in &bounds {
            offsets.push(next);
            next += a.max(1) as usize;
        }
        PolarLayout { bounds, offsets, n_prime: next }
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn n(&self) -> usize {
        self.bounds.len()
    }

    /// Ambient variable count of the polarized ring.
    pub fn n_prime(&self) -> usize {
        self.n_prime
    }

    /// `c = n' - n`.
    pub fn c(&self) -> usize {
        self.n_prime - self.n()
    }

    /// Slot of `x_{var,level}` (`var` 0-based, `level` 1-based).
    pub fn slot(&self, var: usize, level: u32) -> usize {
        debug_assert!(level >= 1 && level <= self.bounds[var].max(1));
        self.offsets[var] + level as usize - 1
    }

    pub fn var_map(&self) -> Vec<PolarizedVariable> {
        self.bounds
            .iter()
            .enumerate()
            .flat_map(|(var, &a)| (1..=a.max(1)).map(move |level| PolarizedVariable { var, level }))
            .collect()
    }

    fn polarize_monomial(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![0; self.n_prime];
        for (k, &e) in m.exps().iter().enumerate() {
            for l in 1..=e {
                exps[self.slot(k, l)] = 1;
            }
        }
        Monomial::new(exps)
    }

    /// The squarefree component selecting `x_{k, levels[k]}` for every `k` with `levels[k] > 0`.
    fn select(&self, levels: &[u32]) -> IrreducibleComponent {
        let mut exps = vec![0; self.n_prime];
        for (k, &l) in levels.iter().enumerate() {
            if l > 0 {
                exps[self.slot(k, l)] = 1;
            }
        }
        IrreducibleComponent::new(exps).expect("component selects at least one variable")
    }
}

/// Output of [`polarize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationResult {
    /// The squarefree polarized ideal over `n'` variables.
    pub ideal: MonomialIdeal,
    /// Slot to polarized variable.
    pub var_map: Vec<PolarizedVariable>,
    /// `a_k`: the largest degree of `x_k` among the generators.
    pub bounds: Vec<u32>,
    pub c: usize,
}

impl PolarizationResult {
    pub fn layout(&self) -> PolarLayout {
        PolarLayout::new(self.bounds.clone())
    }

    pub fn n_prime(&self) -> usize {
        self.var_map.len()
    }

    /// Render the polarized ideal with `x{k}_{l}` variable names.
    pub fn render_ideal(&self) -> String {
        render_polarized_ideal(&self.ideal, &self.var_map)
    }
}

pub fn render_polarized_monomial(m: &Monomial, var_map: &[PolarizedVariable]) -> String {
    let factors: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(slot, &e)| match e {
            1 => var_map[slot].to_string(),
            e => format!("{}^{}", var_map[slot], e),
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn render_polarized_ideal(ideal: &MonomialIdeal, var_map: &[PolarizedVariable]) -> String {
    let gens: Vec<String> =
        ideal.generators().iter().map(|g| render_polarized_monomial(g, var_map)).collect();
    format!("({})", gens.join(", "))
}

pub fn render_polarized_component(c: &IrreducibleComponent, var_map: &[PolarizedVariable]) -> String {
    let vars: Vec<String> = c.support().map(|slot| var_map[slot].to_string()).collect();
    format!("({})", vars.join(","))
}

fn check_exponents(ideal: &MonomialIdeal, limits: &Limits) -> Result<()> {
    let max = ideal.max_exponent();
    if max > limits.max_exponent {
        return Err(Error::ExponentLimit { exponent: max as u64, limit: limits.max_exponent });
    }
    Ok(())
}

/// Polarization of a proper nonzero ideal.
pub fn polarize(ideal: &MonomialIdeal) -> Result<PolarizationResult> {
    polarize_with(ideal, &Limits::default())
}

pub fn polarize_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<PolarizationResult> {
    ideal.ensure_proper()?;
    check_exponents(ideal, limits)?;
    let layout = PolarLayout::new(ideal.degree_bounds());
    let polarized = ideal.map_generators(layout.n_prime(), |g| layout.polarize_monomial(g))?;
    Ok(PolarizationResult {
        ideal: polarized,
        var_map: layout.var_map(),
        c: layout.c(),
        bounds: layout.bounds,
    })
}

/// The polarization of an irreducible component: one prime per choice of
/// levels `1 <= b_k <= a_k` on its support.
pub fn polarize_component(q: &IrreducibleComponent, bounds: &[u32]) -> Result<Vec<IrreducibleComponent>> {
    if q.n() != bounds.len() {
        return Err(Error::AmbientMismatch { left: q.n(), right: bounds.len() });
    }
    if q.exps().iter().zip(bounds).any(|(&e, &a)| e > a) {
        return Err(Error::Internal(format!("component {q} exceeds the degree bounds")));
    }
    let layout = PolarLayout::new(bounds.to_vec());
    Ok(polarize_component_in(q, &layout))
}

fn polarize_component_in(q: &IrreducibleComponent, layout: &PolarLayout) -> Vec<IrreducibleComponent> {
    let support: Vec<usize> = q.support().collect();
    let mut levels = vec![0u32; q.n()];
    for &k in &support {
        levels[k] = 1;
    }
    let mut out = Vec::new();
    loop {
        out.push(layout.select(&levels));
        // odometer over the support
        let mut advanced = false;
        for &k in support.iter().rev() {
            if levels[k] < q.exp(k) {
                levels[k] += 1;
                advanced = true;
                break;
            }
            levels[k] = 1;
        }
        if !advanced {
            return out;
        }
    }
}

/// The matrix `M[i][k] = a^i_k` of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerMatrix {
    rows: Vec<Vec<u32>>,
    column_max: Vec<u32>,
}

impl PowerMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        let mut column_max = vec![0; width];
        for row in &rows {
            assert_eq!(row.len(), width, "ragged power matrix");
            for (m, &e) in column_max.iter_mut().zip(row) {
                *m = (*m).max(e);
            }
        }
        PowerMatrix { rows, column_max }
    }

    pub fn from_decomposition(d: &Decomposition) -> Self {
        PowerMatrix::new(d.components().iter().map(|c| c.exps().to_vec()).collect())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.column_max.len()
    }

    /// Column maxima `a_k`.
    pub fn column_max(&self) -> &[u32] {
        &self.column_max
    }

    /// A positive entry that is maximal in its column.
    pub fn is_top_power(&self, row: usize, col: usize) -> bool {
        let e = self.rows[row][col];
        e > 0 && e == self.column_max[col]
    }

    /// Largest top power of `row` among `cols`, if any.
    fn max_top_power(&self, row: usize, cols: &BTreeSet<usize>) -> Option<u32> {
        cols.iter().filter(|&&k| self.is_top_power(row, k)).map(|&k| self.rows[row][k]).max()
    }

    /// `max(B^row_[n])`: the largest top power of `row` over all columns.
    pub fn max_top_power_overall(&self, row: usize) -> Option<u32> {
        (0..self.n()).filter(|&k| self.is_top_power(row, k)).map(|k| self.rows[row][k]).max()
    }
}

/// One chosen top power: `value = M[row][column]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TopEntry {
    pub value: u32,
    pub row: usize,
    pub column: usize,
}

/// A top base: per row either a chosen top power or nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TopBase {
    pub entries: Vec<Option<TopEntry>>,
}

impl TopBase {
    /// `c_i`: the chosen value, or 0 for skipped rows.
    pub fn values(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.map_or(0, |t| t.value)).collect()
    }

    pub fn total(&self) -> u64 {
        self.values().iter().map(|&v| v as u64).sum()
    }
}

/// Build a top base, taking the smallest column among the maximal top powers.
pub fn build_top_base(m: &PowerMatrix) -> TopBase {
    let mut cols: BTreeSet<usize> = (0..m.n()).collect();
    let mut entries = Vec::with_capacity(m.r());
    for row in 0..m.r() {
        let entry = m.max_top_power(row, &cols).map(|best| {
            let column = *cols
                .iter()
                .find(|&&k| m.is_top_power(row, k) && m.rows[row][k] == best)
                .expect("maximum is attained");
            cols.remove(&column);
            TopEntry { value: best, row, column }
        });
        entries.push(entry);
    }
    TopBase { entries }
}

/// Every top base reachable by varying the column choice at each step.
pub fn enumerate_top_bases(m: &PowerMatrix) -> Result<BTreeSet<TopBase>> {
    enumerate_top_bases_with(m, &Limits::default())
}

pub fn enumerate_top_bases_with(m: &PowerMatrix, limits: &Limits) -> Result<BTreeSet<TopBase>> {
    let mut found = BTreeSet::new();
    let mut branches = 0usize;
    let cols: BTreeSet<usize> = (0..m.n()).collect();
    let mut entries = Vec::with_capacity(m.r());
    enumerate_from(m, 0, &cols, &mut entries, &mut found, &mut branches, limits.max_top_base_branches)?;
    Ok(found)
}

fn enumerate_from(
    m: &PowerMatrix,
    row: usize,
    cols: &BTreeSet<usize>,
    entries: &mut Vec<Option<TopEntry>>,
    found: &mut BTreeSet<TopBase>,
    branches: &mut usize,
    limit: usize,
) -> Result<()> {
    *branches += 1;
    if *branches > limit {
        return Err(Error::TopBaseLimit { limit });
    }
    if row == m.r() {
        found.insert(TopBase { entries: entries.clone() });
        return Ok(());
    }
    match m.max_top_power(row, cols) {
        None => {
            entries.push(None);
            enumerate_from(m, row + 1, cols, entries, found, branches, limit)?;
            entries.pop();
        }
        Some(best) => {
            let choices: Vec<usize> =
                cols.iter().copied().filter(|&k| m.is_top_power(row, k) && m.rows[row][k] == best).collect();
            for column in choices {
                let mut rest = cols.clone();
                rest.remove(&column);
                entries.push(Some(TopEntry { value: best, row, column }));
                enumerate_from(m, row + 1, &rest, entries, found, branches, limit)?;
                entries.pop();
            }
        }
    }
    Ok(())
}

/// One bar ideal: level `level` (1-based) of component `row`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BarMember {
    pub row: usize,
    pub level: u32,
    pub component: IrreducibleComponent,
}

/// The bar ideals of a decomposition with respect to a top base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarFamily {
    pub layout: PolarLayout,
    pub members: Vec<BarMember>,
}

impl BarFamily {
    /// The irredundant decomposition of the intersection of all bar ideals.
    pub fn decomposition(&self) -> Result<Decomposition> {
        irredundantize(self.members.iter().map(|m| m.component.clone()).collect(), self.layout.n_prime())
    }
}

/// For each row `i` with `c_i > 0` and each `1 <= j <= c_i`, the prime
/// selecting `x_{k, min(j, a^i_k)}` for every `k` in the support of row `i`.
pub fn bar_family(d: &Decomposition, top_base: &TopBase) -> Result<BarFamily> {
    if top_base.entries.len() != d.len() {
        return Err(Error::Internal(format!(
            "top base has {} rows, decomposition has {}",
            top_base.entries.len(),
            d.len()
        )));
    }
    let matrix = PowerMatrix::from_decomposition(d);
    let layout = PolarLayout::new(matrix.column_max().to_vec());
    let mut members = Vec::new();
    for (row, (q, c)) in d.components().iter().zip(top_base.values()).enumerate() {
        for level in 1..=c {
            let levels: Vec<u32> = q.exps().iter().map(|&a| a.min(level)).collect();
            members.push(BarMember { row, level, component: layout.select(&levels) });
        }
    }
    Ok(BarFamily { layout, members })
}

/// Sizes of an ideal and of its polarization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolarizationSizes {
    /// Size of the polarization, from its own decomposition.
    pub size_p: usize,
    /// Size of the polarization, from the bar ideals of the deterministic top base.
    pub size_bar: usize,
    pub size_i: usize,
    pub c: usize,
    /// `size_p <= size_i + c`.
    pub bound_holds: bool,
}

impl PolarizationSizes {
    pub fn is_equality(&self) -> bool {
        self.size_p == self.size_i + self.c
    }

    /// The bar ideals have the same size as the polarization.
    pub fn bar_agrees(&self) -> bool {
        self.size_bar == self.size_p
    }
}

pub fn size_of_polarization(ideal: &MonomialIdeal) -> Result<PolarizationSizes> {
    size_of_polarization_with(ideal, &Limits::default())
}

/// Size of `I^p` by direct decomposition and through the bar ideals of the
/// deterministic top base. A size above `size I + c` is reported as an error.
pub fn size_of_polarization_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<PolarizationSizes> {
    let pol = polarize_with(ideal, limits)?;
    let d = irreducible_decomposition_with(ideal, limits)?;
    let matrix = PowerMatrix::from_decomposition(&d);
    if matrix.column_max() != pol.bounds.as_slice() {
        return Err(Error::Internal(format!(
            "generator degree bounds {:?} differ from component bounds {:?}",
            pol.bounds,
            matrix.column_max()
        )));
    }
    let size_i = size_of_decomposition_with(&d, limits)?.size;
    let dp = irreducible_decomposition_with(&pol.ideal, limits)?;
    let size_p = size_of_decomposition_with(&dp, limits)?.size;
    let bar = bar_family(&d, &build_top_base(&matrix))?;
    let size_bar = size_of_decomposition_with(&bar.decomposition()?, limits)?.size;
    if size_p > size_i + pol.c {
        return Err(Error::Internal(format!(
            "size of the polarization {size_p} exceeds size {size_i} + c {}",
            pol.c
        )));
    }
    Ok(PolarizationSizes { size_p, size_bar, size_i, c: pol.c, bound_holds: true })
}

/// The index sets attached to a variable `x_k` (0-based component indices).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Tlu {
    /// Components where `x_k` appears with exponent at least 2.
    pub t: Vec<usize>,
    /// Components whose prime contains `x_k`.
    pub l: Vec<usize>,
    /// Components with `x_k` itself as a generator and some top power above 1.
    pub u: Vec<usize>,
}

pub fn compute_tlu(d: &Decomposition, var: usize) -> Result<Tlu> {
    if var >= d.n() {
        return Err(Error::AmbientMismatch { left: d.n(), right: var + 1 });
    }
    let matrix = PowerMatrix::from_decomposition(d);
    Ok(tlu_of(&matrix, var))
}

fn tlu_of(matrix: &PowerMatrix, var: usize) -> Tlu {
    let mut tlu = Tlu::default();
    for (i, row) in matrix.rows().iter().enumerate() {
        let e = row[var];
        if e >= 2 {
            tlu.t.push(i);
        }
        if e >= 1 {
            tlu.l.push(i);
        }
        if e == 1 && matrix.max_top_power_overall(i).is_some_and(|top| top > 1) {
            tlu.u.push(i);
        }
    }
    tlu
}

/// How one shared variable fares under the equality criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariableVerdict {
    /// 0-based variable index.
    pub var: usize,
    pub tlu: Tlu,
    /// `T_k` is empty.
    pub condition_1: bool,
    /// No `t` in `T_k` lies in a minimal cover together with another member of `L_k`.
    pub condition_2a: bool,
    /// If some `t` in `T_k` lies in a minimal cover then `U_k` is empty.
    pub condition_2b: bool,
    pub holds: bool,
}

/// Observed sizes, attached by [`verify_equality`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActualEquality {
    pub size_p: usize,
    pub size_i: usize,
    pub c: usize,
    pub equal: bool,
}

/// Prediction of whether `size I^p = size I + c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityVerdict {
    pub predicted: bool,
    /// Every component has at most one exponent of 2 or more.
    pub shape_ok: bool,
    /// Components violating the shape condition (0-based).
    pub shape_violations: Vec<usize>,
    pub covers: CoverFamily,
    /// One entry per variable lying in at least two associated primes.
    pub per_variable: Vec<VariableVerdict>,
    pub actual: Option<ActualEquality>,
}

impl EqualityVerdict {
    /// Prediction matches the observed sizes; `None` before verification.
    pub fn agrees(&self) -> Option<bool> {
        self.actual.as_ref().map(|a| a.equal == self.predicted)
    }
}

pub fn predict_equality(d: &Decomposition) -> Result<EqualityVerdict> {
    predict_equality_with(d, &Limits::default())
}

/// Decide equality from the shape of the components and the sets `T_k`,
/// `L_k`, `U_k` and the minimal covers; no top base is consulted.
pub fn predict_equality_with(d: &Decomposition, limits: &Limits) -> Result<EqualityVerdict> {
    if d.is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    let matrix = PowerMatrix::from_decomposition(d);
    let covers = minimal_covers_with(d, limits)?;
    let shape_violations: Vec<usize> = matrix
        .rows()
        .iter()
        .enumerate()
        .filter(|(_, row)| row.iter().filter(|&&e| e >= 2).count() > 1)
        .map(|(i, _)| i)
        .collect();
    let shape_ok = shape_violations.is_empty();

    let mut per_variable = Vec::new();
    for var in 0..d.n() {
        let tlu = tlu_of(&matrix, var);
        if tlu.l.len() < 2 {
            continue;
        }
        let condition_1 = tlu.t.is_empty();
        let condition_2a =
            tlu.t.iter().all(|&t| tlu.l.iter().filter(|&&l| l != t).all(|&l| !covers.share_cover(t, l)));
        let t_in_cover = tlu.t.iter().any(|&t| covers.in_some_cover(t));
        let condition_2b = !t_in_cover || tlu.u.is_empty();
        let holds = condition_1 || (condition_2a && condition_2b);
        per_variable.push(VariableVerdict { var, tlu, condition_1, condition_2a, condition_2b, holds });
    }
    let predicted = shape_ok && per_variable.iter().all(|v| v.holds);
    Ok(EqualityVerdict { predicted, shape_ok, shape_violations, covers, per_variable, actual: None })
}

/// Prediction together with the observed sizes.
pub fn verify_equality(ideal: &MonomialIdeal) -> Result<EqualityVerdict> {
    verify_equality_with(ideal, &Limits::default())
}

pub fn verify_equality_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<EqualityVerdict> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    let mut verdict = predict_equality_with(&d, limits)?;
    let sizes = size_of_polarization_with(ideal, limits)?;
    verdict.actual = Some(ActualEquality {
        size_p: sizes.size_p,
        size_i: sizes.size_i,
        c: sizes.c,
        equal: sizes.is_equality(),
    });
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{irreducible_decomposition, recompose};

    fn comp(e: &[u32]) -> IrreducibleComponent {
        IrreducibleComponent::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn example_3_2() -> PowerMatrix {
        PowerMatrix::new(vec![vec![10, 10, 1], vec![10, 2, 0], vec![1, 0, 4]])
    }

    #[test]
    fn squarefree_polarizes_to_itself() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let p = polarize(&i).unwrap();
        assert_eq!(p.c, 0);
        assert_eq!(p.ideal, i);
        // an unused variable keeps one slot
        let i = ideal(2, &[&[1, 0]]);
        let p = polarize(&i).unwrap();
        assert_eq!((p.c, p.n_prime()), (0, 2));
        assert_eq!(p.ideal, i);
    }

    #[test]
    fn polarize_pure_squares() {
        let p = polarize(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(p.n_prime(), 4);
        assert_eq!(p.c, 2);
        assert_eq!(p.render_ideal(), "(x2_1*x2_2, x1_1*x1_2)");
        assert_eq!(p.ideal, ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]));
    }

    #[test]
    fn polarize_rejects_large_exponents() {
        let i = ideal(1, &[&[5]]);
        let limits = Limits { max_exponent: 4, ..Limits::default() };
        assert_eq!(polarize_with(&i, &limits), Err(Error::ExponentLimit { exponent: 5, limit: 4 }));
        assert_eq!(polarize(&MonomialIdeal::unit(1)), Err(Error::UnitIdeal));
    }

    #[test]
    fn polarize_component_examples() {
        let pieces = polarize_component(&comp(&[2, 1]), &[2, 1]).unwrap();
        let layout = PolarLayout::new(vec![2, 1]);
        let names: Vec<String> =
            pieces.iter().map(|c| render_polarized_component(c, &layout.var_map())).collect();
        assert_eq!(names, vec!["(x1_1,x2_1)", "(x1_2,x2_1)"]);
        assert_eq!(polarize_component(&comp(&[1]), &[1]).unwrap().len(), 1);

        // the four primes of (x1^2, x2^2) intersect to its polarization
        let q = comp(&[2, 2]);
        let pieces = polarize_component(&q, &[2, 2]).unwrap();
        assert_eq!(pieces.len(), 4);
        let d = irredundantize(pieces, 4).unwrap();
        assert_eq!(recompose(&d), polarize(&q.to_ideal()).unwrap().ideal);
    }

    #[test]
    fn top_base_of_three_by_three() {
        let tb = build_top_base(&example_3_2());
        assert_eq!(tb.values(), vec![10, 0, 4]);
        let all = enumerate_top_bases(&example_3_2()).unwrap();
        let values: BTreeSet<Vec<u32>> = all.iter().map(TopBase::values).collect();
        assert_eq!(values, BTreeSet::from([vec![10, 0, 4], vec![10, 10, 4]]));
    }

    #[test]
    fn top_base_small_cases() {
        assert_eq!(build_top_base(&PowerMatrix::new(vec![vec![3, 1]])).values(), vec![3]);
        let single = enumerate_top_bases(&PowerMatrix::new(vec![vec![7]])).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single.first().unwrap().values(), vec![7]);
        // distinct column maxima in distinct rows: nothing to choose
        let m = PowerMatrix::new(vec![vec![3, 1, 0], vec![1, 2, 0], vec![0, 1, 5]]);
        assert_eq!(enumerate_top_bases(&m).unwrap().len(), 1);
    }

    #[test]
    fn top_base_branch_limit() {
        let limits = Limits { max_top_base_branches: 2, ..Limits::default() };
        assert_eq!(enumerate_top_bases_with(&example_3_2(), &limits), Err(Error::TopBaseLimit { limit: 2 }));
    }

    #[test]
    fn bar_family_with_level_one_rows() {
        let d = irredundantize(vec![comp(&[1, 1, 0]), comp(&[0, 1, 1])], 3).unwrap();
        let tb = build_top_base(&PowerMatrix::from_decomposition(&d));
        let bar = bar_family(&d, &tb).unwrap();
        assert_eq!(bar.members.len(), tb.total() as usize);
        for m in &bar.members {
            assert_eq!(m.component, d.components()[m.row]);
        }
    }

    #[test]
    fn tlu_edge_cases() {
        let d = irreducible_decomposition(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]])).unwrap();
        for k in 0..3 {
            assert!(compute_tlu(&d, k).unwrap().t.is_empty());
        }
        let d = irredundantize(vec![comp(&[2, 0, 0]), comp(&[0, 1, 0])], 3).unwrap();
        assert_eq!(compute_tlu(&d, 2).unwrap(), Tlu::default());
        assert!(compute_tlu(&d, 3).is_err());
    }

    #[test]
    fn squarefree_prediction_is_equality() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let v = verify_equality(&i).unwrap();
        assert!(v.predicted);
        assert_eq!(v.agrees(), Some(true));
    }
}
