//! Lyubeznik size of a monomial ideal.
//!
//! For an irredundant decomposition with associated primes `P_1..P_r`,
//! `size = v + (n - h) - 1` where `h` is the height of `P_1 + ... + P_r` and
//! `v` is the least number of primes whose sum already equals that sum. Only
//! the variable sets of the primes matter, so `v` is a minimum set cover of
//! the union of supports.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::decomposition::{irreducible_decomposition_with, irredundantize, Decomposition};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;

/// The quantities entering the size formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    /// Minimum number of components whose supports cover the union of all supports.
    pub v: usize,
    /// Height of the sum of the associated primes.
    pub h: usize,
    pub n: usize,
    pub size: usize,
    /// Variables outside every associated prime, 1-based.
    pub inessential: Vec<usize>,
}

/// All covers of minimum cardinality, as sorted 0-based component index sets
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverFamily {
    /// The size of the ideal.
    pub w: usize,
    /// Cardinality of every cover; equals `w + 1` when no variable is inessential.
    pub cardinality: usize,
    pub covers: Vec<Vec<usize>>,
}

impl CoverFamily {
    /// Component order listing the first cover before all other components.
    pub fn renumbering(&self, r: usize) -> Vec<usize> {
        let first: Vec<usize> = self.covers.first().cloned().unwrap_or_default();
        let rest = (0..r).filter(|i| !first.contains(i));
        first.iter().copied().chain(rest).collect()
    }

    /// True iff components `a` and `b` lie together in some cover.
    pub fn share_cover(&self, a: usize, b: usize) -> bool {
        self.covers.iter().any(|c| c.contains(&a) && c.contains(&b))
    }

    /// True iff component `a` lies in some cover.
    pub fn in_some_cover(&self, a: usize) -> bool {
        self.covers.iter().any(|c| c.contains(&a))
    }
}

pub(crate) fn supports(d: &Decomposition) -> Vec<FixedBitSet> {
    d.components()
        .iter()
        .map(|c| {
            let mut s = FixedBitSet::with_capacity(d.n());
            for k in c.support() {
                s.insert(k);
            }
            s
        })
        .collect()
}

fn union_of(sets: &[FixedBitSet], n: usize) -> FixedBitSet {
    let mut u = FixedBitSet::with_capacity(n);
    for s in sets {
        u.union_with(s);
    }
    u
}

/// Size of an irredundant decomposition.
pub fn size_of_decomposition(d: &Decomposition) -> Result<SizeReport> {
    size_of_decomposition_with(d, &Limits::default())
}

pub fn size_of_decomposition_with(d: &Decomposition, limits: &Limits) -> Result<SizeReport> {
    if d.is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    let sets = supports(d);
    let total = union_of(&sets, d.n());
    let v = min_cover(&sets, &total, limits.max_cover_nodes)?.len();
    let h = total.count_ones(..);
    let inessential = (0..d.n()).filter(|&k| !total.contains(k)).map(|k| k + 1).collect();
    Ok(SizeReport { v, h, n: d.n(), size: v + (d.n() - h) - 1, inessential })
}

/// Size of a proper nonzero monomial ideal.
pub fn size(ideal: &MonomialIdeal) -> Result<SizeReport> {
    size_with(ideal, &Limits::default())
}

pub fn size_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<SizeReport> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    size_of_decomposition_with(&d, limits)
}

/// Decomposition of the radical: exponents clamped to 1, then irredundantized.
pub fn radical(d: &Decomposition) -> Decomposition {
    let comps = d.components().iter().map(|c| c.radical()).collect();
    irredundantize(comps, d.n()).expect("radical of a nonempty decomposition")
}

/// Every index set of minimum cardinality whose supports cover the union.
pub fn minimal_covers(d: &Decomposition) -> Result<CoverFamily> {
    minimal_covers_with(d, &Limits::default())
}

pub fn minimal_covers_with(d: &Decomposition, limits: &Limits) -> Result<CoverFamily> {
    let report = size_of_decomposition_with(d, limits)?;
    let r = d.len();
    if r > limits.max_cover_components {
        return Err(Error::CoverLimit { count: r, limit: limits.max_cover_components });
    }
    let sets = supports(d);
    let total = union_of(&sets, d.n());
    let mut covers = Vec::new();
    for subset in combinations(r, report.v) {
        let mut u = FixedBitSet::with_capacity(d.n());
        for &i in &subset {
            u.union_with(&sets[i]);
        }
        if u == total {
            covers.push(subset);
        }
    }
    Ok(CoverFamily { w: report.size, cardinality: report.v, covers })
}

/// All `k`-subsets of `0..r` in lexicographic order.
pub(crate) fn combinations(r: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > r {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < r - k + p) else {
            return out;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Exact minimum set cover of `universe` by `sets`; returns the chosen indices.
///
/// Branch and bound: branch on the uncovered element with the fewest
/// candidate sets, prune with the best cover found so far (seeded greedily).
pub fn min_cover(sets: &[FixedBitSet], universe: &FixedBitSet, node_limit: u64) -> Result<Vec<usize>> {
    if universe.count_ones(..) == 0 {
        return Ok(Vec::new());
    }
    // drop duplicates and sets strictly inside another set
    let mut candidates: Vec<usize> = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let dominated = sets.iter().enumerate().any(|(j, t)| j != i && s.is_subset(t) && (s != t || j < i));
        if !dominated {
            candidates.push(i);
        }
    }
    let covered_by_all = union_of(sets, universe.len());
    if !universe.is_subset(&covered_by_all) {
        return Err(Error::Internal("universe is not coverable".into()));
    }

    let mut search = CoverSearch {
        sets,
        candidates: &candidates,
        max_set: candidates.iter().map(|&i| sets[i].count_ones(..)).max().unwrap_or(1),
        best: greedy_cover(sets, &candidates, universe),
        chosen: Vec::new(),
        nodes: 0,
        node_limit,
    };
    search.descend(universe.clone())?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

fn greedy_cover(sets: &[FixedBitSet], candidates: &[usize], universe: &FixedBitSet) -> Vec<usize> {
    let mut uncovered = universe.clone();
    let mut chosen = Vec::new();
    while uncovered.count_ones(..) > 0 {
        let &pick = candidates
            .iter()
            .max_by_key(|&&i| (sets[i].intersection(&uncovered).count(), std::cmp::Reverse(i)))
            .expect("coverable universe");
        uncovered.difference_with(&sets[pick]);
        chosen.push(pick);
    }
    chosen
}

struct CoverSearch<'a> {
    sets: &'a [FixedBitSet],
    candidates: &'a [usize],
    max_set: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    node_limit: u64,
}

impl CoverSearch<'_> {
    fn descend(&mut self, uncovered: FixedBitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::CoverSearchLimit { limit: self.node_limit });
        }
        let remaining = uncovered.count_ones(..);
        if remaining == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        let lower = self.chosen.len() + remaining.div_ceil(self.max_set);
        if lower >= self.best.len() {
            return Ok(());
        }
        let (element, _) = uncovered
            .ones()
            .map(|e| {
                let count = self.candidates.iter().filter(|&&i| self.sets[i].contains(e)).count();
                (e, count)
            })
            .min_by_key(|&(_, count)| count)
            .expect("nonempty");
        let options: Vec<usize> =
            self.candidates.iter().copied().filter(|&i| self.sets[i].contains(element)).collect();
        for i in options {
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[i]);
            self.chosen.push(i);
            self.descend(next)?;
            self.chosen.pop();
        }
        Ok(())
    }
}
