//! Configurable caps on the exponential parts of the computation.

/// Caps applied by decomposition, cover search, and top base enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of irreducible components a decomposition may produce.
    pub max_components: usize,
    /// Largest exponent accepted in any input monomial.
    pub max_exponent: u32,
    /// Maximum component count for which the full cover family is enumerated.
    pub max_cover_components: usize,
    /// Node budget of the exact minimum cover search.
    pub max_cover_nodes: u64,
    /// Maximum number of branches explored by top base enumeration.
    pub max_top_base_branches: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_components: 10_000,
            max_exponent: 1_000_000,
            max_cover_components: 24,
            max_cover_nodes: 50_000_000,
            max_top_base_branches: 10_000,
        }
    }
}
