/// Resource limits for the search and completion procedures.
///
/// Every limit is a hard cap with an explicit error on overflow; nothing is
/// silently truncated.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Largest accepted generator. Bounds the membership table.
    pub max_generator: u64,
    /// Cap on the membership table length (entries).
    pub max_table_len: usize,
    /// Node budget for the depth-first factorization search.
    pub node_budget: usize,
    /// Cap on the number of row-factorization matrices enumerated per
    /// pseudo-Frobenius number.
    pub max_rf_matrices: usize,
    /// S-pair budget for Groebner completion.
    pub pair_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_generator: 1 << 20,
            max_table_len: 1 << 26,
            node_budget: 10_000_000,
            max_rf_matrices: 1_000_000,
            pair_budget: 100_000,
        }
    }
}
