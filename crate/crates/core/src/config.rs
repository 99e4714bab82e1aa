/// Size limits and iteration caps shared by the exact and randomized engines.
///
/// Exceeding a vertex budget is reported as [`crate::Error::Budget`]; the
/// engines never fall back to an approximation silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budgets {
    /// Largest graph handed to the exact coloring and independence searches.
    pub exact_vertices: usize,
    /// Largest graph for which unique colorability is decided.
    pub unique_vertices: usize,
    /// Largest hypergraph support handled by the exact 2-coloring search.
    pub hypergraph_vertices: usize,
    /// Resampling cap for the randomized 2-coloring; `None` means 1000 per hyperedge.
    pub max_rounds: Option<usize>,
    /// Whole-family redraws allowed when searching for a covering sink family.
    pub max_restarts: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            exact_vertices: 64,
            unique_vertices: 40,
            hypergraph_vertices: 30,
            max_rounds: None,
            max_restarts: 1000,
        }
    }
}
