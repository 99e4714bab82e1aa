use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertex coloring with positive integer colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::pre(format!(
                "vertex {v} has color 0; colors are positive"
            )));
        }
        Ok(Coloring { colors })
    }

    pub(crate) fn from_raw(colors: Vec<u32>) -> Self {
        debug_assert!(colors.iter().all(|&c| c > 0));
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    pub(crate) fn set(&mut self, v: usize, c: u32) {
        debug_assert!(c > 0);
        self.colors[v] = c;
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Relabels colors to `1..=colors_used`, preserving their order.
    pub fn compacted(&self) -> Coloring {
        let palette: Vec<u32> = self
            .colors
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let colors = self
            .colors
            .iter()
            .map(|c| palette.binary_search(c).unwrap() as u32 + 1)
            .collect();
        Coloring { colors }
    }

    /// Color classes ordered by color.
    pub fn classes(&self) -> Vec<VertexSet> {
        let palette: BTreeSet<u32> = self.colors.iter().copied().collect();
        palette
            .into_iter()
            .map(|c| {
                VertexSet::new(
                    self.colors.len(),
                    (0..self.colors.len()).filter(|&v| self.colors[v] == c),
                )
                .unwrap()
            })
            .collect()
    }

    fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::pre(format!(
                "coloring covers {} vertices but the graph has {}",
                self.colors.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Every edge sees two colors.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_total(g)?;
    Ok(g.edges().all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// Number of distinct colors in `N(v)`, capped at two.
pub(crate) fn neighborhood_colors(g: &Graph, c: &Coloring, v: usize) -> usize {
    let nb = g.neighbors(v);
    match nb.first() {
        None => 0,
        Some(&first) => {
            if nb.iter().any(|&w| c.colors[w] != c.colors[first]) {
                2
            } else {
                1
            }
        }
    }
}

/// Proper, and every vertex of degree at least two sees two colors.
pub fn is_dynamic(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(
        is_proper(g, c)?
            && (0..g.n()).all(|v| g.degree(v) < 2 || neighborhood_colors(g, c, v) >= 2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle};

    fn col(v: &[u32]) -> Coloring {
        Coloring::new(v.to_vec()).unwrap()
    }

    #[test]
    fn proper_examples() {
        let c5 = cycle(5).unwrap();
        assert!(is_proper(&c5, &col(&[1, 2, 1, 2, 3])).unwrap());
        assert!(!is_proper(&c5, &col(&[1; 5])).unwrap());
        assert!(is_proper(&Graph::empty(3), &col(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn partial_coloring_is_an_error() {
        let c5 = cycle(5).unwrap();
        assert!(is_proper(&c5, &col(&[1, 2])).is_err());
        assert!(is_dynamic(&c5, &col(&[1, 2])).is_err());
        assert!(Coloring::new(vec![1, 0]).is_err());
    }

    #[test]
    fn dynamic_examples() {
        assert!(is_dynamic(&cycle(5).unwrap(), &col(&[1, 2, 3, 4, 5])).unwrap());
        assert!(!is_dynamic(&complete_bipartite(2, 2), &col(&[1, 1, 2, 2])).unwrap());
        assert!(is_dynamic(&complete(2), &col(&[1, 2])).unwrap());
        // C5 colored 1,2,1,2,3 is proper but vertex 1 sees only color 1
        assert!(!is_dynamic(&cycle(5).unwrap(), &col(&[1, 2, 1, 2, 3])).unwrap());
    }

    #[test]
    fn compaction() {
        let c = col(&[4, 9, 4, 2]);
        assert_eq!(c.colors_used(), 3);
        assert_eq!(c.compacted().as_slice(), &[2, 3, 2, 1]);
        assert_eq!(c.classes().len(), 3);
    }
}
