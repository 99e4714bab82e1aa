//! Simple undirected graphs over dense vertex indices `0..n`.
//!
//! Everything else in the crate consumes [`Graph`]: the exact solvers, the
//! recoloring pipelines and the generators. Graphs are immutable once built.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    /// Factor sizes `(|V(g)|, |V(h)|)` when the graph was built as a product.
    factors: Option<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Sorted set of vertices of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    host_n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(host_n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= host_n {
                return Err(Error::pre(format!(
                    "vertex {v} out of range for a graph on {host_n} vertices"
                )));
            }
        }
        Ok(VertexSet { host_n, members })
    }

    pub fn empty(host_n: usize) -> Self {
        VertexSet {
            host_n,
            members: Vec::new(),
        }
    }

    pub fn full(host_n: usize) -> Self {
        VertexSet {
            host_n,
            members: (0..host_n).collect(),
        }
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    /// Membership mask of length `host_n`.
    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.host_n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }
}

/// Result of a distance query that may be unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            factors: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::pre(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::pre(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, factors: None })
    }

    /// Builds from adjacency lists that are already symmetric and loop-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        debug_assert!(adj.iter().enumerate().all(|(u, l)| l
            .iter()
            .all(|&v| v != u && adj[v].binary_search(&u).is_ok())));
        Graph { adj, factors: None }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Factor sizes when this graph came out of a product construction.
    pub fn factors(&self) -> Option<(usize, usize)> {
        self.factors
    }

    /// The common degree, if every vertex has the same degree.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| self.adj[v].iter().all(|&w| !s.contains(w)))
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.bfs(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Distance::Infinite,
                }
            }
        }
        Distance::Finite(best)
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut members = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(VertexSet { host_n: n, members });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `s`; vertex `s[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, v) in s.iter().enumerate() {
            index[v] = i;
        }
        let adj = s
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Graph { adj, factors: None }
    }

    /// Vertices whose neighborhood is independent, i.e. that lie in no triangle.
    pub fn triangle_free_vertices(&self) -> VertexSet {
        let members = (0..self.n())
            .filter(|&u| {
                let nb = &self.adj[u];
                nb.iter()
                    .enumerate()
                    .all(|(i, &a)| nb[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
            })
            .collect();
        VertexSet {
            host_n: self.n(),
            members,
        }
    }

    /// The square graph: distinct vertices at distance at most two become adjacent.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut mark = vec![usize::MAX; n];
        let adj = (0..n)
            .map(|u| {
                mark[u] = u;
                let mut out = Vec::new();
                for &w in &self.adj[u] {
                    if mark[w] != u {
                        mark[w] = u;
                        out.push(w);
                    }
                    for &x in &self.adj[w] {
                        if mark[x] != u {
                            mark[x] = u;
                            out.push(x);
                        }
                    }
                }
                out.sort_unstable();
                out
            })
            .collect();
        Graph { adj, factors: None }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj, factors: None }
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + off).collect()),
        );
        Graph { adj, factors: None }
    }

    /// Cartesian product `self □ h`. Vertex `(a, x)` has index `a * |V(h)| + x`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let m = h.n();
        let mut adj = vec![Vec::new(); self.n() * m];
        for a in 0..self.n() {
            for x in 0..m {
                let list = &mut adj[a * m + x];
                list.extend(h.adj[x].iter().map(|&y| a * m + y));
                list.extend(self.adj[a].iter().map(|&b| b * m + x));
                list.sort_unstable();
            }
        }
        Graph {
            adj,
            factors: Some((self.n(), m)),
        }
    }

    /// Categorical (tensor) product `self × h`, indexed like [`Graph::cartesian_product`].
    pub fn categorical_product(&self, h: &Graph) -> Graph {
        let m = h.n();
        let mut adj = vec![Vec::new(); self.n() * m];
        for a in 0..self.n() {
            for x in 0..m {
                let list = &mut adj[a * m + x];
                for &b in &self.adj[a] {
                    list.extend(h.adj[x].iter().map(|&y| b * m + y));
                }
                list.sort_unstable();
            }
        }
        Graph {
            adj,
            factors: Some((self.n(), m)),
        }
    }

    /// One hyperedge `N(v)` per `v ∈ t`, tagged with `v`. Repeated
    /// neighborhoods stay as separate hyperedges.
    pub fn neighborhood_hypergraph(&self, t: &VertexSet) -> Result<Hypergraph> {
        if t.is_empty() {
            return Err(Error::pre(
                "neighborhood hypergraph needs a nonempty vertex set",
            ));
        }
        Hypergraph::from_tagged(self.n(), t.iter().map(|v| (Some(v), self.adj[v].clone())))
    }

    /// Hyperedges `N(v)` over every vertex `v` whose whole neighborhood lies in `t`.
    pub fn restricted_neighborhood_hypergraph(&self, t: &VertexSet) -> Result<Hypergraph> {
        let mask = t.mask();
        Hypergraph::from_tagged(
            self.n(),
            (0..self.n())
                .filter(|&v| !self.adj[v].is_empty() && self.adj[v].iter().all(|&w| mask[w]))
                .map(|v| (Some(v), self.adj[v].clone())),
        )
    }

    /// Two-colorable, checked by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, path};

    #[test]
    fn square_of_c5_is_k5() {
        assert_eq!(cycle(5).unwrap().square(), complete(5));
    }

    #[test]
    fn square_of_k1_has_no_edges() {
        let g = Graph::empty(1).square();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn square_of_p4() {
        let sq = path(4).square();
        let edges: Vec<_> = sq.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn k2_box_k2_is_c4() {
        let k2 = complete(2);
        let g = k2.cartesian_product(&k2);
        assert_eq!(g.is_regular(), Some(2));
        assert_eq!(g.edge_count(), 4);
        assert!(g.is_connected());
        assert_eq!(g.factors(), Some((2, 2)));
    }

    #[test]
    fn k3_box_c5_is_4_regular_on_15() {
        let g = complete(3).cartesian_product(&cycle(5).unwrap());
        assert_eq!(g.n(), 15);
        assert_eq!(g.is_regular(), Some(4));
    }

    #[test]
    fn product_with_k1() {
        let g = cycle(5).unwrap();
        let k1 = Graph::empty(1);
        let boxed = g.cartesian_product(&k1);
        assert_eq!(
            boxed.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
        let tensor = g.categorical_product(&k1);
        assert_eq!(tensor.n(), 5);
        assert_eq!(tensor.edge_count(), 0);
    }

    #[test]
    fn k2_times_k2_is_matching() {
        let k2 = complete(2);
        let g = k2.categorical_product(&k2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn categorical_regularity() {
        // (d+2)-regular times K_n is (n-1)(d+2)-regular
        let g2 = complete(3).cartesian_product(&cycle(5).unwrap());
        for n in 2..5 {
            assert_eq!(
                g2.categorical_product(&complete(n)).is_regular(),
                Some((n - 1) * 4)
            );
        }
    }

    #[test]
    fn neighborhood_hypergraph_c4_single() {
        let g = cycle(4).unwrap();
        let h = g
            .neighborhood_hypergraph(&VertexSet::new(4, [0]).unwrap())
            .unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edge(0), &[1, 3]);
        assert_eq!(h.tag(0), Some(0));
        assert_eq!(h.support(), vec![1, 3]);
    }

    #[test]
    fn neighborhood_hypergraph_c5_all() {
        let g = cycle(5).unwrap();
        let h = g.neighborhood_hypergraph(&VertexSet::full(5)).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert!(h.edges().all(|e| e.len() == 2));
        assert_eq!(h.max_vertex_degree(), 2);
    }

    #[test]
    fn neighborhood_hypergraph_keeps_duplicates() {
        // in C4, vertices 0 and 2 share the neighborhood {1, 3}
        let g = cycle(4).unwrap();
        let h = g
            .neighborhood_hypergraph(&VertexSet::new(4, [0, 2]).unwrap())
            .unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.edge(0), h.edge(1));
        assert_eq!((h.tag(0), h.tag(1)), (Some(0), Some(2)));
    }

    #[test]
    fn neighborhood_hypergraph_rejects_empty() {
        let g = cycle(4).unwrap();
        assert!(g.neighborhood_hypergraph(&VertexSet::empty(4)).is_err());
    }

    #[test]
    fn restricted_hypergraph_cases() {
        let g = cycle(6).unwrap();
        let all = g
            .restricted_neighborhood_hypergraph(&VertexSet::full(6))
            .unwrap();
        let direct = g.neighborhood_hypergraph(&VertexSet::full(6)).unwrap();
        assert_eq!(all, direct);

        let star = complete_bipartite(1, 3);
        let h = star
            .restricted_neighborhood_hypergraph(&VertexSet::new(4, [1, 2, 3]).unwrap())
            .unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.tag(0), Some(0));

        let none = g
            .restricted_neighborhood_hypergraph(&VertexSet::empty(6))
            .unwrap();
        assert_eq!(none.edge_count(), 0);
    }

    #[test]
    fn diameters() {
        assert_eq!(complete(5).diameter(), Distance::Finite(1));
        assert_eq!(cycle(5).unwrap().diameter(), Distance::Finite(2));
        let two_k2 = complete(2).disjoint_union(&complete(2));
        assert_eq!(two_k2.diameter(), Distance::Infinite);
        let comps = two_k2.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn triangle_free_sets() {
        assert_eq!(cycle(5).unwrap().triangle_free_vertices().len(), 5);
        assert!(complete(4).triangle_free_vertices().is_empty());
    }

    #[test]
    fn induced_subgraph_reindexes() {
        let g = cycle(6).unwrap();
        let s = VertexSet::new(6, [0, 1, 2, 4]).unwrap();
        let sub = g.induced_subgraph(&s);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}
