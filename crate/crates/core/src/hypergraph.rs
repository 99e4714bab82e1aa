//! Hypergraphs, sufficient conditions for 2-colorability (property B), and
//! two 2-coloring engines: an exact backtracking search for small instances
//! and seeded Moser–Tardos event resampling for the rest.

use std::f64::consts::E;

use rand::Rng;
use serde::Serialize;

use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::seeded;

/// Hypergraph over vertex indices `0..n`. Each hyperedge may carry the id of
/// the graph vertex whose neighborhood produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    tags: Vec<Option<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        Self::from_tagged(n, edges.into_iter().map(|e| (None, e)))
    }

    pub fn from_tagged(
        n: usize,
        edges: impl IntoIterator<Item = (Option<usize>, Vec<usize>)>,
    ) -> Result<Self> {
        let mut h = Hypergraph {
            n,
            edges: Vec::new(),
            tags: Vec::new(),
        };
        for (tag, mut e) in edges {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::pre("hyperedges must be nonempty"));
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(Error::pre(format!(
                        "hyperedge vertex {v} out of range for {n} vertices"
                    )));
                }
            }
            h.edges.push(e);
            h.tags.push(tag);
        }
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn tag(&self, i: usize) -> Option<usize> {
        self.tags[i]
    }

    pub fn edges(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.edges.iter().map(Vec::as_slice)
    }

    /// Vertices covered by at least one hyperedge, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                seen[v] = true;
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn max_vertex_degree(&self) -> usize {
        self.vertex_degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).min()
    }

    /// Common hyperedge size, if all hyperedges have the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// For every hyperedge, how many other hyperedges (counted with
    /// multiplicity) share a vertex with it.
    pub fn intersection_counts(&self) -> Vec<usize> {
        let mut incident = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        let mut stamp = vec![usize::MAX; self.edges.len()];
        self.edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                stamp[i] = i;
                let mut count = 0;
                for &v in e {
                    for &j in &incident[v] {
                        if stamp[j] != i {
                            stamp[j] = i;
                            count += 1;
                        }
                    }
                }
                count
            })
            .collect()
    }

    fn first_monochromatic(&self, side: &[Side]) -> Option<usize> {
        self.edges.iter().position(|e| {
            let s = side[e[0]];
            e.iter().all(|&v| side[v] == s)
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Assignment of every vertex to side A or B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring {
    side: Vec<Side>,
}

impl TwoColoring {
    pub fn new(side: Vec<Side>) -> Self {
        TwoColoring { side }
    }

    pub fn all_a(n: usize) -> Self {
        TwoColoring {
            side: vec![Side::A; n],
        }
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn members(&self, s: Side) -> impl Iterator<Item = usize> + '_ {
        self.side
            .iter()
            .enumerate()
            .filter(move |(_, &x)| x == s)
            .map(|(v, _)| v)
    }

    /// True when every hyperedge of `h` meets both sides.
    pub fn is_proper_for(&self, h: &Hypergraph) -> bool {
        self.side.len() == h.n() && h.first_monochromatic(&self.side).is_none()
    }
}

/// Outcome of the McDiarmid-type local condition `e(d + 2) <= 2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocalCondition {
    pub holds: bool,
    /// Smallest hyperedge size.
    pub k: usize,
    /// Largest number of other hyperedges any hyperedge meets.
    pub d: usize,
}

pub fn mcdiarmid_condition(h: &Hypergraph) -> Result<LocalCondition> {
    let k = h
        .min_edge_size()
        .ok_or_else(|| Error::pre("condition undefined for a hypergraph without hyperedges"))?;
    let d = h.intersection_counts().into_iter().max().unwrap_or(0);
    let holds = E * (d as f64 + 2.0) <= 2f64.powi(k as i32);
    Ok(LocalCondition { holds, k, d })
}

/// Outcome of the uniform bounded-degree condition: `k`-uniform, `k >= 4`,
/// every vertex in at most `k` hyperedges.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UniformCondition {
    pub holds: bool,
    pub uniformity: Option<usize>,
    pub max_degree: usize,
}

pub fn thomassen_condition(h: &Hypergraph) -> Result<UniformCondition> {
    if h.edge_count() == 0 {
        return Err(Error::pre(
            "condition undefined for a hypergraph without hyperedges",
        ));
    }
    let uniformity = h.uniformity();
    let max_degree = h.max_vertex_degree();
    let holds = matches!(uniformity, Some(k) if k >= 4 && max_degree <= k);
    Ok(UniformCondition {
        holds,
        uniformity,
        max_degree,
    })
}

/// Graph-level form of the local condition: `e(Δ² - Δ + slack) <= 2^δ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeCondition {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

fn degree_condition(g: &Graph, slack: usize) -> DegreeCondition {
    let max = g.max_degree() as f64;
    let lhs = E * (max * max - max + slack as f64);
    let rhs = 2f64.powi(g.min_degree().min(i32::MAX as usize) as i32);
    DegreeCondition {
        lhs,
        rhs,
        holds: lhs <= rhs,
    }
}

/// `e(Δ² - Δ + 2) <= 2^δ`.
pub fn mcdiarmid_graph_condition_plus2(g: &Graph) -> DegreeCondition {
    degree_condition(g, 2)
}

/// `e(Δ² - Δ + 1) <= 2^δ`.
pub fn mcdiarmid_graph_condition_plus1(g: &Graph) -> DegreeCondition {
    degree_condition(g, 1)
}

/// Exhaustive 2-coloring by backtracking with unit propagation. `Ok(None)`
/// proves that no proper 2-coloring exists.
pub fn two_color_exact(h: &Hypergraph, budget_vertices: usize) -> Result<Option<TwoColoring>> {
    let support = h.support();
    if support.len() > budget_vertices {
        return Err(Error::Budget {
            what: "exact hypergraph 2-coloring",
            size: support.len(),
            limit: budget_vertices,
        });
    }
    let mut solver = PropagatingSolver::new(h);
    let mut order = support;
    let deg = h.vertex_degrees();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    if !solver.search(&order, 0, true) {
        return Ok(None);
    }
    let side = solver.assign.iter().map(|s| s.unwrap_or(Side::A)).collect();
    Ok(Some(TwoColoring { side }))
}

struct PropagatingSolver<'a> {
    h: &'a Hypergraph,
    incident: Vec<Vec<usize>>,
    assign: Vec<Option<Side>>,
    /// Per hyperedge: vertices on side A, on side B, unassigned.
    count: Vec<[usize; 3]>,
    trail: Vec<usize>,
}

impl<'a> PropagatingSolver<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let mut incident = vec![Vec::new(); h.n()];
        for (i, e) in h.edges.iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        PropagatingSolver {
            h,
            incident,
            assign: vec![None; h.n()],
            count: h.edges.iter().map(|e| [0, 0, e.len()]).collect(),
            trail: Vec::new(),
        }
    }

    fn slot(s: Side) -> usize {
        match s {
            Side::A => 0,
            Side::B => 1,
        }
    }

    /// Assigns `v := s` and everything it forces. Returns false on conflict;
    /// the trail records what to undo either way.
    fn assign_and_propagate(&mut self, v: usize, s: Side) -> bool {
        let mut queue = vec![(v, s)];
        while let Some((v, s)) = queue.pop() {
            match self.assign[v] {
                Some(cur) if cur == s => continue,
                Some(_) => return false,
                None => {}
            }
            self.assign[v] = Some(s);
            self.trail.push(v);
            let same = Self::slot(s);
            let other = 1 - same;
            let mut conflict = false;
            // counts for every incident edge must be updated before bailing
            // out, so that undo_to stays symmetric
            for &e in &self.incident[v] {
                let c = &mut self.count[e];
                c[same] += 1;
                c[2] -= 1;
                if c[other] == 0 && !conflict {
                    if c[2] == 0 {
                        conflict = true;
                    } else if c[2] == 1 {
                        let w = self.h.edges[e]
                            .iter()
                            .copied()
                            .find(|&w| self.assign[w].is_none())
                            .expect("one unassigned vertex remains");
                        queue.push((w, s.flip()));
                    }
                }
            }
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            let s = self.assign[v].take().unwrap();
            let slot = Self::slot(s);
            for &e in &self.incident[v] {
                self.count[e][slot] -= 1;
                self.count[e][2] += 1;
            }
        }
    }

    fn search(&mut self, order: &[usize], from: usize, first: bool) -> bool {
        let Some(pos) = (from..order.len()).find(|&i| self.assign[order[i]].is_none()) else {
            return true;
        };
        let v = order[pos];
        // swapping the two sides maps colorings to colorings, so the very
        // first decision only needs one branch
        let choices: &[Side] = if first {
            &[Side::A]
        } else {
            &[Side::A, Side::B]
        };
        for &s in choices {
            let mark = self.trail.len();
            if self.assign_and_propagate(v, s) && self.search(order, pos + 1, false) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Result of a seeded resampling run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResamplingRun {
    pub coloring: Option<TwoColoring>,
    pub resamplings: usize,
}

/// Default resampling cap: a thousand rounds per hyperedge.
pub fn default_max_rounds(h: &Hypergraph) -> usize {
    1000 * h.edge_count().max(1)
}

/// Moser–Tardos style resampling: start from a uniform assignment and, while
/// some hyperedge is monochromatic, resample the lowest-indexed such edge.
pub fn two_color_randomized(h: &Hypergraph, seed: u64, max_rounds: usize) -> ResamplingRun {
    let mut rng = seeded(seed, "hypergraph");
    let mut side: Vec<Side> = (0..h.n())
        .map(|_| if rng.gen::<bool>() { Side::A } else { Side::B })
        .collect();
    let mut resamplings = 0;
    while let Some(e) = h.first_monochromatic(&side) {
        if resamplings == max_rounds {
            return ResamplingRun {
                coloring: None,
                resamplings,
            };
        }
        resamplings += 1;
        for &v in &h.edges[e] {
            side[v] = if rng.gen::<bool>() { Side::A } else { Side::B };
        }
    }
    ResamplingRun {
        coloring: Some(TwoColoring { side }),
        resamplings,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColorOutcome {
    Colored(TwoColoring),
    /// The exact search proved that no 2-coloring exists.
    Unsat,
    /// The instance was too large for the exact search and resampling ran out of rounds.
    Unknown,
}

impl TwoColorOutcome {
    pub fn coloring(self) -> Option<TwoColoring> {
        match self {
            TwoColorOutcome::Colored(c) => Some(c),
            _ => None,
        }
    }
}

/// Dispatches to the exact solver within budget and to resampling above it.
pub fn two_color(h: &Hypergraph, seed: u64, budgets: &Budgets) -> TwoColorOutcome {
    if h.edge_count() == 0 {
        return TwoColorOutcome::Colored(TwoColoring::all_a(h.n()));
    }
    match two_color_exact(h, budgets.hypergraph_vertices) {
        Ok(Some(c)) => return TwoColorOutcome::Colored(c),
        Ok(None) => return TwoColorOutcome::Unsat,
        Err(_) => {}
    }
    let rounds = budgets.max_rounds.unwrap_or_else(|| default_max_rounds(h));
    match two_color_randomized(h, seed, rounds).coloring {
        Some(c) => TwoColorOutcome::Colored(c),
        None => TwoColorOutcome::Unknown,
    }
}
