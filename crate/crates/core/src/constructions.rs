//! Graph generators: the standard corpus, random regular graphs, and the two
//! counterexample families (regular graphs with `χ₂ > χ = n`, and the
//! pair-gadget graphs breaking the `⌈Δ/δ⌉ + 1` bound).

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{find_coloring, Coloring};
use crate::graph::Graph;
use crate::rng::seeded;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::pre(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

const REGULAR_ATTEMPTS: usize = 10_000;
const PAIR_TRIES: usize = 200;

/// Random `k`-regular simple graph from the pairing model.
///
/// Points are paired one pair at a time; a pair that would create a loop or
/// a repeated edge is rejected and redrawn, and a run that gets stuck starts
/// over. Deterministic per seed.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if !(n * k).is_multiple_of(2) {
        return Err(Error::pre(format!("n*k must be even (n={n}, k={k})")));
    }
    if k >= n && !(k == 0 && n == 0) {
        return Err(Error::pre(format!("need k < n (n={n}, k={k})")));
    }
    let mut rng = seeded(seed, "regular");
    'attempt: for _ in 0..REGULAR_ATTEMPTS {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        let mut adj = vec![Vec::with_capacity(k); n];
        while !points.is_empty() {
            let mut paired = false;
            for _ in 0..PAIR_TRIES {
                let i = rng.gen_range(0..points.len());
                let j = rng.gen_range(0..points.len());
                let (u, v) = (points[i], points[j]);
                if i == j || u == v || adj[u].contains(&v) {
                    continue;
                }
                adj[u].push(v);
                adj[v].push(u);
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                points.swap_remove(hi);
                points.swap_remove(lo);
                paired = true;
                break;
            }
            if !paired {
                continue 'attempt;
            }
        }
        return Ok(Graph::from_adjacency(adj));
    }
    Err(Error::Exhausted {
        what: "random regular graph",
        attempts: REGULAR_ATTEMPTS,
        detail: format!("n={n}, k={k}"),
    })
}

/// An apex vertex `s_ij` of the construction, attached to block `j` of class `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Apex {
    /// Color class, `1..=n`.
    pub class: usize,
    /// Block within the class, `1..=m`.
    pub block: usize,
    pub vertex: usize,
    pub attached: Vec<usize>,
}

/// A regular graph with chromatic number `n` and dynamic chromatic number above `n`.
#[derive(Debug, Clone)]
pub struct Prop5Instance {
    pub n: usize,
    /// Degree of the seed graph `g1`.
    pub d: usize,
    /// Vertex count of the seed graph.
    pub m: usize,
    /// Length of the cycle factor, `(n-1)(d+2)+1`; also the block size.
    pub cycle_len: usize,
    pub g1: Graph,
    /// `g1 □ C_{cycle_len}`.
    pub g2: Graph,
    /// `g2 × K_n`; its vertices keep their indices in `graph`.
    pub g_prime: Graph,
    pub graph: Graph,
    pub apexes: Vec<Apex>,
}

impl Prop5Instance {
    /// Regularity of the final graph, `(n-1)(d+2)+1`.
    pub fn degree(&self) -> usize {
        self.cycle_len
    }

    /// Class `V_i = {(g, i)}` of the canonical coloring of `g_prime`, for `i` in `1..=n`.
    pub fn class(&self, i: usize) -> Vec<usize> {
        (0..self.g2.n()).map(|g| g * self.n + (i - 1)).collect()
    }

    /// Canonical `n`-coloring of `g_prime`: vertex `(g, i)` gets color `i`.
    pub fn canonical_coloring(&self) -> Coloring {
        Coloring::new(
            (0..self.g_prime.n())
                .map(|v| (v % self.n) as u32 + 1)
                .collect(),
        )
        .unwrap()
    }

    /// Canonical coloring extended to the whole graph by giving each apex
    /// the first color not used by its block.
    pub fn canonical_extension(&self) -> Coloring {
        let mut colors: Vec<u32> = (0..self.g_prime.n())
            .map(|v| (v % self.n) as u32 + 1)
            .collect();
        for a in &self.apexes {
            colors.push(if a.class == 1 { 2 } else { 1 });
        }
        Coloring::new(colors).unwrap()
    }
}

/// Builds the regular counterexample for chromatic number `n`.
///
/// `g1` must be `d`-regular with `χ(g1) > n`; it defaults to `K_{n+1}`. The
/// bound `χ(g1) > n` is checked with the exact search under `budget`.
pub fn proposition5(n: usize, g1: Option<Graph>, budget: usize) -> Result<Prop5Instance> {
    if n < 2 {
        return Err(Error::pre(format!("need n >= 2, got {n}")));
    }
    let g1 = g1.unwrap_or_else(|| complete(n + 1));
    let d = g1
        .is_regular()
        .ok_or_else(|| Error::pre("seed graph must be regular"))?;
    if find_coloring(&g1, n, budget)?.is_some() {
        return Err(Error::pre(format!(
            "seed graph is {n}-colorable; need chi > {n}"
        )));
    }
    let m = g1.n();
    let cycle_len = (n - 1) * (d + 2) + 1;
    let g2 = g1.cartesian_product(&cycle(cycle_len)?);
    let g_prime = g2.categorical_product(&complete(n));

    let base = g_prime.n();
    let mut adj: Vec<Vec<usize>> = (0..base).map(|v| g_prime.neighbors(v).to_vec()).collect();
    let mut apexes = Vec::with_capacity(n * m);
    for i in 1..=n {
        let class: Vec<usize> = (0..g2.n()).map(|g| g * n + (i - 1)).collect();
        for (j, block) in class.chunks(cycle_len).enumerate() {
            let vertex = adj.len();
            for &v in block {
                adj[v].push(vertex);
            }
            adj.push(block.to_vec());
            apexes.push(Apex {
                class: i,
                block: j + 1,
                vertex,
                attached: block.to_vec(),
            });
        }
    }
    Ok(Prop5Instance {
        n,
        d,
        m,
        cycle_len,
        g1,
        g2,
        g_prime,
        graph: Graph::from_adjacency(adj),
        apexes,
    })
}

/// Adds a degree-two vertex `x_uv` adjacent to `u` and `v` for every pair
/// `u < v` of `g1`, in lexicographic pair order after the original vertices.
pub fn delta_delta_counterexample(g1: &Graph) -> Result<Graph> {
    let n = g1.n();
    if g1.is_bipartite() {
        return Err(Error::pre(
            "seed graph must have chromatic number at least 3",
        ));
    }
    if n <= 3 * g1.max_degree() + 5 {
        return Err(Error::pre(format!(
            "need |V| > 3*Delta + 5 (|V|={n}, Delta={})",
            g1.max_degree()
        )));
    }
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g1.neighbors(v).to_vec()).collect();
    for u in 0..n {
        for v in u + 1..n {
            let x = adj.len();
            adj[u].push(x);
            adj[v].push(x);
            adj.push(vec![u, v]);
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Lower bound on the dynamic chromatic number: a degree-two vertex with
/// neighbors `u, v` forces `c(u) != c(v)`, so any clique of `g` plus these
/// forced pairs needs distinct colors.
pub fn forced_pair_lower_bound(g: &Graph) -> usize {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for x in 0..g.n() {
        if let [u, v] = *g.neighbors(x) {
            edges.push((u, v));
        }
    }
    let forced = Graph::from_edges(g.n(), edges).expect("edges come from g");
    crate::exact::search::greedy_clique(&forced).len()
}
