//! Dynamic colorings of `k`-regular graphs with at most `χ + 2⌈3 ln k + 1⌉`
//! colors, from random vertex orders.
//!
//! For an order `σ`, the sinks `I_σ` (vertices preceding all of their
//! neighbors) form an independent set. Drawing `l = ⌈3 ln k + 1⌉` orders
//! until every triangle-free vertex has a neighbor in `T = ⋃ I_σ` gives a
//! set `T` that is properly `l`-colored by sink index. Splitting `T` once
//! more with a 2-coloring of `{N(v) : N(v) ⊆ T}` and giving every pair of
//! labels a fresh color yields a dynamic coloring.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::exact::{dynamic_chromatic_number, is_dynamic, is_proper, Coloring};
use crate::graph::{Graph, VertexSet};
use crate::hypergraph::{two_color, Side, TwoColorOutcome};
use crate::rng::seeded;

/// Total order on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Permutation {
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::pre("order is not a permutation of 0..n"));
            }
            position[v] = i;
        }
        Ok(Permutation { order, position })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        Self::from_order(order).unwrap()
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        Self::from_order(order).unwrap()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Whether `a` comes before `b`.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }
}

/// Sinks of `p`: vertices that precede every one of their neighbors.
pub fn sinks(g: &Graph, p: &Permutation) -> Result<VertexSet> {
    if p.order.len() != g.n() {
        return Err(Error::pre("permutation size differs from the graph"));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::pre(format!(
            "isolated vertex {v}: sink sets need minimum degree 1"
        )));
    }
    let s = VertexSet::new(
        g.n(),
        (0..g.n()).filter(|&v| g.neighbors(v).iter().all(|&u| p.precedes(v, u))),
    )?;
    if !g.is_independent(&s) {
        return Err(Error::internal("sink set is not independent"));
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinkFamily {
    pub perms: Vec<Permutation>,
    pub sinks: Vec<VertexSet>,
    /// Union of all sink sets.
    pub t_set: VertexSet,
}

impl SinkFamily {
    pub fn new(g: &Graph, perms: Vec<Permutation>) -> Result<Self> {
        let sinks = perms
            .iter()
            .map(|p| sinks(g, p))
            .collect::<Result<Vec<_>>>()?;
        let t_set = VertexSet::new(g.n(), sinks.iter().flat_map(|s| s.iter()))?;
        Ok(SinkFamily {
            perms,
            sinks,
            t_set,
        })
    }

    /// 1-based index of the first sink set containing `v`.
    pub fn first_sink_index(&self, v: usize) -> Option<usize> {
        self.sinks.iter().position(|s| s.contains(v)).map(|i| i + 1)
    }
}

/// Triangle-free vertices with no neighbor in the family's union.
pub fn bad_events(g: &Graph, fam: &SinkFamily) -> VertexSet {
    let in_t = fam.t_set.mask();
    let members: Vec<usize> = g
        .triangle_free_vertices()
        .iter()
        .filter(|&u| g.neighbors(u).iter().all(|&v| !in_t[v]))
        .collect();
    VertexSet::new(g.n(), members).unwrap()
}

/// Number of orders drawn for degree `k`: `⌈3 ln k + 1⌉`.
pub fn sink_count(k: usize) -> usize {
    (3.0 * (k as f64).ln() + 1.0).ceil() as usize
}

#[derive(Debug, Clone)]
pub struct CoveringFamily {
    pub family: SinkFamily,
    pub l: usize,
    /// Whole-family redraws before acceptance.
    pub restarts: usize,
}

fn regular_degree_at_least_4(g: &Graph) -> Result<usize> {
    match g.is_regular() {
        Some(k) if k >= 4 => Ok(k),
        Some(k) => Err(Error::pre(format!("need degree k >= 4, got {k}"))),
        None => Err(Error::pre("graph is not regular")),
    }
}

fn draw_covering(
    g: &Graph,
    l: usize,
    rng: &mut ChaCha8Rng,
    allowed: usize,
) -> Result<(SinkFamily, usize)> {
    let mut residual = 0;
    for restarts in 0..=allowed {
        let perms = (0..l).map(|_| Permutation::random(g.n(), rng)).collect();
        let fam = SinkFamily::new(g, perms)?;
        residual = bad_events(g, &fam).len();
        if residual == 0 {
            return Ok((fam, restarts));
        }
    }
    Err(Error::Exhausted {
        what: "covering sink family",
        attempts: allowed + 1,
        detail: format!("{residual} bad events left in the last draw"),
    })
}

/// Draws `l` uniform orders, redrawing the whole family until no
/// triangle-free vertex is left without a neighbor in `T`.
pub fn find_covering_family(g: &Graph, seed: u64, max_restarts: usize) -> Result<CoveringFamily> {
    let k = regular_degree_at_least_4(g)?;
    let l = sink_count(k);
    let mut rng = seeded(seed, "lll");
    let (family, restarts) = draw_covering(g, l, &mut rng, max_restarts)?;
    Ok(CoveringFamily {
        family,
        l,
        restarts,
    })
}

#[derive(Debug, Clone)]
pub struct SinkColoring {
    /// Final dynamic coloring, compacted to `1..=colors_used`.
    pub coloring: Coloring,
    pub colors_used: usize,
    pub base_colors: usize,
    pub degree: usize,
    /// Number of orders; 0 when the exact route for `k <= 3` was taken.
    pub l: usize,
    pub restarts: usize,
    pub t_size: usize,
    /// `base_colors + 2l`, or 6 on the exact route.
    pub bound: usize,
    /// Families that covered every event but still failed the final check.
    pub verification_retries: usize,
}

/// Dynamic coloring of a regular graph with at most `colors(base) + 2l` colors.
///
/// Off `T` the base coloring stays. On `T` vertex `v` gets
/// `palette + 2(c1 - 1) + c2`, with `c1` its first sink index and `c2` its
/// side in the 2-coloring of `{N(v) : N(v) ⊆ T}`. Graphs of degree at most
/// three go to the exact solver instead.
pub fn theorem4_coloring(
    g: &Graph,
    base: &Coloring,
    seed: u64,
    budgets: &Budgets,
) -> Result<SinkColoring> {
    let degree = g
        .is_regular()
        .ok_or_else(|| Error::pre("graph is not regular"))?;
    if !is_proper(g, base)? {
        return Err(Error::pre("base coloring is not proper"));
    }
    let base_colors = base.colors_used();
    if degree <= 3 {
        let (chi2, coloring) = dynamic_chromatic_number(g, budgets.exact_vertices)?;
        if chi2 > 6 {
            return Err(Error::internal(format!(
                "degree <= 3 graph with chi2 = {chi2} > 6"
            )));
        }
        return Ok(SinkColoring {
            coloring,
            colors_used: chi2,
            base_colors,
            degree,
            l: 0,
            restarts: 0,
            t_size: 0,
            bound: 6,
            verification_retries: 0,
        });
    }

    let l = sink_count(degree);
    let palette = base.max_color();
    let mut rng = seeded(seed, "lll");
    let mut split_rng = seeded(seed, "lll-split");
    let mut used = 0;
    let mut verification_retries = 0;
    loop {
        let (fam, restarts) = draw_covering(g, l, &mut rng, budgets.max_restarts - used)?;
        used += restarts;

        let h = g.restricted_neighborhood_hypergraph(&fam.t_set)?;
        let split = match two_color(&h, split_rng.gen(), budgets) {
            TwoColorOutcome::Colored(c) => c,
            outcome => {
                return Err(Error::internal(format!(
                    "neighborhood hypergraph inside T not 2-colored ({outcome:?})"
                )))
            }
        };
        let mut colors = base.as_slice().to_vec();
        for v in fam.t_set.iter() {
            let c1 = fam.first_sink_index(v).unwrap() as u32;
            let c2 = match split.side(v) {
                Side::A => 1,
                Side::B => 2,
            };
            colors[v] = palette + 2 * (c1 - 1) + c2;
        }
        let colors = Coloring::from_raw(colors);
        let bound = base_colors + 2 * l;
        if is_dynamic(g, &colors)? {
            let colors_used = colors.colors_used();
            if colors_used > bound {
                return Err(Error::internal(format!(
                    "{colors_used} colors exceed bound {bound}"
                )));
            }
            return Ok(SinkColoring {
                coloring: colors.compacted(),
                colors_used,
                base_colors,
                degree,
                l,
                restarts: used,
                t_size: fam.t_set.len(),
                bound,
                verification_retries,
            });
        }
        verification_retries += 1;
        if used >= budgets.max_restarts {
            return Err(Error::Exhausted {
                what: "sink-family coloring",
                attempts: used + 1,
                detail: "final coloring failed the dynamic check".into(),
            });
        }
        used += 1;
    }
}

/// Monte-Carlo estimate of the probability that no neighbor of `u` is a
/// sink of any of `l` independent uniform orders.
///
/// Only the relative order of the ball of radius two around `u` matters,
/// and a uniform order restricted to a subset is uniform, so each sample
/// shuffles just that ball.
pub fn event_frequency(g: &Graph, u: usize, l: usize, samples: usize, seed: u64) -> f64 {
    let mut ball: Vec<usize> = vec![u];
    for &v in g.neighbors(u) {
        ball.push(v);
        ball.extend_from_slice(g.neighbors(v));
    }
    ball.sort_unstable();
    ball.dedup();
    let index = |x: usize| ball.binary_search(&x).unwrap();
    let nbrs: Vec<(usize, Vec<usize>)> = g
        .neighbors(u)
        .iter()
        .map(|&v| (index(v), g.neighbors(v).iter().map(|&w| index(w)).collect()))
        .collect();
    let mut rng = seeded(seed, "event-frequency");
    let mut rank: Vec<usize> = (0..ball.len()).collect();
    let mut hits = 0usize;
    for _ in 0..samples {
        let covered = (0..l).any(|_| {
            rank.shuffle(&mut rng);
            nbrs.iter()
                .any(|(v, around)| around.iter().all(|&w| rank[*v] < rank[w]))
        });
        if !covered {
            hits += 1;
        }
    }
    hits as f64 / samples as f64
}
