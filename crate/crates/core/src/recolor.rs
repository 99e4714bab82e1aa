//! Turning a minimum proper coloring into a dynamic one.
//!
//! [`normalize`] produces a `χ`-coloring anchored on an edge `uv` (colors 1
//! and 3) in which every other vertex reaches the anchor along a path whose
//! colors step up by one modulo `χ`. Under `χ >= 4` the vertices with a
//! monochromatic neighborhood ("bad" vertices) then form an independent set,
//! and the three repair strategies below add fresh colors until no bad
//! vertex is left.

use rand::Rng;
use serde::Serialize;

use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::exact::{
    chromatic_number, find_coloring, is_dynamic, is_proper, neighborhood_colors, Coloring,
};
use crate::graph::{Graph, VertexSet};
use crate::hypergraph::{
    mcdiarmid_graph_condition_plus1, two_color, Hypergraph, Side, TwoColorOutcome,
};
use crate::rng::seeded;

/// A proper `chi`-coloring with anchor colors `1` and `3` where every vertex
/// has an incrementing path to the anchor edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedColoring {
    pub coloring: Coloring,
    pub anchor: (usize, usize),
    pub chi: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// One fresh color per chosen neighbor of each bad vertex.
    IndependentSet,
    /// One fresh color per component of the square graph on the bad set.
    ComponentHypergraph,
    /// Pin a maximal independent set as a class, split it by a hypergraph
    /// 2-coloring, then repair components.
    MaximalIndependentPlusOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairResult {
    /// Final dynamic coloring, compacted to colors `1..=colors_used`.
    pub coloring: Coloring,
    pub colors_used: usize,
    /// Bad vertices that were repaired.
    pub bad_set: VertexSet,
    /// Connected components of the square graph induced on `bad_set`.
    pub components: usize,
    pub strategy: Strategy,
    /// Colors of the proper coloring the repair started from (`χ`, or the
    /// pinned-class minimum `t`).
    pub base_colors: usize,
    /// Upper bound this strategy certifies for the number of colors.
    pub bound: usize,
    /// Whether the degree condition that guarantees the hypergraph
    /// 2-colorings held. Always true for the component strategy.
    pub condition_holds: bool,
}

/// Lexicographically smallest edge.
pub fn default_anchor(g: &Graph) -> Option<(usize, usize)> {
    g.edges().next()
}

/// Normalizes an exact `chi`-coloring found by search.
pub fn normalize(
    g: &Graph,
    chi: usize,
    anchor: (usize, usize),
    budget: usize,
) -> Result<NormalizedColoring> {
    check_normalize_pre(g, chi, anchor)?;
    let start = find_coloring(g, chi, budget)?
        .ok_or_else(|| Error::internal(format!("no proper {chi}-coloring exists")))?;
    normalize_from(g, &start, chi, anchor)
}

fn check_normalize_pre(g: &Graph, chi: usize, (u, v): (usize, usize)) -> Result<()> {
    if chi < 3 {
        return Err(Error::pre(format!(
            "normalization needs chi >= 3, got {chi}"
        )));
    }
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::pre(format!("anchor ({u}, {v}) is not an edge")));
    }
    if !g.is_connected() {
        return Err(Error::pre("normalization needs a connected graph"));
    }
    Ok(())
}

/// Normalizes a given proper coloring with colors in `1..=chi`.
///
/// Colors are first permuted so the anchor reads `(1, 3)`. Then, as long as
/// some set `W` of vertices cannot reach the anchor along incrementing
/// edges, every color in `W` is shifted up by one (mod `chi`). Such a shift
/// keeps the coloring proper (an edge `wr` with `c(r) = c(w) + 1` would put
/// `w` in the reached set), never unreaches a vertex, and within `chi`
/// shifts reaches a new vertex across some edge leaving `W`.
pub fn normalize_from(
    g: &Graph,
    start: &Coloring,
    chi: usize,
    anchor: (usize, usize),
) -> Result<NormalizedColoring> {
    check_normalize_pre(g, chi, anchor)?;
    if !is_proper(g, start)? || start.max_color() as usize > chi {
        return Err(Error::pre(format!("start is not a proper {chi}-coloring")));
    }
    let (u, v) = anchor;
    let k = chi as u32;
    let mut perm = vec![0u32; chi + 1];
    perm[start.color(u) as usize] = 1;
    perm[start.color(v) as usize] = 3;
    let mut free = (1..=k).filter(|&c| c != 1 && c != 3);
    for slot in perm.iter_mut().skip(1) {
        if *slot == 0 {
            *slot = free.next().unwrap();
        }
    }
    let mut colors: Vec<u32> = start.as_slice().iter().map(|&c| perm[c as usize]).collect();

    let cap = g.n() * chi * chi;
    for _ in 0..=cap {
        let reached = reverse_reachable(g, &colors, k, anchor);
        if reached.iter().all(|&r| r) {
            let coloring = Coloring::from_raw(colors);
            let nc = NormalizedColoring {
                coloring,
                anchor,
                chi,
            };
            debug_assert!(verify_normalized(g, &nc));
            return Ok(nc);
        }
        for (w, &r) in reached.iter().enumerate() {
            if !r {
                colors[w] = colors[w] % k + 1;
            }
        }
    }
    Err(Error::internal(format!(
        "normalization did not converge within {cap} shifts"
    )))
}

/// Vertices with an incrementing path to the anchor: BFS backwards from the
/// anchor along edges `w -> r` with `c(r) = c(w) + 1 (mod k)`.
fn reverse_reachable(g: &Graph, colors: &[u32], k: u32, (u, v): (usize, usize)) -> Vec<bool> {
    let mut reached = vec![false; g.n()];
    reached[u] = true;
    reached[v] = true;
    let mut stack = vec![u, v];
    while let Some(r) = stack.pop() {
        for &w in g.neighbors(r) {
            if !reached[w] && colors[w] % k + 1 == colors[r] {
                reached[w] = true;
                stack.push(w);
            }
        }
    }
    reached
}

/// Checks every property a [`NormalizedColoring`] promises.
pub fn verify_normalized(g: &Graph, nc: &NormalizedColoring) -> bool {
    let (u, v) = nc.anchor;
    let colors = nc.coloring.as_slice();
    nc.coloring.len() == g.n()
        && g.has_edge(u, v)
        && is_proper(g, &nc.coloring).unwrap_or(false)
        && nc.coloring.max_color() as usize <= nc.chi
        && colors[u] == 1
        && colors[v] == 3
        && reverse_reachable(g, colors, nc.chi as u32, nc.anchor)
            .iter()
            .all(|&r| r)
}

/// Vertices of degree at least two whose neighborhood is monochromatic.
pub fn bad_vertices(g: &Graph, c: &Coloring) -> Result<VertexSet> {
    if !is_proper(g, c)? {
        return Err(Error::pre("bad vertices are defined for proper colorings"));
    }
    VertexSet::new(
        g.n(),
        (0..g.n()).filter(|&v| g.degree(v) >= 2 && neighborhood_colors(g, c, v) == 1),
    )
}

/// Connected components of the square graph induced on `s`, as sets of
/// original vertices ordered by smallest member.
pub fn square_components(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let sq = g.square().induced_subgraph(s);
    let members = s.as_slice();
    sq.components()
        .into_iter()
        .map(|comp| VertexSet::new(g.n(), comp.iter().map(|i| members[i])).unwrap())
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn finish(
    g: &Graph,
    colors: Coloring,
    bad_set: VertexSet,
    components: usize,
    strategy: Strategy,
    base_colors: usize,
    bound: usize,
    condition_holds: bool,
) -> Result<RepairResult> {
    if !is_dynamic(g, &colors)? {
        return Err(Error::internal(format!(
            "{strategy:?} repair produced a non-dynamic coloring"
        )));
    }
    let coloring = colors.compacted();
    let colors_used = coloring.colors_used();
    if colors_used > bound {
        return Err(Error::internal(format!(
            "{strategy:?} repair used {colors_used} colors, above its bound {bound}"
        )));
    }
    Ok(RepairResult {
        coloring,
        colors_used,
        bad_set,
        components,
        strategy,
        base_colors,
        bound,
        condition_holds,
    })
}

fn independent_bad_set(g: &Graph, c: &Coloring) -> Result<VertexSet> {
    let s = bad_vertices(g, c)?;
    if !g.is_independent(&s) {
        return Err(Error::internal(
            "bad set of a normalized coloring is not independent",
        ));
    }
    Ok(s)
}

/// Gives one neighbor of every bad vertex (the lowest-indexed) its own fresh
/// color `chi + i`. Uses at most `chi + |S| <= chi + α(G)` colors.
pub fn repair_independent(g: &Graph, nc: &NormalizedColoring) -> Result<RepairResult> {
    if nc.chi < 4 {
        return Err(Error::pre(format!(
            "independent-set repair needs chi >= 4, got {}",
            nc.chi
        )));
    }
    let s = independent_bad_set(g, &nc.coloring)?;
    let mut chosen: Vec<usize> = Vec::new();
    for w in s.iter() {
        let x = g.neighbors(w)[0];
        if !chosen.contains(&x) {
            chosen.push(x);
        }
    }
    let mut colors = nc.coloring.clone();
    for (i, &x) in chosen.iter().enumerate() {
        colors.set(x, (nc.chi + i + 1) as u32);
    }
    let components = square_components(g, &s).len();
    let bound = nc.chi + s.len();
    finish(
        g,
        colors,
        s,
        components,
        Strategy::IndependentSet,
        nc.chi,
        bound,
        true,
    )
}

/// For each component `i` of the square graph on the bad set `S`, 2-colors
/// the hypergraph of neighborhoods `{N(x) : x in component i}` and moves one
/// side to the fresh color `palette + i`.
///
/// The neighborhoods of one component share a single color, and different
/// components have disjoint neighborhoods. `guaranteed` marks inputs where
/// the hypergraphs are known to be 2-colorable; a failure there is a bug.
fn recolor_bad_components(
    g: &Graph,
    colors: &mut Coloring,
    s: &VertexSet,
    palette: usize,
    seed: u64,
    budgets: &Budgets,
    guaranteed: bool,
) -> Result<usize> {
    let comps = square_components(g, s);
    let mut rng = seeded(seed, "components");
    for (i, comp) in comps.iter().enumerate() {
        let h = Hypergraph::from_tagged(
            g.n(),
            comp.iter().map(|x| (Some(x), g.neighbors(x).to_vec())),
        )?;
        let support = h.support();
        let shared = colors.color(support[0]);
        if support.iter().any(|&y| colors.color(y) != shared) {
            return Err(Error::internal(format!(
                "neighborhoods of component {i} are not monochromatic"
            )));
        }
        let split = match two_color(&h, rng.gen(), budgets) {
            TwoColorOutcome::Colored(c) => c,
            outcome if guaranteed => {
                return Err(Error::internal(format!(
                    "hypergraph of component {i} not 2-colored ({outcome:?})"
                )))
            }
            _ => return Err(Error::pre(format!(
                "hypergraph of component {i} could not be 2-colored and no condition guarantees it"
            ))),
        };
        let fresh = (palette + i + 1) as u32;
        for &y in &support {
            if split.side(y) == Side::A {
                colors.set(y, fresh);
            }
        }
    }
    Ok(comps.len())
}

fn hypergraph_condition(g: &Graph) -> bool {
    matches!(g.is_regular(), Some(k) if k >= 4) || mcdiarmid_graph_condition_plus1(g).holds
}

/// Component-wise hypergraph repair. Uses at most `chi + com(G²[S])` colors,
/// which is at most `chi + α(G²)`.
pub fn repair_components(
    g: &Graph,
    nc: &NormalizedColoring,
    seed: u64,
    budgets: &Budgets,
) -> Result<RepairResult> {
    if nc.chi < 4 {
        return Err(Error::pre(format!(
            "component repair needs chi >= 4, got {}",
            nc.chi
        )));
    }
    if g.is_regular() == Some(3) && g.is_complete() {
        // K4: the normalized coloring is already rainbow
        let s = VertexSet::empty(g.n());
        return finish(
            g,
            nc.coloring.clone(),
            s,
            0,
            Strategy::ComponentHypergraph,
            nc.chi,
            nc.chi,
            true,
        );
    }
    if !hypergraph_condition(g) {
        return Err(Error::pre(
            "component repair needs a k-regular graph with k >= 4 or e(D^2 - D + 1) <= 2^d",
        ));
    }
    let s = independent_bad_set(g, &nc.coloring)?;
    let mut colors = nc.coloring.clone();
    let components = recolor_bad_components(g, &mut colors, &s, nc.chi, seed, budgets, true)?;
    let bound = nc.chi + components;
    finish(
        g,
        colors,
        s,
        components,
        Strategy::ComponentHypergraph,
        nc.chi,
        bound,
        true,
    )
}

/// Repair seeded by a maximal independent set `i`.
///
/// `i` becomes color class 1 of a minimum coloring with that class pinned
/// (`t` colors). The hypergraph `{N(v) : N(v) ⊆ i}` is 2-colored and one
/// side moves to color `t + 1`; the remaining bad vertices then lie in `i`
/// and are repaired component-wise. Uses at most `t + 1 + com(G²[S])` colors.
pub fn repair_maximal_independent(
    g: &Graph,
    i: &VertexSet,
    seed: u64,
    budgets: &Budgets,
) -> Result<RepairResult> {
    if !g.is_independent(i) {
        return Err(Error::pre("pinned set is not independent"));
    }
    let in_i = i.mask();
    if let Some(v) = (0..g.n()).find(|&v| !in_i[v] && g.neighbors(v).iter().all(|&w| !in_i[w])) {
        return Err(Error::pre(format!(
            "pinned set is not maximal: vertex {v} could join it"
        )));
    }
    let condition = hypergraph_condition(g);

    let rest = VertexSet::new(g.n(), (0..g.n()).filter(|&v| !in_i[v]))?;
    let (chi_rest, rest_coloring) =
        chromatic_number(&g.induced_subgraph(&rest), budgets.exact_vertices)?;
    let t = 1 + chi_rest;
    let mut raw = vec![1u32; g.n()];
    for (idx, v) in rest.iter().enumerate() {
        raw[v] = rest_coloring.color(idx) + 1;
    }
    let mut colors = Coloring::from_raw(raw);

    let h = g.restricted_neighborhood_hypergraph(i)?;
    let mut rng = seeded(seed, "maximal");
    let split = match two_color(&h, rng.gen(), budgets) {
        TwoColorOutcome::Colored(c) => c,
        outcome if condition => {
            return Err(Error::internal(format!(
                "pinned-class hypergraph not 2-colored ({outcome:?})"
            )))
        }
        _ => {
            return Err(Error::pre(
                "pinned-class hypergraph could not be 2-colored and no condition guarantees it",
            ))
        }
    };
    for y in h.support() {
        if split.side(y) == Side::B {
            colors.set(y, (t + 1) as u32);
        }
    }

    let s = bad_vertices(g, &colors)?;
    if s.iter().any(|v| !in_i[v]) {
        return Err(Error::internal("a bad vertex outside the pinned class"));
    }
    let components = recolor_bad_components(g, &mut colors, &s, t + 1, seed, budgets, condition)?;
    let bound = t + 1 + components;
    finish(
        g,
        colors,
        s,
        components,
        Strategy::MaximalIndependentPlusOne,
        t,
        bound,
        condition,
    )
}

/// Color class of `c` containing `v`, grown greedily into a maximal independent set.
pub fn maximal_class(g: &Graph, c: &Coloring, v: usize) -> VertexSet {
    let target = c.color(v);
    let mut in_set: Vec<bool> = (0..g.n()).map(|w| c.color(w) == target).collect();
    for w in 0..g.n() {
        if !in_set[w] && g.neighbors(w).iter().all(|&x| !in_set[x]) {
            in_set[w] = true;
        }
    }
    VertexSet::new(g.n(), (0..g.n()).filter(|&w| in_set[w])).unwrap()
}

/// End-to-end pipeline: exact `χ`, normalization on `anchor` (default: the
/// smallest edge), then the chosen repair.
pub fn repair_pipeline(
    g: &Graph,
    strategy: Strategy,
    anchor: Option<(usize, usize)>,
    seed: u64,
    budgets: &Budgets,
) -> Result<RepairResult> {
    let (chi, witness) = chromatic_number(g, budgets.exact_vertices)?;
    match strategy {
        Strategy::MaximalIndependentPlusOne => {
            if g.n() == 0 {
                return Err(Error::pre("empty graph"));
            }
            let i = maximal_class(g, &witness, 0);
            repair_maximal_independent(g, &i, seed, budgets)
        }
        _ => {
            let anchor = anchor
                .or_else(|| default_anchor(g))
                .ok_or_else(|| Error::pre("graph has no edge to anchor on"))?;
            let nc = normalize_from(g, &witness, chi, anchor)?;
            match strategy {
                Strategy::IndependentSet => repair_independent(g, &nc),
                _ => repair_components(g, &nc, seed, budgets),
            }
        }
    }
}
