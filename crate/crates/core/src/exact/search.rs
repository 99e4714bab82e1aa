//! Backtracking search for proper (optionally dynamic) colorings with a fixed
//! number of colors.
//!
//! Vertices are picked fail-first (smallest remaining domain, ties to the
//! largest uncolored degree). A vertex may only open color `max_used + 1`,
//! so every partition into color classes is reached at most once. A greedy
//! clique is precolored `1..=q` before the search starts.
//!
//! In dynamic mode a vertex `w` of degree at least two whose colored
//! neighbors all share color `c` and which has exactly one uncolored neighbor
//! left removes `c` from that neighbor's domain.

use std::ops::ControlFlow;

use crate::graph::Graph;

pub(crate) struct ColoringSearch<'g> {
    g: &'g Graph,
    k: usize,
    dynamic: bool,
    color: Vec<u32>,
    /// `count[v * (k + 1) + c]`: colored neighbors of `v` with color `c`.
    count: Vec<u32>,
    distinct: Vec<u32>,
    uncolored_nbrs: Vec<u32>,
    max_used: u32,
    colored: usize,
    pub(crate) nodes: u64,
}

impl<'g> ColoringSearch<'g> {
    pub(crate) fn new(g: &'g Graph, k: usize, dynamic: bool) -> Self {
        let n = g.n();
        ColoringSearch {
            g,
            k,
            dynamic,
            color: vec![0; n],
            count: vec![0; n * (k + 1)],
            distinct: vec![0; n],
            uncolored_nbrs: (0..n).map(|v| g.degree(v) as u32).collect(),
            max_used: 0,
            colored: 0,
            nodes: 0,
        }
    }

    fn cnt(&self, v: usize, c: u32) -> u32 {
        self.count[v * (self.k + 1) + c as usize]
    }

    /// Colors `v` with `c`; returns false if this breaks a dynamic
    /// constraint that can no longer be repaired. Must be undone with
    /// [`Self::unassign`] either way.
    fn assign(&mut self, v: usize, c: u32) -> bool {
        self.color[v] = c;
        self.colored += 1;
        let stride = self.k + 1;
        let mut ok = true;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.count[w * stride + c as usize];
            if *slot == 0 {
                self.distinct[w] += 1;
            }
            *slot += 1;
            self.uncolored_nbrs[w] -= 1;
            if self.dynamic
                && self.uncolored_nbrs[w] == 0
                && self.g.degree(w) >= 2
                && self.distinct[w] < 2
            {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        self.colored -= 1;
        let stride = self.k + 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.count[w * stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.distinct[w] -= 1;
            }
            self.uncolored_nbrs[w] += 1;
        }
    }

    /// Candidate colors for uncolored `v`, written into `out`.
    fn domain(&self, v: usize, out: &mut Vec<u32>) {
        out.clear();
        let top = (self.max_used as usize + 1).min(self.k) as u32;
        let mut banned = None;
        let mut banned2 = None;
        if self.dynamic {
            for &w in self.g.neighbors(v) {
                if self.uncolored_nbrs[w] == 1 && self.distinct[w] == 1 && self.g.degree(w) >= 2 {
                    let c = self.sole_color(w);
                    match banned {
                        None => banned = Some(c),
                        Some(b) if b == c => {}
                        Some(_) => banned2 = Some(c),
                    }
                    if banned2.is_some() {
                        // two different bans: collect the slow way
                        return self.domain_slow(v, out);
                    }
                }
            }
        }
        for c in 1..=top {
            if self.cnt(v, c) == 0 && banned != Some(c) {
                out.push(c);
            }
        }
    }

    fn domain_slow(&self, v: usize, out: &mut Vec<u32>) {
        out.clear();
        let top = (self.max_used as usize + 1).min(self.k) as u32;
        let mut banned = vec![false; self.k + 1];
        for &w in self.g.neighbors(v) {
            if self.uncolored_nbrs[w] == 1 && self.distinct[w] == 1 && self.g.degree(w) >= 2 {
                banned[self.sole_color(w) as usize] = true;
            }
        }
        for c in 1..=top {
            if self.cnt(v, c) == 0 && !banned[c as usize] {
                out.push(c);
            }
        }
    }

    fn sole_color(&self, w: usize) -> u32 {
        self.g
            .neighbors(w)
            .iter()
            .map(|&x| self.color[x])
            .find(|&c| c != 0)
            .expect("w has a colored neighbor")
    }

    /// Precolors `vertices` with `1, 2, ...`. They must form a clique.
    /// Returns false if the precoloring is already infeasible.
    pub(crate) fn precolor_clique(&mut self, vertices: &[usize]) -> bool {
        if vertices.len() > self.k {
            return false;
        }
        let mut ok = true;
        for (i, &v) in vertices.iter().enumerate() {
            ok &= self.assign(v, i as u32 + 1);
            self.max_used = self.max_used.max(i as u32 + 1);
        }
        ok
    }

    /// Runs the search, handing every complete coloring to `visit`.
    pub(crate) fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        self.nodes += 1;
        if self.colored == self.g.n() {
            return visit(&self.color);
        }
        let mut best: Option<(usize, usize, usize)> = None;
        let mut scratch = Vec::with_capacity(self.k);
        for v in 0..self.g.n() {
            if self.color[v] != 0 {
                continue;
            }
            self.domain(v, &mut scratch);
            let size = scratch.len();
            if size == 0 {
                return ControlFlow::Continue(());
            }
            let free = self.uncolored_nbrs[v] as usize;
            let better = match best {
                None => true,
                Some((bs, bf, _)) => size < bs || (size == bs && free > bf),
            };
            if better {
                best = Some((size, free, v));
            }
        }
        let (_, _, v) = best.expect("an uncolored vertex exists");
        let mut choices = Vec::with_capacity(self.k);
        self.domain(v, &mut choices);
        for c in choices {
            let prev_max = self.max_used;
            self.max_used = self.max_used.max(c);
            let ok = self.assign(v, c);
            let flow = if ok && self.own_constraint_ok(v) {
                self.run(visit)
            } else {
                ControlFlow::Continue(())
            };
            self.unassign(v);
            self.max_used = prev_max;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn own_constraint_ok(&self, v: usize) -> bool {
        !self.dynamic
            || self.uncolored_nbrs[v] != 0
            || self.g.degree(v) < 2
            || self.distinct[v] >= 2
    }

    /// First coloring found, if any.
    pub(crate) fn find(&mut self) -> Option<Vec<u32>> {
        let mut found = None;
        let _ = self.run(&mut |c: &[u32]| {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        });
        found
    }
}

/// Greedy clique: grow from each vertex through its neighbors by descending
/// degree, keep the largest.
pub(crate) fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for &v in &order {
        if g.degree(v) < best.len() {
            break;
        }
        let mut nb: Vec<usize> = g.neighbors(v).to_vec();
        nb.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
        let mut clique = vec![v];
        for w in nb {
            if clique.iter().all(|&x| g.has_edge(x, w)) {
                clique.push(w);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// DSATUR greedy coloring. Colors start at 1.
pub(crate) fn dsatur(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut color = vec![0u32; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == 0)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (1..).find(|&c| seen[v].get(c).is_none_or(|&s| !s)).unwrap();
        color[v] = c as u32;
        for &w in g.neighbors(v) {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    color
}
