use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Maximum independent set by branch and bound.
///
/// Degree-0/1 vertices are taken greedily, graphs of maximum degree two are
/// solved as unions of paths and cycles, and a greedy clique cover bounds
/// every branch from above.
pub fn independence_number(g: &Graph, budget: usize) -> Result<(usize, VertexSet)> {
    if g.n() > budget {
        return Err(Error::Budget {
            what: "independence number",
            size: g.n(),
            limit: budget,
        });
    }
    let n = g.n();
    let rows: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(n);
            for &w in g.neighbors(v) {
                row.insert(w);
            }
            row
        })
        .collect();
    let mut mis = Mis {
        rows,
        best: Vec::new(),
        current: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    mis.branch(all);
    let set = VertexSet::new(n, mis.best)?;
    Ok((set.len(), set))
}

/// Independence number of the square graph.
pub fn alpha_square(g: &Graph, budget: usize) -> Result<usize> {
    Ok(independence_number(&g.square(), budget)?.0)
}

struct Mis {
    rows: Vec<FixedBitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Mis {
    fn degree(&self, v: usize, p: &FixedBitSet) -> usize {
        self.rows[v].intersection_count(p)
    }

    fn take(&mut self, v: usize, p: &mut FixedBitSet) {
        self.current.push(v);
        p.set(v, false);
        p.difference_with(&self.rows[v]);
    }

    fn record(&mut self) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
    }

    fn branch(&mut self, mut p: FixedBitSet) {
        let mark = self.current.len();
        loop {
            if p.is_clear() {
                self.record();
                self.current.truncate(mark);
                return;
            }
            // forced choices: a vertex of degree <= 1 is always in some maximum set
            let mut forced = None;
            let mut max_v = usize::MAX;
            let mut max_d = 0;
            for v in p.ones() {
                let d = self.degree(v, &p);
                if d <= 1 {
                    forced = Some(v);
                    break;
                }
                if d > max_d || max_v == usize::MAX {
                    max_d = d;
                    max_v = v;
                }
            }
            if let Some(v) = forced {
                self.take(v, &mut p);
                continue;
            }
            if self.current.len() + p.count_ones(..) <= self.best.len() {
                self.current.truncate(mark);
                return;
            }
            if max_d == 2 {
                self.take_cycles(&mut p);
                self.record();
                self.current.truncate(mark);
                return;
            }
            if self.current.len() + self.clique_cover(&p) <= self.best.len() {
                self.current.truncate(mark);
                return;
            }
            let mut with = p.clone();
            self.take(max_v, &mut with);
            self.branch(with);
            self.current.pop();
            p.set(max_v, false);
        }
    }

    /// Every remaining vertex has degree exactly two: disjoint cycles.
    fn take_cycles(&mut self, p: &mut FixedBitSet) {
        while let Some(start) = p.ones().next() {
            let mut cyc = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            loop {
                let next = self.rows[cur].intersection(p).find(|&w| w != prev).unwrap();
                if next == start {
                    break;
                }
                cyc.push(next);
                prev = cur;
                cur = next;
            }
            for &v in &cyc {
                p.set(v, false);
            }
            for &v in cyc.iter().step_by(2).take(cyc.len() / 2) {
                self.current.push(v);
            }
        }
    }

    /// Greedy partition of `p` into cliques; its size bounds α from above.
    fn clique_cover(&self, p: &FixedBitSet) -> usize {
        let mut cliques: Vec<FixedBitSet> = Vec::new();
        for v in p.ones() {
            match cliques.iter_mut().find(|c| c.is_subset(&self.rows[v])) {
                Some(c) => c.insert(v),
                None => {
                    let mut c = FixedBitSet::with_capacity(p.len());
                    c.insert(v);
                    cliques.push(c);
                }
            }
        }
        cliques.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, petersen, random_regular};
    use proptest::prelude::*;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                g.edges()
                    .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(independence_number(&cycle(5).unwrap(), 64).unwrap().0, 2);
        assert_eq!(independence_number(&complete(6), 64).unwrap().0, 1);
        assert_eq!(independence_number(&petersen(), 64).unwrap().0, 4);
        assert_eq!(independence_number(&Graph::empty(0), 64).unwrap().0, 0);
    }

    #[test]
    fn alpha_square_examples() {
        assert_eq!(alpha_square(&cycle(5).unwrap(), 64).unwrap(), 1);
        assert_eq!(alpha_square(&cycle(7).unwrap(), 64).unwrap(), 2);
        assert_eq!(alpha_square(&petersen(), 64).unwrap(), 1);
    }

    #[test]
    fn witness_is_independent_on_random_regular() {
        for seed in 0..5 {
            let g = random_regular(40, 4, seed).unwrap();
            let (a, s) = independence_number(&g, 64).unwrap();
            assert_eq!(a, s.len());
            assert!(g.is_independent(&s));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]
        #[test]
        fn alpha_matches_brute_force(n in 1usize..13, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i % bits.len()] { edges.push((u, v)); }
                    i += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let (a, s) = independence_number(&g, 64).unwrap();
            prop_assert_eq!(a, brute_alpha(&g));
            prop_assert!(g.is_independent(&s));
        }
    }
}
