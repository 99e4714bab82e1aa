//! Exact oracles: chromatic and dynamic chromatic numbers, independence
//! numbers, unique colorability, and the verifiers every pipeline output is
//! checked against.

mod coloring;
mod independence;
mod report;
pub(crate) mod search;

use std::ops::ControlFlow;

pub(crate) use coloring::neighborhood_colors;
pub use coloring::{is_dynamic, is_proper, Coloring};
pub use independence::{alpha_square, independence_number};
pub use report::{bound_report, BoundReport, Verdict};

use crate::error::{Error, Result};
use crate::graph::Graph;
use search::{dsatur, greedy_clique, ColoringSearch};

fn check_budget(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.n() > limit {
        return Err(Error::Budget {
            what,
            size: g.n(),
            limit,
        });
    }
    Ok(())
}

/// A proper `k`-coloring, if one exists.
pub fn find_coloring(g: &Graph, k: usize, budget: usize) -> Result<Option<Coloring>> {
    check_budget(g, budget, "k-coloring search")?;
    Ok(search_with_clique(g, k, false).map(Coloring::from_raw))
}

fn search_with_clique(g: &Graph, k: usize, dynamic: bool) -> Option<Vec<u32>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    let clique = greedy_clique(g);
    let mut search = ColoringSearch::new(g, k, dynamic);
    if !search.precolor_clique(&clique) {
        return None;
    }
    search.find()
}

/// Proper coloring by DSATUR, without any size limit. Not minimum in general.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    Coloring::from_raw(dsatur(g))
}

/// Chromatic number with a witness coloring using exactly that many colors.
pub fn chromatic_number(g: &Graph, budget: usize) -> Result<(usize, Coloring)> {
    check_budget(g, budget, "chromatic number")?;
    if g.n() == 0 {
        return Ok((0, Coloring::from_raw(Vec::new())));
    }
    let lower = greedy_clique(g).len();
    let greedy = dsatur(g);
    let upper = greedy.iter().copied().max().unwrap() as usize;
    for k in lower..upper {
        if let Some(c) = search_with_clique(g, k, false) {
            return Ok((k, Coloring::from_raw(c)));
        }
    }
    Ok((upper, Coloring::from_raw(greedy)))
}

/// Dynamic chromatic number with a witness dynamic coloring.
pub fn dynamic_chromatic_number(g: &Graph, budget: usize) -> Result<(usize, Coloring)> {
    check_budget(g, budget, "dynamic chromatic number")?;
    if g.n() == 0 {
        return Ok((0, Coloring::from_raw(Vec::new())));
    }
    let lower = greedy_clique(g).len();
    for k in lower..=g.n() {
        if let Some(c) = search_with_clique(g, k, true) {
            return Ok((k, Coloring::from_raw(c)));
        }
    }
    // all-distinct colors are always dynamic
    Err(Error::internal("no dynamic coloring with n colors"))
}

/// Whether every proper `k`-coloring of `g` induces the same partition into
/// color classes.
pub fn is_uniquely_colorable(g: &Graph, k: usize, budget: usize) -> Result<bool> {
    check_budget(g, budget, "unique colorability")?;
    let clique = greedy_clique(g);
    let mut search = ColoringSearch::new(g, k, false);
    if g.n() > 0 && !search.precolor_clique(&clique) {
        return Err(Error::pre(format!("graph is not {k}-colorable")));
    }
    let mut found = 0;
    if g.n() == 0 {
        found = 1;
    } else {
        let _ = search.run(&mut |_: &[u32]| {
            found += 1;
            if found >= 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
    }
    match found {
        0 => Err(Error::pre(format!("graph is not {k}-colorable"))),
        1 => Ok(true),
        _ => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, petersen};
    use proptest::prelude::*;

    /// Brute force over all `k^n` assignments.
    fn brute_min_colors(g: &Graph, dynamic: bool) -> usize {
        let n = g.n();
        for k in 1..=n {
            let total = (k as u64).pow(n as u32);
            for code in 0..total {
                let mut x = code;
                let colors: Vec<u32> = (0..n)
                    .map(|_| {
                        let c = (x % k as u64) as u32 + 1;
                        x /= k as u64;
                        c
                    })
                    .collect();
                let c = Coloring::from_raw(colors);
                let ok = if dynamic {
                    is_dynamic(g, &c).unwrap()
                } else {
                    is_proper(g, &c).unwrap()
                };
                if ok {
                    return k;
                }
            }
        }
        0
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5).unwrap(), 64).unwrap().0, 3);
        assert_eq!(chromatic_number(&complete(4), 64).unwrap().0, 4);
        assert_eq!(chromatic_number(&petersen(), 64).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::empty(3), 64).unwrap().0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0), 64).unwrap().0, 0);
    }

    #[test]
    fn dynamic_examples() {
        assert_eq!(
            dynamic_chromatic_number(&cycle(5).unwrap(), 64).unwrap().0,
            5
        );
        assert_eq!(
            dynamic_chromatic_number(&complete_bipartite(2, 2), 64)
                .unwrap()
                .0,
            4
        );
        assert_eq!(
            dynamic_chromatic_number(&complete_bipartite(3, 3), 64)
                .unwrap()
                .0,
            4
        );
        assert_eq!(dynamic_chromatic_number(&complete(4), 64).unwrap().0, 4);
        // C_n: 3 when 3 | n, else 4 (C5 aside)
        assert_eq!(
            dynamic_chromatic_number(&cycle(6).unwrap(), 64).unwrap().0,
            3
        );
        assert_eq!(
            dynamic_chromatic_number(&cycle(8).unwrap(), 64).unwrap().0,
            4
        );
    }

    #[test]
    fn budgets_are_errors() {
        let g = cycle(70).unwrap();
        assert!(matches!(
            chromatic_number(&g, 64),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            dynamic_chromatic_number(&g, 64),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            is_uniquely_colorable(&g, 2, 40),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn unique_colorability_examples() {
        for n in 1..6 {
            assert!(is_uniquely_colorable(&complete(n), n, 40).unwrap());
        }
        assert!(is_uniquely_colorable(&cycle(4).unwrap(), 2, 40).unwrap());
        assert!(!is_uniquely_colorable(&cycle(6).unwrap(), 3, 40).unwrap());
        assert!(is_uniquely_colorable(&cycle(5).unwrap(), 2, 40).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn chromatic_matches_brute_force(g in arb_graph(7)) {
            let (chi, witness) = chromatic_number(&g, 64).unwrap();
            prop_assert_eq!(chi, brute_min_colors(&g, false));
            prop_assert!(is_proper(&g, &witness).unwrap());
            prop_assert_eq!(witness.colors_used(), chi);
        }

        #[test]
        fn dynamic_matches_brute_force(g in arb_graph(6)) {
            let (chi2, witness) = dynamic_chromatic_number(&g, 64).unwrap();
            prop_assert_eq!(chi2, brute_min_colors(&g, true));
            prop_assert!(is_dynamic(&g, &witness).unwrap());
            prop_assert_eq!(witness.colors_used(), chi2);
            prop_assert!(chromatic_number(&g, 64).unwrap().0 <= chi2);
        }
    }
}
