use serde::Serialize;

use crate::error::Result;
use crate::graph::{Distance, Graph};
use crate::hypergraph::{mcdiarmid_graph_condition_plus1, mcdiarmid_graph_condition_plus2};

use super::{chromatic_number, dynamic_chromatic_number, independence_number};

/// One inequality `lhs <= rhs`, or the reason it does not apply.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub name: &'static str,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub holds: Option<bool>,
    pub reason: Option<&'static str>,
}

impl Verdict {
    fn check(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Verdict {
            name,
            lhs: Some(lhs),
            rhs: Some(rhs),
            holds: Some(lhs <= rhs),
            reason: None,
        }
    }

    fn na(name: &'static str, reason: &'static str) -> Self {
        Verdict {
            name,
            lhs: None,
            rhs: None,
            holds: None,
            reason: Some(reason),
        }
    }

    /// `name lhs rhs holds|fails`, or `name - - n/a (reason)`.
    pub fn line(&self) -> String {
        match (self.lhs, self.rhs, self.holds) {
            (Some(l), Some(r), Some(h)) => format!(
                "{} {} {} {}",
                self.name,
                fmt_num(l),
                fmt_num(r),
                if h { "holds" } else { "fails" }
            ),
            _ => format!("{} - - n/a ({})", self.name, self.reason.unwrap_or("")),
        }
    }
}

fn fmt_num(x: f64) -> String {
    if x.is_finite() && x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x:.4}")
    }
}

/// Invariants of one graph and every inequality evaluated on them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub chi: usize,
    pub chi2: usize,
    pub alpha: usize,
    pub alpha_square: usize,
    pub regular_degree: Option<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub connected: bool,
    #[serde(serialize_with = "ser_distance")]
    pub diameter: Distance,
    pub verdicts: Vec<Verdict>,
}

fn ser_distance<S: serde::Serializer>(d: &Distance, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Distance::Finite(x) => s.serialize_some(x),
        Distance::Infinite => s.serialize_none(),
    }
}

impl BoundReport {
    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn lines(&self) -> Vec<String> {
        self.verdicts.iter().map(Verdict::line).collect()
    }
}

pub fn bound_report(g: &Graph, budget: usize) -> Result<BoundReport> {
    let (chi, _) = chromatic_number(g, budget)?;
    let (chi2, _) = dynamic_chromatic_number(g, budget)?;
    let (alpha, _) = independence_number(g, budget)?;
    let (alpha_square, _) = independence_number(&g.square(), budget)?;
    let regular_degree = g.is_regular();
    let diameter = g.diameter();
    let connected = g.is_connected();
    let max_degree = g.max_degree();
    let plus2 = mcdiarmid_graph_condition_plus2(g);
    let plus1 = mcdiarmid_graph_condition_plus1(g);

    let (c, c2) = (chi as f64, chi2 as f64);
    let chi4 = chi >= 4;
    let regular_k4 = matches!(regular_degree, Some(k) if k >= 4);
    let mut v = Vec::new();

    v.push(match regular_degree {
        Some(_) => Verdict::check("conjecture1", c2 - c, 2.0),
        None => Verdict::na("conjecture1", "not regular"),
    });
    v.push(if chi4 {
        Verdict::check("chi_alpha", c2, c + alpha as f64)
    } else {
        Verdict::na("chi_alpha", "chi<4")
    });
    v.push(match (regular_degree, chi4) {
        (Some(_), true) => Verdict::check("chi_alpha_square", c2, c + alpha_square as f64),
        (None, _) => Verdict::na("chi_alpha_square", "not regular"),
        (_, false) => Verdict::na("chi_alpha_square", "chi<4"),
    });
    v.push(match regular_degree {
        Some(k) if k >= 1 => Verdict::check("log_degree", c2 - c, 6.0 * (k as f64).ln() + 2.0),
        Some(_) => Verdict::na("log_degree", "degree 0"),
        None => Verdict::na("log_degree", "not regular"),
    });
    v.push(Verdict::check("cond_plus2", plus2.lhs, plus2.rhs));
    v.push(Verdict::check("cond_plus1", plus1.lhs, plus1.rhs));
    v.push(if !chi4 {
        Verdict::na("cond_alpha_square", "chi<4")
    } else if !plus1.holds {
        Verdict::na("cond_alpha_square", "cond_plus1 fails")
    } else {
        Verdict::check("cond_alpha_square", c2, c + alpha_square as f64)
    });
    v.push(if diameter > Distance::Finite(2) {
        Verdict::na("diameter2", "diameter>2")
    } else if !chi4 {
        Verdict::na("diameter2", "chi<4")
    } else if regular_degree.is_none() && !plus1.holds {
        Verdict::na("diameter2", "neither regular nor cond_plus1")
    } else {
        Verdict::check("diameter2", c2 - c, 1.0)
    });
    v.push(if plus1.holds || regular_k4 {
        Verdict::check("maximal_plus1", c2, c + alpha_square as f64 + 1.0)
    } else {
        Verdict::na(
            "maximal_plus1",
            "neither cond_plus1 nor k-regular with k>=4",
        )
    });
    v.push(match regular_degree {
        Some(_) => Verdict::check("regular_2chi", c2, 2.0 * c),
        None => Verdict::na("regular_2chi", "not regular"),
    });
    v.push(if connected && max_degree >= 4 {
        Verdict::check("delta_plus1", c2, max_degree as f64 + 1.0)
    } else {
        Verdict::na("delta_plus1", "disconnected or max degree<4")
    });
    let is_c5 = g.n() == 5 && regular_degree == Some(2) && connected;
    v.push(if connected && max_degree <= 3 && !is_c5 {
        Verdict::check("subcubic", c2, 4.0)
    } else {
        Verdict::na("subcubic", "disconnected, max degree>3, or C5")
    });

    Ok(BoundReport {
        n: g.n(),
        chi,
        chi2,
        alpha,
        alpha_square,
        regular_degree,
        max_degree,
        min_degree: g.min_degree(),
        connected,
        diameter,
        verdicts: v,
    })
}
