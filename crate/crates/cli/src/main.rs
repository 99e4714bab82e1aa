//! `dynchrome` command-line front end.

use std::fmt::Write as _;
use std::fs;
use std::io::{Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dynchrome::constructions::{
    complete, complete_bipartite, cycle, delta_delta_counterexample, forced_pair_lower_bound,
    petersen, proposition5, random_regular,
};
use dynchrome::exact::{
    bound_report, chromatic_number, dynamic_chromatic_number, greedy_coloring, independence_number,
    is_dynamic, is_proper,
};
use dynchrome::hypergraph::{two_color, Side, TwoColorOutcome};
use dynchrome::io::{parse_coloring, parse_graph, parse_hypergraph, write_coloring, write_graph};
use dynchrome::lll::theorem4_coloring;
use dynchrome::recolor::{repair_pipeline, Strategy};
use dynchrome::{Budgets, Coloring, Error, Graph, Hypergraph};

#[derive(Parser, Debug)]
#[command(name = "dynchrome", version, about = "Dynamic colorings of graphs")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct RunConfig {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of plain lines.
    #[arg(long, global = true)]
    json: bool,
    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Vertex limit for the exact searches.
    #[arg(long, global = true, env = "DYNCHROME_BUDGET_VERTICES", value_parser = positive)]
    budget_vertices: Option<usize>,
    /// Vertex limit for unique-colorability checks.
    #[arg(long, global = true, value_parser = positive)]
    unique_vertices: Option<usize>,
    /// Resampling rounds for the randomized hypergraph 2-coloring.
    #[arg(long, global = true, value_parser = positive)]
    max_rounds: Option<usize>,
    /// Sink-family redraws for `thm4`.
    #[arg(long, global = true, value_parser = positive)]
    max_restarts: Option<usize>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

impl RunConfig {
    fn budgets(&self) -> Budgets {
        let mut b = Budgets::default();
        if let Some(v) = self.budget_vertices {
            b.exact_vertices = v;
        }
        if let Some(v) = self.unique_vertices {
            b.unique_vertices = v;
        }
        if self.max_rounds.is_some() {
            b.max_rounds = self.max_rounds;
        }
        if let Some(v) = self.max_restarts {
            b.max_restarts = v;
        }
        b
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Generate a graph file.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Chromatic number with a witness coloring.
    Chi { graph: PathBuf },
    /// Dynamic chromatic number with a witness coloring.
    Chi2 { graph: PathBuf },
    /// Independence number with a witness set.
    Alpha { graph: PathBuf },
    /// Exact invariants and every bound evaluated on them.
    Report { graph: PathBuf },
    /// Check a coloring file against a graph.
    Verify {
        #[arg(long, conflicts_with = "dynamic", required_unless_present = "dynamic")]
        proper: bool,
        #[arg(long)]
        dynamic: bool,
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// 2-color a hypergraph file.
    TwoColor { hypergraph: PathBuf },
    /// Repair a minimum proper coloring into a dynamic one.
    Thm3 {
        #[arg(long, value_enum, default_value = "components")]
        strategy: StrategyArg,
        /// Anchor edge, 1-based.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        anchor: Option<Vec<usize>>,
        graph: PathBuf,
    },
    /// Dynamic coloring of a regular graph from random vertex orders.
    Thm4 {
        /// How the base proper coloring is obtained.
        #[arg(long, value_enum, default_value = "dsatur")]
        base: BaseArg,
        graph: PathBuf,
    },
    /// Square of a graph.
    Square { graph: PathBuf },
    /// Product of two graphs.
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        left: PathBuf,
        right: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Complete bipartite graph K_{m,m}.
    Kmm {
        m: usize,
    },
    Petersen,
    /// Random k-regular graph on n vertices (uses --seed).
    Regular {
        n: usize,
        k: usize,
    },
    /// Regular graph with chromatic number n and dynamic chromatic number above n.
    Prop5 {
        n: usize,
        /// Regular seed graph with chromatic number above n (default K_{n+1}).
        #[arg(long)]
        g1: Option<PathBuf>,
    },
    /// Seed graph plus a degree-2 vertex on every pair.
    Deltadelta {
        /// Use the cycle of this length as seed graph.
        #[arg(long, default_value_t = 13, conflicts_with = "g1")]
        cycle: usize,
        #[arg(long)]
        g1: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Independent,
    Components,
    #[value(name = "maximal+1")]
    MaximalPlusOne,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Independent => Strategy::IndependentSet,
            StrategyArg::Components => Strategy::ComponentHypergraph,
            StrategyArg::MaximalPlusOne => Strategy::MaximalIndependentPlusOne,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BaseArg {
    Dsatur,
    Exact,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ProductKind {
    Cartesian,
    Categorical,
}

/// Result of a command: text to print and the exit code.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    parse_graph(&read_text(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_hypergraph(path: &Path) -> anyhow::Result<Hypergraph> {
    parse_hypergraph(&read_text(path)?).with_context(|| format!("in {}", path.display()))
}

fn json_text(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn number_with_witness(json: bool, key: &str, value: usize, witness: &Coloring) -> String {
    if json {
        json_text(json!({ key: value, "coloring": witness.as_slice() }))
    } else {
        format!("{value}\n{}", write_coloring(witness))
    }
}

fn gen(cmd: &GenCmd, run: &RunConfig, budgets: &Budgets) -> anyhow::Result<String> {
    let (g, comments) = match cmd {
        GenCmd::Cycle { n } => (cycle(*n)?, vec![format!("cycle n={n}")]),
        GenCmd::Complete { n } => (complete(*n), vec![format!("complete n={n}")]),
        GenCmd::Kmm { m } => (complete_bipartite(*m, *m), vec![format!("kmm m={m}")]),
        GenCmd::Petersen => (petersen(), vec!["petersen".into()]),
        GenCmd::Regular { n, k } => (
            random_regular(*n, *k, run.seed)?,
            vec![format!("regular n={n} k={k} seed={}", run.seed)],
        ),
        GenCmd::Prop5 { n, g1 } => {
            let g1 = g1.as_deref().map(load_graph).transpose()?;
            let inst = proposition5(*n, g1, budgets.exact_vertices)?;
            let mut comments = vec![format!(
                "prop5 n={} d={} m={} cycle={} degree={} apexes={}",
                inst.n,
                inst.d,
                inst.m,
                inst.cycle_len,
                inst.degree(),
                inst.apexes.len()
            )];
            for a in &inst.apexes {
                comments.push(format!(
                    "apex class={} block={} vertex={}",
                    a.class,
                    a.block,
                    a.vertex + 1
                ));
            }
            (inst.graph, comments)
        }
        GenCmd::Deltadelta { cycle: len, g1 } => {
            let (seed_graph, label) = match g1 {
                Some(p) => (load_graph(p)?, format!("g1={}", p.display())),
                None => (cycle(*len)?, format!("cycle={len}")),
            };
            let g = delta_delta_counterexample(&seed_graph)?;
            let c = format!(
                "deltadelta {label} max_degree={} min_degree={} chi2_lower={}",
                g.max_degree(),
                g.min_degree(),
                forced_pair_lower_bound(&g)
            );
            (g, vec![c])
        }
    };
    Ok(write_graph(&g, &comments))
}

fn two_color_text(json: bool, outcome: TwoColorOutcome) -> String {
    let (status, sides) = match &outcome {
        TwoColorOutcome::Colored(c) => ("colored", Some(c)),
        TwoColorOutcome::Unsat => ("UNSAT", None),
        TwoColorOutcome::Unknown => ("UNKNOWN", None),
    };
    let part = |s: Side| -> Vec<usize> {
        sides.map_or(Vec::new(), |c| c.members(s).map(|v| v + 1).collect())
    };
    if json {
        return json_text(json!({ "status": status, "A": part(Side::A), "B": part(Side::B) }));
    }
    if sides.is_none() {
        return format!("{status}\n");
    }
    let line = |tag: &str, vs: Vec<usize>| {
        let mut s = tag.to_string();
        for v in vs {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
        s
    };
    line("A", part(Side::A)) + &line("B", part(Side::B))
}

fn execute(cli: &Cli) -> anyhow::Result<Output> {
    let run = &cli.run;
    let budgets = run.budgets();
    let text = match &cli.cmd {
        Cmd::Gen(g) => gen(g, run, &budgets)?,
        Cmd::Chi { graph } => {
            let (k, w) = chromatic_number(&load_graph(graph)?, budgets.exact_vertices)?;
            number_with_witness(run.json, "chi", k, &w)
        }
        Cmd::Chi2 { graph } => {
            let (k, w) = dynamic_chromatic_number(&load_graph(graph)?, budgets.exact_vertices)?;
            number_with_witness(run.json, "chi2", k, &w)
        }
        Cmd::Alpha { graph } => {
            let (a, set) = independence_number(&load_graph(graph)?, budgets.exact_vertices)?;
            if run.json {
                let members: Vec<usize> = set.iter().map(|v| v + 1).collect();
                json_text(json!({ "alpha": a, "set": members }))
            } else {
                let mut s = format!("{a}\n");
                for v in set.iter() {
                    let _ = writeln!(s, "v{} 1", v + 1);
                }
                s
            }
        }
        Cmd::Report { graph } => {
            let r = bound_report(&load_graph(graph)?, budgets.exact_vertices)?;
            if run.json {
                json_text(serde_json::to_value(&r)?)
            } else {
                let mut s = String::new();
                let _ = writeln!(s, "n {}", r.n);
                let _ = writeln!(s, "chi {}", r.chi);
                let _ = writeln!(s, "chi2 {}", r.chi2);
                let _ = writeln!(s, "alpha {}", r.alpha);
                let _ = writeln!(s, "alpha_square {}", r.alpha_square);
                let _ = writeln!(s, "diameter {}", r.diameter);
                for l in r.lines() {
                    s.push_str(&l);
                    s.push('\n');
                }
                s
            }
        }
        Cmd::Verify {
            proper,
            dynamic,
            graph,
            coloring,
        } => {
            let g = load_graph(graph)?;
            let c = parse_coloring(&read_text(coloring)?, g.n())
                .with_context(|| format!("in {}", coloring.display()))?;
            let (kind, ok) = if *dynamic {
                ("dynamic", is_dynamic(&g, &c)?)
            } else {
                debug_assert!(*proper);
                ("proper", is_proper(&g, &c)?)
            };
            let text = if run.json {
                json_text(json!({ kind: ok, "colors_used": c.colors_used() }))
            } else {
                format!(
                    "{kind} {}\ncolors_used {}\n",
                    if ok { "yes" } else { "no" },
                    c.colors_used()
                )
            };
            return Ok(Output {
                text,
                code: if ok { 0 } else { 1 },
            });
        }
        Cmd::TwoColor { hypergraph } => {
            let h = load_hypergraph(hypergraph)?;
            two_color_text(run.json, two_color(&h, run.seed, &budgets))
        }
        Cmd::Thm3 {
            strategy,
            anchor,
            graph,
        } => {
            let g = load_graph(graph)?;
            let anchor = match anchor.as_deref() {
                Some(&[u, v]) if (1..=g.n()).contains(&u) && (1..=g.n()).contains(&v) => {
                    Some((u - 1, v - 1))
                }
                Some(_) => {
                    return Err(
                        Error::Precondition("anchor vertices outside the graph".into()).into(),
                    )
                }
                None => None,
            };
            let r = repair_pipeline(&g, (*strategy).into(), anchor, run.seed, &budgets)?;
            let form = match r.strategy {
                Strategy::IndependentSet => {
                    format!("chi + |S| = {} + {}", r.base_colors, r.bad_set.len())
                }
                Strategy::ComponentHypergraph => {
                    format!("chi + com = {} + {}", r.base_colors, r.components)
                }
                Strategy::MaximalIndependentPlusOne => {
                    format!("t + 1 + com = {} + 1 + {}", r.base_colors, r.components)
                }
            };
            let holds = r.colors_used <= r.bound;
            if run.json {
                json_text(json!({
                    "strategy": r.strategy,
                    "base_colors": r.base_colors,
                    "colors_used": r.colors_used,
                    "bad_set": r.bad_set.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "components": r.components,
                    "bound": r.bound,
                    "holds": holds,
                    "condition_holds": r.condition_holds,
                    "coloring": r.coloring.as_slice(),
                }))
            } else {
                let mut s = String::new();
                let _ = writeln!(
                    s,
                    "strategy {}",
                    serde_json::to_value(r.strategy)?.as_str().unwrap_or("")
                );
                let _ = writeln!(s, "base_colors {}", r.base_colors);
                let _ = writeln!(s, "colors_used {}", r.colors_used);
                let _ = writeln!(s, "bad_set {}", r.bad_set.len());
                let _ = writeln!(s, "components {}", r.components);
                if !r.condition_holds {
                    s.push_str("condition fails\n");
                }
                let _ = writeln!(
                    s,
                    "inequality {} <= {form} = {} {}",
                    r.colors_used,
                    r.bound,
                    if holds { "holds" } else { "fails" }
                );
                s + &write_coloring(&r.coloring)
            }
        }
        Cmd::Thm4 { base, graph } => {
            let g = load_graph(graph)?;
            let base = match base {
                BaseArg::Dsatur => greedy_coloring(&g),
                BaseArg::Exact => chromatic_number(&g, budgets.exact_vertices)?.1,
            };
            let o = theorem4_coloring(&g, &base, run.seed, &budgets)?;
            if run.json {
                json_text(json!({
                    "degree": o.degree,
                    "l": o.l,
                    "restarts": o.restarts,
                    "t_size": o.t_size,
                    "base_colors": o.base_colors,
                    "colors_used": o.colors_used,
                    "bound": o.bound,
                    "coloring": o.coloring.as_slice(),
                }))
            } else {
                let mut s = String::new();
                let _ = writeln!(s, "l {}", o.l);
                let _ = writeln!(s, "restarts {}", o.restarts);
                let _ = writeln!(s, "t_size {}", o.t_size);
                let _ = writeln!(s, "colors_used {}", o.colors_used);
                if o.l == 0 {
                    let _ = writeln!(s, "chi2_bound = 6 (degree {} solved exactly)", o.degree);
                } else {
                    let _ = writeln!(
                        s,
                        "chi2_bound = chi_base + 2l = {} + {} = {}",
                        o.base_colors,
                        2 * o.l,
                        o.bound
                    );
                }
                s + &write_coloring(&o.coloring)
            }
        }
        Cmd::Square { graph } => write_graph(&load_graph(graph)?.square(), &[]),
        Cmd::Product { kind, left, right } => {
            let (a, b) = (load_graph(left)?, load_graph(right)?);
            let p = match kind {
                ProductKind::Cartesian => a.cartesian_product(&b),
                ProductKind::Categorical => a.categorical_product(&b),
            };
            write_graph(&p, &[])
        }
    };
    Ok(Output::ok(text))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Budget { .. } | Error::Exhausted { .. }) => 2,
        Some(Error::Internal(_)) => 3,
        _ => 1,
    }
}

/// Collapses a possibly multi-line message into one line.
fn one_line(msg: &str) -> String {
    msg.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = one_line(&e.to_string());
            let msg = msg.strip_prefix("error: ").unwrap_or(&msg);
            eprintln!("dynchrome: {msg}");
            return ExitCode::from(1);
        }
    };
    let result = execute(&cli).and_then(|out| {
        match &cli.run.output {
            Some(p) => {
                fs::write(p, &out.text).with_context(|| format!("writing {}", p.display()))?
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(out.text.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("dynchrome: {}", one_line(&format!("{e:#}")));
            ExitCode::from(exit_code(&e))
        }
    }
}
