//! Bound-tightness benchmark: run every decomposition strategy over a set
//! of generated instances and tabulate bounds against the exact oracle.
//!
//! Spec files list one family per line. Any parameter may be a single
//! value, an inclusive range `a..=b`, a half-open range `a..b` or a comma
//! list; lines expand to the Cartesian product.
//!
//! ```text
//! # chains with a path-shaped CI graph
//! triangle_chain k=2..=8
//! random_even n=4..=8 cycles=1..=4 seed=0..20
//! ```

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::decompose_greedy;
use crate::decycle::{analyze, exact_decycling_number, AnalyzeOptions};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::optimize::{optimize_decomposition, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Greedy,
    Exhaustive,
    LocalSearch,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Greedy, Strategy::Exhaustive, Strategy::LocalSearch];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Greedy => "greedy",
            Strategy::Exhaustive => "exhaustive",
            Strategy::LocalSearch => "local_search",
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Family(format!("unknown strategy {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub strategies: Vec<Strategy>,
    pub oracle_limit: usize,
    /// Evaluation budget for the two optimizer strategies.
    pub budget: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            strategies: Strategy::ALL.to_vec(),
            oracle_limit: crate::decycle::DEFAULT_ORACLE_LIMIT,
            budget: 2_000,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub graph_id: String,
    pub vertices: usize,
    pub edges: usize,
    pub strategy: Strategy,
    pub ci_simple: bool,
    pub rank: usize,
    pub intersection_bound: usize,
    pub general_bound: usize,
    pub exact: Option<usize>,
    pub gap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrategySummary {
    pub strategy: Strategy,
    pub rows: usize,
    pub rows_with_exact: usize,
    pub mean_gap: Option<f64>,
    pub max_gap: Option<usize>,
    /// Rows where the exact value exceeded the general bound. Always 0
    /// unless something is broken.
    pub violations: usize,
}

#[derive(Clone, Debug)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    /// `(graph id, strategy)` pairs dropped because exhaustive search ran
    /// out of budget.
    pub skipped: Vec<(String, Strategy)>,
}

pub fn parse_bench_spec(text: &str) -> Result<Vec<FamilySpec>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let name = tokens.next().expect("non-empty line");
        let mut expanded: Vec<String> = vec![name.to_string()];
        for t in tokens {
            let (k, v) = t
                .split_once('=')
                .ok_or_else(|| Error::Parse { line: idx + 1, message: format!("expected key=value, got {t:?}") })?;
            let values = expand_values(v).map_err(|message| Error::Parse { line: idx + 1, message })?;
            expanded =
                expanded.iter().flat_map(|prefix| values.iter().map(move |x| format!("{prefix} {k}={x}"))).collect();
        }
        for s in expanded {
            out.push(s.parse().map_err(|e: Error| Error::Parse { line: idx + 1, message: e.to_string() })?);
        }
    }
    Ok(out)
}

fn expand_values(v: &str) -> std::result::Result<Vec<u64>, String> {
    let num = |s: &str| s.parse::<u64>().map_err(|_| format!("{s:?} is not a non-negative integer"));
    if let Some((a, b)) = v.split_once("..=") {
        Ok((num(a)?..=num(b)?).collect())
    } else if let Some((a, b)) = v.split_once("..") {
        Ok((num(a)?..num(b)?).collect())
    } else {
        v.split(',').map(num).collect()
    }
}

type InstanceRows = (Vec<BenchRow>, Vec<(String, Strategy)>);

pub fn run_bench(specs: &[FamilySpec], config: &BenchConfig) -> Result<BenchOutcome> {
    let per_instance: Vec<Result<InstanceRows>> = specs.par_iter().map(|spec| bench_instance(spec, config)).collect();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for r in per_instance {
        let (rs, sk) = r?;
        rows.extend(rs);
        skipped.extend(sk);
    }
    Ok(BenchOutcome { rows, skipped })
}

fn bench_instance(spec: &FamilySpec, config: &BenchConfig) -> Result<InstanceRows> {
    let g = spec.generate()?;
    let id = spec.to_string();
    let exact = if g.vertex_count() <= config.oracle_limit {
        Some(exact_decycling_number(&g, Some(config.oracle_limit))?.0)
    } else {
        None
    };
    let opts = AnalyzeOptions { seed: config.seed, oracle_limit: None };
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &strategy in &config.strategies {
        let d = match strategy {
            Strategy::Greedy => decompose_greedy(&g, config.seed)?,
            Strategy::Exhaustive => match optimize_decomposition(&g, Method::Exhaustive, config.budget, config.seed) {
                Ok(r) => r.best_decomposition,
                Err(Error::BudgetExceeded(_)) => {
                    skipped.push((id.clone(), strategy));
                    continue;
                }
                Err(e) => return Err(e),
            },
            Strategy::LocalSearch => {
                optimize_decomposition(&g, Method::LocalSearch, config.budget, config.seed)?.best_decomposition
            }
        };
        let report = analyze(&g, Some(&d), opts)?;
        rows.push(BenchRow {
            graph_id: id.clone(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            strategy,
            ci_simple: report.ci_simple,
            rank: report.ci_rank,
            intersection_bound: report.intersection_bound,
            general_bound: report.general_bound,
            exact,
            gap: exact.map(|e| report.general_bound.saturating_sub(e)),
        });
    }
    Ok((rows, skipped))
}

pub const CSV_HEADER: &str =
    "graph_id,vertices,edges,strategy,ci_simple,rank,intersection_bound,general_bound,exact,gap";

pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let na = |v: Option<usize>| v.map_or_else(|| "NA".to_string(), |x| x.to_string());
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.graph_id,
            r.vertices,
            r.edges,
            r.strategy.name(),
            r.ci_simple,
            r.rank,
            r.intersection_bound,
            r.general_bound,
            na(r.exact),
            na(r.gap)
        );
    }
    out
}

pub fn summarize(rows: &[BenchRow]) -> Vec<StrategySummary> {
    let mut out = Vec::new();
    for strategy in Strategy::ALL {
        let mine: Vec<&BenchRow> = rows.iter().filter(|r| r.strategy == strategy).collect();
        if mine.is_empty() {
            continue;
        }
        let gaps: Vec<usize> = mine.iter().filter_map(|r| r.gap).collect();
        out.push(StrategySummary {
            strategy,
            rows: mine.len(),
            rows_with_exact: gaps.len(),
            mean_gap: (!gaps.is_empty()).then(|| gaps.iter().sum::<usize>() as f64 / gaps.len() as f64),
            max_gap: gaps.iter().copied().max(),
            violations: mine.iter().filter(|r| r.exact.is_some_and(|e| e > r.general_bound)).count(),
        });
    }
    out
}

pub fn render_summary(summary: &[StrategySummary]) -> String {
    let mut out = String::from("strategy       rows  exact  mean_gap  max_gap  violations\n");
    for s in summary {
        let mean = s.mean_gap.map_or("NA".to_string(), |m| format!("{m:.3}"));
        let max = s.max_gap.map_or("NA".to_string(), |m| m.to_string());
        let _ = writeln!(
            out,
            "{:<13} {:>5} {:>6} {:>9} {:>8} {:>11}",
            s.strategy.name(),
            s.rows,
            s.rows_with_exact,
            mean,
            max,
            s.violations
        );
    }
    out
}
