use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{bound_edge_count, decycle_general, decycle_tree_ci, exact_decycling_number, DecyclingSet};
use crate::ci::build_ci;
use crate::decomp::{decompose_greedy, ensure_valid, CycleDecomposition};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    /// Seed for the greedy decomposition when none is supplied.
    pub seed: u64,
    /// Largest vertex count the exact oracle will accept; `None` skips it.
    pub oracle_limit: Option<usize>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { seed: 0, oracle_limit: Some(super::DEFAULT_ORACLE_LIMIT) }
    }
}

/// Bounds on the decycling number from one decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub vertices: usize,
    pub edges: usize,
    pub cycles: usize,
    pub ci_links: usize,
    pub ci_simple: bool,
    pub ci_rank: usize,
    /// Link count of CI (plus one per link-less cycle).
    pub intersection_bound: usize,
    /// Minimum forest cover size, present only when CI is a forest.
    pub forest_exact: Option<usize>,
    /// Size of the feedback-link construction's certified set.
    pub general_bound: usize,
    /// `|E(CI)| - |V(CI)| + 1 - |MSF(CI)|`, logged for comparison only.
    pub rank_forest_difference: i64,
    pub exact: Option<usize>,
    pub witness_sets: BTreeMap<String, DecyclingSet>,
}

impl BoundReport {
    pub fn gap(&self) -> Option<usize> {
        self.exact.map(|e| self.general_bound - e)
    }

    /// Plain-text table for terminals.
    pub fn render_table(&self) -> String {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let mut rows: Vec<(String, String)> = vec![
            ("vertices".into(), self.vertices.to_string()),
            ("edges".into(), self.edges.to_string()),
            ("cycles".into(), self.cycles.to_string()),
            ("ci links".into(), self.ci_links.to_string()),
            ("ci simple".into(), self.ci_simple.to_string()),
            ("ci cycle rank".into(), self.ci_rank.to_string()),
            ("intersection bound".into(), self.intersection_bound.to_string()),
            ("forest exact".into(), opt(self.forest_exact)),
            ("general bound".into(), self.general_bound.to_string()),
            ("rank-forest difference".into(), self.rank_forest_difference.to_string()),
            ("exact".into(), opt(self.exact)),
        ];
        for (name, set) in &self.witness_sets {
            rows.push((format!("witness {name}"), format!("{:?}", set.vertices())));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }

    fn empty(g: &Multigraph, opts: AnalyzeOptions) -> Result<Self> {
        let mut names = vec!["intersection", "forest", "general"];
        if opts.oracle_limit.is_some() {
            names.push("exact");
        }
        let mut witness_sets = BTreeMap::new();
        for name in names {
            witness_sets.insert(name.to_string(), DecyclingSet::certify(g, [])?);
        }
        Ok(BoundReport {
            vertices: g.vertex_count(),
            edges: 0,
            cycles: 0,
            ci_links: 0,
            ci_simple: true,
            ci_rank: 0,
            intersection_bound: 0,
            forest_exact: Some(0),
            general_bound: 0,
            rank_forest_difference: 0,
            exact: opts.oracle_limit.map(|_| 0),
            witness_sets,
        })
    }

    fn absorb(&mut self, other: BoundReport) {
        self.vertices += other.vertices;
        self.edges += other.edges;
        self.cycles += other.cycles;
        self.ci_links += other.ci_links;
        self.ci_simple &= other.ci_simple;
        self.ci_rank += other.ci_rank;
        self.intersection_bound += other.intersection_bound;
        self.forest_exact = self.forest_exact.zip(other.forest_exact).map(|(a, b)| a + b);
        self.general_bound += other.general_bound;
        self.rank_forest_difference += other.rank_forest_difference;
        self.exact = self.exact.zip(other.exact).map(|(a, b)| a + b);
        let mut merged = BTreeMap::new();
        for (name, a) in &self.witness_sets {
            if let Some(b) = other.witness_sets.get(name) {
                merged.insert(name.clone(), union_set(a, b));
            }
        }
        self.witness_sets = merged;
    }
}

/// Components are vertex-disjoint, so a union of certified sets is certified.
fn union_set(a: &DecyclingSet, b: &DecyclingSet) -> DecyclingSet {
    let vertices: BTreeSet<usize> = a.vertices().iter().chain(b.vertices()).copied().collect();
    DecyclingSet { vertices: vertices.into_iter().collect(), certified: a.is_certified() && b.is_certified() }
}

/// All bounds for a connected even graph under `d`, or under a greedy
/// decomposition when `d` is `None`.
pub fn analyze(g: &Multigraph, d: Option<&CycleDecomposition>, opts: AnalyzeOptions) -> Result<BoundReport> {
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let owned;
    let d = match d {
        Some(d) => {
            ensure_valid(g, d)?;
            d
        }
        None => {
            owned = decompose_greedy(g, opts.seed)?;
            &owned
        }
    };
    if d.is_empty() {
        return BoundReport::empty(g, opts);
    }
    let ci = build_ci(g, d)?;
    let mut witness_sets = BTreeMap::new();

    let (intersection_bound, w) = bound_edge_count(g, d, &ci)?;
    witness_sets.insert("intersection".to_string(), w);

    let forest_exact = if ci.is_forest() {
        let w = decycle_tree_ci(g, d, &ci)?;
        let n = w.len();
        witness_sets.insert("forest".to_string(), w);
        Some(n)
    } else {
        None
    };

    let w = decycle_general(g, d, &ci)?;
    let general_bound = w.len();
    witness_sets.insert("general".to_string(), w);

    let exact = match opts.oracle_limit {
        Some(limit) if g.vertex_count() <= limit => {
            let (k, w) = exact_decycling_number(g, Some(limit))?;
            witness_sets.insert("exact".to_string(), w);
            Some(k)
        }
        _ => None,
    };

    let msf = ci.msf().size() as i64;
    let rank_forest_difference = ci.link_count() as i64 - ci.node_count() as i64 + 1 - msf;

    Ok(BoundReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        cycles: d.len(),
        ci_links: ci.link_count(),
        ci_simple: ci.is_simple(),
        ci_rank: ci.cycle_rank(),
        intersection_bound,
        forest_exact,
        general_bound,
        rank_forest_difference,
        exact,
        witness_sets,
    })
}

/// Splits `g` into connected components, analyses each and sums the results.
/// A supplied decomposition is split along the same components.
pub fn analyze_components(g: &Multigraph, d: Option<&CycleDecomposition>, opts: AnalyzeOptions) -> Result<BoundReport> {
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    if let Some(d) = d {
        ensure_valid(g, d)?;
    }
    let comps = g.components();
    if comps.len() <= 1 {
        return analyze(g, d, opts);
    }
    let mut total: Option<BoundReport> = None;
    for comp in comps {
        let sub = g.restrict_to(&comp)?;
        let keep: BTreeSet<usize> = comp.into_iter().collect();
        let sub_d = d.map(|d| d.restrict_to(&keep));
        let report = analyze(&sub, sub_d.as_ref(), opts)?;
        match total.as_mut() {
            None => total = Some(report),
            Some(t) => t.absorb(report),
        }
    }
    Ok(total.expect("at least two components"))
}
