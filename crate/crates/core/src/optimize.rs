//! Search over the decomposition space for a decomposition whose CI graph
//! has the smallest cycle rank. Ties go to the smaller general decycling
//! bound, then to the smaller canonical key.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ci::{build_ci_unchecked, CIGraph, CiJson};
use crate::decomp::{
    decompose_greedy, for_each_decomposition, neighbors, CanonicalKey, CycleDecomposition, DecompositionJson,
};
use crate::decycle::decycle_general;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    LocalSearch,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::LocalSearch => "local_search",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(Method::Exhaustive),
            "local_search" | "local-search" => Ok(Method::LocalSearch),
            other => Err(format!("unknown method {other:?} (expected exhaustive or local_search)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OptimizationResult {
    pub best_decomposition: CycleDecomposition,
    pub best_ci: CIGraph,
    pub best_rank: usize,
    pub best_bound: usize,
    pub evaluations: usize,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimizationJson {
    pub method: Method,
    pub best_rank: usize,
    pub best_bound: usize,
    pub ci_simple: bool,
    pub evaluations: usize,
    pub decomposition: DecompositionJson,
    pub ci: CiJson,
}

impl OptimizationResult {
    pub fn to_json(&self) -> OptimizationJson {
        OptimizationJson {
            method: self.method,
            best_rank: self.best_rank,
            best_bound: self.best_bound,
            ci_simple: self.best_ci.is_simple(),
            evaluations: self.evaluations,
            decomposition: self.best_decomposition.to_json(),
            ci: self.best_ci.to_json(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Score {
    rank: usize,
    bound: usize,
    key: CanonicalKey,
}

impl Score {
    fn objective(&self) -> (usize, usize) {
        (self.rank, self.bound)
    }
}

#[derive(Clone)]
struct Candidate {
    score: Score,
    decomposition: CycleDecomposition,
}

fn evaluate(g: &Multigraph, d: CycleDecomposition) -> Result<Candidate> {
    let ci = build_ci_unchecked(g, &d);
    let bound = decycle_general(g, &d, &ci)?.len();
    let score = Score { rank: ci.cycle_rank(), bound, key: d.canonical() };
    Ok(Candidate { score, decomposition: d.normalized() })
}

fn keep_better(best: &mut Option<Candidate>, c: Candidate) {
    if best.as_ref().is_none_or(|b| c.score < b.score) {
        *best = Some(c);
    }
}

pub fn optimize_decomposition(g: &Multigraph, method: Method, budget: usize, seed: u64) -> Result<OptimizationResult> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (best, evaluations) = match method {
        Method::Exhaustive => exhaustive(g, budget)?,
        Method::LocalSearch => local_search(g, budget, seed)?,
    };
    let best = best.ok_or_else(|| Error::Internal("no decomposition evaluated".into()))?;
    let best_ci = build_ci_unchecked(g, &best.decomposition);
    Ok(OptimizationResult {
        best_rank: best.score.rank,
        best_bound: best.score.bound,
        best_decomposition: best.decomposition,
        best_ci,
        evaluations,
        method,
    })
}

fn exhaustive(g: &Multigraph, budget: usize) -> Result<(Option<Candidate>, usize)> {
    let mut best = None;
    let mut evaluations = 0usize;
    let mut failure: Option<Error> = None;
    for_each_decomposition(g, |d| {
        if evaluations == budget {
            failure = Some(Error::BudgetExceeded(budget));
            return ControlFlow::Break(());
        }
        evaluations += 1;
        match evaluate(g, d) {
            Ok(c) => keep_better(&mut best, c),
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok((best, evaluations)),
    }
}

/// Hill climbing with restarts. Each restart begins from a fresh greedy
/// decomposition; every restart after the first also takes one random move
/// before climbing, to get off plateaus. A step moves to the best strictly
/// improving neighbour under (cycle rank, general bound).
fn local_search(g: &Multigraph, budget: usize, seed: u64) -> Result<(Option<Candidate>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Candidate> = None;
    let mut evaluations = 0usize;
    let mut restart = 0u64;

    while evaluations < budget {
        let start_seed = if restart == 0 { seed } else { rng.random() };
        let mut current = evaluate(g, decompose_greedy(g, start_seed)?)?;
        evaluations += 1;

        if restart > 0 && evaluations < budget {
            let options = neighbors(g, &current.decomposition)?;
            if !options.is_empty() {
                let pick = options[rng.random_range(0..options.len())].clone();
                let jumped = evaluate(g, pick)?;
                evaluations += 1;
                keep_better(&mut best, current.clone());
                current = jumped;
            }
        }

        while evaluations < budget {
            let mut improved: Option<Candidate> = None;
            for n in neighbors(g, &current.decomposition)? {
                if evaluations >= budget {
                    break;
                }
                let c = evaluate(g, n)?;
                evaluations += 1;
                let beats_current = c.score.objective() < current.score.objective();
                let beats_improved = improved.as_ref().is_none_or(|i| c.score < i.score);
                if beats_current && beats_improved {
                    improved = Some(c);
                } else {
                    keep_better(&mut best, c);
                }
            }
            match improved {
                Some(c) => {
                    keep_better(&mut best, current.clone());
                    current = c;
                }
                None => break,
            }
        }
        keep_better(&mut best, current);
        restart += 1;
    }
    Ok((best, evaluations))
}
