//! Decycling sets built from cycle intersection graphs, plus an exact oracle.
//!
//! Every set handed out by this module has been run through
//! [`verify_decycling`]; a construction that fails certification is reported
//! as [`Error::Internal`], never patched up.

mod exact;
mod report;

pub use exact::{exact_decycling_number, DEFAULT_ORACLE_LIMIT};
pub use report::{analyze, analyze_components, AnalyzeOptions, BoundReport};

use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::ci::{CIGraph, Link};
use crate::decomp::CycleDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecyclingSet {
    vertices: Vec<VertexId>,
    certified: bool,
}

impl DecyclingSet {
    /// Sorts and dedups `vertices`, then records whether removing them
    /// leaves `g` acyclic.
    pub fn certify(g: &Multigraph, vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let vertices: Vec<VertexId> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let certified = verify_decycling(g, &vertices)?;
        Ok(DecyclingSet { vertices, certified })
    }

    fn certified_or_internal(g: &Multigraph, vertices: impl IntoIterator<Item = VertexId>, what: &str) -> Result<Self> {
        let set = Self::certify(g, vertices)?;
        if set.certified {
            Ok(set)
        } else {
            Err(Error::Internal(format!("{what} produced {:?}, which is not decycling", set.vertices)))
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }
}

pub fn verify_decycling(g: &Multigraph, s: &[VertexId]) -> Result<bool> {
    Ok(g.delete_vertices(s)?.is_acyclic())
}

/// `|E(CI)|` plus one per link-less CI node.
///
/// For a connected even graph with two or more cycles there are no link-less
/// nodes and this is the plain link count. A lone cycle has no links but
/// still needs one vertex removed, so it counts 1. The witness is every link
/// label together with one vertex of each link-less cycle, deduplicated, so
/// it can be smaller than the returned value.
pub fn bound_edge_count(g: &Multigraph, d: &CycleDecomposition, ci: &CIGraph) -> Result<(usize, DecyclingSet)> {
    let isolated = ci.isolated_nodes();
    let picks = ci.links().iter().map(|l| l.label).chain(isolated.iter().map(|&n| private_or_first_vertex(d, n)));
    let set = DecyclingSet::certified_or_internal(g, picks, "intersection-label bound")?;
    Ok((ci.link_count() + isolated.len(), set))
}

/// Exact decycling set for a forest CI: the label of every matched link,
/// plus one vertex from every cycle the matching misses.
pub fn decycle_tree_ci(g: &Multigraph, d: &CycleDecomposition, ci: &CIGraph) -> Result<DecyclingSet> {
    if !ci.is_forest() {
        return Err(Error::CyclicCi);
    }
    let all: Vec<usize> = (0..ci.node_count()).collect();
    let picks = forest_picks(d, ci, &all);
    DecyclingSet::certified_or_internal(g, picks, "forest cover")
}

/// Decycling set for any CI: remove a link set `F` whose deletion leaves CI
/// a forest (so no parallel bundle survives with more than one link), take
/// the labels of `F`, then cover the cycles those labels miss with the
/// residual forest exactly as in [`decycle_tree_ci`].
pub fn decycle_general(g: &Multigraph, d: &CycleDecomposition, ci: &CIGraph) -> Result<DecyclingSet> {
    let removed = feedback_links(ci);
    let mut picks: BTreeSet<VertexId> = removed.iter().map(|&i| ci.links()[i].label).collect();

    let unbroken: Vec<usize> =
        (0..ci.node_count()).filter(|&n| d.cycles()[n].vertices().iter().all(|v| !picks.contains(v))).collect();
    picks.extend(forest_picks(d, ci, &unbroken));

    DecyclingSet::certified_or_internal(g, picks, "feedback-link procedure")
}

/// Complement of a spanning forest of the CI multigraph, as link indices.
///
/// Removing these links leaves a forest, which in particular keeps at most
/// one link per parallel bundle. The forest is grown label by label, labels
/// with fewer links first, accepting a label only if all of its links fit;
/// a label whose links all stay in the forest never enters the decycling
/// set. Remaining gaps are then filled in link order.
pub fn feedback_links(ci: &CIGraph) -> Vec<usize> {
    let links = ci.links();
    let mut by_label: std::collections::BTreeMap<VertexId, Vec<usize>> = Default::default();
    for (i, l) in links.iter().enumerate() {
        by_label.entry(l.label).or_default().push(i);
    }
    let mut order: Vec<(VertexId, Vec<usize>)> = by_label.into_iter().collect();
    order.sort_by_key(|(label, members)| (members.len(), *label));

    let mut uf = UnionFind::<usize>::new(ci.node_count());
    let mut kept = vec![false; links.len()];
    for (_, members) in &order {
        let mut trial = uf.clone();
        if members.iter().all(|&i| trial.union(links[i].a, links[i].b)) {
            uf = trial;
            for &i in members {
                kept[i] = true;
            }
        }
    }
    for (i, l) in links.iter().enumerate() {
        if !kept[i] && uf.union(l.a, l.b) {
            kept[i] = true;
        }
    }
    (0..links.len()).filter(|&i| !kept[i]).collect()
}

/// Vertices chosen by a minimum forest cover of the CI restricted to `nodes`.
/// The restriction must be a forest for the result to be a minimum cover.
fn forest_picks(d: &CycleDecomposition, ci: &CIGraph, nodes: &[usize]) -> Vec<VertexId> {
    let mut local = vec![usize::MAX; ci.node_count()];
    for (i, &n) in nodes.iter().enumerate() {
        local[n] = i;
    }
    let sub_links: Vec<Link> = ci
        .links()
        .iter()
        .filter(|l| local[l.a] != usize::MAX && local[l.b] != usize::MAX)
        .map(|l| Link { a: local[l.a], b: local[l.b], label: l.label })
        .collect();
    let sub = CIGraph::from_links(nodes.len(), sub_links);
    let cover = sub.msf();
    cover
        .chosen_links
        .iter()
        .map(|&i| sub.links()[i].label)
        .chain(cover.isolated_nodes.iter().map(|&n| private_or_first_vertex(d, nodes[n])))
        .collect()
}

/// Smallest vertex of cycle `c` lying on no other cycle, else its smallest vertex.
fn private_or_first_vertex(d: &CycleDecomposition, c: usize) -> VertexId {
    let cycle = &d.cycles()[c];
    let shared = |v: VertexId| d.cycles().iter().enumerate().any(|(j, o)| j != c && o.contains(v));
    let mut vs: Vec<VertexId> = cycle.vertices().to_vec();
    vs.sort_unstable();
    vs.iter().copied().find(|&v| !shared(v)).unwrap_or(vs[0])
}
