//! Cycle intersection graphs.
//!
//! One node per decomposition cycle. For every pair of cycles and every
//! vertex of `G` lying on both, one link labelled with that vertex. Two
//! cycles meeting in `k` vertices are therefore joined by `k` parallel links,
//! and a vertex on `k` cycles contributes a labelled clique on those nodes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::decomp::{ensure_valid, CycleDecomposition};
use crate::error::Result;
use crate::graph::{Multigraph, VertexId};

/// A link between cycles `a < b`, labelled by a shared vertex of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Link {
    pub a: usize,
    pub b: usize,
    pub label: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIGraph {
    nodes: usize,
    links: Vec<Link>,
    component_count: usize,
}

impl CIGraph {
    /// Builds from raw parts. Endpoints are normalised so `a < b` and links are
    /// sorted by `(a, b, label)`.
    ///
    /// # Panics
    /// On a link that references a missing node or joins a node to itself.
    pub fn from_links(nodes: usize, links: impl IntoIterator<Item = Link>) -> Self {
        let mut links: Vec<Link> = links
            .into_iter()
            .map(|l| {
                assert!(l.a != l.b, "CI link joins node {} to itself", l.a);
                assert!(l.a < nodes && l.b < nodes, "CI link references a missing node");
                Link { a: l.a.min(l.b), b: l.a.max(l.b), label: l.label }
            })
            .collect();
        links.sort_unstable();
        let mut uf = UnionFind::<usize>::new(nodes);
        let mut merges = 0;
        for l in &links {
            if uf.union(l.a, l.b) {
                merges += 1;
            }
        }
        CIGraph { nodes, links, component_count: nodes - merges }
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Links grouped by node pair; each bundle lists link indices in order.
    pub fn bundles(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut out: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, l) in self.links.iter().enumerate() {
            out.entry((l.a, l.b)).or_default().push(i);
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.links.windows(2).all(|w| (w[0].a, w[0].b) != (w[1].a, w[1].b))
    }

    /// `|links| - |nodes| + components`, the number of independent cycles.
    pub fn cycle_rank(&self) -> usize {
        self.links.len() + self.component_count - self.nodes
    }

    pub fn is_forest(&self) -> bool {
        self.cycle_rank() == 0
    }

    /// Nodes with no incident link.
    pub fn isolated_nodes(&self) -> Vec<usize> {
        let mut touched = vec![false; self.nodes];
        for l in &self.links {
            touched[l.a] = true;
            touched[l.b] = true;
        }
        (0..self.nodes).filter(|&n| !touched[n]).collect()
    }

    /// Maximum-cardinality matching of the underlying simple graph, as
    /// indices into [`links`](Self::links). Each matched pair is represented
    /// by the first link of its bundle. Result is sorted.
    pub fn max_matching(&self) -> Vec<usize> {
        let bundles = self.bundles();
        let mut simple = UnGraph::<(), usize>::with_capacity(self.nodes, bundles.len());
        let ids: Vec<_> = (0..self.nodes).map(|_| simple.add_node(())).collect();
        for (&(a, b), members) in &bundles {
            simple.add_edge(ids[a], ids[b], members[0]);
        }
        let matching = maximum_matching(&simple);
        let mut out: Vec<usize> = matching
            .edges()
            .map(|(x, y)| {
                let (a, b) = (x.index().min(y.index()), x.index().max(y.index()));
                bundles[&(a, b)][0]
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Minimum-size forest cover: a maximum matching plus every node it
    /// leaves unsaturated as an isolated node. Size is `|nodes| - |M|`.
    pub fn msf(&self) -> ForestCover {
        let chosen = self.max_matching();
        let mut saturated = vec![false; self.nodes];
        for &i in &chosen {
            saturated[self.links[i].a] = true;
            saturated[self.links[i].b] = true;
        }
        ForestCover { chosen_links: chosen, isolated_nodes: (0..self.nodes).filter(|&n| !saturated[n]).collect() }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph CI {\n");
        for n in 0..self.nodes {
            let _ = writeln!(out, "  c{n};");
        }
        for l in &self.links {
            let _ = writeln!(out, "  c{} -- c{} [label=\"v{}\"];", l.a, l.b, l.label);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> CiJson {
        CiJson { nodes: self.nodes, links: self.links.iter().map(|l| [l.a, l.b, l.label]).collect() }
    }
}

/// Wire form: `{"nodes":k,"links":[[i,j,label],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiJson {
    pub nodes: usize,
    pub links: Vec<[usize; 3]>,
}

/// Acyclic link set plus the nodes it leaves uncovered. Size counts both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestCover {
    pub chosen_links: Vec<usize>,
    pub isolated_nodes: Vec<usize>,
}

impl ForestCover {
    pub fn size(&self) -> usize {
        self.chosen_links.len() + self.isolated_nodes.len()
    }

    /// Checks the cover against `ci`: chosen links acyclic, isolated nodes
    /// untouched by them, every node covered.
    pub fn is_valid_for(&self, ci: &CIGraph) -> bool {
        let mut uf = UnionFind::<usize>::new(ci.node_count());
        let mut covered = vec![false; ci.node_count()];
        for &i in &self.chosen_links {
            let Some(l) = ci.links().get(i) else { return false };
            if !uf.union(l.a, l.b) {
                return false;
            }
            covered[l.a] = true;
            covered[l.b] = true;
        }
        for &n in &self.isolated_nodes {
            if n >= ci.node_count() || covered[n] {
                return false;
            }
            covered[n] = true;
        }
        covered.iter().all(|&c| c)
    }
}

pub fn build_ci(g: &Multigraph, d: &CycleDecomposition) -> Result<CIGraph> {
    ensure_valid(g, d)?;
    Ok(build_ci_unchecked(g, d))
}

pub(crate) fn build_ci_unchecked(g: &Multigraph, d: &CycleDecomposition) -> CIGraph {
    let mut on: Vec<Vec<usize>> = vec![Vec::new(); g.capacity()];
    for (i, c) in d.cycles().iter().enumerate() {
        for &v in c.vertices() {
            on[v].push(i);
        }
    }
    let mut links = Vec::new();
    for (v, cycles) in on.iter().enumerate() {
        for (k, &a) in cycles.iter().enumerate() {
            for &b in &cycles[k + 1..] {
                links.push(Link { a, b, label: v });
            }
        }
    }
    CIGraph::from_links(d.len(), links)
}
