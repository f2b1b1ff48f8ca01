//! Cycle decompositions: edge-disjoint partitions of an even graph into
//! simple cycles, plus the machinery to build, enumerate and perturb them.

mod enumerate;
mod greedy;
mod moves;

pub use enumerate::{count_decompositions, enumerate_decompositions, for_each_decomposition};
pub use greedy::decompose_greedy;
pub use moves::neighbors;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// A simple closed walk. `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`. Length 2 is a digon on two parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    /// No checks; run [`validate_decomposition`] on anything built this way.
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        Cycle { vertices, edges }
    }

    /// Recovers the traversal of a simple cycle from its edge set.
    /// Returns `None` if the edges do not form one simple cycle in `g`.
    pub fn from_edge_set(g: &Multigraph, edge_set: &[EdgeId]) -> Option<Cycle> {
        if edge_set.len() < 2 {
            return None;
        }
        let mut by_vertex: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
        for &e in edge_set {
            let edge = g.edge(e)?;
            by_vertex.entry(edge.u).or_default().push(e);
            by_vertex.entry(edge.v).or_default().push(e);
        }
        if by_vertex.values().any(|es| es.len() != 2) || by_vertex.len() != edge_set.len() {
            return None;
        }
        let start = *by_vertex.keys().next()?;
        let mut vertices = vec![start];
        let mut edges = Vec::with_capacity(edge_set.len());
        let mut at = start;
        let mut via = by_vertex[&start][0];
        loop {
            edges.push(via);
            at = g.edge(via)?.other(at);
            if at == start {
                break;
            }
            vertices.push(at);
            let pair = &by_vertex[&at];
            via = if pair[0] == via { pair[1] } else { pair[0] };
        }
        (edges.len() == edge_set.len()).then_some(Cycle { vertices, edges })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Sorted edge ids; identifies the cycle up to rotation and reflection.
    pub fn key(&self) -> Vec<EdgeId> {
        let mut k = self.edges.clone();
        k.sort_unstable();
        k
    }
}

/// Rotation, reflection and cycle-order invariant identity of a decomposition.
pub type CanonicalKey = Vec<Vec<EdgeId>>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn new(cycles: Vec<Cycle>) -> Self {
        CycleDecomposition { cycles }
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn total_length(&self) -> usize {
        self.cycles.iter().map(Cycle::len).sum()
    }

    pub fn canonical(&self) -> CanonicalKey {
        let mut k: Vec<_> = self.cycles.iter().map(Cycle::key).collect();
        k.sort_unstable();
        k
    }

    /// Same cycles, sorted by canonical key.
    pub fn normalized(&self) -> CycleDecomposition {
        let mut cycles = self.cycles.clone();
        cycles.sort_by_cached_key(Cycle::key);
        CycleDecomposition { cycles }
    }

    pub fn same_as(&self, other: &CycleDecomposition) -> bool {
        self.canonical() == other.canonical()
    }

    /// Cycles lying entirely inside the vertex set `keep`.
    pub fn restrict_to(&self, keep: &BTreeSet<VertexId>) -> CycleDecomposition {
        CycleDecomposition {
            cycles: self.cycles.iter().filter(|c| c.vertices.iter().all(|v| keep.contains(v))).cloned().collect(),
        }
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            cycles: self.cycles.iter().map(|c| c.vertices.clone()).collect(),
            edge_ids: self.cycles.iter().map(|c| c.edges.clone()).collect(),
        }
    }
}

/// Wire form: `{"cycles":[[v0,v1,...],...],"edge_ids":[[e,...],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub cycles: Vec<Vec<VertexId>>,
    pub edge_ids: Vec<Vec<EdgeId>>,
}

impl DecompositionJson {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Shape check only; validity against a graph is a separate step.
    pub fn into_decomposition(self) -> Result<CycleDecomposition> {
        if self.cycles.len() != self.edge_ids.len() {
            return Err(Error::InvalidDecomposition(vec![Violation::ShapeMismatch {
                cycles: self.cycles.len(),
                edge_lists: self.edge_ids.len(),
            }]));
        }
        Ok(CycleDecomposition::new(self.cycles.into_iter().zip(self.edge_ids).map(|(v, e)| Cycle::new(v, e)).collect()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ShapeMismatch { cycles: usize, edge_lists: usize },
    TooShort { cycle: usize },
    LengthMismatch { cycle: usize },
    UnknownEdge { cycle: usize, edge: EdgeId },
    WrongEndpoints { cycle: usize, position: usize, edge: EdgeId },
    RepeatedVertex { cycle: usize, vertex: VertexId },
    EdgeReused { edge: EdgeId },
    Uncovered { edge: EdgeId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ShapeMismatch { cycles, edge_lists } => {
                write!(f, "{cycles} vertex lists but {edge_lists} edge lists")
            }
            Violation::TooShort { cycle } => write!(f, "cycle {cycle} has fewer than 2 edges"),
            Violation::LengthMismatch { cycle } => {
                write!(f, "cycle {cycle} has different vertex and edge counts")
            }
            Violation::UnknownEdge { cycle, edge } => {
                write!(f, "cycle {cycle} uses unknown edge {edge}")
            }
            Violation::WrongEndpoints { cycle, position, edge } => {
                write!(f, "cycle {cycle}: edge {edge} at position {position} does not join its neighbours")
            }
            Violation::RepeatedVertex { cycle, vertex } => {
                write!(f, "cycle {cycle} visits vertex {vertex} twice")
            }
            Violation::EdgeReused { edge } => write!(f, "edge {edge} used by more than one cycle"),
            Violation::Uncovered { edge } => write!(f, "edge {edge} is not covered"),
        }
    }
}

/// Every way `d` fails to be a simple-cycle partition of `E(g)`. Empty means valid.
pub fn decomposition_violations(g: &Multigraph, d: &CycleDecomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut used = vec![0usize; g.edge_capacity()];

    for (ci, c) in d.cycles.iter().enumerate() {
        if c.edges.len() < 2 {
            out.push(Violation::TooShort { cycle: ci });
        }
        if c.vertices.len() != c.edges.len() {
            out.push(Violation::LengthMismatch { cycle: ci });
            continue;
        }
        let mut seen = BTreeSet::new();
        for &v in &c.vertices {
            if !seen.insert(v) {
                out.push(Violation::RepeatedVertex { cycle: ci, vertex: v });
            }
        }
        let len = c.edges.len();
        for (pos, &e) in c.edges.iter().enumerate() {
            let Some(edge) = g.edge(e) else {
                out.push(Violation::UnknownEdge { cycle: ci, edge: e });
                continue;
            };
            used[e] += 1;
            let (a, b) = (c.vertices[pos], c.vertices[(pos + 1) % len]);
            if !((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)) {
                out.push(Violation::WrongEndpoints { cycle: ci, position: pos, edge: e });
            }
        }
    }
    for e in g.edges() {
        match used[e.id] {
            0 => out.push(Violation::Uncovered { edge: e.id }),
            1 => {}
            _ => out.push(Violation::EdgeReused { edge: e.id }),
        }
    }
    out
}

pub fn validate_decomposition(g: &Multigraph, d: &CycleDecomposition) -> bool {
    decomposition_violations(g, d).is_empty()
}

pub(crate) fn ensure_valid(g: &Multigraph, d: &CycleDecomposition) -> Result<()> {
    let v = decomposition_violations(g, d);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition(v))
    }
}
