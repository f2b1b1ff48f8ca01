//! Undirected multigraph with stable vertex and edge identities.
//!
//! Vertices live in slots `0..capacity`; deleting a vertex empties its slot
//! and drops its incident edges, but never renumbers anything that survives.
//! Parallel edges are allowed, self-loops are not.

use std::collections::{BTreeSet, VecDeque};

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// The endpoint opposite `x`. `x` must be one of the endpoints.
    pub fn other(&self, x: VertexId) -> VertexId {
        debug_assert!(x == self.u || x == self.v);
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    present: Vec<bool>,
    edges: Vec<Option<(VertexId, VertexId)>>,
    incidence: Vec<Vec<EdgeId>>,
    vertex_count: usize,
    edge_count: usize,
}

impl Multigraph {
    /// A graph on vertices `0..n` with no edges.
    pub fn new(n: usize) -> Self {
        Multigraph {
            present: vec![true; n],
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
            vertex_count: n,
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Multigraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Appends an edge and returns its id. Ids are assigned in insertion order.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        for x in [u, v] {
            if !self.has_vertex(x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        if u == v {
            return Err(Error::SelfLoopEdge(u));
        }
        let id = self.edges.len();
        self.edges.push(Some((u, v)));
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        self.edge_count += 1;
        Ok(id)
    }

    /// Number of vertex slots, including deleted ones.
    pub fn capacity(&self) -> usize {
        self.present.len()
    }

    /// One past the largest edge id ever assigned.
    pub fn edge_capacity(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(e), Some(Some(_)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.present.iter().enumerate().filter_map(|(v, &p)| p.then_some(v))
    }

    /// Surviving edges in id order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().enumerate().filter_map(|(id, e)| e.map(|(u, v)| Edge { id, u, v }))
    }

    pub fn edge(&self, e: EdgeId) -> Option<Edge> {
        self.edges.get(e).copied().flatten().map(|(u, v)| Edge { id: e, u, v })
    }

    /// Incident edge ids of `v`, in id order. Empty for deleted vertices.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        self.incidence.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).len()
    }

    pub fn is_even(&self) -> bool {
        self.vertices().all(|v| self.degree(v).is_multiple_of(2))
    }

    /// Connectivity of the underlying simple graph. The graph with no
    /// vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.capacity()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &e in self.incident(x) {
                    let y = self.edge(e).expect("incidence is consistent").other(x);
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff the graph has no cycle. Two parallel edges form a 2-cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut uf = UnionFind::<usize>::new(self.capacity());
        self.edges().all(|e| uf.union(e.u, e.v))
    }

    /// Removes `s` and every incident edge. Surviving ids are unchanged.
    pub fn delete_vertices(&self, s: &[VertexId]) -> Result<Multigraph> {
        let mut g = self.clone();
        for &v in s {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let doomed: BTreeSet<VertexId> = s.iter().copied().collect();
        for &v in &doomed {
            for e in std::mem::take(&mut g.incidence[v]) {
                if let Some((a, b)) = g.edges[e].take() {
                    let w = if a == v { b } else { a };
                    g.incidence[w].retain(|&x| x != e);
                    g.edge_count -= 1;
                }
            }
            g.present[v] = false;
            g.vertex_count -= 1;
        }
        Ok(g)
    }

    /// The subgraph induced on `keep`, with ids preserved.
    pub fn restrict_to(&self, keep: &[VertexId]) -> Result<Multigraph> {
        for &v in keep {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let keep: BTreeSet<VertexId> = keep.iter().copied().collect();
        let doomed: Vec<VertexId> = self.vertices().filter(|v| !keep.contains(v)).collect();
        self.delete_vertices(&doomed)
    }

    /// Same vertex set, only the listed edges kept. Unknown ids are ignored.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Multigraph {
        let keep: BTreeSet<EdgeId> = keep.iter().copied().collect();
        let mut g = self.clone();
        for (id, slot) in g.edges.iter_mut().enumerate() {
            if slot.is_some() && !keep.contains(&id) {
                *slot = None;
                g.edge_count -= 1;
            }
        }
        for inc in g.incidence.iter_mut() {
            inc.retain(|e| keep.contains(e));
        }
        g
    }

    pub fn degree_sum(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum()
    }
}
