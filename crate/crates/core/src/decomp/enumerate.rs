//! Exhaustive enumeration of cycle decompositions.
//!
//! A simple-cycle decomposition is the same thing as a transition system
//! (a pairing of edge-ends at every vertex) whose closed walks never revisit
//! a vertex. Rather than materialising all pairings up front, the search
//! takes the lowest-id uncovered edge and fixes the pairings along the walk
//! that leaves it, one vertex at a time. A walk that would revisit a vertex
//! other than its start is cut immediately. When the walk closes, its edges
//! are removed and the search recurses on what is left.
//!
//! The cycle containing the lowest uncovered edge is determined by the
//! decomposition, so each decomposition is produced exactly once.

use std::ops::ControlFlow;

use super::{Cycle, CycleDecomposition};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Calls `visit` once per decomposition of `g`. Return `ControlFlow::Break`
/// from the visitor to stop early.
pub fn for_each_decomposition<F>(g: &Multigraph, mut visit: F) -> Result<()>
where
    F: FnMut(CycleDecomposition) -> ControlFlow<()>,
{
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    let edges: Vec<EdgeId> = g.edges().map(|e| e.id).collect();
    let _ = decompositions_of_edges(g, &edges, None, &mut |cycles| visit(CycleDecomposition::new(cycles.to_vec())));
    Ok(())
}

/// All decompositions, stopping after `limit` if given.
pub fn enumerate_decompositions(g: &Multigraph, limit: Option<usize>) -> Result<Vec<CycleDecomposition>> {
    let mut out = Vec::new();
    for_each_decomposition(g, |d| {
        out.push(d);
        match limit {
            Some(l) if out.len() >= l => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    })?;
    Ok(out)
}

/// Number of decompositions, counting at most `limit` if given.
pub fn count_decompositions(g: &Multigraph, limit: Option<usize>) -> Result<usize> {
    let mut n = 0usize;
    for_each_decomposition(g, |_| {
        n += 1;
        match limit {
            Some(l) if n >= l => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    })?;
    Ok(n)
}

/// Decompositions of the sub-multigraph formed by `edges` (which must induce
/// an even subgraph), optionally allowing at most `max_cycles` cycles.
pub(crate) fn decompositions_of_edges(
    g: &Multigraph,
    edges: &[EdgeId],
    max_cycles: Option<usize>,
    visit: &mut dyn FnMut(&[Cycle]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut alive = vec![false; g.edge_capacity()];
    for &e in &sorted {
        alive[e] = true;
    }
    let mut search = Search {
        g,
        edges: sorted,
        alive,
        on_walk: vec![false; g.capacity()],
        walk_vertices: Vec::new(),
        walk_edges: Vec::new(),
        cycles: Vec::new(),
        max_cycles,
        visit,
    };
    search.next_cycle()
}

struct Search<'a> {
    g: &'a Multigraph,
    edges: Vec<EdgeId>,
    alive: Vec<bool>,
    on_walk: Vec<bool>,
    walk_vertices: Vec<VertexId>,
    walk_edges: Vec<EdgeId>,
    cycles: Vec<Cycle>,
    max_cycles: Option<usize>,
    visit: &'a mut dyn FnMut(&[Cycle]) -> ControlFlow<()>,
}

impl Search<'_> {
    fn next_cycle(&mut self) -> ControlFlow<()> {
        let Some(&first) = self.edges.iter().find(|&&e| self.alive[e]) else {
            return (self.visit)(&self.cycles);
        };
        if self.max_cycles.is_some_and(|m| self.cycles.len() >= m) {
            return ControlFlow::Continue(());
        }
        let edge = self.g.edge(first).expect("subset edges exist");
        let (start, second) = (edge.u, edge.v);

        self.alive[first] = false;
        self.on_walk[start] = true;
        self.on_walk[second] = true;
        self.walk_vertices.extend([start, second]);
        self.walk_edges.push(first);

        let flow = self.extend(start, second);

        self.walk_edges.pop();
        self.walk_vertices.clear();
        self.on_walk[start] = false;
        self.on_walk[second] = false;
        self.alive[first] = true;
        flow
    }

    fn extend(&mut self, start: VertexId, at: VertexId) -> ControlFlow<()> {
        let g = self.g;
        for &e in g.incident(at) {
            if !self.alive[e] {
                continue;
            }
            let next = g.edge(e).expect("incident edges exist").other(at);
            if next == start {
                self.alive[e] = false;
                self.walk_edges.push(e);
                let cycle = Cycle::new(self.walk_vertices.clone(), self.walk_edges.clone());
                let saved_vertices = std::mem::take(&mut self.walk_vertices);
                let saved_edges = std::mem::take(&mut self.walk_edges);
                for &v in &saved_vertices {
                    self.on_walk[v] = false;
                }
                self.cycles.push(cycle);

                let flow = self.next_cycle();

                self.cycles.pop();
                for &v in &saved_vertices {
                    self.on_walk[v] = true;
                }
                self.walk_vertices = saved_vertices;
                self.walk_edges = saved_edges;
                self.walk_edges.pop();
                self.alive[e] = true;
                flow?;
            } else if !self.on_walk[next] {
                self.alive[e] = false;
                self.on_walk[next] = true;
                self.walk_vertices.push(next);
                self.walk_edges.push(e);

                let flow = self.extend(start, next);

                self.walk_edges.pop();
                self.walk_vertices.pop();
                self.on_walk[next] = false;
                self.alive[e] = true;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}
