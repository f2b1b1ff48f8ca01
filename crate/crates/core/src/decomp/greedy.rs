use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cycle, CycleDecomposition};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

/// Peels simple cycles off `g` one at a time.
///
/// Each round walks from the lowest-id vertex that still has residual edges,
/// leaving every vertex by a residual edge other than the one it arrived on
/// (chosen by the seeded RNG), until the walk hits a vertex already on the
/// walk. The closed part is a simple cycle; its edges are removed and the
/// round repeats. In an even graph every visited vertex has an exit, so the
/// walk never gets stuck.
pub fn decompose_greedy(g: &Multigraph, seed: u64) -> Result<CycleDecomposition> {
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residual: Vec<Vec<EdgeId>> = (0..g.capacity()).map(|v| g.incident(v).to_vec()).collect();
    let mut position: Vec<Option<usize>> = vec![None; g.capacity()];
    let mut cycles = Vec::new();

    while let Some(start) = g.vertices().find(|&v| !residual[v].is_empty()) {
        let mut walk = vec![start];
        let mut walk_edges: Vec<EdgeId> = Vec::new();
        position[start] = Some(0);
        let mut at = start;
        let mut arrived: Option<EdgeId> = None;

        let closed_at = loop {
            let exits: Vec<EdgeId> = residual[at].iter().copied().filter(|&e| Some(e) != arrived).collect();
            if exits.is_empty() {
                return Err(Error::Internal(format!("greedy walk stuck at vertex {at}")));
            }
            let e = exits[rng.random_range(0..exits.len())];
            let next = g.edge(e).expect("residual edges exist").other(at);
            walk_edges.push(e);
            if let Some(p) = position[next] {
                break p;
            }
            position[next] = Some(walk.len());
            walk.push(next);
            at = next;
            arrived = Some(e);
        };

        for &v in &walk {
            position[v] = None;
        }
        let vertices = walk.split_off(closed_at);
        let edges = walk_edges.split_off(closed_at);
        for &e in &edges {
            let edge = g.edge(e).expect("cycle edges exist");
            residual[edge.u].retain(|&x| x != e);
            residual[edge.v].retain(|&x| x != e);
        }
        cycles.push(Cycle::new(vertices, edges));
    }
    Ok(CycleDecomposition::new(cycles))
}
