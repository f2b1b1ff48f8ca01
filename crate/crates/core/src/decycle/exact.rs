use std::collections::VecDeque;

use super::DecyclingSet;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// Smallest decycling set by iterative deepening.
///
/// For `k = 0, 1, 2, ...` searches for a set of size `k`: find a short cycle
/// in what remains, branch on deleting each of its vertices. Any decycling
/// set must hit that cycle, so the search is exhaustive. Refuses graphs
/// with more than `limit` vertices (default [`DEFAULT_ORACLE_LIMIT`]).
pub fn exact_decycling_number(g: &Multigraph, limit: Option<usize>) -> Result<(usize, DecyclingSet)> {
    let limit = limit.unwrap_or(DEFAULT_ORACLE_LIMIT);
    if g.vertex_count() > limit {
        return Err(Error::OracleLimit { vertices: g.vertex_count(), limit });
    }
    let mut removed = vec![false; g.capacity()];
    let mut chosen = Vec::new();
    for k in 0..=g.vertex_count() {
        if search(g, k, &mut removed, &mut chosen) {
            let set = DecyclingSet::certify(g, chosen.iter().copied())?;
            if !set.is_certified() {
                return Err(Error::Internal("exact oracle returned a non-decycling set".into()));
            }
            return Ok((k, set));
        }
    }
    Err(Error::Internal("no decycling set found, not even V(G)".into()))
}

fn search(g: &Multigraph, budget: usize, removed: &mut [bool], chosen: &mut Vec<VertexId>) -> bool {
    let Some(cycle) = short_cycle(g, removed) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for v in cycle {
        removed[v] = true;
        chosen.push(v);
        if search(g, budget - 1, removed, chosen) {
            return true;
        }
        chosen.pop();
        removed[v] = false;
    }
    false
}

/// Vertex set of a short cycle among the surviving vertices, or `None` if
/// the survivors are acyclic. A parallel pair wins outright; otherwise the
/// shortest closing edge found by BFS over all roots.
fn short_cycle(g: &Multigraph, removed: &[bool]) -> Option<Vec<VertexId>> {
    let alive = |v: VertexId| !removed[v];
    for v in g.vertices().filter(|&v| alive(v)) {
        let mut last_seen = std::collections::BTreeMap::new();
        for &e in g.incident(v) {
            let w = g.edge(e)?.other(v);
            if alive(w) && last_seen.insert(w, e).is_some() {
                return Some(vec![v, w]);
            }
        }
    }

    let mut best: Option<Vec<VertexId>> = None;
    let n = g.capacity();
    let mut parent: Vec<Option<(VertexId, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    for root in g.vertices().filter(|&v| alive(v)) {
        parent.iter_mut().for_each(|p| *p = None);
        depth.iter_mut().for_each(|d| *d = usize::MAX);
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut closing: Option<(VertexId, VertexId)> = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for &e in g.incident(x) {
                let y = g.edge(e)?.other(x);
                if !alive(y) || parent[x].is_some_and(|(_, pe)| pe == e) {
                    continue;
                }
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                } else {
                    closing = Some((x, y));
                    break 'bfs;
                }
            }
        }
        if let Some((x, y)) = closing {
            let mut verts = Vec::new();
            for mut at in [x, y] {
                verts.push(at);
                while let Some((p, _)) = parent[at] {
                    verts.push(p);
                    at = p;
                }
            }
            verts.sort_unstable();
            verts.dedup();
            if best.as_ref().is_none_or(|b| verts.len() < b.len()) {
                best = Some(verts);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forest_needs_nothing() {
        let g = Multigraph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let (k, s) = exact_decycling_number(&g, None).unwrap();
        assert_eq!(k, 0);
        assert!(s.is_empty());
    }

    #[test]
    fn figure1_needs_two() {
        let g = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]).unwrap();
        let (k, s) = exact_decycling_number(&g, None).unwrap();
        assert_eq!(k, 2);
        assert!(s.is_certified());
    }

    #[test]
    fn figure2_needs_one() {
        let g = Multigraph::from_edges(5, [(0, 1), (0, 2), (0, 4), (1, 4), (2, 4), (0, 3), (3, 4)]).unwrap();
        let (k, s) = exact_decycling_number(&g, None).unwrap();
        assert_eq!(k, 1);
        assert!(s.vertices() == [0] || s.vertices() == [4]);
    }

    #[test]
    fn limit_enforced() {
        let g = Multigraph::new(25);
        assert!(matches!(exact_decycling_number(&g, None), Err(Error::OracleLimit { vertices: 25, limit: 20 })));
        assert!(exact_decycling_number(&g, Some(30)).is_ok());
    }

    #[test]
    fn complete_graph_k5() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((a, b));
            }
        }
        let g = Multigraph::from_edges(5, edges).unwrap();
        assert_eq!(exact_decycling_number(&g, None).unwrap().0, 3);
    }
}
