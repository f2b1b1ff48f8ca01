//! Brute-force oracles used by the integration tests. None of these call
//! into the library's own search code; they only use the graph container.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use decycling::ci::CIGraph;
use decycling::graph::{EdgeId, Multigraph, VertexId};

/// Every decomposition as a set of sorted edge-id lists, found by trying
/// every transition system (every perfect pairing of edge-ends at every
/// vertex) and keeping those whose closed walks are vertex-simple.
pub fn decompositions_by_transition_systems(g: &Multigraph) -> BTreeSet<Vec<Vec<EdgeId>>> {
    let verts: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let pairings: Vec<Vec<Vec<(EdgeId, EdgeId)>>> = verts.iter().map(|&v| perfect_pairings(g.incident(v))).collect();

    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; verts.len()];
    loop {
        // partner[(v, e)] = the edge paired with e at v
        let mut partner: BTreeMap<(VertexId, EdgeId), EdgeId> = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            for &(a, b) in &pairings[i][choice[i]] {
                partner.insert((v, a), b);
                partner.insert((v, b), a);
            }
        }
        if let Some(d) = trace(g, &partner) {
            out.insert(d);
        }

        let mut i = 0;
        loop {
            if i == verts.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < pairings[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn trace(g: &Multigraph, partner: &BTreeMap<(VertexId, EdgeId), EdgeId>) -> Option<Vec<Vec<EdgeId>>> {
    let mut used = BTreeSet::new();
    let mut cycles = Vec::new();
    for start in g.edges() {
        if used.contains(&start.id) {
            continue;
        }
        let mut edges = vec![start.id];
        let mut visited = BTreeSet::from([start.u]);
        used.insert(start.id);
        let (mut at, mut via) = (start.v, start.id);
        loop {
            if at == start.u {
                break;
            }
            if !visited.insert(at) {
                return None;
            }
            let next = partner[&(at, via)];
            used.insert(next);
            edges.push(next);
            at = g.edge(next).unwrap().other(at);
            via = next;
        }
        // the walk must close back into the starting edge at start.u
        if partner[&(start.u, via)] != start.id {
            return None;
        }
        edges.sort_unstable();
        cycles.push(edges);
    }
    cycles.sort_unstable();
    Some(cycles)
}

fn perfect_pairings(items: &[EdgeId]) -> Vec<Vec<(EdgeId, EdgeId)>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let first = items[0];
    let mut out = Vec::new();
    for k in 1..items.len() {
        let rest: Vec<EdgeId> = items[1..].iter().enumerate().filter(|&(j, _)| j + 1 != k).map(|(_, &e)| e).collect();
        for mut p in perfect_pairings(&rest) {
            p.push((first, items[k]));
            out.push(p);
        }
    }
    out
}

/// Distinct node pairs of a CI graph.
pub fn simple_pairs(ci: &CIGraph) -> Vec<(usize, usize)> {
    let set: BTreeSet<(usize, usize)> = ci.links().iter().map(|l| (l.a, l.b)).collect();
    set.into_iter().collect()
}

/// Maximum matching size by trying every subset of node pairs.
pub fn brute_matching_size(nodes: usize, pairs: &[(usize, usize)]) -> usize {
    let m = pairs.len();
    assert!(m <= 24, "brute matching over {m} pairs");
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let mut used = vec![false; nodes];
        let mut ok = true;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[a] || used[b] {
                    ok = false;
                    break;
                }
                used[a] = true;
                used[b] = true;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// Smallest `|F| + |nodes untouched by F|` over acyclic link sets `F`.
/// Parallel links never help (two of them form a cycle) so only distinct
/// pairs are considered. Depth-first with a size cutoff.
pub fn brute_forest_cover(nodes: usize, pairs: &[(usize, usize)]) -> usize {
    fn find(parent: &[usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        r
    }
    fn go(
        i: usize,
        pairs: &[(usize, usize)],
        parent: &mut Vec<usize>,
        degree: &mut Vec<usize>,
        chosen: usize,
        best: &mut usize,
    ) {
        let uncovered = degree.iter().filter(|&&d| d == 0).count();
        *best = (*best).min(chosen + uncovered);
        if i == pairs.len() || chosen + 1 >= *best {
            return;
        }
        let (a, b) = pairs[i];
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            let saved = parent.clone();
            parent[ra] = rb;
            degree[a] += 1;
            degree[b] += 1;
            go(i + 1, pairs, parent, degree, chosen + 1, best);
            degree[a] -= 1;
            degree[b] -= 1;
            *parent = saved;
        }
        go(i + 1, pairs, parent, degree, chosen, best);
    }
    let mut best = nodes;
    go(0, pairs, &mut (0..nodes).collect(), &mut vec![0; nodes], 0, &mut best);
    best
}

/// Smallest decycling set size by trying every subset in order of size.
pub fn brute_decycling_number(g: &Multigraph) -> usize {
    let verts: Vec<VertexId> = g.vertices().collect();
    for k in 0..=verts.len() {
        if any_subset(&verts, k, &mut Vec::new(), 0, &mut |s| g.delete_vertices(s).unwrap().is_acyclic()) {
            return k;
        }
    }
    unreachable!("deleting every vertex is decycling")
}

fn any_subset(
    items: &[VertexId],
    k: usize,
    cur: &mut Vec<VertexId>,
    from: usize,
    test: &mut dyn FnMut(&[VertexId]) -> bool,
) -> bool {
    if cur.len() == k {
        return test(cur);
    }
    for i in from..items.len() {
        if items.len() - i < k - cur.len() {
            break;
        }
        cur.push(items[i]);
        if any_subset(items, k, cur, i + 1, test) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Cycle rank of a CI graph by brute force: the cycle space has
/// `2^rank` elements, namely the link subsets in which every node has even
/// degree.
pub fn brute_cycle_rank(ci: &CIGraph) -> usize {
    let links = ci.links();
    assert!(links.len() <= 22, "brute cycle rank over {} links", links.len());
    let mut even_subsets = 0u64;
    for mask in 0u32..(1 << links.len()) {
        let mut parity = vec![false; ci.node_count()];
        for (i, l) in links.iter().enumerate() {
            if mask >> i & 1 == 1 {
                parity[l.a] ^= true;
                parity[l.b] ^= true;
            }
        }
        if parity.iter().all(|&p| !p) {
            even_subsets += 1;
        }
    }
    even_subsets.trailing_zeros() as usize
}
