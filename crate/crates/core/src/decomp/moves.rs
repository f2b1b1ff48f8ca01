//! The merge/re-split neighbourhood on decompositions.
//!
//! A move picks a CI-connected group `T` of at least two cycles, takes the
//! union of their edges and replaces `T` by a different decomposition `T'`
//! of that union, subject to `min(|T|, |T'|) <= 2`. With `|T| = 2` this is
//! "merge two intersecting cycles, re-split the union any way you like".
//! The `|T| >= 3` branch, re-splitting into exactly two cycles, is the
//! inverse of that move; without it the relation would not be symmetric
//! (two triangles re-split into three digons, but no pair of those digons
//! merges back).

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use super::enumerate::decompositions_of_edges;
use super::{ensure_valid, CanonicalKey, Cycle, CycleDecomposition};
use crate::error::Result;
use crate::graph::{EdgeId, Multigraph};

pub fn neighbors(g: &Multigraph, d: &CycleDecomposition) -> Result<Vec<CycleDecomposition>> {
    ensure_valid(g, d)?;
    let cycles = d.cycles();
    let adjacency = intersection_adjacency(g, cycles);

    let own_key = d.canonical();
    let mut seen: BTreeSet<CanonicalKey> = BTreeSet::new();
    let mut out = Vec::new();

    for root in 0..cycles.len() {
        let mut groups = Vec::new();
        let mut multiplicity = vec![0usize; g.capacity()];
        for &v in cycles[root].vertices() {
            multiplicity[v] += 1;
        }
        let ext: Vec<usize> = adjacency[root].iter().copied().filter(|&w| w > root).collect();
        grow(&adjacency, cycles, root, &mut vec![root], ext, &mut multiplicity, &mut groups);

        for group in groups {
            let union: Vec<EdgeId> = group.iter().flat_map(|&c| cycles[c].edges().iter().copied()).collect();
            let mut group_key: Vec<Vec<EdgeId>> = group.iter().map(|&c| cycles[c].key()).collect();
            group_key.sort_unstable();
            let cap = if group.len() == 2 { None } else { Some(2) };
            let untouched: Vec<Cycle> =
                (0..cycles.len()).filter(|c| !group.contains(c)).map(|c| cycles[c].clone()).collect();

            let _ = decompositions_of_edges(g, &union, cap, &mut |split| {
                let mut split_key: Vec<Vec<EdgeId>> = split.iter().map(Cycle::key).collect();
                split_key.sort_unstable();
                if split_key == group_key {
                    return ControlFlow::Continue(());
                }
                let mut next = untouched.clone();
                next.extend(split.iter().cloned());
                let candidate = CycleDecomposition::new(next);
                let key = candidate.canonical();
                if key != own_key && seen.insert(key) {
                    out.push(candidate);
                }
                ControlFlow::Continue(())
            });
        }
    }
    Ok(out)
}

fn intersection_adjacency(g: &Multigraph, cycles: &[Cycle]) -> Vec<BTreeSet<usize>> {
    let mut adjacency = vec![BTreeSet::new(); cycles.len()];
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.capacity()];
    for (i, c) in cycles.iter().enumerate() {
        for &v in c.vertices() {
            by_vertex[v].push(i);
        }
    }
    for list in by_vertex {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
    }
    adjacency
}

/// ESU-style enumeration of connected cycle groups whose smallest index is
/// `root`, keeping only groups in which no vertex lies on three or more
/// cycles. Each group is produced once.
fn grow(
    adjacency: &[BTreeSet<usize>],
    cycles: &[Cycle],
    root: usize,
    group: &mut Vec<usize>,
    mut ext: Vec<usize>,
    multiplicity: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    if group.len() >= 2 {
        out.push(group.clone());
    }
    while let Some(w) = ext.pop() {
        let fits = cycles[w].vertices().iter().all(|&v| multiplicity[v] < 2);
        if !fits {
            continue;
        }
        let mut next_ext = ext.clone();
        for &u in &adjacency[w] {
            let exclusive = u > root
                && !group.contains(&u)
                && !ext.contains(&u)
                && !group.iter().any(|&x| adjacency[x].contains(&u));
            if exclusive {
                next_ext.push(u);
            }
        }
        for &v in cycles[w].vertices() {
            multiplicity[v] += 1;
        }
        group.push(w);
        grow(adjacency, cycles, root, group, next_ext, multiplicity, out);
        group.pop();
        for &v in cycles[w].vertices() {
            multiplicity[v] -= 1;
        }
    }
}
