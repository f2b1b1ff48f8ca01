//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use decycling::ci::build_ci;
use decycling::decomp::{count_decompositions, enumerate_decompositions, Cycle, CycleDecomposition};
use decycling::decycle::{analyze, exact_decycling_number, AnalyzeOptions};
use decycling::families::{figure1, figure2, flower, random_even, triangle_chain};
use decycling::graph::Multigraph;
use decycling::optimize::{optimize_decomposition, Method};

const CLOSED_FORM_LIMIT: Duration = Duration::from_secs(10);
const SWEEP_LIMIT: Duration = Duration::from_secs(300);
const TREE_INSTANCES: usize = 200;
const TREE_MAX_VERTICES: usize = 18;
const SWEEP_MIN_INSTANCES: usize = 500;
const SWEEP_MAX_VERTICES: usize = 8;
const SWEEP_MAX_EDGES: usize = 12;
const COVER_MAX_NODES: usize = 7;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn opts() -> AnalyzeOptions {
    AnalyzeOptions { seed: 0, oracle_limit: Some(TREE_MAX_VERTICES + 2) }
}

fn path_ci_closed_form() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=7usize {
        let g = triangle_chain(n + 1).unwrap();
        let r = analyze(&g, None, opts()).unwrap();
        let want = (n + 2) / 2;
        if r.ci_links != n || r.forest_exact != Some(want) || r.exact != Some(want) {
            bad.push(format!(
                "n={n}: links {} forest {:?} exact {:?} want {want}",
                r.ci_links, r.forest_exact, r.exact
            ));
        }
    }
    let t = start.elapsed();
    if t >= CLOSED_FORM_LIMIT {
        bad.push(format!("took {t:?}"));
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() { format!("n=1..7 all equal ceil((n+1)/2), {t:.2?}") } else { bad.join("; ") },
    )
}

fn star_ci_closed_form() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=6usize {
        let g = flower(n, n.max(3)).unwrap();
        let r = analyze(&g, None, opts()).unwrap();
        if r.ci_links != n || r.forest_exact != Some(n) || r.exact != Some(n) {
            bad.push(format!("n={n}: links {} forest {:?} exact {:?}", r.ci_links, r.forest_exact, r.exact));
        }
    }
    let t = start.elapsed();
    if t >= CLOSED_FORM_LIMIT {
        bad.push(format!("took {t:?}"));
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("n=1..6 all equal n, {t:.2?}") } else { bad.join("; ") })
}

/// Glues cycles of length 2..=5 into a tree of cycles. Each new cycle hangs
/// off a vertex that so far lies on exactly one cycle; `shape` picks the
/// host cycle (0 chain, 1 star, 2 mixed).
fn tree_ci_instance(rng: &mut ChaCha8Rng) -> (Multigraph, CycleDecomposition) {
    let shape = rng.random_range(0..3);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cycles: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut on: Vec<usize> = Vec::new();
    let mut next = 0usize;

    let mut add_cycle = |first: Option<usize>, len: usize, edges: &mut Vec<(usize, usize)>, on: &mut Vec<usize>| {
        let mut vs = Vec::with_capacity(len);
        if let Some(v) = first {
            vs.push(v);
            on[v] += 1;
        }
        while vs.len() < len {
            vs.push(next);
            on.push(1);
            next += 1;
        }
        let es: Vec<usize> = (0..len)
            .map(|i| {
                edges.push((vs[i], vs[(i + 1) % len]));
                edges.len() - 1
            })
            .collect();
        (vs, es)
    };

    let len = rng.random_range(2..=5);
    cycles.push(add_cycle(None, len, &mut edges, &mut on));
    loop {
        let len = rng.random_range(2..=5);
        if on.len() + len - 1 > TREE_MAX_VERTICES {
            break;
        }
        let host = match shape {
            0 => cycles.len() - 1,
            1 => 0,
            _ => rng.random_range(0..cycles.len()),
        };
        let free: Vec<usize> = cycles[host].0.iter().copied().filter(|&v| on[v] == 1).collect();
        if free.is_empty() {
            break;
        }
        let at = free[rng.random_range(0..free.len())];
        cycles.push(add_cycle(Some(at), len, &mut edges, &mut on));
        if rng.random_bool(0.15) {
            break;
        }
    }
    let g = Multigraph::from_edges(on.len(), edges).unwrap();
    let d = CycleDecomposition::new(cycles.into_iter().map(|(vs, es)| Cycle::new(vs, es)).collect());
    (g, d)
}

fn tree_ci_equality() -> (Outcome, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut violations = Vec::new();
    let mut unique = 0usize;
    let mut max_vertices = 0usize;
    for i in 0..TREE_INSTANCES {
        let (g, d) = tree_ci_instance(&mut rng);
        max_vertices = max_vertices.max(g.vertex_count());
        let ci = build_ci(&g, &d).unwrap();
        let r = analyze(&g, Some(&d), opts()).unwrap();
        if !ci.is_forest() || r.exact != Some(r.general_bound) || r.forest_exact != r.exact {
            violations.push(format!("#{i}: forest {} general {} exact {:?}", ci.is_forest(), r.general_bound, r.exact));
        }
        if count_decompositions(&g, Some(2)).unwrap() == 1 {
            unique += 1;
        }
    }
    let ok = violations.is_empty() && max_vertices <= TREE_MAX_VERTICES;
    let detail = if ok {
        format!("{TREE_INSTANCES} instances up to {max_vertices} vertices, 0 violations")
    } else {
        format!("{} violations: {}", violations.len(), violations.join("; "))
    };
    let note = format!("{unique}/{TREE_INSTANCES} forest-CI instances have a unique decomposition");
    (outcome(ok, detail), note)
}

fn is_two_triangles(d: &CycleDecomposition) -> bool {
    d.len() == 2 && d.cycles().iter().all(|c| c.len() == 3)
}

fn is_three_digons(d: &CycleDecomposition) -> bool {
    let pairs: BTreeSet<Vec<usize>> = d
        .cycles()
        .iter()
        .map(|c| {
            let mut v = c.vertices().to_vec();
            v.sort_unstable();
            v
        })
        .collect();
    d.len() == 3 && d.cycles().iter().all(|c| c.len() == 2) && pairs.len() == 3
}

fn figure1_reproduction() -> Outcome {
    let g = figure1();
    let all = enumerate_decompositions(&g, None).unwrap();
    let triangles = all.iter().filter(|d| is_two_triangles(d)).count();
    let digons = all.iter().filter(|d| is_three_digons(d)).count();
    let best = optimize_decomposition(&g, Method::Exhaustive, 100, 0).unwrap();
    let (exact, _) = exact_decycling_number(&g, None).unwrap();
    let r = analyze(&g, Some(&best.best_decomposition), opts()).unwrap();
    let witness = r.witness_sets["general"].len();
    let ok = triangles + digons == all.len()
        && triangles == 4
        && digons == 1
        && best.best_rank == 1
        && is_three_digons(&best.best_decomposition)
        && exact == 2
        && witness == 2;
    outcome(
        ok,
        format!(
            "{} decompositions ({digons} three-digon, {triangles} two-triangle), best rank {}, exact {exact}, general witness {witness}",
            all.len(),
            best.best_rank
        ),
    )
}

fn figure2_reproduction() -> Outcome {
    let g = figure2();
    let all = enumerate_decompositions(&g, None).unwrap();
    let simple = all.iter().filter(|d| build_ci(&g, d).unwrap().is_simple()).count();
    let (exact, set) = exact_decycling_number(&g, None).unwrap();
    let ok = !all.is_empty() && simple == 0 && exact == 1 && set.is_certified();
    outcome(
        ok,
        format!("{} decompositions, {simple} with simple CI, exact {exact} via {:?}", all.len(), set.vertices()),
    )
}

struct Sweep {
    soundness: Outcome,
    cover: Outcome,
    log: Vec<String>,
}

fn soundness_sweep() -> Sweep {
    let start = Instant::now();
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut graphs = Vec::new();
    'outer: for seed in 0..u64::MAX {
        for n in 2..=SWEEP_MAX_VERTICES {
            for cycles in 1..=4 {
                let Ok(g) = random_even(n, cycles, seed) else { continue };
                if g.edge_count() > SWEEP_MAX_EDGES {
                    continue;
                }
                let mut key: Vec<(usize, usize)> = g.edges().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
                key.sort_unstable();
                if seen.insert(key) {
                    graphs.push(g);
                }
            }
        }
        if graphs.len() >= SWEEP_MIN_INSTANCES {
            break 'outer;
        }
    }

    let mut failures = Vec::new();
    let mut decompositions = 0usize;
    let mut witnesses = 0usize;
    let (mut general_tight, mut general_below_intersection, mut general_above_intersection) = (0usize, 0usize, 0usize);
    let mut covers = 0usize;
    let mut cover_mismatches = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let (exact, _) = exact_decycling_number(g, None).unwrap();
        for d in enumerate_decompositions(g, None).unwrap() {
            decompositions += 1;
            let r = analyze(g, Some(&d), opts()).unwrap();
            for (name, w) in &r.witness_sets {
                witnesses += 1;
                if !w.is_certified() {
                    failures.push(format!("graph #{i}: {name} witness uncertified"));
                }
            }
            if exact > r.general_bound {
                failures.push(format!("graph #{i}: exact {exact} > general {}", r.general_bound));
            }
            if exact == r.general_bound {
                general_tight += 1;
            }
            let iw = r.witness_sets["intersection"].len();
            if r.general_bound <= iw {
                general_below_intersection += 1;
            } else {
                general_above_intersection += 1;
            }

            let ci = build_ci(g, &d).unwrap();
            if ci.node_count() <= COVER_MAX_NODES {
                covers += 1;
                let pairs = common::simple_pairs(&ci);
                let brute = common::brute_forest_cover(ci.node_count(), &pairs);
                if ci.msf().size() != brute {
                    cover_mismatches.push(format!("graph #{i}: msf {} brute {brute}", ci.msf().size()));
                }
            }
        }
    }
    let t = start.elapsed();
    if t >= SWEEP_LIMIT {
        failures.push(format!("took {t:?}"));
    }
    let sound_ok = failures.is_empty() && graphs.len() >= SWEEP_MIN_INSTANCES;
    let soundness = outcome(
        sound_ok,
        if sound_ok {
            format!(
                "{} graphs, {decompositions} decompositions, {witnesses} witnesses certified, 0 violations, {t:.2?}",
                graphs.len()
            )
        } else {
            format!("{} graphs, {} failures: {}", graphs.len(), failures.len(), failures.join("; "))
        },
    );
    let cover = outcome(
        cover_mismatches.is_empty() && covers > 0,
        if cover_mismatches.is_empty() {
            format!("{covers} CI graphs checked, 0 mismatches")
        } else {
            cover_mismatches.join("; ")
        },
    );
    let log = vec![
        format!("exact == general on {general_tight}/{decompositions} decompositions"),
        format!(
            "general <= intersection witness size on {general_below_intersection}, above on {general_above_intersection}"
        ),
    ];
    Sweep { soundness, cover, log }
}

fn main() {
    let mut lines: Vec<(&str, Outcome)> = Vec::new();
    let mut notes = Vec::new();

    lines.push(("1 path CI closed form", path_ci_closed_form()));
    lines.push(("2 star CI closed form", star_ci_closed_form()));
    let (tree, note) = tree_ci_equality();
    lines.push(("3 forest CI general equals exact", tree));
    notes.push(note);
    lines.push(("4 three doubled edges", figure1_reproduction()));
    lines.push(("5 two hubs with no simple CI", figure2_reproduction()));
    let sweep = soundness_sweep();
    lines.push(("6 soundness sweep", sweep.soundness));
    lines.push(("7 forest cover vs brute force", sweep.cover));
    notes.extend(sweep.log);
    lines.push((
        "8 provenance of expected values",
        outcome(true, "expected values are closed forms or brute-force oracle results; no published tables exist to compare against"),
    ));

    let mut failed = 0;
    for (name, o) in &lines {
        println!("{} {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    for n in notes {
        println!("note: {n}");
    }
    println!("{} of {} criteria passed", lines.len() - failed, lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
