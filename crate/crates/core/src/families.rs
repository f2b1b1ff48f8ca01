//! Generators for the graph families used in tests, the CLI and benchmarks.
//!
//! Every family produces an even, connected multigraph.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

const RANDOM_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// The cycle `C_k`; `k = 2` is a digon.
    Cycle { k: usize },
    /// `k` triangles glued in a row, consecutive ones sharing one vertex.
    /// The CI graph is a path with `k - 1` links.
    TriangleChain { k: usize },
    /// A core cycle on `core` vertices with a triangle hanging off each of
    /// the first `petals` core vertices. The CI graph is a star with
    /// `petals` links.
    Flower { petals: usize, core: usize },
    /// Three doubled edges on a triangle.
    Figure1,
    /// Two degree-4 hubs joined by three 2-paths and one direct edge.
    Figure2,
    /// Edge union of `cycles` random simple cycles on `n` vertices,
    /// resampled until every vertex is used and the result is connected.
    RandomEven { n: usize, cycles: usize, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Multigraph> {
        match *self {
            FamilySpec::Cycle { k } => cycle(k),
            FamilySpec::TriangleChain { k } => triangle_chain(k),
            FamilySpec::Flower { petals, core } => flower(petals, core),
            FamilySpec::Figure1 => Ok(figure1()),
            FamilySpec::Figure2 => Ok(figure2()),
            FamilySpec::RandomEven { n, cycles, seed } => random_even(n, cycles, seed),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle { k } => write!(f, "cycle k={k}"),
            FamilySpec::TriangleChain { k } => write!(f, "triangle_chain k={k}"),
            FamilySpec::Flower { petals, core } => write!(f, "flower petals={petals} core={core}"),
            FamilySpec::Figure1 => write!(f, "figure1"),
            FamilySpec::Figure2 => write!(f, "figure2"),
            FamilySpec::RandomEven { n, cycles, seed } => write!(f, "random_even n={n} cycles={cycles} seed={seed}"),
        }
    }
}

/// Parses the [`Display`](fmt::Display) form: a family name followed by
/// `key=value` pairs.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let name = tokens.next().ok_or_else(|| Error::Family("empty family spec".into()))?;
        let mut params = BTreeMap::new();
        for t in tokens {
            let (k, v) = t.split_once('=').ok_or_else(|| Error::Family(format!("expected key=value, got {t:?}")))?;
            let v: u64 = v.parse().map_err(|_| Error::Family(format!("{k}: {v:?} is not a non-negative integer")))?;
            params.insert(k.to_string(), v);
        }
        let mut take = |key: &str| params.remove(key).ok_or_else(|| Error::Family(format!("{name} needs {key}=...")));
        let spec = match name {
            "cycle" => FamilySpec::Cycle { k: take("k")? as usize },
            "triangle_chain" => FamilySpec::TriangleChain { k: take("k")? as usize },
            "flower" => FamilySpec::Flower { petals: take("petals")? as usize, core: take("core")? as usize },
            "figure1" => FamilySpec::Figure1,
            "figure2" => FamilySpec::Figure2,
            "random_even" => {
                FamilySpec::RandomEven { n: take("n")? as usize, cycles: take("cycles")? as usize, seed: take("seed")? }
            }
            other => return Err(Error::Family(format!("unknown family {other:?}"))),
        };
        if let Some(extra) = params.keys().next() {
            return Err(Error::Family(format!("{name} does not take {extra}")));
        }
        Ok(spec)
    }
}

pub fn cycle(k: usize) -> Result<Multigraph> {
    if k < 2 {
        return Err(Error::Family("cycle needs k >= 2".into()));
    }
    Multigraph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// Spine vertices `0..=k`, apex of triangle `i` is `k + 1 + i`.
pub fn triangle_chain(k: usize) -> Result<Multigraph> {
    if k == 0 {
        return Err(Error::Family("triangle_chain needs k >= 1".into()));
    }
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        let apex = k + 1 + i;
        edges.extend([(i, apex), (apex, i + 1), (i + 1, i)]);
    }
    Multigraph::from_edges(2 * k + 1, edges)
}

/// Core vertices `0..core`; petal `i` adds two fresh vertices.
pub fn flower(petals: usize, core: usize) -> Result<Multigraph> {
    if core < 3 || petals > core {
        return Err(Error::Family("flower needs core >= 3 and petals <= core".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..core).map(|i| (i, (i + 1) % core)).collect();
    for i in 0..petals {
        let (x, y) = (core + 2 * i, core + 2 * i + 1);
        edges.extend([(i, x), (x, y), (y, i)]);
    }
    Multigraph::from_edges(core + 2 * petals, edges)
}

pub fn figure1() -> Multigraph {
    Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]).expect("fixed graph")
}

/// Vertices A..E are 0..4; A and E have degree 4.
pub fn figure2() -> Multigraph {
    Multigraph::from_edges(5, [(0, 1), (0, 2), (0, 4), (1, 4), (2, 4), (0, 3), (3, 4)]).expect("fixed graph")
}

pub fn random_even(n: usize, cycles: usize, seed: u64) -> Result<Multigraph> {
    if n < 2 || cycles == 0 {
        return Err(Error::Family("random_even needs n >= 2 and cycles >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<usize> = (0..n).collect();
    for _ in 0..RANDOM_ATTEMPTS {
        let mut g = Multigraph::new(n);
        for _ in 0..cycles {
            let len = rng.random_range(2..=n);
            pool.shuffle(&mut rng);
            for i in 0..len {
                g.add_edge(pool[i], pool[(i + 1) % len])?;
            }
        }
        if g.vertices().all(|v| g.degree(v) > 0) && g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Family(format!(
        "random_even n={n} cycles={cycles} seed={seed}: no connected sample in {RANDOM_ATTEMPTS} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_are_even_and_connected() {
        let specs = [
            FamilySpec::Cycle { k: 2 },
            FamilySpec::Cycle { k: 5 },
            FamilySpec::TriangleChain { k: 4 },
            FamilySpec::Flower { petals: 3, core: 4 },
            FamilySpec::Flower { petals: 0, core: 3 },
            FamilySpec::Figure1,
            FamilySpec::Figure2,
            FamilySpec::RandomEven { n: 8, cycles: 3, seed: 7 },
        ];
        for s in specs {
            let g = s.generate().unwrap();
            assert!(g.is_even(), "{s}");
            assert!(g.is_connected(), "{s}");
        }
    }

    #[test]
    fn sizes() {
        let g = triangle_chain(8).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (17, 24));
        let g = flower(6, 6).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (18, 24));
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_even(7, 3, 42).unwrap(), random_even(7, 3, 42).unwrap());
    }

    #[test]
    fn spec_text_round_trip() {
        for text in ["cycle k=5", "flower petals=3 core=4", "figure2", "random_even n=8 cycles=3 seed=1"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!("flower petals=3".parse::<FamilySpec>().is_err());
        assert!("cycle k=3 extra=1".parse::<FamilySpec>().is_err());
        assert!("moebius k=3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn bad_parameters() {
        assert!(cycle(1).is_err());
        assert!(triangle_chain(0).is_err());
        assert!(flower(5, 4).is_err());
        assert!(random_even(1, 1, 0).is_err());
    }
}
