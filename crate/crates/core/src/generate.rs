//! Deterministic graph generators.
//!
//! Random graphs use SplitMix64 so that a seed produces the same graph on
//! every platform and in any reimplementation:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output z ^ (z >> 31)            (all arithmetic wrapping, 64-bit)
//! ```
//!
//! A uniform float is `(output >> 11) * 2^-53`; a uniform integer below `k`
//! is the high half of the 128-bit product `output * k`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`all_labeled_connected`].
pub const MAX_ENUMERATION_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Gnp { n: usize, p: f64, seed: u64 },
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    RandomTree { n: usize, seed: u64 },
    Petersen,
}

pub fn generate(spec: &GraphSpec) -> Result<Graph> {
    match *spec {
        GraphSpec::Gnp { n, p, seed } => gnp(n, p, seed),
        GraphSpec::Cycle(n) => cycle(n),
        GraphSpec::Complete(n) => Ok(complete(n)),
        GraphSpec::CompleteBipartite(a, b) => Ok(complete_bipartite(a, b)),
        GraphSpec::RandomTree { n, seed } => random_tree(n, seed),
        GraphSpec::Petersen => Ok(petersen()),
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator emits simple graphs")
}

/// Erdős–Rényi `G(n, p)`: pairs `u < v` in lexicographic order, each kept
/// when the next float is below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Range(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Range(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
}

/// Vertex `i >= 1` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Range("a tree needs at least one vertex".into()));
    }
    let mut rng = SplitMix64::new(seed);
    Ok(build(n, (1..n).map(|i| (rng.below(i as u64) as usize, i)).collect()))
}

/// Outer cycle `0..5`, spokes `i – i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// Every connected graph on the labeled vertex set `0..n`, each exactly once.
///
/// Bit `i` of a counter selects the `i`-th pair `u < v` in lexicographic
/// order; counters run upward from 0.
pub fn all_labeled_connected(n: usize) -> Result<AllConnected> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::Range(format!("labeled enumeration supports 1..={MAX_ENUMERATION_N} vertices, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(AllConnected {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        mask: 0,
    })
}

#[derive(Debug, Clone)]
pub struct AllConnected {
    n: usize,
    pairs: Vec<(usize, usize)>,
    mask: u64,
    end: u64,
}

impl Iterator for AllConnected {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.mask < self.end {
            let mask = self.mask;
            self.mask += 1;
            // a connected graph has at least n - 1 edges
            if (mask.count_ones() as usize) + 1 < self.n {
                continue;
            }
            let edges = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = build(self.n, edges);
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}
