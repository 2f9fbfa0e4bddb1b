//! Independent checking: conflict detection and an exhaustive minimum-`k`
//! oracle. Nothing here depends on how a weighting was produced.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::weighting::EdgeWeighting;

/// Largest number of candidate weightings [`brute_force_min_k`] will try for
/// a single `k`.
pub const ORACLE_BUDGET: u64 = 100_000_000;

/// Edges whose endpoints have equal weighted degree, in ascending edge
/// order. An empty list means the weighting is vertex-coloring.
///
/// Fails if `w` misses an edge of `g`, weights an edge not in `g`, or uses
/// a weight outside `1..=3`.
pub fn verify(g: &Graph, w: &EdgeWeighting) -> Result<Vec<Edge>> {
    for e in g.edges() {
        match w.get(*e) {
            None => return Err(Error::InvalidWeighting(format!("edge {e} has no weight"))),
            Some(x) if !(1..=3).contains(&x) => {
                return Err(Error::InvalidWeighting(format!("edge {e} has weight {x}")))
            }
            Some(_) => {}
        }
    }
    if let Some((e, _)) = w.iter().find(|(e, _)| e.hi() >= g.n() || !g.has_edge(e.lo(), e.hi())) {
        return Err(Error::InvalidWeighting(format!("{e} is not an edge of the graph")));
    }
    let s = w.sums(g.n());
    Ok(g.edges().iter().copied().filter(|e| s[e.lo()] == s[e.hi()]).collect())
}

/// Smallest `k <= k_max` for which some weighting from `{1..k}` has no
/// conflict, or `None` if there is none.
///
/// Weightings are enumerated lexicographically over the sorted edge list,
/// with a vertex checked against its neighbors as soon as its last incident
/// edge is fixed. Fails with [`Error::Budget`] when `k_max^m` exceeds
/// [`ORACLE_BUDGET`].
pub fn brute_force_min_k(g: &Graph, k_max: u32) -> Result<Option<u32>> {
    let m = g.m() as u32;
    let space = (k_max as u64).checked_pow(m);
    if space.is_none_or(|s| s > ORACLE_BUDGET) {
        return Err(Error::Budget(format!("{k_max}^{m} weightings exceed {ORACLE_BUDGET}")));
    }
    (1..=k_max).find(|&k| Search::new(g, k).run()).map_or(Ok(None), |k| Ok(Some(k)))
}

struct Search<'a> {
    g: &'a Graph,
    k: i64,
    weights: Vec<i64>,
    sums: Vec<i64>,
    /// `closes[i]` lists vertices whose last incident edge is edge `i`.
    closes: Vec<Vec<usize>>,
    /// `done[v]` once every edge at `v` is fixed.
    done: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: u32) -> Search<'a> {
        let mut last = vec![None; g.n()];
        for (i, e) in g.edges().iter().enumerate() {
            last[e.lo()] = Some(i);
            last[e.hi()] = Some(i);
        }
        let mut closes = vec![Vec::new(); g.m()];
        let mut done = vec![false; g.n()];
        for (v, l) in last.into_iter().enumerate() {
            match l {
                Some(i) => closes[i].push(v),
                None => done[v] = true,
            }
        }
        Search {
            g,
            k: k as i64,
            weights: vec![0; g.m()],
            sums: vec![0; g.n()],
            closes,
            done,
        }
    }

    fn run(&mut self) -> bool {
        self.place(0)
    }

    fn place(&mut self, i: usize) -> bool {
        if i == self.g.m() {
            return true;
        }
        let e = self.g.edges()[i];
        for x in 1..=self.k {
            self.weights[i] = x;
            self.sums[e.lo()] += x;
            self.sums[e.hi()] += x;
            if self.closing_ok(i) {
                for j in 0..self.closes[i].len() {
                    self.done[self.closes[i][j]] = true;
                }
                let found = self.place(i + 1);
                for j in 0..self.closes[i].len() {
                    self.done[self.closes[i][j]] = false;
                }
                if found {
                    return true;
                }
            }
            self.sums[e.lo()] -= x;
            self.sums[e.hi()] -= x;
        }
        false
    }

    /// Every vertex finished by edge `i` differs from its finished neighbors.
    fn closing_ok(&self, i: usize) -> bool {
        let closing = &self.closes[i];
        closing.iter().all(|&v| {
            self.g
                .neighbors(v)
                .iter()
                .all(|&w| !(self.done[w] || closing.contains(&w)) || self.sums[w] != self.sums[v])
        })
    }
}
