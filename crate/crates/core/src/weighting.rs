use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Subgraph};

/// An assignment of integer weights to edges, with weighted degrees derived
/// from it.
///
/// During construction a weighting may cover only part of a graph's edges;
/// the solver always returns one that is total.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeWeighting {
    weights: BTreeMap<Edge, i64>,
}

impl EdgeWeighting {
    pub fn new() -> EdgeWeighting {
        EdgeWeighting::default()
    }

    /// Every edge of `g` with the same weight.
    pub fn uniform(g: &Graph, weight: i64) -> EdgeWeighting {
        EdgeWeighting {
            weights: g.edges().iter().map(|&e| (e, weight)).collect(),
        }
    }

    pub fn get(&self, e: Edge) -> Option<i64> {
        self.weights.get(&e).copied()
    }

    /// Weight of `{u, v}`.
    ///
    /// # Panics
    ///
    /// Panics if the edge is not weighted.
    pub fn weight(&self, u: usize, v: usize) -> i64 {
        match self.weights.get(&Edge::new(u, v)) {
            Some(&w) => w,
            None => panic!("edge {} has no weight", Edge::new(u, v)),
        }
    }

    pub fn set(&mut self, u: usize, v: usize, w: i64) {
        self.weights.insert(Edge::new(u, v), w);
    }

    pub fn remove(&mut self, u: usize, v: usize) -> Option<i64> {
        self.weights.remove(&Edge::new(u, v))
    }

    /// Adds `delta` to an existing weight, keeping it inside `1..=3`.
    pub fn shift(&mut self, u: usize, v: usize, delta: i64) -> Result<()> {
        let e = Edge::new(u, v);
        let w = self
            .weights
            .get_mut(&e)
            .ok_or_else(|| Error::InvalidWeighting(format!("edge {e} has no weight")))?;
        let next = *w + delta;
        if !(1..=3).contains(&next) {
            return Err(Error::InvalidWeighting(format!(
                "shifting {e} by {delta} leaves {{1,2,3}} (would be {next})"
            )));
        }
        *w = next;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, i64)> + '_ {
        self.weights.iter().map(|(&e, &w)| (e, w))
    }

    /// Copies every weight of `other` into `self`, overwriting on overlap.
    pub fn absorb(&mut self, other: &EdgeWeighting) {
        self.weights.extend(other.iter());
    }

    /// Translates a weighting of `sub.graph` into host vertex ids.
    pub fn lift(&self, sub: &Subgraph) -> EdgeWeighting {
        EdgeWeighting {
            weights: self.iter().map(|(e, w)| (sub.host_edge(e), w)).collect(),
        }
    }

    /// Weighted degree of every vertex `0..n` counting only weighted edges.
    pub fn sums(&self, n: usize) -> Vec<i64> {
        let mut s = vec![0; n];
        for (e, w) in self.iter() {
            s[e.lo()] += w;
            s[e.hi()] += w;
        }
        s
    }

    /// Weighted degree of a single vertex of `g`; unweighted edges count 0.
    pub fn sum_at(&self, g: &Graph, v: usize) -> i64 {
        g.neighbors(v)
            .iter()
            .map(|&w| self.get(Edge::new(v, w)).unwrap_or(0))
            .sum()
    }

    /// True if the domain is exactly `E(g)` and every weight lies in `{1,2,3}`.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        self.len() == g.m()
            && g
                .edges()
                .iter()
                .all(|&e| matches!(self.get(e), Some(1..=3)))
    }
}

impl FromIterator<(Edge, i64)> for EdgeWeighting {
    fn from_iter<I: IntoIterator<Item = (Edge, i64)>>(iter: I) -> Self {
        EdgeWeighting {
            weights: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_and_shift() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let mut w = EdgeWeighting::uniform(&g, 2);
        assert_eq!(w.sums(3), vec![2, 4, 2]);
        w.shift(1, 0, 1).unwrap();
        assert_eq!(w.weight(0, 1), 3);
        assert!(w.shift(0, 1, 1).is_err());
        assert_eq!(w.sum_at(&g, 1), 5);
        assert!(w.is_total_on(&g));
        w.remove(1, 2);
        assert!(!w.is_total_on(&g));
    }
}
