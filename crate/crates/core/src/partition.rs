//! Red/blue vertex partitions.
//!
//! The red set is independent; blue vertices are weighted among themselves
//! first and then topped up through the red–blue edges. A partition is
//! *good* when the bipartite graph between the two colors is connected and
//! the blue side has even size.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{ensure, Result};
use crate::graph::{Graph, Path, UnionFind};

/// A red/blue split of a graph's vertices, optionally leaving out one
/// anchor vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Partition {
    pub red: BTreeSet<usize>,
    pub blue: BTreeSet<usize>,
    pub anchor: Option<usize>,
}

impl Partition {
    pub fn new(red: BTreeSet<usize>, blue: BTreeSet<usize>) -> Partition {
        Partition {
            red,
            blue,
            anchor: None,
        }
    }

    /// Every vertex of `g` not in `red` becomes blue.
    pub fn from_red(g: &Graph, red: BTreeSet<usize>) -> Partition {
        let blue = (0..g.n()).filter(|v| !red.contains(v)).collect();
        Partition::new(red, blue)
    }

    pub fn with_anchor(mut self, v0: usize) -> Partition {
        self.anchor = Some(v0);
        self
    }

    pub fn is_red(&self, v: usize) -> bool {
        self.red.contains(&v)
    }

    pub fn is_blue(&self, v: usize) -> bool {
        self.blue.contains(&v)
    }

    pub fn red_vec(&self) -> Vec<usize> {
        self.red.iter().copied().collect()
    }

    pub fn blue_vec(&self) -> Vec<usize> {
        self.blue.iter().copied().collect()
    }

    pub fn red_degree(&self, g: &Graph, v: usize) -> usize {
        g.degree_into(v, |w| self.is_red(w))
    }

    pub fn blue_degree(&self, g: &Graph, v: usize) -> usize {
        g.degree_into(v, |w| self.is_blue(w))
    }
}

/// An independent set `R` such that `G(R, V∖R)` is connected and `p`
/// alternates between `R` and its complement.
///
/// The first vertex of `p` is red iff `include_first`. The remaining
/// vertices are visited in breadth-first order from the last vertex of `p`
/// and turned red whenever they have no red neighbor yet.
pub fn alternating_independent_set(g: &Graph, p: &Path, include_first: bool) -> Result<BTreeSet<usize>> {
    ensure!(!p.is_empty(), Precondition, "path must contain at least one vertex");
    ensure!(p.is_path_in(g), Precondition, "{:?} is not a path", p.vertices());
    ensure!(p.is_chordless_in(g), Precondition, "{:?} has a chord", p.vertices());
    ensure!(g.is_connected(), Precondition, "graph is disconnected");

    let mut red = vec![false; g.n()];
    let mut placed = vec![false; g.n()];
    for (i, &v) in p.vertices().iter().enumerate() {
        red[v] = (i % 2 == 0) == include_first;
        placed[v] = true;
    }

    let start = p.last().expect("non-empty");
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if !placed[v] {
            placed[v] = true;
            red[v] = !g.neighbors(v).iter().any(|&w| red[w]);
        }
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok((0..g.n()).filter(|&v| red[v]).collect())
}

/// True iff `R` is independent, `G(R, B)` is connected, `|B|` is even, and
/// `R`, `B` and the anchor partition the vertex set of `g`.
pub fn check_good(g: &Graph, part: &Partition) -> bool {
    let covered = part.red.len() + part.blue.len() + usize::from(part.anchor.is_some());
    if covered != g.n() || part.red.intersection(&part.blue).next().is_some() {
        return false;
    }
    if let Some(v0) = part.anchor {
        if v0 >= g.n() || part.is_red(v0) || part.is_blue(v0) {
            return false;
        }
    }
    if part.red.iter().chain(&part.blue).any(|&v| v >= g.n()) {
        return false;
    }
    if !part.blue.len().is_multiple_of(2) {
        return false;
    }
    if g.edges()
        .iter()
        .any(|e| part.is_red(e.lo()) && part.is_red(e.hi()))
    {
        return false;
    }
    bipartite_connected(g, part)
}

/// Connectivity of `G(R, B)` over `R ∪ B`.
pub(crate) fn bipartite_connected(g: &Graph, part: &Partition) -> bool {
    let mut uf = UnionFind::new(g.n());
    for e in g.edges() {
        let (u, v) = e.ends();
        if (part.is_red(u) && part.is_blue(v)) || (part.is_blue(u) && part.is_red(v)) {
            uf.union(u, v);
        }
    }
    let mut members = part.red.iter().chain(&part.blue);
    match members.next() {
        None => true,
        Some(&first) => {
            let root = uf.find(first);
            members.all(|&v| uf.find(v) == root)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    pub(crate) fn divide_post(g: &Graph, p: &Path, include_first: bool, red: &BTreeSet<usize>) -> bool {
        let part = Partition::from_red(g, red.clone());
        let independent = g.edges().iter().all(|e| !(red.contains(&e.lo()) && red.contains(&e.hi())));
        let alternating = p
            .vertices()
            .iter()
            .enumerate()
            .all(|(i, v)| red.contains(v) == ((i % 2 == 0) == include_first));
        independent && alternating && bipartite_connected(g, &part)
    }

    #[test]
    fn alternating_on_path() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let path = Path::new(vec![0, 1, 2, 3]);
        let red = alternating_independent_set(&p4, &path, true).unwrap();
        assert!(red.contains(&0) && red.contains(&2));
        assert!(divide_post(&p4, &path, true, &red));
    }

    #[test]
    fn star_leaves_turn_red() {
        let star = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let red = alternating_independent_set(&star, &Path::new(vec![0]), false).unwrap();
        assert_eq!(red, set(&[1, 2, 3, 4]));
    }

    #[test]
    fn cycle_single_vertex_path() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let p = Path::new(vec![0]);
        let red = alternating_independent_set(&c4, &p, true).unwrap();
        assert!(divide_post(&c4, &p, true, &red));
    }

    #[test]
    fn rejects_chord() {
        let tri = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(alternating_independent_set(&tri, &Path::new(vec![0, 1, 2]), true).is_err());
    }

    #[test]
    fn good_partition_examples() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(check_good(&c4, &Partition::new(set(&[0, 2]), set(&[1, 3]))));
        let k13 = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!check_good(&k13, &Partition::new(set(&[0]), set(&[1, 2, 3]))));
        let tri = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(!check_good(&tri, &Partition::new(set(&[0, 1]), set(&[2]))));
    }

    #[test]
    fn good_partition_with_anchor() {
        // v0 = 4 hangs off a C4
        let h = g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)]);
        let part = Partition::new(set(&[0, 2]), set(&[1, 3])).with_anchor(4);
        assert!(check_good(&h, &part));
        assert!(!check_good(&h, &Partition::new(set(&[0, 2]), set(&[1, 3]))));
    }
}
