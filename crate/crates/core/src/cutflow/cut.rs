use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`exact_max_cut`].
pub const EXACT_CUT_LIMIT: usize = 16;

/// A bipartition `(S, T)` of a graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    in_s: Vec<bool>,
    size: usize,
}

impl Cut {
    /// `in_s[v]` places `v` on the `S` side.
    pub fn new(g: &Graph, in_s: Vec<bool>) -> Cut {
        assert_eq!(in_s.len(), g.n(), "cut must cover every vertex");
        let size = g.edges().iter().filter(|e| in_s[e.lo()] != in_s[e.hi()]).count();
        Cut { in_s, size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn in_s(&self, v: usize) -> bool {
        self.in_s[v]
    }

    pub fn same_side(&self, u: usize, v: usize) -> bool {
        self.in_s[u] == self.in_s[v]
    }

    pub fn s_side(&self) -> Vec<usize> {
        (0..self.in_s.len()).filter(|&v| self.in_s[v]).collect()
    }

    pub fn t_side(&self) -> Vec<usize> {
        (0..self.in_s.len()).filter(|&v| !self.in_s[v]).collect()
    }

    /// Swaps the side of every vertex in `vs`.
    pub fn flipped(&self, g: &Graph, vs: &[usize]) -> Cut {
        let mut in_s = self.in_s.clone();
        for &v in vs {
            in_s[v] = !in_s[v];
        }
        Cut::new(g, in_s)
    }

    /// Puts isolated vertices on the `S` side. The size is unchanged, and
    /// an `S` vertex with no handicap can always receive color 1.
    fn isolated_to_s(mut self, g: &Graph) -> Cut {
        for v in 0..g.n() {
            if g.degree(v) == 0 {
                self.in_s[v] = true;
            }
        }
        self
    }
}

/// Single-vertex-flip local search.
///
/// Without a seed, vertices are placed greedily in ascending order on the
/// side opposite to most of their already placed neighbors. Then any vertex
/// with more neighbors on its own side than across is flipped until none
/// is left. On return every vertex has at least half of its neighbors on
/// the other side.
pub fn local_optimal_cut(g: &Graph, seed: Option<&Cut>) -> Cut {
    let n = g.n();
    let mut in_s = match seed {
        Some(c) => c.in_s.clone(),
        None => {
            let mut in_s = vec![true; n];
            for v in 0..n {
                let (mut s, mut t) = (0, 0);
                for &w in g.neighbors(v).iter().filter(|&&w| w < v) {
                    if in_s[w] {
                        s += 1;
                    } else {
                        t += 1;
                    }
                }
                in_s[v] = s <= t;
            }
            in_s
        }
    };
    loop {
        let mut changed = false;
        for v in 0..n {
            let same = g.neighbors(v).iter().filter(|&&w| in_s[w] == in_s[v]).count();
            if 2 * same > g.degree(v) {
                in_s[v] = !in_s[v];
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Cut::new(g, in_s).isolated_to_s(g)
}

/// A maximum cut by exhaustive enumeration (Gray-code order, vertex 0
/// pinned to `S`). Ties keep the first maximum found.
pub fn exact_max_cut(g: &Graph) -> Result<Cut> {
    exact_max_cut_with_limit(g, EXACT_CUT_LIMIT)
}

pub fn exact_max_cut_with_limit(g: &Graph, limit: usize) -> Result<Cut> {
    let n = g.n();
    if n > limit || n > 30 {
        return Err(Error::Budget(format!(
            "exact max cut limited to {} vertices, got {n}",
            limit.min(30)
        )));
    }
    if n == 0 {
        return Ok(Cut::new(g, Vec::new()));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    // bit v of `mask` set <=> v on the T side; vertex 0 stays in S
    let mut mask = 0u32;
    let mut size = 0i64;
    let (mut best, mut best_mask) = (0i64, 0u32);
    for i in 1u32..(1 << (n - 1)) {
        let v = i.trailing_zeros() as usize + 1;
        let on_t = (adj[v] & mask).count_ones() as i64;
        let on_s = adj[v].count_ones() as i64 - on_t;
        let (same, across) = if mask >> v & 1 == 1 { (on_t, on_s) } else { (on_s, on_t) };
        // flipping v turns its same-side edges into cut edges and vice versa
        size += same - across;
        mask ^= 1 << v;
        if size > best {
            best = size;
            best_mask = mask;
        }
    }
    let in_s = (0..n).map(|v| best_mask >> v & 1 == 0).collect();
    let cut = Cut::new(g, in_s).isolated_to_s(g);
    debug_assert_eq!(cut.size() as i64, best);
    Ok(cut)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut es = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                es.push((u, v));
            }
        }
        g(n, &es)
    }

    fn cycle(n: usize) -> Graph {
        g(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    /// Independent oracle: tries all 2^n sides.
    fn brute_max_cut(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .map(|m| {
                g.edges()
                    .iter()
                    .filter(|e| (m >> e.lo() & 1) != (m >> e.hi() & 1))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn oracle_values() {
        assert_eq!(brute_max_cut(&cycle(4)), 4);
        assert_eq!(brute_max_cut(&complete(3)), 2);
        assert_eq!(brute_max_cut(&cycle(5)), 4);
        assert_eq!(brute_max_cut(&complete(4)), 4);
    }

    #[test]
    fn local_search_examples() {
        let c = local_optimal_cut(&cycle(4), None);
        assert_eq!(c.size(), 4);
        assert!(c.in_s(0) != c.in_s(1) && c.in_s(0) == c.in_s(2));
        assert_eq!(local_optimal_cut(&complete(3), None).size(), 2);
        assert_eq!(local_optimal_cut(&Graph::empty(3), None).size(), 0);
    }

    #[test]
    fn local_search_never_shrinks_seed() {
        let k5 = complete(5);
        let seed = Cut::new(&k5, vec![true, true, false, false, false]);
        assert!(local_optimal_cut(&k5, Some(&seed)).size() >= seed.size());
    }

    #[test]
    fn exact_examples() {
        assert_eq!(exact_max_cut(&cycle(5)).unwrap().size(), 4);
        assert_eq!(exact_max_cut(&complete(4)).unwrap().size(), 4);
        assert_eq!(exact_max_cut(&g(3, &[(0, 1), (1, 2)])).unwrap().size(), 2);
        assert_eq!(exact_max_cut(&Graph::empty(0)).unwrap().size(), 0);
        assert!(exact_max_cut(&Graph::empty(17)).is_err());
    }

    #[test]
    fn isolated_vertices_sit_in_s() {
        let h = g(4, &[(1, 2)]);
        let c = exact_max_cut(&h).unwrap();
        assert!(c.in_s(0) && c.in_s(3));
        let c = local_optimal_cut(&h, None);
        assert!(c.in_s(0) && c.in_s(3));
    }
}
