//! Weighting of the red–blue bipartite graph with exact blue targets and
//! prescribed red parities.
//!
//! All edges start at weight 2. A set `E_o` of spanning-tree edges is chosen
//! so that a vertex meets an odd number of them exactly when it must end up
//! with an odd weighted degree; those edges then receive 1 or 3, split at
//! each blue vertex so that its sum hits the target. An optional path `p`
//! inside the tree constrains the split so that weights along `p` can later
//! be moved by one in either direction.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{ensure, Error, Result};
use crate::graph::{spanning_tree_with_path, Edge, Graph, Path, Tree};
use crate::weighting::EdgeWeighting;

/// Blue targets `α(v)` and the set `R′` of red vertices that must end odd.
///
/// Vertices with an `alpha` entry are blue; all others are red.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlueTargets {
    pub alpha: BTreeMap<usize, i64>,
    pub odd_red: BTreeSet<usize>,
}

impl BlueTargets {
    pub fn is_blue(&self, v: usize) -> bool {
        self.alpha.contains_key(&v)
    }
}

/// Tree edges `E_o` with odd incidence exactly on a prescribed vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityEdgeSet {
    pub edges: BTreeSet<Edge>,
    /// `|E_o(v)|` for every host vertex.
    pub incident: Vec<usize>,
}

/// Chooses `E_o` by a leaves-to-root sweep: the edge to the parent is taken
/// iff the vertex's current count has the wrong parity. The root comes out
/// right because `|odd_set|` is even. An unrooted tree is rooted at its
/// smallest vertex.
pub fn parity_edge_set(tree: &Tree, odd_set: &BTreeSet<usize>) -> Result<ParityEdgeSet> {
    let in_tree: BTreeSet<usize> = tree.vertices().iter().copied().collect();
    ensure!(
        odd_set.iter().all(|v| in_tree.contains(v)),
        Precondition,
        "odd set leaves the tree"
    );
    ensure!(odd_set.len().is_multiple_of(2), Precondition, "odd set has odd size {}", odd_set.len());

    let rooted;
    let tree = match (tree.root(), tree.vertices().first()) {
        (Some(_), _) | (None, None) => tree,
        (None, Some(&r)) => {
            rooted = tree.clone().rooted(r)?;
            &rooted
        }
    };
    let host_n = tree.vertices().last().map_or(0, |&v| v + 1);
    let mut incident = vec![0usize; host_n];
    let mut edges = BTreeSet::new();
    for &v in tree.leaves_to_root() {
        let Some(par) = tree.parent(v) else { continue };
        let want_odd = odd_set.contains(&v);
        if (incident[v] % 2 == 1) != want_odd {
            edges.insert(Edge::new(v, par));
            incident[v] += 1;
            incident[par] += 1;
        }
    }
    if let Some(r) = tree.root() {
        ensure!(
            (incident[r] % 2 == 1) == odd_set.contains(&r),
            Internal,
            "root parity mismatch"
        );
    }
    Ok(ParityEdgeSet { edges, incident })
}

fn validate(gb: &Graph, targets: &BlueTargets, p: Option<&Path>) -> Result<()> {
    ensure!(gb.is_connected(), Precondition, "bipartite graph is disconnected");
    for &v in targets.alpha.keys() {
        ensure!(v < gb.n(), Precondition, "blue vertex {v} out of range");
    }
    for &v in &targets.odd_red {
        ensure!(v < gb.n() && !targets.is_blue(v), Precondition, "R' vertex {v} is not red");
    }
    for e in gb.edges() {
        ensure!(
            targets.is_blue(e.lo()) != targets.is_blue(e.hi()),
            Precondition,
            "edge {e} does not join red and blue"
        );
    }
    let mut total = targets.odd_red.len() as i64;
    for (&v, &a) in &targets.alpha {
        let d = 2 * gb.degree(v) as i64;
        ensure!(
            (d - 1..=d + 1).contains(&a) && a >= 0,
            Precondition,
            "target {a} of blue {v} outside {{2deg-1, 2deg, 2deg+1}}"
        );
        total += a;
    }
    ensure!(total % 2 == 0, Precondition, "|R'| + sum of targets is odd");
    if let Some(p) = p {
        ensure!(p.len() >= 3, Precondition, "constrained path needs at least 3 vertices");
        ensure!(p.is_path_in(gb), Precondition, "{:?} is not a path", p.vertices());
        let (a, b) = (p.first().unwrap(), p.last().unwrap());
        ensure!(
            targets.is_blue(a) && targets.is_blue(b),
            Precondition,
            "constrained path must start and end blue"
        );
    }
    Ok(())
}

/// Weights `gb` so that blue sums equal their targets, red sums are odd
/// exactly on `R′`, and, when `p` is given, the end edges of `p` avoid the
/// weight that would block shifting them and no internal blue vertex of `p`
/// sees two equal odd weights on its path edges.
///
/// Within each blue vertex, unconstrained 1s go to the edges with the
/// smallest neighbor ids.
pub fn bipartite_parity_weighting(gb: &Graph, targets: &BlueTargets, p: Option<&Path>) -> Result<EdgeWeighting> {
    validate(gb, targets, p)?;
    let empty = Path::new(Vec::new());
    let tree = spanning_tree_with_path(gb, p.unwrap_or(&empty))?;
    let tree = match tree.vertices().first() {
        Some(&r) => tree.rooted(r)?,
        None => tree,
    };

    let mut odd_set = targets.odd_red.clone();
    for (&v, &a) in &targets.alpha {
        if a != 2 * gb.degree(v) as i64 {
            odd_set.insert(v);
        }
    }
    let eo = parity_edge_set(&tree, &odd_set)?;

    // forced weights from the path: edge -> weight
    let mut forced: BTreeMap<Edge, i64> = BTreeMap::new();
    if let Some(p) = p {
        let vs = p.vertices();
        let k = vs.len();
        for (end, nb) in [(vs[0], vs[1]), (vs[k - 1], vs[k - 2])] {
            let e = Edge::new(end, nb);
            if eo.edges.contains(&e) {
                let high = targets.alpha[&end] == 2 * gb.degree(end) as i64 + 1;
                forced.insert(e, if high { 3 } else { 1 });
            }
        }
        for i in 1..k - 1 {
            let v = vs[i];
            if !targets.is_blue(v) {
                continue;
            }
            let a = Edge::new(vs[i - 1], v);
            let b = Edge::new(v, vs[i + 1]);
            if eo.edges.contains(&a) && eo.edges.contains(&b) {
                let (lo, hi) = if vs[i - 1] < vs[i + 1] { (a, b) } else { (b, a) };
                forced.insert(lo, 1);
                forced.insert(hi, 3);
            }
        }
    }

    let mut w = EdgeWeighting::uniform(gb, 2);
    for (&v, &alpha) in &targets.alpha {
        let mine: Vec<Edge> = gb
            .neighbors(v)
            .iter()
            .map(|&r| Edge::new(v, r))
            .filter(|e| eo.edges.contains(e))
            .collect();
        let c = mine.len() as i64;
        let d = 2 * gb.degree(v) as i64;
        let mut ones = match alpha - d {
            -1 => (c + 1) / 2,
            1 => (c - 1) / 2,
            _ => c / 2,
        };
        let mut threes = c - ones;
        for e in &mine {
            match forced.get(e) {
                Some(1) => ones -= 1,
                Some(_) => threes -= 1,
                None => {}
            }
        }
        if ones < 0 || threes < 0 {
            return Err(Error::Internal(format!(
                "path constraints at blue {v} cannot be met by its {c} odd edges"
            )));
        }
        for e in &mine {
            let weight = match forced.get(e) {
                Some(&x) => x,
                None if ones > 0 => {
                    ones -= 1;
                    1
                }
                None => 3,
            };
            w.set(e.lo(), e.hi(), weight);
        }
    }
    Ok(w)
}

/// Checks every guarantee of [`bipartite_parity_weighting`], returning the
/// first violated one.
pub fn check_parity_properties(
    gb: &Graph,
    targets: &BlueTargets,
    p: Option<&Path>,
    w: &EdgeWeighting,
) -> std::result::Result<(), String> {
    if !w.is_total_on(gb) {
        return Err("weighting not total or outside {1,2,3}".into());
    }
    let sums = w.sums(gb.n());
    for v in 0..gb.n() {
        match targets.alpha.get(&v) {
            Some(&a) if sums[v] != a => return Err(format!("(iii) blue {v}: {} != {a}", sums[v])),
            Some(_) => {}
            None => {
                let odd = sums[v] % 2 != 0;
                if odd != targets.odd_red.contains(&v) {
                    return Err(format!("(i)/(ii) red {v} has sum {}", sums[v]));
                }
            }
        }
    }
    if let Some(p) = p {
        let vs = p.vertices();
        let k = vs.len();
        for (tag, end, nb) in [("(iv)", vs[0], vs[1]), ("(vi)", vs[k - 1], vs[k - 2])] {
            let x = w.weight(end, nb);
            let high = targets.alpha[&end] == 2 * gb.degree(end) as i64 + 1;
            if (high && x == 1) || (!high && x == 3) {
                return Err(format!("{tag} end edge {{{end},{nb}}} has weight {x}"));
            }
        }
        for i in 1..k - 1 {
            if targets.is_blue(vs[i]) {
                let sum = w.weight(vs[i - 1], vs[i]) + w.weight(vs[i], vs[i + 1]);
                if !(3..=5).contains(&sum) {
                    return Err(format!("(v) at {}: path weights sum to {sum}", vs[i]));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn tree_of(gr: &Graph) -> Tree {
        spanning_tree_with_path(gr, &Path::new(vec![])).unwrap().rooted(0).unwrap()
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn parity_star() {
        let star = g(3, &[(0, 1), (0, 2)]);
        let eo = parity_edge_set(&tree_of(&star), &set(&[1, 2])).unwrap();
        assert_eq!(eo.edges, [Edge::new(0, 1), Edge::new(0, 2)].into_iter().collect());
        assert_eq!(eo.incident[0], 2);
    }

    #[test]
    fn parity_empty_and_path() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert!(parity_edge_set(&tree_of(&p3), &set(&[])).unwrap().edges.is_empty());
        let eo = parity_edge_set(&tree_of(&p3), &set(&[0, 2])).unwrap();
        assert_eq!(eo.edges.len(), 2);
        assert_eq!(eo.incident[1], 2);
        assert!(parity_edge_set(&tree_of(&p3), &set(&[0])).is_err());
    }

    #[test]
    fn star_targets_forced() {
        // r = 0, b1 = 1, b2 = 2
        let star = g(3, &[(0, 1), (0, 2)]);
        let t = BlueTargets {
            alpha: [(1, 1), (2, 3)].into_iter().collect(),
            odd_red: set(&[]),
        };
        let w = bipartite_parity_weighting(&star, &t, None).unwrap();
        assert_eq!((w.weight(0, 1), w.weight(0, 2)), (1, 3));
        assert_eq!(w.sums(3)[0], 4);
    }

    #[test]
    fn path_with_odd_red() {
        // r1 = 0, b1 = 1, r2 = 2; alpha(b1) = 3 = 2deg - 1, R' = {r1}
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let t = BlueTargets {
            alpha: [(1, 3)].into_iter().collect(),
            odd_red: set(&[0]),
        };
        let w = bipartite_parity_weighting(&p3, &t, None).unwrap();
        assert_eq!((w.weight(0, 1), w.weight(1, 2)), (1, 2));
        assert!(check_parity_properties(&p3, &t, None, &w).is_ok());
    }

    /// Independent oracle for the path example: enumerate all 3^2 weightings.
    #[test]
    fn path_with_odd_red_is_unique() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let t = BlueTargets {
            alpha: [(1, 3)].into_iter().collect(),
            odd_red: set(&[0]),
        };
        let mut found = Vec::new();
        for a in 1..=3 {
            for b in 1..=3 {
                let w: EdgeWeighting = [(Edge::new(0, 1), a), (Edge::new(1, 2), b)].into_iter().collect();
                if check_parity_properties(&p3, &t, None, &w).is_ok() {
                    found.push((a, b));
                }
            }
        }
        assert_eq!(found, vec![(1, 2)]);
    }

    #[test]
    fn odd_total_is_rejected() {
        let star = g(3, &[(0, 1), (0, 2)]);
        let t = BlueTargets {
            alpha: [(1, 1), (2, 2)].into_iter().collect(),
            odd_red: set(&[]),
        };
        assert!(matches!(bipartite_parity_weighting(&star, &t, None), Err(Error::Precondition(_))));
    }

    #[test]
    fn constrained_path() {
        // C6 alternating: blue 0,2,4 / red 1,3,5, plus pendant... p = 0-1-2-3-4
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let p = Path::new(vec![0, 1, 2, 3, 4]);
        for a0 in 3..=5 {
            for a2 in 3..=5 {
                for a4 in 3..=5 {
                    let t = BlueTargets {
                        alpha: [(0, a0), (2, a2), (4, a4)].into_iter().collect(),
                        odd_red: if (a0 + a2 + a4) % 2 == 0 { set(&[]) } else { set(&[3]) },
                    };
                    let w = bipartite_parity_weighting(&c6, &t, Some(&p)).unwrap();
                    check_parity_properties(&c6, &t, Some(&p), &w).unwrap();
                }
            }
        }
    }
}
