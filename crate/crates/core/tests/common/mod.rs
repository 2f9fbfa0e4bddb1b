#![allow(dead_code)]

use onetwothree::graph::{Edge, Graph};
use onetwothree::weighting::EdgeWeighting;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

/// Weighted degrees recomputed from scratch, ignoring the crate's helpers.
pub fn sums_of(g: &Graph, w: &EdgeWeighting) -> Vec<i64> {
    let mut s = vec![0; g.n()];
    for (e, x) in w.iter() {
        let (u, v) = e.ends();
        s[u] += x;
        s[v] += x;
    }
    s
}

/// `Ok` iff `w` weights exactly the edges of `g` with values in `{1,2,3}`
/// and no edge joins two vertices of equal weighted degree.
pub fn check_vertex_coloring(g: &Graph, w: &EdgeWeighting) -> Result<(), String> {
    if w.len() != g.m() {
        return Err(format!("{} weights for {} edges", w.len(), g.m()));
    }
    for &e in g.edges() {
        match w.get(e) {
            Some(1..=3) => {}
            other => return Err(format!("edge {e} has weight {other:?}")),
        }
    }
    let s = sums_of(g, w);
    match g.edges().iter().find(|e| s[e.lo()] == s[e.hi()]) {
        Some(e) => Err(format!("conflict on {e}: both sums are {}", s[e.lo()])),
        None => Ok(()),
    }
}

pub fn edge(u: usize, v: usize) -> Edge {
    Edge::new(u, v)
}

/// Small graphs on which `solve` takes a given branch, one per label.
pub const BRANCH_INSTANCES: &[(&str, usize, &[(usize, usize)])] = &[
    ("single-vertex", 1, &[]),
    ("deg1/odd-B", 3, &[(0, 1), (0, 2)]),
    ("deg1/even-B", 4, &[(0, 1), (0, 2), (0, 3)]),
    ("deg2-deg2/even-B-zy-red", 3, &[(0, 1), (0, 2), (1, 2)]),
    ("deg2-deg2/even-B-zy-blue", 5, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    ("deg2-deg2/odd-B-zy-blue", 4, &[(0, 2), (0, 3), (1, 2), (1, 3)]),
    ("deg2-deg2/aux-w", 5, &[(0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    ("B-odd/x-red", 6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)]),
    ("B-odd/y-red", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    ("B-odd/remaining-x", 5, &[(0, 1), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    ("B-odd/remaining-y", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4)]),
    ("B-odd/joint-q", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ("B-odd/rearrange-x", 5, &[(0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 4)]),
    ("B-odd/rearrange-tree-y", 5, &[(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    (
        "B-odd/rearrange-tree-x",
        7,
        &[(0, 1), (0, 4), (0, 6), (1, 4), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
    ),
    ("B-even/both-blue", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    ("B-even/remaining-x", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    ("B-even/rearrange-x", 5, &[(0, 2), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    ("B-even/remaining-y", 5, &[(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    ("B-even/remaining-y-even", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    ("B-even/edge-swap", 6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)]),
    ("remaining/no-conflict", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    ("remaining/raise-top", 6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)]),
    ("remaining/raise-top-extra", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    ("remaining/raise-second", 5, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)]),
    ("rearrange/no-conflict", 5, &[(0, 2), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
    ("rearrange/cycle-low", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (3, 4)]),
    (
        "rearrange/cycle-high",
        6,
        &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (3, 4)],
    ),
    ("rearrange/cycle-mixed", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4), (3, 4)]),
    (
        "joint-q/no-conflict",
        6,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3)],
    ),
    ("joint-q/mu-odd", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ("edge-swap/no-conflict", 6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)]),
    ("edge-swap/flip", 6, &[(0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
];

use onetwothree::generate::SplitMix64;
use onetwothree::graph::Path;
use onetwothree::parity::BlueTargets;
use std::collections::{BTreeSet, VecDeque};

/// A random connected bipartite instance with admissible targets and, half
/// of the time, a path between two blue vertices.
pub struct BipartiteInstance {
    pub graph: Graph,
    pub targets: BlueTargets,
    pub path: Option<Path>,
}

pub fn random_bipartite_instance(rng: &mut SplitMix64) -> BipartiteInstance {
    let n = 2 + rng.below(24) as usize;
    let mut blue: Vec<bool> = (0..n).map(|_| rng.below(2) == 0).collect();
    blue[0] = true;
    blue[1] = false;
    let mut edges = BTreeSet::new();
    edges.insert((0, 1));
    for v in 2..n {
        let earlier: Vec<usize> = (0..v).filter(|&u| blue[u] != blue[v]).collect();
        let u = earlier[rng.below(earlier.len() as u64) as usize];
        edges.insert((u, v));
    }
    let p_extra = rng.next_f64() * 0.5;
    for u in 0..n {
        for v in u + 1..n {
            if blue[u] != blue[v] && rng.next_f64() < p_extra {
                edges.insert((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();

    let mut targets = BlueTargets::default();
    let mut total = 0;
    for v in (0..n).filter(|&v| blue[v]) {
        let a = 2 * g.degree(v) as i64 + rng.below(3) as i64 - 1;
        total += a;
        targets.alpha.insert(v, a);
    }
    let reds: Vec<usize> = (0..n).filter(|&v| !blue[v]).collect();
    for &r in &reds {
        if rng.below(2) == 0 {
            targets.odd_red.insert(r);
        }
    }
    if (total + targets.odd_red.len() as i64) % 2 == 1 {
        let r = reds[rng.below(reds.len() as u64) as usize];
        if !targets.odd_red.remove(&r) {
            targets.odd_red.insert(r);
        }
    }

    let blues: Vec<usize> = (0..n).filter(|&v| blue[v]).collect();
    let path = if blues.len() >= 2 && rng.below(2) == 0 {
        let a = blues[rng.below(blues.len() as u64) as usize];
        let mut b = blues[rng.below(blues.len() as u64) as usize];
        if a == b {
            b = *blues.iter().find(|&&x| x != a).unwrap();
        }
        Some(shortest_path(&g, a, b))
    } else {
        None
    };
    BipartiteInstance { graph: g, targets, path }
}

fn shortest_path(g: &Graph, a: usize, b: usize) -> Path {
    let mut prev = vec![usize::MAX; g.n()];
    prev[a] = a;
    let mut q = VecDeque::from([a]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if prev[w] == usize::MAX {
                prev[w] = v;
                q.push_back(w);
            }
        }
    }
    let mut vs = vec![b];
    while *vs.last().unwrap() != a {
        vs.push(prev[*vs.last().unwrap()]);
    }
    vs.reverse();
    Path::new(vs)
}

/// Properties (i)–(vi) of the red–blue weighting, checked directly.
pub fn check_bipartite_properties(inst: &BipartiteInstance, w: &EdgeWeighting) -> Result<(), String> {
    let g = &inst.graph;
    let t = &inst.targets;
    for &e in g.edges() {
        match w.get(e) {
            Some(1..=3) => {}
            other => return Err(format!("edge {e} has weight {other:?}")),
        }
    }
    if w.len() != g.m() {
        return Err("weighting has extra edges".into());
    }
    let s = sums_of(g, w);
    for v in 0..g.n() {
        match t.alpha.get(&v) {
            Some(&a) if s[v] != a => return Err(format!("(iii) s({v}) = {} but alpha = {a}", s[v])),
            Some(_) => {}
            None if t.odd_red.contains(&v) && s[v] % 2 == 0 => return Err(format!("(ii) s({v}) even")),
            None if !t.odd_red.contains(&v) && s[v] % 2 != 0 => return Err(format!("(i) s({v}) odd")),
            None => {}
        }
    }
    if let Some(p) = &inst.path {
        let vs = p.vertices();
        let k = vs.len();
        let end_rule = |end: usize, nb: usize, tag: &str| {
            let x = w.get(edge(end, nb)).unwrap();
            let high = t.alpha[&end] == 2 * g.degree(end) as i64 + 1;
            if (high && x == 1) || (!high && x == 3) {
                Err(format!("{tag} end edge {end}-{nb} has weight {x}"))
            } else {
                Ok(())
            }
        };
        end_rule(vs[0], vs[1], "(iv)")?;
        end_rule(vs[k - 1], vs[k - 2], "(vi)")?;
        for i in 1..k - 1 {
            if t.alpha.contains_key(&vs[i]) {
                let sum = w.get(edge(vs[i - 1], vs[i])).unwrap() + w.get(edge(vs[i], vs[i + 1])).unwrap();
                if !(3..=5).contains(&sum) {
                    return Err(format!("(v) path sum {sum} at {}", vs[i]));
                }
            }
        }
    }
    Ok(())
}
