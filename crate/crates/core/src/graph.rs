//! Simple undirected graphs over dense vertex ids and the elementary
//! traversals used throughout the construction.
//!
//! Every traversal visits neighbors in ascending id order, so all outputs are
//! deterministic for a fixed input.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{ensure, Error, Result};

/// An unordered vertex pair, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn ends(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    ///
    /// # Panics
    ///
    /// Panics if `v` is not an endpoint.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            assert_eq!(self.1, v, "{v} is not an endpoint of {self}");
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            ensure!(u < n && v < n, InvalidGraph, "edge ({u},{v}) out of range for n={n}");
            ensure!(u != v, InvalidGraph, "self-loop at {u}");
            adj[u].push(v);
            adj[v].push(u);
            list.push(Edge::new(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge {}", w[0])));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { adj, edges: list })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Number of neighbors of `v` for which `pred` holds.
    pub fn degree_into<F: Fn(usize) -> bool>(&self, v: usize, pred: F) -> usize {
        self.adj[v].iter().filter(|&&w| pred(w)).count()
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() <= 1
    }

    /// The subgraph induced by `vertices`; local ids follow ascending host id.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut keep = vec![false; self.n()];
        for &v in vertices {
            keep[v] = true;
        }
        self.restricted(&keep, |_, _| true)
    }

    /// The bipartite subgraph `G(a, b)` on `a ∪ b` whose edges are exactly
    /// the host edges with one endpoint in each set.
    pub fn between(&self, a: &[usize], b: &[usize]) -> Subgraph {
        let mut side = vec![0u8; self.n()];
        for &v in a {
            side[v] = 1;
        }
        for &v in b {
            side[v] = 2;
        }
        let keep: Vec<bool> = side.iter().map(|&s| s != 0).collect();
        self.restricted(&keep, |u, v| side[u] != side[v])
    }

    fn restricted<F: Fn(usize, usize) -> bool>(&self, keep: &[bool], edge_ok: F) -> Subgraph {
        let mut to_local = vec![None; self.n()];
        let mut to_host = Vec::new();
        for (v, &k) in keep.iter().enumerate() {
            if k {
                to_local[v] = Some(to_host.len());
                to_host.push(v);
            }
        }
        let mut adj = vec![Vec::new(); to_host.len()];
        let mut edges = Vec::new();
        for e in &self.edges {
            let (u, v) = e.ends();
            if let (Some(lu), Some(lv)) = (to_local[u], to_local[v]) {
                if edge_ok(u, v) {
                    adj[lu].push(lv);
                    adj[lv].push(lu);
                    edges.push(Edge::new(lu, lv));
                }
            }
        }
        // host edges are sorted and the id map is monotone, so `edges` and
        // every adjacency list come out sorted
        Subgraph {
            graph: Graph { adj, edges },
            to_host,
            to_local,
        }
    }
}

/// A graph carved out of a host graph, with the id translation both ways.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_host: Vec<usize>,
    to_local: Vec<Option<usize>>,
}

impl Subgraph {
    pub fn local(&self, host: usize) -> Option<usize> {
        self.to_local.get(host).copied().flatten()
    }

    pub fn host(&self, local: usize) -> usize {
        self.to_host[local]
    }

    pub fn host_edge(&self, e: Edge) -> Edge {
        Edge::new(self.to_host[e.lo()], self.to_host[e.hi()])
    }
}

/// A sequence of distinct vertices, consecutive ones adjacent in the host.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Path {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Appends `v` at the end.
    pub fn extended(&self, v: usize) -> Path {
        let mut vs = self.0.clone();
        vs.push(v);
        Path(vs)
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Path {
        Path(self.0.iter().map(|&v| f(v)).collect())
    }

    /// True if the vertices are distinct and consecutive ones are adjacent.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in &self.0 {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// True if no edge of `g` joins two non-consecutive path vertices.
    pub fn is_chordless_in(&self, g: &Graph) -> bool {
        let vs = &self.0;
        (0..vs.len()).all(|i| (i + 2..vs.len()).all(|j| !g.has_edge(vs[i], vs[j])))
    }
}

impl From<Vec<usize>> for Path {
    fn from(v: Vec<usize>) -> Path {
        Path(v)
    }
}

/// A tree given by its edges over a subset of host vertices, optionally rooted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    vertices: Vec<usize>,
    edges: Vec<Edge>,
    root: Option<usize>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    // children before parents
    post_order: Vec<usize>,
}

impl Tree {
    /// Builds a tree from its vertex set and edges, checking acyclicity and
    /// connectivity.
    pub fn new(host_n: usize, vertices: Vec<usize>, mut edges: Vec<Edge>) -> Result<Tree> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        edges.sort_unstable();
        ensure!(
            vertices.is_empty() || edges.len() + 1 == vertices.len(),
            InvalidGraph,
            "{} edges cannot form a tree on {} vertices",
            edges.len(),
            vertices.len()
        );
        let mut tree = Tree {
            vertices,
            edges,
            root: None,
            parent: vec![None; host_n],
            depth: vec![0; host_n],
            post_order: Vec::new(),
        };
        if let Some(&r) = tree.vertices.first() {
            tree.root_at(r)?;
            tree.root = None;
        }
        Ok(tree)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Parent of `v` in the current rooting.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Re-roots the tree at `r`.
    pub fn rooted(mut self, r: usize) -> Result<Tree> {
        self.root_at(r)?;
        Ok(self)
    }

    /// Vertices ordered so that every vertex precedes its parent.
    pub fn leaves_to_root(&self) -> &[usize] {
        &self.post_order
    }

    fn root_at(&mut self, r: usize) -> Result<()> {
        ensure!(self.vertices.binary_search(&r).is_ok(), Precondition, "root {r} not in tree");
        let host_n = self.parent.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); host_n];
        for e in &self.edges {
            adj[e.lo()].push(e.hi());
            adj[e.hi()].push(e.lo());
        }
        let mut seen = vec![false; host_n];
        let mut order = Vec::with_capacity(self.vertices.len());
        let mut queue = VecDeque::from([r]);
        seen[r] = true;
        self.parent.iter_mut().for_each(|p| *p = None);
        self.depth[r] = 0;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    self.parent[w] = Some(v);
                    self.depth[w] = self.depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        ensure!(
            order.len() == self.vertices.len(),
            InvalidGraph,
            "tree edges do not connect all {} vertices",
            self.vertices.len()
        );
        order.reverse();
        self.post_order = order;
        self.root = Some(r);
        Ok(())
    }

    /// The unique tree path from `u` to `v`.
    pub fn path_between(&self, u: usize, v: usize) -> Path {
        let (mut a, mut b) = (u, v);
        let mut front = vec![a];
        let mut back = vec![b];
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("non-root has a parent");
            front.push(a);
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("non-root has a parent");
            back.push(b);
        }
        while a != b {
            a = self.parent[a].expect("non-root has a parent");
            b = self.parent[b].expect("non-root has a parent");
            front.push(a);
            back.push(b);
        }
        back.pop();
        front.extend(back.into_iter().rev());
        Path(front)
    }
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Shortest `from`–`to` path whose internal vertices avoid `forbidden_internal`.
///
/// The search runs in the subgraph induced by the non-forbidden vertices
/// plus the two endpoints, so the result is chordless in that subgraph.
/// The endpoints themselves may belong to the forbidden set.
pub fn chordless_path(
    g: &Graph,
    from: usize,
    to: usize,
    forbidden_internal: &[usize],
) -> Option<Path> {
    let mut blocked = vec![false; g.n()];
    for &v in forbidden_internal {
        blocked[v] = true;
    }
    blocked[from] = false;
    blocked[to] = false;
    bfs_path(g, from, to, |v| !blocked[v])
}

pub(crate) fn bfs_path<F: Fn(usize) -> bool>(
    g: &Graph,
    from: usize,
    to: usize,
    allowed: F,
) -> Option<Path> {
    if from == to {
        return Some(Path(vec![from]));
    }
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if parent[w] != usize::MAX || !allowed(w) {
                continue;
            }
            parent[w] = v;
            if w == to {
                let mut vs = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    vs.push(cur);
                }
                vs.reverse();
                return Some(Path(vs));
            }
            queue.push_back(w);
        }
    }
    None
}

/// A spanning tree of the connected graph `g` containing every edge of `p`.
///
/// The edges of `p` are taken first, then the remaining edges in ascending
/// order, skipping any that would close a cycle.
pub fn spanning_tree_with_path(g: &Graph, p: &Path) -> Result<Tree> {
    ensure!(p.is_path_in(g), Precondition, "{:?} is not a path of the graph", p.vertices());
    let mut uf = UnionFind::new(g.n());
    let mut edges = Vec::with_capacity(g.n().saturating_sub(1));
    for e in p.edges().chain(g.edges().iter().copied()) {
        if uf.union(e.lo(), e.hi()) {
            edges.push(e);
        }
    }
    ensure!(
        g.n() == 0 || edges.len() + 1 == g.n(),
        Precondition,
        "graph is disconnected"
    );
    Tree::new(g.n(), (0..g.n()).collect(), edges)
}

/// An edge `(x, y)` whose two endpoints can be deleted together without
/// disconnecting the graph.
///
/// Runs a depth-first search from vertex 0, takes a deepest vertex `x` of the
/// search tree (smallest id on ties) and its tree parent `y`.
pub fn removable_adjacent_pair(g: &Graph) -> Result<(usize, usize)> {
    let n = g.n();
    ensure!(n >= 3, Precondition, "need at least 3 vertices, got {n}");
    ensure!(g.is_connected(), Precondition, "graph is disconnected");
    ensure!(
        g.min_degree().unwrap_or(0) >= 2,
        Precondition,
        "minimum degree below 2"
    );

    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    visited[0] = true;
    while let Some(top) = stack.last_mut() {
        let (v, idx) = *top;
        if let Some(&w) = g.neighbors(v).get(idx) {
            top.1 += 1;
            if !visited[w] {
                visited[w] = true;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                stack.push((w, 0));
            }
        } else {
            stack.pop();
        }
    }
    let max_depth = *depth.iter().max().expect("n >= 3");
    let x = (0..n).find(|&v| depth[v] == max_depth).expect("some vertex attains the max");
    let y = parent[x];

    let rest: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
    if !g.induced(&rest).graph.is_connected() {
        return Err(Error::Internal(format!(
            "removing ({x},{y}) disconnects the graph"
        )));
    }
    Ok((x, y))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
