use std::collections::{BTreeSet, VecDeque};

use crate::cutflow::Cut;
use crate::error::{ensure, Error, Result};
use crate::graph::{Edge, Graph};

/// Where an arc of the auxiliary network comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcKind {
    /// Cut edge traversed from its `S` endpoint to its `T` endpoint.
    CutForward,
    /// Cut edge traversed from `T` to `S`.
    CutBackward,
    /// `s → u` for an oriented plan edge `(u, v)`.
    Source,
    /// `v → t` for an oriented plan edge `(u, v)`.
    Sink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub kind: ArcKind,
}

/// Unit-capacity directed multigraph on the graph's vertices plus a source
/// and a sink.
///
/// Every cut edge contributes an arc in each direction; every oriented plan
/// edge `(u, v)` contributes `s → u` and `v → t`, never `u → v` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxNetwork {
    n: usize,
    arcs: Vec<Arc>,
    demand: usize,
}

impl AuxNetwork {
    pub fn source(&self) -> usize {
        self.n
    }

    pub fn sink(&self) -> usize {
        self.n + 1
    }

    /// Number of ordinary vertices; `s` and `t` come after them.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.n + 2
    }

    /// Arcs sorted by `(tail, head, kind)`.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// `|F|`, the flow value that saturates every source arc.
    pub fn demand(&self) -> usize {
        self.demand
    }

    /// Assembles a network from raw arcs; every capacity is 1.
    pub fn from_arcs(n: usize, mut arcs: Vec<Arc>) -> AuxNetwork {
        arcs.sort_unstable();
        let demand = arcs.iter().filter(|a| a.kind == ArcKind::Source).count();
        AuxNetwork { n, arcs, demand }
    }
}

/// Builds the auxiliary network for `cut`, the plan edges `f_edges`, and
/// their orientation `sigma`.
pub fn build_auxiliary_network(
    g: &Graph,
    cut: &Cut,
    f_edges: &[Edge],
    sigma: &[(usize, usize)],
) -> Result<AuxNetwork> {
    let f_set: BTreeSet<Edge> = f_edges.iter().copied().collect();
    ensure!(f_set.len() == f_edges.len(), Precondition, "duplicate edge in F");
    ensure!(sigma.len() == f_edges.len(), Precondition, "orientation must cover F exactly");
    let oriented: BTreeSet<Edge> = sigma.iter().map(|&(u, v)| Edge::new(u, v)).collect();
    ensure!(oriented == f_set, Precondition, "orientation must cover F exactly");
    for e in &f_set {
        ensure!(g.has_edge(e.lo(), e.hi()), Precondition, "{e} is not an edge");
        if !cut.same_side(e.lo(), e.hi()) {
            return Err(Error::Precondition(format!("F-edge {e} crosses the cut")));
        }
    }

    let (s, t) = (g.n(), g.n() + 1);
    let mut arcs = Vec::with_capacity(2 * (cut.size() + f_edges.len()));
    for e in g.edges() {
        let (u, v) = e.ends();
        if cut.same_side(u, v) {
            continue;
        }
        let (a, b) = if cut.in_s(u) { (u, v) } else { (v, u) };
        arcs.push(Arc { tail: a, head: b, kind: ArcKind::CutForward });
        arcs.push(Arc { tail: b, head: a, kind: ArcKind::CutBackward });
    }
    for &(u, v) in sigma {
        arcs.push(Arc { tail: s, head: u, kind: ArcKind::Source });
        arcs.push(Arc { tail: v, head: t, kind: ArcKind::Sink });
    }
    Ok(AuxNetwork::from_arcs(g.n(), arcs))
}

/// An integral flow: one unit or none on each arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    pub on_arc: Vec<bool>,
    pub value: usize,
}

impl Flow {
    /// Capacity and conservation check, plus agreement of `value` with the
    /// net outflow of the source.
    pub fn is_valid(&self, net: &AuxNetwork) -> bool {
        if self.on_arc.len() != net.arcs().len() {
            return false;
        }
        let mut balance = vec![0i64; net.node_count()];
        for (a, &used) in net.arcs().iter().zip(&self.on_arc) {
            if used {
                balance[a.tail] -= 1;
                balance[a.head] += 1;
            }
        }
        let (s, t) = (net.source(), net.sink());
        (0..net.node_count()).all(|v| v == s || v == t || balance[v] == 0)
            && -balance[s] == self.value as i64
            && balance[t] == self.value as i64
    }
}

/// Maximum `s`–`t` flow by breadth-first augmenting paths.
pub fn max_flow_integral(net: &AuxNetwork) -> Flow {
    let nodes = net.node_count();
    let arcs = net.arcs();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (i, a) in arcs.iter().enumerate() {
        out[a.tail].push(i);
        inc[a.head].push(i);
    }
    let mut on = vec![false; arcs.len()];
    let mut value = 0;
    let (s, t) = (net.source(), net.sink());
    // (arc, forward?) used to reach each node
    let mut via: Vec<Option<(usize, bool)>> = vec![None; nodes];
    loop {
        via.iter_mut().for_each(|x| *x = None);
        let mut seen = vec![false; nodes];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(v) = queue.pop_front() {
            for &i in &out[v] {
                let w = arcs[i].head;
                if !on[i] && !seen[w] {
                    seen[w] = true;
                    via[w] = Some((i, true));
                    if w == t {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
            for &i in &inc[v] {
                let w = arcs[i].tail;
                if on[i] && !seen[w] {
                    seen[w] = true;
                    via[w] = Some((i, false));
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            break;
        }
        let mut v = t;
        while v != s {
            let (i, forward) = via[v].expect("reached nodes have a predecessor");
            on[i] = forward;
            v = if forward { arcs[i].tail } else { arcs[i].head };
        }
        value += 1;
    }
    Flow { on_arc: on, value }
}

/// Nodes reachable from the source in the residual network of `flow`.
pub fn residual_reachable(net: &AuxNetwork, flow: &Flow) -> Vec<bool> {
    let nodes = net.node_count();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (i, a) in net.arcs().iter().enumerate() {
        if flow.on_arc[i] {
            out[a.head].push(a.tail);
        } else {
            out[a.tail].push(a.head);
        }
    }
    let mut seen = vec![false; nodes];
    seen[net.source()] = true;
    let mut queue = VecDeque::from([net.source()]);
    while let Some(v) = queue.pop_front() {
        for &w in &out[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// One `s → u_1 → … → u_m → t` path of a flow decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowPath {
    /// The ordinary vertices `u_1 … u_m`.
    pub interior: Vec<usize>,
    /// Arc indices in traversal order, starting at a source arc.
    pub arcs: Vec<usize>,
}

/// Splits a flow into `flow.value` arc-disjoint simple `s`–`t` paths.
///
/// Opposite arcs of the same cut edge that both carry flow are cancelled
/// first, and cycles met while tracing are discarded, so no path revisits
/// a vertex and no cut edge is used by two paths.
pub fn decompose_into_paths(net: &AuxNetwork, flow: &Flow) -> Vec<FlowPath> {
    let arcs = net.arcs();
    let mut avail = flow.on_arc.clone();

    let mut by_pair = std::collections::HashMap::new();
    for (i, a) in arcs.iter().enumerate() {
        if avail[i] && matches!(a.kind, ArcKind::CutForward | ArcKind::CutBackward) {
            by_pair.insert((a.tail, a.head), i);
        }
    }
    for (&(u, v), &i) in &by_pair {
        if u < v {
            if let Some(&j) = by_pair.get(&(v, u)) {
                avail[i] = false;
                avail[j] = false;
            }
        }
    }

    let nodes = net.node_count();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (i, a) in arcs.iter().enumerate() {
        if avail[i] {
            out[a.tail].push(i);
        }
    }
    // consumed from the front, so keep ascending arc order
    let mut cursor = vec![0usize; nodes];
    let (s, t) = (net.source(), net.sink());
    let mut on_stack = vec![usize::MAX; nodes];
    let mut paths = Vec::new();

    loop {
        let mut nodes_stack = vec![s];
        let mut arc_stack: Vec<usize> = Vec::new();
        on_stack[s] = 0;
        let mut cur = s;
        let found = loop {
            if cur == t {
                break true;
            }
            let next = loop {
                match out[cur].get(cursor[cur]) {
                    Some(&i) => {
                        cursor[cur] += 1;
                        if avail[i] {
                            break Some(i);
                        }
                    }
                    None => break None,
                }
            };
            let Some(i) = next else { break false };
            avail[i] = false;
            let w = arcs[i].head;
            if on_stack[w] != usize::MAX {
                // cycle back to w: drop it
                let keep = on_stack[w];
                for &v in &nodes_stack[keep + 1..] {
                    on_stack[v] = usize::MAX;
                }
                nodes_stack.truncate(keep + 1);
                arc_stack.truncate(keep);
                cur = w;
                continue;
            }
            on_stack[w] = nodes_stack.len();
            nodes_stack.push(w);
            arc_stack.push(i);
            cur = w;
        };
        for &v in &nodes_stack {
            on_stack[v] = usize::MAX;
        }
        if !found {
            break;
        }
        let interior = nodes_stack[1..nodes_stack.len() - 1].to_vec();
        paths.push(FlowPath { interior, arcs: arc_stack });
    }
    paths
}
