//! Assembly of a full vertex-coloring weighting with weights `{1, 2, 3}`.
//!
//! Three constructions turn a red/blue partition into a weighting:
//!
//! * [`weight_good_partition`]: the partition covers the whole graph;
//! * [`weight_with_anchor`]: one vertex `v0` is left out and has at least two
//!   red neighbors, whose conflicts with `v0` are fixed by raising some
//!   `v0`–red edges from 1 to 3;
//! * [`weight_with_pendant`]: `v0` has a single red neighbor `u0`, and a
//!   conflict with it is fixed by shifting weights around a cycle through
//!   `v0`.
//!
//! [`solve`] reduces every connected graph other than `K2` to one of them,
//! sometimes through a small auxiliary graph, and records the branch taken.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{ensure, Error, Result};
use crate::graph::{
    bfs_path, chordless_path, connected_components, removable_adjacent_pair, spanning_tree_with_path,
    Edge, Graph, Path,
};
use crate::inner::{inner_weighting, Handicap, InnerReport};
use crate::parity::{bipartite_parity_weighting, BlueTargets};
use crate::partition::{alternating_independent_set, check_good, Partition};
use crate::verify::verify;
use crate::weighting::EdgeWeighting;

macro_rules! branches {
    ($($(#[$doc:meta])* $variant:ident => $label:literal,)+) => {
        /// A labeled step of [`solve`]: either the case that handled a
        /// component or the conflict repair applied afterwards.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Branch {
            $($(#[$doc])* $variant,)+
        }

        impl Branch {
            /// Every label [`solve`] can emit, in a fixed order.
            pub const ALL: &'static [Branch] = &[$(Branch::$variant,)+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(Branch::$variant => $label,)+
                }
            }

            pub fn from_label(label: &str) -> Option<Branch> {
                match label {
                    $($label => Some(Branch::$variant),)+
                    _ => None,
                }
            }
        }
    };
}

branches! {
    /// A component with one vertex.
    SingleVertex => "single-vertex",
    /// Degree-1 vertex `x`; it joins an odd blue side.
    Deg1OddB => "deg1/odd-B",
    /// Degree-1 vertex `x`; the rest is weighted alone and `xy` gets 2.
    Deg1EvenB => "deg1/even-B",
    Deg2EvenBZyRed => "deg2-deg2/even-B-zy-red",
    Deg2EvenBZyBlue => "deg2-deg2/even-B-zy-blue",
    Deg2OddBZyBlue => "deg2-deg2/odd-B-zy-blue",
    /// A pendant vertex `w` stands in for `x` and `y`.
    Deg2AuxW => "deg2-deg2/aux-w",
    OddXRed => "B-odd/x-red",
    OddYRed => "B-odd/y-red",
    OddRemainingX => "B-odd/remaining-x",
    OddRemainingY => "B-odd/remaining-y",
    /// `x` and `y` share their only red neighbor `q`.
    OddJointQ => "B-odd/joint-q",
    OddRearrangeX => "B-odd/rearrange-x",
    OddRearrangeTreeY => "B-odd/rearrange-tree-y",
    OddRearrangeTreeX => "B-odd/rearrange-tree-x",
    EvenBothBlue => "B-even/both-blue",
    EvenRemainingX => "B-even/remaining-x",
    EvenRearrangeX => "B-even/rearrange-x",
    EvenRemainingY => "B-even/remaining-y",
    EvenRemainingYEven => "B-even/remaining-y-even",
    /// `xy` and `yz_y` are replaced by `xz_y` for the construction.
    EvenEdgeSwap => "B-even/edge-swap",
    RemainingClear => "remaining/no-conflict",
    /// The `x` top edges of `v0` are raised.
    RemainingRaiseTop => "remaining/raise-top",
    /// The `x + 1` top edges of `v0` are raised.
    RemainingRaiseTopExtra => "remaining/raise-top-extra",
    /// Only the edge to the second-smallest neighbor is raised.
    RemainingRaiseSecond => "remaining/raise-second",
    RearrangeClear => "rearrange/no-conflict",
    RearrangeCycleLow => "rearrange/cycle-low",
    RearrangeCycleHigh => "rearrange/cycle-high",
    RearrangeCycleMixed => "rearrange/cycle-mixed",
    JointQClear => "joint-q/no-conflict",
    JointQMuOdd => "joint-q/mu-odd",
    EdgeSwapClear => "edge-swap/no-conflict",
    EdgeSwapFlip => "edge-swap/flip",
}

impl Branch {
    /// True for labels naming a case rather than a repair.
    pub fn is_case(self) -> bool {
        self <= Branch::EvenEdgeSwap
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What happened on one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Vertex ids of the component in the input graph, ascending.
    pub vertices: Vec<usize>,
    pub case: Branch,
    pub repair: Option<Branch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub weighting: EdgeWeighting,
    pub sums: Vec<i64>,
    /// Case and repair labels of every component, in component order.
    pub branch_trace: Vec<Branch>,
    pub components: Vec<ComponentReport>,
    /// One entry per call of the inner weighting.
    pub inner_runs: Vec<InnerReport>,
}

#[derive(Default)]
struct Trace {
    repair: Option<Branch>,
    inner: Vec<InnerReport>,
}

fn ensure_coloring(g: &Graph, w: &EdgeWeighting, stage: &str) -> Result<()> {
    ensure!(w.is_total_on(g), Internal, "{stage}: weighting is not total on {{1,2,3}}");
    let bad = verify(g, w)?;
    ensure!(bad.is_empty(), Internal, "{stage}: conflicts on {bad:?}");
    Ok(())
}

/// Weights of `G[B]` plus designated colors and partial sums, in host ids.
struct BlueStage {
    w: EdgeWeighting,
    f: Vec<i64>,
    s: Vec<i64>,
}

fn blue_stage(tr: &mut Trace, g: &Graph, blue: &[usize], h: impl Fn(usize) -> i64) -> Result<BlueStage> {
    let sub = g.induced(blue);
    let handicap = Handicap::new(sub.to_host.iter().map(|&v| h(v)).collect())?;
    let run = inner_weighting(&sub.graph, &handicap)?;
    tr.inner.push(run.report.clone());
    let w = run.weighting.lift(&sub);
    let mut f = vec![0; g.n()];
    for (l, &v) in sub.to_host.iter().enumerate() {
        f[v] = run.colors.get(l);
    }
    let s = w.sums(g.n());
    Ok(BlueStage { w, f, s })
}

fn red_blue_stage(
    g: &Graph,
    part: &Partition,
    alpha: &BTreeMap<usize, i64>,
    odd_red: &BTreeSet<usize>,
    p: Option<&Path>,
) -> Result<EdgeWeighting> {
    let sub = g.between(&part.red_vec(), &part.blue_vec());
    let local = |v: usize| sub.local(v).expect("vertex of the partition");
    let targets = BlueTargets {
        alpha: alpha.iter().map(|(&v, &a)| (local(v), a)).collect(),
        odd_red: odd_red.iter().map(|&v| local(v)).collect(),
    };
    let p = p.map(|p| p.map(local));
    Ok(bipartite_parity_weighting(&sub.graph, &targets, p.as_ref())?.lift(&sub))
}

/// A weighting for a good partition of the whole graph: blue sums odd, red
/// sums even, and adjacent blue vertices apart.
///
/// # Examples
///
/// ```
/// use onetwothree::graph::Graph;
/// use onetwothree::partition::Partition;
/// use onetwothree::solver::weight_good_partition;
/// use onetwothree::verify::verify;
///
/// let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
/// let part = Partition::from_red(&c4, [0, 2].into());
/// let w = weight_good_partition(&c4, &part).unwrap();
/// assert!(verify(&c4, &w).unwrap().is_empty());
/// let s = w.sums(4);
/// assert!(s[0] % 2 == 0 && s[1] % 2 == 1);
/// ```
pub fn weight_good_partition(g: &Graph, part: &Partition) -> Result<EdgeWeighting> {
    basic(&mut Trace::default(), g, part)
}

fn basic(tr: &mut Trace, g: &Graph, part: &Partition) -> Result<EdgeWeighting> {
    ensure!(part.anchor.is_none(), Precondition, "partition must not have an anchor");
    ensure!(check_good(g, part), Precondition, "partition is not good");
    let blue = part.blue_vec();
    let b = blue_stage(tr, g, &blue, |v| 2 * part.red_degree(g, v) as i64)?;
    let alpha = blue.iter().map(|&v| (v, b.f[v] - b.s[v])).collect();
    let w2 = red_blue_stage(g, part, &alpha, &BTreeSet::new(), None)?;
    let mut w = b.w;
    w.absorb(&w2);
    if cfg!(debug_assertions) {
        let s = w.sums(g.n());
        for v in 0..g.n() {
            ensure!((s[v] % 2 == 0) == part.is_red(v), Internal, "parity of {v} is off");
        }
    }
    ensure_coloring(g, &w, "good partition")?;
    Ok(w)
}

fn anchored(g: &Graph, v0: usize, part: &Partition) -> Result<Partition> {
    ensure!(v0 < g.n(), Precondition, "anchor {v0} out of range");
    ensure!(
        part.anchor.is_none() || part.anchor == Some(v0),
        Precondition,
        "partition is anchored elsewhere"
    );
    ensure!(
        !part.is_red(v0) && !part.is_blue(v0),
        Precondition,
        "anchor {v0} must be neither red nor blue"
    );
    let part = part.clone().with_anchor(v0);
    ensure!(check_good(g, &part), Precondition, "partition is not good on G - {v0}");
    Ok(part)
}

/// A vertex-coloring weighting when `v0` lies outside a good partition of
/// `G - v0`, has at least two red neighbors, and has a blue neighbor if its
/// red degree is odd. The sum at `v0` is even.
pub fn weight_with_anchor(g: &Graph, v0: usize, part: &Partition) -> Result<EdgeWeighting> {
    anchor(&mut Trace::default(), g, v0, part)
}

fn anchor(tr: &mut Trace, g: &Graph, v0: usize, part: &Partition) -> Result<EdgeWeighting> {
    let part = anchored(g, v0, part)?;
    let reds: Vec<usize> = g.neighbors(v0).iter().copied().filter(|&v| part.is_red(v)).collect();
    let blues: Vec<usize> = g.neighbors(v0).iter().copied().filter(|&v| part.is_blue(v)).collect();
    let k = reds.len();
    ensure!(k >= 2, Precondition, "anchor {v0} has red degree {k} < 2");
    ensure!(
        k.is_multiple_of(2) || !blues.is_empty(),
        Precondition,
        "anchor {v0} has odd red degree and no blue neighbor"
    );

    let blue = part.blue_vec();
    let b = blue_stage(tr, g, &blue, |v| 2 * (g.degree(v) - part.blue_degree(g, v)) as i64)?;
    let u0 = (k % 2 == 1).then(|| blues[0]);
    let alpha = blue
        .iter()
        .map(|&v| {
            let a = if Some(v) == u0 {
                2 * part.red_degree(g, v) as i64
            } else if g.has_edge(v, v0) {
                b.f[v] - b.s[v] - 2
            } else {
                b.f[v] - b.s[v]
            };
            (v, a)
        })
        .collect();
    let odd_red: BTreeSet<usize> = reds.iter().copied().collect();
    let w2 = red_blue_stage(g, &part, &alpha, &odd_red, None)?;
    let s2 = w2.sums(g.n());

    let mut w = b.w;
    w.absorb(&w2);
    for &r in &reds {
        w.set(v0, r, 1);
    }
    for &v in &blues {
        if Some(v) == u0 {
            let x = b.f[v] - b.s[v] - s2[v];
            ensure!(x == 1 || x == 3, Internal, "edge {v0}-{v} would need weight {x}");
            w.set(v0, v, x);
        } else {
            w.set(v0, v, 2);
        }
    }

    let s = w.sums(g.n());
    let s0 = s[v0];
    let mut order = reds;
    order.sort_by_key(|&v| (s[v], v));
    if order.iter().all(|&v| s[v] != s0) {
        tr.repair = Some(Branch::RemainingClear);
    } else {
        let taken: BTreeSet<i64> = order.iter().map(|&v| s[v]).collect();
        let x = (1..=k).find(|&x| !taken.contains(&(s0 + 2 * x as i64))).ok_or_else(|| {
            Error::Internal(format!("anchor {v0}: no free even value within {k} steps"))
        })?;
        let target = s0 + 2 * x as i64;
        // 1-based index of the last neighbor below the target
        let i_prime = order.iter().rposition(|&v| s[v] < target).expect("some neighbor equals s(v0)") + 1;
        if i_prime <= k - x {
            for &v in &order[k - x..] {
                w.set(v0, v, 3);
            }
            tr.repair = Some(Branch::RemainingRaiseTop);
        } else if x < k {
            for &v in &order[k - x - 1..] {
                w.set(v0, v, 3);
            }
            tr.repair = Some(Branch::RemainingRaiseTopExtra);
        } else {
            w.set(v0, order[1], 3);
            tr.repair = Some(Branch::RemainingRaiseSecond);
        }
    }
    ensure!(w.sums(g.n())[v0] % 2 == 0, Internal, "sum at anchor {v0} is odd");
    ensure_coloring(g, &w, "anchor")?;
    Ok(w)
}

/// A vertex-coloring weighting when `v0` lies outside a good partition of
/// `G - v0`, its only red neighbor is `u0`, and `p` is a red–blue
/// alternating path of at least three vertices between two blue neighbors
/// of `v0` that avoids `u0`.
pub fn weight_with_pendant(g: &Graph, v0: usize, u0: usize, part: &Partition, p: &Path) -> Result<EdgeWeighting> {
    pendant(&mut Trace::default(), g, v0, u0, part, p)
}

fn pendant(tr: &mut Trace, g: &Graph, v0: usize, u0: usize, part: &Partition, p: &Path) -> Result<EdgeWeighting> {
    let part = anchored(g, v0, part)?;
    let reds: Vec<usize> = g.neighbors(v0).iter().copied().filter(|&v| part.is_red(v)).collect();
    ensure!(reds == [u0], Precondition, "red neighbors of {v0} are {reds:?}, expected [{u0}]");
    ensure!(p.len() >= 3, Precondition, "path needs at least 3 vertices");
    ensure!(p.is_path_in(g), Precondition, "{:?} is not a path", p.vertices());
    ensure!(!p.contains(u0), Precondition, "path passes through {u0}");
    ensure!(
        p.edges().all(|e| part.is_red(e.lo()) != part.is_red(e.hi()) && !e.contains(v0)),
        Precondition,
        "path does not alternate between red and blue"
    );
    for end in [p.first().unwrap(), p.last().unwrap()] {
        ensure!(
            part.is_blue(end) && g.has_edge(v0, end),
            Precondition,
            "path end {end} is not a blue neighbor of {v0}"
        );
    }

    let blue = part.blue_vec();
    let b = blue_stage(tr, g, &blue, |v| 2 * (g.degree(v) - part.blue_degree(g, v)) as i64)?;
    let beta = |v: usize| b.f[v] - b.s[v] - 2 * part.red_degree(g, v) as i64;
    let mut p = p.clone();
    let (b1, bk) = (beta(p.first().unwrap()), beta(p.last().unwrap()));
    ensure!(
        [b1, bk].iter().all(|&x| x == 1 || x == 3),
        Internal,
        "path ends have excess {b1}, {bk}"
    );
    let mixed = b1 != bk;
    if mixed && b1 == 1 {
        p = p.reversed();
    }
    let vs = p.vertices().to_vec();
    let (v1, vk) = (vs[0], vs[vs.len() - 1]);
    let (b1, bk) = (beta(v1), beta(vk));

    let mut w2 = EdgeWeighting::new();
    for &v in g.neighbors(v0) {
        w2.set(v0, v, 2);
    }
    let mut odd_red = BTreeSet::new();
    if mixed {
        w2.set(v0, u0, 3);
        w2.set(v0, v1, 3);
        odd_red.insert(u0);
    }
    let alpha = blue
        .iter()
        .map(|&v| {
            let at_v0 = if g.has_edge(v, v0) { w2.weight(v0, v) } else { 0 };
            (v, b.f[v] - b.s[v] - at_v0)
        })
        .collect();
    let w3 = red_blue_stage(g, &part, &alpha, &odd_red, Some(&p))?;

    let mut w = b.w;
    w.absorb(&w2);
    w.absorb(&w3);
    let s = w.sums(g.n());
    if s[v0] != s[u0] {
        tr.repair = Some(Branch::RearrangeClear);
    } else {
        let k = vs.len();
        let shift = |w: &mut EdgeWeighting, a: usize, b: usize, d: i64| {
            w.shift(a, b, d).map_err(|e| Error::Internal(format!("cycle repair: {e}")))
        };
        let (ends, delta, label) = match (b1, bk) {
            (1, 1) => ((1, 1), 1, Branch::RearrangeCycleLow),
            (3, 3) => ((3, 3), -1, Branch::RearrangeCycleHigh),
            _ => ((2, 1), 1, Branch::RearrangeCycleMixed),
        };
        w.set(v0, v1, ends.0);
        w.set(v0, vk, ends.1);
        shift(&mut w, vs[0], vs[1], delta)?;
        shift(&mut w, vs[k - 2], vs[k - 1], delta)?;
        for j in (2..k.saturating_sub(2)).step_by(2) {
            let (a, c) = (w.weight(vs[j - 1], vs[j]), w.weight(vs[j], vs[j + 1]));
            let up_first = if a <= 2 && c >= 2 { 1 } else { -1 };
            shift(&mut w, vs[j - 1], vs[j], up_first)?;
            shift(&mut w, vs[j], vs[j + 1], -up_first)?;
        }
        ensure!((w.sums(g.n())[v0] - s[v0]).abs() == 2, Internal, "cycle repair moved s(v0) wrongly");
        tr.repair = Some(label);
    }
    ensure_coloring(g, &w, "pendant")?;
    Ok(w)
}

/// Red set from the alternating construction on `G[keep]`, in host ids.
fn divide_in(g: &Graph, keep: &[usize], p: &Path, include_first: bool) -> Result<BTreeSet<usize>> {
    let sub = g.induced(keep);
    let local = p.map(|v| sub.local(v).expect("path inside the kept set"));
    let red = alternating_independent_set(&sub.graph, &local, include_first)?;
    Ok(red.into_iter().map(|v| sub.host(v)).collect())
}

/// Runs the good-partition construction on `aux[verts]` with the given red
/// set; the result is in `aux` ids.
fn basic_on(tr: &mut Trace, aux: &Graph, verts: &[usize], red: &BTreeSet<usize>) -> Result<EdgeWeighting> {
    let sub = aux.induced(verts);
    let local_red = red.iter().map(|&v| sub.local(v).expect("red vertex kept")).collect();
    let part = Partition::from_red(&sub.graph, local_red);
    Ok(basic(tr, &sub.graph, &part)?.lift(&sub))
}

fn with_red(red: &BTreeSet<usize>, extra: &[usize]) -> BTreeSet<usize> {
    let mut r = red.clone();
    r.extend(extra);
    r
}

/// `G` with vertex `n` appended and the given edge changes.
fn aux_graph(g: &Graph, extra_vertex: bool, drop: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Graph> {
    let dropped: BTreeSet<_> = drop.iter().map(|&(u, v)| Edge::new(u, v)).collect();
    let edges = g
        .edges()
        .iter()
        .filter(|e| !dropped.contains(e))
        .map(|e| e.ends())
        .chain(add.iter().copied());
    Graph::from_edges(g.n() + usize::from(extra_vertex), edges)
}

/// Keeps the weights of `aux` on edges that exist in `g`.
fn restrict(g: &Graph, w: &EdgeWeighting) -> EdgeWeighting {
    w.iter().filter(|(e, _)| e.hi() < g.n() && g.has_edge(e.lo(), e.hi())).collect()
}

fn gap(g: &Graph, detail: String) -> Error {
    Error::TheoryGap {
        component: (0..g.n()).collect(),
        detail,
    }
}

fn check_sums_kept(g: &Graph, before: &[i64], w: &EdgeWeighting, changed: &[usize], what: &str) -> Result<()> {
    let after = w.sums(g.n());
    for v in 0..g.n() {
        ensure!(
            changed.contains(&v) || before[v] == after[v],
            Internal,
            "{what} changed the sum of {v}"
        );
    }
    Ok(())
}

/// Solves a connected graph, returning its weighting and case label.
fn solve_connected(tr: &mut Trace, g: &Graph) -> Result<(EdgeWeighting, Branch)> {
    let n = g.n();
    if n == 1 {
        return Ok((EdgeWeighting::new(), Branch::SingleVertex));
    }
    if n == 2 {
        return Err(Error::IsolatedEdge { component: vec![0, 1] });
    }
    let all: Vec<usize> = (0..n).collect();
    let blue_without = |skip: &[usize], red: &BTreeSet<usize>| -> BTreeSet<usize> {
        all.iter().copied().filter(|v| !red.contains(v) && !skip.contains(v)).collect()
    };

    if let Some(x) = (0..n).find(|&v| g.degree(v) == 1) {
        let y = g.neighbors(x)[0];
        let rest: Vec<usize> = all.iter().copied().filter(|&v| v != x).collect();
        let red = divide_in(g, &rest, &Path::new(vec![y]), true)?;
        let blue_count = rest.len() - red.len();
        if blue_count % 2 == 1 {
            let w = basic_on(tr, g, &all, &red)?;
            return Ok((w, Branch::Deg1OddB));
        }
        let mut w = basic_on(tr, g, &rest, &red)?;
        w.set(x, y, 2);
        return Ok((w, Branch::Deg1EvenB));
    }

    let (mut x, mut y) = removable_adjacent_pair(g)?;
    let inner: Vec<usize> = all.iter().copied().filter(|&v| v != x && v != y).collect();
    let other = |a: usize, b: usize| *g.neighbors(a).iter().find(|&&v| v != b).expect("degree >= 2");

    if g.degree(x) == 2 && g.degree(y) == 2 {
        let (zx, zy) = (other(x, y), other(y, x));
        let red = divide_in(g, &inner, &Path::new(vec![zx]), true)?;
        let odd = (inner.len() - red.len()) % 2 == 1;
        let zy_red = red.contains(&zy);
        return match (odd, zy_red) {
            (false, true) => Ok((basic_on(tr, g, &all, &red)?, Branch::Deg2EvenBZyRed)),
            (false, false) => {
                let red = with_red(&red, &[y]);
                let part = Partition::new(red.clone(), blue_without(&[x], &red));
                Ok((anchor(tr, g, x, &part)?, Branch::Deg2EvenBZyBlue))
            }
            (true, false) => Ok((basic_on(tr, g, &all, &with_red(&red, &[y]))?, Branch::Deg2OddBZyBlue)),
            (true, true) => {
                let wv = n;
                let aux = aux_graph(g, true, &[], &[(wv, zx)])?;
                let mut verts = inner.clone();
                verts.push(wv);
                let wt = basic_on(tr, &aux, &verts, &red)?;
                let mut w = restrict(g, &wt);
                w.set(y, zy, 2);
                w.set(x, zx, 1);
                let szx = w.sum_at(g, zx);
                w.set(x, y, if szx == 2 { 3 } else { 1 });
                Ok((w, Branch::Deg2AuxW))
            }
        };
    }

    if g.degree(x) <= 2 {
        std::mem::swap(&mut x, &mut y);
    }
    let (zx, zy, p) = find_triple(g, x, y, &inner)?;
    let red = divide_in(g, &inner, &p, false)?;
    let blue_odd = (inner.len() - red.len()) % 2 == 1;
    let red_nbrs = |v: usize| -> Vec<usize> { g.neighbors(v).iter().copied().filter(|w| red.contains(w)).collect() };
    let (rx, ry) = (red_nbrs(x), red_nbrs(y));

    if blue_odd {
        if rx.is_empty() {
            return Ok((basic_on(tr, g, &all, &with_red(&red, &[x]))?, Branch::OddXRed));
        }
        if ry.is_empty() {
            return Ok((basic_on(tr, g, &all, &with_red(&red, &[y]))?, Branch::OddYRed));
        }
        if rx.len() + ry.len() >= 3 {
            let (v0, label) = if rx.len() >= 2 { (x, Branch::OddRemainingX) } else { (y, Branch::OddRemainingY) };
            let part = Partition::new(red.clone(), blue_without(&[v0], &red));
            return Ok((anchor(tr, g, v0, &part)?, label));
        }
        let (zrx, zry) = (rx[0], ry[0]);
        if zrx == zry {
            return joint_q(tr, g, x, y, zrx, &red).map(|w| (w, Branch::OddJointQ));
        }
        if red.contains(&zy) {
            let part = Partition::new(red.clone(), blue_without(&[x], &red));
            let w = pendant(tr, g, x, zrx, &part, &p.extended(y))?;
            return Ok((w, Branch::OddRearrangeX));
        }
        let gb = g.between(&red.iter().copied().collect::<Vec<_>>(), &blue_without(&[x, y], &red).into_iter().collect::<Vec<_>>());
        let local = |v: usize| gb.local(v).expect("vertex of G''");
        let tree = spanning_tree_with_path(&gb.graph, &p.map(local))?;
        let path1 = tree.path_between(local(zy), local(zrx)).map(|v| gb.host(v));
        if !path1.contains(zry) {
            let part = Partition::new(red.clone(), blue_without(&[y], &red));
            let w = pendant(tr, g, y, zry, &part, &path1.extended(x))?;
            return Ok((w, Branch::OddRearrangeTreeY));
        }
        let path2 = tree.path_between(local(zx), local(zry)).map(|v| gb.host(v));
        if !path2.contains(zrx) {
            let part = Partition::new(red.clone(), blue_without(&[x], &red));
            let w = pendant(tr, g, x, zrx, &part, &path2.extended(y))?;
            return Ok((w, Branch::OddRearrangeTreeX));
        }
        return Err(gap(g, format!("no tree path avoiding {zrx} or {zry}")));
    }

    if !rx.is_empty() {
        if !ry.is_empty() {
            return Ok((basic_on(tr, g, &all, &red)?, Branch::EvenBothBlue));
        }
        let red = with_red(&red, &[y]);
        let part = Partition::new(red.clone(), blue_without(&[x], &red));
        return Ok((anchor(tr, g, x, &part)?, Branch::EvenRemainingX));
    }
    if ry.is_empty() {
        let zx2 = *g
            .neighbors(x)
            .iter()
            .find(|&&v| v != y && v != zx)
            .ok_or_else(|| gap(g, format!("{x} has no third neighbor")))?;
        let red2 = with_red(&red, &[y]);
        let part = Partition::new(red2.clone(), blue_without(&[x], &red2));
        let gb = g.between(&red.iter().copied().collect::<Vec<_>>(), &blue_without(&[x, y], &red).into_iter().collect::<Vec<_>>());
        let local = |v: usize| gb.local(v).expect("vertex of G''");
        let path = bfs_path(&gb.graph, local(zx), local(zx2), |_| true)
            .ok_or_else(|| gap(g, format!("G''(R,B) has no {zx}-{zx2} path")))?
            .map(|v| gb.host(v));
        let w = pendant(tr, g, x, y, &part, &path)?;
        return Ok((w, Branch::EvenRearrangeX));
    }
    let y_has_blue = g.neighbors(y).iter().any(|&v| v != x && !red.contains(&v));
    if y_has_blue || g.degree(y).is_multiple_of(2) {
        let red = with_red(&red, &[x]);
        let part = Partition::new(red.clone(), blue_without(&[y], &red));
        let label = if y_has_blue { Branch::EvenRemainingY } else { Branch::EvenRemainingYEven };
        return Ok((anchor(tr, g, y, &part)?, label));
    }
    edge_swap(tr, g, x, y, zy, &red).map(|w| (w, Branch::EvenEdgeSwap))
}

/// Picks `z_x`, `z_y` and a `z_x`–`z_y` path `p` in `G''`.
///
/// A common neighbor `z` gives `z_x = z_y = z`. Otherwise pairs are tried in
/// ascending order, skipping any with `{x, z_y}` or `{y, z_x}` in `E`, until
/// a shortest path with no internal vertex adjacent to `x` or `y` exists.
fn find_triple(g: &Graph, x: usize, y: usize, inner: &[usize]) -> Result<(usize, usize, Path)> {
    let nx: Vec<usize> = g.neighbors(x).iter().copied().filter(|&v| v != y).collect();
    let ny: Vec<usize> = g.neighbors(y).iter().copied().filter(|&v| v != x).collect();
    if let Some(&z) = nx.iter().find(|v| ny.contains(v)) {
        return Ok((z, z, Path::new(vec![z])));
    }
    let sub = g.induced(inner);
    let forbidden: Vec<usize> = nx.iter().chain(&ny).filter_map(|&v| sub.local(v)).collect();
    for &zx in &nx {
        for &zy in &ny {
            if g.has_edge(x, zy) || g.has_edge(y, zx) {
                continue;
            }
            let (a, b) = (sub.local(zx).unwrap(), sub.local(zy).unwrap());
            if let Some(p) = chordless_path(&sub.graph, a, b, &forbidden) {
                return Ok((zx, zy, p.map(|v| sub.host(v))));
            }
        }
    }
    Err(gap(g, format!("no (z_x, z_y, p) triple for the pair ({x}, {y})")))
}

/// `x` and `y` each have the single red neighbor `q`.
fn joint_q(tr: &mut Trace, g: &Graph, x: usize, y: usize, q: usize, red: &BTreeSet<usize>) -> Result<EdgeWeighting> {
    let wv = g.n();
    let aux = aux_graph(g, true, &[(x, y), (x, q)], &[(wv, y)])?;
    let verts: Vec<usize> = (0..=g.n()).collect();
    let wt = basic_on(tr, &aux, &verts, &with_red(red, &[x, wv]))?;
    ensure!(wt.weight(wv, y) == 2, Internal, "pendant edge of w is not 2");
    let mut w = restrict(g, &wt);
    w.set(x, q, 2);
    w.set(x, y, 2);
    let s = w.sums(g.n());
    if s[x] != s[q] {
        tr.repair = Some(Branch::JointQClear);
        return Ok(w);
    }
    // the red-blue edges at y are yq and yw = 2, and their sum is odd
    let mu = w.weight(y, q);
    ensure!(mu % 2 == 1, Internal, "weight of {y}-{q} is even");
    w.set(x, y, mu);
    w.set(x, q, mu);
    w.set(y, q, 2);
    tr.repair = Some(Branch::JointQMuOdd);
    check_sums_kept(g, &s, &w, &[x], "joint-q repair")?;
    Ok(w)
}

/// All neighbors of `y` other than `x` are red and `deg(y)` is odd.
fn edge_swap(tr: &mut Trace, g: &Graph, x: usize, y: usize, zy: usize, red: &BTreeSet<usize>) -> Result<EdgeWeighting> {
    ensure!(!g.has_edge(x, zy), Internal, "{x} and {zy} are already adjacent");
    let aux = aux_graph(g, false, &[(x, y), (y, zy)], &[(x, zy)])?;
    let verts: Vec<usize> = (0..g.n()).collect();
    let wt = basic_on(tr, &aux, &verts, red)?;
    let mu = wt.weight(x, zy);
    let mut w = restrict(g, &wt);
    w.set(x, y, mu);
    w.set(y, zy, mu);
    let s_aux = wt.sums(g.n());
    let s = w.sums(g.n());
    check_sums_kept(g, &s_aux, &w, &[y], "edge swap")?;
    if s[x] != s[y] {
        tr.repair = Some(Branch::EdgeSwapClear);
        return Ok(w);
    }
    let r = *aux
        .neighbors(y)
        .iter()
        .find(|&&r| wt.weight(y, r) % 2 == 1)
        .ok_or_else(|| Error::Internal(format!("{y} has no odd edge after the swap")))?;
    let flipped = 4 - w.weight(y, r);
    w.set(y, r, flipped);
    check_sums_kept(g, &s, &w, &[y, r], "edge swap flip")?;
    tr.repair = Some(Branch::EdgeSwapFlip);
    Ok(w)
}

/// A vertex-coloring weighting with weights `{1, 2, 3}` for every graph
/// without a `K2` component.
///
/// Components are solved independently. Fails with
/// [`Error::IsolatedEdge`] on a `K2` component.
///
/// # Examples
///
/// ```
/// use onetwothree::graph::Graph;
/// use onetwothree::solver::solve;
/// use onetwothree::verify::verify;
///
/// let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
/// let report = solve(&p3).unwrap();
/// assert!(verify(&p3, &report.weighting).unwrap().is_empty());
/// ```
pub fn solve(g: &Graph) -> Result<SolveReport> {
    let comps = connected_components(g);
    if let Some(c) = comps.iter().find(|c| c.len() == 2) {
        return Err(Error::IsolatedEdge { component: c.clone() });
    }
    let mut weighting = EdgeWeighting::new();
    let mut components = Vec::with_capacity(comps.len());
    let mut inner_runs = Vec::new();
    for comp in comps {
        let sub = g.induced(&comp);
        let mut tr = Trace::default();
        let (w, case) = solve_connected(&mut tr, &sub.graph).map_err(|e| match e {
            Error::TheoryGap { component, detail } => Error::TheoryGap {
                component: component.into_iter().map(|v| sub.host(v)).collect(),
                detail,
            },
            other => other,
        })?;
        ensure_coloring(&sub.graph, &w, case.as_str())?;
        weighting.absorb(&w.lift(&sub));
        inner_runs.append(&mut tr.inner);
        components.push(ComponentReport {
            vertices: comp,
            case,
            repair: tr.repair,
        });
    }
    ensure_coloring(g, &weighting, "solve")?;
    let branch_trace = components
        .iter()
        .flat_map(|c| std::iter::once(c.case).chain(c.repair))
        .collect();
    Ok(SolveReport {
        sums: weighting.sums(g.n()),
        weighting,
        branch_trace,
        components,
        inner_runs,
    })
}
