//! Weighting of a (blue) graph against odd designated colors.
//!
//! Given even handicaps `h`, [`inner_weighting`] returns weights in `{1,2,3}`
//! and odd colors `f` that properly color the graph, with
//! `|s(v) + h(v) - f(v)| = 1` at every vertex. Colors are `1 (mod 4)` on the
//! `S` side of a cut and `3 (mod 4)` on the `T` side; the weighting is built
//! from a plan of same-side edges set to 1 or 3, corrected along the paths
//! of a flow in the auxiliary network of the cut.

use std::collections::BTreeSet;

use crate::cutflow::{
    build_auxiliary_network, decompose_into_paths, exact_max_cut, improve_cut, local_optimal_cut,
    max_flow_integral, Cut, FlowPath, EXACT_CUT_LIMIT,
};
use crate::error::{ensure, Error, Result};
use crate::graph::{Edge, Graph};
use crate::weighting::EdgeWeighting;

/// Even, non-negative per-vertex offsets for weight arriving from outside
/// the graph being weighted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Handicap(Vec<i64>);

impl Handicap {
    pub fn new(values: Vec<i64>) -> Result<Handicap> {
        if let Some((v, h)) = values.iter().enumerate().find(|(_, &h)| h < 0 || h % 2 != 0) {
            return Err(Error::Precondition(format!(
                "handicap of vertex {v} is {h}, expected an even non-negative value"
            )));
        }
        Ok(Handicap(values))
    }

    pub fn zero(n: usize) -> Handicap {
        Handicap(vec![0; n])
    }

    pub fn get(&self, v: usize) -> i64 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Odd target color per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignatedColors {
    pub values: Vec<i64>,
}

impl DesignatedColors {
    pub fn get(&self, v: usize) -> i64 {
        self.values[v]
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|e| self.values[e.lo()] != self.values[e.hi()])
    }
}

/// The intermediate state between designated colors and the final
/// weighting: the shift `g(v)`, the same-side plan edges with their
/// orientation, and the weights before flow correction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjustmentPlan {
    pub shift: Vec<i64>,
    pub f_edges: Vec<Edge>,
    pub sigma: Vec<(usize, usize)>,
    pub base_weights: EdgeWeighting,
    /// `true` where `f(v) > s(v)`.
    pub plus: Vec<bool>,
}

impl AdjustmentPlan {
    pub fn minus(&self, v: usize) -> bool {
        !self.plus[v]
    }
}

/// Per-vertex base value `h(v) + 2 deg(v)`.
fn base(g: &Graph, h: &Handicap, v: usize) -> i64 {
    h.get(v) + 2 * g.degree(v) as i64
}

fn positions(g: &Graph, order: &[usize]) -> Result<Vec<usize>> {
    let mut pos = vec![usize::MAX; g.n()];
    ensure!(order.len() == g.n(), Precondition, "order must list every vertex once");
    for (i, &v) in order.iter().enumerate() {
        ensure!(v < g.n() && pos[v] == usize::MAX, Precondition, "order must list every vertex once");
        pos[v] = i;
    }
    Ok(pos)
}

/// Neighbors of `v` on its own side of the cut that come earlier in the order.
fn earlier_same_side<'a>(g: &'a Graph, cut: &'a Cut, pos: &'a [usize], v: usize) -> impl Iterator<Item = usize> + 'a {
    let pv = pos[v];
    let side = cut.in_s(v);
    g.neighbors(v)
        .iter()
        .copied()
        .filter(move |&w| pos[w] < pv && cut.in_s(w) == side)
}

/// Picks `f(v)` for each vertex in `order`: an odd value within
/// `2k + 1` of `h(v) + 2 deg(v)` (where `k` counts earlier same-side
/// neighbors) in the residue class of its side, avoiding the colors of
/// earlier neighbors. Among valid values the one closest to the base is
/// taken, the smaller on ties.
pub fn designated_colors(g: &Graph, h: &Handicap, cut: &Cut, order: &[usize]) -> Result<DesignatedColors> {
    ensure!(h.len() == g.n(), Precondition, "handicap length {} != {}", h.len(), g.n());
    let pos = positions(g, order)?;
    let mut f = vec![0i64; g.n()];
    for &v in order {
        let s = base(g, h, v);
        let k = earlier_same_side(g, cut, &pos, v).count() as i64;
        let residue = if cut.in_s(v) { 1 } else { 3 };
        let blocked: BTreeSet<i64> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| pos[w] < pos[v])
            .map(|&w| f[w])
            .collect();
        let pick = (0..=k)
            .flat_map(|d| [s - 2 * d - 1, s + 2 * d + 1])
            .find(|&c| c >= 1 && c.rem_euclid(4) == residue && !blocked.contains(&c));
        f[v] = pick.ok_or_else(|| {
            Error::Internal(format!("no designated color available for vertex {v} (s={s}, k={k})"))
        })?;
    }
    Ok(DesignatedColors { values: f })
}

/// Derives the shift `g(v)`, the plan edges `F` with orientation, and the
/// base weights from designated colors.
///
/// A vertex with `f(v) > s(v)` raises `g(v)` earlier same-side edges to 3,
/// one with `f(v) < s(v)` lowers `|g(v)|` of them to 1 (smallest ids first).
/// On the `S` side a raised edge is oriented away from `v` and a lowered one
/// towards it; the `T` side uses the reverse orientations.
pub fn build_adjustment(
    g: &Graph,
    cut: &Cut,
    colors: &DesignatedColors,
    h: &Handicap,
    order: &[usize],
) -> Result<AdjustmentPlan> {
    let pos = positions(g, order)?;
    let n = g.n();
    let mut shift = vec![0i64; n];
    let mut plus = vec![false; n];
    let mut weights = EdgeWeighting::uniform(g, 2);
    let mut f_edges = Vec::new();
    let mut sigma = Vec::new();
    let mut in_f = BTreeSet::new();

    for &v in order {
        let s = base(g, h, v);
        let f = colors.get(v);
        ensure!(f % 2 != 0, Internal, "designated color {f} of {v} is even");
        plus[v] = f > s;
        shift[v] = if plus[v] { (f - s - 1) / 2 } else { (f - s + 1) / 2 };

        let need = shift[v].unsigned_abs() as usize;
        let partners: Vec<usize> = earlier_same_side(g, cut, &pos, v).take(need).collect();
        ensure!(
            partners.len() == need,
            Internal,
            "vertex {v} needs {need} earlier same-side neighbors, has {}",
            partners.len()
        );
        for w in partners {
            let e = Edge::new(v, w);
            ensure!(in_f.insert(e), Internal, "edge {e} selected twice");
            f_edges.push(e);
            weights.set(v, w, if plus[v] { 3 } else { 1 });
            let away = plus[v] == cut.in_s(v);
            sigma.push(if away { (v, w) } else { (w, v) });
        }
    }
    Ok(AdjustmentPlan {
        shift,
        f_edges,
        sigma,
        base_weights: weights,
        plus,
    })
}

/// Alternates weights along each flow path: an edge leaving an `S` vertex
/// goes up by one, an edge leaving a `T` vertex goes down by one. Paths
/// with a single interior vertex are left alone.
pub fn apply_flow_paths(g: &Graph, w: &EdgeWeighting, paths: &[FlowPath], cut: &Cut) -> Result<EdgeWeighting> {
    let mut out = w.clone();
    for p in paths {
        if p.interior.len() < 2 {
            continue;
        }
        for pair in p.interior.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            ensure!(
                g.has_edge(a, b) && !cut.same_side(a, b),
                Precondition,
                "flow path step {a}->{b} is not a cut edge"
            );
            out.shift(a, b, if cut.in_s(a) { 1 } else { -1 })?;
        }
    }
    Ok(out)
}

/// Diagnostics of one [`inner_weighting`] run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InnerReport {
    /// Size of every cut tried, in order.
    pub cut_sizes: Vec<usize>,
    /// `|F|` of the final plan.
    pub demand: usize,
    /// Flow value reached on the final cut.
    pub flow_value: usize,
    /// Whether the first cut came from exhaustive search.
    pub exact_cut: bool,
}

impl InnerReport {
    pub fn saturated(&self) -> bool {
        self.flow_value == self.demand
    }

    pub fn strictly_increasing(&self) -> bool {
        self.cut_sizes.windows(2).all(|w| w[0] < w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerWeighting {
    pub weighting: EdgeWeighting,
    pub colors: DesignatedColors,
    pub cut: Cut,
    pub plan: AdjustmentPlan,
    pub report: InnerReport,
}

/// Weights every edge of `g` with `{1,2,3}` and picks odd proper colors
/// `f` such that `|s(v) + h(v) - f(v)| = 1` for every vertex.
///
/// Graphs with at most [`EXACT_CUT_LIMIT`] vertices start from a maximum
/// cut; larger ones start from a local optimum. Whenever the flow falls
/// short of `|F|` the cut is enlarged by [`improve_cut`], re-polished by
/// local search, and the plan is rebuilt.
pub fn inner_weighting(g: &Graph, h: &Handicap) -> Result<InnerWeighting> {
    ensure!(h.len() == g.n(), Precondition, "handicap length {} != {}", h.len(), g.n());
    let order: Vec<usize> = (0..g.n()).collect();
    let exact = g.n() <= EXACT_CUT_LIMIT;
    let mut cut = if exact { exact_max_cut(g)? } else { local_optimal_cut(g, None) };
    let mut report = InnerReport {
        exact_cut: exact,
        ..InnerReport::default()
    };

    loop {
        report.cut_sizes.push(cut.size());
        let colors = designated_colors(g, h, &cut, &order)?;
        let plan = build_adjustment(g, &cut, &colors, h, &order)?;
        let net = build_auxiliary_network(g, &cut, &plan.f_edges, &plan.sigma)?;
        let flow = max_flow_integral(&net);
        debug_assert!(flow.is_valid(&net));
        report.demand = plan.f_edges.len();
        report.flow_value = flow.value;

        if flow.value == plan.f_edges.len() {
            let paths = decompose_into_paths(&net, &flow);
            ensure!(paths.len() == flow.value, Internal, "decomposition lost a path");
            let weighting = apply_flow_paths(g, &plan.base_weights, &paths, &cut)?;
            check_inner(g, h, &weighting, &colors, &plan)?;
            return Ok(InnerWeighting {
                weighting,
                colors,
                cut,
                plan,
                report,
            });
        }

        match improve_cut(g, &cut, &net, &flow) {
            Ok(bigger) => cut = local_optimal_cut(g, Some(&bigger)),
            Err(Error::NoImprovement { size }) => {
                return Err(Error::TheoryGap {
                    component: (0..g.n()).collect(),
                    detail: format!(
                        "flow {} < |F| = {} on a cut of size {size} that cannot be improved",
                        flow.value,
                        plan.f_edges.len()
                    ),
                })
            }
            Err(e) => return Err(e),
        }
    }
}

fn check_inner(
    g: &Graph,
    h: &Handicap,
    w: &EdgeWeighting,
    colors: &DesignatedColors,
    plan: &AdjustmentPlan,
) -> Result<()> {
    ensure!(w.is_total_on(g), Internal, "inner weighting is not total or leaves {{1,2,3}}");
    let sums = w.sums(g.n());
    for v in 0..g.n() {
        let expect = 2 * g.degree(v) as i64 + 2 * plan.shift[v];
        ensure!(sums[v] == expect, Internal, "vertex {v}: sum {} != 2deg + 2g = {expect}", sums[v]);
        ensure!(
            (sums[v] + h.get(v) - colors.get(v)).abs() == 1,
            Internal,
            "vertex {v} misses its designated color"
        );
    }
    ensure!(colors.is_proper(g), Internal, "designated colors are not proper");
    Ok(())
}
