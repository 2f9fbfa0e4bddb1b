//! Cuts, the unit-capacity auxiliary network, integral maximum flow and
//! flow decomposition, and the cut-improvement step used when a flow does
//! not saturate.

mod cut;
mod network;

pub use cut::{exact_max_cut, exact_max_cut_with_limit, local_optimal_cut, Cut, EXACT_CUT_LIMIT};
pub use network::{
    build_auxiliary_network, decompose_into_paths, max_flow_integral, residual_reachable, Arc,
    ArcKind, AuxNetwork, Flow, FlowPath,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Flips every ordinary vertex reachable from `s` in the residual network.
///
/// When `flow` is maximum and below the demand, the reachable set `X` is the
/// source side of a minimum `s`–`t` cut of capacity `< |F|`. That capacity
/// equals `c + |F| - a + b`, where `c` counts cut edges leaving `X`, `a`
/// counts plan edges oriented out of `X` and `b` those oriented into `X`.
/// Hence `a > c`: more same-side edges than cut edges cross `X`, and the
/// flip strictly enlarges the cut. Anything else is reported as
/// [`Error::NoImprovement`].
pub fn improve_cut(g: &Graph, cut: &Cut, net: &AuxNetwork, flow: &Flow) -> Result<Cut> {
    let reach = residual_reachable(net, flow);
    let flip: Vec<usize> = (0..g.n()).filter(|&v| reach[v]).collect();
    let next = cut.flipped(g, &flip);
    if next.size() > cut.size() {
        Ok(next)
    } else {
        Err(Error::NoImprovement { size: cut.size() })
    }
}
