//! Greedy forwarding on undirected geometric graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::GeometricGraph;

/// Outcome of a single forwarding decision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Step {
    /// Forward to this neighbour, which is strictly closer to the target.
    Forward(usize),
    /// No neighbour is strictly closer. Carries the best neighbour distance to
    /// the target, `None` when the node is isolated.
    Void { best_neighbor_distance: Option<f64> },
}

/// Outcome of a complete greedy route.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RouteResult {
    Delivered {
        path: Vec<usize>,
    },
    Void {
        /// Nodes visited up to and including the stuck node.
        path: Vec<usize>,
        stuck: usize,
        best_neighbor_distance: Option<f64>,
    },
}

impl RouteResult {
    pub fn is_delivered(&self) -> bool {
        matches!(self, RouteResult::Delivered { .. })
    }

    pub fn path(&self) -> &[usize] {
        match self {
            RouteResult::Delivered { path } | RouteResult::Void { path, .. } => path,
        }
    }
}

/// One greedy hop from `u` towards `target`.
///
/// Picks the neighbour closest to `target` (smallest index on ties) and
/// forwards only if it is strictly closer than `u` itself.
pub fn greedy_step(graph: &GeometricGraph, u: usize, target: usize) -> Result<Step> {
    graph.nodes().check_index(target)?;
    let neighbors = graph.neighbors(u)?;
    if u == target {
        return Err(Error::AlreadyDelivered);
    }
    let nodes = graph.nodes();
    let goal = nodes.point(target);
    let mut best: Option<(f64, usize)> = None;
    for &w in neighbors {
        let d = nodes.point(w).distance(goal);
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, w));
        }
    }
    let own = nodes.point(u).distance(goal);
    Ok(match best {
        Some((d, w)) if d < own => Step::Forward(w),
        _ => Step::Void {
            best_neighbor_distance: best.map(|(d, _)| d),
        },
    })
}

/// Repeated greedy hops from `source` until `target` is reached or a void stops the packet.
///
/// The distance to `target` strictly decreases along the way, so the loop
/// visits every node at most once.
pub fn greedy_route(graph: &GeometricGraph, source: usize, target: usize) -> Result<RouteResult> {
    graph.nodes().check_index(source)?;
    graph.nodes().check_index(target)?;
    if graph.is_directed() {
        return Err(Error::RequiresUndirected);
    }
    let mut path = vec![source];
    let mut current = source;
    while current != target {
        match greedy_step(graph, current, target)? {
            Step::Forward(next) => {
                path.push(next);
                current = next;
            }
            Step::Void { best_neighbor_distance } => {
                return Ok(RouteResult::Void {
                    path,
                    stuck: current,
                    best_neighbor_distance,
                });
            }
        }
        debug_assert!(path.len() <= graph.len());
    }
    Ok(RouteResult::Delivered { path })
}

/// [`greedy_route`] addressed by node labels.
pub fn greedy_route_by_id(graph: &GeometricGraph, source: &str, target: &str) -> Result<RouteResult> {
    let nodes = graph.nodes();
    greedy_route(graph, nodes.index_of(source)?, nodes.index_of(target)?)
}
