//! Directed and undirected Yao and Theta graphs.
//!
//! Every node scans all other nodes once, bucketing them by cone and keeping
//! the best candidate per cone. Candidates are visited in index order and only
//! a strictly better metric replaces the incumbent, so ties go to the smallest
//! index.

use crate::error::{Error, Result};
use crate::geometry::{bisector_projection, check_cone_count, cone_of, ConeIndex};
use crate::graph::{Directedness, Family, GeometricGraph, NodeSet};

/// Selection metric of candidate `w` seen from `u` inside `cone`.
///
/// Yao uses Euclidean distance. Theta uses the distance from `u` to the foot
/// of `w` on the cone bisector; for `k >= 3` this is the (positive) signed
/// projection, for wider cones it is its absolute value.
fn metric(family: Family, nodes: &NodeSet, u: usize, w: usize, cone: ConeIndex) -> Result<f64> {
    let (pu, pw) = (nodes.point(u), nodes.point(w));
    Ok(match family {
        Family::Yao => pu.distance(pw),
        Family::Theta => bisector_projection(pu, pw, cone)?.abs(),
    })
}

/// Per-cone selection for a single node: `result[i]` is the chosen node in cone `i + 1`.
pub fn select_per_cone(nodes: &NodeSet, family: Family, k: u32, u: usize) -> Result<Vec<Option<usize>>> {
    check_cone_count(k)?;
    nodes.check_index(u)?;
    let mut best: Vec<Option<(f64, usize)>> = vec![None; k as usize];
    let origin = nodes.point(u);
    for w in (0..nodes.len()).filter(|&w| w != u) {
        let cone = cone_of(origin, nodes.point(w), k)?;
        let m = metric(family, nodes, u, w, cone)?;
        let slot = &mut best[cone.slot()];
        match slot {
            Some((incumbent, _)) if m >= *incumbent => {}
            _ => *slot = Some((m, w)),
        }
    }
    Ok(best.into_iter().map(|b| b.map(|(_, w)| w)).collect())
}

/// Directed graph of the given family: one edge per non-empty cone of every node.
pub fn build_directed(nodes: &NodeSet, family: Family, k: u32) -> Result<GeometricGraph> {
    check_cone_count(k)?;
    let mut edges = Vec::with_capacity(nodes.len() * k as usize);
    for u in 0..nodes.len() {
        edges.extend(select_per_cone(nodes, family, k, u)?.into_iter().flatten().map(|w| (u, w)));
    }
    let warning = (family == Family::Theta && k < 3).then(|| {
        format!("theta with k={k}: cones span at least π, selection uses unsigned bisector projection")
    });
    Ok(GeometricGraph::from_edges(family, k, Directedness::Directed, nodes.clone(), edges)?.with_warning(warning))
}

/// Directed Yao graph: each node links to its Euclidean-closest node in every cone.
pub fn build_directed_yao(nodes: &NodeSet, k: u32) -> Result<GeometricGraph> {
    build_directed(nodes, Family::Yao, k)
}

/// Directed Theta graph: each node links to the node with the smallest bisector projection in every cone.
pub fn build_directed_theta(nodes: &NodeSet, k: u32) -> Result<GeometricGraph> {
    build_directed(nodes, Family::Theta, k)
}

/// Drop edge directions, collapsing `u→v` / `v→u` pairs into one edge.
pub fn undirect(graph: &GeometricGraph) -> Result<GeometricGraph> {
    if !graph.is_directed() {
        return Err(Error::AlreadyUndirected);
    }
    Ok(GeometricGraph::from_edges(
        graph.family(),
        graph.k(),
        Directedness::Undirected,
        graph.nodes().clone(),
        graph.edges().iter().copied(),
    )?
    .with_warning(graph.warning().map(str::to_owned)))
}

/// Build a graph in the requested orientation.
pub fn build(nodes: &NodeSet, family: Family, k: u32, directedness: Directedness) -> Result<GeometricGraph> {
    let directed = build_directed(nodes, family, k)?;
    match directedness {
        Directedness::Directed => Ok(directed),
        Directedness::Undirected => undirect(&directed),
    }
}

/// Undirected Yao graph `Y_k`.
pub fn yao(nodes: &NodeSet, k: u32) -> Result<GeometricGraph> {
    build(nodes, Family::Yao, k, Directedness::Undirected)
}

/// Undirected Theta graph `Θ_k`.
pub fn theta(nodes: &NodeSet, k: u32) -> Result<GeometricGraph> {
    build(nodes, Family::Theta, k, Directedness::Undirected)
}
