//! Void-freeness verdicts and machine checks of the `k >= 6` proof geometry.
//!
//! A graph is void-free when, for every ordered pair `(u, v)` with `u != v`,
//! some neighbour `w` of `u` satisfies `d(w, v) < d(u, v)`. A pair for which
//! this fails is a [`VoidWitness`].

use std::f64::consts::FRAC_PI_3;

use rayon::prelude::*;
use serde::Serialize;

use crate::construction::select_per_cone;
use crate::error::{Error, Result};
use crate::geometry::{angle_at, bisector_projection, cone_of};
use crate::graph::{Family, GeometricGraph, NodeSet};
use crate::routing::{greedy_route, RouteResult};

/// Absolute tolerance on angles in the proof-geometry checks.
pub const ANGLE_TOLERANCE: f64 = 1e-9;

/// An ordered pair `(u, v)` for which `u` has no neighbour strictly closer to `v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VoidWitness {
    pub u: usize,
    pub v: usize,
    pub d_uv: f64,
    /// Smallest `d(w, v)` over neighbours `w` of `u`; `None` if `u` is isolated.
    pub min_neighbor_distance: Option<f64>,
}

/// Result of a void-freeness check; void-free iff there are no witnesses.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VoidVerdict {
    /// Sorted by `(u, v)`.
    pub witnesses: Vec<VoidWitness>,
}

impl VoidVerdict {
    pub fn is_void_free(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn contains_pair(&self, u: usize, v: usize) -> bool {
        self.witnesses
            .binary_search_by(|w| (w.u, w.v).cmp(&(u, v)))
            .is_ok()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.witnesses.iter().map(|w| (w.u, w.v)).collect()
    }
}

/// Witness for `(u, v)` if `u` has no neighbour strictly closer to `v`.
pub fn witness_for(graph: &GeometricGraph, u: usize, v: usize) -> Result<Option<VoidWitness>> {
    let neighbors = graph.neighbors(u)?;
    graph.nodes().check_index(v)?;
    let nodes = graph.nodes();
    let target = nodes.point(v);
    let d_uv = nodes.point(u).distance(target);
    let min = neighbors
        .iter()
        .map(|&w| nodes.point(w).distance(target))
        .min_by(f64::total_cmp);
    Ok(match min {
        Some(m) if m < d_uv => None,
        _ => Some(VoidWitness {
            u,
            v,
            d_uv,
            min_neighbor_distance: min,
        }),
    })
}

/// First witness in `(u, v)` order, stopping early. Serial; meant for inner loops.
pub fn find_witness(graph: &GeometricGraph) -> Result<Option<VoidWitness>> {
    if graph.is_directed() {
        return Err(Error::RequiresUndirected);
    }
    let n = graph.len();
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u) {
            if let Some(w) = witness_for(graph, u, v)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Exhaustive scan of all ordered pairs.
pub fn check_void_free(graph: &GeometricGraph) -> Result<VoidVerdict> {
    if graph.is_directed() {
        return Err(Error::RequiresUndirected);
    }
    let n = graph.len();
    let per_source: Vec<Vec<VoidWitness>> = (0..n)
        .into_par_iter()
        .map(|u| {
            (0..n)
                .filter(|&v| v != u)
                .filter_map(|v| witness_for(graph, u, v).transpose())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(VoidVerdict {
        witnesses: per_source.into_iter().flatten().collect(),
    })
}

/// Greedy-route every ordered pair and collect `(stuck node, target)` pairs.
///
/// Each collected pair is itself a witness, so the result is a subset of
/// [`check_void_free`]'s witnesses with the same void-free verdict.
pub fn check_by_routing(graph: &GeometricGraph) -> Result<VoidVerdict> {
    if graph.is_directed() {
        return Err(Error::RequiresUndirected);
    }
    let n = graph.len();
    let stuck: Vec<Vec<VoidWitness>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut found = Vec::new();
            for t in (0..n).filter(|&t| t != s) {
                if let RouteResult::Void {
                    stuck,
                    best_neighbor_distance,
                    ..
                } = greedy_route(graph, s, t)?
                {
                    found.push(VoidWitness {
                        u: stuck,
                        v: t,
                        d_uv: graph.nodes().point(stuck).distance(graph.nodes().point(t)),
                        min_neighbor_distance: best_neighbor_distance,
                    });
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;
    let mut witnesses: Vec<_> = stuck.into_iter().flatten().collect();
    witnesses.sort_by_key(|w| (w.u, w.v));
    witnesses.dedup_by(|a, b| (a.u, a.v) == (b.u, b.v));
    Ok(VoidVerdict { witnesses })
}

/// A failed premise or conclusion of the proof geometry for one `(u, w, v)` triple.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometryViolation {
    pub u: usize,
    /// Node selected by `u` in the cone.
    pub w: usize,
    pub v: usize,
    pub cone: u32,
    pub message: String,
}

/// Which argument closes the Theta case for a triple `(u, w, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaProofCase {
    /// `w` is not Euclidean-closer to `u` than `v`; the argument goes through
    /// the angle between the cone boundary and the bisector.
    BisectorAngle,
    /// `d(u, w) < d(u, v)`; the Yao argument applies verbatim.
    CloserThanTarget,
}

/// Classify a Theta triple by the argument that proves `d(w, v) < d(u, v)`.
pub fn theta_proof_case(nodes: &NodeSet, u: usize, w: usize, v: usize) -> ThetaProofCase {
    let pu = nodes.point(u);
    if pu.distance(nodes.point(w)) < pu.distance(nodes.point(v)) {
        ThetaProofCase::CloserThanTarget
    } else {
        ThetaProofCase::BisectorAngle
    }
}

fn check_proof_geometry(nodes: &NodeSet, k: u32, family: Family) -> Result<Vec<GeometryViolation>> {
    if k < 6 {
        return Err(Error::ProofConeCount(k));
    }
    let per_node: Vec<Vec<GeometryViolation>> = (0..nodes.len())
        .into_par_iter()
        .map(|u| {
            let chosen = select_per_cone(nodes, family, k, u)?;
            let pu = nodes.point(u);
            let mut out = Vec::new();
            for v in (0..nodes.len()).filter(|&v| v != u) {
                let pv = nodes.point(v);
                let cone = cone_of(pu, pv, k)?;
                let Some(w) = chosen[cone.slot()] else {
                    out.push(GeometryViolation {
                        u,
                        w: v,
                        v,
                        cone: cone.index(),
                        message: "non-empty cone without a selected neighbour".into(),
                    });
                    continue;
                };
                if w == v {
                    continue;
                }
                let pw = nodes.point(w);
                let mut fail = |message: String| {
                    out.push(GeometryViolation {
                        u,
                        w,
                        v,
                        cone: cone.index(),
                        message,
                    })
                };
                if cone_of(pu, pw, k)? != cone {
                    fail("selected neighbour lies outside the cone".into());
                }
                let angle = angle_at(pu, pw, pv);
                if angle >= FRAC_PI_3 + ANGLE_TOLERANCE {
                    fail(format!("angle w-u-v = {angle} not below π/3"));
                }
                if family == Family::Theta {
                    let (proj_w, proj_v) = (bisector_projection(pu, pw, cone)?, bisector_projection(pu, pv, cone)?);
                    if proj_w > proj_v {
                        fail(format!("projection of w ({proj_w}) exceeds projection of v ({proj_v})"));
                    }
                } else if pu.distance(pw) > pu.distance(pv) {
                    fail("selected neighbour is farther than v".into());
                }
                let (d_wv, d_uv) = (pw.distance(pv), pu.distance(pv));
                if d_wv >= d_uv {
                    fail(format!("d(w,v) = {d_wv} not below d(u,v) = {d_uv}"));
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_node.into_iter().flatten().collect())
}

/// For every node `u`, every cone and every `v` sharing the cone with the Yao
/// pick `w`: the cone angle bound `∠wuv < π/3` and the conclusion `d(w,v) < d(u,v)`.
pub fn check_yao_geometry(nodes: &NodeSet, k: u32) -> Result<Vec<GeometryViolation>> {
    check_proof_geometry(nodes, k, Family::Yao)
}

/// Theta counterpart of [`check_yao_geometry`]: additionally checks that the pick
/// minimises the bisector projection.
pub fn check_theta_geometry(nodes: &NodeSet, k: u32) -> Result<Vec<GeometryViolation>> {
    check_proof_geometry(nodes, k, Family::Theta)
}

/// JSON witness report.
#[derive(Serialize)]
struct Report<'a> {
    void_free: bool,
    witnesses: Vec<WitnessRecord<'a>>,
}

#[derive(Serialize)]
struct WitnessRecord<'a> {
    u: &'a str,
    v: &'a str,
    d_uv: f64,
    min_neighbor_d: Option<f64>,
}

/// Serialise a verdict as `{"void_free": .., "witnesses": [{"u", "v", "d_uv", "min_neighbor_d"}]}`.
pub fn verdict_to_json(graph: &GeometricGraph, verdict: &VoidVerdict) -> Result<String> {
    let nodes = graph.nodes();
    let report = Report {
        void_free: verdict.is_void_free(),
        witnesses: verdict
            .witnesses
            .iter()
            .map(|w| WitnessRecord {
                u: nodes.id(w.u),
                v: nodes.id(w.v),
                d_uv: w.d_uv,
                min_neighbor_d: w.min_neighbor_distance,
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&report)?)
}
