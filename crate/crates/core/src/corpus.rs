//! Counter-example node sets for `k <= 5` and a seeded random search for new ones.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construction::build;
use crate::error::{Error, Result};
use crate::geometry::{clockwise_angle_from_north, cone_of, Point};
use crate::graph::{graphs_equal, Directedness, Family, NodeSet};
use crate::io::node_set_from_json;
use crate::voidcheck::{check_void_free, find_witness, VoidWitness};

/// Maximum angular gap between `v` and the ray `l_2` of `u` in V2.
pub const V2_RAY_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CorpusName {
    V0,
    V1,
    V2,
}

impl fmt::Display for CorpusName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorpusName::V0 => "V0",
            CorpusName::V1 => "V1",
            CorpusName::V2 => "V2",
        })
    }
}

impl CorpusName {
    /// Nodes that must lie strictly outside the circle centred at `v` with radius `d(u, v)`.
    pub fn outside_circle(&self) -> &'static [&'static str] {
        match self {
            // b is v's nearest neighbour here, so only a is outside
            CorpusName::V0 => &["a"],
            CorpusName::V1 => &["a", "b"],
            CorpusName::V2 => &["a", "b", "c"],
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: CorpusName,
    pub nodes: NodeSet,
    pub applicable_k: Vec<u32>,
    /// Indices of `u` and `v`.
    pub expected_witness: (usize, usize),
}

impl CorpusEntry {
    pub fn index(&self, id: &str) -> usize {
        self.nodes.index_of(id).expect("corpus ids are fixed")
    }

    /// Copy of this entry with node `id` moved to `point`.
    pub fn with_moved(&self, id: &str, point: Point) -> Result<Self> {
        let index = self.nodes.index_of(id)?;
        let moved = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, (label, p))| (label.to_owned(), if i == index { point } else { *p }));
        Ok(CorpusEntry {
            nodes: NodeSet::new(moved)?,
            ..self.clone()
        })
    }
}

const V0_JSON: &str = include_str!("../corpus/v0.json");
const V1_JSON: &str = include_str!("../corpus/v1.json");
const V2_JSON: &str = include_str!("../corpus/v2.json");

fn entry(name: CorpusName, json: &str, applicable_k: Vec<u32>) -> CorpusEntry {
    let nodes = node_set_from_json(json).expect("corpus file is valid");
    let u = nodes.index_of("u").expect("corpus has u");
    let v = nodes.index_of("v").expect("corpus has v");
    CorpusEntry {
        name,
        nodes,
        applicable_k,
        expected_witness: (u, v),
    }
}

/// V0 (k = 1, 2, 3), V1 (k = 4) and V2 (k = 5).
pub fn load_corpus() -> Vec<CorpusEntry> {
    vec![
        entry(CorpusName::V0, V0_JSON, vec![1, 2, 3]),
        entry(CorpusName::V1, V1_JSON, vec![4]),
        entry(CorpusName::V2, V2_JSON, vec![5]),
    ]
}

pub fn corpus_entry(name: CorpusName) -> CorpusEntry {
    load_corpus()
        .into_iter()
        .find(|e| e.name == name)
        .expect("every name has an entry")
}

/// Re-derive the entry's claims; returns human-readable violations (empty when valid).
///
/// For every applicable `k`: both `Y_k` and `Θ_k` carry the `(u, v)` witness
/// and have identical edge sets. The listed nodes lie outside `C_v`.
pub fn validate_entry(entry: &CorpusEntry) -> Result<Vec<String>> {
    let mut violations = Vec::new();
    let (u, v) = entry.expected_witness;
    for &k in &entry.applicable_k {
        let yao = build(&entry.nodes, Family::Yao, k, Directedness::Undirected)?;
        let theta = build(&entry.nodes, Family::Theta, k, Directedness::Undirected)?;
        for graph in [&yao, &theta] {
            if !check_void_free(graph)?.contains_pair(u, v) {
                violations.push(format!("{} k={k}: no witness (u, v) in {}", entry.name, graph.family()));
            }
        }
        if !graphs_equal(&yao, &theta)? {
            violations.push(format!("{} k={k}: Yao and Theta graphs differ", entry.name));
        }
    }
    violations.extend(circle_violations(entry)?);
    Ok(violations)
}

fn circle_violations(entry: &CorpusEntry) -> Result<Vec<String>> {
    let nodes = &entry.nodes;
    let pv = nodes.point(nodes.index_of("v")?);
    let radius = nodes.point(nodes.index_of("u")?).distance(pv);
    let mut out = Vec::new();
    for id in entry.name.outside_circle() {
        if nodes.point(nodes.index_of(id)?).distance(pv) <= radius {
            out.push(format!("{id} inside C_v"));
        }
    }
    Ok(out)
}

/// Placement constraints of V2 with `k = 5`.
pub fn validate_v2_constraints(entry: &CorpusEntry) -> Result<Vec<String>> {
    if entry.name != CorpusName::V2 {
        return Err(Error::WrongCorpusEntry {
            expected: CorpusName::V2.to_string(),
            found: entry.name.to_string(),
        });
    }
    let k = 5;
    let nodes = &entry.nodes;
    let p = |id: &str| nodes.index_of(id).map(|i| *nodes.point(i));
    let mut out = Vec::new();
    let (u, v) = (p("u")?, p("v")?);

    let l2 = TAU / f64::from(k);
    let angle = clockwise_angle_from_north(&u, &v)?;
    if cone_of(&u, &v, k)?.index() != 1 {
        out.push("v not in c(u,1)".to_owned());
    } else if l2 - angle > V2_RAY_TOLERANCE {
        out.push(format!("v is {} rad away from ray l_2 of u", l2 - angle));
    }

    let containments: [(&str, &str, u32); 7] = [
        ("d", "v", 4),
        ("b", "u", 3),
        ("b", "d", 4),
        ("b", "v", 4),
        ("c", "u", 2),
        ("c", "d", 3),
        ("c", "v", 3),
    ];
    for (node, origin, cone) in containments {
        if cone_of(&p(origin)?, &p(node)?, k)?.index() != cone {
            out.push(format!("{node} not in c({origin},{cone})"));
        }
    }
    out.extend(circle_violations(entry)?);
    Ok(out)
}

/// `n` distinct points uniform in the unit square, labelled `"0"`..; deterministic per seed.
pub fn random_nodeset(n: usize, seed: u64) -> Result<NodeSet> {
    random_nodeset_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn random_nodeset_with(n: usize, rng: &mut impl Rng) -> Result<NodeSet> {
    if n == 0 {
        return Err(Error::InvalidNodeCount("at least one node is required".into()));
    }
    let mut points: Vec<Point> = Vec::with_capacity(n);
    while points.len() < n {
        let p = Point::new(rng.gen::<f64>(), rng.gen::<f64>())?;
        if !points.iter().any(|q| q.same_bits(&p)) {
            points.push(p);
        }
    }
    NodeSet::from_points(points)
}

/// Result of a counter-example search.
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found {
        /// Zero-based index of the hit.
        trial: u64,
        nodes: NodeSet,
        witness: VoidWitness,
    },
    NotFound {
        trials: u64,
    },
}

/// Default node-count range for [`search_counterexample`].
pub const DEFAULT_SEARCH_NODES: RangeInclusive<usize> = 4..=8;

const SEARCH_CHUNK: u64 = 4096;

fn trial_nodes(seed: u64, trial: u64, node_counts: &RangeInclusive<usize>) -> Result<NodeSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let n = rng.gen_range(node_counts.clone());
    random_nodeset_with(n, &mut rng)
}

/// Sample node sets until one yields a non-void-free graph of `family` with `k` cones.
///
/// Trial `t` draws its node count from `node_counts` and its points from the
/// ChaCha8 stream `t` of `seed`, so results do not depend on thread count; the
/// reported hit is always the lowest trial index.
pub fn search_counterexample(
    family: Family,
    k: u32,
    node_counts: RangeInclusive<usize>,
    seed: u64,
    budget: u64,
) -> Result<SearchOutcome> {
    if !(1..=5).contains(&k) {
        return Err(Error::SearchConeCount(k));
    }
    if *node_counts.start() < 2 || node_counts.is_empty() {
        return Err(Error::InvalidNodeCount(format!(
            "node counts {}..={} must be non-empty and at least 2",
            node_counts.start(),
            node_counts.end()
        )));
    }
    let mut start = 0;
    while start < budget {
        let end = (start + SEARCH_CHUNK).min(budget);
        let hit = (start..end)
            .into_par_iter()
            .map(|trial| -> Result<Option<(u64, NodeSet, VoidWitness)>> {
                let nodes = trial_nodes(seed, trial, &node_counts)?;
                let graph = build(&nodes, family, k, Directedness::Undirected)?;
                Ok(find_witness(&graph)?.map(|w| (trial, nodes, w)))
            })
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            });
        if let Some(hit) = hit {
            let (trial, nodes, witness) = hit?.expect("filtered above");
            return Ok(SearchOutcome::Found { trial, nodes, witness });
        }
        start = end;
    }
    Ok(SearchOutcome::NotFound { trials: budget })
}
