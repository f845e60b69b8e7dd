//! Node sets and geometric graphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use crate::geometry::distance;
use crate::geometry::Point;

/// An ordered collection of labelled, pairwise-distinct points.
///
/// Node identity is the insertion index; every output is ordered by it.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSet {
    ids: Vec<String>,
    points: Vec<Point>,
    lookup: HashMap<String, usize>,
}

impl NodeSet {
    pub fn new<I, S>(nodes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Point)>,
        S: Into<String>,
    {
        let mut ids: Vec<String> = Vec::new();
        let mut points: Vec<Point> = Vec::new();
        let mut lookup = HashMap::new();
        for (id, point) in nodes {
            let id = id.into();
            if lookup.contains_key(&id) {
                return Err(Error::DuplicateId(id));
            }
            if let Some(j) = points.iter().position(|q| q.same_bits(&point)) {
                return Err(Error::DuplicateCoordinates {
                    first: ids[j].clone(),
                    second: id,
                });
            }
            lookup.insert(id.clone(), ids.len());
            ids.push(id);
            points.push(point);
        }
        if ids.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        Ok(Self { ids, points, lookup })
    }

    /// Nodes labelled by their index (`"0"`, `"1"`, ...).
    pub fn from_points(points: impl IntoIterator<Item = Point>) -> Result<Self> {
        Self::new(points.into_iter().enumerate().map(|(i, p)| (i.to_string(), p)))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn point(&self, index: usize) -> &Point {
        &self.points[index]
    }

    pub fn id(&self, index: usize) -> &str {
        &self.ids[index]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.lookup
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownNode(id.to_owned()))
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                index,
                len: self.len(),
            })
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Point)> {
        self.ids.iter().map(String::as_str).zip(&self.points)
    }

    /// Same labels and bit-identical coordinates, in the same order.
    pub fn same_nodes(&self, other: &NodeSet) -> bool {
        self.ids == other.ids
            && self.points.len() == other.points.len()
            && self
                .points
                .iter()
                .zip(&other.points)
                .all(|(a, b)| a.x().to_bits() == b.x().to_bits() && a.y().to_bits() == b.y().to_bits())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Yao,
    Theta,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Yao => "yao",
            Family::Theta => "theta",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "yao" => Ok(Family::Yao),
            "theta" => Ok(Family::Theta),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Directedness {
    Directed,
    Undirected,
}

/// A node set plus an edge set, tagged with the family and cone count that built it.
///
/// Directed edges are `(from, to)`; undirected edges are stored once as `(i, j)` with `i < j`.
/// Edges are kept sorted.
#[derive(Clone, Debug)]
pub struct GeometricGraph {
    family: Family,
    k: u32,
    directedness: Directedness,
    nodes: NodeSet,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    warning: Option<String>,
}

impl GeometricGraph {
    /// Assemble a graph from raw edges, normalising and validating them.
    ///
    /// Undirected input pairs may come in either orientation; duplicates are collapsed.
    pub fn from_edges(
        family: Family,
        k: u32,
        directedness: Directedness,
        nodes: NodeSet,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        crate::geometry::check_cone_count(k)?;
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            nodes.check_index(a)?;
            nodes.check_index(b)?;
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            set.insert(match directedness {
                Directedness::Directed => (a, b),
                Directedness::Undirected => (a.min(b), a.max(b)),
            });
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            if directedness == Directedness::Undirected {
                adjacency[b].push(a);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            family,
            k,
            directedness,
            nodes,
            edges,
            adjacency,
            warning: None,
        })
    }

    pub(crate) fn with_warning(mut self, warning: Option<String>) -> Self {
        self.warning = warning;
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn directedness(&self) -> Directedness {
        self.directedness
    }

    pub fn is_directed(&self) -> bool {
        self.directedness == Directedness::Directed
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Set when the construction used a cone wider than π (Theta with k < 3).
    pub fn warning(&self) -> Option<&str> {
        self.warning.as_deref()
    }

    /// Neighbours of `u` in an undirected graph, ascending by index.
    pub fn neighbors(&self, u: usize) -> Result<&[usize]> {
        if self.is_directed() {
            return Err(Error::RequiresUndirected);
        }
        self.nodes.check_index(u)?;
        Ok(&self.adjacency[u])
    }

    /// Neighbours looked up by node label.
    pub fn neighbors_of(&self, id: &str) -> Result<Vec<&str>> {
        let u = self.nodes.index_of(id)?;
        Ok(self.neighbors(u)?.iter().map(|&w| self.nodes.id(w)).collect())
    }

    /// Out-neighbours of `u` in a directed graph.
    pub fn successors(&self, u: usize) -> Result<&[usize]> {
        if !self.is_directed() {
            return Err(Error::AlreadyUndirected);
        }
        self.nodes.check_index(u)?;
        Ok(&self.adjacency[u])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = match self.directedness {
            Directedness::Directed => (a, b),
            Directedness::Undirected => (a.min(b), a.max(b)),
        };
        self.edges.binary_search(&key).is_ok()
    }

    /// Edge set with directions dropped, `(i, j)` with `i < j`.
    pub fn undirected_edges(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    }

    /// Copy of this graph with one extra edge.
    pub fn with_extra_edge(&self, a: usize, b: usize) -> Result<Self> {
        let edges = self.edges.iter().copied().chain(std::iter::once((a, b)));
        Ok(GeometricGraph::from_edges(self.family, self.k, self.directedness, self.nodes.clone(), edges)?
            .with_warning(self.warning.clone()))
    }
}

/// Whether two graphs over the same node set have identical undirected edge sets.
pub fn graphs_equal(a: &GeometricGraph, b: &GeometricGraph) -> Result<bool> {
    if !a.nodes.same_nodes(&b.nodes) {
        return Err(Error::NodeSetMismatch);
    }
    Ok(a.undirected_edges() == b.undirected_edges())
}
