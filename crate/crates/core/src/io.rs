//! Node-set and graph file formats.
//!
//! Node sets: `{"nodes": [{"id": "a", "x": 0.0, "y": 1.0}, ...]}` or CSV with
//! header `id,x,y`. Graphs: `{"family", "k", "directed", "nodes", "edges"}`
//! where edges index into `nodes` and undirected edges are written `i < j`.
//! Floats use shortest round-trip formatting, so export followed by import
//! reproduces coordinates bit for bit.

use std::io::Read;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::{Directedness, Family, GeometricGraph, NodeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct NodeRecord {
    id: String,
    x: f64,
    y: f64,
}

#[derive(Serialize, Deserialize)]
struct NodeSetFile {
    nodes: Vec<NodeRecord>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    family: Family,
    k: u32,
    directed: bool,
    nodes: Vec<NodeRecord>,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    warning: Option<String>,
}

fn records(nodes: &NodeSet) -> Vec<NodeRecord> {
    nodes
        .iter()
        .map(|(id, p)| NodeRecord {
            id: id.to_owned(),
            x: p.x(),
            y: p.y(),
        })
        .collect()
}

fn from_records(records: Vec<NodeRecord>) -> Result<NodeSet> {
    let nodes = records
        .into_iter()
        .map(|r| Ok((r.id, Point::new(r.x, r.y)?)))
        .collect::<Result<Vec<_>>>()?;
    NodeSet::new(nodes)
}

pub fn node_set_to_json(nodes: &NodeSet) -> Result<String> {
    Ok(serde_json::to_string_pretty(&NodeSetFile { nodes: records(nodes) })?)
}

pub fn node_set_from_json(text: &str) -> Result<NodeSet> {
    let file: NodeSetFile = serde_json::from_str(text)?;
    from_records(file.nodes)
}

pub fn node_set_to_csv(nodes: &NodeSet) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records(nodes) {
        writer.serialize(record)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn node_set_from_csv(text: &str) -> Result<NodeSet> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["id", "x", "y"] {
        return Err(Error::Parse(format!("expected CSV header id,x,y, got {:?}", headers.as_slice())));
    }
    let records = reader.deserialize().collect::<Result<Vec<NodeRecord>, _>>()?;
    from_records(records)
}

pub fn parse_node_set(text: &str, format: Format) -> Result<NodeSet> {
    match format {
        Format::Json => node_set_from_json(text),
        Format::Csv => node_set_from_csv(text),
    }
}

pub fn read_node_set(mut reader: impl Read, format: Format) -> Result<NodeSet> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| Error::Parse(e.to_string()))?;
    parse_node_set(&text, format)
}

pub fn graph_to_json(graph: &GeometricGraph) -> Result<String> {
    let file = GraphFile {
        family: graph.family(),
        k: graph.k(),
        directed: graph.is_directed(),
        nodes: records(graph.nodes()),
        edges: graph.edges().iter().map(|&(a, b)| [a, b]).collect(),
        warning: graph.warning().map(str::to_owned),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn graph_from_json(text: &str) -> Result<GeometricGraph> {
    let file: GraphFile = serde_json::from_str(text)?;
    let directedness = if file.directed {
        Directedness::Directed
    } else {
        Directedness::Undirected
    };
    let nodes = from_records(file.nodes)?;
    Ok(
        GeometricGraph::from_edges(file.family, file.k, directedness, nodes, file.edges.into_iter().map(|[a, b]| (a, b)))?
            .with_warning(file.warning),
    )
}
