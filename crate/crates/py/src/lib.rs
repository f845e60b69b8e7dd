//! Python bindings for `conegraph`.

use conegraph::construction::build as build_graph;
use conegraph::corpus::{self, SearchOutcome};
use conegraph::geometry::{self, ConeIndex, Point};
use conegraph::io;
use conegraph::render::{render_svg, RenderOptions};
use conegraph::routing::{greedy_route_by_id, RouteResult};
use conegraph::voidcheck::{check_by_routing, check_void_free, VoidVerdict};
use conegraph::{Directedness, Family, GeometricGraph};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: conegraph::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point((x, y): (f64, f64)) -> PyResult<Point> {
    Point::new(x, y).map_err(err)
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(err)
}

/// An immutable set of labelled points.
#[pyclass(name = "NodeSet", frozen, skip_from_py_object, module = "pyconegraph")]
#[derive(Clone)]
struct PyNodeSet(conegraph::NodeSet);

#[pymethods]
impl PyNodeSet {
    /// Build from `(id, x, y)` triples.
    #[new]
    fn new(nodes: Vec<(String, f64, f64)>) -> PyResult<Self> {
        let nodes = nodes
            .into_iter()
            .map(|(id, x, y)| Ok((id, point((x, y))?)))
            .collect::<PyResult<Vec<_>>>()?;
        conegraph::NodeSet::new(nodes).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::node_set_from_json(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_csv(text: &str) -> PyResult<Self> {
        io::node_set_from_csv(text).map(Self).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        io::node_set_to_json(&self.0).map_err(err)
    }

    fn to_csv(&self) -> PyResult<String> {
        io::node_set_to_csv(&self.0).map_err(err)
    }

    fn ids(&self) -> Vec<String> {
        self.0.ids().to_vec()
    }

    fn points(&self) -> Vec<(f64, f64)> {
        self.0.points().iter().map(|p| (p.x(), p.y())).collect()
    }

    fn index_of(&self, id: &str) -> PyResult<usize> {
        self.0.index_of(id).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("NodeSet(<{} nodes>)", self.0.len())
    }
}

/// A Yao or Theta graph over a node set.
#[pyclass(name = "Graph", frozen, module = "pyconegraph")]
struct PyGraph(GeometricGraph);

#[pymethods]
impl PyGraph {
    #[getter]
    fn family(&self) -> String {
        self.0.family().to_string()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k()
    }

    #[getter]
    fn directed(&self) -> bool {
        self.0.directedness() == Directedness::Directed
    }

    #[getter]
    fn warning(&self) -> Option<String> {
        self.0.warning().map(str::to_owned)
    }

    #[getter]
    fn nodes(&self) -> PyNodeSet {
        PyNodeSet(self.0.nodes().clone())
    }

    /// Edges as index pairs; undirected pairs have `i < j`.
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    /// Edges as id pairs.
    fn edge_ids(&self) -> Vec<(String, String)> {
        let nodes = self.0.nodes();
        self.0
            .edges()
            .iter()
            .map(|&(a, b)| (nodes.id(a).to_owned(), nodes.id(b).to_owned()))
            .collect()
    }

    fn neighbors(&self, id: &str) -> PyResult<Vec<String>> {
        let ids = self.0.neighbors_of(id).map_err(err)?;
        Ok(ids.into_iter().map(str::to_owned).collect())
    }

    /// Void report: `{"void_free": bool, "witnesses": [(u, v, d_uv, min_neighbor_d)]}`.
    #[pyo3(signature = (by_routing = false))]
    fn check_void_free<'py>(&self, py: Python<'py>, by_routing: bool) -> PyResult<Bound<'py, PyDict>> {
        let verdict = if by_routing {
            check_by_routing(&self.0)
        } else {
            check_void_free(&self.0)
        }
        .map_err(err)?;
        verdict_dict(py, &self.0, &verdict)
    }

    /// Greedy route: `{"delivered": bool, "path": [...], "stuck": id, "best_neighbor_d": float | None}`.
    fn greedy_route<'py>(&self, py: Python<'py>, source: &str, target: &str) -> PyResult<Bound<'py, PyDict>> {
        let nodes = self.0.nodes();
        let result = greedy_route_by_id(&self.0, source, target).map_err(err)?;
        let ids: Vec<&str> = result.path().iter().map(|&i| nodes.id(i)).collect();
        let out = PyDict::new(py);
        out.set_item("delivered", result.is_delivered())?;
        out.set_item("path", ids)?;
        if let RouteResult::Void {
            stuck,
            best_neighbor_distance,
            ..
        } = result
        {
            out.set_item("stuck", nodes.id(stuck))?;
            out.set_item("best_neighbor_d", best_neighbor_distance)?;
        }
        Ok(out)
    }

    fn to_json(&self) -> PyResult<String> {
        io::graph_to_json(&self.0).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::graph_from_json(text).map(Self).map_err(err)
    }

    /// SVG drawing; `highlight=(u, v)` adds the circle around `v` through `u`.
    #[pyo3(signature = (highlight = None))]
    fn render_svg(&self, highlight: Option<(String, String)>) -> PyResult<String> {
        let nodes = self.0.nodes();
        let highlight = match highlight {
            Some((u, v)) => Some((nodes.index_of(&u).map_err(err)?, nodes.index_of(&v).map_err(err)?)),
            None => None,
        };
        render_svg(&self.0, &RenderOptions { highlight }).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> PyResult<bool> {
        conegraph::graphs_equal(&self.0, &other.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(family={}, k={}, directed={}, edges={})",
            self.0.family(),
            self.0.k(),
            self.directed(),
            self.0.edges().len()
        )
    }
}

fn verdict_dict<'py>(py: Python<'py>, graph: &GeometricGraph, verdict: &VoidVerdict) -> PyResult<Bound<'py, PyDict>> {
    let nodes = graph.nodes();
    let witnesses: Vec<_> = verdict
        .witnesses
        .iter()
        .map(|w| (nodes.id(w.u), nodes.id(w.v), w.d_uv, w.min_neighbor_distance))
        .collect();
    let out = PyDict::new(py);
    out.set_item("void_free", verdict.is_void_free())?;
    out.set_item("witnesses", witnesses)?;
    Ok(out)
}

/// Build a graph of `family` ("yao" or "theta") with `k` cones.
#[pyfunction]
#[pyo3(signature = (nodes, family, k, directed = false))]
fn build(nodes: &PyNodeSet, family: &str, k: u32, directed: bool) -> PyResult<PyGraph> {
    let directedness = if directed {
        Directedness::Directed
    } else {
        Directedness::Undirected
    };
    build_graph(&nodes.0, self::family(family)?, k, directedness)
        .map(PyGraph)
        .map_err(err)
}

/// One-based cone of `p` around `apex`.
#[pyfunction]
fn cone_of(apex: (f64, f64), p: (f64, f64), k: u32) -> PyResult<u32> {
    geometry::cone_of(&point(apex)?, &point(p)?, k)
        .map(|c| c.index())
        .map_err(err)
}

/// Angle at `apex` between the rays to `a` and `b`, in radians.
#[pyfunction]
fn angle(apex: (f64, f64), a: (f64, f64), b: (f64, f64)) -> PyResult<f64> {
    Ok(geometry::angle_at(&point(apex)?, &point(a)?, &point(b)?))
}

/// Signed projection of `p - apex` onto the bisector of cone `cone` of `k`.
#[pyfunction]
fn bisector_projection(apex: (f64, f64), p: (f64, f64), cone: u32, k: u32) -> PyResult<f64> {
    let cone = ConeIndex::new(cone, k).map_err(err)?;
    geometry::bisector_projection(&point(apex)?, &point(p)?, cone).map_err(err)
}

#[pyfunction]
fn random_nodeset(n: usize, seed: u64) -> PyResult<PyNodeSet> {
    corpus::random_nodeset(n, seed).map(PyNodeSet).map_err(err)
}

/// The built-in counter-example sets, keyed by name.
#[pyfunction]
fn load_corpus(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let out = PyDict::new(py);
    for entry in corpus::load_corpus() {
        let item = PyDict::new(py);
        let (u, v) = entry.expected_witness;
        item.set_item("witness", (entry.nodes.id(u), entry.nodes.id(v)))?;
        item.set_item("applicable_k", entry.applicable_k.clone())?;
        item.set_item("nodes", PyNodeSet(entry.nodes))?;
        out.set_item(entry.name.to_string(), item)?;
    }
    Ok(out)
}

/// Search for a node set whose graph is not void-free; `None` when the budget runs out.
#[pyfunction]
#[pyo3(signature = (family, k, min_nodes = 4, max_nodes = 8, seed = 0, budget = 1_000_000))]
fn search(
    py: Python<'_>,
    family: &str,
    k: u32,
    min_nodes: usize,
    max_nodes: usize,
    seed: u64,
    budget: u64,
) -> PyResult<Option<PyNodeSet>> {
    let family = self::family(family)?;
    let outcome = py
        .detach(|| corpus::search_counterexample(family, k, min_nodes..=max_nodes, seed, budget))
        .map_err(err)?;
    Ok(match outcome {
        SearchOutcome::Found { nodes, .. } => Some(PyNodeSet(nodes)),
        SearchOutcome::NotFound { .. } => None,
    })
}

#[pymodule]
fn pyconegraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyNodeSet>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(cone_of, m)?)?;
    m.add_function(wrap_pyfunction!(angle, m)?)?;
    m.add_function(wrap_pyfunction!(bisector_projection, m)?)?;
    m.add_function(wrap_pyfunction!(random_nodeset, m)?)?;
    m.add_function(wrap_pyfunction!(load_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    Ok(())
}
