//! Python bindings for `hellify-core`.

use std::collections::BTreeMap;

use hellify_core::{classes, dh, generators, graph, helly, hyperbolicity, tight_span, Error};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(hellify, BudgetExceeded, PyRuntimeError);
create_exception!(hellify, PreconditionError, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        Error::NotDistanceHereditary | Error::TooManyVertices { .. } | Error::Disconnected => {
            PreconditionError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A simple connected undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

impl From<graph::Graph> for PyGraph {
    fn from(inner: graph::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges, labels=None))]
    fn new(n: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let mut g = graph::Graph::from_edge_list(n, &edges).map_err(to_py)?;
        if let Some(labels) = labels {
            g = g.with_labels(labels).map_err(to_py)?;
        }
        Ok(g.into())
    }

    /// Parses the `n m` header plus edge-line text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        graph::parse_edge_list(text).map(Into::into).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn label(&self, v: usize) -> PyResult<String> {
        self.check(v)?;
        Ok(self.inner.label(v))
    }

    fn distance(&self, u: usize, v: usize) -> PyResult<usize> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.inner.dist(u, v))
    }

    fn distance_matrix(&self) -> Vec<Vec<u32>> {
        let dm = self.inner.distances();
        (0..self.inner.n()).map(|v| dm.row(v).to_vec()).collect()
    }

    fn diameter(&self) -> usize {
        self.inner.distances().diameter()
    }

    fn radius(&self) -> usize {
        self.inner.distances().radius()
    }

    fn power(&self, k: usize) -> Self {
        graph::power(&self.inner, k).into()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

impl PyGraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v < self.inner.n() {
            Ok(())
        } else {
            Err(to_py(Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.n(),
            }))
        }
    }
}

/// Injective hull with its function model.
#[pyclass(name = "Hull", frozen)]
struct PyHull {
    inner: tight_span::InjectiveHull,
}

#[pymethods]
impl PyHull {
    #[getter]
    fn graph(&self) -> PyGraph {
        self.inner.hull.clone().into()
    }

    #[getter]
    fn n_real(&self) -> usize {
        self.inner.n_real()
    }

    #[getter]
    fn n_helly(&self) -> usize {
        self.inner.n_helly()
    }

    #[getter]
    fn helly_gap(&self) -> usize {
        tight_span::helly_gap(&self.inner)
    }

    #[getter]
    fn vectors(&self) -> Vec<Vec<u32>> {
        self.inner.vectors.iter().map(|f| f.0.clone()).collect()
    }

    #[getter]
    fn real(&self) -> Vec<bool> {
        self.inner.real.clone()
    }

    #[getter]
    fn real_map(&self) -> Vec<usize> {
        self.inner.real_map.clone()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __repr__(&self) -> String {
        format!(
            "Hull(n_real={}, n_helly={})",
            self.inner.n_real(),
            self.inner.n_helly()
        )
    }
}

/// Injective hull of `g` by exhaustive extremal-function enumeration.
#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn injective_hull(py: Python<'_>, g: &PyGraph, budget: Option<u64>) -> PyResult<PyHull> {
    let mut config = tight_span::HullConfig::default();
    if let Some(b) = budget {
        config.node_budget = b;
    }
    let g = g.inner.clone();
    py.detach(move || tight_span::build_injective_hull_with(&g, &config))
        .map(|inner| PyHull { inner })
        .map_err(to_py)
}

#[pyfunction]
fn extremal_functions(g: &PyGraph) -> PyResult<Vec<Vec<u32>>> {
    tight_span::enumerate_extremal_functions(&g.inner)
        .map(|fs| fs.into_iter().map(|f| f.0).collect())
        .map_err(to_py)
}

/// Injective hull of a distance-hereditary graph. Returns
/// `(hull, added)` where `added` lists `(vertex, anchor)` pairs.
#[pyfunction]
fn hellify_dh(g: &PyGraph) -> PyResult<(PyGraph, Vec<(usize, usize)>)> {
    let r = dh::hellify_dh(&g.inner).map_err(to_py)?;
    let added = r.added.iter().map(|a| (a.vertex, a.anchor)).collect();
    Ok((r.hull.into(), added))
}

/// `(vertex, kind, anchor)` triples after the root, or `None`.
#[pyfunction]
fn pruning_sequence(g: &PyGraph) -> Option<(usize, Vec<(usize, String, usize)>)> {
    dh::pruning_sequence(&g.inner).map(|s| {
        let steps = s
            .steps
            .iter()
            .map(|st| (st.vertex, st.kind.to_string(), st.anchor))
            .collect();
        (s.root, steps)
    })
}

#[pyfunction]
fn is_helly(g: &PyGraph) -> PyResult<bool> {
    helly::is_helly(&g.inner).map_err(to_py)
}

#[pyfunction]
fn is_pseudo_modular(g: &PyGraph) -> bool {
    helly::is_pseudo_modular(&g.inner)
}

#[pyfunction]
fn is_neighborhood_helly(g: &PyGraph) -> PyResult<bool> {
    helly::is_neighborhood_helly(&g.inner).map_err(to_py)
}

/// Maximal 2-sets as `(members, suspended_by)` pairs.
#[pyfunction]
fn maximal_two_sets(g: &PyGraph) -> PyResult<Vec<(Vec<usize>, Option<usize>)>> {
    helly::maximal_two_sets(&g.inner)
        .map(|sets| sets.into_iter().map(|s| (s.members, s.suspended_by)).collect())
        .map_err(to_py)
}

#[pyfunction]
fn disk_helly_up_to_radius(g: &PyGraph, r: usize) -> PyResult<bool> {
    helly::disk_helly_up_to_radius(&g.inner, r).map_err(to_py)
}

/// `(delta, witness)` with `delta` as a float half-integer.
#[pyfunction]
fn delta(g: &PyGraph) -> PyResult<(f64, (usize, usize, usize, usize))> {
    hyperbolicity::delta(&g.inner)
        .map(|r| (r.delta.as_f64(), r.witness))
        .map_err(to_py)
}

/// Membership in each supported class, keyed by class name.
#[pyfunction]
fn recognize(g: &PyGraph) -> PyResult<BTreeMap<&'static str, bool>> {
    let g = &g.inner;
    Ok(BTreeMap::from([
        ("chordal", classes::is_chordal(g)),
        ("bipartite", classes::is_bipartite(g).is_some()),
        ("split", classes::is_split(g).is_some()),
        ("at-free", classes::is_at_free(g)),
        ("distance-hereditary", classes::is_distance_hereditary(g)),
        ("square-chordal", classes::is_square_chordal(g)),
        ("helly", helly::is_helly(g).map_err(to_py)?),
        ("dually-chordal", helly::is_dually_chordal(g).map_err(to_py)?),
    ]))
}

#[pyfunction]
fn fixture(name: &str) -> PyResult<PyGraph> {
    generators::fixture(name).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn split_family(k: usize) -> PyResult<PyGraph> {
    generators::split_family(k).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn cocomparability_family(k: usize) -> PyResult<(PyGraph, Vec<usize>)> {
    generators::cocomparability_family(k)
        .map(|(g, order)| (g.into(), order))
        .map_err(to_py)
}

#[pyfunction]
fn crown_family(k: usize) -> PyResult<PyGraph> {
    generators::crown_family(k).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn random_chordal(n: usize, seed: u64) -> PyGraph {
    generators::random_chordal(n, seed).into()
}

#[pyfunction]
fn random_dh(n: usize, seed: u64) -> PyGraph {
    generators::random_dh(n, seed).into()
}

#[pyfunction]
fn random_connected(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(PyValueError::new_err("p must lie in [0, 1]"));
    }
    Ok(generators::random_connected(n, p, seed).into())
}

#[pymodule]
fn hellify(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyHull>()?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add_function(wrap_pyfunction!(injective_hull, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_functions, m)?)?;
    m.add_function(wrap_pyfunction!(hellify_dh, m)?)?;
    m.add_function(wrap_pyfunction!(pruning_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(is_helly, m)?)?;
    m.add_function(wrap_pyfunction!(is_pseudo_modular, m)?)?;
    m.add_function(wrap_pyfunction!(is_neighborhood_helly, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_two_sets, m)?)?;
    m.add_function(wrap_pyfunction!(disk_helly_up_to_radius, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(split_family, m)?)?;
    m.add_function(wrap_pyfunction!(cocomparability_family, m)?)?;
    m.add_function(wrap_pyfunction!(crown_family, m)?)?;
    m.add_function(wrap_pyfunction!(random_chordal, m)?)?;
    m.add_function(wrap_pyfunction!(random_dh, m)?)?;
    m.add_function(wrap_pyfunction!(random_connected, m)?)?;
    Ok(())
}
