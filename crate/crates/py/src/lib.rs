//! Python bindings: graphs, the diameter-2 solver, the exact oracle,
//! decomposition checks and the 3-SAT construction.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use nearbip::decomposition::Verdict;
use nearbip::diam2::{Characterization, Method};
use nearbip::reduction::{Coord, Polarity};
use nearbip::{Diameter, VertexSet};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vertex_set(g: &nearbip::Graph, a: Vec<usize>) -> PyResult<VertexSet> {
    if let Some(&v) = a.iter().find(|&&v| v >= g.n()) {
        return Err(value_error(format!(
            "vertex {v} out of range for n = {}",
            g.n()
        )));
    }
    Ok(VertexSet::from_vertices(g.n(), a))
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "nearbip", frozen)]
struct PyGraph {
    inner: nearbip::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = nearbip::Graph::from_edge_list(n, &edges).map_err(value_error)?;
        Ok(Self { inner })
    }

    /// Parses the `n <count>` / `u v` edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = nearbip::io::parse_edge_list(text).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn random_diameter_two(n: usize, seed: u64) -> PyResult<Self> {
        let inner = nearbip::generate::random_diameter_two(n, seed).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbours(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbours(v).to_vec())
    }

    /// `None` for a disconnected graph.
    fn diameter(&self) -> Option<usize> {
        match self.inner.diameter() {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    fn to_edge_list(&self) -> String {
        nearbip::io::serialize_edge_list(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// Outcome of checking a candidate `A`.
#[pyclass(name = "Verdict", module = "nearbip", frozen, get_all)]
struct PyVerdict {
    /// `"valid"`, `"edge"` or `"cycle"`.
    kind: String,
    /// The edge inside `A` or the cycle inside `B`; empty when valid.
    witness: Vec<usize>,
}

#[pymethods]
impl PyVerdict {
    fn __bool__(&self) -> bool {
        self.kind == "valid"
    }

    fn __repr__(&self) -> String {
        format!("Verdict(kind={:?}, witness={:?})", self.kind, self.witness)
    }
}

impl From<Verdict> for PyVerdict {
    fn from(v: Verdict) -> Self {
        let (kind, witness) = match v {
            Verdict::Valid => ("valid", Vec::new()),
            Verdict::IndependenceViolation(u, w) => ("edge", vec![u, w]),
            Verdict::CycleInB(cycle) => ("cycle", cycle),
        };
        Self {
            kind: kind.into(),
            witness,
        }
    }
}

#[pyclass(name = "Solution", module = "nearbip", frozen, get_all)]
struct PySolution {
    a: Vec<usize>,
    /// `"deletion-bipartite"` or `"two-neighbour"`.
    method: String,
    /// `[u]` or the set `X`.
    witness: Vec<usize>,
}

#[pymethods]
impl PySolution {
    #[getter]
    fn size(&self) -> usize {
        self.a.len()
    }

    fn __repr__(&self) -> String {
        format!("Solution(a={:?}, method={:?})", self.a, self.method)
    }
}

/// Minimum independent feedback vertex set of a diameter-2 graph, or `None`
/// if it is not near-bipartite. Raises `ValueError` if the diameter is not 2.
#[pyfunction]
fn solve(g: &PyGraph) -> PyResult<Option<PySolution>> {
    let solved = nearbip::diam2::solve_min_ifvs_diam2(&g.inner).map_err(value_error)?;
    Ok(solved.map(|s| {
        let (method, witness) = match s.method {
            Method::DeletionBipartite { u } => ("deletion-bipartite", vec![u]),
            Method::TwoNeighbourSet { x } => ("two-neighbour", x.to_vec()),
        };
        PySolution {
            a: s.decomposition.a().to_vec(),
            method: method.into(),
            witness,
        }
    }))
}

/// Exact minimum by search, for graphs with at most `limit` vertices.
#[pyfunction]
#[pyo3(signature = (g, limit = nearbip::oracle::DEFAULT_MIN_IFVS_LIMIT))]
fn oracle(g: &PyGraph, limit: usize) -> PyResult<Option<Vec<usize>>> {
    let result = nearbip::oracle::Oracle::new()
        .with_limit(limit)
        .min_ifvs(&g.inner, None)
        .map_err(value_error)?;
    Ok(result.witness.map(|a| a.to_vec()))
}

#[pyfunction]
fn validate(g: &PyGraph, a: Vec<usize>) -> PyResult<PyVerdict> {
    let a = vertex_set(&g.inner, a)?;
    Ok(nearbip::validate_decomposition(&g.inner, &a).into())
}

/// `("deletion-bipartite", [u])`, `("two-neighbour", X)` or
/// `("not-near-bipartite", [])` for a diameter-2 graph.
#[pyfunction]
fn characterize(g: &PyGraph) -> PyResult<(String, Vec<usize>)> {
    let c = nearbip::diam2::yang_yuan_characterize(&g.inner).map_err(value_error)?;
    let (name, data) = match c {
        Characterization::DeletionBipartite { u } => ("deletion-bipartite", vec![u]),
        Characterization::TwoNeighbourSet { x, .. } => ("two-neighbour", x.to_vec()),
        Characterization::NotNearBipartite => ("not-near-bipartite", Vec::new()),
    };
    Ok((name.into(), data))
}

/// The diameter-3 graph built from a 3-CNF formula.
#[pyclass(name = "Reduction", module = "nearbip", frozen)]
struct PyReduction {
    inner: nearbip::reduction::HphiInstance,
}

#[pymethods]
impl PyReduction {
    /// Builds from DIMACS CNF text.
    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        let formula = nearbip::reduction::parse_dimacs_cnf(text).map_err(value_error)?;
        Ok(Self {
            inner: nearbip::reduction::build_hphi(&formula),
        })
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph.clone(),
        }
    }

    #[getter]
    fn root(&self) -> usize {
        self.inner.root()
    }

    /// Gadget vertex ids `X1, X2, X3, Y4..Y8` of each clause.
    #[getter]
    fn gadgets(&self) -> Vec<[usize; 8]> {
        self.inner.gadgets.clone()
    }

    /// `(clause, row, col, kind)`; kind is `"true"`, `"false"`,
    /// `"dominating"` or `"v0"`.
    fn coord(&self, id: usize) -> PyResult<(usize, usize, usize, &'static str)> {
        if id >= self.inner.graph.n() {
            return Err(value_error(format!("vertex {id} out of range")));
        }
        Ok(match self.inner.coord(id) {
            Coord::Cell {
                clause,
                row,
                col,
                polarity,
            } => {
                let kind = match polarity {
                    Polarity::True => "true",
                    Polarity::False => "false",
                };
                (clause, row, col, kind)
            }
            Coord::Dominating { clause, col } => (
                clause,
                self.inner.layout.block_rows() + 1,
                col,
                "dominating",
            ),
            Coord::Root => (0, 0, 0, "v0"),
        })
    }

    /// `(name, passed, detail)` for every structural check.
    fn certify(&self) -> Vec<(String, bool, String)> {
        nearbip::reduction::certify_hphi(&self.inner)
            .checks
            .into_iter()
            .map(|c| (c.name.to_string(), c.passed, c.detail))
            .collect()
    }

    /// The set `A` built from a satisfying assignment; `assignment[i]` is the
    /// value of variable `i + 1`.
    fn embed(&self, assignment: Vec<bool>) -> PyResult<Vec<usize>> {
        nearbip::reduction::assignment_to_decomposition(&self.inner, &assignment)
            .map(|d| d.a().to_vec())
            .map_err(value_error)
    }
}

#[pymodule]
#[pyo3(name = "nearbip")]
fn nearbip_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyVerdict>()?;
    m.add_class::<PySolution>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(characterize, m)?)?;
    Ok(())
}
