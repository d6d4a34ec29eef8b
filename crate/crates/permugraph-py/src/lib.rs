//! Python bindings: construct groups from spec strings, build permutability
//! graphs, analyze them, and run the verification harness.
//!
//! ```python
//! import permugraph_py as pg
//! g = pg.Group("Q 8")
//! gamma = g.gamma_c()
//! gamma.analyze()["complete"]   # True
//! ```

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};

use permugraph::analysis::analyze;
use permugraph::error::Error;
use permugraph::harness::{prepare_cases_from_config, run_all_verifiers, CorpusConfig, FamilyKind};
use permugraph::subgroup::cyclic_subgroups;
use permugraph::{build_gamma_all, build_gamma_c, GroupSpec};

fn to_py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    use serde_json::Value;
    Ok(match value {
        Value::Null => py.None(),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any().unbind(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any().unbind()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.into_any().unbind()
            }
        }
        Value::String(s) => PyString::new(py, s).into_any().unbind(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any().unbind()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_any().unbind()
        }
    })
}

/// A finite group built from a spec string such as "Q 8" or "Z 4 x Z 2".
#[pyclass(frozen)]
struct Group {
    table: permugraph::GroupTable,
}

#[pymethods]
impl Group {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let table = GroupSpec::parse(spec)
            .and_then(|s| s.build())
            .map_err(to_py_err)?;
        Ok(Self { table })
    }

    fn order(&self) -> usize {
        self.table.order()
    }

    fn is_abelian(&self) -> bool {
        self.table.is_abelian()
    }

    fn is_cyclic(&self) -> bool {
        self.table.is_cyclic()
    }

    fn spec(&self) -> String {
        self.table.spec().to_string()
    }

    /// Product of two elements by index.
    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        let n = self.table.order();
        if a >= n || b >= n {
            return Err(PyValueError::new_err("element index out of range"));
        }
        Ok(self.table.mul(a, b))
    }

    fn inv(&self, a: usize) -> PyResult<usize> {
        if a >= self.table.order() {
            return Err(PyValueError::new_err("element index out of range"));
        }
        Ok(self.table.inv(a))
    }

    fn element_order(&self, a: usize) -> PyResult<u32> {
        if a >= self.table.order() {
            return Err(PyValueError::new_err("element index out of range"));
        }
        Ok(self.table.elem_order(a))
    }

    /// Element sets of the proper nontrivial cyclic subgroups.
    fn cyclic_subgroups(&self) -> Vec<Vec<usize>> {
        cyclic_subgroups(&self.table)
            .proper
            .iter()
            .map(|s| s.elements().iter().map(|&e| e as usize).collect())
            .collect()
    }

    fn cyclic_subgroup_count(&self) -> usize {
        cyclic_subgroups(&self.table).proper.len()
    }

    /// Brute-force group isomorphism (orders up to 64).
    fn is_isomorphic_to(&self, other: &Group) -> PyResult<bool> {
        permugraph::group::group_isomorphic(&self.table, &other.table).map_err(to_py_err)
    }

    /// The permutability graph of cyclic subgroups.
    fn gamma_c(&self) -> PyResult<Gamma> {
        build_gamma_c(&self.table)
            .map(|inner| Gamma { inner })
            .map_err(to_py_err)
    }

    /// The permutability graph over all proper subgroups (order <= 200).
    fn gamma_all(&self) -> PyResult<Gamma> {
        build_gamma_all(&self.table)
            .map(|inner| Gamma { inner })
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Group(\"{}\", order={})",
            self.table.spec(),
            self.table.order()
        )
    }
}

/// A permutability graph with its subgroup labels.
#[pyclass(frozen)]
struct Gamma {
    inner: permugraph::PermGraph,
}

#[pymethods]
impl Gamma {
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.graph.edges()
    }

    /// Subgroup order of each vertex.
    fn vertex_orders(&self) -> Vec<usize> {
        self.inner.vertices.iter().map(|v| v.order()).collect()
    }

    fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.inner.vertex_count())
            .map(|v| self.inner.graph.degree(v))
            .collect();
        d.sort_unstable();
        d
    }

    fn universal_vertices(&self) -> Vec<usize> {
        permugraph::universal_vertices(&self.inner)
    }

    /// Full property report as a dict (same fields as the JSON export).
    fn analyze(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let report = analyze(&self.inner.graph);
        let value =
            serde_json::to_value(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
        json_to_py(py, &value)
    }

    fn is_isomorphic_to(&self, other: &Gamma) -> PyResult<bool> {
        permugraph::analysis::is_isomorphic(&self.inner.graph, &other.inner.graph)
            .map(|w| w.is_some())
            .map_err(to_py_err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __repr__(&self) -> String {
        format!(
            "Gamma(\"{}\", vertices={}, edges={})",
            self.inner.group_spec,
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Builds the corpus and runs every theorem verifier; returns the report
/// list as dicts.
#[pyfunction]
#[pyo3(signature = (max_order = 200, families = None))]
fn verify(py: Python<'_>, max_order: usize, families: Option<Vec<String>>) -> PyResult<Py<PyAny>> {
    let families = match families {
        None => FamilyKind::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|s| {
                FamilyKind::parse(s)
                    .ok_or_else(|| PyValueError::new_err(format!("unknown family {s:?}")))
            })
            .collect::<PyResult<Vec<_>>>()?,
    };
    let config = CorpusConfig {
        max_order,
        families,
        ..CorpusConfig::default()
    };
    let cases = prepare_cases_from_config(&config).map_err(to_py_err)?;
    let reports = run_all_verifiers(&cases);
    let value = serde_json::to_value(&reports).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &value)
}

/// Analyzes a named graph like "K4", "K1,3" or "K3+4K1".
#[pyfunction]
fn analyze_named(py: Python<'_>, name: &str) -> PyResult<Py<PyAny>> {
    let g = permugraph::analysis::named_graph(name).map_err(to_py_err)?;
    let report = analyze(&g);
    let value = serde_json::to_value(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &value)
}

#[pymodule]
fn permugraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Gamma>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_named, m)?)?;
    Ok(())
}
