//! Python bindings. Exact integers cross the boundary as Python `int`,
//! structured reports as plain dicts.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use spectra::closed_form::{self, EigenValue, DEFAULT_TOL};
use spectra::verify::{self, SweepConfig};
use spectra::{exact, family, Error, IntMatrix, Matrix};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidParams(_)
        | Error::DegenerateFamily(_)
        | Error::UnsupportedShape(_)
        | Error::SingularInput(_)
        | Error::SingularBlock
        | Error::DimensionMismatch(_)
        | Error::NotSymmetric => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn int_matrix(rows: Vec<Vec<BigInt>>) -> PyResult<IntMatrix> {
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(PyValueError::new_err("ragged matrix rows"));
    }
    Ok(Matrix::from_rows(rows))
}

fn from_json<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Parameters `(h, p, k)` of the family: `k` cliques of order `h` sharing a
/// common `(h − p)`-clique.
#[pyclass(name = "FamilyParams", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyFamilyParams(spectra::FamilyParams);

#[pymethods]
impl PyFamilyParams {
    #[new]
    fn new(h: usize, p: usize, k: usize) -> PyResult<Self> {
        spectra::FamilyParams::new(h, p, k)
            .map(Self)
            .map_err(to_py_err)
    }

    #[getter]
    fn h(&self) -> usize {
        self.0.h()
    }

    #[getter]
    fn p(&self) -> usize {
        self.0.p()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn common(&self) -> usize {
        self.0.common()
    }

    fn cliques(&self) -> Vec<Vec<usize>> {
        self.0.cliques()
    }

    fn __repr__(&self) -> String {
        format!(
            "FamilyParams(h={}, p={}, k={})",
            self.0.h(),
            self.0.p(),
            self.0.k()
        )
    }
}

#[pyfunction]
fn seidel_matrix(params: &PyFamilyParams) -> Vec<Vec<BigInt>> {
    family::seidel_matrix(&params.0).to_rows()
}

#[pyfunction]
fn adjacency_matrix(params: &PyFamilyParams) -> Vec<Vec<BigInt>> {
    family::adjacency_matrix(&params.0).to_rows()
}

/// Negative edges `(i, j)` with `i < j`.
#[pyfunction]
fn negative_edges(params: &PyFamilyParams) -> Vec<(usize, usize)> {
    family::signed_edges(&params.0)
        .into_iter()
        .filter(|e| e.2 == family::EdgeSign::Negative)
        .map(|(i, j, _)| (i, j))
        .collect()
}

#[pyfunction]
fn det_exact(matrix: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    let m = int_matrix(matrix)?;
    if !m.is_square() {
        return Err(PyValueError::new_err("matrix is not square"));
    }
    Ok(exact::det_exact(&m))
}

/// Coefficients of `det(M − λI)`, ascending degree.
#[pyfunction]
fn charpoly_oracle(matrix: Vec<Vec<BigInt>>) -> PyResult<Vec<BigInt>> {
    let m = int_matrix(matrix)?;
    if !m.is_square() {
        return Err(PyValueError::new_err("matrix is not square"));
    }
    Ok(exact::charpoly_oracle(&m).into_coeffs())
}

/// Factored closed form as a dict with `root1`, `e1`, `root2`, `e2`, `cubic`,
/// the expanded `coefficients` and a printable `factored` string.
#[pyfunction]
fn charpoly_closed<'py>(py: Python<'py>, params: &PyFamilyParams) -> PyResult<Bound<'py, PyDict>> {
    let f = closed_form::charpoly_closed(&params.0).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("root1", f.root1.clone())?;
    d.set_item("e1", f.e1)?;
    d.set_item("root2", f.root2.clone())?;
    d.set_item("e2", f.e2)?;
    d.set_item("cubic", f.cubic.to_vec())?;
    d.set_item("coefficients", f.expand().into_coeffs())?;
    d.set_item("factored", f.to_string())?;
    Ok(d)
}

#[pyfunction]
fn cubic_s(params: &PyFamilyParams) -> PyResult<Vec<BigInt>> {
    closed_form::cubic_s(&params.0)
        .map(|c| c.to_vec())
        .map_err(to_py_err)
}

/// `(value, multiplicity, exact)` triples in descending order; `exact` is the
/// rational value as a string, or `None` for an irrational cubic root.
#[pyfunction]
#[pyo3(signature = (params, tol = DEFAULT_TOL))]
fn spectrum_closed(
    params: &PyFamilyParams,
    tol: f64,
) -> PyResult<Vec<(f64, usize, Option<String>)>> {
    let spectrum = closed_form::spectrum_closed(&params.0, tol).map_err(to_py_err)?;
    Ok(spectrum
        .entries()
        .iter()
        .map(|e| {
            let exact = match &e.value {
                EigenValue::Exact(q) => Some(q.to_string()),
                EigenValue::CubicRoot { .. } => None,
            };
            (e.value.to_f64(), e.multiplicity, exact)
        })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (matrix, tol = DEFAULT_TOL))]
fn eig_numeric(matrix: Vec<Vec<f64>>, tol: f64) -> PyResult<Vec<f64>> {
    let width = matrix.first().map_or(0, Vec::len);
    if matrix.len() != width || matrix.iter().any(|r| r.len() != width) {
        return Err(PyValueError::new_err("matrix is not square"));
    }
    verify::eig_numeric(&Matrix::from_rows(matrix), tol).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (params, tol = DEFAULT_TOL))]
fn verify_instance<'py>(
    py: Python<'py>,
    params: &PyFamilyParams,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let report = verify::verify_instance(&params.0, tol).map_err(to_py_err)?;
    let out = from_json(py, &report)?;
    out.set_item("findings", report.statement_audit.findings())?;
    out.set_item("passed", report.passed(tol))?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (h_max, k_max, n_cap = verify::DEFAULT_N_CAP, tol = DEFAULT_TOL))]
fn sweep<'py>(
    py: Python<'py>,
    h_max: usize,
    k_max: usize,
    n_cap: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let config = SweepConfig {
        h_max,
        k_max,
        n_cap,
        tol,
    };
    let summary = py.detach(|| verify::sweep(&config));
    from_json(py, &summary)
}

#[pymodule]
fn seidel_spectra(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFamilyParams>()?;
    m.add_function(wrap_pyfunction!(seidel_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(adjacency_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(negative_edges, m)?)?;
    m.add_function(wrap_pyfunction!(det_exact, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly_closed, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_s, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum_closed, m)?)?;
    m.add_function(wrap_pyfunction!(eig_numeric, m)?)?;
    m.add_function(wrap_pyfunction!(verify_instance, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add("DEFAULT_TOL", DEFAULT_TOL)?;
    Ok(())
}
