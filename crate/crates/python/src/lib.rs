//! Python bindings. Results come back as plain dicts and lists shaped like
//! the CLI's JSON output; coefficients keep their exact `num`/`den` form and
//! a readable `*_text` field where one exists.

use std::str::FromStr;

use fermijack::halperin::{omega_eigenstate, HalperinError};
use fermijack::partitions::{verify_identity, IdentityKind, Partition};
use fermijack::spectral_solver::{eigenstate, energy as model_energy, spectrum as level_spectrum, to_polynomial, Model, Normalization, SolverError, Spectrum};
use fermijack::symfunc::SymBasis;
use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde_json::Value;

create_exception!(fermijack, ResonanceError, PyException, "An energy gap vanishes at the requested coupling.");
create_exception!(fermijack, DegenerateError, PyException, "Two states share an energy at the requested coupling.");

fn solver_err(e: SolverError) -> PyErr {
    match e {
        SolverError::Resonance { .. } => ResonanceError::new_err(e.to_string()),
        SolverError::Degenerate { .. } => DegenerateError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(value_err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn beta(b: Option<&str>) -> PyResult<Option<BigRational>> {
    b.map(|s| BigRational::from_str(s.trim()).map_err(|_| value_err(format!("cannot parse coupling `{s}`"))))
        .transpose()
}

fn solve(model: &str, lambda: Vec<u32>, b: Option<&str>, normalize: &str) -> PyResult<Spectrum> {
    let model = Model::from_str(model).map_err(solver_err)?;
    let s = eigenstate(model, &partition(lambda)?).map_err(solver_err)?;
    let s = match beta(b)? {
        Some(b) => s.specialize(&b).map_err(solver_err)?,
        None => s,
    };
    s.normalized(Normalization::from_str(normalize).map_err(value_err)?).map_err(solver_err)
}

/// The Jack eigenstate for λ. `beta` is b² as an integer or "p/q" string.
#[pyfunction]
#[pyo3(signature = (model, lam, beta=None, basis="schur", normalize="monic"))]
fn jack<'py>(py: Python<'py>, model: &str, lam: Vec<u32>, beta: Option<&str>, basis: &str, normalize: &str) -> PyResult<Bound<'py, PyAny>> {
    let basis = SymBasis::from_str(basis).map_err(value_err)?;
    to_py(py, &solve(model, lam, beta, normalize)?.to_json(basis))
}

/// The closed-form energy as text, e.g. "2-4*b^2".
#[pyfunction]
fn energy(model: &str, lam: Vec<u32>) -> PyResult<String> {
    let model = Model::from_str(model).map_err(solver_err)?;
    Ok(model_energy(model, &partition(lam)?).to_string())
}

/// All eigenstates at one level.
#[pyfunction]
#[pyo3(signature = (model, level, basis="schur"))]
fn spectrum<'py>(py: Python<'py>, model: &str, level: u32, basis: &str) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let model = Model::from_str(model).map_err(solver_err)?;
    let basis = SymBasis::from_str(basis).map_err(value_err)?;
    level_spectrum(model, level)
        .map_err(solver_err)?
        .iter()
        .map(|s| to_py(py, &s.to_json(basis)))
        .collect()
}

/// The Jack polynomial as LaTeX in the chosen basis.
#[pyfunction]
#[pyo3(signature = (model, lam, basis="powersum", beta=None))]
fn latex(model: &str, lam: Vec<u32>, basis: &str, beta: Option<&str>) -> PyResult<String> {
    let basis = SymBasis::from_str(basis).map_err(value_err)?;
    Ok(to_polynomial(&solve(model, lam, beta, "monic")?).convert(basis).to_latex())
}

/// A Halperin eigenstate in the symbols u, v, r.
#[pyfunction]
#[pyo3(signature = (lam, mu, n1=0))]
fn halperin<'py>(py: Python<'py>, lam: Vec<u32>, mu: Vec<u32>, n1: i64) -> PyResult<Bound<'py, PyAny>> {
    let state = omega_eigenstate(&partition(lam)?, &partition(mu)?, n1).map_err(|e| match e {
        HalperinError::Resonance { .. } => ResonanceError::new_err(e.to_string()),
        HalperinError::Solver(s) => solver_err(s),
    })?;
    to_py(py, &state.to_json())
}

/// Σ(λᵗᵢ)², the diagonal fermionic energy.
#[pyfunction]
fn hd_energy(lam: Vec<u32>) -> PyResult<i64> {
    Ok(partition(lam)?.hd_energy())
}

/// Whether one of the Frobenius identities (kappa, hook, column_square,
/// theorem4) holds for λ.
#[pyfunction]
fn check_identity(kind: &str, lam: Vec<u32>) -> PyResult<bool> {
    let kind = IdentityKind::ALL
        .into_iter()
        .find(|k| k.name() == kind)
        .ok_or_else(|| value_err(format!("unknown identity `{kind}`")))?;
    Ok(verify_identity(kind, &partition(lam)?).holds())
}

#[pymodule]
#[pyo3(name = "fermijack")]
fn fermijack_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ResonanceError", m.py().get_type::<ResonanceError>())?;
    m.add("DegenerateError", m.py().get_type::<DegenerateError>())?;
    m.add_function(wrap_pyfunction!(jack, m)?)?;
    m.add_function(wrap_pyfunction!(energy, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(latex, m)?)?;
    m.add_function(wrap_pyfunction!(halperin, m)?)?;
    m.add_function(wrap_pyfunction!(hd_energy, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    Ok(())
}
