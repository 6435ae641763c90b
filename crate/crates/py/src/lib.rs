//! Python bindings.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use fibercount::ci as fci;
use fibercount::{ledger, pencil, polytope, toric};

fn err(e: fibercount::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn lattice_rows(points: &[fibercount::LatticePoint]) -> Vec<Vec<BigInt>> {
    points.iter().map(|p| p.0.clone()).collect()
}

#[pyclass(name = "Polytope", module = "fibercount_py", frozen)]
struct Polytope(fibercount::LatticePolytope);

#[pymethods]
impl Polytope {
    /// Convex hull of integer points.
    #[new]
    fn new(points: Vec<Vec<BigInt>>) -> PyResult<Self> {
        let pts: Vec<_> = points.into_iter().map(fibercount::LatticePoint::new).collect();
        fibercount::LatticePolytope::hull(&pts).map(Polytope).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (text, require_lattice=false))]
    fn from_json(text: &str, require_lattice: bool) -> PyResult<Self> {
        polytope::polytope_from_json(text, require_lattice)
            .map(Polytope)
            .map_err(err)
    }

    fn to_json(&self) -> String {
        polytope::polytope_to_json(&self.0).to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn is_lattice(&self) -> bool {
        self.0.is_lattice()
    }

    #[getter]
    fn is_full_dim(&self) -> bool {
        self.0.is_full_dim()
    }

    /// Vertices as lists of `fractions.Fraction`.
    fn vertices<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        let fraction = py.import("fractions")?.getattr("Fraction")?;
        self.0
            .vertices()
            .iter()
            .map(|v| {
                v.0.iter()
                    .map(|c| fraction.call1((c.numer().clone(), c.denom().clone())))
                    .collect()
            })
            .collect()
    }

    fn polar_dual(&self) -> PyResult<Self> {
        self.0.polar_dual().map(Polytope).map_err(err)
    }

    fn is_reflexive(&self) -> PyResult<bool> {
        self.0.is_reflexive().map_err(err)
    }

    fn lattice_points(&self) -> Vec<Vec<BigInt>> {
        lattice_rows(&self.0.lattice_points())
    }

    fn interior_points(&self) -> PyResult<Vec<Vec<BigInt>>> {
        let (inner, _) = self.0.split_lattice_points().map_err(err)?;
        Ok(lattice_rows(&inner))
    }

    fn boundary_points(&self) -> PyResult<Vec<Vec<BigInt>>> {
        let (_, outer) = self.0.split_lattice_points().map_err(err)?;
        Ok(lattice_rows(&outer))
    }

    fn translate(&self, shift: Vec<BigInt>) -> PyResult<Self> {
        self.0
            .translate(&fibercount::LatticePoint::new(shift))
            .map(Polytope)
            .map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "Laurent", module = "fibercount_py", frozen)]
struct Laurent(fibercount::LaurentPolynomial);

#[pymethods]
impl Laurent {
    /// Parses `text`; without `vars` the variables are taken in order of appearance.
    #[new]
    #[pyo3(signature = (text, vars=None))]
    fn new(text: &str, vars: Option<Vec<String>>) -> PyResult<Self> {
        let p = match vars {
            Some(v) => fibercount::LaurentPolynomial::parse(text, &v),
            None => fibercount::LaurentPolynomial::parse_infer(text),
        };
        p.map(Laurent).map_err(err)
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.0.vars().to_vec()
    }

    fn num_terms(&self) -> usize {
        self.0.num_terms()
    }

    /// `(exponent, coefficient)` pairs, the coefficient as a string.
    fn terms(&self) -> Vec<(Vec<i64>, String)> {
        self.0.terms().map(|(e, c)| (e.clone(), c.to_string())).collect()
    }

    fn newton_polytope(&self) -> PyResult<Polytope> {
        self.0.newton_polytope().map(Polytope).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Laurent({:?})", self.0.to_string())
    }
}

#[pyclass(name = "Report", module = "fibercount_py", frozen)]
struct Report(fibercount::VerificationReport);

#[pymethods]
impl Report {
    #[getter]
    fn id(&self) -> String {
        self.0.id.clone()
    }

    /// `"PASS"`, `"CONDITIONAL"` or `"FAIL"`.
    #[getter]
    fn status(&self) -> &'static str {
        self.0.status().as_str()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.pass()
    }

    #[getter]
    fn values<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (k, v) in &self.0.values {
            d.set_item(k, v)?;
        }
        Ok(d)
    }

    /// `(name, expected, computed, pass)` tuples.
    #[getter]
    fn checks(&self) -> Vec<(String, i64, i64, bool)> {
        self.0
            .checks
            .iter()
            .map(|c| (c.name.clone(), c.expected, c.computed, c.pass))
            .collect()
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        self.0.summary_line()
    }
}

#[pyclass(name = "CiSpec", module = "fibercount_py", frozen)]
struct CiSpec(fci::CiSpec);

#[pymethods]
impl CiSpec {
    /// `"N;d1,d2,..."`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(CiSpec).map_err(err)
    }

    #[getter]
    fn ambient(&self) -> usize {
        self.0.ambient()
    }

    #[getter]
    fn degrees(&self) -> Vec<usize> {
        self.0.degrees().to_vec()
    }

    #[getter]
    fn fano_index(&self) -> usize {
        self.0.fano_index()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn givental(&self) -> Laurent {
        Laurent(fibercount::laurent::givental_ci(&self.0))
    }

    fn matrix_m(&self) -> PyResult<Vec<Vec<BigInt>>> {
        fci::matrix_m(&self.0).map(|r| lattice_rows(&r)).map_err(err)
    }

    fn h0(&self) -> BigInt {
        fci::h0_anticanonical(&self.0)
    }

    fn h0_oracle(&self) -> BigInt {
        fci::h0_monomial_oracle(&self.0)
    }

    fn r_boundary(&self) -> PyResult<BigInt> {
        fci::r_boundary(&self.0).map_err(err)
    }

    fn verify(&self) -> PyResult<Report> {
        fci::verify_ci(&self.0).map(Report).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("CiSpec({})", self.0)
    }
}

/// Verifies every complete intersection with ambient dimension up to `max_ambient`.
#[pyfunction]
fn sweep(py: Python<'_>, max_ambient: usize) -> Vec<Report> {
    py.detach(|| fci::sweep(max_ambient))
        .into_iter()
        .map(Report)
        .collect()
}

/// Verifies a smooth toric Fano variety given by the vertices of its fan polytope.
#[pyfunction]
#[pyo3(signature = (rays, name="input"))]
fn verify_toric(rays: Vec<Vec<BigInt>>, name: &str) -> PyResult<Report> {
    let pts: Vec<_> = rays.into_iter().map(fibercount::LatticePoint::new).collect();
    let t = toric::ToricFanoInput::new(name, &pts).map_err(err)?;
    Ok(Report(toric::verify_toric(&t)))
}

/// Reports for the built-in toric fixtures.
#[pyfunction]
fn toric_fixtures() -> Vec<Report> {
    toric::toric_fixtures().iter().map(toric::verify_toric).map(Report).collect()
}

/// Reports for the built-in threefold cases.
#[pyfunction]
fn threefolds() -> Vec<Report> {
    ledger::builtin_cases().iter().map(ledger::verify_ledger).map(Report).collect()
}

/// The sextic pencil identity: derived and printed factors and their verdicts.
#[pyfunction]
fn sextic_pencil(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let r = pencil::check().map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("derived_factor", r.derived_factor.to_string())?;
    d.set_item("printed_factor", r.printed_factor.to_string())?;
    d.set_item("derived_identity", r.derived_matches)?;
    d.set_item("printed_identity", r.printed_matches)?;
    d.set_item("factors_agree", r.factors_agree())?;
    d.set_item("h0_minus_1", r.h0_minus_one)?;
    Ok(d)
}

#[pymodule]
fn fibercount_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polytope>()?;
    m.add_class::<Laurent>()?;
    m.add_class::<CiSpec>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(verify_toric, m)?)?;
    m.add_function(wrap_pyfunction!(toric_fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(threefolds, m)?)?;
    m.add_function(wrap_pyfunction!(sextic_pencil, m)?)?;
    Ok(())
}
