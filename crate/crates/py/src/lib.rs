//! Python bindings. Quaternions cross the boundary either as `Quaternion`
//! objects or as `(w, x, y, z)` tuples; vectors as lists of either.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qframe_core::controlled;
use qframe_core::harness::{self, Suite, TrialConfig};
use qframe_core::multiplier::{self, Symbol};
use qframe_core::random::{random_vector, rng_from_seed};
use qframe_core::{frames, Error};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ZeroDivision => PyZeroDivisionError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

#[pyclass(frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq)]
pub struct Quaternion(qframe_core::Quaternion);

#[derive(FromPyObject)]
enum QuatLike {
    Obj(Quaternion),
    Tuple((f64, f64, f64, f64)),
    Real(f64),
}

impl From<QuatLike> for qframe_core::Quaternion {
    fn from(q: QuatLike) -> Self {
        match q {
            QuatLike::Obj(q) => q.0,
            QuatLike::Tuple((w, x, y, z)) => qframe_core::Quaternion::new(w, x, y, z),
            QuatLike::Real(r) => qframe_core::Quaternion::real(r),
        }
    }
}

#[pymethods]
impl Quaternion {
    #[new]
    #[pyo3(signature = (w=0.0, x=0.0, y=0.0, z=0.0))]
    fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self(qframe_core::Quaternion::new(w, x, y, z))
    }

    #[getter]
    fn w(&self) -> f64 {
        self.0.w
    }
    #[getter]
    fn x(&self) -> f64 {
        self.0.x
    }
    #[getter]
    fn y(&self) -> f64 {
        self.0.y
    }
    #[getter]
    fn z(&self) -> f64 {
        self.0.z
    }

    fn conj(&self) -> Self {
        Self(self.0.conj())
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(Self).map_err(to_py)
    }

    fn to_tuple(&self) -> (f64, f64, f64, f64) {
        (self.0.w, self.0.x, self.0.y, self.0.z)
    }

    fn __mul__(&self, other: QuatLike) -> Self {
        Self(self.0 * qframe_core::Quaternion::from(other))
    }

    fn __rmul__(&self, other: QuatLike) -> Self {
        Self(qframe_core::Quaternion::from(other) * self.0)
    }

    fn __add__(&self, other: QuatLike) -> Self {
        Self(self.0 + qframe_core::Quaternion::from(other))
    }

    fn __sub__(&self, other: QuatLike) -> Self {
        Self(self.0 - qframe_core::Quaternion::from(other))
    }

    fn __neg__(&self) -> Self {
        Self(-self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Quaternion({}, {}, {}, {})", self.0.w, self.0.x, self.0.y, self.0.z)
    }
}

#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
pub struct QVector(qframe_core::QVector);

fn vector_from(components: Vec<QuatLike>) -> qframe_core::QVector {
    qframe_core::QVector::new(components.into_iter().map(Into::into).collect())
}

#[pymethods]
impl QVector {
    #[new]
    fn new(components: Vec<QuatLike>) -> Self {
        Self(vector_from(components))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn components(&self) -> Vec<Quaternion> {
        self.0.components().iter().copied().map(Quaternion).collect()
    }

    /// `⟨self|other⟩`, conjugate-linear in `other`.
    fn inner(&self, other: &QVector) -> PyResult<Quaternion> {
        self.0.inner(&other.0).map(Quaternion).map_err(to_py)
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    fn left_scale(&self, q: QuatLike) -> Self {
        Self(self.0.left_scale(q.into()))
    }

    fn distance(&self, other: &QVector) -> f64 {
        self.0.distance(&other.0)
    }

    fn __len__(&self) -> usize {
        self.0.dim()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QVector([{}])", self.0)
    }
}

#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
pub struct QOperator(qframe_core::QOperator);

#[pymethods]
impl QOperator {
    /// `rows[j][i]` is the coefficient of input `j` in output `i`.
    #[new]
    fn new(rows: Vec<Vec<QuatLike>>) -> PyResult<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(PyValueError::new_err("operator rows must form a square matrix"));
        }
        let entries = rows.into_iter().flatten().map(Into::into).collect();
        qframe_core::QOperator::from_entries(n, entries).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self(qframe_core::QOperator::identity(n))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        qframe_core::QOperator::parse(text).map(Self).map_err(to_py)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn rows(&self) -> Vec<Vec<Quaternion>> {
        let n = self.0.dim();
        (0..n).map(|r| (0..n).map(|c| Quaternion(self.0.entry(r, c))).collect()).collect()
    }

    fn apply(&self, v: &QVector) -> PyResult<QVector> {
        self.0.apply(&v.0).map(QVector).map_err(to_py)
    }

    fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    /// `self ∘ inner`.
    fn compose(&self, inner: &QOperator) -> Self {
        Self(self.0.compose(&inner.0))
    }

    fn spectrum(&self) -> PyResult<Vec<f64>> {
        self.0.spectrum().map_err(to_py)
    }

    fn singular_values(&self) -> Vec<f64> {
        self.0.singular_values()
    }

    #[pyo3(signature = (tol=1e-10))]
    fn is_positive(&self, tol: f64) -> PyResult<bool> {
        self.0.is_positive(tol).map_err(to_py)
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(Self).map_err(to_py)
    }

    fn sqrt_psd(&self) -> PyResult<Self> {
        self.0.sqrt_psd().map(Self).map_err(to_py)
    }

    fn op_norm(&self) -> f64 {
        self.0.op_norm()
    }

    fn max_abs_diff(&self, other: &QOperator) -> f64 {
        self.0.max_abs_diff(&other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
pub struct Frame(frames::Frame);

#[pymethods]
impl Frame {
    #[new]
    #[pyo3(signature = (vectors, dim=None))]
    fn new(vectors: Vec<QVector>, dim: Option<usize>) -> PyResult<Self> {
        let vs = vectors.into_iter().map(|v| v.0).collect();
        match dim {
            Some(n) => frames::Frame::with_dim(n, vs),
            None => frames::Frame::new(vs),
        }
        .map(Self)
        .map_err(to_py)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        frames::Frame::parse(text).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn standard_basis(n: usize) -> Self {
        Self(frames::Frame::standard_basis(n))
    }

    #[staticmethod]
    fn mercedes() -> Self {
        Self(frames::mercedes())
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn vectors(&self) -> Vec<QVector> {
        self.0.vectors().iter().cloned().map(QVector).collect()
    }

    /// Optimal bounds `(A, B)`.
    fn bounds(&self) -> (f64, f64) {
        self.0.optimal_bounds()
    }

    fn is_frame(&self) -> bool {
        self.0.is_frame()
    }

    fn frame_operator(&self) -> QOperator {
        QOperator(self.0.frame_operator().clone())
    }

    fn canonical_dual(&self) -> PyResult<Self> {
        self.0.canonical_dual().map(Self).map_err(to_py)
    }

    fn analysis(&self, v: &QVector) -> PyResult<Vec<Quaternion>> {
        Ok(self.0.analysis(&v.0).map_err(to_py)?.0.into_iter().map(Quaternion).collect())
    }

    fn synthesis(&self, coefficients: Vec<QuatLike>) -> PyResult<QVector> {
        let c = frames::CoefficientSeq(coefficients.into_iter().map(Into::into).collect());
        self.0.synthesis(&c).map(QVector).map_err(to_py)
    }

    /// `Σ ⟨v|other_k⟩ self_k`.
    fn reconstruct_with(&self, other: &Frame, v: &QVector) -> PyResult<QVector> {
        self.0.reconstruct_with(&other.0, &v.0).map(QVector).map_err(to_py)
    }

    fn to_qhf(&self) -> String {
        self.0.to_qhf()
    }
}

/// `Σ m_k ⟨h|ψ_k⟩ φ_k`; `psi` defaults to `phi`.
#[pyfunction]
#[pyo3(signature = (symbol, phi, h, psi=None))]
fn multiplier_apply(symbol: Vec<f64>, phi: &Frame, h: &QVector, psi: Option<&Frame>) -> PyResult<QVector> {
    let psi = psi.unwrap_or(phi);
    multiplier::multiplier_apply(&Symbol::Real(symbol), &phi.0, &psi.0, &h.0).map(QVector).map_err(to_py)
}

/// Controlled-frame check with 64 seeded sample vectors.
#[pyfunction]
#[pyo3(signature = (frame, controller, tol=1e-9, seed=0))]
fn check_controlled<'py>(py: Python<'py>, frame: &Frame, controller: &QOperator, tol: f64, seed: u64) -> PyResult<Bound<'py, PyDict>> {
    let mut rng = rng_from_seed(seed);
    let samples: Vec<_> = (0..harness::SAMPLES_PER_TRIAL).map(|_| random_vector(&mut rng, frame.0.dim())).collect();
    let chk = controlled::check_controlled(&frame.0, &controller.0, tol, &samples).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("controlled", chk.is_controlled)?;
    d.set_item("lower", chk.lower)?;
    d.set_item("upper", chk.upper)?;
    d.set_item("controller_in_gl_plus", chk.in_gl_plus)?;
    d.set_item("form_real", chk.form_real)?;
    Ok(d)
}

/// Runs a verification suite; returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (suite="all", trials=100, seed=0, tol=1e-9))]
fn verify(suite: &str, trials: usize, seed: u64, tol: f64) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().map_err(to_py)?;
    let cfg = TrialConfig { trials, master_seed: seed, tol, ..TrialConfig::default() };
    let rep = harness::run_suite(&cfg, suite).map_err(to_py)?;
    Ok((rep.passed(), rep.to_text()))
}

#[pymodule]
fn qframe(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Quaternion>()?;
    m.add_class::<QVector>()?;
    m.add_class::<QOperator>()?;
    m.add_class::<Frame>()?;
    m.add_function(wrap_pyfunction!(multiplier_apply, m)?)?;
    m.add_function(wrap_pyfunction!(check_controlled, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
