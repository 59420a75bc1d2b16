//! Python bindings for `cubic-k3`.
//!
//! Build with `cargo build -p cubic-k3-py --release --features extension-module`
//! and copy `libcubic_k3_py.so` to `cubic_k3.so` somewhere on `sys.path`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use cubic_k3::cubic::{self, named_automorphism, point_from_ints, NVARS};
use cubic_k3::{catalog, discriminant, lattice, ClassifiedLocus};

fn err(e: cubic_k3::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "DiscriminantReport", frozen, get_all)]
struct PyReport {
    d: u64,
    has_labelling: bool,
    hodge_associated: bool,
    twisted_witness: Option<(u64, u64, u64)>,
    fano_hilbert_n: Option<u64>,
    genus: Option<u64>,
}

#[pymethods]
impl PyReport {
    fn __repr__(&self) -> String {
        format!(
            "DiscriminantReport(d={}, has_labelling={}, hodge_associated={}, twisted_witness={:?}, fano_hilbert_n={:?}, genus={:?})",
            self.d, self.has_labelling, self.hodge_associated, self.twisted_witness, self.fano_hilbert_n, self.genus
        )
    }
}

#[pyfunction]
fn check_d(d: u64) -> PyResult<PyReport> {
    if d == 0 {
        return Err(PyValueError::new_err("d must be positive"));
    }
    let r = discriminant::DiscriminantReport::new(d);
    Ok(PyReport {
        d: r.d,
        has_labelling: r.has_labelling,
        hodge_associated: r.hodge_associated,
        twisted_witness: r.twisted_witness.map(|w| (w.f, w.g, w.n)),
        fano_hilbert_n: r.fano_hilbert_n,
        genus: r.genus,
    })
}

#[pyfunction]
fn has_labelling(d: u64) -> bool {
    discriminant::has_labelling(d)
}

#[pyfunction]
fn satisfies_star(d: u64) -> bool {
    discriminant::satisfies_star(d)
}

/// Smallest witness `(f, g, n)`, or `None`; raises for unlabelled `d`.
#[pyfunction]
fn satisfies_star_star(d: u64) -> PyResult<Option<(u64, u64, u64)>> {
    let w = discriminant::satisfies_star_star(d).map_err(err)?;
    Ok(w.map(|w| (w.f, w.g, w.n)))
}

#[pyfunction]
fn fano_hilbert_param(d: u64) -> Option<u64> {
    discriminant::fano_hilbert_param(d)
}

#[pyfunction]
fn genus(n: u64) -> u64 {
    discriminant::genus(n)
}

#[pyfunction]
fn enumerate_hodge_admissible(bound: u64) -> Vec<u64> {
    discriminant::enumerate_hodge_admissible(bound)
}

/// One of `very_general`, `unconstrained`, `forces_hodge_k3`.
#[pyfunction]
fn classify_by_rank(rank: i64) -> PyResult<&'static str> {
    Ok(discriminant::classify_by_rank(rank)
        .map_err(err)?
        .verdict
        .as_str())
}

/// Returns `(partner_degree, source_genus, partner_genus)`.
#[pyfunction]
fn quotient_correspondence(
    direction: &str,
    half_degree: u64,
) -> PyResult<(u64, Option<u64>, Option<u64>)> {
    let dir = match direction {
        "forward" => discriminant::Direction::Forward,
        "backward" => discriminant::Direction::Backward,
        other => {
            return Err(PyValueError::new_err(format!(
                "direction must be 'forward' or 'backward', got {other:?}"
            )))
        }
    };
    let q = discriminant::quotient_correspondence(dir, half_degree).map_err(err)?;
    Ok((q.partner_degree, q.source_genus, q.partner_genus))
}

#[pyfunction]
fn transcendental_rank(rank: i64) -> PyResult<u32> {
    lattice::transcendental_rank(rank).map_err(err)
}

#[pyclass(name = "GramMatrix", frozen)]
struct PyGram(lattice::GramMatrix);

#[pymethods]
impl PyGram {
    #[new]
    fn new(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        lattice::GramMatrix::new(rows).map(PyGram).map_err(err)
    }

    fn discriminant(&self) -> BigInt {
        self.0.discriminant()
    }

    fn is_positive_definite(&self) -> bool {
        self.0.is_positive_definite()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }
}

#[pyclass(name = "FamilyDimension", frozen, get_all)]
struct PyFamilyDimension {
    value: u32,
    raw: i64,
    degenerate: bool,
    trivial_action: bool,
}

#[pyclass(name = "DiagonalAutomorphism", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
struct PyAutomorphism(cubic::DiagonalAutomorphism);

#[pymethods]
impl PyAutomorphism {
    #[new]
    fn new(order: u32, weights: Vec<i64>) -> PyResult<Self> {
        let w: [i64; NVARS] = weights
            .try_into()
            .map_err(|_| PyValueError::new_err("expected six weights"))?;
        cubic::DiagonalAutomorphism::new(order, w)
            .map(PyAutomorphism)
            .map_err(err)
    }

    /// Named instances: phi1..phi3, sigma1..sigma4, tau1, tau2.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        named_automorphism(name)
            .map(PyAutomorphism)
            .ok_or_else(|| PyKeyError::new_err(name.to_string()))
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    #[getter]
    fn weights(&self) -> [u32; NVARS] {
        self.0.weights()
    }

    /// Maps each eigen-weight to the number of cubic monomials carrying it.
    fn eigen_class_sizes(&self) -> Vec<(u32, usize)> {
        cubic::eigen_decomposition(&self.0)
            .iter()
            .map(|(w, ms)| (*w, ms.len()))
            .collect()
    }

    fn family_dimension(&self, k: u32) -> PyResult<PyFamilyDimension> {
        let d = cubic::family_dimension(&self.0, k).map_err(err)?;
        Ok(PyFamilyDimension {
            value: d.value,
            raw: d.raw,
            degenerate: d.degenerate,
            trivial_action: d.trivial_action,
        })
    }

    fn is_symplectic(&self, k: u32) -> bool {
        cubic::is_symplectic(&self.0, k)
    }

    fn __repr__(&self) -> String {
        format!(
            "DiagonalAutomorphism({}, {:?})",
            self.0.order(),
            self.0.weights()
        )
    }
}

#[pyclass(name = "FixedLocusComponent", frozen, get_all)]
struct PyComponent {
    eigen_weight: u32,
    variables: Vec<usize>,
    ambient_dim: usize,
    /// `None` for the ambient locus, else the classification kind.
    kind: Option<&'static str>,
    form: Option<String>,
    points: Option<u32>,
}

impl From<&cubic::FixedLocusComponent> for PyComponent {
    fn from(c: &cubic::FixedLocusComponent) -> Self {
        let (form, points) = match &c.on_x {
            Some(ClassifiedLocus::Hypersurface(f)) => (Some(f.to_string()), None),
            Some(ClassifiedLocus::Points(n)) => (None, Some(*n)),
            _ => (None, None),
        };
        PyComponent {
            eigen_weight: c.eigen_weight,
            variables: c.variables.clone(),
            ambient_dim: c.ambient_dim,
            kind: c.on_x.as_ref().map(ClassifiedLocus::kind),
            form,
            points,
        }
    }
}

#[pyfunction]
fn fixed_locus_ambient(a: &PyAutomorphism) -> Vec<PyComponent> {
    cubic::fixed_locus_ambient(&a.0)
        .iter()
        .map(PyComponent::from)
        .collect()
}

#[pyclass(name = "CubicForm", frozen)]
struct PyForm(cubic::CubicForm);

#[pymethods]
impl PyForm {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        cubic::CubicForm::parse(expr).map(PyForm).map_err(err)
    }

    #[staticmethod]
    fn fermat() -> Self {
        PyForm(cubic::CubicForm::fermat())
    }

    #[staticmethod]
    fn klein() -> Self {
        PyForm(cubic::CubicForm::klein())
    }

    #[staticmethod]
    fn clebsch() -> Self {
        PyForm(cubic::CubicForm::clebsch())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CubicForm({:?})", self.0.to_string())
    }

    /// Exact value at an integer point, as a `"p/q"` string.
    fn evaluate(&self, point: Vec<i64>) -> PyResult<String> {
        let p: [i64; NVARS] = point
            .try_into()
            .map_err(|_| PyValueError::new_err("expected six coordinates"))?;
        Ok(self.0.evaluate(&point_from_ints(p)).to_string())
    }

    /// The eigenvalue exponent `k` if the form is an eigenvector, else `None`.
    fn eigenvalue(&self, a: &PyAutomorphism) -> PyResult<Option<u32>> {
        cubic::is_eigenform(&self.0, &a.0).map_err(err)
    }

    fn fixed_locus(&self, a: &PyAutomorphism) -> PyResult<Vec<PyComponent>> {
        let comps = cubic::fixed_locus_on_x(&self.0, &a.0).map_err(err)?;
        Ok(comps.iter().map(PyComponent::from).collect())
    }

    /// Integer points among those given where the form and its gradient vanish.
    fn singular_points(&self, points: Vec<Vec<i64>>) -> PyResult<Vec<Vec<String>>> {
        let mut probe = Vec::with_capacity(points.len());
        for p in points {
            let p: [i64; NVARS] = p
                .try_into()
                .map_err(|_| PyValueError::new_err("expected six coordinates"))?;
            probe.push(point_from_ints(p));
        }
        let report = self.0.smoothness_probe(&probe);
        Ok(report
            .singular_witnesses
            .iter()
            .map(|p| p.iter().map(ToString::to_string).collect())
            .collect())
    }
}

#[pyclass(name = "CheckResult", frozen, get_all)]
struct PyCheck {
    check: String,
    passed: bool,
    claimed: String,
    recomputed: String,
}

impl From<catalog::CheckResult> for PyCheck {
    fn from(c: catalog::CheckResult) -> Self {
        PyCheck {
            check: c.check,
            passed: c.passed,
            claimed: c.claimed,
            recomputed: c.recomputed,
        }
    }
}

#[pymethods]
impl PyCheck {
    fn __repr__(&self) -> String {
        format!("CheckResult({:?}, passed={})", self.check, self.passed)
    }
}

#[pyclass(name = "FamilyRecord", frozen)]
struct PyRecord(catalog::FamilyRecord);

#[pymethods]
impl PyRecord {
    #[getter]
    fn name(&self) -> &str {
        &self.0.name
    }

    #[getter]
    fn automorphism(&self) -> Option<PyAutomorphism> {
        self.0.automorphism.map(PyAutomorphism)
    }

    #[getter]
    fn eigenvalue(&self) -> Option<u32> {
        self.0.eigenvalue_k
    }

    #[getter]
    fn dimension(&self) -> Option<u32> {
        self.0.claimed_dimension
    }

    #[getter]
    fn symplectic(&self) -> bool {
        self.0.symplectic
    }

    #[getter]
    fn divisors(&self) -> Vec<u64> {
        self.0.divisor_memberships.clone()
    }

    #[getter]
    fn rank_a(&self) -> Option<String> {
        self.0.rank_a_claim.map(|c| c.render())
    }

    /// `(hodge, twisted, motivic)` as `yes` / `no` / `unknown`.
    #[getter]
    fn k3_status(&self) -> (&'static str, &'static str, &'static str) {
        let s = self.0.k3_status;
        (s.hodge.as_str(), s.twisted.as_str(), s.motivic.as_str())
    }

    #[getter]
    fn rationality(&self) -> &'static str {
        self.0.rationality.as_str()
    }

    fn validate(&self) -> Vec<PyCheck> {
        catalog::validate_record(&self.0)
            .into_iter()
            .map(PyCheck::from)
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("FamilyRecord({:?})", self.0.name)
    }
}

fn records(source: Option<&str>) -> PyResult<Vec<catalog::FamilyRecord>> {
    match source {
        None => Ok(catalog::shipped_catalog()),
        Some(text) => catalog::load_catalog(text).map_err(err),
    }
}

/// Records of the shipped catalog, or of `source` when given.
#[pyfunction]
#[pyo3(signature = (source=None))]
fn load_catalog(source: Option<&str>) -> PyResult<Vec<PyRecord>> {
    Ok(records(source)?.into_iter().map(PyRecord).collect())
}

#[pyfunction]
#[pyo3(signature = (name, source=None))]
fn family(name: &str, source: Option<&str>) -> PyResult<PyRecord> {
    let all = records(source)?;
    let names: Vec<String> = all.iter().map(|r| r.name.clone()).collect();
    all.into_iter()
        .find(|r| r.name == name)
        .map(PyRecord)
        .ok_or_else(|| {
            PyKeyError::new_err(format!(
                "unknown family {name:?}; valid: {}",
                names.join(", ")
            ))
        })
}

#[pymodule]
#[pyo3(name = "cubic_k3")]
fn cubic_k3_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(check_d, m)?)?;
    m.add_function(wrap_pyfunction!(has_labelling, m)?)?;
    m.add_function(wrap_pyfunction!(satisfies_star, m)?)?;
    m.add_function(wrap_pyfunction!(satisfies_star_star, m)?)?;
    m.add_function(wrap_pyfunction!(fano_hilbert_param, m)?)?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_hodge_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(classify_by_rank, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_correspondence, m)?)?;
    m.add_function(wrap_pyfunction!(transcendental_rank, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_locus_ambient, m)?)?;
    m.add_function(wrap_pyfunction!(load_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyGram>()?;
    m.add_class::<PyFamilyDimension>()?;
    m.add_class::<PyAutomorphism>()?;
    m.add_class::<PyComponent>()?;
    m.add_class::<PyForm>()?;
    m.add_class::<PyCheck>()?;
    m.add_class::<PyRecord>()?;
    Ok(())
}
