use atomkit::census;
use atomkit::equivalence;
use atomkit::export;
use atomkit::hecke;
use atomkit::orders;
use atomkit::structure;
use atomkit::tableaux;
use atomkit::{MoveSystem, OrderKind, SignedInvolution, SignedPermutation};
use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(atomkit_py, AtomkitError, PyValueError);

fn err(e: atomkit::Error) -> PyErr {
    AtomkitError::new_err(e.to_string())
}

/// Accepts either a window list or "a,b,c" text.
#[derive(FromPyObject)]
enum WindowArg {
    List(Vec<i32>),
    Text(String),
}

impl WindowArg {
    fn perm(self) -> PyResult<SignedPermutation> {
        match self {
            WindowArg::List(v) => SignedPermutation::from_window(v),
            WindowArg::Text(s) => SignedPermutation::parse(&s),
        }
        .map_err(err)
    }
}

#[pyclass(
    name = "SignedPermutation",
    module = "atomkit_py",
    frozen,
    eq,
    hash,
    ord,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyPerm(SignedPermutation);

#[pymethods]
impl PyPerm {
    #[new]
    fn new(window: WindowArg) -> PyResult<Self> {
        window.perm().map(PyPerm)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyPerm(SignedPermutation::identity(n))
    }

    #[staticmethod]
    fn longest(n: usize) -> Self {
        PyPerm(SignedPermutation::longest(n))
    }

    #[getter]
    fn window(&self) -> Vec<i32> {
        self.0.window().to_vec()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn length(&self) -> usize {
        self.0.coxeter_length()
    }

    fn inverse(&self) -> Self {
        PyPerm(self.0.inverse())
    }

    fn compose(&self, other: PyRef<'_, PyPerm>) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyPerm).map_err(err)
    }

    fn demazure(&self, other: PyRef<'_, PyPerm>) -> PyResult<Self> {
        hecke::demazure(&self.0, &other.0).map(PyPerm).map_err(err)
    }

    fn hecke_image(&self) -> PyInvolution {
        PyInvolution(hecke::hecke_image(&self.0))
    }

    fn is_involution(&self) -> bool {
        self.0.is_involution()
    }

    fn right_descents(&self) -> Vec<usize> {
        self.0.right_descents()
    }

    fn reduced_words(&self) -> PyResult<Vec<Vec<usize>>> {
        tableaux::reduced_words(&self.0).map_err(err)
    }

    fn count_reduced_words(&self) -> BigUint {
        tableaux::count_reduced_words(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.rank()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SignedPermutation([{}])", self.0)
    }
}

#[pyclass(
    name = "SignedInvolution",
    module = "atomkit_py",
    frozen,
    eq,
    hash,
    ord,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyInvolution(SignedInvolution);

#[pymethods]
impl PyInvolution {
    #[new]
    fn new(window: WindowArg) -> PyResult<Self> {
        SignedInvolution::new(window.perm()?)
            .map(PyInvolution)
            .map_err(err)
    }

    #[staticmethod]
    fn all(n: usize) -> Vec<Self> {
        SignedInvolution::all(n)
            .into_iter()
            .map(PyInvolution)
            .collect()
    }

    #[staticmethod]
    fn longest(n: usize) -> Self {
        PyInvolution(SignedInvolution::longest(n))
    }

    #[getter]
    fn window(&self) -> Vec<i32> {
        self.0.perm().window().to_vec()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn neg(&self) -> Vec<i32> {
        self.0.neg().to_vec()
    }

    #[getter]
    fn fix(&self) -> Vec<i32> {
        self.0.fix().to_vec()
    }

    #[getter]
    fn pairs(&self) -> Vec<(i32, i32)> {
        self.0.pairs().to_vec()
    }

    fn involution_length(&self) -> usize {
        self.0.involution_length()
    }

    fn perm(&self) -> PyPerm {
        PyPerm(self.0.perm().clone())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SignedInvolution([{}])", self.0)
    }
}

fn wrap(ws: Vec<SignedPermutation>) -> Vec<PyPerm> {
    ws.into_iter().map(PyPerm).collect()
}

fn order(name: &str) -> PyResult<OrderKind> {
    name.parse().map_err(err)
}

/// A(z)^-1, or A(z) with `inverse=True`.
#[pyfunction]
#[pyo3(signature = (z, inverse = false))]
fn atoms(z: PyRef<'_, PyInvolution>, inverse: bool) -> Vec<PyPerm> {
    wrap(if inverse {
        orders::atoms(&z.0)
    } else {
        orders::atoms_fast(&z.0)
    })
}

/// Exhaustive A(z), not inverted.
#[pyfunction]
fn atoms_brute(z: PyRef<'_, PyInvolution>) -> PyResult<Vec<PyPerm>> {
    hecke::atoms_brute(&z.0).map(wrap).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (z, inverse = false))]
fn hecke_atoms(z: PyRef<'_, PyInvolution>, inverse: bool) -> PyResult<Vec<PyPerm>> {
    let mut ws = hecke::hecke_atoms_brute(&z.0).map_err(err)?;
    if !inverse {
        ws = ws.iter().map(|w| w.inverse()).collect();
    }
    ws.sort();
    Ok(wrap(ws))
}

#[pyfunction]
#[pyo3(signature = (z, order_name = "ltB"))]
fn hasse_dot(z: PyRef<'_, PyInvolution>, order_name: &str) -> PyResult<String> {
    Ok(export::hasse_dot(&orders::hasse(&z.0, order(order_name)?)))
}

#[pyfunction]
#[pyo3(signature = (z, order_name = "ltB"))]
fn hasse_json(z: PyRef<'_, PyInvolution>, order_name: &str) -> PyResult<String> {
    Ok(export::hasse_json(&orders::hasse(&z.0, order(order_name)?)).to_string())
}

/// Covers as `(lower, upper, kind)` triples of windows.
#[pyfunction]
#[pyo3(signature = (z, order_name = "ltB"))]
fn covers(z: PyRef<'_, PyInvolution>, order_name: &str) -> PyResult<Vec<(PyPerm, PyPerm, String)>> {
    let h = orders::hasse(&z.0, order(order_name)?);
    Ok(h.covers
        .iter()
        .map(|&(i, j, k)| {
            (
                PyPerm(h.elements[i].clone()),
                PyPerm(h.elements[j].clone()),
                k.name().to_string(),
            )
        })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (z, order_name = "ltB"))]
fn extremes(z: PyRef<'_, PyInvolution>, order_name: &str) -> PyResult<(Vec<PyPerm>, Vec<PyPerm>)> {
    let (lo, hi) = orders::extremes(&z.0, order(order_name)?);
    Ok((wrap(lo), wrap(hi)))
}

#[pyfunction]
fn rank_b(w: PyRef<'_, PyPerm>) -> PyResult<usize> {
    orders::rank_b(&w.0).map_err(err)
}

#[pyfunction]
fn ncsp(z: PyRef<'_, PyInvolution>) -> Vec<Vec<(i32, i32)>> {
    structure::ncsp(&z.0, None)
        .into_iter()
        .map(|m| m.blocks().to_vec())
        .collect()
}

#[pyfunction]
fn shape(w: PyRef<'_, PyPerm>) -> PyResult<Vec<(i32, i32)>> {
    structure::shape(&w.0)
        .map(|m| m.blocks().to_vec())
        .map_err(err)
}

#[pyfunction]
fn nested_data<'py>(py: Python<'py>, w: PyRef<'_, PyPerm>) -> PyResult<Bound<'py, PyDict>> {
    let d = structure::nested_data(&w.0).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("ndes", d.ndes)?;
    out.set_item("nfix", d.nfix)?;
    out.set_item("nneg", d.nneg)?;
    Ok(out)
}

#[pyfunction]
fn recover_involution(w: PyRef<'_, PyPerm>) -> PyResult<PyInvolution> {
    structure::recover_involution(&w.0)
        .map(PyInvolution)
        .map_err(err)
}

#[pyfunction]
fn zero_b(z: PyRef<'_, PyInvolution>) -> PyPerm {
    PyPerm(structure::zero_b(&z.0))
}

#[pyfunction]
fn one_b(z: PyRef<'_, PyInvolution>) -> PyPerm {
    PyPerm(structure::one_b(&z.0))
}

/// The ≈_A or ≈_B class of `w` ("a" or "b").
#[pyfunction]
#[pyo3(signature = (w, ruleset = "b"))]
fn equivalence_class(w: PyRef<'_, PyPerm>, ruleset: &str) -> PyResult<Vec<PyPerm>> {
    let rules: MoveSystem = ruleset.parse().map_err(err)?;
    Ok(wrap(equivalence::equivalence_class(&w.0, rules)))
}

#[pyfunction]
fn is_atomic(z: PyRef<'_, PyInvolution>) -> bool {
    census::is_atomic(&z.0)
}

#[pyfunction]
fn radius(z: PyRef<'_, PyInvolution>) -> PyResult<usize> {
    census::radius(&z.0).map_err(err)
}

/// Census rows as dicts; `enumerated` is None unless `check`.
#[pyfunction]
#[pyo3(signature = (n, check = false))]
fn census_rows<'py>(py: Python<'py>, n: usize, check: bool) -> PyResult<Vec<Bound<'py, PyDict>>> {
    census::census(n, check)
        .map_err(err)?
        .into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("n", r.n)?;
            d.set_item("class", r.class.name())?;
            d.set_item("r", r.r)?;
            d.set_item("k", r.k)?;
            d.set_item("match", r.matches())?;
            d.set_item("enumerated", r.enumerated)?;
            d.set_item("formula", r.formula)?;
            Ok(d)
        })
        .collect()
}

#[pyfunction]
fn rhat(z: PyRef<'_, PyInvolution>) -> BigUint {
    tableaux::rhat(&z.0)
}

/// `(name, n, status)` for each identity check.
#[pyfunction]
fn verify_identities(n: usize) -> Vec<(String, usize, String)> {
    tableaux::verify_identities(n)
        .into_iter()
        .map(|c| (c.name.to_string(), c.n, c.status.to_string()))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (z, order_name = "lllB", paranoid = false))]
fn probe<'py>(
    py: Python<'py>,
    z: PyRef<'_, PyInvolution>,
    order_name: &str,
    paranoid: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let r = orders::poset_probe(&z.0, order(order_name)?, paranoid).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("order", r.order)?;
    d.set_item("size", r.size)?;
    d.set_item("covers", r.covers)?;
    d.set_item("components", r.components)?;
    d.set_item("graded", r.graded)?;
    d.set_item("graded_paranoid", r.graded_paranoid)?;
    d.set_item("bounded", r.bounded)?;
    d.set_item("lattice", r.lattice)?;
    d.set_item("lower_semilattice", r.lower_semilattice)?;
    d.set_item("upper_semilattice", r.upper_semilattice)?;
    Ok(d)
}

#[pymodule]
fn atomkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("AtomkitError", m.py().get_type::<AtomkitError>())?;
    m.add_class::<PyPerm>()?;
    m.add_class::<PyInvolution>()?;
    m.add_function(wrap_pyfunction!(atoms, m)?)?;
    m.add_function(wrap_pyfunction!(atoms_brute, m)?)?;
    m.add_function(wrap_pyfunction!(hecke_atoms, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_dot, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_json, m)?)?;
    m.add_function(wrap_pyfunction!(covers, m)?)?;
    m.add_function(wrap_pyfunction!(extremes, m)?)?;
    m.add_function(wrap_pyfunction!(rank_b, m)?)?;
    m.add_function(wrap_pyfunction!(ncsp, m)?)?;
    m.add_function(wrap_pyfunction!(shape, m)?)?;
    m.add_function(wrap_pyfunction!(nested_data, m)?)?;
    m.add_function(wrap_pyfunction!(recover_involution, m)?)?;
    m.add_function(wrap_pyfunction!(zero_b, m)?)?;
    m.add_function(wrap_pyfunction!(one_b, m)?)?;
    m.add_function(wrap_pyfunction!(equivalence_class, m)?)?;
    m.add_function(wrap_pyfunction!(is_atomic, m)?)?;
    m.add_function(wrap_pyfunction!(radius, m)?)?;
    m.add_function(wrap_pyfunction!(census_rows, m)?)?;
    m.add_function(wrap_pyfunction!(rhat, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identities, m)?)?;
    m.add_function(wrap_pyfunction!(probe, m)?)?;
    Ok(())
}
