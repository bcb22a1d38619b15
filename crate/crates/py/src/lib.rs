//! Python bindings exposing the main types and operations.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use schubert_core::shapes::{self, KIndex, LieType};
use schubert_core::weyl::{Group, Letter, SignedPermutation as CoreP};

fn parse_group(t: &str) -> PyResult<Group> {
    match t {
        "A" | "a" => Ok(Group::A),
        "B" | "b" | "C" | "c" => Ok(Group::BC),
        "D" | "d" => Ok(Group::D),
        _ => Err(PyValueError::new_err(format!("unknown type '{t}'"))),
    }
}

fn parse_lie(t: &str) -> PyResult<LieType> {
    match t {
        "A" | "a" => Ok(LieType::A),
        "B" | "b" => Ok(LieType::B),
        "C" | "c" => Ok(LieType::C),
        "D" | "d" => Ok(LieType::D),
        _ => Err(PyValueError::new_err(format!("unknown type '{t}'"))),
    }
}

fn parse_k(k: &Bound<'_, PyAny>) -> PyResult<KIndex> {
    if let Ok(v) = k.extract::<u32>() {
        return Ok(KIndex::K(v));
    }
    if let Ok(s) = k.extract::<String>() {
        if s == "box" {
            return Ok(KIndex::Box);
        }
    }
    Err(PyValueError::new_err("k must be an integer or 'box'"))
}

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn letter_str(l: Letter) -> String {
    l.to_string()
}

/// A signed permutation in one-line notation.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct SignedPermutation {
    inner: CoreP,
}

#[pymethods]
impl SignedPermutation {
    #[new]
    fn new(group: &str, values: Vec<i64>) -> PyResult<Self> {
        Ok(SignedPermutation { inner: CoreP::new(parse_group(group)?, values).map_err(err)? })
    }

    fn length(&self) -> usize {
        self.inner.length()
    }

    fn values(&self) -> Vec<i64> {
        self.inner.values().to_vec()
    }

    fn one_line(&self) -> String {
        self.inner.one_line()
    }

    fn reduced_word(&self) -> Vec<String> {
        self.inner.reduced_word().into_iter().map(letter_str).collect()
    }

    fn descents(&self) -> Vec<String> {
        self.inner.descents().into_iter().map(letter_str).collect()
    }

    fn inverse(&self) -> SignedPermutation {
        SignedPermutation { inner: self.inner.inverse() }
    }

    fn sign_changes(&self) -> usize {
        self.inner.sign_changes()
    }

    fn __repr__(&self) -> String {
        format!(
            "SignedPermutation('{}', [{}])",
            self.inner.group().letter(),
            self.inner.one_line()
        )
    }
}

/// A (typed) k-strict partition.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Shape {
    inner: shapes::Shape,
}

#[pymethods]
impl Shape {
    #[new]
    #[pyo3(signature = (parts, k, tag = 0))]
    fn new(parts: Vec<u32>, k: &Bound<'_, PyAny>, tag: u8) -> PyResult<Self> {
        Ok(Shape { inner: shapes::Shape::new(parts, parse_k(k)?, tag).map_err(err)? })
    }

    fn parts(&self) -> Vec<u32> {
        self.inner.parts.clone()
    }

    fn weight(&self) -> u32 {
        self.inner.weight()
    }

    fn type_tag(&self) -> u8 {
        self.inner.type_tag
    }

    fn text(&self) -> String {
        self.inner.text()
    }

    fn __repr__(&self) -> String {
        format!("Shape({})", self.inner.text())
    }
}

/// The k-Grassmannian element of a shape.
#[pyfunction]
fn shape_to_grassmannian(shape: &Shape, lie_type: &str, n: u32) -> PyResult<SignedPermutation> {
    let w = shapes::shape_to_grassmannian(&shape.inner, parse_lie(lie_type)?, n).map_err(err)?;
    Ok(SignedPermutation { inner: w })
}

/// The shape of a k-Grassmannian element.
#[pyfunction]
fn grassmannian_to_shape(w: &SignedPermutation, k: &Bound<'_, PyAny>) -> PyResult<Shape> {
    let s = shapes::grassmannian_to_shape(&w.inner, parse_k(k)?).map_err(err)?;
    Ok(Shape { inner: s })
}

/// Raising operator expansion of a theta polynomial, as JSON.
#[pyfunction]
fn theta_formal_json(shape: &Shape) -> PyResult<String> {
    Ok(schubert_core::formal::theta_formal(&shape.inner).map_err(err)?.to_json().to_string())
}

/// Raising operator expansion of an eta polynomial, as JSON.
#[pyfunction]
fn eta_formal_json(shape: &Shape) -> PyResult<String> {
    Ok(schubert_core::formal::eta_formal(&shape.inner).map_err(err)?.to_json().to_string())
}

/// Double Schubert polynomial as a plain-text polynomial.
#[pyfunction]
#[pyo3(signature = (w, lie_type, xvars = None, with_z = true))]
fn double_schubert_str(
    w: &SignedPermutation,
    lie_type: &str,
    xvars: Option<usize>,
    with_z: bool,
) -> PyResult<String> {
    let x = xvars.unwrap_or(w.inner.length()).max(w.inner.length());
    let poly = schubert_core::nilcox::double_schubert(&w.inner, parse_lie(lie_type)?, x, true, with_z)
        .map_err(err)?;
    Ok(poly.to_string())
}

/// Double Schubert polynomial in the crate's MPoly JSON form.
#[pyfunction]
#[pyo3(signature = (w, lie_type, xvars = None, with_z = true))]
fn double_schubert_json(
    w: &SignedPermutation,
    lie_type: &str,
    xvars: Option<usize>,
    with_z: bool,
) -> PyResult<String> {
    let x = xvars.unwrap_or(w.inner.length()).max(w.inner.length());
    let poly = schubert_core::nilcox::double_schubert(&w.inner, parse_lie(lie_type)?, x, true, with_z)
        .map_err(err)?;
    Ok(poly.to_json().to_string())
}

/// (Mixed) Stanley coefficients as a list of (parts, type, count).
#[pyfunction]
fn stanley_coefficients(
    w: &SignedPermutation,
    k: &Bound<'_, PyAny>,
) -> PyResult<Vec<(Vec<u32>, u8, u64)>> {
    let counts = schubert_core::transition::stanley_coeffs_cached(&w.inner, parse_k(k)?)
        .map_err(err)?;
    Ok(counts.into_iter().map(|(s, c)| (s.parts.clone(), s.type_tag, c)).collect())
}

/// Splitting terms as (coeff, [shape text]) pairs.
#[pyfunction]
fn split_terms(
    w: &SignedPermutation,
    lie_type: &str,
    a: Vec<u32>,
    b: Vec<u32>,
    d_box_b1: bool,
) -> PyResult<Vec<(u64, Vec<String>)>> {
    let lie = parse_lie(lie_type)?;
    let a: Vec<KIndex> = a.into_iter().map(KIndex::K).collect();
    let mut b: Vec<KIndex> = b.into_iter().map(KIndex::K).collect();
    if d_box_b1 {
        b[0] = KIndex::Box;
    }
    let problem =
        schubert_core::split::SplitProblem::new(lie, w.inner.clone(), a, b).map_err(err)?;
    let terms = schubert_core::split::split_terms(&problem).map_err(err)?;
    Ok(terms
        .into_iter()
        .map(|t| (t.coeff, t.shapes.iter().map(|s| s.text()).collect()))
        .collect())
}

/// Degeneracy locus formula in LaTeX.
#[pyfunction]
fn locus_latex(
    w: &SignedPermutation,
    lie_type: &str,
    n: u32,
    a: Vec<u32>,
    b: Vec<u32>,
    d_box_b1: bool,
) -> PyResult<String> {
    let lie = parse_lie(lie_type)?;
    let a: Vec<KIndex> = a.into_iter().map(KIndex::K).collect();
    let mut b: Vec<KIndex> = b.into_iter().map(KIndex::K).collect();
    if d_box_b1 {
        b[0] = KIndex::Box;
    }
    let formula = schubert_core::locus::emit_locus(&w.inner, lie, n, &a, &b).map_err(err)?;
    Ok(formula.latex())
}

/// Runs one verification suite; returns its summary or raises.
#[pyfunction]
#[pyo3(signature = (name, n = None))]
fn verify_suite(name: &str, n: Option<u32>) -> PyResult<String> {
    schubert_core::verify::run_suite(name, n).map_err(PyValueError::new_err)
}

#[pymodule]
fn schubert_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SignedPermutation>()?;
    m.add_class::<Shape>()?;
    m.add_function(wrap_pyfunction!(shape_to_grassmannian, m)?)?;
    m.add_function(wrap_pyfunction!(grassmannian_to_shape, m)?)?;
    m.add_function(wrap_pyfunction!(theta_formal_json, m)?)?;
    m.add_function(wrap_pyfunction!(eta_formal_json, m)?)?;
    m.add_function(wrap_pyfunction!(double_schubert_str, m)?)?;
    m.add_function(wrap_pyfunction!(double_schubert_json, m)?)?;
    m.add_function(wrap_pyfunction!(stanley_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(split_terms, m)?)?;
    m.add_function(wrap_pyfunction!(locus_latex, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
