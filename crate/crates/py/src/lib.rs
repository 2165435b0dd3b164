//! Python bindings for the `heffter` crate.
//!
//! Residues cross the boundary as signed integers in `(-v/2, v/2]`, except
//! face walks, which use canonical vertex labels `0..v`.

use heffter::construct::{self, RandomSpec, DEFAULT_MAX_ATTEMPTS};
use heffter::decomp::{develop, df_from_array, orthogonal, Axis};
use heffter::embed::{self, Shape};
use heffter::format::{parse_array, parse_orderings, write_array, write_orderings};
use heffter::verify::{self, SearchOutcome, DEFAULT_BUDGET};
use heffter::{ArrayParams, Cell, Error, PFArray, Residue, Transversal};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidParameters(_)
        | Error::Parse { .. }
        | Error::Shape(_)
        | Error::NotHeffter(_)
        | Error::Transversal(_)
        | Error::InvalidInput(_)
        | Error::NotApplicable(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn signed(xs: &[Residue]) -> Vec<i64> {
    xs.iter().map(|x| x.signed()).collect()
}

fn residues(xs: &[i64], v: u64) -> Vec<Residue> {
    xs.iter().map(|&x| Residue::new(x, v)).collect()
}

/// A partially filled array over `Z_v`.
#[pyclass(name = "Array", module = "heffter_py", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyArray {
    inner: PFArray,
}

#[pymethods]
impl PyArray {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyArray {
            inner: parse_array(text).map_err(py_err)?,
        })
    }

    /// Builds an array from rows of ints and `None`s.
    #[staticmethod]
    #[pyo3(signature = (rows, h, k, t = 1))]
    fn from_rows(rows: Vec<Vec<Option<i64>>>, h: usize, k: usize, t: u64) -> PyResult<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        let params = ArrayParams::new(m, n, h, k, t).map_err(py_err)?;
        Ok(PyArray {
            inner: PFArray::from_rows(params, &rows).map_err(py_err)?,
        })
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.params().m
    }
    #[getter]
    fn n(&self) -> usize {
        self.inner.params().n
    }
    #[getter]
    fn h(&self) -> usize {
        self.inner.params().h
    }
    #[getter]
    fn k(&self) -> usize {
        self.inner.params().k
    }
    #[getter]
    fn t(&self) -> u64 {
        self.inner.params().t
    }
    #[getter]
    fn v(&self) -> u64 {
        self.inner.modulus()
    }

    fn rows(&self) -> Vec<Vec<Option<i64>>> {
        let p = self.inner.params();
        (1..=p.m)
            .map(|i| {
                (1..=p.n)
                    .map(|j| self.inner.get(i, j).map(|x| x.signed()))
                    .collect()
            })
            .collect()
    }

    /// Entry at 1-based `(row, col)`, or `None` for an empty cell.
    fn get(&self, row: usize, col: usize) -> Option<i64> {
        self.inner.get(row, col).map(|x| x.signed())
    }

    fn row_sum(&self, i: usize) -> i64 {
        self.inner.row_sum(i).signed()
    }

    fn column_sum(&self, j: usize) -> i64 {
        self.inner.column_sum(j).signed()
    }

    /// Violations of the non-zero sum Heffter conditions (empty when valid).
    fn verify(&self) -> Vec<String> {
        verify::verify_nh(&self.inner)
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    /// Violations of the zero-sum Heffter conditions.
    fn verify_heffter(&self) -> Vec<String> {
        verify::verify_heffter(&self.inner)
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    /// Lines whose natural ordering is not simple.
    fn globally_simple_violations(&self) -> Vec<String> {
        verify::is_globally_simple(&self.inner)
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    fn __str__(&self) -> String {
        write_array(&self.inner)
    }

    fn __repr__(&self) -> String {
        let p = self.inner.params();
        format!(
            "Array(m={}, n={}, h={}, k={}, t={})",
            p.m, p.n, p.h, p.k, p.t
        )
    }
}

/// Row and column orderings of an array's entries.
#[pyclass(
    name = "Orderings",
    module = "heffter_py",
    eq,
    frozen,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyOrderings {
    inner: verify::OrderingPair,
}

#[pymethods]
impl PyOrderings {
    #[new]
    fn new(array: &PyArray, rows: Vec<Vec<i64>>, columns: Vec<Vec<i64>>) -> PyResult<Self> {
        let v = array.inner.modulus();
        let inner = verify::OrderingPair {
            rows: rows.iter().map(|r| residues(r, v)).collect(),
            columns: columns.iter().map(|c| residues(c, v)).collect(),
        };
        inner.validate(&array.inner).map_err(py_err)?;
        Ok(PyOrderings { inner })
    }

    #[staticmethod]
    fn parse(text: &str, array: &PyArray) -> PyResult<Self> {
        Ok(PyOrderings {
            inner: parse_orderings(text, &array.inner).map_err(py_err)?,
        })
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.rows.iter().map(|r| signed(r)).collect()
    }

    #[getter]
    fn columns(&self) -> Vec<Vec<i64>> {
        self.inner.columns.iter().map(|c| signed(c)).collect()
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    fn __str__(&self) -> String {
        write_orderings(&self.inner)
    }
}

/// A traced biembedding of `K_v`.
#[pyclass(name = "Embedding", module = "heffter_py", frozen)]
struct PyEmbedding {
    run: embed::EmbeddingRun,
}

#[pymethods]
impl PyEmbedding {
    #[getter]
    fn vertices(&self) -> u64 {
        self.run.embedding.vertices
    }
    #[getter]
    fn edges(&self) -> u64 {
        self.run.embedding.edges
    }
    #[getter]
    fn genus(&self) -> u64 {
        self.run.embedding.genus
    }
    #[getter]
    fn face_count(&self) -> usize {
        self.run.embedding.faces.len()
    }
    #[getter]
    fn faces_match_circuits(&self) -> bool {
        self.run.faces_match
    }
    #[getter]
    fn orderings(&self) -> PyOrderings {
        PyOrderings {
            inner: self.run.orderings.clone(),
        }
    }

    /// `(color, walk)` per face, color being `"row"` or `"column"`.
    fn faces(&self) -> Vec<(String, Vec<u64>)> {
        self.run
            .embedding
            .faces
            .iter()
            .map(|f| {
                (
                    f.color.to_string(),
                    f.circuit.vertices.iter().map(|x| x.value()).collect(),
                )
            })
            .collect()
    }

    /// The rotation template as a cycle starting at 1.
    fn rho0(&self) -> Vec<i64> {
        signed(&self.run.rotation.cycle())
    }

    fn __str__(&self) -> String {
        self.run.embedding.to_string()
    }
}

#[pyfunction]
fn nh_k1(n: usize) -> PyResult<PyArray> {
    Ok(PyArray {
        inner: construct::nh_k1(n).map_err(py_err)?,
    })
}

#[pyfunction]
fn nh_k2(n: usize) -> PyResult<PyArray> {
    Ok(PyArray {
        inner: construct::nh_k2(n).map_err(py_err)?,
    })
}

#[pyfunction]
fn nh_diagonal(n: usize, k: usize) -> PyResult<PyArray> {
    Ok(PyArray {
        inner: construct::nh_diagonal(n, k).map_err(py_err)?,
    })
}

#[pyfunction]
fn nh_rectangular(m: usize, n: usize) -> PyResult<PyArray> {
    Ok(PyArray {
        inner: construct::nh_rectangular(m, n).map_err(py_err)?,
    })
}

/// Negates a transversal (given as 1-based `(row, col)` pairs, or found
/// automatically) of a square Heffter array.
#[pyfunction]
#[pyo3(signature = (array, transversal = None))]
fn nh_from_heffter(array: &PyArray, transversal: Option<Vec<(usize, usize)>>) -> PyResult<PyArray> {
    let t = transversal
        .map(|cells| Transversal::new(cells.into_iter().map(|(r, c)| Cell::new(r, c)).collect()));
    Ok(PyArray {
        inner: construct::nh_from_heffter(&array.inner, t.as_ref()).map_err(py_err)?,
    })
}

/// Returns `(array, attempts)`.
#[pyfunction]
#[pyo3(signature = (m, n, h, k, t, seed, max_attempts = DEFAULT_MAX_ATTEMPTS))]
fn nh_random(
    m: usize,
    n: usize,
    h: usize,
    k: usize,
    t: u64,
    seed: u64,
    max_attempts: usize,
) -> PyResult<(PyArray, usize)> {
    let report = construct::nh_random(RandomSpec {
        m,
        n,
        h,
        k,
        t,
        seed,
        max_attempts,
    })
    .map_err(py_err)?;
    Ok((
        PyArray {
            inner: report.array,
        },
        report.attempts.unwrap_or(1),
    ))
}

#[pyfunction]
fn is_simple_ordering(elements: Vec<i64>, v: u64) -> bool {
    verify::is_simple_ordering(&residues(&elements, v))
}

#[pyfunction]
fn partial_sums(elements: Vec<i64>, v: u64) -> Vec<i64> {
    signed(&heffter::sums::partial_sums(&residues(&elements, v)))
}

/// Returns `("found", ordering)`, `("none", None)` or `("exhausted", None)`.
#[pyfunction]
#[pyo3(signature = (elements, v, nonzero = false, budget = DEFAULT_BUDGET))]
fn find_simple_ordering(
    elements: Vec<i64>,
    v: u64,
    nonzero: bool,
    budget: u64,
) -> PyResult<(String, Option<Vec<i64>>)> {
    if v < 2 {
        return Err(PyValueError::new_err("v must be at least 2"));
    }
    Ok(
        match verify::find_simple_ordering(&residues(&elements, v), nonzero, budget)
            .map_err(py_err)?
        {
            SearchOutcome::Found(o) => ("found".into(), Some(signed(&o))),
            SearchOutcome::NotFound => ("none".into(), None),
            SearchOutcome::Exhausted => ("exhausted".into(), None),
        },
    )
}

#[pyfunction]
fn natural_orderings(array: &PyArray) -> PyOrderings {
    PyOrderings {
        inner: verify::OrderingPair::natural(&array.inner),
    }
}

#[pyfunction]
#[pyo3(signature = (array, budget = DEFAULT_BUDGET))]
fn simple_orderings(array: &PyArray, budget: u64) -> PyResult<PyOrderings> {
    Ok(PyOrderings {
        inner: verify::make_simple_pair(&array.inner, budget).map_err(py_err)?,
    })
}

#[pyfunction]
fn band_orderings(array: &PyArray) -> PyResult<PyOrderings> {
    Ok(PyOrderings {
        inner: construct::band_orderings(&array.inner).map_err(py_err)?,
    })
}

#[pyfunction]
fn compatible(orderings: &PyOrderings, array: &PyArray) -> bool {
    embed::compatible(&orderings.inner, &array.inner)
}

/// A compatible pair of simple orderings, `None` when none exists; raises
/// when the budget runs out.
#[pyfunction]
#[pyo3(signature = (array, budget = DEFAULT_BUDGET))]
fn compatible_orderings(array: &PyArray, budget: u64) -> PyResult<Option<PyOrderings>> {
    match embed::compatible_search(&array.inner, budget).map_err(py_err)? {
        SearchOutcome::Found(inner) => Ok(Some(PyOrderings { inner })),
        SearchOutcome::NotFound => Ok(None),
        SearchOutcome::Exhausted => Err(PyRuntimeError::new_err("search budget exhausted")),
    }
}

fn axis(name: &str) -> PyResult<Axis> {
    match name {
        "rows" => Ok(Axis::Rows),
        "columns" => Ok(Axis::Columns),
        other => Err(PyValueError::new_err(format!(
            "axis must be 'rows' or 'columns', got {other:?}"
        ))),
    }
}

/// Base paths (canonical vertex labels) of the difference family read from
/// one axis.
#[pyfunction]
fn difference_family(
    array: &PyArray,
    orderings: &PyOrderings,
    axis_name: &str,
) -> PyResult<Vec<Vec<u64>>> {
    let df = df_from_array(&array.inner, &orderings.inner, axis(axis_name)?).map_err(py_err)?;
    Ok(df
        .blocks
        .iter()
        .map(|b| b.vertices().iter().map(|x| x.value()).collect())
        .collect())
}

/// Develops both families; returns `(row_edges, column_edges, orthogonal)`.
#[pyfunction]
fn decompose(array: &PyArray, orderings: &PyOrderings) -> PyResult<(usize, usize, bool)> {
    let rows = develop(&df_from_array(&array.inner, &orderings.inner, Axis::Rows).map_err(py_err)?)
        .map_err(py_err)?;
    let cols =
        develop(&df_from_array(&array.inner, &orderings.inner, Axis::Columns).map_err(py_err)?)
            .map_err(py_err)?;
    let orth = orthogonal(&rows, &cols).map_err(py_err)?;
    Ok((rows.edge_count(), cols.edge_count(), orth))
}

/// Builds the biembedding; a compatible pair is searched when `orderings`
/// is omitted.
#[pyfunction]
#[pyo3(signature = (array, orderings = None, budget = DEFAULT_BUDGET))]
fn embed_array(
    array: &PyArray,
    orderings: Option<&PyOrderings>,
    budget: u64,
) -> PyResult<PyEmbedding> {
    let pair = match orderings {
        Some(o) => o.inner.clone(),
        None => match embed::compatible_search(&array.inner, budget).map_err(py_err)? {
            SearchOutcome::Found(p) => p,
            SearchOutcome::NotFound => {
                return Err(PyRuntimeError::new_err("no compatible pair exists"))
            }
            SearchOutcome::Exhausted => {
                return Err(PyRuntimeError::new_err("search budget exhausted"))
            }
        },
    };
    Ok(PyEmbedding {
        run: embed::archdeacon_embedding(&array.inner, &pair).map_err(py_err)?,
    })
}

/// `shape` is `"square"` or `"rectangular"`.
#[pyfunction]
#[pyo3(signature = (m, n, h, k, shape))]
fn genus_closed_form(m: usize, n: usize, h: usize, k: usize, shape: &str) -> PyResult<u64> {
    let shape = match shape {
        "square" => Shape::Square,
        "rectangular" => Shape::Rectangular,
        other => return Err(PyValueError::new_err(format!("unknown shape {other:?}"))),
    };
    let params = ArrayParams::new(m, n, h, k, 1).map_err(py_err)?;
    embed::genus_closed_form(&params, shape).map_err(py_err)
}

#[pymodule]
fn heffter_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyArray>()?;
    m.add_class::<PyOrderings>()?;
    m.add_class::<PyEmbedding>()?;
    m.add_function(wrap_pyfunction!(nh_k1, m)?)?;
    m.add_function(wrap_pyfunction!(nh_k2, m)?)?;
    m.add_function(wrap_pyfunction!(nh_diagonal, m)?)?;
    m.add_function(wrap_pyfunction!(nh_rectangular, m)?)?;
    m.add_function(wrap_pyfunction!(nh_from_heffter, m)?)?;
    m.add_function(wrap_pyfunction!(nh_random, m)?)?;
    m.add_function(wrap_pyfunction!(is_simple_ordering, m)?)?;
    m.add_function(wrap_pyfunction!(partial_sums, m)?)?;
    m.add_function(wrap_pyfunction!(find_simple_ordering, m)?)?;
    m.add_function(wrap_pyfunction!(natural_orderings, m)?)?;
    m.add_function(wrap_pyfunction!(simple_orderings, m)?)?;
    m.add_function(wrap_pyfunction!(band_orderings, m)?)?;
    m.add_function(wrap_pyfunction!(compatible, m)?)?;
    m.add_function(wrap_pyfunction!(compatible_orderings, m)?)?;
    m.add_function(wrap_pyfunction!(difference_family, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(embed_array, m)?)?;
    m.add_function(wrap_pyfunction!(genus_closed_form, m)?)?;
    Ok(())
}
