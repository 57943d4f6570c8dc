//! Python bindings: `import hyperpascal`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use hpt_core::exactalg::QPoly;
use hpt_core::sums::{power_sum, state_vector, ReducedForm, SystemVariant};
use hpt_core::system::{recurrence_for_k_with, Recurrence as CoreRecurrence};
use hpt_core::triangle::{generate_rows, row_counts, TriangleParams};
use hpt_core::verify::{probe_conjecture, reproduce_tables, verify_grid, GridConfig};
use hpt_core::Error;

const DEFAULT_CAP: usize = 1_000_000;

fn to_py(err: Error) -> PyErr {
    match err {
        Error::InvalidQ(_)
        | Error::InvalidK { .. }
        | Error::InvalidArgument(_)
        | Error::DimensionMismatch { .. }
        | Error::Truncated { .. } => PyValueError::new_err(err.to_string()),
        _ => PyRuntimeError::new_err(err.to_string()),
    }
}

fn to_object<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn variant(reduced: bool, form: &str) -> PyResult<SystemVariant> {
    let form = match form {
        "folded" => ReducedForm::Folded,
        "as-printed" => ReducedForm::AsPrinted,
        other => {
            return Err(PyValueError::new_err(format!(
                "form must be 'folded' or 'as-printed' (got {other:?})"
            )))
        }
    };
    Ok(if reduced {
        SystemVariant::Reduced(form)
    } else {
        SystemVariant::Full
    })
}

/// The triangle `HPT_{4,q}` for one `q >= 5`.
#[pyclass(frozen)]
struct Triangle {
    params: TriangleParams,
}

impl Triangle {
    fn rows(&self, n_max: usize, cap: usize) -> PyResult<Vec<hpt_core::triangle::Row>> {
        let generated = generate_rows(self.params, n_max, cap).map_err(to_py)?;
        match generated.truncated {
            Some(t) => Err(PyValueError::new_err(t.to_string())),
            None => Ok(generated.rows),
        }
    }
}

#[pymethods]
impl Triangle {
    #[new]
    fn new(q: i64) -> PyResult<Self> {
        Ok(Triangle {
            params: TriangleParams::new(q).map_err(to_py)?,
        })
    }

    #[getter]
    fn q(&self) -> u32 {
        self.params.q()
    }

    /// Row `n` as `(value, tag)` pairs, tag being `"A"` or `"B"`.
    #[pyo3(signature = (n, cap = DEFAULT_CAP))]
    fn row(&self, n: usize, cap: usize) -> PyResult<Vec<(BigInt, String)>> {
        let rows = self.rows(n, cap)?;
        Ok(rows[n]
            .entries()
            .iter()
            .map(|e| (BigInt::from(e.value.clone()), e.tag.to_string()))
            .collect())
    }

    /// Row `n` as text, e.g. `"1B 3A 2B 2B 3A 1B"`.
    #[pyo3(signature = (n, cap = DEFAULT_CAP))]
    fn row_string(&self, n: usize, cap: usize) -> PyResult<String> {
        Ok(self.rows(n, cap)?[n].display_plain())
    }

    /// `(a_n, b_n, s_n)`: type A, type B and total vertex counts of row `n`.
    fn row_counts(&self, n: usize) -> (BigInt, BigInt, BigInt) {
        let c = row_counts(self.params, n);
        (c.a.into(), c.b.into(), c.s.into())
    }

    /// `[(s^k)_1, ..., (s^k)_{n_max}]`.
    #[pyo3(signature = (k, n_max, cap = DEFAULT_CAP))]
    fn power_sums(&self, k: u32, n_max: usize, cap: usize) -> PyResult<Vec<BigInt>> {
        let rows = self.rows(n_max, cap)?;
        Ok(rows[1..].iter().map(|r| power_sum(r, k)).collect())
    }

    /// State vector of row `n` for exponent `k >= 2`.
    #[pyo3(signature = (n, k, cap = DEFAULT_CAP))]
    fn state_vector(&self, n: usize, k: u32, cap: usize) -> PyResult<Vec<BigInt>> {
        let rows = self.rows(n, cap)?;
        Ok(state_vector(&rows[n], k).map_err(to_py)?.coords)
    }

    fn __repr__(&self) -> String {
        format!("Triangle(q={})", self.params.q())
    }
}

/// `(s^k)_n = sum_j c_j(q) (s^k)_{n-j}`.
#[pyclass(frozen)]
struct Recurrence {
    inner: CoreRecurrence,
    reduced: bool,
}

#[pymethods]
impl Recurrence {
    #[new]
    #[pyo3(signature = (k, reduced = false, form = "folded"))]
    fn new(k: u32, reduced: bool, form: &str) -> PyResult<Self> {
        let inner = recurrence_for_k_with(k, variant(reduced, form)?).map_err(to_py)?;
        Ok(Recurrence { inner, reduced })
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order
    }

    #[getter]
    fn x_strip_count(&self) -> usize {
        self.inner.x_strip_count
    }

    /// `c_1, ..., c_d` as strings in `q`, e.g. `"q+11"`.
    #[getter]
    fn coefficients(&self) -> Vec<String> {
        self.inner
            .coefficients
            .iter()
            .map(QPoly::to_string)
            .collect()
    }

    /// `c_1, ..., c_d` as integer coefficient lists, constant term first.
    #[getter]
    fn coefficient_lists(&self) -> Vec<Vec<BigInt>> {
        self.inner
            .coefficients
            .iter()
            .map(|c| c.coeffs().to_vec())
            .collect()
    }

    /// `(s^k)_1, ..., (s^k)_d` as strings in `q`.
    #[getter]
    fn initial_values(&self) -> Vec<String> {
        self.inner
            .initial_values
            .iter()
            .map(QPoly::to_string)
            .collect()
    }

    /// Coefficients evaluated at `q`.
    fn evaluate(&self, q: i64) -> Vec<BigInt> {
        self.inner
            .coefficients
            .iter()
            .map(|c| c.eval_i64(q))
            .collect()
    }

    /// Extends `[(s^k)_1, ..., (s^k)_m]` (with `m >= order`) to length `n` at `q`.
    fn extend(&self, q: i64, sums: Vec<BigInt>, n: usize) -> PyResult<Vec<BigInt>> {
        let d = self.inner.order;
        if sums.len() < d {
            return Err(PyValueError::new_err(format!(
                "need at least {d} starting values, got {}",
                sums.len()
            )));
        }
        let c = self.evaluate(q);
        let mut out = sums;
        while out.len() < n {
            let m = out.len();
            let next: BigInt = (1..=d).map(|j| &c[j - 1] * &out[m - j]).sum();
            out.push(next);
        }
        Ok(out)
    }

    fn to_json(&self) -> String {
        hpt_core::cli::recurrence_json(&self.inner, self.reduced).to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Recurrence(k={}, order={}, coefficients=[{}])",
            self.inner.k,
            self.inner.order,
            self.coefficients().join(", ")
        )
    }
}

/// Brute-force verification over a `(k, q)` grid; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (k_min = 2, k_max = 8, q_list = vec![5, 6, 7, 9], cap = 100_000, reduced = false, form = "folded"))]
fn verify(
    py: Python<'_>,
    k_min: u32,
    k_max: u32,
    q_list: Vec<i64>,
    cap: usize,
    reduced: bool,
    form: &str,
) -> PyResult<Py<PyAny>> {
    let config = GridConfig {
        k_min,
        k_max,
        q_list,
        cap,
        variant: variant(reduced, form)?,
    };
    let report = py.detach(|| verify_grid(&config)).map_err(to_py)?;
    to_object(py, &report)
}

/// Recomputed coefficient table for `k = 0..=k_max`, compared with the reference table.
#[pyfunction]
#[pyo3(signature = (k_max = 11))]
fn reproduce_table(py: Python<'_>, k_max: u32) -> PyResult<Py<PyAny>> {
    let report = py.detach(|| reproduce_tables(k_max)).map_err(to_py)?;
    to_object(py, &report)
}

/// Order, degree and fixture checks for each `k` in `k_min..=k_max`.
#[pyfunction]
#[pyo3(signature = (k_min = 2, k_max = 11))]
fn conjecture(py: Python<'_>, k_min: u32, k_max: u32) -> PyResult<Py<PyAny>> {
    let findings = py
        .detach(|| probe_conjecture(k_min, k_max))
        .map_err(to_py)?;
    to_object(py, &findings)
}

#[pymodule]
pub fn hyperpascal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Triangle>()?;
    m.add_class::<Recurrence>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_table, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture, m)?)?;
    Ok(())
}
