use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(hyperpascal::hyperpascal)(py);
        let globals = PyDict::new(py);
        globals.set_item("hp", module).unwrap();
        let code = CString::new(code).unwrap();
        py.run(&code, Some(&globals), None)
            .map_err(|e| e.display(py))
            .unwrap();
    });
}

#[test]
fn triangle_from_python() {
    run(r#"
t = hp.Triangle(6)
assert t.q == 6
assert t.row_string(3) == "1B 3A 2B 2B 3A 1B"
assert t.power_sums(2, 5) == [2, 6, 28, 160, 960]
assert t.row_counts(3) == (2, 4, 6)
assert repr(t) == "Triangle(q=6)"
"#);
}

#[test]
fn recurrence_from_python() {
    run(r#"
r = hp.Recurrence(2)
assert r.order == 4
assert r.coefficients == ["q+2", "-q-7", "8", "-2"], r.coefficients
assert r.coefficient_lists[0] == [2, 1]
assert r.evaluate(6) == [8, -13, 8, -2]
assert r.extend(6, [2, 6, 28, 160], 5)[-1] == 960
"#);
}

#[test]
fn errors_map_to_python_exceptions() {
    run(r#"
for bad in (lambda: hp.Triangle(4), lambda: hp.Recurrence(3, reduced=True, form="x"),
            lambda: hp.Triangle(6).row(30, cap=100), lambda: hp.conjecture(1, 3)):
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("no error")
"#);
}

#[test]
fn reports_are_dicts() {
    run(r#"
rep = hp.verify(k_min=0, k_max=2, q_list=[6], cap=5000)
assert rep["all_exact"] is True
assert {c["k"] for c in rep["recurrences"]} == {0, 1, 2}
tab = hp.reproduce_table(5)
assert tab["diff"] == []
assert [row["k"] for row in tab["rows"]] == list(range(6))
"#);
}
