//! Python bindings for the convex-set calculus: polytopes, formal set
//! differences with minimal-element extraction, max-affine functions with
//! epsilon-subdifferentials, and the bundled demo scenarios.
//!
//! Scalars arriving from Python become exact rationals: ints directly,
//! strings as "p/q", floats through their exact binary expansion.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use convexdiff_core as core;
use core::sampling::rng_from_seed;
use core::scalar::Scalar;
use core::scenario;
use core::vector::Vector;

fn to_py(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

struct Num(Scalar);

impl<'a, 'py> FromPyObject<'a, 'py> for Num {
    type Error = PyErr;

    fn extract(ob: Borrowed<'a, 'py, PyAny>) -> PyResult<Self> {
        if let Ok(s) = ob.extract::<String>() {
            return Scalar::parse_rational(&s)
                .map(Num)
                .ok_or_else(|| PyValueError::new_err(format!("not a rational: {s:?}")));
        }
        if let Ok(i) = ob.extract::<i64>() {
            return Ok(Num(Scalar::from_int(i)));
        }
        if let Ok(f) = ob.extract::<f64>() {
            if !f.is_finite() {
                return Err(PyValueError::new_err("non-finite scalar"));
            }
            return Ok(Num(Scalar::rat_from_f64(f)));
        }
        Err(PyValueError::new_err("expected int, float, or \"p/q\" string"))
    }
}

fn vector(coords: Vec<Num>) -> PyResult<Vector> {
    Vector::new(coords.into_iter().map(|n| n.0).collect()).map_err(to_py)
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Polytope {
    inner: core::Polytope,
}

#[pymethods]
impl Polytope {
    #[new]
    fn new(vertices: Vec<Vec<Num>>) -> PyResult<Self> {
        let pts = vertices
            .into_iter()
            .map(vector)
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Polytope {
            inner: core::Polytope::hull(pts).map_err(to_py)?,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Canonical vertices as exact rational strings.
    #[getter]
    fn vertices(&self) -> Vec<Vec<String>> {
        self.inner
            .vertices()
            .iter()
            .map(|v| v.0.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    /// Canonical vertices as floats.
    #[getter]
    fn vertices_f64(&self) -> Vec<Vec<f64>> {
        self.inner
            .vertices()
            .iter()
            .map(|v| v.0.iter().map(|s| s.to_f64()).collect())
            .collect()
    }

    fn minkowski_sum(&self, other: &Polytope) -> PyResult<Polytope> {
        Ok(Polytope {
            inner: self.inner.minkowski_sum(&other.inner).map_err(to_py)?,
        })
    }

    fn scale(&self, alpha: Num) -> Polytope {
        Polytope {
            inner: self.inner.scale(&alpha.0),
        }
    }

    fn neg(&self) -> Polytope {
        Polytope {
            inner: self.inner.neg(),
        }
    }

    fn translate(&self, v: Vec<Num>) -> PyResult<Polytope> {
        Ok(Polytope {
            inner: self.inner.translate(&vector(v)?).map_err(to_py)?,
        })
    }

    /// Support value and supporting face in direction `p`.
    fn support(&self, p: Vec<Num>) -> PyResult<(f64, Polytope)> {
        let (value, face) = self.inner.support(&vector(p)?).map_err(to_py)?;
        Ok((value.to_f64(), Polytope { inner: face }))
    }

    fn contains_point(&self, v: Vec<Num>) -> PyResult<bool> {
        self.inner.contains_point(&vector(v)?).map_err(to_py)
    }

    fn contains_set(&self, other: &Polytope) -> PyResult<bool> {
        self.inner.contains_set(&other.inner).map_err(to_py)
    }

    fn intersect(&self, other: &Polytope) -> PyResult<Option<Polytope>> {
        Ok(self
            .inner
            .intersect(&other.inner)
            .map_err(to_py)?
            .map(|inner| Polytope { inner }))
    }

    fn hausdorff(&self, other: &Polytope) -> PyResult<f64> {
        self.inner.hausdorff(&other.inner).map_err(to_py)
    }

    fn norm(&self) -> f64 {
        self.inner.norm()
    }

    fn __eq__(&self, other: &Polytope) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Polytope({:?})", self.vertices())
    }
}

/// Formal set difference X ÷ Y with linear operations and extraction.
#[pyclass(frozen)]
struct Collection {
    inner: core::Collection,
}

#[pymethods]
impl Collection {
    #[new]
    fn new(x: &Polytope, y: &Polytope) -> PyResult<Self> {
        Ok(Collection {
            inner: core::Collection::make(x.inner.clone(), y.inner.clone()).map_err(to_py)?,
        })
    }

    #[getter]
    fn minuend(&self) -> Polytope {
        Polytope {
            inner: self.inner.minuend().clone(),
        }
    }

    #[getter]
    fn subtrahend(&self) -> Polytope {
        Polytope {
            inner: self.inner.subtrahend().clone(),
        }
    }

    fn support(&self, p: Vec<Num>) -> PyResult<f64> {
        Ok(self.inner.support(&vector(p)?).map_err(to_py)?.to_f64())
    }

    fn add(&self, other: &Collection) -> PyResult<Collection> {
        Ok(Collection {
            inner: self.inner.add(&other.inner).map_err(to_py)?,
        })
    }

    fn scale(&self, alpha: Num) -> Collection {
        Collection {
            inner: self.inner.scale(&alpha.0),
        }
    }

    fn is_equivalent(&self, other: &Collection) -> PyResult<bool> {
        self.inner.is_equivalent(&other.inner).map_err(to_py)
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn feasible(&self, z: &Polytope) -> PyResult<bool> {
        self.inner.feasible(&z.inner).map_err(to_py)
    }

    /// Extract one minimal element along `selector`; returns
    /// (element, certified_feasible, sweeps).
    #[pyo3(signature = (selector, m = 32))]
    fn minimal_element(&self, selector: Vec<Num>, m: usize) -> PyResult<(Polytope, bool, usize)> {
        let rep = self
            .inner
            .minimal_element(&vector(selector)?, m, &Scalar::zero())
            .map_err(to_py)?;
        Ok((
            Polytope { inner: rep.element },
            rep.certified_feasible,
            rep.sweeps,
        ))
    }

    /// Norm bracket (lower, upper) over extracted elements.
    #[pyo3(signature = (selectors = 8, m = 32))]
    fn norm_bracket(&self, selectors: usize, m: usize) -> PyResult<(f64, f64)> {
        let nb = self
            .inner
            .collection_norm(selectors, m, &Scalar::zero())
            .map_err(to_py)?;
        Ok((nb.lower, nb.upper))
    }
}

/// Max-affine convex function f(x) = max_i (a_i . x + b_i).
#[pyclass(frozen)]
struct PwlConvexFunction {
    inner: core::PwlConvexFunction,
}

#[pymethods]
impl PwlConvexFunction {
    #[new]
    fn new(pieces: Vec<(Vec<Num>, Num)>) -> PyResult<Self> {
        let pieces = pieces
            .into_iter()
            .map(|(a, b)| Ok((vector(a)?, b.0)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PwlConvexFunction {
            inner: core::PwlConvexFunction::new(pieces).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn abs_1d() -> PwlConvexFunction {
        PwlConvexFunction {
            inner: core::PwlConvexFunction::abs_1d(),
        }
    }

    fn eval(&self, x: Vec<Num>) -> PyResult<f64> {
        Ok(self.inner.eval(&vector(x)?).map_err(to_py)?.0.to_f64())
    }

    fn eps_subdiff(&self, x: Vec<Num>, eps: Num) -> PyResult<Polytope> {
        Ok(Polytope {
            inner: self.inner.eps_subdiff(&vector(x)?, &eps.0).map_err(to_py)?,
        })
    }

    /// Returns (l_emp, l_bound, violations, pairs).
    #[pyo3(signature = (x, eps, upsilon, pairs = 200, seed = 7))]
    fn lipschitz_probe(
        &self,
        x: Vec<Num>,
        eps: Num,
        upsilon: Num,
        pairs: usize,
        seed: u64,
    ) -> PyResult<(f64, f64, usize, usize)> {
        let mut rng = rng_from_seed(seed);
        let rep = self
            .inner
            .lipschitz_probe(&vector(x)?, &eps.0, &upsilon.0, pairs, &mut rng)
            .map_err(to_py)?;
        Ok((rep.l_emp, rep.l_bound, rep.violations, rep.pairs))
    }
}

#[pyfunction]
fn cover_diff(x: &Polytope, y: &Polytope) -> PyResult<Option<Polytope>> {
    Ok(core::set_difference::cover_diff(&x.inner, &y.inner)
        .map_err(to_py)?
        .map(|inner| Polytope { inner }))
}

#[pyfunction]
fn erode_diff(x: &Polytope, y: &Polytope) -> PyResult<Option<Polytope>> {
    Ok(core::set_difference::erode_diff(&x.inner, &y.inner)
        .map_err(to_py)?
        .map(|inner| Polytope { inner }))
}

/// Run a scenario given as a JSON string; returns (report_json, svg_or_none).
#[pyfunction]
#[pyo3(signature = (text, jobs = 1))]
fn run_scenario_json(text: &str, jobs: usize) -> PyResult<(String, Option<String>)> {
    let sc = scenario::Scenario::from_json(text).map_err(to_py)?;
    let out = scenario::run_scenario(&sc, jobs).map_err(to_py)?;
    Ok((out.report.to_json(), out.svg))
}

/// JSON text of a bundled demo scenario: "fig1", "lemmas", or "lipschitz".
#[pyfunction]
fn demo_scenario(name: &str) -> PyResult<String> {
    match name {
        "fig1" => Ok(scenario::builtin::fig1().to_json()),
        "lemmas" => Ok(scenario::builtin::lemmas().to_json()),
        "lipschitz" => Ok(scenario::builtin::lipschitz().to_json()),
        _ => Err(PyValueError::new_err(format!("unknown demo: {name:?}"))),
    }
}

#[pymodule]
fn convexdiff_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polytope>()?;
    m.add_class::<Collection>()?;
    m.add_class::<PwlConvexFunction>()?;
    m.add_function(wrap_pyfunction!(cover_diff, m)?)?;
    m.add_function(wrap_pyfunction!(erode_diff, m)?)?;
    m.add_function(wrap_pyfunction!(run_scenario_json, m)?)?;
    m.add_function(wrap_pyfunction!(demo_scenario, m)?)?;
    Ok(())
}
