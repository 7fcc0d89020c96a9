//! Python bindings: spaces and ad-frames as classes, constructions and
//! registry checks as functions. Values cross the boundary as JSON text.

use adframe_core::adframe::{build_ado, validate_adframe, AdFrame as CoreFrame, Variant};
use adframe_core::duality::{adpt_space, is_ad_sober as core_is_ad_sober};
use adframe_core::finord::{FinPreTopSpace, Preorder};
use adframe_core::json::{adframe_value, parse_adframe, parse_space, space_value};
use adframe_core::sobrify::{ads_space, standard_sobrification};
use adframe_core::theorems::{enumerate_spaces, run_check, SpaceMode, TheoremId};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: adframe_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn variant(name: &str) -> PyResult<Variant> {
    name.parse().map_err(err)
}

/// A finite topological space with a preorder.
#[pyclass(frozen, module = "adframe")]
pub struct Space {
    inner: FinPreTopSpace,
}

#[pymethods]
impl Space {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Space> {
        Ok(Space { inner: parse_space(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        space_value(&self.inner).to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Opens as sorted lists of points.
    #[getter]
    fn opens(&self) -> Vec<Vec<usize>> {
        self.inner.opens().iter().map(|u| u.iter().collect()).collect()
    }

    fn leq(&self, a: usize, b: usize) -> PyResult<bool> {
        let n = self.inner.n();
        if a >= n || b >= n {
            return Err(PyValueError::new_err(format!("point out of range for {n} points")));
        }
        Ok(self.inner.preorder().leq(a, b))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &Space) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Space({})", self.to_json())
    }
}

/// An ad-frame: a frame and a distributive lattice with four relations.
#[pyclass(frozen, module = "adframe")]
pub struct AdFrame {
    inner: CoreFrame,
}

#[pymethods]
impl AdFrame {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<AdFrame> {
        Ok(AdFrame { inner: parse_adframe(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        adframe_value(&self.inner).to_string()
    }

    #[getter]
    fn variant(&self) -> &'static str {
        self.inner.variant().name()
    }

    /// `(omega, ell)` sizes.
    #[getter]
    fn sizes(&self) -> (usize, usize) {
        (self.inner.omega().len(), self.inner.ell().len())
    }

    /// `(passed, failures)` where each failure is `(axiom, witness)`.
    fn validate(&self) -> PyResult<(bool, Vec<(String, String)>)> {
        let r = validate_adframe(&self.inner).map_err(err)?;
        let failures = r.failures().map(|c| (c.name.clone(), c.witness.clone().unwrap_or_default())).collect();
        Ok((r.passed(), failures))
    }

    fn __repr__(&self) -> String {
        let (o, l) = self.sizes();
        format!("AdFrame(omega={o}, ell={l}, variant={})", self.variant())
    }
}

#[pyfunction]
#[pyo3(signature = (space, variant = "both"))]
fn ado(space: &Space, variant: &str) -> PyResult<AdFrame> {
    Ok(AdFrame { inner: build_ado(&space.inner, self::variant(variant)?).map_err(err)? })
}

#[pyfunction]
fn adpt(frame: &AdFrame) -> PyResult<Space> {
    Ok(Space { inner: adpt_space(&frame.inner).map_err(err)?.space })
}

#[pyfunction]
#[pyo3(signature = (space, variant = "both"))]
fn ads(space: &Space, variant: &str) -> PyResult<Space> {
    Ok(Space { inner: ads_space(&space.inner, self::variant(variant)?).map_err(err)?.space })
}

/// Standard sobrification, carrying the equality preorder.
#[pyfunction]
fn sobrify(space: &Space) -> PyResult<Space> {
    let s = standard_sobrification(&space.inner).map_err(err)?;
    let n = s.space.n();
    Ok(Space { inner: FinPreTopSpace::new(s.space, Preorder::discrete(n)).map_err(err)? })
}

#[pyfunction]
#[pyo3(signature = (space, variant = "both"))]
fn is_ad_sober(space: &Space, variant: &str) -> PyResult<bool> {
    Ok(core_is_ad_sober(&space.inner, self::variant(variant)?).map_err(err)?.sober)
}

/// Every space on `n` points, in canonical order.
#[pyfunction]
fn spaces(n: usize) -> PyResult<Vec<Space>> {
    Ok(enumerate_spaces(n, &SpaceMode::All).map_err(err)?.into_iter().map(|inner| Space { inner }).collect())
}

/// Runs a registry check; returns `(verdict, witness_message)`.
#[pyfunction]
#[pyo3(signature = (id, space, variant = "both"))]
fn check(id: &str, space: &Space, variant: &str) -> PyResult<(String, Option<String>)> {
    let id: TheoremId = id.parse().map_err(err)?;
    let r = run_check(id, &space.inner, self::variant(variant)?);
    let verdict = serde_json::to_value(r.verdict).expect("plain data");
    let message = r.witness.and_then(|w| w["message"].as_str().map(str::to_owned));
    Ok((verdict.as_str().unwrap_or_default().to_owned(), message))
}

/// Codes of every registry check.
#[pyfunction]
fn theorem_ids() -> Vec<&'static str> {
    TheoremId::ALL.iter().map(|t| t.code()).collect()
}

#[pymodule]
fn adframe(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Space>()?;
    m.add_class::<AdFrame>()?;
    m.add_function(wrap_pyfunction!(ado, m)?)?;
    m.add_function(wrap_pyfunction!(adpt, m)?)?;
    m.add_function(wrap_pyfunction!(ads, m)?)?;
    m.add_function(wrap_pyfunction!(sobrify, m)?)?;
    m.add_function(wrap_pyfunction!(is_ad_sober, m)?)?;
    m.add_function(wrap_pyfunction!(spaces, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_ids, m)?)?;
    Ok(())
}
