//! Python bindings: realize presented groups, build nu(G) and chi(G),
//! inspect the distinguished subgroups, and drive the corpus verification
//! pipeline from Python.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use nuchi_core::constructions::{build_chi, build_nu, realize_group, BuildOptions};
use nuchi_core::corpus::corpus;
use nuchi_core::filter::TagFilter;
use nuchi_core::fingerprint::{Fingerprint, Nilpotency};
use nuchi_core::limits::Limits;
use nuchi_core::pgroup::{is_potent, is_powerful, PGroupView};
use nuchi_core::presentation::{parse_group, GroupInput};
use nuchi_core::subgroup::Subgroup;
use nuchi_core::verify::{run_all, Profile, RunOptions};
use nuchi_core::PermGroup;

fn to_py_err(e: nuchi_core::Error) -> PyErr {
    match e {
        nuchi_core::Error::Parse { .. } => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn fingerprint_dict<'py>(py: Python<'py>, fp: &Fingerprint) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("order", fp.order)?;
    d.set_item("exponent", fp.exponent)?;
    match fp.nilpotency_class {
        Nilpotency::Class(c) => d.set_item("nilpotency_class", c)?,
        Nilpotency::NotNilpotent => d.set_item("nilpotency_class", py.None())?,
    }
    d.set_item("abelian_invariants", fp.abelian_invariants.clone())?;
    Ok(d)
}

/// A finite group realized as its regular permutation representation.
#[pyclass]
struct Group {
    inner: Arc<PermGroup>,
    input: GroupInput,
    limits: Limits,
}

#[pymethods]
impl Group {
    /// Realize a group from presentation text (`gens:` / `rel:` lines).
    #[staticmethod]
    #[pyo3(signature = (text, max_cosets=None))]
    fn from_presentation(text: &str, max_cosets: Option<u64>) -> PyResult<Self> {
        let mut limits = Limits::from_env();
        if let Some(mc) = max_cosets {
            limits.max_cosets = mc;
        }
        let input = parse_group(text).map_err(to_py_err)?;
        let inner = realize_group(&input, &limits).map_err(to_py_err)?;
        Ok(Group { inner, input, limits })
    }

    /// Realize a built-in corpus entry by name.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        let entry = corpus()
            .into_iter()
            .find(|e| e.name == name)
            .ok_or_else(|| PyValueError::new_err(format!("no corpus entry named {name:?}")))?;
        let input = entry.input().map_err(to_py_err)?;
        let limits = Limits::from_env();
        let inner = realize_group(&input, &limits).map_err(to_py_err)?;
        Ok(Group { inner, input, limits })
    }

    #[getter]
    fn name(&self) -> String {
        self.input.presentation.label.clone()
    }

    fn order(&self) -> u64 {
        self.inner.order()
    }

    fn exponent(&self) -> PyResult<u64> {
        let whole = Subgroup::whole_group(self.inner.clone(), &self.limits).map_err(to_py_err)?;
        whole.exponent(&self.limits).map_err(to_py_err)
    }

    fn is_abelian(&self) -> PyResult<bool> {
        let whole = Subgroup::whole_group(self.inner.clone(), &self.limits).map_err(to_py_err)?;
        Ok(whole.is_abelian())
    }

    fn is_powerful(&self, p: u64) -> PyResult<bool> {
        let view = PGroupView::new(self.inner.clone(), p, &self.limits).map_err(to_py_err)?;
        is_powerful(&view, &self.limits).map_err(to_py_err)
    }

    fn is_potent(&self, p: u64) -> PyResult<bool> {
        let view = PGroupView::new(self.inner.clone(), p, &self.limits).map_err(to_py_err)?;
        is_potent(&view, &self.limits).map_err(to_py_err)
    }

    fn fingerprint<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let fp = Fingerprint::of_group(&self.inner, &self.limits).map_err(to_py_err)?;
        fingerprint_dict(py, &fp)
    }

    /// Build nu(G); returns a summary with orders and fingerprints.
    #[pyo3(signature = (generator_triples=false))]
    fn build_nu(&self, generator_triples: bool) -> PyResult<NuSummary> {
        let opts = BuildOptions {
            generator_triples,
            limits: self.limits,
        };
        let nu = build_nu(&self.inner, &self.input.presentation, &opts).map_err(to_py_err)?;
        Ok(NuSummary {
            nu_order: nu.nu.order(),
            tensor_order: nu.tensor.order,
            delta_order: nu.delta.order,
            mu_order: nu.mu.order,
            schur: nu.schur_fingerprint.clone(),
            tensor_fp: Fingerprint::of_subgroup(&nu.tensor, &self.limits).map_err(to_py_err)?,
        })
    }

    /// Build chi(G); returns a summary with the distinguished subgroups.
    fn build_chi(&self) -> PyResult<ChiSummary> {
        let opts = BuildOptions {
            generator_triples: false,
            limits: self.limits,
        };
        let chi = build_chi(&self.inner, &self.input.presentation, &opts).map_err(to_py_err)?;
        Ok(ChiSummary {
            chi_order: chi.chi.order(),
            l_order: chi.l.order,
            d_order: chi.d.order,
            w_order: chi.w.order,
            r_order: chi.r.order,
            t_order: chi.t_order,
            derived_order: chi.chi_derived.order,
            d_fp: Fingerprint::of_subgroup(&chi.d, &self.limits).map_err(to_py_err)?,
            w_fp: Fingerprint::of_subgroup(&chi.w, &self.limits).map_err(to_py_err)?,
            chi_fp: Fingerprint::of_group(&chi.chi, &self.limits).map_err(to_py_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Group(name={:?}, order={})", self.name(), self.order())
    }
}

#[pyclass]
struct NuSummary {
    #[pyo3(get)]
    nu_order: u64,
    #[pyo3(get)]
    tensor_order: u64,
    #[pyo3(get)]
    delta_order: u64,
    #[pyo3(get)]
    mu_order: u64,
    schur: Fingerprint,
    tensor_fp: Fingerprint,
}

#[pymethods]
impl NuSummary {
    fn schur_multiplier<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        fingerprint_dict(py, &self.schur)
    }

    fn tensor_fingerprint<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        fingerprint_dict(py, &self.tensor_fp)
    }

    fn __repr__(&self) -> String {
        format!(
            "NuSummary(nu={}, tensor={}, delta={}, mu={}, schur={})",
            self.nu_order, self.tensor_order, self.delta_order, self.mu_order, self.schur.order
        )
    }
}

#[pyclass]
struct ChiSummary {
    #[pyo3(get)]
    chi_order: u64,
    #[pyo3(get)]
    l_order: u64,
    #[pyo3(get)]
    d_order: u64,
    #[pyo3(get)]
    w_order: u64,
    #[pyo3(get)]
    r_order: u64,
    #[pyo3(get)]
    t_order: u64,
    #[pyo3(get)]
    derived_order: u64,
    d_fp: Fingerprint,
    w_fp: Fingerprint,
    chi_fp: Fingerprint,
}

#[pymethods]
impl ChiSummary {
    fn d_fingerprint<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        fingerprint_dict(py, &self.d_fp)
    }

    fn w_fingerprint<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        fingerprint_dict(py, &self.w_fp)
    }

    fn chi_fingerprint<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        fingerprint_dict(py, &self.chi_fp)
    }

    fn __repr__(&self) -> String {
        format!(
            "ChiSummary(chi={}, L={}, D={}, W={}, R={}, T={})",
            self.chi_order, self.l_order, self.d_order, self.w_order, self.r_order, self.t_order
        )
    }
}

/// Run the corpus verification pipeline; returns the JSON report as text.
#[pyfunction]
#[pyo3(signature = (filter="", profile="quick", seed=1, theorems="A,B,C"))]
fn verify(filter: &str, profile: &str, seed: u64, theorems: &str) -> PyResult<String> {
    let profile = match profile {
        "quick" => Profile::Quick,
        "full" => Profile::Full,
        other => return Err(PyValueError::new_err(format!("unknown profile {other:?}"))),
    };
    let opts = RunOptions {
        theorems: theorems
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().chars().next().unwrap_or(' ').to_ascii_uppercase())
            .collect(),
        filter: TagFilter::parse(filter).map_err(to_py_err)?,
        profile,
        seed,
        limits: Limits::from_env(),
    };
    let report = run_all(&corpus(), &opts);
    Ok(report.to_json())
}

/// Names, orders and tags of the built-in corpus.
#[pyfunction]
fn corpus_entries() -> Vec<(String, u64, Vec<String>)> {
    corpus()
        .into_iter()
        .map(|e| (e.name.clone(), e.expected_order, e.tag_strings()))
        .collect()
}

#[pymodule]
fn nuchi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<NuSummary>()?;
    m.add_class::<ChiSummary>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_entries, m)?)?;
    Ok(())
}
