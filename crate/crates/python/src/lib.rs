//! Python bindings: root systems, orbit dimensions, sweeps and tables.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use orbitkit::enumerate::{verify_sweep, NonAdmissibleHit, SweepOptions};
use orbitkit::tables::{evaluate_table, TableRow, F4_TABLE, G2_TABLE};
use orbitkit::{
    display_root, enumerate_orthogonal_subsets, parse_root, parse_roots, scan_non_admissible,
    verify_main_theorem, weyl, ChevalleyTable, OrthoSubset, PrimeField, Root, VerifyReport,
};

create_exception!(orbitkit, OrbitError, PyValueError);

fn err(e: orbitkit::Error) -> PyErr {
    OrbitError::new_err(e.to_string())
}

/// Like `err`, but names roots by expression rather than index.
fn err_in(rs: &orbitkit::RootSystem, e: orbitkit::Error) -> PyErr {
    let name = |i: usize| display_root(rs, rs.positive(i));
    match e {
        orbitkit::Error::NotOrthogonal(a, b) => OrbitError::new_err(format!(
            "roots {} and {} are not orthogonal",
            name(a),
            name(b)
        )),
        orbitkit::Error::DuplicateRoot(a) => {
            OrbitError::new_err(format!("root {} appears twice", name(a)))
        }
        e => err(e),
    }
}

/// A root system with its Chevalley structure constants.
#[pyclass(name = "RootSystem", frozen)]
struct PyRootSystem {
    tbl: ChevalleyTable,
}

impl PyRootSystem {
    fn rs(&self) -> &orbitkit::RootSystem {
        self.tbl.root_system()
    }

    fn roots(&self, roots: Vec<String>) -> PyResult<Vec<Root>> {
        roots
            .iter()
            .map(|r| parse_root(self.rs(), r))
            .collect::<orbitkit::Result<_>>()
            .map_err(err)
    }

    fn names(&self, roots: &[Root]) -> Vec<String> {
        roots.iter().map(|&r| display_root(self.rs(), r)).collect()
    }

    fn field(&self, prime: Option<u32>) -> PyResult<PrimeField> {
        let field = match prime {
            Some(p) => PrimeField::new(p).map_err(err)?,
            None => PrimeField::default_for(self.rs()),
        };
        field.check_coxeter(self.rs()).map_err(err)?;
        Ok(field)
    }

    fn report<'py>(&self, py: Python<'py>, r: &VerifyReport) -> PyResult<Bound<'py, PyDict>> {
        let rs = self.rs();
        let name = |idx: &[usize]| {
            idx.iter()
                .map(|&i| display_root(rs, rs.positive(i)))
                .collect::<Vec<_>>()
        };
        let d = PyDict::new(py);
        d.set_item("system", r.system.to_string())?;
        d.set_item("D", name(&r.d))?;
        d.set_item("reduced_D", name(&r.reduced_d))?;
        d.set_item("primes", r.primes.clone())?;
        d.set_item("dims", r.dims.clone())?;
        d.set_item("dim", r.dim)?;
        d.set_item("bound", r.bound)?;
        d.set_item("l", r.l)?;
        d.set_item("s", r.s)?;
        d.set_item("xi_independent", r.xi_independent)?;
        d.set_item("prime_independent", r.prime_independent)?;
        d.set_item("bound_ok", r.bound_ok)?;
        d.set_item("even_ok", r.even_ok)?;
        d.set_item("reduced_applied", r.reduced_applied)?;
        d.set_item("passed", r.passed())?;
        d.set_item("seed", r.seed)?;
        Ok(d)
    }
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(id: &str) -> PyResult<Self> {
        let id = id.parse().map_err(err)?;
        Ok(PyRootSystem {
            tbl: ChevalleyTable::new(Arc::new(orbitkit::RootSystem::new(id))),
        })
    }

    #[getter]
    fn id(&self) -> String {
        self.rs().id().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.rs().rank()
    }

    #[getter]
    fn coxeter_number(&self) -> usize {
        self.rs().coxeter_number()
    }

    fn __len__(&self) -> usize {
        self.rs().num_positive()
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.id())
    }

    fn positive_roots(&self) -> Vec<String> {
        self.names(&self.rs().positives().collect::<Vec<_>>())
    }

    fn fundamental_roots(&self) -> Vec<String> {
        self.names(&self.rs().fundamentals())
    }

    /// Index of a positive root in the (height, lex) order.
    fn index(&self, root: &str) -> PyResult<usize> {
        Ok(parse_root(self.rs(), root).map_err(err)?.index())
    }

    /// Four times the inner product (G2 uses |a1|^2 = 1).
    fn inner4(&self, a: &str, b: &str) -> PyResult<i64> {
        let r = self.roots(vec![a.into(), b.into()])?;
        self.rs().inner4(r[0], r[1]).map_err(err)
    }

    fn singular_roots(&self, beta: &str) -> PyResult<Vec<String>> {
        let b = parse_root(self.rs(), beta).map_err(err)?;
        Ok(self.names(&self.rs().singular_roots(b).map_err(err)?))
    }

    /// Structure constant `N_{a,b}` (0 when `a + b` is not a root).
    fn structure_constant(&self, a: &str, b: &str) -> PyResult<i32> {
        let r = self.roots(vec![a.into(), b.into()])?;
        self.tbl.n_const(r[0], r[1]).map_err(err)
    }

    #[pyo3(signature = (roots, xi=None, prime=None))]
    fn orbit_dimension(
        &self,
        roots: Vec<String>,
        xi: Option<Vec<u32>>,
        prime: Option<u32>,
    ) -> PyResult<usize> {
        let d = self.roots(roots)?;
        let xi = xi.unwrap_or_else(|| vec![1; d.len()]);
        let sub = OrthoSubset::new(self.rs(), d, xi, self.field(prime)?)
            .map_err(|e| err_in(self.rs(), e))?;
        Ok(self.tbl.orbit_dimension(&sub).map_err(err)?.dim)
    }

    /// `(l, s, l - s)` for the involution of `roots`.
    fn involution_stats(&self, roots: Vec<String>) -> PyResult<(usize, usize, usize)> {
        let st = weyl::involution_stats(self.rs(), &self.roots(roots)?)
            .map_err(|e| err_in(self.rs(), e))?;
        Ok((st.l, st.s, st.bound))
    }

    #[pyo3(signature = (roots, primes=Vec::new(), xi_samples=5, seed=0))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        roots: Vec<String>,
        primes: Vec<u32>,
        xi_samples: usize,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let d = self.roots(roots)?;
        let r = verify_main_theorem(&self.tbl, &d, &primes, xi_samples, seed)
            .map_err(|e| err_in(self.rs(), e))?;
        self.report(py, &r)
    }

    #[pyo3(signature = (max_size=8, primes=Vec::new(), xi_samples=5, seed=0, sample_budget=None))]
    fn sweep<'py>(
        &self,
        py: Python<'py>,
        max_size: usize,
        primes: Vec<u32>,
        xi_samples: usize,
        seed: u64,
        sample_budget: Option<usize>,
    ) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let opts = SweepOptions {
            max_size,
            primes,
            xi_samples,
            seed,
            sample_budget,
        };
        let reports = py.detach(|| verify_sweep(&self.tbl, &opts)).map_err(err)?;
        reports.iter().map(|r| self.report(py, r)).collect()
    }

    #[pyo3(signature = (max_size=8, reduced_only=false))]
    fn orthogonal_subsets(&self, max_size: usize, reduced_only: bool) -> Vec<Vec<String>> {
        enumerate_orthogonal_subsets(self.rs(), max_size, reduced_only)
            .map(|d| self.names(&d))
            .collect()
    }

    /// Each hit as a dict with `type` and the named roots of its pattern.
    fn scan_non_admissible<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let hits: Vec<NonAdmissibleHit> = scan_non_admissible(self.rs()).map_err(err)?;
        hits.iter()
            .map(|h| {
                let d = PyDict::new(py);
                d.set_item("type", h.pattern_type)?;
                for (name, r) in &h.roots {
                    d.set_item(*name, display_root(self.rs(), *r))?;
                }
                Ok(d)
            })
            .collect()
    }

    /// Parses a comma-separated list and returns the positive-root indices.
    fn parse(&self, text: &str) -> PyResult<Vec<usize>> {
        Ok(parse_roots(self.rs(), text)
            .map_err(err)?
            .iter()
            .map(|r| r.index())
            .collect())
    }
}

fn table_rows<'py>(py: Python<'py>, rows: Vec<TableRow>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    rows.into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("row", r.row)?;
            d.set_item("D", &r.d)?;
            d.set_item("M", &r.m)?;
            d.set_item("m_size", r.m_size)?;
            d.set_item("F", r.f)?;
            d.set_item("dim", r.dim_computed)?;
            d.set_item("bound", r.bound_computed)?;
            d.set_item("m_conditions", r.m_conditions)?;
            d.set_item("p_maximal_isotropic", r.p_maximal_isotropic)?;
            d.set_item("consistent", r.consistent())?;
            Ok(d)
        })
        .collect()
}

/// The F4 table re-evaluated over `GF(prime)`.
#[pyfunction]
#[pyo3(signature = (prime=13))]
fn f4_table(py: Python<'_>, prime: u32) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let sys = PyRootSystem::new("F4")?;
    let rows = evaluate_table(F4_TABLE, &sys.tbl, sys.field(Some(prime))?).map_err(err)?;
    table_rows(py, rows)
}

#[pyfunction]
#[pyo3(signature = (prime=7))]
fn g2_table(py: Python<'_>, prime: u32) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let sys = PyRootSystem::new("G2")?;
    let rows = evaluate_table(G2_TABLE, &sys.tbl, sys.field(Some(prime))?).map_err(err)?;
    table_rows(py, rows)
}

/// `(n-2) + (n-4) + ...`
#[pyfunction]
fn mu(n: u64) -> PyResult<u64> {
    weyl::mu(n).map_err(err)
}

#[pymodule]
#[pyo3(name = "orbitkit")]
pub fn orbitkit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_function(wrap_pyfunction!(f4_table, m)?)?;
    m.add_function(wrap_pyfunction!(g2_table, m)?)?;
    m.add_function(wrap_pyfunction!(mu, m)?)?;
    m.add("OrbitError", m.py().get_type::<OrbitError>())?;
    Ok(())
}
