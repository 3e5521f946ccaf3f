//! Python bindings. Scalars cross the boundary as strings such as `"-3/4"`.

use std::collections::HashMap;

use gdu_core::expr::parse;
use gdu_core::gdu::{preset, relation_text, GduAlgebra, GduParams, Preset, WeightScheme, PRESET_NAMES};
use gdu_core::graded::{
    assoc_graded, assoc_monomial, homogenize_algebra, product_series_text, quadratic_check, rees_dims, Growth,
    HomogenizedAlgebra,
};
use gdu_core::solvable::SolvableAlgebra;
use gdu_core::{Error, Scalar};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(gdualg, PreconditionError, PyException, "A hypothesis required by the operation does not hold.");
create_exception!(gdualg, InternalError, PyException, "A certificate that should always hold failed.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Input(_) | Error::Unsupported(_) => PyValueError::new_err(e.to_string()),
        Error::Precondition(_) => PreconditionError::new_err(e.to_string()),
        Error::Internal(_) => InternalError::new_err(e.to_string()),
    }
}

fn scalar(s: &str) -> PyResult<Scalar> {
    s.parse().map_err(py_err)
}

fn scheme_or_default(scheme: Option<&str>, degree_f: usize) -> PyResult<WeightScheme> {
    match scheme {
        Some(s) => WeightScheme::parse(s).map_err(py_err),
        None if degree_f <= 2 => Ok(WeightScheme::AllOnes),
        None => Ok(WeightScheme::DegF),
    }
}

fn growth(g: Growth) -> Option<u32> {
    match g {
        Growth::Polynomial(d) => Some(d),
        Growth::Exponential => None,
    }
}

/// A generalized down-up algebra with a certified Gröbner presentation.
#[pyclass(frozen, module = "gdualg")]
struct Algebra {
    inner: GduAlgebra,
}

impl Algebra {
    fn solvable(&self) -> PyResult<SolvableAlgebra> {
        self.inner.to_solvable().map_err(py_err)
    }

    fn homogenized(&self) -> PyResult<HomogenizedAlgebra> {
        homogenize_algebra(&self.inner).map_err(py_err)
    }
}

#[pymethods]
impl Algebra {
    /// `f` lists coefficients constant term first. `scheme` is "all-ones" or
    /// "deg-f"; by default all-ones when deg f ≤ 2.
    #[new]
    #[pyo3(signature = (lam, omega, gamma, f, scheme=None))]
    fn new(lam: &str, omega: &str, gamma: &str, f: Vec<String>, scheme: Option<&str>) -> PyResult<Algebra> {
        let f = f.iter().map(|c| scalar(c)).collect::<PyResult<Vec<_>>>()?;
        let params = GduParams::new(scalar(lam)?, scalar(omega)?, scalar(gamma)?, f).map_err(py_err)?;
        let scheme = scheme_or_default(scheme, params.degree_f())?;
        Ok(Algebra { inner: GduAlgebra::build(params, scheme).map_err(py_err)? })
    }

    /// Named family, parameters as keyword strings. Missing ones default to
    /// smith f=["0", "1"], woronowicz zeta="2", conformal b="1" with
    /// lambda = omega = gamma = "1", down_up alpha="2", beta="-1", gamma="1".
    #[staticmethod]
    #[pyo3(signature = (name, scheme=None, **params))]
    fn preset(name: &str, scheme: Option<&str>, params: Option<HashMap<String, Bound<'_, PyAny>>>) -> PyResult<Algebra> {
        let params = params.unwrap_or_default();
        let base = Preset::defaults()
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown preset '{name}' (expected one of {})", PRESET_NAMES.join(", "))))?;
        let get = |key: &str, default: &Scalar| -> PyResult<Scalar> {
            match params.get(key) {
                Some(v) => scalar(&v.extract::<String>()?),
                None => Ok(default.clone()),
            }
        };
        let allowed: &[&str] = match base {
            Preset::Sl2 => &[],
            Preset::Smith { .. } => &["f"],
            Preset::Woronowicz { .. } => &["zeta"],
            Preset::Conformal { .. } => &["b", "lambda", "omega", "gamma"],
            Preset::DownUp { .. } => &["alpha", "beta", "gamma"],
        };
        if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(PyValueError::new_err(format!("preset '{name}' does not take '{k}'")));
        }
        let p = match &base {
            Preset::Sl2 => Preset::Sl2,
            Preset::Smith { f } => match params.get("f") {
                Some(v) => Preset::Smith {
                    f: v.extract::<Vec<String>>()?.iter().map(|c| scalar(c)).collect::<PyResult<_>>()?,
                },
                None => Preset::Smith { f: f.clone() },
            },
            Preset::Woronowicz { zeta } => Preset::Woronowicz { zeta: get("zeta", zeta)? },
            Preset::Conformal { b, lambda, omega, gamma } => Preset::Conformal {
                b: get("b", b)?,
                lambda: get("lambda", lambda)?,
                omega: get("omega", omega)?,
                gamma: get("gamma", gamma)?,
            },
            Preset::DownUp { alpha, beta, gamma } => {
                Preset::DownUp { alpha: get("alpha", alpha)?, beta: get("beta", beta)?, gamma: get("gamma", gamma)? }
            }
        };
        let (resolved, _) = p.params().map_err(py_err)?;
        let scheme = scheme_or_default(scheme, resolved.degree_f())?;
        Ok(Algebra { inner: preset(&p, scheme).map_err(py_err)? })
    }

    #[getter]
    fn lam(&self) -> String {
        self.inner.params().lambda.to_string()
    }

    #[getter]
    fn omega(&self) -> String {
        self.inner.params().omega.to_string()
    }

    #[getter]
    fn gamma(&self) -> String {
        self.inner.params().gamma.to_string()
    }

    /// Coefficients of f, constant term first.
    #[getter]
    fn f(&self) -> Vec<String> {
        self.inner.params().f_coeffs().iter().map(Scalar::to_string).collect()
    }

    #[getter]
    fn scheme(&self) -> &'static str {
        self.inner.scheme().name()
    }

    #[getter]
    fn degree_f(&self) -> usize {
        self.inner.degree_f()
    }

    fn relations(&self) -> Vec<(String, String)> {
        self.inner
            .named_relations()
            .iter()
            .map(|(n, p)| (n.to_string(), relation_text(p, self.inner.order())))
            .collect()
    }

    fn is_groebner(&self) -> bool {
        self.inner.certificate().holds
    }

    /// `(holds, pairs checked, compositions checked)`.
    fn certificate(&self) -> (bool, usize, usize) {
        let c = self.inner.certificate();
        (c.holds, c.pairs_checked, c.compositions_checked)
    }

    /// Normal form of an expression such as `"X3*X1 - 2*X2^2"`.
    fn normal_form(&self, expression: &str) -> PyResult<String> {
        let p = parse(expression, self.inner.order()).map_err(py_err)?;
        let nf = self.inner.normal_form(&p).map_err(py_err)?;
        Ok(nf.display(self.inner.order()).to_string())
    }

    /// `(holds, [(q, normal words, PBW monomials), ...])`.
    fn check_pbw(&self, max_degree: u64) -> (bool, Vec<(u64, u64, u64)>) {
        let c = self.inner.check_pbw(max_degree);
        (c.holds, c.per_degree)
    }

    /// The commutation table of the solvable structure, one line per pair.
    fn solvable_table(&self) -> PyResult<Vec<String>> {
        let s = self.solvable()?;
        let mut out = Vec::new();
        for j in 0..s.num_generators() {
            for i in 0..j {
                let prod = s.multiply(&s.generator(j), &s.generator(i));
                out.push(format!("{}·{} = {}", s.names()[j], s.names()[i], s.display(&prod)));
            }
        }
        Ok(out)
    }

    /// Product computed in the PBW basis, written as a sum of monomials
    /// `X2^i·X1^j·X3^l`.
    fn pbw_multiply(&self, a: &str, b: &str) -> PyResult<String> {
        let s = self.solvable()?;
        let order = self.inner.order();
        // Normal words are exactly the ordered PBW monomials.
        let to_pbw = |e: &str| -> PyResult<_> {
            let nf = self.inner.normal_form(&parse(e, order).map_err(py_err)?).map_err(py_err)?;
            self.inner.free_to_pbw(&nf).map_err(py_err)
        };
        Ok(s.display(&s.multiply(&to_pbw(a)?, &to_pbw(b)?)).to_string())
    }

    /// Leading homogeneous parts of the relations, presenting G(A).
    fn assoc_relations(&self) -> PyResult<Vec<(String, String)>> {
        let g = assoc_graded(&self.inner).map_err(py_err)?;
        Ok(g.named().iter().map(|(n, p)| (n.to_string(), relation_text(p, g.relations().order()))).collect())
    }

    /// `[(q, dim G(A)_q, dim F_qA − dim F_(q−1)A), ...]`.
    fn dimension_ladder(&self, max_degree: u64) -> PyResult<Vec<(u64, u64, u64)>> {
        let g = assoc_graded(&self.inner).map_err(py_err)?;
        Ok(g.dimension_ladder(max_degree).into_iter().map(|r| (r.degree, r.graded_dim, r.filtered_diff)).collect())
    }

    /// Relations of the homogenization H(A) with the central generator T.
    fn homogenized_relations(&self) -> PyResult<Vec<(String, String)>> {
        let h = self.homogenized()?;
        Ok(h.named().iter().map(|(n, p)| (n.to_string(), relation_text(p, h.order()))).collect())
    }

    /// Coefficients of the Hilbert series of H(A) up to `max_degree`.
    fn hilbert(&self, max_degree: u64) -> PyResult<Vec<u64>> {
        Ok(self.homogenized()?.monomial().hilbert(max_degree).coefficients)
    }

    /// Closed form of the Hilbert series of H(A).
    fn hilbert_series(&self) -> PyResult<String> {
        self.homogenized()?;
        let w = self.inner.x2_weight() as u32;
        Ok(product_series_text(&[1, 1, w, w]))
    }

    /// `(GK of G(A), GK of H(A))` from the leading-word algebras; `None`
    /// stands for exponential growth.
    fn gk_dimensions(&self) -> PyResult<(Option<u32>, Option<u32>)> {
        let a = assoc_monomial(&self.inner).map_err(py_err)?.growth();
        let h = self.homogenized()?.monomial().growth();
        Ok((growth(a), growth(h)))
    }

    /// `(holds, [(q, dim H(A)_q, dim F_qA), ...])`.
    fn rees(&self, max_degree: u64) -> PyResult<(bool, Vec<(u64, u64, u64)>)> {
        let h = self.homogenized()?;
        let r = rees_dims(&self.inner, &h, max_degree);
        Ok((r.holds, r.per_degree))
    }

    fn is_quadratic(&self) -> PyResult<bool> {
        Ok(quadratic_check(self.homogenized()?.relations()))
    }

    fn __repr__(&self) -> String {
        format!("Algebra({}, scheme={})", self.inner.params(), self.inner.scheme().name())
    }
}

/// Names accepted by `Algebra.preset`.
#[pyfunction]
fn preset_names() -> Vec<&'static str> {
    PRESET_NAMES.to_vec()
}

#[pymodule]
fn gdualg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(preset_names, m)?)?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add("InternalError", m.py().get_type::<InternalError>())?;
    Ok(())
}
