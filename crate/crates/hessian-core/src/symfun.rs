//! Elementary symmetric polynomial algebra on eigenvalue spectra.
//!
//! Everything downstream (pencil coefficients, Newton linearization, cone
//! line search, capacity measures) reduces to values and first derivatives
//! of `S_k` on a spectrum `lambda`, together with membership in the cone
//! `Gamma_m = { lambda : S_1 > 0, ..., S_m > 0 }`.

use crate::{Error, Result};

/// Default relative floor for the certified cone test.
pub const CONE_EPS: f64 = 1e-12;

/// Refusal floor for `S_m` in [`hessian_f`]: below this the linearization
/// blows up and degeneracy is the solver's job (epsilon regularization),
/// not this module's.
pub const F_FLOOR: f64 = 1e-14;

/// A real eigenvalue vector together with the equation order `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    m: usize,
}

impl Spectrum {
    /// Builds a spectrum, checking `1 <= m <= n` and finiteness.
    pub fn new(values: Vec<f64>, m: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("spectrum must have at least one entry".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("non-finite spectrum entry {bad}")));
        }
        if m < 1 || m > values.len() {
            return Err(Error::Domain(format!(
                "equation order m = {m} out of range 1..={}",
                values.len()
            )));
        }
        Ok(Self { values, m })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }
}

/// Values and first derivatives of the symmetric functions at one spectrum.
#[derive(Debug, Clone)]
pub struct SymmetricValues {
    /// `S_0 = 1, S_1, ..., S_n`.
    pub s: Vec<f64>,
    /// `S_{m-1;i}(lambda)`: `S_{m-1}` of `lambda` with the i-th entry removed.
    pub s_minor: Vec<f64>,
    /// `F = S_m^{1/m}`.
    pub f_value: f64,
    /// `f_i = dF/d lambda_i = S_m^{(1-m)/m} S_{m-1;i} / m`, all positive on the cone.
    pub f_partials: Vec<f64>,
    /// Trace of the linearized operator, `sum_i f_i`.
    pub f_trace: f64,
}

/// All elementary symmetric values `S_0..S_n` by the coefficient recurrence
/// for `prod_i (1 + lambda_i t)`, scanning entries left to right in input
/// order so results are bitwise deterministic.
pub fn elementary_symmetric_all(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for (i, &lam) in values.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            e[k] += lam * e[k - 1];
        }
    }
    e
}

/// `S_k(lambda)` for a single `k`.
pub fn elementary_symmetric(lambda: &Spectrum, k: usize) -> Result<f64> {
    if k > lambda.n() {
        return Err(Error::Domain(format!(
            "symmetric function order k = {k} exceeds n = {}",
            lambda.n()
        )));
    }
    Ok(elementary_symmetric_all(lambda.values())[k])
}

/// `S_{m-1}` of the spectrum with entry `skip` removed, same recurrence.
fn elementary_symmetric_skip(values: &[f64], order: usize, skip: usize) -> f64 {
    let mut e = vec![0.0; order + 1];
    e[0] = 1.0;
    let mut seen = 0usize;
    for (i, &lam) in values.iter().enumerate() {
        if i == skip {
            continue;
        }
        seen += 1;
        let top = order.min(seen);
        for k in (1..=top).rev() {
            e[k] += lam * e[k - 1];
        }
    }
    e[order]
}

/// Strict cone membership: `S_k(lambda) > 0` for `k = 1..m`.
pub fn in_cone(lambda: &Spectrum) -> bool {
    let e = elementary_symmetric_all(lambda.values());
    e[1..=lambda.m()].iter().all(|&v| v > 0.0)
}

/// Certified cone membership: `S_k >= eps (1 + |lambda|_inf)^k`, which keeps
/// boundary cases stable under floating point.
pub fn in_cone_certified(lambda: &Spectrum, cone_eps: f64) -> bool {
    let e = elementary_symmetric_all(lambda.values());
    let scale = 1.0 + lambda.sup_norm();
    let mut floor = 1.0;
    for k in 1..=lambda.m() {
        floor *= scale;
        if e[k] < cone_eps * floor {
            return false;
        }
    }
    true
}

/// First failing cone index, if any: smallest `k <= m` with `S_k <= 0`.
pub fn cone_violation(lambda: &Spectrum) -> Option<(usize, f64)> {
    let e = elementary_symmetric_all(lambda.values());
    (1..=lambda.m()).find(|&k| e[k] <= 0.0).map(|k| (k, e[k]))
}

/// Worst cone margin `min_{k<=m} S_k`; positive iff strictly inside the cone.
pub fn cone_margin(lambda: &Spectrum) -> f64 {
    let e = elementary_symmetric_all(lambda.values());
    e[1..=lambda.m()].iter().fold(f64::INFINITY, |a, &v| a.min(v))
}

/// `F`, its partials and trace at a spectrum inside `Gamma_m`.
pub fn hessian_f(lambda: &Spectrum) -> Result<SymmetricValues> {
    let n = lambda.n();
    let m = lambda.m();
    if let Some((k, value)) = cone_violation(lambda) {
        return Err(Error::ConeViolation { m, k, value });
    }
    let s = elementary_symmetric_all(lambda.values());
    let sm = s[m];
    if sm < F_FLOOR {
        return Err(Error::Domain(format!(
            "S_m = {sm:.3e} below floor {F_FLOOR:.1e}; use the solver's regularized path"
        )));
    }
    let f_value = sm.powf(1.0 / m as f64);
    let s_minor: Vec<f64> = (0..n)
        .map(|i| elementary_symmetric_skip(lambda.values(), m - 1, i))
        .collect();
    // f_i = S_m^{(1-m)/m} S_{m-1;i} / m
    let pref = sm.powf((1.0 - m as f64) / m as f64) / m as f64;
    let f_partials: Vec<f64> = s_minor.iter().map(|&si| pref * si).collect();
    let mut f_trace = 0.0;
    for &fi in &f_partials {
        f_trace += fi;
    }
    Ok(SymmetricValues {
        s,
        s_minor,
        f_value,
        f_partials,
        f_trace,
    })
}

/// Both sides of the Garding pairing: `lhs = sum_i lambda'_i S_{m-1;i}(lambda)`
/// and `rhs = m S_m(lambda')^{1/m} S_m(lambda)^{(m-1)/m}`; `lhs >= rhs` on the cone.
pub fn garding_pairing(lambda: &Spectrum, other: &Spectrum) -> Result<(f64, f64)> {
    if lambda.n() != other.n() || lambda.m() != other.m() {
        return Err(Error::Domain("spectra must share n and m".into()));
    }
    for (name, spec) in [("first", lambda), ("second", other)] {
        if let Some((k, value)) = cone_violation(spec) {
            let _ = name;
            return Err(Error::ConeViolation { m: spec.m(), k, value });
        }
    }
    let m = lambda.m();
    let mut lhs = 0.0;
    for (i, &lp) in other.values().iter().enumerate() {
        lhs += lp * elementary_symmetric_skip(lambda.values(), m - 1, i);
    }
    let sm = elementary_symmetric_all(lambda.values())[m];
    let sm_other = elementary_symmetric_all(other.values())[m];
    let rhs = m as f64 * sm_other.powf(1.0 / m as f64) * sm.powf((m as f64 - 1.0) / m as f64);
    Ok((lhs, rhs))
}

/// The product bound pair: `prod_i S_{m-1;i}(lambda)` and
/// `S_m(lambda)^{n(m-1)/m}`. The verification suite compares their ratio
/// against an empirically fitted constant; no named constant is asserted here.
pub fn wang_product_bound(lambda: &Spectrum) -> Result<(f64, f64)> {
    if let Some((k, value)) = cone_violation(lambda) {
        return Err(Error::ConeViolation { m: lambda.m(), k, value });
    }
    let m = lambda.m();
    let n = lambda.n();
    let mut lhs = 1.0;
    for i in 0..n {
        lhs *= elementary_symmetric_skip(lambda.values(), m - 1, i);
    }
    let sm = elementary_symmetric_all(lambda.values())[m];
    let rhs_factor = sm.powf(n as f64 * (m as f64 - 1.0) / m as f64);
    Ok((lhs, rhs_factor))
}

/// Power sums `p_1..p_n`, used by the Newton-identity consistency check.
pub fn power_sums(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut p = vec![0.0; n + 1];
    for k in 1..=n {
        p[k] = values.iter().map(|v| v.powi(k as i32)).sum();
    }
    p
}
