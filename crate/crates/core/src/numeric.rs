//! Binary64 evaluation of `P_n^(α,β)(x)` and `Δ_n(x)` for large degrees.
//!
//! Terms of the binomial sum are plain products while they fit in binary64;
//! once a binomial overflows (already near n = 30 with slopes >= 1 for the
//! coefficients themselves, much later for whole terms) the sum switches to
//! log-gamma binomials with a common scale. For `x >= 1` every term is
//! nonnegative and the sum has no cancellation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::jacobi::{jacobi_with_params, FamilyParams};
use crate::poly::Poly;
use crate::rational::to_f64;

/// `|Δ| <= ZERO_THRESHOLD * (1 + M)` classifies as sign 0, where `M` is the
/// magnitude of the two products in `Δ`.
pub const ZERO_THRESHOLD: f64 = 1e-9;

/// Rows whose estimated relative error exceeds this are unreliable.
pub const FLAG_REL_ERR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalMode {
    DirectSum,
    HornerOnExact,
}

/// A value with an estimate of its absolute rounding error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub abs_err: f64,
}

fn ln_binomial(z: f64, k: u32) -> f64 {
    let k = k as f64;
    ln_gamma(z + 1.0) - ln_gamma(k + 1.0) - ln_gamma(z - k + 1.0)
}

fn check_params(alpha: f64, beta: f64, x: f64) -> Result<()> {
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(Error::ParameterOutOfRange {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
        });
    }
    if !x.is_finite() {
        return Err(Error::NonFinite(x.to_string()));
    }
    Ok(())
}

/// `P_n^(α,β)(x)` by the direct binomial sum.
pub fn eval_jacobi_float(n: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    eval_jacobi_estimate(n, alpha, beta, x).map(|e| e.value)
}

pub fn eval_jacobi_estimate(n: u32, alpha: f64, beta: f64, x: f64) -> Result<Estimate> {
    check_params(alpha, beta, x)?;
    Ok(direct_sum(n, alpha, beta, x).unwrap_or_else(|| log_space_sum(n, alpha, beta, x)))
}

/// `C(z, k)` as a running product; `None` once it leaves the finite range.
fn binomial_product(z: f64, k: u32) -> Option<f64> {
    let kf = k as f64;
    let mut acc = 1.0f64;
    for i in 1..=k {
        acc *= (z - kf + i as f64) / i as f64;
    }
    acc.is_finite().then_some(acc)
}

/// Plain binary64 terms; `None` when any term overflows.
fn direct_sum(n: u32, alpha: f64, beta: f64, x: f64) -> Option<Estimate> {
    let nf = n as f64;
    let down = (x - 1.0) / 2.0;
    let up = (x + 1.0) / 2.0;
    let (mut sum, mut abs_sum) = (0.0f64, 0.0f64);
    for t in 0..=n {
        let s = n - t;
        let term = binomial_product(nf + alpha, s)?
            * binomial_product(nf + beta, t)?
            * down.powi(t as i32)
            * up.powi(s as i32);
        if !term.is_finite() {
            return None;
        }
        sum += term;
        abs_sum += term.abs();
    }
    if !sum.is_finite() {
        return None;
    }
    Some(Estimate {
        value: sum,
        abs_err: 4.0 * (nf + 2.0) * f64::EPSILON * abs_sum,
    })
}

/// Log-gamma binomials and a common scale factor, for degrees whose terms
/// overflow binary64.
fn log_space_sum(n: u32, alpha: f64, beta: f64, x: f64) -> Estimate {
    let nf = n as f64;
    let down = (x - 1.0) / 2.0;
    let up = (x + 1.0) / 2.0;
    let (ln_down, ln_up) = (down.abs().ln(), up.abs().ln());

    // (log magnitude, sign) of each term
    let mut terms = Vec::with_capacity(n as usize + 1);
    for t in 0..=n {
        let s = n - t;
        if (t > 0 && down == 0.0) || (s > 0 && up == 0.0) {
            continue;
        }
        let mut log_mag = ln_binomial(nf + alpha, s) + ln_binomial(nf + beta, t);
        if t > 0 {
            log_mag += t as f64 * ln_down;
        }
        if s > 0 {
            log_mag += s as f64 * ln_up;
        }
        let negative = (down < 0.0 && t % 2 == 1) ^ (up < 0.0 && s % 2 == 1);
        terms.push((log_mag, if negative { -1.0 } else { 1.0 }));
    }
    if terms.is_empty() {
        return Estimate { value: 0.0, abs_err: 0.0 };
    }

    let peak = terms.iter().map(|t| t.0).fold(f64::NEG_INFINITY, f64::max);
    let (mut sum, mut abs_sum) = (0.0f64, 0.0f64);
    for &(log_mag, sgn) in &terms {
        let m = (log_mag - peak).exp();
        sum += sgn * m;
        abs_sum += m;
    }
    let scale = peak.exp();
    // exp() turns absolute error in the log into relative error of the term
    let per_term = f64::EPSILON * (8.0 + peak.abs() + nf);
    Estimate {
        value: sum * scale,
        abs_err: per_term * abs_sum * scale,
    }
}

fn horner_f64(coeffs: &[f64], x: f64) -> Estimate {
    let value = coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let magnitude = coeffs.iter().rev().fold(0.0, |acc, c| acc * x.abs() + c.abs());
    Estimate {
        value,
        abs_err: 2.0 * coeffs.len() as f64 * f64::EPSILON * magnitude,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRequest {
    pub n_values: Vec<u32>,
    pub fam: FamilyParams,
    pub x_grid: Vec<f64>,
    pub mode: EvalMode,
}

impl EvalRequest {
    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() {
            return Err(Error::EmptyRequest);
        }
        if let Some(&n) = self.n_values.iter().find(|&&n| n == 0) {
            return Err(Error::DegreeTooSmall { n, min: 1 });
        }
        if let Some(x) = self.x_grid.iter().find(|x| !x.is_finite()) {
            return Err(Error::NonFinite(x.to_string()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u32,
    pub fam: FamilyParams,
    pub x: f64,
    pub delta_value: f64,
    pub sign: i8,
    pub est_rel_err: f64,
}

impl SweepRow {
    pub fn is_flagged(&self) -> bool {
        self.est_rel_err.is_nan() || self.est_rel_err > FLAG_REL_ERR
    }
}

/// `Δ_n(x)` with its error estimate and the product magnitude used for sign
/// classification.
pub fn eval_delta_float(n: u32, fam: &FamilyParams, x: f64, mode: EvalMode) -> Result<(Estimate, f64)> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    let (a, b) = (to_f64(fam.a()), to_f64(fam.b()));
    let factors: [(u32, u32); 4] = [(n, n), (n, n + 1), (n - 1, n), (n + 1, n + 1)];
    let mut est = [Estimate { value: 0.0, abs_err: 0.0 }; 4];
    for (slot, &(degree, ray)) in est.iter_mut().zip(&factors) {
        *slot = match mode {
            EvalMode::DirectSum => {
                eval_jacobi_estimate(degree, a * ray as f64, b * ray as f64, x)?
            }
            EvalMode::HornerOnExact => {
                check_params(0.0, 0.0, x)?;
                let exact: Poly = jacobi_with_params(degree, fam, ray);
                let coeffs: Vec<f64> = exact.coeffs().iter().map(to_f64).collect();
                horner_f64(&coeffs, x)
            }
        };
    }
    let [p1, p2, p3, p4] = est;
    let left = p1.value * p2.value;
    let right = p3.value * p4.value;
    let magnitude = left.abs() + right.abs();
    let abs_err = p1.abs_err * p2.value.abs()
        + p2.abs_err * p1.value.abs()
        + p3.abs_err * p4.value.abs()
        + p4.abs_err * p3.value.abs()
        + f64::EPSILON * magnitude;
    Ok((
        Estimate {
            value: left - right,
            abs_err,
        },
        magnitude,
    ))
}

pub fn classify_sign(value: f64, magnitude: f64) -> i8 {
    if value.abs() <= ZERO_THRESHOLD * (1.0 + magnitude) {
        0
    } else if value < 0.0 {
        -1
    } else {
        1
    }
}

/// One row per `(n, x)`, ordered by `n` then by position in the grid.
pub fn sweep_delta(req: &EvalRequest) -> Result<Vec<SweepRow>> {
    req.validate()?;
    let per_n: Vec<Result<Vec<SweepRow>>> = req
        .n_values
        .par_iter()
        .map(|&n| {
            req.x_grid
                .iter()
                .map(|&x| {
                    let (est, magnitude) = eval_delta_float(n, &req.fam, x, req.mode)?;
                    let est_rel_err = if est.value == 0.0 {
                        f64::INFINITY
                    } else {
                        est.abs_err / est.value.abs()
                    };
                    Ok(SweepRow {
                        n,
                        fam: req.fam.clone(),
                        x,
                        delta_value: est.value,
                        sign: classify_sign(est.value, magnitude),
                        est_rel_err,
                    })
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for chunk in per_n {
        rows.extend(chunk?);
    }
    Ok(rows)
}

/// `start, start + step, ...` up to and including `stop` (within rounding).
pub fn linear_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    for v in [start, stop, step] {
        if !v.is_finite() {
            return Err(Error::NonFinite(v.to_string()));
        }
    }
    if step <= 0.0 || stop < start {
        return Err(Error::EmptyInterval);
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| start + k as f64 * step).collect())
}
