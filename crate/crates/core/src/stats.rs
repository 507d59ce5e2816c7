//! Descriptive statistics, histograms and Poisson / GEV maximum-likelihood
//! fits of the daily-count distribution.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::optim::nelder_mead_max;
use crate::series::WeeklyMatrix;

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary {
    pub min: f64,
    pub max: f64,
    pub median: f64,
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator).
    pub stdev: f64,
    /// Moment coefficient of skewness `m3 / m2^1.5`.
    pub skewness: f64,
    /// Excess kurtosis `m4 / m2² − 3` (zero for a Normal sample).
    pub excess_kurtosis: f64,
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

fn sorted(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

pub fn moments(values: &[f64]) -> Result<MomentSummary> {
    let n = values.len();
    if n < 2 {
        return Err(Error::TooShort { needed: 2, got: n });
    }
    let s = sorted(values);
    let median = if n % 2 == 1 {
        s[n / 2]
    } else {
        0.5 * (s[n / 2 - 1] + s[n / 2])
    };
    let mu = mean(values);
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for v in values {
        let d = v - mu;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    let nf = n as f64;
    let stdev = (m2 / (nf - 1.0)).sqrt();
    let (m2, m3, m4) = (m2 / nf, m3 / nf, m4 / nf);
    let (skewness, excess_kurtosis) = if m2 > 0.0 {
        (m3 / m2.powf(1.5), m4 / (m2 * m2) - 3.0)
    } else {
        (f64::NAN, f64::NAN)
    };
    Ok(MomentSummary {
        min: s[0],
        max: s[n - 1],
        median,
        mean: mu,
        stdev,
        skewness,
        excess_kurtosis,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    /// `bins + 1` strictly increasing boundaries.
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
}

/// Equal-width histogram over `[min, max]`; the last bin includes its right
/// edge. A constant series gets bins of width 1 starting at the value.
pub fn histogram(values: &[f64], bins: usize) -> Result<Histogram> {
    if bins == 0 {
        return Err(Error::BadParam("bins must be at least 1"));
    }
    if values.is_empty() {
        return Err(Error::TooShort { needed: 1, got: 0 });
    }
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let width = if hi > lo { (hi - lo) / bins as f64 } else { 1.0 };
    let edges: Vec<f64> = (0..=bins)
        .map(|i| if i == bins && hi > lo { hi } else { lo + width * i as f64 })
        .collect();
    let mut counts = vec![0usize; bins];
    for v in values {
        let idx = (((v - lo) / width).floor() as usize).min(bins - 1);
        counts[idx] += 1;
    }
    Ok(Histogram { edges, counts })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonFit {
    pub lambda: f64,
    /// Half-width of the 95% normal-approximation interval `1.96·√(λ/n)`.
    pub ci_halfwidth: f64,
}

/// Poisson MLE: the rate is the sample mean.
pub fn fit_poisson(values: &[f64]) -> Result<PoissonFit> {
    if values.is_empty() {
        return Err(Error::TooShort { needed: 1, got: 0 });
    }
    if let Some(i) = values.iter().position(|&v| v < 0.0) {
        return Err(Error::NegativeCount(i + 1));
    }
    let lambda = mean(values);
    Ok(PoissonFit {
        lambda,
        ci_halfwidth: Z95 * (lambda / values.len() as f64).sqrt(),
    })
}

/// Generalized extreme value fit. `shape` is ξ in
/// `F(x) = exp(−(1 + ξ(x−μ)/σ)^(−1/ξ))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GevFit {
    pub shape: f64,
    pub scale: f64,
    pub location: f64,
    /// 95% half-intervals from the observed information; NaN when the
    /// information matrix is not positive definite at the optimum.
    pub shape_ci: f64,
    pub scale_ci: f64,
    pub location_ci: f64,
    pub log_likelihood: f64,
}

/// GEV log-likelihood; `−∞` outside the support or for `σ ≤ 0` / `ξ ≤ −1`.
pub fn gev_log_likelihood(values: &[f64], shape: f64, scale: f64, location: f64) -> f64 {
    if !(scale > 0.0) || !(shape > -1.0) {
        return f64::NEG_INFINITY;
    }
    let n = values.len() as f64;
    let mut ll = -n * scale.ln();
    if shape.abs() < 1e-12 {
        for x in values {
            let z = (x - location) / scale;
            ll -= z + (-z).exp();
        }
        return ll;
    }
    for x in values {
        let arg = shape * (x - location) / scale;
        if arg <= -1.0 {
            return f64::NEG_INFINITY;
        }
        let log_t = arg.ln_1p();
        ll -= (1.0 + 1.0 / shape) * log_t + (-log_t / shape).exp();
    }
    ll
}

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Probability-weighted-moment estimate (ξ, σ, μ).
fn gev_pwm_initializer(values: &[f64]) -> (f64, f64, f64) {
    let s = sorted(values);
    let n = s.len() as f64;
    let (mut b0, mut b1, mut b2) = (0.0, 0.0, 0.0);
    for (i, x) in s.iter().enumerate() {
        let i = i as f64;
        b0 += x;
        b1 += i / (n - 1.0) * x;
        b2 += i * (i - 1.0) / ((n - 1.0) * (n - 2.0)) * x;
    }
    b0 /= n;
    b1 /= n;
    b2 /= n;
    let c = (2.0 * b1 - b0) / (3.0 * b2 - b0) - 2.0f64.ln() / 3.0f64.ln();
    let k = 7.8590 * c + 2.9554 * c * c;
    if !k.is_finite() || k.abs() < 1e-6 {
        let scale = (2.0 * b1 - b0) / 2.0f64.ln();
        return (0.0, scale, b0 - EULER_GAMMA * scale);
    }
    let g = libm::tgamma(1.0 + k);
    let scale = (2.0 * b1 - b0) * k / (g * (1.0 - 2.0f64.powf(-k)));
    let location = b0 + scale * (g - 1.0) / k;
    (-k, scale, location)
}

/// Pulls ξ toward zero until every sample is inside the support.
fn make_feasible(values: &[f64], mut p: (f64, f64, f64)) -> Option<(f64, f64, f64)> {
    if !(p.1 > 0.0) || !p.1.is_finite() || !p.2.is_finite() || !p.0.is_finite() {
        return None;
    }
    for _ in 0..60 {
        if gev_log_likelihood(values, p.0, p.1, p.2).is_finite() {
            return Some(p);
        }
        p.0 *= 0.5;
    }
    p.0 = 0.0;
    gev_log_likelihood(values, p.0, p.1, p.2).is_finite().then_some(p)
}

pub const GEV_TOLERANCE: f64 = 1e-8;
pub const GEV_MAX_ITERATIONS: usize = 500;

/// Maximum-likelihood GEV fit by multi-start Nelder-Mead.
///
/// The data are standardized internally; starts are the PWM estimate, a
/// moment-matched Gumbel, and perturbations of the PWM estimate in each
/// parameter.
pub fn fit_gev(values: &[f64]) -> Result<GevFit> {
    let n = values.len();
    if n < 20 {
        return Err(Error::TooShort { needed: 20, got: n });
    }
    let m = mean(values);
    let sd = (values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (n as f64 - 1.0)).sqrt();
    if !(sd > 0.0) {
        return Err(Error::ZeroVariance);
    }
    let z: Vec<f64> = values.iter().map(|v| (v - m) / sd).collect();

    let pwm = gev_pwm_initializer(&z);
    let gumbel_scale = 6.0f64.sqrt() / core::f64::consts::PI;
    let mut starts = vec![pwm, (0.0, gumbel_scale, -EULER_GAMMA * gumbel_scale)];
    for (dxi, fs, dmu) in [
        (0.1, 1.0, 0.0),
        (-0.1, 1.0, 0.0),
        (0.0, 1.25, 0.0),
        (0.0, 0.8, 0.0),
        (0.0, 1.0, 0.2),
        (0.0, 1.0, -0.2),
    ] {
        starts.push((pwm.0 + dxi, pwm.1 * fs, pwm.2 + dmu * pwm.1));
    }

    let objective = |p: &[f64]| gev_log_likelihood(&z, p[0], p[1].exp(), p[2]);
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut any_converged = false;
    let mut total_iterations = 0;
    for start in starts.into_iter().filter_map(|s| make_feasible(&z, s)) {
        let x0 = [start.0, start.1.ln(), start.2];
        let out = nelder_mead_max(
            objective,
            &x0,
            &[0.1, 0.1, 0.1],
            GEV_TOLERANCE,
            GEV_MAX_ITERATIONS,
        );
        total_iterations += out.iterations;
        any_converged |= out.converged;
        if best.as_ref().map_or(true, |(v, _)| out.value > *v) {
            best = Some((out.value, out.point));
        }
    }
    let (ll_z, p) = best.ok_or(Error::NoConvergence { iterations: 0 })?;
    if !any_converged {
        return Err(Error::NoConvergence {
            iterations: total_iterations,
        });
    }
    let (xi, sz, mz) = (p[0], p[1].exp(), p[2]);
    let ci = gev_confidence(&z, xi, sz, mz);
    Ok(GevFit {
        shape: xi,
        scale: sz * sd,
        location: m + mz * sd,
        shape_ci: ci[0],
        scale_ci: ci[1] * sd,
        location_ci: ci[2] * sd,
        log_likelihood: ll_z - n as f64 * sd.ln(),
    })
}

/// 95% half-widths from the inverse observed information (central finite
/// difference Hessian in (ξ, σ, μ)).
fn gev_confidence(values: &[f64], xi: f64, scale: f64, loc: f64) -> [f64; 3] {
    let p = [xi, scale, loc];
    let h = [1e-4, 1e-4 * scale, 1e-4 * scale];
    let f = |q: &[f64; 3]| gev_log_likelihood(values, q[0], q[1], q[2]);
    let mut hess = Matrix::zeros(3, 3);
    for i in 0..3 {
        for j in i..3 {
            let mut acc = 0.0;
            for (si, sj, w) in [(1.0, 1.0, 1.0), (1.0, -1.0, -1.0), (-1.0, 1.0, -1.0), (-1.0, -1.0, 1.0)] {
                let mut q = p;
                q[i] += si * h[i];
                q[j] += sj * h[j];
                acc += w * f(&q);
            }
            let v = acc / (4.0 * h[i] * h[j]);
            hess[(i, j)] = -v;
            hess[(j, i)] = -v;
        }
    }
    match linalg::inverse(&hess) {
        Ok(cov) => core::array::from_fn(|i| {
            let v = cov[(i, i)];
            if v > 0.0 && v.is_finite() {
                Z95 * v.sqrt()
            } else {
                f64::NAN
            }
        }),
        Err(_) => [f64::NAN; 3],
    }
}

/// Column means of the weekly matrix, re-indexed so entry 0 is Monday.
pub fn weekday_averages(m: &WeeklyMatrix) -> [f64; 7] {
    let mut out = [0.0; 7];
    for c in 0..7 {
        let col_mean = (0..m.rows()).map(|r| m.cell(r, c)).sum::<f64>() / m.rows() as f64;
        out[m.weekday_of_col(c) as usize - 1] = col_mean;
    }
    out
}
