//! Autocorrelation, phase pairs and ARMAX identification and forecasting.
//!
//! Kernel convention: `A(z) = 1 + a₁z⁻¹ + … + a_m z⁻ᵐ` is stored without its
//! leading 1, so the one-step predictor is
//!
//! ```text
//! ŷ(t) = −Σ aᵢ y(t−i) + Σ bⱼ u(t−d−j+1) + Σ c_l e(t−l)
//! ```
//!
//! with `d` the input delay and `e` the prediction residuals. There is no
//! intercept term.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::optim;

/// Biased normalized sample autocorrelation `r(0..=maxlag)`.
pub fn autocorrelation(values: &[f64], maxlag: usize) -> Result<Vec<f64>> {
    let n = values.len();
    if n <= maxlag + 1 {
        return Err(Error::TooShort {
            needed: maxlag + 2,
            got: n,
        });
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let dev: Vec<f64> = values.iter().map(|v| v - mean).collect();
    let denom: f64 = dev.iter().map(|v| v * v).sum();
    if denom <= 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok((0..=maxlag)
        .map(|k| {
            if k == 0 {
                1.0
            } else {
                linalg::dot(&dev[..n - k], &dev[k..]) / denom
            }
        })
        .collect())
}

pub const DEFAULT_PHASE_SCALE: f64 = 100.0;

/// Delay-embedding pairs `(y(t)/scale, y(t+lag)/scale)` for every valid `t`.
pub fn phase_pairs(values: &[f64], lag: usize, scale: f64) -> Result<Vec<(f64, f64)>> {
    if lag == 0 || lag >= values.len() {
        return Err(Error::BadLag {
            lag,
            len: values.len(),
        });
    }
    Ok(values
        .iter()
        .zip(&values[lag..])
        .map(|(a, b)| (a / scale, b / scale))
        .collect())
}

/// Fitted or hand-built ARMAX model.
#[derive(Debug, Clone, PartialEq)]
pub struct ArmaModel {
    /// `a₁..a_m`; the leading 1 of `A(z)` is implicit.
    pub a: Vec<f64>,
    /// Input coefficients for delays `delay, delay+1, …`.
    pub b: Vec<f64>,
    pub delay: usize,
    /// Error-kernel coefficients `c₁..c_q`.
    pub c: Vec<f64>,
    pub noise_variance: f64,
    pub fit_rmse: f64,
    /// All roots of `A(z)` strictly inside the unit circle.
    pub stable: bool,
}

impl ArmaModel {
    /// Model with the given kernels and no fit diagnostics (NaN).
    pub fn new(a: Vec<f64>, b: Vec<f64>, delay: usize, c: Vec<f64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::BadParam("AR order must be at least 1"));
        }
        let stable = is_stable(&a);
        Ok(Self {
            a,
            b,
            delay,
            c,
            noise_variance: f64::NAN,
            fit_rmse: f64::NAN,
            stable,
        })
    }

    /// `(m, k, q)`.
    pub fn orders(&self) -> (usize, usize, usize) {
        (self.a.len(), self.b.len(), self.c.len())
    }

    /// First index whose prediction needs no pre-sample outputs or inputs.
    fn first_predictable(&self) -> usize {
        self.a.len().max((self.delay + self.b.len()).saturating_sub(1))
    }
}

/// Schur-Cohn step-down test on the monic polynomial `1 + Σ pᵢ z⁻ⁱ`.
pub fn is_stable(p: &[f64]) -> bool {
    let mut cur: Vec<f64> = p.to_vec();
    while let Some(&k) = cur.last() {
        if !k.is_finite() || k.abs() >= 1.0 {
            return false;
        }
        let m = cur.len();
        let denom = 1.0 - k * k;
        cur = (0..m - 1)
            .map(|i| (cur[i] - k * cur[m - 2 - i]) / denom)
            .collect();
    }
    true
}

/// Prediction of `y[t]` from the past of `y`, the inputs and residuals.
/// Terms that would reach before index 0 are dropped.
fn predict_at(model: &ArmaModel, y: &[f64], u: &[f64], e: &[f64], t: usize) -> f64 {
    let mut acc = 0.0;
    for (i, a) in model.a.iter().enumerate() {
        if let Some(idx) = t.checked_sub(i + 1) {
            acc -= a * y[idx];
        }
    }
    for (j, b) in model.b.iter().enumerate() {
        if let Some(idx) = t.checked_sub(model.delay + j) {
            acc += b * u[idx];
        }
    }
    for (l, c) in model.c.iter().enumerate() {
        if let Some(idx) = t.checked_sub(l + 1) {
            acc += c * e[idx];
        }
    }
    acc
}

/// Residuals over `y`, zero before the first predictable index.
fn residuals_of(model: &ArmaModel, y: &[f64], u: &[f64]) -> Vec<f64> {
    let t0 = model.first_predictable();
    let mut e = vec![0.0; y.len()];
    for t in t0..y.len() {
        e[t] = y[t] - predict_at(model, y, u, &e, t);
    }
    e
}

/// One-step-ahead predictions `ŷ(t)` for every `t` from the first predictable
/// index on, paired with their time index.
pub fn one_step_predictions(model: &ArmaModel, y: &[f64], u: &[f64]) -> Result<Vec<(usize, f64)>> {
    if y.len() != u.len() {
        return Err(Error::LengthMismatch(y.len(), u.len()));
    }
    let e = residuals_of(model, y, u);
    let t0 = model.first_predictable();
    Ok((t0..y.len()).map(|t| (t, y[t] - e[t])).collect())
}

/// Iterated multi-step forecast.
///
/// `past_inputs` aligns with `history`; `future_inputs` supplies the input
/// for each forecast step. Residuals are known over the history and taken as
/// zero beyond it.
pub fn forecast(
    model: &ArmaModel,
    history: &[f64],
    past_inputs: &[f64],
    future_inputs: &[f64],
    horizon: usize,
) -> Result<Vec<f64>> {
    if history.len() != past_inputs.len() {
        return Err(Error::LengthMismatch(history.len(), past_inputs.len()));
    }
    let needed = model.first_predictable();
    if history.len() < needed.max(1) {
        return Err(Error::InsufficientHistory {
            needed: needed.max(1),
            got: history.len(),
        });
    }
    if future_inputs.len() < horizon {
        return Err(Error::TooShort {
            needed: horizon,
            got: future_inputs.len(),
        });
    }
    let n = history.len();
    let mut y = history.to_vec();
    let mut u = past_inputs.to_vec();
    u.extend_from_slice(&future_inputs[..horizon]);
    let mut e = residuals_of(model, history, past_inputs);
    for t in n..n + horizon {
        let next = predict_at(model, &y, &u, &e, t);
        y.push(next);
        e.push(0.0);
    }
    Ok(y.split_off(n))
}

/// Forward simulation with Gaussian innovations of standard deviation
/// `noise_stdev`; deterministic for a fixed seed.
pub fn simulate(model: &ArmaModel, inputs: &[f64], noise_stdev: f64, seed: u64) -> Result<Vec<f64>> {
    if !is_stable(&model.a) {
        return Err(Error::UnstablePolynomial);
    }
    if !noise_stdev.is_finite() || noise_stdev < 0.0 {
        return Err(Error::BadParam("noise standard deviation must be finite and non-negative"));
    }
    let normal = Normal::new(0.0, noise_stdev).map_err(|_| Error::BadParam("noise standard deviation"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = inputs.len();
    let e: Vec<f64> = (0..n).map(|_| normal.sample(&mut rng)).collect();
    let mut y = vec![0.0; n];
    for t in 0..n {
        y[t] = predict_at(model, &y, inputs, &e, t) + e[t];
    }
    Ok(y)
}

pub const ARMAX_TOLERANCE: f64 = 1e-8;
pub const ARMAX_MAX_ITERATIONS: usize = 100;
/// Delays tried when none is fixed.
pub const MAX_INPUT_DELAY: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArmaxOrders {
    pub m: usize,
    pub k: usize,
    pub q: usize,
}

struct Problem<'a> {
    y: &'a [f64],
    u: &'a [f64],
    orders: ArmaxOrders,
    delay: usize,
    t0: usize,
}

impl Problem<'_> {
    fn model(&self, theta: &[f64]) -> ArmaModel {
        let ArmaxOrders { m, k, .. } = self.orders;
        ArmaModel {
            a: theta[..m].to_vec(),
            b: theta[m..m + k].to_vec(),
            delay: self.delay,
            c: theta[m + k..].to_vec(),
            noise_variance: f64::NAN,
            fit_rmse: f64::NAN,
            stable: false,
        }
    }

    /// Residuals on `t0..n` and their Jacobian, by recursive filtering of
    /// the gradient through the error kernel.
    fn residuals_and_jacobian(&self, theta: &[f64]) -> Option<(Vec<f64>, Matrix)> {
        let ArmaxOrders { m, k, q } = self.orders;
        let p = m + k + q;
        let n = self.y.len();
        let model = self.model(theta);
        let c = &model.c;
        let mut e = vec![0.0; n];
        let mut psi = Matrix::zeros(n, p);
        for t in self.t0..n {
            e[t] = self.y[t] - predict_at(&model, self.y, self.u, &e, t);
            let mut row = vec![0.0; p];
            for i in 0..m {
                row[i] = self.y[t - i - 1];
            }
            for j in 0..k {
                row[m + j] = -self.u[t - self.delay - j];
            }
            for l in 0..q {
                if t > l {
                    row[m + k + l] = -e[t - l - 1];
                }
            }
            for (l, cl) in c.iter().enumerate() {
                if t > l {
                    let prev = psi.row(t - l - 1);
                    for (r, pv) in row.iter_mut().zip(prev) {
                        *r -= cl * pv;
                    }
                }
            }
            psi.row_mut(t).copy_from_slice(&row);
        }
        let rows = n - self.t0;
        if e[self.t0..].iter().any(|v| !v.is_finite()) {
            return None;
        }
        let jac = Matrix::from_fn(rows, p, |r, col| psi[(r + self.t0, col)]);
        Some((e[self.t0..].to_vec(), jac))
    }

    /// Hannan-Rissanen two-stage least-squares start.
    fn initial_estimate(&self) -> Result<Vec<f64>> {
        let ArmaxOrders { m, k, q } = self.orders;
        let n = self.y.len();
        let input_span = (self.delay + k).saturating_sub(1);
        let arx = |lags: usize, start: usize, resid: Option<&[f64]>| -> Result<Vec<f64>> {
            let cols = lags + k + resid.map_or(0, |_| q);
            if n <= start + cols {
                return Err(Error::TooShort {
                    needed: start + cols + 1,
                    got: n,
                });
            }
            let design = Matrix::from_fn(n - start, cols, |r, c| {
                let t = r + start;
                if c < lags {
                    -self.y[t - c - 1]
                } else if c < lags + k {
                    self.u[t - self.delay - (c - lags)]
                } else {
                    resid.map_or(0.0, |e| e[t - (c - lags - k) - 1])
                }
            });
            linalg::lstsq(&design, &self.y[start..])
        };

        if q == 0 {
            return arx(m, self.t0, None);
        }
        let long = (4 * m).min(n / 4).max(m);
        let long_start = long.max(input_span);
        let long_fit = arx(long, long_start, None)?;
        let mut e_hat = vec![0.0; n];
        for t in long_start..n {
            let mut pred = 0.0;
            for i in 0..long {
                pred -= long_fit[i] * self.y[t - i - 1];
            }
            for j in 0..k {
                pred += long_fit[long + j] * self.u[t - self.delay - j];
            }
            e_hat[t] = self.y[t] - pred;
        }
        let start = self.t0.max(long_start + q);
        match arx(m, start, Some(&e_hat)) {
            Ok(mut theta) => {
                // keep the error kernel invertible so the residual filter is bounded
                for _ in 0..200 {
                    if is_stable(&theta[m + k..]) {
                        break;
                    }
                    for (l, c) in theta[m + k..].iter_mut().enumerate() {
                        *c *= 0.9f64.powi(l as i32 + 1);
                    }
                }
                Ok(theta)
            }
            Err(Error::SingularDesign) => {
                // residuals carry no information (e.g. an exact fit)
                let mut theta = arx(m, self.t0, None)?;
                theta.extend(core::iter::repeat_n(0.0, q));
                Ok(theta)
            }
            Err(err) => Err(err),
        }
    }

    fn fit(&self) -> Result<(Vec<f64>, f64)> {
        let start = self.initial_estimate()?;
        if self.orders.q == 0 {
            let (r, _) = self
                .residuals_and_jacobian(&start)
                .ok_or(Error::DegenerateData)?;
            return Ok((start, r.iter().map(|v| v * v).sum()));
        }
        let out = optim::levenberg_marquardt(
            |theta| self.residuals_and_jacobian(theta),
            &start,
            ARMAX_TOLERANCE,
            ARMAX_MAX_ITERATIONS,
        )
        .ok_or(Error::DegenerateData)?;
        if !out.converged {
            return Err(Error::NoConvergence {
                iterations: out.iterations,
            });
        }
        Ok((out.params, out.sse))
    }
}

/// ARMAX fit minimizing the one-step prediction error.
///
/// `delay = None` searches delays `0..=MAX_INPUT_DELAY` and keeps the lowest
/// SSE (ties to the smaller delay). Every candidate is estimated on the same
/// range `t ≥ max(m, q, d_max + k − 1)`, where `d_max` is the largest delay
/// considered.
pub fn fit_armax(y: &[f64], u: &[f64], orders: ArmaxOrders, delay: Option<usize>) -> Result<ArmaModel> {
    let ArmaxOrders { m, k, q } = orders;
    if m == 0 {
        return Err(Error::BadParam("AR order must be at least 1"));
    }
    if y.len() != u.len() {
        return Err(Error::LengthMismatch(y.len(), u.len()));
    }
    let needed = 3 * (m + k + q) + 1;
    if y.len() < needed {
        return Err(Error::TooShort {
            needed,
            got: y.len(),
        });
    }
    let delays: Vec<usize> = match delay {
        Some(d) => vec![d],
        None => (0..=MAX_INPUT_DELAY).collect(),
    };
    let d_max = *delays.last().unwrap();
    let t0 = m.max(q).max((d_max + k).saturating_sub(1));
    if y.len() <= t0 + m + k + q {
        return Err(Error::TooShort {
            needed: t0 + m + k + q + 1,
            got: y.len(),
        });
    }

    let mut best: Option<(Vec<f64>, f64, usize)> = None;
    let mut last_err = None;
    for &d in &delays {
        let problem = Problem {
            y,
            u,
            orders,
            delay: d,
            t0,
        };
        match problem.fit() {
            Ok((theta, sse)) => {
                if best.as_ref().is_none_or(|(_, s, _)| sse < *s) {
                    best = Some((theta, sse, d));
                }
            }
            Err(err) => last_err = Some(err),
        }
    }
    let (theta, sse, d) = match best {
        Some(b) => b,
        None => return Err(last_err.unwrap_or(Error::DegenerateData)),
    };
    let rows = (y.len() - t0) as f64;
    let params = (m + k + q) as f64;
    let mut model = ArmaModel::new(theta[..m].to_vec(), theta[m..m + k].to_vec(), d, theta[m + k..].to_vec())?;
    model.fit_rmse = (sse / rows).sqrt();
    model.noise_variance = sse / (rows - params);
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn weekday_cycle(n: usize) -> Vec<f64> {
        (0..n).map(|t| (t % 7 + 1) as f64).collect()
    }

    #[test]
    fn autocorrelation_examples() {
        assert_eq!(autocorrelation(&[3.0; 20], 5), Err(Error::ZeroVariance));
        assert!(matches!(
            autocorrelation(&[1.0, 2.0, 3.0], 2),
            Err(Error::TooShort { .. })
        ));
        let s: Vec<f64> = (0..120)
            .map(|t| (2.0 * core::f64::consts::PI * t as f64 / 6.0).sin())
            .collect();
        let r = autocorrelation(&s, 10).unwrap();
        assert_eq!(r[0], 1.0);
        assert!(r[6] > r[5] && r[6] > r[7]);
    }

    #[test]
    fn white_noise_autocorrelation_is_small() {
        let zero = ArmaModel::new(vec![0.0], vec![], 0, vec![]).unwrap();
        let noise = simulate(&zero, &vec![0.0; 10_000], 1.0, 7).unwrap();
        let r = autocorrelation(&noise, 10).unwrap();
        assert!(r[1..].iter().all(|v| v.abs() < 0.05));
    }

    #[test]
    fn phase_pair_examples() {
        assert_eq!(
            phase_pairs(&[100.0, 200.0, 300.0], 1, 100.0).unwrap(),
            vec![(1.0, 2.0), (2.0, 3.0)]
        );
        assert_eq!(phase_pairs(&[1.0, 2.0, 3.0], 2, 1.0).unwrap().len(), 1);
        assert_eq!(
            phase_pairs(&[1.0, 2.0], 0, 1.0),
            Err(Error::BadLag { lag: 0, len: 2 })
        );
        assert!(phase_pairs(&[1.0, 2.0], 2, 1.0).is_err());
    }

    #[test]
    fn stability_test() {
        assert!(is_stable(&[-0.5, 0.2]));
        assert!(is_stable(&[-0.9]));
        assert!(!is_stable(&[-1.0]));
        // (1 − 1.2z⁻¹)(1 + 0.5z⁻¹) has a root outside the unit circle
        assert!(!is_stable(&[-0.7, -0.6]));
        assert!(is_stable(&[]));
    }

    #[test]
    fn ar1_forecast_closed_form() {
        let model = ArmaModel::new(vec![-0.5], vec![], 0, vec![]).unwrap();
        let f = forecast(&model, &[100.0], &[0.0], &[0.0; 3], 3).unwrap();
        assert_eq!(f, vec![50.0, 25.0, 12.5]);
    }

    #[test]
    fn zero_model_forecasts_zero() {
        let model = ArmaModel::new(vec![0.0, 0.0], vec![0.0], 1, vec![0.0]).unwrap();
        let h = [5.0, 9.0, 3.0];
        let f = forecast(&model, &h, &[1.0, 2.0, 3.0], &[4.0; 4], 4).unwrap();
        assert_eq!(f, vec![0.0; 4]);
    }

    #[test]
    fn forecast_needs_history() {
        let model = ArmaModel::new(vec![0.1, 0.1, 0.1], vec![], 0, vec![]).unwrap();
        assert_eq!(
            forecast(&model, &[1.0, 2.0], &[0.0, 0.0], &[0.0], 1),
            Err(Error::InsufficientHistory { needed: 3, got: 2 })
        );
    }

    #[test]
    fn simulate_is_deterministic_and_checks_stability() {
        let zero = ArmaModel::new(vec![0.0], vec![0.0], 1, vec![0.0]).unwrap();
        assert_eq!(simulate(&zero, &weekday_cycle(50), 0.0, 3).unwrap(), vec![0.0; 50]);
        let m = ArmaModel::new(vec![-0.5, 0.2], vec![10.0], 1, vec![0.3]).unwrap();
        let u = weekday_cycle(200);
        assert_eq!(simulate(&m, &u, 1.0, 9).unwrap(), simulate(&m, &u, 1.0, 9).unwrap());
        assert_ne!(simulate(&m, &u, 1.0, 9).unwrap(), simulate(&m, &u, 1.0, 10).unwrap());
        let unstable = ArmaModel::new(vec![-1.1], vec![], 0, vec![]).unwrap();
        assert_eq!(simulate(&unstable, &u, 1.0, 1), Err(Error::UnstablePolynomial));
    }

    #[test]
    fn ar1_simulation_lag_one_correlation() {
        let m = ArmaModel::new(vec![-0.9], vec![], 0, vec![]).unwrap();
        let y = simulate(&m, &vec![0.0; 20_000], 1.0, 11).unwrap();
        let r = autocorrelation(&y, 1).unwrap();
        assert!((r[1] - 0.9).abs() < 0.03);
    }

    #[test]
    fn recovers_armax_211() {
        let truth = ArmaModel::new(vec![-0.5, 0.2], vec![10.0], 1, vec![0.3]).unwrap();
        let u = weekday_cycle(5000);
        let y = simulate(&truth, &u, 1.0, 5).unwrap();
        let fit = fit_armax(&y, &u, ArmaxOrders { m: 2, k: 1, q: 1 }, None).unwrap();
        assert_eq!(fit.delay, 1);
        assert!(fit.stable);
        for (got, want) in fit.a.iter().chain(&fit.b).chain(&fit.c).zip([-0.5, 0.2, 10.0, 0.3]) {
            assert!((got - want).abs() < 0.05, "{got} vs {want}");
        }
        assert!((fit.noise_variance - 1.0).abs() < 0.1);
    }

    #[test]
    fn white_noise_gives_small_ar_coefficients() {
        let zero = ArmaModel::new(vec![0.0], vec![], 0, vec![]).unwrap();
        let y = simulate(&zero, &vec![0.0; 10_000], 1.0, 21).unwrap();
        let u = weekday_cycle(10_000);
        let fit = fit_armax(&y, &u, ArmaxOrders { m: 3, k: 1, q: 0 }, Some(1)).unwrap();
        assert!(fit.a.iter().all(|a| a.abs() < 0.1));
    }

    #[test]
    fn fit_rejects_short_or_mismatched_input() {
        let y = vec![1.0; 10];
        let o = ArmaxOrders { m: 2, k: 1, q: 1 };
        assert!(matches!(fit_armax(&y, &y, o, None), Err(Error::TooShort { .. })));
        assert_eq!(fit_armax(&y, &y[..9], o, None), Err(Error::LengthMismatch(10, 9)));
    }

    #[test]
    fn one_step_forecast_matches_predictor() {
        let truth = ArmaModel::new(vec![-0.5, 0.2], vec![10.0], 1, vec![0.3]).unwrap();
        let u = weekday_cycle(300);
        let y = simulate(&truth, &u, 1.0, 2).unwrap();
        let preds = one_step_predictions(&truth, &y, &u).unwrap();
        for n in [10usize, 57, 299] {
            let f = forecast(&truth, &y[..n], &u[..n], &u[n..n + 1], 1).unwrap();
            let (t, p) = preds[n - truth.first_predictable()];
            assert_eq!(t, n);
            assert_eq!(f[0], p);
        }
    }

    #[test]
    fn horizon_one_rmse_near_innovation_stdev() {
        let truth = ArmaModel::new(vec![-0.5, 0.2], vec![10.0], 1, vec![0.3]).unwrap();
        let u = weekday_cycle(200);
        let sigma = 2.0;
        let mut sq = 0.0;
        for trial in 0..1000u64 {
            let y = simulate(&truth, &u, sigma, 1000 + trial).unwrap();
            let f = forecast(&truth, &y[..199], &u[..199], &u[199..], 1).unwrap();
            sq += (f[0] - y[199]).powi(2);
        }
        let rmse = (sq / 1000.0).sqrt();
        assert!(rmse <= 1.1 * sigma, "rmse {rmse}");
    }

    #[test]
    fn longer_ar_never_fits_worse() {
        let mut a = vec![0.0; 21];
        a[0] = -0.3;
        a[6] = -0.25;
        a[13] = -0.2;
        a[20] = -0.15;
        let truth = ArmaModel::new(a, vec![5.0], 1, vec![0.2]).unwrap();
        for seed in 0..3 {
            let u = weekday_cycle(600);
            let y = simulate(&truth, &u, 3.0, seed).unwrap();
            let rmse: Vec<f64> = [7, 14, 21]
                .iter()
                .map(|&m| fit_armax(&y, &u, ArmaxOrders { m, k: 1, q: 1 }, None).unwrap().fit_rmse)
                .collect();
            assert!(rmse[1] <= rmse[0] && rmse[2] <= rmse[1], "{rmse:?}");
        }
    }

    proptest! {
        #[test]
        fn autocorrelation_affine_invariant(
            xs in proptest::collection::vec(-100.0f64..100.0, 12..60),
            alpha in 0.1f64..50.0,
            beta in -1e3f64..1e3,
        ) {
            let spread = xs.iter().cloned().fold(f64::MIN, f64::max) - xs.iter().cloned().fold(f64::MAX, f64::min);
            prop_assume!(spread > 1e-3);
            let r = autocorrelation(&xs, 10).unwrap();
            let ys: Vec<f64> = xs.iter().map(|x| alpha * x + beta).collect();
            let s = autocorrelation(&ys, 10).unwrap();
            prop_assert_eq!(r[0], 1.0);
            for (a, b) in r.iter().zip(&s) {
                prop_assert!(a.abs() <= 1.0 + 1e-12);
                prop_assert!((a - b).abs() < 1e-9);
            }
        }
    }
}
