//! Lagged linear auto-regression and the cosine-plus-trend regression used to
//! read off the dominant period and the linear slope of a series.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{lstsq, Matrix};
use crate::optim::levenberg_marquardt;

/// `y(t) ≈ intercept + Σ coefficients[i−1] · y(t − i)`, `i = 1..=window`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearArModel {
    pub intercept: f64,
    /// Weight on lag `i` is `coefficients[i - 1]`.
    pub coefficients: Vec<f64>,
    pub window: usize,
    /// Mean absolute error over the fitted range.
    pub mape: f64,
    pub rmse: f64,
    /// In-sample predictions for `t = window .. len` (zero-based).
    pub fitted: Vec<f64>,
}

impl LinearArModel {
    pub fn predict_next(&self, history: &[f64]) -> Option<f64> {
        if history.len() < self.window {
            return None;
        }
        let last = history.len();
        let row: Vec<f64> = core::iter::once(1.0)
            .chain((1..=self.window).map(|i| history[last - i]))
            .collect();
        let beta: Vec<f64> = core::iter::once(self.intercept)
            .chain(self.coefficients.iter().copied())
            .collect();
        Some(crate::linalg::dot(&row, &beta))
    }
}

pub const DEFAULT_AR_WINDOW: usize = 13;

/// Ordinary least squares of `y(t)` on `[1, y(t−1), …, y(t−n)]`.
///
/// Errors are measured over `t = n .. len` (zero-based), i.e. only where a
/// full lag window exists.
pub fn fit_linear_ar(values: &[f64], window: usize) -> Result<LinearArModel> {
    if window == 0 {
        return Err(Error::BadParam("lag window must be at least 1"));
    }
    let len = values.len();
    if len <= window + 1 {
        return Err(Error::TooShort {
            needed: window + 2,
            got: len,
        });
    }
    let rows = len - window;
    let design = Matrix::from_fn(rows, window + 1, |r, c| {
        if c == 0 {
            1.0
        } else {
            values[r + window - c]
        }
    });
    let target = &values[window..];
    let beta = lstsq(&design, target)?;
    let fitted = design.matvec(&beta);
    let (mut abs_sum, mut sq_sum) = (0.0, 0.0);
    for (f, y) in fitted.iter().zip(target) {
        let e = y - f;
        abs_sum += e.abs();
        sq_sum += e * e;
    }
    Ok(LinearArModel {
        intercept: beta[0],
        coefficients: beta[1..].to_vec(),
        window,
        mape: abs_sum / rows as f64,
        rmse: (sq_sum / rows as f64).sqrt(),
        fitted,
    })
}

/// `y(t) = a·cos(b·t + c) + d·t + c0` with `t = 1, 2, …`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosineLinearModel {
    pub a: f64,
    /// Angular frequency in radians per day.
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub c0: f64,
    pub sse: f64,
}

impl CosineLinearModel {
    pub fn eval(&self, t: f64) -> f64 {
        self.a * (self.b * t + self.c).cos() + self.d * t + self.c0
    }

    pub fn period_days(&self) -> f64 {
        dominant_period(self)
    }
}

/// Period `2π / b` of the cosine term, in days.
pub fn dominant_period(model: &CosineLinearModel) -> f64 {
    2.0 * PI / model.b
}

pub const FREQUENCY_GRID_POINTS: usize = 200;
const COSINE_TOL: f64 = 1e-10;
const COSINE_MAX_ITERATIONS: usize = 200;

/// Log-spaced angular frequencies from a 60-day to a 2-day period.
pub fn frequency_grid() -> Vec<f64> {
    let lo = 2.0 * PI / 60.0;
    let hi = 2.0 * PI / 2.0;
    let n = FREQUENCY_GRID_POINTS;
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo * (hi / lo).powf(i as f64 / (n - 1) as f64)
            }
        })
        .collect()
}

/// Linear least squares of the four remaining parameters at fixed `b`.
fn solve_at_frequency(values: &[f64], b: f64) -> Option<CosineLinearModel> {
    let n = values.len();
    let t = |r: usize| (r + 1) as f64;
    let full = Matrix::from_fn(n, 4, |r, c| match c {
        0 => (b * t(r)).cos(),
        1 => (b * t(r)).sin(),
        2 => t(r),
        _ => 1.0,
    });
    let (alpha, beta, d, c0) = match lstsq(&full, values) {
        Ok(w) => (w[0], w[1], w[2], w[3]),
        Err(_) => {
            // sin(b·t) vanishes on the integer grid at b = π
            let reduced = Matrix::from_fn(n, 3, |r, c| full[(r, [0, 2, 3][c])]);
            let w = lstsq(&reduced, values).ok()?;
            (w[0], 0.0, w[1], w[2])
        }
    };
    let mut model = CosineLinearModel {
        a: alpha.hypot(beta),
        b,
        c: (-beta).atan2(alpha),
        d,
        c0,
        sse: 0.0,
    };
    model.sse = sse(values, &model);
    Some(model)
}

fn sse(values: &[f64], m: &CosineLinearModel) -> f64 {
    values
        .iter()
        .enumerate()
        .map(|(i, y)| {
            let e = m.eval((i + 1) as f64) - y;
            e * e
        })
        .sum()
}

fn wrap_phase(c: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut w = c % two_pi;
    if w <= -PI {
        w += two_pi;
    } else if w > PI {
        w -= two_pi;
    }
    w
}

/// Least-squares cosine-plus-trend fit.
///
/// Every frequency on [`frequency_grid`] is solved exactly for the other four
/// parameters; the best grid point (smallest SSE, ties to the smaller `b`) is
/// then polished by damped Gauss-Newton on all five parameters. The result is
/// normalized to `a ≥ 0`, `b > 0`, `c ∈ (−π, π]`.
pub fn fit_cosine_linear(values: &[f64]) -> Result<CosineLinearModel> {
    let n = values.len();
    if n < 20 {
        return Err(Error::TooShort { needed: 20, got: n });
    }
    let mut best: Option<CosineLinearModel> = None;
    for b in frequency_grid() {
        if let Some(m) = solve_at_frequency(values, b) {
            if best.map_or(true, |cur| m.sse < cur.sse) {
                best = Some(m);
            }
        }
    }
    let start = best.ok_or(Error::SingularDesign)?;

    let residuals = |p: &[f64]| {
        let (a, b, c, d, c0) = (p[0], p[1], p[2], p[3], p[4]);
        let mut r = Vec::with_capacity(n);
        let mut jac = Matrix::zeros(n, 5);
        for (i, y) in values.iter().enumerate() {
            let t = (i + 1) as f64;
            let (s, co) = (b * t + c).sin_cos();
            r.push(a * co + d * t + c0 - y);
            jac[(i, 0)] = co;
            jac[(i, 1)] = -a * t * s;
            jac[(i, 2)] = -a * s;
            jac[(i, 3)] = t;
            jac[(i, 4)] = 1.0;
        }
        Some((r, jac))
    };
    let x0 = [start.a, start.b, start.c, start.d, start.c0];
    let out = levenberg_marquardt(residuals, &x0, COSINE_TOL, COSINE_MAX_ITERATIONS)
        .ok_or(Error::SingularDesign)?;
    if !out.converged {
        return Err(Error::NoConvergence {
            iterations: out.iterations,
        });
    }
    let p = out.params;
    let (mut a, mut b, mut c) = (p[0], p[1], p[2]);
    if b < 0.0 {
        b = -b;
        c = -c;
    }
    if a < 0.0 {
        a = -a;
        c += PI;
    }
    let mut model = CosineLinearModel {
        a,
        b,
        c: wrap_phase(c),
        d: p[3],
        c0: p[4],
        sse: 0.0,
    };
    model.sse = sse(values, &model);
    if !(model.b > 0.0) {
        return Err(Error::SingularDesign);
    }
    // normalization can move the SSE by rounding only; never report worse
    // than the grid start
    if model.sse > start.sse {
        return Ok(start);
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, Normal};

    fn linear_only_sse(values: &[f64]) -> f64 {
        let n = values.len();
        let design = Matrix::from_fn(n, 2, |r, c| if c == 0 { (r + 1) as f64 } else { 1.0 });
        let w = lstsq(&design, values).unwrap();
        values
            .iter()
            .enumerate()
            .map(|(i, y)| {
                let e = w[0] * (i + 1) as f64 + w[1] - y;
                e * e
            })
            .sum()
    }

    #[test]
    fn ar1_recovery() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let noise = Normal::new(0.0, 1.0).unwrap();
        let mut y = vec![0.0; 10_000];
        for t in 1..y.len() {
            y[t] = 0.8 * y[t - 1] + noise.sample(&mut rng);
        }
        let m = fit_linear_ar(&y, 3).unwrap();
        assert!((m.coefficients[0] - 0.8).abs() < 0.05);
        assert!(m.coefficients[1].abs() < 0.05 && m.coefficients[2].abs() < 0.05);
        assert!(m.mape <= m.rmse);
    }

    #[test]
    fn constant_series_is_singular() {
        assert_eq!(fit_linear_ar(&[7.0; 40], 3), Err(Error::SingularDesign));
    }

    #[test]
    fn ar_needs_more_than_window_plus_one() {
        assert_eq!(
            fit_linear_ar(&[1.0, 2.0, 3.0, 4.0], 3),
            Err(Error::TooShort { needed: 5, got: 4 })
        );
    }

    #[test]
    fn ar_residuals_orthogonal_to_regressors() {
        let y: Vec<f64> = (0..120)
            .map(|t| 4000.0 + 900.0 * ((t as f64) * 0.97).cos() + ((t * 7919) % 613) as f64)
            .collect();
        let m = fit_linear_ar(&y, 13).unwrap();
        let n = m.window;
        let resid: Vec<f64> = y[n..].iter().zip(&m.fitted).map(|(a, f)| a - f).collect();
        let scale = y.iter().fold(0.0f64, |s, v| s.max(v.abs()));
        for c in 0..=n {
            let ip: f64 = resid
                .iter()
                .enumerate()
                .map(|(r, e)| e * if c == 0 { 1.0 } else { y[r + n - c] })
                .sum();
            assert!(ip.abs() < 1e-6 * resid.len() as f64 * scale * scale, "col {c}: {ip}");
        }
        assert_eq!(m.predict_next(&y[..n]).unwrap(), m.fitted[0]);
    }

    #[test]
    fn noiseless_cosine_recovery() {
        let y: Vec<f64> = (1..=108)
            .map(|t| {
                let t = t as f64;
                100.0 * (0.9 * t + 1.0).cos() - 5.0 * t + 2000.0
            })
            .collect();
        let m = fit_cosine_linear(&y).unwrap();
        let rel = |got: f64, want: f64| ((got - want) / want).abs();
        assert!(rel(m.a, 100.0) < 1e-6, "{m:?}");
        assert!(rel(m.b, 0.9) < 1e-6);
        assert!(rel(m.c, 1.0) < 1e-6);
        assert!(rel(m.d, -5.0) < 1e-6);
        assert!(rel(m.c0, 2000.0) < 1e-6);
    }

    #[test]
    fn pure_line_has_no_cosine() {
        let y: Vec<f64> = (1..=60).map(|t| 3.0 * t as f64 + 7.0).collect();
        let m = fit_cosine_linear(&y).unwrap();
        assert!(m.a < 1e-6, "{m:?}");
        assert!((m.d - 3.0).abs() < 1e-6 && (m.c0 - 7.0).abs() < 1e-6);
    }

    #[test]
    fn period_examples() {
        let mut m = CosineLinearModel { a: 1.0, b: 0.968, c: 0.0, d: 0.0, c0: 0.0, sse: 0.0 };
        assert!((dominant_period(&m) - 6.491).abs() < 1e-3);
        m.b = 2.0 * PI;
        assert!((dominant_period(&m) - 1.0).abs() < 1e-15);
        m.b = PI;
        assert!((dominant_period(&m) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn grid_is_log_spaced_over_two_to_sixty_days() {
        let g = frequency_grid();
        assert_eq!(g.len(), 200);
        assert!((g[0] - 2.0 * PI / 60.0).abs() < 1e-15);
        assert_eq!(g[199], PI);
        let r0 = g[1] / g[0];
        assert!(g.windows(2).all(|w| (w[1] / w[0] - r0).abs() < 1e-12));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn cosine_fit_nests_the_line(seed in 0u64..10_000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let noise = Normal::new(0.0, 300.0).unwrap();
            let y: Vec<f64> = (1..=108)
                .map(|t| 4000.0 + 800.0 * (0.97 * t as f64).cos() - 40.0 * t as f64 + noise.sample(&mut rng))
                .collect();
            let m = fit_cosine_linear(&y).unwrap();
            prop_assert!(m.sse <= linear_only_sse(&y) * (1.0 + 1e-12));
            prop_assert!(m.b > 0.0);
        }

        #[test]
        fn period_invariant_under_amplitude_scaling(scale in 0.01f64..100.0) {
            let y: Vec<f64> = (1..=90)
                .map(|t| { let t = t as f64; 300.0 * (1.3 * t - 0.4).cos() + 2.0 * t + 50.0 })
                .collect();
            let scaled: Vec<f64> = y.iter().map(|v| v * scale).collect();
            let p0 = dominant_period(&fit_cosine_linear(&y).unwrap());
            let p1 = dominant_period(&fit_cosine_linear(&scaled).unwrap());
            prop_assert!((p0 - p1).abs() < 1e-9 * p0);
        }
    }
}
