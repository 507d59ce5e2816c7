//! Correlation fractal dimension from the log-log pair-count curve, read off
//! as the central slope of a Tukey-weighted parametric sigmoid fit.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::optim::levenberg_marquardt;
use crate::series::TimeSeries;

pub const DEFAULT_RADII: usize = 64;
pub const DEFAULT_TUKEY_Q: f64 = 0.8;
pub const MIN_SERIES_LEN: usize = 10;
pub const MIN_CURVE_POINTS: usize = 8;
pub const SIGMOID_TOLERANCE: f64 = 1e-10;
pub const SIGMOID_MAX_ITERATIONS: usize = 300;
/// Relative slack when comparing a distance with a radius, so that equal
/// distances differing only by rounding are counted together.
const TIE_TOLERANCE: f64 = 1e-9;
/// Asymptote slack beyond the observed y-range, in units of that range.
const ASYMPTOTE_MARGIN: f64 = 1.0;

/// Log-log pair-count curve.
#[derive(Debug, Clone, PartialEq)]
pub struct PcCurve {
    /// Strictly increasing radii with a non-zero pair count.
    pub r_values: Vec<f64>,
    /// `(ln(1/r), ln PC(r))` for each radius.
    pub points: Vec<(f64, f64)>,
}

/// Embeds a series as `(time, value)` points, each axis min-max scaled to
/// `[0, 1]`. A constant axis maps to 0.
pub fn embed(values: &[f64]) -> Vec<(f64, f64)> {
    let n = values.len();
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = hi - lo;
    let t_span = n.saturating_sub(1) as f64;
    values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let t = if t_span > 0.0 { i as f64 / t_span } else { 0.0 };
            let y = if span > 0.0 { (v - lo) / span } else { 0.0 };
            (t, y)
        })
        .collect()
}

/// Pair-count curve of the normalized `(time, value)` embedding of `s`.
pub fn pair_count_curve(s: &TimeSeries, n_radii: usize) -> Result<PcCurve> {
    if s.len() < MIN_SERIES_LEN {
        return Err(Error::TooShort {
            needed: MIN_SERIES_LEN,
            got: s.len(),
        });
    }
    pair_count_points(&embed(&s.to_f64()), n_radii)
}

/// Pair-count curve of an arbitrary planar point set.
///
/// `PC(r)` counts unordered pairs at distance `≤ r`, evaluated at `n_radii`
/// log-spaced radii from the smallest non-zero distance to the largest.
pub fn pair_count_points(points: &[(f64, f64)], n_radii: usize) -> Result<PcCurve> {
    if points.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            got: points.len(),
        });
    }
    if n_radii < 2 {
        return Err(Error::BadParam("need at least two radii"));
    }
    let n = points.len();
    let mut dist = Vec::with_capacity(n * (n - 1) / 2);
    for (i, &(xi, yi)) in points.iter().enumerate() {
        for &(xj, yj) in &points[i + 1..] {
            dist.push((xi - xj).hypot(yi - yj));
        }
    }
    dist.sort_unstable_by(f64::total_cmp);
    let d_max = *dist.last().unwrap_or(&0.0);
    let Some(&d_min) = dist.iter().find(|&&d| d > 0.0) else {
        return Err(Error::DegenerateData);
    };
    let ratio = d_max / d_min;
    let mut r_values = Vec::with_capacity(n_radii);
    for i in 0..n_radii {
        let r = if i + 1 == n_radii {
            d_max
        } else {
            d_min * ratio.powf(i as f64 / (n_radii - 1) as f64)
        };
        if r_values.last().map_or(true, |&prev| r > prev) {
            r_values.push(r);
        }
    }
    let points = r_values
        .iter()
        .map(|&r| {
            let pc = dist.partition_point(|&d| d <= r * (1.0 + TIE_TOLERANCE));
            ((1.0 / r).ln(), (pc as f64).ln())
        })
        .collect();
    Ok(PcCurve { r_values, points })
}

/// Tukey (tapered cosine) window of length `n`: rectangular at `q = 0`, Hann
/// at `q = 1`. Symmetric by construction.
pub fn tukey_window(n: usize, q: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::BadParam("window length must be at least 1"));
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::BadParam("tukey q must lie in [0, 1]"));
    }
    let mut w = vec![1.0; n];
    if q == 0.0 || n == 1 {
        return Ok(w);
    }
    let span = q * (n - 1) as f64;
    let width = (span / 2.0).floor() as usize;
    for j in 0..=width.min(n - 1) {
        let v = 0.5 * (1.0 + (PI * (-1.0 + 2.0 * j as f64 / span)).cos());
        w[j] = v;
        w[n - 1 - j] = v;
    }
    Ok(w)
}

/// Weights from a Tukey window laid over the y-range: the range is split into
/// as many ranks as there are points, and each point takes the window value
/// of the rank its `y` falls in.
pub fn y_range_weights(ys: &[f64], q: f64) -> Result<Vec<f64>> {
    let window = tukey_window(ys.len().max(1), q)?;
    let lo = ys.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let top = (window.len() - 1) as f64;
    Ok(ys
        .iter()
        .map(|&y| {
            let pos = if hi > lo { (y - lo) / (hi - lo) } else { 0.5 };
            window[(pos * top).round() as usize]
        })
        .collect())
}

/// `y = y0 + cy / (1 + exp(−cx (x − x0)))`, normalized to `cy > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmoidFit {
    pub x0: f64,
    pub y0: f64,
    pub cx: f64,
    pub cy: f64,
    /// Weighted sum of squared errors at the optimum.
    pub sse: f64,
    pub q: f64,
}

fn logistic(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// Slope of the sigmoid at its inflection point.
pub fn central_slope(cx: f64, cy: f64) -> f64 {
    cx * cy / 4.0
}

impl SigmoidFit {
    pub fn eval(&self, x: f64) -> f64 {
        self.y0 + self.cy * logistic(self.cx * (x - self.x0))
    }

    pub fn slope(&self) -> f64 {
        central_slope(self.cx, self.cy)
    }

    /// The same curve expressed with a positive vertical width.
    fn normalized(mut self) -> Self {
        if self.cy < 0.0 {
            self.y0 += self.cy;
            self.cy = -self.cy;
            self.cx = -self.cx;
        }
        self
    }
}

fn weighted_sse(xs: &[f64], ys: &[f64], w: &[f64], p: [f64; 4]) -> f64 {
    xs.iter()
        .zip(ys)
        .zip(w)
        .map(|((&x, &y), &wj)| {
            let e = p[1] + p[3] * logistic(p[2] * (x - p[0])) - y;
            wj * e * e
        })
        .sum()
}

/// Feasible region: the inflection lies on the observed x-range and both
/// asymptotes stay within one y-span of the observed y-range. Curves with a
/// single bend otherwise let the fit slide off towards an exponential limit.
struct Bounds {
    x: (f64, f64),
    y: (f64, f64),
}

impl Bounds {
    fn of(xs: &[f64], ys: &[f64]) -> Self {
        let range = |v: &[f64]| {
            v.iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &a| (lo.min(a), hi.max(a)))
        };
        let x = range(xs);
        let (lo, hi) = range(ys);
        let margin = (hi - lo) * ASYMPTOTE_MARGIN;
        Bounds {
            x,
            y: (lo - margin, hi + margin),
        }
    }

    fn contains(&self, p: &[f64]) -> bool {
        let (x0, y0, cy) = (p[0], p[1], p[3]);
        let (bottom, top) = if cy < 0.0 { (y0 + cy, y0) } else { (y0, y0 + cy) };
        x0 >= self.x.0 && x0 <= self.x.1 && bottom >= self.y.0 && top <= self.y.1
    }
}

/// Grid start: `x0` over curve quantiles and log-spaced `cx`, with `y0` and
/// `cy` solved by weighted linear least squares for each pair.
fn grid_start(xs: &[f64], ys: &[f64], w: &[f64], bounds: &Bounds) -> Option<([f64; 4], f64)> {
    let mut sorted = xs.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let span = sorted[sorted.len() - 1] - sorted[0];
    if !(span > 0.0) {
        return None;
    }
    let mut best: Option<([f64; 4], f64)> = None;
    for qi in 1..20 {
        let x0 = sorted[(qi * (sorted.len() - 1)) / 20];
        for ci in 0..40 {
            let cx = 0.5 / span * 1000f64.powf(ci as f64 / 39.0);
            let (mut sw, mut ss, mut sss, mut sy, mut ssy) = (0.0, 0.0, 0.0, 0.0, 0.0);
            for ((&x, &y), &wj) in xs.iter().zip(ys).zip(w) {
                let s = logistic(cx * (x - x0));
                sw += wj;
                ss += wj * s;
                sss += wj * s * s;
                sy += wj * y;
                ssy += wj * s * y;
            }
            let det = sw * sss - ss * ss;
            if !(det.abs() > 1e-12 * sw * sss) {
                continue;
            }
            let cy = (sw * ssy - ss * sy) / det;
            let y0 = (sy - ss * cy) / sw;
            let p = [x0, y0, cx, cy];
            if !bounds.contains(&p) {
                continue;
            }
            let sse = weighted_sse(xs, ys, w, p);
            if best.map_or(true, |(_, b)| sse < b) {
                best = Some((p, sse));
            }
        }
    }
    best
}

/// Fits the parametric sigmoid to curve points, weighting each squared error
/// by a Tukey window over the y-range (see [`y_range_weights`]).
///
/// A grid start is polished by damped Gauss-Newton on all four parameters,
/// keeping the inflection on the curve and the asymptotes within one y-span
/// of the data. The result never has a larger weighted SSE than the grid start.
pub fn fit_sigmoid(points: &[(f64, f64)], q: f64) -> Result<SigmoidFit> {
    if points.len() < MIN_CURVE_POINTS {
        return Err(Error::TooFewPoints {
            needed: MIN_CURVE_POINTS,
            got: points.len(),
        });
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
    let w = y_range_weights(&ys, q)?;
    let bounds = Bounds::of(&xs, &ys);
    let (start, start_sse) = grid_start(&xs, &ys, &w, &bounds).ok_or(Error::DegenerateData)?;

    let sqrt_w: Vec<f64> = w.iter().map(|v| v.sqrt()).collect();
    let model = |p: &[f64]| {
        if !bounds.contains(p) {
            return None;
        }
        let (x0, y0, cx, cy) = (p[0], p[1], p[2], p[3]);
        let mut r = Vec::with_capacity(xs.len());
        let mut jac = Matrix::zeros(xs.len(), 4);
        for (j, ((&x, &y), &sw)) in xs.iter().zip(&ys).zip(&sqrt_w).enumerate() {
            let s = logistic(cx * (x - x0));
            let ds = s * (1.0 - s);
            r.push(sw * (y0 + cy * s - y));
            jac[(j, 0)] = -sw * cy * cx * ds;
            jac[(j, 1)] = sw;
            jac[(j, 2)] = sw * cy * (x - x0) * ds;
            jac[(j, 3)] = sw * s;
        }
        Some((r, jac))
    };
    let out = levenberg_marquardt(model, &start, SIGMOID_TOLERANCE, SIGMOID_MAX_ITERATIONS)
        .ok_or(Error::DegenerateData)?;
    if !out.converged {
        return Err(Error::NoConvergence {
            iterations: out.iterations,
        });
    }
    let (p, sse) = if out.sse <= start_sse {
        ([out.params[0], out.params[1], out.params[2], out.params[3]], out.sse)
    } else {
        (start, start_sse)
    };
    Ok(SigmoidFit {
        x0: p[0],
        y0: p[1],
        cx: p[2],
        cy: p[3],
        sse,
        q,
    }
    .normalized())
}

/// The three fractal-dimension readings of one curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdEstimate {
    /// Central slope of the unweighted fit.
    pub fda: f64,
    /// Central slope of the Hann-weighted (`q = 1`) fit.
    pub fdc: f64,
    /// Central slope of the fit weighted with the requested `q`.
    pub fde: f64,
    pub q: f64,
    /// The `q`-weighted fit behind `fde`.
    pub fit: SigmoidFit,
}

/// Fractal dimension as the magnitude of the central sigmoid slope. On the
/// `(ln 1/r, ln PC)` axes the curve falls, so the raw slope is negative.
pub fn fd_estimates(points: &[(f64, f64)], q: f64) -> Result<FdEstimate> {
    let unweighted = fit_sigmoid(points, 0.0)?;
    let central = fit_sigmoid(points, 1.0)?;
    let fit = fit_sigmoid(points, q)?;
    Ok(FdEstimate {
        fda: unweighted.slope().abs(),
        fdc: central.slope().abs(),
        fde: fit.slope().abs(),
        q,
        fit,
    })
}
