//! DFT spectrum, half-spectrum log power, moving-average smoothing and the
//! band-limit frequency read off the smoothed log-power curve.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;

use crate::error::{Error, Result};

/// Unnormalized DFT coefficients `Y_k = Σ y_n e^{−i2πkn/N}`, `k = 0..N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub components: Vec<Complex64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

fn twiddle(num: usize, den: usize) -> Complex64 {
    // reduce first so large k·n products stay exact
    let angle = -2.0 * PI * (num % den) as f64 / den as f64;
    Complex64::new(angle.cos(), angle.sin())
}

fn smallest_factor(n: usize) -> usize {
    if n % 2 == 0 {
        return 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n % f == 0 {
            return f;
        }
        f += 2;
    }
    n
}

/// Mixed-radix decimation-in-time FFT; prime lengths fall back to the direct
/// sum.
fn fft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    if n <= 1 {
        return x.to_vec();
    }
    let p = smallest_factor(n);
    if p == n {
        return (0..n)
            .map(|k| {
                x.iter()
                    .enumerate()
                    .map(|(j, v)| v * twiddle(j * k, n))
                    .sum()
            })
            .collect();
    }
    let m = n / p;
    let subs: Vec<Vec<Complex64>> = (0..p)
        .map(|r| {
            let part: Vec<Complex64> = (0..m).map(|j| x[j * p + r]).collect();
            fft(&part)
        })
        .collect();
    (0..n)
        .map(|k| {
            subs.iter()
                .enumerate()
                .map(|(r, sub)| sub[k % m] * twiddle(r * k, n))
                .sum()
        })
        .collect()
}

pub fn dft(values: &[f64]) -> Result<Spectrum> {
    if values.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            got: values.len(),
        });
    }
    let x: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    Ok(Spectrum {
        components: fft(&x),
    })
}

/// Value reported for components of zero magnitude.
pub const LOG_POWER_FLOOR: f64 = -300.0;

/// `log10 |Y_k|²` for `k = 1..=⌈N/2⌉`.
pub fn log_power_halfspectrum(sp: &Spectrum) -> Vec<f64> {
    let n = sp.len();
    let half = n.div_ceil(2);
    (1..=half)
        .map(|k| {
            let p = sp.components[k].norm_sqr();
            if p > 0.0 {
                p.log10().max(LOG_POWER_FLOOR)
            } else {
                LOG_POWER_FLOOR
            }
        })
        .collect()
}

pub const DEFAULT_SMOOTHING_WINDOW: usize = 20;

/// Centred moving average with the window clipped at the ends.
///
/// Sample `i` averages indices `i − ⌊(w−1)/2⌋ ..= i + ⌊w/2⌋` that exist.
pub fn moving_average(values: &[f64], window: usize) -> Result<Vec<f64>> {
    let n = values.len();
    if window == 0 || window > n {
        return Err(Error::BadWindow { window, len: n });
    }
    let left = (window - 1) / 2;
    let right = window / 2;
    Ok((0..n)
        .map(|i| {
            let lo = i.saturating_sub(left);
            let hi = (i + right).min(n - 1);
            values[lo..=hi].iter().sum::<f64>() / (hi - lo + 1) as f64
        })
        .collect())
}

/// Linear map of a half-spectrum abscissa `x ∈ [x_min, x_max]` onto
/// frequencies `[1/N, 1/2]` (cycles per day).
pub fn rescale_frequency(x: f64, x_min: f64, x_max: f64, n: usize) -> f64 {
    let f_min = 1.0 / n as f64;
    let f_max = 0.5;
    (x - x_min) / (x_max - x_min) * (f_max - f_min) + f_min
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandLimit {
    /// Fractional abscissa (1-based) where the curve drops below threshold.
    pub x_l: f64,
    /// Frequency in cycles per day.
    pub f_l: f64,
    /// Period `1 / f_l` in days.
    pub t_l: f64,
}

pub const DEFAULT_LOG_ENERGY_THRESHOLD: f64 = 9.5;

/// Band-limit frequency of a smoothed half-spectrum log-power curve.
///
/// `curve[i]` sits at abscissa `x = i + 1`. The crossing is the first sample
/// below `threshold`, located between it and its predecessor by linear
/// interpolation; a curve that starts below the threshold maps to `x_min`.
/// `n_series` is the length of the original series.
pub fn band_limit_frequency(curve: &[f64], threshold: f64, n_series: usize) -> Result<BandLimit> {
    if curve.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            got: curve.len(),
        });
    }
    let below = curve
        .iter()
        .position(|&v| v < threshold)
        .ok_or(Error::NoCrossing)?;
    let x_l = if below == 0 {
        1.0
    } else {
        let (hi, lo) = (curve[below - 1], curve[below]);
        below as f64 + (hi - threshold) / (hi - lo)
    };
    let f_l = rescale_frequency(x_l, 1.0, curve.len() as f64, n_series);
    Ok(BandLimit {
        x_l,
        f_l,
        t_l: 1.0 / f_l,
    })
}

/// Direct `O(N²)` evaluation of the DFT definition; reference for tests.
pub fn dft_direct(values: &[f64]) -> Vec<Complex64> {
    let n = values.len();
    (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &y) in values.iter().enumerate() {
                let angle = -2.0 * PI * k as f64 * j as f64 / n as f64;
                acc += Complex64::new(y * angle.cos(), y * angle.sin());
            }
            acc
        })
        .collect()
}
