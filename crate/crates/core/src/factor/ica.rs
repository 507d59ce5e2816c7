use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{broadcast_col, FactorModel, Method};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};

pub const ICA_TOLERANCE: f64 = 1e-6;
pub const ICA_MAX_ITERATIONS: usize = 1000;

/// Contrast derivative `g` used by the fixed-point update.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Nonlinearity {
    /// `u³`
    Pow3,
    /// `tanh u`
    #[default]
    Tanh,
    /// `u·exp(−u²/2)`
    Gauss,
    /// `u²`
    Skew,
}

impl Nonlinearity {
    /// `(g(u), g'(u))`.
    fn eval(self, u: f64) -> (f64, f64) {
        match self {
            Nonlinearity::Pow3 => (u * u * u, 3.0 * u * u),
            Nonlinearity::Tanh => {
                let t = u.tanh();
                (t, 1.0 - t * t)
            }
            Nonlinearity::Gauss => {
                let e = (-0.5 * u * u).exp();
                (u * e, (1.0 - u * u) * e)
            }
            Nonlinearity::Skew => (u * u, 2.0 * u),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IcaMode {
    /// All unmixing vectors updated together, then jointly decorrelated.
    #[default]
    Symmetric,
    /// One vector at a time, orthogonalized against those already found.
    Deflation,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IcaConfig {
    pub n_components: usize,
    pub nonlinearity: Nonlinearity,
    pub mode: IcaMode,
    pub seed: u64,
}

impl IcaConfig {
    /// Default nonlinearity and mode with seed 42.
    pub fn new(n_components: usize) -> Self {
        Self {
            n_components,
            nonlinearity: Nonlinearity::default(),
            mode: IcaMode::default(),
            seed: 42,
        }
    }
}

#[derive(Debug, Clone)]
pub struct IcaFit {
    /// Sources as components (rows of `S`), weights from the mixing matrix.
    pub model: FactorModel,
    /// `n_components × n_components` rotation found in the whitened space.
    pub rotation: Matrix,
    /// Fixed-point iterations: one entry for symmetric mode, one per
    /// component for deflation.
    pub iterations: Vec<usize>,
}

/// Expected `[E{z·g(wᵀz)} − E{g'(wᵀz)}·w]` for each row `w` of `w_rows`.
fn fixed_point_step(z: &Matrix, w_rows: &Matrix, g: Nonlinearity) -> Matrix {
    let (n, t) = (z.rows(), z.cols());
    let proj = w_rows.matmul(z);
    let mut out = Matrix::zeros(w_rows.rows(), n);
    for i in 0..w_rows.rows() {
        let mut acc = vec![0.0; n];
        let mut dsum = 0.0;
        for s in 0..t {
            let (gv, dv) = g.eval(proj[(i, s)]);
            dsum += dv;
            for (k, a) in acc.iter_mut().enumerate() {
                *a += z[(k, s)] * gv;
            }
        }
        for k in 0..n {
            out[(i, k)] = acc[k] / t as f64 - dsum / t as f64 * w_rows[(i, k)];
        }
    }
    out
}

fn symmetric_decorrelate(w: &Matrix) -> Result<Matrix> {
    Ok(linalg::inv_sqrt_spd(&w.matmul(&w.transpose()))?.matmul(w))
}

fn normalize(v: &mut [f64]) {
    let nrm = linalg::norm(v);
    if nrm > 0.0 {
        v.iter_mut().for_each(|x| *x /= nrm);
    }
}

/// FastICA with PCA whitening.
///
/// Rows of `data` are the observed mixtures and columns are samples. Each
/// row is centred, the centred data is whitened onto its top
/// `n_components` principal directions, and the fixed-point iteration finds
/// a rotation making the projections maximally non-Gaussian. The recovered
/// sources have unit variance and are mutually uncorrelated; the model's
/// weights form the mixing matrix and its baseline the row means.
pub fn fast_ica(data: &Matrix, cfg: &IcaConfig) -> Result<IcaFit> {
    let (rows, t) = (data.rows(), data.cols());
    let n = cfg.n_components;
    if n == 0 || n > rows {
        return Err(Error::BadRank { rank: n, max: rows });
    }
    if t < 2 {
        return Err(Error::TooShort { needed: 2, got: t });
    }
    let means: Vec<f64> = (0..rows).map(|r| data.row(r).iter().sum::<f64>() / t as f64).collect();
    let centred = data.sub(&broadcast_col(&means, t));
    let cov = centred.matmul(&centred.transpose()).scale(1.0 / t as f64);
    let eig = linalg::sym_eigen(&cov);
    let top = eig.values.first().copied().unwrap_or(0.0);
    let rank = eig.values.iter().filter(|&&l| l > 1e-10 * top && l > 0.0).count();
    if n > rank {
        return Err(Error::RankDeficient { rank, requested: n });
    }
    // whitening K = D^{-1/2} Eᵀ and its pseudo-inverse E D^{1/2}
    let k = Matrix::from_fn(n, rows, |i, j| eig.vectors[(j, i)] / eig.values[i].sqrt());
    let k_pinv = Matrix::from_fn(rows, n, |j, i| eig.vectors[(j, i)] * eig.values[i].sqrt());
    let z = k.matmul(&centred);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let init = Matrix::from_fn(n, n, |_, _| StandardNormal.sample(&mut rng));

    let (w, iterations) = match cfg.mode {
        IcaMode::Symmetric => {
            let mut w = symmetric_decorrelate(&init)?;
            let mut done = None;
            for it in 1..=ICA_MAX_ITERATIONS {
                let w_new = symmetric_decorrelate(&fixed_point_step(&z, &w, cfg.nonlinearity))?;
                let worst = (0..n)
                    .map(|i| 1.0 - linalg::dot(w_new.row(i), w.row(i)).abs())
                    .fold(0.0, f64::max);
                w = w_new;
                if worst < ICA_TOLERANCE {
                    done = Some(it);
                    break;
                }
            }
            let it = done.ok_or(Error::IcaNoConvergence { component: 0 })?;
            (w, vec![it])
        }
        IcaMode::Deflation => {
            let mut w = Matrix::zeros(n, n);
            let mut iterations = Vec::with_capacity(n);
            for p in 0..n {
                let mut v = init.row(p).to_vec();
                orthogonalize(&mut v, &w, p);
                normalize(&mut v);
                let mut done = None;
                for it in 1..=ICA_MAX_ITERATIONS {
                    let step = fixed_point_step(&z, &Matrix::from_row_major(1, n, v.clone()), cfg.nonlinearity);
                    let mut v_new = step.row(0).to_vec();
                    orthogonalize(&mut v_new, &w, p);
                    normalize(&mut v_new);
                    let change = 1.0 - linalg::dot(&v_new, &v).abs();
                    v = v_new;
                    if change < ICA_TOLERANCE {
                        done = Some(it);
                        break;
                    }
                }
                iterations.push(done.ok_or(Error::IcaNoConvergence { component: p })?);
                w.row_mut(p).copy_from_slice(&v);
            }
            (w, iterations)
        }
    };

    let sources = w.matmul(&z);
    let mixing = k_pinv.matmul(&w.transpose());
    let components: Vec<Vec<f64>> = (0..n).map(|i| sources.row(i).to_vec()).collect();
    let model = FactorModel::assemble(
        Method::Ica,
        components,
        mixing,
        Some(broadcast_col(&means, t)),
        data,
    );
    Ok(IcaFit {
        model,
        rotation: w,
        iterations,
    })
}

/// Gram-Schmidt of `v` against the first `count` rows of `w`.
fn orthogonalize(v: &mut [f64], w: &Matrix, count: usize) {
    for j in 0..count {
        let proj = linalg::dot(v, w.row(j));
        for (x, wj) in v.iter_mut().zip(w.row(j)) {
            *x -= proj * wj;
        }
    }
}
