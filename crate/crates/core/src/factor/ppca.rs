use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{broadcast_row, FactorModel, Method};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};

pub const PPCA_TOLERANCE: f64 = 1e-10;
pub const PPCA_MAX_ITERATIONS: usize = 20_000;

#[derive(Debug, Clone)]
pub struct PpcaFit {
    pub model: FactorModel,
    /// `cols × n_components` maximum-likelihood loading matrix.
    pub loadings: Matrix,
    pub mean: Vec<f64>,
    pub noise_variance: f64,
    /// Log-likelihood after initialization and after every EM step.
    pub log_likelihood: Vec<f64>,
}

/// Evaluated in the eigenbasis of `C = WWᵀ + σ²I`, which stays accurate when
/// `σ²` is many orders of magnitude below the loading scale.
fn log_likelihood(s: &Matrix, w: &Matrix, sigma2: f64, n: usize) -> Option<f64> {
    let d = s.rows();
    let svd = linalg::svd(w);
    let u = &svd.u;
    let mut log_det = 0.0;
    let mut tr = 0.0;
    let mut proj = Matrix::identity(d);
    for (i, sv) in svd.s.iter().enumerate() {
        let ui = u.col(i);
        let lambda = sv * sv + sigma2;
        log_det += lambda.ln();
        tr += linalg::dot(&ui, &s.matvec(&ui)) / lambda;
        proj = proj.sub(&Matrix::from_fn(d, d, |r, c| ui[r] * ui[c]));
    }
    let rest = proj.matmul(s).matmul(&proj).trace().max(0.0);
    log_det += (d - svd.s.len()) as f64 * sigma2.ln();
    tr += rest / sigma2;
    let ll = -0.5 * n as f64 * (d as f64 * (2.0 * PI).ln() + log_det + tr);
    ll.is_finite().then_some(ll)
}

/// Probabilistic PCA of the rows of `data` by expectation-maximization.
///
/// Uses the `1/N` sample covariance. The noise variance is held above
/// `1e-8 · tr(S)/d`, which keeps the likelihood bounded when the requested
/// rank reaches the data rank; the constrained M-step still never lowers the
/// likelihood, so a step that lowers it is roundoff and ends the iteration.
/// Components form an orthonormal basis of the fitted principal
/// subspace, and their weights are the projections of the centred rows.
pub fn fit_ppca(data: &Matrix, n_components: usize, seed: u64) -> Result<PpcaFit> {
    let (n, d) = (data.rows(), data.cols());
    if n_components == 0 || n_components > d {
        return Err(Error::BadRank {
            rank: n_components,
            max: d,
        });
    }
    if n < 2 {
        return Err(Error::TooShort { needed: 2, got: n });
    }
    let q = n_components;
    let mean: Vec<f64> = (0..d).map(|c| data.col(c).iter().sum::<f64>() / n as f64).collect();
    let centred = data.sub(&broadcast_row(&mean, n));
    let s = centred.gram().scale(1.0 / n as f64);
    let tr = s.trace();
    if !(tr > 0.0) {
        return Err(Error::ZeroVariance);
    }
    let floor = 1e-8 * tr / d as f64;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let init_scale = (tr / d as f64).sqrt();
    let mut w = Matrix::from_fn(d, q, |_, _| {
        let z: f64 = StandardNormal.sample(&mut rng);
        z * init_scale
    });
    let mut sigma2 = tr / d as f64;
    let mut trace = Vec::new();
    let mut ll = log_likelihood(&s, &w, sigma2, n).ok_or(Error::DegenerateData)?;
    trace.push(ll);

    let mut converged = false;
    for _ in 0..PPCA_MAX_ITERATIONS {
        let m = w.transpose().matmul(&w).add(&Matrix::identity(q).scale(sigma2));
        let m_inv = linalg::inverse(&m).map_err(|_| Error::DegenerateData)?;
        let sw = s.matmul(&w);
        let inner = Matrix::identity(q)
            .scale(sigma2)
            .add(&m_inv.matmul(&w.transpose()).matmul(&sw));
        let w_new = sw.matmul(&linalg::inverse(&inner).map_err(|_| Error::DegenerateData)?);
        let explained = sw.matmul(&m_inv).matmul(&w_new.transpose()).trace();
        let sigma2_new = ((tr - explained) / d as f64).max(floor);
        let ll_new = log_likelihood(&s, &w_new, sigma2_new, n).ok_or(Error::DegenerateData)?;
        if ll_new < ll {
            // only roundoff can lower the likelihood: the optimum is reached
            converged = true;
            break;
        }
        w = w_new;
        sigma2 = sigma2_new;
        trace.push(ll_new);
        let change = (ll_new - ll).abs();
        ll = ll_new;
        if change <= PPCA_TOLERANCE * ll.abs().max(1.0) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations: PPCA_MAX_ITERATIONS,
        });
    }

    let basis = linalg::svd(&w).u;
    let components: Vec<Vec<f64>> = (0..q).map(|i| basis.col(i)).collect();
    let coefficients = centred.matmul(&basis);
    let model = FactorModel::assemble(
        Method::Ppca,
        components,
        coefficients,
        Some(broadcast_row(&mean, n)),
        data,
    );
    Ok(PpcaFit {
        model,
        loadings: w,
        mean,
        noise_variance: sigma2,
        log_likelihood: trace,
    })
}
