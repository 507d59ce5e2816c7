//! Derivative-free and least-squares optimizers shared by the fitting code.

use alloc::vec;
use alloc::vec::Vec;


use crate::linalg::{self, Matrix};

#[derive(Debug, Clone)]
pub struct NelderMeadOutcome {
    pub point: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Maximizes `f` with the Nelder-Mead simplex method.
///
/// `steps` gives the initial simplex edge along each coordinate. The search
/// stops once the spread of objective values across the simplex is at most
/// `tol · max(1, |best|)`. Non-finite objective values (infeasible points) are
/// treated as worse than every finite value.
pub fn nelder_mead_max<F>(
    mut f: F,
    start: &[f64],
    steps: &[f64],
    tol: f64,
    max_iterations: usize,
) -> NelderMeadOutcome
where
    F: FnMut(&[f64]) -> f64,
{
    let n = start.len();
    let mut eval = |p: &[f64]| {
        let v = f(p);
        if v.is_finite() {
            v
        } else {
            f64::NEG_INFINITY
        }
    };
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(start.to_vec());
    for i in 0..n {
        let mut p = start.to_vec();
        p[i] += steps[i];
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| eval(p)).collect();

    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iterations {
        // descending by value: best first
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        let best = values[0];
        let worst = values[n];
        if best.is_finite() && worst.is_finite() && best - worst <= tol * best.abs().max(1.0) {
            converged = true;
            break;
        }
        iterations += 1;

        let mut centroid = vec![0.0; n];
        for p in &simplex[..n] {
            for (c, v) in centroid.iter_mut().zip(p) {
                *c += v / n as f64;
            }
        }
        let along = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[n])
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let reflected = along(1.0);
        let fr = eval(&reflected);
        if fr > values[0] {
            let expanded = along(2.0);
            let fe = eval(&expanded);
            if fe > fr {
                simplex[n] = expanded;
                values[n] = fe;
            } else {
                simplex[n] = reflected;
                values[n] = fr;
            }
            continue;
        }
        if fr > values[n - 1] {
            simplex[n] = reflected;
            values[n] = fr;
            continue;
        }
        if fr > values[n] {
            let outside = along(0.5);
            let fc = eval(&outside);
            if fc >= fr {
                simplex[n] = outside;
                values[n] = fc;
                continue;
            }
        } else {
            let inside = along(-0.5);
            let fc = eval(&inside);
            if fc > values[n] {
                simplex[n] = inside;
                values[n] = fc;
                continue;
            }
        }
        // shrink toward the best vertex
        for i in 1..=n {
            let p: Vec<f64> = simplex[0]
                .iter()
                .zip(&simplex[i])
                .map(|(b, x)| b + 0.5 * (x - b))
                .collect();
            values[i] = eval(&p);
            simplex[i] = p;
        }
    }

    let best = (0..=n)
        .max_by(|&a, &b| values[a].total_cmp(&values[b]).then(b.cmp(&a)))
        .unwrap();
    NelderMeadOutcome {
        point: simplex[best].clone(),
        value: values[best],
        iterations,
        converged,
    }
}

#[derive(Debug, Clone)]
pub struct LeastSquaresOutcome {
    pub params: Vec<f64>,
    pub sse: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Damped Gauss-Newton (Levenberg-Marquardt) minimization of `Σ r²`.
///
/// `model` returns the residual vector and its Jacobian (`∂r/∂p`, one row per
/// residual) at a parameter point, or `None` if the point is infeasible.
/// Only steps that reduce the SSE are accepted, so the returned SSE never
/// exceeds the SSE at `start`. Converges when an accepted step changes the SSE
/// by less than `rel_tol` relative, when the SSE underflows to zero, or when no
/// damping level yields a decrease.
pub fn levenberg_marquardt<F>(
    mut model: F,
    start: &[f64],
    rel_tol: f64,
    max_iterations: usize,
) -> Option<LeastSquaresOutcome>
where
    F: FnMut(&[f64]) -> Option<(Vec<f64>, Matrix)>,
{
    let n = start.len();
    let mut params = start.to_vec();
    let (mut resid, mut jac) = model(&params)?;
    let mut sse: f64 = resid.iter().map(|r| r * r).sum();
    let mut lambda = 1e-3;
    let mut iterations = 0;

    while iterations < max_iterations {
        if sse == 0.0 {
            return Some(LeastSquaresOutcome {
                params,
                sse,
                iterations,
                converged: true,
            });
        }
        iterations += 1;
        let jtj = jac.gram();
        let jtr: Vec<f64> = (0..n)
            .map(|c| (0..jac.rows()).map(|r| jac[(r, c)] * resid[r]).sum())
            .collect();
        let diag_max = (0..n).fold(0.0f64, |m, i| m.max(jtj[(i, i)]));

        let mut accepted = false;
        for _ in 0..40 {
            let mut a = jtj.clone();
            for i in 0..n {
                a[(i, i)] += lambda * jtj[(i, i)].max(1e-12 * diag_max).max(f64::MIN_POSITIVE);
            }
            let step = match linalg::inverse(&a) {
                Ok(inv) => inv.matvec(&jtr),
                Err(_) => {
                    lambda *= 10.0;
                    continue;
                }
            };
            let trial: Vec<f64> = params.iter().zip(&step).map(|(p, s)| p - s).collect();
            if let Some((r, j)) = model(&trial) {
                let trial_sse: f64 = r.iter().map(|v| v * v).sum();
                if trial_sse.is_finite() && trial_sse < sse {
                    let change = (sse - trial_sse) / sse;
                    params = trial;
                    resid = r;
                    jac = j;
                    sse = trial_sse;
                    lambda = (lambda / 10.0).max(1e-15);
                    accepted = true;
                    if change < rel_tol {
                        return Some(LeastSquaresOutcome {
                            params,
                            sse,
                            iterations,
                            converged: true,
                        });
                    }
                    break;
                }
            }
            lambda *= 10.0;
            if lambda > 1e20 {
                break;
            }
        }
        if !accepted {
            // no damping level improves on the current point: stationary
            return Some(LeastSquaresOutcome {
                params,
                sse,
                iterations,
                converged: true,
            });
        }
    }
    Some(LeastSquaresOutcome {
        params,
        sse,
        iterations,
        converged: false,
    })
}
