use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{FactorModel, Method};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsvdConfig {
    pub dict_size: usize,
    pub sparsity: usize,
    pub max_iterations: usize,
    pub target_error: f64,
    pub seed: u64,
}

impl Default for KsvdConfig {
    fn default() -> Self {
        Self {
            dict_size: 11,
            sparsity: 7,
            max_iterations: 200,
            target_error: 1e-10,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone)]
pub struct KsvdFit {
    /// Atoms as components; weights are the transposed sparse codes.
    pub model: FactorModel,
    /// `dim × dict_size`, unit-norm columns.
    pub dictionary: Matrix,
    /// `dict_size × signals`, at most `sparsity` nonzeros per column.
    pub codes: Matrix,
    /// Relative Frobenius error of the returned factorization.
    pub error: f64,
    /// Error after every sparse-coding and dictionary-update alternation.
    pub error_trace: Vec<f64>,
    pub iterations: usize,
    /// Whether `error` reached the target.
    pub converged: bool,
}

/// Orthogonal matching pursuit of `x` over the unit-norm columns of `dict`
/// with at most `sparsity` atoms. Returns the dense code vector.
pub fn omp(dict: &Matrix, x: &[f64], sparsity: usize) -> Vec<f64> {
    omp_atoms(&dict.transpose(), x, sparsity)
}

/// OMP over the rows of `atoms` (the transposed dictionary).
fn omp_atoms(atoms: &Matrix, x: &[f64], sparsity: usize) -> Vec<f64> {
    let k = atoms.rows();
    let mut code = vec![0.0; k];
    let mut chosen: Vec<usize> = Vec::new();
    let mut residual = x.to_vec();
    let scale = linalg::norm(x);
    while chosen.len() < sparsity {
        let mut best: Option<(usize, f64)> = None;
        for j in 0..k {
            if chosen.contains(&j) {
                continue;
            }
            let score = linalg::dot(atoms.row(j), &residual).abs();
            if best.is_none_or(|(_, s)| score > s) {
                best = Some((j, score));
            }
        }
        let Some((j, score)) = best else { break };
        if score <= 1e-14 * scale {
            break;
        }
        chosen.push(j);
        let sub = Matrix::from_fn(x.len(), chosen.len(), |r, c| atoms[(chosen[c], r)]);
        let Ok(coef) = linalg::lstsq(&sub, x) else {
            // new atom is dependent on those already chosen
            chosen.pop();
            break;
        };
        code.iter_mut().for_each(|c| *c = 0.0);
        for (&idx, &c) in chosen.iter().zip(&coef) {
            code[idx] = c;
        }
        let approx = sub.matvec(&coef);
        for (r, a) in residual.iter_mut().zip(x.iter().zip(&approx)) {
            *r = a.0 - a.1;
        }
    }
    code
}

/// Leading singular pair of `r` as `(unit u, σ·v)`, by power iteration
/// started from `start`. Each half-step is an exact least-squares update, so
/// the rank-1 residual never exceeds the one at `start`.
fn rank_one(r: &Matrix, start: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let (dim, cols) = (r.rows(), r.cols());
    let project = |u: &[f64]| -> Vec<f64> { (0..cols).map(|c| (0..dim).map(|i| u[i] * r[(i, c)]).sum()).collect() };
    let mut u = start.to_vec();
    let mut w = project(&u);
    for _ in 0..500 {
        let mut next: Vec<f64> = (0..dim).map(|i| (0..cols).map(|c| r[(i, c)] * w[c]).sum()).collect();
        let nrm = linalg::norm(&next);
        if nrm == 0.0 {
            break;
        }
        next.iter_mut().for_each(|v| *v /= nrm);
        let moved: f64 = next.iter().zip(&u).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
        u = next;
        w = project(&u);
        if moved < 1e-13 {
            break;
        }
    }
    (u, w)
}

/// Residual columns `X − D·C` kept in step with the factorization.
struct State {
    dict: Matrix,
    codes: Matrix,
    residual: Matrix,
}

impl State {
    fn new(signals: &Matrix, dict: Matrix, codes: Matrix) -> Self {
        let residual = signals.sub(&dict.matmul(&codes));
        Self {
            dict,
            codes,
            residual,
        }
    }

    fn col_sq(&self, c: usize) -> f64 {
        (0..self.residual.rows()).map(|r| self.residual[(r, c)].powi(2)).sum()
    }

    fn sq_error(&self) -> f64 {
        self.residual.frobenius_norm_sq()
    }

    /// OMP pass over every signal. A signal keeps its current code when the
    /// new one is no better, unless `force` marks the current code invalid.
    fn sparse_code(&mut self, signals: &Matrix, sparsity: usize, force: &dyn Fn(usize) -> bool) {
        let (dim, k) = (self.dict.rows(), self.dict.cols());
        let atoms = self.dict.transpose();
        for c in 0..signals.cols() {
            let x = signals.col(c);
            let code = omp_atoms(&atoms, &x, sparsity);
            let approx = self.dict.matvec(&code);
            let resid: Vec<f64> = x.iter().zip(&approx).map(|(a, b)| a - b).collect();
            let new_sq: f64 = resid.iter().map(|v| v * v).sum();
            if force(c) || new_sq <= self.col_sq(c) {
                for j in 0..k {
                    self.codes[(j, c)] = code[j];
                }
                for r in 0..dim {
                    self.residual[(r, c)] = resid[r];
                }
            }
        }
    }

    /// Rank-1 refit of every used atom against its restricted residual.
    fn update_dictionary(&mut self) {
        let (dim, k) = (self.dict.rows(), self.dict.cols());
        let n = self.codes.cols();
        for j in 0..k {
            let users: Vec<usize> = (0..n).filter(|&c| self.codes[(j, c)] != 0.0).collect();
            if users.is_empty() {
                continue;
            }
            let restricted = Matrix::from_fn(dim, users.len(), |r, u| {
                let c = users[u];
                self.residual[(r, c)] + self.dict[(r, j)] * self.codes[(j, c)]
            });
            let (atom, weights) = rank_one(&restricted, &self.dict.col(j));
            let new_sq: f64 = (0..users.len())
                .map(|u| (0..dim).map(|r| (restricted[(r, u)] - atom[r] * weights[u]).powi(2)).sum::<f64>())
                .sum();
            let old_sq: f64 = users.iter().map(|&c| self.col_sq(c)).sum();
            if new_sq > old_sq {
                continue;
            }
            self.dict.set_col(j, &atom);
            for (u, &c) in users.iter().enumerate() {
                self.codes[(j, c)] = weights[u];
                for r in 0..dim {
                    self.residual[(r, c)] = restricted[(r, u)] - atom[r] * weights[u];
                }
            }
        }
    }

    /// Unit residual of the `rank`-th worst-represented signal (0 = worst),
    /// if it is nonzero.
    fn worst_direction(&self, rank: usize) -> Option<Vec<f64>> {
        let n = self.residual.cols();
        let col_sq: Vec<f64> = (0..n).map(|c| self.col_sq(c)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| col_sq[b].total_cmp(&col_sq[a]).then(a.cmp(&b)));
        let dir = self.residual.col(*order.get(rank)?);
        let nrm = linalg::norm(&dir);
        (nrm > 0.0).then(|| dir.iter().map(|v| v / nrm).collect())
    }

    fn users(&self, atom: usize) -> Vec<usize> {
        (0..self.codes.cols()).filter(|&c| self.codes[(atom, c)] != 0.0).collect()
    }

    /// Used atoms by descending total residual of the signals that use them:
    /// the likeliest to be standing in for several true atoms at once.
    fn overloaded_order(&self) -> Vec<usize> {
        let k = self.dict.cols();
        let load: Vec<f64> = (0..k)
            .map(|j| {
                self.users(j).iter().map(|&c| self.col_sq(c)).sum::<f64>()
            })
            .collect();
        let mut order: Vec<usize> = (0..k).filter(|&j| load[j] > 0.0).collect();
        order.sort_by(|&a, &b| load[b].total_cmp(&load[a]).then(a.cmp(&b)));
        order
    }

    /// Atoms by how little they would be missed: unused first, then those
    /// nearly collinear with an earlier atom, then by ascending user count.
    fn expendable_order(&self) -> Vec<usize> {
        let k = self.dict.cols();
        let count: Vec<usize> = (0..k).map(|j| self.users(j).len()).collect();
        let coherent: Vec<bool> = (0..k)
            .map(|j| {
                let aj = self.dict.col(j);
                (0..j).any(|i| linalg::dot(&self.dict.col(i), &aj).abs() > 0.99)
            })
            .collect();
        let class = |j: usize| (count[j] != 0, !coherent[j]);
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| class(a).cmp(&class(b)).then(count[a].cmp(&count[b])).then(a.cmp(&b)));
        order
    }

    /// Second left singular vector of the residual restricted to `atom`'s
    /// users with the atom's own contribution added back: the direction
    /// an atom covering two true atoms fails to explain.
    fn split_direction(&self, atom: usize) -> Option<Vec<f64>> {
        let users = self.users(atom);
        let dim = self.dict.rows();
        if users.len() < 2 || dim < 2 {
            return None;
        }
        let restricted = Matrix::from_fn(dim, users.len(), |r, u| {
            let c = users[u];
            self.residual[(r, c)] + self.dict[(r, atom)] * self.codes[(atom, c)]
        });
        let d = linalg::svd(&restricted);
        (d.s[1] > 0.0).then(|| d.u.col(1))
    }

    /// Candidate move number `attempt` as `(atom to replace, new direction)`.
    ///
    /// Moves cycle over the few most overloaded atoms: first splitting one
    /// into the most expendable atom, then replacing it outright by the
    /// residual of a poorly represented signal, going further down the list
    /// of such signals on each pass.
    fn candidate_move(&self, attempt: usize) -> Option<(usize, Vec<f64>)> {
        let overloaded = self.overloaded_order();
        let slots = overloaded.len().min(REPLACEMENT_CANDIDATES);
        if slots == 0 {
            return None;
        }
        let pass = attempt / (2 * slots);
        let source = overloaded[(attempt / 2) % slots];
        if attempt % 2 == 0 {
            let target = self
                .expendable_order()
                .into_iter()
                .filter(|&j| j != source)
                .nth(pass)?;
            Some((target, self.split_direction(source)?))
        } else {
            Some((source, self.worst_direction(pass)?))
        }
    }

    /// Alternation after `atom` is swapped for `direction`; signals that used
    /// the old atom are recoded from scratch.
    fn with_replacement(&self, signals: &Matrix, atom: usize, direction: &[f64], sparsity: usize, rounds: usize) -> State {
        let n = signals.cols();
        let mut trial = State {
            dict: self.dict.clone(),
            codes: self.codes.clone(),
            residual: self.residual.clone(),
        };
        trial.dict.set_col(atom, direction);
        let users: Vec<bool> = (0..n).map(|c| trial.codes[(atom, c)] != 0.0).collect();
        for (c, &used) in users.iter().enumerate() {
            if used {
                trial.codes[(atom, c)] = 0.0;
            }
        }
        trial.residual = signals.sub(&trial.dict.matmul(&trial.codes));
        trial.sparse_code(signals, sparsity, &|c| users[c]);
        trial.update_dictionary();
        for _ in 1..rounds {
            trial.sparse_code(signals, sparsity, &|_| false);
            trial.update_dictionary();
        }
        trial
    }
}

/// Relative improvement below which an alternation counts as stalled.
const STALL: f64 = 1e-3;
/// Alternations a tentative atom replacement gets before it is judged.
const TRIAL_ROUNDS: usize = 3;
/// Overloaded atoms that replacement moves cycle over.
const REPLACEMENT_CANDIDATES: usize = 3;

/// K-SVD dictionary learning on the columns of `signals`.
///
/// The dictionary starts from `dict_size` distinct signals picked with the
/// seed (random directions fill any shortfall). Each alternation codes every
/// signal by OMP, keeping its previous code when the new one is worse, then
/// refits each used atom and its coefficients by a rank-1 SVD of the
/// restricted residual.
///
/// When an alternation stalls, one atom (unused, nearly collinear with
/// another at `|corr| > 0.99`, or least used) is tentatively replaced by the
/// worst-represented signal's residual and every signal is recoded; the
/// replacement is kept only if the error does not rise. The error is thus
/// non-increasing over alternations. Missing the target within
/// `max_iterations` is reported through `converged`, not as an error.
pub fn ksvd(signals: &Matrix, cfg: &KsvdConfig) -> Result<KsvdFit> {
    let (dim, n) = (signals.rows(), signals.cols());
    let k = cfg.dict_size;
    if k == 0 {
        return Err(Error::BadParam("dictionary size must be at least 1"));
    }
    if cfg.sparsity == 0 || cfg.sparsity > k.min(dim) {
        return Err(Error::BadParam("sparsity must lie in 1..=min(dict_size, signal length)"));
    }
    if n == 0 || dim == 0 {
        return Err(Error::TooShort { needed: 1, got: n });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let picks = index::sample(&mut rng, n, k.min(n)).into_vec();
    let mut dict = Matrix::zeros(dim, k);
    for j in 0..k {
        let mut atom: Vec<f64> = match picks.get(j) {
            Some(&c) => signals.col(c),
            None => vec![0.0; dim],
        };
        if linalg::norm(&atom) <= 1e-12 * signals.max_abs().max(f64::MIN_POSITIVE) {
            atom = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
        }
        let nrm = linalg::norm(&atom);
        atom.iter_mut().for_each(|v| *v /= nrm);
        dict.set_col(j, &atom);
    }

    let total_sq = signals.frobenius_norm_sq();
    let rel = |sq: f64| {
        if total_sq > 0.0 {
            (sq / total_sq).sqrt()
        } else {
            sq.sqrt()
        }
    };
    let mut state = State::new(signals, dict, Matrix::zeros(k, n));
    state.sparse_code(signals, cfg.sparsity, &|_| true);
    let mut error = rel(state.sq_error());
    let mut trace = Vec::new();
    let mut iterations = 0;
    let mut attempt = 0;

    while iterations < cfg.max_iterations && error > cfg.target_error {
        iterations += 1;
        if iterations > 1 {
            state.sparse_code(signals, cfg.sparsity, &|_| false);
        }
        state.update_dictionary();
        let next = rel(state.sq_error());

        if next > cfg.target_error && error - next <= STALL * error {
            match state.candidate_move(attempt) {
                Some((atom, dir)) => {
                    let trial = state.with_replacement(signals, atom, &dir, cfg.sparsity, TRIAL_ROUNDS);
                    if rel(trial.sq_error()) <= next {
                        state = trial;
                        attempt = 0;
                    } else {
                        attempt += 1;
                    }
                }
                None => attempt += 1,
            }
        }
        // guard against drift in the incrementally kept residual
        state.residual = signals.sub(&state.dict.matmul(&state.codes));
        error = rel(state.sq_error());
        trace.push(error);
    }

    let State { dict, codes, .. } = state;
    let components: Vec<Vec<f64>> = (0..k).map(|j| dict.col(j)).collect();
    let model = FactorModel::assemble(Method::Ksvd, components, codes.transpose(), None, &signals.transpose());
    Ok(KsvdFit {
        model,
        dictionary: dict,
        codes,
        error,
        error_trace: trace,
        iterations,
        converged: error <= cfg.target_error,
    })
}
