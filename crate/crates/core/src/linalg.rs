//! Small dense linear algebra: row-major matrices, Householder least squares,
//! Jacobi eigen/singular value decompositions and Gauss-Jordan inversion.
//!
//! Every matrix in this crate is at most a few thousand rows by a few dozen
//! columns, so the classical Jacobi methods are accurate and fast enough.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

#[allow(unused_imports)] // unused when a dependency links std
use num_traits::Float;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from a row-major buffer.
    ///
    /// Panics if `data.len() != rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "buffer does not match shape");
        Self { rows, cols, data }
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn set_col(&mut self, c: usize, values: &[f64]) {
        for (r, v) in values.iter().enumerate() {
            self[(r, c)] = *v;
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = out.row_mut(i);
                for (d, o) in dst.iter_mut().zip(orow) {
                    *d += a * o;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// `selfᵀ · self`.
    pub fn gram(&self) -> Matrix {
        let mut g = Matrix::zeros(self.cols, self.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            for i in 0..self.cols {
                let a = row[i];
                for j in i..self.cols {
                    g[(i, j)] += a * row[j];
                }
            }
        }
        for i in 0..self.cols {
            for j in 0..i {
                g[(i, j)] = g[(j, i)];
            }
        }
        g
    }

    pub fn scale(&self, k: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sq().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Relative threshold below which a scaled column is treated as linearly
/// dependent on the previous ones.
const RANK_TOL: f64 = 1e-10;

/// Least-squares solution of `a · x ≈ b` via Householder QR.
///
/// Columns are scaled to unit norm first so the rank test does not depend on
/// the units of each regressor. Fails with [`Error::SingularDesign`] when the
/// design is rank deficient.
pub fn lstsq(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    let (m, n) = (a.rows, a.cols);
    assert_eq!(b.len(), m, "rhs length must match rows");
    if m < n || n == 0 {
        return Err(Error::SingularDesign);
    }
    let scales: Vec<f64> = (0..n)
        .map(|c| {
            let s = (0..m).map(|r| a[(r, c)] * a[(r, c)]).sum::<f64>().sqrt();
            if s > 0.0 {
                s
            } else {
                1.0
            }
        })
        .collect();
    let mut q = Matrix::from_fn(m, n, |r, c| a[(r, c)] / scales[c]);
    let mut rhs = b.to_vec();
    let mut diag = vec![0.0; n];

    for k in 0..n {
        let alpha_sq: f64 = (k..m).map(|r| q[(r, k)] * q[(r, k)]).sum();
        let alpha = alpha_sq.sqrt();
        if alpha <= RANK_TOL {
            return Err(Error::SingularDesign);
        }
        let alpha = if q[(k, k)] > 0.0 { -alpha } else { alpha };
        // v = x - alpha e1, stored in place
        q[(k, k)] -= alpha;
        let vnorm_sq: f64 = (k..m).map(|r| q[(r, k)] * q[(r, k)]).sum();
        diag[k] = alpha;
        if vnorm_sq == 0.0 {
            continue;
        }
        for c in (k + 1)..n {
            let s: f64 = (k..m).map(|r| q[(r, k)] * q[(r, c)]).sum::<f64>() * 2.0 / vnorm_sq;
            for r in k..m {
                q[(r, c)] -= s * q[(r, k)];
            }
        }
        let s: f64 = (k..m).map(|r| q[(r, k)] * rhs[r]).sum::<f64>() * 2.0 / vnorm_sq;
        for r in k..m {
            rhs[r] -= s * q[(r, k)];
        }
    }

    let dmax = diag.iter().fold(0.0f64, |acc, d| acc.max(d.abs()));
    if diag.iter().any(|d| d.abs() <= RANK_TOL * dmax) {
        return Err(Error::SingularDesign);
    }

    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = rhs[k];
        for c in (k + 1)..n {
            s -= q[(k, c)] * x[c];
        }
        x[k] = s / diag[k];
    }
    for (xi, s) in x.iter_mut().zip(&scales) {
        *xi /= s;
    }
    Ok(x)
}

/// Inverse of a square matrix by Gauss-Jordan elimination with partial
/// pivoting.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.rows;
    assert_eq!(n, a.cols, "inverse of non-square matrix");
    let mut work = a.clone();
    let mut inv = Matrix::identity(n);
    let scale = a.max_abs();
    if scale == 0.0 {
        return Err(Error::SingularDesign);
    }
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| work[(i, col)].abs().total_cmp(&work[(j, col)].abs()))
            .unwrap();
        if work[(pivot, col)].abs() <= 1e-14 * scale {
            return Err(Error::SingularDesign);
        }
        if pivot != col {
            for c in 0..n {
                let t = work[(col, c)];
                work[(col, c)] = work[(pivot, c)];
                work[(pivot, c)] = t;
                let t = inv[(col, c)];
                inv[(col, c)] = inv[(pivot, c)];
                inv[(pivot, c)] = t;
            }
        }
        let p = work[(col, col)];
        for c in 0..n {
            work[(col, c)] /= p;
            inv[(col, c)] /= p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = work[(r, col)];
            if f == 0.0 {
                continue;
            }
            for c in 0..n {
                work[(r, c)] -= f * work[(col, c)];
                inv[(r, c)] -= f * inv[(col, c)];
            }
        }
    }
    Ok(inv)
}

/// Lower Cholesky factor of a symmetric positive definite matrix.
pub fn cholesky(a: &Matrix) -> Result<Matrix> {
    let n = a.rows;
    let mut l = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            if i == j {
                if s <= 0.0 {
                    return Err(Error::SingularDesign);
                }
                l[(i, i)] = s.sqrt();
            } else {
                l[(i, j)] = s / l[(j, j)];
            }
        }
    }
    Ok(l)
}

/// Eigen-decomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymEigen {
    /// Eigenvalues, descending.
    pub values: Vec<f64>,
    /// Unit eigenvectors as columns, in the order of `values`.
    pub vectors: Matrix,
}

/// Cyclic Jacobi eigenvalue iteration for symmetric matrices.
pub fn sym_eigen(a: &Matrix) -> SymEigen {
    let n = a.rows;
    assert_eq!(n, a.cols, "eigen of non-square matrix");
    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    let total: f64 = m.frobenius_norm_sq();

    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)] * m[(i, j)])
            .sum();
        if off <= f64::EPSILON * f64::EPSILON * total || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].total_cmp(&m[(i, i)]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let vectors = Matrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    SymEigen { values, vectors }
}

/// Thin singular value decomposition `a = u · diag(s) · vᵀ`.
#[derive(Debug, Clone)]
pub struct Svd {
    /// `rows × p` with orthonormal columns, `p = min(rows, cols)`.
    pub u: Matrix,
    /// Singular values, descending.
    pub s: Vec<f64>,
    /// `cols × p` with orthonormal columns.
    pub v: Matrix,
}

/// One-sided (Hestenes) Jacobi SVD.
pub fn svd(a: &Matrix) -> Svd {
    if a.rows < a.cols {
        let t = svd(&a.transpose());
        return Svd {
            u: t.v,
            s: t.s,
            v: t.u,
        };
    }
    let (m, n) = (a.rows, a.cols);
    // columns of `w` converge to u_i * s_i
    let mut w = a.transpose();
    let mut v = Matrix::identity(n);

    for _sweep in 0..80 {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = dot(w.row(p), w.row(p));
                let beta = dot(w.row(q), w.row(q));
                let gamma = dot(w.row(p), w.row(q));
                if gamma == 0.0 || gamma.abs() <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..m {
                    let wp = w[(p, k)];
                    let wq = w[(q, k)];
                    w[(p, k)] = c * wp - s * wq;
                    w[(q, k)] = s * wp + c * wq;
                }
                for k in 0..n {
                    let vp = v[(k, p)];
                    let vq = v[(k, q)];
                    v[(k, p)] = c * vp - s * vq;
                    v[(k, q)] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let sv: Vec<f64> = (0..n).map(|i| norm(w.row(i))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sv[j].total_cmp(&sv[i]).then(i.cmp(&j)));
    let smax = sv.iter().cloned().fold(0.0, f64::max);

    let mut u = Matrix::zeros(m, n);
    let mut s = Vec::with_capacity(n);
    let mut vout = Matrix::zeros(n, n);
    let mut missing = Vec::new();
    for (dst, &src) in order.iter().enumerate() {
        s.push(sv[src]);
        for k in 0..n {
            vout[(k, dst)] = v[(k, src)];
        }
        if sv[src] > 1e-13 * smax && sv[src] > 0.0 {
            for k in 0..m {
                u[(k, dst)] = w[(src, k)] / sv[src];
            }
        } else {
            missing.push(dst);
        }
    }
    complete_orthonormal(&mut u, &missing);
    Svd { u, s, v: vout }
}

/// Fills the listed columns of `u` with unit vectors orthogonal to all other
/// columns (Gram-Schmidt against the standard basis).
fn complete_orthonormal(u: &mut Matrix, missing: &[usize]) {
    let m = u.rows;
    let mut candidate = 0;
    for &col in missing {
        while candidate < m {
            let mut e = vec![0.0; m];
            e[candidate] = 1.0;
            candidate += 1;
            for _ in 0..2 {
                for c in 0..u.cols {
                    if c == col {
                        continue;
                    }
                    let uc = u.col(c);
                    let proj = dot(&uc, &e);
                    for (ei, ui) in e.iter_mut().zip(&uc) {
                        *ei -= proj * ui;
                    }
                }
            }
            let nrm = norm(&e);
            if nrm > 1e-6 {
                for (r, ei) in e.iter().enumerate() {
                    u[(r, col)] = ei / nrm;
                }
                break;
            }
        }
    }
}

/// `(a)^(-1/2)` for a symmetric positive definite matrix.
pub fn inv_sqrt_spd(a: &Matrix) -> Result<Matrix> {
    let eig = sym_eigen(a);
    let n = a.rows;
    let vmax = eig.values.first().copied().unwrap_or(0.0);
    if eig.values.iter().any(|&l| l <= 1e-14 * vmax.max(f64::MIN_POSITIVE)) {
        return Err(Error::SingularDesign);
    }
    let mut out = Matrix::zeros(n, n);
    for (k, l) in eig.values.iter().enumerate() {
        let f = 1.0 / l.sqrt();
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += f * eig.vectors[(i, k)] * eig.vectors[(j, k)];
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pseudo_random(rows: usize, cols: usize, seed: u64) -> Matrix {
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        Matrix::from_fn(rows, cols, |_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        })
    }

    #[test]
    fn lstsq_recovers_exact_solution() {
        let a = Matrix::from_rows(&[[1.0, 0.0], [1.0, 1.0], [1.0, 2.0], [1.0, 3.0]]);
        let b = [7.0, 10.0, 13.0, 16.0];
        let x = lstsq(&a, &b).unwrap();
        assert!((x[0] - 7.0).abs() < 1e-12 && (x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn lstsq_flags_collinear_columns() {
        let a = Matrix::from_rows(&[[1.0, 2.0], [1.0, 2.0], [1.0, 2.0]]);
        assert_eq!(lstsq(&a, &[1.0, 2.0, 3.0]), Err(Error::SingularDesign));
    }

    #[test]
    fn svd_reconstructs_and_is_orthonormal() {
        for seed in 0..5 {
            let a = pseudo_random(15, 7, seed);
            let d = svd(&a);
            let us = Matrix::from_fn(15, 7, |r, c| d.u[(r, c)] * d.s[c]);
            let rec = us.matmul(&d.v.transpose());
            assert!(rec.sub(&a).max_abs() < 1e-12);
            let utu = d.u.gram();
            let vtv = d.v.gram();
            assert!(utu.sub(&Matrix::identity(7)).max_abs() < 1e-12);
            assert!(vtv.sub(&Matrix::identity(7)).max_abs() < 1e-12);
            assert!(d.s.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn svd_of_wide_matrix() {
        let a = pseudo_random(3, 8, 9);
        let d = svd(&a);
        assert_eq!((d.u.rows(), d.u.cols(), d.v.rows()), (3, 3, 8));
        let us = Matrix::from_fn(3, 3, |r, c| d.u[(r, c)] * d.s[c]);
        assert!(us.matmul(&d.v.transpose()).sub(&a).max_abs() < 1e-12);
    }

    #[test]
    fn svd_rank_deficient_keeps_u_orthonormal() {
        let a = Matrix::from_fn(6, 3, |r, c| (r + 1) as f64 * (c + 2) as f64);
        let d = svd(&a);
        assert!(d.s[1] < 1e-12 * d.s[0]);
        assert!(d.u.gram().sub(&Matrix::identity(3)).max_abs() < 1e-10);
    }

    #[test]
    fn eigen_matches_definition() {
        let b = pseudo_random(6, 6, 3);
        let a = b.gram();
        let e = sym_eigen(&a);
        for k in 0..6 {
            let v = e.vectors.col(k);
            let av = a.matvec(&v);
            for i in 0..6 {
                assert!((av[i] - e.values[k] * v[i]).abs() < 1e-12);
            }
        }
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn inverse_and_inv_sqrt() {
        let a = pseudo_random(5, 5, 11).gram().add(&Matrix::identity(5));
        let inv = inverse(&a).unwrap();
        assert!(a.matmul(&inv).sub(&Matrix::identity(5)).max_abs() < 1e-12);
        let r = inv_sqrt_spd(&a).unwrap();
        let check = r.matmul(&a).matmul(&r);
        assert!(check.sub(&Matrix::identity(5)).max_abs() < 1e-12);
        let l = cholesky(&a).unwrap();
        assert!(l.matmul(&l.transpose()).sub(&a).max_abs() < 1e-12);
    }
}
