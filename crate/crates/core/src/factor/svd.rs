use alloc::vec::Vec;

use super::{FactorModel, Method};
use crate::linalg::{self, Matrix};

/// Singular triplets as ranked components: patterns are right singular
/// vectors, weights are `uᵢ·σᵢ`, and energy fractions reduce to `σᵢ²/Σσ²`.
pub fn svd_decompose(data: &Matrix) -> FactorModel {
    let d = linalg::svd(data);
    let p = d.s.len();
    let components: Vec<Vec<f64>> = (0..p).map(|i| d.v.col(i)).collect();
    let coefficients = Matrix::from_fn(data.rows(), p, |r, c| d.u[(r, c)] * d.s[c]);
    FactorModel::assemble(Method::Svd, components, coefficients, None, data)
}
