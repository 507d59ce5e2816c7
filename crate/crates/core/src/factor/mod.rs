//! Factorizations of a `rows × cols` data matrix (weeks × weekdays) into
//! ranked rank-1 contributions.
//!
//! Every method yields a [`FactorModel`]: component `i` contributes the outer
//! product of coefficient column `i` (one weight per row) with the pattern
//! `components[i]`, on top of an optional baseline. Components are ordered by
//! the energy of that contribution, largest first.

mod ica;
mod ksvd;
mod ppca;
mod svd;

pub use ica::{fast_ica, IcaConfig, IcaFit, IcaMode, Nonlinearity, ICA_MAX_ITERATIONS, ICA_TOLERANCE};
pub use ksvd::{ksvd, omp, KsvdConfig, KsvdFit};
pub use ppca::{fit_ppca, PpcaFit, PPCA_MAX_ITERATIONS, PPCA_TOLERANCE};
pub use svd::svd_decompose;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Svd,
    Ppca,
    Ica,
    Ksvd,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Svd => "svd",
            Method::Ppca => "ppca",
            Method::Ica => "ica",
            Method::Ksvd => "ksvd",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorModel {
    pub method: Method,
    /// Patterns of length `cols`, in descending energy order.
    pub components: Vec<Vec<f64>>,
    /// `rows × components`: weight of each component in each row.
    pub coefficients: Matrix,
    /// Offset added to every reconstruction (mean structure), if any.
    pub baseline: Option<Matrix>,
    /// Share of the signal energy carried by each component.
    pub energy_fractions: Vec<f64>,
}

impl FactorModel {
    /// Assembles a model from unordered parts: applies the sign convention
    /// (largest-magnitude entry of each pattern positive) and sorts by energy.
    pub(crate) fn assemble(
        method: Method,
        components: Vec<Vec<f64>>,
        coefficients: Matrix,
        baseline: Option<Matrix>,
        data: &Matrix,
    ) -> Self {
        let mut components = components;
        let mut coefficients = coefficients;
        for (i, comp) in components.iter_mut().enumerate() {
            let peak = comp
                .iter()
                .copied()
                .reduce(|a, b| if b.abs() > a.abs() { b } else { a })
                .unwrap_or(0.0);
            if peak < 0.0 {
                comp.iter_mut().for_each(|v| *v = -*v);
                for r in 0..coefficients.rows() {
                    coefficients[(r, i)] = -coefficients[(r, i)];
                }
            }
        }
        let unsorted = FactorModel {
            method,
            components,
            coefficients,
            baseline,
            energy_fractions: Vec::new(),
        };
        let ranking = energy_ranking(&unsorted, data);
        let components = ranking.iter().map(|&(i, _)| unsorted.components[i].clone()).collect();
        let coefficients = Matrix::from_fn(unsorted.coefficients.rows(), ranking.len(), |r, c| {
            unsorted.coefficients[(r, ranking[c].0)]
        });
        FactorModel {
            method,
            components,
            coefficients,
            baseline: unsorted.baseline,
            energy_fractions: ranking.iter().map(|&(_, f)| f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Rank-1 contribution of component `i`.
    pub fn contribution(&self, i: usize) -> Matrix {
        let comp = &self.components[i];
        Matrix::from_fn(self.coefficients.rows(), comp.len(), |r, c| {
            self.coefficients[(r, i)] * comp[c]
        })
    }

    fn zero_or_baseline(&self) -> Matrix {
        let cols = self.components.first().map_or(0, Vec::len);
        self.baseline
            .clone()
            .unwrap_or_else(|| Matrix::zeros(self.coefficients.rows(), cols))
    }

    /// Baseline plus the first `rank` contributions.
    pub fn reconstruct_rank(&self, rank: usize) -> Result<Matrix> {
        if rank == 0 || rank > self.len() {
            return Err(Error::BadRank {
                rank,
                max: self.len(),
            });
        }
        Ok((0..rank).fold(self.zero_or_baseline(), |acc, i| acc.add(&self.contribution(i))))
    }

    /// `‖data − reconstruction‖ / ‖data‖` using every component.
    pub fn reconstruction_error(&self, data: &Matrix) -> f64 {
        let full = (0..self.len()).fold(self.zero_or_baseline(), |acc, i| acc.add(&self.contribution(i)));
        relative_error(data, &full)
    }
}

/// Relative Frobenius error; zero data is compared in absolute terms.
pub fn relative_error(data: &Matrix, approx: &Matrix) -> f64 {
    let diff = data.sub(approx).frobenius_norm();
    let scale = data.frobenius_norm();
    if scale > 0.0 {
        diff / scale
    } else {
        diff
    }
}

/// Components ordered by contribution energy with their energy fractions.
///
/// The fraction of component `i` is `‖contribution_i‖²` over the larger of the
/// centred signal energy `‖data − baseline‖²` and the summed contribution
/// energies, so fractions never sum past 1 even for non-orthogonal atoms.
/// Equal energies keep their original order.
pub fn energy_ranking(model: &FactorModel, data: &Matrix) -> Vec<(usize, f64)> {
    let energies: Vec<f64> = (0..model.len())
        .map(|i| model.contribution(i).frobenius_norm_sq())
        .collect();
    let centred = match &model.baseline {
        Some(b) => data.sub(b).frobenius_norm_sq(),
        None => data.frobenius_norm_sq(),
    };
    let total = centred.max(energies.iter().sum());
    let mut order: Vec<usize> = (0..energies.len()).collect();
    order.sort_by(|&a, &b| energies[b].total_cmp(&energies[a]).then(a.cmp(&b)));
    order
        .into_iter()
        .map(|i| (i, if total > 0.0 { energies[i] / total } else { 0.0 }))
        .collect()
}

/// Matrix whose every row is `row`.
pub(crate) fn broadcast_row(row: &[f64], rows: usize) -> Matrix {
    Matrix::from_fn(rows, row.len(), |_, c| row[c])
}

/// Matrix whose row `r` is filled with `col[r]`.
pub(crate) fn broadcast_col(col: &[f64], cols: usize) -> Matrix {
    Matrix::from_fn(col.len(), cols, |r, _| col[r])
}


#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn single_component_owns_all_energy() {
        let data = Matrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        let model = FactorModel::assemble(
            Method::Svd,
            vec![vec![1.0, 2.0]],
            Matrix::from_rows(&[[1.0], [2.0]]),
            None,
            &data,
        );
        assert_eq!(model.energy_fractions, vec![1.0]);
        assert_eq!(model.reconstruct_rank(1).unwrap(), data);
        assert_eq!(model.reconstruct_rank(2), Err(Error::BadRank { rank: 2, max: 1 }));
        assert_eq!(model.reconstruct_rank(0), Err(Error::BadRank { rank: 0, max: 1 }));
    }

    #[test]
    fn sign_convention_flips_pattern_and_weights_together() {
        let data = Matrix::from_rows(&[[-1.0, -3.0]]);
        let model = FactorModel::assemble(
            Method::Ica,
            vec![vec![1.0, 3.0]],
            Matrix::from_rows(&[[-1.0]]),
            None,
            &data,
        );
        let flipped = FactorModel::assemble(
            Method::Ica,
            vec![vec![-1.0, -3.0]],
            Matrix::from_rows(&[[1.0]]),
            None,
            &data,
        );
        assert_eq!(model, flipped);
        assert_eq!(model.components[0], vec![1.0, 3.0]);
    }

    #[test]
    fn ranking_breaks_ties_by_index() {
        let data = Matrix::identity(2);
        let model = FactorModel {
            method: Method::Svd,
            components: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            coefficients: Matrix::identity(2),
            baseline: None,
            energy_fractions: vec![],
        };
        assert_eq!(energy_ranking(&model, &data), vec![(0, 0.5), (1, 0.5)]);
    }
}
