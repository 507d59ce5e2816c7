//! Statistical, spectral and structural analysis of daily event-count series.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure numerical
//! code: descriptive statistics and distribution fits, lagged and
//! cosine-linear regression, DFT spectra, ARMAX identification and
//! forecasting, weekly matrix factorizations (SVD, PPCA, fastICA, K-SVD) and
//! correlation fractal-dimension estimation. File formats, reports and the
//! command-line front end live in the `influx` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arma;
pub mod error;
pub mod factor;
pub mod fractal;
pub mod linalg;
pub mod optim;
pub mod regress;
pub mod series;
pub mod spectral;
pub mod stats;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use series::{to_weekly_matrix, TimeSeries, WeeklyMatrix};
