//! Run settings: command-line flags over an optional TOML file over defaults.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use influx_core::arma::ArmaxOrders;
use influx_core::factor::{IcaMode, Nonlinearity};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::io::{GapPolicy, DEFAULT_COLUMN};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorMethod {
    #[default]
    Svd,
    Ppca,
    Ica,
    Ksvd,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NonlinearityArg {
    Pow3,
    #[default]
    Tanh,
    Gauss,
    Skew,
}

impl From<NonlinearityArg> for Nonlinearity {
    fn from(n: NonlinearityArg) -> Self {
        match n {
            NonlinearityArg::Pow3 => Nonlinearity::Pow3,
            NonlinearityArg::Tanh => Nonlinearity::Tanh,
            NonlinearityArg::Gauss => Nonlinearity::Gauss,
            NonlinearityArg::Skew => Nonlinearity::Skew,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    #[default]
    Symmetric,
    Deflation,
}

impl From<ModeArg> for IcaMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Symmetric => IcaMode::Symmetric,
            ModeArg::Deflation => IcaMode::Deflation,
        }
    }
}

/// ARMAX kernel lengths written `m,k,q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(try_from = "OrdersRepr")]
pub struct Orders(pub ArmaxOrders);

impl Default for Orders {
    fn default() -> Self {
        Orders(ArmaxOrders { m: 21, k: 1, q: 1 })
    }
}

impl FromStr for Orders {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| format!("orders must be three non-negative integers m,k,q, got `{s}`"))?;
        Orders::try_from(parts.as_slice())
    }
}

impl TryFrom<&[usize]> for Orders {
    type Error = String;

    fn try_from(p: &[usize]) -> std::result::Result<Self, String> {
        match *p {
            [m, k, q] => Ok(Orders(ArmaxOrders { m, k, q })),
            _ => Err(format!("orders need exactly three values, got {}", p.len())),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OrdersRepr {
    Text(String),
    List(Vec<usize>),
}

impl TryFrom<OrdersRepr> for Orders {
    type Error = String;

    fn try_from(r: OrdersRepr) -> std::result::Result<Self, String> {
        match r {
            OrdersRepr::Text(s) => s.parse(),
            OrdersRepr::List(v) => Orders::try_from(v.as_slice()),
        }
    }
}

/// Every tunable, all optional; used for both the flags and the TOML file.
#[derive(Debug, Clone, Default, PartialEq, Deserialize, clap::Args)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct Overrides {
    /// Input CSV with a `date` column and integer counts
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Count column to analyse [default: total]
    #[arg(long)]
    pub column: Option<String>,
    /// Directory for report.json and plot CSVs [default: influx-out]
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Seed for every randomized estimator [default: 42]
    #[arg(long)]
    pub seed: Option<u64>,
    /// Missing-day handling [default: reject]
    #[arg(long, value_enum)]
    pub interpolate: Option<GapPolicy>,
    /// Run independent stages concurrently
    #[arg(long, default_missing_value = "true", num_args = 0..=1)]
    pub parallel: Option<bool>,
    /// Lag window of the linear AR regression [default: 13]
    #[arg(long)]
    pub window: Option<usize>,
    /// Moving-average window over the log-power spectrum [default: 20]
    #[arg(long)]
    pub smooth: Option<usize>,
    /// Largest autocorrelation lag [default: 10]
    #[arg(long)]
    pub maxlag: Option<usize>,
    /// ARMAX orders m,k,q [default: 21,1,1]
    #[arg(long)]
    pub orders: Option<Orders>,
    /// Forecast horizon in days [default: 7]
    #[arg(long)]
    pub horizon: Option<usize>,
    /// Weekly-matrix factorization [default: svd]
    #[arg(long, value_enum)]
    pub method: Option<FactorMethod>,
    /// fastICA contrast function [default: tanh]
    #[arg(long, value_enum)]
    pub nonlinearity: Option<NonlinearityArg>,
    /// fastICA estimation mode [default: symmetric]
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Number of PPCA/ICA components [default: rank of the weekly matrix]
    #[arg(long)]
    pub components: Option<usize>,
    /// K-SVD dictionary size [default: 11]
    #[arg(long)]
    pub dict_size: Option<usize>,
    /// K-SVD nonzeros per coded week [default: 7]
    #[arg(long)]
    pub sparsity: Option<usize>,
    /// Tukey taper of the fractal fit weights [default: 0.8]
    #[arg(long)]
    pub q: Option<f64>,
    /// Log10 power level that marks the band limit [default: 9.5]
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Histogram bins [default: 6]
    #[arg(long)]
    pub bins: Option<usize>,
    /// Radii on the pair-count curve [default: 64]
    #[arg(long)]
    pub radii: Option<usize>,
}

impl Overrides {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        toml::from_str(&text).map_err(|e| Error::Config { path: path.to_path_buf(), message: e.to_string() })
    }

    /// Fills every unset field from `lower`.
    pub fn or(self, lower: Overrides) -> Overrides {
        macro_rules! pick {
            ($($f:ident),*) => { Overrides { $($f: self.$f.or(lower.$f)),* } };
        }
        pick!(
            input, column, out_dir, seed, interpolate, parallel, window, smooth, maxlag, orders, horizon, method,
            nonlinearity, mode, components, dict_size, sparsity, q, threshold, bins, radii
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub input: PathBuf,
    pub column: String,
    pub out_dir: PathBuf,
    pub seed: u64,
    pub interpolate: GapPolicy,
    pub parallel: bool,
    pub window: usize,
    pub smooth: usize,
    pub maxlag: usize,
    pub orders: ArmaxOrders,
    pub horizon: usize,
    pub method: FactorMethod,
    pub nonlinearity: NonlinearityArg,
    pub mode: ModeArg,
    pub components: Option<usize>,
    pub dict_size: usize,
    pub sparsity: usize,
    pub q: f64,
    pub threshold: f64,
    pub bins: usize,
    pub radii: usize,
}

impl Settings {
    pub fn resolve(o: Overrides) -> Result<Self> {
        use influx_core::{fractal, regress, spectral};
        let input = o.input.ok_or_else(|| Error::Invalid("no input file: pass --input or set `input` in the config".into()))?;
        Ok(Settings {
            input,
            column: o.column.unwrap_or_else(|| DEFAULT_COLUMN.to_string()),
            out_dir: o.out_dir.unwrap_or_else(|| PathBuf::from("influx-out")),
            seed: o.seed.unwrap_or(42),
            interpolate: o.interpolate.unwrap_or_default(),
            parallel: o.parallel.unwrap_or(false),
            window: o.window.unwrap_or(regress::DEFAULT_AR_WINDOW),
            smooth: o.smooth.unwrap_or(spectral::DEFAULT_SMOOTHING_WINDOW),
            maxlag: o.maxlag.unwrap_or(10),
            orders: o.orders.unwrap_or_default().0,
            horizon: o.horizon.unwrap_or(7),
            method: o.method.unwrap_or_default(),
            nonlinearity: o.nonlinearity.unwrap_or_default(),
            mode: o.mode.unwrap_or_default(),
            components: o.components,
            dict_size: o.dict_size.unwrap_or(11),
            sparsity: o.sparsity.unwrap_or(7),
            q: o.q.unwrap_or(fractal::DEFAULT_TUKEY_Q),
            threshold: o.threshold.unwrap_or(spectral::DEFAULT_LOG_ENERGY_THRESHOLD),
            bins: o.bins.unwrap_or(6),
            radii: o.radii.unwrap_or(fractal::DEFAULT_RADII),
        })
    }
}
