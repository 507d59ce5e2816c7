//! Stage runners: each turns a series into a report fragment and plot tables.

use std::path::PathBuf;

use influx_core::arma::{self, ArmaModel};
use influx_core::factor::{self, FactorModel, IcaConfig, KsvdConfig};
use influx_core::linalg::{svd, Matrix};
use influx_core::{fractal, regress, spectral, stats, to_weekly_matrix, TimeSeries};
use serde_json::{json, Value};

use crate::config::{FactorMethod, Settings};
use crate::error::{Error, Result};
use crate::io;
use crate::plot::{Cell, PlotTable};
use crate::report::{num, nums, Report};

/// Phase diagrams are drawn for lags `1..=PHASE_LAGS`.
pub const PHASE_LAGS: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Stage {
    Stats,
    Regress,
    Spectrum,
    Arma,
    Forecast,
    Factor,
    Fractal,
}

impl Stage {
    pub const ALL: [Stage; 7] = [
        Stage::Stats,
        Stage::Regress,
        Stage::Spectrum,
        Stage::Arma,
        Stage::Forecast,
        Stage::Factor,
        Stage::Fractal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Stats => "stats",
            Stage::Regress => "regress",
            Stage::Spectrum => "spectrum",
            Stage::Arma => "arma",
            Stage::Forecast => "forecast",
            Stage::Factor => "factor",
            Stage::Fractal => "fractal",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StageOutput {
    pub stage: Stage,
    pub fragment: Value,
    pub plots: Vec<PlotTable>,
}

/// What a run produced on disk.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub report: Report,
    pub files: Vec<PathBuf>,
}

/// Loads the input, runs `stages` and writes `report.json` plus plot CSVs.
pub fn run(stages: &[Stage], settings: &Settings) -> Result<RunSummary> {
    let series = io::load_series(&settings.input, &settings.column, settings.interpolate)?;
    let outputs = run_stages(stages, &series, settings)?;

    let dir = &settings.out_dir;
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut report = Report::default();
    report.insert("series", series_fragment(&series));
    let mut files = Vec::new();
    for out in outputs {
        for table in &out.plots {
            files.push(table.write(dir)?);
        }
        report.insert(out.stage.name(), out.fragment);
    }
    report.write(dir)?;
    files.push(dir.join(crate::report::REPORT_FILE));
    Ok(RunSummary { report, files })
}

/// Runs the stages, concurrently when `settings.parallel` is set. Outputs
/// and the reported error follow the order of `stages` either way.
pub fn run_stages(stages: &[Stage], series: &TimeSeries, settings: &Settings) -> Result<Vec<StageOutput>> {
    let results: Vec<Result<StageOutput>> = if settings.parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = stages
                .iter()
                .map(|&stage| scope.spawn(move || run_stage(stage, series, settings)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("stage thread panicked")).collect()
        })
    } else {
        stages.iter().map(|&stage| run_stage(stage, series, settings)).collect()
    };
    results.into_iter().collect()
}

pub fn run_stage(stage: Stage, series: &TimeSeries, settings: &Settings) -> Result<StageOutput> {
    let wrap = |source| Error::Analysis { stage: stage.name(), source };
    let (fragment, plots) = match stage {
        Stage::Stats => stats_stage(series, settings),
        Stage::Regress => regress_stage(series, settings),
        Stage::Spectrum => spectrum_stage(series, settings),
        Stage::Arma => arma_stage(series, settings),
        Stage::Forecast => forecast_stage(series, settings),
        Stage::Factor => factor_stage(series, settings),
        Stage::Fractal => fractal_stage(series, settings),
    }
    .map_err(wrap)?;
    Ok(StageOutput { stage, fragment, plots })
}

type Staged = influx_core::Result<(Value, Vec<PlotTable>)>;

fn series_fragment(s: &TimeSeries) -> Value {
    json!({
        "label": s.label(),
        "start_date": s.start_date().to_string(),
        "end_date": s.date_of(s.len() - 1).to_string(),
        "days": s.len(),
    })
}

fn date_cell(s: &TimeSeries, i: usize) -> Cell {
    Cell::Text(s.date_of(i).to_string())
}

fn stats_stage(series: &TimeSeries, settings: &Settings) -> Staged {
    let v = series.to_f64();
    let m = stats::moments(&v)?;
    let hist = stats::histogram(&v, settings.bins)?;
    let poisson = stats::fit_poisson(&v)?;
    let gev = stats::fit_gev(&v)?;
    let weekly = to_weekly_matrix(series, None)?;
    let fragment = json!({
        "moments": {
            "min": num(m.min), "max": num(m.max), "median": num(m.median), "mean": num(m.mean),
            "stdev": num(m.stdev), "skewness": num(m.skewness), "excess_kurtosis": num(m.excess_kurtosis),
        },
        "histogram": { "edges": nums(&hist.edges), "counts": hist.counts },
        "poisson": { "lambda": num(poisson.lambda), "ci_halfwidth": num(poisson.ci_halfwidth) },
        "gev": {
            "shape": num(gev.shape), "scale": num(gev.scale), "location": num(gev.location),
            "shape_ci": num(gev.shape_ci), "scale_ci": num(gev.scale_ci), "location_ci": num(gev.location_ci),
            "log_likelihood": num(gev.log_likelihood),
        },
        "weekday_averages": nums(&stats::weekday_averages(&weekly)),
    });
    let mut table = PlotTable::new("stats", "histogram", &["bin_start", "bin_end", "count"]);
    for (i, &c) in hist.counts.iter().enumerate() {
        table.push(vec![hist.edges[i].into(), hist.edges[i + 1].into(), c.into()]);
    }
    Ok((fragment, vec![table]))
}

fn regress_stage(series: &TimeSeries, settings: &Settings) -> Staged {
    let v = series.to_f64();
    let ar = regress::fit_linear_ar(&v, settings.window)?;
    let cos = regress::fit_cosine_linear(&v)?;
    let fragment = json!({
        "linear_ar": {
            "intercept": num(ar.intercept), "coefficients": nums(&ar.coefficients), "window": ar.window,
            "mape": num(ar.mape), "rmse": num(ar.rmse),
        },
        "cosine_linear": {
            "a": num(cos.a), "b": num(cos.b), "c": num(cos.c), "d": num(cos.d), "c0": num(cos.c0),
            "period_days": num(cos.period_days()), "sse": num(cos.sse),
        },
    });
    let mut table = PlotTable::new("regress", "fit", &["t", "date", "actual", "linear_ar", "cosine_linear"]);
    for (i, &y) in v.iter().enumerate() {
        let ar_fit = i.checked_sub(ar.window).map_or(f64::NAN, |j| ar.fitted[j]);
        let t = i + 1;
        table.push(vec![t.into(), date_cell(series, i), y.into(), ar_fit.into(), cos.eval(t as f64).into()]);
    }
    Ok((fragment, vec![table]))
}

fn spectrum_stage(series: &TimeSeries, settings: &Settings) -> Staged {
    let sp = spectral::dft(&series.to_f64())?;
    let log_power = spectral::log_power_halfspectrum(&sp);
    let smoothed = spectral::moving_average(&log_power, settings.smooth)?;
    let band = spectral::band_limit_frequency(&smoothed, settings.threshold, series.len())?;
    let fragment = json!({
        "f_L": num(band.f_l),
        "T_L": num(band.t_l),
        "x_L": num(band.x_l),
        "threshold": num(settings.threshold),
        "window": settings.smooth,
    });
    let mut table = PlotTable::new("spectrum", "logpower", &["k", "log_power", "smoothed"]);
    for (i, (&p, &s)) in log_power.iter().zip(&smoothed).enumerate() {
        table.push(vec![(i + 1).into(), p.into(), s.into()]);
    }
    Ok((fragment, vec![table]))
}

struct ArmaRun {
    model: ArmaModel,
    forecast: Vec<f64>,
}

fn fit_and_forecast(series: &TimeSeries, settings: &Settings) -> influx_core::Result<ArmaRun> {
    let y = series.to_f64();
    let u = series.weekday_input();
    let model = arma::fit_armax(&y, &u, settings.orders, None)?;
    let n = series.len();
    let future: Vec<f64> = (n..n + settings.horizon).map(|i| series.weekday_of(i) as f64).collect();
    let forecast = arma::forecast(&model, &y, &u, &future, settings.horizon)?;
    Ok(ArmaRun { model, forecast })
}

fn with_leading_one(coeffs: &[f64]) -> Value {
    let mut all = vec![1.0];
    all.extend_from_slice(coeffs);
    nums(&all)
}

fn arma_stage(series: &TimeSeries, settings: &Settings) -> Staged {
    let y = series.to_f64();
    let u = series.weekday_input();
    let ArmaRun { model, forecast } = fit_and_forecast(series, settings)?;
    let (m, k, q) = model.orders();
    let coeff = if k == 1 { num(model.b[0]) } else { nums(&model.b) };
    let predictions = arma::one_step_predictions(&model, &y, &u)?;
    let mape = predictions.iter().map(|&(t, p)| (y[t] - p).abs()).sum::<f64>() / predictions.len() as f64;
    let acf = arma::autocorrelation(&y, settings.maxlag)?;
    let fragment = json!({
        "orders": [m, k, q],
        "A": with_leading_one(&model.a),
        "B": { "delay": model.delay, "coeff": coeff },
        "C": with_leading_one(&model.c),
        "rmse": num(model.fit_rmse),
        "mape": num(mape),
        "noise_variance": num(model.noise_variance),
        "stable": model.stable,
        "forecast": nums(&forecast),
        "autocorrelation": nums(&acf),
    });

    let mut fit = PlotTable::new("arma", "fit", &["t", "actual", "predicted"]);
    let mut predicted = vec![f64::NAN; y.len()];
    for &(t, p) in &predictions {
        predicted[t] = p;
    }
    for (t, (&a, &p)) in y.iter().zip(&predicted).enumerate() {
        fit.push(vec![t.into(), a.into(), p.into()]);
    }
    let mut acf_table = PlotTable::new("arma", "autocorr", &["lag", "r"]);
    for (lag, &r) in acf.iter().enumerate() {
        acf_table.push(vec![lag.into(), r.into()]);
    }
    let mut phase = PlotTable::new("arma", "phase", &["lag", "y_t", "y_t_plus_lag"]);
    for lag in 1..=PHASE_LAGS.min(y.len().saturating_sub(2)) {
        for (a, b) in arma::phase_pairs(&y, lag, arma::DEFAULT_PHASE_SCALE)? {
            phase.push(vec![lag.into(), a.into(), b.into()]);
        }
    }
    Ok((fragment, vec![fit, acf_table, phase]))
}

fn forecast_stage(series: &TimeSeries, settings: &Settings) -> Staged {
    let ArmaRun { model, forecast } = fit_and_forecast(series, settings)?;
    let (m, k, q) = model.orders();
    let n = series.len();
    let dates: Vec<String> = (n..n + forecast.len()).map(|i| series.date_of(i).to_string()).collect();
    let fragment = json!({
        "orders": [m, k, q],
        "horizon": settings.horizon,
        "dates": dates,
        "values": nums(&forecast),
        "stable": model.stable,
    });
    let mut table = PlotTable::new("forecast", "values", &["date", "predicted"]);
    for (i, &f) in forecast.iter().enumerate() {
        table.push(vec![date_cell(series, n + i), f.into()]);
    }
    Ok((fragment, vec![table]))
}

/// Singular values above a roundoff threshold.
fn numerical_rank(m: &Matrix) -> usize {
    let s = svd(m).s;
    let top = s.iter().copied().fold(0.0, f64::max);
    let tol = top * 1e-10 * m.rows().max(m.cols()) as f64;
    s.iter().filter(|&&x| x > tol).count()
}

fn centred(m: &Matrix, by_rows: bool) -> Matrix {
    let (r, c) = (m.rows(), m.cols());
    if by_rows {
        let means: Vec<f64> = (0..r).map(|i| m.row(i).iter().sum::<f64>() / c as f64).collect();
        Matrix::from_fn(r, c, |i, j| m[(i, j)] - means[i])
    } else {
        let means: Vec<f64> = (0..c).map(|j| m.col(j).iter().sum::<f64>() / r as f64).collect();
        Matrix::from_fn(r, c, |i, j| m[(i, j)] - means[j])
    }
}

fn factor_stage(series: &TimeSeries, settings: &Settings) -> Staged {
    let weekly = to_weekly_matrix(series, None)?;
    let data = weekly.as_matrix();
    let (model, extras): (FactorModel, Value) = match settings.method {
        FactorMethod::Svd => (factor::svd_decompose(data), json!({})),
        FactorMethod::Ppca => {
            let n = settings.components.unwrap_or_else(|| numerical_rank(&centred(data, false)));
            let fit = factor::fit_ppca(data, n, settings.seed)?;
            let extras = json!({
                "noise_variance": num(fit.noise_variance),
                "log_likelihood": fit.log_likelihood.last().map_or(Value::Null, |&l| num(l)),
                "iterations": fit.log_likelihood.len(),
            });
            (fit.model, extras)
        }
        FactorMethod::Ica => {
            // weeks are the observed mixtures
            let n = settings.components.unwrap_or_else(|| numerical_rank(&centred(data, true)));
            let cfg = IcaConfig {
                nonlinearity: settings.nonlinearity.into(),
                mode: settings.mode.into(),
                seed: settings.seed,
                ..IcaConfig::new(n)
            };
            let fit = factor::fast_ica(data, &cfg)?;
            (fit.model, json!({ "iterations": fit.iterations }))
        }
        FactorMethod::Ksvd => {
            let cfg = KsvdConfig {
                dict_size: settings.dict_size,
                sparsity: settings.sparsity,
                seed: settings.seed,
                ..KsvdConfig::default()
            };
            let fit = factor::ksvd(&data.transpose(), &cfg)?;
            let extras = json!({
                "dict_size": cfg.dict_size,
                "sparsity": cfg.sparsity,
                "iterations": fit.iterations,
                "converged": fit.converged,
            });
            (fit.model, extras)
        }
    };

    let mut rank_errors = Vec::with_capacity(model.len());
    let mut recon = PlotTable::new("factor", "reconstruction", &["day", "date", "rank", "actual", "reconstructed"]);
    let actual = weekly.flatten();
    for rank in 1..=model.len() {
        let approx = model.reconstruct_rank(rank)?;
        rank_errors.push(factor::relative_error(data, &approx));
        for (i, &a) in actual.iter().enumerate() {
            let day = weekly.skip_head() + i;
            let cell = approx[(i / 7, i % 7)];
            recon.push(vec![(day + 1).into(), date_cell(series, day), rank.into(), a.into(), cell.into()]);
        }
    }
    let mut comps = PlotTable::new("factor", "components", &["component", "column", "weekday", "value"]);
    for (i, comp) in model.components.iter().enumerate() {
        for (c, &v) in comp.iter().enumerate() {
            comps.push(vec![(i + 1).into(), (c + 1).into(), (weekly.weekday_of_col(c) as usize).into(), v.into()]);
        }
    }

    let mut fragment = json!({
        "method": model.method.name(),
        "components": model.components.iter().map(|c| nums(c)).collect::<Vec<_>>(),
        "energy_fractions": nums(&model.energy_fractions),
        "reconstruction_error": num(model.reconstruction_error(data)),
        "rank_errors": nums(&rank_errors),
        "weekday_of_col1": weekly.weekday_of_col1(),
        "skip_head": weekly.skip_head(),
    });
    if let (Value::Object(f), Value::Object(e)) = (&mut fragment, extras) {
        f.extend(e);
    }
    Ok((fragment, vec![recon, comps]))
}

fn fractal_stage(series: &TimeSeries, settings: &Settings) -> Staged {
    let curve = fractal::pair_count_curve(series, settings.radii)?;
    let fd = fractal::fd_estimates(&curve.points, settings.q)?;
    let f = &fd.fit;
    let fragment = json!({
        "fda": num(fd.fda),
        "fdc": num(fd.fdc),
        "fde": num(fd.fde),
        "q": num(fd.q),
        "radii": curve.points.len(),
        "fit": { "x0": num(f.x0), "y0": num(f.y0), "cx": num(f.cx), "cy": num(f.cy), "sse": num(f.sse) },
    });
    let mut table = PlotTable::new("fractal", "pc", &["log_inv_r", "log_pc", "fitted"]);
    for &(x, y) in &curve.points {
        table.push(vec![x.into(), y.into(), f.eval(x).into()]);
    }
    Ok((fragment, vec![table]))
}
