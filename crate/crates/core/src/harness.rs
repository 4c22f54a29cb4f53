//! Monte Carlo studies: point estimation, null rejection rates,
//! size-corrected power and the quantile/size series derived from them.
//!
//! Replication `i` always draws from `RngStream::new(master_seed, i)` and
//! per-replication results are collected in index order before any
//! reduction, so output does not depend on how many workers ran.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::dist::{sample, BsParams, RngStream};
use crate::error::{domain, Error, Result};
use crate::estimators::{estimate, EstimatorKind, EstimatorOptions, TrimConfig};
use crate::likelihood::full_mle;
use crate::lrtest::{bartlett_constant, lr_test_on, TestKind, TestSpec};
use crate::numeric::{chisq1_quantile, chisq1_upper_quantile, Tolerance};
use crate::profile::{AdjustedObjective, AdjustmentForm, InterestParameter};

pub const DEFAULT_LEVELS: [f64; 4] = [0.10, 0.05, 0.01, 0.005];
pub const DEFAULT_REPLICATIONS: usize = 10_000;
/// Fraction of failed replications a study tolerates.
pub const MAX_FAILURE_RATE: f64 = 0.01;

/// How replications are scheduled. Results are identical in every mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    /// The global rayon pool (sequential without the `parallel` feature).
    #[default]
    Parallel,
    /// A dedicated pool with this many workers.
    Workers(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub study_id: String,
    pub replications: usize,
    pub n: usize,
    pub truth: BsParams,
    pub interest: InterestParameter,
    pub null_value: f64,
    pub alternative_grid: Vec<f64>,
    pub nominal_levels: Vec<f64>,
    pub estimators: Vec<EstimatorKind>,
    pub statistics: Vec<TestKind>,
    pub master_seed: u64,
    pub form: AdjustmentForm,
    pub trim: TrimConfig,
    pub tol: Tolerance,
    #[serde(skip)]
    pub execution: Execution,
}

impl ExperimentConfig {
    /// A config with the default replication count and levels; the null is
    /// set to the truth component of `interest`.
    pub fn new(study_id: impl Into<String>, n: usize, truth: BsParams, interest: InterestParameter) -> Self {
        ExperimentConfig {
            study_id: study_id.into(),
            replications: DEFAULT_REPLICATIONS,
            n,
            truth,
            interest,
            null_value: component(&truth, interest),
            alternative_grid: Vec::new(),
            nominal_levels: DEFAULT_LEVELS.to_vec(),
            estimators: Vec::new(),
            statistics: Vec::new(),
            master_seed: 0,
            form: AdjustmentForm::Analytic,
            trim: TrimConfig::default(),
            tol: Tolerance::default(),
            execution: Execution::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.replications == 0 {
            return Err(Error::Config("replications must be >= 1".into()));
        }
        if self.n < 2 {
            return Err(Error::Config(format!("sample size must be >= 2, got {}", self.n)));
        }
        self.truth.validate()?;
        if let Some(g) = self.nominal_levels.iter().find(|g| !(**g > 0.0 && **g < 1.0)) {
            return Err(Error::Config(format!("nominal level {g} is outside (0, 1)")));
        }
        if self.execution == Execution::Workers(0) {
            return Err(Error::Config("worker count must be >= 1".into()));
        }
        Ok(())
    }

    fn estimator_options(&self) -> EstimatorOptions {
        EstimatorOptions {
            trim: self.trim,
            form: self.form,
            tol: self.tol,
        }
    }
}

fn component(p: &BsParams, interest: InterestParameter) -> f64 {
    match interest {
        InterestParameter::Alpha => p.alpha,
        InterestParameter::Beta => p.beta,
    }
}

fn with_component(p: &BsParams, interest: InterestParameter, value: f64) -> Result<BsParams> {
    match interest {
        InterestParameter::Alpha => BsParams::new(value, p.beta),
        InterestParameter::Beta => BsParams::new(p.alpha, value),
    }
}

/// Runs `f(i)` for i in 0..reps and returns the results in index order.
fn map_replications<T, F>(reps: usize, execution: Execution, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match execution {
        Execution::Sequential => Ok((0..reps as u64).map(f).collect()),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            Ok((0..reps as u64).into_par_iter().map(f).collect())
        }
        #[cfg(feature = "parallel")]
        Execution::Workers(k) => {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(|| (0..reps as u64).into_par_iter().map(f).collect()))
        }
        #[cfg(not(feature = "parallel"))]
        Execution::Parallel | Execution::Workers(_) => Ok((0..reps as u64).map(f).collect()),
    }
}

/// Neumaier-compensated sum in slice order.
fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let (mut sum, mut c) = (0.0f64, 0.0f64);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    sum + c
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub count: usize,
    pub mean: f64,
    pub bias: f64,
    pub variance: f64,
    pub mse: f64,
    pub relative_bias_percent: f64,
    pub skewness: f64,
    pub kurtosis: f64,
}

/// Central-moment summary with divisor n. Skewness is m₃/m₂^{3/2} and
/// kurtosis m₄/m₂² (not excess); both are NaN when the variance is zero.
pub fn summarize(values: &[f64], truth: f64) -> Result<SummaryStats> {
    if values.is_empty() {
        return Err(Error::Config("cannot summarize an empty list".into()));
    }
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(domain("summary values must be finite", *v));
    }
    let n = values.len() as f64;
    let mean = compensated_sum(values.iter().copied()) / n;
    let moment = |k: i32| compensated_sum(values.iter().map(|v| (v - mean).powi(k))) / n;
    let (m2, m3, m4) = (moment(2), moment(3), moment(4));
    let bias = mean - truth;
    Ok(SummaryStats {
        count: values.len(),
        mean,
        bias,
        variance: m2,
        mse: m2 + bias * bias,
        relative_bias_percent: 100.0 * bias / truth,
        skewness: m3 / m2.powf(1.5),
        kurtosis: m4 / (m2 * m2),
    })
}

fn check_failures(study: &str, what: &str, failures: usize, reps: usize) -> Result<()> {
    if failures as f64 > MAX_FAILURE_RATE * reps as f64 {
        return Err(Error::Estimation(format!(
            "study {study}: {what} failed in {failures} of {reps} replications"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimatorSummary {
    pub stats: SummaryStats,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointStudyReport {
    pub study_id: String,
    pub n: usize,
    pub truth: BsParams,
    pub interest: InterestParameter,
    pub replications: usize,
    pub estimators: BTreeMap<EstimatorKind, EstimatorSummary>,
}

/// Every estimator runs on the same sample in each replication. The
/// summary is of the interest component against its true value.
pub fn run_point_estimation_study(cfg: &ExperimentConfig) -> Result<PointStudyReport> {
    cfg.validate()?;
    if cfg.estimators.is_empty() {
        return Err(Error::Config("estimator set is empty".into()));
    }
    let opts = cfg.estimator_options();
    let rows = map_replications(cfg.replications, cfg.execution, |i| {
        let mut rng = RngStream::new(cfg.master_seed, i);
        let data = sample(cfg.n, &cfg.truth, &mut rng)?;
        Ok(cfg
            .estimators
            .iter()
            .map(|&k| {
                estimate(&data, k, &opts)
                    .ok()
                    .map(|e| match cfg.interest {
                        InterestParameter::Alpha => e.alpha,
                        InterestParameter::Beta => e.beta,
                    })
                    .filter(|v| v.is_finite())
            })
            .collect::<Vec<_>>())
    })?
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let truth = component(&cfg.truth, cfg.interest);
    let mut estimators = BTreeMap::new();
    for (j, &kind) in cfg.estimators.iter().enumerate() {
        let values: Vec<f64> = rows.iter().filter_map(|r| r[j]).collect();
        let failures = cfg.replications - values.len();
        check_failures(&cfg.study_id, kind.name(), failures, cfg.replications)?;
        estimators.insert(
            kind,
            EstimatorSummary {
                stats: summarize(&values, truth)?,
                failures,
            },
        );
    }
    Ok(PointStudyReport {
        study_id: cfg.study_id.clone(),
        n: cfg.n,
        truth: cfg.truth,
        interest: cfg.interest,
        replications: cfg.replications,
        estimators,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatisticReport {
    /// (level, percent rejected).
    pub rejection_percent: Vec<(f64, f64)>,
    /// (level, empirical upper-level quantile). Present for size studies.
    pub critical_values: Vec<(f64, f64)>,
    pub failures: usize,
    /// Ordered statistic values; retained for the series, not serialized.
    #[serde(skip)]
    pub sorted_values: Vec<f64>,
}

impl StatisticReport {
    pub fn rejection_at(&self, level: f64) -> Option<f64> {
        lookup(&self.rejection_percent, level)
    }

    pub fn critical_value_at(&self, level: f64) -> Option<f64> {
        lookup(&self.critical_values, level)
    }
}

fn lookup(pairs: &[(f64, f64)], level: f64) -> Option<f64> {
    pairs
        .iter()
        .find(|(g, _)| (g - level).abs() <= 1e-12)
        .map(|(_, v)| *v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StudyKind {
    Size,
    Power,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SizePowerReport {
    pub study_id: String,
    pub kind: StudyKind,
    pub n: usize,
    /// Parameters the samples were drawn from.
    pub truth: BsParams,
    pub interest: InterestParameter,
    pub null_value: f64,
    pub replications: usize,
    pub statistics: BTreeMap<TestKind, StatisticReport>,
}

/// Size-corrected critical values keyed by statistic, then level.
pub type CriticalValues = BTreeMap<TestKind, Vec<(f64, f64)>>;

impl SizePowerReport {
    pub fn critical_values(&self) -> CriticalValues {
        self.statistics
            .iter()
            .map(|(k, s)| (*k, s.critical_values.clone()))
            .collect()
    }
}

/// Computes every requested statistic at `null` on one sample. The joint
/// MLE is fitted once and shared between the statistics.
fn statistics_for_replication(
    cfg: &ExperimentConfig,
    truth: &BsParams,
    null: f64,
    i: u64,
) -> Result<Vec<Option<f64>>> {
    let mut rng = RngStream::new(cfg.master_seed, i);
    let data = sample(cfg.n, truth, &mut rng)?;
    let fit = match full_mle(&data) {
        Ok(f) => f,
        Err(_) => return Ok(vec![None; cfg.statistics.len()]),
    };
    Ok(cfg
        .statistics
        .iter()
        .map(|&kind| {
            let objective = AdjustedObjective::from_fit(&data, cfg.interest, kind.objective(), cfg.form, &fit);
            let spec = TestSpec {
                interest: cfg.interest,
                null_value: null,
                kind,
            };
            lr_test_on(&objective, &spec, &cfg.tol)
                .ok()
                .map(|r| r.statistic)
                .filter(|s| s.is_finite())
        })
        .collect())
}

fn run_statistics(cfg: &ExperimentConfig, truth: &BsParams) -> Result<Vec<(TestKind, Vec<f64>, usize)>> {
    if cfg.statistics.is_empty() {
        return Err(Error::Config("statistic set is empty".into()));
    }
    if !(cfg.null_value.is_finite() && cfg.null_value > 0.0) {
        return Err(Error::Config(format!("null value {} must be finite and > 0", cfg.null_value)));
    }
    let rows = map_replications(cfg.replications, cfg.execution, |i| {
        statistics_for_replication(cfg, truth, cfg.null_value, i)
    })?
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(cfg.statistics.len());
    for (j, &kind) in cfg.statistics.iter().enumerate() {
        let mut values: Vec<f64> = rows.iter().filter_map(|r| r[j]).collect();
        let failures = cfg.replications - values.len();
        check_failures(&cfg.study_id, kind.name(), failures, cfg.replications)?;
        if values.is_empty() {
            return Err(Error::Estimation(format!("study {}: no {kind} values", cfg.study_id)));
        }
        values.sort_by(f64::total_cmp);
        out.push((kind, values, failures));
    }
    Ok(out)
}

fn percent_above(sorted: &[f64], threshold: f64) -> f64 {
    let above = sorted.len() - sorted.partition_point(|v| *v <= threshold);
    100.0 * above as f64 / sorted.len() as f64
}

/// Empirical p-quantile of sorted values: the order statistic ⌈p·R⌉.
pub fn empirical_quantile(sorted: &[f64], p: f64) -> Result<f64> {
    if sorted.is_empty() {
        return Err(Error::Config("no values for an empirical quantile".into()));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(domain("quantile probability must lie in (0, 1)", p));
    }
    let rank = ((p * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    Ok(sorted[rank - 1])
}

/// Null rejection rates against χ²₁ critical values, plus the empirical
/// critical values a later power study needs.
pub fn run_size_study(cfg: &ExperimentConfig) -> Result<SizePowerReport> {
    cfg.validate()?;
    let truth_component = component(&cfg.truth, cfg.interest);
    if (cfg.null_value - truth_component).abs() > 1e-12 * truth_component.abs() {
        return Err(Error::Config(format!(
            "size study null {} differs from the true {} {truth_component}",
            cfg.null_value, cfg.interest
        )));
    }
    let mut statistics = BTreeMap::new();
    for (kind, values, failures) in run_statistics(cfg, &cfg.truth)? {
        let mut rejection_percent = Vec::new();
        let mut critical_values = Vec::new();
        for &g in &cfg.nominal_levels {
            rejection_percent.push((g, percent_above(&values, chisq1_upper_quantile(g)?)));
            critical_values.push((g, empirical_quantile(&values, 1.0 - g)?));
        }
        statistics.insert(
            kind,
            StatisticReport {
                rejection_percent,
                critical_values,
                failures,
                sorted_values: values,
            },
        );
    }
    Ok(SizePowerReport {
        study_id: cfg.study_id.clone(),
        kind: StudyKind::Size,
        n: cfg.n,
        truth: cfg.truth,
        interest: cfg.interest,
        null_value: cfg.null_value,
        replications: cfg.replications,
        statistics,
    })
}

/// One report per alternative in `cfg.alternative_grid`. The statistic is
/// computed at `cfg.null_value` and compared with the size-corrected
/// critical value.
pub fn run_power_study(cfg: &ExperimentConfig, critical: &CriticalValues) -> Result<Vec<SizePowerReport>> {
    cfg.validate()?;
    if cfg.alternative_grid.is_empty() {
        return Err(Error::Config("alternative grid is empty".into()));
    }
    let mut thresholds: BTreeMap<TestKind, Vec<(f64, f64)>> = BTreeMap::new();
    for &kind in &cfg.statistics {
        let levels = critical.get(&kind);
        let mut row = Vec::new();
        for &g in &cfg.nominal_levels {
            let cv = levels.and_then(|l| lookup(l, g)).ok_or_else(|| {
                Error::Config(format!("no critical value for {kind} at level {g}; run the size study first"))
            })?;
            row.push((g, cv));
        }
        thresholds.insert(kind, row);
    }
    let mut reports = Vec::with_capacity(cfg.alternative_grid.len());
    for &alt in &cfg.alternative_grid {
        let truth = with_component(&cfg.truth, cfg.interest, alt)?;
        let mut statistics = BTreeMap::new();
        for (kind, values, failures) in run_statistics(cfg, &truth)? {
            let rejection_percent = thresholds[&kind]
                .iter()
                .map(|&(g, cv)| (g, percent_above(&values, cv)))
                .collect();
            statistics.insert(
                kind,
                StatisticReport {
                    rejection_percent,
                    critical_values: thresholds[&kind].clone(),
                    failures,
                    sorted_values: values,
                },
            );
        }
        reports.push(SizePowerReport {
            study_id: cfg.study_id.clone(),
            kind: StudyKind::Power,
            n: cfg.n,
            truth,
            interest: cfg.interest,
            null_value: cfg.null_value,
            replications: cfg.replications,
            statistics,
        });
    }
    Ok(reports)
}

/// Probabilities 0.01, 0.02, …, 0.99.
pub fn default_probability_grid() -> Vec<f64> {
    (1..100).map(|k| k as f64 / 100.0).collect()
}

/// Points (q, y) of one statistic's series.
pub type Series = Vec<(f64, f64)>;

/// For each probability p: q = χ²₁ p-quantile and y = (empirical p-quantile − q)/q.
pub fn quantile_discrepancy_series(report: &SizePowerReport, probabilities: &[f64]) -> Result<BTreeMap<TestKind, Series>> {
    let mut out = BTreeMap::new();
    for (kind, stat) in &report.statistics {
        if stat.sorted_values.is_empty() {
            return Err(Error::Config(format!("report has no retained {kind} values")));
        }
        let mut series = Vec::with_capacity(probabilities.len());
        for &p in probabilities {
            if !(p > 0.0 && p < 1.0) {
                return Err(domain("grid probability must lie in (0, 1)", p));
            }
            let q = chisq1_quantile(p)?;
            series.push((q, (empirical_quantile(&stat.sorted_values, p)? - q) / q));
        }
        out.insert(*kind, series);
    }
    Ok(out)
}

/// For each level γ: (γ, (empirical rejection rate − γ)/γ).
pub fn size_distortion_series(report: &SizePowerReport, levels: &[f64]) -> Result<BTreeMap<TestKind, Series>> {
    let mut out = BTreeMap::new();
    for (kind, stat) in &report.statistics {
        if stat.sorted_values.is_empty() {
            return Err(Error::Config(format!("report has no retained {kind} values")));
        }
        let mut series = Vec::with_capacity(levels.len());
        for &g in levels {
            if !(g > 0.0 && g < 1.0) {
                return Err(domain("nominal level must lie in (0, 1)", g));
            }
            let rate = percent_above(&stat.sorted_values, chisq1_upper_quantile(g)?) / 100.0;
            series.push((g, (rate - g) / g));
        }
        out.insert(*kind, series);
    }
    Ok(out)
}

/// Levels 0.001..0.10 used for size-distortion series.
pub fn default_level_grid() -> Vec<f64> {
    (1..=100).map(|k| k as f64 / 1000.0).collect()
}

fn csv_error(e: csv::Error) -> Error {
    Error::Internal(format!("csv output: {e}"))
}

const CSV_HEADER: [&str; 5] = ["study", "name", "quantity", "key", "value"];

/// Long-format CSV: one row per (estimator, summary quantity).
pub fn write_point_csv<W: Write>(report: &PointStudyReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for (kind, s) in &report.estimators {
        let st = &s.stats;
        let rows = [
            ("mean", st.mean),
            ("bias", st.bias),
            ("variance", st.variance),
            ("mse", st.mse),
            ("rb_percent", st.relative_bias_percent),
            ("skewness", st.skewness),
            ("kurtosis", st.kurtosis),
            ("failures", s.failures as f64),
        ];
        for (q, v) in rows {
            w.write_record([report.study_id.as_str(), kind.name(), q, "", &v.to_string()])
                .map_err(csv_error)?;
        }
    }
    w.flush().map_err(|e| Error::Internal(format!("csv output: {e}")))
}

/// Long-format CSV: rejection percentages and critical values per level.
/// Power reports add the alternative value to the quantity column.
pub fn write_size_power_csv<W: Write>(reports: &[SizePowerReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for report in reports {
        let prefix = match report.kind {
            StudyKind::Size => String::new(),
            StudyKind::Power => format!("{}={}:", report.interest, component(&report.truth, report.interest)),
        };
        for (kind, s) in &report.statistics {
            for (quantity, pairs) in [("rejection_percent", &s.rejection_percent), ("critical_value", &s.critical_values)] {
                for (g, v) in pairs {
                    w.write_record([
                        report.study_id.as_str(),
                        kind.name(),
                        &format!("{prefix}{quantity}"),
                        &g.to_string(),
                        &v.to_string(),
                    ])
                    .map_err(csv_error)?;
                }
            }
        }
    }
    w.flush().map_err(|e| Error::Internal(format!("csv output: {e}")))
}

/// Two-column CSV of one series.
pub fn write_series_csv<W: Write>(series: &Series, x_name: &str, y_name: &str, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([x_name, y_name]).map_err(csv_error)?;
    for (x, y) in series {
        w.write_record([x.to_string(), y.to_string()]).map_err(csv_error)?;
    }
    w.flush().map_err(|e| Error::Internal(format!("csv output: {e}")))
}

/// The preset configurations behind `simulate --table`.
pub mod presets {
    use super::*;

    /// α-interest power alternatives for a null of 0.10.
    pub fn alpha_power_grid() -> Vec<f64> {
        (6..=14).map(|k| k as f64 * 0.02).collect()
    }

    /// β-interest power alternatives for a null of 1.0.
    pub fn beta_power_grid() -> Vec<f64> {
        (0..=7).map(|k| 1.2 + 0.4 * k as f64).collect()
    }

    pub fn table1(alpha: f64, n: usize) -> Result<ExperimentConfig> {
        let mut c = ExperimentConfig::new("table1", n, BsParams::new(alpha, 1.0)?, InterestParameter::Alpha);
        c.estimators = vec![EstimatorKind::Mle, EstimatorKind::ProfileCrAlpha, EstimatorKind::ProfileBnAlpha];
        Ok(c)
    }

    /// The Bartlett-corrected statistic is included only for tabulated α.
    pub fn table2(alpha: f64, n: usize) -> Result<ExperimentConfig> {
        let mut c = ExperimentConfig::new("table2", n, BsParams::new(alpha, 1.0)?, InterestParameter::Alpha);
        c.statistics = TestKind::ALL
            .into_iter()
            .filter(|k| *k != TestKind::LrBartlett || bartlett_constant(alpha, n.max(1)).is_ok())
            .collect();
        Ok(c)
    }

    /// Size study at α₀ (its critical values feed the power study) and the
    /// power study over [`alpha_power_grid`].
    pub fn table3(alpha0: f64, n: usize) -> Result<(ExperimentConfig, ExperimentConfig)> {
        let mut size = table2(alpha0, n)?;
        size.study_id = "table3".into();
        size.nominal_levels = vec![0.10, 0.05, 0.01];
        let mut power = size.clone();
        power.alternative_grid = alpha_power_grid();
        Ok((size, power))
    }

    pub fn table4(alpha: f64, n: usize) -> Result<ExperimentConfig> {
        let mut c = ExperimentConfig::new("table4", n, BsParams::new(alpha, 1.0)?, InterestParameter::Beta);
        c.statistics = vec![TestKind::Lr, TestKind::LrCr, TestKind::LrBn];
        Ok(c)
    }

    pub fn table5(alpha: f64, n: usize) -> Result<(ExperimentConfig, ExperimentConfig)> {
        let mut size = table4(alpha, n)?;
        size.study_id = "table5".into();
        size.nominal_levels = vec![0.10, 0.05, 0.01];
        let mut power = size.clone();
        power.alternative_grid = beta_power_grid();
        Ok((size, power))
    }

    pub fn table6(alpha: f64, n: usize) -> Result<ExperimentConfig> {
        let mut c = table1(alpha, n)?;
        c.study_id = "table6".into();
        c.estimators = EstimatorKind::ALL.to_vec();
        Ok(c)
    }
}
