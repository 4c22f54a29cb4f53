//! Alternative point estimators: modified moments, jackknife, and the four
//! robust estimators of From and Li (F1–F4).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dist::BsParams;
use crate::error::{domain, Error, Result};
use crate::likelihood::full_mle;
use crate::numeric::{std_normal_quantile, Tolerance};
use crate::profile::{adjusted_mle_with, AdjustmentForm, InterestParameter, ObjectiveKind};
use crate::sample::Sample;

/// A point estimate of (α, β). Unlike [`BsParams`] it may sit on the
/// boundary α = 0 (constant samples, zero spread).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub alpha: f64,
    pub beta: f64,
}

impl Estimate {
    pub fn at_boundary(&self) -> bool {
        self.alpha == 0.0
    }

    pub fn params(&self) -> Result<BsParams> {
        if self.at_boundary() {
            return Err(Error::Boundary("shape estimate is zero"));
        }
        BsParams::new(self.alpha, self.beta)
    }
}

impl From<BsParams> for Estimate {
    fn from(p: BsParams) -> Self {
        Estimate {
            alpha: p.alpha,
            beta: p.beta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EstimatorKind {
    #[serde(rename = "MLE")]
    Mle,
    #[serde(rename = "MME")]
    Mme,
    JackknifeMLE,
    JackknifeMME,
    F1,
    F2,
    F3,
    F4,
    #[serde(rename = "ProfileCR_alpha")]
    ProfileCrAlpha,
    #[serde(rename = "ProfileBN_alpha")]
    ProfileBnAlpha,
}

impl EstimatorKind {
    pub const ALL: [EstimatorKind; 10] = [
        EstimatorKind::Mle,
        EstimatorKind::Mme,
        EstimatorKind::JackknifeMLE,
        EstimatorKind::JackknifeMME,
        EstimatorKind::F1,
        EstimatorKind::F2,
        EstimatorKind::F3,
        EstimatorKind::F4,
        EstimatorKind::ProfileCrAlpha,
        EstimatorKind::ProfileBnAlpha,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            EstimatorKind::Mle => "MLE",
            EstimatorKind::Mme => "MME",
            EstimatorKind::JackknifeMLE => "JackknifeMLE",
            EstimatorKind::JackknifeMME => "JackknifeMME",
            EstimatorKind::F1 => "F1",
            EstimatorKind::F2 => "F2",
            EstimatorKind::F3 => "F3",
            EstimatorKind::F4 => "F4",
            EstimatorKind::ProfileCrAlpha => "ProfileCR_alpha",
            EstimatorKind::ProfileBnAlpha => "ProfileBN_alpha",
        }
    }
}

impl fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EstimatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EstimatorKind::ALL
            .iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Config(format!("unknown estimator '{s}'")))
    }
}

/// Trimming proportion for F4: order statistics n1..=n2 are used, with
/// n1 = round(nλ + 1) and n2 = round(n(1 − λ)), rounding half away from zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrimConfig {
    pub lambda: f64,
}

impl Default for TrimConfig {
    fn default() -> Self {
        TrimConfig { lambda: 0.05 }
    }
}

impl TrimConfig {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda < 0.5) {
            return Err(domain("trimming proportion must lie in (0, 0.5)", lambda));
        }
        Ok(TrimConfig { lambda })
    }

    /// 1-based inclusive index range (n1, n2).
    pub fn range(&self, n: usize) -> Result<(usize, usize)> {
        TrimConfig::new(self.lambda)?;
        let nf = n as f64;
        let n1 = (nf * self.lambda + 1.0).round() as usize;
        let n2 = (nf * (1.0 - self.lambda)).round() as usize;
        if n1 < 1 || n1 > n2 || n2 > n {
            return Err(Error::Estimation(format!(
                "empty trimmed range n1={n1}, n2={n2} for n={n}"
            )));
        }
        Ok((n1, n2))
    }
}

/// Settings shared by [`estimate`].
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EstimatorOptions {
    pub trim: TrimConfig,
    pub form: AdjustmentForm,
    pub tol: Tolerance,
}

pub fn estimate(sample: &Sample, kind: EstimatorKind, opts: &EstimatorOptions) -> Result<Estimate> {
    match kind {
        EstimatorKind::Mle => Ok(full_mle(sample)?.params.into()),
        EstimatorKind::Mme => mme(sample),
        EstimatorKind::JackknifeMLE => jackknife(sample, EstimatorKind::Mle),
        EstimatorKind::JackknifeMME => jackknife(sample, EstimatorKind::Mme),
        EstimatorKind::F1 => from_li_f1(sample),
        EstimatorKind::F2 => from_li_f2(sample),
        EstimatorKind::F3 => Ok(Estimate {
            alpha: from_li_f3(sample)?,
            beta: median(&sample.sorted_values()),
        }),
        EstimatorKind::F4 => from_li_f4(sample, opts.trim),
        EstimatorKind::ProfileCrAlpha | EstimatorKind::ProfileBnAlpha => {
            let objective = if kind == EstimatorKind::ProfileCrAlpha {
                ObjectiveKind::CoxReid
            } else {
                ObjectiveKind::BarndorffNielsen
            };
            let fit = adjusted_mle_with(sample, InterestParameter::Alpha, objective, opts.form, &opts.tol)?;
            Ok(fit.params.into())
        }
    }
}

/// Modified-moment estimates β̄ = √(s r), ᾱ = {2[√(s/r) − 1]}^{1/2}; they
/// solve E(T) = s and 1/E(T⁻¹) = r.
pub fn mme(sample: &Sample) -> Result<Estimate> {
    let (s, r) = (sample.mean(), sample.harmonic_mean());
    let ratio = ((s / r).sqrt() - 1.0).max(0.0);
    Ok(Estimate {
        alpha: (2.0 * ratio).sqrt(),
        beta: (s * r).sqrt(),
    })
}

/// Bias-corrected jackknife θ_J = nθ̂ − ((n−1)/n) Σⱼ θ̂₍₋ⱼ₎, coordinatewise.
pub fn jackknife(sample: &Sample, base: EstimatorKind) -> Result<Estimate> {
    let base_fn: fn(&Sample) -> Result<Estimate> = match base {
        EstimatorKind::Mle => |s| Ok(full_mle(s)?.params.into()),
        EstimatorKind::Mme => mme,
        other => {
            return Err(Error::Config(format!(
                "jackknife base must be MLE or MME, got {other}"
            )))
        }
    };
    jackknife_with(sample, base_fn)
}

/// Jackknife of an arbitrary base estimator.
pub fn jackknife_with<F>(sample: &Sample, base: F) -> Result<Estimate>
where
    F: Fn(&Sample) -> Result<Estimate>,
{
    sample.require_len(3)?;
    let n = sample.len() as f64;
    let full = base(sample)?;
    let mut sum = (0.0, 0.0);
    for index in 0..sample.len() {
        let reduced = sample.without(index)?;
        let est = base(&reduced).map_err(|e| Error::LeaveOneOut {
            index,
            source: Box::new(e),
        })?;
        sum.0 += est.alpha;
        sum.1 += est.beta;
    }
    let factor = (n - 1.0) / n;
    Ok(Estimate {
        alpha: n * full.alpha - factor * sum.0,
        beta: n * full.beta - factor * sum.1,
    })
}

/// Square root of s/β + β/r − 2, rejecting radicands that are negative
/// beyond rounding.
fn alpha_from_radicand(sample: &Sample, beta: f64) -> Result<f64> {
    let (s, r) = (sample.mean(), sample.harmonic_mean());
    let radicand = s / beta + beta / r - 2.0;
    if radicand < -1e-12 * (s / beta + beta / r) {
        return Err(Error::Estimation(format!(
            "negative radicand {radicand:e} in the shape estimate"
        )));
    }
    Ok(radicand.max(0.0).sqrt())
}

pub fn from_li_f1(sample: &Sample) -> Result<Estimate> {
    let (num, den) = sample
        .values()
        .iter()
        .fold((0.0, 0.0), |(a, b), t| (a + t.sqrt(), b + t.sqrt().recip()));
    let beta = num / den;
    Ok(Estimate {
        alpha: alpha_from_radicand(sample, beta)?,
        beta,
    })
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

/// β̆ is the sample median; ᾰ solves v = α²(1 + 5α²/4) with v = σ̂²/β̆².
pub fn from_li_f2(sample: &Sample) -> Result<Estimate> {
    sample.require_len(2)?;
    let beta = median(&sample.sorted_values());
    let n = sample.len() as f64;
    let mean = sample.mean();
    let var = sample.values().iter().map(|t| (t - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok(Estimate {
        alpha: f2_alpha(var / (beta * beta)),
        beta,
    })
}

pub(crate) fn f2_alpha(v: f64) -> f64 {
    ((-2.0 + 2.0 * (1.0 + 5.0 * v).sqrt()) / 5.0).max(0.0).sqrt()
}

/// h(t) = √t − 1/√t.
fn h(t: f64) -> f64 {
    t.sqrt() - t.sqrt().recip()
}

/// Median over i of h(t₍ᵢ₎/β̆_F2) / Φ⁻¹(i/(n+1)), skipping the central
/// index where Φ⁻¹ vanishes.
pub fn from_li_f3(sample: &Sample) -> Result<f64> {
    sample.require_len(2)?;
    let sorted = sample.sorted_values();
    let beta = median(&sorted);
    let n = sorted.len();
    let mut ratios = Vec::with_capacity(n);
    for (i, &t) in sorted.iter().enumerate() {
        let z = std_normal_quantile((i + 1) as f64 / (n + 1) as f64)?;
        if z.abs() < 1e-12 {
            continue;
        }
        ratios.push(h(t / beta) / z);
    }
    if ratios.is_empty() {
        return Err(Error::Estimation("no admissible order statistic for F3".into()));
    }
    ratios.sort_by(f64::total_cmp);
    Ok(median(&ratios))
}

pub fn from_li_f4(sample: &Sample, trim: TrimConfig) -> Result<Estimate> {
    sample.require_len(2)?;
    let sorted = sample.sorted_values();
    let n = sorted.len();
    let (n1, n2) = trim.range(n)?;
    let beta_f2 = median(&sorted);
    let (mut num, mut den, mut hsq, mut zsq) = (0.0, 0.0, 0.0, 0.0);
    for i in n1..=n2 {
        let t = sorted[i - 1];
        num += t.sqrt();
        den += t.sqrt().recip();
        hsq += h(t / beta_f2).powi(2);
        zsq += std_normal_quantile(i as f64 / (n + 1) as f64)?.powi(2);
    }
    if zsq == 0.0 {
        return Err(Error::Estimation(
            "trimmed range holds only the central order statistic".into(),
        ));
    }
    Ok(Estimate {
        alpha: (hsq / zsq).sqrt(),
        beta: num / den,
    })
}
