//! Profile log-likelihoods and their Cox–Reid and Barndorff-Nielsen
//! adjustments, the latter through Severini's approximations.
//!
//! Because β̂_α does not depend on α, the α-side quantities reduce to
//!
//! * ℓ_p(α) = L₀ − n log α − n α̂² / (2α²),
//! * j_ββ(α, β̂) = C + D/α²,
//! * Ĭ(α) = E + F/α²,
//!
//! with constants computed once per sample.

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dist::BsParams;
use crate::error::{domain, Error, Result};
use crate::likelihood::{
    full_mle, loglik, obs_info_alpha, per_obs_score, restricted_alpha_mle, restricted_beta_mle,
    FitResult, LN_2_SQRT_2PI,
};
use crate::numeric::{maximize_local, Tolerance};
use crate::sample::Sample;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InterestParameter {
    Alpha,
    Beta,
}

impl fmt::Display for InterestParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InterestParameter::Alpha => "alpha",
            InterestParameter::Beta => "beta",
        })
    }
}

impl FromStr for InterestParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alpha" => Ok(InterestParameter::Alpha),
            "beta" => Ok(InterestParameter::Beta),
            _ => Err(Error::Config(format!("interest must be alpha or beta, got '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ObjectiveKind {
    Profile,
    CoxReid,
    BarndorffNielsen,
}

impl ObjectiveKind {
    pub fn label(&self) -> &'static str {
        match self {
            ObjectiveKind::Profile => "profile",
            ObjectiveKind::CoxReid => "CR",
            ObjectiveKind::BarndorffNielsen => "BN",
        }
    }
}

/// Which closed forms to use for the adjustment terms.
///
/// `Analytic` uses the exact curvature −∂²ℓ/∂β² for j_ββ and the full
/// Severini I for β, `(nα̂/α̂_β³)(β̂/β + β/β̂)`. `Published` reproduces the
/// worked-example numbers of the reference analysis, which correspond to
/// j_ββ without its n/(2β²) term and to I without the (β̂/β + β/β̂) factor.
/// Both share the same Ĭ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AdjustmentForm {
    #[default]
    Analytic,
    Published,
}

impl fmt::Display for AdjustmentForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdjustmentForm::Analytic => "analytic",
            AdjustmentForm::Published => "published",
        })
    }
}

impl FromStr for AdjustmentForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "analytic" => Ok(AdjustmentForm::Analytic),
            "published" => Ok(AdjustmentForm::Published),
            _ => Err(Error::Config(format!(
                "adjustment form must be analytic or published, got '{s}'"
            ))),
        }
    }
}

/// Per-sample constants of the α-side objectives.
#[derive(Debug, Clone, Copy)]
struct AlphaTerms {
    l0: f64,
    j_const: f64,
    j_slope: f64,
    i_const: f64,
    i_slope: f64,
}

impl AlphaTerms {
    fn new(sample: &Sample, mle: &BsParams, form: AdjustmentForm) -> Self {
        let n = sample.len() as f64;
        let (a_hat, b) = (mle.alpha, mle.beta);
        let mut ln_sum = 0.0;
        let mut inv_sq = 0.0;
        let (mut uu, mut ub, mut bb) = (0.0, 0.0, 0.0);
        for &t in sample.values() {
            ln_sum += (b + t).ln();
            inv_sq += (b + t).powi(-2);
            // per-observation β score is u + B/(2α²)
            let u = -0.5 / b + 1.0 / (b + t);
            let bj = t / (b * b) - 1.0 / t;
            uu += u * u;
            ub += u * bj;
            bb += bj * bj;
        }
        let a2 = a_hat * a_hat;
        let curvature_offset = match form {
            AdjustmentForm::Analytic => -0.5 * n / (b * b),
            AdjustmentForm::Published => -n / (b * b),
        };
        AlphaTerms {
            l0: -n * (LN_2_SQRT_2PI + 0.5 * b.ln()) - 1.5 * sample.sum_ln() + ln_sum,
            j_const: curvature_offset + inv_sq,
            j_slope: n * sample.mean() / (b * b * b),
            i_const: uu + 0.5 * ub / a2,
            i_slope: 0.5 * ub + 0.25 * bb / a2,
        }
    }
}

/// One of the six objectives (three kinds × two interest parameters) bound
/// to a sample and its joint MLE.
#[derive(Debug, Clone)]
pub struct AdjustedObjective<'a> {
    sample: &'a Sample,
    interest: InterestParameter,
    kind: ObjectiveKind,
    form: AdjustmentForm,
    mle: BsParams,
    mle_loglik: f64,
    alpha_terms: AlphaTerms,
    inadmissible: Cell<usize>,
}

impl<'a> AdjustedObjective<'a> {
    pub fn new(
        sample: &'a Sample,
        interest: InterestParameter,
        kind: ObjectiveKind,
        form: AdjustmentForm,
    ) -> Result<Self> {
        let fit = full_mle(sample)?;
        Ok(Self::with_mle(sample, interest, kind, form, fit.params, fit.objective))
    }

    /// Builds the objective around an already computed joint MLE.
    pub fn from_fit(
        sample: &'a Sample,
        interest: InterestParameter,
        kind: ObjectiveKind,
        form: AdjustmentForm,
        mle: &FitResult,
    ) -> Self {
        Self::with_mle(sample, interest, kind, form, mle.params, mle.objective)
    }

    fn with_mle(
        sample: &'a Sample,
        interest: InterestParameter,
        kind: ObjectiveKind,
        form: AdjustmentForm,
        mle: BsParams,
        mle_loglik: f64,
    ) -> Self {
        AdjustedObjective {
            sample,
            interest,
            kind,
            form,
            mle,
            mle_loglik,
            alpha_terms: AlphaTerms::new(sample, &mle, form),
            inadmissible: Cell::new(0),
        }
    }

    pub fn sample(&self) -> &'a Sample {
        self.sample
    }

    pub fn mle(&self) -> BsParams {
        self.mle
    }

    pub fn interest(&self) -> InterestParameter {
        self.interest
    }

    pub fn kind(&self) -> ObjectiveKind {
        self.kind
    }

    pub fn form(&self) -> AdjustmentForm {
        self.form
    }

    /// Unrestricted estimate of the interest parameter.
    pub fn mle_component(&self) -> f64 {
        match self.interest {
            InterestParameter::Alpha => self.mle.alpha,
            InterestParameter::Beta => self.mle.beta,
        }
    }

    fn check(&self, x: f64) -> Result<()> {
        if !(x.is_finite() && x > 0.0) {
            return Err(domain("interest parameter must be finite and > 0", x));
        }
        Ok(())
    }

    /// ℓ_p at the interest value `x`.
    pub fn profile(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        let n = self.sample.len() as f64;
        match self.interest {
            InterestParameter::Alpha => {
                let a2 = self.mle.alpha * self.mle.alpha;
                Ok(self.alpha_terms.l0 - n * x.ln() - 0.5 * n * a2 / (x * x))
            }
            InterestParameter::Beta => {
                let a = restricted_alpha_mle(self.sample, x)?;
                if a == 0.0 {
                    return Err(Error::Boundary("restricted shape estimate is zero"));
                }
                loglik(self.sample, &BsParams { alpha: a, beta: x })
            }
        }
    }

    /// j_ββ(α, β̂_α) under the configured form.
    pub fn j_beta_beta(&self, alpha: f64) -> Result<f64> {
        self.check(alpha)?;
        Ok(self.alpha_terms.j_const + self.alpha_terms.j_slope / (alpha * alpha))
    }

    /// Ĭ(α, β̂_α; α̂, β̂).
    pub fn i_breve(&self, alpha: f64) -> Result<f64> {
        self.check(alpha)?;
        Ok(self.alpha_terms.i_const + self.alpha_terms.i_slope / (alpha * alpha))
    }

    /// Severini's I(α̂_β, β; α̂, β̂) under the configured form.
    pub fn i_beta(&self, beta: f64) -> Result<f64> {
        self.check(beta)?;
        let base = severini_i_beta_base(self.sample, beta, &self.mle)?;
        Ok(match self.form {
            AdjustmentForm::Analytic => base * beta_symmetric_factor(beta, self.mle.beta),
            AdjustmentForm::Published => base,
        })
    }

    /// Objective minus profile at `x`.
    pub fn adjustment(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        match (self.interest, self.kind) {
            (_, ObjectiveKind::Profile) => Ok(0.0),
            (InterestParameter::Alpha, ObjectiveKind::CoxReid) => {
                let j = positive(x, "j_bb", self.j_beta_beta(x)?)?;
                Ok(-0.5 * j.ln())
            }
            (InterestParameter::Alpha, ObjectiveKind::BarndorffNielsen) => {
                let j = positive(x, "j_bb", self.j_beta_beta(x)?)?;
                let ib = positive(x, "I_breve", self.i_breve(x)?)?;
                Ok(0.5 * j.ln() - ib.ln())
            }
            (InterestParameter::Beta, ObjectiveKind::CoxReid) => {
                let a = restricted_alpha_mle(self.sample, x)?;
                if a == 0.0 {
                    return Err(Error::Boundary("restricted shape estimate is zero"));
                }
                Ok(a.ln())
            }
            (InterestParameter::Beta, ObjectiveKind::BarndorffNielsen) => {
                let a = restricted_alpha_mle(self.sample, x)?;
                let j = obs_info_alpha(self.sample, a, x)?;
                let i = positive(x, "I", self.i_beta(x)?)?;
                Ok(0.5 * j.ln() - i.ln())
            }
        }
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        Ok(self.profile(x)? + self.adjustment(x)?)
    }

    /// `value`, with points where the adjustment is undefined mapped to −∞.
    fn value_or_excluded(&self, x: f64) -> f64 {
        match self.value(x) {
            Ok(v) if v.is_finite() => v,
            Ok(_) | Err(Error::AdjustmentUndefined { .. }) | Err(Error::Boundary(_)) => {
                self.inadmissible.set(self.inadmissible.get() + 1);
                f64::NEG_INFINITY
            }
            Err(_) => f64::NAN,
        }
    }

    /// Maximizes the objective over the interest parameter.
    ///
    /// The profile maximum is the MLE itself. Adjusted objectives are
    /// maximized locally, climbing from the MLE on the log scale; points
    /// where j_ββ, Ĭ or I is not positive are excluded.
    pub fn maximize(&self, tol: &Tolerance) -> Result<FitResult> {
        let label = format!("{}_{}", self.kind.label(), self.interest);
        if self.kind == ObjectiveKind::Profile {
            return Ok(FitResult {
                estimator: label,
                params: self.mle,
                objective: self.mle_loglik,
                converged: true,
                iterations: 0,
                gradient_norm: 0.0,
            });
        }
        self.inadmissible.set(0);
        let x0 = self.mle_component();
        let res = maximize_local(|x| self.value_or_excluded(x), x0, 0.05, true, tol)?;
        let x = res.argmax[0];
        let params = match self.interest {
            InterestParameter::Alpha => BsParams::new(x, self.mle.beta)?,
            InterestParameter::Beta => BsParams::new(restricted_alpha_mle(self.sample, x)?, x)?,
        };
        Ok(FitResult {
            estimator: label,
            params,
            objective: res.value,
            converged: res.converged,
            iterations: res.iterations,
            gradient_norm: 0.0,
        })
    }

    /// Points excluded during the last call to [`maximize`](Self::maximize).
    pub fn inadmissible_evaluations(&self) -> usize {
        self.inadmissible.get()
    }
}

fn positive(at: f64, term: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::AdjustmentUndefined { at, term, value })
    }
}

fn beta_symmetric_factor(beta: f64, beta_hat: f64) -> f64 {
    beta_hat / beta + beta / beta_hat
}

fn severini_i_beta_base(sample: &Sample, beta: f64, mle: &BsParams) -> Result<f64> {
    mle.validate()?;
    let a = restricted_alpha_mle(sample, beta)?;
    if a == 0.0 {
        return Err(Error::Boundary("restricted shape estimate is zero"));
    }
    Ok(sample.len() as f64 * mle.alpha / a.powi(3))
}

/// E_{θ₀}{ℓ_α(α, β) ℓ_α(θ₀)} for n observations, in closed form:
/// n α₀ (β₀/β + β/β₀) / α³.
pub fn severini_i_beta_at(n: usize, alpha: f64, beta: f64, at: &BsParams) -> Result<f64> {
    BsParams::new(alpha, beta)?;
    at.validate()?;
    Ok(n as f64 * at.alpha / alpha.powi(3) * beta_symmetric_factor(beta, at.beta))
}

fn objective(
    sample: &Sample,
    interest: InterestParameter,
    kind: ObjectiveKind,
) -> Result<AdjustedObjective<'_>> {
    AdjustedObjective::new(sample, interest, kind, AdjustmentForm::Analytic)
}

pub fn profile_ll_alpha(sample: &Sample, alpha: f64) -> Result<f64> {
    objective(sample, InterestParameter::Alpha, ObjectiveKind::Profile)?.value(alpha)
}

/// ℓ_CR(α) = ℓ_p(α) − ½ log j_ββ(α, β̂_α).
pub fn cr_ll_alpha(sample: &Sample, alpha: f64) -> Result<f64> {
    objective(sample, InterestParameter::Alpha, ObjectiveKind::CoxReid)?.value(alpha)
}

/// ℓ_BN(α) = ℓ_p(α) + ½ log j_ββ(α, β̂_α) − log Ĭ(α).
pub fn bn_ll_alpha(sample: &Sample, alpha: f64) -> Result<f64> {
    objective(sample, InterestParameter::Alpha, ObjectiveKind::BarndorffNielsen)?.value(alpha)
}

pub fn profile_ll_beta(sample: &Sample, beta: f64) -> Result<f64> {
    objective(sample, InterestParameter::Beta, ObjectiveKind::Profile)?.value(beta)
}

/// ℓ_CR(β) = ℓ_p(β) + log α̂_β. The β-free −½ log(2n) of the generic
/// −½ log j_αα form is dropped.
pub fn cr_ll_beta(sample: &Sample, beta: f64) -> Result<f64> {
    objective(sample, InterestParameter::Beta, ObjectiveKind::CoxReid)?.value(beta)
}

/// ℓ_BN(β) = ℓ_p(β) + ½ log j_αα(α̂_β, β) − log I(α̂_β, β; α̂, β̂).
pub fn bn_ll_beta(sample: &Sample, beta: f64) -> Result<f64> {
    objective(sample, InterestParameter::Beta, ObjectiveKind::BarndorffNielsen)?.value(beta)
}

/// A_j = (t^{-1/2}β̂^{-1/2} + 3β̂^{1/2}t^{-3/2}) / (t^{-1/2}β̂^{1/2} + β̂^{3/2}t^{-3/2}),
/// simplified to (t + 3β̂) / (β̂(t + β̂)).
fn a_coef(t: f64, b: f64) -> f64 {
    (t + 3.0 * b) / (b * (t + b))
}

fn b_coef(t: f64, b: f64) -> f64 {
    t / (b * b) - 1.0 / t
}

struct AbSums {
    a: f64,
    a2: f64,
    b: f64,
    b2: f64,
    ab: f64,
}

fn ab_sums(sample: &Sample, b: f64) -> AbSums {
    let mut s = AbSums { a: 0.0, a2: 0.0, b: 0.0, b2: 0.0, ab: 0.0 };
    for &t in sample.values() {
        let (a, bj) = (a_coef(t, b), b_coef(t, b));
        s.a += a;
        s.a2 += a * a;
        s.b += bj;
        s.b2 += bj * bj;
        s.ab += a * bj;
    }
    s
}

/// Severini's empirical-covariance approximation Ĭ in closed form:
///
/// n/β̂² − ΣA/β̂ + ¼[ΣA² + ΣB²/(α²α̂²)] + ¼(1/α² + 1/α̂²)(ΣAB − (2/β̂)ΣB).
///
/// The signs of the two bracketed groups are those obtained by expanding the
/// product of per-observation scores.
pub fn severini_ibreve_alpha(sample: &Sample, alpha: f64, mle: &BsParams) -> Result<f64> {
    BsParams::new(alpha, mle.beta)?;
    mle.validate()?;
    let (n, b, ah) = (sample.len() as f64, mle.beta, mle.alpha);
    let s = ab_sums(sample, b);
    let inv = 1.0 / (alpha * alpha) + 1.0 / (ah * ah);
    Ok(n / (b * b) - s.a / b
        + 0.25 * (s.a2 + s.b2 / (alpha * alpha * ah * ah))
        + 0.25 * inv * (s.ab - 2.0 / b * s.b))
}

/// The same closed form with the minus signs on both bracketed groups, as
/// typeset. Kept to quantify the discrepancy.
pub fn severini_ibreve_alpha_printed(sample: &Sample, alpha: f64, mle: &BsParams) -> Result<f64> {
    BsParams::new(alpha, mle.beta)?;
    mle.validate()?;
    let (n, b, ah) = (sample.len() as f64, mle.beta, mle.alpha);
    let s = ab_sums(sample, b);
    let inv = 1.0 / (alpha * alpha) + 1.0 / (ah * ah);
    Ok(n / (b * b) - s.a / b
        - 0.25 * (s.a2 + s.b2 / (alpha * alpha * ah * ah))
        - 0.25 * inv * (s.ab - 2.0 / b * s.b))
}

/// Σⱼ ℓ_β⁽ʲ⁾(α, β̂_α) ℓ_β⁽ʲ⁾(α̂, β̂) from per-observation scores.
pub fn severini_ibreve_alpha_generic(sample: &Sample, alpha: f64, mle: &BsParams) -> Result<f64> {
    let beta_alpha = restricted_beta_mle(sample, alpha)?;
    let at = BsParams::new(alpha, beta_alpha)?;
    let mut total = 0.0;
    for &t in sample.values() {
        total += per_obs_score(t, &at)?.d_beta * per_obs_score(t, mle)?.d_beta;
    }
    Ok(total)
}

/// Severini's expected-covariance approximation for β interest:
/// I = (n α̂ / α̂_β³)(β̂/β + β/β̂).
pub fn severini_i_beta(sample: &Sample, beta: f64, mle: &BsParams) -> Result<f64> {
    Ok(severini_i_beta_base(sample, beta, mle)? * beta_symmetric_factor(beta, mle.beta))
}

/// Maximizer of the selected objective, with the analytic adjustment form.
pub fn adjusted_mle(sample: &Sample, interest: InterestParameter, kind: ObjectiveKind) -> Result<FitResult> {
    adjusted_mle_with(sample, interest, kind, AdjustmentForm::Analytic, &Tolerance::default())
}

pub fn adjusted_mle_with(
    sample: &Sample,
    interest: InterestParameter,
    kind: ObjectiveKind,
    form: AdjustmentForm,
    tol: &Tolerance,
) -> Result<FitResult> {
    AdjustedObjective::new(sample, interest, kind, form)?.maximize(tol)
}
