//! Likelihood-ratio tests: plain, Cox–Reid, Barndorff-Nielsen and
//! Bartlett-corrected.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numeric::{chisq1_sf, Tolerance};
use crate::profile::{AdjustedObjective, AdjustmentForm, InterestParameter, ObjectiveKind};
use crate::sample::Sample;

/// Statistics within this much below zero are rounding noise and clamp to 0.
pub const NEGATIVE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TestKind {
    #[serde(rename = "LR")]
    Lr,
    #[serde(rename = "LR_CR")]
    LrCr,
    #[serde(rename = "LR_BN")]
    LrBn,
    #[serde(rename = "LR_Bartlett")]
    LrBartlett,
}

impl TestKind {
    pub const ALL: [TestKind; 4] = [TestKind::Lr, TestKind::LrCr, TestKind::LrBn, TestKind::LrBartlett];

    pub fn name(&self) -> &'static str {
        match self {
            TestKind::Lr => "LR",
            TestKind::LrCr => "LR_CR",
            TestKind::LrBn => "LR_BN",
            TestKind::LrBartlett => "LR_Bartlett",
        }
    }

    pub fn objective(&self) -> ObjectiveKind {
        match self {
            TestKind::Lr | TestKind::LrBartlett => ObjectiveKind::Profile,
            TestKind::LrCr => ObjectiveKind::CoxReid,
            TestKind::LrBn => ObjectiveKind::BarndorffNielsen,
        }
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestKind {
    type Err = Error;

    /// Accepts the display names and the short forms `lr`, `cr`, `bn`,
    /// `bartlett`.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lr" => Ok(TestKind::Lr),
            "cr" | "lr_cr" => Ok(TestKind::LrCr),
            "bn" | "lr_bn" => Ok(TestKind::LrBn),
            "bartlett" | "lr_bartlett" | "lr*" => Ok(TestKind::LrBartlett),
            _ => Err(Error::Config(format!("unknown test statistic '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestSpec {
    pub interest: InterestParameter,
    pub null_value: f64,
    pub kind: TestKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub spec: TestSpec,
    pub statistic: f64,
    pub p_value: f64,
    /// Maximizer of the objective the statistic is built from.
    pub unrestricted_estimate: f64,
    /// Objective value at the null.
    pub restricted_objective_value: f64,
    /// True when a slightly negative statistic was clamped to zero.
    #[serde(default)]
    pub clamped: bool,
}

/// Tabulated Bartlett correction constants c(α₀): LR* = LR / (1 + c/n).
pub const BARTLETT_TABLE: [(f64, f64); 6] = [
    (0.1, 4.3918),
    (0.25, 3.2537),
    (0.5, 3.0414),
    (0.75, 2.5924),
    (1.0, 2.0307),
    (2.0, -0.0445),
];

/// Divisor 1 + c(α₀)/n. Only the tabulated α₀ are supported.
pub fn bartlett_constant(alpha0: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Config("sample size must be >= 1".into()));
    }
    BARTLETT_TABLE
        .iter()
        .find(|(a, _)| (a - alpha0).abs() <= 1e-12 * a)
        .map(|(_, c)| 1.0 + c / n as f64)
        .ok_or(Error::UnsupportedNull(alpha0))
}

/// Runs one test with the analytic adjustment form.
pub fn lr_test(sample: &Sample, spec: &TestSpec) -> Result<TestResult> {
    lr_test_with(sample, spec, AdjustmentForm::Analytic, &Tolerance::default())
}

pub fn lr_test_with(
    sample: &Sample,
    spec: &TestSpec,
    form: AdjustmentForm,
    tol: &Tolerance,
) -> Result<TestResult> {
    let objective = AdjustedObjective::new(sample, spec.interest, spec.kind.objective(), form)?;
    lr_test_on(&objective, spec, tol)
}

/// Runs a test against an already constructed objective, so callers that
/// test several nulls reuse the joint MLE.
pub fn lr_test_on(objective: &AdjustedObjective<'_>, spec: &TestSpec, tol: &Tolerance) -> Result<TestResult> {
    if !(spec.null_value.is_finite() && spec.null_value > 0.0) {
        return Err(domain("null value must be finite and > 0", spec.null_value));
    }
    if spec.interest != objective.interest() || spec.kind.objective() != objective.kind() {
        return Err(Error::Internal("test spec does not match the objective".into()));
    }
    let divisor = if spec.kind == TestKind::LrBartlett {
        if spec.interest != InterestParameter::Alpha {
            return Err(Error::UnsupportedNull(spec.null_value));
        }
        Some(bartlett_constant(spec.null_value, objective.sample().len())?)
    } else {
        None
    };
    let fit = objective.maximize(tol)?;
    let restricted = objective.value(spec.null_value)?;
    let unrestricted_estimate = match spec.interest {
        InterestParameter::Alpha => fit.params.alpha,
        InterestParameter::Beta => fit.params.beta,
    };
    let mut statistic = 2.0 * (fit.objective - restricted);
    let mut clamped = false;
    if statistic < 0.0 {
        if statistic < -NEGATIVE_SLACK {
            return Err(Error::Internal(format!(
                "negative {} statistic {statistic:e}: the maximizer missed the maximum",
                spec.kind
            )));
        }
        statistic = 0.0;
        clamped = true;
    }
    if let Some(d) = divisor {
        statistic /= d;
    }
    Ok(TestResult {
        spec: *spec,
        statistic,
        p_value: chisq1_sf(statistic)?,
        unrestricted_estimate,
        restricted_objective_value: restricted,
        clamped,
    })
}
