use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Strictly positive failure times with cached arithmetic mean `s` and
/// harmonic mean `r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Sample {
    values: Vec<f64>,
    mean: f64,
    harmonic_mean: f64,
    sum_ln: f64,
}

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DegenerateSample("empty sample"));
        }
        if let Some(&bad) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(domain("failure times must be finite and > 0", bad));
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let harmonic_mean = n / values.iter().map(|t| t.recip()).sum::<f64>();
        let sum_ln = values.iter().map(|t| t.ln()).sum();
        Ok(Sample {
            values,
            mean,
            harmonic_mean,
            sum_ln,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Arithmetic mean `s`.
    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Harmonic mean `r`.
    pub fn harmonic_mean(&self) -> f64 {
        self.harmonic_mean
    }

    /// Σ log tᵢ.
    pub fn sum_ln(&self) -> f64 {
        self.sum_ln
    }

    pub fn is_constant(&self) -> bool {
        let first = self.values[0];
        self.values.iter().all(|&v| v == first)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn sorted_values(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Every observation multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Result<Sample> {
        Sample::new(self.values.iter().map(|v| v * c).collect())
    }

    /// Elementwise reciprocals.
    pub fn reciprocal(&self) -> Sample {
        Sample::new(self.values.iter().map(|v| v.recip()).collect())
            .expect("reciprocals of positive values are positive")
    }

    /// The sample with observation `index` removed.
    pub fn without(&self, index: usize) -> Result<Sample> {
        if index >= self.len() {
            return Err(Error::Config(format!(
                "index {index} out of range for a sample of {}",
                self.len()
            )));
        }
        let mut v = self.values.clone();
        v.remove(index);
        Sample::new(v)
    }

    pub(crate) fn require_len(&self, min: usize) -> Result<()> {
        if self.len() < min {
            return Err(Error::DegenerateSample("too few observations"));
        }
        Ok(())
    }
}

impl TryFrom<Vec<f64>> for Sample {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Sample::new(values)
    }
}

impl From<Sample> for Vec<f64> {
    fn from(s: Sample) -> Vec<f64> {
        s.values
    }
}
