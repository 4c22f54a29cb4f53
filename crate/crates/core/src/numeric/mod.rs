//! Special functions, root finding and the optimizers used by the
//! statistical modules.

mod optimize;
mod roots;
mod special;

pub use optimize::{
    finite_diff_first, finite_diff_second, maximize_local, maximize_quasi_newton, maximize_scalar,
};
pub use roots::find_root_bracketed;
pub use special::{
    chisq1_quantile, chisq1_sf, chisq1_upper_quantile, std_normal_cdf, std_normal_pdf,
    std_normal_quantile,
};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Argument tolerance.
    pub abs_x: f64,
    /// Relative objective tolerance.
    pub rel_f: f64,
    pub max_iter: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_x: 1e-10,
            rel_f: 1e-12,
            max_iter: 200,
        }
    }
}

impl Tolerance {
    /// Gradient-norm threshold used by the quasi-Newton maximizer: √rel_f.
    pub fn gradient_threshold(&self) -> f64 {
        self.rel_f.sqrt()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimResult {
    pub argmax: Vec<f64>,
    pub value: f64,
    pub converged: bool,
    pub iterations: usize,
    /// Zero for derivative-free searches.
    pub gradient_norm: f64,
}
