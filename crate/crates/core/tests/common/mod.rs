#![allow(dead_code)]

use bsinfer::dist::{cdf, sample};
use bsinfer::{BsParams, RngStream};

/// Kolmogorov–Smirnov distance between the empirical cdf of `values` and `f`.
pub fn ks_distance(values: &[f64], f: impl Fn(f64) -> f64) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len() as f64;
    v.iter()
        .enumerate()
        .map(|(i, &x)| {
            let u = f(x);
            (u - i as f64 / n).max((i + 1) as f64 / n - u)
        })
        .fold(0.0, f64::max)
}

/// Asymptotic 1% critical value of the one-sample KS distance.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.6276 / (n as f64).sqrt()
}

/// KS distance of `n` draws from `p` against its cdf.
pub fn sampler_ks(p: &BsParams, n: usize, seed: u64) -> f64 {
    let mut rng = RngStream::new(seed, 0);
    let data = sample(n, p, &mut rng).unwrap();
    ks_distance(data.values(), |t| cdf(t, p).unwrap())
}

/// KS distance of reciprocals of draws from (α, β) against the (α, 1/β) cdf.
pub fn reciprocal_ks(p: &BsParams, n: usize, seed: u64) -> f64 {
    let mut rng = RngStream::new(seed, 0);
    let data = sample(n, p, &mut rng).unwrap();
    let q = BsParams::new(p.alpha, 1.0 / p.beta).unwrap();
    let inv: Vec<f64> = data.values().iter().map(|t| 1.0 / t).collect();
    ks_distance(&inv, |t| cdf(t, &q).unwrap())
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}
