//! Acceptance suite. Prints one PASS/FAIL line per criterion followed by
//! its individual checks, and exits non-zero if any criterion fails.

#![allow(clippy::type_complexity)]

mod common;

use std::time::Instant;

use bsinfer::datasets::{fatigue_31000psi, mccool_sustainers};
use bsinfer::dist::sample;
use bsinfer::estimators::{estimate, EstimatorKind, EstimatorOptions};
use bsinfer::harness::{
    default_probability_grid, presets, quantile_discrepancy_series, run_point_estimation_study,
    run_power_study, run_size_study, write_size_power_csv, Execution, ExperimentConfig,
};
use bsinfer::likelihood::{
    full_mle, loglik, obs_info_alpha, obs_info_beta, obs_info_beta_printed, restricted_alpha_mle,
    restricted_beta_mle, score,
};
use bsinfer::lrtest::{lr_test_with, TestKind, TestSpec};
use bsinfer::numeric::{finite_diff_first, finite_diff_second, Tolerance};
use bsinfer::profile::{
    adjusted_mle_with, severini_i_beta_at, severini_ibreve_alpha, severini_ibreve_alpha_generic,
    AdjustmentForm, InterestParameter, ObjectiveKind,
};
use bsinfer::{BsParams, RngStream, Sample};

use common::{ks_critical_1pct, reciprocal_ks, rel_err, sampler_ks};

const REPS: usize = 10_000;
const SEED: u64 = 20_240_917;
/// Extra seeds reported (never asserted) for the Monte Carlo criteria whose
/// tolerance ignores the noise of estimated critical values.
const OTHER_SEEDS: [u64; 3] = [1, 2, 3];

/// Absolute tolerances, as stated per criterion.
const TOL_MLE_ALPHA: f64 = 1e-4;
const TOL_MLE_BETA: f64 = 1e-3;
const TOL_STATISTIC: f64 = 1e-3;
const TOL_MCCOOL_ALPHA: f64 = 5e-4;
const TOL_MEAN: f64 = 0.005;
const TOL_MEAN_F34: f64 = 0.007;
const TOL_MSE: f64 = 0.0010;
const MAX_F4_RB_PERCENT: f64 = 1.5;
const TOL_GRADIENT: f64 = 1e-5;
const TOL_INFO: f64 = 1e-4;
const TOL_IBREVE: f64 = 1e-6;
const TOL_ALPHA_FREE: f64 = 1e-10;
const TOL_SCALE: f64 = 1e-6;
/// Monte Carlo standard errors allowed in the Severini cross-check.
const MC_SIGMAS: f64 = 3.0;

struct Check {
    label: String,
    pass: bool,
    detail: String,
}

#[derive(Default)]
struct Criterion {
    checks: Vec<Check>,
    info: Vec<String>,
}

impl Criterion {
    fn near(&mut self, label: impl Into<String>, value: f64, target: f64, tol: f64) {
        self.checks.push(Check {
            label: label.into(),
            pass: (value - target).abs() <= tol,
            detail: format!("{value:.5} vs {target} ± {tol}"),
        });
    }

    fn holds(&mut self, label: impl Into<String>, pass: bool, detail: String) {
        self.checks.push(Check {
            label: label.into(),
            pass,
            detail,
        });
    }

    fn info(&mut self, line: String) {
        self.info.push(line);
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn opts(form: AdjustmentForm) -> EstimatorOptions {
    EstimatorOptions {
        form,
        ..EstimatorOptions::default()
    }
}

fn stat(data: &Sample, interest: InterestParameter, null_value: f64, kind: TestKind, form: AdjustmentForm) -> f64 {
    let spec = TestSpec {
        interest,
        null_value,
        kind,
    };
    lr_test_with(data, &spec, form, &Tolerance::default()).unwrap().statistic
}

fn applications() -> Criterion {
    use InterestParameter::{Alpha, Beta};
    use TestKind::{Lr, LrBn, LrCr};
    let mut c = Criterion::default();
    let published = AdjustmentForm::Published;
    let tol = Tolerance::default();
    for (name, data, targets) in [
        ("fatigue", fatigue_31000psi(), (0.17038, 0.17125, 0.17122, TOL_MLE_ALPHA)),
        ("mccool", mccool_sustainers(), (0.2825, 0.2989, 0.2973, TOL_MCCOOL_ALPHA)),
    ] {
        let mle = full_mle(&data).unwrap().params;
        c.near(format!("{name} alpha_hat"), mle.alpha, targets.0, targets.3);
        let cr = adjusted_mle_with(&data, Alpha, ObjectiveKind::CoxReid, published, &tol).unwrap();
        let bn = adjusted_mle_with(&data, Alpha, ObjectiveKind::BarndorffNielsen, published, &tol).unwrap();
        c.near(format!("{name} alpha_CR"), cr.params.alpha, targets.1, targets.3);
        c.near(format!("{name} alpha_BN"), bn.params.alpha, targets.2, targets.3);
        for kind in [ObjectiveKind::CoxReid, ObjectiveKind::BarndorffNielsen] {
            let a = adjusted_mle_with(&data, Alpha, kind, AdjustmentForm::Analytic, &tol).unwrap();
            c.info(format!("{name} alpha_{} (analytic form) = {:.5}", kind.label(), a.params.alpha));
        }
        if name == "fatigue" {
            c.near("fatigue beta_hat", mle.beta, 131.8188, TOL_MLE_BETA);
        }
    }
    let fatigue = fatigue_31000psi();
    let mccool = mccool_sustainers();
    let cases: [(&str, &Sample, InterestParameter, f64, [f64; 3]); 3] = [
        ("fatigue alpha0=0.15", &fatigue, Alpha, 0.15, [3.5771, 3.8421, 3.8351]),
        ("fatigue beta0=125", &fatigue, Beta, 125.0, [9.4279, 9.3338, 9.2397]),
        ("mccool beta0=180", &mccool, Beta, 180.0, [2.9417, 2.6415, 2.3414]),
    ];
    for (label, data, interest, null, targets) in cases {
        for (kind, target) in [Lr, LrCr, LrBn].into_iter().zip(targets) {
            c.near(format!("{label} {kind}"), stat(data, interest, null, kind, published), target, TOL_STATISTIC);
            if kind != Lr {
                let a = stat(data, interest, null, kind, AdjustmentForm::Analytic);
                c.info(format!("{label} {kind} (analytic form) = {a:.4}"));
            }
        }
    }
    c
}

fn point_estimation() -> Criterion {
    let mut c = Criterion::default();
    let mut cfg = presets::table6(0.5, 10).unwrap();
    cfg.replications = REPS;
    cfg.master_seed = SEED;
    let rep = run_point_estimation_study(&cfg).unwrap();
    let s = |k: EstimatorKind| rep.estimators[&k].stats;
    for (kind, mean, mse) in [
        (EstimatorKind::Mle, 0.4625, 0.0135),
        (EstimatorKind::ProfileCrAlpha, 0.4892, 0.0138),
        (EstimatorKind::ProfileBnAlpha, 0.4893, 0.0138),
    ] {
        c.near(format!("{kind} mean"), s(kind).mean, mean, TOL_MEAN);
        c.near(format!("{kind} MSE"), s(kind).mse, mse, TOL_MSE);
    }
    c.near("MME mean", s(EstimatorKind::Mme).mean, 0.4625, TOL_MEAN);
    c.near("F3 mean", s(EstimatorKind::F3).mean, 0.5065, TOL_MEAN_F34);
    c.near("F4 mean", s(EstimatorKind::F4).mean, 0.5033, TOL_MEAN_F34);
    let rb = s(EstimatorKind::F4).relative_bias_percent;
    c.holds("F4 |RB| <= 1.5%", rb.abs() <= MAX_F4_RB_PERCENT, format!("{rb:.3}%"));
    for (kind, e) in &rep.estimators {
        let st = e.stats;
        c.info(format!(
            "{kind:<16} mean {:.4} bias {:+.4} var {:.4} mse {:.4} rb {:+.2}% skew {:.3} kurt {:.3} failures {}",
            st.mean, st.bias, st.variance, st.mse, st.relative_bias_percent, st.skewness, st.kurtosis, e.failures
        ));
    }
    c
}

fn size_config(cfg: ExperimentConfig, form: AdjustmentForm) -> ExperimentConfig {
    ExperimentConfig {
        replications: REPS,
        master_seed: SEED,
        form,
        ..cfg
    }
}

fn alpha_size() -> Criterion {
    use TestKind::*;
    let mut c = Criterion::default();
    let cases: [(f64, usize, Vec<(TestKind, f64, f64)>); 3] = [
        (0.5, 10, vec![(Lr, 7.60, 0.8), (LrCr, 5.18, 0.7), (LrBn, 5.20, 0.7), (LrBartlett, 3.96, 0.7)]),
        (2.0, 10, vec![(Lr, 9.44, 0.9), (LrCr, 5.20, 0.7), (LrBartlett, 9.40, 0.9)]),
        (0.5, 50, vec![(Lr, 5.53, 0.7), (LrCr, 5.20, 0.7)]),
    ];
    for (alpha, n, targets) in cases {
        let mut cfg = size_config(presets::table2(alpha, n).unwrap(), AdjustmentForm::Analytic);
        cfg.nominal_levels = vec![0.05];
        cfg.statistics = targets.iter().map(|t| t.0).collect();
        let rep = run_size_study(&cfg).unwrap();
        for (kind, target, tol) in targets {
            let rate = rep.statistics[&kind].rejection_at(0.05).unwrap();
            c.near(format!("alpha={alpha} n={n} {kind} at 5%"), rate, target, tol);
        }
        let missing: Vec<TestKind> = TestKind::ALL.into_iter().filter(|k| !cfg.statistics.contains(k)).collect();
        if !missing.is_empty() {
            cfg.statistics = missing;
            match run_size_study(&cfg) {
                Ok(rep) => {
                    for (kind, s) in &rep.statistics {
                        c.info(format!("alpha={alpha} n={n} {kind} at 5% = {:.2}", s.rejection_at(0.05).unwrap()));
                    }
                }
                Err(e) => c.info(format!("alpha={alpha} n={n}: {e}")),
            }
        }
    }
    c
}

fn beta_size() -> Criterion {
    use TestKind::*;
    let mut c = Criterion::default();
    let mut rates = Vec::new();
    for form in [AdjustmentForm::Published, AdjustmentForm::Analytic] {
        let mut cfg = size_config(presets::table4(1.0, 10).unwrap(), form);
        cfg.nominal_levels = vec![0.10];
        let rep = run_size_study(&cfg).unwrap();
        let r: Vec<f64> = [Lr, LrCr, LrBn]
            .iter()
            .map(|k| rep.statistics[k].rejection_at(0.10).unwrap())
            .collect();
        if form == AdjustmentForm::Published {
            rates = r;
        } else {
            c.info(format!(
                "analytic form at 10%: LR {:.2} LR_CR {:.2} LR_BN {:.2}",
                r[0], r[1], r[2]
            ));
        }
    }
    c.near("LR at 10%", rates[0], 12.37, 1.0);
    c.near("LR_CR at 10%", rates[1], 10.18, 1.0);
    c.near("LR_BN at 10%", rates[2], 8.01, 0.9);
    for seed in OTHER_SEEDS {
        let mut cfg = size_config(presets::table4(1.0, 10).unwrap(), AdjustmentForm::Published);
        cfg.nominal_levels = vec![0.10];
        cfg.master_seed = seed;
        let rep = run_size_study(&cfg).unwrap();
        let r = |k: TestKind| rep.statistics[&k].rejection_at(0.10).unwrap();
        c.info(format!("seed {seed}: LR {:.2} LR_CR {:.2} LR_BN {:.2}", r(Lr), r(LrCr), r(LrBn)));
    }
    let closest = (rates[1] - 10.0).abs() < (rates[0] - 10.0).abs() && (rates[1] - 10.0).abs() < (rates[2] - 10.0).abs();
    c.holds(
        "LR liberal, BN conservative, CR closest",
        rates[0] > 10.0 && rates[2] < 10.0 && closest,
        format!("{:.2} / {:.2} / {:.2}", rates[0], rates[1], rates[2]),
    );
    c
}

fn power() -> Criterion {
    use TestKind::*;
    let mut c = Criterion::default();
    let studies = [
        (presets::table3(0.10, 10).unwrap(), 0.20, AdjustmentForm::Analytic, vec![(Lr, 77.86), (LrCr, 83.81), (LrBn, 83.81)], 1.5),
        (presets::table5(1.0, 10).unwrap(), 2.0, AdjustmentForm::Published, vec![(Lr, 58.54), (LrCr, 58.05), (LrBn, 57.43)], 1.6),
    ];
    for ((size, _), alt, form, targets, tol) in studies {
        let mut size = size_config(size, form);
        size.statistics = vec![Lr, LrCr, LrBn];
        size.nominal_levels = vec![0.05];
        let interest = size.interest;
        let rates = |seed: u64| {
            let size = ExperimentConfig {
                master_seed: seed,
                ..size.clone()
            };
            let rep = run_size_study(&size).unwrap();
            let power = ExperimentConfig {
                alternative_grid: vec![alt],
                study_id: format!("{}-power", size.study_id),
                ..size
            };
            let out = run_power_study(&power, &rep.critical_values()).unwrap();
            [Lr, LrCr, LrBn].map(|k| out[0].statistics[&k].rejection_at(0.05).unwrap())
        };
        for ((kind, target), rate) in targets.into_iter().zip(rates(SEED)) {
            c.near(format!("{interest}={alt} {kind} at 5%"), rate, target, tol);
        }
        for seed in OTHER_SEEDS {
            let r = rates(seed);
            c.info(format!("{interest}={alt} seed {seed}: LR {:.2} LR_CR {:.2} LR_BN {:.2}", r[0], r[1], r[2]));
        }
    }
    c
}

fn figures() -> Criterion {
    use TestKind::*;
    let mut c = Criterion::default();
    let mut cfg = size_config(presets::table2(0.1, 10).unwrap(), AdjustmentForm::Analytic);
    cfg.statistics = vec![Lr, LrCr, LrBn];
    let rep = run_size_study(&cfg).unwrap();
    let grid = default_probability_grid();
    let series = quantile_discrepancy_series(&rep, &grid).unwrap();
    let lr = &series[&Lr];
    let mid: Vec<f64> = grid
        .iter()
        .zip(lr)
        .filter(|(p, _)| (0.3 - 1e-12..=0.9 + 1e-12).contains(*p))
        .map(|(_, (_, d))| *d)
        .collect();
    let mean = mid.iter().sum::<f64>() / mid.len() as f64;
    c.holds("LR mean discrepancy over p in [0.3, 0.9] in [0.12, 0.24]", (0.12..=0.24).contains(&mean), format!("{mean:.4}"));
    for kind in [LrCr, LrBn] {
        let adj = &series[&kind];
        let better = adj.iter().zip(lr).filter(|(a, l)| a.1.abs() < l.1.abs()).count();
        let share = better as f64 / grid.len() as f64;
        c.holds(format!("{kind} |discrepancy| below LR's at >= 90% of points"), share >= 0.9, format!("{:.1}%", 100.0 * share));
    }
    c
}

fn random_case(rng: &mut RngStream) -> (BsParams, Sample) {
    let alpha = 0.1 * 30f64.powf(rng.next_open01());
    let beta = 0.1 * 100f64.powf(rng.next_open01());
    let n = 5 + (rng.next_u64() % 26) as usize;
    let truth = BsParams::new(alpha, beta).unwrap();
    let data = sample(n, &truth, rng).unwrap();
    // Evaluate away from the truth so the score is not near zero.
    let at = BsParams::new(alpha * (0.7 + 0.6 * rng.next_open01()), beta * (0.7 + 0.6 * rng.next_open01())).unwrap();
    (at, data)
}

fn properties() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = RngStream::new(SEED, 1);

    // (a) score against central differences
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (p, data) = random_case(&mut rng);
        let g = score(&data, &p).unwrap();
        let fa = finite_diff_first(|a| loglik(&data, &BsParams { alpha: a, beta: p.beta }).unwrap(), p.alpha, 1e-5 * p.alpha);
        let fb = finite_diff_first(|b| loglik(&data, &BsParams { alpha: p.alpha, beta: b }).unwrap(), p.beta, 1e-5 * p.beta);
        worst = worst.max((g.d_alpha - fa).abs() / fa.abs().max(1.0));
        worst = worst.max((g.d_beta - fb).abs() / fb.abs().max(1.0));
    }
    c.holds("(a) score vs finite differences", worst <= TOL_GRADIENT, format!("worst relative error {worst:.2e}"));

    // (b) observed information against second differences
    let (mut worst_b, mut worst_a, mut worst_printed) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100 {
        let (p, data) = random_case(&mut rng);
        let fd = -finite_diff_second(|b| loglik(&data, &BsParams { alpha: p.alpha, beta: b }).unwrap(), p.beta, 1e-3 * p.beta);
        worst_b = worst_b.max(rel_err(obs_info_beta(&data, p.alpha, p.beta).unwrap(), fd));
        worst_printed = worst_printed.max(rel_err(obs_info_beta_printed(&data, p.alpha, p.beta).unwrap(), fd));
        let a = restricted_alpha_mle(&data, p.beta).unwrap();
        let fd = -finite_diff_second(|x| loglik(&data, &BsParams { alpha: x, beta: p.beta }).unwrap(), a, 1e-3 * a);
        worst_a = worst_a.max(rel_err(obs_info_alpha(&data, a, p.beta).unwrap(), fd));
    }
    c.holds("(b) j_beta_beta vs second differences", worst_b <= TOL_INFO, format!("{worst_b:.2e}"));
    c.holds("(b) j_alpha_alpha vs second differences", worst_a <= TOL_INFO, format!("{worst_a:.2e}"));
    c.info(format!("(b) printed j_beta_beta form (r in place of s): worst relative deviation {worst_printed:.3e}"));

    // (c) closed-form Ĭ against the per-observation score sum
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (p, data) = random_case(&mut rng);
        let Ok(mle) = full_mle(&data) else { continue };
        let closed = severini_ibreve_alpha(&data, p.alpha, &mle.params).unwrap();
        let generic = severini_ibreve_alpha_generic(&data, p.alpha, &mle.params).unwrap();
        worst = worst.max(rel_err(closed, generic));
    }
    c.holds("(c) Ibreve closed form vs score sum", worst <= TOL_IBREVE, format!("{worst:.2e}"));

    // (d) the restricted β̂ does not depend on α
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (_, data) = random_case(&mut rng);
        let b: Vec<f64> = [0.1, 0.5, 1.0, 2.0, 5.0]
            .iter()
            .map(|&a| restricted_beta_mle(&data, a).unwrap())
            .collect();
        for x in &b {
            worst = worst.max(rel_err(*x, b[0]));
        }
    }
    c.holds("(d) restricted beta MLE free of alpha", worst <= TOL_ALPHA_FREE, format!("{worst:.2e}"));

    // (e) sampler KS tests
    let n = 2000;
    let mut rejected = Vec::new();
    let mut k = 0;
    for alpha in [0.1, 0.5, 1.0, 2.0, 5.0] {
        for beta in [0.5, 1.0, 2.0, 10.0] {
            k += 1;
            let p = BsParams::new(alpha, beta).unwrap();
            let d = sampler_ks(&p, n, SEED + k);
            let dr = reciprocal_ks(&p, n, SEED + 100 + k);
            if d > ks_critical_1pct(n) || dr > ks_critical_1pct(n) {
                rejected.push(format!("({alpha}, {beta}): D={d:.4} D_recip={dr:.4}"));
            }
        }
    }
    c.holds("(e) KS at 1% over 20 settings and reciprocal", rejected.is_empty(), format!("rejections: {rejected:?}"));

    // (f) scale equivariance
    let data = mccool_sustainers();
    let scale = 3.7;
    let scaled = data.scaled(scale).unwrap();
    let mut bad = Vec::new();
    for kind in EstimatorKind::ALL {
        let (a, b) = (estimate(&data, kind, &opts(AdjustmentForm::Analytic)).unwrap(), estimate(&scaled, kind, &opts(AdjustmentForm::Analytic)).unwrap());
        if rel_err(b.alpha, a.alpha) > TOL_SCALE || rel_err(b.beta, scale * a.beta) > TOL_SCALE {
            bad.push(kind.to_string());
        }
    }
    for kind in [TestKind::Lr, TestKind::LrCr, TestKind::LrBn, TestKind::LrBartlett] {
        let f = AdjustmentForm::Analytic;
        let sa = stat(&data, InterestParameter::Alpha, 0.5, kind, f);
        let sb = stat(&scaled, InterestParameter::Alpha, 0.5, kind, f);
        if (sa - sb).abs() > TOL_SCALE * sa.max(1.0) {
            bad.push(format!("{kind} alpha"));
        }
        if kind != TestKind::LrBartlett {
            let sa = stat(&data, InterestParameter::Beta, 180.0, kind, f);
            let sb = stat(&scaled, InterestParameter::Beta, 180.0 * scale, kind, f);
            if (sa - sb).abs() > TOL_SCALE * sa.max(1.0) {
                bad.push(format!("{kind} beta"));
            }
        }
    }
    c.holds("(f) scale equivariance of estimators and tests", bad.is_empty(), format!("violations: {bad:?}"));

    // (g) determinism across worker counts
    let mut cfg = presets::table2(0.5, 10).unwrap();
    cfg.replications = 500;
    cfg.master_seed = SEED;
    let csv_for = |execution: Execution| {
        let cfg = ExperimentConfig { execution, ..cfg.clone() };
        let mut buf = Vec::new();
        write_size_power_csv(&[run_size_study(&cfg).unwrap()], &mut buf).unwrap();
        buf
    };
    let base = csv_for(Execution::Sequential);
    let same = [Execution::Workers(1), Execution::Workers(2), Execution::Workers(7), Execution::Parallel]
        .into_iter()
        .all(|e| csv_for(e) == base);
    c.holds("(g) byte-identical CSV across worker counts", same, format!("{} bytes", base.len()));
    c
}

fn severini_cross_check() -> Criterion {
    let mut c = Criterion::default();
    let (n, draws) = (5, 1_000_000);
    let at = BsParams::new(0.5, 1.0).unwrap();
    let (alpha, beta) = (0.55, 1.2);
    let eval = BsParams::new(alpha, beta).unwrap();
    let mut rng = RngStream::new(SEED, 8);
    let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
    for _ in 0..draws {
        let data = sample(n, &at, &mut rng).unwrap();
        let x = score(&data, &eval).unwrap().d_alpha * score(&data, &at).unwrap().d_alpha;
        sum += x;
        sum_sq += x * x;
    }
    let mean = sum / draws as f64;
    let se = ((sum_sq / draws as f64 - mean * mean) / draws as f64).sqrt();
    let closed = severini_i_beta_at(n, alpha, beta, &at).unwrap();
    let z = (mean - closed) / se;
    c.holds(
        "Monte Carlo expectation vs closed form within 3 SE",
        z.abs() <= MC_SIGMAS,
        format!("MC {mean:.5} ± {se:.5}, closed {closed:.5}, z = {z:+.2}"),
    );
    let without = n as f64 * at.alpha / alpha.powi(3);
    c.info(format!(
        "closed form without the (beta_hat/beta + beta/beta_hat) factor: {without:.5} (z = {:+.1})",
        (mean - without) / se
    ));
    c
}

fn main() {
    let criteria: [(&str, fn() -> Criterion); 8] = [
        ("1 applications", applications),
        ("2 point estimation, alpha=0.5 n=10", point_estimation),
        ("3 null rejection, alpha interest", alpha_size),
        ("4 null rejection, beta interest", beta_size),
        ("5 size-corrected power", power),
        ("6 quantile discrepancy behaviour", figures),
        ("7 property suite", properties),
        ("8 Severini I cross-check", severini_cross_check),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let c = run();
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        failed += usize::from(!c.passed());
        println!("{verdict} criterion {name} ({:.1}s)", start.elapsed().as_secs_f64());
        for check in &c.checks {
            println!("    [{}] {}: {}", if check.pass { "ok" } else { "FAIL" }, check.label, check.detail);
        }
        for line in &c.info {
            println!("    info: {line}");
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
