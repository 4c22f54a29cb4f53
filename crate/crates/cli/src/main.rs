//! `bsinfer` command-line interface.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bsinfer::datasets;
use bsinfer::estimators::{estimate, EstimatorKind, EstimatorOptions, TrimConfig};
use bsinfer::harness::{
    self, presets, CriticalValues, ExperimentConfig, PointStudyReport, SizePowerReport,
};
use bsinfer::likelihood::full_mle;
use bsinfer::lrtest::{bartlett_constant, lr_test_on, TestKind, TestSpec};
use bsinfer::numeric::Tolerance;
use bsinfer::profile::{AdjustedObjective, AdjustmentForm, InterestParameter};
use bsinfer::{BsParams, Sample};

#[derive(Parser)]
#[command(name = "bsinfer", version, about = "Likelihood inference for the Birnbaum-Saunders distribution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Point estimates of (alpha, beta) for a dataset.
    Fit(FitArgs),
    /// Likelihood-ratio tests on one parameter.
    Test(TestArgs),
    /// Monte Carlo studies.
    Simulate(SimulateArgs),
    /// Quantile-discrepancy or size-distortion series.
    Figure(FigureArgs),
}

#[derive(Args)]
struct DataArgs {
    /// Text file with one lifetime per line, or a delimited file with --column.
    #[arg(long, conflicts_with = "builtin")]
    data: Option<PathBuf>,
    /// Bundled dataset: fatigue-31000psi or mccool-sustainers.
    #[arg(long)]
    builtin: Option<String>,
    /// Column (1-based index or header name) of a delimited --data file.
    #[arg(long, requires = "data")]
    column: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write JSON instead of a table.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Write CSV instead of a table.
    #[arg(long)]
    csv: bool,
    /// Output file (standard output by default).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Analytic,
    Published,
}

impl From<FormArg> for AdjustmentForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Analytic => AdjustmentForm::Analytic,
            FormArg::Published => AdjustmentForm::Published,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InterestArg {
    Alpha,
    Beta,
}

impl From<InterestArg> for InterestParameter {
    fn from(i: InterestArg) -> Self {
        match i {
            InterestArg::Alpha => InterestParameter::Alpha,
            InterestArg::Beta => InterestParameter::Beta,
        }
    }
}

#[derive(Args)]
struct FitArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Comma-separated estimators, e.g. MLE,MME,F4,ProfileCR_alpha, or "all".
    #[arg(long, default_value = "MLE,ProfileCR_alpha,ProfileBN_alpha")]
    estimator: String,
    /// Trimming proportion for F4.
    #[arg(long, default_value_t = 0.05)]
    lambda: f64,
    #[arg(long, value_enum, default_value = "analytic")]
    form: FormArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TestArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long, value_enum)]
    interest: InterestArg,
    /// Null value of the interest parameter.
    #[arg(long, allow_hyphen_values = true)]
    null: f64,
    /// lr, cr, bn, bartlett, a comma-separated list, or all.
    #[arg(long, default_value = "all")]
    stat: String,
    #[arg(long, value_enum, default_value = "analytic")]
    form: FormArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum StudyArg {
    Point,
    Size,
    Power,
}

#[derive(Args)]
struct StudyArgs {
    /// Sample size.
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// True shape (the null for alpha-interest power studies).
    #[arg(long)]
    alpha: Option<f64>,
    /// True scale.
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long, default_value_t = harness::DEFAULT_REPLICATIONS)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated nominal levels.
    #[arg(long)]
    levels: Option<String>,
    #[arg(long, value_enum, default_value = "analytic")]
    form: FormArg,
    /// Run replications on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct SimulateArgs {
    /// Reproduce one of the six preset studies.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6), conflicts_with = "study")]
    table: Option<u8>,
    /// Study type when no --table is given.
    #[arg(long, value_enum)]
    study: Option<StudyArg>,
    #[command(flatten)]
    common: StudyArgs,
    #[arg(long, value_enum, default_value = "alpha")]
    interest: InterestArg,
    /// Null value for power studies (defaults to the true value).
    #[arg(long)]
    null: Option<f64>,
    /// Comma-separated alternatives for power studies.
    #[arg(long)]
    grid: Option<String>,
    /// Statistics for size and power studies.
    #[arg(long, default_value = "all")]
    stat: String,
    /// Estimators for point studies.
    #[arg(long, default_value = "MLE,ProfileCR_alpha,ProfileBN_alpha")]
    estimator: String,
    #[arg(long, default_value_t = 0.05)]
    lambda: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    Quantile,
    Size,
}

#[derive(Args)]
struct FigureArgs {
    #[arg(long, value_enum, default_value = "quantile")]
    kind: SeriesArg,
    #[command(flatten)]
    common: StudyArgs,
    #[arg(long, value_enum, default_value = "alpha")]
    interest: InterestArg,
    #[arg(long, default_value = "lr,cr,bn")]
    stat: String,
    /// Directory for one two-column CSV per statistic; without it a long
    /// CSV goes to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// An error with its machine-readable code.
struct Failure {
    code: &'static str,
    message: String,
}

impl From<bsinfer::Error> for Failure {
    fn from(e: bsinfer::Error) -> Self {
        Failure {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: "E_IO",
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: "E_USAGE",
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let text = e.render().to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("E_USAGE: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let outcome = match cli.command {
        Command::Fit(a) => cmd_fit(a),
        Command::Test(a) => cmd_test(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Figure(a) => cmd_figure(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}: {}", f.code, f.message.replace('\n', " "));
            ExitCode::FAILURE
        }
    }
}

fn load(args: &DataArgs) -> CliResult<Sample> {
    match (&args.data, &args.builtin) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::from(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
            Ok(match &args.column {
                Some(c) => datasets::parse_column(&text, c)?,
                None => datasets::parse(&text)?,
            })
        }
        (None, Some(name)) => Ok(datasets::builtin(name)?),
        _ => Err(usage("give exactly one of --data or --builtin")),
    }
}

fn parse_list<T: std::str::FromStr<Err = bsinfer::Error> + Copy>(text: &str, all: &[T]) -> CliResult<Vec<T>> {
    if text.eq_ignore_ascii_case("all") {
        return Ok(all.to_vec());
    }
    text.split(',')
        .map(|s| s.trim().parse::<T>().map_err(Failure::from))
        .collect()
}

fn parse_numbers(text: &str, what: &str) -> CliResult<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("cannot parse '{}' in {what}", s.trim())))
        })
        .collect()
}

fn emit(output: &OutputArgs, text: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> CliResult<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure {
            code: "E_INTERNAL",
            message: format!("json output: {e}"),
        })
}

fn utf8(buf: Vec<u8>) -> String {
    String::from_utf8(buf).expect("csv output is UTF-8")
}

fn cmd_fit(args: FitArgs) -> CliResult<()> {
    let data = load(&args.data)?;
    let kinds = parse_list(&args.estimator, &EstimatorKind::ALL)?;
    let opts = EstimatorOptions {
        trim: TrimConfig::new(args.lambda)?,
        form: args.form.into(),
        tol: Tolerance::default(),
    };
    let mut rows = Vec::new();
    for kind in kinds {
        rows.push((kind, estimate(&data, kind, &opts)?));
    }
    let text = if args.output.json {
        let items: Vec<_> = rows
            .iter()
            .map(|(k, e)| json!({"estimator": k, "alpha": e.alpha, "beta": e.beta}))
            .collect();
        to_json(&json!({"n": data.len(), "form": opts.form, "estimates": items}))?
    } else if args.output.csv {
        let mut s = String::from("estimator,alpha,beta\n");
        for (k, e) in &rows {
            s += &format!("{k},{},{}\n", e.alpha, e.beta);
        }
        s
    } else {
        let mut s = format!("n = {}, adjustment form = {}\n{:<18}{:>14}{:>16}\n", data.len(), opts.form, "estimator", "alpha", "beta");
        for (k, e) in &rows {
            s += &format!("{:<18}{:>14.6}{:>16.6}\n", k.name(), e.alpha, e.beta);
        }
        s
    };
    emit(&args.output, &text)
}

fn cmd_test(args: TestArgs) -> CliResult<()> {
    let data = load(&args.data)?;
    let interest: InterestParameter = args.interest.into();
    let mut kinds = parse_list(&args.stat, &TestKind::ALL)?;
    if args.stat.eq_ignore_ascii_case("all") {
        let tabulated = interest == InterestParameter::Alpha && bartlett_constant(args.null, data.len()).is_ok();
        kinds.retain(|k| *k != TestKind::LrBartlett || tabulated);
    }
    let fit = full_mle(&data)?;
    let tol = Tolerance::default();
    let mut results = Vec::new();
    for kind in kinds {
        let objective = AdjustedObjective::from_fit(&data, interest, kind.objective(), args.form.into(), &fit);
        let spec = TestSpec {
            interest,
            null_value: args.null,
            kind,
        };
        results.push(lr_test_on(&objective, &spec, &tol)?);
    }
    let text = if args.output.json {
        to_json(&results)?
    } else if args.output.csv {
        let mut s = String::from("statistic,interest,null,value,p_value,estimate\n");
        for r in &results {
            s += &format!("{},{},{},{},{},{}\n", r.spec.kind, interest, args.null, r.statistic, r.p_value, r.unrestricted_estimate);
        }
        s
    } else {
        let mut s = format!("H0: {interest} = {}  (n = {})\n{:<14}{:>12}{:>12}{:>14}\n", args.null, data.len(), "statistic", "value", "p-value", "argmax");
        for r in &results {
            s += &format!("{:<14}{:>12.4}{:>12.5}{:>14.6}\n", r.spec.kind.name(), r.statistic, r.p_value, r.unrestricted_estimate);
        }
        s
    };
    emit(&args.output, &text)
}

fn apply_common(cfg: &mut ExperimentConfig, common: &StudyArgs) -> CliResult<()> {
    cfg.replications = common.reps;
    cfg.master_seed = common.seed;
    cfg.form = common.form.into();
    if let Some(levels) = &common.levels {
        cfg.nominal_levels = parse_numbers(levels, "--levels")?;
    }
    if common.sequential {
        cfg.execution = harness::Execution::Sequential;
    }
    Ok(())
}

enum Plan {
    Point(ExperimentConfig),
    Size(ExperimentConfig),
    Power(ExperimentConfig, ExperimentConfig),
}

fn plan(args: &SimulateArgs) -> CliResult<Plan> {
    let c = &args.common;
    let mut plan = match (args.table, args.study) {
        (Some(t), _) => {
            let a = |default: f64| c.alpha.unwrap_or(default);
            match t {
                1 => Plan::Point(presets::table1(a(0.5), c.n)?),
                2 => Plan::Size(presets::table2(a(0.5), c.n)?),
                3 => {
                    let (s, p) = presets::table3(a(0.1), c.n)?;
                    Plan::Power(s, p)
                }
                4 => Plan::Size(presets::table4(a(1.0), c.n)?),
                5 => {
                    let (s, p) = presets::table5(a(1.0), c.n)?;
                    Plan::Power(s, p)
                }
                _ => Plan::Point(presets::table6(a(0.5), c.n)?),
            }
        }
        (None, Some(study)) => {
            let interest: InterestParameter = args.interest.into();
            let alpha = c.alpha.ok_or_else(|| usage("--alpha is required without --table"))?;
            let mut base = ExperimentConfig::new(
                format!("{}-{interest}", match study {
                    StudyArg::Point => "point",
                    StudyArg::Size => "size",
                    StudyArg::Power => "power",
                }),
                c.n,
                BsParams::new(alpha, c.beta)?,
                interest,
            );
            base.trim = TrimConfig::new(args.lambda)?;
            let mut stats = parse_list(&args.stat, &TestKind::ALL)?;
            if args.stat.eq_ignore_ascii_case("all") {
                stats.retain(|k| *k != TestKind::LrBartlett || interest == InterestParameter::Alpha);
            }
            base.statistics = stats;
            match study {
                StudyArg::Point => {
                    base.estimators = parse_list(&args.estimator, &EstimatorKind::ALL)?;
                    Plan::Point(base)
                }
                StudyArg::Size => Plan::Size(base),
                StudyArg::Power => {
                    if let Some(null) = args.null {
                        let truth = match interest {
                            InterestParameter::Alpha => BsParams::new(null, c.beta)?,
                            InterestParameter::Beta => BsParams::new(alpha, null)?,
                        };
                        base.truth = truth;
                        base.null_value = null;
                    }
                    let grid = args.grid.as_deref().ok_or_else(|| usage("--grid is required for power studies"))?;
                    let mut power = base.clone();
                    power.alternative_grid = parse_numbers(grid, "--grid")?;
                    Plan::Power(base, power)
                }
            }
        }
        (None, None) => return Err(usage("give --table or --study")),
    };
    match &mut plan {
        Plan::Point(cfg) | Plan::Size(cfg) => apply_common(cfg, c)?,
        Plan::Power(size, power) => {
            apply_common(size, c)?;
            apply_common(power, c)?;
        }
    }
    Ok(plan)
}

fn point_table(r: &PointStudyReport) -> String {
    let mut s = format!(
        "{}: n = {}, truth = ({}, {}), {} replications, {} summarized\n{:<18}{:>9}{:>10}{:>10}{:>10}{:>9}{:>9}{:>9}{:>6}\n",
        r.study_id, r.n, r.truth.alpha, r.truth.beta, r.replications, r.interest,
        "estimator", "mean", "bias", "variance", "MSE", "RB(%)", "skew", "kurt", "fail"
    );
    for (k, e) in &r.estimators {
        let st = e.stats;
        s += &format!(
            "{:<18}{:>9.4}{:>10.4}{:>10.4}{:>10.4}{:>9.2}{:>9.4}{:>9.4}{:>6}\n",
            k.name(), st.mean, st.bias, st.variance, st.mse, st.relative_bias_percent, st.skewness, st.kurtosis, e.failures
        );
    }
    s
}

fn rate_table(r: &SizePowerReport) -> String {
    let truth = match r.interest {
        InterestParameter::Alpha => r.truth.alpha,
        InterestParameter::Beta => r.truth.beta,
    };
    let levels: Vec<f64> = r
        .statistics
        .values()
        .next()
        .map(|s| s.rejection_percent.iter().map(|p| p.0).collect())
        .unwrap_or_default();
    let mut s = format!(
        "{} ({:?}): n = {}, true {} = {truth}, null = {}, {} replications, rejection %\n{:<14}",
        r.study_id, r.kind, r.n, r.interest, r.null_value, r.replications, "statistic"
    );
    for g in &levels {
        s += &format!("{:>10}", format!("{}%", g * 100.0));
    }
    s += "\n";
    for (k, st) in &r.statistics {
        s += &format!("{:<14}", k.name());
        for (_, v) in &st.rejection_percent {
            s += &format!("{v:>10.2}");
        }
        s += "\n";
    }
    s
}

fn cmd_simulate(args: SimulateArgs) -> CliResult<()> {
    let text = match plan(&args)? {
        Plan::Point(cfg) => {
            let report = harness::run_point_estimation_study(&cfg)?;
            if args.output.json {
                to_json(&report)?
            } else if args.output.csv {
                let mut buf = Vec::new();
                harness::write_point_csv(&report, &mut buf)?;
                utf8(buf)
            } else {
                point_table(&report)
            }
        }
        Plan::Size(cfg) => {
            let report = harness::run_size_study(&cfg)?;
            if args.output.json {
                to_json(&report)?
            } else if args.output.csv {
                let mut buf = Vec::new();
                harness::write_size_power_csv(std::slice::from_ref(&report), &mut buf)?;
                utf8(buf)
            } else {
                rate_table(&report)
            }
        }
        Plan::Power(size_cfg, power_cfg) => {
            let size = harness::run_size_study(&size_cfg)?;
            let critical: CriticalValues = size.critical_values();
            let power = harness::run_power_study(&power_cfg, &critical)?;
            if args.output.json {
                to_json(&json!({"size": size, "power": power}))?
            } else if args.output.csv {
                let mut all = vec![size];
                all.extend(power);
                let mut buf = Vec::new();
                harness::write_size_power_csv(&all, &mut buf)?;
                utf8(buf)
            } else {
                let mut s = rate_table(&size);
                for r in &power {
                    s += "\n";
                    s += &rate_table(r);
                }
                s
            }
        }
    };
    emit(&args.output, &text)
}

fn cmd_figure(args: FigureArgs) -> CliResult<()> {
    let c = &args.common;
    let interest: InterestParameter = args.interest.into();
    let alpha = c.alpha.unwrap_or(0.1);
    let mut cfg = ExperimentConfig::new(
        match args.kind {
            SeriesArg::Quantile => "quantile-discrepancy",
            SeriesArg::Size => "size-distortion",
        },
        c.n,
        BsParams::new(alpha, c.beta)?,
        interest,
    );
    cfg.statistics = parse_list(&args.stat, &TestKind::ALL)?;
    apply_common(&mut cfg, c)?;
    let report = harness::run_size_study(&cfg)?;
    let (series, x_name) = match args.kind {
        SeriesArg::Quantile => (
            harness::quantile_discrepancy_series(&report, &harness::default_probability_grid())?,
            "asymptotic_quantile",
        ),
        SeriesArg::Size => {
            let levels = match &c.levels {
                Some(l) => parse_numbers(l, "--levels")?,
                None => harness::default_level_grid(),
            };
            (harness::size_distortion_series(&report, &levels)?, "nominal_level")
        }
    };
    let y_name = match args.kind {
        SeriesArg::Quantile => "relative_discrepancy",
        SeriesArg::Size => "relative_distortion",
    };
    match &args.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            for (kind, points) in &series {
                let path: PathBuf = Path::new(dir).join(format!("{}_{}.csv", cfg.study_id, kind.name()));
                let mut buf = Vec::new();
                harness::write_series_csv(points, x_name, y_name, &mut buf)?;
                fs::write(&path, buf)?;
            }
        }
        None => {
            let mut s = format!("statistic,{x_name},{y_name}\n");
            for (kind, points) in &series {
                for (x, y) in points {
                    s += &format!("{kind},{x},{y}\n");
                }
            }
            io::stdout().write_all(s.as_bytes())?;
        }
    }
    Ok(())
}
