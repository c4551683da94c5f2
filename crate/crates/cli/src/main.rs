//! pfkit: exact and randomized parking function computations as
//! reproducible batch jobs.
//!
//! Exit codes: 0 success, 1 assertion or validity failure, 2 usage or
//! parse error, 3 resource cap exceeded.

use std::fmt;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use pfkit::{enum_cap, suites, Envelope, JobConfig};

use forests::BfsOrder;
use pfcore::{
    critical_lr_maxima, format_pf, specification, unattempted_spots, ParkingFunction,
    SegmentDecomposition,
};
use randomized::{
    chi_square_uniformity, hole_means_check, lucky_clt_check, repeats_check, sample_pf,
    var_first_mc, RandomSource, SampleReport,
};

const SCHEMA: &str = include_str!("../../../schema/report.schema.json");

#[derive(Parser)]
#[command(name = "pfkit", version, about = "Parking function toolkit", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a parking function and report its statistics.
    Check(CheckArgs),
    /// Convert between parking functions and rooted forests.
    Convert(ConvertArgs),
    /// Count parking functions or forests without listing them.
    Count(CountArgs),
    /// List every parking function or forest of a shape.
    Enumerate(EnumerateArgs),
    /// Draw uniform samples or run a seeded statistical report.
    Sample(SampleArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Print the JSON schema that reports validate against.
    Schema,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        };
        f.write_str(name)
    }
}

#[derive(Args)]
struct CheckArgs {
    /// Parking function in the form `m n : p1 .. pm`.
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    Forest,
    Pf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bijection {
    /// Breadth-first over the whole forest, level by level.
    Bfs1,
    /// Breadth-first one tree at a time.
    Bfs2,
    /// Label-trading map carrying displacement to inversions.
    Knuth,
}

#[derive(Args)]
struct ConvertArgs {
    /// `m n : p1 .. pm` when converting to a forest, `s m : c->P ..`
    /// when converting to a parking function.
    input: String,
    #[arg(long, value_enum)]
    to: ConvertTarget,
    #[arg(long, value_enum, default_value_t = Bijection::Bfs1)]
    bijection: Bijection,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Convert, convert back, and report whether the roundtrip closed.
    #[arg(long)]
    roundtrip: bool,
}

#[derive(Args)]
struct CountArgs {
    cars: usize,
    spots: usize,
    /// Count only parking functions whose first preference is this spot.
    #[arg(long)]
    first: Option<usize>,
    /// Count only parking functions with exactly these unattempted
    /// spots, space separated.
    #[arg(long)]
    holes: Option<String>,
    /// Use the shape recursion instead of the closed form.
    #[arg(long)]
    recursive: bool,
    /// Count rooted forests of the matching shape instead.
    #[arg(long)]
    forests: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    cars: usize,
    spots: usize,
    /// List rooted forests of the matching shape instead.
    #[arg(long)]
    forests: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportKind {
    /// Chi-square uniformity over the full support.
    Chi2,
    /// Unattempted spot means against their exact values.
    Holes,
    /// Repeated consecutive preferences against the Poisson law.
    Repeats,
    /// Standardized lucky-car count against the normal law.
    Lucky,
    /// Variance of the first preference at full density.
    Var1,
}

#[derive(Args)]
struct SampleArgs {
    cars: usize,
    spots: usize,
    #[arg(long, default_value_t = 1)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Aggregate the samples into a named statistical report instead of
    /// printing them.
    #[arg(long, value_enum)]
    report: Option<ReportKind>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of standard output.
    #[arg(long)]
    out: Option<String>,
    /// Significance level for the chi-square report.
    #[arg(long, default_value_t = 0.001)]
    significance: f64,
    /// Kolmogorov distance threshold for the lucky report.
    #[arg(long, default_value_t = 0.02)]
    threshold: f64,
    /// Largest repeat count compared individually in the repeats report.
    #[arg(long, default_value_t = 4)]
    max_j: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// counts, bijections, disp-inv, tutte, graphs, abel, coordinate,
    /// moments, disp-moments, holes, lucky, sampler, or ensembles.
    suite: String,
    /// Size ceiling for the exhaustive part of the suite.
    #[arg(long)]
    max_size: Option<usize>,
    /// Spot count for suites quantified over a single street length.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// A command failure carrying its exit code; code 2 is left to clap.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn resource(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

fn enumeration_failure(e: enumerators::Error) -> Failure {
    match e {
        enumerators::Error::ResourceLimit { .. } => Failure::resource(e.to_string()),
        enumerators::Error::CarsExceedSpots { .. } => Failure::usage(e.to_string()),
        other => Failure::invalid(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Convert(args) => cmd_convert(args),
        Command::Count(args) => cmd_count(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Schema => {
            print!("{SCHEMA}");
            Ok(())
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("pfkit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(text: &str, out: Option<&str>) -> Result<(), Failure> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::resource(format!("cannot write output: {e}")))
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::resource(format!("cannot write {path}: {e}"))),
    }
}

#[derive(Serialize)]
struct CheckReport {
    valid: bool,
    cars: usize,
    spots: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    failing_car: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spot_of_car: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    displacement: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    critical_maxima: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lucky: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spot_counts: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    holes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    segments: Option<Vec<String>>,
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    let config = JobConfig::new("check", &args.format.to_string())
        .param("input", args.input.clone());

    let pf = match pfcore::parse_pf(&args.input) {
        Ok(pf) => pf,
        Err(pfcore::ParseError::Syntax(msg)) => return Err(Failure::usage(msg)),
        Err(pfcore::ParseError::Invalid(e)) => {
            let failing_car = match e {
                pfcore::Error::CarCannotPark { car } => Some(car),
                pfcore::Error::PreferenceOutOfRange { car, .. } => Some(car),
                _ => None,
            };
            let text = match args.format {
                Format::Json => {
                    let report = CheckReport {
                        valid: false,
                        cars: 0,
                        spots: 0,
                        failing_car,
                        reason: Some(e.to_string()),
                        spot_of_car: None,
                        displacement: None,
                        critical_maxima: None,
                        lucky: None,
                        spot_counts: None,
                        holes: None,
                        segments: None,
                    };
                    Envelope::new(config, report).to_json()
                }
                _ => format!("valid: false\nreason: {e}\n"),
            };
            emit(&text, None)?;
            return Err(Failure::invalid(e.to_string()));
        }
    };

    let outcome = pf.outcome();
    let segments = SegmentDecomposition::of(&pf);
    let report = CheckReport {
        valid: true,
        cars: pf.cars(),
        spots: pf.spots(),
        failing_car: None,
        reason: None,
        spot_of_car: Some(outcome.spot_of_car.clone()),
        displacement: Some(pf.displacement()),
        critical_maxima: Some(critical_lr_maxima(&pf)),
        lucky: Some(pf.lucky_count()),
        spot_counts: Some(specification(&pf)),
        holes: Some(unattempted_spots(&pf)),
        segments: Some(segments.segments.iter().map(format_pf).collect()),
    };

    let text = match args.format {
        Format::Json => Envelope::new(config, report).to_json(),
        _ => {
            let mut t = String::new();
            t.push_str("valid: true\n");
            t.push_str(&format!("cars: {}\nspots: {}\n", report.cars, report.spots));
            t.push_str(&format!(
                "parked: {}\n",
                join(report.spot_of_car.as_deref().unwrap_or(&[]))
            ));
            t.push_str(&format!("displacement: {}\n", report.displacement.unwrap()));
            t.push_str(&format!("critical maxima: {}\n", report.critical_maxima.unwrap()));
            t.push_str(&format!("lucky cars: {}\n", report.lucky.unwrap()));
            t.push_str(&format!(
                "holes: {}\n",
                join(report.holes.as_deref().unwrap_or(&[]))
            ));
            for (i, seg) in report.segments.as_deref().unwrap_or(&[]).iter().enumerate() {
                t.push_str(&format!("segment {}: {}\n", i + 1, seg));
            }
            t
        }
    };
    emit(&text, None)
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_convert(args: ConvertArgs) -> Result<(), Failure> {
    if args.format == Format::Dot && args.to == ConvertTarget::Pf {
        return Err(Failure::usage("DOT output exists only for forests"));
    }
    let order = match args.bijection {
        Bijection::Bfs1 => Some(BfsOrder::LevelOrder),
        Bijection::Bfs2 => Some(BfsOrder::TreeByTree),
        Bijection::Knuth => None,
    };

    match args.to {
        ConvertTarget::Forest => {
            let pf = parse_pf_arg(&args.input)?;
            let forest = match order {
                Some(o) => forests::pf_to_forest(&pf, o),
                None => forests::pf_to_forest_disp(&pf),
            };
            if args.roundtrip {
                let back = match order {
                    Some(o) => forests::forest_to_pf(&forest, o),
                    None => forests::forest_to_pf_disp(&forest),
                };
                return report_roundtrip(
                    &format_pf(&pf),
                    &forests::format_forest(&forest),
                    &format_pf(&back),
                    back == pf,
                );
            }
            let text = match args.format {
                Format::Dot => forests::forest_to_dot(&forest),
                _ => format!("{}\n", forests::format_forest(&forest)),
            };
            emit(&text, None)
        }
        ConvertTarget::Pf => {
            let forest = parse_forest_arg(&args.input)?;
            let pf = match order {
                Some(o) => forests::forest_to_pf(&forest, o),
                None => forests::forest_to_pf_disp(&forest),
            };
            if args.roundtrip {
                let back = match order {
                    Some(o) => forests::pf_to_forest(&pf, o),
                    None => forests::pf_to_forest_disp(&pf),
                };
                return report_roundtrip(
                    &forests::format_forest(&forest),
                    &format_pf(&pf),
                    &forests::format_forest(&back),
                    back == forest,
                );
            }
            emit(&format!("{}\n", format_pf(&pf)), None)
        }
    }
}

fn parse_pf_arg(input: &str) -> Result<ParkingFunction, Failure> {
    pfcore::parse_pf(input).map_err(|e| match e {
        pfcore::ParseError::Syntax(msg) => Failure::usage(msg),
        pfcore::ParseError::Invalid(err) => Failure::invalid(err.to_string()),
    })
}

fn parse_forest_arg(input: &str) -> Result<forests::RootedForest, Failure> {
    forests::parse_forest(input).map_err(|e| match e {
        forests::ParseError::Syntax(msg) => Failure::usage(msg),
        forests::ParseError::Invalid(err) => Failure::invalid(err.to_string()),
    })
}

fn report_roundtrip(
    original: &str,
    converted: &str,
    recovered: &str,
    closed: bool,
) -> Result<(), Failure> {
    emit(
        &format!(
            "original:  {original}\nconverted: {converted}\nrecovered: {recovered}\nroundtrip: {closed}\n"
        ),
        None,
    )?;
    if closed {
        Ok(())
    } else {
        Err(Failure::invalid("roundtrip did not close"))
    }
}

fn cmd_count(args: CountArgs) -> Result<(), Failure> {
    let (m, n) = (args.cars, args.spots);
    let mut config = JobConfig::new("count", &args.format.to_string())
        .param("cars", m)
        .param("spots", n);

    let chosen =
        usize::from(args.first.is_some()) + usize::from(args.holes.is_some()) + usize::from(args.forests);
    if chosen > 1 {
        return Err(Failure::usage("--first, --holes, and --forests are mutually exclusive"));
    }

    let count: num_bigint::BigInt = if let Some(j) = args.first {
        config = config.param("first", j);
        enumerators::count_pf_first(m, n, j).map_err(enumeration_failure)?
    } else if let Some(spec) = &args.holes {
        let holes: Vec<usize> = spec
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Failure::usage(format!("`{t}` is not a spot"))))
            .collect::<Result<_, _>>()?;
        config = config.param("holes", join(&holes));
        enumerators::count_pf_with_holes(m, n, &holes).map_err(enumeration_failure)?
    } else if args.forests {
        if m > n {
            return Err(Failure::usage(format!("{m} cars exceed {n} spots")));
        }
        config = config.param("forests", true);
        num_bigint::BigInt::from(forests::count_forests(m, n - m + 1))
    } else if args.recursive {
        config = config.param("recursive", true);
        enumerators::count_pf_recursive(m, n).map_err(enumeration_failure)?
    } else {
        enumerators::count_pf(m, n).map_err(enumeration_failure)?
    };

    let text = match args.format {
        Format::Json => Envelope::new(config, json!({ "count": count.to_string() })).to_json(),
        _ => format!("{count}\n"),
    };
    emit(&text, None)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let (m, n) = (args.cars, args.spots);
    let cap = enum_cap();
    let mut stdout = std::io::stdout().lock();
    if args.forests {
        if m > n {
            return Err(Failure::usage(format!("{m} cars exceed {n} spots")));
        }
        let roots = n - m + 1;
        let population = forests::count_forests(m, roots);
        if population > cap {
            return Err(Failure::resource(format!(
                "{population} forests exceed the cap of {cap}; raise {}",
                pfkit::ENUM_CAP_VAR
            )));
        }
        for forest in forests::all_forests(m, roots) {
            writeln!(stdout, "{}", forests::format_forest(&forest))
                .map_err(|e| Failure::resource(e.to_string()))?;
        }
        return Ok(());
    }
    let iter = enumerators::enumerate_pf(m, n, cap).map_err(enumeration_failure)?;
    for pf in iter {
        writeln!(stdout, "{}", format_pf(&pf)).map_err(|e| Failure::resource(e.to_string()))?;
    }
    Ok(())
}

fn cmd_sample(args: SampleArgs) -> Result<(), Failure> {
    let (m, n) = (args.cars, args.spots);
    if m > n {
        return Err(Failure::usage(format!("{m} cars exceed {n} spots")));
    }
    let format = args.format.unwrap_or(match args.report {
        Some(_) => Format::Json,
        None => Format::Text,
    });
    let mut config = JobConfig::new("sample", &format.to_string())
        .param("cars", m)
        .param("spots", n);
    config.seed = Some(args.seed);
    config.trials = Some(args.trials);
    config.out = args.out.clone();

    let Some(kind) = args.report else {
        // Raw mode: one canonical text form per line, or CSV rows that
        // stay easy to feed back into `check`.
        let mut rng = RandomSource::new(args.seed);
        let mut lines = String::new();
        let mut forms = Vec::new();
        for t in 0..args.trials {
            let pf = sample_pf(m, n, &mut rng);
            let form = format_pf(&pf);
            match format {
                Format::Csv => lines.push_str(&format!("{t},{form}\n")),
                Format::Json => forms.push(form),
                _ => lines.push_str(&format!("{form}\n")),
            }
        }
        let text = match format {
            Format::Json => Envelope::new(config, json!({ "samples": forms })).to_json(),
            Format::Csv => format!("trial,pf\n{lines}"),
            _ => lines,
        };
        return emit(&text, args.out.as_deref());
    };

    let cap = enum_cap();
    let report: SampleReport = match kind {
        ReportKind::Chi2 => {
            config = config.param("report", "chi2").param("significance", args.significance);
            chi_square_uniformity(m, n, args.trials, args.seed, args.significance, cap)
        }
        ReportKind::Holes => {
            config = config.param("report", "holes");
            hole_means_check(m, n, args.trials, args.seed)
        }
        ReportKind::Repeats => {
            config = config.param("report", "repeats").param("max_j", args.max_j);
            repeats_check(m, n, args.trials, args.seed, args.max_j)
        }
        ReportKind::Lucky => {
            config = config.param("report", "lucky").param("threshold", args.threshold);
            lucky_clt_check(m, n, args.trials, args.seed, args.threshold)
        }
        ReportKind::Var1 => {
            if m != n {
                return Err(Failure::usage("the var1 report is defined at full density; pass m = n"));
            }
            config = config.param("report", "var1");
            var_first_mc(n, args.trials, args.seed)
        }
    }
    .map_err(|e| match e {
        randomized::Error::ResourceLimit { .. } => Failure::resource(e.to_string()),
        randomized::Error::CarsExceedSpots { .. } => Failure::usage(e.to_string()),
        other => Failure::invalid(other.to_string()),
    })?;

    let pass = report.pass;
    let text = match format {
        Format::Csv => report.table_csv(),
        _ => Envelope::new(config, &report).to_json(),
    };
    emit(&text, args.out.as_deref())?;
    if pass {
        Ok(())
    } else {
        Err(Failure::invalid("statistical check failed; see the report verdicts"))
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let cap = enum_cap();
    let size = args.max_size;
    let trials = args.trials;
    let seed = args.seed;

    let outcome = match args.suite.as_str() {
        "counts" => suites::counts(size.unwrap_or(6), cap),
        "bijections" => suites::bijections(size.unwrap_or(6), cap),
        "disp-inv" => suites::disp_inv(size.unwrap_or(6), cap),
        "tutte" => suites::tutte(args.n.unwrap_or(4), size.unwrap_or(6), cap),
        "graphs" => suites::graphs(size.unwrap_or(5), cap),
        "abel" => suites::abel(
            args.n.unwrap_or(12),
            trials.unwrap_or(200),
            seed.unwrap_or(suites::ABEL_SEED),
        ),
        "coordinate" => suites::coordinate(
            size.unwrap_or(5),
            args.n.unwrap_or(100),
            Some((400, 500)),
            cap,
        ),
        "moments" => suites::moments(),
        "disp-moments" => suites::disp_moments(size.unwrap_or(5), cap),
        "holes" => suites::holes(
            size.unwrap_or(5),
            Some((300, 400)),
            trials.unwrap_or(100_000),
            seed.unwrap_or(suites::HOLES_SEED),
            cap,
        ),
        "lucky" => suites::lucky(
            size.unwrap_or(5),
            Some((300, 600)),
            trials.unwrap_or(100_000),
            seed.unwrap_or(suites::LUCKY_SEED),
            0.02,
            cap,
        ),
        "sampler" => suites::sampler(
            &[(2, 2), (3, 5), (2, 4)],
            trials.unwrap_or(1_000_000),
            seed.unwrap_or(suites::SAMPLER_SEED),
            0.001,
            cap,
        ),
        "ensembles" => suites::ensembles(
            size.unwrap_or(4),
            Some((200, 400)),
            trials.unwrap_or(100_000),
            seed.unwrap_or(suites::ENSEMBLES_SEED),
            4,
            cap,
        ),
        other => {
            return Err(Failure::usage(format!(
                "unknown suite `{other}`; see `pfkit verify --help` for the list"
            )))
        }
    };

    let mut config = JobConfig::new("verify", &args.format.to_string())
        .param("suite", args.suite.clone());
    config.seed = seed;
    config.trials = trials;

    let text = match args.format {
        Format::Json => Envelope::new(config, &outcome).to_json(),
        _ => outcome.render(),
    };
    emit(&text, None)?;

    if outcome.pass {
        Ok(())
    } else {
        let first = outcome
            .first_failure()
            .map(|a| format!("{}: {}", a.name, a.detail))
            .unwrap_or_default();
        Err(Failure::invalid(format!("suite {} failed at {first}", outcome.suite)))
    }
}
