//! Command-line front end: dependence checks, individual Wronskians,
//! verification suites, and representation conversions.
//!
//! Exit codes: 0 for a definite outcome, 2 for an inconclusive verdict,
//! 1 for input errors (and for verification failures).

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use afwron_core::io::{self, parse_family, report_to_json, Family, FamilyMember, MemberJson};
use afwron_core::verify::{self, SuiteReport, VerifyConfig};
use afwron_core::wronskian::{
    generalized_wronskian, AdmissibleTuple, DependenceConfig, DependenceReport,
    DependenceVerdict, EnumerationMode,
};
use afwron_core::{ArithFn, QArithFn, Rational, Scalar};

#[derive(Parser)]
#[command(
    name = "afwron",
    about = "Exact linear-dependence testing for truncated Dirichlet series via generalized Wronskians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide linear dependence of a family over the coefficient field.
    Check(CheckArgs),
    /// Compute one generalized Wronskian of a family.
    Wronskian(WronskianArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Convert between representations.
    Convert(ConvertArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input file path; stdin when omitted.
    #[arg(long)]
    input: Option<String>,
    /// Truncation level used for computations.
    #[arg(long, default_value_t = 64)]
    precision: usize,
    /// Largest tuple entry scanned for Wronskian certificates.
    #[arg(long = "tuple-bound", default_value_t = 16)]
    tuple_bound: u64,
    /// Tuple enumerator.
    #[arg(long, value_enum, default_value_t = ModeArg::Full)]
    mode: ModeArg,
    /// Coefficient handling: keep log symbols or substitute random
    /// rationals before determinant work.
    #[arg(long, value_enum, default_value_t = ScalarsArg::Symbolic)]
    scalars: ScalarsArg,
    /// Seed for randomized scalar substitution (and verify corpora).
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    Walker,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScalarsArg {
    Symbolic,
    Randomized,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct WronskianArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Tuple entries, comma separated, e.g. `1,2,4`.
    #[arg(long)]
    tuple: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run.
    #[arg(value_parser = ["ring", "derivations", "lemmas", "theorem", "walker", "all"])]
    suite: String,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ConvertArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Target representation.
    #[arg(long, value_enum)]
    target: TargetArg,
    /// Variable count for power-series output (smallest covering count
    /// when omitted).
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Arithfn,
    Powerseries,
    Dirichlet,
}

fn main() -> ExitCode {
    // Usage errors are input errors (exit 1); help and version are not.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Wronskian(args) => cmd_wronskian(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Convert(args) => cmd_convert(args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(1)
        }
    }
}

type CliResult = Result<ExitCode, String>;

fn validate_config(common: &CommonArgs) -> Result<(), String> {
    if common.precision < 1 {
        return Err("--precision must be at least 1".into());
    }
    if common.tuple_bound < 1 {
        return Err("--tuple-bound must be at least 1".into());
    }
    Ok(())
}

fn read_input(common: &CommonArgs) -> Result<String, String> {
    match &common.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {}", path, e)),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {}", e))?;
            Ok(buf)
        }
    }
}

fn load_family(common: &CommonArgs) -> Result<Family, String> {
    validate_config(common)?;
    let text = read_input(common)?;
    parse_family(&text).map_err(|e| e.to_string())
}

/// Resolve the family to ring elements at a common precision, warning on
/// mismatches (inputs are truncated to the minimum).
fn resolve_ring_family(
    family: &Family,
    common: &CommonArgs,
) -> Result<(Vec<ArithFn<Scalar>>, usize), String> {
    if family.members.is_empty() {
        return Err("family must be nonempty".into());
    }
    let mut precision = common.precision;
    if let Some(min) = family.min_precision() {
        if min < precision {
            eprintln!(
                "warning: member precision {} is below the requested {}; truncating to {}",
                min, precision, min
            );
            precision = min;
        }
    }
    let members = family
        .to_ring_family(precision)
        .map_err(|e| e.to_string())?;
    Ok((
        members
            .into_iter()
            .map(|f| {
                let p = precision.min(f.precision());
                f.truncate(p)
            })
            .collect(),
        precision,
    ))
}

/// Substitute random rationals for the log symbols of a family, retrying
/// with fresh points when a substitution lands on a vanishing denominator.
fn randomize_family(
    family: &[ArithFn<Scalar>],
    seed: u64,
) -> Result<Vec<QArithFn>, String> {
    use rand::{Rng, SeedableRng};
    let mut symbols = std::collections::BTreeSet::new();
    for f in family {
        for n in 1..=f.precision() as u64 {
            symbols.extend(f.value(n).symbols());
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    'attempt: for attempt in 0..16 {
        let assignment: BTreeMap<u64, Rational> = symbols
            .iter()
            .map(|&p| {
                let numer: i64 = rng.gen_range(1..=1_000_000);
                let denom: i64 = rng.gen_range(1..=1_000_000);
                (p, Rational::new(numer.into(), denom.into()))
            })
            .collect();
        let mut out = Vec::with_capacity(family.len());
        for f in family {
            match f.try_map(|v| v.eval(&assignment)) {
                Ok(q) => out.push(q),
                Err(_) => {
                    eprintln!(
                        "note: unlucky evaluation point on attempt {}; retrying",
                        attempt + 1
                    );
                    continue 'attempt;
                }
            }
        }
        return Ok(out);
    }
    Err("no admissible evaluation point found after 16 attempts".into())
}

fn dependence_config(common: &CommonArgs, precision: usize) -> DependenceConfig {
    DependenceConfig {
        precision,
        tuple_bound: common.tuple_bound,
        mode: match common.mode {
            ModeArg::Full => EnumerationMode::Full,
            ModeArg::Walker => EnumerationMode::Walker,
        },
    }
}

fn cmd_check(args: CheckArgs) -> CliResult {
    let family = load_family(&args.common)?;
    let (members, precision) = resolve_ring_family(&family, &args.common)?;
    let config = dependence_config(&args.common, precision);

    let report: DependenceReport<Scalar> = match args.common.scalars {
        ScalarsArg::Symbolic => afwron_core::wronskian::test_dependence(&members, &config)
            .map_err(|e| e.to_string())?,
        ScalarsArg::Randomized => {
            randomized_check(&members, &config, args.common.seed)?
        }
    };

    print_report(&report, args.common.format);
    Ok(match report.verdict {
        DependenceVerdict::Inconclusive { .. } => ExitCode::from(2),
        _ => ExitCode::from(0),
    })
}

/// Dependence check over substituted rational points. A nonzero
/// determinant at a point certifies symbolic independence outright; a
/// dependent verdict is re-verified against the symbolic family, and a
/// mismatch is logged as an unlucky evaluation and retried with a fresh
/// point (falling back to the symbolic path when points keep failing).
fn randomized_check(
    members: &[ArithFn<Scalar>],
    config: &DependenceConfig,
    seed: u64,
) -> Result<DependenceReport<Scalar>, String> {
    for round in 0..4u64 {
        let rational_family = randomize_family(members, seed.wrapping_add(round))?;
        let report = afwron_core::wronskian::test_dependence(&rational_family, config)
            .map_err(|e| e.to_string())?;
        if let DependenceVerdict::DependentUpToPrecision { null_vector, .. } =
            &report.verdict
        {
            let mut combo = ArithFn::<Scalar>::zero(report.precision);
            for (c, f) in null_vector.iter().zip(members) {
                let p = report.precision.min(f.precision());
                combo = combo.add(&f.truncate(p).scale(&Scalar::from_rational(c.clone())));
            }
            if !combo.is_zero_in_window() {
                eprintln!(
                    "note: randomized evaluation produced a spurious relation (unlucky point); retrying"
                );
                continue;
            }
        }
        return Ok(lift_report(report));
    }
    eprintln!("note: randomized points kept failing; running symbolically");
    afwron_core::wronskian::test_dependence(members, config).map_err(|e| e.to_string())
}

/// Re-tag a rational-scalar report as a symbolic one for uniform printing.
fn lift_report(report: DependenceReport<Rational>) -> DependenceReport<Scalar> {
    use afwron_core::wronskian::IndependenceCertificate;
    let verdict = match report.verdict {
        DependenceVerdict::Independent { certificate } => DependenceVerdict::Independent {
            certificate: match certificate {
                IndependenceCertificate::WronskianTuple { tuple, index, value } => {
                    IndependenceCertificate::WronskianTuple {
                        tuple,
                        index,
                        value: Scalar::from_rational(value),
                    }
                }
                IndependenceCertificate::GaussianPivots { pivots } => {
                    IndependenceCertificate::GaussianPivots { pivots }
                }
            },
        },
        DependenceVerdict::DependentUpToPrecision { null_vector, precision } => {
            DependenceVerdict::DependentUpToPrecision {
                null_vector: null_vector.into_iter().map(Scalar::from_rational).collect(),
                precision,
            }
        }
        DependenceVerdict::Inconclusive { reason } => {
            DependenceVerdict::Inconclusive { reason }
        }
    };
    DependenceReport {
        verdict,
        precision: report.precision,
        tuples_checked: report.tuples_checked,
        mode: report.mode,
    }
}

fn print_report(report: &DependenceReport<Scalar>, format: FormatArg) {
    let json = report_to_json(report);
    match format {
        FormatArg::Json => {
            println!("{}", serde_json::to_string_pretty(&json).unwrap());
        }
        FormatArg::Text => {
            println!("verdict: {}", json.verdict);
            match &report.verdict {
                DependenceVerdict::Independent { certificate } => match certificate {
                    afwron_core::wronskian::IndependenceCertificate::WronskianTuple {
                        tuple,
                        index,
                        value,
                    } => println!(
                        "certificate: tuple {} with coefficient {} at index {}",
                        tuple, value, index
                    ),
                    afwron_core::wronskian::IndependenceCertificate::GaussianPivots {
                        pivots,
                    } => println!("certificate: Gaussian pivots at columns {:?}", pivots),
                },
                DependenceVerdict::DependentUpToPrecision { null_vector, precision } => {
                    let coeffs: Vec<String> =
                        null_vector.iter().map(|c| c.to_string()).collect();
                    println!("null vector: ({})", coeffs.join(", "));
                    println!("valid up to precision {}", precision);
                }
                DependenceVerdict::Inconclusive { reason } => {
                    println!("reason: {}", reason);
                }
            }
            println!(
                "precision: {}, tuples checked: {}, mode: {}",
                report.precision, report.tuples_checked, report.mode
            );
        }
    }
}

fn cmd_wronskian(args: WronskianArgs) -> CliResult {
    let entries: Vec<u64> = args
        .tuple
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| format!("tuple entry '{}' is not a positive integer", part))
        })
        .collect::<Result<_, _>>()?;
    let tuple = AdmissibleTuple::new(entries).map_err(|e| e.to_string())?;

    let family = load_family(&args.common)?;
    let (members, _) = resolve_ring_family(&family, &args.common)?;
    if members.len() != tuple.len() {
        return Err(format!(
            "tuple length {} does not match family size {}",
            tuple.len(),
            members.len()
        ));
    }
    let det: ArithFn<Scalar> = match args.common.scalars {
        ScalarsArg::Symbolic => {
            generalized_wronskian(&members, &tuple).map_err(|e| e.to_string())?
        }
        ScalarsArg::Randomized => {
            let rational_family = randomize_family(&members, args.common.seed)?;
            let rational_det: QArithFn = generalized_wronskian(&rational_family, &tuple)
                .map_err(|e| e.to_string())?;
            rational_det.map(|v| Scalar::from_rational(v.clone()))
        }
    };
    match args.common.format {
        FormatArg::Json => {
            let payload = serde_json::json!({
                "tuple": tuple.entries(),
                "determinant": io::arithfn_to_json(&det),
                "dirichlet": det.to_dirichlet_string(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
        FormatArg::Text => {
            println!("tuple: {}", tuple);
            println!("determinant: {}", det.to_dirichlet_string());
            println!(
                "json: {}",
                serde_json::to_string(&io::arithfn_to_json(&det)).unwrap()
            );
            println!("precision: {}", det.precision());
        }
    }
    Ok(ExitCode::from(0))
}

fn cmd_verify(args: VerifyArgs) -> CliResult {
    validate_config(&args.common)?;
    let config = VerifyConfig {
        precision: args.common.precision,
        tuple_bound: args.common.tuple_bound,
        seed: args.common.seed,
    };
    let reports = verify::run_named(&args.suite, &config)
        .ok_or_else(|| format!("unknown suite '{}'", args.suite))?;
    let mut all_ok = true;
    for report in &reports {
        print_suite(report);
        all_ok &= report.all_passed();
    }
    Ok(ExitCode::from(if all_ok { 0 } else { 1 }))
}

fn print_suite(report: &SuiteReport) {
    println!(
        "suite {}: {}/{} checks passed (seed {})",
        report.suite,
        report.passed(),
        report.passed() + report.failed(),
        report.seed
    );
    for group in &report.groups {
        println!(
            "  {}: {} passed, {} failed",
            group.name, group.passed, group.failed
        );
        for failure in &group.failures {
            println!("    FAIL {}", failure);
        }
    }
}

fn cmd_convert(args: ConvertArgs) -> CliResult {
    validate_config(&args.common)?;
    let text = read_input(&args.common)?;
    // Accept either a family file or a bare member.
    let members: Vec<FamilyMember> = if let Ok(family) = parse_family(&text) {
        family.members
    } else {
        let json: MemberJson = serde_json::from_str(&text).map_err(|e| {
            format!(
                "input is neither a family nor a member (line {}, column {}): {}",
                e.line(),
                e.column(),
                e
            )
        })?;
        vec![io::member_from_json(&json, "input").map_err(|e| e.to_string())?]
    };

    let mut outputs = Vec::new();
    for (i, member) in members.iter().enumerate() {
        let f: ArithFn<Scalar> = match member {
            FamilyMember::Fn(f) => f.clone(),
            FamilyMember::Series(ps) => {
                afwron_core::series::from_power_series(ps, args.common.precision)
            }
            FamilyMember::Frac(_) => {
                return Err(format!(
                    "members[{}]: fractions cannot be converted; supply the numerator and denominator separately",
                    i
                ))
            }
        };
        let rendered = match args.target {
            TargetArg::Arithfn => match args.common.format {
                FormatArg::Json => {
                    serde_json::to_string_pretty(&io::arithfn_to_json(&f)).unwrap()
                }
                FormatArg::Text => f.to_dirichlet_string(),
            },
            TargetArg::Dirichlet => f.to_dirichlet_string(),
            TargetArg::Powerseries => {
                let vars = args
                    .vars
                    .unwrap_or_else(|| afwron_core::series::minimal_vars(&f));
                let ps = afwron_core::series::to_power_series(&f, vars)
                    .map_err(|e| format!("members[{}]: {}", i, e))?;
                match args.common.format {
                    FormatArg::Json => {
                        serde_json::to_string_pretty(&io::power_series_to_json(&ps)).unwrap()
                    }
                    FormatArg::Text => ps.to_string(),
                }
            }
        };
        outputs.push(rendered);
    }
    for out in outputs {
        println!("{}", out);
    }
    Ok(ExitCode::from(0))
}
