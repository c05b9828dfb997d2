//! Command-line front end. `run` takes the full argument vector and returns
//! the exit status with everything that should be printed, so it can be
//! driven from tests without spawning a process.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::count::{count_by_circle, count_by_interleaving, count_checked, debruijn_s, theta_by_chains_all, theta_by_formula};
use crate::exponents::ExponentMultiset;
use crate::oracle::{
    count_canonical_series, enumerate_alpha_graceful_with_limit, enumerate_canonical_series, peel, LabelSetPair,
    DEFAULT_EDGE_LIMIT,
};
use crate::wz::sums::{identity_a_check, identity_b_check, numeric_recurrence_check, singular_case_check, Family};
use crate::wz::{builtin_certificate, builtin_certificates, verify_certificate, CertificateFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    /// `n value` per line.
    Bfile,
}

#[derive(Debug, Parser)]
#[command(name = "graceful", version, about = "Count alpha-graceful labelings of complete bipartite graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// A(a, b) for K_{a,b}.
    Count(CountArgs),
    /// Brute-force label sets and multiplication series.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Divisor-chain counts theta(k, a) for every k.
    Theta(ThetaArgs),
    /// S(k, n) = sum_i (-1)^(n+i) binom(2n, i)^k.
    Debruijn(DebruijnArgs),
    /// A({n,n},{n,n}) next to S(4, n).
    Table(TableArgs),
    /// Check certificates, recurrences and identities.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Run the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Circle,
    Interleave,
    Series,
}

#[derive(Debug, Args)]
struct CountArgs {
    /// Left part size.
    #[arg(short = 'a', conflicts_with = "exp_a", required_unless_present = "exp_a")]
    a: Option<u64>,
    /// Right part size.
    #[arg(short = 'b', conflicts_with = "exp_b", required_unless_present = "exp_b")]
    b: Option<u64>,
    /// Left part as prime exponents, e.g. 2,2.
    #[arg(long)]
    exp_a: Option<ExponentMultiset>,
    /// Right part as prime exponents.
    #[arg(long)]
    exp_b: Option<ExponentMultiset>,
    /// Run both formula routes and require agreement.
    #[arg(long)]
    check: bool,
    /// Which route to report (series needs integer sizes).
    #[arg(long, value_enum, default_value_t = Route::Circle)]
    route: Route,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Every alpha-graceful label-set pair of K_{a,b}.
    Pairs {
        #[arg(short = 'a')]
        a: u64,
        #[arg(short = 'b')]
        b: u64,
        /// Refuse graphs with more edges than this.
        #[arg(long, default_value_t = DEFAULT_EDGE_LIMIT)]
        max_edges: u64,
    },
    /// Every canonical multiplication series from K_{1,1} to K_{a,b}.
    Series {
        #[arg(short = 'a')]
        a: u64,
        #[arg(short = 'b')]
        b: u64,
        /// Print only how many there are.
        #[arg(long)]
        count: bool,
    },
    /// Recover the canonical series of a labeling given as JSON [[...],[...]].
    Peel {
        pair: String,
    },
}

#[derive(Debug, Args)]
struct ThetaArgs {
    /// Integer whose exponent multiset is used.
    #[arg(short = 'a', conflicts_with = "exp", required_unless_present = "exp")]
    a: Option<u64>,
    #[arg(long)]
    exp: Option<ExponentMultiset>,
    /// Also compute each value through the binomial-basis formula.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args)]
struct DebruijnArgs {
    #[arg(short = 'k')]
    k: u32,
    #[arg(short = 'n')]
    n: u64,
    /// Print every n up to this bound.
    #[arg(long)]
    n_max: Option<u64>,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// The only table: A({n,n},{n,n}) against S(4, n).
    #[arg(long, required = true)]
    main: bool,
    #[arg(long, default_value_t = 1)]
    n_min: u32,
    #[arg(long)]
    n_max: u32,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Phi_k(n) = Psi_k(n) by direct summation.
    #[command(name = "identity-A", alias = "identity-a")]
    IdentityA {
        #[arg(long, default_value_t = 10)]
        k_max: u32,
        #[arg(long, default_value_t = 10)]
        n_max: u64,
    },
    /// T(n) = S(4, n) for n >= 1, and the expected failure at n = 0.
    #[command(name = "identity-B", alias = "identity-b")]
    IdentityB {
        #[arg(long, default_value_t = 30)]
        n_max: u64,
    },
    /// Verify a bundled certificate (phi, psi, tau, sigma or all) or a JSON file.
    Certificate {
        name: String,
        /// Parameter value; defaults to the certificate's whole range.
        #[arg(short = 'k')]
        k: Option<i64>,
        /// Read the certificate from this file instead.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
    /// Closed forms where the Phi/Psi recurrence degenerates.
    Singular {
        #[arg(short = 'k')]
        k: u32,
    },
    /// The order-2 recurrence against direct sums.
    Recurrence {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(short = 'k')]
        k: Option<u32>,
        #[arg(long)]
        n_min: Option<u64>,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Phi,
    Psi,
    T,
    S4,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    /// Run a single criterion.
    #[arg(long)]
    criterion: Option<u8>,
}

/// A usage-level failure, reported with exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Output = Result<(i32, String), Usage>;

pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli) {
        Ok(out) => out,
        Err(Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
    }
}

fn dispatch(cli: Cli) -> Output {
    let format = cli.format;
    match cli.command {
        Command::Count(args) => count(args, format),
        Command::Oracle(cmd) => oracle(cmd, format),
        Command::Theta(args) => theta(args, format),
        Command::Debruijn(args) => debruijn(args, format),
        Command::Table(args) => table(args, format),
        Command::Verify(cmd) => verify(cmd, format),
        Command::Selftest(args) => selftest(args, format),
    }
}

fn no_bfile(format: Format, what: &str) -> Result<(), Usage> {
    if format == Format::Bfile {
        return Err(Usage(format!("--format bfile is not available for {what}")));
    }
    Ok(())
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn shape_of(size: Option<u64>, exps: Option<ExponentMultiset>) -> Result<ExponentMultiset, Usage> {
    match (size, exps) {
        (Some(n), _) => Ok(ExponentMultiset::from_integer(n)?),
        (None, Some(e)) => Ok(e),
        (None, None) => Err(Usage("missing size".into())),
    }
}

fn count(args: CountArgs, format: Format) -> Output {
    no_bfile(format, "count")?;
    let a = shape_of(args.a, args.exp_a.clone())?;
    let b = shape_of(args.b, args.exp_b.clone())?;
    let value: BigUint = if args.check {
        match count_checked(&a, &b) {
            Ok(v) => v,
            // A disagreement is a verification failure, not a usage error.
            Err(e @ crate::count::CountError::RouteMismatch { .. }) => return Ok((EXIT_FAILED, format!("{e}\n"))),
            Err(e) => return Err(e.into()),
        }
    } else {
        match args.route {
            Route::Circle => count_by_circle(&a, &b)?,
            Route::Interleave => count_by_interleaving(&a, &b)?,
            Route::Series => match (args.a, args.b) {
                (Some(x), Some(y)) => count_canonical_series(x, y),
                _ => return Err(Usage("--route series needs integer sizes -a and -b".into())),
            },
        }
    };
    let out = match format {
        Format::Json => pretty(&json!({
            "a": a.to_string(),
            "b": b.to_string(),
            "value": value.to_string(),
            "checked": args.check,
        })),
        _ => format!("{value}\n"),
    };
    Ok((EXIT_OK, out))
}

fn oracle(cmd: OracleCommand, format: Format) -> Output {
    no_bfile(format, "oracle")?;
    match cmd {
        OracleCommand::Pairs { a, b, max_edges } => {
            let pairs = enumerate_alpha_graceful_with_limit(a, b, max_edges)?;
            let out = match format {
                Format::Json => pretty(&serde_json::to_value(&pairs)?),
                _ => pairs.iter().map(|p| format!("{p}\n")).collect(),
            };
            Ok((EXIT_OK, out))
        }
        OracleCommand::Series { a, b, count: true } => {
            let n = count_canonical_series(a, b);
            let out = match format {
                Format::Json => pretty(&json!({ "a": a, "b": b, "count": n.to_string() })),
                _ => format!("{n}\n"),
            };
            Ok((EXIT_OK, out))
        }
        OracleCommand::Series { a, b, count: false } => {
            let all = enumerate_canonical_series(a, b);
            let out = match format {
                Format::Json => pretty(&Value::Array(
                    all.iter()
                        .map(|s| json!(s.steps().iter().map(|(side, c)| json!([side, c])).collect::<Vec<_>>()))
                        .collect(),
                )),
                _ => all.iter().map(|s| format!("{s}\n")).collect(),
            };
            Ok((EXIT_OK, out))
        }
        OracleCommand::Peel { pair } => {
            let pair: LabelSetPair = serde_json::from_str(&pair)?;
            let series = peel(&pair)?;
            let out = match format {
                Format::Json => pretty(&json!({
                    "pair": pair,
                    "series": series.steps().iter().map(|(side, c)| json!([side, c])).collect::<Vec<_>>(),
                })),
                _ => format!("{series}\n"),
            };
            Ok((EXIT_OK, out))
        }
    }
}

fn rows_out(format: Format, rows: &[(u64, String)], json_key: &str) -> String {
    match format {
        Format::Json => pretty(&Value::Array(
            rows.iter().map(|(n, v)| json!({ "n": n, json_key: v })).collect(),
        )),
        _ => rows.iter().map(|(n, v)| format!("{n} {v}\n")).collect(),
    }
}

fn theta(args: ThetaArgs, format: Format) -> Output {
    let a = shape_of(args.a, args.exp)?;
    let values = theta_by_chains_all(&a)?;
    if args.check {
        for (k, v) in values.iter().enumerate() {
            let by_formula = theta_by_formula(k, &a)?;
            if &by_formula != v {
                return Ok((
                    EXIT_FAILED,
                    format!("theta({k}, {a}): chains give {v}, formula gives {by_formula}\n"),
                ));
            }
        }
    }
    let rows: Vec<(u64, String)> = values.iter().enumerate().map(|(k, v)| (k as u64, v.to_string())).collect();
    let out = match format {
        Format::Json => pretty(&json!({
            "a": a.to_string(),
            "theta": rows.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
        })),
        _ => rows_out(format, &rows, "theta"),
    };
    Ok((EXIT_OK, out))
}

fn debruijn(args: DebruijnArgs, format: Format) -> Output {
    let last = args.n_max.unwrap_or(args.n);
    if last < args.n {
        return Err(Usage(format!("--n-max {last} is below -n {}", args.n)));
    }
    let rows: Vec<(u64, String)> = (args.n..=last).map(|n| (n, debruijn_s(args.k, n).to_string())).collect();
    let out = match (format, args.n_max) {
        (Format::Text, None) => format!("{}\n", rows[0].1),
        _ => rows_out(format, &rows, "value"),
    };
    Ok((EXIT_OK, out))
}

fn table(args: TableArgs, format: Format) -> Output {
    debug_assert!(args.main);
    if args.n_max < args.n_min {
        return Err(Usage(format!("--n-max {} is below --n-min {}", args.n_max, args.n_min)));
    }
    let mut rows = Vec::new();
    let mut all_equal = true;
    for n in args.n_min..=args.n_max {
        let shape = if n == 0 {
            ExponentMultiset::unit()
        } else {
            ExponentMultiset::new(vec![n, n])?
        };
        let a = count_by_circle(&shape, &shape)?.to_string();
        let s = debruijn_s(4, u64::from(n)).to_string();
        all_equal &= a == s;
        rows.push((u64::from(n), a, s));
    }
    let out = match format {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(n, a, s)| json!({ "n": n, "A": a, "S4": s, "equal": a == s }))
                .collect(),
        )),
        Format::Bfile => rows.iter().map(|(n, a, _)| format!("{n} {a}\n")).collect(),
        Format::Text => {
            let mut s = String::from("n A({n,n},{n,n}) S(4,n) equal\n");
            for (n, a, b) in &rows {
                let _ = writeln!(s, "{n} {a} {b} {}", if a == b { "yes" } else { "NO" });
            }
            s
        }
    };
    Ok((if all_equal { EXIT_OK } else { EXIT_FAILED }, out))
}

fn status(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn verify(cmd: VerifyCommand, format: Format) -> Output {
    no_bfile(format, "verify")?;
    match cmd {
        VerifyCommand::IdentityA { k_max, n_max } => {
            let report = identity_a_check(k_max, n_max);
            let out = match format {
                Format::Json => pretty(&serde_json::to_value(&report)?),
                _ => report.to_string(),
            };
            Ok((status(report.passed), out))
        }
        VerifyCommand::IdentityB { n_max } => {
            let report = identity_b_check(n_max);
            let out = match format {
                Format::Json => pretty(&serde_json::to_value(&report)?),
                _ => report.to_string(),
            };
            Ok((status(report.passed), out))
        }
        VerifyCommand::Certificate { name, k, file } => {
            let files: Vec<CertificateFile> = match (&file, name.as_str()) {
                (Some(path), _) => vec![CertificateFile::from_json(&std::fs::read_to_string(path)?)?],
                (None, "all") => builtin_certificates(),
                (None, other) => vec![builtin_certificate(other)?],
            };
            let mut reports = Vec::new();
            for f in &files {
                // With `all`, -k applies only to the certificates that take it.
                let values = match (k, &f.parameter) {
                    (None, _) => f.parameter_values(),
                    (Some(_), None) if files.len() > 1 => vec![None],
                    (Some(v), _) => vec![Some(v)],
                };
                for v in values {
                    reports.push(verify_certificate(&f.instantiate(v)?)?);
                }
            }
            let passed = reports.iter().all(|r| r.passed);
            let out = match format {
                Format::Json => pretty(&serde_json::to_value(&reports)?),
                _ => reports.iter().map(ToString::to_string).collect(),
            };
            Ok((status(passed), out))
        }
        VerifyCommand::Singular { k } => {
            let report = singular_case_check(k)?;
            let out = match format {
                Format::Json => pretty(&serde_json::to_value(&report)?),
                _ => format!("{report}\n"),
            };
            Ok((status(report.passed), out))
        }
        VerifyCommand::Recurrence { family, k, n_min, n_max } => {
            let family = match family {
                FamilyArg::Phi => Family::Phi,
                FamilyArg::Psi => Family::Psi,
                FamilyArg::T => Family::T,
                FamilyArg::S4 => Family::S4,
            };
            let from = n_min.unwrap_or(if family == Family::T { 1 } else { 0 });
            let report = numeric_recurrence_check(family, k, from..=n_max)?;
            let out = match format {
                Format::Json => pretty(&serde_json::to_value(&report)?),
                _ => format!("{report}\n"),
            };
            Ok((status(report.passed), out))
        }
    }
}

fn selftest(args: SelftestArgs, format: Format) -> Output {
    no_bfile(format, "selftest")?;
    let results = match args.criterion {
        Some(id) => vec![crate::selftest::run_criterion(id).ok_or_else(|| Usage(format!("no criterion {id}")))?],
        None => crate::selftest::run_all(),
    };
    let passed = results.iter().all(|r| r.passed());
    let out = match format {
        Format::Json => pretty(&serde_json::to_value(&results)?),
        _ => results.iter().map(|r| format!("{r}\n")).collect(),
    };
    Ok((status(passed), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn headline_counts() {
        assert_eq!(run(["graceful", "count", "-a", "6", "-b", "6"]), (0, "14\n".into()));
        assert_eq!(
            run(["graceful", "count", "--exp-a", "2,2", "--exp-b", "2,2", "--check"]),
            (0, "786\n".into())
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["graceful", "count", "-a", "6"]).0, EXIT_USAGE);
        assert_eq!(run(["graceful", "count", "-a", "0", "-b", "1"]).0, EXIT_USAGE);
        assert_eq!(run(["graceful", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run(["graceful", "count", "-a", "6", "-b", "6", "--format", "bfile"]).0, EXIT_USAGE);
        assert_eq!(run(["graceful", "oracle", "pairs", "-a", "5", "-b", "5"]).0, EXIT_USAGE);
        assert_eq!(run(["graceful", "--help"]).0, EXIT_OK);
    }
}
