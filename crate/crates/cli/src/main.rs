//! Command-line surface: coefficient tables, single coefficients, and
//! verification suites, with deterministic JSON/CSV output.
//!
//! Exit codes: 0 success (all checks pass), 1 verification failure,
//! 2 usage error, 3 request over a configured cap.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use conncoeff::arith::format_exact;
use conncoeff::class_algebra::class_series_closed_table;
use conncoeff::double_coset::{main_series_table, pi_series};
use conncoeff::partitions::{enumerate_partitions, near_hooks, NearHook, Partition};
use conncoeff::verify::{
    class_oracle_suite, closed_forms_suite, coset_oracle_suite, zonal_oracle_suite, SuiteReport,
};
use conncoeff::zonal::{p_near_hook, q_near_hook};
use conncoeff::Error;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_OVER_CAP: u8 = 3;

/// Hard ceiling for closed-form tables; the factorial growth of p(n)² cells
/// makes larger requests a mistake rather than a use case.
const TABLE_MAX: usize = 12;
/// The brute-force histogram over S_2n backs the zonal suite; 5 is the
/// largest n it enumerates.
const ZONAL_ORACLE_MAX: usize = 5;

#[derive(Parser)]
#[command(
    name = "conncoeff",
    version,
    about = "Exact connection-coefficient series for the class and double coset algebras of the symmetric group"
)]
struct Cli {
    /// Bound worker parallelism for the brute-force sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest n the class-algebra brute-force oracle will attempt.
    #[arg(
        long,
        global = true,
        env = "CONNCOEFF_ORACLE_CAP_CLASS",
        default_value_t = 8
    )]
    oracle_cap_class: usize,

    /// Largest n the double-coset brute-force oracle will attempt.
    #[arg(
        long,
        global = true,
        env = "CONNCOEFF_ORACLE_CAP_COSET",
        default_value_t = 4
    )]
    oracle_cap_coset: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a full coefficient table in deterministic partition order.
    Table {
        #[arg(long)]
        kind: Kind,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Emit a single coefficient.
    Coeff {
        #[arg(long)]
        kind: Kind,
        #[arg(short = 'n')]
        n: usize,
        /// Partition as dot-joined parts, e.g. 3.1.1
        #[arg(long)]
        lambda: String,
        /// Second partition; required for two-index kinds, rejected for pi
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Run a verification battery up to n; exit 0 iff every identity holds.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Coefficients of m_λ(x)m_μ(y) in the class series, normalized by 1/n
    #[value(name = "class")]
    Class,
    /// Coefficients of m_λ(x)m_μ(y) in the double-coset series, normalized by 1/(2^n n!)
    #[value(name = "doublecoset")]
    Doublecoset,
    /// Coefficients of m_λ in the one-sided double-coset series Π_n
    #[value(name = "pi")]
    Pi,
    /// Monomial coefficients of zonal Q over every near-hook shape of weight n
    #[value(name = "zonalQ")]
    ZonalQ,
    /// Monomial coefficients of zonal P over every near-hook shape of weight n
    #[value(name = "zonalP")]
    ZonalP,
}

impl Kind {
    fn label(self) -> &'static str {
        match self {
            Kind::Class => "class-top",
            Kind::Doublecoset => "doublecoset-top",
            Kind::Pi => "pi",
            Kind::ZonalQ => "zonal-Q",
            Kind::ZonalP => "zonal-P",
        }
    }

    fn takes_mu(self) -> bool {
        !matches!(self, Kind::Pi)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    ClassOracle,
    CosetOracle,
    ZonalOracle,
    ClosedForms,
    All,
}

#[derive(Serialize)]
struct Entry {
    lambda: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    value: String,
}

#[derive(Serialize)]
struct TableOutput<'a> {
    n: String,
    kind: &'a str,
    entries: Vec<Entry>,
}

#[derive(Serialize)]
struct RecordOutput<'a> {
    n: String,
    kind: &'a str,
    lambda: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    value: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure the thread pool");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::OverCap(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(EXIT_OVER_CAP)
        }
    }
}

enum CliError {
    Usage(String),
    OverCap(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::CapExceeded { what, n, cap } => {
                CliError::OverCap(format!("n = {n} exceeds the {what} cap of {cap}"))
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Table { kind, n, format } => {
            check_table_size(n)?;
            let entries = build_table(kind, n);
            emit_table(kind, n, &entries, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Coeff {
            kind,
            n,
            lambda,
            mu,
            format,
        } => {
            check_table_size(n)?;
            let record = build_coeff(kind, n, &lambda, mu.as_deref())?;
            emit_record(&record, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n } => {
            if n == 0 {
                return Err(CliError::Usage("n must be at least 1".into()));
            }
            run_verify(
                suite,
                n,
                cli.oracle_cap_class,
                cli.oracle_cap_coset,
            )
        }
    }
}

fn check_table_size(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n > TABLE_MAX {
        return Err(CliError::OverCap(format!(
            "n = {n} exceeds the table cap of {TABLE_MAX}"
        )));
    }
    Ok(())
}

fn build_table(kind: Kind, n: usize) -> Vec<Entry> {
    let classes = enumerate_partitions(n);
    match kind {
        Kind::Class => {
            let table = class_series_closed_table(n);
            pair_entries(&classes, |lam, mu| format_exact(&table.get(lam, mu)))
        }
        Kind::Doublecoset => {
            let table = main_series_table(n);
            pair_entries(&classes, |lam, mu| format_exact(&table.get(lam, mu)))
        }
        Kind::Pi => {
            let series = pi_series(n);
            classes
                .iter()
                .map(|lam| Entry {
                    lambda: lam.to_string(),
                    mu: None,
                    value: format_exact(&series.coeff(lam)),
                })
                .collect()
        }
        Kind::ZonalQ | Kind::ZonalP => {
            let mut entries = Vec::new();
            for shape in near_hooks(n) {
                let expansion = if matches!(kind, Kind::ZonalQ) {
                    q_near_hook(shape)
                } else {
                    p_near_hook(shape)
                };
                let shape_label = shape.to_partition().to_string();
                for mu in &classes {
                    entries.push(Entry {
                        lambda: shape_label.clone(),
                        mu: Some(mu.to_string()),
                        value: format_exact(&expansion.coeff(mu)),
                    });
                }
            }
            entries
        }
    }
}

fn pair_entries(
    classes: &[Partition],
    value: impl Fn(&Partition, &Partition) -> String,
) -> Vec<Entry> {
    let mut entries = Vec::new();
    for lam in classes {
        for mu in classes {
            entries.push(Entry {
                lambda: lam.to_string(),
                mu: Some(mu.to_string()),
                value: value(lam, mu),
            });
        }
    }
    entries
}

fn parse_partition(text: &str, n: usize, role: &str) -> Result<Partition, CliError> {
    let partition: Partition = text
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    if partition.weight() != n {
        return Err(CliError::Usage(format!(
            "{role} {text} has weight {}, expected {n}",
            partition.weight()
        )));
    }
    Ok(partition)
}

fn build_coeff(
    kind: Kind,
    n: usize,
    lambda_text: &str,
    mu_text: Option<&str>,
) -> Result<RecordOutput<'static>, CliError> {
    let lambda = parse_partition(lambda_text, n, "lambda")?;
    let mu = match (kind.takes_mu(), mu_text) {
        (true, Some(text)) => Some(parse_partition(text, n, "mu")?),
        (true, None) => {
            return Err(CliError::Usage(format!(
                "kind {} needs --mu",
                kind.label()
            )))
        }
        (false, Some(_)) => {
            return Err(CliError::Usage(
                "kind pi takes only --lambda".to_string(),
            ))
        }
        (false, None) => None,
    };
    let value = match kind {
        Kind::Class => format_exact(&class_series_closed_table(n).get(&lambda, mu.as_ref().unwrap())),
        Kind::Doublecoset => format_exact(&conncoeff::double_coset::main_series_coefficient(
            &lambda,
            mu.as_ref().unwrap(),
        )),
        Kind::Pi => format_exact(&pi_series(n).coeff(&lambda)),
        Kind::ZonalQ | Kind::ZonalP => {
            let shape = NearHook::from_partition(&lambda).ok_or_else(|| {
                CliError::Usage(format!("lambda {lambda} is not a near hook (a,b,1^c)"))
            })?;
            let expansion = if matches!(kind, Kind::ZonalQ) {
                q_near_hook(shape)
            } else {
                p_near_hook(shape)
            };
            format_exact(&expansion.coeff(mu.as_ref().unwrap()))
        }
    };
    Ok(RecordOutput {
        n: n.to_string(),
        kind: kind.label(),
        lambda: lambda.to_string(),
        mu: mu.map(|m| m.to_string()),
        value,
    })
}

fn emit_table(kind: Kind, n: usize, entries: &[Entry], format: Format) {
    match format {
        Format::Json => {
            let out = TableOutput {
                n: n.to_string(),
                kind: kind.label(),
                entries: entries
                    .iter()
                    .map(|e| Entry {
                        lambda: e.lambda.clone(),
                        mu: e.mu.clone(),
                        value: e.value.clone(),
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serialization"));
        }
        Format::Csv => {
            println!("lambda,mu,value");
            for e in entries {
                println!("{},{},{}", e.lambda, e.mu.clone().unwrap_or_default(), e.value);
            }
        }
    }
}

fn emit_record(record: &RecordOutput<'_>, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(record).expect("serialization")
            );
        }
        Format::Csv => {
            println!("lambda,mu,value");
            println!(
                "{},{},{}",
                record.lambda,
                record.mu.clone().unwrap_or_default(),
                record.value
            );
        }
    }
}

fn run_verify(
    suite: Suite,
    n: usize,
    cap_class: usize,
    cap_coset: usize,
) -> Result<ExitCode, CliError> {
    let mut reports: Vec<SuiteReport> = Vec::new();
    match suite {
        Suite::ClassOracle => {
            require_cap(n, cap_class, "class oracle")?;
            reports.push(class_oracle_suite(n)?);
        }
        Suite::CosetOracle => {
            require_cap(n, cap_coset, "double coset oracle")?;
            reports.push(coset_oracle_suite(n)?);
        }
        Suite::ZonalOracle => {
            require_cap(n, ZONAL_ORACLE_MAX, "zonal oracle")?;
            reports.push(zonal_oracle_suite(n)?);
        }
        Suite::ClosedForms => {
            require_cap(n, TABLE_MAX, "closed forms")?;
            reports.push(closed_forms_suite(n)?);
        }
        Suite::All => {
            // clamp each battery to its own cap so one invocation can cover
            // everything that is feasible at this n
            let class_n = n.min(cap_class);
            let coset_n = n.min(cap_coset);
            let zonal_n = n.min(ZONAL_ORACLE_MAX);
            let closed_n = n.min(TABLE_MAX);
            for (label, used) in [
                ("class-oracle", class_n),
                ("coset-oracle", coset_n),
                ("zonal-oracle", zonal_n),
                ("closed-forms", closed_n),
            ] {
                if used < n {
                    println!("note: {label} clamped to n = {used}");
                }
            }
            reports.push(class_oracle_suite(class_n)?);
            reports.push(coset_oracle_suite(coset_n)?);
            reports.push(zonal_oracle_suite(zonal_n)?);
            reports.push(closed_forms_suite(closed_n)?);
        }
    }
    let mut all_passed = true;
    for report in &reports {
        for check in &report.checks {
            if check.passed {
                println!("PASS — {}", check.label);
            } else {
                all_passed = false;
                println!(
                    "FAIL — {}: {}",
                    check.label,
                    check.detail.as_deref().unwrap_or("no detail")
                );
            }
        }
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports
        .iter()
        .flat_map(|r| r.checks.iter())
        .filter(|c| !c.passed)
        .count();
    println!(
        "{}: {} checks, {} failed",
        if all_passed { "OK" } else { "FAILED" },
        total,
        failed
    );
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    })
}

fn require_cap(n: usize, cap: usize, what: &str) -> Result<(), CliError> {
    if n > cap {
        return Err(CliError::OverCap(format!(
            "n = {n} exceeds the {what} cap of {cap}; raise the cap flag only if you mean it"
        )));
    }
    Ok(())
}
