//! Command-line front end: atypicality profiles, multiplicity columns and
//! rows, window matrices with exact inversion, exact characters, and the
//! verification suite.
//!
//! Exit codes: 0 success, 1 internal error or failed verification, 2 usage
//! or input validation error, 3 conjecture-falsification candidate.

mod cache;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kacmod::atypicality::{atypicality_matrix, nabla_profile, AtypicalityProfile};
use kacmod::characters::{char_g0, char_kac, char_simple, decompose_g0, CharacterMap};
use kacmod::kl::{assemble_aq_on_interval, invert_unitriangular, specialize, TriangularQMatrix};
use kacmod::multiplicity::{column, column_q, row_q, MultiplicityColumn};
use kacmod::verify::{run_all, FaultInjection};
use kacmod::weight::{IntegralWeight, Superalgebra};
use kacmod::{Caps, Error, QPolynomial};

use cache::{Cache, CacheKey};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "kacmod",
    version,
    about = "Kac-module composition factors, Kazhdan-Lusztig windows and exact characters for gl(m/n)"
)]
struct Cli {
    /// Block sizes of gl(m/n), e.g. --alg 4,5
    #[arg(long, global = true, value_name = "M,N")]
    alg: Option<String>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory for cached window matrices
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    /// Maximum number of weights in an order interval
    #[arg(long, global = true, value_name = "N")]
    cap_window: Option<usize>,

    /// Maximum support size of the odd factor and of character convolutions
    #[arg(long, global = true, value_name = "N")]
    cap_odd: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CharKind {
    Kac,
    Simple,
    G0,
}

#[derive(Subcommand)]
enum Command {
    /// Atypicality matrix, gamma chain, Delta/nabla sets, k-vector, mu_0
    Atyp {
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        mu: String,
    },
    /// The 2^r multiplicity column of a dominant weight
    Column {
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        mu: String,
        /// Show the q-coefficients (-q)^|theta| instead of multiplicities
        #[arg(long)]
        q: bool,
    },
    /// All nonzero q-row entries at a dominant weight
    Row {
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Assemble the window q-matrix, optionally invert and specialize
    Matrix {
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        lo: String,
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        hi: String,
        /// Invert the assembled matrix
        #[arg(long)]
        invert: bool,
        /// Evaluate entries at an integer, e.g. --specialize q=-1
        #[arg(long, value_name = "q=V", allow_hyphen_values = true)]
        specialize: Option<String>,
    },
    /// Exact character of a Kac, simple or g0 module
    Char {
        #[arg(long, value_enum)]
        kind: CharKind,
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        weight: String,
    },
    /// g0-decomposition of a Kac, simple or g0 character
    Decompose {
        #[arg(long, value_enum, default_value_t = CharKind::Simple)]
        kind: CharKind,
        #[arg(long, value_name = "WEIGHT", allow_hyphen_values = true)]
        weight: String,
    },
    /// Run the verification suite
    Verify {
        /// Self-test: inflate k_1 and confirm the harness reports a failure
        #[arg(long)]
        inject_fault: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Falsification(_) => 3,
        Error::Parse(_)
        | Error::InvalidAlgebra { .. }
        | Error::Config(_)
        | Error::ShapeMismatch { .. }
        | Error::NotDominant(_)
        | Error::NotAtypicalRoot { .. }
        | Error::NotComparable { .. } => 2,
        _ => 1,
    }
}

fn algebra(cli: &Cli) -> Result<Superalgebra, Error> {
    let spec = cli
        .alg
        .as_deref()
        .ok_or_else(|| Error::Parse("--alg M,N is required for this command".into()))?;
    let (m, n) = spec
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("invalid --alg `{spec}`: expected M,N")))?;
    let parse = |tok: &str| {
        tok.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("invalid --alg `{spec}`: expected M,N")))
    };
    Superalgebra::new(parse(m)?, parse(n)?)
}

fn caps(cli: &Cli) -> Result<Caps, Error> {
    let mut caps = Caps::default();
    if let Some(window) = cli.cap_window {
        caps.window = window;
    }
    if let Some(odd) = cli.cap_odd {
        caps.odd_support = odd;
    }
    caps.validate()?;
    Ok(caps)
}

fn run(cli: Cli) -> Result<u8, Error> {
    let caps = caps(&cli)?;
    match &cli.command {
        Command::Atyp { mu } => {
            let alg = algebra(&cli)?;
            let mu = IntegralWeight::parse(&alg, mu)?;
            cmd_atyp(&cli, &alg, &mu)
        }
        Command::Column { mu, q } => {
            let alg = algebra(&cli)?;
            let mu = IntegralWeight::parse(&alg, mu)?;
            cmd_column(&cli, &mu, *q)
        }
        Command::Row { lambda } => {
            let alg = algebra(&cli)?;
            let lambda = IntegralWeight::parse(&alg, lambda)?;
            cmd_row(&cli, &caps, &lambda)
        }
        Command::Matrix {
            lo,
            hi,
            invert,
            specialize,
        } => {
            let alg = algebra(&cli)?;
            let lo = IntegralWeight::parse(&alg, lo)?;
            let hi = IntegralWeight::parse(&alg, hi)?;
            cmd_matrix(&cli, &caps, &alg, &lo, &hi, *invert, specialize.as_deref())
        }
        Command::Char { kind, weight } => {
            let alg = algebra(&cli)?;
            let weight = IntegralWeight::parse(&alg, weight)?;
            cmd_char(&cli, &caps, *kind, &weight)
        }
        Command::Decompose { kind, weight } => {
            let alg = algebra(&cli)?;
            let weight = IntegralWeight::parse(&alg, weight)?;
            cmd_decompose(&cli, &caps, *kind, &weight)
        }
        Command::Verify { inject_fault } => cmd_verify(&cli, &caps, *inject_fault),
    }
}

#[derive(Serialize)]
struct AtypJson<'a> {
    algebra: (usize, usize),
    matrix: &'a [Vec<i64>],
    r: usize,
    profile: &'a AtypicalityProfile,
    connected: Vec<Vec<bool>>,
}

fn cmd_atyp(cli: &Cli, alg: &Superalgebra, mu: &IntegralWeight) -> Result<u8, Error> {
    let matrix = atypicality_matrix(mu)?;
    let profile = nabla_profile(mu)?;
    let connected = profile.connectedness();
    if cli.format == Format::Json {
        let json = AtypJson {
            algebra: alg.shape(),
            matrix: &matrix,
            r: profile.degree(),
            profile: &profile,
            connected,
        };
        println!("{}", serde_json::to_string(&json).map_err(io_internal)?);
        return Ok(0);
    }
    println!("algebra: gl({}/{})", alg.m(), alg.n());
    println!("mu: {mu}");
    println!("atypicality matrix:");
    let width = matrix
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in &matrix {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        println!("  {}", cells.join(" "));
    }
    if profile.is_typical() {
        println!("typical, r=0");
        println!("mu_0 = {}", profile.mu_zero);
        return Ok(0);
    }
    println!("r = {}", profile.degree());
    let chain: Vec<String> = profile.gamma.iter().map(|g| g.to_string()).collect();
    println!("gamma chain: {}", chain.join(" < "));
    for (idx, set) in profile.delta_sets.iter().enumerate() {
        let items: Vec<String> = set.iter().map(|r| r.to_string()).collect();
        println!("Delta(gamma_{}) = {{ {} }}", idx + 1, items.join(", "));
    }
    for (idx, set) in profile.nabla_sets.iter().enumerate() {
        let items: Vec<String> = set.iter().map(|r| r.to_string()).collect();
        println!("nabla(gamma_{}) = {{ {} }}", idx + 1, items.join(", "));
    }
    let k: Vec<String> = profile.k.iter().map(|v| v.to_string()).collect();
    println!("k = ({})", k.join(", "));
    let mut connected_pairs = Vec::new();
    for (i, row) in connected.iter().enumerate() {
        for (j, &linked) in row.iter().enumerate().skip(i + 1) {
            if linked {
                connected_pairs.push(format!("(gamma_{}, gamma_{})", i + 1, j + 1));
            }
        }
    }
    if connected_pairs.is_empty() {
        println!("connected pairs: none");
    } else {
        println!("connected pairs: {}", connected_pairs.join(", "));
    }
    println!("mu_0 = {}", profile.mu_zero);
    Ok(0)
}

fn theta_label(theta: &[u8]) -> String {
    let bits: Vec<String> = theta.iter().map(|b| b.to_string()).collect();
    format!("({})", bits.join(","))
}

fn print_column_table(col: &MultiplicityColumn, show_coeff: bool) {
    let rows: Vec<(String, String, String, String)> = col
        .entries
        .iter()
        .map(|e| {
            (
                theta_label(&e.theta),
                format!("({})", e.mu_theta),
                format!("({})", e.lambda_theta),
                e.coeff.to_string(),
            )
        })
        .collect();
    let w0 = rows
        .iter()
        .map(|r| r.0.len())
        .max()
        .unwrap_or(6)
        .max("theta:".len());
    let w1 = rows
        .iter()
        .map(|r| r.1.len())
        .max()
        .unwrap_or(9)
        .max("mu_theta:".len());
    let w2 = rows
        .iter()
        .map(|r| r.2.len())
        .max()
        .unwrap_or(13)
        .max("lambda_theta:".len());
    if show_coeff {
        println!(
            "{:<w0$}  {:<w1$}  {:<w2$}  coeff:",
            "theta:", "mu_theta:", "lambda_theta:"
        );
        for (a, b, c, d) in rows {
            println!("{a:<w0$}  {b:<w1$}  {c:<w2$}  {d}");
        }
    } else {
        println!(
            "{:<w0$}  {:<w1$}  {:<w2$}",
            "theta:", "mu_theta:", "lambda_theta:"
        );
        for (a, b, c, _) in rows {
            println!("{a:<w0$}  {b:<w1$}  {c:<w2$}");
        }
    }
}

fn cmd_column(cli: &Cli, mu: &IntegralWeight, q: bool) -> Result<u8, Error> {
    let col = if q { column_q(mu)? } else { column(mu)? };
    if cli.format == Format::Json {
        println!("{}", serde_json::to_string(&col).map_err(io_internal)?);
        return Ok(0);
    }
    println!("mu: {mu} (r = {})", col.degree());
    print_column_table(&col, q);
    Ok(0)
}

#[derive(Serialize)]
struct RowEntryJson<'a> {
    mu: &'a IntegralWeight,
    coeff: &'a QPolynomial,
}

#[derive(Serialize)]
struct RowJson<'a> {
    lambda: &'a IntegralWeight,
    entries: Vec<RowEntryJson<'a>>,
}

fn cmd_row(cli: &Cli, caps: &Caps, lambda: &IntegralWeight) -> Result<u8, Error> {
    let row = row_q(lambda, caps.window)?;
    if cli.format == Format::Json {
        let json = RowJson {
            lambda,
            entries: row
                .iter()
                .map(|(mu, coeff)| RowEntryJson { mu, coeff })
                .collect(),
        };
        println!("{}", serde_json::to_string(&json).map_err(io_internal)?);
        return Ok(0);
    }
    println!("lambda: {lambda}");
    let labels: Vec<String> = row.iter().map(|(mu, _)| format!("({mu})")).collect();
    let w = labels
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(3)
        .max("mu:".len());
    println!("{:<w$}  coeff:", "mu:");
    for ((_, coeff), label) in row.iter().zip(&labels) {
        println!("{label:<w$}  {coeff}");
    }
    Ok(0)
}

fn print_matrix_text(matrix: &TriangularQMatrix) {
    println!("window size: {}", matrix.len());
    for (idx, weight) in matrix.window().iter().enumerate() {
        println!("  {idx}: {weight}");
    }
    let entries: Vec<(usize, usize, &QPolynomial)> = matrix.entries().collect();
    println!("nonzero entries: {}", entries.len());
    for (r, c, poly) in entries {
        println!("  [{r},{c}] {poly}");
    }
}

fn cmd_matrix(
    cli: &Cli,
    caps: &Caps,
    alg: &Superalgebra,
    lo: &IntegralWeight,
    hi: &IntegralWeight,
    invert: bool,
    specialize_arg: Option<&str>,
) -> Result<u8, Error> {
    let cache = match &cli.cache {
        Some(dir) => {
            Some(Cache::new(dir).map_err(|err| Error::Config(format!("cache directory: {err}")))?)
        }
        None => None,
    };
    let key = CacheKey {
        m: alg.m(),
        n: alg.n(),
        lo,
        hi,
        kind: "aq",
        version: VERSION,
    };
    let aq = match cache
        .as_ref()
        .and_then(|c| c.load_matrix(&key, caps.window))
    {
        Some(matrix) => matrix,
        None => {
            let matrix = assemble_aq_on_interval(lo, hi, caps.window)?;
            if let Some(cache) = &cache {
                if let Err(err) = cache.store_matrix(&key, &matrix) {
                    eprintln!("warning: could not store cache entry: {err}");
                }
            }
            matrix
        }
    };
    let result = if invert {
        invert_unitriangular(&aq)?
    } else {
        aq
    };
    if let Some(spec) = specialize_arg {
        let value_text = spec.strip_prefix("q=").unwrap_or(spec);
        let value: i64 = value_text.parse().map_err(|_| {
            Error::Parse(format!("invalid --specialize `{spec}`: expected q=INTEGER"))
        })?;
        let specialized = specialize(&result, value);
        if cli.format == Format::Json {
            println!(
                "{}",
                serde_json::to_string(&specialized).map_err(io_internal)?
            );
        } else {
            println!("window size: {}", specialized.window().len());
            for (idx, weight) in specialized.window().iter().enumerate() {
                println!("  {idx}: {weight}");
            }
            let entries: Vec<_> = specialized.entries().collect();
            println!("nonzero entries at q = {value}: {}", entries.len());
            for (r, c, v) in entries {
                println!("  [{r},{c}] {v}");
            }
        }
        return Ok(0);
    }
    if cli.format == Format::Json {
        println!("{}", serde_json::to_string(&result).map_err(io_internal)?);
    } else {
        print_matrix_text(&result);
    }
    Ok(0)
}

fn character_of(
    kind: CharKind,
    weight: &IntegralWeight,
    caps: &Caps,
) -> Result<CharacterMap, Error> {
    match kind {
        CharKind::Kac => char_kac(weight, caps),
        CharKind::Simple => char_simple(weight, caps),
        CharKind::G0 => char_g0(weight, caps),
    }
}

fn kind_name(kind: CharKind) -> &'static str {
    match kind {
        CharKind::Kac => "kac",
        CharKind::Simple => "simple",
        CharKind::G0 => "g0",
    }
}

fn cmd_char(cli: &Cli, caps: &Caps, kind: CharKind, weight: &IntegralWeight) -> Result<u8, Error> {
    let chi = character_of(kind, weight, caps)?;
    if cli.format == Format::Json {
        println!("{}", serde_json::to_string(&chi).map_err(io_internal)?);
        return Ok(0);
    }
    println!(
        "{} character at {weight}: dimension {}, {} support weights",
        kind_name(kind),
        chi.dimension()?,
        chi.support_len()
    );
    if let Some((lo, hi)) = chi.region() {
        println!("exact on [{lo}, {hi}]");
    }
    for (w, m) in chi.support() {
        println!("  {w}: {m}");
    }
    Ok(0)
}

#[derive(Serialize)]
struct ConstituentJson<'a> {
    weight: &'a IntegralWeight,
    mult: i64,
}

#[derive(Serialize)]
struct DecomposeJson<'a> {
    kind: &'static str,
    weight: &'a IntegralWeight,
    constituents: Vec<ConstituentJson<'a>>,
}

fn cmd_decompose(
    cli: &Cli,
    caps: &Caps,
    kind: CharKind,
    weight: &IntegralWeight,
) -> Result<u8, Error> {
    let chi = character_of(kind, weight, caps)?;
    let parts = decompose_g0(&chi, caps)?;
    if cli.format == Format::Json {
        let json = DecomposeJson {
            kind: kind_name(kind),
            weight,
            constituents: parts
                .iter()
                .map(|(w, c)| ConstituentJson {
                    weight: w,
                    mult: *c,
                })
                .collect(),
        };
        println!("{}", serde_json::to_string(&json).map_err(io_internal)?);
        return Ok(0);
    }
    println!(
        "g0 constituents of the {} module at {weight}: {}",
        kind_name(kind),
        parts.len()
    );
    for (nu, c) in parts {
        println!("  {nu}: {c}");
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    all_pass: bool,
    falsification_candidates: bool,
    report: &'a kacmod::report::VerificationReport,
}

fn cmd_verify(cli: &Cli, caps: &Caps, inject_fault: bool) -> Result<u8, Error> {
    let fault = inject_fault.then_some(FaultInjection::InflateK1);
    let report = run_all(caps, fault);
    if cli.format == Format::Json {
        let json = VerifyJson {
            all_pass: report.all_pass(),
            falsification_candidates: report.has_falsification_candidate(),
            report: &report,
        };
        println!("{}", serde_json::to_string(&json).map_err(io_internal)?);
    } else {
        print!("{report}");
        println!(
            "{} checks, {} passed",
            report.checks.len(),
            report.checks.iter().filter(|c| c.passed()).count()
        );
    }
    if report.has_falsification_candidate() {
        Ok(3)
    } else if report.all_pass() {
        Ok(0)
    } else {
        Ok(1)
    }
}

fn io_internal(err: serde_json::Error) -> Error {
    Error::Internal(format!("JSON serialization failed: {err}"))
}
