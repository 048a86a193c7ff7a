//! Command-line front end for the skewq library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 I/O or parse error,
//! 3 contract violation (input the library refuses, e.g. a non-skew matrix).

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use skewq::extension::{
    extend_to_quasi_orthogonal, is_quasi_orthogonal, quasi_orthogonality_index, ExtensionResult,
};
use skewq::linalg::{format_real, gram, matrix_to_text, parse_matrix_text, DenseMatrix, SkewMatrix};
use skewq::spectral::{skew_spectrum, DEFAULT_GAP_TOL};
use skewq::tournament::{
    add_dominating_vertex, classify_index, paley_tournament, parse_tournament_text,
    random_tournament, tournament_to_text, Tournament,
};
use skewq::verify::{audit_tournament, certify_extension, AuditReport};
use skewq::Error;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_CONTRACT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "skewq",
    version,
    about = "Skew-symmetric spectra, quasi-orthogonal extensions, and tournament classification"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Relative gap tolerance for clustering the eigenvalues of -S^2.
    #[arg(long, global = true, default_value_t = DEFAULT_GAP_TOL)]
    gap_tol: f64,
    /// Relative tolerance for verification residuals.
    #[arg(long, global = true, default_value_t = 1e-7)]
    verify_tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectral clusters of a skew-symmetric matrix.
    Spectrum {
        /// Matrix file; "-" or absent reads stdin.
        input: Option<PathBuf>,
    },
    /// Print the quasi-orthogonality index.
    Index {
        input: Option<PathBuf>,
    },
    /// Build the minimal quasi-orthogonal extension and self-certify it.
    Extend {
        input: Option<PathBuf>,
        /// Write the extended matrix here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write a JSON log (q, index, border steps, certification) here.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Generate, transform, classify, and audit tournaments.
    #[command(subcommand)]
    Tournament(TournamentCmd),
    /// Audit a tournament file, test a matrix for quasi-orthogonality, or
    /// (with --extends) certify it as an extension of a given skew matrix.
    Verify {
        input: Option<PathBuf>,
        /// Certify the input as a quasi-orthogonal extension of this matrix.
        #[arg(long)]
        extends: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TournamentCmd {
    /// Paley tournament on GF(q); q must be a prime congruent to 3 mod 4.
    Paley { q: usize },
    /// Seeded random tournament on n vertices.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the index of a tournament against the minimal bound for its order.
    Classify { input: Option<PathBuf> },
    /// Run the exact/floating consistency audit.
    Audit { input: Option<PathBuf> },
    /// Append a vertex dominated by every existing vertex.
    Plus { input: Option<PathBuf> },
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_IO,
            message: message.into(),
        }
    }

    fn contract(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CONTRACT,
            message: message.into(),
        }
    }
}

/// Library errors split into "your file is malformed" (exit 2) and "the
/// library refuses this input" (exit 3).
fn lib_failure(e: Error) -> Failure {
    match e {
        Error::Parse { .. } | Error::InvalidTournament { .. } => Failure::io(e.to_string()),
        _ => Failure::contract(e.to_string()),
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Failure::io(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::io(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Path, content: &str) -> Result<(), Failure> {
    fs::write(path, content)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))
}

fn load_skew(text: &str) -> Result<SkewMatrix, Failure> {
    let dense = parse_matrix_text(text).map_err(lib_failure)?;
    SkewMatrix::try_from_dense(&dense).map_err(lib_failure)
}

/// Token count of the first data line decides the format: tournament files
/// start with a single integer, matrix files with "rows cols".
fn looks_like_matrix(text: &str) -> bool {
    for line in text.lines() {
        let data = line.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        return data.split_whitespace().count() >= 2;
    }
    false
}

fn load_tournament(text: &str) -> Result<Tournament, Failure> {
    if looks_like_matrix(text) {
        let dense = parse_matrix_text(text).map_err(lib_failure)?;
        Tournament::try_from_dense(&dense).map_err(lib_failure)
    } else {
        parse_tournament_text(text).map_err(lib_failure)
    }
}

fn print_report(report: &AuditReport) {
    for check in &report.checks {
        println!(
            "check {}: {} (residual {}, tolerance {})",
            check.name,
            if check.pass { "PASS" } else { "FAIL" },
            format_real(check.residual),
            format_real(check.tolerance),
        );
    }
    println!("result: {}", if report.passed() { "PASS" } else { "FAIL" });
}

fn report_exit(report: &AuditReport) -> u8 {
    if report.passed() {
        0
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn cmd_spectrum(cli: &Cli, input: &Option<PathBuf>) -> Result<u8, Failure> {
    let s = load_skew(&read_input(input)?)?;
    let spec = skew_spectrum(&s, cli.gap_tol).map_err(lib_failure)?;
    if cli.json {
        let value = json!({
            "order": spec.order,
            "clusters": spec.clusters,
            "zero_multiplicity": spec.zero_multiplicity,
            "rho": spec.rho(),
            "mu": spec.mu(),
            "alpha": spec.alpha(),
            "defect": spec.defect(),
        });
        println!("{value}");
    } else {
        println!("order: {}", spec.order);
        println!("zero_multiplicity: {}", spec.zero_multiplicity);
        println!("defect: {}", spec.defect());
        match spec.rho() {
            Some(rho) => println!("rho: {}", format_real(rho)),
            None => println!("rho: none"),
        }
        for cluster in &spec.clusters {
            println!(
                "cluster: lambda={} multiplicity={}",
                format_real(cluster.lambda),
                cluster.multiplicity
            );
        }
    }
    Ok(0)
}

fn cmd_index(cli: &Cli, input: &Option<PathBuf>) -> Result<u8, Failure> {
    let s = load_skew(&read_input(input)?)?;
    let index = quasi_orthogonality_index(&s, cli.gap_tol).map_err(lib_failure)?;
    if cli.json {
        println!("{}", json!({ "order": s.order(), "index": index }));
    } else {
        println!("{index}");
    }
    Ok(0)
}

fn extension_log(r: &ExtensionResult, report: &AuditReport, input_order: usize) -> serde_json::Value {
    json!({
        "input_order": input_order,
        "order": r.q_matrix.order(),
        "q": r.q_value,
        "index": r.index,
        "steps": r.steps,
        "certification": report,
    })
}

fn cmd_extend(
    cli: &Cli,
    input: &Option<PathBuf>,
    output: &Option<PathBuf>,
    log: &Option<PathBuf>,
) -> Result<u8, Failure> {
    let s = load_skew(&read_input(input)?)?;
    let r = extend_to_quasi_orthogonal(&s, cli.gap_tol).map_err(lib_failure)?;
    let report = certify_extension(&s, &r, cli.verify_tol);
    let matrix_text = matrix_to_text(&r.q_matrix.to_dense());
    let log_value = extension_log(&r, &report, s.order());
    if let Some(path) = log {
        write_output(path, &format!("{log_value:#}\n"))?;
    }
    match output {
        Some(path) => {
            write_output(path, &matrix_text)?;
            if cli.json {
                println!("{log_value}");
            } else {
                println!(
                    "order: {}\nq: {}\nindex: {}",
                    r.q_matrix.order(),
                    format_real(r.q_value),
                    r.index
                );
                print_report(&report);
            }
        }
        None => {
            if cli.json {
                let mut value = log_value;
                value["matrix"] = json!(matrix_text);
                println!("{value}");
            } else {
                // Bare matrix on stdout so the command pipes; summary on stderr.
                print!("{matrix_text}");
                eprintln!(
                    "extend: order {} q {} index {} certification {}",
                    r.q_matrix.order(),
                    format_real(r.q_value),
                    r.index,
                    if report.passed() { "PASS" } else { "FAIL" }
                );
            }
        }
    }
    Ok(report_exit(&report))
}

fn emit_tournament(cli: &Cli, t: &Tournament) -> u8 {
    let text = tournament_to_text(t);
    if cli.json {
        println!("{}", json!({ "order": t.order(), "tournament": text }));
    } else {
        print!("{text}");
    }
    0
}

fn cmd_tournament(cli: &Cli, cmd: &TournamentCmd) -> Result<u8, Failure> {
    match cmd {
        TournamentCmd::Paley { q } => {
            let t = paley_tournament(*q).map_err(lib_failure)?;
            Ok(emit_tournament(cli, &t))
        }
        TournamentCmd::Random { n, seed } => {
            if *n < 2 {
                return Err(Failure::contract(format!(
                    "order {n} unsupported: a tournament needs at least 2 vertices"
                )));
            }
            Ok(emit_tournament(cli, &random_tournament(*n, *seed)))
        }
        TournamentCmd::Classify { input } => {
            let t = load_tournament(&read_input(input)?)?;
            let c = classify_index(&t, cli.gap_tol).map_err(lib_failure)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_value(&c).expect("classification serializes")
                );
            } else {
                println!("order: {}", c.n);
                println!("residue: {}", c.residue);
                println!("minimal_index_bound: {}", c.minimal_index_bound);
                println!("numeric_index: {}", c.numeric_index);
                println!("achieved: {}", c.achieved);
                match c.matched_poly {
                    Some((case, k)) => println!("matched_polynomial: {case} k={k}"),
                    None => println!("matched_polynomial: none"),
                }
            }
            Ok(0)
        }
        TournamentCmd::Audit { input } => {
            let t = load_tournament(&read_input(input)?)?;
            let report = audit_tournament(&t, cli.gap_tol);
            if cli.json {
                println!(
                    "{}",
                    json!({ "kind": "tournament_audit", "order": t.order(),
                            "pass": report.passed(), "report": report })
                );
            } else {
                print_report(&report);
            }
            Ok(report_exit(&report))
        }
        TournamentCmd::Plus { input } => {
            let t = load_tournament(&read_input(input)?)?;
            Ok(emit_tournament(cli, &add_dominating_vertex(&t)))
        }
    }
}

/// Mean diagonal of the Gram matrix and the Frobenius distance to `q I`.
fn gram_deviation(a: &DenseMatrix) -> (f64, f64) {
    let g = gram(a);
    let n = a.rows();
    let q = (0..n).map(|i| g.get(i, i)).sum::<f64>() / n as f64;
    let mut resid = 0.0;
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { q } else { 0.0 };
            let d = g.get(i, j) - want;
            resid += d * d;
        }
    }
    (q, resid.sqrt())
}

fn cmd_verify(
    cli: &Cli,
    input: &Option<PathBuf>,
    extends: &Option<PathBuf>,
) -> Result<u8, Failure> {
    let text = read_input(input)?;

    if let Some(base_path) = extends {
        let base_text = fs::read_to_string(base_path)
            .map_err(|e| Failure::io(format!("cannot read {}: {e}", base_path.display())))?;
        let s = load_skew(&base_text)?;
        let q = load_skew(&text)?;
        if q.order() < s.order() {
            return Err(Failure::contract(format!(
                "claimed extension of order {} is smaller than the base matrix of order {}",
                q.order(),
                s.order()
            )));
        }
        let (q_value, _) = gram_deviation(&q.to_dense());
        let r = ExtensionResult {
            index: q.order() - s.order(),
            q_matrix: q,
            q_value,
            steps: vec![],
        };
        let report = certify_extension(&s, &r, cli.verify_tol);
        if cli.json {
            println!(
                "{}",
                json!({ "kind": "extension_certificate", "q": q_value,
                        "pass": report.passed(), "report": report })
            );
        } else {
            println!("kind: extension_certificate");
            println!("q: {}", format_real(q_value));
            print_report(&report);
        }
        return Ok(report_exit(&report));
    }

    if !looks_like_matrix(&text) {
        let t = load_tournament(&text)?;
        let report = audit_tournament(&t, cli.gap_tol);
        if cli.json {
            println!(
                "{}",
                json!({ "kind": "tournament_audit", "order": t.order(),
                        "pass": report.passed(), "report": report })
            );
        } else {
            println!("kind: tournament_audit");
            print_report(&report);
        }
        return Ok(report_exit(&report));
    }

    let a = parse_matrix_text(&text).map_err(lib_failure)?;
    if !a.is_square() {
        return Err(Failure::contract(format!(
            "quasi-orthogonality needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let (q, residual) = gram_deviation(&a);
    let pass = is_quasi_orthogonal(&a, cli.verify_tol).is_some();
    let tolerance = cli.verify_tol * q.max(0.0) * (a.rows() as f64).sqrt();
    let report = AuditReport {
        checks: vec![skewq::verify::AuditCheck {
            name: "quasi_orthogonal".into(),
            pass,
            residual,
            tolerance,
        }],
    };
    if cli.json {
        println!(
            "{}",
            json!({ "kind": "quasi_orthogonal", "q": q,
                    "pass": report.passed(), "report": report })
        );
    } else {
        println!("kind: quasi_orthogonal");
        println!("q: {}", format_real(q));
        print_report(&report);
    }
    Ok(report_exit(&report))
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    for (name, value) in [("--gap-tol", cli.gap_tol), ("--verify-tol", cli.verify_tol)] {
        if !(value.is_finite() && value > 0.0) {
            return Err(Failure::contract(format!(
                "{name} must be positive and finite, got {value}"
            )));
        }
    }
    match &cli.command {
        Command::Spectrum { input } => cmd_spectrum(cli, input),
        Command::Index { input } => cmd_index(cli, input),
        Command::Extend { input, output, log } => cmd_extend(cli, input, output, log),
        Command::Tournament(cmd) => cmd_tournament(cli, cmd),
        Command::Verify { input, extends } => cmd_verify(cli, input, extends),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
