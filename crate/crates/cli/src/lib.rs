//! Command-line surface over `filiform-core`. Every command reads an
//! algebra document (from `--input` or stdin) or a family spec, calls one
//! core operation, and prints a JSON document or a plain table.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 input parse error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use filiform_core::cohomology::cohomology_dims;
use filiform_core::derivations::{
    derivation_basis, inner_basis, is_complete, rank_certificate, weight_system,
};
use filiform_core::families::{build_family, with_diagonal_torus, FamilySpec};
use filiform_core::io::{self, dense_to_map, map_records, CoeffMap, MapRecord, ParseOptions};
use filiform_core::rational::{self, Rational};
use filiform_core::reproduce::{reproduce, ReproduceOptions};
use filiform_core::{Error, LieAlgebra};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "filiform",
    version,
    about = "Exact cohomology, derivations and completeness of Lie algebras over Q"
)]
struct Cli {
    /// Read the algebra document from FILE instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the result to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Accept input documents that fail the Jacobi identity.
    #[arg(long, global = true)]
    skip_jacobi: bool,
    /// Divide family parameters by lambda_1 (A, B, rh).
    #[arg(long, global = true)]
    normalize_lambda: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List basis triples violating the Jacobi identity.
    Jacobi,
    /// Dimensions of C^p, Z^p, B^p and H^p with adjoint coefficients.
    Cohomology {
        #[arg(long)]
        p: usize,
    },
    /// Bases of Der(g) and of the inner derivations.
    Derivations,
    /// Diagonal torus and rank lower bound of a nilpotent algebra.
    Rank,
    /// Completeness verdict (trivial center, only inner derivations).
    Complete,
    /// Build a family member, e.g. `family A n=10 k=4 lambda=1,0`.
    Family {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Adjoin the diagonal torus of the input algebra.
    Semidirect,
    /// Characteristic sequence at a vector (default: a filiform witness, else Y_1).
    CharSeq {
        /// Comma separated coordinates, e.g. `1,1,0,0`.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Run the full reproduction suite and print the report.
    ReproducePaper,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    status: i32,
    message: String,
}

fn fail(status: i32, message: impl Into<String>) -> Failure {
    Failure {
        status,
        message: message.into(),
    }
}

fn parse_failure(e: Error) -> Failure {
    fail(EXIT_PARSE, format!("error: {e}"))
}

/// Status for an error raised by a core operation on valid input.
fn op_failure(e: Error) -> Failure {
    let status = match e {
        Error::InvalidFamily(_) => EXIT_USAGE,
        Error::Parse { .. } | Error::Document(_) => EXIT_PARSE,
        _ => EXIT_CHECK_FAILED,
    };
    fail(status, format!("error: {e}"))
}

struct Rendered {
    body: String,
    status: i32,
}

fn render<T: Serialize>(
    format: Format,
    value: &T,
    table: impl FnOnce() -> String,
    status: i32,
) -> Rendered {
    let body = match format {
        Format::Json => io::to_json(value),
        Format::Table => table(),
    };
    Rendered { body, status }
}

/// Runs `filiform <args...>`; `args[0]` is the program name. `stdin` is
/// only read when a command needs an input document and `--input` is absent.
pub fn run_command<S, F>(args: &[S], stdin: F) -> CommandOutput
where
    S: AsRef<str>,
    F: FnOnce() -> std::io::Result<String>,
{
    let cli = match Cli::try_parse_from(args.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandOutput {
                        status: EXIT_OK,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => CommandOutput {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let output = cli.output.clone();
    match execute(&cli, stdin) {
        Ok(r) => match output {
            Some(path) => match std::fs::write(&path, &r.body) {
                Ok(()) => CommandOutput {
                    status: r.status,
                    ..CommandOutput::default()
                },
                Err(e) => CommandOutput {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
            None => CommandOutput {
                status: r.status,
                stdout: r.body,
                stderr: String::new(),
            },
        },
        Err(f) => CommandOutput {
            status: f.status,
            stdout: String::new(),
            stderr: format!("{}\n", f.message),
        },
    }
}

fn read_input<F: FnOnce() -> std::io::Result<String>>(
    cli: &Cli,
    stdin: F,
) -> Result<String, Failure> {
    match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| {
            fail(
                EXIT_USAGE,
                format!("error: cannot read {}: {e}", path.display()),
            )
        }),
        None => stdin().map_err(|e| fail(EXIT_USAGE, format!("error: cannot read stdin: {e}"))),
    }
}

fn load_algebra<F: FnOnce() -> std::io::Result<String>>(
    cli: &Cli,
    stdin: F,
    check_jacobi: bool,
) -> Result<LieAlgebra, Failure> {
    let text = read_input(cli, stdin)?;
    io::parse_algebra_with(&text, ParseOptions { check_jacobi }).map_err(parse_failure)
}

#[derive(Serialize)]
struct JacobiReport {
    jacobi: &'static str,
    violations: Vec<ViolationRecord>,
}

#[derive(Serialize)]
struct ViolationRecord {
    triple: (usize, usize, usize),
    residual: CoeffMap,
}

#[derive(Serialize)]
struct DerivationReport {
    dim_der: usize,
    dim_inner: usize,
    outer: usize,
    derivations: Vec<Vec<MapRecord>>,
    inner: Vec<Vec<MapRecord>>,
}

#[derive(Serialize)]
struct RankReport {
    rank_lower_bound: usize,
    filiform: bool,
    torus: Vec<Vec<String>>,
    generators: Vec<usize>,
}

#[derive(Serialize)]
struct CompleteReport {
    h0: usize,
    h1: usize,
    complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    central_element: Option<CoeffMap>,
    #[serde(skip_serializing_if = "Option::is_none")]
    outer_derivation: Option<Vec<MapRecord>>,
}

#[derive(Serialize)]
struct CharSeqReport {
    sequence: Vec<usize>,
    at: CoeffMap,
    filiform_at: bool,
}

fn texts(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::to_text).collect()
}

fn map_text(m: &BTreeMap<usize, String>, labels: &[String]) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .map(|(k, c)| match c.as_str() {
            "1" => labels[k - 1].clone(),
            "-1" => format!("-{}", labels[k - 1]),
            _ => format!("{c}*{}", labels[k - 1]),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn records_text(records: &[MapRecord], labels: &[String]) -> String {
    records
        .iter()
        .map(|r| format!("{} -> {}", labels[r.input - 1], map_text(&r.image, labels)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn execute<F: FnOnce() -> std::io::Result<String>>(
    cli: &Cli,
    stdin: F,
) -> Result<Rendered, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Jacobi => {
            let g = load_algebra(cli, stdin, false)?;
            let violations: Vec<ViolationRecord> = g
                .jacobi_check()
                .into_iter()
                .map(|v| ViolationRecord {
                    triple: (v.triple.0 + 1, v.triple.1 + 1, v.triple.2 + 1),
                    residual: dense_to_map(&v.residual),
                })
                .collect();
            let ok = violations.is_empty();
            let rep = JacobiReport {
                jacobi: if ok { "pass" } else { "fail" },
                violations,
            };
            let status = if ok { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(render(
                f,
                &rep,
                || {
                    let mut s = format!("jacobi: {}\n", rep.jacobi);
                    for v in &rep.violations {
                        let (i, j, k) = v.triple;
                        let _ =
                            writeln!(s, "({i}, {j}, {k}): {}", map_text(&v.residual, g.labels()));
                    }
                    s
                },
                status,
            ))
        }
        Command::Cohomology { p } => {
            let g = load_algebra(cli, stdin, !cli.skip_jacobi)?;
            let d = cohomology_dims(&g, *p);
            #[derive(Serialize)]
            struct Dims {
                p: usize,
                dim_c: usize,
                dim_z: usize,
                dim_b: usize,
                dim_h: usize,
            }
            let rep = Dims {
                p: d.p,
                dim_c: d.dim_c,
                dim_z: d.dim_z,
                dim_b: d.dim_b,
                dim_h: d.dim_h,
            };
            Ok(render(
                f,
                &rep,
                || {
                    format!(
                        "p    C^p  Z^p  B^p  H^p\n{:<4} {:<4} {:<4} {:<4} {}\n",
                        d.p, d.dim_c, d.dim_z, d.dim_b, d.dim_h
                    )
                },
                EXIT_OK,
            ))
        }
        Command::Derivations => {
            let g = load_algebra(cli, stdin, !cli.skip_jacobi)?;
            let der = derivation_basis(&g);
            let inner = inner_basis(&g);
            let rep = DerivationReport {
                dim_der: der.len(),
                dim_inner: inner.len(),
                outer: der.len().saturating_sub(inner.len()),
                derivations: der.basis().iter().map(map_records).collect(),
                inner: inner.basis().iter().map(map_records).collect(),
            };
            Ok(render(
                f,
                &rep,
                || {
                    let mut s = format!(
                        "dim Der = {}, dim inner = {}, outer = {}\n",
                        rep.dim_der, rep.dim_inner, rep.outer
                    );
                    for (i, d) in rep.derivations.iter().enumerate() {
                        let _ = writeln!(s, "D{}: {}", i + 1, records_text(d, g.labels()));
                    }
                    s
                },
                EXIT_OK,
            ))
        }
        Command::Rank => {
            let g = load_algebra(cli, stdin, !cli.skip_jacobi)?;
            let cert = rank_certificate(&g).map_err(op_failure)?;
            let ws = weight_system(&g, &cert.torus).map_err(op_failure)?;
            let rep = RankReport {
                rank_lower_bound: cert.rank_lower_bound,
                filiform: cert.filiform,
                torus: cert
                    .torus
                    .weight_vectors()
                    .iter()
                    .map(|w| texts(w))
                    .collect(),
                generators: ws.generators.iter().map(|i| i + 1).collect(),
            };
            Ok(render(
                f,
                &rep,
                || {
                    let mut s = format!(
                        "rank >= {}, filiform: {}\n",
                        rep.rank_lower_bound, rep.filiform
                    );
                    for (a, w) in rep.torus.iter().enumerate() {
                        let _ = writeln!(s, "T{}: diag({})", a + 1, w.join(", "));
                    }
                    s
                },
                EXIT_OK,
            ))
        }
        Command::Complete => {
            let g = load_algebra(cli, stdin, !cli.skip_jacobi)?;
            let v = is_complete(&g);
            let rep = CompleteReport {
                h0: v.h0,
                h1: v.h1,
                complete: v.complete,
                central_element: v.central_element.as_deref().map(dense_to_map),
                outer_derivation: v.outer_derivation.as_ref().map(map_records),
            };
            let status = if v.complete {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(render(
                f,
                &rep,
                || {
                    let mut s = format!(
                        "h0 = {}, h1 = {}, complete: {}\n",
                        rep.h0, rep.h1, rep.complete
                    );
                    if let Some(c) = &rep.central_element {
                        let _ = writeln!(s, "central: {}", map_text(c, g.labels()));
                    }
                    if let Some(d) = &rep.outer_derivation {
                        let _ = writeln!(s, "outer derivation: {}", records_text(d, g.labels()));
                    }
                    s
                },
                status,
            ))
        }
        Command::Family { spec } => {
            let mut spec: FamilySpec = spec.join(" ").parse().map_err(op_failure)?;
            if cli.normalize_lambda {
                spec = spec.normalize_lambda().map_err(op_failure)?;
            }
            let g = build_family(&spec).map_err(op_failure)?;
            Ok(algebra_output(f, &g))
        }
        Command::Semidirect => {
            let g = load_algebra(cli, stdin, !cli.skip_jacobi)?;
            let s = with_diagonal_torus(&g).map_err(op_failure)?;
            Ok(algebra_output(f, &s))
        }
        Command::CharSeq { at } => {
            let g = load_algebra(cli, stdin, !cli.skip_jacobi)?;
            let y = match at {
                Some(text) => {
                    let y: Vec<Rational> = text
                        .split(',')
                        .map(|t| rational::parse(t.trim()))
                        .collect::<Result<_, _>>()
                        .map_err(|e| fail(EXIT_USAGE, format!("error: --at: {e}")))?;
                    if y.len() != g.dim() {
                        return Err(fail(
                            EXIT_USAGE,
                            format!("error: --at needs {} coordinates, got {}", g.dim(), y.len()),
                        ));
                    }
                    y
                }
                None => g
                    .is_filiform()
                    .witness
                    .unwrap_or_else(|| filiform_core::lie::unit(g.dim(), 0)),
            };
            let c = g.characteristic_sequence_at(&y).map_err(op_failure)?;
            let rep = CharSeqReport {
                filiform_at: c.parts == vec![g.dim() - 1, 1],
                sequence: c.parts.clone(),
                at: dense_to_map(&y),
            };
            Ok(render(
                f,
                &rep,
                || format!("c = {c} at {}\n", map_text(&rep.at, g.labels())),
                EXIT_OK,
            ))
        }
        Command::ReproducePaper => {
            let report = reproduce(ReproduceOptions::default()).map_err(op_failure)?;
            let status = if report.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(render(f, &report, || report.to_table(), status))
        }
    }
}

fn algebra_output(f: Format, g: &LieAlgebra) -> Rendered {
    let body = match f {
        Format::Json => io::serialize_algebra(g),
        Format::Table => {
            let mut s = format!("dim {}\n", g.dim());
            for (&(i, j), v) in g.constants() {
                let image: BTreeMap<usize, String> = v
                    .iter()
                    .map(|(k, c)| (k + 1, rational::to_text(c)))
                    .collect();
                let _ = writeln!(
                    s,
                    "[{}, {}] = {}",
                    g.labels()[i],
                    g.labels()[j],
                    map_text(&image, g.labels())
                );
            }
            s
        }
    };
    Rendered {
        body,
        status: EXIT_OK,
    }
}
