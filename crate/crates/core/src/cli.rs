//! Command-line front end.
//!
//! Exit status is 0 on success, 1 for invalid input or usage errors and 2
//! when a size guard stops the computation. Diagnostics go to the error
//! stream, results to the output stream or `--output` file.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cliques::{self, Ordering, Relation};
use crate::error::Error;
use crate::hamio::{self, Format};
use crate::kravchuk;
use crate::pauli::DEFAULT_TOLERANCE;
use crate::projector::{self, ProjectorSpec};
use crate::verify;

#[derive(Debug, Parser)]
#[command(
    name = "numproj",
    version,
    about = "Particle-number projectors, Kravchuk coefficients and commuting cliques"
)]
struct Cli {
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Csv,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RelationArg {
    General,
    Qubitwise,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Magnitude,
    Input,
    Lex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print C(n, k, m).
    #[command(allow_negative_numbers = true)]
    Coeff { n: i64, k: i64, m: i64 },

    /// Print the table of C(n, k, m), rows k and columns m.
    #[command(allow_negative_numbers = true)]
    Table {
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },

    /// Print the tables for n = 1..=N.
    #[command(allow_negative_numbers = true)]
    Pyramid { max_n: i64 },

    /// Check the column-sum, orthogonality, row-sum and number-operator identities.
    #[command(allow_negative_numbers = true)]
    Identities {
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },

    /// Print the Pauli expansion of P(n, k).
    #[command(allow_negative_numbers = true)]
    Projector {
        n: i64,
        k: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Project an operator file onto the k-particle subspace.
    Project {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        particles: i64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },

    /// Group the terms of an operator file into commuting cliques.
    Partition {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "general")]
        relation: RelationArg,
        #[arg(long, value_enum, default_value = "magnitude")]
        order: OrderArg,
        /// Report clique counts for every relation and ordering instead.
        #[arg(long)]
        all_policies: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Run the dense-matrix oracle suites for n = 1..=N.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn to_usize(name: &'static str, v: i64) -> Result<usize, Error> {
    usize::try_from(v).map_err(|_| Error::Domain {
        name,
        value: v as i128,
        expected: "a non-negative integer".into(),
    })
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_result(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn execute(
    command: Command,
    pool: Option<&rayon::ThreadPool>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    match command {
        Command::Coeff { n, k, m } => {
            let c = kravchuk::coefficient(to_usize("n", n)?, to_usize("k", k)?, to_usize("m", m)?)?;
            write_result(out, None, &format!("{c}\n"))
        }
        Command::Table { n, format } => {
            let t = kravchuk::table(to_usize("n", n)?)?;
            let text = match format {
                OutFormat::Text => t.to_string(),
                OutFormat::Csv => t.to_csv(),
                OutFormat::Json => t.to_json() + "\n",
            };
            write_result(out, None, &text)
        }
        Command::Pyramid { max_n } => {
            let mut text = String::new();
            for t in kravchuk::pyramid(to_usize("max_n", max_n)?)? {
                text.push_str(&format!("n = {}\n{t}\n", t.n()));
            }
            write_result(out, None, &text)
        }
        Command::Identities { n, format } => {
            let report = kravchuk::verify_identities(to_usize("n", n)?)?;
            let text = match format {
                ReportFormat::Text => report.to_string(),
                ReportFormat::Json => serde_json::to_string_pretty(&report).expect("plain data") + "\n",
            };
            write_result(out, None, &text)?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Check("identity check failed".into()))
            }
        }
        Command::Projector { n, k, format, output } => {
            let spec = ProjectorSpec::new(to_usize("n", n)?, to_usize("k", k)?)?;
            let p = projector::build_projector(spec)?;
            write_result(out, output.as_ref(), &hamio::emit(&p, format.into()))
        }
        Command::Project {
            input,
            particles,
            tol,
            output,
            format,
        } => {
            if !(tol >= 0.0) {
                return Err(Error::Domain {
                    name: "tol",
                    value: 0,
                    expected: format!("a non-negative tolerance, got {tol}"),
                }
                .into());
            }
            let operator = hamio::read_operator(&read_input(&input)?)?;
            for w in &operator.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let spec = ProjectorSpec::new(operator.sum.n(), to_usize("particles", particles)?)?;
            let run = || projector::project_operator_with_tolerance(spec, &operator.sum, tol);
            let projected = match pool {
                Some(pool) => pool.install(run)?,
                None => run()?,
            };
            let _ = writeln!(
                err,
                "qubits: {}, particles: {}, input terms: {}, projected terms: {}",
                spec.n(),
                spec.k(),
                operator.sum.len(),
                projected.len()
            );
            write_result(out, output.as_ref(), &hamio::emit(&projected, format.into()))
        }
        Command::Partition {
            input,
            relation,
            order,
            all_policies,
            format,
            output,
        } => {
            let operator = hamio::read_operator(&read_input(&input)?)?;
            for w in &operator.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let sum = operator.sum.simplify(0.0);
            let text = if all_policies {
                let mut rows = Vec::new();
                for r in Relation::ALL {
                    for o in Ordering::ALL {
                        let p = cliques::partition(&sum, r, o)?;
                        rows.push((r, o, p.len()));
                    }
                }
                match format {
                    ReportFormat::Text => rows
                        .iter()
                        .map(|(r, o, c)| format!("{r:<10} {o:<10} {c}\n"))
                        .collect(),
                    ReportFormat::Json => {
                        let v: Vec<_> = rows
                            .iter()
                            .map(|(r, o, c)| serde_json::json!({"relation": r, "policy": o, "clique_count": c}))
                            .collect();
                        serde_json::to_string_pretty(&v).expect("plain data") + "\n"
                    }
                }
            } else {
                let relation = match relation {
                    RelationArg::General => Relation::General,
                    RelationArg::Qubitwise => Relation::Qubitwise,
                };
                let ordering = match order {
                    OrderArg::Magnitude => Ordering::Magnitude,
                    OrderArg::Input => Ordering::Input,
                    OrderArg::Lex => Ordering::Lex,
                };
                let p = cliques::partition(&sum, relation, ordering)?;
                match format {
                    ReportFormat::Json => {
                        serde_json::to_string_pretty(&p.to_json_value(&sum)).expect("plain data") + "\n"
                    }
                    ReportFormat::Text => {
                        let mut s = format!(
                            "relation: {relation}\npolicy: {ordering}\nterms: {}\ncliques: {}\n",
                            sum.len(),
                            p.len()
                        );
                        for (i, clique) in p.cliques.iter().enumerate() {
                            let labels: Vec<String> = clique.iter().map(|k| sum.label(k)).collect();
                            s.push_str(&format!("{i}: {}\n", labels.join(" ")));
                        }
                        s
                    }
                }
            };
            write_result(out, output.as_ref(), &text)
        }
        Command::Verify { max_n, seed } => {
            let results = verify::run_suites(max_n, seed)?;
            let mut text = String::new();
            for r in &results {
                text.push_str(&format!("{r}\n"));
            }
            write_result(out, None, &text)?;
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Check(format!("{failed} suite(s) failed")))
            }
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };

    let outcome = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => execute(cli.command, Some(&pool), out, err),
            Err(e) => Err(Failure::Io(format!("cannot start thread pool: {e}"))),
        },
        None => execute(cli.command, None, out, err),
    };

    match outcome {
        Ok(()) => 0,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource() {
                2
            } else {
                1
            }
        }
        Err(Failure::Io(msg)) | Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
