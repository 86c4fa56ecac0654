//! Command-line front end: reads a JSON input document (stdin or file),
//! runs the requested computation and prints a text or JSON report.
//! Exit codes: 0 success / certified / jet ample, 1 negative verdict,
//! 2 malformed input or failed precondition.

use clap::{Parser, Subcommand, ValueEnum};
use std::io::Read;
use std::process::ExitCode;
use toric_jets::arith::Integer;
use toric_jets::divisor::TQDivisor;
use toric_jets::io::{
    self, scalar_vec, GammaRow, InputDocument, ReportBody, ReportDocument, Scalar, SeshadriRow,
};
use toric_jets::jets;
use toric_jets::semigroup::DualConeData;
use toric_jets::{families, Error};

#[derive(Parser)]
#[command(
    name = "toricjet",
    version,
    about = "Exact jet-ampleness toolkit for toric divisors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Gamma constant of a single cone given by generators
    GammaQ {
        /// Input file with a {"cone": ...} document ('-' for stdin)
        #[arg(long, default_value = "-")]
        cone: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Gamma constant of a toric variety (max over dual maximal cones)
    GammaX {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Per-cone jet-ampleness certificate for a given k
    Certify {
        #[arg(long)]
        k: u64,
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Largest certified jet order (per-cone and global bounds)
    MaxK {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact evaluation-map oracle over invariant point configurations
    Oracle {
        #[arg(long)]
        k: u64,
        /// Maximum number of distinct points (default k+1: exact test)
        #[arg(long)]
        max_r: Option<u64>,
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Wall intersection numbers and edge lattice lengths
    Intersections {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Seshadri constants at the fixed points and globally
    Seshadri {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Largest k for which the support function is k-concave
    Concavity {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Adjoint jet-ampleness test (hypotheses + cross-validation)
    Fujita {
        #[arg(long)]
        k: u64,
        /// Use 'canonical' to default D' to K_X when absent from the input
        #[arg(long)]
        dprime: Option<String>,
        /// Also confirm with the exact oracle
        #[arg(long, default_value_t = false)]
        oracle: bool,
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit an input document for a standard family
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Sharpness family: the polytope of (k+n-3) times the base divisor
    Example31 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        k: u64,
    },
    /// Generator polytope of a weighted projective space
    Wps {
        #[arg(long, value_delimiter = ',')]
        weights: Vec<u64>,
    },
    /// m times the standard simplex
    Simplex {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        m: i64,
    },
    /// Axis-aligned box with the given side lengths
    Cube {
        #[arg(long, value_delimiter = ',')]
        sides: Vec<i64>,
    },
    /// Ample trapezoid on a Hirzebruch surface
    Hirzebruch {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        c: i64,
    },
}

fn read_input(path: &str) -> Result<InputDocument, Error> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    }
    InputDocument::parse(&text)
}

fn emit(doc: &ReportDocument, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(doc).expect("reports always serialize")
        ),
        Format::Text => print!("{}", io::render_text(doc)),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::GammaQ { cone, format } => {
            let input = read_input(&cone)?;
            let data = DualConeData::new(input.build_cone()?)?;
            let body = ReportBody::GammaQ {
                gamma: Scalar(data.gamma().clone()),
            };
            emit(
                &ReportDocument {
                    command: "gamma-q".into(),
                    input,
                    report: body,
                },
                format,
            );
            Ok(0)
        }
        Command::GammaX { input, format } => {
            let input = read_input(&input)?;
            let fan = input.build_fan()?;
            let mut per_cone = Vec::new();
            let mut best = toric_jets::Rational::from_integer(0.into());
            for i in 0..fan.n_max_cones() {
                let data = DualConeData::new(fan.cone(i).dual()?)?;
                let g = data.gamma().clone();
                if g > best {
                    best = g.clone();
                }
                per_cone.push(GammaRow {
                    cone: i,
                    gamma: Scalar(g),
                });
            }
            let body = ReportBody::GammaX {
                gamma: Scalar(best),
                per_cone,
            };
            emit(
                &ReportDocument {
                    command: "gamma-x".into(),
                    input,
                    report: body,
                },
                format,
            );
            Ok(0)
        }
        Command::Certify { k, input, format } => {
            let input = read_input(&input)?;
            let divisor = input.build_divisor()?;
            let cert = jets::certify(&divisor, k)?;
            let certified = cert.certified;
            emit(
                &ReportDocument {
                    command: format!("certify --k {k}"),
                    input,
                    report: io::certificate_body(&cert),
                },
                format,
            );
            Ok(if certified { 0 } else { 1 })
        }
        Command::MaxK { input, format } => {
            let input = read_input(&input)?;
            let divisor = input.build_divisor()?;
            let report = jets::max_certified_k(&divisor)?;
            emit(
                &ReportDocument {
                    command: "max-k".into(),
                    input,
                    report: io::max_k_body(&report),
                },
                format,
            );
            Ok(0)
        }
        Command::Oracle {
            k,
            max_r,
            input,
            format,
        } => {
            let input = read_input(&input)?;
            let divisor = input.build_divisor()?;
            let max_r = max_r.unwrap_or(k + 1);
            let outcome = jets::oracle_jet_ample(&divisor, k, max_r)?;
            let ok = outcome.jet_ample;
            emit(
                &ReportDocument {
                    command: format!("oracle --k {k} --max-r {max_r}"),
                    input,
                    report: io::oracle_body(k, max_r, &outcome),
                },
                format,
            );
            Ok(if ok { 0 } else { 1 })
        }
        Command::Intersections { input, format } => {
            let input = read_input(&input)?;
            let divisor = input.build_divisor()?;
            let report = divisor.edge_report()?;
            let rows = report
                .rows
                .iter()
                .map(|r| io::EdgeRowDoc {
                    wall: r.wall,
                    cones: r.cones,
                    endpoints: (scalar_vec(&r.endpoints.0), scalar_vec(&r.endpoints.1)),
                    lattice_length: Scalar(r.lattice_length.clone()),
                    intersection_number: Scalar(r.intersection_number.clone()),
                })
                .collect();
            emit(
                &ReportDocument {
                    command: "intersections".into(),
                    input,
                    report: ReportBody::Intersections { rows },
                },
                format,
            );
            Ok(0)
        }
        Command::Seshadri { input, format } => {
            let input = read_input(&input)?;
            let divisor = input.build_divisor()?;
            let mut per_point = Vec::new();
            for i in 0..divisor.fan().n_max_cones() {
                per_point.push(SeshadriRow {
                    cone: i,
                    vertex: scalar_vec(divisor.local_datum(i)),
                    seshadri: Scalar::from(&divisor.seshadri_at_fixed_point(i)?),
                });
            }
            let global = divisor.seshadri_global()?;
            emit(
                &ReportDocument {
                    command: "seshadri".into(),
                    input,
                    report: ReportBody::Seshadri {
                        per_point,
                        global: Scalar::from(&global),
                    },
                },
                format,
            );
            Ok(0)
        }
        Command::Concavity { input, format } => {
            let input = read_input(&input)?;
            let divisor = input.build_divisor()?;
            let value = divisor.max_concavity()?;
            emit(
                &ReportDocument {
                    command: "concavity".into(),
                    input,
                    report: ReportBody::Concavity {
                        max_concavity: Scalar(value),
                    },
                },
                format,
            );
            Ok(0)
        }
        Command::Fujita {
            k,
            dprime,
            oracle,
            input,
            format,
        } => {
            let input = read_input(&input)?;
            let default_canonical = match dprime.as_deref() {
                None => false,
                Some("canonical") => true,
                Some(other) => {
                    return Err(Error::InvalidInput(format!(
                        "unknown --dprime value {other:?}; only 'canonical' is supported"
                    )))
                }
            };
            let fan = input.build_fan()?;
            let d: TQDivisor = input.build_q_divisor(&fan)?;
            let dp = input.build_dprime(&fan, default_canonical)?;
            let report = jets::fujita_check(&fan, &d, &dp, k, oracle)?;
            let all_pass = report.all_pass;
            let body = ReportBody::Fujita {
                k,
                not_projective_space: report.not_projective_space,
                range_ok: report.range_ok,
                cartier_ok: report.cartier_ok,
                intersections_ok: report.intersections_ok,
                min_intersection: report.min_intersection.map(Scalar),
                all_pass: report.all_pass,
                certified: report.certificate.map(|c| c.certified),
                oracle_confirmed: report.oracle_confirmed,
            };
            emit(
                &ReportDocument {
                    command: format!("fujita --k {k}"),
                    input,
                    report: body,
                },
                format,
            );
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Gen { family } => {
            let polytope = match family {
                GenFamily::Example31 { n, r, k } => {
                    let e = families::example_3_1(n, r, k)?;
                    e.sharp_divisor.polytope()?.clone()
                }
                GenFamily::Wps { weights } => families::weighted_projective(&weights)?,
                GenFamily::Simplex { dim, m } => families::simplex(dim, &Integer::from(m))?,
                GenFamily::Cube { sides } => {
                    let sides: Vec<Integer> = sides.iter().map(|&s| Integer::from(s)).collect();
                    families::cube(&sides)?
                }
                GenFamily::Hirzebruch { a, b, c } => {
                    families::hirzebruch(a, &Integer::from(b), &Integer::from(c))?
                }
            };
            println!("{}", InputDocument::for_polytope(&polytope).to_json());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            // data (the error object) on stdout, diagnostics on stderr
            println!(
                "{}",
                serde_json::to_string(&io::error_document(&err)).expect("error always serializes")
            );
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
