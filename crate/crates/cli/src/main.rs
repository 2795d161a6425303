use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jramsey::embedding::DEFAULT_BUDGET;
use jramsey::families::TheoremCase;
use jramsey::oracle::{self, OracleError, ENUMERATION_CAP};
use jramsey::suite;
use jramsey::witness::{
    error_json, extract_t_paths, extract_theorem1, extract_theorem2, verify_extremal,
    verify_extremal_graph, Dichotomy, ExtractOptions, WitnessError,
};
use jramsey::{Graph, PatternSpec};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MAXIMALITY: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_CAP: u8 = 5;

#[derive(Parser)]
#[command(
    name = "jramsey",
    version,
    about = "Path versus Jahangir Ramsey dichotomies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (defaults depend on the command).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Graph6,
    Human,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExtremalCase {
    Thm1,
    Thm2Even,
    Thm2Odd,
    Thm3,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as graph6.
    Build { spec: String },
    /// Run an extractor on each input graph and print its trace.
    Witness {
        /// File of graph6 lines, or `-` for standard input.
        input: Option<PathBuf>,
        /// A single graph6 string instead of an input file.
        #[arg(long, conflicts_with = "input")]
        graph6: Option<String>,
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Run outside the proven parameter bounds (diagnostics only).
        #[arg(long)]
        force: bool,
    },
    /// Check a lower-bound construction (or a supplied graph) for both failures.
    Extremal {
        #[arg(long = "case", value_enum)]
        case: ExtremalCase,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Check this graph instead of the built construction.
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exact small Ramsey value with a certificate.
    Ramsey {
        g: String,
        h: String,
        /// Orders below CAP are examined; otherwise the answer is ">= CAP".
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// One graph6 line per isomorphism class of the given order.
    Enumerate {
        order: usize,
        /// Raise the order cap (default 9, at most 16).
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        max_order: usize,
    },
    /// Run a seeded random extraction suite.
    Suite {
        name: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Also write every case's trace, one JSON document per line.
        #[arg(long, value_name = "FILE")]
        traces: Option<PathBuf>,
    },
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err((code, message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(code);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &outcome.text),
        None => io::stdout().write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_FAILURE);
    }
    ExitCode::from(outcome.code)
}

type CliResult = Result<Outcome, (u8, String)>;

fn usage(message: impl ToString) -> (u8, String) {
    (EXIT_USAGE, message.to_string())
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Build { spec } => build(spec, cli.format.unwrap_or(Format::Graph6)),
        Command::Witness {
            input,
            graph6,
            theorem,
            n,
            s,
            m,
            t,
            budget,
            force,
        } => {
            let graphs = read_graphs(input.as_ref(), graph6.as_deref())?;
            let opts = ExtractOptions {
                budget: *budget,
                force: *force,
            };
            witness(
                &graphs,
                *theorem,
                (*n, *s, *m, *t),
                opts,
                cli.format.unwrap_or(Format::Json),
            )
        }
        Command::Extremal {
            case,
            n,
            s,
            m,
            t,
            graph6,
            budget,
        } => {
            let case = match case {
                ExtremalCase::Thm1 => TheoremCase::Thm1 {
                    n: *n,
                    s: *s,
                    m: *m,
                },
                ExtremalCase::Thm2Even => TheoremCase::Thm2EvenM {
                    n: *n,
                    s: *s,
                    m: *m,
                },
                ExtremalCase::Thm2Odd => TheoremCase::Thm2OddM {
                    n: *n,
                    s: *s,
                    m: *m,
                },
                ExtremalCase::Thm3 => TheoremCase::Thm3 {
                    t: *t,
                    n: *n,
                    s: *s,
                    m: *m,
                },
            };
            let report = match graph6 {
                Some(text) => {
                    let g = Graph::from_graph6(text).map_err(usage)?;
                    verify_extremal_graph(case, &g, *budget)
                }
                None => verify_extremal(case, *budget),
            };
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Human => {
                    let mut out = format!("{:?}: {}\n", report.case, verdict(report.holds));
                    for c in &report.checks {
                        out.push_str(&format!(
                            "  [{}] {}: {}\n",
                            verdict(c.passed),
                            c.name,
                            c.detail
                        ));
                    }
                    out
                }
                _ => json_line(&report),
            };
            Ok(Outcome {
                text,
                code: if report.holds { 0 } else { EXIT_FAILURE },
            })
        }
        Command::Ramsey { g, h, cap } => {
            let g: PatternSpec = g.parse().map_err(usage)?;
            let h: PatternSpec = h.parse().map_err(usage)?;
            let cert = oracle::ramsey(&g, &h, *cap).map_err(oracle_error)?;
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Human => match cert.value {
                    Some(v) => format!("R({}, {}) = {v}\n", cert.g, cert.h),
                    None => format!("R({}, {}) >= {}\n", cert.g, cert.h, cert.at_least),
                },
                _ => format!("{}\n", cert.to_json()),
            };
            Ok(Outcome {
                text,
                code: if cert.is_exact() { 0 } else { EXIT_CAP },
            })
        }
        Command::Enumerate { order, max_order } => {
            let graphs =
                oracle::enumerate_graphs_with_cap(*order, *max_order).map_err(oracle_error)?;
            let text = match cli.format.unwrap_or(Format::Graph6) {
                Format::Human => format!("{} classes of order {order}\n", graphs.len()),
                Format::Json => json_line(&graphs.iter().map(Graph::to_graph6).collect::<Vec<_>>()),
                Format::Graph6 => graphs
                    .iter()
                    .map(|g| format!("{}\n", g.to_graph6()))
                    .collect(),
            };
            Ok(Outcome::ok(text))
        }
        Command::Suite {
            name,
            seed,
            count,
            budget,
            traces,
        } => {
            let spec = suite::suite(name).ok_or_else(|| {
                let known: Vec<&str> = suite::SUITES.iter().map(|s| s.name).collect();
                usage(format!(
                    "unknown suite `{name}` (known: {})",
                    known.join(", ")
                ))
            })?;
            let report = suite::run_suite(&spec, *seed, *count, *budget);
            if let Some(path) = traces {
                fs::write(path, report.traces()).map_err(|e| (EXIT_FAILURE, e.to_string()))?;
            }
            let code = if report.maximality_violations > 0 {
                EXIT_MAXIMALITY
            } else if !report.passed() {
                EXIT_FAILURE
            } else {
                0
            };
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Human => {
                    let mut out = format!(
                        "{} seed {}: {}/{} verified, {} maximality violations\n",
                        report.suite,
                        report.seed,
                        report.verified,
                        report.count,
                        report.maximality_violations
                    );
                    for c in report.cases.iter().filter(|c| !c.verified) {
                        out.push_str(&format!(
                            "  case {} {}: {}\n",
                            c.index,
                            c.graph6,
                            c.error.as_deref().unwrap_or("unverified")
                        ));
                    }
                    out
                }
                _ => json_line(&report),
            };
            Ok(Outcome { text, code })
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    format!("{}\n", serde_json::to_string(value).expect("serializable"))
}

fn oracle_error(e: OracleError) -> (u8, String) {
    let code = match e {
        OracleError::CapExceeded { .. } | OracleError::Pattern(_) => EXIT_USAGE,
        OracleError::Budget { .. } => EXIT_BUDGET,
        OracleError::Certificate(_) => EXIT_FAILURE,
    };
    (code, e.to_string())
}

fn build(spec: &str, format: Format) -> CliResult {
    let spec: PatternSpec = spec.parse().map_err(usage)?;
    let g = spec.build().map_err(usage)?;
    let text = match format {
        Format::Graph6 => format!("{}\n", g.to_graph6()),
        Format::Json => json_line(&serde_json::json!({
            "pattern": spec,
            "order": g.order(),
            "edges": g.edges().collect::<Vec<_>>(),
            "graph6": g.to_graph6(),
        })),
        Format::Human => format!("{spec}: {} vertices, {} edges\n", g.order(), g.edge_count()),
    };
    Ok(Outcome::ok(text))
}

fn read_graphs(input: Option<&PathBuf>, inline: Option<&str>) -> Result<Vec<Graph>, (u8, String)> {
    let text = match (input, inline) {
        (_, Some(g6)) => g6.to_string(),
        (Some(path), None) if path.as_os_str() == "-" => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
            buf
        }
        (Some(path), None) => fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(usage("no input graph (give a file, `-`, or --graph6)")),
    };
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, line)| {
            Graph::from_graph6(line).map_err(|e| usage(format!("line {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(usage("input contains no graphs"));
    }
    Ok(graphs)
}

fn witness_exit_code(e: &WitnessError) -> u8 {
    match e {
        WitnessError::Precondition(_)
        | WitnessError::ResidualExhausted { .. }
        | WitnessError::WheelShape { .. } => EXIT_USAGE,
        WitnessError::MaximalityViolation { .. } | WitnessError::WheelNotFound { .. } => {
            EXIT_MAXIMALITY
        }
        WitnessError::Budget(_) => EXIT_BUDGET,
    }
}

fn witness(
    graphs: &[Graph],
    theorem: Theorem,
    (n, s, m, t): (usize, usize, usize, usize),
    opts: ExtractOptions,
    format: Format,
) -> CliResult {
    let mut text = String::new();
    let mut code = 0;
    for f in graphs {
        let result = match theorem {
            Theorem::One => extract_theorem1(f, n, s, m, opts),
            Theorem::Two => extract_theorem2(f, n, s, m, opts),
            Theorem::Three => extract_t_paths(f, t, n, s, m, opts),
        };
        match result {
            Ok(w) => {
                let verified = w.verify(f);
                if verified.is_err() && code == 0 {
                    code = EXIT_MAXIMALITY;
                }
                match format {
                    Format::Human => {
                        let what = match &w.outcome {
                            Dichotomy::PathsInF(p) => {
                                let shown: Vec<_> =
                                    p.iter().map(|p| p.vertices().to_vec()).collect();
                                format!("paths in F: {shown:?}")
                            }
                            Dichotomy::JahangirInComplement(e) => {
                                format!("{} in complement: {:?}", e.pattern, e.map)
                            }
                        };
                        text.push_str(&format!(
                            "{}: {what} [{}]\n",
                            w.trace.case,
                            if verified.is_ok() {
                                "verified"
                            } else {
                                "UNVERIFIED"
                            }
                        ));
                    }
                    _ => {
                        text.push_str(&w.to_json(f));
                        text.push('\n');
                    }
                }
            }
            Err(e) => {
                if code == 0 {
                    code = witness_exit_code(&e);
                }
                if graphs.len() == 1 && matches!(e, WitnessError::Precondition(_)) {
                    return Err((code, e.to_string()));
                }
                eprintln!("error: {e}");
                match format {
                    Format::Human => text.push_str(&format!("error: {e}\n")),
                    _ => {
                        text.push_str(&error_json(&e));
                        text.push('\n');
                    }
                }
            }
        }
    }
    Ok(Outcome { text, code })
}
