//! `iasi`: generate graphs, build k-sieves, compute sparing numbers and run
//! formula sweeps. Graph JSON is read from `--input` or stdin and written to
//! `--out` or stdout, so subcommands compose through pipes.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sieve_sparing::formulas::{
    phi_complete, phi_cycle, phi_cycle_sieve_even_k, phi_cycle_sieve_odd_k, phi_path_sieve,
};
use sieve_sparing::iasi::{
    is_iasi, is_weak_iasi, labeled_dot, mono_indexed_edge_count, synthesize_labeling,
};
use sieve_sparing::oracle::{
    sparing_number_bruteforce_labelings, sparing_number_bruteforce_sets, LabelingOracle,
};
use sieve_sparing::sieve::{graph_power, k_sieve, ringlet_census};
use sieve_sparing::sparing::sparing_number;
use sieve_sparing::{
    generate, Error, Graph, Labeling, PathDecomposition, Plan, VertexSet, DEFAULT_BUDGET,
};

mod failure;

use failure::{Failure, Outcome};

#[derive(Parser)]
#[command(
    name = "iasi",
    version = concat!(env!("CARGO_PKG_VERSION"), " (format v1)"),
    about = "k-sieve graphs and sparing numbers of weak IASI graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Io {
    /// Graph JSON input (stdin when omitted).
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Output file (stdout when omitted).
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a standard family.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Add an edge between every pair at distance exactly k.
    Sieve {
        #[arg(long)]
        k: usize,
        /// Also write the ringlet census (u,v,geodesic_count) as CSV.
        #[arg(long)]
        census: Option<PathBuf>,
        #[command(flatten)]
        io: Io,
    },
    /// r-th power of the graph.
    Power {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Exact sparing number with a witness labeling.
    Sparing {
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Cross-check against an exhaustive oracle.
        #[arg(long, value_enum)]
        oracle: Option<OracleKind>,
        /// Label universe for the labeling oracle.
        #[arg(long, default_value_t = 16)]
        universe: u64,
        #[command(flatten)]
        io: Io,
    },
    /// Synthesize or validate a set-labeling.
    Label {
        /// Validate this labeling JSON instead of synthesizing one.
        #[arg(long)]
        validate: Option<PathBuf>,
        /// Vertices to receive 2-element labels (default: an optimal set).
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        io: Io,
    },
    /// Closed-form sparing number for a family.
    Formula {
        #[arg(long, value_enum)]
        family: FormulaFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Path sieves: use the n = r·k + s decomposition.
        #[arg(long)]
        constructive: bool,
    },
    /// Compare formulas with the solver over a grid of instances.
    Sweep {
        /// Plan JSON (the standard grid when omitted).
        #[arg(long)]
        plan: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a graph as DOT or canonical JSON.
    Export {
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        /// Labeling to render; an optimal one is computed when omitted.
        #[arg(long)]
        labeling: Option<PathBuf>,
        /// DOT without labels.
        #[arg(long)]
        plain: bool,
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Path with LENGTH edges.
    Path {
        #[arg(long)]
        length: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    CompleteBipartite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        leaves: usize,
    },
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Bipartite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.4)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Sets,
    Labelings,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaFamily {
    PathSieve,
    CycleSieve,
    Cycle,
    Complete,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Findings(msg)) => {
            eprintln!("iasi: {msg}");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("iasi: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Gen { family, out } => {
            let g = match family {
                Family::Path { length } => generate::path(length),
                Family::Cycle { n } => generate::cycle(n),
                Family::Complete { n } => generate::complete(n),
                Family::CompleteBipartite { m, n } => generate::complete_bipartite(m, n),
                Family::Star { leaves } => generate::star(leaves),
                Family::Tree { n, seed } => generate::random_tree(n, seed),
                Family::Random { n, p, seed } => generate::random_connected(n, p, seed),
                Family::Bipartite { m, n, p, seed } => generate::random_bipartite(m, n, p, seed),
            }?;
            emit(out.as_deref(), &g.to_json())?;
        }
        Command::Sieve { k, census, io } => {
            let g = read_graph(&io)?;
            let s = k_sieve(&g, k)?;
            if let Some(path) = census {
                write_file(&path, &ringlet_census(&g, k)?.to_csv())?;
            }
            emit(io.out.as_deref(), &s.to_json())?;
        }
        Command::Power { r, io } => {
            let g = read_graph(&io)?;
            emit(io.out.as_deref(), &graph_power(&g, r)?.to_json())?;
        }
        Command::Sparing {
            budget,
            oracle,
            universe,
            io,
        } => return sparing(&io, budget, oracle, universe),
        Command::Label {
            validate,
            set,
            budget,
            io,
        } => {
            let g = read_graph(&io)?;
            match validate {
                Some(path) => {
                    let lab = Labeling::from_json(&read_file(&path)?)?;
                    let mono = mono_indexed_edge_count(&g, &lab)?;
                    let report = serde_json::json!({
                        "is_iasi": is_iasi(&g, &lab)?,
                        "is_weak_iasi": is_weak_iasi(&g, &lab)?,
                        "mono_indexed_edges": mono.edges,
                    });
                    emit(io.out.as_deref(), &report.to_string())?;
                }
                None => {
                    let members = match set {
                        Some(vs) => {
                            if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
                                return Err(Error::Domain(format!(
                                    "vertex {v} is not in the graph"
                                ))
                                .into());
                            }
                            VertexSet::from_iter_with_capacity(g.n(), vs)
                        }
                        None => {
                            let solved = sparing_number(&g, budget)?;
                            VertexSet::from_iter_with_capacity(g.n(), solved.optimal_set)
                        }
                    };
                    emit(
                        io.out.as_deref(),
                        &synthesize_labeling(&g, &members)?.to_json(),
                    )?;
                }
            }
        }
        Command::Formula {
            family,
            n,
            k,
            constructive,
        } => {
            let need_k = || k.ok_or_else(|| Failure::usage("--k is required for sieve families"));
            let result = match family {
                FormulaFamily::Cycle => phi_cycle(n)?,
                FormulaFamily::Complete => phi_complete(n)?,
                FormulaFamily::PathSieve => {
                    let mode = if constructive {
                        PathDecomposition::Constructive
                    } else {
                        PathDecomposition::AsStated
                    };
                    phi_path_sieve(n, need_k()?, mode)?
                }
                FormulaFamily::CycleSieve => {
                    let k = need_k()?;
                    if k % 2 == 1 {
                        phi_cycle_sieve_odd_k(n, k)?
                    } else {
                        phi_cycle_sieve_even_k(n, k)?
                    }
                }
            };
            emit(None, &to_json(&result))?;
        }
        Command::Sweep { plan, out } => {
            let plan = match plan {
                Some(path) => Plan::from_json(&read_file(&path)?)?,
                None => Plan::standard(),
            };
            fs::create_dir_all(&out).map_err(|e| Failure::io(&out, e))?;
            let report = sieve_sparing::harness::sweep(&plan)?;
            write_file(&out.join("report.csv"), &report.to_csv())?;
            write_file(&out.join("report.json"), &report.to_json())?;
            let proven = report.proven_mismatches().len();
            eprintln!(
                "{} rows: {} match, {} mismatch, {} not applicable, {} budget exceeded",
                report.rows.len(),
                report.count(sieve_sparing::Verdict::Match),
                report.count(sieve_sparing::Verdict::Mismatch),
                report.count(sieve_sparing::Verdict::NotApplicable),
                report.count(sieve_sparing::Verdict::BudgetExceeded),
            );
            if proven > 0 {
                return Ok(Outcome::Findings(format!(
                    "{proven} mismatches on proven formulas"
                )));
            }
        }
        Command::Export {
            dot,
            json,
            labeling,
            plain,
            io,
        } => {
            let g = read_graph(&io)?;
            let text = if json || !dot {
                g.to_json()
            } else if plain {
                g.to_dot()
            } else {
                let lab = match labeling {
                    Some(path) => Labeling::from_json(&read_file(&path)?)?,
                    None => sparing_number(&g, DEFAULT_BUDGET)?.witness,
                };
                labeled_dot(&g, &lab)?
            };
            emit(io.out.as_deref(), &text)?;
        }
    }
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct SparingOutput<'a> {
    #[serde(flatten)]
    result: &'a sieve_sparing::SparingResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleReport>,
}

#[derive(Serialize)]
struct OracleReport {
    kind: &'static str,
    phi: Option<usize>,
    agrees: bool,
}

fn sparing(
    io: &Io,
    budget: u64,
    oracle: Option<OracleKind>,
    universe: u64,
) -> Result<Outcome, Failure> {
    let g = read_graph(io)?;
    let solved = sparing_number(&g, budget)?;
    let mut disagreement = None;
    let mut report = None;
    if let Some(kind) = oracle {
        let (name, phi) = match kind {
            OracleKind::Sets => ("sets", Some(sparing_number_bruteforce_sets(&g)?.phi)),
            OracleKind::Labelings => (
                "labelings",
                match sparing_number_bruteforce_labelings(&g, universe)? {
                    LabelingOracle::Found { phi, .. } => Some(phi),
                    LabelingOracle::NoValidLabeling => None,
                },
            ),
        };
        let agrees = phi == Some(solved.phi);
        if !agrees {
            disagreement = Some(format!(
                "{name} oracle gives {phi:?}, solver gives {}",
                solved.phi
            ));
        }
        report = Some(OracleReport {
            kind: name,
            phi,
            agrees,
        });
    }
    let output = SparingOutput {
        result: &solved,
        oracle: report,
    };
    emit(io.out.as_deref(), &to_json(&output))?;
    if !solved.is_optimal() {
        return Err(Failure::budget(format!(
            "budget of {budget} nodes exhausted; reported phi is an upper bound"
        )));
    }
    Ok(match disagreement {
        Some(msg) => Outcome::Findings(msg),
        None => Outcome::Success,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("value serializes")
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn read_graph(io: &Io) -> Result<Graph, Failure> {
    let text = match &io.input {
        Some(path) => read_file(path)?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
            buf
        }
    };
    Ok(Graph::from_json(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => write_file(path, &text),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(format!("writing stdout: {e}"))),
    }
}
