//! The `nearbip` command line.
//!
//! Exit codes: 0 success, 1 a negative answer (not near-bipartite, invalid
//! set, failed certificate), 2 a precondition failure (diameter not 2,
//! unsatisfied clause, instance too large), 64 usage errors, 66 unreadable
//! or malformed input files.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::decomposition::{validate_decomposition, Verdict};
use crate::diam2::{
    solve_min_ifvs_diam2, yang_yuan_characterize, Characterization, Method, SolveError,
};
use crate::generate::random_diameter_two;
use crate::graph::Graph;
use crate::io;
use crate::oracle::Oracle;
use crate::reduction::{
    assignment_to_decomposition, build_hphi, certify_hphi, parse_dimacs_cnf, CnfFormula, EmbedError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INPUT: i32 = 66;

#[derive(Debug, Parser)]
#[command(
    name = "nearbip",
    version,
    about = "Independent feedback vertex sets and near-bipartite decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum independent feedback vertex set of a diameter-2 graph.
    Solve { graph: PathBuf },
    /// Check whether a vertex set gives a near-bipartite decomposition.
    Check { graph: PathBuf, set: PathBuf },
    /// Exhaustive minimum for small graphs of any diameter.
    Oracle {
        graph: PathBuf,
        /// Largest vertex count the search accepts.
        #[arg(long, default_value_t = crate::oracle::DEFAULT_MIN_IFVS_LIMIT)]
        limit: usize,
    },
    /// Report which near-bipartiteness condition a diameter-2 graph meets.
    Characterize { graph: PathBuf },
    /// Build the diameter-3 graph of a 3-CNF formula.
    Reduce {
        cnf: PathBuf,
        /// Verify the construction and print the report as comments.
        #[arg(long)]
        certify: bool,
        /// Write the vertex coordinate map here.
        #[arg(long, value_name = "PATH")]
        coords: Option<PathBuf>,
    },
    /// Decomposition of the reduced graph from a satisfying assignment.
    Embed { cnf: PathBuf, assignment: PathBuf },
    /// Random diameter-2 graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "nearbip: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl ToString) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    io::parse_edge_list(&read(path)?)
        .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn read_cnf(path: &Path) -> Result<CnfFormula, Failure> {
    parse_dimacs_cnf(&read(path)?).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| fail(EXIT_INPUT, format!("writing output: {e}")))
}

fn solve_error(e: SolveError) -> Failure {
    match e {
        SolveError::DiameterNotTwo(_) => fail(EXIT_PRECONDITION, e),
        _ => fail(EXIT_NO, e),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Solve { graph } => {
            let g = read_graph(&graph)?;
            match solve_min_ifvs_diam2(&g).map_err(solve_error)? {
                Some(solution) => {
                    let method = match &solution.method {
                        Method::DeletionBipartite { u } => format!("# deletion-bipartite u {u}\n"),
                        Method::TwoNeighbourSet { x } => format!("# two-neighbour X {x}\n"),
                    };
                    emit(out, &method)?;
                    emit(out, &io::serialize_vertex_set(solution.decomposition.a()))?;
                    Ok(EXIT_OK)
                }
                None => {
                    emit(out, "NOT NEAR-BIPARTITE\n")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Check { graph, set } => {
            let g = read_graph(&graph)?;
            let a = io::parse_vertex_set(&read(&set)?, g.n())
                .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", set.display())))?;
            match validate_decomposition(&g, &a) {
                Verdict::Valid => {
                    emit(out, "VALID\n")?;
                    Ok(EXIT_OK)
                }
                Verdict::IndependenceViolation(u, v) => {
                    emit(out, &format!("INVALID edge {u} {v} inside A\n"))?;
                    Ok(EXIT_NO)
                }
                Verdict::CycleInB(cycle) => {
                    let ids: Vec<String> = cycle.iter().map(ToString::to_string).collect();
                    emit(out, &format!("INVALID cycle in B {}\n", ids.join(" ")))?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Oracle { graph, limit } => {
            let g = read_graph(&graph)?;
            let result = Oracle::new()
                .with_limit(limit)
                .min_ifvs(&g, None)
                .map_err(|e| fail(EXIT_PRECONDITION, e))?;
            match result.witness {
                Some(a) => {
                    emit(out, &io::serialize_vertex_set(&a))?;
                    Ok(EXIT_OK)
                }
                None => {
                    emit(out, "NOT NEAR-BIPARTITE\n")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Characterize { graph } => {
            let g = read_graph(&graph)?;
            match yang_yuan_characterize(&g).map_err(solve_error)? {
                Characterization::DeletionBipartite { u } => {
                    emit(out, &format!("NEAR-BIPARTITE deletion-bipartite u {u}\n"))?;
                    Ok(EXIT_OK)
                }
                Characterization::TwoNeighbourSet { x, a } => {
                    emit(out, &format!("NEAR-BIPARTITE two-neighbour X {x}\n"))?;
                    emit(out, &io::serialize_vertex_set(&a))?;
                    Ok(EXIT_OK)
                }
                Characterization::NotNearBipartite => {
                    emit(out, "NOT NEAR-BIPARTITE\n")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Reduce {
            cnf,
            certify,
            coords,
        } => {
            let formula = read_cnf(&cnf)?;
            let h = build_hphi(&formula);
            let mut code = EXIT_OK;
            if certify {
                let report = certify_hphi(&h);
                for line in report.to_string().lines() {
                    emit(out, &format!("# {line}\n"))?;
                }
                if !report.all_passed() {
                    code = EXIT_NO;
                }
            }
            emit(out, &io::serialize_edge_list(&h.graph))?;
            if let Some(path) = coords {
                fs::write(&path, io::serialize_coordinates(&h))
                    .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            }
            Ok(code)
        }
        Command::Embed { cnf, assignment } => {
            let formula = read_cnf(&cnf)?;
            let values = io::parse_assignment(&read(&assignment)?, formula.num_vars())
                .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", assignment.display())))?;
            let h = build_hphi(&formula);
            match assignment_to_decomposition(&h, &values) {
                Ok(d) => {
                    emit(out, &io::serialize_vertex_set(d.a()))?;
                    Ok(EXIT_OK)
                }
                Err(e @ EmbedError::InvalidEmbedding(_)) => Err(fail(EXIT_NO, e)),
                Err(e) => Err(fail(EXIT_PRECONDITION, e)),
            }
        }
        Command::Gen { n, seed } => {
            let g = random_diameter_two(n, seed).map_err(|e| fail(EXIT_USAGE, e))?;
            emit(out, &io::serialize_edge_list(&g))?;
            Ok(EXIT_OK)
        }
    }
}
