use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pressing_lab::explorer::{
    build_pi_graph, find_uniquely_pressable, random_walk, DEFAULT_MAX_EDIT,
};
use pressing_lab::graph::{color_string, parse_bcg, to_bcg, BicoloredGraph};
use pressing_lab::sequences::{
    average_count, count_sequences, unique_coloring, verify, Method, PressingSequence,
    SequenceEnumerator,
};
use pressing_lab::Error;

mod bench;

#[derive(Parser)]
#[command(
    name = "pressing-lab",
    version,
    about = "Pressing sequences of bicolored graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Sim,
    Minors,
    Matchings,
    Cholesky,
    Psi,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Press the vertices of SEQ in order and print the resulting graph.
    Press { file: PathBuf, seq: String },
    /// Test whether SEQ is a successful pressing sequence.
    Verify {
        file: PathBuf,
        seq: String,
        #[arg(long, value_enum, default_value = "sim")]
        method: MethodArg,
    },
    /// Rank of the augmented adjacency matrix.
    Rank { file: PathBuf },
    /// Cholesky factor of the augmented adjacency matrix, reordered so SEQ
    /// comes first.
    Cholesky { file: PathBuf, seq: Option<String> },
    /// Leading principal minors of the augmented adjacency matrix.
    Minors { file: PathBuf },
    /// Every successful pressing sequence, one per line.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// Number of successful pressing sequences.
    Count { file: PathBuf },
    /// The only coloring under which the full-length SEQ succeeds.
    UniqueColoring { file: PathBuf, seq: String },
    /// Average number of full-length successful sequences over all colorings.
    Average { file: PathBuf },
    /// The graph on successful sequences joined by small edits.
    Pi {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_EDIT)]
        max_edit: usize,
        #[arg(long)]
        check_connected: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Endpoint of a lazy random walk on the sequence graph.
    Walk {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Graphs with exactly one successful sequence, up to isomorphism.
    UniquelyPressable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Time the matrix kernels on a seeded random matrix.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure that ends the run with exit code 2.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

struct Outcome {
    stdout: String,
    success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            success: true,
        }
    }
}

fn read_graph(path: &Path) -> Result<BicoloredGraph, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_bcg(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_seq(text: &str, g: &BicoloredGraph) -> Result<PressingSequence, Failure> {
    PressingSequence::parse(text, g.n()).map_err(|e| Failure(format!("sequence {text:?}: {e}")))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("PRESSING_LAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().map_err(|_| {
        Failure(format!(
            "PRESSING_LAB_THREADS: invalid thread count {value:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure(format!("PRESSING_LAB_THREADS: {e}")))
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Press { file, seq } => {
            let mut g = read_graph(&file)?;
            for &v in read_seq(&seq, &g)?.vertices() {
                g = g.press(v)?;
            }
            Ok(Outcome::ok(to_bcg(&g)))
        }
        Command::Verify { file, seq, method } => {
            let g = read_graph(&file)?;
            let seq = read_seq(&seq, &g)?;
            let single = match method {
                MethodArg::Sim => Some(Method::Simulation),
                MethodArg::Minors => Some(Method::Minors),
                MethodArg::Matchings => Some(Method::Matchings),
                MethodArg::Cholesky => Some(Method::Cholesky),
                MethodArg::Psi => Some(Method::Psi),
                MethodArg::All => None,
            };
            match single {
                Some(m) => {
                    let report = verify(&g, &seq, m)?;
                    Ok(Outcome {
                        stdout: format!("{report}\n"),
                        success: report.verdict,
                    })
                }
                None => verify_all(&g, &seq),
            }
        }
        Command::Rank { file } => {
            let g = read_graph(&file)?;
            Ok(Outcome::ok(format!("{}\n", g.matrix().rank())))
        }
        Command::Cholesky { file, seq } => {
            let g = read_graph(&file)?;
            let seq = match seq {
                Some(s) => read_seq(&s, &g)?,
                None => PressingSequence::empty(g.n()),
            };
            let m = g.matrix().conjugate(&seq.extended_ordering())?;
            Ok(match m.cholesky()? {
                Some(l) => Outcome::ok(l.to_text()),
                None => Outcome {
                    stdout: "none\n".to_owned(),
                    success: false,
                },
            })
        }
        Command::Minors { file } => {
            let g = read_graph(&file)?;
            let bits: String = g
                .matrix()
                .leading_principal_minors()?
                .iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect();
            Ok(Outcome::ok(format!("{bits}\n")))
        }
        Command::Enumerate {
            file,
            limit,
            count_only,
        } => {
            let g = read_graph(&file)?;
            let it = SequenceEnumerator::new(&g)?.take(limit.unwrap_or(usize::MAX));
            let mut out = String::new();
            let mut found = 0usize;
            for s in it {
                found += 1;
                if !count_only {
                    writeln!(out, "{s}").expect("write to string");
                }
            }
            if count_only {
                writeln!(out, "{found}").expect("write to string");
            }
            Ok(Outcome {
                stdout: out,
                success: found > 0,
            })
        }
        Command::Count { file } => {
            let g = read_graph(&file)?;
            let c = count_sequences(&g)?;
            Ok(Outcome {
                stdout: format!("{c}\n"),
                success: c > 0,
            })
        }
        Command::UniqueColoring { file, seq } => {
            let g = read_graph(&file)?;
            let seq = read_seq(&seq, &g)?;
            let colors = unique_coloring(&g, &seq)?;
            Ok(Outcome::ok(format!("{}\n", color_string(&colors))))
        }
        Command::Average { file } => {
            let g = read_graph(&file)?;
            Ok(Outcome::ok(format!("{}\n", average_count(&g)?)))
        }
        Command::Pi {
            file,
            max_edit,
            check_connected,
            count_only,
        } => {
            let g = read_graph(&file)?;
            let pi = build_pi_graph(&g, max_edit)?;
            if check_connected {
                let connected = pi.is_connected();
                return Ok(Outcome {
                    stdout: format!("{connected}\n"),
                    success: connected,
                });
            }
            let stdout = if count_only {
                format!("{} {}\n", pi.len(), pi.edges().len())
            } else {
                pi.to_text()
            };
            Ok(Outcome {
                stdout,
                success: !pi.is_empty(),
            })
        }
        Command::Walk { file, steps, seed } => {
            let g = read_graph(&file)?;
            match random_walk(&g, steps, seed) {
                Ok(s) => Ok(Outcome::ok(format!("{s}\n"))),
                Err(Error::NoSuccessfulSequence) => Ok(Outcome {
                    stdout: "none\n".to_owned(),
                    success: false,
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::UniquelyPressable { n, count_only } => {
            let found = find_uniquely_pressable(n)?;
            let stdout = if count_only {
                format!("{}\n", found.len())
            } else {
                found.iter().map(to_bcg).collect::<Vec<_>>().join("\n")
            };
            Ok(Outcome {
                stdout,
                success: !found.is_empty(),
            })
        }
        Command::Bench { n, seed } => Ok(Outcome::ok(bench::run(n, seed)?)),
    }
}

/// One line per method in [`Method::ALL`] order. A method whose
/// preconditions fail prints `n/a` and does not vote.
fn verify_all(g: &BicoloredGraph, seq: &PressingSequence) -> Result<Outcome, Failure> {
    let mut out = String::new();
    let mut verdicts = Vec::new();
    for m in Method::ALL {
        match verify(g, seq, m) {
            Ok(report) => {
                writeln!(out, "{report}").expect("write to string");
                verdicts.push((m, report.verdict));
            }
            Err(
                Error::PsiRequiresFullRank
                | Error::SequenceLength { .. }
                | Error::BaseNotSuccessful
                | Error::BudgetExceeded { .. },
            ) => out.push_str("n/a\n"),
            Err(e) => return Err(e.into()),
        }
    }
    let first = verdicts[0].1;
    if let Some((m, _)) = verdicts.iter().find(|(_, v)| *v != first) {
        print!("{out}");
        return Err(Failure(format!(
            "methods disagree: {} says {first}, {} says {}",
            verdicts[0].0.name(),
            m.name(),
            !first
        )));
    }
    Ok(Outcome {
        stdout: out,
        success: first,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli.command));
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("pressing-lab: {msg}");
            ExitCode::from(2)
        }
    }
}
