use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bipolar_hypergraph::format::{parse, Document, Structure};
use bipolar_hypergraph::partition::{classify, PartitionKind};
use bipolar_hypergraph::report::{
    cluster_report, crisp_info_report, fseq_report, info_report, partition_report, strength_report, tempered_report,
};
use bipolar_hypergraph::{
    gen_elementary_simple_full, gen_unbounded_simple, temper, BFHypergraph, BipolarValue, TemperingWitness,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Analyse bipolar fuzzy hypergraphs stored as plain-text incidence tables.
#[derive(Parser, Debug)]
#[command(name = "bfh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Input document; standard input when absent or `-`.
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Threshold {
    /// Positive threshold in [0, 1].
    #[arg(long)]
    alpha: f64,
    /// Negative threshold in [-1, 0].
    #[arg(long, allow_negative_numbers = true)]
    beta: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, size, rank statistics, height and structural predicates.
    Info(Input),
    /// Level hypergraph at (alpha, beta).
    Cut {
        #[command(flatten)]
        threshold: Threshold,
        /// `or` keeps vertices meeting either threshold, `and` requires both and adds a
        /// remainder edge. Defaults to `and` for partitions and `or` otherwise.
        #[arg(long, value_enum)]
        semantics: Option<Semantics>,
        #[command(flatten)]
        input: Input,
    },
    /// Fundamental sequence levels and their core hypergraphs.
    Fseq(Input),
    /// Dual hypergraph: vertices and edges swap roles.
    Dual(Input),
    /// Strength of every edge.
    Strength(Input),
    /// Tempered hypergraph from a vertex weighting and a crisp base.
    Temper {
        /// Bipolar document with a single column of vertex weights.
        #[arg(long)]
        weights: PathBuf,
        /// Crisp document over the same vertices.
        #[arg(long)]
        base: PathBuf,
    },
    /// Decide temperedness and print a witness when one exists.
    IsTempered(Input),
    /// Generate a hypergraph from a built-in family.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Classify a matrix as a partition, a covering or neither.
    Partition {
        /// Exit with status 1 unless the matrix is a partition.
        #[arg(long)]
        check: bool,
        /// Tolerance on the row sums; defaults to the document's `tolerance` entry.
        #[arg(long)]
        tolerance: Option<f64>,
        #[command(flatten)]
        input: Input,
    },
    /// Strength-ranked classes at (alpha, beta) and their successive removal.
    Cluster {
        #[command(flatten)]
        threshold: Threshold,
        /// Maximum number of removal rounds; unlimited when absent.
        #[arg(long)]
        rounds: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Semantics {
    Or,
    And,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    /// Pairwise incomparable edges on two vertices.
    Prop314,
    /// One edge per nonempty vertex subset.
    Full,
}

/// Why a command stopped: bad arguments (status 2) or bad input (status 1).
enum Failure {
    Usage(String),
    Input(Vec<String>),
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure::Input(vec![message.to_string()])
    }
}

type Outcome = Result<Output, Failure>;

struct Output {
    text: String,
    status: u8,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, status: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(output) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(output.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(output.status)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Input(messages)) => {
            for message in messages {
                eprintln!("{message}");
            }
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Info(input) => {
            let (_, structure) = load(&input)?;
            let report = match &structure {
                Structure::Crisp(h) => crisp_info_report(h),
                other => info_report(&hypergraph(other)?),
            };
            Ok(report.map_err(Failure::input)?.to_string().into())
        }
        Command::Cut { threshold, semantics, input } => {
            let t = threshold.value()?;
            let (doc, structure) = load(&input)?;
            let default = match structure {
                Structure::Partition(_) => Semantics::And,
                _ => Semantics::Or,
            };
            let cut = match (semantics.unwrap_or(default), &structure) {
                (Semantics::And, Structure::Partition(p)) => p.cut(t),
                (Semantics::And, other) => hypergraph(other)?.partition_cut(t),
                (Semantics::Or, other) => hypergraph(other)?.level_hypergraph(t),
            };
            Ok(doc.derive(Structure::Crisp(cut)).emit().into())
        }
        Command::Fseq(input) => {
            let (_, structure) = load(&input)?;
            Ok(fseq_report(&hypergraph(&structure)?).map_err(Failure::input)?.to_string().into())
        }
        Command::Dual(input) => {
            let (doc, structure) = load(&input)?;
            let dual = match &structure {
                Structure::Crisp(h) => Structure::Crisp(h.dual().map_err(Failure::input)?),
                other => Structure::Bipolar(hypergraph(other)?.dual().map_err(Failure::input)?),
            };
            Ok(doc.derive(dual).emit().into())
        }
        Command::Strength(input) => {
            let (_, structure) = load(&input)?;
            Ok(strength_report(&hypergraph(&structure)?).map_err(Failure::input)?.to_string().into())
        }
        Command::Temper { weights, base } => {
            let (_, weights) = load_path(Some(&weights))?;
            let weights = hypergraph(&weights)?;
            if weights.size() != 1 {
                return Err(Failure::input(format!(
                    "weights must have exactly one column, found {}",
                    weights.size()
                )));
            }
            let (base_doc, base) = load_path(Some(&base))?;
            let Structure::Crisp(base) = base else {
                return Err(Failure::input("base must be a crisp document"));
            };
            let witness = TemperingWitness::new(base, weights.edges()[0].clone()).map_err(Failure::input)?;
            let h = temper(&witness).map_err(Failure::input)?;
            Ok(base_doc.derive(Structure::Bipolar(h)).emit().into())
        }
        Command::IsTempered(input) => {
            let (_, structure) = load(&input)?;
            Ok(tempered_report(&hypergraph(&structure)?).map_err(Failure::input)?.to_string().into())
        }
        Command::Gen { family, n } => {
            let h = match family {
                Family::Prop314 => gen_unbounded_simple(n),
                Family::Full => gen_elementary_simple_full(n),
            }
            .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(Document::new(Structure::Bipolar(h)).emit().into())
        }
        Command::Partition { check, tolerance, input } => {
            if let Some(t) = tolerance {
                if !(t >= 0.0 && t.is_finite()) {
                    return Err(Failure::Usage(format!("--tolerance must be a finite number >= 0, got {t}")));
                }
            }
            let (_, structure) = load(&input)?;
            let partition = partition(&structure, tolerance)?;
            let status = u8::from(check && partition.kind() != PartitionKind::Partition);
            Ok(Output { text: partition_report(&partition).to_string(), status })
        }
        Command::Cluster { threshold, rounds, input } => {
            let t = threshold.value()?;
            if rounds == Some(0) {
                return Err(Failure::Usage("--rounds must be at least 1".into()));
            }
            let (_, structure) = load(&input)?;
            let partition = partition(&structure, None)?;
            let rounds = rounds.unwrap_or(partition.matrix().width());
            Ok(cluster_report(&partition, t, rounds).map_err(Failure::input)?.to_string().into())
        }
    }
}

impl Threshold {
    fn value(&self) -> Result<BipolarValue, Failure> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Failure::Usage(format!("--alpha must lie in [0, 1], got {}", self.alpha)));
        }
        if !(-1.0..=0.0).contains(&self.beta) {
            return Err(Failure::Usage(format!("--beta must lie in [-1, 0], got {}", self.beta)));
        }
        BipolarValue::new(self.alpha, self.beta).map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn load(input: &Input) -> Result<(Document, Structure), Failure> {
    load_path(input.file.as_deref())
}

fn load_path(path: Option<&Path>) -> Result<(Document, Structure), Failure> {
    let (name, text) = match path {
        Some(path) if path != Path::new("-") => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            (path.display().to_string(), text)
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::input(format!("<stdin>: {e}")))?;
            ("<stdin>".to_owned(), text)
        }
    };
    let doc = parse(&text)
        .map_err(|e| Failure::Input(e.diagnostics.iter().map(|d| format!("{name}:{d}")).collect()))?;
    let structure = doc.structure().clone();
    Ok((doc, structure))
}

/// The bipolar hypergraph behind a bipolar or partition document.
fn hypergraph(structure: &Structure) -> Result<BFHypergraph, Failure> {
    match structure {
        Structure::Bipolar(h) => Ok(h.clone()),
        Structure::Partition(p) => BFHypergraph::from_matrix(p.matrix().clone()).map_err(Failure::input),
        Structure::Crisp(_) => Err(Failure::input("this command needs a bipolar or partition document")),
    }
}

fn partition(
    structure: &Structure,
    tolerance: Option<f64>,
) -> Result<bipolar_hypergraph::BipolarPartition, Failure> {
    let (matrix, stored) = match structure {
        Structure::Partition(p) => (p.matrix(), p.tolerance()),
        Structure::Bipolar(h) => (h.matrix(), bipolar_hypergraph::partition::DEFAULT_TOLERANCE),
        Structure::Crisp(_) => return Err(Failure::input("this command needs a bipolar or partition document")),
    };
    classify(matrix, tolerance.unwrap_or(stored)).map_err(Failure::input)
}
