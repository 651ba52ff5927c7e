//! Command-line interface for the balanced word calculus.
//!
//! One binary with subcommands; machine output goes to standard out,
//! diagnostics to standard error. Exit codes: 0 success, 2 usage error,
//! 3 size limit exceeded, 4 domain error (unbalanced input, graph not
//! distance-regular, failed verification, ...).

mod output;

use balanced_core::gens::{
    enumerate_primes, minimal_generating_pairs, prime_classes, verify_generation, verify_minimality,
};
use balanced_core::graph::{
    check_thin_commutation, hypercube, intersection_numbers, load_graph, projections,
    raising_lowering, GraphModel,
};
use balanced_core::matrix::Matrix;
use balanced_core::prime::PrimeKind;
use balanced_core::reduce::{reduce, reduce_trace};
use balanced_core::swap::{
    are_equivalent, equivalence_class, swap_graph_dot, LimitExceeded, DEFAULT_CLASS_LIMIT,
};
use balanced_core::word::Word;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "balanced",
    version,
    about = "Word calculus of the balanced algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Upper,
    Lower,
}

impl From<KindArg> for PrimeKind {
    fn from(k: KindArg) -> PrimeKind {
        match k {
            KindArg::Upper => PrimeKind::Upper,
            KindArg::Lower => PrimeKind::Lower,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the canonical (reduced) form of a word
    Reduce {
        /// Word over L and R
        word: String,
        /// Print every intermediate word of the reduction, one per line
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether two words are equivalent under swaps
    Equiv {
        /// First word
        x: String,
        /// Second word
        y: String,
        /// Class-size bound for the search fallback
        #[arg(long, default_value_t = DEFAULT_CLASS_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// Enumerate the equivalence class of a word and its swap graph
    Class {
        /// Word over L and R
        word: String,
        /// Class-size bound
        #[arg(long, default_value_t = DEFAULT_CLASS_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
        /// Write the swap graph in DOT format to this file
        #[arg(long, value_name = "FILE", conflicts_with = "json")]
        dot: Option<PathBuf>,
        /// Print the class as JSON
        #[arg(long)]
        json: bool,
    },
    /// List the primes of one kind up to a length bound
    Primes {
        /// Prime kind
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Length bound (even, at least 2)
        #[arg(long = "max-len", value_parser = clap::value_parser!(u64).range(2..))]
        max_len: u64,
    },
    /// List the equivalence classes of primes up to a length bound
    Classes {
        /// Prime kind
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Length bound (even, at least 2)
        #[arg(long = "max-len", value_parser = clap::value_parser!(u64).range(2..))]
        max_len: u64,
        /// Print the table as JSON
        #[arg(long)]
        json: bool,
    },
    /// List the minimal generating pairs up to a length bound
    Gens {
        /// Length bound for the prime representatives
        #[arg(long = "max-len", value_parser = clap::value_parser!(u64).range(2..))]
        max_len: u64,
    },
    /// Verify generation (and optionally minimality) of the pair set
    VerifyGens {
        /// Length bound for primes and representatives
        #[arg(long = "max-len", value_parser = clap::value_parser!(u64).range(2..))]
        max_len: u64,
        /// Also check that deleting any single pair breaks generation
        #[arg(long)]
        minimality: bool,
        /// Class-size bound per reachability search
        #[arg(long, default_value_t = DEFAULT_CLASS_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// Check the word-commutation criterion on a graph
    #[command(group(ArgGroup::new("source").required(true).args(["hypercube", "edges"])))]
    GraphVerify {
        /// Use the hypercube of this dimension
        #[arg(long, value_name = "D")]
        hypercube: Option<u64>,
        /// Load an edge list file (one "u v" pair per line)
        #[arg(long, value_name = "FILE", requires = "base")]
        edges: Option<PathBuf>,
        /// Base vertex for the distance partition
        #[arg(long, value_name = "V")]
        base: Option<String>,
        /// Length bound for the commuting words
        #[arg(long = "max-word-len", default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..))]
        max_word_len: u64,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Limit(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Limit(_) => 3,
            Failure::Domain(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Limit(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<LimitExceeded> for Failure {
    fn from(e: LimitExceeded) -> Failure {
        Failure::Limit(e.to_string())
    }
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    Word::parse(text).map_err(|e| Failure::Usage(format!("cannot parse word {text:?}: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Reduce { word, trace } => {
            let w = parse_word(&word)?;
            if trace {
                for step in reduce_trace(&w) {
                    println!("{step}");
                }
            } else {
                println!("{}", reduce(&w));
            }
            Ok(())
        }
        Command::Equiv { x, y, limit } => {
            let x = parse_word(&x)?;
            let y = parse_word(&y)?;
            let equivalent = are_equivalent(&x, &y, limit as usize)?;
            println!(
                "{}",
                if equivalent {
                    "equivalent"
                } else {
                    "not equivalent"
                }
            );
            Ok(())
        }
        Command::Class {
            word,
            limit,
            dot,
            json,
        } => {
            let w = parse_word(&word)?;
            let class = equivalence_class(&w, limit as usize)?;
            if let Some(path) = dot {
                std::fs::write(&path, swap_graph_dot(&class))
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            if json {
                println!("{}", output::class_json(&class));
            } else {
                for member in &class.members {
                    println!("{member}");
                }
            }
            Ok(())
        }
        Command::Primes { kind, max_len } => {
            for p in enumerate_primes(kind.into(), max_len as usize) {
                println!("{p}");
            }
            Ok(())
        }
        Command::Classes {
            kind,
            max_len,
            json,
        } => {
            let table = prime_classes(kind.into(), max_len as usize);
            if json {
                println!("{}", output::classes_json(&table));
            } else {
                for class in &table.classes {
                    let row: Vec<String> = class.members.iter().map(|m| m.to_string()).collect();
                    println!("{}", row.join(", "));
                }
            }
            Ok(())
        }
        Command::Gens { max_len } => {
            for pair in minimal_generating_pairs(max_len as usize) {
                println!("{} {}", pair.upper, pair.lower);
            }
            Ok(())
        }
        Command::VerifyGens {
            max_len,
            minimality,
            limit,
        } => run_verify_gens(max_len as usize, minimality, limit as usize),
        Command::GraphVerify {
            hypercube: dim,
            edges,
            base,
            max_word_len,
            json,
        } => {
            let graph = match (dim, edges) {
                (Some(d), None) => {
                    hypercube(d as usize).map_err(|e| Failure::Domain(e.to_string()))?
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Failure::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let base = base.expect("clap enforces --base with --edges");
                    load_graph(&text, &base).map_err(|e| Failure::Domain(e.to_string()))?
                }
                _ => unreachable!("clap enforces exactly one graph source"),
            };
            run_graph_verify(&graph, max_word_len as usize, json)
        }
    }
}

fn run_verify_gens(max_len: usize, minimality: bool, limit: usize) -> Result<(), Failure> {
    let pairs = minimal_generating_pairs(max_len);
    println!(
        "generating pairs: {} (prime length <= {max_len})",
        pairs.len()
    );
    let uppers = enumerate_primes(PrimeKind::Upper, max_len);
    let lowers = enumerate_primes(PrimeKind::Lower, max_len);
    let mut checked = 0usize;
    let mut failures = 0usize;
    for u in &uppers {
        for d in &lowers {
            checked += 1;
            if !verify_generation(u, d, &pairs, limit)? {
                failures += 1;
                println!("not generated: {u} {d}");
            }
        }
    }
    println!(
        "generation: {}/{checked} prime pairs ok",
        checked - failures
    );
    let mut redundant = 0usize;
    if minimality {
        let results = verify_minimality(&pairs, limit)?;
        for (pair, still_generated) in &results {
            if *still_generated {
                redundant += 1;
                println!("redundant pair: {} {}", pair.upper, pair.lower);
            }
        }
        println!(
            "minimality: {}/{} deletions break generation",
            results.len() - redundant,
            results.len()
        );
    }
    if failures > 0 || redundant > 0 {
        return Err(Failure::Domain(format!(
            "{failures} pairs not generated, {redundant} redundant pairs"
        )));
    }
    Ok(())
}

fn run_graph_verify(graph: &GraphModel, max_word_len: usize, json: bool) -> Result<(), Failure> {
    let numbers = intersection_numbers(graph);
    let rl = raising_lowering(graph);
    let a_eq_r_plus_l = rl.is_bipartite();
    let es = projections(graph);
    let n = graph.vertex_count();
    let sum = es.iter().fold(Matrix::zeros(n), |acc, e| acc.add(e));
    let projections_ok = sum == Matrix::identity(n)
        && es.iter().enumerate().all(|(i, ei)| {
            ei.mul(ei) == *ei
                && es
                    .iter()
                    .enumerate()
                    .all(|(j, ej)| i == j || ei.mul(ej).is_zero())
        });
    let report = check_thin_commutation(graph, max_word_len);

    if json {
        println!(
            "{}",
            output::graph_report_json(&numbers, a_eq_r_plus_l, projections_ok, &report)
        );
    } else {
        println!("vertices: {n}");
        println!("base: {}", graph.label(graph.base()));
        println!("diameter: {}", graph.diameter());
        println!(
            "distance-regular: {}",
            if numbers.is_ok() { "yes" } else { "no" }
        );
        println!("A = R + L: {}", if a_eq_r_plus_l { "yes" } else { "no" });
        println!(
            "projections sum to identity: {}",
            if projections_ok { "yes" } else { "no" }
        );
        if report.violations.is_empty() {
            println!("commutation violations (words up to length {max_word_len}): none");
        } else {
            println!(
                "commutation violations (words up to length {max_word_len}): {}",
                report.violations.len()
            );
            for (f, g) in &report.violations {
                println!("violation: {f} {g}");
            }
        }
    }
    if let Err(witness) = numbers {
        return Err(Failure::Domain(witness.to_string()));
    }
    Ok(())
}
