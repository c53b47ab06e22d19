use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use posetdim::text::{
    parse_linear_order, parse_poset, parse_profile, parse_relation, parse_sequence, write_poset,
    write_profile, write_relation, write_sequence,
};
use posetdim::{
    decompose_realizer, dimension, export_dot, find_conjugate, fold_number, min_profile,
    pareto_relation, realize_sequence, run_corpus_checks, verify_sequence, CorpusOptions,
    LinearOrder, Realizer,
};

/// Exact order dimension, conjugates and fold sequences for small posets.
///
/// Every FILE argument may be `-` for standard input.
#[derive(Parser)]
#[command(name = "posetdim", version)]
struct Cli {
    /// Take the reflexive-transitive closure of the listed pairs before
    /// validating an input poset or sequence.
    #[arg(long, global = true)]
    close: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report which order axioms a relation satisfies.
    Check { file: PathBuf },
    /// Print the transitive closure of a relation.
    Closure { file: PathBuf },
    /// Print the dimension and a minimum realizer, one order per line.
    Dim { file: PathBuf },
    /// Print a conjugate in poset format, or `none` if the dimension exceeds two.
    Dim2 { file: PathBuf },
    /// Print the fold number and a shortest partial-conjugate sequence.
    Fold { file: PathBuf },
    /// Turn a realizer into a partial-conjugate sequence.
    Decompose {
        poset: PathBuf,
        /// One linear order per file; a single chain line `x > y > z` suffices.
        #[arg(required = true)]
        orders: Vec<PathBuf>,
    },
    /// Turn a partial-conjugate sequence into a realizer.
    Realize { file: PathBuf },
    /// Print the Pareto dominance relation of a preference profile.
    Pareto { file: PathBuf },
    /// Print a smallest preference profile generating a poset.
    MinProfile { file: PathBuf },
    /// Run the consistency checks over every labelled poset on N elements.
    Verify {
        n: usize,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        /// Skip the fold search and the checks that depend on it.
        #[arg(long)]
        no_fold: bool,
    },
    /// Print the Hasse diagram in Graphviz DOT format.
    Dot { file: PathBuf },
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    CheckFailed,
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn with_path<T>(path: &Path, r: posetdim::Result<T>) -> Result<T> {
    r.with_context(|| path.display().to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_orders(orders: &[LinearOrder]) {
    for l in orders {
        println!("{l}");
    }
}

fn run(cli: Cli) -> Result<Status> {
    let close = cli.close;
    let poset =
        |path: &Path| -> Result<_> { with_path(path, parse_poset(&read_input(path)?, close)) };

    match cli.command {
        Command::Check { file } => {
            let rel = with_path(&file, parse_relation(&read_input(&file)?))?;
            let rel = if close { rel.transitive_closure() } else { rel };
            let c = rel.classify();
            println!("elements: {}", rel.len());
            println!("reflexive: {}", yes_no(c.reflexive));
            println!("complete: {}", yes_no(c.complete));
            println!("antisymmetric: {}", yes_no(c.antisymmetric));
            println!("transitive: {}", yes_no(c.transitive));
            println!("quasi-order: {}", yes_no(c.quasi_order));
            println!("partial order: {}", yes_no(c.partial_order));
            println!("weak order: {}", yes_no(c.weak_order));
            println!("linear order: {}", yes_no(c.linear_order));
        }
        Command::Closure { file } => {
            let rel = with_path(&file, parse_relation(&read_input(&file)?))?;
            print!("{}", write_relation(&rel.transitive_closure()));
        }
        Command::Dim { file } => {
            let p = poset(&file)?;
            let (n, realizer) = dimension(&p)?;
            println!("dimension: {n}");
            print_orders(realizer.extensions());
        }
        Command::Dim2 { file } => match find_conjugate(&poset(&file)?) {
            Some(q) => print!("{}", write_poset(&q)),
            None => println!("none"),
        },
        Command::Fold { file } => {
            let (n, seq) = fold_number(&poset(&file)?)?;
            println!("# fold number: {n}");
            print!("{}", write_sequence(&seq));
        }
        Command::Decompose {
            poset: target,
            orders,
        } => {
            let p = poset(&target)?;
            let mut extensions = Vec::with_capacity(orders.len());
            for path in &orders {
                extensions.push(with_path(
                    path,
                    parse_linear_order(&read_input(path)?, true),
                )?);
            }
            let realizer = Realizer::new(p, extensions)?;
            print!("{}", write_sequence(&decompose_realizer(&realizer)?));
        }
        Command::Realize { file } => {
            let seq = with_path(&file, parse_sequence(&read_input(&file)?, close))?;
            let check = verify_sequence(&seq);
            if let Some(failure) = check.failure {
                eprintln!("not a recursive partial-conjugate sequence: {failure}");
                return Ok(Status::CheckFailed);
            }
            print_orders(realize_sequence(&seq)?.extensions());
        }
        Command::Pareto { file } => {
            let profile = with_path(&file, parse_profile(&read_input(&file)?))?;
            print!("{}", write_poset(&pareto_relation(&profile)));
        }
        Command::MinProfile { file } => {
            let (_, profile) = min_profile(&poset(&file)?)?;
            print!("{}", write_profile(&profile));
        }
        Command::Verify {
            n,
            workers,
            no_fold,
        } => {
            let mut opts = CorpusOptions::for_size(n);
            opts.workers = workers
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |w| w.get()));
            if no_fold {
                opts.fold = false;
            }
            let report = run_corpus_checks(n, &opts)?;
            print!("{report}");
            if !report.passed() {
                return Ok(Status::CheckFailed);
            }
        }
        Command::Dot { file } => print!("{}", export_dot(&poset(&file)?)),
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
