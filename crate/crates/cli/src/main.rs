//! `sumplex` command-line tool.
//!
//! Exit codes: 0 on success (or equality for `consum --method both`), 1 when
//! validation or the method comparison fails, 2 for usage and input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sumplex::ordering::violations;
use sumplex::point::parse_rational;
use sumplex::toolkit::{export_dot, gen_random_ordered_flag, parse_document, ComplexDocument, Fixture};
use sumplex::{
    connected_sum_window, ordered_product, realize_triple, Distance, Error, Method,
    OrderedComplex, VertexId, WeightedPoint, Window,
};

#[derive(Parser)]
#[command(name = "sumplex", version, about = "Ordered simplicial complexes and windowed connected sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the order axioms and flagness of a complex.
    Validate {
        /// Document path or fixture (POINT, EDGE, PATH:k).
        input: String,
    },
    /// Ordered product of two complexes.
    Product {
        left: String,
        right: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Window of the connected-sum complex of two ordered flag complexes.
    Consum {
        k1: String,
        k2: String,
        /// Levels as LO:HI.
        #[arg(long, allow_hyphen_values = true)]
        window: Window,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Distance between two vertices in the 1-skeleton.
    Dist { input: String, u: String, v: String },
    /// Realize a point of the connected-sum window from its three coordinates.
    Realize {
        k1: String,
        k2: String,
        /// Point of the first complex, e.g. `a:1/2,b:1/2`.
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
        /// Level coordinate, e.g. `-3/4`.
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Window,
    },
    /// Export the 1-skeleton.
    Export {
        input: String,
        /// Graphviz output (the only format).
        #[arg(long, required = true)]
        dot: bool,
    },
    /// Deterministic random ordered flag complex.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Product,
    Direct,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Product => Method::ProductPipeline,
            MethodArg::Direct => Method::DirectRule,
            MethodArg::Both => Method::Both,
        }
    }
}

enum Failure {
    /// Validation or comparison failure.
    Check(String),
    /// Bad arguments or unreadable input.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ValidationFailed(_) | Error::NotFlag => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_document(input: &str) -> CliResult<ComplexDocument> {
    match input.parse::<Fixture>() {
        Ok(f) => Ok(ComplexDocument::from_ordered(&f.build(), &f.to_string(), "")),
        Err(_) => Ok(parse_document(&read_text(Path::new(input))?)?),
    }
}

fn load(input: &str) -> CliResult<OrderedComplex> {
    Ok(read_document(input)?.to_ordered()?)
}

fn emit(doc: ComplexDocument, output: Option<&Path>) -> CliResult<()> {
    let text = doc.to_text();
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Validate { input } => {
            let (complex, rel) = read_document(&input)?.to_parts()?;
            let report = violations(&complex, &rel)?;
            println!(
                "vertices: {}, edges: {}, order pairs: {}",
                complex.vertex_count(),
                complex.edge_count(),
                rel.len()
            );
            println!("flag: {}", if complex.is_flag() { "yes" } else { "no" });
            if report.is_empty() {
                println!("axioms: ok");
                Ok(())
            } else {
                Err(Failure::Check(format!("axioms violated:\n{report}")))
            }
        }
        Command::Product { left, right, output } => {
            let prod = ordered_product(&load(&left)?, &load(&right)?)?;
            let doc = ComplexDocument::from_ordered(prod.ordered(), "", &format!("{left} x {right}"));
            emit(doc, output.as_deref())
        }
        Command::Consum { k1, k2, window, method, output } => {
            let sum = connected_sum_window(&load(&k1)?, &load(&k2)?, window, method.into())?;
            let desc = format!("{k1} # {k2} on levels {window}");
            emit(
                ComplexDocument::from_ordered(sum.primary().ordered(), "", &desc),
                output.as_deref(),
            )?;
            match sum.report() {
                Some(report) if !report.is_equal() => Err(Failure::Check(report.to_string())),
                Some(report) => {
                    eprintln!("{report}");
                    Ok(())
                }
                None => Ok(()),
            }
        }
        Command::Dist { input, u, v } => {
            let k = load(&input)?;
            let u = VertexId::parse_composite(u)?;
            let v = VertexId::parse_composite(v)?;
            match k.complex().skeleton_distance(&u, &v)? {
                Distance::Steps(d) => println!("{d}"),
                Distance::Unreachable => println!("unreachable"),
            }
            Ok(())
        }
        Command::Realize { k1, k2, p1, p2, r, window } => {
            let point = realize_triple(
                &load(&k1)?,
                &load(&k2)?,
                &WeightedPoint::parse(&p1)?,
                &WeightedPoint::parse(&p2)?,
                &parse_rational(&r)?,
                window,
            )?;
            let triples = point.to_triples()?;
            println!(
                "{}",
                serde_json::to_string(&triples).expect("triples always serialize")
            );
            Ok(())
        }
        Command::Export { input, dot: _ } => {
            print!("{}", export_dot(load(&input)?.complex()));
            Ok(())
        }
        Command::Gen { vertices, seed, output } => {
            if vertices == 0 {
                return Err(Failure::Usage("--vertices must be at least 1".into()));
            }
            let k = gen_random_ordered_flag(vertices, seed);
            let desc = format!("random, {vertices} vertices, seed {seed}");
            emit(ComplexDocument::from_ordered(&k, "", &desc), output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
