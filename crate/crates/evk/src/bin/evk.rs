//! Command-line front end: analyze tensor/hypergraph files, generate the
//! named hypergraph families, tabulate structural bounds, and run the
//! built-in regression table.
//!
//! Exit codes: 0 success, 1 parse error, 2 precondition failure,
//! 3 internal invariant violation.

use clap::{Parser, Subcommand};
use evk::eigenvariety::{analyze, coset_representative, cyclic_index, enumerate_ps0, EigenError};
use evk::hypergraph::{bound_report, HypergraphError, UniformHypergraph};
use evk::io::{parse_input, write_hypergraph, AnalysisReport, BoundsJson, FileContent, SweepJson};
use evk::numeric::{eigen_residual, perron_vector, reconstruct_eigenvector};
use evk::verify::run_paper_checks;
use rayon::prelude::*;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_PARSE: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "evk",
    version,
    about = "Eigenvariety structure of nonnegative symmetric tensors and uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a tensor or hypergraph file
    Analyze {
        path: PathBuf,
        /// Compute the Perron eigenpair and certify reconstructed eigenvectors
        #[arg(long)]
        perron: bool,
        /// Enumerate the phase module, optionally capping the count
        #[arg(long, num_args = 0..=1, default_missing_value = "1000000", value_name = "CAP")]
        enumerate: Option<u64>,
        /// Emit JSON
        #[arg(long, conflicts_with = "table")]
        json: bool,
        /// Emit a plain-text table (the default)
        #[arg(long)]
        table: bool,
        /// Power-iteration tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Write a named hypergraph family in the text format
    Generate {
        /// One of: hyperpath, squid, complete, wheel
        family: String,
        /// Family parameters: hyperpath n m | squid m t | complete n m | wheel n
        params: Vec<usize>,
        /// Output file (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate structural bounds for a hypergraph file
    Bounds {
        path: PathBuf,
        /// Emit JSON
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in regression table
    VerifyPaper,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn precondition_code(err: &EigenError) -> u8 {
    match err {
        EigenError::NotWeaklyIrreducible
        | EigenError::CapExceeded { .. }
        | EigenError::NotThreeUniform(_)
        | EigenError::NotSubpattern
        | EigenError::BadCosetParameters { .. }
        | EigenError::ShapeMismatch => EXIT_PRECONDITION,
    }
}

fn read_input(path: &PathBuf) -> Result<FileContent, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn cmd_analyze(
    path: PathBuf,
    perron: bool,
    enumerate: Option<u64>,
    json: bool,
    tol: f64,
) -> Result<(), Failure> {
    let content = read_input(&path)?;
    let kind = match &content {
        FileContent::Tensor(_) => "tensor",
        FileContent::Hypergraph(_) => "hypergraph",
    };
    let support = content.support();
    if !support.is_weakly_irreducible() {
        return Err(Failure::new(
            EXIT_PRECONDITION,
            "input is not weakly irreducible (hypergraph inputs must be connected)",
        ));
    }
    let es = analyze(&support).map_err(|e| Failure::new(precondition_code(&e), e.to_string()))?;
    let ell =
        cyclic_index(&support).map_err(|e| Failure::new(precondition_code(&e), e.to_string()))?;
    let mut report = AnalysisReport::new(path.display().to_string(), kind, &es, ell);

    let points = match enumerate {
        Some(cap) => {
            let points = enumerate_ps0(&es, cap)
                .map_err(|e| Failure::new(precondition_code(&e), e.to_string()))?;
            report.enumerated_phase_vectors =
                Some(points.iter().map(|p| p.phases().to_vec()).collect());
            Some(points)
        }
        None => None,
    };

    if perron {
        let pr = perron_vector(&support, tol, 100_000)
            .map_err(|e| Failure::new(EXIT_PRECONDITION, e.to_string()))?;
        report = report.with_perron(&pr);
        if let Some(points) = &points {
            let mut tasks: Vec<(evk::eigenvariety::PhaseVector, u64)> =
                points.iter().map(|p| (p.clone(), 0)).collect();
            for j in 1..ell {
                if let Some(rep) = coset_representative(&support, ell, j)
                    .map_err(|e| Failure::new(precondition_code(&e), e.to_string()))?
                {
                    tasks.push((rep, j));
                }
            }
            let residuals: Vec<f64> = tasks
                .par_iter()
                .map(|(phi, j)| {
                    let pair = reconstruct_eigenvector(phi, *j, ell, &pr);
                    eigen_residual(&support, &pair.vector, pair.lambda)
                        .expect("dimensions agree by construction")
                })
                .collect();
            let max_residual = residuals.iter().cloned().fold(0.0, f64::max);
            let accepted = tasks
                .iter()
                .zip(&residuals)
                .filter(|((_, j), r)| **r < 1e-8 && *j == 0)
                .count() as u64;
            report.sweep = Some(SweepJson {
                eigenvector_count: accepted,
                max_residual,
            });
        }
    }

    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
    Ok(())
}

fn cmd_generate(family: String, params: Vec<usize>, out: Option<PathBuf>) -> Result<(), Failure> {
    let bad = |msg: String| Failure::new(EXIT_PRECONDITION, msg);
    let arity = |k: usize| -> Result<(), Failure> {
        if params.len() == k {
            Ok(())
        } else {
            Err(bad(format!(
                "family '{family}' takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let g: UniformHypergraph = match family.as_str() {
        "hyperpath" => {
            arity(2)?;
            UniformHypergraph::hyperpath(params[0], params[1])
        }
        "squid" => {
            arity(2)?;
            UniformHypergraph::squid(params[0], params[1])
        }
        "complete" => {
            arity(2)?;
            UniformHypergraph::complete(params[0], params[1])
        }
        "wheel" => {
            arity(1)?;
            UniformHypergraph::wheel(params[0])
        }
        other => {
            return Err(bad(format!(
                "unknown family '{other}' (expected hyperpath, squid, complete, or wheel)"
            )))
        }
    }
    .map_err(|e| bad(e.to_string()))?;

    let text = write_hypergraph(&g);
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| {
            Failure::new(
                EXIT_PRECONDITION,
                format!("cannot write {}: {e}", path.display()),
            )
        })?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_bounds(path: PathBuf, json: bool) -> Result<(), Failure> {
    let content = read_input(&path)?;
    let FileContent::Hypergraph(g) = content else {
        return Err(Failure::new(
            EXIT_PRECONDITION,
            "bounds requires a hypergraph input",
        ));
    };
    let report = bound_report(&g).map_err(|e| match e {
        HypergraphError::BoundViolated(_) => Failure::new(EXIT_INTERNAL, e.to_string()),
        _ => Failure::new(EXIT_PRECONDITION, e.to_string()),
    })?;
    let es = analyze(&g.adjacency_tensor())
        .map_err(|e| Failure::new(precondition_code(&e), e.to_string()))?;
    let ell = cyclic_index(&g.adjacency_tensor())
        .map_err(|e| Failure::new(precondition_code(&e), e.to_string()))?;
    let mut full = AnalysisReport::new(path.display().to_string(), "hypergraph", &es, ell);
    full.bounds = Some(BoundsJson::from(&report));
    if json {
        println!("{}", full.to_json());
    } else {
        print!("{}", full.to_table());
    }
    Ok(())
}

fn cmd_verify_paper() -> Result<(), Failure> {
    let results = run_paper_checks();
    let mut all_pass = true;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status}  {:<32} {}", r.name, r.detail);
        all_pass &= r.passed;
    }
    if all_pass {
        println!("all {} checks passed", results.len());
        Ok(())
    } else {
        Err(Failure::new(EXIT_INTERNAL, "regression table has failures"))
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("EVK_THREADS") {
        if let Ok(k) = threads.trim().parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            path,
            perron,
            enumerate,
            json,
            table: _,
            tol,
        } => cmd_analyze(path, perron, enumerate, json, tol),
        Command::Generate {
            family,
            params,
            out,
        } => cmd_generate(family, params, out),
        Command::Bounds { path, json } => cmd_bounds(path, json),
        Command::VerifyPaper => cmd_verify_paper(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
