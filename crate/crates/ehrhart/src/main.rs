//! Thin command-line front end. All logic lives in the library; this file
//! parses arguments, moves JSON between files and stdout, and maps outcomes
//! to exit codes: 0 when every applicable theorem holds, 2 when one fails
//! (the record is still printed), 1 on input or processing errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ehrhart::analysis::{self, CensusParams};
use ehrhart::generators;
use ehrhart::{LatticePolytope, Poset, Result};

#[derive(Parser)]
#[command(
    name = "ehrhart",
    about = "Exact Ehrhart data, integral closure, reflexivity and growth-bound checks for lattice polytopes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full pipeline on a polytope file; prints one analysis record as JSON
    Analyze {
        file: PathBuf,
        /// Closure test bound (default max(2, d-1))
        #[arg(long)]
        c_max: Option<u32>,
        /// Number of dilates to enumerate (default d+2)
        #[arg(long)]
        dilates: Option<u32>,
    },
    /// Run a single theorem verifier on a polytope file
    Verify {
        file: PathBuf,
        /// One of: volume_upper, reflexive_upper, partial_sums, lower_bound,
        /// hibi_lbt, unimodality, diff_o, oda
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        c_max: Option<u32>,
        #[arg(long)]
        dilates: Option<u32>,
    },
    /// Generate a polytope and print its JSON
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
    /// Analyze seeded random polytopes, streaming JSONL to a file
    Census {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 3)]
        coord_bound: i64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output path; violating records are copied to <out>.quarantine
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        c_max: Option<u32>,
        #[arg(long)]
        dilates: Option<u32>,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// conv{0, e_1, ..., e_d}
    UnimodularSimplex {
        #[arg(long)]
        dim: usize,
    },
    /// [lo, hi]^d
    Cube {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_negative_numbers = true)]
        lo: i64,
        #[arg(long, allow_negative_numbers = true)]
        hi: i64,
    },
    /// conv{e_1, ..., e_d, -e_1-...-e_d}
    StandardReflexiveSimplex {
        #[arg(long)]
        dim: usize,
    },
    /// conv{0, e_1, e_2, e_1+e_2+k e_3}
    ReeveSimplex {
        #[arg(long)]
        k: i64,
    },
    /// Seeded random polytope in [-coord-bound, coord-bound]^dim
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 3)]
        coord_bound: i64,
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Order polytope of a poset file {"size": n, "covers": [[a,b],...]}
    OrderPolytope { poset: PathBuf },
    /// Dilate a polytope file by an integer factor
    Dilate {
        file: PathBuf,
        #[arg(long)]
        factor: u32,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_polytope(path: &Path) -> Result<LatticePolytope> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Analyze { file, c_max, dilates } => {
            let polytope = read_polytope(&file)?;
            let record = analysis::analyze(&polytope, c_max, dilates)?;
            println!("{}", serde_json::to_string(&record)?);
            Ok(exit_for(record.all_applicable_hold()))
        }
        Cmd::Verify {
            file,
            theorem,
            c_max,
            dilates,
        } => {
            let polytope = read_polytope(&file)?;
            let report = analysis::verify_one(&polytope, &theorem, c_max, dilates)?;
            println!("{}", serde_json::to_string(&report)?);
            Ok(exit_for(!report.is_violation()))
        }
        Cmd::Gen { family } => {
            let polytope = generate(family)?;
            println!("{}", serde_json::to_string(&polytope)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Census {
            dim,
            coord_bound,
            count,
            seed,
            out,
            c_max,
            dilates,
        } => {
            let params = CensusParams {
                dim,
                coord_bound,
                count,
                seed,
                c_max,
                dilates,
            };
            let mut file = fs::File::create(&out)?;
            let (summary, quarantine) = analysis::census(&params, &mut file)?;
            if !quarantine.is_empty() {
                let qpath = quarantine_path(&out);
                fs::write(&qpath, quarantine.join("\n") + "\n")?;
                eprintln!("{} violating record(s) quarantined to {}", quarantine.len(), qpath.display());
            }
            println!("{}", serde_json::to_string(&summary)?);
            Ok(exit_for(summary.violations == 0))
        }
    }
}

fn quarantine_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_os_string();
    name.push(".quarantine");
    PathBuf::from(name)
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn generate(cmd: GenCmd) -> Result<LatticePolytope> {
    match cmd {
        GenCmd::UnimodularSimplex { dim } => generators::unimodular_simplex(dim),
        GenCmd::Cube { dim, lo, hi } => generators::cube(dim, lo, hi),
        GenCmd::StandardReflexiveSimplex { dim } => generators::standard_reflexive_simplex(dim),
        GenCmd::ReeveSimplex { k } => generators::reeve_simplex(k),
        GenCmd::Random {
            dim,
            coord_bound,
            points,
            seed,
        } => generators::random_polytope(dim, coord_bound, points, seed),
        GenCmd::OrderPolytope { poset } => {
            let text = fs::read_to_string(poset)?;
            let poset: Poset = serde_json::from_str(&text)?;
            generators::order_polytope(&poset)
        }
        GenCmd::Dilate { file, factor } => {
            let polytope = read_polytope(&file)?;
            generators::dilate(&polytope, factor)
        }
    }
}
