// SPDX-License-Identifier: Apache-2.0

//! `popmatch`: generate, solve, verify and inspect matching instances.
//!
//! Every run prints one JSON document on stdout. Exit codes: 0 on success
//! or `FOUND`, 1 on `NO_SOLUTION`, 2 on input or usage errors.

mod commands;
mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{RunReport, Status};

#[derive(Parser, Debug)]
#[command(name = "popmatch", version, about = "Popular and Pareto-optimal matchings with bounded instability")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an instance built from a CNF formula, a colored graph or a seed.
    Generate(GenerateArgs),
    /// Solve an instance.
    Solve(SolveArgs),
    /// Check a matching against an instance.
    Verify(VerifyArgs),
    /// Report structural facts about an instance.
    Inspect(InspectArgs),
    /// Exhaustive search, for small instances.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = false)]
struct Source {
    /// DIMACS CNF file with exactly three literals per clause.
    #[arg(long, value_name = "FILE", group = "source")]
    from_sat: Option<String>,
    /// Colored graph JSON: {"parts": [[..], ..], "edges": [[x, y], ..]}.
    #[arg(long, value_name = "FILE", group = "source", requires = "variant")]
    from_clique: Option<String>,
    /// Seeded random instance.
    #[arg(long, group = "source")]
    random: bool,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum)]
    variant: Option<Variant>,
    /// Write the landmark side-car here.
    #[arg(long, value_name = "FILE")]
    landmarks: Option<String>,
    /// Write the instance here instead of stdout.
    #[arg(long, short, value_name = "FILE")]
    output: Option<String>,
    #[arg(long, default_value_t = 4)]
    na: usize,
    #[arg(long, default_value_t = 4)]
    nb: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    master_list: bool,
    #[arg(long, default_value_t = 1)]
    max_util: i64,
    #[arg(long, default_value_t = 1)]
    max_cost: i64,
    #[arg(long, default_value_t = 0)]
    t: i64,
    #[arg(long, default_value_t = 0)]
    k: i64,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Variant {
    A,
    B,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Problem {
    /// Max-utility popular matching within budget, under master lists.
    PopularMl,
    /// Max-utility Pareto-optimal matching within budget.
    Pareto,
    /// Popular matching whose blocking edges are exactly `--blocking`.
    FixedInstability,
    /// Gale–Shapley.
    Stable,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SideArg {
    A,
    B,
}

#[derive(Args, Debug)]
struct SolveArgs {
    instance: String,
    #[arg(long, value_enum)]
    problem: Problem,
    /// Use exhaustive search instead of the polynomial algorithms.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value = "a")]
    proposing: SideArg,
    /// Blocking edge for `fixed-instability`, as `"<a> <b>"` or a landmark name.
    #[arg(long, value_name = "EDGE")]
    blocking: Vec<String>,
    /// Landmark side-car used to resolve `--blocking` names.
    #[arg(long, value_name = "FILE")]
    landmarks: Option<String>,
    /// Re-check the emitted matching before printing.
    #[arg(long)]
    verify_output: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    instance: String,
    /// Matching JSON: [[a, b], ..] or a report with a "matching" field.
    #[arg(long, value_name = "FILE")]
    matching: String,
    /// Also run the single-blocking-edge conditions for this edge.
    #[arg(long, value_name = "EDGE")]
    edge: Option<String>,
    #[arg(long, value_name = "FILE")]
    landmarks: Option<String>,
}

#[derive(Args, Debug)]
struct InspectArgs {
    instance: String,
    /// Comma-separated `A` ids in axis order.
    #[arg(long, requires = "axis_b")]
    axis_a: Option<String>,
    /// Comma-separated `B` ids in axis order.
    #[arg(long, requires = "axis_a")]
    axis_b: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CriterionArg {
    Popular,
    Pareto,
}

#[derive(Args, Debug)]
struct OracleArgs {
    instance: String,
    #[arg(long, value_enum, default_value = "popular")]
    criterion: CriterionArg,
    /// Check this matching for popularity instead of optimizing.
    #[arg(long, value_name = "FILE")]
    matching: Option<String>,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match commands::run(&cli.command) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err:#}");
            RunReport::error(format!("{err:#}"))
        }
    };
    report.finish(argv, start.elapsed());
    println!("{}", report.render());
    match report.status {
        Status::Found => ExitCode::SUCCESS,
        Status::NoSolution => ExitCode::from(1),
        Status::Error => ExitCode::from(2),
    }
}
