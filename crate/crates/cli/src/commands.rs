// SPDX-License-Identifier: Apache-2.0

use std::ops::ControlFlow;

use anyhow::{ensure, Context, Result};
use popmatch::generators::{
    clique_to_instance, random_instance, sat_to_instance, CliqueVariant, CnfFormula, ColoredGraph, RandomParams,
};
use popmatch::model::{blocking_edges, enumerate::for_each_matching, is_feasible, is_stable};
use popmatch::solvers::{
    brute_force_optimum, gale_shapley, search_fixed_instability, solve_fixed_instability, solve_pareto_budgeted, solve_popular_budgeted_ml,
    Criterion,
};
use popmatch::structure::{find_any_master_list, find_master_list, validate_single_peaked};
use popmatch::verify::{check_single_blocking, find_pareto_improvement, is_popular, BruteForce, PopularityVerdict};
use popmatch::{Edge, Instance, Matching, PreferenceSystem, Side};
use serde_json::{json, Value};

use crate::report::{edges_json, matching_json, RunReport, Status};
use crate::{input, Command, CriterionArg, GenerateArgs, InspectArgs, OracleArgs, Problem, SideArg, SolveArgs, Variant, VerifyArgs};

pub fn run(command: &Command) -> Result<RunReport> {
    match command {
        Command::Generate(args) => generate(args),
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Inspect(args) => inspect(args),
        Command::Oracle(args) => oracle(args),
    }
}

/// Size guard for exhaustive searches, overridable via `POPMATCH_ORACLE_LIMIT`.
fn guard() -> Result<BruteForce> {
    match std::env::var("POPMATCH_ORACLE_LIMIT") {
        Ok(v) => Ok(BruteForce::with_limit(
            v.trim().parse().with_context(|| format!("POPMATCH_ORACLE_LIMIT={v:?} is not a count"))?,
        )),
        Err(_) => Ok(BruteForce::default()),
    }
}

fn generate(args: &GenerateArgs) -> Result<RunReport> {
    let (instance, layout) = if let Some(path) = &args.source.from_sat {
        let phi = CnfFormula::parse_dimacs(&input::read(path)?).with_context(|| format!("parsing {path}"))?;
        let layout = sat_to_instance(&phi)?;
        (layout.instance.clone(), Some(layout))
    } else if let Some(path) = &args.source.from_clique {
        let g = ColoredGraph::from_json_str(&input::read(path)?).with_context(|| format!("parsing {path}"))?;
        let variant = match args.variant.context("--variant is required with --from-clique")? {
            Variant::A => CliqueVariant::A,
            Variant::B => CliqueVariant::B,
        };
        let layout = clique_to_instance(&g, variant)?;
        (layout.instance.clone(), Some(layout))
    } else {
        let params = RandomParams {
            na: args.na,
            nb: args.nb,
            density: args.density,
            seed: args.seed,
            master_list: args.master_list,
            max_util: args.max_util,
            max_cost: args.max_cost,
            objective_t: args.t,
            budget_k: args.k,
        };
        (random_instance(&params)?, None)
    };
    if let Some(path) = &args.landmarks {
        let layout = layout.as_ref().context("--landmarks needs --from-sat or --from-clique")?;
        input::write(path, &(serde_json::to_string_pretty(&layout.landmarks_json())? + "\n"))?;
    }
    let text = instance.to_json_string()?;
    let Some(path) = &args.output else {
        return Ok(RunReport::raw(text));
    };
    input::write(path, &text)?;
    let report = RunReport::new(Status::Found)
        .with("output", json!(path))
        .with("num_a", json!(instance.ps.num_a()))
        .with("num_b", json!(instance.ps.num_b()))
        .with("num_edges", json!(instance.ps.num_edges()));
    Ok(if args.source.random { report.with_seed(args.seed) } else { report })
}

fn solve(args: &SolveArgs) -> Result<RunReport> {
    let inst = input::instance(&args.instance)?;
    let ps = &inst.ps;
    let mut extra = Vec::new();
    let mut blocking = Vec::new();
    let found: Option<Matching> = match args.problem {
        Problem::Stable => {
            ensure!(!args.oracle, "--oracle is not available for the stable problem");
            let side = match args.proposing {
                SideArg::A => Side::A,
                SideArg::B => Side::B,
            };
            Some(gale_shapley(ps, side)?)
        }
        Problem::PopularMl => {
            let sol = if args.oracle {
                brute_force_optimum(&inst, Criterion::Popular, guard()?)?
            } else {
                solve_popular_budgeted_ml(&inst)?
            };
            sol.map(|s| s.matching)
        }
        Problem::Pareto => {
            if args.oracle {
                brute_force_optimum(&inst, Criterion::Pareto, guard()?)?.map(|s| s.matching)
            } else {
                solve_pareto_budgeted(&inst)?.map(|p| {
                    extra.push(("hint", json!({ "s": edges_json(ps, &p.hint.s), "f": edges_json(ps, &p.hint.f) })));
                    p.solution.matching
                })
            }
        }
        Problem::FixedInstability => {
            let marks = input::landmarks(args.landmarks.as_deref())?;
            for text in &args.blocking {
                blocking.push(input::edge(ps, text, &marks)?);
            }
            blocking.sort();
            blocking.dedup();
            if args.oracle {
                fixed_instability_oracle(ps, &blocking, guard()?)?
            } else if ps.is_strict() && find_any_master_list(ps)?.is_some() {
                solve_fixed_instability(ps, &blocking)?
            } else {
                search_fixed_instability(ps, &blocking)?
            }
        }
    };
    let Some(m) = found else {
        return Ok(RunReport::new(Status::NoSolution));
    };
    if args.verify_output {
        verify_output(&inst, args.problem, &blocking, &m)?;
    }
    let mut report = RunReport::new(Status::Found).with_matching(&inst, &m)?;
    for (k, v) in extra {
        report = report.with(k, v);
    }
    Ok(report)
}

/// First popular matching in canonical order whose blocking edges are
/// exactly `s`.
fn fixed_instability_oracle(ps: &PreferenceSystem, s: &[Edge], guard: BruteForce) -> Result<Option<Matching>> {
    guard.check_size(ps)?;
    let mut failure = None;
    let found = for_each_matching(ps, |m| {
        let check = || -> popmatch::Result<bool> {
            Ok(blocking_edges(ps, m)? == s && guard.is_popular(ps, m)?.popular)
        };
        match check() {
            Ok(true) => ControlFlow::Break(m.clone()),
            Ok(false) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(m.clone())
            }
        }
    });
    match failure {
        Some(e) => Err(e.into()),
        None => Ok(found),
    }
}

fn verify_output(inst: &Instance, problem: Problem, s: &[Edge], m: &Matching) -> Result<()> {
    let ps = &inst.ps;
    m.check_in(ps)?;
    let ok = match problem {
        Problem::Stable => is_stable(ps, m)?,
        Problem::PopularMl => is_feasible(inst, m)? && popularity(ps, m)?.popular,
        Problem::Pareto => is_feasible(inst, m)? && find_pareto_improvement(ps, m)?.is_none(),
        Problem::FixedInstability => blocking_edges(ps, m)? == s && popularity(ps, m)?.popular,
    };
    ensure!(ok, "emitted matching failed re-verification");
    Ok(())
}

/// The polynomial test on strict systems, the exhaustive one otherwise.
fn popularity(ps: &PreferenceSystem, m: &Matching) -> Result<PopularityVerdict> {
    Ok(if ps.is_strict() { is_popular(ps, m)? } else { guard()?.is_popular(ps, m)? })
}

fn verify(args: &VerifyArgs) -> Result<RunReport> {
    let inst = input::instance(&args.instance)?;
    let ps = &inst.ps;
    let m = input::matching(ps, &args.matching)?;
    let verdict = popularity(ps, &m)?;
    let mut report = RunReport::new(Status::Found)
        .with_matching(&inst, &m)?
        .with("feasible", json!(is_feasible(&inst, &m)?))
        .with("stable", json!(is_stable(ps, &m)?))
        .with("popular", json!(verdict.popular))
        .with("popularity_witness", verdict.witness.map_or(Value::Null, |w| matching_json(ps, &w)));
    if ps.is_strict() {
        let improvement = find_pareto_improvement(ps, &m)?;
        report = report
            .with("pareto_optimal", json!(improvement.is_none()))
            .with("pareto_improvement", improvement.map_or(Value::Null, |w| matching_json(ps, &w)));
    }
    if let Some(text) = &args.edge {
        let marks = input::landmarks(args.landmarks.as_deref())?;
        let e = input::edge(ps, text, &marks)?;
        let r = check_single_blocking(ps, &m, e)?;
        report = report.with(
            "single_blocking",
            json!({ "edge": ps.edge_key(e), "c1": r.c1, "c2": r.c2, "c3i": r.c3i, "c3ii": r.c3ii, "all": r.all() }),
        );
    }
    Ok(report)
}

fn inspect(args: &InspectArgs) -> Result<RunReport> {
    let inst = input::instance(&args.instance)?;
    let ps = &inst.ps;
    let strict = ps.is_strict();
    let mut report = RunReport::new(Status::Found)
        .with("num_a", json!(ps.num_a()))
        .with("num_b", json!(ps.num_b()))
        .with("num_edges", json!(ps.num_edges()))
        .with("max_degree", json!(ps.max_degree()))
        .with("strict", json!(strict));
    for (key, side) in [("master_list_a", Side::A), ("master_list_b", Side::B)] {
        let cert = if strict { find_master_list(ps, side)? } else { None };
        report = report.with(key, cert.map_or(Value::Null, |c| json!(c.names(ps))));
    }
    if let (Some(axis_a), Some(axis_b)) = (&args.axis_a, &args.axis_b) {
        let parse = |side: Side, text: &str| -> Result<Vec<usize>> {
            text.split(',')
                .filter(|s| !s.is_empty())
                .map(|n| ps.vertex_on(side, n.trim()).with_context(|| format!("{n:?} is not a vertex on side {side}")))
                .collect()
        };
        ensure!(strict, "single-peakedness needs strict preferences");
        let sp = validate_single_peaked(ps, &parse(Side::A, axis_a)?, &parse(Side::B, axis_b)?)?;
        report = report.with("single_peaked", json!(sp));
    }
    Ok(report)
}

fn oracle(args: &OracleArgs) -> Result<RunReport> {
    let inst = input::instance(&args.instance)?;
    let guard = guard()?;
    if let Some(path) = &args.matching {
        let m = input::matching(&inst.ps, path)?;
        let verdict = guard.is_popular(&inst.ps, &m)?;
        return RunReport::new(Status::Found)
            .with_matching(&inst, &m)
            .map(|r| r.with("popular", json!(verdict.popular)))
            .map(|r| r.with("popularity_witness", verdict.witness.map_or(Value::Null, |w| matching_json(&inst.ps, &w))));
    }
    let criterion = match args.criterion {
        CriterionArg::Popular => Criterion::Popular,
        CriterionArg::Pareto => Criterion::Pareto,
    };
    match brute_force_optimum(&inst, criterion, guard)? {
        Some(sol) => RunReport::new(Status::Found).with_matching(&inst, &sol.matching),
        None => Ok(RunReport::new(Status::NoSolution)),
    }
}

