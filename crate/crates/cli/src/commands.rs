use std::fs;
use std::path::{Path, PathBuf};

use diminish_core::framework::unary::{
    DoublingKernel, DropOne, Halving, TruncatingKernel, UnaryInstance, UnaryThreshold,
};
use diminish_core::framework::{
    accelerated_solve, checked_apply, diminish_kernelize_loop, strong_loop, verify_diminisher,
    Caps, LoopTrace, Problem,
};
use diminish_core::graph::{parse_graph, width, WidthKind, DEFAULT_WIDTH_CAP};
use diminish_core::Error;

use crate::error::{exit, CliError, CliResult};
use crate::registry::{Inst, Target};
use crate::report::{Emitter, Event, Value};
use crate::Cli;

fn read_input(cli: &Cli) -> CliResult<(PathBuf, String)> {
    let path = cli
        .input
        .clone()
        .ok_or_else(|| CliError::usage("this command needs --input <file>"))?;
    let text = fs::read_to_string(&path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    Ok((path, text))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn refuse(what: &'static str, limit: u64, actual: u64) -> CliError {
    CliError::Core(Error::CapExceeded { what, limit, actual })
}

/// Read and validate the input instance, then apply `--max-n` and
/// `--max-k` as hard refusals.
fn load<T: Target>(t: &T, cli: &Cli) -> CliResult<Inst<T>> {
    let (path, text) = read_input(cli)?;
    let inst = t
        .load(&text)
        .map_err(|source| CliError::InFile { path, source })?;
    let (what, n) = t.dimension(&inst);
    if let Some(max_n) = cli.max_n {
        if n > max_n {
            return Err(refuse(what, max_n as u64, n as u64));
        }
    }
    if let Some(max_k) = cli.max_k {
        let k = t.budget(&inst);
        if k > max_k {
            return Err(refuse("budget k", max_k, k));
        }
    }
    Ok(inst)
}

pub fn diminish<T: Target>(t: &T, cli: &Cli, em: &mut Emitter) -> CliResult<i32> {
    if cli.rounds == 0 {
        return Err(CliError::usage("--rounds must be at least 1"));
    }
    let p = t.problem();
    let dim = t.diminisher()?;
    let mut cur = load(t, cli)?;
    let mut params = vec![p.parameter(&cur)?];
    let mut budgets = vec![t.budget(&cur)];
    for round in 1..=cli.rounds {
        let param_in = p.parameter(&cur)?;
        if param_in <= p.floor() {
            em.emit(&Event::Note {
                message: format!(
                    "parameter {param_in} is at the floor {} of {}; stopped after {} of {} rounds",
                    p.floor(),
                    p.name(),
                    round - 1,
                    cli.rounds
                ),
            })?;
            break;
        }
        let applied = checked_apply(p, dim.as_ref(), &cur)?;
        if applied.floor {
            em.emit(&Event::Note {
                message: format!(
                    "{} cannot lower parameter {param_in} any further; stopped after {} of {} rounds",
                    dim.name(),
                    round - 1,
                    cli.rounds
                ),
            })?;
            break;
        }
        let out = applied.instance;
        let param_out = p.parameter(&out)?;
        em.emit(&Event::Round {
            problem: p.name().into(),
            round,
            param_in,
            param_out,
            budget_in: t.budget(&cur),
            budget_out: t.budget(&out),
            size_in: p.size(&cur),
            size_out: p.size(&out),
            branches: applied.branches,
        })?;
        params.push(param_out);
        budgets.push(t.budget(&out));
        cur = out;
    }
    em.emit(&Event::Trajectory {
        problem: p.name().into(),
        params,
        budgets,
    })?;
    let text = t.render(&cur);
    let path = match &cli.output {
        Some(path) => {
            write_file(path, &text)?;
            Some(path.display().to_string())
        }
        None => None,
    };
    em.emit(&Event::Instance { path, text })?;
    Ok(exit::OK)
}

pub fn verify<T: Target>(t: &T, cli: &Cli, em: &mut Emitter) -> CliResult<i32> {
    let p = t.problem();
    let dim = t.diminisher()?;
    let defaults = Caps::default();
    let caps = Caps {
        max_n: cli.max_n.unwrap_or(defaults.max_n),
        max_k: cli.max_k.unwrap_or(defaults.max_k),
    };
    let v = verify_diminisher(p, dim.as_ref(), cli.trials, cli.seed, &caps)?;
    for r in &v.reports {
        em.emit(&Event::Trial {
            problem: p.name().into(),
            trial: r.trial,
            seed: r.seed,
            param_in: r.k_in,
            param_out: r.k_out,
            size_in: r.size_in,
            size_out: r.size_out,
            branches: r.branches,
            answer_in: r.answer_in,
            answer_out: r.answer_out,
            equivalent: r.equivalent,
            decreased: r.decreased,
            passed: r.passed(),
        })?;
    }
    em.emit(&Event::Summary {
        problem: p.name().into(),
        trials: v.reports.len() as u64,
        passed: v.passed() as u64,
        failed: v.failed() as u64,
        seed: cli.seed,
    })?;
    if let Some(cx) = &v.counterexample {
        let minimized = t.render(&cx.minimized);
        let path = match &cli.output {
            Some(path) => {
                write_file(path, &minimized)?;
                Some(path.display().to_string())
            }
            None => None,
        };
        em.emit(&Event::Counterexample {
            problem: p.name().into(),
            trial: cx.trial,
            path,
            original: t.render(&cx.original),
            minimized,
            output: t.render(&cx.minimized_output),
        })?;
    }
    Ok(if v.all_passed() {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    })
}

pub fn solve<T: Target>(t: &T, cli: &Cli, em: &mut Emitter) -> CliResult<i32> {
    let inst = load(t, cli)?;
    let answer = t.problem().decide(&inst)?;
    em.emit(&Event::Answer {
        command: "solve".into(),
        problem: t.problem().name().into(),
        answer,
    })?;
    Ok(exit::OK)
}

pub fn param<T: Target>(t: &T, cli: &Cli, em: &mut Emitter) -> CliResult<i32> {
    let inst = load(t, cli)?;
    let p = t.problem();
    em.emit(&Event::Param {
        name: "parameter".into(),
        value: Value::Int(p.parameter(&inst)?),
    })?;
    em.emit(&Event::Param {
        name: "k".into(),
        value: Value::Int(t.budget(&inst)),
    })?;
    for (name, v) in t.extra_values(&inst) {
        em.emit(&Event::Param {
            name,
            value: Value::Real(v),
        })?;
    }
    Ok(exit::OK)
}

/// `param --which <width|all>` on a graph file; the width cap is `--max-n`.
pub fn widths(which: &str, cli: &Cli, em: &mut Emitter) -> CliResult<i32> {
    let kinds: Vec<WidthKind> = if which == "all" {
        WidthKind::ALL.to_vec()
    } else {
        vec![which.parse()?]
    };
    let (path, text) = read_input(cli)?;
    let file = parse_graph(&text).map_err(|source| CliError::InFile { path, source })?;
    let cap = cli.max_n.unwrap_or(DEFAULT_WIDTH_CAP);
    for kind in kinds {
        let w = width(&file.graph, kind, cap)?;
        em.emit(&Event::Param {
            name: kind.name().into(),
            value: Value::Int(w.value),
        })?;
    }
    Ok(exit::OK)
}

pub fn accelerate<T: Target>(t: &T, cli: &Cli, em: &mut Emitter) -> CliResult<i32> {
    let p = t.problem();
    let Some(dim) = t.strong_diminisher() else {
        return Err(CliError::usage(format!(
            "{} has no strong diminisher to accelerate with",
            p.name()
        )));
    };
    let inst = load(t, cli)?;
    // Instances whose acceleration factor is below 2 are solved directly.
    let threshold = if t.acceleration(&inst) < 2 { usize::MAX } else { 0 };
    let trace = accelerated_solve(
        p,
        dim.as_ref(),
        |i| p.decide(i),
        |i| t.acceleration(i),
        threshold,
        &inst,
    )?;
    em.emit(&Event::Accelerate {
        problem: p.name().into(),
        k_before: trace.k_before,
        k_after: trace.k_after,
        f: trace.f_value,
        planned: trace.planned,
        applications: trace.applications,
        direct: trace.direct,
        answer: trace.verdict,
    })?;
    Ok(exit::OK)
}

/// Run the strict (`DropOne` + truncating kernel) or strong (`Halving` +
/// doubling kernel) loop on a Unary Threshold instance.
pub fn run_loop(inst: &UnaryInstance, mode: &str) -> CliResult<LoopTrace> {
    let p = UnaryThreshold;
    let base = |i: &UnaryInstance| p.decide(i);
    Ok(match mode {
        "strict" => diminish_kernelize_loop(&p, &DropOne, &TruncatingKernel, p.floor(), base, inst)?,
        // The doubling kernel needs base instances with k >= 2 to make progress.
        "strong" => strong_loop(&p, &Halving, &DoublingKernel, 2, base, inst)?,
        other => {
            return Err(CliError::usage(format!(
                "unknown loop {other:?}; use --which strict or --which strong"
            )))
        }
    })
}

pub fn kernel_loop<T>(t: &T, cli: &Cli, em: &mut Emitter) -> CliResult<i32>
where
    T: Target<P = UnaryThreshold>,
{
    let mode = cli.which.as_deref().unwrap_or("strict");
    let inst = load(t, cli)?;
    let trace = run_loop(&inst, mode)?;
    for (i, r) in trace.rounds.iter().enumerate() {
        em.emit(&Event::LoopRound {
            round: i as u32 + 1,
            k_before: r.k_before,
            size_before: r.size_before,
            applications: r.applications,
            k_diminished: r.k_diminished,
            size_diminished: r.size_diminished,
            k_after: r.k_after,
            size_after: r.size_after,
        })?;
    }
    em.emit(&Event::Loop {
        problem: t.problem().name().into(),
        mode: mode.into(),
        initial_k: trace.initial_k,
        final_k: trace.final_k,
        rounds: trace.rounds.len() as u32,
        answer: trace.verdict,
    })?;
    Ok(exit::OK)
}
