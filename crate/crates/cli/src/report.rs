//! Report events and the single writer that renders them as text or as
//! JSON lines.

use std::fmt::Write as _;
use std::io::Write;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(u64),
    Real(f64),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Real(v) => write!(f, "{v:.4}"),
        }
    }
}

/// One line of output. In JSON-lines mode every event is one object whose
/// `event` field names the variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum Event {
    /// One diminisher application.
    Round {
        problem: String,
        round: u32,
        param_in: u64,
        param_out: u64,
        budget_in: u64,
        budget_out: u64,
        size_in: usize,
        size_out: usize,
        branches: usize,
    },
    Note {
        message: String,
    },
    Trajectory {
        problem: String,
        params: Vec<u64>,
        budgets: Vec<u64>,
    },
    /// Final instance of a `diminish` run.
    Instance {
        path: Option<String>,
        text: String,
    },
    Trial {
        problem: String,
        trial: u64,
        seed: u64,
        param_in: u64,
        param_out: u64,
        size_in: usize,
        size_out: usize,
        branches: usize,
        answer_in: bool,
        answer_out: bool,
        equivalent: bool,
        decreased: bool,
        passed: bool,
    },
    Summary {
        problem: String,
        trials: u64,
        passed: u64,
        failed: u64,
        seed: u64,
    },
    Counterexample {
        problem: String,
        trial: u64,
        path: Option<String>,
        original: String,
        minimized: String,
        output: String,
    },
    Answer {
        command: String,
        problem: String,
        answer: bool,
    },
    Param {
        name: String,
        value: Value,
    },
    LoopRound {
        round: u32,
        k_before: u64,
        size_before: usize,
        applications: usize,
        k_diminished: u64,
        size_diminished: usize,
        k_after: u64,
        size_after: usize,
    },
    Loop {
        problem: String,
        mode: String,
        initial_k: u64,
        final_k: u64,
        rounds: u32,
        answer: bool,
    },
    Accelerate {
        problem: String,
        k_before: u64,
        k_after: u64,
        f: u64,
        planned: u32,
        applications: u32,
        direct: bool,
        answer: bool,
    },
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn arrow_join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" -> ")
}

impl Event {
    /// Human-readable rendering. Passing trials are not printed in text mode.
    pub fn text(&self) -> Option<String> {
        let s = match self {
            Event::Round {
                problem,
                round,
                param_in,
                param_out,
                budget_in,
                budget_out,
                size_in,
                size_out,
                branches,
            } => format!(
                "round {round} [{problem}]: parameter {param_in} -> {param_out}, k {budget_in} -> {budget_out}, size {size_in} -> {size_out}, {branches} branches"
            ),
            Event::Note { message } => format!("note: {message}"),
            Event::Trajectory {
                params, budgets, ..
            } => format!(
                "parameter trajectory: {}\nk trajectory: {}",
                arrow_join(params),
                arrow_join(budgets)
            ),
            Event::Instance { path: Some(p), .. } => format!("wrote final instance to {p}"),
            Event::Instance { path: None, text } => text.trim_end().to_string(),
            Event::Trial { passed: true, .. } => return None,
            Event::Trial {
                trial,
                seed,
                param_in,
                param_out,
                answer_in,
                answer_out,
                ..
            } => format!(
                "FAIL trial {trial} (seed {seed}): parameter {param_in} -> {param_out}, answer {} -> {}",
                yes_no(*answer_in),
                yes_no(*answer_out)
            ),
            Event::Summary {
                problem,
                trials,
                passed,
                failed,
                seed,
            } => {
                if *trials == 0 {
                    format!("{problem}: 0 trials run (seed {seed}); nothing to check")
                } else {
                    format!("{problem}: {trials} trials, {passed} passed, {failed} failed (seed {seed})")
                }
            }
            Event::Counterexample {
                trial,
                path,
                original,
                minimized,
                output,
                ..
            } => {
                let mut s = format!("counterexample from trial {trial}");
                match path {
                    Some(p) => {
                        let _ = write!(s, " written to {p}");
                    }
                    None => {
                        let _ = write!(
                            s,
                            "\n--- original\n{}\n--- minimized\n{}\n--- diminisher output\n{}",
                            original.trim_end(),
                            minimized.trim_end(),
                            output.trim_end()
                        );
                    }
                }
                s
            }
            Event::Answer { answer, .. } => yes_no(*answer).to_string(),
            Event::Param { name, value } => format!("{name} {value}"),
            Event::LoopRound {
                round,
                k_before,
                size_before,
                applications,
                k_diminished,
                size_diminished,
                k_after,
                size_after,
            } => format!(
                "round {round}: (k {k_before}, size {size_before}) -{applications}x diminish-> (k {k_diminished}, size {size_diminished}) -kernel-> (k {k_after}, size {size_after})"
            ),
            Event::Loop {
                mode,
                initial_k,
                final_k,
                rounds,
                answer,
                ..
            } => format!(
                "{} after {rounds} rounds ({mode} loop, k {initial_k} -> {final_k})",
                yes_no(*answer)
            ),
            Event::Accelerate {
                k_before,
                k_after,
                f,
                planned,
                applications,
                direct,
                answer,
                ..
            } => {
                if *direct {
                    format!("{} (solved directly, k {k_before})", yes_no(*answer))
                } else {
                    format!(
                        "{} (f = {f}, {applications}/{planned} applications, k {k_before} -> {k_after})",
                        yes_no(*answer)
                    )
                }
            }
        };
        Some(s)
    }
}

pub struct Emitter<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl<'a> Emitter<'a> {
    pub fn new(format: Format, out: &'a mut dyn Write) -> Self {
        Emitter { format, out }
    }

    pub fn emit(&mut self, ev: &Event) -> CliResult<()> {
        let line = match self.format {
            Format::Text => match ev.text() {
                Some(t) => t,
                None => return Ok(()),
            },
            Format::Jsonl => serde_json::to_string(ev).expect("events serialize"),
        };
        writeln!(self.out, "{line}").map_err(CliError::Output)
    }
}
