use alloc::vec::Vec;

use super::contract::{Diminisher, DiminisherKind};
use super::problem::{Caps, Problem};
use crate::rng::{seeded, trial_seed};
use crate::Result;

/// Outcome of one diminisher application on one generated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformReport {
    pub trial: u64,
    pub seed: u64,
    pub k_in: u64,
    pub k_out: u64,
    pub size_in: usize,
    pub size_out: usize,
    pub branches: usize,
    pub answer_in: bool,
    pub answer_out: bool,
    pub equivalent: bool,
    /// `k_out < k_in` (and the strong factor, if any) held.
    pub decreased: bool,
    pub floor: bool,
}

impl TransformReport {
    pub fn passed(&self) -> bool {
        self.equivalent && self.decreased
    }
}

#[derive(Debug, Clone)]
pub struct Counterexample<I> {
    pub trial: u64,
    pub original: I,
    /// Smallest failing instance reached by greedy shrinking.
    pub minimized: I,
    pub minimized_output: I,
}

#[derive(Debug, Clone)]
pub struct Verification<I> {
    pub reports: Vec<TransformReport>,
    pub counterexample: Option<Counterexample<I>>,
}

impl<I> Verification<I> {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.reports.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

fn run_one<P, D>(
    problem: &P,
    dim: &D,
    inst: &P::Instance,
    trial: u64,
    seed: u64,
) -> Result<(TransformReport, P::Instance)>
where
    P: Problem,
    D: Diminisher<P> + ?Sized,
{
    let k_in = problem.parameter(inst)?;
    let applied = dim.apply(problem, inst)?;
    let out = applied.instance;
    let k_out = problem.parameter(&out)?;
    let answer_in = problem.decide(inst)?;
    let answer_out = problem.decide(&out)?;
    let decreased = if k_in <= problem.floor() {
        k_out <= k_in
    } else {
        !applied.floor
            && k_out < k_in
            && match dim.kind() {
                DiminisherKind::StrictDecrease => true,
                DiminisherKind::StrongFactor(c) => k_out <= c.div_ceil(k_in),
            }
    };
    let report = TransformReport {
        trial,
        seed,
        k_in,
        k_out,
        size_in: problem.size(inst),
        size_out: problem.size(&out),
        branches: applied.branches,
        answer_in,
        answer_out,
        equivalent: answer_in == answer_out,
        decreased,
        floor: applied.floor,
    };
    Ok((report, out))
}

const SHRINK_STEPS: usize = 256;

fn minimize<P, D>(problem: &P, dim: &D, start: &P::Instance) -> (P::Instance, Option<P::Instance>)
where
    P: Problem,
    D: Diminisher<P> + ?Sized,
{
    let mut cur = start.clone();
    let mut cur_out = None;
    'outer: for _ in 0..SHRINK_STEPS {
        for cand in problem.shrink(&cur) {
            if !problem.admissible(&cand) {
                continue;
            }
            if let Ok((report, out)) = run_one(problem, dim, &cand, 0, 0) {
                if !report.passed() {
                    cur = cand;
                    cur_out = Some(out);
                    continue 'outer;
                }
            }
        }
        break;
    }
    (cur, cur_out)
}

/// Run `trials` seeded trials: generate a guard-satisfying instance, apply
/// `dim` once and compare oracle answers and parameters. The first failing
/// trial is shrunk to a small counterexample.
///
/// Deterministic in `(problem, dim, trials, seed, caps)`.
pub fn verify_diminisher<P, D>(
    problem: &P,
    dim: &D,
    trials: u64,
    seed: u64,
    caps: &Caps,
) -> Result<Verification<P::Instance>>
where
    P: Problem,
    D: Diminisher<P> + ?Sized,
{
    let mut reports = Vec::new();
    let mut counterexample = None;
    for trial in 0..trials {
        let s = trial_seed(seed, trial);
        let mut rng = seeded(s);
        let inst = problem.generate(&mut rng, caps)?;
        let (report, out) = run_one(problem, dim, &inst, trial, s)?;
        if !report.passed() && counterexample.is_none() {
            let (minimized, min_out) = minimize(problem, dim, &inst);
            counterexample = Some(Counterexample {
                trial,
                original: inst,
                minimized,
                minimized_output: min_out.unwrap_or(out),
            });
        }
        reports.push(report);
    }
    Ok(Verification {
        reports,
        counterexample,
    })
}
