use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::contract::{check_kernel, checked_apply, Diminisher, DiminisherKind, Factor, Kernel, KernelKind};
use super::problem::Problem;
use crate::{Error, Result};

/// One round of a diminish/kernelize loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundRecord {
    pub k_before: u64,
    pub size_before: usize,
    /// Diminisher applications actually performed (fewer than planned when
    /// the floor is reached mid-round).
    pub applications: usize,
    pub k_diminished: u64,
    pub size_diminished: usize,
    pub k_after: u64,
    pub size_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopTrace {
    pub initial_k: u64,
    pub rounds: Vec<RoundRecord>,
    pub final_k: u64,
    pub verdict: bool,
}

fn in_round(round: usize, err: Error) -> Error {
    match err {
        Error::Contract { stage, detail } => Error::Contract {
            stage: format!("round {round}: {stage}"),
            detail,
        },
        e => e,
    }
}

fn run_rounds<P, D, K, B>(
    problem: &P,
    dim: &D,
    kern: &K,
    applications: usize,
    c_base: u64,
    base: B,
    inst: &P::Instance,
) -> Result<LoopTrace>
where
    P: Problem,
    D: Diminisher<P> + ?Sized,
    K: Kernel<P> + ?Sized,
    B: Fn(&P::Instance) -> Result<bool>,
{
    let initial_k = problem.parameter(inst)?;
    let mut cur = inst.clone();
    let mut k = initial_k;
    let mut rounds = Vec::new();
    while k > c_base {
        let round = rounds.len() + 1;
        if round as u64 > initial_k {
            return Err(Error::contract(
                format!("round {round}"),
                format!("more rounds than the initial parameter {initial_k}"),
            ));
        }
        let size_before = problem.size(&cur);
        let mut done = 0;
        let mut x = cur.clone();
        for _ in 0..applications {
            let a = checked_apply(problem, dim, &x).map_err(|e| in_round(round, e))?;
            if a.floor {
                break;
            }
            x = a.instance;
            done += 1;
        }
        let k_diminished = problem.parameter(&x)?;
        let size_diminished = problem.size(&x);
        let kernelized = kern.kernelize(problem, &x).map_err(|e| in_round(round, e))?;
        let k_after =
            check_kernel(problem, kern, k_diminished, &kernelized).map_err(|e| in_round(round, e))?;
        if k_after >= k {
            return Err(Error::contract(
                format!("round {round}"),
                format!("parameter did not decrease over the round: {k} -> {k_after}"),
            ));
        }
        rounds.push(RoundRecord {
            k_before: k,
            size_before,
            applications: done,
            k_diminished,
            size_diminished,
            k_after,
            size_after: problem.size(&kernelized),
        });
        cur = kernelized;
        k = k_after;
    }
    let verdict = base(&cur)?;
    Ok(LoopTrace {
        initial_k,
        rounds,
        final_k: k,
        verdict,
    })
}

/// Alternate `d + 1` diminisher applications with one strict kernelization
/// (additive constant `d`) until the parameter is at most `c_base`, then
/// answer with `base`.
pub fn diminish_kernelize_loop<P, D, K, B>(
    problem: &P,
    dim: &D,
    kern: &K,
    c_base: u64,
    base: B,
    inst: &P::Instance,
) -> Result<LoopTrace>
where
    P: Problem,
    D: Diminisher<P> + ?Sized,
    K: Kernel<P> + ?Sized,
    B: Fn(&P::Instance) -> Result<bool>,
{
    let d = match kern.kind() {
        KernelKind::Strict { additive } => additive,
        other => {
            return Err(Error::invalid(format!(
                "diminish/kernelize loop needs a strict kernel, got {other:?}"
            )))
        }
    };
    let applications = usize::try_from(d + 1).map_err(|_| Error::Overflow)?;
    run_rounds(problem, dim, kern, applications, c_base, base, inst)
}

/// Smallest `r >= 1` with `c_d^r >= c_a + c_d`.
pub fn strong_round_length(c_d: Factor, c_a: Factor) -> u32 {
    let (p, q) = (BigUint::from(c_d.num), BigUint::from(c_d.den));
    let (s, t) = (BigUint::from(c_a.num), BigUint::from(c_a.den));
    let rhs_num = &s * &q + &p * &t;
    let rhs_den = &t * &q;
    let mut r = 1u32;
    loop {
        // (p/q)^r >= rhs_num / rhs_den
        if p.pow(r) * &rhs_den >= q.pow(r) * &rhs_num {
            return r;
        }
        r += 1;
    }
}

/// Semi-strict analogue: each round applies a strong diminisher with
/// constant `c_d >= 2` exactly `ceil(log_{c_d}(c_a + c_d))` times and then
/// a semi-strict kernel with constant `c_a`.
pub fn strong_loop<P, D, K, B>(
    problem: &P,
    dim: &D,
    kern: &K,
    c_base: u64,
    base: B,
    inst: &P::Instance,
) -> Result<LoopTrace>
where
    P: Problem,
    D: Diminisher<P> + ?Sized,
    K: Kernel<P> + ?Sized,
    B: Fn(&P::Instance) -> Result<bool>,
{
    let c_d = match dim.kind() {
        DiminisherKind::StrongFactor(c) if c.num >= 2 * c.den => c,
        other => {
            return Err(Error::invalid(format!(
                "strong loop needs a strong diminisher with constant >= 2, got {other:?}"
            )))
        }
    };
    let c_a = match kern.kind() {
        KernelKind::SemiStrict { factor } => factor,
        other => {
            return Err(Error::invalid(format!(
                "strong loop needs a semi-strict kernel, got {other:?}"
            )))
        }
    };
    let applications = strong_round_length(c_d, c_a) as usize;
    run_rounds(problem, dim, kern, applications, c_base, base, inst)
}

/// Smallest `r >= 0` with `base^r >= value` (`base >= 2`).
pub fn ceil_log(base: u64, value: u64) -> u32 {
    assert!(base >= 2, "logarithm base must be at least 2");
    let mut r = 0;
    let mut acc: u128 = 1;
    while acc < value as u128 {
        acc *= base as u128;
        r += 1;
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccelTrace {
    pub k_before: u64,
    pub k_after: u64,
    pub f_value: u64,
    /// Planned number of diminisher applications, `ceil(log_c f)`.
    pub planned: u32,
    pub applications: u32,
    /// Below the size threshold the solver runs on the input directly.
    pub direct: bool,
    pub verdict: bool,
}

/// Shrink the parameter by a factor `f(inst)` with `ceil(log_c f(inst))`
/// applications of a strong diminisher, then run an exact solver.
///
/// `c = min(2, b)` for the diminisher's size exponent `b`; for `b = 1` the
/// base would degenerate, so `c = 2` is used there as well.
pub fn accelerated_solve<P, D, S, F>(
    problem: &P,
    dim: &D,
    solver: S,
    f: F,
    size_threshold: usize,
    inst: &P::Instance,
) -> Result<AccelTrace>
where
    P: Problem,
    D: Diminisher<P> + ?Sized,
    S: Fn(&P::Instance) -> Result<bool>,
    F: Fn(&P::Instance) -> u64,
{
    match dim.kind() {
        DiminisherKind::StrongFactor(c) if c.num >= 2 * c.den => {}
        other => {
            return Err(Error::invalid(format!(
                "accelerated solve needs a strong diminisher with constant >= 2, got {other:?}"
            )))
        }
    }
    let c = u64::from(dim.size_exponent().min(2)).max(2);
    let k_before = problem.parameter(inst)?;
    if problem.size(inst) < size_threshold {
        return Ok(AccelTrace {
            k_before,
            k_after: k_before,
            f_value: f(inst),
            planned: 0,
            applications: 0,
            direct: true,
            verdict: solver(inst)?,
        });
    }
    let f_value = f(inst);
    if f_value < c {
        return Err(Error::contract(
            "acceleration function",
            format!("f = {f_value} < {c} above the size threshold"),
        ));
    }
    let planned = ceil_log(c, f_value);
    let mut cur = inst.clone();
    let mut applications = 0;
    for _ in 0..planned {
        let a = checked_apply(problem, dim, &cur)?;
        if a.floor {
            break;
        }
        cur = a.instance;
        applications += 1;
    }
    let k_after = problem.parameter(&cur)?;
    if applications == planned && k_after > k_before.div_ceil(f_value) {
        return Err(Error::contract(
            format!("diminisher {}", dim.name()),
            format!("parameter {k_before} -> {k_after} after {planned} applications, f = {f_value}"),
        ));
    }
    Ok(AccelTrace {
        k_before,
        k_after,
        f_value,
        planned,
        applications,
        direct: false,
        verdict: solver(&cur)?,
    })
}
