use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::problem::{Applied, Problem};
use crate::{Error, Result};

/// A rational constant `num / den` strictly greater than one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub num: u64,
    pub den: u64,
}

impl Factor {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num <= den {
            return Err(Error::invalid(format!("factor {num}/{den} must exceed 1")));
        }
        Ok(Factor { num, den })
    }

    pub const fn integer(c: u64) -> Self {
        Factor { num: c, den: 1 }
    }

    /// `ceil(k / self)`.
    pub fn div_ceil(&self, k: u64) -> u64 {
        let k = k as u128 * self.den as u128;
        k.div_ceil(self.num as u128) as u64
    }

    /// `floor(k * self)`.
    pub fn mul_floor(&self, k: u64) -> u64 {
        (k as u128 * self.num as u128 / self.den as u128) as u64
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiminisherKind {
    /// `k' < k`.
    StrictDecrease,
    /// `k' <= ceil(k / c)` and `k' < k`.
    StrongFactor(Factor),
}

pub trait Diminisher<P: Problem> {
    fn name(&self) -> &str;

    fn kind(&self) -> DiminisherKind {
        DiminisherKind::StrictDecrease
    }

    /// Exponent `b` such that one application maps encoded size `s` to at
    /// most `max(s, 2)^b`.
    fn size_exponent(&self) -> u32 {
        2
    }

    fn apply(&self, problem: &P, inst: &P::Instance) -> Result<Applied<P::Instance>>;
}

/// Outputs a nonempty list of instances whose parameters are all below the
/// input parameter; the input is a yes-instance iff some output is.
pub trait BranchingRule<P: Problem> {
    fn name(&self) -> &str;

    fn branch(&self, problem: &P, inst: &P::Instance) -> Result<Vec<P::Instance>>;
}

/// Merges instances into one that is a yes-instance iff some input is, with
/// parameter at most the largest input parameter plus [`Composition::additive`].
pub trait Composition<P: Problem> {
    fn name(&self) -> &str;

    fn additive(&self) -> u64;

    fn compose(&self, problem: &P, insts: Vec<P::Instance>) -> Result<P::Instance>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    /// `k' <= k + additive`.
    Strict { additive: u64 },
    /// `k' <= factor * k`.
    SemiStrict { factor: Factor },
}

pub trait Kernel<P: Problem> {
    fn name(&self) -> &str;

    fn kind(&self) -> KernelKind;

    /// `c'` with output size at most `k^{c'}` for input parameter `k >= 2`.
    fn size_exponent(&self) -> u32;

    fn kernelize(&self, problem: &P, inst: &P::Instance) -> Result<P::Instance>;
}

/// Polynomial-time many-one reduction from `A` to `B`.
pub trait Reduction<A: Problem, B: Problem> {
    fn name(&self) -> &str;

    /// Whether the reduction promises `k' <= k`. Only such reductions can
    /// transfer diminishers.
    fn parameter_non_increasing(&self) -> bool;

    fn reduce(&self, from: &A, to: &B, inst: &A::Instance) -> Result<B::Instance>;
}

/// A diminisher given by a plain function.
pub struct FnDiminisher<F> {
    name: String,
    kind: DiminisherKind,
    size_exponent: u32,
    f: F,
}

impl<F> FnDiminisher<F> {
    pub fn new(name: impl Into<String>, kind: DiminisherKind, size_exponent: u32, f: F) -> Self {
        FnDiminisher {
            name: name.into(),
            kind,
            size_exponent,
            f,
        }
    }
}

impl<P, F> Diminisher<P> for FnDiminisher<F>
where
    P: Problem,
    F: Fn(&P, &P::Instance) -> Result<Applied<P::Instance>>,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn kind(&self) -> DiminisherKind {
        self.kind
    }

    fn size_exponent(&self) -> u32 {
        self.size_exponent
    }

    fn apply(&self, problem: &P, inst: &P::Instance) -> Result<Applied<P::Instance>> {
        (self.f)(problem, inst)
    }
}

pub(crate) fn pow_bound(base: usize, exp: u32) -> u128 {
    (base.max(2) as u128).saturating_pow(exp)
}

/// Apply `dim` and enforce its contract: parameter decrease (or the strong
/// factor) above the problem floor, floors only at or below it, and the
/// declared size growth.
pub fn checked_apply<P, D>(problem: &P, dim: &D, inst: &P::Instance) -> Result<Applied<P::Instance>>
where
    P: Problem,
    D: Diminisher<P> + ?Sized,
{
    let k_in = problem.parameter(inst)?;
    let applied = dim.apply(problem, inst)?;
    let stage = || format!("diminisher {}", dim.name());
    if applied.floor {
        if k_in > problem.floor() {
            return Err(Error::contract(
                stage(),
                format!("gave up at parameter {k_in} above floor {}", problem.floor()),
            ));
        }
        return Ok(applied);
    }
    let k_out = problem.parameter(&applied.instance)?;
    if k_in > problem.floor() && k_out >= k_in {
        return Err(Error::contract(stage(), format!("parameter {k_in} -> {k_out}")));
    }
    if let DiminisherKind::StrongFactor(c) = dim.kind() {
        if k_in > problem.floor() && k_out > c.div_ceil(k_in) {
            return Err(Error::contract(
                stage(),
                format!("parameter {k_in} -> {k_out} is not reduced by factor {c}"),
            ));
        }
    }
    let (s_in, s_out) = (problem.size(inst), problem.size(&applied.instance));
    if s_out as u128 > pow_bound(s_in, dim.size_exponent()) {
        return Err(Error::contract(
            stage(),
            format!("size {s_in} -> {s_out} exceeds declared exponent {}", dim.size_exponent()),
        ));
    }
    Ok(applied)
}

/// Check a branching rule's output; returns the shared output parameter
/// (the largest one).
pub fn check_branches<P: Problem>(
    problem: &P,
    rule_name: &str,
    k_in: u64,
    outputs: &[P::Instance],
) -> Result<u64> {
    if outputs.is_empty() {
        return Err(Error::contract(
            format!("branching rule {rule_name}"),
            "empty branch list",
        ));
    }
    let mut shared = 0;
    for out in outputs {
        let k = problem.parameter(out)?;
        if k >= k_in {
            return Err(Error::contract(
                format!("branching rule {rule_name}"),
                format!("branch parameter {k} is not below {k_in}"),
            ));
        }
        shared = shared.max(k);
    }
    Ok(shared)
}

/// Check a composition's output against the largest input parameter.
pub fn check_composition<P: Problem>(
    problem: &P,
    comp_name: &str,
    additive: u64,
    k_in: u64,
    output: &P::Instance,
) -> Result<u64> {
    let k_out = problem.parameter(output)?;
    if k_out > k_in.checked_add(additive).ok_or(Error::Overflow)? {
        return Err(Error::contract(
            format!("composition {comp_name}"),
            format!("parameter {k_in} -> {k_out} exceeds additive constant {additive}"),
        ));
    }
    Ok(k_out)
}

/// Check a kernel's output parameter and size bound.
pub fn check_kernel<P, K>(problem: &P, kern: &K, k_in: u64, output: &P::Instance) -> Result<u64>
where
    P: Problem,
    K: Kernel<P> + ?Sized,
{
    let k_out = problem.parameter(output)?;
    let stage = || format!("kernel {}", kern.name());
    let ok = match kern.kind() {
        KernelKind::Strict { additive } => k_out <= k_in.saturating_add(additive),
        KernelKind::SemiStrict { factor } => {
            k_out as u128 * factor.den as u128 <= k_in as u128 * factor.num as u128
        }
    };
    if !ok {
        return Err(Error::contract(
            stage(),
            format!("parameter {k_in} -> {k_out} breaks {:?}", kern.kind()),
        ));
    }
    if k_in >= 2 {
        let size = problem.size(output);
        if size as u128 > pow_bound(k_in as usize, kern.size_exponent()) {
            return Err(Error::contract(
                stage(),
                format!("size {size} exceeds {k_in}^{}", kern.size_exponent()),
            ));
        }
    }
    Ok(k_out)
}
