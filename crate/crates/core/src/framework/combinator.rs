use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::marker::PhantomData;

use super::contract::{
    check_branches, check_composition, checked_apply, BranchingRule, Composition, Diminisher,
    DiminisherKind, Factor, Reduction,
};
use super::problem::{Applied, Problem};
use crate::{Error, Result};

/// Diminisher obtained from a parameter-decreasing branching rule and a
/// strict composition with additive constant `c`: branch `c + 1` levels
/// deep, flatten the leaves and compose them.
///
/// When some intermediate instance already sits at the problem floor the
/// recursion cannot go deeper; the input is then decided directly and
/// replaced by a canonical instance.
pub struct BranchCompose<R, C> {
    name: String,
    rule: R,
    comp: C,
    size_exponent: u32,
}

impl<R, C> BranchCompose<R, C> {
    pub fn new(name: impl Into<String>, rule: R, comp: C) -> Self {
        BranchCompose {
            name: name.into(),
            rule,
            comp,
            size_exponent: 3,
        }
    }

    pub fn with_size_exponent(mut self, b: u32) -> Self {
        self.size_exponent = b;
        self
    }

    pub fn rule(&self) -> &R {
        &self.rule
    }

    pub fn composition(&self) -> &C {
        &self.comp
    }
}

impl<P, R, C> Diminisher<P> for BranchCompose<R, C>
where
    P: Problem,
    R: BranchingRule<P>,
    C: Composition<P>,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn size_exponent(&self) -> u32 {
        self.size_exponent
    }

    fn apply(&self, problem: &P, inst: &P::Instance) -> Result<Applied<P::Instance>> {
        let k = problem.parameter(inst)?;
        if k <= problem.floor() {
            return Ok(Applied::at_floor(inst.clone()));
        }
        let additive = self.comp.additive();
        let mut level = alloc::vec![inst.clone()];
        let mut shared = k;
        for _ in 0..=additive {
            let mut next = Vec::new();
            for x in &level {
                let kx = problem.parameter(x)?;
                if kx <= problem.floor() {
                    return decide_directly(problem, inst, k);
                }
                let out = self.rule.branch(problem, x)?;
                check_branches(problem, self.rule.name(), kx, &out)?;
                next.extend(out);
            }
            shared = next
                .iter()
                .map(|x| problem.parameter(x))
                .try_fold(0, |acc, p| p.map(|p| acc.max(p)))?;
            level = next;
        }
        let branches = level.len();
        let out = self.comp.compose(problem, level)?;
        let k_out = check_composition(problem, self.comp.name(), additive, shared, &out)?;
        if k_out >= k {
            return Err(Error::contract(
                format!("branch-and-compose {}", self.name),
                format!("parameter {k} -> {k_out}"),
            ));
        }
        Ok(Applied::new(out, branches))
    }
}

fn decide_directly<P: Problem>(
    problem: &P,
    inst: &P::Instance,
    k: u64,
) -> Result<Applied<P::Instance>> {
    let answer = problem.decide(inst)?;
    Ok(match problem.trivial(answer, k) {
        Some(t) => Applied::new(t, 0),
        None => Applied::at_floor(inst.clone()),
    })
}

/// Diminisher for `A` obtained from parameter-non-increasing reductions
/// `A -> B`, `B -> A` and a diminisher for `B`.
pub struct Transfer<B, R1, R2, D, A> {
    name: String,
    target: B,
    to_other: R1,
    back: R2,
    dim: D,
    _source: PhantomData<fn(&A)>,
}

impl<A, B, R1, R2, D> Transfer<B, R1, R2, D, A>
where
    A: Problem,
    B: Problem,
    R1: Reduction<A, B>,
    R2: Reduction<B, A>,
    D: Diminisher<B>,
{
    /// Rejects reductions that do not promise `k' <= k`.
    pub fn new(target: B, to_other: R1, back: R2, dim: D) -> Result<Self> {
        for (name, ok) in [
            (to_other.name(), to_other.parameter_non_increasing()),
            (back.name(), back.parameter_non_increasing()),
        ] {
            if !ok {
                return Err(Error::contract(
                    format!("reduction {name}"),
                    "not parameter-non-increasing; cannot transfer a diminisher",
                ));
            }
        }
        Ok(Transfer {
            name: format!("{}({})", dim.name(), target.name()),
            target,
            to_other,
            back,
            dim,
            _source: PhantomData,
        })
    }
}

impl<A, B, R1, R2, D> Diminisher<A> for Transfer<B, R1, R2, D, A>
where
    A: Problem,
    B: Problem,
    R1: Reduction<A, B>,
    R2: Reduction<B, A>,
    D: Diminisher<B>,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn kind(&self) -> DiminisherKind {
        self.dim.kind()
    }

    fn size_exponent(&self) -> u32 {
        self.dim.size_exponent().saturating_add(2)
    }

    fn apply(&self, problem: &A, inst: &A::Instance) -> Result<Applied<A::Instance>> {
        let k1 = problem.parameter(inst)?;
        if k1 <= problem.floor() {
            return Ok(Applied::at_floor(inst.clone()));
        }
        let x2 = self.to_other.reduce(problem, &self.target, inst)?;
        let k2 = self.target.parameter(&x2)?;
        if k2 > k1 {
            return Err(Error::contract(
                format!("reduction {}", self.to_other.name()),
                format!("parameter {k1} -> {k2}"),
            ));
        }
        let applied = checked_apply(&self.target, &self.dim, &x2)?;
        if applied.floor {
            return Ok(Applied::at_floor(inst.clone()));
        }
        let k2_out = self.target.parameter(&applied.instance)?;
        let x1 = self.back.reduce(&self.target, problem, &applied.instance)?;
        let k1_out = problem.parameter(&x1)?;
        if k1_out > k2_out {
            return Err(Error::contract(
                format!("reduction {}", self.back.name()),
                format!("parameter {k2_out} -> {k1_out}"),
            ));
        }
        debug_assert!(k1_out <= k2_out && k2_out < k2 && k2 <= k1);
        Ok(Applied::new(x1, applied.branches))
    }
}

/// A diminisher applied a fixed number of times in a row. Used to
/// normalize strong diminishers with constant `1 < c < 2` to constant
/// `c^ceil(log_c 2) >= 2`.
pub struct Repeat<D> {
    inner: D,
    times: u32,
}

impl<D> Repeat<D> {
    pub fn new(inner: D, times: u32) -> Self {
        Repeat {
            inner,
            times: times.max(1),
        }
    }

    /// Repeat a strong diminisher until its constant is at least two.
    pub fn normalize<P: Problem>(inner: D) -> Result<Self>
    where
        D: Diminisher<P>,
    {
        let times = match inner.kind() {
            DiminisherKind::StrongFactor(c) => times_to_reach_two(c)?,
            DiminisherKind::StrictDecrease => {
                return Err(Error::invalid("only strong diminishers can be normalized"))
            }
        };
        Ok(Repeat::new(inner, times))
    }

    pub fn times(&self) -> u32 {
        self.times
    }
}

fn times_to_reach_two(c: Factor) -> Result<u32> {
    let (mut num, mut den) = (c.num as u128, c.den as u128);
    let mut times = 1;
    while num < 2 * den {
        num = num.checked_mul(c.num as u128).ok_or(Error::Overflow)?;
        den = den.checked_mul(c.den as u128).ok_or(Error::Overflow)?;
        times += 1;
    }
    Ok(times)
}

impl<P: Problem, D: Diminisher<P>> Diminisher<P> for Repeat<D> {
    fn name(&self) -> &str {
        self.inner.name()
    }

    fn kind(&self) -> DiminisherKind {
        match self.inner.kind() {
            DiminisherKind::StrongFactor(c) => {
                let num = (c.num as u128).pow(self.times);
                let den = (c.den as u128).pow(self.times);
                match (u64::try_from(num), u64::try_from(den)) {
                    (Ok(num), Ok(den)) => DiminisherKind::StrongFactor(Factor { num, den }),
                    _ => DiminisherKind::StrongFactor(Factor::integer(2)),
                }
            }
            k => k,
        }
    }

    fn size_exponent(&self) -> u32 {
        self.inner.size_exponent().saturating_pow(self.times)
    }

    fn apply(&self, problem: &P, inst: &P::Instance) -> Result<Applied<P::Instance>> {
        let mut cur = Applied::new(inst.clone(), 0);
        for i in 0..self.times {
            let next = self.inner.apply(problem, &cur.instance)?;
            if next.floor {
                if i == 0 {
                    return Ok(Applied::at_floor(inst.clone()));
                }
                break;
            }
            cur = Applied::new(next.instance, cur.branches + next.branches);
        }
        Ok(cur)
    }
}
