//! Unary Threshold: `(x, k)` is a yes-instance iff the bit string `x`
//! contains at least `k` ones.
//!
//! The problem is in P, so unlike the NP-hard problems elsewhere in the crate
//! it can supply both a diminisher and a strict polynomial kernel. That makes
//! it the test bed for the diminish/kernelize loops.

use alloc::string::String;
use alloc::vec::Vec;

use super::contract::{Diminisher, DiminisherKind, Factor, Kernel, KernelKind};
use super::problem::{Applied, Caps, Problem};
use crate::rng::{Rng, SeededRng};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryInstance {
    pub bits: Vec<bool>,
    pub k: u64,
}

impl UnaryInstance {
    pub fn new(bits: Vec<bool>, k: u64) -> Self {
        UnaryInstance { bits, k }
    }

    /// Parse a string of `0`/`1` characters.
    pub fn parse_bits(s: &str, k: u64) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::invalid(alloc::format!("bit string contains {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(UnaryInstance { bits, k })
    }

    pub fn ones(&self) -> u64 {
        self.bits.iter().filter(|&&b| b).count() as u64
    }

    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    fn all_ones(count: u64, k: u64) -> Self {
        UnaryInstance {
            bits: alloc::vec![true; count as usize],
            k,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct UnaryThreshold;

impl Problem for UnaryThreshold {
    type Instance = UnaryInstance;

    fn name(&self) -> &'static str {
        "unary_threshold"
    }

    fn parameter(&self, inst: &UnaryInstance) -> Result<u64> {
        Ok(inst.k)
    }

    fn decide(&self, inst: &UnaryInstance) -> Result<bool> {
        Ok(inst.ones() >= inst.k)
    }

    /// Length of the bit string.
    fn size(&self, inst: &UnaryInstance) -> usize {
        inst.bits.len()
    }

    fn canonical(&self, answer: bool, param: u64) -> Option<UnaryInstance> {
        match (answer, param) {
            (true, p) => Some(UnaryInstance::all_ones(p, p)),
            (false, 0) => None,
            (false, p) => Some(UnaryInstance::new(Vec::new(), p)),
        }
    }

    /// A no-instance with `k = 1` has no equivalent instance with `k = 0`.
    fn floor(&self) -> u64 {
        1
    }

    fn generate(&self, rng: &mut SeededRng, caps: &Caps) -> Result<UnaryInstance> {
        let len = rng.gen_range(0..=caps.max_n);
        let density: f64 = rng.gen_range(0.0..=1.0);
        let bits = (0..len).map(|_| rng.gen_bool(density)).collect();
        let k = rng.gen_range(2..=caps.max_k.max(2));
        Ok(UnaryInstance { bits, k })
    }

    fn admissible(&self, inst: &UnaryInstance) -> bool {
        inst.k >= 2
    }

    fn shrink(&self, inst: &UnaryInstance) -> Vec<UnaryInstance> {
        let mut out = Vec::new();
        for i in 0..inst.bits.len() {
            let mut bits = inst.bits.clone();
            bits.remove(i);
            out.push(UnaryInstance { bits, k: inst.k });
        }
        if inst.k > 0 {
            out.push(UnaryInstance {
                bits: inst.bits.clone(),
                k: inst.k - 1,
            });
        }
        out
    }
}

/// Deletes the first `1` and decrements `k`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DropOne;

impl Diminisher<UnaryThreshold> for DropOne {
    fn name(&self) -> &str {
        "drop_one"
    }

    fn size_exponent(&self) -> u32 {
        1
    }

    fn apply(&self, p: &UnaryThreshold, inst: &UnaryInstance) -> Result<Applied<UnaryInstance>> {
        if inst.k == 0 {
            return Ok(Applied::at_floor(inst.clone()));
        }
        if let Some(pos) = inst.bits.iter().position(|&b| b) {
            let mut bits = inst.bits.clone();
            bits.remove(pos);
            return Ok(Applied::new(UnaryInstance::new(bits, inst.k - 1), 1));
        }
        match p.canonical(false, inst.k - 1) {
            Some(no) => Ok(Applied::new(no, 0)),
            None => Ok(Applied::at_floor(inst.clone())),
        }
    }
}

/// Pairs up ones: `k -> floor(k / 2)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Halving;

impl Diminisher<UnaryThreshold> for Halving {
    fn name(&self) -> &str {
        "halving"
    }

    fn kind(&self) -> DiminisherKind {
        DiminisherKind::StrongFactor(Factor::integer(2))
    }

    fn size_exponent(&self) -> u32 {
        1
    }

    fn apply(&self, p: &UnaryThreshold, inst: &UnaryInstance) -> Result<Applied<UnaryInstance>> {
        if inst.k <= p.floor() {
            return Ok(Applied::at_floor(inst.clone()));
        }
        let odd = inst.k % 2;
        let ones = inst.ones();
        // ones >= 2j + odd  <=>  floor((ones - odd) / 2) >= j
        let kept = if ones >= odd { (ones - odd) / 2 } else { 0 };
        Ok(Applied::new(UnaryInstance::all_ones(kept, inst.k / 2), 1))
    }
}

/// Counts the ones and emits a canonical instance of size at most one with
/// parameter at most one.
#[derive(Debug, Clone, Copy, Default)]
pub struct CanonicalKernel;

impl Kernel<UnaryThreshold> for CanonicalKernel {
    fn name(&self) -> &str {
        "canonical"
    }

    fn kind(&self) -> KernelKind {
        KernelKind::Strict { additive: 0 }
    }

    fn size_exponent(&self) -> u32 {
        1
    }

    fn kernelize(&self, _: &UnaryThreshold, inst: &UnaryInstance) -> Result<UnaryInstance> {
        let k = inst.k.min(1);
        Ok(if inst.ones() >= inst.k {
            UnaryInstance::all_ones(k, k)
        } else {
            UnaryInstance::new(Vec::new(), 1)
        })
    }
}

/// Keeps `min(ones, k)` ones and drops everything else; the parameter is
/// untouched.
#[derive(Debug, Clone, Copy, Default)]
pub struct TruncatingKernel;

impl Kernel<UnaryThreshold> for TruncatingKernel {
    fn name(&self) -> &str {
        "truncating"
    }

    fn kind(&self) -> KernelKind {
        KernelKind::Strict { additive: 0 }
    }

    fn size_exponent(&self) -> u32 {
        1
    }

    fn kernelize(&self, _: &UnaryThreshold, inst: &UnaryInstance) -> Result<UnaryInstance> {
        Ok(UnaryInstance::all_ones(inst.ones().min(inst.k), inst.k))
    }
}

/// Semi-strict kernel that answers with the oracle and emits a canonical
/// instance.
#[derive(Debug, Clone, Copy)]
pub struct OracleKernel {
    pub factor: Factor,
}

impl Kernel<UnaryThreshold> for OracleKernel {
    fn name(&self) -> &str {
        "oracle"
    }

    fn kind(&self) -> KernelKind {
        KernelKind::SemiStrict {
            factor: self.factor,
        }
    }

    fn size_exponent(&self) -> u32 {
        1
    }

    fn kernelize(&self, p: &UnaryThreshold, inst: &UnaryInstance) -> Result<UnaryInstance> {
        CanonicalKernel.kernelize(p, inst)
    }
}

/// Semi-strict kernel with constant 2 that really uses its slack: it
/// truncates to `min(ones, k)` ones and then doubles both sides.
#[derive(Debug, Clone, Copy, Default)]
pub struct DoublingKernel;

impl Kernel<UnaryThreshold> for DoublingKernel {
    fn name(&self) -> &str {
        "doubling"
    }

    fn kind(&self) -> KernelKind {
        KernelKind::SemiStrict {
            factor: Factor::integer(2),
        }
    }

    fn size_exponent(&self) -> u32 {
        2
    }

    fn kernelize(&self, _: &UnaryThreshold, inst: &UnaryInstance) -> Result<UnaryInstance> {
        let kept = inst.ones().min(inst.k);
        Ok(UnaryInstance::all_ones(2 * kept, 2 * inst.k))
    }
}
