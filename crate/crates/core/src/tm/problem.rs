use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{accepts, Action, Move, NtMachine, NtmInstance, SigmaCompression, StateCompression, TmLimits};
use crate::framework::{Caps, Diminisher, Problem};
use crate::rng::{Rng, SeededRng};
use crate::{Error, Result};

/// Which parameterization of short NTM computation is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NtmVariant {
    /// Parameter `k + |Σ|`.
    Sigma,
    /// Parameter `k + |Q|`.
    States,
    /// Binary alphabet, parameter `k`.
    Binary,
}

impl NtmVariant {
    pub const ALL: [NtmVariant; 3] = [NtmVariant::Sigma, NtmVariant::States, NtmVariant::Binary];

    pub fn name(self) -> &'static str {
        match self {
            NtmVariant::Sigma => "ntm_sigma",
            NtmVariant::States => "ntm_states",
            NtmVariant::Binary => "ntm_binary",
        }
    }
}

impl fmt::Display for NtmVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NtmVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NtmVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown machine problem {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NtmProblem {
    pub variant: NtmVariant,
    pub limits: TmLimits,
}

impl NtmProblem {
    pub fn new(variant: NtmVariant) -> Self {
        NtmProblem {
            variant,
            limits: TmLimits::default(),
        }
    }

    pub fn with_limits(mut self, limits: TmLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn diminisher(&self) -> Box<dyn Diminisher<NtmProblem>> {
        match self.variant {
            NtmVariant::Sigma | NtmVariant::Binary => Box::new(SigmaCompression),
            NtmVariant::States => Box::new(StateCompression),
        }
    }

    fn validate(&self, inst: &NtmInstance) -> Result<()> {
        inst.validate()?;
        if self.variant == NtmVariant::Binary && inst.machine.alphabet.len() > 2 {
            return Err(Error::invalid("binary machines have at most two symbols"));
        }
        Ok(())
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match u8::try_from(i).ok().filter(|&i| i < 26) {
            Some(i) => String::from(char::from(b'a' + i)),
            None => format!("s{i}"),
        })
        .collect()
}

/// Random machine with `0..=2` transitions per (read symbol, state) pair and
/// each state accepting with probability `accept_p`.
pub fn random_machine(
    rng: &mut SeededRng,
    alphabet: Vec<String>,
    n_states: usize,
    accept_p: f64,
) -> NtMachine {
    let n_sym = alphabet.len();
    let mut m = NtMachine::new(alphabet, names("q", n_states.max(1)), 0);
    for q in 0..m.states.len() {
        if rng.gen_bool(accept_p) {
            m.accepting.insert(q);
        }
    }
    if n_sym == 0 {
        return m;
    }
    for q in 0..m.states.len() {
        for read in core::iter::once(None).chain((0..n_sym).map(Some)) {
            for _ in 0..rng.gen_range(0..=2) {
                let action = Action {
                    write: rng.gen_range(0..n_sym),
                    to: rng.gen_range(0..m.states.len()),
                    mv: Move::ALL[rng.gen_range(0..3)],
                };
                m.add_transition(read, q, action);
            }
        }
    }
    m
}

impl Problem for NtmProblem {
    type Instance = NtmInstance;

    fn name(&self) -> &'static str {
        self.variant.name()
    }

    fn parameter(&self, inst: &NtmInstance) -> Result<u64> {
        let extra = match self.variant {
            NtmVariant::Sigma => inst.machine.alphabet.len() as u64,
            NtmVariant::States => inst.machine.states.len() as u64,
            NtmVariant::Binary => 0,
        };
        inst.k.checked_add(extra).ok_or(Error::Overflow)
    }

    fn decide(&self, inst: &NtmInstance) -> Result<bool> {
        self.validate(inst)?;
        accepts(inst, &self.limits)
    }

    fn size(&self, inst: &NtmInstance) -> usize {
        inst.to_text().len()
    }

    fn canonical(&self, answer: bool, p: u64) -> Option<NtmInstance> {
        let p_us = usize::try_from(p).ok().filter(|&p| p <= 64)?;
        let (machine, k) = match self.variant {
            NtmVariant::Sigma => (NtMachine::new(letters(p_us), names("q", 1), 0), 0),
            NtmVariant::States => {
                if p == 0 {
                    return None;
                }
                (NtMachine::new(Vec::new(), names("q", p_us), 0), 0)
            }
            NtmVariant::Binary => {
                let mut m = NtMachine::new(names("", 2), names("q", 1), 0);
                if answer {
                    for read in [None, Some(0), Some(1)] {
                        let write = read.unwrap_or(0);
                        m.add_transition(read, 0, Action { write, to: 0, mv: Move::Stay });
                    }
                }
                (m, p)
            }
        };
        let mut machine = machine;
        if answer {
            machine.accepting.insert(0);
        }
        Some(NtmInstance {
            machine,
            input: Vec::new(),
            k,
        })
    }

    fn floor(&self) -> u64 {
        match self.variant {
            NtmVariant::States => 1,
            _ => 0,
        }
    }

    fn generate(&self, rng: &mut SeededRng, caps: &Caps) -> Result<NtmInstance> {
        let max_k = caps.max_k.max(2);
        let max_len = caps.max_n;
        let (n_sym, len) = match self.variant {
            NtmVariant::Sigma | NtmVariant::Binary => (2, rng.gen_range(0..=max_len.min(2))),
            NtmVariant::States => (rng.gen_range(1..=2), rng.gen_range(max_len.min(2)..=max_len.min(3))),
        };
        let alphabet = match self.variant {
            NtmVariant::Binary => names("", 2),
            _ => letters(n_sym),
        };
        let n_states = rng.gen_range(1..=3);
        let machine = random_machine(rng, alphabet, n_states, 0.4);
        let input = (0..len).map(|_| rng.gen_range(0..n_sym)).collect();
        Ok(NtmInstance {
            machine,
            input,
            k: rng.gen_range(2..=max_k),
        })
    }

    fn admissible(&self, inst: &NtmInstance) -> bool {
        self.validate(inst).is_ok() && inst.k >= 2
    }

    fn shrink(&self, inst: &NtmInstance) -> Vec<NtmInstance> {
        let mut out = Vec::new();
        if inst.k > 0 {
            out.push(NtmInstance {
                k: inst.k - 1,
                ..inst.clone()
            });
        }
        if !inst.input.is_empty() {
            let mut smaller = inst.clone();
            smaller.input.pop();
            out.push(smaller);
        }
        for (&key, acts) in &inst.machine.delta {
            for pos in 0..acts.len() {
                let mut smaller = inst.clone();
                let list = smaller.machine.delta.get_mut(&key).expect("key present");
                list.remove(pos);
                if list.is_empty() {
                    smaller.machine.delta.remove(&key);
                }
                out.push(smaller);
            }
        }
        for &q in &inst.machine.accepting {
            let mut smaller = inst.clone();
            smaller.machine.accepting.remove(&q);
            out.push(smaller);
        }
        out
    }
}
