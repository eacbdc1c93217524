//! Nondeterministic single-tape Turing machines with a step budget.
//!
//! Symbols and states are indices into the machine's name tables; the blank
//! is `None` and may be read but never written. The head starts on cell 0,
//! the first input symbol.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

mod accept;
mod format;
mod problem;
mod sigma;
mod states;

pub use accept::{accepts, TmLimits};
pub use format::{parse_ntm, serialize_ntm};
pub use problem::{random_machine, NtmProblem, NtmVariant};
pub use sigma::{compress_last_steps, sigma_state_bound, SigmaCompression, SIGMA_REJECT};
pub use states::{compress_first_steps, merged_symbol_name, StateCompression};

pub type Sym = usize;
pub type State = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    Left,
    Stay,
    Right,
}

impl Move {
    pub const ALL: [Move; 3] = [Move::Left, Move::Stay, Move::Right];

    pub fn delta(self) -> i64 {
        match self {
            Move::Left => -1,
            Move::Stay => 0,
            Move::Right => 1,
        }
    }

    pub fn from_delta(d: i64) -> Option<Move> {
        match d {
            -1 => Some(Move::Left),
            0 => Some(Move::Stay),
            1 => Some(Move::Right),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Move::Left => 'L',
            Move::Stay => 'S',
            Move::Right => 'R',
        }
    }
}

/// Right-hand side of a transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Action {
    pub write: Sym,
    pub to: State,
    pub mv: Move,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtMachine {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: State,
    pub accepting: BTreeSet<State>,
    /// `(read, state) -> actions`; action lists are sorted and deduplicated.
    pub delta: BTreeMap<(Option<Sym>, State), Vec<Action>>,
}

impl NtMachine {
    pub fn new(alphabet: Vec<String>, states: Vec<String>, initial: State) -> Self {
        NtMachine {
            alphabet,
            states,
            initial,
            accepting: BTreeSet::new(),
            delta: BTreeMap::new(),
        }
    }

    pub fn add_transition(&mut self, read: Option<Sym>, from: State, action: Action) {
        let list = self.delta.entry((read, from)).or_default();
        if let Err(pos) = list.binary_search(&action) {
            list.insert(pos, action);
        }
    }

    pub fn actions(&self, read: Option<Sym>, state: State) -> &[Action] {
        self.delta.get(&(read, state)).map_or(&[], Vec::as_slice)
    }

    pub fn transition_count(&self) -> usize {
        self.delta.values().map(Vec::len).sum()
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.accepting.contains(&q)
    }

    pub fn symbol_name(&self, s: Option<Sym>) -> &str {
        s.map_or("_", |s| self.alphabet[s].as_str())
    }

    pub fn validate(&self) -> Result<()> {
        let (ns, nq) = (self.alphabet.len(), self.states.len());
        if self.initial >= nq {
            return Err(Error::invalid("initial state out of range"));
        }
        if self.accepting.iter().any(|&q| q >= nq) {
            return Err(Error::invalid("accepting state out of range"));
        }
        for (&(read, from), acts) in &self.delta {
            if from >= nq || read.is_some_and(|r| r >= ns) {
                return Err(Error::invalid("transition source out of range"));
            }
            if acts.iter().any(|a| a.write >= ns || a.to >= nq) {
                return Err(Error::invalid("transition target out of range"));
            }
        }
        check_names("symbol", &self.alphabet)?;
        check_names("state", &self.states)
    }
}

fn check_names(what: &str, names: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for n in names {
        if n.is_empty() || n == "_" || n.contains('#') || n.chars().any(char::is_whitespace) {
            return Err(Error::invalid(format!("bad {what} name {n:?}")));
        }
        if !seen.insert(n.as_str()) {
            return Err(Error::invalid(format!("duplicate {what} name {n:?}")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtmInstance {
    pub machine: NtMachine,
    pub input: Vec<Sym>,
    /// Step budget: accept iff some run is in an accepting state after
    /// exactly `k` steps.
    pub k: u64,
}

impl NtmInstance {
    pub fn validate(&self) -> Result<()> {
        self.machine.validate()?;
        if self.input.iter().any(|&s| s >= self.machine.alphabet.len()) {
            return Err(Error::invalid("input symbol outside the alphabet"));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        serialize_ntm(self)
    }

    /// Content of cell `i` before the first step.
    pub fn initial_cell(&self, i: i64) -> Option<Sym> {
        usize::try_from(i).ok().and_then(|i| self.input.get(i).copied())
    }
}
