use alloc::vec::Vec;
use core::fmt;

use crate::rng::SeededRng;
use crate::Result;

/// Size caps handed to random generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest instance dimension (vertices, universe size, input length).
    pub max_n: usize,
    /// Largest budget `k` a generator may draw.
    pub max_k: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_n: 8, max_k: 4 }
    }
}

/// A parameterized problem: exact decider, parameter evaluator, canonical
/// trivial instances and a guard-respecting generator.
///
/// The parameter is whatever the problem is parameterized by, which need not
/// be a field of the instance (cutwidth, `k + |T|`, `k + |Q|`, ...).
pub trait Problem {
    type Instance: Clone + fmt::Debug;

    fn name(&self) -> &'static str;

    fn parameter(&self, inst: &Self::Instance) -> Result<u64>;

    /// Exact membership test by exhaustive search. Refuses with
    /// [`crate::Error::CapExceeded`] when the search is too large.
    fn decide(&self, inst: &Self::Instance) -> Result<bool>;

    /// Length in bytes of the instance's text encoding.
    fn size(&self, inst: &Self::Instance) -> usize;

    /// Fixed trivial instance with the given answer and parameter value, if
    /// one exists. Every problem provides these at least for the smallest
    /// parameter values that admit each answer.
    fn canonical(&self, answer: bool, param: u64) -> Option<Self::Instance>;

    /// Largest parameter value at which diminishers are allowed to give up.
    /// Above it, every diminisher must strictly decrease the parameter.
    fn floor(&self) -> u64 {
        0
    }

    /// Draw a random instance satisfying the problem's diminisher guards.
    fn generate(&self, rng: &mut SeededRng, caps: &Caps) -> Result<Self::Instance>;

    /// Whether `inst` satisfies the generator guards.
    fn admissible(&self, _inst: &Self::Instance) -> bool {
        true
    }

    /// Strictly smaller candidates used to minimize counterexamples.
    fn shrink(&self, _inst: &Self::Instance) -> Vec<Self::Instance> {
        Vec::new()
    }

    /// Canonical instance with the given answer and the smallest parameter
    /// value below `below`.
    fn trivial(&self, answer: bool, below: u64) -> Option<Self::Instance> {
        (0..below.min(4)).find_map(|p| self.canonical(answer, p))
    }
}

/// Result of one diminisher application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Applied<I> {
    pub instance: I,
    /// Number of branch instances that went into the composition (0 for
    /// direct decisions).
    pub branches: usize,
    /// Set when the input was at or below the problem's floor and was
    /// returned unchanged.
    pub floor: bool,
}

impl<I> Applied<I> {
    pub fn new(instance: I, branches: usize) -> Self {
        Applied {
            instance,
            branches,
            floor: false,
        }
    }

    pub fn at_floor(instance: I) -> Self {
        Applied {
            instance,
            branches: 0,
            floor: true,
        }
    }
}
