//! Contracts and combinators that are independent of any concrete problem.

mod combinator;
mod contract;
mod loops;
mod problem;
pub mod unary;
mod verify;

pub use combinator::{BranchCompose, Repeat, Transfer};
pub use contract::{
    check_branches, check_composition, check_kernel, checked_apply, BranchingRule, Composition,
    Diminisher, DiminisherKind, Factor, FnDiminisher, Kernel, KernelKind, Reduction,
};
pub use loops::{
    accelerated_solve, ceil_log, diminish_kernelize_loop, strong_loop, strong_round_length,
    AccelTrace, LoopTrace, RoundRecord,
};
pub use problem::{Applied, Caps, Problem};
pub use verify::{verify_diminisher, Counterexample, TransformReport, Verification};
