#![no_std]
#![forbid(unsafe_code)]

//! Executable machinery for strict-kernelization lower bounds.
//!
//! The crate is organised around one idea: a *parameter diminisher* maps an
//! instance of a parameterized problem to an equivalent instance with a
//! strictly smaller parameter. Everything else is built around checking and
//! combining such maps.
//!
//! - [`framework`]: problem descriptors, contracts for diminishers, branching
//!   rules, compositions, kernels and reductions, the combinators that build
//!   diminishers out of them, the diminish/kernelize loops and the
//!   verification harness.
//! - [`graph`]: the annotated graph model, exact width parameters, exhaustive
//!   oracles and random generators.
//! - [`graph_dim`]: branching rules, compositions and diminishers for the
//!   graph problems, plus the Terminal Steiner Tree / Steiner Tree reductions.
//! - [`tm`]: nondeterministic single-tape Turing machines, the bounded-step
//!   acceptance oracle and both step-compression diminishers.
//! - [`setcover`]: Set Cover / Hitting Set instances, oracles, `k log n`
//!   parameter values and the halving diminishers.
//!
//! The crate only needs `alloc`; file IO and the command line live in the
//! `diminish` companion crate.

extern crate alloc;

pub mod error;
pub mod framework;
pub mod graph;
pub mod graph_dim;
pub mod rng;
pub mod setcover;
pub mod tm;

pub use error::{Error, Result};
pub use framework::{Applied, Caps, Problem};
