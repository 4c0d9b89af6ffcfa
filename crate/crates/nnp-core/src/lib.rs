//! Propositional nested answer-set programming (NASP) engine.
//!
//! The crate recognizes *normal nested programs* (NNPs): rules whose head is
//! a positive-Horn nested expression and whose body is an arbitrary nested
//! expression in negation normal form. It computes least models and answer
//! sets directly on the nested form through nested unit-resolution, and it
//! translates nested programs into strongly equivalent classical normal
//! programs.
//!
//! The library is `no_std` + `alloc`; everything here is pure computation
//! over immutable values. File formats, JSON output and the command line
//! front end live in the companion `nnp-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ast;
pub mod calculus;
pub mod classify;
pub mod delta;
pub mod semantics;
pub mod testkit;
#[cfg(test)]
pub(crate) mod testutil;
pub mod translate;

pub use ast::{Atom, Elementary, Literal, NestedExpr, OccurrenceHandle, Program, Rule, Symbols};
pub use semantics::Interpretation;
