//! Dual-kernel higher-order-logic proof toolkit.
//!
//! The crate is organised in layers:
//!
//! * [`syntax`] — polymorphic simple types, typed lambda terms, alpha
//!   equivalence and capture-avoiding substitution. No notion of
//!   theoremhood lives here.
//! * [`kernel`] — the trusted core: sealed [`kernel::Theorem`] values,
//!   the primitive inference rules (equality-only in minimal mode, plus
//!   implication/universal-quantification rules in extended mode),
//!   definitional mechanisms, and step-trace recording.
//! * [`bootstrap`] — the logical connectives defined on top of each
//!   kernel mode, the standard derived rules, and the shared benchmark
//!   corpus.
//! * [`article`] — reader, writer and replay VM for line-based proof
//!   article files, with an extension dialect for the extended rules.
//! * [`lp`] — translation of kernel proofs into a lambda-Pi-modulo
//!   proof language and a minimal type checker that validates the
//!   output.
//!
//! The crate is `no_std` (with `alloc`); file IO, compression and the
//! CLI live in the companion `holkit` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod article;
pub mod bootstrap;
pub mod kernel;
pub mod lp;
pub mod syntax;
