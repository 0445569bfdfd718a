//! Independent oracles used by the test suites.
//!
//! Everything here deliberately avoids the code paths it is used to
//! check: the de Bruijn model has its own substitution and reduction,
//! the truth-table evaluator interprets connectives semantically, and
//! the proof search is a tiny sequent calculus. None of it is used by
//! the library crates themselves.

pub mod debruijn;
pub mod gen;
pub mod search;
pub mod truthtable;

pub use debruijn::DbTerm;
pub use gen::Rng;
