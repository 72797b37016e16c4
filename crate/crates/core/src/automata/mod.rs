//! One-way automata: representations, the classical constructions used by the
//! conversion pipelines, and serialization.
//!
//! States are dense indices `0..n`. Every state carries a provenance label
//! (for instance `[q,i]` or `q_u`) that the DOT export prints.

mod dfa;
pub(crate) mod dot;
mod json;
mod nfa;
mod ops;

pub use dfa::Dfa;
pub use json::{Automaton, AutomatonJson};
pub use nfa::Nfa;
pub use ops::{complete, minimize, product_union, subset_construct};

/// Dense state index.
pub type StateId = usize;
