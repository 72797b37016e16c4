//! Unary automata: exact length sets, Chrobak normal form, and conversions
//! to one-way and two-way deterministic automata.

mod chrobak;
mod convert;
mod periodic;

pub use chrobak::{chrobak_normal_form, ChrobakCycle, ChrobakNf, LCM_LIMIT};
pub use convert::{nf_to_2dfa, nf_to_dfa, unary_nfa_to_2dfa, unary_nfa_to_dfa};
pub use periodic::{unary_structure, UltimatelyPeriodicSet};
