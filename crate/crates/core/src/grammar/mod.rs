//! Grammars in Chomsky normal form: membership, decomposition into unary
//! and nonunary parts, and Parikh-equivalent automata.

mod cnf;
mod convert;
mod cyk;
mod decompose;
mod witness;

pub use cnf::{Cnfg, GrammarJson, Rhs};
pub use convert::{binomial, cfg_to_parikh_2dfa, cfg_to_parikh_dfa, cfg_to_parikh_nfa, multiset_bound};
pub use cyk::cyk_member;
pub use decompose::{decompose_cfg, CfgDecomposition};
pub use witness::witness_grammar;
