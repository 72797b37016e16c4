//! Two-way deterministic automata: simulation, the one-way lift, sequential
//! union of halting machines, and the Parikh-equivalent two-way pipeline.

mod behavior;
mod compose;
mod io;
mod machine;

pub use compose::{dfa_to_2dfa, nfa_to_parikh_2dfa, sequential_union};
pub use io::TwoWayJson;
pub use machine::{Move, RunOutcome, Symbol, TwoWayDfa, Verdict};
