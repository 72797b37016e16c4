//! Conversions of finite automata and Chomsky-normal-form grammars into
//! Parikh-equivalent one-way and two-way deterministic automata, together
//! with the bounded Parikh-image oracle used to check them.

pub mod alphabet;
pub mod automata;
pub mod bounds;
pub mod error;
pub mod parikh;

pub use alphabet::{Alphabet, Letter, Word};
pub use automata::{complete, minimize, product_union, subset_construct, Dfa, Nfa, StateId};
pub use error::{Error, Result};
pub use parikh::{parikh_image_bounded, parikh_vector, LinearSet, ParikhVector, SemilinearRep};
pub mod determinize;
pub mod fixtures;
pub mod grammar;
pub mod twoway;
pub mod unary;
