//! Inputs shared by the benchmarks under `benches/`.

use parikh_core::fixtures::{random_nfa_corpus, random_unary_corpus};
use parikh_core::Nfa;

pub const SEED: u64 = 20240601;

/// Random NFAs with at most five states over two or three letters.
pub fn small_nfas() -> Vec<Nfa> {
    random_nfa_corpus(SEED, 20, 5)
}

/// Random unary NFAs with at most eight states.
pub fn unary_nfas() -> Vec<Nfa> {
    random_unary_corpus(SEED, 20, 8)
}
