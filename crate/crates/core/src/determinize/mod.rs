//! Parikh-equivalent determinization of one-way automata: decomposition into
//! unary and nonunary parts, semilinear extraction and offset normalization,
//! and the assembly of the deterministic automata.

mod construct;
mod decompose;
mod extract;
mod normalize;

pub use construct::{
    build_loop_plan, build_prefix_dfa, canonical_word_dfa, join_unary_dfas, nfa_to_parikh_dfa,
    nonunary_construction, nonunary_part_construction, nonunary_part_dfa, nonunary_to_dfa, LoopAutomatonPlan, NonunaryConstruction,
};
pub use decompose::{decompose_nfa, NfaDecomposition};
pub use extract::{extract_semilinear, extract_semilinear_with, nonunary_restriction, ExtractOptions};
pub use normalize::{least_unrolling, normalize_offsets, normalize_offsets_compact};
