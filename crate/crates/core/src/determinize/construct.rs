use std::collections::BTreeSet;

use super::{decompose_nfa, extract_semilinear, nonunary_restriction, normalize_offsets_compact};
use crate::alphabet::{Alphabet, Letter, Word};
use crate::automata::{complete, minimize, product_union, subset_construct, Dfa, Nfa, StateId};
use crate::error::{Error, Result};
use crate::parikh::{
    canonical_word, independent_indices, rotate_to_letter, shifted_word, LinearSet, ParikhVector,
    SemilinearRep,
};
use crate::unary::unary_nfa_to_dfa;

/// Words for one linear part: the entry word `w_{i,0}` and one loop word per
/// generator, loop words starting with pairwise distinct letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopAutomatonPlan {
    pub index: usize,
    pub entry_word: Word,
    pub loop_words: Vec<Word>,
    pub chosen_letters: Vec<Letter>,
}

/// `entry = f(x)·g(offset − x)`; loop `j` is generator `j` rotated to start
/// with letter `t_j`, the `t_j` chosen by [`independent_indices`].
pub fn build_loop_plan(index: usize, z: &LinearSet, x: &ParikhVector) -> Result<LoopAutomatonPlan> {
    if !z.is_independent() {
        return Err(Error::Precondition(format!("generators of {z} are dependent")));
    }
    if x.is_unary() {
        return Err(Error::Precondition(format!("predecessor {x} is unary")));
    }
    let rest = z
        .offset()
        .checked_sub(x)
        .ok_or_else(|| Error::Precondition(format!("{x} is not below the offset {}", z.offset())))?;
    let mut entry_word = shifted_word(x);
    entry_word.extend(canonical_word(&rest));
    let chosen_letters = independent_indices(z.generators())?;
    let loop_words = z
        .generators()
        .iter()
        .zip(&chosen_letters)
        .map(|(g, &t)| rotate_to_letter(g, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(LoopAutomatonPlan {
        index,
        entry_word,
        loop_words,
        chosen_letters,
    })
}

/// Partial trie DFA for a prefix-free set of nonempty words, together with
/// the accepting state of each word (in input order).
fn prefix_trie(alphabet: &Alphabet, words: &[Word]) -> Result<(Dfa, Vec<StateId>)> {
    let mut sorted: Vec<&Word> = words.iter().collect();
    sorted.sort();
    sorted.dedup();
    if sorted.first().is_some_and(|w| w.is_empty()) {
        return Err(Error::InvalidInput("the empty word cannot be in a prefix code".into()));
    }
    for pair in sorted.windows(2) {
        if pair[1].starts_with(pair[0]) {
            return Err(Error::NotPrefixFree(
                alphabet.format_word(pair[0]),
                alphabet.format_word(pair[1]),
            ));
        }
    }
    for w in words {
        alphabet.check_word(w)?;
    }
    let mut dfa = Dfa::new(alphabet.clone(), 1);
    dfa.set_label(0, "q_ε");
    let mut leaves = Vec::with_capacity(words.len());
    for w in words {
        let mut q = dfa.initial();
        for (k, &x) in w.iter().enumerate() {
            q = match dfa.next(q, x) {
                Some(p) => p,
                None => {
                    let p = dfa.add_state(format!("q_{}", alphabet.format_word(&w[..=k])));
                    dfa.set_transition(q, x, p)?;
                    p
                }
            };
        }
        dfa.set_final(q, true);
        leaves.push(q);
    }
    Ok((dfa, leaves))
}

/// The partial DFA `A_W` with one state per prefix of `W`.
pub fn build_prefix_dfa(alphabet: &Alphabet, words: &[Word]) -> Result<Dfa> {
    prefix_trie(alphabet, words).map(|(dfa, _)| dfa)
}

/// Partial DFA accepting `{g(y) : y ∈ Y}`: the grid automaton restricted to
/// states that are reachable and can still reach a final state.
pub fn canonical_word_dfa(alphabet: &Alphabet, ys: &BTreeSet<ParikhVector>) -> Dfa {
    let mut dfa = Dfa::new(alphabet.clone(), 1);
    dfa.set_label(0, format!("q_{}", ParikhVector::zero(alphabet.len())));
    for y in ys {
        let mut q = dfa.initial();
        let mut v = ParikhVector::zero(alphabet.len());
        for x in canonical_word(y) {
            v.increment(x);
            q = match dfa.next(q, x) {
                Some(p) => p,
                None => {
                    let p = dfa.add_state(format!("q_{v}"));
                    dfa.set_transition(q, x, p).expect("fresh state");
                    p
                }
            };
        }
        dfa.set_final(q, true);
    }
    dfa
}

/// Intermediate objects of the nonunary construction, kept for reporting.
#[derive(Clone, Debug)]
pub struct NonunaryConstruction {
    pub rep: SemilinearRep,
    pub normalized: SemilinearRep,
    pub plans: Vec<LoopAutomatonPlan>,
    /// `A'`: prefix trie of entry words with the loop automata merged in.
    pub linear_part: Dfa,
    /// `A''`: accepts the canonical words of `Y`.
    pub finite_part: Dfa,
    pub result: Dfa,
}

/// Parikh-equivalent complete DFA for an automaton accepting no unary word.
pub fn nonunary_to_dfa(a: &Nfa) -> Result<Dfa> {
    nonunary_construction(a).map(|c| c.result)
}

pub fn nonunary_construction(a: &Nfa) -> Result<NonunaryConstruction> {
    let parts = decompose_nfa(a);
    if let Some(i) = parts.unary_parts.iter().position(|p| !p.is_empty()) {
        return Err(Error::Precondition(format!(
            "the language contains words over `{}` alone",
            a.alphabet().name(i)
        )));
    }
    nonunary_part_construction(a)
}

/// Parikh-equivalent complete DFA for the nonunary part of `L(a)`.
pub fn nonunary_part_dfa(a: &Nfa) -> Result<Dfa> {
    nonunary_part_construction(a).map(|c| c.result)
}

/// `a` trimmed, or its minimal DFA if that has fewer states. Extraction cost
/// grows with the number of cycles, and automata built from grammars often
/// shrink a lot.
fn smallest_equivalent(a: &Nfa) -> Nfa {
    let t = a.trim();
    let d = minimize(&subset_construct(&t)).to_nfa().trim();
    if d.num_states() < t.num_states() {
        d
    } else {
        t
    }
}

/// The nonunary construction applied to the nonunary part of `L(a)`, whose
/// image is read off the image of `a` itself rather than off the larger
/// decomposed automaton.
pub fn nonunary_part_construction(a: &Nfa) -> Result<NonunaryConstruction> {
    let alphabet = a.alphabet();
    let rep = if decompose_nfa(a).nonunary.is_empty() {
        SemilinearRep::empty(alphabet.len())
    } else {
        nonunary_restriction(&extract_semilinear(&smallest_equivalent(a))?)
    };
    let normalized = normalize_offsets_compact(&rep)?;
    let plans = normalized
        .linear
        .iter()
        .map(|(&i, z)| {
            let x = normalized.pred(i).expect("normalized rep has all preds");
            build_loop_plan(i, z, x)
        })
        .collect::<Result<Vec<_>>>()?;

    let entries: Vec<Word> = plans.iter().map(|p| p.entry_word.clone()).collect();
    let (mut linear_part, leaves) = prefix_trie(alphabet, &entries)?;
    for (plan, &q) in plans.iter().zip(&leaves) {
        for (j, w) in plan.loop_words.iter().enumerate() {
            let mut cur = q;
            for (k, &x) in w.iter().enumerate() {
                let next = if k + 1 == w.len() {
                    q
                } else {
                    linear_part.add_state(format!("B{}.{}.{}", plan.index, j + 1, k + 1))
                };
                linear_part.set_transition(cur, x, next)?;
                cur = next;
            }
        }
    }
    let finite_part = canonical_word_dfa(alphabet, &normalized.finite);
    let result = product_union(&complete(&linear_part), &complete(&finite_part))?;
    Ok(NonunaryConstruction {
        rep,
        normalized,
        plans,
        linear_part,
        finite_part,
        result,
    })
}

/// Joins unary DFAs `D_i` (each over the one-letter alphabet `{a_i}`) into
/// one DFA over `alphabet`: a fresh start `q_s` branches on the first letter
/// into a copy of `D_i`, and is final iff `accepts_empty`.
pub fn join_unary_dfas(alphabet: &Alphabet, parts: &[Dfa], accepts_empty: bool) -> Dfa {
    assert_eq!(parts.len(), alphabet.len());
    let mut out = Dfa::new(alphabet.clone(), 1);
    out.set_label(0, "q_s");
    out.set_final(0, accepts_empty);
    for (i, d) in parts.iter().enumerate() {
        let base = out.num_states();
        for q in 0..d.num_states() {
            let id = out.add_state(format!("{}:{}", alphabet.name(i), d.label(q)));
            out.set_final(id, d.is_final(q));
        }
        for (q, _, p) in d.transitions() {
            out.set_transition(base + q, i, base + p).expect("copied transition");
        }
        if let Some(p) = d.next(d.initial(), 0) {
            out.set_transition(0, i, base + p).expect("one edge per letter");
        }
    }
    out.reachable_part()
}

/// Parikh-equivalent complete DFA for an arbitrary NFA: unary parts through
/// unary determinization, the nonunary part through [`nonunary_to_dfa`],
/// joined by a product.
pub fn nfa_to_parikh_dfa(a: &Nfa) -> Result<Dfa> {
    let parts = decompose_nfa(a);
    let unary = parts
        .unary_parts
        .iter()
        .enumerate()
        .map(|(i, p)| unary_nfa_to_dfa(&p.project_to_letter(i)?))
        .collect::<Result<Vec<_>>>()?;
    let eps = a.accepts(&[])?;
    let a_u = join_unary_dfas(a.alphabet(), &unary, eps);
    let a_non = nonunary_part_dfa(a)?;
    product_union(&complete(&a_u), &a_non)
}
