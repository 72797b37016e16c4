use std::collections::{BTreeSet, HashSet};

use super::{parikh_vector, ParikhVector};
use crate::alphabet::{words_up_to, Letter};
use crate::automata::{Dfa, Nfa, StateId};

/// Anything with a decidable membership problem over an indexed alphabet.
pub trait ParikhSource {
    fn alphabet_size(&self) -> usize;

    /// Membership of a word whose letters are all in range.
    fn accepts_word(&self, word: &[Letter]) -> bool;

    /// `{ψ(w) : w accepted, |w| ≤ bound}` computed without enumerating words.
    fn walk_image(&self, bound: usize) -> BTreeSet<ParikhVector>;
}

/// `{ψ(w) : w ∈ L(src), |w| ≤ bound}` by a walk over the source's own
/// structure (states and Parikh vectors, or derivations).
pub fn parikh_image_bounded<S: ParikhSource + ?Sized>(src: &S, bound: usize) -> BTreeSet<ParikhVector> {
    src.walk_image(bound)
}

/// Same set as [`parikh_image_bounded`], by testing every word of length at
/// most `bound`. Words whose image is already known are skipped.
pub fn parikh_image_by_enumeration<S: ParikhSource + ?Sized>(
    src: &S,
    bound: usize,
) -> BTreeSet<ParikhVector> {
    let m = src.alphabet_size();
    let mut out = BTreeSet::new();
    for w in words_up_to(m, bound) {
        let v = parikh_vector(m, &w);
        if !out.contains(&v) && src.accepts_word(&w) {
            out.insert(v);
        }
    }
    out
}

/// Level-by-level walk over `(state, ψ(prefix))` pairs of a one-way automaton.
pub(crate) fn walk_one_way<I>(
    m: usize,
    initial: StateId,
    bound: usize,
    successors: impl Fn(StateId, Letter) -> I,
    is_final: impl Fn(StateId) -> bool,
) -> BTreeSet<ParikhVector>
where
    I: IntoIterator<Item = StateId>,
{
    let mut out = BTreeSet::new();
    let mut level: HashSet<(StateId, ParikhVector)> = HashSet::new();
    level.insert((initial, ParikhVector::zero(m)));
    for len in 0..=bound {
        for (q, v) in &level {
            if is_final(*q) {
                out.insert(v.clone());
            }
        }
        if len == bound {
            break;
        }
        let mut next = HashSet::with_capacity(level.len());
        for (q, v) in &level {
            for a in 0..m {
                for p in successors(*q, a) {
                    let mut w = v.clone();
                    w.increment(a);
                    next.insert((p, w));
                }
            }
        }
        level = next;
    }
    out
}

impl ParikhSource for Nfa {
    fn alphabet_size(&self) -> usize {
        self.alphabet().len()
    }

    fn accepts_word(&self, word: &[Letter]) -> bool {
        self.accepts(word).expect("letters in range")
    }

    fn walk_image(&self, bound: usize) -> BTreeSet<ParikhVector> {
        walk_one_way(
            self.alphabet().len(),
            self.initial(),
            bound,
            |q, a| self.successors(q, a).iter().copied(),
            |q| self.is_final(q),
        )
    }
}

impl ParikhSource for Dfa {
    fn alphabet_size(&self) -> usize {
        self.alphabet().len()
    }

    fn accepts_word(&self, word: &[Letter]) -> bool {
        self.accepts(word).expect("letters in range")
    }

    fn walk_image(&self, bound: usize) -> BTreeSet<ParikhVector> {
        walk_one_way(
            self.alphabet().len(),
            self.initial(),
            bound,
            |q, a| self.next(q, a),
            |q| self.is_final(q),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn pv(c: &[u64]) -> ParikhVector {
        ParikhVector::from_slice(c)
    }

    fn words_nfa(words: &[&[Letter]]) -> Nfa {
        let mut nfa = Nfa::new(Alphabet::standard(2), 1);
        for w in words {
            let mut q = 0;
            for &a in *w {
                let p = nfa.add_state("");
                nfa.add_transition(q, a, p);
                q = p;
            }
            nfa.set_final(q, true);
        }
        nfa
    }

    #[test]
    fn empty_language_has_empty_image() {
        let nfa = Nfa::new(Alphabet::standard(2), 1);
        assert!(parikh_image_bounded(&nfa, 5).is_empty());
        assert!(parikh_image_by_enumeration(&nfa, 5).is_empty());
    }

    #[test]
    fn permuted_words_collapse() {
        let nfa = words_nfa(&[&[0, 1], &[1, 0]]);
        let expected = BTreeSet::from([pv(&[1, 1])]);
        assert_eq!(parikh_image_bounded(&nfa, 2), expected);
        assert_eq!(parikh_image_by_enumeration(&nfa, 2), expected);
        assert!(parikh_image_bounded(&nfa, 1).is_empty());
    }

    #[test]
    fn routes_agree_on_a_cyclic_automaton() {
        // (ab|b)* a
        let mut nfa = Nfa::new(Alphabet::standard(2), 3);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(1, 1, 0);
        nfa.add_transition(0, 1, 0);
        nfa.add_transition(0, 0, 2);
        nfa.set_final(2, true);
        for b in 0..8 {
            assert_eq!(parikh_image_bounded(&nfa, b), parikh_image_by_enumeration(&nfa, b));
        }
        let dfa = crate::automata::subset_construct(&nfa);
        assert_eq!(parikh_image_bounded(&dfa, 8), parikh_image_bounded(&nfa, 8));
    }
}
