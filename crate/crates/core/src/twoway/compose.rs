use super::{Move, Symbol, TwoWayDfa};
use crate::alphabet::{Alphabet, Letter};
use crate::automata::{Dfa, Nfa, StateId};
use crate::determinize::{decompose_nfa, nonunary_part_dfa};
use crate::error::{Error, Result};
use crate::unary::unary_nfa_to_2dfa;

fn symbols(m: usize) -> impl Iterator<Item = Symbol> {
    (0..m)
        .map(Symbol::Letter)
        .chain([Symbol::LeftEnd, Symbol::RightEnd])
}

/// One-way DFA read left to right, plus an accepting state entered from
/// final states on `⊣`. Has `|d| + 1` states and halts on every input.
pub fn dfa_to_2dfa(d: &Dfa) -> TwoWayDfa {
    let n = d.num_states();
    let mut t = TwoWayDfa::new(d.alphabet().clone(), n + 1);
    t.set_initial(d.initial());
    t.set_label(n, "q_f");
    for q in 0..n {
        t.set_label(q, d.label(q));
        if d.is_final(q) {
            t.set_transition(q, Symbol::RightEnd, n, Move::S)
                .expect("fresh transition");
        }
    }
    for (q, a, p) in d.transitions() {
        t.set_transition(q, Symbol::Letter(a), p, Move::R)
            .expect("fresh transition");
    }
    t
}

/// Runs halting machines one after another and accepts as soon as one does.
///
/// Accepting transitions of all but the last machine are redirected to the
/// accepting state of the last one. The accepting state of machine `i`
/// becomes a rewind state: it takes over every undefined transition of
/// machine `i` (without moving), walks left to `⊢`, and steps right into the
/// initial state of machine `i + 1`. The result has `Σ n_i` states.
pub fn sequential_union(ms: &[TwoWayDfa]) -> Result<TwoWayDfa> {
    let Some(last) = ms.last() else {
        return Err(Error::InvalidInput("sequential union of no machines".into()));
    };
    let alphabet = last.alphabet().clone();
    if ms.iter().any(|t| t.alphabet() != &alphabet) {
        return Err(Error::AlphabetMismatch);
    }
    let m = alphabet.len();
    let mut offsets = Vec::with_capacity(ms.len());
    let mut total = 0;
    for t in ms {
        offsets.push(total);
        total += t.num_states();
    }
    let k = ms.len() - 1;
    let accept = offsets[k] + last.accept_state();
    let mut out = TwoWayDfa::new(alphabet, total);
    out.set_accept_state(accept)?;
    let target = |i: usize, p: StateId| {
        if p == ms[i].accept_state() {
            accept
        } else {
            offsets[i] + p
        }
    };
    out.set_initial(target(0, ms[0].initial()));
    for (i, t) in ms.iter().enumerate() {
        for q in 0..t.num_states() {
            out.set_label(offsets[i] + q, format!("{}:{}", i, t.label(q)));
        }
        let rewind = offsets[i] + t.accept_state();
        for q in (0..t.num_states()).filter(|&q| q != t.accept_state()) {
            for sym in symbols(m) {
                match t.transition(q, sym) {
                    Some((p, mv)) => out.set_transition(offsets[i] + q, sym, target(i, p), mv)?,
                    None if i < k => out.set_transition(offsets[i] + q, sym, rewind, Move::S)?,
                    None => {}
                }
            }
        }
        if i < k {
            for a in 0..m {
                out.set_transition(rewind, Symbol::Letter(a), rewind, Move::L)?;
            }
            out.set_transition(rewind, Symbol::RightEnd, rewind, Move::L)?;
            let next = target(i + 1, ms[i + 1].initial());
            out.set_transition(rewind, Symbol::LeftEnd, next, Move::R)?;
        }
    }
    Ok(out)
}

impl TwoWayDfa {
    /// Same machine over a larger alphabet; `letter_map[i]` is the index in
    /// `alphabet` of this machine's letter `i`. New letters have no
    /// transitions.
    pub fn embed(&self, alphabet: &Alphabet, letter_map: &[Letter]) -> TwoWayDfa {
        assert_eq!(letter_map.len(), self.alphabet().len());
        let mut out = TwoWayDfa::new(alphabet.clone(), self.num_states());
        out.set_accept_state(self.accept_state()).expect("no transitions yet");
        out.set_initial(self.initial());
        for q in 0..self.num_states() {
            out.set_label(q, self.label(q));
        }
        for (q, sym, p, mv) in self.transitions() {
            let sym = match sym {
                Symbol::Letter(a) => Symbol::Letter(letter_map[a]),
                other => other,
            };
            out.set_transition(q, sym, p, mv).expect("copied transition");
        }
        out
    }
}

/// Parikh-equivalent halting 2DFA: the nonunary part through the one-way
/// construction (lifted), each unary part through the unary two-way
/// construction, all joined by [`sequential_union`].
pub fn nfa_to_parikh_2dfa(a: &Nfa) -> Result<TwoWayDfa> {
    let parts = decompose_nfa(a);
    let mut machines = vec![dfa_to_2dfa(&nonunary_part_dfa(a)?)];
    for (i, p) in parts.unary_parts.iter().enumerate() {
        let unary = unary_nfa_to_2dfa(&p.project_to_letter(i)?)?;
        machines.push(unary.embed(a.alphabet(), &[i]));
    }
    sequential_union(&machines)
}
