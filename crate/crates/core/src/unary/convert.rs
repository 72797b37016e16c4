use super::chrobak::{chrobak_normal_form, ChrobakNf};
use super::periodic::require_unary;
use crate::automata::{minimize, Dfa, Nfa};
use crate::error::Result;
use crate::twoway::{dfa_to_2dfa, Move, Symbol, TwoWayDfa};

/// Complete DFA from the normal form: the path followed by one cycle whose
/// length is the lcm of the cycle lengths.
pub fn nf_to_dfa(nf: &ChrobakNf, alphabet: &crate::alphabet::Alphabet) -> Dfa {
    let s = nf.tail_len();
    let l = nf.cycle_lcm();
    let mut d = Dfa::new(alphabet.clone(), s + l);
    for i in 0..s {
        d.set_label(i, format!("p{i}"));
        d.set_final(i, nf.path[i]);
        d.set_transition(i, 0, i + 1).expect("fresh");
    }
    for k in 0..l {
        d.set_label(s + k, format!("c{k}"));
        d.set_final(s + k, nf.contains(s + k));
        d.set_transition(s + k, 0, s + (k + 1) % l).expect("fresh");
    }
    d
}

pub fn unary_nfa_to_dfa(a: &Nfa) -> Result<Dfa> {
    require_unary(a)?;
    Ok(nf_to_dfa(&chrobak_normal_form(a)?, a.alphabet()))
}

/// Halting 2DFA from the normal form, with `s + r + 2` states.
///
/// A first sweep to the right walks the path; inputs shorter than `s` are
/// decided at `⊣` from the path flags. Longer inputs are then swept once per
/// cycle, alternating direction, counting the length modulo the cycle
/// length; the sweep that ends on an accepting residue enters `q_f`.
pub fn nf_to_2dfa(nf: &ChrobakNf, alphabet: &crate::alphabet::Alphabet) -> TwoWayDfa {
    let s = nf.tail_len();
    let r = nf.cycle_states();
    let run = s;
    let accept = s + r + 1;
    let mut t = TwoWayDfa::new(alphabet.clone(), s + r + 2);
    t.set_label(run, "run");
    t.set_label(accept, "q_f");
    t.set_initial(if s > 0 { 0 } else { run });
    let a = Symbol::Letter(0);
    for i in 0..s {
        t.set_label(i, format!("p{i}"));
        let next = if i + 1 < s { i + 1 } else { run };
        t.set_transition(i, a, next, Move::R).expect("fresh");
        if nf.path[i] {
            t.set_transition(i, Symbol::RightEnd, accept, Move::S).expect("fresh");
        }
    }
    t.set_transition(run, a, run, Move::R).expect("fresh");

    let mut starts = Vec::with_capacity(nf.cycles.len());
    let mut base = s + 1;
    for cycle in &nf.cycles {
        starts.push(base);
        base += cycle.length;
    }
    if let Some(&first) = starts.first() {
        t.set_transition(run, Symbol::RightEnd, first, Move::L).expect("fresh");
    }
    for (j, cycle) in nf.cycles.iter().enumerate() {
        let leftward = j % 2 == 0;
        let (dir, back, far) = if leftward {
            (Move::L, Move::R, Symbol::LeftEnd)
        } else {
            (Move::R, Move::L, Symbol::RightEnd)
        };
        let c = cycle.length;
        for k in 0..c {
            let q = starts[j] + k;
            t.set_label(q, format!("c{}.{k}", j + 1));
            t.set_transition(q, a, starts[j] + (k + 1) % c, dir).expect("fresh");
            if cycle.accepting[k] {
                t.set_transition(q, far, accept, Move::S).expect("fresh");
            } else if let Some(&next) = starts.get(j + 1) {
                t.set_transition(q, far, next, back).expect("fresh");
            }
        }
    }
    t
}

/// Unary NFA to halting 2DFA with at most `n² + 1` states.
///
/// Uses the normal-form machine; when that exceeds `n² + 1` (one-state
/// inputs, where even `s + r + 2` is too many) the lifted trimmed minimal
/// DFA is used instead if it is smaller.
pub fn unary_nfa_to_2dfa(a: &Nfa) -> Result<TwoWayDfa> {
    require_unary(a)?;
    let nf = chrobak_normal_form(a)?;
    let sweep = nf_to_2dfa(&nf, a.alphabet());
    let n = a.num_states();
    if sweep.num_states() <= n * n + 1 {
        return Ok(sweep);
    }
    let lifted = dfa_to_2dfa(&minimize(&nf_to_dfa(&nf, a.alphabet())).trim());
    Ok(if lifted.num_states() < sweep.num_states() {
        lifted
    } else {
        sweep
    })
}
