use crate::automata::Nfa;

/// An automaton split into its nonunary part `A_0` and its unary parts
/// `A_1..A_m` (one per letter, still over the full alphabet).
#[derive(Clone, Debug)]
pub struct NfaDecomposition {
    pub nonunary: Nfa,
    pub unary_parts: Vec<Nfa>,
}

/// Splits `a` so that `L(a) = L(A_0) ∪ ⋃ L(A_i)`, with `L(A_0)` the
/// nonunary words of `L(a)` and `L(A_i) = L(a) ∩ a_i^*`.
///
/// `A_0` has a fresh initial state, `m` copies `[q,i]` of every state that
/// remember the first letter while the input stays unary, and the original
/// states, entered on the first letter that differs. It has `n(m+1)+1`
/// states; each `A_i` has `n`. Determinism is preserved.
pub fn decompose_nfa(a: &Nfa) -> NfaDecomposition {
    let n = a.num_states();
    let m = a.alphabet().len();
    let copy = |q: usize, i: usize| 1 + i * n + q;
    let orig = |q: usize| 1 + m * n + q;

    let mut a0 = Nfa::new(a.alphabet().clone(), n * (m + 1) + 1);
    a0.set_label(0, "init");
    for i in 0..m {
        let name = a.alphabet().name(i);
        for q in 0..n {
            a0.set_label(copy(q, i), format!("[{q},{name}]"));
        }
    }
    for q in 0..n {
        a0.set_label(orig(q), q.to_string());
        a0.set_final(orig(q), a.is_final(q));
    }
    for (q, x, p) in a.transitions() {
        a0.add_transition(orig(q), x, orig(p));
        if q == a.initial() {
            a0.add_transition(0, x, copy(p, x));
        }
        for i in 0..m {
            if i == x {
                a0.add_transition(copy(q, i), x, copy(p, i));
            } else {
                a0.add_transition(copy(q, i), x, orig(p));
            }
        }
    }
    let unary_parts = (0..m).map(|i| a.keep_only_letter(i)).collect();
    NfaDecomposition {
        nonunary: a0,
        unary_parts,
    }
}
