use std::collections::{BTreeSet, HashMap};

use super::{Dfa, Nfa, StateId};
use crate::error::{Error, Result};

fn subset_label(set: &[StateId]) -> String {
    let inner: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Classical subset construction restricted to reachable subsets. The result
/// is complete; the empty subset appears as a dead state when reachable.
pub fn subset_construct(nfa: &Nfa) -> Dfa {
    let m = nfa.alphabet().len();
    let start = vec![nfa.initial()];
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::from([(start.clone(), 0)]);
    let mut subsets = vec![start];
    let mut rows: Vec<Vec<StateId>> = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let mut row = Vec::with_capacity(m);
        for a in 0..m {
            let target: BTreeSet<StateId> = subsets[i]
                .iter()
                .flat_map(|&q| nfa.successors(q, a).iter().copied())
                .collect();
            let target: Vec<StateId> = target.into_iter().collect();
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(target.clone(), id);
                    subsets.push(target);
                    id
                }
            };
            row.push(id);
        }
        rows.push(row);
        i += 1;
    }
    let mut dfa = Dfa::new(nfa.alphabet().clone(), subsets.len());
    for (q, set) in subsets.iter().enumerate() {
        dfa.set_final(q, set.iter().any(|&s| nfa.is_final(s)));
        dfa.set_label(q, subset_label(set));
        for (a, &p) in rows[q].iter().enumerate() {
            dfa.set_transition(q, a, p).expect("fresh row");
        }
    }
    dfa
}

/// Adds one dead state iff some transition is missing.
pub fn complete(dfa: &Dfa) -> Dfa {
    if dfa.is_complete() {
        return dfa.clone();
    }
    let mut out = dfa.clone();
    let dead = out.add_state("dead");
    for q in 0..out.num_states() {
        for a in 0..out.alphabet().len() {
            if out.next(q, a).is_none() {
                out.set_transition(q, a, dead).expect("missing transition");
            }
        }
    }
    out
}

/// Product automaton accepting `L(a) ∪ L(b)`, restricted to reachable pairs.
///
/// Both inputs must be complete and share the alphabet. The full product has
/// `|a|·|b|` states; only reachable pairs are materialized.
pub fn product_union(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if !a.is_complete() || !b.is_complete() {
        return Err(Error::Incomplete);
    }
    let m = a.alphabet().len();
    let start = (a.initial(), b.initial());
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::from([(start, 0)]);
    let mut pairs = vec![start];
    let mut rows: Vec<Vec<StateId>> = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (p, q) = pairs[i];
        let mut row = Vec::with_capacity(m);
        for x in 0..m {
            let t = (a.next(p, x).unwrap(), b.next(q, x).unwrap());
            let id = *index.entry(t).or_insert_with(|| {
                pairs.push(t);
                pairs.len() - 1
            });
            row.push(id);
        }
        rows.push(row);
        i += 1;
    }
    let mut out = Dfa::new(a.alphabet().clone(), pairs.len());
    for (id, &(p, q)) in pairs.iter().enumerate() {
        out.set_final(id, a.is_final(p) || b.is_final(q));
        out.set_label(id, format!("({},{})", a.label(p), b.label(q)));
        for (x, &t) in rows[id].iter().enumerate() {
            out.set_transition(id, x, t).expect("fresh row");
        }
    }
    Ok(out)
}

/// Minimal complete DFA for `L(dfa)` by partition refinement, numbered in
/// breadth-first order from the initial state (letters in alphabet order).
pub fn minimize(dfa: &Dfa) -> Dfa {
    let d = complete(dfa).reachable_part();
    let n = d.num_states();
    let m = d.alphabet().len();
    let mut class: Vec<usize> = (0..n).map(|q| usize::from(d.is_final(q))).collect();
    let mut count = class.iter().copied().collect::<BTreeSet<_>>().len();
    loop {
        let mut sig_index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next = vec![0; n];
        for q in 0..n {
            let succ: Vec<usize> = (0..m).map(|a| class[d.next(q, a).unwrap()]).collect();
            let len = sig_index.len();
            next[q] = *sig_index.entry((class[q], succ)).or_insert(len);
        }
        let new_count = sig_index.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    // renumber classes in BFS order
    let mut order: Vec<usize> = Vec::with_capacity(count);
    let mut rep: Vec<StateId> = Vec::with_capacity(count);
    let mut number = vec![usize::MAX; count];
    number[class[d.initial()]] = 0;
    order.push(class[d.initial()]);
    rep.push(d.initial());
    let mut i = 0;
    while i < order.len() {
        let q = rep[i];
        for a in 0..m {
            let p = d.next(q, a).unwrap();
            if number[class[p]] == usize::MAX {
                number[class[p]] = order.len();
                order.push(class[p]);
                rep.push(p);
            }
        }
        i += 1;
    }
    let mut out = Dfa::new(d.alphabet().clone(), order.len());
    for (id, &q) in rep.iter().enumerate() {
        out.set_final(id, d.is_final(q));
        out.set_label(id, format!("m{id}"));
        for a in 0..m {
            let p = d.next(q, a).unwrap();
            out.set_transition(id, a, number[class[p]]).expect("fresh row");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{words_up_to, Alphabet};

    fn ends_in_a() -> Nfa {
        let mut n = Nfa::new(Alphabet::standard(2), 2);
        n.add_transition(0, 0, 0);
        n.add_transition(0, 1, 0);
        n.add_transition(0, 0, 1);
        n.set_final(1, true);
        n
    }

    #[test]
    fn subset_of_ends_in_a_has_two_subsets() {
        // {0} --a--> {0,1}, {0} --b--> {0}, {0,1} --a--> {0,1}, {0,1} --b--> {0}
        let d = subset_construct(&ends_in_a());
        assert_eq!(d.num_states(), 2);
        assert!(d.is_complete());
        assert_eq!(d.label(1), "{0,1}");
        assert!(d.is_final(1) && !d.is_final(0));
    }

    #[test]
    fn deterministic_input_gains_only_a_dead_state() {
        let mut n = Nfa::new(Alphabet::standard(2), 3);
        n.add_transition(0, 0, 1);
        n.add_transition(1, 1, 2);
        n.set_final(2, true);
        let d = subset_construct(&n);
        assert_eq!(d.num_states(), 4);
    }

    #[test]
    fn complete_prefix_tree_for_ab() {
        let mut d = Dfa::new(Alphabet::standard(2), 3);
        d.set_transition(0, 0, 1).unwrap();
        d.set_transition(1, 1, 2).unwrap();
        d.set_final(2, true);
        let c = complete(&d);
        assert_eq!(c.num_states(), 4);
        assert_eq!(complete(&c).num_states(), 4);
    }

    #[test]
    fn product_needs_complete_inputs() {
        let d = Dfa::new(Alphabet::standard(1), 1);
        assert!(matches!(product_union(&d, &d), Err(Error::Incomplete)));
        let other = complete(&Dfa::new(Alphabet::standard(2), 1));
        assert!(matches!(
            product_union(&complete(&d), &other),
            Err(Error::AlphabetMismatch)
        ));
    }

    #[test]
    fn product_of_a_star_and_b_star() {
        let ab = Alphabet::standard(2);
        let mut astar = Dfa::new(ab.clone(), 1);
        astar.set_transition(0, 0, 0).unwrap();
        astar.set_final(0, true);
        let mut bstar = Dfa::new(ab, 1);
        bstar.set_transition(0, 1, 0).unwrap();
        bstar.set_final(0, true);
        let (a, b) = (complete(&astar), complete(&bstar));
        let u = product_union(&a, &b).unwrap();
        assert!(u.num_states() <= a.num_states() * b.num_states());
        for w in words_up_to(2, 6) {
            let expect = w.iter().all(|&x| x == 0) || w.iter().all(|&x| x == 1);
            assert_eq!(u.accepts(&w).unwrap(), expect, "{w:?}");
        }
    }

    #[test]
    fn minimize_is_idempotent_on_small_example() {
        let d = minimize(&subset_construct(&ends_in_a()));
        assert_eq!(d.num_states(), 2);
        assert_eq!(minimize(&d), d);
    }
}
