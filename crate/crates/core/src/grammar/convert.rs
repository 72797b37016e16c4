use std::collections::{HashMap, VecDeque};

use super::cnf::{Cnfg, Rhs};
use super::decompose::decompose_cfg;
use crate::automata::{complete, product_union, Dfa, Nfa};
use crate::determinize::{join_unary_dfas, nonunary_part_dfa};
use crate::error::Result;
use crate::twoway::{dfa_to_2dfa, sequential_union, TwoWayDfa};
use crate::unary::{unary_nfa_to_2dfa, unary_nfa_to_dfa};

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    r
}

/// Largest state count [`cfg_to_parikh_nfa`] may produce for `h`
/// variables: the number of multisets of size at most `h + 1`.
pub fn multiset_bound(h: usize) -> u128 {
    binomial(2 * h as u64 + 1, h as u64)
}

type Multiset = Vec<u16>;

fn label(g: &Cnfg, m: &Multiset) -> String {
    let mut parts = Vec::new();
    for (v, &c) in m.iter().enumerate() {
        for _ in 0..c {
            parts.push(g.variables()[v].as_str());
        }
    }
    format!("{{{}}}", parts.join(","))
}

/// Parikh-equivalent NFA of a grammar, with states the multisets of
/// variables of size at most `h + 1` reachable from `{S}`.
///
/// A silent step replaces one `B` by `C, D` for `B → CD` while the size
/// stays within the bound; reading `a` removes one `B` with `B → a`;
/// `{S}` steps silently to `∅` under `S → ε`. `∅` accepts. Silent steps are
/// removed by closure and the result is trimmed.
pub fn cfg_to_parikh_nfa(g: &Cnfg) -> Nfa {
    let h = g.num_variables();
    let cap = h as u16 + 1;
    let mut binary: Vec<Vec<(usize, usize)>> = vec![Vec::new(); h];
    let mut unit: Vec<Vec<usize>> = vec![Vec::new(); h];
    for (b, r) in g.productions() {
        match r {
            Rhs::Pair(c, d) => binary[b].push((c, d)),
            Rhs::Letter(a) => unit[b].push(a),
            Rhs::Empty => {}
        }
    }
    let mut start: Multiset = vec![0; h];
    start[g.start()] = 1;
    let empty: Multiset = vec![0; h];

    let mut ids: HashMap<Multiset, usize> = HashMap::new();
    let mut sets: Vec<Multiset> = Vec::new();
    let mut silent: Vec<Vec<usize>> = Vec::new();
    let mut reads: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |ms: Multiset, sets: &mut Vec<Multiset>, queue: &mut VecDeque<usize>| -> usize {
        *ids.entry(ms.clone()).or_insert_with(|| {
            sets.push(ms);
            queue.push_back(sets.len() - 1);
            sets.len() - 1
        })
    };
    intern(start.clone(), &mut sets, &mut queue);
    while let Some(id) = queue.pop_front() {
        let ms = sets[id].clone();
        let size: u16 = ms.iter().sum();
        let mut s_out = Vec::new();
        let mut r_out = Vec::new();
        if ms == start && g.has_empty_production() {
            s_out.push(intern(empty.clone(), &mut sets, &mut queue));
        }
        for b in (0..h).filter(|&b| ms[b] > 0) {
            if size < cap {
                for &(c, d) in &binary[b] {
                    let mut next = ms.clone();
                    next[b] -= 1;
                    next[c] += 1;
                    next[d] += 1;
                    s_out.push(intern(next, &mut sets, &mut queue));
                }
            }
            for &a in &unit[b] {
                let mut next = ms.clone();
                next[b] -= 1;
                r_out.push((a, intern(next, &mut sets, &mut queue)));
            }
        }
        silent.resize(sets.len().max(silent.len()), Vec::new());
        reads.resize(sets.len().max(reads.len()), Vec::new());
        silent[id] = s_out;
        reads[id] = r_out;
    }
    let n = sets.len();
    silent.resize(n, Vec::new());
    reads.resize(n, Vec::new());

    let closure = |q: usize| -> Vec<usize> {
        let mut seen = vec![false; n];
        let mut stack = vec![q];
        let mut out = Vec::new();
        seen[q] = true;
        while let Some(p) = stack.pop() {
            out.push(p);
            for &r in &silent[p] {
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        out
    };
    let empty_id = ids.get(&empty).copied();
    let mut nfa = Nfa::new(g.terminals().clone(), n);
    for q in 0..n {
        nfa.set_label(q, label(g, &sets[q]));
        for k in closure(q) {
            if Some(k) == empty_id {
                nfa.set_final(q, true);
            }
            for &(a, p) in &reads[k] {
                nfa.add_transition(q, a, p);
            }
        }
    }
    nfa.trim()
}

/// Parikh-equivalent complete DFA of a grammar: unary parts through unary
/// determinization, the nonunary part through the nonunary construction,
/// joined by a product.
pub fn cfg_to_parikh_dfa(g: &Cnfg) -> Result<Dfa> {
    let parts = decompose_cfg(g);
    let unary = parts
        .unary_parts
        .iter()
        .enumerate()
        .map(|(i, gi)| unary_nfa_to_dfa(&cfg_to_parikh_nfa(gi).keep_only_letter(i).project_to_letter(i)?))
        .collect::<Result<Vec<_>>>()?;
    let a_u = join_unary_dfas(g.terminals(), &unary, g.has_empty_production());
    let a_non = nonunary_part_dfa(&cfg_to_parikh_nfa(g))?;
    product_union(&complete(&a_u), &a_non)
}

/// Parikh-equivalent halting 2DFA of a grammar: the nonunary DFA lifted,
/// followed by one unary 2DFA per letter.
pub fn cfg_to_parikh_2dfa(g: &Cnfg) -> Result<TwoWayDfa> {
    let parts = decompose_cfg(g);
    let mut machines = vec![dfa_to_2dfa(&nonunary_part_dfa(&cfg_to_parikh_nfa(g))?)];
    for (i, gi) in parts.unary_parts.iter().enumerate() {
        let unary = cfg_to_parikh_nfa(gi).keep_only_letter(i).project_to_letter(i)?;
        machines.push(unary_nfa_to_2dfa(&unary)?.embed(g.terminals(), &[i]));
    }
    sequential_union(&machines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parikh::{parikh_image_bounded, ParikhVector};
    use std::collections::BTreeSet;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(multiset_bound(2), 10);
        assert_eq!(multiset_bound(4), 126);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn square_of_a() {
        let g = Cnfg::from_rules(&["a"], "S -> A A; A -> a").unwrap();
        let a = cfg_to_parikh_nfa(&g);
        assert!(a.num_states() <= 10);
        let img = parikh_image_bounded(&a, 8);
        assert_eq!(img, BTreeSet::from([ParikhVector::from_slice(&[2])]));
    }

    #[test]
    fn empty_word_only() {
        let g = Cnfg::from_rules(&["a"], "S -> ε").unwrap();
        let a = cfg_to_parikh_nfa(&g);
        assert!(a.accepts(&[]).unwrap());
        assert_eq!(parikh_image_bounded(&a, 5).len(), 1);
    }

    #[test]
    fn mixed_small_language() {
        let g = Cnfg::from_rules(&["a", "b"], "S -> A B | a | b; A -> a; B -> b").unwrap();
        let want = parikh_image_bounded(&g, 6);
        assert_eq!(want.len(), 3);
        assert_eq!(parikh_image_bounded(&cfg_to_parikh_dfa(&g).unwrap(), 6), want);
        assert_eq!(parikh_image_bounded(&cfg_to_parikh_2dfa(&g).unwrap(), 6), want);
    }
}
