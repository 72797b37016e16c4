use super::cnf::{Cnfg, Rhs};

/// A grammar split into a grammar `G_0` for its nonunary words and one
/// unary grammar `G_i` per letter for `L ∩ a_i^*`.
#[derive(Clone, Debug)]
pub struct CfgDecomposition {
    pub nonunary: Cnfg,
    pub unary_parts: Vec<Cnfg>,
}

/// `G_i` drops every `B → a_j` with `j ≠ i`. `G_0` has the start `S'` and a
/// copy `B_i` of each non-start variable, where `B_i` derives the words of
/// `B` containing `a_i`; `S'` guesses two distinct letters, one per side
/// of the first binary step.
pub fn decompose_cfg(g: &Cnfg) -> CfgDecomposition {
    let m = g.terminals().len();
    let h = g.num_variables();
    let s = g.start();
    let unary_parts = (0..m)
        .map(|i| {
            let prods = g
                .productions()
                .filter(|&(_, r)| !matches!(r, Rhs::Letter(a) if a != i));
            Cnfg::new(g.variables().to_vec(), g.terminals().clone(), s, prods).expect("subgrammar")
        })
        .collect();

    let others: Vec<usize> = (0..h).filter(|&b| b != s).collect();
    let mut slot = vec![usize::MAX; h];
    for (k, &b) in others.iter().enumerate() {
        slot[b] = k;
    }
    // S' is variable 0; B_i is 1 + slot(B) * m + i
    let sub = |b: usize, i: usize| 1 + slot[b] * m + i;
    let mut names = vec![format!("{}'", g.variables()[s])];
    for &b in &others {
        for i in 0..m {
            names.push(format!("{}_{}", g.variables()[b], g.terminals().name(i)));
        }
    }
    while names[1..].contains(&names[0]) {
        names[0].push('\'');
    }
    let mut prods = Vec::new();
    for (b, r) in g.productions() {
        match r {
            Rhs::Pair(c, d) if b == s => {
                for i in 0..m {
                    for j in (0..m).filter(|&j| j != i) {
                        prods.push((0, Rhs::Pair(sub(c, i), sub(d, j))));
                    }
                }
            }
            Rhs::Pair(c, d) => {
                for i in 0..m {
                    for j in 0..m {
                        prods.push((sub(b, i), Rhs::Pair(sub(c, i), sub(d, j))));
                        prods.push((sub(b, i), Rhs::Pair(sub(c, j), sub(d, i))));
                    }
                }
            }
            Rhs::Letter(a) if b != s => prods.push((sub(b, a), Rhs::Letter(a))),
            _ => {}
        }
    }
    let nonunary = Cnfg::new(names, g.terminals().clone(), 0, prods).expect("CNF by construction");
    CfgDecomposition { nonunary, unary_parts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::words_up_to;
    use crate::grammar::cyk_member;

    #[test]
    fn small_mixed_language() {
        let g = Cnfg::from_rules(&["a", "b"], "S -> A B | a | b; A -> a; B -> b").unwrap();
        let d = decompose_cfg(&g);
        assert_eq!(d.nonunary.num_variables(), 2 * 3 - 2 + 1);
        for w in words_up_to(2, 3) {
            assert_eq!(cyk_member(&d.nonunary, &w), w == [0, 1]);
            assert_eq!(cyk_member(&d.unary_parts[0], &w), w == [0]);
            assert_eq!(cyk_member(&d.unary_parts[1], &w), w == [1]);
        }
    }
}
