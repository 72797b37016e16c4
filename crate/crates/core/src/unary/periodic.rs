use serde::{Deserialize, Serialize};

use crate::automata::{subset_construct, Nfa};
use crate::error::{Error, Result};

/// A set of naturals given by membership below a threshold `t` and by
/// residues modulo a period above it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UltimatelyPeriodicSet {
    /// Membership of `0..t`.
    pub tail: Vec<bool>,
    pub period: usize,
    /// Membership of `ℓ ≥ t`, indexed by `ℓ mod period`.
    pub residues: Vec<bool>,
}

impl UltimatelyPeriodicSet {
    pub fn threshold(&self) -> usize {
        self.tail.len()
    }

    pub fn contains(&self, len: usize) -> bool {
        match self.tail.get(len) {
            Some(&b) => b,
            None => self.residues[len % self.period],
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.tail.iter().chain(&self.residues).any(|&b| b)
    }
}

/// Fails unless `a` is over a one-letter alphabet.
pub(crate) fn require_unary(a: &Nfa) -> Result<()> {
    if a.alphabet().len() != 1 {
        return Err(Error::NotUnary(format!(
            "alphabet has {} letters",
            a.alphabet().len()
        )));
    }
    Ok(())
}

/// Exact length set of a unary automaton, read off the lasso its subset
/// automaton forms, with least period and then least threshold.
pub fn unary_structure(a: &Nfa) -> Result<UltimatelyPeriodicSet> {
    require_unary(a)?;
    let d = subset_construct(a);
    let mut first_visit = vec![usize::MAX; d.num_states()];
    let mut seq = Vec::new();
    let mut q = d.initial();
    while first_visit[q] == usize::MAX {
        first_visit[q] = seq.len();
        seq.push(q);
        q = d.next(q, 0).expect("subset automaton is complete");
    }
    let t = first_visit[q];
    let period = seq.len() - t;
    let mut tail: Vec<bool> = seq[..t].iter().map(|&p| d.is_final(p)).collect();
    let mut residues = vec![false; period];
    for (len, &p) in seq.iter().enumerate().skip(t) {
        residues[len % period] = d.is_final(p);
    }
    let least = (1..=period)
        .find(|&p| period % p == 0 && (0..period).all(|r| residues[r] == residues[r % p]))
        .expect("the period itself works");
    residues.truncate(least);
    while let Some(&last) = tail.last() {
        if last != residues[(tail.len() - 1) % least] {
            break;
        }
        tail.pop();
    }
    Ok(UltimatelyPeriodicSet {
        tail,
        period: least,
        residues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::fixtures::unary_cycles as cycles_nfa;

    #[test]
    fn even_lengths() {
        let u = unary_structure(&cycles_nfa(&[2])).unwrap();
        assert_eq!(u.period, 2);
        for len in 0..20 {
            assert_eq!(u.contains(len), len % 2 == 0);
        }
    }

    #[test]
    fn multiples_of_two_or_three() {
        let a = cycles_nfa(&[2, 3]);
        let u = unary_structure(&a).unwrap();
        for len in 0..=40 {
            assert_eq!(u.contains(len), a.accepts(&vec![0; len]).unwrap(), "{len}");
        }
    }

    #[test]
    fn empty_language() {
        let a = Nfa::new(Alphabet::standard(1), 2);
        let u = unary_structure(&a).unwrap();
        assert!(u.is_empty());
        assert!((0..10).all(|l| !u.contains(l)));
    }

    #[test]
    fn lasso_is_made_canonical() {
        // lengths ≥ 1 through a 2-cycle and a 3-cycle: period 1 from 1 on
        let mut a = Nfa::new(Alphabet::standard(1), 6);
        for (p, q) in [(0, 1), (1, 2), (2, 1), (0, 3), (3, 4), (4, 5), (5, 3)] {
            a.add_transition(p, 0, q);
        }
        for q in 1..6 {
            a.set_final(q, true);
        }
        let u = unary_structure(&a).unwrap();
        assert_eq!((u.threshold(), u.period), (1, 1));
    }

    #[test]
    fn binary_alphabet_is_refused() {
        let a = Nfa::new(Alphabet::standard(2), 1);
        assert!(matches!(unary_structure(&a), Err(Error::NotUnary(_))));
    }
}
