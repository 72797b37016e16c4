use std::collections::{BTreeSet, VecDeque};

use super::StateId;
use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// Nondeterministic finite automaton without ε-transitions.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    initial: StateId,
    finals: Vec<bool>,
    // delta[state][letter] is sorted and duplicate-free
    delta: Vec<Vec<Vec<StateId>>>,
    labels: Vec<String>,
}

impl PartialEq for Nfa {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.initial == other.initial
            && self.finals == other.finals
            && self.delta == other.delta
    }
}

impl Eq for Nfa {}

impl Nfa {
    /// An automaton with `states` states, initial state 0, no transitions and
    /// no final states.
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        assert!(states > 0, "an automaton needs at least one state");
        let m = alphabet.len();
        Nfa {
            alphabet,
            initial: 0,
            finals: vec![false; states],
            delta: vec![vec![Vec::new(); m]; states],
            labels: (0..states).map(|q| q.to_string()).collect(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn set_initial(&mut self, q: StateId) {
        assert!(q < self.num_states());
        self.initial = q;
    }

    pub fn add_state(&mut self, label: impl Into<String>) -> StateId {
        self.finals.push(false);
        self.delta.push(vec![Vec::new(); self.alphabet.len()]);
        self.labels.push(label.into());
        self.finals.len() - 1
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn set_final(&mut self, q: StateId, accepting: bool) {
        self.finals[q] = accepting;
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    pub fn label(&self, q: StateId) -> &str {
        &self.labels[q]
    }

    pub fn set_label(&mut self, q: StateId, label: impl Into<String>) {
        self.labels[q] = label.into();
    }

    pub fn add_transition(&mut self, from: StateId, letter: Letter, to: StateId) {
        assert!(from < self.num_states() && to < self.num_states());
        let cell = &mut self.delta[from][letter];
        if let Err(pos) = cell.binary_search(&to) {
            cell.insert(pos, to);
        }
    }

    pub fn successors(&self, q: StateId, letter: Letter) -> &[StateId] {
        &self.delta[q][letter]
    }

    /// All transitions `(from, letter, to)` in lexicographic order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, ts)| ts.iter().map(move |&p| (q, a, p)))
        })
    }

    pub fn is_deterministic(&self) -> bool {
        self.delta.iter().flatten().all(|ts| ts.len() <= 1)
    }

    /// Standard acceptance: some run on `word` ends in a final state.
    pub fn accepts(&self, word: &[Letter]) -> Result<bool> {
        self.alphabet.check_word(word)?;
        let mut current: BTreeSet<StateId> = BTreeSet::from([self.initial]);
        for &a in word {
            current = current
                .iter()
                .flat_map(|&q| self.delta[q][a].iter().copied())
                .collect();
            if current.is_empty() {
                return Ok(false);
            }
        }
        Ok(current.iter().any(|&q| self.finals[q]))
    }

    /// Letters that label at least one transition.
    pub fn used_letters(&self) -> BTreeSet<Letter> {
        self.transitions().map(|(_, a, _)| a).collect()
    }

    /// States reachable from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            for ts in &self.delta[q] {
                for &p in ts {
                    if !seen[p] {
                        seen[p] = true;
                        queue.push_back(p);
                    }
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut preds = vec![Vec::new(); n];
        for (q, _, p) in self.transitions() {
            preds[p].push(q);
        }
        let mut seen = self.finals.clone();
        let mut queue: VecDeque<StateId> = self.finals().collect();
        while let Some(p) = queue.pop_front() {
            for &q in &preds[p] {
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        seen
    }

    /// True iff the accepted language is empty.
    pub fn is_empty(&self) -> bool {
        let reach = self.reachable();
        !self.finals().any(|q| reach[q])
    }

    /// Removes states that are unreachable or cannot reach a final state.
    /// The initial state is always kept.
    pub fn trim(&self) -> Nfa {
        let reach = self.reachable();
        let co = self.coreachable();
        let keep: Vec<bool> = (0..self.num_states())
            .map(|q| q == self.initial || (reach[q] && co[q]))
            .collect();
        self.retain(&keep)
    }

    fn retain(&self, keep: &[bool]) -> Nfa {
        let mut map = vec![usize::MAX; self.num_states()];
        let mut next = 0;
        for q in 0..self.num_states() {
            if keep[q] {
                map[q] = next;
                next += 1;
            }
        }
        let mut out = Nfa::new(self.alphabet.clone(), next);
        out.initial = map[self.initial];
        for q in (0..self.num_states()).filter(|&q| keep[q]) {
            out.finals[map[q]] = self.finals[q];
            out.labels[map[q]] = self.labels[q].clone();
        }
        for (q, a, p) in self.transitions() {
            if keep[q] && keep[p] {
                out.add_transition(map[q], a, map[p]);
            }
        }
        out
    }

    /// Copy of this automaton with every transition on a letter other than
    /// `letter` deleted.
    pub fn keep_only_letter(&self, letter: Letter) -> Nfa {
        let mut out = self.clone();
        for row in &mut out.delta {
            for (a, ts) in row.iter_mut().enumerate() {
                if a != letter {
                    ts.clear();
                }
            }
        }
        out
    }

    /// Re-expresses an automaton that only uses `letter` over the one-letter
    /// alphabet `{letter}`.
    pub fn project_to_letter(&self, letter: Letter) -> Result<Nfa> {
        self.alphabet.check_letter(letter)?;
        if let Some(&other) = self.used_letters().iter().find(|&&a| a != letter) {
            return Err(Error::NotUnary(format!(
                "uses letter `{}` besides `{}`",
                self.alphabet.name(other),
                self.alphabet.name(letter)
            )));
        }
        let mut out = Nfa::new(self.alphabet.restrict(letter), self.num_states());
        out.initial = self.initial;
        out.finals = self.finals.clone();
        out.labels = self.labels.clone();
        for (q, _, p) in self.transitions() {
            out.add_transition(q, 0, p);
        }
        Ok(out)
    }

    /// Same automaton over a larger alphabet; `letter_map[i]` is the index in
    /// `alphabet` of this automaton's letter `i`.
    pub fn embed(&self, alphabet: &Alphabet, letter_map: &[Letter]) -> Nfa {
        assert_eq!(letter_map.len(), self.alphabet.len());
        let mut out = Nfa::new(alphabet.clone(), self.num_states());
        out.initial = self.initial;
        out.finals = self.finals.clone();
        out.labels = self.labels.clone();
        for (q, a, p) in self.transitions() {
            out.add_transition(q, letter_map[a], p);
        }
        out
    }

    /// Unary check: at most one letter labels transitions.
    pub fn unary_letter(&self) -> Result<Option<Letter>> {
        let used = self.used_letters();
        match used.len() {
            0 => Ok(None),
            1 => Ok(used.first().copied()),
            _ => Err(Error::NotUnary(format!("{} letters in use", used.len()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab_nfa() -> Nfa {
        let mut a = Nfa::new(Alphabet::standard(2), 3);
        a.add_transition(0, 0, 1);
        a.add_transition(1, 1, 2);
        a.set_final(2, true);
        a
    }

    #[test]
    fn accepts_defining_case() {
        let a = ab_nfa();
        assert!(a.accepts(&[0, 1]).unwrap());
        assert!(!a.accepts(&[1, 0]).unwrap());
        assert!(!a.accepts(&[]).unwrap());
    }

    #[test]
    fn letter_outside_alphabet_is_an_error() {
        assert!(matches!(ab_nfa().accepts(&[2]), Err(Error::LetterOutOfRange(2, 2))));
    }

    #[test]
    fn trim_drops_useless_states() {
        let mut a = ab_nfa();
        let dead = a.add_state("dead");
        a.add_transition(0, 1, dead);
        assert_eq!(a.trim().num_states(), 3);
    }

    #[test]
    fn projection_rejects_binary_automata() {
        assert!(ab_nfa().project_to_letter(0).is_err());
        let only_a = ab_nfa().keep_only_letter(0);
        let p = only_a.project_to_letter(0).unwrap();
        assert_eq!(p.alphabet().len(), 1);
        assert!(p.is_empty());
    }
}
