use std::collections::VecDeque;

use super::{Nfa, StateId};
use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// Deterministic finite automaton; the transition function may be partial.
#[derive(Clone, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    finals: Vec<bool>,
    delta: Vec<Vec<Option<StateId>>>,
    labels: Vec<String>,
}

impl PartialEq for Dfa {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.initial == other.initial
            && self.finals == other.finals
            && self.delta == other.delta
    }
}

impl Eq for Dfa {}

impl Dfa {
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        assert!(states > 0, "an automaton needs at least one state");
        let m = alphabet.len();
        Dfa {
            alphabet,
            initial: 0,
            finals: vec![false; states],
            delta: vec![vec![None; m]; states],
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
        self.delta.push(vec![None; self.alphabet.len()]);
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

    /// Sets `δ(from, letter) = to`. Fails if a different target is already set.
    pub fn set_transition(&mut self, from: StateId, letter: Letter, to: StateId) -> Result<()> {
        assert!(from < self.num_states() && to < self.num_states());
        match self.delta[from][letter] {
            Some(old) if old != to => Err(Error::Internal(format!(
                "nondeterministic transition from {} on `{}` ({old} vs {to})",
                self.labels[from],
                self.alphabet.name(letter)
            ))),
            _ => {
                self.delta[from][letter] = Some(to);
                Ok(())
            }
        }
    }

    pub fn next(&self, q: StateId, letter: Letter) -> Option<StateId> {
        self.delta[q][letter]
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(a, t)| t.map(|p| (q, a, p)))
        })
    }

    /// True iff every `(state, letter)` pair has a target.
    pub fn is_complete(&self) -> bool {
        self.delta.iter().flatten().all(Option::is_some)
    }

    /// State reached on `word`, or `None` if the run falls off a partial
    /// transition.
    pub fn run(&self, word: &[Letter]) -> Result<Option<StateId>> {
        self.alphabet.check_word(word)?;
        let mut q = self.initial;
        for &a in word {
            match self.delta[q][a] {
                Some(p) => q = p,
                None => return Ok(None),
            }
        }
        Ok(Some(q))
    }

    pub fn accepts(&self, word: &[Letter]) -> Result<bool> {
        Ok(self.run(word)?.is_some_and(|q| self.finals[q]))
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for p in self.delta[q].iter().flatten() {
                if !seen[*p] {
                    seen[*p] = true;
                    queue.push_back(*p);
                }
            }
        }
        seen
    }

    /// Keeps only reachable states, renumbered in breadth-first order.
    pub fn reachable_part(&self) -> Dfa {
        let mut order = vec![self.initial];
        let mut map = vec![usize::MAX; self.num_states()];
        map[self.initial] = 0;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for p in self.delta[q].iter().flatten() {
                if map[*p] == usize::MAX {
                    map[*p] = order.len();
                    order.push(*p);
                }
            }
            i += 1;
        }
        let mut out = Dfa::new(self.alphabet.clone(), order.len());
        for (new, &old) in order.iter().enumerate() {
            out.finals[new] = self.finals[old];
            out.labels[new] = self.labels[old].clone();
            for (a, t) in self.delta[old].iter().enumerate() {
                out.delta[new][a] = t.map(|p| map[p]);
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        let reach = self.reachable();
        !self.finals().any(|q| reach[q])
    }

    /// Drops states that are unreachable or cannot reach a final state
    /// (the initial state is kept). The result is partial in general.
    pub fn trim(&self) -> Dfa {
        Dfa::from_nfa(&self.to_nfa().trim()).expect("trimming keeps determinism")
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut out = Nfa::new(self.alphabet.clone(), self.num_states());
        out.set_initial(self.initial);
        for q in 0..self.num_states() {
            out.set_final(q, self.finals[q]);
            out.set_label(q, self.labels[q].clone());
        }
        for (q, a, p) in self.transitions() {
            out.add_transition(q, a, p);
        }
        out
    }

    /// Reads a deterministic [`Nfa`] as a DFA.
    pub fn from_nfa(nfa: &Nfa) -> Result<Dfa> {
        if !nfa.is_deterministic() {
            return Err(Error::InvalidInput("automaton is nondeterministic".into()));
        }
        let mut out = Dfa::new(nfa.alphabet().clone(), nfa.num_states());
        out.initial = nfa.initial();
        for q in 0..nfa.num_states() {
            out.finals[q] = nfa.is_final(q);
            out.labels[q] = nfa.label(q).to_string();
        }
        for (q, a, p) in nfa.transitions() {
            out.delta[q][a] = Some(p);
        }
        Ok(out)
    }

    /// Same automaton over a larger alphabet (see [`Nfa::embed`]).
    pub fn embed(&self, alphabet: &Alphabet, letter_map: &[Letter]) -> Dfa {
        assert_eq!(letter_map.len(), self.alphabet.len());
        let mut out = Dfa::new(alphabet.clone(), self.num_states());
        out.initial = self.initial;
        out.finals = self.finals.clone();
        out.labels = self.labels.clone();
        for (q, a, p) in self.transitions() {
            out.delta[q][letter_map[a]] = Some(p);
        }
        out
    }
}
