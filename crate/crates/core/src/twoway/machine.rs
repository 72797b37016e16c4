use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::automata::StateId;
use crate::error::{Error, Result};

/// A tape cell: an input letter or one of the endmarkers `⊢`, `⊣`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Letter(Letter),
    LeftEnd,
    RightEnd,
}

impl Symbol {
    fn index(self, m: usize) -> usize {
        match self {
            Symbol::Letter(a) => a,
            Symbol::LeftEnd => m,
            Symbol::RightEnd => m + 1,
        }
    }

    fn from_index(i: usize, m: usize) -> Symbol {
        match i {
            _ if i < m => Symbol::Letter(i),
            _ if i == m => Symbol::LeftEnd,
            _ => Symbol::RightEnd,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    L,
    R,
    S,
}

impl Move {
    pub fn as_str(self) -> &'static str {
        match self {
            Move::L => "L",
            Move::R => "R",
            Move::S => "S",
        }
    }

    pub fn parse(s: &str) -> Option<Move> {
        match s {
            "L" => Some(Move::L),
            "R" => Some(Move::R),
            "S" => Some(Move::S),
            _ => None,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    /// An undefined transition was met before the accepting state.
    RejectHalt,
    /// A configuration repeated.
    RejectLoop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub verdict: Verdict,
    pub steps: usize,
}

/// Two-way deterministic automaton on `⊢w⊣` that accepts by entering the
/// halting state `accept`. Missing transitions reject.
#[derive(Clone, Debug)]
pub struct TwoWayDfa {
    alphabet: Alphabet,
    initial: StateId,
    accept: StateId,
    // delta[state][symbol], symbols are letters, then ⊢, then ⊣
    delta: Vec<Vec<Option<(StateId, Move)>>>,
    labels: Vec<String>,
}

impl PartialEq for TwoWayDfa {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.initial == other.initial
            && self.accept == other.accept
            && self.delta == other.delta
    }
}

impl Eq for TwoWayDfa {}

impl TwoWayDfa {
    /// `states` states without transitions; state 0 is initial and the last
    /// state accepts.
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        assert!(states > 0, "an automaton needs at least one state");
        let width = alphabet.len() + 2;
        TwoWayDfa {
            alphabet,
            initial: 0,
            accept: states - 1,
            delta: vec![vec![None; width]; states],
            labels: (0..states).map(|q| q.to_string()).collect(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accept_state(&self) -> StateId {
        self.accept
    }

    pub fn set_initial(&mut self, q: StateId) {
        assert!(q < self.num_states());
        self.initial = q;
    }

    pub fn set_accept_state(&mut self, q: StateId) -> Result<()> {
        assert!(q < self.num_states());
        if self.delta[q].iter().any(Option::is_some) {
            return Err(Error::InvalidInput("the accepting state must have no transitions".into()));
        }
        self.accept = q;
        Ok(())
    }

    pub fn label(&self, q: StateId) -> &str {
        &self.labels[q]
    }

    pub fn set_label(&mut self, q: StateId, label: impl Into<String>) {
        self.labels[q] = label.into();
    }

    pub fn add_state(&mut self, label: impl Into<String>) -> StateId {
        self.delta.push(vec![None; self.alphabet.len() + 2]);
        self.labels.push(label.into());
        self.delta.len() - 1
    }

    /// Sets `δ(q, sym) = (p, mv)`, rejecting moves off the tape, transitions
    /// out of the accepting state and conflicting redefinitions.
    pub fn set_transition(&mut self, q: StateId, sym: Symbol, p: StateId, mv: Move) -> Result<()> {
        let n = self.num_states();
        if q >= n {
            return Err(Error::StateOutOfRange(q, n));
        }
        if p >= n {
            return Err(Error::StateOutOfRange(p, n));
        }
        if let Symbol::Letter(a) = sym {
            self.alphabet.check_letter(a)?;
        }
        if q == self.accept {
            return Err(Error::InvalidInput("the accepting state must have no transitions".into()));
        }
        match (sym, mv) {
            (Symbol::LeftEnd, Move::L) => {
                return Err(Error::InvalidInput("cannot move left of the left endmarker".into()))
            }
            (Symbol::RightEnd, Move::R) => {
                return Err(Error::InvalidInput("cannot move right of the right endmarker".into()))
            }
            _ => {}
        }
        let slot = &mut self.delta[q][sym.index(self.alphabet.len())];
        match *slot {
            Some(old) if old != (p, mv) => Err(Error::Internal(format!(
                "conflicting transitions from {} on {:?}",
                self.labels[q], sym
            ))),
            _ => {
                *slot = Some((p, mv));
                Ok(())
            }
        }
    }

    pub fn transition(&self, q: StateId, sym: Symbol) -> Option<(StateId, Move)> {
        self.delta[q][sym.index(self.alphabet.len())]
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId, Move)> + '_ {
        let m = self.alphabet.len();
        self.delta.iter().enumerate().flat_map(move |(q, row)| {
            row.iter().enumerate().filter_map(move |(i, t)| {
                t.map(|(p, mv)| (q, Symbol::from_index(i, m), p, mv))
            })
        })
    }

    /// Runs on `⊢word⊣` with the head on the first input cell (on `⊣` when
    /// `word` is empty). A run longer than the number of configurations
    /// `|Q|·(|w|+2)` must repeat one and is reported as a loop.
    pub fn simulate(&self, word: &[Letter]) -> Result<RunOutcome> {
        self.alphabet.check_word(word)?;
        let len = word.len();
        let limit = self.num_states() * (len + 2);
        let mut q = self.initial;
        let mut pos = 1usize;
        let mut steps = 0;
        loop {
            if q == self.accept {
                return Ok(RunOutcome {
                    verdict: Verdict::Accept,
                    steps,
                });
            }
            let sym = match pos {
                0 => Symbol::LeftEnd,
                _ if pos == len + 1 => Symbol::RightEnd,
                _ => Symbol::Letter(word[pos - 1]),
            };
            let Some((p, mv)) = self.transition(q, sym) else {
                return Ok(RunOutcome {
                    verdict: Verdict::RejectHalt,
                    steps,
                });
            };
            if steps == limit {
                return Ok(RunOutcome {
                    verdict: Verdict::RejectLoop,
                    steps,
                });
            }
            steps += 1;
            q = p;
            match mv {
                Move::L => pos -= 1,
                Move::R => pos += 1,
                Move::S => {}
            }
        }
    }

    pub fn accepts(&self, word: &[Letter]) -> Result<bool> {
        Ok(self.simulate(word)?.verdict == Verdict::Accept)
    }
}
