//! Crossing behaviours: for a prefix `⊢u`, what the machine does from its
//! start and from every state that re-enters the last cell of `⊢u` from the
//! right. Behaviours compose letter by letter, which gives a one-way
//! automaton over which Parikh images can be walked.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::{Move, Symbol, TwoWayDfa};
use crate::alphabet::Letter;
use crate::automata::StateId;
use crate::parikh::{ParikhSource, ParikhVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Outcome {
    /// Leaves the prefix to the right in this state.
    Exit(StateId),
    Accept,
    Reject,
    Loop,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Behavior {
    start: Outcome,
    back: Vec<Outcome>,
}

/// Lazily built deterministic automaton whose states are behaviours.
pub(crate) struct BehaviorAutomaton<'a> {
    machine: &'a TwoWayDfa,
    states: Vec<Behavior>,
    index: HashMap<Behavior, usize>,
    next: Vec<Vec<Option<usize>>>,
    verdict: Vec<Option<bool>>,
}

impl<'a> BehaviorAutomaton<'a> {
    pub(crate) fn new(machine: &'a TwoWayDfa) -> Self {
        let n = machine.num_states();
        let start = if machine.initial() == machine.accept_state() {
            Outcome::Accept
        } else {
            Outcome::Exit(machine.initial())
        };
        let back = (0..n)
            .map(|q| run_in_cell(machine, q, Symbol::LeftEnd, &[]))
            .collect();
        let mut out = BehaviorAutomaton {
            machine,
            states: Vec::new(),
            index: HashMap::new(),
            next: Vec::new(),
            verdict: Vec::new(),
        };
        out.intern(Behavior { start, back });
        out
    }

    fn intern(&mut self, b: Behavior) -> usize {
        if let Some(&id) = self.index.get(&b) {
            return id;
        }
        let id = self.states.len();
        self.index.insert(b.clone(), id);
        self.states.push(b);
        self.next.push(vec![None; self.machine.alphabet().len()]);
        self.verdict.push(None);
        id
    }

    pub(crate) fn step(&mut self, id: usize, a: Letter) -> usize {
        if let Some(t) = self.next[id][a] {
            return t;
        }
        let m = self.machine;
        let old = &self.states[id];
        let start = match old.start {
            Outcome::Exit(p) => run_in_cell(m, p, Symbol::Letter(a), &old.back),
            other => other,
        };
        let back = (0..m.num_states())
            .map(|q| run_in_cell(m, q, Symbol::Letter(a), &old.back))
            .collect();
        let t = self.intern(Behavior { start, back });
        self.next[id][a] = Some(t);
        t
    }

    /// Whether the word leading to `id` is accepted, i.e. what happens once
    /// the head reaches `⊣`.
    pub(crate) fn accepts(&mut self, id: usize) -> bool {
        if let Some(v) = self.verdict[id] {
            return v;
        }
        let b = &self.states[id];
        let outcome = match b.start {
            Outcome::Exit(p) => run_in_cell(self.machine, p, Symbol::RightEnd, &b.back),
            other => other,
        };
        let v = outcome == Outcome::Accept;
        self.verdict[id] = Some(v);
        v
    }
}

/// Runs from state `q` on a cell holding `sym`, whose left neighbour region
/// is summarized by `left` (empty for `⊢`).
fn run_in_cell(m: &TwoWayDfa, mut q: StateId, sym: Symbol, left: &[Outcome]) -> Outcome {
    let mut seen = HashSet::new();
    loop {
        if q == m.accept_state() {
            return Outcome::Accept;
        }
        if !seen.insert(q) {
            return Outcome::Loop;
        }
        let Some((p, mv)) = m.transition(q, sym) else {
            return Outcome::Reject;
        };
        if p == m.accept_state() {
            return Outcome::Accept;
        }
        match mv {
            Move::S => q = p,
            Move::R => return Outcome::Exit(p),
            Move::L => match left.get(p) {
                Some(Outcome::Exit(r)) => q = *r,
                Some(other) => return *other,
                None => return Outcome::Reject,
            },
        }
    }
}

impl ParikhSource for TwoWayDfa {
    fn alphabet_size(&self) -> usize {
        self.alphabet().len()
    }

    fn accepts_word(&self, word: &[Letter]) -> bool {
        self.accepts(word).expect("letters in range")
    }

    fn walk_image(&self, bound: usize) -> BTreeSet<ParikhVector> {
        let m = self.alphabet().len();
        let mut auto = BehaviorAutomaton::new(self);
        let mut out = BTreeSet::new();
        let mut level: HashSet<(usize, ParikhVector)> = HashSet::from([(0, ParikhVector::zero(m))]);
        for len in 0..=bound {
            for (id, v) in &level {
                if auto.accepts(*id) {
                    out.insert(v.clone());
                }
            }
            if len == bound {
                break;
            }
            let mut next = HashSet::with_capacity(level.len());
            for (id, v) in &level {
                for a in 0..m {
                    let t = auto.step(*id, a);
                    let mut w = v.clone();
                    w.increment(a);
                    next.insert((t, w));
                }
            }
            level = next;
        }
        out
    }
}
