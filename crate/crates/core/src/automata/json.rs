use serde::{Deserialize, Serialize};

use super::{Dfa, Nfa};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// Wire form of a one-way automaton:
/// `{"alphabet":[..],"states":N,"initial":i,"finals":[..],"transitions":[[from,"letter",to],..],"kind":"nfa"|"dfa"}`.
///
/// Finals and transitions are written in ascending order, so serializing a
/// parsed canonical document reproduces it byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonJson {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub finals: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
    pub kind: String,
}

/// A parsed one-way automaton of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Nfa(Nfa),
    Dfa(Dfa),
}

impl Automaton {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: AutomatonJson = serde_json::from_str(text)?;
        raw.into_automaton()
    }

    pub fn to_json(&self) -> String {
        match self {
            Automaton::Nfa(a) => a.to_json(),
            Automaton::Dfa(d) => d.to_json(),
        }
    }

    /// The automaton as an NFA (a DFA is a special NFA).
    pub fn to_nfa(&self) -> Nfa {
        match self {
            Automaton::Nfa(a) => a.clone(),
            Automaton::Dfa(d) => d.to_nfa(),
        }
    }
}

impl AutomatonJson {
    fn check(&self) -> Result<Alphabet> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        if self.states == 0 {
            return Err(Error::InvalidInput("automaton has no states".into()));
        }
        let n = self.states;
        if self.initial >= n {
            return Err(Error::StateOutOfRange(self.initial, n));
        }
        if let Some(&q) = self.finals.iter().find(|&&q| q >= n) {
            return Err(Error::StateOutOfRange(q, n));
        }
        for (from, letter, to) in &self.transitions {
            for q in [*from, *to] {
                if q >= n {
                    return Err(Error::StateOutOfRange(q, n));
                }
            }
            if alphabet.index_of(letter).is_none() {
                return Err(Error::UnknownLetter(letter.clone()));
            }
        }
        Ok(alphabet)
    }

    pub fn into_automaton(self) -> Result<Automaton> {
        let alphabet = self.check()?;
        match self.kind.as_str() {
            "nfa" => {
                let mut a = Nfa::new(alphabet.clone(), self.states);
                a.set_initial(self.initial);
                for &q in &self.finals {
                    a.set_final(q, true);
                }
                for (from, letter, to) in &self.transitions {
                    a.add_transition(*from, alphabet.index_of(letter).unwrap(), *to);
                }
                Ok(Automaton::Nfa(a))
            }
            "dfa" => {
                let mut d = Dfa::new(alphabet.clone(), self.states);
                d.set_initial(self.initial);
                for &q in &self.finals {
                    d.set_final(q, true);
                }
                for (from, letter, to) in &self.transitions {
                    d.set_transition(*from, alphabet.index_of(letter).unwrap(), *to)
                        .map_err(|_| {
                            Error::InvalidInput(format!(
                                "dfa has two transitions from {from} on `{letter}`"
                            ))
                        })?;
                }
                Ok(Automaton::Dfa(d))
            }
            other => Err(Error::InvalidInput(format!("unknown automaton kind `{other}`"))),
        }
    }
}

impl Nfa {
    pub fn to_json_value(&self) -> AutomatonJson {
        AutomatonJson {
            alphabet: self.alphabet().letters().to_vec(),
            states: self.num_states(),
            initial: self.initial(),
            finals: self.finals().collect(),
            transitions: self
                .transitions()
                .map(|(q, a, p)| (q, self.alphabet().name(a).to_string(), p))
                .collect(),
            kind: "nfa".into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// Parses either kind of automaton as an NFA.
    pub fn from_json(text: &str) -> Result<Nfa> {
        Ok(Automaton::from_json(text)?.to_nfa())
    }
}

impl Dfa {
    pub fn to_json_value(&self) -> AutomatonJson {
        AutomatonJson {
            alphabet: self.alphabet().letters().to_vec(),
            states: self.num_states(),
            initial: self.initial(),
            finals: self.finals().collect(),
            transitions: self
                .transitions()
                .map(|(q, a, p)| (q, self.alphabet().name(a).to_string(), p))
                .collect(),
            kind: "dfa".into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// Parses a DFA; an `"nfa"` document is accepted when it is deterministic.
    pub fn from_json(text: &str) -> Result<Dfa> {
        match Automaton::from_json(text)? {
            Automaton::Dfa(d) => Ok(d),
            Automaton::Nfa(a) => Dfa::from_nfa(&a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_document_round_trips_bit_exactly() {
        let text = r#"{"alphabet":["a","b"],"states":3,"initial":0,"finals":[2],"transitions":[[0,"a",1],[0,"a",2],[1,"b",2]],"kind":"nfa"}"#;
        assert_eq!(Automaton::from_json(text).unwrap().to_json(), text);
        let dfa = r#"{"alphabet":["a"],"states":2,"initial":1,"finals":[0],"transitions":[[0,"a",1],[1,"a",0]],"kind":"dfa"}"#;
        assert_eq!(Automaton::from_json(dfa).unwrap().to_json(), dfa);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        let bad_state = r#"{"alphabet":["a"],"states":1,"initial":0,"finals":[3],"transitions":[],"kind":"nfa"}"#;
        assert!(Automaton::from_json(bad_state).is_err());
        let bad_letter = r#"{"alphabet":["a"],"states":1,"initial":0,"finals":[],"transitions":[[0,"z",0]],"kind":"nfa"}"#;
        assert!(Automaton::from_json(bad_letter).is_err());
        let nondet = r#"{"alphabet":["a"],"states":2,"initial":0,"finals":[],"transitions":[[0,"a",0],[0,"a",1]],"kind":"dfa"}"#;
        assert!(Automaton::from_json(nondet).is_err());
    }
}
