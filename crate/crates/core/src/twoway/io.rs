use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Move, Symbol, TwoWayDfa};
use crate::alphabet::Alphabet;
use crate::automata::dot::render;
use crate::automata::StateId;
use crate::error::{Error, Result};

const LEFT: &str = "<";
const RIGHT: &str = ">";

/// Wire form: `{"alphabet":[..],"states":N,"initial":i,"accept":f,
/// "transitions":[[from,"sym",to,"L"|"R"|"S"],..],"kind":"2dfa"}` with `"<"`
/// and `">"` naming the endmarkers. Transitions are sorted by source state,
/// then letters in alphabet order, then `<`, then `>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoWayJson {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub accept: usize,
    pub transitions: Vec<(usize, String, usize, String)>,
    pub kind: String,
}

impl TwoWayDfa {
    fn symbol_name(&self, sym: Symbol) -> &str {
        match sym {
            Symbol::Letter(a) => self.alphabet().name(a),
            Symbol::LeftEnd => LEFT,
            Symbol::RightEnd => RIGHT,
        }
    }

    pub fn to_json_value(&self) -> TwoWayJson {
        TwoWayJson {
            alphabet: self.alphabet().letters().to_vec(),
            states: self.num_states(),
            initial: self.initial(),
            accept: self.accept_state(),
            transitions: self
                .transitions()
                .map(|(q, sym, p, mv)| (q, self.symbol_name(sym).to_string(), p, mv.to_string()))
                .collect(),
            kind: "2dfa".into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<TwoWayDfa> {
        let raw: TwoWayJson = serde_json::from_str(text)?;
        raw.into_machine()
    }

    pub fn to_dot(&self) -> String {
        let mut edges: BTreeMap<(StateId, StateId), Vec<String>> = BTreeMap::new();
        for (q, sym, p, mv) in self.transitions() {
            let name = match sym {
                Symbol::LeftEnd => "⊢",
                Symbol::RightEnd => "⊣",
                Symbol::Letter(a) => self.alphabet().name(a),
            };
            edges.entry((q, p)).or_default().push(format!("{name}/{mv}"));
        }
        let labels: Vec<String> = (0..self.num_states()).map(|q| self.label(q).to_string()).collect();
        let finals: Vec<bool> = (0..self.num_states()).map(|q| q == self.accept_state()).collect();
        render("twoway", &labels, &finals, self.initial(), edges)
    }
}

impl TwoWayJson {
    pub fn into_machine(self) -> Result<TwoWayDfa> {
        if self.kind != "2dfa" {
            return Err(Error::InvalidInput(format!("expected kind `2dfa`, found `{}`", self.kind)));
        }
        if self.alphabet.iter().any(|s| s == LEFT || s == RIGHT) {
            return Err(Error::InvalidAlphabet("`<` and `>` name the endmarkers".into()));
        }
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let n = self.states;
        if n == 0 {
            return Err(Error::InvalidInput("automaton has no states".into()));
        }
        for q in [self.initial, self.accept] {
            if q >= n {
                return Err(Error::StateOutOfRange(q, n));
            }
        }
        let mut t = TwoWayDfa::new(alphabet.clone(), n);
        t.set_accept_state(self.accept)?;
        t.set_initial(self.initial);
        for (q, name, p, mv) in &self.transitions {
            let sym = match name.as_str() {
                LEFT => Symbol::LeftEnd,
                RIGHT => Symbol::RightEnd,
                s => Symbol::Letter(alphabet.index_of(s).ok_or_else(|| Error::UnknownLetter(s.into()))?),
            };
            let mv = Move::parse(mv).ok_or_else(|| Error::InvalidInput(format!("unknown move `{mv}`")))?;
            t.set_transition(*q, sym, *p, mv).map_err(|e| match e {
                Error::Internal(msg) => Error::InvalidInput(msg),
                other => other,
            })?;
        }
        Ok(t)
    }
}
