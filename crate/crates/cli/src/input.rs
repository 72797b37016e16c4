use std::fs;
use std::path::Path;

use parikh_core::automata::Automaton;
use parikh_core::grammar::Cnfg;
use parikh_core::parikh::{parikh_image_bounded, ParikhVector};
use parikh_core::twoway::TwoWayDfa;
use parikh_core::{Alphabet, Nfa};
use serde_json::Value;

use crate::CliError;

/// Any document the tool reads, told apart by its fields.
pub enum Input {
    Automaton(Automaton),
    TwoWay(TwoWayDfa),
    Grammar(Cnfg),
}

impl Input {
    pub fn load(path: &Path) -> Result<Input, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Input::parse(&text).map_err(|e| e.at(path))
    }

    pub fn parse(text: &str) -> Result<Input, CliError> {
        let value: Value = serde_json::from_str(text).map_err(parikh_core::Error::from)?;
        if value.get("productions").is_some() {
            return Ok(Input::Grammar(Cnfg::from_json(text)?));
        }
        match value.get("kind").and_then(Value::as_str) {
            Some("2dfa") => Ok(Input::TwoWay(TwoWayDfa::from_json(text)?)),
            Some("nfa" | "dfa") => Ok(Input::Automaton(Automaton::from_json(text)?)),
            Some(other) => Err(CliError::Usage(format!("unknown kind `{other}`"))),
            None => Err(CliError::Usage(
                "expected an automaton (with \"kind\") or a grammar (with \"productions\")".into(),
            )),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Automaton(Automaton::Nfa(_)) => "NFA",
            Input::Automaton(Automaton::Dfa(_)) => "DFA",
            Input::TwoWay(_) => "2DFA",
            Input::Grammar(_) => "grammar",
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Input::Automaton(Automaton::Nfa(a)) => a.alphabet(),
            Input::Automaton(Automaton::Dfa(d)) => d.alphabet(),
            Input::TwoWay(t) => t.alphabet(),
            Input::Grammar(g) => g.terminals(),
        }
    }

    pub fn image(&self, bound: usize) -> std::collections::BTreeSet<ParikhVector> {
        match self {
            Input::Automaton(Automaton::Nfa(a)) => parikh_image_bounded(a, bound),
            Input::Automaton(Automaton::Dfa(d)) => parikh_image_bounded(d, bound),
            Input::TwoWay(t) => parikh_image_bounded(t, bound),
            Input::Grammar(g) => parikh_image_bounded(g, bound),
        }
    }

    pub fn into_nfa(self, path: &Path) -> Result<Nfa, CliError> {
        match self {
            Input::Automaton(a) => Ok(a.to_nfa()),
            other => Err(CliError::WrongInput {
                path: path.to_path_buf(),
                expected: "an NFA or DFA",
                found: other.kind(),
            }),
        }
    }

    pub fn into_grammar(self, path: &Path) -> Result<Cnfg, CliError> {
        match self {
            Input::Grammar(g) => Ok(g),
            other => Err(CliError::WrongInput {
                path: path.to_path_buf(),
                expected: "a grammar",
                found: other.kind(),
            }),
        }
    }
}

pub fn load_nfa(path: &Path) -> Result<Nfa, CliError> {
    Input::load(path)?.into_nfa(path)
}

pub fn load_grammar(path: &Path) -> Result<Cnfg, CliError> {
    Input::load(path)?.into_grammar(path)
}
