use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// Right-hand side of a production in Chomsky normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rhs {
    Pair(usize, usize),
    Letter(Letter),
    Empty,
}

/// Grammar in Chomsky normal form: `B → CD` with `C, D ≠ S`, `B → a`, and
/// optionally `S → ε`. Variables are indices into [`Cnfg::variables`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnfg {
    variables: Vec<String>,
    terminals: Alphabet,
    start: usize,
    productions: BTreeSet<(usize, Rhs)>,
}

impl Cnfg {
    pub fn new(
        variables: Vec<String>,
        terminals: Alphabet,
        start: usize,
        productions: impl IntoIterator<Item = (usize, Rhs)>,
    ) -> Result<Self> {
        let h = variables.len();
        if start >= h {
            return Err(Error::InvalidGrammar(format!("start variable {start} out of range")));
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(Error::InvalidGrammar(format!("duplicate variable `{v}`")));
            }
            if terminals.index_of(v).is_some() {
                return Err(Error::InvalidGrammar(format!("`{v}` is both a variable and a terminal")));
            }
        }
        let productions: BTreeSet<_> = productions.into_iter().collect();
        for &(b, rhs) in &productions {
            if b >= h {
                return Err(Error::InvalidGrammar(format!("variable {b} out of range")));
            }
            match rhs {
                Rhs::Pair(c, d) => {
                    if c >= h || d >= h {
                        return Err(Error::InvalidGrammar("variable out of range".into()));
                    }
                    if c == start || d == start {
                        return Err(Error::InvalidGrammar(format!(
                            "start variable `{}` on a right-hand side",
                            variables[start]
                        )));
                    }
                }
                Rhs::Letter(a) => terminals.check_letter(a)?,
                Rhs::Empty if b != start => {
                    return Err(Error::InvalidGrammar(format!(
                        "ε-production for non-start variable `{}`",
                        variables[b]
                    )));
                }
                Rhs::Empty => {}
            }
        }
        Ok(Cnfg { variables, terminals, start, productions })
    }

    /// Builds a grammar from `;`-separated rules such as
    /// `S -> A B | ε; A -> a`. Symbols are whitespace-separated; a symbol is a
    /// terminal iff it is in `terminals`; the first left-hand side is the
    /// start variable. `ε` and `eps` denote the empty right-hand side.
    pub fn from_rules(terminals: &[&str], rules: &str) -> Result<Self> {
        let alphabet = Alphabet::new(terminals.iter().copied())?;
        let mut names: Vec<String> = Vec::new();
        let index = |name: &str, names: &mut Vec<String>| -> usize {
            match names.iter().position(|v| v == name) {
                Some(i) => i,
                None => {
                    names.push(name.to_string());
                    names.len() - 1
                }
            }
        };
        let mut prods = Vec::new();
        for rule in rules.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| Error::InvalidGrammar(format!("missing `->` in `{rule}`")))?;
            let b = index(lhs.trim(), &mut names);
            for alt in rhs.split('|') {
                let syms: Vec<&str> = alt.split_whitespace().collect();
                let r = match syms.as_slice() {
                    [] | ["ε"] | ["eps"] => Rhs::Empty,
                    [x] => Rhs::Letter(alphabet.index_of(x).ok_or_else(|| {
                        Error::InvalidGrammar(format!("`{x}` is not a terminal"))
                    })?),
                    [c, d] if alphabet.index_of(c).is_none() && alphabet.index_of(d).is_none() => {
                        Rhs::Pair(index(c, &mut names), index(d, &mut names))
                    }
                    _ => return Err(Error::InvalidGrammar(format!("`{}` is not in CNF", alt.trim()))),
                };
                prods.push((b, r));
            }
        }
        if names.is_empty() {
            return Err(Error::InvalidGrammar("no rules".into()));
        }
        Cnfg::new(names, alphabet, 0, prods)
    }

    /// Number of variables `h`.
    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn productions(&self) -> impl Iterator<Item = (usize, Rhs)> + '_ {
        self.productions.iter().copied()
    }

    pub fn num_productions(&self) -> usize {
        self.productions.len()
    }

    pub fn has_empty_production(&self) -> bool {
        self.productions.contains(&(self.start, Rhs::Empty))
    }

    pub fn to_json_value(&self) -> GrammarJson {
        let name = |v: usize| self.variables[v].clone();
        GrammarJson {
            variables: self.variables.clone(),
            terminals: self.terminals.letters().to_vec(),
            start: name(self.start),
            productions: self
                .productions
                .iter()
                .map(|&(b, rhs)| {
                    let r = match rhs {
                        Rhs::Pair(c, d) => vec![name(c), name(d)],
                        Rhs::Letter(a) => vec![self.terminals.name(a).to_string()],
                        Rhs::Empty => vec![],
                    };
                    (name(b), r)
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Cnfg> {
        let raw: GrammarJson = serde_json::from_str(text)?;
        raw.into_grammar()
    }
}

impl fmt::Display for Cnfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut by_lhs: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for &(b, rhs) in &self.productions {
            let r = match rhs {
                Rhs::Pair(c, d) => format!("{} {}", self.variables[c], self.variables[d]),
                Rhs::Letter(a) => self.terminals.name(a).to_string(),
                Rhs::Empty => "ε".to_string(),
            };
            by_lhs.entry(b).or_default().push(r);
        }
        let mut first = true;
        for (b, rs) in by_lhs {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            write!(f, "{} -> {}", self.variables[b], rs.join(" | "))?;
        }
        Ok(())
    }
}

/// Wire format of a grammar.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrammarJson {
    pub variables: Vec<String>,
    pub terminals: Vec<String>,
    pub start: String,
    pub productions: Vec<(String, Vec<String>)>,
}

impl GrammarJson {
    pub fn into_grammar(self) -> Result<Cnfg> {
        let terminals = Alphabet::new(self.terminals)?;
        let var = |name: &str| {
            self.variables
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::InvalidGrammar(format!("unknown variable `{name}`")))
        };
        let start = var(&self.start)?;
        let mut prods = Vec::with_capacity(self.productions.len());
        for (lhs, rhs) in &self.productions {
            let b = var(lhs)?;
            let r = match rhs.as_slice() {
                [] => Rhs::Empty,
                [a] => Rhs::Letter(
                    terminals
                        .index_of(a)
                        .ok_or_else(|| Error::InvalidGrammar(format!("unknown terminal `{a}`")))?,
                ),
                [c, d] => Rhs::Pair(var(c)?, var(d)?),
                _ => return Err(Error::InvalidGrammar(format!("production for `{lhs}` is not in CNF"))),
            };
            prods.push((b, r));
        }
        Cnfg::new(self.variables, terminals, start, prods)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules_round_trip() {
        let g = Cnfg::from_rules(&["a", "b"], "S -> A B | ε; A -> a; B -> b").unwrap();
        assert_eq!(g.num_variables(), 3);
        assert!(g.has_empty_production());
        assert_eq!(Cnfg::from_json(&g.to_json()).unwrap(), g);
        assert_eq!(g.to_string(), "S -> A B | ε; A -> a; B -> b");
    }

    #[test]
    fn rejects_non_cnf() {
        assert!(Cnfg::from_rules(&["a"], "S -> A S; A -> a").is_err());
        assert!(Cnfg::from_rules(&["a"], "S -> A; A -> a").is_err());
        assert!(Cnfg::from_rules(&["a"], "S -> A A; A -> ε").is_err());
        assert!(Cnfg::from_rules(&["a"], "S -> a a").is_err());
        let bad = r#"{"variables":["S"],"terminals":["a"],"start":"T","productions":[]}"#;
        assert!(matches!(Cnfg::from_json(bad), Err(Error::InvalidGrammar(_))));
        assert!(Cnfg::from_json("{").is_err());
    }
}
