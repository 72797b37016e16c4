use std::collections::BTreeMap;
use std::fmt::Write;

use super::{Dfa, Nfa, StateId};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub(crate) fn render(
    name: &str,
    labels: &[String],
    finals: &[bool],
    initial: StateId,
    edges: BTreeMap<(StateId, StateId), Vec<String>>,
) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  __start [shape=point];").unwrap();
    for (q, label) in labels.iter().enumerate() {
        let shape = if finals[q] { "doublecircle" } else { "circle" };
        writeln!(out, "  s{q} [shape={shape}, label=\"{}\"];", escape(label)).unwrap();
    }
    writeln!(out, "  __start -> s{initial};").unwrap();
    for ((q, p), letters) in edges {
        writeln!(out, "  s{q} -> s{p} [label=\"{}\"];", escape(&letters.join(","))).unwrap();
    }
    out.push_str("}\n");
    out
}

impl Nfa {
    /// Graphviz rendering; parallel edges are merged into one labelled edge.
    pub fn to_dot(&self) -> String {
        let mut edges: BTreeMap<(StateId, StateId), Vec<String>> = BTreeMap::new();
        for (q, a, p) in self.transitions() {
            edges.entry((q, p)).or_default().push(self.alphabet().name(a).to_string());
        }
        let labels: Vec<String> = (0..self.num_states()).map(|q| self.label(q).to_string()).collect();
        let finals: Vec<bool> = (0..self.num_states()).map(|q| self.is_final(q)).collect();
        render("nfa", &labels, &finals, self.initial(), edges)
    }
}

impl Dfa {
    pub fn to_dot(&self) -> String {
        let mut edges: BTreeMap<(StateId, StateId), Vec<String>> = BTreeMap::new();
        for (q, a, p) in self.transitions() {
            edges.entry((q, p)).or_default().push(self.alphabet().name(a).to_string());
        }
        let labels: Vec<String> = (0..self.num_states()).map(|q| self.label(q).to_string()).collect();
        let finals: Vec<bool> = (0..self.num_states()).map(|q| self.is_final(q)).collect();
        render("dfa", &labels, &finals, self.initial(), edges)
    }
}
