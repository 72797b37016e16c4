//! Measured state counts next to the bounds they are expected to respect.

use std::fmt;

use crate::automata::{complete, product_union, Nfa};
use crate::determinize::{decompose_nfa, join_unary_dfas, nonunary_part_construction};
use crate::error::Result;
use crate::grammar::{cfg_to_parikh_nfa, decompose_cfg, multiset_bound, Cnfg};
use crate::twoway::{dfa_to_2dfa, sequential_union};
use crate::unary::{chrobak_normal_form, unary_nfa_to_2dfa, unary_nfa_to_dfa};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    /// A soft bound was exceeded.
    Warn,
    /// A hard bound was exceeded.
    Fail,
    /// Reported only.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub conversion: String,
    /// `n` for automata, `h` for grammars.
    pub input_n: usize,
    pub input_m: usize,
    pub states: usize,
    pub bound_name: String,
    pub bound_value: Option<u128>,
    pub hard: bool,
    /// `true` for an exact count, `false` for an upper bound.
    pub exact: bool,
}

impl BoundRow {
    fn new(conversion: impl Into<String>, n: usize, m: usize, states: usize) -> Self {
        BoundRow {
            conversion: conversion.into(),
            input_n: n,
            input_m: m,
            states,
            bound_name: String::new(),
            bound_value: None,
            hard: true,
            exact: false,
        }
    }

    fn bound(mut self, name: impl Into<String>, value: u128) -> Self {
        self.bound_name = name.into();
        self.bound_value = Some(value);
        self
    }

    fn note(mut self, name: impl Into<String>) -> Self {
        self.bound_name = name.into();
        self
    }

    fn exact(mut self) -> Self {
        self.exact = true;
        self
    }

    fn soft(mut self) -> Self {
        self.hard = false;
        self
    }

    pub fn status(&self) -> Status {
        let Some(b) = self.bound_value else {
            return Status::Info;
        };
        let s = self.states as u128;
        let ok = if self.exact { s == b } else { s <= b };
        match (ok, self.hard) {
            (true, _) => Status::Pass,
            (false, true) => Status::Fail,
            (false, false) => Status::Warn,
        }
    }
}

impl fmt::Display for BoundRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bound_value {
            Some(b) => {
                let rel = if self.exact { "=" } else { "≤" };
                write!(f, "{} = {} {rel} {} = {b} {}", self.conversion, self.states, self.bound_name, self.status())
            }
            None => write!(f, "{} = {} ({}) {}", self.conversion, self.states, self.bound_name, self.status()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsReport {
    pub rows: Vec<BoundRow>,
}

impl BoundsReport {
    pub fn extend(&mut self, other: BoundsReport) {
        self.rows.extend(other.rows);
    }

    pub fn to_text(&self) -> String {
        self.rows.iter().map(|r| format!("{r}\n")).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("conversion,input_n,input_m,states,bound_name,bound_value,status\n");
        for r in &self.rows {
            let value = r.bound_value.map(|v| v.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                csv_field(&r.conversion),
                r.input_n,
                r.input_m,
                r.states,
                csv_field(&r.bound_name),
                value,
                r.status()
            ));
        }
        out
    }

    pub fn worst(&self) -> Status {
        self.rows
            .iter()
            .map(BoundRow::status)
            .filter(|s| *s != Status::Info)
            .max()
            .unwrap_or(Status::Pass)
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Runs the NFA conversions and records their sizes.
pub fn nfa_report(a: &Nfa) -> Result<BoundsReport> {
    let n = a.num_states();
    let m = a.alphabet().len();
    let nn = n as u128;
    let mut rows = Vec::new();
    let parts = decompose_nfa(a);
    rows.push(
        BoundRow::new("decompose A_0 states", n, m, parts.nonunary.num_states())
            .bound("n(m+1)+1", nn * (m as u128 + 1) + 1)
            .exact(),
    );
    let mut unary_dfas = Vec::with_capacity(m);
    let mut machines = Vec::with_capacity(m + 1);
    for (i, p) in parts.unary_parts.iter().enumerate() {
        let name = a.alphabet().name(i);
        rows.push(BoundRow::new(format!("decompose A_{name} states"), n, m, p.num_states()).bound("n", nn).exact());
        let u = p.project_to_letter(i)?;
        let nf = chrobak_normal_form(&u)?;
        rows.push(
            BoundRow::new(format!("chrobak A_{name} tail"), n, 1, nf.tail_len())
                .bound("n²-n", nn * nn - nn)
                .soft(),
        );
        rows.push(
            BoundRow::new(format!("chrobak A_{name} cycle states"), n, 1, nf.cycle_states())
                .bound("n-1", nn.saturating_sub(1))
                .soft(),
        );
        let t = unary_nfa_to_2dfa(&u)?;
        rows.push(BoundRow::new(format!("unary 2DFA A_{name}"), n, 1, t.num_states()).bound("n²+1", nn * nn + 1));
        machines.push(t.embed(a.alphabet(), &[i]));
        unary_dfas.push(unary_nfa_to_dfa(&u)?);
    }
    let c = nonunary_part_construction(a)?;
    rows.push(
        BoundRow::new("nonunary offsets max norm", n, m, c.normalized.max_offset_norm() as usize)
            .note("compare with p(n), not enforced"),
    );
    let a_u = complete(&join_unary_dfas(a.alphabet(), &unary_dfas, a.accepts(&[])?));
    let product = product_union(&a_u, &c.result)?;
    rows.push(
        BoundRow::new("parikh DFA product", n, m, product.num_states())
            .bound("n1·n2", (a_u.num_states() * c.result.num_states()) as u128),
    );
    machines.insert(0, dfa_to_2dfa(&c.result));
    let sum: usize = machines.iter().map(|t| t.num_states()).sum();
    let union = sequential_union(&machines)?;
    rows.push(BoundRow::new("parikh 2DFA sequential union", n, m, union.num_states()).bound("Σn_i", sum as u128).exact());
    Ok(BoundsReport { rows })
}

/// Runs the grammar conversions and records their sizes.
pub fn grammar_report(g: &Cnfg) -> Result<BoundsReport> {
    let h = g.num_variables();
    let m = g.terminals().len();
    let hh = h as u128;
    let mut rows = Vec::new();
    let parts = decompose_cfg(g);
    rows.push(
        BoundRow::new("decompose G_0 variables", h, m, parts.nonunary.num_variables())
            .bound("mh-m+1", m as u128 * hh - m as u128 + 1)
            .exact(),
    );
    let nfa = cfg_to_parikh_nfa(g);
    rows.push(BoundRow::new("EGKL states", h, m, nfa.num_states()).bound(format!("C({},{h})", 2 * h + 1), multiset_bound(h)));
    for (i, gi) in parts.unary_parts.iter().enumerate() {
        let u = cfg_to_parikh_nfa(gi).keep_only_letter(i).project_to_letter(i)?;
        let d = unary_nfa_to_dfa(&u)?;
        let psw = if h * h < 127 { 1u128 << (h * h) } else { u128::MAX };
        rows.push(
            BoundRow::new(format!("unary DFA G_{}", g.terminals().name(i)), h, 1, d.num_states())
                .bound("2^(h²)", psw)
                .soft(),
        );
    }
    Ok(BoundsReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::random_nfa;
    use rand::SeedableRng;

    #[test]
    fn decompose_row_format() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut a = random_nfa(&mut rng, 4, 2, 0.3);
        while a.num_states() != 4 {
            a = random_nfa(&mut rng, 4, 2, 0.3);
        }
        let r = nfa_report(&a).unwrap();
        assert_eq!(r.rows[0].to_string(), "decompose A_0 states = 13 = n(m+1)+1 = 13 PASS");
        assert!(r.to_csv().starts_with("conversion,input_n"));
        assert_ne!(r.worst(), Status::Fail);
    }

    #[test]
    fn egkl_row() {
        let g = crate::grammar::Cnfg::from_rules(&["a"], "S -> A A; A -> a").unwrap();
        let r = grammar_report(&g).unwrap();
        let row = r.rows.iter().find(|r| r.conversion == "EGKL states").unwrap();
        assert_eq!(row.bound_value, Some(10));
        assert_eq!(row.status(), Status::Pass);
    }
}
