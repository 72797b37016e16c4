use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;

use super::cnf::{Cnfg, Rhs};
use crate::alphabet::Letter;
use crate::parikh::{ParikhSource, ParikhVector};

/// CYK membership: `S ⇒* w`.
pub fn cyk_member(g: &Cnfg, w: &[Letter]) -> bool {
    let n = w.len();
    if n == 0 {
        return g.has_empty_production();
    }
    let h = g.num_variables();
    let binary: Vec<(usize, usize, usize)> = g
        .productions()
        .filter_map(|(b, r)| match r {
            Rhs::Pair(c, d) => Some((b, c, d)),
            _ => None,
        })
        .collect();
    // table[len - 1][i]: variables deriving w[i..i + len]
    let mut table: Vec<Vec<FixedBitSet>> = Vec::with_capacity(n);
    table.push(
        w.iter()
            .map(|&a| {
                let mut s = FixedBitSet::with_capacity(h);
                for (b, r) in g.productions() {
                    if r == Rhs::Letter(a) {
                        s.insert(b);
                    }
                }
                s
            })
            .collect(),
    );
    for len in 2..=n {
        let mut row = Vec::with_capacity(n - len + 1);
        for i in 0..=n - len {
            let mut s = FixedBitSet::with_capacity(h);
            for split in 1..len {
                let left = &table[split - 1][i];
                let right = &table[len - split - 1][i + split];
                for &(b, c, d) in &binary {
                    if left.contains(c) && right.contains(d) {
                        s.insert(b);
                    }
                }
            }
            row.push(s);
        }
        table.push(row);
    }
    table[n - 1][0].contains(g.start())
}

impl ParikhSource for Cnfg {
    fn alphabet_size(&self) -> usize {
        self.terminals().len()
    }

    fn accepts_word(&self, word: &[Letter]) -> bool {
        cyk_member(self, word)
    }

    /// Least fixpoint of the images of all variables, truncated at `bound`.
    fn walk_image(&self, bound: usize) -> BTreeSet<ParikhVector> {
        let m = self.terminals().len();
        let h = self.num_variables();
        let mut img: Vec<HashSet<ParikhVector>> = vec![HashSet::new(); h];
        let mut fresh: Vec<Vec<ParikhVector>> = vec![Vec::new(); h];
        if bound > 0 {
            for (b, r) in self.productions() {
                if let Rhs::Letter(a) = r {
                    let v = ParikhVector::unit(m, a);
                    if img[b].insert(v.clone()) {
                        fresh[b].push(v);
                    }
                }
            }
        }
        let binary: Vec<(usize, usize, usize)> = self
            .productions()
            .filter_map(|(b, r)| match r {
                Rhs::Pair(c, d) => Some((b, c, d)),
                _ => None,
            })
            .collect();
        while fresh.iter().any(|f| !f.is_empty()) {
            let mut next: Vec<Vec<ParikhVector>> = vec![Vec::new(); h];
            for &(b, c, d) in &binary {
                // pairs with at least one fresh side
                let mut found = Vec::new();
                for u in &fresh[c] {
                    for v in &img[d] {
                        found.push(u.add(v));
                    }
                }
                for v in &fresh[d] {
                    for u in &img[c] {
                        found.push(u.add(v));
                    }
                }
                for s in found {
                    if s.total() as usize <= bound && img[b].insert(s.clone()) {
                        next[b].push(s);
                    }
                }
            }
            fresh = next;
        }
        let mut out: BTreeSet<ParikhVector> = img.swap_remove(self.start()).into_iter().collect();
        if self.has_empty_production() {
            out.insert(ParikhVector::zero(m));
        }
        out
    }
}
