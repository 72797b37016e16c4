use std::collections::BTreeSet;
use std::fmt;

use super::intlin::{is_independent, primitive_dependency};
use super::ParikhVector;

/// `{offset + Σ n_j·generators[j] : n_j ≥ 0}`.
///
/// Zero generators are dropped and the rest sorted and deduplicated on
/// construction, so two sets built from the same data compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearSet {
    offset: ParikhVector,
    generators: Vec<ParikhVector>,
    independent: bool,
}

impl LinearSet {
    pub fn new(offset: ParikhVector, generators: Vec<ParikhVector>) -> Self {
        let mut generators: Vec<ParikhVector> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        debug_assert!(generators.iter().all(|g| g.dim() == offset.dim()));
        generators.sort();
        generators.dedup();
        let independent = is_independent(&generators);
        LinearSet {
            offset,
            generators,
            independent,
        }
    }

    pub fn singleton(offset: ParikhVector) -> Self {
        Self::new(offset, Vec::new())
    }

    pub fn offset(&self) -> &ParikhVector {
        &self.offset
    }

    pub fn generators(&self) -> &[ParikhVector] {
        &self.generators
    }

    pub fn is_independent(&self) -> bool {
        self.independent
    }

    pub fn dim(&self) -> usize {
        self.offset.dim()
    }

    pub fn contains(&self, v: &ParikhVector) -> bool {
        let mut found = false;
        self.search(v, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// All coefficient tuples `(n_1, ..., n_k)` witnessing membership of `v`.
    pub fn coefficients(&self, v: &ParikhVector) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        self.search(v, &mut |ns| {
            out.push(ns.to_vec());
            true
        });
        out
    }

    /// Bounded search over coefficient tuples; `visit` returns whether to go on.
    fn search(&self, v: &ParikhVector, visit: &mut dyn FnMut(&[u64]) -> bool) {
        let Some(rest) = v.checked_sub(&self.offset) else {
            return;
        };
        let mut ns = vec![0; self.generators.len()];
        self.search_from(0, &rest, &mut ns, visit);
    }

    fn search_from(
        &self,
        j: usize,
        rest: &ParikhVector,
        ns: &mut [u64],
        visit: &mut dyn FnMut(&[u64]) -> bool,
    ) -> bool {
        if j == self.generators.len() {
            return if rest.is_zero() { visit(ns) } else { true };
        }
        let g = &self.generators[j];
        let cap = g
            .components()
            .iter()
            .zip(rest.components())
            .filter(|(gc, _)| **gc > 0)
            .map(|(gc, rc)| rc / gc)
            .min()
            .unwrap_or(0);
        let mut cur = rest.clone();
        for n in 0..=cap {
            ns[j] = n;
            if !self.search_from(j + 1, &cur, ns, visit) {
                return false;
            }
            if n < cap {
                cur = cur.checked_sub(g).expect("within cap");
            }
        }
        ns[j] = 0;
        true
    }
}

impl fmt::Display for LinearSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.offset)?;
        for g in &self.generators {
            write!(f, " + N{g}")?;
        }
        Ok(())
    }
}

/// Rewrites `z` as a finite union of linear sets with linearly independent
/// generators, each drawn from the generators of `z`.
///
/// For a primitive dependency `Σ_P λ_j g_j = Σ_N |λ_j| g_j` every member of
/// `z` has a representation with `n_j < |λ_j|` for some `j` on either side,
/// so the set splits into pieces with one generator fewer. The side with the
/// smaller total of caps is used.
pub fn independence_reduce(z: &LinearSet) -> Vec<LinearSet> {
    let mut out = BTreeSet::new();
    reduce_into(z.clone(), &mut out);
    out.into_iter().collect()
}

fn reduce_into(z: LinearSet, out: &mut BTreeSet<LinearSet>) {
    if z.independent {
        out.insert(z);
        return;
    }
    let lambda = primitive_dependency(&z.generators).expect("dependent generators");
    let pos: Vec<(usize, u64)> = side(&lambda, |x| x > 0);
    let neg: Vec<(usize, u64)> = side(&lambda, |x| x < 0);
    let total = |s: &[(usize, u64)]| s.iter().map(|&(_, c)| c).sum::<u64>();
    let chosen = if total(&neg) < total(&pos) { neg } else { pos };
    for (j, cap) in chosen {
        let rest: Vec<ParikhVector> = z
            .generators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, g)| g.clone())
            .collect();
        for c in 0..cap {
            let offset = z.offset.add_scaled(&z.generators[j], c);
            reduce_into(LinearSet::new(offset, rest.clone()), out);
        }
    }
}

fn side(lambda: &[i128], keep: impl Fn(i128) -> bool) -> Vec<(usize, u64)> {
    lambda
        .iter()
        .enumerate()
        .filter(|&(_, &x)| keep(x))
        .map(|(j, &x)| (j, u64::try_from(x.unsigned_abs()).expect("dependency coefficient fits u64")))
        .collect()
}
