use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::parikh::{LinearSet, ParikhVector, SemilinearRep};

/// Chooses pairwise distinct nonunary `x_i ⪯ offset(Z_i)` with `‖x_i‖ ≤ i`.
///
/// Indices are processed in increasing order and `x_i` is the
/// lexicographically smallest unused candidate. When none exists, `Z_i` is
/// unrolled: for each generator `v_j` the set with offset `v_0 + h_j·v_j` is
/// added at index `N_I + j` (`h_j` the least value with norm at least
/// `N_I + j`) and the grid `{v_0 + Σ n_j v_j : n_j < h_j}` moves to `Y`.
/// The represented set is unchanged. `n` is the state count of the source
/// automaton: when generators lie in `{0..n}^m` and the offset norm is below
/// the target, the new norm also stays below `N_I + j + n`.
pub fn normalize_offsets(rep: &SemilinearRep, n: usize) -> Result<SemilinearRep> {
    normalize_with(rep, Unrolling::NormTarget(n))
}

/// Same invariants as [`normalize_offsets`] with shallower unrolling: `Z_i`
/// first moves unchanged to index `N_I + 1` if its offset has a free
/// candidate there; otherwise each `h_j` is the least value for which the
/// new offset has a free candidate, and that candidate is reserved at once.
/// The grid moved to `Y` is usually far smaller.
pub fn normalize_offsets_compact(rep: &SemilinearRep) -> Result<SemilinearRep> {
    normalize_with(rep, Unrolling::LeastFree)
}

#[derive(Clone, Copy)]
enum Unrolling {
    NormTarget(usize),
    LeastFree,
}

fn normalize_with(rep: &SemilinearRep, mode: Unrolling) -> Result<SemilinearRep> {
    let mut out = rep.clone();
    let mut preds: BTreeMap<usize, ParikhVector> = BTreeMap::new();
    let mut used: BTreeSet<ParikhVector> = BTreeSet::new();
    let mut cursor = 0;
    while let Some((&i, z)) = out.linear.range(cursor + 1..).next() {
        cursor = i;
        let z = z.clone();
        if z.offset().is_unary() {
            return Err(Error::Precondition(format!(
                "offset {} of linear part {i} is unary",
                z.offset()
            )));
        }
        if preds.contains_key(&i) {
            continue;
        }
        if let Some(x) = smallest_pred(z.offset(), i as u64, &used) {
            used.insert(x.clone());
            preds.insert(i, x);
            continue;
        }
        let top = out.max_index();
        out.linear.remove(&i);
        match mode {
            Unrolling::NormTarget(n) => {
                let hs: Vec<u64> = z
                    .generators()
                    .iter()
                    .enumerate()
                    .map(|(j, g)| least_unrolling(z.offset(), g, (top + j + 1) as u64))
                    .collect();
                out.finite.extend(grid(&z, &hs));
                for (j, (g, &h)) in z.generators().iter().zip(&hs).enumerate() {
                    let offset = z.offset().add_scaled(g, h);
                    let target = (top + j + 1) as u64;
                    debug_assert!(
                        g.norm() > n as u64 || z.offset().norm() >= target || offset.norm() < target + n as u64
                    );
                    out.linear.insert(top + j + 1, LinearSet::new(offset, z.generators().to_vec()));
                }
            }
            Unrolling::LeastFree => {
                if let Some(x) = smallest_pred(z.offset(), (top + 1) as u64, &used) {
                    used.insert(x.clone());
                    preds.insert(top + 1, x);
                    out.linear.insert(top + 1, z);
                    continue;
                }
                let mut hs = Vec::with_capacity(z.generators().len());
                for (j, g) in z.generators().iter().enumerate() {
                    let idx = top + j + 1;
                    let (h, x) = (1u64..)
                        .find_map(|h| smallest_pred(&z.offset().add_scaled(g, h), idx as u64, &used).map(|x| (h, x)))
                        .expect("a free candidate appears once the offset is large enough");
                    used.insert(x.clone());
                    preds.insert(idx, x);
                    out.linear.insert(idx, LinearSet::new(z.offset().add_scaled(g, h), z.generators().to_vec()));
                    hs.push(h);
                }
                out.finite.extend(grid(&z, &hs));
            }
        }
    }
    out.preds = Some(preds);
    Ok(out)
}

/// Least `h` with `‖v_0 + h·g‖ ≥ target`. Since `g ≠ 0` the norm is unbounded
/// along the ray.
pub fn least_unrolling(v0: &ParikhVector, g: &ParikhVector, target: u64) -> u64 {
    (0..v0.dim())
        .filter(|&t| g.get(t) > 0)
        .map(|t| target.saturating_sub(v0.get(t)).div_ceil(g.get(t)))
        .min()
        .expect("generators are nonzero")
}

/// `{v_0 + Σ n_j v_j : 0 ≤ n_j < h_j}`.
fn grid(z: &LinearSet, hs: &[u64]) -> Vec<ParikhVector> {
    let mut out = vec![z.offset().clone()];
    for (g, &h) in z.generators().iter().zip(hs) {
        out = out
            .iter()
            .flat_map(|v| (0..h).map(move |c| v.add_scaled(g, c)))
            .collect();
    }
    out
}

/// Lexicographically smallest nonunary `x ⪯ bound` with `‖x‖ ≤ cap`, not in
/// `used`.
fn smallest_pred(bound: &ParikhVector, cap: u64, used: &BTreeSet<ParikhVector>) -> Option<ParikhVector> {
    let limits: Vec<u64> = bound.components().iter().map(|&c| c.min(cap)).collect();
    let mut x = vec![0u64; limits.len()];
    first_from(&limits, 0, 0, &mut x, used)
}

fn first_from(
    limits: &[u64],
    pos: usize,
    nonzero: usize,
    x: &mut Vec<u64>,
    used: &BTreeSet<ParikhVector>,
) -> Option<ParikhVector> {
    if pos == limits.len() {
        let v = ParikhVector::from(x.clone());
        return (nonzero >= 2 && !used.contains(&v)).then_some(v);
    }
    // the remaining positions cannot make the vector nonunary
    if nonzero + limits[pos..].iter().filter(|&&l| l > 0).count() < 2 {
        return None;
    }
    for c in 0..=limits[pos] {
        x[pos] = c;
        if let Some(v) = first_from(limits, pos + 1, nonzero + usize::from(c > 0), x, used) {
            return Some(v);
        }
    }
    x[pos] = 0;
    None
}
