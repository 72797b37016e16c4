use std::collections::{BTreeMap, BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::alphabet::Letter;
use crate::automata::{Nfa, StateId};
use crate::error::{Error, Result};
use crate::parikh::{independence_reduce, LinearSet, ParikhVector, SemilinearRep};

/// Knobs for [`extract_semilinear_with`].
#[derive(Clone, Debug)]
pub struct ExtractOptions {
    /// Upper bound on base-run length. `None` relies on the pruning rule
    /// alone, which already bounds every explored run.
    pub base_run_cap: Option<usize>,
    /// Maximum number of (cycle, image) pairs before giving up.
    pub cycle_limit: usize,
    /// Maximum number of explored run configurations before giving up.
    pub config_limit: usize,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            base_run_cap: None,
            cycle_limit: 20_000,
            config_limit: 200_000,
        }
    }
}

/// A semilinear representation of `ψ(L(a))` whose generators are images of
/// simple cycles of `a`, each linear part independent, singletons in `Y`.
pub fn extract_semilinear(a: &Nfa) -> Result<SemilinearRep> {
    extract_semilinear_with(a, &ExtractOptions::default())
}

/// Extraction by cyclic support.
///
/// For an accepting run let `K` be the set of states it visits that lie on
/// some cycle. Any simple cycle inside `K` can be spliced into the run, and
/// any run can be shortened, without changing `K`, by cutting closed walks
/// that revisit a state with no new state of `K` in between. So `ψ(L)` is the
/// union over short ("base") runs of `ψ(run) + N{ψ(c) : c simple, c ⊆ K}`.
pub fn extract_semilinear_with(a: &Nfa, opts: &ExtractOptions) -> Result<SemilinearRep> {
    let t = a.trim();
    let m = t.alphabet().len();
    if t.is_empty() {
        return Ok(SemilinearRep::empty(m));
    }
    let n = t.num_states();
    let adj = edge_letters(&t);
    let comp = strongly_connected(n, &adj);
    let cyclic: Vec<bool> = (0..n)
        .map(|q| adj[q].contains_key(&q) || comp.iter().filter(|&&c| c == comp[q]).count() > 1)
        .collect();
    let cycles = simple_cycles(m, &adj, &comp, &cyclic, opts.cycle_limit)?;
    let runs = base_runs(&t, &cyclic, &cycles, opts)?;

    let mut whole: Vec<LinearSet> = Vec::new();
    for (support, offsets) in runs {
        let gens = atoms(
            cycles
                .iter()
                .filter(|(_, verts)| verts.is_subset(&support))
                .map(|(v, _)| v.clone())
                .collect(),
        );
        whole.extend(offsets.into_iter().map(|v| LinearSet::new(v, gens.clone())));
    }
    let mut parts: Vec<LinearSet> = Vec::new();
    for z in prune_subsumed(whole) {
        parts.extend(independence_reduce(&z));
    }

    let (singles, linear): (Vec<LinearSet>, Vec<LinearSet>) =
        parts.into_iter().partition(|z| z.generators().is_empty());
    let linear = prune_subsumed(linear);
    let finite: BTreeSet<ParikhVector> = singles
        .into_iter()
        .map(|z| z.offset().clone())
        .filter(|v| !linear.iter().any(|z| z.contains(v)))
        .collect();
    Ok(SemilinearRep::new(m, finite, linear))
}

/// The same set with every unary vector removed.
///
/// An element of `v_0 + N G` is nonunary iff it uses a generator leaving the
/// support of `v_0`, or (for `v_0 = 0`) a nonunary generator or two unary
/// generators on different letters. Each case is a linear set with the same
/// generators and a larger offset.
pub fn nonunary_restriction(rep: &SemilinearRep) -> SemilinearRep {
    let m = rep.dim();
    let support = |v: &ParikhVector| -> Vec<usize> { (0..m).filter(|&i| v.get(i) > 0).collect() };
    let mut pieces: BTreeSet<LinearSet> = BTreeSet::new();
    for z in rep.linear.values() {
        let v0 = z.offset();
        let gens = z.generators();
        let s0 = support(v0);
        let mut offsets = Vec::new();
        match s0.len() {
            0 => {
                for (j, g) in gens.iter().enumerate() {
                    if !g.is_unary() {
                        offsets.push(g.clone());
                    }
                    for h in &gens[j + 1..] {
                        if g.is_unary() && h.is_unary() && support(g) != support(h) {
                            offsets.push(g.add(h));
                        }
                    }
                }
            }
            1 => offsets.extend(gens.iter().filter(|g| support(g) != s0).map(|g| v0.add(g))),
            _ => offsets.push(v0.clone()),
        }
        pieces.extend(offsets.into_iter().map(|o| LinearSet::new(o, gens.to_vec())));
    }
    let linear = prune_subsumed(pieces.into_iter().collect());
    let finite: BTreeSet<ParikhVector> = rep
        .finite
        .iter()
        .filter(|v| !v.is_unary() && !linear.iter().any(|z| z.contains(v)))
        .cloned()
        .collect();
    SemilinearRep::new(m, finite, linear)
}

/// Drops sets contained in another (by [`subset_of`]); of two sets contained
/// in each other the first in sort order stays. Output is sorted.
fn prune_subsumed(mut sets: Vec<LinearSet>) -> Vec<LinearSet> {
    // big sets first, so most sets meet their cover early
    sets.sort_by(|x, y| {
        (y.generators().len(), x.offset().total(), x.offset(), x.generators())
            .cmp(&(x.generators().len(), y.offset().total(), y.offset(), y.generators()))
    });
    sets.dedup();
    let mut kept: Vec<LinearSet> = Vec::new();
    for z in sets {
        if !kept.iter().any(|w| subset_of(&z, w)) {
            kept.push(z);
        }
    }
    // a later set may still contain an earlier one
    let mut out: Vec<LinearSet> = kept
        .iter()
        .enumerate()
        .filter(|&(i, z)| {
            !kept
                .iter()
                .enumerate()
                .any(|(j, w)| j != i && subset_of(z, w) && (j < i || !subset_of(w, z)))
        })
        .map(|(_, z)| z.clone())
        .collect();
    out.sort_by(|x, y| (x.offset(), x.generators()).cmp(&(y.offset(), y.generators())));
    out
}

/// Sufficient test for `z ⊆ w`: the offset of `z` lies in `w` and each
/// generator of `z` is a combination of those of `w`.
fn subset_of(z: &LinearSet, w: &LinearSet) -> bool {
    if !w.contains(z.offset()) {
        return false;
    }
    let period = LinearSet::new(ParikhVector::zero(z.dim()), w.generators().to_vec());
    z.generators().iter().all(|g| w.generators().contains(g) || period.contains(g))
}

/// `adj[q][p]` = letters on the edges `q → p`.
fn edge_letters(t: &Nfa) -> Vec<BTreeMap<StateId, Vec<Letter>>> {
    let mut adj = vec![BTreeMap::new(); t.num_states()];
    for (q, x, p) in t.transitions() {
        adj[q].entry(p).or_insert_with(Vec::new).push(x);
    }
    adj
}

/// Component id per state (iterative Tarjan).
fn strongly_connected(n: usize, adj: &[BTreeMap<StateId, Vec<Letter>>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let succ: Vec<Vec<StateId>> = adj.iter().map(|row| row.keys().copied().collect()).collect();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut next_comp = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut work: Vec<(StateId, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (q, ref mut pos)) = work.last_mut() {
            if *pos < succ[q].len() {
                let p = succ[q][*pos];
                *pos += 1;
                if index[p] == UNSEEN {
                    index[p] = next_index;
                    low[p] = next_index;
                    next_index += 1;
                    stack.push(p);
                    on_stack[p] = true;
                    work.push((p, 0));
                } else if on_stack[p] {
                    low[q] = low[q].min(index[p]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent] = low[parent].min(low[q]);
            }
            if low[q] == index[q] {
                while let Some(p) = stack.pop() {
                    on_stack[p] = false;
                    comp[p] = next_comp;
                    if p == q {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

/// Images of all simple cycles, each with its vertex set. A cycle whose edges
/// carry several letters contributes one entry per distinct image.
fn simple_cycles(
    m: usize,
    adj: &[BTreeMap<StateId, Vec<Letter>>],
    comp: &[usize],
    cyclic: &[bool],
    limit: usize,
) -> Result<Vec<(ParikhVector, FixedBitSet)>> {
    let n = adj.len();
    let mut found: BTreeSet<(ParikhVector, Vec<usize>)> = BTreeSet::new();
    for s in (0..n).filter(|&s| cyclic[s]) {
        let mut path = vec![s];
        let mut on_path = FixedBitSet::with_capacity(n);
        on_path.insert(s);
        let mut iters: Vec<Vec<StateId>> = vec![adj[s].keys().copied().collect()];
        while let Some(frontier) = iters.last_mut() {
            let Some(p) = frontier.pop() else {
                iters.pop();
                if let Some(q) = path.pop() {
                    on_path.set(q, false);
                }
                continue;
            };
            if p == s {
                let mut closed = path.clone();
                closed.push(s);
                let mut verts = path.clone();
                verts.sort_unstable();
                for v in cycle_images(m, adj, &closed) {
                    found.insert((v, verts.clone()));
                }
                if found.len() > limit {
                    return Err(Error::LimitExceeded(format!(
                        "more than {limit} simple-cycle images"
                    )));
                }
            } else if p > s && comp[p] == comp[s] && !on_path.contains(p) {
                path.push(p);
                on_path.insert(p);
                iters.push(adj[p].keys().copied().collect());
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|(v, verts)| {
            let mut bits = FixedBitSet::with_capacity(n);
            bits.extend(verts);
            (v, bits)
        })
        .collect())
}

fn cycle_images(m: usize, adj: &[BTreeMap<StateId, Vec<Letter>>], closed: &[StateId]) -> BTreeSet<ParikhVector> {
    let mut images = BTreeSet::from([ParikhVector::zero(m)]);
    for edge in closed.windows(2) {
        let letters = &adj[edge[0]][&edge[1]];
        images = images
            .iter()
            .flat_map(|v| {
                letters.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.increment(x);
                    w
                })
            })
            .collect();
    }
    images
}

/// Vectors not expressible as a nonnegative combination of the others.
fn atoms(mut vs: Vec<ParikhVector>) -> Vec<ParikhVector> {
    vs.sort_by_key(|v| (v.total(), v.clone()));
    vs.dedup();
    let mut out: Vec<ParikhVector> = Vec::new();
    for v in vs {
        let zero = ParikhVector::zero(v.dim());
        if !LinearSet::new(zero, out.clone()).contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Images of base runs grouped by cyclic support.
///
/// Runs are explored by increasing length. A run ending in state `q` with
/// support `K` is dropped when an earlier run with the same end and support
/// has image `u` and `ψ(run) ∈ u + N{cycles in K}`: every continuation of the
/// dropped run is then covered by the same continuation of the earlier one.
/// Cutting closed walks that add nothing to `K` shows that every long enough
/// run is covered by a shorter one, so the search ends.
fn base_runs(
    t: &Nfa,
    cyclic: &[bool],
    cycles: &[(ParikhVector, FixedBitSet)],
    opts: &ExtractOptions,
) -> Result<HashMap<FixedBitSet, BTreeSet<ParikhVector>>> {
    let n = t.num_states();
    let m = t.alphabet().len();
    let q0 = t.initial();
    let mut support = FixedBitSet::with_capacity(n);
    if cyclic[q0] {
        support.insert(q0);
    }
    let mut periods: HashMap<FixedBitSet, LinearSet> = HashMap::new();
    let mut kept: HashMap<(StateId, FixedBitSet), Vec<ParikhVector>> = HashMap::new();
    let mut total = 0usize;
    let mut layer = vec![(q0, support, ParikhVector::zero(m))];
    let mut len = 0usize;
    let mut out: HashMap<FixedBitSet, BTreeSet<ParikhVector>> = HashMap::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (q, k, v) in layer {
            let period = periods.entry(k.clone()).or_insert_with(|| {
                let gens = cycles
                    .iter()
                    .filter(|(_, verts)| verts.is_subset(&k))
                    .map(|(g, _)| g.clone())
                    .collect();
                LinearSet::new(ParikhVector::zero(m), atoms(gens))
            });
            let seen = kept.entry((q, k.clone())).or_default();
            if seen
                .iter()
                .any(|u| v.checked_sub(u).is_some_and(|d| period.contains(&d)))
            {
                continue;
            }
            seen.push(v.clone());
            total += 1;
            if total > opts.config_limit {
                return Err(Error::LimitExceeded(format!(
                    "more than {} run configurations",
                    opts.config_limit
                )));
            }
            if t.is_final(q) {
                out.entry(k.clone()).or_default().insert(v.clone());
            }
            if opts.base_run_cap.is_some_and(|cap| len >= cap) {
                continue;
            }
            for x in 0..m {
                for &p in t.successors(q, x) {
                    let mut k2 = k.clone();
                    if cyclic[p] {
                        k2.insert(p);
                    }
                    let mut v2 = v.clone();
                    v2.increment(x);
                    next.push((p, k2, v2));
                }
            }
        }
        layer = next;
        len += 1;
    }
    Ok(out)
}
