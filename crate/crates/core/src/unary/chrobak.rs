use serde::{Deserialize, Serialize};

use super::periodic::{unary_structure, UltimatelyPeriodicSet};
use crate::automata::Nfa;
use crate::error::{Error, Result};

/// Largest period product the synthesis will examine.
pub const LCM_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChrobakCycle {
    pub length: usize,
    /// Whether lengths `ℓ ≥ s` with `ℓ mod length = r` are accepted, by `r`.
    pub accepting: Vec<bool>,
    /// `s mod length`: the cycle position reached after the path.
    pub entry: usize,
}

/// A deterministic path of `s` states followed by a nondeterministic choice
/// among disjoint deterministic cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChrobakNf {
    /// Acceptance of lengths `0..s`.
    pub path: Vec<bool>,
    pub cycles: Vec<ChrobakCycle>,
}

impl ChrobakNf {
    /// Path length `s`.
    pub fn tail_len(&self) -> usize {
        self.path.len()
    }

    /// Total number of cycle states `r`.
    pub fn cycle_states(&self) -> usize {
        self.cycles.iter().map(|c| c.length).sum()
    }

    pub fn contains(&self, len: usize) -> bool {
        match self.path.get(len) {
            Some(&b) => b,
            None => self.cycles.iter().any(|c| c.accepting[len % c.length]),
        }
    }

    /// `lcm` of the cycle lengths, 1 without cycles.
    pub fn cycle_lcm(&self) -> usize {
        self.cycles.iter().fold(1, |l, c| lcm(l, c.length))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// For every period `c ≤ n` and residue `r`, the least `s` from which all
/// lengths `ℓ ≥ s`, `ℓ ≡ r (mod c)`, are accepted (`None`: never).
struct Classes {
    first_valid: Vec<Vec<Option<usize>>>,
}

impl Classes {
    /// Only divisors of the period get rows; other lengths are never valid.
    fn new(ups: &UltimatelyPeriodicSet, n: usize) -> Result<Self> {
        let t = ups.threshold();
        if ups.period > LCM_LIMIT {
            return Err(Error::LimitExceeded(format!("period above {LCM_LIMIT}")));
        }
        let window = t + ups.period;
        let mut first_valid = vec![Vec::new()];
        for c in 1..=n {
            if ups.period % c != 0 {
                first_valid.push(vec![None; c]);
                continue;
            }
            let mut row = vec![Some(0); c];
            for len in (0..window).rev() {
                if ups.contains(len) {
                    continue;
                }
                let r = len % c;
                match row[r] {
                    // the first rejection seen (from the top) fixes the class
                    Some(0) if len >= t => row[r] = None,
                    Some(0) => row[r] = Some(len + 1),
                    _ => {}
                }
            }
            first_valid.push(row);
        }
        Ok(Classes { first_valid })
    }

    fn valid(&self, c: usize, r: usize, s: usize) -> bool {
        self.first_valid[c][r].is_some_and(|f| f <= s)
    }

    /// Classes `(c, r)` already implied, at least as early, by a class of a
    /// proper divisor of `c`.
    fn dominated(&self, c: usize, r: usize) -> bool {
        let Some(f) = self.first_valid[c][r] else {
            return true;
        };
        (1..c)
            .filter(|d| c % d == 0)
            .any(|d| self.first_valid[d][r % d].is_some_and(|g| g <= f))
    }
}

/// Chrobak normal form for a unary automaton: cycle lengths at most the
/// number of (useful) states `n`, path length at most `n²`.
///
/// From the exact length set, a class `ℓ ≡ r (mod c)` may become a cycle as
/// soon as all its lengths from `s` on are accepted. Any normal form has
/// `s` at least the threshold `t` of the language, and past `t` a valid
/// class of length `c` stays valid modulo `gcd(c, P)` for the period `P`; so
/// only divisors of `P` are tried. Among the path lengths
/// `s` for which such classes cover every accepted length `≥ s`, the one with
/// the fewest total states `s + r` wins (smaller `s` on ties), and at that
/// `s` the set of cycle lengths with least total is taken.
pub fn chrobak_normal_form(a: &Nfa) -> Result<ChrobakNf> {
    let ups = unary_structure(a)?;
    let n = a.trim().num_states();
    let classes = Classes::new(&ups, n)?;
    let periods: Vec<usize> = (1..=n)
        .filter(|&c| (0..c).any(|r| !classes.dominated(c, r)))
        .collect();
    let horizon = |s: usize| s.max(ups.threshold()) + ups.period;

    let covers = |s: usize, chosen: &[usize]| {
        (s..horizon(s)).all(|len| {
            !ups.contains(len) || chosen.iter().any(|&c| classes.valid(c, len % c, s))
        })
    };
    let max_s = n * n;
    if !covers(max_s, &periods) {
        return Err(Error::Internal("no cycle cover within the path bound".into()));
    }
    let (mut lo, mut hi) = (ups.threshold().min(max_s), max_s);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if covers(mid, &periods) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut candidates: Vec<usize> = classes
        .first_valid
        .iter()
        .flatten()
        .flatten()
        .copied()
        .filter(|&f| f > lo && f <= max_s)
        .collect();
    candidates.push(lo);
    candidates.sort_unstable();
    candidates.dedup();

    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for s in candidates {
        if best.as_ref().is_some_and(|(total, _, _)| s >= *total) {
            break;
        }
        let usable: Vec<usize> = periods
            .iter()
            .copied()
            .filter(|&c| (0..c).any(|r| classes.valid(c, r, s)))
            .collect();
        let chosen = cheapest_cover(&usable, |set| covers(s, set));
        let total = s + chosen.iter().sum::<usize>();
        if best.as_ref().is_none_or(|(t, _, _)| total < *t) {
            best = Some((total, s, chosen));
        }
    }
    let (_, s, chosen) = best.expect("the least covering s is a candidate");
    let nf = ChrobakNf {
        path: (0..s).map(|len| ups.contains(len)).collect(),
        cycles: chosen
            .iter()
            .map(|&c| ChrobakCycle {
                length: c,
                accepting: (0..c).map(|r| classes.valid(c, r, s)).collect(),
                entry: s % c,
            })
            .collect(),
    };
    let check_to = horizon(s).max(s + 2 * nf.cycle_lcm());
    if let Some(len) = (0..check_to).find(|&len| nf.contains(len) != ups.contains(len)) {
        return Err(Error::Internal(format!("normal form disagrees at length {len}")));
    }
    Ok(nf)
}

/// Subset of `periods` with least sum (then fewest members, then
/// lexicographically least) satisfying `ok`, by increasing-sum search.
fn cheapest_cover(periods: &[usize], ok: impl Fn(&[usize]) -> bool) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut current = Vec::new();
    search(periods, 0, 0, &mut current, &mut best, &ok);
    best.expect("all usable periods together cover")
}

fn search(
    periods: &[usize],
    from: usize,
    sum: usize,
    current: &mut Vec<usize>,
    best: &mut Option<Vec<usize>>,
    ok: &impl Fn(&[usize]) -> bool,
) {
    let key = |v: &[usize]| (v.iter().sum::<usize>(), v.len(), v.to_vec());
    if best.as_ref().is_some_and(|b| key(b) <= key(current)) {
        return;
    }
    if ok(current) {
        *best = Some(current.clone());
        return;
    }
    for i in from..periods.len() {
        let next = sum + periods[i];
        if best.as_ref().is_some_and(|b| b.iter().sum::<usize>() < next) {
            break;
        }
        current.push(periods[i]);
        search(periods, i + 1, next, current, best, ok);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::fixtures::unary_cycles;

    fn agrees(a: &Nfa, nf: &ChrobakNf, upto: usize) {
        for len in 0..=upto {
            assert_eq!(nf.contains(len), a.accepts(&vec![0; len]).unwrap(), "{len}");
        }
    }

    #[test]
    fn single_three_cycle() {
        let a = unary_cycles(&[3]);
        // the start state doubles as residue 0: drop it and close the cycle
        let mut b = Nfa::new(Alphabet::standard(1), 3);
        for k in 0..3 {
            b.add_transition(k, 0, (k + 1) % 3);
        }
        b.set_final(0, true);
        let nf = chrobak_normal_form(&b).unwrap();
        assert_eq!(nf.tail_len(), 0);
        assert_eq!(nf.cycles.len(), 1);
        assert_eq!(nf.cycles[0].length, 3);
        agrees(&b, &nf, 30);
        agrees(&a, &chrobak_normal_form(&a).unwrap(), 30);
    }

    #[test]
    fn two_and_three() {
        let a = unary_cycles(&[2, 3]);
        let nf = chrobak_normal_form(&a).unwrap();
        assert!(nf.tail_len() <= 4);
        let lengths: Vec<usize> = nf.cycles.iter().map(|c| c.length).collect();
        assert_eq!(lengths, vec![2, 3]);
        agrees(&a, &nf, 40);
    }

    #[test]
    fn finite_language_is_all_path() {
        // chain of 4 states accepting a and aaa
        let mut a = Nfa::new(Alphabet::standard(1), 4);
        for k in 0..3 {
            a.add_transition(k, 0, k + 1);
        }
        a.set_final(1, true);
        a.set_final(3, true);
        let nf = chrobak_normal_form(&a).unwrap();
        assert_eq!(nf.tail_len(), 4);
        assert!(nf.cycles.is_empty());
        agrees(&a, &nf, 20);
    }

    #[test]
    fn empty_and_universal() {
        let empty = Nfa::new(Alphabet::standard(1), 2);
        let nf = chrobak_normal_form(&empty).unwrap();
        assert_eq!(nf.tail_len() + nf.cycle_states(), 0);
        let mut all = Nfa::new(Alphabet::standard(1), 1);
        all.add_transition(0, 0, 0);
        all.set_final(0, true);
        let nf = chrobak_normal_form(&all).unwrap();
        assert_eq!((nf.tail_len(), nf.cycle_states()), (0, 1));
    }

    #[test]
    fn cheapest_cover_prefers_small_sums() {
        let got = cheapest_cover(&[2, 3, 6], |s| s.contains(&6) || (s.contains(&2) && s.contains(&3)));
        assert_eq!(got, vec![2, 3]);
        let got = cheapest_cover(&[2, 3, 4], |s| s.contains(&4) || (s.contains(&2) && s.contains(&3)));
        assert_eq!(got, vec![4]);
    }
}
