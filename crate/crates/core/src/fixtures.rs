//! Fixed automata and seeded random generators shared by tests, the CLI and
//! the benches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::automata::{Dfa, Nfa};
use crate::grammar::{witness_grammar, Cnfg, Rhs};

/// Cycle lengths of the running example.
pub const EXAMPLE1_PRIMES: [usize; 4] = [2, 3, 5, 7];

/// Unary NFA: start state 0 is final and, for every length `c`, a cycle
/// whose residue 0 is final, entered at residue `1 % c`.
///
/// Accepts `a^ℓ` iff `ℓ = 0` or some `c` divides `ℓ`.
pub fn unary_cycles(lengths: &[usize]) -> Nfa {
    let mut a = Nfa::new(Alphabet::standard(1), 1);
    a.set_final(0, true);
    for &c in lengths {
        assert!(c > 0, "cycle length must be positive");
        let base = a.num_states();
        for k in 0..c {
            let q = a.add_state(format!("c{c}.{k}"));
            a.set_final(q, k == 0);
        }
        for k in 0..c {
            a.add_transition(base + k, 0, base + (k + 1) % c);
        }
        a.add_transition(0, 0, base + 1 % c);
    }
    a
}

/// The 18-state NFA for `{ b a^n : n mod 210 ≠ 0 }`: on `b` the initial
/// state guesses one of four cycles of lengths 2, 3, 5, 7 and accepts on
/// nonzero residues.
pub fn example1_nfa() -> Nfa {
    let alphabet = Alphabet::new(["a", "b"]).expect("valid");
    let mut a = Nfa::new(alphabet, 1);
    a.set_label(0, "q0");
    for (i, &p) in EXAMPLE1_PRIMES.iter().enumerate() {
        let base = a.num_states();
        for k in 0..p {
            let q = a.add_state(format!("L{}.{k}", i + 1));
            a.set_final(q, k != 0);
        }
        for k in 0..p {
            a.add_transition(base + k, 0, base + (k + 1) % p);
        }
        a.add_transition(0, 1, base);
    }
    a
}

/// The 22-state complete DFA Parikh-equivalent to [`example1_nfa`].
///
/// A chain `v0..v3` on `a`; from `v_{i-1}` the letter `b` enters the cycle
/// of length `p_i` at residue `(i-1) mod p_i`; nonzero residues accept; all
/// other moves go to a dead state.
pub fn example1_parikh_dfa() -> Dfa {
    let alphabet = Alphabet::new(["a", "b"]).expect("valid");
    let mut d = Dfa::new(alphabet, 4);
    for i in 0..4 {
        d.set_label(i, format!("v{i}"));
    }
    let mut bases = Vec::new();
    for (i, &p) in EXAMPLE1_PRIMES.iter().enumerate() {
        let base = d.num_states();
        bases.push(base);
        for k in 0..p {
            let q = d.add_state(format!("L{}.{k}", i + 1));
            d.set_final(q, k != 0);
        }
    }
    let dead = d.add_state("dead");
    for i in 0..4 {
        let next = if i < 3 { i + 1 } else { dead };
        d.set_transition(i, 0, next).expect("fresh");
        let p = EXAMPLE1_PRIMES[i];
        d.set_transition(i, 1, bases[i] + i % p).expect("fresh");
    }
    for (i, &p) in EXAMPLE1_PRIMES.iter().enumerate() {
        for k in 0..p {
            let q = bases[i] + k;
            d.set_transition(q, 0, bases[i] + (k + 1) % p).expect("fresh");
            d.set_transition(q, 1, dead).expect("fresh");
        }
    }
    d.set_transition(dead, 0, dead).expect("fresh");
    d.set_transition(dead, 1, dead).expect("fresh");
    d
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random NFA with `1..=max_states` states over `m` letters. Each possible
/// transition is present with probability `density`; each state is final
/// with probability 0.35.
pub fn random_nfa<R: Rng>(rng: &mut R, max_states: usize, m: usize, density: f64) -> Nfa {
    let n = rng.gen_range(1..=max_states.max(1));
    let mut a = Nfa::new(Alphabet::standard(m), n);
    for q in 0..n {
        a.set_final(q, rng.gen_bool(0.35));
        for letter in 0..m {
            for p in 0..n {
                if rng.gen_bool(density) {
                    a.add_transition(q, letter, p);
                }
            }
        }
    }
    a
}

/// `count` random NFAs drawn from one seed, alternating between two and
/// three letters.
pub fn random_nfa_corpus(seed: u64, count: usize, max_states: usize) -> Vec<Nfa> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let m = if i % 2 == 0 { 2 } else { 3 };
            let density = r.gen_range(0.1..0.4);
            random_nfa(&mut r, max_states, m, density)
        })
        .collect()
}

/// `count` random unary NFAs with `1..=max_states` states.
pub fn random_unary_corpus(seed: u64, count: usize, max_states: usize) -> Vec<Nfa> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let density = r.gen_range(0.1..0.45);
            random_nfa(&mut r, max_states, 1, density)
        })
        .collect()
}

/// Hand-written CNF grammars with at most four variables, as
/// `(name, grammar)` pairs.
pub fn grammar_corpus() -> Vec<(&'static str, Cnfg)> {
    let ab = ["a", "b"];
    let specs: [(&str, &[&str], &str); 9] = [
        ("ab", &ab, "S -> A B; A -> a; B -> b"),
        ("a-b-ab", &ab, "S -> A B | a | b; A -> a; B -> b"),
        ("aa", &["a"], "S -> A A; A -> a"),
        ("epsilon", &["a"], "S -> ε"),
        ("long-words", &ab, "S -> X X | a; X -> X X | a | b"),
        ("a-plus-prefixed", &ab, "S -> A X | B X | a; X -> A X | a; A -> a; B -> b"),
        ("three-letters", &["a", "b", "c"], "S -> X Y; X -> a | b; Y -> X X | c"),
        ("even-unary", &["a"], "S -> P P | ε; P -> a | A Q; Q -> A P; A -> a"),
        ("finite-mixed", &ab, "S -> A X | B B; X -> B A | A A; A -> a; B -> b"),
    ];
    let mut out: Vec<(&'static str, Cnfg)> = specs
        .iter()
        .map(|(name, t, rules)| (*name, Cnfg::from_rules(t, rules).expect("corpus grammar")))
        .collect();
    out.push(("a-b-star", Cnfg::from_rules(&ab, "S -> X Y | ε; X -> X Y | a; Y -> b").expect("corpus grammar")));
    out.push(("witness-4", witness_grammar(4).expect("h ≥ 3")));
    out
}

/// Random CNF grammar with `h` variables over `m` letters; every variable
/// gets one or two binary rules and possibly a terminal rule.
pub fn random_grammar<R: Rng>(rng: &mut R, h: usize, m: usize) -> Cnfg {
    assert!(h >= 1);
    let names: Vec<String> = (0..h).map(|i| if i == 0 { "S".into() } else { format!("V{i}") }).collect();
    let mut prods = Vec::new();
    for b in 0..h {
        if h > 1 {
            for _ in 0..rng.gen_range(1..=2) {
                let c = rng.gen_range(1..h);
                let d = rng.gen_range(1..h);
                prods.push((b, Rhs::Pair(c, d)));
            }
        }
        if b > 0 || rng.gen_bool(0.3) {
            prods.push((b, Rhs::Letter(rng.gen_range(0..m))));
        }
    }
    if rng.gen_bool(0.2) {
        prods.push((0, Rhs::Empty));
    }
    Cnfg::new(names, Alphabet::standard(m), 0, prods).expect("CNF by construction")
}
