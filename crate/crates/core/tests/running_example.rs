use parikh_core::automata::{complete, minimize, subset_construct};
use parikh_core::determinize::{decompose_nfa, extract_semilinear, nfa_to_parikh_dfa, nonunary_to_dfa};
use parikh_core::fixtures::{example1_nfa, example1_parikh_dfa};
use parikh_core::parikh::{parikh_image_bounded, parikh_image_by_enumeration, parikh_vector, ParikhVector};
use parikh_core::twoway::nfa_to_parikh_2dfa;

fn b_then_a(n: usize) -> Vec<usize> {
    let mut w = vec![1];
    w.extend(std::iter::repeat(0).take(n));
    w
}

#[test]
fn membership_modulo_210() {
    let a = example1_nfa();
    assert!(!a.accepts(&b_then_a(210)).unwrap());
    assert!(a.accepts(&b_then_a(211)).unwrap());
    assert!(!a.accepts(&[1]).unwrap());
    assert_eq!(parikh_vector(2, &b_then_a(211)), ParikhVector::from_slice(&[211, 1]));
}

#[test]
fn minimal_dfa_and_fixture_sizes() {
    let a = example1_nfa();
    assert_eq!(minimize(&subset_construct(&a)).num_states(), 212);
    let fixture = example1_parikh_dfa();
    assert_eq!(fixture.num_states(), 22);

    // dropping the dead state leaves 21; completing restores it
    let partial = fixture.trim();
    assert_eq!(partial.num_states(), 21);
    assert_eq!(complete(&partial).num_states(), 22);
}

#[test]
fn small_bound_image() {
    let img = parikh_image_by_enumeration(&example1_nfa(), 6);
    let want = (1..=5).map(|n| ParikhVector::from_slice(&[n, 1])).collect();
    assert_eq!(img, want);
}

#[test]
fn decomposition_of_the_running_example() {
    let a = example1_nfa();
    let parts = decompose_nfa(&a);
    assert_eq!(parts.nonunary.num_states(), 18 * 3 + 1);
    assert!(parts.unary_parts.iter().all(|p| p.is_empty()));
    for w in parikh_core::alphabet::words_up_to(2, 8) {
        assert_eq!(parts.nonunary.accepts(&w).unwrap(), a.accepts(&w).unwrap());
    }
}

#[test]
fn extracted_representation_matches_arithmetic() {
    let rep = extract_semilinear(&example1_nfa()).unwrap();
    for n in 0..=430u64 {
        for b in 0..=2u64 {
            let want = b == 1 && n % 210 != 0;
            assert_eq!(rep.contains(&ParikhVector::from_slice(&[n, b])), want, "({n},{b})");
        }
    }
}

#[test]
fn conversions_agree_with_the_fixture() {
    let a = example1_nfa();
    let want = parikh_image_bounded(&example1_parikh_dfa(), 250);
    assert_eq!(parikh_image_bounded(&a, 250), want);
    assert_eq!(parikh_image_bounded(&nonunary_to_dfa(&a).unwrap(), 250), want);
    let d = nfa_to_parikh_dfa(&a).unwrap();
    assert!(d.is_complete());
    assert_eq!(parikh_image_bounded(&d, 250), want);
    let t = nfa_to_parikh_2dfa(&a).unwrap();
    assert_eq!(parikh_image_bounded(&t, 60), parikh_image_bounded(&a, 60));
}
