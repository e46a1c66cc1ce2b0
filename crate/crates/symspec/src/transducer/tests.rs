use std::collections::BTreeSet;

use super::*;
use crate::graph::Atom;

type Pairs = BTreeSet<(Vec<Symbol>, Vec<Symbol>)>;

fn ab(s: &str) -> Alphabet {
    Alphabet::from_chars(s).unwrap()
}

fn w(s: &str) -> Vec<Symbol> {
    s.chars().map(Symbol::from_char).collect()
}

fn p(s: &str) -> PairingSpec {
    s.parse().unwrap()
}

fn single_edge(label: &str) -> SpecTransducer {
    let mut t = LabelledGraph::new();
    let (i, f) = (t.add_state(), t.add_state());
    t.add_transition(i, p(label), f);
    t.set_initial(i);
    t.set_final(f);
    t
}

fn one_state_loop(label: &str) -> SpecTransducer {
    let mut t = LabelledGraph::new();
    let q = t.add_state();
    t.add_transition(q, p(label), q);
    t.set_initial(q);
    t.set_final(q);
    t
}

fn finite_lang(words: &[&str], gamma: &Alphabet) -> LabelledGraph<SetSpec> {
    let mut g = LabelledGraph::new();
    for u in words {
        let line = nfa::line_automaton(&w(u), gamma).unwrap();
        g = if g.num_states() == 0 {
            line
        } else {
            graph::union(&g, &line)
        };
    }
    g
}

fn hamming(u: &[Symbol], v: &[Symbol]) -> Option<usize> {
    (u.len() == v.len()).then(|| u.iter().zip(v).filter(|(a, b)| a != b).count())
}

fn compose_pairs(r: &Pairs, s: &Pairs, k: usize) -> Pairs {
    let mut out = BTreeSet::new();
    for (u, v) in r {
        for (v2, z) in s {
            if v == v2 && u.len().max(z.len()) <= k {
                out.insert((u.clone(), z.clone()));
            }
        }
    }
    out
}

#[test]
fn builtins_have_the_drawn_shape() {
    let sub2 = builtin("sub2").unwrap();
    assert_eq!(
        (sub2.graph().num_states(), sub2.graph().num_transitions()),
        (3, 5)
    );
    let px = builtin("px").unwrap();
    assert_eq!(
        (px.graph().num_states(), px.graph().num_transitions()),
        (2, 3)
    );
    assert!(builtin("nope").is_err());
    let g2 = px.gamma_version(&ab("01"));
    let g3 = px.gamma_version(&ab("012"));
    assert_eq!(g2.expand(&ab("01")).unwrap().num_transitions(), 6);
    assert_eq!(g3.expand(&ab("012")).unwrap().num_transitions(), 9);
}

#[test]
fn builtin_relations() {
    let gamma = ab("01");
    let sub2 = builtin("sub2").unwrap().gamma_version(&gamma);
    assert!(pair_member(&w("00"), &w("01"), &sub2, &gamma).unwrap());
    assert!(!pair_member(&w("000"), &w("111"), &sub2, &gamma).unwrap());
    assert!(pair_member(&w("010"), &w("011"), &sub2, &gamma).unwrap());
    assert!(!pair_member(&w("010"), &w("010"), &sub2, &gamma).unwrap());
    for (u, v) in sub2.behaviour(&gamma, 4).unwrap() {
        assert!(matches!(hamming(&u, &v), Some(1..=2)));
    }

    let px = builtin("px").unwrap().gamma_version(&gamma);
    assert!(pair_member(&w("01"), &w("0"), &px, &gamma).unwrap());
    assert!(pair_member(&w("01"), &[], &px, &gamma).unwrap());
    assert!(!pair_member(&w("0"), &w("0"), &px, &gamma).unwrap());
    for (u, v) in px.behaviour(&gamma, 4).unwrap() {
        assert!(v.len() < u.len() && u.starts_with(&v));
    }
}

#[test]
fn inverse_transposes() {
    let gamma = ab("01");
    let px = builtin("px").unwrap().gamma_version(&gamma);
    let inv = inverse_t(&px);
    assert!(pair_member(&w("0"), &w("01"), &inv, &gamma).unwrap());
    assert_eq!(inverse_t(&inv), px);
    let flipped: Pairs = px
        .behaviour(&gamma, 4)
        .unwrap()
        .into_iter()
        .map(|(u, v)| (v, u))
        .collect();
    assert_eq!(inv.behaviour(&gamma, 4).unwrap(), flipped);
}

#[test]
fn witness_pairs() {
    let gamma = ab("01");
    let px = builtin("px").unwrap().gamma_version(&gamma);
    let wp = non_empty_witness_pair(&px, &gamma).unwrap().unwrap();
    assert_eq!(
        wp,
        WitnessPair {
            input: w("0"),
            output: vec![]
        }
    );
    assert_eq!(wp.to_string(), "0\t\\e");

    let mut none = px.clone();
    none.clear_finals();
    assert_eq!(non_empty_witness_pair(&none, &gamma).unwrap(), None);
    let gamma = ab("012");
    assert_eq!(
        non_empty_witness_pair(&single_edge("0/!0"), &gamma).unwrap(),
        None
    );
}

#[test]
fn restriction() {
    let gamma = ab("01");
    let px = builtin("px").unwrap().gamma_version(&gamma);
    let only01 = finite_lang(&["01"], &gamma);
    let r = restrict_input(&px, &only01, &gamma).unwrap();
    assert_eq!(
        r.behaviour(&gamma, 5).unwrap(),
        Pairs::from([(w("01"), w("0")), (w("01"), vec![])])
    );

    let mut all = LabelledGraph::new();
    let q = all.add_state();
    all.add_transition(q, SetSpec::All, q);
    all.set_initial(q);
    all.set_final(q);
    let r = restrict_input(&px, &all, &gamma).unwrap();
    assert_eq!(
        r.behaviour(&gamma, 4).unwrap(),
        px.behaviour(&gamma, 4).unwrap()
    );

    let mut empty = LabelledGraph::<SetSpec>::new();
    let q = empty.add_state();
    empty.set_initial(q);
    assert!(restrict_input(&px, &empty, &gamma)
        .unwrap()
        .behaviour(&gamma, 4)
        .unwrap()
        .is_empty());

    let letters = {
        let mut g = LabelledGraph::new();
        let (a, b) = (g.add_state(), g.add_state());
        g.add_transition(a, Letter::Sym(Symbol::from_char('1')), b);
        g.set_initial(a);
        g.set_final(b);
        g
    };
    let r = restrict_output(&inverse_t(&px), &letters, &gamma).unwrap();
    assert_eq!(
        r.behaviour(&gamma, 4).unwrap(),
        Pairs::from([(vec![], w("1"))])
    );
}

#[test]
fn composition() {
    let gamma = ab("01");
    let px = builtin("px").unwrap().gamma_version(&gamma);
    let pp = compose_t(&px, &px, &gamma).unwrap();
    let r = px.behaviour(&gamma, 4).unwrap();
    assert_eq!(pp.behaviour(&gamma, 4).unwrap(), compose_pairs(&r, &r, 4));
    for (u, v) in pp.behaviour(&gamma, 4).unwrap() {
        assert!(v.len() + 2 <= u.len() && u.starts_with(&v));
    }

    let id = one_state_loop("@/=");
    let sub2 = builtin("sub2").unwrap().gamma_version(&gamma);
    let back = compose_t(&sub2, &id, &gamma).unwrap();
    assert_eq!(
        back.behaviour(&gamma, 4).unwrap(),
        sub2.behaviour(&gamma, 4).unwrap()
    );

    let gamma = ab("012");
    let c = compose_t(&single_edge("[01]/![12]"), &single_edge("[12]/!@"), &gamma).unwrap();
    assert_eq!(c.num_transitions(), 2);
    let got: BTreeSet<(String, String)> = c
        .behaviour(&gamma, 1)
        .unwrap()
        .into_iter()
        .map(|(u, v)| (show_word(&u), show_word(&v)))
        .collect();
    let expect: BTreeSet<(String, String)> =
        [("0", "0"), ("0", "1"), ("0", "2"), ("1", "0"), ("1", "1")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
    assert_eq!(got, expect);
}

#[test]
fn precheck_conditions() {
    let gamma = ab("012");
    let check = |l: &str| identity_precheck(&single_edge(l), &gamma).map(|(_, c)| c);
    assert_eq!(check("@/@"), Some(Condition::C1));
    assert_eq!(check("\\e/[01]"), Some(Condition::C1));
    assert_eq!(check("0/1"), None);
    assert_eq!(check("@/="), None);
    assert_eq!(check("@/!0"), Some(Condition::C2));
    assert_eq!(check("[01]/![12]"), Some(Condition::C3));
    assert_eq!(check("0/![12]"), Some(Condition::C4));
    assert_eq!(check("[12]/!0"), Some(Condition::C5));
    assert_eq!(check("0/![01]"), None);
    assert_eq!(check("[01]/!1"), None);
}

#[test]
fn identity_decision() {
    let gamma = ab("01");
    assert!(realizes_identity(&one_state_loop("@/="), &gamma).unwrap());
    let px = builtin("px").unwrap().gamma_version(&gamma);
    assert!(!realizes_identity(&px, &gamma).unwrap());

    let mut t = one_state_loop("@/=");
    let f = t.add_state();
    t.add_transition(0, p("0/![01]"), f);
    t.set_final(f);
    let gamma3 = ab("012");
    assert!(!realizes_identity(&t, &gamma3).unwrap());

    // the output runs one letter behind the input and catches up at the end
    let mut delay = LabelledGraph::new();
    let (a, b, c) = (delay.add_state(), delay.add_state(), delay.add_state());
    delay.add_transition(a, p("0/\\e"), b);
    delay.add_transition(b, p("1/0"), b);
    delay.add_transition(b, p("\\e/1"), c);
    delay.set_initial(a);
    delay.set_final(c);
    assert!(!realizes_identity(&delay, &gamma).unwrap());
    let mut delay = LabelledGraph::new();
    let (a, b, c) = (delay.add_state(), delay.add_state(), delay.add_state());
    delay.add_transition(a, p("0/\\e"), b);
    delay.add_transition(b, p("0/0"), b);
    delay.add_transition(b, p("\\e/0"), c);
    delay.set_initial(a);
    delay.set_final(c);
    assert!(realizes_identity(&delay, &gamma).unwrap());

    let mut never = one_state_loop("@/@");
    never.clear_finals();
    assert!(realizes_identity(&never, &gamma).unwrap());
}

#[test]
fn functionality() {
    let gamma = ab("01");
    assert!(is_functional(&one_state_loop("@/\\e"), &gamma).unwrap());
    let px = builtin("px").unwrap().gamma_version(&gamma);
    assert!(!is_functional(&px, &gamma).unwrap());
    assert!(is_functional(&single_edge("@/="), &gamma).unwrap());
    assert!(!is_functional(&single_edge("@/@"), &gamma).unwrap());
    assert!(is_functional(&single_edge("@/1"), &gamma).unwrap());
    let sub2 = builtin("sub2").unwrap().gamma_version(&gamma);
    assert!(!is_functional(&sub2, &gamma).unwrap());
}

#[test]
fn independence() {
    let gamma = ab("01");
    let sub2 = builtin("sub2").unwrap().gamma_version(&gamma);
    let px = builtin("px").unwrap().gamma_version(&gamma);
    assert_eq!(
        satisfies_property(&sub2, &finite_lang(&["000", "111"], &gamma), &gamma).unwrap(),
        None
    );
    let wp = satisfies_property(&sub2, &finite_lang(&["000", "011"], &gamma), &gamma)
        .unwrap()
        .unwrap();
    let pair = (show_word(&wp.input), show_word(&wp.output));
    assert!(pair == ("000".into(), "011".into()) || pair == ("011".into(), "000".into()));
    assert_eq!(
        satisfies_property(&px, &finite_lang(&["00", "01", "11"], &gamma), &gamma).unwrap(),
        None
    );
    let wp = satisfies_property(&px, &finite_lang(&["0", "01"], &gamma), &gamma)
        .unwrap()
        .unwrap();
    assert_eq!(wp.to_string(), "01\t0");

    let copy = one_state_loop("@/=");
    assert!(satisfies_property(&copy, &finite_lang(&["0"], &gamma), &gamma).is_err());
}

#[test]
fn letter_pair_import() {
    let gamma = ab("01");
    let mut t = LabelledGraph::new();
    let (a, b) = (t.add_state(), t.add_state());
    let s = |c| Letter::Sym(Symbol::from_char(c));
    t.add_transition(a, LetterPair::new(s('0'), Letter::Eps), b);
    t.add_transition(b, LetterPair::new(s('1'), s('0')), b);
    t.set_initial(a);
    t.set_final(b);
    let spec = from_letter_pairs(&t);
    assert_eq!(
        spec.behaviour(&gamma, 3).unwrap(),
        t.behaviour(&gamma, 3).unwrap()
    );
    assert_eq!(LetterPair::measure(&(w("01"), w("0"))), 2);
}
