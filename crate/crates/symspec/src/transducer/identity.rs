use std::collections::VecDeque;
use std::fmt;

use super::{compose_t, inverse_t, prune, SpecTransducer};
use crate::alphabet::{Alphabet, Letter, Symbol};
use crate::error::Result;
use crate::graph::LabelledGraph;
use crate::pairspec::{LetterPair, PairingSpec};
use crate::setspec::SetSpec;

/// Label shapes that rule out an identity on a trim transducer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Condition {
    /// A cross or one-sided label with a side of more than one symbol.
    C1,
    /// A difference label with a side of more than two symbols.
    C2,
    /// A difference label with two symbols on each side.
    C3,
    /// A difference label with sides of one and two disjoint symbols.
    C4,
    /// A difference label with sides of two and one disjoint symbols.
    C5,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn card(f: &SetSpec, gamma: &Alphabet) -> usize {
    if f.is_eps() {
        1
    } else {
        f.card_unchecked(gamma)
    }
}

fn disjoint(f: &SetSpec, g: &SetSpec, gamma: &Alphabet) -> bool {
    f.meet(g, gamma).is_none()
}

fn violation(p: &PairingSpec, gamma: &Alphabet) -> Option<Condition> {
    use PairingSpec::*;
    match p {
        EpsEps | Same(_) => None,
        EpsTo(_) | ToEps(_) | Cross(..) => {
            (card(&p.left(), gamma) > 1 || card(&p.right_set(), gamma) > 1).then_some(Condition::C1)
        }
        Diff(f, g) => match (card(f, gamma), card(g, gamma)) {
            (a, b) if a > 2 || b > 2 => Some(Condition::C2),
            (2, 2) => Some(Condition::C3),
            (1, 2) if disjoint(f, g, gamma) => Some(Condition::C4),
            (2, 1) if disjoint(f, g, gamma) => Some(Condition::C5),
            _ => None,
        },
    }
}

/// The first label, in transition order, whose shape alone shows that the
/// trim transducer `t` cannot realize an identity.
pub fn identity_precheck(t: &SpecTransducer, gamma: &Alphabet) -> Option<(PairingSpec, Condition)> {
    t.transitions()
        .find_map(|tr| violation(&tr.label, gamma).map(|c| (tr.label.clone(), c)))
}

fn only(f: &SetSpec, gamma: &Alphabet) -> Letter {
    match f {
        SetSpec::Eps => Letter::Eps,
        _ => Letter::Sym(f.min_unchecked(gamma)),
    }
}

/// Expansion of a transducer that passed the precheck: at most one pair per
/// label except for `F/=`.
fn expand_checked(t: &SpecTransducer, gamma: &Alphabet) -> LabelledGraph<LetterPair> {
    let mut out = LabelledGraph::new();
    out.add_states(t.num_states());
    for &q in t.initial() {
        out.set_initial(q);
    }
    for &q in t.finals() {
        out.set_final(q);
    }
    for tr in t.transitions() {
        let pairs = match &tr.label {
            PairingSpec::Same(f) => f
                .symbols_unchecked(gamma)
                .into_iter()
                .map(|x| LetterPair::new(Letter::Sym(x), Letter::Sym(x)))
                .collect(),
            PairingSpec::Diff(f, g) => diff_pair(f, g, gamma).into_iter().collect(),
            p => vec![LetterPair::new(
                only(&p.left(), gamma),
                only(&p.right_set(), gamma),
            )],
        };
        for pair in pairs {
            out.add_transition(tr.source, pair, tr.target);
        }
    }
    out
}

/// The single pair of `F/!G` when the sides have at most two symbols and
/// the label is not a C3, C4 or C5 shape.
fn diff_pair(f: &SetSpec, g: &SetSpec, gamma: &Alphabet) -> Option<LetterPair> {
    let pair = |x: Symbol, y: Symbol| LetterPair::new(Letter::Sym(x), Letter::Sym(y));
    let (x, y) = (f.min_unchecked(gamma), g.min_unchecked(gamma));
    match (f.card_unchecked(gamma), g.card_unchecked(gamma)) {
        (1, 1) => (x != y).then(|| pair(x, y)),
        // F = {x} ⊆ G
        (1, 2) => Some(pair(x, g.without(x, gamma)?.min_unchecked(gamma))),
        // G = {y} ⊆ F
        (2, 1) => Some(pair(f.without(y, gamma)?.min_unchecked(gamma), y)),
        _ => None,
    }
}

/// Whether the letter-pair transducer `t` realizes a subset of the identity.
///
/// Each state reachable along a useful path has a unique residual: what
/// one tape has read beyond the other.
pub fn standard_identity(t: &LabelledGraph<LetterPair>) -> bool {
    #[derive(Clone, PartialEq, Eq)]
    enum Ahead {
        In(Vec<Symbol>),
        Out(Vec<Symbol>),
    }
    let t = t.trim();
    let out = t.outgoing();
    let mut seen: Vec<Option<Ahead>> = vec![None; t.num_states()];
    let mut queue = VecDeque::new();
    for &i in t.initial() {
        seen[i] = Some(Ahead::In(vec![]));
        queue.push_back(i);
    }
    while let Some(p) = queue.pop_front() {
        let here = seen[p].clone().expect("queued states have residuals");
        let (a0, b0) = match here {
            Ahead::In(w) => (w, vec![]),
            Ahead::Out(w) => (vec![], w),
        };
        if t.is_final(p) && !(a0.is_empty() && b0.is_empty()) {
            return false;
        }
        for tr in &out[p] {
            let (mut a, mut b) = (a0.clone(), b0.clone());
            if let Letter::Sym(x) = tr.label.input {
                a.push(x);
            }
            if let Letter::Sym(y) = tr.label.output {
                b.push(y);
            }
            let common = a.iter().zip(&b).take_while(|(x, y)| x == y).count();
            let next = match (&a[common..], &b[common..]) {
                (r, []) => Ahead::In(r.to_vec()),
                ([], r) => Ahead::Out(r.to_vec()),
                _ => return false,
            };
            match &seen[tr.target] {
                Some(old) if *old != next => return false,
                Some(_) => {}
                None => {
                    seen[tr.target] = Some(next);
                    queue.push_back(tr.target);
                }
            }
        }
    }
    true
}

/// Whether every pair of `t` has equal sides.
pub fn realizes_identity(t: &SpecTransducer, gamma: &Alphabet) -> Result<bool> {
    t.check_labels(gamma)?;
    let t = prune(t, gamma);
    if identity_precheck(&t, gamma).is_some() {
        return Ok(false);
    }
    Ok(standard_identity(&expand_checked(&t, gamma)))
}

/// Whether `t` maps each input to at most one output: running `t⁻¹` and
/// then `t` must give back the word it started from.
pub fn is_functional(t: &SpecTransducer, gamma: &Alphabet) -> Result<bool> {
    let square = compose_t(&inverse_t(t), t, gamma)?;
    realizes_identity(&square, gamma)
}
