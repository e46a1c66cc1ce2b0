use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{Atom, Label, LabelledGraph, StateId};
use crate::alphabet::Alphabet;

type Value<L> = <<L as Label>::Atom as Atom>::Value;

pub(super) fn bounded<L: Label>(
    g: &LabelledGraph<L>,
    gamma: &Alphabet,
    max_len: usize,
) -> BTreeSet<Value<L>> {
    let mut moves: Vec<Vec<(Vec<L::Atom>, StateId)>> = vec![Vec::new(); g.num_states()];
    for t in g.transitions() {
        moves[t.source].push((t.label.atoms(gamma), t.target));
    }
    let mut seen: HashSet<(StateId, Value<L>)> = HashSet::new();
    let mut queue = VecDeque::new();
    for &i in g.initial() {
        let c = (i, L::Atom::unit());
        if seen.insert(c.clone()) {
            queue.push_back(c);
        }
    }
    let mut out = BTreeSet::new();
    while let Some((q, v)) = queue.pop_front() {
        if g.is_final(q) {
            out.insert(v.clone());
        }
        for (atoms, r) in &moves[q] {
            for &a in atoms {
                let w = L::Atom::append(&v, a);
                if L::Atom::measure(&w) <= max_len {
                    let c = (*r, w);
                    if !seen.contains(&c) {
                        seen.insert(c.clone());
                        queue.push_back(c);
                    }
                }
            }
        }
    }
    out
}

/// A shortest-path witness: some element of the behaviour, or `None` if the
/// behaviour is empty.
///
/// Breadth-first from the initial states, scanning transitions in insertion
/// order and taking [`Label::sample`] of each label.
pub fn witness<L: Label>(g: &LabelledGraph<L>, gamma: &Alphabet) -> Option<Value<L>> {
    let out = g.outgoing();
    let mut parent: Vec<Option<(StateId, L::Atom)>> = vec![None; g.num_states()];
    let mut seen = vec![false; g.num_states()];
    let mut queue = VecDeque::new();
    let mut hit = None;
    for &i in g.initial() {
        seen[i] = true;
        queue.push_back(i);
        if hit.is_none() && g.is_final(i) {
            hit = Some(i);
        }
    }
    while hit.is_none() {
        let Some(q) = queue.pop_front() else { break };
        for t in &out[q] {
            if seen[t.target] {
                continue;
            }
            let Some(a) = t.label.sample(gamma) else {
                continue;
            };
            seen[t.target] = true;
            parent[t.target] = Some((q, a));
            if g.is_final(t.target) {
                hit = Some(t.target);
                break;
            }
            queue.push_back(t.target);
        }
    }
    let mut q = hit?;
    let mut path = Vec::new();
    while let Some((p, a)) = parent[q] {
        path.push(a);
        q = p;
    }
    Some(
        path.into_iter()
            .rev()
            .fold(L::Atom::unit(), |v, a| L::Atom::append(&v, a)),
    )
}
