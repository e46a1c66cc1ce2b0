use std::collections::BTreeMap;

use super::Regex;
use crate::graph::{self, Label, LabelledGraph, StateId};

/// Thompson-style graph for `r`, built from the graph union, concatenation
/// and star constructions. Every subgraph has one initial and one final
/// state.
pub fn thompson<L: Label>(r: &Regex<L>) -> LabelledGraph<L> {
    match r {
        Regex::EmptySet => LabelledGraph::empty_behaviour(),
        Regex::Neutral => {
            let mut g = LabelledGraph::new();
            let q = g.add_state();
            g.set_initial(q);
            g.set_final(q);
            g
        }
        Regex::Label(l) => {
            let mut g = LabelledGraph::new();
            let p = g.add_state();
            let q = g.add_state();
            g.add_transition(p, l.clone(), q);
            g.set_initial(p);
            g.set_final(q);
            g
        }
        Regex::Union(a, b) => funnel(graph::union(&thompson(a), &thompson(b))),
        Regex::Concat(a, b) => graph::concat(&thompson(a), &thompson(b)),
        Regex::Star(a) => {
            let mut g = graph::star(&thompson(a));
            // the fresh state is the last one and already reachable from the old finals
            let s = g.num_states() - 1;
            g.clear_finals();
            g.set_final(s);
            g
        }
    }
}

fn funnel<L: Label>(mut g: LabelledGraph<L>) -> LabelledGraph<L> {
    if g.finals().len() <= 1 {
        return g;
    }
    let finals: Vec<StateId> = g.finals().iter().copied().collect();
    let f = g.add_state();
    for q in finals {
        g.add_transition(q, L::neutral(), f);
    }
    g.clear_finals();
    g.set_final(f);
    g
}

/// Converts a graph into an expression with the same behaviour by removing
/// states one at a time in ascending id order.
pub fn state_eliminate<L: Label>(g: &LabelledGraph<L>) -> Regex<L> {
    let n = g.num_states();
    let (s, f) = (n, n + 1);
    let mut edges: BTreeMap<(StateId, StateId), Regex<L>> = BTreeMap::new();
    let add = |edges: &mut BTreeMap<_, Regex<L>>, p, q, r: Regex<L>| {
        let merged = match edges.remove(&(p, q)) {
            Some(old) => Regex::union(old, r),
            None => r,
        };
        edges.insert((p, q), merged);
    };
    for t in g.transitions() {
        add(
            &mut edges,
            t.source,
            t.target,
            Regex::label(t.label.clone()),
        );
    }
    for &i in g.initial() {
        add(&mut edges, s, i, Regex::Neutral);
    }
    for &q in g.finals() {
        add(&mut edges, q, f, Regex::Neutral);
    }
    for q in 0..n {
        let looped = edges.remove(&(q, q)).map(Regex::star);
        let incoming: Vec<(StateId, Regex<L>)> = edges
            .iter()
            .filter(|((_, t), _)| *t == q)
            .map(|((p, _), r)| (*p, r.clone()))
            .collect();
        let outgoing: Vec<(StateId, Regex<L>)> = edges
            .iter()
            .filter(|((p, _), _)| *p == q)
            .map(|((_, t), r)| (*t, r.clone()))
            .collect();
        edges.retain(|(p, t), _| *p != q && *t != q);
        for (p, a1) in &incoming {
            for (r, a2) in &outgoing {
                let through = match &looped {
                    Some(l) => Regex::concat(Regex::concat(a1.clone(), l.clone()), a2.clone()),
                    None => Regex::concat(a1.clone(), a2.clone()),
                };
                add(&mut edges, *p, *r, through);
            }
        }
    }
    edges.remove(&(s, f)).unwrap_or(Regex::EmptySet)
}
