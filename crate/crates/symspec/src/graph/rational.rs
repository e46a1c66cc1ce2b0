use super::{Label, LabelledGraph};

/// `G ∪ G'`: a fresh initial state with neutral edges into both.
pub fn union<L: Label>(g: &LabelledGraph<L>, h: &LabelledGraph<L>) -> LabelledGraph<L> {
    let mut out = LabelledGraph::new();
    let a = out.absorb(g);
    let b = out.absorb(h);
    let s = out.add_state();
    for &i in g.initial() {
        out.add_transition(s, L::neutral(), i + a);
    }
    for &i in h.initial() {
        out.add_transition(s, L::neutral(), i + b);
    }
    out.set_initial(s);
    for &f in g.finals() {
        out.set_final(f + a);
    }
    for &f in h.finals() {
        out.set_final(f + b);
    }
    out
}

/// `G G'`: finals of `G` reach the initials of `G'` through a bridge state.
pub fn concat<L: Label>(g: &LabelledGraph<L>, h: &LabelledGraph<L>) -> LabelledGraph<L> {
    let mut out = LabelledGraph::new();
    let a = out.absorb(g);
    let b = out.absorb(h);
    let q = out.add_state();
    for &f in g.finals() {
        out.add_transition(f + a, L::neutral(), q);
    }
    for &i in h.initial() {
        out.add_transition(q, L::neutral(), i + b);
    }
    for &i in g.initial() {
        out.set_initial(i + a);
    }
    for &f in h.finals() {
        out.set_final(f + b);
    }
    out
}

/// `G*`: a fresh state, initial and final, looping through `G`.
pub fn star<L: Label>(g: &LabelledGraph<L>) -> LabelledGraph<L> {
    let mut out = LabelledGraph::new();
    let a = out.absorb(g);
    let s = out.add_state();
    for &i in g.initial() {
        out.add_transition(s, L::neutral(), i + a);
    }
    for &f in g.finals() {
        out.add_transition(f + a, L::neutral(), s);
        out.set_final(f + a);
    }
    out.set_initial(s);
    out.set_final(s);
    out
}
