use std::collections::{HashMap, VecDeque};

use super::{Label, LabelledGraph, StateId};
use crate::alphabet::{Alphabet, Letter};
use crate::pairspec::{LetterPair, PairingSpec};
use crate::setspec::SetSpec;

/// A polymorphic operation on labels. An empty result means undefined; more
/// than one label means a disjoint sum, realized as parallel transitions.
pub trait LabelOp<A: Label, B: Label> {
    type Output: Label;

    fn apply(&self, a: &A, b: &B) -> Vec<Self::Output>;
}

#[derive(Clone, Copy)]
pub struct Intersection<'a>(pub &'a Alphabet);

#[derive(Clone, Copy)]
pub struct Composition<'a>(pub &'a Alphabet);

#[derive(Clone, Copy)]
pub struct RestrictInput<'a>(pub &'a Alphabet);

#[derive(Clone, Copy)]
pub struct RestrictOutput<'a>(pub &'a Alphabet);

impl LabelOp<SetSpec, SetSpec> for Intersection<'_> {
    type Output = SetSpec;

    fn apply(&self, a: &SetSpec, b: &SetSpec) -> Vec<SetSpec> {
        a.meet(b, self.0).into_iter().collect()
    }
}

impl LabelOp<Letter, Letter> for Intersection<'_> {
    type Output = Letter;

    fn apply(&self, a: &Letter, b: &Letter) -> Vec<Letter> {
        if a == b {
            vec![*a]
        } else {
            vec![]
        }
    }
}

impl LabelOp<PairingSpec, PairingSpec> for Composition<'_> {
    type Output = PairingSpec;

    fn apply(&self, a: &PairingSpec, b: &PairingSpec) -> Vec<PairingSpec> {
        a.compose(b, self.0).map(|s| s.0).unwrap_or_default()
    }
}

impl LabelOp<LetterPair, LetterPair> for Composition<'_> {
    type Output = LetterPair;

    fn apply(&self, a: &LetterPair, b: &LetterPair) -> Vec<LetterPair> {
        if a.output == b.input {
            vec![LetterPair::new(a.input, b.output)]
        } else {
            vec![]
        }
    }
}

impl LabelOp<PairingSpec, Letter> for RestrictInput<'_> {
    type Output = PairingSpec;

    fn apply(&self, p: &PairingSpec, x: &Letter) -> Vec<PairingSpec> {
        p.restrict_in(*x, self.0).into_iter().collect()
    }
}

impl LabelOp<PairingSpec, SetSpec> for RestrictInput<'_> {
    type Output = PairingSpec;

    fn apply(&self, p: &PairingSpec, f: &SetSpec) -> Vec<PairingSpec> {
        p.restrict_in_spec(f, self.0).into_iter().collect()
    }
}

impl LabelOp<LetterPair, Letter> for RestrictInput<'_> {
    type Output = LetterPair;

    fn apply(&self, p: &LetterPair, x: &Letter) -> Vec<LetterPair> {
        if p.input == *x {
            vec![*p]
        } else {
            vec![]
        }
    }
}

impl LabelOp<PairingSpec, Letter> for RestrictOutput<'_> {
    type Output = PairingSpec;

    fn apply(&self, p: &PairingSpec, x: &Letter) -> Vec<PairingSpec> {
        p.restrict_out(*x, self.0).into_iter().collect()
    }
}

impl LabelOp<PairingSpec, SetSpec> for RestrictOutput<'_> {
    type Output = PairingSpec;

    fn apply(&self, p: &PairingSpec, f: &SetSpec) -> Vec<PairingSpec> {
        p.restrict_out_spec(f, self.0).into_iter().collect()
    }
}

impl LabelOp<LetterPair, Letter> for RestrictOutput<'_> {
    type Output = LetterPair;

    fn apply(&self, p: &LetterPair, x: &Letter) -> Vec<LetterPair> {
        if p.output == *x {
            vec![*p]
        } else {
            vec![]
        }
    }
}

/// `G ⊙ G'`, exploring only pairs reachable from `I × I'`.
///
/// If one side has a label with an `\e` component, the other side gets
/// neutral self-loops so it can wait.
pub fn product<A, B, Op>(
    g: &LabelledGraph<A>,
    h: &LabelledGraph<B>,
    op: &Op,
) -> LabelledGraph<Op::Output>
where
    A: Label,
    B: Label,
    Op: LabelOp<A, B>,
{
    product_with_origin(g, h, op).0
}

/// Like [`product`], also returning the state pair behind each new state.
pub fn product_with_origin<A, B, Op>(
    g: &LabelledGraph<A>,
    h: &LabelledGraph<B>,
    op: &Op,
) -> (LabelledGraph<Op::Output>, Vec<(StateId, StateId)>)
where
    A: Label,
    B: Label,
    Op: LabelOp<A, B>,
{
    let loops_g = h.transitions().any(|t| t.label.has_eps_component());
    let loops_h = g.transitions().any(|t| t.label.has_eps_component());
    let moves_g = moves(g, loops_g);
    let moves_h = moves(h, loops_h);

    let mut out = LabelledGraph::new();
    let mut origin = Vec::new();
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut visit = |pair: (StateId, StateId),
                     out: &mut LabelledGraph<Op::Output>,
                     origin: &mut Vec<(StateId, StateId)>,
                     queue: &mut VecDeque<(StateId, StateId)>| {
        *ids.entry(pair).or_insert_with(|| {
            let id = out.add_state();
            origin.push(pair);
            queue.push_back(pair);
            id
        })
    };

    for &i in g.initial() {
        for &j in h.initial() {
            let id = visit((i, j), &mut out, &mut origin, &mut queue);
            out.set_initial(id);
        }
    }
    while let Some((p, q)) = queue.pop_front() {
        let src = visit((p, q), &mut out, &mut origin, &mut queue);
        for (a, p2, virt_a) in &moves_g[p] {
            for (b, q2, virt_b) in &moves_h[q] {
                if *virt_a && *virt_b {
                    continue;
                }
                for label in op.apply(a, b) {
                    let dst = visit((*p2, *q2), &mut out, &mut origin, &mut queue);
                    out.add_transition(src, label, dst);
                }
            }
        }
    }
    for (id, &(p, q)) in origin.iter().enumerate() {
        if g.is_final(p) && h.is_final(q) {
            out.set_final(id);
        }
    }
    (out, origin)
}

fn moves<L: Label>(g: &LabelledGraph<L>, loops: bool) -> Vec<Vec<(L, StateId, bool)>> {
    let mut m: Vec<Vec<(L, StateId, bool)>> = vec![Vec::new(); g.num_states()];
    for t in g.transitions() {
        m[t.source].push((t.label.clone(), t.target, false));
    }
    if loops {
        for (q, row) in m.iter_mut().enumerate() {
            row.push((L::neutral(), q, true));
        }
    }
    m
}
