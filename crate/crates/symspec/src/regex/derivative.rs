use std::collections::{BTreeSet, HashMap, VecDeque};

use super::Regex;
use crate::alphabet::{Alphabet, Symbol};
use crate::graph::{Label, LabelledGraph};
use crate::setspec::SetSpec;

/// Pairs `(label, tail)` such that `r` behaves like `const(r) + Σ label·tail`.
pub type LinearForm<L> = BTreeSet<(L, Regex<L>)>;

impl<L: Label> Regex<L> {
    pub fn linear_form(&self) -> LinearForm<L> {
        match self {
            Regex::EmptySet | Regex::Neutral => LinearForm::new(),
            Regex::Label(b) => LinearForm::from([(b.clone(), Regex::Neutral)]),
            Regex::Union(a, b) => {
                let mut lf = a.linear_form();
                lf.extend(b.linear_form());
                lf
            }
            Regex::Concat(a, b) => {
                let mut lf = times(a.linear_form(), b);
                if a.is_nullable() {
                    lf.extend(b.linear_form());
                }
                lf
            }
            Regex::Star(a) => times(a.linear_form(), self),
        }
    }
}

fn times<L: Label>(lf: LinearForm<L>, s: &Regex<L>) -> LinearForm<L> {
    lf.into_iter()
        .map(|(b, t)| (b, Regex::concat(t, s.clone())))
        .collect()
}

/// `∂_F(G)`: `{\e}` when `F ∩ G` is nonempty over Γ, else nothing.
pub fn deriv_label(f: &SetSpec, g: &SetSpec, gamma: &Alphabet) -> BTreeSet<Regex<SetSpec>> {
    match f.meet(g, gamma) {
        Some(_) => BTreeSet::from([Regex::Neutral]),
        None => BTreeSet::new(),
    }
}

impl Regex<SetSpec> {
    /// `∂_F(r)`: tails of the linear form whose label meets `F`.
    pub fn partial_derivatives(&self, f: &SetSpec, gamma: &Alphabet) -> BTreeSet<Regex<SetSpec>> {
        self.linear_form()
            .into_iter()
            .filter(|(g, _)| !deriv_label(f, g, gamma).is_empty())
            .map(|(_, t)| t)
            .collect()
    }

    /// Word membership by iterated partial derivatives.
    pub fn matches(&self, word: &[Symbol], gamma: &Alphabet) -> bool {
        let mut current = BTreeSet::from([self.clone()]);
        for &x in word {
            let fx = SetSpec::symbol(x);
            current = current
                .iter()
                .flat_map(|r| r.partial_derivatives(&fx, gamma))
                .collect();
        }
        current.iter().any(Regex::is_nullable)
    }

    /// The partial derivative automaton: states are the distinct derivatives.
    pub fn pd_automaton(&self) -> LabelledGraph<SetSpec> {
        self.pd_automaton_with_states().0
    }

    /// Like [`Self::pd_automaton`], also returning the expression of each state.
    pub fn pd_automaton_with_states(&self) -> (LabelledGraph<SetSpec>, Vec<Regex<SetSpec>>) {
        let mut g = LabelledGraph::new();
        let mut states = Vec::new();
        let mut ids: HashMap<Regex<SetSpec>, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        let start = g.add_state();
        ids.insert(self.clone(), start);
        states.push(self.clone());
        queue.push_back(self.clone());
        g.set_initial(start);
        while let Some(r) = queue.pop_front() {
            let src = ids[&r];
            if r.is_nullable() {
                g.set_final(src);
            }
            for (b, t) in r.linear_form() {
                let dst = match ids.get(&t) {
                    Some(&id) => id,
                    None => {
                        let id = g.add_state();
                        ids.insert(t.clone(), id);
                        states.push(t.clone());
                        queue.push_back(t);
                        id
                    }
                };
                g.add_transition(src, b, dst);
            }
        }
        (g, states)
    }
}
