//! Labelled graphs: automata and transducers over any label domain.
//!
//! A graph is `(Q, δ, I, F)` with states `0..n`. The label type decides the
//! monoid: [`Letter`] and [`SetSpec`] labels describe words, [`LetterPair`]
//! and [`PairingSpec`] labels describe word pairs. Graphs built by the
//! constructions in this module are never mutated afterwards.
//!
//! [`Letter`]: crate::alphabet::Letter
//! [`SetSpec`]: crate::setspec::SetSpec
//! [`LetterPair`]: crate::pairspec::LetterPair
//! [`PairingSpec`]: crate::pairspec::PairingSpec

mod behaviour;
mod label;
mod product;
mod rational;

use std::collections::{BTreeSet, VecDeque};

use indexmap::IndexSet;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

pub use behaviour::witness;
pub use label::{Atom, GraphKind, Label};
pub use product::{
    product, product_with_origin, Composition, Intersection, LabelOp, RestrictInput, RestrictOutput,
};
pub use rational::{concat, star, union};

pub type StateId = usize;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Transition<L> {
    pub source: StateId,
    pub label: L,
    pub target: StateId,
}

#[derive(Clone, Debug)]
pub struct LabelledGraph<L> {
    states: usize,
    transitions: IndexSet<Transition<L>>,
    initial: BTreeSet<StateId>,
    finals: BTreeSet<StateId>,
}

impl<L: Label> PartialEq for LabelledGraph<L> {
    fn eq(&self, other: &Self) -> bool {
        self.states == other.states
            && self.initial == other.initial
            && self.finals == other.finals
            && self.transitions.len() == other.transitions.len()
            && self
                .transitions
                .iter()
                .all(|t| other.transitions.contains(t))
    }
}

impl<L: Label> Eq for LabelledGraph<L> {}

impl<L: Label> Default for LabelledGraph<L> {
    fn default() -> Self {
        Self::new()
    }
}

impl<L: Label> LabelledGraph<L> {
    /// A graph with no states. Add states and an initial state before use.
    pub fn new() -> Self {
        LabelledGraph {
            states: 0,
            transitions: IndexSet::new(),
            initial: BTreeSet::new(),
            finals: BTreeSet::new(),
        }
    }

    /// One initial, non-final state and nothing else.
    pub fn empty_behaviour() -> Self {
        let mut g = Self::new();
        let q = g.add_state();
        g.set_initial(q);
        g
    }

    pub fn add_state(&mut self) -> StateId {
        self.states += 1;
        self.states - 1
    }

    pub fn add_states(&mut self, n: usize) -> std::ops::Range<StateId> {
        let start = self.states;
        self.states += n;
        start..self.states
    }

    /// Adds a transition; identical transitions are stored once.
    pub fn add_transition(&mut self, source: StateId, label: L, target: StateId) {
        assert!(
            source < self.states && target < self.states,
            "state out of range"
        );
        self.transitions.insert(Transition {
            source,
            label,
            target,
        });
    }

    pub fn set_initial(&mut self, q: StateId) {
        assert!(q < self.states, "state out of range");
        self.initial.insert(q);
    }

    pub fn set_final(&mut self, q: StateId) {
        assert!(q < self.states, "state out of range");
        self.finals.insert(q);
    }

    pub fn clear_finals(&mut self) {
        self.finals.clear();
    }

    pub fn num_states(&self) -> usize {
        self.states
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    pub fn transitions(&self) -> impl Iterator<Item = &Transition<L>> {
        self.transitions.iter()
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_initial(&self, q: StateId) -> bool {
        self.initial.contains(&q)
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    /// Outgoing transitions per state, in insertion order.
    pub fn outgoing(&self) -> Vec<Vec<&Transition<L>>> {
        let mut out = vec![Vec::new(); self.states];
        for t in &self.transitions {
            out[t.source].push(t);
        }
        out
    }

    /// `|G|`: states plus transitions plus the written size of the labels.
    pub fn size(&self) -> usize {
        self.states
            + self
                .transitions
                .iter()
                .map(|t| 1 + t.label.to_string().len())
                .sum::<usize>()
    }

    pub fn check_labels(&self, gamma: &Alphabet) -> Result<()> {
        match self.transitions.iter().find(|t| !t.label.respects(gamma)) {
            None => Ok(()),
            Some(t) => Err(Error::invalid(format!(
                "label `{}` does not respect alphabet `{gamma}`",
                t.label
            ))),
        }
    }

    /// Relabels every transition; `None` drops the transition.
    pub fn filter_map_labels<M: Label>(
        &self,
        mut f: impl FnMut(&L) -> Option<M>,
    ) -> LabelledGraph<M> {
        let mut g = LabelledGraph {
            states: self.states,
            transitions: IndexSet::new(),
            initial: self.initial.clone(),
            finals: self.finals.clone(),
        };
        for t in &self.transitions {
            if let Some(label) = f(&t.label) {
                g.add_transition(t.source, label, t.target);
            }
        }
        g
    }

    pub fn map_labels<M: Label>(&self, mut f: impl FnMut(&L) -> M) -> LabelledGraph<M> {
        self.filter_map_labels(|l| Some(f(l)))
    }

    /// Copies `other` into `self` with shifted state ids; returns the offset.
    pub(crate) fn absorb(&mut self, other: &LabelledGraph<L>) -> StateId {
        let offset = self.states;
        self.states += other.states;
        for t in &other.transitions {
            self.add_transition(t.source + offset, t.label.clone(), t.target + offset);
        }
        offset
    }

    fn reachable(&self, from: impl IntoIterator<Item = StateId>, forward: bool) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.states];
        for t in &self.transitions {
            if forward {
                adj[t.source].push(t.target);
            } else {
                adj[t.target].push(t.source);
            }
        }
        let mut seen = vec![false; self.states];
        let mut queue: VecDeque<StateId> = VecDeque::new();
        for q in from {
            if !seen[q] {
                seen[q] = true;
                queue.push_back(q);
            }
        }
        while let Some(q) = queue.pop_front() {
            for &r in &adj[q] {
                if !seen[r] {
                    seen[r] = true;
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// True when some final state is reachable from an initial state.
    pub fn has_accepting_path(&self) -> bool {
        let fwd = self.reachable(self.initial.iter().copied(), true);
        self.finals.iter().any(|&f| fwd[f])
    }

    /// Keeps the useful states, plus one isolated state in `I ∩ F` if there
    /// is one. A graph with no accepting path becomes [`Self::empty_behaviour`].
    pub fn trim(&self) -> LabelledGraph<L> {
        let fwd = self.reachable(self.initial.iter().copied(), true);
        let bwd = self.reachable(self.finals.iter().copied(), false);
        let mut keep: Vec<bool> = (0..self.states).map(|q| fwd[q] && bwd[q]).collect();
        let mut touched = vec![false; self.states];
        for t in self
            .transitions
            .iter()
            .filter(|t| keep[t.source] && keep[t.target])
        {
            touched[t.source] = true;
            touched[t.target] = true;
        }
        let mut isolated_kept = false;
        for q in 0..self.states {
            if keep[q] && !touched[q] {
                // useful and isolated means q ∈ I ∩ F
                keep[q] = !isolated_kept;
                isolated_kept = true;
            }
        }
        if !keep.iter().any(|k| *k) {
            return Self::empty_behaviour();
        }
        let mut rename = vec![usize::MAX; self.states];
        let mut g = Self::new();
        for q in 0..self.states {
            if keep[q] {
                rename[q] = g.add_state();
            }
        }
        for t in &self.transitions {
            if keep[t.source] && keep[t.target] {
                g.add_transition(rename[t.source], t.label.clone(), rename[t.target]);
            }
        }
        for &q in &self.initial {
            if keep[q] {
                g.set_initial(rename[q]);
            }
        }
        for &q in &self.finals {
            if keep[q] {
                g.set_final(rename[q]);
            }
        }
        g
    }

    /// Adds a neutral self-loop on every state. Idempotent.
    pub fn add_neutral_loops(&self) -> LabelledGraph<L> {
        let mut g = self.clone();
        for q in 0..self.states {
            g.add_transition(q, L::neutral(), q);
        }
        g
    }

    /// Replaces every label by its monoid elements.
    pub fn expand(&self, gamma: &Alphabet) -> Result<LabelledGraph<L::Atom>> {
        self.check_labels(gamma)?;
        let mut g = LabelledGraph::<L::Atom>::new();
        g.add_states(self.states);
        for &q in &self.initial {
            g.set_initial(q);
        }
        for &q in &self.finals {
            g.set_final(q);
        }
        for t in &self.transitions {
            for a in t.label.atoms(gamma) {
                g.add_transition(t.source, a, t.target);
            }
        }
        Ok(g)
    }

    /// All elements of the behaviour whose measure is at most `max_len`.
    ///
    /// Words are measured by length, pairs by the longer component.
    pub fn behaviour(
        &self,
        gamma: &Alphabet,
        max_len: usize,
    ) -> Result<BTreeSet<<L::Atom as Atom>::Value>> {
        self.check_labels(gamma)?;
        Ok(behaviour::bounded(self, gamma, max_len))
    }
}
