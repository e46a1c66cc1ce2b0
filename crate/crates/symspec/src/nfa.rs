//! Automata with set specs: witnesses, emptiness, intersection, membership.

use crate::alphabet::{Alphabet, Letter, Symbol};
use crate::error::{Error, Result};
use crate::graph::{self, Intersection, LabelledGraph};
use crate::setspec::SetSpec;

pub type SpecNfa = LabelledGraph<SetSpec>;

/// Some accepted word, found by breadth-first search, or `None` if the
/// language is empty. Each label contributes its least symbol.
pub fn non_empty_witness(b: &SpecNfa, gamma: &Alphabet) -> Result<Option<Vec<Symbol>>> {
    b.check_labels(gamma)?;
    Ok(graph::witness(b, gamma))
}

/// Every set-spec label that respects Γ denotes a nonempty set, so emptiness
/// is plain reachability.
pub fn is_empty(b: &SpecNfa) -> bool {
    !b.has_accepting_path()
}

pub fn intersect(b: &SpecNfa, c: &SpecNfa, gamma: &Alphabet) -> Result<SpecNfa> {
    b.check_labels(gamma)?;
    c.check_labels(gamma)?;
    Ok(graph::product(&b.trim(), &c.trim(), &Intersection(gamma)).trim())
}

/// The automaton accepting exactly `w`, one `[w_i]` transition per symbol.
pub fn line_automaton(w: &[Symbol], gamma: &Alphabet) -> Result<SpecNfa> {
    if let Some(s) = w.iter().find(|s| !gamma.contains(**s)) {
        return Err(Error::invalid(format!("symbol `{s}` is not in `{gamma}`")));
    }
    let mut g = LabelledGraph::new();
    let states = g.add_states(w.len() + 1);
    for (i, s) in w.iter().enumerate() {
        g.add_transition(states.start + i, SetSpec::symbol(*s), states.start + i + 1);
    }
    g.set_initial(states.start);
    g.set_final(states.end - 1);
    Ok(g)
}

pub fn member(w: &[Symbol], b: &SpecNfa, gamma: &Alphabet) -> Result<bool> {
    let line = line_automaton(w, gamma)?;
    Ok(!is_empty(&intersect(&line, b, gamma)?))
}

/// Reads an ordinary ε-NFA as an automaton with set specs.
pub fn from_letters(g: &LabelledGraph<Letter>) -> SpecNfa {
    g.map_labels(|l| match l {
        Letter::Eps => SetSpec::Eps,
        Letter::Sym(s) => SetSpec::symbol(*s),
    })
}
