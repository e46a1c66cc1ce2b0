//! Transducers with pairing-spec labels.

mod builtin;
mod identity;

use std::fmt;

use crate::alphabet::{show_word, Alphabet, Letter, Symbol};
use crate::error::{Error, Result};
use crate::graph::{
    self, Composition, Label, LabelOp, LabelledGraph, RestrictInput, RestrictOutput,
};
use crate::nfa;
use crate::pairspec::{LetterPair, PairingSpec};
use crate::setspec::SetSpec;

pub use builtin::{builtin, BUILTIN_NAMES};
pub use identity::{
    identity_precheck, is_functional, realizes_identity, standard_identity, Condition,
};

pub type SpecTransducer = LabelledGraph<PairingSpec>;

/// A transducer whose labels mention no particular symbols, so it can be
/// bound to any alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantTransducer(SpecTransducer);

impl InvariantTransducer {
    pub fn new(t: SpecTransducer) -> Result<InvariantTransducer> {
        if let Some(tr) = t.transitions().find(|tr| !tr.label.is_alphabet_invariant()) {
            return Err(Error::invalid(format!(
                "label `{}` is not alphabet invariant",
                tr.label
            )));
        }
        Ok(InvariantTransducer(t))
    }

    pub fn graph(&self) -> &SpecTransducer {
        &self.0
    }

    /// `T[Γ]`.
    pub fn gamma_version(&self, _gamma: &Alphabet) -> SpecTransducer {
        self.0.clone()
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WitnessPair {
    pub input: Vec<Symbol>,
    pub output: Vec<Symbol>,
}

impl fmt::Display for WitnessPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}", show_word(&self.input), show_word(&self.output))
    }
}

impl From<(Vec<Symbol>, Vec<Symbol>)> for WitnessPair {
    fn from((input, output): (Vec<Symbol>, Vec<Symbol>)) -> WitnessPair {
        WitnessPair { input, output }
    }
}

pub fn inverse_t(t: &SpecTransducer) -> SpecTransducer {
    t.map_labels(PairingSpec::inverse)
}

/// Reads an ordinary transducer as one with pairing specs.
pub fn from_letter_pairs(t: &LabelledGraph<LetterPair>) -> SpecTransducer {
    let side = |l: Letter| match l {
        Letter::Eps => SetSpec::Eps,
        Letter::Sym(s) => SetSpec::symbol(s),
    };
    t.map_labels(|p| PairingSpec::from_parts(side(p.input), side(p.output)))
}

/// Drops labels denoting no pair, then trims.
pub(crate) fn prune(t: &SpecTransducer, gamma: &Alphabet) -> SpecTransducer {
    t.filter_map_labels(|p| (!p.is_empty_relation(gamma)).then(|| p.clone()))
        .trim()
}

pub fn non_empty_witness_pair(t: &SpecTransducer, gamma: &Alphabet) -> Result<Option<WitnessPair>> {
    t.check_labels(gamma)?;
    Ok(graph::witness(t, gamma).map(WitnessPair::from))
}

/// `t ▷ A`: the pairs of `t` whose input is in `L(A)`.
pub fn restrict_input<A: Label>(
    t: &SpecTransducer,
    a: &LabelledGraph<A>,
    gamma: &Alphabet,
) -> Result<SpecTransducer>
where
    for<'a> RestrictInput<'a>: LabelOp<PairingSpec, A, Output = PairingSpec>,
{
    t.check_labels(gamma)?;
    a.check_labels(gamma)?;
    Ok(graph::product(&prune(t, gamma), &a.trim(), &RestrictInput(gamma)).trim())
}

/// The pairs of `t` whose output is in `L(A)`.
pub fn restrict_output<A: Label>(
    t: &SpecTransducer,
    a: &LabelledGraph<A>,
    gamma: &Alphabet,
) -> Result<SpecTransducer>
where
    for<'a> RestrictOutput<'a>: LabelOp<PairingSpec, A, Output = PairingSpec>,
{
    t.check_labels(gamma)?;
    a.check_labels(gamma)?;
    Ok(graph::product(&prune(t, gamma), &a.trim(), &RestrictOutput(gamma)).trim())
}

pub fn pair_member(
    u: &[Symbol],
    v: &[Symbol],
    t: &SpecTransducer,
    gamma: &Alphabet,
) -> Result<bool> {
    let au = nfa::line_automaton(u, gamma)?;
    let av = nfa::line_automaton(v, gamma)?;
    let r = restrict_output(&restrict_input(t, &au, gamma)?, &av, gamma)?;
    Ok(graph::witness(&r, gamma).is_some())
}

/// `t ∘ s`: feeds the output of `t` into `s`.
pub fn compose_t(
    t: &SpecTransducer,
    s: &SpecTransducer,
    gamma: &Alphabet,
) -> Result<SpecTransducer> {
    t.check_labels(gamma)?;
    s.check_labels(gamma)?;
    Ok(graph::product(&prune(t, gamma), &prune(s, gamma), &Composition(gamma)).trim())
}

/// Looks for `(u, v)` with `u, v ∈ L(A)`, `v ∈ t(u)`. `None` means `L(A)` is
/// independent with respect to `t`. `t` must never map a word to itself.
pub fn satisfies_property<A: Label>(
    t: &SpecTransducer,
    a: &LabelledGraph<A>,
    gamma: &Alphabet,
) -> Result<Option<WitnessPair>>
where
    for<'a> RestrictInput<'a>: LabelOp<PairingSpec, A, Output = PairingSpec>,
    for<'a> RestrictOutput<'a>: LabelOp<PairingSpec, A, Output = PairingSpec>,
{
    let r = restrict_output(&restrict_input(t, a, gamma)?, a, gamma)?;
    let w = non_empty_witness_pair(&r, gamma)?;
    if let Some(w) = &w {
        if w.input == w.output {
            return Err(Error::Precondition(format!(
                "transducer relates `{}` to itself, so it is not input-altering",
                show_word(&w.input)
            )));
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests;
