use std::fmt;
use std::hash::Hash;

use crate::alphabet::{Alphabet, Letter, Symbol};
use crate::pairspec::{LetterPair, PairingSpec};
use crate::setspec::SetSpec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphKind {
    Nfa,
    NfaSetSpec,
    Transducer,
    TransducerSetSpec,
}

impl GraphKind {
    pub fn is_relation(self) -> bool {
        matches!(self, GraphKind::Transducer | GraphKind::TransducerSetSpec)
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Nfa => "nfa",
            GraphKind::NfaSetSpec => "nfa-setspec",
            GraphKind::Transducer => "transducer",
            GraphKind::TransducerSetSpec => "transducer-setspec",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A label domain: each label denotes a finite set of monoid elements.
pub trait Label: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display {
    /// The elements a label denotes once expanded.
    type Atom: Atom;

    const KIND: GraphKind;

    /// The label denoting only the neutral element.
    fn neutral() -> Self;

    fn is_neutral(&self) -> bool {
        *self == Self::neutral()
    }

    /// True when some side of the label is the empty word marker.
    fn has_eps_component(&self) -> bool;

    fn respects(&self, gamma: &Alphabet) -> bool;

    /// The denoted elements, in a fixed order.
    fn atoms(&self, gamma: &Alphabet) -> Vec<Self::Atom>;

    /// A deterministic element of the label, `None` if it denotes nothing.
    fn sample(&self, gamma: &Alphabet) -> Option<Self::Atom>;
}

/// Expanded labels: single letters or letter pairs.
pub trait Atom: Label<Atom = Self> + Copy {
    type Value: Clone + Eq + Ord + Hash + fmt::Debug;

    fn unit() -> Self::Value;
    fn append(value: &Self::Value, atom: Self) -> Self::Value;
    fn join(a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn measure(value: &Self::Value) -> usize;
}

impl Label for Letter {
    type Atom = Letter;
    const KIND: GraphKind = GraphKind::Nfa;

    fn neutral() -> Self {
        Letter::Eps
    }

    fn has_eps_component(&self) -> bool {
        *self == Letter::Eps
    }

    fn respects(&self, gamma: &Alphabet) -> bool {
        match self {
            Letter::Eps => true,
            Letter::Sym(s) => gamma.contains(*s),
        }
    }

    fn atoms(&self, _: &Alphabet) -> Vec<Letter> {
        vec![*self]
    }

    fn sample(&self, _: &Alphabet) -> Option<Letter> {
        Some(*self)
    }
}

impl Atom for Letter {
    type Value = Vec<Symbol>;

    fn unit() -> Vec<Symbol> {
        Vec::new()
    }

    fn append(value: &Vec<Symbol>, atom: Letter) -> Vec<Symbol> {
        let mut v = value.clone();
        if let Letter::Sym(s) = atom {
            v.push(s);
        }
        v
    }

    fn join(a: &Vec<Symbol>, b: &Vec<Symbol>) -> Vec<Symbol> {
        [a.as_slice(), b.as_slice()].concat()
    }

    fn measure(value: &Vec<Symbol>) -> usize {
        value.len()
    }
}

impl Label for LetterPair {
    type Atom = LetterPair;
    const KIND: GraphKind = GraphKind::Transducer;

    fn neutral() -> Self {
        LetterPair::new(Letter::Eps, Letter::Eps)
    }

    fn has_eps_component(&self) -> bool {
        self.input == Letter::Eps || self.output == Letter::Eps
    }

    fn respects(&self, gamma: &Alphabet) -> bool {
        self.input.respects(gamma) && self.output.respects(gamma)
    }

    fn atoms(&self, _: &Alphabet) -> Vec<LetterPair> {
        vec![*self]
    }

    fn sample(&self, _: &Alphabet) -> Option<LetterPair> {
        Some(*self)
    }
}

impl Atom for LetterPair {
    type Value = (Vec<Symbol>, Vec<Symbol>);

    fn unit() -> Self::Value {
        (Vec::new(), Vec::new())
    }

    fn append(value: &Self::Value, atom: LetterPair) -> Self::Value {
        (
            Letter::append(&value.0, atom.input),
            Letter::append(&value.1, atom.output),
        )
    }

    fn join(a: &Self::Value, b: &Self::Value) -> Self::Value {
        (Letter::join(&a.0, &b.0), Letter::join(&a.1, &b.1))
    }

    fn measure(value: &Self::Value) -> usize {
        value.0.len().max(value.1.len())
    }
}

impl Label for SetSpec {
    type Atom = Letter;
    const KIND: GraphKind = GraphKind::NfaSetSpec;

    fn neutral() -> Self {
        SetSpec::Eps
    }

    fn has_eps_component(&self) -> bool {
        self.is_eps()
    }

    fn respects(&self, gamma: &Alphabet) -> bool {
        SetSpec::respects(self, gamma)
    }

    fn atoms(&self, gamma: &Alphabet) -> Vec<Letter> {
        match self {
            SetSpec::Eps => vec![Letter::Eps],
            _ => self
                .symbols_unchecked(gamma)
                .into_iter()
                .map(Letter::Sym)
                .collect(),
        }
    }

    fn sample(&self, gamma: &Alphabet) -> Option<Letter> {
        Some(match self {
            SetSpec::Eps => Letter::Eps,
            _ => Letter::Sym(self.min_unchecked(gamma)),
        })
    }
}

impl Label for PairingSpec {
    type Atom = LetterPair;
    const KIND: GraphKind = GraphKind::TransducerSetSpec;

    fn neutral() -> Self {
        PairingSpec::EpsEps
    }

    fn has_eps_component(&self) -> bool {
        self.has_eps_side()
    }

    fn respects(&self, gamma: &Alphabet) -> bool {
        PairingSpec::respects(self, gamma)
    }

    fn atoms(&self, gamma: &Alphabet) -> Vec<LetterPair> {
        self.relation_unchecked(gamma).into_iter().collect()
    }

    fn sample(&self, gamma: &Alphabet) -> Option<LetterPair> {
        let side = |f: &SetSpec| f.sample(gamma).expect("set specs always sample");
        match self {
            PairingSpec::Same(f) => {
                let m = side(f);
                Some(LetterPair::new(m, m))
            }
            PairingSpec::Diff(f, g) => {
                let x = f.min_unchecked(gamma);
                if let Some(rest) = g.without(x, gamma) {
                    return Some(LetterPair::new(
                        Letter::Sym(x),
                        Letter::Sym(rest.min_unchecked(gamma)),
                    ));
                }
                // L(G) = {x}: the smallest pair is (x2, x) for the next input.
                let x2 = f.without(x, gamma)?.min_unchecked(gamma);
                Some(LetterPair::new(Letter::Sym(x2), Letter::Sym(x)))
            }
            _ => Some(LetterPair::new(side(&self.left()), side(&self.right_set()))),
        }
    }
}
