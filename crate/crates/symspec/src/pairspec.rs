//! Pairing specifications: labels that denote sets of letter pairs.
//!
//! | form       | syntax    | relation                         |
//! |------------|-----------|----------------------------------|
//! | `EpsEps`   | `\e/\e`   | {(ε, ε)}                         |
//! | `EpsTo`    | `\e/G`    | {ε} × L(G)                       |
//! | `ToEps`    | `F/\e`    | L(F) × {ε}                       |
//! | `Cross`    | `F/G`     | L(F) × L(G)                      |
//! | `Same`     | `F/=`     | {(f, f) : f ∈ L(F)}              |
//! | `Diff`     | `F/!G`    | {(f, g) ∈ L(F) × L(G) : f ≠ g}   |
//!
//! Components are never the empty word marker.

use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{Alphabet, Letter, SortedWord, Symbol};
use crate::error::{Error, Result};
use crate::setspec::SetSpec;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LetterPair {
    pub input: Letter,
    pub output: Letter,
}

impl LetterPair {
    pub fn new(input: Letter, output: Letter) -> LetterPair {
        LetterPair { input, output }
    }

    pub fn inverse(self) -> LetterPair {
        LetterPair::new(self.output, self.input)
    }
}

impl fmt::Display for LetterPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.input, self.output)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairingSpec {
    EpsEps,
    EpsTo(SetSpec),
    ToEps(SetSpec),
    Cross(SetSpec, SetSpec),
    Same(SetSpec),
    Diff(SetSpec, SetSpec),
}

/// The result of composing two pairing specs: parallel labels whose
/// relations are pairwise disjoint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DisjointSum(pub Vec<PairingSpec>);

impl fmt::Display for DisjointSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" (+) ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl PairingSpec {
    /// Builds `W/Z` from two sides, either of which may be `\e`.
    pub fn from_parts(left: SetSpec, right: SetSpec) -> PairingSpec {
        match (left.is_eps(), right.is_eps()) {
            (true, true) => PairingSpec::EpsEps,
            (true, false) => PairingSpec::EpsTo(right),
            (false, true) => PairingSpec::ToEps(left),
            (false, false) => PairingSpec::Cross(left, right),
        }
    }

    pub fn same(f: SetSpec) -> Result<PairingSpec> {
        non_eps(&f)?;
        Ok(PairingSpec::Same(f))
    }

    pub fn diff(f: SetSpec, g: SetSpec) -> Result<PairingSpec> {
        non_eps(&f)?;
        non_eps(&g)?;
        Ok(PairingSpec::Diff(f, g))
    }

    pub fn is_well_formed(&self) -> bool {
        self.components().iter().all(|c| !c.is_eps())
    }

    fn components(&self) -> Vec<&SetSpec> {
        match self {
            PairingSpec::EpsEps => vec![],
            PairingSpec::EpsTo(g) | PairingSpec::ToEps(g) | PairingSpec::Same(g) => vec![g],
            PairingSpec::Cross(f, g) | PairingSpec::Diff(f, g) => vec![f, g],
        }
    }

    pub fn inverse(&self) -> PairingSpec {
        use PairingSpec::*;
        match self {
            EpsEps => EpsEps,
            EpsTo(g) => ToEps(g.clone()),
            ToEps(f) => EpsTo(f.clone()),
            Cross(f, g) => Cross(g.clone(), f.clone()),
            Same(f) => Same(f.clone()),
            Diff(f, g) => Diff(g.clone(), f.clone()),
        }
    }

    /// The input side, `\e` when the label reads nothing.
    pub fn left(&self) -> SetSpec {
        use PairingSpec::*;
        match self {
            EpsEps | EpsTo(_) => SetSpec::Eps,
            ToEps(f) | Cross(f, _) | Same(f) | Diff(f, _) => f.clone(),
        }
    }

    /// The set spec describing the output side.
    pub fn right_set(&self) -> SetSpec {
        use PairingSpec::*;
        match self {
            EpsEps | ToEps(_) => SetSpec::Eps,
            EpsTo(g) | Cross(_, g) | Diff(_, g) => g.clone(),
            Same(f) => f.clone(),
        }
    }

    pub fn is_alphabet_invariant(&self) -> bool {
        self.components().iter().all(|c| matches!(c, SetSpec::All))
    }

    pub fn respects(&self, gamma: &Alphabet) -> bool {
        self.is_well_formed() && self.components().iter().all(|c| c.respects(gamma))
    }

    /// True when one side is the empty word marker.
    pub fn has_eps_side(&self) -> bool {
        matches!(
            self,
            PairingSpec::EpsEps | PairingSpec::EpsTo(_) | PairingSpec::ToEps(_)
        )
    }

    pub fn relation(&self, gamma: &Alphabet) -> Result<BTreeSet<LetterPair>> {
        if !self.respects(gamma) {
            return Err(Error::Precondition(format!(
                "`{self}` does not respect `{gamma}`"
            )));
        }
        Ok(self.relation_unchecked(gamma))
    }

    pub(crate) fn relation_unchecked(&self, gamma: &Alphabet) -> BTreeSet<LetterPair> {
        use PairingSpec::*;
        let syms = |f: &SetSpec| -> Vec<Letter> {
            match f {
                SetSpec::Eps => vec![Letter::Eps],
                _ => f
                    .symbols_unchecked(gamma)
                    .into_iter()
                    .map(Letter::Sym)
                    .collect(),
            }
        };
        match self {
            Same(f) => syms(f).into_iter().map(|x| LetterPair::new(x, x)).collect(),
            Diff(f, g) => {
                let gs = syms(g);
                syms(f)
                    .into_iter()
                    .flat_map(|x| {
                        gs.iter()
                            .filter(move |y| **y != x)
                            .map(move |y| LetterPair::new(x, *y))
                    })
                    .collect()
            }
            _ => {
                let gs = syms(&self.right_set());
                syms(&self.left())
                    .into_iter()
                    .flat_map(|x| gs.iter().map(move |y| LetterPair::new(x, *y)))
                    .collect()
            }
        }
    }

    pub fn is_empty_relation(&self, gamma: &Alphabet) -> bool {
        match self {
            PairingSpec::Diff(f, g) => {
                let a = f.singleton_unchecked(gamma);
                a.is_some() && a == g.singleton_unchecked(gamma)
            }
            _ => false,
        }
    }

    /// `p ▷ x`: the part of `p` whose input is the letter `x`.
    pub fn restrict_in(&self, x: Letter, gamma: &Alphabet) -> Option<PairingSpec> {
        use PairingSpec::*;
        let x = match x {
            Letter::Eps => return self.left().is_eps().then(|| self.clone()),
            Letter::Sym(x) => x,
        };
        if !self.left().member_unchecked(x) {
            return None;
        }
        let ex = SetSpec::symbol(x);
        match self {
            EpsEps | EpsTo(_) => None,
            ToEps(_) => Some(ToEps(ex)),
            Cross(_, g) => Some(Cross(ex, g.clone())),
            Same(_) => Some(Cross(ex.clone(), ex)),
            Diff(_, g) => g.without(x, gamma).map(|g| Cross(ex, g)),
        }
    }

    /// `p ▷ F` for a set spec `F`: the part of `p` whose input lies in L(F).
    pub fn restrict_in_spec(&self, f: &SetSpec, gamma: &Alphabet) -> Option<PairingSpec> {
        use PairingSpec::*;
        if f.is_eps() {
            return self.left().is_eps().then(|| self.clone());
        }
        let mid = self.left().meet(f, gamma)?;
        let out = match self {
            EpsEps | EpsTo(_) => return None,
            ToEps(_) => ToEps(mid),
            Cross(_, g) => Cross(mid, g.clone()),
            Same(_) => Same(mid),
            Diff(_, g) => Diff(mid, g.clone()),
        };
        (!out.is_empty_relation(gamma)).then_some(out)
    }

    pub fn restrict_out(&self, x: Letter, gamma: &Alphabet) -> Option<PairingSpec> {
        self.inverse().restrict_in(x, gamma).map(|p| p.inverse())
    }

    pub fn restrict_out_spec(&self, f: &SetSpec, gamma: &Alphabet) -> Option<PairingSpec> {
        self.inverse()
            .restrict_in_spec(f, gamma)
            .map(|p| p.inverse())
    }

    /// Composition `p1 ∘ p2`; `None` when the composed relation is empty.
    pub fn compose(&self, other: &PairingSpec, gamma: &Alphabet) -> Option<DisjointSum> {
        compose(self, other, gamma).map(DisjointSum)
    }
}

fn non_eps(f: &SetSpec) -> Result<()> {
    if f.is_eps() {
        Err(Error::invalid("a pairing spec component cannot be \\e"))
    } else {
        Ok(())
    }
}

fn compose(p1: &PairingSpec, p2: &PairingSpec, gamma: &Alphabet) -> Option<Vec<PairingSpec>> {
    use PairingSpec::*;
    let mid = p1.right_set().meet(&p2.left(), gamma)?;
    let one = |p: PairingSpec| Some(vec![p]);
    let plain = |p: &PairingSpec| !matches!(p, Same(_) | Diff(..));
    let not2 = |b1: Symbol, b2: Symbol| SetSpec::NotIn(SortedWord::from_symbols([b1, b2]).unwrap());

    if plain(p1) && plain(p2) {
        return one(PairingSpec::from_parts(p1.left(), p2.right_set()));
    }
    match (p1, p2) {
        (EpsTo(_) | Cross(..), Same(_)) => one(PairingSpec::from_parts(p1.left(), mid)),
        (EpsTo(_) | Cross(..), Diff(_, g)) => {
            let w = p1.left();
            if mid.card_unchecked(gamma) >= 2 {
                one(PairingSpec::from_parts(w, g.clone()))
            } else {
                let b = mid.singleton_unchecked(gamma)?;
                one(PairingSpec::from_parts(w, g.without(b, gamma)?))
            }
        }
        (Same(_), ToEps(_) | Cross(..)) => one(PairingSpec::from_parts(mid, p2.right_set())),
        (Same(_), Same(_)) => one(Same(mid)),
        (Same(_), Diff(_, g)) => {
            let s = g.singleton_unchecked(gamma);
            if s.is_some() && s == mid.singleton_unchecked(gamma) {
                None
            } else {
                one(Diff(mid, g.clone()))
            }
        }
        (Diff(a, _), ToEps(_) | Cross(..)) => {
            let z = p2.right_set();
            if mid.card_unchecked(gamma) >= 2 {
                one(PairingSpec::from_parts(a.clone(), z))
            } else {
                let b = mid.singleton_unchecked(gamma)?;
                one(PairingSpec::from_parts(a.without(b, gamma)?, z))
            }
        }
        (Diff(a, _), Same(_)) => {
            let s = a.singleton_unchecked(gamma);
            if s.is_some() && s == mid.singleton_unchecked(gamma) {
                None
            } else {
                one(Diff(a.clone(), mid))
            }
        }
        (Diff(a, _), Diff(_, g)) => match mid.card_unchecked(gamma) {
            n if n >= 3 => one(Cross(a.clone(), g.clone())),
            1 => {
                let b = mid.singleton_unchecked(gamma)?;
                one(Cross(a.without(b, gamma)?, g.without(b, gamma)?))
            }
            _ => {
                let (b1, b2) = mid.two_elements(gamma).ok()?;
                let mut terms = Vec::new();
                if let Some(a12) = a.meet(&not2(b1, b2), gamma) {
                    terms.push(Cross(a12, g.clone()));
                }
                for (x, y) in [(b1, b2), (b2, b1)] {
                    if a.member_unchecked(x) {
                        if let Some(gy) = g.without(y, gamma) {
                            terms.push(Cross(SetSpec::symbol(x), gy));
                        }
                    }
                }
                (!terms.is_empty()).then_some(terms)
            }
        },
        _ => None,
    }
}

impl fmt::Display for PairingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PairingSpec::*;
        match self {
            EpsEps => f.write_str("\\e/\\e"),
            EpsTo(g) => write!(f, "\\e/{g}"),
            ToEps(a) => write!(f, "{a}/\\e"),
            Cross(a, g) => write!(f, "{a}/{g}"),
            Same(a) => write!(f, "{a}/="),
            Diff(a, g) => write!(f, "{a}/!{g}"),
        }
    }
}

impl fmt::Debug for PairingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
