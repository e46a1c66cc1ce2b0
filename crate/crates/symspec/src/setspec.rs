//! Set specifications: `\e`, `@`, `[w]` and `[^w]`.
//!
//! A set spec names a set of symbols without listing the alphabet of
//! reference. Intersection never looks at Γ. Everything that asks about the
//! denoted set (membership, cardinality, a sample element) takes Γ
//! explicitly.

use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{out_of_unchecked, Alphabet, Letter, SortedWord, Symbol};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetSpec {
    /// The empty word marker.
    Eps,
    /// Every symbol of Γ.
    All,
    /// The listed symbols.
    In(SortedWord),
    /// Γ minus the listed symbols.
    NotIn(SortedWord),
}

impl SetSpec {
    pub fn symbol(s: Symbol) -> SetSpec {
        SetSpec::In(SortedWord::single(s))
    }

    pub fn is_eps(&self) -> bool {
        matches!(self, SetSpec::Eps)
    }

    /// Alphabet-free intersection; `None` stands for the undefined result.
    pub fn intersect(&self, other: &SetSpec) -> Option<SetSpec> {
        use SetSpec::*;
        match (self, other) {
            (Eps, Eps) => Some(Eps),
            (Eps, _) | (_, Eps) => None,
            (All, f) | (f, All) => Some(f.clone()),
            (In(u), In(v)) => u.intersection(v).map(In),
            (NotIn(u), NotIn(v)) => Some(NotIn(u.union(v))),
            (In(u), NotIn(v)) | (NotIn(v), In(u)) => u.difference(v).map(In),
        }
    }

    fn word(&self) -> Option<&SortedWord> {
        match self {
            SetSpec::In(w) | SetSpec::NotIn(w) => Some(w),
            _ => None,
        }
    }

    /// True when the spec is usable over Γ without normalization.
    pub fn respects(&self, gamma: &Alphabet) -> bool {
        match self.word() {
            None => true,
            Some(w) => w.len() < gamma.len() && gamma.contains_word(w),
        }
    }

    /// Rewrites a spec whose word covers all of Γ.
    ///
    /// `Ok(None)` means the spec denotes the empty set.
    pub fn normalize(self, gamma: &Alphabet) -> Result<Option<SetSpec>> {
        if let Some(w) = self.word() {
            if !gamma.contains_word(w) {
                return Err(Error::invalid(format!(
                    "`{self}` mentions symbols outside `{gamma}`"
                )));
            }
        }
        Ok(self.normalize_unchecked(gamma))
    }

    pub(crate) fn normalize_unchecked(self, gamma: &Alphabet) -> Option<SetSpec> {
        match self {
            SetSpec::In(w) if w.len() == gamma.len() => Some(SetSpec::All),
            SetSpec::NotIn(w) if w.len() == gamma.len() => None,
            f => Some(f),
        }
    }

    /// Intersection followed by normalization.
    pub fn meet(&self, other: &SetSpec, gamma: &Alphabet) -> Option<SetSpec> {
        self.intersect(other)?.normalize_unchecked(gamma)
    }

    fn check(&self, gamma: &Alphabet) -> Result<()> {
        if self.respects(gamma) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "`{self}` does not respect `{gamma}`"
            )))
        }
    }

    fn check_symbolic(&self, gamma: &Alphabet) -> Result<()> {
        if self.is_eps() {
            return Err(Error::Precondition(
                "the empty word marker denotes no symbols".into(),
            ));
        }
        self.check(gamma)
    }

    /// The denoted language: `{ε}` or a set of one-letter words.
    pub fn language(&self, gamma: &Alphabet) -> Result<BTreeSet<Letter>> {
        self.check(gamma)?;
        Ok(match self {
            SetSpec::Eps => BTreeSet::from([Letter::Eps]),
            _ => self
                .symbols_unchecked(gamma)
                .into_iter()
                .map(Letter::Sym)
                .collect(),
        })
    }

    pub(crate) fn symbols_unchecked(&self, gamma: &Alphabet) -> Vec<Symbol> {
        match self {
            SetSpec::Eps => Vec::new(),
            SetSpec::All => gamma.symbols().to_vec(),
            SetSpec::In(w) => w.symbols().to_vec(),
            SetSpec::NotIn(w) => gamma
                .symbols()
                .iter()
                .copied()
                .filter(|s| !w.contains(*s))
                .collect(),
        }
    }

    pub fn member(&self, g: Symbol, gamma: &Alphabet) -> Result<bool> {
        self.check_symbolic(gamma)?;
        if !gamma.contains(g) {
            return Err(Error::Precondition(format!("`{g}` is not in `{gamma}`")));
        }
        Ok(self.member_unchecked(g))
    }

    pub(crate) fn member_unchecked(&self, g: Symbol) -> bool {
        match self {
            SetSpec::Eps => false,
            SetSpec::All => true,
            SetSpec::In(w) => w.contains(g),
            SetSpec::NotIn(w) => !w.contains(g),
        }
    }

    pub(crate) fn card_unchecked(&self, gamma: &Alphabet) -> usize {
        match self {
            SetSpec::Eps => 0,
            SetSpec::All => gamma.len(),
            SetSpec::In(w) => w.len(),
            SetSpec::NotIn(w) => gamma.len() - w.len(),
        }
    }

    /// `|L(F)| >= k`.
    pub fn card_at_least(&self, k: usize, gamma: &Alphabet) -> Result<bool> {
        self.check_symbolic(gamma)?;
        Ok(self.card_unchecked(gamma) >= k)
    }

    /// The single element of L(F), if L(F) is a singleton.
    pub fn singleton_value(&self, gamma: &Alphabet) -> Result<Option<Symbol>> {
        self.check_symbolic(gamma)?;
        Ok(self.singleton_unchecked(gamma))
    }

    pub(crate) fn singleton_unchecked(&self, gamma: &Alphabet) -> Option<Symbol> {
        match self {
            SetSpec::In(w) if w.len() == 1 => Some(w.first()),
            SetSpec::NotIn(w) if w.len() + 1 == gamma.len() => {
                Some(out_of_unchecked(w.symbols(), gamma.symbols()))
            }
            _ => None,
        }
    }

    /// The least element of L(F).
    pub fn some_element(&self, gamma: &Alphabet) -> Result<Symbol> {
        self.check_symbolic(gamma)?;
        Ok(self.min_unchecked(gamma))
    }

    pub(crate) fn min_unchecked(&self, gamma: &Alphabet) -> Symbol {
        match self {
            SetSpec::Eps => unreachable!("no element in the empty word marker"),
            SetSpec::All => gamma.symbols()[0],
            SetSpec::In(w) => w.first(),
            SetSpec::NotIn(w) => out_of_unchecked(w.symbols(), gamma.symbols()),
        }
    }

    /// The two least elements of L(F); requires `|L(F)| >= 2`.
    pub fn two_elements(&self, gamma: &Alphabet) -> Result<(Symbol, Symbol)> {
        if !self.card_at_least(2, gamma)? {
            return Err(Error::Precondition(format!(
                "`{self}` has fewer than two elements"
            )));
        }
        let g1 = self.min_unchecked(gamma);
        let rest = self
            .meet(&SetSpec::NotIn(SortedWord::single(g1)), gamma)
            .expect("a second element exists");
        Ok((g1, rest.min_unchecked(gamma)))
    }

    /// `F ∩ /∃x`, normalized.
    pub(crate) fn without(&self, x: Symbol, gamma: &Alphabet) -> Option<SetSpec> {
        self.meet(&SetSpec::NotIn(SortedWord::single(x)), gamma)
    }
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetSpec::Eps => f.write_str("\\e"),
            SetSpec::All => f.write_str("@"),
            SetSpec::In(w) => write!(f, "[{w}]"),
            SetSpec::NotIn(w) => write!(f, "[^{w}]"),
        }
    }
}

impl fmt::Debug for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
