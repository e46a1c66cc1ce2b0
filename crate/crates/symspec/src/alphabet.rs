//! Symbols, sorted words and alphabets of reference.
//!
//! An alphabet of reference Γ is stored as its sorted symbol array, so set
//! specifications can be manipulated with merge-style scans and binary search.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Characters with a syntactic role in the text formats. They are never
/// symbols of a character-literal alphabet.
pub const METACHARS: &[char] = &[
    '\\', '@', '[', ']', '^', '/', '=', '!', '+', '*', '(', ')', '{', '}', '#',
];

pub fn is_metachar(c: char) -> bool {
    METACHARS.contains(&c)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn from_char(c: char) -> Symbol {
        Symbol(c as u32)
    }

    /// The character this symbol prints as, if it has a bare form.
    pub fn as_plain_char(self) -> Option<char> {
        char::from_u32(self.0).filter(|c| !c.is_whitespace() && !c.is_control() && !is_metachar(*c))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_plain_char() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{{{}}}", self.0),
        }
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A symbol or the empty word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Eps,
    Sym(Symbol),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Eps => f.write_str("\\e"),
            Letter::Sym(s) => write!(f, "{s}"),
        }
    }
}

/// Prints a word, with `\e` for the empty word.
pub fn show_word(w: &[Symbol]) -> String {
    if w.is_empty() {
        return "\\e".to_string();
    }
    w.iter().map(|s| s.to_string()).collect()
}

/// A strictly increasing, nonempty sequence of symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortedWord(Vec<Symbol>);

impl SortedWord {
    /// Accepts only words that are already sorted and duplicate free.
    pub fn new(symbols: Vec<Symbol>) -> Result<SortedWord> {
        if symbols.is_empty() {
            return Err(Error::invalid("empty symbol word"));
        }
        if symbols.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::invalid("symbol word is not strictly increasing"));
        }
        Ok(SortedWord(symbols))
    }

    /// `wo`: sorts and removes duplicates.
    pub fn from_symbols(symbols: impl IntoIterator<Item = Symbol>) -> Result<SortedWord> {
        let mut v: Vec<Symbol> = symbols.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SortedWord::new(v)
    }

    pub fn single(s: Symbol) -> SortedWord {
        SortedWord(vec![s])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.0.binary_search(&s).is_ok()
    }

    pub fn first(&self) -> Symbol {
        self.0[0]
    }

    /// `al(u) ∩ al(v)`, or `None` when empty.
    pub fn intersection(&self, other: &SortedWord) -> Option<SortedWord> {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        (!out.is_empty()).then_some(SortedWord(out))
    }

    pub fn union(&self, other: &SortedWord) -> SortedWord {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SortedWord(out)
    }

    /// `al(u) \ al(v)`, or `None` when empty.
    pub fn difference(&self, other: &SortedWord) -> Option<SortedWord> {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() {
            if j >= b.len() || a[i] < b[j] {
                out.push(a[i]);
                i += 1;
            } else if a[i] > b[j] {
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        (!out.is_empty()).then_some(SortedWord(out))
    }
}

impl fmt::Display for SortedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SortedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// An alphabet of reference: at least two symbols, sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet(SortedWord);

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Result<Alphabet> {
        let w = SortedWord::from_symbols(symbols)?;
        if w.len() < 2 {
            return Err(Error::invalid("an alphabet needs at least two symbols"));
        }
        Ok(Alphabet(w))
    }

    /// The numeric alphabet {0, …, n-1}.
    pub fn numeric(n: u32) -> Result<Alphabet> {
        Alphabet::new((0..n).map(Symbol))
    }

    /// Each character is one symbol; `{n}` denotes the symbol with code n.
    pub fn from_chars(chars: &str) -> Result<Alphabet> {
        let mut symbols = Vec::new();
        let mut it = chars.chars().filter(|c| !c.is_whitespace());
        while let Some(c) = it.next() {
            if c == '{' {
                let digits: String = it.by_ref().take_while(|c| *c != '}').collect();
                let code = digits
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad numeric symbol `{{{digits}}}`")))?;
                symbols.push(Symbol(code));
            } else if is_metachar(c) {
                return Err(Error::invalid(format!(
                    "`{c}` is reserved and cannot be a symbol"
                )));
            } else {
                symbols.push(Symbol::from_char(c));
            }
        }
        Alphabet::new(symbols)
    }

    /// Parses `#n` or a string of characters.
    pub fn parse(literal: &str) -> Result<Alphabet> {
        let literal = literal.trim();
        match literal.strip_prefix('#') {
            Some(n) => {
                let n: u32 = n
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad numeric alphabet `{literal}`")))?;
                Alphabet::numeric(n)
            }
            None => Alphabet::from_chars(literal),
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        self.0.symbols()
    }

    pub fn as_word(&self) -> &SortedWord {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.0.contains(s)
    }

    pub fn contains_word(&self, w: &SortedWord) -> bool {
        w.symbols().iter().all(|s| self.contains(*s))
    }

    /// The literal used in file headers.
    pub fn literal(&self) -> String {
        let syms = self.symbols();
        let numeric = syms.iter().enumerate().all(|(i, s)| s.0 == i as u32);
        if numeric && syms.iter().any(|s| s.as_plain_char().is_none()) {
            return format!("#{}", syms.len());
        }
        self.0.to_string()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// Returns the least symbol of Γ that does not occur in `w`.
///
/// Requires `w ⊆ Γ` and `0 < |w| < |Γ|`.
pub fn out_of(w: &SortedWord, gamma: &Alphabet) -> Result<Symbol> {
    if w.len() >= gamma.len() || !gamma.contains_word(w) {
        return Err(Error::Precondition(format!(
            "out_of needs a proper subset of the alphabet, got {w}"
        )));
    }
    Ok(out_of_unchecked(w.symbols(), gamma.symbols()))
}

pub(crate) fn out_of_unchecked(w: &[Symbol], garr: &[Symbol]) -> Symbol {
    let mut i = 0;
    while i < w.len() && garr[i] == w[i] {
        i += 1;
    }
    garr[i]
}
