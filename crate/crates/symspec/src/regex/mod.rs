//! Regular expressions whose leaves are set specs or pairing specs.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor factor*
//! factor := atom '*'*
//! atom   := '(' expr ')' | '\0' | '\e' | label
//! ```
//!
//! In relation expressions `\e/\e` (or a bare `\e`) is the neutral leaf.
//! `\0` may only be the whole expression.

mod convert;
mod derivative;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Label;
use crate::pairspec::PairingSpec;
use crate::setspec::SetSpec;
use crate::syntax::{Cursor, SResult, SyntaxError};

pub use convert::{state_eliminate, thompson};
pub use derivative::{deriv_label, LinearForm};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Regex<L> {
    EmptySet,
    Neutral,
    Label(L),
    Union(Box<Regex<L>>, Box<Regex<L>>),
    Concat(Box<Regex<L>>, Box<Regex<L>>),
    Star(Box<Regex<L>>),
}

impl<L: Label> Regex<L> {
    pub fn label(l: L) -> Regex<L> {
        if l.is_neutral() {
            Regex::Neutral
        } else {
            Regex::Label(l)
        }
    }

    /// `a + b`, dropping `\0` operands and identical duplicates.
    pub fn union(a: Regex<L>, b: Regex<L>) -> Regex<L> {
        match (a, b) {
            (Regex::EmptySet, x) | (x, Regex::EmptySet) => x,
            (a, b) if a == b => a,
            (a, b) => Regex::Union(Box::new(a), Box::new(b)),
        }
    }

    /// `a b`, dropping neutral factors and keeping concatenation left-nested.
    pub fn concat(a: Regex<L>, b: Regex<L>) -> Regex<L> {
        match (a, b) {
            (Regex::EmptySet, _) | (_, Regex::EmptySet) => Regex::EmptySet,
            (Regex::Neutral, x) | (x, Regex::Neutral) => x,
            (a, Regex::Concat(b1, b2)) => Regex::concat(Regex::concat(a, *b1), *b2),
            (a, b) => Regex::Concat(Box::new(a), Box::new(b)),
        }
    }

    pub fn star(a: Regex<L>) -> Regex<L> {
        match a {
            Regex::EmptySet | Regex::Neutral => Regex::Neutral,
            s @ Regex::Star(_) => s,
            a => Regex::Star(Box::new(a)),
        }
    }

    /// True iff the neutral element belongs to the behaviour.
    pub fn is_nullable(&self) -> bool {
        match self {
            Regex::Neutral | Regex::Star(_) => true,
            Regex::EmptySet | Regex::Label(_) => false,
            Regex::Union(a, b) => a.is_nullable() || b.is_nullable(),
            Regex::Concat(a, b) => a.is_nullable() && b.is_nullable(),
        }
    }

    /// `const(r)`: `Neutral` or `EmptySet`.
    pub fn constant(&self) -> Regex<L> {
        if self.is_nullable() {
            Regex::Neutral
        } else {
            Regex::EmptySet
        }
    }

    /// `||r||`: the number of label occurrences.
    pub fn alphabetic_size(&self) -> usize {
        match self {
            Regex::EmptySet | Regex::Neutral => 0,
            Regex::Label(_) => 1,
            Regex::Union(a, b) | Regex::Concat(a, b) => a.alphabetic_size() + b.alphabetic_size(),
            Regex::Star(a) => a.alphabetic_size(),
        }
    }

    /// Number of union, concatenation and star nodes.
    pub fn operator_count(&self) -> usize {
        match self {
            Regex::EmptySet | Regex::Neutral | Regex::Label(_) => 0,
            Regex::Union(a, b) | Regex::Concat(a, b) => 1 + a.operator_count() + b.operator_count(),
            Regex::Star(a) => 1 + a.operator_count(),
        }
    }

    pub fn labels(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels<'a>(&'a self, out: &mut Vec<&'a L>) {
        match self {
            Regex::EmptySet | Regex::Neutral => {}
            Regex::Label(l) => out.push(l),
            Regex::Union(a, b) | Regex::Concat(a, b) => {
                a.collect_labels(out);
                b.collect_labels(out);
            }
            Regex::Star(a) => a.collect_labels(out),
        }
    }

    fn contains_empty_set(&self) -> bool {
        match self {
            Regex::EmptySet => true,
            Regex::Neutral | Regex::Label(_) => false,
            Regex::Union(a, b) | Regex::Concat(a, b) => {
                a.contains_empty_set() || b.contains_empty_set()
            }
            Regex::Star(a) => a.contains_empty_set(),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        let (own, open) = match self {
            Regex::Union(..) => (0, prec > 0),
            Regex::Concat(..) => (1, prec > 1),
            _ => (3, false),
        };
        if open {
            f.write_str("(")?;
        }
        match self {
            Regex::EmptySet => f.write_str("\\0")?,
            Regex::Neutral => write!(f, "{}", L::neutral())?,
            Regex::Label(l) => write!(f, "{l}")?,
            Regex::Union(a, b) => {
                a.fmt_prec(f, own)?;
                f.write_str("+")?;
                b.fmt_prec(f, own + 1)?;
            }
            Regex::Concat(a, b) => {
                a.fmt_prec(f, own)?;
                b.fmt_prec(f, own + 1)?;
            }
            Regex::Star(a) => {
                a.fmt_prec(f, 3)?;
                f.write_str("*")?;
            }
        }
        if open {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl<L: Label> fmt::Display for Regex<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl Regex<SetSpec> {
    pub fn parse(text: &str) -> Result<Regex<SetSpec>> {
        parse_with(text, |c| {
            let l = c.set_spec()?;
            Ok(if l.is_eps() { None } else { Some(l) })
        })
    }
}

impl Regex<PairingSpec> {
    pub fn parse(text: &str) -> Result<Regex<PairingSpec>> {
        parse_with(text, |c| {
            let left = c.set_spec()?;
            if !c.eat('/') {
                if left.is_eps() {
                    return Ok(None);
                }
                return c.error("expected `/`");
            }
            let p = c.pairing_rest(left)?;
            Ok(if p.is_neutral() { None } else { Some(p) })
        })
    }
}

type LeafParser<L> = fn(&mut Cursor) -> SResult<Option<L>>;

struct Parser<L> {
    c: Cursor,
    leaf: LeafParser<L>,
    empty_at: Option<usize>,
}

fn parse_with<L: Label>(text: &str, leaf: LeafParser<L>) -> Result<Regex<L>> {
    let mut p = Parser {
        c: Cursor::new(text),
        leaf,
        empty_at: None,
    };
    let run = |p: &mut Parser<L>| -> SResult<Regex<L>> {
        let r = p.expr()?;
        p.ws();
        p.c.expect_end()?;
        Ok(r)
    };
    let r = run(&mut p).map_err(|e| e.into_error(1, text))?;
    if let (Some(pos), true) = (p.empty_at, r != Regex::EmptySet) {
        return Err(SyntaxError {
            pos,
            message: "`\\0` cannot occur inside a larger expression".into(),
        }
        .into_error(1, text));
    }
    debug_assert!(r == Regex::EmptySet || !r.contains_empty_set());
    Ok(r)
}

impl<L: Label> Parser<L> {
    fn ws(&mut self) {
        self.c.skip_ws();
    }

    fn expr(&mut self) -> SResult<Regex<L>> {
        let mut r = self.term()?;
        loop {
            self.ws();
            if !self.c.eat('+') {
                return Ok(r);
            }
            let s = self.term()?;
            r = Regex::Union(Box::new(r), Box::new(s));
        }
    }

    fn term(&mut self) -> SResult<Regex<L>> {
        let mut r = self.factor()?;
        loop {
            self.ws();
            match self.c.peek() {
                None | Some('+') | Some(')') => return Ok(r),
                _ => {
                    let s = self.factor()?;
                    r = Regex::Concat(Box::new(r), Box::new(s));
                }
            }
        }
    }

    fn factor(&mut self) -> SResult<Regex<L>> {
        let mut r = self.atom()?;
        loop {
            self.ws();
            if !self.c.eat('*') {
                return Ok(r);
            }
            r = Regex::Star(Box::new(r));
        }
    }

    fn atom(&mut self) -> SResult<Regex<L>> {
        self.ws();
        match self.c.peek() {
            Some('(') => {
                self.c.bump();
                let r = self.expr()?;
                self.ws();
                if !self.c.eat(')') {
                    return self.c.error("expected `)`");
                }
                Ok(r)
            }
            Some('\\') if self.c.peek2() == Some('0') => {
                self.empty_at.get_or_insert(self.c.pos());
                self.c.bump();
                self.c.bump();
                Ok(Regex::EmptySet)
            }
            None | Some(')') | Some('+') | Some('*') => self.c.error("expected an expression"),
            _ => Ok(match (self.leaf)(&mut self.c)? {
                None => Regex::Neutral,
                Some(l) => Regex::Label(l),
            }),
        }
    }
}

impl std::str::FromStr for Regex<SetSpec> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Regex::<SetSpec>::parse(s)
    }
}

impl std::str::FromStr for Regex<PairingSpec> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Regex::<PairingSpec>::parse(s)
    }
}
