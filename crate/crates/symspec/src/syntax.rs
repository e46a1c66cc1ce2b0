//! Text syntax of symbols, letters and labels.
//!
//! ```text
//! symbol   := plain character | '{' digits '}'
//! setspec  := '\e' | '@' | '[' symbol+ ']' | '[^' symbol+ ']' | symbol
//! pairspec := side '/' ( '=' | '!' setspec | side )
//! side     := '\e' | setspec
//! ```

use std::str::FromStr;

use crate::alphabet::{is_metachar, Letter, SortedWord, Symbol};
use crate::error::Error;
use crate::pairspec::{LetterPair, PairingSpec};
use crate::setspec::SetSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SyntaxError {
    pub pos: usize,
    pub message: String,
}

impl SyntaxError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        SyntaxError {
            pos,
            message: message.into(),
        }
    }

    /// Converts to the public error, quoting the text from the failure onward.
    pub fn into_error(self, line: usize, text: &str) -> Error {
        let rest: String = text.chars().skip(self.pos).take(16).collect();
        let token = if rest.is_empty() {
            "<end>".to_string()
        } else {
            rest
        };
        Error::parse(line, token, self.message)
    }
}

pub(crate) type SResult<T> = std::result::Result<T, SyntaxError>;

pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Cursor {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).copied()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    pub fn error<T>(&self, message: impl Into<String>) -> SResult<T> {
        Err(SyntaxError::new(self.pos, message))
    }

    pub fn expect_end(&self) -> SResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.error("unexpected trailing text")
        }
    }

    pub fn at_symbol(&self) -> bool {
        match self.peek() {
            Some('{') => true,
            Some(c) => !c.is_whitespace() && !is_metachar(c),
            None => false,
        }
    }

    pub fn at_eps(&self) -> bool {
        self.peek() == Some('\\') && self.peek2() == Some('e')
    }

    pub fn symbol(&mut self) -> SResult<Symbol> {
        if self.eat('{') {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let code = digits
                .parse()
                .or_else(|_| self.error("expected a numeric symbol code"))?;
            if !self.eat('}') {
                return self.error("expected `}`");
            }
            return Ok(Symbol(code));
        }
        if self.at_symbol() {
            let c = self.bump().unwrap();
            return Ok(Symbol::from_char(c));
        }
        self.error("expected a symbol")
    }

    pub fn letter(&mut self) -> SResult<Letter> {
        if self.at_eps() {
            self.pos += 2;
            return Ok(Letter::Eps);
        }
        self.symbol().map(Letter::Sym)
    }

    pub fn set_spec(&mut self) -> SResult<SetSpec> {
        if self.at_eps() {
            self.pos += 2;
            return Ok(SetSpec::Eps);
        }
        if self.eat('@') {
            return Ok(SetSpec::All);
        }
        if self.eat('[') {
            let negated = self.eat('^');
            let mut syms = Vec::new();
            while !self.eat(']') {
                if self.at_end() {
                    return self.error("unterminated class");
                }
                syms.push(self.symbol()?);
            }
            if syms.is_empty() {
                return Err(SyntaxError::new(self.pos - 1, "empty class"));
            }
            let w = SortedWord::from_symbols(syms).expect("nonempty");
            return Ok(if negated {
                SetSpec::NotIn(w)
            } else {
                SetSpec::In(w)
            });
        }
        if self.at_symbol() {
            return self.symbol().map(SetSpec::symbol);
        }
        self.error("expected a set spec")
    }

    /// Parses the part after `/` given the left side.
    pub fn pairing_rest(&mut self, left: SetSpec) -> SResult<PairingSpec> {
        let start = self.pos;
        if self.eat('=') {
            if left.is_eps() {
                return Err(SyntaxError::new(start, "`=` needs a set spec on the left"));
            }
            return Ok(PairingSpec::Same(left));
        }
        if self.eat('!') {
            let right = self.set_spec()?;
            if left.is_eps() || right.is_eps() {
                return Err(SyntaxError::new(start, "`!` needs set specs on both sides"));
            }
            return Ok(PairingSpec::Diff(left, right));
        }
        let right = self.set_spec()?;
        Ok(PairingSpec::from_parts(left, right))
    }

    pub fn pairing_spec(&mut self) -> SResult<PairingSpec> {
        let left = self.set_spec()?;
        if !self.eat('/') {
            return self.error("expected `/`");
        }
        self.pairing_rest(left)
    }

    pub fn letter_pair(&mut self) -> SResult<LetterPair> {
        let input = self.letter()?;
        if !self.eat('/') {
            return self.error("expected `/`");
        }
        let output = self.letter()?;
        Ok(LetterPair::new(input, output))
    }
}

fn whole<T>(text: &str, f: impl FnOnce(&mut Cursor) -> SResult<T>) -> Result<T, Error> {
    let mut c = Cursor::new(text);
    f(&mut c)
        .and_then(|v| c.expect_end().map(|_| v))
        .map_err(|e| e.into_error(1, text))
}

impl FromStr for SetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        whole(s, Cursor::set_spec)
    }
}

impl FromStr for PairingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        whole(s, Cursor::pairing_spec)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        whole(s, Cursor::letter)
    }
}

impl FromStr for LetterPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        whole(s, Cursor::letter_pair)
    }
}

/// Parses a word such as `0110`; `\e` is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<Symbol>, Error> {
    if s == "\\e" {
        return Ok(Vec::new());
    }
    whole(s, |c| {
        let mut w = Vec::new();
        while !c.at_end() {
            w.push(c.symbol()?);
        }
        Ok(w)
    })
}
