//! Text form of presentations.
//!
//! ```text
//! presentation := generators '|' relators
//! generators   := name (',' name)*
//! relators     := word ('/' word)*
//! word         := factor (' ' factor)*
//! factor       := atom ('^' exponent)?
//! atom         := name | '(' word ')'
//! exponent     := '-'? digits          (nonzero)
//! name         := [A-Za-z0-9_]+
//! ```
//!
//! Whitespace around tokens is ignored except as the factor separator.
//! Printing emits `x^k` for runs of one letter and `(w)^k` for a relator that
//! is a proper power, so `parse(print(p)) == p` for every presentation.

use thiserror::Error;

use super::{inverse_word, power, Letter, Presentation, PresentationError, Word};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("expected {expected} at byte {at}")]
    Expected { expected: &'static str, at: usize },
    #[error("unknown generator {name:?} at byte {at}")]
    UnknownGenerator { name: String, at: usize },
    #[error("exponent at byte {0} must be a nonzero integer")]
    BadExponent(usize),
    #[error(transparent)]
    Invalid(#[from] PresentationError),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

fn is_name_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn name(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && is_name_byte(self.src[self.pos]) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::Expected { expected: "generator name", at: start });
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match text.parse::<i64>() {
            Ok(k) if k != 0 => Ok(k),
            _ => Err(ParseError::BadExponent(start)),
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        if self.eat(b'(') {
            let w = self.word()?;
            if !self.eat(b')') {
                return Err(ParseError::Expected { expected: "')'", at: self.pos });
            }
            return Ok(w);
        }
        let at = self.pos;
        let name = self.name()?;
        match self.names.iter().position(|n| n == name) {
            Some(i) => Ok(vec![Letter::gen(i)]),
            None => Err(ParseError::UnknownGenerator { name: name.to_string(), at }),
        }
    }

    fn factor(&mut self) -> Result<Word, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let k = self.exponent()?;
        let unit = if k < 0 { inverse_word(&base) } else { base };
        Ok(power(&unit, k.unsigned_abs() as usize))
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut w = self.factor()?;
        while matches!(self.peek(), Some(b) if b == b'(' || is_name_byte(b)) {
            w.extend(self.factor()?);
        }
        Ok(w)
    }
}

pub(super) fn parse_presentation(s: &str) -> Result<Presentation, ParseError> {
    let (gens, rels) = s
        .split_once('|')
        .ok_or(ParseError::Expected { expected: "'|'", at: s.len() })?;
    let mut names = vec![];
    let mut offset = 0;
    for piece in gens.split(',') {
        let name = piece.trim();
        if name.is_empty() || !name.bytes().all(is_name_byte) {
            return Err(ParseError::Expected { expected: "generator name", at: offset });
        }
        names.push(name.to_string());
        offset += piece.len() + 1;
    }
    let mut relators = vec![];
    let base = gens.len() + 1;
    if !rels.trim().is_empty() {
        let mut parser = Parser { src: rels.as_bytes(), pos: 0, names: &names };
        loop {
            relators.push(parser.word().map_err(|e| shift(e, base))?);
            if parser.peek().is_none() {
                break;
            }
            if !parser.eat(b'/') {
                return Err(ParseError::Expected { expected: "'/'", at: base + parser.pos });
            }
        }
    }
    Ok(Presentation::new(names, relators)?)
}

fn shift(e: ParseError, by: usize) -> ParseError {
    match e {
        ParseError::Expected { expected, at } => ParseError::Expected { expected, at: at + by },
        ParseError::UnknownGenerator { name, at } => ParseError::UnknownGenerator { name, at: at + by },
        ParseError::BadExponent(at) => ParseError::BadExponent(at + by),
        other => other,
    }
}

fn print_runs(p: &Presentation, w: &[Letter]) -> String {
    let mut parts = vec![];
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let run = j - i;
        let name = &p.generators()[w[i].generator];
        parts.push(match (run, w[i].inverse) {
            (1, false) => name.clone(),
            (1, true) => format!("{name}^-1"),
            (k, false) => format!("{name}^{k}"),
            (k, true) => format!("{name}^-{k}"),
        });
        i = j;
    }
    parts.join(" ")
}

fn smallest_period(w: &[Letter]) -> usize {
    (1..=w.len())
        .find(|&d| w.len().is_multiple_of(d) && w.chunks(d).all(|c| c == &w[..d]))
        .unwrap_or(w.len())
}

fn print_word(p: &Presentation, w: &[Letter]) -> String {
    let d = smallest_period(w);
    let k = w.len() / d;
    if k >= 2 && d >= 2 {
        format!("({})^{k}", print_runs(p, &w[..d]))
    } else {
        print_runs(p, w)
    }
}

pub(super) fn print_presentation(p: &Presentation) -> String {
    let rels: Vec<String> = p.relators().iter().map(|w| print_word(p, w)).collect();
    format!("{} | {}", p.generators().join(","), rels.join("/"))
}
