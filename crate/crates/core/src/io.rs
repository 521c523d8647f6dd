//! Text form of signed involutions.
//!
//! Tokens are separated by whitespace: `I+`, `I-`, `(I,J)+`, `(I,J)-`.
//! Every index from 1 to the largest one must occur exactly once.

use thiserror::Error;

use crate::involution::{Element, InvolutionError, Sign, SignedInvolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("empty parameter")]
    Empty,
    #[error(transparent)]
    Invalid(#[from] InvolutionError),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return match self.peek() {
                Some(c) => self.err(format!("expected an index, found '{c}'")),
                None => self.err("expected an index, found end of input"),
            };
        }
        let v: usize = self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::Syntax { pos: start, msg: "index too large".into() })?;
        if v == 0 {
            return Err(ParseError::Syntax { pos: start, msg: "indices start at 1".into() });
        }
        Ok(v)
    }

    fn sign(&mut self) -> Result<Sign, ParseError> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Ok(Sign::Plus)
            }
            Some('-') | Some('−') => {
                self.bump();
                Ok(Sign::Minus)
            }
            Some(c) => self.err(format!("expected a sign, found '{c}'")),
            None => self.err("expected a sign, found end of input"),
        }
    }

    fn element(&mut self) -> Result<Element, ParseError> {
        if self.peek() == Some('(') {
            self.bump();
            self.skip_ws();
            let lo = self.number()?;
            self.skip_ws();
            self.expect(',')?;
            self.skip_ws();
            let hi = self.number()?;
            self.skip_ws();
            self.expect(')')?;
            let sign = self.sign()?;
            Ok(Element::Pair { lo, hi, sign })
        } else {
            let index = self.number()?;
            let sign = self.sign()?;
            Ok(Element::Single { index, sign })
        }
    }
}

/// Parses the text form; `n` is the largest index that occurs.
pub fn parse_sigma(text: &str) -> Result<SignedInvolution, ParseError> {
    let mut lx = Lexer { src: text, pos: 0 };
    let mut elements = Vec::new();
    loop {
        lx.skip_ws();
        if lx.peek().is_none() {
            break;
        }
        let before = lx.pos;
        elements.push(lx.element()?);
        if lx.peek().is_some_and(|c| !c.is_whitespace()) {
            return lx.err(format!("token starting at byte {before} runs into the next one"));
        }
    }
    if elements.is_empty() {
        return Err(ParseError::Empty);
    }
    let n = elements.iter().map(Element::largest).max().unwrap_or(0);
    Ok(SignedInvolution::new(elements, n)?)
}

/// Inverse of [`parse_sigma`].
pub fn render_sigma(sigma: &SignedInvolution) -> String {
    sigma.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let s = parse_sigma("1+ 2- (3,4)+ 5+").unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.signature(), (3, 2));
        assert_eq!(render_sigma(&s), "1+ 2- (3,4)+ 5+");
        let s = parse_sigma("(1,2)+").unwrap();
        assert_eq!(s.elements().to_vec(), vec![Element::Pair { lo: 1, hi: 2, sign: Sign::Plus }]);
        assert_eq!(parse_sigma("  ( 2 , 1 )−").map(|s| s.to_string()).ok(), None);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_sigma("1+ 1-"),
            Err(ParseError::Invalid(InvolutionError::DuplicateIndex(1)))
        ));
        assert!(matches!(parse_sigma("1+ 3-"), Err(ParseError::Invalid(InvolutionError::MissingIndex(2)))));
        assert!(matches!(parse_sigma("1+ x"), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_sigma("1"), Err(ParseError::Syntax { pos: 1, .. })));
        assert!(matches!(parse_sigma("1+2-"), Err(ParseError::Syntax { .. })));
        assert_eq!(parse_sigma(""), Err(ParseError::Empty));
    }

    #[test]
    fn round_trips_everything_small() {
        for n in 1..=5 {
            for s in SignedInvolution::enumerate_all(n) {
                assert_eq!(parse_sigma(&render_sigma(&s)).unwrap(), s);
            }
        }
    }
}
