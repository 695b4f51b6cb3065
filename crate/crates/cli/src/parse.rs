//! Text grammar for Seifert data.
//!
//! ```text
//! [g=<int>;] n=<int> [;] (a1,b1) (a2,b2) ...
//! ```
//!
//! Whitespace is ignored everywhere. Pairs may be separated by whitespace,
//! by commas, or by nothing. `SeifertData`'s `Display` output parses back to
//! the same value.

use seifert_cs::SeifertData;

use crate::error::CliError;

pub fn parse_seifert(text: &str) -> Result<SeifertData, CliError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let (genus, n, pairs) = p.datum()?;
    SeifertData::validate(genus, n, pairs).map_err(CliError::from)
}

type Datum = (i64, i64, Vec<(i64, i64)>);

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn datum(&mut self) -> Result<Datum, CliError> {
        self.skip_ws();
        let genus = if self.peek() == Some('g') {
            self.pos += 1;
            self.expect('=')?;
            let g = self.integer()?;
            self.expect(';')?;
            g
        } else {
            0
        };
        self.skip_ws();
        self.expect_with('n', "'n=' or 'g='")?;
        self.expect('=')?;
        let n = self.integer()?;
        self.skip_ws();
        if self.peek() == Some(';') {
            self.pos += 1;
        }
        let mut pairs = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('(') => {
                    self.pos += 1;
                    let a = self.integer()?;
                    self.expect(',')?;
                    let b = self.integer()?;
                    self.expect(')')?;
                    pairs.push((a, b));
                    self.skip_ws();
                    if self.peek() == Some(',') {
                        self.pos += 1;
                    }
                }
                Some(_) => return Err(self.error("'(' or end of input")),
            }
        }
        Ok((genus, n, pairs))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &str) -> CliError {
        CliError::Parse { position: self.pos + 1, expected: expected.to_string() }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        self.expect_with(c, &format!("'{c}'"))
    }

    fn expect_with(&mut self, c: char, expected: &str) -> Result<(), CliError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn integer(&mut self) -> Result<i64, CliError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('+' | '-')) {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.error("integer"));
        }
        let literal: String = self.chars[start..self.pos].iter().collect();
        literal.parse().map_err(|_| {
            self.pos = start;
            self.error("integer within 64-bit range")
        })
    }
}
