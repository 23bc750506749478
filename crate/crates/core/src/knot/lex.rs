//! Small cursor shared by the notation parsers. Lines whose first
//! non-blank character is `#` are skipped; other whitespace is insignificant.

use crate::error::ParseError;

pub(crate) struct Lexer<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    i: usize,
}

impl<'a> Lexer<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let mut chars = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            if !line.trim_start().starts_with('#') {
                chars.extend(
                    line.char_indices()
                        .filter(|(_, c)| !c.is_whitespace())
                        .map(|(i, c)| (offset + i, c)),
                );
            }
            offset += line.len();
        }
        Self { text, chars, i: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.text.len(), |(p, _)| *p)
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|(_, c)| *c)
    }

    pub(crate) fn at_end(&self) -> bool {
        self.i >= self.chars.len()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        let pos = self.pos();
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::new(pos, format!("expected '{c}'{}", self.found())))
        }
    }

    pub(crate) fn expect_word(&mut self, w: &str) -> Result<(), ParseError> {
        let pos = self.pos();
        for c in w.chars() {
            if !self.eat(c) {
                return Err(ParseError::new(pos, format!("expected '{w}'")));
            }
        }
        Ok(())
    }

    pub(crate) fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(ParseError::new(
                self.pos(),
                format!("unexpected trailing input{}", self.found()),
            ))
        }
    }

    pub(crate) fn unsigned(&mut self) -> Result<u64, ParseError> {
        let pos = self.pos();
        let mut v: u64 = 0;
        let mut any = false;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or_else(|| ParseError::new(pos, "number too large"))?;
            any = true;
            self.i += 1;
        }
        if any {
            Ok(v)
        } else {
            Err(ParseError::new(pos, format!("expected a number{}", self.found())))
        }
    }

    /// Optionally signed integer.
    pub(crate) fn signed(&mut self) -> Result<i64, ParseError> {
        let pos = self.pos();
        let neg = self.eat('-');
        let v = self.unsigned()?;
        let v = i64::try_from(v).map_err(|_| ParseError::new(pos, "number too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!(", found '{c}'"),
            None => ", found end of input".into(),
        }
    }
}
