//! Cursor over the comma/colon spec grammars used for kernels and functions.

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    /// The token starting at the cursor, up to the next separator.
    pub fn token(&self) -> String {
        let rest = self.rest();
        let end = rest.find([',', ':']).unwrap_or(rest.len());
        if end == 0 {
            rest.chars().next().map(String::from).unwrap_or_else(|| "<end>".into())
        } else {
            rest[..end].to_string()
        }
    }

    pub fn ident(&mut self) -> Result<&'a str> {
        let rest = self.rest();
        let end = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
        if end == 0 {
            return Err(Error::parse(self.token(), "expected a family name"));
        }
        self.pos += end;
        Ok(&rest[..end])
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.token(), format!("expected `{c}`")))
        }
    }

    pub fn at_number(&self) -> bool {
        self.rest()
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_digit() || matches!(c, '-' | '+' | '.'))
    }

    fn number_text(&mut self) -> &'a str {
        let rest = self.rest();
        let end = rest
            .find(|c: char| !(c.is_ascii_digit() || matches!(c, '-' | '+' | '.' | 'e' | 'E')))
            .unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    pub fn real(&mut self) -> Result<f64> {
        let tok = self.token();
        let text = self.number_text();
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(Error::parse(tok, "expected a finite real number")),
        }
    }

    pub fn integer(&mut self) -> Result<i32> {
        let tok = self.token();
        let text = self.number_text();
        text.parse::<i32>()
            .map_err(|_| Error::parse(tok, "expected an integer"))
    }

    pub fn save(&self) -> usize {
        self.pos
    }

    pub fn restore(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub fn finish(&self) -> Result<()> {
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(Error::parse(self.token(), "unexpected trailing input"))
        }
    }
}
