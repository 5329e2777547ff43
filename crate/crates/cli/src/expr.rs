//! Element syntax.
//!
//! ```text
//! poly     := term ('+' term)*
//! term     := '0' | '1' | VAR | VAR '^' uint
//! ratfunc  := poly | '(' poly ')/(' poly ')'
//! tower    := 'level=' uint ';' ratfunc | ratfunc
//! ```
//!
//! `VAR` is `t` at level 0 and `u = t^{1/2^m}` at levels `m ≥ 1`. Terms add in
//! F₂, so `t+t` is `0`. Binary-field elements are decimal integers.

use arf_core::{BinElem, BinaryField, Poly2, RatFunc, TowerElem};

use crate::error::{CliError, Result};

/// Largest exponent accepted in an expression.
pub const MAX_DEGREE: usize = 64;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn error(&self, msg: &str) -> CliError {
        CliError::parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an exponent"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("exponent out of range"))
    }

    fn term(&mut self, var: char) -> Result<usize> {
        self.skip_ws();
        match self.peek() {
            Some('0') => {
                self.pos += 1;
                Ok(usize::MAX)
            }
            Some('1') => {
                self.pos += 1;
                Ok(0)
            }
            Some(c) if c == var => {
                self.pos += 1;
                let exp = if self.eat('^') { self.uint()? } else { 1 };
                if exp > MAX_DEGREE {
                    return Err(self.error(&format!("degree {exp} exceeds cap {MAX_DEGREE}")));
                }
                Ok(exp)
            }
            Some(c @ ('t' | 'u')) => Err(self.error(&format!(
                "variable '{c}' is not allowed here (t only at level 0, u at levels >= 1)"
            ))),
            _ => Err(self.error("expected a term")),
        }
    }

    fn poly(&mut self, var: char) -> Result<Poly2> {
        let mut p = Poly2::zero();
        loop {
            let exp = self.term(var)?;
            if exp != usize::MAX {
                p.flip_bit(exp);
            }
            if !self.eat('+') {
                return Ok(p);
            }
        }
    }

    fn ratfunc(&mut self, var: char) -> Result<RatFunc> {
        self.skip_ws();
        if !self.eat('(') {
            return Ok(RatFunc::from_poly(self.poly(var)?));
        }
        let num = self.poly(var)?;
        self.expect(')')?;
        self.expect('/')?;
        self.expect('(')?;
        let den = self.poly(var)?;
        self.expect(')')?;
        if den.is_zero() {
            return Err(self.error("zero denominator"));
        }
        Ok(RatFunc::new(num, den)?)
    }
}

fn finish<T>(mut cur: Cursor<'_>, value: T) -> Result<T> {
    if cur.at_end() {
        Ok(value)
    } else {
        Err(cur.error("unexpected trailing input"))
    }
}

pub fn parse_poly(s: &str, var: char) -> Result<Poly2> {
    let mut cur = Cursor::new(s);
    let p = cur.poly(var)?;
    finish(cur, p)
}

pub fn parse_ratfunc(s: &str, var: char) -> Result<RatFunc> {
    let mut cur = Cursor::new(s);
    let r = cur.ratfunc(var)?;
    finish(cur, r)
}

/// Parses a tower element; its level must not exceed `max_level`.
pub fn parse_tower_elem(s: &str, max_level: u32) -> Result<TowerElem> {
    let trimmed = s.trim_start();
    let (level, body) = match trimmed.strip_prefix("level") {
        Some(rest) => {
            let mut cur = Cursor::new(rest);
            cur.expect('=')?;
            let level = cur.uint()?;
            cur.expect(';')?;
            let level = u32::try_from(level).map_err(|_| CliError::parse("level out of range"))?;
            (level, &rest[cur.pos..])
        }
        None => (0, trimmed),
    };
    if level > max_level {
        return Err(arf_core::Error::LevelCapExceeded {
            level,
            cap: max_level,
        }
        .into());
    }
    let var = if level == 0 { 't' } else { 'u' };
    Ok(TowerElem::new(level, parse_ratfunc(body, var)?))
}

pub fn parse_bin_elem(s: &str, k: &BinaryField) -> Result<BinElem> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::parse(format!("expected a decimal element, found {s:?}")));
    }
    let bits: u32 = s
        .parse()
        .map_err(|_| CliError::parse(format!("element {s} out of range")))?;
    Ok(k.elem(bits)?)
}

pub fn format_poly(p: &Poly2, var: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.exponents_desc()
        .map(|e| match e {
            0 => "1".to_string(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        })
        .collect::<Vec<_>>()
        .join("+")
}

pub fn format_ratfunc(r: &RatFunc, var: char) -> String {
    if r.is_poly() {
        format_poly(r.num(), var)
    } else {
        format!("({})/({})", format_poly(r.num(), var), format_poly(r.den(), var))
    }
}

pub fn format_tower_elem(x: &TowerElem) -> String {
    match x.level() {
        0 => format_ratfunc(x.value(), 't'),
        m => format!("level={m}; {}", format_ratfunc(x.value(), 'u')),
    }
}
