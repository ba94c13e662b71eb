//! Parser for the canonical polynomial text form.
//!
//! Accepts `term (" + " | " - ") term ...` with an optional leading `-`, where
//! a term is `coeff`, `coeff*factors` or `factors`, and factors are
//! `var` or `var^exp` joined by `*`. Whitespace around operators is optional.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{LaurentPoly, Monomial, VarId};
use crate::error::Error;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c == b' ') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<&'a str, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn number<T: FromStr>(&mut self) -> Result<T, Error> {
        let at = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| Error::Parse { offset: at, message: "number out of range".into() })
    }

    fn ident(&mut self) -> Result<&'a str, Error> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.pos += 1,
            _ => return Err(self.err("expected a variable")),
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn var(&mut self) -> Result<VarId, Error> {
        let name = self.ident()?;
        if self.peek() != Some(b'(') {
            return Ok(match name {
                "q" => VarId::Q,
                "t" => VarId::T,
                _ => VarId::arrow(name),
            });
        }
        self.pos += 1;
        let v = match name {
            "x" => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c != b')') {
                    self.pos += 1;
                }
                let vertex = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
                if vertex.is_empty() {
                    return Err(self.err("empty vertex name"));
                }
                self.expect(b')')?;
                self.expect(b'_')?;
                VarId::x(&vertex, self.number()?)
            }
            "u" => {
                let slot = self.number()?;
                self.expect(b')')?;
                self.expect(b'_')?;
                VarId::u(slot, self.number()?)
            }
            _ => return Err(self.err(format!("unknown indexed variable '{name}'"))),
        };
        Ok(v)
    }

    fn exponent(&mut self) -> Result<i32, Error> {
        let neg = self.eat(b'-');
        let e: i32 = self.number()?;
        Ok(if neg { -e } else { e })
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), Error> {
        let mut coeff = BigInt::from(1);
        let mut pairs = Vec::new();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.digits()?.parse().unwrap();
            self.skip_ws();
            if !self.eat(b'*') {
                return Ok((Monomial::one(), coeff));
            }
            self.skip_ws();
        }
        loop {
            let v = self.var()?;
            let e = if self.eat(b'^') { self.exponent()? } else { 1 };
            pairs.push((v, e));
            self.skip_ws();
            if !self.eat(b'*') {
                break;
            }
            self.skip_ws();
        }
        Ok((Monomial::from_pairs(pairs), coeff))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut cur = Cursor { src: s.as_bytes(), pos: 0 };
        let mut out = LaurentPoly::zero();
        cur.skip_ws();
        let mut negative = cur.eat(b'-');
        cur.skip_ws();
        loop {
            let (m, c) = cur.term()?;
            out.add_term(m, if negative { -c } else { c });
            cur.skip_ws();
            match cur.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(cur.err("expected '+' or '-'")),
            }
            cur.pos += 1;
            cur.skip_ws();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_and_loose_forms() {
        let p: LaurentPoly = "2*t^6 + 5*t^5 + t^4".parse().unwrap();
        assert_eq!(p.to_string(), "2*t^6 + 5*t^5 + t^4");
        let loose: LaurentPoly = "t^4+5*t^5 +2 * t^6".parse().unwrap();
        assert_eq!(loose, p);
        let z: LaurentPoly = "0".parse().unwrap();
        assert!(z.is_zero());
        let merged: LaurentPoly = "t_a*t_a - t_a^2".parse().unwrap();
        assert!(merged.is_zero());
    }

    #[test]
    fn reports_offsets() {
        let err = "t + *".parse::<LaurentPoly>().unwrap_err();
        assert_eq!(err, Error::Parse { offset: 4, message: "expected a variable".into() });
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("y(0)_1".parse::<LaurentPoly>().is_err());
    }
}
