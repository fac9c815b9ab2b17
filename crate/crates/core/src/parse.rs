//! Text syntax for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor := var ['^' nat]
//! ```
//! Whitespace is ignored. Coefficients are integers reduced mod p.

use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::ring::{Monomial, RingRef};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { pos, msg: msg.into() }
}

impl<'a> Cursor<'a> {
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

    fn digits(&mut self) -> &'a [u8] {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let s = self.src;
        if start < s.len() && (s[start].is_ascii_alphabetic() || s[start] == b'_') {
            self.pos += 1;
            while self.pos < s.len() && (s[self.pos].is_ascii_alphanumeric() || s[self.pos] == b'_') {
                self.pos += 1;
            }
            std::str::from_utf8(&s[start..self.pos]).ok()
        } else {
            None
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let field = ring.field();
    let p = field.characteristic() as u64;
    let n = ring.nvars();
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    if cur.peek().is_none() {
        return Err(err(0, "empty polynomial"));
    }
    let mut first = true;
    loop {
        let mut negative = false;
        if cur.eat(b'-') {
            negative = true;
        } else if !cur.eat(b'+') && !first {
            return Err(err(cur.pos, "expected '+' or '-'"));
        }
        first = false;

        let mut coeff: u64 = 1;
        let mut exps = vec![0u16; n];
        let mut need_factor = true;
        let start = cur.pos;
        let ds = cur.digits();
        if !ds.is_empty() {
            coeff = ds.iter().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
            if cur.peek() == Some(b'.') || cur.peek() == Some(b'/') {
                return Err(err(cur.pos, "coefficient not an integer"));
            }
            need_factor = cur.eat(b'*');
        }
        if need_factor {
            loop {
                cur.skip_ws();
                let at = cur.pos;
                let name = cur.ident().ok_or_else(|| {
                    if cur.peek().is_some_and(|b| b.is_ascii_digit()) {
                        err(at, "coefficient must come first in a term")
                    } else {
                        err(at, "expected a variable")
                    }
                })?;
                let idx = ring
                    .descriptor()
                    .var_index(name)
                    .ok_or_else(|| err(at, format!("unknown variable {name}")))?;
                let mut e: u32 = 1;
                if cur.eat(b'^') {
                    let epos = cur.pos;
                    let ed = cur.digits();
                    if ed.is_empty() || ed.len() > 5 {
                        return Err(err(epos, "malformed exponent"));
                    }
                    e = std::str::from_utf8(ed).unwrap().parse().map_err(|_| err(epos, "malformed exponent"))?;
                    if cur.peek() == Some(b'.') {
                        return Err(err(epos, "malformed exponent"));
                    }
                }
                let total = exps[idx] as u32 + e;
                if total > u16::MAX as u32 {
                    return Err(err(at, "exponent too large"));
                }
                exps[idx] = total as u16;
                if !cur.eat(b'*') {
                    break;
                }
            }
        } else if cur.pos == start {
            return Err(err(start, "expected a term"));
        }
        let mut c = coeff as u32;
        if negative {
            c = field.neg(c);
        }
        terms.push((Monomial::from_exponents(exps), c));
        match cur.peek() {
            None => break,
            Some(b'+') | Some(b'-') => continue,
            Some(b) => return Err(err(cur.pos, format!("unexpected character '{}'", b as char))),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::{PolyRing, RingDescriptor};

    fn s3() -> RingRef {
        PolyRing::degrevlex(RingDescriptor::polynomial_ring(PrimeField::default(), "x", 3).unwrap())
    }

    #[test]
    fn two_terms() {
        let r = s3();
        let f = parse_polynomial("x1^2 - 2*x2*x3", &r).unwrap();
        let coeffs: Vec<u32> = f.terms().iter().map(|t| t.1).collect();
        assert_eq!(coeffs, vec![1, 32001]);
    }

    #[test]
    fn zero_and_constants() {
        let r = s3();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert!(parse_polynomial("x1 - x1", &r).unwrap().is_zero());
        assert_eq!(parse_polynomial("-3", &r).unwrap(), Polynomial::constant(&r, -3));
        assert_eq!(parse_polynomial(" 2 * x1 * x1 ", &r).unwrap(), parse_polynomial("2*x1^2", &r).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let r = s3();
        match parse_polynomial("x1 + x9", &r) {
            Err(AlgebraError::Parse { pos, msg }) => {
                assert_eq!(msg, "unknown variable x9");
                assert_eq!(pos, 5);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial("x1^", &r), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_polynomial("x1^a", &r), Err(AlgebraError::Parse { .. })));
        match parse_polynomial("1.5*x1", &r) {
            Err(AlgebraError::Parse { msg, .. }) => assert_eq!(msg, "coefficient not an integer"),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x1 x2", &r).is_err());
        assert!(parse_polynomial("", &r).is_err());
    }

    #[test]
    fn round_trip() {
        let r = s3();
        for s in ["x1^2 - 2*x2*x3", "-x3 + 7", "16001*x1*x2^3 - x1", "1"] {
            let f = parse_polynomial(s, &r).unwrap();
            assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
        }
    }
}
