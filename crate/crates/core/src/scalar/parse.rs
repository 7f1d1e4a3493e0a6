//! Parser for the scalar text form: rationals, log-symbol polynomials,
//! and parenthesized quotients, e.g. `3/2*L2^2*L3 + 1` or `(L2 + 1)/(L3)`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::primes::is_prime;
use crate::scalar::logpoly::LogPoly;
use crate::scalar::monomial::Monomial;
use crate::scalar::Scalar;
use crate::Rational;

struct Cursor<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c == b => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(Error::parse(self.pos, format!("expected '{}'", b as char))),
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected a digit"));
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos]).expect("ascii digits"))
    }
}

/// factor := digits [ '/' digits ]  |  'L' digits [ '^' digits ]
fn parse_factor(c: &mut Cursor) -> Result<LogPoly> {
    match c.peek() {
        Some(b'L') => {
            c.bump();
            let at = c.pos;
            let p: u64 = c
                .digits()?
                .parse()
                .map_err(|_| Error::parse(at, "symbol index out of range"))?;
            if !is_prime(p) {
                return Err(Error::parse(at, format!("L{} is not a prime symbol", p)));
            }
            let exp: u32 = if c.peek() == Some(b'^') {
                c.bump();
                let at = c.pos;
                c.digits()?
                    .parse()
                    .map_err(|_| Error::parse(at, "exponent out of range"))?
            } else {
                1
            };
            Ok(LogPoly::from_terms([(
                Monomial::from_pairs([(p, exp)]),
                Rational::one(),
            )]))
        }
        Some(b'0'..=b'9') => {
            let numer: BigInt = c.digits()?.parse().expect("digits parse as BigInt");
            let denom: BigInt = if c.peek() == Some(b'/') {
                c.bump();
                let at = c.pos;
                let d: BigInt = c.digits()?.parse().expect("digits parse as BigInt");
                if d == BigInt::from(0) {
                    return Err(Error::parse(at, "zero denominator in rational literal"));
                }
                d
            } else {
                BigInt::one()
            };
            Ok(LogPoly::constant(Rational::new(numer, denom)))
        }
        _ => Err(Error::parse(
            c.pos,
            "expected a rational literal or a symbol like L2",
        )),
    }
}

/// term := factor ( '*' factor )*
fn parse_term(c: &mut Cursor) -> Result<LogPoly> {
    let mut acc = parse_factor(c)?;
    loop {
        c.skip_ws();
        if c.peek() == Some(b'*') {
            c.bump();
            c.skip_ws();
            acc = acc.mul(&parse_factor(c)?);
        } else {
            return Ok(acc);
        }
    }
}

/// sum := [ '-' ] term ( ('+' | '-') term )*
fn parse_sum(c: &mut Cursor) -> Result<LogPoly> {
    c.skip_ws();
    let mut negate = false;
    if c.peek() == Some(b'-') {
        c.bump();
        c.skip_ws();
        negate = true;
    }
    let first = parse_term(c)?;
    let mut acc = if negate { first.neg() } else { first };
    loop {
        c.skip_ws();
        match c.peek() {
            Some(b'+') => {
                c.bump();
                c.skip_ws();
                acc = acc.add(&parse_term(c)?);
            }
            Some(b'-') => {
                c.bump();
                c.skip_ws();
                acc = acc.sub(&parse_term(c)?);
            }
            _ => return Ok(acc),
        }
    }
}

pub(crate) fn parse_scalar(input: &str) -> Result<Scalar> {
    let mut c = Cursor::new(input);
    c.skip_ws();
    let scalar = if c.peek() == Some(b'(') {
        c.bump();
        let num = parse_sum(&mut c)?;
        c.skip_ws();
        c.expect(b')')?;
        c.skip_ws();
        if c.peek() == Some(b'/') {
            c.bump();
            c.skip_ws();
            c.expect(b'(')?;
            let den_at = c.pos;
            let den = parse_sum(&mut c)?;
            c.skip_ws();
            c.expect(b')')?;
            Scalar::from_parts(num, den)
                .map_err(|_| Error::parse(den_at, "denominator is zero"))?
        } else {
            Scalar::from_poly(num)
        }
    } else {
        Scalar::from_poly(parse_sum(&mut c)?)
    };
    c.skip_ws();
    if let Some(b) = c.peek() {
        return Err(Error::parse(
            c.pos,
            format!("unexpected character '{}'", b as char),
        ));
    }
    Ok(scalar)
}

/// Parse a plain rational in the `a/b` or `a` form (sign allowed).
pub fn parse_rational(input: &str) -> Result<Rational> {
    let scalar = parse_scalar(input)?;
    scalar
        .as_rational()
        .ok_or_else(|| Error::parse(0, "expected a rational, found log symbols"))
}
