//! Rational expressions in `t`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? digits | '(' '-'? digits ')'
//! atom   := digits | 't' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::error::{degenerate, Error, Result};
use crate::exact_poly::{poly_gcd, Rat, UniPoly};
use crate::ratfunc::{make_rational, RationalFunction};

/// A quotient of polynomials that may be zero, used during evaluation.
#[derive(Clone, Debug)]
struct Value {
    num: UniPoly,
    den: UniPoly,
}

impl Value {
    fn poly(p: UniPoly) -> Self {
        Self { num: p, den: UniPoly::one() }
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Result<Self> {
        if num.is_zero() {
            return Ok(Self::poly(UniPoly::zero()));
        }
        let g = poly_gcd(&num, &den)?;
        Ok(Self { num: num.div_exact(&g)?, den: den.div_exact(&g)? })
    }

    fn add(&self, o: &Self) -> Result<Self> {
        Self::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    fn sub(&self, o: &Self) -> Result<Self> {
        Self::reduce(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }

    fn mul(&self, o: &Self) -> Result<Self> {
        Self::reduce(&self.num * &o.num, &self.den * &o.den)
    }

    fn div(&self, o: &Self) -> Result<Self> {
        if o.num.is_zero() {
            return Err(degenerate("division by the zero function"));
        }
        Self::reduce(&self.num * &o.den, &self.den * &o.num)
    }

    fn pow(&self, k: i64) -> Result<Self> {
        let e = k.unsigned_abs() as u32;
        if k >= 0 {
            Ok(Self { num: self.num.pow(e), den: self.den.pow(e) })
        } else if self.num.is_zero() {
            Err(degenerate("negative power of the zero function"))
        } else {
            Ok(Self { num: self.den.pow(e), den: self.num.pow(e) })
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if self.eat(b'-') {
            let v = self.unary()?;
            return Ok(Value { num: -&v.num, den: v.den });
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(b'(');
        let negative = self.eat(b'-');
        let at = self.pos;
        let k = self.digits()?;
        let k: i64 = i64::try_from(&k)
            .ok()
            .filter(|k| *k <= u32::MAX as i64)
            .ok_or(Error::Parse { offset: at, message: "exponent too large".into() })?;
        if paren {
            self.expect(b')')?;
        }
        Ok(if negative { -k } else { k })
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.exponent()?;
            return base.pow(k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(Value::poly(UniPoly::t()))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Value::poly(UniPoly::constant(Rat::from_integer(self.digits()?)))),
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

fn parse_value(s: &str) -> Result<Value> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

/// Parses and evaluates an expression exactly. The zero function is
/// rejected because it has no orders.
pub fn parse_rational_expr(s: &str) -> Result<RationalFunction> {
    let v = parse_value(s)?;
    if v.num.is_zero() {
        return Err(degenerate("the expression is the zero function"));
    }
    make_rational(v.num, v.den)
}

/// Parses a rational constant such as `-3/4`.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let v = parse_value(s)?;
    if !v.num.is_constant() || !v.den.is_constant() {
        return Err(Error::Parse { offset: 0, message: "expected a constant".into() });
    }
    Ok(v.num.coeff(0) / v.den.coeff(0))
}
