//! Rational functions in `q` over the rationals, kept in canonical form:
//! numerator and denominator coprime, denominator monic.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::qpoly::QPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

impl RatFun {
    /// Builds `num / den` and normalises it.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFun { num, den }
        } else {
            let inv = lead.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFun {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_poly(QPoly::from_i64(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(QPoly::constant(r))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(QPoly::q_pow(1))
    }

    pub fn q_pow(k: usize) -> Self {
        Self::from_poly(QPoly::q_pow(k))
    }

    /// Gaussian q-number `1 + q + ... + q^(n-1)`.
    pub fn q_number(n: usize) -> Self {
        Self::from_poly(QPoly::from_coeffs(vec![BigRational::one(); n]))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Constant value, if this does not depend on `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.mul_ref(&rhs.recip()?))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul_ref(&RatFun::from_i64(k))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatFun::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    fn add_ref(&self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.den.is_one() {
                return RatFun::from_poly(num);
            }
            return Self::normalize(num, self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g))
        let g = self.den.gcd(&rhs.den);
        let b_g = self.den.div_exact(&g);
        let d_g = rhs.den.div_exact(&g);
        let num = self.num.mul(&d_g).add(&rhs.num.mul(&b_g));
        Self::normalize(num, self.den.mul(&d_g))
    }

    fn mul_ref(&self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFun::from_poly(self.num.mul(&rhs.num));
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = self.num.div_exact(&g1).mul(&rhs.num.div_exact(&g2));
        let den = self.den.div_exact(&g2).mul(&rhs.den.div_exact(&g1));
        // already coprime; only the monic scaling is left
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            RatFun { num, den }
        } else {
            let inv = lead.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    fn neg_ref(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Evaluate at a rational point; fails if the denominator vanishes there.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.num.eval(at) / d)
    }

    /// Specialise `q` to a rational value, giving a constant.
    pub fn specialize(&self, at: &BigRational) -> Result<RatFun> {
        self.eval(at).map(RatFun::from_rational)
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        self.num.eval_f64(at) / self.den.eval_f64(at)
    }

    /// Substitute `q -> q^k`.
    pub fn dilate(&self, k: usize) -> RatFun {
        Self::normalize(self.num.dilate(k), self.den.dilate(k))
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn from_i64(n: i64) -> Self {
        RatFun::from_i64(n)
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }
    fn negate(&self) -> Self {
        self.neg_ref()
    }
    fn is_one(&self) -> bool {
        RatFun::is_one(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                self.$imp(rhs)
            }
        }
        impl $trait<RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self).$imp(&rhs)
            }
        }
        impl $trait<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                (&self).$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Mul, mul, mul_ref);

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self.minus(rhs)
    }
}
impl Sub<RatFun> for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        self.minus(&rhs)
    }
}
impl Sub<&RatFun> for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self.minus(rhs)
    }
}

/// Panics on a zero divisor; use [`RatFun::checked_div`] for fallible input.
impl Div<&RatFun> for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self.checked_div(rhs).expect("zero divisor")
    }
}
impl Div<RatFun> for RatFun {
    type Output = RatFun;
    fn div(self, rhs: RatFun) -> RatFun {
        &self / &rhs
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        self.neg_ref()
    }
}
impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        self.neg_ref()
    }
}

// ---------------------------------------------------------------------------
// Canonical text form
// ---------------------------------------------------------------------------

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Ascending-power rendering, e.g. `1-q+3/2*q^2`.
pub(crate) fn fmt_qpoly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let var = match k {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{k}"),
        };
        if k == 0 {
            out.push_str(&fmt_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&fmt_rational(&abs));
            out.push('*');
            out.push_str(&var);
        }
    }
    out
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", fmt_qpoly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_qpoly(&self.num), fmt_qpoly(&self.den))
        }
    }
}

impl FromStr for RatFun {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let value = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.err("trailing input"));
        }
        Ok(value)
    }
}

/// Recursive-descent parser for `+ - * / ^ ( )`, integers and `q`.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs)?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.primary()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.integer()?;
                    let e = e
                        .to_u32()
                        .ok_or_else(|| self.err("exponent out of range"))?;
                    Ok(base.pow(e))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn primary(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFun::q())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFun::from_rational(BigRational::from_integer(n)))
            }
            _ => Err(self.err("expected number, 'q' or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<BigInt>()
            .map_err(|_| self.err("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn sum_cancels_to_one() {
        let q = RatFun::q();
        assert_eq!(&q + &(RatFun::one() - &q), RatFun::one());
    }

    #[test]
    fn factor_cancellation() {
        let v = rf("(1-q^2)/(1-q)");
        assert_eq!(v, rf("1+q"));
        assert!(v.is_polynomial());
        assert_eq!((&v * &RatFun::one()).to_string(), "1+q");
    }

    #[test]
    fn zero_divisor() {
        assert_eq!(
            RatFun::one().checked_div(&RatFun::zero()),
            Err(Error::ZeroDivisor)
        );
        assert!(matches!(
            "1/(q-q)".parse::<RatFun>(),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(RatFun::q_number(3).to_string(), "1+q+q^2");
        assert_eq!(rf("3/(1+q+q^2)").to_string(), "(3)/(1+q+q^2)");
        assert_eq!(rf("1/(2*q+1)").to_string(), "(1/2)/(1/2+q)");
        assert_eq!(rf("-3/2*q^2+q").to_string(), "q-3/2*q^2");
        assert_eq!(RatFun::zero().to_string(), "0");
    }

    #[test]
    fn render_parse_roundtrip() {
        for s in ["(1/2)/(1/2+q)", "q-3/2*q^2", "(1-q)/(1+q^3)", "-7"] {
            assert_eq!(rf(s).to_string(), s);
        }
    }

    #[test]
    fn monic_denominator() {
        let v = rf("(2*q)/(4*q^2 + 2)");
        assert!(v.denom().leading().unwrap().is_one());
        assert_eq!(v, rf("q/(2*q^2+1)"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("1+".parse::<RatFun>(), Err(Error::Parse(_))));
        assert!(matches!("x".parse::<RatFun>(), Err(Error::Parse(_))));
        assert!(matches!("(1".parse::<RatFun>(), Err(Error::Parse(_))));
    }
}
