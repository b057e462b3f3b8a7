//! Dense univariate polynomials over any [`Ring`].
//!
//! `Poly<RatFun>` is the polynomial algebra in `x`; `BiPoly` nests a second
//! polynomial level for a central symbol `y`.

use std::fmt;

use super::ratfun::RatFun;
use super::ring::Ring;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial in `x` whose coefficients are polynomials in `y`.
pub type BiPoly = Poly<Poly<RatFun>>;

impl<C: Ring> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `-1` for the zero polynomial.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of coefficient slots, i.e. `deg + 1`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::negate).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(at).plus(c);
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Ordinary derivative `d/dx`.
    pub fn formal_derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times(&C::from_i64(k as i64)))
                .collect(),
        )
    }

    /// Apply `f` to each coefficient.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(C::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl Poly<RatFun> {
    /// Coefficient strings in canonical form, ascending powers of `x`.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Embed as a bivariate polynomial constant in `y`.
    pub fn to_bipoly_x(&self) -> BiPoly {
        self.map(|c| Poly::constant(c.clone()))
    }

    /// Reinterpret `p(x)` as `p(y)`, a bivariate polynomial of `x`-degree 0.
    pub fn to_bipoly_y(&self) -> BiPoly {
        Poly::constant(self.clone())
    }

    /// Substitute `q -> value` in every coefficient.
    pub fn specialize_q(&self, value: &num_rational::BigRational) -> crate::Result<Poly<RatFun>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.specialize(value))
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl fmt::Display for Poly<RatFun> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}] x")?,
                _ => write!(f, "[{c}] x^{k}")?,
            }
        }
        Ok(())
    }
}

impl BiPoly {
    /// Coefficient table: `rows[i][j]` is the coefficient of `x^i y^j`.
    pub fn table(&self) -> Vec<Vec<RatFun>> {
        let width = self.coeffs.iter().map(Poly::len).max().unwrap_or(0);
        self.coeffs
            .iter()
            .map(|row| (0..width).map(|j| row.coeff(j)).collect())
            .collect()
    }

    /// Set `y = 0`.
    pub fn at_y_zero(&self) -> Poly<RatFun> {
        self.map(|c| c.coeff(0))
    }

    /// The product `a(x) * b(y)`.
    pub fn outer(a: &Poly<RatFun>, b: &Poly<RatFun>) -> BiPoly {
        a.map(|c| b.scale(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<RatFun> {
        Poly::from_coeffs(c.iter().map(|&v| RatFun::from_i64(v)).collect())
    }

    #[test]
    fn zero_degree_is_minus_one() {
        assert_eq!(Poly::<RatFun>::zero().deg(), -1);
        assert_eq!(p(&[0, 0]).deg(), -1);
    }

    #[test]
    fn eval_at_zero() {
        assert_eq!(p(&[0, 0, 1]).eval(&RatFun::zero()), RatFun::zero());
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(p(&[0, 0, 0, 1]).formal_derivative(), p(&[0, 0, 3]));
    }

    #[test]
    fn compose_shift() {
        // (x+1)^2 = x^2 + 2x + 1
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn bipoly_outer_table() {
        let t = BiPoly::outer(&p(&[0, 1]), &p(&[1, 2]));
        let tab = t.table();
        assert_eq!(tab[1][0], RatFun::from_i64(1));
        assert_eq!(tab[1][1], RatFun::from_i64(2));
        assert_eq!(tab[0][1], RatFun::zero());
    }
}
