//! ∂ψ-basic polynomial sequences of a delta operator.
//!
//! Four closed constructions (two ψ-Lagrange, two ψ-Rodrigues forms) plus a
//! triangular solve of the defining recurrence that serves as an oracle for
//! the other four.

use std::fmt;
use std::str::FromStr;

use super::series::{DeltaOperator, OperatorSeries};
use crate::error::{Error, Result};
use crate::kernel::{Poly, RatFun, XPoly};
use crate::psi::apply_xhat_psi;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// `p_n = Q' S^{-n-1} x^n`
    Lagrange1,
    /// `p_n = S^{-n} x^n - (n_ψ/n) (S^{-n})' x^{n-1}`
    Lagrange2,
    /// `p_n = (n_ψ/n) x̂ψ S^{-n} x^{n-1}`
    Rodrigues3,
    /// `p_n = (n_ψ/n) x̂ψ (Q')^{-1} p_{n-1}`
    Rodrigues4,
    /// Degree-by-degree solve of `Q p_n = n_ψ p_{n-1}`, `p_n(0) = 0`.
    Solve,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Lagrange1,
        Method::Lagrange2,
        Method::Rodrigues3,
        Method::Rodrigues4,
        Method::Solve,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Lagrange1 => "lagrange1",
            Method::Lagrange2 => "lagrange2",
            Method::Rodrigues3 => "rodrigues3",
            Method::Rodrigues4 => "rodrigues4",
            Method::Solve => "solve",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasicSequence {
    delta: DeltaOperator,
    polys: Vec<XPoly>,
}

impl BasicSequence {
    pub fn delta(&self) -> &DeltaOperator {
        &self.delta
    }

    pub fn polys(&self) -> &[XPoly] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> &XPoly {
        &self.polys[n]
    }

    /// Highest index `N`.
    pub fn max_index(&self) -> usize {
        self.polys.len() - 1
    }

    /// Checks `p_0 = 1`, `p_n(0) = 0`, `deg p_n = n` and `Q p_n = n_ψ p_{n-1}`.
    pub fn check_invariants(&self) -> Result<()> {
        let psi = self.delta.psi();
        if self.polys[0] != XPoly::one() {
            return Err(Error::Internal("p_0 != 1".into()));
        }
        for (n, p) in self.polys.iter().enumerate().skip(1) {
            if p.degree() != Some(n) {
                return Err(Error::Internal(format!("deg p_{n} = {}", p.deg())));
            }
            if !p.coeff(0).is_zero() {
                return Err(Error::Internal(format!("p_{n}(0) != 0")));
            }
            let lhs = self.delta.apply(p)?;
            let rhs = self.polys[n - 1].scale(psi.number(n)?);
            if lhs != rhs {
                return Err(Error::Internal(format!("Q p_{n} != n_psi p_{}", n - 1)));
            }
        }
        Ok(())
    }

    /// Coordinates of `v` in the basis `p_0 ..= p_N` (triangular solve).
    pub fn coordinates(&self, v: &XPoly) -> Result<Vec<RatFun>> {
        let n = self.max_index();
        if v.len() > n + 1 {
            return Err(Error::TruncationExceeded(format!(
                "degree {} exceeds basic sequence length {n}",
                v.deg()
            )));
        }
        let mut rest = v.clone();
        let mut coords = vec![RatFun::zero(); n + 1];
        for k in (0..=n).rev() {
            let c = rest.coeff(k);
            if c.is_zero() {
                continue;
            }
            let lead = self.polys[k].coeff(k);
            let a = c.checked_div(&lead)?;
            rest = rest.sub(&self.polys[k].scale(&a));
            coords[k] = a;
        }
        debug_assert!(rest.is_zero());
        Ok(coords)
    }

    /// `Σ c_k p_k`.
    pub fn combine(&self, coords: &[RatFun]) -> XPoly {
        coords
            .iter()
            .zip(&self.polys)
            .filter(|(c, _)| !c.is_zero())
            .fold(Poly::zero(), |acc, (c, p)| acc.add(&p.scale(c)))
    }
}

/// Basic sequence `p_0 ..= p_n` of `delta` by the chosen construction.
///
/// The closed forms need the delta series known through order `n + 1`
/// (the Pincherle derivative consumes one order); the solve needs order `n`.
pub fn basic_sequence(delta: &DeltaOperator, n: usize, method: Method) -> Result<BasicSequence> {
    let needed = if method == Method::Solve { n } else { n + 1 };
    if delta.order() < needed {
        return Err(Error::TruncationExceeded(format!(
            "delta operator known to order {} but {method} up to n = {n} needs order {needed}",
            delta.order()
        )));
    }
    let psi = delta.psi();
    if n > psi.n_max() {
        return Err(Error::BeyondTruncation {
            index: n,
            n_max: psi.n_max(),
        });
    }
    let polys = match method {
        Method::Solve => solve(delta, n)?,
        _ => closed_form(delta, n, method)?,
    };
    Ok(BasicSequence {
        delta: delta.clone(),
        polys,
    })
}

fn xpow(k: usize) -> XPoly {
    Poly::monomial(RatFun::one(), k)
}

/// `n_ψ / n`.
fn ratio(delta: &DeltaOperator, n: usize) -> Result<RatFun> {
    Ok(delta.psi().number(n)? * &RatFun::from_ratio(1, n as i64))
}

fn closed_form(delta: &DeltaOperator, n: usize, method: Method) -> Result<Vec<XPoly>> {
    let psi = delta.psi();
    let s = delta.s_factor().with_order(n);
    let s_inv = s.invert()?;
    let q_prime = delta.series().pincherle().with_order(n);
    let mut polys = vec![XPoly::one()];

    match method {
        Method::Lagrange1 => {
            // running power S^{-m-1}
            let mut power = s_inv.clone();
            for m in 1..=n {
                power = power.mul(&s_inv)?;
                let op = q_prime.mul(&power)?;
                polys.push(op.apply(&xpow(m))?);
            }
        }
        Method::Lagrange2 => {
            let mut power = OperatorSeries::identity(psi.clone(), n);
            for m in 1..=n {
                power = power.mul(&s_inv)?;
                let head = power.apply(&xpow(m))?;
                let tail = power.pincherle().apply(&xpow(m - 1))?;
                polys.push(head.sub(&tail.scale(&ratio(delta, m)?)));
            }
        }
        Method::Rodrigues3 => {
            let mut power = OperatorSeries::identity(psi.clone(), n);
            for m in 1..=n {
                power = power.mul(&s_inv)?;
                let inner = power.apply(&xpow(m - 1))?;
                polys.push(apply_xhat_psi(psi, &inner)?.scale(&ratio(delta, m)?));
            }
        }
        Method::Rodrigues4 => {
            let q_prime_inv = q_prime.invert()?;
            for m in 1..=n {
                let inner = q_prime_inv.apply(&polys[m - 1])?;
                polys.push(apply_xhat_psi(psi, &inner)?.scale(&ratio(delta, m)?));
            }
        }
        Method::Solve => unreachable!(),
    }
    Ok(polys)
}

/// Back-substitution on the coefficients of `Q p_n = n_ψ p_{n-1}`.
///
/// `Q x^k = Σ_j a_j k_ψ^{(j)} x^{k-j}`, so the coefficient of `x^m` on the
/// left involves only `c_{m+1} .. c_n`, and the pivot is `a_1 (m+1)_ψ`.
#[allow(clippy::needless_range_loop)]
fn solve(delta: &DeltaOperator, n: usize) -> Result<Vec<XPoly>> {
    let psi = delta.psi();
    let a = delta.series().coeffs();
    let a1 = &a[1];
    let mut polys = vec![XPoly::one()];
    for deg in 1..=n {
        let rhs = polys[deg - 1].scale(psi.number(deg)?);
        let mut c = vec![RatFun::zero(); deg + 1];
        for m in (0..deg).rev() {
            let mut acc = rhs.coeff(m);
            for k in m + 2..=deg {
                let j = k - m;
                if j < a.len() && !a[j].is_zero() && !c[k].is_zero() {
                    acc = &acc - &(&(&a[j] * &psi.falling(k, j)?) * &c[k]);
                }
            }
            let pivot = a1 * psi.number(m + 1)?;
            if pivot.is_zero() {
                return Err(Error::Internal(format!(
                    "inconsistent system at degree {deg}, row {m}"
                )));
            }
            c[m + 1] = acc.checked_div(&pivot)?;
        }
        polys.push(Poly::from_coeffs(c));
    }
    Ok(polys)
}
