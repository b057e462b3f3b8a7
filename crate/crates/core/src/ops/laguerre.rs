//! Closed forms for the (q-)Laguerre basic sequence of `Q = ∂ψ/(∂ψ - 1)`.

use std::sync::Arc;

use num_rational::BigRational;

use super::series::OperatorSeries;
use crate::error::Result;
use crate::kernel::{Poly, RatFun, XPoly};
use crate::psi::PsiSequence;

fn ordinary_binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `L_n(x) = Σ_{k=1}^n (-1)^k (n_ψ!/k_ψ!) C(n-1, k-1) x^k`, with the
/// ordinary binomial `C(n-1, k-1)`; `L_0 = 1`.
///
/// This is what `(n_ψ/n) x̂ψ (∂ψ - 1)^n x^{n-1}` expands to, since
/// `(∂ψ - 1)^n` has ordinary binomial coefficients.
pub fn q_laguerre_closed(psi: &PsiSequence, n: usize) -> Result<XPoly> {
    if n == 0 {
        return Ok(XPoly::one());
    }
    let n_fact = psi.factorial(n)?;
    let mut coeffs = vec![RatFun::zero(); n + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let ratio = &n_fact * psi.value(k)?; // n_ψ!/k_ψ!
        *slot = ratio.scale_int(sign * ordinary_binomial(n - 1, k - 1));
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// The variant carrying the extra factors `(n_ψ/n)` and `(k/k_ψ)` and a
/// ψ-binomial `C(n-1, k-1)_ψ`. It coincides with [`q_laguerre_closed`] for
/// `n <= 1` and at `q = 1`, and differs otherwise; kept so the discrepancy
/// stays checkable.
pub fn q_laguerre_printed(psi: &PsiSequence, n: usize) -> Result<XPoly> {
    if n == 0 {
        return Ok(XPoly::one());
    }
    let prefactor = psi.number(n)? * &RatFun::from_ratio(1, n as i64);
    let n_fact = psi.factorial(n)?;
    let mut coeffs = vec![RatFun::zero(); n + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let ratio = &n_fact * psi.value(k)?;
        let binom = psi.binomial(n - 1, k - 1)?;
        let k_over = RatFun::from_i64(k as i64).checked_div(psi.number(k)?)?;
        *slot = (&(&(&prefactor * &ratio) * &binom) * &k_over).scale_int(sign);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `S = (1 - ∂ψ)^{α+1}`, the Sheffer factor of Laguerre polynomials of order `α`.
pub fn laguerre_order_s(
    psi: Arc<PsiSequence>,
    alpha: &BigRational,
    order: usize,
) -> OperatorSeries {
    let e = alpha + BigRational::from_integer(1.into());
    OperatorSeries::one_minus_partial_pow(psi, &e, order)
}
