//! Expansion of a linear operator as `T = Σ_n q_n(x̂_Q) Q^n`, where `x̂_Q` is
//! the operator dual to `Q` (`x̂_Q p_n = p_{n+1}` on the basic sequence).
//!
//! Everything is computed in basic-sequence coordinates. With
//! `T p_m = Σ_r t_{r,m} p_r` and `q_n(t) = Σ_i c_{n,i} t^i`,
//! `Q^n p_m = m_ψ^{(n)} p_{m-n}` gives
//! `t_{r,m} = Σ_{n<=m} m_ψ^{(n)} c_{n, r-m+n}`, and the `n = m` term has
//! coefficient `m_ψ!`, so increasing `m` solves for `c_{m,*}` one row at a time.

use super::basic::{basic_sequence, BasicSequence, Method};
use super::matrix::OperatorMatrix;
use super::series::DeltaOperator;
use crate::error::{Error, Result};
use crate::kernel::{Poly, RatFun, XPoly};

/// Coefficient polynomials `q_0 ..= q_N` in a formal variable `t`.
#[allow(clippy::needless_range_loop)]
pub fn expand_operator(t: &OperatorMatrix, delta: &DeltaOperator, n: usize) -> Result<Vec<XPoly>> {
    let t = frame(t, n)?;
    let basic = basic_sequence(delta, n, Method::Solve)?;
    let psi = delta.psi();
    // t_coords[m][r]: coordinates of T p_m in the basic basis
    let t_coords = (0..=n)
        .map(|m| basic.coordinates(&t.apply(basic.get(m))?))
        .collect::<Result<Vec<_>>>()?;

    let mut c: Vec<Vec<RatFun>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let pivot = psi.factorial(m)?;
        let mut row = Vec::with_capacity(n + 1);
        for r in 0..=n {
            let mut acc = t_coords[m][r].clone();
            for (k, ck) in c.iter().enumerate() {
                // contribution of q_k at column m lands on index r = m - k + i
                if let Some(i) = (r + k).checked_sub(m) {
                    if !ck[i].is_zero() {
                        acc = &acc - &(&psi.falling(m, k)? * &ck[i]);
                    }
                }
            }
            row.push(acc.checked_div(&pivot)?);
        }
        c.push(row);
    }
    Ok(c.into_iter().map(Poly::from_coeffs).collect())
}

/// Matrix on degrees `0..=n` of `Σ_k q_k(x̂_Q) Q^k`, keeping only the
/// components along `p_0 ..= p_n`.
pub fn reconstruct(coeffs: &[XPoly], delta: &DeltaOperator, n: usize) -> Result<OperatorMatrix> {
    let basic = basic_sequence(delta, n, Method::Solve)?;
    reconstruct_with(coeffs, &basic, n)
}

fn reconstruct_with(coeffs: &[XPoly], basic: &BasicSequence, n: usize) -> Result<OperatorMatrix> {
    let psi = basic.delta().psi();
    // images of p_0 ..= p_n, then re-expressed on x^0 ..= x^n
    let mut images = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut coords = vec![RatFun::zero(); n + 1];
        for (k, qk) in coeffs.iter().enumerate().take(m + 1) {
            let fall = psi.falling(m, k)?;
            for (i, ci) in qk.coeffs().iter().enumerate() {
                let r = m - k + i;
                if r <= n && !ci.is_zero() {
                    coords[r] = &coords[r] + &(&fall * ci);
                }
            }
        }
        images.push(basic.combine(&coords));
    }
    let columns = (0..=n)
        .map(|j| {
            let d = basic.coordinates(&Poly::monomial(RatFun::one(), j))?;
            Ok(d.iter()
                .zip(&images)
                .filter(|(c, _)| !c.is_zero())
                .fold(XPoly::zero(), |acc, (c, img)| acc.add(&img.scale(c))))
        })
        .collect::<Result<Vec<_>>>()?;
    OperatorMatrix::from_columns(n + 1, &columns)
}

/// Restrict `t` to the `(n+1) x (n+1)` frame, refusing to drop nonzero
/// output components.
fn frame(t: &OperatorMatrix, n: usize) -> Result<OperatorMatrix> {
    if t.cols() < n + 1 {
        return Err(Error::TruncationExceeded(format!(
            "operator known on degrees < {} but N = {n}",
            t.cols()
        )));
    }
    let mut out = OperatorMatrix::zeros(n + 1, n + 1);
    for j in 0..=n {
        for i in 0..t.rows() {
            let v = t.get(i, j);
            if i > n {
                if !v.is_zero() {
                    return Err(Error::TruncationExceeded(format!(
                        "T x^{j} has degree {i} > N = {n}; raise N"
                    )));
                }
            } else {
                out.set(i, j, v.clone());
            }
        }
    }
    Ok(out)
}

/// Matrix of the dual operator `x̂_Q` (`p_m -> p_{m+1}`) on degrees `0..=n`,
/// with `n + 2` rows.
pub fn dual_xhat(delta: &DeltaOperator, n: usize) -> Result<OperatorMatrix> {
    let basic = basic_sequence(delta, n + 1, Method::Solve).map_err(|e| match e {
        Error::TruncationExceeded(m) | Error::InvalidArgument(m) => {
            Error::TruncationExceeded(format!("degree overflow: {m}"))
        }
        Error::BeyondTruncation { index, n_max } => Error::TruncationExceeded(format!(
            "degree overflow: index {index} beyond N_max = {n_max}"
        )),
        other => other,
    })?;
    dual_xhat_with(&basic, n)
}

pub(crate) fn dual_xhat_with(basic: &BasicSequence, n: usize) -> Result<OperatorMatrix> {
    let mut columns = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // x^j in basic coordinates, then shift every index up by one
        let coords = basic.coordinates(&Poly::monomial(RatFun::one(), j))?;
        let mut shifted = vec![RatFun::zero()];
        shifted.extend(coords.into_iter().take(n + 1));
        columns.push(basic.combine(&shifted));
    }
    OperatorMatrix::from_columns(n + 2, &columns)
}

/// `x^k -> q^k x^k` on degrees `0..=n`.
pub fn q_scaling_matrix(n: usize) -> OperatorMatrix {
    let mut m = OperatorMatrix::zeros(n + 1, n + 1);
    for k in 0..=n {
        m.set(k, k, RatFun::q_pow(k));
    }
    m
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::psi::PsiSequence;

    #[test]
    fn identity_expands_to_constant_one() {
        let psi = Arc::new(PsiSequence::qgauss(12));
        let d = DeltaOperator::laguerre(psi, 6);
        let q = expand_operator(&OperatorMatrix::identity(6), &d, 5).unwrap();
        assert_eq!(q[0], XPoly::one());
        assert!(q[1..].iter().all(Poly::is_zero));
    }

    #[test]
    fn x_partial_is_already_expanded() {
        let psi = Arc::new(PsiSequence::fibonacci(12));
        let d = DeltaOperator::partial(psi.clone(), 7);
        let t = OperatorMatrix::of_map(7, 7, |p| {
            Ok(crate::psi::apply_partial_psi(&psi, p)?.shift_up(1))
        })
        .unwrap();
        let q = expand_operator(&t, &d, 6).unwrap();
        assert!(q[0].is_zero());
        assert_eq!(q[1], XPoly::x());
        assert!(q[2..].iter().all(Poly::is_zero));
    }

    #[test]
    fn q_scaling_roundtrip() {
        let psi = Arc::new(PsiSequence::qgauss(12));
        let d = DeltaOperator::partial(psi, 7);
        let t = q_scaling_matrix(6);
        let q = expand_operator(&t, &d, 6).unwrap();
        assert_eq!(reconstruct(&q, &d, 6).unwrap(), t);
    }

    #[test]
    fn raising_past_n_is_rejected() {
        let psi = Arc::new(PsiSequence::classic(12));
        let d = DeltaOperator::partial(psi, 7);
        let t = OperatorMatrix::of_map(6, 5, |p| Ok(p.shift_up(1))).unwrap();
        assert!(matches!(
            expand_operator(&t, &d, 4),
            Err(Error::TruncationExceeded(_))
        ));
    }

    #[test]
    fn dual_of_partial_is_multiplication_by_x() {
        let psi = Arc::new(PsiSequence::qgauss(12));
        let d = DeltaOperator::partial(psi, 8);
        let m = dual_xhat(&d, 5).unwrap();
        let x = OperatorMatrix::of_map(7, 6, |p| Ok(p.shift_up(1))).unwrap();
        assert_eq!(m, x);
    }

    #[test]
    fn dual_shifts_laguerre_index() {
        let psi = Arc::new(PsiSequence::qgauss(12));
        let d = DeltaOperator::laguerre(psi, 8);
        let b = basic_sequence(&d, 3, Method::Solve).unwrap();
        let m = dual_xhat(&d, 2).unwrap();
        assert_eq!(m.apply(b.get(1)).unwrap(), *b.get(2));
        let m0 = dual_xhat(&d, 1).unwrap();
        let once = m0.apply(b.get(0)).unwrap();
        assert_eq!(m.apply(&once).unwrap(), *b.get(2));
        assert!(matches!(
            dual_xhat(&d, 8),
            Err(Error::TruncationExceeded(_))
        ));
    }
}
