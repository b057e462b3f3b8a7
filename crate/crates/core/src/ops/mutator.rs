//! The `q̂ψ,Q`-mutator `[A, B] = AB - q̂ψ,Q BA` and the identity
//! `[Q, x̂_Q] = id` on the basic sequence of `Q`.

use serde::Serialize;

use super::basic::{basic_sequence, BasicSequence, Method};
use super::series::DeltaOperator;
use crate::error::{Error, Result};
use crate::kernel::{Poly, RatFun, XPoly};
use crate::psi::{apply_partial_psi, PsiKind, PsiSequence};

#[derive(Clone, Debug, Serialize)]
pub struct MutatorReport {
    pub check: String,
    pub psi: String,
    /// Indices `n` checked, `0 ..= max_index`.
    pub max_index: usize,
    pub failures: Vec<usize>,
    pub pass: bool,
    #[serde(skip)]
    pub residuals: Vec<XPoly>,
}

/// Apply `q̂ψ,Q` (diagonal on the basic sequence) to `v`.
pub fn apply_mutator_operator(basic: &BasicSequence, v: &XPoly) -> Result<XPoly> {
    let psi = basic.delta().psi();
    let coords = basic.coordinates(v)?;
    let scaled = coords
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if c.is_zero() {
                Ok(RatFun::zero())
            } else if n == 0 {
                // eigenvalue at index 0 is the 0/0 form
                Err(Error::InvalidArgument(
                    "mutator eigenvalue undefined on p_0".into(),
                ))
            } else {
                Ok(c * &psi.mutator_eigenvalue(n)?)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(basic.combine(&scaled))
}

/// `Q x̂_Q p_n - q̂ψ,Q x̂_Q Q p_n - p_n` for `n = 0 .. n_max`.
///
/// `Q p_n` and `Q p_{n+1}` are computed by applying the series, not read off
/// the recurrence.
pub fn qmutator_check(delta: &DeltaOperator, n_max: usize) -> Result<MutatorReport> {
    let basic = basic_sequence(delta, n_max, Method::Solve)?;
    let mut residuals = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let p_n = basic.get(n);
        let first = delta.apply(basic.get(n + 1))?;
        let q_pn = delta.apply(p_n)?;
        let dual = shift_up(&basic, &q_pn)?;
        let second = apply_mutator_operator(&basic, &dual)?;
        residuals.push(first.sub(&second).sub(p_n));
    }
    Ok(report("qmutator", delta.psi().name(), residuals))
}

/// Apply `x̂_Q` to `v` (which must lie in the span of `p_0 .. p_{N-1}`).
fn shift_up(basic: &BasicSequence, v: &XPoly) -> Result<XPoly> {
    let coords = basic.coordinates(v)?;
    if coords.last().is_some_and(|c| !c.is_zero()) {
        return Err(Error::TruncationExceeded("dual shift past p_N".into()));
    }
    let mut shifted = vec![RatFun::zero()];
    shifted.extend(coords.into_iter().take(basic.max_index()));
    Ok(basic.combine(&shifted))
}

/// q-canonical commutation relation `∂q x̂ - q x̂ ∂q = id` on `x^0 .. x^{n_max-1}`,
/// with `x̂` multiplication by `x`.
pub fn qccr_check(psi: &PsiSequence, n_max: usize) -> Result<MutatorReport> {
    if psi.kind() != PsiKind::QGauss {
        return Err(Error::InvalidArgument(
            "the q-CCR reduction applies to the qgauss sequence only".into(),
        ));
    }
    let q = RatFun::q();
    let residuals = (0..n_max)
        .map(|n| {
            let xn = Poly::monomial(RatFun::one(), n);
            let a = apply_partial_psi(psi, &xn.shift_up(1))?;
            let b = apply_partial_psi(psi, &xn)?.shift_up(1).scale(&q);
            Ok(a.sub(&b).sub(&xn))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(report("qccr", psi.name(), residuals))
}

fn report(check: &str, psi: &str, residuals: Vec<XPoly>) -> MutatorReport {
    let failures: Vec<usize> = residuals
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(n, _)| n)
        .collect();
    MutatorReport {
        check: check.into(),
        psi: psi.into(),
        max_index: residuals.len().saturating_sub(1),
        pass: failures.is_empty(),
        failures,
        residuals,
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    #[test]
    fn q_case_mutator_eigenvalue_is_q() {
        let psi = PsiSequence::qgauss(10);
        for n in 1..8 {
            assert_eq!(psi.mutator_eigenvalue(n).unwrap(), RatFun::q());
        }
    }

    #[test]
    fn classic_eigenvalue_is_one() {
        let psi = PsiSequence::classic(10);
        assert!(psi.mutator_eigenvalue(4).unwrap().is_one());
    }

    #[test]
    fn mutator_identity_for_partial() {
        for psi in [
            PsiSequence::qgauss(12),
            PsiSequence::classic(12),
            PsiSequence::fibonacci(12),
        ] {
            let d = DeltaOperator::partial(Arc::new(psi), 8);
            let r = qmutator_check(&d, 6).unwrap();
            assert!(r.pass, "{} {:?}", r.psi, r.failures);
        }
    }

    #[test]
    fn qccr_holds() {
        let r = qccr_check(&PsiSequence::qgauss(12), 10).unwrap();
        assert!(r.pass);
        assert!(qccr_check(&PsiSequence::classic(4), 2).is_err());
    }

    #[test]
    fn custom_psi_with_nonunit_first_number_fails_at_zero() {
        let values = ["1", "1/2", "1/6", "1/24"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let psi = PsiSequence::custom("twos", values).unwrap();
        let d = DeltaOperator::partial(Arc::new(psi), 3);
        let r = qmutator_check(&d, 2).unwrap();
        assert_eq!(r.failures, vec![0]);
    }
}
