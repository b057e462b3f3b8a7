//! Pincherle ψ-derivative as an explicit commutator `T x̂ψ - x̂ψ T`.
//!
//! This is the defining form; `OperatorSeries::pincherle` is the formal
//! derivative shortcut and is cross-checked against it.

use super::matrix::OperatorMatrix;
use super::series::OperatorSeries;
use crate::error::Result;
use crate::psi::apply_xhat_psi;

/// Matrix of `f x̂ψ - x̂ψ f` on degrees `0..=degree` (`degree + 2` rows).
pub fn pincherle_commutator(f: &OperatorSeries, degree: usize) -> Result<OperatorMatrix> {
    let psi = f.psi();
    OperatorMatrix::of_map(degree + 2, degree + 1, |p| {
        let left = f.apply(&apply_xhat_psi(psi, p)?)?;
        let right = apply_xhat_psi(psi, &f.apply(p)?)?;
        Ok(left.sub(&right))
    })
}

/// Matrix of the formal derivative series in the same frame.
pub fn pincherle_series_matrix(f: &OperatorSeries, degree: usize) -> Result<OperatorMatrix> {
    let d = f.pincherle();
    OperatorMatrix::of_map(degree + 2, degree + 1, |p| d.apply(p))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::kernel::RatFun;
    use crate::psi::PsiSequence;

    #[test]
    fn commutator_of_partial_is_identity() {
        for psi in [PsiSequence::qgauss(12), PsiSequence::fibonacci(12)] {
            let psi = Arc::new(psi);
            let d = OperatorSeries::partial(psi, 9);
            let m = pincherle_commutator(&d, 8).unwrap();
            assert_eq!(m, OperatorMatrix::identity(9).resized(10, 9).unwrap());
        }
    }

    #[test]
    fn commutator_of_square() {
        let psi = Arc::new(PsiSequence::square(12));
        let d2 = OperatorSeries::partial(psi.clone(), 9).pow(2).unwrap();
        let m = pincherle_commutator(&d2, 8).unwrap();
        let two_d = OperatorSeries::partial(psi, 9).scale(&RatFun::from_i64(2));
        let expect = OperatorMatrix::of_map(10, 9, |p| two_d.apply(p)).unwrap();
        assert_eq!(m, expect);
        assert_eq!(m, pincherle_series_matrix(&d2, 8).unwrap());
    }
}
