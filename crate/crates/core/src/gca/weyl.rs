use std::f64::consts::PI;

use num_complex::Complex64;

use super::su2::cyclic_shift;
use super::{CheckReport, CONVENTION_TOLERANCE, UNITARY_TOLERANCE};
use crate::error::{Error, Result};
use crate::kernel::ComplexMatrix;

/// Clock and shift matrices with `ω = exp(2πi/n)`, the Sylvester matrix
/// `S = (ω^{kl}/√n)`, `Q = diag(0, ..., n-1)` and `P = S†QS`.
#[derive(Clone, Debug)]
pub struct WeylPair {
    pub n: usize,
    pub omega: Complex64,
    /// Cyclic shift: ones on the superdiagonal and at `(n-1, 0)`.
    pub sigma1: ComplexMatrix,
    /// `U = ω^Q`.
    pub sigma2: ComplexMatrix,
    pub qmat: ComplexMatrix,
    pub pmat: ComplexMatrix,
    pub smat: ComplexMatrix,
    /// `ω^P`, computed as `S†US`.
    pub omega_p: ComplexMatrix,
}

fn root(n: usize, k: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k / n as f64)
}

pub fn weyl_build(n: usize) -> Result<WeylPair> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Weyl pair needs n >= 2, got {n}"
        )));
    }
    let omega = root(n, 1.0);
    let qmat = ComplexMatrix::diag(
        &(0..n)
            .map(|k| Complex64::new(k as f64, 0.0))
            .collect::<Vec<_>>(),
    );
    let sigma2 = ComplexMatrix::diag(&(0..n).map(|k| root(n, k as f64)).collect::<Vec<_>>());
    let norm = (n as f64).sqrt().recip();
    // reduce kl mod n so large n keeps the phase accurate
    let smat = ComplexMatrix::from_fn(n, |k, l| root(n, ((k * l) % n) as f64) * norm);
    let s_adj = smat.adjoint();
    let pmat = s_adj.mul(&qmat)?.mul(&smat)?;
    let omega_p = s_adj.mul(&sigma2)?.mul(&smat)?;
    Ok(WeylPair {
        n,
        omega,
        sigma1: cyclic_shift(n),
        sigma2,
        qmat,
        pmat,
        smat,
        omega_p,
    })
}

/// Clifford relations, the Weyl sign, `ω^P` against the shift, the entries
/// of `P`, and the spectrum of the shift.
pub fn weyl_check(pair: &WeylPair, tol: f64) -> Result<CheckReport> {
    let n = pair.n;
    let id = ComplexMatrix::identity(n);
    let mut report = CheckReport::new("weyl_pair");
    report.param("n", n);
    report.convention("q_matrix", "Q = diag(0, 1, ..., n-1)");

    let e = n as i64;
    report.residual(
        "sigma1_power_n",
        pair.sigma1.power_int(e)?.sub(&id)?.inf_norm(),
        tol,
    );
    report.residual(
        "sigma2_power_n",
        pair.sigma2.power_int(e)?.sub(&id)?.inf_norm(),
        tol,
    );

    let lhs = pair.sigma1.mul(&pair.sigma2)?;
    let rhs = pair.sigma2.mul(&pair.sigma1)?;
    let plus = lhs.sub(&rhs.scale(pair.omega))?.inf_norm();
    let minus = lhs.sub(&rhs.scale(pair.omega.conj()))?.inf_norm();
    let (s, weyl) = if plus <= minus {
        (1, plus)
    } else {
        (-1, minus)
    };
    let omega_s = if s == 1 {
        pair.omega
    } else {
        pair.omega.conj()
    };
    report.convention("weyl_sign", if s == 1 { "s = +1" } else { "s = -1" });
    report.residual("weyl_relation", weyl, tol);
    let group = pair
        .sigma1
        .mul(&pair.sigma2)?
        .mul(&pair.sigma1.inverse()?)?
        .mul(&pair.sigma2.inverse()?)?
        .sub(&id.scale(omega_s))?
        .inf_norm();
    report.residual("group_commutator", group, tol);

    let unitary = pair.smat.adjoint().mul(&pair.smat)?.sub(&id)?.inf_norm();
    report.residual("sylvester_unitary", unitary, UNITARY_TOLERANCE);

    let to_shift = pair.omega_p.sub(&pair.sigma1)?.inf_norm();
    let to_adjoint = pair.omega_p.sub(&pair.sigma1.adjoint())?.inf_norm();
    if to_shift <= to_adjoint {
        report.convention("omega_p", "omega^P = sigma1");
        report.residual("omega_p", to_shift, CONVENTION_TOLERANCE);
    } else {
        report.convention("omega_p", "omega^P = adjoint(sigma1)");
        report.residual("omega_p", to_adjoint, CONVENTION_TOLERANCE);
    }

    let half = (n as f64 - 1.0) / 2.0;
    let mut off = 0f64;
    let mut diag = 0f64;
    let mut printed_diag = 0f64;
    for a in 0..n {
        for k in 0..n {
            let p = pair.pmat[(a, k)];
            if a == k {
                diag = diag.max((p - half).norm());
                printed_diag = printed_diag.max(p.norm());
            } else {
                let closed = (root(n, -(a as f64 - k as f64)) - 1.0).inv();
                off = off.max((p - closed).norm());
            }
        }
    }
    report.residual("p_offdiagonal", off, tol);
    report.residual("p_diagonal", diag, tol);
    report
        .deviations
        .insert("p_printed_zero_diagonal".into(), printed_diag);
    if printed_diag > tol {
        report.flags.push(format!(
            "printed zero diagonal of P deviates: P_aa = (n-1)/2 = {half}"
        ));
    }

    let spectrum = (0..n)
        .map(|k| {
            id.scale(root(n, k as f64))
                .sub(&pair.sigma1)
                .map(|m| m.determinant().norm())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0f64, f64::max);
    report.residual("sigma1_spectrum", spectrum, CONVENTION_TOLERANCE);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_case() {
        let p = weyl_build(2).unwrap();
        let x = ComplexMatrix::from_fn(2, |i, k| {
            Complex64::new(if i != k { 1.0 } else { 0.0 }, 0.0)
        });
        assert_eq!(p.sigma1, x);
        assert!((p.sigma2[(1, 1)] + 1.0).norm() < 1e-15);
        let r = weyl_check(&p, 1e-10).unwrap();
        assert!(r.pass, "{r:?}");
        let s = p.smat[(1, 1)] * 2f64.sqrt();
        assert!((s + 1.0).norm() < 1e-15);
    }

    #[test]
    fn p_diagonal_n3() {
        let p = weyl_build(3).unwrap();
        for a in 0..3 {
            assert!((p.pmat[(a, a)] - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn n4_report() {
        let r = weyl_check(&weyl_build(4).unwrap(), 1e-10).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.convention["weyl_sign"], "s = +1");
        assert_eq!(r.convention["omega_p"], "omega^P = adjoint(sigma1)");
        assert!((r.deviations["p_printed_zero_diagonal"] - 1.5).abs() < 1e-12);
        assert_eq!(r.flags.len(), 1);
    }

    #[test]
    fn n_one_rejected() {
        assert!(weyl_build(1).is_err());
    }
}
