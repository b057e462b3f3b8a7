use num_complex::Complex64;

use super::{q_bracket, q_json, CheckReport, UNITARY_TOLERANCE};
use crate::error::{Error, Result};
use crate::kernel::ComplexMatrix;

/// Spin-`j` representation in the basis `m = j, j-1, ..., -j` (row 0 is `m = j`).
#[derive(Clone, Debug)]
pub struct SpinRep {
    two_j: u32,
    q: Option<Complex64>,
    j3: ComplexMatrix,
    jplus: ComplexMatrix,
    jminus: ComplexMatrix,
}

fn bracket(x: f64, q: Option<Complex64>) -> Result<Complex64> {
    match q {
        None => Ok(Complex64::new(x, 0.0)),
        Some(q) => q_bracket(x, q),
    }
}

fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.mul(b)?.sub(&b.mul(a)?)
}

/// Build the representation of spin `two_j / 2`; `q = None` is undeformed.
pub fn su2_build(two_j: u32, q: Option<Complex64>) -> Result<SpinRep> {
    if two_j == 0 {
        return Err(Error::InvalidSpin(
            "j must be a positive half-integer".into(),
        ));
    }
    let n = two_j as usize + 1;
    let j = f64::from(two_j) / 2.0;
    let m_of = |i: usize| j - i as f64;

    let j3 = ComplexMatrix::diag(
        &(0..n)
            .map(|i| Complex64::new(m_of(i), 0.0))
            .collect::<Vec<_>>(),
    );
    let mut jplus = ComplexMatrix::zeros(n);
    let mut jminus = ComplexMatrix::zeros(n);
    for i in 0..n {
        let m = m_of(i);
        if i >= 1 {
            jplus[(i - 1, i)] = (bracket(j - m, q)? * bracket(j + m + 1.0, q)?).sqrt();
        }
        if i + 1 < n {
            jminus[(i + 1, i)] = (bracket(j + m, q)? * bracket(j - m + 1.0, q)?).sqrt();
        }
    }
    Ok(SpinRep {
        two_j,
        q,
        j3,
        jplus,
        jminus,
    })
}

impl SpinRep {
    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn j(&self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    pub fn q(&self) -> Option<Complex64> {
        self.q
    }

    pub fn j3(&self) -> &ComplexMatrix {
        &self.j3
    }

    pub fn jplus(&self) -> &ComplexMatrix {
        &self.jplus
    }

    pub fn jminus(&self) -> &ComplexMatrix {
        &self.jminus
    }

    fn is_real_positive(&self) -> bool {
        self.q.is_none_or(|q| q.im == 0.0 && q.re > 0.0)
    }

    fn report(&self, check: &str) -> CheckReport {
        let mut r = CheckReport::new(check);
        r.param("j", self.j());
        r.param("q", q_json(self.q));
        r.param("dim", self.dim());
        r.convention("basis", "m = j, j-1, ..., -j (row 0 is m = j)");
        r
    }
}

/// Residual norms of `[J3, J±] = ±J±` and `[J+, J-] = [2 J3]_q`, plus the
/// off-diagonal part of `[J+, J-]`, and adjointness for real `q > 0`.
pub fn su2_commutator_check(rep: &SpinRep, tol: f64) -> Result<CheckReport> {
    let mut report = rep.report("su2_commutators");
    let r_plus = commutator(&rep.j3, &rep.jplus)?.sub(&rep.jplus)?.inf_norm();
    let r_minus = commutator(&rep.j3, &rep.jminus)?
        .add(&rep.jminus)?
        .inf_norm();
    let two_j3 = rep
        .j3
        .diagonal()
        .iter()
        .map(|m| bracket(2.0 * m.re, rep.q))
        .collect::<Result<Vec<_>>>()?;
    let pm = commutator(&rep.jplus, &rep.jminus)?;
    let r_pm = pm.sub(&ComplexMatrix::diag(&two_j3))?.inf_norm();
    let offdiag = pm.sub(&ComplexMatrix::diag(&pm.diagonal()))?.inf_norm();

    report.residual("j3_jplus", r_plus, tol);
    report.residual("j3_jminus", r_minus, tol);
    report.residual("jplus_jminus", r_pm, tol);
    report.residual("jplus_jminus_offdiagonal", offdiag, tol);
    if rep.is_real_positive() {
        let adj = rep.jminus.sub(&rep.jplus.adjoint())?.inf_norm();
        report.residual("jminus_adjoint", adj, UNITARY_TOLERANCE);
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct PolarDecomposition {
    /// `√(J+J-)`.
    pub modulus: ComplexMatrix,
    /// `√(J-J+)`.
    pub modulus_rev: ComplexMatrix,
    /// The unitary factor, in the convention recorded in the report.
    pub sigma1: ComplexMatrix,
    pub report: CheckReport,
}

/// The cyclic matrix with ones on the superdiagonal and in the bottom-left corner.
pub fn cyclic_shift(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |i, k| {
        if k == (i + 1) % n {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `J+ = M σ1^{-1} = σ1^{-1} M'` with `M = √(J+J-)`, `M' = √(J-J+)`.
///
/// `σ1` is the cyclic matrix or its adjoint, whichever satisfies the `J+`
/// pair. The `J-` pair is checked as `J- = σ1 M = M' σ1`, the adjoint of the
/// `J+` pair; the ordering with the moduli exchanged (`M σ1`, `σ1 M'`) is
/// measured and reported as a deviation.
pub fn polar_decompose(rep: &SpinRep, tol: f64) -> Result<PolarDecomposition> {
    for k in 1..=rep.two_j {
        let b = bracket(f64::from(k), rep.q)?;
        if b.im.abs() > 1e-12 * b.norm().max(1.0) || b.re <= 0.0 {
            return Err(Error::NotPsd);
        }
    }
    let n = rep.dim();
    let modulus = rep.jplus.mul(&rep.jminus)?.diag_sqrt()?;
    let modulus_rev = rep.jminus.mul(&rep.jplus)?.diag_sqrt()?;

    let shift = cyclic_shift(n);
    let candidates = [
        ("cyclic matrix", shift.clone()),
        ("adjoint of cyclic matrix", shift.adjoint()),
    ];
    let mut best: Option<(f64, &str, ComplexMatrix)> = None;
    for (name, sigma) in candidates {
        let inv = sigma.adjoint();
        let r = modulus
            .mul(&inv)?
            .sub(&rep.jplus)?
            .inf_norm()
            .max(inv.mul(&modulus_rev)?.sub(&rep.jplus)?.inf_norm());
        if best.as_ref().is_none_or(|(b, _, _)| r < *b) {
            best = Some((r, name, sigma));
        }
    }
    let (_, name, sigma1) = best.expect("two candidates");
    let inv = sigma1.adjoint();

    let mut report = rep.report("polar_decomposition");
    report.convention("sigma1", name);
    report.convention("jminus_form", "J- = sigma1 sqrt(J+J-) = sqrt(J-J+) sigma1");
    let res =
        |a: ComplexMatrix, target: &ComplexMatrix| -> Result<f64> { Ok(a.sub(target)?.inf_norm()) };
    report.residual("jplus_left", res(modulus.mul(&inv)?, &rep.jplus)?, tol);
    report.residual("jplus_right", res(inv.mul(&modulus_rev)?, &rep.jplus)?, tol);
    report.residual("jminus_left", res(sigma1.mul(&modulus)?, &rep.jminus)?, tol);
    report.residual(
        "jminus_right",
        res(modulus_rev.mul(&sigma1)?, &rep.jminus)?,
        tol,
    );

    let swapped_left = res(modulus.mul(&sigma1)?, &rep.jminus)?;
    let swapped_right = res(sigma1.mul(&modulus_rev)?, &rep.jminus)?;
    report
        .deviations
        .insert("jminus_moduli_exchanged_left".into(), swapped_left);
    report
        .deviations
        .insert("jminus_moduli_exchanged_right".into(), swapped_right);
    if swapped_left.max(swapped_right) > tol {
        report.flags.push(
            "J- = sqrt(J+J-) sigma1 = sigma1 sqrt(J-J+) does not hold; moduli must be exchanged"
                .into(),
        );
    }
    Ok(PolarDecomposition {
        modulus,
        modulus_rev,
        sigma1,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn spin_half_deformed() {
        let rep = su2_build(1, Some(c(2.0))).unwrap();
        assert!((rep.jplus()[(0, 1)] - c(1.0)).norm() < 1e-14);
        assert_eq!(rep.jplus()[(1, 0)], c(0.0));
        assert!((rep.jminus()[(1, 0)] - c(1.0)).norm() < 1e-14);
    }

    #[test]
    fn spin_one_undeformed() {
        let rep = su2_build(2, None).unwrap();
        let s2 = 2f64.sqrt();
        assert!((rep.jplus()[(0, 1)].re - s2).abs() < 1e-14);
        assert!((rep.jplus()[(1, 2)].re - s2).abs() < 1e-14);
        let trace: f64 = rep.j3().diagonal().iter().map(|z| z.re).sum();
        assert_eq!(trace, 0.0);
    }

    #[test]
    fn zero_spin_rejected() {
        assert!(matches!(su2_build(0, None), Err(Error::InvalidSpin(_))));
    }

    #[test]
    fn commutators_small() {
        for q in [None, Some(c(2.0)), Some(Complex64::from_polar(1.0, 0.4))] {
            let r = su2_commutator_check(&su2_build(2, q).unwrap(), 1e-12).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn polar_spin_half() {
        let rep = su2_build(1, Some(c(1.5))).unwrap();
        let p = polar_decompose(&rep, 1e-12).unwrap();
        assert_eq!(p.modulus, ComplexMatrix::diag(&[c(1.0), c(0.0)]));
        assert!(p.report.pass);
        assert!(!p.report.flags.is_empty());
    }

    #[test]
    fn polar_picks_adjoint_in_descending_basis() {
        let p = polar_decompose(&su2_build(2, Some(c(1.5))).unwrap(), 1e-12).unwrap();
        assert!(p.report.pass, "{:?}", p.report);
        assert_eq!(p.report.convention["sigma1"], "adjoint of cyclic matrix");
    }

    #[test]
    fn polar_rejects_negative_brackets() {
        let q = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
        let rep = su2_build(6, Some(q)).unwrap();
        assert!(matches!(polar_decompose(&rep, 1e-10), Err(Error::NotPsd)));
    }
}
