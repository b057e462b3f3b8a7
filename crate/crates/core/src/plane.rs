//! The quantum-plane pair `A = x̂`, `B = y Q̂` with `Q̂ x^n = b_n x^n`, chosen
//! so that `BA - q̂ψ AB = 0`, and the check of whether the ψ-binomial
//! expansion of `(A + B)^n` survives.
//!
//! `y` is a central symbol. `b_0 = 1` (empty product); with `b_0 = 0` the
//! recurrence would force `b ≡ 0`.

use serde::Serialize;

use crate::error::Result;
use crate::kernel::{BiPoly, Poly, RatFun};
use crate::psi::{PsiKind, PsiSequence};

/// `b_0 = 1`, `b_n = Π_{k=1}^n ((k+1)_ψ - 1)/k_ψ`.
pub fn b_sequence(psi: &PsiSequence, n: usize) -> Result<Vec<RatFun>> {
    let mut b = vec![RatFun::one()];
    for k in 1..=n {
        let factor = psi.mutator_eigenvalue(k)?;
        let next = b.last().unwrap() * &factor;
        b.push(next);
    }
    Ok(b)
}

/// Concrete operators acting on polynomials in `x` and `y`.
#[derive(Clone, Debug)]
pub struct PlanePair<'a> {
    psi: &'a PsiSequence,
    b: Vec<RatFun>,
}

impl<'a> PlanePair<'a> {
    /// Pair able to act on `x`-degrees up to `max_degree`.
    pub fn new(psi: &'a PsiSequence, max_degree: usize) -> Result<Self> {
        Ok(PlanePair {
            psi,
            b: b_sequence(psi, max_degree)?,
        })
    }

    pub fn b(&self) -> &[RatFun] {
        &self.b
    }

    /// `A`: multiplication by `x`.
    pub fn apply_a(&self, v: &BiPoly) -> BiPoly {
        v.shift_up(1)
    }

    /// `B`: `x^k y^j -> b_k x^k y^{j+1}`.
    pub fn apply_b(&self, v: &BiPoly) -> Result<BiPoly> {
        let coeffs = v
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let bk = self.b.get(k).ok_or(crate::Error::BeyondTruncation {
                    index: k,
                    n_max: self.b.len() - 1,
                })?;
                Ok(row.shift_up(1).scale(bk))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// `q̂ψ`: `x^m -> ((m+1)_ψ - 1)/m_ψ x^m`.
    pub fn apply_mutator(&self, v: &BiPoly) -> Result<BiPoly> {
        let coeffs = v
            .coeffs()
            .iter()
            .enumerate()
            .map(|(m, row)| Ok(row.scale(&self.psi.mutator_eigenvalue(m)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

fn x_pow(n: usize) -> BiPoly {
    Poly::monomial(Poly::one(), n)
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutationReport {
    pub psi: String,
    pub n_max: usize,
    pub failures: Vec<usize>,
    pub pass: bool,
    /// b_0 = 1 (empty product), not 0.
    pub b0_convention: String,
}

/// `(BA - q̂ψ AB) x^n` for `0 <= n < n_max`; every residual must vanish.
pub fn commutation_check(psi: &PsiSequence, n_max: usize) -> Result<CommutationReport> {
    let pair = PlanePair::new(psi, n_max)?;
    let mut failures = Vec::new();
    for n in 0..n_max {
        let v = x_pow(n);
        let ba = pair.apply_b(&pair.apply_a(&v))?;
        let ab = pair.apply_a(&pair.apply_b(&v)?);
        let residual = ba.sub(&pair.apply_mutator(&ab)?);
        if !residual.is_zero() {
            failures.push(n);
        }
    }
    Ok(CommutationReport {
        psi: psi.name().to_string(),
        n_max,
        pass: failures.is_empty(),
        failures,
        b0_convention: "b_0 = 1".into(),
    })
}

#[derive(Clone, Debug)]
pub struct NogoResult {
    pub n: usize,
    pub lhs: BiPoly,
    pub rhs: BiPoly,
    pub residual: BiPoly,
}

impl NogoResult {
    pub fn is_identity(&self) -> bool {
        self.residual.is_zero()
    }
}

/// `(A+B)^n 1` against `Σ_k C(n,k)_ψ A^k B^{n-k} 1`.
pub fn binomial_nogo(psi: &PsiSequence, n: usize) -> Result<NogoResult> {
    let pair = PlanePair::new(psi, n)?;
    let one: BiPoly = x_pow(0);

    let mut lhs = one.clone();
    for _ in 0..n {
        lhs = pair.apply_a(&lhs).add(&pair.apply_b(&lhs)?);
    }

    let mut rhs: BiPoly = Poly::zero();
    for k in 0..=n {
        let mut term = one.clone();
        for _ in 0..n - k {
            term = pair.apply_b(&term)?;
        }
        for _ in 0..k {
            term = pair.apply_a(&term);
        }
        let c = psi.binomial(n, k)?;
        rhs = rhs.add(&term.map(|row| row.scale(&c)));
    }
    let residual = lhs.sub(&rhs);
    Ok(NogoResult {
        n,
        lhs,
        rhs,
        residual,
    })
}

/// Smallest `n <= max_n` with a nonzero no-go residual.
pub fn smallest_witness(psi: &PsiSequence, max_n: usize) -> Result<Option<NogoResult>> {
    for n in 0..=max_n {
        let r = binomial_nogo(psi, n)?;
        if !r.is_identity() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// True for the one family where the plane identification is expected to hold.
pub fn expects_identity(psi: &PsiSequence) -> bool {
    psi.kind() == PsiKind::QGauss
}
