//! Sheffer sequences `s_n = S^{-1} p_n` and the binomial-type identities.

use serde::Serialize;

use super::basic::{basic_sequence, BasicSequence, Method};
use super::series::{DeltaOperator, OperatorSeries};
use crate::error::{Error, Result};
use crate::kernel::{BiPoly, Poly, XPoly};
use crate::psi::translation_apply;

#[derive(Clone, Debug, PartialEq)]
pub struct ShefferSequence {
    s: OperatorSeries,
    basic: BasicSequence,
    polys: Vec<XPoly>,
}

impl ShefferSequence {
    pub fn s(&self) -> &OperatorSeries {
        &self.s
    }

    pub fn basic(&self) -> &BasicSequence {
        &self.basic
    }

    pub fn delta(&self) -> &DeltaOperator {
        self.basic.delta()
    }

    pub fn polys(&self) -> &[XPoly] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> &XPoly {
        &self.polys[n]
    }

    /// `s_0` is a nonzero constant and `Q s_n = n_ψ s_{n-1}`.
    pub fn check_recurrence(&self) -> Result<()> {
        let psi = self.delta().psi();
        if self.polys[0].degree() != Some(0) {
            return Err(Error::Internal("s_0 is not a nonzero constant".into()));
        }
        for n in 1..self.polys.len() {
            let lhs = self.delta().apply(&self.polys[n])?;
            let rhs = self.polys[n - 1].scale(psi.number(n)?);
            if lhs != rhs {
                return Err(Error::Internal(format!("Q s_{n} != n_psi s_{}", n - 1)));
            }
        }
        Ok(())
    }
}

/// `s_n = S^{-1} p_n` for `n = 0 ..= n_max`; `S` must be known to order `n_max`.
pub fn sheffer_sequence(
    delta: &DeltaOperator,
    s: &OperatorSeries,
    n_max: usize,
) -> Result<ShefferSequence> {
    if !s.is_invertible() {
        return Err(Error::NonInvertible);
    }
    if s.order() < n_max {
        return Err(Error::TruncationExceeded(format!(
            "S known to order {} but n = {n_max} requested",
            s.order()
        )));
    }
    let basic = basic_sequence(delta, n_max, Method::Solve)?;
    let s_inv = s.with_order(n_max).invert()?;
    let polys = basic
        .polys()
        .iter()
        .map(|p| s_inv.apply(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(ShefferSequence {
        s: s.clone(),
        basic,
        polys,
    })
}

/// Per-index residuals of a bivariate identity; all zero on success.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub check: String,
    pub max_index: usize,
    /// Indices with a nonzero residual.
    pub failures: Vec<usize>,
    pub pass: bool,
    #[serde(skip)]
    pub residuals: Vec<BiPoly>,
}

impl IdentityReport {
    fn from_residuals(check: &str, residuals: Vec<BiPoly>) -> Self {
        let failures: Vec<usize> = residuals
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(n, _)| n)
            .collect();
        IdentityReport {
            check: check.to_string(),
            max_index: residuals.len().saturating_sub(1),
            pass: failures.is_empty(),
            failures,
            residuals,
        }
    }
}

/// `E^y(∂ψ) s_n - Σ_k C(n,k)_ψ s_k(x) p_{n-k}(y)` for each `n`.
fn binomial_residuals(polys: &[XPoly], basic: &BasicSequence) -> Result<Vec<BiPoly>> {
    let psi = basic.delta().psi();
    polys
        .iter()
        .enumerate()
        .map(|(n, s_n)| {
            let lhs = translation_apply(psi, s_n)?;
            let mut rhs: BiPoly = Poly::zero();
            for (k, s_k) in polys.iter().enumerate().take(n + 1) {
                let c = psi.binomial(n, k)?;
                rhs = rhs.add(&BiPoly::outer(&s_k.scale(&c), basic.get(n - k)));
            }
            Ok(lhs.sub(&rhs))
        })
        .collect()
}

/// Binomial-type identity of a basic sequence.
pub fn binomial_type_check(basic: &BasicSequence) -> Result<IdentityReport> {
    let r = binomial_residuals(basic.polys(), basic)?;
    Ok(IdentityReport::from_residuals("binomial_type", r))
}

/// Sheffer identity `E^y(∂ψ) s_n = Σ_k C(n,k)_ψ s_k(x) p_{n-k}(y)`.
pub fn sheffer_binomial_check(seq: &ShefferSequence) -> Result<IdentityReport> {
    let r = binomial_residuals(seq.polys(), seq.basic())?;
    Ok(IdentityReport::from_residuals("sheffer_binomial", r))
}
