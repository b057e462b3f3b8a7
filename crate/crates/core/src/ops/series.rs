use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::kernel::{Poly, RatFun, XPoly};
use crate::psi::{apply_partial_psi, PsiSequence};

/// `Σ_{k=0}^{N} a_k ∂ψ^k`, a ∂ψ-shift-invariant operator truncated at order `N`.
///
/// Products and inverses are exact modulo `∂ψ^{N+1}`, so the series acts
/// exactly on polynomials of degree at most `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSeries {
    psi: Arc<PsiSequence>,
    coeffs: Vec<RatFun>,
}

impl OperatorSeries {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn new(psi: Arc<PsiSequence>, coeffs: Vec<RatFun>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        OperatorSeries { psi, coeffs }
    }

    pub fn from_fn(psi: Arc<PsiSequence>, order: usize, f: impl Fn(usize) -> RatFun) -> Self {
        Self::new(psi, (0..=order).map(f).collect())
    }

    pub fn zero(psi: Arc<PsiSequence>, order: usize) -> Self {
        Self::from_fn(psi, order, |_| RatFun::zero())
    }

    pub fn identity(psi: Arc<PsiSequence>, order: usize) -> Self {
        Self::from_fn(psi, order, |k| {
            if k == 0 {
                RatFun::one()
            } else {
                RatFun::zero()
            }
        })
    }

    /// `∂ψ` itself.
    pub fn partial(psi: Arc<PsiSequence>, order: usize) -> Self {
        Self::from_fn(psi, order, |k| {
            if k == 1 {
                RatFun::one()
            } else {
                RatFun::zero()
            }
        })
    }

    /// `∂ψ/(∂ψ - 1) = -(∂ψ + ∂ψ² + ...)`, whose basic sequence is q-Laguerre.
    pub fn laguerre_delta(psi: Arc<PsiSequence>, order: usize) -> Self {
        Self::from_fn(psi, order, |k| {
            if k == 0 {
                RatFun::zero()
            } else {
                RatFun::from_i64(-1)
            }
        })
    }

    /// `∂ψ (1 + ∂ψ)`.
    pub fn partial_one_plus(psi: Arc<PsiSequence>, order: usize) -> Self {
        Self::from_fn(psi, order, |k| {
            if k == 1 || k == 2 {
                RatFun::one()
            } else {
                RatFun::zero()
            }
        })
    }

    /// `E^a(∂ψ) = exp_ψ{a ∂ψ} = Σ a^k ∂ψ^k / k_ψ!`.
    pub fn translation(psi: Arc<PsiSequence>, a: &RatFun, order: usize) -> Result<Self> {
        let coeffs = (0..=order)
            .map(|k| Ok(&a.pow(k as u32) * psi.value(k)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(psi, coeffs))
    }

    /// `∂ψ E^a(∂ψ)`, the ψ-analogue of the Abel operator.
    pub fn shifted_partial(psi: Arc<PsiSequence>, a: &RatFun, order: usize) -> Result<Self> {
        let e = Self::translation(psi.clone(), a, order.saturating_sub(1))?;
        let mut coeffs = vec![RatFun::zero()];
        coeffs.extend(e.coeffs);
        coeffs.truncate(order + 1);
        Ok(Self::new(psi, coeffs))
    }

    /// `exp_ψ{∂ψ²}`, coefficient `1/k_ψ!` at `∂ψ^{2k}`.
    pub fn exp_psi_square(psi: Arc<PsiSequence>, order: usize) -> Result<Self> {
        let coeffs = (0..=order)
            .map(|k| {
                if k % 2 == 0 {
                    psi.value(k / 2).cloned()
                } else {
                    Ok(RatFun::zero())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(psi, coeffs))
    }

    /// `(1 - ∂ψ)^e` for rational `e`, ordinary generalized binomial series.
    pub fn one_minus_partial_pow(psi: Arc<PsiSequence>, e: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        // C(e, k) (-1)^k built incrementally
        let mut c = BigRational::one();
        for k in 0..=order {
            coeffs.push(RatFun::from_rational(c.clone()));
            let k_big = BigRational::from_integer((k as i64).into());
            c = -c * (e - &k_big) / (k_big + BigRational::one());
        }
        Self::new(psi, coeffs)
    }

    pub fn psi(&self) -> &Arc<PsiSequence> {
        &self.psi
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFun {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Truncate or zero-pad to the given order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_fn(self.psi.clone(), order, |k| self.coeff(k))
    }

    pub fn is_invertible(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn is_delta(&self) -> bool {
        self.coeffs[0].is_zero() && !self.coeff(1).is_zero()
    }

    fn same_psi(&self, rhs: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.psi, &rhs.psi) || self.psi == rhs.psi {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "series over different psi sequences ({} vs {})",
                self.psi.name(),
                rhs.psi.name()
            )))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_psi(rhs)?;
        let order = self.order().min(rhs.order());
        Ok(Self::from_fn(self.psi.clone(), order, |k| {
            &self.coeffs[k] + &rhs.coeffs[k]
        }))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.scale(&RatFun::from_i64(-1)))
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        Self::new(
            self.psi.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_psi(rhs)?;
        let order = self.order().min(rhs.order());
        let mut out = vec![RatFun::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::new(self.psi.clone(), out))
    }

    /// Multiplicative inverse modulo `∂ψ^{N+1}`.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NonInvertible);
        }
        let inv0 = self.coeffs[0].recip()?;
        let mut out: Vec<RatFun> = vec![inv0.clone()];
        for k in 1..=self.order() {
            let mut acc = RatFun::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(-(&acc * &inv0));
        }
        Ok(Self::new(self.psi.clone(), out))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = Self::identity(self.psi.clone(), self.order());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Pincherle derivative `[T, x̂ψ]` as the formal derivative
    /// `Σ k a_k ∂ψ^{k-1}`; the order drops by one.
    pub fn pincherle(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(self.psi.clone(), 0);
        }
        Self::from_fn(self.psi.clone(), self.order() - 1, |k| {
            self.coeffs[k + 1].scale_int(k as i64 + 1)
        })
    }

    /// Apply to a polynomial; terms past the stored order are taken as zero.
    pub fn apply(&self, p: &XPoly) -> Result<XPoly> {
        let Some(d) = p.degree() else {
            return Ok(Poly::zero());
        };
        let top = d.min(self.order());
        // Horner in ∂ψ: a_0 p + ∂(a_1 p + ∂(a_2 p + ...))
        let mut acc = p.scale(&self.coeffs[top]);
        for k in (0..top).rev() {
            acc = apply_partial_psi(&self.psi, &acc)?.add(&p.scale(&self.coeffs[k]));
        }
        Ok(acc)
    }
}

/// A series with `a_0 = 0` and `a_1 != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaOperator {
    series: OperatorSeries,
}

impl DeltaOperator {
    pub fn new(series: OperatorSeries) -> Result<Self> {
        if !series.coeffs[0].is_zero() {
            return Err(Error::NotDelta(format!(
                "constant term {} must vanish",
                series.coeffs[0]
            )));
        }
        if series.coeff(1).is_zero() {
            return Err(Error::NotDelta("linear term must be nonzero".into()));
        }
        Ok(DeltaOperator { series })
    }

    pub fn series(&self) -> &OperatorSeries {
        &self.series
    }

    pub fn psi(&self) -> &Arc<PsiSequence> {
        self.series.psi()
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn apply(&self, p: &XPoly) -> Result<XPoly> {
        self.series.apply(p)
    }

    /// The unique invertible `S` with `Q = ∂ψ S`: `s_k = a_{k+1}`.
    pub fn s_factor(&self) -> OperatorSeries {
        let coeffs = self.series.coeffs[1..].to_vec();
        OperatorSeries::new(self.series.psi.clone(), coeffs)
    }

    pub fn partial(psi: Arc<PsiSequence>, order: usize) -> Self {
        Self::new(OperatorSeries::partial(psi, order)).unwrap()
    }

    pub fn laguerre(psi: Arc<PsiSequence>, order: usize) -> Self {
        Self::new(OperatorSeries::laguerre_delta(psi, order)).unwrap()
    }

    pub fn partial_one_plus(psi: Arc<PsiSequence>, order: usize) -> Self {
        Self::new(OperatorSeries::partial_one_plus(psi, order)).unwrap()
    }

    pub fn shifted_partial(psi: Arc<PsiSequence>, a: &RatFun, order: usize) -> Result<Self> {
        Self::new(OperatorSeries::shifted_partial(psi, a, order)?)
    }
}
