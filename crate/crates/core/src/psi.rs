//! ψ-sequences and the operators they induce on polynomials: the
//! ψ-derivative, its Pincherle partner `x̂ψ`, the Jackson quotient and the
//! generalized translation `E^y(∂ψ)`.
//!
//! A sequence is fixed up to a truncation index `N_max`; every ψ-number,
//! factorial and binomial up to that index is computed eagerly so a
//! `PsiSequence` is immutable and freely shareable.

use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{BiPoly, Poly, RatFun, XPoly};

pub const DEFAULT_N_MAX: usize = 16;

/// The built-in families plus user tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PsiKind {
    /// `ψ_n = 1/n!`
    Classic,
    /// `ψ_n = 1/n_q!`, the Gaussian q-factorial.
    QGauss,
    /// `ψ_n = 1/(F_1 F_2 ... F_n)`
    Fibonacci,
    /// `ψ_n = 1/(n!)^2`
    Square,
    Custom,
}

impl PsiKind {
    pub const BUILTINS: [PsiKind; 4] = [
        PsiKind::Classic,
        PsiKind::QGauss,
        PsiKind::Fibonacci,
        PsiKind::Square,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PsiKind::Classic => "classic",
            PsiKind::QGauss => "qgauss",
            PsiKind::Fibonacci => "fibonacci",
            PsiKind::Square => "square",
            PsiKind::Custom => "custom",
        }
    }

    pub fn from_name(name: &str) -> Option<PsiKind> {
        Self::BUILTINS.into_iter().find(|k| k.name() == name)
    }

    /// The deformed number `n_ψ` of a built-in family.
    fn number(self, n: usize) -> RatFun {
        match self {
            PsiKind::Classic => RatFun::from_i64(n as i64),
            PsiKind::QGauss => RatFun::q_number(n),
            PsiKind::Fibonacci => {
                let (mut a, mut b) = (0i64, 1i64);
                for _ in 0..n {
                    (a, b) = (b, a + b);
                }
                RatFun::from_i64(a)
            }
            PsiKind::Square => RatFun::from_i64((n * n) as i64),
            PsiKind::Custom => unreachable!("custom sequences are table driven"),
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct PsiSequence {
    name: String,
    kind: PsiKind,
    /// ψ_0 ..= ψ_{N_max}
    values: Vec<RatFun>,
    /// n_ψ for n = 0 ..= N_max (0_ψ = 0)
    numbers: Vec<RatFun>,
}

impl fmt::Debug for PsiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PsiSequence")
            .field("name", &self.name)
            .field("n_max", &self.n_max())
            .finish()
    }
}

impl PsiSequence {
    pub fn builtin(kind: PsiKind, n_max: usize) -> Self {
        assert!(kind != PsiKind::Custom, "use PsiSequence::custom");
        let mut numbers = vec![RatFun::zero()];
        let mut values = vec![RatFun::one()];
        for n in 1..=n_max {
            let num = kind.number(n);
            let prev = values.last().unwrap();
            values.push(prev / &num);
            numbers.push(num);
        }
        PsiSequence {
            name: kind.name().to_string(),
            kind,
            values,
            numbers,
        }
    }

    pub fn classic(n_max: usize) -> Self {
        Self::builtin(PsiKind::Classic, n_max)
    }

    pub fn qgauss(n_max: usize) -> Self {
        Self::builtin(PsiKind::QGauss, n_max)
    }

    pub fn fibonacci(n_max: usize) -> Self {
        Self::builtin(PsiKind::Fibonacci, n_max)
    }

    pub fn square(n_max: usize) -> Self {
        Self::builtin(PsiKind::Square, n_max)
    }

    /// Looks up a built-in family by name.
    pub fn by_name(name: &str, n_max: usize) -> Result<Self> {
        PsiKind::from_name(name)
            .map(|k| Self::builtin(k, n_max))
            .ok_or_else(|| {
                let names: Vec<_> = PsiKind::BUILTINS.iter().map(|k| k.name()).collect();
                Error::InvalidPsi(format!(
                    "unknown sequence {name:?}; built-ins are {}",
                    names.join(", ")
                ))
            })
    }

    /// A user table `ψ_0, ..., ψ_{N_max}`; validated eagerly.
    pub fn custom(name: impl Into<String>, values: Vec<RatFun>) -> Result<Self> {
        let Some(first) = values.first() else {
            return Err(Error::InvalidPsi("empty table".into()));
        };
        if !first.is_one() {
            return Err(Error::InvalidPsi(format!("psi_0 must be 1, got {first}")));
        }
        if let Some(n) = values.iter().position(RatFun::is_zero) {
            return Err(Error::InvalidPsi(format!("psi_{n} is zero")));
        }
        let mut numbers = vec![RatFun::zero()];
        for w in values.windows(2) {
            numbers.push(&w[0] / &w[1]);
        }
        Ok(PsiSequence {
            name: name.into(),
            kind: PsiKind::Custom,
            values,
            numbers,
        })
    }

    /// Parses a JSON array of canonical rational-function strings.
    pub fn from_json(name: impl Into<String>, json: &str) -> Result<Self> {
        let strings: Vec<String> =
            serde_json::from_str(json).map_err(|e| Error::InvalidPsi(e.to_string()))?;
        let values = strings
            .iter()
            .map(|s| s.parse::<RatFun>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidPsi(e.to_string()))?;
        Self::custom(name, values)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> PsiKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.n_max() {
            Err(Error::BeyondTruncation {
                index: n,
                n_max: self.n_max(),
            })
        } else {
            Ok(())
        }
    }

    /// `ψ_n`.
    pub fn value(&self, n: usize) -> Result<&RatFun> {
        self.check(n)?;
        Ok(&self.values[n])
    }

    /// The deformed number `n_ψ = ψ_{n-1}/ψ_n`, with `0_ψ = 0`.
    pub fn number(&self, n: usize) -> Result<&RatFun> {
        self.check(n)?;
        Ok(&self.numbers[n])
    }

    /// `n_ψ! = 1/ψ_n`.
    pub fn factorial(&self, n: usize) -> Result<RatFun> {
        self.value(n)?.recip()
    }

    /// `n_ψ (n-1)_ψ ... (n-k+1)_ψ`, equal to `ψ_{n-k}/ψ_n`.
    pub fn falling(&self, n: usize, k: usize) -> Result<RatFun> {
        if k > n {
            return Ok(RatFun::zero());
        }
        Ok(self.value(n - k)? / self.value(n)?)
    }

    /// `C(n,k)_ψ = n_ψ! / (k_ψ! (n-k)_ψ!) = ψ_k ψ_{n-k} / ψ_n`.
    pub fn binomial(&self, n: usize, k: usize) -> Result<RatFun> {
        if k > n {
            return Err(Error::InvalidArgument(format!(
                "binomial index k = {k} exceeds n = {n}"
            )));
        }
        Ok(&(self.value(k)? * self.value(n - k)?) / self.value(n)?)
    }

    /// Eigenvalue `((n+1)_ψ - 1)/n_ψ` of the ψ-mutator on index `n`.
    ///
    /// Index 0 is a 0/0 form; it is only ever multiplied by a vanishing
    /// vector and is returned as zero.
    pub fn mutator_eigenvalue(&self, n: usize) -> Result<RatFun> {
        let next = self.number(n + 1)?;
        if n == 0 {
            return Ok(RatFun::zero());
        }
        Ok(&(next - &RatFun::one()) / self.number(n)?)
    }
}

/// `∂ψ x^n = n_ψ x^(n-1)`.
pub fn apply_partial_psi(psi: &PsiSequence, p: &XPoly) -> Result<XPoly> {
    if let Some(d) = p.degree() {
        psi.check(d)?;
    }
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c * &psi.numbers[n])
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

/// `x̂ψ x^n = (n+1)/(n+1)_ψ x^(n+1)`.
pub fn apply_xhat_psi(psi: &PsiSequence, p: &XPoly) -> Result<XPoly> {
    let Some(d) = p.degree() else {
        return Ok(Poly::zero());
    };
    if d + 1 > psi.n_max() {
        return Err(Error::BeyondTruncation {
            index: d + 1,
            n_max: psi.n_max(),
        });
    }
    let mut coeffs = vec![RatFun::zero()];
    for (n, c) in p.coeffs().iter().enumerate() {
        let factor = RatFun::from_i64(n as i64 + 1).checked_div(&psi.numbers[n + 1])?;
        coeffs.push(c * &factor);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Jackson's difference quotient `(p(x) - p(qx)) / ((1-q) x)`, computed
/// directly from the definition.
pub fn jackson_quotient(p: &XPoly) -> XPoly {
    let one_minus_q = RatFun::one() - RatFun::q();
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| {
            let diff = c - &(c * &RatFun::q_pow(n));
            &diff / &one_minus_q
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `E^y(∂ψ) p = Σ_k y^k ∂ψ^k p / k_ψ!` as a polynomial in `x` and `y`.
pub fn translation_apply(psi: &PsiSequence, p: &XPoly) -> Result<BiPoly> {
    let Some(d) = p.degree() else {
        return Ok(Poly::zero());
    };
    psi.check(d)?;
    // x-coefficients, each a polynomial in y
    let mut out: Vec<XPoly> = vec![Poly::zero(); d + 1];
    let mut deriv = p.clone();
    for k in 0..=d {
        let weight = psi.value(k)?; // 1/k_ψ!
        for (i, c) in deriv.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out[i] = out[i].add(&Poly::monomial(c * weight, k));
            }
        }
        deriv = apply_partial_psi(psi, &deriv)?;
    }
    Ok(Poly::from_coeffs(out))
}
