//! Floating-point checks of the q-deformed su(2) representations, their
//! polar decomposition, and the generalized Pauli (Weyl) pair.
//!
//! The symmetric bracket used here is a different deformation from the
//! Gaussian numbers of the exact modules and shares no code with them.

mod su2;
mod weyl;

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub use su2::{polar_decompose, su2_build, su2_commutator_check, PolarDecomposition, SpinRep};
pub use weyl::{weyl_build, weyl_check, WeylPair};

/// Default tolerance for residual norms.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Unitarity of the Sylvester matrix.
pub const UNITARY_TOLERANCE: f64 = 1e-12;
/// Convention matches and spectrum evaluation.
pub const CONVENTION_TOLERANCE: f64 = 1e-8;

/// Outcome of a numeric check. `residuals` are compared against tolerances;
/// `deviations` measure printed claims that are known not to hold and never
/// affect `pass`.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub residuals: BTreeMap<String, f64>,
    pub convention: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub deviations: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    pub pass: bool,
}

impl CheckReport {
    fn new(check: &str) -> Self {
        CheckReport {
            check: check.into(),
            params: BTreeMap::new(),
            residuals: BTreeMap::new(),
            convention: BTreeMap::new(),
            deviations: BTreeMap::new(),
            flags: Vec::new(),
            pass: true,
        }
    }

    fn param(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.params.insert(key.into(), value.into());
    }

    /// Record `value` and fold `value <= tol` into `pass`.
    fn residual(&mut self, key: &str, value: f64, tol: f64) {
        self.pass &= value <= tol;
        self.residuals.insert(key.into(), value);
    }

    fn convention(&mut self, key: &str, value: &str) {
        self.convention.insert(key.into(), value.into());
    }
}

/// `[x]_q = (q^x - q^{-x})/(q - q^{-1})` with the principal power.
pub fn q_bracket(x: f64, q: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    if q == Complex64::new(0.0, 0.0) || q == one || q == -one {
        return Err(Error::DegenerateDeformation);
    }
    let qx = q.powf(x);
    Ok((qx - qx.inv()) / (q - q.inv()))
}

pub(crate) fn q_json(q: Option<Complex64>) -> serde_json::Value {
    match q {
        None => serde_json::Value::Null,
        Some(z) => serde_json::json!([z.re, z.im]),
    }
}
