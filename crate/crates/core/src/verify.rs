//! Identity suites over the grid of ψ-sequences and delta operators, and the
//! numeric checks. Every grid cell is reported, including skipped ones.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gca::{
    polar_decompose, su2_build, su2_commutator_check, weyl_build, weyl_check, CheckReport,
};
use crate::kernel::{Poly, RatFun, XPoly};
use crate::ops::{
    basic_sequence, binomial_type_check, expand_operator, laguerre, pincherle_commutator,
    pincherle_series_matrix, q_scaling_matrix, qccr_check, qmutator_check, reconstruct,
    sheffer_binomial_check, sheffer_sequence, DeltaOperator, Method, OperatorMatrix,
    OperatorSeries,
};
use crate::plane::{binomial_nogo, commutation_check, smallest_witness};
use crate::psi::{PsiKind, PsiSequence, DEFAULT_N_MAX};

/// The four delta operators of the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridDelta {
    /// `∂ψ`
    Partial,
    /// `∂ψ/(∂ψ - 1)`
    Laguerre,
    /// `∂ψ(1 + ∂ψ)`
    PartialOnePlus,
    /// `∂ψ E^1(∂ψ)`
    ShiftedPartial,
}

impl GridDelta {
    pub const ALL: [GridDelta; 4] = [
        GridDelta::Partial,
        GridDelta::Laguerre,
        GridDelta::PartialOnePlus,
        GridDelta::ShiftedPartial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GridDelta::Partial => "partial",
            GridDelta::Laguerre => "laguerre",
            GridDelta::PartialOnePlus => "partial_one_plus",
            GridDelta::ShiftedPartial => "shifted_partial",
        }
    }

    pub fn build(self, psi: Arc<PsiSequence>, order: usize) -> Result<DeltaOperator> {
        Ok(match self {
            GridDelta::Partial => DeltaOperator::partial(psi, order),
            GridDelta::Laguerre => DeltaOperator::laguerre(psi, order),
            GridDelta::PartialOnePlus => DeltaOperator::partial_one_plus(psi, order),
            GridDelta::ShiftedPartial => {
                DeltaOperator::shifted_partial(psi, &RatFun::one(), order)?
            }
        })
    }
}

impl FromStr for GridDelta {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GridDelta::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = GridDelta::ALL.iter().map(|d| d.name()).collect();
                Error::InvalidArgument(format!(
                    "unknown operator {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Built-in ψ-sequences with room for index `n`.
pub fn grid_psis(n: usize) -> Vec<Arc<PsiSequence>> {
    let n_max = DEFAULT_N_MAX.max(n + 2);
    PsiKind::BUILTINS
        .iter()
        .map(|&k| Arc::new(PsiSequence::builtin(k, n_max)))
        .collect()
}

fn grid_cells(n: usize) -> Vec<(Arc<PsiSequence>, GridDelta)> {
    grid_psis(n)
        .into_iter()
        .flat_map(|p| GridDelta::ALL.into_iter().map(move |d| (p.clone(), d)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    pub suite: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Cell {
    fn new(suite: Suite, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Cell {
            suite: suite.name().into(),
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skipped(suite: Suite, name: impl Into<String>, reason: impl Into<String>) -> Self {
        Cell {
            suite: suite.name().into(),
            name: name.into(),
            status: Status::Skipped,
            detail: reason.into(),
        }
    }

    fn from_result(suite: Suite, name: String, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((ok, detail)) => Cell::new(suite, name, ok, detail),
            Err(e) => Cell::new(suite, name, false, format!("error: {e}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Methods,
    Laguerre,
    Binomial,
    Sheffer,
    Expansion,
    Mutator,
    Nogo,
    Pincherle,
    Su2,
    Polar,
    Weyl,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::Methods,
        Suite::Laguerre,
        Suite::Binomial,
        Suite::Sheffer,
        Suite::Expansion,
        Suite::Mutator,
        Suite::Nogo,
        Suite::Pincherle,
        Suite::Su2,
        Suite::Polar,
        Suite::Weyl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Methods => "methods",
            Suite::Laguerre => "laguerre",
            Suite::Binomial => "binomial",
            Suite::Sheffer => "sheffer",
            Suite::Expansion => "expansion",
            Suite::Mutator => "mutator",
            Suite::Nogo => "nogo",
            Suite::Pincherle => "pincherle",
            Suite::Su2 => "su2",
            Suite::Polar => "polar",
            Suite::Weyl => "weyl",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Size parameter for the exact suites.
    pub n: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n: 10,
            tolerance: crate::gca::DEFAULT_TOLERANCE,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub n: usize,
    pub cells: Vec<Cell>,
    pub pass: bool,
}

/// Run the suite; failing cells are reported, never turned into errors.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> VerifyReport {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let cells: Vec<Cell> = suites.into_iter().flat_map(|s| cells_for(s, cfg)).collect();
    VerifyReport {
        suite: suite.name().into(),
        n: cfg.n,
        pass: cells.iter().all(|c| c.status != Status::Fail),
        cells,
    }
}

fn cells_for(suite: Suite, cfg: &VerifyConfig) -> Vec<Cell> {
    let n = cfg.n;
    match suite {
        Suite::Methods => methods(n),
        Suite::Laguerre => vec![laguerre_closed(n)],
        Suite::Binomial => binomial(n),
        Suite::Sheffer => sheffer(n),
        Suite::Expansion => expansion(n, 50, cfg.seed),
        Suite::Mutator => mutator(n),
        Suite::Nogo => nogo(n, 4),
        Suite::Pincherle => pincherle(n, 20, cfg.seed),
        Suite::Su2 => su2(12, cfg.tolerance),
        Suite::Polar => polar(12, cfg.tolerance),
        Suite::Weyl => weyl(24, cfg.tolerance),
        Suite::All => unreachable!(),
    }
}

/// Map in parallel, keeping input order.
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    std::thread::scope(|s| {
        let handles: Vec<_> = items.iter().map(|it| s.spawn(|| f(it))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn cell_name(psi: &PsiSequence, d: GridDelta) -> String {
    format!("{}/{}", psi.name(), d.name())
}

fn failures_detail(failures: &[usize]) -> String {
    if failures.is_empty() {
        "exact".into()
    } else {
        format!("nonzero residual at n = {failures:?}")
    }
}

/// All five basic-sequence constructions agree exactly up to `n`.
pub fn methods(n: usize) -> Vec<Cell> {
    par_map(&grid_cells(n), |(psi, d)| {
        let r = (|| {
            let delta = d.build(psi.clone(), n + 1)?;
            let oracle = basic_sequence(&delta, n, Method::Solve)?;
            oracle.check_invariants()?;
            let mut bad = Vec::new();
            for m in Method::ALL.into_iter().filter(|&m| m != Method::Solve) {
                if basic_sequence(&delta, n, m)?.polys() != oracle.polys() {
                    bad.push(m.name());
                }
            }
            let detail = if bad.is_empty() {
                format!("5 methods agree to n = {n}")
            } else {
                format!("disagree with solve: {}", bad.join(", "))
            };
            Ok((bad.is_empty(), detail))
        })();
        Cell::from_result(Suite::Methods, cell_name(psi, *d), r)
    })
}

/// Closed q-Laguerre form against the solve oracle, and its `q -> 1` limit.
pub fn laguerre_closed(n: usize) -> Cell {
    let r = (|| {
        let psi = Arc::new(PsiSequence::qgauss(DEFAULT_N_MAX.max(n + 2)));
        let classic = Arc::new(PsiSequence::classic(DEFAULT_N_MAX.max(n + 2)));
        let oracle = basic_sequence(&DeltaOperator::laguerre(psi.clone(), n), n, Method::Solve)?;
        let classic_oracle =
            basic_sequence(&DeltaOperator::laguerre(classic, n), n, Method::Solve)?;
        let one = BigRational::from_integer(1.into());
        let mut bad = Vec::new();
        let mut printed_off = Vec::new();
        for k in 0..=n {
            let closed = laguerre::q_laguerre_closed(&psi, k)?;
            if closed != *oracle.get(k) || closed.specialize_q(&one)? != *classic_oracle.get(k) {
                bad.push(k);
            }
            if laguerre::q_laguerre_printed(&psi, k)? != closed {
                printed_off.push(k);
            }
        }
        let detail = if bad.is_empty() {
            format!("closed form = solve to n = {n}, q -> 1 matches classic; printed variant deviates at n = {printed_off:?}")
        } else {
            failures_detail(&bad)
        };
        Ok((bad.is_empty(), detail))
    })();
    Cell::from_result(Suite::Laguerre, "qgauss/laguerre".into(), r)
}

pub fn binomial(n: usize) -> Vec<Cell> {
    par_map(&grid_cells(n), |(psi, d)| {
        let r = (|| {
            let delta = d.build(psi.clone(), n)?;
            let basic = basic_sequence(&delta, n, Method::Solve)?;
            let rep = binomial_type_check(&basic)?;
            Ok((rep.pass, failures_detail(&rep.failures)))
        })();
        Cell::from_result(Suite::Binomial, cell_name(psi, *d), r)
    })
}

/// The three `S` factors of the Sheffer grid.
pub fn sheffer_factors(
    psi: Arc<PsiSequence>,
    order: usize,
) -> Result<Vec<(&'static str, OperatorSeries)>> {
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    Ok(vec![
        (
            "1-partial",
            OperatorSeries::one_minus_partial_pow(psi.clone(), &one, order),
        ),
        (
            "exp_psi_square",
            OperatorSeries::exp_psi_square(psi.clone(), order)?,
        ),
        (
            "(1-partial)^2",
            OperatorSeries::one_minus_partial_pow(psi, &two, order),
        ),
    ])
}

pub fn sheffer(n: usize) -> Vec<Cell> {
    let nested = par_map(&grid_cells(n), |(psi, d)| {
        let base = cell_name(psi, *d);
        let factors = match sheffer_factors(psi.clone(), n) {
            Ok(f) => f,
            Err(e) => {
                return vec![Cell::new(
                    Suite::Sheffer,
                    base,
                    false,
                    format!("error: {e}"),
                )]
            }
        };
        factors
            .into_iter()
            .map(|(s_name, s)| {
                let r = (|| {
                    let delta = d.build(psi.clone(), n)?;
                    let seq = sheffer_sequence(&delta, &s, n)?;
                    seq.check_recurrence()?;
                    let rep = sheffer_binomial_check(&seq)?;
                    Ok((rep.pass, failures_detail(&rep.failures)))
                })();
                Cell::from_result(Suite::Sheffer, format!("{base}/{s_name}"), r)
            })
            .collect()
    });
    nested.into_iter().flatten().collect()
}

fn random_scalar(rng: &mut StdRng) -> RatFun {
    let a = rng.gen_range(-4i64..=4);
    let b = rng.gen_range(-2i64..=2);
    let k = rng.gen_range(0usize..=3);
    let den = rng.gen_range(1i64..=3);
    &RatFun::from_ratio(a, den) + &RatFun::q_pow(k).scale_int(b)
}

/// Random upper-triangular (degree non-increasing) operator on degrees `0..=n`.
pub fn random_operator(rng: &mut StdRng, n: usize) -> OperatorMatrix {
    let mut m = OperatorMatrix::zeros(n + 1, n + 1);
    for j in 0..=n {
        for i in 0..=j {
            if rng.gen_bool(0.6) {
                m.set(i, j, random_scalar(rng));
            }
        }
    }
    m
}

/// Random series of the given order; the constant term may vanish.
pub fn random_series(rng: &mut StdRng, psi: Arc<PsiSequence>, order: usize) -> OperatorSeries {
    let coeffs = (0..=order)
        .map(|_| {
            if rng.gen_bool(0.75) {
                random_scalar(rng)
            } else {
                RatFun::zero()
            }
        })
        .collect();
    OperatorSeries::new(psi, coeffs)
}

/// Expansion then reconstruction is the identity on `count` random operators
/// (cycled over the grid) and on the q-scaling operator.
pub fn expansion(n: usize, count: usize, seed: u64) -> Vec<Cell> {
    let cells = grid_cells(n);
    let mut rng = StdRng::seed_from_u64(seed);
    let jobs: Vec<(usize, OperatorMatrix)> = (0..count)
        .map(|i| (i, random_operator(&mut rng, n)))
        .collect();
    let mut out = par_map(&jobs, |(i, t)| {
        let (psi, d) = &cells[i % cells.len()];
        let r = (|| {
            let delta = d.build(psi.clone(), n)?;
            let coeffs = expand_operator(t, &delta, n)?;
            Ok((
                reconstruct(&coeffs, &delta, n)? == *t,
                "roundtrip".to_string(),
            ))
        })();
        Cell::from_result(
            Suite::Expansion,
            format!("random{i}/{}", cell_name(psi, *d)),
            r,
        )
    });
    let r = (|| {
        let psi = Arc::new(PsiSequence::qgauss(DEFAULT_N_MAX.max(n + 2)));
        let t = q_scaling_matrix(n);
        let mut ok = true;
        for d in GridDelta::ALL {
            let delta = d.build(psi.clone(), n)?;
            ok &= reconstruct(&expand_operator(&t, &delta, n)?, &delta, n)? == t;
        }
        Ok((ok, "roundtrip over all four operators".to_string()))
    })();
    out.push(Cell::from_result(Suite::Expansion, "q_scaling".into(), r));
    out
}

/// Mutator identity on `p_0 .. p_{n-1}` and the q-CCR reduction.
pub fn mutator(n: usize) -> Vec<Cell> {
    let mut out = par_map(&grid_cells(n), |(psi, d)| {
        let r = (|| {
            let delta = d.build(psi.clone(), n)?;
            let rep = qmutator_check(&delta, n)?;
            Ok((rep.pass, failures_detail(&rep.failures)))
        })();
        Cell::from_result(Suite::Mutator, cell_name(psi, *d), r)
    });
    let r = qccr_check(&PsiSequence::qgauss(DEFAULT_N_MAX.max(n + 2)), n)
        .map(|rep| (rep.pass, failures_detail(&rep.failures)));
    out.push(Cell::from_result(Suite::Mutator, "qgauss/qccr".into(), r));
    out
}

/// Plane commutation for every built-in, identity for qgauss to `n`, and a
/// witness at some index `<= witness_bound` for fibonacci and square.
pub fn nogo(n: usize, witness_bound: usize) -> Vec<Cell> {
    let mut out = Vec::new();
    for psi in grid_psis(n) {
        let r = commutation_check(&psi, n).map(|rep| (rep.pass, failures_detail(&rep.failures)));
        out.push(Cell::from_result(
            Suite::Nogo,
            format!("{}/commutation", psi.name()),
            r,
        ));
        let name = format!("{}/binomial", psi.name());
        let r = match psi.kind() {
            PsiKind::QGauss => (0..=n)
                .map(|k| binomial_nogo(&psi, k))
                .collect::<Result<Vec<_>>>()
                .map(|rs| {
                    let bad: Vec<usize> = rs
                        .iter()
                        .filter(|r| !r.is_identity())
                        .map(|r| r.n)
                        .collect();
                    (
                        bad.is_empty(),
                        format!("identity to n = {n}; {}", failures_detail(&bad)),
                    )
                }),
            PsiKind::Classic => Ok((true, "commutative plane; not part of the claim".to_string())),
            _ => smallest_witness(&psi, witness_bound).map(|w| match w {
                Some(w) => (
                    true,
                    format!(
                        "witness at n = {}: residual {}",
                        w.n,
                        bipoly_text(&w.residual)
                    ),
                ),
                None => (false, format!("no witness up to n = {witness_bound}")),
            }),
        };
        out.push(Cell::from_result(Suite::Nogo, name, r));
    }
    out
}

/// `Σ c_{ij} x^i y^j` with exact coefficient strings.
pub fn bipoly_text(p: &crate::kernel::BiPoly) -> String {
    let mut terms = Vec::new();
    for (i, row) in p.table().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push(format!("({c})*x^{i}*y^{j}"));
            }
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Formal derivative against the commutator for `count` random series of
/// order `order`, on degrees up to `order + 2`.
pub fn pincherle(order: usize, count: usize, seed: u64) -> Vec<Cell> {
    let psis = grid_psis(order + 3);
    let mut rng = StdRng::seed_from_u64(seed ^ 0x9e37);
    let jobs: Vec<OperatorSeries> = (0..count)
        .map(|i| random_series(&mut rng, psis[i % psis.len()].clone(), order))
        .collect();
    let degree = order + 2;
    par_map(&jobs.iter().enumerate().collect::<Vec<_>>(), |(i, f)| {
        let r = (|| {
            let ok = pincherle_commutator(f, degree)? == pincherle_series_matrix(f, degree)?;
            Ok((ok, format!("degrees <= {degree}")))
        })();
        Cell::from_result(Suite::Pincherle, format!("random{i}/{}", f.psi().name()), r)
    })
}

/// The deformation parameters of the numeric grid.
pub fn q_grid() -> Vec<(String, Complex64)> {
    use std::f64::consts::PI;
    vec![
        ("0.5".into(), Complex64::new(0.5, 0.0)),
        ("1.5".into(), Complex64::new(1.5, 0.0)),
        ("2.0".into(), Complex64::new(2.0, 0.0)),
        ("exp(i pi/7)".into(), Complex64::from_polar(1.0, PI / 7.0)),
        ("exp(i pi/12)".into(), Complex64::from_polar(1.0, PI / 12.0)),
    ]
}

fn report_cell(suite: Suite, name: String, r: Result<CheckReport>) -> Cell {
    Cell::from_result(
        suite,
        name,
        r.map(|rep| {
            let worst = rep.residuals.values().fold(0f64, |a, &b| a.max(b));
            let mut detail = format!("max residual {worst:.3e}");
            for (k, v) in &rep.convention {
                detail.push_str(&format!("; {k}: {v}"));
            }
            for f in &rep.flags {
                detail.push_str(&format!("; flagged: {f}"));
            }
            (rep.pass, detail)
        }),
    )
}

fn j_label(two_j: u32) -> String {
    if two_j.is_multiple_of(2) {
        format!("{}", two_j / 2)
    } else {
        format!("{two_j}/2")
    }
}

/// Commutators for `2j = 1 ..= max_two_j` over the q grid and undeformed,
/// plus the `q -> 1` continuity of `J+` for `j <= 4`.
pub fn su2(max_two_j: u32, tol: f64) -> Vec<Cell> {
    let mut out = Vec::new();
    let mut qs: Vec<(String, Option<Complex64>)> = vec![("undeformed".into(), None)];
    qs.extend(q_grid().into_iter().map(|(l, q)| (l, Some(q))));
    for two_j in 1..=max_two_j {
        for (label, q) in &qs {
            let r = su2_build(two_j, *q).and_then(|rep| su2_commutator_check(&rep, tol));
            out.push(report_cell(
                Suite::Su2,
                format!("j={}/q={label}", j_label(two_j)),
                r,
            ));
        }
    }
    for two_j in 1..=max_two_j.min(8) {
        let r = (|| {
            let near = su2_build(two_j, Some(Complex64::new(1.0 + 1e-6, 0.0)))?;
            let plain = su2_build(two_j, None)?;
            let d = near.jplus().sub(plain.jplus())?;
            let worst = (0..d.dim())
                .flat_map(|i| (0..d.dim()).map(move |k| (i, k)))
                .map(|ik| d[ik].norm())
                .fold(0f64, f64::max);
            Ok((worst <= 1e-4, format!("max entry deviation {worst:.3e}")))
        })();
        out.push(Cell::from_result(
            Suite::Su2,
            format!("j={}/q->1", j_label(two_j)),
            r,
        ));
    }
    out
}

/// Polar decomposition for real q and undeformed; unit-circle q where some
/// bracket is non-positive is listed as skipped.
pub fn polar(max_two_j: u32, tol: f64) -> Vec<Cell> {
    let mut out = Vec::new();
    let mut qs: Vec<(String, Option<Complex64>)> = vec![("undeformed".into(), None)];
    qs.extend(q_grid().into_iter().map(|(l, q)| (l, Some(q))));
    for two_j in 1..=max_two_j {
        for (label, q) in &qs {
            let name = format!("j={}/q={label}", j_label(two_j));
            let r = su2_build(two_j, *q).and_then(|rep| polar_decompose(&rep, tol));
            out.push(match r {
                Err(Error::NotPsd) => Cell::skipped(Suite::Polar, name, Error::NotPsd.to_string()),
                other => report_cell(Suite::Polar, name, other.map(|p| p.report)),
            });
        }
    }
    out
}

pub fn weyl(max_n: usize, tol: f64) -> Vec<Cell> {
    (2..=max_n)
        .map(|n| {
            let r = weyl_build(n).and_then(|p| weyl_check(&p, tol));
            report_cell(Suite::Weyl, format!("n={n}"), r)
        })
        .collect()
}

/// `x^0 .. x^n` as coefficient-string rows, for tables.
pub fn poly_rows(polys: &[XPoly]) -> Vec<Vec<String>> {
    polys.iter().map(Poly::coeff_strings).collect()
}
