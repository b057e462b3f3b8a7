//! Command-line front end. `run` parses arguments, writes the rendered
//! result to `out` and returns the process exit code: 0 on success, 1 on a
//! failed verification, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gca::{
    polar_decompose, su2_build, su2_commutator_check, weyl_build, weyl_check, CheckReport,
    DEFAULT_TOLERANCE,
};
use crate::kernel::{BiPoly, ComplexMatrix, RatFun, XPoly};
use crate::ops::{
    basic_sequence, expand_operator, laguerre, q_scaling_matrix, reconstruct, sheffer_sequence,
    DeltaOperator, Method, OperatorMatrix, OperatorSeries,
};
use crate::plane::{binomial_nogo, commutation_check, expects_identity};
use crate::psi::{apply_partial_psi, PsiKind, PsiSequence, DEFAULT_N_MAX};
use crate::verify::{self, GridDelta, Status, Suite, VerifyConfig};

#[derive(Parser, Debug)]
#[command(
    name = "umbral",
    version,
    about = "psi-umbral calculus tables and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    /// Built-in sequence name or path to a JSON array of rational-function strings
    #[arg(long, default_value = "qgauss")]
    psi: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct Numeric {
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
    tolerance: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SFactor {
    /// 1 - ∂ψ
    OneMinusPartial,
    /// exp_ψ{∂ψ²}
    ExpPsiSquare,
    /// (1 - ∂ψ)²
    OneMinusPartialSq,
    /// (1 - ∂ψ)^(α+1), needs --alpha
    Laguerre,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OperatorKind {
    QScaling,
    Identity,
    /// x̂ ∂ψ
    XPartial,
    /// Random degree non-increasing operator from --seed
    Random,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SpinCheck {
    All,
    Commutators,
    Polar,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ψ_n, n_ψ and n_ψ! for n = 0..=N
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long = "N", default_value_t = 10)]
        big_n: usize,
    },
    /// Basic polynomial sequence of a delta operator
    Basic {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "partial", value_parser = parse_delta)]
        op: GridDelta,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value = "solve", value_parser = parse_method)]
        method: Method,
    },
    /// Sheffer sequence s_n = S^{-1} p_n
    Sheffer {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "partial", value_parser = parse_delta)]
        op: GridDelta,
        #[arg(long, value_enum, default_value = "one-minus-partial")]
        s: SFactor,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// (q-)Laguerre polynomials; with --alpha the Sheffer family of order α
    Laguerre {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Expand an operator as Σ q_k(x̂_Q) Q^k and reconstruct it
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "partial", value_parser = parse_delta)]
        op: GridDelta,
        #[arg(long = "N", default_value_t = 6)]
        big_n: usize,
        #[arg(long = "operator", value_enum, default_value = "q-scaling")]
        operator: OperatorKind,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// ψ-binomial expansion of (A+B)^n on the quantum plane
    Nogo {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// su(2) / su_q(2) spin-j matrices and their checks
    Spin {
        #[command(flatten)]
        numeric: Numeric,
        /// Half-integer such as 1/2, 1, 3/2 or 2.5
        #[arg(long)]
        j: String,
        /// re[,im]; omit for the undeformed algebra
        #[arg(long)]
        q: Option<String>,
        #[arg(long, value_enum, default_value = "all")]
        check: SpinCheck,
    },
    /// Generalized Pauli matrices, Sylvester matrix and P
    Weyl {
        #[command(flatten)]
        numeric: Numeric,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Run identity suites
    Verify {
        #[command(flatten)]
        numeric: Numeric,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long = "N", default_value_t = 8)]
        big_n: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

fn parse_delta(s: &str) -> std::result::Result<GridDelta, String> {
    s.replace('-', "_")
        .parse()
        .map_err(|e: Error| e.to_string())
}

fn parse_tolerance(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t >= 0.0 => Ok(t),
        _ => Err(format!(
            "tolerance must be a non-negative number, got {s:?}"
        )),
    }
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Rendered result of one command.
struct Output {
    json: Value,
    csv: Vec<Vec<String>>,
    text: String,
    code: i32,
}

impl Output {
    fn ok(json: Value, csv: Vec<Vec<String>>, text: String) -> Self {
        Output {
            json,
            csv,
            text,
            code: 0,
        }
    }
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let (format, result) = execute(cli.command);
    match result {
        Ok(o) => {
            let written = match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("serializable")
                ),
                Format::Text => write!(out, "{}", o.text),
                Format::Csv => write_csv(out, &o.csv),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn write_csv(out: &mut dyn Write, rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::NonInvertible | Error::ZeroDivisor | Error::NotDiagonal => 1,
        _ => 2,
    }
}

fn execute(cmd: Command) -> (Format, Result<Output>) {
    match cmd {
        Command::Table { common, big_n } => (common.format, table(&common.psi, big_n)),
        Command::Basic {
            common,
            op,
            n,
            method,
        } => (common.format, basic(&common.psi, op, n, method)),
        Command::Sheffer {
            common,
            op,
            s,
            alpha,
            n,
        } => (
            common.format,
            sheffer(&common.psi, op, s, alpha.as_deref(), n),
        ),
        Command::Laguerre { common, n, alpha } => (
            common.format,
            laguerre_cmd(&common.psi, n, alpha.as_deref()),
        ),
        Command::Expand {
            common,
            op,
            big_n,
            operator,
            seed,
        } => (
            common.format,
            expand(&common.psi, op, big_n, operator, seed),
        ),
        Command::Nogo { common, n } => (common.format, nogo(&common.psi, n)),
        Command::Spin {
            numeric,
            j,
            q,
            check,
        } => (
            numeric.format,
            spin(&j, q.as_deref(), check, numeric.tolerance),
        ),
        Command::Weyl { numeric, n } => (numeric.format, weyl(n, numeric.tolerance)),
        Command::Verify {
            numeric,
            suite,
            big_n,
            seed,
        } => {
            let cfg = VerifyConfig {
                n: big_n,
                tolerance: numeric.tolerance,
                seed,
            };
            (numeric.format, Ok(verify_cmd(suite, &cfg)))
        }
    }
}

/// A built-in name, or a path to a JSON file of rational-function strings.
pub fn load_psi(spec: &str, needed: usize) -> Result<Arc<PsiSequence>> {
    if PsiKind::from_name(spec).is_some() {
        return Ok(Arc::new(PsiSequence::by_name(
            spec,
            DEFAULT_N_MAX.max(needed),
        )?));
    }
    let path = Path::new(spec);
    if !path.is_file() {
        // reuse the by-name error, which lists the built-ins
        return PsiSequence::by_name(spec, DEFAULT_N_MAX).map(Arc::new);
    }
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::InvalidPsi(format!("{spec}: {e}")))?;
    let name = path
        .file_stem()
        .map_or("custom".into(), |s| s.to_string_lossy().into_owned());
    let psi = PsiSequence::from_json(name, &text)?;
    if psi.n_max() < needed {
        return Err(Error::BeyondTruncation {
            index: needed,
            n_max: psi.n_max(),
        });
    }
    Ok(Arc::new(psi))
}

fn parse_alpha(s: &str) -> Result<BigRational> {
    s.parse::<RatFun>()?
        .as_rational()
        .ok_or_else(|| Error::InvalidArgument(format!("alpha must be rational, got {s:?}")))
}

fn strings(p: &XPoly) -> Vec<String> {
    p.coeff_strings()
}

fn poly_table(polys: &[XPoly]) -> Vec<Vec<String>> {
    polys.iter().map(strings).collect()
}

/// Header `n, x^0, ..., x^d` then one zero-padded row per polynomial.
fn poly_csv(polys: &[XPoly]) -> Vec<Vec<String>> {
    let width = polys.iter().map(|p| p.len()).max().unwrap_or(1).max(1);
    let mut rows = vec![std::iter::once("n".to_string())
        .chain((0..width).map(|k| format!("x^{k}")))
        .collect()];
    for (n, p) in polys.iter().enumerate() {
        let mut row = vec![n.to_string()];
        row.extend((0..width).map(|k| p.coeff(k).to_string()));
        rows.push(row);
    }
    rows
}

fn poly_text(label: &str, polys: &[XPoly]) -> String {
    polys
        .iter()
        .enumerate()
        .map(|(n, p)| format!("{label}_{n}(x) = {p}\n"))
        .collect()
}

fn table(psi: &str, big_n: usize) -> Result<Output> {
    let psi = load_psi(psi, big_n)?;
    let mut rows = Vec::new();
    let mut csv = vec![vec![
        "n".into(),
        "psi_n".into(),
        "number".into(),
        "factorial".into(),
    ]];
    let mut text = format!("psi = {}\n", psi.name());
    for n in 0..=big_n {
        let v = psi.value(n)?.to_string();
        let num = psi.number(n)?.to_string();
        let fact = psi.factorial(n)?.to_string();
        text.push_str(&format!(
            "n = {n}: psi_n = {v}; n_psi = {num}; n_psi! = {fact}\n"
        ));
        csv.push(vec![n.to_string(), v.clone(), num.clone(), fact.clone()]);
        rows.push(json!({"n": n, "psi_n": v, "number": num, "factorial": fact}));
    }
    Ok(Output::ok(
        json!({"psi": psi.name(), "N": big_n, "rows": rows}),
        csv,
        text,
    ))
}

fn basic(psi: &str, op: GridDelta, n: usize, method: Method) -> Result<Output> {
    let psi = load_psi(psi, n + 1)?;
    let delta = op.build(psi.clone(), n + 1)?;
    let seq = basic_sequence(&delta, n, method)?;
    let json = json!({
        "psi": psi.name(),
        "op": op.name(),
        "method": method.name(),
        "Q": delta.series().coeff_strings(),
        "polys": poly_table(seq.polys()),
    });
    let text = format!(
        "psi = {}; Q = {}; method = {method}\n{}",
        psi.name(),
        op.name(),
        poly_text("p", seq.polys())
    );
    Ok(Output::ok(json, poly_csv(seq.polys()), text))
}

fn s_factor(
    kind: SFactor,
    psi: Arc<PsiSequence>,
    alpha: Option<&str>,
    order: usize,
) -> Result<OperatorSeries> {
    let int = |k: i64| BigRational::from_integer(k.into());
    if kind != SFactor::Laguerre && alpha.is_some() {
        return Err(Error::InvalidArgument(
            "--alpha only applies to --s laguerre".into(),
        ));
    }
    Ok(match kind {
        SFactor::OneMinusPartial => OperatorSeries::one_minus_partial_pow(psi, &int(1), order),
        SFactor::OneMinusPartialSq => OperatorSeries::one_minus_partial_pow(psi, &int(2), order),
        SFactor::ExpPsiSquare => OperatorSeries::exp_psi_square(psi, order)?,
        SFactor::Laguerre => {
            let a =
                alpha.ok_or_else(|| Error::InvalidArgument("--s laguerre needs --alpha".into()))?;
            laguerre::laguerre_order_s(psi, &parse_alpha(a)?, order)
        }
    })
}

fn sheffer(psi: &str, op: GridDelta, s: SFactor, alpha: Option<&str>, n: usize) -> Result<Output> {
    let psi = load_psi(psi, n + 1)?;
    let delta = op.build(psi.clone(), n)?;
    let s = s_factor(s, psi.clone(), alpha, n)?;
    let seq = sheffer_sequence(&delta, &s, n)?;
    let json = json!({
        "psi": psi.name(),
        "op": op.name(),
        "Q": delta.series().coeff_strings(),
        "S": s.coeff_strings(),
        "polys": poly_table(seq.polys()),
    });
    let text = format!(
        "psi = {}; Q = {}\n{}",
        psi.name(),
        op.name(),
        poly_text("s", seq.polys())
    );
    Ok(Output::ok(json, poly_csv(seq.polys()), text))
}

fn laguerre_cmd(psi: &str, n: usize, alpha: Option<&str>) -> Result<Output> {
    let psi = load_psi(psi, n + 1)?;
    let delta = DeltaOperator::laguerre(psi.clone(), n);
    let (polys, s) = match alpha {
        None => (
            (0..=n)
                .map(|k| laguerre::q_laguerre_closed(&psi, k))
                .collect::<Result<Vec<_>>>()?,
            None,
        ),
        Some(a) => {
            let s = laguerre::laguerre_order_s(psi.clone(), &parse_alpha(a)?, n);
            (
                sheffer_sequence(&delta, &s, n)?.polys().to_vec(),
                Some(s.coeff_strings()),
            )
        }
    };
    let mut json = json!({
        "psi": psi.name(),
        "Q": delta.series().coeff_strings(),
        "polys": poly_table(&polys),
    });
    if let Some(s) = s {
        json["S"] = json!(s);
        json["alpha"] = json!(alpha);
    }
    let text = format!(
        "psi = {}; Q = d/(d-1)\n{}",
        psi.name(),
        poly_text("L", &polys)
    );
    Ok(Output::ok(json, poly_csv(&polys), text))
}

fn operator_matrix(
    kind: OperatorKind,
    psi: &Arc<PsiSequence>,
    n: usize,
    seed: u64,
) -> Result<OperatorMatrix> {
    Ok(match kind {
        OperatorKind::QScaling => q_scaling_matrix(n),
        OperatorKind::Identity => OperatorMatrix::identity(n + 1),
        OperatorKind::XPartial => {
            OperatorMatrix::of_map(n + 1, n + 1, |p| Ok(apply_partial_psi(psi, p)?.shift_up(1)))?
        }
        OperatorKind::Random => verify::random_operator(&mut StdRng::seed_from_u64(seed), n),
    })
}

fn expand(psi: &str, op: GridDelta, n: usize, kind: OperatorKind, seed: u64) -> Result<Output> {
    let psi = load_psi(psi, n + 1)?;
    let delta = op.build(psi.clone(), n)?;
    let t = operator_matrix(kind, &psi, n, seed)?;
    let coeffs = expand_operator(&t, &delta, n)?;
    let roundtrip = reconstruct(&coeffs, &delta, n)? == t;
    let json = json!({
        "psi": psi.name(),
        "op": op.name(),
        "N": n,
        "T": t.to_strings(),
        "coefficients": poly_table(&coeffs),
        "roundtrip": roundtrip,
    });
    let mut text = format!("psi = {}; Q = {}; N = {n}\n", psi.name(), op.name());
    for (k, c) in coeffs.iter().enumerate() {
        text.push_str(&format!("q_{k}(t) = {}\n", c.to_string().replace('x', "t")));
    }
    text.push_str(&format!(
        "roundtrip: {}\n",
        if roundtrip { "PASS" } else { "FAIL" }
    ));
    let mut o = Output::ok(json, poly_csv(&coeffs), text);
    o.code = if roundtrip { 0 } else { 1 };
    Ok(o)
}

fn bipoly_json(p: &BiPoly) -> Value {
    json!(p
        .table()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn nogo(psi: &str, n: usize) -> Result<Output> {
    let psi = load_psi(psi, n + 1)?;
    let commutes = commutation_check(&psi, n)?.pass;
    let mut first = None;
    for k in 0..=n {
        let r = binomial_nogo(&psi, k)?;
        if !r.is_identity() {
            first = Some(r);
            break;
        }
    }
    let shown = match first {
        Some(ref r) => r.clone(),
        None => binomial_nogo(&psi, n)?,
    };
    let verdict = match (&first, commutes) {
        (_, false) => "FAIL",
        (Some(_), _) if expects_identity(&psi) => "FAIL",
        (Some(_), _) => "WITNESS",
        (None, _) => "PASS",
    };
    let json = json!({
        "psi": psi.name(),
        "n": n,
        "verdict": verdict,
        "commutation": commutes,
        "witness_n": first.as_ref().map(|r| r.n),
        "shown_n": shown.n,
        "lhs": bipoly_json(&shown.lhs),
        "rhs": bipoly_json(&shown.rhs),
        "residual": bipoly_json(&shown.residual),
    });
    let mut csv = vec![vec![
        "part".into(),
        "x_degree".into(),
        "y_degree".into(),
        "coefficient".into(),
    ]];
    for (part, p) in [
        ("lhs", &shown.lhs),
        ("rhs", &shown.rhs),
        ("residual", &shown.residual),
    ] {
        for (i, row) in p.table().iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    csv.push(vec![
                        part.into(),
                        i.to_string(),
                        j.to_string(),
                        c.to_string(),
                    ]);
                }
            }
        }
    }
    let text = format!(
        "psi = {}; n = {n}\nverdict: {verdict}\ncommutation BA - q AB = 0: {commutes}\nat n = {}: residual = {}\n",
        psi.name(),
        shown.n,
        verify::bipoly_text(&shown.residual)
    );
    let mut o = Output::ok(json, csv, text);
    o.code = if verdict == "FAIL" { 1 } else { 0 };
    Ok(o)
}

/// `1/2`, `3`, `1.5` -> `2j`.
pub fn parse_spin(s: &str) -> Result<u32> {
    let bad = || Error::InvalidSpin(format!("j must be a positive half-integer, got {s:?}"));
    let two_j = if let Some((a, b)) = s.split_once('/') {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        match b.trim() {
            "2" => a,
            "1" => 2 * a,
            _ => return Err(bad()),
        }
    } else {
        let v: f64 = s.trim().parse().map_err(|_| bad())?;
        let t = 2.0 * v;
        if t.fract() != 0.0 || !(1.0..=1e6).contains(&t) {
            return Err(bad());
        }
        t as u32
    };
    if two_j == 0 {
        return Err(bad());
    }
    Ok(two_j)
}

/// `re` or `re,im`; `none` selects the undeformed algebra.
pub fn parse_q(s: &str) -> Result<Option<Complex64>> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("none") {
        return Ok(None);
    }
    let bad = || Error::InvalidArgument(format!("q must be re[,im], got {s:?}"));
    let mut parts = s.split(',').map(|p| p.trim().parse::<f64>());
    let re = parts.next().ok_or_else(bad)?.map_err(|_| bad())?;
    let im = match parts.next() {
        Some(v) => v.map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Some(Complex64::new(re, im)))
}

fn report_csv(reports: &[&CheckReport], skipped: &[(String, String)]) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "check".into(),
        "kind".into(),
        "key".into(),
        "value".into(),
    ]];
    for r in reports {
        for (k, v) in &r.params {
            rows.push(vec![
                r.check.clone(),
                "param".into(),
                k.clone(),
                v.to_string(),
            ]);
        }
        for (k, v) in &r.residuals {
            rows.push(vec![
                r.check.clone(),
                "residual".into(),
                k.clone(),
                format!("{v:e}"),
            ]);
        }
        for (k, v) in &r.deviations {
            rows.push(vec![
                r.check.clone(),
                "deviation".into(),
                k.clone(),
                format!("{v:e}"),
            ]);
        }
        for (k, v) in &r.convention {
            rows.push(vec![
                r.check.clone(),
                "convention".into(),
                k.clone(),
                v.clone(),
            ]);
        }
        for f in &r.flags {
            rows.push(vec![
                r.check.clone(),
                "flag".into(),
                String::new(),
                f.clone(),
            ]);
        }
        rows.push(vec![
            r.check.clone(),
            "pass".into(),
            String::new(),
            r.pass.to_string(),
        ]);
    }
    for (check, why) in skipped {
        rows.push(vec![
            check.clone(),
            "skipped".into(),
            String::new(),
            why.clone(),
        ]);
    }
    rows
}

fn report_text(r: &CheckReport) -> String {
    let mut s = format!("{}: {}\n", r.check, if r.pass { "PASS" } else { "FAIL" });
    for (k, v) in &r.params {
        s.push_str(&format!("  param {k} = {v}\n"));
    }
    for (k, v) in &r.convention {
        s.push_str(&format!("  convention {k}: {v}\n"));
    }
    for (k, v) in &r.residuals {
        s.push_str(&format!("  residual {k} = {v:.3e}\n"));
    }
    for (k, v) in &r.deviations {
        s.push_str(&format!("  deviation {k} = {v:.3e}\n"));
    }
    for f in &r.flags {
        s.push_str(&format!("  flagged: {f}\n"));
    }
    s
}

fn matrix_json(m: &ComplexMatrix) -> Value {
    json!(m.to_pairs())
}

fn spin(j: &str, q: Option<&str>, check: SpinCheck, tol: f64) -> Result<Output> {
    let two_j = parse_spin(j)?;
    let q = match q {
        Some(s) => parse_q(s)?,
        None => None,
    };
    let rep = su2_build(two_j, q)?;
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    if check != SpinCheck::Polar {
        reports.push(su2_commutator_check(&rep, tol)?);
    }
    if check != SpinCheck::Commutators {
        match polar_decompose(&rep, tol) {
            Ok(p) => reports.push(p.report),
            Err(Error::NotPsd) if check == SpinCheck::All => {
                skipped.push(("polar_decomposition".to_string(), Error::NotPsd.to_string()))
            }
            Err(e) => return Err(e),
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let json = json!({
        "matrices": {
            "J3": matrix_json(rep.j3()),
            "Jplus": matrix_json(rep.jplus()),
            "Jminus": matrix_json(rep.jminus()),
        },
        "reports": reports,
        "skipped": skipped.iter().map(|(c, w)| json!({"check": c, "reason": w})).collect::<Vec<_>>(),
        "pass": pass,
    });
    let mut text: String = reports.iter().map(report_text).collect();
    for (c, w) in &skipped {
        text.push_str(&format!("{c}: SKIPPED ({w})\n"));
    }
    let refs: Vec<&CheckReport> = reports.iter().collect();
    let mut o = Output::ok(json, report_csv(&refs, &skipped), text);
    o.code = if pass { 0 } else { 1 };
    Ok(o)
}

fn weyl(n: usize, tol: f64) -> Result<Output> {
    let pair = weyl_build(n)?;
    let report = weyl_check(&pair, tol)?;
    let json = json!({
        "matrices": {
            "sigma1": matrix_json(&pair.sigma1),
            "sigma2": matrix_json(&pair.sigma2),
            "Q": matrix_json(&pair.qmat),
            "P": matrix_json(&pair.pmat),
            "S": matrix_json(&pair.smat),
            "omega_P": matrix_json(&pair.omega_p),
        },
        "report": &report,
    });
    let mut o = Output::ok(json, report_csv(&[&report], &[]), report_text(&report));
    o.code = if report.pass { 0 } else { 1 };
    Ok(o)
}

fn verify_cmd(suite: Suite, cfg: &VerifyConfig) -> Output {
    let report = verify::run_suite(suite, cfg);
    let mut csv = vec![vec![
        "suite".into(),
        "cell".into(),
        "status".into(),
        "detail".into(),
    ]];
    let mut text = String::new();
    for c in &report.cells {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        text.push_str(&format!(
            "[{status}] {} {}: {}\n",
            c.suite, c.name, c.detail
        ));
        csv.push(vec![
            c.suite.clone(),
            c.name.clone(),
            status.to_lowercase(),
            c.detail.clone(),
        ]);
    }
    let fails = report
        .cells
        .iter()
        .filter(|c| c.status == Status::Fail)
        .count();
    let skips = report
        .cells
        .iter()
        .filter(|c| c.status == Status::Skipped)
        .count();
    text.push_str(&format!(
        "{}: {} cells, {fails} failed, {skips} skipped\n",
        if report.pass { "PASS" } else { "FAIL" },
        report.cells.len()
    ));
    let code = if report.pass { 0 } else { 1 };
    Output {
        json: serde_json::to_value(&report).expect("serializable"),
        csv,
        text,
        code,
    }
}
