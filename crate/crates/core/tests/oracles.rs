//! Frozen values, each checked by hand or against a classical closed form.

use std::sync::Arc;

use num_complex::Complex64;
use umbral::gca::{q_bracket, su2_build, weyl_build};
use umbral::kernel::{Poly, RatFun, XPoly};
use umbral::ops::{
    basic_sequence, expand_operator, laguerre, q_scaling_matrix, sheffer_sequence, DeltaOperator,
    Method, OperatorSeries,
};
use umbral::plane::binomial_nogo;
use umbral::psi::{translation_apply, PsiSequence};
use umbral::verify::bipoly_text;

fn r(s: &str) -> RatFun {
    s.parse().unwrap()
}

fn strings(p: &XPoly) -> Vec<String> {
    p.coeff_strings()
}

#[test]
fn gaussian_factorial_and_binomial() {
    let psi = PsiSequence::qgauss(8);
    assert_eq!(
        psi.factorial(4).unwrap().to_string(),
        "1+3*q+5*q^2+6*q^3+5*q^4+3*q^5+q^6"
    );
    assert_eq!(psi.binomial(4, 2).unwrap().to_string(), "1+q+2*q^2+q^3+q^4");
    assert_eq!(psi.value(2).unwrap().to_string(), "(1)/(1+q)");
}

#[test]
fn fibonacci_numbers() {
    let psi = PsiSequence::fibonacci(10);
    let got: Vec<String> = (1..=8)
        .map(|n| psi.number(n).unwrap().to_string())
        .collect();
    assert_eq!(got, ["1", "1", "2", "3", "5", "8", "13", "21"]);
    assert_eq!(psi.binomial(5, 2).unwrap(), RatFun::from_i64(15));
}

#[test]
fn square_numbers() {
    let psi = PsiSequence::square(6);
    assert_eq!(*psi.number(4).unwrap(), RatFun::from_i64(16));
    assert_eq!(psi.binomial(4, 2).unwrap(), RatFun::from_i64(36));
}

#[test]
fn abel_polynomials() {
    // x (x - 3)^2
    let psi = Arc::new(PsiSequence::classic(10));
    let d = DeltaOperator::shifted_partial(psi, &RatFun::one(), 4).unwrap();
    let b = basic_sequence(&d, 3, Method::Lagrange2).unwrap();
    assert_eq!(strings(b.get(3)), ["0", "9", "-6", "1"]);
}

#[test]
fn q_laguerre_three() {
    let psi = PsiSequence::qgauss(8);
    let l3 = laguerre::q_laguerre_closed(&psi, 3).unwrap();
    assert_eq!(strings(&l3), ["0", "-1-2*q-2*q^2-q^3", "2+2*q+2*q^2", "-1"]);
    // classical Laguerre basic polynomial at q = 1
    let one = num_rational::BigRational::from_integer(1.into());
    assert_eq!(
        strings(&l3.specialize_q(&one).unwrap()),
        ["0", "-6", "6", "-1"]
    );
}

#[test]
fn fibonacci_partial_one_plus() {
    let psi = Arc::new(PsiSequence::fibonacci(10));
    let d = DeltaOperator::partial_one_plus(psi, 4);
    let b = basic_sequence(&d, 3, Method::Rodrigues4).unwrap();
    assert_eq!(strings(b.get(2)), ["0", "-1", "1"]);
    assert_eq!(strings(b.get(3)), ["0", "4", "-4", "1"]);
}

#[test]
fn q_hermite() {
    let psi = Arc::new(PsiSequence::qgauss(10));
    let d = DeltaOperator::partial(psi.clone(), 4);
    let s = OperatorSeries::exp_psi_square(psi, 4).unwrap();
    let seq = sheffer_sequence(&d, &s, 4).unwrap();
    assert_eq!(strings(seq.get(2)), ["-1-q", "0", "1"]);
    assert_eq!(strings(seq.get(3)), ["0", "-1-2*q-2*q^2-q^3", "0", "1"]);
}

#[test]
fn q_scaling_expansion() {
    // q^{deg} = 1 + (q - 1) x̂ ∂q
    let psi = Arc::new(PsiSequence::qgauss(10));
    let d = DeltaOperator::partial(psi, 5);
    let c = expand_operator(&q_scaling_matrix(5), &d, 5).unwrap();
    assert_eq!(c[0], XPoly::one());
    assert_eq!(c[1], Poly::monomial(r("q-1"), 1));
    assert!(c[2..].iter().all(Poly::is_zero));
}

#[test]
fn q_translation_of_square() {
    // E^y(∂q) x^2 = x^2 + (1+q) x y + y^2
    let psi = PsiSequence::qgauss(8);
    let t = translation_apply(&psi, &Poly::monomial(RatFun::one(), 2)).unwrap();
    assert_eq!(bipoly_text(&t), "(1)*x^0*y^2 + (1+q)*x^1*y^1 + (1)*x^2*y^0");
}

#[test]
fn plane_witnesses() {
    let fib = binomial_nogo(&PsiSequence::fibonacci(8), 3).unwrap();
    assert_eq!(bipoly_text(&fib.residual), "(-1)*x^1*y^2 + (-1)*x^2*y^1");
    let sq = binomial_nogo(&PsiSequence::square(8), 3).unwrap();
    assert_eq!(bipoly_text(&sq.residual), "(4)*x^1*y^2 + (1)*x^2*y^1");
}

#[test]
fn spin_one_matrices() {
    let rep = su2_build(2, Some(Complex64::new(2.0, 0.0))).unwrap();
    // √([1][2]) with [2]_2 = 2 + 1/2
    assert!((rep.jplus()[(0, 1)].re - 2.5f64.sqrt()).abs() < 1e-14);
    assert!((rep.jminus()[(2, 1)].re - 2.5f64.sqrt()).abs() < 1e-14);
}

#[test]
fn symmetric_bracket_values() {
    let b = q_bracket(3.0, Complex64::new(2.0, 0.0)).unwrap();
    // q^2 + 1 + q^-2
    assert!((b.re - 5.25).abs() < 1e-13);
}

#[test]
fn sylvester_and_p_for_two() {
    let w = weyl_build(2).unwrap();
    let h = 0.5f64.sqrt();
    assert!((w.smat[(1, 1)].re + h).abs() < 1e-15);
    // P = [[1/2, -1/2], [-1/2, 1/2]]
    assert!((w.pmat[(0, 1)].re + 0.5).abs() < 1e-15);
    assert!((w.pmat[(1, 1)].re - 0.5).abs() < 1e-15);
}
