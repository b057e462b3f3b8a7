use std::sync::Arc;

use num_complex::Complex64;
use proptest::prelude::*;
use umbral::gca::{q_bracket, su2_build, su2_commutator_check, weyl_build, weyl_check};
use umbral::kernel::{ComplexMatrix, Poly, QPoly, RatFun, XPoly};
use umbral::ops::{
    expand_operator, pincherle_commutator, pincherle_series_matrix, reconstruct, OperatorMatrix,
    OperatorSeries,
};
use umbral::psi::PsiSequence;
use umbral::verify::GridDelta;

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 1..4).prop_map(|c| QPoly::from_int_coeffs(&c))
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (qpoly(), qpoly()).prop_filter_map("zero denominator", |(n, d)| RatFun::new(n, d).ok())
}

fn small_ratfun() -> impl Strategy<Value = RatFun> {
    (-4i64..=4, 1i64..=3, -2i64..=2, 0usize..=2)
        .prop_map(|(a, d, b, k)| &RatFun::from_ratio(a, d) + &RatFun::q_pow(k).scale_int(b))
}

fn xpoly(max_len: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(small_ratfun(), 0..=max_len).prop_map(Poly::from_coeffs)
}

fn grid_psi() -> impl Strategy<Value = Arc<PsiSequence>> {
    prop::sample::select(vec!["classic", "qgauss", "fibonacci", "square"])
        .prop_map(|n| Arc::new(PsiSequence::by_name(n, 14).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_roundtrips(a in ratfun()) {
        let back: RatFun = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert!(a.denom().leading().is_some_and(|l| *l == num_rational::BigRational::from_integer(1.into())));
    }

    #[test]
    fn gcd_divides(a in qpoly(), b in qpoly(), c in qpoly()) {
        let x = a.mul(&c);
        let y = b.mul(&c);
        let g = x.gcd(&y);
        if !g.is_zero() {
            prop_assert!(x.div_rem(&g).1.is_zero());
            prop_assert!(y.div_rem(&g).1.is_zero());
            if !c.is_zero() {
                prop_assert!(g.div_rem(&c.monic()).1.is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn poly_ring_laws(a in xpoly(17), b in xpoly(17), c in xpoly(6)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn pincherle_is_formal_derivative(
        psi in grid_psi(),
        coeffs in prop::collection::vec(small_ratfun(), 9),
    ) {
        let f = OperatorSeries::new(psi, coeffs);
        prop_assert_eq!(pincherle_commutator(&f, 10).unwrap(), pincherle_series_matrix(&f, 10).unwrap());
    }

    #[test]
    fn psi_binomial_symmetry(psi in grid_psi(), n in 0usize..12, k in 0usize..12) {
        prop_assume!(k <= n);
        prop_assert_eq!(psi.binomial(n, k).unwrap(), psi.binomial(n, n - k).unwrap());
    }

    #[test]
    fn series_inverse(psi in grid_psi(), head in small_ratfun(), tail in prop::collection::vec(small_ratfun(), 6)) {
        prop_assume!(!head.is_zero());
        let mut coeffs = vec![head];
        coeffs.extend(tail);
        let s = OperatorSeries::new(psi.clone(), coeffs);
        let prod = s.mul(&s.invert().unwrap()).unwrap();
        prop_assert_eq!(prod, OperatorSeries::identity(psi, 6));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn expansion_roundtrip(
        psi in grid_psi(),
        d in prop::sample::select(GridDelta::ALL.to_vec()),
        entries in prop::collection::vec(prop::option::weighted(0.6, small_ratfun()), 28),
    ) {
        // upper-triangular 7x7 from 28 slots
        let n = 6;
        let mut t = OperatorMatrix::zeros(n + 1, n + 1);
        let mut it = entries.into_iter();
        for j in 0..=n {
            for i in 0..=j {
                if let Some(Some(v)) = it.next() {
                    t.set(i, j, v);
                }
            }
        }
        let delta = d.build(psi, n).unwrap();
        let c = expand_operator(&t, &delta, n).unwrap();
        prop_assert_eq!(reconstruct(&c, &delta, n).unwrap(), t);
    }
}

proptest! {
    #[test]
    fn diag_sqrt_squares_back(entries in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..8)) {
        let d: Vec<Complex64> = entries.iter().map(|&(a, b)| Complex64::new(a, b)).collect();
        let m = ComplexMatrix::diag(&d);
        let s = m.diag_sqrt().unwrap();
        prop_assert!(s.mul(&s).unwrap().sub(&m).unwrap().inf_norm() < 1e-12);
    }

    #[test]
    fn bracket_inversion_symmetry(x in -6.0f64..6.0, q in 0.2f64..3.0) {
        prop_assume!((q - 1.0).abs() > 1e-3);
        let a = q_bracket(x, Complex64::new(q, 0.0)).unwrap();
        let b = q_bracket(x, Complex64::new(1.0 / q, 0.0)).unwrap();
        prop_assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0));
    }

    #[test]
    fn deformed_commutators(two_j in 1u32..=10, q in 0.3f64..2.5) {
        prop_assume!((q - 1.0).abs() > 1e-3);
        let rep = su2_build(two_j, Some(Complex64::new(q, 0.0))).unwrap();
        let r = su2_commutator_check(&rep, 1e-10).unwrap();
        prop_assert!(r.pass, "{:?}", r.residuals);
    }

    #[test]
    fn weyl_relations(n in 2usize..=30) {
        let r = weyl_check(&weyl_build(n).unwrap(), 1e-10).unwrap();
        prop_assert!(r.pass, "{:?}", r.residuals);
    }
}
