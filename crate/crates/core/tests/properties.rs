//! Randomized invariants of the ring, shapes and Schur constructions.

use proptest::prelude::*;

use vertex_spectra::polyring::json::{polynomial_from_value, polynomial_value, series_from_value, series_value};
use vertex_spectra::polyring::{determinant, ExponentVector, LaurentPolynomial, QPoly, QSeries, RingContext};
use vertex_spectra::schur::{
    factorization_points, schur_border_strip, schur_enumerative, schur_jacobi_trudi, split_product,
};
use vertex_spectra::shapes::{BorderStrip, Partition, SkewDiagram};
use vertex_spectra::spectra::SpinConfiguration;

fn poly(n: usize, relation: bool) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::collection::vec(-4i32..=4, n), 0i32..4, -3i64..=3), 0..6).prop_map(
        move |terms| {
            LaurentPolynomial::from_terms(
                RingContext::new(n, relation),
                terms
                    .into_iter()
                    .map(|(v, e, c)| (ExponentVector::from_doubled(v), QPoly::monomial(e, num_bigint::BigInt::from(c)))),
            )
        },
    )
}

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn skew(max_len: usize, max_part: usize) -> impl Strategy<Value = SkewDiagram> {
    (partition(max_len, max_part), prop::collection::vec(0..=max_part, max_len)).prop_map(|(outer, cut)| {
        let mut inner: Vec<usize> = (0..outer.len()).map(|i| cut[i].min(outer.get(i))).collect();
        inner.sort_unstable_by(|a, b| b.cmp(a));
        let inner: Vec<usize> = inner.iter().enumerate().map(|(i, &m)| m.min(outer.get(i))).collect();
        SkewDiagram::new(outer, Partition::new(inner).unwrap()).unwrap()
    })
}

fn strip(n: usize, max_r: usize) -> impl Strategy<Value = BorderStrip> {
    prop::collection::vec(1..=n, 0..=max_r).prop_map(|c| BorderStrip::new(c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(2, false), b in poly(2, false), c in poly(2, false)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn relation_is_a_homomorphism(a in poly(3, false), b in poly(3, false)) {
        let f = |p: &LaurentPolynomial| p.with_relation(true);
        prop_assert_eq!(f(&(&a * &b)), &f(&a) * &f(&b));
        prop_assert_eq!(f(&(&a + &b)), &f(&a) + &f(&b));
    }

    #[test]
    fn inversions_are_involutions(a in poly(3, false)) {
        prop_assert_eq!(a.invert_x().invert_x(), a.clone());
        prop_assert_eq!(a.invert_q().invert_q(), a.clone());
        prop_assert_eq!(a.swap_vars(0, 2).swap_vars(0, 2), a);
    }

    #[test]
    fn polynomial_json_round_trip(a in poly(2, true)) {
        prop_assert_eq!(polynomial_from_value(&polynomial_value(&a)).unwrap(), a);
    }

    #[test]
    fn series_json_round_trip(a in poly(2, false)) {
        let s = QSeries::from_polynomial(&a, num_rational::Rational64::new(1, 4), 4).unwrap();
        prop_assert_eq!(series_from_value(&series_value(&s)).unwrap(), s);
    }

    #[test]
    fn exact_division_undoes_multiplication(a in prop::collection::vec(-3i64..=3, 1..5), k in 0usize..5) {
        let p = QPoly::from_coeffs(&a);
        let d = vertex_spectra::polyring::q_pochhammer(k);
        prop_assert_eq!((&p * &d).div_exact(&d).unwrap(), p);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition(6, 6)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn strips_realize_and_read_back(bs in strip(4, 5)) {
        let shape = bs.realize();
        prop_assert_eq!(shape.size(), bs.size());
        prop_assert!(shape.is_border_strip() || bs.columns().is_empty());
        prop_assert_eq!(shape.as_border_strip(), Some(bs));
    }

    #[test]
    fn skew_schur_is_symmetric(shape in skew(4, 4), n in 2usize..4) {
        let s = schur_enumerative(&shape, n, false);
        prop_assert_eq!(s.swap_vars(0, 1), s.clone());
        prop_assert_eq!(s.swap_vars(0, n - 1), s.clone());
        prop_assert_eq!(schur_jacobi_trudi(&shape, n, false), s);
    }

    #[test]
    fn row_swap_negates_determinant(rows in prop::collection::vec(prop::collection::vec(poly(2, false), 3), 3)) {
        let ctx = RingContext::new(2, false);
        let d = determinant(ctx, &rows).unwrap();
        let mut swapped = rows.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(determinant(ctx, &swapped).unwrap(), &LaurentPolynomial::zero(ctx) - &d);
    }

    #[test]
    fn strips_factor_at_long_pairs(bs in strip(4, 5), n in 2usize..5) {
        let bs = BorderStrip::new(bs.columns().iter().map(|&m| m.min(n)).collect()).unwrap();
        let whole = schur_border_strip(&bs, n, false);
        for i in factorization_points(&bs, n) {
            prop_assert_eq!(split_product(&bs, i, n, false).unwrap(), whole.clone());
        }
    }

    #[test]
    fn canonical_spins_are_idempotent(prefix in prop::collection::vec(1usize..=3, 0..8)) {
        let s = SpinConfiguration::new(3, prefix).unwrap();
        let again = SpinConfiguration::new(3, s.prefix().to_vec()).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(again.energy(), s.energy());
    }
}
