//! Randomized invariants: field axioms, root-counting agreements, calculus
//! round-trips, rescaling exactness, divided-difference symmetry.

use num_traits::{One, Signed, Zero};
use peanoquad::convexity::divided_difference;
use peanoquad::field::FieldElement;
use peanoquad::poly::Polynomial;
use peanoquad::rational::{rat, Rational};
use peanoquad::roots::{budan_fourier_bound, isolate_roots, sturm_root_count};
use peanoquad::rules::builtin_rule;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn field_element() -> impl Strategy<Value = FieldElement> {
    (
        small_rational(),
        small_rational(),
        small_rational(),
        small_rational(),
    )
        .prop_map(|(a, b, c, d)| FieldElement::new(a, b, c, d))
}

fn field_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(field_element(), 1..=max_len).prop_map(Polynomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(x in field_element(), y in field_element(), z in field_element()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
        if !x.is_zero() {
            let inv = x.inverse().unwrap();
            prop_assert_eq!(&x * &inv, FieldElement::one());
        }
    }

    #[test]
    fn field_sign_matches_a_narrow_enclosure(x in field_element()) {
        let s = x.sign();
        if s == 0 {
            prop_assert!(x.is_zero());
            // interval refinement never excludes zero for the zero element
            for bits in [8, 64, 256] {
                prop_assert!(x.to_interval_bits(bits).contains_zero());
            }
        } else {
            let enc = x.to_interval_digits(40);
            let mid = enc.midpoint();
            prop_assert_eq!(s > 0, mid.is_positive());
        }
    }

    #[test]
    fn derivative_then_integral_recovers_up_to_constant(p in field_poly(7)) {
        let back = p.derivative().antiderivative();
        let diff = &p - &back;
        prop_assert!(diff.degree().is_none_or(|d| d == 0));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in field_poly(5),
        q in field_poly(5),
        x in field_element(),
    ) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sturm_isolation_and_budan_agree_on_factor_products(
        roots in proptest::collection::btree_set(-12i64..=12, 1..=4),
        mults in proptest::collection::vec(1u32..=3, 4),
    ) {
        // p = Π (2x - r)^m has roots r/2 with known multiplicities
        let mut p = Polynomial::one();
        let mut with_mult = 0usize;
        let roots: Vec<i64> = roots.into_iter().collect();
        for (i, r) in roots.iter().enumerate() {
            let lin = Polynomial::linear(
                FieldElement::from_rational(rat(-r, 1)),
                FieldElement::from_int(2),
            );
            for _ in 0..mults[i] {
                p = &p * &lin;
            }
            with_mult += mults[i] as usize;
        }
        let a = FieldElement::from_rational(rat(-51, 4));
        let b = FieldElement::from_rational(rat(51, 4));
        // distinct-root count
        let count = sturm_root_count(&p, &a, &b);
        prop_assert_eq!(count, roots.len());
        // isolation intervals: one per distinct root, ordered and disjoint
        let isos = isolate_roots(&p, &a, &b);
        prop_assert_eq!(isos.len(), roots.len());
        let mut sorted_roots: Vec<Rational> = roots.iter().map(|r| rat(*r, 2)).collect();
        sorted_roots.sort();
        for (iso, root) in isos.iter().zip(&sorted_roots) {
            prop_assert!(&iso.0 < root && root <= &iso.1);
        }
        for w in isos.windows(2) {
            prop_assert!(w[0].1 <= w[1].0);
        }
        // Budan-Fourier dominates the multiplicity count with even defect
        let bound = budan_fourier_bound(&p, &a, &b).unwrap();
        prop_assert!(bound >= with_mult);
        prop_assert_eq!((bound - with_mult) % 2, 0);
    }

    #[test]
    fn rescaling_preserves_low_degree_exactness(
        name in proptest::sample::select(vec!["midpoint", "trapezoid", "rad2l", "g2", "lob3"]),
        xn in -16i64..=14,
        span in 1i64..=16,
    ) {
        let x = rat(xn, 8);
        let y = rat(xn + span, 8);
        let rule = builtin_rule(name).unwrap();
        let d = rule.exactness_degree().unwrap();
        let scaled = rule.rescale(&x, &y).unwrap();
        let fx = FieldElement::from_rational(x);
        let fy = FieldElement::from_rational(y);
        for k in 0..=d as usize {
            let p = Polynomial::monomial(k);
            prop_assert_eq!(scaled.apply_poly(&p).unwrap(), p.integrate(&fx, &fy));
        }
        let beyond = Polynomial::monomial(d as usize + 1);
        prop_assert_ne!(scaled.apply_poly(&beyond).unwrap(), beyond.integrate(&fx, &fy));
    }

    #[test]
    fn divided_differences_survive_permutation(
        ticks in proptest::collection::btree_set(-40i64..=40, 3..=6),
        swaps in proptest::collection::vec((0usize..6, 0usize..6), 0..8),
        coeffs in proptest::collection::vec(-9i64..=9, 4),
    ) {
        let points: Vec<Rational> = ticks.iter().map(|t| rat(*t, 8)).collect();
        let f = |x: &Rational| {
            let mut acc = Rational::zero();
            for c in coeffs.iter().rev() {
                acc = acc * x + rat(*c, 1);
            }
            acc
        };
        let values: Vec<Rational> = points.iter().map(f).collect();
        let base = divided_difference(&points, &values).unwrap();
        let mut p = points.clone();
        let mut v = values.clone();
        for (i, j) in swaps {
            let (i, j) = (i % p.len(), j % p.len());
            p.swap(i, j);
            v.swap(i, j);
        }
        prop_assert_eq!(divided_difference(&p, &v).unwrap(), base);
    }

    #[test]
    fn leading_divided_difference_of_a_monomial_is_one(
        ticks in proptest::collection::btree_set(-40i64..=40, 2..=8),
    ) {
        // over k+1 distinct points, the order-k divided difference of x^k is 1
        let points: Vec<Rational> = ticks.iter().map(|t| rat(*t, 4)).collect();
        let k = points.len() - 1;
        let values: Vec<Rational> = points
            .iter()
            .map(|x| {
                let mut acc = Rational::one();
                for _ in 0..k {
                    acc *= x;
                }
                acc
            })
            .collect();
        prop_assert_eq!(divided_difference(&points, &values).unwrap(), Rational::one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn peano_identity_on_random_polynomials(coeffs in proptest::collection::vec(
        (small_rational(), small_rational()), 1..=8
    )) {
        // E[p] = ∫ p^{(r)} K exactly, for E = ½G₂ + ½Lob₃ − ∫ (r = 4)
        let rule = peanoquad::rules::combine(&[
            (rat(1, 2), &builtin_rule("g2").unwrap()),
            (rat(1, 2), &builtin_rule("lob3").unwrap()),
        ])
        .unwrap();
        let e = peanoquad::RemainderFunctional::rule_minus_integral(rule, 4).unwrap();
        let k = e.build_kernel().unwrap();
        let p = Polynomial::new(
            coeffs
                .into_iter()
                .map(|(a, b)| FieldElement::new(a, b, Rational::zero(), Rational::zero()))
                .collect(),
        );
        let mut dr = p.clone();
        for _ in 0..e.order() {
            dr = dr.derivative();
        }
        prop_assert_eq!(e.apply_poly(&p).unwrap(), k.integrate_against(&dr));
    }
}
