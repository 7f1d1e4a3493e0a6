//! Property tests for the algebraic contracts: field and ring axioms,
//! order/norm laws, derivation laws, encodings, and text round-trips.

use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;

use afwron_core::derivations::{apply_basic, apply_monomial};
use afwron_core::io::{arithfn_from_json, arithfn_to_json};
use afwron_core::series::{from_power_series, to_power_series, PowerSeriesPoly};
use afwron_core::{ArithFn, OrdResult, QArithFn, Rational, Scalar};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn symbol_term_strategy() -> impl Strategy<Value = Scalar> {
    (prop_oneof![Just(2u64), Just(3u64), Just(5u64)], rational_strategy())
        .prop_map(|(p, c)| &Scalar::symbol(p) * &Scalar::from_rational(c))
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => rational_strategy().prop_map(Scalar::from_rational),
        1 => symbol_term_strategy(),
        1 => (symbol_term_strategy(), rational_strategy())
            .prop_map(|(s, c)| &s + &Scalar::from_rational(c)),
    ]
}

fn nonzero_scalar_strategy() -> impl Strategy<Value = Scalar> {
    scalar_strategy().prop_filter("nonzero", |s| !s.is_zero())
}

fn arithfn_strategy(precision: usize) -> impl Strategy<Value = QArithFn> {
    proptest::collection::vec(
        prop_oneof![3 => Just(rat(0, 1)), 2 => rational_strategy()],
        precision,
    )
    .prop_map(ArithFn::from_values)
}

proptest! {
    #[test]
    fn scalar_field_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn scalar_division_inverts(a in scalar_strategy(), b in nonzero_scalar_strategy()) {
        let quotient = a.checked_div(&b).expect("nonzero divisor");
        prop_assert_eq!(&quotient * &b, a);
    }

    #[test]
    fn scalar_text_round_trip(a in scalar_strategy(), b in nonzero_scalar_strategy()) {
        for value in [a.clone(), a.checked_div(&b).expect("nonzero divisor")] {
            let text = value.to_string();
            let back = Scalar::parse(&text).unwrap();
            prop_assert_eq!(&back, &value);
            prop_assert_eq!(back.to_string(), text);
        }
    }

    #[test]
    fn equal_scalars_evaluate_equally(
        x in scalar_strategy(),
        y in scalar_strategy(),
        z in scalar_strategy(),
        seeds in proptest::collection::vec((1i64..=50, 1i64..=50, 1i64..=50), 20),
    ) {
        // Two routes to the same value must agree at every admissible
        // evaluation point.
        let lhs = &(&x + &y) * &z;
        let rhs = &(&x * &z) + &(&y * &z);
        prop_assert_eq!(&lhs, &rhs);
        for (a, b, c) in seeds {
            let assignment: BTreeMap<u64, Rational> =
                [(2, rat(a, 3)), (3, rat(b, 2)), (5, rat(c, 1))].into_iter().collect();
            prop_assert_eq!(
                lhs.eval(&assignment).unwrap(),
                rhs.eval(&assignment).unwrap()
            );
        }
    }

    #[test]
    fn log_is_multiplicative_and_injective(m in 1u64..=120, n in 1u64..=120) {
        let lm = Scalar::log(m).unwrap();
        let ln = Scalar::log(n).unwrap();
        prop_assert_eq!(Scalar::log(m * n).unwrap(), &lm + &ln);
        if m != n {
            prop_assert_ne!(lm, ln);
        }
    }

    #[test]
    fn convolution_ring_axioms(
        f in arithfn_strategy(24),
        g in arithfn_strategy(24),
        h in arithfn_strategy(24),
    ) {
        let e1 = QArithFn::basis(1, 24);
        prop_assert_eq!(f.convolve(&g), g.convolve(&f));
        prop_assert_eq!(f.convolve(&g).convolve(&h), f.convolve(&g.convolve(&h)));
        prop_assert_eq!(
            f.convolve(&g.add(&h)),
            f.convolve(&g).add(&f.convolve(&h))
        );
        prop_assert_eq!(f.convolve(&e1), f);
    }

    #[test]
    fn order_laws(f in arithfn_strategy(24), g in arithfn_strategy(24)) {
        // Ultrametric inequality whenever the sum's order is known.
        if let (Some(nf), Some(ng)) = (f.norm(), g.norm()) {
            if let Some(ns) = f.add(&g).norm() {
                prop_assert!(ns <= nf.clone().max(ng.clone()));
            }
            // Multiplicativity inside the window.
            let (of, og) = (f.ord().known().unwrap(), g.ord().known().unwrap());
            if of * og <= 24 {
                let prod = f.convolve(&g);
                prop_assert_eq!(prod.ord(), OrdResult::Known(of * og));
                prop_assert_eq!(prod.value(of * og), &(f.value(of) * g.value(og)));
            }
        }
    }

    #[test]
    fn truncation_is_a_quotient_map(f in arithfn_strategy(24), g in arithfn_strategy(24)) {
        // Functions agreeing on a window convolve to results agreeing on
        // that window: ring operations are exact on the truncation.
        let fw = f.truncate(12);
        let gw = g.truncate(12);
        prop_assert_eq!(f.convolve(&g).truncate(12), fw.convolve(&gw));
        prop_assert_eq!(f.add(&g).truncate(12), fw.add(&gw));
        for p in [2u64, 3] {
            let whole = apply_basic(p, &f).unwrap().truncate(12 / p as usize);
            let windowed = apply_basic(p, &fw).unwrap();
            prop_assert_eq!(whole, windowed);
        }
    }

    #[test]
    fn inverses_round_trip(f in arithfn_strategy(24)) {
        match f.invert() {
            Ok(inv) => {
                prop_assert!(!f.value(1).is_zero());
                prop_assert_eq!(f.convolve(&inv), QArithFn::basis(1, 24));
            }
            Err(_) => prop_assert!(f.value(1).is_zero()),
        }
    }

    #[test]
    fn basic_derivations_commute_and_compose(f in arithfn_strategy(36)) {
        let d23 = apply_basic(2, &apply_basic(3, &f).unwrap()).unwrap();
        let d32 = apply_basic(3, &apply_basic(2, &f).unwrap()).unwrap();
        prop_assert_eq!(&d23, &d32);
        prop_assert_eq!(&apply_monomial(6, &f).unwrap(), &d23);
    }

    #[test]
    fn basic_derivation_leibniz(f in arithfn_strategy(24), g in arithfn_strategy(24)) {
        for p in [2u64, 3] {
            let df = apply_basic(p, &f).unwrap();
            let dg = apply_basic(p, &g).unwrap();
            let lhs = apply_basic(p, &f.convolve(&g)).unwrap();
            let rhs = f.convolve(&dg).add(&g.convolve(&df));
            prop_assert!(lhs.eq_in_window(&rhs));
        }
    }

    #[test]
    fn smooth_encoding_round_trips(
        terms in proptest::collection::btree_map(
            (0u32..=3, 0u32..=3),
            rational_strategy(),
            1..6,
        )
    ) {
        let ps = PowerSeriesPoly::from_terms(
            2,
            terms.into_iter().map(|((a, b), c)| (vec![a, b], c)),
        )
        .unwrap();
        // 2^3 * 3^3 = 216: a window large enough to keep every monomial.
        let f: QArithFn = from_power_series(&ps, 216);
        prop_assert_eq!(to_power_series(&f, 2).unwrap(), ps);
    }

    #[test]
    fn json_round_trip_preserves_values(values in proptest::collection::vec(scalar_strategy(), 1..12)) {
        let f = ArithFn::<Scalar>::from_values(values);
        let json = arithfn_to_json(&f);
        let text = serde_json::to_string(&json).unwrap();
        let parsed = serde_json::from_str(&text).unwrap();
        let back = arithfn_from_json(&parsed, "f").unwrap();
        prop_assert_eq!(back, f);
    }
}
