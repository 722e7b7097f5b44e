use proptest::prelude::*;
use rscount_core::ring::{MultiPoly, Rational};
use rscount_core::series::{std_series, PowerSeries, StdSeries};

const CASES: u32 = 1000;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn series(order: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    prop::collection::vec(rational(), order + 1)
        .prop_map(|c| PowerSeries::from_coeffs(c).unwrap())
}

fn unit_series(order: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    (series(order), rational().prop_filter("unit", |c| !c.is_zero())).prop_map(|(s, c0)| {
        let mut coeffs = s.into_coeffs();
        coeffs[0] = c0;
        PowerSeries::from_coeffs(coeffs).unwrap()
    })
}

#[test]
fn hyperbolic_identity_through_order_32() {
    for order in 0..=32 {
        let c = std_series::<Rational>(StdSeries::Cosh, order, &());
        let s = std_series::<Rational>(StdSeries::Sinh, order, &());
        let lhs = c.mul(&c).unwrap().sub(&s.mul(&s).unwrap()).unwrap();
        assert_eq!(lhs, PowerSeries::one(&(), order), "order {order}");
    }
}

#[test]
fn normalized_sinh_matches_shifted_sinh_half() {
    // (h/2) S(h) = sinh(h/2): S_k / 2 = coefficient of h^{k+1} in sinh(h/2)
    let order = 24;
    let s = std_series::<Rational>(StdSeries::SinhHalfNormalized, order, &());
    let sinh_half = std_series::<Rational>(StdSeries::Sinh, order + 1, &())
        .scale_arg(&Rational::new(1, 2).unwrap())
        .unwrap();
    let half = Rational::new(1, 2).unwrap();
    for k in 0..=order {
        assert_eq!(&(s.coefficient(k).unwrap() * &half), sinh_half.coefficient(k + 1).unwrap());
    }
}

#[test]
fn exp_is_cosh_plus_sinh() {
    let order = 20;
    let e = std_series::<Rational>(StdSeries::Exp, order, &());
    let c = std_series::<Rational>(StdSeries::Cosh, order, &());
    let s = std_series::<Rational>(StdSeries::Sinh, order, &());
    assert_eq!(e, c.add(&s).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn series_ring_axioms(f in series(6), g in series(6), h in series(6)) {
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.add(&g).unwrap().sub(&g).unwrap(), f.clone());
    }

    #[test]
    fn inversion_round_trips(f in unit_series(8)) {
        let g = f.invert().unwrap();
        prop_assert_eq!(f.mul(&g).unwrap(), PowerSeries::one(&(), 8));
        prop_assert_eq!(g.invert().unwrap(), f.clone());
    }

    #[test]
    fn negative_powers_invert_positive_powers(f in unit_series(5), e in 0i64..5) {
        let pos = f.pow(e).unwrap();
        let neg = f.pow(-e).unwrap();
        prop_assert_eq!(pos.mul(&neg).unwrap(), PowerSeries::one(&(), 5));
    }

    #[test]
    fn argument_scaling_is_multiplicative(f in series(7), g in series(7), c in rational()) {
        let lhs = f.mul(&g).unwrap().scale_arg(&c).unwrap();
        let rhs = f.scale_arg(&c).unwrap().mul(&g.scale_arg(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialization_commutes_with_scaling(f in series(6), c in rational()) {
        let a = MultiPoly::var(1, 0).unwrap();
        let symbolic = f.lift::<MultiPoly>(&1).scale_arg(&a).unwrap();
        let specialized: Vec<Rational> = symbolic
            .coeffs()
            .iter()
            .map(|p| p.eval(std::slice::from_ref(&c)).unwrap())
            .collect();
        let direct = f.scale_arg(&c).unwrap();
        prop_assert_eq!(specialized.as_slice(), direct.coeffs());
    }
}
