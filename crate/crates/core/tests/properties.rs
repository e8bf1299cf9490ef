use proptest::prelude::*;

use finsum::exact::{
    padic_valuation, powi, series_compose, series_exp, series_log_one_plus, LaurentSeries,
    PadicValuation, Polynomial, Rational, RationalFunction, Scalar,
};
use finsum::genfun::series_g;
use finsum::identities::{catalog, run_identity, SweepConfig};
use finsum::special::{
    alt_harmonic, bernoulli_high, leibnitz, stirling1, LeibnitzMethod, StirlingMethod,
};
use finsum::volkenborn::{volkenborn_partial_sum, volkenborn_partial_sum_blocked, Integrand};
use finsum::ynum::{y_algorithm1, y_direct, y_recurrence_sequence};
use finsum::zeta::multi_hurwitz_neg;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(a, b)| Rational::new(a, b))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

/// λ away from the poles 0 and 1.
fn lambda() -> impl Strategy<Value = Rational> {
    rational().prop_filter("pole", |q| *q != 0 && *q != 1)
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|c| Polynomial::from_ints(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(4), nonzero_poly(4)).prop_map(|(a, b)| RationalFunction::new(a, b))
}

fn series(t: i64) -> impl Strategy<Value = LaurentSeries<Rational>> {
    prop::collection::vec(rational(), 1..=(t as usize + 1))
        .prop_map(move |c| LaurentSeries::new(0, c, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_laws(a in poly(8), b in poly(8), c in poly(8)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn ratfun_cancels_common_factor(a in poly(8), b in nonzero_poly(8), c in nonzero_poly(8)) {
        let lhs = RationalFunction::new(&a * &c, &b * &c);
        prop_assert_eq!(lhs, RationalFunction::new(a, b));
    }

    #[test]
    fn ratfun_product_rule(f in ratfun(), g in ratfun()) {
        let lhs = (f.clone() * g.clone()).derivative();
        let rhs = f.derivative() * g.clone() + f * g.derivative();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_mul_is_convolution(a in series(32), b in series(32)) {
        let p = &a * &b;
        for k in 0..=32i64 {
            let want: Rational = (0..=k)
                .map(|i| a.coeff(i).unwrap() * b.coeff(k - i).unwrap())
                .sum();
            prop_assert_eq!(p.coeff(k).unwrap(), want);
        }
    }

    #[test]
    fn log_inverts_exp(c in nonzero_rational(), t in 1i64..=16) {
        let u = LaurentSeries::monomial(c.clone(), 1);
        let expm1 = &series_exp(&c, t) - &LaurentSeries::constant(Rational::from(1));
        let log = series_log_one_plus(&LaurentSeries::var(), t).unwrap();
        let back = series_compose(&log, &expm1, t).unwrap();
        for k in 0..=t {
            prop_assert_eq!(back.coeff(k).unwrap(), u.coeff(k).unwrap());
        }
    }

    #[test]
    fn valuation_is_additive(a in nonzero_rational(), b in nonzero_rational(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let va = padic_valuation(&a, p).unwrap();
        let vb = padic_valuation(&b, p).unwrap();
        prop_assert_eq!(padic_valuation(&(&a * &b), p).unwrap(), va + vb);
        prop_assert_eq!(padic_valuation(&Rational::from(0), p).unwrap(), PadicValuation::PlusInfinity);
    }

    #[test]
    fn y_methods_agree(l in lambda(), n in 0usize..=16) {
        let d = y_direct(n, &l).unwrap();
        prop_assert_eq!(&d, &y_algorithm1(n, &l).unwrap());
        prop_assert_eq!(&d, &y_recurrence_sequence(n, &l).unwrap().pop().unwrap());
    }

    #[test]
    fn recurrence_holds(l in lambda(), n in 1usize..=20) {
        let lhs = y_direct(n - 1, &l).unwrap() + (l.clone() - Rational::from(1)) * y_direct(n, &l).unwrap();
        let rhs = Rational::new(finsum::exact::sign(n as i64), n as i64 + 1) / l.pow(n as i64 + 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn genfun_definition(l in lambda(), t in 0i64..=20) {
        let g = series_g(&l, t).unwrap();
        for n in 0..=t {
            let want = powi(&(Rational::from(1) - &l), n + 2) * y_direct(n as usize, &l).unwrap();
            prop_assert_eq!(g.coeff(n).unwrap(), want);
        }
    }

    #[test]
    fn symbolic_specializes(l in lambda(), n in 0usize..=8) {
        let sym = y_direct(n, &RationalFunction::var()).unwrap();
        prop_assert_eq!(sym.eval(&l).unwrap(), y_direct(n, &l).unwrap());
    }

    #[test]
    fn stirling1_routes(n in 0usize..=20, k in 0usize..=22) {
        prop_assert_eq!(
            stirling1(n, k, StirlingMethod::Recurrence),
            stirling1(n, k, StirlingMethod::Formula)
        );
    }

    #[test]
    fn leibnitz_routes((m, l) in (0usize..=15).prop_flat_map(|m| (Just(m), 0..=m))) {
        let c = leibnitz(m, l, LeibnitzMethod::Closed).unwrap();
        prop_assert_eq!(&c, &leibnitz(m, l, LeibnitzMethod::Sum).unwrap());
        prop_assert_eq!(&c, &leibnitz(m, l, LeibnitzMethod::Bernstein).unwrap());
    }

    #[test]
    fn alternating_harmonic_step(n in 1usize..=40) {
        prop_assert_eq!(
            alt_harmonic(n - 1) - alt_harmonic(n),
            Rational::new(finsum::exact::sign(n as i64 - 1), n as i64)
        );
    }

    #[test]
    fn hurwitz_interpolation(m in 0usize..=12, x in prop::sample::select(vec![Rational::from(1), Rational::from(2), Rational::new(1, 2)])) {
        let want = -bernoulli_high(1, m + 1).eval(&x) / Rational::from(m + 1);
        prop_assert_eq!(multi_hurwitz_neg(1, m, &x), want);
    }

    #[test]
    fn volkenborn_order_independent(
        integrand in prop::sample::select(vec![Integrand::Power, Integrand::Falling, Integrand::Binom]),
        index in 0usize..=6,
        (p, level) in prop::sample::select(vec![(2u64, 8u32), (3, 6), (5, 4)]),
    ) {
        let a = volkenborn_partial_sum(integrand, index, p, level).unwrap();
        let b = volkenborn_partial_sum_blocked(integrand, index, p, level).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn catalog_runs_are_reproducible(i in 0usize..80, max_n in 1usize..=5) {
        let cat = catalog();
        let id = cat[i % cat.len()].id;
        let config = SweepConfig { max_n: Some(max_n), ..SweepConfig::default() };
        let a = run_identity(id, &config).unwrap();
        let b = run_identity(id, &config).unwrap();
        prop_assert!(a.all_passed(), "{}", id);
        prop_assert_eq!(&a.records, &b.records);
    }
}
