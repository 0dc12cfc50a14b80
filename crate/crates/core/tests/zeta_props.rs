use proptest::prelude::*;
use zetalab::exact::{bernoulli, Rational};
use zetalab::numerics::{BigReal, PrecisionContext};
use zetalab::zeta::{zeta_at_integer, zeta_even, zeta_nonpositive, zeta_odd_fast, zeta_odd_oracle};

const ZETA_ODD: [(u32, &str); 5] = [
    (3, "1.2020569031595942853997381615114499907649862923404988817922715553"),
    (5, "1.0369277551433699263313654864570341680570809195019128119741926779"),
    (7, "1.0083492773819228268397975498497967595998635605652387064172831366"),
    (9, "1.0020083928260822144178527692324120604856058513948887565485966159"),
    (11, "1.0004941886041194645587022825264699364686064357582086171191414361"),
];

/// Euler–Maclaurin with `N = 60` and 20 correction terms.
fn zeta_by_summation(s: i64, ctx: &PrecisionContext) -> BigReal {
    let n = 60i64;
    let nn = BigReal::from_i64(n, ctx);
    let mut acc = BigReal::zero(ctx);
    for k in 1..n {
        acc += BigReal::from_i64(k, ctx).powi(-s);
    }
    acc += nn.powi(1 - s) / (s - 1);
    acc += nn.powi(-s) / 2;
    let mut rising = BigReal::from_i64(s, ctx);
    let mut fact = BigReal::from_i64(2, ctx);
    for j in 1..=20i64 {
        let b = BigReal::from_rational(&bernoulli(2 * j as usize).unwrap(), ctx);
        acc += b * &rising / &fact * nn.powi(-s - 2 * j + 1);
        rising = rising * (s + 2 * j - 1) * (s + 2 * j);
        fact = fact * (2 * j + 1) * (2 * j + 2);
    }
    acc
}

fn digits_agree(a: &BigReal, b: &BigReal) -> f64 {
    -((a - b).log10_abs() - b.log10_abs())
}

#[test]
fn fast_and_oracle_match_reference_values() {
    let ctx = PrecisionContext::digits(60).unwrap();
    for (s, want) in ZETA_ODD {
        let w = BigReal::parse(want, &ctx).unwrap();
        let fast = zeta_odd_fast(s, &ctx).unwrap().value;
        let oracle = zeta_odd_oracle(s, &ctx).unwrap().value;
        assert!(digits_agree(&fast, &w) > 60.0, "fast ζ({s})");
        assert!(digits_agree(&oracle, &w) > 60.0, "oracle ζ({s})");
    }
}

#[test]
fn odd_values_match_direct_summation() {
    let ctx = PrecisionContext::digits(50).unwrap();
    for s in [3u32, 5, 7, 9, 11, 13] {
        let fast = zeta_odd_fast(s, &ctx).unwrap().value;
        assert!(
            digits_agree(&fast, &zeta_by_summation(i64::from(s), &ctx)) > 50.0,
            "ζ({s})"
        );
    }
}

#[test]
fn even_values_match_direct_summation() {
    let ctx = PrecisionContext::digits(50).unwrap();
    for n in 1..=8u32 {
        let v = zeta_even(n).unwrap().value(&ctx);
        assert!(
            digits_agree(&v, &zeta_by_summation(2 * i64::from(n), &ctx)) > 50.0,
            "ζ({})",
            2 * n
        );
    }
}

#[test]
fn nonpositive_values_follow_bernoulli() {
    assert_eq!(zeta_nonpositive(0).unwrap(), Rational::from((-1, 2)));
    assert_eq!(zeta_nonpositive(-1).unwrap(), Rational::from((-1, 12)));
    assert_eq!(zeta_nonpositive(-3).unwrap(), Rational::from((1, 120)));
    for k in 1..20i64 {
        assert_eq!(zeta_nonpositive(-2 * k).unwrap(), Rational::from(0));
    }
    assert!(zeta_at_integer(1, &PrecisionContext::digits(20).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn fast_agrees_with_oracle(k in 1u32..12, digits in 20u32..80) {
        let ctx = PrecisionContext::digits(digits).unwrap();
        let s = 2 * k + 1;
        let a = zeta_odd_fast(s, &ctx).unwrap();
        let b = zeta_odd_oracle(s, &ctx).unwrap();
        prop_assert!(digits_agree(&a.value, &b.value) > f64::from(digits));
        prop_assert!(a.achieved_digits >= digits);
    }

    #[test]
    fn zeta_decreases_towards_one(k in 1u32..30) {
        let ctx = PrecisionContext::digits(30).unwrap();
        let a = zeta_at_integer(i64::from(k) + 1, &ctx).unwrap();
        let b = zeta_at_integer(i64::from(k) + 2, &ctx).unwrap();
        prop_assert!(a > b && b > 1);
    }
}
