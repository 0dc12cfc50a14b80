use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zetalab::exact::Rational;
use zetalab::identities::{
    entry21_series, evaluate_side, lambda, pfd_partial_sum, transformed_characteristics, verify, verify_thm_h,
    EisensteinParams, IdentityId, Matrix2, Side,
};
use zetalab::modular::HPoint;
use zetalab::numerics::{const_pi, BigComplex, BigReal, PrecisionContext};

fn ctx() -> PrecisionContext {
    PrecisionContext::digits(40).unwrap()
}

/// `Σ m^power / (e^{2am} - 1)` until the terms drop below `10^-(digits+10)`.
fn direct_sum(a: &BigReal, power: i64, ctx: &PrecisionContext) -> BigReal {
    let stop = -(ctx.working_digits() as f64);
    let mut acc = BigReal::zero(ctx);
    for m in 1.. {
        let t = BigReal::from_i64(m, ctx).powi(power) / ((a * (2 * m)).exp() - 1);
        if t.log10_abs() < stop && m > 5 {
            break;
        }
        acc += t;
    }
    acc
}

fn agree(a: &BigReal, b: &BigReal, digits: u32) -> bool {
    (a - b).log10_abs() - b.log10_abs().max(0.0) < -f64::from(digits)
}

#[test]
fn glaisher_and_schlomilch_closed_forms() {
    let ctx = ctx();
    let pi = const_pi(&ctx);
    for (n, denom) in [(1i64, 504i64), (2, 264), (3, 24)] {
        let want = BigReal::one(&ctx) / denom;
        assert!(agree(&direct_sum(&pi, 4 * n + 1, &ctx), &want, 40));
        let got = evaluate_side(IdentityId::Glaisher, Side::Right, &EisensteinParams::new().n(n), &ctx)
            .unwrap()
            .re;
        assert!(agree(&got, &want, 40), "n = {n}");
    }
    let want = BigReal::one(&ctx) / 24 - (&pi * 8).recip();
    assert!(agree(&direct_sum(&pi, 1, &ctx), &want, 40));
    let got = evaluate_side(IdentityId::Schlomilch221, Side::Left, &EisensteinParams::new(), &ctx)
        .unwrap()
        .re;
    assert!(agree(&got, &want, 40));
}

#[test]
fn exact_rhs_identities_over_grid() {
    let ctx = ctx();
    let pi = const_pi(&ctx);
    let alphas = [
        &pi / 4,
        &pi / 2,
        BigReal::one(&ctx),
        BigReal::from_i64(2, &ctx),
        pi.clone(),
        BigReal::from_i64(5, &ctx),
    ];
    for a in &alphas {
        for id in [IdentityId::Entry23I312, IdentityId::Schlomilch220] {
            let r = verify(id, &EisensteinParams::new().alpha(a.clone()), &ctx).unwrap();
            assert!(r.passed, "{} at alpha {}", id.as_str(), a);
        }
        for n in 2..=5 {
            let r = verify(
                IdentityId::CorM216,
                &EisensteinParams::new().alpha(a.clone()).n(n),
                &ctx,
            )
            .unwrap();
            assert!(r.passed, "cor_m_216 n = {n} alpha {a}");
        }
    }
    for n in 1..=4 {
        assert!(
            verify(IdentityId::Glaisher, &EisensteinParams::new().n(n), &ctx)
                .unwrap()
                .passed
        );
    }
    for n in 0..=3 {
        for id in [IdentityId::CotSum4n3, IdentityId::LerchI321star] {
            assert!(
                verify(id, &EisensteinParams::new().n(n), &ctx).unwrap().passed,
                "{} n = {n}",
                id.as_str()
            );
        }
    }
    assert!(
        verify(IdentityId::Schlomilch221, &EisensteinParams::new(), &ctx)
            .unwrap()
            .passed
    );
}

#[test]
fn pfd_partial_sums_converge_quadratically() {
    let ctx = ctx();
    for (x, y) in [("0.3", "0.7"), ("0.5", "1.5"), ("0.9", "0.2"), ("0.6", "0.6")] {
        let x = BigReal::parse(x, &ctx).unwrap();
        let y = BigReal::parse(y, &ctx).unwrap();
        let p = |n: usize| pfd_partial_sum(&x, &y, n, &ctx).unwrap();
        // constant fitted on the first window, with slack
        let c = (p(50) - p(25)).abs() * (25 * 25) * 2;
        let mut prev = p(50);
        for n in [50usize, 100, 200, 400] {
            let next = p(2 * n);
            let step = (&next - &prev).abs() * (n * n) as i64;
            assert!(step < c, "N = {n}: {step} vs {c}");
            prev = next;
        }
        let limit = evaluate_side(
            IdentityId::Pfd,
            Side::Right,
            &EisensteinParams::new().x(x.clone()).y(y.clone()),
            &ctx,
        )
        .unwrap()
        .re;
        assert!(
            (&prev - &limit).abs() * (800 * 800) < c,
            "partial sums miss the summed value"
        );
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Random `V` with `c > 0`: pick coprime `(c, d)` and solve `ad - bc = 1`.
fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix2 {
    loop {
        let c = rng.gen_range(1..=3);
        let d = rng.gen_range(-3..=3);
        let (g, x, y) = ext_gcd(d, c);
        if g.abs() != 1 {
            continue;
        }
        // x d + y c = g, so a = x g, b = -y g gives ad - bc = 1
        return Matrix2::new(x * g, -y * g, c, d).unwrap();
    }
}

#[test]
fn thm_h_randomized_vanishing_lambda() {
    let ctx = PrecisionContext::digits(30).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let mut done = 0;
    while done < 25 {
        let v = random_matrix(&mut rng);
        let r1 = Rational::from((rng.gen_range(-7..=7), rng.gen_range(2..=7)));
        let r2 = Rational::from((rng.gen_range(-7..=7), rng.gen_range(1..=7)));
        let (big_r1, _) = transformed_characteristics(&v, &r1, &r2);
        if lambda(&r1) || lambda(&big_r1) {
            continue;
        }
        let m = rng.gen_range(-3..=5);
        let z = HPoint::from_f64(rng.gen_range(-0.5..0.5), rng.gen_range(0.6..1.5), &ctx).unwrap();
        let rep = verify_thm_h(&z, m, &r1, &r2, &v, &ctx).unwrap();
        assert!(
            rep.passed,
            "V = {v}, m = {m}, r1 = {r1}, r2 = {r2}: residual {}",
            rep.abs_residual
        );
        done += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn ramanujan_for_random_alpha(alpha in 0.3f64..10.0, n in 1i64..7) {
        let ctx = ctx();
        let p = EisensteinParams::new().alpha(BigReal::from_f64(alpha, &ctx)).n(n);
        let r = verify(IdentityId::RamanujanI321, &p, &ctx).unwrap();
        prop_assert!(r.passed, "residual {}", r.abs_residual);
        let r = verify(IdentityId::CothSum, &p, &ctx).unwrap();
        prop_assert!(r.passed, "coth_sum residual {}", r.abs_residual);
    }

    #[test]
    fn lambert_pairs_for_random_alpha(alpha in 0.3f64..10.0) {
        let ctx = ctx();
        let p = EisensteinParams::new().alpha(BigReal::from_f64(alpha, &ctx));
        for id in [IdentityId::Entry23I312, IdentityId::EtaI318] {
            prop_assert!(verify(id, &p, &ctx).unwrap().passed, "{}", id.as_str());
        }
    }

    #[test]
    fn corrected_entry_for_random_w(alpha in 0.5f64..5.0, w in 0.05f64..3.0) {
        let ctx = ctx();
        let p = EisensteinParams::new().alpha(BigReal::from_f64(alpha, &ctx)).w(BigReal::from_f64(w, &ctx));
        match verify(IdentityId::CorrectedI310, &p, &ctx) {
            Ok(r) => prop_assert!(r.passed, "residual {}", r.abs_residual),
            Err(zetalab::Error::Pole(_)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn cot_coth_sums_for_random_xy(x in 0.05f64..0.95, y in 0.1f64..2.0) {
        let ctx = ctx();
        let p = EisensteinParams::new().x(BigReal::from_f64(x, &ctx)).y(BigReal::from_f64(y, &ctx));
        for id in [IdentityId::SitaI38, IdentityId::SitaI39] {
            prop_assert!(verify(id, &p, &ctx).unwrap().passed, "{}", id.as_str());
        }
        let pfd = verify(IdentityId::Pfd, &p, &ctx).unwrap();
        let miss = (&pfd.signed_residual() - pfd.expected_discrepancy.as_ref().unwrap()).abs();
        prop_assert!(miss.log10_abs() < -35.0);
    }

    /// The `w`-derivative at 0 of the corrected entry's series side gives the
    /// `n = 1` case of Ramanujan's formula.
    #[test]
    fn w_coefficient_matches_ramanujan(alpha in 0.5f64..5.0) {
        let ctx = PrecisionContext::digits(50).unwrap();
        let a = BigReal::from_f64(alpha, &ctx);
        let b = const_pi(&ctx).square() / &a;
        let h = BigReal::pow10(-15, &ctx);
        let up = entry21_series(&a, &b, &h, &ctx).unwrap();
        let down = entry21_series(&a, &b, &(-&h), &ctx).unwrap();
        let slope = (up - down) / (h * 2);
        let p = EisensteinParams::new().alpha(a).n(1);
        let lhs = evaluate_side(IdentityId::RamanujanI321, Side::Left, &p, &ctx).unwrap().re;
        prop_assert!(agree(&(-slope / 2), &lhs, 10));
    }

    #[test]
    fn thm_hh_at_random_points(m in -3i64..6, re in -0.5f64..0.5, im in 0.5f64..2.0) {
        let ctx = ctx();
        let z = BigComplex::from_f64(re, im, &ctx);
        let p = EisensteinParams::new().z(z).m(m);
        prop_assert!(verify(IdentityId::ThmHh210, &p, &ctx).unwrap().passed);
    }
}
