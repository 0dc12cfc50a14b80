//! Acceptance criteria 1 to 11, one PASS/FAIL line each.
//!
//! Lines go straight to stdout so they show up without `--nocapture`.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::ops::Pow;
use zetalab::exact::{real_nonprincipal_characters, DirichletCharacter, LaurentPoly, Rational};
use zetalab::identities::{
    euler_residual, lambda, thm_hh_sides, transformed_characteristics, verify, verify_thm_h, EisensteinParams,
    IdentityId, Matrix2,
};
use zetalab::modular::{
    check_modularity, check_period_relation, check_quasimodular_e2, period_polynomial, razar_weil_polynomial, sigma,
    zeta_from_eichler, zeta_from_eichler_derivative, HPoint,
};
use zetalab::numerics::{const_pi, BigReal, PrecisionContext};
use zetalab::polyroots::{
    conjecture_jobs, family_report, generalized_r, generalized_report, ramanujan_poly, Family, PairOutcome,
};
use zetalab::zeta::{lerch_coefficient, zeta_odd_oracle};
use zetalab::Error;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

fn line(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
    let _ = out.flush();
}

fn ctx50() -> PrecisionContext {
    PrecisionContext::digits(50).unwrap()
}

fn below(x: &BigReal, log10: i64) -> bool {
    x.is_zero() || x.log10_abs() < log10 as f64
}

fn sci(x: &BigReal) -> String {
    if x.is_zero() {
        "0".into()
    } else {
        x.to_sci_string(3)
    }
}

fn digits(a: &BigReal, b: &BigReal) -> f64 {
    -((a - b).log10_abs() - b.log10_abs())
}

fn c1() -> Outcome {
    let ctx = ctx50();
    let start = Instant::now();
    let p = EisensteinParams::new().n(0);
    let r = verify(IdentityId::LerchI321star, &p, &ctx).unwrap();
    let oracle = zeta_odd_oracle(3, &ctx).unwrap().value;
    let elapsed = start.elapsed();
    let d = digits(&r.rhs.re, &oracle);
    let coeff = lerch_coefficient(0).unwrap();
    let ok = d >= 50.0 && coeff == Rational::from((7, 180)) && elapsed < Duration::from_secs(1);
    Outcome::new(
        ok,
        format!("zeta(3) agrees to {d:.1} digits, coefficient {coeff}, {elapsed:.2?}"),
    )
}

fn c2() -> Outcome {
    let ctx = ctx50();
    let pi = const_pi(&ctx);
    let alphas = [&pi / 4, &pi / 2, pi.clone(), &pi * 2, BigReal::from_i64(3, &ctx)];
    let start = Instant::now();
    let mut worst = BigReal::zero(&ctx);
    for n in 1..=4 {
        for a in &alphas {
            let r = verify(
                IdentityId::RamanujanI321,
                &EisensteinParams::new().alpha(a.clone()).n(n),
                &ctx,
            )
            .unwrap();
            worst = worst.max(r.abs_residual);
        }
    }
    let elapsed = start.elapsed();
    let ok = below(&worst, -45) && elapsed < Duration::from_secs(10);
    Outcome::new(ok, format!("20 cases, max residual {}, {elapsed:.2?}", sci(&worst)))
}

fn c3() -> Outcome {
    let ctx = ctx50();
    let pi = const_pi(&ctx);
    let mut worst = BigReal::zero(&ctx);
    let mut note = |r: zetalab::report::VerificationReport| worst = worst.clone().max(r.abs_residual);

    let g = verify(IdentityId::Glaisher, &EisensteinParams::new().n(1), &ctx).unwrap();
    let glaisher_exact = (&g.lhs.re - &(BigReal::one(&ctx) / 504)).abs();
    note(g);
    let s = verify(IdentityId::Schlomilch221, &EisensteinParams::new(), &ctx).unwrap();
    let s_exact = (&s.lhs.re - &(BigReal::one(&ctx) / 24 - (&pi * 8).recip())).abs();
    note(s);
    for a in [&pi / 2, BigReal::one(&ctx), BigReal::from_i64(3, &ctx)] {
        for id in [IdentityId::Entry23I312, IdentityId::Schlomilch220] {
            note(verify(id, &EisensteinParams::new().alpha(a.clone()), &ctx).unwrap());
        }
    }
    for n in [2, 3] {
        note(verify(IdentityId::CorM216, &EisensteinParams::new().alpha(&pi / 3).n(n), &ctx).unwrap());
    }
    let worst = worst.max(glaisher_exact).max(s_exact);
    Outcome::new(below(&worst, -45), format!("max residual {}", sci(&worst)))
}

fn c4() -> Outcome {
    let ctx = ctx50();
    let one = BigReal::one(&ctx);
    let half_log = const_pi(&ctx).square().ln() / 2;
    let mut worst = BigReal::zero(&ctx);
    let mut corrected_ok = true;
    for w in ["1/3", "1/2", "2/3"] {
        let w = BigReal::from_rational(&w.parse::<Rational>().unwrap(), &ctx);
        let p = EisensteinParams::new().alpha(one.clone()).w(w);
        let r = verify(IdentityId::FalseEntry21, &p, &ctx).unwrap();
        worst = worst.max((&r.signed_residual().re - &half_log).abs());
        corrected_ok &= verify(IdentityId::CorrectedI310, &p, &ctx).unwrap().passed;
    }
    let ok = below(&worst, -40) && corrected_ok;
    Outcome::new(
        ok,
        format!(
            "|residual - log(pi^2)/2| <= {}, corrected entry passes: {corrected_ok}",
            sci(&worst)
        ),
    )
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix2 {
    loop {
        let c: i64 = rng.gen_range(1..=3);
        let d: i64 = rng.gen_range(-3..=3);
        let Some((a, b)) = (-3..=3)
            .flat_map(|a: i64| (-3..=3).map(move |b: i64| (a, b)))
            .find(|&(a, b)| a * d - b * c == 1)
        else {
            continue;
        };
        return Matrix2::new(a, b, c, d).unwrap();
    }
}

fn c5() -> Outcome {
    let ctx = ctx50();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = BigReal::zero(&ctx);
    let mut cases = 0;
    while cases < 25 {
        let v = random_matrix(&mut rng);
        let r1 = Rational::from((rng.gen_range(-9..=9), rng.gen_range(2..=9)));
        let r2 = Rational::from((rng.gen_range(-9..=9), rng.gen_range(1..=9)));
        let (big_r1, _) = transformed_characteristics(&v, &r1, &r2);
        if lambda(&r1) || lambda(&big_r1) {
            continue;
        }
        let m = rng.gen_range(-2..=6);
        let z = HPoint::from_f64(rng.gen_range(-0.5..0.5), rng.gen_range(0.7..1.6), &ctx).unwrap();
        worst = worst.max(verify_thm_h(&z, m, &r1, &r2, &v, &ctx).unwrap().abs_residual);
        cases += 1;
    }
    for m in [0, 2, 4] {
        for (re, im) in [(0.0, 1.0), (0.0, 2.0), (0.5, 1.0)] {
            let z = HPoint::from_f64(re, im, &ctx).unwrap();
            let (lhs, rhs, _) = thm_hh_sides(&z, m, &ctx).unwrap();
            worst = worst.max((&lhs - &rhs).abs());
        }
    }
    let euler_exact = (1..=10).all(|n| euler_residual(n).unwrap().is_zero());
    let ok = below(&worst, -40) && euler_exact;
    Outcome::new(
        ok,
        format!(
            "34 cases, max residual {}, Euler identity exact for n <= 10: {euler_exact}",
            sci(&worst)
        ),
    )
}

fn c6() -> Outcome {
    let ctx = ctx50();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let points: Vec<HPoint> = (0..10)
        .map(|_| HPoint::from_f64(rng.gen_range(-0.5..0.5), rng.gen_range(0.6..1.4), &ctx).unwrap())
        .collect();
    let mut worst = BigReal::zero(&ctx);
    for k in (4..=12).step_by(2) {
        for z in &points {
            worst = worst.max(check_modularity(k, z, &ctx).unwrap().abs_residual);
        }
    }
    for z in &points {
        worst = worst.max(check_quasimodular_e2(z, &ctx).unwrap().abs_residual);
    }
    let mut exact = true;
    for m in 0..=4i64 {
        let a = 2 * m + 1;
        for n in 1..=200u64 {
            let lhs = Rational::from(rug::Integer::from(n).pow(a as u32)) * sigma(-a, n).unwrap();
            exact &= lhs == sigma(a, n).unwrap();
        }
    }
    let ok = below(&worst, -40) && exact;
    Outcome::new(
        ok,
        format!("max residual {}, divisor identity exact: {exact}", sci(&worst)),
    )
}

fn c7() -> Outcome {
    let ctx = ctx50();
    let exact = (1..=5).all(|m| razar_weil_polynomial(2 * m + 2).unwrap() == period_polynomial(m).unwrap());
    let points = [(0.0, 1.0), (0.3, 0.8), (-0.4, 1.2), (0.1, 2.0), (0.45, 0.9)];
    let mut worst = BigReal::zero(&ctx);
    for m in 1..=5 {
        for (re, im) in points {
            let z = HPoint::from_f64(re, im, &ctx).unwrap();
            worst = worst.max(check_period_relation(m, &z, &ctx).unwrap().abs_residual);
        }
    }
    let ok = exact && below(&worst, -40);
    Outcome::new(ok, format!("coefficients equal: {exact}, max residual {}", sci(&worst)))
}

fn c8() -> Outcome {
    let ctx = ctx50();
    let mut ok = true;
    let mut worst = BigReal::zero(&ctx);
    for m in 1..=10 {
        let r = family_report(Family::Ramanujan, m, -30, &ctx).unwrap();
        ok &= r.num_real == 4 && r.verdict;
        if let Some(d) = r.max_unit_distance_nonreal {
            worst = worst.max(d);
        }
    }
    let mut prev: Option<BigReal> = None;
    let mut monotone = true;
    let mut last = String::new();
    for m in 1..=20 {
        let top = family_report(Family::Ramanujan, m, -30, &ctx)
            .unwrap()
            .largest_real_root()
            .unwrap();
        monotone &= top > 2 && prev.as_ref().is_none_or(|p| top < *p);
        last = top.to_sci_string(8);
        prev = Some(top);
    }
    Outcome::new(
        ok && monotone,
        format!(
            "4 real roots each, max ||r|-1| {}, largest real root decreasing to {last} at m = 20",
            sci(&worst)
        ),
    )
}

fn c9() -> Outcome {
    let ctx = ctx50();
    let mut worst = BigReal::zero(&ctx);
    let mut ok = true;
    for m in 1..=8 {
        let r = family_report(Family::Full, m, -25, &ctx).unwrap();
        ok &= r.verdict;
        if let Some(d) = r.max_unit_distance {
            worst = worst.max(d);
        }
    }
    Outcome::new(ok, format!("max ||r|-1| {}", sci(&worst)))
}

/// Returns the outcome and the error kinds met, so the caller can pin the
/// known failure mode.
fn c10() -> (Outcome, Vec<Error>) {
    let ctx = ctx50();
    let mut errors = Vec::new();
    let mut parts = Vec::new();
    let mut ok = true;
    for m in [2u32, 3] {
        let s = 2 * m + 1;
        match zeta_from_eichler(m, &ctx) {
            Ok(z) => {
                let d = digits(&z.value, &zeta_odd_oracle(s, &ctx).unwrap().value);
                ok &= d >= 30.0;
                parts.push(format!("zeta({s}) {d:.1} digits"));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("zeta({s}): {e}"));
                errors.push(e);
            }
        }
    }
    let mut info = Vec::new();
    for m in [2u32, 3] {
        let s = 2 * m + 1;
        if let Ok(z) = zeta_from_eichler_derivative(m, &ctx) {
            info.push(format!(
                "zeta({s}) {:.1} digits",
                digits(&z.value, &zeta_odd_oracle(s, &ctx).unwrap().value)
            ));
        }
    }
    line(&format!(
        "INFO criterion 10: differentiated relation at the same roots gives {}",
        info.join(", ")
    ));
    (Outcome::new(ok, parts.join("; ")), errors)
}

fn c11() -> Outcome {
    let ctx = ctx50();
    let one = DirichletCharacter::principal(1);
    let reduction = (2..=6u32).all(|k| {
        let lhs = generalized_r(2 * k, &one, &one, 1).unwrap();
        let rhs = LaurentPoly::new(-1, ramanujan_poly(k - 1).unwrap());
        lhs == rhs
    });
    let jobs = conjecture_jobs(12, 2..=8);
    let (mut zero, mut constant, mut reported, mut flagged, mut failed) = (0, 0, 0, 0, 0);
    for (chi, psi, k) in &jobs {
        let r = generalized_report(chi, psi, *k, psi.modulus(), -25, &ctx);
        if r.flagged() {
            flagged += 1;
            line(&format!(
                "  flagged: k = {k}, chi mod {}, psi mod {}",
                chi.modulus(),
                psi.modulus()
            ));
        }
        match r.outcome {
            PairOutcome::Zero => zero += 1,
            PairOutcome::Constant => constant += 1,
            PairOutcome::Report(_) => reported += 1,
            PairOutcome::Failed(_) => failed += 1,
        }
    }
    let chars: usize = (2..=12).map(|l| real_nonprincipal_characters(l).len()).sum();
    Outcome::new(
        reduction && failed == 0,
        format!(
            "reduction exact: {reduction}; {} jobs over {chars} characters: {reported} reported, {zero} zero, {constant} constant, {flagged} flagged off the circle",
            jobs.len()
        ),
    )
}

#[test]
fn acceptance_criteria() {
    let mut results: Vec<(usize, Outcome)> = Vec::new();
    let mut run = |n: usize, o: Outcome| {
        line(&format!(
            "{} criterion {n}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        ));
        results.push((n, o));
    };
    run(1, c1());
    run(2, c2());
    run(3, c3());
    run(4, c4());
    run(5, c5());
    run(6, c6());
    run(7, c7());
    run(8, c8());
    run(9, c9());
    let (o10, errors10) = c10();
    run(10, o10);
    run(11, c11());

    // Criterion 10 is known to be unattainable as stated: the nonreal roots
    // of R_5 and R_7 satisfy α^{2m} = 1, where the relation degenerates.
    const KNOWN_UNATTAINABLE: [usize; 1] = [10];
    for (n, o) in &results {
        if KNOWN_UNATTAINABLE.contains(n) {
            continue;
        }
        assert!(o.passed, "criterion {n} failed: {}", o.detail);
    }
    let c10 = &results[9].1;
    assert!(
        !c10.passed,
        "criterion 10 now passes; drop it from the known-unattainable list"
    );
    assert_eq!(errors10.len(), 2);
    assert!(
        errors10.iter().all(|e| matches!(e, Error::IllConditioned(_))),
        "{errors10:?}"
    );
}
