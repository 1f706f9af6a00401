use kmittag_core::identities::*;
use kmittag_core::{ext_k_beta, ExtBetaParams, KOrder, MLParams, QuadratureConfig};

fn ml(k: f64, alpha: f64, beta: f64, gamma: f64, delta: f64, p: f64, q: f64) -> MLParams {
    MLParams::new(KOrder::new(k).unwrap(), alpha, beta, gamma, delta, p, q).unwrap()
}

fn t1(ml: MLParams, a: f64, b: f64, cutoff: f64, z: f64) -> Theorem1Params {
    Theorem1Params {
        ml,
        a,
        b,
        m: 1.0,
        cutoff,
        z,
    }
}

fn t2(ml: MLParams, rho: f64, mu: f64, cutoff: f64, z: f64, t: f64, x: f64) -> Theorem2Params {
    Theorem2Params {
        ml,
        rho,
        mu,
        m: 1.0,
        cutoff,
        z,
        t,
        x,
    }
}

fn t3(ml: MLParams, a_exp: f64, u: f64, cutoff: f64, z: f64) -> Theorem3Params {
    Theorem3Params {
        ml,
        lambda: 1.5,
        mu: 3.5,
        rho: 1.0,
        sigma: 1.0,
        a_exp,
        u,
        m: 1.0,
        cutoff,
        z,
    }
}

fn cfg() -> VerifyConfig {
    VerifyConfig::default()
}

fn minus1() -> VerifyConfig {
    VerifyConfig {
        exponent: ExponentConvention::MinusOne,
        ..VerifyConfig::default()
    }
}

#[test]
fn theorem_2_1_trivial_cases() {
    let exp = MLParams::exponential();
    let r = verify_theorem_2_1(&t1(exp, 2.0, 2.0, 0.0, 0.0), &cfg()).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert!((r.lhs.value - 1.0 / 6.0).abs() < 1e-12);
    assert!((r.rhs.value - 1.0 / 6.0).abs() < 1e-12);

    let r = verify_theorem_2_1(&t1(exp, 1.0, 1.0, 0.25, 0.0), &cfg()).unwrap();
    let direct = ext_k_beta(
        &ExtBetaParams::new(KOrder::ONE, 1.0, 1.0, 0.25, 1.0).unwrap(),
        &QuadratureConfig::default(),
    )
    .unwrap();
    assert_eq!(r.status, Status::Verified);
    assert!((r.rhs.value - direct.value).abs() <= 1e-14);
}

#[test]
fn theorem_2_1_at_k_two() {
    let p = t1(ml(2.0, 1.0, 1.0, 1.1, 1.1, 1.0, 1.0), 1.5, 2.0, 0.5, 0.5);
    let r = verify_theorem_2_1(&p, &cfg()).unwrap();
    assert_eq!(r.status, Status::Verified, "{r:?}");
    assert!(r.rel_err <= 1e-6);
}

#[test]
fn corollary_2_1() {
    let exp = MLParams::exponential();
    let r = verify_corollary_2_1(&t1(exp, 1.0, 1.0, 0.0, 1.0), &cfg()).unwrap();
    assert_eq!(r.status, Status::Verified);
    let e1 = std::f64::consts::E - 1.0;
    assert!((r.rhs.value - e1).abs() / e1 <= 1e-13);
    assert!((r.lhs.value - e1).abs() / e1 <= 1e-8);

    let p = t1(ml(1.0, 1.3, 1.7, 1.2, 0.8, 1.0, 0.5), 1.7, 1.4, 0.0, 0.0);
    let r = verify_corollary_2_1(&p, &cfg()).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert!(r.rel_err <= 1e-10);

    let p = t1(ml(2.0, 2.0, 2.0, 1.0, 1.0, 1.0, 1.0), 2.0, 2.0, 0.0, 0.5);
    let r = verify_corollary_2_1(&p, &cfg()).unwrap();
    assert_eq!(r.status, Status::FlaggedFactorK);
    assert!((r.ratio - 2.0).abs() <= 1e-6);

    // pins are enforced
    assert!(verify_corollary_2_1(&t1(exp, 1.0, 1.0, 0.1, 1.0), &cfg()).is_err());
    assert!(verify_corollary_2_1(&t1(exp, 2.0, 1.0, 0.0, 1.0), &cfg()).is_err());
}

#[test]
fn theorem_2_2_without_cutoff() {
    let exp = MLParams::exponential();
    let r = verify_theorem_2_2(&t2(exp, 2.0, 1.0, 0.0, 0.0, 0.0, 1.0), &cfg()).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert!((r.lhs.value - 0.5).abs() < 1e-12);
    assert_eq!(r.exponent.unwrap().matched, ExponentMatch::Both);

    // on a longer interval only the exponent with the Jacobian agrees
    let p = t2(exp, 1.0, 1.0, 0.0, 0.5, 0.0, 2.0);
    let literal = verify_theorem_2_2(&p, &cfg()).unwrap();
    assert_eq!(literal.status, Status::Failed);
    let check = literal.exponent.unwrap();
    assert_eq!(check.matched, ExponentMatch::MinusOne);
    assert!(check.minus_one_rel_err <= 1e-6);
    assert!((literal.ratio - 2.0).abs() < 1e-6);

    let r = verify_theorem_2_2(&p, &minus1()).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert_eq!(r.lhs, literal.lhs);
}

#[test]
fn theorem_2_2_with_cutoff_is_asymptotic() {
    for cutoff in [0.01, 0.02] {
        for policy in [RPolicy::SmallestTerm, RPolicy::TruncatePositive] {
            let cfg = VerifyConfig {
                r_policy: policy,
                ..minus1()
            };
            let p = t2(MLParams::exponential(), 3.0, 3.0, cutoff, 0.5, 0.0, 1.0);
            let r = verify_theorem_2_2(&p, &cfg).unwrap();
            assert!(
                matches!(r.status, Status::Verified | Status::AsymptoticOnly),
                "{policy:?} A={cutoff}: {r:?}"
            );
            assert!(r.abs_err <= r.rhs.truncation_estimate, "{r:?}");
        }
    }
}

#[test]
fn corollary_2_2() {
    for (k, x, status) in [
        (1.0, 1.0, Status::Verified),
        (1.0, 2.0, Status::Verified),
        (2.0, 1.0, Status::FlaggedFactorK),
    ] {
        let m = ml(k, 1.2, 1.4, 1.1, 0.9, 1.0, 1.0);
        let p = t2(m, 1.6, 1.4, 0.0, 0.7, 0.0, x);
        let r = verify_corollary_2_2(&p, &minus1()).unwrap();
        assert_eq!(r.status, status, "k={k} x={x}: {r:?}");
        if status == Status::Verified {
            assert!(r.rel_err <= 1e-8);
        } else {
            assert!((r.ratio - k).abs() <= 1e-6);
        }
        // the printed series has Γ_k(αn+β) in place of Γ_k(αn+β+ρ)
        let printed = r.printed_rhs.unwrap();
        assert!((printed - r.rhs.value).abs() > 1e-3 * r.rhs.value.abs());
    }
    let p = t2(MLParams::exponential(), 2.0, 2.0, 0.0, 0.5, 0.0, 1.0);
    assert!(verify_corollary_2_2(&p, &cfg()).is_err());
}

#[test]
fn theorem_2_3_collapses_to_theorem_2_1() {
    let m = ml(2.0, 1.5, 1.0, 1.1, 1.1, 1.0, 1.0);
    let base = t3(m, 1.0, 0.0, 0.1, 0.5);
    let t23 = verify_theorem_2_3(&base, &cfg()).unwrap();
    let t21 = verify_theorem_2_1(&base.without_binomial(), &cfg()).unwrap();
    assert!(t23.numerics_identical(&t21));
    assert_eq!(t23.identity, IdentityId::T2_3);

    let no_exp = t3(m, 0.0, 0.7, 0.1, 0.5);
    assert!(verify_theorem_2_3(&no_exp, &cfg()).unwrap().numerics_identical(&t21));
    let c23 = verify_corollary_2_3(&no_exp, &cfg()).unwrap();
    assert_eq!(c23.status, Status::Verified);
    assert_eq!(c23.identity, IdentityId::C2_3);
}

#[test]
fn theorem_2_3_binomial_series() {
    let exp = MLParams::exponential();
    let p = Theorem3Params {
        ml: exp,
        lambda: 1.0,
        mu: 3.0,
        rho: 1.0,
        sigma: 1.0,
        a_exp: 1.0,
        u: 0.5,
        m: 1.0,
        cutoff: 0.0,
        z: 0.0,
    };
    let r = verify_theorem_2_3(&p, &cfg()).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert!(r.rel_err <= 1e-8, "{r:?}");
    assert!(r.rhs.outer_terms > 1);

    for u in [-0.9, 0.8] {
        let p = t3(ml(1.0, 1.2, 1.0, 1.1, 1.1, 1.0, 1.0), 2.0, u, 0.1, -0.5);
        let r = verify_theorem_2_3(&p, &cfg()).unwrap();
        assert_eq!(r.status, Status::Verified, "u={u}: {r:?}");
    }

    assert!(verify_theorem_2_3(&Theorem3Params { u: 1.0, ..p }, &cfg()).is_err());
    assert!(verify_theorem_2_3(&Theorem3Params { mu: 0.5, ..p }, &cfg()).is_err());
}

#[test]
fn corollary_2_4() {
    let r = verify_corollary_2_4(&t3(ml(1.0, 1.2, 1.0, 1.1, 1.1, 1.0, 1.0), 0.0, 0.4, 0.0, 0.9), &cfg()).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert!(r.rel_err <= 1e-8);
    let r = verify_corollary_2_4(&t3(ml(2.0, 1.2, 1.0, 1.1, 1.1, 1.0, 1.0), 0.0, 0.4, 0.0, 0.9), &cfg()).unwrap();
    assert_eq!(r.status, Status::FlaggedFactorK);
    assert!((r.ratio - 2.0).abs() <= 1e-6);
    assert!(verify_corollary_2_4(&t3(MLParams::exponential(), 1.0, 0.4, 0.0, 0.9), &cfg()).is_err());
}

#[test]
fn special_cases_are_pure_pinning() {
    let general = ml(1.0, 1.3, 1.2, 1.4, 0.9, 0.8, 0.6);
    let bases = [
        SpecialCaseBase::Theorem1(t1(general, 1.5, 2.0, 0.3, 0.6)),
        SpecialCaseBase::Theorem2(t2(general, 2.0, 1.5, 0.0, 0.6, 0.0, 1.0)),
        SpecialCaseBase::Theorem3(t3(general, 1.0, 0.3, 0.1, 0.6)),
    ];
    for case in SpecialCase::ALL {
        let base = bases.iter().find(|b| {
            matches!(
                (b, case.parent()),
                (SpecialCaseBase::Theorem1(_), IdentityId::T2_1)
                    | (SpecialCaseBase::Theorem2(_), IdentityId::T2_2)
                    | (SpecialCaseBase::Theorem3(_), IdentityId::T2_3)
            )
        });
        let base = base.unwrap();
        let report = verify_special_case(case, base, &cfg()).unwrap();
        assert_eq!(report.identity, case.id());
        assert_eq!(report.parent, case.parent());
        assert_eq!(report.status, Status::Verified, "{case}: {report:?}");

        let mut pinned = *base;
        let ml = match &mut pinned {
            SpecialCaseBase::Theorem1(p) => &mut p.ml,
            SpecialCaseBase::Theorem2(p) => &mut p.ml,
            SpecialCaseBase::Theorem3(p) => &mut p.ml,
        };
        case.pin(ml);
        assert!(report.numerics_identical(&pinned.verify(&cfg()).unwrap()));
    }
    let wrong = SpecialCaseBase::Theorem1(t1(general, 1.5, 2.0, 0.3, 0.6));
    assert!(verify_special_case(SpecialCase::S3_4, &wrong, &cfg()).is_err());
}

#[test]
fn remark_reductions_verify() {
    let reports = verify_remark_reductions(&cfg()).unwrap();
    assert_eq!(reports.len(), 18);
    for r in &reports {
        assert_eq!(r.status, Status::Verified, "{r:?}");
        assert_eq!(r.k, 1.0);
    }
    assert_eq!(reports.iter().filter(|r| r.label == Some("salim")).count(), 9);
}

#[test]
fn perturbing_one_rhs_term_is_detected() {
    let perturbed = VerifyConfig {
        perturbation: Some(TermPerturbation {
            n: 3,
            factor: 1.0 + 1e-6,
        }),
        ..cfg()
    };
    let mut flipped = 0;
    for z in [0.5, 1.0, 2.0] {
        let p = t1(ml(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0), 1.0, 1.0, 0.0, z);
        assert_eq!(verify_corollary_2_1(&p, &cfg()).unwrap().status, Status::Verified);
        if verify_corollary_2_1(&p, &perturbed).unwrap().status == Status::Failed {
            flipped += 1;
        }
    }
    assert!(flipped >= 1);
}

#[test]
fn under_truncated_rhs_fails() {
    let p = t1(ml(1.0, 1.0, 1.0, 1.1, 1.1, 1.0, 1.0), 1.5, 2.0, 0.5, 0.9);
    let short = VerifyConfig {
        rhs: kmittag_core::SeriesConfig { tol: 1e-14, n_max: 3 },
        ..cfg()
    };
    let r = verify_theorem_2_1(&p, &short).unwrap();
    assert_eq!(r.status, Status::Failed);
    assert!(!r.rhs.converged);
}

#[test]
fn z_zero_collapses_every_identity() {
    for k in [1.0, 2.0] {
        let m = ml(k, 1.3, 1.2, 1.4, 0.9, 0.8, 0.6);
        let reports = [
            verify_theorem_2_1(&t1(m, 1.5, 2.0, 0.3, 0.0), &cfg()).unwrap(),
            verify_theorem_2_2(&t2(m, 2.0, 1.5, 0.0, 0.0, 0.0, 1.0), &cfg()).unwrap(),
            verify_theorem_2_3(&t3(m, 1.0, 0.3, 0.1, 0.0), &cfg()).unwrap(),
        ];
        for r in reports {
            assert_eq!(r.rhs.inner_terms % 3, 0);
            let target = if r.identity == IdentityId::T2_2 { k } else { 1.0 };
            assert!((r.ratio - target).abs() <= 1e-10 * target, "{r:?}");
        }
    }
}

#[test]
fn more_rhs_terms_never_hurt() {
    let p = t1(ml(1.0, 1.5, 1.0, 1.1, 1.1, 1.0, 1.0), 1.5, 2.0, 0.1, 0.5);
    let mut previous = f64::INFINITY;
    for n_max in [50, 100, 600] {
        let cfg = VerifyConfig {
            rhs: kmittag_core::SeriesConfig { tol: 1e-14, n_max },
            ..cfg()
        };
        let r = verify_theorem_2_1(&p, &cfg).unwrap();
        assert!(r.rhs.converged);
        assert!(r.rel_err <= previous);
        previous = r.rel_err;
    }
}
