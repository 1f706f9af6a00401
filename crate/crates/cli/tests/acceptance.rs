//! Acceptance criteria 1–10, one line each.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process exits non-zero when a criterion fails, unless the failure is the
//! documented one listed in `DOCUMENTED`, which must then reproduce exactly.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{ml_sum, rel, wright_sum};
use kmittag_cli::fixtures;
use kmittag_core::identities::*;
use kmittag_core::{
    integrate_unit, k_beta, k_gamma, ml_classic, ml_k, ml_prabhakar, ml_salim, ml_salim_faraj, ml_shukla, ml_wiman,
    wright_k, GammaPair, KOrder, MLParams, QuadratureConfig, SeriesConfig, WrightParams,
};

/// Criteria whose failure is a reproducible finding rather than a defect.
const DOCUMENTED: &[u32] = &[7];

struct Outcome {
    pass: bool,
    detail: String,
    /// For a documented failure: whether it reproduced exactly as recorded.
    as_documented: bool,
}

impl Outcome {
    fn check(pass: bool, detail: String) -> Self {
        Outcome {
            pass,
            detail,
            as_documented: false,
        }
    }
}

fn ml(k: f64, alpha: f64, beta: f64, gamma: f64, delta: f64, p: f64, q: f64) -> MLParams {
    MLParams::new(KOrder::new(k).unwrap(), alpha, beta, gamma, delta, p, q).unwrap()
}

fn series() -> SeriesConfig {
    SeriesConfig::default()
}

fn criterion_1() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for k in [0.5, 1.0, 2.0, 3.3] {
        let kk = KOrder::new(k).unwrap();
        for x in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 50.0] {
            let lhs = k_gamma(kk, x + k).unwrap();
            let rhs = x * k_gamma(kk, x).unwrap();
            worst = worst.max(rel(lhs, rhs));
            points += 1;
        }
    }
    Outcome::check(
        worst <= 1e-12,
        format!("k-gamma functional equation, {points} points, max rel err {worst:.2e} (tol 1e-12)"),
    )
}

fn criterion_2() -> Outcome {
    let grid = [0.5, 1.0, 2.0, 4.0, 8.0];
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for k in [0.5, 1.0, 2.0] {
        let kk = KOrder::new(k).unwrap();
        for x in grid {
            for y in grid {
                let q = integrate_unit(|n| n.from_lo.powf(x / k - 1.0) * n.to_hi.powf(y / k - 1.0) / k, &cfg).unwrap();
                worst = worst.max(rel(q.value, k_beta(kk, x, y).unwrap()));
                points += 1;
            }
        }
    }
    Outcome::check(
        worst <= 1e-8,
        format!("k-beta gamma ratio vs quadrature, {points} points, max rel err {worst:.2e} (tol 1e-8)"),
    )
}

fn criterion_3() -> Outcome {
    use std::f64::consts::E;
    let cfg = series();
    let closed = [
        ((1.0, 1.0), 1.0, E),
        ((1.0, 1.0), 2.0, E * E),
        ((2.0, 1.0), 1.0, 1f64.cosh()),
        ((2.0, 1.0), 4.0, 2f64.cosh()),
        ((2.0, 2.0), 1.0, 1f64.sinh()),
        ((1.0, 2.0), 1.0, E - 1.0),
        ((1.0, 1.0), -1.0, 1.0 / E),
    ];
    let mut closed_worst: f64 = 0.0;
    for ((alpha, beta), z, want) in closed {
        let got = ml_k(&ml(1.0, alpha, beta, 1.0, 1.0, 1.0, 1.0), z, &cfg).unwrap().value;
        closed_worst = closed_worst.max(rel(got, want));
    }

    let (a, b, g, d, p, q) = (1.3, 1.2, 1.4, 0.9, 1.1, 0.7);
    let mut bitwise = true;
    let mut oracle_worst: f64 = 0.0;
    let mut ratio_worst: f64 = 0.0;
    for z in [-2.0, -1.0, -0.3, 0.5, 1.2, 2.0] {
        let via_k = |params: MLParams| {
            let r = ml_k(&params, z, &cfg).unwrap();
            (r.value, r.tail_ratio)
        };
        let pairs = [
            (ml_classic(a, z, &cfg), ml(1.0, a, 1.0, 1.0, 1.0, 1.0, 1.0)),
            (ml_wiman(a, b, z, &cfg), ml(1.0, a, b, 1.0, 1.0, 1.0, 1.0)),
            (ml_prabhakar(a, b, g, z, &cfg), ml(1.0, a, b, g, 1.0, 1.0, 1.0)),
            (ml_shukla(a, b, g, q, z, &cfg), ml(1.0, a, b, g, 1.0, 1.0, q)),
            (ml_salim(a, b, g, d, z, &cfg), ml(1.0, a, b, g, d, 1.0, 1.0)),
            (ml_salim_faraj(a, b, g, d, p, q, z, &cfg), ml(1.0, a, b, g, d, p, q)),
        ];
        for (reduced, collapsed) in pairs {
            let reduced = reduced.unwrap().value;
            let (value, ratio) = via_k(collapsed);
            bitwise &= reduced.to_bits() == value.to_bits();
            ratio_worst = ratio_worst.max(ratio);
            let c = collapsed;
            let oracle = ml_sum(1.0, c.alpha, c.beta, c.gamma, c.delta, c.p, c.q, z, 80);
            oracle_worst = oracle_worst.max(rel(reduced, oracle));
        }
    }
    Outcome::check(
        closed_worst <= 1e-12 && bitwise && oracle_worst <= 1e-12 && ratio_worst < 0.5,
        format!(
            "Mittag-Leffler closed forms max rel err {closed_worst:.2e}; reductions bit-identical to ml_k: {bitwise}; \
             vs 80-term oracle max rel err {oracle_worst:.2e} (tol 1e-12); final term ratio max {ratio_worst:.3} (< 0.5)"
        ),
    )
}

fn criterion_4() -> Outcome {
    let cfg = series();
    let pairs = |v: &[(f64, f64)]| v.iter().map(|&(o, s)| GammaPair::new(o, s)).collect::<Vec<_>>();
    type Set<'a> = (f64, &'a [(f64, f64)], &'a [(f64, f64)], f64);
    let sets: [Set; 3] = [
        (1.0, &[], &[(1.0, 1.0)], 1.0),
        (1.0, &[(2.0, 1.0)], &[(1.5, 2.0)], 0.5),
        (2.0, &[(1.5, 1.0)], &[(1.0, 1.5), (2.0, 1.0)], -1.0),
    ];
    let mut worst: f64 = 0.0;
    for (k, up, low, z) in sets {
        let p = WrightParams::new(KOrder::new(k).unwrap(), pairs(up), pairs(low)).unwrap();
        let got = wright_k(&p, z, &cfg).unwrap().value;
        worst = worst.max(rel(got, wright_sum(k, up, low, z, 60)));
    }
    let trivial = WrightParams::new(KOrder::ONE, pairs(&[(1.0, 1.0)]), pairs(&[(1.0, 1.0)])).unwrap();
    let e_err = rel(wright_k(&trivial, 1.0, &cfg).unwrap().value, std::f64::consts::E);
    Outcome::check(
        worst <= 1e-12 && e_err <= 1e-13,
        format!("k-Wright vs 60-term oracle max rel err {worst:.2e} (tol 1e-12); cancelling case vs e {e_err:.2e} (tol 1e-13)"),
    )
}

/// The 2 × 2 × 2 × 2 × 2 product grid of (k, α, β, A, z) shared by criteria 5 and 6.
fn core_grid() -> Vec<Theorem1Params> {
    let mut grid = Vec::new();
    for k in [1.0, 2.0] {
        for alpha in [1.0, 1.5] {
            for beta in [1.0, 1.5] {
                for cutoff in [0.1, 1.0] {
                    for z in [-0.5, 0.5] {
                        grid.push(Theorem1Params {
                            ml: ml(k, alpha, beta, 1.1, 1.1, 1.0, 1.0),
                            a: 1.5,
                            b: 2.0,
                            m: 1.0,
                            cutoff,
                            z,
                        });
                    }
                }
            }
        }
    }
    grid
}

fn criterion_5() -> Outcome {
    let cfg = VerifyConfig::with_tol(1e-6);
    let mut worst: f64 = 0.0;
    let mut bad = 0;
    let mut monotone = true;
    let grid = core_grid();
    for p in &grid {
        let r = verify_theorem_2_1(p, &cfg).unwrap();
        worst = worst.max(r.rel_err);
        bad += usize::from(r.status != Status::Verified || r.rel_err > 1e-6);
        let mut previous = f64::INFINITY;
        for n_max in [50, 100, 600] {
            let c = VerifyConfig {
                rhs: SeriesConfig { tol: 1e-14, n_max },
                ..cfg
            };
            let r = verify_theorem_2_1(p, &c).unwrap();
            if r.rhs.converged {
                monotone &= r.rel_err <= previous;
                previous = r.rel_err;
            }
        }
    }
    Outcome::check(
        bad == 0 && monotone,
        format!(
            "Euler-type formula on (0,1), {} points, {bad} not verified, max rel err {worst:.2e} (tol 1e-6); \
             rel err monotone in n_max: {monotone}",
            grid.len()
        ),
    )
}

fn theorem3(base: &Theorem1Params, a_exp: f64, u: f64) -> Theorem3Params {
    Theorem3Params {
        ml: base.ml,
        lambda: base.a,
        mu: base.a + base.b,
        rho: 1.0,
        sigma: 1.0,
        a_exp,
        u,
        m: base.m,
        cutoff: base.cutoff,
        z: base.z,
    }
}

fn criterion_6() -> Outcome {
    let cfg = VerifyConfig::with_tol(1e-5);
    let grid = core_grid();
    let mut worst: f64 = 0.0;
    let mut bad = 0;
    let mut points = 0;
    for base in grid.iter().filter(|p| p.cutoff == 0.1) {
        for u in [-0.5, 0.3, 0.8] {
            for a_exp in [0.5, 1.0, 2.0] {
                let r = verify_theorem_2_3(&theorem3(base, a_exp, u), &cfg).unwrap();
                worst = worst.max(r.rel_err);
                bad += usize::from(r.status != Status::Verified || r.rel_err > 1e-5);
                points += 1;
            }
        }
    }
    let mut identical = 0;
    for base in &grid {
        let t23 = verify_theorem_2_3(&theorem3(base, 1.0, 0.0), &VerifyConfig::default()).unwrap();
        let t21 = verify_theorem_2_1(base, &VerifyConfig::default()).unwrap();
        identical += usize::from(t23.numerics_identical(&t21));
    }
    Outcome::check(
        bad == 0 && identical == grid.len(),
        format!(
            "binomial-weighted formula, {points} points, {bad} not verified, max rel err {worst:.2e} (tol 1e-5); \
             u=0 bit-identical to the (0,1) formula on {identical}/{}",
            grid.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let cfg = VerifyConfig::default();
    let mut k1_worst: f64 = 0.0;
    let mut k1_bad = Vec::new();
    let mut k2_unflagged = Vec::new();
    let mut k2_ratio_worst: f64 = 0.0;
    for k in [1.0, 2.0] {
        for z in [-0.5, 0.5] {
            let c1 = Theorem1Params {
                ml: ml(k, 1.3, 1.7, 1.2, 0.8, 1.0, 0.5),
                a: 1.7,
                b: 1.4,
                m: 1.0,
                cutoff: 0.0,
                z,
            };
            let c2 = Theorem2Params {
                ml: ml(k, 1.2, 1.4, 1.1, 0.9, 1.0, 1.0),
                rho: 1.6,
                mu: 1.4,
                m: 1.0,
                cutoff: 0.0,
                z,
                t: 0.0,
                x: 1.0,
            };
            let c3 = |cutoff| Theorem3Params {
                ml: ml(k, 1.2, 1.0, 1.1, 1.1, 1.0, 1.0),
                lambda: 1.5,
                mu: 3.5,
                rho: 1.0,
                sigma: 1.0,
                a_exp: 0.0,
                u: 0.0,
                m: 1.0,
                cutoff,
                z,
            };
            let reports = [
                verify_corollary_2_1(&c1, &cfg).unwrap(),
                verify_corollary_2_2(&c2, &cfg).unwrap(),
                verify_corollary_2_3(&c3(0.1), &cfg).unwrap(),
                verify_corollary_2_4(&c3(0.0), &cfg).unwrap(),
            ];
            for r in reports {
                if k == 1.0 {
                    k1_worst = k1_worst.max(r.rel_err);
                    if r.status != Status::Verified || r.rel_err > 1e-8 {
                        k1_bad.push(r.identity);
                    }
                } else if r.status == Status::FlaggedFactorK && (r.ratio - 2.0).abs() <= 1e-6 {
                    k2_ratio_worst = k2_ratio_worst.max((r.ratio - 2.0).abs());
                } else {
                    k2_unflagged.push((r.identity, r.status, r.ratio, r.rel_err));
                }
            }
        }
    }
    let pass = k1_bad.is_empty() && k2_unflagged.is_empty();
    // C2.3 carries the cutoff beta on both sides, so no factor k arises there
    let as_documented = k1_bad.is_empty()
        && !k2_unflagged.is_empty()
        && k2_unflagged.iter().all(|&(id, status, ratio, _)| {
            id == IdentityId::C2_3 && status == Status::Verified && (ratio - 1.0).abs() <= 1e-8
        });
    let unflagged: Vec<String> = k2_unflagged
        .iter()
        .map(|(id, status, ratio, err)| format!("{id} {} ratio {ratio:.10} rel err {err:.1e}", status.as_str()))
        .collect();
    Outcome {
        pass,
        detail: format!(
            "corollaries: k=1 max rel err {k1_worst:.2e} (tol 1e-8), {} not verified; k=2 flagged ratios within {k2_ratio_worst:.1e} of 2; \
             not flagged at k=2: [{}]",
            k1_bad.len(),
            unflagged.join("; ")
        ),
        as_documented,
    }
}

fn criterion_8() -> Outcome {
    let minus1 = VerifyConfig {
        exponent: ExponentConvention::MinusOne,
        ..VerifyConfig::default()
    };
    let mut a0_worst: f64 = 0.0;
    let mut a0_bad = 0;
    let mut literal_matches = 0;
    let mut a0_points = 0;
    for rho in [1.5, 2.5] {
        for mu in [1.0, 1.5] {
            for z in [-0.5, 0.5] {
                for (t, x) in [(0.0, 1.0), (0.5, 2.5)] {
                    let p = Theorem2Params {
                        ml: ml(1.0, 1.2, 1.4, 1.1, 0.9, 1.0, 1.0),
                        rho,
                        mu,
                        m: 1.0,
                        cutoff: 0.0,
                        z,
                        t,
                        x,
                    };
                    let r = verify_theorem_2_2(&p, &minus1).unwrap();
                    a0_worst = a0_worst.max(r.rel_err);
                    a0_bad += usize::from(r.status != Status::Verified || r.rel_err > 1e-6);
                    let matched = r.exponent.unwrap().matched;
                    literal_matches += usize::from(matches!(matched, ExponentMatch::Literal | ExponentMatch::Both));
                    a0_points += 1;
                }
            }
        }
    }

    let smallest = VerifyConfig {
        r_policy: RPolicy::SmallestTerm,
        ..minus1
    };
    let mut cut_bad = 0;
    let mut cut_points = 0;
    let mut statuses = [0usize; 2];
    for cutoff in [0.01, 0.02] {
        for alpha in [1.0, 1.5] {
            for z in [-0.5, 0.5] {
                for (t, x) in [(0.0, 1.0), (0.5, 1.5)] {
                    let p = Theorem2Params {
                        ml: ml(1.0, alpha, 1.0, 1.0, 1.0, 1.0, 1.0),
                        rho: 3.0,
                        mu: 3.0,
                        m: 1.0,
                        cutoff,
                        z,
                        t,
                        x,
                    };
                    let r = verify_theorem_2_2(&p, &smallest).unwrap();
                    let ok_status = matches!(r.status, Status::Verified | Status::AsymptoticOnly);
                    cut_bad += usize::from(!ok_status || r.abs_err > r.rhs.truncation_estimate);
                    match r.status {
                        Status::Verified => statuses[0] += 1,
                        Status::AsymptoticOnly => statuses[1] += 1,
                        _ => {}
                    }
                    cut_points += 1;
                }
            }
        }
    }
    Outcome::check(
        a0_bad == 0 && cut_bad == 0,
        format!(
            "interval formula: A=0, {a0_points} points, {a0_bad} not verified, max rel err {a0_worst:.2e} (tol 1e-6, exponent minus1; \
             literal exponent matched {literal_matches}/{a0_points}); A in {{0.01, 0.02}} smallest_term, {cut_points} points, \
             {cut_bad} outside the first omitted term, {} verified, {} asymptotic_only",
            statuses[0], statuses[1]
        ),
    )
}

fn criterion_9() -> Outcome {
    let cfg = VerifyConfig::default();
    let mut identical = 0;
    let mut bad = 0;
    let mut total = 0;
    for z in [-0.5, 0.5] {
        let general = ml(1.0, 1.3, 1.2, 1.4, 0.9, 0.8, 0.6);
        let bases = [
            SpecialCaseBase::Theorem1(Theorem1Params {
                ml: general,
                a: 1.5,
                b: 2.0,
                m: 1.0,
                cutoff: 0.3,
                z,
            }),
            SpecialCaseBase::Theorem2(Theorem2Params {
                ml: general,
                rho: 2.0,
                mu: 1.5,
                m: 1.0,
                cutoff: 0.0,
                z,
                t: 0.0,
                x: 1.0,
            }),
            SpecialCaseBase::Theorem3(Theorem3Params {
                ml: general,
                lambda: 1.5,
                mu: 3.5,
                rho: 1.0,
                sigma: 1.0,
                a_exp: 1.0,
                u: 0.3,
                m: 1.0,
                cutoff: 0.1,
                z,
            }),
        ];
        for case in SpecialCase::ALL {
            let base = bases.iter().find(|b| b.identity() == case.parent()).unwrap();
            let report = verify_special_case(case, base, &cfg).unwrap();
            let mut pinned = *base;
            match &mut pinned {
                SpecialCaseBase::Theorem1(p) => case.pin(&mut p.ml),
                SpecialCaseBase::Theorem2(p) => case.pin(&mut p.ml),
                SpecialCaseBase::Theorem3(p) => case.pin(&mut p.ml),
            }
            identical += usize::from(report.numerics_identical(&pinned.verify(&cfg).unwrap()));
            bad += usize::from(report.status != Status::Verified);
            total += 1;
        }
    }
    let remarks = verify_remark_reductions(&cfg).unwrap();
    for ((_, base), report) in remark_cases().iter().zip(&remarks) {
        identical += usize::from(report.numerics_identical(&base.verify(&cfg).unwrap()));
        bad += usize::from(report.status != Status::Verified);
        total += 1;
    }
    Outcome::check(
        identical == total && bad == 0,
        format!("special cases and reductions: {total} reports, {identical} bit-identical to the parent verifier, {bad} not verified"),
    )
}

fn criterion_10() -> Outcome {
    let entries = match fixtures::load(&fixtures::default_path()) {
        Ok(e) => e,
        Err(e) => return Outcome::check(false, format!("fixture self-test: {e}")),
    };
    let mut worst: f64 = 0.0;
    let mut failed = 0;
    let mut undetected = 0;
    for f in &entries {
        let c = fixtures::check(f).unwrap();
        worst = worst.max(c.rel_deviation);
        failed += usize::from(!c.passed());
        let perturbed = fixtures::Fixture {
            value: f.value * (1.0 + 1e-6),
            ..f.clone()
        };
        undetected += usize::from(fixtures::check(&perturbed).unwrap().passed());
    }
    Outcome::check(
        failed == 0 && undetected == 0,
        format!(
            "fixture self-test: {} fixtures, max rel deviation {worst:.2e} (tol 1e-8), {failed} failed; \
             1e-6 perturbations undetected: {undetected}",
            entries.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut unexpected = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && DOCUMENTED.contains(&id) && o.as_documented {
            " [documented finding]"
        } else {
            ""
        };
        println!("criterion {id:>2}: {verdict}{note} {} ({secs:.2}s)", o.detail);
        if !o.pass && !(DOCUMENTED.contains(&id) && o.as_documented) {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("acceptance: {unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
