//! Acceptance suite: every exit criterion with its pinned tolerance, one
//! pass/fail line per criterion (run with `-- --nocapture` to see them).

use std::time::Instant;

use su11::exact::{rat, rat_c_kn, rint, Rat};
use su11::fock::FockSpace;
use su11::grp::{cartan_compose, CartanAngles, GroupElement};
use su11::verify::{run_suite, Suite, SuiteConfig, VerificationReport};
use su11::weyl;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

fn report_line(n: u32, name: &str, passed: bool, detail: &str) {
    println!(
        "ACCEPTANCE {n} ({name}): {} — {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {n} ({name}) failed: {detail}");
}

fn worst(reports: &[VerificationReport]) -> f64 {
    reports.iter().map(|r| r.residual).fold(0.0, f64::max)
}

#[test]
fn criterion_1_weyl_oracle_equivalence() {
    let t0 = Instant::now();
    let dim = 21; // m, n ≤ 20
    let space = FockSpace::new(dim).unwrap();
    let mut max_diff = 0.0f64;
    let mut max_parity = 0.0f64;
    for alpha in [0.3, 1.0, 2.0] {
        let closed = weyl::u_squeeze_closed(alpha, space);
        let quad = weyl::u_squeeze_quadrature(alpha, space).unwrap();
        max_diff = max_diff.max(weyl::interior_max_diff(closed.matrix(), quad.matrix(), dim));
        for m in 0..dim {
            for n in 0..dim {
                if (m + n) % 2 == 1 {
                    max_parity = max_parity.max(closed.entry(m, n).norm());
                }
            }
        }
    }
    let elapsed = t0.elapsed();
    report_line(
        1,
        "weyl oracle equivalence",
        max_diff <= 1e-10 && max_parity == 0.0 && elapsed.as_secs_f64() < 5.0,
        &format!(
            "closed vs quadrature {max_diff:.3e} (tol 1e-10), parity zeros exact: {}, {elapsed:.2?} (< 5 s)",
            max_parity == 0.0
        ),
    );
}

#[test]
fn criterion_2_unitarity_and_group_law() {
    let t0 = Instant::now();
    let interior = 32;
    let mut max_unitarity = 0.0f64;
    for alpha in [0.5, 1.0, 1.5, 2.0] {
        let build = weyl::required_dim(interior, alpha, 1e-10);
        let r = weyl::unitarity_residual_padded(&GroupElement::squeeze(alpha), interior, build);
        max_unitarity = max_unitarity.max(r);
    }
    let mut rng = StdRng::seed_from_u64(2024);
    let build = weyl::required_dim(interior, 2.0, 1e-10);
    let mut max_hom = 0.0f64;
    let mut signs = [0usize; 2];
    for _ in 0..100 {
        let sample = |rng: &mut StdRng| {
            cartan_compose(&CartanAngles::new(
                rng.random_range(0.0..4.0 * std::f64::consts::PI),
                rng.random_range(0.0..1.0),
                rng.random_range(0.0..4.0 * std::f64::consts::PI),
            ))
        };
        let g1 = sample(&mut rng);
        let g2 = sample(&mut rng);
        let rep = weyl::homomorphism_residual(&g1, &g2, interior, build);
        max_hom = max_hom.max(rep.residual);
        signs[if rep.sign > 0.0 { 0 } else { 1 }] += 1;
    }
    let elapsed = t0.elapsed();
    report_line(
        2,
        "unitarity and group law",
        max_unitarity <= 1e-9 && max_hom <= 1e-8 && elapsed.as_secs_f64() < 30.0,
        &format!(
            "‖U†U−I‖ {max_unitarity:.3e} (tol 1e-9), ‖U(g₁)U(g₂)∓U(g₁g₂)‖ {max_hom:.3e} over 100 pairs (tol 1e-8), signs +:{} −:{}, {elapsed:.2?} (< 30 s)",
            signs[0], signs[1]
        ),
    );
}

#[test]
fn criterion_3_lie_algebra_and_ladders() {
    let t0 = Instant::now();
    let cfg = SuiteConfig {
        dim: 32,
        ..Default::default()
    };
    let reports = run_suite(Suite::Algebra, &cfg).unwrap();
    let elapsed = t0.elapsed();
    let all = reports.iter().all(|r| r.passed);
    report_line(
        3,
        "Lie algebra and ladder relations",
        all && elapsed.as_secs_f64() < 20.0,
        &format!(
            "{} checks (commutator identities, ladder actions with edge limits, kinds i/ii/iii, each ε, |k| ≤ 6, N=32), max residual {:.3e} (tol 1e-9), {elapsed:.2?} (< 20 s)",
            reports.len(),
            worst(&reports)
        ),
    );
}

#[test]
fn criterion_4_coefficient_recurrences_exact() {
    // both recurrences in exact rational arithmetic over the full grid;
    // isolated genuine poles of the coefficients are skipped and counted
    let taus = [rint(-1), rat(-1, 2), rint(0), rat(1, 2), rint(1), rint(2)];
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut exact = true;
    for tau in &taus {
        for two_eps in [0i64, 1] {
            let eps = rat(two_eps, 2);
            for k in -4..=4i64 {
                for n in 0..=10i64 {
                    if n >= 1 && 2 * k + two_eps + n - 1 != 0 {
                        match (
                            rat_c_kn(tau, two_eps, k, n - 1),
                            rat_c_kn(tau, two_eps, k - 1, n),
                            rat_c_kn(tau, two_eps, k, n),
                        ) {
                            (Some(cm), Some(cl), Some(ckn)) => {
                                let r: Rat = rint(n) * cm
                                    + (rint(k) + &eps + tau) / rint(2 * k + two_eps + n - 1) * cl
                                    - rint(2 * k + two_eps + n) * ckn;
                                exact &= r.is_zero();
                                checked += 1;
                            }
                            _ => skipped += 1,
                        }
                    }
                    match (
                        rat_c_kn(tau, two_eps, k, n + 1),
                        rat_c_kn(tau, two_eps, k, n + 2),
                        rat_c_kn(tau, two_eps, k + 1, n),
                    ) {
                        (Some(c1), Some(c2), Some(cp)) => {
                            let r: Rat = c1 - c2 - (rint(k) + &eps - tau) * cp;
                            exact &= r.is_zero();
                            checked += 1;
                        }
                        _ => skipped += 1,
                    }
                }
            }
        }
    }
    report_line(
        4,
        "coefficient recurrences exact",
        exact && checked > 1500,
        &format!(
            "{checked} recurrence instances hold exactly in rational arithmetic (τ ∈ {{−1,−½,0,½,1,2}}, k ∈ [−4,4], n ≤ 10); {skipped} skipped at genuine coefficient poles"
        ),
    );
}

#[test]
fn criterion_5_addition_theorems_and_sandwiches() {
    let t0 = Instant::now();
    let cfg = SuiteConfig {
        dim: 32,
        count: 20,
        ..Default::default()
    };
    let addition = run_suite(Suite::Addition, &cfg).unwrap();
    let sandwich = run_suite(Suite::Sandwich, &cfg).unwrap();
    let elapsed = t0.elapsed();
    let finite_ok = addition
        .iter()
        .filter(|r| r.parameters["kind"] == "finite")
        .all(|r| r.passed && r.residual <= 1e-9);
    let infinite = addition.iter().filter(|r| r.parameters["kind"] != "finite");
    let infinite_ok = infinite
        .clone()
        .all(|r| r.passed && r.residual <= 1e-8 && r.tail_estimate <= 1e-12);
    let sandwich_ok = sandwich.iter().all(|r| r.passed);
    report_line(
        5,
        "addition theorems",
        finite_ok && infinite_ok && sandwich_ok && elapsed.as_secs_f64() < 60.0,
        &format!(
            "{} addition checks (finite ≤ 1e-9 over 20 g, adaptive ≤ 1e-8 with tails ≤ 1e-12), {} sandwich checks co-pass at 10 (l,s) per configuration, max residuals {:.3e}/{:.3e}, {elapsed:.2?} (< 60 s)",
            addition.len(),
            sandwich.len(),
            worst(&addition),
            worst(&sandwich)
        ),
    );
}

#[test]
fn criterion_6_generating_function_and_orthogonality() {
    let cfg = SuiteConfig::default();
    let genfun = run_suite(Suite::Genfun, &cfg).unwrap();
    let ortho = run_suite(Suite::Ortho, &cfg).unwrap();
    let n_samples = genfun.len();
    let genfun_ok = genfun.iter().all(|r| r.passed && r.residual <= 1e-9);
    let structural: Vec<_> = ortho
        .iter()
        .filter(|r| r.identity_id == "orthogonality_structural")
        .collect();
    let structural_ok = !structural.is_empty() && structural.iter().all(|r| r.residual == 0.0);
    let regulated_ok = ortho
        .iter()
        .filter(|r| r.identity_id == "orthogonality_regulated")
        .all(|r| r.passed);
    report_line(
        6,
        "generating function and orthogonality",
        n_samples >= 50 && genfun_ok && structural_ok && regulated_ok,
        &format!(
            "{n_samples} sampled (a,b,λ,s) incl. principal-series substitution and exact-rational points, all ≤ 1e-9 (max {:.3e}); structural orthogonality exactly 0 on {} disjoint-shift pairs; regulated sums match closed forms",
            worst(&genfun),
            structural.len()
        ),
    );
}

#[test]
fn criterion_7_closing_identities() {
    let cfg = SuiteConfig::default();
    let legendre = run_suite(Suite::Legendre, &cfg).unwrap();
    let unity = run_suite(Suite::Unity, &cfg).unwrap();
    let leg_ok = legendre.iter().all(|r| r.passed && r.residual <= 1e-10);
    let unity_ok = unity.iter().all(|r| r.passed);
    // the committed derivation artifact must match what the generator
    // produces right now
    let artifact = include_str!("../../../docs/unity-sign-derivation.md");
    let mut regenerated = String::new();
    for tau in 0..=3u32 {
        let good = su11::verify::unity_identity_exact_residual(tau, true);
        let bad = su11::verify::unity_identity_exact_residual(tau, false);
        regenerated.push_str(&format!(
            "tau = {tau}: alternating residual = {}; unsigned residual = {}\n",
            good.render("x"),
            bad.render("x")
        ));
        assert!(good.is_zero());
    }
    let artifact_ok = artifact.contains(regenerated.as_str());
    report_line(
        7,
        "closing identities",
        leg_ok && unity_ok && artifact_ok,
        &format!(
            "Legendre expansion ≤ 1e-10 over τ ∈ 0..=3 × α ∈ {{0.25,0.5,1,2}} (max {:.3e}); unity identity exact under the derived alternating sign, symbolic-expansion artifact committed and current",
            worst(&legendre)
        ),
    );
}

#[test]
fn criterion_8_determinism() {
    let cfg = SuiteConfig::default();
    let render = |reports: &[VerificationReport]| {
        reports
            .iter()
            .map(|r| r.to_json_line())
            .collect::<Vec<_>>()
            .join("\n")
    };
    let first = render(&run_suite(Suite::All, &cfg).unwrap());
    let second = render(&run_suite(Suite::All, &cfg).unwrap());
    report_line(
        8,
        "determinism",
        first == second && !first.is_empty(),
        &format!(
            "two full-suite runs with identical config produce byte-identical report streams ({} bytes, {} reports)",
            first.len(),
            first.lines().count()
        ),
    );
}
