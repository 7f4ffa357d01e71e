//! Run every verification suite at the default configuration and print the
//! per-identity summary (the library-level equivalent of `su11 verify all`).
//!
//!     cargo run --release --example verify_all

use std::collections::BTreeMap;

use su11::verify::{run_suite, Suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig::default();
    let t0 = std::time::Instant::now();
    let reports = run_suite(Suite::All, &cfg).unwrap();
    let mut agg: BTreeMap<String, (usize, usize, f64)> = BTreeMap::new();
    for r in &reports {
        let e = agg.entry(r.identity_id.clone()).or_insert((0, 0, 0.0));
        if r.passed {
            e.0 += 1
        } else {
            e.1 += 1
        }
        if r.residual.is_finite() {
            e.2 = e.2.max(r.residual);
        }
    }
    for (id, (pass, fail, max)) in &agg {
        println!(
            "{} {id}: {pass} passed, {fail} failed, max residual {max:.3e}",
            if *fail == 0 { "PASS" } else { "FAIL" }
        );
    }
    let failed: usize = agg.values().map(|v| v.1).sum();
    println!(
        "\n{} checks in {:.2?}, {failed} failed",
        reports.len(),
        t0.elapsed()
    );
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
