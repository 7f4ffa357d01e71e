//! End-to-end checks of the `su11` binary: exit-code contract, output
//! formats, and byte-level determinism.

use std::process::Command;

fn su11(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_su11"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn verify_exit_zero_on_all_pass() {
    let out = su11(&["verify", "unity", "--format", "text"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS unity_identity"));
}

#[test]
fn verify_exit_one_on_failed_checks() {
    // an absurd tolerance forces failures but not configuration errors
    let out = su11(&["verify", "legendre", "--tol", "1e-30", "--format", "text"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_two_on_config_errors() {
    assert_eq!(su11(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(
        su11(&["verify", "legendre", "--tol", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        su11(&["verify", "legendre", "--dim", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        su11(&["verify", "legendre", "--g", "fixed"]).status.code(),
        Some(2)
    );
    assert_eq!(
        su11(&["table", "f", "--tau", "abc", "--eps", "0", "--k", "0"])
            .status
            .code(),
        Some(2)
    );
    // clap usage errors also exit 2
    assert_eq!(su11(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_reports_are_byte_identical_across_runs() {
    let args = [
        "verify", "genfun", "--seed", "7", "--count", "5", "--format", "json",
    ];
    let first = su11(&args);
    let second = su11(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(
        first.stdout, second.stdout,
        "identical config must give identical bytes"
    );
    // and each line is a parseable report object
    for line in String::from_utf8(first.stdout).unwrap().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["identity_id"].is_string());
        assert!(v["residual"].is_number());
        assert!(v["passed"].is_boolean());
    }
}

#[test]
fn legendre_grid_example() {
    // 4 τ values × 3 α values = 12 reports, all passing
    let out = su11(&[
        "verify",
        "legendre",
        "--tau",
        "0..3",
        "--alpha",
        "0.25,0.5,1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 12);
}

#[test]
fn addition_grid_flags() {
    let out = su11(&[
        "verify", "addition", "--tau", "1", "--g", "random", "--count", "3", "--seed", "7",
        "--dim", "16", "--format", "json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    // τ = 1 window has 3 k values × 3 samples
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 9);
}

#[test]
fn table_u_csv_and_json() {
    let out = su11(&["table", "u", "--alpha", "1", "--dim", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# N = 16"));
    assert!(text.contains("# source = cartan_product"));
    assert!(text.contains("# unitarity_residual = "));
    // 4 header lines + 16 rows of 16 complex cells
    let data_rows: Vec<_> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data_rows.len(), 16);
    assert_eq!(data_rows[0].split(',').count(), 16);

    let out = su11(&[
        "table", "u", "--alpha", "1", "--dim", "8", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
}

#[test]
fn table_t_block_shape() {
    // 7×7 window per the flag syntax LO:HI
    let out = su11(&[
        "table", "t", "--tau", "-0.5+1i", "--eps", "0", "--krange", "-3:3", "--alpha", "0.5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# tau = -0.5+1i"));
    let data: Vec<_> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data.len(), 1 + 49, "header row plus 7x7 long-form rows");
    assert_eq!(data[0], "k,n,re,im");
}

#[test]
fn table_f_rows() {
    // 9-row table for zeta-max 8
    let out = su11(&[
        "table",
        "f",
        "--tau",
        "1",
        "--eps",
        "0",
        "--k",
        "1",
        "--zeta-max",
        "8",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let data: Vec<_> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data.len(), 1 + 9);
}

#[test]
fn table_d_requires_valid_k() {
    let out = su11(&[
        "table", "d", "--tau", "-1", "--eps", "0", "--k", "0", "--dim", "16",
    ]);
    assert_eq!(out.status.code(), Some(2), "gap index must be refused");
    let out = su11(&[
        "table", "d", "--tau", "-1", "--eps", "0", "--k", "1", "--dim", "16",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_file_and_env_overrides() {
    let dir = std::env::temp_dir().join(format!("su11-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reports.jsonl");
    let out = su11(&[
        "verify",
        "unity",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.lines().count() > 0);

    // environment fallback for the format flag
    let out = Command::new(env!("CARGO_BIN_EXE_su11"))
        .args(["verify", "unity"])
        .env("SU11_FORMAT", "csv")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("identity,pass,fail,max_residual"));
    std::fs::remove_dir_all(&dir).ok();
}
