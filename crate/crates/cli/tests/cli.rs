use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn wronski(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wronski"))
        .args(args)
        .env_remove("WRONSKI_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_hermite_pass() {
    let out = wronski(&["verify", "--family", "hermite", "--partition", "1,3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["exact_count"], 2);
    assert_eq!(r["predicted"]["total_distinct"], 2);
    assert_eq!(r["status"], "pass");
    assert_eq!(
        r["wronskian"],
        serde_json::json!(["-24", "0", "-96", "0", "96"])
    );
}

#[test]
fn verify_laguerre_adler_pair() {
    let out = wronski(&[
        "verify",
        "--family",
        "laguerre",
        "--alpha",
        "1/2",
        "--partition",
        "2,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["exact_count"], 0);
}

#[test]
fn verify_degenerate_exits_two() {
    let args = [
        "verify",
        "--family",
        "jacobi",
        "--alpha",
        "1/2",
        "--beta",
        "1/2",
        "--partition",
        "2,4",
    ];
    let out = wronski(&args);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["degenerate"], true);
    assert_eq!(
        r["witnesses"][0]["common_factor"],
        serde_json::json!(["-1/4", "0", "1"])
    );
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        vec!["verify", "--family", "hermite", "--partition", "3,1"],
        vec!["verify", "--family", "laguerre", "--partition", "1"],
        vec![
            "verify",
            "--family",
            "laguerre",
            "--alpha",
            "-1",
            "--partition",
            "1",
        ],
        vec!["sweep", "--family", "hermite", "--max-weight", "0"],
        vec!["frobnicate"],
        vec!["verify", "--partition", "1"],
    ] {
        let out = wronski(&args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(wronski(&["--help"]).status.code(), Some(0));
    assert_eq!(wronski(&["--version"]).status.code(), Some(0));
}

#[test]
fn sweep_csv_and_json_agree_and_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("h.csv");
    let base = [
        "sweep",
        "--family",
        "hermite",
        "--max-weight",
        "4",
        "--max-length",
        "2",
    ];
    let mut args = base.to_vec();
    let csv_str = csv_path.to_str().unwrap();
    args.extend(["--format", "csv", "--output", csv_str, "--jobs", "3"]);
    let out = wronski(&args);
    assert_eq!(out.status.code(), Some(0));
    let csv = fs::read_to_string(&csv_path).unwrap();
    assert!(csv
        .starts_with("family,partition,k,d_lambda,predicted,exact,origin_mult,degenerate,pass\n"));
    assert!(csv.contains("hermite,\"1,2\",\"1,3\",2,1,1,3,false,true"));
    assert!(String::from_utf8_lossy(&out.stderr)
        .contains("total 14 / passed 14 / degenerate-skipped 0 / failed 0"));

    let one = wronski(&[&base[..], &["--jobs", "1"]].concat());
    let four = wronski(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(json(&one)["summary"]["passed"], 14);
}

#[test]
fn sweep_reads_config_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.json");
    fs::write(
        &cfg,
        r#"{"family": "laguerre", "alpha": "1/3", "max_weight": 4, "format": "csv", "jobs": 2}"#,
    )
    .unwrap();
    let out = wronski(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.starts_with("laguerre(alpha=1/3)") && l.ends_with(",true")));
    let out = wronski(&[
        "sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--format",
        "json",
        "--max-weight",
        "2",
    ]);
    assert_eq!(json(&out)["summary"]["total"], 7);

    fs::write(&cfg, r#"{"family": "hermite", "colour": "blue"}"#).unwrap();
    assert_eq!(
        wronski(&["sweep", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(64)
    );
}

#[test]
fn felder_duality_karlin() {
    let out = wronski(&["felder", "--mu", "1,3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(
        (r["real"].as_u64(), r["imaginary"].as_u64()),
        (Some(0), Some(4))
    );

    let r = json(&wronski(&["duality", "--partition", "1,3"]));
    assert_eq!(
        (r["holds"].as_bool(), r["constant"].as_str()),
        (Some(true), Some("8"))
    );

    let out = wronski(&["karlin", "--family", "hermite", "--n", "2", "--ell", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["count"], 2);
    assert_eq!(r["interlaces_with_next"], true);
}

#[test]
fn moments_command() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("legendre.json");
    let moments: Vec<String> = (1..=16).map(|k| format!("1/{k}")).collect();
    fs::write(&good, serde_json::to_string(&moments).unwrap()).unwrap();
    let good = good.to_str().unwrap();
    let out = wronski(&[
        "moments",
        "--moments",
        good,
        "--support",
        "0,1",
        "--partition",
        "1,3",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = json(&out);
    assert_eq!(r["label"], "conjecture probe");
    assert_eq!(r["exact_count"], 2);

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"["1", "2", "1", "2"]"#).unwrap();
    let out = wronski(&[
        "moments",
        "--moments",
        bad.to_str().unwrap(),
        "--support",
        "0,1",
        "--partition",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("order"));

    let out = wronski(&["moments", "--moments", good, "--partition", "1"]);
    assert_eq!(out.status.code(), Some(64));
}
