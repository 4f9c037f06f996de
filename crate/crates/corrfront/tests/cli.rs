//! End-to-end tests of the `corrfront` binary: flag handling, config-file
//! precedence, CSV determinism across thread counts, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_corrfront"))
}

fn run_with(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = bin();
    cmd.args(args);
    if let Some(n) = threads {
        cmd.env("RAYON_NUM_THREADS", n);
    }
    cmd.output().expect("binary runs")
}

fn tmpdir() -> PathBuf {
    let dir = std::env::temp_dir().join("corrfront_cli_tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn help_lists_the_subcommands() {
    let out = run_with(&["--help"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["front", "moments", "rmt", "initstate", "verify"] {
        assert!(text.contains(name), "--help is missing {name}");
    }
}

#[test]
fn invalid_configuration_exits_one_with_all_errors() {
    let out = run_with(
        &["moments", "--pattern", "10x", "--nodes", "3", "--t", "0.5"],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("pattern"), "missing pattern error: {text}");
    assert!(text.contains("nodes"), "missing nodes error: {text}");
    assert!(text.contains("t >= 2"), "missing time error: {text}");
}

#[test]
fn unknown_subcommand_exits_one() {
    let out = run_with(&["fly"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn io_failure_exits_three() {
    let out = run_with(
        &[
            "moments",
            "--t",
            "10",
            "--s",
            "0:1:1",
            "--out",
            "/nonexistent_dir_corrfront/x.csv",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn numerical_instability_exits_two() {
    // Eight Nystrom nodes cannot resolve the determinant window at s = -12;
    // the built-in node-doubling self-check rejects the value.
    let out = run_with(&["rmt", "--nodes", "8", "--s", "-12:-12:1"], None);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("node doubling"), "stderr: {text}");
}

#[test]
fn moments_csv_is_byte_identical_across_thread_counts() {
    let dir = tmpdir();
    let p1 = dir.join("m_threads1.csv");
    let p4 = dir.join("m_threads4.csv");
    let args = |p: &PathBuf| {
        vec![
            "moments".to_string(),
            "--t".into(),
            "10,30".into(),
            "--s".into(),
            "-3:3:0.5".into(),
            "--out".into(),
            p.to_str().unwrap().to_string(),
        ]
    };
    let a1 = args(&p1);
    let out = run_with(&a1.iter().map(|s| s.as_str()).collect::<Vec<_>>(), Some("1"));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let a4 = args(&p4);
    let out = run_with(&a4.iter().map(|s| s.as_str()).collect::<Vec<_>>(), Some("4"));
    assert!(out.status.success());
    let b1 = std::fs::read(&p1).unwrap();
    let b4 = std::fs::read(&p4).unwrap();
    assert_eq!(b1, b4, "CSV output depends on the thread count");

    let text = String::from_utf8(b1).unwrap();
    let mut lines = text.lines();
    let comment = lines.next().unwrap();
    assert!(comment.starts_with("# corrfront "));
    assert!(comment.contains("command=moments"));
    assert_eq!(
        lines.next().unwrap(),
        "t,s,l,s_edge,m1,m2,predicted_m1,predicted_m2"
    );
    // 17 significant digits: mantissa dot + 16 digits before the exponent.
    let data = lines.next().unwrap();
    let field = data.split(',').nth(4).unwrap();
    let mantissa = field.split('e').next().unwrap();
    let digits = mantissa.chars().filter(|c| c.is_ascii_digit()).count();
    assert_eq!(digits, 17, "expected 17 significant digits, got {field}");
}

#[test]
fn config_file_defaults_and_flag_precedence() {
    let dir = tmpdir();
    let cfg = dir.join("sweep.cfg");
    std::fs::write(
        &cfg,
        "# sweep configuration\ncommand = rmt\ns = -2:2:1\nlambda = 0.5\nnodes = 32\n",
    )
    .unwrap();
    let out_path = dir.join("rmt.csv");
    let out = run_with(
        &[
            "--config",
            cfg.to_str().unwrap(),
            "--lambda",
            "0.25,1.0",
            "--out",
            out_path.to_str().unwrap(),
            "--verbose",
        ],
        None,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_path).unwrap();
    let header = text.lines().nth(1).unwrap();
    // flag overrode the file's lambda list
    assert_eq!(header, "s,tw1_cdf,g_gse_0.25,g_goe_0.25,g_gse_1,g_goe_1");
    assert_eq!(text.lines().count(), 2 + 5);
    let note = String::from_utf8(out.stderr).unwrap();
    assert!(note.contains("flag overrides file"), "stderr: {note}");
}

#[test]
fn front_and_initstate_produce_tables() {
    let dir = tmpdir();
    let front = dir.join("front.csv");
    let out = run_with(
        &["front", "--t", "3", "--out", front.to_str().unwrap()],
        None,
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(&front).unwrap();
    assert_eq!(text.lines().nth(1).unwrap(), "t,m,n,abs_c");
    assert!(text.lines().count() > 100);

    let init = dir.join("init.csv");
    let out = run_with(
        &[
            "initstate",
            "--pattern",
            "1100",
            "--t",
            "10",
            "--s",
            "-2:2:1",
            "--out",
            init.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(&init).unwrap();
    assert_eq!(
        text.lines().nth(1).unwrap(),
        "t,s,l,m1,m2,m1_rescaled,m2_rescaled,alt_m1,alt_m2"
    );
    // zero-coefficient pattern: rescaled columns are NaN
    assert!(text.contains("NaN"));
}

#[test]
fn verify_passes_on_a_fresh_build() {
    let out = run_with(&["verify"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        out.status.success(),
        "verify failed:\n{text}\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 20);
    assert!(!text.contains("FAIL"));
}
