use std::path::Path;
use std::process::{Command, Output};

use repx_core::words::{write_word_file, Alphabet, SymbolWord};

fn repx(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repx"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn digits_subcommand_prints_certified_prefix() {
    let dir = tempfile::tempdir().unwrap();
    let out = repx(
        &[
            "digits",
            "--const",
            "kmosek_shallit",
            "--base",
            "2",
            "--count",
            "16",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "DIGITS v1");
    assert_eq!(lines[1], "id=kmosek_shallit base=2 count=16");
    assert!(lines[2].starts_with("cert=lacunary-tail prec="));
    assert_eq!(lines[3], "0101000100000001");
}

#[test]
fn digits_subcommand_populates_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "digits",
        "--const",
        "e",
        "--base",
        "10",
        "--count",
        "12",
        "--cache-dir",
        "cache",
    ];
    let first = repx(&args, dir.path());
    assert!(first.status.success());
    assert!(stdout(&first).contains("7182818284"));
    assert!(dir.path().join("cache/e-b10.digits").exists());
    let second = repx(&args, dir.path());
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn cf_subcommand_lists_partial_quotients() {
    let dir = tempfile::tempdir().unwrap();
    let out = repx(
        &[
            "cf", "--const", "e", "--base", "10", "--digits", "80", "--terms", "6",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,a_k,q_k,step_ratio");
    assert!(lines[1].starts_with("0,2,1,"));
    assert!(lines[2].starts_with("1,1,1,"));
    assert!(lines[3].starts_with("2,2,3,"));
    assert!(lines[4].starts_with("3,1,4,"));
    assert!(lines[5].starts_with("4,1,7,"));
    assert!(lines[6].starts_with("5,4,32,"));
}

#[test]
fn profile_subcommand_reads_word_files() {
    let dir = tempfile::tempdir().unwrap();
    let word =
        SymbolWord::from_symbols(Alphabet::binary(), vec![0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0])
            .unwrap();
    let path = dir.path().join("fib.word");
    write_word_file(&path, &word).unwrap();
    let out = repx(
        &["profile", "--word-file", "fib.word", "--nmax", "4"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,p,r,p_over_n,r_over_n");
    assert_eq!(lines[1], "1,2,3,2.000000,3.000000");
    assert_eq!(lines[2], "2,3,5,1.500000,2.500000");
}

#[test]
fn profile_subcommand_profiles_constants() {
    let dir = tempfile::tempdir().unwrap();
    let out = repx(
        &[
            "profile",
            "--const",
            "fibonacci",
            "--base",
            "2",
            "--digits",
            "64",
            "--nmax",
            "8",
            "--out",
            "profile.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("profile.csv")).unwrap();
    assert!(text.starts_with("n,p,r,p_over_n,r_over_n\n1,2,3,"));
}

#[test]
fn verify_single_case_exits_zero_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = repx(
        &[
            "verify",
            "--const",
            "kmosek_shallit",
            "--base",
            "2",
            "--digits",
            "512",
            "--nmax",
            "64",
            "--window",
            "8:64",
            "--mu-hint",
            "2",
            "--out-dir",
            "reports",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("ok"));
    let entries: Vec<_> = std::fs::read_dir(dir.path().join("reports"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert!(entries
        .iter()
        .any(|p| p.extension().is_some_and(|e| e == "json")));
    assert!(entries
        .iter()
        .any(|p| p.extension().is_some_and(|e| e == "csv")));
}

#[test]
fn verify_config_file_drives_a_batch() {
    let dir = tempfile::tempdir().unwrap();
    let config = r#"{
  "precision_cap_bits": 65536,
  "output_dir": "reports",
  "cases": [
    {"const": "kmosek_shallit", "base": 2, "digits": 512, "n_max": 64, "window": [8, 64], "mu_hint": "2"},
    {"const": "fibonacci", "base": 2, "digits": 512, "n_max": 64, "window": [8, 64]}
  ]
}"#;
    std::fs::write(dir.path().join("config.json"), config).unwrap();
    let out = repx(&["verify", "--config", "config.json"], dir.path());
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|line| line.contains(": ok ->")));
}

#[test]
fn invalid_spec_fails_with_nonzero_exit() {
    let dir = tempfile::tempdir().unwrap();
    let out = repx(
        &[
            "digits",
            "--const",
            "nonsense(1)",
            "--base",
            "10",
            "--count",
            "4",
        ],
        dir.path(),
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
