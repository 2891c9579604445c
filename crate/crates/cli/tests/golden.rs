//! Replays the committed query list and compares output byte for byte.
//! Set HOCALC_BLESS=1 to rewrite the expected files.

use std::path::PathBuf;
use std::process::Command;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hocalc")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap(), out.status.code().unwrap_or(-1))
}

fn compare(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("HOCALC_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "output differs from {name}");
}

#[test]
fn batch_text_matches_golden() {
    let queries = golden_dir().join("queries.txt");
    let (stdout, stderr, code) = run(&["--batch", queries.to_str().unwrap()]);
    assert_eq!(code, 0, "{stderr}");
    compare("expected.txt", &stdout);
}

#[test]
fn batch_json_matches_golden() {
    let queries = golden_dir().join("queries.txt");
    let (stdout, _, code) = run(&["--format", "json", "--batch", queries.to_str().unwrap()]);
    assert_eq!(code, 0);
    compare("expected.json", &stdout);
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "pi", "--space", "Sigma K(Z/2 + Z/4,1)", "--n", "5"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn single_query_matches_batch_line() {
    let (stdout, _, code) = run(&["pi", "--space", "Sigma K(Z/12,1)", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "pi_4(Sigma K(Z/12,1)) = Z/2 + Z/12\nrules: pi4_closed_form\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["pi", "--space", "Sigma K(Z/2,1)", "--n", "6"]).2, 2);
    assert_eq!(run(&["pi", "--space", "Sigma^2 K(Z/3,1)", "--n", "5"]).2, 2);
    assert_eq!(run(&["functor", "--name", "gamma2", "--group", "Z/1"]).2, 2);
    assert_eq!(run(&["functor", "--name", "nope", "--group", "Z"]).2, 2);
    assert_eq!(run(&[]).2, 2);
    let (_, stderr, code) = run(&["pi", "--space", "Sigma K(Z/2,1)", "--n", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("2..=5"), "{stderr}");
    let (stdout, _, code) = run(&["verify", "--group", "Z/2"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("0 failed\n"));
}

#[test]
fn batch_reports_bad_lines_and_exits_2() {
    let dir = std::env::temp_dir().join(format!("hocalc-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("q.txt");
    std::fs::write(&file, "pi --space S^2 --n 3\npi --space CP^2 --n 3\nfunctor --name lambda2 --group Z^3\n").unwrap();
    let (stdout, stderr, code) = run(&["--batch", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(stdout, "pi_3(S^2) = Z\nrules: sphere_table\nlambda2(Z^3) = Z^3\n");
    assert!(stderr.contains("CP^2"));
    std::fs::remove_dir_all(&dir).unwrap();
}
