use std::path::PathBuf;
use std::process::{Command, Output};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

fn kmbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmbraid"))
        .args(args)
        .env("KMBRAID_GOLDEN_DIR", golden_dir())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kmbraid-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn braided_cobracket_of_t2_e1() {
    let o = kmbraid(&["braided", "affine:A2", "t^2*E1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(t*E1)/\\(t*H1) - (t*E12)/\\(t*F2)\n");
    let o = kmbraid(&["--unicode", "braided", "affine:A2", "t^2*E1"]);
    assert_eq!(stdout(&o), "(t*E1)∧(t*H1) − (t*E12)∧(t*F2)\n");
}

#[test]
fn braided_degree_one_is_zero() {
    let o = kmbraid(&["braided", "affine:A2", "t*F21"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn braided_rejects_degree_zero() {
    let o = kmbraid(&["braided", "affine:A2", "H1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not in the carrier"));
    let o = kmbraid(&["braided", "A2", "F2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kmbraid(&["braided", "A2", "F21", "--delete", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn cobracket_examples() {
    let o = kmbraid(&["cobracket", "affine:A2", "t*E1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "(E1)/\\(t*H1) - (E12)/\\(t*F2) - 1/2*(H1)/\\(t*E1) + 1/2*(t*E1)/\\(c)\n"
    );
    let o = kmbraid(&["cobracket", "A1", "E1"]);
    assert_eq!(stdout(&o), "1/2*(E1)/\\(H1)\n");
    let o = kmbraid(&["cobracket", "affine:A2", "E1 - E1"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["cobracket", "A2", "E1 +"][..],
        &["cobracket", "A2", "X9"],
        &["cobracket", "A2", "t*E1"],
        &["cobracket", "E9", "E1"],
        &["verify", "bialgebra", "affine:A2"],
        &["verify", "bialgebra", "affine:A2", "--window", "3..-3"],
        &["verify", "nonsense", "A2"],
        &["dbos", "A2"],
        &["table", "affine:A2", "--max-degree", "0"],
        &["table", "affine:A2", "--format", "yaml"],
    ] {
        let o = kmbraid(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
    let o = kmbraid(&["cobracket", "A2", "E1 + X9"]);
    assert!(stderr(&o).contains("X9"));
}

#[test]
fn cartan_and_affinize() {
    let o = kmbraid(&["cartan", "B2"]);
    assert_eq!(stdout(&o), "[  2  -2]\n[ -1   2]\nsymmetrizer: 2 1\n");
    let o = kmbraid(&["affinize", "A2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["entries"],
        serde_json::json!([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    );
}

#[test]
fn algebra_build() {
    let o = kmbraid(&["algebra", "build", "A2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["basis"],
        serde_json::json!(["E1", "E2", "E12", "H1", "H2", "F1", "F2", "F21"])
    );
    let o = kmbraid(&["algebra", "build", "affine:A2", "--format", "text"]);
    let text = stdout(&o);
    assert!(text.starts_with("dim H = 4\n"));
    assert!(text.contains("h0 = -H1 - H2 + c\n"));
    let o = kmbraid(&["algebra", "build", "A2", "--format", "latex"]);
    assert!(stdout(&o).starts_with("\\begin{tabular}"));
}

#[test]
fn verify_suites() {
    for args in [
        &["verify", "bialgebra", "affine:A2", "--window", "-3..3"][..],
        &["verify", "bialgebra", "A2"],
        &["verify", "quasitriangular", "A2"],
        &["verify", "braided", "affine:A1", "--window", "1..3"],
        &["verify", "braided", "A3", "--delete", "2"],
        &["verify", "bosonisation", "affine:A2", "--window", "-2..0"],
    ] {
        let o = kmbraid(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }
}

#[test]
fn dbos_commands() {
    let o = kmbraid(&["dbos", "A2", "--delete", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("dbos_bracket: 88 checks, 0 failures"));
    assert!(stdout(&o).contains("quasitriangular"));
    let o = kmbraid(&["dbos", "affine:A1", "--affinization", "--window", "-1..1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn golden_files_match() {
    for file in ["a2_delta.json", "a2_braided_delta.json"] {
        let o = kmbraid(&["golden", "compare", file]);
        assert_eq!(o.status.code(), Some(0), "{file}: {}", stderr(&o));
        assert!(stdout(&o).contains("32 checks, 0 failures"));
    }
}

#[test]
fn emitted_table_round_trips() {
    let dir = scratch("table");
    for (map, name) in [("cobracket", "delta.json"), ("braided", "a2_braided.json")] {
        let o = kmbraid(&[
            "table",
            "affine:A2",
            "--max-degree",
            "4",
            "--format",
            "json",
            "--map",
            map,
        ]);
        assert_eq!(o.status.code(), Some(0));
        let path = dir.join(name);
        std::fs::write(&path, o.stdout).unwrap();
        let o = kmbraid(&["golden", "compare", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{map}: {}", stderr(&o));
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn golden_mismatch_reports_on_stderr() {
    let dir = scratch("mismatch");
    let text = std::fs::read_to_string(golden_dir().join("a2_braided_delta.json")).unwrap();
    // δ̄(t²⊗E₁) with one sign flipped
    let bad = text.replacen(r#"["-1", "t*E12", "t*F2"]"#, r#"["1", "t*E12", "t*F2"]"#, 1);
    assert_ne!(bad, text);
    let path = dir.join("a2_braided_delta.json");
    std::fs::write(&path, bad).unwrap();
    let o = kmbraid(&["golden", "compare", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(report["failure_count"], 1);
    assert_eq!(report["failures"][0]["x"], "t^2*E1");
    // read as a plain cobracket table it fails too
    let o = kmbraid(&[
        "golden",
        "compare",
        path.to_str().unwrap(),
        "--map",
        "cobracket",
    ]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn text_and_latex_tables() {
    let o = kmbraid(&[
        "table",
        "affine:A2",
        "--max-degree",
        "2",
        "--map",
        "braided",
    ]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 16);
    assert!(text.contains("delta_bar(t^2*E1) = (t*E1)/\\(t*H1) - (t*E12)/\\(t*F2)\n"));
    let o = kmbraid(&[
        "table",
        "affine:A2",
        "--max-degree",
        "1",
        "--format",
        "latex",
    ]);
    let tex = stdout(&o);
    assert!(tex.starts_with("\\begin{align*}"));
    assert!(tex.contains("\\delta(t\\otimes E_{1}) &="));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table",
        "affine:A2",
        "--max-degree",
        "3",
        "--format",
        "json",
    ];
    assert_eq!(kmbraid(&args).stdout, kmbraid(&args).stdout);
}
