use std::process::{Command, Output};

fn nbhood(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbhood"))
        .args(args)
        .env_remove("NBHOOD_BUDGET")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = nbhood(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn dist() {
    assert_eq!(stdout(&["dist", "align", "assign"]), "2\n");
    assert_eq!(stdout(&["dist", "aa", "aa"]), "0\n");
    assert_eq!(stdout(&["dist", "aa", "a", "--leftmost"]), "1\na a\na -\n");
    assert_eq!(
        stdout(&["dist", "align", "assign", "--leftmost"]),
        "2\na l - i g n\na s s i g n\n"
    );
}

#[test]
fn enum_text() {
    let count = ["enum", "--word", "aaaa", "--dist", "2", "--sigma", "2", "--kind", "condensed", "--count-only"];
    assert_eq!(stdout(&count), "6\n");
    assert_eq!(
        stdout(&["enum", "--word", "aaaa", "--dist", "1", "--sigma", "2", "--kind", "super-condensed"]),
        "aaa\naaba\nabaa\n"
    );
    assert_eq!(stdout(&["enum", "--word", "a", "--dist", "0", "--sigma", "2", "--kind", "full"]), "a\n");
}

#[test]
fn enum_formats() {
    let base = ["enum", "--word", "a", "--dist", "1", "--sigma", "2", "--kind", "condensed"];
    let json: serde_json::Value = serde_json::from_str(&stdout(&[&base[..], &["--format", "json"]].concat())).unwrap();
    assert_eq!(json["count"], "1");
    assert_eq!(json["words"], serde_json::json!([""]));
    assert_eq!(json["kind"], "condensed");
    assert_eq!(stdout(&[&base[..], &["--format", "csv"]].concat()), "word\n\"\"\n");

    let oracle = ["enum", "--word", "ab", "--dist", "1", "--alphabet", "ab", "--oracle"];
    assert_eq!(stdout(&oracle), stdout(&oracle[..7]));
}

#[test]
fn enum_to_file() {
    let dir = std::env::temp_dir().join(format!("nbhood-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.txt");
    let args = ["enum", "--word", "ab", "--dist", "1", "--sigma", "2", "--output", path.to_str().unwrap()];
    assert_eq!(stdout(&args), "");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == "ab"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn formulas_and_bounds() {
    assert_eq!(stdout(&["formula", "unary-cn", "--length", "4", "--dist", "2", "--sigma", "2"]), "6\n");
    assert_eq!(stdout(&["formula", "unary-scn", "--length", "4", "--dist", "1", "--sigma", "2"]), "3\n");
    assert_eq!(stdout(&["formula", "unary-cn", "--length", "3", "--dist", "1", "--sigma", "3"]), "5\n");
    assert_eq!(stdout(&["bound", "f", "--length", "8", "--dist", "4", "--sigma", "2"]), "6151\n");
    assert_eq!(
        stdout(&["bound", "conjecture", "--length", "8", "--dist", "5", "--sigma", "2", "--exact-rational"]),
        "66355\n331776/5\n"
    );
    assert_eq!(stdout(&["bound", "conjecture", "--length", "4", "--dist", "0", "--sigma", "2"]), "1\n");
}

#[test]
fn table1_csv() {
    let csv = stdout(&["table1", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 49);
    assert_eq!(lines[0], "panel,w,d,value");
    for cell in ["a,10,5,73968", "b,10,9,54241071", "a,4,3,111"] {
        assert!(lines.contains(&cell), "{cell}");
    }
    assert!(!csv.contains('\r'));
    assert_eq!(csv, stdout(&["table1", "--format", "csv"]));
}

#[test]
fn extremal() {
    let out = stdout(&["extremal", "--length", "4", "--dist", "1", "--sigma", "2"]);
    assert!(out.contains("min 4 : aaaa"), "{out}");
    let sampled = ["extremal", "--length", "5", "--dist", "1", "--sigma", "3", "--samples", "10", "--seed", "3"];
    assert_eq!(stdout(&sampled), stdout(&sampled));
    let refused = nbhood(&["extremal", "--length", "6", "--dist", "2", "--sigma", "2", "--budget", "10"]);
    assert_eq!(refused.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(nbhood(&["--help"]).status.code(), Some(0));
    assert_eq!(nbhood(&["--version"]).status.code(), Some(0));
    assert_eq!(nbhood(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(nbhood(&["enum", "--word", "abz", "--dist", "1", "--sigma", "2"]).status.code(), Some(1));
    assert_eq!(nbhood(&["dist", "a-", "a"]).status.code(), Some(1));
    assert_eq!(nbhood(&["bound", "f", "--length", "3", "--dist", "3", "--sigma", "2"]).status.code(), Some(1));

    let over = Command::new(env!("CARGO_BIN_EXE_nbhood"))
        .args(["enum", "--word", "ab", "--dist", "1", "--sigma", "2", "--oracle"])
        .env("NBHOOD_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let small = ["verify", "--sigma", "2", "--max-length", "4", "--random-cases", "5", "--lemma-max-length", "6"];
    let ok = nbhood(&[&small[..], &["--check", "oracle,structure,alignment,sandwich,lemmas"]].concat());
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stdout));

    let table = nbhood(&[&small[..], &["--check", "table1"]].concat());
    assert_eq!(table.status.code(), Some(2));
    let text = String::from_utf8(table.stdout).unwrap();
    assert!(text.contains("FAIL table1") && text.contains("cases=48"), "{text}");
}
