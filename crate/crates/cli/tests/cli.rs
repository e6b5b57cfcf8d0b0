use std::process::{Command, Output};

fn qinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qinv")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn unknot_is_one() {
    let o = qinv(&["eval", "--fixture", "unknot", "--level", "3", "--format", "tsv"]);
    assert!(o.status.success());
    let cols: Vec<f64> = stdout(&o).split_whitespace().map(|s| s.parse().unwrap()).collect();
    assert_eq!(cols[0], 3.0);
    assert!((cols[1] - 1.0).abs() < 1e-10 && cols[2].abs() < 1e-10);
}

#[test]
fn figure_eight_table_rows() {
    let o = qinv(&["table", "--fixture", "fig8-hyp-prime", "--levels", "2..4", "--format", "tsv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<_> = out.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[1].starts_with("2\t-2.94739\t2.94739"), "{}", rows[1]);
}

#[test]
fn json_output_is_parseable() {
    let o = qinv(&["eval", "--fixture", "hopf-pinched", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["N"], 2);
    assert!(v["value"].as_array().is_some_and(|a| a.len() == 2));
}

#[test]
fn fixture_round_trip() {
    let dir = std::env::temp_dir().join(format!("qinv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = qinv(&["fixture", "--fixture", "fig8-hyp"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let (w, f) = (dir.join("w.txt"), dir.join("f.json"));
    std::fs::write(&w, v["word"].as_str().unwrap()).unwrap();
    std::fs::write(&f, &o.stdout).unwrap();
    let direct = qinv(&["eval", "--fixture", "fig8-hyp", "--level", "3", "--format", "tsv"]);
    let via = qinv(&["eval", "--diagram", w.to_str().unwrap(), "--coloring", f.to_str().unwrap(), "--level", "3", "--format", "tsv"]);
    assert!(via.status.success(), "{}", String::from_utf8_lossy(&via.stderr));
    assert_eq!(stdout(&direct), stdout(&via));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn exit_codes() {
    assert_eq!(qinv(&["eval", "--fixture", "nope"]).status.code(), Some(2));
    assert_eq!(qinv(&["eval", "--fixture", "unknot", "--level", "40"]).status.code(), Some(2));
    assert_eq!(qinv(&["eval", "--diagram", "/nonexistent"]).status.code(), Some(2));
    assert_eq!(qinv(&["verify", "--suite", "dilog", "--level", "3", "--trials", "5"]).status.code(), Some(0));
}

#[test]
fn dilog_tab() {
    let o = qinv(&["dilog", "tab", "phi", "--level", "3", "--from", "0.1", "--to", "0.4", "--steps", "4"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().filter(|l| !l.is_empty()).count(), 5);
}
