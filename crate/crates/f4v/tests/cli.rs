use std::process::Command;

fn f4v(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_f4v")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn tori_json_report() {
    let (code, out) = f4v(&["verify", "tori", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"], "tori");
    assert_eq!(v["summary"]["fail"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["id"].is_string() && c["detail"].is_string()));
    assert!(checks.iter().any(|c| c["id"] == "tori.class25.order"));
}

#[test]
fn reports_are_deterministic() {
    let a = f4v(&["verify", "sigma", "--format", "json"]);
    let b = f4v(&["verify", "sigma", "--format", "json", "--jobs", "1"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
}

#[test]
fn failures_exit_one() {
    let (code, out) = f4v(&["verify", "alperin", "--ell", "big"]);
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.starts_with("fail") && l.contains("8.2")));
}

#[test]
fn usage_and_data_errors_exit_two() {
    assert_eq!(f4v(&["verify", "nothing"]).0, 2);
    assert_eq!(f4v(&["verify", "roots", "--format", "xml"]).0, 2);
    let dir = std::env::temp_dir().join(format!("f4v-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("blocks_3.tbl"), "#table blocks\nblock\tell\n1.1\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_f4v"))
        .args(["verify", "alperin"])
        .env("F4V_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
