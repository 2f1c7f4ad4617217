use serde_json::Value;
use wdeg::cli::run;

fn call(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["wdeg"];
    full.extend_from_slice(args);
    let (code, out) = run(full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("not JSON ({e}): {out}"));
    (code, v)
}

#[test]
fn classify_reports_membership() {
    let (code, v) = call(&["classify", "A4", "-p", "3", "-w", "[0,1,0,0]"]);
    assert_eq!(code, 0);
    assert_eq!(v["omega"], true);
    assert_eq!(v["exact"], 1);
}

#[test]
fn exact_wdeg_from_oracle() {
    let (code, v) = call(&["wdeg", "--oracle", "A2", "-p", "3", "-w", "[1,1]"]);
    assert_eq!((code, v["wdeg"].as_u64()), (0, Some(1)));
    let (_, v) = call(&["wdeg", "--oracle", "A2", "-p", "5", "-w", "[1,1]"]);
    assert_eq!(v["wdeg"], 2);
}

#[test]
fn branch_lists_factors() {
    let (code, v) = call(&["branch", "C3", "-p", "3", "-w", "[0,0,1]", "--to", "2"]);
    assert_eq!(code, 0);
    let weights: Vec<&Value> = v["factors"].as_array().unwrap().iter().map(|f| &f["weight"]).collect();
    assert_eq!(weights, [&serde_json::json!([0, 1]), &serde_json::json!([1, 0])]);
}

#[test]
fn lemma_listing_and_check() {
    let (_, v) = call(&["verify-lemma", "--list"]);
    assert_eq!(v.as_array().unwrap().len(), 11);
    let (code, v) = call(&["verify-lemma", "fundamental-deep", "--params", "group=A5,p=3,i=3,k=2"]);
    assert_eq!((code, &v["pass"]), (0, &Value::Bool(true)));
}

#[test]
fn enumeration_counts() {
    let (_, v) = call(&["system", "enumerate", "C", "-p", "2", "-s", "1"]);
    assert_eq!(v["count"], 12);
    let (_, v) = call(&["system", "enumerate", "D", "-p", "3"]);
    assert_eq!(v["count"], 9);
}

#[test]
fn realize_reports_checks() {
    let (code, v) = call(&["system", "realize", "L", "--family", "C", "-p", "3", "--n-max", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"]["closure_ok"], true);
    assert_eq!(v["checks"]["delta"], 1);
}

#[test]
fn char_build_natural() {
    let (code, v) = call(&["char", "build", "natural", "B3", "-p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 7);
}

#[test]
fn error_exit_codes() {
    let (code, v) = call(&["classify", "A4", "-p", "4", "-w", "[0,1,0,0]"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "invalid-group");
    let (code, _) = call(&["classify", "A4", "-p", "3", "-w", "[0,-1,0,0]"]);
    assert_eq!(code, 2);
    let (code, v) = call(&["frobnicate"]);
    assert_eq!((code, &v["error"]), (2, &Value::from("usage")));
}

#[test]
fn config_limits_refuse() {
    let dir = std::env::temp_dir().join(format!("wdeg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("limits.toml");
    std::fs::write(&cfg, "[limits]\nmax_rank = 3\n").unwrap();
    let (code, v) = call(&["--config", cfg.to_str().unwrap(), "wdeg", "--oracle", "A4", "-p", "3", "-w", "[1,0,0,1]"]);
    assert_eq!((code, &v["error"]), (3, &Value::from("refused")));
    std::fs::remove_dir_all(dir).ok();
}
