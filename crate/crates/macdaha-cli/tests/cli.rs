use std::process::Command;

use serde_json::Value;

fn macdaha(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_macdaha")).args(args).env_remove("MACDAHA_CACHE_DIR").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn duality_gives_three_equal_scalars() {
    let (code, out, _) = macdaha(&["mac", "duality", "--system", "A2", "--b", "-1,0", "--c", "0,-1", "--mode", "symbolic"]);
    assert_eq!(code, 0);
    let v = json(&out);
    let values = v["records"][0]["detail"]["values"].as_array().unwrap();
    assert_eq!(values.len(), 3);
    assert!(values.iter().all(|x| x[1] == values[0][1]));
    assert_eq!(v["records"][0]["id"], "duality");
}

#[test]
fn g2_has_no_minuscule_nodes() {
    let (code, out, _) = macdaha(&["roots", "show", "--system", "G2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["data"]["O"], serde_json::json!([0]));
}

#[test]
fn modular_verify_a1() {
    let (code, out, _) = macdaha(&["modular", "verify", "--system", "A1", "--N", "5", "--k", "1"]);
    assert_eq!(code, 0);
    let v = json(&out);
    let ids: Vec<&str> = v["records"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    for id in ["pi-symmetric", "braid", "omega^4", "unitary-T-", "conjugation", "fourier-square", "verlinde"] {
        assert!(ids.contains(&id), "{id}");
    }
}

#[test]
fn configuration_errors_exit_2() {
    assert_eq!(macdaha(&["suite", "everything"]).0, 2);
    assert_eq!(macdaha(&["mac", "eval", "--system", "A1", "--b", "2"]).0, 2);
    assert_eq!(macdaha(&["mac", "eval", "--system", "A1", "--b", "-2", "--t", "3"]).0, 2);
    assert_eq!(macdaha(&["mac", "eval", "--system", "Z9", "--b", "-2"]).0, 2);
    assert_eq!(macdaha(&["modular", "verify", "--system", "A1", "--N", "3", "--k", "2"]).0, 2);
    assert_eq!(macdaha(&["mac", "norm", "--system", "A1", "--b", "-1"]).0, 2);
    assert_eq!(macdaha(&["roots", "show", "--system", "A2", "--bogus"]).0, 2);
}

#[test]
fn suite_daha_lists_relations() {
    let (code, out, _) = macdaha(&["suite", "daha", "--system", "B2", "--cap", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut rows = csv::Reader::from_reader(out.as_bytes());
    let ids: Vec<String> = rows.records().map(|r| r.unwrap()[0].to_string()).collect();
    for id in ["quadratic", "braid", "pi-T"] {
        assert!(ids.iter().any(|x| x == id), "{id}");
    }
}

#[test]
fn text_and_rational_t() {
    let (code, out, _) = macdaha(&["mac", "eval", "--system", "B2", "--b", "-1,-1", "--t", "4/9,9", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("mac eval: pass"));
}

#[test]
fn jobs_do_not_change_output() {
    let one = macdaha(&["suite", "modular", "--system", "A1", "--seed", "3"]);
    let three = macdaha(&["suite", "modular", "--system", "A1", "--seed", "3", "--jobs", "3"]);
    assert_eq!(one.0, 0);
    assert_eq!(one.1, three.1);
}

#[test]
fn shift_on_one_class() {
    let (code, out, _) = macdaha(&["mac", "shift", "--system", "B2", "--classes", "0", "--b", "-1,-1"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["records"][0]["id"], "shift");
}
