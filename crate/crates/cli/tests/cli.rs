use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn etale(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etale"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("stdout is one JSON object")
}

#[test]
fn inverse_pipeline_on_i2() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(etale(&["gen", "inv", "2", "-o", "i2.json"], d).status.code(), Some(0));
    let c = etale(&["companion", "i2.json", "-o", "e.json", "--report", "json"], d);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(json(&c)["elements"], 9);
    let e = fs::read_to_string(d.join("e.json")).unwrap();
    assert!(e.contains("\"Etale(I2)\""));
    let v = etale(&["verify-inv", "i2.json"], d);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("isomorphic: true"));
    // the companion output is itself a valid monoid file
    assert_eq!(etale(&["axioms", "e.json"], d).status.code(), Some(0));
}

#[test]
fn gen_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for (family, n) in [("pt", "2"), ("inv", "3"), ("pt", "3")] {
        assert!(etale(&["gen", family, n, "-o", "a.json"], d).status.success());
        let first = fs::read(d.join("a.json")).unwrap();
        let printed = etale(&["gen", family, n], d);
        assert_eq!(format!("{}\n", stdout(&printed)).into_bytes(), first);
        // and the file loads back as a lawful monoid
        assert!(etale(&["axioms", "a.json"], d).status.success());
    }
}

#[test]
fn classification_of_pt2() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    etale(&["gen", "pt", "2", "-o", "pt2.json"], d);
    let o = etale(&["analyze", "pt2.json", "--report", "json"], d);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["is_boolean"], true);
    assert_eq!(v["is_etale"], true);
    assert_eq!(v["is_inverse"], false);
    assert_eq!(v["size"], 9);
    // PT2 is not inverse, so it has no companion
    assert_eq!(etale(&["companion", "pt2.json", "-o", "x.json"], d).status.code(), Some(1));
}

#[test]
fn broken_axiom_is_reported_with_names() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // PT2 with the star of one non-total map moved to the identity
    etale(&["gen", "pt", "2", "-o", "pt2.json"], d);
    let mut m: Value = serde_json::from_str(&fs::read_to_string(d.join("pt2.json")).unwrap()).unwrap();
    let one = m["one"].clone();
    let f = (0..9).find(|&i| m["star"][i] != one && Some(i as u64) != m["zero"].as_u64()).unwrap();
    m["star"][f] = one;
    fs::write(d.join("bad.json"), m.to_string()).unwrap();
    let name = m["elements"][f].as_str().unwrap().to_string();
    let o = etale(&["axioms", "bad.json"], d);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("passed: false"), "{}", out);
    assert!(out.lines().any(|l| l.contains(" violated at (") && l.contains(&name)), "{}", out);
    let j = json(&etale(&["axioms", "bad.json", "--report", "json"], d));
    assert_eq!(j["passed"], false);
    assert!(j["violations"].as_array().unwrap().iter().all(|v| v["witness"].is_array()));
}

#[test]
fn text_and_json_carry_the_same_data() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    etale(&["gen", "inv", "2", "-o", "i2.json"], d);
    let text = stdout(&etale(&["verify-inv", "i2.json"], d));
    let j = json(&etale(&["verify-inv", "i2.json", "--report", "json"], d));
    let obj = j.as_object().unwrap();
    assert_eq!(obj.len(), text.lines().count());
    for (k, v) in obj {
        let shown = v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
        assert!(text.lines().any(|l| l == format!("{}: {}", k, shown)), "{}", k);
    }
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("ragged.json"), r#"{"name": "r", "elements": ["a", "b"], "mul": [[0, 1], [1]], "star": [0, 1], "one": 0, "zero": null}"#).unwrap();
    let o = etale(&["axioms", "ragged.json"], d);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("mul"));
    assert!(o.stdout.is_empty());
    assert_eq!(etale(&["pn", "mul", "2", "b>c", "a"], d).status.code(), Some(2));
    assert_eq!(etale(&["cantor", "eval", "2", "(x,x"], d).status.code(), Some(2));
    assert_eq!(etale(&["h", "compose", "2", "[a>b]"], d).status.code(), Some(2));
    assert_eq!(etale(&["axioms", "f.json", "--bogus"], d).status.code(), Some(2));
}

#[test]
fn polycyclic_and_table_arithmetic() {
    let d = std::env::temp_dir();
    assert_eq!(stdout(&etale(&["pn", "mul", "2", "b>a", "a>ba"], &d)), "a>aa");
    assert_eq!(stdout(&etale(&["pn", "mul", "2", "a>b", "a>b"], &d)), "0");
    assert_eq!(stdout(&etale(&["h", "reduce", "2", "[aa>ba, ab>bb, b>a]"], &d)), "[a>b, b>a]");
    assert_eq!(stdout(&etale(&["h", "compose", "2", "[a>b, b>a]", "[a>b, b>a]"], &d)), "[~>~]");
    assert_eq!(stdout(&etale(&["h", "invert", "2", "[a>ba, b>bb]"], &d)), "[b>~]");
    let o = etale(&["h", "invert", "2", "[a>b, b>b]"], &d);
    assert_eq!(o.status.code(), Some(1));
    let c = json(&etale(&["h", "classify", "2", "[a>b, b>a]", "--report", "json", "--seed", "7"], &d));
    assert_eq!(c["unit"], true);
    assert_eq!(c["cantor_endomorphism"], true);
}

#[test]
fn cantor_and_witness() {
    let d = std::env::temp_dir();
    let o = json(&etale(&["cantor", "eval", "2", "(x.b,x.a)L", "--report", "json"], &d));
    assert_eq!(o["value"], "[a>b, b>a]");
    let w = etale(&["witness", "2", "{ba, bb}"], &d);
    assert_eq!(w.status.code(), Some(0));
    assert!(stdout(&w).starts_with("[~>ba]"));
    assert!(stdout(&w).contains("holds: true"));
    assert_eq!(etale(&["witness", "2", "{a, ab}"], &d).status.code(), Some(1));
}

#[test]
fn same_seed_same_answer() {
    let d = std::env::temp_dir();
    let args = ["h", "classify", "3", "[a>b, b>c, c>a]", "--seed", "11", "--report", "json"];
    assert_eq!(stdout(&etale(&args, &d)), stdout(&etale(&args, &d)));
}
