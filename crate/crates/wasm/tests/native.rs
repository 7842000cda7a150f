use numsemi_wasm::{ideal_view, search_summary, semigroup_view};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.expect("ok")).expect("json")
}

#[test]
fn grid_has_multiplicity_columns() {
    let v = parse(semigroup_view("8,11,14,15"));
    assert_eq!(v["columns"], 8);
    let members = v["members"].as_array().unwrap();
    assert_eq!(members.len() as i64, v["rows"].as_i64().unwrap() * 8);
    assert_eq!(members[21], false);
    assert!(members[22..].iter().all(|m| m == true));
    assert_eq!(v["ring_type"], 4);
    assert_eq!(v["semigroup"]["frobenius"], 21);
}

#[test]
fn ideal_layers() {
    let v = parse(ideal_view("8,11,14,15", "0,1"));
    let names: Vec<&str> = v["layers"].as_array().unwrap().iter().map(|l| l["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["I", "K_R : I", "R : I", "I (K_R : I)", "K_R"]);
    assert_eq!(v["layers"][1]["ideal"]["generators"], serde_json::json!([0, 3]));
    assert_eq!(v["torsion"]["length"], 1);
    assert_eq!(v["classification"]["factors_canonical_2x2"], true);

    let v = parse(ideal_view("9,10,11,12,15", "5,6"));
    assert_eq!(v["layers"][0]["ideal"]["offset"], 0);
    assert_eq!(v["classification"]["is_counterexample"], true);
}

#[test]
fn search_counts() {
    let v = parse(search_summary("9,10,11,12,15"));
    assert_eq!(v["counterexample"], 2);
    assert_eq!(v["counterexamples"], serde_json::json!([[0, 1], [0, 3]]));
    let hist: u64 = v["torsion_histogram"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum();
    assert_eq!(hist, v["total"].as_u64().unwrap());
}

#[test]
fn errors_are_messages() {
    assert!(semigroup_view("4,6").unwrap_err().contains("gcd"));
    assert!(ideal_view("3,4", "x").is_err());
    assert!(semigroup_view("41,42").unwrap_err().contains("genus"));
}
