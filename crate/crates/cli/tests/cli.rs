use std::process::{Command, Output};

use serde_json::Value;

fn frobcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobcat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(tsv: &str) -> Vec<Vec<String>> {
    tsv.lines().skip(1).filter(|l| !l.starts_with('#')).map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

#[test]
fn a1_survey_is_four_trivial_rows() {
    let o = frobcat(&["survey", "--type", "A1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let r = rows(&out);
    assert_eq!(r.len(), 4);
    assert!(r.iter().all(|row| row.len() == 16 && row[9] == "0"));
    assert!(out.lines().next().unwrap().starts_with("type\tv\tw\tl(v)\tl(w)\tcondition_P"));
    assert!(out.contains("# virdim\t0:4"));
}

#[test]
fn survey_output_does_not_depend_on_workers() {
    let one = frobcat(&["survey", "--type", "A2", "--workers", "1", "--seed", "3"]);
    let four = frobcat(&["survey", "--type", "A2", "--workers", "4", "--seed", "3"]);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(rows(&stdout(&one)).len(), 36);
}

#[test]
fn a2_survey_reports_the_non_commuting_pairs() {
    let o = frobcat(&["survey", "--type", "A2"]);
    assert_eq!(o.status.code(), Some(1));
    let r = rows(&stdout(&o));
    let failing: Vec<(String, String)> =
        r.iter().filter(|row| row[12] == "false").map(|row| (row[1].clone(), row[2].clone())).collect();
    assert_eq!(failing.len(), 4);
    assert!(failing.contains(&("1".into(), "2".into())));
    assert!(r.iter().all(|row| row[11] == "true"));
    assert!(r.iter().all(|row| row[9].parse::<usize>().unwrap() <= 2));
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 4);
}

#[test]
fn a3_survey_spectrum() {
    let o = frobcat(&["survey", "--type", "A3", "--workers", "4"]);
    let out = stdout(&o);
    let r = rows(&out);
    assert_eq!(r.len(), 576);
    let mut values: Vec<&str> = r.iter().map(|row| row[9].as_str()).collect();
    values.sort_unstable();
    values.dedup();
    assert_eq!(values, ["0", "1", "2"]);
    let rank_four: Vec<_> = r.iter().filter(|row| row[7].parse::<usize>().unwrap() > 3).collect();
    assert_eq!(rank_four.len(), 1);
    let row = rank_four[0];
    assert_eq!((row[1].as_str(), row[2].as_str()), ("2", "1,2,3,2,1"));
    assert_eq!(&row[6..16], ["8", "4", "10", "2", "2", "true", "true", "true", "false", "1"]);
}

#[test]
fn survey_over_the_rationals_matches() {
    let p = frobcat(&["survey", "--type", "A2"]);
    let q = frobcat(&["survey", "--type", "A2", "--field", "q"]);
    assert_eq!(p.stdout, q.stdout);
}

fn verify(suite: &str, ty: &str) -> (Option<i32>, Value) {
    let o = frobcat(&["verify", "--suite", suite, "--type", ty]);
    (o.status.code(), serde_json::from_slice(&o.stdout).unwrap())
}

#[test]
fn rank_four_suite_passes() {
    let (code, report) = verify("example-leclerc", "A3");
    assert_eq!(code, Some(0));
    assert_eq!(report["passed"], true);
    assert_eq!(report["assertions"].as_array().unwrap().len(), 5);
}

#[test]
fn u2_suite_passes() {
    let (code, report) = verify("u2-counterexample", "A2");
    assert_eq!(code, Some(0));
    assert_eq!(report["assertions"][0]["passed"], true);
}

#[test]
fn commutativity_suite_fails_on_four_a2_pairs() {
    let (code, report) = verify("commutativity", "A2");
    assert_eq!(code, Some(1));
    let iso = &report["assertions"][0];
    assert_eq!(iso["checked"], 36);
    assert_eq!(iso["failures"].as_array().unwrap().len(), 4);
    assert_eq!(report["assertions"][1]["passed"], true);
}

#[test]
fn json_keys_are_sorted() {
    let o = frobcat(&["verify", "--suite", "birs", "--type", "A2"]);
    let text = stdout(&o);
    let top: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top.clone();
    sorted.sort_unstable();
    assert_eq!(top, sorted);
    assert_eq!(top, ["assertions", "claim", "field", "passed", "seed", "suite", "type"]);
}

#[test]
fn unknown_suite_is_an_error() {
    let o = frobcat(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("unknown suite `nonsense`"));
}

#[test]
fn present_rank_four_pair() {
    let o = frobcat(&["present", "--type", "A3", "--v", "2", "--w", "1,3,2,1,3"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["presentation"]["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(j["fingerprint"]["dim"], 10);
    assert_eq!(j["fingerprint"]["simples"], 4);
    assert_eq!(j["w"], "1,2,3,2,1");
    let other = frobcat(&["present", "--type", "A3", "--field", "p:101", "--v", "2", "--w", "1,3,2,1,3"]);
    let k: Value = serde_json::from_slice(&other.stdout).unwrap();
    assert_eq!(j["fingerprint"], k["fingerprint"]);
}

#[test]
fn present_boundary_pair_is_pi_w() {
    let o = frobcat(&["present", "--type", "A2", "--v", "e", "--w", "1,2,1"]);
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    // f_e = id and t_{w0} = id, so this presents Pi(A2) itself.
    assert_eq!(j["fingerprint"]["dim"], 4);
    assert_eq!(j["fingerprint"]["cartan"], serde_json::json!([[1, 1], [1, 1]]));
    assert_eq!(j["presentation"]["arrows"].as_array().unwrap().len(), 2);
}
