use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn madgad(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_madgad"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn two_part_formula() {
    let v = json_of(&madgad(&["formula", "m2", "--n", "5"], None));
    assert_eq!(v["value"], "24/5");
    assert_eq!(v["source"], "m_two");
}

#[test]
fn k8_construction_verifies() {
    let built = madgad(&["construct", "k7-k8"], None);
    let v = json_of(&madgad(
        &["verify", "-"],
        Some(&json_of(&built).to_string()),
    ));
    assert_eq!(v["total"], "16/1");
}

#[test]
fn empty_graph_has_zero_mad() {
    let v = json_of(&madgad(&["mad", "-"], Some("0 0\n")));
    assert_eq!(v["mad"], "0/1");
    assert_eq!(v["witness"], serde_json::json!([]));
}

#[test]
fn mad_of_k4_json() {
    let g = r#"{"n": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;
    let v = json_of(&madgad(&["mad", "-"], Some(g)));
    assert_eq!(v["mad"], "3/1");
    assert_eq!(v["witness"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn constructions_round_trip_through_verify() {
    let sts = String::from_utf8(madgad(&["design", "sts", "--n", "7"], None).stdout).unwrap();
    let cases: Vec<(Vec<&str>, Option<&str>)> = vec![
        (vec!["construct", "k2", "--n", "9"], None),
        (vec!["construct", "small-k", "--k", "3", "--n", "8"], None),
        (vec!["construct", "psts", "--n", "9", "--t", "2"], None),
        (
            vec!["construct", "triangular", "--t", "2", "--n", "6"],
            None,
        ),
        (
            vec![
                "construct",
                "plane-plus-r",
                "--q",
                "2",
                "--r",
                "1",
                "--n",
                "7",
            ],
            None,
        ),
        (
            vec!["construct", "design", "--from", "-"],
            Some(sts.as_str()),
        ),
        (
            vec!["construct", "blowup", "--from", "-", "--n", "14"],
            Some(sts.as_str()),
        ),
    ];
    for (args, input) in cases {
        let out = madgad(&args, input);
        let built = json_of(&out);
        let v = json_of(&madgad(&["verify", "-"], Some(&built.to_string())));
        assert!(v["total"].is_string(), "{args:?}");
        assert_eq!(v["within_list_bound"], true, "{args:?}");
    }
}

#[test]
fn normalize_reaches_list_bound() {
    let d = String::from_utf8(madgad(&["construct", "k2", "--n", "6"], None).stdout).unwrap();
    let v = json_of(&madgad(&["normalize", "-"], Some(&d)));
    let ml = json_of(&madgad(
        &["formula", "mlist", "--k", "2", "--edges", "15"],
        None,
    ));
    assert_eq!(v["mad_sum"], ml["value"]);
}

#[test]
fn oracle_agrees_with_formula() {
    let o = json_of(&madgad(&["oracle", "mkn", "--k", "2", "--n", "6"], None));
    let f = json_of(&madgad(&["formula", "m2", "--n", "6"], None));
    assert_eq!(o["value"], f["value"]);
    assert_eq!(o["source"], "oracle");
}

#[test]
fn exit_codes() {
    assert_eq!(madgad(&["no-such-command"], None).status.code(), Some(2));
    let refused = madgad(&["oracle", "mkn", "--k", "2", "--n", "9"], None);
    assert_eq!(refused.status.code(), Some(3));
    let raised = madgad(
        &["oracle", "mkn", "--k", "2", "--n", "8", "--budget-n", "6"],
        None,
    );
    assert_eq!(raised.status.code(), Some(3));
    let bad = r#"{"n": 3, "mode": "DECOMPOSITION", "parts": [{"n": 3, "edges": [[0,1]]}]}"#;
    assert_eq!(madgad(&["verify", "-"], Some(bad)).status.code(), Some(1));
    assert_eq!(
        madgad(&["formula", "m2", "--n", "1"], None).status.code(),
        Some(2)
    );
}

#[test]
fn table_output() {
    let out = madgad(&["formula", "g", "--m", "6", "--table"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.lines()
            .any(|l| l.starts_with("value") && l.ends_with("3/1")),
        "{text}"
    );
}
