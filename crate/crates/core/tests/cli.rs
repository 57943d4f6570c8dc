use std::process::Command;

use hpt_core::cli::run;
use hpt_core::exactalg::QPoly;
use serde_json::Value;

fn hpt(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hpt"))
        .args(args)
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn row_plain() {
    assert_eq!(
        hpt(&["row", "--q", "6", "--n", "3"]).0,
        "1B 3A 2B 2B 3A 1B\n"
    );
    assert_eq!(hpt(&["row", "--q", "6", "--n", "0"]).0, "1B\n");
}

#[test]
fn row_rejects_small_q() {
    let (out, err, code) = hpt(&["row", "--q", "4", "--n", "1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("q must be ≥ 5"), "{err}");
}

#[test]
fn row_truncation_exits_1() {
    let (_, err, code) = hpt(&["row", "--q", "6", "--n", "5", "--cap", "20"]);
    assert_eq!(code, 1);
    assert!(err.contains("entry cap"), "{err}");
}

#[test]
fn unknown_flag_exits_2() {
    assert_eq!(hpt(&["row", "--q", "6", "--bogus"]).2, 2);
}

#[test]
fn row_json_and_csv() {
    let o = run(["hpt", "row", "--q", "5", "--n", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 5);
    assert_eq!(v["entries"][1]["value"], 3);
    assert_eq!(v["entries"][1]["tag"], "A");
    let o = run(["hpt", "row", "--q", "5", "--n", "2", "--format", "csv"]);
    assert_eq!(o.stdout, "position,value,tag\n0,1,B\n1,2,A\n2,1,B\n");
}

#[test]
fn sums() {
    assert_eq!(
        run(["hpt", "sums", "--q", "6", "--k", "2", "--n-max", "4"]).stdout,
        "2, 6, 28, 160\n"
    );
    assert_eq!(
        run(["hpt", "sums", "--q", "6", "--k", "1", "--n-max", "3"]).stdout,
        "2, 4, 12\n"
    );
    let o = run([
        "hpt",
        "sums",
        "--q",
        "6",
        "--k",
        "2",
        "--n-max",
        "4",
        "--state-vectors",
    ]);
    assert!(o.stdout.contains("g_4 = [98, 49, 62, 34]"), "{}", o.stdout);
    let o = run([
        "hpt",
        "sums",
        "--q",
        "6",
        "--k",
        "2",
        "--n-max",
        "4",
        "--state-vectors",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v[3]["state_vector"], serde_json::json!([98, 49, 62, 34]));
}

#[test]
fn recurrence_json_schema() {
    let o = run(["hpt", "recurrence", "--k", "2"]);
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(
        v["coefficients"],
        serde_json::json!([[2, 1], [-7, -1], [8], [-2]])
    );
    assert_eq!(v["order"], 4);
    assert_eq!(v["x_strip_count"], 1);
    assert_eq!(v["variant"], "full");
    assert_eq!(
        v["initial_values"],
        serde_json::json!([[2], [6], [4, 4], [-20, 6, 4]])
    );
    let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    keys.sort();
    assert_eq!(
        keys,
        [
            "coefficients",
            "initial_values",
            "k",
            "order",
            "variant",
            "x_strip_count"
        ]
    );

    let v: Value = serde_json::from_str(&run(["hpt", "recurrence", "--k", "0"]).stdout).unwrap();
    assert_eq!(
        v["coefficients"],
        serde_json::json!([[-1, 1], [1, -1], [1]])
    );
    let v: Value =
        serde_json::from_str(&run(["hpt", "recurrence", "--k", "3", "--reduced"]).stdout).unwrap();
    assert_eq!(v["variant"], "reduced");
}

#[test]
fn recurrence_csv_round_trips_through_json() {
    for k in [0, 1, 5, 7] {
        let k = k.to_string();
        let json: Value =
            serde_json::from_str(&run(["hpt", "recurrence", "--k", &k]).stdout).unwrap();
        let csv = run(["hpt", "recurrence", "--k", &k, "--format", "csv"]).stdout;
        let mut lines = csv.lines();
        let header: Vec<&str> = lines.next().unwrap().split(',').collect();
        let cells: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(header[0], "k");
        assert_eq!(cells[0], k);
        let from_csv: Vec<QPoly> = cells[1..].iter().map(|c| c.parse().unwrap()).collect();
        let from_json: Vec<QPoly> = json["coefficients"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| hpt_core::json::value_to_poly(c).unwrap())
            .collect();
        assert_eq!(from_csv, from_json);
    }
}

#[test]
fn recurrence_k5_plain() {
    let o = run(["hpt", "recurrence", "--k", "5", "--format", "plain"]);
    for c in ["(q+11)", "(18q-71)", "(-9q-17)", "(-10q+88)", "(-10)"] {
        assert!(o.stdout.contains(c), "{}", o.stdout);
    }
}

#[test]
fn verify_commands() {
    let (_, _, code) = hpt(&[
        "verify",
        "--k-range",
        "2..4",
        "--q-list",
        "5,6",
        "--cap",
        "100000",
    ]);
    assert_eq!(code, 0);
    let (out, _, code) = hpt(&["verify", "--k-range", "0..1", "--q-list", "6"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("all exact\n"));
    assert_eq!(hpt(&["verify", "--k-range", "2..2", "--q-list", "4"]).2, 2);
    let o = run([
        "hpt",
        "verify",
        "--k-range",
        "3",
        "--q-list",
        "6",
        "--cap",
        "2000",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["all_exact"], true);
}

#[test]
fn verify_as_printed_reduced_reports_mismatch() {
    let o = run([
        "hpt",
        "verify",
        "--k-range",
        "3",
        "--q-list",
        "6",
        "--cap",
        "2000",
        "--reduced",
        "--form",
        "as-printed",
    ]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("MISMATCH"));
}

#[test]
fn table() {
    let o = run(["hpt", "table", "--k-max", "11"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.starts_with("k,c1,c2,c3,c4,c5,c6,c7,c8,fixture\n"));
    assert!(o
        .stdout
        .contains("\n6,q+17,44q-99,17q-303,-62q+404,-14,-4,,,matches\n"));
    assert!(o
        .stdout
        .contains("\n9,q+62,447q+1288,2433q-15116,-2431q+10555,-450q+3662,-450,0,,matches\n"));

    let o = run(["hpt", "table", "--k-max", "3"]);
    assert_eq!(o.stdout.lines().count(), 5);

    let o = run(["hpt", "table", "--k-max", "13"]);
    assert_eq!(o.code, 0);
    let rows: Vec<&str> = o.stdout.lines().collect();
    assert!(rows[13].starts_with("12,") && rows[13].ends_with("no fixture (exploratory)"));
    assert!(rows[14].starts_with("13,") && rows[14].ends_with("no fixture (exploratory)"));
}

#[test]
fn conjecture() {
    let o = run(["hpt", "conjecture", "--k-min", "2", "--k-max", "11"]);
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l.contains(" agrees")));
    let flagged: Vec<&str> = lines
        .iter()
        .filter(|l| l.contains("anomaly"))
        .copied()
        .collect();
    assert_eq!(flagged.len(), 2);
    assert!(flagged[0].starts_with("k=9 ") && flagged[1].starts_with("k=11 "));

    let o = run(["hpt", "conjecture", "--k-min", "12", "--k-max", "13"]);
    assert!(o.stdout.contains("exploratory"));
    assert_eq!(run(["hpt", "conjecture", "--k-min", "1"]).code, 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["hpt", "table", "--k-max", "8", "--format", "json"][..],
        &[
            "hpt",
            "verify",
            "--k-range",
            "0..3",
            "--q-list",
            "5,7",
            "--cap",
            "5000",
            "--format",
            "json",
        ][..],
        &["hpt", "conjecture", "--format", "csv"][..],
    ] {
        assert_eq!(run(args.iter().copied()), run(args.iter().copied()));
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("hpt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("row.txt");
    let (out, _, code) = hpt(&[
        "row",
        "--q",
        "6",
        "--n",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1B 2A 1B\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
