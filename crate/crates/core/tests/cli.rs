use std::collections::HashMap;
use std::process::{Command, Output};

use eulersum::cli::OutputRecord;
use eulersum::special_fn::ZETA3;
use serde_json::value::RawValue;

fn eulersum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulersum"))
        .args(args)
        .env_remove("EULER_SUM_TOL")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<OutputRecord> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn list_all_and_filtered() {
    let all = eulersum(&["list"]);
    assert_eq!(code(&all), 0);
    assert_eq!(stdout(&all).lines().count(), 18);

    let cor = eulersum(&["list", "cor"]);
    let lines: Vec<_> = stdout(&cor).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l.starts_with("COR_")));

    let none = eulersum(&["list", "nothing-matches"]);
    assert_eq!(code(&none), 0);
    assert!(stdout(&none).is_empty());
}

#[test]
fn eval_euler_zeta3() {
    let o = eulersum(&["eval", "THM_V1_31", "--n", "0", "--m", "1", "--side", "both"]);
    assert_eq!(code(&o), 0);
    let r = &records(&o)[0];
    assert!((r.lhs.unwrap().0 / ZETA3 - 1.0).abs() < 1e-9);
    assert!((r.rhs.unwrap().0 / ZETA3 - 1.0).abs() < 1e-9);
}

#[test]
fn eval_goldbach_and_one_side() {
    let o = eulersum(&["eval", "EX3_GOLDBACH"]);
    assert_eq!(code(&o), 0);
    assert!((records(&o)[0].rhs.unwrap().0 - 1.0).abs() < 1e-12);

    let o = eulersum(&["eval", "THM_V3_37", "--p", "0.5", "--n", "1", "--m", "2", "--side", "rhs"]);
    assert_eq!(code(&o), 0);
    let r = &records(&o)[0];
    assert!(r.lhs.is_none() && r.rhs.is_some());
}

#[test]
fn eval_domain_error_exits_2() {
    let o = eulersum(&["eval", "COR_38", "--p", "-3", "--m", "1"]);
    assert_eq!(code(&o), 2);
    assert!(records(&o)[0].error.is_some());
    assert_eq!(code(&eulersum(&["eval", "THM_V1_31", "--m", "1"])), 2);
    assert_eq!(code(&eulersum(&["eval", "NOT_AN_ID"])), 2);
}

#[test]
fn eval_non_convergence_exits_3() {
    // The direct part alone (no tail) cannot meet the oracle tolerance.
    let o = eulersum(&[
        "eval",
        "EX1_AUYEUNG",
        "--case",
        "kpower",
        "--m",
        "1",
        "--side",
        "lhs",
        "--oracle-tol",
        "1e-300",
    ]);
    assert_eq!(code(&o), 3, "{}", stdout(&o));
}

#[test]
fn verify_single_point_passes() {
    let o = eulersum(&["verify", "THM_V4_311", "--p", "1", "--n", "0", "--m", "1"]);
    assert_eq!(code(&o), 0);
    let rs = records(&o);
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0].pass, Some(true));
}

#[test]
fn verify_unattainable_tolerance_exits_1() {
    let o = eulersum(&["verify", "COR_38", "--tol", "1e-30"]);
    assert_eq!(code(&o), 1);
    let rs = records(&o);
    assert!(!rs.is_empty());
    assert!(rs.iter().all(|r| r.pass == Some(false)));
}

#[test]
fn tolerance_precedence() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_eulersum"));
        c.args(["verify", "COR_38", "--p", "1", "--m", "1"]);
        c.env_remove("EULER_SUM_TOL");
        if let Some(e) = env {
            c.env("EULER_SUM_TOL", e);
        }
        if let Some(f) = flag {
            c.args(["--tol", f]);
        }
        let o = c.output().unwrap();
        let r: OutputRecord = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
        (code(&o), r.tol.unwrap().0)
    };
    assert_eq!(run(None, None), (0, 1e-7));
    assert_eq!(run(Some("1e-30"), None), (1, 1e-30));
    assert_eq!(run(Some("1e-30"), Some("1e-9")), (0, 1e-9));
}

#[test]
fn stated_forms_are_flagged() {
    let o = eulersum(&["verify", "EX4_HALF", "--form", "stated"]);
    assert_eq!(code(&o), 1);
    let rs = records(&o);
    assert_eq!(rs.len(), 2);
    assert!(rs.iter().all(|r| r.flagged == Some(true) && r.form.as_deref() == Some("stated")));

    let o = eulersum(&["verify", "EX4_HALF"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn records_round_trip_exactly() {
    let o = eulersum(&["verify", "THM_V2_33", "--n", "0..2", "--m", "1,3", "--jobs", "2"]);
    assert_eq!(code(&o), 0);
    for line in stdout(&o).lines() {
        let r: OutputRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), line);
        let raw: HashMap<String, Box<RawValue>> = serde_json::from_str(line).unwrap();
        for key in ["lhs", "rhs", "abs_err", "rel_err", "tol", "tail", "wall_ms"] {
            let text = raw[key].get();
            let x: f64 = text.parse().unwrap();
            assert_eq!(format!("{x:.16e}"), text, "{key}");
        }
    }
}

#[test]
fn output_order_is_independent_of_jobs() {
    let strip = |o: &Output| {
        records(o)
            .into_iter()
            .map(|mut r| {
                r.wall_ms.0 = 0.0;
                serde_json::to_string(&r).unwrap()
            })
            .collect::<Vec<_>>()
    };
    let a = eulersum(&["verify", "THM_V3_37", "--jobs", "1"]);
    let b = eulersum(&["verify", "THM_V3_37", "--jobs", "4"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn sweep_row_counts() {
    let csv_rows = |args: &[&str]| {
        let o = eulersum(args);
        assert_eq!(code(&o), 0);
        let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
        let header: Vec<String> = rdr.headers().unwrap().iter().map(str::to_owned).collect();
        assert_eq!(header.join(","), "id,n,m,p,lhs,rhs,abs_err,rel_err,terms,converged");
        rdr.records().count()
    };
    assert_eq!(csv_rows(&["sweep", "THM_V1_31", "--n", "0..3", "--m", "1..4"]), 16);
    assert_eq!(csv_rows(&["sweep", "COR_38", "--p", "0.5,1,2", "--m", "0..3"]), 12);
    assert_eq!(csv_rows(&["sweep", "COR_38", "--p", "1", "--m", "3..2"]), 0);
}

#[test]
fn sweep_json_and_x_column() {
    let o = eulersum(&["sweep", "COR_38", "--p", "0.5,1,2", "--m", "0..3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(records(&o).len(), 12);

    let o = eulersum(&["sweep", "THM_BASE_E15", "--x", "0.5", "--m", "2"]);
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("THM_BASE_E15,5.0000000000000000e-1,2,"), "{row}");
}

#[test]
fn sweep_domain_error_exits_2() {
    let o = eulersum(&["sweep", "COR_38", "--p", "-2,1", "--m", "1"]);
    assert_eq!(code(&o), 2);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.records().count(), 1);
}
