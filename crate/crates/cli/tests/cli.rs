use std::process::{Command, Output};

use finsum::exact::Rational;
use serde_json::Value;

fn finsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = finsum(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn y_at_negative_one() {
    assert_eq!(ok(&["y", "--n", "1", "--lambda", "-1", "--method", "direct"]), "1/2\n");
    for m in ["alg1", "recurrence", "symbolic"] {
        assert_eq!(ok(&["y", "--n", "1", "--lambda", "-1", "--method", m]), "1/2\n", "{m}");
    }
}

#[test]
fn y_symbolic_value() {
    assert_eq!(
        ok(&["y", "--n", "1", "--method", "symbolic"]),
        "(-3*L + 1)/(2*L^4 - 4*L^3 + 2*L^2)\n"
    );
}

#[test]
fn table_rows() {
    let out = ok(&["table", "--max", "4"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "y(0,L) = (1)/(L*(L - 1))");
    assert_eq!(
        lines[4],
        "y(4,L) = (137*L^4 - 163*L^3 + 137*L^2 - 63*L + 12)/(60*L^5*(L - 1)^5)"
    );
}

#[test]
fn oeis_terms() {
    assert_eq!(ok(&["oeis", "--terms", "6"]), "1 3 11 25 137 147\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["y", "--n", "1", "--lambda", "1"][..],
        &["y", "--n", "1", "--lambda", "0"],
        &["y", "--n", "1", "--lambda", "0.5"],
        &["y", "--n", "1", "--lambda", "2/0"],
        &["bogus"],
        &["verify", "--id", "no-such-identity"],
        &["series", "--which", "G", "--order", "3"],
    ] {
        let o = finsum(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn csv_quotes_rationals() {
    let out = ok(&["series", "--which", "g2", "--order", "2", "--format", "csv"]);
    assert_eq!(out, "\"k\",\"coefficient\"\n\"0\",\"1/2\"\n\"1\",\"5/8\"\n\"2\",\"2/3\"\n");
}

#[test]
fn volkenborn_json_rows() {
    let out = ok(&[
        "volkenborn", "--p", "3", "--max-level", "5", "--integrand", "power", "--index", "1",
        "--format", "json",
    ]);
    let rows: Value = serde_json::from_str(&out).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r["p"], 3);
        assert_eq!(r["N"], i as u64 + 1);
        assert_eq!(r["integrand"], "power");
        assert_eq!(r["limit"], "-1/2");
        assert_eq!(r["valuation"], i as u64 + 1);
    }
}

/// Every rational cell printed by a subcommand parses back to the same value.
#[test]
fn rationals_round_trip() {
    let outputs = [
        ok(&["series", "--which", "2f1", "--lambda", "5/3", "--order", "8", "--format", "csv"]),
        ok(&["series", "--which", "g3", "--order", "8", "--format", "csv"]),
        ok(&["volkenborn", "--p", "2", "--max-level", "6", "--integrand", "falling", "--index", "3", "--format", "csv"]),
    ];
    let mut seen = 0;
    for out in outputs {
        let mut r = csv::Reader::from_reader(out.as_bytes());
        for rec in r.records() {
            for cell in rec.unwrap().iter() {
                if let Ok(q) = cell.parse::<Rational>() {
                    assert_eq!(q.to_string().parse::<Rational>().unwrap(), q);
                    assert_eq!(q.to_string(), cell);
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn verify_single_typo_record() {
    let o = finsum(&["verify", "--id", "half-harmonic-scaled", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rec = &v["records"][0];
    assert_eq!(rec["status"], "printed_fails_corrected_ok");
    assert_eq!(rec["passed"], true);
    let cx = &rec["counterexamples"][0];
    assert_eq!((cx["lhs"].as_str(), cx["rhs"].as_str()), (Some("-4"), Some("-2")));
}

#[test]
fn verify_exit_code_matches_report() {
    let o = finsum(&["verify", "--family", "half", "--max-n", "10", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed = v["totals"]["failed"].as_u64().unwrap();
    assert_eq!(o.status.code(), Some(if failed == 0 { 0 } else { 1 }));
    assert!(v["records"].as_array().unwrap().iter().all(|r| r["family"] == "half"));
}

#[test]
fn output_file_and_thread_cap() {
    let dir = std::env::temp_dir().join(format!("finsum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("oeis.json");
    let o = Command::new(env!("CARGO_BIN_EXE_finsum"))
        .args(["oeis", "--terms", "3", "--format", "json", "--output"])
        .arg(&path)
        .env("FINSUM_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[2]["term"], "11");
    std::fs::remove_dir_all(&dir).unwrap();

    let bad = Command::new(env!("CARGO_BIN_EXE_finsum"))
        .args(["oeis", "--terms", "3"])
        .env("FINSUM_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
