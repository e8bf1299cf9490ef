use finsum::exact::Rational;
use finsum::identities::{
    catalog, run_all, run_identity, Family, IdentityError, Status, SweepConfig,
};

fn without_time(json: &str) -> String {
    json.lines().filter(|l| !l.contains("wall_time_ms")).collect::<Vec<_>>().join("\n")
}

#[test]
fn every_family_is_populated() {
    let cat = catalog();
    assert!(cat.len() >= 30);
    for f in Family::ALL {
        assert!(cat.iter().any(|r| r.family == f), "{f}");
    }
}

#[test]
fn typo_records_carry_both_forms() {
    for r in catalog() {
        let typo = r.status == Status::PrintedFailsCorrectedOk;
        assert_eq!(typo, r.printed.is_some(), "{}", r.id);
        if let Some(p) = &r.printed {
            let e = (p.check)(&p.witness);
            assert!(!e.holds, "{}", r.id);
            assert_ne!(p.witness_lhs, p.witness_rhs, "{}", r.id);
        }
    }
}

#[test]
fn half_harmonic_counterexample() {
    let rep = run_identity("half-harmonic-scaled", &SweepConfig::default()).unwrap();
    let r = &rep.records[0];
    assert!(r.passed);
    assert_eq!(r.swept, 41);
    let cx = &r.counterexamples[0];
    assert_eq!(cx.params, "n=0");
    assert_eq!((cx.lhs.as_str(), cx.rhs.as_str()), ("-4", "-2"));
}

#[test]
fn recurrence_to_forty() {
    let config = SweepConfig { max_n: Some(40), ..SweepConfig::default() };
    let rep = run_identity("recurrence-basic", &config).unwrap();
    assert!(rep.all_passed());
    // 40 values of n at 7 λ values plus 10 symbolic
    assert_eq!(rep.records[0].swept, 40 * 7 + 10);
}

#[test]
fn recurrence_family_at_sixty() {
    let config = SweepConfig {
        max_n: Some(60),
        family: Some(Family::Recurrence),
        ..SweepConfig::default()
    };
    let rep = run_all(&config);
    assert!(rep.all_passed(), "{}", rep.to_table());
}

#[test]
fn family_filter() {
    let config = SweepConfig { family: Some(Family::Zeta), ..SweepConfig::default() };
    let rep = run_all(&config);
    assert!(!rep.records.is_empty());
    assert!(rep.records.iter().all(|r| r.family == Family::Zeta));
    assert!(rep.all_passed());
}

#[test]
fn lambda_override() {
    let config = SweepConfig {
        lambdas: Some(vec![Rational::new(7, 2)]),
        max_n: Some(8),
        family: Some(Family::Apostol),
    };
    assert!(run_all(&config).all_passed());
}

#[test]
fn unknown_id() {
    let err = run_identity("no-such", &SweepConfig::default()).unwrap_err();
    assert!(matches!(err, IdentityError::UnknownId(ref s) if s == "no-such"));
}

#[test]
fn reports_are_deterministic() {
    let config = SweepConfig { max_n: Some(6), ..SweepConfig::default() };
    let a = run_all(&config);
    let b = run_all(&config);
    assert_eq!(without_time(&a.to_json()), without_time(&b.to_json()));
    let ids: Vec<&str> = a.records.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn json_schema() {
    let rep = run_identity("eta-n0", &SweepConfig::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    let r = &v["records"][0];
    for key in ["id", "anchor", "status", "swept", "passed", "counterexamples"] {
        assert!(!r[key].is_null(), "{key}");
    }
    let cx = &r["counterexamples"][0];
    for key in ["params", "lhs", "rhs"] {
        assert!(cx[key].is_string(), "{key}");
    }
}
