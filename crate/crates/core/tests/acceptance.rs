//! Acceptance criteria 1 to 11, one pass/fail line each.
//!
//! Run with `cargo test -p finsum --test acceptance -- --nocapture` to see
//! the lines.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use finsum::exact::{Rational, RationalFunction, Scalar};
use finsum::genfun::{series_g, series_g_hypergeometric};
use finsum::identities::{catalog, run_all, run_identity, sample_lambdas, Status, SweepConfig};
use finsum::special::{bernoulli_numbers, stirling1_row, StirlingMethod};
use finsum::volkenborn::{convergence_report, Integrand};
use finsum::ynum::{
    oeis_a025529, y_algorithm1, y_algorithm1_with, y_direct, y_factored, y_recurrence_sequence,
    y_symbolic,
};
use finsum::zeta::{
    check_eta_multinomial, check_eta_series, check_zeta_series, check_zeta_vanishing,
    cos_default_terms, cos_series_partial, double_coefficient, mixed_value, apostol_triple,
    ExpSign, MixedForm,
};

/// Float tolerance for the direct cosine sum against its closed form.
const COS_DIRECT_TOL: f64 = 1e-12;
/// Float tolerance for the Apostol-Bernoulli cosine series at λ = 0.1.
const COS_SERIES_TOL: f64 = 1e-6;
const COS_LAMBDA: f64 = 0.1;
/// Largest n for the Bernoulli-Stirling algorithm with the closed-form S1 route.
const FORMULA_N: usize = 16;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Display>(what: &str, a: T, b: T) -> Result<(), String> {
    ensure(a == b, || format!("{what}: {a} != {b}"))
}

fn c1_table() -> Outcome {
    let want = [
        "(1)/(L*(L - 1))",
        "(-3*L + 1)/(2*L^2*(L - 1)^2)",
        "(11*L^2 - 7*L + 2)/(6*L^3*(L - 1)^3)",
        "(-25*L^3 + 23*L^2 - 13*L + 3)/(12*L^4*(L - 1)^4)",
        "(137*L^4 - 163*L^3 + 137*L^2 - 63*L + 12)/(60*L^5*(L - 1)^5)",
    ];
    for (n, w) in want.iter().enumerate() {
        eq(&format!("y({n},L)"), y_factored(n).as_str(), w)?;
    }
    Ok("y(0..4, L) match character for character".into())
}

fn methods_agree<F: Scalar>(n_max: usize, l: &F) -> Result<(), String> {
    let rec = y_recurrence_sequence(n_max, l).map_err(|e| e.to_string())?;
    let g = series_g(l, n_max as i64).map_err(|e| e.to_string())?;
    let one_minus = F::one() - l.clone();
    for (n, r) in rec.iter().enumerate() {
        let d = y_direct(n, l).unwrap();
        let a = y_algorithm1(n, l).unwrap();
        let scale = finsum::exact::powi(&one_minus, -(n as i64 + 2));
        let gc = g.coeff(n as i64).unwrap() * scale;
        eq(&format!("direct/alg1 n={n} λ={l}"), &d, &a)?;
        eq(&format!("direct/recurrence n={n} λ={l}"), &d, r)?;
        eq(&format!("direct/genfun n={n} λ={l}"), &d, &gc)?;
    }
    Ok(())
}

fn c2_methods() -> Outcome {
    for l in sample_lambdas() {
        methods_agree(40, &l)?;
    }
    methods_agree(12, &RationalFunction::var())?;
    for n in 0..=12 {
        eq(&format!("symbolic n={n}"), y_symbolic(n), y_algorithm1(n, &RationalFunction::var()).unwrap())?;
    }
    Ok("4 methods, n <= 40 at 7 λ values, n <= 12 symbolic".into())
}

fn c3_oeis() -> Outcome {
    let listed = [1, 3, 11, 25, 137, 147, 1089, 2283, 7129, 7381, 83711];
    let terms = oeis_a025529(11).map_err(|e| e.to_string())?;
    for (t, w) in terms.iter().zip(listed) {
        eq(&format!("term {}", t.n), t.formula.clone(), w.into())?;
        eq(&format!("leading {}", t.n), t.leading.clone(), w.into())?;
    }
    eq("count", terms.len(), 11)?;
    Ok("11 terms = lcm(1..n) H_n = |leading coefficient|".into())
}

fn hyper_agrees<F: Scalar>(t: i64, l: &F) -> Result<(), String> {
    let a = series_g(l, t).unwrap();
    let b = series_g_hypergeometric(l, t).unwrap();
    for k in 0..=t {
        eq(&format!("z^{k} λ={l}"), a.coeff(k).unwrap(), b.coeff(k).unwrap())?;
    }
    Ok(())
}

fn c4_hypergeometric() -> Outcome {
    for l in sample_lambdas() {
        hyper_agrees(30, &l)?;
    }
    hyper_agrees(12, &RationalFunction::var())?;
    Ok("order 30 at 7 λ values, order 12 symbolic".into())
}

fn apostol_agree<F: Scalar>(m_max: usize, l: &F) -> Result<(), String> {
    for m in 0..=m_max {
        let [formula, series, via_y] = apostol_triple(m, l).map_err(|e| e.to_string())?;
        eq(&format!("closed/series M={m} λ={l}"), &formula, &series)?;
        eq(&format!("closed/y-sum M={m} λ={l}"), &formula, &via_y)?;
    }
    Ok(())
}

fn c5_apostol() -> Outcome {
    for l in sample_lambdas() {
        apostol_agree(14, &l)?;
    }
    apostol_agree(10, &RationalFunction::var())?;
    Ok("M <= 14 at 7 λ values, M <= 10 symbolic".into())
}

fn c6_spine() -> Outcome {
    for m in 0..=20usize {
        let b = bernoulli_numbers(m);
        let s: Rational = stirling1_row(m).iter().zip(&b).map(|(s, b)| s * b).sum();
        let want = Rational::from(finsum::exact::sign(m as i64)) * finsum::exact::factorial(m as u64)
            / Rational::from(m + 1);
        eq(&format!("m={m}"), s, want)?;
    }
    // the closed S1 formula is a double sum with large cancellations, so it
    // runs on a shorter range than the recurrence route
    for l in sample_lambdas() {
        for n in 0..=40 {
            let d = y_direct(n, &l).unwrap();
            eq(&format!("alg1 n={n} λ={l}"), &d, &y_algorithm1(n, &l).unwrap())?;
            if n <= FORMULA_N {
                let f = y_algorithm1_with(n, &l, StirlingMethod::Formula).unwrap();
                eq(&format!("alg1 closed S1 n={n} λ={l}"), &d, &f)?;
            }
        }
    }
    Ok(format!(
        "m <= 20; Algorithm 1 = direct sum for n <= 40 (closed-form S1 route n <= {FORMULA_N})"
    ))
}

fn c7_laurent() -> Outcome {
    for n in 0..=6 {
        for m in 0..=8 {
            let s = check_eta_series(n, m);
            ensure(s.holds(), || format!("eta series n={n} m={m}: {} != {}", s.lhs, s.rhs))?;
            let s = check_eta_multinomial(n, m);
            ensure(s.holds(), || format!("eta multinomial n={n} m={m}: {} != {}", s.lhs, s.rhs))?;
        }
    }
    let mut logged = Vec::new();
    for n in 0..=4 {
        for m in 0..=6 {
            let s = check_zeta_series(n, m);
            ensure(s.holds(), || format!("zeta series n={n} m={m}: {} != {}", s.lhs, s.rhs))?;
            let s = check_zeta_vanishing(n, m);
            ensure(s.holds(), || format!("zeta vanishing n={n} m={m}: {} != {}", s.lhs, s.rhs))?;
            let d = double_coefficient(n, m, ExpSign::Plus);
            eq(&format!("mixed B n={n} m={m}"), &d, &mixed_value(MixedForm::Bernoulli, n, m))?;
            eq(&format!("mixed BE n={n} m={m}"), &d, &mixed_value(MixedForm::Mixed, n, m))?;
            let printed = double_coefficient(n, m, ExpSign::Minus);
            for form in [MixedForm::BernoulliPrinted, MixedForm::MixedPrinted] {
                let v = mixed_value(form, n, m);
                if v != printed {
                    logged.push(format!("{form:?} n={n} m={m}: {printed} vs {v}"));
                }
            }
        }
    }
    for line in logged.iter().take(4) {
        println!("    printed-form discrepancy {line}");
    }
    Ok(format!(
        "eta n <= 6, m <= 8; zeta and mixed n <= 4, m <= 6; {} printed-form discrepancies logged",
        logged.len()
    ))
}

fn c8_volkenborn() -> Outcome {
    let mut samples = 0;
    for p in [2u64, 3, 5] {
        let top = if p == 5 { 5 } else { 8 };
        for j in 0..=6 {
            let r = convergence_report(Integrand::Power, j, p, 1..=top).map_err(|e| e.to_string())?;
            ensure(r.threshold_ok && r.increasing_ok, || {
                format!("power p={p} j={j}: {:?}", r.violations)
            })?;
            samples += r.samples.len();
            for integrand in [Integrand::Falling, Integrand::Binom] {
                let r = convergence_report(integrand, j, p, 1..=top).map_err(|e| e.to_string())?;
                let last = r.samples.last().unwrap();
                ensure(last.error_valuation.at_least(1), || {
                    format!("{integrand} p={p} n={j}: valuation {} at N={top}", last.error_valuation)
                })?;
                eq(&format!("{integrand} limit"), &last.limit, &integrand.limit(j))?;
                samples += r.samples.len();
            }
        }
    }
    Ok(format!("{samples} exact samples, p in {{2, 3, 5}}"))
}

const TYPOS: [(&str, &str, &str); 6] = [
    ("half-harmonic-scaled", "-4", "-2"),
    ("harmonic-alternating-stirling2", "-1", "-4"),
    ("log-product-harmonic-difference", "7/12", "-313/12"),
    ("ode-lambda-derivative", "(1)/(L^3 - L^2)", "(-1)/(L^3 - L^2)"),
    ("ode-lambda-derivative-normalized", "(1)/(L^4 - 2*L^3 + L^2)", "(-1)/(L^2 - L)"),
    ("eta-n0", "3/2", "1"),
];

fn c9_typos() -> Outcome {
    for (id, lhs, rhs) in TYPOS {
        let report = run_identity(id, &SweepConfig::default()).map_err(|e| e.to_string())?;
        let r = &report.records[0];
        eq(&format!("{id} status"), r.status, Status::PrintedFailsCorrectedOk)?;
        ensure(r.passed, || format!("{id}: corrected form or witness failed"))?;
        let cx = r.counterexamples.first().ok_or(format!("{id}: no counterexample"))?;
        eq(&format!("{id} lhs"), cx.lhs.as_str(), lhs)?;
        eq(&format!("{id} rhs"), cx.rhs.as_str(), rhs)?;
    }
    let others = catalog()
        .iter()
        .filter(|r| r.status == Status::PrintedFailsCorrectedOk)
        .count()
        - TYPOS.len();
    Ok(format!(
        "the five listed typos fail as printed (ODE counted in both forms), corrected forms pass; {others} further catalogued typos"
    ))
}

fn c10_cosine() -> Outcome {
    let terms = cos_default_terms(COS_LAMBDA);
    let r = cos_series_partial(COS_LAMBDA, terms);
    let direct = (r.direct - r.closed).abs();
    let series = (r.corrected - r.closed).abs();
    ensure(direct < COS_DIRECT_TOL, || format!("direct sum off by {direct:e}"))?;
    ensure(series < COS_SERIES_TOL, || format!("series off by {series:e} with {terms} terms"))?;
    Ok(format!(
        "λ = {COS_LAMBDA}: direct gap {direct:.1e} < {COS_DIRECT_TOL:e}; series gap {series:.1e} < {COS_SERIES_TOL:e} with {terms} terms; printed normalization gap {:.3}",
        (r.printed - r.closed).abs()
    ))
}

fn c11_verify() -> Outcome {
    let report = run_all(&SweepConfig::default());
    ensure(report.all_passed(), || {
        let bad: Vec<&str> = report.records.iter().filter(|r| !r.passed).map(|r| r.id.as_str()).collect();
        format!("failing records: {bad:?}")
    })?;
    Ok(format!(
        "{} records, {} points, all pass",
        report.totals.records, report.totals.points
    ))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 11] = [
        (1, "value table", Duration::from_secs(1), c1_table),
        (2, "method agreement", Duration::from_secs(10), c2_methods),
        (3, "OEIS A025529", Duration::from_secs(1), c3_oeis),
        (4, "hypergeometric form", Duration::from_secs(5), c4_hypergeometric),
        (5, "Apostol-Bernoulli via y", Duration::from_secs(10), c5_apostol),
        (6, "Bernoulli-Stirling spine", Duration::from_secs(5), c6_spine),
        (7, "Laurent checks", Duration::from_secs(30), c7_laurent),
        (8, "Volkenborn certificates", Duration::from_secs(60), c8_volkenborn),
        (9, "known-typo ledger", Duration::from_secs(10), c9_typos),
        (10, "cosine instance", Duration::from_secs(1), c10_cosine),
        (11, "full verify run", Duration::from_secs(120), c11_verify),
    ];
    let mut failed = Vec::new();
    for (k, name, budget, f) in criteria {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        let dt = t.elapsed();
        let outcome = outcome.and_then(|msg| {
            if dt <= budget {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {dt:.2?}, budget {budget:?}"))
            }
        });
        // straight to stdout so the lines show without --nocapture
        let mut out = std::io::stdout();
        match outcome {
            Ok(msg) => writeln!(out, "criterion {k:>2} PASS  {name} ({dt:.2?}): {msg}").unwrap(),
            Err(msg) => {
                writeln!(out, "criterion {k:>2} FAIL  {name} ({dt:.2?}): {msg}").unwrap();
                failed.push(k);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
