//! A catalog of identities about `y(n, λ)` and its neighbours, each checked
//! exactly over a parameter sweep.
//!
//! Every record states a formula, a sweep and a predicate. Records whose
//! statement fails as commonly written carry the failing form too, with a
//! stored witness where it breaks, and the repaired form that passes.
//!
//! ```
//! use finsum::identities::{run_identity, SweepConfig};
//! let report = run_identity("recurrence-basic", &SweepConfig::default()).unwrap();
//! assert!(report.all_passed());
//! ```

mod catalog;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::Rational;

pub use catalog::catalog;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    PrintedOk,
    PrintedFailsCorrectedOk,
    Conjectural,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::PrintedOk => "printed_ok",
            Status::PrintedFailsCorrectedOk => "printed_fails_corrected_ok",
            Status::Conjectural => "conjectural",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Definition,
    Genfun,
    LogProduct,
    Apostol,
    Harmonic,
    Half,
    Recurrence,
    Differential,
    Zeta,
    Series,
    Volkenborn,
    Numbers,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Definition,
        Family::Genfun,
        Family::LogProduct,
        Family::Apostol,
        Family::Harmonic,
        Family::Half,
        Family::Recurrence,
        Family::Differential,
        Family::Zeta,
        Family::Series,
        Family::Volkenborn,
        Family::Numbers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Definition => "definition",
            Family::Genfun => "genfun",
            Family::LogProduct => "log-product",
            Family::Apostol => "apostol",
            Family::Harmonic => "harmonic",
            Family::Half => "half",
            Family::Recurrence => "recurrence",
            Family::Differential => "differential",
            Family::Zeta => "zeta",
            Family::Series => "series",
            Family::Volkenborn => "volkenborn",
            Family::Numbers => "numbers",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| IdentityError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("no identity with id {0:?}")]
    UnknownId(String),
    #[error("no identity family named {0:?}")]
    UnknownFamily(String),
}

/// The value of λ at one sweep point.
#[derive(Debug, Clone, PartialEq)]
pub enum Lambda {
    Value(Rational),
    /// λ kept as an indeterminate; values are rational functions.
    Symbolic,
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Value(q) => write!(f, "{q}"),
            Lambda::Symbolic => f.write_str("L"),
        }
    }
}

/// One parameter point of a sweep. Unused coordinates are `None`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Point {
    pub n: usize,
    pub m: Option<usize>,
    pub lambda: Option<Lambda>,
    pub x: Option<i64>,
    pub tag: Option<&'static str>,
}

impl Point {
    pub fn new(n: usize) -> Self {
        Point { n, ..Point::default() }
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_lambda(mut self, q: Rational) -> Self {
        self.lambda = Some(Lambda::Value(q));
        self
    }

    pub fn symbolic(mut self) -> Self {
        self.lambda = Some(Lambda::Symbolic);
        self
    }

    pub fn with_x(mut self, x: i64) -> Self {
        self.x = Some(x);
        self
    }

    pub fn with_tag(mut self, tag: &'static str) -> Self {
        self.tag = Some(tag);
        self
    }

    pub(crate) fn m(&self) -> usize {
        self.m.expect("sweep supplies m")
    }

    pub(crate) fn x(&self) -> i64 {
        self.x.expect("sweep supplies x")
    }

    pub(crate) fn lambda(&self) -> &Lambda {
        self.lambda.as_ref().expect("sweep supplies λ")
    }

    pub(crate) fn tag(&self) -> &'static str {
        self.tag.expect("sweep supplies a tag")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(m) = self.m {
            write!(f, ", m={m}")?;
        }
        if let Some(l) = &self.lambda {
            write!(f, ", lambda={l}")?;
        }
        if let Some(x) = self.x {
            write!(f, ", x={x}")?;
        }
        if let Some(t) = self.tag {
            write!(f, ", {t}")?;
        }
        Ok(())
    }
}

/// Which λ values a sweep visits.
#[derive(Debug, Clone, PartialEq)]
pub enum Lambdas {
    None,
    /// The configured sample set.
    Sample,
    Fixed(Vec<Rational>),
    /// Only the symbolic λ.
    SymbolicOnly,
}

/// Parameter ranges of a record.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub n: RangeInclusive<usize>,
    /// Largest `n` a `max_n` override may raise the sweep to.
    pub n_cap: usize,
    pub m: Option<RangeInclusive<usize>>,
    pub lambdas: Lambdas,
    /// Symbolic-λ points are added for `n` up to this bound.
    pub symbolic_n: Option<usize>,
    pub x: Vec<i64>,
    pub tags: Vec<&'static str>,
}

impl Sweep {
    pub fn n(range: RangeInclusive<usize>) -> Self {
        let cap = *range.end();
        Sweep {
            n: range,
            n_cap: cap,
            m: None,
            lambdas: Lambdas::None,
            symbolic_n: None,
            x: Vec::new(),
            tags: Vec::new(),
        }
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.n_cap = cap;
        self
    }

    pub fn m(mut self, range: RangeInclusive<usize>) -> Self {
        self.m = Some(range);
        self
    }

    pub fn sample(mut self) -> Self {
        self.lambdas = Lambdas::Sample;
        self
    }

    pub fn fixed(mut self, values: Vec<Rational>) -> Self {
        self.lambdas = Lambdas::Fixed(values);
        self
    }

    pub fn symbolic(mut self, n_max: usize) -> Self {
        self.symbolic_n = Some(n_max);
        if self.lambdas == Lambdas::None {
            self.lambdas = Lambdas::SymbolicOnly;
        }
        self
    }

    pub fn x(mut self, xs: &[i64]) -> Self {
        self.x = xs.to_vec();
        self
    }

    pub fn tags(mut self, tags: &[&'static str]) -> Self {
        self.tags = tags.to_vec();
        self
    }

    /// All points, in a fixed order: `n`, then `m`, then λ (numeric before
    /// symbolic), then `x`, then tag.
    pub fn points(&self, max_n: Option<usize>, sample: &[Rational]) -> Vec<Point> {
        let hi = match max_n {
            Some(k) => k.min(self.n_cap),
            None => *self.n.end(),
        };
        let sym_hi = self.symbolic_n.map(|s| match max_n {
            Some(k) => s.min(k),
            None => s,
        });
        let numeric: Vec<Option<Lambda>> = match &self.lambdas {
            Lambdas::None => vec![None],
            Lambdas::Sample => sample.iter().cloned().map(|q| Some(Lambda::Value(q))).collect(),
            Lambdas::Fixed(v) => v.iter().cloned().map(|q| Some(Lambda::Value(q))).collect(),
            Lambdas::SymbolicOnly => Vec::new(),
        };
        let ms: Vec<Option<usize>> = match &self.m {
            Some(r) => r.clone().map(Some).collect(),
            None => vec![None],
        };
        let xs: Vec<Option<i64>> = if self.x.is_empty() {
            vec![None]
        } else {
            self.x.iter().copied().map(Some).collect()
        };
        let tags: Vec<Option<&'static str>> = if self.tags.is_empty() {
            vec![None]
        } else {
            self.tags.iter().copied().map(Some).collect()
        };
        let mut out = Vec::new();
        for n in *self.n.start()..=hi {
            let mut lams = numeric.clone();
            if sym_hi.is_some_and(|s| n <= s) {
                lams.push(Some(Lambda::Symbolic));
            }
            for m in &ms {
                for l in &lams {
                    for x in &xs {
                        for t in &tags {
                            out.push(Point { n, m: *m, lambda: l.clone(), x: *x, tag: *t });
                        }
                    }
                }
            }
        }
        out
    }
}

/// Both sides of one comparison, rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eval {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl Eval {
    pub fn compare<T: PartialEq + fmt::Display>(lhs: T, rhs: T) -> Eval {
        let holds = lhs == rhs;
        Eval { lhs: lhs.to_string(), rhs: rhs.to_string(), holds }
    }

    /// The first failing comparison, or the last one if all hold.
    pub fn all<T: PartialEq + fmt::Display>(pairs: impl IntoIterator<Item = (T, T)>) -> Eval {
        let mut last = Eval { lhs: String::new(), rhs: String::new(), holds: true };
        for (a, b) in pairs {
            last = Eval::compare(a, b);
            if !last.holds {
                break;
            }
        }
        last
    }
}

pub type Check = fn(&Point) -> Eval;

/// A form of the statement that is expected to fail, with the point where it
/// visibly does.
pub struct Printed {
    pub statement: &'static str,
    pub check: Check,
    pub witness: Point,
    pub witness_lhs: &'static str,
    pub witness_rhs: &'static str,
}

pub struct IdentityRecord {
    pub id: &'static str,
    pub family: Family,
    /// The statement as usually written.
    pub anchor: &'static str,
    /// The repaired statement, when the usual one fails.
    pub corrected: Option<&'static str>,
    pub status: Status,
    pub sweep: Sweep,
    /// Predicate for the statement that is expected to hold over the sweep.
    pub check: Check,
    pub printed: Option<Printed>,
}

/// Knobs for a run. The default runs every record with its own sweep.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepConfig {
    /// Overrides the upper `n` bound of every selected record, clamped to
    /// each record's cap.
    pub max_n: Option<usize>,
    pub family: Option<Family>,
    /// Replaces the default λ sample set.
    pub lambdas: Option<Vec<Rational>>,
}

/// `{2, 3, -1, 1/2, -1/2, 5/3, -7/4}`.
pub fn sample_lambdas() -> Vec<Rational> {
    [(2, 1), (3, 1), (-1, 1), (1, 2), (-1, 2), (5, 3), (-7, 4)]
        .into_iter()
        .map(|(a, b)| Rational::new(a, b))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Printed,
    Corrected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub form: Form,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    /// `true` for the stored failure of a printed form.
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordOutcome {
    pub id: String,
    pub family: Family,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected: Option<String>,
    pub status: Status,
    /// Number of sweep points evaluated.
    pub swept: usize,
    /// The record behaved as its status says.
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub records: usize,
    pub passed: usize,
    pub failed: usize,
    pub points: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub records: Vec<RecordOutcome>,
    pub totals: Totals,
    pub wall_time_ms: u64,
}

const MAX_REPORTED: usize = 5;

impl IdentityReport {
    fn from_outcomes(records: Vec<RecordOutcome>, started: Instant) -> Self {
        let passed = records.iter().filter(|r| r.passed).count();
        let totals = Totals {
            records: records.len(),
            passed,
            failed: records.len() - passed,
            points: records.iter().map(|r| r.swept).sum(),
        };
        IdentityReport { records, totals, wall_time_ms: started.elapsed().as_millis() as u64 }
    }

    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per record.
    pub fn to_table(&self) -> String {
        let w = self.records.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
        let mut s = format!(
            "{:<w$}  {:<12}  {:<26}  {:>6}  result\n",
            "id", "family", "status", "points"
        );
        for r in &self.records {
            s += &format!(
                "{:<w$}  {:<12}  {:<26}  {:>6}  {}\n",
                r.id,
                r.family.to_string(),
                r.status.to_string(),
                r.swept,
                if r.passed { "pass" } else { "FAIL" }
            );
            for c in &r.counterexamples {
                let form = match c.form {
                    Form::Printed => "printed",
                    Form::Corrected => "corrected",
                };
                let note = if c.expected { "known failure" } else { "unexpected" };
                s += &format!(
                    "    {form} form, {note} at {}: lhs = {}, rhs = {}\n",
                    c.params, c.lhs, c.rhs
                );
            }
        }
        s += &format!(
            "{} records, {} passed, {} failed, {} points, {} ms\n",
            self.totals.records,
            self.totals.passed,
            self.totals.failed,
            self.totals.points,
            self.wall_time_ms
        );
        s
    }
}

fn run_record(rec: &IdentityRecord, config: &SweepConfig, sample: &[Rational]) -> RecordOutcome {
    let points = rec.sweep.points(config.max_n, sample);
    let evals: Vec<(Point, Eval)> = points
        .into_par_iter()
        .map(|p| {
            let e = (rec.check)(&p);
            (p, e)
        })
        .collect();
    let main_form = if rec.printed.is_some() { Form::Corrected } else { Form::Printed };
    let mut counterexamples = Vec::new();
    let mut passed = true;
    if let Some(pr) = &rec.printed {
        let e = (pr.check)(&pr.witness);
        let as_stored = !e.holds && e.lhs == pr.witness_lhs && e.rhs == pr.witness_rhs;
        passed &= as_stored;
        counterexamples.push(Counterexample {
            form: Form::Printed,
            params: pr.witness.to_string(),
            lhs: e.lhs,
            rhs: e.rhs,
            expected: as_stored,
        });
    }
    let failures: Vec<&(Point, Eval)> = evals.iter().filter(|(_, e)| !e.holds).collect();
    passed &= failures.is_empty();
    for (p, e) in failures.into_iter().take(MAX_REPORTED) {
        counterexamples.push(Counterexample {
            form: main_form,
            params: p.to_string(),
            lhs: e.lhs.clone(),
            rhs: e.rhs.clone(),
            expected: false,
        });
    }
    RecordOutcome {
        id: rec.id.to_string(),
        family: rec.family,
        anchor: rec.anchor.to_string(),
        corrected: rec.corrected.map(str::to_string),
        status: rec.status,
        swept: evals.len(),
        passed,
        counterexamples,
    }
}

fn run_records(records: Vec<IdentityRecord>, config: &SweepConfig) -> IdentityReport {
    let started = Instant::now();
    let sample = config.lambdas.clone().unwrap_or_else(sample_lambdas);
    let mut outcomes: Vec<RecordOutcome> =
        records.par_iter().map(|r| run_record(r, config, &sample)).collect();
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    IdentityReport::from_outcomes(outcomes, started)
}

/// Runs one record. The family filter of `config` is ignored.
pub fn run_identity(id: &str, config: &SweepConfig) -> Result<IdentityReport, IdentityError> {
    let rec = catalog()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| IdentityError::UnknownId(id.to_string()))?;
    Ok(run_records(vec![rec], config))
}

/// Runs every record of the selected family, or all of them.
pub fn run_all(config: &SweepConfig) -> IdentityReport {
    let records = catalog()
        .into_iter()
        .filter(|r| config.family.is_none_or(|f| r.family == f))
        .collect();
    run_records(records, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_points_order_and_override() {
        let s = Sweep::n(0..=2).cap(5).fixed(vec![Rational::from(2)]).symbolic(1);
        let pts = s.points(None, &[]);
        let shown: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            [
                "n=0, lambda=2",
                "n=0, lambda=L",
                "n=1, lambda=2",
                "n=1, lambda=L",
                "n=2, lambda=2"
            ]
        );
        assert_eq!(s.points(Some(9), &[]).len(), 6 + 2);
        assert_eq!(s.points(Some(0), &[]).len(), 2);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
