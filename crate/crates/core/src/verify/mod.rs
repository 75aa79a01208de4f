//! Catalog-driven identity checks over the exact model.
//!
//! Each [`IdentityCase`] evaluates one identity over its full index range
//! and reports a [`Status`]. Suites group cases; [`run_suite`] evaluates a
//! suite on a worker pool and returns a [`VerificationReport`] whose
//! rendering is independent of timing and worker count.

mod check;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::Model;

pub use check::show as render_scalar;
pub use check::{
    compare_families, compare_tensors, delta_product, expect_constant, expect_true, family_sum, Check, Witness,
};
pub use suites::catalog;

type Checker = Box<dyn Fn(&Model) -> Result<Check> + Send + Sync>;

/// One identity with its checker.
pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    /// Index classes the identity ranges over, e.g. `"i,j,k ∈ 1..14"`.
    pub ranges: &'static str,
    checker: Checker,
}

impl IdentityCase {
    pub fn new(
        id: &'static str,
        description: &'static str,
        ranges: &'static str,
        checker: impl Fn(&Model) -> Result<Check> + Send + Sync + 'static,
    ) -> Self {
        Self {
            id,
            description,
            ranges,
            checker: Box::new(checker),
        }
    }

    pub fn run(&self, model: &Model) -> CaseOutcome {
        let (status, detail, notes) = match (self.checker)(model) {
            Ok(c) => (c.status, c.detail, c.notes),
            Err(e) => (Status::Error(e.to_string()), None, Vec::new()),
        };
        CaseOutcome {
            id: self.id.to_string(),
            status,
            detail,
            notes,
        }
    }
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("description", &self.description)
            .field("ranges", &self.ranges)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// For existence checks the witness is the violating tuple that was found.
    Pass(Option<Witness>),
    Fail(Option<Witness>),
    Error(String),
}

impl Status {
    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOutcome {
    pub id: String,
    pub status: Status,
    /// Extra `key=value` text such as the measured constant.
    pub detail: Option<String>,
    pub notes: Vec<String>,
}

impl CaseOutcome {
    pub fn render(&self) -> String {
        let mut line = format!("CASE {} ", self.id);
        let witness = match &self.status {
            Status::Pass(w) => {
                line.push_str("PASS");
                w.as_ref()
            }
            Status::Fail(w) => {
                line.push_str("FAIL");
                w.as_ref()
            }
            Status::Error(msg) => {
                line.push_str("FAIL error=");
                line.push_str(&msg.replace(char::is_whitespace, "_"));
                None
            }
        };
        if let Some(w) = witness {
            line.push(' ');
            line.push_str(&w.to_string());
        }
        if let Some(d) = &self.detail {
            line.push(' ');
            line.push_str(d);
        }
        for n in &self.notes {
            line.push_str("\nNOTE ");
            line.push_str(&self.id);
            line.push(' ');
            line.push_str(n);
        }
        line
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseOutcome>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.status.is_pass()).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn case(&self, id: &str) -> Option<&CaseOutcome> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.cases.extend(other.cases);
        self.elapsed += other.elapsed;
        self
    }

    /// Deterministic text: one `CASE` line per case, `NOTE` lines after the
    /// case they belong to, then a `TOTAL` line. Timing is not included.
    pub fn render(&self) -> String {
        let mut out = format!("SUITE {}\n", self.suite);
        for c in &self.cases {
            out.push_str(&c.render());
            out.push('\n');
        }
        out.push_str(&format!(
            "TOTAL cases={} passed={} failed={}\n",
            self.cases.len(),
            self.passed(),
            self.failed()
        ));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Basis,
    Octonion,
    ProductLaw,
    Bilinear,
    Lemmas,
    Completeness,
    Trilinear,
    SecondClass,
    Casimir,
    Invariants,
    All,
}

impl Suite {
    /// Every concrete suite in `all` order.
    pub const EACH: [Suite; 10] = [
        Suite::Basis,
        Suite::Octonion,
        Suite::ProductLaw,
        Suite::Bilinear,
        Suite::Lemmas,
        Suite::Completeness,
        Suite::Trilinear,
        Suite::SecondClass,
        Suite::Casimir,
        Suite::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Basis => "basis",
            Suite::Octonion => "octonion",
            Suite::ProductLaw => "product-law",
            Suite::Bilinear => "bilinear",
            Suite::Lemmas => "lemmas",
            Suite::Completeness => "completeness",
            Suite::Trilinear => "trilinear",
            Suite::SecondClass => "second-class",
            Suite::Casimir => "casimir",
            Suite::Invariants => "invariants",
            Suite::All => "all",
        }
    }

    pub fn cases(self) -> Vec<IdentityCase> {
        match self {
            Suite::All => Suite::EACH.iter().flat_map(|s| catalog(*s)).collect(),
            s => catalog(s),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Runs cases on `workers` threads (at least one). Case order in the report
/// is catalog order.
pub fn run_cases(name: &str, cases: &[IdentityCase], model: &Model, workers: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::consistency(format!("worker pool: {e}")))?;
    let outcomes = pool.install(|| cases.par_iter().map(|c| c.run(model)).collect());
    Ok(VerificationReport {
        suite: name.to_string(),
        cases: outcomes,
        elapsed: start.elapsed(),
    })
}

pub fn run_suite(suite: Suite, model: &Model, workers: usize) -> Result<VerificationReport> {
    run_cases(suite.name(), &suite.cases(), model, workers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn case_ids_are_unique() {
        let all = Suite::All.cases();
        let mut ids: Vec<&str> = all.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn render_format() {
        let c = CaseOutcome {
            id: "X".into(),
            status: Status::Fail(Some(Witness::new(&[0, 2], "1", "0"))),
            detail: None,
            notes: vec!["printed form differs".into()],
        };
        assert_eq!(
            c.render(),
            "CASE X FAIL tuple=(1,3) lhs=1 rhs=0\nNOTE X printed form differs"
        );
    }
}
