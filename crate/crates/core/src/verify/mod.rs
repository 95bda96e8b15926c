//! Named verification suites with a stable JSON report.
//!
//! A check is run for a range of sizes; every `(check, n)` pair is an
//! independent cell and cells are evaluated on the rayon pool. Results
//! come back in a fixed order, so equal inputs give byte-identical
//! reports when timings are off.

mod checks;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Kind;
use crate::wachs::{ENUM_CAP_A, ENUM_CAP_B};

pub const REPORT_VERSION: u32 = 1;

pub const THEOREMS: &[&str] = &[
    "graded-A",
    "graded-B",
    "order-A",
    "order-B",
    "covers-A",
    "covers-B",
    "mobius-A",
    "mobius-B",
    "charpoly-A",
    "charpoly-B",
    "rankpoly-A",
    "rankpoly-B",
    "weakiso-A",
    "weakiso-B",
    "selfdual-A",
    "statdist-A",
    "gi-stabilizer",
    "nongraded-remark",
    "nongraded-weakL",
];

pub const CONJECTURES: &[&str] = &["mobiusA", "mobiusB", "latticeAodd"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub kind: Kind,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(checks: Vec<CheckResult>) -> Self {
        Report { version: REPORT_VERSION, checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }
}

/// Largest sizes a run may touch, per kind and for the left-order lattice
/// sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub a: usize,
    pub b: usize,
    pub lattice: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits { a: 8, b: 6, lattice: 9 };
    pub const UNSAFE: Limits = Limits { a: ENUM_CAP_A, b: ENUM_CAP_B, lattice: ENUM_CAP_A };

    fn cap(&self, id: &str, kind: Kind) -> usize {
        match (id, kind) {
            ("latticeAodd", _) => self.lattice,
            (_, Kind::A) => self.a,
            (_, Kind::B) => self.b,
        }
    }
}

/// Options shared by every run.
#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub limits: Limits,
    /// Record wall-clock time per cell; otherwise `millis` is 0.
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { limits: Limits::DEFAULT, timings: false }
    }
}

/// Outcome of one cell: `None` on success, otherwise a witness.
type Outcome = Result<Option<String>>;

/// The `(kind, n)` cells a check covers up to `max_n`, and its runner.
fn plan(id: &str, max_n: usize) -> Option<(Vec<(Kind, usize)>, fn(Kind, usize) -> Outcome)> {
    let a = |from: usize| (from..=max_n).map(|n| (Kind::A, n)).collect::<Vec<_>>();
    let b = |from: usize| (from..=max_n).map(|n| (Kind::B, n)).collect::<Vec<_>>();
    let even = |v: Vec<(Kind, usize)>| v.into_iter().filter(|&(_, n)| n % 2 == 0).collect::<Vec<_>>();
    let odd = |v: Vec<(Kind, usize)>| v.into_iter().filter(|&(_, n)| n % 2 == 1).collect::<Vec<_>>();
    let at = |kind: Kind, n: usize| if n <= max_n { vec![(kind, n)] } else { vec![] };
    Some(match id {
        "graded-A" => (a(1), checks::graded),
        "graded-B" => (b(1), checks::graded),
        "order-A" => (a(1), checks::order),
        "order-B" => (b(1), checks::order),
        "covers-A" => (a(1), checks::covers),
        "covers-B" => (b(1), checks::covers),
        "mobius-A" => (a(1), checks::mobius),
        "mobius-B" => (b(2), checks::mobius),
        "charpoly-A" => (a(1), checks::charpoly),
        "charpoly-B" => (b(2), checks::charpoly),
        "rankpoly-A" => (a(1), checks::rankpoly),
        "rankpoly-B" => (b(1), checks::rankpoly),
        "weakiso-A" => (a(1), checks::weakiso),
        "weakiso-B" => (b(1), checks::weakiso),
        "selfdual-A" => (a(1), checks::selfdual),
        "statdist-A" => (even(a(2)), checks::statdist),
        "gi-stabilizer" => (even(a(2)), checks::gi_stabilizer),
        "nongraded-remark" => (at(Kind::A, 6), checks::nongraded_remark),
        "nongraded-weakL" => ([at(Kind::B, 3), at(Kind::A, 5)].concat(), checks::nongraded_weak_left),
        "mobiusA" => (a(1), checks::mobius_values),
        "mobiusB" => (b(1), checks::mobius_values),
        "latticeAodd" => (odd(a(1)), checks::left_lattice),
        _ => return None,
    })
}

fn unknown(id: &str) -> Error {
    Error::Unsupported(format!("unknown check id {id:?}"))
}

/// Runs one check for every applicable size up to `max_n`.
pub fn run_check(id: &str, max_n: usize, opts: RunOptions) -> Result<Vec<CheckResult>> {
    let (cells, runner) = plan(id, max_n).ok_or_else(|| unknown(id))?;
    for &(kind, n) in &cells {
        let cap = opts.limits.cap(id, kind);
        if n > cap {
            return Err(Error::CapExceeded { kind: kind.letter(), n, cap });
        }
    }
    cells
        .into_par_iter()
        .map(|(kind, n)| {
            let start = Instant::now();
            let witness = runner(kind, n)?;
            Ok(CheckResult {
                id: id.to_string(),
                kind,
                n,
                status: if witness.is_none() { Status::Pass } else { Status::Fail },
                witness,
                millis: if opts.timings { start.elapsed().as_millis() as u64 } else { 0 },
            })
        })
        .collect()
}

/// Default sweep range of a check under the given limits.
pub fn default_max_n(id: &str, limits: Limits) -> usize {
    match id {
        "latticeAodd" => limits.lattice,
        _ if id.ends_with('B') => limits.b,
        _ => limits.a,
    }
}

/// Every theorem and conjecture at its default range.
pub fn full_report(opts: RunOptions) -> Result<Report> {
    let mut checks = Vec::new();
    for id in THEOREMS.iter().chain(CONJECTURES) {
        checks.extend(run_check(id, default_max_n(id, opts.limits), opts)?);
    }
    Ok(Report::new(checks))
}
