use std::fmt::Display;

use serde::Serialize;

use crate::spectra::{BundleParams, KTypeFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedDegenerate,
}

/// Both sides of a violated identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
}

/// One grid point of one suite. The status aggregates every sub-identity
/// evaluated at the point; a failure carries the first violated one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite: &'static str,
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub a: i64,
    pub family: Option<KTypeFamily>,
    pub jp: Option<i64>,
    pub j: Option<i64>,
    pub r: i64,
    pub status: Status,
    /// Number of sub-identities evaluated.
    pub evaluated: u32,
    /// Number of sub-identities skipped as undefined.
    pub skipped: u32,
    pub identity: Option<String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    /// Extra data, e.g. the proportionality constant of a group.
    pub note: Option<String>,
}

/// Records of one suite in grid order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CheckReport {
    pub suite: &'static str,
    pub records: Vec<CheckRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped_degenerate: usize,
    /// Total sub-identities evaluated over all points.
    pub identities: u64,
}

impl CheckReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::SkippedDegenerate => s.skipped_degenerate += 1,
            }
            s.identities += r.evaluated as u64;
        }
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Accumulates sub-identities at one grid point.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    evaluated: u32,
    skipped: u32,
    witness: Option<Witness>,
    note: Option<String>,
}

impl Tally {
    pub fn check<T: PartialEq + Display>(&mut self, identity: &str, lhs: &T, rhs: &T) {
        self.evaluated += 1;
        if lhs != rhs && self.witness.is_none() {
            self.witness = Some(Witness {
                identity: identity.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Records a boolean condition with a textual description of both sides.
    pub fn check_that(&mut self, identity: &str, ok: bool, lhs: impl Display, rhs: impl Display) {
        self.evaluated += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(Witness {
                identity: identity.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn note(&mut self, note: String) {
        self.note = Some(note);
    }

    pub fn finish(
        self,
        suite: &'static str,
        params: &BundleParams,
        family: Option<KTypeFamily>,
        labels: Option<(i64, i64)>,
        r: i64,
    ) -> CheckRecord {
        let status = if self.witness.is_some() {
            Status::Fail
        } else if self.evaluated == 0 {
            Status::SkippedDegenerate
        } else {
            Status::Pass
        };
        let (identity, lhs, rhs) = match self.witness {
            Some(w) => (Some(w.identity), Some(w.lhs), Some(w.rhs)),
            None => (None, None, None),
        };
        CheckRecord {
            suite,
            p: params.p,
            q: params.q,
            k: params.k,
            a: params.a,
            family,
            jp: labels.map(|l| l.0),
            j: labels.map(|l| l.1),
            r,
            status,
            evaluated: self.evaluated,
            skipped: self.skipped,
            identity,
            lhs,
            rhs,
            note: self.note,
        }
    }
}
