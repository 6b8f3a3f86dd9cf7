//! Batch verification of the series lemmas and theorems over a corpus.
//!
//! Each check evaluates its hypothesis flags first, per index where it is
//! indexed, and only then asserts its conclusion exhaustively. A group gets
//! exactly one record per selected check; per-index flags and metrics are
//! keyed `k{i}:...`.

mod checks;
mod report;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use report::{
    render_json, render_markdown, CorpusReport, Coverage, GroupSummary, Summary, TableSummary,
    VerificationReport, REPORT_FORMAT,
};

use crate::characters::DEFAULT_CHARACTER_CAP;
use crate::corpus::CorpusGroup;
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::group::GroupRep;
use crate::subgroup::SUBSPACE_CAP;

/// Every check id, in report order.
pub const CHECK_IDS: &[&str] = &[
    "sandwich",
    "elem-abelian",
    "def-collapse",
    "v-double-def",
    "char-orthogonality",
    "lewis-index",
    "lewis-D3",
    "H1-k3",
    "lem-hone",
    "lem-classsize-p",
    "lem-quotient-V",
    "lem-classsize-H1",
    "lem-char-vanish",
    "lem-DleE",
    "rem-DleE",
    "rem-H1-DE",
    "lem-DiBound",
    "lem-G/K-iso",
    "cor-GiVi-bound",
    "lem-KleD",
    "cor-DleD",
    "lem-EBound",
    "thm1",
    "thm2a",
    "thm2b",
    "thm2c",
    "thm2d",
    "thm3",
    "macdonald-D3",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedHypothesis,
    SkippedCap,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedHypothesis => "skipped-hypothesis",
            Status::SkippedCap => "skipped-cap",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckRecord {
    pub group_name: String,
    pub check_id: String,
    pub status: Status,
    pub hypothesis_flags: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub metrics: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest group order for which character tables are computed.
    pub char_cap: usize,
    /// Largest number of subspaces enumerated in one elementary abelian section.
    pub section_cap: u128,
    /// Largest number of normal subgroups enumerated below one `G_k`.
    pub normal_cap: usize,
    pub mode: Mode,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            char_cap: DEFAULT_CHARACTER_CAP,
            section_cap: SUBSPACE_CAP,
            normal_cap: 100_000,
            mode: Mode::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Only(BTreeSet<String>),
}

impl Suite {
    /// `all`, or a comma-separated list of check ids.
    pub fn parse(s: &str) -> Result<Suite> {
        if s.trim() == "all" {
            return Ok(Suite::All);
        }
        let mut ids = BTreeSet::new();
        for id in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            if !CHECK_IDS.contains(&id) {
                return Err(Error::Invalid(format!("unknown check id `{id}`")));
            }
            ids.insert(id.to_string());
        }
        if ids.is_empty() {
            return Err(Error::Invalid("empty check selection".into()));
        }
        Ok(Suite::Only(ids))
    }

    pub fn includes(&self, id: &str) -> bool {
        match self {
            Suite::All => true,
            Suite::Only(ids) => ids.contains(id),
        }
    }

    pub fn ids(&self) -> Vec<&'static str> {
        CHECK_IDS
            .iter()
            .copied()
            .filter(|id| self.includes(id))
            .collect()
    }
}

/// Runs the selected checks on one group.
pub fn run_suite(
    name: &str,
    g: &GroupRep,
    suite: &Suite,
    config: &VerifyConfig,
) -> Vec<CheckRecord> {
    let analysis = checks::GroupAnalysis::new(name, g, config);
    suite.ids().into_iter().map(|id| analysis.run(id)).collect()
}

/// Where a corpus came from, for the report header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusSource {
    pub source: String,
    pub max_order: usize,
}

/// Runs the suite over every group (in parallel when `config.mode` allows)
/// and assembles the report. Groups above `max_order` are listed as excluded.
pub fn verify_corpus(
    groups: &[CorpusGroup],
    suite: &Suite,
    config: &VerifyConfig,
    source: CorpusSource,
) -> VerificationReport {
    let (kept, excluded): (Vec<&CorpusGroup>, Vec<&CorpusGroup>) = groups
        .iter()
        .partition(|g| g.group.order() <= source.max_order);
    let results = exec::map(config.mode, &kept, |cg| {
        let analysis = checks::GroupAnalysis::new(&cg.name, &cg.group, config);
        let records: Vec<CheckRecord> =
            suite.ids().into_iter().map(|id| analysis.run(id)).collect();
        (analysis.summary(&cg.tags), records)
    });
    let excluded = excluded.iter().map(|g| g.name.clone()).collect();
    VerificationReport::assemble(source, results, excluded, suite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;
    use crate::testing::{builtin, q8, s3, ut};

    fn record<'a>(records: &'a [CheckRecord], id: &str) -> &'a CheckRecord {
        records.iter().find(|r| r.check_id == id).unwrap()
    }

    fn all(name: &str, g: &GroupRep) -> Vec<CheckRecord> {
        run_suite(name, g, &Suite::All, &VerifyConfig::default())
    }

    #[test]
    fn suite_parsing() {
        assert_eq!(Suite::parse("all").unwrap(), Suite::All);
        let s = Suite::parse("thm1, sandwich").unwrap();
        assert_eq!(s.ids(), ["sandwich", "thm1"]);
        assert!(Suite::parse("thm9").is_err());
        assert!(Suite::parse(",").is_err());
    }

    #[test]
    fn q8_records() {
        let r = all("Q8", &q8());
        assert_eq!(r.len(), CHECK_IDS.len());
        assert_eq!(record(&r, "sandwich").status, Status::Pass);
        let t = record(&r, "thm2a");
        assert_eq!(t.status, Status::SkippedHypothesis);
        assert!(t.hypothesis_flags.values().any(|v| !v));
        assert!(r.iter().all(|x| x.status != Status::Fail), "{r:#?}");
    }

    #[test]
    fn s3_records() {
        let r = all("S3", &s3());
        assert_eq!(record(&r, "sandwich").status, Status::Pass);
        for id in ["lem-quotient-V", "thm1", "thm2c", "lewis-index", "thm3"] {
            assert_eq!(record(&r, id).status, Status::SkippedHypothesis, "{id}");
        }
        assert!(r.iter().all(|x| x.status != Status::Fail));
    }

    #[test]
    fn slice_exercises_lewis_laws() {
        let g = builtin(Family::UnitriangularSlice { p: 2 });
        let r = all("slice", &g);
        for id in [
            "lewis-index",
            "lewis-D3",
            "H1-k3",
            "lem-quotient-V",
            "thm2c",
            "thm2d",
        ] {
            assert_eq!(
                record(&r, id).status,
                Status::Pass,
                "{id}: {:#?}",
                record(&r, id)
            );
        }
        assert!(r.iter().all(|x| x.status != Status::Fail), "{r:#?}");
    }

    #[test]
    fn ut52_reaches_index_four() {
        let r = all("UT(5,2)", &ut(5, 2));
        let t = record(&r, "thm2a");
        assert!(t.hypothesis_flags.contains_key("k4:Vk<Gk"));
        assert!(r.iter().all(|x| x.status != Status::Fail), "{r:#?}");
    }

    #[test]
    fn skipped_records_carry_a_false_flag() {
        for g in [q8(), s3(), ut(3, 3)] {
            for rec in all("g", &g) {
                if rec.status == Status::SkippedHypothesis {
                    assert!(rec.hypothesis_flags.values().any(|v| !v), "{rec:?}");
                }
                if rec.status == Status::Fail {
                    assert!(rec.witness.is_some());
                }
            }
        }
    }

    #[test]
    fn char_cap_downgrades_to_skipped_cap() {
        let config = VerifyConfig {
            char_cap: 4,
            ..VerifyConfig::default()
        };
        let r = run_suite(
            "Q8",
            &q8(),
            &Suite::parse("v-double-def,char-orthogonality").unwrap(),
            &config,
        );
        assert!(r.iter().all(|x| x.status == Status::SkippedCap));
    }
}
