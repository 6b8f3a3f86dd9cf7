//! Report assembly and the JSON and markdown renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use super::{CheckRecord, CorpusSource, Status, Suite};
use crate::error::{Error, Result};
use crate::series::CaminaData;

pub const REPORT_FORMAT: u32 = 1;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableSummary {
    pub prime: u64,
    pub conductor: u32,
    pub degrees: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupSummary {
    pub name: String,
    pub tags: Vec<String>,
    pub order: usize,
    pub class_count: usize,
    pub nilpotence_class: Option<usize>,
    pub prime: Option<u64>,
    pub section_prime: Option<u64>,
    pub lower_orders: Vec<usize>,
    pub vanishing_orders: Vec<usize>,
    pub y_orders: BTreeMap<usize, usize>,
    pub d_orders: BTreeMap<usize, usize>,
    pub e_orders: BTreeMap<usize, usize>,
    #[serde(rename = "indexGV1")]
    pub index_g_v1: usize,
    #[serde(rename = "indexGD3")]
    pub index_g_d3: Option<usize>,
    pub n: Option<u32>,
    pub camina: CaminaData,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character_table: Option<TableSummary>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped_hypothesis: usize,
    pub skipped_cap: usize,
    pub total: usize,
}

impl Summary {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::SkippedHypothesis => self.skipped_hypothesis += 1,
            Status::SkippedCap => self.skipped_cap += 1,
        }
        self.total += 1;
    }
}

/// Per-check hypothesis coverage: how many groups reached the conclusion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Coverage {
    #[serde(flatten)]
    pub counts: Summary,
    /// No group satisfied the hypotheses, so nothing was verified.
    pub vacuous: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusReport {
    #[serde(flatten)]
    pub source: CorpusSource,
    pub group_count: usize,
    pub excluded: Vec<String>,
    pub groups: Vec<GroupSummary>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub report_format: u32,
    pub tool_version: String,
    pub corpus: CorpusReport,
    pub coverage: BTreeMap<String, Coverage>,
    pub vacuous: Vec<String>,
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub(crate) fn assemble(
        source: CorpusSource,
        results: Vec<(GroupSummary, Vec<CheckRecord>)>,
        excluded: Vec<String>,
        suite: &Suite,
    ) -> Self {
        let mut groups = Vec::new();
        let mut records = Vec::new();
        for (summary, recs) in results {
            groups.push(summary);
            records.extend(recs);
        }
        groups.sort_by(|a, b| a.name.cmp(&b.name));
        records.sort_by(|a, b| (&a.group_name, &a.check_id).cmp(&(&b.group_name, &b.check_id)));
        let mut coverage: BTreeMap<String, Coverage> = suite
            .ids()
            .into_iter()
            .map(|id| (id.to_string(), Coverage::default()))
            .collect();
        let mut summary = Summary::default();
        for r in &records {
            summary.add(r.status);
            coverage
                .entry(r.check_id.clone())
                .or_default()
                .counts
                .add(r.status);
        }
        let mut vacuous = Vec::new();
        for id in suite.ids() {
            let c = coverage
                .get_mut(id)
                .expect("every selected id has an entry");
            c.vacuous = c.counts.pass + c.counts.fail == 0;
            if c.vacuous {
                vacuous.push(format!("{id}: vacuous"));
            }
        }
        VerificationReport {
            report_format: REPORT_FORMAT,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            corpus: CorpusReport {
                group_count: groups.len(),
                source,
                excluded,
                groups,
            },
            coverage,
            vacuous,
            summary,
            records,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn record(&self, group: &str, check: &str) -> Option<&CheckRecord> {
        self.records
            .iter()
            .find(|r| r.group_name == group && r.check_id == check)
    }

    /// Writes the rendering to `path`.
    pub fn emit(&self, markdown: bool, path: &Path) -> Result<()> {
        let text = if markdown {
            render_markdown(self)
        } else {
            render_json(self)
        };
        std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

pub fn render_json(report: &VerificationReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn render_markdown(report: &VerificationReport) -> String {
    let mut out = String::new();
    let c = &report.corpus;
    let s = &report.summary;
    let _ = writeln!(out, "# Verification report\n");
    let _ = writeln!(
        out,
        "Tool version {}, corpus `{}`, max order {}, {} groups.\n",
        report.tool_version, c.source.source, c.source.max_order, c.group_count
    );
    let _ = writeln!(
        out,
        "Records: {} total, {} pass, {} fail, {} skipped-hypothesis, {} skipped-cap.\n",
        s.total, s.pass, s.fail, s.skipped_hypothesis, s.skipped_cap
    );
    if !c.excluded.is_empty() {
        let _ = writeln!(
            out,
            "Excluded above the order limit: {}.\n",
            c.excluded.join(", ")
        );
    }

    let _ = writeln!(out, "## Groups\n");
    for g in &c.groups {
        let _ = writeln!(
            out,
            "### {}\n\norder {}, {} classes, nilpotence class {}, |G:V_1| = {}, |G:D_3| = {}, n = {}, Camina {}\n",
            g.name,
            g.order,
            g.class_count,
            opt(g.nilpotence_class),
            g.index_g_v1,
            opt(g.index_g_d3),
            opt(g.n),
            if g.camina.is_camina { "yes" } else { "no" }
        );
        let _ = writeln!(
            out,
            "| i | \\|G_i\\| | \\|V_i\\| | \\|Y_i\\| | \\|D_i\\| | \\|E_i\\| |"
        );
        let _ = writeln!(out, "|---|---|---|---|---|---|");
        let last_companion = g.y_orders.keys().next_back().copied().unwrap_or(0);
        let rows = g
            .lower_orders
            .len()
            .max(g.vanishing_orders.len())
            .max(last_companion);
        for i in 1..=rows {
            let term = |v: &[usize]| v[i.min(v.len()) - 1];
            let _ = writeln!(
                out,
                "| {i} | {} | {} | {} | {} | {} |",
                term(&g.lower_orders),
                term(&g.vanishing_orders),
                opt(g.y_orders.get(&i)),
                opt(g.d_orders.get(&i)),
                opt(g.e_orders.get(&i))
            );
        }
        out.push('\n');
    }

    let _ = writeln!(out, "## Coverage\n");
    let _ = writeln!(
        out,
        "| check | pass | fail | skipped-hypothesis | skipped-cap |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|");
    for (id, cov) in &report.coverage {
        let k = &cov.counts;
        let _ = writeln!(
            out,
            "| {id} | {} | {} | {} | {} |",
            k.pass, k.fail, k.skipped_hypothesis, k.skipped_cap
        );
    }
    out.push('\n');
    if !report.vacuous.is_empty() {
        let _ = writeln!(out, "## Vacuous checks\n");
        for v in &report.vacuous {
            let _ = writeln!(out, "- {v}");
        }
        out.push('\n');
    }

    let failures: Vec<&CheckRecord> = report
        .records
        .iter()
        .filter(|r| r.status == Status::Fail)
        .collect();
    let _ = writeln!(out, "## Failures\n");
    if failures.is_empty() {
        let _ = writeln!(out, "None.");
    }
    for r in failures {
        let w = r
            .witness
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default();
        let _ = writeln!(out, "- {} / {}: `{}`", r.group_name, r.check_id, w);
    }
    out
}
