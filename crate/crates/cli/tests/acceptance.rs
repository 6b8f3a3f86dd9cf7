//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always reach the output; exits non-zero if any criterion fails.
//!
//! Every comparison is exact: group orders, subgroup element sets and
//! cyclotomic character values are integers, so no tolerance is involved.

#[path = "../../core/tests/support/oracle.rs"]
mod oracle;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;
use vseries::characters::{character_table, v_from_characters};
use vseries::corpus::{builtin_corpus, CorpusGroup};
use vseries::series::{lower_central_series, vanishing_off_subgroup};
use vseries::subgroup::{center, commutator_subgroup, conjugacy_classes, derived_subgroup};
use vseries::{Limits, SubgroupSet};

/// Wall-clock budget for the full builtin run.
const TIME_BUDGET: Duration = Duration::from_secs(300);
/// Largest order for the character-table criteria.
const CHAR_ORDER: usize = 512;
/// Largest order for the oracle criterion.
const ORACLE_ORDER: usize = 16;

type Verdict = Result<String, String>;

struct Run {
    report: Value,
    bytes: Vec<u8>,
    elapsed: Duration,
}

fn run_builtin() -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args([
            "--corpus",
            "builtin",
            "--max-order",
            "1024",
            "--format",
            "json",
        ])
        .output()
        .expect("verify runs");
    let elapsed = start.elapsed();
    assert!(
        out.status.code().is_some_and(|c| c <= 1),
        "verify failed to run: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = serde_json::from_slice(&out.stdout).expect("report is JSON");
    Run {
        report,
        bytes: out.stdout,
        elapsed,
    }
}

fn records<'a>(report: &'a Value, ids: &[&str]) -> Vec<&'a Value> {
    report["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| ids.contains(&r["checkId"].as_str().unwrap()))
        .collect()
}

fn count(recs: &[&Value], status: &str) -> usize {
    recs.iter().filter(|r| r["status"] == status).count()
}

/// Zero failures among `ids`; returns per-id pass counts.
fn no_failures(report: &Value, ids: &[&str]) -> Verdict {
    let recs = records(report, ids);
    let failed: Vec<String> = recs
        .iter()
        .filter(|r| r["status"] == "fail")
        .map(|r| {
            format!(
                "{}/{}: {}",
                r["groupName"].as_str().unwrap(),
                r["checkId"].as_str().unwrap(),
                r["witness"]
            )
        })
        .collect();
    if !failed.is_empty() {
        return Err(format!(
            "{} failing records: {}",
            failed.len(),
            failed.join("; ")
        ));
    }
    let passes: Vec<String> = ids
        .iter()
        .map(|id| format!("{id} {}", count(&records(report, &[id]), "pass")))
        .collect();
    Ok(format!("0 fail; passes: {}", passes.join(", ")))
}

fn set(s: &SubgroupSet) -> BTreeSet<usize> {
    s.sorted_elements().into_iter().collect()
}

fn find<'a>(groups: &'a [CorpusGroup], name: &str) -> &'a CorpusGroup {
    groups
        .iter()
        .find(|g| g.name == name)
        .unwrap_or_else(|| panic!("{name} missing from the corpus"))
}

fn character_exactness(run: &Run) -> Verdict {
    let groups = builtin_corpus(CHAR_ORDER, &Limits::default());
    for cg in &groups {
        let t = character_table(&cg.group, CHAR_ORDER).map_err(|e| format!("{}: {e}", cg.name))?;
        t.check_orthogonality()
            .map_err(|e| format!("{}: {e}", cg.name))?;
        let squares: u64 = t.degrees.iter().map(|d| d * d).sum();
        if squares != cg.group.order() as u64 {
            return Err(format!("{}: sum of squared degrees {squares}", cg.name));
        }
    }
    if run.elapsed > TIME_BUDGET {
        return Err(format!("full run took {:?}", run.elapsed));
    }
    Ok(format!(
        "{} groups of order <= {CHAR_ORDER}; full builtin run {:.1?}",
        groups.len(),
        run.elapsed
    ))
}

fn double_definition() -> Verdict {
    let groups = builtin_corpus(CHAR_ORDER, &Limits::default());
    for cg in &groups {
        let g = &cg.group;
        let chars = v_from_characters(g, CHAR_ORDER).map_err(|e| format!("{}: {e}", cg.name))?;
        let classes = vanishing_off_subgroup(g);
        if chars != classes {
            return Err(format!(
                "{}: {:?} vs {:?}",
                cg.name,
                set(&chars),
                set(&classes)
            ));
        }
        if g.is_abelian() && !classes.is_trivial() {
            return Err(format!("{}: abelian with V nontrivial", cg.name));
        }
    }
    let s3 = vanishing_off_subgroup(&find(&groups, "S3").group);
    if s3.order() != 3 {
        return Err(format!("S3: |V| = {}", s3.order()));
    }
    for name in ["quaternion(8)", "dihedral(8)"] {
        let g = &find(&groups, name).group;
        let v = vanishing_off_subgroup(g);
        if v != center(g) || v.order() != 2 {
            return Err(format!("{name}: V = {:?}", set(&v)));
        }
    }
    Ok(format!(
        "{} groups agree; S3, Q8, D8 and abelian examples as expected",
        groups.len()
    ))
}

fn sandwich(run: &Run) -> Verdict {
    let groups = run.report["corpus"]["groupCount"].as_u64().unwrap() as usize;
    let passes = count(&records(&run.report, &["sandwich"]), "pass");
    if passes != groups {
        return Err(format!("sandwich passes on {passes} of {groups} groups"));
    }
    no_failures(&run.report, &["sandwich", "elem-abelian"])
}

fn lewis(run: &Run) -> Verdict {
    let ids = ["lewis-index", "lewis-D3", "H1-k3"];
    let verdict = no_failures(&run.report, &ids)?;
    for id in ids {
        if count(&records(&run.report, &[id]), "pass") == 0 {
            return Err(format!("{id} is vacuous on the corpus"));
        }
    }
    Ok(verdict)
}

fn lemmas(run: &Run) -> Verdict {
    no_failures(
        &run.report,
        &[
            "lem-hone",
            "lem-classsize-p",
            "lem-quotient-V",
            "lem-classsize-H1",
            "lem-char-vanish",
            "lem-DleE",
            "lem-DiBound",
            "lem-G/K-iso",
            "cor-GiVi-bound",
            "lem-KleD",
            "cor-DleD",
            "lem-EBound",
        ],
    )
}

fn theorems(run: &Run) -> Verdict {
    let ids = ["thm1", "thm2a", "thm2b", "thm2c", "thm2d"];
    let verdict = no_failures(&run.report, &ids)?;
    let ut52 = run.report["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["groupName"] == "UT(5,2)" && r["checkId"] == "thm2a")
        .ok_or("UT(5,2) missing from the report")?;
    if ut52["hypothesisFlags"].get("k4:Vk<Gk").is_none() {
        return Err("UT(5,2) has no k = 4 hypothesis flags".into());
    }
    for id in ids {
        if run.report["coverage"].get(id).is_none() {
            return Err(format!("no coverage entry for {id}"));
        }
    }
    Ok(verdict)
}

fn camina(run: &Run) -> Verdict {
    let groups = run.report["corpus"]["groups"].as_array().unwrap();
    let camina_of = |name: &str| {
        groups
            .iter()
            .find(|g| g["name"] == name)
            .map(|g| g["camina"]["isCamina"] == true)
            .unwrap_or(false)
    };
    for name in [
        "S3",
        "quaternion(8)",
        "dihedral(8)",
        "extraspecial(3^(1+2),exp=3)",
        "extraspecial(3^(1+2),exp=9)",
        "extraspecial(5^(1+2),exp=5)",
        "extraspecial(5^(1+2),exp=25)",
    ] {
        if !camina_of(name) {
            return Err(format!("{name} not detected as Camina"));
        }
    }
    let verdict = no_failures(&run.report, &["thm3", "macdonald-D3"])?;
    let class3 = groups
        .iter()
        .filter(|g| g["camina"]["class3"] == true)
        .count();
    let vacuous: Vec<&str> = run.report["vacuous"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(Value::as_str)
        .collect();
    if class3 == 0 {
        if !vacuous.contains(&"thm3: vacuous") {
            return Err(
                "no Camina class-3 group, and the report does not flag thm3 as vacuous".into(),
            );
        }
        return Ok(format!(
            "{verdict}; no Camina class-3 group in the corpus, report flags \"thm3: vacuous\""
        ));
    }
    Ok(format!("{verdict}; {class3} Camina class-3 groups"))
}

fn determinism(run: &Run) -> Verdict {
    let again = run_builtin();
    if again.bytes != run.bytes {
        return Err("two runs differ".into());
    }
    Ok(format!(
        "two runs byte-identical ({} bytes)",
        run.bytes.len()
    ))
}

fn oracle_equivalence() -> Verdict {
    let groups = builtin_corpus(ORACLE_ORDER, &Limits::default());
    for cg in &groups {
        let g = &cg.group;
        let naive = oracle::Naive::new(g);
        let classes: BTreeSet<BTreeSet<usize>> = conjugacy_classes(g)
            .classes
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        if classes != naive.classes() {
            return Err(format!("{}: conjugacy classes differ", cg.name));
        }
        if set(&center(g)) != naive.center() {
            return Err(format!("{}: centers differ", cg.name));
        }
        let derived = derived_subgroup(g);
        if set(&derived) != naive.derived() {
            return Err(format!("{}: derived subgroups differ", cg.name));
        }
        let second = commutator_subgroup(g, &derived, &derived);
        if set(&second) != naive.commutator_subgroup(&set(&derived), &set(&derived)) {
            return Err(format!("{}: [G', G'] differs", cg.name));
        }
        for w in lower_central_series(g).windows(2) {
            if set(&w[1]) != naive.commutator_subgroup(&set(&w[0]), &naive.whole()) {
                return Err(format!("{}: lower central series differs", cg.name));
            }
        }
        if set(&vanishing_off_subgroup(g)) != naive.vanishing_off() {
            return Err(format!("{}: V(G) differs", cg.name));
        }
    }
    Ok(format!(
        "{} groups of order <= {ORACLE_ORDER}",
        groups.len()
    ))
}

fn main() {
    let run = run_builtin();
    let results: Vec<(u32, &str, Verdict)> = vec![
        (1, "character-table exactness", character_exactness(&run)),
        (2, "V(G) double definition", double_definition()),
        (3, "sandwich and section structure", sandwich(&run)),
        (4, "Lewis index laws", lewis(&run)),
        (5, "lemma suite", lemmas(&run)),
        (6, "theorem suite", theorems(&run)),
        (7, "Camina checks", camina(&run)),
        (8, "determinism", determinism(&run)),
        (9, "oracle equivalence", oracle_equivalence()),
    ];
    let mut failed = 0;
    for (n, title, verdict) in &results {
        match verdict {
            Ok(detail) => println!("criterion {n} ({title}): PASS: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n} ({title}): FAIL: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
