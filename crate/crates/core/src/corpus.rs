//! Test population: the builtin corpus and JSON group files.
//!
//! A group file is one JSON object:
//!
//! ```json
//! {"format": 1, "name": "q8", "kind": "builtin",
//!  "family": "quaternion", "params": {"order": 8},
//!  "expected": {"order": 8, "classCount": 5, "nilpotenceClass": 2}}
//! ```
//!
//! `kind` is one of `permutation` (`degree`, `generators` as 0-based image
//! arrays), `cayley` (`table`, row-major), `unitriangular` (`n`, `p`, and
//! optionally `generators` as above-diagonal entries, row-major, for a
//! subgroup) or `builtin` (`family`, `params`). A manifest lists files
//! relative to itself: `{"format": 1, "groups": [{"path": ..., "tags": [...]}]}`.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exec;
use crate::group::builtin::{build_builtin, ExtraspecialExponent, Family};
use crate::group::{GroupRep, Limits};
use crate::series::lower_central_series;
use crate::subgroup::conjugacy_classes;

#[derive(Clone, Debug)]
pub struct CorpusGroup {
    pub name: String,
    pub tags: Vec<String>,
    pub group: GroupRep,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FileKind {
    Permutation,
    Cayley,
    Unitriangular,
    Builtin,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct GroupFile {
    format: u32,
    name: String,
    kind: FileKind,
    degree: Option<usize>,
    generators: Option<Vec<Vec<u64>>>,
    table: Option<Vec<usize>>,
    n: Option<usize>,
    p: Option<u32>,
    family: Option<String>,
    params: Option<Value>,
    expected: Option<ExpectedFacts>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct ExpectedFacts {
    order: Option<usize>,
    class_count: Option<usize>,
    /// An integer, or the string "not nilpotent".
    nilpotence_class: Option<Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    format: u32,
    groups: Vec<ManifestEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestEntry {
    path: PathBuf,
    #[serde(default)]
    tags: Vec<String>,
}

fn parse_error(path: &Path, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn required<T>(value: Option<T>, field: &str, kind: &str, path: &Path) -> Result<T> {
    value.ok_or_else(|| {
        parse_error(
            path,
            format!("field `{field}` is required for kind `{kind}`"),
        )
    })
}

fn nilpotence_class(g: &GroupRep) -> Option<usize> {
    let lower = lower_central_series(g);
    lower
        .last()
        .filter(|t| t.is_trivial())
        .map(|_| lower.len() - 1)
}

fn check_expected(name: &str, g: &GroupRep, facts: &ExpectedFacts, path: &Path) -> Result<()> {
    let mismatch = |fact, actual: String, expected: String| Error::ExpectedMismatch {
        name: name.to_string(),
        fact,
        actual,
        expected,
    };
    if let Some(order) = facts.order {
        if order != g.order() {
            return Err(mismatch("order", g.order().to_string(), order.to_string()));
        }
    }
    if let Some(count) = facts.class_count {
        let actual = conjugacy_classes(g).len();
        if count != actual {
            return Err(mismatch(
                "classCount",
                actual.to_string(),
                count.to_string(),
            ));
        }
    }
    if let Some(value) = &facts.nilpotence_class {
        let expected = match value {
            Value::Number(x) => x.as_u64().map(|c| Some(c as usize)),
            Value::String(s) if s == "not nilpotent" => Some(None),
            _ => None,
        }
        .ok_or_else(|| {
            parse_error(
                path,
                "`expected.nilpotenceClass` must be an integer or \"not nilpotent\"",
            )
        })?;
        let actual = nilpotence_class(g);
        if actual != expected {
            let show = |c: Option<usize>| c.map_or("not nilpotent".to_string(), |c| c.to_string());
            return Err(mismatch("nilpotenceClass", show(actual), show(expected)));
        }
    }
    Ok(())
}

/// Builds a group from the text of a group file; `path` is used in messages.
pub fn parse_group_file(text: &str, path: &Path, limits: &Limits) -> Result<CorpusGroup> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| parse_error(path, e.to_string()))?;
    if file.format != 1 {
        return Err(parse_error(
            path,
            format!("unsupported format {}", file.format),
        ));
    }
    let narrow = |gens: &[Vec<u64>]| -> Vec<Vec<usize>> {
        gens.iter()
            .map(|g| g.iter().map(|&x| x as usize).collect())
            .collect()
    };
    // invalid parameters are reported against the file they came from
    let located = |e: Error| match e {
        Error::Invalid(msg) => parse_error(path, msg),
        other => other,
    };
    let (group, kind) = match file.kind {
        FileKind::Permutation => {
            let degree = required(file.degree, "degree", "permutation", path)?;
            let gens = required(
                file.generators.as_deref(),
                "generators",
                "permutation",
                path,
            )?;
            (
                GroupRep::from_permutations(degree, &narrow(gens), limits).map_err(located)?,
                "permutation",
            )
        }
        FileKind::Cayley => {
            let table = required(file.table.as_deref(), "table", "cayley", path)?;
            (
                GroupRep::from_table(table, None, limits).map_err(located)?,
                "cayley",
            )
        }
        FileKind::Unitriangular => {
            let n = required(file.n, "n", "unitriangular", path)?;
            let p = required(file.p, "p", "unitriangular", path)?;
            let g = match &file.generators {
                None => GroupRep::unitriangular(n, p, limits).map_err(located)?,
                Some(gens) => {
                    let gens: Vec<Vec<u32>> = gens
                        .iter()
                        .map(|g| g.iter().map(|&x| x.min(u32::MAX as u64) as u32).collect())
                        .collect();
                    GroupRep::unitriangular_subgroup(n, p, &gens, limits).map_err(located)?
                }
            };
            (g, "unitriangular")
        }
        FileKind::Builtin => {
            let family = required(file.family.as_deref(), "family", "builtin", path)?;
            let family = Family::from_json(family, file.params.as_ref().unwrap_or(&Value::Null))
                .map_err(located)?;
            (build_builtin(&family, limits).map_err(located)?, "builtin")
        }
    };
    group.check_invariants()?;
    if let Some(facts) = &file.expected {
        check_expected(&file.name, &group, facts, path)?;
    }
    Ok(CorpusGroup {
        name: file.name,
        tags: vec![kind.to_string()],
        group,
    })
}

pub fn load_group_file(path: &Path, limits: &Limits) -> Result<CorpusGroup> {
    parse_group_file(&read(path)?, path, limits)
}

/// Loads every file of a manifest; names must be unique.
pub fn load_manifest(path: &Path, limits: &Limits) -> Result<Vec<CorpusGroup>> {
    let manifest: Manifest =
        serde_json::from_str(&read(path)?).map_err(|e| parse_error(path, e.to_string()))?;
    if manifest.format != 1 {
        return Err(parse_error(
            path,
            format!("unsupported manifest format {}", manifest.format),
        ));
    }
    let base = path.parent().unwrap_or(Path::new("."));
    let loaded = exec::map(limits.mode, &manifest.groups, |entry| {
        let mut g = load_group_file(&base.join(&entry.path), limits)?;
        g.tags = entry.tags.clone();
        Ok(g)
    });
    let groups = loaded.into_iter().collect::<Result<Vec<_>>>()?;
    let mut names = BTreeSet::new();
    for g in &groups {
        if !names.insert(g.name.as_str()) {
            return Err(parse_error(
                path,
                format!("group name `{}` appears twice", g.name),
            ));
        }
    }
    Ok(groups)
}

enum Source {
    Family(Family),
    Unitriangular(usize, u32),
    UnitriangularSub(usize, u32, Vec<Vec<u32>>),
    Permutations(usize, Vec<Vec<usize>>),
}

struct Entry {
    name: String,
    order: usize,
    tags: &'static [&'static str],
    source: Source,
}

fn family(f: Family, order: usize, tags: &'static [&'static str]) -> Entry {
    Entry {
        name: f.name(),
        order,
        tags,
        source: Source::Family(f),
    }
}

fn product(a: Family, b: Family, order: usize, tags: &'static [&'static str]) -> Entry {
    family(Family::Product(Box::new(a), Box::new(b)), order, tags)
}

fn catalog() -> Vec<Entry> {
    use ExtraspecialExponent::{PSquared, P};
    use Family::*;
    let mut out = Vec::new();
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 12, 16] {
        out.push(family(Cyclic { n }, n, &["abelian"]));
    }
    for factors in [
        vec![2, 2],
        vec![2, 2, 2],
        vec![3, 3],
        vec![2, 4],
        vec![2, 2, 2, 2],
        vec![4, 4],
        vec![5, 5],
        vec![3, 3, 3],
    ] {
        let order = factors.iter().product();
        out.push(family(Abelian { factors }, order, &["abelian"]));
    }
    for order in [8, 16, 32] {
        out.push(family(Dihedral { order }, order, &["p2"]));
        out.push(family(Quaternion { order }, order, &["p2"]));
    }
    for order in [10, 12] {
        out.push(family(Dihedral { order }, order, &["not-nilpotent"]));
    }
    for p in [3, 5] {
        for exponent in [P, PSquared] {
            out.push(family(
                Extraspecial { p, exponent },
                (p * p * p) as usize,
                &["extraspecial", "camina-candidate"],
            ));
        }
    }
    for (n, p) in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2)] {
        let order = (p as usize).pow((n * (n - 1) / 2) as u32);
        out.push(Entry {
            name: format!("UT({n},{p})"),
            order,
            tags: &["unitriangular"],
            source: Source::Unitriangular(n, p),
        });
    }
    for p in [2u32, 3] {
        out.push(family(
            UnitriangularSlice { p },
            (p as usize).pow(5),
            &["unitriangular", "class3"],
        ));
    }
    // a class-4 subgroup of UT(5,2) with V_4 < G_4 and G' abelian
    out.push(Entry {
        name: "UT(5,2)-sub256".into(),
        order: 256,
        tags: &["unitriangular", "class4"],
        source: Source::UnitriangularSub(
            5,
            2,
            vec![
                vec![0, 0, 0, 0, 1, 0, 1, 1, 1, 1],
                vec![1, 1, 1, 0, 0, 0, 1, 1, 1, 1],
            ],
        ),
    });
    out.push(Entry {
        name: "S3".into(),
        order: 6,
        tags: &["not-nilpotent", "camina-candidate"],
        source: Source::Permutations(3, vec![vec![1, 0, 2], vec![1, 2, 0]]),
    });
    out.push(Entry {
        name: "A4".into(),
        order: 12,
        tags: &["not-nilpotent"],
        source: Source::Permutations(4, vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]]),
    });
    out.push(Entry {
        name: "S4".into(),
        order: 24,
        tags: &["not-nilpotent"],
        source: Source::Permutations(4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]),
    });
    let c = |n| Cyclic { n };
    out.push(product(c(2), Quaternion { order: 8 }, 16, &["product"]));
    out.push(product(c(2), Dihedral { order: 8 }, 16, &["product"]));
    out.push(product(
        c(2),
        Dihedral { order: 6 },
        12,
        &["product", "not-nilpotent"],
    ));
    out.push(product(c(3), Quaternion { order: 8 }, 24, &["product"]));
    out.push(product(
        c(2),
        Extraspecial { p: 3, exponent: P },
        54,
        &["product"],
    ));
    out.push(product(
        Quaternion { order: 8 },
        Dihedral { order: 8 },
        64,
        &["product"],
    ));
    out.push(product(
        c(2),
        UnitriangularSlice { p: 2 },
        64,
        &["product", "class3"],
    ));
    out.push(product(
        c(3),
        UnitriangularSlice { p: 2 },
        96,
        &["product", "class3"],
    ));
    out
}

fn build(entry: &Entry, limits: &Limits) -> Result<GroupRep> {
    match &entry.source {
        Source::Family(f) => build_builtin(f, limits),
        Source::Unitriangular(n, p) => GroupRep::unitriangular(*n, *p, limits),
        Source::UnitriangularSub(n, p, gens) => {
            GroupRep::unitriangular_subgroup(*n, *p, gens, limits)
        }
        Source::Permutations(d, gens) => GroupRep::from_permutations(*d, gens, limits),
    }
}

/// The bundled corpus restricted to groups of order at most `max_order` that
/// fit the configured caps, in a fixed order.
pub fn builtin_corpus(max_order: usize, limits: &Limits) -> Vec<CorpusGroup> {
    let entries: Vec<Entry> = catalog()
        .into_iter()
        .filter(|e| e.order <= max_order && e.order <= limits.blackbox_cap)
        .filter(|e| {
            !matches!(e.source, Source::Family(Family::Product(..))) || e.order <= limits.dense_cap
        })
        .collect();
    exec::map(limits.mode, &entries, |e| {
        let group = build(e, limits).expect("builtin corpus entries are valid");
        debug_assert_eq!(group.order(), e.order, "{}", e.name);
        let tags = std::iter::once("builtin")
            .chain(e.tags.iter().copied())
            .map(String::from)
            .collect();
        CorpusGroup {
            name: e.name.clone(),
            tags,
            group,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesProfile;

    fn parse(text: &str) -> Result<CorpusGroup> {
        parse_group_file(text, Path::new("test.json"), &Limits::default())
    }

    #[test]
    fn builtin_file_loads() {
        let g = parse(r#"{"format":1,"name":"q8","kind":"builtin","family":"quaternion","params":{"order":8},"expected":{"order":8,"classCount":5,"nilpotenceClass":2}}"#).unwrap();
        assert_eq!(g.group.order(), 8);
        let g = parse(r#"{"format":1,"name":"ut42","kind":"unitriangular","n":4,"p":2,"expected":{"order":64}}"#).unwrap();
        assert_eq!(g.group.order(), 64);
        let g = parse(r#"{"format":1,"name":"s3","kind":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]],"expected":{"nilpotenceClass":"not nilpotent"}}"#).unwrap();
        assert_eq!(g.group.order(), 6);
        let g = parse(r#"{"format":1,"name":"c3","kind":"cayley","table":[0,1,2,1,2,0,2,0,1]}"#)
            .unwrap();
        assert_eq!(g.group.order(), 3);
    }

    #[test]
    fn expected_mismatch() {
        let err = parse(r#"{"format":1,"name":"c6","kind":"builtin","family":"cyclic","params":{"n":6},"expected":{"order":60}}"#)
            .unwrap_err();
        assert!(
            err.to_string()
                .contains("expected-fact mismatch: order 6 \u{2260} 60"),
            "{err}"
        );
        let err = parse(r#"{"format":1,"name":"c6","kind":"builtin","family":"cyclic","params":{"n":6},"expected":{"nilpotenceClass":2}}"#)
            .unwrap_err();
        assert!(
            err.to_string().contains("nilpotenceClass 1 \u{2260} 2"),
            "{err}"
        );
    }

    #[test]
    fn parse_errors_name_the_problem() {
        let err =
            parse("{\"format\":1,\n\"name\":\"x\",\n\"kind\":\"permutation\",\n\"degree\":3,}")
                .unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(err.to_string().contains("line 4"), "{err}");
        let err = parse(r#"{"format":1,"name":"x","kind":"permutation","degree":3}"#).unwrap_err();
        assert!(err.to_string().contains("`generators`"), "{err}");
        let err = parse(r#"{"format":2,"name":"x","kind":"builtin"}"#).unwrap_err();
        assert!(err.to_string().contains("unsupported format 2"), "{err}");
        let err =
            parse(r#"{"format":1,"name":"x","kind":"builtin","family":"monster","params":{}}"#)
                .unwrap_err();
        assert!(matches!(err, Error::UnknownFamily(_)));
        let err = parse(
            r#"{"format":1,"name":"x","kind":"builtin","family":"cyclic","params":{"n":"six"}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
        assert!(err.to_string().contains("test.json"), "{err}");
    }

    #[test]
    fn manifest_resolves_relative_paths() {
        let dir = tempfile::tempdir().unwrap();
        let sub = dir.path().join("groups");
        std::fs::create_dir(&sub).unwrap();
        std::fs::write(
            sub.join("a.json"),
            r#"{"format":1,"name":"a","kind":"builtin","family":"cyclic","params":{"n":4}}"#,
        )
        .unwrap();
        std::fs::write(
            sub.join("b.json"),
            r#"{"format":1,"name":"b","kind":"unitriangular","n":3,"p":2}"#,
        )
        .unwrap();
        let manifest = dir.path().join("manifest.json");
        std::fs::write(
            &manifest,
            r#"{"format":1,"groups":[{"path":"groups/a.json","tags":["p2"]},{"path":"groups/b.json","tags":["class2"]}]}"#,
        )
        .unwrap();
        let groups = load_manifest(&manifest, &Limits::default()).unwrap();
        assert_eq!(
            groups.iter().map(|g| g.name.as_str()).collect::<Vec<_>>(),
            ["a", "b"]
        );
        assert_eq!(groups[1].tags, ["class2"]);

        std::fs::write(
            &manifest,
            r#"{"format":1,"groups":[{"path":"groups/a.json","tags":[]},{"path":"groups/a.json","tags":[]}]}"#,
        )
        .unwrap();
        assert!(load_manifest(&manifest, &Limits::default())
            .unwrap_err()
            .to_string()
            .contains("twice"));

        std::fs::write(
            &manifest,
            r#"{"format":1,"groups":[{"path":"missing.json","tags":[]}]}"#,
        )
        .unwrap();
        assert!(matches!(
            load_manifest(&manifest, &Limits::default()),
            Err(Error::Io { .. })
        ));
    }

    fn names(max: usize) -> Vec<String> {
        builtin_corpus(max, &Limits::default())
            .into_iter()
            .map(|g| g.name)
            .collect()
    }

    #[test]
    fn builtin_membership() {
        let small = names(8);
        for n in 2..=8 {
            assert!(small.contains(&format!("cyclic({n})")));
        }
        for want in ["dihedral(8)", "quaternion(8)", "UT(3,2)", "S3"] {
            assert!(small.contains(&want.to_string()), "{want}");
        }
        assert!(!names(64).contains(&"UT(4,3)".to_string()));
        let all = builtin_corpus(1024, &Limits::default());
        let ut52 = all.iter().find(|g| g.name == "UT(5,2)").unwrap();
        assert_eq!(ut52.group.order(), 1024);
        assert_eq!(
            SeriesProfile::compute(&ut52.group).nilpotence_class,
            Some(4)
        );
        let unique: BTreeSet<&str> = all.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(unique.len(), all.len());
        assert_eq!(
            names(1024),
            all.iter().map(|g| g.name.clone()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn class_four_witness() {
        let all = builtin_corpus(256, &Limits::default());
        let g = &all
            .iter()
            .find(|g| g.name == "UT(5,2)-sub256")
            .unwrap()
            .group;
        let p = SeriesProfile::compute(g);
        let orders =
            |s: &[crate::subgroup::SubgroupSet]| s.iter().map(|x| x.order()).collect::<Vec<_>>();
        assert_eq!(orders(&p.lower), [256, 16, 8, 2, 1]);
        assert_eq!(orders(&p.vanishing), [64, 8, 2, 1]);
        assert!(p.v_below_g(4));
    }
}
