//! The same group through different constructions and storage backends
//! yields the same canonical indexing and the same series data.

use vseries::corpus::builtin_corpus;
use vseries::series::SeriesProfile;
use vseries::verify::{run_suite, Suite, VerifyConfig};
use vseries::{build_builtin, Family, GroupRep, Limits, Mode, SubgroupSet};

fn orders(s: &[SubgroupSet]) -> Vec<usize> {
    s.iter().map(SubgroupSet::order).collect()
}

fn shape(g: &GroupRep) -> (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>) {
    let p = SeriesProfile::compute(g);
    let mut sizes: Vec<usize> = p.classes.classes.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    (
        orders(&p.lower),
        orders(&p.vanishing),
        sizes,
        g.order_census(),
    )
}

fn sparse() -> Limits {
    Limits {
        dense_cap: 1,
        ..Limits::default()
    }
}

#[test]
fn cayley_import_reproduces_the_table() {
    for cg in builtin_corpus(64, &Limits::default()) {
        let table: Vec<usize> = cg
            .group
            .cayley_table()
            .into_iter()
            .map(|x| x as usize)
            .collect();
        let copy =
            GroupRep::from_table(&table, Some(cg.group.generators()), &Limits::default()).unwrap();
        assert_eq!(copy.cayley_table(), cg.group.cayley_table(), "{}", cg.name);
    }
}

#[test]
fn dense_and_word_backends_agree() {
    for (n, p) in [(3, 3), (4, 2), (4, 3)] {
        let dense = GroupRep::unitriangular(n, p, &Limits::default()).unwrap();
        let words = GroupRep::unitriangular(n, p, &sparse()).unwrap();
        assert_eq!(dense.cayley_table(), words.cayley_table(), "UT({n},{p})");
        assert_eq!(shape(&dense), shape(&words));
        let config = VerifyConfig::default();
        assert_eq!(
            run_suite("x", &dense, &Suite::All, &config),
            run_suite("x", &words, &Suite::All, &config)
        );
    }
}

#[test]
fn isomorphic_constructions_agree() {
    let limits = Limits::default();
    // regular representation of Q8 by right multiplication
    let q8_regular = GroupRep::from_permutations(
        8,
        &[vec![1, 4, 7, 2, 5, 0, 3, 6], vec![2, 3, 4, 5, 6, 7, 0, 1]],
        &limits,
    )
    .unwrap();
    let q8 = build_builtin(&Family::Quaternion { order: 8 }, &limits).unwrap();
    assert_eq!(shape(&q8_regular), shape(&q8));

    let d8 = build_builtin(&Family::Dihedral { order: 8 }, &limits).unwrap();
    let ut32 = GroupRep::unitriangular(3, 2, &limits).unwrap();
    assert_eq!(shape(&d8), shape(&ut32));

    let es = build_builtin(
        &Family::Extraspecial {
            p: 3,
            exponent: vseries::group::builtin::ExtraspecialExponent::P,
        },
        &limits,
    )
    .unwrap();
    let ut33 = GroupRep::unitriangular(3, 3, &limits).unwrap();
    assert_eq!(shape(&es), shape(&ut33));
}

#[test]
fn sequential_and_parallel_construction_agree() {
    let seq = Limits {
        mode: Mode::Sequential,
        ..Limits::default()
    };
    for (n, p) in [(4, 3), (5, 2)] {
        let a = GroupRep::unitriangular(n, p, &seq).unwrap();
        let b = GroupRep::unitriangular(n, p, &Limits::default()).unwrap();
        assert_eq!(a.cayley_table(), b.cayley_table());
    }
}

#[test]
fn large_word_backend() {
    // 5^6 elements, above the dense cap
    let g = GroupRep::unitriangular(4, 5, &Limits::default()).unwrap();
    assert_eq!(g.order(), 15625);
    let p = SeriesProfile::compute(&g);
    assert_eq!(orders(&p.lower), [15625, 125, 5, 1]);
    assert_eq!(p.nilpotence_class, Some(3));
}
