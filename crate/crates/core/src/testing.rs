//! Fixtures shared by the unit tests.

use crate::group::{builtin::build_builtin, Family, GroupRep, Limits};

pub(crate) fn builtin(f: Family) -> GroupRep {
    build_builtin(&f, &Limits::default()).unwrap()
}

pub(crate) fn s3() -> GroupRep {
    GroupRep::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &Limits::default()).unwrap()
}

pub(crate) fn q8() -> GroupRep {
    builtin(Family::Quaternion { order: 8 })
}

pub(crate) fn d8() -> GroupRep {
    builtin(Family::Dihedral { order: 8 })
}

pub(crate) fn klein() -> GroupRep {
    builtin(Family::Abelian {
        factors: vec![2, 2],
    })
}

pub(crate) fn ut(n: usize, p: u32) -> GroupRep {
    GroupRep::unitriangular(n, p, &Limits::default()).unwrap()
}
