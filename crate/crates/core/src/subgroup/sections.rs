//! Sections `B/A` of normal subgroups: elementary abelian coordinates,
//! enumeration of the `G`-invariant subgroups between `A` and `B`, and
//! abelian invariants.

use super::{normality_witness, SubgroupSet};
use crate::arith;
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::GroupRep;
use crate::linalg::{self, Row};

/// Default limit on the number of subspaces enumerated for one section.
pub const SUBSPACE_CAP: u128 = 1_000_000;

/// An elementary abelian section `B/A` with `F_p` coordinates.
#[derive(Clone, Debug)]
pub struct ElementarySection {
    pub p: u64,
    pub dim: usize,
    /// Lifts to `B` of the coordinate basis.
    pub basis: Vec<usize>,
    /// Base-`p` coordinate code of each element of `B`; `u32::MAX` outside `B`.
    code: Vec<u32>,
}

impl ElementarySection {
    /// Validates that `A <= B` are normal in `G` with `B/A` elementary abelian.
    pub fn new(g: &GroupRep, a: &SubgroupSet, b: &SubgroupSet) -> Result<Self> {
        if !a.is_subgroup_of(b) {
            return Err(Error::invalid("section bottom is not contained in the top"));
        }
        for h in [a, b] {
            if let Some((x, n)) = normality_witness(g, h) {
                return Err(Error::NotNormal { g: x, n });
            }
        }
        let index = a.index_in(b) as u64;
        let (p, _) = match arith::prime_power(index) {
            Some(pp) => pp,
            None if index == 1 => (1, 0),
            None => {
                return Err(Error::NotElementaryAbelian(format!(
                    "index {index} is not a prime power"
                )))
            }
        };
        for &x in b.generators() {
            if p > 1 && !a.contains(g.pow(x, p)) {
                return Err(Error::NotElementaryAbelian(format!(
                    "generator {x} has order above {p} modulo the bottom"
                )));
            }
            for &y in b.generators() {
                if !a.contains(g.commutator(x, y)) {
                    return Err(Error::NotElementaryAbelian(format!(
                        "generators {x} and {y} do not commute modulo the bottom"
                    )));
                }
            }
        }

        let mut basis = Vec::new();
        let mut span = a.clone();
        for x in b.elements() {
            if span.order() == b.order() {
                break;
            }
            if !span.contains(x) {
                basis.push(x);
                span = span.join(g, &super::generated_subgroup(g, &[x]));
            }
        }
        let dim = basis.len();
        let mut code = vec![u32::MAX; g.order()];
        if p > 1 {
            for c in 0..(p as usize).pow(dim as u32) {
                let mut w = 0usize;
                let mut rest = c;
                for &bj in &basis {
                    w = g.mul(w, g.pow(bj, (rest % p as usize) as u64));
                    rest /= p as usize;
                }
                for x in a.elements() {
                    code[g.mul(w, x)] = c as u32;
                }
            }
        } else {
            for x in a.elements() {
                code[x] = 0;
            }
        }
        Ok(ElementarySection {
            p,
            dim,
            basis,
            code,
        })
    }

    pub fn coords(&self, x: usize) -> Option<Row> {
        let c = self.code[x];
        (c != u32::MAX).then(|| {
            let mut c = c as u64;
            (0..self.dim)
                .map(|_| {
                    let d = c % self.p;
                    c /= self.p;
                    d
                })
                .collect()
        })
    }

    /// Conjugation action of each generator of `G`, as row-vector matrices.
    pub fn action_matrices(&self, g: &GroupRep) -> Vec<Vec<Row>> {
        g.generators()
            .iter()
            .map(|&s| {
                self.basis
                    .iter()
                    .map(|&bj| self.coords(g.conjugate(bj, s)).expect("section is normal"))
                    .collect()
            })
            .collect()
    }

    /// The subgroup of `B` whose image is the span of the RREF `rows`.
    pub fn preimage(&self, g: &GroupRep, rows: &[Row], pivots: &[usize]) -> SubgroupSet {
        let members = Bitset::from_indices(
            g.order(),
            (0..g.order()).filter(|&x| {
                self.coords(x)
                    .is_some_and(|v| linalg::in_span(&v, rows, pivots, self.p))
            }),
        );
        SubgroupSet::from_closed(g, members)
    }
}

/// `[d choose k]_p`.
fn gaussian_binomial(d: u32, k: u32, p: u128) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= p.pow(d - i) - 1;
        den *= p.pow(i + 1) - 1;
    }
    num / den
}

/// Number of subspaces of `F_p^d`, all dimensions.
pub fn gaussian_binomial_total(d: u32, p: u64) -> u128 {
    (0..=d).map(|k| gaussian_binomial(d, k, p as u128)).sum()
}

/// Calls `f` on an RREF basis of every subspace of `F_p^d` of dimension below
/// `max_dim` (inclusive), ordered by dimension, pivot set, then free entries.
pub fn enumerate_subspaces(d: usize, p: u64, max_dim: usize, mut f: impl FnMut(&[Row], &[usize])) {
    for k in 0..=max_dim.min(d) {
        for_each_combination(d, k, &mut |pivots: &[usize]| {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &c)| {
                    ((c + 1)..d)
                        .filter(|j| !pivots.contains(j))
                        .map(move |j| (r, j))
                })
                .collect();
            let total = (p as u128).pow(free.len() as u32);
            let mut rows: Vec<Row> = pivots
                .iter()
                .map(|&c| {
                    let mut row = vec![0; d];
                    row[c] = 1;
                    row
                })
                .collect();
            for mut assign in 0..total {
                for &(r, j) in &free {
                    rows[r][j] = (assign % p as u128) as u64;
                    assign /= p as u128;
                }
                f(&rows, pivots);
            }
        });
    }
}

fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..n {
            acc.push(i);
            go(i + 1, n, k, acc, f);
            acc.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Every `N` normal in `G` with `A <= N < B`, for `B/A` elementary abelian.
/// Sorted by order, then by sorted element list.
pub fn invariant_intermediate_subgroups(
    g: &GroupRep,
    a: &SubgroupSet,
    b: &SubgroupSet,
    cap: u128,
) -> Result<Vec<SubgroupSet>> {
    let section = ElementarySection::new(g, a, b)?;
    if section.dim == 0 {
        return Ok(Vec::new());
    }
    let count = gaussian_binomial_total(section.dim as u32, section.p) - 1;
    if count > cap {
        return Err(Error::SectionTooLarge { count, cap });
    }
    let actions = section.action_matrices(g);
    let p = section.p;
    let mut found = Vec::new();
    enumerate_subspaces(section.dim, p, section.dim - 1, |rows, pivots| {
        let invariant = actions.iter().all(|m| {
            rows.iter().all(|u| {
                let image: Row = (0..section.dim)
                    .map(|j| u.iter().zip(m).map(|(&ui, mi)| ui * mi[j]).sum::<u64>() % p)
                    .collect();
                linalg::in_span(&image, rows, pivots, p)
            })
        });
        if invariant {
            found.push(section.preimage(g, rows, pivots));
        }
    });
    found.sort_by_cached_key(|n| (n.order(), n.sorted_elements()));
    Ok(found)
}

/// Abelian invariants of `B/A` (prime-power cyclic orders, ascending), from
/// the census of cosets whose `p^k`-th power lies in `A`.
pub fn section_abelian_invariants(
    g: &GroupRep,
    a: &SubgroupSet,
    b: &SubgroupSet,
) -> Result<Vec<u64>> {
    if !a.is_subgroup_of(b) {
        return Err(Error::invalid("section bottom is not contained in the top"));
    }
    for &x in b.generators() {
        for &n in a.generators() {
            if !a.contains(g.conjugate(n, x)) {
                return Err(Error::NotNormal { g: x, n });
            }
        }
        for &y in b.generators() {
            if !a.contains(g.commutator(x, y)) {
                return Err(Error::NotAbelian { a: x, b: y });
            }
        }
    }
    let index = a.index_in(b) as u64;
    let mut out = Vec::new();
    for (p, e) in arith::factorize(index) {
        let ppart = p.pow(e);
        // ranks[k] = log_p #{cosets killed by p^k}
        let mut ranks = vec![0u32];
        let mut k = 1u32;
        loop {
            let q = p.pow(k);
            let killed =
                b.elements().filter(|&x| a.contains(g.pow(x, q))).count() as u64 / a.order() as u64;
            let r = arith::log_exact(killed, p).ok_or_else(|| {
                Error::invalid(format!("census count {killed} is not a power of {p}"))
            })?;
            ranks.push(r);
            if killed == ppart {
                break;
            }
            k += 1;
        }
        for k in 1..ranks.len() {
            let at_least_k = ranks[k] - ranks[k - 1];
            let at_least_next = ranks.get(k + 1).map_or(0, |r| r - ranks[k]);
            for _ in 0..(at_least_k - at_least_next) {
                out.push(p.pow(k as u32));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn abelian_invariants(g: &GroupRep, h: &SubgroupSet) -> Result<Vec<u64>> {
    section_abelian_invariants(g, &SubgroupSet::trivial(g), h)
}

pub fn abelian_invariants_of_group(g: &GroupRep) -> Result<Vec<u64>> {
    abelian_invariants(g, &SubgroupSet::whole(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;
    use crate::subgroup::{center, generated_subgroup};
    use crate::testing::{builtin, klein, q8, s3};

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for (d, p) in [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 5)] {
            let mut n = 0u128;
            enumerate_subspaces(d, p, d, |_, _| n += 1);
            assert_eq!(n, gaussian_binomial_total(d as u32, p), "d={d} p={p}");
        }
        assert_eq!(gaussian_binomial_total(2, 2), 5);
        assert_eq!(gaussian_binomial_total(3, 2), 16);
    }

    #[test]
    fn klein_has_four_below_top() {
        let g = klein();
        let subs = invariant_intermediate_subgroups(
            &g,
            &SubgroupSet::trivial(&g),
            &SubgroupSet::whole(&g),
            SUBSPACE_CAP,
        )
        .unwrap();
        assert_eq!(subs.len(), 4);
        assert!(subs[0].is_trivial());
        assert!(subs[1..].iter().all(|s| s.order() == 2));
    }

    #[test]
    fn one_dimensional_section() {
        let q = q8();
        let t = SubgroupSet::trivial(&q);
        let subs = invariant_intermediate_subgroups(&q, &t, &center(&q), SUBSPACE_CAP).unwrap();
        assert_eq!(subs, vec![t]);
    }

    #[test]
    fn non_normal_subspaces_filtered() {
        // a Klein subgroup V of D8 contains the center and two non-normal
        // reflection subgroups; only 1 and Z(D8) survive
        let g = builtin(Family::Dihedral { order: 8 });
        let z = center(&g);
        let zgen = z.generators()[0];
        let x = (0..8)
            .find(|&x| g.element_order(x) == 2 && !z.contains(x))
            .unwrap();
        let v = generated_subgroup(&g, &[x, zgen]);
        assert_eq!(v.order(), 4);
        let t = SubgroupSet::trivial(&g);
        let subs = invariant_intermediate_subgroups(&g, &t, &v, SUBSPACE_CAP).unwrap();
        assert_eq!(subs, vec![t, z]);
    }

    #[test]
    fn rejects_non_elementary() {
        let g = builtin(Family::Cyclic { n: 4 });
        let err = invariant_intermediate_subgroups(
            &g,
            &SubgroupSet::trivial(&g),
            &SubgroupSet::whole(&g),
            SUBSPACE_CAP,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotElementaryAbelian(_)));
    }

    #[test]
    fn cap_is_enforced() {
        let g = builtin(Family::Abelian {
            factors: vec![2, 2, 2, 2],
        });
        let err = invariant_intermediate_subgroups(
            &g,
            &SubgroupSet::trivial(&g),
            &SubgroupSet::whole(&g),
            10,
        )
        .unwrap_err();
        assert!(matches!(err, Error::SectionTooLarge { .. }));
    }

    #[test]
    fn invariants() {
        let k = klein();
        assert_eq!(
            abelian_invariants(&k, &SubgroupSet::trivial(&k)).unwrap(),
            Vec::<u64>::new()
        );
        assert_eq!(abelian_invariants_of_group(&k).unwrap(), vec![2, 2]);
        let c = builtin(Family::Abelian {
            factors: vec![4, 6, 9],
        });
        assert_eq!(abelian_invariants_of_group(&c).unwrap(), vec![2, 3, 4, 9]);
        let q = q8();
        assert_eq!(
            section_abelian_invariants(&q, &center(&q), &SubgroupSet::whole(&q)).unwrap(),
            vec![2, 2]
        );
        assert!(matches!(
            abelian_invariants_of_group(&q),
            Err(Error::NotAbelian { .. })
        ));
        let s = s3();
        let a3 = generated_subgroup(&s, &[s.generators()[1]]);
        assert_eq!(abelian_invariants(&s, &a3).unwrap(), vec![3]);
    }
}
