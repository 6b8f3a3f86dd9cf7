use super::GroupRep;
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::subgroup::{normality_witness, SubgroupSet};

/// `G -> G/N`. Target elements are the cosets, numbered in increasing order
/// of their least source element, so the identity coset is target 0.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: u64,
    pub kernel: SubgroupSet,
    pub target: GroupRep,
    pub projection: Vec<u32>,
    /// Least source element of each coset, indexed by target element.
    pub representatives: Vec<usize>,
}

pub fn quotient(g: &GroupRep, n: &SubgroupSet) -> Result<QuotientMap> {
    n.check_parent(g)?;
    if let Some((x, y)) = normality_witness(g, n) {
        return Err(Error::NotNormal { g: x, n: y });
    }
    let mut projection = vec![u32::MAX; g.order()];
    let mut representatives = Vec::with_capacity(g.order() / n.order());
    for x in 0..g.order() {
        if projection[x] != u32::MAX {
            continue;
        }
        let t = representatives.len() as u32;
        representatives.push(x);
        for k in n.elements() {
            projection[g.mul(x, k)] = t;
        }
    }
    let m = representatives.len();
    let mut table = vec![0u32; m * m];
    for (a, &ra) in representatives.iter().enumerate() {
        for (b, &rb) in representatives.iter().enumerate() {
            table[a * m + b] = projection[g.mul(ra, rb)];
        }
    }
    let mut generators = Vec::new();
    for &s in g.generators() {
        let t = projection[s] as usize;
        if t != 0 && !generators.contains(&t) {
            generators.push(t);
        }
    }
    let target = GroupRep::from_canonical_table(m, table, generators);
    Ok(QuotientMap {
        source: g.id(),
        kernel: n.clone(),
        target,
        projection,
        representatives,
    })
}

impl QuotientMap {
    #[inline]
    pub fn project(&self, x: usize) -> usize {
        self.projection[x] as usize
    }

    /// `HN/N` as a subgroup of the target.
    pub fn image(&self, h: &SubgroupSet) -> SubgroupSet {
        debug_assert_eq!(h.parent_id(), self.source);
        let gens: Vec<usize> = h.generators().iter().map(|&x| self.project(x)).collect();
        crate::subgroup::generated_subgroup(&self.target, &gens)
    }

    /// Full preimage in the source of a target subgroup.
    pub fn preimage(&self, g: &GroupRep, h: &SubgroupSet) -> SubgroupSet {
        let members = Bitset::from_indices(
            g.order(),
            (0..g.order()).filter(|&x| h.contains(self.project(x))),
        );
        SubgroupSet::from_closed(g, members)
    }
}
