//! Subgroups as membership sets and the subgroup-level operations on them.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::GroupRep;

mod classes;
mod sections;

pub use classes::{center, conjugacy_classes, ConjugacyClassData};
pub use sections::{
    abelian_invariants, abelian_invariants_of_group, enumerate_subspaces, gaussian_binomial_total,
    invariant_intermediate_subgroups, section_abelian_invariants, ElementarySection, SUBSPACE_CAP,
};

/// A subgroup of a specific [`GroupRep`], stored as a membership bitset.
///
/// `generators` is a small generating set: the one supplied at construction,
/// or one chosen greedily in increasing element order.
#[derive(Clone, Debug)]
pub struct SubgroupSet {
    parent: u64,
    members: Bitset,
    order: usize,
    generators: Vec<usize>,
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for SubgroupSet {}

/// Closure of `gens` under right multiplication.
fn close(g: &GroupRep, gens: &[usize]) -> Bitset {
    let mut members = Bitset::new(g.order());
    members.insert(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if members.insert(y) {
                queue.push(y);
            }
        }
    }
    members
}

fn greedy_generators(g: &GroupRep, members: &Bitset) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = Bitset::from_indices(g.order(), [0]);
    for x in members.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = close(g, &gens);
        }
    }
    gens
}

impl SubgroupSet {
    /// Wraps a membership set already known to be a subgroup.
    pub(crate) fn from_closed(g: &GroupRep, members: Bitset) -> Self {
        debug_assert_eq!(members.len(), g.order());
        let generators = greedy_generators(g, &members);
        let order = members.count();
        SubgroupSet {
            parent: g.id(),
            members,
            order,
            generators,
        }
    }

    /// Builds a subgroup from an explicit element list, rejecting sets that are
    /// not closed.
    pub fn from_elements(g: &GroupRep, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = Bitset::new(g.order());
        for e in elements {
            if e >= g.order() {
                return Err(Error::invalid(format!("element {e} out of range")));
            }
            members.insert(e);
        }
        let sub = Self::from_closed(g, members);
        if close(g, &sub.generators) != sub.members {
            return Err(Error::invalid(
                "element set is not closed under multiplication",
            ));
        }
        Ok(sub)
    }

    pub fn trivial(g: &GroupRep) -> Self {
        SubgroupSet {
            parent: g.id(),
            members: Bitset::from_indices(g.order(), [0]),
            order: 1,
            generators: Vec::new(),
        }
    }

    pub fn whole(g: &GroupRep) -> Self {
        SubgroupSet {
            parent: g.id(),
            members: Bitset::full(g.order()),
            order: g.order(),
            generators: g.generators().to_vec(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.parent == other.parent && self.members.is_subset(&other.members)
    }

    /// `self < other`.
    pub fn is_proper_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.is_subgroup_of(other) && self.order < other.order
    }

    /// `|other : self|`, assuming `self <= other`.
    pub fn index_in(&self, other: &SubgroupSet) -> usize {
        other.order / self.order
    }

    pub fn intersection(&self, g: &GroupRep, other: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_closed(g, self.members.intersection(&other.members))
    }

    /// `<self, other>`.
    pub fn join(&self, g: &GroupRep, other: &SubgroupSet) -> SubgroupSet {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().copied());
        generated_subgroup(g, &gens)
    }

    /// Sorted element indices; the lexicographic key for deterministic ordering.
    pub fn sorted_elements(&self) -> Vec<usize> {
        self.members.iter().collect()
    }

    pub fn check_parent(&self, g: &GroupRep) -> Result<()> {
        if self.parent != g.id() {
            return Err(Error::invalid("subgroup belongs to a different group"));
        }
        Ok(())
    }

    /// Full closure check (used by tests and ingest-time assertions).
    pub fn is_closed(&self, g: &GroupRep) -> bool {
        self.contains(0)
            && self.elements().all(|a| {
                self.contains(g.inv(a)) && self.elements().all(|b| self.contains(g.mul(a, b)))
            })
    }
}

/// The least subgroup containing `set`.
pub fn generated_subgroup(g: &GroupRep, set: &[usize]) -> SubgroupSet {
    let gens: Vec<usize> = set.iter().copied().filter(|&x| x != 0).collect();
    let members = close(g, &gens);
    let order = members.count();
    SubgroupSet {
        parent: g.id(),
        members,
        order,
        generators: gens,
    }
}

/// Normal closure of `set` in `<ambient>`.
pub fn normal_closure(g: &GroupRep, set: &[usize], ambient: &[usize]) -> SubgroupSet {
    let mut gens: Vec<usize> = set.iter().copied().filter(|&x| x != 0).collect();
    let mut members = close(g, &gens);
    let mut i = 0;
    // every generator, including ones appended on the way, gets conjugated
    while i < gens.len() {
        let h = gens[i];
        for &t in ambient {
            let c = g.conjugate(h, t);
            if !members.contains(c) {
                gens.push(c);
                members = close(g, &gens);
            }
        }
        i += 1;
    }
    let order = members.count();
    SubgroupSet {
        parent: g.id(),
        members,
        order,
        generators: gens,
    }
}

/// `[H, K]`: commutators of generator pairs, then normal closure in `<H, K>`.
pub fn commutator_subgroup(g: &GroupRep, h: &SubgroupSet, k: &SubgroupSet) -> SubgroupSet {
    let mut comms = Vec::new();
    for &a in h.generators() {
        for &b in k.generators() {
            let c = g.commutator(a, b);
            if c != 0 && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    let ambient: Vec<usize> = h
        .generators()
        .iter()
        .chain(k.generators())
        .copied()
        .collect();
    normal_closure(g, &comms, &ambient)
}

pub fn derived_subgroup(g: &GroupRep) -> SubgroupSet {
    let whole = SubgroupSet::whole(g);
    commutator_subgroup(g, &whole, &whole)
}

/// `C_G(x)`.
pub fn centralizer(g: &GroupRep, x: usize) -> SubgroupSet {
    let members = Bitset::from_indices(
        g.order(),
        (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)),
    );
    SubgroupSet::from_closed(g, members)
}

/// Full preimage of `C_{G/N}(HN/N)`: every `g` with `[g, h] in N` for all `h in H`.
///
/// Membership is tested on a generating set of `H`, which suffices because
/// `N` is normal.
pub fn centralizer_mod(g: &GroupRep, n: &SubgroupSet, h: &SubgroupSet) -> Result<SubgroupSet> {
    normality_witness(g, n).map_or(Ok(()), |(x, y)| Err(Error::NotNormal { g: x, n: y }))?;
    Ok(centralizer_mod_unchecked(g, n, h.generators()))
}

pub(crate) fn centralizer_mod_unchecked(
    g: &GroupRep,
    n: &SubgroupSet,
    hgens: &[usize],
) -> SubgroupSet {
    let members = Bitset::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| hgens.iter().all(|&y| n.contains(g.commutator(x, y)))),
    );
    SubgroupSet::from_closed(g, members)
}

/// A pair `(g, n)` with `g^-1 n g` outside `H`, if `H` is not normal.
pub fn normality_witness(g: &GroupRep, h: &SubgroupSet) -> Option<(usize, usize)> {
    for &x in g.generators() {
        for &n in h.generators() {
            if !h.contains(g.conjugate(n, x)) {
                return Some((x, n));
            }
        }
    }
    None
}

pub fn is_normal(g: &GroupRep, h: &SubgroupSet) -> bool {
    normality_witness(g, h).is_none()
}

/// Every subgroup normal in `G` and contained in the normal subgroup `h`,
/// `h` and the trivial subgroup included, sorted by order and then by
/// elements. Fails once more than `cap` are found.
pub fn normal_subgroups_within(
    g: &GroupRep,
    h: &SubgroupSet,
    classes: &ConjugacyClassData,
    cap: usize,
) -> Result<Vec<SubgroupSet>> {
    let inside: Vec<&Vec<usize>> = classes
        .classes
        .iter()
        .filter(|c| h.contains(c[0]))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let trivial = SubgroupSet::trivial(g);
    seen.insert(trivial.members.clone());
    let mut found = vec![trivial];
    let mut next = 0;
    while next < found.len() {
        let m = found[next].clone();
        next += 1;
        for cls in &inside {
            if m.contains(cls[0]) {
                continue;
            }
            // a union of classes generates a normal subgroup
            let mut gens = m.generators.clone();
            gens.extend_from_slice(cls);
            let joined = generated_subgroup(g, &gens);
            if seen.insert(joined.members.clone()) {
                if found.len() >= cap {
                    return Err(Error::TooManySubgroups { cap });
                }
                found.push(joined);
            }
        }
    }
    found.sort_by_cached_key(|s| (s.order(), s.sorted_elements()));
    Ok(found)
}
