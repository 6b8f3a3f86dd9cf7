//! Lower central series, the vanishing-off subgroup and its central series,
//! the companion subgroups `Y_i`, `D_i`, `E_i`, and the `H_1` and Camina
//! predicates.
//!
//! `V(G)` is computed without characters. By the second orthogonality
//! relation `sum |chi(g)|^2 = |C_G(g)|`, and the linear characters contribute
//! exactly `|G:G'|` to that sum. So every nonlinear irreducible character
//! vanishes at `g` iff `|C_G(g)| = |G:G'|`, and
//! `V(G) = < g : |C_G(g)| > |G:G'| >`. The character-theoretic definition is
//! kept alongside in [`crate::characters::v_from_characters`].
//!
//! Series are lists `[X_1, X_2, ...]` that stop at the first term that is
//! trivial or equal to its predecessor (that term included). Index `i` past
//! the end refers to the last term.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{quotient::quotient, GroupRep};
use crate::subgroup::{
    self, center, commutator_subgroup, conjugacy_classes, derived_subgroup, generated_subgroup,
    invariant_intermediate_subgroups, ConjugacyClassData, SubgroupSet,
};

fn descend(g: &GroupRep, first: SubgroupSet) -> Vec<SubgroupSet> {
    let whole = SubgroupSet::whole(g);
    let mut out = vec![first];
    loop {
        let last = out.last().expect("nonempty");
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(g, last, &whole);
        let stable = &next == last;
        out.push(next);
        if stable {
            break;
        }
    }
    out
}

/// `G_1 = G`, `G_i = [G_{i-1}, G]`.
pub fn lower_central_series(g: &GroupRep) -> Vec<SubgroupSet> {
    descend(g, SubgroupSet::whole(g))
}

pub(crate) fn vanishing_off_from_classes(
    g: &GroupRep,
    classes: &ConjugacyClassData,
    derived: &SubgroupSet,
) -> SubgroupSet {
    let abelianization = derived.index_in(&SubgroupSet::whole(g));
    let support: Vec<usize> = classes
        .classes
        .iter()
        .zip(&classes.centralizer_order)
        .filter(|(_, &c)| c > abelianization)
        .flat_map(|(cls, _)| cls.iter().copied())
        .collect();
    generated_subgroup(g, &support)
}

/// `V(G)` via the centralizer criterion.
pub fn vanishing_off_subgroup(g: &GroupRep) -> SubgroupSet {
    vanishing_off_from_classes(g, &conjugacy_classes(g), &derived_subgroup(g))
}

/// `V_1 = V(G)`, `V_i = [V_{i-1}, G]`.
pub fn v_series(g: &GroupRep) -> Vec<SubgroupSet> {
    descend(g, vanishing_off_subgroup(g))
}

fn term(series: &[SubgroupSet], i: usize) -> &SubgroupSet {
    assert!(i >= 1, "series are indexed from 1");
    &series[i.min(series.len()) - 1]
}

/// `Y_i`, `D_i` and (for `i >= 4`) `E_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSubgroups {
    pub y: SubgroupSet,
    pub d: SubgroupSet,
    pub e: Option<SubgroupSet>,
}

fn companions(
    g: &GroupRep,
    lower: &[SubgroupSet],
    vanishing: &[SubgroupSet],
    i: usize,
) -> Result<SeriesSubgroups> {
    if i < 3 || i > lower.len() + 1 {
        return Err(Error::IndexBeyondClass {
            index: i,
            len: lower.len(),
        });
    }
    let vi = term(vanishing, i);
    // preimage of Z(G/V_i)
    let y = subgroup::centralizer_mod_unchecked(g, vi, g.generators());
    let d = subgroup::centralizer_mod_unchecked(g, vi, term(lower, i - 1).generators());
    let e = (i >= 4).then(|| {
        let bottom = term(lower, i - 1).intersection(g, &y);
        subgroup::centralizer_mod_unchecked(g, &bottom, term(lower, i - 2).generators())
    });
    Ok(SeriesSubgroups { y, d, e })
}

/// `Y_i`, `D_i`, `E_i` for one index, computing the two series on the way.
pub fn series_subgroups(g: &GroupRep, i: usize) -> Result<SeriesSubgroups> {
    companions(g, &lower_central_series(g), &v_series(g), i)
}

/// Everything the verification suites read about one group.
#[derive(Clone, Debug)]
pub struct SeriesProfile {
    pub lower: Vec<SubgroupSet>,
    pub vanishing: Vec<SubgroupSet>,
    pub classes: ConjugacyClassData,
    /// `p` when `|G|` is a power of the prime `p`.
    pub prime: Option<u64>,
    pub nilpotence_class: Option<usize>,
    pub companions: BTreeMap<usize, SeriesSubgroups>,
}

impl SeriesProfile {
    pub fn compute(g: &GroupRep) -> Self {
        let classes = conjugacy_classes(g);
        let lower = lower_central_series(g);
        let v1 = vanishing_off_from_classes(g, &classes, term(&lower, 2));
        let vanishing = descend(g, v1);
        let nilpotence_class = lower
            .last()
            .filter(|t| t.is_trivial())
            .map(|_| lower.len() - 1);
        let companions = (3..=lower.len() + 1)
            .map(|i| {
                (
                    i,
                    companions(g, &lower, &vanishing, i).expect("index in range"),
                )
            })
            .collect();
        SeriesProfile {
            lower,
            vanishing,
            classes,
            prime: g.prime_power().map(|(p, _)| p),
            nilpotence_class,
            companions,
        }
    }

    /// `G_i`.
    pub fn g(&self, i: usize) -> &SubgroupSet {
        term(&self.lower, i)
    }

    /// `V_i`.
    pub fn v(&self, i: usize) -> &SubgroupSet {
        term(&self.vanishing, i)
    }

    pub fn y(&self, i: usize) -> Option<&SubgroupSet> {
        self.companions.get(&i).map(|c| &c.y)
    }

    pub fn d(&self, i: usize) -> Option<&SubgroupSet> {
        self.companions.get(&i).map(|c| &c.d)
    }

    pub fn e(&self, i: usize) -> Option<&SubgroupSet> {
        self.companions.get(&i).and_then(|c| c.e.as_ref())
    }

    /// Largest index with an explicitly computed `G_i`.
    pub fn depth(&self) -> usize {
        self.lower.len()
    }

    pub fn order(&self) -> usize {
        self.lower[0].order()
    }

    /// `V_i < G_i`.
    pub fn v_below_g(&self, i: usize) -> bool {
        self.v(i).is_proper_subgroup_of(self.g(i))
    }

    /// The single prime dividing every nontrivial section `|G_i : V_i|`.
    pub fn section_prime(&self) -> Option<u64> {
        let mut primes = (1..=self.depth())
            .map(|i| self.v(i).index_in(self.g(i)) as u64)
            .filter(|&x| x > 1)
            .flat_map(|x| arith::factorize(x).into_iter().map(|(p, _)| p));
        let first = primes.next()?;
        primes.all(|p| p == first).then_some(first)
    }

    fn working_prime(&self) -> Option<u64> {
        self.section_prime().or(self.prime)
    }

    /// `n` with `|G:V_1| = p^{2n}`, when that index is an even power of `p`.
    pub fn n(&self) -> Option<u32> {
        let p = self.working_prime()?;
        let a = arith::log_exact(self.v(1).index_in(self.g(1)) as u64, p)?;
        (a % 2 == 0).then_some(a / 2)
    }

    /// `|G : D_3|`.
    pub fn index_d3(&self) -> Option<usize> {
        self.d(3).map(|d| self.order() / d.order())
    }
}

/// Result of an `H_1` test for `G_k`.
#[derive(Clone, Debug)]
pub struct H1Outcome {
    pub holds: bool,
    /// `V_k = G_k`, so there is nothing to check.
    pub vacuous: bool,
    /// Number of intermediate `N` examined.
    pub checked: usize,
    /// First `N` violating the condition.
    pub witness: Option<SubgroupSet>,
}

/// `V_{k-1}/N = (G_{k-1}/N) ∩ Z(G/N)`, checked inside `G/N`.
pub fn h1_condition(
    g: &GroupRep,
    profile: &SeriesProfile,
    k: usize,
    n: &SubgroupSet,
) -> Result<bool> {
    let q = quotient(g, n)?;
    let image_v = q.image(profile.v(k - 1));
    let image_g = q.image(profile.g(k - 1));
    let z = center(&q.target);
    Ok(image_v == image_g.intersection(&q.target, &z))
}

/// `G_k` is `H_1`: the condition above holds for every `N` normal in `G` with
/// `V_k <= N < G_k`.
pub fn is_h1(g: &GroupRep, profile: &SeriesProfile, k: usize, cap: u128) -> Result<H1Outcome> {
    if k < 2 {
        return Err(Error::invalid("H1 is defined for k >= 2"));
    }
    if !profile.v_below_g(k) {
        return Ok(H1Outcome {
            holds: true,
            vacuous: true,
            checked: 0,
            witness: None,
        });
    }
    let candidates = invariant_intermediate_subgroups(g, profile.v(k), profile.g(k), cap)?;
    let checked = candidates.len();
    for n in candidates {
        if !h1_condition(g, profile, k, &n)? {
            return Ok(H1Outcome {
                holds: false,
                vacuous: false,
                checked,
                witness: Some(n),
            });
        }
    }
    Ok(H1Outcome {
        holds: true,
        vacuous: false,
        checked,
        witness: None,
    })
}

/// Camina detection. Groups with `G'` trivial or `G' = G` are never Camina.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaminaData {
    pub is_camina: bool,
    /// An element outside `G'` whose class is not its coset `xG'`.
    pub witness: Option<usize>,
    /// Camina and nilpotent of class exactly 3.
    pub class3: bool,
    /// `n` with `|G:G'| = p^{2n}`, for class-3 Camina groups.
    pub n_from_index: Option<u32>,
}

pub fn camina_data(g: &GroupRep, profile: &SeriesProfile) -> CaminaData {
    let derived = profile.g(2);
    if derived.is_trivial() || derived.order() == g.order() {
        return CaminaData {
            is_camina: false,
            witness: None,
            class3: false,
            n_from_index: None,
        };
    }
    let mut witness = None;
    for cls in &profile.classes.classes {
        let x = cls[0];
        if derived.contains(x) {
            continue;
        }
        let coset: Vec<usize> = {
            let mut c: Vec<usize> = derived.elements().map(|k| g.mul(x, k)).collect();
            c.sort_unstable();
            c
        };
        // classes are stored sorted
        if *cls != coset {
            witness = Some(x);
            break;
        }
    }
    let is_camina = witness.is_none();
    let class3 = is_camina && profile.nilpotence_class == Some(3);
    let n_from_index = class3
        .then(|| {
            let idx = derived.index_in(profile.g(1)) as u64;
            let (_, a) = arith::prime_power(idx)?;
            (a % 2 == 0).then_some(a / 2)
        })
        .flatten();
    CaminaData {
        is_camina,
        witness,
        class3,
        n_from_index,
    }
}
