//! Finite groups with canonical element indexing.
//!
//! Every [`GroupRep`] numbers its elements by breadth-first closure from its
//! generator list: shorter words first, then generator list order, then the
//! index of the left factor. Index 0 is always the identity.
//!
//! Small groups carry a dense Cayley table. Larger ones keep their concrete
//! permutation or matrix words and multiply through a memoized index map.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::exec::{self, Mode};

pub mod builtin;
pub mod quotient;
mod words;

pub use builtin::Family;
pub use quotient::QuotientMap;
pub(crate) use words::WordKind;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Construction limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order that gets a dense Cayley table.
    pub dense_cap: usize,
    /// Largest order accepted at all.
    pub blackbox_cap: usize,
    pub mode: Mode,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dense_cap: 4096,
            blackbox_cap: 1_000_000,
            mode: Mode::Parallel,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BackendKind {
    Cayley,
    Permutation,
    Unitriangular,
}

#[derive(Clone)]
enum Backend {
    Dense(Vec<u32>),
    Words(HashMap<Box<[u32]>, u32>),
}

/// A finite group with canonically indexed elements.
#[derive(Clone)]
pub struct GroupRep {
    id: u64,
    order: usize,
    backend: Backend,
    /// Concrete words, when the group came from permutations or matrices.
    words: Option<(WordKind, Vec<Box<[u32]>>)>,
    inverses: Vec<u32>,
    generators: Vec<usize>,
    names: Option<Vec<String>>,
}

/// An element tagged with its owning group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    group: u64,
    index: u32,
}

impl Element {
    pub fn index(self) -> usize {
        self.index as usize
    }
}

impl std::fmt::Debug for GroupRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupRep")
            .field("order", &self.order)
            .field("backend", &self.backend_kind())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Breadth-first closure in canonical order.
fn closure<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<(Vec<T>, HashMap<T, u32>)>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elems = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0u32);
    let (mut start, mut end) = (0, 1);
    while start < end {
        for s in gens {
            for i in start..end {
                let y = mul(&elems[i], s);
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(y.clone(), elems.len() as u32);
                    elems.push(y);
                }
            }
        }
        start = end;
        end = elems.len();
    }
    Ok((elems, index))
}

impl GroupRep {
    fn assemble(
        order: usize,
        backend: Backend,
        words: Option<(WordKind, Vec<Box<[u32]>>)>,
        generators: Vec<usize>,
    ) -> Self {
        let mut g = GroupRep {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            order,
            backend,
            words,
            inverses: Vec::new(),
            generators,
            names: None,
        };
        g.inverses = (0..order).map(|i| g.inverse_by_powers(i) as u32).collect();
        g
    }

    fn inverse_by_powers(&self, a: usize) -> usize {
        let mut prev = 0;
        let mut x = a;
        while x != 0 {
            prev = x;
            x = self.mul(x, a);
        }
        prev
    }

    pub(crate) fn from_words(
        kind: WordKind,
        gens: Vec<Box<[u32]>>,
        limits: &Limits,
    ) -> Result<Self> {
        let identity = kind.identity();
        let (elems, index) = closure(
            identity,
            &gens,
            |a, b| kind.compose(a, b),
            limits.blackbox_cap,
        )?;
        let order = elems.len();
        let generators = gens.iter().map(|w| index[w] as usize).collect();
        let backend = if order <= limits.dense_cap {
            let mut table = vec![0u32; order * order];
            exec::fill_rows(limits.mode, &mut table, order.max(1), |i, row| {
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = index[&kind.compose(&elems[i], &elems[j])];
                }
            });
            Backend::Dense(table)
        } else {
            Backend::Words(index)
        };
        Ok(Self::assemble(
            order,
            backend,
            Some((kind, elems)),
            generators,
        ))
    }

    /// The group generated by permutations of `{0..degree-1}`, given as image
    /// arrays. Products compose left to right: `(g*h)(x) = h(g(x))`.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let mut words = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::invalid(format!(
                    "generator {k} has length {} but the degree is {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::invalid(format!(
                        "generator {k} is not a bijection on 0..{degree}"
                    )));
                }
            }
            words.push(g.iter().map(|&x| x as u32).collect());
        }
        Self::from_words(WordKind::Permutation { degree }, words, limits)
    }

    /// All upper unitriangular `n x n` matrices over the field with `p` elements.
    pub fn unitriangular(n: usize, p: u32, limits: &Limits) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "unitriangular size must be at least 2, got {n}"
            )));
        }
        if !arith::is_prime(p as u64) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        let kind = WordKind::Unitriangular { n, p };
        let dim = n * (n - 1) / 2;
        let predicted = (p as u128).checked_pow(dim as u32);
        if predicted.is_none_or(|o| o > limits.blackbox_cap as u128) {
            return Err(Error::GroupTooLarge {
                cap: limits.blackbox_cap,
            });
        }
        let gens = (0..n - 1).map(|i| kind.elementary(i, i + 1)).collect();
        Self::from_words(kind, gens, limits)
    }

    /// The subgroup of UT(n, p) generated by matrices given as their entries
    /// strictly above the diagonal, row-major.
    pub fn unitriangular_subgroup(
        n: usize,
        p: u32,
        gens: &[Vec<u32>],
        limits: &Limits,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "unitriangular size must be at least 2, got {n}"
            )));
        }
        if !arith::is_prime(p as u64) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        let dim = n * (n - 1) / 2;
        for (k, g) in gens.iter().enumerate() {
            if g.len() != dim {
                return Err(Error::invalid(format!(
                    "generator {k} has {} entries, expected {dim}",
                    g.len()
                )));
            }
            if let Some(&x) = g.iter().find(|&&x| x >= p) {
                return Err(Error::invalid(format!(
                    "generator {k} has entry {x} outside 0..{p}"
                )));
            }
        }
        let words = gens.iter().map(|g| g.clone().into_boxed_slice()).collect();
        Self::from_words(WordKind::Unitriangular { n, p }, words, limits)
    }

    /// A group from a row-major multiplication table on `0..order` with any
    /// labelling. The result is re-indexed canonically; when `gens` is `None`
    /// a generating set is chosen greedily in input index order.
    pub fn from_table(table: &[usize], gens: Option<&[usize]>, limits: &Limits) -> Result<Self> {
        let order = (table.len() as f64).sqrt().round() as usize;
        if order == 0 || order * order != table.len() {
            return Err(Error::invalid(format!(
                "table length {} is not a positive square",
                table.len()
            )));
        }
        if order > limits.dense_cap {
            return Err(Error::GroupTooLarge {
                cap: limits.dense_cap,
            });
        }
        let at = |a: usize, b: usize| table[a * order + b];
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::invalid(format!(
                "table entry {bad} out of range 0..{order}"
            )));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| at(e, j) == j && at(j, e) == j))
            .ok_or_else(|| Error::invalid("table has no identity element"))?;
        for a in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for b in 0..order {
                if std::mem::replace(&mut row[at(a, b)], true)
                    || std::mem::replace(&mut col[at(b, a)], true)
                {
                    return Err(Error::invalid(format!(
                        "row or column {a} is not a permutation"
                    )));
                }
            }
        }
        let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if order <= 256 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(Error::invalid(format!(
                                "table is not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..10 * order {
                let (a, b, c) = (
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                );
                if !assoc(a, b, c) {
                    return Err(Error::invalid(format!(
                        "table is not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }

        let raw_gens: Vec<u32> = match gens {
            Some(gs) => {
                if let Some(&bad) = gs.iter().find(|&&g| g >= order) {
                    return Err(Error::invalid(format!("generator {bad} out of range")));
                }
                gs.iter().map(|&g| g as u32).collect()
            }
            None => {
                let mut chosen: Vec<u32> = Vec::new();
                let mut span = vec![identity as u32];
                for x in 0..order as u32 {
                    if !span.contains(&x) {
                        chosen.push(x);
                        span = closure(
                            identity as u32,
                            &chosen,
                            |a, b| at(*a as usize, *b as usize) as u32,
                            order,
                        )?
                        .0;
                    }
                }
                chosen
            }
        };
        let mul = |a: &u32, b: &u32| at(*a as usize, *b as usize) as u32;
        let (elems, index) = closure(identity as u32, &raw_gens, mul, order)?;
        if elems.len() != order {
            return Err(Error::invalid(format!(
                "generators span only {} of {order} elements",
                elems.len()
            )));
        }
        let mut dense = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                dense[i * order + j] = index[&mul(&elems[i], &elems[j])];
            }
        }
        let generators = raw_gens.iter().map(|g| index[g] as usize).collect();
        Ok(Self::assemble(
            order,
            Backend::Dense(dense),
            None,
            generators,
        ))
    }

    /// A dense group whose table is already canonical (identity at 0).
    pub(crate) fn from_canonical_table(
        order: usize,
        table: Vec<u32>,
        generators: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        Self::assemble(order, Backend::Dense(table), None, generators)
    }

    /// Direct product; the generators are those of `a` followed by those of `b`.
    pub fn direct_product(a: &GroupRep, b: &GroupRep, limits: &Limits) -> Result<Self> {
        let (na, nb) = (a.order(), b.order());
        if na * nb > limits.dense_cap {
            return Err(Error::GroupTooLarge {
                cap: limits.dense_cap,
            });
        }
        let gens: Vec<u32> = a
            .generators()
            .iter()
            .map(|&g| (g * nb) as u32)
            .chain(b.generators().iter().map(|&h| h as u32))
            .collect();
        let mul = |x: &u32, y: &u32| {
            let (x, y) = (*x as usize, *y as usize);
            (a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)) as u32
        };
        let (elems, index) = closure(0u32, &gens, mul, na * nb)?;
        let order = elems.len();
        let mut table = vec![0u32; order * order];
        exec::fill_rows(limits.mode, &mut table, order, |i, row| {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = index[&mul(&elems[i], &elems[j])];
            }
        });
        let generators = gens.iter().map(|g| index[g] as usize).collect();
        Ok(Self::assemble(
            order,
            Backend::Dense(table),
            None,
            generators,
        ))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::invalid(
                "name list length differs from the group order",
            ));
        }
        self.names = Some(names);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn backend_kind(&self) -> BackendKind {
        match (&self.backend, &self.words) {
            (Backend::Dense(_), _) => BackendKind::Cayley,
            (Backend::Words(_), Some((WordKind::Permutation { .. }, _))) => {
                BackendKind::Permutation
            }
            (Backend::Words(_), _) => BackendKind::Unitriangular,
        }
    }

    /// `(p, a)` when the order is `p^a`, `a >= 1`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        arith::prime_power(self.order as u64)
    }

    pub fn is_p_group(&self) -> bool {
        self.prime_power().is_some()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.backend {
            Backend::Dense(t) => t[a * self.order + b] as usize,
            Backend::Words(index) => {
                let (kind, words) = self.words.as_ref().expect("word backend keeps its words");
                index[&kind.compose(&words[a], &words[b])] as usize
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut acc = 0;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1, |e, g| arith::lcm(e, self.element_order(g) as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Display label: the stored name, the concrete word, or `g<index>`.
    pub fn label(&self, i: usize) -> String {
        if let Some(names) = &self.names {
            return names[i].clone();
        }
        match &self.words {
            Some((kind, words)) => kind.describe(&words[i]),
            None => format!("g{i}"),
        }
    }

    /// The concrete word for element `i`, when there is one.
    pub fn word(&self, i: usize) -> Option<&[u32]> {
        self.words.as_ref().map(|(_, w)| &*w[i])
    }

    pub fn element(&self, index: usize) -> Result<Element> {
        if index >= self.order {
            return Err(Error::invalid(format!(
                "element index {index} out of range 0..{}",
                self.order
            )));
        }
        Ok(Element {
            group: self.id,
            index: index as u32,
        })
    }

    pub fn identity(&self) -> Element {
        Element {
            group: self.id,
            index: 0,
        }
    }

    fn own(&self, e: Element) -> Result<usize> {
        if e.group != self.id {
            return Err(Error::ForeignElement { index: e.index() });
        }
        Ok(e.index())
    }

    pub fn mul_elements(&self, g: Element, h: Element) -> Result<Element> {
        let (g, h) = (self.own(g)?, self.own(h)?);
        self.element(self.mul(g, h))
    }

    pub fn inv_element(&self, g: Element) -> Result<Element> {
        let g = self.own(g)?;
        self.element(self.inv(g))
    }

    pub fn order_of(&self, g: Element) -> Result<usize> {
        Ok(self.element_order(self.own(g)?))
    }

    /// Multiset of element orders, sorted.
    pub fn order_census(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|g| self.element_order(g)).collect();
        v.sort_unstable();
        v
    }

    /// Row-major copy of the full multiplication table.
    pub fn cayley_table(&self) -> Vec<u32> {
        match &self.backend {
            Backend::Dense(t) => t.clone(),
            Backend::Words(_) => (0..self.order)
                .flat_map(|a| (0..self.order).map(move |b| (a, b)))
                .map(|(a, b)| self.mul(a, b) as u32)
                .collect(),
        }
    }

    /// Re-checks the structural invariants: identity at 0, two-sided
    /// inverses, generation by the generator list, and associativity
    /// (exhaustive up to order 256, otherwise 10·order seeded samples).
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order;
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(Error::invalid(format!(
                    "index 0 is not an identity for element {g}"
                )));
            }
            let h = self.inv(g);
            if self.mul(g, h) != 0 || self.mul(h, g) != 0 {
                return Err(Error::invalid(format!(
                    "element {g} has no two-sided inverse"
                )));
            }
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &s in &self.generators {
                let y = self.mul(x, s);
                if !std::mem::replace(&mut seen[y], true) {
                    queue.push(y);
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&b| !b) {
            return Err(Error::invalid(format!(
                "generators do not reach element {missing}"
            )));
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        let fail = |a, b, c| {
            Err(Error::invalid(format!(
                "not associative at ({a}, {b}, {c})"
            )))
        };
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..10 * n {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !assoc(a, b, c) {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupRep {
        GroupRep::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &Limits::default()).unwrap()
    }

    #[test]
    fn symmetric_three() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let three_cycle = g.generators()[1];
        assert_eq!(g.element_order(three_cycle), 3);
        assert_eq!(g.element_order(0), 1);
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
        }
    }

    #[test]
    fn canonical_bfs_order() {
        let g = s3();
        // level 1: the two generators in list order
        assert_eq!(g.generators(), &[1, 2]);
        assert_eq!(g.word(1).unwrap(), &[1, 0, 2]);
        assert_eq!(g.word(2).unwrap(), &[1, 2, 0]);
        // level 2, generator 0 first: t*t = 1 (old), c*t; then generator 1: t*c, c*c
        assert_eq!(g.word(3).unwrap(), &[0, 2, 1]);
        assert_eq!(g.word(4).unwrap(), &[2, 1, 0]);
        assert_eq!(g.word(5).unwrap(), &[2, 0, 1]);
    }

    #[test]
    fn identity_generator() {
        let g = GroupRep::from_permutations(4, &[vec![0, 1, 2, 3]], &Limits::default()).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn rejects_non_bijection() {
        let err = GroupRep::from_permutations(3, &[vec![0, 0, 2]], &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
        let err = GroupRep::from_permutations(3, &[vec![0, 1]], &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn cap_is_named() {
        let limits = Limits {
            blackbox_cap: 100,
            ..Limits::default()
        };
        let shift: Vec<usize> = (0..6).map(|i| (i + 1) % 6).collect();
        let swap = vec![1, 0, 2, 3, 4, 5];
        let err = GroupRep::from_permutations(6, &[shift, swap], &limits).unwrap_err();
        assert!(err.to_string().contains("cap of 100"), "{err}");
    }

    #[test]
    fn unitriangular_orders() {
        let l = Limits::default();
        assert_eq!(GroupRep::unitriangular(3, 2, &l).unwrap().order(), 8);
        assert_eq!(GroupRep::unitriangular(4, 2, &l).unwrap().order(), 64);
        assert!(GroupRep::unitriangular(1, 2, &l).is_err());
        assert!(GroupRep::unitriangular(3, 4, &l).is_err());
        let tiny = Limits {
            blackbox_cap: 50,
            ..l
        };
        assert!(matches!(
            GroupRep::unitriangular(4, 2, &tiny),
            Err(Error::GroupTooLarge { cap: 50 })
        ));
        // E12 and E23 generate all of UT(3,2)
        let sub =
            GroupRep::unitriangular_subgroup(3, 2, &[vec![1, 0, 0], vec![0, 0, 1]], &l).unwrap();
        assert_eq!(sub.order(), 8);
        let centre = GroupRep::unitriangular_subgroup(3, 3, &[vec![0, 1, 0]], &l).unwrap();
        assert_eq!(centre.order(), 3);
        assert!(GroupRep::unitriangular_subgroup(3, 2, &[vec![2, 0, 0]], &l).is_err());
        assert!(GroupRep::unitriangular_subgroup(3, 2, &[vec![1, 0]], &l).is_err());
    }

    #[test]
    fn black_box_matches_dense() {
        let dense = GroupRep::unitriangular(4, 2, &Limits::default()).unwrap();
        let bb = GroupRep::unitriangular(
            4,
            2,
            &Limits {
                dense_cap: 16,
                ..Limits::default()
            },
        )
        .unwrap();
        assert_eq!(bb.backend_kind(), BackendKind::Unitriangular);
        assert_eq!(dense.backend_kind(), BackendKind::Cayley);
        assert_eq!(dense.cayley_table(), bb.cayley_table());
    }

    #[test]
    fn foreign_elements_rejected() {
        let a = s3();
        let b = s3();
        let x = a.element(1).unwrap();
        let y = b.element(2).unwrap();
        assert!(matches!(
            a.mul_elements(x, y),
            Err(Error::ForeignElement { .. })
        ));
        let z = a.mul_elements(x, a.inv_element(x).unwrap()).unwrap();
        assert_eq!(z, a.identity());
        assert_eq!(a.order_of(a.identity()).unwrap(), 1);
    }

    #[test]
    fn table_roundtrip_and_validation() {
        let g = s3();
        let raw: Vec<usize> = g.cayley_table().into_iter().map(|x| x as usize).collect();
        let h = GroupRep::from_table(&raw, Some(g.generators()), &Limits::default()).unwrap();
        assert_eq!(h.cayley_table(), g.cayley_table());

        let mut broken = raw.clone();
        broken.swap(7, 8);
        assert!(GroupRep::from_table(&broken, None, &Limits::default()).is_err());
        assert!(GroupRep::from_table(&raw[..5], None, &Limits::default()).is_err());
    }
}
