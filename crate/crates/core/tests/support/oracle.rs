//! Naive all-pairs computations used as an oracle. Only the multiplication
//! table of the group is read.

#![allow(dead_code)]

use std::collections::BTreeSet;

use vseries::GroupRep;

pub struct Naive {
    pub n: usize,
    pub identity: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl Naive {
    pub fn new(g: &GroupRep) -> Self {
        let n = g.order();
        let table: Vec<usize> = (0..n * n).map(|k| g.mul(k / n, k % n)).collect();
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x))
            .expect("identity");
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| table[x * n + y] == e).expect("inverse"))
            .collect();
        Naive {
            n,
            identity: e,
            table,
            inverse,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Smallest subset containing `set` and closed under products.
    pub fn closure(&self, set: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut s: BTreeSet<usize> = set.into_iter().collect();
        s.insert(self.identity);
        loop {
            let products: Vec<usize> = s
                .iter()
                .flat_map(|&a| s.iter().map(move |&b| (a, b)))
                .map(|(a, b)| self.mul(a, b))
                .collect();
            let before = s.len();
            s.extend(products);
            if s.len() == before {
                return s;
            }
        }
    }

    pub fn classes(&self) -> BTreeSet<BTreeSet<usize>> {
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|g| self.mul(self.mul(self.inv(g), x), g))
                    .collect()
            })
            .collect()
    }

    pub fn centralizer_order(&self, x: usize) -> usize {
        (0..self.n)
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .count()
    }

    pub fn center(&self) -> BTreeSet<usize> {
        (0..self.n)
            .filter(|&x| self.centralizer_order(x) == self.n)
            .collect()
    }

    /// `[A, B]` for subsets `A`, `B`.
    pub fn commutator_subgroup(&self, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.closure(
            a.iter()
                .flat_map(|&x| b.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.commutator(x, y)),
        )
    }

    pub fn whole(&self) -> BTreeSet<usize> {
        (0..self.n).collect()
    }

    pub fn derived(&self) -> BTreeSet<usize> {
        self.commutator_subgroup(&self.whole(), &self.whole())
    }

    /// `V(G)` from `|C_G(g)| > |G:G'|`.
    pub fn vanishing_off(&self) -> BTreeSet<usize> {
        let abelianization = self.n / self.derived().len();
        self.closure((0..self.n).filter(|&x| self.centralizer_order(x) > abelianization))
    }
}
