//! Exact irreducible character tables by the Dixon–Burnside method.
//!
//! Central characters are found as common eigenvectors of the class
//! multiplication matrices over a prime field `F_l` with `l ≡ 1 (mod e)`,
//! `e` the exponent. Each character is then lifted to `Z[ζ_e]` by reading off
//! the eigenvalue multiplicities of `ρ(g)` from the values on powers of `g`.

mod cyclotomic;

use std::collections::BTreeSet;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInt, CyclotomicRing};

use crate::arith::{self, inv_mod, pow_mod};
use crate::error::{Error, Result};
use crate::group::GroupRep;
use crate::linalg::{char_poly, eval_poly, nullspace, rref, Row};
use crate::subgroup::{conjugacy_classes, generated_subgroup, ConjugacyClassData, SubgroupSet};

/// Largest group order for which tables are computed unless overridden.
pub const DEFAULT_CHARACTER_CAP: usize = 1024;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_id: u64,
    pub order: usize,
    pub classes: ConjugacyClassData,
    /// The prime `l` used for the modular computation.
    pub prime: u64,
    pub ring: CyclotomicRing,
    /// `rows[chi][class]`; row 0 is the trivial character.
    pub rows: Vec<Vec<CyclotomicInt>>,
    pub degrees: Vec<u64>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn conductor(&self) -> u32 {
        self.ring.conductor()
    }

    pub fn value(&self, row: usize, class: usize) -> &CyclotomicInt {
        &self.rows[row][class]
    }

    pub fn is_linear(&self, row: usize) -> bool {
        self.degrees[row] == 1
    }

    pub fn nonlinear_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&r| !self.is_linear(r))
    }

    /// `|G| ⟨χ_a, χ_b⟩ = Σ_c |c| χ_a(c) conj(χ_b(c))`.
    pub fn scaled_inner_product(&self, a: usize, b: usize) -> CyclotomicInt {
        (0..self.classes.len()).fold(self.ring.zero(), |acc, c| {
            let t = self
                .ring
                .mul(&self.rows[a][c], &self.ring.conj(&self.rows[b][c]));
            acc.add(&t.scale(self.classes.size(c) as i64))
        })
    }

    /// `Σ_χ χ(c) conj(χ(d))`.
    pub fn column_product(&self, c: usize, d: usize) -> CyclotomicInt {
        self.rows.iter().fold(self.ring.zero(), |acc, row| {
            acc.add(&self.ring.mul(&row[c], &self.ring.conj(&row[d])))
        })
    }

    /// Exact first and second orthogonality and the degree sum; the first
    /// violation found is returned as an error.
    pub fn check_orthogonality(&self) -> Result<()> {
        let r = self.len();
        if r != self.classes.len() {
            return Err(Error::CharacterConsistency(format!(
                "{r} characters for {} classes",
                self.classes.len()
            )));
        }
        let squares: u64 = self.degrees.iter().map(|d| d * d).sum();
        if squares != self.order as u64 {
            return Err(Error::CharacterConsistency(format!(
                "sum of squared degrees {squares} ≠ {}",
                self.order
            )));
        }
        let conj: Vec<Vec<CyclotomicInt>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|v| self.ring.conj(v)).collect())
            .collect();
        for a in 0..r {
            for b in a..r {
                let s = (0..r).fold(self.ring.zero(), |acc, c| {
                    acc.add(
                        &self
                            .ring
                            .mul(&self.rows[a][c], &conj[b][c])
                            .scale(self.classes.size(c) as i64),
                    )
                });
                let want = if a == b { self.order as i64 } else { 0 };
                if s != self.ring.integer(want) {
                    return Err(Error::CharacterConsistency(format!(
                        "rows {a} and {b}: scaled inner product {s} ≠ {want}"
                    )));
                }
            }
        }
        for c in 0..r {
            for d in c..r {
                let s = (0..r).fold(self.ring.zero(), |acc, x| {
                    acc.add(&self.ring.mul(&self.rows[x][c], &conj[x][d]))
                });
                let want = if c == d {
                    self.classes.centralizer_order[c] as i64
                } else {
                    0
                };
                if s != self.ring.integer(want) {
                    return Err(Error::CharacterConsistency(format!(
                        "classes {c} and {d}: column product {s} ≠ {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_group(&self, g: &GroupRep) {
        assert_eq!(
            self.group_id,
            g.id(),
            "character table used with a different group"
        );
    }
}

/// Least prime `l ≡ 1 (mod e)` with `l > 2 sqrt(order)`.
pub fn choose_prime(e: u64, order: u64) -> u64 {
    let mut l = e + 1;
    while !(l * l > 4 * order && arith::is_prime(l)) {
        l += e;
    }
    l
}

fn primitive_root(l: u64) -> u64 {
    let factors = arith::factorize(l - 1);
    (2..l)
        .find(|&g| {
            factors
                .iter()
                .all(|&(q, _)| pow_mod(g, (l - 1) / q, l) != 1)
        })
        .unwrap_or(1)
}

/// Class matrix `M_j` with `(M_j)[k][m] = #{x in C_j : x^-1 z_m in C_k}`, so
/// that central characters are its right eigenvectors.
fn class_matrix(g: &GroupRep, cd: &ConjugacyClassData, j: usize, l: u64) -> Vec<Row> {
    let r = cd.len();
    let mut m = vec![vec![0u64; r]; r];
    for col in 0..r {
        let z = cd.representative(col);
        for &x in &cd.classes[j] {
            let k = cd.class_of[g.mul(g.inv(x), z)];
            m[k][col] += 1;
        }
    }
    for row in &mut m {
        for v in row.iter_mut() {
            *v %= l;
        }
    }
    m
}

fn mat_vec(m: &[Row], v: &[u64], l: u64) -> Row {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % l))
        .collect()
}

/// Splits `space` (an RREF basis) into the eigenspaces of `m` restricted to it.
fn split(space: &[Row], pivots: &[usize], m: &[Row], l: u64) -> Result<Vec<Vec<Row>>> {
    let d = space.len();
    let images: Vec<Row> = space.iter().map(|b| mat_vec(m, b, l)).collect();
    // a[s][t]: coordinate of M b_s along b_t
    let a: Vec<Row> = images
        .iter()
        .map(|v| pivots.iter().map(|&p| v[p]).collect())
        .collect();
    let poly = char_poly(&a, l);
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in 0..l {
        if eval_poly(&poly, lambda, l) != 0 {
            continue;
        }
        // x (A - λI) = 0 as a row vector
        let t: Vec<Row> = (0..d)
            .map(|col| {
                (0..d)
                    .map(|s| (a[s][col] + if s == col { l - lambda } else { 0 }) % l)
                    .collect()
            })
            .collect();
        let mut vecs: Vec<Row> = nullspace(&t, d, l)
            .iter()
            .map(|x| {
                let mut w = vec![0u64; m.len()];
                for (s, &xs) in x.iter().enumerate() {
                    for (wi, &bi) in w.iter_mut().zip(&space[s]) {
                        *wi = (*wi + xs * bi) % l;
                    }
                }
                w
            })
            .collect();
        rref(&mut vecs, l);
        total += vecs.len();
        parts.push(vecs);
    }
    if total != d {
        return Err(Error::CharacterConsistency(format!(
            "class matrix is not diagonalizable on a {d}-dimensional common eigenspace"
        )));
    }
    Ok(parts)
}

/// Normalized central characters `ω`, one per irreducible character, each with
/// `ω[identity class] = 1`.
fn central_characters(g: &GroupRep, cd: &ConjugacyClassData, l: u64) -> Result<Vec<Row>> {
    let r = cd.len();
    let mut identity: Vec<Row> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    rref(&mut identity, l);
    let mut spaces = vec![identity];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(g, cd, j, l);
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let mut basis = space;
            let pivots = rref(&mut basis, l);
            next.extend(split(&basis, &pivots, &m, l)?);
        }
        spaces = next;
    }
    spaces
        .into_iter()
        .map(|mut s| {
            if s.len() != 1 {
                return Err(Error::CharacterConsistency(format!(
                    "a {}-dimensional common eigenspace survives every class matrix",
                    s.len()
                )));
            }
            let mut w = s.pop().unwrap();
            if w[0] == 0 {
                return Err(Error::CharacterConsistency(
                    "central character vanishes on the identity".into(),
                ));
            }
            let inv = inv_mod(w[0], l);
            for x in w.iter_mut() {
                *x = *x * inv % l;
            }
            Ok(w)
        })
        .collect()
}

fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// The exact character table, provided `|G| <= cap`.
pub fn character_table(g: &GroupRep, cap: usize) -> Result<CharacterTable> {
    if g.order() > cap {
        return Err(Error::CharacterCap {
            order: g.order(),
            cap,
        });
    }
    let cd = conjugacy_classes(g);
    character_table_with_classes(g, cd)
}

pub(crate) fn character_table_with_classes(
    g: &GroupRep,
    cd: ConjugacyClassData,
) -> Result<CharacterTable> {
    let order = g.order() as u64;
    let r = cd.len();
    let e = g.exponent();
    let l = choose_prime(e, order);
    let omegas = central_characters(g, &cd, l)?;

    let inverse_class: Vec<usize> = (0..r)
        .map(|c| cd.class_of[g.inv(cd.representative(c))])
        .collect();
    let size_inv: Vec<u64> = (0..r).map(|c| inv_mod(cd.size(c) as u64 % l, l)).collect();
    // power_class[c][j] = class of z_c^j
    let power_class: Vec<Vec<usize>> = (0..r)
        .map(|c| {
            let z = cd.representative(c);
            let mut x = 0;
            (0..e)
                .map(|_| {
                    let k = cd.class_of[x];
                    x = g.mul(x, z);
                    k
                })
                .collect()
        })
        .collect();
    let zeta = pow_mod(primitive_root(l), (l - 1) / e, l);
    let zeta_inv = inv_mod(zeta, l);
    let e_inv = inv_mod(e % l, l);
    let ring = CyclotomicRing::new(e as u32);
    let bound = isqrt(order);

    let mut chars = Vec::with_capacity(r);
    for w in &omegas {
        let s = (0..r).fold(0, |acc, i| {
            (acc + w[i] * w[inverse_class[i]] % l * size_inv[i]) % l
        });
        if s == 0 {
            return Err(Error::CharacterConsistency(
                "degree normalizer vanishes".into(),
            ));
        }
        let d2 = order % l * inv_mod(s, l) % l;
        let d = (1..=bound).find(|&d| d * d % l == d2).ok_or_else(|| {
            Error::CharacterConsistency(format!("no degree with square {d2} mod {l}"))
        })?;
        let modular: Vec<u64> = (0..r)
            .map(|i| w[i] * (d % l) % l * size_inv[i] % l)
            .collect();
        let mut row = Vec::with_capacity(r);
        for c in 0..r {
            let mut mult = vec![0i64; e as usize];
            let mut total = 0;
            for (k, slot) in mult.iter_mut().enumerate() {
                let step = pow_mod(zeta_inv, k as u64, l);
                let mut twist = 1;
                let mut acc = 0;
                for j in 0..e as usize {
                    acc = (acc + modular[power_class[c][j]] * twist) % l;
                    twist = twist * step % l;
                }
                let m = acc * e_inv % l;
                if m > d {
                    return Err(Error::CharacterConsistency(format!(
                        "eigenvalue multiplicity {m} exceeds degree {d} on class {c}"
                    )));
                }
                *slot = m as i64;
                total += m;
            }
            if total != d {
                return Err(Error::CharacterConsistency(format!(
                    "multiplicities on class {c} sum to {total}, not the degree {d}"
                )));
            }
            row.push(ring.from_multiplicities(&mult));
        }
        chars.push((d, row));
    }

    let trivial = ring.integer(1);
    chars.sort_by(|(da, ra), (db, rb)| {
        let ta = ra.iter().all(|v| *v == trivial);
        let tb = rb.iter().all(|v| *v == trivial);
        tb.cmp(&ta).then(da.cmp(db)).then_with(|| ra.cmp(rb))
    });
    let (degrees, rows) = chars.into_iter().unzip();
    let table = CharacterTable {
        group_id: g.id(),
        order: g.order(),
        classes: cd,
        prime: l,
        ring,
        rows,
        degrees,
    };
    table.check_orthogonality()?;
    Ok(table)
}

/// Classes on which the character is exactly zero.
pub fn vanishing_set(t: &CharacterTable, row: usize) -> BTreeSet<usize> {
    (0..t.classes.len())
        .filter(|&c| t.rows[row][c].is_zero())
        .collect()
}

/// The subgroup generated by elements on which some nonlinear character is
/// nonzero.
pub fn v_from_table(g: &GroupRep, t: &CharacterTable) -> SubgroupSet {
    t.check_group(g);
    let mut support = Vec::new();
    for c in 0..t.classes.len() {
        if t.nonlinear_rows().any(|row| !t.rows[row][c].is_zero()) {
            support.extend_from_slice(&t.classes.classes[c]);
        }
    }
    generated_subgroup(g, &support)
}

pub fn v_from_characters(g: &GroupRep, cap: usize) -> Result<SubgroupSet> {
    Ok(v_from_table(g, &character_table(g, cap)?))
}

/// Classes in the kernel of a character: where it takes the value `χ(1)`.
pub fn kernel_classes(t: &CharacterTable, row: usize) -> BTreeSet<usize> {
    let one = t.ring.integer(t.degrees[row] as i64);
    (0..t.classes.len())
        .filter(|&c| t.rows[row][c] == one)
        .collect()
}

/// Rows whose kernel does not contain `h`.
pub fn irr_over(t: &CharacterTable, h: &SubgroupSet) -> BTreeSet<usize> {
    let classes: BTreeSet<usize> = h.elements().map(|x| t.classes.class_of[x]).collect();
    (0..t.len())
        .filter(|&row| {
            let ker = kernel_classes(t, row);
            classes.iter().any(|c| !ker.contains(c))
        })
        .collect()
}
