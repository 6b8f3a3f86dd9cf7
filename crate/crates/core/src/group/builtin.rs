//! Named group families.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{GroupRep, Limits, WordKind};
use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtraspecialExponent {
    /// Exponent `p`: the Heisenberg group mod `p`.
    P,
    /// Exponent `p^2`: `<a, b | a^(p^2) = b^p = 1, b^-1 a b = a^(1+p)>`.
    PSquared,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic {
        n: usize,
    },
    /// Direct product of cyclic groups of the listed orders.
    Abelian {
        factors: Vec<usize>,
    },
    /// Dihedral group of the given order (symmetries of an `order/2`-gon).
    Dihedral {
        order: usize,
    },
    /// Generalized quaternion (dicyclic) group of the given order.
    Quaternion {
        order: usize,
    },
    /// Extraspecial group of order `p^3` for an odd prime `p`.
    Extraspecial {
        p: u32,
        exponent: ExtraspecialExponent,
    },
    /// Matrices in UT(4, p) whose entries (2,3) and (3,4) agree; order `p^5`,
    /// class 3, with `V_3 < G_3`.
    UnitriangularSlice {
        p: u32,
    },
    Product(Box<Family>, Box<Family>),
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Cyclic { n } => format!("cyclic({n})"),
            Family::Abelian { factors } => {
                let f: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                format!("abelian({})", f.join(","))
            }
            Family::Dihedral { order } => format!("dihedral({order})"),
            Family::Quaternion { order } => format!("quaternion({order})"),
            Family::Extraspecial { p, exponent } => match exponent {
                ExtraspecialExponent::P => format!("extraspecial({p}^(1+2),exp={p})"),
                ExtraspecialExponent::PSquared => format!("extraspecial({p}^(1+2),exp={})", p * p),
            },
            Family::UnitriangularSlice { p } => format!("ut4slice({p})"),
            Family::Product(a, b) => format!("{}x{}", a.name(), b.name()),
        }
    }

    /// Parse the `family` / `params` pair of a group file.
    pub fn from_json(family: &str, params: &Value) -> Result<Family> {
        let field = |key: &str| -> Result<&Value> {
            params
                .get(key)
                .ok_or_else(|| Error::invalid(format!("family `{family}` needs parameter `{key}`")))
        };
        let uint = |key: &str| -> Result<usize> {
            field(key)?.as_u64().map(|x| x as usize).ok_or_else(|| {
                Error::invalid(format!("parameter `{key}` must be a non-negative integer"))
            })
        };
        Ok(match family {
            "cyclic" => Family::Cyclic { n: uint("n")? },
            "abelian" => Family::Abelian {
                factors: serde_json::from_value(field("factors")?.clone())
                    .map_err(|e| Error::invalid(format!("parameter `factors`: {e}")))?,
            },
            "dihedral" => Family::Dihedral {
                order: uint("order")?,
            },
            "quaternion" => Family::Quaternion {
                order: uint("order")?,
            },
            "extraspecial" => {
                let p = uint("p")? as u32;
                let e = uint("exponent")? as u32;
                let exponent = if e == p {
                    ExtraspecialExponent::P
                } else if e == p * p {
                    ExtraspecialExponent::PSquared
                } else {
                    return Err(Error::invalid(format!(
                        "extraspecial exponent must be {p} or {}",
                        p * p
                    )));
                };
                Family::Extraspecial { p, exponent }
            }
            "unitriangular-slice" => Family::UnitriangularSlice {
                p: uint("p")? as u32,
            },
            "product" => {
                let side = |key: &str| -> Result<Family> {
                    let v = field(key)?;
                    let fam = v.get("family").and_then(Value::as_str).ok_or_else(|| {
                        Error::invalid(format!("`{key}` needs a `family` string"))
                    })?;
                    Family::from_json(fam, v.get("params").unwrap_or(&Value::Null))
                };
                Family::Product(Box::new(side("left")?), Box::new(side("right")?))
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

pub fn build_builtin(family: &Family, limits: &Limits) -> Result<GroupRep> {
    match family {
        Family::Cyclic { n } => {
            if *n == 0 {
                return Err(Error::invalid("cyclic group order must be positive"));
            }
            GroupRep::from_permutations(*n, &[cycle(*n)], limits)
        }
        Family::Abelian { factors } => {
            if factors.contains(&0) {
                return Err(Error::invalid("abelian factors must be positive"));
            }
            let degree: usize = factors.iter().sum();
            let mut gens = Vec::new();
            let mut offset = 0;
            for &f in factors {
                let mut g: Vec<usize> = (0..degree).collect();
                for i in 0..f {
                    g[offset + i] = offset + (i + 1) % f;
                }
                gens.push(g);
                offset += f;
            }
            GroupRep::from_permutations(degree.max(1), &gens, limits)
        }
        Family::Dihedral { order } => {
            if *order < 4 || order % 2 != 0 {
                return Err(Error::invalid(format!(
                    "dihedral order must be even and at least 4, got {order}"
                )));
            }
            let m = order / 2;
            let reflection: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
            if m == 2 {
                // the 2-gon: act on four points so both generators are faithful
                return GroupRep::from_permutations(
                    4,
                    &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]],
                    limits,
                );
            }
            GroupRep::from_permutations(m, &[cycle(m), reflection], limits)
        }
        Family::Quaternion { order } => {
            if *order < 8 || order % 4 != 0 {
                return Err(Error::invalid(format!(
                    "quaternion order must be a multiple of 4 and at least 8, got {order}"
                )));
            }
            // elements a^i b^j with i < 2m, j < 2; index = 2i + j
            let m = order / 4;
            let n = 2 * m;
            let idx = |i: usize, j: usize| 2 * (i % n) + j;
            let mut table = vec![0usize; order * order];
            for x in 0..*order {
                let (i, j) = (x / 2, x % 2);
                for y in 0..*order {
                    let (k, l) = (y / 2, y % 2);
                    table[x * order + y] = match (j, l) {
                        (0, _) => idx(i + k, l),
                        (1, 0) => idx(i + n - k, 1),
                        _ => idx(i + n - k + m, 0),
                    };
                }
            }
            GroupRep::from_table(&table, Some(&[idx(1, 0), idx(0, 1)]), limits)
        }
        Family::Extraspecial { p, exponent } => {
            if *p == 2 || !arith::is_prime(*p as u64) {
                return Err(Error::invalid(format!(
                    "extraspecial family takes an odd prime (use dihedral(8) or quaternion(8) for p = 2), got {p}"
                )));
            }
            match exponent {
                ExtraspecialExponent::P => GroupRep::unitriangular(3, *p, limits),
                ExtraspecialExponent::PSquared => {
                    // elements a^i b^j, i < p^2, j < p; b^j a^k = a^(k (1-p)^j) b^j
                    let p = *p as usize;
                    let q = p * p;
                    let order = q * p;
                    let twist: Vec<usize> = (0..p)
                        .map(|j| arith::pow_mod((q + 1 - p) as u64, j as u64, q as u64) as usize)
                        .collect();
                    let mut table = vec![0usize; order * order];
                    for x in 0..order {
                        let (i, j) = (x / p, x % p);
                        for y in 0..order {
                            let (k, l) = (y / p, y % p);
                            let a = (i + k * twist[j]) % q;
                            table[x * order + y] = a * p + (j + l) % p;
                        }
                    }
                    GroupRep::from_table(&table, Some(&[p, 1]), limits)
                }
            }
        }
        Family::UnitriangularSlice { p } => {
            if !arith::is_prime(*p as u64) {
                return Err(Error::invalid(format!(
                    "unitriangular slice needs a prime, got {p}"
                )));
            }
            // words list entries (1,2),(1,3),(1,4),(2,3),(2,4),(3,4)
            let kind = WordKind::Unitriangular { n: 4, p: *p };
            let gens = [
                [1, 0, 0, 0, 0, 0],
                [0, 0, 0, 1, 0, 1],
                [0, 1, 0, 0, 0, 0],
                [0, 0, 0, 0, 1, 0],
            ]
            .iter()
            .map(|w| w.to_vec().into_boxed_slice())
            .collect();
            GroupRep::from_words(kind, gens, limits)
        }
        Family::Product(a, b) => {
            let a = build_builtin(a, limits)?;
            let b = build_builtin(b, limits)?;
            GroupRep::direct_product(&a, &b, limits)
        }
    }
}
