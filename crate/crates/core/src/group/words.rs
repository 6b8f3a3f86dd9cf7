//! Concrete element words: permutations and unitriangular matrices.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum WordKind {
    Permutation {
        degree: usize,
    },
    /// Entries strictly above the diagonal, row-major.
    Unitriangular {
        n: usize,
        p: u32,
    },
}

fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // rows 0..i contribute (n-1) + (n-2) + ... + (n-i) entries
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl WordKind {
    pub(crate) fn identity(&self) -> Box<[u32]> {
        match *self {
            WordKind::Permutation { degree } => (0..degree as u32).collect(),
            WordKind::Unitriangular { n, .. } => vec![0; n * (n - 1) / 2].into(),
        }
    }

    pub(crate) fn elementary(&self, i: usize, j: usize) -> Box<[u32]> {
        let mut w = self.identity();
        if let WordKind::Unitriangular { n, .. } = *self {
            w[upper_index(n, i, j)] = 1;
        }
        w
    }

    pub(crate) fn compose(&self, a: &[u32], b: &[u32]) -> Box<[u32]> {
        match *self {
            WordKind::Permutation { .. } => a.iter().map(|&x| b[x as usize]).collect(),
            WordKind::Unitriangular { n, p } => {
                let p = p as u64;
                let entry = |m: &[u32], i: usize, k: usize| -> u64 {
                    match i.cmp(&k) {
                        std::cmp::Ordering::Equal => 1,
                        std::cmp::Ordering::Less => m[upper_index(n, i, k)] as u64,
                        std::cmp::Ordering::Greater => 0,
                    }
                };
                let mut out = vec![0u32; a.len()];
                for i in 0..n {
                    for j in i + 1..n {
                        let s: u64 = (i..=j).map(|k| entry(a, i, k) * entry(b, k, j)).sum();
                        out[upper_index(n, i, j)] = (s % p) as u32;
                    }
                }
                out.into()
            }
        }
    }

    pub(crate) fn describe(&self, w: &[u32]) -> String {
        match *self {
            WordKind::Permutation { .. } => {
                let mut seen = vec![false; w.len()];
                let mut out = String::new();
                for start in 0..w.len() {
                    if seen[start] || w[start] as usize == start {
                        continue;
                    }
                    out.push('(');
                    let mut x = start;
                    let mut first = true;
                    while !seen[x] {
                        seen[x] = true;
                        if !first {
                            out.push(' ');
                        }
                        out.push_str(&x.to_string());
                        first = false;
                        x = w[x] as usize;
                    }
                    out.push(')');
                }
                if out.is_empty() {
                    "()".into()
                } else {
                    out
                }
            }
            WordKind::Unitriangular { .. } => {
                let entries: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                format!("[{}]", entries.join(","))
            }
        }
    }
}
