//! Smith normal form of small integer matrices, with transforms.

use std::collections::BTreeMap;

pub type IMat = Vec<Vec<i128>>;

pub struct Snf {
    /// Diagonal entries, nonnegative, each dividing the next; zeros last.
    pub diag: Vec<i128>,
    /// Unimodular `l` (rows x rows) and `r` (cols x cols) with `l * a * r = d`.
    pub l: IMat,
    pub r: IMat,
}

fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

pub fn snf(a: &IMat) -> Snf {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut d = a.clone();
    let mut l = identity(m);
    let mut r = identity(n);
    let k = m.min(n);
    for t in 0..k {
        // pivot: smallest nonzero absolute value in the remaining block
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[i][j] != 0 && best.map_or(true, |(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, l, r, k);
            };
            d.swap(t, pi);
            l.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            for row in r.iter_mut() {
                row.swap(t, pj);
            }
            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let f = d[i][t] / p;
                if f != 0 {
                    for j in 0..n {
                        d[i][j] -= f * d[t][j];
                    }
                    for j in 0..m {
                        l[i][j] -= f * l[t][j];
                    }
                }
                if d[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let f = d[t][j] / p;
                if f != 0 {
                    for i in 0..m {
                        d[i][j] -= f * d[i][t];
                    }
                    for i in 0..n {
                        r[i][j] -= f * r[i][t];
                    }
                }
                if d[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold a non-divisible entry into row t
            let mut bad = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if d[i][j] % p != 0 {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => {
                    for j in 0..n {
                        d[t][j] += d[i][j];
                    }
                    for j in 0..m {
                        l[t][j] += l[i][j];
                    }
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for j in 0..n {
                d[t][j] = -d[t][j];
            }
            for j in 0..m {
                l[t][j] = -l[t][j];
            }
        }
    }
    finish(d, l, r, k)
}

fn finish(d: IMat, l: IMat, r: IMat, k: usize) -> Snf {
    let diag = (0..k).map(|i| d[i][i].abs()).collect();
    Snf { diag, l, r }
}

/// Invariant factors greater than 1.
pub fn invariant_factors(a: &IMat) -> Vec<i128> {
    snf(a).diag.into_iter().filter(|&x| x != 1).collect()
}

fn factorize(mut n: i128) -> Vec<(i128, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Canonical form of a finite abelian group: multiset of prime-power orders
/// of its cyclic primary components.
pub fn primary_decomposition(invariants: &[i128]) -> BTreeMap<i128, u32> {
    let mut out = BTreeMap::new();
    for &x in invariants {
        assert!(x > 0, "infinite component");
        for (p, e) in factorize(x) {
            *out.entry(p.pow(e)).or_insert(0) += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &IMat, b: &IMat) -> IMat {
        let n = a.len();
        let m = b[0].len();
        (0..n).map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let a: IMat = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = snf(&a);
        assert_eq!(s.diag, vec![2, 6, 12]);
        let d = mul(&mul(&s.l, &a), &s.r);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d[i][j], if i == j { s.diag[i] } else { 0 });
            }
        }
    }

    #[test]
    fn primary_parts() {
        let p = primary_decomposition(&[2, 12, 24]);
        assert_eq!(p.get(&2), Some(&1));
        assert_eq!(p.get(&4), Some(&1));
        assert_eq!(p.get(&8), Some(&1));
        assert_eq!(p.get(&3), Some(&2));
    }
}
