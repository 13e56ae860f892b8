//! The F4 root datum in the numbering of the positive-root table.
//!
//! Roots are addressed by 0-based indices `0..48`; index `i` is root number
//! `i + 1` of the table, and `i + 24` is its negative.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

pub const NROOTS: usize = 48;
pub const NPOS: usize = 24;

/// Coordinates of the positive roots in the base alpha_1..alpha_4.
pub const POSITIVE_ROOTS: [[i32; 4]; NPOS] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [0, 1, 1, 0],
    [0, 0, 1, 1],
    [1, 1, 1, 0],
    [0, 1, 2, 0],
    [0, 1, 1, 1],
    [1, 1, 2, 0],
    [1, 1, 1, 1],
    [0, 1, 2, 1],
    [1, 2, 2, 0],
    [1, 1, 2, 1],
    [0, 1, 2, 2],
    [1, 2, 2, 1],
    [1, 1, 2, 2],
    [1, 2, 3, 1],
    [1, 2, 2, 2],
    [1, 2, 3, 2],
    [1, 2, 4, 2],
    [1, 3, 4, 2],
    [2, 3, 4, 2],
];

/// The dagger column of the positive-root table (1-based).
pub const DAGGER_COLUMN: [usize; NPOS] = [
    4, 3, 2, 1, 7, 9, 5, 16, 6, 11, 10, 18, 14, 13, 20, 8, 22, 12, 23, 15, 24, 17, 19, 21,
];

/// Twice the Gram matrix of the simple roots; long roots have norm 4 here.
const GRAM2: [[i32; 4]; 4] = [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]];

pub type Vec4 = [i32; 4];

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub coords: Vec<Vec4>,
    pub coroots: Vec<Vec4>,
    pub long: Vec<bool>,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: [[i32; 4]; 4],
    pub dagger: Vec<usize>,
    sums: Vec<Option<usize>>,
    lookup: HashMap<Vec4, usize>,
}

pub fn neg(i: usize) -> usize {
    (i + NPOS) % NROOTS
}

pub fn is_positive(i: usize) -> bool {
    i < NPOS
}

impl RootSystem {
    pub fn build() -> RootSystem {
        let mut coords = Vec::with_capacity(NROOTS);
        coords.extend_from_slice(&POSITIVE_ROOTS);
        for r in POSITIVE_ROOTS {
            coords.push([-r[0], -r[1], -r[2], -r[3]]);
        }
        let lookup: HashMap<Vec4, usize> = coords.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let norm = |c: &Vec4| gram2(c, c);
        let long: Vec<bool> = coords.iter().map(|c| norm(c) == 4).collect();
        // alpha^vee = 2 alpha / (alpha, alpha) and alpha_i^vee = 2 alpha_i / (alpha_i, alpha_i)
        let coroots: Vec<Vec4> = coords
            .iter()
            .map(|c| {
                let n = norm(c);
                let mut out = [0; 4];
                for i in 0..4 {
                    let num = c[i] * GRAM2[i][i];
                    assert_eq!(num % n, 0);
                    out[i] = num / n;
                }
                out
            })
            .collect();
        let mut cartan = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                cartan[i][j] = 2 * GRAM2[i][j] / GRAM2[j][j];
            }
        }
        let n = coords.len();
        let mut sums = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                let s = add(&coords[a], &coords[b]);
                sums[a * n + b] = lookup.get(&s).copied();
            }
        }
        let mut rs = RootSystem { coords, coroots, long, cartan, dagger: vec![0; n], sums, lookup };
        // delta(alpha_i) = alpha_{5-i}^vee; alpha^dagger is the root whose coroot is delta(alpha)
        let by_coroot: HashMap<Vec4, usize> = rs.coroots.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        for i in 0..n {
            let c = rs.coords[i];
            let d = [c[3], c[2], c[1], c[0]];
            rs.dagger[i] = *by_coroot.get(&d).expect("dual root");
        }
        rs
    }

    pub fn index_of(&self, c: &Vec4) -> Option<usize> {
        self.lookup.get(c).copied()
    }

    /// `alpha_a + alpha_b` if it is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * NROOTS + b]
    }

    /// `<chi, gamma>` for chi in root coordinates and gamma in coroot coordinates.
    pub fn pairing(&self, chi: &Vec4, gamma: &Vec4) -> i32 {
        let mut s = 0;
        for i in 0..4 {
            for j in 0..4 {
                s += chi[i] * self.cartan[i][j] * gamma[j];
            }
        }
        s
    }

    /// `<alpha_a, alpha_b^vee>`.
    pub fn pair_roots(&self, a: usize, b: usize) -> i32 {
        self.pairing(&self.coords[a], &self.coroots[b])
    }

    /// Twice the inner product, in units where long roots have norm 4.
    pub fn ip2(&self, a: usize, b: usize) -> i32 {
        gram2(&self.coords[a], &self.coords[b])
    }

    pub fn norm2(&self, a: usize) -> i32 {
        if self.long[a] {
            4
        } else {
            2
        }
    }

    /// Index of `s_a(alpha_b)`.
    pub fn reflect(&self, a: usize, b: usize) -> usize {
        let k = self.pair_roots(b, a);
        let ca = self.coords[a];
        let cb = self.coords[b];
        let v = [cb[0] - k * ca[0], cb[1] - k * ca[1], cb[2] - k * ca[2], cb[3] - k * ca[3]];
        self.index_of(&v).expect("reflection of a root is a root")
    }

    pub fn height(&self, a: usize) -> i32 {
        self.coords[a].iter().sum()
    }

    /// Smallest closed subsystem containing `gamma`.
    pub fn closure(&self, gamma: &[usize]) -> Vec<usize> {
        let mut inset = [false; NROOTS];
        let mut list = Vec::new();
        for &g in gamma {
            for r in [g, neg(g)] {
                if !inset[r] {
                    inset[r] = true;
                    list.push(r);
                }
            }
        }
        let mut k = 0;
        while k < list.len() {
            let a = list[k];
            for j in 0..=k {
                let b = list[j];
                if let Some(c) = self.sum(a, b) {
                    if !inset[c] {
                        inset[c] = true;
                        list.push(c);
                        list.push(neg(c));
                        inset[neg(c)] = true;
                    }
                }
            }
            k += 1;
        }
        let mut out: Vec<usize> = (0..NROOTS).filter(|&i| inset[i]).collect();
        out.sort_unstable();
        out
    }

    pub fn is_closed(&self, set: &[usize]) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        self.closure(&s) == s
    }

    /// The simple roots of a closed subsystem with respect to its intersection
    /// with the positive roots.
    pub fn base(&self, closed: &[usize]) -> Vec<usize> {
        let pos: Vec<usize> = closed.iter().copied().filter(|&r| is_positive(r)).collect();
        let mut member = [false; NROOTS];
        for &r in closed {
            member[r] = true;
        }
        pos.iter()
            .copied()
            .filter(|&r| {
                !pos.iter().any(|&a| {
                    let d = sub(&self.coords[r], &self.coords[a]);
                    self.index_of(&d).map_or(false, |b| member[b] && is_positive(b))
                })
            })
            .collect()
    }

    /// Irreducible components of a closed subsystem, named by Dynkin type.
    /// Components consisting of short roots carry a tilde.
    pub fn cartan_type(&self, closed: &[usize]) -> Result<Vec<String>> {
        if !self.is_closed(closed) {
            return Err(Error::NotClosed);
        }
        let base = self.base(closed);
        let mut comp: Vec<usize> = (0..base.len()).collect();
        fn find(c: &mut Vec<usize>, mut x: usize) -> usize {
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        for i in 0..base.len() {
            for j in 0..i {
                if self.ip2(base[i], base[j]) != 0 {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    comp[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..base.len() {
            let r = find(&mut comp, i);
            groups.entry(r).or_default().push(base[i]);
        }
        let mut names = Vec::new();
        for (_, simple) in groups {
            let sys = self.closure(&simple);
            let rank = simple.len();
            let nlong = sys.iter().filter(|&&r| self.long[r]).count();
            let nshort = sys.len() - nlong;
            names.push(type_name(rank, nlong, nshort));
        }
        names.sort();
        Ok(names)
    }

    /// Cartan type as a single string such as `A1+Ã2`.
    pub fn type_label(&self, closed: &[usize]) -> Result<String> {
        Ok(self.cartan_type(closed)?.join("+"))
    }

    /// Image of a root-coordinate vector under delta, in coroot coordinates.
    pub fn delta(&self, chi: &Vec4) -> Vec4 {
        [chi[3], chi[2], chi[1], chi[0]]
    }
}

fn type_name(rank: usize, nlong: usize, nshort: usize) -> String {
    let n = nlong + nshort;
    if nshort == 0 || nlong == 0 {
        let t = if n == rank * (rank + 1) {
            "A"
        } else if n == 2 * rank * (rank - 1) {
            "D"
        } else {
            "?"
        };
        if nlong == 0 {
            let tilde = if t == "A" { "Ã" } else { "D̃" };
            return format!("{}{}", tilde, rank);
        }
        return format!("{}{}", t, rank);
    }
    if n == 48 {
        return "F4".into();
    }
    if rank == 2 && n == 8 {
        return "B2".into();
    }
    if nshort == 2 * rank {
        format!("B{}", rank)
    } else {
        format!("C{}", rank)
    }
}

fn gram2(a: &Vec4, b: &Vec4) -> i32 {
    let mut s = 0;
    for i in 0..4 {
        for j in 0..4 {
            s += a[i] * GRAM2[i][j] * b[j];
        }
    }
    s
}

pub fn add(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub fn sub(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

/// Parse a 1-based root number, accepting `1..=48`.
pub fn root_from_number(n: usize) -> Result<usize> {
    if (1..=NROOTS).contains(&n) {
        Ok(n - 1)
    } else {
        Err(Error::Parse(format!("root number {} out of range", n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let rs = RootSystem::build();
        assert_eq!(rs.coords[7], [1, 1, 1, 0]);
        assert_eq!(rs.coords[23], [2, 3, 4, 2]);
        assert_eq!(rs.coords[24], [-1, 0, 0, 0]);
        assert!(rs.long[0] && rs.long[1] && !rs.long[2] && !rs.long[3]);
    }

    #[test]
    fn cartan_orientation() {
        let rs = RootSystem::build();
        assert_eq!(rs.pair_roots(1, 2), -2);
        assert_eq!(rs.pair_roots(2, 1), -1);
        assert_eq!(rs.pair_roots(0, 0), 2);
        assert_eq!(rs.pair_roots(0, 3), 0);
    }

    #[test]
    fn dagger_matches_column() {
        let rs = RootSystem::build();
        for i in 0..NPOS {
            assert_eq!(rs.dagger[i] + 1, DAGGER_COLUMN[i], "root {}", i + 1);
            assert_eq!(rs.dagger[neg(i)], neg(rs.dagger[i]));
            assert_ne!(rs.long[i], rs.long[rs.dagger[i]]);
        }
    }

    #[test]
    fn closures() {
        let rs = RootSystem::build();
        assert_eq!(rs.type_label(&rs.closure(&[0, 22])).unwrap(), "A2");
        assert_eq!(rs.type_label(&rs.closure(&[3, 13])).unwrap(), "B2");
        assert_eq!(rs.type_label(&rs.closure(&[2, 3])).unwrap(), "Ã2");
        assert_eq!(rs.type_label(&rs.closure(&[0, 1, 2, 47])).unwrap(), "B4");
        assert!(rs.closure(&[]).is_empty());
        assert_eq!(rs.closure(&[0, 1, 2, 3]).len(), 48);
    }
}
