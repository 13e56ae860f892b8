//! The Weyl group W(F4) as a permutation group on the 48 roots.
//!
//! Products follow the right-action convention: `mul(a, b)` applies `a`
//! first, then `b`, and `conj(x, g) = g^-1 x g`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::qpoly::{charpoly4, factor_cyclotomic};
use crate::rootsys::{is_positive, RootSystem, NPOS, NROOTS};
use crate::snf::{primary_decomposition, snf, IMat};

pub type Perm = [u8; NROOTS];
pub type WElt = u16;
pub type Mat4 = [[i32; 4]; 4];

pub const ORDER: usize = 1152;
pub const NCLASSES: usize = 25;

/// (element order, centralizer order, cyclotomic factors of the characteristic
/// polynomial) for the classes in their standard numbering.
const CLASS_KEYS: [(u32, usize, &[u32]); NCLASSES] = [
    (1, 1152, &[1, 1, 1, 1]),
    (2, 1152, &[2, 2, 2, 2]),
    (2, 64, &[1, 1, 2, 2]),
    (3, 36, &[1, 1, 3]),
    (6, 36, &[2, 2, 6]),
    (4, 96, &[4, 4]),
    (3, 36, &[1, 1, 3]),
    (6, 36, &[2, 2, 6]),
    (3, 72, &[3, 3]),
    (6, 72, &[6, 6]),
    (12, 12, &[12]),
    (2, 96, &[1, 1, 1, 2]),
    (2, 96, &[1, 2, 2, 2]),
    (6, 12, &[1, 2, 3]),
    (6, 12, &[1, 2, 6]),
    (4, 16, &[1, 2, 4]),
    (2, 96, &[1, 1, 1, 2]),
    (2, 96, &[1, 2, 2, 2]),
    (6, 12, &[1, 2, 3]),
    (6, 12, &[1, 2, 6]),
    (4, 16, &[1, 2, 4]),
    (2, 16, &[1, 1, 2, 2]),
    (4, 32, &[1, 1, 4]),
    (4, 32, &[2, 2, 4]),
    (8, 8, &[8]),
];

/// Classes that share a key with their dagger image are fixed by the Coxeter
/// class of a subsystem of the given type.
const PINS: [(usize, &str); 7] =
    [(12, "A1"), (4, "A2"), (13, "A1+A1+A1"), (16, "A3"), (5, "D4"), (14, "A1+Ã2"), (15, "C3")];

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub number: usize,
    pub order: u32,
    pub size: usize,
    pub centralizer: usize,
    pub charpoly: Vec<u32>,
    pub rep: WElt,
    pub elements: Vec<WElt>,
    pub power2: usize,
    pub power3: usize,
    pub dagger: usize,
}

pub struct Weyl {
    pub rs: RootSystem,
    perms: Vec<Perm>,
    index: HashMap<Perm, WElt>,
    table: Vec<WElt>,
    inverse: Vec<WElt>,
    orders: Vec<u32>,
    refl: Vec<WElt>,
    dag: Vec<WElt>,
    class_of: Vec<u8>,
    classes: Vec<ClassInfo>,
    w0: WElt,
}

impl Weyl {
    pub fn build() -> Result<Weyl> {
        let rs = RootSystem::build();
        let refl_perm = |a: usize| -> Perm {
            let mut p = [0u8; NROOTS];
            for (b, x) in p.iter_mut().enumerate() {
                *x = rs.reflect(a, b) as u8;
            }
            p
        };
        let mut id = [0u8; NROOTS];
        for (i, x) in id.iter_mut().enumerate() {
            *x = i as u8;
        }
        let gens: Vec<Perm> = (0..4).map(refl_perm).collect();
        let mut perms = vec![id];
        let mut index = HashMap::new();
        index.insert(id, 0u16);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let c = compose(&p, g);
                if !index.contains_key(&c) {
                    index.insert(c, perms.len() as u16);
                    perms.push(c);
                    queue.push_back(c);
                }
            }
        }
        assert_eq!(perms.len(), ORDER);
        let n = perms.len();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&perms[a], &perms[b])];
            }
        }
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b as u16;
                    break;
                }
            }
        }
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a as u16;
            let mut k = 1;
            while x != 0 {
                x = table[x as usize * n + a];
                k += 1;
            }
            orders[a] = k;
        }
        let refl: Vec<WElt> = (0..NROOTS).map(|r| index[&refl_perm(r)]).collect();
        let dag: Vec<WElt> = perms
            .iter()
            .map(|p| {
                let mut d = [0u8; NROOTS];
                for i in 0..NROOTS {
                    d[rs.dagger[i]] = rs.dagger[p[i] as usize] as u8;
                }
                index[&d]
            })
            .collect();
        let w0 = perms.iter().position(|p| (0..NPOS).all(|i| !is_positive(p[i] as usize))).unwrap() as u16;
        let mut w = Weyl {
            rs,
            perms,
            index,
            table,
            inverse,
            orders,
            refl,
            dag,
            class_of: vec![0; n],
            classes: Vec::new(),
            w0,
        };
        w.number_classes()?;
        Ok(w)
    }

    fn number_classes(&mut self) -> Result<()> {
        let all: Vec<WElt> = (0..ORDER as u16).collect();
        let orbits = self.classes_within(&all);
        if orbits.len() != NCLASSES {
            return Err(Error::ClassMatchAmbiguous(format!("{} classes", orbits.len())));
        }
        let mut pins: HashMap<usize, usize> = HashMap::new();
        for (num, label) in PINS {
            let c = self.coxeter_of_type(label)?;
            pins.insert(num, self.orbit_index(&orbits, c));
        }
        let mut assigned: Vec<Option<usize>> = vec![None; NCLASSES];
        let mut used = vec![false; NCLASSES];
        for (num, o) in &pins {
            assigned[num - 1] = Some(*o);
            used[*o] = true;
        }
        for (k, key) in CLASS_KEYS.iter().enumerate() {
            if assigned[k].is_some() {
                continue;
            }
            let cands: Vec<usize> = (0..NCLASSES)
                .filter(|&o| !used[o] && self.orbit_key(&orbits[o]) == (key.0, key.1, key.2.to_vec()))
                .collect();
            if cands.len() != 1 {
                return Err(Error::ClassMatchAmbiguous(format!("class {} has {} candidates", k + 1, cands.len())));
            }
            assigned[k] = Some(cands[0]);
            used[cands[0]] = true;
        }
        for (k, o) in assigned.iter().enumerate() {
            let o = o.unwrap();
            let key = self.orbit_key(&orbits[o]);
            let want = CLASS_KEYS[k];
            if key != (want.0, want.1, want.2.to_vec()) {
                return Err(Error::ClassMatchAmbiguous(format!("class {} key mismatch", k + 1)));
            }
            for &x in &orbits[o] {
                self.class_of[x as usize] = (k + 1) as u8;
            }
        }
        let mut classes = Vec::new();
        for (k, o) in assigned.iter().enumerate() {
            let elems = orbits[o.unwrap()].clone();
            let rep = elems[0];
            let info = ClassInfo {
                number: k + 1,
                order: self.order(rep),
                size: elems.len(),
                centralizer: ORDER / elems.len(),
                charpoly: CLASS_KEYS[k].2.to_vec(),
                rep,
                power2: self.class_of(self.pow(rep, 2)),
                power3: self.class_of(self.pow(rep, 3)),
                dagger: self.class_of(self.dagger(rep)),
                elements: elems,
            };
            classes.push(info);
        }
        self.classes = classes;
        Ok(())
    }

    fn orbit_key(&self, orbit: &[WElt]) -> (u32, usize, Vec<u32>) {
        let r = orbit[0];
        (self.order(r), ORDER / orbit.len(), self.charpoly_cyc(r))
    }

    fn orbit_index(&self, orbits: &[Vec<WElt>], x: WElt) -> usize {
        orbits.iter().position(|o| o.contains(&x)).unwrap()
    }

    /// Product of the simple reflections of a closed subsystem of the given type.
    pub fn coxeter_of_type(&self, label: &str) -> Result<WElt> {
        let rank = label.split('+').map(|c| c[c.len() - 1..].parse::<usize>().unwrap_or(0)).sum::<usize>();
        let mut found = None;
        subsets(NPOS, rank, &mut |s| {
            if found.is_some() {
                return;
            }
            let cl = self.rs.closure(s);
            if self.rs.base(&cl).len() == rank && self.rs.type_label(&cl).map_or(false, |t| t == label) {
                found = Some(self.coxeter(&self.rs.base(&cl)));
            }
        });
        found.ok_or_else(|| Error::UnmatchedSubsystem(label.to_string()))
    }

    pub fn coxeter(&self, base: &[usize]) -> WElt {
        base.iter().fold(0, |acc, &r| self.mul(acc, self.refl(r)))
    }

    pub fn mul(&self, a: WElt, b: WElt) -> WElt {
        self.table[a as usize * ORDER + b as usize]
    }

    pub fn inv(&self, a: WElt) -> WElt {
        self.inverse[a as usize]
    }

    pub fn pow(&self, a: WElt, k: i64) -> WElt {
        let o = self.order(a) as i64;
        let k = k.rem_euclid(o);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn order(&self, a: WElt) -> u32 {
        self.orders[a as usize]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: WElt, g: WElt) -> WElt {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn identity(&self) -> WElt {
        0
    }

    pub fn w0(&self) -> WElt {
        self.w0
    }

    /// Reflection in the root with 0-based index `r`.
    pub fn refl(&self, r: usize) -> WElt {
        self.refl[r]
    }

    pub fn simple(&self, i: usize) -> WElt {
        self.refl[i - 1]
    }

    pub fn perm(&self, a: WElt) -> &Perm {
        &self.perms[a as usize]
    }

    pub fn from_perm(&self, p: &Perm) -> Option<WElt> {
        self.index.get(p).copied()
    }

    pub fn apply(&self, a: WElt, root: usize) -> usize {
        self.perms[a as usize][root] as usize
    }

    pub fn dagger(&self, a: WElt) -> WElt {
        self.dag[a as usize]
    }

    pub fn class_of(&self, a: WElt) -> usize {
        self.class_of[a as usize] as usize
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class(&self, number: usize) -> &ClassInfo {
        &self.classes[number - 1]
    }

    pub fn elements(&self) -> impl Iterator<Item = WElt> {
        0..ORDER as WElt
    }

    /// Action on X in root coordinates; column j is the image of alpha_j.
    pub fn mat(&self, a: WElt) -> Mat4 {
        let mut m = [[0; 4]; 4];
        for j in 0..4 {
            let c = self.rs.coords[self.apply(a, j)];
            for i in 0..4 {
                m[i][j] = c[i];
            }
        }
        m
    }

    /// Action on Y in coroot coordinates.
    pub fn ymat(&self, a: WElt) -> Mat4 {
        let mut m = [[0; 4]; 4];
        for j in 0..4 {
            let c = self.rs.coroots[self.apply(a, j)];
            for i in 0..4 {
                m[i][j] = c[i];
            }
        }
        m
    }

    pub fn charpoly_cyc(&self, a: WElt) -> Vec<u32> {
        let f = factor_cyclotomic(&charpoly4(&self.mat(a))).expect("Weyl elements have cyclotomic charpoly");
        f.indices()
    }

    /// Length with respect to the simple reflections.
    pub fn length(&self, a: WElt) -> usize {
        (0..NPOS).filter(|&r| !is_positive(self.apply(a, r))).count()
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generate(&self, gens: &[WElt]) -> Vec<WElt> {
        let mut seen = vec![false; ORDER];
        seen[0] = true;
        let mut out = vec![0u16];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn centralizer_in(&self, x: WElt, group: &[WElt]) -> Vec<WElt> {
        group.iter().copied().filter(|&g| self.mul(g, x) == self.mul(x, g)).collect()
    }

    pub fn centralizer(&self, x: WElt) -> Vec<WElt> {
        self.elements().filter(|&g| self.mul(g, x) == self.mul(x, g)).collect()
    }

    pub fn normalizer_in(&self, h: &[WElt], group: &[WElt]) -> Vec<WElt> {
        let set: HashSet<WElt> = h.iter().copied().collect();
        group.iter().copied().filter(|&g| h.iter().all(|&x| set.contains(&self.conj(x, g)))).collect()
    }

    /// Conjugacy classes of a subgroup, each sorted, ordered by smallest element.
    pub fn classes_within(&self, group: &[WElt]) -> Vec<Vec<WElt>> {
        let mut seen: HashSet<WElt> = HashSet::new();
        let mut out = Vec::new();
        let mut sorted = group.to_vec();
        sorted.sort_unstable();
        for &x in &sorted {
            if seen.contains(&x) {
                continue;
            }
            let mut orb: Vec<WElt> = group.iter().map(|&g| self.conj(x, g)).collect();
            orb.sort_unstable();
            orb.dedup();
            seen.extend(orb.iter().copied());
            out.push(orb);
        }
        out
    }

    /// Elements mapping the root set onto itself.
    pub fn stab_setwise(&self, roots: &[usize]) -> Vec<WElt> {
        let mut mask = 0u64;
        for &r in roots {
            mask |= 1 << r;
        }
        self.elements().filter(|&a| roots.iter().all(|&r| mask >> self.apply(a, r) & 1 == 1)).collect()
    }

    pub fn image_mask(&self, a: WElt, mask: u64) -> u64 {
        let p = self.perm(a);
        let mut out = 0u64;
        for r in 0..NROOTS {
            if mask >> r & 1 == 1 {
                out |= 1 << p[r];
            }
        }
        out
    }

    pub fn reflection_subgroup(&self, roots: &[usize]) -> Vec<WElt> {
        let gens: Vec<WElt> = roots.iter().map(|&r| self.refl(r)).collect();
        self.generate(&gens)
    }

    /// The element of `W_Gamma` sending every positive root of the closure of
    /// `gamma` to a negative root.
    pub fn longest_in(&self, gamma: &[usize]) -> WElt {
        let cl = self.rs.closure(gamma);
        let pos: Vec<usize> = cl.iter().copied().filter(|&r| is_positive(r)).collect();
        let group = self.reflection_subgroup(gamma);
        *group
            .iter()
            .find(|&&a| pos.iter().all(|&r| !is_positive(self.apply(a, r))))
            .expect("longest element")
    }

    /// Elementary divisors of the twisted torus `T_w^F` at parameter `q`, as
    /// a multiset of prime-power cyclic orders.
    pub fn torus_primary(&self, w: WElt, q: i64) -> BTreeMap<i128, u32> {
        let m = self.ymat(self.inv(w));
        let a: IMat = (0..4)
            .map(|i| (0..4).map(|j| q as i128 * m[i][j] as i128 - (i == j) as i128).collect())
            .collect();
        primary_decomposition(&snf(&a).diag)
    }

    /// Invariant factors of `T_w^F`, each dividing the next.
    pub fn torus_structure(&self, w: WElt, q: i64) -> Vec<i128> {
        let m = self.ymat(self.inv(w));
        let a: IMat = (0..4)
            .map(|i| (0..4).map(|j| q as i128 * m[i][j] as i128 - (i == j) as i128).collect())
            .collect();
        snf(&a).diag.into_iter().filter(|&x| x != 1).collect()
    }

    /// Number of orbits of length two of the automorphism induced by the
    /// graph automorphism on the relevant class set, for `e` in {1,2,3,4,6}.
    pub fn sigma_orbit_count(&self, e: u32) -> Result<usize> {
        match e {
            1 | 2 => Ok(self.classes.iter().filter(|c| c.dagger > c.number).count()),
            3 | 4 | 6 => {
                let cl = match e {
                    3 => 9,
                    4 => 6,
                    _ => 10,
                };
                let w = self.class(cl).rep;
                let wd = self.dagger(w);
                let n = self
                    .elements()
                    .find(|&n| self.conj(wd, n) == w)
                    .ok_or(Error::NoTwistFound(e))?;
                let c = self.centralizer(w);
                let cls = self.classes_within(&c);
                let which = |x: WElt| cls.iter().position(|k| k.binary_search(&x).is_ok()).unwrap();
                let mut count = 0;
                for (i, k) in cls.iter().enumerate() {
                    let j = which(self.conj(self.dagger(k[0]), n));
                    if j > i {
                        count += 1;
                    }
                }
                Ok(count)
            }
            _ => Err(Error::NoTwistFound(e)),
        }
    }

    /// A reduced word in the simple reflections, read left to right.
    pub fn reduced_word(&self, a: WElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = a;
        while x != 0 {
            // x(alpha_i) < 0 means x = s_i * x' with x' shorter
            let i = (0..4).find(|&i| !is_positive(self.apply(x, i))).unwrap();
            word.push(i + 1);
            x = self.mul(self.simple(i + 1), x);
        }
        word
    }
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    let mut c = [0u8; NROOTS];
    for i in 0..NROOTS {
        c[i] = b[a[i] as usize];
    }
    c
}

fn subsets(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_classes() {
        let w = Weyl::build().unwrap();
        assert_eq!(w.classes().len(), 25);
        let total: usize = w.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, ORDER);
        assert_eq!(w.length(w.w0()), 24);
        assert_eq!(w.class_of(w.w0()), 2);
    }

    #[test]
    fn reduced_word_roundtrip() {
        let w = Weyl::build().unwrap();
        for a in [w.w0(), 17, 311, 1000] {
            let word = w.reduced_word(a);
            assert_eq!(word.len(), w.length(a));
            let b = word.iter().fold(0, |acc, &i| w.mul(acc, w.simple(i)));
            assert_eq!(a, b);
        }
    }
}
