//! Chevalley basis of the Lie algebra of type F4, root elements in the adjoint
//! representation, and the extended Weyl group generated by the `n_alpha`.
//!
//! Basis order: `e_1 .. e_48` (root indices 0..48), then `h_1 .. h_4` with
//! `h_i = alpha_i^vee`. Extended Weyl elements are monomial on the root
//! spaces and act on the Cartan part through their image in W, so they are
//! stored as a signed permutation of the 48 root vectors. Products follow the
//! same right-action convention as `weyl`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootsys::{is_positive, neg, RootSystem, NPOS, NROOTS};
use crate::weyl::{Perm, WElt, Weyl};

pub const DIM: usize = 52;

/// Dense square integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat(pub Vec<i64>);

impl Mat {
    pub fn zero() -> Mat {
        Mat(vec![0; DIM * DIM])
    }

    pub fn identity() -> Mat {
        let mut m = Mat::zero();
        for i in 0..DIM {
            m.0[i * DIM + i] = 1;
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.0[i * DIM + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.0[i * DIM + j] = v;
    }

    /// `self * o`.
    pub fn mul(&self, o: &Mat) -> Mat {
        let mut r = Mat::zero();
        for i in 0..DIM {
            for k in 0..DIM {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..DIM {
                    r.0[i * DIM + j] += a * o.0[k * DIM + j];
                }
            }
        }
        r
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

pub struct Chevalley {
    pub rs: RootSystem,
    /// `n[a * 48 + b]` with `[e_a, e_b] = n e_{a+b}`; zero when `a + b` is not a root.
    n: Vec<i32>,
    ad: Vec<Mat>,
}

impl Chevalley {
    pub fn build() -> Result<Chevalley> {
        let rs = RootSystem::build();
        let mut memo = vec![None; NROOTS * NROOTS];
        let mut n = vec![0; NROOTS * NROOTS];
        for a in 0..NROOTS {
            for b in 0..NROOTS {
                if rs.sum(a, b).is_some() {
                    n[a * NROOTS + b] = structure_constant(&rs, a, b, &mut memo)?;
                }
            }
        }
        let mut c = Chevalley { rs, n, ad: Vec::new() };
        c.ad = (0..NROOTS).map(|a| c.ad_root(a)).collect();
        Ok(c)
    }

    pub fn n(&self, a: usize, b: usize) -> i32 {
        self.n[a * NROOTS + b]
    }

    /// Largest `p` with `b - p a` a root.
    pub fn p(&self, a: usize, b: usize) -> i32 {
        string_p(&self.rs, a, b)
    }

    fn ad_root(&self, a: usize) -> Mat {
        let rs = &self.rs;
        let mut m = Mat::zero();
        for b in 0..NROOTS {
            if b == neg(a) {
                // [e_a, e_-a] = h_a
                for i in 0..4 {
                    m.set(NROOTS + i, b, rs.coroots[a][i] as i64);
                }
            } else if let Some(c) = rs.sum(a, b) {
                m.set(c, b, self.n(a, b) as i64);
            }
        }
        for i in 0..4 {
            // [e_a, h_i] = -<a, alpha_i^vee> e_a
            m.set(a, NROOTS + i, -(rs.pair_roots(a, i) as i64));
        }
        m
    }

    pub fn ad(&self, a: usize) -> &Mat {
        &self.ad[a]
    }

    /// `ad h_i`, diagonal.
    pub fn ad_h(&self, i: usize) -> Mat {
        let mut m = Mat::zero();
        for b in 0..NROOTS {
            m.set(b, b, self.rs.pair_roots(b, i) as i64);
        }
        m
    }

    /// Bracket of two basis elements as a matrix identity: checks
    /// `[ad x, ad y] = ad [x, y]` for all pairs of root vectors and
    /// `[ad h_i, ad e_b] = <b, alpha_i^vee> ad e_b`.
    pub fn check_jacobi(&self) -> Result<usize> {
        let mut count = 0;
        for a in 0..NROOTS {
            for b in 0..NROOTS {
                let lhs = self.ad[a].mul(&self.ad[b]).sub(&self.ad[b].mul(&self.ad[a]));
                let rhs = if b == neg(a) {
                    let mut m = Mat::zero();
                    for i in 0..4 {
                        let h = self.ad_h(i);
                        let c = self.rs.coroots[a][i] as i64;
                        for k in 0..DIM * DIM {
                            m.0[k] += c * h.0[k];
                        }
                    }
                    m
                } else if let Some(c) = self.rs.sum(a, b) {
                    let k = self.n(a, b) as i64;
                    Mat(self.ad[c].0.iter().map(|x| x * k).collect())
                } else {
                    Mat::zero()
                };
                if lhs != rhs {
                    return Err(Error::JacobiFailure(format!("roots {} {}", a + 1, b + 1)));
                }
                count += 1;
            }
        }
        for i in 0..4 {
            let h = self.ad_h(i);
            for b in 0..NROOTS {
                let lhs = h.mul(&self.ad[b]).sub(&self.ad[b].mul(&h));
                let k = self.rs.pair_roots(b, i) as i64;
                if lhs != Mat(self.ad[b].0.iter().map(|x| x * k).collect()) {
                    return Err(Error::JacobiFailure(format!("h{} root {}", i + 1, b + 1)));
                }
                count += 1;
            }
        }
        Ok(count)
    }

    /// `exp(t ad e_a)`.
    pub fn x_root(&self, a: usize, t: i64) -> Mat {
        let mut out = Mat::identity();
        let mut term = Mat::identity();
        let mut k = 1i64;
        loop {
            term = self.ad[a].mul(&term);
            if term.is_zero() {
                break;
            }
            // term holds (ad e_a)^k / (k-1)! times t^(k-1)
            let scaled: Vec<i64> = term.0.iter().map(|x| x * t).collect();
            for x in &scaled {
                assert_eq!(x % k, 0, "non-integral exponential");
            }
            term = Mat(scaled.iter().map(|x| x / k).collect());
            for i in 0..DIM * DIM {
                out.0[i] += term.0[i];
            }
            k += 1;
        }
        out
    }

    /// Nilpotency degree of `ad e_a`.
    pub fn nilpotency(&self, a: usize) -> usize {
        let mut term = Mat::identity();
        let mut k = 0;
        while !term.is_zero() {
            term = self.ad[a].mul(&term);
            k += 1;
        }
        k
    }

    /// `x_a(1) x_-a(-1) x_a(1)`.
    pub fn n_matrix(&self, a: usize) -> Mat {
        let x = self.x_root(a, 1);
        x.mul(&self.x_root(neg(a), -1)).mul(&x)
    }
}

fn string_p(rs: &RootSystem, a: usize, b: usize) -> i32 {
    let ca = rs.coords[a];
    let mut v = rs.coords[b];
    let mut p = 0;
    loop {
        for i in 0..4 {
            v[i] -= ca[i];
        }
        if rs.index_of(&v).is_some() {
            p += 1;
        } else {
            return p;
        }
    }
}

/// The extraspecial pair of a positive root: the smallest positive `a` with
/// `xi - a` a positive root.
fn extraspecial(rs: &RootSystem, xi: usize) -> Option<(usize, usize)> {
    (0..NPOS).find_map(|a| {
        let d = crate::rootsys::sub(&rs.coords[xi], &rs.coords[a]);
        rs.index_of(&d).filter(|&b| is_positive(b)).map(|b| (a, b))
    })
}

fn structure_constant(rs: &RootSystem, x: usize, y: usize, memo: &mut Vec<Option<i32>>) -> Result<i32> {
    let Some(w) = rs.sum(x, y) else {
        return Ok(0);
    };
    if let Some(v) = memo[x * NROOTS + y] {
        return Ok(v);
    }
    let val = match (is_positive(x), is_positive(y)) {
        (true, true) => {
            let (a, b) = extraspecial(rs, w).expect("positive sum has an extraspecial pair");
            if x == a {
                string_p(rs, x, y) + 1
            } else if y == a {
                -(string_p(rs, y, x) + 1)
            } else if x > y {
                -structure_constant(rs, y, x, memo)?
            } else {
                let (g, d) = (x, y);
                let nab = structure_constant(rs, a, b, memo)?;
                let mut s = 0;
                // N_{b,-g} N_{a,-d} / |b-g|^2 + N_{-g,a} N_{b,-d} / |a-g|^2, scaled by 4
                if let Some(bg) = rs.sum(b, neg(g)) {
                    s += structure_constant(rs, b, neg(g), memo)? * structure_constant(rs, a, neg(d), memo)? * 4
                        / rs.ip2(bg, bg);
                }
                if let Some(ag) = rs.sum(a, neg(g)) {
                    s += structure_constant(rs, neg(g), a, memo)? * structure_constant(rs, b, neg(d), memo)? * 4
                        / rs.ip2(ag, ag);
                }
                let num = rs.ip2(w, w) * s;
                if num % (4 * nab) != 0 {
                    return Err(Error::JacobiFailure(format!("non-integral N({},{})", x + 1, y + 1)));
                }
                num / (4 * nab)
            }
        }
        (true, false) => {
            if is_positive(w) {
                // N_{x,y} = -(w,w)/(x,x) N_{-y,w}
                let num = -rs.ip2(w, w) * structure_constant(rs, neg(y), w, memo)?;
                let den = rs.ip2(x, x);
                if num % den != 0 {
                    return Err(Error::JacobiFailure(format!("non-integral N({},{})", x + 1, y + 1)));
                }
                num / den
            } else {
                -structure_constant(rs, neg(x), neg(y), memo)?
            }
        }
        (false, true) => -structure_constant(rs, y, x, memo)?,
        (false, false) => -structure_constant(rs, neg(x), neg(y), memo)?,
    };
    memo[x * NROOTS + y] = Some(val);
    Ok(val)
}

/// A signed permutation of the root vectors: `e_b -> sign[b] e_{perm[b]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtElt {
    pub perm: Perm,
    pub sign: [i8; NROOTS],
}

impl ExtElt {
    pub fn identity() -> ExtElt {
        let mut perm = [0u8; NROOTS];
        for (i, x) in perm.iter_mut().enumerate() {
            *x = i as u8;
        }
        ExtElt { perm, sign: [1; NROOTS] }
    }

    /// Apply `self` first, then `o`.
    pub fn mul(&self, o: &ExtElt) -> ExtElt {
        let mut r = ExtElt::identity();
        for b in 0..NROOTS {
            let c = self.perm[b] as usize;
            r.perm[b] = o.perm[c];
            r.sign[b] = self.sign[b] * o.sign[c];
        }
        r
    }

    pub fn inv(&self) -> ExtElt {
        let mut r = ExtElt::identity();
        for b in 0..NROOTS {
            let c = self.perm[b] as usize;
            r.perm[c] = b as u8;
            r.sign[c] = self.sign[b];
        }
        r
    }

    pub fn pow(&self, k: i64) -> ExtElt {
        let base = if k < 0 { self.inv() } else { *self };
        (0..k.unsigned_abs()).fold(ExtElt::identity(), |acc, _| acc.mul(&base))
    }

    /// `g^-1 self g`.
    pub fn conj(&self, g: &ExtElt) -> ExtElt {
        g.inv().mul(self).mul(g)
    }

    pub fn is_identity(&self) -> bool {
        *self == ExtElt::identity()
    }

    pub fn order(&self) -> u32 {
        let mut x = *self;
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(self);
            k += 1;
        }
        k
    }
}

pub struct ExtWeyl {
    pub ch: Chevalley,
    pub weyl: Weyl,
    n: Vec<ExtElt>,
    gamma: ExtElt,
}

impl ExtWeyl {
    pub fn build(weyl: Weyl) -> Result<ExtWeyl> {
        let ch = Chevalley::build()?;
        let mut n = Vec::with_capacity(NROOTS);
        for a in 0..NROOTS {
            let m = ch.n_matrix(a);
            n.push(compact(&ch, &weyl, &m, weyl.refl(a)).ok_or_else(|| {
                Error::JacobiFailure(format!("n for root {} is not monomial", a + 1))
            })?);
        }
        let word = weyl.reduced_word(weyl.w0());
        let gamma = word.iter().fold(ExtElt::identity(), |acc, &i| acc.mul(&n[i - 1]));
        Ok(ExtWeyl { ch, weyl, n, gamma })
    }

    /// Lift of the reflection in the root with 0-based index `a`.
    pub fn n_root(&self, a: usize) -> ExtElt {
        self.n[a]
    }

    pub fn n_simple(&self, i: usize) -> ExtElt {
        self.n[i - 1]
    }

    pub fn gamma(&self) -> ExtElt {
        self.gamma
    }

    /// `alpha^vee(-1)`: sign `(-1)^<b, alpha^vee>` on `e_b`.
    pub fn h_minus_one(&self, a: usize) -> ExtElt {
        let mut r = ExtElt::identity();
        for b in 0..NROOTS {
            if self.ch.rs.pair_roots(b, a).rem_euclid(2) == 1 {
                r.sign[b] = -1;
            }
        }
        r
    }

    pub fn project(&self, x: &ExtElt) -> WElt {
        self.weyl.from_perm(&x.perm).expect("projection lies in W")
    }

    /// Full adjoint matrix of a compact element.
    pub fn matrix(&self, x: &ExtElt) -> Mat {
        let mut m = Mat::zero();
        for b in 0..NROOTS {
            m.set(x.perm[b] as usize, b, x.sign[b] as i64);
        }
        let w = self.project(x);
        let y = self.weyl.ymat(w);
        for i in 0..4 {
            for j in 0..4 {
                m.set(NROOTS + i, NROOTS + j, y[i][j] as i64);
            }
        }
        m
    }

    /// The function `e_b -> ...` as a left-acting matrix; products in the
    /// right-action convention reverse matrix order.
    pub fn commutes_with_matrix(&self, x: &ExtElt, m: &Mat) -> bool {
        let a = self.matrix(x);
        a.mul(m) == m.mul(&a)
    }

    pub fn generate(&self, gens: &[ExtElt]) -> Vec<ExtElt> {
        let mut seen: HashSet<ExtElt> = HashSet::new();
        let id = ExtElt::identity();
        seen.insert(id);
        let mut out = vec![id];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y) {
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// All of `<n_1, .., n_4>`.
    pub fn enumerate(&self) -> Vec<ExtElt> {
        let gens: Vec<ExtElt> = (1..=4).map(|i| self.n_simple(i)).collect();
        self.generate(&gens)
    }

    pub fn center_of(&self, group: &[ExtElt]) -> Vec<ExtElt> {
        group.iter().copied().filter(|z| group.iter().all(|g| z.mul(g) == g.mul(z))).collect()
    }
}

/// Read off the signed permutation of a monomial adjoint matrix, checking the
/// Cartan block against the Weyl action.
fn compact(ch: &Chevalley, weyl: &Weyl, m: &Mat, w: WElt) -> Option<ExtElt> {
    let mut x = ExtElt::identity();
    for b in 0..NROOTS {
        let nz: Vec<usize> = (0..DIM).filter(|&i| m.at(i, b) != 0).collect();
        if nz.len() != 1 || nz[0] >= NROOTS || m.at(nz[0], b).abs() != 1 {
            return None;
        }
        x.perm[b] = nz[0] as u8;
        x.sign[b] = m.at(nz[0], b) as i8;
    }
    if weyl.from_perm(&x.perm) != Some(w) {
        return None;
    }
    let y = weyl.ymat(w);
    for i in 0..4 {
        for j in 0..DIM {
            let want = if j >= NROOTS { y[i][j - NROOTS] as i64 } else { 0 };
            if m.at(NROOTS + i, j) != want {
                return None;
            }
        }
    }
    let _ = ch;
    Some(x)
}

/// Conjugation pattern of `gamma` on the root elements of the simple roots and
/// their negatives: for each such root and `t`, whether
/// `gamma^-1 x_a(t) gamma = x_-a(-t)`.
pub fn gamma_pattern(ew: &ExtWeyl, ts: &[i64]) -> Vec<(usize, i64, bool)> {
    let g = ew.matrix(&ew.gamma());
    let ginv = ew.matrix(&ew.gamma().inv());
    let mut out = Vec::new();
    for a in [0, 1, 2, 3, 24, 25, 26, 27] {
        for &t in ts {
            let lhs = g.mul(&ew.ch.x_root(a, t)).mul(&ginv);
            out.push((a, t, lhs == ew.ch.x_root(neg(a), -t)));
        }
    }
    out
}

/// Kernel of the projection to W inside a list of elements.
pub fn kernel(group: &[ExtElt]) -> Vec<ExtElt> {
    let id = ExtElt::identity();
    group.iter().copied().filter(|x| x.perm == id.perm).collect()
}

pub type NTable = HashMap<(usize, usize), i32>;

impl Chevalley {
    /// Nonzero structure constants keyed by 1-based root numbers.
    pub fn table(&self) -> NTable {
        let mut t = HashMap::new();
        for a in 0..NROOTS {
            for b in 0..NROOTS {
                let v = self.n(a, b);
                if v != 0 {
                    t.insert((a + 1, b + 1), v);
                }
            }
        }
        t
    }
}
