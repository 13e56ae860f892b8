//! Lifts of centralizers `C_W(u)` to the extended Weyl group.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::classtypes::{ClassTypes, CtRow};
use crate::data;
use crate::error::{Error, Result};
use crate::extweyl::{ExtElt, ExtWeyl};
use crate::report::{Report, Status};
use crate::rootsys::{neg, root_from_number, NROOTS};
use crate::weyl::{Weyl, WElt};
use crate::word::{Atom, Word, WordGroup};

/// Class types where the lift of `v` need not lie in `[M_0, M_0]` when `w != 1`.
pub const VDOT_EXCEPTIONS: [(usize, usize); 4] = [(18, 6), (18, 4), (19, 6), (19, 7)];

/// Class types where, for even f/m, the lift of `v` need not centralize `C_0`.
pub const AUTOMORPHISM_CASES: [(usize, usize); 7] = [(12, 2), (12, 4), (16, 3), (16, 4), (16, 7), (16, 8), (16, 10)];

#[derive(Clone, Debug)]
pub struct LiftRow {
    pub part: String,
    pub i: usize,
    /// `None` for every k (part I), otherwise the covered k or their complement
    pub ks: Option<(bool, Vec<usize>)>,
    pub delta: Vec<usize>,
    pub cbar: Vec<Word>,
    pub c0: Vec<Word>,
}

impl LiftRow {
    pub fn covers(&self, row: &CtRow) -> bool {
        if row.i != self.i {
            return false;
        }
        let nontrivial_w = row.w.text != "1";
        match &self.ks {
            None => row.e == 2 && nontrivial_w,
            Some((negated, ks)) => row.e == 1 && !nontrivial_w && (ks.contains(&row.k) != *negated),
        }
    }

    pub fn id(&self) -> String {
        match &self.ks {
            None => format!("lift I i={}", self.i),
            Some((neg, ks)) => {
                let ks: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
                format!("lift II i={} k={}{}", self.i, if *neg { "!" } else { "" }, ks.join("|"))
            }
        }
    }
}

pub fn load_lifts() -> Result<Vec<LiftRow>> {
    let t = data::load_table("lifts.tbl", "lifts")?;
    let mut out = Vec::new();
    for r in &t.rows {
        let part = r.get("part")?.to_string();
        let k = r.get("k")?;
        let ks = match k {
            "-" => None,
            _ => {
                let (neg, body) = match k.strip_prefix('!') {
                    Some(b) => (true, b),
                    None => (false, k),
                };
                let ks = body.split(',').map(|x| x.trim().parse().map_err(|_| r.err("bad k"))).collect::<Result<_>>()?;
                Some((neg, ks))
            }
        };
        let delta = data::int_list(r, "delta")?.into_iter().map(|x| root_from_number(x as usize)).collect::<Result<_>>()?;
        let words = |c: &str| -> Result<Vec<Word>> {
            r.get(c)?.split_whitespace().map(|w| Word::parse(w).map_err(|e| r.err(&e.to_string()))).collect()
        };
        out.push(LiftRow { part, i: r.parse("i")?, ks, delta, cbar: words("cbar")?, c0: words("c0")? });
    }
    Ok(out)
}

// Words here are products of left-acting operators: `xy` applies `y` first.
// `Weyl::mul` and `ExtElt::mul` apply their receiver first, hence the swaps.
struct WCtx<'a>(&'a Weyl);

impl WordGroup for WCtx<'_> {
    type Elt = WElt;
    fn one(&self) -> WElt {
        self.0.identity()
    }
    fn mul(&self, a: &WElt, b: &WElt) -> WElt {
        self.0.mul(*b, *a)
    }
    fn inv(&self, a: &WElt) -> WElt {
        self.0.inv(*a)
    }
    fn atom(&self, a: &Atom) -> Result<WElt> {
        match a {
            Atom::S(j) => Ok(self.0.refl(root_from_number(*j)?)),
            Atom::W0 => Ok(self.0.w0()),
            Atom::One => Ok(self.0.identity()),
            _ => Err(Error::Parse(format!("atom {:?} not allowed here", a))),
        }
    }
}

/// Extended Weyl group words. With `dagger`, `s_j` lifts to the `n` of the
/// dual root and `wG` to the lift of the longest element of the dual subsystem.
struct ExtCtx<'a> {
    ew: &'a ExtWeyl,
    dagger: bool,
    wg: ExtElt,
}

impl WordGroup for ExtCtx<'_> {
    type Elt = ExtElt;
    fn one(&self) -> ExtElt {
        ExtElt::identity()
    }
    fn mul(&self, a: &ExtElt, b: &ExtElt) -> ExtElt {
        b.mul(a)
    }
    fn inv(&self, a: &ExtElt) -> ExtElt {
        a.inv()
    }
    fn atom(&self, a: &Atom) -> Result<ExtElt> {
        let rs = &self.ew.weyl.rs;
        match a {
            Atom::N(j) => Ok(self.ew.n_root(root_from_number(*j)?)),
            Atom::S(j) => {
                let r = root_from_number(*j)?;
                Ok(self.ew.n_root(if self.dagger { rs.dagger[r] } else { r }))
            }
            Atom::W0 | Atom::Gamma => Ok(self.ew.gamma()),
            Atom::WG => Ok(self.wg),
            Atom::One => Ok(ExtElt::identity()),
            Atom::R(_) => Err(Error::Parse("class representatives have no canonical lift".into())),
        }
    }
}

/// Product of the `n` of a reduced word (in the given base) for `x`.
pub fn lift_in_base(ew: &ExtWeyl, base: &[usize], x: WElt) -> ExtElt {
    let w = &ew.weyl;
    // breadth-first search gives shortest words
    let mut parent: HashMap<WElt, (WElt, usize)> = HashMap::new();
    let mut frontier = vec![w.identity()];
    parent.insert(w.identity(), (w.identity(), usize::MAX));
    while !parent.contains_key(&x) {
        let mut next = Vec::new();
        for &y in &frontier {
            for &b in base {
                let z = w.mul(y, w.refl(b));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(z) {
                    e.insert((y, b));
                    next.push(z);
                }
            }
        }
        assert!(!next.is_empty(), "element outside the reflection subgroup");
        frontier = next;
    }
    let mut word = Vec::new();
    let mut y = x;
    while y != w.identity() {
        let (p, b) = parent[&y];
        word.push(b);
        y = p;
    }
    word.iter().rev().fold(ExtElt::identity(), |acc, &b| acc.mul(&ew.n_root(b)))
}

/// Roots perpendicular to the eps-eigenspace of `u` on Y.
pub fn perp_of_eigenspace(weyl: &Weyl, u: WElt, eps: i64) -> Vec<usize> {
    let m = weyl.ymat(u);
    let mut a: Vec<Vec<Rational64>> = (0..4)
        .map(|i| (0..4).map(|j| Rational64::from_integer(m[i][j] as i64 - if i == j { eps } else { 0 })).collect())
        .collect();
    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..4 {
        let Some(p) = (row..4).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = Rational64::one() / a[row][col];
        for j in 0..4 {
            a[row][j] *= inv;
        }
        for r in 0..4 {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..4 {
                    let t = a[row][j] * f;
                    a[r][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..4).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<[Rational64; 4]> = free
        .iter()
        .map(|&f| {
            let mut v = [Rational64::zero(); 4];
            v[f] = Rational64::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f];
            }
            v
        })
        .collect();
    let rs = &weyl.rs;
    (0..NROOTS)
        .filter(|&r| {
            basis.iter().all(|y| {
                let c = rs.coords[r];
                let mut s = Rational64::zero();
                for i in 0..4 {
                    for j in 0..4 {
                        s += Rational64::from_integer((c[i] * rs.cartan[i][j]) as i64) * y[j];
                    }
                }
                s.is_zero()
            })
        })
        .collect()
}

fn mask(roots: &[usize]) -> u64 {
    roots.iter().fold(0u64, |m, &r| m | 1 << r)
}

/// Whether `g` centralizes the root subgroups of `roots` and their negatives.
pub fn centralizes_roots(g: &ExtElt, roots: &[usize]) -> bool {
    roots.iter().flat_map(|&r| [r, neg(r)]).all(|r| g.perm[r] as usize == r && g.sign[r] == 1)
}

pub struct Lifts<'a> {
    pub ew: &'a ExtWeyl,
    pub ct: &'a ClassTypes<'a>,
    pub rows: Vec<LiftRow>,
}

impl<'a> Lifts<'a> {
    pub fn new(ew: &'a ExtWeyl, ct: &'a ClassTypes<'a>) -> Result<Lifts<'a>> {
        Ok(Lifts { ew, ct, rows: load_lifts()? })
    }

    fn dual_ctx(&self, i: usize) -> ExtCtx<'_> {
        let weyl = &self.ew.weyl;
        let base: Vec<usize> = self.ct.sub(i).simple.iter().map(|&r| weyl.rs.dagger[r]).collect();
        let wg = lift_in_base(self.ew, &base, weyl.dagger(self.ct.sub(i).longest));
        ExtCtx { ew: self.ew, dagger: true, wg }
    }

    /// Lift of the dual of a construction-table word.
    pub fn lift_dual(&self, i: usize, word: &Word) -> Result<ExtElt> {
        word.eval(&self.dual_ctx(i))
    }

    pub fn c0(&self, row: &LiftRow) -> Result<Vec<ExtElt>> {
        let ctx = ExtCtx { ew: self.ew, dagger: false, wg: ExtElt::identity() };
        row.c0.iter().map(|w| w.eval(&ctx)).collect()
    }

    pub fn verify(&self) -> Result<Report> {
        let ew = self.ew;
        let weyl = &ew.weyl;
        let rs = &weyl.rs;
        let mut rep = Report::new("lifts");
        let wctx = WCtx(weyl);
        for lr in &self.rows {
            let id = lr.id();
            let cbar: Vec<WElt> = lr.cbar.iter().map(|w| w.eval(&wctx)).collect::<Result<_>>()?;
            let c0 = self.c0(lr)?;
            let delta_closure = rs.closure(&lr.delta);
            let dmask = mask(&delta_closure);
            let w_delta = weyl.reflection_subgroup(&delta_closure);

            let proj: Vec<WElt> = c0.iter().map(|c| ew.project(c)).collect();
            let exact: Vec<usize> = (0..c0.len()).filter(|&j| j < cbar.len() && proj[j] == cbar[j]).collect();
            let mut with_m0 = proj.clone();
            with_m0.extend(&w_delta);
            let mut cbar_m0 = cbar.clone();
            cbar_m0.extend(&w_delta);
            let same_mod = weyl.generate(&with_m0).into_iter().collect::<BTreeSet<_>>()
                == weyl.generate(&cbar_m0).into_iter().collect::<BTreeSet<_>>();
            let off: Vec<String> = (0..c0.len()).filter(|j| !exact.contains(j)).map(|j| lr.c0[j].to_string()).collect();
            if cbar.len() == c0.len() && off.is_empty() {
                rep.check(format!("{} projection", id), true, format!("{} generators", c0.len()));
            } else {
                rep.check(
                    format!("{} projection", id),
                    cbar.len() == c0.len() && same_mod,
                    format!("{} agree with Cbar_0 only modulo W_Delta", off.join(", ")),
                );
            }
            let cent_ok = c0.iter().all(|g| centralizes_roots(g, &lr.delta));
            let dnum: Vec<usize> = lr.delta.iter().map(|r| r + 1).collect();
            rep.check(format!("{} centralizes [M0,M0]", id), cent_ok, format!("Delta {:?}", dnum));

            let cbar_group: BTreeSet<WElt> = weyl.generate(&cbar).into_iter().collect();
            let c0_list = ew.generate(&c0);
            let mut m0_gens: Vec<ExtElt> = rs.base(&delta_closure).iter().map(|&b| ew.n_root(b)).collect();
            m0_gens.extend(delta_closure.iter().map(|&r| ew.h_minus_one(r)));
            let m0: HashSet<ExtElt> = ew.generate(&m0_gens).into_iter().collect();
            let zc0: HashSet<WElt> = ew.center_of(&c0_list).iter().map(|z| ew.project(z)).collect();

            let mut matched: BTreeSet<usize> = BTreeSet::new();
            let mut other: BTreeSet<usize> = BTreeSet::new();
            let mut covered = 0;
            let (mut bad_cbar, mut bad_w, mut bad_v) = (Vec::new(), Vec::new(), Vec::new());
            let (mut exc_listed, mut exc_auto) = (Vec::new(), Vec::new());
            for row in self.ct.rows.iter().filter(|r| lr.covers(r)) {
                let eps = if row.e == 1 { 1 } else { -1 };
                let v_ct = self.ct_eval(row.i, &row.v)?;
                let w_ct = self.ct_eval(row.i, &row.w)?;
                let vdot = self.lift_dual(row.i, &row.v)?;
                let l = lcm(weyl.order(v_ct), 12);
                for n in (1..=l).filter(|&n| row.admits(n)) {
                    let u = weyl.mul(weyl.pow(v_ct, n as i64), w_ct);
                    let perp: Vec<usize> = perp_of_eigenspace(weyl, u, eps).into_iter().map(|r| rs.dagger[r]).collect();
                    // empty Delta, and |Delta| = 3 (cyclic defect), lie outside the tables
                    let rank = rs.base(&perp).len();
                    if rank == 0 || rank > 2 {
                        continue;
                    }
                    if mask(&perp) != dmask {
                        other.insert(row.k);
                        continue;
                    }
                    matched.insert(row.k);
                    covered += 1;
                    let tag = format!("({},{}) e={} f/m={}", row.i, row.k, row.e, n);
                    let cent = self.ct.centralizer_in_gamma(row.i, u);
                    let dual: BTreeSet<WElt> = cent.iter().map(|&g| weyl.dagger(g)).collect();
                    if dual != cbar_group {
                        bad_cbar.push(tag.clone());
                    }
                    let ab = self.ct.signature_of(&cent).abelianization_order();
                    if n % 2 == 1 && (ab == 2 || ab == 4) {
                        continue;
                    }
                    let w_trivial = row.w.text == "1";
                    if !w_trivial && !zc0.contains(&weyl.dagger(w_ct)) {
                        bad_w.push(tag.clone());
                    }
                    if m0.contains(&vdot) {
                        continue;
                    }
                    let commutes = c0.iter().all(|g| g.mul(&vdot) == vdot.mul(g));
                    if VDOT_EXCEPTIONS.contains(&(row.i, row.k)) && commutes {
                        let note = if w_trivial { " (w = 1)" } else { "" };
                        exc_listed.push(format!("{}{}", tag, note));
                    } else if n % 2 == 0 && AUTOMORPHISM_CASES.contains(&(row.i, row.k)) {
                        exc_auto.push(tag);
                    } else {
                        let note = if commutes { "commutes with C_0" } else { "does not commute with C_0" };
                        bad_v.push(format!("{} ({})", tag, note));
                    }
                }
            }
            let list = |s: &BTreeSet<usize>| s.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
            let mut detail = format!("{} (row, f/m) pairs with k in {{{}}}", covered, list(&matched));
            let missing: Vec<usize> = match &lr.ks {
                Some((false, ks)) => ks.iter().copied().filter(|k| !matched.contains(k)).collect(),
                _ => Vec::new(),
            };
            let other: BTreeSet<usize> = other.difference(&matched).copied().collect();
            if !other.is_empty() {
                detail.push_str(&format!("; other Delta for k in {{{}}}", list(&other)));
            }
            rep.check(format!("{} covers rows", id), covered > 0 && missing.is_empty(), detail);
            let detail = |bad: &Vec<String>| if bad.is_empty() { "ok".to_string() } else { bad.join("; ") };
            rep.check(format!("{} generates Cbar_0", id), bad_cbar.is_empty(), detail(&bad_cbar));
            if lr.ks.is_none() {
                rep.check(format!("{} w lifts into Z(C_0)", id), bad_w.is_empty(), detail(&bad_w));
            }
            let vid = format!("{} vdot in [M0,M0]", id);
            if !bad_v.is_empty() {
                rep.check(vid, false, detail(&bad_v));
            } else if !exc_listed.is_empty() || !exc_auto.is_empty() {
                let mut parts = Vec::new();
                if !exc_listed.is_empty() {
                    parts.push(format!("listed exception, vdot commutes with C_0: {}", exc_listed.join("; ")));
                }
                if !exc_auto.is_empty() {
                    parts.push(format!("omega acts non-trivially on Out: {}", exc_auto.join("; ")));
                }
                rep.push(vid, Status::ExpectedException, parts.join(" | "));
            } else {
                rep.check(vid, true, "ok");
            }
        }
        Ok(rep)
    }

    fn ct_eval(&self, i: usize, word: &Word) -> Result<WElt> {
        struct C<'b> {
            w: &'b Weyl,
            wg: WElt,
        }
        impl WordGroup for C<'_> {
            type Elt = WElt;
            fn one(&self) -> WElt {
                self.w.identity()
            }
            fn mul(&self, a: &WElt, b: &WElt) -> WElt {
                self.w.mul(*b, *a)
            }
            fn inv(&self, a: &WElt) -> WElt {
                self.w.inv(*a)
            }
            fn atom(&self, a: &Atom) -> Result<WElt> {
                match a {
                    Atom::WG => Ok(self.wg),
                    _ => WCtx(self.w).atom(a),
                }
            }
        }
        word.eval(&C { w: &self.ew.weyl, wg: self.ct.sub(i).longest })
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    a / x * b
}
