//! l-block tables: Alperin weight sums, weight counts as defect-zero counts,
//! defects from generic orders, series counts and graph automorphism orbits.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::classtypes::{ClassType, ClassTypes};
use crate::data::{load_table, Row};
use crate::error::{Error, Result};
use crate::finchar::{catalog, defect_zero_count, is_stored_only};
use crate::orders::generic_order;
use crate::qpoly::{charpoly4, ell_valuation, factor_cyclotomic, Affine, CycFactored, QPoly};
use crate::radical3::{shape_valuation, Radicals};
use crate::report::Report;
use crate::rootsys::root_from_number;
use crate::weyl::{WElt, Weyl};

pub const BLOCK_FILES: [&str; 4] = ["blocks_3.tbl", "blocks_big.tbl", "blocks_e346.tbl", "blocks_2f42.tbl"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllScope {
    Three,
    Big,
    AtLeast3,
    Exact(u32),
}

impl EllScope {
    fn parse(s: &str) -> Option<EllScope> {
        match s {
            "3" => Some(EllScope::Three),
            ">3" => Some(EllScope::Big),
            ">=3" => Some(EllScope::AtLeast3),
            _ => s.parse().ok().map(EllScope::Exact),
        }
    }
}

/// Sub-condition of a weight row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    All,
    AEq1,
    AGe2,
}

impl Regime {
    fn parse(s: &str) -> Option<Regime> {
        match s {
            "-" | "" => Some(Regime::All),
            "a=1" => Some(Regime::AEq1),
            "a>=2" => Some(Regime::AGe2),
            _ => None,
        }
    }

    pub fn holds(&self, a: i64) -> bool {
        match self {
            Regime::All => true,
            Regime::AEq1 => a == 1,
            Regime::AGe2 => a >= 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct WeightRow {
    pub radical: String,
    /// `N(R)/R` when printed separately from `out`
    pub nr: Option<String>,
    pub out: String,
    pub w: usize,
    pub regime: Regime,
}

#[derive(Clone, Debug)]
pub enum Defect {
    /// Sylow 3-subgroup of `M_ik`, one per branch or one for all
    Pointer(Vec<ClassType>),
    Shape(String),
}

/// A class type together with the value of e it is read at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Branch {
    pub ik: ClassType,
    pub e: u32,
}

#[derive(Clone, Debug)]
pub struct Block {
    pub id: String,
    pub file: String,
    /// one entry per ik token; a `*` token gives two branches
    pub tokens: Vec<Vec<Branch>>,
    pub ell: EllScope,
    pub label: String,
    /// simple roots (internal indices) of the Levi subgroup of a cuspidal label
    pub levi: Vec<usize>,
    pub db: Affine,
    pub lb: usize,
    pub defect: Defect,
    pub rows: Vec<WeightRow>,
}

impl Block {
    pub fn branches(&self) -> impl Iterator<Item = (usize, Branch)> + '_ {
        self.tokens.iter().enumerate().flat_map(|(t, bs)| bs.iter().map(move |&b| (t, b)))
    }

    /// Blocks of the double cover, q = 2.
    pub fn is_cover(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn weight_sum(&self, a: i64) -> usize {
        self.rows.iter().filter(|r| r.regime.holds(a)).map(|r| r.w).sum()
    }
}

fn class_type(row: &Row, s: &str) -> Result<ClassType> {
    let (i, k) = s.split_once(',').ok_or_else(|| row.err(&format!("bad class type {:?}", s)))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|_| row.err(&format!("bad class type {:?}", s)));
    Ok((p(i)?, p(k)?))
}

fn parse_tokens(row: &Row, s: &str, es: &str) -> Result<Vec<Vec<Branch>>> {
    let fixed_e: Option<u32> = if es == "1,2" { None } else { Some(es.parse().map_err(|_| row.err("bad e"))?) };
    s.split(';')
        .map(|t| {
            let t = t.trim();
            let (body, es): (&str, Vec<u32>) = match (t.chars().last(), fixed_e) {
                (Some('+'), None) => (&t[..t.len() - 1], vec![1]),
                (Some('-'), None) => (&t[..t.len() - 1], vec![2]),
                (Some('*'), None) => (&t[..t.len() - 1], vec![1, 2]),
                (_, Some(e)) => (t, vec![e]),
                _ => return Err(row.err(&format!("class type {:?} without branch", t))),
            };
            let ik = class_type(row, body)?;
            Ok(es.into_iter().map(|e| Branch { ik, e }).collect())
        })
        .collect()
}

fn parse_defect(row: &Row, s: &str) -> Result<Defect> {
    if s.starts_with('(') {
        let iks = s
            .split(';')
            .map(|t| class_type(row, t.trim().trim_start_matches('(').trim_end_matches(')')))
            .collect::<Result<_>>()?;
        Ok(Defect::Pointer(iks))
    } else {
        defect_shape_valuation(s).map_err(|e| row.err(&e.to_string()))?;
        Ok(Defect::Shape(s.to_string()))
    }
}

/// Number of prime factors of an abelian defect group such as `[l^a]^4` or
/// `[3^(a+1)]x[3^a]`, as an affine function of a.
pub fn defect_shape_valuation(s: &str) -> Result<Affine> {
    let t = s.replace("l^", "3^").replace("[5]", "[3]").replace("[7]", "[3]");
    shape_valuation(&t)
}

fn weight_row(row: &Row, has_nr: bool) -> Result<WeightRow> {
    let regime = Regime::parse(row.get("cond")?.trim()).ok_or_else(|| row.err("bad cond"))?;
    Ok(WeightRow {
        radical: row.get("R")?.trim().to_string(),
        nr: if has_nr { Some(row.get("nr")?.trim().to_string()) } else { None },
        out: row.get("out")?.trim().to_string(),
        w: row.parse("W")?,
        regime,
    })
}

pub fn load_blocks(file: &str) -> Result<Vec<Block>> {
    let t = load_table(file, "blocks")?;
    let has_nr = t.header.iter().any(|h| h == "nr");
    let cover = !t.header.iter().any(|h| h == "ik");
    let mut out: Vec<Block> = Vec::new();
    for row in &t.rows {
        let id = row.get("block")?.trim().to_string();
        let continued = row.get("ell")?.trim() == ".";
        if continued {
            let b = out.last_mut().filter(|b| b.id == id).ok_or_else(|| row.err("continuation of a different block"))?;
            b.rows.push(weight_row(row, has_nr)?);
            continue;
        }
        if out.iter().any(|b| b.id == id) {
            return Err(row.err(&format!("duplicate block {}", id)));
        }
        let ell = EllScope::parse(row.get("ell")?.trim()).ok_or_else(|| row.err("bad ell"))?;
        let (tokens, label, levi) = if cover {
            (Vec::new(), "1".to_string(), Vec::new())
        } else {
            let levi = match row.get("levi")?.trim() {
                "-" => Vec::new(),
                s => s
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| row.err("bad levi")).and_then(root_from_number))
                    .collect::<Result<_>>()?,
            };
            (parse_tokens(row, row.get("ik")?.trim(), row.get("e")?.trim())?, row.get("label")?.trim().to_string(), levi)
        };
        let defect = parse_defect(row, row.get("defect")?.trim())?;
        if let Defect::Pointer(p) = &defect {
            if p.len() != 1 && p.len() != tokens.len() {
                return Err(row.err("one Sylow pointer per class type expected"));
            }
        }
        if (label == "1") != levi.is_empty() {
            return Err(row.err("a Levi subgroup is given exactly for cuspidal labels"));
        }
        out.push(Block {
            id,
            file: file.to_string(),
            tokens,
            ell,
            label,
            levi,
            db: Affine::parse(row.get("db")?)?,
            lb: row.parse("lb")?,
            defect,
            rows: vec![weight_row(row, has_nr)?],
        });
    }
    Ok(out)
}

pub fn load_all_blocks() -> Result<Vec<Block>> {
    let mut out = Vec::new();
    for f in BLOCK_FILES {
        out.extend(load_blocks(f)?);
    }
    Ok(out)
}

/// Primes at which the weight counts of a row are tested.
fn test_primes(b: &Block, order: usize) -> Vec<u64> {
    let big = || [5u64, 7, 11, 13].into_iter().find(|&l| order as u64 % l != 0).unwrap_or(17);
    match b.ell {
        EllScope::Three => vec![3],
        EllScope::Big => vec![big()],
        EllScope::AtLeast3 => vec![3, big()],
        EllScope::Exact(l) => vec![l as u64],
    }
}

/// Alperin sums per block and regime, and every weight count against the
/// defect-zero characters of its catalog group.
pub fn verify_alperin(blocks: &[Block]) -> Result<Report> {
    let mut rep = Report::new("alperin");
    for b in blocks {
        for (a, name) in [(1, "a=1"), (2, "a>=2")] {
            if b.is_cover() && a > 1 {
                continue;
            }
            let s = b.weight_sum(a);
            let terms: Vec<String> = b.rows.iter().filter(|r| r.regime.holds(a)).map(|r| r.w.to_string()).collect();
            let id = if b.is_cover() { format!("alperin {}", b.id) } else { format!("alperin {} {}", b.id, name) };
            rep.check(id, s == b.lb, format!("{} = {} vs l(b) = {}", terms.join("+"), s, b.lb));
        }
    }
    let mut cache: HashMap<String, (usize, crate::finchar::CharDegrees)> = HashMap::new();
    for b in blocks {
        for r in &b.rows {
            if is_stored_only(&r.out) {
                rep.push(
                    format!("irr0 {} {} {}", b.id, r.radical, r.out),
                    crate::report::Status::ExpectedException,
                    format!("stored only, W = {}", r.w),
                );
                continue;
            }
            if !cache.contains_key(&r.out) {
                let g = catalog(&r.out)?.classes();
                let d = g.character_degrees()?;
                cache.insert(r.out.clone(), (g.order, d));
            }
            let (order, deg) = &cache[&r.out];
            for ell in test_primes(b, *order) {
                let n = defect_zero_count(*order, deg, ell);
                rep.check(
                    format!("irr0 {} l={} ({} {})", r.out, ell, b.id, r.radical),
                    n == r.w,
                    format!("|Irr0| = {}, W = {}", n, r.w),
                );
            }
        }
    }
    Ok(rep)
}

/// Maximal tori `R_j,l` of the l > 3 tables, as W-classes for e = 1 and e = 2.
const TORUS_SYLOW: [(usize, usize, usize); 9] =
    [(2, 21, 21), (3, 16, 16), (9, 22, 22), (10, 3, 3), (11, 7, 8), (12, 4, 5), (16, 12, 13), (17, 17, 18), (18, 1, 2)];

fn torus_of(name: &str, e: u32) -> Option<usize> {
    let body = name.strip_suffix(",l")?;
    if let Some(k) = body.strip_prefix('S') {
        return k.parse().ok();
    }
    let j: usize = body.strip_prefix('R')?.parse().ok()?;
    TORUS_SYLOW.iter().find(|t| t.0 == j).map(|t| if e == 1 { t.1 } else { t.2 })
}

/// Characteristic polynomial of `v` on the span of the roots `levi`, which `v`
/// must stabilize. Rank at most 2.
fn levi_charpoly(weyl: &Weyl, levi: &[usize], v: WElt) -> Result<QPoly> {
    let rs = &weyl.rs;
    let g = |a: usize, b: usize| rs.ip2(a, b) as i128;
    match levi.len() {
        1 => {
            let x = weyl.apply(v, levi[0]);
            let c = g(levi[0], x) / g(levi[0], levi[0]);
            Ok(QPoly::new(vec![-c, 1]))
        }
        2 => {
            let (a, b) = (levi[0], levi[1]);
            let det = g(a, a) * g(b, b) - g(a, b) * g(a, b);
            // coordinates of v(x) in the basis a, b
            let coords = |x: usize| {
                let (pa, pb) = (g(a, x), g(b, x));
                ((g(b, b) * pa - g(a, b) * pb) / det, (g(a, a) * pb - g(a, b) * pa) / det)
            };
            let (m00, m10) = coords(weyl.apply(v, a));
            let (m01, m11) = coords(weyl.apply(v, b));
            Ok(QPoly::new(vec![m00 * m11 - m01 * m10, -(m00 + m11), 1]))
        }
        n => Err(Error::UnsupportedType(format!("Levi subgroup of rank {}", n))),
    }
}

/// Order of the torus `Z(L)` for the element of the coset `W_Gamma_i v` that
/// normalizes `L` and has the largest l-part, with its valuation.
pub fn cuspidal_defect(ct: &ClassTypes, i: usize, v: WElt, levi: &[usize], ell: u32, e: u32) -> Result<(Affine, CycFactored)> {
    let weyl = ct.weyl;
    let mask = weyl.rs.closure(levi).iter().fold(0u64, |m, &r| m | 1 << r);
    let mut best: Option<(Affine, CycFactored)> = None;
    for &u in &ct.sub(i).group {
        let x = weyl.mul(u, v);
        if weyl.image_mask(x, mask) != mask {
            continue;
        }
        let full = charpoly4(&weyl.mat(x));
        let part = levi_charpoly(weyl, levi, x)?;
        let torus = full.div_exact(&part).ok_or_else(|| Error::Parse("Levi characteristic polynomial does not divide".into()))?;
        let f = factor_cyclotomic(&torus)?;
        let val = ell_valuation(&f, ell, e);
        if best.as_ref().map_or(true, |(b, _)| (val.c, val.c0) > (b.c, b.c0)) {
            best = Some((val, f));
        }
    }
    best.ok_or_else(|| Error::Parse(format!("no element of the coset for ({},_) normalizes the Levi subgroup", i)))
}

/// Primes l at which a row with this scope is evaluated symbolically.
fn scope_primes(s: EllScope) -> Vec<u32> {
    match s {
        EllScope::Three => vec![3],
        EllScope::Big => vec![5],
        EllScope::AtLeast3 => vec![3, 5],
        EllScope::Exact(l) => vec![l],
    }
}

fn rep_of(ct: &ClassTypes, ik: ClassType) -> Result<WElt> {
    ct.representative(ik).ok_or_else(|| Error::Parse(format!("no representative for ({},{})", ik.0, ik.1)))
}

/// `d(b)` from generic orders, the defect group column and the first weight
/// subgroup.
pub fn check_defects(ct: &ClassTypes, blocks: &[Block], rad: &Radicals) -> Result<Report> {
    let weyl = ct.weyl;
    let mut rep = Report::new("blocks");
    for b in blocks {
        if b.is_cover() {
            let a = 1;
            let want = b.db.at(a);
            let from_defect = match &b.defect {
                Defect::Pointer(p) => {
                    let o = generic_order(weyl, &ct.sub(p[0].0).simple, rep_of(ct, p[0])?)?;
                    ell_valuation(&o, 3, 2).at(a)
                }
                Defect::Shape(s) => defect_shape_valuation(s)?.at(a),
            };
            rep.check(format!("defect {} column", b.id), from_defect == want, format!("{} vs d(b) = {}", from_defect, want));
            if b.ell == EllScope::Exact(3) {
                let r = rad.order_val(&b.rows[0].radical)?.at(a);
                rep.check(format!("defect {} {}", b.id, b.rows[0].radical), r == want, format!("{} vs d(b) = {}", r, want));
            }
            continue;
        }
        for (t, br) in b.branches() {
            let v = rep_of(ct, br.ik)?;
            let tag = format!("defect {} ({},{}) e={}", b.id, br.ik.0, br.ik.1, br.e);
            let mut bad = Vec::new();
            let mut detail = Vec::new();
            for ell in scope_primes(b.ell) {
                let got = if b.label == "1" {
                    let o = generic_order(weyl, &ct.sub(br.ik.0).simple, v)?;
                    (ell_valuation(&o, ell, br.e), o)
                } else {
                    cuspidal_defect(ct, br.ik.0, v, &b.levi, ell, br.e)?
                };
                detail.push(format!("l={}: {} from {}", ell, got.0, got.1));
                if got.0 != b.db {
                    bad.push(ell);
                }
            }
            rep.check(tag.clone(), bad.is_empty(), format!("d(b) = {}; {}", b.db, detail.join("; ")));

            let col = match &b.defect {
                Defect::Pointer(p) => {
                    let ptr = if p.len() == 1 { p[0] } else { p[t] };
                    let o = generic_order(weyl, &ct.sub(ptr.0).simple, rep_of(ct, ptr)?)?;
                    (ell_valuation(&o, 3, br.e), format!("Sylow of M_{},{}", ptr.0, ptr.1))
                }
                Defect::Shape(s) => (defect_shape_valuation(s)?, s.clone()),
            };
            rep.check(format!("{} column", tag), col.0 == b.db, format!("{} has {}", col.1, col.0));

            let first = &b.rows[0].radical;
            let mut vals = Vec::new();
            if matches!(b.ell, EllScope::Three | EllScope::AtLeast3) {
                let name = first.strip_suffix(",l").unwrap_or(first);
                vals.push((format!("{} at l=3", name), rad.order_val(name)?));
            }
            // R_j,l for e > 2 is the Sylow subgroup of Z(L), checked above
            if !matches!(b.ell, EllScope::Three) && !(br.e > 2 && first.starts_with('R')) {
                let k = torus_of(first, br.e).ok_or_else(|| Error::Parse(format!("no torus for {}", first)))?;
                let o = generic_order(weyl, &[], weyl.class(k).rep)?;
                let ell = if br.e > 2 { 7 } else { 5 };
                vals.push((format!("{} in torus {}", first, k), ell_valuation(&o, ell, br.e)));
            }
            let ok = vals.iter().all(|(_, v)| *v == b.db);
            let d: Vec<String> = vals.iter().map(|(n, v)| format!("{} has {}", n, v)).collect();
            rep.check(format!("{} weight subgroup", tag), ok, d.join("; "));
        }
    }
    Ok(rep)
}

/// Weight subgroups of l = 3 rows against the radical subgroup table.
pub fn check_weight_subgroups(blocks: &[Block], rad: &Radicals) -> Result<Report> {
    let mut rep = Report::new("blocks");
    let mut used: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for b in blocks.iter().filter(|b| !b.is_cover() && matches!(b.ell, EllScope::Three | EllScope::AtLeast3)) {
        for r in &b.rows {
            let name = r.radical.strip_suffix(",l").unwrap_or(&r.radical).to_string();
            let recs: Vec<_> = rad.records.iter().filter(|x| x.name == name).collect();
            let fits = recs.iter().any(|x| match r.regime {
                Regime::All => true,
                Regime::AEq1 => x.cond != "a>=2",
                Regime::AGe2 => x.cond != "a=1",
            });
            rep.check(format!("weight subgroup {} {}", b.id, r.radical), fits, format!("{} table rows", recs.len()));
            used.entry(name).or_default().insert(b.id.clone());
        }
    }
    let cyclic: BTreeSet<&str> =
        rad.records.iter().filter(|r| ["3", "3^a", "3^(a+1)"].contains(&r.shape.as_str())).map(|r| r.name.as_str()).collect();
    let noncyclic: BTreeSet<usize> = used
        .keys()
        .filter(|n| !cyclic.contains(n.as_str()))
        .map(|n| n[1..].parse().unwrap_or(0))
        .collect();
    let listed: BTreeSet<usize> = (8..=12).chain(15..=26).chain(29..=38).collect();
    rep.check(
        "non-cyclic weight subgroups",
        noncyclic.is_subset(&listed),
        format!("used {:?}; listed but not in a table row {:?}", noncyclic, listed.difference(&noncyclic).collect::<Vec<_>>()),
    );
    let principal_only: Vec<&str> = ["R15", "R21", "R22", "R35", "R36", "R37", "R38"]
        .into_iter()
        .filter(|n| used.get(*n).map_or(true, |ids| ids.len() != 1 || !ids.contains("1.1")))
        .collect();
    rep.check("principal block weight subgroups", principal_only.is_empty(), format!("{:?}", principal_only));
    Ok(rep)
}

fn partitions(n: usize) -> usize {
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            p[m] += p[m - k];
        }
    }
    p[n]
}

fn bipartitions(n: usize) -> usize {
    (0..=n).map(|k| partitions(k) * partitions(n - k)).sum()
}

/// Number of unipotent characters of a group with the given Cartan type,
/// components joined by `x`.
pub fn unipotent_char_count(ty: &str) -> Result<usize> {
    let mut total = 1;
    for c in ty.split('x') {
        let c = c.trim().trim_end_matches('~');
        let bad = || Error::UnsupportedType(c.to_string());
        let (letter, n) = c.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        total *= match letter {
            "A" => partitions(n + 1),
            "B" | "C" => (1..).step_by(2).map(|d: usize| (d * d - 1) / 4).take_while(|&s| s <= n).map(|s| bipartitions(n - s)).sum(),
            "F" if n == 4 => 37,
            _ => return Err(bad()),
        };
    }
    Ok(total)
}

pub fn check_series_counts(blocks: &[Block]) -> Result<Report> {
    let mut rep = Report::new("blocks");
    let t = load_table("blocks_3.tbl", "series")?;
    for row in &t.rows {
        let ids: Vec<&str> = row.get("blocks")?.split(';').map(str::trim).collect();
        let mut sum = 0;
        let mut terms = Vec::new();
        for id in &ids {
            let b = blocks.iter().find(|b| b.id == *id).ok_or_else(|| row.err(&format!("no block {}", id)))?;
            sum += b.lb;
            terms.push(b.lb.to_string());
        }
        let residual: usize = row.parse("residual")?;
        let adjust: i64 = row.parse("adjust")?;
        let ty = row.get("type")?.trim();
        let u = unipotent_char_count(ty)?;
        if residual > 0 {
            terms.push(residual.to_string());
        }
        let ok = (sum + residual) as i64 == u as i64 + adjust;
        rep.check(
            format!("series ({}) l{}", row.get("ik")?.trim(), row.get("ell")?.trim()),
            ok,
            format!("{} = {} vs {}{:+}", terms.join("+"), sum + residual, u, adjust),
        );
    }
    Ok(rep)
}

pub fn verify_blocks(ct: &ClassTypes) -> Result<Report> {
    let blocks = load_all_blocks()?;
    let rad = Radicals::load()?;
    let mut rep = check_defects(ct, &blocks, &rad)?;
    rep.extend(check_weight_subgroups(&blocks, &rad)?);
    rep.extend(check_series_counts(&blocks)?);
    Ok(rep)
}

/// Orbits of length 2 of the graph automorphism on unipotent characters of a
/// group of the given type: `swap(i,j)` exchanges two components of the same
/// size, `graph` is the exceptional graph automorphism of B2 or F4.
fn swap_orbits(weyl: &Weyl, ty: &str, action: &str) -> Result<usize> {
    if ty == "F4" && action == "graph" {
        // principal series pairs, plus the pair of linear characters of the
        // relative Weyl group W(B2) of the B2-series
        let principal = weyl.sigma_orbit_count(1)?;
        let b2 = weyl.reflection_subgroup(&[root_from_number(2)?, root_from_number(3)?]);
        let cls = weyl.classes_within(&b2);
        let which = |x: WElt| cls.iter().position(|k| k.binary_search(&x).is_ok());
        let mut pairs = 0;
        for (i, k) in cls.iter().enumerate() {
            match which(weyl.dagger(k[0])) {
                Some(j) if j > i => pairs += 1,
                Some(_) => {}
                None => return Err(Error::Parse("W(B2) is not dagger-stable".into())),
            }
        }
        return Ok(principal + pairs);
    }
    let comps: Vec<&str> = ty.split('x').collect();
    let counts: Vec<usize> = comps.iter().map(|c| unipotent_char_count(c)).collect::<Result<_>>()?;
    let total: usize = counts.iter().product();
    let fixed: usize = if action == "graph" {
        if ty != "B2" {
            return Err(Error::UnsupportedType(ty.to_string()));
        }
        // the two principal series characters of equal degree are exchanged
        4
    } else {
        let inner = action.strip_prefix("swap(").and_then(|s| s.strip_suffix(')')).ok_or_else(|| Error::Parse(action.to_string()))?;
        let (i, j) = inner.split_once(',').ok_or_else(|| Error::Parse(action.to_string()))?;
        let (i, j): (usize, usize) = (i.parse().map_err(|_| Error::Parse(action.to_string()))?, j.parse().map_err(|_| Error::Parse(action.to_string()))?);
        if counts[i - 1] != counts[j - 1] {
            return Err(Error::Parse(format!("{} swaps components of different size", action)));
        }
        counts.iter().enumerate().filter(|&(c, _)| c != j - 1).map(|(_, &u)| u).product()
    };
    Ok((total - fixed) / 2)
}

fn rs_type(ct: &ClassTypes, i: usize) -> Result<BTreeSet<String>> {
    let closure = ct.weyl.rs.closure(&ct.sub(i).simple);
    Ok(ct.weyl.rs.cartan_type(&closure)?.into_iter().collect())
}

pub fn check_sigma_orbit_data(ct: &ClassTypes, blocks: &[Block]) -> Result<Report> {
    let weyl = ct.weyl;
    let mut rep = Report::new("sigma");
    for row in &load_table("sigma.tbl", "principal")?.rows {
        let e: u32 = row.parse("e")?;
        let want: usize = row.parse("no")?;
        let got = weyl.sigma_orbit_count(e)?;
        rep.check(format!("sigma orbits e={}", e), got == want, format!("{} computed, {} listed", got, want));
    }
    for row in &load_table("sigma.tbl", "swap")?.rows {
        let i: usize = row.parse("i")?;
        let ty = row.get("type")?.trim();
        let want: usize = row.parse("no")?;
        let got = swap_orbits(weyl, ty, row.get("action")?.trim())?;
        let listed: BTreeSet<String> = ty.split('x').map(|c| match c.strip_suffix('~') {
            Some(b) => format!("Ã{}", &b[1..]),
            None => c.to_string(),
        }).collect();
        let actual = rs_type(ct, i)?;
        rep.check(
            format!("swap orbits ({},{})", i, row.get("k")?.trim()),
            got == want && listed == actual,
            format!("{} computed for {} ({:?}), {} listed", got, ty, actual, want),
        );
    }
    let weights = load_table("sigma.tbl", "weights")?;
    let principal = blocks.iter().find(|b| b.id == "1.1").ok_or_else(|| Error::Parse("no principal 3-block".into()))?;
    let mut sums = [0usize; 2];
    let mut matched = true;
    let mut nrows = 0;
    for row in &weights.rows {
        let regime = Regime::parse(row.get("cond")?.trim()).ok_or_else(|| row.err("bad cond"))?;
        let no: usize = row.parse("no")?;
        let names: Vec<&str> = row.get("R")?.split(',').map(str::trim).collect();
        let ws = crate::data::int_list(row, "W")?;
        for (s, a) in sums.iter_mut().zip([1, 2]) {
            if regime.holds(a) {
                *s += no;
            }
        }
        // orbits of length 2 on the weights of the listed subgroups
        matched &= names.len() == ws.len() && 2 * no <= ws.iter().sum::<i64>() as usize;
        for (r, &w) in names.iter().zip(&ws) {
            matched &= principal.rows.iter().any(|x| x.radical == *r && x.w == w as usize && x.regime == regime);
            nrows += 1;
        }
    }
    rep.check("weights of the principal block", matched && nrows == principal.rows.len(), "rows agree with the block table");
    for (a, s) in [("a=1", sums[0]), ("a>=2", sums[1])] {
        rep.check(format!("weight orbits {}", a), s == 7, format!("{} orbits of length 2", s));
    }
    let faithful: BTreeMap<u32, usize> = load_table("sigma.tbl", "faithful")?
        .rows
        .iter()
        .map(|r| Ok((r.parse("ell")?, r.parse("no")?)))
        .collect::<Result<_>>()?;
    let w2 = load_table("sigma.tbl", "weights2f42")?;
    let s: usize = w2.rows.iter().map(|r| r.parse::<usize>("no")).sum::<Result<usize>>()?;
    rep.check("weight orbits 2.F4(2)", Some(&s) == faithful.get(&3), format!("{} orbits on weights, {:?} on IBr", s, faithful.get(&3)));
    Ok(rep)
}

pub fn verify_sigma(ct: &ClassTypes) -> Result<Report> {
    let blocks = load_all_blocks()?;
    check_sigma_orbit_data(ct, &blocks)
}
