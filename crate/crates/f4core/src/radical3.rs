//! Radical 3-subgroups of F4(q), their duals, and the Sylow subgroups of
//! centralizers.

use std::collections::{BTreeMap, BTreeSet};

use crate::classtypes::{ClassType, ClassTypes};
use crate::data::{load_table, Row};
use crate::error::{Error, Result};
use crate::orders::generic_order;
use crate::qpoly::{ell_valuation, Affine};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct RadicalRecord {
    pub name: String,
    pub shape: String,
    pub char_type: String,
    pub char_label: String,
    pub cent: String,
    pub norm: String,
    pub out: String,
    pub cond: String,
    pub dagger: String,
}

pub fn load_radical_table() -> Result<Vec<RadicalRecord>> {
    let t = load_table("radical3.tbl", "radical3")?;
    let f = |r: &Row, c: &str| -> Result<String> { Ok(r.get(c)?.trim().to_string()) };
    t.rows
        .iter()
        .map(|r| {
            let rec = RadicalRecord {
                name: f(r, "name")?,
                shape: f(r, "shape")?,
                char_type: f(r, "type")?,
                char_label: f(r, "char")?,
                cent: f(r, "cent")?,
                norm: f(r, "norm")?,
                out: f(r, "out")?,
                cond: f(r, "cond")?,
                dagger: f(r, "dagger")?,
            };
            shape_valuation(&rec.shape).map_err(|e| r.err(&e.to_string()))?;
            Ok(rec)
        })
        .collect()
}

struct ShapeParser<'s> {
    s: &'s [u8],
    pos: usize,
}

impl ShapeParser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!(
            "shape {:?} at {}: {}",
            String::from_utf8_lossy(self.s),
            self.pos,
            msg
        )))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos] == b' ' {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        match std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse() {
            Ok(n) => Ok(n),
            Err(_) => self.err("expected integer"),
        }
    }

    fn affine_term(&mut self) -> Result<Affine> {
        if self.eat("a") {
            Ok(Affine::new(1, 0))
        } else {
            Ok(Affine::new(0, self.int()?))
        }
    }

    fn exponent(&mut self) -> Result<Affine> {
        if !self.eat("(") {
            return self.affine_term();
        }
        let mut e = self.affine_term()?;
        while self.eat("+") {
            let t = self.affine_term()?;
            e = Affine::new(e.c + t.c, e.c0 + t.c0);
        }
        if !self.eat(")") {
            return self.err("expected )");
        }
        Ok(e)
    }

    fn central(&mut self) -> Result<Affine> {
        let mut v = self.product()?;
        while self.eat("o3") {
            let w = self.product()?;
            v = Affine::new(v.c + w.c, v.c0 + w.c0 - 1);
        }
        Ok(v)
    }

    fn product(&mut self) -> Result<Affine> {
        let mut v = self.postfix()?;
        while self.eat("x") {
            let w = self.postfix()?;
            v = Affine::new(v.c + w.c, v.c0 + w.c0);
        }
        Ok(v)
    }

    fn postfix(&mut self) -> Result<Affine> {
        let mut v = self.primary()?;
        loop {
            if self.eat("^") {
                let e = self.exponent()?;
                v = if v == Affine::new(0, 1) {
                    e
                } else if e.c == 0 {
                    Affine::new(v.c * e.c0, v.c0 * e.c0)
                } else {
                    return self.err("non-affine power");
                };
            } else if self.eat(".") {
                let mut n = self.int()?;
                while n % 3 == 0 {
                    n /= 3;
                    v.c0 += 1;
                }
            } else {
                return Ok(v);
            }
        }
    }

    fn primary(&mut self) -> Result<Affine> {
        for (open, close) in [("(", ")"), ("[", "]")] {
            if self.eat(open) {
                let v = self.central()?;
                if !self.eat(close) {
                    return self.err("unbalanced bracket");
                }
                return Ok(v);
            }
        }
        if self.eat("Syl") {
            Ok(Affine::new(4, 2))
        } else if self.eat("D1") || self.eat("D2") {
            Ok(Affine::new(2, 1))
        } else if self.eat("3+") || self.eat("3") {
            Ok(Affine::new(0, 1))
        } else {
            self.err("unexpected token")
        }
    }
}

/// `v_3` of the order of a group given by a structure descriptor, as an
/// affine expression in a.
pub fn shape_valuation(shape: &str) -> Result<Affine> {
    let mut p = ShapeParser { s: shape.as_bytes(), pos: 0 };
    let v = p.central()?;
    p.skip_ws();
    if p.pos != shape.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Counts of non-trivial elements in the classes 3A, 3B, 3C, or `None` for
/// the parenthesized types. A lone letter stands for a group of order 3.
pub fn parse_char_type(t: &str) -> Option<[u32; 3]> {
    let body = t.strip_prefix('3')?.as_bytes();
    let mut out = [0u32; 3];
    let mut i = 0;
    let mut letters = 0;
    while i < body.len() {
        let l = body[i].checked_sub(b'A')? as usize;
        if l >= 3 {
            return None;
        }
        i += 1;
        letters += 1;
        if i < body.len() && body[i] == b'_' {
            i += 1;
            let start = i;
            while i < body.len() && body[i].is_ascii_digit() {
                i += 1;
            }
            out[l] = std::str::from_utf8(&body[start..i]).ok()?.parse().ok()?;
        } else if body.len() == 1 {
            out[l] = 2;
        } else {
            return None;
        }
    }
    (letters > 0).then_some(out)
}

/// Top-level direct factors sorted, so that `S3x6` and `6xS3` compare equal.
pub fn normalize_structure(s: &str) -> String {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c == 'x' && depth == 0 {
            parts.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    parts.push(cur);
    if parts.len() > 1 {
        let mut n: Vec<String> = parts.iter().map(|p| normalize_structure(p)).collect();
        n.sort();
        return n.join("x");
    }
    if let Some(inner) = s.strip_prefix('(') {
        let mut depth = 1;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return format!("({}){}", normalize_structure(&inner[..i]), &inner[i + 1..]);
                    }
                }
                _ => {}
            }
        }
    }
    s.to_string()
}

pub struct Radicals {
    pub records: Vec<RadicalRecord>,
}

impl Radicals {
    pub fn load() -> Result<Radicals> {
        Ok(Radicals { records: load_radical_table()? })
    }

    pub fn get(&self, name: &str) -> Option<&RadicalRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// `v_3 |R|`; the trivial group is named `1`.
    pub fn order_val(&self, name: &str) -> Result<Affine> {
        if name == "1" {
            return Ok(Affine::new(0, 0));
        }
        let r = self.get(name).ok_or_else(|| Error::Parse(format!("unknown radical subgroup {}", name)))?;
        shape_valuation(&r.shape)
    }

    pub fn check_dagger(&self) -> Result<Report> {
        let mut rep = Report::new("radical");
        let names: BTreeSet<&str> = self.records.iter().map(|r| r.name.as_str()).collect();
        rep.check("radical count", names.len() == 38, format!("{} names, {} rows", names.len(), self.records.len()));
        let mut labels: BTreeMap<&str, &str> = BTreeMap::new();
        let mut sylow = Vec::new();
        for r in &self.records {
            let v = self.order_val(&r.name)?;
            if v == Affine::new(4, 2) {
                sylow.push(r.name.clone());
            }
            let in_range = [1, 2, 3].iter().all(|&a| v.at(a) >= 1 && v.at(a) <= 4 * a + 2);
            rep.check(format!("{} valuation", r.name), in_range, format!("{}", v));
            let Some(d) = self.records.iter().find(|x| x.name == r.dagger && x.cond == r.cond) else {
                rep.check(format!("{} dagger", r.name), false, format!("{} missing", r.dagger));
                continue;
            };
            let mut bad = Vec::new();
            if d.dagger != r.name {
                bad.push(format!("{} is sent to {}", d.name, d.dagger));
            }
            if self.order_val(&d.name)? != v {
                bad.push("orders differ".into());
            }
            match (parse_char_type(&r.char_type), parse_char_type(&d.char_type)) {
                (Some(x), Some(y)) => {
                    if [x[1], x[0], x[2]] != y {
                        bad.push(format!("types {} and {}", r.char_type, d.char_type));
                    }
                    let n: u32 = x.iter().sum::<u32>() + 1;
                    if !is_power_of_3(n) {
                        bad.push(format!("type {} does not count a 3-group", r.char_type));
                    }
                }
                (None, None) if r.char_type == d.char_type => {}
                _ => bad.push(format!("types {} and {}", r.char_type, d.char_type)),
            }
            if let Some(&prev) = labels.get(r.char_label.as_str()) {
                if prev != d.char_label {
                    bad.push(format!("{} sent to both {} and {}", r.char_label, prev, d.char_label));
                }
            }
            labels.insert(&r.char_label, &d.char_label);
            if normalize_structure(&r.out) != normalize_structure(&d.out) {
                bad.push(format!("Out {} and {}", r.out, d.out));
            }
            let detail = if bad.is_empty() { format!("{} <-> {}", r.name, d.name) } else { bad.join("; ") };
            rep.check(format!("{} dagger", r.name), bad.is_empty(), detail);
        }
        let inv = labels.iter().all(|(a, b)| labels.get(b) == Some(a));
        rep.check("characteristic labels", inv, format!("{:?}", labels));
        rep.check("unique Sylow", sylow == ["R38"], sylow.join(","));
        Ok(rep)
    }
}

fn is_power_of_3(mut n: u32) -> bool {
    while n > 1 && n % 3 == 0 {
        n /= 3;
    }
    n == 1
}

/// One (class type, epsilon) entry of the Sylow table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowEntry {
    pub ik: ClassType,
    pub eps: i32,
    pub radical: String,
}

fn split_eps(entry: &str, eps: i32) -> String {
    match entry.split_once(',') {
        Some((p, m)) => if eps == 1 { p } else { m }.trim().to_string(),
        None => entry.trim().to_string(),
    }
}

pub fn load_sylow() -> Result<Vec<SylowEntry>> {
    let t = load_table("sylow.tbl", "sylow")?;
    let mut out = Vec::new();
    for r in &t.rows {
        let i: usize = r.parse("i")?;
        let groups: Vec<&str> = r.get("k")?.split('/').collect();
        let first: Vec<&str> = r.get("first")?.split('/').collect();
        let second_raw = r.get("second")?.trim();
        let second: Option<Vec<&str>> = (second_raw != "-").then(|| second_raw.split('/').collect());
        if first.len() != groups.len() || second.as_ref().map_or(false, |s| s.len() != groups.len()) {
            return Err(r.err("k groups and entries do not pair up"));
        }
        for (g, grp) in groups.iter().enumerate() {
            let ks: Vec<usize> = grp
                .split(',')
                .map(|k| k.trim().parse().map_err(|_| r.err(&format!("bad k {:?}", k))))
                .collect::<Result<_>>()?;
            let p1 = first[g];
            for eps in [1, -1] {
                match (&second, ks.len()) {
                    (None, 1) => {
                        out.push(SylowEntry { ik: (i, ks[0]), eps, radical: split_eps(p1, eps) });
                    }
                    (None, 2) => {
                        let k = if eps == 1 { ks[0] } else { ks[1] };
                        out.push(SylowEntry { ik: (i, k), eps, radical: p1.trim().to_string() });
                    }
                    (Some(s), 1) => {
                        let e = if eps == 1 { p1 } else { s[g] };
                        out.push(SylowEntry { ik: (i, ks[0]), eps, radical: e.trim().to_string() });
                    }
                    (Some(s), 2) => {
                        let (a, b) = if eps == 1 { (ks[0], ks[1]) } else { (ks[1], ks[0]) };
                        out.push(SylowEntry { ik: (i, a), eps, radical: p1.trim().to_string() });
                        out.push(SylowEntry { ik: (i, b), eps, radical: s[g].trim().to_string() });
                    }
                    _ => return Err(r.err("more than two k values in a group")),
                }
            }
        }
    }
    Ok(out)
}

/// `v_3` of the generic order of every `M_ik` against the radical subgroup
/// listed as containing its Sylow 3-subgroup.
pub fn check_sylow_joins(ct: &ClassTypes, rad: &Radicals) -> Result<Report> {
    let mut rep = Report::new("radical");
    let entries = load_sylow()?;
    let mut seen: BTreeMap<(ClassType, i32), usize> = BTreeMap::new();
    for en in &entries {
        *seen.entry((en.ik, en.eps)).or_insert(0) += 1;
    }
    let expected: BTreeSet<(ClassType, i32)> =
        ct.class_types().into_iter().flat_map(|ik| [(ik, 1), (ik, -1)]).collect();
    let keys: BTreeSet<(ClassType, i32)> = seen.keys().copied().collect();
    let dup: Vec<_> = seen.iter().filter(|(_, &n)| n > 1).map(|(k, _)| *k).collect();
    rep.check(
        "sylow table entries are class types",
        keys.is_subset(&expected) && dup.is_empty(),
        format!("{} entries, duplicates {:?}", entries.len(), dup),
    );
    // an omitted (class type, epsilon) must not occur for any q with that epsilon
    for &(ik, eps) in expected.difference(&keys) {
        let qs: &[i64] = if eps == 1 { &[7, 13, 19, 25] } else { &[5, 11, 17, 23] };
        let mut present = Vec::new();
        for &q in qs {
            if ct.type_exists(ik, q)? {
                present.push(q);
            }
        }
        rep.check(
            format!("sylow ({},{}) e={} absent", ik.0, ik.1, if eps == 1 { 1 } else { 2 }),
            present.is_empty(),
            if present.is_empty() { "no element of this type".to_string() } else { format!("exists for q in {:?}", present) },
        );
    }
    let weyl = ct.weyl;
    for en in &entries {
        let v = ct
            .representative(en.ik)
            .ok_or_else(|| Error::Parse(format!("no representative for {:?}", en.ik)))?;
        let o = generic_order(weyl, &ct.sub(en.ik.0).simple, v)?;
        let e = if en.eps == 1 { 1 } else { 2 };
        let lhs = ell_valuation(&o, 3, e);
        let rhs = rad.order_val(&en.radical)?;
        rep.check(
            format!("sylow ({},{}) e={}", en.ik.0, en.ik.1, e),
            lhs == rhs,
            format!("v3|M| = {}, {} has {}", lhs, en.radical, rhs),
        );
    }
    Ok(rep)
}

pub fn verify_radical(ct: &ClassTypes) -> Result<Report> {
    let rad = Radicals::load()?;
    let mut rep = rad.check_dagger()?;
    rep.extend(check_sylow_joins(ct, &rad)?);
    Ok(rep)
}
