//! Maximal tori: the class table of W against its transcription, and torus
//! structures by Smith normal form.

use std::collections::BTreeMap;

use crate::data::{load_table, Row};
use crate::error::Result;
use crate::qpoly::cyclotomic;
use crate::report::Report;
use crate::snf::primary_decomposition;
use crate::weyl::Weyl;

pub const DEFAULT_Q: [i64; 8] = [2, 3, 4, 5, 7, 8, 11, 13];

/// One cyclic factor `[P_a P_b .. / d]`, possibly containing `d`, repeated `times`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFactor {
    pub cyc: Vec<u32>,
    pub d_num: u32,
    pub d_den: u32,
    pub times: u32,
}

pub fn parse_structure(s: &str) -> Option<Vec<CyclicFactor>> {
    let mut out = Vec::new();
    for part in s.split('x') {
        let part = part.trim();
        let close = part.find(']')?;
        let inner = part.strip_prefix('[')?.get(..close - 1)?;
        let times = match &part[close + 1..] {
            "" => 1,
            rest => rest.strip_prefix('^')?.parse().ok()?,
        };
        let (num, den) = match inner.split_once('/') {
            Some((a, b)) => (a, b),
            None => (inner, ""),
        };
        let d_den = match den {
            "" => 0,
            "d" => 1,
            _ => return None,
        };
        let mut cyc = Vec::new();
        let mut d_num = 0;
        let mut rest = num;
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('d') {
                d_num += 1;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('P') {
                let k = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
                cyc.push(r[..k].parse().ok()?);
                rest = &r[k..];
            } else {
                return None;
            }
        }
        out.push(CyclicFactor { cyc, d_num, d_den, times });
    }
    Some(out)
}

impl CyclicFactor {
    pub fn order(&self, q: i64) -> i128 {
        let d = if q % 2 == 1 { 2 } else { 1 };
        let mut v: i128 = self.cyc.iter().map(|&k| cyclotomic(k).eval(q as i128)).product();
        v *= (d as i128).pow(self.d_num);
        v /= (d as i128).pow(self.d_den);
        v
    }
}

pub fn structure_primary(f: &[CyclicFactor], q: i64) -> BTreeMap<i128, u32> {
    let mut inv = Vec::new();
    for c in f {
        for _ in 0..c.times {
            let o = c.order(q);
            if o > 1 {
                inv.push(o);
            }
        }
    }
    primary_decomposition(&inv)
}

pub fn structure_cyclotomics(f: &[CyclicFactor]) -> Vec<u32> {
    let mut out = Vec::new();
    for c in f {
        for _ in 0..c.times {
            out.extend_from_slice(&c.cyc);
        }
    }
    out.sort_unstable();
    out
}

fn check_row(w: &Weyl, row: &Row, qs: &[i64], rep: &mut Report) -> Result<()> {
    let no: usize = row.parse("no")?;
    let c = w.class(no);
    let id = format!("tori.class{:02}", no);
    let fields = [
        ("order", c.order as usize),
        ("cent", c.centralizer),
        ("p2", c.power2),
        ("p3", c.power3),
        ("dagger", c.dagger),
    ];
    for (col, got) in fields {
        let want: usize = row.parse(col)?;
        rep.check(format!("{}.{}", id, col), got == want, format!("computed {} table {}", got, want));
    }
    let st = parse_structure(row.get("structure")?).ok_or_else(|| row.err("bad structure"))?;
    let cyc = structure_cyclotomics(&st);
    rep.check(format!("{}.charpoly", id), cyc == c.charpoly, format!("computed {:?} table {:?}", c.charpoly, cyc));
    for &q in qs {
        let got = w.torus_primary(c.rep, q);
        let want = structure_primary(&st, q);
        rep.check(
            format!("{}.snf.q{:02}", id, q),
            got == want,
            format!("{:?} {}", w.torus_structure(c.rep, q), row.get("structure")?),
        );
    }
    Ok(())
}

pub fn verify_tori(w: &Weyl, qs: &[i64]) -> Result<Report> {
    let t = load_table("table23.tbl", "tori")?;
    let mut rep = Report::new("tori");
    rep.check("tori.rows", t.rows.len() == 25, format!("{} rows", t.rows.len()));
    for row in &t.rows {
        check_row(w, row, qs, &mut rep)?;
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let f = parse_structure("[d]x[P1P2/d]x[P1P2]").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[1].order(5), 12);
        assert_eq!(parse_structure("[P1]^4").unwrap()[0].times, 4);
        assert!(parse_structure("[Q1]").is_none());
    }
}
