//! Integer polynomials in q, cyclotomic factorization, generic orders via the
//! twisted Molien series, and l-adic valuations as affine functions of a.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Coefficients, lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly(pub Vec<i128>);

impl QPoly {
    pub fn new(mut c: Vec<i128>) -> QPoly {
        while c.last() == Some(&0) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn one() -> QPoly {
        QPoly(vec![1])
    }

    pub fn monomial(k: usize) -> QPoly {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        QPoly(c)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly(vec![]);
        }
        let mut c = vec![0i128; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n)
            .map(|i| self.0.get(i).copied().unwrap_or(0) - o.0.get(i).copied().unwrap_or(0))
            .collect();
        QPoly::new(c)
    }

    /// Exact division by a monic polynomial; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let dd = d.degree()?;
        assert_eq!(d.0[dd], 1, "divisor must be monic");
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return if self.is_zero() { Some(QPoly(vec![])) } else { None };
        }
        let mut quot = vec![0i128; r.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = r[k + dd];
            quot[k] = c;
            if c != 0 {
                for (j, b) in d.0.iter().enumerate() {
                    r[k + j] -= c * b;
                }
            }
        }
        if r.iter().any(|&x| x != 0) {
            None
        } else {
            Some(QPoly::new(quot))
        }
    }

    pub fn eval(&self, q: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn eval_big(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.0.iter().rev().fold(BigInt::from(0), |acc, &c| acc * &q + BigInt::from(c))
    }
}

pub fn cyclotomic(d: u32) -> QPoly {
    // q^d - 1 = prod_{k | d} Phi_k
    let mut p = QPoly::monomial(d as usize).sub(&QPoly::one());
    for k in 1..d {
        if d % k == 0 {
            p = p.div_exact(&cyclotomic(k)).expect("cyclotomic division");
        }
    }
    p
}

/// A sign, a power of q, and a multiset of cyclotomic factors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycFactored {
    pub sign: i32,
    pub q_power: u32,
    pub factors: BTreeMap<u32, u32>,
}

impl CycFactored {
    pub fn from_indices(q_power: u32, idx: &[u32]) -> CycFactored {
        let mut factors = BTreeMap::new();
        for &d in idx {
            *factors.entry(d).or_insert(0) += 1;
        }
        CycFactored { sign: 1, q_power, factors }
    }

    pub fn expand(&self) -> QPoly {
        let mut p = QPoly::monomial(self.q_power as usize);
        for (&d, &m) in &self.factors {
            for _ in 0..m {
                p = p.mul(&cyclotomic(d));
            }
        }
        if self.sign < 0 {
            p = QPoly::new(p.0.iter().map(|c| -c).collect());
        }
        p
    }

    pub fn indices(&self) -> Vec<u32> {
        let mut v = Vec::new();
        for (&d, &m) in &self.factors {
            for _ in 0..m {
                v.push(d);
            }
        }
        v
    }

    pub fn eval_big(&self, q: i64) -> BigInt {
        let mut x = BigInt::from(q).pow(self.q_power);
        for (&d, &m) in &self.factors {
            let f = cyclotomic(d).eval_big(q);
            for _ in 0..m {
                x *= &f;
            }
        }
        if self.sign < 0 {
            -x
        } else {
            x
        }
    }

    /// Whether every factor of `self` occurs in `o` with at least the same multiplicity.
    pub fn divides(&self, o: &CycFactored) -> bool {
        self.q_power <= o.q_power
            && self.factors.iter().all(|(d, m)| o.factors.get(d).map_or(false, |n| n >= m))
    }
}

impl fmt::Display for CycFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.sign < 0 {
            parts.push("-1".to_string());
        }
        if self.q_power > 0 {
            parts.push(format!("q^{}", self.q_power));
        }
        for (&d, &m) in &self.factors {
            if m == 1 {
                parts.push(format!("P{}", d));
            } else {
                parts.push(format!("P{}^{}", d, m));
            }
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Factor `p` as +-q^k times cyclotomic polynomials.
pub fn factor_cyclotomic(p: &QPoly) -> Result<CycFactored> {
    if p.is_zero() {
        return Err(Error::NonCyclotomicFactor("0".into()));
    }
    let k = p.0.iter().position(|&c| c != 0).unwrap();
    let mut rest = QPoly::new(p.0[k..].to_vec());
    let lead = *rest.0.last().unwrap();
    let sign = match lead {
        1 => 1,
        -1 => {
            rest = QPoly::new(rest.0.iter().map(|c| -c).collect());
            -1
        }
        _ => return Err(Error::NonCyclotomicFactor(format!("{:?}", p.0))),
    };
    let mut factors = BTreeMap::new();
    // a cyclotomic factor of a degree-n polynomial has phi(d) <= n, hence d <= 2n^2 suffices
    let n = rest.degree().unwrap_or(0);
    let bound = (2 * n * n + 2) as u32;
    let mut d = 1;
    while rest.degree().unwrap_or(0) > 0 && d <= bound {
        let c = cyclotomic(d);
        if let Some(qt) = rest.div_exact(&c) {
            rest = qt;
            *factors.entry(d).or_insert(0) += 1;
            continue;
        }
        d += 1;
    }
    if rest != QPoly::one() {
        return Err(Error::NonCyclotomicFactor(format!("{:?}", p.0)));
    }
    Ok(CycFactored { sign, q_power: k as u32, factors })
}

/// Characteristic polynomial det(x - M) of a 4x4 integer matrix.
pub fn charpoly4(m: &[[i32; 4]; 4]) -> QPoly {
    // Faddeev-LeVerrier with exact integer division
    let n = 4;
    let a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut mk = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for l in 0..n {
                    s += a[i][l] * mk[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        mk = next;
        let mut tr = 0;
        for i in 0..n {
            for l in 0..n {
                tr += a[i][l] * mk[l][i];
            }
        }
        assert_eq!(tr % k as i128, 0);
        c[n - k] = -tr / k as i128;
    }
    QPoly::new(c)
}

/// `det(1 - t M)` for a 4x4 integer matrix, as a polynomial in t.
pub fn det_one_minus_t(m: &[[i32; 4]; 4]) -> QPoly {
    let mut c = charpoly4(m).0;
    c.resize(5, 0);
    c.reverse();
    QPoly::new(c)
}

/// Inverse of a power series with constant term 1, truncated below `len`.
pub fn series_inverse(p: &[i128], len: usize) -> Vec<i128> {
    assert_eq!(p[0], 1);
    let mut out = vec![0i128; len];
    out[0] = 1;
    for n in 1..len {
        let mut s = 0;
        for k in 1..=n.min(p.len() - 1) {
            s += p[k] * out[n - k];
        }
        out[n] = -s;
    }
    out
}

/// Generic order of a twisted reductive subgroup from the coset `W_Gamma v`.
///
/// `coset` lists the matrices of all elements `u v`, `u` in the reflection
/// group; `nreflections` is the number of positive roots of the subsystem.
pub fn generic_order_from_coset(coset: &[[[i32; 4]; 4]], nreflections: u32) -> Result<CycFactored> {
    let dsum = nreflections as usize + 4;
    let len = dsum + 12;
    let mut acc = vec![0i128; len];
    for m in coset {
        let inv = series_inverse(&det_one_minus_t(m).0, len);
        for (a, b) in acc.iter_mut().zip(inv) {
            *a += b;
        }
    }
    let n = coset.len() as i128;
    let mut series = Vec::with_capacity(len);
    for a in acc {
        if a % n != 0 {
            return Err(Error::MolienExtractionFailure("non-integral Molien coefficient".into()));
        }
        series.push(a / n);
    }
    let recip = series_inverse(&series, len);
    if recip[dsum + 1..].iter().any(|&c| c != 0) {
        return Err(Error::MolienExtractionFailure(format!(
            "reciprocal series is not a polynomial of degree {}",
            dsum
        )));
    }
    let mut rev: Vec<i128> = recip[..=dsum].to_vec();
    rev.reverse();
    let mut f = factor_cyclotomic(&QPoly::new(rev))?;
    if f.sign < 0 {
        return Err(Error::MolienExtractionFailure("negative leading term".into()));
    }
    f.q_power += nreflections;
    Ok(f)
}

/// `c * a + c0` for an integer parameter a.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub c: i64,
    pub c0: i64,
}

impl Affine {
    pub fn new(c: i64, c0: i64) -> Affine {
        Affine { c, c0 }
    }

    pub fn at(&self, a: i64) -> i64 {
        self.c * a + self.c0
    }

    pub fn parse(s: &str) -> Result<Affine> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut c = 0i64;
        let mut c0 = 0i64;
        let mut term = String::new();
        let mut flush = |t: &str| -> Result<()> {
            if t.is_empty() || t == "+" || t == "-" {
                return if t.is_empty() { Ok(()) } else { Err(Error::Parse(format!("affine '{}'", s))) };
            }
            if let Some(k) = t.strip_suffix('a') {
                let v = match k {
                    "" | "+" => 1,
                    "-" => -1,
                    _ => k.parse::<i64>().map_err(|_| Error::Parse(format!("affine '{}'", s)))?,
                };
                c += v;
            } else {
                c0 += t.parse::<i64>().map_err(|_| Error::Parse(format!("affine '{}'", s)))?;
            }
            Ok(())
        };
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !term.is_empty() {
                flush(&term)?;
                term.clear();
            }
            term.push(ch);
        }
        flush(&term)?;
        Ok(Affine { c, c0 })
    }
}

impl std::ops::Add for Affine {
    type Output = Affine;
    fn add(self, o: Affine) -> Affine {
        Affine { c: self.c + o.c, c0: self.c0 + o.c0 }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c, self.c0) {
            (0, k) => write!(f, "{}", k),
            (c, 0) => write!(f, "{}a", if c == 1 { String::new() } else { c.to_string() }),
            (c, k) => write!(
                f,
                "{}a{}{}",
                if c == 1 { String::new() } else { c.to_string() },
                if k > 0 { "+" } else { "-" },
                k.abs()
            ),
        }
    }
}

/// l-adic valuation of a cyclotomic product where l^a exactly divides Phi_e(q):
/// v(Phi_e) = a, v(Phi_{e l^i}) = 1 for i >= 1, and 0 otherwise.
pub fn ell_valuation(ord: &CycFactored, ell: u32, e: u32) -> Affine {
    let mut out = Affine::new(0, 0);
    for (&d, &m) in &ord.factors {
        let m = m as i64;
        if d == e {
            out.c += m;
        } else if d % e == 0 {
            let mut r = d / e;
            while r % ell == 0 {
                r /= ell;
            }
            if r == 1 {
                out.c0 += m;
            }
        }
    }
    out
}

/// Multiplicative order of q modulo l.
pub fn order_mod(q: u64, ell: u64) -> u32 {
    let q = q % ell;
    assert!(q != 0);
    let mut x = q;
    let mut k = 1;
    while x != 1 {
        x = x * q % ell;
        k += 1;
    }
    k
}

pub fn valuation_int(mut n: BigInt, ell: u32) -> i64 {
    let zero = BigInt::from(0);
    assert!(n != zero);
    let l = BigInt::from(ell);
    let mut v = 0;
    while (&n % &l) == zero {
        n /= &l;
        v += 1;
    }
    v
}

/// The exponent a with l^a exactly dividing Phi_e(q).
pub fn a_param(q: i64, ell: u32, e: u32) -> i64 {
    valuation_int(cyclotomic(e).eval_big(q), ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).0, vec![-1, 1]);
        assert_eq!(cyclotomic(12).0, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic(8).0, vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic(6).0, vec![1, -1, 1]);
    }

    #[test]
    fn factor_roundtrip() {
        let p = cyclotomic(1).mul(&cyclotomic(1)).mul(&cyclotomic(2)).mul(&cyclotomic(2));
        let f = factor_cyclotomic(&p).unwrap();
        assert_eq!(f.indices(), vec![1, 1, 2, 2]);
        assert_eq!(f.expand(), p);
        assert!(factor_cyclotomic(&QPoly::new(vec![1, 1, 1, 1, 1, 0, 1])).is_err());
    }

    #[test]
    fn affine_parse() {
        assert_eq!(Affine::parse("4a+2").unwrap(), Affine::new(4, 2));
        assert_eq!(Affine::parse("a").unwrap(), Affine::new(1, 0));
        assert_eq!(Affine::parse("2").unwrap(), Affine::new(0, 2));
        assert_eq!(Affine::parse("2a-1").unwrap(), Affine::new(2, -1));
        assert_eq!(Affine::new(4, 2).to_string(), "4a+2");
    }

    #[test]
    fn valuation_rule() {
        let g = CycFactored::from_indices(24, &[1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 6, 6, 8, 12]);
        assert_eq!(ell_valuation(&g, 3, 1), Affine::new(4, 2));
        assert_eq!(ell_valuation(&g, 3, 2), Affine::new(4, 2));
        let p12 = CycFactored::from_indices(0, &[12]);
        assert_eq!(ell_valuation(&p12, 3, 1), Affine::new(0, 0));
    }
}
