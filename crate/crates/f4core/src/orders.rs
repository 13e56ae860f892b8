//! Generic orders of twisted subgroups and orders of their centers.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::classtypes::ClassTypes;
use crate::qpoly::{a_param, ell_valuation, generic_order_from_coset, order_mod, valuation_int, Affine, CycFactored};
use crate::report::Report;
use crate::rootsys::is_positive;
use crate::snf::{snf, IMat};
use crate::weyl::{WElt, Weyl};
use crate::Result;

/// `|Phi_1|^4 ... ` exponents of the order of F4(q), with `q^24`.
pub const F4_ORDER: (u32, &[u32]) = (24, &[1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 6, 6, 8, 12]);

pub const SAMPLE_Q: [i64; 8] = [2, 3, 4, 5, 7, 8, 11, 13];

/// Generic order of the twisted subgroup attached to the coset `W_Gamma v`,
/// `gamma` any set of roots generating the subsystem.
pub fn generic_order(weyl: &Weyl, gamma: &[usize], v: WElt) -> Result<CycFactored> {
    let closure = weyl.rs.closure(gamma);
    let npos = closure.iter().filter(|&&r| is_positive(r)).count() as u32;
    let group = if gamma.is_empty() { vec![weyl.identity()] } else { weyl.reflection_subgroup(gamma) };
    let coset: Vec<_> = group.iter().map(|&u| weyl.mat(weyl.mul(u, v))).collect();
    generic_order_from_coset(&coset, npos)
}

/// Invariant factors (those > 1) of the group of F-fixed points of the center
/// of the Levi subgroup of `gamma`, twisted by `v`.
pub fn center_order(weyl: &Weyl, gamma: &[usize], v: WElt, q: i64) -> Vec<i128> {
    let m = weyl.mat(v);
    let mut a: IMat = (0..4)
        .map(|i| (0..4).map(|j| q as i128 * m[i][j] as i128 - (i == j) as i128).collect())
        .collect();
    for &r in gamma {
        let c = weyl.rs.coords[r];
        for i in 0..4 {
            a[i].push(c[i] as i128);
        }
    }
    snf(&a).diag.into_iter().filter(|&x| x != 1).collect()
}

pub fn f4_order() -> CycFactored {
    CycFactored::from_indices(F4_ORDER.0, F4_ORDER.1)
}

pub fn verify_orders(ct: &ClassTypes) -> Result<Report> {
    let weyl = ct.weyl;
    let mut rep = Report::new("orders");
    let all: Vec<usize> = (0..4).collect();
    let g = generic_order(weyl, &all, weyl.identity())?;
    let want = f4_order();
    rep.check("order of F4", g == want, format!("{}", g));
    for e in [1, 2] {
        let v = ell_valuation(&g, 3, e);
        rep.check(format!("3-valuation of |G|, e={}", e), v == Affine::new(4, 2), format!("{}", v));
    }
    let b4 = generic_order(weyl, &ct.sub(2).simple, weyl.identity())?;
    let v = ell_valuation(&b4, 3, 1);
    rep.check("3-valuation of |M_2,1|, e=1", v == Affine::new(4, 1), format!("{} for {}", v, b4));

    for c in weyl.classes() {
        let t = generic_order(weyl, &[], c.rep)?;
        let cp = weyl.charpoly_cyc(c.rep);
        rep.check(format!("torus order class {}", c.number), t.indices() == cp && t.q_power == 0, format!("{}", t));
    }

    let zero = BigInt::zero();
    for ik in ct.class_types() {
        let v = ct.representative(ik).expect("class type representative");
        let sub = ct.sub(ik.0);
        let o = generic_order(weyl, &sub.simple, v)?;
        let mut bad = Vec::new();
        for q in SAMPLE_Q {
            let n = o.eval_big(q);
            if n.is_zero() || want.eval_big(q) % &n != zero {
                bad.push(format!("q={} does not divide", q));
                continue;
            }
            for ell in [3u32, 5, 7, 13] {
                if q % ell as i64 == 0 {
                    continue;
                }
                let e = order_mod(q as u64, ell as u64);
                let a = a_param(q, ell, e);
                let predicted = ell_valuation(&o, ell, e).at(a);
                let actual = valuation_int(n.clone(), ell);
                if predicted != actual {
                    bad.push(format!("q={} l={}: {} vs {}", q, ell, predicted, actual));
                }
            }
            let z: i128 = center_order(weyl, &sub.simple, v, q).iter().product();
            if z == 0 || n.clone() % BigInt::from(z) != zero {
                bad.push(format!("q={} center order {} does not divide", q, z));
            }
        }
        let detail = if bad.is_empty() { format!("{}", o) } else { bad.join("; ") };
        rep.check(format!("order ({},{})", ik.0, ik.1), bad.is_empty(), detail);
    }
    Ok(rep)
}
