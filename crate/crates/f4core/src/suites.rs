//! Root system, Weyl group and character suites.

use std::collections::BTreeSet;

use crate::blocks::load_all_blocks;
use crate::extweyl::{kernel, ExtWeyl};
use crate::finchar::{catalog, defect_zero_count, is_stored_only, EXPECTED};
use crate::report::Report;
use crate::rootsys::{is_positive, neg};
use crate::weyl::{Weyl, ORDER};
use crate::Result;

pub fn verify_roots(w: &Weyl) -> Result<Report> {
    let rs = &w.rs;
    let mut rep = Report::new("roots");
    let n = rs.coords.len();
    let nlong = rs.long.iter().filter(|&&l| l).count();
    rep.check("root count", n == 48, format!("{} roots", n));
    rep.check("long and short roots", nlong == 24, format!("{} long, {} short", nlong, n - nlong));
    let highest = rs.coords.iter().filter(|c| c.iter().all(|&x| x >= 0)).max_by_key(|c| c.iter().sum::<i32>());
    rep.check("highest root", highest == Some(&[2, 3, 4, 2]), format!("{:?}", highest));
    let dagger_ok = (0..n).all(|a| rs.dagger[rs.dagger[a]] == a && rs.long[a] != rs.long[rs.dagger[a]] && rs.dagger[neg(a)] == neg(rs.dagger[a]));
    rep.check("dagger on roots", dagger_ok, "involution exchanging long and short roots");
    let pos = (0..n).filter(|&a| is_positive(a)).count();
    let signs = (0..n).all(|a| is_positive(a) != is_positive(neg(a)) && rs.coords[neg(a)].iter().zip(&rs.coords[a]).all(|(x, y)| x == &-y));
    rep.check("positive roots", pos == 24 && signs, format!("{} positive", pos));
    let integral = (0..n).all(|a| (0..n).all(|b| rs.pair_roots(a, b).abs() <= 3 && rs.reflect(b, a) < n));
    rep.check("root system axioms", integral, "integral pairings, closed under reflections");
    rep.check("closure of the simple roots", rs.closure(&[0, 1, 2, 3]).len() == 48, "F4");
    let ch = crate::extweyl::Chevalley::build()?;
    let jac = ch.check_jacobi();
    rep.check("Jacobi identity", jac.is_ok(), match jac {
        Ok(k) => format!("{} brackets", k),
        Err(e) => e.to_string(),
    });
    Ok(rep)
}

pub fn verify_weyl(ew: &ExtWeyl) -> Result<Report> {
    let w = &ew.weyl;
    let mut rep = Report::new("weyl");
    let order = w.elements().count();
    rep.check("order of W", order == ORDER, format!("{}", order));
    let cls = w.classes();
    let sum: usize = cls.iter().map(|c| c.size).sum();
    let eq = cls.iter().all(|c| c.size * c.centralizer == ORDER);
    rep.check("class equation", cls.len() == 25 && sum == ORDER && eq, format!("{} classes, sizes sum to {}", cls.len(), sum));
    let dag = cls.iter().all(|c| cls[c.dagger - 1].dagger == c.number);
    let elt = w.elements().all(|x| w.dagger(w.dagger(x)) == x);
    rep.check("dagger on classes", dag && elt, "involution");
    let sample: Vec<_> = w.elements().step_by(37).collect();
    let assoc = sample.iter().all(|&a| sample.iter().all(|&b| {
        let c = w.w0();
        w.mul(w.mul(a, b), c) == w.mul(a, w.mul(b, c)) && w.mul(a, w.inv(a)) == w.identity()
    }));
    rep.check("group axioms", assoc, format!("{} sampled elements", sample.len()));

    let all = ew.enumerate();
    rep.check("order of <n_1,..,n_4>", all.len() == 18432, format!("{}", all.len()));
    let ker = kernel(&all);
    let squares: Vec<_> = (1..=4).map(|i| ew.n_simple(i).pow(2)).collect();
    let gen = ew.generate(&squares);
    let ker_set: BTreeSet<_> = ker.iter().map(|x| x.sign).collect();
    let gen_set: BTreeSet<_> = gen.iter().map(|x| x.sign).collect();
    rep.check("kernel to W", ker.len() == 16 && ker_set == gen_set, format!("order {}, generated by the n_j^2: {}", ker.len(), ker_set == gen_set));
    let g = ew.gamma();
    rep.check("gamma^2 = 1", g.pow(2).is_identity(), format!("order {}", g.order()));
    let comm = (1..=4).all(|i| g.mul(&ew.n_simple(i)) == ew.n_simple(i).mul(&g));
    rep.check("gamma centralizes n_1..n_4", comm, "");
    for i in 1..=4 {
        let ok = ew.n_simple(i).pow(2) == ew.h_minus_one(i - 1);
        rep.check(format!("n_{}^2 = h(alpha_{}(-1))", i, i), ok, "");
    }
    let x = ew.n_simple(3).mul(&ew.n_simple(4).pow(2));
    rep.check("(n_3 n_4^2)^2 = 1", x.pow(2).is_identity(), format!("order {}", x.order()));
    Ok(rep)
}

/// Catalog groups against their expected invariants, character degrees by
/// Dixon's method against the rational oracle, and defect-zero counts.
pub fn verify_chars() -> Result<Report> {
    let mut rep = Report::new("chars");
    let mut names: BTreeSet<String> = EXPECTED.iter().map(|e| e.0.to_string()).collect();
    for b in load_all_blocks()? {
        for r in b.rows {
            if !is_stored_only(&r.out) {
                names.insert(r.out);
            }
        }
    }
    for name in &names {
        let g = catalog(name)?.classes();
        let sizes_ok = g.classes.iter().map(|c| c.size).sum::<usize>() == g.order && g.classes.iter().all(|c| g.order % c.size == 0);
        let d = g.character_degrees()?;
        let deg_ok = d.count() == g.num_classes() && d.sum_of_squares() == g.order as u64 && d.degrees.keys().all(|&k| g.order as u64 % k == 0);
        rep.check(
            format!("{} degrees", name),
            sizes_ok && deg_ok,
            format!("order {}, {} classes, degrees {:?}", g.order, g.num_classes(), d.degrees),
        );
        if let Some(e) = EXPECTED.iter().find(|e| e.0 == name) {
            let ab = g.signature().abelianization_order();
            rep.check(
                format!("{} invariants", name),
                (g.order, g.num_classes(), ab) == (e.1, e.2, e.3),
                format!("({}, {}, {}) vs ({}, {}, {})", g.order, g.num_classes(), ab, e.1, e.2, e.3),
            );
        }
        if g.order <= 200 {
            let r = g.character_degrees_rational()?;
            rep.check(format!("{} Dixon vs rational", name), r == d, format!("{:?}", r.degrees));
        }
    }
    let g = catalog("(Q8xQ8).S3")?.classes();
    let d = g.character_degrees()?;
    let n = defect_zero_count(g.order, &d, 3);
    rep.check("(Q8xQ8).S3 extension", n == 11, format!("{} characters of 3-defect zero", n));
    Ok(rep)
}
