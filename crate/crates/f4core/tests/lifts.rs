use std::collections::HashSet;

use f4core::classtypes::ClassTypes;
use f4core::extweyl::{kernel, ExtElt, ExtWeyl};
use f4core::lifts::{centralizes_roots, Lifts};
use f4core::report::Status;
use f4core::weyl::Weyl;

fn setup() -> ExtWeyl {
    ExtWeyl::build(Weyl::build().unwrap()).unwrap()
}

#[test]
fn row_12_kernel_is_generated_by_two_squares() {
    let ew = setup();
    let ct = ClassTypes::new(&ew.weyl).unwrap();
    let lifts = Lifts::new(&ew, &ct).unwrap();
    let row = lifts.rows.iter().find(|r| r.i == 12 && r.ks.is_none()).unwrap();
    let c0 = lifts.c0(row).unwrap();
    let group = ew.generate(&c0);
    let ker: HashSet<ExtElt> = kernel(&group).into_iter().collect();
    let sq = |j: usize| ew.n_root(j - 1).mul(&ew.n_root(j - 1));
    let expected: HashSet<ExtElt> = ew.generate(&[sq(1), sq(21)]).into_iter().collect();
    assert_eq!(ker, expected);
    assert_eq!(ker.len(), 4);
}

#[test]
fn n3_n4_squared_is_an_involution() {
    let ew = setup();
    let x = ew.n_simple(3).mul(&ew.n_simple(4).pow(2));
    assert!(x.mul(&x).is_identity());
}

#[test]
fn row_6_passes_every_clause() {
    let ew = setup();
    let ct = ClassTypes::new(&ew.weyl).unwrap();
    let lifts = Lifts::new(&ew, &ct).unwrap();
    let rep = lifts.verify().unwrap();
    let row6: Vec<_> = rep.checks.iter().filter(|c| c.id.starts_with("lift I i=6 ")).collect();
    assert!(row6.len() >= 5);
    assert!(row6.iter().all(|c| c.status == Status::Pass), "{:?}", row6);
}

#[test]
fn listed_generators_centralize_delta() {
    let ew = setup();
    let ct = ClassTypes::new(&ew.weyl).unwrap();
    let lifts = Lifts::new(&ew, &ct).unwrap();
    assert_eq!(lifts.rows.len(), 24);
    for row in &lifts.rows {
        for g in lifts.c0(row).unwrap() {
            assert!(centralizes_roots(&g, &row.delta), "{}", row.id());
        }
    }
}

#[test]
fn vdot_failures_are_the_four_w0_types() {
    let ew = setup();
    let ct = ClassTypes::new(&ew.weyl).unwrap();
    let rep = Lifts::new(&ew, &ct).unwrap().verify().unwrap();
    let failed: Vec<&str> = rep.failures().map(|c| c.id.as_str()).collect();
    assert_eq!(
        failed,
        vec![
            "lift II i=13 k=4|5 vdot in [M0,M0]",
            "lift II i=17 k=4|5 vdot in [M0,M0]",
            "lift II i=18 k=3|7 vdot in [M0,M0]",
            "lift II i=19 k=8|9 vdot in [M0,M0]",
        ]
    );
}
