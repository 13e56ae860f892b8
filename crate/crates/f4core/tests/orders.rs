use f4core::classtypes::ClassTypes;
use f4core::orders::{center_order, f4_order, generic_order, verify_orders};
use f4core::qpoly::CycFactored;
use f4core::weyl::Weyl;

#[test]
fn full_group_order() {
    let w = Weyl::build().unwrap();
    let all: Vec<usize> = (0..4).collect();
    assert_eq!(generic_order(&w, &all, w.identity()).unwrap(), f4_order());
}

#[test]
fn class_9_torus_is_phi3_squared() {
    let w = Weyl::build().unwrap();
    let o = generic_order(&w, &[], w.class(9).rep).unwrap();
    assert_eq!(o, CycFactored::from_indices(0, &[3, 3]));
}

#[test]
fn b4_order() {
    let w = Weyl::build().unwrap();
    let ct = ClassTypes::new(&w).unwrap();
    let o = generic_order(&w, &ct.sub(2).simple, w.identity()).unwrap();
    assert_eq!(o, CycFactored::from_indices(16, &[1, 1, 1, 1, 2, 2, 2, 2, 3, 4, 4, 6, 8]));
}

#[test]
fn small_centers() {
    let w = Weyl::build().unwrap();
    let ct = ClassTypes::new(&w).unwrap();
    let z6: i128 = center_order(&w, &ct.sub(6).simple, w.identity(), 7).iter().product();
    let z3: i128 = center_order(&w, &ct.sub(3).simple, w.identity(), 5).iter().product();
    assert_eq!((z6, z3), (6, 4));
    assert_eq!(center_order(&w, &[], w.identity(), 5), vec![4, 4, 4, 4]);
}

#[test]
fn orders_suite_passes() {
    let w = Weyl::build().unwrap();
    let ct = ClassTypes::new(&w).unwrap();
    let r = verify_orders(&ct).unwrap();
    for c in r.failures() {
        println!("{} {}", c.id, c.detail);
    }
    assert!(r.ok(), "{:?}", r.summary());
}
