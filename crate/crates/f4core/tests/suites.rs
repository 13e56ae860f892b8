use f4core::extweyl::ExtWeyl;
use f4core::report::Report;
use f4core::suites::{verify_chars, verify_roots, verify_weyl};
use f4core::weyl::Weyl;

fn show(rep: &Report) {
    for c in rep.failures() {
        println!("FAIL {}: {}", c.id, c.detail);
    }
    println!("{} {:?}", rep.suite, rep.summary());
}

#[test]
fn roots_and_weyl() {
    let w = Weyl::build().unwrap();
    let r = verify_roots(&w).unwrap();
    show(&r);
    assert!(r.ok());
    let ew = ExtWeyl::build(w).unwrap();
    let r = verify_weyl(&ew).unwrap();
    show(&r);
    assert!(r.ok());
}

#[test]
fn chars() {
    let r = verify_chars().unwrap();
    show(&r);
    assert!(r.ok());
    assert!(r.checks.iter().any(|c| c.id == "SL3(3) invariants"));
}
