use f4core::blocks::{load_all_blocks, unipotent_char_count, verify_alperin, verify_blocks, verify_sigma, Defect, EllScope};
use f4core::classtypes::ClassTypes;
use f4core::qpoly::Affine;
use f4core::report::Report;
use f4core::weyl::Weyl;

fn show(rep: &Report) {
    for c in rep.failures() {
        println!("FAIL {}: {}", c.id, c.detail);
    }
    println!("{} {:?}", rep.suite, rep.summary());
}

#[test]
fn unipotent_counts() {
    assert_eq!(unipotent_char_count("F4").unwrap(), 37);
    assert_eq!(unipotent_char_count("B2").unwrap(), 6);
    assert_eq!(unipotent_char_count("B3").unwrap(), 12);
    assert_eq!(unipotent_char_count("B4").unwrap(), 25);
    assert_eq!(unipotent_char_count("C3").unwrap(), 12);
    assert_eq!(unipotent_char_count("A2xA2~").unwrap(), 9);
    assert!(unipotent_char_count("E6").is_err());
}

#[test]
fn table_rows() {
    let b = load_all_blocks().unwrap();
    let p = b.iter().find(|b| b.id == "1.1").unwrap();
    assert_eq!((p.lb, p.db), (26, Affine::new(4, 2)));
    assert_eq!((p.weight_sum(1), p.weight_sum(2)), (26, 26));
    let t = b.iter().find(|b| b.id == "13.8").unwrap();
    assert_eq!(t.db, Affine::new(2, 2));
    assert!(matches!(&t.defect, Defect::Pointer(p) if p[0] == (17, 5)));
    assert_eq!(t.rows.iter().map(|r| (r.radical.as_str(), r.w)).collect::<Vec<_>>(), [("R29", 2), ("R19", 1)]);
    let c = b.iter().find(|b| b.id == "21.4").unwrap();
    assert_eq!((c.ell, c.lb, c.rows[0].w), (EllScope::Exact(5), 16, 16));
    assert_eq!(c.rows[0].nr.as_deref(), Some("2xSL2(3):[4]"));
}

#[test]
fn suites() {
    let w = Weyl::build().unwrap();
    let ct = ClassTypes::new(&w).unwrap();
    let rep = verify_blocks(&ct).unwrap();
    show(&rep);
    let sig = verify_sigma(&ct).unwrap();
    show(&sig);
    let alp = verify_alperin(&load_all_blocks().unwrap()).unwrap();
    show(&alp);
}
