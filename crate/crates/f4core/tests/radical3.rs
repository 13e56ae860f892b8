use f4core::classtypes::ClassTypes;
use f4core::qpoly::Affine;
use f4core::radical3::{normalize_structure, parse_char_type, shape_valuation, verify_radical, Radicals};
use f4core::weyl::Weyl;

#[test]
fn shape_valuations() {
    assert_eq!(shape_valuation("(D1 o3 [3^a]^2).3").unwrap(), Affine::new(4, 1));
    assert_eq!(shape_valuation("[3^a]^4").unwrap(), Affine::new(4, 0));
    assert_eq!(shape_valuation("[3^a]x[3^(a+1)]").unwrap(), Affine::new(2, 1));
    assert_eq!(shape_valuation("3+^(1+4)").unwrap(), Affine::new(0, 5));
    assert_eq!(shape_valuation("[3^a] o3 3+^(1+2)").unwrap(), Affine::new(1, 2));
    assert!(shape_valuation("[3^a").is_err());
}

#[test]
fn char_types() {
    assert_eq!(parse_char_type("3A_6B_12C_8"), Some([6, 12, 8]));
    assert_eq!(parse_char_type("3C"), Some([0, 0, 2]));
    assert_eq!(parse_char_type("(3C^2)_1"), None);
    assert_eq!(normalize_structure("(S3xSL2(3)).2"), normalize_structure("(SL2(3)xS3).2"));
}

#[test]
fn table_entries() {
    let r = Radicals::load().unwrap();
    assert_eq!(r.records.len(), 39);
    assert_eq!(r.get("R2").unwrap().dagger, "R3");
    assert_eq!(r.order_val("R38").unwrap(), Affine::new(4, 2));
    assert_eq!(r.order_val("R18").unwrap(), Affine::new(4, 0));
}

#[test]
fn radical_suite_passes() {
    let w = Weyl::build().unwrap();
    let ct = ClassTypes::new(&w).unwrap();
    let rep = verify_radical(&ct).unwrap();
    for c in rep.failures() {
        println!("{} {}", c.id, c.detail);
    }
    println!("{:?}", rep.summary());
    assert!(rep.ok());
}
