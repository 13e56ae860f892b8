use std::sync::OnceLock;

use f4core::extweyl::{ExtElt, ExtWeyl};
use f4core::finchar::{catalog, cyclic, dihedral, symmetric, PermGroup};
use f4core::rootsys::{neg, NROOTS};
use f4core::weyl::{WElt, Weyl, ORDER};
use proptest::prelude::*;

fn ew() -> &'static ExtWeyl {
    static EW: OnceLock<ExtWeyl> = OnceLock::new();
    EW.get_or_init(|| ExtWeyl::build(Weyl::build().unwrap()).unwrap())
}

fn elt() -> impl Strategy<Value = WElt> {
    (0..ORDER).prop_map(|x| x as WElt)
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=4usize, 0..24)
}

fn lift(w: &[usize]) -> ExtElt {
    w.iter().fold(ExtElt::identity(), |x, &i| x.mul(&ew().n_simple(i)))
}

fn small_group() -> impl Strategy<Value = PermGroup> {
    prop_oneof![
        (1..=24usize).prop_map(cyclic),
        (2..=24usize).prop_map(|n| dihedral(2 * n)),
        (2..=5usize).prop_map(symmetric),
        prop::sample::select(vec!["Q8", "SL2(3)", "GL2(3)", "D8", "SL2(3)x3", "[4]^2.2", "2xS3", "S3xS3", "Q8x3"])
            .prop_map(|n| catalog(n).unwrap()),
        ((1..=8usize), (1..=6usize)).prop_map(|(a, b)| PermGroup::product(&[cyclic(a), dihedral(2 * b)])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_group_axioms(a in elt(), b in elt(), c in elt()) {
        let w = &ew().weyl;
        prop_assert_eq!(w.mul(w.mul(a, b), c), w.mul(a, w.mul(b, c)));
        prop_assert_eq!(w.mul(a, w.identity()), a);
        prop_assert_eq!(w.mul(a, w.inv(a)), w.identity());
        for r in 0..NROOTS {
            prop_assert_eq!(w.apply(w.mul(a, b), r), w.apply(b, w.apply(a, r)));
            prop_assert_eq!(w.apply(a, neg(r)), neg(w.apply(a, r)));
        }
    }

    #[test]
    fn classes_are_conjugation_invariant(a in elt(), g in elt()) {
        let w = &ew().weyl;
        let c = w.class(w.class_of(a));
        prop_assert_eq!(w.class_of(w.conj(a, g)), c.number);
        prop_assert_eq!(w.order(a), c.order);
        prop_assert_eq!(w.charpoly_cyc(a), w.charpoly_cyc(c.rep));
    }

    #[test]
    fn dagger_is_an_involutive_automorphism(a in elt(), b in elt()) {
        let w = &ew().weyl;
        prop_assert_eq!(w.dagger(w.dagger(a)), a);
        prop_assert_eq!(w.dagger(w.mul(a, b)), w.mul(w.dagger(a), w.dagger(b)));
        prop_assert_eq!(w.class_of(w.dagger(a)), w.class(w.class_of(a)).dagger);
    }

    #[test]
    fn reflections(a in 0..NROOTS, b in 0..NROOTS) {
        let rs = &ew().weyl.rs;
        prop_assert_eq!(rs.reflect(a, rs.reflect(a, b)), b);
        prop_assert_eq!(rs.reflect(a, a), neg(a));
        prop_assert_eq!(rs.ip2(rs.dagger[a], rs.dagger[b]).signum(), rs.ip2(a, b).signum());
    }

    #[test]
    fn extended_group_axioms(x in word(), y in word(), z in word()) {
        let (x, y, z) = (lift(&x), lift(&y), lift(&z));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inv()).is_identity());
        prop_assert_eq!(ew().project(&x.mul(&y)), ew().weyl.mul(ew().project(&x), ew().project(&y)));
        prop_assert!(x.pow(x.order() as i64).is_identity());
        prop_assert_eq!(ew().gamma().mul(&x), x.mul(&ew().gamma()));
    }

    #[test]
    fn dixon_agrees_with_rational_oracle(g in small_group()) {
        prop_assume!(g.order() <= 200);
        let d = g.classes();
        prop_assume!(d.num_classes() <= 16);
        prop_assert_eq!(d.classes.iter().map(|c| c.size).sum::<usize>(), d.order);
        let dixon = d.character_degrees().unwrap();
        prop_assert_eq!(dixon.sum_of_squares(), d.order as u64);
        prop_assert_eq!(dixon.count(), d.num_classes());
        prop_assert_eq!(dixon, d.character_degrees_rational().unwrap());
    }
}
