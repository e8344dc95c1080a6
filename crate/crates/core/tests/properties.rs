mod common;

use derlog_core::*;
use proptest::prelude::*;

fn assert_ok(outcome: common::Outcome) {
    if let Err(e) = outcome {
        panic!("{e}");
    }
}

#[test]
fn groebner_bases_are_idempotent_and_certified() {
    assert_ok(common::groebner_properties(11, 200));
}

#[test]
fn syzygies_are_relations() {
    assert_ok(common::syzygy_soundness(12, 60, false));
}

#[test]
fn derlog_modules_are_bracket_closed() {
    assert_ok(common::derlog_bracket_closure(false));
}

#[test]
fn gradient_of_applied_field_uses_linear_part() {
    assert_ok(common::linear_part_identity(13, 100));
}

#[test]
fn adjugate_trace_is_derivative_of_determinant() {
    assert_ok(common::jacobi_formula(14, 100));
}

#[test]
fn fitting_ideals_ignore_redundant_generators() {
    assert_ok(common::fitting_well_defined(15, false));
}

#[test]
fn lie_bracket_identities() {
    assert_ok(common::bracket_identities(16, 50));
}

fn ring3() -> Ring {
    Ring::parse("x,y,z").unwrap()
}

prop_compose! {
    fn poly_text()(terms in prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3, 0u32..3), 1..4)) -> String {
        terms
            .iter()
            .map(|(c, a, b, d)| format!("({c})*x^{a}*y^{b}*z^{d}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_round_trips(text in poly_text()) {
        let r = ring3();
        let p = parse_poly(&text, &r).unwrap();
        let q = parse_poly(&p.to_string(), &r).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn ring_axioms(a in poly_text(), b in poly_text(), c in poly_text()) {
        let r = ring3();
        let (a, b, c) = (parse_poly(&a, &r).unwrap(), parse_poly(&b, &r).unwrap(), parse_poly(&c, &r).unwrap());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn products_lie_in_both_ideals_intersection(a in poly_text(), b in poly_text()) {
        let r = ring3();
        let (a, b) = (parse_poly(&a, &r).unwrap(), parse_poly(&b, &r).unwrap());
        prop_assume!(!a.is_zero() && !b.is_zero());
        let i = Ideal::principal(&a);
        let j = Ideal::principal(&b);
        let meet = i.intersect(&j).unwrap();
        prop_assert!(meet.member(&(&a * &b)).unwrap());
        prop_assert!(i.contains(&meet).unwrap() && j.contains(&meet).unwrap());
        prop_assert!(meet.contains(&i.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn gcd_divides_both(a in poly_text(), b in poly_text()) {
        let r = ring3();
        let (a, b) = (parse_poly(&a, &r).unwrap(), parse_poly(&b, &r).unwrap());
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = gcd_poly(&a, &b).unwrap();
        prop_assert!(a.div_exact(&g).unwrap().is_some());
        prop_assert!(b.div_exact(&g).unwrap().is_some());
    }

    #[test]
    fn squarefree_part_is_reduced(a in poly_text()) {
        let r = ring3();
        let a = parse_poly(&a, &r).unwrap();
        prop_assume!(!a.is_constant());
        let s = squarefree_part(&a).unwrap();
        prop_assert!(is_reduced(&s).unwrap());
        prop_assert!(squarefree_part(&(&a * &a)).unwrap().is_associate(&s));
    }
}
