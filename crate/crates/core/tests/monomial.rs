use std::cmp::Ordering;
use derlog_core::*;

#[test]
fn degrevlex_ties_prefer_smaller_last_exponent() {
    // x*z < y^2 in degrevlex with x > y > z
    let xz = Monomial::from_exponents(&[1, 0, 1]);
    let yy = Monomial::from_exponents(&[0, 2, 0]);
    assert_eq!(xz.cmp_by(&yy, MonomialOrder::DegRevLex, 3), Ordering::Less);
    assert_eq!(xz.cmp_by(&yy, MonomialOrder::Lex, 3), Ordering::Greater);
}

#[test]
fn block_order_eliminates_prefix() {
    let t = Monomial::from_exponents(&[1, 0]);
    let x5 = Monomial::from_exponents(&[0, 5]);
    assert_eq!(t.cmp_by(&x5, MonomialOrder::Block(1), 2), Ordering::Greater);
}

#[test]
fn divisibility_and_quotients() {
    let a = Monomial::from_exponents(&[2, 1]);
    let b = Monomial::from_exponents(&[1, 1]);
    assert!(b.divides(&a));
    assert!(!a.divides(&b));
    assert_eq!(a.div(&b), Some(Monomial::from_exponents(&[1, 0])));
    assert_eq!(a.lcm(&Monomial::from_exponents(&[0, 3])).degree(), 5);
}
