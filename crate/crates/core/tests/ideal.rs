use derlog_core::*;

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn id(r: &Ring, s: &str) -> Ideal {
    Ideal::parse(s, r).unwrap()
}

fn p(r: &Ring, s: &str) -> Poly {
    parse_poly(s, r).unwrap()
}

#[test]
fn membership_and_equality() {
    let r = ring("x,y,z,w");
    assert!(id(&r, "x").member(&p(&r, "x^2")).unwrap());
    assert!(id(&r, "x,y").equals(&id(&r, "y, x+y")).unwrap());
    assert!(Ideal::maximal(&r).power(2).contains(&id(&r, "x*w-y*z")).unwrap());
}

#[test]
fn intersections() {
    let r = ring("x,y,z,w");
    assert!(id(&r, "x").intersect(&id(&r, "y")).unwrap().equals(&id(&r, "x*y")).unwrap());
    assert!(id(&r, "x").intersect(&id(&r, "x")).unwrap().equals(&id(&r, "x")).unwrap());
    let f = id(&r, "x*w-y*z");
    let m4 = Ideal::maximal(&r).power(4);
    let meet = f.intersect(&m4).unwrap();
    // (f) ∩ m^4 = f * m^2 for a quadric
    assert!(meet.equals(&f.product(&Ideal::maximal(&r).power(2)).unwrap()).unwrap());
}

#[test]
fn quotients_and_saturation() {
    let r = ring("x,y");
    assert!(id(&r, "x^2").quotient(&id(&r, "x")).unwrap().equals(&id(&r, "x")).unwrap());
    assert!(id(&r, "x*y").quotient(&id(&r, "y")).unwrap().equals(&id(&r, "x")).unwrap());
    let sat = id(&r, "x^2*y, x*y^2").saturate(&id(&r, "x,y")).unwrap();
    assert!(sat.equals(&id(&r, "x*y")).unwrap());
    assert!(id(&r, "x").saturate(&Ideal::zero(&r)).is_err());
}

#[test]
fn elimination() {
    let r = Ring::new(&["t", "x", "y"], MonomialOrder::Block(1)).unwrap();
    let e = eliminate(&id(&r, "t - x^2, t - y"), 1).unwrap();
    let sub = ring("x,y");
    assert!(e.equals(&id(&sub, "y - x^2")).unwrap());
    let e2 = eliminate(&id(&r, "t*x, t - 1"), 1).unwrap();
    assert!(e2.equals(&id(&sub, "x")).unwrap());
    let bad = ring("t,x,y");
    assert!(matches!(eliminate(&id(&bad, "t"), 1), Err(Error::WrongOrder(_))));
}

#[test]
fn radicals() {
    let r = ring("x,y");
    assert!(id(&r, "x^2").radical_member(&p(&r, "x")).unwrap());
    assert!(!id(&r, "x^2").radical_member(&p(&r, "y")).unwrap());
    assert!(id(&r, "x^2, y^3").radical_equal(&id(&r, "x, y")).unwrap());
}

#[test]
fn dimensions() {
    let r4 = ring("x,y,z,w");
    assert_eq!(id(&r4, "x*w - y*z").dimension(), 3);
    let r3 = ring("x,y,z");
    assert_eq!(id(&r3, "x,y").dimension(), 1);
    assert_eq!(Ideal::unit(&r3).dimension(), -1);
    assert_eq!(Ideal::zero(&r3).dimension(), 3);
    let r6 = ring("a,b,c,d,e,f");
    let sym = PolyMat::from_rows(
        &r6,
        vec![
            vec![p(&r6, "a"), p(&r6, "b"), p(&r6, "c")],
            vec![p(&r6, "b"), p(&r6, "d"), p(&r6, "e")],
            vec![p(&r6, "c"), p(&r6, "e"), p(&r6, "f")],
        ],
    )
    .unwrap();
    assert_eq!(minors_ideal(&sym, 2).unwrap().dimension(), 3);
}

#[test]
fn gcd_and_squarefree() {
    let r = ring("x,y,z,w");
    assert_eq!(gcd_poly(&p(&r, "x^2*y"), &p(&r, "x*y^2")).unwrap(), p(&r, "x*y"));
    assert_eq!(squarefree_part(&p(&r, "x^2*y^3")).unwrap(), p(&r, "x*y"));
    assert!(is_reduced(&p(&r, "x*y*(x-y)*(x*z-y*w)")).unwrap());
    assert!(!is_reduced(&p(&r, "x^2*(y+z)")).unwrap());
    assert!(gcd_poly(&Poly::zero(&r), &Poly::zero(&r)).is_err());
    let f = p(&r, "(x+y)^3*(z-w)^2*x");
    assert_eq!(squarefree_part(&f).unwrap(), p(&r, "(x+y)*(z-w)*x").monic());
}

#[test]
fn minors_ideal_examples() {
    let r = ring("x,y,z,w");
    let m = PolyMat::from_rows(&r, vec![vec![p(&r, "x"), p(&r, "y")], vec![p(&r, "z"), p(&r, "w")]]).unwrap();
    assert!(minors_ideal(&m, 2).unwrap().equals(&id(&r, "x*w - y*z")).unwrap());
    assert!(minors_ideal(&PolyMat::identity(&r, 2), 1).unwrap().is_unit());
    assert!(minors_ideal(&m, 3).is_err());
}

#[test]
fn singular_loci() {
    let r3 = ring("x,y,z");
    let umbrella = singular_locus_ideal(&id(&r3, "x^2 - y^2*z")).unwrap();
    assert!(umbrella.radical_equal(&id(&r3, "x, y")).unwrap());
    let r2 = ring("x,y");
    assert!(singular_locus_ideal(&id(&r2, "x*y")).unwrap().radical_equal(&id(&r2, "x,y")).unwrap());
    let r4 = ring("x,y,z,w");
    let cone = singular_locus_ideal(&id(&r4, "x*w - y*z")).unwrap();
    assert!(cone.radical_equal(&Ideal::maximal(&r4)).unwrap());
}

#[test]
fn symbolic_powers() {
    let r3 = ring("x,y,z");
    let sp = symbolic_power(&id(&r3, "x,y"), 2, None).unwrap();
    assert!(sp.complete_intersection);
    assert!(sp.ideal.equals(&id(&r3, "x,y").power(2)).unwrap());
    let r4 = ring("x,y,z,w");
    let f = id(&r4, "x*w - y*z");
    assert!(symbolic_power(&f, 2, None).unwrap().ideal.equals(&f.power(2)).unwrap());
    assert!(symbolic_power(&f, 0, None).is_err());
}
