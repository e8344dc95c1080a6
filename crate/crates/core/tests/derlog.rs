use derlog_core::*;

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn p(r: &Ring, s: &str) -> Poly {
    parse_poly(s, r).unwrap()
}

fn vf(r: &Ring, s: &str) -> VectorField {
    VectorField::parse(s, r).unwrap()
}

fn module(r: &Ring, s: &str) -> FieldModule {
    FieldModule::parse(s, r).unwrap()
}

#[test]
fn printing_round_trip() {
    let r = ring("x,y");
    let v = vf(&r, "x*d/dx - (x - y)*d/dy");
    assert_eq!(v.to_string(), "x*d/dx - (x - y)*d/dy");
    assert_eq!(vf(&r, "-d/dy").to_string(), "-d/dy");
    assert_eq!(vf(&r, "1/2*x^2*d/dx + d/dy").to_string(), "1/2*x^2*d/dx + d/dy");
    assert_eq!(VectorField::zero(&r).to_string(), "0");
    let back = vf(&r, &v.to_string());
    assert_eq!(back, v);
}

#[test]
fn applying_fields() {
    let r = ring("x,y,z,w");
    let e = euler_field(&r, &[rat(1), rat(1), rat(1), rat(1)]).unwrap();
    let f = p(&r, "x*w - y*z");
    assert_eq!(e.apply(&f).unwrap(), f.scale(&rat(2)));
    let r3 = ring("x,y,z");
    let w = euler_field(&r3, &[rat(2), rat(1), rat(2)]).unwrap();
    let g = p(&r3, "x^2 - y^2*z");
    assert_eq!(w.apply(&g).unwrap(), g.scale(&rat(4)));
    let r2 = ring("x,y");
    assert_eq!(vf(&r2, "y*d/dx").apply(&p(&r2, "x")).unwrap(), p(&r2, "y"));
}

#[test]
fn logarithmic_tests() {
    let r = ring("x,y");
    let ideal = Ideal::parse("x, y", &r).unwrap();
    assert!(is_logarithmic(&vf(&r, "x*d/dy"), &ideal).unwrap());
    assert!(!is_logarithmic(&vf(&r, "d/dx"), &Ideal::parse("x", &r).unwrap()).unwrap());
}

#[test]
fn derlog_of_normal_crossing() {
    let r = ring("x,y");
    let d = derlog_hypersurface(&p(&r, "x*y")).unwrap();
    assert!(d.equals(&module(&r, "x*d/dx, y*d/dy")).unwrap());
    assert_eq!(d.len(), 2);
    let det = d.saito_matrix().unwrap().determinant().unwrap();
    assert!(det.is_associate(&p(&r, "x*y")));
}

#[test]
fn derlog_counts() {
    let r4 = ring("x,y,z,w");
    let cone = derlog_hypersurface(&p(&r4, "x*w - y*z")).unwrap();
    assert_eq!(cone.len(), 7);
    assert_eq!(cone.minimal_generator_count().unwrap(), 7);
    let r3 = ring("x,y,z");
    let umbrella = derlog_hypersurface(&p(&r3, "x^2 - y^2*z")).unwrap();
    assert_eq!(umbrella.minimal_generator_count().unwrap(), 4);
    assert_eq!(umbrella.len(), 4);
}

#[test]
fn derlog_of_origin() {
    let r = ring("x,y");
    let d = derlog_ideal(&Ideal::maximal(&r)).unwrap();
    assert!(d.equals(&module(&r, "x*d/dx, y*d/dx, x*d/dy, y*d/dy")).unwrap());
    let l = module(&r, "y*d/dx, x*d/dy, x*d/dx - y*d/dy");
    assert!(!l.equals(&d).unwrap());
    for k in 1..=2 {
        assert!(l.fitting_ideal(k).unwrap().equals(&d.fitting_ideal(k).unwrap()).unwrap());
    }
}

#[test]
fn fitting_ideals() {
    let r = ring("x,y");
    let l = module(&r, "x*d/dx, y*d/dy");
    assert!(l.fitting_ideal(2).unwrap().equals(&Ideal::parse("x*y", &r).unwrap()).unwrap());
    assert!(l.fitting_ideal(3).is_err());
    assert!(l.fitting_ideal(0).is_err());
}

#[test]
fn brackets() {
    let r = ring("x,y");
    assert!(lie_bracket(&vf(&r, "x*d/dx"), &vf(&r, "y*d/dy")).unwrap().is_zero());
    assert_eq!(
        lie_bracket(&vf(&r, "y*d/dx"), &vf(&r, "x*d/dy")).unwrap(),
        vf(&r, "y*d/dy - x*d/dx")
    );
    let e = vf(&r, "x^2*d/dy + y*d/dx");
    assert!(lie_bracket(&e, &e).unwrap().is_zero());
}

#[test]
fn trivial_generator_conventions() {
    let r = ring("x,y");
    let t = trivial_generators(&p(&r, "x*y")).unwrap();
    assert_eq!(t.gens()[0], vf(&r, "x*d/dx - y*d/dy"));
    assert_eq!(t.gens()[1], vf(&r, "x*y*d/dx"));
    let r3 = ring("x,y,z");
    let f = p(&r3, "x^2 - y^2*z");
    let t3 = trivial_generators(&f).unwrap();
    assert_eq!(t3.len(), 6);
    let fi = Ideal::principal(&f);
    assert!(t3.gens().iter().all(|g| is_logarithmic(g, &fi).unwrap()));
}

#[test]
fn values_and_linearization() {
    let r = ring("x,y");
    let o = Point::origin(&r);
    let lin = vf(&r, "y*d/dx").linearize(&o).unwrap();
    assert_eq!(lin, QMat::from_integers(&[&[0, 1], &[0, 0]]).unwrap());
    let r4 = ring("x,y,z,w");
    let cone = derlog_hypersurface(&p(&r4, "x*w - y*z")).unwrap();
    assert_eq!(cone.span_dim(&Point::origin(&r4)).unwrap(), 0);
    assert_eq!(cone.span_dim(&Point::from_integers(&r4, &[1, 0, 0, 0]).unwrap()).unwrap(), 3);
    let half = euler_field(&r, &[rat_frac(1, 2), rat(1)]).unwrap();
    let pt = Point::from_integers(&r, &[2, 3]).unwrap();
    assert_eq!(half.value(&pt).unwrap(), vec![rat(1), rat(3)]);
}
