use derlog_core::*;

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn p(r: &Ring, s: &str) -> Poly {
    parse_poly(s, r).unwrap()
}

fn fields(r: &Ring, s: &[&str]) -> Vec<VectorField> {
    s.iter().map(|t| VectorField::parse(t, r).unwrap()).collect()
}

fn module(r: &Ring, s: &[&str]) -> FieldModule {
    FieldModule::new(r, fields(r, s)).unwrap()
}

fn comp(r: &Ring, label: &str, gens: &str, dim: usize) -> ComponentSpec {
    ComponentSpec::new(label, Ideal::parse(gens, r).unwrap(), dim).unwrap()
}

#[test]
fn smooth_criterion_examples() {
    let r3 = ring("x,y,z");
    let l = smooth_germ_generators(&r3, 1).unwrap();
    assert!(smooth_criterion(&l, 1, &Point::origin(&r3)).unwrap().is_pass());
    let r2 = ring("x,y");
    let o = Point::origin(&r2);
    let counter = module(&r2, &["y*d/dx", "x*d/dy", "x*d/dx - y*d/dy"]);
    let rep = smooth_criterion(&counter, 0, &o).unwrap();
    assert!(!rep.is_pass());
    assert_eq!(rep.witness("beta_rank"), Some(&Evidence::Integer(3)));
    assert!(!smooth_criterion(&module(&r2, &["d/dy"]), 1, &o).unwrap().is_pass());
    assert!(smooth_criterion(&module(&r2, &["d/dy", "x*d/dx"]), 1, &o).unwrap().is_pass());
    assert!(matches!(
        smooth_criterion(&module(&r2, &["d/dx"]), 1, &o),
        Err(Error::NotLogarithmic(_))
    ));
}

#[test]
fn smooth_fitting() {
    let r3 = ring("x,y,z");
    let f = smooth_fitting_formula(&r3, 1, 3).unwrap();
    assert!(f.equals(&Ideal::parse("x,y", &r3).unwrap().power(2)).unwrap());
    assert!(smooth_fitting_formula(&r3, 1, 1).unwrap().is_unit());
    assert!(smooth_fitting_formula(&r3, 1, 4).is_err());
    let r2 = ring("x,y");
    let full = module(&r2, &["x*d/dx", "y*d/dx", "x*d/dy", "y*d/dy"]);
    assert!(check_smooth_fitting(&full, 0).unwrap().is_pass());
}

#[test]
fn quadric_cone_bounds() {
    let r = ring("x,y,z,w");
    let comps = vec![comp(&r, "X3", "x*w - y*z", 3), comp(&r, "X0", "x,y,z,w", 0)];
    let b4 = thm_bound(&r, &comps, 4).unwrap();
    let expected = Ideal::parse("x*w - y*z", &r)
        .unwrap()
        .intersect(&Ideal::maximal(&r).power(4))
        .unwrap();
    assert!(b4.equals(&expected).unwrap());
    assert!(thm_bound(&r, &comps, 2).unwrap().equals(&Ideal::maximal(&r).power(2)).unwrap());
}

#[test]
fn component_condition_examples() {
    let r = ring("x,y");
    let x0 = comp(&r, "V(x)", "x", 1);
    let d = derlog_hypersurface(&p(&r, "x*y")).unwrap();
    assert!(component_condition(&d, &x0).unwrap().is_pass());
    let only_f = module(&r, &["x*y*d/dx", "x*y*d/dy"]);
    assert!(!component_condition(&only_f, &x0).unwrap().is_pass());
}

#[test]
fn saito_examples() {
    let r = ring("x,y");
    let f = p(&r, "x*y");
    assert!(saito_criterion(&fields(&r, &["x*d/dx", "y*d/dy"]), &f).unwrap().is_pass());
    let rep = saito_criterion(&fields(&r, &["x*d/dx", "x*d/dy"]), &f).unwrap();
    assert!(!rep.is_pass());
    assert_eq!(rep.witness("determinant"), Some(&Evidence::Poly("x^2".into())));
    assert!(matches!(
        saito_criterion(&fields(&r, &["y*d/dx", "x*d/dy"]), &f),
        Err(Error::NotLogarithmic(_))
    ));
    assert!(matches!(
        saito_criterion(&fields(&r, &["x*d/dx"]), &f),
        Err(Error::WrongFieldCount { .. })
    ));
    assert!(saito_second_criterion(&fields(&r, &["x*d/dx", "y*d/dy"]), &r).unwrap().is_pass());
    assert!(!saito_second_criterion(&fields(&r, &["x*d/dx", "y*d/dx"]), &r).unwrap().is_pass());
    let rep = saito_second_criterion(&fields(&r, &["x*d/dx + y*d/dy", "y*d/dx"]), &r).unwrap();
    assert!(!rep.is_pass());
    assert_eq!(rep.witness("determinant"), Some(&Evidence::Poly("-y^2".into())));
}

#[test]
fn generalized_saito_examples() {
    let r = ring("x,y");
    let f = p(&r, "x*y*(x + y)");
    let factors = vec![p(&r, "x"), p(&r, "y"), p(&r, "x + y")];
    let t = crate::derlog::trivial_generators(&f).unwrap();
    let rep = generalized_saito_check(&t, &f, &factors).unwrap();
    assert!(rep.is_pass(), "{rep}");
    let d = derlog_hypersurface(&f).unwrap();
    let rep = generalized_saito_check(&d, &f, &factors).unwrap();
    assert!(rep.is_pass());
    assert_eq!(rep.witness("reflexive_case_conclusion"), Some(&Evidence::Bool(true)));
    let mut gens = t.gens().to_vec();
    gens.remove(0);
    let dropped = FieldModule::new(&r, gens).unwrap();
    let rep = generalized_saito_check(&dropped, &f, &factors).unwrap();
    assert!(!rep.is_pass());
    assert_eq!(rep.witness("hypothesis_components"), Some(&Evidence::Bool(false)));
    let extra = p(&r, "x + 2*y");
    let g = t.gens();
    let scaled =
        FieldModule::new(&r, vec![g[0].scale(&extra), g[1].scale(&extra), g[2].clone()]).unwrap();
    let rep = generalized_saito_check(&scaled, &f, &factors).unwrap();
    assert_eq!(rep.witness("hypothesis_divisor"), Some(&Evidence::Bool(false)));
    assert!(!rep.is_pass());
}

#[test]
fn linear_free_divisors() {
    let r = ring("x,y");
    let rep = linear_free_divisor_check(&fields(&r, &["x*d/dx", "y*d/dy"]), &r).unwrap();
    assert!(rep.is_pass());
    let rot = linear_free_divisor_check(&fields(&r, &["x*d/dx + y*d/dy", "x*d/dy - y*d/dx"]), &r)
        .unwrap();
    assert_eq!(rot.witness("determinant"), Some(&Evidence::Poly("x^2 + y^2".into())));
    assert_eq!(rot.witness("bracket_closed"), Some(&Evidence::Bool(true)));
    assert!(rot.is_pass());
    assert!(!linear_free_divisor_check(&fields(&r, &["x*d/dx", "x*d/dy"]), &r).unwrap().is_pass());
}
