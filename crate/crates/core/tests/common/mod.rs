//! Randomized and corpus-wide property checks shared by the property tests
//! and the acceptance runner. Each check returns the number of instances it
//! examined, or a description of the first failure.

#![allow(dead_code)]

use derlog_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Outcome = std::result::Result<usize, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rat(g: &mut ChaCha8Rng) -> Rational {
    let n: i64 = g.gen_range(-5..=5);
    let d: i64 = g.gen_range(1..=3);
    rat_frac(n, d)
}

fn nonzero_int(g: &mut ChaCha8Rng) -> Rational {
    let n: i64 = g.gen_range(1..=4);
    rat(if g.gen_bool(0.5) { n } else { -n })
}

pub fn random_poly(g: &mut ChaCha8Rng, r: &Ring, terms: usize, max_deg: u32) -> Poly {
    let n = r.nvars();
    let mut out = Vec::new();
    for _ in 0..terms {
        let exps: Vec<u32> = (0..n).map(|_| g.gen_range(0..=max_deg)).collect();
        let total: u32 = exps.iter().sum();
        let exps = if total > max_deg {
            let mut e = vec![0; n];
            let mut left = g.gen_range(0..=max_deg);
            while left > 0 {
                e[g.gen_range(0..n)] += 1;
                left -= 1;
            }
            e
        } else {
            exps
        };
        out.push((Monomial::from_exponents(&exps), nonzero_int(g)));
    }
    Poly::from_terms(r, out)
}

/// A random form of degree `deg` (possibly zero).
pub fn random_form(g: &mut ChaCha8Rng, r: &Ring, terms: usize, deg: u32) -> Poly {
    let n = r.nvars();
    let out = (0..terms)
        .map(|_| {
            let mut e = vec![0; n];
            for _ in 0..deg {
                e[g.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(&e), nonzero_int(g))
        })
        .collect();
    Poly::from_terms(r, out)
}

fn random_ring(g: &mut ChaCha8Rng) -> Ring {
    let names = ["x", "y", "z"];
    let n = g.gen_range(2..=3);
    let order = match g.gen_range(0..3) {
        0 => MonomialOrder::DegRevLex,
        1 => MonomialOrder::Lex,
        _ => MonomialOrder::Block(1),
    };
    Ring::new(&names[..n], order).unwrap()
}

/// GB idempotence and Buchberger certificates on random small ideals.
pub fn groebner_properties(seed: u64, count: usize) -> Outcome {
    let mut g = rng(seed);
    for case in 0..count {
        let r = random_ring(&mut g);
        let ngens = g.gen_range(1..=3);
        let max_deg = if r.order() == MonomialOrder::DegRevLex { 3 } else { 2 };
        let gens: Vec<Poly> = (0..ngens)
            .map(|_| {
                let t = g.gen_range(1..=3);
                random_poly(&mut g, &r, t, max_deg)
            })
            .collect();
        let gb = groebner_basis(&r, &gens).map_err(|e| e.to_string())?;
        let again = groebner_basis(&r, gb.elements()).map_err(|e| e.to_string())?;
        if again.elements() != gb.elements() {
            return Err(format!("case {case}: basis of {gens:?} is not idempotent"));
        }
        if !gb.buchberger_certificate() {
            return Err(format!("case {case}: S-polynomials of the basis of {gens:?} do not reduce to 0"));
        }
        for f in &gens {
            if !gb.contains(f).map_err(|e| e.to_string())? {
                return Err(format!("case {case}: generator {f} not in its own basis"));
            }
        }
    }
    Ok(count)
}

fn check_syzygies(m: &PolyMat, what: &str) -> Outcome {
    let syz = syzygies(m).map_err(|e| e.to_string())?;
    for v in &syz {
        let image = m.apply(v.entries()).map_err(|e| e.to_string())?;
        if image.iter().any(|p| !p.is_zero()) {
            return Err(format!("{what}: syzygy {:?} of\n{m}is not a relation", v.entries()));
        }
    }
    Ok(syz.len())
}

/// `M v = 0` for every syzygy of random graded matrices and of the Saito
/// matrices of the corpus.
pub fn syzygy_soundness(seed: u64, count: usize, include_long: bool) -> Outcome {
    let mut g = rng(seed);
    let mut checked = 0;
    for case in 0..count {
        let r = random_ring(&mut g);
        let rows = g.gen_range(1..=2);
        let cols = g.gen_range(2..=4);
        let degrees: Vec<u32> = (0..cols).map(|_| g.gen_range(1..=2)).collect();
        let entries: Vec<Vec<Poly>> = (0..rows)
            .map(|_| degrees.iter().map(|&d| random_form(&mut g, &r, 2, d)).collect())
            .collect();
        let m = PolyMat::from_rows(&r, entries).map_err(|e| e.to_string())?;
        checked += check_syzygies(&m, &format!("random case {case}"))?;
    }
    for e in examples().iter().filter(|e| include_long || !e.long) {
        for (label, l) in example_modules(e.name).map_err(|e| e.to_string())? {
            let m = l.saito_matrix().map_err(|e| e.to_string())?;
            checked += check_syzygies(&m, &format!("{} {label}", e.name))?;
        }
    }
    Ok(checked)
}

/// Derlog outputs are logarithmic and closed under brackets.
pub fn derlog_bracket_closure(include_long: bool) -> Outcome {
    let mut checked = 0;
    for e in examples().iter().filter(|e| include_long || !e.long) {
        for (label, l) in example_modules(e.name).map_err(|e| e.to_string())? {
            if !(label.contains("derlog") || e.name == "smooth-subspace") {
                continue;
            }
            if let Some((i, j)) = l.bracket_failure().map_err(|e| e.to_string())? {
                return Err(format!("{} {label}: [{}, {}] leaves the module", e.name, l.gens()[i], l.gens()[j]));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn shifted_vars(r: &Ring, p: &Point) -> Vec<Poly> {
    Poly::vars(r)
        .into_iter()
        .zip(p.coords())
        .map(|(x, c)| &x - &Poly::constant(r, c.clone()))
        .collect()
}

/// A random polynomial in the shifted variables with no constant term.
fn vanishing_at(g: &mut ChaCha8Rng, r: &Ring, u: &[Poly]) -> Poly {
    let mut acc = Poly::zero(r);
    for a in u {
        acc = &acc + &a.scale(&small_rat(g));
        for b in u {
            if g.gen_bool(0.4) {
                acc = &acc + &(a * b).scale(&small_rat(g));
            }
        }
    }
    if g.gen_bool(0.3) {
        let i = g.gen_range(0..u.len());
        acc = &acc + &u[i].pow(3).scale(&small_rat(g));
    }
    acc
}

/// At a common zero p of η and f, the gradient of η(f) at p equals the
/// gradient of f at p times the linear part of η at p.
pub fn linear_part_identity(seed: u64, count: usize) -> Outcome {
    let mut g = rng(seed);
    for case in 0..count {
        let n = g.gen_range(2..=4);
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let r = Ring::degrevlex(&names).unwrap();
        let p = Point::new(&r, (0..n).map(|_| small_rat(&mut g)).collect()).map_err(|e| e.to_string())?;
        let u = shifted_vars(&r, &p);
        let eta = VectorField::new(&r, (0..n).map(|_| vanishing_at(&mut g, &r, &u)).collect())
            .map_err(|e| e.to_string())?;
        let f = vanishing_at(&mut g, &r, &u);
        let ef = eta.apply(&f).map_err(|e| e.to_string())?;
        let lhs: Vec<Rational> =
            ef.gradient().iter().map(|d| d.evaluate(&p)).collect::<Result<_>>().map_err(|e| e.to_string())?;
        let grad: Vec<Rational> =
            f.gradient().iter().map(|d| d.evaluate(&p)).collect::<Result<_>>().map_err(|e| e.to_string())?;
        let lin = linearize(&eta, &p).map_err(|e| e.to_string())?;
        let rhs = lin.transpose().apply(&grad).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("case {case}: eta = {eta}, f = {f}"));
        }
    }
    Ok(count)
}

fn random_qmat(g: &mut ChaCha8Rng, rows: usize, cols: usize) -> QMat {
    QMat::from_rows((0..rows).map(|_| (0..cols).map(|_| small_rat(g)).collect()).collect()).unwrap()
}

/// tr(adj(A) B) is the coefficient of t in det(A + tB), for A of corank one.
pub fn jacobi_formula(seed: u64, count: usize) -> Outcome {
    let mut g = rng(seed);
    let r = Ring::parse("t").unwrap();
    let t = Poly::var(&r, 0).unwrap();
    for case in 0..count {
        let m = g.gen_range(2..=4);
        let a = loop {
            let left = random_qmat(&mut g, m, m - 1);
            let right = random_qmat(&mut g, m - 1, m);
            let a = left.mul(&right).unwrap();
            if a.rank() == m - 1 {
                break a;
            }
        };
        let b = random_qmat(&mut g, m, m);
        let lhs = a.adjugate().unwrap().mul(&b).unwrap().trace();
        let rows: Vec<Vec<Poly>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| &Poly::constant(&r, a.get(i, j).clone()) + &t.scale(b.get(i, j)))
                    .collect()
            })
            .collect();
        let det = PolyMat::from_rows(&r, rows).unwrap().determinant().map_err(|e| e.to_string())?;
        let linear = Monomial::var(0);
        let rhs = det.terms().iter().find(|(mono, _)| *mono == linear).map(|(_, c)| c.clone()).unwrap_or_else(|| rat(0));
        if lhs != rhs {
            return Err(format!("case {case}: tr(adj(A)B) = {lhs}, det coefficient = {rhs}"));
        }
        if a.determinant().unwrap() != rat(0) {
            return Err(format!("case {case}: A is not singular"));
        }
    }
    Ok(count)
}

/// Appending a combination of the generators leaves every Fitting ideal
/// unchanged.
pub fn fitting_well_defined(seed: u64, include_long: bool) -> Outcome {
    let mut g = rng(seed);
    let mut checked = 0;
    for e in examples().iter().filter(|e| include_long || !e.long) {
        for (label, l) in example_modules(e.name).map_err(|e| e.to_string())? {
            let r = l.ring().clone();
            let mut extra = VectorField::zero(&r);
            for v in l.gens() {
                let c = random_poly(&mut g, &r, 2, 1);
                extra = extra.checked_add(&v.scale(&c)).map_err(|e| e.to_string())?;
            }
            let mut gens = l.gens().to_vec();
            gens.push(extra);
            let bigger = FieldModule::new(&r, gens).map_err(|e| e.to_string())?;
            for k in 1..=r.nvars() {
                let a = l.fitting_ideal(k).map_err(|e| e.to_string())?;
                let b = bigger.fitting_ideal(k).map_err(|e| e.to_string())?;
                if !a.equals(&b).map_err(|e| e.to_string())? {
                    return Err(format!("{} {label}: I_{k} changes from {a} to {b}", e.name));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Lie bracket antisymmetry and the Jacobi identity on random triples.
pub fn bracket_identities(seed: u64, count: usize) -> Outcome {
    let mut g = rng(seed);
    let r = Ring::parse("x,y,z").unwrap();
    let field = |g: &mut ChaCha8Rng| {
        VectorField::new(&r, (0..3).map(|_| random_poly(g, &r, 2, 2)).collect()).unwrap()
    };
    for case in 0..count {
        let (a, b, c) = (field(&mut g), field(&mut g), field(&mut g));
        let br = |u: &VectorField, v: &VectorField| lie_bracket(u, v).unwrap();
        if !br(&a, &b).checked_add(&br(&b, &a)).unwrap().is_zero() {
            return Err(format!("case {case}: bracket not antisymmetric"));
        }
        let jac = br(&a, &br(&b, &c))
            .checked_add(&br(&b, &br(&c, &a)))
            .unwrap()
            .checked_add(&br(&c, &br(&a, &b)))
            .unwrap();
        if !jac.is_zero() {
            return Err(format!("case {case}: Jacobi identity fails for {a}, {b}, {c}"));
        }
    }
    Ok(count)
}
