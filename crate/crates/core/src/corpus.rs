//! Built-in worked examples and their expected outcomes.

use std::collections::BTreeMap;

use crate::criteria::{
    bound_report, bound_table, check_bound_and_sharpness, check_smooth_fitting,
    component_condition, generalized_saito_check, linear_free_divisor_check, saito_criterion,
    saito_second_criterion, smooth_criterion, smooth_germ_generators, ComponentSpec,
};
use crate::derlog::{derlog_hypersurface, derlog_ideal, trivial_generators, FieldModule, VectorField};
use crate::error::{Error, Result};
use crate::ideal::{minors_ideal, Ideal};
use crate::matrix::PolyMat;
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::report::{CheckReport, Evidence};
use crate::ring::{Point, Ring};

#[derive(Clone, Copy, Debug)]
pub struct ExampleInfo {
    pub name: &'static str,
    pub summary: &'static str,
    /// Needs explicit opt-in because of its running time.
    pub long: bool,
}

const EXAMPLES: &[ExampleInfo] = &[
    ExampleInfo {
        name: "quadric-cone",
        summary: "xw - yz in 4 variables: 7 generators, every Fitting bound attained",
        long: false,
    },
    ExampleInfo {
        name: "xz-yw-arrangement",
        summary: "xy(x - y)(xz - yw) with its singular tower: I_4 and I_1 exact",
        long: false,
    },
    ExampleInfo {
        name: "whitney-umbrella",
        summary: "x^2 - y^2*z: 4 generators; the origin stratum makes I_1 and I_3 exact",
        long: false,
    },
    ExampleInfo {
        name: "sym3x3-minors",
        summary: "2x2 minors of a symmetric 3x3 matrix: 24 generators, I_1..I_5 exact (minutes)",
        long: true,
    },
    ExampleInfo {
        name: "counterexample-origin",
        summary: "three fields at the origin of the plane with the right Fitting ideals but a smaller module",
        long: false,
    },
    ExampleInfo {
        name: "smooth-subspace",
        summary: "coordinate subspaces up to dimension 4: generation criterion and Fitting formula",
        long: false,
    },
    ExampleInfo {
        name: "normal-crossings",
        summary: "x_1...x_n for n <= 4: free divisor with a linear basis",
        long: false,
    },
    ExampleInfo {
        name: "trivial-generators",
        summary: "xy(x + y): Hamiltonian fields and f*d/dx_i satisfy the bounds without generating",
        long: false,
    },
];

pub fn examples() -> &'static [ExampleInfo] {
    EXAMPLES
}

fn info(name: &str) -> Result<&'static ExampleInfo> {
    EXAMPLES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownExample(name.to_string()))
}

/// A stratification to bound the Fitting ideals with, and what to expect.
struct Tower {
    label: &'static str,
    components: Vec<(&'static str, &'static str, usize)>,
    exact: Vec<(usize, bool)>,
    radical: Vec<(usize, bool)>,
}

struct Run {
    report: CheckReport,
    ok: bool,
}

impl Run {
    fn new(name: &str) -> Run {
        Run { report: CheckReport::new(&format!("example {name}")), ok: true }
    }

    fn expect(&mut self, what: &str, ok: bool) {
        self.report.add(&format!("expect {what}"), Evidence::Bool(ok));
        self.ok &= ok;
    }

    fn expect_ideal(&mut self, what: &str, actual: &Ideal, expected: &Ideal) -> Result<()> {
        let ok = actual.equals(expected)?;
        self.expect(what, ok);
        if !ok {
            self.report.add(&format!("diff {what}"), Evidence::diff(actual, expected));
        }
        Ok(())
    }

    fn expect_count(&mut self, l: &FieldModule, count: usize) -> Result<()> {
        let actual = l.minimal_generator_count()?;
        self.report.add("minimal_generators", Evidence::Integer(actual as i64));
        self.expect(&format!("minimal_generators={count}"), actual == count);
        if actual != count {
            self.report.add("generators", Evidence::module(l));
        }
        Ok(())
    }

    fn tower(&mut self, l: &FieldModule, t: &Tower) -> Result<()> {
        let ring = l.ring();
        let comps = t
            .components
            .iter()
            .map(|(label, gens, dim)| ComponentSpec::new(label, Ideal::parse(gens, ring)?, *dim))
            .collect::<Result<Vec<_>>>()?;
        let (rows, saturated) = bound_table(l, &comps, ring.nvars())?;
        let sub = bound_report(&rows, saturated);
        self.report.absorb(t.label, &sub);
        self.expect(&format!("{} bounds hold", t.label), sub.is_pass());
        for row in &rows {
            let key = format!("{} k={}", t.label, row.k);
            if let Some(&(_, want)) = t.exact.iter().find(|(k, _)| *k == row.k) {
                self.expect(&format!("{key} exact={want}"), row.exact == want);
                if row.exact != want {
                    self.report.add(&format!("diff {key}"), Evidence::diff(&row.fitting, &row.bound));
                }
            }
            if let Some(&(_, want)) = t.radical.iter().find(|(k, _)| *k == row.k) {
                self.expect(&format!("{key} radical={want}"), row.radical == want);
                if row.radical != want {
                    self.report.add(&format!("diff {key}"), Evidence::diff(&row.fitting, &row.bound));
                }
            }
        }
        Ok(())
    }

    fn sub(&mut self, what: &str, sub: &CheckReport, want_pass: bool) {
        self.report.absorb(what, sub);
        self.expect(&format!("{what} {}", if want_pass { "passes" } else { "fails" }), sub.is_pass() == want_pass);
    }

    fn finish(mut self) -> CheckReport {
        self.report.set_verdict(self.ok);
        self.report
    }
}

fn ring(vars: &str) -> Ring {
    Ring::parse(vars).expect("valid ring")
}

fn poly(text: &str, r: &Ring) -> Poly {
    parse_poly(text, r).expect("valid polynomial")
}

fn indexed_ring(n: usize) -> Ring {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    Ring::degrevlex(&names).expect("valid ring")
}

fn all_exact(n: usize) -> Vec<(usize, bool)> {
    (1..=n).map(|k| (k, true)).collect()
}

pub fn quadric_cone_towers() -> Vec<(&'static str, &'static str, usize)> {
    vec![("X3", "x*w - y*z", 3), ("X0", "x, y, z, w", 0)]
}

pub fn arrangement_tower() -> Vec<(&'static str, &'static str, usize)> {
    vec![
        ("V(x)", "x", 3),
        ("V(y)", "y", 3),
        ("V(x-y)", "x - y", 3),
        ("V(xz-yw)", "x*z - y*w", 3),
        ("V(x,y)", "x, y", 2),
        ("V(x,w)", "x, w", 2),
        ("V(y,z)", "y, z", 2),
        ("V(x-y,z-w)", "x - y, z - w", 2),
        ("V(x,y,z)", "x, y, z", 1),
        ("V(x,y,w)", "x, y, w", 1),
        ("V(x,y,z-w)", "x, y, z - w", 1),
        ("origin", "x, y, z, w", 0),
    ]
}

pub fn umbrella_tower(with_origin: bool) -> Vec<(&'static str, &'static str, usize)> {
    let mut t = vec![("X2", "x^2 - y^2*z", 2), ("X1", "x, y", 1)];
    if with_origin {
        t.push(("origin", "x, y, z", 0));
    }
    t
}

/// The ideal of 2x2 minors of the generic symmetric 3x3 matrix in `a..f`.
pub fn sym3x3_ideal() -> Result<Ideal> {
    let r = ring("a,b,c,d,e,f");
    let p = |s: &str| poly(s, &r);
    let m = PolyMat::from_rows(
        &r,
        vec![
            vec![p("a"), p("b"), p("c")],
            vec![p("b"), p("d"), p("e")],
            vec![p("c"), p("e"), p("f")],
        ],
    )?;
    minors_ideal(&m, 2)
}

pub fn counterexample_fields(r: &Ring) -> Result<FieldModule> {
    FieldModule::parse("y*d/dx, x*d/dy, x*d/dx - y*d/dy", r)
}

fn quadric_cone() -> Result<CheckReport> {
    let r = ring("x,y,z,w");
    let mut run = Run::new("quadric-cone");
    let l = derlog_hypersurface(&poly("x*w - y*z", &r))?;
    run.expect_count(&l, 7)?;
    let t = Tower { label: "tower", components: quadric_cone_towers(), exact: all_exact(4), radical: all_exact(4) };
    run.tower(&l, &t)?;
    Ok(run.finish())
}

fn arrangement() -> Result<CheckReport> {
    let r = ring("x,y,z,w");
    let mut run = Run::new("xz-yw-arrangement");
    let l = derlog_hypersurface(&poly("x*y*(x - y)*(x*z - y*w)", &r))?;
    run.expect_count(&l, 4)?;
    let t = Tower {
        label: "tower",
        components: arrangement_tower(),
        exact: vec![(4, true), (3, false), (2, false), (1, true)],
        radical: vec![(4, true), (3, true), (2, false), (1, true)],
    };
    run.tower(&l, &t)?;
    Ok(run.finish())
}

fn umbrella() -> Result<CheckReport> {
    let r = ring("x,y,z");
    let mut run = Run::new("whitney-umbrella");
    let f = poly("x^2 - y^2*z", &r);
    let l = derlog_hypersurface(&f)?;
    run.expect_count(&l, 4)?;
    let without = Tower {
        label: "singular-tower",
        components: umbrella_tower(false),
        exact: vec![(1, false), (2, false), (3, false)],
        radical: vec![(1, false), (2, true), (3, true)],
    };
    run.tower(&l, &without)?;
    let with = Tower {
        label: "origin-tower",
        components: umbrella_tower(true),
        exact: vec![(1, true), (3, true)],
        radical: vec![],
    };
    run.tower(&l, &with)?;
    let x2 = ComponentSpec::new("X2", Ideal::principal(&f), 2)?;
    run.sub("component-condition", &component_condition(&l, &x2)?, true);
    Ok(run.finish())
}

fn sym3x3() -> Result<CheckReport> {
    let p = sym3x3_ideal()?;
    let r = p.ring().clone();
    let mut run = Run::new("sym3x3-minors");
    let l = derlog_ideal(&p)?;
    run.expect_count(&l, 24)?;
    let comps = vec![
        ComponentSpec::new("X3", p.clone(), 3)?,
        ComponentSpec::new("origin", Ideal::maximal(&r), 0)?,
    ];
    let (rows, saturated) = bound_table(&l, &comps, 6)?;
    let sub = bound_report(&rows, saturated);
    run.report.absorb("tower", &sub);
    for row in &rows {
        let key = format!("tower k={}", row.k);
        run.expect(&format!("{key} contained"), row.contained);
        let want = row.k <= 5;
        run.expect(&format!("{key} exact={want}"), row.exact == want);
        if row.exact != want {
            run.report.add(&format!("diff {key}"), Evidence::diff(&row.fitting, &row.bound));
        }
    }
    let sharp_ok = rows.iter().all(|row| row.sharp.iter().all(|(_, s)| *s));
    run.expect("tower sharpness", sharp_ok);
    Ok(run.finish())
}

fn counterexample() -> Result<CheckReport> {
    let r = ring("x,y");
    let mut run = Run::new("counterexample-origin");
    let l = counterexample_fields(&r)?;
    let full = derlog_ideal(&Ideal::maximal(&r))?;
    run.report.add("L", Evidence::module(&l));
    run.report.add("derlog", Evidence::module(&full));
    for k in 1..=2 {
        run.expect_ideal(&format!("I_{k}(L)=I_{k}(derlog)"), &l.fitting_ideal(k)?, &full.fitting_ideal(k)?)?;
    }
    run.expect("L bracket closed", l.is_bracket_closed()?);
    run.expect("L != derlog", !l.equals(&full)?);
    let o = Point::origin(&r);
    run.sub("criterion(L)", &smooth_criterion(&l, 0, &o)?, false);
    run.sub("criterion(derlog)", &smooth_criterion(&full, 0, &o)?, true);
    Ok(run.finish())
}

fn smooth_subspace() -> Result<CheckReport> {
    let mut run = Run::new("smooth-subspace");
    for n in 1..=4 {
        let r = indexed_ring(n);
        let o = Point::origin(&r);
        for d in 0..n {
            let tag = format!("d={d} n={n}");
            let g = smooth_germ_generators(&r, d)?;
            run.sub(&format!("{tag} criterion"), &smooth_criterion(&g, d, &o)?, true);
            let mut all_fail = true;
            for skip in d..g.len() {
                let gens: Vec<VectorField> =
                    g.gens().iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, v)| v.clone()).collect();
                let smaller = FieldModule::new(&r, gens)?;
                all_fail &= !smooth_criterion(&smaller, d, &o)?.is_pass();
            }
            run.expect(&format!("{tag} removing any normal generator fails"), all_fail);
            run.sub(&format!("{tag} fitting"), &check_smooth_fitting(&g, d)?, true);
            let ideal = Ideal::new(&r, Poly::vars(&r).into_iter().take(n - d).collect())?;
            run.expect(&format!("{tag} equals derlog"), g.equals(&derlog_ideal(&ideal)?)?);
        }
    }
    Ok(run.finish())
}

fn normal_crossing_fields(r: &Ring) -> Result<Vec<VectorField>> {
    let n = r.nvars();
    let vars = Poly::vars(r);
    (0..n)
        .map(|i| {
            let mut c = vec![Poly::zero(r); n];
            c[i] = vars[i].clone();
            VectorField::new(r, c)
        })
        .collect()
}

fn normal_crossings() -> Result<CheckReport> {
    let mut run = Run::new("normal-crossings");
    for n in 1..=4 {
        let r = indexed_ring(n);
        let f = Poly::vars(&r).iter().fold(Poly::one(&r), |acc, x| &acc * x);
        let fields = normal_crossing_fields(&r)?;
        run.sub(&format!("n={n} saito"), &saito_criterion(&fields, &f)?, true);
        run.sub(&format!("n={n} saito-second"), &saito_second_criterion(&fields, &r)?, true);
        run.sub(&format!("n={n} linear-free-divisor"), &linear_free_divisor_check(&fields, &r)?, true);
        run.expect_count(&derlog_hypersurface(&f)?, n)?;
    }
    Ok(run.finish())
}

fn trivial() -> Result<CheckReport> {
    let r = ring("x,y");
    let mut run = Run::new("trivial-generators");
    let f = poly("x*y*(x + y)", &r);
    let l = trivial_generators(&f)?;
    run.report.add("L", Evidence::module(&l));
    let comps = vec![
        ComponentSpec::new("V(x)", Ideal::parse("x", &r)?, 1)?,
        ComponentSpec::new("V(y)", Ideal::parse("y", &r)?, 1)?,
        ComponentSpec::new("V(x+y)", Ideal::parse("x + y", &r)?, 1)?,
    ];
    run.sub("bounds", &check_bound_and_sharpness(&l, &comps, 2)?, true);
    run.expect("L != derlog", !l.equals(&derlog_hypersurface(&f)?)?);
    let factors = vec![poly("x", &r), poly("y", &r), poly("x + y", &r)];
    run.sub("generalized-saito", &generalized_saito_check(&l, &f, &factors)?, true);
    Ok(run.finish())
}

/// Runs a named example and compares it with its expectations. Long cases
/// are refused unless `allow_long` is set.
pub fn run_example(name: &str, allow_long: bool) -> Result<CheckReport> {
    let info = info(name)?;
    if info.long && !allow_long {
        return Err(Error::InvalidArgument(format!("example {name} is long-running; pass --long to run it")));
    }
    match name {
        "quadric-cone" => quadric_cone(),
        "xz-yw-arrangement" => arrangement(),
        "whitney-umbrella" => umbrella(),
        "sym3x3-minors" => sym3x3(),
        "counterexample-origin" => counterexample(),
        "smooth-subspace" => smooth_subspace(),
        "normal-crossings" => normal_crossings(),
        "trivial-generators" => trivial(),
        _ => Err(Error::UnknownExample(name.to_string())),
    }
}

/// The modules of vector fields an example works with, by label.
pub fn example_modules(name: &str) -> Result<BTreeMap<String, FieldModule>> {
    info(name)?;
    let mut out = BTreeMap::new();
    match name {
        "quadric-cone" => {
            out.insert("derlog".into(), derlog_hypersurface(&poly("x*w - y*z", &ring("x,y,z,w")))?);
        }
        "xz-yw-arrangement" => {
            let r = ring("x,y,z,w");
            out.insert("derlog".into(), derlog_hypersurface(&poly("x*y*(x - y)*(x*z - y*w)", &r))?);
        }
        "whitney-umbrella" => {
            out.insert("derlog".into(), derlog_hypersurface(&poly("x^2 - y^2*z", &ring("x,y,z")))?);
        }
        "sym3x3-minors" => {
            out.insert("derlog".into(), derlog_ideal(&sym3x3_ideal()?)?);
        }
        "counterexample-origin" => {
            let r = ring("x,y");
            out.insert("L".into(), counterexample_fields(&r)?);
            out.insert("derlog".into(), derlog_ideal(&Ideal::maximal(&r))?);
        }
        "smooth-subspace" => {
            for n in 1..=4 {
                let r = indexed_ring(n);
                for d in 0..n {
                    out.insert(format!("d={d} n={n}"), smooth_germ_generators(&r, d)?);
                }
            }
        }
        "normal-crossings" => {
            for n in 1..=4 {
                let r = indexed_ring(n);
                let f = Poly::vars(&r).iter().fold(Poly::one(&r), |acc, x| &acc * x);
                out.insert(format!("n={n} fields"), FieldModule::new(&r, normal_crossing_fields(&r)?)?);
                out.insert(format!("n={n} derlog"), derlog_hypersurface(&f)?);
            }
        }
        "trivial-generators" => {
            let r = ring("x,y");
            let f = poly("x*y*(x + y)", &r);
            out.insert("L".into(), trivial_generators(&f)?);
            out.insert("derlog".into(), derlog_hypersurface(&f)?);
        }
        _ => return Err(Error::UnknownExample(name.to_string())),
    }
    Ok(out)
}
