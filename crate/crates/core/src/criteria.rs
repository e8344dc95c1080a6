//! Decision procedures for generation of logarithmic vector field modules.

use std::collections::{BTreeMap, HashMap};

use crate::derlog::{derlog_hypersurface, is_logarithmic, lie_bracket, FieldModule, VectorField};
use crate::error::{Error, Result};
use crate::ideal::{gcd_poly, is_reduced, squarefree_part, symbolic_power, Ideal};
use crate::linalg::QMat;
use crate::poly::{Poly, Rational};
use crate::report::{CheckReport, Evidence};
use crate::ring::{Point, Ring};

/// An irreducible component `X_s` with its (prime) ideal and dimension.
#[derive(Clone, Debug)]
pub struct ComponentSpec {
    pub label: String,
    pub ideal: Ideal,
    pub dim: usize,
}

impl ComponentSpec {
    /// Checks that the ideal is proper and of the stated dimension.
    pub fn new(label: &str, ideal: Ideal, dim: usize) -> Result<ComponentSpec> {
        let actual = ideal.dimension();
        if actual < 0 {
            return Err(Error::InvalidArgument(format!("component {label} is the unit ideal")));
        }
        if actual as usize != dim {
            return Err(Error::InvalidArgument(format!(
                "component {label} has dimension {actual}, not {dim}"
            )));
        }
        Ok(ComponentSpec { label: label.to_string(), ideal, dim })
    }
}

fn flag_key(k: usize) -> String {
    format!("k={k}")
}

const SATURATION_CAVEAT: &str = "symbolic power obtained by saturating the ordinary power; \
exact when every embedded prime of the ordinary power contains the exclusion ideal";

/// Symbolic powers of components, memoized by (component, exponent).
pub struct SymbolicPowers<'a> {
    components: &'a [ComponentSpec],
    cache: HashMap<(usize, u32), Ideal>,
    saturated: bool,
}

impl<'a> SymbolicPowers<'a> {
    pub fn new(components: &'a [ComponentSpec]) -> SymbolicPowers<'a> {
        SymbolicPowers { components, cache: HashMap::new(), saturated: false }
    }

    pub fn get(&mut self, idx: usize, ell: u32) -> Result<Ideal> {
        if let Some(i) = self.cache.get(&(idx, ell)) {
            return Ok(i.clone());
        }
        let sp = symbolic_power(&self.components[idx].ideal, ell, None)?;
        self.saturated |= sp.exclusion.is_some();
        self.cache.insert((idx, ell), sp.ideal.clone());
        Ok(sp.ideal)
    }

    /// Whether any power so far needed the saturation route.
    pub fn used_saturation(&self) -> bool {
        self.saturated
    }

    /// `∩_{dim X_s < k} I(X_s)^(k - dim X_s)`, or `(1)` if empty.
    pub fn bound(&mut self, ring: &Ring, k: usize) -> Result<Ideal> {
        let mut acc = Ideal::unit(ring);
        for idx in 0..self.components.len() {
            let dim = self.components[idx].dim;
            if k > dim {
                acc = acc.intersect(&self.get(idx, (k - dim) as u32)?)?;
            }
        }
        Ok(acc)
    }
}

/// The upper bound for `I_k` from a list of components.
pub fn thm_bound(ring: &Ring, components: &[ComponentSpec], k: usize) -> Result<Ideal> {
    for c in components {
        ring.ensure_same(c.ideal.ring())?;
    }
    SymbolicPowers::new(components).bound(ring, k)
}

/// `(x_1, ..., x_{n-d})^(k-d)` for `k > d`, else `(1)`.
pub fn smooth_fitting_formula(ring: &Ring, d: usize, k: usize) -> Result<Ideal> {
    let n = ring.nvars();
    if d >= n {
        return Err(Error::InvalidArgument(format!("germ dimension {d} must be below {n}")));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("Fitting index {k} out of range 1..={n}")));
    }
    if k <= d {
        return Ok(Ideal::unit(ring));
    }
    Ok(coordinate_ideal(ring, d).power((k - d) as u32))
}

fn coordinate_ideal(ring: &Ring, d: usize) -> Ideal {
    let n = ring.nvars();
    Ideal::new(ring, Poly::vars(ring).into_iter().take(n - d).collect()).expect("same ring")
}

/// The generators of `Derlog` of the smooth germ `V(x_1..x_{n-d})`: the
/// tangent partials and all `x_j ∂/∂x_i` with `i, j <= n - d`.
pub fn smooth_germ_generators(ring: &Ring, d: usize) -> Result<FieldModule> {
    let n = ring.nvars();
    if d >= n {
        return Err(Error::InvalidArgument(format!("germ dimension {d} must be below {n}")));
    }
    let c = n - d;
    let vars = Poly::vars(ring);
    let mut gens = Vec::new();
    for k in c..n {
        gens.push(VectorField::partial(ring, k)?);
    }
    for i in 0..c {
        for (j, x) in vars.iter().enumerate().take(c) {
            let _ = j;
            let mut coeffs = vec![Poly::zero(ring); n];
            coeffs[i] = x.clone();
            gens.push(VectorField::new(ring, coeffs)?);
        }
    }
    FieldModule::new(ring, gens)
}

/// Generation test for a smooth germ `V(x_1..x_{n-d})` at `p`: the values
/// of `L` span a `d`-dimensional space and the linearizations of the fields
/// vanishing at `p` induce every endomorphism of the normal space.
pub fn smooth_criterion(l: &FieldModule, d: usize, p: &Point) -> Result<CheckReport> {
    let ring = l.ring();
    ring.ensure_same(p.ring())?;
    let n = ring.nvars();
    if d >= n {
        return Err(Error::InvalidArgument(format!("germ dimension {d} must be below {n}")));
    }
    let c = n - d;
    if p.coords()[..c].iter().any(|v| v != &Rational::from_integer(0.into())) {
        return Err(Error::NotCoordinateGerm(format!(
            "point does not lie on the coordinate subspace of the first {c} variables"
        )));
    }
    let ideal = coordinate_ideal(ring, d);
    for g in l.gens() {
        if !is_logarithmic(g, &ideal)? {
            return Err(Error::NotLogarithmic(g.to_string()));
        }
    }
    let mut report = CheckReport::new("smooth-criterion");
    let m = l.len();
    let mut values = QMat::zeros(n, m);
    for (j, g) in l.gens().iter().enumerate() {
        for (i, v) in g.value(p)?.into_iter().enumerate() {
            values.set(i, j, v);
        }
    }
    let span = values.rank();
    report.add("span_dim", Evidence::Integer(span as i64));
    report.add("germ_dim", Evidence::Integer(d as i64));
    if span != d {
        report.set_verdict(false);
        return Ok(report);
    }
    // Quotient coordinates: eliminate the pivots of the span, keep the rest.
    let (echelon, pivots) = values.transpose().rref();
    let free: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let project = |v: Vec<Rational>| -> Vec<Rational> {
        let mut v = v;
        for (r, &pc) in pivots.iter().enumerate() {
            let a = v[pc].clone();
            if a != Rational::from_integer(0.into()) {
                for (k, x) in v.iter_mut().enumerate() {
                    *x -= &a * echelon.get(r, k);
                }
            }
        }
        free.iter().map(|&q| v[q].clone()).collect()
    };
    let lins = l.gens().iter().map(|g| g.linearize(p)).collect::<Result<Vec<_>>>()?;
    let mut images = Vec::new();
    for coeffs in values.kernel() {
        let mut dmat = QMat::zeros(n, n);
        for (cj, lin) in coeffs.iter().zip(&lins) {
            for i in 0..n {
                for k in 0..n {
                    let v = dmat.get(i, k) + cj * lin.get(i, k);
                    dmat.set(i, k, v);
                }
            }
        }
        let mut flat = Vec::with_capacity(c * c);
        for &q in &free {
            flat.extend(project(dmat.column(q)));
        }
        images.push(flat);
    }
    let beta_rank = if images.is_empty() { 0 } else { QMat::from_rows(images)?.rank() };
    report.add("beta_rank", Evidence::Integer(beta_rank as i64));
    report.add("required_rank", Evidence::Integer((c * c) as i64));
    report.set_verdict(beta_rank == c * c);
    Ok(report)
}

/// Compares every Fitting ideal of `L` with the smooth-germ formula.
pub fn check_smooth_fitting(l: &FieldModule, d: usize) -> Result<CheckReport> {
    let ring = l.ring();
    let mut flags = BTreeMap::new();
    let mut report = CheckReport::new("smooth-fitting");
    for k in 1..=ring.nvars() {
        let expected = smooth_fitting_formula(ring, d, k)?;
        let actual = l.fitting_ideal(k)?;
        let eq = actual.equals(&expected)?;
        if !eq {
            report.add(&format!("expected_{k}"), Evidence::ideal(&expected));
            report.add(&format!("actual_{k}"), Evidence::ideal(&actual));
        }
        flags.insert(flag_key(k), eq);
    }
    let pass = flags.values().all(|&b| b);
    report.add("equal", Evidence::Flags(flags));
    report.set_verdict(pass);
    Ok(report)
}

/// Outcome of comparing `I_k(L)` with its bound for one `k`.
#[derive(Clone, Debug)]
pub struct BoundRow {
    pub k: usize,
    pub fitting: Ideal,
    pub bound: Ideal,
    pub contained: bool,
    pub exact: bool,
    pub radical: bool,
    /// `(label, I_k ⊄ I(X_s)^(k - dim + 1))` for irreducible components
    /// below `k`.
    pub sharp: Vec<(String, bool)>,
    /// The same test for refinement strata, which carries no guarantee.
    pub sharp_refinement: Vec<(String, bool)>,
}

/// Indices of components contained in a strictly larger supplied one; the
/// others are taken to be the irreducible components of `X`.
pub fn refinement_indices(components: &[ComponentSpec]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (s, cs) in components.iter().enumerate() {
        for ct in components {
            if ct.dim > cs.dim && cs.ideal.contains(&ct.ideal)? {
                out.push(s);
                break;
            }
        }
    }
    Ok(out)
}

/// Containment, exactness, radical equality and sharpness for `k = 1..=kmax`.
pub fn bound_table(
    l: &FieldModule,
    components: &[ComponentSpec],
    kmax: usize,
) -> Result<(Vec<BoundRow>, bool)> {
    let ring = l.ring();
    for c in components {
        ring.ensure_same(c.ideal.ring())?;
    }
    let refinements = refinement_indices(components)?;
    let mut powers = SymbolicPowers::new(components);
    let mut rows = Vec::new();
    for k in 1..=kmax {
        let fitting = l.fitting_ideal(k)?;
        let bound = powers.bound(ring, k)?;
        let contained = bound.contains(&fitting)?;
        let exact = contained && fitting.contains(&bound)?;
        let radical = exact || bound.radical_equal(&fitting)?;
        let mut sharp = Vec::new();
        let mut sharp_refinement = Vec::new();
        for (idx, comp) in components.iter().enumerate() {
            if k > comp.dim {
                let next = powers.get(idx, (k - comp.dim + 1) as u32)?;
                let entry = (comp.label.clone(), !next.contains(&fitting)?);
                if refinements.contains(&idx) {
                    sharp_refinement.push(entry);
                } else {
                    sharp.push(entry);
                }
            }
        }
        rows.push(BoundRow { k, fitting, bound, contained, exact, radical, sharp, sharp_refinement });
    }
    Ok((rows, powers.used_saturation()))
}

/// Verifies `I_k(L) ⊆ bound_k` and the sharpness of the exponents of the
/// irreducible components, and records which bounds are attained exactly
/// or up to radical.
pub fn check_bound_and_sharpness(
    l: &FieldModule,
    components: &[ComponentSpec],
    kmax: usize,
) -> Result<CheckReport> {
    let (rows, saturated) = bound_table(l, components, kmax)?;
    Ok(bound_report(&rows, saturated))
}

pub fn bound_report(rows: &[BoundRow], saturated: bool) -> CheckReport {
    let mut report = CheckReport::new("bound-and-sharpness");
    let mut contained = BTreeMap::new();
    let mut exact = BTreeMap::new();
    let mut radical = BTreeMap::new();
    let mut sharp = BTreeMap::new();
    let mut sharp_refinement = BTreeMap::new();
    for row in rows {
        contained.insert(flag_key(row.k), row.contained);
        exact.insert(flag_key(row.k), row.exact);
        radical.insert(flag_key(row.k), row.radical);
        for (label, s) in &row.sharp {
            sharp.insert(format!("{} {label}", flag_key(row.k)), *s);
        }
        for (label, s) in &row.sharp_refinement {
            sharp_refinement.insert(format!("{} {label}", flag_key(row.k)), *s);
        }
        if !row.contained {
            report.add(&format!("fitting_{}", row.k), Evidence::ideal(&row.fitting));
            report.add(&format!("bound_{}", row.k), Evidence::ideal(&row.bound));
        }
    }
    let pass = contained.values().all(|&b| b) && sharp.values().all(|&b| b);
    report.add("contained", Evidence::Flags(contained));
    report.add("exact", Evidence::Flags(exact));
    report.add("radical", Evidence::Flags(radical));
    report.add("sharp", Evidence::Flags(sharp));
    if !sharp_refinement.is_empty() {
        report.add("sharp_refinement", Evidence::Flags(sharp_refinement));
    }
    if saturated {
        report.caveat(SATURATION_CAVEAT);
    }
    report.set_verdict(pass);
    report
}

/// Passes when `I_{d+1}(L) ⊄ I(X_0)^(2)`; the witness is a generator of
/// `I_{d+1}(L)` outside the symbolic square.
pub fn component_condition(l: &FieldModule, x0: &ComponentSpec) -> Result<CheckReport> {
    l.ring().ensure_same(x0.ideal.ring())?;
    let k = x0.dim + 1;
    let mut report = CheckReport::new("component-condition");
    report.add("component", Evidence::Text(x0.label.clone()));
    report.add("k", Evidence::Integer(k as i64));
    if k > l.ring().nvars() {
        return Err(Error::InvalidArgument(format!("component {} is not proper", x0.label)));
    }
    let fitting = l.fitting_ideal(k)?;
    let square = symbolic_power(&x0.ideal, 2, None)?;
    if square.exclusion.is_some() {
        report.caveat(SATURATION_CAVEAT);
    }
    let outside = square.ideal.first_non_member(&fitting)?.cloned();
    match outside {
        Some(g) => {
            report.add("minor_outside_square", Evidence::poly(&g));
            report.set_verdict(true);
        }
        None => {
            report.add("fitting", Evidence::ideal(&fitting));
            report.add("symbolic_square", Evidence::ideal(&square.ideal));
            report.set_verdict(false);
        }
    }
    Ok(report)
}

fn square_module(fields: &[VectorField], ring: &Ring) -> Result<FieldModule> {
    let n = ring.nvars();
    if fields.len() != n {
        return Err(Error::WrongFieldCount { expected: n, found: fields.len() });
    }
    FieldModule::new(ring, fields.to_vec())
}

/// With `n` fields logarithmic for a reduced `f`: passes when the Saito
/// determinant is a nonzero scalar multiple of `f`, then confirms that the
/// fields generate `Derlog(f)`.
pub fn saito_criterion(fields: &[VectorField], f: &Poly) -> Result<CheckReport> {
    let ring = f.ring();
    let l = square_module(fields, ring)?;
    if !is_reduced(f)? {
        return Err(Error::NotReduced(f.to_string()));
    }
    let mut report = CheckReport::new("saito");
    let det = l.saito_matrix()?.determinant()?;
    report.add("determinant", Evidence::poly(&det));
    let associate = !det.is_zero() && det.is_associate(f);
    report.add("associate", Evidence::Bool(associate));
    if !associate {
        report.set_verdict(false);
        return Ok(report);
    }
    let fi = Ideal::principal(f);
    for g in fields {
        if !is_logarithmic(g, &fi)? {
            return Err(Error::NotLogarithmic(g.to_string()));
        }
    }
    let equal = l.equals(&derlog_hypersurface(f)?)?;
    report.add("module_equal", Evidence::Bool(equal));
    report.set_verdict(equal);
    Ok(report)
}

/// With `n` fields: passes when the determinant `g` is reduced and
/// nonconstant and the fields are closed under brackets; then confirms that
/// they generate `Derlog(g)`.
pub fn saito_second_criterion(fields: &[VectorField], ring: &Ring) -> Result<CheckReport> {
    let l = square_module(fields, ring)?;
    let mut report = CheckReport::new("saito-second");
    let det = l.saito_matrix()?.determinant()?;
    report.add("determinant", Evidence::poly(&det));
    if det.is_zero() || det.is_constant() {
        report.add("reduced", Evidence::Bool(false));
        report.set_verdict(false);
        return Ok(report);
    }
    let reduced = is_reduced(&det)?;
    report.add("reduced", Evidence::Bool(reduced));
    let failure = l.bracket_failure()?;
    report.add("bracket_closed", Evidence::Bool(failure.is_none()));
    if let Some((i, j)) = failure {
        report.add("bracket_outside", Evidence::Indices(vec![i, j]));
    }
    if !reduced || failure.is_some() {
        report.set_verdict(false);
        return Ok(report);
    }
    let equal = l.equals(&derlog_hypersurface(&det)?)?;
    report.add("module_equal", Evidence::Bool(equal));
    report.set_verdict(equal);
    Ok(report)
}

/// Hypotheses of the generalized Saito criterion for `L` and reduced `f`
/// with supplied irreducible factors: the reduced hypersurface part of
/// `V(I_n(L))` is `V(f)`, and every factor satisfies the component
/// condition. Equality with `Derlog(f)` is reported separately.
pub fn generalized_saito_check(
    l: &FieldModule,
    f: &Poly,
    factors: &[Poly],
) -> Result<CheckReport> {
    let ring = l.ring();
    ring.ensure_same(f.ring())?;
    if !is_reduced(f)? {
        return Err(Error::NotReduced(f.to_string()));
    }
    let fi = Ideal::principal(f);
    for g in l.gens() {
        if !is_logarithmic(g, &fi)? {
            return Err(Error::NotLogarithmic(g.to_string()));
        }
    }
    let n = ring.nvars();
    let mut report = CheckReport::new("generalized-saito");
    let fitting = l.fitting_ideal(n)?;
    let hyp1 = if fitting.is_zero() {
        report.add("fitting_zero", Evidence::Bool(true));
        false
    } else {
        let mut g = Poly::zero(ring);
        for p in fitting.canonical_gens() {
            g = gcd_poly(&g, p)?;
        }
        let h = squarefree_part(&g)?;
        report.add("hypersurface_part", Evidence::poly(&h));
        h.is_associate(f)
    };
    report.add("hypothesis_divisor", Evidence::Bool(hyp1));
    let mut hyp2 = true;
    if factors.is_empty() {
        report.caveat("no irreducible factors supplied; component condition not checked");
    }
    for (i, phi) in factors.iter().enumerate() {
        let spec = ComponentSpec::new(&phi.to_string(), Ideal::principal(phi), n - 1)?;
        let sub = component_condition(l, &spec)?;
        report.absorb(&format!("factor_{i}"), &sub);
        hyp2 &= sub.is_pass();
    }
    report.add("hypothesis_components", Evidence::Bool(hyp2));
    let equal = l.equals(&derlog_hypersurface(f)?)?;
    report.add("reflexive_case_conclusion", Evidence::Bool(equal));
    if hyp1 && hyp2 && !equal {
        report.caveat(
            "hypotheses hold; L not reflexive or strictly smaller, \
conclusion about R(R(L)) not machine-checked",
        );
    }
    report.set_verdict(hyp1 && hyp2);
    Ok(report)
}

/// Coefficients of a field with linear coefficients, indexed by `(i, j)`
/// for the coefficient of `x_j` in `η_i`.
fn linear_coordinates(v: &VectorField) -> Option<Vec<Rational>> {
    let n = v.ring().nvars();
    let mut out = vec![Rational::from_integer(0.into()); n * n];
    for (i, c) in v.coeffs().iter().enumerate() {
        for (m, q) in c.terms() {
            if m.degree() != 1 {
                return None;
            }
            let j = (0..n).find(|&j| m.exponent(j) == 1)?;
            out[i * n + j] = q.clone();
        }
    }
    Some(out)
}

/// `n` fields with linear coefficients, closed under brackets as a rational
/// Lie algebra, whose determinant is reduced and homogeneous of degree `n`.
pub fn linear_free_divisor_check(fields: &[VectorField], ring: &Ring) -> Result<CheckReport> {
    let l = square_module(fields, ring)?;
    let n = ring.nvars();
    let mut report = CheckReport::new("linear-free-divisor");
    let coords: Option<Vec<Vec<Rational>>> = fields.iter().map(linear_coordinates).collect();
    report.add("linear", Evidence::Bool(coords.is_some()));
    let Some(coords) = coords else {
        report.set_verdict(false);
        return Ok(report);
    };
    let basis = QMat::from_rows(coords)?.transpose();
    let mut closed = true;
    'pairs: for i in 0..n {
        for j in i + 1..n {
            let b = lie_bracket(&fields[i], &fields[j])?;
            let ok = match linear_coordinates(&b) {
                Some(v) => basis.solve(&v)?.is_some(),
                None => false,
            };
            if !ok {
                report.add("bracket_outside", Evidence::Indices(vec![i, j]));
                closed = false;
                break 'pairs;
            }
        }
    }
    report.add("bracket_closed", Evidence::Bool(closed));
    let det = l.saito_matrix()?.determinant()?;
    report.add("determinant", Evidence::poly(&det));
    let degree_ok = !det.is_zero() && det.is_homogeneous() && det.total_degree() == Some(n as u32);
    let reduced = !det.is_zero() && is_reduced(&det)?;
    report.add("homogeneous_degree_n", Evidence::Bool(degree_ok));
    report.add("reduced", Evidence::Bool(reduced));
    if !(closed && degree_ok && reduced) {
        report.set_verdict(false);
        return Ok(report);
    }
    let equal = l.equals(&derlog_hypersurface(&det)?)?;
    report.add("module_equal", Evidence::Bool(equal));
    report.set_verdict(equal);
    Ok(report)
}
