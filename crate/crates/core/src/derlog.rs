//! Vector fields, modules of vector fields and logarithmic derivations.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{projected_syzygies, FreeVec, ModuleGroebnerBasis};
use crate::ideal::{minors_ideal, Ideal};
use crate::linalg::QMat;
use crate::matrix::PolyMat;
use crate::monomial::Monomial;
use crate::parse::parse_field_coeffs;
use crate::poly::{fmt_abs_term, Poly, Rational};
use crate::ring::{Point, Ring};

/// `Σ coeffs[i] ∂/∂x_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    ring: Ring,
    coeffs: Vec<Poly>,
}

impl VectorField {
    pub fn new(ring: &Ring, coeffs: Vec<Poly>) -> Result<VectorField> {
        if coeffs.len() != ring.nvars() {
            return Err(Error::RankMismatch { expected: ring.nvars(), found: coeffs.len() });
        }
        for c in &coeffs {
            ring.ensure_same(c.ring())?;
        }
        Ok(VectorField { ring: ring.clone(), coeffs })
    }

    /// Parses text such as `x*d/dx - (x - y)*d/dy`.
    pub fn parse(text: &str, ring: &Ring) -> Result<VectorField> {
        VectorField::new(ring, parse_field_coeffs(text, ring)?)
    }

    pub fn zero(ring: &Ring) -> VectorField {
        VectorField { ring: ring.clone(), coeffs: vec![Poly::zero(ring); ring.nvars()] }
    }

    /// The coordinate field `∂/∂x_i`.
    pub fn partial(ring: &Ring, i: usize) -> Result<VectorField> {
        if i >= ring.nvars() {
            return Err(Error::IndexOutOfRange { index: i, len: ring.nvars() });
        }
        let mut v = VectorField::zero(ring);
        v.coeffs[i] = Poly::one(ring);
        Ok(v)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// Largest total degree of a coefficient; `None` for the zero field.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.iter().filter_map(Poly::total_degree).max()
    }

    pub fn scale(&self, f: &Poly) -> VectorField {
        VectorField { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| c * f).collect() }
    }

    pub fn checked_add(&self, other: &VectorField) -> Result<VectorField> {
        self.ring.ensure_same(&other.ring)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(VectorField { ring: self.ring.clone(), coeffs })
    }

    pub fn checked_sub(&self, other: &VectorField) -> Result<VectorField> {
        self.ring.ensure_same(&other.ring)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(VectorField { ring: self.ring.clone(), coeffs })
    }

    /// `η(f) = Σ η_i ∂f/∂x_i`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        self.ring.ensure_same(f.ring())?;
        let mut acc = Poly::zero(&self.ring);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &f.derivative(i)?);
            }
        }
        Ok(acc)
    }

    /// The tangent vector `η(p)`.
    pub fn value(&self, p: &Point) -> Result<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.evaluate(p)).collect()
    }

    /// The matrix `(∂η_i/∂x_j)(p)`.
    pub fn linearize(&self, p: &Point) -> Result<QMat> {
        self.ring.ensure_same(p.ring())?;
        let n = self.ring.nvars();
        let mut m = QMat::zeros(n, n);
        for (i, c) in self.coeffs.iter().enumerate() {
            for j in 0..n {
                m.set(i, j, c.derivative(j)?.evaluate(p)?);
            }
        }
        Ok(m)
    }

    pub(crate) fn to_freevec(&self) -> FreeVec {
        FreeVec::new(&self.ring, self.coeffs.clone()).expect("same ring")
    }

    pub(crate) fn from_freevec(v: FreeVec) -> VectorField {
        let ring = v.ring().clone();
        VectorField { ring, coeffs: v.into_entries() }
    }

    /// Scales to integer coefficients with gcd one, the first nonzero
    /// coefficient having a positive leading coefficient.
    pub fn primitive(&self) -> VectorField {
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in &self.coeffs {
            for (_, q) in c.terms() {
                den = den.lcm(q.denom());
                num = num.gcd(q.numer());
            }
        }
        if num.is_zero() {
            return self.clone();
        }
        let mut factor = Rational::new(den, num);
        let first = self.coeffs.iter().find(|c| !c.is_zero()).expect("nonzero");
        if first.leading_coefficient().is_some_and(Signed::is_negative) {
            factor = -factor;
        }
        VectorField {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scale(&factor)).collect(),
        }
    }
}

fn cmp_poly(a: &Poly, b: &Poly) -> Ordering {
    let (order, n) = (a.ring().order(), a.ring().nvars());
    for (ta, tb) in a.terms().iter().zip(b.terms()) {
        let c = ta.0.cmp_by(&tb.0, order, n).then_with(|| ta.1.cmp(&tb.1));
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

/// Sort key for generator output: degree first, then coefficientwise.
fn cmp_fields(a: &VectorField, b: &VectorField) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            // a field with an earlier nonzero coefficient comes first
            let c = y.is_zero().cmp(&x.is_zero()).reverse().then_with(|| cmp_poly(x, y).reverse());
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(self.ring.vars()) {
            if c.is_zero() {
                continue;
            }
            let negative = c.leading_coefficient().is_some_and(Signed::is_negative);
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if c.len() == 1 {
                let (m, q) = &c.terms()[0];
                if !(m.is_one() && q.abs().is_one()) {
                    fmt_abs_term(f, &self.ring, m, q)?;
                    write!(f, "*")?;
                }
            } else if negative {
                write!(f, "({})*", -c)?;
            } else {
                write!(f, "({c})*")?;
            }
            write!(f, "d/d{name}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField({self})")
    }
}

/// A module of vector fields given by generators.
#[derive(Clone)]
pub struct FieldModule {
    ring: Ring,
    gens: Vec<VectorField>,
    gb: OnceLock<ModuleGroebnerBasis>,
}

impl fmt::Debug for FieldModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter().map(ToString::to_string)).finish()
    }
}

impl FieldModule {
    pub fn new(ring: &Ring, gens: Vec<VectorField>) -> Result<FieldModule> {
        for g in &gens {
            ring.ensure_same(g.ring())?;
        }
        Ok(FieldModule { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    /// Parses a comma separated list of fields.
    pub fn parse(text: &str, ring: &Ring) -> Result<FieldModule> {
        let gens = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| VectorField::parse(s, ring))
            .collect::<Result<Vec<_>>>()?;
        FieldModule::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[VectorField] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn nonzero_gens(&self) -> impl Iterator<Item = &VectorField> {
        self.gens.iter().filter(|g| !g.is_zero())
    }

    pub fn gb(&self) -> &ModuleGroebnerBasis {
        self.gb.get_or_init(|| {
            let vecs: Vec<FreeVec> = self.nonzero_gens().map(VectorField::to_freevec).collect();
            ModuleGroebnerBasis::new(&self.ring, self.ring.nvars(), &vecs).expect("same ring")
        })
    }

    /// The `n x m` matrix whose columns are the generators.
    pub fn saito_matrix(&self) -> Result<PolyMat> {
        let cols: Vec<Vec<Poly>> = self.gens.iter().map(|g| g.coeffs.clone()).collect();
        if cols.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        PolyMat::from_columns(&self.ring, self.ring.nvars(), &cols)
    }

    /// The ideal of `k x k` minors of the Saito matrix.
    pub fn fitting_ideal(&self, k: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        if k == 0 || k > n {
            return Err(Error::InvalidArgument(format!("Fitting index {k} out of range 1..={n}")));
        }
        let nonzero: Vec<VectorField> = self.nonzero_gens().cloned().collect();
        if nonzero.len() < k {
            return Ok(Ideal::zero(&self.ring));
        }
        let m = FieldModule::new(&self.ring, nonzero)?.saito_matrix()?;
        minors_ideal(&m, k)
    }

    pub fn contains(&self, v: &VectorField) -> Result<bool> {
        self.ring.ensure_same(v.ring())?;
        self.gb().contains(&v.to_freevec())
    }

    /// `other ⊆ self`.
    pub fn contains_module(&self, other: &FieldModule) -> Result<bool> {
        for g in other.nonzero_gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &FieldModule) -> Result<bool> {
        Ok(self.contains_module(other)? && other.contains_module(self)?)
    }

    /// First pair of generators whose bracket leaves the module.
    pub fn bracket_failure(&self) -> Result<Option<(usize, usize)>> {
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                if !self.contains(&lie_bracket(&self.gens[i], &self.gens[j])?)? {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_bracket_closed(&self) -> Result<bool> {
        Ok(self.bracket_failure()?.is_none())
    }

    /// `dim_Q L / 𝓜 L` for the maximal ideal `𝓜` of the origin, i.e. the
    /// minimal number of generators of the module localized at the origin.
    /// For graded modules this is the global minimal number of generators.
    pub fn minimal_generator_count(&self) -> Result<usize> {
        let gens: Vec<VectorField> = self.nonzero_gens().cloned().collect();
        Ok(independent_modulo_maximal(&self.ring, &gens)?.len())
    }

    /// Rank of the span of the generator values at `p`.
    pub fn span_dim(&self, p: &Point) -> Result<usize> {
        Ok(value_matrix(self, p)?.rank())
    }
}

/// Columns `η_j(p)`.
fn value_matrix(l: &FieldModule, p: &Point) -> Result<QMat> {
    let n = l.ring.nvars();
    let mut m = QMat::zeros(n, l.gens.len());
    for (j, g) in l.gens.iter().enumerate() {
        for (i, v) in g.value(p)?.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Indices of a maximal subset of `gens`, chosen greedily in order, whose
/// images in `L / 𝓜 L` are linearly independent.
fn independent_modulo_maximal(ring: &Ring, gens: &[VectorField]) -> Result<Vec<usize>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let vars = Poly::vars(ring);
    let mut shifted = Vec::with_capacity(gens.len() * vars.len());
    for g in gens {
        for x in &vars {
            shifted.push(g.scale(x).to_freevec());
        }
    }
    let mgb = ModuleGroebnerBasis::new(ring, ring.nvars(), &shifted)?;
    let mut keys: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    let mut kept = Vec::new();
    let mut rank = 0;
    for (idx, g) in gens.iter().enumerate() {
        let nf = mgb.reduce(&g.to_freevec())?;
        let mut row = Vec::new();
        for (pos, c) in nf.entries().iter().enumerate() {
            for (m, q) in c.terms() {
                let next = keys.len();
                let key = *keys.entry((pos, *m)).or_insert(next);
                row.push((key, q.clone()));
            }
        }
        rows.push(row);
        let mut mat = QMat::zeros(kept.len() + 1, keys.len());
        for (r, &k) in kept.iter().chain(std::iter::once(&idx)).enumerate() {
            for (col, q) in &rows[k] {
                mat.set(r, *col, q.clone());
            }
        }
        let new_rank = mat.rank();
        if new_rank > rank {
            rank = new_rank;
            kept.push(idx);
        }
    }
    Ok(kept)
}

/// Normalizes, deduplicates, prunes to a generating subset that is minimal
/// at the origin, and sorts.
fn tidy_generators(ring: &Ring, candidates: Vec<VectorField>) -> Result<Vec<VectorField>> {
    let mut fields: Vec<VectorField> =
        candidates.into_iter().filter(|g| !g.is_zero()).map(|g| g.primitive()).collect();
    fields.sort_by(cmp_fields);
    fields.dedup();
    let kept_idx = independent_modulo_maximal(ring, &fields)?;
    let mut kept: Vec<VectorField> = kept_idx.iter().map(|&i| fields[i].clone()).collect();
    let dropped: Vec<VectorField> = (0..fields.len())
        .filter(|i| !kept_idx.contains(i))
        .map(|i| fields[i].clone())
        .collect();
    let mut module = FieldModule::new(ring, kept.clone())?;
    for d in dropped {
        if !module.contains(&d)? {
            kept.push(d);
            module = FieldModule::new(ring, kept.clone())?;
        }
    }
    kept.sort_by(cmp_fields);
    Ok(kept)
}

pub fn apply_field(eta: &VectorField, f: &Poly) -> Result<Poly> {
    eta.apply(f)
}

/// `η(g) ∈ I` for every generator `g` of `I`.
pub fn is_logarithmic(eta: &VectorField, ideal: &Ideal) -> Result<bool> {
    eta.ring().ensure_same(ideal.ring())?;
    for g in ideal.gens() {
        if !ideal.member(&eta.apply(g)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generators of `{η : η(f) ∈ (f)}`.
pub fn derlog_hypersurface(f: &Poly) -> Result<FieldModule> {
    if f.is_zero() || f.is_constant() {
        return Err(Error::InvalidArgument("Derlog of a zero or unit polynomial".into()));
    }
    let ring = f.ring();
    let mut row = f.gradient();
    row.push(f.clone());
    let m = PolyMat::from_rows(ring, vec![row])?;
    let syz = projected_syzygies(&m, ring.nvars())?;
    let gens = tidy_generators(ring, syz.into_iter().map(VectorField::from_freevec).collect())?;
    FieldModule::new(ring, gens)
}

/// Generators of `{η : η(I) ⊆ I}`.
pub fn derlog_ideal(ideal: &Ideal) -> Result<FieldModule> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidArgument("Derlog of the zero or unit ideal".into()));
    }
    let ring = ideal.ring();
    let gens = ideal.canonical_gens();
    if gens.len() == 1 {
        return derlog_hypersurface(&gens[0]);
    }
    let (n, m) = (ring.nvars(), gens.len());
    let mut mat = PolyMat::zeros(ring, m, n + m * m);
    for (j, g) in gens.iter().enumerate() {
        for (i, d) in g.gradient().into_iter().enumerate() {
            mat.set(j, i, d);
        }
        for (l, h) in gens.iter().enumerate() {
            mat.set(j, n + j * m + l, h.clone());
        }
    }
    let syz = projected_syzygies(&mat, n)?;
    let out = tidy_generators(ring, syz.into_iter().map(VectorField::from_freevec).collect())?;
    FieldModule::new(ring, out)
}

/// `[η, ξ]_i = η(ξ_i) - ξ(η_i)`.
pub fn lie_bracket(eta: &VectorField, xi: &VectorField) -> Result<VectorField> {
    eta.ring.ensure_same(&xi.ring)?;
    let coeffs = eta
        .coeffs
        .iter()
        .zip(&xi.coeffs)
        .map(|(e, x)| Ok(&eta.apply(x)? - &xi.apply(e)?))
        .collect::<Result<Vec<_>>>()?;
    VectorField::new(&eta.ring, coeffs)
}

/// The fields `(∂_j f)∂_i - (∂_i f)∂_j` for `i < j`, followed by `f ∂_i`.
pub fn trivial_generators(f: &Poly) -> Result<FieldModule> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("trivial generators of zero".into()));
    }
    let ring = f.ring();
    let n = ring.nvars();
    let grad = f.gradient();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = VectorField::zero(ring);
            v.coeffs[i] = grad[j].clone();
            v.coeffs[j] = -&grad[i];
            gens.push(v);
        }
    }
    for i in 0..n {
        let mut v = VectorField::zero(ring);
        v.coeffs[i] = f.clone();
        gens.push(v);
    }
    FieldModule::new(ring, gens)
}

/// `Σ w_i x_i ∂/∂x_i`.
pub fn euler_field(ring: &Ring, weights: &[Rational]) -> Result<VectorField> {
    if weights.len() != ring.nvars() {
        return Err(Error::RankMismatch { expected: ring.nvars(), found: weights.len() });
    }
    let coeffs = Poly::vars(ring).iter().zip(weights).map(|(x, w)| x.scale(w)).collect();
    VectorField::new(ring, coeffs)
}

pub fn linearize(eta: &VectorField, p: &Point) -> Result<QMat> {
    eta.linearize(p)
}

pub fn field_value(eta: &VectorField, p: &Point) -> Result<Vec<Rational>> {
    eta.ring().ensure_same(p.ring())?;
    eta.value(p)
}

pub fn span_dim(l: &FieldModule, p: &Point) -> Result<usize> {
    l.ring().ensure_same(p.ring())?;
    l.span_dim(p)
}

pub fn saito_matrix(l: &FieldModule) -> Result<PolyMat> {
    l.saito_matrix()
}

pub fn fitting_ideal(l: &FieldModule, k: usize) -> Result<Ideal> {
    l.fitting_ideal(k)
}

pub fn module_membership(eta: &VectorField, l: &FieldModule) -> Result<bool> {
    l.contains(eta)
}

pub fn module_equal(l: &FieldModule, m: &FieldModule) -> Result<bool> {
    l.ring().ensure_same(m.ring())?;
    l.equals(m)
}

pub fn minimal_generator_count(l: &FieldModule) -> Result<usize> {
    l.minimal_generator_count()
}
