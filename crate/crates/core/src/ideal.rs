//! Ideal-level operations on top of the Gröbner engine.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GroebnerBasis, IdealBuilder};
use crate::matrix::PolyMat;
use crate::monomial::Monomial;
use crate::parse::parse_poly_list;
use crate::poly::Poly;
use crate::ring::{MonomialOrder, Ring};

/// A finitely generated ideal with a lazily computed reduced Gröbner basis.
///
/// Equality of ideals is semantic; use [`Ideal::equals`].
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    gb: OnceLock<GroebnerBasis>,
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

/// Drops the first `k` variables of `p` (which must not occur) and
/// re-expresses it in `target`.
fn project_out(p: &Poly, k: usize, target: &Ring) -> Poly {
    let n = p.ring().nvars();
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            debug_assert!((0..k).all(|i| m.exponent(i) == 0));
            let exps: Vec<u32> = (k..n).map(|i| m.exponent(i)).collect();
            (Monomial::from_exponents(&exps), c.clone())
        })
        .collect();
    Poly::from_terms(target, terms)
}

/// Embeds `p` into `extended`, whose first `k` variables are new.
fn shift_in(p: &Poly, k: usize, extended: &Ring) -> Poly {
    let map: Vec<usize> = (0..p.ring().nvars()).map(|i| i + k).collect();
    p.remap(extended, &map)
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Result<Ideal> {
        for g in &gens {
            ring.ensure_same(g.ring())?;
        }
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub(crate) fn with_basis(ring: &Ring, gens: Vec<Poly>, gb: GroebnerBasis) -> Ideal {
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Ideal { ring: ring.clone(), gens, gb: cell }
    }

    /// Parses a comma separated generator list.
    pub fn parse(text: &str, ring: &Ring) -> Result<Ideal> {
        Ideal::new(ring, parse_poly_list(text, ring)?)
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Poly::one(ring)]).expect("same ring")
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("same ring")
    }

    /// The maximal ideal of the origin, generated by all variables.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal::new(ring, Poly::vars(ring)).expect("same ring")
    }

    pub fn principal(f: &Poly) -> Ideal {
        Ideal::new(f.ring(), vec![f.clone()]).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| groebner_basis(&self.ring, &self.gens).expect("ring checked"))
    }

    /// The reduced Gröbner basis as a canonical generator list.
    pub fn canonical_gens(&self) -> &[Poly] {
        self.gb().elements()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Poly::is_zero)
    }

    /// `f ∈ self`.
    pub fn member(&self, f: &Poly) -> Result<bool> {
        self.gb().contains(f)
    }

    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        self.gb().reduce(f)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First generator of `other` outside `self`, if any.
    pub fn first_non_member<'a>(&self, other: &'a Ideal) -> Result<Option<&'a Poly>> {
        self.ring.ensure_same(&other.ring)?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    /// Semantic equality: identical reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.gb() == other.gb())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        let mut gens = Vec::new();
        for a in self.nonzero_gens() {
            for b in other.nonzero_gens() {
                push_unique(&mut gens, a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    fn nonzero_gens(&self) -> impl Iterator<Item = &Poly> {
        self.gens.iter().filter(|g| !g.is_zero())
    }

    /// `self ∩ other` via `t*self + (1-t)*other` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let ext = self.ring.extend_front("t", 1)?;
        let t = Poly::var(&ext, 0)?;
        let one_minus_t = &Poly::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in self.canonical_gens() {
            gens.push(&t * &shift_in(g, 1, &ext));
        }
        for g in other.canonical_gens() {
            gens.push(&one_minus_t * &shift_in(g, 1, &ext));
        }
        let gb = groebner_basis(&ext, &gens)?;
        let kept: Vec<Poly> = gb
            .elements()
            .iter()
            .filter(|p| p.leading_monomial().is_some_and(|m| m.exponent(0) == 0))
            .map(|p| project_out(p, 1, &self.ring))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Intersection of several ideals, folded left to right.
    pub fn intersect_all(ring: &Ring, ideals: &[Ideal]) -> Result<Ideal> {
        let mut acc = Ideal::unit(ring);
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// `(self : g)`.
    pub fn quotient_by(&self, g: &Poly) -> Result<Ideal> {
        self.ring.ensure_same(g.ring())?;
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        if g.is_unit() || self.is_zero() {
            return Ok(self.clone());
        }
        let meet = self.intersect(&Ideal::principal(g))?;
        let gens = meet
            .canonical_gens()
            .iter()
            .map(|p| p.div_exact(g).map(|q| q.expect("intersection lies in (g)")))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `(self : other) = {f : f*other ⊆ self}`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in other.nonzero_gens() {
            acc = acc.intersect(&self.quotient_by(g)?)?;
        }
        Ok(acc)
    }

    /// `(self : other^∞)`, iterating quotients until they stabilize.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        if other.is_zero() {
            return Err(Error::InvalidArgument("saturation by the zero ideal".into()));
        }
        let mut current = self.clone();
        loop {
            let next = current.quotient(other)?;
            if next.equals(&current)? {
                return Ok(next);
            }
            current = next;
        }
    }

    /// Ordinary power, generated by products of generators.
    pub fn power(&self, k: u32) -> Ideal {
        if k == 0 {
            return Ideal::unit(&self.ring);
        }
        let base: Vec<Poly> = self.nonzero_gens().cloned().collect();
        let mut out = Vec::new();
        power_products(&base, 0, k, Poly::one(&self.ring), &mut out);
        Ideal::new(&self.ring, out).expect("same ring")
    }

    /// Krull dimension of `R/I`, or -1 for the unit ideal.
    pub fn dimension(&self) -> i64 {
        let gb = self.gb();
        if gb.is_unit() {
            return -1;
        }
        let n = self.ring.nvars();
        let leads: Vec<u32> = gb.leading_monomials().iter().map(Monomial::support_mask).collect();
        (0u32..1 << n)
            .filter(|&s| leads.iter().all(|&l| l & !s != 0))
            .map(|s| s.count_ones() as i64)
            .max()
            .unwrap_or(0)
    }

    /// `n - dim`; the unit ideal has codimension `n + 1`.
    pub fn codim(&self) -> i64 {
        self.ring.nvars() as i64 - self.dimension()
    }

    /// `f ∈ √self`, decided by `1 ∈ self + (1 - t f)`.
    pub fn radical_member(&self, f: &Poly) -> Result<bool> {
        if self.member(f)? {
            return Ok(true);
        }
        let ext = self.ring.extend_front("t", 1)?.with_order(MonomialOrder::DegRevLex)?;
        let t = Poly::var(&ext, 0)?;
        let mut gens: Vec<Poly> =
            self.canonical_gens().iter().map(|g| shift_in(g, 1, &ext)).collect();
        gens.push(&Poly::one(&ext) - &(&t * &shift_in(f, 1, &ext)));
        Ok(groebner_basis(&ext, &gens)?.is_unit())
    }

    /// `other ⊆ √self`.
    pub fn radical_contains(&self, other: &Ideal) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        for g in other.canonical_gens() {
            if !self.radical_member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `√self = √other`, by mutual radical membership of generators.
    pub fn radical_equal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.radical_contains(other)? && other.radical_contains(self)?)
    }

    /// A subset of the reduced Gröbner basis still generating the ideal,
    /// obtained by greedily dropping redundant elements.
    pub fn minimal_generating_subset(&self) -> Result<Vec<Poly>> {
        let mut kept: Vec<Poly> = self.canonical_gens().to_vec();
        let mut i = 0;
        while i < kept.len() {
            let others: Vec<Poly> =
                kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            if groebner_basis(&self.ring, &others)?.contains(&kept[i])? {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(kept)
    }
}

fn push_unique(v: &mut Vec<Poly>, p: Poly) {
    if !p.is_zero() && !v.contains(&p) {
        v.push(p);
    }
}

fn power_products(base: &[Poly], start: usize, k: u32, acc: Poly, out: &mut Vec<Poly>) {
    if k == 0 {
        push_unique(out, acc);
        return;
    }
    for i in start..base.len() {
        power_products(base, i, k - 1, &acc * &base[i], out);
    }
}

/// Generators of `I ∩ Q[x_{k+1}, ...]` in the ring of the remaining
/// variables (degrevlex). Requires a block or lex order eliminating the
/// first `k` variables.
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    match ring.order() {
        MonomialOrder::Block(b) if b == k => {}
        MonomialOrder::Lex => {}
        other => {
            return Err(Error::WrongOrder(format!(
                "eliminating {k} variables needs block({k}) or lex, found {other}"
            )))
        }
    }
    if k >= ring.nvars() {
        return Err(Error::WrongOrder(format!("cannot eliminate all {k} variables")));
    }
    let sub = Ring::degrevlex(&ring.vars()[k..])?;
    let gens = ideal
        .canonical_gens()
        .iter()
        .filter(|p| p.support().iter().all(|&i| i >= k))
        .map(|p| project_out(p, k, &sub))
        .collect();
    Ideal::new(&sub, gens)
}

/// Monic greatest common divisor, via `(f) ∩ (g) = (lcm)`.
pub fn gcd_poly(f: &Poly, g: &Poly) -> Result<Poly> {
    f.ring().ensure_same(g.ring())?;
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::InvalidArgument("gcd of two zero polynomials".into())),
        (true, false) => return Ok(g.monic()),
        (false, true) => return Ok(f.monic()),
        _ => {}
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Poly::one(f.ring()));
    }
    let meet = Ideal::principal(f).intersect(&Ideal::principal(g))?;
    let lcm = &meet.canonical_gens()[0];
    let prod = f * g;
    Ok(prod.div_exact(lcm)?.expect("lcm divides the product").monic())
}

fn gcd_many(polys: &[Poly]) -> Result<Poly> {
    let mut nonzero = polys.iter().filter(|p| !p.is_zero());
    let Some(first) = nonzero.next() else {
        return Err(Error::InvalidArgument("gcd of zero polynomials".into()));
    };
    let mut acc = first.monic();
    for p in nonzero {
        if acc.is_constant() {
            break;
        }
        acc = gcd_poly(&acc, p)?;
    }
    Ok(acc)
}

/// Product of the distinct irreducible factors, up to a scalar (monic).
pub fn squarefree_part(f: &Poly) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("squarefree part of zero".into()));
    }
    let mut h = f.monic();
    loop {
        if h.is_constant() {
            return Ok(Poly::one(f.ring()));
        }
        let mut polys = vec![h.clone()];
        polys.extend(h.gradient());
        let g = gcd_many(&polys)?;
        if g.is_constant() {
            return Ok(h);
        }
        h = h.div_exact(&g)?.expect("gcd divides").monic();
    }
}

/// `true` when `f` has no repeated factor.
pub fn is_reduced(f: &Poly) -> Result<bool> {
    Ok(squarefree_part(f)?.is_associate(f) || f.is_unit())
}

/// Ideal generated by the `k x k` minors of `m`.
///
/// Minors are produced in lexicographic (columns, rows) order; a minor is
/// kept as a generator only if it is not already in the ideal of the ones
/// kept before it, so the generator list is deterministic.
pub fn minors_ideal(m: &PolyMat, k: usize) -> Result<Ideal> {
    let ring = m.ring().clone();
    if k == 0 || k > m.rows().min(m.cols()) {
        return Err(Error::InvalidArgument(format!(
            "minor size {k} out of range 1..={}",
            m.rows().min(m.cols())
        )));
    }
    let depth = if m.cols() > 12 { 2 } else { 1 };
    let prefixes = m.minor_prefixes(k, depth);
    let mut builder = IdealBuilder::new(&ring);
    let mut gens = Vec::new();
    const BATCH: usize = 32;
    'outer: for batch in prefixes.chunks(BATCH) {
        let minors: Vec<Poly> = batch
            .par_iter()
            .map(|prefix| m.nonzero_minors_with_prefix(k, prefix))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        let mut seen = std::collections::HashSet::new();
        let minors: Vec<Poly> = minors
            .into_iter()
            .map(|p| p.monic())
            .filter(|p| seen.insert(p.to_string()))
            .collect();
        let snapshot = builder.snapshot();
        let survivors: Vec<Poly> = minors
            .into_par_iter()
            .filter(|p| !snapshot.contains(p).expect("same ring"))
            .collect();
        for p in survivors {
            if builder.insert(&p) {
                gens.push(p);
                if builder.is_unit() {
                    break 'outer;
                }
            }
        }
    }
    let gb = builder.finish();
    Ok(Ideal::with_basis(&ring, gens, gb))
}

/// The matrix `(∂f_j/∂x_i)` with one row per generator.
pub fn jacobian(gens: &[Poly]) -> Result<PolyMat> {
    let Some(first) = gens.first() else {
        return Err(Error::EmptyMatrix);
    };
    let ring = first.ring().clone();
    PolyMat::from_rows(&ring, gens.iter().map(Poly::gradient).collect())
}

/// `I + (codim-sized minors of the Jacobian)`; no radical is taken and the
/// input is assumed equidimensional.
pub fn singular_locus_ideal(ideal: &Ideal) -> Result<Ideal> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidArgument("singular locus of the zero or unit ideal".into()));
    }
    let gens: Vec<Poly> = ideal.canonical_gens().to_vec();
    let c = ideal.codim() as usize;
    let jac = jacobian(&gens)?;
    if c > jac.rows().min(jac.cols()) {
        return Ok(ideal.clone());
    }
    let minors = minors_ideal(&jac, c)?;
    ideal.sum(&minors)
}

/// How a symbolic power was obtained.
#[derive(Clone, Debug)]
pub struct SymbolicPower {
    pub ideal: Ideal,
    /// The ideal is a complete intersection, so the ordinary power was used.
    pub complete_intersection: bool,
    /// Ideal the ordinary power was saturated by, otherwise.
    pub exclusion: Option<Ideal>,
}

/// `P^(ℓ)` for a prime `P`: the ordinary power when `P` is a complete
/// intersection, else the saturation of `P^ℓ` by `exclusion` (default: the
/// singular locus of `V(P)`). The latter is exact when every embedded prime
/// of `P^ℓ` contains the exclusion ideal.
pub fn symbolic_power(p: &Ideal, ell: u32, exclusion: Option<&Ideal>) -> Result<SymbolicPower> {
    if ell < 1 {
        return Err(Error::InvalidArgument("symbolic power exponent must be at least 1".into()));
    }
    if p.is_unit() {
        return Ok(SymbolicPower { ideal: p.clone(), complete_intersection: true, exclusion: None });
    }
    let minimal = p.minimal_generating_subset()?;
    if minimal.len() as i64 <= p.codim() {
        let base = Ideal::new(p.ring(), minimal)?;
        return Ok(SymbolicPower { ideal: base.power(ell), complete_intersection: true, exclusion: None });
    }
    let ordinary = p.power(ell);
    if ell == 1 {
        return Ok(SymbolicPower { ideal: ordinary, complete_intersection: false, exclusion: None });
    }
    let e = match exclusion {
        Some(e) => e.clone(),
        None => singular_locus_ideal(p)?,
    };
    let ideal = ordinary.saturate(&e)?;
    Ok(SymbolicPower { ideal, complete_intersection: false, exclusion: Some(e) })
}
