//! Gröbner bases of ideals and of submodules of free modules, and syzygies.

mod engine;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

pub(crate) use engine::{Basis, Buchberger, Term, TermOrder, Vector};

use crate::error::{Error, Result};
use crate::matrix::PolyMat;
use crate::monomial::Monomial;
use crate::poly::{Poly, Rational};
use crate::ring::{MonomialOrder, Ring};

/// An element of the free module `R^m`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeVec {
    ring: Ring,
    entries: Vec<Poly>,
}

impl FreeVec {
    pub fn new(ring: &Ring, entries: Vec<Poly>) -> Result<FreeVec> {
        for e in &entries {
            ring.ensure_same(e.ring())?;
        }
        Ok(FreeVec { ring: ring.clone(), entries })
    }

    pub fn zero(ring: &Ring, rank: usize) -> FreeVec {
        FreeVec { ring: ring.clone(), entries: vec![Poly::zero(ring); rank] }
    }

    /// The `i`-th standard basis vector of `R^rank`.
    pub fn unit(ring: &Ring, rank: usize, i: usize) -> FreeVec {
        let mut v = FreeVec::zero(ring, rank);
        v.entries[i] = Poly::one(ring);
        v
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Poly> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, f: &Poly) -> FreeVec {
        FreeVec { ring: self.ring.clone(), entries: self.entries.iter().map(|e| e * f).collect() }
    }

    pub fn checked_add(&self, other: &FreeVec) -> Result<FreeVec> {
        self.ring.ensure_same(&other.ring)?;
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(FreeVec { ring: self.ring.clone(), entries })
    }

    /// Largest total degree among the entries.
    pub fn degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(Poly::total_degree).max()
    }
}

impl fmt::Display for FreeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for FreeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeVec({self})")
    }
}

pub(crate) fn term_order(ring: &Ring) -> TermOrder {
    TermOrder { order: ring.order(), nvars: ring.nvars(), split: u32::MAX }
}

/// Converts polynomial entries (entry `i` at position `offset + i`) to a
/// primitive integer vector. Returns the vector and the rational `d` with
/// `vector == d * input`.
pub(crate) fn to_vector(ring: &Ring, entries: &[Poly], offset: usize) -> (Vector, BigRational) {
    let ord = term_order(ring);
    let mut den = BigInt::one();
    for e in entries {
        for (_, c) in e.terms() {
            den = den.lcm(c.denom());
        }
    }
    let mut terms = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        for (m, c) in e.terms() {
            let scaled = c * Rational::from_integer(den.clone());
            terms.push((Term { pos: (offset + i) as u32, mono: *m }, scaled.to_integer()));
        }
    }
    terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    let mut v = Vector { terms };
    let g = v.make_primitive();
    (v, BigRational::new(den, g))
}

/// Splits a vector back into `rank` polynomial entries starting at `offset`,
/// dividing by `divisor`.
pub(crate) fn from_vector(
    ring: &Ring,
    v: &Vector,
    offset: usize,
    rank: usize,
    divisor: &BigRational,
) -> Vec<Poly> {
    let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
    for (t, c) in &v.terms {
        let p = t.pos as usize;
        if p >= offset && p < offset + rank {
            buckets[p - offset].push((t.mono, Rational::from_integer(c.clone()) / divisor));
        }
    }
    buckets.into_iter().map(|terms| Poly::from_terms(ring, terms)).collect()
}

fn lead_coefficient(v: &Vector) -> BigRational {
    BigRational::from_integer(v.lead().1.clone())
}

/// A reduced Gröbner basis of an ideal: monic elements, ascending by leading
/// monomial.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Poly>,
    basis: Basis,
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter().map(ToString::to_string)).finish()
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.elements == other.elements
    }
}

impl GroebnerBasis {
    pub fn new(ring: &Ring, gens: &[Poly]) -> Result<GroebnerBasis> {
        for g in gens {
            ring.ensure_same(g.ring())?;
        }
        let ord = term_order(ring);
        let vectors = gens.iter().map(|g| to_vector(ring, std::slice::from_ref(g), 0).0).collect();
        Ok(GroebnerBasis::from_reduced(ring, engine::groebner(ord, true, vectors)))
    }

    pub(crate) fn from_reduced(ring: &Ring, reduced: Vec<Vector>) -> GroebnerBasis {
        let elements = reduced
            .iter()
            .map(|v| from_vector(ring, v, 0, 1, &lead_coefficient(v)).remove(0))
            .collect();
        GroebnerBasis { ring: ring.clone(), elements, basis: Basis::from_vectors(term_order(ring), reduced) }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|p| p.leading_monomial().copied()).collect()
    }

    /// Unique normal form of `f`.
    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        self.ring.ensure_same(f.ring())?;
        if f.is_zero() {
            return Ok(f.clone());
        }
        let (v, d) = to_vector(&self.ring, std::slice::from_ref(f), 0);
        let r = self.basis.reduce(v);
        Ok(from_vector(&self.ring, &r.vector, 0, 1, &(r.factor * d)).remove(0))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        self.ring.ensure_same(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.basis.reduces_to_zero(to_vector(&self.ring, std::slice::from_ref(f), 0).0))
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn buchberger_certificate(&self) -> bool {
        certificate(&self.basis)
    }
}

fn certificate(basis: &Basis) -> bool {
    let n = basis.len();
    for i in 0..n {
        for j in i + 1..n {
            if basis.lead(i).pos != basis.lead(j).pos {
                continue;
            }
            let s = engine::s_vector(&basis.ord, &basis.elems[i], &basis.elems[j]);
            if !s.is_zero() && !basis.reduces_to_zero(s) {
                return false;
            }
        }
    }
    true
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(ring: &Ring, gens: &[Poly]) -> Result<GroebnerBasis> {
    GroebnerBasis::new(ring, gens)
}

/// Incremental construction of an ideal basis; generators that already lie
/// in the ideal are reported and skipped.
pub(crate) struct IdealBuilder {
    ring: Ring,
    bb: Buchberger,
}

impl IdealBuilder {
    pub fn new(ring: &Ring) -> IdealBuilder {
        IdealBuilder { ring: ring.clone(), bb: Buchberger::new(term_order(ring), true) }
    }

    /// Adds `f` and completes; returns `false` if `f` was already a member.
    pub fn insert(&mut self, f: &Poly) -> bool {
        if f.is_zero() {
            return false;
        }
        let added = self.bb.insert(to_vector(&self.ring, std::slice::from_ref(f), 0).0);
        if added {
            self.bb.complete();
        }
        added
    }

    pub fn is_unit(&self) -> bool {
        self.bb.is_unit()
    }

    pub fn finish(self) -> GroebnerBasis {
        GroebnerBasis::from_reduced(&self.ring, self.bb.reduced())
    }

    /// A frozen copy of the current (complete) basis for membership tests.
    pub fn snapshot(&self) -> BasisSnapshot {
        BasisSnapshot { ring: self.ring.clone(), basis: self.bb.basis().clone() }
    }
}

pub(crate) struct BasisSnapshot {
    ring: Ring,
    basis: Basis,
}

impl BasisSnapshot {
    pub fn contains(&self, f: &Poly) -> Result<bool> {
        self.ring.ensure_same(f.ring())?;
        Ok(f.is_zero()
            || self.basis.reduces_to_zero(to_vector(&self.ring, std::slice::from_ref(f), 0).0))
    }
}

/// A reduced Gröbner basis of a submodule of `R^rank` under the
/// position-over-term order.
#[derive(Clone)]
pub struct ModuleGroebnerBasis {
    ring: Ring,
    rank: usize,
    elements: Vec<FreeVec>,
    basis: Basis,
}

impl fmt::Debug for ModuleGroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter().map(ToString::to_string)).finish()
    }
}

impl ModuleGroebnerBasis {
    pub fn new(ring: &Ring, rank: usize, gens: &[FreeVec]) -> Result<ModuleGroebnerBasis> {
        for g in gens {
            ring.ensure_same(g.ring())?;
            if g.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: g.rank() });
            }
        }
        let ord = term_order(ring);
        let vectors = gens.iter().map(|g| to_vector(ring, g.entries(), 0).0).collect();
        let reduced = engine::groebner(ord, rank == 1, vectors);
        Ok(ModuleGroebnerBasis::from_reduced(ring, rank, reduced))
    }

    fn from_reduced(ring: &Ring, rank: usize, reduced: Vec<Vector>) -> ModuleGroebnerBasis {
        let elements = reduced
            .iter()
            .map(|v| FreeVec {
                ring: ring.clone(),
                entries: from_vector(ring, v, 0, rank, &lead_coefficient(v)),
            })
            .collect();
        ModuleGroebnerBasis {
            ring: ring.clone(),
            rank,
            elements,
            basis: Basis::from_vectors(term_order(ring), reduced),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[FreeVec] {
        &self.elements
    }

    pub fn reduce(&self, v: &FreeVec) -> Result<FreeVec> {
        self.check(v)?;
        if v.is_zero() {
            return Ok(v.clone());
        }
        let (vec, d) = to_vector(&self.ring, v.entries(), 0);
        let r = self.basis.reduce(vec);
        Ok(FreeVec {
            ring: self.ring.clone(),
            entries: from_vector(&self.ring, &r.vector, 0, self.rank, &(r.factor * d)),
        })
    }

    pub fn contains(&self, v: &FreeVec) -> Result<bool> {
        self.check(v)?;
        if v.is_zero() {
            return Ok(true);
        }
        Ok(self.basis.reduces_to_zero(to_vector(&self.ring, v.entries(), 0).0))
    }

    pub fn buchberger_certificate(&self) -> bool {
        certificate(&self.basis)
    }

    fn check(&self, v: &FreeVec) -> Result<()> {
        self.ring.ensure_same(v.ring())?;
        if v.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: v.rank() });
        }
        Ok(())
    }
}

/// Generators of the kernel of `m: R^cols -> R^rows`, restricted to the
/// first `keep` coordinates of the source.
///
/// This is the projection of the syzygy module onto those coordinates,
/// i.e. `{v in R^keep : m[.., ..keep] v in image(m[.., keep..])}`.
pub(crate) fn projected_syzygies(m: &PolyMat, keep: usize) -> Result<Vec<FreeVec>> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyMatrix);
    }
    assert!(keep <= cols);
    let ring = m.ring();
    if ring.order() != MonomialOrder::DegRevLex {
        let work = ring.with_order(MonomialOrder::DegRevLex)?;
        let mut copy = PolyMat::zeros(&work, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                copy.set(i, j, m.get(i, j).with_ring(&work));
            }
        }
        return Ok(projected_syzygies(&copy, keep)?
            .into_iter()
            .map(|v| FreeVec { ring: ring.clone(), entries: v.entries.iter().map(|e| e.with_ring(ring)).collect() })
            .collect());
    }
    let ord = TermOrder { split: rows as u32, ..term_order(ring) };
    let mut gens = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut entries: Vec<Poly> = (0..rows).map(|i| m.get(i, j).clone()).collect();
        if j < keep {
            entries.extend((0..keep).map(|k| {
                if k == j { Poly::one(ring) } else { Poly::zero(ring) }
            }));
        }
        let mut v = to_vector(ring, &entries, 0).0;
        v.terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        gens.push(v);
    }
    let reduced = engine::groebner(ord, false, gens);
    let one = BigRational::one();
    Ok(reduced
        .iter()
        .filter(|v| v.lead().0.pos as usize >= rows)
        .map(|v| {
            let entries = from_vector(ring, v, rows, keep, &one);
            let lc = entries
                .iter()
                .find(|e| !e.is_zero())
                .and_then(|e| e.leading_coefficient().cloned())
                .unwrap_or_else(BigRational::one);
            FreeVec { ring: ring.clone(), entries: entries.iter().map(|e| e.scale(&lc.recip())).collect() }
        })
        .filter(|v| !v.is_zero())
        .collect())
}

/// A generating set of `{v : m v = 0}`; each returned vector satisfies
/// `m v = 0` exactly.
pub fn syzygies(m: &PolyMat) -> Result<Vec<FreeVec>> {
    projected_syzygies(m, m.cols())
}
