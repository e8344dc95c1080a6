//! Multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{Point, Ring};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial in canonical form: terms strictly descending in the ring's
/// order, no zero coefficients. The empty term list is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Poly {
        Poly::monomial(ring, Monomial::one(), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, i: usize) -> Result<Poly> {
        if i >= ring.nvars() {
            return Err(Error::IndexOutOfRange { index: i, len: ring.nvars() });
        }
        Ok(Poly::monomial(ring, Monomial::var(i), Rational::one()))
    }

    /// All ring variables as polynomials, in ring order.
    pub fn vars(ring: &Ring) -> Vec<Poly> {
        (0..ring.nvars())
            .map(|i| Poly::monomial(ring, Monomial::var(i), Rational::one()))
            .collect()
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, Rational)>) -> Poly {
        let (order, n) = (ring.order(), ring.nvars());
        terms.sort_by(|a, b| b.0.cmp_by(&a.0, order, n));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { ring: ring.clone(), terms: out }
    }

    /// Assumes `terms` is already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Poly {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Lowest total degree of a term (the order of vanishing at the origin).
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Weighted degree if every term has the same weighted degree.
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        let n = self.ring.nvars();
        let wdeg = |m: &Monomial| (0..n).map(|i| weights[i] * m.exponent(i) as i64).sum::<i64>();
        let first = wdeg(&self.terms.first()?.0);
        self.terms.iter().all(|(m, _)| wdeg(m) == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Multiplies by the monomial term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Scales to integer coefficients with gcd one and positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut factor = Rational::new(den, num);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (order, n) = (self.ring.order(), self.ring.nvars());
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_by(mb, order, n) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, if negate { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (*m, if negate { -c } else { c.clone() })),
        );
        Poly { ring: self.ring.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.ring.ensure_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return Ok(big.mul_term(m, c));
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Ok(Poly::from_terms(&self.ring, terms))
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Result<Poly> {
        if i >= self.ring.nvars() {
            return Err(Error::IndexOutOfRange { index: i, len: self.ring.nvars() });
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| m.derive(i).map(|(e, dm)| (dm, c * rat(e as i64))))
            .collect();
        // Differentiation in one variable keeps the relative order of the
        // surviving terms only for some orders, so re-normalize.
        Ok(Poly::from_terms(&self.ring, terms))
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.ring.nvars()).map(|i| self.derivative(i).expect("index in range")).collect()
    }

    pub fn evaluate(&self, p: &Point) -> Result<Rational> {
        self.ring.ensure_same(p.ring())?;
        let n = self.ring.nvars();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..n {
                let e = m.exponent(i);
                if e > 0 {
                    v *= num_traits::pow(p.coords()[i].clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        self.ring.ensure_same(&divisor.ring)?;
        if divisor.is_zero() {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        }
        let (lm, lc) = (divisor.terms[0].0, divisor.terms[0].1.clone());
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let Some(q) = m.div(&lm) else {
                return Ok(None);
            };
            let qc = c / &lc;
            rem = &rem - &divisor.mul_term(&q, &qc);
            quotient.push((q, qc));
        }
        Ok(Some(Poly::from_sorted_terms(&self.ring, quotient)))
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to `map[i]`.
    pub fn remap(&self, target: &Ring, map: &[usize]) -> Poly {
        let n = self.ring.nvars();
        let terms = self.terms.iter().map(|(m, c)| (m.remap(n, map), c.clone())).collect();
        Poly::from_terms(target, terms)
    }

    /// Same polynomial viewed in another ring with identical variables.
    pub fn with_ring(&self, target: &Ring) -> Poly {
        Poly::from_terms(target, self.terms.clone())
    }

    /// `true` when `other` is a nonzero rational multiple of `self`.
    pub fn is_associate(&self, other: &Poly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.monic() == other.monic()
    }

    /// The variables that occur.
    pub fn support(&self) -> Vec<usize> {
        let mask = self.terms.iter().fold(0u32, |acc, (m, _)| acc | m.support_mask());
        (0..self.ring.nvars()).filter(|i| mask & (1 << i) != 0).collect()
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, name) in ring.vars().iter().enumerate() {
        let e = m.exponent(i);
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Writes `|c|*m` (or just `m` / `|c|`).
pub(crate) fn fmt_abs_term(
    f: &mut fmt::Formatter<'_>,
    ring: &Ring,
    m: &Monomial,
    c: &Rational,
) -> fmt::Result {
    let a = c.abs();
    if m.is_one() {
        write!(f, "{a}")
    } else if a.is_one() {
        fmt_monomial(f, ring, m)
    } else {
        write!(f, "{a}*")?;
        fmt_monomial(f, ring, m)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            fmt_abs_term(f, &self.ring, m, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
