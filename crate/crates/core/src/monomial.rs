//! Exponent vectors and the monomial orders acting on them.

use std::cmp::Ordering;

use crate::ring::{MonomialOrder, MAX_VARS};

/// A monomial stored as a dense exponent vector with its cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl Monomial {
    pub const fn one() -> Monomial {
        Monomial { exps: [0; MAX_VARS], degree: 0 }
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bit `i` is set when variable `i` occurs; used as a cheap divisibility filter.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] - other.exps[i];
        }
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut degree = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            degree += exps[i] as u32;
        }
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut degree = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
            degree += exps[i] as u32;
        }
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            let e = self.exps[i] as u32 * k;
            exps[i] = u16::try_from(e).expect("exponent overflow");
        }
        Monomial { exps, degree: self.degree * k }
    }

    /// Drops the variable at `i`, lowering the exponent by one.
    pub fn derive(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[i] -= 1;
        m.degree -= 1;
        Some((e as u32, m))
    }

    /// Moves the exponents into a new layout: variable `i` goes to `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..nvars {
            m.exps[map[i]] = self.exps[i];
        }
        m.degree = self.degree;
        m
    }

    fn block_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    fn revlex(&self, other: &Monomial, range: std::ops::Range<usize>) -> Ordering {
        for i in range.rev() {
            if self.exps[i] != other.exps[i] {
                return other.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }

    /// Compares two monomials of an `nvars`-variable ring under `order`.
    pub fn cmp_by(&self, other: &Monomial, order: MonomialOrder, nvars: usize) -> Ordering {
        match order {
            MonomialOrder::DegRevLex => self
                .degree
                .cmp(&other.degree)
                .then_with(|| self.revlex(other, 0..nvars)),
            MonomialOrder::Lex => {
                for i in 0..nvars {
                    if self.exps[i] != other.exps[i] {
                        return self.exps[i].cmp(&other.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(k) => self
                .block_degree(0..k)
                .cmp(&other.block_degree(0..k))
                .then_with(|| self.revlex(other, 0..k))
                .then_with(|| self.block_degree(k..nvars).cmp(&other.block_degree(k..nvars)))
                .then_with(|| self.revlex(other, k..nvars)),
        }
    }
}
