//! Buchberger completion over integer coefficients for submodules of free
//! modules; ideals are the rank-one case.
//!
//! Vectors are kept primitive (content removed) so coefficients stay small;
//! the public layer converts to monic rational form.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::ring::MonomialOrder;

/// A module term `mono * e_pos`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Term {
    pub pos: u32,
    pub mono: Monomial,
}

/// Module order. With `split == u32::MAX` this is position over term.
/// Otherwise terms at positions below `split` dominate all others, and
/// within each of the two blocks terms are compared term over position.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TermOrder {
    pub order: MonomialOrder,
    pub nvars: usize,
    pub split: u32,
}

impl TermOrder {
    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        let (ha, hb) = (a.pos < self.split, b.pos < self.split);
        if ha != hb {
            return ha.cmp(&hb);
        }
        if self.split == u32::MAX {
            b.pos.cmp(&a.pos).then_with(|| a.mono.cmp_by(&b.mono, self.order, self.nvars))
        } else {
            a.mono.cmp_by(&b.mono, self.order, self.nvars).then_with(|| b.pos.cmp(&a.pos))
        }
    }
}

/// Sparse vector with integer coefficients, terms strictly descending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<(Term, BigInt)>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &(Term, BigInt) {
        &self.terms[0]
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the divisor used (negative when the sign flipped).
    pub fn make_primitive(&mut self) -> BigInt {
        if self.terms.is_empty() {
            return BigInt::one();
        }
        let mut g = self.content();
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
        g
    }

    /// `a * self - b * m * other`.
    pub fn scaled_sub(
        &self,
        a: &BigInt,
        b: &BigInt,
        m: &Monomial,
        other: &Vector,
        ord: &TermOrder,
    ) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |t: &Term| Term { pos: t.pos, mono: t.mono.mul(m) };
        let mut pending: Option<Term> = other.terms.first().map(|(t, _)| shifted(t));
        while i < self.terms.len() && j < other.terms.len() {
            let tb = pending.expect("pending term");
            let (ta, ca) = &self.terms[i];
            match ord.cmp(ta, &tb) {
                Ordering::Greater => {
                    out.push((*ta, a * ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((tb, -(b * &other.terms[j].1)));
                    j += 1;
                    pending = other.terms.get(j).map(|(t, _)| shifted(t));
                }
                Ordering::Equal => {
                    let c = a * ca - b * &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((*ta, c));
                    }
                    i += 1;
                    j += 1;
                    pending = other.terms.get(j).map(|(t, _)| shifted(t));
                }
            }
        }
        out.extend(self.terms[i..].iter().map(|(t, c)| (*t, a * c)));
        out.extend(other.terms[j..].iter().map(|(t, c)| (shifted(t), -(b * c))));
        Vector { terms: out }
    }
}

/// Result of a reduction: `vector == factor * input` modulo the basis.
pub(crate) struct Reduced {
    pub vector: Vector,
    pub factor: BigRational,
}

/// A list of vectors usable as reducers.
#[derive(Clone, Debug)]
pub(crate) struct Basis {
    pub ord: TermOrder,
    pub elems: Vec<Vector>,
    leads: Vec<Term>,
    masks: Vec<u32>,
    active: Vec<bool>,
}

impl Basis {
    pub fn new(ord: TermOrder) -> Basis {
        Basis { ord, elems: Vec::new(), leads: Vec::new(), masks: Vec::new(), active: Vec::new() }
    }

    pub fn from_vectors(ord: TermOrder, vectors: Vec<Vector>) -> Basis {
        let mut b = Basis::new(ord);
        for v in vectors {
            b.push(v);
        }
        b
    }

    pub fn push(&mut self, v: Vector) -> usize {
        let lead = v.lead().0;
        self.leads.push(lead);
        self.masks.push(lead.mono.support_mask());
        self.elems.push(v);
        self.active.push(true);
        self.elems.len() - 1
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn lead(&self, i: usize) -> &Term {
        &self.leads[i]
    }

    pub fn active_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.elems.len()).filter(|&i| self.active[i])
    }

    #[inline]
    fn find_reducer(&self, t: &Term) -> Option<usize> {
        let mask = t.mono.support_mask();
        (0..self.elems.len()).find(|&i| {
            self.active[i]
                && self.leads[i].pos == t.pos
                && self.masks[i] & !mask == 0
                && self.leads[i].mono.divides(&t.mono)
        })
    }

    /// Reduces the terms of `f` from index `start` on; with `full == false`
    /// only the term at `start` is reduced repeatedly (top reduction).
    pub fn reduce_from(&self, f: Vector, start: usize, full: bool) -> Reduced {
        let mut f = f;
        let mut k = start;
        let mut mult = BigInt::one();
        let mut div = BigInt::one();
        let mut steps = 0usize;
        while k < f.terms.len() {
            let t = f.terms[k].0;
            match self.find_reducer(&t) {
                Some(gi) => {
                    let g = &self.elems[gi];
                    let a = &g.terms[0].1;
                    let c = &f.terms[k].1;
                    let gcd = a.gcd(c);
                    let fa = a / &gcd;
                    let fc = c / &gcd;
                    let q = t.mono.div(&g.terms[0].0.mono).expect("reducer divides");
                    f = f.scaled_sub(&fa, &fc, &q, g, &self.ord);
                    mult *= &fa;
                    steps += 1;
                    if steps.is_multiple_of(8) {
                        let g = f.content();
                        if !g.is_zero() && !g.is_one() {
                            for (_, c) in &mut f.terms {
                                *c = &*c / &g;
                            }
                            div *= g;
                        }
                    }
                }
                None if full => k += 1,
                None => break,
            }
        }
        let g = f.make_primitive();
        div *= g;
        Reduced { vector: f, factor: BigRational::new(mult, div) }
    }

    pub fn reduce(&self, f: Vector) -> Reduced {
        self.reduce_from(f, 0, true)
    }

    pub fn reduces_to_zero(&self, f: Vector) -> bool {
        self.reduce_from(f, 0, true).vector.is_zero()
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    sugar: u32,
}

/// S-vector of two basis elements with the same leading position.
pub(crate) fn s_vector(ord: &TermOrder, f: &Vector, g: &Vector) -> Vector {
    let (tf, cf) = f.lead();
    let (tg, cg) = g.lead();
    let lcm = tf.mono.lcm(&tg.mono);
    let gcd = cf.gcd(cg);
    let a = cg / &gcd;
    let b = cf / &gcd;
    let mf = lcm.div(&tf.mono).expect("lcm");
    let mg = lcm.div(&tg.mono).expect("lcm");
    let lhs = Vector {
        terms: f.terms.iter().map(|(t, c)| (Term { pos: t.pos, mono: t.mono.mul(&mf) }, &a * c)).collect(),
    };
    lhs.scaled_sub(&BigInt::one(), &b, &mg, g, ord)
}

/// Incremental Buchberger completion with the sugar selection strategy and
/// the Gebauer–Möller pair criteria.
pub(crate) struct Buchberger {
    basis: Basis,
    pairs: Vec<Pair>,
    sugar: Vec<u32>,
    rank_one: bool,
}

fn max_degree(v: &Vector) -> u32 {
    v.terms.iter().map(|(t, _)| t.mono.degree()).max().unwrap_or(0)
}

impl Buchberger {
    pub fn new(ord: TermOrder, rank_one: bool) -> Buchberger {
        Buchberger { basis: Basis::new(ord), pairs: Vec::new(), sugar: Vec::new(), rank_one }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// True once the unit vector of some position has been found in rank one.
    pub fn is_unit(&self) -> bool {
        self.rank_one
            && self.basis.active_indices().any(|i| self.basis.lead(i).mono.is_one())
    }

    /// Adds a generator; returns `false` if it reduced to zero.
    pub fn insert(&mut self, v: Vector) -> bool {
        if v.is_zero() || self.is_unit() {
            return false;
        }
        let r = self.basis.reduce(v).vector;
        if r.is_zero() {
            return false;
        }
        let sugar = max_degree(&r);
        self.update(r, sugar);
        true
    }

    fn update(&mut self, h: Vector, sugar: u32) {
        let hl = h.lead().0;
        let hi = self.basis.push(h);
        self.sugar.push(sugar);
        // Candidate pairs with every active element of the same position.
        let mut cands: Vec<(Pair, bool)> = self
            .basis
            .active_indices()
            .filter(|&i| i != hi && self.basis.lead(i).pos == hl.pos)
            .map(|i| {
                let li = self.basis.lead(i).mono;
                let coprime = self.rank_one && li.is_coprime(&hl.mono);
                let lcm = li.lcm(&hl.mono);
                let d = lcm.degree();
                let sugar = (self.sugar[i] + d - li.degree()).max(sugar + d - hl.mono.degree());
                (Pair { i, j: hi, lcm: Term { pos: hl.pos, mono: lcm }, sugar }, coprime)
            })
            .collect();
        // Chain criterion among the new pairs; coprime pairs shadow their lcm class.
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        while !cands.is_empty() {
            let (p, coprime) = cands.remove(0);
            let dominated = cands
                .iter()
                .chain(kept.iter())
                .any(|(q, _)| q.lcm.mono.divides(&p.lcm.mono));
            if coprime || !dominated {
                kept.push((p, coprime));
            }
        }
        // Old pairs made redundant by the new leading term.
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.lcm.pos != hl.pos || !hl.mono.divides(&p.lcm.mono) {
                return true;
            }
            let li = basis.lead(p.i).mono.lcm(&hl.mono);
            let lj = basis.lead(p.j).mono.lcm(&hl.mono);
            li == p.lcm.mono || lj == p.lcm.mono
        });
        self.pairs.extend(kept.into_iter().filter(|(_, c)| !c).map(|(p, _)| p));
        // Elements whose leading term is divisible by the new one retire.
        for i in 0..hi {
            if self.basis.active[i]
                && self.basis.leads[i].pos == hl.pos
                && hl.mono.divides(&self.basis.leads[i].mono)
            {
                self.basis.active[i] = false;
            }
        }
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let ord = self.basis.ord;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| pa.lcm.mono.degree().cmp(&pb.lcm.mono.degree()))
                .then_with(|| ord.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    /// Processes pairs until none remain.
    pub fn complete(&mut self) {
        while let Some(p) = self.select_pair() {
            if self.is_unit() {
                self.pairs.clear();
                break;
            }
            let s = s_vector(&self.basis.ord, &self.basis.elems[p.i], &self.basis.elems[p.j]);
            if s.is_zero() {
                continue;
            }
            let r = self.basis.reduce(s).vector;
            if !r.is_zero() {
                let sugar = p.sugar.max(max_degree(&r));
                self.update(r, sugar);
            }
        }
    }

    /// The reduced basis as primitive vectors, ascending by leading term.
    pub fn reduced(&self) -> Vec<Vector> {
        let ord = self.basis.ord;
        if self.is_unit() {
            let i = self
                .basis
                .active_indices()
                .find(|&i| self.basis.lead(i).mono.is_one())
                .expect("unit");
            let pos = self.basis.lead(i).pos;
            return vec![Vector { terms: vec![(Term { pos, mono: Monomial::one() }, BigInt::one())] }];
        }
        let mut minimal: Vec<Vector> = self
            .basis
            .active_indices()
            .map(|i| self.basis.elems[i].clone())
            .collect();
        minimal.sort_by(|a, b| ord.cmp(&a.lead().0, &b.lead().0));
        let reducer = Basis::from_vectors(ord, minimal.clone());
        minimal
            .into_iter()
            .map(|v| reducer.reduce_from(v, 1, true).vector)
            .collect()
    }
}

/// Reduced Gröbner basis of the given vectors.
pub(crate) fn groebner(ord: TermOrder, rank_one: bool, gens: Vec<Vector>) -> Vec<Vector> {
    let mut bb = Buchberger::new(ord, rank_one);
    // Insert smaller generators first; the reduced basis does not depend on it.
    let mut gens: Vec<Vector> = gens.into_iter().filter(|v| !v.is_zero()).collect();
    gens.sort_by(|a, b| ord.cmp(&a.lead().0, &b.lead().0));
    for g in gens {
        bb.insert(g);
    }
    bb.complete();
    bb.reduced()
}
