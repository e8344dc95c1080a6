//! Polynomial rings over the rationals: ordered variables plus a monomial order.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};

/// Upper bound on the number of variables a ring may carry.
pub const MAX_VARS: usize = 16;

/// Monomial orders supported by the engine.
///
/// `Block(k)` compares the first `k` variables by degrevlex and breaks ties
/// with degrevlex on the remaining ones; it eliminates the first `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block(usize),
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: Vec<String>,
    order: MonomialOrder,
}

/// A polynomial ring `Q[x_1, ..., x_n]` with a fixed monomial order.
///
/// Cheap to clone; two rings are equal when they have the same variables in
/// the same order and the same monomial order.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({}; {})", self.0.vars.join(","), self.0.order)
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceeds the limit of {MAX_VARS}",
                vars.len()
            )));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidRing(format!(
                    "block size {k} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Ring(Arc::new(RingData { vars, order })))
    }

    /// Ring with the default degrevlex order.
    pub fn degrevlex<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        Ring::new(vars, MonomialOrder::DegRevLex)
    }

    /// Parses a comma separated variable list such as `x,y,z,w`.
    pub fn parse(spec: &str) -> Result<Ring> {
        let vars: Vec<&str> = spec.split(',').map(str::trim).collect();
        Ring::degrevlex(&vars)
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Ring::new(&self.0.vars, order)
    }

    /// Prepends `count` fresh variables and uses a block order eliminating them.
    pub fn extend_front(&self, stem: &str, count: usize) -> Result<Ring> {
        let mut fresh = Vec::with_capacity(count);
        let mut suffix = 0usize;
        while fresh.len() < count {
            let name = format!("{stem}{suffix}");
            suffix += 1;
            if self.var_index(&name).is_none() {
                fresh.push(name);
            }
        }
        let vars: Vec<String> = fresh.into_iter().chain(self.0.vars.iter().cloned()).collect();
        Ring::new(&vars, MonomialOrder::Block(count))
    }

    pub(crate) fn ensure_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}

/// A rational point of affine space over a ring's coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    ring: Ring,
    coords: Vec<BigRational>,
}

impl Point {
    pub fn new(ring: &Ring, coords: Vec<BigRational>) -> Result<Point> {
        if coords.len() != ring.nvars() {
            return Err(Error::RankMismatch { expected: ring.nvars(), found: coords.len() });
        }
        Ok(Point { ring: ring.clone(), coords })
    }

    pub fn from_integers(ring: &Ring, coords: &[i64]) -> Result<Point> {
        Point::new(ring, coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn origin(ring: &Ring) -> Point {
        Point {
            ring: ring.clone(),
            coords: vec![BigRational::from_integer(0.into()); ring.nvars()],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c == &BigRational::from_integer(0.into()))
    }
}
