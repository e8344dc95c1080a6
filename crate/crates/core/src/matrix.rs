//! Rectangular matrices of polynomials and their minors.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;

/// An `rows x cols` matrix of polynomials stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMat {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMat {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> PolyMat {
        PolyMat { ring: ring.clone(), rows, cols, entries: vec![Poly::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> PolyMat {
        let mut m = PolyMat::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Poly>>) -> Result<PolyMat> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::InvalidArgument("ragged matrix rows".into()));
            }
            for e in row {
                ring.ensure_same(e.ring())?;
                entries.push(e);
            }
        }
        Ok(PolyMat { ring: ring.clone(), rows: nrows, cols, entries })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(ring: &Ring, nrows: usize, columns: &[Vec<Poly>]) -> Result<PolyMat> {
        let mut m = PolyMat::zeros(ring, nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::RankMismatch { expected: nrows, found: col.len() });
            }
            for (i, e) in col.iter().enumerate() {
                ring.ensure_same(e.ring())?;
                m.set(i, j, e.clone());
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> PolyMat {
        let mut t = PolyMat::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        if v.len() != self.cols {
            return Err(Error::RankMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Poly::zero(&self.ring), |acc, j| &acc + &(self.get(i, j) * &v[j]))
            })
            .collect())
    }

    /// Submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMat {
        let mut m = PolyMat::zeros(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Determinant of a square matrix by memoized cofactor expansion.
    pub fn determinant(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(Poly::one(&self.ring));
        }
        let mut out = MinorWalker::new(self, self.rows, true).minors_with_prefix(&[]);
        Ok(out.pop().expect("one full minor"))
    }

    /// Column index prefixes of length `depth` for `k`-minors, in lex order.
    pub(crate) fn minor_prefixes(&self, k: usize, depth: usize) -> Vec<Vec<usize>> {
        let depth = depth.min(k);
        combinations(self.cols, depth)
            .into_iter()
            .filter(|p| p.last().is_none_or(|&l| self.cols - l > k - depth))
            .collect()
    }

    /// The nonzero `k x k` minors whose column set starts with `prefix`,
    /// ordered lexicographically by (columns, rows).
    pub(crate) fn nonzero_minors_with_prefix(&self, k: usize, prefix: &[usize]) -> Vec<Poly> {
        let mut out = MinorWalker::new(self, k, false).minors_with_prefix(prefix);
        out.retain(|p| !p.is_zero());
        out
    }

    /// Every `k x k` minor, lexicographic in (columns, rows).
    pub fn minors(&self, k: usize) -> Result<Vec<Poly>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::InvalidArgument(format!(
                "minor size {k} out of range 1..={}",
                self.rows.min(self.cols)
            )));
        }
        Ok(MinorWalker::new(self, k, true).minors_with_prefix(&[]))
    }
}

/// All `size`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Depth-first enumeration of minors over column prefixes. Level `s` holds
/// the `s x s` minors of the current column prefix for every row subset.
struct MinorWalker<'a> {
    mat: &'a PolyMat,
    k: usize,
    keep_zeros: bool,
    /// For size `s+1` subset `idx`: (row, sign, index of the subset without row at size `s`).
    expansions: Vec<Vec<Vec<(usize, bool, usize)>>>,
}

impl<'a> MinorWalker<'a> {
    fn new(mat: &'a PolyMat, k: usize, keep_zeros: bool) -> MinorWalker<'a> {
        let row_sets: Vec<Vec<Vec<usize>>> = (0..=k).map(|s| combinations(mat.rows, s)).collect();
        let mut expansions = vec![Vec::new()];
        for s in 1..=k {
            let lower = &row_sets[s - 1];
            let lookup: std::collections::HashMap<&[usize], usize> =
                lower.iter().enumerate().map(|(i, r)| (r.as_slice(), i)).collect();
            let exp = row_sets[s]
                .iter()
                .map(|rows| {
                    (0..s)
                        .map(|t| {
                            let rest: Vec<usize> =
                                rows.iter().enumerate().filter(|&(u, _)| u != t).map(|(_, &r)| r).collect();
                            // Expansion along the last column, which sits at position s-1.
                            let negative = (t + s - 1) % 2 == 1;
                            (rows[t], negative, lookup[rest.as_slice()])
                        })
                        .collect()
                })
                .collect();
            expansions.push(exp);
        }
        MinorWalker { mat, k, keep_zeros, expansions }
    }

    fn extend(&self, level: &[Poly], s: usize, col: usize) -> Vec<Poly> {
        let ring = &self.mat.ring;
        self.expansions[s + 1]
            .iter()
            .map(|terms| {
                let mut acc = Poly::zero(ring);
                for &(row, negative, sub) in terms {
                    let a = self.mat.get(row, col);
                    if a.is_zero() || level[sub].is_zero() {
                        continue;
                    }
                    let prod = a * &level[sub];
                    acc = if negative { &acc - &prod } else { &acc + &prod };
                }
                acc
            })
            .collect()
    }

    fn minors_with_prefix(&self, prefix: &[usize]) -> Vec<Poly> {
        let mut level = vec![Poly::one(&self.mat.ring)];
        for (s, &c) in prefix.iter().enumerate() {
            level = self.extend(&level, s, c);
        }
        let start = prefix.last().map_or(0, |&c| c + 1);
        let mut out = Vec::new();
        self.walk(&level, prefix.len(), start, &mut out);
        out
    }

    fn walk(&self, level: &[Poly], s: usize, start: usize, out: &mut Vec<Poly>) {
        if s == self.k {
            out.extend(level.iter().cloned());
            return;
        }
        let remaining = self.k - s;
        let cols = self.mat.cols;
        if cols < remaining {
            return;
        }
        for c in start..=cols - remaining {
            let next = self.extend(level, s, c);
            if !self.keep_zeros && next.iter().all(Poly::is_zero) {
                // Every larger minor through this prefix vanishes.
                continue;
            }
            self.walk(&next, s + 1, c + 1, out);
        }
    }
}

impl fmt::Display for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMat {}x{}\n{self}", self.rows, self.cols)
    }
}
