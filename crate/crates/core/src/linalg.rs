//! Exact rational matrices and canonical row reduction.
//!
//! Every solver in the crate reduces to a nullspace computation over ℚ. Rows
//! are stored sparsely; elimination runs on primitive integer rows (each row
//! is scaled to coprime integer entries and combined by cross-multiplication)
//! and only the final reduced row echelon form is converted back to
//! rationals. The reduced echelon form of a matrix is unique, so every
//! quantity read off it (rank, nullspace basis, coordinates) is canonical.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. Always stored in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A sparse row: `(column, value)` pairs, sorted by column, no zero values.
pub type SparseRow = Vec<(usize, Rational)>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(len: usize) -> Vec<Rational> {
    vec![Rational::zero(); len]
}

pub fn unit_vec(len: usize, index: usize) -> Vec<Rational> {
    let mut v = zero_vec(len);
    v[index] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Sparse exact rational matrix. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn normalize_row(cols: usize, mut row: Vec<(usize, Rational)>) -> SparseRow {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        assert!(c < cols, "column index {c} out of range for {cols} columns");
        match out.last_mut() {
            Some((last, acc)) if *last == c => *acc += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        RationalMatrix { rows: n, cols: n, data }
    }

    /// Builds a matrix from sparse rows. Duplicate columns within a row are
    /// summed and zeros dropped.
    ///
    /// Panics if a column index is out of range.
    pub fn from_sparse_rows(cols: usize, rows: Vec<Vec<(usize, Rational)>>) -> Self {
        let data: Vec<SparseRow> = rows.into_iter().map(|r| normalize_row(cols, r)).collect();
        RationalMatrix { rows: data.len(), cols, data }
    }

    /// Builds a matrix from `(row, col, value)` triples; duplicates are summed.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows, "row index {r} out of range for {rows} rows");
            buckets[r].push((c, v));
        }
        Self::from_sparse_rows(cols, buckets)
    }

    /// Builds a matrix from dense rows, all of length `cols`.
    pub fn from_dense(cols: usize, rows: &[Vec<Rational>]) -> Self {
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "dense row has wrong length");
                r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect()
            })
            .collect::<Vec<SparseRow>>();
        RationalMatrix { rows: data.len(), cols, data }
    }

    /// Convenience constructor from small integers, mostly for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Self::from_dense(cols, &dense)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[Vec<Rational>]) -> Self {
        let entries = columns.iter().enumerate().flat_map(|(c, col)| {
            assert_eq!(col.len(), len, "column has wrong length");
            col.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(r, v)| (r, c, v.clone()))
        });
        Self::from_entries(len, columns.len(), entries)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        let row = &self.data[r];
        match row.binary_search_by_key(&c, |(col, _)| *col) {
            Ok(i) => row[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![zero_vec(self.cols); self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(self.cols, self.rows, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self.data.iter().map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect()).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter().fold(Rational::zero(), |acc, (c, x)| if v[*c].is_zero() { acc } else { acc + x * &v[*c] })
            })
            .collect())
    }

    /// Matrix product `self * other`. Panics on shape mismatch.
    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &other.data[*k] {
                        *acc.entry(*c).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        RationalMatrix { rows: self.rows, cols: other.cols, data }
    }

    /// `self + s * other`. Panics on shape mismatch.
    pub fn add_scaled(&self, other: &RationalMatrix, s: &Rational) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut row = a.clone();
                row.extend(b.iter().map(|(c, v)| (*c, v * s)));
                normalize_row(self.cols, row)
            })
            .collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &RationalMatrix) -> RationalMatrix {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &RationalMatrix) -> RationalMatrix {
        self.add_scaled(other, &-Rational::one())
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &RationalMatrix) -> RationalMatrix {
        let entries = self
            .entries()
            .map(|(r, c, v)| (r, c, v.clone()))
            .chain(other.entries().map(|(r, c, v)| (r + self.rows, c + self.cols, v.clone())))
            .collect::<Vec<_>>();
        Self::from_entries(self.rows + other.rows, self.cols + other.cols, entries)
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(row);
        }
        ech
    }

    /// Reduced row echelon form, with zero rows appended so the shape is kept.
    pub fn rref(&self) -> RationalMatrix {
        let mut data = self.echelon().rational_rows();
        data.resize(self.rows.max(data.len()), Vec::new());
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Canonical nullspace basis: one vector per free column of the RREF, in
    /// increasing column order, with that free column set to 1 and the other
    /// free columns set to 0.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        self.echelon().nullspace()
    }

    /// Particular solution of `self * x = rhs` with every free variable set to
    /// zero, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: rhs.len() });
        }
        let aug_col = self.cols;
        let mut ech = Echelon::new(self.cols + 1);
        for (row, b) in self.data.iter().zip(rhs) {
            let mut r = row.clone();
            if !b.is_zero() {
                r.push((aug_col, b.clone()));
            }
            ech.insert(&r);
        }
        if ech.pivots.contains_key(&aug_col) {
            return Ok(None);
        }
        let mut x = zero_vec(self.cols);
        for (p, row) in &ech.pivots {
            let b = coeff(row, aug_col);
            if !b.is_zero() {
                x[*p] = Rational::new(b, row[0].1.clone());
            }
        }
        Ok(Some(x))
    }
}

/// True iff `v` lies in the rational span of `basis`.
pub fn in_span(v: &[Rational], basis: &[Vec<Rational>]) -> Result<bool, LinalgError> {
    let n = v.len();
    if let Some(bad) = basis.iter().find(|b| b.len() != n) {
        return Err(LinalgError::DimensionMismatch { expected: n, found: bad.len() });
    }
    let mut ech = Echelon::new(n);
    for b in basis {
        ech.insert(&dense_to_sparse(b));
    }
    Ok(!ech.insert(&dense_to_sparse(v)))
}

/// Canonical basis of the span of `vectors` (the nonzero RREF rows) together
/// with the pivot column of each basis vector.
pub fn span_basis(len: usize, vectors: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut ech = Echelon::new(len);
    for v in vectors {
        assert_eq!(v.len(), len, "vector has wrong length");
        ech.insert(&dense_to_sparse(v));
    }
    let pivots = ech.pivots.keys().copied().collect();
    let rows = ech
        .rational_rows()
        .into_iter()
        .map(|r| {
            let mut d = zero_vec(len);
            for (c, v) in r {
                d[c] = v;
            }
            d
        })
        .collect();
    (rows, pivots)
}

pub fn dense_to_sparse(v: &[Rational]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect()
}

type IntRow = Vec<(usize, BigInt)>;

fn coeff(row: &IntRow, c: usize) -> BigInt {
    match row.binary_search_by_key(&c, |(col, _)| *col) {
        Ok(i) => row[i].1.clone(),
        Err(_) => BigInt::zero(),
    }
}

/// Clears denominators and divides out the content.
fn to_primitive_int_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut out: IntRow = row.iter().map(|(c, v)| (*c, v.numer() * (&lcm / v.denom()))).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    let flip = row.first().is_some_and(|(_, v)| v.is_negative());
    if g.is_zero() || (g.is_one() && !flip) {
        return;
    }
    let g = if flip { -g } else { g };
    for (_, v) in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// `a * target - b * source`, dropping cancelled entries.
fn cross_combine(target: &IntRow, a: &BigInt, source: &IntRow, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let ti = target.get(i).map(|e| e.0);
        let sj = source.get(j).map(|e| e.0);
        let (c, v) = match (ti, sj) {
            (Some(tc), Some(sc)) if tc == sc => {
                let v = a * &target[i].1 - b * &source[j].1;
                i += 1;
                j += 1;
                (tc, v)
            }
            (Some(tc), Some(sc)) if tc < sc => {
                i += 1;
                (tc, a * &target[i - 1].1)
            }
            (Some(tc), None) => {
                i += 1;
                (tc, a * &target[i - 1].1)
            }
            (_, Some(sc)) => {
                j += 1;
                (sc, -(b * &source[j - 1].1))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Removes the entry of `row` at the pivot column of `pivot_row` (whose
/// leading entry sits at that column) by fraction-free cross-multiplication.
fn eliminate(row: &IntRow, pivot_row: &IntRow, col: usize) -> IntRow {
    let b = coeff(row, col);
    if b.is_zero() {
        return row.clone();
    }
    let a = &pivot_row[0].1;
    let g = a.gcd(&b);
    let mut out = cross_combine(row, &(a / &g), pivot_row, &(&b / &g));
    make_primitive(&mut out);
    out
}

/// Incrementally maintained reduced echelon form over primitive integer rows.
///
/// Invariant: every stored row has a positive leading entry at its key
/// column and zeros at every other pivot column.
struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    fn new(cols: usize) -> Self {
        Echelon { cols, pivots: BTreeMap::new() }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots. Returns true if it was
    /// independent (and therefore added as a new pivot row).
    fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        let mut r = to_primitive_int_row(row);
        let hits: Vec<usize> = r.iter().map(|(c, _)| *c).filter(|c| self.pivots.contains_key(c)).collect();
        for c in hits {
            r = eliminate(&r, &self.pivots[&c], c);
        }
        if r.is_empty() {
            return false;
        }
        let lead = r[0].0;
        debug_assert!(lead < self.cols);
        for other in self.pivots.values_mut() {
            if other.binary_search_by_key(&lead, |(c, _)| *c).is_ok() {
                *other = eliminate(other, &r, lead);
            }
        }
        self.pivots.insert(lead, r);
        true
    }

    fn rational_rows(&self) -> Vec<SparseRow> {
        self.pivots
            .values()
            .map(|row| {
                let lead = &row[0].1;
                row.iter().map(|(c, v)| (*c, Rational::new(v.clone(), lead.clone()))).collect()
            })
            .collect()
    }

    fn nullspace(&self) -> Vec<Vec<Rational>> {
        (0..self.cols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v = unit_vec(self.cols, free);
                for (p, row) in &self.pivots {
                    let x = coeff(row, free);
                    if !x.is_zero() {
                        v[*p] = -Rational::new(x, row[0].1.clone());
                    }
                }
                v
            })
            .collect()
    }
}
