//! Lie algebras and Lie superalgebras given by structure constants.
//!
//! A basis `b_0, …, b_{n-1}` is fixed and `[b_i, b_j] = Σ_k c_ij^k b_k`. The
//! constants are the only data; matrix realizations live in
//! [`constructors`](crate::constructors) and are compiled down to constants
//! there.
//!
//! Sign conventions for graded algebras, with `|x|` the parity of a
//! homogeneous element:
//!
//! * super-antisymmetry: `[x, y] = -(-1)^{|x||y|} [y, x]`
//! * super-Jacobi: `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0`
//!
//! An ungraded algebra behaves exactly like a graded one whose basis is
//! entirely even.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, unit_vec, zero_vec, Rational, RationalMatrix};

pub type SparseVec = Vec<(usize, Rational)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Parity {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        Parity::from_bit((self.bit() + other.bit()) % 2)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `(-1)^e` as a rational.
pub(crate) fn koszul_sign(exponent: u8) -> Rational {
    if exponent & 1 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn add_scaled_into(acc: &mut BTreeMap<usize, Rational>, v: &[(usize, Rational)], s: &Rational) {
    for (k, c) in v {
        *acc.entry(*k).or_insert_with(Rational::zero) += c * s;
    }
}

fn finish_sparse(acc: BTreeMap<usize, Rational>) -> SparseVec {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// A finite-dimensional Lie algebra or Lie superalgebra over ℚ.
///
/// The table may violate the axioms (see [`LieAlgebra::validate`]); every
/// constructor in this crate produces validated algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    parity: Option<Vec<Parity>>,
    // row-major n×n table of sparse bracket vectors
    table: Vec<SparseVec>,
}

impl LieAlgebra {
    /// Builds an algebra from raw constants `(i, j, k, c_ij^k)`.
    ///
    /// Both orders `(i, j)` and `(j, i)` must be supplied explicitly; no
    /// antisymmetry is inferred. Zero constants are ignored.
    pub fn from_structure_constants(
        labels: Vec<String>,
        parity: Option<Vec<Parity>>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let n = labels.len();
        if let Some(p) = &parity {
            if p.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.len() });
            }
        }
        let mut seen: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for (i, j, k, c) in constants {
            for index in [i, j, k] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, dim: n });
                }
            }
            if seen.insert((i, j, k), c).is_some() {
                return Err(Error::DuplicateConstant { i, j, k });
            }
        }
        let mut table = vec![Vec::new(); n * n];
        for ((i, j, k), c) in seen {
            if !c.is_zero() {
                table[i * n + j].push((k, c));
            }
        }
        Ok(LieAlgebra { labels, parity, table })
    }

    /// Abelian algebra of the given dimension with labels `x1, x2, …`.
    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        LieAlgebra { labels, parity: None, table: vec![Vec::new(); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn parity(&self) -> Option<&[Parity]> {
        self.parity.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.parity.is_some()
    }

    /// Parity of basis element `i`; always even for ungraded algebras.
    pub fn parity_of(&self, i: usize) -> Parity {
        self.parity.as_ref().map_or(Parity::Even, |p| p[i])
    }

    pub(crate) fn parity_bits(&self) -> Vec<u8> {
        (0..self.dim()).map(|i| self.parity_of(i).bit()).collect()
    }

    /// Same constants with the grading dropped.
    pub fn ungraded(&self) -> Self {
        LieAlgebra { parity: None, ..self.clone() }
    }

    /// Same constants with an explicit grading attached.
    pub fn with_parity(&self, parity: Vec<Parity>) -> Result<Self> {
        if parity.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: parity.len() });
        }
        Ok(LieAlgebra { parity: Some(parity), ..self.clone() })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// `[b_i, b_j]` as a sparse coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    /// All nonzero constants `(i, j, k, c_ij^k)` in lexicographic order.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.dim();
        self.table.iter().enumerate().flat_map(move |(ij, v)| v.iter().map(move |(k, c)| (ij / n, ij % n, *k, c)))
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vec(self.dim());
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xi * yj;
                for (k, c) in self.basis_bracket(i, j) {
                    out[*k] += c * &s;
                }
            }
        }
        Ok(out)
    }

    /// Bracket of two sparse vectors.
    pub(crate) fn bracket_sparse(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, xi) in x {
            for (j, yj) in y {
                add_scaled_into(&mut acc, self.basis_bracket(*i, *j), &(xi * yj));
            }
        }
        finish_sparse(acc)
    }

    /// `ad(b_i)` as a matrix: column `j` holds `[b_i, b_j]`.
    pub fn ad_matrix(&self, i: usize) -> RationalMatrix {
        let n = self.dim();
        RationalMatrix::from_entries(
            n,
            n,
            (0..n).flat_map(|j| self.basis_bracket(i, j).iter().map(move |(k, c)| (*k, j, c.clone()))),
        )
    }

    /// Checks super-antisymmetry, grading homogeneity and the super-Jacobi
    /// identity on basis elements. Violations are returned as data.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let p = self.parity_bits();
        let mut violations = Vec::new();

        for i in 0..n {
            for j in 0..n {
                let s = koszul_sign(p[i] & p[j]);
                let mut sum = BTreeMap::new();
                add_scaled_into(&mut sum, self.basis_bracket(i, j), &Rational::one());
                add_scaled_into(&mut sum, self.basis_bracket(j, i), &s);
                for (k, v) in sum {
                    if !v.is_zero() && i <= j {
                        violations.push(Violation::Antisymmetry { i, j, k });
                    }
                }
                if self.is_graded() {
                    for (k, _) in self.basis_bracket(i, j) {
                        if p[*k] != p[i] ^ p[j] {
                            violations.push(Violation::Grading { i, j, k: *k });
                        }
                    }
                }
            }
        }

        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    if !self.jacobi_sum(i, j, k).is_empty() {
                        violations.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let p = |a: usize| self.parity_of(a).bit();
        let unit = |a: usize| vec![(a, Rational::one())];
        let term = |x: usize, y: usize, z: usize| {
            let inner = self.basis_bracket(y, z).to_vec();
            self.bracket_sparse(&unit(x), &inner)
        };
        let mut acc = BTreeMap::new();
        add_scaled_into(&mut acc, &term(i, j, k), &koszul_sign(p(i) & p(k)));
        add_scaled_into(&mut acc, &term(j, k, i), &koszul_sign(p(j) & p(i)));
        add_scaled_into(&mut acc, &term(k, i, j), &koszul_sign(p(k) & p(j)));
        finish_sparse(acc)
    }

    /// Consumes the algebra if it validates, otherwise reports why not.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidAlgebra(report))
        }
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// Span of the basis elements of the given parity (everything, or nothing,
    /// for an ungraded algebra).
    pub fn homogeneous_part(&self, parity: Parity) -> Subspace {
        let n = self.dim();
        let vecs: Vec<_> = (0..n).filter(|&i| self.parity_of(i) == parity).map(|i| unit_vec(n, i)).collect();
        Subspace::span(n, &vecs)
    }

    /// `[𝔤, 𝔤]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let vecs: Vec<Vec<Rational>> =
            self.table.iter().filter(|v| !v.is_empty()).map(|v| sparse_to_dense(n, v)).collect();
        Subspace::span(n, &vecs)
    }

    /// `[𝔤_even, 𝔤_even]`; the derived algebra itself when ungraded.
    pub fn even_derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let even: Vec<usize> = (0..n).filter(|&i| self.parity_of(i) == Parity::Even).collect();
        let vecs: Vec<Vec<Rational>> = even
            .iter()
            .flat_map(|&i| even.iter().map(move |&j| (i, j)))
            .map(|(i, j)| sparse_to_dense(n, self.basis_bracket(i, j)))
            .collect();
        Subspace::span(n, &vecs)
    }

    pub fn center(&self) -> Subspace {
        let full = self.full_space();
        self.centralizer(&full, &full).expect("full space has matching ambient")
    }

    /// `{x ∈ within : [v, x] = 0 for every basis vector v of s}`.
    pub fn centralizer(&self, s: &Subspace, within: &Subspace) -> Result<Subspace> {
        let n = self.dim();
        for sub in [s, within] {
            if sub.ambient_dim() != n {
                return Err(Error::AmbientMismatch { expected: n, found: sub.ambient_dim() });
            }
        }
        // x = Σ_t a_t w_t; one block of n equations per basis vector of s.
        let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
        for v in s.basis() {
            let images: Vec<Vec<Rational>> =
                within.basis().iter().map(|w| self.bracket(v, w)).collect::<Result<_>>()?;
            for k in 0..n {
                rows.push(
                    images
                        .iter()
                        .enumerate()
                        .filter(|(_, img)| !img[k].is_zero())
                        .map(|(t, img)| (t, img[k].clone()))
                        .collect(),
                );
            }
        }
        let m = RationalMatrix::from_sparse_rows(within.dim(), rows);
        let vecs: Vec<Vec<Rational>> = m.nullspace_basis().iter().map(|a| within.combine(a)).collect();
        Ok(Subspace::span(n, &vecs))
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().dim() == self.dim()
    }

    /// True iff `s` is closed under the bracket.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        for (a, u) in s.basis().iter().enumerate() {
            for w in &s.basis()[a..] {
                if !s.contains(&self.bracket(u, w)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The abstract algebra carried by a subalgebra, in the subspace's
    /// canonical basis. Basis vectors that are unit vectors keep their label.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotSubalgebra);
        }
        let m = s.dim();
        let mut labels = Vec::with_capacity(m);
        let mut parity = Vec::with_capacity(m);
        for (a, u) in s.basis().iter().enumerate() {
            let support: Vec<usize> = (0..u.len()).filter(|&i| !u[i].is_zero()).collect();
            labels.push(match support.as_slice() {
                [i] if u[*i].is_one() => self.label(*i).to_string(),
                _ => format!("s{}", a + 1),
            });
            let parities: Vec<Parity> = support.iter().map(|&i| self.parity_of(i)).collect();
            if parities.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::InvalidArgument("subspace is not graded".into()));
            }
            parity.push(parities.first().copied().unwrap_or(Parity::Even));
        }
        let mut constants = Vec::new();
        for (a, u) in s.basis().iter().enumerate() {
            for (b, w) in s.basis().iter().enumerate() {
                let coords = s.coordinates(&self.bracket(u, w)?).ok_or(Error::NotSubalgebra)?;
                for (c, x) in coords.into_iter().enumerate() {
                    if !x.is_zero() {
                        constants.push((a, b, c, x));
                    }
                }
            }
        }
        let parity = self.is_graded().then_some(parity);
        LieAlgebra::from_structure_constants(labels, parity, constants)
    }

    /// sl_2-triples `(b_i, (2/c)[b_i,b_j], (2/c)b_j)` read off pairs of even basis
    /// vectors with `[[b_i,b_j], b_i] = c·b_i` and `[[b_i,b_j], b_j] = −c·b_j`, `c ≠ 0`.
    pub fn basis_sl2_triples(&self) -> Vec<Sl2Triple> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || self.parity_of(i) == Parity::Odd || self.parity_of(j) == Parity::Odd {
                    continue;
                }
                let h0 = sparse_to_dense(n, self.basis_bracket(i, j));
                let he = self.bracket(&h0, &unit_vec(n, i)).expect("dimensions match");
                let c = he[i].clone();
                if c.is_zero() {
                    continue;
                }
                let scale = linalg::rat(2) / &c;
                let e = unit_vec(n, i);
                let h: Vec<Rational> = h0.iter().map(|x| x * &scale).collect();
                let f: Vec<Rational> = unit_vec(n, j).iter().map(|x| x * &scale).collect();
                if let Ok(t) = Sl2Triple::new(self, e, h, f) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Keeps the candidates that satisfy `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h` exactly.
    pub fn find_sl2_triples(&self, candidates: &[(Vec<Rational>, Vec<Rational>, Vec<Rational>)]) -> Vec<Sl2Triple> {
        candidates.iter().filter_map(|(e, h, f)| Sl2Triple::new(self, e.clone(), h.clone(), f.clone()).ok()).collect()
    }
}

pub(crate) fn sparse_to_dense(n: usize, v: &[(usize, Rational)]) -> Vec<Rational> {
    let mut d = zero_vec(n);
    for (k, c) in v {
        d[*k] = c.clone();
    }
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `[b_i, b_j] + (-1)^{|i||j|}[b_j, b_i]` has a nonzero `b_k` component.
    Antisymmetry { i: usize, j: usize, k: usize },
    /// `[b_i, b_j]` has a `b_k` component of the wrong parity.
    Grading { i: usize, j: usize, k: usize },
    /// The (super-)Jacobi sum on `(b_i, b_j, b_k)` is nonzero.
    Jacobi { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => write!(f, "antisymmetry fails on ({i},{j}) in component {k}"),
            Violation::Grading { i, j, k } => write!(f, "grading fails: [{i},{j}] has component {k}"),
            Violation::Jacobi { i, j, k } => write!(f, "Jacobi fails on ({i},{j},{k})"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn jacobi_triples(&self) -> Vec<(usize, usize, usize)> {
        self.violations
            .iter()
            .filter_map(|v| match v {
                Violation::Jacobi { i, j, k } => Some((*i, *j, *k)),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        let shown: Vec<String> = self.violations.iter().take(5).map(ToString::to_string).collect();
        write!(f, "{}", shown.join("; "))?;
        if self.violations.len() > 5 {
            write!(f, " (and {} more)", self.violations.len() - 5)?;
        }
        Ok(())
    }
}

/// A subspace of `ℚ^n` stored by its canonical (reduced echelon) basis, so
/// two subspaces are equal iff their bases are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let (basis, pivots) = linalg::span_basis(ambient, vectors);
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of a contiguous run of coordinate axes.
    pub fn coordinate_range(ambient: usize, range: std::ops::Range<usize>) -> Self {
        let vecs: Vec<_> = range.map(|i| unit_vec(ambient, i)).collect();
        Subspace::span(ambient, &vecs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace (or has the wrong length).
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let recon = self.combine(&coords);
        (recon.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    /// `Σ_t a_t basis_t`.
    pub fn combine(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.ambient);
        for (a, b) in coeffs.iter().zip(&self.basis) {
            if a.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains_all(&self, vs: &[Vec<Rational>]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }
}

/// Vectors `(e, h, f)` satisfying the defining relations of `sl_2` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Vec<Rational>,
    pub h: Vec<Rational>,
    pub f: Vec<Rational>,
}

impl Sl2Triple {
    pub fn new(g: &LieAlgebra, e: Vec<Rational>, h: Vec<Rational>, f: Vec<Rational>) -> Result<Self> {
        let two = Rational::from_integer(2.into());
        let scale = |v: &[Rational], s: &Rational| v.iter().map(|x| x * s).collect::<Vec<_>>();
        let ok = g.bracket(&h, &e)? == scale(&e, &two)
            && g.bracket(&h, &f)? == scale(&f, &-two.clone())
            && g.bracket(&e, &f)? == h;
        if ok {
            Ok(Sl2Triple { e, h, f })
        } else {
            Err(Error::InvalidArgument("vectors do not satisfy the sl2 relations".into()))
        }
    }

    pub fn vectors(&self) -> [&Vec<Rational>; 3] {
        [&self.e, &self.h, &self.f]
    }
}
