//! Finite-dimensional modules given by explicit matrices.
//!
//! A [`Representation`] assigns a `d × d` rational matrix to each basis
//! element of its algebra. For graded algebras the bracket relation uses the
//! super-commutator:
//!
//! `ρ([b_i, b_j]) = ρ(b_i)ρ(b_j) − (−1)^{|b_i||b_j|} ρ(b_j)ρ(b_i)`.
//!
//! Linear maps `D: 𝔤 → V` are flattened with index `i · dim V + k` for the
//! `k`-th coordinate of `D(b_i)`. This convention is used throughout the crate.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{koszul_sign, LieAlgebra, Parity, Subspace};
use crate::linalg::{self, rat, zero_vec, Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    matrices: Vec<RationalMatrix>,
    parity: Option<Vec<Parity>>,
}

impl Representation {
    /// Checks shapes and the bracket relation on every basis pair.
    pub fn new(algebra: Arc<LieAlgebra>, dim: usize, matrices: Vec<RationalMatrix>) -> Result<Self> {
        let rep = Self::new_unchecked(algebra, dim, matrices)?;
        let bad = rep.invariant_violations();
        if bad.is_empty() {
            Ok(rep)
        } else {
            Err(Error::InvalidRepresentation(bad))
        }
    }

    /// Checks shapes only.
    pub fn new_unchecked(algebra: Arc<LieAlgebra>, dim: usize, matrices: Vec<RationalMatrix>) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: matrices.len() });
        }
        if let Some(m) = matrices.iter().find(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: m.nrows().max(m.ncols()) });
        }
        Ok(Representation { algebra, dim, matrices, parity: None })
    }

    /// Attaches a grading of the module space.
    pub fn with_parity(mut self, parity: Vec<Parity>) -> Result<Self> {
        if parity.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: parity.len() });
        }
        self.parity = Some(parity);
        Ok(self)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    pub fn action(&self, i: usize) -> &RationalMatrix {
        &self.matrices[i]
    }

    pub fn parity(&self) -> Option<&[Parity]> {
        self.parity.as_deref()
    }

    /// `ρ(x)` for an arbitrary algebra element `x`.
    pub fn matrix_of(&self, x: &[Rational]) -> Result<RationalMatrix> {
        if x.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch { expected: self.algebra.dim(), found: x.len() });
        }
        Ok(x.iter()
            .zip(&self.matrices)
            .filter(|(c, _)| !c.is_zero())
            .fold(RationalMatrix::zeros(self.dim, self.dim), |acc, (c, m)| acc.add_scaled(m, c)))
    }

    /// `x · v`.
    pub fn act(&self, x: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        Ok(self.matrix_of(x)?.mul_vec(v)?)
    }

    /// Basis pairs `(i, j)` with `i ≤ j` on which the bracket relation fails.
    pub fn invariant_violations(&self) -> Vec<(usize, usize)> {
        let g = &self.algebra;
        let n = g.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let lhs =
                    g.basis_bracket(i, j).iter().fold(RationalMatrix::zeros(self.dim, self.dim), |acc, (k, c)| {
                        acc.add_scaled(&self.matrices[*k], c)
                    });
                let s = koszul_sign(g.parity_of(i).bit() & g.parity_of(j).bit());
                let rhs =
                    self.matrices[i].mul(&self.matrices[j]).add_scaled(&self.matrices[j].mul(&self.matrices[i]), &-s);
                if lhs != rhs {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    pub fn is_valid(&self) -> bool {
        self.invariant_violations().is_empty()
    }
}

/// `ρ(b_i) = ad(b_i)`.
pub fn adjoint(g: &Arc<LieAlgebra>) -> Representation {
    let matrices = (0..g.dim()).map(|i| g.ad_matrix(i)).collect();
    let rep = Representation { algebra: g.clone(), dim: g.dim(), matrices, parity: None };
    match g.parity() {
        Some(p) => rep.with_parity(p.to_vec()).expect("parity length matches"),
        None => rep,
    }
}

/// The zero action on `ℚ^d`.
pub fn trivial_rep(g: &Arc<LieAlgebra>, d: usize) -> Representation {
    Representation { algebra: g.clone(), dim: d, matrices: vec![RationalMatrix::zeros(d, d); g.dim()], parity: None }
}

/// The irreducible `sl_2`-module of highest weight `m`, acting on the
/// algebra built by [`special_linear(2)`](crate::constructors::special_linear).
///
/// Basis `v_0, …, v_m` with integral action
/// `h v_k = (m − 2k) v_k`, `f v_k = (k + 1) v_{k+1}`, `e v_k = (m − k + 1) v_{k−1}`.
pub fn sl2_irrep(m: usize) -> Representation {
    let g = Arc::new(crate::constructors::special_linear(2).expect("n = 2 is valid"));
    sl2_irrep_on(&g, m)
}

pub(crate) fn sl2_irrep_on(g: &Arc<LieAlgebra>, m: usize) -> Representation {
    let d = m + 1;
    let mi = m as i64;
    let e = RationalMatrix::from_entries(d, d, (1..d).map(|k| (k - 1, k, rat(mi - k as i64 + 1))));
    let h = RationalMatrix::from_entries(d, d, (0..d).map(|k| (k, k, rat(mi - 2 * k as i64))));
    let f = RationalMatrix::from_entries(d, d, (0..m).map(|k| (k + 1, k, rat(k as i64 + 1))));
    Representation { algebra: g.clone(), dim: d, matrices: vec![e, h, f], parity: None }
}

/// Block-diagonal `a ⊕ b`.
pub fn direct_sum_rep(a: &Representation, b: &Representation) -> Result<Representation> {
    if a.algebra != b.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let matrices = a.matrices.iter().zip(&b.matrices).map(|(x, y)| x.block_diag(y)).collect();
    let parity = match (&a.parity, &b.parity) {
        (Some(p), Some(q)) => Some(p.iter().chain(q).copied().collect()),
        _ => None,
    };
    Ok(Representation { algebra: a.algebra.clone(), dim: a.dim + b.dim, matrices, parity })
}

/// `Z_V(𝔤) = {v : ρ(b_i) v = 0 for all i}`.
pub fn invariants_subspace(rep: &Representation) -> Subspace {
    let d = rep.dim;
    let rows: Vec<Vec<(usize, Rational)>> =
        rep.matrices.iter().flat_map(|m| (0..d).map(move |r| m.row(r).to_vec())).collect();
    let stacked = RationalMatrix::from_sparse_rows(d, rows);
    Subspace::span(d, &stacked.nullspace_basis())
}

/// Restriction to a subalgebra `s`, as a representation of the abstract
/// algebra carried by `s` (see [`LieAlgebra::subalgebra`]).
pub fn restrict(rep: &Representation, s: &Subspace) -> Result<Representation> {
    let sub = Arc::new(rep.algebra.subalgebra(s)?);
    let matrices = s.basis().iter().map(|u| rep.matrix_of(u)).collect::<Result<Vec<_>>>()?;
    Ok(Representation { algebra: sub, dim: rep.dim, matrices, parity: rep.parity.clone() })
}

/// Basis of `Hom_𝔤(a, b) = {T : T ρ_a(x) = ρ_b(x) T for all x}` as
/// `dim b × dim a` matrices. `T[r][c]` is unknown number `r · dim a + c`.
pub fn module_hom_space(a: &Representation, b: &Representation) -> Result<Vec<RationalMatrix>> {
    if a.algebra != b.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let (da, db) = (a.dim, b.dim);
    let unknown = |r: usize, c: usize| r * da + c;
    let mut rows = Vec::new();
    for (ra, rb) in a.matrices.iter().zip(&b.matrices) {
        // (T ρ_a)[r][c] − (ρ_b T)[r][c]
        let mut eqs: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); db * da];
        for (s, c, v) in ra.entries() {
            for r in 0..db {
                eqs[r * da + c].push((unknown(r, s), v.clone()));
            }
        }
        for (r, s, v) in rb.entries() {
            for c in 0..da {
                eqs[r * da + c].push((unknown(s, c), -v.clone()));
            }
        }
        rows.extend(eqs);
    }
    let system = RationalMatrix::from_sparse_rows(da * db, rows);
    Ok(system
        .nullspace_basis()
        .into_iter()
        .map(|t| {
            RationalMatrix::from_entries(
                db,
                da,
                t.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(idx, v)| (idx / da, idx % da, v)),
            )
        })
        .collect())
}

/// Derivations, inner derivations and `dim H¹` of `𝔤` with coefficients in a module.
#[derive(Debug, Clone)]
pub struct DerivationSpace {
    pub rep: Representation,
    /// Canonical basis of `Der(𝔤, V)`, flattened.
    pub der_basis: Vec<Vec<Rational>>,
    /// Canonical basis of `IDer(𝔤, V)`, flattened.
    pub inner_basis: Vec<Vec<Rational>>,
    pub h1_dim: usize,
}

impl DerivationSpace {
    pub fn der_dim(&self) -> usize {
        self.der_basis.len()
    }

    pub fn inner_dim(&self) -> usize {
        self.inner_basis.len()
    }
}

/// Solves `D([x,y]) = x·D(y) − (−1)^{|x||y|} y·D(x)` on all basis pairs and
/// quotients by the inner derivations `D_v(x) = x·v`.
pub fn derivation_space(rep: &Representation) -> DerivationSpace {
    let g = &rep.algebra;
    let (n, d) = (g.dim(), rep.dim);
    let idx = |i: usize, k: usize| i * d + k;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let s = koszul_sign(g.parity_of(i).bit() & g.parity_of(j).bit());
            let mut eqs: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d];
            for (l, c) in g.basis_bracket(i, j) {
                for (k, eq) in eqs.iter_mut().enumerate() {
                    eq.push((idx(*l, k), c.clone()));
                }
            }
            for (k, t, v) in rep.matrices[i].entries() {
                eqs[k].push((idx(j, t), -v.clone()));
            }
            for (k, t, v) in rep.matrices[j].entries() {
                eqs[k].push((idx(i, t), v * &s));
            }
            rows.extend(eqs);
        }
    }
    let der_basis = RationalMatrix::from_sparse_rows(n * d, rows).nullspace_basis();

    let inner_generators: Vec<Vec<Rational>> = (0..d)
        .map(|t| {
            let mut v = zero_vec(n * d);
            for (i, m) in rep.matrices.iter().enumerate() {
                for k in 0..d {
                    v[idx(i, k)] = m.get(k, t);
                }
            }
            v
        })
        .collect();
    let (inner_basis, _) = linalg::span_basis(n * d, &inner_generators);
    let h1_dim = der_basis.len() - inner_basis.len();
    DerivationSpace { rep: rep.clone(), der_basis, inner_basis, h1_dim }
}
