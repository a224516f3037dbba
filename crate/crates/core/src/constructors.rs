//! Builders for the algebra families used throughout the crate.
//!
//! Basis orderings are part of the public contract:
//!
//! | constructor | basis order |
//! |---|---|
//! | [`special_linear(n)`] | `E_ij` for `i < j` (lexicographic), then `H_i = E_ii − E_{i+1,i+1}`, then `E_ij` for `i > j`. For `n = 2` the labels are `e, h, f`. |
//! | [`symplectic(2n)`](symplectic) | `B`-block `E_{i,n+j} + E_{j,n+i}` (`i ≤ j`, a single `E_{i,n+i}` on the diagonal), `A`-block `E_ij − E_{n+j,n+i}`, `C`-block `E_{n+i,j} + E_{n+j,i}`. For `2n = 2` this is `e, h, f` of `sl_2`. |
//! | [`heisenberg(n)`] | `e1 … e2n, z` |
//! | [`takiff(g)`](takiff) | `b_1 … b_n`, then `b_1⊗t … b_n⊗t` |
//! | [`direct_sum(g, h)`](direct_sum) | basis of `g`, then basis of `h` |
//! | [`trivial_central_extension(g)`](trivial_central_extension) | basis of `g`, then `c` |
//! | [`semidirect_with_heisenberg(g, ρ, n)`](semidirect_with_heisenberg) | basis of `g`, then `e1 … e2n, z` |
//! | [`oscillator(n)`] | `sp_2n` basis, then `e1 … e2n, z` |
//! | [`special_linear_super(m, n)`] | even `E_ij` (`i < j`), even diagonal, even `E_ij` (`i > j`), odd `E_ij` (`i < j`), odd `E_ij` (`i > j`) |
//!
//! Matrix realizations are compiled to structure constants by expanding each
//! (super-)commutator and solving for its coordinates exactly.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{koszul_sign, LieAlgebra, Parity};
use crate::linalg::{rat, Rational, RationalMatrix};
use crate::rep::{adjoint, Representation};

fn matrix_unit(size: usize, i: usize, j: usize) -> RationalMatrix {
    RationalMatrix::from_entries(size, size, [(i, j, Rational::one())])
}

fn flatten(m: &RationalMatrix) -> Vec<Rational> {
    m.to_dense().concat()
}

/// Compiles a basis of matrices closed under the (super-)commutator into
/// structure constants.
pub fn from_matrix_basis(
    labels: Vec<String>,
    parity: Option<Vec<Parity>>,
    matrices: &[RationalMatrix],
) -> Result<LieAlgebra> {
    let n = matrices.len();
    let size = matrices.first().map_or(0, RationalMatrix::nrows);
    let columns: Vec<Vec<Rational>> = matrices.iter().map(flatten).collect();
    let basis = RationalMatrix::from_columns(size * size, &columns);
    if basis.rank() != n {
        return Err(Error::InvalidArgument("matrix basis is linearly dependent".into()));
    }
    let bit = |i: usize| parity.as_ref().map_or(0, |p| p[i].bit());
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let s = koszul_sign(bit(i) & bit(j));
            let comm = matrices[i].mul(&matrices[j]).add_scaled(&matrices[j].mul(&matrices[i]), &-s);
            if comm.is_zero() {
                continue;
            }
            let coords = basis
                .solve(&flatten(&comm))?
                .ok_or_else(|| Error::InvalidArgument("matrix basis is not closed under the bracket".into()))?;
            constants.extend(coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (i, j, k, c)));
        }
    }
    LieAlgebra::from_structure_constants(labels, parity, constants)
}

/// Accumulates brackets, filling in `[b_j, b_i]` from `[b_i, b_j]` by
/// super-antisymmetry.
struct BracketTable {
    parity: Vec<u8>,
    constants: Vec<(usize, usize, usize, Rational)>,
}

impl BracketTable {
    fn new(parity: Vec<u8>) -> Self {
        BracketTable { parity, constants: Vec::new() }
    }

    fn set(&mut self, i: usize, j: usize, value: &[(usize, Rational)]) {
        let s = koszul_sign(self.parity[i] & self.parity[j]);
        for (k, c) in value.iter().filter(|(_, c)| !c.is_zero()) {
            self.constants.push((i, j, *k, c.clone()));
            if i != j {
                self.constants.push((j, i, *k, -(c * &s)));
            }
        }
    }

    fn copy_from(&mut self, g: &LieAlgebra, offset: usize) {
        for (i, j, k, c) in g.structure_constants() {
            self.constants.push((i + offset, j + offset, k + offset, c.clone()));
        }
    }
}

/// `sl_n` in the traceless matrix-unit basis.
pub fn special_linear(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("sl_n needs n >= 2, got {n}")));
    }
    let (labels, matrices) = special_linear_basis(n);
    from_matrix_basis(labels, None, &matrices)
}

fn special_linear_basis(n: usize) -> (Vec<String>, Vec<RationalMatrix>) {
    let mut labels = Vec::new();
    let mut matrices = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            labels.push(format!("E{}{}", i + 1, j + 1));
            matrices.push(matrix_unit(n, i, j));
        }
    }
    for i in 0..n - 1 {
        labels.push(format!("H{}", i + 1));
        matrices.push(matrix_unit(n, i, i).sub(&matrix_unit(n, i + 1, i + 1)));
    }
    for i in 0..n {
        for j in 0..i {
            labels.push(format!("E{}{}", i + 1, j + 1));
            matrices.push(matrix_unit(n, i, j));
        }
    }
    if n == 2 {
        labels = vec!["e".into(), "h".into(), "f".into()];
    }
    (labels, matrices)
}

fn symplectic_basis(two_n: usize) -> Result<(Vec<String>, Vec<RationalMatrix>)> {
    if two_n < 2 || !two_n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("sp_2n needs an even size >= 2, got {two_n}")));
    }
    let n = two_n / 2;
    let u = |i, j| matrix_unit(two_n, i, j);
    let mut labels = Vec::new();
    let mut matrices = Vec::new();
    for i in 0..n {
        for j in i..n {
            labels.push(format!("B{}{}", i + 1, j + 1));
            matrices.push(if i == j { u(i, n + i) } else { u(i, n + j).add(&u(j, n + i)) });
        }
    }
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("A{}{}", i + 1, j + 1));
            matrices.push(u(i, j).sub(&u(n + j, n + i)));
        }
    }
    for i in 0..n {
        for j in i..n {
            labels.push(format!("C{}{}", i + 1, j + 1));
            matrices.push(if i == j { u(n + i, i) } else { u(n + i, j).add(&u(n + j, i)) });
        }
    }
    if two_n == 2 {
        labels = vec!["e".into(), "h".into(), "f".into()];
    }
    Ok((labels, matrices))
}

/// `sp_2n` as block matrices `[[A, B], [C, −Aᵀ]]` with `B`, `C` symmetric.
pub fn symplectic(two_n: usize) -> Result<LieAlgebra> {
    let (labels, matrices) = symplectic_basis(two_n)?;
    from_matrix_basis(labels, None, &matrices)
}

/// The defining matrices of `sp_2n` on `ℚ^2n` (left multiplication).
pub fn symplectic_natural(g: &Arc<LieAlgebra>, two_n: usize) -> Result<Representation> {
    let (_, matrices) = symplectic_basis(two_n)?;
    Representation::new(g.clone(), two_n, matrices)
}

/// The matrix realization behind [`special_linear`], as a representation.
pub fn special_linear_natural(g: &Arc<LieAlgebra>, n: usize) -> Result<Representation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("sl_n needs n >= 2, got {n}")));
    }
    let (_, matrices) = special_linear_basis(n);
    Representation::new(g.clone(), n, matrices)
}

/// Heisenberg algebra `H_n` with `[e_i, e_{n+i}] = z` and `z` central.
pub fn heisenberg(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::InvalidArgument("heisenberg needs n >= 1".into()));
    }
    let mut labels: Vec<String> = (1..=2 * n).map(|i| format!("e{i}")).collect();
    labels.push("z".into());
    let z = 2 * n;
    let mut t = BracketTable::new(vec![0; 2 * n + 1]);
    for i in 0..n {
        t.set(i, n + i, &[(z, Rational::one())]);
    }
    LieAlgebra::from_structure_constants(labels, None, t.constants)
}

/// `g ⋉ V` with `V` an abelian ideal: `[x, v] = ρ(x) v`, `[v, w] = 0`.
/// New labels are produced by `label_of(k)`.
pub fn semidirect_abelian(rho: &Representation, label_of: impl Fn(usize) -> String) -> Result<LieAlgebra> {
    let g = rho.algebra();
    if g.is_graded() {
        return Err(Error::GradedInput);
    }
    let n = g.dim();
    let d = rho.dim();
    let mut labels = g.labels().to_vec();
    labels.extend((0..d).map(label_of));
    let mut t = BracketTable::new(vec![0; n + d]);
    t.copy_from(g, 0);
    for i in 0..n {
        for col in 0..d {
            let image: Vec<(usize, Rational)> = (0..d).map(|r| (n + r, rho.action(i).get(r, col))).collect();
            t.set(i, n + col, &image);
        }
    }
    LieAlgebra::from_structure_constants(labels, None, t.constants)?.validated()
}

/// Takiff algebra `g ⊗ ℚ[t]/(t²)`.
pub fn takiff(g: &LieAlgebra) -> Result<LieAlgebra> {
    if g.is_graded() {
        return Err(Error::GradedInput);
    }
    let g = Arc::new(g.clone());
    let labels = g.labels().to_vec();
    semidirect_abelian(&adjoint(&g), |k| format!("{}_t", labels[k]))
}

/// Block-diagonal `g ⊕ h`. Clashing labels in `h` get a `'` suffix.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> Result<LieAlgebra> {
    if g.is_graded() != h.is_graded() {
        return Err(Error::GradingMismatch);
    }
    let mut labels = g.labels().to_vec();
    for l in h.labels() {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let n = g.dim();
    let constants = g
        .structure_constants()
        .map(|(i, j, k, c)| (i, j, k, c.clone()))
        .chain(h.structure_constants().map(|(i, j, k, c)| (i + n, j + n, k + n, c.clone())))
        .collect::<Vec<_>>();
    let parity = match (g.parity(), h.parity()) {
        (Some(p), Some(q)) => Some(p.iter().chain(q).copied().collect()),
        _ => None,
    };
    LieAlgebra::from_structure_constants(labels, parity, constants)
}

/// `g ⊕ ℚc` with `c` central.
pub fn trivial_central_extension(g: &LieAlgebra) -> LieAlgebra {
    let mut labels = g.labels().to_vec();
    let mut c = "c".to_string();
    while labels.contains(&c) {
        c.push('\'');
    }
    labels.push(c);
    let parity = g.parity().map(|p| {
        let mut p = p.to_vec();
        p.push(Parity::Even);
        p
    });
    let constants = g.structure_constants().map(|(i, j, k, c)| (i, j, k, c.clone())).collect::<Vec<_>>();
    LieAlgebra::from_structure_constants(labels, parity, constants).expect("indices stay in range")
}

/// `g ⋉ H_n` where `g` acts on `span(e1 … e2n)` through `rho` and kills `z`.
///
/// The Jacobi identity on `(x, e_i, e_j)` holds exactly when every `ρ(x)`
/// preserves the form `ω(e_i, e_{n+i}) = 1`; other actions are rejected.
pub fn semidirect_with_heisenberg(g: &LieAlgebra, rho: &Representation, n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::InvalidArgument("heisenberg part needs n >= 1".into()));
    }
    if rho.algebra().as_ref() != g {
        return Err(Error::AlgebraMismatch);
    }
    if rho.dim() != 2 * n {
        return Err(Error::DimensionMismatch { expected: 2 * n, found: rho.dim() });
    }
    if g.is_graded() {
        return Err(Error::GradedInput);
    }
    let m = g.dim();
    let z = m + 2 * n;
    let mut labels = g.labels().to_vec();
    labels.extend((1..=2 * n).map(|i| format!("e{i}")));
    labels.push("z".into());
    let mut t = BracketTable::new(vec![0; z + 1]);
    t.copy_from(g, 0);
    for i in 0..m {
        for col in 0..2 * n {
            let image: Vec<(usize, Rational)> = (0..2 * n).map(|r| (m + r, rho.action(i).get(r, col))).collect();
            t.set(i, m + col, &image);
        }
    }
    for i in 0..n {
        t.set(m + i, m + n + i, &[(z, Rational::one())]);
    }
    let algebra = LieAlgebra::from_structure_constants(labels, None, t.constants)?;
    let report = algebra.validate();
    if report.is_empty() {
        Ok(algebra)
    } else {
        Err(Error::NotSymplectic(report))
    }
}

/// Symplectic oscillator algebra `sp_2n ⋉ H_n` with the natural action.
pub fn oscillator(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::InvalidArgument("oscillator needs n >= 1".into()));
    }
    let sp = Arc::new(symplectic(2 * n)?);
    let natural = symplectic_natural(&sp, 2 * n)?;
    semidirect_with_heisenberg(&sp, &natural, n)
}

/// `sl(m|n)`: supertraceless `(m+n)`-square matrices with block parity,
/// bracket `[X, Y] = XY − (−1)^{|X||Y|} YX`.
pub fn special_linear_super(m: usize, n: usize) -> Result<LieAlgebra> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidArgument("sl(m|n) needs m, n >= 1".into()));
    }
    if m == n {
        return Err(Error::InvalidArgument("sl(n|n) has a nontrivial center; use m != n".into()));
    }
    let size = m + n;
    let block = |i: usize| usize::from(i >= m);
    let u = |i, j| matrix_unit(size, i, j);
    let mut labels = Vec::new();
    let mut parity = Vec::new();
    let mut matrices = Vec::new();
    let mut push = |label: String, p: Parity, mat: RationalMatrix| {
        labels.push(label);
        parity.push(p);
        matrices.push(mat);
    };
    for i in 0..size {
        for j in i + 1..size {
            if block(i) == block(j) {
                push(format!("E{}{}", i + 1, j + 1), Parity::Even, u(i, j));
            }
        }
    }
    for i in 0..size - 1 {
        // E_ii − E_{i+1,i+1} inside a block, E_mm + E_{m+1,m+1} across the boundary
        let next = if i + 1 == m { u(i + 1, i + 1).scale(&rat(-1)) } else { u(i + 1, i + 1) };
        push(format!("H{}", i + 1), Parity::Even, u(i, i).sub(&next));
    }
    for i in 0..size {
        for j in 0..i {
            if block(i) == block(j) {
                push(format!("E{}{}", i + 1, j + 1), Parity::Even, u(i, j));
            }
        }
    }
    for i in 0..size {
        for j in i + 1..size {
            if block(i) != block(j) {
                push(format!("E{}{}", i + 1, j + 1), Parity::Odd, u(i, j));
            }
        }
    }
    for i in 0..size {
        for j in 0..i {
            if block(i) != block(j) {
                push(format!("E{}{}", i + 1, j + 1), Parity::Odd, u(i, j));
            }
        }
    }
    from_matrix_basis(labels, Some(parity), &matrices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Subspace;
    use crate::linalg::{in_span, unit_vec};
    use crate::rep::trivial_rep;

    #[test]
    fn sl2_constants() {
        let g = special_linear(2).unwrap();
        assert_eq!(g.dim(), 3);
        let (e, h, f) = (unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2));
        let scale = |v: &Vec<Rational>, s: i64| v.iter().map(|x| x * rat(s)).collect::<Vec<_>>();
        assert_eq!(g.bracket(&h, &e).unwrap(), scale(&e, 2));
        assert_eq!(g.bracket(&h, &f).unwrap(), scale(&f, -2));
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        assert!(special_linear(1).is_err());
    }

    #[test]
    fn dimension_formulas() {
        for n in 2..=4 {
            let g = special_linear(n).unwrap();
            assert_eq!(g.dim(), n * n - 1);
            assert!(g.validate().is_empty());
            assert!(g.is_perfect());
        }
        for n in 1..=3 {
            let sp = symplectic(2 * n).unwrap();
            assert_eq!(sp.dim(), n * (2 * n + 1));
            assert!(sp.validate().is_empty());
            let h = heisenberg(n).unwrap();
            assert_eq!(h.dim(), 2 * n + 1);
            assert!(h.validate().is_empty());
            let osc = oscillator(n).unwrap();
            assert_eq!(osc.dim(), n * (2 * n + 1) + 2 * n + 1);
        }
        assert_eq!(symplectic(8).unwrap().dim(), 36);
        assert!(symplectic(3).is_err());
        assert!(symplectic(0).is_err());
        assert!(heisenberg(0).is_err());
    }

    #[test]
    fn symplectic_block_constraint() {
        for two_n in [2, 4, 6] {
            let n = two_n / 2;
            let (_, mats) = symplectic_basis(two_n).unwrap();
            for m in &mats {
                for i in 0..n {
                    for j in 0..n {
                        // D = -A^T, B and C symmetric
                        assert_eq!(m.get(n + i, n + j), -m.get(j, i));
                        assert_eq!(m.get(i, n + j), m.get(j, n + i));
                        assert_eq!(m.get(n + i, j), m.get(n + j, i));
                    }
                }
            }
        }
    }

    #[test]
    fn sp2_is_isomorphic_to_sl2() {
        let sl2 = special_linear(2).unwrap();
        let sp2 = symplectic(2).unwrap();
        // candidate φ: e ↦ −f, h ↦ −h, f ↦ −e
        let phi = RationalMatrix::from_i64(&[&[0, 0, -1], &[0, -1, 0], &[-1, 0, 0]]);
        assert_eq!(phi.rank(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let lhs = phi.mul_vec(&sl2.bracket(&unit_vec(3, i), &unit_vec(3, j)).unwrap()).unwrap();
                let pi = phi.mul_vec(&unit_vec(3, i)).unwrap();
                let pj = phi.mul_vec(&unit_vec(3, j)).unwrap();
                assert_eq!(lhs, sp2.bracket(&pi, &pj).unwrap());
            }
        }
    }

    #[test]
    fn heisenberg_structure() {
        let h = heisenberg(1).unwrap();
        assert_eq!(h.bracket(&unit_vec(3, 0), &unit_vec(3, 1)).unwrap(), unit_vec(3, 2));
        assert_eq!(h.center(), Subspace::span(3, &[unit_vec(3, 2)]));
        assert!(!h.is_perfect());
        for n in 1..=3 {
            let h = heisenberg(n).unwrap();
            assert_eq!(h.derived_subalgebra(), Subspace::span(2 * n + 1, &[unit_vec(2 * n + 1, 2 * n)]));
        }
    }

    #[test]
    fn takiff_sl2() {
        let sl2 = special_linear(2).unwrap();
        let t = takiff(&sl2).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(t.validate().is_empty());
        assert!(t.is_perfect());
        assert!(t.center().is_zero());
        for i in 3..6 {
            for j in 3..6 {
                assert!(t.basis_bracket(i, j).is_empty());
            }
        }
        let base = Subspace::coordinate_range(6, 0..3);
        assert!(t.is_subalgebra(&base).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                let v = t.bracket(&unit_vec(6, i), &unit_vec(6, j)).unwrap();
                assert!(in_span(&v, base.basis()).unwrap());
            }
        }
        assert!(takiff(&special_linear_super(2, 1).unwrap()).is_err());
    }

    #[test]
    fn direct_sums_and_extensions() {
        let sl2 = special_linear(2).unwrap();
        let ss = direct_sum(&sl2, &sl2).unwrap();
        assert_eq!(ss.dim(), 6);
        assert!(ss.center().is_zero());
        assert!(ss.validate().is_empty());
        assert_eq!(direct_sum(&sl2, &LieAlgebra::abelian(0)).unwrap(), sl2);
        assert!(!direct_sum(&sl2, &LieAlgebra::abelian(1)).unwrap().is_perfect());
        assert_eq!(direct_sum(&sl2, &special_linear_super(2, 1).unwrap()), Err(Error::GradingMismatch));

        let ext = trivial_central_extension(&sl2);
        assert_eq!(ext.dim(), 4);
        assert_eq!(ext.center(), Subspace::span(4, &[unit_vec(4, 3)]));
        assert_eq!(ext.derived_subalgebra(), Subspace::coordinate_range(4, 0..3));
        assert!(!ext.is_perfect());
        assert!(ext.validate().is_empty());
    }

    #[test]
    fn oscillator_matches_explicit_semidirect() {
        let sp = Arc::new(symplectic(2).unwrap());
        let nat = symplectic_natural(&sp, 2).unwrap();
        let built = semidirect_with_heisenberg(&sp, &nat, 1).unwrap();
        let osc = oscillator(1).unwrap();
        assert_eq!(built, osc);
        assert!(osc.validate().is_empty());
        assert!(osc.is_perfect());
        assert_eq!(osc.center(), Subspace::span(6, &[unit_vec(6, 5)]));
        for i in 0..6 {
            assert!(osc.basis_bracket(i, 5).is_empty());
        }
    }

    #[test]
    fn trivial_action_gives_a_valid_degenerate_product() {
        let sp = Arc::new(symplectic(2).unwrap());
        let g = semidirect_with_heisenberg(&sp, &trivial_rep(&sp, 2), 1).unwrap();
        assert!(!g.is_perfect());
        assert_eq!(g.center().dim(), 1);
    }

    #[test]
    fn non_symplectic_action_is_rejected() {
        // a one-dimensional algebra acting by the identity scales ω by 2
        let a = Arc::new(LieAlgebra::abelian(1));
        let rho = Representation::new(a.clone(), 2, vec![RationalMatrix::identity(2)]).unwrap();
        let err = semidirect_with_heisenberg(&a, &rho, 1).unwrap_err();
        assert!(matches!(err, Error::NotSymplectic(_)), "{err}");
    }

    #[test]
    fn sl21_structure() {
        let g = special_linear_super(2, 1).unwrap();
        assert_eq!(g.dim(), 8);
        assert!(g.validate().is_empty(), "{}", g.validate());
        let p = g.parity().unwrap();
        assert_eq!(p.iter().filter(|x| **x == Parity::Even).count(), 4);
        assert_eq!(p.iter().filter(|x| **x == Parity::Odd).count(), 4);
        assert!(g.is_perfect());
        for i in 4..8 {
            for j in 4..8 {
                assert_eq!(g.basis_bracket(i, j), g.basis_bracket(j, i));
            }
        }
        assert!(special_linear_super(1, 1).is_err());
        assert!(special_linear_super(0, 2).is_err());
        for (m, n) in [(1, 2), (3, 1)] {
            let s = special_linear_super(m, n).unwrap();
            assert_eq!(s.dim(), (m + n) * (m + n) - 1);
            assert!(s.validate().is_empty());
        }
    }

    #[test]
    fn center_of_sl_n_vanishes() {
        for n in [2, 3] {
            assert!(special_linear(n).unwrap().center().is_zero());
        }
    }
}
