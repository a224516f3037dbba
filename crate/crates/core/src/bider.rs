//! Biderivation and super-biderivation solution spaces.
//!
//! A bilinear map `δ: 𝔤 × 𝔤 → V` is a biderivation when
//!
//! ```text
//! δ([x,y], z) = x·δ(y,z) − y·δ(x,z)
//! δ(x, [y,z]) = y·δ(x,z) − z·δ(x,y)
//! ```
//!
//! for all `x, y, z`. For a Lie superalgebra and a homogeneous `δ` of parity
//! `|δ|` with values in the adjoint module the identities carry Koszul signs:
//!
//! ```text
//! δ([x,y], z) = (−1)^{|δ||x|} [x, δ(y,z)] − (−1)^{|y|(|δ|+|x|)} [y, δ(x,z)]
//! δ(x, [y,z]) = (−1)^{(|δ|+|x|)|y|} [y, δ(x,z)] − (−1)^{|z|(|δ|+|x|+|y|)} [z, δ(x,y)]
//! ```
//!
//! Both forms are assembled into one sparse linear system over all ordered
//! basis triples; the ungraded case is the graded one with every parity even.
//! Unknown `δ(b_i, b_j)_k` has flat index `i·n·d + j·d + k` where `n = dim 𝔤`
//! and `d = dim V`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{koszul_sign, LieAlgebra, Parity, Sl2Triple, Subspace};
use crate::linalg::{is_zero_vec, zero_vec, Rational, RationalMatrix};
use crate::rep::{adjoint, invariants_subspace, module_hom_space, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Full,
    Symmetric,
    Skew,
    SuperSymmetric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Full => "full",
            Mode::Symmetric => "symmetric",
            Mode::Skew => "skew",
            Mode::SuperSymmetric => "super-symmetric",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Mode::Full),
            "symmetric" => Ok(Mode::Symmetric),
            "skew" => Ok(Mode::Skew),
            "super-symmetric" => Ok(Mode::SuperSymmetric),
            other => Err(Error::InvalidArgument(format!("unknown mode {other:?}"))),
        }
    }
}

/// Canonical basis of a space of bilinear maps `𝔤 × 𝔤 → V` satisfying the
/// biderivation identities, plus the symmetry constraint that produced it.
#[derive(Debug, Clone)]
pub struct BilinearSolutionSpace {
    pub(crate) algebra: Arc<LieAlgebra>,
    pub(crate) target: Representation,
    pub(crate) mode: Mode,
    pub(crate) delta_parity: Option<Parity>,
    pub(crate) basis: Vec<Vec<Rational>>,
}

impl BilinearSolutionSpace {
    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Parity of `δ` for super-biderivation spaces, `None` otherwise.
    pub fn delta_parity(&self) -> Option<Parity> {
        self.delta_parity
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of scalar unknowns, `n · n · d`.
    pub fn unknowns(&self) -> usize {
        let n = self.algebra.dim();
        n * n * self.target.dim()
    }

    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        flat_index(self.algebra.dim(), self.target.dim(), i, j, k)
    }

    /// `δ_s(b_i, b_j)` for basis solution `s`.
    pub fn value(&self, s: usize, i: usize, j: usize) -> &[Rational] {
        let start = self.index(i, j, 0);
        &self.basis[s][start..start + self.target.dim()]
    }

    /// `δ_s(x, y)` for arbitrary algebra elements.
    pub fn eval(&self, s: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.target.dim();
        let mut out = zero_vec(d);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yj;
                for (o, v) in out.iter_mut().zip(self.value(s, i, j)) {
                    if !v.is_zero() {
                        *o += v * &w;
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn flat_index(n: usize, d: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * d + k
}

/// Row assembly for the (super-)biderivation identities.
fn assemble(
    g: &LieAlgebra,
    rho: &Representation,
    module_parity: Option<&[u8]>,
    delta_parity: u8,
    mode: Mode,
) -> RationalMatrix {
    let n = g.dim();
    let d = rho.dim();
    let idx = |i, j, k| flat_index(n, d, i, j, k);
    let par = g.parity_bits();
    let p = delta_parity;
    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();

    for i in 0..n {
        for j in 0..n {
            match mode {
                Mode::Full => {}
                Mode::Symmetric if i < j => {
                    for k in 0..d {
                        rows.push(vec![(idx(i, j, k), Rational::one()), (idx(j, i, k), -Rational::one())]);
                    }
                }
                Mode::Skew if i <= j => {
                    for k in 0..d {
                        rows.push(vec![(idx(i, j, k), Rational::one()), (idx(j, i, k), Rational::one())]);
                    }
                }
                Mode::SuperSymmetric if i <= j => {
                    let s = koszul_sign(par[i] & par[j]);
                    for k in 0..d {
                        rows.push(vec![(idx(i, j, k), Rational::one()), (idx(j, i, k), -s.clone())]);
                    }
                }
                _ => {}
            }
            if let Some(mp) = module_parity {
                for (k, &pk) in mp.iter().enumerate() {
                    if pk != par[i] ^ par[j] ^ p {
                        rows.push(vec![(idx(i, j, k), Rational::one())]);
                    }
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let (a, b, c) = (par[i], par[j], par[l]);

                // δ([x,y],z) − s1·x·δ(y,z) + s2·y·δ(x,z)
                let s1 = koszul_sign(p & a);
                let s2 = koszul_sign(b & (p ^ a));
                let mut eqs: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d];
                for (m, cm) in g.basis_bracket(i, j) {
                    for (k, eq) in eqs.iter_mut().enumerate() {
                        eq.push((idx(*m, l, k), cm.clone()));
                    }
                }
                for (k, t, v) in rho.action(i).entries() {
                    eqs[k].push((idx(j, l, t), -(v * &s1)));
                }
                for (k, t, v) in rho.action(j).entries() {
                    eqs[k].push((idx(i, l, t), v * &s2));
                }
                rows.extend(eqs);

                // δ(x,[y,z]) − s3·y·δ(x,z) + s4·z·δ(x,y)
                let s3 = koszul_sign((p ^ a) & b);
                let s4 = koszul_sign(c & (p ^ a ^ b));
                let mut eqs: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); d];
                for (m, cm) in g.basis_bracket(j, l) {
                    for (k, eq) in eqs.iter_mut().enumerate() {
                        eq.push((idx(i, *m, k), cm.clone()));
                    }
                }
                for (k, t, v) in rho.action(j).entries() {
                    eqs[k].push((idx(i, l, t), -(v * &s3)));
                }
                for (k, t, v) in rho.action(l).entries() {
                    eqs[k].push((idx(i, j, t), v * &s4));
                }
                rows.extend(eqs);
            }
        }
    }
    RationalMatrix::from_sparse_rows(n * n * d, rows)
}

/// Biderivations from an ordinary Lie algebra to a module, optionally
/// constrained to be symmetric or skew-symmetric.
pub fn biderivation_space(g: &Arc<LieAlgebra>, v: &Representation, mode: Mode) -> Result<BilinearSolutionSpace> {
    if g.is_graded() {
        return Err(Error::GradedInput);
    }
    if v.algebra() != g {
        return Err(Error::AlgebraMismatch);
    }
    if mode == Mode::SuperSymmetric {
        return Err(Error::InvalidArgument("super-symmetric mode needs a graded algebra".into()));
    }
    let basis = assemble(g, v, None, 0, mode).nullspace_basis();
    Ok(BilinearSolutionSpace { algebra: g.clone(), target: v.clone(), mode, delta_parity: None, basis })
}

/// Homogeneous super-biderivations `𝔤 × 𝔤 → 𝔤` of the given parity, with
/// values in the adjoint module.
pub fn super_biderivation_space(
    g: &Arc<LieAlgebra>,
    parity: Parity,
    supersymmetric: bool,
) -> Result<BilinearSolutionSpace> {
    if !g.is_graded() {
        return Err(Error::UngradedInput);
    }
    let target = adjoint(g);
    let mode = if supersymmetric { Mode::SuperSymmetric } else { Mode::Full };
    let par = g.parity_bits();
    let basis = assemble(g, &target, Some(&par), parity.bit(), mode).nullspace_basis();
    Ok(BilinearSolutionSpace { algebra: g.clone(), target, mode, delta_parity: Some(parity), basis })
}

/// The bracket itself as a flattened bilinear map `𝔤 × 𝔤 → 𝔤`.
pub fn bracket_as_bilinear(g: &LieAlgebra) -> Vec<Rational> {
    let n = g.dim();
    let mut v = zero_vec(n * n * n);
    for (i, j, k, c) in g.structure_constants() {
        v[flat_index(n, n, i, j, k)] = c.clone();
    }
    v
}

/// Which defining identity failed, on which basis triple, for which basis solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityViolation {
    pub solution: usize,
    /// 1 for the left identity `δ([x,y],z) = …`, 2 for the right one.
    pub identity: u8,
    pub triple: (usize, usize, usize),
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = if self.identity == 1 { "left" } else { "right" };
        let (i, j, l) = self.triple;
        write!(f, "solution {} violates the {side} identity on ({i},{j},{l})", self.solution)
    }
}

fn act_on(rho: &Representation, i: usize, v: &[Rational]) -> Vec<Rational> {
    rho.action(i).mul_vec(v).expect("action matches module dimension")
}

fn axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

/// Substitutes every basis solution back into the defining identities on
/// every basis triple. Returns the first violation found.
pub fn verify_identities(space: &BilinearSolutionSpace) -> Result<(), IdentityViolation> {
    let g = &space.algebra;
    let rho = &space.target;
    let n = g.dim();
    let d = rho.dim();
    let par = g.parity_bits();
    let p = space.delta_parity.map_or(0, Parity::bit);
    for s in 0..space.dim() {
        let val = |i: usize, j: usize| space.value(s, i, j);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let (a, b, c) = (par[i], par[j], par[l]);

                    let mut left = zero_vec(d);
                    for (m, cm) in g.basis_bracket(i, j) {
                        axpy(&mut left, cm, val(*m, l));
                    }
                    axpy(&mut left, &-koszul_sign(p & a), &act_on(rho, i, val(j, l)));
                    axpy(&mut left, &koszul_sign(b & (p ^ a)), &act_on(rho, j, val(i, l)));
                    if !is_zero_vec(&left) {
                        return Err(IdentityViolation { solution: s, identity: 1, triple: (i, j, l) });
                    }

                    let mut right = zero_vec(d);
                    for (m, cm) in g.basis_bracket(j, l) {
                        axpy(&mut right, cm, val(i, *m));
                    }
                    axpy(&mut right, &-koszul_sign((p ^ a) & b), &act_on(rho, j, val(i, l)));
                    axpy(&mut right, &koszul_sign(c & (p ^ a ^ b)), &act_on(rho, l, val(i, j)));
                    if !is_zero_vec(&right) {
                        return Err(IdentityViolation { solution: s, identity: 2, triple: (i, j, l) });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks the symmetry constraint (and, for super spaces, homogeneity)
/// coordinatewise on every basis solution.
pub fn check_mode(space: &BilinearSolutionSpace) -> bool {
    let g = &space.algebra;
    let n = g.dim();
    let par = g.parity_bits();
    let module_par = space.delta_parity.map(|_| space.target.parity().map(|p| p.to_vec()));
    (0..space.dim()).all(|s| {
        (0..n).all(|i| {
            (0..n).all(|j| {
                let a = space.value(s, i, j);
                let b = space.value(s, j, i);
                let sym_ok = match space.mode {
                    Mode::Full => true,
                    Mode::Symmetric => a == b,
                    Mode::Skew => a.iter().zip(b).all(|(x, y)| *x == -y.clone()),
                    Mode::SuperSymmetric => {
                        let sg = koszul_sign(par[i] & par[j]);
                        a.iter().zip(b).all(|(x, y)| *x == y * &sg)
                    }
                };
                let parity_ok = match (&module_par, space.delta_parity) {
                    (Some(Some(mp)), Some(dp)) => {
                        a.iter().zip(mp).all(|(x, pk)| x.is_zero() || pk.bit() == par[i] ^ par[j] ^ dp.bit())
                    }
                    _ => true,
                };
                sym_ok && parity_ok
            })
        })
    })
}

fn require_mode(space: &BilinearSolutionSpace, mode: Mode) -> Result<()> {
    if space.mode != mode {
        return Err(Error::WrongMode { expected: mode_name(mode), found: space.mode.to_string() });
    }
    Ok(())
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Full => "full",
        Mode::Symmetric => "symmetric",
        Mode::Skew => "skew",
        Mode::SuperSymmetric => "super-symmetric",
    }
}

/// `δ(x,[y,z]) + δ(y,[z,x]) + δ(z,[x,y]) = 0` on all basis triples, for every
/// symmetric solution.
pub fn check_cyclic_identity(space: &BilinearSolutionSpace) -> Result<bool> {
    require_mode(space, Mode::Symmetric)?;
    let g = &space.algebra;
    let n = g.dim();
    let d = space.target.dim();
    for s in 0..space.dim() {
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let mut sum = zero_vec(d);
                    for (x, y, z) in [(i, j, l), (j, l, i), (l, i, j)] {
                        for (m, c) in g.basis_bracket(y, z) {
                            axpy(&mut sum, c, space.value(s, x, *m));
                        }
                    }
                    if !is_zero_vec(&sum) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Every symmetric solution vanishes on `[𝔤,𝔤] × Z(𝔤)`.
pub fn check_center_annihilation(space: &BilinearSolutionSpace) -> Result<bool> {
    require_mode(space, Mode::Symmetric)?;
    let derived = space.algebra.derived_subalgebra();
    let center = space.algebra.center();
    Ok((0..space.dim())
        .all(|s| derived.basis().iter().all(|u| center.basis().iter().all(|c| is_zero_vec(&space.eval(s, u, c))))))
}

/// Every symmetric solution vanishes on `span(e,h,f) × span(e,h,f)` for each
/// given `sl_2`-triple.
pub fn check_sl2_restriction(space: &BilinearSolutionSpace, triples: &[Sl2Triple]) -> Result<bool> {
    require_mode(space, Mode::Symmetric)?;
    Ok((0..space.dim()).all(|s| {
        triples
            .iter()
            .all(|t| t.vectors().iter().all(|u| t.vectors().iter().all(|w| is_zero_vec(&space.eval(s, u, w)))))
    }))
}

/// A skew solution written as `δ(x,y) = γ([x,y])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// `dim V × dim 𝔤` module homomorphism.
    pub gamma: RationalMatrix,
    /// Number of nonzero coordinates of `δ − γ∘[·,·]`; zero for a genuine factorization.
    pub residual: usize,
}

/// Factors each skew solution through the bracket, `δ(x,y) = γ([x,y])` with
/// `γ ∈ Hom_𝔤(𝔤, V)`. Requires `𝔤` perfect and `Z_V(𝔤) = 0`.
pub fn skew_factorization(space: &BilinearSolutionSpace) -> Result<Vec<Factorization>> {
    require_mode(space, Mode::Skew)?;
    let g = &space.algebra;
    if !g.is_perfect() {
        return Err(Error::HypothesesViolated("algebra is not perfect".into()));
    }
    if !invariants_subspace(&space.target).is_zero() {
        return Err(Error::HypothesesViolated("module has nonzero invariants".into()));
    }
    factor_through_bracket(space)
}

/// Like [`skew_factorization`] but without checking the hypotheses: tries to
/// factor every skew solution through the bracket and fails with
/// [`Error::NoFactorization`] on the first one that does not.
pub fn factor_through_bracket(space: &BilinearSolutionSpace) -> Result<Vec<Factorization>> {
    require_mode(space, Mode::Skew)?;
    let g = &space.algebra;
    if space.dim() == 0 {
        return Ok(Vec::new());
    }
    let n = g.dim();
    let d = space.target.dim();
    let homs = module_hom_space(&adjoint(g), &space.target)?;
    let compose = |gamma: &RationalMatrix| -> Vec<Rational> {
        let mut v = zero_vec(n * n * d);
        for i in 0..n {
            for j in 0..n {
                for (m, c) in g.basis_bracket(i, j) {
                    for k in 0..d {
                        let x = gamma.get(k, *m);
                        if !x.is_zero() {
                            v[flat_index(n, d, i, j, k)] += c * &x;
                        }
                    }
                }
            }
        }
        v
    };
    let columns: Vec<Vec<Rational>> = homs.iter().map(compose).collect();
    let system = RationalMatrix::from_columns(n * n * d, &columns);
    space
        .basis
        .iter()
        .enumerate()
        .map(|(index, delta)| {
            let coeffs = system.solve(delta)?.ok_or(Error::NoFactorization { index })?;
            let gamma = coeffs.iter().zip(&homs).fold(RationalMatrix::zeros(d, n), |acc, (a, h)| acc.add_scaled(h, a));
            let recomposed = compose(&gamma);
            let residual = delta.iter().zip(&recomposed).filter(|(x, y)| x != y).count();
            Ok(Factorization { gamma, residual })
        })
        .collect()
}

/// Conditions under which symmetric biderivations of an algebra containing a
/// semisimple subalgebra `𝔤₀` vanish. Semisimplicity of `𝔤₀` is the caller's claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerConditions {
    pub perfect: bool,
    /// `Z_𝔤(𝔤₀)` equals the center of `𝔤`.
    pub centralizer_is_center: bool,
    /// `Z_𝔤(𝔤₀) = 0`, i.e. `𝔤` is faithful as a `𝔤₀`-module.
    pub faithful: bool,
    pub centralizer_dim: usize,
    pub center_dim: usize,
}

impl CentralizerConditions {
    /// Either route to vanishing applies: faithful, or perfect with the
    /// centralizer equal to the center.
    pub fn vanishing_applies(&self) -> bool {
        self.faithful || (self.perfect && self.centralizer_is_center)
    }
}

pub fn check_centralizer_conditions(g: &LieAlgebra, g0: &Subspace) -> Result<CentralizerConditions> {
    if !g.is_subalgebra(g0)? {
        return Err(Error::NotSubalgebra);
    }
    let full = g.full_space();
    let centralizer = g.centralizer(g0, &full)?;
    let center = g.center();
    Ok(CentralizerConditions {
        perfect: g.is_perfect(),
        centralizer_is_center: centralizer == center,
        faithful: centralizer.is_zero(),
        centralizer_dim: centralizer.dim(),
        center_dim: center.dim(),
    })
}

/// Conditions under which super-symmetric biderivations of a Lie
/// superalgebra vanish. Reductivity of the even part is not decided here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddCentralizerConditions {
    pub perfect: bool,
    /// Always `"caller-asserted"`: deciding reductivity needs a Levi decomposition.
    pub even_part_reductive: &'static str,
    pub odd_centralizer_dim: usize,
    pub odd_centralizer_at_most_one: bool,
}

pub fn check_odd_centralizer_conditions(g: &LieAlgebra, g0: &Subspace) -> Result<OddCentralizerConditions> {
    if !g.is_graded() {
        return Err(Error::UngradedInput);
    }
    let even = g.homogeneous_part(Parity::Even);
    if g0.ambient_dim() != g.dim() {
        return Err(Error::AmbientMismatch { expected: g.dim(), found: g0.ambient_dim() });
    }
    if !g0.is_subspace_of(&even) {
        return Err(Error::NotInEvenPart);
    }
    if !g.is_subalgebra(g0)? {
        return Err(Error::NotSubalgebra);
    }
    let odd = g.homogeneous_part(Parity::Odd);
    let z = g.centralizer(g0, &odd)?;
    Ok(OddCentralizerConditions {
        perfect: g.is_perfect(),
        even_part_reductive: "caller-asserted",
        odd_centralizer_dim: z.dim(),
        odd_centralizer_at_most_one: z.dim() <= 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        heisenberg, oscillator, special_linear, special_linear_super, trivial_central_extension,
    };
    use crate::linalg::{in_span, unit_vec};
    use crate::rep::{sl2_irrep, trivial_rep};

    fn arc(g: LieAlgebra) -> Arc<LieAlgebra> {
        Arc::new(g)
    }

    #[test]
    fn sl2_symmetric_vanishes() {
        let g = arc(special_linear(2).unwrap());
        let s = biderivation_space(&g, &adjoint(&g), Mode::Symmetric).unwrap();
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn sl2_skew_is_the_bracket() {
        let g = arc(special_linear(2).unwrap());
        let s = biderivation_space(&g, &adjoint(&g), Mode::Skew).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(in_span(&bracket_as_bilinear(&g), s.basis()).unwrap());
        let f = skew_factorization(&s).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].residual, 0);
        // γ is a scalar multiple of the identity
        let gamma = &f[0].gamma;
        assert!(gamma.get(0, 0) != Rational::zero());
        assert_eq!(gamma, &RationalMatrix::identity(3).scale(&gamma.get(0, 0)));
    }

    #[test]
    fn reductive_family_lives_on_cc() {
        let g = arc(trivial_central_extension(&special_linear(2).unwrap()));
        let s = biderivation_space(&g, &adjoint(&g), Mode::Symmetric).unwrap();
        assert_eq!(s.dim(), 1);
        let v = &s.basis()[0];
        let support: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        assert_eq!(support, vec![s.index(3, 3, 3)]);
        assert!(check_cyclic_identity(&s).unwrap());
        assert!(check_center_annihilation(&s).unwrap());
    }

    #[test]
    fn abelian_degenerates() {
        let a = arc(LieAlgebra::abelian(1));
        let s = biderivation_space(&a, &trivial_rep(&a, 1), Mode::Full).unwrap();
        assert_eq!(s.dim(), 1);
        let a2 = arc(LieAlgebra::abelian(2));
        assert_eq!(biderivation_space(&a2, &trivial_rep(&a2, 1), Mode::Full).unwrap().dim(), 4);
        let z = arc(LieAlgebra::abelian(0));
        assert_eq!(biderivation_space(&z, &trivial_rep(&z, 3), Mode::Symmetric).unwrap().dim(), 0);
    }

    #[test]
    fn errors() {
        let g = arc(special_linear_super(2, 1).unwrap());
        assert_eq!(biderivation_space(&g, &adjoint(&g), Mode::Full).unwrap_err(), Error::GradedInput);
        let h = arc(special_linear(2).unwrap());
        assert_eq!(super_biderivation_space(&h, Parity::Even, true).unwrap_err(), Error::UngradedInput);
        assert_eq!(biderivation_space(&h, &adjoint(&g), Mode::Full).unwrap_err(), Error::AlgebraMismatch);
        let sym = biderivation_space(&h, &adjoint(&h), Mode::Symmetric).unwrap();
        assert!(matches!(skew_factorization(&sym), Err(Error::WrongMode { .. })));
        let skew = biderivation_space(&h, &adjoint(&h), Mode::Skew).unwrap();
        assert!(matches!(check_cyclic_identity(&skew), Err(Error::WrongMode { .. })));
        assert!(matches!(check_center_annihilation(&skew), Err(Error::WrongMode { .. })));
    }

    #[test]
    fn skew_factorization_hypotheses() {
        let h = arc(heisenberg(1).unwrap());
        let s = biderivation_space(&h, &adjoint(&h), Mode::Skew).unwrap();
        assert!(matches!(skew_factorization(&s), Err(Error::HypothesesViolated(_))));
        let g = arc(special_linear(2).unwrap());
        let s = biderivation_space(&g, &trivial_rep(&g, 1), Mode::Skew).unwrap();
        assert!(matches!(skew_factorization(&s), Err(Error::HypothesesViolated(_))));
        let s = biderivation_space(&g, &sl2_irrep_on(&g, 1), Mode::Skew).unwrap();
        assert_eq!(s.dim(), 0);
        assert!(skew_factorization(&s).unwrap().is_empty());
    }

    fn sl2_irrep_on(g: &Arc<LieAlgebra>, m: usize) -> Representation {
        let v = sl2_irrep(m);
        Representation::new(g.clone(), v.dim(), v.matrices().to_vec()).unwrap()
    }

    #[test]
    fn oscillator_skew_solutions_factor_without_the_hypotheses() {
        let g = arc(oscillator(1).unwrap());
        let s = biderivation_space(&g, &adjoint(&g), Mode::Skew).unwrap();
        assert!(matches!(skew_factorization(&s), Err(Error::HypothesesViolated(_))));
        let f = factor_through_bracket(&s).unwrap();
        assert_eq!(f.len(), s.dim());
        assert!(f.iter().all(|x| x.residual == 0));
    }

    #[test]
    fn heisenberg_symmetric_solutions_kill_derived_times_center() {
        let h = arc(heisenberg(1).unwrap());
        let s = biderivation_space(&h, &adjoint(&h), Mode::Symmetric).unwrap();
        assert!(verify_identities(&s).is_ok());
        assert!(check_mode(&s));
        assert!(check_center_annihilation(&s).unwrap());
        assert!(check_cyclic_identity(&s).unwrap());
        let z = unit_vec(3, 2);
        for k in 0..s.dim() {
            assert!(is_zero_vec(&s.eval(k, &z, &z)));
        }
    }

    #[test]
    fn full_splits_into_symmetric_and_skew() {
        for g in
            [special_linear(2).unwrap(), heisenberg(1).unwrap(), trivial_central_extension(&special_linear(2).unwrap())]
        {
            let g = arc(g);
            let ad = adjoint(&g);
            let full = biderivation_space(&g, &ad, Mode::Full).unwrap().dim();
            let sym = biderivation_space(&g, &ad, Mode::Symmetric).unwrap().dim();
            let skew = biderivation_space(&g, &ad, Mode::Skew).unwrap().dim();
            assert_eq!(full, sym + skew);
        }
    }

    #[test]
    fn sl21_super_spaces() {
        let g = arc(special_linear_super(2, 1).unwrap());
        for p in [Parity::Even, Parity::Odd] {
            let s = super_biderivation_space(&g, p, true).unwrap();
            assert_eq!(s.dim(), 0, "parity {p}");
        }
        let even = super_biderivation_space(&g, Parity::Even, false).unwrap();
        assert!(in_span(&bracket_as_bilinear(&g), even.basis()).unwrap());
        assert!(verify_identities(&even).is_ok());
        assert!(check_mode(&even));
    }

    #[test]
    fn corrupted_solution_is_diagnosed() {
        let g = arc(special_linear(2).unwrap());
        let mut s = biderivation_space(&g, &adjoint(&g), Mode::Skew).unwrap();
        s.basis[0][0] += Rational::one();
        let err = verify_identities(&s).unwrap_err();
        assert_eq!(err.solution, 0);
    }

    #[test]
    fn oscillator_conditions() {
        let g = oscillator(1).unwrap();
        let sp = Subspace::coordinate_range(6, 0..3);
        let c = check_centralizer_conditions(&g, &sp).unwrap();
        assert!(c.perfect && c.centralizer_is_center && !c.faithful);
        assert_eq!(c.centralizer_dim, 1);
        assert!(c.vanishing_applies());
    }

    #[test]
    fn central_extension_conditions_fail() {
        let g = trivial_central_extension(&special_linear(2).unwrap());
        let c = check_centralizer_conditions(&g, &Subspace::coordinate_range(4, 0..3)).unwrap();
        assert!(!c.faithful && !c.perfect);
        assert!(check_centralizer_conditions(&g, &Subspace::span(4, &[unit_vec(4, 0), unit_vec(4, 2)])).is_err());
    }

    #[test]
    fn odd_centralizer_conditions() {
        let g = special_linear_super(2, 1).unwrap();
        let g0 = g.even_derived_subalgebra();
        assert_eq!(g0.dim(), 3);
        let r = check_odd_centralizer_conditions(&g, &g0).unwrap();
        assert!(r.perfect && r.odd_centralizer_at_most_one);
        assert_eq!(r.odd_centralizer_dim, 0);

        let r = check_odd_centralizer_conditions(&g, &Subspace::zero(8)).unwrap();
        assert_eq!(r.odd_centralizer_dim, 4);
        assert!(!r.odd_centralizer_at_most_one);

        let odd = g.homogeneous_part(Parity::Odd);
        assert_eq!(check_odd_centralizer_conditions(&g, &odd).unwrap_err(), Error::NotInEvenPart);

        let ab = LieAlgebra::abelian(2).with_parity(vec![Parity::Even, Parity::Odd]).unwrap();
        assert!(!check_odd_centralizer_conditions(&ab, &Subspace::zero(2)).unwrap().perfect);
        assert_eq!(
            check_odd_centralizer_conditions(&special_linear(2).unwrap(), &Subspace::zero(3)).unwrap_err(),
            Error::UngradedInput
        );
    }

    #[test]
    fn mode_parsing() {
        for m in [Mode::Full, Mode::Symmetric, Mode::Skew, Mode::SuperSymmetric] {
            assert_eq!(m.to_string().parse::<Mode>().unwrap(), m);
        }
        assert!("sym".parse::<Mode>().is_err());
    }
}
