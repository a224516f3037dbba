//! Dense brute-force biderivation solver.
//!
//! Shares no assembly or elimination code with [`crate::bider`]: the system
//! is built column by column, by evaluating both identities on each
//! elementary bilinear map `δ(b_i, b_j) = e_k`, and solved by textbook
//! Gauss–Jordan elimination on dense rational rows. Only usable on small
//! instances.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::bider::{BilinearSolutionSpace, Mode};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Rational;
use crate::rep::Representation;

/// Largest number of unknowns `dim(𝔤)² · dim(V)` the oracle accepts.
pub const ORACLE_LIMIT: usize = 200;

type Dense = Vec<Vec<Rational>>;

struct Instance {
    n: usize,
    d: usize,
    // brackets[i][j] = dense coordinates of [b_i, b_j]
    brackets: Vec<Vec<Vec<Rational>>>,
    // action[i] = dense matrix of ρ(b_i)
    action: Vec<Dense>,
}

impl Instance {
    fn new(g: &LieAlgebra, v: &Representation) -> Self {
        let n = g.dim();
        let brackets = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut out = vec![Rational::zero(); n];
                        for (k, c) in g.basis_bracket(i, j) {
                            out[*k] = c.clone();
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        let action = v.matrices().iter().map(|m| m.to_dense()).collect();
        Instance { n, d: v.dim(), brackets, action }
    }

    fn apply(&self, i: usize, w: &[Rational]) -> Vec<Rational> {
        self.action[i].iter().map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum()).collect()
    }

    /// δ(x, b_l) for x given by dense coordinates.
    fn delta_left(&self, delta: &[Dense], x: &[Rational], l: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.d];
        for (m, xm) in x.iter().enumerate() {
            for k in 0..self.d {
                out[k] += xm * &delta[m][l][k];
            }
        }
        out
    }

    fn delta_right(&self, delta: &[Dense], i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.d];
        for (m, ym) in y.iter().enumerate() {
            for k in 0..self.d {
                out[k] += ym * &delta[i][m][k];
            }
        }
        out
    }

    /// Every scalar residual of both identities plus the symmetry constraint.
    #[allow(clippy::needless_range_loop)]
    fn residuals(&self, delta: &[Dense], mode: Mode) -> Vec<Rational> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let lhs = self.delta_left(delta, &self.brackets[x][y], z);
                    let t1 = self.apply(x, &delta[y][z]);
                    let t2 = self.apply(y, &delta[x][z]);
                    for k in 0..self.d {
                        out.push(&lhs[k] - &t1[k] + &t2[k]);
                    }
                    let lhs = self.delta_right(delta, x, &self.brackets[y][z]);
                    let t1 = self.apply(y, &delta[x][z]);
                    let t2 = self.apply(z, &delta[x][y]);
                    for k in 0..self.d {
                        out.push(&lhs[k] - &t1[k] + &t2[k]);
                    }
                }
            }
        }
        for x in 0..self.n {
            for y in 0..self.n {
                for k in 0..self.d {
                    match mode {
                        Mode::Symmetric => out.push(&delta[x][y][k] - &delta[y][x][k]),
                        Mode::Skew => out.push(&delta[x][y][k] + &delta[y][x][k]),
                        _ => {}
                    }
                }
            }
        }
        out
    }
}

/// Gauss–Jordan on dense rows; returns the reduced rows and pivot columns.
fn gauss_jordan(mut rows: Dense, cols: usize) -> (Dense, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Same solution space as [`crate::bider::biderivation_space`], computed by
/// the dense path. Refuses instances above [`ORACLE_LIMIT`] unknowns.
pub fn brute_force_biderivation_space(
    g: &Arc<LieAlgebra>,
    v: &Representation,
    mode: Mode,
) -> Result<BilinearSolutionSpace> {
    if g.is_graded() {
        return Err(Error::GradedInput);
    }
    if v.algebra() != g {
        return Err(Error::AlgebraMismatch);
    }
    if mode == Mode::SuperSymmetric {
        return Err(Error::InvalidArgument("super-symmetric mode needs a graded algebra".into()));
    }
    let inst = Instance::new(g, v);
    let (n, d) = (inst.n, inst.d);
    let unknowns = n * n * d;
    if unknowns > ORACLE_LIMIT {
        return Err(Error::SizeGuard { unknowns, limit: ORACLE_LIMIT });
    }

    let mut columns = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let (i, j, k) = (u / (n * d), (u / d) % n, u % d);
        let mut delta: Vec<Dense> = vec![vec![vec![Rational::zero(); d]; n]; n];
        delta[i][j][k] = Rational::one();
        columns.push(inst.residuals(&delta, mode));
    }
    let height = columns.first().map_or(0, Vec::len);
    let rows: Dense = (0..height)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect::<Vec<_>>())
        .filter(|row: &Vec<Rational>| row.iter().any(|x| !x.is_zero()))
        .collect();

    let (reduced, pivots) = gauss_jordan(rows, unknowns);
    let basis = (0..unknowns)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut vec = vec![Rational::zero(); unknowns];
            vec[free] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                vec[p] = -row[free].clone();
            }
            vec
        })
        .collect();
    Ok(BilinearSolutionSpace { algebra: g.clone(), target: v.clone(), mode, delta_parity: None, basis })
}
