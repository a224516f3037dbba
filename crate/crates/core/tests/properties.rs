use std::sync::Arc;

use liebider::bider::{biderivation_space, check_mode, verify_identities, BilinearSolutionSpace, Mode};
use liebider::constructors::{heisenberg, semidirect_abelian, special_linear, symplectic, takiff};
use liebider::linalg::{in_span, span_basis};
use liebider::oracle::brute_force_biderivation_space;
use liebider::rep::{adjoint, derivation_space, invariants_subspace, module_hom_space, sl2_irrep, trivial_rep};
use liebider::{LieAlgebra, Parity, Rational, RationalMatrix, Representation, Subspace};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Plain Gauss–Jordan on dense rows, written without any of the library's elimination code.
fn naive_rref(mut m: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut lead = 0;
    for c in 0..cols {
        let Some(p) = (lead..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(lead, p);
        let inv = Rational::one() / &m[lead][c];
        m[lead] = m[lead].iter().map(|x| x * &inv).collect();
        for i in 0..m.len() {
            if i != lead && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                m[i] = m[i].iter().zip(&m[lead]).map(|(a, b)| a - &f * b).collect();
            }
        }
        lead += 1;
    }
    m
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1..=max, 1..=max).prop_flat_map(|(rows, cols)| {
        prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3).prop_map(|(n, d)| r(n, d)), cols), rows)
    })
}

fn vector(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-4i64..=4).prop_map(|n| r(n, 1)), len)
}

/// `ℚ ⋉_A ℚ²`: a 3-dimensional Lie algebra for any 2×2 matrix `A`.
fn semidirect(a: [i64; 4]) -> LieAlgebra {
    let line = Arc::new(LieAlgebra::abelian(1));
    let m = RationalMatrix::from_i64(&[&a[..2], &a[2..]]);
    let rho = Representation::new(line, 2, vec![m]).unwrap();
    semidirect_abelian(&rho, |k| format!("v{}", k + 1)).unwrap()
}

fn builtins() -> Vec<Arc<LieAlgebra>> {
    let sl2 = special_linear(2).unwrap();
    vec![
        Arc::new(takiff(&sl2).unwrap()),
        Arc::new(sl2),
        Arc::new(special_linear(3).unwrap()),
        Arc::new(symplectic(4).unwrap()),
        Arc::new(heisenberg(2).unwrap()),
        Arc::new(semidirect([1, 2, 0, -1])),
    ]
}

fn eval_combo(s: &BilinearSolutionSpace, coeffs: &[Rational], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let d = s.target().dim();
    let mut out = vec![Rational::zero(); d];
    for (t, a) in coeffs.iter().enumerate().take(s.dim()) {
        for (o, v) in out.iter_mut().zip(s.eval(t, x, y)) {
            *o += a * v;
        }
    }
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_matches_naive_elimination(m in matrix_strategy(5)) {
        let cols = m[0].len();
        let a = RationalMatrix::from_dense(cols, &m);
        prop_assert_eq!(a.rref().to_dense(), naive_rref(m));
        prop_assert_eq!(a.rref().rref(), a.rref());
    }

    #[test]
    fn nullspace_is_kernel_with_rank_nullity(m in matrix_strategy(6)) {
        let cols = m[0].len();
        let a = RationalMatrix::from_dense(cols, &m);
        let null = a.nullspace_basis();
        prop_assert_eq!(a.rank() + null.len(), cols);
        for v in &null {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        let (basis, _) = span_basis(cols, &null);
        prop_assert_eq!(basis.len(), null.len());
    }

    #[test]
    fn solve_is_consistent(m in matrix_strategy(5), seed in vector(5)) {
        let cols = m[0].len();
        let a = RationalMatrix::from_dense(cols, &m);
        let b: Vec<Rational> = seed.iter().cycle().take(a.nrows()).cloned().collect();
        match a.solve(&b).unwrap() {
            Some(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
            None => {
                let aug: Vec<Vec<Rational>> = m.iter().zip(&b).map(|(row, bi)| {
                    let mut row = row.clone();
                    row.push(bi.clone());
                    row
                }).collect();
                let rank_aug = naive_rref(aug).iter().filter(|row| row.iter().any(|x| !x.is_zero())).count();
                prop_assert!(rank_aug > a.rank());
            }
        }
    }

    #[test]
    fn span_membership(vs in prop::collection::vec(vector(4), 0..4), coeffs in vector(4)) {
        let mut combo = vec![Rational::zero(); 4];
        for (v, c) in vs.iter().zip(&coeffs) {
            for (o, x) in combo.iter_mut().zip(v) {
                *o += c * x;
            }
        }
        prop_assert!(in_span(&combo, &vs).unwrap());
        let s = Subspace::span(4, &vs);
        prop_assert!(s.contains(&combo));
        prop_assert_eq!(s.dim(), span_basis(4, &vs).0.len());
    }

    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi(which in 0usize..6, x in vector(6), y in vector(6), z in vector(6)) {
        let g = &builtins()[which];
        let n = g.dim();
        let (x, y, z) = (&x[..n.min(6)], &y[..n.min(6)], &z[..n.min(6)]);
        let pad = |v: &[Rational]| { let mut v = v.to_vec(); v.resize(n, Rational::zero()); v };
        let (x, y, z) = (pad(x), pad(y), pad(z));
        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        prop_assert!(xy.iter().zip(&yx).all(|(a, b)| (a + b).is_zero()));
        let j1 = g.bracket(&x, &g.bracket(&y, &z).unwrap()).unwrap();
        let j2 = g.bracket(&y, &g.bracket(&z, &x).unwrap()).unwrap();
        let j3 = g.bracket(&z, &xy).unwrap();
        prop_assert!((0..n).all(|k| (&j1[k] + &j2[k] + &j3[k]).is_zero()));
    }

    #[test]
    fn semidirect_products_agree_with_the_oracle(a in prop::array::uniform4(-2i64..=2), mode in 0usize..3) {
        let g = Arc::new(semidirect(a));
        prop_assert!(g.validate().is_empty());
        let mode = [Mode::Full, Mode::Symmetric, Mode::Skew][mode];
        for v in [adjoint(&g), trivial_rep(&g, 2)] {
            let main = biderivation_space(&g, &v, mode).unwrap();
            let brute = brute_force_biderivation_space(&g, &v, mode).unwrap();
            prop_assert_eq!(main.basis(), brute.basis());
            prop_assert!(verify_identities(&main).is_ok());
            prop_assert!(check_mode(&main));
        }
    }

    #[test]
    fn solutions_satisfy_identities_pointwise(
        which in 0usize..3, coeffs in vector(4), x in vector(4), y in vector(4), z in vector(4)
    ) {
        let g = [Arc::new(heisenberg(1).unwrap()), Arc::new(semidirect([1, 0, 0, 1])), Arc::new(LieAlgebra::abelian(2))][which].clone();
        let n = g.dim();
        let (x, y, z) = (&x[..n], &y[..n], &z[..n]);
        let v = adjoint(&g);
        for mode in [Mode::Full, Mode::Symmetric, Mode::Skew] {
            let s = biderivation_space(&g, &v, mode).unwrap();
            let d = |a: &[Rational], b: &[Rational]| eval_combo(&s, &coeffs, a, b);
            let act = |a: &[Rational], w: &[Rational]| v.act(a, w).unwrap();
            let br = |a: &[Rational], b: &[Rational]| g.bracket(a, b).unwrap();
            let lhs = d(&br(x, y), z);
            let rhs = sub(&act(x, &d(y, z)), &act(y, &d(x, z)));
            prop_assert_eq!(lhs, rhs);
            let lhs = d(x, &br(y, z));
            let rhs = sub(&act(y, &d(x, z)), &act(z, &d(x, y)));
            prop_assert_eq!(lhs, rhs);
            match mode {
                Mode::Symmetric => prop_assert_eq!(d(x, y), d(y, x)),
                Mode::Skew => prop_assert!(d(x, y).iter().zip(d(y, x)).all(|(a, b)| (a + b).is_zero())),
                _ => {}
            }
        }
    }

    #[test]
    fn sl2_irreps_are_representations(m in 0usize..7, x in vector(3), y in vector(3)) {
        let v = sl2_irrep(m);
        let g = v.algebra().clone();
        let lhs = v.matrix_of(&g.bracket(&x, &y).unwrap()).unwrap();
        let (a, b) = (v.matrix_of(&x).unwrap(), v.matrix_of(&y).unwrap());
        prop_assert_eq!(lhs, a.mul(&b).sub(&b.mul(&a)));
    }

    #[test]
    fn round_trip_through_the_file_format(a in prop::array::uniform4(-3i64..=3)) {
        use liebider::cli::format::{parse_algebra_file, render_algebra_file};
        let g = semidirect(a);
        let back = parse_algebra_file(&render_algebra_file("g", &g, &[])).unwrap();
        prop_assert_eq!(&*back.algebra, &g);
    }
}

#[test]
fn derived_algebra_and_center_are_ideals() {
    for g in builtins() {
        let n = g.dim();
        for ideal in [g.derived_subalgebra(), g.center()] {
            for i in 0..n {
                for b in ideal.basis() {
                    let e = liebider::linalg::unit_vec(n, i);
                    assert!(ideal.contains(&g.bracket(&e, b).unwrap()));
                }
            }
        }
        let center = g.center();
        for b in center.basis() {
            for i in 0..n {
                let e = liebider::linalg::unit_vec(n, i);
                assert!(g.bracket(&e, b).unwrap().iter().all(Zero::is_zero));
            }
        }
        let derived = g.derived_subalgebra();
        let full = g.full_space();
        assert!(center.is_subspace_of(&g.centralizer(&derived, &full).unwrap()));
        assert!(center.is_subspace_of(&g.centralizer(&Subspace::coordinate_range(n, 0..1), &full).unwrap()));
    }
}

#[test]
fn grading_everything_even_changes_nothing() {
    for g in builtins() {
        let graded = g.with_parity(vec![Parity::Even; g.dim()]).unwrap();
        assert_eq!(graded.validate(), g.validate());
        assert_eq!(graded.center(), g.center());
    }
}

#[test]
fn inner_derivations_and_invariants() {
    let sl2 = Arc::new(special_linear(2).unwrap());
    let heis = Arc::new(heisenberg(1).unwrap());
    let reps = [
        adjoint(&sl2),
        sl2_irrep(3),
        adjoint(&heis),
        trivial_rep(&heis, 2),
        adjoint(&Arc::new(semidirect([0, 1, 0, 0]))),
    ];
    for v in reps {
        let der = derivation_space(&v);
        assert_eq!(der.inner_dim(), v.dim() - invariants_subspace(&v).dim());
        assert_eq!(der.h1_dim, der.der_dim() - der.inner_dim());
    }
}

#[test]
fn module_homs_intertwine() {
    let sl2 = Arc::new(special_linear(2).unwrap());
    let ad = adjoint(&sl2);
    let heis = Arc::new(heisenberg(1).unwrap());
    for (a, b) in [(ad.clone(), ad.clone()), (adjoint(&heis), adjoint(&heis)), (adjoint(&heis), trivial_rep(&heis, 1))]
    {
        for t in module_hom_space(&a, &b).unwrap() {
            for i in 0..a.algebra().dim() {
                assert_eq!(t.mul(a.action(i)), b.action(i).mul(&t));
            }
        }
    }
}

#[test]
fn whitehead_beyond_the_suite() {
    let sl3 = Arc::new(special_linear(3).unwrap());
    let sp4 = Arc::new(symplectic(4).unwrap());
    let natural3 = liebider::constructors::special_linear_natural(&sl3, 3).unwrap();
    let natural4 = liebider::constructors::symplectic_natural(&sp4, 4).unwrap();
    for v in [natural3, natural4, trivial_rep(&sl3, 1)] {
        assert_eq!(derivation_space(&v).h1_dim, 0);
    }
}

#[test]
fn basis_sl2_triples_in_classical_algebras() {
    assert_eq!(special_linear(2).unwrap().basis_sl2_triples().len(), 2);
    assert_eq!(special_linear(3).unwrap().basis_sl2_triples().len(), 6);
    assert_eq!(symplectic(4).unwrap().basis_sl2_triples().len(), 8);
    assert!(heisenberg(1).unwrap().basis_sl2_triples().is_empty());
}
