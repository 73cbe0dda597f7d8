use lieforge::check::{check_lorentz, check_poincare, check_rep22_vector};
use lieforge::linalg::{
    anticommutator, c, commutator, decompose_in_basis, det, mat_exp, re, CMatrix, Tolerance, I,
};
use lieforge::reps::{rep22_jk, rep22_v, VectorParams};
use lieforge::spacetime::{
    apply, d4, interval_sq, lowered_transpose, rot_boost, rot_boost_inverse, FourVector,
    RotBoostParams, METRIC,
};
use lieforge::sun::{extract_structure, su_n_generators};
use lieforge::transfer::{build_j4, build_k4_alpha, extract_coeffs};
use proptest::prelude::*;

fn matrix(dim: usize, scale: f64) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-scale..scale, -scale..scale), dim * dim).prop_map(move |v| {
        let rows = v
            .chunks(dim)
            .map(|row| row.iter().map(|&(a, b)| c(a, b)).collect())
            .collect();
        CMatrix::from_rows(rows).unwrap()
    })
}

fn square_pair() -> impl Strategy<Value = (CMatrix, CMatrix)> {
    (1usize..6).prop_flat_map(|n| (matrix(n, 2.0), matrix(n, 2.0)))
}

fn hermitian(dim: usize) -> impl Strategy<Value = CMatrix> {
    matrix(dim, 1.0).prop_map(|m| (&m + &m.adjoint()).scale(re(0.5)))
}

fn angles(max: f64) -> impl Strategy<Value = [f64; 3]> {
    [-max..max, -max..max, -max..max]
}

fn nonzero(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo..hi, any::<bool>()).prop_map(|(x, neg)| if neg { -x } else { x })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn commutator_antisymmetric((a, b) in square_pair()) {
        let ab = commutator(&a, &b).unwrap();
        let ba = commutator(&b, &a).unwrap();
        prop_assert!((&ab + &ba).norm_fro() < 1e-12);
        prop_assert!(ab.trace().norm() < 1e-12);
    }

    #[test]
    fn anticommutator_symmetric((a, b) in square_pair()) {
        let ab = anticommutator(&a, &b).unwrap();
        let ba = anticommutator(&b, &a).unwrap();
        prop_assert!((&ab - &ba).norm_fro() < 1e-12);
    }

    #[test]
    fn exp_inverse(a in (1usize..6).prop_flat_map(|n| matrix(n, 1.5))) {
        let prod = &mat_exp(&a) * &mat_exp(&-&a);
        let one = CMatrix::identity(a.dim());
        prop_assert!((&prod - &one).norm_fro() < 1e-10);
    }

    #[test]
    fn exp_conjugation(
        (a, h) in (1usize..5).prop_flat_map(|n| (matrix(n, 1.0), hermitian(n)))
    ) {
        let u = mat_exp(&h.scale(I));
        let conj = &(&u * &a) * &u.adjoint();
        let lhs = mat_exp(&conj);
        let rhs = &(&u * &mat_exp(&a)) * &u.adjoint();
        prop_assert!((&lhs - &rhs).norm_fro() < 1e-10 * rhs.norm_fro().max(1.0));
    }

    #[test]
    fn exp_determinant_is_exp_trace(a in (1usize..5).prop_flat_map(|n| matrix(n, 1.0))) {
        let lhs = det(&mat_exp(&a));
        let rhs = a.trace().exp();
        prop_assert!((lhs - rhs).norm() < 1e-10 * rhs.norm().max(1.0));
    }

    #[test]
    fn decompose_round_trip(coeffs in prop::collection::vec((-3.0..3.0, -3.0..3.0), 8)) {
        let basis = su_n_generators(3).unwrap().members().to_vec();
        let m = basis
            .iter()
            .zip(&coeffs)
            .fold(CMatrix::zeros(3), |acc, (b, &(x, y))| &acc + &b.scale(c(x, y)));
        let d = decompose_in_basis(&m, &basis).unwrap();
        prop_assert!(d.residual < 1e-12);
        for (got, &(x, y)) in d.coeffs.iter().zip(&coeffs) {
            prop_assert!((got - c(x, y)).norm() < 1e-12);
        }
    }

    #[test]
    fn matrix_json_round_trip(m in (1usize..5).prop_flat_map(|n| matrix(n, 100.0))) {
        let text = serde_json::to_string(&m).unwrap();
        let back: CMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn vector_relations_any_constants(
        cp in (-3.0..3.0, -3.0..3.0),
        cm in (-3.0..3.0, -3.0..3.0),
        alpha in nonzero(0.2, 5.0),
    ) {
        let p = VectorParams::new(c(cp.0, cp.1), c(cm.0, cm.1), re(alpha)).unwrap();
        let reports = check_rep22_vector(&p, &Tolerance::default()).unwrap();
        for r in &reports {
            prop_assert!(r.max_residual < 1e-11, "{} {}", r.relation, r.max_residual);
        }
    }

    #[test]
    fn boost_coefficients_follow_alpha(alpha in nonzero(0.2, 5.0)) {
        let tol = Tolerance::default();
        let (_, k) = rep22_jk();
        let v = rep22_v(&VectorParams::with_alpha(re(alpha)).unwrap()).unwrap();
        let extracted = extract_coeffs(&v, &k, &tol).unwrap();
        let closed = build_k4_alpha(re(alpha));
        for i in 1..=3 {
            prop_assert!((&extracted.slice(i) - closed.member(i)).norm_fro() < 1e-12);
        }
        let lorentz = check_lorentz(&build_j4(), &closed, &tol).unwrap();
        prop_assert!(lorentz.iter().all(|r| r.passed));
    }

    #[test]
    fn lorentz_transform_properties(theta in angles(3.2), phi in angles(1.5)) {
        let params = RotBoostParams { theta, phi };
        let l = d4(&params);
        prop_assert!(l.max_abs_imag() < 1e-12);
        prop_assert!((det(&l) - re(1.0)).norm() < 1e-9);
        // Λᵀ g Λ = g
        let g = CMatrix::diag(&METRIC.map(re));
        let lhs = &(&l.transpose() * &g) * &l;
        prop_assert!((&lhs - &g).norm_fro() < 1e-9 * l.norm_fro().powi(2));
        let inv = &lowered_transpose(&l) * &l;
        prop_assert!((&inv - &CMatrix::identity(4)).norm_fro() < 1e-9 * l.norm_fro().powi(2));
    }

    #[test]
    fn rep22_transform_inverse(theta in angles(3.2), phi in angles(1.5)) {
        let (j, k) = rep22_jk();
        let params = RotBoostParams { theta, phi };
        let prod = &rot_boost(&j, &k, &params) * &rot_boost_inverse(&j, &k, &params);
        prop_assert!((&prod - &CMatrix::identity(4)).norm_fro() < 1e-9);
    }

    #[test]
    fn interval_invariant(
        x in [-10.0..10.0, -10.0..10.0, -10.0..10.0, -10.0..10.0f64],
        theta in angles(3.2),
        phi in angles(1.5),
    ) {
        let x = FourVector(x);
        let y = apply(&d4(&RotBoostParams { theta, phi }), &x, &Tolerance::default()).unwrap();
        let scale = x.euclidean_sq().max(1.0);
        prop_assert!((interval_sq(&y) - interval_sq(&x)).abs() / scale < 1e-9);
    }
}

#[test]
fn su_n_tensors_have_permutation_symmetry() {
    for n in 2..=5 {
        let st = extract_structure(su_n_generators(n).unwrap().members()).unwrap();
        assert!(st.f.permutation_defect(-1.0) < 1e-12, "SU({n}) f");
        assert!(st.d.permutation_defect(1.0) < 1e-12, "SU({n}) d");
        assert!(st.commutator_residual < 1e-12 && st.anticommutator_residual < 1e-12);
        assert!((st.delta_coeff - 1.0 / n as f64).abs() < 1e-15);
    }
}

#[test]
fn poincare_holds_for_any_alpha_on_momentum_branch() {
    let tol = Tolerance::default();
    let (j, k) = rep22_jk();
    for alpha in [-3.0, -1.0, -0.25, 0.5, 1.0, 2.0, 7.0] {
        let p = VectorParams::new(c(0.0, -2.0), re(0.0), re(alpha)).unwrap();
        let set = lieforge::reps::momentum(&p, lieforge::Branch::Plus).unwrap();
        let reports = check_poincare(&j, &k, &set, &tol, re(alpha)).unwrap();
        assert!(
            reports.iter().all(|r| r.passed),
            "alpha {alpha}: {reports:?}"
        );
    }
}
