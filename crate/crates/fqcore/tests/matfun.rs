use fqcore::error::FqError;
use fqcore::mat::{c, dist, eye, norm, Mat, I_UNIT};
use fqcore::matfun::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rand_mat(n: usize, rng: &mut ChaCha8Rng) -> Mat {
    Mat::from_fn(n, n, |_, _| c(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
}

fn hermitian_pd(n: usize, rng: &mut ChaCha8Rng) -> Mat {
    let x = rand_mat(n, rng);
    &x * x.adjoint() + eye(n) * c(0.3, 0.0)
}

/// Square root through the Hermitian eigendecomposition.
fn eig_sqrt(m: &Mat) -> Mat {
    let e = m.clone().symmetric_eigen();
    let d = Mat::from_diagonal(&e.eigenvalues.map(|l| c(l.sqrt(), 0.0)));
    &e.eigenvectors * d * e.eigenvectors.adjoint()
}

/// Newton iteration for the matrix sign function.
fn newton_sign(m: &Mat) -> Mat {
    let mut s = m.clone();
    for _ in 0..100 {
        let next = (&s + s.clone().try_inverse().unwrap()) * c(0.5, 0.0);
        let done = dist(&next, &s) < 1e-15 * norm(&s);
        s = next;
        if done {
            break;
        }
    }
    s
}

#[test]
fn sqrt_matches_eigen_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [2, 3, 5] {
        for _ in 0..10 {
            let m = hermitian_pd(n, &mut rng);
            let s = sqrt_principal(&m).unwrap();
            assert!(dist(&s, &eig_sqrt(&m)) < 1e-10 * norm(&m));
        }
    }
}

#[test]
fn sqrt_of_non_normal_squares_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let m = eye(4) + rand_mat(4, &mut rng) * c(0.4, 0.0);
        let s = sqrt_principal(&m).unwrap();
        assert!(dist(&(&s * &s), &m) < 1e-12);
    }
}

#[test]
fn pol_matches_newton_sign() {
    // pol X = i sign(-i X) for X with spectrum off the real axis
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let q = Mat::from_diagonal(&nalgebra::DVector::from_vec(vec![I_UNIT, -I_UNIT, I_UNIT]));
    for _ in 0..10 {
        let s = eye(3) + rand_mat(3, &mut rng) * c(0.3, 0.0);
        let x = &s * (&q * c(1.5, 0.0) + eye(3) * c(0.2, 0.0)) * s.clone().try_inverse().unwrap();
        let p = pol(&x).unwrap();
        let oracle = newton_sign(&(&x * -I_UNIT)) * I_UNIT;
        assert!(dist(&p, &oracle) < 1e-10, "{}", dist(&p, &oracle));
        assert!(skew_residual(&p) < 1e-10);
    }
}

#[test]
fn schur_is_unitary_triangular() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for n in [1, 2, 4, 6] {
        let m = rand_mat(n, &mut rng);
        let (q, t) = schur(&m).unwrap();
        assert!(dist(&(q.adjoint() * &q), &eye(n)) < 1e-12);
        assert!(dist(&(&q * &t * q.adjoint()), &m) < 1e-12);
        for i in 0..n {
            for j in 0..i {
                assert!(t[(i, j)].norm() < 1e-12);
            }
        }
    }
}

#[test]
fn geo_mean_pd_is_symmetric_and_solves_riccati() {
    // G = A # B satisfies G A^-1 G = B
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..10 {
        let a = hermitian_pd(3, &mut rng);
        let b = hermitian_pd(3, &mut rng);
        let g = geo_mean(&a, &b).unwrap();
        assert!(dist(&g, &geo_mean(&b, &a).unwrap()) < 1e-9);
        assert!(dist(&(&g * inv(&a).unwrap() * &g), &b) < 1e-9);
        assert!(dist(&geo_mean_quad(&a, &b, 128).unwrap(), &g) < 1e-8);
    }
}

#[test]
fn singular_and_non_finite_inputs() {
    let z = Mat::zeros(2, 2);
    assert!(matches!(inv(&z), Err(FqError::SingularMatrix { .. })));
    let mut m = eye(2);
    m[(0, 1)] = c(f64::NAN, 0.0);
    assert!(sqrt_principal(&m).is_err());
    assert!(geo_mean_quad(&eye(2), &eye(2), 0).is_err());
}

#[test]
fn root_2k_inverts_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let m = eye(3) + rand_mat(3, &mut rng) * c(0.2, 0.0);
    let r = root_2k(&m, 3).unwrap();
    let mut p = r.clone();
    for _ in 0..3 {
        p = &p * &p;
    }
    assert!(dist(&p, &m) < 1e-11);
}
