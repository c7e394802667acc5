use fqcore::clifford::*;
use fqcore::fqops::identities::catalog;
use fqcore::fqops::*;
use fqcore::mat::{c, dist, eye, Mat};
use fqcore::matfun::{geo_mean, pol, skew_residual, sqrt_principal};
use fqcore::mixedbase::SectorAssignment;
use fqcore::Exec;
use proptest::prelude::*;

fn pair(seed: u64, radius: f64) -> Pair {
    random_pair_near(&make_base(BaseKind::Pauli2), &SectorAssignment::reference(), radius, seed).unwrap()
}

fn mat2(v: [f64; 8]) -> Mat {
    Mat::from_fn(2, 2, |i, j| c(v[2 * (2 * i + j)], v[2 * (2 * i + j) + 1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn catalog_holds(seed in any::<u64>(), radius in 0.01f64..0.2) {
        let p = pair(seed, radius);
        for id in catalog() {
            let r = id.residual(&p).unwrap();
            prop_assert!(r < 1e-8, "{}: {:e}", id.id, r);
        }
    }

    #[test]
    fn axes_are_skew_involutions(seed in any::<u64>()) {
        let p = pair(seed, 0.15);
        for a in [axis_left(&p).unwrap(), axis_right(&p).unwrap(), axis_central(&p).unwrap()] {
            prop_assert!(skew_residual(&a) < 1e-9);
        }
    }

    #[test]
    fn monoaxializations_are_monoaxial(seed in any::<u64>()) {
        let p = pair(seed, 0.15);
        for s in Side::ALL {
            prop_assert!(monoaxial_defect(&monoaxialize(&p, s).unwrap()).unwrap() < 1e-9);
        }
    }

    #[test]
    fn sqrt_squares_back(v in prop::array::uniform8(-0.4f64..0.4)) {
        let m = eye(2) + mat2(v);
        let s = sqrt_principal(&m).unwrap();
        prop_assert!(dist(&(&s * &s), &m) < 1e-11);
    }

    #[test]
    fn pol_is_skew_involution(v in prop::array::uniform8(-0.3f64..0.3)) {
        let q = make_base(BaseKind::Pauli2).q1;
        let x = &q + mat2(v);
        let p = pol(&x).unwrap();
        prop_assert!(skew_residual(&p) < 1e-9);
        prop_assert!(dist(&(&p * &x), &(&x * &p)) < 1e-9);
    }

    #[test]
    fn geo_mean_of_scalars(a in 0.1f64..5.0, b in 0.1f64..5.0) {
        let g = geo_mean(&(eye(3) * c(a, 0.0)), &(eye(3) * c(b, 0.0))).unwrap();
        prop_assert!(dist(&g, &(eye(3) * c((a * b).sqrt(), 0.0))) < 1e-12);
    }

    #[test]
    fn exec_strategies_agree(xs in prop::collection::vec(any::<i32>(), 0..200)) {
        let f = |x: &i32| (*x as i64) * 3 - 1;
        prop_assert_eq!(Exec::Parallel.map(&xs, f), Exec::Sequential.map(&xs, f));
    }

    #[test]
    fn sampling_is_deterministic(seed in any::<u64>()) {
        prop_assert_eq!(pair(seed, 0.1), pair(seed, 0.1));
    }
}

#[test]
fn radius_out_of_range() {
    let base = make_base(BaseKind::Pauli2);
    let asg = SectorAssignment::reference();
    assert!(matches!(random_pair_near(&base, &asg, 0.6, 1), Err(fqcore::FqError::ConfigInvalid(_))));
}
