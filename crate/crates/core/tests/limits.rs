use commlab::hankel::{hankel_truncation, truncated_norm, ArcSymbol};
use commlab::models::{
    heisenberg_submatrix, su2_caps_commutator, su2_commutator, su2_submatrix, NORM_BOUND_SLACK,
};
use commlab::spinrep::{projection_x_entries, HalfInt, SpinRep};
use commlab::Complex64;
use proptest::prelude::*;

// oracle: max |su2_submatrix(4001, 4) - [H_E]_4| = 1.5912e-4
const SU2_SUBMATRIX_TOL: f64 = 2e-4;
// oracle: max |heisenberg_submatrix(2048, 4) - [H_E]_4| = 1/2048
const HEISENBERG_SUBMATRIX_TOL: f64 = 5e-4;

fn hankel4() -> commlab::Matrix {
    hankel_truncation(&ArcSymbol::half_plane(), 4).unwrap().entries
}

#[test]
fn su2_submatrix_limit() {
    let s = su2_submatrix::<f64>(4001, 4).unwrap();
    let d = s.max_abs_diff(&hankel4()).unwrap();
    assert!(d < SU2_SUBMATRIX_TOL, "{d}");
}

#[test]
fn su2_anti_diagonals_flatten() {
    let gaps: Vec<f64> = [51usize, 201, 801]
        .iter()
        .map(|&n| {
            let s = su2_submatrix::<f64>(n, 2).unwrap();
            (s[(0, 1)] - s[(1, 0)]).abs()
        })
        .collect();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2] && gaps[2] < 1e-3, "{gaps:?}");
}

#[test]
fn heisenberg_submatrix_limit() {
    let s = heisenberg_submatrix::<f64>(2048, 4).unwrap();
    let h = hankel4().map(|x| Complex64::new(x, 0.0));
    let d = s.max_abs_diff(&h).unwrap();
    assert!(d < HEISENBERG_SUBMATRIX_TOL, "{d}");
}

/// Half-integer spins use the `(k - 1/2, 1/2 - l)` indexing; the diagonal
/// entries approach their limits at first order in `1/n`.
#[test]
fn half_integer_central_limits() {
    let h = hankel_truncation(&ArcSymbol::<f64>::half_plane(), 2).unwrap().entries;
    let mut prev = f64::INFINITY;
    for twice_j in [51i64, 103, 207] {
        let rep = SpinRep::from_spin(HalfInt::from_twice(twice_j)).unwrap();
        let mut worst = 0.0f64;
        for k in 1..=2i64 {
            for l in 1..=2i64 {
                let pair = (HalfInt::from_twice(2 * k - 1), HalfInt::from_twice(1 - 2 * l));
                let v = projection_x_entries::<f64>(rep, 0.0, &[pair]).unwrap()[0];
                worst = worst.max((v - h[(k as usize - 1, l as usize - 1)]).abs());
            }
        }
        let ratio = prev / worst;
        assert!(prev.is_infinite() || (ratio - 2.0).abs() < 0.1, "j = {twice_j}/2: {worst} after {prev}");
        prev = worst;
    }
    assert!(prev < 2e-3);
}

#[test]
fn sandwich() {
    let sym = ArcSymbol::<f64>::half_plane();
    for big_n in [2, 4, 8] {
        let t = truncated_norm(&sym, big_n).unwrap();
        let c = su2_commutator::<f64>(401, 0.0, 1.0).unwrap().norm;
        assert!(c >= t, "N={big_n}: {c} < {t}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn universal_bound(n in 2usize..90, a in 0.0f64..0.99, b in 0.01f64..=1.0) {
        let r = su2_commutator::<f64>(n, a, b).unwrap();
        prop_assert!(r.norm >= 0.0 && r.norm <= 0.5 + NORM_BOUND_SLACK);
        prop_assert!(r.diagnostics.is_empty());
        let c = su2_caps_commutator::<f64>(n, a).unwrap();
        prop_assert!(c.norm <= 0.5 + NORM_BOUND_SLACK);
    }

    #[test]
    fn f32_tracks_f64(n in 2usize..40) {
        let lo = su2_commutator::<f32>(n, 0.0, 1.0).unwrap().norm as f64;
        let hi = su2_commutator::<f64>(n, 0.0, 1.0).unwrap().norm;
        prop_assert!((lo - hi).abs() < 1e-4);
    }
}
