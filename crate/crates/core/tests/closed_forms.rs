use std::f64::consts::PI;

use proptest::prelude::*;
use sphere_osc_core::eigenfunctions::{eval_F, project_to_plane, project_to_plane_direct};
use sphere_osc_core::spectrum::{energy, epsilon, spectrum_table};
use sphere_osc_core::verification::{
    fd_eigensolve, node_count, normalization_check, ode_residual, overlap_matrix, residual_grid,
};
use sphere_osc_core::{Error, OscillatorParams, QuantumNumbers};

fn params(dim: u32, w1: f64, w2: f64) -> OscillatorParams {
    OscillatorParams::from_couplings(dim, 1.0, w1, w2).unwrap()
}

#[test]
fn oracle_tracks_off_grid_couplings() {
    let p = params(4, 2.3, 0.6);
    for l in [0, 3] {
        let fd = fd_eigensolve(&p, l, 4, 8000).unwrap();
        for (n, got) in fd.iter().enumerate() {
            let want = epsilon(&p, QuantumNumbers { n_theta: n as u32, l }).unwrap();
            assert!(
                (got - want).abs() / want.abs().max(1.0) < 1e-6,
                "L={l} n={n}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn physical_units_scale_energy_only() {
    let a = OscillatorParams::new(3, 2.0, 0.5, 1.5, 0.3, 0.1).unwrap();
    let b = params(3, a.w1(), a.w2());
    let qn = QuantumNumbers { n_theta: 2, l: 1 };
    assert!((epsilon(&a, qn).unwrap() - epsilon(&b, qn).unwrap()).abs() < 1e-13);
    let unit = 1.5f64 * 1.5 / (2.0 * 0.5 * 4.0);
    assert!((energy(&a, qn).unwrap() - unit * epsilon(&a, qn).unwrap()).abs() < 1e-13);
}

#[test]
fn table_is_sorted_and_complete() {
    let table = spectrum_table(&params(5, 1.0, 4.0), 3, 3).unwrap();
    assert_eq!(table.len(), 16);
    assert!(table.windows(2).all(|w| w[0].energy <= w[1].energy));
}

#[test]
fn overlaps_hold_for_many_levels() {
    let m = overlap_matrix(&params(3, 7.0, 0.5), 1, 10).unwrap();
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            assert!((v - target).abs() < 1e-10, "({i},{j}) {v}");
        }
    }
}

#[test]
fn oversized_couplings_are_rejected() {
    let p = params(3, 3e5, 0.0);
    let err = eval_F(&p, QuantumNumbers { n_theta: 0, l: 0 }, 1.0).unwrap_err();
    assert!(matches!(err, Error::Range { .. }), "{err:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_states_are_normalized_eigenfunctions(
        dim in 2u32..=6, l in 0u32..=4, n in 0u32..=6, w1 in 0.0f64..12.0, w2 in 0.0f64..12.0,
    ) {
        let p = params(dim, w1, w2);
        let qn = QuantumNumbers { n_theta: n, l };
        prop_assert!((normalization_check(&p, qn).unwrap() - 1.0).abs() < 1e-10);
        prop_assert!(ode_residual(&p, qn, &residual_grid()).unwrap() < 1e-8);
        prop_assert_eq!(node_count(&p, qn).unwrap(), n);
    }

    #[test]
    fn projection_routes_agree(dim in 2u32..=6, n in 0u32..=5, w1 in 0.0f64..8.0, w2 in 0.0f64..8.0, r in 0.0f64..20.0) {
        let p = OscillatorParams::from_couplings(dim, 1.7, w1, w2).unwrap();
        let qn = QuantumNumbers { n_theta: n, l: 1 };
        let a = project_to_plane(&p, qn, r).unwrap();
        let b = project_to_plane_direct(&p, qn, r).unwrap();
        let scale = (0..=200).map(|i| eval_F(&p, qn, PI * f64::from(i) / 200.0).unwrap().abs()).fold(0.0, f64::max);
        prop_assert!((a - b).abs() <= 1e-12 * scale, "{} vs {}", a, b);
    }

    #[test]
    fn swapping_couplings_mirrors_the_eigenfunction(
        dim in 2u32..=5, l in 0u32..=3, n in 0u32..=5, w1 in 0.0f64..8.0, w2 in 0.0f64..8.0, t in 0.0f64..PI,
    ) {
        let p = params(dim, w1, w2);
        let q = p.swapped();
        let qn = QuantumNumbers { n_theta: n, l };
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let scale = (0..=200).map(|i| eval_F(&p, qn, PI * f64::from(i) / 200.0).unwrap().abs()).fold(0.0, f64::max);
        let diff = eval_F(&p, qn, t).unwrap() - sign * eval_F(&q, qn, PI - t).unwrap();
        prop_assert!(diff.abs() <= 1e-12 * scale);
        prop_assert_eq!(epsilon(&p, qn).unwrap(), epsilon(&q, qn).unwrap());
    }
}
