use tfim_magic::entropy::{magic_m2, stabilizer_renyi};
use tfim_magic::model::{channel_amplitudes, ModelParams};
use tfim_magic::oracle::*;
use tfim_magic::spectrum::enumerate_spectrum;

fn state(n: usize, g: f64) -> DenseState {
    build_state(&ModelParams::new(n, g).unwrap()).unwrap()
}

fn expect(st: &DenseState, s: &str) -> f64 {
    pauli_expectation(st, &s.parse().unwrap()).unwrap()
}

#[test]
fn two_qubit_channel_values() {
    for g in [0.0, 0.3, 1.0, 2.7] {
        let st = state(2, g);
        let c = channel_amplitudes(&ModelParams::new(2, g).unwrap())[0];
        assert!((expect(&st, "II") - 1.0).abs() < 1e-14);
        assert!((expect(&st, "ZZ") - 1.0).abs() < 1e-14);
        assert!((expect(&st, "XY") - 2.0 * c.u * c.v).abs() < 1e-14);
        assert!((expect(&st, "XY") - c.theta.sin()).abs() < 1e-14);
        assert!((expect(&st, "YX") - 2.0 * c.u * c.v).abs() < 1e-14);
        assert!((expect(&st, "IZ") - (c.v * c.v - c.u * c.u)).abs() < 1e-14);
        assert!((expect(&st, "ZI") - (c.v * c.v - c.u * c.u)).abs() < 1e-14);
        for zero in ["XX", "YY", "XI", "IY", "XZ", "ZY"] {
            assert!(expect(&st, zero).abs() < 1e-14, "{zero}");
        }
    }
}

#[test]
fn enumeration_agrees_with_direct_expectations() {
    let st = state(6, 0.8);
    let full = enumerate_all_strings(&st).unwrap();
    for (i, (s, v)) in full.iter().enumerate() {
        if i % 37 == 0 {
            assert!((pauli_expectation(&st, &s).unwrap() - v).abs() < 1e-13, "{s}");
        }
    }
    assert_eq!(full.get(&PauliString::identity(6)), Some(1.0));
}

#[test]
fn n2_zero_field_support() {
    let full = enumerate_all_strings(&state(2, 0.0)).unwrap();
    let mut support: Vec<f64> = full
        .iter()
        .filter(|(s, _)| classify_string(s) != StringClass::Zero)
        .map(|(_, v)| v.abs())
        .collect();
    support.sort_by(f64::total_cmp);
    let want = [0.0, 0.0, 1.0, 1.0, 1.0, 1.0];
    for (a, b) in support.iter().zip(want) {
        assert!((a - b).abs() < 1e-15);
    }
    assert_eq!(support.len(), 6);
}

#[test]
fn n4_golden_magnitudes() {
    let p = ModelParams::new(4, 0.7).unwrap();
    let full = enumerate_all_strings(&build_state(&p).unwrap()).unwrap();
    let mut nonzero: Vec<f64> =
        full.values().iter().map(|v| v.abs()).filter(|&v| v > 1e-13).collect();
    nonzero.sort_by(f64::total_cmp);
    let mut products: Vec<f64> = enumerate_spectrum(&p)
        .unwrap()
        .magnitudes()
        .iter()
        .flat_map(|&m| [m; 4])
        .collect();
    products.sort_by(f64::total_cmp);
    assert_eq!(nonzero.len(), 36);
    for (a, b) in nonzero.iter().zip(&products) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn n6_critical_counts() {
    let full = enumerate_all_strings(&state(6, 1.0)).unwrap();
    let nonzero = full.values().iter().filter(|v| v.abs() > 1e-13).count();
    let unit = full.values().iter().filter(|v| (v.abs() - 1.0).abs() < 1e-12).count();
    assert_eq!((nonzero, unit), (216, 8));
}

#[test]
fn ordering_does_not_change_magnitudes() {
    let p = ModelParams::new(8, 0.6).unwrap();
    let a = enumerate_all_strings(&build_state(&p).unwrap()).unwrap();
    let b = enumerate_all_strings(&build_state_with_order(&p, &[2, 0, 3, 1]).unwrap()).unwrap();
    let (ma, mb) = (a.sorted_magnitudes(), b.sorted_magnitudes());
    assert!(ma.iter().zip(&mb).all(|(x, y)| (x - y).abs() < 1e-13));
    // the states themselves differ
    assert_ne!(
        build_state(&p).unwrap().amplitudes(),
        build_state_with_order(&p, &[2, 0, 3, 1]).unwrap().amplitudes()
    );
}

#[test]
fn renyi_bruteforce_matches_closed_form() {
    let p = ModelParams::new(8, 1.3).unwrap();
    let st = build_state(&p).unwrap();
    let brute = oracle_renyi(&st, 3.0).unwrap();
    assert!((brute - stabilizer_renyi(&p, 3.0).unwrap().value).abs() < 1e-10);
    let p2 = ModelParams::new(2, 1.0).unwrap();
    let m2 = oracle_renyi(&build_state(&p2).unwrap(), 2.0).unwrap();
    assert!((m2 - (4.0f64 / 3.0).ln()).abs() < 1e-12);
    for n in [0.5, 2.0, 4.0] {
        let p = ModelParams::new(6, 0.45).unwrap();
        let b = oracle_renyi(&build_state(&p).unwrap(), n).unwrap();
        assert!((b - stabilizer_renyi(&p, n).unwrap().value).abs() < 1e-10, "n={n}");
    }
}

#[test]
fn probability_normalization() {
    for g in [0.0, 1.0, 3.0] {
        let full = enumerate_all_strings(&state(8, g)).unwrap();
        assert!((full.probability_mass() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn guards() {
    let st = build_state(&ModelParams::new(10, 0.5).unwrap()).unwrap();
    assert!(enumerate_all_strings(&st).is_err());
    assert!(enumerate_all_strings_with_cap(&st, 10).is_ok());
    assert!(pauli_expectation(&st, &"XY".parse().unwrap()).is_err());
    assert!(oracle_renyi(&st, 1.0).is_err());
}

#[test]
fn realspace_versus_momentum() {
    let p = ModelParams::new(8, 1.0).unwrap();
    let gs = realspace_ground_state(&p).unwrap();
    assert!(realspace_m2(&gs.state).unwrap() > magic_m2(&p).per_site);

    let p = ModelParams::new(8, 0.0).unwrap();
    let gs = realspace_ground_state(&p).unwrap();
    assert!(realspace_m2(&gs.state).unwrap().abs() < 1e-12);
    assert!(magic_m2(&p).per_site > 0.05);
}

#[test]
fn realspace_energies_match_quasiparticle_sum() {
    for n in [4, 8, 10, 12] {
        for g in [0.5, 1.0, 2.0] {
            let p = ModelParams::new(n, g).unwrap();
            let gs = realspace_ground_state(&p).unwrap();
            assert!((gs.energy - free_fermion_energy(&p)).abs() < 1e-10, "n={n} g={g}");
        }
    }
}

#[test]
fn paramagnetic_parity_gap_is_open() {
    let gs = realspace_ground_state(&ModelParams::new(8, 3.0).unwrap()).unwrap();
    assert!(!gs.quasi_degenerate);
    assert!(gs.parity_splitting > 1.0);
    let gs = realspace_ground_state(&ModelParams::new(8, 0.3).unwrap()).unwrap();
    assert!(gs.quasi_degenerate && gs.parity_splitting.abs() < 1e-3);
}

#[test]
fn full_report() {
    for (n, g) in [(2, 0.0), (6, 1.2), (8, 0.0)] {
        let r = run_oracle(&ModelParams::new(n, g).unwrap()).unwrap();
        assert!(r.passed, "{:?}", r.failed_checks().collect::<Vec<_>>());
        assert!(r.max_abs_deviation < 1e-12);
    }
    let r = run_oracle(&ModelParams::new(8, 0.0).unwrap()).unwrap();
    assert!(r.realspace_m2.unwrap().abs() < 1e-12 && r.momentum_m2_per_site > 0.0);
    assert!(run_oracle(&ModelParams::new(10, 0.5).unwrap()).is_err());
}
