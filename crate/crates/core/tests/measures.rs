mod common;

use common::{apply_random_local_unitaries, ket, random_mixed, rng};
use monogamy_core::entanglement::{
    bipartite_concurrence_squared, concurrence_of_assistance, concurrence_pure, convex_roof_oracle, spin_flip_spectrum,
    three_tangle, wootters_concurrence, OracleBudget, RoofMode,
};
use monogamy_core::{tolerance, DensityMatrix, Partition, PureState};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn oracle_agrees_with_closed_forms_and_reconstructs() {
    let mut gen = rng(11);
    for sample in 0..40u64 {
        let rank = gen.random_range(1..=4);
        let rho = random_mixed(rank, &mut gen);
        let budget = OracleBudget {
            seed: sample,
            ..OracleBudget::default()
        };
        for (mode, closed) in [
            (RoofMode::Minimize, wootters_concurrence(&rho).unwrap()),
            (RoofMode::Maximize, concurrence_of_assistance(&rho).unwrap()),
        ] {
            let (value, ensemble) = convex_roof_oracle(&rho, mode, &budget).unwrap();
            assert!(
                (value - closed).abs() < 1e-3,
                "sample {sample} {mode:?}: {value} vs {closed}"
            );
            assert!((ensemble.probability_sum() - 1.0).abs() < tolerance::ENSEMBLE_PROBABILITY);
            assert!(ensemble.reconstruction_error(&rho) < tolerance::ENSEMBLE_RECONSTRUCTION);
            assert!((ensemble.average_concurrence().unwrap() - value).abs() < 1e-12);
            // Any ensemble is feasible for both problems.
            match mode {
                RoofMode::Minimize => assert!(value >= closed - 1e-9),
                RoofMode::Maximize => assert!(value <= closed + 1e-9),
            }
        }
    }
}

#[test]
fn oracle_is_deterministic_per_seed() {
    let rho = random_mixed(3, &mut rng(12));
    let budget = OracleBudget {
        restarts: 4,
        seed: 99,
        ..OracleBudget::default()
    };
    let a = convex_roof_oracle(&rho, RoofMode::Maximize, &budget).unwrap();
    let b = convex_roof_oracle(&rho, RoofMode::Maximize, &budget).unwrap();
    assert_eq!(a, b);
}

#[test]
fn assistance_never_below_concurrence() {
    let mut gen = rng(13);
    for _ in 0..500 {
        let rank = gen.random_range(1..=4);
        let rho = random_mixed(rank, &mut gen);
        let c = wootters_concurrence(&rho).unwrap();
        let ca = concurrence_of_assistance(&rho).unwrap();
        assert!(ca >= c - 1e-10);
        assert!((0.0..=1.0 + 1e-12).contains(&c));
        assert!((0.0..=1.0 + 1e-12).contains(&ca));
    }
}

#[test]
fn maximally_mixed_spectrum_is_flat() {
    let mixed = DensityMatrix::maximally_mixed(vec![0, 1]).unwrap();
    let l = spin_flip_spectrum(&mixed).unwrap();
    for value in l {
        assert!((value - 0.25).abs() < 1e-12);
    }
    assert_eq!(wootters_concurrence(&mixed).unwrap(), 0.0);
    assert!((concurrence_of_assistance(&mixed).unwrap() - 1.0).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pure_two_qubit_measures_collapse(seed in any::<u64>()) {
        let psi = PureState::random_haar(2, seed).unwrap();
        let rho = psi.projector();
        let pure = concurrence_pure(&psi, &Partition::split(2, &[0]).unwrap()).unwrap();
        prop_assert!((wootters_concurrence(&rho).unwrap() - pure).abs() < 1e-10);
        prop_assert!((concurrence_of_assistance(&rho).unwrap() - pure).abs() < 1e-10);
    }

    #[test]
    fn pure_concurrence_is_side_symmetric(n in 2usize..=6, seed in any::<u64>(), mask in 1usize..63) {
        let psi = PureState::random_haar(n, seed).unwrap();
        let left: Vec<usize> = (0..n).filter(|q| mask >> q & 1 == 1).collect();
        prop_assume!(!left.is_empty() && left.len() < n);
        let right: Vec<usize> = (0..n).filter(|q| !left.contains(q)).collect();
        let forward = concurrence_pure(&psi, &Partition::new(&left, &right).unwrap()).unwrap();
        let backward = concurrence_pure(&psi, &Partition::new(&right, &left).unwrap()).unwrap();
        prop_assert!((forward - backward).abs() < 1e-10);
    }

    #[test]
    fn assistance_identity_for_every_focus(seed in any::<u64>()) {
        let psi = PureState::random_haar(3, seed).unwrap();
        for focus in 0..3 {
            let tangle = three_tangle(&psi, focus).unwrap();
            prop_assert!(tangle >= -1e-8);
            for other in (0..3).filter(|&q| q != focus) {
                let rho = psi.partial_trace(&[focus, other]).unwrap();
                let gap = concurrence_of_assistance(&rho).unwrap().powi(2) - wootters_concurrence(&rho).unwrap().powi(2);
                prop_assert!((gap - tangle).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn dual_monogamy_and_ckw(n in 3usize..=6, seed in any::<u64>()) {
        let psi = PureState::random_haar(n, seed).unwrap();
        for focus in 0..n {
            let whole = bipartite_concurrence_squared(&psi, &[focus]).unwrap();
            let (mut pairwise, mut assisted) = (0.0, 0.0);
            for other in (0..n).filter(|&q| q != focus) {
                let rho = psi.partial_trace(&[focus, other]).unwrap();
                pairwise += wootters_concurrence(&rho).unwrap().powi(2);
                assisted += concurrence_of_assistance(&rho).unwrap().powi(2);
            }
            prop_assert!(whole <= assisted + 1e-8);
            prop_assert!(whole >= pairwise - 1e-8);
        }
    }

    #[test]
    fn measures_are_local_unitary_invariant(seed in any::<u64>()) {
        let mut gen = rng(seed);
        let psi = PureState::random_haar(3, seed).unwrap();
        let rotated = apply_random_local_unitaries(&psi, &mut gen);
        let measures = |s: &PureState| {
            let ab = s.partial_trace(&[0, 1]).unwrap();
            [
                concurrence_pure(s, &Partition::split(3, &[0]).unwrap()).unwrap(),
                wootters_concurrence(&ab).unwrap(),
                concurrence_of_assistance(&ab).unwrap(),
                three_tangle(s, 0).unwrap(),
                ab.linear_entropy(),
            ]
        };
        for (before, after) in measures(&psi).iter().zip(measures(&rotated)) {
            prop_assert!((before - after).abs() < 1e-9, "{} vs {}", before, after);
        }
    }
}

/// For `2⊗2⊗m` with `m = 2^(n-2)` the residual `C²(A|BC) - C_a²(ρ_AB)` equals the
/// convex-roof `C²(ρ_{A|C})`, which lies between 0 and the squared average
/// concurrence of any decomposition of `ρ_AC`; the eigen-ensemble is used here.
#[test]
fn assistance_identity_brackets_for_larger_environments() {
    for n in [4usize, 5] {
        for seed in 0..200u64 {
            let psi = PureState::random_haar(n, 900 + seed).unwrap();
            let rest: Vec<usize> = (0..n).filter(|&q| q != 1).collect();
            let residual = bipartite_concurrence_squared(&psi, &[0]).unwrap()
                - concurrence_of_assistance(&psi.partial_trace(&[0, 1]).unwrap())
                    .unwrap()
                    .powi(2);
            let spectrum = psi.partial_trace(&rest).unwrap().spectrum().unwrap();
            let mut average = 0.0;
            for (k, &p) in spectrum.values.iter().enumerate() {
                if p > 1e-14 {
                    let member =
                        PureState::normalized(n - 1, spectrum.vectors.column(k).iter().copied().collect()).unwrap();
                    average += p * concurrence_pure(&member, &Partition::split(n - 1, &[0]).unwrap()).unwrap();
                }
            }
            assert!(residual >= -1e-9, "n={n} seed={seed}: {residual}");
            assert!(
                residual <= average * average + 1e-9,
                "n={n} seed={seed}: {residual} > {}",
                average * average
            );
        }
    }
}

#[test]
fn ghz_and_w_reference_tangles() {
    let ghz = ket(3, &["000", "111"]);
    let w = ket(3, &["100", "010", "001"]);
    assert!((three_tangle(&ghz, 1).unwrap() - 1.0).abs() < 1e-12);
    assert!(three_tangle(&w, 2).unwrap().abs() < 1e-12);
}
