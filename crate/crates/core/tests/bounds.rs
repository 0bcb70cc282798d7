mod common;

use common::{ket, rng};
use monogamy_core::entanglement::{concurrence_of_assistance, wootters_concurrence};
use monogamy_core::monogamy::report::{evaluate_with, EvalOptions};
use monogamy_core::monogamy::wclass::{random_wclass_coefficients, wclass_bounds, wclass_state};
use monogamy_core::monogamy::{triangle_vectors, Analysis};
use monogamy_core::{evaluate_all, PureState};
use proptest::prelude::*;

#[test]
fn soundness_sweep_small() {
    for n in 3..=7usize {
        for seed in 0..100u64 {
            let report = evaluate_all(&PureState::random_haar(n, seed).unwrap()).unwrap();
            let bad: Vec<_> = report.violations().collect();
            assert!(bad.is_empty(), "n={n} seed={seed}: {bad:?}");
        }
    }
}

#[test]
fn upper_bounds_dominate_mid_values() {
    for seed in 0..200u64 {
        let analysis = Analysis::new(&PureState::random_haar(5, seed).unwrap()).unwrap();
        assert!(analysis.theorem2_upper() - analysis.ab_rest() >= -1e-7);
        assert!(analysis.corollary2_upper().unwrap() - analysis.abc1_rest().unwrap() >= -1e-7);
    }
}

#[test]
fn twelve_qubit_state_evaluates() {
    let report = evaluate_all(&PureState::random_haar(12, 1).unwrap()).unwrap();
    assert!(report.all_satisfied());
    assert!(evaluate_all(&PureState::random_haar(2, 1).unwrap()).is_err());
}

#[test]
fn wclass_marginals_have_equal_measures() {
    let mut gen = rng(77);
    for n in 4..=6usize {
        for _ in 0..50 {
            let coefficients = random_wclass_coefficients(n, &mut gen);
            let state = wclass_state(&coefficients).unwrap();
            for p in 0..n {
                for q in p + 1..n {
                    let rho = state.partial_trace(&[p, q]).unwrap();
                    let c = wootters_concurrence(&rho).unwrap();
                    assert!((c - concurrence_of_assistance(&rho).unwrap()).abs() < 1e-9);
                    let closed = 2.0 * (coefficients[p] * coefficients[q]).norm();
                    assert!((c - closed).abs() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn five_qubit_wclass_ab_cut() {
    // C²(AB|C1C2C3) <= Σ_t C²(A t) + Σ_t C²(B t), t over the other four qubits each.
    let mut gen = rng(5);
    for _ in 0..200 {
        let state = wclass_state(&random_wclass_coefficients(5, &mut gen)).unwrap();
        let analysis = Analysis::new(&state).unwrap();
        let sum_a: f64 = (0..5).filter(|&t| t != 0).map(|t| analysis.c2(0, t)).sum();
        let sum_b: f64 = (0..5).filter(|&t| t != 1).map(|t| analysis.c2(1, t)).sum();
        assert!(analysis.ab_rest() <= sum_a + sum_b + 1e-7);
        let chain = wclass_bounds(&state, 0, 1).unwrap();
        assert!((chain.upper - (sum_a + sum_b)).abs() < 1e-12);
        assert!(chain.holds(1e-7));
    }
}

#[test]
fn saturating_report_under_explicit_options() {
    let options = EvalOptions {
        state_id: "saturating-4q".into(),
        tolerance: 1e-9,
        roles: None,
    };
    let report = evaluate_with(&ket(4, &["0000", "1001"]), &options).unwrap();
    assert_eq!(report.state_id, "saturating-4q");
    for name in ["theorem1_lower", "theorem2_upper"] {
        assert!(report.entry(name).unwrap().slack.abs() < 1e-9, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chain_always_admits_triangle(n in 3usize..=6, seed in any::<u64>()) {
        let analysis = Analysis::new(&PureState::random_haar(n, seed).unwrap()).unwrap();
        prop_assert!(analysis.triangle_discriminant() >= -1e-12);
        let t = analysis.triangle_vectors();
        let [a, b, c] = t.lengths();
        prop_assert!((a - analysis.a_rest()).abs() < 1e-9);
        prop_assert!((b - analysis.b_rest()).abs() < 1e-9);
        prop_assert!((c - analysis.ab_rest()).abs() < 1e-9);
        prop_assert_eq!(t.a_vec[0] + t.b_vec[0], t.c_vec[0]);
        prop_assert_eq!(t.a_vec[1] + t.b_vec[1], t.c_vec[1]);
    }

    #[test]
    fn lower_bounds_never_exceed_their_cut(n in 4usize..=6, seed in any::<u64>()) {
        let analysis = Analysis::new(&PureState::random_haar(n, seed).unwrap()).unwrap();
        prop_assert!(analysis.theorem1_lower().raw <= analysis.ab_rest() + 1e-7);
        let abc1 = analysis.abc1_rest().unwrap();
        prop_assert!(analysis.corollary1_lower().unwrap().raw <= abc1 + 1e-7);
        prop_assert!(analysis.corollary2_lower().unwrap().raw <= abc1 + 1e-7);
    }
}

#[test]
fn triangle_of_product_state_is_zero() {
    let t = triangle_vectors(&PureState::zero(5).unwrap()).unwrap();
    assert_eq!([t.a_vec, t.b_vec, t.c_vec], [[0.0; 2]; 3]);
}
