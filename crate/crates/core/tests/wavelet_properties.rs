use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vilenkin::fmra::{check_refinement, minimal_filter};
use vilenkin::instances::random_refinable;
use vilenkin::shift_invariant::frame_report;
use vilenkin::transform::fourier;
use vilenkin::wavelet::{
    blocked_set, construct_wavelet, delta_sets, existence_conditions, fiber_decomposition, fiber_orthogonality_check,
    rank2,
};
use vilenkin::{Error, GroupElement, Prime, Side, StepFunction, Window};

fn generator(seed: u64, r: u32, zero_density: f64) -> StepFunction {
    random_refinable(&mut ChaCha8Rng::seed_from_u64(seed), Prime::TWO, r, zero_density)
}

fn points(r: u32) -> impl Iterator<Item = GroupElement> {
    let w = Window::fundamental(r);
    (0..1usize << r).map(move |i| vilenkin::CosetId::from_index(Prime::TWO, Side::Dual, w, i).representative())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Either the blocked set is nonempty and construction refuses, or the
    /// certificate passes with bounds `min(C, C³)`, `max(D, D³)`.
    #[test]
    fn construction_succeeds_or_reports_blocked(seed in any::<u64>(), r in 1u32..4, zeros in 0.0f64..0.6) {
        let phi = generator(seed, r, zeros);
        prop_assume!(!phi.is_zero());
        let m = minimal_filter(&phi, &phi, 1).unwrap();
        let frame = frame_report(&phi).unwrap();
        let bounds = (frame.lower, frame.upper);
        let (e, measure) = blocked_set(&phi, &m).unwrap();
        let existence = existence_conditions(&phi, &m, bounds).unwrap();
        prop_assert!(existence.equivalent);
        prop_assert!(existence.energy_split_residual <= 1e-12);
        prop_assert_eq!(existence.failing_i.clone(), e.cell_strings());
        match construct_wavelet(&phi, &m, bounds) {
            Ok(cert) => {
                prop_assert_eq!(measure, 0.0);
                prop_assert!(cert.passed, "{:?}", cert.frame);
                prop_assert!(existence.condition_ii);
                let (c, d) = bounds;
                prop_assert_eq!(cert.output_bounds, (c.min(c * c * c), d.max(d * d * d)));
                let check = fiber_orthogonality_check(&phi, &m, &cert.psi).unwrap();
                prop_assert!(check.residual <= 1e-12);
                prop_assert!(check.dimension_mismatches.is_empty());
            }
            Err(Error::Blocked { measure: got, cells }) => {
                prop_assert!(measure > 0.0);
                prop_assert_eq!(got, measure);
                prop_assert_eq!(cells, e.cell_strings());
                prop_assert!(!existence.condition_i && !existence.condition_ii);
            }
            Err(other) => prop_assert!(false, "unexpected error {other:?}"),
        }
    }

    /// Fiber splitting invariants at every cell.
    #[test]
    fn fibers_split_into_even_and_odd(seed in any::<u64>(), r in 1u32..4) {
        let phi = generator(seed, r, 0.3);
        prop_assume!(!phi.is_zero());
        let m = minimal_filter(&phi, &phi, 1).unwrap();
        let deltas = delta_sets(&phi).unwrap();
        let res = deltas.delta2.resolution();
        for (idx, omega) in points(res).enumerate() {
            let fib = fiber_decomposition(&phi, &m, &omega).unwrap();
            prop_assert!(fib.invariant_residual() <= 1e-12);
            prop_assert!(fib.spans_agree());
            prop_assert_eq!(fib.dim(), deltas.dims[idx]);
            prop_assert_eq!(rank2(&fib.a, &fib.b), deltas.dims[idx]);
        }
    }
}

#[test]
fn nonzero_filter_values_never_block() {
    // with φ̂ nonzero on all of U*, the minimal filter is φ̂(B·)/φ̂ on
    // {ω₁ = 0}, which never vanishes, so E is empty
    for seed in 0..20 {
        let phi = generator(seed, 3, 0.0);
        let m = minimal_filter(&phi, &phi, 1).unwrap();
        assert_eq!(blocked_set(&phi, &m).unwrap().1, 0.0);
    }
}

#[test]
fn unified_and_case_split_formulas_agree() {
    for seed in 0..30 {
        let phi = generator(seed, 3, 0.4);
        if phi.is_zero() {
            continue;
        }
        let m = minimal_filter(&phi, &phi, 1).unwrap();
        let frame = frame_report(&phi).unwrap();
        if let Ok(cert) = construct_wavelet(&phi, &m, (frame.lower, frame.upper)) {
            assert!(cert.unified_residual <= 1e-12, "seed {seed}: {}", cert.unified_residual);
            // ψ̂(B·) = M φ̂ in V₁
            let refined = cert.high_pass.apply(&fourier(&phi).unwrap()).unwrap();
            let direct = cert.psi_hat.compose_automorphism(1);
            let (a, b) = refined.window_align(&direct).unwrap();
            assert!(a.max_abs_diff(&b).unwrap() <= 1e-12);
        }
    }
}

#[test]
fn scaled_filter_breaks_refinement_precondition() {
    let phi = generator(3, 2, 0.0);
    let m = minimal_filter(&phi, &phi, 1).unwrap().map(|v| v * Complex64::new(2.0, 0.0));
    assert!(check_refinement(&phi, &m).unwrap() > 1e-9);
    assert!(matches!(blocked_set(&phi, &m), Err(Error::Precondition(_))));
}

#[test]
fn random_family_covers_both_outcomes() {
    let (mut built, mut blocked) = (0, 0);
    for seed in 0..200 {
        let phi = generator(seed, 3, 0.4);
        if phi.is_zero() {
            continue;
        }
        let m = minimal_filter(&phi, &phi, 1).unwrap();
        let frame = frame_report(&phi).unwrap();
        match construct_wavelet(&phi, &m, (frame.lower, frame.upper)) {
            Ok(_) => built += 1,
            Err(Error::Blocked { .. }) => blocked += 1,
            Err(e) => panic!("{e}"),
        }
    }
    assert!(built > 10 && blocked > 10, "built {built}, blocked {blocked}");
}
