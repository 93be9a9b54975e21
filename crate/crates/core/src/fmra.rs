//! Refinement filters, Parseval FMRA identities and the lift of a Parseval
//! FMRA generator to an MRA scaling function.
//!
//! Throughout, `φ̂(Bω) = m(ω) φ̂(ω)` is the refinement equation and filters
//! are `H⊥`-periodic ([`FilterSpec`]).
//!
//! ```
//! use vilenkin::{fmra, instances, Prime};
//!
//! let phi = instances::half_band(Prime::TWO);
//! let lift = fmra::fmra_to_mra(&phi).unwrap();
//! assert!(lift.periodization_residual <= 1e-12);
//! assert_eq!(lift.strata.len(), 2);
//! ```

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::filter::FilterSpec;
use crate::group::{CosetId, GroupElement, Prime, Side, Window};
use crate::periodic::PeriodicSet;
use crate::shift_invariant::{bracket, periodization_of_transform, FrameReport, Lattice};
use crate::stepfn::StepFunction;
use crate::tol::{self, negligible};
use crate::transform::{fourier, inverse_fourier};

/// `sup_ω |φ̂(Bω) − m(ω) φ̂(ω)|`.
pub fn check_refinement(phi: &StepFunction, m: &FilterSpec) -> Result<f64> {
    refinement_residual(&fourier(phi)?, m)
}

/// Refinement residual computed from `φ̂` directly.
pub fn refinement_residual(phi_hat: &StepFunction, m: &FilterSpec) -> Result<f64> {
    let dilated = phi_hat.compose_automorphism(1);
    dilated.max_abs_diff(&m.apply(phi_hat)?)
}

/// Residual of `f̂(B^j ω) = m(ω) φ̂(ω)`.
pub fn member_residual(f: &StepFunction, j: i32, m: &FilterSpec, phi: &StepFunction) -> Result<f64> {
    let lhs = fourier(f)?.compose_automorphism(j);
    lhs.max_abs_diff(&m.apply(&fourier(phi)?)?)
}

/// `H⊥`-periodic function given by a table on `U*`, evaluated anywhere.
fn periodic(table: StepFunction) -> FilterSpec {
    FilterSpec::new(table).expect("brackets live on the fundamental domain")
}

/// `m_f = [f̂(B^j ·), φ̂] / P_φ` on the support of `P_φ`, zero elsewhere.
///
/// Fails with [`Error::NotInSpace`] when `f̂(B^j ω) = m_f(ω) φ̂(ω)` does not
/// hold, i.e. when `f ∉ V_j`.
pub fn minimal_filter(phi: &StepFunction, f: &StepFunction, j: i32) -> Result<FilterSpec> {
    let phi_hat = fourier(phi)?;
    let target = fourier(f)?.compose_automorphism(j);
    let num = bracket(&target, &phi_hat, Lattice::HPerp)?;
    let den = periodization_of_transform(&phi_hat)?;
    let (num, den) = num.window_align(&den)?;
    let values = num
        .values()
        .iter()
        .zip(den.values())
        .map(|(n, d)| if negligible(d.re) { Complex64::new(0.0, 0.0) } else { n / d.re })
        .collect();
    let m = FilterSpec::new(StepFunction::from_values(num.p(), Side::Dual, num.window(), values)?)?;
    let residual = target.max_abs_diff(&m.apply(&phi_hat)?)?;
    if residual > tol::CHAINED {
        return Err(Error::NotInSpace { level: j, residual });
    }
    Ok(m)
}

/// The element `f` with `f̂(Bω) = m(ω) φ̂(ω)`, a member of `V_1`.
pub fn refined_member(m: &FilterSpec, phi: &StepFunction) -> Result<StepFunction> {
    let f_hat = m.apply(&fourier(phi)?)?.compose_automorphism(-1);
    Ok(inverse_fourier(&f_hat)?.trimmed())
}

/// Cells of `U*` at resolution `r`, as representatives.
fn points(p: Prime, r: u32) -> impl Iterator<Item = GroupElement> {
    let w = Window::fundamental(r);
    (0..p.pow(r)).map(move |idx| CosetId::from_index(p, Side::Dual, w, idx).representative())
}

fn resolution_of(f: &StepFunction) -> u32 {
    f.window().hi.max(0) as u32
}

/// `ω ⊕ 0.ζ` for `ζ = 0, …, p−1`.
fn sheet_points(omega: &GroupElement) -> impl Iterator<Item = GroupElement> + '_ {
    let p = omega.p().get() as u8;
    (0..p).map(move |z| omega.with_digit(1, (omega.digit(1) + z) % p))
}

/// Residual of `Σ_ζ |m(ω ⊕ 0.ζ)|² = 1_{𝔼_φ}(Bω)` over all cells.
///
/// Requires the translates of `φ` to be a Parseval frame.
pub fn lowpass_identity(phi: &StepFunction, m: &FilterSpec) -> Result<f64> {
    let p_phi = crate::shift_invariant::periodization(phi)?;
    if !FrameReport::from_periodization(&p_phi)?.parseval {
        return Err(Error::NotParseval);
    }
    let r_p = resolution_of(&p_phi);
    let p_phi = periodic(p_phi);
    let r = m.resolution().max(r_p + 1).max(1);
    let mut worst = 0.0f64;
    for omega in points(phi.p(), r) {
        let lhs: f64 = sheet_points(&omega).map(|w| m.eval(&w).norm_sqr()).sum();
        let rhs = if negligible(p_phi.eval(&omega.shift(1)).re) { 0.0 } else { 1.0 };
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Residual of the bracket splitting identity
/// `[f̂₁, f̂₂](Bω) = Σ_ζ m₁ conj(m₂) P_φ (ω ⊕ 0.ζ)`
/// for `f̂_i(Bω) = m_i(ω) φ̂(ω)`.
pub fn bracket_split_check(
    f1: &StepFunction,
    f2: &StepFunction,
    m1: &FilterSpec,
    m2: &FilterSpec,
    phi: &StepFunction,
) -> Result<f64> {
    for (k, (f, m)) in [(f1, m1), (f2, m2)].into_iter().enumerate() {
        let residual = member_residual(f, 1, m, phi)?;
        if residual > tol::CHAINED {
            return Err(Error::Precondition(format!(
                "f{} does not satisfy the refinement relation with its filter (residual {residual:e})",
                k + 1
            )));
        }
    }
    let lhs = bracket(&fourier(f1)?, &fourier(f2)?, Lattice::HPerp)?;
    let p_phi = crate::shift_invariant::periodization(phi)?;
    let r = (resolution_of(&lhs) + 1)
        .max(m1.resolution())
        .max(m2.resolution())
        .max(resolution_of(&p_phi))
        .max(1);
    let lhs = periodic(lhs);
    let p_phi = periodic(p_phi);
    let mut worst = 0.0f64;
    for omega in points(phi.p(), r) {
        let left = lhs.eval(&omega.shift(1));
        let right: Complex64 = sheet_points(&omega)
            .map(|w| m1.eval(&w) * m2.eval(&w).conj() * p_phi.eval(&w).re)
            .sum();
        worst = worst.max((left - right).norm());
    }
    Ok(worst)
}

/// For `j = 0..=j_max`, the largest deviation of `|φ̂(B^{-j} ω)|` from 1
/// over the cells `ω` of `U*`.
pub fn limit_modulus(phi: &StepFunction, j_max: u32) -> Result<Vec<f64>> {
    let phi_hat = fourier(phi)?;
    let r = resolution_of(&phi_hat).max(1);
    let cells: Vec<GroupElement> = points(phi.p(), r).collect();
    Ok((0..=j_max as i32)
        .map(|j| {
            cells
                .iter()
                .map(|w| (phi_hat.value_at(&w.shift(-j)).norm() - 1.0).abs())
                .fold(0.0, f64::max)
        })
        .collect())
}

/// Depth up to which strata and limits are searched: the width of the
/// smallest window holding both `φ̂` and `U*`.
pub fn depth_cap(phi_hat: &StepFunction) -> u32 {
    phi_hat.window().covering_fundamental().width()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingKind {
    Mra,
    ParsevalFmra,
}

/// Outcome of the three scaling-function conditions.
#[derive(Clone, Debug, Serialize)]
pub struct ScalingReport {
    pub kind: ScalingKind,
    /// `P_φ ≡ 1` (MRA) or `P_φ = 1_{𝔼_φ}` with nonempty support (Parseval).
    pub periodization: bool,
    /// `sup |P_φ − target|` for the chosen kind.
    pub periodization_residual: f64,
    /// `|φ̂(B^{-j}ω)| → 1` within the depth cap.
    pub limit: bool,
    pub limit_deviations: Vec<f64>,
    /// A periodic filter with zero refinement residual exists and `φ ≠ 0`.
    pub refinement: bool,
    pub refinement_residual: Option<f64>,
}

impl ScalingReport {
    pub fn passed(&self) -> bool {
        self.periodization && self.limit && self.refinement
    }
}

pub fn scaling_checks(phi: &StepFunction, kind: ScalingKind) -> Result<ScalingReport> {
    let phi_hat = fourier(phi)?;
    let p_phi = periodization_of_transform(&phi_hat)?;
    let report = FrameReport::from_periodization(&p_phi)?;
    let (periodization, periodization_residual) = match kind {
        ScalingKind::Mra => {
            let r = p_phi.values().iter().map(|v| (v - 1.0).norm()).fold(0.0, f64::max);
            (r <= tol::EXACT, r)
        }
        ScalingKind::ParsevalFmra => {
            let r = p_phi
                .values()
                .iter()
                .map(|v| if negligible(v.re) { v.norm() } else { (v - 1.0).norm() })
                .fold(0.0, f64::max);
            (report.parseval, r)
        }
    };
    let limit_deviations = limit_modulus(phi, depth_cap(&phi_hat))?;
    let limit = limit_deviations.last().is_some_and(|&d| d <= tol::EXACT);
    let refinement_residual = match minimal_filter(phi, phi, 1) {
        Ok(m) => Some(refinement_residual(&phi_hat, &m)?),
        Err(Error::NotInSpace { .. }) => None,
        Err(e) => return Err(e),
    };
    let refinement = !phi.is_zero() && refinement_residual.is_some_and(|r| r <= tol::EXACT);
    Ok(ScalingReport {
        kind,
        periodization,
        periodization_residual,
        limit,
        limit_deviations,
        refinement,
        refinement_residual,
    })
}

/// The MRA obtained from a Parseval FMRA generator.
#[derive(Clone, Debug)]
pub struct MraLift {
    /// The new scaling function `φ′`.
    pub scaling: StepFunction,
    /// Its transform `φ̂′`.
    pub scaling_hat: StepFunction,
    /// Low-pass filter of `φ′`.
    pub filter: FilterSpec,
    /// `E_j = {ω ∈ U* : j(ω) = j}` for `j = 0, 1, …`.
    pub strata: Vec<PeriodicSet>,
    /// `j(ω)` for each cell of `U*` at [`MraLift::resolution`], in `λ*` order.
    pub depths: Vec<u32>,
    pub resolution: u32,
    /// Largest depth searched.
    pub depth_cap: u32,
    /// `sup |P_{φ′} − 1|`.
    pub periodization_residual: f64,
    /// `sup |φ̂′(Bω) − m′(ω) φ̂′(ω)|`.
    pub refinement_residual: f64,
}

impl MraLift {
    /// `(cell, j(ω))` pairs in `λ*` order.
    pub fn depth_table(&self) -> Vec<(String, u32)> {
        let p = self.scaling.p();
        let w = Window::fundamental(self.resolution);
        self.depths
            .iter()
            .enumerate()
            .map(|(idx, &j)| (CosetId::from_index(p, Side::Dual, w, idx).to_string(), j))
            .collect()
    }
}

/// Builds an MRA scaling function `φ′` from the generator `φ` of a
/// Parseval FMRA.
///
/// Each `ω ∈ U*` is assigned the least `j` with `B^{-j} ω` in the spectrum
/// of `φ`, and `φ̂′` glues the dilated copies of `φ̂` together along these
/// strata. The new filter equals `m` where both `ω` and `Bω` are in the
/// spectrum, `1` where `Bω ∈ U*` leaves it, and `0` otherwise.
pub fn fmra_to_mra(phi: &StepFunction) -> Result<MraLift> {
    if phi.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    let phi_hat = fourier(phi)?;
    let p_phi = periodization_of_transform(&phi_hat)?;
    if !FrameReport::from_periodization(&p_phi)?.parseval {
        return Err(Error::NotParseval);
    }
    let p = phi.p();
    let spectrum = PeriodicSet::from_values(&p_phi, |v| !negligible(v.re))?;
    let r = spectrum.resolution();
    let cap = depth_cap(&phi_hat);

    let mut depths = Vec::with_capacity(p.pow(r));
    let mut missing = Vec::new();
    for (idx, omega) in points(p, r).enumerate() {
        match (0..=cap).find(|&j| spectrum.contains(&omega.shift(-(j as i32)))) {
            Some(j) => depths.push(j),
            None => {
                depths.push(u32::MAX);
                missing.push(CosetId::from_index(p, Side::Dual, Window::fundamental(r), idx).to_string());
            }
        }
    }
    if !missing.is_empty() {
        return Err(Error::LimitUnmet { depth: cap, cells: missing });
    }
    let m = minimal_filter(phi, phi, 1)?;
    let deepest = depths.iter().copied().max().unwrap_or(0);
    let strata = (0..=deepest)
        .map(|j| PeriodicSet::from_predicate(p, r, |c| depths[c.index()] == j))
        .collect::<Result<Vec<_>>>()?;

    let pw = phi_hat.window();
    let window = Window { lo: pw.lo.min(0) - deepest as i32, hi: r as i32 };
    let block = p.pow(r);
    let scaling_hat = StepFunction::from_fn(p, Side::Dual, window, |cell| {
        let xi = cell.representative();
        let j = depths[cell.index() % block] as i32;
        if (1 - j..=0).any(|i| xi.digit(i) != 0) {
            return Complex64::new(0.0, 0.0);
        }
        phi_hat.value_at(&xi.shift(-j))
    })?;

    let filter_resolution = (r + 1).max(m.resolution());
    let filter = FilterSpec::from_fn(p, filter_resolution, |cell| {
        let omega = cell.representative();
        let here = spectrum.contains(&omega);
        let next = spectrum.contains(&omega.shift(1));
        if here && next {
            m.eval(&omega)
        } else if omega.digit(1) == 0 && !next {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })?;

    let p_new = periodization_of_transform(&scaling_hat)?;
    let periodization_residual = p_new.values().iter().map(|v| (v - 1.0).norm()).fold(0.0, f64::max);
    let refinement_residual = refinement_residual(&scaling_hat, &filter)?;
    let scaling = inverse_fourier(&scaling_hat)?.trimmed();
    Ok(MraLift {
        scaling,
        scaling_hat,
        filter,
        strata,
        depths,
        resolution: r,
        depth_cap: cap,
        periodization_residual,
        refinement_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::shift_invariant::{fiber, frame_report, periodization};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn values_re(f: &StepFunction) -> Vec<f64> {
        f.values().iter().map(|v| v.re).collect()
    }

    #[test]
    fn refinement_examples() {
        let p = Prime::TWO;
        let haar = instances::haar(p);
        let low = FilterSpec::from_restriction(&StepFunction::ball(p, Side::Dual, 1)).unwrap();
        assert_eq!(check_refinement(&haar, &low).unwrap(), 0.0);
        let one = FilterSpec::constant(p, Complex64::new(1.0, 0.0));
        assert!(check_refinement(&haar, &one).unwrap() > 0.5);
        let zero = StepFunction::zeros(p, Side::Primal, Window::new(-2, 2).unwrap()).unwrap();
        assert_eq!(check_refinement(&zero, &one).unwrap(), 0.0);
    }

    #[test]
    fn minimal_filter_examples() {
        for p in [Prime::TWO, Prime::THREE] {
            let haar = instances::haar(p);
            let m = minimal_filter(&haar, &haar, 1).unwrap();
            let expect = FilterSpec::from_restriction(&StepFunction::ball(p, Side::Dual, 1)).unwrap();
            assert_eq!(m.max_abs_diff(&expect).unwrap(), 0.0);

            let half = instances::half_band(p);
            let m = minimal_filter(&half, &half, 1).unwrap();
            let expect = FilterSpec::from_restriction(&StepFunction::ball(p, Side::Dual, 2)).unwrap();
            assert!(m.max_abs_diff(&expect).unwrap() <= 1e-12);

            let zero = StepFunction::zeros(p, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
            assert!(minimal_filter(&haar, &zero, 1).unwrap().table().is_zero());
        }
    }

    #[test]
    fn minimal_filter_rejects_outsiders() {
        let p = Prime::TWO;
        let half = instances::half_band(p);
        // 1_U is not in V_0 of the half-band generator
        let err = minimal_filter(&half, &instances::haar(p), 0).unwrap_err();
        assert!(matches!(err, Error::NotInSpace { level: 0, .. }));
    }

    #[test]
    fn minimal_filter_divides_by_periodization() {
        let p = Prime::TWO;
        let phi = instances::two_level_frame(p);
        let f = phi.translate(&GroupElement::parse(p, Side::Primal, "1.0").unwrap()).unwrap();
        let m = minimal_filter(&phi, &f, 0).unwrap();
        assert!(member_residual(&f, 0, &m, &phi).unwrap() <= 1e-12);
    }

    #[test]
    fn lowpass_identity_examples() {
        for p in [Prime::TWO, Prime::THREE] {
            let haar = instances::haar(p);
            let m = minimal_filter(&haar, &haar, 1).unwrap();
            assert!(lowpass_identity(&haar, &m).unwrap() <= 1e-12);
            let half = instances::half_band(p);
            let m = minimal_filter(&half, &half, 1).unwrap();
            assert!(lowpass_identity(&half, &m).unwrap() <= 1e-12);
        }
        let zero = StepFunction::zeros(Prime::TWO, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
        let any = FilterSpec::constant(Prime::TWO, Complex64::new(1.0, 0.0));
        assert_eq!(lowpass_identity(&zero, &any), Err(Error::NotParseval));
    }

    #[test]
    fn bracket_split_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [Prime::TWO, Prime::THREE] {
            for phi in [instances::haar(p), instances::half_band(p)] {
                let m = minimal_filter(&phi, &phi, 1).unwrap();
                assert!(bracket_split_check(&phi, &phi, &m, &m, &phi).unwrap() <= 1e-12);
                for _ in 0..4 {
                    let m1 = instances::random_filter(&mut rng, p, 3);
                    let m2 = instances::random_filter(&mut rng, p, 3);
                    let f1 = refined_member(&m1, &phi).unwrap();
                    let f2 = refined_member(&m2, &phi).unwrap();
                    assert!(bracket_split_check(&f1, &f2, &m1, &m2, &phi).unwrap() <= 1e-12);
                }
            }
            let zero = StepFunction::zeros(p, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
            let m0 = FilterSpec::constant(p, Complex64::new(0.0, 0.0));
            assert_eq!(bracket_split_check(&zero, &zero, &m0, &m0, &instances::haar(p)).unwrap(), 0.0);
            let wrong = FilterSpec::constant(p, Complex64::new(1.0, 0.0));
            let haar = instances::haar(p);
            assert!(bracket_split_check(&haar, &haar, &wrong, &wrong, &haar).is_err());
        }
    }

    #[test]
    fn limit_modulus_examples() {
        let p = Prime::TWO;
        assert!(limit_modulus(&instances::haar(p), 3).unwrap().iter().all(|&d| d == 0.0));
        let half = limit_modulus(&instances::half_band(p), 3).unwrap();
        assert_eq!(half[0], 1.0);
        assert!(half[1..].iter().all(|&d| d <= 1e-12));
        let zero = StepFunction::zeros(p, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
        assert!(limit_modulus(&zero, 3).unwrap().iter().all(|&d| d == 1.0));
    }

    #[test]
    fn scaling_check_examples() {
        let p = Prime::THREE;
        let haar = instances::haar(p);
        assert!(scaling_checks(&haar, ScalingKind::Mra).unwrap().passed());
        let half = instances::half_band(p);
        assert!(scaling_checks(&half, ScalingKind::ParsevalFmra).unwrap().passed());
        let as_mra = scaling_checks(&half, ScalingKind::Mra).unwrap();
        assert!(!as_mra.passed() && !as_mra.periodization);
        let zero = StepFunction::zeros(p, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
        for kind in [ScalingKind::Mra, ScalingKind::ParsevalFmra] {
            let report = scaling_checks(&zero, kind).unwrap();
            assert!(!report.periodization && !report.limit && !report.refinement);
        }
    }

    #[test]
    fn lift_of_haar_is_identity() {
        let p = Prime::TWO;
        let haar = instances::haar(p);
        let lift = fmra_to_mra(&haar).unwrap();
        assert_eq!(lift.strata.len(), 1);
        assert!(lift.strata[0].is_full());
        assert!(lift.scaling.max_abs_diff(&haar).unwrap() <= 1e-15);
        let m = minimal_filter(&haar, &haar, 1).unwrap();
        assert_eq!(lift.filter.max_abs_diff(&m).unwrap(), 0.0);
    }

    #[test]
    fn lift_of_half_band() {
        for p in [Prime::TWO, Prime::THREE, Prime::FIVE] {
            let half = instances::half_band(p);
            let lift = fmra_to_mra(&half).unwrap();
            assert_eq!(lift.strata.len(), 2);
            assert_eq!(lift.strata[0].cell_strings(), vec!["0.0"]);
            assert!(lift.strata[1].same_set(&lift.strata[0].complement()).unwrap());
            assert_eq!(lift.periodization_residual, 0.0);
            assert!(lift.refinement_residual <= 1e-12);
            assert!(lift.scaling.max_abs_diff(&instances::haar(p)).unwrap() <= 1e-12);
            let expect = FilterSpec::from_restriction(&StepFunction::ball(p, Side::Dual, 1)).unwrap();
            assert!(lift.filter.max_abs_diff(&expect).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn non_refinable_generator_is_rejected() {
        let p = Prime::TWO;
        let f_hat = StepFunction::from_fn(p, Side::Dual, Window::fundamental(2), |c| {
            Complex64::new(if c.digit(2) == 0 { 1.0 } else { 0.0 }, 0.0)
        })
        .unwrap();
        let phi = inverse_fourier(&f_hat).unwrap();
        assert!(matches!(fmra_to_mra(&phi), Err(Error::NotInSpace { .. })));
    }

    #[test]
    fn spectrum_away_from_origin_leaves_strata_uncovered() {
        let omega = GroupElement::parse(Prime::TWO, Side::Dual, "0.1").unwrap();
        let f_hat = StepFunction::indicator(&CosetId::containing(&omega, Window::fundamental(1)).unwrap()).unwrap();
        let phi = inverse_fourier(&f_hat).unwrap();
        match fmra_to_mra(&phi) {
            Err(Error::LimitUnmet { cells, .. }) => assert_eq!(cells, vec!["0.0"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lift_errors() {
        let p = Prime::TWO;
        let zero = StepFunction::zeros(p, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
        assert_eq!(fmra_to_mra(&zero).unwrap_err(), Error::ZeroGenerator);
        let doubled = instances::haar(p).scale(Complex64::new(2.0, 0.0));
        assert_eq!(fmra_to_mra(&doubled).unwrap_err(), Error::NotParseval);
    }

    #[test]
    fn lift_of_refinable_parseval_generators() {
        // φ̂ = 1_S with S a union of cells invariant under B^{-1} gives a
        // refinable Parseval generator.
        let p = Prime::TWO;
        for keep in [[true, false, false, false], [true, true, false, true]] {
            let f_hat = StepFunction::from_fn(p, Side::Dual, Window::fundamental(2), |c| {
                Complex64::new(if keep[c.index()] { 1.0 } else { 0.0 }, 0.0)
            })
            .unwrap();
            let phi = inverse_fourier(&f_hat).unwrap();
            let lift = fmra_to_mra(&phi).unwrap();
            assert!(lift.periodization_residual <= 1e-12);
            assert!(lift.refinement_residual <= 1e-12);
            let old = fourier(&phi).unwrap();
            let (a, b) = lift.scaling_hat.window_align(&old).unwrap();
            assert!(a.values().iter().zip(b.values()).all(|(x, y)| x.norm() + 1e-12 >= y.norm()));
            let support = frame_report(&phi).unwrap().support();
            for cell in support.cells() {
                let w = cell.representative();
                let f_old = fiber(&phi, &w).unwrap();
                let f_new = fiber(&lift.scaling, &w).unwrap();
                let overlap = f_old.inner_product(&f_new).unwrap().norm();
                assert!((overlap * overlap - f_old.norm_sqr() * f_new.norm_sqr()).abs() <= 1e-12);
            }
            assert!(values_re(&periodization(&lift.scaling).unwrap()).iter().all(|&v| (v - 1.0).abs() <= 1e-12));
        }
    }
}
