//! Principal shift-invariant spaces: periodization, brackets, frame bounds
//! and spectra.
//!
//! ```
//! use vilenkin::{instances, shift_invariant};
//! use vilenkin::Prime;
//!
//! let report = shift_invariant::frame_report(&instances::haar(Prime::TWO)).unwrap();
//! assert!(report.orthonormal);
//! assert_eq!((report.lower, report.upper), (1.0, 1.0));
//! ```

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::filter::FilterSpec;
use crate::group::{GroupElement, Side, Window};
use crate::periodic::PeriodicSet;
use crate::stepfn::StepFunction;
use crate::tol::{self, negligible};
use crate::transform::{fourier, inverse_fourier};

/// Lattice a bracket sums over: `H` on `G`, `H⊥` on `G*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    H,
    HPerp,
}

impl Lattice {
    pub fn side(self) -> Side {
        match self {
            Lattice::H => Side::Primal,
            Lattice::HPerp => Side::Dual,
        }
    }
}

/// `[f, g](x) = Σ_h f(x ⊕ h) conj(g(x ⊕ h))`, returned on the fundamental
/// domain (window `[0, r]`).
pub fn bracket(f: &StepFunction, g: &StepFunction, lattice: Lattice) -> Result<StepFunction> {
    if f.side() != lattice.side() || g.side() != lattice.side() {
        return Err(Error::Mismatch(format!(
            "{lattice:?} bracket of {} and {} functions",
            f.side(),
            g.side()
        )));
    }
    let (a, b) = f.window_align(g)?;
    let w = a.window().covering_fundamental();
    let (a, b) = (a.refine(w)?, b.refine(w)?);
    let r = w.hi as u32;
    let block = a.p().pow(r);
    let mut out = vec![Complex64::new(0.0, 0.0); block];
    for (chunk_a, chunk_b) in a.values().chunks(block).zip(b.values().chunks(block)) {
        for ((o, x), y) in out.iter_mut().zip(chunk_a).zip(chunk_b) {
            *o += x * y.conj();
        }
    }
    StepFunction::from_values(a.p(), a.side(), Window::fundamental(r), out)
}

/// `P_φ(ω) = Σ_{h ∈ H⊥} |φ̂(ω ⊕ h)|²` on `U*`.
pub fn periodization(phi: &StepFunction) -> Result<StepFunction> {
    let f = fourier(phi)?;
    periodization_of_transform(&f)
}

/// Periodization from an already transformed generator.
pub fn periodization_of_transform(f_hat: &StepFunction) -> Result<StepFunction> {
    bracket(f_hat, f_hat, Lattice::HPerp)
}

/// Frame data of the translates `{T_h φ}`.
#[derive(Clone, Debug, Serialize)]
pub struct FrameReport {
    /// Smallest value of `P_φ` off its zero set (0 when `φ = 0`).
    pub lower: f64,
    /// Largest value of `P_φ`.
    pub upper: f64,
    #[serde(skip)]
    pub zero_set: PeriodicSet,
    pub bessel: bool,
    pub frame: bool,
    pub parseval: bool,
    pub orthonormal: bool,
}

impl FrameReport {
    pub fn from_periodization(p_phi: &StepFunction) -> Result<Self> {
        let zero_set = PeriodicSet::from_values(p_phi, |v| negligible(v.re))?;
        let support: Vec<f64> = p_phi
            .values()
            .iter()
            .map(|v| v.re)
            .filter(|&v| !negligible(v))
            .collect();
        let frame = !support.is_empty();
        let lower = support.iter().copied().fold(f64::INFINITY, f64::min);
        let upper = support.iter().copied().fold(0.0, f64::max);
        let lower = if frame { lower } else { 0.0 };
        let parseval = frame && support.iter().all(|v| (v - 1.0).abs() <= tol::EXACT);
        let orthonormal = parseval && zero_set.is_empty();
        Ok(FrameReport { lower, upper, zero_set, bessel: true, frame, parseval, orthonormal })
    }

    /// Cells of `U*` carrying the frame, i.e. the spectrum.
    pub fn support(&self) -> PeriodicSet {
        self.zero_set.complement()
    }
}

pub fn frame_report(phi: &StepFunction) -> Result<FrameReport> {
    FrameReport::from_periodization(&periodization(phi)?)
}

/// `η(⟨φ⟩)`: cells of `U*` where `P_φ` is nonzero.
pub fn spectrum(phi: &StepFunction) -> Result<PeriodicSet> {
    PeriodicSet::from_values(&periodization(phi)?, |v| !negligible(v.re))
}

/// The spectrum recomputed from fibers: a cell belongs to it when the
/// fiber of `φ̂` over its representative is not the zero sequence.
pub fn spectrum_via_fibers(phi: &StepFunction) -> Result<PeriodicSet> {
    let f_hat = fourier(phi)?;
    let r = f_hat.window().hi.max(0) as u32;
    PeriodicSet::from_predicate(phi.p(), r, |cell| {
        let fiber = Fiber::of_transform(&f_hat, &cell.representative()).expect("base point lies in U*");
        !negligible(fiber.norm_sqr())
    })
}

/// `𝔼_φ`, the periodic support of `P_φ`, written out on a window that
/// reaches below `U*`. Each point is summed over its own `H⊥`-orbit.
pub fn energy_set(phi: &StepFunction) -> Result<StepFunction> {
    let f_hat = fourier(phi)?;
    let fw = f_hat.window();
    let w = Window { lo: fw.lo.min(0) - 1, hi: fw.hi.max(0) };
    StepFunction::from_fn(phi.p(), Side::Dual, w, |cell| {
        let omega = cell.representative();
        let orbit = Fiber::of_transform(&f_hat, &omega.fractional_part()).expect("fractional part lies in U*");
        let inside = !negligible(orbit.norm_sqr());
        Complex64::new(if inside { 1.0 } else { 0.0 }, 0.0)
    })
}

/// Cells of `U*` on which an indicator written on a wider window equals 1.
pub fn restrict_to_fundamental(indicator: &StepFunction) -> Result<PeriodicSet> {
    let w = indicator.window();
    let r = w.hi.max(0) as u32;
    let wide = indicator.refine(w.covering_fundamental())?;
    let n = Window::fundamental(r).cell_count(indicator.p())?;
    let head = StepFunction::from_values(
        indicator.p(),
        Side::Dual,
        Window::fundamental(r),
        wide.values()[..n].to_vec(),
    )?;
    PeriodicSet::from_values(&head, |v| v.re > 0.5)
}

/// The sequence `f̂(ω ⊕ h)` over the lattice points `h ∈ H⊥` inside the
/// window of `f̂`.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub base: GroupElement,
    pub entries: Vec<(GroupElement, Complex64)>,
}

impl Fiber {
    /// Fiber of a dual function at `ω ∈ U*`.
    pub fn of_transform(f_hat: &StepFunction, omega: &GroupElement) -> Result<Fiber> {
        if f_hat.side() != Side::Dual || omega.side() != Side::Dual || omega.p() != f_hat.p() {
            return Err(Error::Mismatch("fibers are taken of dual functions at dual points".into()));
        }
        if !omega.in_ball(0) {
            return Err(Error::Precondition(format!("fiber base {omega} is not in U*")));
        }
        let p = f_hat.p();
        let lo = f_hat.window().lo.min(0);
        let count = p.pow((0 - lo) as u32);
        let lattice = Window { lo, hi: 0 };
        let entries = (0..count)
            .map(|idx| {
                let h = crate::group::CosetId::from_index(p, Side::Dual, lattice, idx).representative();
                let value = f_hat.value_at(&(omega + &h));
                (h, value)
            })
            .collect();
        Ok(Fiber { base: omega.clone(), entries })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|(_, v)| v.norm_sqr()).sum()
    }

    pub fn inner_product(&self, other: &Fiber) -> Result<Complex64> {
        if self.entries.len() != other.entries.len() {
            return Err(Error::Mismatch("fibers over different lattice ranges".into()));
        }
        Ok(self.entries.iter().zip(&other.entries).map(|((_, a), (_, b))| a * b.conj()).sum())
    }
}

/// Fiber of `φ̂` at `ω ∈ U*`.
pub fn fiber(phi: &StepFunction, omega: &GroupElement) -> Result<Fiber> {
    Fiber::of_transform(&fourier(phi)?, omega)
}

/// The element `f ∈ ⟨φ⟩` with `f̂ = m φ̂`.
pub fn synthesize(m: &FilterSpec, phi: &StepFunction) -> Result<StepFunction> {
    let f_hat = m.apply(&fourier(phi)?)?;
    Ok(inverse_fourier(&f_hat)?.trimmed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{character, Prime};
    use crate::instances;
    use crate::testing::{arb_element_on, arb_step_function};
    use proptest::prelude::*;

    fn set_strings(s: &PeriodicSet) -> Vec<String> {
        s.cell_strings()
    }

    #[test]
    fn haar_periodization() {
        let p_phi = periodization(&instances::haar(Prime::THREE)).unwrap();
        assert_eq!(p_phi.values(), &[Complex64::new(1.0, 0.0)]);
        let u_star = StepFunction::ball(Prime::THREE, Side::Dual, 0);
        assert_eq!(bracket(&u_star, &u_star, Lattice::HPerp).unwrap(), p_phi);
    }

    #[test]
    fn half_band_periodization() {
        let phi = instances::half_band(Prime::TWO);
        let p_phi = periodization(&phi).unwrap();
        let values: Vec<f64> = p_phi.values().iter().map(|v| v.re).collect();
        assert_eq!(values, vec![1.0, 0.0]);
        assert_eq!(set_strings(&spectrum(&phi).unwrap()), vec!["0.0"]);
    }

    #[test]
    fn bracket_checks_lattice() {
        let u = StepFunction::ball(Prime::TWO, Side::Primal, 0);
        assert!(bracket(&u, &u, Lattice::HPerp).is_err());
        let b = bracket(&u, &u, Lattice::H).unwrap();
        assert_eq!(b.values(), &[Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn frame_report_examples() {
        let p = Prime::TWO;
        let haar = frame_report(&instances::haar(p)).unwrap();
        assert!(haar.parseval && haar.orthonormal && haar.frame);
        let doubled = frame_report(&instances::haar(p).scale(Complex64::new(2.0, 0.0))).unwrap();
        assert_eq!((doubled.lower, doubled.upper), (4.0, 4.0));
        assert!(!doubled.parseval && doubled.frame);
        let two_level = frame_report(&instances::two_level_frame(p)).unwrap();
        assert_eq!((two_level.lower, two_level.upper), (0.25, 1.0));
        assert!(two_level.zero_set.is_empty() && !two_level.parseval);
        let half = frame_report(&instances::half_band(p)).unwrap();
        assert!(half.parseval && !half.orthonormal);
        let zero = StepFunction::zeros(p, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
        let none = frame_report(&zero).unwrap();
        assert!(!none.frame && !none.parseval && none.zero_set.is_full());
        assert_eq!((none.lower, none.upper), (0.0, 0.0));
    }

    #[test]
    fn spectrum_examples() {
        let p = Prime::TWO;
        let zero = StepFunction::zeros(p, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
        assert!(spectrum(&zero).unwrap().is_empty());
        assert!(spectrum(&instances::haar(p)).unwrap().is_full());
    }

    #[test]
    fn fiber_examples() {
        let p = Prime::TWO;
        let omega = GroupElement::parse(p, Side::Dual, "0.101").unwrap();
        let fib = fiber(&instances::haar(p), &omega).unwrap();
        assert_eq!(fib.entries.len(), 1);
        assert_eq!(fib.entries[0].1, Complex64::new(1.0, 0.0));
        let zero = StepFunction::zeros(p, Side::Primal, Window::new(-1, 2).unwrap()).unwrap();
        assert_eq!(fiber(&zero, &omega).unwrap().norm_sqr(), 0.0);
        assert!(fiber(&zero, &GroupElement::parse(p, Side::Dual, "1.0").unwrap()).is_err());
    }

    #[test]
    fn synthesize_examples() {
        let p = Prime::THREE;
        let phi = instances::two_level_frame(p);
        let one = FilterSpec::constant(p, Complex64::new(1.0, 0.0));
        assert!(synthesize(&one, &phi).unwrap().max_abs_diff(&phi).unwrap() <= 1e-12);
        let zero = FilterSpec::constant(p, Complex64::new(0.0, 0.0));
        assert!(synthesize(&zero, &phi).unwrap().sup_norm() <= 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn modulated_filter_translates(phi in arb_step_function(3, -2, 2), h in arb_element_on(3, Side::Primal, -2, 0)) {
            let m = FilterSpec::from_fn(Prime::THREE, 3, |c| character(&h, &c.representative()).unwrap().conj()).unwrap();
            let f = synthesize(&m, &phi).unwrap();
            prop_assert!(f.max_abs_diff(&phi.translate(&h).unwrap()).unwrap() <= 1e-12);
        }

        #[test]
        fn bracket_is_nonnegative(f in arb_step_function(2, -3, 2)) {
            let b = bracket(&f, &f, Lattice::H).unwrap();
            prop_assert!(b.values().iter().all(|v| v.re >= 0.0 && v.im.abs() <= 1e-15));
        }

        #[test]
        fn periodization_is_homogeneous(phi in arb_step_function(2, -2, 2), c in -3.0f64..3.0) {
            let a = periodization(&phi.scale(Complex64::new(c, 0.0))).unwrap();
            let b = periodization(&phi).unwrap().scale(Complex64::new(c * c, 0.0));
            prop_assert!(a.max_abs_diff(&b).unwrap() <= 1e-12);
        }

        #[test]
        fn fiber_energy_is_periodization(phi in arb_step_function(3, -2, 1), omega in arb_element_on(3, Side::Dual, 1, 3)) {
            let p_phi = periodization(&phi).unwrap();
            let expect = p_phi.evaluate(&omega).unwrap().re;
            prop_assert!((fiber(&phi, &omega).unwrap().norm_sqr() - expect).abs() <= 1e-12);
        }

        #[test]
        fn three_spectra_agree(phi in arb_step_function(2, -2, 2)) {
            let a = spectrum(&phi).unwrap();
            let b = spectrum_via_fibers(&phi).unwrap();
            let c = restrict_to_fundamental(&energy_set(&phi).unwrap()).unwrap();
            prop_assert!(a.same_set(&b).unwrap());
            prop_assert!(a.same_set(&c).unwrap());
        }
    }
}
