//! Reference generators and random instances.
//!
//! The named instances are small closed-form examples; the random ones are
//! driven by any [`rand::Rng`] so tests can seed them.

use num_complex::Complex64;
use rand::Rng;

use crate::filter::FilterSpec;
use crate::group::{Prime, Side, Window};
use crate::stepfn::StepFunction;
use crate::transform::inverse_fourier;

fn from_transform(f_hat: &StepFunction) -> StepFunction {
    inverse_fourier(f_hat).expect("dual input").trimmed()
}

/// `1_U`, whose transform is `1_{U*}`.
pub fn haar(p: Prime) -> StepFunction {
    StepFunction::ball(p, Side::Primal, 0)
}

/// The generator with `φ̂ = 1_{U*_1}`, i.e. `φ = p^(-1) · 1_{U_{-1}}`.
pub fn half_band(p: Prime) -> StepFunction {
    from_transform(&StepFunction::ball(p, Side::Dual, 1))
}

/// `φ̂ = 1_{U*_1} + ½ · 1_{U* ∖ U*_1}`: a frame with bounds `1/4` and `1`.
pub fn two_level_frame(p: Prime) -> StepFunction {
    let f_hat = StepFunction::from_fn(p, Side::Dual, Window::fundamental(1), |c| {
        Complex64::new(if c.digit(1) == 0 { 1.0 } else { 0.5 }, 0.0)
    })
    .expect("one-digit window");
    from_transform(&f_hat)
}

/// A binary pair whose blocked set has measure `1/4`.
///
/// `φ̂` is the indicator of the cells `0.00`, `0.01` and `0.11` of `U*`, and
/// the filter is its minimal low-pass filter, `1` on `0.000`, `0.001` and
/// `0.011` and `0` elsewhere.
pub fn blocked_pair() -> (StepFunction, FilterSpec) {
    let p = Prime::TWO;
    let f_hat = StepFunction::from_fn(p, Side::Dual, Window::fundamental(2), |c| {
        let on = !(c.digit(1) == 1 && c.digit(2) == 0);
        Complex64::new(if on { 1.0 } else { 0.0 }, 0.0)
    })
    .expect("two-digit window");
    let m = FilterSpec::from_fn(p, 3, |c| {
        let on = matches!((c.digit(1), c.digit(2), c.digit(3)), (0, 0, _) | (0, 1, 1));
        Complex64::new(if on { 1.0 } else { 0.0 }, 0.0)
    })
    .expect("three-digit window");
    (from_transform(&f_hat), m)
}

fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// Random step function on `window`; each cell is nonzero with
/// probability `density`.
pub fn random_step_function<R: Rng + ?Sized>(
    rng: &mut R,
    p: Prime,
    side: Side,
    window: Window,
    density: f64,
) -> StepFunction {
    StepFunction::from_fn(p, side, window, |_| {
        if rng.random_bool(density) {
            random_coefficient(rng)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
    .expect("caller keeps windows small")
}

/// Random primal generator whose transform is sparse on `[lo, r]`, so the
/// spectrum is a nontrivial subset of `U*`.
pub fn random_generator<R: Rng + ?Sized>(rng: &mut R, p: Prime, lo: i32, r: u32, density: f64) -> StepFunction {
    let f_hat = random_step_function(rng, p, Side::Dual, Window::new(lo.min(0), r as i32).unwrap(), density);
    inverse_fourier(&f_hat).expect("dual input")
}

/// Random generator of a Parseval frame: every cell of `U*` at resolution
/// `r` is kept with probability `density`, moved to a random lattice
/// translate within `depth` integer digits, and given a random phase.
pub fn random_parseval<R: Rng + ?Sized>(rng: &mut R, p: Prime, r: u32, depth: u32, density: f64) -> StepFunction {
    let w = Window::new(-(depth as i32), r as i32).unwrap();
    let block = p.pow(r);
    let translates = p.pow(depth);
    let mut values = vec![Complex64::new(0.0, 0.0); block * translates];
    for cell in 0..block {
        if rng.random_bool(density) {
            let h = rng.random_range(0..translates);
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            values[h * block + cell] = Complex64::from_polar(1.0, theta);
        }
    }
    let f_hat = StepFunction::from_values(p, Side::Dual, w, values).expect("sizes agree");
    inverse_fourier(&f_hat).expect("dual input")
}

/// Random refinable generator with `φ̂` supported in `U*` and constant on
/// cells of resolution `r`.
///
/// Each cell is a zero of `φ̂` with probability `zero_density`; the zero set
/// is then closed under `ω ↦ Bω` on `{ω₁ = 0}`, which is exactly what
/// `φ̂(Bω) = m(ω) φ̂(ω)` needs. Nonzero values have modulus in `[1/2, 3/2]`.
pub fn random_refinable<R: Rng + ?Sized>(rng: &mut R, p: Prime, r: u32, zero_density: f64) -> StepFunction {
    let n = p.pow(r);
    let stride = p.pow(r.saturating_sub(1));
    let mut zero: Vec<bool> = (0..n).map(|_| rng.random_bool(zero_density)).collect();
    loop {
        let mut changed = false;
        for idx in 0..stride.min(n) {
            if zero[idx] && r > 0 {
                let base = (idx % stride) * p.usize();
                for z in &mut zero[base..base + p.usize()] {
                    changed |= !std::mem::replace(z, true);
                }
            }
        }
        if !changed {
            break;
        }
    }
    let values = zero
        .iter()
        .map(|&z| {
            if z {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::from_polar(rng.random_range(0.5..1.5), rng.random_range(0.0..std::f64::consts::TAU))
            }
        })
        .collect();
    let f_hat = StepFunction::from_values(p, Side::Dual, Window::fundamental(r), values).expect("sizes agree");
    inverse_fourier(&f_hat).expect("dual input")
}

/// Random filter at resolution `r`.
pub fn random_filter<R: Rng + ?Sized>(rng: &mut R, p: Prime, r: u32) -> FilterSpec {
    FilterSpec::from_fn(p, r, |_| random_coefficient(rng)).expect("caller keeps resolutions small")
}
