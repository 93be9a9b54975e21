//! Frame wavelet on the Cantor dyadic group (`p = 2`).
//!
//! With `σ = B^{-1}` and the lattice `Λ = H⊥` split into
//! `Λ₁ = {n : n₀ = 0}` and its complement, the fiber of `V̂₁` over `ω ∈ U*`
//! is spanned by the even and odd parts of `a^ω(n) = φ̂(σ(ω + n))`. Their
//! squared norms are `P_φ(σω)` and `P_φ(σω ⊕ 0.1)`, which sort the cells of
//! `U*` into `Δ₂` (both nonzero), `Δ₁` (exactly one) and the rest. A single
//! wavelet generates the complement `W₀` of `V₀` in `V₁` unless the filter
//! vanishes at both `σω` and `σω ⊕ 0.1` on a part of `Δ₂`: the blocked set.
//!
//! ```
//! use vilenkin::{instances, shift_invariant, wavelet, Prime};
//!
//! let phi = instances::haar(Prime::TWO);
//! let m = vilenkin::fmra::minimal_filter(&phi, &phi, 1).unwrap();
//! let frame = shift_invariant::frame_report(&phi).unwrap();
//! let cert = wavelet::construct_wavelet(&phi, &m, (frame.lower, frame.upper)).unwrap();
//! assert!(cert.passed);
//! assert_eq!(cert.output_bounds, (1.0, 1.0));
//! ```

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::filter::FilterSpec;
use crate::fmra::refinement_residual;
use crate::group::{CosetId, GroupElement, Prime, Side, Window};
use crate::periodic::PeriodicSet;
use crate::shift_invariant::periodization_of_transform;
use crate::stepfn::StepFunction;
use crate::tol::{self, negligible};
use crate::transform::{fourier, inverse_fourier};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Per-cell data shared by every check, sampled at the working resolution.
struct Dyadic {
    phi_hat: StepFunction,
    p_phi: FilterSpec,
    m: FilterSpec,
    resolution: u32,
    /// Lowest lattice digit index that can reach the support of `φ̂ ∘ σ`.
    lattice_lo: i32,
    cells: Vec<CellData>,
}

#[derive(Clone, Copy)]
struct CellData {
    /// `P_φ(ω)`.
    here: f64,
    /// `P_φ(σω)`, the squared norm of the even part.
    even: f64,
    /// `P_φ(σω ⊕ 0.1)`, the squared norm of the odd part.
    odd: f64,
    m_even: Complex64,
    m_odd: Complex64,
}

impl CellData {
    fn dim_v1(&self) -> u8 {
        (!negligible(self.even)) as u8 + (!negligible(self.odd)) as u8
    }

    fn in_v0(&self) -> bool {
        !negligible(self.here)
    }

    fn blocked(&self) -> bool {
        self.dim_v1() == 2 && negligible(self.m_even.norm_sqr()) && negligible(self.m_odd.norm_sqr())
    }
}

fn sigma(omega: &GroupElement) -> GroupElement {
    omega.shift(-1)
}

fn odd_point(omega: &GroupElement) -> GroupElement {
    let s = sigma(omega);
    s.with_digit(1, (s.digit(1) + 1) % 2)
}

impl Dyadic {
    fn new(phi: &StepFunction, m: &FilterSpec) -> Result<Dyadic> {
        if phi.p() != Prime::TWO {
            return Err(Error::RequiresDyadic(phi.p().get()));
        }
        if m.p() != Prime::TWO {
            return Err(Error::RequiresDyadic(m.p().get()));
        }
        let phi_hat = fourier(phi)?;
        let p_table = periodization_of_transform(&phi_hat)?;
        let r_p = p_table.window().hi as u32;
        let p_phi = FilterSpec::new(p_table)?;
        let resolution = r_p.max(m.resolution()).max(1);
        let w = Window::fundamental(resolution);
        let cells = (0..Prime::TWO.pow(resolution))
            .map(|idx| {
                let omega = CosetId::from_index(Prime::TWO, Side::Dual, w, idx).representative();
                let (s, t) = (sigma(&omega), odd_point(&omega));
                CellData {
                    here: p_phi.eval(&omega).re,
                    even: p_phi.eval(&s).re,
                    odd: p_phi.eval(&t).re,
                    m_even: m.eval(&s),
                    m_odd: m.eval(&t),
                }
            })
            .collect();
        let lattice_lo = (phi_hat.window().lo - 1).min(-1);
        Ok(Dyadic { phi_hat, p_phi, m: m.clone(), resolution, lattice_lo, cells })
    }

    fn window(&self) -> Window {
        Window::fundamental(self.resolution)
    }

    fn set<F: Fn(&CellData) -> bool>(&self, keep: F) -> PeriodicSet {
        PeriodicSet::from_predicate(Prime::TWO, self.resolution, |c| keep(&self.cells[c.index()]))
            .expect("resolution already validated")
    }

    fn cell_of(&self, omega: &GroupElement) -> &CellData {
        let idx = (1..=self.resolution as i32).fold(0usize, |acc, j| acc * 2 + omega.digit(j) as usize);
        &self.cells[idx]
    }

    fn lattice(&self) -> Vec<GroupElement> {
        let w = Window { lo: self.lattice_lo, hi: 0 };
        (0..Prime::TWO.pow(w.width()))
            .map(|idx| CosetId::from_index(Prime::TWO, Side::Dual, w, idx).representative())
            .collect()
    }

    fn require_refinable(&self) -> Result<()> {
        let residual = refinement_residual(&self.phi_hat, &self.m)?;
        if residual > tol::CHAINED {
            return Err(Error::Precondition(format!(
                "the filter does not refine the generator (residual {residual:e})"
            )));
        }
        Ok(())
    }

    fn deltas(&self) -> DeltaReport {
        DeltaReport {
            delta2: self.set(|c| c.dim_v1() == 2),
            delta1: self.set(|c| c.dim_v1() == 1),
            eta_v0: self.set(CellData::in_v0),
            blocked: None,
            blocked_measure: None,
            dims: self.cells.iter().map(CellData::dim_v1).collect(),
        }
    }

    /// `ψ̂(ξ)` from the case split on the region of `ξ`'s fractional part.
    fn psi_hat_case_split(&self) -> Result<StepFunction> {
        let w = Window { lo: self.lattice_lo, hi: self.resolution as i32 };
        StepFunction::from_fn(Prime::TWO, Side::Dual, w, |cell| {
            let xi = cell.representative();
            let data = self.cell_of(&xi);
            let base = self.phi_hat.value_at(&sigma(&xi));
            if data.dim_v1() == 2 {
                if xi.digit(0) == 0 {
                    data.m_odd.conj() * data.odd * base
                } else {
                    -data.m_even.conj() * data.even * base
                }
            } else if data.dim_v1() == 1 && !data.in_v0() {
                base
            } else {
                ZERO
            }
        })
    }

    /// High-pass filter `M` with `ψ̂(Bν) = M(ν) φ̂(ν)`.
    fn high_pass(&self) -> Result<FilterSpec> {
        FilterSpec::from_fn(Prime::TWO, self.resolution + 1, |cell| {
            let nu = cell.representative();
            let data = self.cell_of(&nu.shift(1));
            if data.dim_v1() == 2 {
                let flip = nu.with_digit(1, (nu.digit(1) + 1) % 2);
                let sign = if nu.digit(1) == 0 { 1.0 } else { -1.0 };
                self.m.eval(&flip).conj() * self.p_phi.eval(&flip).re * sign
            } else if data.dim_v1() == 1 && !data.in_v0() {
                Complex64::new(1.0, 0.0)
            } else {
                ZERO
            }
        })
    }
}

/// The even/odd splitting of the fiber of `V̂₁` over one point.
#[derive(Clone, Debug)]
pub struct FiberDecomposition {
    pub base: GroupElement,
    /// Lattice points `n`, in the order of the vectors below.
    pub lattice: Vec<GroupElement>,
    pub a: Vec<Complex64>,
    pub a_even: Vec<Complex64>,
    pub a_odd: Vec<Complex64>,
    /// `a_even − a_odd`.
    pub b: Vec<Complex64>,
    /// `m(σ(ω+n)) φ̂(σ(ω+n))`, the fiber of `V̂₀`.
    pub c: Vec<Complex64>,
    pub m_even: Complex64,
    pub m_odd: Complex64,
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

fn norm_sqr(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum()
}

/// Rank of the span of two vectors.
pub fn rank2(a: &[Complex64], b: &[Complex64]) -> u8 {
    let (na, nb) = (norm_sqr(a), norm_sqr(b));
    match (negligible(na), negligible(nb)) {
        (true, true) => 0,
        (true, false) | (false, true) => 1,
        (false, false) => {
            let gram = na * nb - dot(a, b).norm_sqr();
            if gram <= tol::SUPPORT * na * nb {
                1
            } else {
                2
            }
        }
    }
}

impl FiberDecomposition {
    /// `sup |a − a_e − a_o|` plus `|⟨a_e, a_o⟩|`.
    pub fn invariant_residual(&self) -> f64 {
        let split = self
            .a
            .iter()
            .zip(&self.a_even)
            .zip(&self.a_odd)
            .map(|((a, e), o)| (a - e - o).norm())
            .fold(0.0, f64::max);
        split + dot(&self.a_even, &self.a_odd).norm()
    }

    /// Whether `{a, b}` and `{a_e, a_o}` span spaces of the same dimension.
    pub fn spans_agree(&self) -> bool {
        rank2(&self.a, &self.b) == rank2(&self.a_even, &self.a_odd)
    }

    pub fn dim(&self) -> u8 {
        rank2(&self.a_even, &self.a_odd)
    }
}

pub fn fiber_decomposition(phi: &StepFunction, m: &FilterSpec, omega: &GroupElement) -> Result<FiberDecomposition> {
    let ctx = Dyadic::new(phi, m)?;
    decompose(&ctx, omega)
}

fn decompose(ctx: &Dyadic, omega: &GroupElement) -> Result<FiberDecomposition> {
    if omega.p() != Prime::TWO || omega.side() != Side::Dual || !omega.in_ball(0) {
        return Err(Error::Precondition(format!("fiber base {omega:?} is not a point of U*")));
    }
    let lattice = ctx.lattice();
    let mut out = FiberDecomposition {
        base: omega.clone(),
        lattice: lattice.clone(),
        a: Vec::with_capacity(lattice.len()),
        a_even: Vec::with_capacity(lattice.len()),
        a_odd: Vec::with_capacity(lattice.len()),
        b: Vec::with_capacity(lattice.len()),
        c: Vec::with_capacity(lattice.len()),
        m_even: ctx.m.eval(&sigma(omega)),
        m_odd: ctx.m.eval(&odd_point(omega)),
    };
    for n in &lattice {
        let point = sigma(&(omega + n));
        let a = ctx.phi_hat.value_at(&point);
        let even = n.digit(0) == 0;
        out.a.push(a);
        out.a_even.push(if even { a } else { ZERO });
        out.a_odd.push(if even { ZERO } else { a });
        out.b.push(if even { a } else { -a });
        out.c.push(ctx.m.eval(&point) * a);
    }
    Ok(out)
}

/// The sets `Δ₂`, `Δ₁`, `η(V₀)` and, when known, the blocked set.
#[derive(Clone, Debug)]
pub struct DeltaReport {
    pub delta2: PeriodicSet,
    pub delta1: PeriodicSet,
    pub eta_v0: PeriodicSet,
    pub blocked: Option<PeriodicSet>,
    pub blocked_measure: Option<f64>,
    /// `dim V̂₁||ω` per cell of `U*`, in `λ*` order.
    pub dims: Vec<u8>,
}

impl DeltaReport {
    /// `Δ₁ ∖ η(V₀)`, where the wavelet copies `φ̂ ∘ σ`.
    pub fn delta1_outside_v0(&self) -> PeriodicSet {
        self.delta1.difference(&self.eta_v0).expect("same group")
    }

    /// `Δ₂ ∪ (Δ₁ ∖ η(V₀))`, the expected spectrum of `W₀`.
    pub fn expected_w0(&self) -> PeriodicSet {
        self.delta2.union(&self.delta1_outside_v0()).expect("same group")
    }
}

/// `Δ₂`, `Δ₁` and `η(V₀)` of a binary generator.
pub fn delta_sets(phi: &StepFunction) -> Result<DeltaReport> {
    let any = FilterSpec::constant(Prime::TWO, ZERO);
    let ctx = Dyadic::new(phi, &any)?;
    Ok(ctx.deltas())
}

/// `E = {ω ∈ Δ₂ : m(σω) = m(σω ⊕ 0.1) = 0}` and its measure.
pub fn blocked_set(phi: &StepFunction, m: &FilterSpec) -> Result<(PeriodicSet, f64)> {
    let ctx = Dyadic::new(phi, m)?;
    ctx.require_refinable()?;
    let e = ctx.set(CellData::blocked);
    let measure = e.measure();
    Ok((e, measure))
}

/// Regionwise bounds of `P_ψ`.
#[derive(Clone, Debug, Serialize)]
pub struct FrameCheck {
    /// `(min, max)` of `P_ψ` over `Δ₂`.
    pub delta2_range: Option<(f64, f64)>,
    /// `(min, max)` of `P_ψ` over `Δ₁ ∖ η(V₀)`.
    pub delta1_range: Option<(f64, f64)>,
    /// `max P_ψ` over the remaining cells.
    pub outside_max: f64,
    /// Cells where `P_ψ` leaves its allowed range.
    pub violations: Vec<String>,
    /// `η(W₀) = Δ₂ ∪ (Δ₁ ∖ η(V₀))` cell by cell.
    pub support_matches: bool,
    pub passed: bool,
}

fn range(values: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    values.fold(None, |acc, v| match acc {
        None => Some((v, v)),
        Some((lo, hi)) => Some((lo.min(v), hi.max(v))),
    })
}

/// Checks `𝒞³ ≤ P_ψ ≤ 𝒟³` on `Δ₂`, `𝒞 ≤ P_ψ ≤ 𝒟` on `Δ₁ ∖ η(V₀)` and
/// `P_ψ = 0` elsewhere.
pub fn wavelet_frame_check(
    phi: &StepFunction,
    m: &FilterSpec,
    psi: &StepFunction,
    bounds: (f64, f64),
) -> Result<FrameCheck> {
    let ctx = Dyadic::new(phi, m)?;
    frame_check(&ctx, &fourier(psi)?, bounds)
}

fn frame_check(ctx: &Dyadic, psi_hat: &StepFunction, (c, d): (f64, f64)) -> Result<FrameCheck> {
    let p_psi = FilterSpec::new(periodization_of_transform(psi_hat)?)?;
    let w = ctx.window();
    let slack = tol::CHAINED;
    let mut violations = Vec::new();
    let (mut d2, mut d1, mut outside_max) = (Vec::new(), Vec::new(), 0.0f64);
    let mut support_matches = true;
    for (idx, data) in ctx.cells.iter().enumerate() {
        let cell = CosetId::from_index(Prime::TWO, Side::Dual, w, idx);
        let value = p_psi.eval(&cell.representative()).re;
        let (lo, hi, expect_support) = if data.dim_v1() == 2 {
            d2.push(value);
            (c.powi(3), d.powi(3), true)
        } else if data.dim_v1() == 1 && !data.in_v0() {
            d1.push(value);
            (c, d, true)
        } else {
            outside_max = outside_max.max(value);
            (0.0, 0.0, false)
        };
        if value < lo - slack || value > hi + slack {
            violations.push(cell.to_string());
        }
        if expect_support == negligible(value) {
            support_matches = false;
        }
    }
    let passed = violations.is_empty() && support_matches;
    Ok(FrameCheck {
        delta2_range: range(d2.into_iter()),
        delta1_range: range(d1.into_iter()),
        outside_max,
        violations,
        support_matches,
        passed,
    })
}

/// Orthogonality of `ψ̂||ω` to the fiber of `V̂₀` and the dimension count
/// `dim V̂₁||ω = dim V̂₀||ω + dim Ŵ₀||ω`.
#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityCheck {
    /// `max_ω |⟨c^ω, ψ̂||ω⟩|`.
    pub residual: f64,
    /// Cells where the dimensions do not add up.
    pub dimension_mismatches: Vec<String>,
    /// Cells where `span{c^ω, ψ̂||ω}` differs in dimension from `V̂₁||ω`.
    pub span_mismatches: Vec<String>,
}

impl OrthogonalityCheck {
    pub fn passed(&self) -> bool {
        self.residual <= tol::EXACT && self.dimension_mismatches.is_empty() && self.span_mismatches.is_empty()
    }
}

pub fn fiber_orthogonality_check(phi: &StepFunction, m: &FilterSpec, psi: &StepFunction) -> Result<OrthogonalityCheck> {
    let ctx = Dyadic::new(phi, m)?;
    orthogonality(&ctx, &fourier(psi)?)
}

fn orthogonality(ctx: &Dyadic, psi_hat: &StepFunction) -> Result<OrthogonalityCheck> {
    let w = ctx.window();
    let mut out = OrthogonalityCheck { residual: 0.0, dimension_mismatches: Vec::new(), span_mismatches: Vec::new() };
    for idx in 0..ctx.cells.len() {
        let cell = CosetId::from_index(Prime::TWO, Side::Dual, w, idx);
        let omega = cell.representative();
        let fib = decompose(ctx, &omega)?;
        let psi: Vec<Complex64> = fib.lattice.iter().map(|n| psi_hat.value_at(&(&omega + n))).collect();
        out.residual = out.residual.max(dot(&fib.c, &psi).norm());
        let dim_v1 = fib.dim();
        let dim_v0 = (!negligible(norm_sqr(&fib.c))) as u8;
        let dim_w0 = (!negligible(norm_sqr(&psi))) as u8;
        if dim_v1 != dim_v0 + dim_w0 {
            out.dimension_mismatches.push(cell.to_string());
        }
        if rank2(&fib.c, &psi) != dim_v1 {
            out.span_mismatches.push(cell.to_string());
        }
    }
    Ok(out)
}

/// Everything produced by [`construct_wavelet`].
#[derive(Clone, Debug)]
pub struct WaveletCertificate {
    pub psi: StepFunction,
    pub psi_hat: StepFunction,
    /// `M` with `ψ̂(Bν) = M(ν) φ̂(ν)`; the filter `m_ψ` with
    /// `ψ̂ = m_ψ · φ̂ ∘ σ` is `M ∘ σ`.
    pub high_pass: FilterSpec,
    pub input_bounds: (f64, f64),
    /// `(min(𝒞, 𝒞³), max(𝒟, 𝒟³))`.
    pub output_bounds: (f64, f64),
    pub deltas: DeltaReport,
    pub frame: FrameCheck,
    pub orthogonality: OrthogonalityCheck,
    /// `sup |ψ̂ − (M ∘ σ)(φ̂ ∘ σ)|`: the case-split and one-line formulas.
    pub unified_residual: f64,
    pub passed: bool,
}

/// Builds the wavelet `ψ` of `W₀ = V₁ ⊖ V₀` and certifies its frame bounds.
///
/// `bounds` are the frame bounds `(𝒞, 𝒟)` of the translates of `φ`.
pub fn construct_wavelet(phi: &StepFunction, m: &FilterSpec, bounds: (f64, f64)) -> Result<WaveletCertificate> {
    let ctx = Dyadic::new(phi, m)?;
    ctx.require_refinable()?;
    let blocked = ctx.set(CellData::blocked);
    if !blocked.is_empty() {
        return Err(Error::Blocked { measure: blocked.measure(), cells: blocked.cell_strings() });
    }
    let mut deltas = ctx.deltas();
    deltas.blocked_measure = Some(0.0);
    deltas.blocked = Some(blocked);

    let psi_hat = ctx.psi_hat_case_split()?;
    let high_pass = ctx.high_pass()?;
    let unified = high_pass.apply(&ctx.phi_hat)?.compose_automorphism(-1);
    let unified_residual = psi_hat.max_abs_diff(&unified)?;

    let frame = frame_check(&ctx, &psi_hat, bounds)?;
    let orthogonality = orthogonality(&ctx, &psi_hat)?;
    let (c, d) = bounds;
    let output_bounds = (c.min(c.powi(3)), d.max(d.powi(3)));
    let passed = frame.passed && orthogonality.passed() && unified_residual <= tol::EXACT;
    let psi = inverse_fourier(&psi_hat)?.trimmed();
    Ok(WaveletCertificate {
        psi,
        psi_hat,
        high_pass,
        input_bounds: bounds,
        output_bounds,
        deltas,
        frame,
        orthogonality,
        unified_residual,
        passed,
    })
}

/// The two equivalent conditions for a single wavelet, evaluated on `Δ₂`.
#[derive(Clone, Debug, Serialize)]
pub struct ExistenceReport {
    /// (i) `m(σω)` and `m(σω ⊕ 0.1)` are not both zero on `Δ₂`.
    pub condition_i: bool,
    /// (ii) `𝒞/𝒟 ≤ |m(σω)|² + |m(σω ⊕ 0.1)|² ≤ 𝒟/𝒞` on `Δ₂`.
    pub condition_ii: bool,
    pub failing_i: Vec<String>,
    pub failing_ii: Vec<String>,
    /// Both conditions fail on exactly the same cells.
    pub equivalent: bool,
    /// `(min, max)` of `|m(σω)|² + |m(σω ⊕ 0.1)|²` over `Δ₂`.
    pub band: Option<(f64, f64)>,
    /// `sup |P_φ(ω) − |m(σω)|² P_φ(σω) − |m(σω ⊕ 0.1)|² P_φ(σω ⊕ 0.1)|`.
    pub energy_split_residual: f64,
    /// `P_φ` lies in `[𝒞, 𝒟]` on every cell of `Δ₂`.
    pub delta2_in_bounds: bool,
    /// Condition (i) for the filter changed to `1` off the spectrum.
    pub alternative_condition_i: bool,
    /// Refinement residual of that alternative filter.
    pub alternative_refinement_residual: f64,
}

pub fn existence_conditions(phi: &StepFunction, m: &FilterSpec, bounds: (f64, f64)) -> Result<ExistenceReport> {
    let ctx = Dyadic::new(phi, m)?;
    let (c, d) = bounds;
    let (band_lo, band_hi) = if c > 0.0 { (c / d, d / c) } else { (0.0, f64::INFINITY) };
    let w = ctx.window();
    let mut failing_i = Vec::new();
    let mut failing_ii = Vec::new();
    let mut sums = Vec::new();
    let mut energy_split_residual = 0.0f64;
    let mut delta2_in_bounds = true;
    for (idx, data) in ctx.cells.iter().enumerate() {
        let split = data.m_even.norm_sqr() * data.even + data.m_odd.norm_sqr() * data.odd;
        energy_split_residual = energy_split_residual.max((data.here - split).abs());
        if data.dim_v1() != 2 {
            continue;
        }
        let name = || CosetId::from_index(Prime::TWO, Side::Dual, w, idx).to_string();
        if data.blocked() {
            failing_i.push(name());
        }
        let s = data.m_even.norm_sqr() + data.m_odd.norm_sqr();
        sums.push(s);
        if s < band_lo - tol::EXACT || s > band_hi + tol::EXACT {
            failing_ii.push(name());
        }
        if data.here < c - tol::EXACT || data.here > d + tol::EXACT {
            delta2_in_bounds = false;
        }
    }

    let off_spectrum = FilterSpec::new(ctx.p_phi.table().map(|v| {
        Complex64::new(if negligible(v.re) { 1.0 } else { 0.0 }, 0.0)
    }))?;
    let alternative = {
        let (a, b) = m.table().window_align(off_spectrum.table())?;
        FilterSpec::new(a.add(&b)?)?
    };
    let alt_ctx = Dyadic::new(phi, &alternative)?;
    let alternative_refinement_residual = refinement_residual(&alt_ctx.phi_hat, &alternative)?;
    let alternative_condition_i = !alt_ctx.cells.iter().any(CellData::blocked);

    Ok(ExistenceReport {
        condition_i: failing_i.is_empty(),
        condition_ii: failing_ii.is_empty(),
        equivalent: failing_i == failing_ii,
        failing_i,
        failing_ii,
        band: range(sums.into_iter()),
        energy_split_residual,
        delta2_in_bounds,
        alternative_condition_i,
        alternative_refinement_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fmra::minimal_filter;
    use crate::instances;
    use crate::shift_invariant::frame_report;

    fn setup(phi: &StepFunction) -> (FilterSpec, (f64, f64)) {
        let m = minimal_filter(phi, phi, 1).unwrap();
        let r = frame_report(phi).unwrap();
        (m, (r.lower, r.upper))
    }

    fn zero_phi() -> StepFunction {
        StepFunction::zeros(Prime::TWO, Side::Primal, Window::new(0, 0).unwrap()).unwrap()
    }

    #[test]
    fn requires_binary_group() {
        let phi = instances::haar(Prime::THREE);
        let m = FilterSpec::constant(Prime::THREE, Complex64::new(1.0, 0.0));
        assert_eq!(delta_sets(&phi).unwrap_err(), Error::RequiresDyadic(3));
        assert_eq!(construct_wavelet(&phi, &m, (1.0, 1.0)).unwrap_err(), Error::RequiresDyadic(3));
    }

    #[test]
    fn haar_fibers() {
        let phi = instances::haar(Prime::TWO);
        let (m, _) = setup(&phi);
        for s in ["0.0", "0.1", "0.01", "0.11"] {
            let omega = GroupElement::parse(Prime::TWO, Side::Dual, s).unwrap();
            let fib = fiber_decomposition(&phi, &m, &omega).unwrap();
            let nonzero: Vec<String> = fib
                .lattice
                .iter()
                .zip(&fib.a)
                .filter(|(_, v)| v.norm() > 0.0)
                .map(|(n, _)| n.to_string())
                .collect();
            assert_eq!(nonzero, vec!["0.0", "1.0"]);
            assert_eq!(fib.invariant_residual(), 0.0);
            assert!(fib.spans_agree());
            assert_eq!(fib.dim(), 2);
        }
    }

    #[test]
    fn half_band_fibers_have_no_odd_part() {
        let phi = instances::half_band(Prime::TWO);
        let (m, _) = setup(&phi);
        for s in ["0.0", "0.1", "0.01", "0.11"] {
            let omega = GroupElement::parse(Prime::TWO, Side::Dual, s).unwrap();
            let fib = fiber_decomposition(&phi, &m, &omega).unwrap();
            assert!(fib.a_odd.iter().all(|v| v.norm() == 0.0));
            assert!(fib.spans_agree());
        }
    }

    #[test]
    fn zero_generator_fibers() {
        let m = FilterSpec::constant(Prime::TWO, Complex64::new(1.0, 0.0));
        let omega = GroupElement::parse(Prime::TWO, Side::Dual, "0.1").unwrap();
        let fib = fiber_decomposition(&zero_phi(), &m, &omega).unwrap();
        assert!(fib.a.iter().chain(&fib.c).all(|v| v.norm() == 0.0));
        let deltas = delta_sets(&zero_phi()).unwrap();
        assert!(deltas.delta2.is_empty() && deltas.delta1.is_empty());
    }

    #[test]
    fn delta_examples() {
        let haar = delta_sets(&instances::haar(Prime::TWO)).unwrap();
        assert!(haar.delta2.is_full() && haar.delta1.is_empty());
        let half = delta_sets(&instances::half_band(Prime::TWO)).unwrap();
        assert!(half.delta2.is_empty() && half.delta1.is_full());
    }

    #[test]
    fn blocked_examples() {
        let phi = instances::haar(Prime::TWO);
        let (m, _) = setup(&phi);
        assert_eq!(blocked_set(&phi, &m).unwrap().1, 0.0);
        let half = instances::half_band(Prime::TWO);
        let (m, _) = setup(&half);
        assert!(blocked_set(&half, &m).unwrap().0.is_empty());
        let (phi, m) = instances::blocked_pair();
        let (e, measure) = blocked_set(&phi, &m).unwrap();
        assert_eq!(measure, 0.25);
        assert!(e.same_set(&PeriodicSet::from_predicate(Prime::TWO, 2, |c| c.index() == 2).unwrap()).unwrap());
        let not_refining = FilterSpec::constant(Prime::TWO, Complex64::new(1.0, 0.0));
        assert!(matches!(blocked_set(&instances::haar(Prime::TWO), &not_refining), Err(Error::Precondition(_))));
    }

    #[test]
    fn haar_wavelet() {
        let phi = instances::haar(Prime::TWO);
        let (m, bounds) = setup(&phi);
        let cert = construct_wavelet(&phi, &m, bounds).unwrap();
        assert!(cert.passed, "{cert:?}");
        assert_eq!(cert.frame.delta2_range, Some((1.0, 1.0)));
        assert_eq!(cert.output_bounds, (1.0, 1.0));
        // ψ̂ = −1 on 1.0 ⊕ U*: ψ is −W_1 on U up to the unimodular factor
        let expect = StepFunction::walsh(Prime::TWO, Side::Primal, 1).unwrap().scale(Complex64::new(-1.0, 0.0));
        assert!(cert.psi.max_abs_diff(&expect).unwrap() <= 1e-15);
        assert!((cert.psi.norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn half_band_wavelet_is_shannon_type() {
        let phi = instances::half_band(Prime::TWO);
        let (m, bounds) = setup(&phi);
        let cert = construct_wavelet(&phi, &m, bounds).unwrap();
        assert!(cert.passed, "{cert:?}");
        let expect = StepFunction::ball(Prime::TWO, Side::Dual, 0)
            .sub(&StepFunction::ball(Prime::TWO, Side::Dual, 1))
            .unwrap();
        assert!(cert.psi_hat.max_abs_diff(&expect).unwrap() <= 1e-15);
        assert_eq!(cert.frame.delta2_range, None);
        assert_eq!(cert.frame.delta1_range, Some((1.0, 1.0)));
        assert_eq!(cert.frame.outside_max, 0.0);
    }

    #[test]
    fn zero_generator_gives_zero_wavelet() {
        let m = FilterSpec::constant(Prime::TWO, Complex64::new(0.0, 0.0));
        let cert = construct_wavelet(&zero_phi(), &m, (0.0, 0.0)).unwrap();
        assert!(cert.psi.is_zero());
    }

    #[test]
    fn zero_wavelet_fails_frame_check() {
        let phi = instances::haar(Prime::TWO);
        let (m, bounds) = setup(&phi);
        let psi = StepFunction::zeros(Prime::TWO, Side::Primal, Window::new(0, 0).unwrap()).unwrap();
        let check = wavelet_frame_check(&phi, &m, &psi, bounds).unwrap();
        assert!(!check.passed && !check.violations.is_empty());
    }

    #[test]
    fn blocked_pair_cannot_build() {
        let (phi, m) = instances::blocked_pair();
        match construct_wavelet(&phi, &m, (1.0, 1.0)) {
            Err(Error::Blocked { measure, cells }) => {
                assert_eq!(measure, 0.25);
                assert_eq!(cells, vec!["0.100", "0.101"]);
            }
            other => panic!("expected a blocked set, got {other:?}"),
        }
        let report = existence_conditions(&phi, &m, (1.0, 1.0)).unwrap();
        assert!(!report.condition_i && !report.condition_ii && report.equivalent);
        assert_eq!(report.failing_i, vec!["0.100", "0.101"]);
        assert!(report.energy_split_residual <= 1e-12);
        assert!(!report.alternative_condition_i);
        assert!(report.alternative_refinement_residual <= 1e-12);
    }

    #[test]
    fn existence_examples() {
        let phi = instances::haar(Prime::TWO);
        let (m, bounds) = setup(&phi);
        let report = existence_conditions(&phi, &m, bounds).unwrap();
        assert!(report.condition_i && report.condition_ii && report.equivalent);
        assert_eq!(report.band, Some((1.0, 1.0)));
        let half = instances::half_band(Prime::TWO);
        let (m, bounds) = setup(&half);
        let report = existence_conditions(&half, &m, bounds).unwrap();
        assert!(report.condition_i && report.condition_ii && report.band.is_none());
    }

    #[test]
    fn two_level_frame_bounds() {
        let phi = instances::two_level_frame(Prime::TWO);
        let (m, bounds) = setup(&phi);
        assert_eq!(bounds, (0.25, 1.0));
        let cert = construct_wavelet(&phi, &m, bounds).unwrap();
        assert!(cert.passed, "{cert:?}");
        assert_eq!(cert.output_bounds, (0.25f64.powi(3), 1.0));
        let report = existence_conditions(&phi, &m, bounds).unwrap();
        let (lo, hi) = report.band.unwrap();
        assert!(lo >= 0.25 - 1e-12 && hi <= 4.0 + 1e-12);
    }
}
