//! Step functions on `G` and `G*`.
//!
//! A [`StepFunction`] on the window `[lo, hi]` vanishes outside the ball
//! `U_lo` and is constant on the cosets of `U_hi`. The coefficients are kept
//! in a dense table indexed like [`CosetId::index`], so the `t`-th entry is
//! the value on the cell whose representative has `λ = t · p^(-hi)`.
//!
//! ```
//! use vilenkin::{GroupElement, Prime, Side, StepFunction};
//!
//! let p = Prime::new(3).unwrap();
//! let f = StepFunction::ball(p, Side::Primal, 0);
//! let x = GroupElement::parse(p, Side::Primal, "0.21").unwrap();
//! assert_eq!(f.evaluate(&x).unwrap().re, 1.0);
//! assert!((f.dilate(1).norm() - 1.0).abs() < 1e-12);
//! ```

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{root_of_unity, CosetId, GroupElement, Prime, Side, Window};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

#[derive(Clone, Debug, PartialEq)]
pub struct StepFunction {
    p: Prime,
    side: Side,
    window: Window,
    values: Vec<Complex64>,
}

impl StepFunction {
    pub fn zeros(p: Prime, side: Side, window: Window) -> Result<Self> {
        let n = window.cell_count(p)?;
        Ok(StepFunction { p, side, window, values: vec![ZERO; n] })
    }

    /// Takes ownership of a full coefficient table in cell-index order.
    pub fn from_values(p: Prime, side: Side, window: Window, values: Vec<Complex64>) -> Result<Self> {
        let n = window.cell_count(p)?;
        if values.len() != n {
            return Err(Error::Mismatch(format!(
                "{} coefficients for a window with {n} cells",
                values.len()
            )));
        }
        Ok(StepFunction { p, side, window, values })
    }

    /// Samples `f` at the representative of every cell.
    pub fn from_fn<F>(p: Prime, side: Side, window: Window, mut f: F) -> Result<Self>
    where
        F: FnMut(&CosetId) -> Complex64,
    {
        let n = window.cell_count(p)?;
        let values = (0..n)
            .map(|idx| f(&CosetId::from_index(p, side, window, idx)))
            .collect();
        Ok(StepFunction { p, side, window, values })
    }

    /// The indicator of a single cell.
    pub fn indicator(cell: &CosetId) -> Result<Self> {
        let mut f = StepFunction::zeros(cell.p(), cell.side(), cell.window())?;
        f.values[cell.index()] = ONE;
        Ok(f)
    }

    /// The indicator of the ball `U_l` (or `U*_l`).
    pub fn ball(p: Prime, side: Side, l: i32) -> Self {
        StepFunction { p, side, window: Window { lo: l, hi: l }, values: vec![ONE] }
    }

    /// `W_α · 1_U` on the primal side, or `W*_α · 1_{U*}` on the dual side.
    pub fn walsh(p: Prime, side: Side, alpha: u64) -> Result<Self> {
        let mut width = 0u32;
        while (p.get() as u64).pow(width) <= alpha {
            width += 1;
        }
        StepFunction::from_fn(p, side, Window::fundamental(width), |cell| {
            crate::group::walsh(alpha, &cell.representative())
        })
    }

    #[inline]
    pub fn p(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn side(&self) -> Side {
        self.side
    }

    #[inline]
    pub fn window(&self) -> Window {
        self.window
    }

    /// Coefficients in cell-index order.
    #[inline]
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    #[inline]
    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Haar measure of one cell.
    pub fn cell_measure(&self) -> f64 {
        self.p.powf(-self.window.hi)
    }

    /// Cells paired with their coefficients, in `λ` order.
    pub fn cells(&self) -> impl Iterator<Item = (CosetId, Complex64)> + '_ {
        self.values.iter().enumerate().map(move |(idx, &v)| {
            (CosetId::from_index(self.p, self.side, self.window, idx), v)
        })
    }

    /// Coefficient of the cell with the given id, which must use this
    /// function's window.
    pub fn coefficient(&self, cell: &CosetId) -> Result<Complex64> {
        if cell.window() != self.window || cell.p() != self.p || cell.side() != self.side {
            return Err(Error::Mismatch(format!(
                "cell of window {} queried on a function of window {}",
                cell.window(),
                self.window
            )));
        }
        Ok(self.values[cell.index()])
    }

    /// Value at `x`: zero outside `U_lo`.
    pub fn evaluate(&self, x: &GroupElement) -> Result<Complex64> {
        if x.p() != self.p || x.side() != self.side {
            return Err(Error::Mismatch(format!(
                "evaluating a p={} {} function at a p={} {} point",
                self.p,
                self.side,
                x.p(),
                x.side()
            )));
        }
        Ok(self.value_at(x))
    }

    pub(crate) fn value_at(&self, x: &GroupElement) -> Complex64 {
        self.index_of(x).map_or(ZERO, |idx| self.values[idx])
    }

    /// Cell index of `x` if it lies in `U_lo`.
    pub(crate) fn index_of(&self, x: &GroupElement) -> Option<usize> {
        if !x.in_ball(self.window.lo) {
            return None;
        }
        let p = self.p.usize();
        Some((self.window.lo + 1..=self.window.hi).fold(0usize, |acc, j| acc * p + x.digit(j) as usize))
    }

    /// Re-expresses the function on a window containing its own.
    pub fn refine(&self, window: Window) -> Result<StepFunction> {
        if !window.contains(&self.window) {
            return Err(Error::Mismatch(format!(
                "window {} does not contain {}",
                window, self.window
            )));
        }
        if window == self.window {
            return Ok(self.clone());
        }
        let n = window.cell_count(self.p)?;
        let inside = self.p.pow((window.hi - self.window.lo) as u32);
        let repeat = self.p.pow((window.hi - self.window.hi) as u32);
        let mut values = vec![ZERO; n];
        for (idx, v) in values.iter_mut().enumerate().take(inside) {
            *v = self.values[idx / repeat];
        }
        Ok(StepFunction { p: self.p, side: self.side, window, values })
    }

    fn check_same_space(&self, other: &StepFunction) -> Result<()> {
        if self.p != other.p || self.side != other.side {
            return Err(Error::Mismatch(format!(
                "p={} {} vs p={} {}",
                self.p, self.side, other.p, other.side
            )));
        }
        Ok(())
    }

    /// Both functions re-expressed on the hull of their windows.
    pub fn window_align(&self, other: &StepFunction) -> Result<(StepFunction, StepFunction)> {
        self.check_same_space(other)?;
        let w = self.window.hull(&other.window);
        Ok((self.refine(w)?, other.refine(w)?))
    }

    fn zip_with<F>(&self, other: &StepFunction, op: F) -> Result<StepFunction>
    where
        F: Fn(Complex64, Complex64) -> Complex64,
    {
        let (mut a, b) = self.window_align(other)?;
        for (x, y) in a.values.iter_mut().zip(&b.values) {
            *x = op(*x, *y);
        }
        Ok(a)
    }

    pub fn add(&self, other: &StepFunction) -> Result<StepFunction> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &StepFunction) -> Result<StepFunction> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &StepFunction) -> Result<StepFunction> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: Complex64) -> StepFunction {
        self.map(|v| v * c)
    }

    pub fn conj(&self) -> StepFunction {
        self.map(|v| v.conj())
    }

    pub fn map<F: Fn(Complex64) -> Complex64>(&self, f: F) -> StepFunction {
        StepFunction {
            p: self.p,
            side: self.side,
            window: self.window,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// `∫ f`.
    pub fn integral(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() * self.cell_measure()
    }

    /// `⟨f, g⟩ = ∫ f · conj(g)`.
    pub fn inner_product(&self, other: &StepFunction) -> Result<Complex64> {
        let (a, b) = self.window_align(other)?;
        let s: Complex64 = a.values.iter().zip(&b.values).map(|(x, y)| x * y.conj()).sum();
        Ok(s * a.cell_measure())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.cell_measure()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Largest coefficient magnitude.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `sup |f - g|` over the common refinement.
    pub fn max_abs_diff(&self, other: &StepFunction) -> Result<f64> {
        let (a, b) = self.window_align(other)?;
        Ok(a.values.iter().zip(&b.values).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max))
    }

    /// True when every coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == ZERO)
    }

    /// `T_h f(x) = f(x ⊖ h)`. The window grows downward until the ball
    /// holds `h`; `hi` is unchanged since `U_hi` is a subgroup.
    pub fn translate(&self, h: &GroupElement) -> Result<StepFunction> {
        if h.p() != self.p || h.side() != self.side {
            return Err(Error::Mismatch("translation by an element of another group".into()));
        }
        let lo = match h.lowest_index() {
            Some(k) if k - 1 < self.window.lo => k - 1,
            _ => self.window.lo,
        };
        let window = Window { lo, hi: self.window.hi };
        let mut out = StepFunction::zeros(self.p, self.side, window)?;
        let p = self.p.get() as u8;
        let shift: Vec<u8> = (lo + 1..=window.hi).map(|j| h.digit(j)).collect();
        let offset = (self.window.lo - lo) as usize;
        let mut digits = vec![0u8; window.width() as usize];
        for (idx, &v) in self.values.iter().enumerate() {
            if v == ZERO {
                continue;
            }
            // digits of the old cell, placed after the leading zeros
            let mut rest = idx;
            for t in (offset..digits.len()).rev() {
                digits[t] = (rest % p as usize) as u8;
                rest /= p as usize;
            }
            for d in digits.iter_mut().take(offset) {
                *d = 0;
            }
            let new_idx = digits
                .iter()
                .zip(&shift)
                .fold(0usize, |acc, (&d, &s)| acc * p as usize + ((d + s) % p) as usize);
            out.values[new_idx] = v;
        }
        Ok(out)
    }

    /// `f ∘ A^k` (or `f ∘ B^k` on the dual side): the table is unchanged and
    /// the window moves by `k`.
    pub fn compose_automorphism(&self, k: i32) -> StepFunction {
        StepFunction {
            p: self.p,
            side: self.side,
            window: self.window.shifted(k),
            values: self.values.clone(),
        }
    }

    /// `𝔻^j f(x) = p^(j/2) f(A^j x)`.
    pub fn dilate(&self, j: i32) -> StepFunction {
        let c = (self.p.get() as f64).powf(j as f64 / 2.0);
        let mut out = self.compose_automorphism(j);
        for v in &mut out.values {
            *v *= c;
        }
        out
    }

    /// Multiplies by the character `x ↦ χ(x, ω)` (primal) or `ω ↦ χ(h, ω)`
    /// (dual), raised to `sign = ±1`.
    pub fn modulate(&self, by: &GroupElement, sign: i32) -> Result<StepFunction> {
        if by.p() != self.p || by.side() == self.side {
            return Err(Error::Mismatch("modulation needs an element of the dual group".into()));
        }
        let hi = match by.lowest_index() {
            Some(k) => self.window.hi.max(1 - k),
            None => self.window.hi,
        };
        let mut out = self.refine(Window { lo: self.window.lo, hi })?;
        let p = self.p.get();
        let w = out.window;
        for (idx, v) in out.values.iter_mut().enumerate() {
            if *v == ZERO {
                continue;
            }
            // digit j of the cell pairs with digit 1 - j of the modulator
            let mut e = 0u32;
            for j in w.lo + 1..=w.hi {
                e += w.digit_of(self.p, idx, j) as u32 * by.digit(1 - j) as u32;
            }
            let e = if sign >= 0 { e % p } else { (p - e % p) % p };
            *v *= root_of_unity(self.p, e);
        }
        Ok(out)
    }

    /// Drops trailing resolution and leading support that carry no
    /// information: the result evaluates identically everywhere.
    pub fn trimmed(&self) -> StepFunction {
        let mut f = self.clone();
        let p = self.p.usize();
        while f.window.hi > f.window.lo
            && f.values.chunks(p).all(|c| c.iter().all(|v| *v == c[0]))
        {
            f.values = f.values.chunks(p).map(|c| c[0]).collect();
            f.window.hi -= 1;
        }
        while f.window.hi > f.window.lo {
            let inner = f.values.len() / p;
            if f.values[inner..].iter().any(|v| *v != ZERO) {
                break;
            }
            f.values.truncate(inner);
            f.window.lo += 1;
        }
        f
    }
}
