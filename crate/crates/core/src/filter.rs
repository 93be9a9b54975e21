//! `H⊥`-periodic filters on `G*`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{GroupElement, Prime, Side, Window};
use crate::stepfn::StepFunction;

/// An `H⊥`-periodic function, given by its values on `U*` at resolution `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct FilterSpec {
    table: StepFunction,
}

impl FilterSpec {
    /// Wraps a dual step function on a window `[0, r]`.
    pub fn new(table: StepFunction) -> Result<Self> {
        if table.side() != Side::Dual || table.window().lo != 0 {
            return Err(Error::Mismatch(format!(
                "a filter needs a dual table on window 0:r, got {} {}",
                table.side(),
                table.window()
            )));
        }
        Ok(FilterSpec { table })
    }

    /// Periodizes by restriction: keeps the values of `f` on `U*`.
    pub fn from_restriction(f: &StepFunction) -> Result<Self> {
        if f.side() != Side::Dual {
            return Err(Error::Mismatch("filters live on the dual group".into()));
        }
        let w = f.window();
        let r = w.hi.max(0);
        let wide = f.refine(Window { lo: w.lo.min(0), hi: r })?;
        let n = Window::fundamental(r as u32).cell_count(f.p())?;
        // cells of U* come first in the table of any window with lo <= 0
        let values = wide.values()[..n].to_vec();
        FilterSpec::new(StepFunction::from_values(f.p(), Side::Dual, Window::fundamental(r as u32), values)?)
    }

    pub fn constant(p: Prime, c: Complex64) -> Self {
        FilterSpec { table: StepFunction::ball(p, Side::Dual, 0).scale(c) }
    }

    pub fn from_fn<F>(p: Prime, resolution: u32, f: F) -> Result<Self>
    where
        F: FnMut(&crate::group::CosetId) -> Complex64,
    {
        FilterSpec::new(StepFunction::from_fn(p, Side::Dual, Window::fundamental(resolution), f)?)
    }

    pub fn p(&self) -> Prime {
        self.table.p()
    }

    pub fn resolution(&self) -> u32 {
        self.table.window().hi as u32
    }

    /// The table on `U*`.
    pub fn table(&self) -> &StepFunction {
        &self.table
    }

    /// `m(ω)` for any `ω ∈ G*`.
    pub fn eval(&self, omega: &GroupElement) -> Complex64 {
        let pu = self.p().usize();
        let idx = (1..=self.resolution() as i32).fold(0usize, |acc, j| acc * pu + omega.digit(j) as usize);
        self.table.values()[idx]
    }

    /// The periodic extension written out on `window` (with `window.lo ≤ 0`);
    /// the resolution is raised to the filter's own when needed.
    pub fn extend_to(&self, window: Window) -> Result<StepFunction> {
        if window.lo > 0 {
            return Err(Error::Mismatch(format!("window {window} does not cover U*")));
        }
        let w = Window { lo: window.lo, hi: window.hi.max(self.resolution() as i32) };
        let fine = self.table.refine(Window::fundamental(w.hi as u32))?;
        let block = fine.values().len();
        let n = w.cell_count(self.p())?;
        let values = (0..n).map(|idx| fine.values()[idx % block]).collect();
        StepFunction::from_values(self.p(), Side::Dual, w, values)
    }

    /// Pointwise product `m · F` for a dual step function `F`.
    pub fn apply(&self, f: &StepFunction) -> Result<StepFunction> {
        if f.side() != Side::Dual || f.p() != self.p() {
            return Err(Error::Mismatch("filters multiply dual functions of the same group".into()));
        }
        let w = f.window().covering_fundamental();
        self.extend_to(w)?.mul(f)
    }

    /// Same filter stored at a finer resolution.
    pub fn at_resolution(&self, r: u32) -> Result<FilterSpec> {
        Ok(FilterSpec { table: self.table.refine(Window::fundamental(r.max(self.resolution())))? })
    }

    pub fn map<F: Fn(Complex64) -> Complex64>(&self, f: F) -> FilterSpec {
        FilterSpec { table: self.table.map(f) }
    }

    /// `sup |m - n|` over `U*`.
    pub fn max_abs_diff(&self, other: &FilterSpec) -> Result<f64> {
        self.table.max_abs_diff(&other.table)
    }
}
