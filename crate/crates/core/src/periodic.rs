//! `H⊥`-periodic subsets of `G*`, stored through their trace on `U*`.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{CosetId, GroupElement, Prime, Side, Window};
use crate::stepfn::StepFunction;
use num_complex::Complex64;

/// A union of cells of `U*` at resolution `r`, extended `H⊥`-periodically.
#[derive(Clone, PartialEq, Eq)]
pub struct PeriodicSet {
    p: Prime,
    resolution: u32,
    members: Vec<bool>,
}

impl PeriodicSet {
    pub fn empty(p: Prime, resolution: u32) -> Result<Self> {
        let n = Window::fundamental(resolution).cell_count(p)?;
        Ok(PeriodicSet { p, resolution, members: vec![false; n] })
    }

    pub fn full(p: Prime, resolution: u32) -> Result<Self> {
        let mut s = PeriodicSet::empty(p, resolution)?;
        s.members.fill(true);
        Ok(s)
    }

    pub fn from_predicate<F>(p: Prime, resolution: u32, mut keep: F) -> Result<Self>
    where
        F: FnMut(&CosetId) -> bool,
    {
        let w = Window::fundamental(resolution);
        let n = w.cell_count(p)?;
        let members = (0..n).map(|idx| keep(&CosetId::from_index(p, Side::Dual, w, idx))).collect();
        Ok(PeriodicSet { p, resolution, members })
    }

    /// Cells of an `H⊥`-periodic function on `U*` where `keep` holds.
    pub fn from_values<F>(f: &StepFunction, keep: F) -> Result<Self>
    where
        F: Fn(Complex64) -> bool,
    {
        let w = f.window();
        if f.side() != Side::Dual || w.lo != 0 {
            return Err(Error::Mismatch(format!(
                "expected a dual function on the fundamental domain, got window {w}"
            )));
        }
        Ok(PeriodicSet {
            p: f.p(),
            resolution: w.hi as u32,
            members: f.values().iter().map(|&v| keep(v)).collect(),
        })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }

    pub fn window(&self) -> Window {
        Window::fundamental(self.resolution)
    }

    /// Whether `ω` (any point of `G*`) lies in the periodic extension.
    pub fn contains(&self, omega: &GroupElement) -> bool {
        let pu = self.p.usize();
        let idx = (1..=self.resolution as i32).fold(0usize, |acc, j| acc * pu + omega.digit(j) as usize);
        self.members[idx]
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.members[idx]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&b| b)
    }

    /// Haar measure of the trace on `U*`.
    pub fn measure(&self) -> f64 {
        self.len() as f64 * self.p.powf(-(self.resolution as i32))
    }

    /// Member cells in `λ*` order.
    pub fn cells(&self) -> impl Iterator<Item = CosetId> + '_ {
        let w = self.window();
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(idx, _)| CosetId::from_index(self.p, Side::Dual, w, idx))
    }

    /// Member cells printed in the padded digit form.
    pub fn cell_strings(&self) -> Vec<String> {
        self.cells().map(|c| c.to_string()).collect()
    }

    /// Same set described at a finer resolution.
    pub fn at_resolution(&self, resolution: u32) -> Result<Self> {
        if resolution < self.resolution {
            return Err(Error::Mismatch(format!(
                "cannot coarsen a set from resolution {} to {resolution}",
                self.resolution
            )));
        }
        let repeat = self.p.pow(resolution - self.resolution);
        let n = Window::fundamental(resolution).cell_count(self.p)?;
        let members = (0..n).map(|idx| self.members[idx / repeat]).collect();
        Ok(PeriodicSet { p: self.p, resolution, members })
    }

    fn aligned(&self, other: &PeriodicSet) -> Result<(PeriodicSet, PeriodicSet)> {
        if self.p != other.p {
            return Err(Error::Mismatch(format!("p={} vs p={}", self.p, other.p)));
        }
        let r = self.resolution.max(other.resolution);
        Ok((self.at_resolution(r)?, other.at_resolution(r)?))
    }

    fn combine(&self, other: &PeriodicSet, op: fn(bool, bool) -> bool) -> Result<PeriodicSet> {
        let (mut a, b) = self.aligned(other)?;
        for (x, y) in a.members.iter_mut().zip(&b.members) {
            *x = op(*x, *y);
        }
        Ok(a)
    }

    pub fn union(&self, other: &PeriodicSet) -> Result<PeriodicSet> {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &PeriodicSet) -> Result<PeriodicSet> {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &PeriodicSet) -> Result<PeriodicSet> {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> PeriodicSet {
        PeriodicSet {
            p: self.p,
            resolution: self.resolution,
            members: self.members.iter().map(|b| !b).collect(),
        }
    }

    /// Set equality regardless of the resolution each side is stored at.
    pub fn same_set(&self, other: &PeriodicSet) -> Result<bool> {
        let (a, b) = self.aligned(other)?;
        Ok(a.members == b.members)
    }

    pub fn is_subset(&self, other: &PeriodicSet) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Indicator on `U*` with window `[0, r]`.
    pub fn indicator(&self) -> StepFunction {
        let values = self
            .members
            .iter()
            .map(|&b| Complex64::new(if b { 1.0 } else { 0.0 }, 0.0))
            .collect();
        StepFunction::from_values(self.p, Side::Dual, self.window(), values)
            .expect("window built from the stored table")
    }
}

impl fmt::Debug for PeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodicSet(p={}, r={}, {:?})", self.p, self.resolution, self.cell_strings())
    }
}
