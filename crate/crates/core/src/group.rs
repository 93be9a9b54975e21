//! Digit-sequence model of a Vilenkin group `G` and its dual `G*`.
//!
//! An element is a sequence `(x_j)_{j ∈ ℤ}` of base-`p` digits with finitely
//! many nonzero entries; the group law is digitwise addition modulo `p`.
//! The same model serves for the dual group, so every element carries a
//! [`Side`] tag and operations refuse to mix sides.
//!
//! # Text form
//!
//! Digits at indices `j ≤ 0` are written left of the dot, most negative
//! index first; digits at indices `j ≥ 1` are written right of it. So with
//! `p = 2`, `"11.0"` has `x_{-1} = x_0 = 1` (λ = 3) and `"0.1"` has `x_1 = 1`
//! (λ = 1/2). Digits above 9 use `a..z`, which caps the modulus at 36.
//!
//! ```
//! use vilenkin::{GroupElement, Prime, Side};
//!
//! let p = Prime::new(2).unwrap();
//! let x = GroupElement::parse(p, Side::Primal, "11.0").unwrap();
//! let y = GroupElement::parse(p, Side::Primal, "1.0").unwrap();
//! assert_eq!((&x + &y).to_string(), "10.0");
//! assert_eq!(x.lambda(), 3.into());
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of cells a single step-function table may hold.
pub const MAX_CELLS: usize = 1 << 24;

const DIGIT_CHARS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A prime modulus `p` in `2..=36`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u8);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);
    pub const FIVE: Prime = Prime(5);

    pub fn new(p: u32) -> Result<Self> {
        if !(2..=36).contains(&p) || !(2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Prime(p as u8))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub(crate) fn usize(self) -> usize {
        self.0 as usize
    }

    /// `p^e` as a `usize`; callers keep `e` small enough (window widths).
    #[inline]
    pub(crate) fn pow(self, e: u32) -> usize {
        self.usize().pow(e)
    }

    /// `p^e` for any integer `e`, as a double.
    #[inline]
    pub fn powf(self, e: i32) -> f64 {
        (self.0 as f64).powi(e)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which group an element or function lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The group `G` itself.
    Primal,
    /// The dual group `G*`.
    Dual,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Primal => Side::Dual,
            Side::Dual => Side::Primal,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Primal => "primal",
            Side::Dual => "dual",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A window `[lo, hi]`: functions on it are supported in the ball `U_lo`
/// and constant on cosets of `U_hi`. Cells are indexed by the digits at
/// indices `lo < j ≤ hi`, digit `j` carrying place value `p^(hi - j)`, so
/// cell index order is `λ` order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub lo: i32,
    pub hi: i32,
}

impl Window {
    pub fn new(lo: i32, hi: i32) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidWindow { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    /// Window of the fundamental domain `U` (or `U*`) at resolution `r`.
    pub fn fundamental(resolution: u32) -> Self {
        Window { lo: 0, hi: resolution as i32 }
    }

    #[inline]
    pub fn width(&self) -> u32 {
        (self.hi - self.lo) as u32
    }

    /// Number of cells, refusing tables above [`MAX_CELLS`].
    pub fn cell_count(&self, p: Prime) -> Result<usize> {
        let cells = (p.get() as u128).checked_pow(self.width()).unwrap_or(u128::MAX);
        if cells > MAX_CELLS as u128 {
            return Err(Error::WindowTooLarge { cells });
        }
        Ok(cells as usize)
    }

    /// Smallest window containing both.
    pub fn hull(&self, other: &Window) -> Window {
        Window { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn contains(&self, other: &Window) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn shifted(&self, k: i32) -> Window {
        Window { lo: self.lo + k, hi: self.hi + k }
    }

    /// Smallest window containing this one and the fundamental domain.
    pub fn covering_fundamental(&self) -> Window {
        Window { lo: self.lo.min(0), hi: self.hi.max(0) }
    }

    /// Digit at index `j` of cell `idx`.
    #[inline]
    pub(crate) fn digit_of(&self, p: Prime, idx: usize, j: i32) -> u8 {
        debug_assert!(self.lo < j && j <= self.hi);
        ((idx / p.pow((self.hi - j) as u32)) % p.usize()) as u8
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

/// An element of `G` or `G*` with finitely many nonzero digits.
///
/// Only nonzero digits are stored, so structural equality is group equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    p: Prime,
    side: Side,
    digits: BTreeMap<i32, u8>,
}

impl GroupElement {
    pub fn zero(p: Prime, side: Side) -> Self {
        GroupElement { p, side, digits: BTreeMap::new() }
    }

    /// Builds an element from `(index, digit)` pairs; zero digits are dropped
    /// and a repeated index keeps the last digit.
    pub fn from_digits<I>(p: Prime, side: Side, digits: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i32, u32)>,
    {
        let mut map = BTreeMap::new();
        for (j, d) in digits {
            if d >= p.get() {
                return Err(Error::InvalidDigit { digit: d, p: p.get() });
            }
            if d == 0 {
                map.remove(&j);
            } else {
                map.insert(j, d as u8);
            }
        }
        Ok(GroupElement { p, side, digits: map })
    }

    /// The lattice element with `λ = alpha`: `h_[α]` on the primal side,
    /// `ω_[α]` on the dual side. Its digits are the base-`p` digits of
    /// `alpha`, the units digit at index 0.
    pub fn from_integer(p: Prime, side: Side, alpha: u64) -> Self {
        let mut digits = BTreeMap::new();
        let (mut rest, mut j) = (alpha, 0i32);
        while rest > 0 {
            let d = (rest % p.get() as u64) as u8;
            if d != 0 {
                digits.insert(j, d);
            }
            rest /= p.get() as u64;
            j -= 1;
        }
        GroupElement { p, side, digits }
    }

    /// Parses the dotted digit-string form. Padding zeros are accepted.
    pub fn parse(p: Prime, side: Side, s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 0, msg };
        let (int_part, frac_part) = match s.split_once('.') {
            Some((a, b)) if !a.is_empty() && !b.is_empty() => (a, b),
            Some(_) => return Err(bad(format!("malformed digit string {s:?}"))),
            None if !s.is_empty() => (s, ""),
            None => return Err(bad("empty digit string".into())),
        };
        let value = |c: char| -> Result<u32> {
            let d = c
                .to_digit(36)
                .ok_or_else(|| bad(format!("unexpected character {c:?} in {s:?}")))?;
            if d >= p.get() {
                return Err(Error::InvalidDigit { digit: d, p: p.get() });
            }
            Ok(d)
        };
        let n = int_part.chars().count() as i32;
        let mut pairs = Vec::with_capacity(s.len());
        for (k, c) in int_part.chars().enumerate() {
            pairs.push((k as i32 - (n - 1), value(c)?));
        }
        for (k, c) in frac_part.chars().enumerate() {
            pairs.push((k as i32 + 1, value(c)?));
        }
        GroupElement::from_digits(p, side, pairs)
    }

    #[inline]
    pub fn p(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn side(&self) -> Side {
        self.side
    }

    /// Digit at index `j` (zero when absent).
    #[inline]
    pub fn digit(&self, j: i32) -> u8 {
        self.digits.get(&j).copied().unwrap_or(0)
    }

    /// Nonzero digits in increasing index order.
    pub fn digits(&self) -> impl Iterator<Item = (i32, u8)> + '_ {
        self.digits.iter().map(|(&j, &d)| (j, d))
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// `k(x)`: the lowest index carrying a nonzero digit.
    pub fn lowest_index(&self) -> Option<i32> {
        self.digits.keys().next().copied()
    }

    pub fn highest_index(&self) -> Option<i32> {
        self.digits.keys().next_back().copied()
    }

    /// `x ∈ U_l`, i.e. every digit at an index `≤ l` vanishes.
    pub fn in_ball(&self, l: i32) -> bool {
        self.lowest_index().is_none_or(|k| k > l)
    }

    fn check_compatible(&self, other: &GroupElement) -> Result<()> {
        if self.p != other.p || self.side != other.side {
            return Err(Error::Mismatch(format!(
                "p={} {} vs p={} {}",
                self.p, self.side, other.p, other.side
            )));
        }
        Ok(())
    }

    fn combine(&self, other: &GroupElement, sign: u32) -> GroupElement {
        let p = self.p.get();
        let mut digits = self.digits.clone();
        for (&j, &d) in &other.digits {
            let mine = digits.get(&j).copied().unwrap_or(0) as u32;
            let sum = (mine + sign * d as u32) % p;
            if sum == 0 {
                digits.remove(&j);
            } else {
                digits.insert(j, sum as u8);
            }
        }
        GroupElement { p: self.p, side: self.side, digits }
    }

    /// `x ⊕ y`.
    pub fn try_add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_compatible(other)?;
        Ok(self.combine(other, 1))
    }

    /// `x ⊖ y`.
    pub fn try_sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_compatible(other)?;
        Ok(self.combine(other, self.p.get() - 1))
    }

    /// `⊖x`.
    pub fn negate(&self) -> GroupElement {
        let p = self.p.get() as u8;
        GroupElement {
            p: self.p,
            side: self.side,
            digits: self.digits.iter().map(|(&j, &d)| (j, p - d)).collect(),
        }
    }

    /// `A^k x` (or `B^k ω` on the dual side): digit `j` of the result is
    /// digit `j + k` of `self`.
    pub fn shift(&self, k: i32) -> GroupElement {
        GroupElement {
            p: self.p,
            side: self.side,
            digits: self.digits.iter().map(|(&j, &d)| (j - k, d)).collect(),
        }
    }

    /// `λ(x) = Σ x_j p^(-j)`, exactly.
    pub fn lambda(&self) -> Ratio<i128> {
        let Some(top) = self.highest_index() else {
            return Ratio::from_integer(0);
        };
        let p = self.p.get() as i128;
        let denom_exp = top.max(0);
        let numer: i128 = self
            .digits
            .iter()
            .map(|(&j, &d)| d as i128 * p.pow((denom_exp - j) as u32))
            .sum();
        Ratio::new(numer, p.pow(denom_exp as u32))
    }

    pub fn lambda_f64(&self) -> f64 {
        let p = self.p.get() as f64;
        self.digits.iter().fold(0.0, |acc, (&j, &d)| acc + d as f64 * p.powi(-j))
    }

    /// Component in `U`: the digits at indices `≥ 1`.
    pub fn fractional_part(&self) -> GroupElement {
        GroupElement {
            p: self.p,
            side: self.side,
            digits: self.digits.range(1..).map(|(&j, &d)| (j, d)).collect(),
        }
    }

    /// Component in the lattice (`H` or `H⊥`): the digits at indices `≤ 0`.
    pub fn integer_part(&self) -> GroupElement {
        GroupElement {
            p: self.p,
            side: self.side,
            digits: self.digits.range(..=0).map(|(&j, &d)| (j, d)).collect(),
        }
    }

    /// Copy with digit `j` replaced by `d`.
    pub fn with_digit(&self, j: i32, d: u8) -> GroupElement {
        let mut digits = self.digits.clone();
        if d % self.p.get() as u8 == 0 {
            digits.remove(&j);
        } else {
            digits.insert(j, d % self.p.get() as u8);
        }
        GroupElement { p: self.p, side: self.side, digits }
    }

    /// Digit string padded to cover the indices of `window`, so every cell
    /// of a window prints with the same width.
    pub fn to_padded_string(&self, window: Window) -> String {
        let first = self.lowest_index().unwrap_or(0).min(window.lo + 1).min(0);
        let last = self.highest_index().unwrap_or(1).max(window.hi).max(1);
        self.render(first, last)
    }

    fn render(&self, first: i32, last: i32) -> String {
        let mut s = String::with_capacity((last - first + 2) as usize);
        for j in first..=last {
            if j == 1 {
                s.push('.');
            }
            s.push(DIGIT_CHARS[self.digit(j) as usize] as char);
        }
        s
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first = self.lowest_index().unwrap_or(0).min(0);
        let last = self.highest_index().unwrap_or(1).max(1);
        f.write_str(&self.render(first, last))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[p={}, {}]", self, self.p, self.side)
    }
}

/// # Panics
///
/// Panics when the operands have different moduli or sides; use
/// [`GroupElement::try_add`] to get an error instead.
impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        self.try_add(rhs).expect("group elements from different groups")
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self.try_sub(rhs).expect("group elements from different groups")
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        self.negate()
    }
}

/// `exp(2πik/p)`, with the real and imaginary axes hit exactly.
pub fn root_of_unity(p: Prime, k: u32) -> Complex64 {
    let p = p.get();
    let k = k % p;
    match (k * 4) % (4 * p) {
        0 => return Complex64::new(1.0, 0.0),
        x if x == 2 * p => return Complex64::new(-1.0, 0.0),
        x if x == p => return Complex64::new(0.0, 1.0),
        x if x == 3 * p => return Complex64::new(0.0, -1.0),
        _ => {}
    }
    let theta = std::f64::consts::TAU * k as f64 / p as f64;
    Complex64::new(theta.cos(), theta.sin())
}

/// Exponent `e` with `χ(x, ω) = exp(2πi e / p)`, i.e. `Σ_j x_j ω_{1-j} mod p`.
pub fn character_exponent(x: &GroupElement, omega: &GroupElement) -> Result<u32> {
    if x.p != omega.p {
        return Err(Error::Mismatch(format!("p={} vs p={}", x.p, omega.p)));
    }
    if x.side != Side::Primal || omega.side != Side::Dual {
        return Err(Error::Mismatch("character pairs a primal element with a dual one".into()));
    }
    let p = x.p.get();
    let e = x
        .digits
        .iter()
        .map(|(&j, &d)| d as u32 * omega.digit(1 - j) as u32)
        .fold(0, |acc, t| (acc + t) % p);
    Ok(e)
}

/// The character `χ(x, ω)`.
pub fn character(x: &GroupElement, omega: &GroupElement) -> Result<Complex64> {
    Ok(root_of_unity(x.p, character_exponent(x, omega)?))
}

/// Generalised Walsh function. On the primal side `W_α(x) = χ(x, ω_[α])`;
/// for a dual argument the dual system `W*_α(ω) = χ(h_[α], ω)` is used.
pub fn walsh(alpha: u64, x: &GroupElement) -> Complex64 {
    let e = match x.side {
        Side::Primal => {
            character_exponent(x, &GroupElement::from_integer(x.p, Side::Dual, alpha))
        }
        Side::Dual => {
            character_exponent(&GroupElement::from_integer(x.p, Side::Primal, alpha), x)
        }
    };
    root_of_unity(x.p, e.expect("sides are paired by construction"))
}

/// A cell `x ⊕ U_hi` inside the ball `U_lo`, identified by the digits of its
/// representative at the indices `lo < j ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetId {
    p: Prime,
    side: Side,
    window: Window,
    digits: Vec<u8>,
}

impl CosetId {
    /// `digits[t]` is the digit at index `window.lo + 1 + t`.
    pub fn new(p: Prime, side: Side, window: Window, digits: Vec<u8>) -> Result<Self> {
        if digits.len() != window.width() as usize {
            return Err(Error::Mismatch(format!(
                "{} digits for a window of width {}",
                digits.len(),
                window.width()
            )));
        }
        if let Some(&d) = digits.iter().find(|&&d| d as u32 >= p.get()) {
            return Err(Error::InvalidDigit { digit: d as u32, p: p.get() });
        }
        Ok(CosetId { p, side, window, digits })
    }

    /// The cell of `window` containing `x`, if `x` lies in `U_lo`.
    pub fn containing(x: &GroupElement, window: Window) -> Option<Self> {
        if !x.in_ball(window.lo) {
            return None;
        }
        let digits = (window.lo + 1..=window.hi).map(|j| x.digit(j)).collect();
        Some(CosetId { p: x.p, side: x.side, window, digits })
    }

    pub fn from_index(p: Prime, side: Side, window: Window, idx: usize) -> Self {
        let digits = (window.lo + 1..=window.hi)
            .map(|j| window.digit_of(p, idx, j))
            .collect();
        CosetId { p, side, window, digits }
    }

    pub fn index(&self) -> usize {
        let p = self.p.usize();
        self.digits.iter().fold(0, |acc, &d| acc * p + d as usize)
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn digit(&self, j: i32) -> u8 {
        if self.window.lo < j && j <= self.window.hi {
            self.digits[(j - self.window.lo - 1) as usize]
        } else {
            0
        }
    }

    /// The representative with all digits beyond `hi` equal to zero.
    pub fn representative(&self) -> GroupElement {
        let lo = self.window.lo;
        GroupElement {
            p: self.p,
            side: self.side,
            digits: self
                .digits
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != 0)
                .map(|(t, &d)| (lo + 1 + t as i32, d))
                .collect(),
        }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.p == self.p
            && x.side == self.side
            && x.in_ball(self.window.lo)
            && (self.window.lo + 1..=self.window.hi).all(|j| x.digit(j) == self.digit(j))
    }

    /// Haar measure `p^(-hi)` of the cell.
    pub fn measure(&self) -> f64 {
        self.p.powf(-self.window.hi)
    }
}

impl fmt::Display for CosetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.representative().to_padded_string(self.window))
    }
}
