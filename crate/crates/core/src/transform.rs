//! Fourier transform between step functions on `G` and `G*`.
//!
//! `f̂(ω) = ∫ f(x) conj(χ(x, ω)) dμ(x)`. A primal window `[lo, hi]` maps to
//! the dual window `[-hi, -lo]`; the inverse uses the same pairing with the
//! opposite sign, so both directions scale by `p^(-hi)` of their input.
//!
//! The fast kernel treats the table as a `p × p × … × p` tensor, applies a
//! length-`p` DFT along every digit axis and then reverses the digit order,
//! since primal place `t` pairs with dual place `width - 1 - t`.
//!
//! ```
//! use vilenkin::{transform, Prime, Side, StepFunction};
//!
//! let haar = StepFunction::ball(Prime::TWO, Side::Primal, 0);
//! let spectrum = transform::fourier(&haar).unwrap();
//! assert_eq!(spectrum, StepFunction::ball(Prime::TWO, Side::Dual, 0));
//! ```

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{root_of_unity, GroupElement, Prime, Side, Window};
use crate::stepfn::StepFunction;

/// Forward transform of a primal step function.
pub fn fourier(f: &StepFunction) -> Result<StepFunction> {
    expect_side(f, Side::Primal)?;
    Ok(fast(f, -1))
}

/// Inverse transform of a dual step function.
pub fn inverse_fourier(f: &StepFunction) -> Result<StepFunction> {
    expect_side(f, Side::Dual)?;
    Ok(fast(f, 1))
}

/// Forward transform by direct summation over all cell pairs.
pub fn slow_fourier(f: &StepFunction) -> Result<StepFunction> {
    expect_side(f, Side::Primal)?;
    Ok(slow(f, -1))
}

/// Inverse transform by direct summation.
pub fn slow_inverse_fourier(f: &StepFunction) -> Result<StepFunction> {
    expect_side(f, Side::Dual)?;
    Ok(slow(f, 1))
}

/// `f̂(ω)` at one point, summing directly over the cells of `f`.
pub fn slow_fourier_at(f: &StepFunction, omega: &GroupElement) -> Result<Complex64> {
    expect_side(f, Side::Primal)?;
    if omega.p() != f.p() || omega.side() != Side::Dual {
        return Err(Error::Mismatch("evaluation point must be a dual element of the same group".into()));
    }
    let p = f.p();
    let w = f.window();
    if !omega.in_ball(-w.hi) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let width = w.width() as usize;
    let pu = p.get();
    // coefficient of each cell digit, least significant place last
    let weights: Vec<u32> = (w.lo + 1..=w.hi).map(|j| omega.digit(1 - j) as u32).collect();
    let mut digits = vec![0u32; width];
    let mut exponent = 0u32;
    let mut acc = Complex64::new(0.0, 0.0);
    for &v in f.values() {
        if v.re != 0.0 || v.im != 0.0 {
            acc += v * root_of_unity(p, (pu - exponent) % pu);
        }
        // odometer step over the digits, updating the exponent incrementally
        for t in (0..width).rev() {
            digits[t] += 1;
            exponent = (exponent + weights[t]) % pu;
            if digits[t] < pu {
                break;
            }
            // a full turn of one digit adds p * weight, which is 0 mod p
            digits[t] = 0;
        }
    }
    Ok(acc * f.cell_measure())
}

fn expect_side(f: &StepFunction, side: Side) -> Result<()> {
    if f.side() != side {
        return Err(Error::Mismatch(format!("expected a {side} function, got a {} one", f.side())));
    }
    Ok(())
}

fn output_window(w: Window) -> Window {
    Window { lo: -w.hi, hi: -w.lo }
}

fn fast(f: &StepFunction, sign: i32) -> StepFunction {
    let p = f.p();
    let width = f.window().width();
    let mut data = f.values().to_vec();
    dft_all_axes(&mut data, p, width, sign);
    let scale = f.cell_measure();
    let mut out = vec![Complex64::new(0.0, 0.0); data.len()];
    let pu = p.usize();
    for (idx, v) in data.into_iter().enumerate() {
        let mut rest = idx;
        let mut rev = 0usize;
        for _ in 0..width {
            rev = rev * pu + rest % pu;
            rest /= pu;
        }
        out[rev] = v * scale;
    }
    StepFunction::from_values(p, f.side().flip(), output_window(f.window()), out)
        .expect("output window has the same cell count")
}

fn dft_all_axes(data: &mut [Complex64], p: Prime, width: u32, sign: i32) {
    let pu = p.usize();
    if pu == 2 {
        let mut stride = 1;
        for _ in 0..width {
            for block in data.chunks_exact_mut(2 * stride) {
                let (a, b) = block.split_at_mut(stride);
                for (x, y) in a.iter_mut().zip(b.iter_mut()) {
                    let (s, d) = (*x + *y, *x - *y);
                    *x = s;
                    *y = d;
                }
            }
            stride *= 2;
        }
        return;
    }
    let roots: Vec<Complex64> = (0..p.get())
        .map(|k| {
            let k = if sign >= 0 { k } else { (p.get() - k) % p.get() };
            root_of_unity(p, k)
        })
        .collect();
    let mut scratch = vec![Complex64::new(0.0, 0.0); pu];
    let mut stride = 1;
    for _ in 0..width {
        for block in data.chunks_exact_mut(pu * stride) {
            for offset in 0..stride {
                for (k, s) in scratch.iter_mut().enumerate() {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for n in 0..pu {
                        acc += block[offset + n * stride] * roots[(n * k) % pu];
                    }
                    *s = acc;
                }
                for (k, s) in scratch.iter().enumerate() {
                    block[offset + k * stride] = *s;
                }
            }
        }
        stride *= pu;
    }
}

fn slow(f: &StepFunction, sign: i32) -> StepFunction {
    let p = f.p();
    let pu = p.get();
    let w = f.window();
    let out_w = output_window(w);
    let in_digits = all_digits(p, w);
    let out_digits = all_digits(p, out_w);
    let scale = f.cell_measure();
    let mut out = Vec::with_capacity(out_digits.len());
    for omega in &out_digits {
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, v) in in_digits.iter().zip(f.values()) {
            // pair input index j with output index 1 - j
            let mut e = 0u32;
            for (j, &d) in (w.lo + 1..=w.hi).zip(x) {
                let k = 1 - j;
                e += d as u32 * omega[(k - out_w.lo - 1) as usize] as u32;
            }
            let e = e % pu;
            let e = if sign >= 0 { e } else { (pu - e) % pu };
            acc += v * root_of_unity(p, e);
        }
        out.push(acc * scale);
    }
    StepFunction::from_values(p, f.side().flip(), out_w, out).expect("cell counts agree")
}

/// Digit vectors of every cell, indexed by `j - lo - 1`.
fn all_digits(p: Prime, w: Window) -> Vec<Vec<u8>> {
    let n = p.pow(w.width());
    (0..n)
        .map(|idx| (w.lo + 1..=w.hi).map(|j| w.digit_of(p, idx, j)).collect())
        .collect()
}
