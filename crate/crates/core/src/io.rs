//! The `vsf1` text format for step functions.
//!
//! ```text
//! vsf1 p=2 side=dual window=-1:1
//! 0.0 1 0
//! 1.1 -0.5 0.25
//! ```
//!
//! The header fixes the group, side and window; each following line gives
//! one cell by its digit string and the real and imaginary parts of its
//! value. Cells that are not listed are zero, and cells are written in `λ`
//! order. Floats use Rust's shortest round-trip representation, so writing
//! and reading a function reproduces it bit for bit.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{CosetId, GroupElement, Prime, Side, Window};
use crate::stepfn::StepFunction;

const MAGIC: &str = "vsf1";

pub fn to_vsf(f: &StepFunction) -> String {
    let mut out = format!("{MAGIC} p={} side={} window={}:{}\n", f.p().get(), f.side(), f.window().lo, f.window().hi);
    for (cell, v) in f.cells() {
        if v.re.to_bits() != 0 || v.im.to_bits() != 0 {
            writeln!(out, "{cell} {} {}", v.re, v.im).expect("writing to a string");
        }
    }
    out
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn field<'a>(token: Option<&'a str>, key: &str) -> Result<&'a str> {
    token
        .and_then(|t| t.strip_prefix(key)?.strip_prefix('='))
        .ok_or_else(|| parse_error(1, format!("expected `{key}=` in the header")))
}

fn parse_header(line: &str) -> Result<(Prime, Side, Window)> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some(MAGIC) {
        return Err(parse_error(1, format!("header must start with `{MAGIC}`")));
    }
    let p = field(tokens.next(), "p")?;
    let p = p.parse::<u32>().map_err(|_| parse_error(1, format!("bad prime {p:?}")))?;
    let p = Prime::new(p).map_err(|e| parse_error(1, e.to_string()))?;
    let side = match field(tokens.next(), "side")? {
        "primal" => Side::Primal,
        "dual" => Side::Dual,
        other => return Err(parse_error(1, format!("bad side {other:?}"))),
    };
    let window = field(tokens.next(), "window")?;
    let (lo, hi) = window
        .split_once(':')
        .and_then(|(a, b)| Some((a.parse::<i32>().ok()?, b.parse::<i32>().ok()?)))
        .ok_or_else(|| parse_error(1, format!("bad window {window:?}")))?;
    let window = Window::new(lo, hi).map_err(|e| parse_error(1, e.to_string()))?;
    if let Some(extra) = tokens.next() {
        return Err(parse_error(1, format!("unexpected header field {extra:?}")));
    }
    Ok((p, side, window))
}

fn parse_float(line: usize, s: Option<&str>) -> Result<f64> {
    let s = s.ok_or_else(|| parse_error(line, "expected `<cell> <re> <im>`"))?;
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(parse_error(line, format!("bad number {s:?}"))),
    }
}

pub fn from_vsf(text: &str) -> Result<StepFunction> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    let (p, side, window) = parse_header(header)?;
    let mut values = vec![Complex64::new(0.0, 0.0); window.cell_count(p)?];
    let mut seen = vec![false; values.len()];
    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let digits = tokens.next().expect("line is not blank");
        let x = GroupElement::parse(p, side, digits).map_err(|e| match e {
            Error::Parse { msg, .. } => parse_error(no, msg),
            other => parse_error(no, other.to_string()),
        })?;
        let on_grid = x.highest_index().is_none_or(|j| j <= window.hi);
        let cell = CosetId::containing(&x, window)
            .filter(|_| on_grid)
            .ok_or_else(|| parse_error(no, format!("{digits} is not a cell of window {window}")))?;
        let re = parse_float(no, tokens.next())?;
        let im = parse_float(no, tokens.next())?;
        if tokens.next().is_some() {
            return Err(parse_error(no, "trailing fields"));
        }
        let idx = cell.index();
        if std::mem::replace(&mut seen[idx], true) {
            return Err(parse_error(no, format!("cell {digits} listed twice")));
        }
        values[idx] = Complex64::new(re, im);
    }
    StepFunction::from_values(p, side, window, values)
}
