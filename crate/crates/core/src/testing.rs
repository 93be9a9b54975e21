//! Proptest strategies shared by the unit tests.

use num_complex::Complex64;
use proptest::prelude::*;

use crate::group::{GroupElement, Prime, Side, Window};
use crate::stepfn::StepFunction;

/// Element of `G` whose digits at `lo..=hi` are arbitrary.
pub fn arb_element_in(p: u32, lo: i32, hi: i32) -> impl Strategy<Value = GroupElement> {
    arb_element_on(p, Side::Primal, lo, hi)
}

pub fn arb_element_on(p: u32, side: Side, lo: i32, hi: i32) -> impl Strategy<Value = GroupElement> {
    let n = (hi - lo + 1) as usize;
    proptest::collection::vec(0..p, n).prop_map(move |ds| {
        GroupElement::from_digits(
            Prime::new(p).unwrap(),
            side,
            ds.into_iter().enumerate().map(|(t, d)| (lo + t as i32, d)),
        )
        .unwrap()
    })
}

fn arb_coefficient() -> impl Strategy<Value = Complex64> {
    prop_oneof![
        1 => Just(Complex64::new(0.0, 0.0)),
        3 => (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im)),
    ]
}

/// Primal step function on the window `[lo, hi]`.
pub fn arb_step_function(p: u32, lo: i32, hi: i32) -> impl Strategy<Value = StepFunction> {
    arb_step_function_on(p, Side::Primal, lo, hi)
}

pub fn arb_step_function_on(p: u32, side: Side, lo: i32, hi: i32) -> impl Strategy<Value = StepFunction> {
    let prime = Prime::new(p).unwrap();
    let window = Window::new(lo, hi).unwrap();
    let n = window.cell_count(prime).unwrap();
    proptest::collection::vec(arb_coefficient(), n)
        .prop_map(move |values| StepFunction::from_values(prime, side, window, values).unwrap())
}
