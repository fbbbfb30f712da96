#![allow(dead_code)]

use csbf::{Frame, FrameSubset, MassFunction};
use proptest::prelude::*;

pub fn ternary() -> MassFunction {
    let frame = Frame::new(["x", "y", "z"]).unwrap();
    MassFunction::from_labels(frame, &[("x", 0.2), ("y", 0.1), ("x,y", 0.4), ("y,z", 0.3)]).unwrap()
}

pub fn frame(n: usize) -> Frame {
    Frame::new((0..n).map(|i| format!("e{i}"))).unwrap()
}

pub fn set(frame: &Frame, key: &str) -> FrameSubset {
    frame.parse_subset(key).unwrap()
}

pub fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got}, want {want} (tol {tol})"
    );
}

/// Belief by direct summation over subsets, independent of the fast transforms.
pub fn naive_belief(m: &MassFunction, a: FrameSubset) -> f64 {
    use csbf::MassAssignment;
    m.entries()
        .iter()
        .filter(|(b, _)| b.is_subset_of(a))
        .map(|(_, v)| v)
        .sum()
}

/// Mass functions on frames of `sizes`, with random sparsity.
pub fn mass_strategy(
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = MassFunction> {
    sizes.prop_flat_map(|n| {
        let count = (1usize << n) - 1;
        (
            Just(n),
            proptest::collection::vec(0.0f64..1.0, count),
            proptest::collection::vec(proptest::bool::weighted(0.6), count),
        )
            .prop_map(|(n, weights, keep)| {
                let frame = frame(n);
                let mut entries: Vec<(FrameSubset, f64)> = weights
                    .iter()
                    .zip(&keep)
                    .enumerate()
                    .filter(|(_, (w, k))| **k && **w > 1e-3)
                    .map(|(i, (w, _))| (FrameSubset::from_bits(i as u32 + 1), *w))
                    .collect();
                if entries.is_empty() {
                    entries.push((frame.full(), 1.0));
                }
                let total: f64 = entries.iter().map(|(_, w)| w).sum();
                for e in entries.iter_mut() {
                    e.1 /= total;
                }
                MassFunction::new(frame, entries).unwrap()
            })
    })
}
