//! Seeded random mass functions for searches and verification runs.

use rand::Rng;
use rand_distr::{Distribution, Exp1};

use crate::evidence::{Frame, FrameSubset, MassFunction};

/// Uniform draw from the simplex of mass functions with every nonempty
/// subset as a potential focal element (a flat Dirichlet).
pub fn dirichlet_mass<R: Rng + ?Sized>(frame: &Frame, rng: &mut R) -> MassFunction {
    let subsets: Vec<FrameSubset> = frame.subsets().skip(1).collect();
    dirichlet_on(frame, &subsets, rng)
}

/// Flat Dirichlet draw over the given focal elements.
pub fn dirichlet_on<R: Rng + ?Sized>(
    frame: &Frame,
    support: &[FrameSubset],
    rng: &mut R,
) -> MassFunction {
    assert!(!support.is_empty());
    let weights: Vec<f64> = support
        .iter()
        .map(|_| {
            let w: f64 = Exp1.sample(rng);
            w
        })
        .collect();
    let total: f64 = weights.iter().sum();
    let mut masses: Vec<(FrameSubset, f64)> = support
        .iter()
        .zip(&weights)
        .map(|(a, w)| (*a, w / total))
        .collect();
    // Push the rounding residue onto the largest mass so the sum is 1 to ulp level.
    let residue = 1.0 - masses.iter().map(|(_, v)| v).sum::<f64>();
    if let Some(largest) = masses.iter_mut().max_by(|a, b| a.1.total_cmp(&b.1)) {
        largest.1 += residue;
    }
    MassFunction::new(frame.clone(), masses).expect("dirichlet draw is a valid mass function")
}

/// Sparse draw: a random handful of focal elements, drawn half of the time
/// from the ultrafilter of a random element so that consistent functions
/// appear regularly.
pub fn sparse_mass<R: Rng + ?Sized>(frame: &Frame, rng: &mut R) -> MassFunction {
    let n = frame.len();
    let pool: Vec<FrameSubset> = if rng.random_bool(0.5) {
        let x = rng.random_range(0..n);
        frame.ultrafilter(x).collect()
    } else {
        frame.subsets().skip(1).collect()
    };
    let count = rng.random_range(1..=pool.len().min(4));
    let mut support: Vec<FrameSubset> = Vec::with_capacity(count);
    while support.len() < count {
        let a = pool[rng.random_range(0..pool.len())];
        if !support.contains(&a) {
            support.push(a);
        }
    }
    dirichlet_on(frame, &support, rng)
}
