//! Consistent approximations in the mass space.
//!
//! For a focus element `x` the feasible component is the simplex of mass
//! functions supported on the ultrafilter `{B ⊇ {x}}`. Let `b(x^c)` be the
//! mass outside the ultrafilter.
//!
//! * L1 (N-2 coordinates) keeps every mass inside the ultrafilter and moves
//!   `b(x^c)` onto Θ.
//! * L∞ (N-2 coordinates) admits a whole box of solutions: each ultrafilter
//!   mass may move by up to `max_{C ⊅ {x}} m(C)`. Its centre is the L1 solution.
//! * L2 coincides with L1 in N-2 coordinates; in N-1 coordinates it spreads
//!   `b(x^c)` evenly over the `2^{|Θ|-1}` ultrafilter elements.

use crate::error::{Error, Result};
use crate::evidence::{FrameSubset, MassAssignment, MassFunction, PseudoMassFunction};
use crate::geometry::{Norm, SpaceKind};
use crate::selection::{GlobalResult, TIE_TOLERANCE};

/// Largest box dimension for which corners are enumerated.
pub const MAX_VERTEX_DIMENSION: usize = 16;

/// One partial (per-focus) approximation and its distance from the source.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialApprox {
    pub focus: usize,
    pub result: PseudoMassFunction,
    /// Distance from the source, measured with `norm` in `space`.
    pub distance: f64,
    pub norm: Norm,
    pub space: SpaceKind,
}

/// A closed interval attached to one subset coordinate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub subset: FrameSubset,
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn contains(&self, value: f64, tolerance: f64) -> bool {
        value >= self.lower - tolerance && value <= self.upper + tolerance
    }
}

/// The set of partial L∞ approximations in the mass space for one focus.
///
/// Coordinates are the masses of `B ⊇ {x}`, `B ≠ Θ`; the Θ mass of any
/// point follows from normalization. Intervals are unclipped, so the box may
/// contain improper (negative mass) solutions.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxBox {
    pub focus: usize,
    pub intervals: Vec<Interval>,
    pub barycenter: PseudoMassFunction,
    /// `max_{C ⊅ {x}} m(C)`, the L∞ distance of every point of the box.
    pub distance: f64,
}

/// The box intersected with `[0, 1]` on every coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibleBox {
    pub intervals: Vec<Interval>,
    /// Clipping removed part of at least one interval.
    pub strict_subset: bool,
}

impl ApproxBox {
    pub fn dimension(&self) -> usize {
        self.intervals.len()
    }

    pub fn contains(&self, values: &[f64], tolerance: f64) -> bool {
        values.len() == self.intervals.len()
            && self
                .intervals
                .iter()
                .zip(values)
                .all(|(iv, v)| iv.contains(*v, tolerance))
    }

    /// Mass function with the given ultrafilter coordinates and Θ set by normalization.
    pub fn mass_point(&self, values: &[f64]) -> Result<PseudoMassFunction> {
        if values.len() != self.intervals.len() {
            return Err(Error::DimensionMismatch {
                expected: self.intervals.len(),
                got: values.len(),
            });
        }
        let frame = self.barycenter.frame().clone();
        let theta = 1.0 - values.iter().sum::<f64>();
        let entries = self
            .intervals
            .iter()
            .zip(values)
            .map(|(iv, v)| (iv.subset, *v))
            .chain(std::iter::once((frame.full(), theta)));
        PseudoMassFunction::new(frame, entries.collect::<Vec<_>>())
    }

    pub fn midpoint(&self) -> Vec<f64> {
        self.intervals.iter().map(Interval::midpoint).collect()
    }

    /// Corner coordinates; corner `k` takes the upper bound on coordinate `i`
    /// when bit `i` of `k` is set.
    pub fn corner_coordinates(&self) -> Result<Vec<Vec<f64>>> {
        corners(&self.intervals)
    }

    /// Corners of the box as mass functions.
    pub fn vertices(&self) -> Result<Vec<PseudoMassFunction>> {
        self.corner_coordinates()?
            .iter()
            .map(|c| self.mass_point(c))
            .collect()
    }

    pub fn admissible_only(&self) -> AdmissibleBox {
        let mut strict_subset = false;
        let intervals = self
            .intervals
            .iter()
            .map(|iv| {
                let lower = iv.lower.max(0.0);
                let upper = iv.upper.min(1.0);
                if lower > iv.lower || upper < iv.upper {
                    strict_subset = true;
                }
                Interval {
                    subset: iv.subset,
                    lower,
                    upper,
                }
            })
            .collect();
        AdmissibleBox {
            intervals,
            strict_subset,
        }
    }
}

pub(crate) fn corners(intervals: &[Interval]) -> Result<Vec<Vec<f64>>> {
    let d = intervals.len();
    if d > MAX_VERTEX_DIMENSION {
        return Err(Error::TooManyVertices(d));
    }
    Ok((0..1usize << d)
        .map(|k| {
            intervals
                .iter()
                .enumerate()
                .map(|(i, iv)| {
                    if k & (1 << i) != 0 {
                        iv.upper
                    } else {
                        iv.lower
                    }
                })
                .collect()
        })
        .collect())
}

/// Ultrafilter members other than Θ, in bitmask order.
pub(crate) fn proper_ultrafilter(m: &MassFunction, x: usize) -> Vec<FrameSubset> {
    let full = m.frame().full();
    m.frame().ultrafilter(x).filter(|b| *b != full).collect()
}

/// Masses of the focal elements not containing `x`.
fn outside_masses(m: &MassFunction, x: usize) -> impl Iterator<Item = f64> + '_ {
    m.entries()
        .iter()
        .filter(move |(a, _)| !a.contains(x))
        .map(|(_, v)| *v)
}

/// `b(x^c) = Σ_{B ⊅ {x}} m(B)`.
fn outside_total(m: &MassFunction, x: usize) -> f64 {
    outside_masses(m, x).sum()
}

fn outside_sum_of_squares(m: &MassFunction, x: usize) -> f64 {
    outside_masses(m, x).map(|v| v * v).sum()
}

fn outside_max(m: &MassFunction, x: usize) -> f64 {
    outside_masses(m, x).fold(0.0, f64::max)
}

fn moved_to_theta(m: &MassFunction, x: usize) -> Result<PseudoMassFunction> {
    let frame = m.frame().clone();
    let full = frame.full();
    let theta = m.mass(full) + outside_total(m, x);
    let entries: Vec<_> = proper_ultrafilter(m, x)
        .into_iter()
        .map(|b| (b, m.mass(b)))
        .chain(std::iter::once((full, theta)))
        .collect();
    PseudoMassFunction::new(frame, entries)
}

/// Partial L1 approximation focused on `x` (N-2 coordinates).
pub fn partial_l1_mass(m: &MassFunction, x: usize) -> Result<PartialApprox> {
    m.frame().check_element(x)?;
    Ok(PartialApprox {
        focus: x,
        result: moved_to_theta(m, x)?,
        distance: outside_total(m, x),
        norm: Norm::L1,
        space: SpaceKind::MassN2,
    })
}

pub fn global_l1_mass(m: &MassFunction) -> Result<GlobalResult<PartialApprox>> {
    global_l1_mass_with_tolerance(m, TIE_TOLERANCE)
}

/// Criterion `b(x^c) = 1 - pl(x)`: the optima maximize plausibility.
pub fn global_l1_mass_with_tolerance(
    m: &MassFunction,
    tolerance: f64,
) -> Result<GlobalResult<PartialApprox>> {
    let values = (0..m.frame().len()).map(|x| outside_total(m, x)).collect();
    GlobalResult::select(values, tolerance, |x| partial_l1_mass(m, x))
}

/// Box of partial L∞ approximations focused on `x` (N-2 coordinates).
pub fn partial_linf_mass(m: &MassFunction, x: usize) -> Result<ApproxBox> {
    m.frame().check_element(x)?;
    let radius = outside_max(m, x);
    let intervals = proper_ultrafilter(m, x)
        .into_iter()
        .map(|b| Interval {
            subset: b,
            lower: m.mass(b) - radius,
            upper: m.mass(b) + radius,
        })
        .collect();
    Ok(ApproxBox {
        focus: x,
        intervals,
        barycenter: moved_to_theta(m, x)?,
        distance: radius,
    })
}

pub fn global_linf_mass(m: &MassFunction) -> Result<GlobalResult<ApproxBox>> {
    global_linf_mass_with_tolerance(m, TIE_TOLERANCE)
}

/// Criterion `max_{C ⊅ {x}} m(C)`.
pub fn global_linf_mass_with_tolerance(
    m: &MassFunction,
    tolerance: f64,
) -> Result<GlobalResult<ApproxBox>> {
    let values = (0..m.frame().len()).map(|x| outside_max(m, x)).collect();
    GlobalResult::select(values, tolerance, |x| partial_linf_mass(m, x))
}

fn require_mass_space(space: SpaceKind, norm: Norm) -> Result<()> {
    if space.is_mass() {
        Ok(())
    } else {
        Err(Error::UnsupportedCombination {
            norm: norm.to_string(),
            space: space.to_string(),
        })
    }
}

/// Squared L2 distance from `m` to its partial L2 approximation on `x`.
fn l2_squared_distance(m: &MassFunction, x: usize, space: SpaceKind) -> f64 {
    let squares = outside_sum_of_squares(m, x);
    match space {
        SpaceKind::MassN2 => squares,
        _ => {
            let total = outside_total(m, x);
            let filter_size = (1u64 << (m.frame().len() - 1)) as f64;
            total * total / filter_size + squares
        }
    }
}

/// Partial L2 approximation focused on `x` in the chosen mass representation.
pub fn partial_l2_mass(m: &MassFunction, x: usize, space: SpaceKind) -> Result<PartialApprox> {
    require_mass_space(space, Norm::L2)?;
    m.frame().check_element(x)?;
    let result = match space {
        SpaceKind::MassN2 => moved_to_theta(m, x)?,
        _ => {
            let filter_size = (1u64 << (m.frame().len() - 1)) as f64;
            let share = outside_total(m, x) / filter_size;
            let entries: Vec<_> = m
                .frame()
                .ultrafilter(x)
                .map(|b| (b, m.mass(b) + share))
                .collect();
            PseudoMassFunction::new(m.frame().clone(), entries)?
        }
    };
    Ok(PartialApprox {
        focus: x,
        result,
        distance: l2_squared_distance(m, x, space).sqrt(),
        norm: Norm::L2,
        space,
    })
}

pub fn global_l2_mass(m: &MassFunction, space: SpaceKind) -> Result<GlobalResult<PartialApprox>> {
    global_l2_mass_with_tolerance(m, space, TIE_TOLERANCE)
}

/// Criterion is the squared L2 distance to each partial approximation:
/// `Σ_{B ⊅ x} m(B)^2` in N-2 coordinates and
/// `b(x^c)^2 / 2^{|Θ|-1} + Σ_{B ⊅ x} m(B)^2` in N-1 coordinates.
pub fn global_l2_mass_with_tolerance(
    m: &MassFunction,
    space: SpaceKind,
    tolerance: f64,
) -> Result<GlobalResult<PartialApprox>> {
    require_mass_space(space, Norm::L2)?;
    let values = (0..m.frame().len())
        .map(|x| l2_squared_distance(m, x, space))
        .collect();
    GlobalResult::select(values, tolerance, |x| partial_l2_mass(m, x, space))
}
