//! Frames of discernment, subsets, mass assignments and their belief duals.
//!
//! Subsets of a frame are bitmasks (`bit i` is element `i`), so every set
//! function on `2^Θ` is stored densely as a `Vec<f64>` of length `2^|Θ|`
//! indexed by the mask. Belief and plausibility tables come out of the
//! subset-sum (zeta) transform; the Möbius transform inverts it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Tolerance applied to user supplied masses (normalization, sign).
pub const INPUT_TOLERANCE: f64 = 1e-9;
/// Tolerance for exact algebraic identities computed internally.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;
/// Masses with absolute value at or below this are not focal.
pub const NONZERO_THRESHOLD: f64 = 1e-9;

/// Entries smaller than this are dropped from sparse mass maps.
const STORAGE_EPSILON: f64 = 1e-15;

/// An ordered finite frame of discernment.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    /// Largest supported frame; keeps `2^|Θ|` tables enumerable.
    pub const MAX_SIZE: usize = 24;

    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > Self::MAX_SIZE {
            return Err(Error::FrameTooLarge(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            // Commas separate labels in subset keys.
            if label.is_empty() || label.trim() != label || label.contains(',') {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, element: usize) -> &str {
        &self.labels[element]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a label, failing with [`Error::UnknownElement`].
    pub fn element(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn check_element(&self, element: usize) -> Result<()> {
        if element < self.len() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(element, self.len()))
        }
    }

    /// `N = 2^|Θ|`, the number of subsets including ∅.
    pub fn subset_count(&self) -> usize {
        1usize << self.len()
    }

    pub fn full(&self) -> FrameSubset {
        FrameSubset((self.subset_count() - 1) as u32)
    }

    pub fn singleton(&self, element: usize) -> FrameSubset {
        debug_assert!(element < self.len());
        FrameSubset::singleton(element)
    }

    pub fn complement(&self, subset: FrameSubset) -> FrameSubset {
        FrameSubset(!subset.0 & self.full().0)
    }

    pub fn contains_subset(&self, subset: FrameSubset) -> bool {
        subset.0 & !self.full().0 == 0
    }

    /// All subsets in bitmask order, ∅ first and Θ last.
    pub fn subsets(&self) -> impl Iterator<Item = FrameSubset> + Clone {
        (0..self.subset_count() as u32).map(FrameSubset)
    }

    /// Subsets `A` with `{x} ⊆ A ⊆ Θ` (the ultrafilter of `x`), in bitmask order.
    pub fn ultrafilter(&self, element: usize) -> impl Iterator<Item = FrameSubset> + Clone {
        let x = FrameSubset::singleton(element);
        self.subsets().filter(move |a| a.contains_all(x))
    }

    /// Parses a comma-joined label list such as `"x,y"`; order and
    /// surrounding whitespace are ignored.
    pub fn parse_subset(&self, key: &str) -> Result<FrameSubset> {
        let mut subset = FrameSubset::EMPTY;
        for part in key.split(',') {
            let label = part.trim();
            if label.is_empty() {
                return Err(Error::MalformedSubset(key.to_string()));
            }
            let element = self.element(label)?;
            if subset.contains(element) {
                return Err(Error::MalformedSubset(key.to_string()));
            }
            subset = subset.with(element);
        }
        Ok(subset)
    }

    /// Canonical key: labels in frame order, comma-joined. ∅ maps to `""`.
    pub fn format_subset(&self, subset: FrameSubset) -> String {
        subset
            .elements()
            .map(|i| self.labels[i].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A subset of a [`Frame`] as a bitmask over element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FrameSubset(u32);

impl FrameSubset {
    pub const EMPTY: FrameSubset = FrameSubset(0);

    pub const fn from_bits(bits: u32) -> Self {
        FrameSubset(bits)
    }

    pub const fn singleton(element: usize) -> Self {
        FrameSubset(1 << element)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(Self::EMPTY, |acc, element| acc.with(element))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, element: usize) -> bool {
        self.0 & (1 << element) != 0
    }

    /// `other ⊆ self`.
    pub const fn contains_all(self, other: FrameSubset) -> bool {
        other.0 & !self.0 == 0
    }

    /// `self ⊆ other`.
    pub const fn is_subset_of(self, other: FrameSubset) -> bool {
        other.contains_all(self)
    }

    pub const fn union(self, other: FrameSubset) -> Self {
        FrameSubset(self.0 | other.0)
    }

    pub const fn intersection(self, other: FrameSubset) -> Self {
        FrameSubset(self.0 & other.0)
    }

    pub const fn difference(self, other: FrameSubset) -> Self {
        FrameSubset(self.0 & !other.0)
    }

    pub const fn with(self, element: usize) -> Self {
        FrameSubset(self.0 | (1 << element))
    }

    pub const fn without(self, element: usize) -> Self {
        FrameSubset(self.0 & !(1 << element))
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// Every subset of `self`, including ∅ and `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = FrameSubset> {
        let top = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == top {
                None
            } else {
                Some((current.wrapping_sub(top)) & top)
            };
            Some(FrameSubset(current))
        })
    }
}

impl fmt::Debug for FrameSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.elements().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// In-place subset-sum (zeta) transform: `out[A] = Σ_{B ⊆ A} in[B]`.
pub fn zeta_transform(values: &mut [f64]) {
    assert!(values.len().is_power_of_two());
    let n = values.len();
    let mut bit = 1;
    while bit < n {
        for a in 0..n {
            if a & bit != 0 {
                values[a] += values[a ^ bit];
            }
        }
        bit <<= 1;
    }
}

/// In-place inverse of [`zeta_transform`]:
/// `out[A] = Σ_{B ⊆ A} (-1)^{|A∖B|} in[B]`.
pub fn mobius_transform(values: &mut [f64]) {
    assert!(values.len().is_power_of_two());
    let n = values.len();
    let mut bit = 1;
    while bit < n {
        for a in 0..n {
            if a & bit != 0 {
                values[a] -= values[a ^ bit];
            }
        }
        bit <<= 1;
    }
}

/// In-place superset-sum transform: `out[A] = Σ_{B ⊇ A} in[B]`.
pub fn superset_transform(values: &mut [f64]) {
    assert!(values.len().is_power_of_two());
    let n = values.len();
    let mut bit = 1;
    while bit < n {
        for a in 0..n {
            if a & bit == 0 {
                values[a] += values[a | bit];
            }
        }
        bit <<= 1;
    }
}

/// Read access shared by proper and pseudo mass assignments.
pub trait MassAssignment {
    fn frame(&self) -> &Frame;

    /// Stored (nonzero) entries, ordered by bitmask.
    fn entries(&self) -> &BTreeMap<FrameSubset, f64>;

    fn mass(&self, subset: FrameSubset) -> f64 {
        self.entries().get(&subset).copied().unwrap_or(0.0)
    }

    /// Dense table of length `2^|Θ|` indexed by bitmask.
    fn dense(&self) -> Vec<f64> {
        let mut table = vec![0.0; self.frame().subset_count()];
        for (subset, value) in self.entries() {
            table[subset.index()] = *value;
        }
        table
    }

    /// Subsets with `|m(A)| > NONZERO_THRESHOLD`.
    fn focal_elements(&self) -> Vec<FrameSubset> {
        self.entries()
            .iter()
            .filter(|(_, v)| v.abs() > NONZERO_THRESHOLD)
            .map(|(a, _)| *a)
            .collect()
    }

    fn total(&self) -> f64 {
        self.entries().values().sum()
    }
}

fn collect_entries<I>(frame: &Frame, masses: I) -> Result<BTreeMap<FrameSubset, f64>>
where
    I: IntoIterator<Item = (FrameSubset, f64)>,
{
    let mut entries = BTreeMap::new();
    for (subset, value) in masses {
        if !value.is_finite() {
            return Err(Error::NonFinite);
        }
        if !frame.contains_subset(subset) {
            return Err(Error::SubsetOutOfFrame(subset.bits()));
        }
        if subset.is_empty() {
            if value.abs() > INPUT_TOLERANCE {
                return Err(Error::EmptySetMass);
            }
            continue;
        }
        *entries.entry(subset).or_insert(0.0) += value;
    }
    Ok(entries)
}

fn check_normalized(entries: &BTreeMap<FrameSubset, f64>) -> Result<()> {
    let total: f64 = entries.values().sum();
    if (total - 1.0).abs() > INPUT_TOLERANCE {
        return Err(Error::NotNormalized(total));
    }
    Ok(())
}

/// A basic probability assignment: nonnegative, `m(∅) = 0`, summing to one.
#[derive(Clone, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    masses: BTreeMap<FrameSubset, f64>,
}

impl MassFunction {
    /// Builds a mass function. Repeated subsets accumulate; values in
    /// `[-1e-9, 0)` are clamped to zero and anything more negative is rejected.
    pub fn new<I>(frame: Frame, masses: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FrameSubset, f64)>,
    {
        let mut entries = collect_entries(&frame, masses)?;
        for (subset, value) in entries.iter_mut() {
            if *value < -INPUT_TOLERANCE {
                return Err(Error::NegativeMass {
                    subset: subset.bits(),
                    value: *value,
                });
            }
            if *value < 0.0 {
                *value = 0.0;
            }
        }
        entries.retain(|_, v| *v > STORAGE_EPSILON);
        check_normalized(&entries)?;
        Ok(Self {
            frame,
            masses: entries,
        })
    }

    /// Builds from `(key, mass)` pairs where keys are comma-joined labels.
    pub fn from_labels(frame: Frame, masses: &[(&str, f64)]) -> Result<Self> {
        let parsed = masses
            .iter()
            .map(|(key, value)| frame.parse_subset(key).map(|s| (s, *value)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, parsed)
    }

    /// The vacuous belief function, `m(Θ) = 1`.
    pub fn vacuous(frame: Frame) -> Self {
        let full = frame.full();
        Self {
            frame,
            masses: BTreeMap::from([(full, 1.0)]),
        }
    }

    /// A categorical belief function with all mass on `subset`.
    pub fn categorical(frame: Frame, subset: FrameSubset) -> Result<Self> {
        Self::new(frame, [(subset, 1.0)])
    }

    pub fn to_pseudo(&self) -> PseudoMassFunction {
        PseudoMassFunction {
            frame: self.frame.clone(),
            masses: self.masses.clone(),
            admissible: true,
        }
    }
}

impl MassAssignment for MassFunction {
    fn frame(&self) -> &Frame {
        &self.frame
    }

    fn entries(&self) -> &BTreeMap<FrameSubset, f64> {
        &self.masses
    }
}

impl fmt::Debug for MassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_masses(f, "MassFunction", &self.frame, &self.masses)
    }
}

fn fmt_masses(
    f: &mut fmt::Formatter<'_>,
    name: &str,
    frame: &Frame,
    masses: &BTreeMap<FrameSubset, f64>,
) -> fmt::Result {
    write!(f, "{name} {{ ")?;
    for (k, (subset, value)) in masses.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{{{}}}: {value}", frame.format_subset(*subset))?;
    }
    write!(f, " }}")
}

/// A normalized set function that may carry negative masses (an improper
/// solution of an approximation problem).
#[derive(Clone, PartialEq)]
pub struct PseudoMassFunction {
    frame: Frame,
    masses: BTreeMap<FrameSubset, f64>,
    admissible: bool,
}

impl PseudoMassFunction {
    pub fn new<I>(frame: Frame, masses: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FrameSubset, f64)>,
    {
        let mut entries = collect_entries(&frame, masses)?;
        entries.retain(|_, v| v.abs() > STORAGE_EPSILON);
        check_normalized(&entries)?;
        let admissible = entries.values().all(|v| *v >= -INPUT_TOLERANCE);
        Ok(Self {
            frame,
            masses: entries,
            admissible,
        })
    }

    /// Builds from a dense table of length `2^|Θ|`; entry 0 (∅) must be ~0.
    pub fn from_dense(frame: Frame, table: &[f64]) -> Result<Self> {
        if table.len() != frame.subset_count() {
            return Err(Error::DimensionMismatch {
                expected: frame.subset_count(),
                got: table.len(),
            });
        }
        let entries: Vec<_> = table
            .iter()
            .enumerate()
            .map(|(bits, v)| (FrameSubset::from_bits(bits as u32), *v))
            .collect();
        Self::new(frame, entries)
    }

    /// All masses are `≥ -1e-9`.
    pub fn is_admissible(&self) -> bool {
        self.admissible
    }

    /// Converts to a proper mass function when admissible.
    pub fn to_mass_function(&self) -> Option<MassFunction> {
        if !self.admissible {
            return None;
        }
        MassFunction::new(self.frame.clone(), self.masses.clone()).ok()
    }
}

impl MassAssignment for PseudoMassFunction {
    fn frame(&self) -> &Frame {
        &self.frame
    }

    fn entries(&self) -> &BTreeMap<FrameSubset, f64> {
        &self.masses
    }
}

impl fmt::Debug for PseudoMassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_masses(f, "PseudoMassFunction", &self.frame, &self.masses)
    }
}

/// Belief and plausibility values of a (pseudo) belief function on every subset.
#[derive(Clone, Debug, PartialEq)]
pub struct BeliefView {
    frame: Frame,
    belief: Vec<f64>,
    plausibility: Vec<f64>,
}

impl BeliefView {
    /// Wraps a dense belief table; requires `b(∅) = 0` and `b(Θ) = 1`.
    pub fn from_belief_values(frame: Frame, belief: Vec<f64>) -> Result<Self> {
        if belief.len() != frame.subset_count() {
            return Err(Error::DimensionMismatch {
                expected: frame.subset_count(),
                got: belief.len(),
            });
        }
        if belief.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let top = belief[frame.full().index()];
        if belief[0].abs() > INPUT_TOLERANCE || (top - 1.0).abs() > INPUT_TOLERANCE {
            return Err(Error::InvalidBelief);
        }
        let full = frame.full().index();
        let plausibility = (0..belief.len()).map(|a| 1.0 - belief[full ^ a]).collect();
        Ok(Self {
            frame,
            belief,
            plausibility,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn belief(&self, subset: FrameSubset) -> f64 {
        self.belief[subset.index()]
    }

    pub fn plausibility(&self, subset: FrameSubset) -> f64 {
        self.plausibility[subset.index()]
    }

    pub fn belief_table(&self) -> &[f64] {
        &self.belief
    }

    pub fn plausibility_table(&self) -> &[f64] {
        &self.plausibility
    }
}

/// `b(A) = Σ_{B ⊆ A} m(B)` and `pl(A) = 1 - b(A^c)` via the zeta transform.
pub fn belief_from_mass<M: MassAssignment + ?Sized>(m: &M) -> BeliefView {
    let mut table = m.dense();
    zeta_transform(&mut table);
    let frame = m.frame().clone();
    let full = frame.full().index();
    let plausibility = (0..table.len()).map(|a| 1.0 - table[full ^ a]).collect();
    BeliefView {
        frame,
        belief: table,
        plausibility,
    }
}

/// Möbius inversion of a belief table back to (possibly improper) masses.
pub fn mass_from_belief(b: &BeliefView) -> PseudoMassFunction {
    let mut table = b.belief.clone();
    mobius_transform(&mut table);
    table[0] = 0.0;
    let masses: BTreeMap<_, _> = table
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, v)| v.abs() > STORAGE_EPSILON)
        .map(|(bits, v)| (FrameSubset::from_bits(bits as u32), *v))
        .collect();
    let admissible = masses.values().all(|v| *v >= -INPUT_TOLERANCE);
    PseudoMassFunction {
        frame: b.frame.clone(),
        masses,
        admissible,
    }
}

/// Intersection of the focal elements; ∅ when they share no element.
pub fn core_of<M: MassAssignment + ?Sized>(m: &M) -> FrameSubset {
    m.focal_elements()
        .into_iter()
        .fold(m.frame().full(), FrameSubset::intersection)
}

/// A belief function is consistent when its core is nonempty.
pub fn is_consistent<M: MassAssignment + ?Sized>(m: &M) -> bool {
    !core_of(m).is_empty()
}

/// Singleton plausibilities `pl({x}) = Σ_{A ∋ x} m(A)`, indexed by element.
pub fn contour<M: MassAssignment + ?Sized>(m: &M) -> Vec<f64> {
    (0..m.frame().len())
        .map(|x| {
            m.entries()
                .iter()
                .filter(|(a, _)| a.contains(x))
                .map(|(_, v)| *v)
                .sum()
        })
        .collect()
}

/// `max_x pl({x}) = 1` within `tolerance`.
pub fn max_contour_is_one<M: MassAssignment + ?Sized>(m: &M, tolerance: f64) -> bool {
    contour(m)
        .into_iter()
        .any(|pl| (pl - 1.0).abs() <= tolerance)
}

/// Whether some proposition `A` and its negation both receive nonzero belief.
///
/// A consistent function never has such a pair. The converse fails once the
/// frame has three elements: `m(xy) = m(yz) = m(xz) = 1/3` has an empty core
/// and positive belief only on pairs, whose complements are singletons.
pub fn has_complementary_support<M: MassAssignment + ?Sized>(m: &M) -> bool {
    let view = belief_from_mass(m);
    let frame = m.frame();
    frame.subsets().any(|a| {
        view.belief(a) > NONZERO_THRESHOLD && view.belief(frame.complement(a)) > NONZERO_THRESHOLD
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ternary() -> Frame {
        Frame::new(["x", "y", "z"]).unwrap()
    }

    fn running_example() -> MassFunction {
        MassFunction::from_labels(
            ternary(),
            &[("x", 0.2), ("y", 0.1), ("x,y", 0.4), ("y,z", 0.3)],
        )
        .unwrap()
    }

    #[test]
    fn frame_rejects_bad_labels() {
        assert_eq!(Frame::new(Vec::<String>::new()), Err(Error::EmptyFrame));
        assert!(matches!(
            Frame::new(["a", "a"]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(Frame::new(["a", ""]), Err(Error::InvalidLabel(_))));
        assert!(matches!(Frame::new(["a,b"]), Err(Error::InvalidLabel(_))));
        let labels: Vec<String> = (0..25).map(|i| format!("e{i}")).collect();
        assert_eq!(Frame::new(labels), Err(Error::FrameTooLarge(25)));
    }

    #[test]
    fn subset_keys_normalize_order() {
        let frame = ternary();
        let a = frame.parse_subset("z, x").unwrap();
        assert_eq!(a, FrameSubset::from_elements([0, 2]));
        assert_eq!(frame.format_subset(a), "x,z");
        assert!(frame.parse_subset("x,x").is_err());
        assert!(frame.parse_subset("").is_err());
        assert_eq!(
            frame.parse_subset("w"),
            Err(Error::UnknownElement("w".into()))
        );
    }

    #[test]
    fn subset_iteration_enumerates_lattice() {
        let a = FrameSubset::from_bits(0b1011);
        let subs: Vec<u32> = a.subsets().map(FrameSubset::bits).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(FrameSubset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn mass_validation() {
        let frame = ternary();
        let x = frame.singleton(0);
        assert!(matches!(
            MassFunction::new(frame.clone(), [(x, 0.5)]),
            Err(Error::NotNormalized(_))
        ));
        assert!(matches!(
            MassFunction::new(frame.clone(), [(x, 1.1), (frame.full(), -0.1)]),
            Err(Error::NegativeMass { .. })
        ));
        assert_eq!(
            MassFunction::new(frame.clone(), [(FrameSubset::EMPTY, 0.5), (x, 0.5)]),
            Err(Error::EmptySetMass)
        );
        assert_eq!(
            MassFunction::new(frame.clone(), [(FrameSubset::from_bits(8), 1.0)]),
            Err(Error::SubsetOutOfFrame(8))
        );
        assert_eq!(
            MassFunction::new(frame.clone(), [(x, f64::NAN)]),
            Err(Error::NonFinite)
        );
        // Tiny negatives are clamped.
        let m =
            MassFunction::new(frame.clone(), [(x, 1.0 + 5e-10), (frame.full(), -5e-10)]).unwrap();
        assert_eq!(m.mass(frame.full()), 0.0);
        assert_eq!(m.entries().len(), 1);
    }

    #[test]
    fn vacuous_belief() {
        let frame = ternary();
        let view = belief_from_mass(&MassFunction::vacuous(frame.clone()));
        for a in frame.subsets() {
            let expected = if a == frame.full() { 1.0 } else { 0.0 };
            assert_eq!(view.belief(a), expected);
        }
        assert_eq!(core_of(&MassFunction::vacuous(frame.clone())), frame.full());
        assert_eq!(contour(&MassFunction::vacuous(frame)), vec![1.0; 3]);
    }

    #[test]
    fn running_example_plausibilities() {
        let m = running_example();
        let pl = contour(&m);
        let expected = [0.6, 0.8, 0.3];
        for (got, want) in pl.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
        let view = belief_from_mass(&m);
        for (x, want) in expected.iter().enumerate() {
            let s = FrameSubset::singleton(x);
            assert!((view.plausibility(s) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn running_example_round_trip() {
        let m = running_example();
        let back = mass_from_belief(&belief_from_mass(&m));
        assert!(back.is_admissible());
        for a in m.frame().subsets() {
            assert!((back.mass(a) - m.mass(a)).abs() < 1e-12);
        }
    }

    #[test]
    fn core_examples() {
        let frame = ternary();
        let nested = MassFunction::from_labels(frame.clone(), &[("x", 0.5), ("x,y", 0.5)]).unwrap();
        assert_eq!(core_of(&nested), frame.singleton(0));
        assert!(is_consistent(&nested));
        assert_eq!(core_of(&running_example()), FrameSubset::EMPTY);
        assert!(!is_consistent(&running_example()));

        let binary = Frame::new(["x", "y"]).unwrap();
        let bayes = MassFunction::from_labels(binary, &[("x", 0.5), ("y", 0.5)]).unwrap();
        assert!(!is_consistent(&bayes));
        assert!(has_complementary_support(&bayes));
        assert!(!max_contour_is_one(&bayes, 1e-9));
    }

    #[test]
    fn belief_view_rejects_unnormalized() {
        let frame = Frame::new(["x", "y"]).unwrap();
        assert_eq!(
            BeliefView::from_belief_values(frame.clone(), vec![0.0, 0.2, 0.3, 0.9]),
            Err(Error::InvalidBelief)
        );
        let view = BeliefView::from_belief_values(frame, vec![0.0, 0.2, 0.3, 1.0]).unwrap();
        assert!((view.plausibility(FrameSubset::singleton(0)) - 0.7).abs() < 1e-15);
    }

    #[test]
    fn pseudo_admissibility() {
        let frame = Frame::new(["x", "y"]).unwrap();
        let p = PseudoMassFunction::new(
            frame.clone(),
            [(frame.singleton(0), 1.2), (frame.full(), -0.2)],
        )
        .unwrap();
        assert!(!p.is_admissible());
        assert!(p.to_mass_function().is_none());
        assert!(PseudoMassFunction::new(frame.clone(), [(frame.full(), 0.9)]).is_err());
    }
}
