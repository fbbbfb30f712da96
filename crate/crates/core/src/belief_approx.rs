//! Consistent approximations in the belief space.
//!
//! On the component focused on `x` the L1 and L2 problems share one unique
//! solution, the focused consistent transformation, which moves the mass of
//! every focal element `B` onto `B ∪ {x}`. The L∞ solutions form an
//! axis-aligned box once expressed in the variables
//! `γ(A) = Σ_{x ∈ B ⊆ A} (m(B) - m_cs(B))`, `{x} ⊆ A ⊊ Θ`, and the centre of
//! that box maps back to the focused transformation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::evidence::{
    belief_from_mass, contour, BeliefView, Frame, FrameSubset, MassAssignment, MassFunction,
    PseudoMassFunction,
};
use crate::geometry::{embed, EmbeddingSpace, SpaceKind};
use crate::mass_approx::{corners, proper_ultrafilter, Interval};
use crate::sampling::dirichlet_mass;
use crate::selection::{argmin_set, GlobalResult, TIE_TOLERANCE};

/// Tolerance of the orthogonality certificate.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;

/// Tolerance for accepting a γ-point as inside its box.
pub const BOX_TOLERANCE: f64 = 1e-9;

/// The focused consistent transformation of a mass function on `focus`.
#[derive(Clone, Debug, PartialEq)]
pub struct FocusedTransform {
    pub focus: usize,
    pub result: MassFunction,
    /// Belief-space L1 distance, `Σ_{A ⊆ x^c} b(A)`.
    pub distance_l1: f64,
    /// Belief-space L2 distance, `sqrt(Σ_{A ⊆ x^c} b(A)^2)`.
    pub distance_l2: f64,
}

/// `m'(A ∪ {x}) += m(A)` for every focal element `A`.
pub fn focused_transform(m: &MassFunction, x: usize) -> Result<FocusedTransform> {
    let frame = m.frame();
    frame.check_element(x)?;
    let moved: Vec<_> = m.entries().iter().map(|(a, v)| (a.with(x), *v)).collect();
    let result = MassFunction::new(frame.clone(), moved)?;
    let view = belief_from_mass(m);
    let (l1, l2sq) = frame
        .complement(frame.singleton(x))
        .subsets()
        .map(|a| view.belief(a))
        .fold((0.0, 0.0), |(s, q), b| (s + b, q + b * b));
    Ok(FocusedTransform {
        focus: x,
        result,
        distance_l1: l1,
        distance_l2: l2sq.sqrt(),
    })
}

/// Largest `|⟨b - cs, b_B⟩|` over the generators `b_B`, `{x} ⊆ B ⊊ Θ`.
pub fn orthogonality_residual(m: &MassFunction, ft: &FocusedTransform) -> Result<f64> {
    let frame = m.frame();
    if ft.result.frame() != frame {
        return Err(Error::FrameMismatch);
    }
    let space = EmbeddingSpace::new(SpaceKind::Belief, frame.clone());
    let diff = embed(m, &space)?.sub(&embed(&ft.result, &space)?)?;
    let mut worst: f64 = 0.0;
    for b in proper_ultrafilter(m, ft.focus) {
        let generator = embed(&MassFunction::categorical(frame.clone(), b)?, &space)?;
        worst = worst.max(diff.dot(&generator)?.abs());
    }
    Ok(worst)
}

/// L2 optimality certificate: the difference vector is orthogonal to the
/// component within [`ORTHOGONALITY_TOLERANCE`].
pub fn verify_orthogonality(m: &MassFunction, ft: &FocusedTransform) -> bool {
    orthogonality_residual(m, ft).is_ok_and(|r| r <= ORTHOGONALITY_TOLERANCE)
}

/// The set of partial L∞ approximations in γ-coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaBox {
    pub focus: usize,
    /// One interval per `{x} ⊆ A ⊊ Θ`, in bitmask order.
    pub intervals: Vec<Interval>,
    /// `b(x^c)`, the half-width of every interval and the attained distance.
    pub distance: f64,
    source: MassFunction,
}

impl GammaBox {
    pub fn source(&self) -> &MassFunction {
        &self.source
    }

    pub fn dimension(&self) -> usize {
        self.intervals.len()
    }

    pub fn barycenter(&self) -> Vec<f64> {
        self.intervals.iter().map(Interval::midpoint).collect()
    }

    pub fn contains(&self, gamma: &[f64], tolerance: f64) -> bool {
        gamma.len() == self.intervals.len()
            && self
                .intervals
                .iter()
                .zip(gamma)
                .all(|(iv, g)| iv.contains(*g, tolerance))
    }

    pub fn corner_coordinates(&self) -> Result<Vec<Vec<f64>>> {
        corners(&self.intervals)
    }

    /// Mass-space images of the box corners.
    pub fn vertices(&self) -> Result<Vec<PseudoMassFunction>> {
        self.corner_coordinates()?
            .iter()
            .map(|g| gamma_to_mass(self, g))
            .collect()
    }
}

/// γ-box of partial L∞ approximations focused on `x`:
/// `-b(x^c) - b(A ∖ {x}) ≤ γ(A) ≤ b(x^c) - b(A ∖ {x})`.
pub fn partial_linf_belief(m: &MassFunction, x: usize) -> Result<GammaBox> {
    let frame = m.frame();
    frame.check_element(x)?;
    let view = belief_from_mass(m);
    let xs = frame.singleton(x);
    let radius = view.belief(frame.complement(xs));
    let intervals = proper_ultrafilter(m, x)
        .into_iter()
        .map(|a| {
            let offset = view.belief(a.difference(xs));
            Interval {
                subset: a,
                lower: -radius - offset,
                upper: radius - offset,
            }
        })
        .collect();
    Ok(GammaBox {
        focus: x,
        intervals,
        distance: radius,
        source: m.clone(),
    })
}

/// Maps a point of the γ-box back to masses: Möbius inversion on the
/// ultrafilter recovers `β(A) = m(A) - m_cs(A)`, Θ takes the remainder.
pub fn gamma_to_mass(gamma_box: &GammaBox, gamma: &[f64]) -> Result<PseudoMassFunction> {
    if gamma.len() != gamma_box.intervals.len() {
        return Err(Error::DimensionMismatch {
            expected: gamma_box.intervals.len(),
            got: gamma.len(),
        });
    }
    if let Some(k) = gamma_box
        .intervals
        .iter()
        .zip(gamma)
        .position(|(iv, g)| !iv.contains(*g, BOX_TOLERANCE))
    {
        return Err(Error::OutsideBox(k));
    }
    let m = &gamma_box.source;
    let frame = m.frame();
    let x = gamma_box.focus;
    let mut beta = vec![0.0; frame.subset_count()];
    for (iv, g) in gamma_box.intervals.iter().zip(gamma) {
        beta[iv.subset.index()] = *g;
    }
    for j in (0..frame.len()).filter(|&j| j != x) {
        let bit = 1usize << j;
        for a in frame.ultrafilter(x) {
            let a = a.index();
            if a & bit != 0 {
                beta[a] -= beta[a ^ bit];
            }
        }
    }
    let mut entries: Vec<(FrameSubset, f64)> = gamma_box
        .intervals
        .iter()
        .map(|iv| (iv.subset, m.mass(iv.subset) - beta[iv.subset.index()]))
        .collect();
    let theta = 1.0 - entries.iter().map(|(_, v)| v).sum::<f64>();
    entries.push((frame.full(), theta));
    PseudoMassFunction::new(frame.clone(), entries)
}

fn below_complement<'a>(
    frame: &'a Frame,
    view: &'a BeliefView,
    x: usize,
) -> impl Iterator<Item = f64> + 'a {
    frame
        .complement(frame.singleton(x))
        .subsets()
        .map(move |a| view.belief(a))
}

pub fn global_l1_belief(m: &MassFunction) -> Result<GlobalResult<FocusedTransform>> {
    global_l1_belief_with_tolerance(m, TIE_TOLERANCE)
}

/// Criterion `Σ_{A ⊆ x^c} b(A)`.
pub fn global_l1_belief_with_tolerance(
    m: &MassFunction,
    tolerance: f64,
) -> Result<GlobalResult<FocusedTransform>> {
    let view = belief_from_mass(m);
    let frame = m.frame();
    let values = (0..frame.len())
        .map(|x| below_complement(frame, &view, x).sum())
        .collect();
    GlobalResult::select(values, tolerance, |x| focused_transform(m, x))
}

pub fn global_l2_belief(m: &MassFunction) -> Result<GlobalResult<FocusedTransform>> {
    global_l2_belief_with_tolerance(m, TIE_TOLERANCE)
}

/// Criterion `Σ_{A ⊆ x^c} b(A)^2`.
pub fn global_l2_belief_with_tolerance(
    m: &MassFunction,
    tolerance: f64,
) -> Result<GlobalResult<FocusedTransform>> {
    let view = belief_from_mass(m);
    let frame = m.frame();
    let values = (0..frame.len())
        .map(|x| below_complement(frame, &view, x).map(|b| b * b).sum())
        .collect();
    GlobalResult::select(values, tolerance, |x| focused_transform(m, x))
}

pub fn global_linf_belief(m: &MassFunction) -> Result<GlobalResult<GammaBox>> {
    global_linf_belief_with_tolerance(m, TIE_TOLERANCE)
}

/// Criterion `b(x^c) = 1 - pl(x)`.
pub fn global_linf_belief_with_tolerance(
    m: &MassFunction,
    tolerance: f64,
) -> Result<GlobalResult<GammaBox>> {
    let values = contour(m).into_iter().map(|pl| 1.0 - pl).collect();
    GlobalResult::select(values, tolerance, |x| partial_linf_belief(m, x))
}

/// Elements of maximal plausibility (within the tie tolerance).
pub fn max_plausibility_elements(m: &MassFunction) -> Vec<usize> {
    let values: Vec<f64> = contour(m).into_iter().map(|pl| 1.0 - pl).collect();
    argmin_set(&values, TIE_TOLERANCE)
}

/// Outcome of a seeded random search over mass functions.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub instance: Option<MassFunction>,
    pub draws: usize,
}

/// Draws flat-Dirichlet mass functions until `predicate` holds or the budget runs out.
pub fn search_instances<F>(
    frame: &Frame,
    max_draws: usize,
    seed: u64,
    mut predicate: F,
) -> SearchOutcome
where
    F: FnMut(&MassFunction) -> bool,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for draw in 1..=max_draws {
        let m = dirichlet_mass(frame, &mut rng);
        if predicate(&m) {
            return SearchOutcome {
                instance: Some(m),
                draws: draw,
            };
        }
    }
    SearchOutcome {
        instance: None,
        draws: max_draws,
    }
}

/// Whether the global L1 belief-space optima differ from the maximal plausibility elements.
pub fn l1_belief_diverges_from_plausibility(m: &MassFunction) -> bool {
    global_l1_belief(m).is_ok_and(|g| g.optima != max_plausibility_elements(m))
}

/// Whether global L1 and L2 belief-space optima land on different components.
pub fn l1_l2_belief_diverge(m: &MassFunction) -> bool {
    match (global_l1_belief(m), global_l2_belief(m)) {
        (Ok(a), Ok(b)) => a.optima != b.optima,
        _ => false,
    }
}
