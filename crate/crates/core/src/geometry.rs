//! Vector embeddings of belief functions and their Lp distances.
//!
//! Three coordinate systems are supported. Coordinates are always ordered by
//! subset bitmask:
//!
//! * [`SpaceKind::MassN1`]: `m(A)` for every `∅ ⊊ A ⊆ Θ` (dimension `N - 1`);
//! * [`SpaceKind::MassN2`]: `m(A)` for `∅ ⊊ A ⊊ Θ`, the Θ mass being implied
//!   by normalization (dimension `N - 2`);
//! * [`SpaceKind::Belief`]: `b(A)` for `∅ ⊊ A ⊊ Θ` (dimension `N - 2`).

use std::fmt;

use crate::error::{Error, Result};
use crate::evidence::{belief_from_mass, Frame, FrameSubset, MassAssignment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    MassN1,
    MassN2,
    Belief,
}

impl SpaceKind {
    pub fn is_mass(self) -> bool {
        matches!(self, SpaceKind::MassN1 | SpaceKind::MassN2)
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::MassN1 => "mass (N-1)",
            SpaceKind::MassN2 => "mass (N-2)",
            SpaceKind::Belief => "belief",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Norm {
    L1,
    L2,
    LInf,
}

impl Norm {
    pub const ALL: [Norm; 3] = [Norm::L1, Norm::L2, Norm::LInf];

    /// Norm of a difference vector.
    pub fn apply(self, diff: impl IntoIterator<Item = f64>) -> f64 {
        let diff = diff.into_iter();
        match self {
            Norm::L1 => diff.map(f64::abs).sum(),
            Norm::L2 => diff.map(|d| d * d).sum::<f64>().sqrt(),
            Norm::LInf => diff.map(f64::abs).fold(0.0, f64::max),
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Norm::L1 => "L1",
            Norm::L2 => "L2",
            Norm::LInf => "Linf",
        })
    }
}

/// A coordinate system over a given frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingSpace {
    kind: SpaceKind,
    frame: Frame,
}

impl EmbeddingSpace {
    pub fn new(kind: SpaceKind, frame: Frame) -> Self {
        Self { kind, frame }
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn dimension(&self) -> usize {
        match self.kind {
            SpaceKind::MassN1 => self.frame.subset_count() - 1,
            SpaceKind::MassN2 | SpaceKind::Belief => self.frame.subset_count() - 2,
        }
    }

    /// Subsets labelling each coordinate, in order.
    pub fn coordinates(&self) -> Vec<FrameSubset> {
        let full = self.frame.full();
        self.frame
            .subsets()
            .skip(1)
            .filter(|a| self.kind == SpaceKind::MassN1 || *a != full)
            .collect()
    }
}

/// A point (or difference vector) in an [`EmbeddingSpace`].
#[derive(Clone, Debug, PartialEq)]
pub struct PointVector {
    space: EmbeddingSpace,
    coords: Vec<f64>,
}

impl PointVector {
    pub fn new(space: EmbeddingSpace, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != space.dimension() {
            return Err(Error::DimensionMismatch {
                expected: space.dimension(),
                got: coords.len(),
            });
        }
        Ok(Self { space, coords })
    }

    pub fn space(&self) -> &EmbeddingSpace {
        &self.space
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Coordinate carried by `subset`, if the space has one.
    pub fn coordinate(&self, subset: FrameSubset) -> Option<f64> {
        let full = self.space.frame.full();
        if subset.is_empty() || (subset == full && self.space.kind != SpaceKind::MassN1) {
            return None;
        }
        // Coordinates are contiguous masks 1..N-1, so the offset is bits - 1.
        self.coords.get(subset.index() - 1).copied()
    }

    pub fn sub(&self, other: &PointVector) -> Result<PointVector> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(PointVector {
            space: self.space.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn dot(&self, other: &PointVector) -> Result<f64> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum())
    }
}

/// Embeds a (pseudo) mass assignment into the requested space.
pub fn embed<M: MassAssignment + ?Sized>(m: &M, space: &EmbeddingSpace) -> Result<PointVector> {
    if m.frame() != space.frame() {
        return Err(Error::FrameMismatch);
    }
    let table = match space.kind {
        SpaceKind::MassN1 | SpaceKind::MassN2 => m.dense(),
        SpaceKind::Belief => belief_from_mass(m).belief_table().to_vec(),
    };
    let coords = space
        .coordinates()
        .into_iter()
        .map(|a| table[a.index()])
        .collect();
    Ok(PointVector {
        space: space.clone(),
        coords,
    })
}

pub fn lp_distance(u: &PointVector, v: &PointVector, norm: Norm) -> Result<f64> {
    if u.space != v.space {
        return Err(Error::SpaceMismatch);
    }
    Ok(norm.apply(u.coords.iter().zip(&v.coords).map(|(a, b)| a - b)))
}

/// `⟨b_A, b_B⟩ = 2^{|(A ∪ B)^c|} - 1` for categorical belief vectors in the
/// belief space, i.e. the number of proper supersets of `A ∪ B`.
pub fn categorical_inner_product(frame: &Frame, a: FrameSubset, b: FrameSubset) -> u64 {
    let outside = frame.complement(a.union(b)).len();
    (1u64 << outside) - 1
}

/// `Σ_{C ⊇ B} ⟨b_C, b_A⟩ (-1)^{|C ∖ B|}`, which is the indicator of `A ⊆ B`
/// whenever `B ≠ Θ`. For `B = Θ` the single term `⟨b_Θ, b_A⟩` vanishes.
pub fn lemma_alternating_sum(frame: &Frame, a: FrameSubset, b: FrameSubset) -> i64 {
    frame
        .complement(b)
        .subsets()
        .map(|extra| {
            let c = b.union(extra);
            let term = categorical_inner_product(frame, c, a) as i64;
            if extra.len() % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}
