use thiserror::Error;

/// Errors raised while building or transforming belief functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame must contain at least one element")]
    EmptyFrame,
    #[error("frame has {0} elements, at most {max} are supported", max = crate::evidence::Frame::MAX_SIZE)]
    FrameTooLarge(usize),
    #[error("invalid element label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element index {0} is out of range for a frame of size {1}")]
    ElementOutOfRange(usize, usize),
    #[error("subset {0:#b} does not belong to the frame")]
    SubsetOutOfFrame(u32),
    #[error("subset key {0:?} is empty or malformed")]
    MalformedSubset(String),
    #[error("subset {0:?} is listed more than once")]
    DuplicateSubset(String),
    #[error("mass assigned to the empty set")]
    EmptySetMass,
    #[error("mass {value} on subset {subset:#b} is negative")]
    NegativeMass { subset: u32, value: f64 },
    #[error("mass values must be finite")]
    NonFinite,
    #[error("masses sum to {0}, expected 1")]
    NotNormalized(f64),
    #[error("belief values must satisfy b(empty) = 0 and b(frame) = 1")]
    InvalidBelief,
    #[error("operands live on different frames")]
    FrameMismatch,
    #[error("vectors belong to different embedding spaces")]
    SpaceMismatch,
    #[error("{norm} approximation is not defined in the {space} representation")]
    UnsupportedCombination { norm: String, space: String },
    #[error("gamma point has {got} coordinates, box has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("gamma point lies outside the box at coordinate {0}")]
    OutsideBox(usize),
    #[error("box has {0} free coordinates, too many to enumerate its vertices")]
    TooManyVertices(usize),
    #[error("oracle supports frames of at most {max} elements, got {0}", max = crate::oracle::MAX_ORACLE_FRAME)]
    OracleFrameTooLarge(usize),
    #[error("invalid oracle configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
