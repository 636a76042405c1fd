use thiserror::Error;

use crate::cone::FaceIndexSet;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by validation and construction routines.
///
/// Validation variants carry enough data to name the violated axiom in
/// diagnostics, e.g. `FacetConditionFails(3)`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("DimensionMismatch: expected dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ZeroVector: operation requires a nonzero vector")]
    ZeroVector,
    #[error("NotASublattice: {0}")]
    NotASublattice(String),
    #[error("NotContained: first cone is not contained in the second")]
    NotContained,
    #[error("NotAFan({0}, {1}): cones intersect outside a common face")]
    NotAFan(usize, usize),
    #[error("RayOutsideSupport: subdivision ray lies outside the fan support")]
    RayOutsideSupport,
    #[error("DoNotSpanCone: vectors do not generate the space as a cone")]
    DoNotSpanCone,
    #[error("DoNotGenerateLattice: vectors do not generate the lattice")]
    DoNotGenerateLattice,
    #[error("TooFewGenerators: need at least {need} generators, got {got}")]
    TooFewGenerators { need: usize, got: usize },
    #[error("DegreesDontGenerate: the degree vectors do not generate the grading lattice")]
    DegreesDontGenerate,
    #[error("RelationNotHomogeneous: relation {relation} has terms {term_a} and {term_b} of different degree")]
    RelationNotHomogeneous {
        relation: usize,
        term_a: usize,
        term_b: usize,
    },
    #[error("InvalidRelation: relation {relation}: {reason}")]
    InvalidRelation { relation: usize, reason: String },
    #[error("OracleRequired: F-face test with {relations} relations needs an explicit fface_table")]
    OracleRequired { relations: usize },
    #[error("TooManyGenerators: face enumeration over {got} generators exceeds the bound {bound}")]
    TooManyGenerators { got: usize, bound: usize },
    #[error("NotProjectedFFace: bunch cone {0} is not the image of any F-face")]
    NotProjectedFFace(usize),
    #[error("OverlapViolation({0}, {1}): bunch cones violate the pairwise interior condition")]
    OverlapViolation(usize, usize),
    #[error("MaximalityViolation({0}): this projected F-face overlaps every bunch member but belongs to none")]
    MaximalityViolation(FaceIndexSet),
    #[error("FacetConditionFails({0}): facet opposite generator {0} violates the bunch facet condition")]
    FacetConditionFails(usize),
    #[error("RaysIncompatible: fan rays are not the Gale images of the presentation")]
    RaysIncompatible,
    #[error("NotRelevant: face {0} is not a relevant face")]
    NotRelevant(FaceIndexSet),
    #[error("NegativeDimension: presentation yields negative dimension")]
    NegativeDimension,
    #[error("PreconditionFailed: {0}")]
    PreconditionFailed(String),
    #[error("NotAQuadric: {0}")]
    NotAQuadric(String),
    #[error("DegreeAsymmetry({0}, {1}): term degree differs from the relation degree")]
    DegreeAsymmetry(usize, usize),
    #[error("RankDeficient: the symmetric coefficient matrix has rank {rank} < {size}")]
    RankDeficient { rank: usize, size: usize },
    #[error("SymmetryViolation: {0}")]
    SymmetryViolation(String),
    #[error("TooFewVariables: intrinsic quadrics need at least 5 variables, got {0}")]
    TooFewVariables(usize),
    #[error("MultiplicityOutOfRange: {0}")]
    MultiplicityOutOfRange(String),
    #[error("ClassificationMismatch: {0}")]
    ClassificationMismatch(String),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Exit code class used by the command line tool: 1 parse/IO, 2
    /// validation, 3 classification assertion.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::ClassificationMismatch(_) => 3,
            _ => 2,
        }
    }
}
