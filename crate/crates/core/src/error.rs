use crate::polynomial::VariableId;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex set has odd size {0}, an even size is required")]
    OddVertexSet(usize),
    #[error("double factorial is undefined for {0}; the smallest admissible argument is -1")]
    DoubleFactorialDomain(i64),
    #[error("need at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("operands use different variable families")]
    MixedVariableFamilies,
    #[error("no value assigned to variable {0}")]
    UnassignedVariable(VariableId),
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the zero polynomial is not admissible here")]
    ZeroPolynomial,
    #[error("matrix is {rows}x{cols}, a square matrix is required")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("duplicate matrix label {0:?}")]
    DuplicateLabel(String),
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },
    #[error("images of the supplied elements are linearly dependent")]
    DependentBasis,
    #[error("matching-monomial columns are only valid for matching generating functions")]
    NotMatchingGenerator,
    #[error("parameters violate {0}")]
    ParameterViolation(&'static str),
    #[error("malformed serialized matrix: {0}")]
    MalformedMatrix(String),
}
