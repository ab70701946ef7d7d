use thiserror::Error;

/// Rejection reasons for constructing or combining the combinatorial objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("parts are not weakly decreasing")]
    RejectNotDecreasing,
    #[error("parts must be positive")]
    RejectNonPositive,
    #[error("row lengths do not form a partition")]
    RejectShape,
    #[error("entries are not exactly 1..n")]
    RejectEntries,
    #[error("rows or columns are not strictly increasing")]
    RejectNotStandard,
    #[error("a prefix has more -1 steps than 1 steps")]
    RejectBelowAxis,
    #[error("a 0 step occurs at height 0")]
    RejectFlatOnAxis,
    #[error("shape has more parts than allowed here")]
    RejectShapeTooLong,
    #[error("concatenation produces an invalid word")]
    RejectInvalidResult,
    #[error("column entries are not strictly increasing")]
    RejectColumnStrict,
}

/// Rejection reasons specific to orthogonal Littlewood-Richardson tableaux.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LrError {
    #[error("case constraint violated: {0}")]
    RejectCaseConstraint(String),
    #[error("not a skew semistandard filling")]
    RejectSemistandard,
    #[error("gap rule violated: {0}")]
    RejectGapRule(String),
    #[error("more than one case matches")]
    RejectAmbiguous,
    #[error("not an orthogonal Littlewood-Richardson tableau: {0}")]
    RejectNotLR(String),
    #[error("shape has more parts than allowed here")]
    RejectShapeTooLong,
}

/// Rejection reasons in the bijection pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("tableau shape does not match the Littlewood-Richardson tableau")]
    RejectShapeMismatch,
    #[error("row lengths do not all have the same parity")]
    RejectRowParity,
    #[error("word does not end in the expected suffix")]
    RejectSuffixShape,
    #[error("word is not a valid input here: {0}")]
    RejectInvalidWord(String),
    #[error("the three largest entries are not at the row ends")]
    RejectTripleShape,
    #[error("deleted cells do not form the required horizontal strip")]
    RejectStripShape,
    #[error("no entry can change columns to fix the parity")]
    RejectNoParityFix,
    #[error("position is not a 0")]
    RejectNotZero,
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Lr(#[from] LrError),
}
