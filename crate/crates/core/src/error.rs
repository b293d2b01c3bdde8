use alloc::string::String;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed superpartition `{0}`: expected (a1,...,am;s1,...,sk)")]
    Malformed(String),
    #[error("fermionic parts must be strictly decreasing: `{0}`")]
    FermionicNotStrict(String),
    #[error("bosonic parts must be weakly decreasing: `{0}`")]
    BosonicNotDecreasing(String),
    #[error("bosonic parts must be positive: `{0}`")]
    ZeroBosonicPart(String),
    #[error("degree mismatch: ({0}|{1}) vs ({2}|{3})")]
    DegreeMismatch(usize, usize, usize, usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("polynomials live in different variable counts ({0} vs {1})")]
    VariableMismatch(usize, usize),
    #[error("{needed} variables needed, {given} given")]
    TooFewVariables { needed: usize, given: usize },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("expansion is not in the span of the target basis")]
    NotInSpan,
    #[error("expected an expansion in the {expected} basis, got {got}")]
    BasisMismatch { expected: &'static str, got: &'static str },
    #[error("invalid tableau query: {0}")]
    InvalidQuery(String),
    #[error("`{0}` is not a one-row or one-column strip")]
    NotAStrip(String),
}
