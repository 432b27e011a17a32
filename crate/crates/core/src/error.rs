use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("elementary symmetric index k={k} out of range 1..={n}")]
    ElemSymRange { n: usize, k: usize },
    #[error("binomial C({p},{q}) out of range")]
    BinomialRange { p: i64, q: i64 },
    #[error("factor index k={k} out of range 0..{n}")]
    FactorIndex { n: usize, k: usize },
    #[error("n must be >= 3 (got {0})")]
    DimensionTooSmall(usize),
    #[error("n must be <= {max} (got {n})")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("the zero polynomial has no symmetric cubic representation")]
    ZeroCubic,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("quadratic extension elements have different radicands")]
    MixedRadicands,
    #[error("transformation undefined: {0}")]
    TransformationUndefined(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("degenerate denominator: det(M') = 0 after {retries} substitutions")]
    DegenerateDenominator { retries: u32 },
    #[error("Macaulay matrix would have {entries} entries (limit {limit})")]
    MatrixTooLarge { entries: u128, limit: u128 },
    #[error("configuratrix resultant supports n <= {max} (got {n})")]
    UnsupportedDimension { n: usize, max: usize },
    #[error("closed form {closed} disagrees with Macaulay value {oracle}")]
    OracleMismatch { closed: String, oracle: String },
    #[error("parse error: {0}")]
    Parse(String),
}
