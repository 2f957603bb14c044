use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator name `{0}` is reserved for the curve classes (eta, delta_j)")]
    ReservedName(String),
    #[error("generator `{name}` has degree {degree} but the wrong parity")]
    ParityMismatch { name: String, degree: u32 },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("presentation has {0} generators, at most 128 are supported")]
    TooManyGenerators(usize),
    #[error("truncation degree must be at least 2, got {0}")]
    TruncationTooSmall(u32),
    #[error("monomial is not in normal form: {0}")]
    NotNormal(String),
    #[error("elements belong to different ring presentations")]
    IncompatiblePresentations,
    #[error("expected a homogeneous class of degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("honest bundle cannot have negative rank {0}")]
    NegativeRank(i64),
    #[error("truncation degree {available} cannot hold classes of degree {needed}")]
    Truncation { needed: u32, available: u32 },
    #[error("codimension 2g-s-1 = {0} is not positive")]
    Codimension(i64),
    #[error("determinant entries must be even-degree (commuting) classes")]
    OddEntry,
    #[error("Segre invariant and degree must agree mod 2 (s(E) = deg(E) mod 2), got d={degree}, s={segre}")]
    SegreParity { degree: i64, segre: i64 },
    #[error("genus 0 is handled by the genus-0 laboratory, the class pipeline needs g >= 1")]
    GenusZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("kernel matrix is not a subbundle inclusion (2x2 minors share a zero)")]
    InvalidKernel,
    #[error("quotient matrix is not surjective (2x2 minors share a zero)")]
    NotSurjective,
    #[error("sampling gave up after {0} invalid draws")]
    SamplingExhausted(u32),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
