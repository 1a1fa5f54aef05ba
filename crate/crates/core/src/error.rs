use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // exact arithmetic and polynomials
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials do not share the same variables and distinguished variable")]
    SharedVariableMismatch,
    #[error("both polynomials are constant in the distinguished variable")]
    DegenerateInput,
    #[error("degree {found} is below the required minimum {required}")]
    DegreeTooLow { found: usize, required: usize },
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("Sylvester matrix of size {size} exceeds the {limit}x{limit} guardrail")]
    DegreeGuardrail { size: usize, limit: usize },
    #[error("division by zero")]
    DivisionByZero,

    // plane curves
    #[error("not a valid plane curve: {0}")]
    InvalidCurve(String),
    #[error("curve has a repeated or shared component")]
    ReducibleCurve,
    #[error("singular scheme contains non-rational points")]
    IrrationalSingularity,
    #[error("point {0} is not a singular point of the curve")]
    NotSingular(String),
    #[error("curve has a singularity that is neither a node nor a cusp")]
    UnsupportedSingularity,
    #[error("no chart in the deterministic schedule is valid for this input")]
    ChartExhausted,

    // duality
    #[error("witness point lies on the curve")]
    WitnessOnCurve,
    #[error("witness points disagree ({first} vs {second}); witness is not generic")]
    NonGenericWitness { first: usize, second: usize },
    #[error("degree {degree} exceeds the guardrail {limit}")]
    GuardrailExceeded { degree: usize, limit: usize },

    // identities over invariant packages
    #[error("ambient dimension {0} is too small; n >= 2 is required")]
    AmbientTooSmall(i64),
    #[error("packages live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(i64, i64),
    #[error("transversality is not certified for `{0}`")]
    UncertifiedTransversality(String),
    #[error("invalid counts: {0}")]
    InvalidCounts(String),
    #[error("k = {k} is outside the admissible range 0..={max}")]
    KOutOfRange { k: i64, max: i64 },
    #[error("expected an integer result, got {0}")]
    NonIntegralResult(String),
    #[error("equality holds for every k up to n; package is inconsistent with a nonempty dual")]
    NoFailureFound,
    #[error("inconsistent package `{label}`: {reason}")]
    InconsistentPackage { label: String, reason: String },
    #[error("slice chi(S ∩ P^{index}) of `{label}` is unknown")]
    MissingSlice { label: String, index: i64 },
    #[error("the unknown does not appear in the identity")]
    ZeroCoefficient,
    #[error("more than one field is marked unknown")]
    Overdetermined,
    #[error("no field is marked unknown")]
    NoUnknown,
    #[error("identity is not linear in the unknown")]
    NonLinear,

    // standard varieties
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
