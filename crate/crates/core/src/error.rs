//! Error type shared by every module of the engine.

use thiserror::Error;

/// Engine-wide error enum.
///
/// Construction-time validation failures carry enough context to name a
/// concrete witness (a violating index triple, a position in an input
/// string, the residual of a failed centrality check).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The Jacobi identity fails for the basis triple `(i, j, k)` at
    /// output index `r` (all 1-based in the message).
    #[error("Jacobi identity violated at triple (X{i}, X{j}, X{k}), component {r}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        r: usize,
    },

    /// A bracket table entry contradicts antisymmetry (e.g. `[X, X] != 0`
    /// or an entry given with `i >= j`).
    #[error("antisymmetry violated in bracket table entry ({i}, {j})")]
    AntisymmetryViolation { i: usize, j: usize },

    /// The Killing form is singular, so the algebra is not semisimple.
    #[error("Killing form is degenerate: the algebra is not semisimple")]
    DegenerateKillingForm,

    /// A polynomial supplied as invariant does not Poisson-commute with
    /// every coordinate function.
    #[error("polynomial {index} is not invariant: {{p, {coordinate}}} != 0")]
    NotInvariant { index: usize, coordinate: String },

    /// An algebra of rank >= 2 was built without explicit invariants.
    #[error("rank is {rank} but no invariant polynomials were supplied; automatic generation covers rank 1 only")]
    MissingInvariants { rank: usize },

    /// Operands live over different variable counts or algebras.
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A rep-evaluation was attempted for an element over the wrong algebra.
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    /// Buchberger completion of the classical orbit ideal exceeded its
    /// degree bound; reduction results would be unsound.
    #[error("Groebner completion incomplete: degree bound {bound} exceeded")]
    GroebnerIncomplete { bound: u32 },

    /// Completion or reduction of the quantized ideal exceeded its bound.
    #[error("quantized ideal completion exceeded degree bound {bound}: {detail}")]
    ReductionBoundExceeded { bound: u32, detail: String },

    /// The symmetrized image of a claimed invariant failed the centrality
    /// check, so the input was not invariant.
    #[error("element is not central in U_h (fails against generator {generator})")]
    NotCentral { generator: String },

    /// A Casimir shift does not satisfy C_i(0) = c_i.
    #[error("shift {index}: C(0) = {got} does not match orbit constant {expected}")]
    ShiftConstantMismatch {
        index: usize,
        got: String,
        expected: String,
    },

    /// Internal consistency guard of the irrep builder.
    #[error("representation relations violated: {0}")]
    RelationViolation(String),

    /// A representation was requested with hbar = 0.
    #[error("hbar must be nonzero")]
    ZeroHbar,

    /// The Casimir did not act as a scalar, which signals a rep bug.
    #[error("Casimir does not act as a scalar on this representation")]
    NotScalar,

    /// The orbit constructor was given a point that is not regular or not
    /// on the orbit.
    #[error("invalid orbit point: {0}")]
    InvalidOrbitPoint(String),

    /// Expression parse error with byte position and expectation.
    #[error("syntax error at position {pos}: expected {expected}")]
    SyntaxError { pos: usize, expected: String },

    /// An identifier in an expression is not a coordinate of the algebra.
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },

    /// Filesystem error while loading an algebra config.
    #[error("io error on {path}: {detail}")]
    IoError { path: String, detail: String },

    /// Malformed algebra config file (wraps construction errors with a
    /// file location).
    #[error("format error in {path}: {detail}")]
    FormatError { path: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
