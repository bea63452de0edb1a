use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the machine-readable error names printed by the
/// command-line front end, so keep them stable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("sublattice generator {0} is not an integer combination of the lattice basis")]
    NotASublattice(usize),
    #[error("matrix is not invertible over the rationals")]
    Singular,

    #[error("pairing matrix is not a Cartan matrix of finite type: {0}")]
    NotFiniteType(String),
    #[error("{0} are linearly dependent over Q")]
    LinearlyDependent(&'static str),
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("datum has a central torus (rank {rank}, semisimple rank {semisimple_rank})")]
    NotSemisimple { rank: usize, semisimple_rank: usize },
    #[error("invalid isogeny: {0}")]
    InvalidIsogeny(String),

    #[error("not an involution: {0}")]
    NotInvolutive(String),
    #[error("tau0 does not carry simple coroot {0} to the coroot of its diagram image")]
    NotBasedCompatible(usize),
    #[error("tau0 sends simple coroot {0} to a negative coroot")]
    ChamberViolation(usize),
    #[error("involution does not permute the roots")]
    NotRootCompatible,

    #[error("matrix is not an involution of the lattice")]
    NotInvolution,
    #[error("invalid invariant cocharacter: {0}")]
    InvalidCocharacter(String),
    #[error("finite set would have {size} elements, above the cap {cap}")]
    TooLarge { size: String, cap: String },
    #[error("generator {0} does not preserve the strong class set")]
    GeneratorIncompatible(usize),
    #[error("no tau0-fixed representative exists for central class {0}")]
    RepresentativeUnavailable(String),

    #[error("involution does not descend to the finite quotient")]
    ActionNotDescending,
    #[error("inner class does not transport along the isogeny: {0}")]
    IncompatibleInnerClass(String),

    #[error("unknown real form name `{0}`")]
    UnknownName(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("generator maps a point outside the set")]
    NotClosed,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable variant name, e.g. `"NotBasedCompatible"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotASublattice(_) => "NotASublattice",
            Error::Singular => "Singular",
            Error::NotFiniteType(_) => "NotFiniteType",
            Error::LinearlyDependent(_) => "LinearlyDependent",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotSemisimple { .. } => "NotSemisimple",
            Error::InvalidIsogeny(_) => "InvalidIsogeny",
            Error::NotInvolutive(_) => "NotInvolutive",
            Error::NotBasedCompatible(_) => "NotBasedCompatible",
            Error::ChamberViolation(_) => "ChamberViolation",
            Error::NotRootCompatible => "NotRootCompatible",
            Error::NotInvolution => "NotInvolution",
            Error::InvalidCocharacter(_) => "InvalidCocharacter",
            Error::TooLarge { .. } => "TooLarge",
            Error::GeneratorIncompatible(_) => "GeneratorIncompatible",
            Error::RepresentativeUnavailable(_) => "RepresentativeUnavailable",
            Error::ActionNotDescending => "ActionNotDescending",
            Error::IncompatibleInnerClass(_) => "IncompatibleInnerClass",
            Error::UnknownName(_) => "UnknownName",
            Error::InvalidSignature(_) => "InvalidSignature",
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::NotClosed => "NotClosed",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
