use thiserror::Error;

use crate::surface::CiliatedSurface;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid surface descriptor: {0}")]
    InvalidSurface(String),

    #[error("surface {surface} has negative arc count {value}")]
    NegativeCount { surface: CiliatedSurface, value: i64 },

    #[error("surface {0} has an empty arc complex")]
    EmptyComplex(CiliatedSurface),

    #[error("side count {sides} of {surface} is not divisible by three")]
    NonIntegral { surface: CiliatedSurface, sides: i64 },

    #[error("surface {0} is not of finite type and no winding bound applies")]
    InfiniteType(CiliatedSurface),

    #[error("arc {arc} does not live on surface {surface}")]
    MixedSurface { arc: String, surface: CiliatedSurface },

    #[error("arc {0} is not in the triangulation")]
    ArcNotInTriangulation(String),

    #[error("arc {0} is not flippable")]
    NotFlippable(String),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("side {0} is the interior edge of a self-folded triangle")]
    SelfFolded(u32),

    #[error("side {0} is glued to itself")]
    SelfGlued(u32),

    #[error("side {0} is a boundary side")]
    BoundarySide(u32),

    #[error("unknown side label {0}")]
    UnknownSide(u32),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("constructions disagree: {0}")]
    OracleMismatch(String),

    #[error("structure has {size} vertices, above the search bound {bound}")]
    TooLarge { size: usize, bound: usize },

    #[error("operation unsupported for surface {0}")]
    Unsupported(CiliatedSurface),

    #[error("surface {0} has punctures; B-matrices need an unpunctured surface")]
    Punctured(CiliatedSurface),

    #[error("triangle side without an arc label: {0}")]
    UnlabeledSide(String),

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("isomorphism search aborted after {0} nodes")]
    Inconclusive(u64),
}

impl Error {
    /// Short machine-readable kind, used in structured CLI output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidSurface(_) => "InvalidSurface",
            Error::NegativeCount { .. } => "NegativeCount",
            Error::EmptyComplex(_) => "EmptyComplex",
            Error::NonIntegral { .. } => "NonIntegral",
            Error::InfiniteType(_) => "InfiniteType",
            Error::MixedSurface { .. } => "MixedSurface",
            Error::ArcNotInTriangulation(_) => "ArcNotInTriangulation",
            Error::NotFlippable(_) => "NotFlippable",
            Error::InvalidTriangulation(_) => "InvalidTriangulation",
            Error::SelfFolded(_) => "SelfFolded",
            Error::SelfGlued(_) => "SelfGlued",
            Error::BoundarySide(_) => "BoundarySide",
            Error::UnknownSide(_) => "UnknownSide",
            Error::Parse { .. } => "Parse",
            Error::OracleMismatch(_) => "OracleMismatch",
            Error::TooLarge { .. } => "TooLarge",
            Error::Unsupported(_) => "Unsupported",
            Error::Punctured(_) => "Punctured",
            Error::UnlabeledSide(_) => "UnlabeledSide",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::Inconclusive(_) => "Inconclusive",
        }
    }
}
