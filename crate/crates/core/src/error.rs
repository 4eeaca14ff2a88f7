use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("no solution: target is not in the image")]
    NoSolution,
    #[error("map is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),

    #[error("map does not commute with the twisting automorphisms")]
    NotInMorphismSpace,
    #[error("map is not convolution invertible")]
    NotInvertible,
    #[error("identity is not convolution invertible: no antipode")]
    NoAntipode,

    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("subgroup is not stable under the automorphism: {0}")]
    NotAlphaStable(String),
    #[error("no equivariant coset section; searched cosets: {}", searched.join(", "))]
    NoSection { searched: Vec<String> },
    #[error("coset action leaves N: {0}")]
    ActionLeavesN(String),
    #[error("coset cocycle leaves N: {0}")]
    CocycleLeavesN(String),

    #[error("crossed-product conditions violated:\n{0}")]
    ConditionsViolated(Box<AxiomReport>),
    #[error("action is not a Hom-module action:\n{0}")]
    NotModuleAction(Box<AxiomReport>),
    #[error("value escapes the coinvariants: {0}")]
    ValueEscapesCoinvariants(String),
    #[error("coinvariants are not a Hom-subalgebra: {0}")]
    CoinvariantsNotClosed(String),
    #[error("cleft map is not normalized: γ(1) ≠ 1")]
    NormalizationMissing,
    #[error("Galois map is not constant on the relations: {0}")]
    NotWellDefined(String),
    #[error("Galois map is not bijective")]
    NotGalois,
    #[error("no normal-basis witness available")]
    NoWitness,
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl Error {
    /// Stable variant name, used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NoSolution => "NoSolution",
            Error::Singular => "Singular",
            Error::Parse(_) => "ParseError",
            Error::NotInMorphismSpace => "NotInMorphismSpace",
            Error::NotInvertible => "NotInvertible",
            Error::NoAntipode => "NoAntipode",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::InvalidAutomorphism(_) => "InvalidAutomorphism",
            Error::NotSubgroup(_) => "NotSubgroup",
            Error::NotNormal(_) => "NotNormal",
            Error::NotAlphaStable(_) => "NotAlphaStable",
            Error::NoSection { .. } => "NoSection",
            Error::ActionLeavesN(_) => "ActionLeavesN",
            Error::CocycleLeavesN(_) => "CocycleLeavesN",
            Error::ConditionsViolated(_) => "ConditionsViolated",
            Error::NotModuleAction(_) => "NotModuleAction",
            Error::ValueEscapesCoinvariants(_) => "ValueEscapesCoinvariants",
            Error::CoinvariantsNotClosed(_) => "CoinvariantsNotClosed",
            Error::NormalizationMissing => "NormalizationMissing",
            Error::NotWellDefined(_) => "NotWellDefined",
            Error::NotGalois => "NotGalois",
            Error::NoWitness => "NoWitness",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::Io { .. } => "Io",
        }
    }
}
