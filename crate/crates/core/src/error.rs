use alloc::string::String;

use thiserror::Error;

use crate::gamma::HomFiniteReport;
use crate::oracle::OracleError;
use crate::quiver::VertexId;

/// Reasons a raw quiver description is rejected.
///
/// Arrow and vertex positions are indices into the corresponding vectors of
/// the [`RawQuiver`](crate::RawQuiver) that was validated, so a front end can
/// map them back to source locations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("vertex `{id}` declared twice")]
    DuplicateVertex { index: usize, id: VertexId },
    #[error("arrow {arrow} refers to undeclared vertex `{id}`")]
    DanglingEndpoint { arrow: usize, id: VertexId },
    #[error("arrow {arrow} duplicates the pair {tail} -> {head}")]
    DuplicateArrow { arrow: usize, tail: VertexId, head: VertexId },
    #[error("arrow {arrow} has valuation ({a},{b}); both components must be positive")]
    NonPositiveValuation { arrow: usize, a: u64, b: u64 },
    #[error("loop {arrow} at `{vertex}` has valuation ({a},{b}); loops need a = b")]
    LoopMismatch { arrow: usize, vertex: VertexId, a: u64, b: u64 },
    #[error("weight for undeclared vertex `{id}`")]
    UnknownWeightVertex { index: usize, id: VertexId },
    #[error("weight of `{id}` given twice")]
    DuplicateWeight { index: usize, id: VertexId },
    #[error("weight of `{id}` must be positive")]
    NonPositiveWeight { index: usize, id: VertexId },
    #[error("arrow {arrow} breaks the symmetrizer identity a·f(target) = b·f(source)")]
    SymmetrizerInconsistent { arrow: usize },
    #[error("given weights force a non-integral weight at `{id}`")]
    NonIntegralWeight { id: VertexId },
    #[error("weight arithmetic overflowed")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),
    #[error("horizon must be at least 1")]
    InvalidHorizon,
    #[error("depth must be at least 1")]
    InvalidDepth,
    #[error("exponent must be at least 1")]
    InvalidPower,
    #[error("not Hom-finite: {}", .0.reason)]
    NotHomFinite(HomFiniteReport),
    #[error("D_sg = 0, Γ(A) has no blocks")]
    VanishingSingularityCategory,
    #[error("valuation arithmetic overflowed")]
    Overflow,
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
