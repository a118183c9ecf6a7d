//! Brute-force cross-checks by linear algebra over `GF(p)`.
//!
//! Only quivers over a field are supported: every weight is 1 and every
//! valuation is `(m, m)`, read as `m` parallel arrows. A module is an
//! explicit representation of `kQ/J²`, and projective covers, syzygies, Hom
//! spaces and stable Hom spaces are obtained by solving linear systems.
//! None of this shares code with the combinatorial side of the crate.

mod colimit;
mod field;
mod hom;
mod rep;

use alloc::vec::Vec;

use thiserror::Error;

use crate::quiver::{ValuedQuiver, VertexId};

pub use colimit::{colimit_hom_dim, omega_morphism};
pub use field::{check_prime, span_rank, FpMatrix};
pub use hom::{hom_space, stable_hom_space, HomSpace, Morphism, StableHomSpace};
pub use rep::{
    build_projective, build_simple, build_simple_at, projective_cover, syzygy_rep, ProjectiveCover, RepModule, Summand,
    Syzygy,
};

/// Default characteristic.
pub const DEFAULT_PRIME: u32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle needs a quiver over a field (all weights 1, valuations (m,m)): {0}")]
    NotFieldType(&'static str),
    #[error("{0} is not a prime below 256")]
    NotPrime(u32),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),
    #[error("modules live over different quivers or fields")]
    ShapeMismatch,
    #[error("depth {depth} too small: need at least {needed}")]
    DepthTooSmall { depth: usize, needed: usize },
    #[error("colimit ranks did not stabilize by depth {depth}")]
    NotStabilized { depth: usize },
}

/// Arrow list of a field-type quiver, with `(m, m)` expanded to `m` copies,
/// in `(source, target)` order.
pub fn arrow_list(q: &ValuedQuiver) -> Result<Vec<(usize, usize)>, OracleError> {
    if q.weights().iter().any(|&f| f != 1) {
        return Err(OracleError::NotFieldType("a vertex has weight other than 1"));
    }
    let mut out = Vec::new();
    for (s, t, v) in q.arrows() {
        if v.a != v.b {
            return Err(OracleError::NotFieldType("an arrow has valuation (a,b) with a ≠ b"));
        }
        out.extend(core::iter::repeat_n((s, t), v.a as usize));
    }
    Ok(out)
}
