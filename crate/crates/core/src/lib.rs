//! Exact invariants of the singularity category of an artin algebra with
//! radical square zero, read off from its valued quiver.
//!
//! The algebra is modelled entirely by its valued quiver ([`ValuedQuiver`]):
//! vertices carry the lengths `f_i` of the division algebras `Δ_i`, and each
//! arrow `i -> j` carries the valuation `(a_ij, b_ij)`. Everything else is
//! computed from that data:
//!
//! * [`cyclicize`] peels sources and sinks down to the cyclic-like core;
//! * [`syzygy`] iterates `Ω ≅ r ⊗ -` on dimension vectors and computes
//!   Hom dimensions in the singularity category as colimits of stable Hom
//!   spaces;
//! * [`gamma`] builds the Bratteli data of the associated regular algebra,
//!   decides Hom-finiteness, and in the Hom-finite case extracts the
//!   semisimple blocks together with the shift permutation;
//! * [`constructions`] provides one-point (co)extensions, trivial-extension
//!   powers, disjoint unions and seeded generators;
//! * [`oracle`] recomputes the combinatorial answers by honest linear
//!   algebra over a prime field, for cross-checking.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod constructions;
pub mod cyclicize;
pub mod error;
pub mod gamma;
pub mod graph;
pub mod oracle;
pub mod perm;
pub mod quiver;
pub mod syzygy;

pub use cyclicize::{cyclicize, cyclicize_with, is_cyclic_like, CyclicizationResult, RemovalKind};
pub use error::{Error, QuiverError};
pub use gamma::{
    bratteli, gamma_blocks, hom_finite, verify_theorem_a, BratteliDiagram, HomFiniteReason, HomFiniteReport,
    SigmaStructure, TheoremAReport,
};
pub use graph::{classify, VertexClassification};
pub use perm::Permutation;
pub use quiver::{RawArrow, RawQuiver, Valuation, ValuedQuiver, VertexId};
pub use syzygy::{
    default_horizon, k_dim, omega_iterate, sg_hom_dim, sg_is_zero, stable_hom_dim, syzygy_step, DimVector,
    HomDimResult, HomStatus,
};

pub use num_bigint::BigUint;
