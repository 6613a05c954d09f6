//! Exact combinatorics of maximal atypical simple modules of `Gl(m|n)`:
//! weight labelings, cup diagrams, translation moves, reduction of
//! multiplicities to fully nested diagrams, and superdimensions.

mod bigint_serde;
pub mod cup;
pub mod error;
pub mod moves;
pub mod reduction;
pub mod schur;
pub mod sdim;
pub mod verify;
pub mod weight;

pub use cup::{compact, CompactedDiagram, CupDiagram};
pub use error::{Error, Result};
pub use moves::{expand, move_sites, relation, Constituent, MoveExpansion, MoveKind, MoveSite, SiteKind};
pub use reduction::{
    algorithm_iv, algorithm_iv_diagram, m_oracle, pivot, reduce_diagram, reduce_trace, Algorithm,
    AlgorithmIv, MultiplicityOracle, Pivot, ReductionTrace,
};
pub use schur::{covariant_sdim_oracle, lr_expand, to_highest_weight, Partition};
pub use sdim::{m_closed, sdim, SdimResult};
pub use weight::{bruhat_leq, ext_kac_dim, l_distance, BlockId, Label, Labeling, SuperWeight};
