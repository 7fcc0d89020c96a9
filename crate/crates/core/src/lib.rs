//! Finite-model laboratory for ad-frames: pairs of a frame and a completely
//! distributive lattice linked by totality, consistency, containment and
//! inclusion relations, together with their duality with preordered
//! topological spaces.

pub mod adframe;
pub mod duality;
pub mod error;
pub mod finord;
pub mod json;
pub mod limits;
pub mod sobrify;
pub mod subset;
pub mod theorems;

pub use error::{Error, Result};
pub use subset::Subset;
