//! Size caps shared by constructions.

use std::sync::OnceLock;

use crate::subset::MAX_CARRIER;

/// Default cap on lattice sizes: the up-sets of a 12-point discrete preorder.
pub const DEFAULT_MAX_LATTICE: usize = 4096;

/// Carrier cap, overridable (downwards) through `ADFRAME_MAX_POINTS`.
pub fn max_points() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("ADFRAME_MAX_POINTS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.min(MAX_CARRIER))
            .unwrap_or(MAX_CARRIER)
    })
}

/// Lattice element cap, overridable through `ADFRAME_MAX_LATTICE`.
pub fn max_lattice() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("ADFRAME_MAX_LATTICE")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
            .unwrap_or(DEFAULT_MAX_LATTICE)
    })
}
