//! Points of ad-frames, the spectrum `adpt`, the unit `η` and transposes.

mod points;
mod sober;
mod spectrum;
mod transpose;

pub use points::{enumerate_points, satisfies_point_laws, AdPoint, PointAlgorithm, BRUTE_FORCE_LIMIT};
pub use sober::{is_ad_sober, is_ad_t0, AdSobriety};
pub use spectrum::{adpt_hom, adpt_space, eta_into, eta_map, Spectrum};
pub use transpose::{transpose, Transpose, UNIQUENESS_SCAN_LIMIT};
