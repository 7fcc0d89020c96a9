//! Instance enumeration and generation, isomorphism search, the basic
//! functors between spaces and topologies, and the theorem registry.

pub mod enumerate;
pub mod functors;
pub mod generate;
pub mod iso;
pub mod registry;
pub mod run;

pub use enumerate::{all_preorders, all_topologies, distributive_lattices, enumerate_spaces, SpaceMode};
pub use functors::{discr, frame_points, ind_space, lifted_preorder, underlying};
pub use generate::{all_morphisms, random_distributive_lattice, random_preorder, generate_frame, random_morphism, random_space, rng, FrameFamily, GeneratedFrame};
pub use iso::{adframe_iso, iso_map_violation, pretop_iso, DEFAULT_ISO_BUDGET};
pub use registry::{check_instance, Outcome, TheoremId, Verdict};
pub use run::{minimize, run_batch, run_check, run_sweep, CheckReport, SweepResult, SweepSpec, Tally};
