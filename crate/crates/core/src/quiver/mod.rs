//! Exact checks on the quiver description of torus fixed points.

pub mod matrix;
pub mod orbit;
pub mod point;
pub mod weights;

pub use matrix::RatMatrix;
pub use orbit::{
    build_connecting_orbit, check_orbit, entry_weights, perturbation, swap_agrees, ConnectingOrbit,
    EntryWeight, OrbitBranch, OrbitReport, Perturbation,
};
pub use point::{
    build_fixed_point, check_adhm, check_stability, det_section, fixed_point_report,
    section_columns, transition_matrix, FixedPointReport, QuiverPoint,
};
pub use weights::{torus_weights, WeightEntry, WeightTable};
