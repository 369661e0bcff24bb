//! Quantitative geometry of the quotient `S(V)/G`: O'Neill curvature,
//! orbit distances, Killing-field profiles, geodesic tracing and corner
//! angles.

mod corner;
mod curvature;
mod distance;
mod geodesic;
mod killing;

pub use corner::{corner_angle, corner_order, measure_corner, moved_slice, CornerMeasurement, ORDER_GUARD};
pub use curvature::{
    curvature_samples, curvature_statistics, oneill_a, oneill_a_finite_difference, oneill_curvature,
    random_horizontal_configuration, vertical_projection_derivative, CurvatureSample, CurvatureStats, VerticalFrame,
};
pub use distance::{group_element, orbit_distance, same_orbit, DistanceResult, DEFAULT_RESTARTS};
pub use geodesic::{trace_quotient_geodesic, GeodesicSample, GeodesicTrace, SignatureChange};
pub use killing::{killing_component_norms, KillingSplit};
