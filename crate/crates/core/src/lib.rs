//! Numerical verification engine for isometric actions of compact Lie groups
//! on round spheres.
//!
//! Representations are built as explicit real matrix Lie algebras
//! ([`liealg`]), and orbit-space invariants are computed from them:
//! cohomogeneity, isotropy strata and slice representations ([`isotropy`]),
//! polarity ([`polarity`]), O'Neill curvature, orbit distances and
//! quotient geodesics ([`geometry`]), Coxeter orbifold goodness
//! ([`coxeter`]), and a registry of known representations with a table
//! verification harness ([`classify`]).
//!
//! All isotropy computations happen at Lie-algebra level, so only the
//! identity components of isotropy groups are visible. The one exception is
//! pure torus representations, whose finite isotropy groups are computed
//! exactly from the weight lattice.

pub mod classify;
pub mod coxeter;
pub mod geometry;
pub mod isotropy;
pub mod linalg;
pub mod liealg;
pub mod polarity;
mod rng;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

/// Scalar type used by the analysis pipeline.
pub type Real = f64;
/// Dense real matrix.
pub type Mat = DMatrix<Real>;
/// Dense real column vector.
pub type Vector = DVector<Real>;

pub use classify::{analyze, verify_entry, verify_tables, AnalysisReport, Config, RegistryEntry, Status, TablesSummary};
pub use coxeter::{check_goodness, complex_from_action, CoxeterComplexData, Goodness, GoodnessVerdict};
pub use geometry::{corner_angle, curvature_statistics, killing_component_norms, oneill_curvature, orbit_distance, trace_quotient_geodesic};
pub use isotropy::{cohomogeneity, find_singular_points, lrs_reduction, Reduction, StratumWitness};
pub use liealg::{Field, FactorKind, GroupSpec, LieGroupRep, ModuleKind};
pub use polarity::{is_infinitesimally_polar, is_polar, InfPolarReport, PolarityVerdict, Verdict};

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("rank drop: {0}")]
    RankDrop(String),
    #[error("degenerate reduction: fixed space has dimension {fixed_dim} < cohomogeneity {cohomogeneity}")]
    DegenerateReduction { fixed_dim: usize, cohomogeneity: usize },
    #[error("not a corner: {0}")]
    NotACorner(String),
    #[error("corner angle {angle} is not a submultiple of pi (pi/angle = {ratio})")]
    AngleNotSubmultiple { angle: f64, ratio: f64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown registry entry `{0}`")]
    UnknownEntry(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Numerical thresholds shared by every operation.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    /// A singular value counts as zero iff it is below `rank * max(sigma_max, 1)`.
    pub rank: Real,
    /// Polarity threshold; see [`polarity::is_polar`].
    pub polar: Real,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { rank: 1e-8, polar: 1e-6 }
    }
}
