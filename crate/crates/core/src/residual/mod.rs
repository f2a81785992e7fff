//! Residual resultants through ideals of points.
//!
//! With `delta = rho - nu + 1` and `a = dim R_{delta - 1}`, the forms of
//! degree `delta` through `a` points in generic position generate an ideal
//! `G` whose Hilbert function is `a` from degree `delta - 1` on. Writing each
//! form of the system as a combination `sum_j p_ij g_j` of the generators
//! and evaluating the subresultant there gives a multiple of the residual
//! resultant of `G`, by a rational constant that [`residual_resultant`]
//! reports instead of fixing a normalization.

mod chain;
mod points;
mod run;
mod specialize;

pub use chain::{implication_chain_check, ChainRecord, CHAIN_WINDOW};
pub use points::{
    generic_points_ideal, points_ideal, random_points, CertificateRow, PointSet, PointsIdeal, PointsIdealDoc,
    MAX_ATTEMPTS,
};
pub use run::{binary_residual_resultant, cmd_residual, ResidualBody, POINT_BOUND};
pub use specialize::{
    evaluate_residual, expected_residual_degrees, residual_group, residual_resultant, residual_specialize,
    residual_variable, specialize_forms, vanishing_assignment, Mode, ResidualResult, ResidualSystem,
};
