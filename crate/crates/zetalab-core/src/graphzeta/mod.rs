//! Zeta functions of finite graphs: primitive non-backtracking cycle
//! enumeration, the Euler product with unit class weights, exact
//! rationality as det(I - T·B), the Bass-form second oracle, divisor
//! extraction, and the log-derivative identity.
//!
//! Everything in this module is exact integer or rational arithmetic;
//! floating point appears only in the numeric root finding of
//! [`divisor`].

mod cycles;
mod graph;
mod intpoly;
mod zeta;

pub use cycles::{enumerate_primitive_cycles, orientation_pairing, PairingReport, PrimitiveCycle};
pub use graph::{hashimoto, Graph, HashimotoMatrix, OrientedEdges};
pub use intpoly::{
    bareiss_det, interpolate_integer, square_free_decomposition, IntPolynomial, TruncatedSeries,
};
pub use zeta::{
    bass_polynomial, cycle_count_identity, divisor, divisor_of_polynomial, euler_product_series,
    log_derivative_check, random_min_degree_two_graph, rationality_report, zeta_polynomial,
    LogDerivReport, RationalityReport,
};

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root finding failed: {0}")]
    RootFinding(String),
    #[error("internal arithmetic invariant violated: {0}")]
    Internal(String),
}
