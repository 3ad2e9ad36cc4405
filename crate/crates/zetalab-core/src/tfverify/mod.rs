//! Exact verification of the trace formula on finite group models: the
//! kernel-trace spectral side against the orbital-integral geometric
//! expansion, with counting-measure volumes. Every paper-side integral is
//! a finite sum here, so agreement is exact up to floating-point noise.

mod formula;
mod group;
mod rep;

pub use formula::{geometric_side, kernel_trace, verify_trace_formula, TestFunction};
pub use group::{FiniteGroupModel, SubgroupEmbedding};
pub use rep::UnitaryRepOmega;

#[derive(Debug, thiserror::Error)]
pub enum TfError {
    #[error("invalid group model: {0}")]
    InvalidModel(String),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("parse error: {0}")]
    Parse(String),
}
