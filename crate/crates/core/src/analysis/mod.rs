//! Certificates and scans over holes: forbidden factors, periodic orbits,
//! dimension bounds, and the finite checks for interior holes, the `Δ`
//! factor counts, balanced words, Cantor-set sampling and the Thue-Morse
//! vertices.

mod appendix;
mod avoidance;
mod cycles;
mod entropy;
pub mod families;
mod forbidden;
mod omega;
mod probe;
mod witness;

pub use appendix::balanced_survivor;
pub use avoidance::{avoidance_sample, AvoidanceReport, Violation, MAX_SAMPLE_LEN, MAX_SAMPLE_WORD};
pub use cycles::{cycle_status, scan_cycles, CycleEntry, CycleReport, CycleStatus, MAX_SCAN_PERIOD};
pub use entropy::{dim_bounds, dim_bounds_with, verify_certificate, DimBounds, DimOptions, SccCertificate, MAX_DIM_L};
pub use forbidden::{certify_forbidden, h_witness, CertMode};
pub use omega::{omega_count, omega_member, OmegaCount, MAX_OMEGA_N};
pub use probe::{pinfty_probe, MAX_PROBE_K};
pub use witness::{interior_witness, witness_value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource guard: {0}")]
    Resource(String),
}
