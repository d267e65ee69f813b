//! Quadrature on the half-line, projection onto the Wilson bases, and the
//! coefficients of the parity reconstruction.

mod projection;
mod quadrature;
mod stieltjes;

pub use projection::{
    case_a_prefactor, dual_route, expansion_coefficient, gram_entry, parity_coefficients, project,
    reconstruction_residual, residuals_for, CoefficientConvention, CoefficientEntry, CoefficientTable, DualRouteEntry,
    ProjectionTarget, ReconstructionReport,
};
pub use quadrature::{integrate_real, integrate_semiinfinite, Cutoff, Integral, KronrodRule, QuadratureConfig, TailModel};
pub use stieltjes::{gram_schmidt_oracle, stieltjes, DiscreteMeasure, StieltjesResult};
