//! Difference-equation eigenproblems: eigenvalues, eigenfunctions, residual
//! evaluators, second solutions and the `M ≠ 0` scan.

mod eigen;
mod residual;
mod scan;
mod second;

pub use eigen::{
    eigenfunction_case_a, eigenfunction_case_b, eigenvalue, g_case_a, g_case_b_symbolic, BValue, EigenpairRecord,
    GFunction, PolynomialPart, RecordCase,
};
pub use residual::{residual_b0m0, residual_g, residual_m0, residual_master, GEquation};
pub use scan::{admissible, conjecture_scan, ScanConfig, ScanReport};
pub use second::{casoratian, g_on_lattice, increment_ratio_holds, second_solution_exact, lattice_residuals, second_solution, LatticeFunction};
