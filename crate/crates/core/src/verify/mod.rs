//! Independent numerical oracles: quadrature over the line and the plane,
//! complex-time ODE integration of the Gaussian parameter flow, small dense
//! matrix exponentials, and Gram-matrix isometry harnesses. Nothing in this
//! module reuses the closed forms it is meant to check.

mod expm;
mod gram;
mod ode;
mod quadrature;

pub use expm::matrix_exp_oracle;
pub use gram::gram_isometry_defect;
pub use ode::{riccati_ode_oracle, OdeMethod, OdeSpec, RiccatiState};
pub use quadrature::{
    quad_inner_polarized, quad_inner_schrodinger, quad_norm_polarized, quad_norm_schrodinger,
    PolarizedNorm, QuadRule, QuadratureSpec,
};
