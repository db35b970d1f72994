//! Verification-grade numerics for imaginary-time flows of quadratic
//! hyperbolic Hamiltonians on the symplectic plane: the induced family of
//! polarizations, half-form corrected coherent state transforms on Gaussian
//! wavepackets, the Fourier and Segal-Bargmann endpoints, and independent
//! quadrature / ODE / matrix-exponential oracles that cross-check every
//! closed form.

pub mod acceptance;
pub mod dynamics;
pub mod error;
pub mod states;
pub mod transforms;
pub mod verify;

pub use dynamics::{
    canonical_reduction, classify_polarization, classify_polarization_exact, flow_matrix,
    holomorphic_coordinate, hyperbolic_alpha, kahler_density, time_reparametrization,
    Conventions, FlowMatrix, HolomorphicCoordinate, PiRational, PolarizationClass,
    QuadraticHamiltonian, ReductionData, TimeAxis, CONVENTIONS,
};
pub use error::{Error, Result};
pub use states::{
    coherent_state, heisenberg_shift_line, heisenberg_shift_phase, polarization_residual,
    polarized_inner, real_polarization_inner, schrodinger_inner, GaussianSuperposition,
    HalfFormFrame, LineGaussian, PhaseSpaceGaussian, ShiftKind,
};
pub use transforms::{
    dilation_phase_unitary, fourier_on_gaussian, heat_evolve, heat_semigroup, ksh_closed_form,
    ksh_conjugated, ksh_factorized, ksh_transform, prequantum_evolution, segal_bargmann,
    KshClosedForm,
};
pub use verify::{
    gram_isometry_defect, matrix_exp_oracle, quad_inner_polarized, quad_inner_schrodinger,
    quad_norm_polarized, quad_norm_schrodinger, riccati_ode_oracle, OdeMethod, OdeSpec,
    PolarizedNorm, QuadRule, QuadratureSpec, RiccatiState,
};
