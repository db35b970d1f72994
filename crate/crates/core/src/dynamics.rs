//! Quadratic Hamiltonians on the symplectic plane, their linear flows in real
//! and imaginary time, polarization classification, canonical reduction, and
//! the time reparametrization tying the hyperbolic family to the heat flow.
//!
//! The phase-space column ordering is `(p, x)` throughout this module; all
//! matrices act on that column.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Fixed conventions every operation in the library refers back to.
///
/// * symplectic form `omega = dx ^ dp`
/// * prequantum connection potential `theta_conn = p dx`, i.e. `∇1 = i p dx`
/// * Hermitian structure `h(1, 1) = 1`
/// * Schrodinger inner product carries an overall factor `sqrt(pi)`
#[derive(Debug, Clone, Copy)]
pub struct Conventions {
    pub hbar: f64,
    pub symplectic_form: &'static str,
    pub connection_potential: &'static str,
    pub hermitian_norm_of_unit: f64,
    pub schrodinger_norm_factor: f64,
}

pub const CONVENTIONS: Conventions = Conventions {
    hbar: 1.0,
    symplectic_form: "dx ^ dp",
    connection_potential: "p dx",
    hermitian_norm_of_unit: 1.0,
    schrodinger_norm_factor: std::f64::consts::PI, // sqrt of this multiplies the L2 pairing
};

/// `H = (h11 p^2 + 2 h12 p x + h22 x^2) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticHamiltonian {
    pub h11: f64,
    pub h12: f64,
    pub h22: f64,
}

impl QuadraticHamiltonian {
    pub fn new(h11: f64, h12: f64, h22: f64) -> Self {
        Self { h11, h12, h22 }
    }

    /// `H = (p^2 - alpha^2 x^2) / 2`, the reference hyperbolic Hamiltonian.
    pub fn canonical(alpha: f64) -> Self {
        Self::new(1.0, 0.0, -alpha * alpha)
    }

    /// `H = p^2 / 2`, the free particle.
    pub fn free_particle() -> Self {
        Self::new(1.0, 0.0, 0.0)
    }

    /// Determinant of the Hessian, `h11 h22 - h12^2`.
    pub fn disc(&self) -> f64 {
        self.h11 * self.h22 - self.h12 * self.h12
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.disc() < 0.0
    }

    /// Evaluate `H` at the phase-space point `(p, x)`.
    pub fn eval(&self, p: f64, x: f64) -> f64 {
        0.5 * (self.h11 * p * p + 2.0 * self.h12 * p * x + self.h22 * x * x)
    }

    /// `alpha = sqrt(-det Hess) > 0` for hyperbolic `H`.
    pub fn alpha(&self) -> Result<f64> {
        let disc = self.disc();
        if disc >= 0.0 || !disc.is_finite() {
            return Err(Error::NonHyperbolic { disc });
        }
        Ok((-disc).sqrt())
    }

    /// Matrix `A` with `d/dt (p, x)^T = A (p, x)^T` along the flow of `X_H`.
    ///
    /// `X_H = h11 p ∂x - h22 x ∂p + h12 x ∂x - h12 p ∂p`, so `A` is traceless:
    /// `A = [[-h12, -h22], [h11, h12]]`.
    pub fn generator(&self) -> [[f64; 2]; 2] {
        [[-self.h12, -self.h22], [self.h11, self.h12]]
    }
}

/// Convenience re-export of `QuadraticHamiltonian::alpha` as a free function.
pub fn hyperbolic_alpha(h: &QuadraticHamiltonian) -> Result<f64> {
    h.alpha()
}

pub fn hamiltonian_generator(h: &QuadraticHamiltonian) -> [[f64; 2]; 2] {
    h.generator()
}

/// Whether the flow parameter is real time `t` or imaginary time `tau = i t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeAxis {
    Real,
    Imaginary,
}

/// 2x2 complex unimodular matrix `S(tau)` acting on the column `(p, x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowMatrix {
    pub entries: [[C64; 2]; 2],
    pub time_label: C64,
}

impl FlowMatrix {
    pub fn det(&self) -> C64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    /// Apply to the column `(p, x)`, returning `(p_tau, x_tau)`.
    pub fn apply(&self, p: C64, x: C64) -> (C64, C64) {
        (
            self.entries[0][0] * p + self.entries[0][1] * x,
            self.entries[1][0] * p + self.entries[1][1] * x,
        )
    }
}

/// `sinh(z)/z`, series near zero.
pub(crate) fn sinhc(z: C64) -> C64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        C64::new(1.0, 0.0) + z2 / 6.0 * (C64::new(1.0, 0.0) + z2 / 20.0)
    } else {
        z.sinh() / z
    }
}

/// `exp(tau A)` for the traceless generator of `H`.
///
/// `A^2 = -det(A) I = disc(H) I`, so the exponential closes in terms of
/// `cosh` and `sinh` of `mu tau` with `mu = sqrt(-disc)`.
pub fn flow_matrix(h: &QuadraticHamiltonian, t: f64, axis: TimeAxis) -> FlowMatrix {
    let tau = match axis {
        TimeAxis::Real => C64::new(t, 0.0),
        TimeAxis::Imaginary => C64::new(0.0, t),
    };
    let a = h.generator();
    let mu = C64::new(-h.disc(), 0.0).sqrt();
    let z = mu * tau;
    let c = z.cosh();
    let s_over = tau * sinhc(z); // sinh(mu tau) / mu
    let mut entries = [[C64::new(0.0, 0.0); 2]; 2];
    for (i, row) in a.iter().enumerate() {
        for (j, aij) in row.iter().enumerate() {
            let id = if i == j { c } else { C64::new(0.0, 0.0) };
            entries[i][j] = id + s_over * *aij;
        }
    }
    FlowMatrix {
        entries,
        time_label: tau,
    }
}

/// Linear complex coordinate `w = a x + b p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolomorphicCoordinate {
    /// Coefficient of `x`.
    pub a: C64,
    /// Coefficient of `p`.
    pub b: C64,
}

impl HolomorphicCoordinate {
    pub fn new(a: C64, b: C64) -> Self {
        Self { a, b }
    }

    /// The coordinate `x` (vertical-polarization frame `dx`).
    pub fn dx() -> Self {
        Self::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0))
    }

    /// The coordinate `p` (momentum-polarization frame `dp`).
    pub fn dp() -> Self {
        Self::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0))
    }

    /// `Im(conj(a) b) = dw ^ conj(dw) / (-2i dx ^ dp)`.
    ///
    /// Positive for Kahler polarizations, negative for anti-Kahler, zero for
    /// real ones.
    pub fn kahler_density(&self) -> f64 {
        (self.a.conj() * self.b).im
    }

    /// Evaluate `w` at the point `(x, p)`.
    pub fn eval(&self, x: C64, p: C64) -> C64 {
        self.a * x + self.b * p
    }

    /// Constant Jacobian `dw_self / dw_other` when the two coordinates are
    /// proportional (i.e. cut out the same polarization).
    pub fn jacobian_to(&self, other: &HolomorphicCoordinate) -> Result<C64> {
        let cross = self.a * other.b - self.b * other.a;
        let scale = self.a.norm().max(self.b.norm()) * other.a.norm().max(other.b.norm());
        if cross.norm() > 1e-10 * scale.max(1e-300) {
            return Err(Error::NonProportionalFrames);
        }
        if other.a.norm() >= other.b.norm() {
            Ok(self.a / other.a)
        } else {
            Ok(self.b / other.b)
        }
    }
}

/// The imaginary-time image of the vertical coordinate,
/// `w_tau = cos(alpha t) x + i (h12 x + h11 p) sin(alpha t) / alpha`.
///
/// Periodic in `t` with period `2 pi / alpha`.
pub fn holomorphic_coordinate(h: &QuadraticHamiltonian, t: f64) -> Result<HolomorphicCoordinate> {
    let alpha = h.alpha()?;
    let (s, c) = (alpha * t).sin_cos();
    Ok(HolomorphicCoordinate::new(
        C64::new(c, h.h12 * s / alpha),
        C64::new(0.0, h.h11 * s / alpha),
    ))
}

/// `(h11 / 2 alpha) sin(2 alpha t) = Im(conj(a) b)` of the evolved coordinate.
pub fn kahler_density(h: &QuadraticHamiltonian, t: f64) -> Result<f64> {
    let alpha = h.alpha()?;
    Ok(h.h11 / (2.0 * alpha) * (2.0 * alpha * t).sin())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolarizationClass {
    Schrodinger,
    Kahler,
    AntiKahler,
    /// Real polarization generated by `c_x x + c_p p`; direction is `(c_x, c_p)`.
    RealLine {
        direction: (f64, f64),
    },
}

/// Tolerance on `|sin(2 alpha t)|` deciding the real/Schrodinger branches.
pub const EPS_CLASS: f64 = 1e-12;

/// Classify the imaginary-time evolved polarization at time `t`.
///
/// For `h11 = 0` the flow preserves the vertical polarization and the answer
/// is `Schrodinger` for every `t`.
pub fn classify_polarization(h: &QuadraticHamiltonian, t: f64) -> Result<PolarizationClass> {
    let alpha = h.alpha()?;
    if h.h11 == 0.0 {
        return Ok(PolarizationClass::Schrodinger);
    }
    let (s, c) = (alpha * t).sin_cos();
    let s2 = 2.0 * s * c;
    if s2.abs() <= EPS_CLASS {
        if s.abs() <= c.abs() {
            return Ok(PolarizationClass::Schrodinger);
        }
        return Ok(PolarizationClass::RealLine {
            direction: (h.h12, h.h11),
        });
    }
    if h.h11 * s2 > 0.0 {
        Ok(PolarizationClass::Kahler)
    } else {
        Ok(PolarizationClass::AntiKahler)
    }
}

/// Exact rational multiple of pi: the value `num * pi / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiRational {
    pub num: i64,
    pub den: i64,
}

impl PiRational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("pi-rational denominator is zero".into()));
        }
        Ok(Self { num, den })
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 * std::f64::consts::PI / self.den as f64
    }

    /// Reduce `num/den` modulo 2 into `[0, 2)` (the angle modulo `2 pi`).
    fn reduced(&self) -> (i64, i64) {
        let den = self.den.abs();
        let num = if self.den < 0 { -self.num } else { self.num };
        let m = 2 * den;
        (num.rem_euclid(m), den)
    }

    fn sin_is_zero(&self) -> bool {
        let (n, d) = self.reduced();
        n % d == 0
    }

    fn cos_is_zero(&self) -> bool {
        let (n, d) = self.reduced();
        // cos(n pi / d) = 0 iff n/d is an odd multiple of 1/2.
        2 * n % d == 0 && (2 * n / d) % 2 == 1
    }

    /// Sign of `sin(2 num pi / den)`: -1, 0, or +1, decided exactly.
    fn sin_double_sign(&self) -> i32 {
        let (n, d) = self.reduced();
        // 2n/d modulo 2, as a rational r: sin(r pi) sign by which unit interval r lies in.
        let n2 = (2 * n).rem_euclid(2 * d);
        if n2 % d == 0 {
            0
        } else if n2 < d {
            1
        } else {
            -1
        }
    }
}

/// Classification with the phase `alpha t` given as an exact rational multiple
/// of pi, so boundary cases never depend on a floating-point `pi`.
pub fn classify_polarization_exact(
    h: &QuadraticHamiltonian,
    phase: PiRational,
) -> Result<PolarizationClass> {
    h.alpha()?;
    if h.h11 == 0.0 || phase.sin_is_zero() {
        return Ok(PolarizationClass::Schrodinger);
    }
    if phase.cos_is_zero() {
        return Ok(PolarizationClass::RealLine {
            direction: (h.h12, h.h11),
        });
    }
    let sign = h.h11.signum() as i32 * phase.sin_double_sign();
    Ok(if sign > 0 {
        PolarizationClass::Kahler
    } else {
        PolarizationClass::AntiKahler
    })
}

/// Parameters of the generating function `f = beta x p + (gamma / 2) x^2`
/// whose time-one flow diagonalizes the Hamiltonian, together with the
/// diagonalized Hamiltonian itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReductionData {
    pub beta: f64,
    pub gamma: f64,
    pub h1: QuadraticHamiltonian,
}

/// `beta / sinh(beta)` with the removable singularity at 0 expanded.
fn beta_over_sinh(beta: f64) -> f64 {
    if beta.abs() < 1e-4 {
        let b2 = beta * beta;
        1.0 - b2 / 6.0 + 7.0 * b2 * b2 / 360.0
    } else {
        beta / beta.sinh()
    }
}

/// Diagonalize `H` with `h11 != 0`:
/// `beta = log|h11| / 2`, `gamma = (h12/h11) (beta/sinh beta) e^beta`, and
/// `H1 = sign(h11) (p^2 + disc x^2) / 2`.
pub fn canonical_reduction(h: &QuadraticHamiltonian) -> Result<ReductionData> {
    if h.h11 == 0.0 {
        return Err(Error::ZeroH11);
    }
    let beta = 0.5 * h.h11.abs().ln();
    let gamma = h.h12 / h.h11 * beta_over_sinh(beta) * beta.exp();
    let s = h.h11.signum();
    Ok(ReductionData {
        beta,
        gamma,
        h1: QuadraticHamiltonian::new(s, 0.0, s * h.disc()),
    })
}

/// Time-`s` flow of `X_f`, `f = beta x p + (gamma/2) x^2`, applied to `(p, x)`:
/// `x_s = e^{s beta} x`, `p_s = -(gamma/beta) sinh(s beta) x + e^{-s beta} p`.
pub fn reduction_flow(beta: f64, gamma: f64, s: f64, p: f64, x: f64) -> (f64, f64) {
    let shear = if beta.abs() < 1e-4 {
        // -(gamma/beta) sinh(s beta) -> -gamma s at beta = 0
        -gamma * s * (1.0 + (s * beta) * (s * beta) / 6.0)
    } else {
        -gamma / beta * (s * beta).sinh()
    };
    ((-s * beta).exp() * p + shear * x, (s * beta).exp() * x)
}

/// Max over the samples of `|H(flow_1(z)) - H1(z)|`.
///
/// The composition direction is the one that annihilates the residual on the
/// already-diagonal family (`beta = gamma = 0`).
pub fn reduction_pullback_residual(
    h: &QuadraticHamiltonian,
    r: &ReductionData,
    samples: &[(f64, f64)],
) -> f64 {
    samples
        .iter()
        .map(|&(p, x)| {
            let (ps, xs) = reduction_flow(r.beta, r.gamma, 1.0, p, x);
            (h.eval(ps, xs) - r.h1.eval(p, x)).abs()
        })
        .fold(0.0, f64::max)
}

/// `t_tilde = tan(alpha t) / alpha`, the heat-flow time with the same induced
/// complex structure; monotone on `[0, pi / 2 alpha)` and divergent at the
/// right endpoint.
pub fn time_reparametrization(alpha: f64, t: f64) -> Result<f64> {
    let limit = std::f64::consts::FRAC_PI_2 / alpha;
    if !(0.0..limit).contains(&t) {
        return Err(Error::OutOfRange { t, limit });
    }
    Ok((alpha * t).tan() / alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    const I: C64 = C64::new(0.0, 1.0);

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn alpha_of_reference_hamiltonians() {
        assert_eq!(
            QuadraticHamiltonian::new(1.0, 0.0, -1.0).alpha().unwrap(),
            1.0
        );
        assert_eq!(
            QuadraticHamiltonian::new(1.0, 0.0, -4.0).alpha().unwrap(),
            2.0
        );
        // oracle: -(4 * -1 - 1) = 5
        assert!(
            (QuadraticHamiltonian::new(4.0, 1.0, -1.0).alpha().unwrap() - 5.0f64.sqrt()).abs()
                < 1e-15
        );
    }

    #[test]
    fn alpha_rejects_non_hyperbolic() {
        assert!(matches!(
            QuadraticHamiltonian::new(1.0, 0.0, 1.0).alpha(),
            Err(Error::NonHyperbolic { .. })
        ));
        assert!(QuadraticHamiltonian::free_particle().alpha().is_err());
    }

    #[test]
    fn generator_matches_vector_field() {
        assert_eq!(
            QuadraticHamiltonian::canonical(2.0).generator(),
            [[0.0, 4.0], [1.0, 0.0]]
        );
        assert_eq!(
            QuadraticHamiltonian::new(0.0, 1.0, 0.0).generator(),
            [[-1.0, 0.0], [0.0, 1.0]]
        );
        assert_eq!(
            QuadraticHamiltonian::new(0.0, 0.0, 1.0).generator(),
            [[0.0, -1.0], [0.0, 0.0]]
        );
    }

    #[test]
    fn generator_of_xp_matches_explicit_flow() {
        // H = xp has h12 = 1; its real flow is x_s = e^s x, p_s = e^{-s} p.
        let h = QuadraticHamiltonian::new(0.0, 1.0, 0.0);
        let eps = 1e-6;
        let s = flow_matrix(&h, eps, TimeAxis::Real);
        let (p1, x1) = s.apply(C64::new(0.7, 0.0), C64::new(-1.3, 0.0));
        assert!((p1.re - 0.7 * (-eps).exp()).abs() < 1e-12);
        assert!((x1.re - -1.3 * eps.exp()).abs() < 1e-12);
    }

    #[test]
    fn flow_matrix_canonical_quarter_period() {
        let h = QuadraticHamiltonian::canonical(1.0);
        let s = flow_matrix(&h, FRAC_PI_2, TimeAxis::Imaginary);
        assert!(close(s.entries[0][0], C64::new(0.0, 0.0), 1e-15));
        assert!(close(s.entries[0][1], I, 1e-15));
        assert!(close(s.entries[1][0], I, 1e-15));
        assert!(close(s.entries[1][1], C64::new(0.0, 0.0), 1e-15));
    }

    #[test]
    fn flow_matrix_identity_at_zero_and_unimodular() {
        let h = QuadraticHamiltonian::new(4.0, 1.0, -1.0);
        let s0 = flow_matrix(&h, 0.0, TimeAxis::Imaginary);
        assert!(close(s0.entries[0][0], C64::new(1.0, 0.0), 0.0));
        assert!(close(s0.entries[0][1], C64::new(0.0, 0.0), 0.0));
        let s = flow_matrix(&h, 0.3, TimeAxis::Imaginary);
        assert!((s.det() - 1.0).norm() < 1e-12);
    }

    #[test]
    fn free_particle_flow_is_a_shear() {
        let s = flow_matrix(&QuadraticHamiltonian::free_particle(), 0.7, TimeAxis::Imaginary);
        let (p1, x1) = s.apply(C64::new(2.0, 0.0), C64::new(1.0, 0.0));
        assert!(close(p1, C64::new(2.0, 0.0), 1e-15));
        assert!(close(x1, C64::new(1.0, 1.4), 1e-15));
    }

    #[test]
    fn holomorphic_coordinate_examples() {
        let h = QuadraticHamiltonian::canonical(1.0);
        let w = holomorphic_coordinate(&h, FRAC_PI_4).unwrap();
        let r = 0.5f64.sqrt();
        assert!(close(w.a, C64::new(r, 0.0), 1e-15));
        assert!(close(w.b, C64::new(0.0, r), 1e-15));
        let w0 = holomorphic_coordinate(&h, 0.0).unwrap();
        assert!(close(w0.a, C64::new(1.0, 0.0), 0.0));
        assert!(close(w0.b, C64::new(0.0, 0.0), 0.0));
        // momentum polarization at t = pi/2
        let wm = holomorphic_coordinate(&h, FRAC_PI_2).unwrap();
        assert!(close(wm.a, C64::new(0.0, 0.0), 1e-15));
        assert!(close(wm.b, I, 1e-15));
    }

    #[test]
    fn coordinate_is_top_row_of_flow() {
        let h = QuadraticHamiltonian::new(4.0, 1.0, -1.0);
        let t = 0.37;
        let w = holomorphic_coordinate(&h, t).unwrap();
        let s = flow_matrix(&h, t, TimeAxis::Imaginary);
        // x_tau = S[1][0] p + S[1][1] x
        assert!(close(w.a, s.entries[1][1], 1e-14));
        assert!(close(w.b, s.entries[1][0], 1e-14));
    }

    #[test]
    fn classification_four_cases() {
        let h = QuadraticHamiltonian::canonical(1.0);
        assert_eq!(
            classify_polarization(&h, FRAC_PI_4).unwrap(),
            PolarizationClass::Kahler
        );
        assert_eq!(
            classify_polarization(&h, 3.0 * FRAC_PI_4).unwrap(),
            PolarizationClass::AntiKahler
        );
        assert_eq!(
            classify_polarization(&h, 0.0).unwrap(),
            PolarizationClass::Schrodinger
        );
        assert_eq!(
            classify_polarization_exact(&h, PiRational::new(1, 2).unwrap()).unwrap(),
            PolarizationClass::RealLine { direction: (0.0, 1.0) }
        );
    }

    #[test]
    fn exact_classification_boundaries() {
        let h = QuadraticHamiltonian::canonical(1.0);
        for k in -4i64..=4 {
            let class = classify_polarization_exact(&h, PiRational::new(k, 1).unwrap()).unwrap();
            assert_eq!(class, PolarizationClass::Schrodinger, "k = {k}");
            let class = classify_polarization_exact(&h, PiRational::new(2 * k + 1, 2).unwrap())
                .unwrap();
            assert_eq!(
                class,
                PolarizationClass::RealLine { direction: (0.0, 1.0) },
                "k = {k}"
            );
        }
        assert_eq!(
            classify_polarization_exact(&h, PiRational::new(1, 4).unwrap()).unwrap(),
            PolarizationClass::Kahler
        );
        assert_eq!(
            classify_polarization_exact(&h, PiRational::new(3, 4).unwrap()).unwrap(),
            PolarizationClass::AntiKahler
        );
        assert_eq!(
            classify_polarization_exact(&h, PiRational::new(-1, 4).unwrap()).unwrap(),
            PolarizationClass::AntiKahler
        );
    }

    #[test]
    fn kahler_density_examples() {
        let h = QuadraticHamiltonian::canonical(1.0);
        assert!((kahler_density(&h, FRAC_PI_4).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(kahler_density(&h, 0.0).unwrap(), 0.0);
        assert!((kahler_density(&h, 3.0 * FRAC_PI_4).unwrap() + 0.5).abs() < 1e-15);
        // agrees with Im(conj(a) b) of the coordinate
        let t = 0.83;
        let w = holomorphic_coordinate(&h, t).unwrap();
        assert!((kahler_density(&h, t).unwrap() - w.kahler_density()).abs() < 1e-15);
    }

    #[test]
    fn reduction_examples() {
        let r = canonical_reduction(&QuadraticHamiltonian::new(4.0, 0.0, -1.0)).unwrap();
        assert!((r.beta - 2.0f64.ln()).abs() < 1e-15);
        assert_eq!(r.gamma, 0.0);
        assert_eq!(r.h1, QuadraticHamiltonian::new(1.0, 0.0, -4.0));

        let r = canonical_reduction(&QuadraticHamiltonian::canonical(1.0)).unwrap();
        assert_eq!(r.beta, 0.0);
        assert_eq!(r.gamma, 0.0);
        assert_eq!(r.h1, QuadraticHamiltonian::canonical(1.0));

        let h = QuadraticHamiltonian::new(2.0, 1.0, -1.0);
        let r = canonical_reduction(&h).unwrap();
        let beta = 0.5 * 2.0f64.ln();
        assert!((r.beta - beta).abs() < 1e-15);
        assert!((r.gamma - 0.5 * (beta / beta.sinh()) * beta.exp()).abs() < 1e-15);
        assert_eq!(r.h1, QuadraticHamiltonian::new(1.0, 0.0, -3.0));
        assert!(matches!(
            canonical_reduction(&QuadraticHamiltonian::new(0.0, 1.0, 0.0)),
            Err(Error::ZeroH11)
        ));
    }

    #[test]
    fn reduction_residual_anchors() {
        let grid: Vec<(f64, f64)> = (-5..=5)
            .flat_map(|i| (-5..=5).map(move |j| (0.6 * i as f64, 0.6 * j as f64)))
            .collect();
        let h = QuadraticHamiltonian::canonical(1.0);
        let r = canonical_reduction(&h).unwrap();
        assert_eq!(reduction_pullback_residual(&h, &r, &grid), 0.0);

        for h in [
            QuadraticHamiltonian::new(4.0, 0.0, -1.0),
            QuadraticHamiltonian::new(2.0, 1.0, -1.0),
        ] {
            let r = canonical_reduction(&h).unwrap();
            assert!(reduction_pullback_residual(&h, &r, &grid) < 1e-10, "{h:?}");
        }
    }

    #[test]
    fn time_reparametrization_examples() {
        assert!((time_reparametrization(1.0, FRAC_PI_4).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(time_reparametrization(3.0, 0.0).unwrap(), 0.0);
        assert!((time_reparametrization(2.0, 0.5).unwrap() - 1.0f64.tan() / 2.0).abs() < 1e-15);
        assert!(time_reparametrization(1.0, FRAC_PI_2).is_err());
        assert!(time_reparametrization(1.0, -0.1).is_err());
    }

    #[test]
    fn reparametrized_coordinate_rescales() {
        // w_tau = cos(alpha t) * (x + i t_tilde p) componentwise
        let alpha = 2.0;
        let t = 0.5;
        let tt = time_reparametrization(alpha, t).unwrap();
        let w = holomorphic_coordinate(&QuadraticHamiltonian::canonical(alpha), t).unwrap();
        let c = (alpha * t).cos();
        assert!(close(w.a, C64::new(c, 0.0), 1e-15));
        assert!(close(w.b, C64::new(0.0, c * tt), 1e-15));
    }

    #[test]
    fn coordinate_periodicity() {
        let h = QuadraticHamiltonian::new(4.0, 1.0, -1.0);
        let alpha = h.alpha().unwrap();
        let t = 0.9;
        let w1 = holomorphic_coordinate(&h, t).unwrap();
        let w2 = holomorphic_coordinate(&h, t + 2.0 * PI / alpha).unwrap();
        assert!(close(w1.a, w2.a, 1e-12));
        assert!(close(w1.b, w2.b, 1e-12));
    }
}
