//! The operator content: the non-Hermitian heat semigroup on Gaussians, the
//! prequantum evolution to polarized phase-space sections, their composition
//! (the half-form corrected coherent state transform `U_tau`), the Fourier
//! endpoint, the Segal-Bargmann family, and the quadratic conjugation
//! operators reducing general hyperbolic Hamiltonians to the canonical one.

use num_complex::Complex64 as C64;

use crate::dynamics::{
    canonical_reduction, flow_matrix, holomorphic_coordinate, HolomorphicCoordinate,
    QuadraticHamiltonian, TimeAxis,
};
use crate::error::{Error, Result};
use crate::states::{coherent_state, HalfFormFrame, LineGaussian, PhaseSpaceGaussian};

const I: C64 = C64::new(0.0, 1.0);

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// `sin(z)/z` with the removable singularity expanded.
fn sinc(z: f64) -> f64 {
    if z.abs() < 1e-4 {
        let z2 = z * z;
        1.0 - z2 / 6.0 * (1.0 - z2 / 20.0)
    } else {
        z.sin() / z
    }
}

/// Time integral of `L_H = (p^2 + alpha^2 x^2) / 2` along the complexified
/// trajectory through `(p0, x0)`:
/// `(sin(2 alpha t) / 4 alpha)(p0^2 + alpha^2 x0^2) + i sin^2(alpha t) p0 x0`.
///
/// Valid for complex arguments and for `alpha = 0` (free particle), where it
/// degenerates to `t p0^2 / 2`.
fn action_integral(alpha: f64, t: f64, p0: C64, x0: C64) -> C64 {
    let g = 0.5 * t * sinc(2.0 * alpha * t);
    let s = alpha * t * sinc(alpha * t); // sin(alpha t)
    g * (p0 * p0 + c(alpha * alpha) * x0 * x0) + I * c(s * s) * p0 * x0
}

/// Imaginary-time flow entries for `H = (p^2 - alpha^2 x^2)/2` (or the free
/// particle at `alpha = 0`) applied to a complex phase-space point.
fn canonical_flow(alpha: f64, t: f64, p0: C64, x0: C64) -> (C64, C64) {
    let ct = (alpha * t).cos();
    let s_over = t * sinc(alpha * t); // sin(alpha t) / alpha
    let p_t = c(ct) * p0 + I * c(alpha * alpha * s_over) * x0;
    let x_t = I * c(s_over) * p0 + c(ct) * x0;
    (p_t, x_t)
}

/// Holomorphic coordinate of the evolved vertical polarization for the
/// canonical family, `w = cos(alpha t) x + i (sin(alpha t)/alpha) p`;
/// at `alpha = 0` this is `x + i t p`.
fn canonical_coordinate(alpha: f64, t: f64) -> HolomorphicCoordinate {
    HolomorphicCoordinate::new(
        c((alpha * t).cos()),
        I * c(t * sinc(alpha * t)),
    )
}

/// Closed-form data of the coherent-state image under the semigroup:
/// the auxiliary angle `tan(theta) = alpha`, the evolved width
/// `b_tau = alpha cot(theta + alpha t)`, the absolute prefactor, and the
/// center action integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KshClosedForm {
    pub theta: f64,
    pub b_tau: C64,
    pub prefactor_abs: f64,
    pub action_centers: C64,
}

pub fn ksh_closed_form(alpha: f64, t: f64, y: (f64, f64)) -> Result<KshClosedForm> {
    if alpha <= 0.0 {
        return Err(Error::InvalidArgument("alpha must be positive".into()));
    }
    let theta = alpha.atan();
    let denom = (theta + alpha * t).sin();
    if denom.abs() < 1e-13 {
        return Err(Error::SingularTime);
    }
    Ok(KshClosedForm {
        theta,
        b_tau: c(alpha * (theta + alpha * t).cos() / denom),
        prefactor_abs: (theta.sin() / denom).abs().sqrt(),
        action_centers: action_integral(alpha, t, c(y.0), c(y.1)),
    })
}

/// `exp(-t H_hat)` applied to the coherent state at `Y = (P, Q)`, in the
/// trigonometric closed form.
pub fn heat_semigroup(alpha: f64, t: f64, y: (f64, f64)) -> Result<LineGaussian> {
    let cf = ksh_closed_form(alpha, t, y)?;
    let s = flow_matrix(&QuadraticHamiltonian::canonical(alpha), t, TimeAxis::Imaginary);
    let (p_t, q_t) = s.apply(c(y.0), c(y.1));
    Ok(LineGaussian {
        prefactor: c(std::f64::consts::PI.powf(-0.5) * cf.prefactor_abs) * cf.action_centers.exp(),
        center_p: p_t,
        center_q: q_t,
        width: cf.b_tau,
        frame: HalfFormFrame::dx(),
    })
}

/// `exp(-t H_hat)` on an arbitrary wavepacket: the width moves by the Mobius
/// action of the flow, the centers by the linear flow, and the prefactor by
/// the derived log-derivative `C'/C = -b/2 + (P^2 + alpha^2 Q^2)/2`.
///
/// `alpha = 0` gives the free heat evolution.
pub fn heat_evolve(alpha: f64, t: f64, state: &LineGaussian) -> Result<LineGaussian> {
    let b0 = state.width;
    let ct = (alpha * t).cos();
    let s_over = t * sinc(alpha * t); // sin(alpha t) / alpha
    let y = c(ct) + b0 * s_over;
    if y.norm() < 1e-13 {
        return Err(Error::SingularTime);
    }
    let b_t = (b0 * ct - c(alpha * alpha * s_over)) / y;
    let (p_t, q_t) = canonical_flow(alpha, t, state.center_p, state.center_q);
    let action = action_integral(alpha, t, state.center_p, state.center_q);
    Ok(LineGaussian {
        prefactor: state.prefactor / y.sqrt() * action.exp(),
        center_p: p_t,
        center_q: q_t,
        width: b_t,
        frame: state.frame,
    })
}

/// `exp(+t rho(H))` on a vertical wavepacket: substitute the evolved
/// coordinate `w_t` for the base variable, multiply by
/// `exp(-int_0^t L_H(p_is, x_is) ds)` as a function of the base point, and
/// relabel the half-form to `sqrt(dw_t)`.
///
/// The result is centered at the origin; use
/// [`PhaseSpaceGaussian::recenter`] to move the reference point.
pub fn prequantum_evolution(alpha: f64, t: f64, psi: &LineGaussian) -> PhaseSpaceGaussian {
    let w = canonical_coordinate(alpha, t);
    // quadratic form of the action factor over u = (x, p)
    let g = 0.5 * t * sinc(2.0 * alpha * t);
    let s = alpha * t * sinc(alpha * t);
    let mut quad = [
        [c(2.0 * g * alpha * alpha), I * c(s * s)],
        [I * c(s * s), c(2.0 * g)],
    ];
    // substituted Gaussian: -i P (w - Q) - (b/2)(w - Q)^2 with w = a x + b_w p
    let (a, bw) = (w.a, w.b);
    let b = psi.width;
    quad[0][0] += b * a * a;
    quad[0][1] += b * a * bw;
    quad[1][0] += b * a * bw;
    quad[1][1] += b * bw * bw;
    let lin_coeff = -I * psi.center_p + b * psi.center_q;
    let lin = [lin_coeff * a, lin_coeff * bw];
    let constant = I * psi.center_p * psi.center_q - b * psi.center_q * psi.center_q / 2.0;
    PhaseSpaceGaussian::from_poly(
        psi.prefactor * constant.exp(),
        quad,
        lin,
        (0.0, 0.0),
        HalfFormFrame::new(w),
    )
}

/// The half-form corrected coherent state transform at imaginary time `i t`
/// for `H = (p^2 - alpha^2 x^2)/2`, applied to the coherent state at
/// `Y = (P, Q)`, in the direct closed form.
pub fn ksh_transform(alpha: f64, t: f64, y: (f64, f64)) -> Result<PhaseSpaceGaussian> {
    if alpha <= 0.0 {
        return Err(Error::InvalidArgument("alpha must be positive".into()));
    }
    let theta = alpha.atan();
    let (st, ct) = (alpha * t).sin_cos();
    let d = (theta + alpha * t).sin();
    if d.abs() < 1e-13 {
        return Err(Error::SingularTime);
    }
    let (sth, cth) = theta.sin_cos();
    let cross = I * c(cth * st / d);
    Ok(PhaseSpaceGaussian {
        prefactor: c(std::f64::consts::PI.powf(-0.5) * (sth / d).abs().sqrt()),
        center: y,
        quad_form: [[c(sth * ct / d), cross], [cross, c(cth * st / d)]],
        linear: [c(y.0), c(0.0)],
        frame: HalfFormFrame::new(canonical_coordinate(alpha, t)),
    })
}

/// The same transform computed through its factorization: heat semigroup
/// followed by prequantum evolution. Kept as an independent route; must agree
/// with [`ksh_transform`] to high accuracy.
pub fn ksh_factorized(alpha: f64, t: f64, y: (f64, f64)) -> Result<PhaseSpaceGaussian> {
    let line = heat_semigroup(alpha, t, y)?;
    Ok(prequantum_evolution(alpha, t, &line).recenter(y))
}

/// `(F psi)(p) = (2 pi)^{-1/2} int e^{i p x} psi(x) dx` in closed form,
/// landing in the momentum frame `sqrt(dp)`.
pub fn fourier_on_gaussian(psi: &LineGaussian) -> Result<LineGaussian> {
    if psi.width.re <= 0.0 {
        return Err(Error::DivergentIntegral);
    }
    Ok(LineGaussian {
        prefactor: psi.prefactor / psi.width.sqrt()
            * (I * psi.center_p * psi.center_q).exp(),
        center_p: -psi.center_q,
        center_q: psi.center_p,
        width: 1.0 / psi.width,
        frame: HalfFormFrame::dp(),
    })
}

/// The Segal-Bargmann transform at heat time `t_tilde >= 0` on the coherent
/// state at `Y`, via the same engine run with the free-particle Hamiltonian.
/// Output frame coordinate is `x + i t_tilde p`.
pub fn segal_bargmann(t_tilde: f64, y: (f64, f64)) -> Result<PhaseSpaceGaussian> {
    if t_tilde < 0.0 {
        return Err(Error::OutOfRange {
            t: t_tilde,
            limit: f64::INFINITY,
        });
    }
    let line = heat_evolve(0.0, t_tilde, &coherent_state(y.0, y.1))?;
    Ok(prequantum_evolution(0.0, t_tilde, &line).recenter(y))
}

fn chirp_rate(beta: f64, gamma: f64, s: f64) -> f64 {
    // gamma (e^{2 s beta} - 1) / (4 beta), with the beta -> 0 limit gamma s / 2
    if beta == 0.0 {
        gamma * s / 2.0
    } else {
        gamma * (2.0 * s * beta).exp_m1() / (4.0 * beta)
    }
}

/// `exp(-i s f_hat)` for `f = beta x p + (gamma/2) x^2`: pullback by the
/// dilation `x -> e^{s beta} x`, half-form factor `e^{s beta / 2}`, and the
/// chirp phase accumulated from `L_f = -(gamma/2) x^2` along the flow.
/// Unitary for all real `s`.
pub fn dilation_phase_unitary(beta: f64, gamma: f64, s: f64, psi: &LineGaussian) -> LineGaussian {
    let lambda = (s * beta).exp();
    let mu = chirp_rate(beta, gamma, s);
    let q = psi.center_q / lambda;
    let mut p = psi.center_p * lambda;
    let mut b = psi.width * lambda * lambda;
    let mut prefactor = psi.prefactor * c(lambda.sqrt());
    // e^{-i mu x^2} recentred at q
    b += 2.0 * I * mu;
    p += 2.0 * mu * q;
    prefactor *= (-I * mu * q * q).exp();
    LineGaussian {
        prefactor,
        center_p: p,
        center_q: q,
        width: b,
        frame: psi.frame,
    }
}

/// Pullback of a phase-space section through the real linear map `T` acting
/// on `(x, p)` columns, combined with multiplication by
/// `exp(-u^T extra u / 2)`.
fn pullback_phase_space(
    g: &PhaseSpaceGaussian,
    t_map: [[f64; 2]; 2],
    extra_quad: [[C64; 2]; 2],
    new_frame: HalfFormFrame,
    center: (f64, f64),
) -> PhaseSpaceGaussian {
    let g0 = g.recenter((0.0, 0.0));
    // absolute polynomial of g0: exp(-u^T q u / 2 + l.u)
    let q = g0.quad_form;
    let l = [-I * g0.linear[0], -I * g0.linear[1]];
    let t = [
        [c(t_map[0][0]), c(t_map[0][1])],
        [c(t_map[1][0]), c(t_map[1][1])],
    ];
    // q' = T^t q T + extra, l' = T^t l
    let mut qp = [[c(0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = extra_quad[i][j];
            for k in 0..2 {
                for m in 0..2 {
                    acc += t[k][i] * q[k][m] * t[m][j];
                }
            }
            qp[i][j] = acc;
        }
    }
    let lp = [
        t[0][0] * l[0] + t[1][0] * l[1],
        t[0][1] * l[0] + t[1][1] * l[1],
    ];
    PhaseSpaceGaussian::from_poly(g0.prefactor, qp, lp, center, new_frame)
}

/// Coherent state transform for a general hyperbolic `H` with `h11 != 0`,
/// computed through the reduction route: conjugate the canonical transform of
/// the diagonalized Hamiltonian by the dilation-chirp unitary and the
/// prequantum lift of its generating flow. Output frame is the evolved
/// coordinate of `H` itself.
pub fn ksh_conjugated(
    h: &QuadraticHamiltonian,
    t: f64,
    y: (f64, f64),
) -> Result<PhaseSpaceGaussian> {
    let alpha = h.alpha()?;
    let red = canonical_reduction(h)?;
    let sigma = h.h11.signum();
    let t1 = sigma * t;

    // U^H = exp(-i rho(f)) o U^{H1} o exp(+i f_hat), and H1 = sigma * H_canonical
    let psi1 = dilation_phase_unitary(red.beta, red.gamma, -1.0, &coherent_state(y.0, y.1));
    let line = heat_evolve(alpha, t1, &psi1)?;
    let g1 = prequantum_evolution(alpha, t1, &line);

    // exp(-i rho(f)): pull back through the time-one flow of X_f, multiply by
    // the chirp phase, and relabel the half-form to the pulled-back coordinate.
    let (beta, gamma) = (red.beta, red.gamma);
    let lambda = beta.exp();
    let shear = if beta.abs() < 1e-12 {
        -gamma
    } else {
        -gamma / beta * beta.sinh()
    };
    // (x, p) -> (e^beta x, shear * x + e^{-beta} p)
    let t_map = [[lambda, 0.0], [shear, 1.0 / lambda]];
    let mu = chirp_rate(beta, gamma, 1.0);
    let extra = [[2.0 * I * mu, c(0.0)], [c(0.0), c(0.0)]];
    let w1 = g1.frame.coordinate;
    let pulled = HolomorphicCoordinate::new(
        w1.a * lambda + w1.b * shear,
        w1.b / lambda,
    );
    let g = pullback_phase_space(&g1, t_map, extra, HalfFormFrame::new(pulled), y);
    g.into_frame(HalfFormFrame::new(holomorphic_coordinate(h, t)?))
}
