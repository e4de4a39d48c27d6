#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "kerrspin/geodesic.hpp"
#include "kerrspin/geometry.hpp"

namespace kerrspin {

using Matrix4cd = Eigen::Matrix4cd;
using Vector4cd = Eigen::Vector4cd;
using complexd = std::complex<double>;

/// Standard (Dirac) representation of the gamma matrices together with the
/// Lorentz generators sigma^{ab} = (i/2)[gamma^a, gamma^b].
struct GammaAlgebra {
    std::array<Matrix4cd, 4> gamma;

    Matrix4cd sigma(int a, int b) const;
    /// sigma with both indices lowered by eta.
    Matrix4cd sigma_lower(int a, int b) const;
};

GammaAlgebra clifford_basis();

/// The four basis 4-spinors for momentum p (orthonormal-frame components,
/// p^0 = E > 0, eta p.p = m^2): b01, b02 span ker(gamma^a p_a - m),
/// b11, b12 the orthogonal complement. Throws DomainError for spacelike or
/// past-pointing momenta.
struct BasisSpinors {
    Vector4cd b01, b02, b11, b12;
};

BasisSpinors basis_spinors(const Eigen::Vector4d& p_frame, double m);

/// Integration constants of the semiclassical amplitudes plus the formal
/// expansion knob hbar (dimensionless, default 0).
struct SpinorConstants {
    complexd c1{1.0, 0.0};
    complexd c2{0.0, 0.0};
    complexd d1{0.0, 0.0};
    complexd d2{0.0, 0.0};
    double hbar = 0.0;
};

/// Series coefficients of the spin vector in the parallel-propagated frame;
/// both are constant along the trajectory. Components are real.
struct SpinVectorPP {
    Eigen::Vector4d W0;
    Eigen::Vector4d W1;

    Eigen::Vector4d combined(double hbar) const { return W0 + hbar * W1; }
};

/// Closed forms of W0 and W1 from the spinor constants. Throws DomainError
/// when |c1|^2 + |c2|^2 = 0.
SpinVectorPP spin_vector_pp(const SpinorConstants& sc);

/// Scalar amplitude beta = c / sqrt(R Theta sin(theta)) together with its
/// expansion rate theta_exp and the four frame directional derivatives,
/// computed both from the closed forms and by direct contraction of the
/// analytic partials with the parallel-propagated legs.
struct ScalarAmplitude {
    complexd beta;
    double theta_exp = 0.0;  // d/dtau ln(R Theta sin theta)
    std::array<complexd, 4> deriv_closed;
    std::array<complexd, 4> deriv_direct;
};

/// Throws DomainError ("semiclassical breakdown") within eps_tp = 1e-10 of a
/// turning point (R or Theta) or at the poles.
ScalarAmplitude scalar_amplitude(const GeodesicState& state, double kappa, complexd c,
                                 double chi, const BlackHoleParams& bh);

/// Evaluates the timelike component of the polarization correction term that
/// the propagation theorem shows to cancel; returns |R^(0)| (mass set to 1).
double verify_gordon_r_term(const GeodesicState& state, double kappa, complexd c1_amp,
                            complexd c2_amp, double chi, const BlackHoleParams& bh);

}  // namespace kerrspin
