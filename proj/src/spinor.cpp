#include "kerrspin/spinor.hpp"

#include <cmath>
#include <sstream>

#include "kerrspin/marck.hpp"

namespace kerrspin {

namespace {

constexpr double kTurningPointEps = 1e-10;
const complexd kI{0.0, 1.0};

Eigen::Matrix2cd pauli(int i) {
    Eigen::Matrix2cd s;
    switch (i) {
        case 1: s << 0, 1, 1, 0; break;
        // The Hermitian sigma^2; the Clifford relations pin this choice.
        case 2: s << 0, -kI, kI, 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

}  // namespace

GammaAlgebra clifford_basis() {
    GammaAlgebra g;
    g.gamma[0].setZero();
    g.gamma[0].block<2, 2>(0, 0) = Eigen::Matrix2cd::Identity();
    g.gamma[0].block<2, 2>(2, 2) = -Eigen::Matrix2cd::Identity();
    for (int i = 1; i < 4; ++i) {
        g.gamma[i].setZero();
        g.gamma[i].block<2, 2>(0, 2) = pauli(i);
        g.gamma[i].block<2, 2>(2, 0) = -pauli(i);
    }
    return g;
}

Matrix4cd GammaAlgebra::sigma(int a, int b) const {
    return 0.5 * kI * (gamma[a] * gamma[b] - gamma[b] * gamma[a]);
}

Matrix4cd GammaAlgebra::sigma_lower(int a, int b) const {
    const double ea = (a == 0) ? 1.0 : -1.0;
    const double eb = (b == 0) ? 1.0 : -1.0;
    return ea * eb * sigma(a, b);
}

BasisSpinors basis_spinors(const Eigen::Vector4d& p, double m) {
    const double norm2 = p(0) * p(0) - p(1) * p(1) - p(2) * p(2) - p(3) * p(3);
    if (!(norm2 > 0.0)) {
        throw DomainError("basis_spinors: momentum is not timelike");
    }
    if (!(p(0) > 0.0)) {
        throw DomainError("basis_spinors: momentum is past-pointing");
    }
    const double E = p(0);
    const double pref = std::sqrt((E + m) / (2.0 * m));
    const complexd p12p{p(1), p(2)};   // p1 + i p2
    const complexd p12m{p(1), -p(2)};  // p1 - i p2
    const double p3 = p(3);
    const double denom = E + m;

    BasisSpinors b;
    b.b01 << 1.0, 0.0, p3 / denom, p12p / denom;
    b.b02 << 0.0, 1.0, p12m / denom, -p3 / denom;
    b.b11 << p3 / denom, p12p / denom, 1.0, 0.0;
    b.b12 << p12m / denom, -p3 / denom, 0.0, 1.0;
    b.b01 *= pref;
    b.b02 *= pref;
    b.b11 *= pref;
    b.b12 *= pref;
    return b;
}

SpinVectorPP spin_vector_pp(const SpinorConstants& sc) {
    const complexd c1 = sc.c1, c2 = sc.c2, d1 = sc.d1, d2 = sc.d2;
    const double n = std::norm(c1) + std::norm(c2);
    if (!(n > 0.0)) {
        throw DomainError("spin_vector_pp: |c1|^2 + |c2|^2 must be positive");
    }

    Vector4cd w0;
    w0 << 0.0, std::conj(c1) * c2 + std::conj(c2) * c1,
        kI * (std::conj(c1) * c2 - std::conj(c2) * c1),
        std::conj(c2) * c2 - std::conj(c1) * c1;
    w0 /= n;

    const complexd c0 = (std::conj(c1) * d1 + std::conj(c2) * d2) -
                        (std::conj(d1) * c1 + std::conj(d2) * c2);
    Vector4cd q;
    q << 0.0,
        (std::conj(d1) * c2 + std::conj(d2) * c1) - (std::conj(c1) * d2 + std::conj(c2) * d1),
        kI * ((std::conj(c2) * d1 + std::conj(d1) * c2) -
              (std::conj(c1) * d2 + std::conj(d2) * c1)),
        (std::conj(c1) * d1 + std::conj(d2) * c2) - (std::conj(d1) * c1 + std::conj(c2) * d2);
    const Vector4cd w1 = (kI / n) * (c0 * w0 + q);

    SpinVectorPP out;
    out.W0 = w0.real();
    out.W1 = w1.real();
    return out;
}

namespace {

/// Shared scalars for the amplitude derivatives.
struct AmpContext {
    double R, Theta, s, beta_over_c;  // beta = c * beta_over_c
    double Rp, Thp;                   // dR/dr, dTheta/dtheta
    double dlnr, dlnth;               // beta_r/beta = -dlnr/2, likewise theta
    double theta_exp;                 // d/dtau ln(R Theta sin theta)
};

AmpContext amp_context(const GeodesicState& state, double kappa, const BlackHoleParams& bh) {
    const double r = state.point.r;
    const double th = state.point.theta;
    const double s = std::sin(th);
    const double c = std::cos(th);

    const MetricComponents mc = metric_at(state.point, bh);
    const Eigen::Vector4d u_cov = mc.g * state.velocity;
    const ConservedSet cs{u_cov(0), -u_cov(3), kappa};
    const Potentials pot = potentials_at(r, th, cs, bh);

    if (!(pot.R > kTurningPointEps) || !(pot.Theta > kTurningPointEps) || !(s > 0.0)) {
        std::ostringstream os;
        os << "semiclassical breakdown: R=" << pot.R << ", Theta=" << pot.Theta
           << " too close to a turning point";
        throw DomainError(os.str());
    }

    AmpContext ac;
    ac.R = pot.R;
    ac.Theta = pot.Theta;
    ac.s = s;
    ac.beta_over_c = 1.0 / std::sqrt(pot.R * pot.Theta * s);
    const double dprime = 2.0 * r - 2.0 * bh.M;
    ac.Rp = 4.0 * cs.E * pot.P * r - dprime * (kappa + r * r) - 2.0 * delta_of(r, bh) * r;
    const double Dp = c * (bh.a * cs.E + cs.Lz / (s * s));
    ac.Thp = 2.0 * bh.a * bh.a * c * s - 2.0 * pot.D * Dp;
    ac.dlnr = ac.Rp / pot.R;
    ac.dlnth = ac.Thp / pot.Theta + c / s;
    ac.theta_exp = ac.dlnr * state.velocity(1) + ac.dlnth * state.velocity(2);
    return ac;
}

}  // namespace

ScalarAmplitude scalar_amplitude(const GeodesicState& state, double kappa, complexd cc,
                                 double chi, const BlackHoleParams& bh) {
    const AmpContext ac = amp_context(state, kappa, bh);
    const double r = state.point.r;
    const double th = state.point.theta;
    const double c = std::cos(th);
    const double sigma = sigma_of(r, th, bh);

    ScalarAmplitude out;
    out.beta = cc * ac.beta_over_c;
    out.theta_exp = ac.theta_exp;

    // Closed forms in terms of the frame's building blocks.
    const MetricComponents mc = metric_at(state.point, bh);
    const Eigen::Vector4d u_cov = mc.g * state.velocity;
    const ConservedSet cs{u_cov(0), -u_cov(3), kappa};
    const Potentials pot = potentials_at(r, th, cs, bh);
    const double SR = sigma * state.velocity(1);
    const double STh = sigma * state.velocity(2);
    const double ac2 = bh.a * c;
    const double pf = std::sqrt((kappa - ac2 * ac2) / (r * r + kappa));
    const double sqk = std::sqrt(kappa);

    const complexd half_beta = -0.5 * out.beta;
    out.deriv_closed[0] = half_beta * ac.theta_exp;
    const complexd d_lt1 =
        half_beta / (sqk * sigma) * (pf * r * pot.P * ac.dlnr + ac2 * pot.D / pf * ac.dlnth);
    const complexd d_lt2 = half_beta / sigma * (pf * SR * ac.dlnr + STh / pf * ac.dlnth);
    out.deriv_closed[1] = std::cos(chi) * d_lt1 - std::sin(chi) * d_lt2;
    out.deriv_closed[2] = std::sin(chi) * d_lt1 + std::cos(chi) * d_lt2;
    out.deriv_closed[3] =
        half_beta / (sqk * sigma) * (ac2 * pot.P * ac.dlnr - r * pot.D * ac.dlnth);

    // Independent path: analytic partials of beta contracted with the
    // coordinate components of the parallel-propagated legs.
    const complexd beta_r = half_beta * ac.dlnr;
    const complexd beta_th = half_beta * ac.dlnth;
    const MarckFrame mf = marck_frame_at(state, kappa, chi, bh);
    for (int a = 0; a < 4; ++a) {
        out.deriv_direct[a] = beta_r * mf.legs[a](1) + beta_th * mf.legs[a](2);
    }
    return out;
}

double verify_gordon_r_term(const GeodesicState& state, double kappa, complexd c1_amp,
                            complexd c2_amp, double chi, const BlackHoleParams& bh) {
    const ScalarAmplitude a1 = scalar_amplitude(state, kappa, c1_amp, chi, bh);
    const ScalarAmplitude a2 = scalar_amplitude(state, kappa, c2_amp, chi, bh);
    const complexd b1 = a1.beta, b2 = a2.beta;
    const double f2 = std::norm(b1) + std::norm(b2);
    if (!(f2 > 0.0)) throw DomainError("verify_gordon_r_term: zero amplitudes");

    auto pairing = [&](int i) {
        return a1.deriv_closed[i] * std::conj(b1) - std::conj(a1.deriv_closed[i]) * b1 +
               a2.deriv_closed[i] * std::conj(b2) - std::conj(a2.deriv_closed[i]) * b2;
    };
    const complexd t1 = (std::conj(b1) * b2 + std::conj(b2) * b1) * pairing(1);
    const complexd t2 = kI * (std::conj(b1) * b2 - std::conj(b2) * b1) * pairing(2);
    const complexd t3 = (std::conj(b2) * b2 - std::conj(b1) * b1) * pairing(3);
    const double m = 1.0;
    const complexd r0 = (t1 + t2 + t3) / (2.0 * m * kI * f2 * f2);
    return std::abs(r0);
}

}  // namespace kerrspin
