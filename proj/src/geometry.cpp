#include "kerrspin/geometry.hpp"

#include <cmath>
#include <sstream>

namespace kerrspin {

BlackHoleParams::BlackHoleParams(double mass, double spin) : M(mass), a(spin) {
    if (!(M > 0.0) || !(a >= 0.0) || !(M > a)) {
        std::ostringstream os;
        os << "non-extreme case violated: require M > a >= 0, got M=" << mass
           << " a=" << spin;
        throw ConfigError(os.str());
    }
}

double BlackHoleParams::outer_horizon() const { return M + std::sqrt(M * M - a * a); }
double BlackHoleParams::inner_horizon() const { return M - std::sqrt(M * M - a * a); }

double sigma_of(double r, double theta, const BlackHoleParams& bh) {
    const double c = std::cos(theta);
    return r * r + bh.a * bh.a * c * c;
}

double delta_of(double r, const BlackHoleParams& bh) {
    return r * r - 2.0 * bh.M * r + bh.a * bh.a;
}

void require_exterior(const SpacetimePoint& p, const BlackHoleParams& bh) {
    if (!(p.r > bh.outer_horizon())) {
        std::ostringstream os;
        os << "point at r=" << p.r << " is not outside the outer horizon r+="
           << bh.outer_horizon();
        throw DomainError(os.str());
    }
    if (!(p.theta >= kPoleMargin && p.theta <= M_PI - kPoleMargin)) {
        std::ostringstream os;
        os << "theta=" << p.theta << " lies in the polar exclusion band (coordinate "
           << "degeneracy at the axis)";
        throw DomainError(os.str());
    }
}

namespace {

struct MetricScratch {
    double s, c, s2;        // sin, cos, sin^2
    double sigma, delta, A; // A = r^2 + a^2
};

MetricScratch scratch_at(const SpacetimePoint& p, const BlackHoleParams& bh) {
    MetricScratch m;
    m.s = std::sin(p.theta);
    m.c = std::cos(p.theta);
    m.s2 = m.s * m.s;
    m.sigma = sigma_of(p.r, p.theta, bh);
    m.delta = delta_of(p.r, bh);
    m.A = p.r * p.r + bh.a * bh.a;
    return m;
}

}  // namespace

MetricComponents metric_at(const SpacetimePoint& p, const BlackHoleParams& bh) {
    require_exterior(p, bh);
    const MetricScratch m = scratch_at(p, bh);
    const double a = bh.a;

    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    g(0, 0) = (m.delta - a * a * m.s2) / m.sigma;
    g(0, 3) = 2.0 * bh.M * p.r * a * m.s2 / m.sigma;
    g(3, 0) = g(0, 3);
    g(1, 1) = -m.sigma / m.delta;
    g(2, 2) = -m.sigma;
    g(3, 3) = -m.s2 * (m.A * m.A - m.delta * a * a * m.s2) / m.sigma;

    // Block inverse: the t-phi block is 2x2, r and theta are diagonal.
    const double det2 = g(0, 0) * g(3, 3) - g(0, 3) * g(0, 3);
    Eigen::Matrix4d ginv = Eigen::Matrix4d::Zero();
    ginv(0, 0) = g(3, 3) / det2;
    ginv(3, 3) = g(0, 0) / det2;
    ginv(0, 3) = -g(0, 3) / det2;
    ginv(3, 0) = ginv(0, 3);
    ginv(1, 1) = 1.0 / g(1, 1);
    ginv(2, 2) = 1.0 / g(2, 2);
    return {g, ginv};
}

std::array<Eigen::Matrix4d, 2> metric_derivatives_at(const SpacetimePoint& p,
                                                     const BlackHoleParams& bh) {
    require_exterior(p, bh);
    const MetricScratch m = scratch_at(p, bh);
    const double a = bh.a, M = bh.M, r = p.r;
    const double dDelta = 2.0 * r - 2.0 * M;
    const double dSigma_r = 2.0 * r;
    const double dSigma_th = -2.0 * a * a * m.s * m.c;
    const double sig2 = m.sigma * m.sigma;

    Eigen::Matrix4d dr = Eigen::Matrix4d::Zero();
    Eigen::Matrix4d dth = Eigen::Matrix4d::Zero();

    // g_tt = (Delta - a^2 s^2)/Sigma
    const double Ntt = m.delta - a * a * m.s2;
    dr(0, 0) = (dDelta * m.sigma - Ntt * dSigma_r) / sig2;
    dth(0, 0) = (-2.0 * a * a * m.s * m.c * m.sigma - Ntt * dSigma_th) / sig2;

    // g_tphi = 2 M a r s^2 / Sigma
    const double Ntp = 2.0 * M * a * r * m.s2;
    dr(0, 3) = (2.0 * M * a * m.s2 * m.sigma - Ntp * dSigma_r) / sig2;
    dth(0, 3) = (4.0 * M * a * r * m.s * m.c * m.sigma - Ntp * dSigma_th) / sig2;
    dr(3, 0) = dr(0, 3);
    dth(3, 0) = dth(0, 3);

    // g_rr = -Sigma/Delta
    dr(1, 1) = -(dSigma_r * m.delta - m.sigma * dDelta) / (m.delta * m.delta);
    dth(1, 1) = -dSigma_th / m.delta;

    // g_thth = -Sigma
    dr(2, 2) = -dSigma_r;
    dth(2, 2) = -dSigma_th;

    // g_phiphi = -s^2 (A^2 - Delta a^2 s^2)/Sigma
    const double B = m.A * m.A - m.delta * a * a * m.s2;
    const double dB_r = 4.0 * r * m.A - dDelta * a * a * m.s2;
    const double dB_th = -2.0 * m.delta * a * a * m.s * m.c;
    dr(3, 3) = -m.s2 * (dB_r * m.sigma - B * dSigma_r) / sig2;
    dth(3, 3) = -((2.0 * m.s * m.c * B + m.s2 * dB_th) * m.sigma - m.s2 * B * dSigma_th) / sig2;

    return {dr, dth};
}

std::array<Eigen::Matrix4d, 4> christoffels_at(const SpacetimePoint& p,
                                               const BlackHoleParams& bh) {
    const MetricComponents mc = metric_at(p, bh);
    const auto dg = metric_derivatives_at(p, bh);

    // dgfull[lambda](mu,nu) = d_lambda g_{mu nu}; only r (1) and theta (2) act.
    std::array<Eigen::Matrix4d, 4> dgfull;
    dgfull[0].setZero();
    dgfull[1] = dg[0];
    dgfull[2] = dg[1];
    dgfull[3].setZero();

    std::array<Eigen::Matrix4d, 4> gamma;
    for (int mu = 0; mu < 4; ++mu) {
        gamma[mu].setZero();
        for (int al = 0; al < 4; ++al) {
            for (int be = al; be < 4; ++be) {
                double sum = 0.0;
                for (int nu = 0; nu < 4; ++nu) {
                    sum += mc.ginv(mu, nu) *
                           (dgfull[al](nu, be) + dgfull[be](nu, al) - dgfull[nu](al, be));
                }
                gamma[mu](al, be) = 0.5 * sum;
                gamma[mu](be, al) = gamma[mu](al, be);
            }
        }
    }
    return gamma;
}

SymmetricFrame symmetric_frame_at(const SpacetimePoint& p, const BlackHoleParams& bh) {
    require_exterior(p, bh);
    const MetricScratch m = scratch_at(p, bh);
    const double a = bh.a;
    const double sqSD = std::sqrt(m.sigma * m.delta);
    const double sqS = std::sqrt(m.sigma);
    const double sqDoS = std::sqrt(m.delta / m.sigma);

    SymmetricFrame sf;
    sf.frame.kind = FrameKind::Symmetric;
    sf.frame.anchor = p;

    Eigen::Matrix4d legs = Eigen::Matrix4d::Zero();
    // e0: Carter observer
    legs(0, 0) = m.A / sqSD;
    legs(3, 0) = a / sqSD;
    // e1 = (l - n)/sqrt(2), radial
    legs(1, 1) = sqDoS;
    // e2: azimuthal leg dual to omega^2
    legs(0, 2) = -a * m.s / sqS;
    legs(3, 2) = -1.0 / (sqS * m.s);
    // e3: polar
    legs(2, 3) = 1.0 / sqS;
    sf.frame.legs = legs;

    Eigen::Matrix4d co = Eigen::Matrix4d::Zero();
    co(0, 0) = sqDoS;
    co(0, 3) = -sqDoS * a * m.s2;
    co(1, 1) = std::sqrt(m.sigma / m.delta);
    co(2, 0) = m.s * a / sqS;
    co(2, 3) = -m.s * m.A / sqS;
    co(3, 2) = sqS;
    sf.coframe = co;

    using cd = std::complex<double>;
    const cd i(0.0, 1.0);
    Eigen::Matrix<cd, 4, 4> nc;
    nc.setZero();
    const double n12 = 1.0 / std::sqrt(2.0 * m.sigma * m.delta);
    const double n34 = 1.0 / std::sqrt(2.0 * m.sigma);
    nc(0, 0) = m.delta * n12;
    nc(0, 1) = m.sigma * n12;
    nc(0, 3) = -a * m.s2 * m.delta * n12;
    nc(1, 0) = m.delta * n12;
    nc(1, 1) = -m.sigma * n12;
    nc(1, 3) = -a * m.s2 * m.delta * n12;
    nc(2, 0) = -a * m.s * n34;
    nc(2, 2) = -i * m.sigma * n34;
    nc(2, 3) = m.A * m.s * n34;
    nc(3, 0) = -a * m.s * n34;
    nc(3, 2) = i * m.sigma * n34;
    nc(3, 3) = m.A * m.s * n34;
    sf.null_coframe = nc;
    return sf;
}

Eigen::Vector4d to_frame(const SymmetricFrame& sf, const Eigen::Vector4d& v_coord) {
    return sf.coframe * v_coord;
}

Eigen::Vector4d from_frame(const SymmetricFrame& sf, const Eigen::Vector4d& v_frame) {
    return sf.frame.legs * v_frame;
}

CarterObserver carter_observer_at(const SpacetimePoint& p, const BlackHoleParams& bh) {
    require_exterior(p, bh);
    const MetricScratch m = scratch_at(p, bh);
    const double sqSD = std::sqrt(m.sigma * m.delta);

    CarterObserver obs;
    obs.velocity = Eigen::Vector4d(m.A / sqSD, 0.0, 0.0, bh.a / sqSD);
    // l = (e0 + e1)/sqrt(2), n = (e0 - e1)/sqrt(2); e1^r = Delta / sqrt(Sigma Delta).
    obs.l = Eigen::Vector4d(m.A, m.delta, 0.0, bh.a) / (std::sqrt(2.0) * sqSD);
    obs.n = Eigen::Vector4d(m.A, -m.delta, 0.0, bh.a) / (std::sqrt(2.0) * sqSD);

    // O has no r/theta components, so nabla_O O reduces to the connection term.
    const auto gamma = christoffels_at(p, bh);
    Eigen::Vector4d acc;
    for (int mu = 0; mu < 4; ++mu) {
        acc(mu) = obs.velocity.transpose() * gamma[mu] * obs.velocity;
    }
    obs.acceleration = acc;
    return obs;
}

KillingStructures killing_structures_at(const SpacetimePoint& p, const BlackHoleParams& bh) {
    const SymmetricFrame sf = symmetric_frame_at(p, bh);
    const MetricComponents mc = metric_at(p, bh);
    const double c = std::cos(p.theta);

    const Eigen::Vector4d w0 = sf.coframe.row(0);
    const Eigen::Vector4d w1 = sf.coframe.row(1);
    const Eigen::Vector4d w2 = sf.coframe.row(2);
    const Eigen::Vector4d w3 = sf.coframe.row(3);

    KillingStructures ks;
    ks.f = -bh.a * c * (w0 * w1.transpose() - w1 * w0.transpose()) +
           p.r * (w2 * w3.transpose() - w3 * w2.transpose());
    ks.K = ks.f * mc.ginv * ks.f;
    return ks;
}

double carter_constant(const Eigen::Vector4d& u, const SpacetimePoint& p,
                       const BlackHoleParams& bh) {
    const MetricComponents mc = metric_at(p, bh);
    const double norm = u.transpose() * mc.g * u;
    if (std::abs(norm - 1.0) > 1e-8) {
        std::ostringstream os;
        os << "4-velocity is not unit timelike: g(U,U)=" << norm;
        throw DomainError(os.str());
    }
    const KillingStructures ks = killing_structures_at(p, bh);
    return u.transpose() * ks.K * u;
}

}  // namespace kerrspin
