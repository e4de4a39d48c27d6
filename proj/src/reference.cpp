#include "kerrspin/reference.hpp"

#include <cmath>
#include <sstream>

namespace kerrspin {

namespace {

struct TriadScalars {
    double P, D, SR, STh, rho, varrho, sigma, delta;
};

TriadScalars triad_scalars(const GeodesicState& state, double kappa,
                           const BlackHoleParams& bh) {
    const double r = state.point.r;
    const double theta = state.point.theta;
    const double c = std::cos(theta);
    TriadScalars s;
    s.sigma = sigma_of(r, theta, bh);
    s.delta = delta_of(r, bh);

    const MetricComponents mc = metric_at(state.point, bh);
    const Eigen::Vector4d u_cov = mc.g * state.velocity;
    const ConservedSet cs{u_cov(0), -u_cov(3), kappa};
    const Potentials pot = potentials_at(r, theta, cs, bh);

    s.P = pot.P;
    s.D = pot.D;
    // Signed momenta: the triad follows the actual branch of the motion.
    s.SR = s.sigma * state.velocity(1);
    s.STh = s.sigma * state.velocity(2);
    s.varrho = pot.P * pot.P - s.delta * (kappa - bh.a * bh.a * c * c);
    s.rho = s.varrho + s.delta * pot.D * pot.D;  // = P^2 - Delta Theta
    return s;
}

void require_triad_ok(const TriadScalars& s) {
    if (!(s.rho > 0.0)) {
        std::ostringstream os;
        os << "reference frame degenerate: rho = " << s.rho << " <= 0";
        throw DomainError(os.str());
    }
    if (!(s.varrho > 0.0)) {
        std::ostringstream os;
        os << "reference frame degenerate: varrho = " << s.varrho << " <= 0";
        throw DomainError(os.str());
    }
}

// Frame components of the closed-form triad.
void closed_form_frame(const TriadScalars& s, Eigen::Vector4d& xf,
                       Eigen::Vector4d& yf, Eigen::Vector4d& zf) {
    const double sqD = std::sqrt(s.delta);
    xf << -sqD * s.STh, 0.0, 0.0, -s.P;
    xf /= std::sqrt(s.rho);
    yf << sqD * s.P * s.D, 0.0, s.rho, s.delta * s.D * s.STh;
    yf /= std::sqrt(s.rho * s.varrho);
    zf << -s.P * s.SR, -s.varrho, -s.D * sqD * s.SR, -sqD * s.STh * s.SR;
    zf /= std::sqrt(s.delta * s.sigma * s.varrho);
}

double eta_dot(const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
    return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

}  // namespace

ReferenceTriad reference_triad_at(const GeodesicState& state, double kappa,
                                  const BlackHoleParams& bh) {
    const TriadScalars s = triad_scalars(state, kappa, bh);
    require_triad_ok(s);
    const SymmetricFrame sf = symmetric_frame_at(state.point, bh);

    Eigen::Vector4d xf, yf, zf;
    closed_form_frame(s, xf, yf, zf);

    ReferenceTriad out;
    out.X = from_frame(sf, xf);
    out.Y = from_frame(sf, yf);
    out.Z = from_frame(sf, zf);
    out.rho = s.rho;
    out.varrho = s.varrho;
    out.anchor = state.point;
    return out;
}

std::array<Eigen::Vector4d, 3> reference_triad_frame(const GeodesicState& state, double kappa,
                                                     const BlackHoleParams& bh) {
    const TriadScalars s = triad_scalars(state, kappa, bh);
    require_triad_ok(s);
    std::array<Eigen::Vector4d, 3> out;
    closed_form_frame(s, out[0], out[1], out[2]);
    return out;
}

ReferenceTriad triad_via_gram_schmidt(const GeodesicState& state, double kappa,
                                      const BlackHoleParams& bh) {
    const TriadScalars s = triad_scalars(state, kappa, bh);
    require_triad_ok(s);
    const SymmetricFrame sf = symmetric_frame_at(state.point, bh);
    const Eigen::Vector4d uf = to_frame(sf, state.velocity);

    // Omega_{abc} = epstilde_{abcd} u^d in frame components, with the
    // orientation fixed so that epstilde_{0123} = +1; this makes both the
    // closed-form triad and the parallel-propagated spatial legs positively
    // oriented (Omega evaluates to +1 on them).
    auto eps = [](int a, int b, int c, int d) -> double {
        int idx[4] = {a, b, c, d};
        double sign = 1.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (idx[i] == idx[j]) return 0.0;
                if (idx[i] > idx[j]) sign = -sign;
            }
        return sign;
    };

    // Contract Omega with the spacelike frame pairs (1,2), (1,3), (2,3);
    // each contraction yields a covector orthogonal to U.
    const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    Eigen::Vector4d cand[3];
    for (int k = 0; k < 3; ++k) {
        Eigen::Vector4d w = Eigen::Vector4d::Zero();
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                w(c) += eps(pairs[k][0], pairs[k][1], c, d) * uf(d);
        // Raise the index with eta.
        cand[k] << w(0), -w(1), -w(2), -w(3);
    }

    Eigen::Vector4d q[3];
    for (int k = 0; k < 3; ++k) {
        Eigen::Vector4d v = cand[k];
        for (int m = 0; m < k; ++m) v += eta_dot(v, q[m]) * q[m];
        const double n2 = -eta_dot(v, v);
        if (!(n2 > 1e-20)) {
            throw DomainError("reference frame degenerate: Gram-Schmidt candidate collapsed");
        }
        q[k] = v / std::sqrt(n2);
    }

    // The contraction order fixes each direction only up to sign; align with
    // the closed forms (eta(q, closed) = -1 when they coincide).
    Eigen::Vector4d xf, yf, zf;
    closed_form_frame(s, xf, yf, zf);
    const Eigen::Vector4d closed[3] = {xf, yf, zf};
    for (int k = 0; k < 3; ++k) {
        if (eta_dot(q[k], closed[k]) > 0.0) q[k] = -q[k];
    }

    ReferenceTriad out;
    out.X = from_frame(sf, q[0]);
    out.Y = from_frame(sf, q[1]);
    out.Z = from_frame(sf, q[2]);
    out.rho = s.rho;
    out.varrho = s.varrho;
    out.anchor = state.point;
    return out;
}

double volume_form_on(const GeodesicState& state, const BlackHoleParams& bh,
                      const Eigen::Vector4d& v1, const Eigen::Vector4d& v2,
                      const Eigen::Vector4d& v3) {
    const SymmetricFrame sf = symmetric_frame_at(state.point, bh);
    Eigen::Matrix4d m;
    m.col(0) = to_frame(sf, v1);
    m.col(1) = to_frame(sf, v2);
    m.col(2) = to_frame(sf, v3);
    m.col(3) = to_frame(sf, state.velocity);
    // Omega(v1,v2,v3) = epstilde_{abcd} v1^a v2^b v3^c u^d with
    // epstilde_{0123} = +1.
    return m.determinant();
}

}  // namespace kerrspin
