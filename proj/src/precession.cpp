#include "kerrspin/precession.hpp"

#include <cmath>

namespace kerrspin {

Eigen::Matrix3d basis_change_direct(const MarckFrame& marck, const ReferenceTriad& triad,
                                    const BlackHoleParams& bh) {
    const MetricComponents mc = metric_at(triad.anchor, bh);
    const Eigen::Vector4d rows[3] = {triad.X, triad.Y, triad.Z};

    // Anchor check: both frames must live in the same tangent space. A
    // mismatch shows up as the triad failing to be orthogonal to L0 = U.
    for (int i = 0; i < 3; ++i) {
        if (std::abs(rows[i].transpose() * mc.g * marck.legs[0]) > 1e-6) {
            throw DomainError("basis_change_direct: frame/triad anchor mismatch");
        }
    }
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            m(i, k) = -rows[i].transpose() * mc.g * marck.legs[k + 1];
    return m;
}

Eigen::Matrix3d basis_change_frame(const GeodesicState& state, double kappa, double chi,
                                   const BlackHoleParams& bh) {
    const std::array<Eigen::Vector4d, 3> triad = reference_triad_frame(state, kappa, bh);
    const MarckStaticFrameLegs st = marck_static_frame_legs(state, kappa, bh);
    const double cchi = std::cos(chi), schi = std::sin(chi);
    const Eigen::Vector4d legs[3] = {cchi * st.lt1 - schi * st.lt2,
                                     schi * st.lt1 + cchi * st.lt2, st.l3};
    auto eta_dot = [](const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
        return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
    };
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) m(i, k) = -eta_dot(triad[i], legs[k]);
    return m;
}

Eigen::Matrix3d basis_change_closed(const GeodesicState& state, double kappa, double chi,
                                    const BlackHoleParams& bh) {
    const double r = state.point.r;
    const double th = state.point.theta;
    const double c = std::cos(th);
    const double sigma = sigma_of(r, th, bh);
    const MetricComponents mc = metric_at(state.point, bh);
    const Eigen::Vector4d u_cov = mc.g * state.velocity;
    const ConservedSet cs{u_cov(0), -u_cov(3), kappa};
    const Potentials pot = potentials_at(r, th, cs, bh);

    const double P = pot.P, D = pot.D;
    const double SR = sigma * state.velocity(1);
    const double STh = sigma * state.velocity(2);
    const double delta = delta_of(r, bh);
    const double ac = bh.a * c;
    const double varrho = P * P - delta * (kappa - ac * ac);
    const double rho = varrho + delta * D * D;
    const double pf = std::sqrt((kappa - ac * ac) / (r * r + kappa));
    const double sqk = std::sqrt(kappa);
    const double kr2 = kappa + r * r;
    const double cchi = std::cos(chi), schi = std::sin(chi);

    const double c1l = kr2 * (r * pf * pf * SR * STh - ac * D * P);
    const double c2l = kr2 * (ac * varrho * STh + r * pf * pf * D * P * SR);

    const double n1 = std::sqrt(kappa * sigma * rho);
    const double n2 = std::sqrt(kappa * sigma * varrho * rho);
    const double n3 = std::sqrt(kappa * varrho);

    // Column k of `a` holds the components of the k-th parallel-propagated
    // candidate leg in the reference triad.
    Eigen::Matrix3d a;
    a(0, 0) = (r * D * P + ac * SR * STh) / n1;
    a(0, 1) = -(sqk * schi * sigma * P * STh + c1l * cchi) / (pf * kr2 * n1);
    a(0, 2) = (sqk * cchi * sigma * P * STh - c1l * schi) / (pf * kr2 * n1);
    a(1, 0) = (r * varrho * STh - ac * D * P * SR) / n2;
    a(1, 1) = (sqk * schi * sigma * D * P * P + c2l * cchi) / (pf * kr2 * n2);
    a(1, 2) = (-sqk * cchi * sigma * D * P * P + c2l * schi) / (pf * kr2 * n2);
    a(2, 0) = -ac * P / n3;
    a(2, 1) = pf * (cchi * r * P - sqk * schi * SR) / n3;
    a(2, 2) = pf * (schi * r * P + sqk * cchi * SR) / n3;

    // Reorder/flip the columns so they line up with (L1, L2, L3): as printed
    // the columns correspond to (+L3, -L1, -L2).
    Eigen::Matrix3d m;
    m.col(0) = -a.col(1);
    m.col(1) = -a.col(2);
    m.col(2) = a.col(0);
    return m;
}

std::vector<Eigen::Matrix3d> precession_rotation(const std::vector<Eigen::Matrix3d>& m_series) {
    if (m_series.empty()) throw DomainError("precession_rotation: empty series");
    std::vector<Eigen::Matrix3d> out;
    out.reserve(m_series.size());
    const Eigen::Matrix3d m0t = m_series.front().transpose();
    for (const auto& m : m_series) out.push_back(m * m0t);
    return out;
}

std::vector<Eigen::Vector3d> evolve_spin(const Eigen::Vector3d& w0,
                                         const std::vector<Eigen::Matrix3d>& lambda_series) {
    if (std::abs(w0.norm() - 1.0) > 1e-8) {
        throw DomainError("evolve_spin: initial spin direction must be a unit vector");
    }
    std::vector<Eigen::Vector3d> out;
    out.reserve(lambda_series.size());
    for (const auto& lam : lambda_series) out.push_back(lam * w0);
    return out;
}

std::vector<std::optional<double>> spherical_curvature(const std::vector<Eigen::Vector3d>& w,
                                                       double h) {
    if (w.size() < 5) {
        throw DomainError("spherical_curvature: need at least 5 grid points");
    }
    std::vector<std::optional<double>> kg(w.size());
    for (std::size_t i = 2; i + 2 < w.size(); ++i) {
        const Eigen::Vector3d d1 =
            (-w[i + 2] + 8.0 * w[i + 1] - 8.0 * w[i - 1] + w[i - 2]) / (12.0 * h);
        const Eigen::Vector3d d2 =
            (-w[i + 2] + 16.0 * w[i + 1] - 30.0 * w[i] + 16.0 * w[i - 1] - w[i - 2]) /
            (12.0 * h * h);
        const double speed = d1.norm();
        if (speed < 1e-9) continue;  // undefined: spin direction is stationary
        kg[i] = d1.dot(d2.cross(w[i])) / (speed * speed * speed);
    }
    return kg;
}

PrecessionSeries precession_series(const Trajectory& traj, const Eigen::Vector3d& w0) {
    PrecessionSeries out;
    out.tau.reserve(traj.samples.size());
    out.M.reserve(traj.samples.size());
    for (const auto& smp : traj.samples) {
        out.tau.push_back(smp.state.tau);
        out.M.push_back(
            basis_change_frame(smp.state, traj.constants.kappa, smp.chi, traj.params));
    }
    out.Lambda = precession_rotation(out.M);
    out.W = evolve_spin(w0, out.Lambda);
    if (out.W.size() >= 5) {
        out.kg = spherical_curvature(out.W, traj.config.tau_step);
    } else {
        out.kg.assign(out.W.size(), std::nullopt);
    }
    return out;
}

}  // namespace kerrspin
