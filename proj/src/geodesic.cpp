#include "kerrspin/geodesic.hpp"

#include <cmath>
#include <sstream>

#include "kerrspin/marck.hpp"

namespace kerrspin {

Potentials potentials_at(double r, double theta, const ConservedSet& cs,
                         const BlackHoleParams& bh) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double delta = delta_of(r, bh);
    Potentials p;
    p.P = cs.E * (r * r + bh.a * bh.a) - bh.a * cs.Lz;
    p.D = bh.a * cs.E * s - cs.Lz / s;
    p.R = p.P * p.P - delta * (cs.kappa + r * r);
    p.Theta = cs.kappa - bh.a * bh.a * c * c - p.D * p.D;
    return p;
}

GeodesicState initial_state_from_constants(const ConservedSet& cs, double r0, double theta0,
                                           double phi0, int sign_r, int sign_theta,
                                           const BlackHoleParams& bh) {
    SpacetimePoint pt{0.0, r0, theta0, phi0};
    require_exterior(pt, bh);
    Potentials pot = potentials_at(r0, theta0, cs, bh);

    const double scale = std::max(1.0, pot.P * pot.P);
    if (pot.R < -1e-10 * scale) {
        std::ostringstream os;
        os << "forbidden region: R(r0)=" << pot.R << " < 0 at r0=" << r0;
        throw DomainError(os.str());
    }
    if (pot.Theta < -1e-10 * std::max(1.0, cs.kappa)) {
        std::ostringstream os;
        os << "forbidden region: Theta(theta0)=" << pot.Theta << " < 0 at theta0=" << theta0;
        throw DomainError(os.str());
    }
    const double R = std::max(pot.R, 0.0);
    const double Th = std::max(pot.Theta, 0.0);

    const double sigma = sigma_of(r0, theta0, bh);
    const double delta = delta_of(r0, bh);
    const double s = std::sin(theta0);
    const double A = r0 * r0 + bh.a * bh.a;

    GeodesicState st;
    st.point = pt;
    st.velocity(0) = (A * pot.P / delta - bh.a * s * pot.D) / sigma;
    st.velocity(1) = (sign_r >= 0 ? 1.0 : -1.0) * std::sqrt(R) / sigma;
    st.velocity(2) = (sign_theta >= 0 ? 1.0 : -1.0) * std::sqrt(Th) / sigma;
    st.velocity(3) = (bh.a * pot.P / delta - pot.D / s) / sigma;
    st.tau = 0.0;
    return st;
}

ConservedSet constants_from_state(const GeodesicState& s, const BlackHoleParams& bh) {
    const MetricComponents mc = metric_at(s.point, bh);
    const Eigen::Vector4d u_cov = mc.g * s.velocity;
    ConservedSet cs;
    cs.E = u_cov(0);
    cs.Lz = -u_cov(3);
    const KillingStructures ks = killing_structures_at(s.point, bh);
    cs.kappa = s.velocity.transpose() * ks.K * s.velocity;
    return cs;
}

namespace {

GeodesicState state_from_ode(const Eigen::VectorXd& y, double tau) {
    GeodesicState st;
    st.point = {y(0), y(1), y(2), y(3)};
    st.velocity = y.segment<4>(4);
    st.tau = tau;
    return st;
}

}  // namespace

GeodesicState Trajectory::state_at(double tau) const {
    return state_from_ode(dense.at(tau), tau);
}

double Trajectory::chi_at(double tau) const { return dense.at(tau)(8); }

Trajectory integrate_geodesic(const GeodesicState& s0, const IntegratorConfig& cfg,
                              const BlackHoleParams& bh) {
    Trajectory traj{bh, constants_from_state(s0, bh), cfg, {}, {}, 0.0, false};

    const double r_stop = bh.outer_horizon() * (1.0 + 1e-3);
    const double kappa = traj.constants.kappa;
    const int d_sign = cfg.chi_d_sign;

    OdeRhs rhs = [&bh, kappa, d_sign](double tau, const Eigen::VectorXd& y,
                                      Eigen::VectorXd& dydt) {
        GeodesicState st = state_from_ode(y, tau);
        const auto gamma = christoffels_at(st.point, bh);
        dydt.resize(9);
        dydt.segment<4>(0) = st.velocity;
        for (int mu = 0; mu < 4; ++mu) {
            dydt(4 + mu) = -st.velocity.transpose() * gamma[mu] * st.velocity;
        }
        dydt(8) = (kappa > 0.0) ? chi_rate(st, kappa, bh, d_sign) : 0.0;
    };

    Eigen::VectorXd y0(9);
    y0.segment<4>(0) << s0.point.t, s0.point.r, s0.point.theta, s0.point.phi;
    y0.segment<4>(4) = s0.velocity;
    y0(8) = cfg.chi0;

    OdeOptions opts;
    opts.rel_tol = cfg.rel_tol;
    opts.abs_tol = cfg.abs_tol;
    opts.max_step = cfg.max_step;
    opts.stop = [r_stop](double, const Eigen::VectorXd& y) { return y(1) <= r_stop; };

    if (cfg.tau_max > 0.0) {
        traj.dense = integrate_dopri5(rhs, 0.0, y0, cfg.tau_max, opts);
        traj.tau_end = traj.dense.t_end;
        traj.horizon_terminated = traj.dense.aborted;
        if (traj.dense.aborted && traj.dense.abort_reason == "step size underflow") {
            traj.horizon_terminated = true;
        }
    } else {
        traj.tau_end = 0.0;
        traj.dense.t_end = 0.0;
        traj.dense.y_end = y0;
    }

    // Uniform output grid; a trailing partial interval keeps the endpoint.
    const double step = cfg.tau_step;
    const double t_end = traj.tau_end;
    std::size_t n = (cfg.tau_max > 0.0) ? static_cast<std::size_t>(t_end / step + 1e-9) : 0;
    traj.samples.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) {
        const double tau = static_cast<double>(i) * step;
        const Eigen::VectorXd y = (cfg.tau_max > 0.0) ? traj.dense.at(tau) : y0;
        traj.samples.push_back({state_from_ode(y, tau), y(8)});
    }
    if (cfg.tau_max > 0.0 && t_end - static_cast<double>(n) * step > 1e-9) {
        const Eigen::VectorXd y = traj.dense.at(t_end);
        traj.samples.push_back({state_from_ode(y, t_end), y(8)});
    }
    return traj;
}

ConservationReport conservation_report(const Trajectory& traj) {
    if (traj.samples.empty()) throw DomainError("conservation_report: empty trajectory");
    ConservationReport rep;
    const ConservedSet& ref = traj.constants;
    const double normE = std::max(1.0, std::abs(ref.E));
    const double normL = std::max(1.0, std::abs(ref.Lz));
    const double normK = std::max(1.0, std::abs(ref.kappa));

    for (const auto& smp : traj.samples) {
        const MetricComponents mc = metric_at(smp.state.point, traj.params);
        const Eigen::Vector4d u_cov = mc.g * smp.state.velocity;
        const KillingStructures ks = killing_structures_at(smp.state.point, traj.params);
        const double kap = smp.state.velocity.transpose() * ks.K * smp.state.velocity;
        const double norm = smp.state.velocity.dot(u_cov);

        rep.tau.push_back(smp.state.tau);
        rep.drift_E.push_back(std::abs(u_cov(0) - ref.E) / normE);
        rep.drift_Lz.push_back(std::abs(-u_cov(3) - ref.Lz) / normL);
        rep.drift_kappa.push_back(std::abs(kap - ref.kappa) / normK);
        rep.drift_norm.push_back(std::abs(norm - 1.0));

        rep.max_drift_E = std::max(rep.max_drift_E, rep.drift_E.back());
        rep.max_drift_Lz = std::max(rep.max_drift_Lz, rep.drift_Lz.back());
        rep.max_drift_kappa = std::max(rep.max_drift_kappa, rep.drift_kappa.back());
        rep.max_drift_norm = std::max(rep.max_drift_norm, rep.drift_norm.back());
    }
    return rep;
}

}  // namespace kerrspin
