#include "kerrspin/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "kerrspin/config.hpp"
#include "kerrspin/marck.hpp"
#include "kerrspin/ode.hpp"
#include "kerrspin/precession.hpp"
#include "kerrspin/reference.hpp"
#include "kerrspin/simulation.hpp"
#include "kerrspin/spinor.hpp"

namespace kerrspin {

namespace {

std::string fnum(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

struct Suite {
    std::mt19937_64 rng;
    BlackHoleParams bh;
    std::array<SimulationResult, 3> captions;

    Suite(std::uint64_t seed, double M, double a) : rng(seed), bh(M, a) {
        for (int i = 0; i < 3; ++i) {
            captions[i] = run_simulation(caption_preset(i + 1));
        }
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    SpacetimePoint random_point() {
        return {0.0, uniform(1.1 * bh.outer_horizon(), 40.0), uniform(0.15, M_PI - 0.15),
                uniform(0.0, 2.0 * M_PI)};
    }

    /// Random unit-timelike state with kappa suitable for the frame
    /// constructions (rejection sampling).
    GeodesicState random_state(double& kappa_out) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            GeodesicState st;
            st.point = random_point();
            const SymmetricFrame sf = symmetric_frame_at(st.point, bh);
            Eigen::Vector4d vf;
            vf << 0.0, uniform(-0.8, 0.8), uniform(-0.8, 0.8), uniform(-0.8, 0.8);
            vf(0) = std::sqrt(1.0 + vf.tail<3>().squaredNorm());
            st.velocity = from_frame(sf, vf);
            const double kappa = carter_constant(st.velocity, st.point, bh);
            const double c = std::cos(st.point.theta);
            if (kappa > 1e-3 && kappa - bh.a * bh.a * c * c > 1e-3) {
                kappa_out = kappa;
                return st;
            }
        }
        throw DomainError("random_state: rejection sampling failed");
    }

    /// As above but bounded away from turning points of R and Theta.
    GeodesicState random_state_off_turning(double& kappa_out) {
        for (int attempt = 0; attempt < 500; ++attempt) {
            double kappa = 0.0;
            GeodesicState st = random_state(kappa);
            const ConservedSet cs = constants_from_state(st, bh);
            const Potentials pot = potentials_at(st.point.r, st.point.theta, cs, bh);
            if (pot.R > 1.0 && pot.Theta > 0.05) {
                kappa_out = kappa;
                return st;
            }
        }
        throw DomainError("random_state_off_turning: rejection sampling failed");
    }
};

double gram_residual(const std::array<Eigen::Vector4d, 4>& legs, const Eigen::Matrix4d& g) {
    double worst = 0.0;
    const Eigen::Matrix4d eta = minkowski_eta();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double ip = legs[a].transpose() * g * legs[b];
            worst = std::max(worst, std::abs(ip - eta(a, b)));
        }
    return worst;
}

CheckResult check_tetrads(Suite& s) {
    double worst_sym = 0.0, worst_marck = 0.0, worst_orbit = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SpacetimePoint p = s.random_point();
        const SymmetricFrame sf = symmetric_frame_at(p, s.bh);
        const MetricComponents mc = metric_at(p, s.bh);
        std::array<Eigen::Vector4d, 4> legs;
        for (int a = 0; a < 4; ++a) legs[a] = sf.frame.legs.col(a);
        worst_sym = std::max(worst_sym, gram_residual(legs, mc.g));
    }
    for (int i = 0; i < 200; ++i) {
        double kappa = 0.0;
        const GeodesicState st = s.random_state(kappa);
        const MarckFrame mf = marck_frame_at(st, kappa, s.uniform(0.0, 6.28), s.bh);
        const MetricComponents mc = metric_at(st.point, s.bh);
        worst_marck = std::max(worst_marck, gram_residual(mf.legs, mc.g));
    }
    // Along the preset orbits the radii reach several hundred M, where
    // coordinate components lose ~r^2 * eps of absolute accuracy; the Gram
    // matrix is therefore evaluated in frame components against eta.
    for (const auto& res : s.captions) {
        for (std::size_t i = 0; i < res.traj.samples.size(); i += 100) {
            const auto& smp = res.traj.samples[i];
            const MarckStaticFrameLegs fl =
                marck_static_frame_legs(smp.state, res.traj.constants.kappa, res.traj.params);
            const double cc = std::cos(smp.chi), sc = std::sin(smp.chi);
            const std::array<Eigen::Vector4d, 4> legs = {
                fl.u, cc * fl.lt1 - sc * fl.lt2, sc * fl.lt1 + cc * fl.lt2, fl.l3};
            worst_orbit = std::max(worst_orbit, gram_residual(legs, minkowski_eta()));
        }
    }
    const double worst = std::max({worst_sym, worst_marck, worst_orbit});
    return {"tetrad orthonormality", worst < 1e-10,
            "max Gram residual " + fnum(worst) + " (symmetric " + fnum(worst_sym) + ", Marck " +
                fnum(worst_marck) + ", along orbits " + fnum(worst_orbit) + ")"};
}

CheckResult check_clifford() {
    const GammaAlgebra g = clifford_basis();
    const Eigen::Matrix4d eta = minkowski_eta();
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Matrix4cd anti = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a] -
                                   2.0 * eta(a, b) * Matrix4cd::Identity();
            worst = std::max(worst, anti.norm());
        }
    const complexd iu{0.0, 1.0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const Matrix4cd lhs =
                        g.sigma(a, b) * g.sigma(c, d) - g.sigma(c, d) * g.sigma(a, b);
                    // The Lie-algebra relation carries a factor 2 with this
                    // normalization of the generators.
                    const Matrix4cd rhs =
                        2.0 * iu * (eta(a, d) * g.sigma(b, c) - eta(a, c) * g.sigma(b, d) +
                                    eta(b, c) * g.sigma(a, d) - eta(b, d) * g.sigma(a, c));
                    worst = std::max(worst, (lhs - rhs).norm());
                }
    return {"Clifford/Lorentz algebra", worst == 0.0, "max residual " + fnum(worst) + " (exact)"};
}

CheckResult check_killing(Suite& s) {
    const double h = 1e-3;
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
        SpacetimePoint p = s.random_point();
        p.r = s.uniform(1.2 * s.bh.outer_horizon(), 20.0);
        const auto gamma = christoffels_at(p, s.bh);
        // Fourth-order central-difference coordinate partials in r and theta
        // (the Killing directions t, phi drop out).
        auto shift = [&](int dir, double eps) {
            SpacetimePoint q = p;
            if (dir == 1) q.r += eps;
            if (dir == 2) q.theta += eps;
            return killing_structures_at(q, s.bh);
        };
        std::array<Eigen::Matrix4d, 4> df{}, dK{};
        for (int i : {1, 2}) {
            const KillingStructures p1 = shift(i, h), m1 = shift(i, -h);
            const KillingStructures p2 = shift(i, 2.0 * h), m2 = shift(i, -2.0 * h);
            df[i] = (-p2.f + 8.0 * p1.f - 8.0 * m1.f + m2.f) / (12.0 * h);
            dK[i] = (-p2.K + 8.0 * p1.K - 8.0 * m1.K + m2.K) / (12.0 * h);
        }
        const KillingStructures ks = killing_structures_at(p, s.bh);
        // Residuals are gauged against the local tensor magnitude: the
        // components grow like r^2..r^4, and finite differencing of such
        // entries carries a proportional rounding floor.
        const double scale_f = 1.0 + ks.f.cwiseAbs().maxCoeff();
        const double scale_K = 1.0 + ks.K.cwiseAbs().maxCoeff();
        auto nabla = [&](const Eigen::Matrix4d& tensor, const std::array<Eigen::Matrix4d, 4>& dT,
                         int i, int j, int k) {
            double v = (i == 1 || i == 2) ? dT[i](j, k) : 0.0;
            for (int l = 0; l < 4; ++l) {
                v -= gamma[l](i, j) * tensor(l, k) + gamma[l](i, k) * tensor(j, l);
            }
            return v;
        };
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    const double sym_f = 0.5 * (nabla(ks.f, df, i, j, k) + nabla(ks.f, df, j, i, k));
                    const double sym_K = (nabla(ks.K, dK, i, j, k) + nabla(ks.K, dK, j, k, i) +
                                          nabla(ks.K, dK, k, i, j)) /
                                         3.0;
                    worst = std::max(worst, std::max(std::abs(sym_f) / scale_f,
                                                     std::abs(sym_K) / scale_K));
                }
    }
    return {"Killing structure residuals", worst < 1e-8,
            "max scaled residual " + fnum(worst)};
}

CheckResult check_conservation(Suite& s) {
    double worst = 0.0;
    for (const auto& res : s.captions) {
        worst = std::max({worst, res.max_drift_E, res.max_drift_Lz, res.max_drift_kappa,
                          res.max_drift_norm});
    }
    return {"conservation on preset orbits", worst < 1e-8, "max relative drift " + fnum(worst)};
}

CheckResult check_marck_transport(Suite& s) {
    double worst = 0.0;
    const double h = 1e-3;
    for (const auto& res : s.captions) {
        const Trajectory& traj = res.traj;
        const double kappa = traj.constants.kappa;
        for (int n = 0; n < 100; ++n) {
            const double tau = 2.0 + (traj.tau_end - 4.0) * n / 99.0;
            auto frame_at = [&](double t) {
                return marck_frame_at(traj.state_at(t), kappa, traj.chi_at(t), traj.params);
            };
            const MarckFrame fm2 = frame_at(tau - 2 * h), fm1 = frame_at(tau - h),
                             fp1 = frame_at(tau + h), fp2 = frame_at(tau + 2 * h);
            const GeodesicState st = traj.state_at(tau);
            const auto gamma = christoffels_at(st.point, traj.params);
            const MarckFrame f0 = frame_at(tau);
            for (int a = 0; a < 4; ++a) {
                const Eigen::Vector4d dl = (-fp2.legs[a] + 8.0 * fp1.legs[a] -
                                            8.0 * fm1.legs[a] + fm2.legs[a]) /
                                           (12.0 * h);
                Eigen::Vector4d resid = dl;
                for (int mu = 0; mu < 4; ++mu) {
                    resid(mu) += st.velocity.transpose() * gamma[mu] * f0.legs[a];
                }
                worst = std::max(worst, resid.norm());
            }
        }
    }
    return {"Marck frame parallel transport", worst < 1e-6, "max residual " + fnum(worst)};
}

CheckResult check_so3(Suite& s) {
    double worst_orth = 0.0, worst_closed = 0.0, worst_chi0 = 0.0;
    for (const auto& res : s.captions) {
        worst_orth = std::max({worst_orth, res.max_orthogonality_residual, res.max_det_residual});
    }
    const SimulationResult& fig1 = s.captions[0];
    const double lam0 = (fig1.series.Lambda.front() - Eigen::Matrix3d::Identity()).norm();
    worst_orth = std::max(worst_orth, lam0);
    // Closed form vs direct inner products along the first preset orbit.
    const std::size_t stride = std::max<std::size_t>(1, fig1.traj.samples.size() / 100);
    for (std::size_t i = 0; i < fig1.traj.samples.size(); i += stride) {
        const auto& smp = fig1.traj.samples[i];
        const Eigen::Matrix3d closed = basis_change_closed(smp.state, fig1.traj.constants.kappa,
                                                           smp.chi, fig1.traj.params);
        worst_closed = std::max(worst_closed, (closed - fig1.series.M[i]).norm());
    }
    // chi0-independence on a short arc.
    {
        RunConfig a = caption_preset(1), b = caption_preset(1);
        a.tau_max = b.tau_max = 50.0;
        a.tau_step = b.tau_step = 0.1;
        b.chi0 = 1.3;
        const SimulationResult ra = run_simulation(a), rb = run_simulation(b);
        for (std::size_t i = 0; i < ra.series.Lambda.size(); ++i) {
            worst_chi0 =
                std::max(worst_chi0, (ra.series.Lambda[i] - rb.series.Lambda[i]).norm());
        }
    }
    const bool pass = worst_orth < 1e-10 && worst_closed < 1e-8 && worst_chi0 < 1e-8;
    return {"rotation group + closed form", pass,
            "SO(3) " + fnum(worst_orth) + ", closed-vs-direct " + fnum(worst_closed) +
                ", chi0-independence " + fnum(worst_chi0)};
}

CheckResult equatorial_no_precession(const BlackHoleParams& bh, const std::string& name) {
    RunConfig cfg;
    cfg.M = bh.M;
    cfg.a = bh.a;
    cfg.E = 0.96;
    cfg.Lz = 3.5 * bh.M;
    cfg.kappa = std::pow(bh.a * cfg.E - cfg.Lz, 2);
    cfg.r0 = 10.0 * bh.M;
    cfg.theta0 = M_PI / 2.0;
    cfg.sign_r = 1;
    cfg.tau_max = 500.0;
    cfg.tau_step = 0.05;
    cfg.w0 = {1.0, 0.0, 0.0};
    const SimulationResult res = run_simulation(cfg);
    double worst = 0.0;
    for (const auto& w : res.series.W) worst = std::max(worst, (w - cfg.w0).norm());
    return {name, worst < 1e-9, "max |W - W0| " + fnum(worst)};
}

CheckResult check_equatorial(Suite& s) {
    return equatorial_no_precession(s.bh, "equatorial orbits: no precession");
}

CheckResult check_schwarzschild(Suite& s) {
    const BlackHoleParams bh0(s.bh.M, 0.0);
    CheckResult eq = equatorial_no_precession(bh0, "");

    // Inclined orbit, a = 0. Spherical symmetry maps any orbital plane onto
    // the equator; the no-precession statement holds in the plane-adapted
    // axes, where the same orbit is equatorial with angular momentum
    // sqrt(kappa). The axis-inclined description is exercised by verifying
    // that its radial dynamics coincide with the plane-adapted
    // representative, which shares E and kappa.
    RunConfig incl;
    incl.M = bh0.M;
    incl.a = 0.0;
    incl.E = 0.96;
    // kappa is a perfect square so the plane-adapted representative's polar
    // potential vanishes exactly at the equator in floating point.
    incl.Lz = 3.0 * bh0.M;
    incl.kappa = 12.25 * bh0.M * bh0.M;
    incl.r0 = 10.0 * bh0.M;
    incl.theta0 = M_PI / 2.0;  // node crossing; the orbit climbs out of the equator
    incl.sign_r = 1;
    incl.sign_theta = 1;
    incl.tau_max = 500.0;
    incl.tau_step = 0.05;
    incl.rel_tol = incl.abs_tol = 1e-13;
    const SimulationResult rincl = run_simulation(incl);

    RunConfig adapted = incl;
    adapted.Lz = std::sqrt(incl.kappa);  // plane-adapted axes: L_z = |L|
    const SimulationResult rad = run_simulation(adapted);

    double worst_r = 0.0;
    const std::size_t n = std::min(rincl.rows.size(), rad.rows.size());
    for (std::size_t i = 0; i < n; ++i) {
        worst_r = std::max(worst_r, std::abs(rincl.rows[i].r - rad.rows[i].r));
    }
    double worst_w = 0.0;
    for (const auto& w : rad.series.W) worst_w = std::max(worst_w, (w - adapted.w0).norm());

    // The two integrations are independent, so the radial comparison is
    // bounded by accumulated phase error, not by the per-step tolerance.
    const bool pass = eq.pass && worst_w < 1e-8 && worst_r < 1e-5 &&
                      rincl.rows.size() == rad.rows.size();
    return {"spherically symmetric limit: no precession", pass,
            "equatorial " + eq.detail + ", inclined (plane-adapted axes) max |W - W0| " +
                fnum(worst_w) + ", radial isometry match " + fnum(worst_r)};
}

CheckResult check_spin_transport(Suite& s) {
    // Constant-PP-component spin vector vs direct coordinate-space parallel
    // transport along a short arc of the first preset orbit.
    RunConfig cfg = caption_preset(1);
    cfg.tau_max = 50.0;
    cfg.tau_step = 0.1;
    const SimulationResult res = run_simulation(cfg);
    const Trajectory& traj = res.traj;
    const double kappa = traj.constants.kappa;

    SpinorConstants sc;
    sc.c1 = {1.0, 0.0};
    sc.c2 = {0.3, 0.4};
    sc.d1 = {0.1, -0.2};
    sc.d2 = {-0.05, 0.15};
    const Eigen::Vector4d wpp = spin_vector_pp(sc).combined(0.1);

    auto assemble = [&](double tau) {
        const GeodesicState st = traj.state_at(tau);
        const MarckFrame mf = marck_frame_at(st, kappa, traj.chi_at(tau), traj.params);
        Eigen::Vector4d w = Eigen::Vector4d::Zero();
        for (int a = 0; a < 4; ++a) w += wpp(a) * mf.legs[a];
        return w;
    };

    OdeRhs rhs = [&](double tau, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) {
        const GeodesicState st = traj.state_at(tau);
        const auto gamma = christoffels_at(st.point, traj.params);
        dydt.resize(4);
        for (int mu = 0; mu < 4; ++mu) {
            dydt(mu) = -st.velocity.transpose() * gamma[mu] * y.segment<4>(0);
        }
    };
    OdeOptions opts;
    opts.rel_tol = opts.abs_tol = 1e-12;
    const OdeSolution sol = integrate_dopri5(rhs, 0.0, assemble(0.0), cfg.tau_max, opts);
    double worst = 0.0;
    for (double tau = 5.0; tau <= cfg.tau_max; tau += 5.0) {
        worst = std::max(worst, (sol.at(tau).head<4>() - assemble(tau)).norm());
    }

    double worst_r0 = 0.0;
    for (int n = 0; n < 100; ++n) {
        double kap = 0.0;
        const GeodesicState st = s.random_state_off_turning(kap);
        const complexd c1{s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)};
        const complexd c2{s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)};
        worst_r0 = std::max(
            worst_r0, verify_gordon_r_term(st, kap, c1, c2, s.uniform(0.0, 6.28), s.bh));
    }
    const bool pass = worst < 1e-6 && worst_r0 < 1e-12;
    return {"spin vector transport", pass,
            "transport residual " + fnum(worst) + ", polarization-term residual " +
                fnum(worst_r0)};
}

CheckResult check_beta(Suite& s) {
    double worst_dev = 0.0;
    for (int n = 0; n < 100; ++n) {
        double kappa = 0.0;
        const GeodesicState st = s.random_state_off_turning(kappa);
        const ScalarAmplitude amp =
            scalar_amplitude(st, kappa, {0.7, 0.3}, s.uniform(0.0, 6.28), s.bh);
        for (int a = 0; a < 4; ++a) {
            const double scale = std::max(1e-30, std::abs(amp.deriv_direct[a]));
            worst_dev = std::max(worst_dev,
                                 std::abs(amp.deriv_closed[a] - amp.deriv_direct[a]) / scale);
        }
    }
    // d beta/d tau + (theta/2) beta = 0 along an orbit arc, by dense-output
    // finite differences.
    const Trajectory& traj = s.captions[2].traj;
    const double kappa = traj.constants.kappa;
    const double h = 1e-4;
    double worst_prop = 0.0;
    for (int n = 1; n <= 50; ++n) {
        const double tau = traj.tau_end * n / 51.0;
        const GeodesicState st = traj.state_at(tau);
        const ConservedSet cs = constants_from_state(st, traj.params);
        const Potentials pot = potentials_at(st.point.r, st.point.theta, cs, traj.params);
        if (pot.R < 1.0 || pot.Theta < 0.05) continue;  // keep away from turning points
        auto beta_at = [&](double t) {
            return scalar_amplitude(traj.state_at(t), kappa, {1.0, 0.0}, 0.0, traj.params).beta;
        };
        const complexd db =
            (-beta_at(tau + 2 * h) + 8.0 * beta_at(tau + h) - 8.0 * beta_at(tau - h) +
             beta_at(tau - 2 * h)) /
            (12.0 * h);
        const ScalarAmplitude amp = scalar_amplitude(st, kappa, {1.0, 0.0}, 0.0, traj.params);
        const complexd resid = db + 0.5 * amp.theta_exp * amp.beta;
        worst_prop = std::max(worst_prop, std::abs(resid) / std::abs(amp.beta));
    }
    const bool pass = worst_dev < 1e-8 && worst_prop < 1e-8;
    return {"scalar amplitude machinery", pass,
            "closed-vs-direct " + fnum(worst_dev) + ", propagation residual " + fnum(worst_prop)};
}

double small_circle_error(double h) {
    const double alpha = M_PI / 4.0, omega = 0.3;
    std::vector<Eigen::Vector3d> w;
    const int n = static_cast<int>(std::round(10.0 / h)) + 1;
    for (int i = 0; i < n; ++i) {
        const double t = i * h;
        w.emplace_back(std::sin(alpha) * std::cos(omega * t),
                       std::sin(alpha) * std::sin(omega * t), std::cos(alpha));
    }
    const auto kg = spherical_curvature(w, h);
    double worst = 0.0;
    for (const auto& v : kg) {
        if (v) worst = std::max(worst, std::abs(*v - 1.0));  // cot(pi/4) = 1
    }
    return worst;
}

CheckResult check_kg_oracle(Suite&) {
    const double fine = small_circle_error(0.01);
    // Convergence order is measured on coarser grids where the truncation
    // error still dominates rounding.
    const double e1 = small_circle_error(0.2);
    const double e2 = small_circle_error(0.1);
    const double ratio = e1 / std::max(e2, 1e-300);
    const bool pass = fine < 1e-6 && ratio > 8.0 && ratio < 40.0;
    return {"spherical curvature oracle", pass,
            "error " + fnum(fine) + ", refinement ratio " + fnum(ratio) + " (expect ~16)"};
}

CheckResult check_figures(Suite& s) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "kerrspin_figure_check";
    fs::create_directories(dir);
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        const SimulationResult& res = s.captions[i];
        const double rplus = BlackHoleParams(res.config.M, res.config.a).outer_horizon();
        double rmin = 1e300, rmax = 0.0;
        bool finite = true;
        for (const auto& row : res.rows) {
            rmin = std::min(rmin, row.r);
            rmax = std::max(rmax, row.r);
            finite = finite && std::isfinite(row.W1) && std::isfinite(row.W2) &&
                     std::isfinite(row.W3) && (!row.kg || std::isfinite(*row.kg));
        }
        const bool ok = !res.traj.horizon_terminated && rmin > rplus && rmax < 1e4 && finite;
        pass = pass && ok;
        detail += res.config.label + " r in [" + fnum(rmin) + "," + fnum(rmax) + "] ";
        for (const auto& path : emit_figures(res, dir.string())) {
            pass = pass && fs::exists(path) && fs::file_size(path) > 500;
        }
    }
    return {"figure reproduction (morphological)", pass, detail};
}

}  // namespace

std::vector<CheckResult> run_validation_suite(std::uint64_t seed, double M, double a) {
    Suite s(seed, M, a);
    std::vector<CheckResult> out;
    out.push_back(check_tetrads(s));
    out.push_back(check_clifford());
    out.push_back(check_killing(s));
    out.push_back(check_conservation(s));
    out.push_back(check_marck_transport(s));
    out.push_back(check_so3(s));
    out.push_back(check_equatorial(s));
    out.push_back(check_schwarzschild(s));
    out.push_back(check_spin_transport(s));
    out.push_back(check_beta(s));
    out.push_back(check_kg_oracle(s));
    out.push_back(check_figures(s));
    return out;
}

}  // namespace kerrspin
