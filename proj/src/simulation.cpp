#include "kerrspin/simulation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kerrspin/spinor.hpp"
#include "kerrspin/svg.hpp"

namespace kerrspin {

namespace {

Eigen::Vector3d initial_spin_direction(const RunConfig& cfg) {
    Eigen::Vector3d w = cfg.w0;
    if (cfg.use_spinor_constants) {
        const SpinorConstants sc{cfg.c1, cfg.c2, cfg.d1, cfg.d2, cfg.hbar};
        const Eigen::Vector4d w4 = spin_vector_pp(sc).combined(cfg.hbar);
        w = w4.tail<3>();
    }
    const double n = w.norm();
    if (!(n > 0.0)) throw ConfigError("initial spin direction has zero norm");
    return w / n;
}

}  // namespace

SimulationResult run_simulation(const RunConfig& cfg) {
    cfg.validate();
    const BlackHoleParams bh(cfg.M, cfg.a);
    const ConservedSet cs{cfg.E, cfg.Lz, cfg.kappa};
    const GeodesicState s0 = initial_state_from_constants(cs, cfg.r0, cfg.theta0, cfg.phi0,
                                                          cfg.sign_r, cfg.sign_theta, bh);

    SimulationResult res;
    res.config = cfg;
    res.traj = integrate_geodesic(s0, cfg.integrator(), bh);
    res.series = precession_series(res.traj, initial_spin_direction(cfg));
    const ConservationReport rep = conservation_report(res.traj);
    res.max_drift_E = rep.max_drift_E;
    res.max_drift_Lz = rep.max_drift_Lz;
    res.max_drift_kappa = rep.max_drift_kappa;
    res.max_drift_norm = rep.max_drift_norm;

    for (std::size_t i = 0; i < res.series.Lambda.size(); ++i) {
        const Eigen::Matrix3d& lam = res.series.Lambda[i];
        res.max_orthogonality_residual =
            std::max(res.max_orthogonality_residual,
                     (lam.transpose() * lam - Eigen::Matrix3d::Identity()).norm());
        res.max_det_residual =
            std::max(res.max_det_residual, std::abs(lam.determinant() - 1.0));
    }

    res.rows.reserve(res.traj.samples.size());
    for (std::size_t i = 0; i < res.traj.samples.size(); ++i) {
        const auto& st = res.traj.samples[i].state;
        OutputRow row;
        row.tau = st.tau;
        row.t = st.point.t;
        row.r = st.point.r;
        row.theta = st.point.theta;
        row.phi = st.point.phi;
        row.rdot = st.velocity(1);
        row.thetadot = st.velocity(2);
        row.chi = res.traj.samples[i].chi;
        row.W1 = res.series.W[i](0);
        row.W2 = res.series.W[i](1);
        row.W3 = res.series.W[i](2);
        row.kg = res.series.kg[i];
        row.drift_E = rep.drift_E[i];
        row.drift_Lz = rep.drift_Lz[i];
        row.drift_kappa = rep.drift_kappa[i];
        row.drift_norm = rep.drift_norm[i];
        res.rows.push_back(row);
    }

    const double tol = cfg.integrator().drift_tol;
    res.tolerances_met = res.max_drift_E < tol && res.max_drift_Lz < tol &&
                         res.max_drift_kappa < tol && res.max_drift_norm < tol &&
                         res.max_orthogonality_residual < 1e-10 &&
                         res.max_det_residual < 1e-10 && !res.traj.horizon_terminated;
    return res;
}

std::string SimulationResult::summary() const {
    std::ostringstream os;
    os.precision(3);
    os << "samples: " << rows.size() << ", tau_end: " << traj.tau_end
       << (traj.horizon_terminated ? " (terminated near horizon)" : "") << "\n"
       << "max drifts  E: " << max_drift_E << "  Lz: " << max_drift_Lz
       << "  kappa: " << max_drift_kappa << "  norm: " << max_drift_norm << "\n"
       << "rotation residuals  orthogonality: " << max_orthogonality_residual
       << "  det: " << max_det_residual << "\n"
       << "tolerances " << (tolerances_met ? "met" : "NOT met") << "\n";
    return os.str();
}

namespace {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const std::string& path, const std::vector<OutputRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write CSV file: " + path);
    out << "tau,t,r,theta,phi,rdot,thetadot,chi,W1,W2,W3,kg,"
           "drift_E,drift_Lz,drift_kappa,drift_norm\n";
    for (const auto& r : rows) {
        out << num17(r.tau) << ',' << num17(r.t) << ',' << num17(r.r) << ',' << num17(r.theta)
            << ',' << num17(r.phi) << ',' << num17(r.rdot) << ',' << num17(r.thetadot) << ','
            << num17(r.chi) << ',' << num17(r.W1) << ',' << num17(r.W2) << ',' << num17(r.W3)
            << ',' << (r.kg ? num17(*r.kg) : std::string()) << ',' << num17(r.drift_E) << ','
            << num17(r.drift_Lz) << ',' << num17(r.drift_kappa) << ',' << num17(r.drift_norm)
            << '\n';
    }
}

std::vector<OutputRow> read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read CSV file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty CSV file: " + path);
    std::vector<OutputRow> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        // A trailing empty field is not produced by this schema, but an empty
        // kg field mid-row is.
        if (fields.size() != 16) throw DomainError("malformed CSV row: " + line);
        auto f = [&](int i) { return std::stod(fields[i]); };
        OutputRow r;
        r.tau = f(0);
        r.t = f(1);
        r.r = f(2);
        r.theta = f(3);
        r.phi = f(4);
        r.rdot = f(5);
        r.thetadot = f(6);
        r.chi = f(7);
        r.W1 = f(8);
        r.W2 = f(9);
        r.W3 = f(10);
        if (!fields[11].empty()) r.kg = f(11);
        r.drift_E = f(12);
        r.drift_Lz = f(13);
        r.drift_kappa = f(14);
        r.drift_norm = f(15);
        rows.push_back(r);
    }
    return rows;
}

std::vector<std::string> emit_figures(const SimulationResult& res, const std::string& out_dir) {
    const RunConfig& cfg = res.config;
    std::ostringstream params;
    params.precision(6);
    params << "M=" << cfg.M << "  a=" << cfg.a << "  E=" << cfg.E << "  Lz=" << cfg.Lz
           << "  kappa=" << cfg.kappa;
    std::vector<std::string> written;

    {  // Orbit in the equatorial projection.
        SvgPlot plot;
        plot.title = "Orbit, polar projection";
        plot.xlabel = "x = r cos(phi)";
        plot.ylabel = "y = r sin(phi)";
        plot.equal_axes = true;
        SvgSeries s;
        for (const auto& row : res.rows) {
            s.x.push_back(row.r * std::cos(row.phi));
            s.y.push_back(row.r * std::sin(row.phi));
        }
        plot.series.push_back(std::move(s));
        plot.annotations = {params.str()};
        const std::string path = out_dir + "/" + cfg.label + "_orbit_polar.svg";
        plot.write(path);
        written.push_back(path);
    }

    {  // Orthographic projection of the spatial orbit.
        SvgPlot plot;
        plot.title = "Orbit, 3D projection";
        plot.xlabel = "projected u";
        plot.ylabel = "projected v";
        plot.equal_axes = true;
        const double az = 0.5236, el = 0.4363;  // 30 and 25 degrees
        SvgSeries s;
        for (const auto& row : res.rows) {
            const double x = row.r * std::cos(row.phi) * std::sin(row.theta);
            const double y = row.r * std::sin(row.phi) * std::sin(row.theta);
            const double z = row.r * std::cos(row.theta);
            s.x.push_back(-std::sin(az) * x + std::cos(az) * y);
            s.y.push_back(-std::cos(az) * std::sin(el) * x - std::sin(az) * std::sin(el) * y +
                          std::cos(el) * z);
        }
        plot.series.push_back(std::move(s));
        plot.annotations = {params.str()};
        const std::string path = out_dir + "/" + cfg.label + "_orbit_3d.svg";
        plot.write(path);
        written.push_back(path);
    }

    {  // Spherical curvature of the spin trace.
        SvgPlot plot;
        plot.title = "Spherical curvature of the spin trajectory";
        plot.xlabel = "tau";
        plot.ylabel = "k_g";
        SvgSeries s;
        for (const auto& row : res.rows) {
            if (row.kg) {
                s.x.push_back(row.tau);
                s.y.push_back(*row.kg);
            }
        }
        plot.annotations = {params.str()};
        if (s.x.empty()) {
            plot.annotations.push_back("k_g undefined (no precession)");
        } else {
            plot.series.push_back(std::move(s));
        }
        const std::string path = out_dir + "/" + cfg.label + "_kg.svg";
        plot.write(path);
        written.push_back(path);
    }
    return written;
}

}  // namespace kerrspin
