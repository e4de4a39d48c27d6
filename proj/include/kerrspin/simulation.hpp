#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kerrspin/config.hpp"
#include "kerrspin/geodesic.hpp"
#include "kerrspin/precession.hpp"

namespace kerrspin {

/// One CSV row per tau-grid sample.
struct OutputRow {
    double tau, t, r, theta, phi, rdot, thetadot, chi;
    double W1, W2, W3;
    std::optional<double> kg;  // empty field when undefined
    double drift_E, drift_Lz, drift_kappa, drift_norm;
};

struct SimulationResult {
    RunConfig config;
    Trajectory traj;
    PrecessionSeries series;
    std::vector<OutputRow> rows;
    double max_drift_E = 0.0, max_drift_Lz = 0.0, max_drift_kappa = 0.0, max_drift_norm = 0.0;
    double max_orthogonality_residual = 0.0;  // max ||Lambda^T Lambda - I||
    double max_det_residual = 0.0;            // max |det Lambda - 1|
    bool tolerances_met = false;

    std::string summary() const;
};

/// Full pipeline: integrate the orbit, carry the parallel frame, build the
/// reference triad, rotate the spin, measure k_g.
SimulationResult run_simulation(const RunConfig& cfg);

/// CSV I/O (UTF-8, LF, header row, 17 significant digits).
void write_csv(const std::string& path, const std::vector<OutputRow>& rows);
std::vector<OutputRow> read_csv(const std::string& path);

/// Emits the three per-run panels (polar orbit, projected 3D orbit, k_g).
/// Returns the written file paths.
std::vector<std::string> emit_figures(const SimulationResult& res, const std::string& out_dir);

}  // namespace kerrspin
