#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "kerrspin/geodesic.hpp"

namespace kerrspin {

/// Everything one simulation run needs, parsed from an INI-style config file
/// (sections [params], [constants], [initial], [run], [spin], [integrator];
/// one scalar per key). See README for the schema.
struct RunConfig {
    // [params]
    double M = 1.0;
    double a = 0.8;
    // [constants]
    double E = 1.0;
    double Lz = 0.0;
    double kappa = 0.0;
    // [initial]
    double r0 = 20.0;
    double theta0 = 1.57;
    double phi0 = 0.0;
    int sign_r = 1;
    int sign_theta = 1;
    // [run]
    double tau_max = 500.0;
    double tau_step = 0.01;
    std::string label = "run";
    // [spin] - either a direct W0 direction or spinor constants
    Eigen::Vector3d w0{1.0, 0.0, 0.0};
    bool use_spinor_constants = false;
    std::complex<double> c1{1.0, 0.0}, c2{0.0, 0.0}, d1{0.0, 0.0}, d2{0.0, 0.0};
    double hbar = 0.0;
    // [integrator]
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double max_step = 0.5;
    double chi0 = 0.0;
    int chi_d_sign = kDefaultChiDSign;

    /// Throws ConfigError naming the offending field.
    void validate() const;

    IntegratorConfig integrator() const;
};

/// Parses the file at `path`. Unknown keys and malformed values raise
/// ConfigError with section/key context.
RunConfig load_config(const std::string& path);

/// Same parser on an in-memory string (used by tests and presets).
RunConfig parse_config(const std::string& text, const std::string& origin = "<string>");

/// The three built-in orbit presets matching the published panel parameters
/// (E, Lz, kappa pinned; M = 1.5, a = 0.8 chosen so all three initial radii
/// are in the allowed region).
RunConfig caption_preset(int which);

}  // namespace kerrspin
