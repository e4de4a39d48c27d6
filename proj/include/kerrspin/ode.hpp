#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace kerrspin {

using OdeRhs = std::function<void(double t, const Eigen::VectorXd& y, Eigen::VectorXd& dydt)>;

/// One accepted step with the DOPRI5 continuous extension (4th-order
/// interpolant on [t0, t0+h]).
struct DenseStep {
    double t0;
    double h;
    Eigen::VectorXd r1, r2, r3, r4, r5;

    Eigen::VectorXd eval(double t) const;
};

struct OdeOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double max_step = 0.5;
    double initial_step = 1e-3;
    /// Called after each accepted step; returning true stops the integration
    /// there with `aborted` set.
    std::function<bool(double t, const Eigen::VectorXd& y)> stop;
};

struct OdeSolution {
    std::vector<DenseStep> steps;
    double t_end = 0.0;
    Eigen::VectorXd y_end;
    std::size_t n_accepted = 0;
    std::size_t n_rejected = 0;
    bool aborted = false;
    std::string abort_reason;

    /// Dense-output evaluation for t in [t0, t_end].
    Eigen::VectorXd at(double t) const;
};

/// Adaptive Dormand-Prince 5(4) with dense output; integrates forward in t.
OdeSolution integrate_dopri5(const OdeRhs& rhs, double t0, const Eigen::VectorXd& y0,
                             double t1, const OdeOptions& opts);

}  // namespace kerrspin
