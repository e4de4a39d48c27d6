#include "kerrspin/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kerrspin {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Dense output weights (Hairer, Norsett & Wanner).
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

}  // namespace

Eigen::VectorXd DenseStep::eval(double t) const {
    const double th = (t - t0) / h;
    const double th1 = 1.0 - th;
    return r1 + th * (r2 + th1 * (r3 + th * (r4 + th1 * r5)));
}

Eigen::VectorXd OdeSolution::at(double t) const {
    if (steps.empty()) throw std::runtime_error("empty ODE solution");
    const double lo = steps.front().t0;
    const double hi = steps.back().t0 + steps.back().h;
    const double eps = 1e-9 * std::max(1.0, std::abs(hi));
    if (t < lo - eps || t > hi + eps) {
        throw std::runtime_error("dense-output evaluation outside the integrated interval");
    }
    t = std::clamp(t, lo, hi);
    auto it = std::upper_bound(steps.begin(), steps.end(), t,
                               [](double v, const DenseStep& s) { return v < s.t0; });
    if (it != steps.begin()) --it;
    return it->eval(t);
}

OdeSolution integrate_dopri5(const OdeRhs& rhs, double t0, const Eigen::VectorXd& y0,
                             double t1, const OdeOptions& opts) {
    if (!(t1 > t0)) throw std::invalid_argument("integrate_dopri5 requires t1 > t0");
    const Eigen::Index n = y0.size();

    OdeSolution sol;
    sol.y_end = y0;
    if (t1 == t0) {
        sol.t_end = t0;
        return sol;
    }

    Eigen::VectorXd y = y0, ytmp(n), ynew(n), yerr(n);
    Eigen::VectorXd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    rhs(t0, y, k1);

    double t = t0;
    double h = std::min({opts.initial_step, opts.max_step, t1 - t0});
    const double hmin = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t1));

    while (t < t1) {
        h = std::min(h, t1 - t);
        if (h < hmin) {
            sol.aborted = true;
            sol.abort_reason = "step size underflow";
            break;
        }

        ytmp = y + h * a21 * k1;
        rhs(t + c2 * h, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        rhs(t + c3 * h, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        rhs(t + c4 * h, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        rhs(t + c5 * h, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        rhs(t + h, ytmp, k6);
        ynew = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
        rhs(t + h, ynew, k7);
        yerr = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double err = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
            const double q = yerr(i) / sc;
            err += q * q;
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (err <= 1.0) {
            DenseStep ds;
            ds.t0 = t;
            ds.h = h;
            ds.r1 = y;
            ds.r2 = ynew - y;
            ds.r3 = h * k1 - ds.r2;
            ds.r4 = ds.r2 - h * k7 - ds.r3;
            ds.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
            sol.steps.push_back(std::move(ds));

            t += h;
            y = ynew;
            k1 = k7;  // FSAL
            ++sol.n_accepted;
            if (opts.stop && opts.stop(t, y)) {
                sol.aborted = true;
                sol.abort_reason = "stopped by callback";
                break;
            }
        } else {
            ++sol.n_rejected;
        }

        const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(fac, 0.2, 5.0);
        h = std::min(h, opts.max_step);
    }

    sol.t_end = t;
    sol.y_end = y;
    return sol;
}

}  // namespace kerrspin
