#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "kerrspin/geodesic.hpp"
#include "kerrspin/marck.hpp"
#include "kerrspin/reference.hpp"

namespace kerrspin {

/// Change-of-basis matrix M(tau) between the parallel-propagated spatial legs
/// and the reference triad: M[i][k] = -g(T_i, L_k) with rows over {X, Y, Z}
/// and columns over {L1, L2, L3}. Direct inner-product route; throws on
/// frame/triad anchor mismatch.
Eigen::Matrix3d basis_change_direct(const MarckFrame& marck, const ReferenceTriad& triad,
                                    const BlackHoleParams& bh);

/// Same matrix evaluated through frame components in the symmetric frame;
/// agrees with the direct route but stays well conditioned at large radius.
Eigen::Matrix3d basis_change_frame(const GeodesicState& state, double kappa, double chi,
                                   const BlackHoleParams& bh);

/// Closed-form route for the same matrix, written in the scalars
/// (P, D, SR, STh, rho, varrho, chi).
Eigen::Matrix3d basis_change_closed(const GeodesicState& state, double kappa, double chi,
                                    const BlackHoleParams& bh);

/// Lambda(tau) = M(tau) M(0)^T; Lambda(0) = I and each Lambda is in SO(3).
std::vector<Eigen::Matrix3d> precession_rotation(const std::vector<Eigen::Matrix3d>& m_series);

/// W(tau) = Lambda(tau) W0 for a unit 3-vector W0 (deviations beyond 1e-8
/// rejected).
std::vector<Eigen::Vector3d> evolve_spin(const Eigen::Vector3d& w0,
                                         const std::vector<Eigen::Matrix3d>& lambda_series);

/// Spherical curvature k_g = [W' . (W'' x W)] / ||W'||^3 on a uniform grid of
/// spacing h (>= 5 samples). Fourth-order central differences; the two
/// samples at each end, and points where ||W'|| < 1e-9, are "undefined"
/// (nullopt).
std::vector<std::optional<double>> spherical_curvature(const std::vector<Eigen::Vector3d>& w,
                                                       double h);

/// Bundled per-orbit series.
struct PrecessionSeries {
    std::vector<double> tau;
    std::vector<Eigen::Matrix3d> M;
    std::vector<Eigen::Matrix3d> Lambda;
    std::vector<Eigen::Vector3d> W;
    std::vector<std::optional<double>> kg;
};

/// Full pipeline over a trajectory's sample grid with initial spin direction
/// w0 in the reference triad at tau = 0.
PrecessionSeries precession_series(const Trajectory& traj, const Eigen::Vector3d& w0);

}  // namespace kerrspin
