#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "kerrspin/geodesic.hpp"
#include "kerrspin/geometry.hpp"

namespace kerrspin {

/// Parallel-propagated orthonormal frame along a timelike geodesic:
/// L0 = U, L3 = normalized Killing-Yano image of U, and a chi-rotated pair
/// spanning the remaining 2-plane. Legs are coordinate components.
struct MarckFrame {
    std::array<Eigen::Vector4d, 4> legs;
    double chi = 0.0;
    double tau = 0.0;
};

/// The chi-independent building blocks: L3 and the static pair before the
/// rotation. Throws DomainError when kappa <= 0 or kappa - a^2 cos^2(theta)
/// <= 0 (frame degenerate).
struct MarckStaticLegs {
    Eigen::Vector4d L3;
    Eigen::Vector4d Lt1;
    Eigen::Vector4d Lt2;
};

MarckStaticLegs marck_static_legs(const GeodesicState& state, double kappa,
                                  const BlackHoleParams& bh);

/// Frame components (in the symmetric frame) of the static legs and of the
/// unit velocity. Better conditioned than coordinate components at large
/// radius.
struct MarckStaticFrameLegs {
    Eigen::Vector4d l3, lt1, lt2, u;
};

MarckStaticFrameLegs marck_static_frame_legs(const GeodesicState& state, double kappa,
                                             const BlackHoleParams& bh);

/// Rotation rate of the (Lt1, Lt2) pair that makes the frame parallel
/// propagated:
///   dchi/dtau = (sqrt(kappa)/Sigma) [ P/(r^2+kappa)
///                + d_sign * a sin(theta) D/(kappa - a^2 cos^2 theta) ].
/// d_sign is fixed empirically by the parallel-transport residual
/// (kDefaultChiDSign); both candidates stay available for the oracle test.
double chi_rate(const GeodesicState& state, double kappa, const BlackHoleParams& bh,
                int d_sign = kDefaultChiDSign);

MarckFrame marck_frame_at(const GeodesicState& state, double kappa, double chi,
                          const BlackHoleParams& bh);

/// Assembles the frame at every trajectory sample using the integrated chi.
std::vector<MarckFrame> propagate_marck_frame(const Trajectory& traj);

}  // namespace kerrspin
