#pragma once

#include <Eigen/Dense>
#include <array>

#include "kerrspin/geodesic.hpp"
#include "kerrspin/geometry.hpp"

namespace kerrspin {

/// The geometric reference 3-frame {X, Y, Z}: an orthonormal basis of the
/// local rest space of the particle, built from the symmetric frame and the
/// constants of motion. Coordinate components.
struct ReferenceTriad {
    Eigen::Vector4d X, Y, Z;
    double rho = 0.0;     // P^2 - Delta Theta
    double varrho = 0.0;  // P^2 - Delta (kappa - a^2 cos^2 theta)
    SpacetimePoint anchor;
};

/// Closed-form triad. Throws DomainError ("reference frame degenerate")
/// when rho or varrho is non-positive, naming the offending auxiliary.
ReferenceTriad reference_triad_at(const GeodesicState& state, double kappa,
                                  const BlackHoleParams& bh);

/// Constructive route: contract the symmetric frame's spacelike legs with
/// the rest-space volume form in increasing index order, Gram-Schmidt
/// orthonormalize, and fix per-vector signs against the closed forms.
ReferenceTriad triad_via_gram_schmidt(const GeodesicState& state, double kappa,
                                      const BlackHoleParams& bh);

/// Frame components (in the symmetric frame) of the closed-form triad legs
/// {X, Y, Z}. Better conditioned than coordinate components at large radius.
std::array<Eigen::Vector4d, 3> reference_triad_frame(const GeodesicState& state, double kappa,
                                                     const BlackHoleParams& bh);

/// Evaluates the rest-space volume form Omega = *U-flat on three vectors
/// (coordinate components).
double volume_form_on(const GeodesicState& state, const BlackHoleParams& bh,
                      const Eigen::Vector4d& v1, const Eigen::Vector4d& v2,
                      const Eigen::Vector4d& v3);

}  // namespace kerrspin
