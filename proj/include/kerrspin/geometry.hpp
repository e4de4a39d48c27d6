#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "kerrspin/errors.hpp"

namespace kerrspin {

/// Mass M and angular momentum per unit mass a of the black hole,
/// geometric units (G = c = 1). Only the non-extreme case M > a >= 0 is
/// admitted; the constructor rejects anything else.
struct BlackHoleParams {
    double M;
    double a;

    BlackHoleParams() : M(1.0), a(0.0) {}
    BlackHoleParams(double mass, double spin);

    double outer_horizon() const;  // r+
    double inner_horizon() const;  // r-
};

/// Boyer-Lindquist event (t, r, theta, phi). Valid only in the exterior
/// r > r+ and away from the poles.
struct SpacetimePoint {
    double t = 0.0;
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// Polar exclusion band: theta must lie in [kPoleMargin, pi - kPoleMargin].
inline constexpr double kPoleMargin = 1e-6;

double sigma_of(double r, double theta, const BlackHoleParams& bh);
double delta_of(double r, const BlackHoleParams& bh);

/// Throws DomainError if the point is at or inside the outer horizon, or in
/// the polar exclusion band.
void require_exterior(const SpacetimePoint& p, const BlackHoleParams& bh);

struct MetricComponents {
    Eigen::Matrix4d g;     // covariant components, signature (+,-,-,-)
    Eigen::Matrix4d ginv;  // contravariant components
};

MetricComponents metric_at(const SpacetimePoint& p, const BlackHoleParams& bh);

/// Analytic partials of the covariant metric: [0] = d/dr, [1] = d/dtheta.
/// (t and phi are Killing directions.)
std::array<Eigen::Matrix4d, 2> metric_derivatives_at(const SpacetimePoint& p,
                                                     const BlackHoleParams& bh);

/// Gamma[mu](alpha, beta) = Christoffel symbols of the second kind.
std::array<Eigen::Matrix4d, 4> christoffels_at(const SpacetimePoint& p,
                                               const BlackHoleParams& bh);

enum class FrameKind { Symmetric, Marck };

/// Orthonormal tetrad anchored at a point. Column a of `legs` holds the
/// Boyer-Lindquist coordinate components of e_a; g(e_a, e_b) = eta_ab.
struct Tetrad {
    Eigen::Matrix4d legs;
    FrameKind kind;
    SpacetimePoint anchor;
};

struct SymmetricFrame {
    Tetrad frame;
    Eigen::Matrix4d coframe;  // row a = covector components of omega^a
    Eigen::Matrix<std::complex<double>, 4, 4> null_coframe;  // rows theta^1..theta^4
};

/// The orthonormal symmetric frame adapted to the principal null directions;
/// e_0 is the Carter observer velocity, e_1 = (l - n)/sqrt(2).
SymmetricFrame symmetric_frame_at(const SpacetimePoint& p, const BlackHoleParams& bh);

/// Frame components of a coordinate-component vector: v^a = <omega^a, v>.
Eigen::Vector4d to_frame(const SymmetricFrame& sf, const Eigen::Vector4d& v_coord);
/// Coordinate components of a frame-component vector.
Eigen::Vector4d from_frame(const SymmetricFrame& sf, const Eigen::Vector4d& v_frame);

struct CarterObserver {
    Eigen::Vector4d velocity;      // O, coordinate components
    Eigen::Vector4d acceleration;  // nabla_O O, coordinate components
    Eigen::Vector4d l;             // principal null directions
    Eigen::Vector4d n;
};

CarterObserver carter_observer_at(const SpacetimePoint& p, const BlackHoleParams& bh);

/// Killing-Yano 2-form f and Killing tensor K = f.f, covariant coordinate
/// components.
struct KillingStructures {
    Eigen::Matrix4d f;
    Eigen::Matrix4d K;
};

KillingStructures killing_structures_at(const SpacetimePoint& p, const BlackHoleParams& bh);

/// Quadratic first integral kappa = K_ij U^i U^j. U must be unit timelike
/// (norm deviation beyond 1e-8 is rejected).
double carter_constant(const Eigen::Vector4d& u, const SpacetimePoint& p,
                       const BlackHoleParams& bh);

inline Eigen::Matrix4d minkowski_eta() {
    Eigen::Matrix4d eta = Eigen::Matrix4d::Zero();
    eta.diagonal() << 1.0, -1.0, -1.0, -1.0;
    return eta;
}

}  // namespace kerrspin
