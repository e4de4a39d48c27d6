#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kerrspin/spinor.hpp"

using namespace kerrspin;

namespace {

const Eigen::Matrix4d kEta = minkowski_eta();

std::mt19937_64 rng(3141);

double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("gamma matrices satisfy the Clifford relations") {
    const GammaAlgebra g = clifford_basis();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Matrix4cd anti = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a];
            CHECK((anti - 2.0 * kEta(a, b) * Matrix4cd::Identity()).norm() == 0.0);
        }
    // Hermiticity pattern of the standard representation.
    CHECK((g.gamma[0] - g.gamma[0].adjoint()).norm() == 0.0);
    for (int k = 1; k < 4; ++k) CHECK((g.gamma[k] + g.gamma[k].adjoint()).norm() == 0.0);
    // sigma^{ab} = (i/2)[gamma^a, gamma^b], antisymmetric in (a,b).
    const complexd iu{0.0, 1.0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Matrix4cd expect =
                0.5 * iu * (g.gamma[a] * g.gamma[b] - g.gamma[b] * g.gamma[a]);
            CHECK((g.sigma(a, b) - expect).norm() == 0.0);
            CHECK((g.sigma(a, b) + g.sigma(b, a)).norm() == 0.0);
        }
}

TEST_CASE("Lorentz generator commutators close with the factor 2") {
    const GammaAlgebra g = clifford_basis();
    const complexd iu{0.0, 1.0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const Matrix4cd lhs =
                        g.sigma(a, b) * g.sigma(c, d) - g.sigma(c, d) * g.sigma(a, b);
                    const Matrix4cd rhs =
                        2.0 * iu *
                        (kEta(a, d) * g.sigma(b, c) - kEta(a, c) * g.sigma(b, d) +
                         kEta(b, c) * g.sigma(a, d) - kEta(b, d) * g.sigma(a, c));
                    CHECK((lhs - rhs).norm() == 0.0);
                }
}

TEST_CASE("basis spinors: rest frame reduces to the canonical basis") {
    const BasisSpinors bs = basis_spinors(Eigen::Vector4d(1.0, 0.0, 0.0, 0.0), 1.0);
    CHECK((bs.b01 - Vector4cd::Unit(0)).norm() == 0.0);
    CHECK((bs.b02 - Vector4cd::Unit(1)).norm() == 0.0);
    CHECK((bs.b11 - Vector4cd::Unit(2)).norm() == 0.0);
    CHECK((bs.b12 - Vector4cd::Unit(3)).norm() == 0.0);
}

TEST_CASE("basis spinors solve the momentum-space equations") {
    const GammaAlgebra g = clifford_basis();
    for (int n = 0; n < 50; ++n) {
        const double m = uni(0.5, 2.0);
        Eigen::Vector4d p;
        p << 0.0, uni(-1.0, 1.0), uni(-1.0, 1.0), uni(-1.0, 1.0);
        p(0) = std::sqrt(m * m + p.tail<3>().squaredNorm());
        const BasisSpinors bs = basis_spinors(p, m);

        Matrix4cd slash = Matrix4cd::Zero();
        for (int a = 0; a < 4; ++a) slash += g.gamma[a] * (kEta(a, a) * p(a));
        CHECK(((slash - m * Matrix4cd::Identity()) * bs.b01).norm() < 1e-13);
        CHECK(((slash - m * Matrix4cd::Identity()) * bs.b02).norm() < 1e-13);
        CHECK(((slash + m * Matrix4cd::Identity()) * bs.b11).norm() < 1e-13);
        CHECK(((slash + m * Matrix4cd::Identity()) * bs.b12).norm() < 1e-13);

        // Dirac-adjoint orthonormality: +1 on the particle pair, -1 on the
        // complement, all cross terms vanishing.
        auto bar = [&](const Vector4cd& x, const Vector4cd& y) {
            return complexd((x.adjoint() * (g.gamma[0] * y))(0, 0));
        };
        const Vector4cd all[4] = {bs.b01, bs.b02, bs.b11, bs.b12};
        const double expect[4] = {1.0, 1.0, -1.0, -1.0};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const complexd v = bar(all[i], all[j]);
                CHECK(std::abs(v - (i == j ? complexd(expect[i]) : complexd(0.0))) < 1e-13);
            }
    }
}

TEST_CASE("basis spinors reject invalid momenta") {
    CHECK_THROWS_AS(basis_spinors(Eigen::Vector4d(0.5, 1.0, 0.0, 0.0), 1.0), DomainError);
    CHECK_THROWS_AS(basis_spinors(Eigen::Vector4d(-1.2, 0.0, 0.0, 0.0), 1.0), DomainError);
}

TEST_CASE("leading spin vector: closed-form substitutions") {
    SpinorConstants sc;
    sc.c1 = {1.0, 0.0};
    sc.c2 = {0.0, 0.0};
    CHECK((spin_vector_pp(sc).W0 - Eigen::Vector4d(0, 0, 0, -1)).norm() < 1e-15);

    sc.c1 = sc.c2 = complexd{1.0 / std::sqrt(2.0), 0.0};
    CHECK((spin_vector_pp(sc).W0 - Eigen::Vector4d(0, 1, 0, 0)).norm() < 1e-15);

    sc.c1 = {1.0 / std::sqrt(2.0), 0.0};
    sc.c2 = {0.0, 1.0 / std::sqrt(2.0)};
    CHECK((spin_vector_pp(sc).W0 - Eigen::Vector4d(0, 0, -1, 0)).norm() < 1e-15);

    // W0 is a unit spacelike vector orthogonal to the frame time leg for any
    // admissible constants.
    for (int n = 0; n < 30; ++n) {
        SpinorConstants r;
        r.c1 = {uni(-1, 1), uni(-1, 1)};
        r.c2 = {uni(-1, 1), uni(-1, 1)};
        if (std::norm(r.c1) + std::norm(r.c2) < 1e-3) continue;
        const Eigen::Vector4d w = spin_vector_pp(r).W0;
        CHECK(w(0) == 0.0);
        CHECK(w.tail<3>().norm() == doctest::Approx(1.0));
    }
}

TEST_CASE("subleading spin vector vanishes without d-constants") {
    SpinorConstants sc;
    sc.c1 = {0.6, -0.2};
    sc.c2 = {0.3, 0.7};
    CHECK(spin_vector_pp(sc).W1.norm() == 0.0);
    sc.d1 = {0.1, 0.2};
    sc.d2 = {-0.3, 0.05};
    const SpinVectorPP w = spin_vector_pp(sc);
    CHECK(w.W1.norm() > 0.0);
    // combined() assembles W0 + hbar W1.
    CHECK((w.combined(0.25) - (w.W0 + 0.25 * w.W1)).norm() == 0.0);

    SpinorConstants zero;
    zero.c1 = zero.c2 = {0.0, 0.0};
    CHECK_THROWS_AS(spin_vector_pp(zero), DomainError);
}

TEST_CASE("scalar amplitude: magnitude, propagation, turning-point guard") {
    BlackHoleParams bh(1.0, 0.8);
    ConservedSet cs{1.02, 3.0, 10.0};
    const GeodesicState st = initial_state_from_constants(cs, 15.0, 1.3, 0.0, -1, 1, bh);
    const double kappa = cs.kappa;
    const ScalarAmplitude amp = scalar_amplitude(st, kappa, {2.0, 0.0}, 0.4, bh);
    const Potentials pot = potentials_at(15.0, 1.3, cs, bh);
    CHECK(std::abs(amp.beta) ==
          doctest::Approx(2.0 / std::sqrt(pot.R * pot.Theta * std::sin(1.3))));
    // The two derivative routes agree.
    for (int a = 0; a < 4; ++a) {
        CHECK(std::abs(amp.deriv_closed[a] - amp.deriv_direct[a]) /
                  (1e-30 + std::abs(amp.deriv_direct[a])) <
              1e-8);
    }
    // Equatorial orbits sit exactly on a polar turning point: breakdown.
    ConservedSet eq{1.0, 2.0, std::pow(0.8 - 2.0, 2)};
    const GeodesicState ste =
        initial_state_from_constants(eq, 10.0, M_PI / 2.0, 0.0, 1, 1, bh);
    CHECK_THROWS_WITH_AS(scalar_amplitude(ste, eq.kappa, {1.0, 0.0}, 0.0, bh),
                         doctest::Contains("semiclassical breakdown"), DomainError);
}

TEST_CASE("polarization correction term cancels") {
    BlackHoleParams bh(1.0, 0.8);
    ConservedSet cs{1.02, 3.0, 10.0};
    const GeodesicState st = initial_state_from_constants(cs, 15.0, 1.3, 0.0, 1, -1, bh);
    for (int n = 0; n < 20; ++n) {
        const complexd c1{uni(-1, 1), uni(-1, 1)};
        const complexd c2{uni(-1, 1), uni(-1, 1)};
        CHECK(verify_gordon_r_term(st, cs.kappa, c1, c2, uni(0.0, 6.28), bh) < 1e-12);
    }
}
