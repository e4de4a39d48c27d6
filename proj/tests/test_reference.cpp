#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kerrspin/marck.hpp"
#include "kerrspin/reference.hpp"

using namespace kerrspin;

namespace {

std::mt19937_64 rng(424242);

double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

GeodesicState random_state(const BlackHoleParams& bh, double& kappa) {
    for (int attempt = 0; attempt < 300; ++attempt) {
        GeodesicState st;
        st.point = {0.0, uni(1.2 * bh.outer_horizon(), 25.0), uni(0.3, M_PI - 0.3),
                    uni(0.0, 2 * M_PI)};
        const SymmetricFrame sf = symmetric_frame_at(st.point, bh);
        Eigen::Vector4d vf;
        vf << 0.0, uni(-0.7, 0.7), uni(-0.7, 0.7), uni(-0.7, 0.7);
        vf(0) = std::sqrt(1.0 + vf.tail<3>().squaredNorm());
        st.velocity = from_frame(sf, vf);
        kappa = carter_constant(st.velocity, st.point, bh);
        const double c = std::cos(st.point.theta);
        if (kappa > 0.05 && kappa - bh.a * bh.a * c * c > 0.05) return st;
    }
    FAIL("rejection sampling failed");
    return {};
}

}  // namespace

TEST_CASE("closed-form triad is an orthonormal rest-space basis") {
    BlackHoleParams bh(1.0, 0.8);
    for (int n = 0; n < 100; ++n) {
        double kappa = 0.0;
        const GeodesicState st = random_state(bh, kappa);
        const ReferenceTriad tri = reference_triad_at(st, kappa, bh);
        const MetricComponents mc = metric_at(st.point, bh);
        auto dot = [&](const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
            return double(a.transpose() * mc.g * b);
        };
        const Eigen::Vector4d* v[3] = {&tri.X, &tri.Y, &tri.Z};
        for (int i = 0; i < 3; ++i) {
            CHECK(dot(*v[i], *v[i]) == doctest::Approx(-1.0));
            CHECK(std::abs(dot(*v[i], st.velocity)) < 1e-10);
            for (int j = i + 1; j < 3; ++j) CHECK(std::abs(dot(*v[i], *v[j])) < 1e-10);
        }
        CHECK(tri.rho > 0.0);
        CHECK(tri.varrho > 0.0);
    }
}

TEST_CASE("Gram-Schmidt construction reproduces the closed forms") {
    BlackHoleParams bh(1.0, 0.8);
    for (int n = 0; n < 100; ++n) {
        double kappa = 0.0;
        const GeodesicState st = random_state(bh, kappa);
        const ReferenceTriad closed = reference_triad_at(st, kappa, bh);
        const ReferenceTriad gs = triad_via_gram_schmidt(st, kappa, bh);
        CHECK((closed.X - gs.X).norm() < 1e-10);
        CHECK((closed.Y - gs.Y).norm() < 1e-10);
        CHECK((closed.Z - gs.Z).norm() < 1e-10);
    }
}

TEST_CASE("frame components agree with the coordinate triad") {
    BlackHoleParams bh(1.3, 0.6);
    for (int n = 0; n < 50; ++n) {
        double kappa = 0.0;
        const GeodesicState st = random_state(bh, kappa);
        const ReferenceTriad tri = reference_triad_at(st, kappa, bh);
        const auto frame = reference_triad_frame(st, kappa, bh);
        const SymmetricFrame sf = symmetric_frame_at(st.point, bh);
        CHECK((from_frame(sf, frame[0]) - tri.X).norm() < 1e-12);
        CHECK((from_frame(sf, frame[1]) - tri.Y).norm() < 1e-12);
        CHECK((from_frame(sf, frame[2]) - tri.Z).norm() < 1e-12);
    }
}

TEST_CASE("rest-space volume form: orientation and degeneracies") {
    BlackHoleParams bh(1.0, 0.8);
    for (int n = 0; n < 30; ++n) {
        double kappa = 0.0;
        const GeodesicState st = random_state(bh, kappa);
        const ReferenceTriad tri = reference_triad_at(st, kappa, bh);
        // Both orthonormal rest-space triads are positively oriented.
        CHECK(volume_form_on(st, bh, tri.X, tri.Y, tri.Z) == doctest::Approx(1.0));
        const MarckFrame mf = marck_frame_at(st, kappa, uni(0.0, 6.28), bh);
        CHECK(volume_form_on(st, bh, mf.legs[1], mf.legs[2], mf.legs[3]) ==
              doctest::Approx(1.0));
        // Antisymmetry and U-degeneracy.
        CHECK(volume_form_on(st, bh, tri.Y, tri.X, tri.Z) == doctest::Approx(-1.0));
        CHECK(std::abs(volume_form_on(st, bh, st.velocity, tri.Y, tri.Z)) < 1e-12);
        CHECK(std::abs(volume_form_on(st, bh, tri.X, tri.X, tri.Z)) < 1e-12);
    }
}

TEST_CASE("degenerate scalars are rejected with a diagnostic") {
    BlackHoleParams bh(1.0, 0.8);
    double kappa = 0.0;
    const GeodesicState st = random_state(bh, kappa);
    // An inconsistent, huge kappa drives varrho = P^2 - Delta(kappa - a^2c^2)
    // negative.
    CHECK_THROWS_WITH_AS(reference_triad_at(st, 1e8, bh),
                         doctest::Contains("reference frame degenerate"), DomainError);
    CHECK_THROWS_AS(triad_via_gram_schmidt(st, 1e8, bh), DomainError);
}
