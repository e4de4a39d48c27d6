#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kerrspin/marck.hpp"

using namespace kerrspin;

namespace {

std::mt19937_64 rng(777);

double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

GeodesicState random_state(const BlackHoleParams& bh, double& kappa) {
    for (int attempt = 0; attempt < 200; ++attempt) {
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

TEST_CASE("static legs: orthonormal, orthogonal to U, L3 from the 2-form") {
    BlackHoleParams bh(1.0, 0.8);
    for (int n = 0; n < 100; ++n) {
        double kappa = 0.0;
        const GeodesicState st = random_state(bh, kappa);
        const MarckStaticLegs legs = marck_static_legs(st, kappa, bh);
        const MetricComponents mc = metric_at(st.point, bh);
        auto dot = [&](const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
            return double(a.transpose() * mc.g * b);
        };
        for (const auto* v : {&legs.L3, &legs.Lt1, &legs.Lt2}) {
            CHECK(dot(*v, *v) == doctest::Approx(-1.0));
            CHECK(std::abs(dot(*v, st.velocity)) < 1e-10);
        }
        CHECK(std::abs(dot(legs.L3, legs.Lt1)) < 1e-10);
        CHECK(std::abs(dot(legs.L3, legs.Lt2)) < 1e-10);
        CHECK(std::abs(dot(legs.Lt1, legs.Lt2)) < 1e-10);

        // L3^mu = g^{mu nu} U^sigma f_{sigma nu} / sqrt(kappa) (the contraction
        // order fixes the sign).
        const KillingStructures ks = killing_structures_at(st.point, bh);
        const Eigen::Vector4d fu =
            mc.ginv * (ks.f.transpose() * st.velocity) / std::sqrt(kappa);
        CHECK((fu - legs.L3).norm() < 1e-10);
    }
}

TEST_CASE("chi rotation mixes only the tilde pair") {
    BlackHoleParams bh(1.0, 0.8);
    double kappa = 0.0;
    const GeodesicState st = random_state(bh, kappa);
    const MarckStaticLegs legs = marck_static_legs(st, kappa, bh);
    const MarckFrame f0 = marck_frame_at(st, kappa, 0.0, bh);
    CHECK((f0.legs[0] - st.velocity).norm() == 0.0);
    CHECK((f0.legs[1] - legs.Lt1).norm() < 1e-14);
    CHECK((f0.legs[2] - legs.Lt2).norm() < 1e-14);
    CHECK((f0.legs[3] - legs.L3).norm() < 1e-14);

    const double chi = 0.9;
    const MarckFrame fc = marck_frame_at(st, kappa, chi, bh);
    CHECK((fc.legs[1] - (std::cos(chi) * legs.Lt1 - std::sin(chi) * legs.Lt2)).norm() < 1e-13);
    CHECK((fc.legs[2] - (std::sin(chi) * legs.Lt1 + std::cos(chi) * legs.Lt2)).norm() < 1e-13);
    CHECK((fc.legs[3] - legs.L3).norm() == 0.0);
}

TEST_CASE("frame components agree with the coordinate legs") {
    BlackHoleParams bh(1.3, 0.9);
    for (int n = 0; n < 50; ++n) {
        double kappa = 0.0;
        const GeodesicState st = random_state(bh, kappa);
        const MarckStaticLegs legs = marck_static_legs(st, kappa, bh);
        const MarckStaticFrameLegs fl = marck_static_frame_legs(st, kappa, bh);
        const SymmetricFrame sf = symmetric_frame_at(st.point, bh);
        CHECK((from_frame(sf, fl.l3) - legs.L3).norm() < 1e-12);
        CHECK((from_frame(sf, fl.lt1) - legs.Lt1).norm() < 1e-12);
        CHECK((from_frame(sf, fl.lt2) - legs.Lt2).norm() < 1e-12);
        CHECK((from_frame(sf, fl.u) - st.velocity).norm() < 1e-11);
    }
}

TEST_CASE("chi rate: worked equatorial example") {
    // M = 1, a = 0.6, E = 1, Lz = 2, r = 10, equatorial branch.
    BlackHoleParams bh(1.0, 0.6);
    const double kappa = std::pow(0.6 - 2.0, 2);  // 1.96
    ConservedSet cs{1.0, 2.0, kappa};
    const GeodesicState st = initial_state_from_constants(cs, 10.0, M_PI / 2.0, 0.0, 1, 1, bh);
    // sqrt(kappa)/Sigma * [P/(r^2+kappa) + d_sign * a D/(kappa)] with
    // P = 99.16, D = -1.4, Sigma = 100.
    const double expected = 1.4 / 100.0 * (99.16 / 101.96 + 0.6 * 1.4 / 1.96);
    CHECK(chi_rate(st, kappa, bh) == doctest::Approx(expected));
    CHECK(chi_rate(st, kappa, bh) == doctest::Approx(0.0196156).epsilon(1e-4));
}

TEST_CASE("parallel transport residual selects the D-term sign") {
    BlackHoleParams bh(1.0, 0.8);
    ConservedSet cs{1.02, 3.0, 10.0};
    const GeodesicState s0 = initial_state_from_constants(cs, 12.0, 1.2, 0.0, 1, 1, bh);
    IntegratorConfig ic;
    ic.tau_max = 40.0;
    ic.tau_step = 0.05;

    auto transport_residual = [&](int d_sign) {
        IntegratorConfig cfg = ic;
        cfg.chi_d_sign = d_sign;
        const Trajectory traj = integrate_geodesic(s0, cfg, bh);
        const double h = 1e-3;
        double worst = 0.0;
        for (int n = 1; n <= 30; ++n) {
            const double tau = 2.0 + (ic.tau_max - 4.0) * n / 30.0;
            auto frame = [&](double t) {
                return marck_frame_at(traj.state_at(t), cs.kappa, traj.chi_at(t), bh);
            };
            const auto fm2 = frame(tau - 2 * h), fm1 = frame(tau - h), fp1 = frame(tau + h),
                       fp2 = frame(tau + 2 * h);
            const GeodesicState st = traj.state_at(tau);
            const auto gamma = christoffels_at(st.point, bh);
            const MarckFrame f0 = frame(tau);
            for (int a = 1; a < 4; ++a) {
                Eigen::Vector4d resid = (-fp2.legs[a] + 8.0 * fp1.legs[a] - 8.0 * fm1.legs[a] +
                                         fm2.legs[a]) /
                                        (12.0 * h);
                for (int mu = 0; mu < 4; ++mu) {
                    resid(mu) += st.velocity.transpose() * gamma[mu] * f0.legs[a];
                }
                worst = std::max(worst, resid.norm());
            }
        }
        return worst;
    };

    const double good = transport_residual(kDefaultChiDSign);
    const double bad = transport_residual(-kDefaultChiDSign);
    CHECK(good < 1e-6);
    CHECK(bad > 1e-3);  // the flipped sign is decisively rejected
}

TEST_CASE("degenerate configurations are rejected") {
    BlackHoleParams bh(1.0, 0.8);
    GeodesicState st;
    st.point = {0.0, 10.0, 0.3, 0.0};  // a^2 cos^2(theta) ~ 0.584
    st.velocity << 1.0, 0.0, 0.0, 0.0;
    CHECK_THROWS_AS(marck_static_legs(st, 0.1, bh), DomainError);   // kappa below a^2 c^2
    CHECK_THROWS_AS(marck_static_legs(st, -1.0, bh), DomainError);  // negative kappa
    CHECK_THROWS_AS(chi_rate(st, 0.1, bh), DomainError);
}

TEST_CASE("propagated frames match per-sample assembly") {
    BlackHoleParams bh(1.5, 0.8);
    ConservedSet cs{1.004, 4.0, 16.0};
    const GeodesicState s0 = initial_state_from_constants(cs, 20.0, 1.57, 0.0, 1, 1, bh);
    IntegratorConfig ic;
    ic.tau_max = 30.0;
    ic.tau_step = 0.1;
    const Trajectory traj = integrate_geodesic(s0, ic, bh);
    const auto frames = propagate_marck_frame(traj);
    REQUIRE(frames.size() == traj.samples.size());
    for (std::size_t i = 0; i < frames.size(); i += 17) {
        const MarckFrame direct = marck_frame_at(traj.samples[i].state,
                                                 traj.constants.kappa, traj.samples[i].chi, bh);
        for (int a = 0; a < 4; ++a) CHECK((frames[i].legs[a] - direct.legs[a]).norm() == 0.0);
    }
}
