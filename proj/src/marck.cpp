#include "kerrspin/marck.hpp"

#include <cmath>
#include <sstream>

namespace kerrspin {

namespace {

void require_nondegenerate(double kappa, double theta, const BlackHoleParams& bh) {
    if (!(kappa > 0.0)) {
        throw DomainError("Marck frame undefined: kappa <= 0");
    }
    const double c = std::cos(theta);
    if (!(kappa - bh.a * bh.a * c * c > 0.0)) {
        std::ostringstream os;
        os << "Marck frame degenerate: kappa - a^2 cos^2(theta) = "
           << kappa - bh.a * bh.a * c * c << " <= 0";
        throw DomainError(os.str());
    }
}

// E, Lz read off the state; kappa is supplied by the caller, so the Killing
// tensor is not needed here.
ConservedSet linear_constants(const GeodesicState& state, double kappa,
                              const BlackHoleParams& bh) {
    const MetricComponents mc = metric_at(state.point, bh);
    const Eigen::Vector4d u_cov = mc.g * state.velocity;
    return {u_cov(0), -u_cov(3), kappa};
}

}  // namespace

MarckStaticFrameLegs marck_static_frame_legs(const GeodesicState& state, double kappa,
                                             const BlackHoleParams& bh) {
    require_nondegenerate(kappa, state.point.theta, bh);

    const double r = state.point.r;
    const double c = std::cos(state.point.theta);
    const double sigma = sigma_of(r, state.point.theta, bh);
    const double delta = delta_of(r, bh);
    const ConservedSet cs = linear_constants(state, kappa, bh);
    const Potentials pot = potentials_at(r, state.point.theta, cs, bh);

    // Signed radial/polar "momenta": SR = Sigma rdot = +-sqrt(R), likewise STh.
    const double SR = sigma * state.velocity(1);
    const double STh = sigma * state.velocity(2);
    const double sqD = std::sqrt(delta);
    const double sqKS = std::sqrt(kappa * sigma);
    const double ac = bh.a * c;
    // Unit-norm consistency requires the square root of the paper's varpi here.
    const double pf = std::sqrt((kappa - ac * ac) / (r * r + kappa));

    MarckStaticFrameLegs out;
    out.l3 << ac * SR / sqD, ac * pot.P / sqD, r * STh, -r * pot.D;
    out.l3 /= sqKS;
    out.lt1 << pf * r * SR / sqD, pf * r * pot.P / sqD, -ac * STh / pf, ac * pot.D / pf;
    out.lt1 /= sqKS;
    out.lt2 << pf * pot.P / sqD, pf * SR / sqD, pot.D / pf, STh / pf;
    out.lt2 /= std::sqrt(sigma);
    out.u << pot.P / sqD, SR / sqD, pot.D, STh;
    out.u /= std::sqrt(sigma);
    return out;
}

MarckStaticLegs marck_static_legs(const GeodesicState& state, double kappa,
                                  const BlackHoleParams& bh) {
    const MarckStaticFrameLegs fl = marck_static_frame_legs(state, kappa, bh);
    const SymmetricFrame sf = symmetric_frame_at(state.point, bh);
    MarckStaticLegs out;
    out.L3 = from_frame(sf, fl.l3);
    out.Lt1 = from_frame(sf, fl.lt1);
    out.Lt2 = from_frame(sf, fl.lt2);
    return out;
}

double chi_rate(const GeodesicState& state, double kappa, const BlackHoleParams& bh,
                int d_sign) {
    require_nondegenerate(kappa, state.point.theta, bh);
    const double r = state.point.r;
    const double s = std::sin(state.point.theta);
    const double c = std::cos(state.point.theta);
    const double sigma = sigma_of(r, state.point.theta, bh);
    const ConservedSet cs = linear_constants(state, kappa, bh);
    const Potentials pot = potentials_at(r, state.point.theta, cs, bh);

    const double sgn = (d_sign >= 0) ? 1.0 : -1.0;
    return std::sqrt(kappa) / sigma *
           (pot.P / (r * r + kappa) +
            sgn * bh.a * s * pot.D / (kappa - bh.a * bh.a * c * c));
}

MarckFrame marck_frame_at(const GeodesicState& state, double kappa, double chi,
                          const BlackHoleParams& bh) {
    const MarckStaticLegs st = marck_static_legs(state, kappa, bh);
    MarckFrame mf;
    mf.chi = chi;
    mf.tau = state.tau;
    mf.legs[0] = state.velocity;
    mf.legs[1] = std::cos(chi) * st.Lt1 - std::sin(chi) * st.Lt2;
    mf.legs[2] = std::sin(chi) * st.Lt1 + std::cos(chi) * st.Lt2;
    mf.legs[3] = st.L3;
    return mf;
}

std::vector<MarckFrame> propagate_marck_frame(const Trajectory& traj) {
    std::vector<MarckFrame> out;
    out.reserve(traj.samples.size());
    for (const auto& smp : traj.samples) {
        out.push_back(marck_frame_at(smp.state, traj.constants.kappa, smp.chi, traj.params));
    }
    return out;
}

}  // namespace kerrspin
