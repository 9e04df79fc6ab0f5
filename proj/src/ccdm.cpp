#include "refdriver/ccdm.hpp"

#include <cmath>

#include "refdriver/kinematics.hpp"

namespace refdriver {

std::pair<CcdmState, DriverDecision> ccdm_step(const CcdmState& state, const CcdmParams& params,
                                               double t, const TrajectorySample& ego,
                                               const VehicleGeometry& ego_geom,
                                               const TrajectorySample& pov,
                                               const VehicleGeometry& pov_geom,
                                               double pov_lane_center_y) {
    CcdmState next = state;

    if (next.phase == CcdmPhase::Idle) {
        const double displacement = pov.y - pov_lane_center_y;
        const bool outside = std::abs(displacement) > params.wandering_half_width;
        // Only a displacement toward the ego lane counts as a cut-in.
        const bool toward_ego = displacement * (ego.y - pov_lane_center_y) > 0.0;
        if (outside && toward_ego) {
            next.phase = CcdmPhase::Waiting;
            next.detection_time = t;
        }
    }

    if (next.phase == CcdmPhase::Waiting &&
        t >= next.detection_time + params.risk_perception_time + params.braking_delay) {
        next.phase = CcdmPhase::Armed;
    }

    if (next.phase == CcdmPhase::Armed) {
        const auto gate = ttc(ego, ego_geom, pov, pov_geom);
        if (gate && *gate > 0.0 && *gate < params.ttc_threshold) {
            next.phase = CcdmPhase::Braking;
            next.onset_time = t;
        }
    }

    DriverDecision decision;
    if (next.phase == CcdmPhase::Braking) {
        decision.requested_decel = params.max_decel;
        decision.triggered = true;
    }
    return {next, decision};
}

}  // namespace refdriver
