#pragma once

#include <utility>

#include "refdriver/driver_model.hpp"
#include "refdriver/types.hpp"

namespace refdriver {

/// Competent-and-careful driver model parameters (UNECE R157 cut-in branch).
struct CcdmParams {
    double wandering_half_width = 0.375;  // m, lane-keeping envelope around the POV lane center
    double risk_perception_time = 0.4;    // s
    double braking_delay = 0.75;          // s
    double ttc_threshold = 2.0;           // s, braking gate
    double max_decel = 7.6;               // m/s^2
    double jerk = 12.65;                  // m/s^3
};

enum class CcdmPhase { Idle, Waiting, Armed, Braking };

/// Latched state machine: Idle -> Waiting -> Armed -> Braking, no regression.
struct CcdmState {
    CcdmPhase phase = CcdmPhase::Idle;
    double detection_time = 0.0;  // set on Idle -> Waiting
    double onset_time = 0.0;      // set on Armed -> Braking
};

/// One step of the CCDM. Detection latches at the first sample where the POV
/// center leaves the wandering zone toward the ego lane; braking starts at
/// the first step after the summed delays where 0 < TTC < ttc_threshold.
/// A model that never brakes is a valid outcome.
std::pair<CcdmState, DriverDecision> ccdm_step(const CcdmState& state, const CcdmParams& params,
                                               double t, const TrajectorySample& ego,
                                               const VehicleGeometry& ego_geom,
                                               const TrajectorySample& pov,
                                               const VehicleGeometry& pov_geom,
                                               double pov_lane_center_y);

class CcdmModel : public DriverModel {
public:
    explicit CcdmModel(const CcdmParams& params) : params_(params) {}

    std::string_view name() const override { return "ccdm"; }
    double max_decel() const override { return params_.max_decel; }
    double jerk_limit() const override { return params_.jerk; }

    void begin_event(const EventContext& ctx) override {
        ctx_ = ctx;
        state_ = CcdmState{};
    }

    DriverDecision step(double t, const TrajectorySample& ego,
                        const TrajectorySample& pov) override {
        auto [next, decision] = ccdm_step(state_, params_, t, ego, ctx_.ego_geom, pov,
                                          ctx_.pov_geom, ctx_.lane.pov_lane_center_y());
        state_ = next;
        return decision;
    }

    const CcdmState& state() const { return state_; }

private:
    CcdmParams params_;
    EventContext ctx_;
    CcdmState state_;
};

}  // namespace refdriver
