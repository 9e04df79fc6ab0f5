#pragma once

#include <string_view>

#include "refdriver/types.hpp"

namespace refdriver {

/// Per-event constants handed to a driver model before its first step.
struct EventContext {
    LaneLayout lane;
    VehicleGeometry ego_geom;
    VehicleGeometry pov_geom;
};

/// Longitudinal-only driver model stepped at a fixed rate by the simulation
/// loop. One instance serves one simulation; distinct simulations use
/// distinct instances.
class DriverModel {
public:
    virtual ~DriverModel() = default;

    virtual std::string_view name() const = 0;

    /// Deceleration the actuator may not exceed for this model, m/s^2.
    virtual double max_decel() const = 0;

    /// Actuation jerk limit, m/s^3.
    virtual double jerk_limit() const = 0;

    virtual void begin_event(const EventContext& ctx) = 0;

    /// Called at monotonically increasing t with the current (simulated) ego
    /// state and the replayed POV state.
    virtual DriverDecision step(double t, const TrajectorySample& ego,
                                const TrajectorySample& pov) = 0;
};

}  // namespace refdriver
