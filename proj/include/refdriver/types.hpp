#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace refdriver {

/// Rectangular vehicle footprint, meters.
struct VehicleGeometry {
    double length = 4.5;
    double width = 1.8;

    double half_length() const { return 0.5 * length; }
    double half_width() const { return 0.5 * width; }
};

enum class Side { Left, Right };

/// Road-frame lane geometry around the ego lane.
/// x runs along the road (forward positive), y is lateral (left positive).
struct LaneLayout {
    double lane_width = 3.5;
    Side pov_side = Side::Left;   // side of the ego lane where the POV starts
    double ego_lane_center_y = 0.0;
    double marking_y = 1.75;      // marking between the ego lane and the POV's original lane

    double pov_lane_center_y() const {
        return marking_y + (pov_side == Side::Left ? 0.5 : -0.5) * lane_width;
    }
    /// Sign of lateral motion that brings the POV toward the ego lane.
    double toward_ego_sign() const { return pov_side == Side::Left ? -1.0 : 1.0; }
};

struct TrajectorySample {
    double t = 0.0;        // s
    double x = 0.0;        // m, along road
    double y = 0.0;        // m, left positive
    double speed = 0.0;    // m/s, along road
    double accel = 0.0;    // m/s^2, along road, signed
    double heading = 0.0;  // rad, relative to the road axis
};

using Trajectory = std::vector<TrajectorySample>;

/// One recorded conflict: road-frame traces of both vehicles plus geometry.
struct Scenario {
    std::string id;
    LaneLayout lane;
    VehicleGeometry ego_geom;
    VehicleGeometry pov_geom;
    Trajectory ego_traj;
    Trajectory pov_traj;

    double start_time() const { return std::max(ego_traj.front().t, pov_traj.front().t); }
    double end_time() const { return std::min(ego_traj.back().t, pov_traj.back().t); }
};

struct OrientedBox {
    double center_x = 0.0;
    double center_y = 0.0;
    double half_length = 1.0;  // along heading
    double half_width = 1.0;
    double heading = 0.0;
};

/// Per-step output of a driver model.
struct DriverDecision {
    double requested_decel = 0.0;  // m/s^2, magnitude
    bool triggered = false;        // model considers itself in a braking response
};

}  // namespace refdriver
