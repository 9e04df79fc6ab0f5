#pragma once

#include <array>
#include <optional>

#include "refdriver/types.hpp"

namespace refdriver {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Linear interpolation within a trajectory. Headings follow the shortest
/// angular arc. Sample times are returned bit-exactly.
/// Throws OutOfRange when t lies outside [first, last].
TrajectorySample interpolate(const Trajectory& traj, double t);

/// Bumper-to-bumper distance along the road axis. Negative while the
/// footprints overlap longitudinally.
double longitudinal_gap(const TrajectorySample& ego, const VehicleGeometry& ego_geom,
                        const TrajectorySample& pov, const VehicleGeometry& pov_geom);

/// Longitudinal time-to-collision: gap over closing speed. No value when the
/// gap is opening (closing <= 0); negative during longitudinal overlap.
std::optional<double> ttc(const TrajectorySample& ego, const VehicleGeometry& ego_geom,
                          const TrajectorySample& pov, const VehicleGeometry& pov_geom);

/// Signed intrusion of the POV corner nearest the ego lane past the shared
/// lane marking. Negative while the POV is entirely in its original lane.
double ldbo_distance(const TrajectorySample& pov, const VehicleGeometry& pov_geom,
                     const LaneLayout& lane);

OrientedBox footprint(const TrajectorySample& s, const VehicleGeometry& g);

std::array<Vec2, 4> box_corners(const OrientedBox& box);

/// Separating-axis test over the four edge normals. Touching counts as overlap.
bool boxes_overlap(const OrientedBox& a, const OrientedBox& b);

/// Penetration depth along the least-overlapping edge normal, or nullopt when
/// the boxes are separated.
std::optional<double> overlap_penetration(const OrientedBox& a, const OrientedBox& b);

/// Minimum Euclidean distance between the two rectangles; 0 when they touch
/// or overlap.
double box_clearance(const OrientedBox& a, const OrientedBox& b);

/// Projection of the footprint onto the lateral (y) axis: {low, high}.
std::pair<double, double> lateral_extent(const OrientedBox& box);

/// True when the footprints' lateral extents intersect.
bool lateral_overlap(const OrientedBox& a, const OrientedBox& b);

}  // namespace refdriver
