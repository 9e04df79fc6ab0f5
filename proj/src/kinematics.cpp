#include "refdriver/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "refdriver/errors.hpp"

namespace refdriver {

namespace {

double lerp(double a, double b, double u) { return a + u * (b - a); }

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double u = 0.0;
    if (len2 > 0.0) {
        u = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    }
    const double px = a.x + u * dx - p.x;
    const double py = a.y + u * dy - p.y;
    return std::hypot(px, py);
}

}  // namespace

TrajectorySample interpolate(const Trajectory& traj, double t) {
    if (traj.empty()) {
        throw OutOfRange("interpolate: empty trajectory");
    }
    if (t < traj.front().t || t > traj.back().t) {
        throw OutOfRange("interpolate: t=" + std::to_string(t) + " outside [" +
                         std::to_string(traj.front().t) + ", " + std::to_string(traj.back().t) + "]");
    }
    const auto it = std::lower_bound(traj.begin(), traj.end(), t,
                                     [](const TrajectorySample& s, double v) { return s.t < v; });
    if (it->t == t) {
        return *it;
    }
    const TrajectorySample& hi = *it;
    const TrajectorySample& lo = *(it - 1);
    const double u = (t - lo.t) / (hi.t - lo.t);
    TrajectorySample out;
    out.t = t;
    out.x = lerp(lo.x, hi.x, u);
    out.y = lerp(lo.y, hi.y, u);
    out.speed = lerp(lo.speed, hi.speed, u);
    out.accel = lerp(lo.accel, hi.accel, u);
    out.heading = lo.heading + u * std::remainder(hi.heading - lo.heading, 2.0 * std::numbers::pi);
    return out;
}

double longitudinal_gap(const TrajectorySample& ego, const VehicleGeometry& ego_geom,
                        const TrajectorySample& pov, const VehicleGeometry& pov_geom) {
    return (pov.x - pov_geom.half_length()) - (ego.x + ego_geom.half_length());
}

std::optional<double> ttc(const TrajectorySample& ego, const VehicleGeometry& ego_geom,
                          const TrajectorySample& pov, const VehicleGeometry& pov_geom) {
    const double closing = ego.speed - pov.speed;
    if (closing <= 0.0) {
        return std::nullopt;
    }
    return longitudinal_gap(ego, ego_geom, pov, pov_geom) / closing;
}

double ldbo_distance(const TrajectorySample& pov, const VehicleGeometry& pov_geom,
                     const LaneLayout& lane) {
    const auto corners = box_corners(footprint(pov, pov_geom));
    double intrusion = -std::numeric_limits<double>::infinity();
    for (const Vec2& c : corners) {
        const double d = lane.pov_side == Side::Left ? lane.marking_y - c.y : c.y - lane.marking_y;
        intrusion = std::max(intrusion, d);
    }
    return intrusion;
}

OrientedBox footprint(const TrajectorySample& s, const VehicleGeometry& g) {
    return OrientedBox{s.x, s.y, g.half_length(), g.half_width(), s.heading};
}

std::array<Vec2, 4> box_corners(const OrientedBox& box) {
    const double c = std::cos(box.heading);
    const double s = std::sin(box.heading);
    std::array<Vec2, 4> out;
    const double sx[4] = {+1.0, +1.0, -1.0, -1.0};
    const double sy[4] = {+1.0, -1.0, -1.0, +1.0};
    for (int i = 0; i < 4; ++i) {
        const double lx = sx[i] * box.half_length;
        const double ly = sy[i] * box.half_width;
        out[i] = Vec2{box.center_x + c * lx - s * ly, box.center_y + s * lx + c * ly};
    }
    return out;
}

std::optional<double> overlap_penetration(const OrientedBox& a, const OrientedBox& b) {
    const double dx = b.center_x - a.center_x;
    const double dy = b.center_y - a.center_y;

    const Vec2 axes[4] = {
        {std::cos(a.heading), std::sin(a.heading)},
        {-std::sin(a.heading), std::cos(a.heading)},
        {std::cos(b.heading), std::sin(b.heading)},
        {-std::sin(b.heading), std::cos(b.heading)},
    };
    const double half_a[2] = {a.half_length, a.half_width};
    const double half_b[2] = {b.half_length, b.half_width};

    double min_overlap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        const Vec2& axis = axes[i];
        const double ra = half_a[0] * std::abs(axis.x * axes[0].x + axis.y * axes[0].y) +
                          half_a[1] * std::abs(axis.x * axes[1].x + axis.y * axes[1].y);
        const double rb = half_b[0] * std::abs(axis.x * axes[2].x + axis.y * axes[2].y) +
                          half_b[1] * std::abs(axis.x * axes[3].x + axis.y * axes[3].y);
        const double dist = std::abs(dx * axis.x + dy * axis.y);
        const double overlap = ra + rb - dist;
        if (overlap < 0.0) {
            return std::nullopt;
        }
        min_overlap = std::min(min_overlap, overlap);
    }
    return min_overlap;
}

bool boxes_overlap(const OrientedBox& a, const OrientedBox& b) {
    return overlap_penetration(a, b).has_value();
}

double box_clearance(const OrientedBox& a, const OrientedBox& b) {
    if (boxes_overlap(a, b)) {
        return 0.0;
    }
    const auto ca = box_corners(a);
    const auto cb = box_corners(b);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            best = std::min(best, point_segment_distance(ca[i], cb[j], cb[(j + 1) % 4]));
            best = std::min(best, point_segment_distance(cb[i], ca[j], ca[(j + 1) % 4]));
        }
    }
    return best;
}

std::pair<double, double> lateral_extent(const OrientedBox& box) {
    const double half = std::abs(std::sin(box.heading)) * box.half_length +
                        std::abs(std::cos(box.heading)) * box.half_width;
    return {box.center_y - half, box.center_y + half};
}

bool lateral_overlap(const OrientedBox& a, const OrientedBox& b) {
    const auto [alo, ahi] = lateral_extent(a);
    const auto [blo, bhi] = lateral_extent(b);
    return alo < bhi && blo < ahi;
}

}  // namespace refdriver
