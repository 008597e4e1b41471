// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/rat.hpp"

namespace plabic {

struct Vec2 {
    Rat x, y;
    Vec2() = default;
    Vec2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Orientation sign of the ordered pair (a, b): +1 counterclockwise, -1 clockwise,
/// 0 collinear (either direction).
inline int pair_sign(const Vec2& a, const Vec2& b) { return cross(a, b).sign(); }

/// True if the open segment (p, q) meets the ray {origin + t*dir, t > 0}.
/// Endpoint or origin incidences are reported through `degenerate` so callers
/// can re-pick the ray direction.
bool segment_ray_crossing(const Vec2& p, const Vec2& q, const Vec2& origin,
                          const Vec2& dir, bool* degenerate);

/// True if the open segments (a1,a2) and (b1,b2) cross at a single interior point.
bool segments_cross(const Vec2& a1, const Vec2& a2, const Vec2& b1, const Vec2& b2);

/// True if point r lies on the closed segment (p, q).
bool point_on_segment(const Vec2& r, const Vec2& p, const Vec2& q);

/// Strict angular comparison of nonzero direction vectors counterclockwise from
/// the positive x axis, i.e. returns true when angle(a) < angle(b) in [0, 2pi).
bool angle_less(const Vec2& a, const Vec2& b);

/// True if nonzero direction d lies strictly inside the counterclockwise sector
/// swept from direction `from` to direction `to` (both nonzero, not collinear).
bool in_ccw_sector(const Vec2& d, const Vec2& from, const Vec2& to);

} // namespace plabic
