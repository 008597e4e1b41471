// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/geom.hpp"

namespace plabic {

bool segment_ray_crossing(const Vec2& p, const Vec2& q, const Vec2& origin,
                          const Vec2& dir, bool* degenerate) {
    if (degenerate) *degenerate = false;
    Vec2 seg = q - p;
    Rat denom = cross(dir, seg);
    // Solve origin + t*dir == p + u*seg.
    Vec2 w = p - origin;
    if (denom.is_zero()) {
        // Parallel. Collinear overlap counts as degenerate.
        if (cross(dir, w).is_zero()) {
            if (degenerate) *degenerate = true;
        }
        return false;
    }
    // origin + t*dir == p + u*seg
    Rat t = cross(w, seg) / denom;
    Rat u = cross(w, dir) / denom;
    if (t.sign() < 0) return false;
    if (u.sign() < 0 || u > Rat(1)) return false;
    bool interior = u.sign() > 0 && u < Rat(1) && t.sign() > 0;
    if (!interior) {
        // Touching at an endpoint of the segment or at the ray origin.
        if (degenerate) *degenerate = true;
        return false;
    }
    return true;
}

bool point_on_segment(const Vec2& r, const Vec2& p, const Vec2& q) {
    if (!cross(q - p, r - p).is_zero()) return false;
    Rat d = dot(r - p, q - p);
    if (d.sign() < 0) return false;
    return d <= dot(q - p, q - p);
}

bool segments_cross(const Vec2& a1, const Vec2& a2, const Vec2& b1, const Vec2& b2) {
    int d1 = pair_sign(a2 - a1, b1 - a1);
    int d2 = pair_sign(a2 - a1, b2 - a1);
    int d3 = pair_sign(b2 - b1, a1 - b1);
    int d4 = pair_sign(b2 - b1, a2 - b1);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

static int half_of(const Vec2& v) {
    // 0 for angle in [0, pi), 1 for [pi, 2pi); v nonzero.
    if (v.y.sign() > 0) return 0;
    if (v.y.sign() < 0) return 1;
    return v.x.sign() > 0 ? 0 : 1;
}

bool angle_less(const Vec2& a, const Vec2& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross(a, b).sign() > 0;
}

bool in_ccw_sector(const Vec2& d, const Vec2& from, const Vec2& to) {
    int s1 = pair_sign(from, to);
    int sf = pair_sign(from, d);
    int st = pair_sign(d, to);
    if (s1 > 0) return sf > 0 && st > 0;
    if (s1 < 0) return sf > 0 || st > 0;
    return false;
}

} // namespace plabic
