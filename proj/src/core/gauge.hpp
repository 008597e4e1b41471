// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/graph.hpp"

#include <optional>
#include <random>

namespace plabic {

/// A perfectly oriented network together with a gauge ray direction and the
/// derived geometric data: per-edge ray crossing counts, local windings and the
/// {0,1} edge signature of the half-edge relation system.
class GaugedOrientation {
public:
    /// Throws std::invalid_argument if the ray is not generic for this graph
    /// (parallel edge, ray through a vertex, crossing at a segment endpoint).
    GaugedOrientation(const Graph& g, Vec2 ray_dir);

    const Graph& graph() const { return *g_; }
    const Vec2& ray() const { return ray_; }
    const std::vector<int>& sources() const { return sources_; } // 1-based labels

    /// Crossings of boundary-source rays with the open edge segment.
    int int_count(int e) const { return int_count_[e]; }

    /// wind(e, f) for consecutive edges (head of e = tail of f).
    int winding(int e, int f) const;

    /// Signature exponent eps_{U,V} in {0,1} for each directed edge.
    int signature(int e) const { return eps_[e]; }
    const std::vector<int>& signature() const { return eps_; }

    /// Flag signs relating half-edge vectors to edge vectors:
    /// z_{tail(e),e} = (-1)^{sigma_tail(e)} E_e and
    /// z_{head(e),e} = (-1)^{sigma_tail(e)+eps(e)} E_e / w_e.
    int sigma_tail(int e) const { return sig_tail_[e]; }
    int sigma_head(int e) const { return sig_head_[e]; }

    /// Sum of the signature over the edges bounding each face.
    std::vector<int> face_signature(const Graph::FaceSet& fs) const;

private:
    const Graph* g_;
    Vec2 ray_;
    std::vector<int> sources_;
    std::vector<int> int_count_;
    std::vector<int> sig_tail_, sig_head_, eps_;
    void compute();
};

/// Winding sign s(a, b) followed by the wind rule of the gauge direction l:
/// +1 when s(a,b)=s(a,l)=s(l,b)=+1, -1 when all are -1, otherwise 0.
int wind_of_pair(const Vec2& a, const Vec2& b, const Vec2& ray);

/// Picks a generic gauge ray direction (dx, dy) with dy > 0 for the graph,
/// retrying with fresh small rationals from the rng. Throws after `tries`.
Vec2 pick_gauge_ray(const Graph& g, std::mt19937_64& rng, int tries = 64);

/// Checks the face/signature parity relations on every face. Internal faces:
/// eps == n_white - 1 (mod 2). Boundary faces: eps + n_white + n_sources == 1
/// finite / == k infinite (mod 2), plus the boundary-index relation
/// i_b + b + s == 0 (mod 2).
struct ParityReport {
    struct Line {
        int face;
        bool ok;
        std::string detail;
    };
    std::vector<Line> lines;
    bool ok() const {
        for (auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
};
ParityReport face_signature_check(const GaugedOrientation& go, const Graph::FaceSet& fs);

/// Vertex gauge eta on internal vertices making two signatures equal, if any:
/// eps2 = eps1 + eta(U) + eta(V) on internal edges, eps1 + eta(U) at boundary.
std::optional<std::vector<int>> signature_equivalent(const Graph& g, const std::vector<int>& eps1,
                                                     const std::vector<int>& eps2);

} // namespace plabic
