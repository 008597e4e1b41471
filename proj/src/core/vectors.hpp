// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/gauge.hpp"

#include <optional>
#include <vector>

namespace plabic {

using RatVec = std::vector<Rat>; // length n, component j-1 <-> boundary label j

/// Conservative flow: balanced edge subset avoiding boundary edges.
struct ConservativeFlow {
    std::vector<int> edges;
    Rat weight{1};
};

/// Edge flow from e to a boundary sink, split into its loop-erased walk part
/// and the disjoint conservative remainder.
struct EdgeFlow {
    std::vector<int> walk;   // edge sequence of the extracted walk, starts with e
    std::vector<int> rest;   // conservative part
    int sink_label = 0;      // 1-based boundary label
    Rat weight{1};           // product over walk and rest
    int wind = 0;            // generalized winding of the walk
    int int_count = 0;       // ray crossings of the walk
};

std::vector<ConservativeFlow> conservative_flows(const Graph& g, int max_edges = 40);

/// Removes the first repeated-edge cycle, recursively (edge loop-erasure).
std::vector<int> loop_erase(const Graph& g, std::vector<int> walk);

/// All edge flows starting at e (any sink). Flow counts explode on large cyclic
/// graphs; max_edges guards the search.
std::vector<EdgeFlow> edge_flows(const GaugedOrientation& go, int e, int max_edges = 40);

/// The flow-formula edge vector of e: component j is the signed flow sum over
/// F_{e,b_j} divided by the conservative-flow sum.
RatVec edge_vector_flow(const GaugedOrientation& go, int e);

struct EdgeVectorSystem {
    std::vector<RatVec> E;        // per edge
    std::vector<RatVec> z_tail;   // half-edge vector at the tail flag
    std::vector<RatVec> z_head;   // half-edge vector at the head flag
    std::vector<int> base;        // boundary source labels, sorted (the base I)
    std::vector<RatVec> A;        // k x n boundary measurement matrix, RREF wrt base
};

/// Solves the vertex linear relations for all edge vectors at once. The
/// boundary sinks carry the canonical basis vectors by default.
/// Throws std::runtime_error when the system is singular (signature not
/// geometric).
EdgeVectorSystem edge_vectors_linear(const GaugedOrientation& go,
                                     const std::vector<RatVec>* sink_conditions = nullptr);

/// k x n RREF boundary measurement matrix of the oriented network.
std::vector<RatVec> boundary_measurement(const GaugedOrientation& go);

/// All maximal minors indexed by the k-subset (sorted ascending labels).
std::vector<std::pair<std::vector<int>, Rat>> maximal_minors(const std::vector<RatVec>& A);

Rat minor(const std::vector<RatVec>& A, const std::vector<int>& cols);

// --- transformation rules -----------------------------------------------------

struct TransformOutcome {
    bool ok = true;
    std::string detail;
    EdgeVectorSystem system; // recomputed system in the new frame
};

/// Gauge-ray change. Predicts E'_e = (-1)^{int(V_e)+par(e)} E_e away from the
/// boundary-source edges and verifies the prediction against recomputation.
TransformOutcome transform_ray(const GaugedOrientation& before, const Vec2& new_ray);

/// Weight gauge t at an internal vertex. Predicts scaling t on edges into the
/// vertex and verifies.
TransformOutcome transform_weight_gauge(const GaugedOrientation& before, int vertex, const Rat& t);

/// Vertex gauge: move one internal vertex to a new position. Verifies that each
/// edge vector changes by a sign only, that the signatures stay equivalent and
/// that half-edge vectors transform by (-1)^{eta(U)}.
TransformOutcome transform_vertex_gauge(const GaugedOrientation& before, int vertex,
                                        const Vec2& new_pos);

/// Orientation change to the given reoriented graph (same underlying network).
/// Verifies hat E_e = alpha_e E_e + sum_r c^r_e A[r] with alpha_e != 0, and that
/// the boundary measurements span the same row space.
TransformOutcome transform_orientation(const GaugedOrientation& before, const Graph& reoriented);

// --- zero vectors ---------------------------------------------------------------

struct ZeroVectorReport {
    struct Component {
        std::vector<int> edges;
        int type = 0; // 1 or 2
    };
    std::vector<Component> components;
    bool none() const { return components.empty(); }
};

ZeroVectorReport classify_zero_vectors(const Graph& g, const EdgeVectorSystem& sys);

/// Brute-force signed path-series sum for acyclic networks (test oracle).
RatVec path_series_vector(const GaugedOrientation& go, int e);

} // namespace plabic
