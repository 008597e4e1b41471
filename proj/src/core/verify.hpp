// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/curve.hpp"
#include "core/moves.hpp"

#include <random>

namespace plabic {

struct VerifyLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        lines.push_back({name, ok, detail});
    }
};

/// Fresh positive rational weights on the same graph.
Graph randomize_weights(const Graph& g, std::mt19937_64& rng, int max_num = 8);

/// Sorted distinct rational phases kappa_1 < ... < kappa_n.
std::vector<Rat> random_phases(int n, std::mt19937_64& rng);

/// Flow formula == linear system on every edge, over `draws` weight samples.
VerifyLine check_dual_method(const Graph& g, unsigned long seed, int draws);

/// Face-parity theorem over `rays` gauge rays x all perfect orientations
/// (capped).
VerifyLine check_face_parity(const Graph& g, unsigned long seed, int rays, int orientation_cap);

/// All maximal minors nonnegative; positivity pattern stable across draws.
VerifyLine check_minor_signs(const Graph& g, unsigned long seed, int draws);

/// wind+int parity constant over all flows from each boundary source.
VerifyLine check_source_parity(const Graph& g, unsigned long seed);

/// Oval-count theorem over `draws` random (weights, kappa) samples; degenerate
/// draws are excluded and reported, expected below `max_degenerate_rate`.
VerifyLine check_oval_counts(const Graph& g, unsigned long seed, int draws,
                             double max_degenerate_rate = 0.05);

/// Divisor invariance across rays/gauges/orientations.
VerifyLine check_invariance(const Graph& g, unsigned long seed);

/// Boundary measurement invariance (same Grassmannian point) under a move.
VerifyLine check_move_measurement(const Graph& before, const Graph& after, const std::string& name);

/// Zero vectors are orientation independent.
VerifyLine check_zero_invariance(const Graph& g, unsigned long seed);

/// The full suite for one network.
VerifyReport verify_network(const Graph& g, unsigned long seed, bool with_moves = true);

/// Same Grassmannian point: proportional maximal minor vectors.
bool same_grassmannian_point(const std::vector<RatVec>& A, const std::vector<RatVec>& B,
                             std::string* why = nullptr);

/// Closed-form divisor coordinates at the two white corners of a square-move
/// site, from the half-edge data at t0 = 0:
///   psi0 = (-1)^{eps(src->x)} Psi_{src, src->sink} / Psi_{x, src->x},
///   gamma(src) = psi0/(alpha4 + psi0), gamma(y) = alpha1 alpha3 psi0 / alpha2.
struct SquarePrediction {
    Rat psi0;
    Rat gamma_src, gamma_y;
};
SquarePrediction square_prediction(const Graph& g, const GaugedOrientation& go,
                                   const SquareSite& site, const EdgeVectorSystem& sys,
                                   const SolitonData& s);

} // namespace plabic
