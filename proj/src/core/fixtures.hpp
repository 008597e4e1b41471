// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/graph.hpp"

#include <string>
#include <vector>

namespace plabic {

// Built-in networks used by the test and verification suites.

/// Gr^TP(1,3) tree: boundary matrix [1, w2, w3].
Graph fixture_gr13(const Rat& w2, const Rat& w3);

/// The 3-dimensional cell of Gr(2,4) with Delta_34 = 0; RREF matrix
/// [[1, 0, -w13, -w13 w24], [0, 1, w23, w23 w24]].
Graph fixture_gr24_s34(const Rat& w13, const Rat& w23, const Rat& w24);

/// Gr^TP(2,4) collapsed Le-network (square-move site inside).
Graph fixture_gr24_tp(const Rat& w13, const Rat& w14, const Rat& w23, const Rat& w24);

/// Gr^TP(2,3) Le-network (for amalgamation tests).
Graph fixture_gr23(const Rat& w13, const Rat& w23);

/// Gr^TP(2,5) collapsed Le-network; its right square has sign-free external
/// data and realizes the square-move regime missing from Gr^TP(2,4).
Graph fixture_gr25_tp(const Rat& w13, const Rat& w14, const Rat& w15, const Rat& w23,
                      const Rat& w24, const Rat& w25);

/// Gr(2,4) S34 after the cyclic parallel-edge unreduction with parameters p, q.
Graph fixture_gr24_par(const Rat& w13, const Rat& w23, const Rat& w24, const Rat& p, const Rat& q);

/// Gr^TP(1,2) reducible network with a cyclic pocket; all edge vectors are
/// nonzero for every p, q > 0.
Graph fixture_gr12_pocket(const Rat& p, const Rat& q);

/// Gr^TP(1,2) reducible network whose white-white chain carries zero edge
/// vectors exactly when p == q at s == 1. The parameter s moves along the
/// unreduced-graph gauge orbit of the same point and removes the zeros.
Graph fixture_gr12_cyclic(const Rat& p, const Rat& q, const Rat& s);

/// Reducible Gr^TP(1,3) network carrying a zero edge vector when a = 1: two
/// trivalent whites joined by an edge whose vector cancels. `split` routes the
/// second white's spare branch to a common sink (type 1) or a separate one
/// (type 2).
Graph fixture_zero_vector(const Rat& a, bool type2);

struct NamedFixture {
    std::string name;
    Graph graph;
};
/// The standard corpus at the given positive weights seed (deterministic).
std::vector<NamedFixture> standard_fixtures();

} // namespace plabic
