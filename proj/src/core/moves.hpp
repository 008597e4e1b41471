// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/graph.hpp"

#include <string>
#include <vector>

namespace plabic {

struct MoveRecord {
    std::string kind;
    Graph result;
    std::vector<std::string> notes;
};

/// Square move (M1) at four trivalent vertices forming an alternating-color
/// 4-cycle oriented with a white source corner and a black sink corner. The
/// returned plan carries the weight data entering the divisor-delta formulas.
struct SquareSite {
    int src = -1;  // white, both cycle edges outgoing
    int sink = -1; // black, both cycle edges incoming
    int x = -1;    // black on the src -> x -> y -> sink path
    int y = -1;    // white on that path
    int s_src_x = -1, s_x_y = -1, s_y_sink = -1, s_src_sink = -1; // cycle edges
    // alpha labels entering the weight transformation:
    // alpha1 = w(y->sink), alpha2 = w(src->sink), alpha3 = w(x->y), alpha4 = w(src->x)
    Rat alpha1, alpha2, alpha3, alpha4;
    Rat alpha1t, alpha2t, alpha3t, alpha4t;
};
SquareSite square_site(const Graph& g, const std::array<std::string, 4>& vertex_ids);
MoveRecord square_move(const Graph& g, const std::array<std::string, 4>& vertex_ids,
                       SquareSite* plan = nullptr);

/// Flip move (M2) at a pair of adjacent trivalent white (or black) vertices.
/// The shared edge is gauged to unit weight first when necessary.
MoveRecord flip_move(const Graph& g, const std::string& v1_id, const std::string& v2_id);

/// Middle vertex insertion (M3): subdivides an edge with a bivalent vertex of
/// the given color at fraction t of the way along, weight split (w_e, 1).
MoveRecord middle_vertex_insert(const Graph& g, int edge, Color color, const Rat& t,
                                const std::string& new_id);
/// Middle vertex removal (M3): merges the two edges at a bivalent vertex.
MoveRecord middle_vertex_remove(const Graph& g, const std::string& vertex_id);

/// Parallel edge reduction (R1). The site is a trivalent white feeding a
/// trivalent black through two routes: a direct edge and a route through one
/// bivalent vertex (straight-line drawings need the bend). Removes the pocket,
/// replacing it by a single edge of equivalent weight.
MoveRecord parallel_reduction(const Graph& g, const std::string& white_id,
                              const std::string& black_id);

/// Parallel edge unreduction (inverse of R1) on an edge, with free parameters
/// p, q > 0: inserts a black/white pair joined by a forward edge of weight p
/// and a return route of weight q (through a bivalent bend), rescaling so the
/// boundary measurement is preserved.
MoveRecord parallel_unreduction(const Graph& g, int edge, const Rat& p, const Rat& q);

/// Dipole reduction (R2): removes an isolated two-vertex component.
MoveRecord dipole_reduction(const Graph& g, const std::string& u_id, const std::string& v_id);

/// Leaf reduction (R3): removes a univalent vertex attached to a trivalent
/// vertex, splitting the latter.
MoveRecord leaf_reduction(const Graph& g, const std::string& leaf_id);

/// Disjoint union of two networks: `adjacent` appends gB to the left of gA
/// (labels of gA first); `nested` places gB inside the face of gA between
/// boundary vertices gap_j and gap_j+1.
MoveRecord direct_sum(const Graph& gA, const Graph& gB, bool nested = false, int gap_j = 0);

/// Defrost: removes the consecutive source/sink boundary pair (b_j, b_{j+1})
/// and glues the freed half-edges.
MoveRecord defrost(const Graph& g, int j);

/// Candidate sites for each move kind, by vertex ids.
struct Sites {
    std::vector<std::array<std::string, 4>> squares;
    std::vector<std::pair<std::string, std::string>> flips;
    std::vector<std::pair<std::string, std::string>> parallel_pairs;
    std::vector<std::string> bivalent;
    std::vector<std::string> leaves;
    std::vector<int> defrost_pairs; // j with (b_j, b_{j+1}) source+sink
};
Sites find_sites(const Graph& g);

} // namespace plabic
