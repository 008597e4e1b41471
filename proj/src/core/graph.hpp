// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/geom.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace plabic {

// Planar bicolored directed perfect networks in the disk.
//
// Geometry convention used throughout: the boundary vertices sit on the x axis
// with b_1 rightmost (the boundary of the disk is traversed clockwise as
// b_1, b_2, ..., b_n), all internal vertices have y > 0, and the infinite face
// is the one touching the arc that closes the disk from b_n back to b_1 above
// the network.

enum class Color : uint8_t { White, Black };

struct Vertex {
    std::string id;
    bool boundary = false;
    Color color = Color::White; // meaningful for internal vertices only
    Vec2 pos;
};

struct Edge {
    int tail = -1;
    int head = -1;
    Rat weight{1};
};

struct ValidationIssue {
    std::string clause; // e.g. "white-vertex in-degree", "condition (7)"
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

enum class FaceKind : uint8_t { Internal, FiniteBoundary, Infinite };

struct FaceCorner {
    int vertex;  // internal vertex index
    int edge_in; // edge bounding the corner reached first in the face walk
    int edge_out;
};

struct Face {
    FaceKind kind = FaceKind::Internal;
    std::vector<int> edges;                    // graph edges on the face boundary (unique)
    std::vector<FaceCorner> corners;           // corners at internal vertices
    std::vector<int> boundary_vertices;        // vertex indices of b_j on this face
    std::vector<int> kappa_intervals;          // j for each boundary arc (b_j, b_{j+1}), 1-based
    bool touches_closing_arc = false;          // arc from b_n back to b_1
};

class Graph {
public:
    Graph() = default;

    // Construction -----------------------------------------------------------
    /// Adds boundary vertices b_1..b_n at positions (n+1-j, 0).
    void set_boundary(int n);
    /// Boundary vertices at custom positions (x_1 > x_2 > ... > x_n, all y = 0).
    void set_boundary_xs(const std::vector<Rat>& xs);
    int add_internal(const std::string& id, Color color, Vec2 pos);
    int add_edge(const std::string& tail_id, const std::string& head_id, Rat weight = Rat(1));
    int add_edge(int tail, int head, Rat weight = Rat(1));

    // Accessors ---------------------------------------------------------------
    int n_boundary() const { return n_boundary_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int v) const { return verts_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_boundary(int v) const { return verts_[v].boundary; }
    int boundary_vertex(int j) const { return j - 1; } // b_j, 1-based
    int boundary_label(int v) const { return verts_[v].boundary ? v + 1 : 0; }
    std::optional<int> find_vertex(const std::string& id) const;

    Vec2 edge_dir(int e) const { return verts_[edges_[e].head].pos - verts_[edges_[e].tail].pos; }

    const std::vector<int>& out_edges(int v) const;
    const std::vector<int>& in_edges(int v) const;
    int degree(int v) const;
    /// Edges at v sorted counterclockwise by direction leaving v.
    const std::vector<int>& rotation(int v) const;

    /// Index of the incident edge labels e_1, e_2, e_3 at a trivalent internal
    /// vertex, numbered counterclockwise with e_3 the unique incoming edge at a
    /// white vertex and e_1 the unique outgoing edge at a black vertex.
    std::array<int, 3> trivalent_labels(int v) const;

    /// For a bivalent internal vertex: {incoming edge, outgoing edge}.
    std::array<int, 2> bivalent_in_out(int v) const;

    // Orientation -------------------------------------------------------------
    bool is_source(int bj) const;  // boundary vertex index
    std::vector<int> source_labels() const; // 1-based labels of boundary sources, sorted
    /// Returns a copy with the listed edges reversed (weights inverted).
    Graph reversed(const std::vector<int>& edges_to_flip) const;

    // Validation / faces ------------------------------------------------------
    ValidationReport validate() const;
    /// Faces of the disk; requires a consistent embedding. The infinite face is
    /// faces()[result.infinite].
    struct FaceSet {
        std::vector<Face> faces;
        int infinite = -1;
        int genus = 0; // #faces - 1
    };
    FaceSet enumerate_faces() const;

    /// All perfect orientations (this graph plus reorientations), each with its
    /// boundary source set. Search stops after `cap` orientations when cap > 0.
    std::vector<std::pair<Graph, std::vector<int>>> perfect_orientations(int cap = 0) const;

    /// True if every edge direction assignment is already perfect here.
    bool orientation_is_perfect() const;

    /// Directed path from a boundary source to a boundary sink through e, if any.
    bool edge_on_boundary_path(int e) const;

    bool has_directed_cycle() const;

    std::vector<int> internal_vertices() const;
    int count_trivalent(Color c) const;

    void invalidate_caches();

private:
    int n_boundary_ = 0;
    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;

    mutable bool adj_built_ = false;
    mutable std::vector<std::vector<int>> out_, in_, rot_;
    void build_adjacency() const;
};

} // namespace plabic
