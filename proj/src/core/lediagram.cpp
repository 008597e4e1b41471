// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/lediagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plabic {

ValidationReport LeDiagram::validate() const {
    ValidationReport rep;
    auto add = [&](const std::string& c, const std::string& d) { rep.issues.push_back({c, d}); };
    if (static_cast<int>(pivots.size()) != k) add("shape", "pivot count != k");
    std::set<int> piv(pivots.begin(), pivots.end());
    if (!std::is_sorted(pivots.begin(), pivots.end())) add("shape", "pivots not sorted");
    for (int p : pivots)
        if (p < 1 || p > n) add("shape", "pivot out of range");
    for (const auto& [rc, w] : boxes) {
        auto [r, j] = rc;
        if (r < 1 || r > k) add("shape", "box row out of range");
        if (piv.count(j)) add("shape", "box in a pivot column");
        if (r >= 1 && r <= k && j <= pivots[r - 1]) add("shape", "box left of its pivot");
        if (w.sign() <= 0) add("weights", "non-positive box weight");
    }
    // Le property: an empty slot may not have a filled box above (same label,
    // smaller row) and a filled box further along its row (larger label).
    for (int r = 1; r <= k; ++r) {
        for (int j = 1; j <= n; ++j) {
            if (piv.count(j) || j <= pivots[r - 1] || boxes.count({r, j})) continue;
            bool above = false, left = false;
            for (int r2 = 1; r2 < r; ++r2) above |= boxes.count({r2, j}) > 0;
            for (int j2 = j + 1; j2 <= n; ++j2) left |= boxes.count({r, j2}) > 0;
            if (above && left)
                add("Le-property", "empty box (" + std::to_string(r) + "," + std::to_string(j) +
                                       ") with filled boxes above and beyond");
        }
    }
    // Irreducibility: every row and every non-pivot column carries a box.
    for (int r = 1; r <= k; ++r) {
        bool any = false;
        for (const auto& [rc, w] : boxes) any |= rc.first == r;
        if (!any) add("irreducibility", "row " + std::to_string(r) + " is empty (isolated source)");
    }
    for (int j = 1; j <= n; ++j) {
        if (piv.count(j)) continue;
        bool any = false;
        for (const auto& [rc, w] : boxes) any |= rc.second == j;
        if (!any)
            add("irreducibility", "column " + std::to_string(j) + " is empty (isolated sink)");
    }
    return rep;
}

Graph build_le_graph(const LeDiagram& d) {
    auto rep = d.validate();
    if (!rep.ok()) throw std::invalid_argument("build_le_graph: " + rep.to_string());

    Graph g;
    g.set_boundary(d.n);
    auto xpos = [&](int j) { return Rat(d.n + 1 - j); };
    auto ypos = [&](int r) { return Rat(d.k - r + 2); };

    // Bivalent whites above every boundary vertex.
    for (int j = 1; j <= d.n; ++j)
        g.add_internal("V" + std::to_string(j), Color::White, Vec2(xpos(j), Rat(1)));

    std::set<int> piv(d.pivots.begin(), d.pivots.end());
    auto box_black = [&](int r, int j) { return "K" + std::to_string(r) + "_" + std::to_string(j); };
    auto box_white = [&](int r, int j) { return "W" + std::to_string(r) + "_" + std::to_string(j); };

    // Box gadgets: black at (x_j, y_r), white half a step below.
    for (const auto& [rc, w] : d.boxes) {
        auto [r, j] = rc;
        g.add_internal(box_black(r, j), Color::Black, Vec2(xpos(j), ypos(r)));
        g.add_internal(box_white(r, j), Color::White, Vec2(xpos(j), ypos(r) - Rat(1, 2)));
        g.add_edge(box_black(r, j), box_white(r, j), Rat(1));
    }

    // Row wiring (leftward = increasing labels).
    for (int r = 1; r <= d.k; ++r) {
        std::vector<int> row;
        for (const auto& [rc, w] : d.boxes)
            if (rc.first == r) row.push_back(rc.second);
        std::sort(row.begin(), row.end());
        // Corner entry above the pivot.
        std::string corner = "C" + std::to_string(r);
        g.add_internal(corner, Color::White, Vec2(xpos(d.pivots[r - 1]), ypos(r)));
        g.add_edge("b" + std::to_string(d.pivots[r - 1]), "V" + std::to_string(d.pivots[r - 1]),
                   Rat(1));
        g.add_edge("V" + std::to_string(d.pivots[r - 1]), corner, Rat(1));
        std::string prev = corner;
        for (int j : row) {
            g.add_edge(prev, box_black(r, j), d.boxes.at({r, j}));
            prev = box_white(r, j);
        }
    }

    // Column wiring (downward) and sinks.
    for (int j = 1; j <= d.n; ++j) {
        if (piv.count(j)) continue;
        std::vector<int> col;
        for (const auto& [rc, w] : d.boxes)
            if (rc.second == j) col.push_back(rc.first);
        std::sort(col.begin(), col.end());
        for (size_t i = 0; i + 1 < col.size(); ++i)
            g.add_edge(box_white(col[i], j), box_black(col[i + 1], j), Rat(1));
        g.add_edge(box_white(col.back(), j), "V" + std::to_string(j), Rat(1));
        g.add_edge("V" + std::to_string(j), "b" + std::to_string(j), Rat(1));
    }
    return g;
}

} // namespace plabic
