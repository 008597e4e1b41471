// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/graph.hpp"

#include <map>

namespace plabic {

/// Le-diagram of a positroid cell of Gr(k, n): pivot labels I and the filled
/// boxes (r, j) with their weights, r in [k] a row and j a non-pivot label
/// with j > i_r. Box columns follow the boundary labels.
struct LeDiagram {
    int k = 0, n = 0;
    std::vector<int> pivots;            // sorted, size k
    std::map<std::pair<int, int>, Rat> boxes; // (row r, label j) -> weight

    ValidationReport validate() const;
};

/// Canonical network of the diagram: rows enter at their pivots and run left,
/// columns run down to their sinks, each filled box contributing a black
/// (merge) over a white (split). Box weights sit on the horizontal edges
/// entering the box. The result carries bivalent chains; faces - 1 equals the
/// number of boxes.
Graph build_le_graph(const LeDiagram& d);

} // namespace plabic
