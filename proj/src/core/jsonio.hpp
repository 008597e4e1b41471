// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/curve.hpp"

#include <json.hpp>

namespace plabic {

using Json = nlohmann::ordered_json;

/// Graph JSON: {"n": .., "boundary": ["b1", ...], "vertices": [{"id","color","x","y"}],
/// "edges": [{"tail","head","weight"}]}. Weights and coordinates accept decimal
/// or "p/q" strings.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Graph graph_from_json_string(const std::string& text);

std::string rat_str(const Rat& r);
std::string float_str(long double v); // 12 significant digits

Json matrix_to_json(const std::vector<RatVec>& A);
Json minors_to_json(const std::vector<std::pair<std::vector<int>, Rat>>& minors);
Json vectors_to_json(const Graph& g, const EdgeVectorSystem& sys);
Json signature_to_json(const Graph& g, const GaugedOrientation& go);
Json faces_to_json(const Graph& g, const Graph::FaceSet& fs);
Json divisor_to_json(const ReducibleCurve& curve, const KPDivisor& d);

} // namespace plabic
