// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/jsonio.hpp"

#include <cstdio>

namespace plabic {

std::string rat_str(const Rat& r) { return r.str(); }

std::string float_str(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12Lg", v);
    return buf;
}

namespace {
Rat parse_number(const Json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
        return Rat::parse(buf);
    }
    throw std::invalid_argument("expected a number or rational string");
}
} // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n_boundary();
    Json boundary = Json::array();
    for (int l = 1; l <= g.n_boundary(); ++l) boundary.push_back("b" + std::to_string(l));
    j["boundary"] = boundary;
    Json verts = Json::array();
    for (int v : g.internal_vertices()) {
        Json jv;
        jv["id"] = g.vertex(v).id;
        jv["color"] = g.vertex(v).color == Color::White ? "white" : "black";
        jv["x"] = rat_str(g.vertex(v).pos.x);
        jv["y"] = rat_str(g.vertex(v).pos.y);
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    Json edges = Json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        Json je;
        je["tail"] = g.vertex(g.edge(e).tail).id;
        je["head"] = g.vertex(g.edge(e).head).id;
        je["weight"] = rat_str(g.edge(e).weight);
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const Json& j) {
    Graph g;
    int n = j.at("n").get<int>();
    g.set_boundary(n);
    for (const auto& jv : j.at("vertices")) {
        Color c = jv.at("color").get<std::string>() == "white" ? Color::White : Color::Black;
        g.add_internal(jv.at("id").get<std::string>(), c,
                       Vec2(parse_number(jv.at("x")), parse_number(jv.at("y"))));
    }
    for (const auto& je : j.at("edges")) {
        Rat w = je.contains("weight") ? parse_number(je.at("weight")) : Rat(1);
        g.add_edge(je.at("tail").get<std::string>(), je.at("head").get<std::string>(), w);
    }
    return g;
}

Graph graph_from_json_string(const std::string& text) {
    return graph_from_json(Json::parse(text));
}

Json matrix_to_json(const std::vector<RatVec>& A) {
    Json rows = Json::array();
    for (const auto& r : A) {
        Json row = Json::array();
        for (const auto& c : r) row.push_back(rat_str(c));
        rows.push_back(row);
    }
    return rows;
}

Json minors_to_json(const std::vector<std::pair<std::vector<int>, Rat>>& minors) {
    Json j = Json::object();
    for (const auto& [cols, v] : minors) {
        std::string key;
        for (size_t i = 0; i < cols.size(); ++i) key += (i ? "," : "") + std::to_string(cols[i]);
        j[key] = rat_str(v);
    }
    return j;
}

Json vectors_to_json(const Graph& g, const EdgeVectorSystem& sys) {
    Json j = Json::object();
    for (int e = 0; e < g.edge_count(); ++e) {
        Json comp = Json::array();
        for (const auto& c : sys.E[e]) comp.push_back(rat_str(c));
        std::string key = g.vertex(g.edge(e).tail).id + "->" + g.vertex(g.edge(e).head).id;
        j[key] = comp;
    }
    return j;
}

Json signature_to_json(const Graph& g, const GaugedOrientation& go) {
    Json j = Json::object();
    for (int e = 0; e < g.edge_count(); ++e) {
        std::string key = g.vertex(g.edge(e).tail).id + "->" + g.vertex(g.edge(e).head).id;
        j[key] = go.signature(e);
    }
    return j;
}

Json faces_to_json(const Graph& g, const Graph::FaceSet& fs) {
    Json arr = Json::array();
    for (const auto& f : fs.faces) {
        Json jf;
        jf["kind"] = f.kind == FaceKind::Internal
                         ? "internal"
                         : (f.kind == FaceKind::Infinite ? "infinite" : "boundary");
        Json edges = Json::array();
        for (int e : f.edges)
            edges.push_back(g.vertex(g.edge(e).tail).id + "->" + g.vertex(g.edge(e).head).id);
        jf["edges"] = edges;
        Json intervals = Json::array();
        for (int j2 : f.kappa_intervals) intervals.push_back(j2);
        jf["kappa_intervals"] = intervals;
        arr.push_back(jf);
    }
    Json j;
    j["faces"] = arr;
    j["genus"] = fs.genus;
    j["infinite_face"] = fs.infinite;
    return j;
}

Json divisor_to_json(const ReducibleCurve& curve, const KPDivisor& d) {
    Json j;
    Json comps = Json::array();
    for (const auto& c : curve.components) comps.push_back(c.name);
    j["components"] = comps;
    Json dps = Json::array();
    for (const auto& [a, b] : curve.double_points) {
        Json jd;
        jd["a"] = curve.components[a.component].name + ":" + std::to_string(a.label);
        jd["b"] = curve.components[b.component].name + ":" + std::to_string(b.label);
        dps.push_back(jd);
    }
    j["double_points"] = dps;
    Json ovals = Json::array();
    for (size_t i = 0; i < curve.ovals.size(); ++i) {
        Json jo;
        jo["index"] = i;
        jo["infinite"] = static_cast<int>(i) == curve.infinite_oval;
        ovals.push_back(jo);
    }
    j["ovals"] = ovals;
    Json pts = Json::array();
    for (const auto& w : d.white) {
        Json jp;
        jp["component"] = curve.components[w.component].name;
        if (w.exact && !w.at_infinity) jp["coordinate"] = rat_str(w.gamma);
        else if (w.at_infinity) jp["coordinate"] = "inf";
        else jp["coordinate"] = float_str(w.gamma_num);
        jp["oval"] = w.oval;
        jp["degenerate"] = w.degenerate;
        jp["trivial"] = w.trivial;
        pts.push_back(jp);
    }
    for (const auto& s : d.sato) {
        Json jp;
        jp["component"] = "Gamma0";
        jp["coordinate"] = float_str(s.zeta);
        jp["oval"] = s.oval;
        jp["degenerate"] = s.degenerate;
        pts.push_back(jp);
    }
    j["divisor"] = pts;
    return j;
}

} // namespace plabic
