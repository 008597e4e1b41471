// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "plabic.h"

#include "core/curve.hpp"
#include "core/fixtures.hpp"
#include "core/jsonio.hpp"
#include "core/lediagram.hpp"
#include "core/moves.hpp"
#include "core/verify.hpp"

#include <cstring>
#include <sstream>

using namespace plabic;

struct plabic_network {
    Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

plabic_status fail(plabic_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <typename F>
plabic_status guarded(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        return fail(PLABIC_ERR_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(PLABIC_ERR_FAILED, e.what());
    }
}

std::vector<Rat> parse_csv_rats(const char* csv) {
    std::vector<Rat> out;
    if (!csv) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(Rat::parse(tok));
    }
    return out;
}

std::vector<std::string> parse_csv_strings(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

Vec2 ray_from_spec(const Graph& g, const char* spec) {
    if (spec && *spec) {
        Rat slope = Rat::parse(spec);
        if (slope.sign() <= 0) throw std::invalid_argument("ray slope must be positive");
        Vec2 dir(Rat(1), slope);
        return dir;
    }
    std::mt19937_64 rng(20260808);
    return pick_gauge_ray(g, rng);
}

SolitonData soliton_from(const Graph& g, const GaugedOrientation& go, const char* kappa_csv,
                         const EdgeVectorSystem& sys) {
    SolitonData s;
    s.kappa = parse_csv_rats(kappa_csv);
    if (static_cast<int>(s.kappa.size()) != g.n_boundary())
        throw std::invalid_argument("need one phase per boundary vertex");
    for (size_t i = 0; i + 1 < s.kappa.size(); ++i)
        if (!(s.kappa[i] < s.kappa[i + 1]))
            throw std::invalid_argument("phases must be strictly increasing");
    s.A = sys.A;
    (void)go;
    return s;
}

} // namespace

extern "C" {

const char* plabic_last_error(void) { return g_last_error.c_str(); }

void plabic_string_free(char* s) { std::free(s); }

void plabic_network_free(plabic_network* net) { delete net; }

plabic_status plabic_network_parse(const char* json, plabic_network** out) {
    return guarded([&]() {
        if (!json || !out) return fail(PLABIC_ERR_ARG, "null argument");
        try {
            auto g = graph_from_json_string(json);
            *out = new plabic_network{std::move(g)};
            return PLABIC_OK;
        } catch (const nlohmann::json::exception& e) {
            return fail(PLABIC_ERR_PARSE, e.what());
        }
    });
}

plabic_status plabic_network_builtin(const char* name, const char* weights_csv,
                                     plabic_network** out) {
    return guarded([&]() {
        if (!name || !out) return fail(PLABIC_ERR_ARG, "null argument");
        auto w = parse_csv_rats(weights_csv);
        auto get = [&](size_t i, const Rat& dflt) { return i < w.size() ? w[i] : dflt; };
        std::string n = name;
        Graph g;
        if (n == "gr13_tp") g = fixture_gr13(get(0, Rat(1)), get(1, Rat(2)));
        else if (n == "gr24_s34") g = fixture_gr24_s34(get(0, Rat(1)), get(1, Rat(1)), get(2, Rat(1)));
        else if (n == "gr24_tp")
            g = fixture_gr24_tp(get(0, Rat(1)), get(1, Rat(1)), get(2, Rat(1)), get(3, Rat(1)));
        else if (n == "gr25_tp")
            g = fixture_gr25_tp(get(0, Rat(1)), get(1, Rat(1)), get(2, Rat(1)), get(3, Rat(1)),
                                get(4, Rat(1)), get(5, Rat(1)));
        else if (n == "gr23_tp") g = fixture_gr23(get(0, Rat(1)), get(1, Rat(1)));
        else if (n == "gr12_pocket") g = fixture_gr12_pocket(get(0, Rat(1, 2)), get(1, Rat(1, 3)));
        else if (n == "gr12_cyclic")
            g = fixture_gr12_cyclic(get(0, Rat(1, 2)), get(1, Rat(2, 3)), get(2, Rat(1)));
        else if (n == "gr24_par")
            g = fixture_gr24_par(get(0, Rat(1)), get(1, Rat(1)), get(2, Rat(1)), get(3, Rat(1, 2)),
                                 get(4, Rat(1, 3)));
        else return fail(PLABIC_ERR_ARG, "unknown builtin network: " + n);
        *out = new plabic_network{std::move(g)};
        return PLABIC_OK;
    });
}

plabic_status plabic_network_reweight(const plabic_network* net, const char* weights_csv,
                                      plabic_network** out) {
    return guarded([&]() {
        if (!net || !out) return fail(PLABIC_ERR_ARG, "null argument");
        auto w = parse_csv_rats(weights_csv);
        if (static_cast<int>(w.size()) > net->g.edge_count())
            return fail(PLABIC_ERR_ARG, "more weights than edges (" +
                                            std::to_string(net->g.edge_count()) + ")");
        // A shorter list replaces the weights of the leading edges only; the
        // shipped fixture files put their cell parameters first.
        Graph g;
        std::vector<Rat> xs;
        for (int j = 1; j <= net->g.n_boundary(); ++j)
            xs.push_back(net->g.vertex(net->g.boundary_vertex(j)).pos.x);
        g.set_boundary_xs(xs);
        for (int v : net->g.internal_vertices())
            g.add_internal(net->g.vertex(v).id, net->g.vertex(v).color, net->g.vertex(v).pos);
        for (int e = 0; e < net->g.edge_count(); ++e)
            g.add_edge(net->g.vertex(net->g.edge(e).tail).id,
                       net->g.vertex(net->g.edge(e).head).id,
                       e < static_cast<int>(w.size()) ? w[e] : net->g.edge(e).weight);
        *out = new plabic_network{std::move(g)};
        return PLABIC_OK;
    });
}

plabic_status plabic_network_to_json(const plabic_network* net, char** json) {
    return guarded([&]() {
        if (!net || !json) return fail(PLABIC_ERR_ARG, "null argument");
        *json = dup_string(graph_to_json(net->g).dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_build_le(const char* diagram_json, plabic_network** out) {
    return guarded([&]() {
        if (!diagram_json || !out) return fail(PLABIC_ERR_ARG, "null argument");
        Json j;
        try {
            j = Json::parse(diagram_json);
        } catch (const nlohmann::json::exception& e) {
            return fail(PLABIC_ERR_PARSE, e.what());
        }
        LeDiagram d;
        d.k = j.at("k").get<int>();
        d.n = j.at("n").get<int>();
        for (const auto& p : j.at("pivots")) d.pivots.push_back(p.get<int>());
        for (const auto& b : j.at("boxes")) {
            Rat w = b.contains("weight") ? Rat::parse(b.at("weight").get<std::string>()) : Rat(1);
            d.boxes[{b.at("row").get<int>(), b.at("col").get<int>()}] = w;
        }
        auto rep = d.validate();
        if (!rep.ok()) return fail(PLABIC_ERR_INVALID, rep.to_string());
        *out = new plabic_network{build_le_graph(d)};
        return PLABIC_OK;
    });
}

plabic_status plabic_validate(const plabic_network* net, char** report_json) {
    return guarded([&]() {
        if (!net || !report_json) return fail(PLABIC_ERR_ARG, "null argument");
        auto rep = net->g.validate();
        Json j;
        j["ok"] = rep.ok();
        Json issues = Json::array();
        for (const auto& i : rep.issues) {
            Json ji;
            ji["clause"] = i.clause;
            ji["detail"] = i.detail;
            issues.push_back(ji);
        }
        j["issues"] = issues;
        *report_json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_faces(const plabic_network* net, char** json) {
    return guarded([&]() {
        if (!net || !json) return fail(PLABIC_ERR_ARG, "null argument");
        *json = dup_string(faces_to_json(net->g, net->g.enumerate_faces()).dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_orientations(const plabic_network* net, int cap, char** json) {
    return guarded([&]() {
        if (!net || !json) return fail(PLABIC_ERR_ARG, "null argument");
        auto orients = net->g.perfect_orientations(cap);
        Json arr = Json::array();
        for (auto& [g2, base] : orients) {
            Json jo;
            Json jb = Json::array();
            for (int b : base) jb.push_back(b);
            jo["base"] = jb;
            Json edges = Json::array();
            for (int e = 0; e < g2.edge_count(); ++e)
                edges.push_back(g2.vertex(g2.edge(e).tail).id + "->" +
                                g2.vertex(g2.edge(e).head).id);
            jo["edges"] = edges;
            arr.push_back(jo);
        }
        Json j;
        j["orientations"] = arr;
        j["matroid_size"] = [&]() {
            std::set<std::vector<int>> bases;
            for (auto& [g2, base] : orients) bases.insert(base);
            return bases.size();
        }();
        *json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_find_sites(const plabic_network* net, char** json) {
    return guarded([&]() {
        if (!net || !json) return fail(PLABIC_ERR_ARG, "null argument");
        auto s = find_sites(net->g);
        Json j;
        Json sq = Json::array();
        for (auto& q : s.squares) sq.push_back({q[0], q[1], q[2], q[3]});
        j["squares"] = sq;
        Json fl = Json::array();
        for (auto& f : s.flips) fl.push_back({f.first, f.second});
        j["flips"] = fl;
        Json pp = Json::array();
        for (auto& f : s.parallel_pairs) pp.push_back({f.first, f.second});
        j["parallel_pairs"] = pp;
        j["bivalent"] = s.bivalent;
        j["leaves"] = s.leaves;
        j["defrost_pairs"] = s.defrost_pairs;
        *json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_measure(const plabic_network* net, const char* ray, char** json) {
    return guarded([&]() {
        if (!net || !json) return fail(PLABIC_ERR_ARG, "null argument");
        GaugedOrientation go(net->g, ray_from_spec(net->g, ray));
        auto A = boundary_measurement(go);
        Json j;
        j["base"] = go.sources();
        j["matrix"] = matrix_to_json(A);
        j["minors"] = minors_to_json(maximal_minors(A));
        *json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_vectors(const plabic_network* net, const char* ray, char** json) {
    return guarded([&]() {
        if (!net || !json) return fail(PLABIC_ERR_ARG, "null argument");
        GaugedOrientation go(net->g, ray_from_spec(net->g, ray));
        auto sys = edge_vectors_linear(go);
        Json j;
        j["base"] = go.sources();
        j["vectors"] = vectors_to_json(net->g, sys);
        *json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_signature(const plabic_network* net, const char* ray, char** json) {
    return guarded([&]() {
        if (!net || !json) return fail(PLABIC_ERR_ARG, "null argument");
        GaugedOrientation go(net->g, ray_from_spec(net->g, ray));
        Json j;
        j["ray"] = "(" + go.ray().x.str() + ", " + go.ray().y.str() + ")";
        j["signature"] = signature_to_json(net->g, go);
        auto fs = net->g.enumerate_faces();
        auto parity = face_signature_check(go, fs);
        j["face_parity_ok"] = parity.ok();
        *json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_divisor(const plabic_network* net, const char* kappa_csv, const char* ray,
                             const char* t0_spec, char** json) {
    return guarded([&]() {
        if (!net || !json || !kappa_csv) return fail(PLABIC_ERR_ARG, "null argument");
        auto val = net->g.validate();
        if (!val.ok()) return fail(PLABIC_ERR_INVALID, val.to_string());
        GaugedOrientation go(net->g, ray_from_spec(net->g, ray));
        auto sys = edge_vectors_linear(go);
        auto s = soliton_from(net->g, go, kappa_csv, sys);
        ReferenceTime t0;
        if (!t0_spec || std::string(t0_spec) == "auto") {
            t0 = pick_reference_time(sys, s);
            if (!t0.ok) return fail(PLABIC_ERR_FAILED, "no admissible reference time: " + t0.reason);
        } else {
            t0.ok = true;
            t0.x0 = Rat::parse(t0_spec);
            t0.exact = t0.x0.is_zero();
        }
        auto curve = build_curve(net->g);
        auto div = place_divisor(curve, go, sys, s, t0);
        Json j = divisor_to_json(curve, div);
        j["t0"] = t0.x0.str();
        auto count = verify_oval_count(div, curve, s, go, t0, sys);
        j["one_point_per_finite_oval"] = count.pass;
        j["degenerate"] = div.degenerate();
        *json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_soliton(const plabic_network* net, const char* kappa_csv,
                             const char* times_csv, double x_min, double x_max, int samples,
                             char** json) {
    return guarded([&]() {
        if (!net || !json || !kappa_csv) return fail(PLABIC_ERR_ARG, "null argument");
        if (samples < 2 || x_max <= x_min) return fail(PLABIC_ERR_ARG, "bad sample grid");
        GaugedOrientation go(net->g, ray_from_spec(net->g, nullptr));
        auto sys = edge_vectors_linear(go);
        auto s = soliton_from(net->g, go, kappa_csv, sys);
        auto rep = s.validate();
        if (!rep.ok()) return fail(PLABIC_ERR_INVALID, rep.to_string());
        // times: "y,t" or "x0,y,t" (the first entry shifts the x grid).
        auto yt = parse_csv_rats(times_csv);
        long double xoff = 0.0L, y = 0.0L, t = 0.0L;
        if (yt.size() >= 3) {
            xoff = yt[0].to_long_double();
            y = yt[1].to_long_double();
            t = yt[2].to_long_double();
        } else {
            y = yt.size() > 0 ? yt[0].to_long_double() : 0.0L;
            t = yt.size() > 1 ? yt[1].to_long_double() : 0.0L;
        }
        Json j;
        auto sato = sato_divisor(s, {});
        Json roots = Json::array();
        for (long double r : sato.roots) roots.push_back(float_str(r));
        j["sato_roots_at_zero"] = roots;
        Json grid = Json::array();
        for (int i = 0; i < samples; ++i) {
            long double x = xoff + x_min + (x_max - x_min) * i / (samples - 1);
            Json p;
            p["x"] = float_str(x);
            p["tau"] = float_str(tau(s, {x, y, t}));
            p["u"] = float_str(kp_u(s, {x, y, t}));
            grid.push_back(p);
        }
        j["grid"] = grid;
        *json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_move(const plabic_network* net, const char* kind, const char* site_csv,
                          const char* params_csv, const plabic_network* other,
                          plabic_network** result, char** delta_json) {
    return guarded([&]() {
        if (!net || !kind || !result) return fail(PLABIC_ERR_ARG, "null argument");
        std::string k = kind;
        auto site = parse_csv_strings(site_csv);
        auto params = parse_csv_strings(params_csv);
        MoveRecord rec;
        if (k == "M1") {
            if (site.size() != 4) return fail(PLABIC_ERR_ARG, "M1 needs four vertex ids");
            rec = square_move(net->g, {site[0], site[1], site[2], site[3]});
        } else if (k == "M2") {
            if (site.size() != 2) return fail(PLABIC_ERR_ARG, "M2 needs two vertex ids");
            rec = flip_move(net->g, site[0], site[1]);
        } else if (k == "M3-insert") {
            if (site.size() != 2) return fail(PLABIC_ERR_ARG, "M3-insert needs tail,head ids");
            int t = -1, h = -1;
            auto vt = net->g.find_vertex(site[0]);
            auto vh = net->g.find_vertex(site[1]);
            if (!vt || !vh) return fail(PLABIC_ERR_ARG, "unknown vertex id");
            t = *vt;
            h = *vh;
            int edge = -1;
            for (int e = 0; e < net->g.edge_count(); ++e)
                if (net->g.edge(e).tail == t && net->g.edge(e).head == h) edge = e;
            if (edge < 0) return fail(PLABIC_ERR_ARG, "no such edge");
            Color c = params.size() > 0 && params[0] == "black" ? Color::Black : Color::White;
            Rat pos = params.size() > 1 ? Rat::parse(params[1]) : Rat(1, 2);
            rec = middle_vertex_insert(net->g, edge, c, pos, "m3v");
        } else if (k == "M3-remove") {
            if (site.size() != 1) return fail(PLABIC_ERR_ARG, "M3-remove needs one vertex id");
            rec = middle_vertex_remove(net->g, site[0]);
        } else if (k == "R1") {
            if (site.size() != 2) return fail(PLABIC_ERR_ARG, "R1 needs white,black ids");
            rec = parallel_reduction(net->g, site[0], site[1]);
        } else if (k == "R2") {
            if (site.size() != 2) return fail(PLABIC_ERR_ARG, "R2 needs two vertex ids");
            rec = dipole_reduction(net->g, site[0], site[1]);
        } else if (k == "R3") {
            if (site.size() != 1) return fail(PLABIC_ERR_ARG, "R3 needs one vertex id");
            rec = leaf_reduction(net->g, site[0]);
        } else if (k == "unR1") {
            if (site.size() != 2) return fail(PLABIC_ERR_ARG, "unR1 needs tail,head ids");
            auto vt = net->g.find_vertex(site[0]);
            auto vh = net->g.find_vertex(site[1]);
            if (!vt || !vh) return fail(PLABIC_ERR_ARG, "unknown vertex id");
            int edge = -1;
            for (int e = 0; e < net->g.edge_count(); ++e)
                if (net->g.edge(e).tail == *vt && net->g.edge(e).head == *vh) edge = e;
            if (edge < 0) return fail(PLABIC_ERR_ARG, "no such edge");
            Rat p = params.size() > 0 ? Rat::parse(params[0]) : Rat(1, 2);
            Rat q = params.size() > 1 ? Rat::parse(params[1]) : Rat(1, 3);
            rec = parallel_unreduction(net->g, edge, p, q);
        } else if (k == "sum") {
            if (!other) return fail(PLABIC_ERR_ARG, "sum needs a second network");
            bool nested = !params.empty() && params[0] == "nested";
            int gap = params.size() > 1 ? std::stoi(params[1]) : 1;
            rec = direct_sum(net->g, other->g, nested, gap);
        } else if (k == "defrost") {
            if (site.size() != 1) return fail(PLABIC_ERR_ARG, "defrost needs the pair index j");
            rec = defrost(net->g, std::stoi(site[0]));
        } else {
            return fail(PLABIC_ERR_ARG, "unknown move kind: " + k);
        }
        Json j;
        j["kind"] = rec.kind;
        j["notes"] = rec.notes;
        // Measurement comparison where the move preserves the point.
        if (k != "sum" && k != "defrost") {
            std::string why;
            std::mt19937_64 rng(19);
            GaugedOrientation g1(net->g, pick_gauge_ray(net->g, rng));
            GaugedOrientation g2(rec.result, pick_gauge_ray(rec.result, rng));
            bool same =
                same_grassmannian_point(boundary_measurement(g1), boundary_measurement(g2), &why);
            j["measurement_invariant"] = same;
            if (!same) j["measurement_detail"] = why;
        }
        j["faces_before"] = net->g.enumerate_faces().faces.size();
        j["faces_after"] = rec.result.enumerate_faces().faces.size();
        *result = new plabic_network{std::move(rec.result)};
        if (delta_json) *delta_json = dup_string(j.dump(2));
        return PLABIC_OK;
    });
}

plabic_status plabic_verify(const plabic_network* net, unsigned long seed, char** report_json) {
    return guarded([&]() {
        if (!net || !report_json) return fail(PLABIC_ERR_ARG, "null argument");
        auto rep = verify_network(net->g, seed);
        Json j;
        j["pass"] = rep.pass();
        Json lines = Json::array();
        for (const auto& l : rep.lines) {
            Json jl;
            jl["name"] = l.name;
            jl["pass"] = l.pass;
            jl["detail"] = l.detail;
            lines.push_back(jl);
        }
        j["checks"] = lines;
        *report_json = dup_string(j.dump(2));
        if (!rep.pass()) return fail(PLABIC_ERR_FAILED, "verification failed");
        return PLABIC_OK;
    });
}

} // extern "C"
