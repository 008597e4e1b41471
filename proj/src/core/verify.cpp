// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/verify.hpp"

#include <algorithm>
#include <set>
#include <map>
#include <sstream>

namespace plabic {

Graph randomize_weights(const Graph& g, std::mt19937_64& rng, int max_num) {
    std::uniform_int_distribution<int> d(1, max_num);
    Graph out;
    std::vector<Rat> xs;
    for (int j = 1; j <= g.n_boundary(); ++j) xs.push_back(g.vertex(g.boundary_vertex(j)).pos.x);
    out.set_boundary_xs(xs);
    for (int v : g.internal_vertices())
        out.add_internal(g.vertex(v).id, g.vertex(v).color, g.vertex(v).pos);
    for (int e = 0; e < g.edge_count(); ++e)
        out.add_edge(g.vertex(g.edge(e).tail).id, g.vertex(g.edge(e).head).id,
                     Rat(d(rng), d(rng)));
    return out;
}

std::vector<Rat> random_phases(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-24, 24), den(1, 8);
    std::set<Rat> vals;
    while (static_cast<int>(vals.size()) < n) vals.insert(Rat(num(rng), den(rng)));
    return std::vector<Rat>(vals.begin(), vals.end());
}

bool same_grassmannian_point(const std::vector<RatVec>& A, const std::vector<RatVec>& B,
                             std::string* why) {
    auto ma = maximal_minors(A), mb = maximal_minors(B);
    if (ma.size() != mb.size()) {
        if (why) *why = "different minor counts";
        return false;
    }
    Rat lam, mu;
    bool have = false;
    for (size_t i = 0; i < ma.size(); ++i) {
        const Rat &x = ma[i].second, &y = mb[i].second;
        if (x.is_zero() != y.is_zero()) {
            if (why) *why = "vanishing pattern differs";
            return false;
        }
        if (!have && !x.is_zero()) {
            lam = y;
            mu = x;
            have = true;
            continue;
        }
        if (have && x * lam != y * mu) {
            if (why) *why = "Pluecker ratios differ";
            return false;
        }
    }
    return true;
}

VerifyLine check_dual_method(const Graph& g, unsigned long seed, int draws) {
    std::mt19937_64 rng(seed);
    for (int d = 0; d < draws; ++d) {
        Graph gw = randomize_weights(g, rng);
        Vec2 ray = pick_gauge_ray(gw, rng);
        GaugedOrientation go(gw, ray);
        EdgeVectorSystem sys;
        try {
            sys = edge_vectors_linear(go);
        } catch (const std::exception& e) {
            return {"dual-method", false, std::string("linear solve failed: ") + e.what()};
        }
        for (int e = 0; e < gw.edge_count(); ++e) {
            RatVec flow = edge_vector_flow(go, e);
            if (flow != sys.E[e]) {
                std::ostringstream os;
                os << "draw " << d << ", edge " << e << ": flow formula != linear system";
                return {"dual-method", false, os.str()};
            }
        }
    }
    return {"dual-method", true, std::to_string(draws) + " draws, exact equality"};
}

VerifyLine check_face_parity(const Graph& g, unsigned long seed, int rays, int orientation_cap) {
    std::mt19937_64 rng(seed);
    auto orients = g.perfect_orientations(orientation_cap);
    int combos = 0;
    for (auto& [g2, base] : orients) {
        auto fs = g2.enumerate_faces();
        for (int r = 0; r < rays; ++r) {
            Vec2 ray = pick_gauge_ray(g2, rng);
            GaugedOrientation go(g2, ray);
            auto rep = face_signature_check(go, fs);
            ++combos;
            if (!rep.ok()) {
                std::ostringstream os;
                os << "orientation base {";
                for (int b : base) os << b << ",";
                os << "} ray " << r << ": ";
                for (auto& l : rep.lines)
                    if (!l.ok) os << "face " << l.face << " (" << l.detail << ") ";
                return {"face-parity", false, os.str()};
            }
        }
    }
    return {"face-parity", true,
            std::to_string(orients.size()) + " orientations x " + std::to_string(rays) + " rays"};
}

VerifyLine check_minor_signs(const Graph& g, unsigned long seed, int draws) {
    std::mt19937_64 rng(seed);
    std::vector<bool> positive;
    for (int d = 0; d < draws; ++d) {
        Graph gw = randomize_weights(g, rng);
        GaugedOrientation go(gw, pick_gauge_ray(gw, rng));
        auto A = boundary_measurement(go);
        auto minors = maximal_minors(A);
        if (positive.empty()) positive.assign(minors.size(), false);
        for (size_t i = 0; i < minors.size(); ++i) {
            if (minors[i].second.sign() < 0)
                return {"minor-signs", false, "negative maximal minor found"};
            bool pos = minors[i].second.sign() > 0;
            if (d == 0) positive[i] = pos;
            else if (positive[i] != pos)
                return {"minor-signs", false, "matroid support changed across weight draws"};
        }
    }
    return {"minor-signs", true, "nonnegative minors, stable support"};
}

VerifyLine check_source_parity(const Graph& g, unsigned long seed) {
    std::mt19937_64 rng(seed);
    GaugedOrientation go(g, pick_gauge_ray(g, rng));
    auto base = go.sources();
    for (size_t r = 0; r < base.size(); ++r) {
        int b = g.boundary_vertex(base[r]);
        int e = g.out_edges(b)[0];
        std::map<int, int> parity;
        for (const auto& f : edge_flows(go, e)) {
            int par = ((f.wind + f.int_count) % 2 + 2) % 2;
            auto it = parity.find(f.sink_label);
            if (it == parity.end()) parity[f.sink_label] = par;
            else if (it->second != par)
                return {"source-parity", false,
                        "flows from source " + std::to_string(base[r]) + " to sink " +
                            std::to_string(f.sink_label) + " disagree in sign"};
        }
        // Parity must match the pivot count strictly between the source and sink.
        for (auto& [sink, par] : parity) {
            int sigma = 0;
            for (int i2 : base)
                if ((i2 > std::min<int>(base[r], sink)) && (i2 < std::max<int>(base[r], sink)))
                    ++sigma;
            if (par != sigma % 2)
                return {"source-parity", false, "sign does not match the pivot count rule"};
        }
    }
    return {"source-parity", true, ""};
}

VerifyLine check_oval_counts(const Graph& g, unsigned long seed, int draws,
                             double max_degenerate_rate) {
    std::mt19937_64 rng(seed);
    int degenerate = 0, checked = 0;
    for (int d = 0; d < draws; ++d) {
        Graph gw = randomize_weights(g, rng);
        Vec2 ray = pick_gauge_ray(gw, rng);
        GaugedOrientation go(gw, ray);
        auto sys = edge_vectors_linear(go);
        SolitonData s;
        s.kappa = random_phases(g.n_boundary(), rng);
        s.A = sys.A;
        auto t0 = pick_reference_time(sys, s);
        if (!t0.ok) {
            ++degenerate;
            continue;
        }
        auto curve = build_curve(gw);
        auto div = place_divisor(curve, go, sys, s, t0);
        if (div.degenerate()) {
            ++degenerate;
            continue;
        }
        auto rep = verify_oval_count(div, curve, s, go, t0, sys);
        ++checked;
        if (!rep.pass || !rep.parity_pass)
            return {"oval-counts", false, "draw " + std::to_string(d) + ": " + rep.detail};
    }
    std::ostringstream os;
    os << checked << " draws pass, " << degenerate << " degenerate";
    if (degenerate > max_degenerate_rate * draws)
        return {"oval-counts", false, os.str() + " (rate above threshold)"};
    return {"oval-counts", true, os.str()};
}

VerifyLine check_invariance(const Graph& g, unsigned long seed) {
    std::mt19937_64 rng(seed);
    GaugedOrientation go(g, pick_gauge_ray(g, rng));
    auto sys = edge_vectors_linear(go);
    SolitonData s;
    s.kappa = random_phases(g.n_boundary(), rng);
    s.A = sys.A;
    auto rep = verify_divisor_invariance(g, s, seed + 1);
    return {"invariance", rep.pass, rep.detail};
}

VerifyLine check_move_measurement(const Graph& before, const Graph& after,
                                  const std::string& name) {
    std::mt19937_64 rng(7);
    GaugedOrientation g1(before, pick_gauge_ray(before, rng));
    GaugedOrientation g2(after, pick_gauge_ray(after, rng));
    std::string why;
    bool ok = same_grassmannian_point(boundary_measurement(g1), boundary_measurement(g2), &why);
    return {name + "-measurement", ok, why};
}

VerifyLine check_zero_invariance(const Graph& g, unsigned long seed) {
    std::mt19937_64 rng(seed);
    auto orients = g.perfect_orientations(4);
    std::vector<std::vector<bool>> zero_sets;
    for (auto& [g2, base] : orients) {
        GaugedOrientation go(g2, pick_gauge_ray(g2, rng));
        auto sys = edge_vectors_linear(go);
        std::vector<bool> z(g2.edge_count());
        for (int e = 0; e < g2.edge_count(); ++e) {
            bool all0 = true;
            for (const auto& c : sys.E[e]) all0 &= c.is_zero();
            z[e] = all0;
        }
        zero_sets.push_back(z);
    }
    for (size_t i = 1; i < zero_sets.size(); ++i)
        if (zero_sets[i] != zero_sets[0])
            return {"zero-invariance", false, "zero set depends on the orientation"};
    return {"zero-invariance", true, std::to_string(zero_sets.size()) + " orientations"};
}

SquarePrediction square_prediction(const Graph& g, const GaugedOrientation& go,
                                   const SquareSite& site, const EdgeVectorSystem& sys,
                                   const SolitonData& s) {
    auto wex = darboux_exact_at_zero(s);
    auto flag = [&](int v, int e) {
        const RatVec& z = g.edge(e).tail == v ? sys.z_tail[e] : sys.z_head[e];
        return dressed_pair_exact0(z, s, wex);
    };
    SquarePrediction p;
    Rat num = flag(site.src, site.s_src_sink);
    Rat den = flag(site.x, site.s_src_x);
    if (den.is_zero()) throw std::runtime_error("square_prediction: vanishing half-edge value");
    p.psi0 = num / den;
    if (go.signature(site.s_src_x) % 2) p.psi0 = -p.psi0;
    p.gamma_src = p.psi0 / (site.alpha4 + p.psi0);
    p.gamma_y = site.alpha1 * site.alpha3 * p.psi0 / site.alpha2;
    // The closed forms take the first counterclockwise label at each white
    // corner to be its edge toward the sink corner; otherwise the coordinate
    // is the complementary one.
    if (g.trivalent_labels(site.src)[0] != site.s_src_sink) p.gamma_src = Rat(1) - p.gamma_src;
    if (g.trivalent_labels(site.y)[0] != site.s_y_sink) p.gamma_y = Rat(1) - p.gamma_y;
    return p;
}

VerifyReport verify_network(const Graph& g, unsigned long seed, bool with_moves) {
    VerifyReport rep;
    auto val = g.validate();
    rep.add("validate", val.ok(), val.to_string());
    if (!val.ok()) return rep;
    rep.lines.push_back(check_dual_method(g, seed, 10));
    rep.lines.push_back(check_face_parity(g, seed + 1, 4, 12));
    rep.lines.push_back(check_minor_signs(g, seed + 2, 10));
    rep.lines.push_back(check_source_parity(g, seed + 3));
    rep.lines.push_back(check_oval_counts(g, seed + 4, 25));
    rep.lines.push_back(check_invariance(g, seed + 5));
    rep.lines.push_back(check_zero_invariance(g, seed + 6));
    if (with_moves) {
        auto sites = find_sites(g);
        if (!sites.squares.empty()) {
            auto rec = square_move(g, sites.squares[0]);
            rep.lines.push_back(check_move_measurement(g, rec.result, "M1"));
        }
        if (!sites.bivalent.empty()) {
            auto rec = middle_vertex_remove(g, sites.bivalent[0]);
            if (rec.result.validate().ok())
                rep.lines.push_back(check_move_measurement(g, rec.result, "M3"));
        }
        if (!sites.parallel_pairs.empty()) {
            auto rec =
                parallel_reduction(g, sites.parallel_pairs[0].first, sites.parallel_pairs[0].second);
            rep.lines.push_back(check_move_measurement(g, rec.result, "R1"));
        }
    }
    return rep;
}

} // namespace plabic
