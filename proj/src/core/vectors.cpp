// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/vectors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plabic {

namespace {

bool edge_touches_boundary(const Graph& g, int e) {
    return g.is_boundary(g.edge(e).tail) || g.is_boundary(g.edge(e).head);
}

} // namespace

std::vector<ConservativeFlow> conservative_flows(const Graph& g, int max_edges) {
    if (g.edge_count() > max_edges)
        throw std::runtime_error("conservative_flows: edge count exceeds the enumeration cap");
    std::vector<int> candidates;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!edge_touches_boundary(g, e)) candidates.push_back(e);

    std::vector<ConservativeFlow> out;
    std::vector<int> chosen;
    std::vector<int> bal(g.vertex_count(), 0); // out - in among chosen edges
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == candidates.size()) {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (bal[v] != 0) return;
            ConservativeFlow f;
            f.edges = chosen;
            for (int e : chosen) f.weight *= g.edge(e).weight;
            out.push_back(std::move(f));
            return;
        }
        // Feasibility: remaining edges can still fix any imbalance. Cheap bound:
        // skip deep pruning, graphs are small.
        rec(i + 1);
        int e = candidates[i];
        chosen.push_back(e);
        ++bal[g.edge(e).tail];
        --bal[g.edge(e).head];
        rec(i + 1);
        --bal[g.edge(e).tail];
        ++bal[g.edge(e).head];
        chosen.pop_back();
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const ConservativeFlow& a, const ConservativeFlow& b) {
                  return a.edges.size() < b.edges.size();
              });
    return out;
}

std::vector<int> loop_erase(const Graph& g, std::vector<int> walk) {
    for (size_t i = 0; i + 1 < walk.size(); ++i)
        if (g.edge(walk[i]).head != g.edge(walk[i + 1]).tail)
            throw std::invalid_argument("loop_erase: walk is not edge-consecutive");
    while (true) {
        size_t best_l = walk.size(), best_s = walk.size();
        for (size_t l = 0; l < walk.size(); ++l) {
            for (size_t s = l + 1; s < walk.size(); ++s) {
                if (walk[l] == walk[s]) {
                    if (l < best_l || (l == best_l && s < best_s)) { best_l = l; best_s = s; }
                    break;
                }
            }
            if (best_l == l) break;
        }
        if (best_l == walk.size()) return walk;
        walk.erase(walk.begin() + best_l, walk.begin() + best_s);
    }
}

std::vector<EdgeFlow> edge_flows(const GaugedOrientation& go, int e0, int max_edges) {
    const Graph& g = go.graph();
    if (g.edge_count() > max_edges)
        throw std::runtime_error("edge_flows: edge count exceeds the enumeration cap");

    // Enumerate edge-simple directed walks from e0 to any boundary sink, then
    // pair each with the disjoint conservative flows. In a perfect trivalent
    // graph this enumerates every edge flow exactly once.
    std::vector<std::vector<int>> walks;
    std::vector<int> cur{e0};
    std::vector<bool> used(g.edge_count(), false);
    used[e0] = true;
    std::function<void()> rec = [&]() {
        int v = g.edge(cur.back()).head;
        if (g.is_boundary(v)) {
            walks.push_back(cur);
            return;
        }
        for (int f : g.out_edges(v)) {
            if (used[f]) continue;
            used[f] = true;
            cur.push_back(f);
            rec();
            cur.pop_back();
            used[f] = false;
        }
    };
    rec();

    auto cons = conservative_flows(g, max_edges);
    std::vector<EdgeFlow> out;
    for (const auto& w : walks) {
        std::vector<bool> in_walk(g.edge_count(), false);
        for (int e : w) in_walk[e] = true;
        Rat w_weight(1);
        for (int e : w) w_weight *= g.edge(e).weight;
        int wind = 0, ic = 0;
        for (size_t i = 0; i + 1 < w.size(); ++i) wind += go.winding(w[i], w[i + 1]);
        for (int e : w) ic += go.int_count(e);
        int sink = g.boundary_label(g.edge(w.back()).head);
        for (const auto& c : cons) {
            bool disjoint = true;
            for (int e : c.edges) disjoint &= !in_walk[e];
            if (!disjoint) continue;
            EdgeFlow f;
            f.walk = w;
            f.rest = c.edges;
            f.sink_label = sink;
            f.weight = w_weight * c.weight;
            f.wind = wind;
            f.int_count = ic;
            out.push_back(std::move(f));
        }
    }
    return out;
}

RatVec edge_vector_flow(const GaugedOrientation& go, int e) {
    const Graph& g = go.graph();
    Rat denom(0);
    for (const auto& c : conservative_flows(g)) denom += c.weight;
    RatVec v(g.n_boundary(), Rat(0));
    for (const auto& f : edge_flows(go, e)) {
        Rat term = f.weight;
        if (((f.wind + f.int_count) % 2 + 2) % 2 == 1) term = -term;
        v[f.sink_label - 1] += term;
    }
    for (auto& c : v) c /= denom;
    return v;
}

RatVec path_series_vector(const GaugedOrientation& go, int e0) {
    const Graph& g = go.graph();
    if (g.has_directed_cycle())
        throw std::runtime_error("path_series_vector: network must be acyclic");
    RatVec v(g.n_boundary(), Rat(0));
    std::vector<int> cur{e0};
    std::function<void()> rec = [&]() {
        int h = g.edge(cur.back()).head;
        if (g.is_boundary(h)) {
            Rat w(1);
            int wind = 0, ic = 0;
            for (size_t i = 0; i < cur.size(); ++i) {
                w *= g.edge(cur[i]).weight;
                ic += go.int_count(cur[i]);
                if (i + 1 < cur.size()) wind += go.winding(cur[i], cur[i + 1]);
            }
            if (((wind + ic) % 2 + 2) % 2 == 1) w = -w;
            v[g.boundary_label(h) - 1] += w;
            return;
        }
        for (int f : g.out_edges(h)) {
            cur.push_back(f);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return v;
}

// --- linear system ---------------------------------------------------------------

EdgeVectorSystem edge_vectors_linear(const GaugedOrientation& go,
                                     const std::vector<RatVec>* sink_conditions) {
    const Graph& g = go.graph();
    const int m = g.edge_count();
    const int n = g.n_boundary();

    // Unknowns x_e (n-vector each). Each edge has one defining relation read at
    // its head:
    //   sink b_j:      x_e = (-1)^{int(e)} w_e * E_sink(j)
    //   bivalent v:    x_e = (-1)^{int(e)+wind(e,f)} w_e x_f          (f = out)
    //   black v:       x_e = (-1)^{int(e)+wind(e,e1)} w_e x_{e1}
    //   white v:       x_e = (-1)^{int(e)} w_e [ (-1)^{wind(e,e1)} x_{e1}
    //                                           + (-1)^{wind(e,e2)} x_{e2} ]
    // Assemble (I - M) x = b and eliminate.
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m, Rat(0)));
    std::vector<RatVec> b(m, RatVec(n, Rat(0)));
    auto sign_pow = [](int k) { return (k % 2 + 2) % 2 == 0 ? Rat(1) : Rat(-1); };

    for (int e = 0; e < m; ++e) {
        int v = g.edge(e).head;
        const Rat& w = g.edge(e).weight;
        if (g.is_boundary(v)) {
            RatVec cond(n, Rat(0));
            if (sink_conditions) cond = (*sink_conditions)[g.boundary_label(v) - 1];
            else cond[g.boundary_label(v) - 1] = Rat(1);
            for (int j = 0; j < n; ++j) b[e][j] = sign_pow(go.int_count(e)) * w * cond[j];
            continue;
        }
        if (g.out_edges(v).empty()) {
            continue; // dead end (relaxed graphs): no path onward, E_e = 0
        }
        if (g.degree(v) == 2) {
            auto io = g.bivalent_in_out(v);
            M[e][io[1]] = sign_pow(go.int_count(e) + go.winding(e, io[1])) * w;
        } else if (g.vertex(v).color == Color::Black) {
            auto lab = g.trivalent_labels(v);
            M[e][lab[0]] = sign_pow(go.int_count(e) + go.winding(e, lab[0])) * w;
        } else {
            auto lab = g.trivalent_labels(v);
            M[e][lab[0]] = sign_pow(go.int_count(e) + go.winding(e, lab[0])) * w;
            M[e][lab[1]] = sign_pow(go.int_count(e) + go.winding(e, lab[1])) * w;
        }
    }

    // Gaussian elimination on (I - M) with n right-hand sides.
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = (i == j ? Rat(1) : Rat(0)) - M[i][j];
    std::vector<RatVec> rhs = b;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("edge_vectors_linear: singular system (signature not geometric)");
        std::swap(a[col], a[piv]);
        std::swap(rhs[col], rhs[piv]);
        Rat inv = a[col][col].inv();
        for (int j = col; j < m; ++j) a[col][j] *= inv;
        for (int j = 0; j < n; ++j) rhs[col][j] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (int j = col; j < m; ++j) a[r][j] -= f * a[col][j];
            for (int j = 0; j < n; ++j) rhs[r][j] -= f * rhs[col][j];
        }
    }

    EdgeVectorSystem sys;
    sys.E = rhs;
    sys.base = go.sources();

    // Half-edge vectors from the flag signs.
    sys.z_tail.resize(m);
    sys.z_head.resize(m);
    for (int e = 0; e < m; ++e) {
        Rat st = go.sigma_tail(e) ? Rat(-1) : Rat(1);
        Rat sh = (go.sigma_tail(e) + go.signature(e)) % 2 ? Rat(-1) : Rat(1);
        sys.z_tail[e].resize(n);
        sys.z_head[e].resize(n);
        for (int j = 0; j < n; ++j) {
            sys.z_tail[e][j] = st * sys.E[e][j];
            sys.z_head[e][j] = sh * sys.E[e][j] / g.edge(e).weight;
        }
    }

    // Boundary measurement rows: A[r] = E_{source edge r} + unit(i_r).
    for (int lbl : sys.base) {
        int b_v = g.boundary_vertex(lbl);
        int e = g.out_edges(b_v)[0];
        RatVec row = sys.E[e];
        row[lbl - 1] += Rat(1);
        sys.A.push_back(std::move(row));
    }
    return sys;
}

std::vector<RatVec> boundary_measurement(const GaugedOrientation& go) {
    return edge_vectors_linear(go).A;
}

Rat minor(const std::vector<RatVec>& A, const std::vector<int>& cols) {
    const int k = static_cast<int>(A.size());
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = A[i][cols[j] - 1];
    // Fraction-free-ish elimination on a dense k x k rational matrix.
    Rat det(1);
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
            if (!m[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) { std::swap(m[piv], m[c]); det = -det; }
        det *= m[c][c];
        Rat inv = m[c][c].inv();
        for (int r = c + 1; r < k; ++r) {
            if (m[r][c].is_zero()) continue;
            Rat f = m[r][c] * inv;
            for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

std::vector<std::pair<std::vector<int>, Rat>> maximal_minors(const std::vector<RatVec>& A) {
    const int k = static_cast<int>(A.size());
    const int n = k ? static_cast<int>(A[0].size()) : 0;
    std::vector<std::pair<std::vector<int>, Rat>> out;
    std::vector<int> cols;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cols.size()) == k) {
            out.push_back({cols, minor(A, cols)});
            return;
        }
        for (int c = start; c <= n; ++c) {
            cols.push_back(c);
            rec(c + 1);
            cols.pop_back();
        }
    };
    rec(1);
    return out;
}

// --- transforms -------------------------------------------------------------------

static bool vec_eq(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

static bool is_zero(const RatVec& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

TransformOutcome transform_ray(const GaugedOrientation& before, const Vec2& new_ray) {
    TransformOutcome out;
    const Graph& g = before.graph();
    GaugedOrientation after(g, new_ray);
    auto sys1 = edge_vectors_linear(before);
    auto sys2 = edge_vectors_linear(after);
    out.system = sys2;

    // Swept sector: rotate from the old to the new direction staying in the
    // upper half plane.
    Vec2 from = before.ray(), to = new_ray;
    bool ccw = pair_sign(from, to) > 0;
    Vec2 lo = ccw ? from : to, hi = ccw ? to : from;

    std::set<int> source_edges;
    for (int lbl : before.sources()) source_edges.insert(g.out_edges(g.boundary_vertex(lbl))[0]);

    std::ostringstream detail;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (source_edges.count(e)) {
            if (!vec_eq(sys1.E[e], sys2.E[e])) {
                out.ok = false;
                detail << "source edge " << e << " changed under ray move; ";
            }
            continue;
        }
        // par(e): the upward representative of the edge direction lies in the
        // swept sector.
        Vec2 d = g.edge_dir(e);
        if (d.y.sign() < 0) d = Vec2(-d.x, -d.y);
        int par = in_ccw_sector(d, lo, hi) ? 1 : 0;
        // int(V_e): sources whose rotating ray crosses the initial vertex of e.
        int crossings = 0;
        int tail = g.edge(e).tail;
        for (int lbl : before.sources()) {
            int b = g.boundary_vertex(lbl);
            if (b == tail) continue;
            Vec2 w = g.vertex(tail).pos - g.vertex(b).pos;
            if (in_ccw_sector(w, lo, hi)) ++crossings;
        }
        Rat s = (par + crossings) % 2 ? Rat(-1) : Rat(1);
        RatVec pred(sys1.E[e].size());
        for (size_t j = 0; j < pred.size(); ++j) pred[j] = s * sys1.E[e][j];
        if (!vec_eq(pred, sys2.E[e])) {
            out.ok = false;
            detail << "edge " << e << ": ray-change prediction mismatch; ";
        }
    }
    out.detail = detail.str();
    return out;
}

TransformOutcome transform_weight_gauge(const GaugedOrientation& before, int vertex, const Rat& t) {
    TransformOutcome out;
    const Graph& g = before.graph();
    if (g.is_boundary(vertex)) throw std::invalid_argument("weight gauge acts on internal vertices");
    // Rebuild with the gauged weights: w_e -> w_e * t_U / t_V for e = (U, V).
    Graph gw;
    gw.set_boundary(g.n_boundary());
    for (int v : g.internal_vertices()) gw.add_internal(g.vertex(v).id, g.vertex(v).color, g.vertex(v).pos);
    for (int e = 0; e < g.edge_count(); ++e) {
        Rat w = g.edge(e).weight;
        if (g.edge(e).tail == vertex) w *= t;
        if (g.edge(e).head == vertex) w = w / t;
        gw.add_edge(g.vertex(g.edge(e).tail).id, g.vertex(g.edge(e).head).id, w);
    }
    GaugedOrientation after(gw, before.ray());
    auto sys1 = edge_vectors_linear(before);
    auto sys2 = edge_vectors_linear(after);
    out.system = sys2;
    // Paths through the vertex pick up t and 1/t in consecutive edges; only a
    // path that starts on an outgoing edge keeps the bare factor t.
    std::ostringstream detail;
    for (int e = 0; e < g.edge_count(); ++e) {
        RatVec pred = sys1.E[e];
        if (g.edge(e).tail == vertex)
            for (auto& c : pred) c *= t;
        if (!vec_eq(pred, sys2.E[e])) {
            out.ok = false;
            detail << "edge " << e << ": weight-gauge prediction mismatch; ";
        }
    }
    out.detail = detail.str();
    return out;
}

TransformOutcome transform_vertex_gauge(const GaugedOrientation& before, int vertex,
                                        const Vec2& new_pos) {
    TransformOutcome out;
    const Graph& g = before.graph();
    Graph g2 = g;
    // Move the vertex; rebuild.
    Graph gm;
    gm.set_boundary(g.n_boundary());
    for (int v : g.internal_vertices())
        gm.add_internal(g.vertex(v).id, g.vertex(v).color, v == vertex ? new_pos : g.vertex(v).pos);
    for (int e = 0; e < g.edge_count(); ++e)
        gm.add_edge(g.vertex(g.edge(e).tail).id, g.vertex(g.edge(e).head).id, g.edge(e).weight);
    auto rep = gm.validate();
    if (!rep.ok()) {
        out.ok = false;
        out.detail = "vertex move breaks the embedding: " + rep.to_string();
        return out;
    }
    GaugedOrientation after(gm, before.ray());
    auto sys1 = edge_vectors_linear(before);
    auto sys2 = edge_vectors_linear(after);
    out.system = sys2;
    std::ostringstream detail;

    // Edge vectors change by signs only, and only at edges incident to the vertex.
    for (int e = 0; e < g.edge_count(); ++e) {
        bool incident = g.edge(e).tail == vertex || g.edge(e).head == vertex;
        if (!incident) {
            if (!vec_eq(sys1.E[e], sys2.E[e])) {
                out.ok = false;
                detail << "edge " << e << " changed though not incident; ";
            }
            continue;
        }
        RatVec neg = sys1.E[e];
        for (auto& c : neg) c = -c;
        if (!vec_eq(sys1.E[e], sys2.E[e]) && !vec_eq(neg, sys2.E[e])) {
            out.ok = false;
            detail << "edge " << e << " changed by more than a sign; ";
        }
    }
    // Signatures stay equivalent and half-edge vectors transform by (-1)^eta.
    auto eta = signature_equivalent(g, before.signature(), after.signature());
    if (!eta) {
        out.ok = false;
        detail << "signatures not equivalent; ";
    } else {
        for (int e = 0; e < g.edge_count() && out.ok; ++e) {
            int u = g.edge(e).tail, v = g.edge(e).head;
            Rat su = (!g.is_boundary(u) && (*eta)[u]) ? Rat(-1) : Rat(1);
            Rat sv = (!g.is_boundary(v) && (*eta)[v]) ? Rat(-1) : Rat(1);
            RatVec zt = sys1.z_tail[e], zh = sys1.z_head[e];
            for (auto& c : zt) c *= su;
            for (auto& c : zh) c *= sv;
            if (!vec_eq(zt, sys2.z_tail[e]) || !vec_eq(zh, sys2.z_head[e])) {
                out.ok = false;
                detail << "half-edge vectors do not follow (-1)^eta at edge " << e << "; ";
            }
        }
    }
    out.detail = detail.str();
    return out;
}

TransformOutcome transform_orientation(const GaugedOrientation& before, const Graph& reoriented) {
    TransformOutcome out;
    const Graph& g = before.graph();
    GaugedOrientation after(reoriented, before.ray());
    auto sys1 = edge_vectors_linear(before);
    auto sys2 = edge_vectors_linear(after);
    out.system = sys2;
    std::ostringstream detail;
    const int n = g.n_boundary();
    const int k = static_cast<int>(sys1.A.size());

    // hat E_e = alpha_e E_e + sum_r c^r_e A[r] with alpha_e != 0; checking both
    // containments makes the nonzero alpha implicit.
    auto in_span = [&](const RatVec& target, const std::vector<const RatVec*>& gens) {
        int cols_n = static_cast<int>(gens.size());
        std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(cols_n + 1, Rat(0)));
        for (int j = 0; j < n; ++j) {
            for (int c = 0; c < cols_n; ++c) mat[j][c] = (*gens[c])[j];
            mat[j][cols_n] = target[j];
        }
        int rank = 0;
        for (int c = 0; c < cols_n && rank < n; ++c) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if (!mat[r][c].is_zero()) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(mat[rank], mat[piv]);
            Rat inv = mat[rank][c].inv();
            for (int j = c; j <= cols_n; ++j) mat[rank][j] *= inv;
            for (int r = 0; r < n; ++r) {
                if (r == rank || mat[r][c].is_zero()) continue;
                Rat f = mat[r][c];
                for (int j = c; j <= cols_n; ++j) mat[r][j] -= f * mat[rank][j];
            }
            ++rank;
        }
        for (int r = rank; r < n; ++r)
            if (!mat[r][cols_n].is_zero()) return false;
        return true;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<const RatVec*> fwd{&sys1.E[e]};
        std::vector<const RatVec*> bwd{&sys2.E[e]};
        for (int r = 0; r < k; ++r) {
            fwd.push_back(&sys1.A[r]);
            bwd.push_back(&sys1.A[r]);
        }
        if (!in_span(sys2.E[e], fwd) || !in_span(sys1.E[e], bwd)) {
            out.ok = false;
            detail << "edge " << e << ": no invertible span relation to the old system; ";
        }
    }

    // Same point of the Grassmannian: row spaces of the two measurement
    // matrices agree (check all maximal minors are proportional).
    auto m1 = maximal_minors(sys1.A), m2 = maximal_minors(sys2.A);
    Rat lambda, mu;
    bool have = false;
    for (size_t i = 0; i < m1.size(); ++i) {
        if (!have && (!m1[i].second.is_zero() || !m2[i].second.is_zero())) {
            lambda = m2[i].second;
            mu = m1[i].second;
            have = true;
            if (lambda.is_zero() || mu.is_zero()) {
                out.ok = false;
                detail << "minor vanishing pattern differs; ";
                break;
            }
            continue;
        }
        if (have && m1[i].second * lambda != m2[i].second * mu) {
            out.ok = false;
            detail << "Pluecker coordinates differ at {" << m1[i].first[0] << ",...}; ";
            break;
        }
    }
    out.detail = detail.str();
    return out;
}

// --- zero vectors -------------------------------------------------------------------

ZeroVectorReport classify_zero_vectors(const Graph& g, const EdgeVectorSystem& sys) {
    ZeroVectorReport rep;
    const int m = g.edge_count();
    std::vector<bool> zero(m, false);
    for (int e = 0; e < m; ++e) zero[e] = is_zero(sys.E[e]);

    std::vector<int> comp(m, -1);
    int nc = 0;
    for (int e = 0; e < m; ++e) {
        if (!zero[e] || comp[e] >= 0) continue;
        // BFS over zero edges sharing a vertex.
        std::vector<int> stack{e};
        comp[e] = nc;
        std::vector<int> edges;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            edges.push_back(cur);
            for (int f = 0; f < m; ++f) {
                if (!zero[f] || comp[f] >= 0) continue;
                if (g.edge(f).tail == g.edge(cur).tail || g.edge(f).tail == g.edge(cur).head ||
                    g.edge(f).head == g.edge(cur).tail || g.edge(f).head == g.edge(cur).head) {
                    comp[f] = nc;
                    stack.push_back(f);
                }
            }
        }
        // Adjacent nonzero edges.
        std::set<int> vs;
        for (int f : edges) {
            vs.insert(g.edge(f).tail);
            vs.insert(g.edge(f).head);
        }
        std::vector<int> adjacent;
        for (int f = 0; f < m; ++f)
            if (!zero[f] && (vs.count(g.edge(f).tail) || vs.count(g.edge(f).head)))
                adjacent.push_back(f);
        // Type 1 iff all adjacent vectors are proportional to a common vector.
        bool type1 = true;
        if (!adjacent.empty()) {
            const RatVec& ref = sys.E[adjacent[0]];
            for (size_t i = 1; i < adjacent.size() && type1; ++i) {
                const RatVec& v = sys.E[adjacent[i]];
                // proportional: v x ref == 0 componentwise (2x2 minors vanish)
                for (size_t a = 0; a < v.size() && type1; ++a)
                    for (size_t b2 = a + 1; b2 < v.size() && type1; ++b2)
                        if (v[a] * ref[b2] != v[b2] * ref[a]) type1 = false;
            }
        }
        ZeroVectorReport::Component c;
        c.edges = edges;
        c.type = type1 ? 1 : 2;
        rep.components.push_back(std::move(c));
        ++nc;
    }
    return rep;
}

} // namespace plabic
