// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plabic {

namespace {

struct Rebuild {
    std::vector<Rat> boundary_xs;
    struct V {
        std::string id;
        Color c;
        Vec2 pos;
    };
    std::vector<V> internals;
    struct E {
        std::string tail, head;
        Rat w;
    };
    std::vector<E> edges;

    static Rebuild of(const Graph& g) {
        Rebuild r;
        for (int j = 1; j <= g.n_boundary(); ++j)
            r.boundary_xs.push_back(g.vertex(g.boundary_vertex(j)).pos.x);
        for (int v : g.internal_vertices())
            r.internals.push_back({g.vertex(v).id, g.vertex(v).color, g.vertex(v).pos});
        for (int e = 0; e < g.edge_count(); ++e)
            r.edges.push_back({g.vertex(g.edge(e).tail).id, g.vertex(g.edge(e).head).id,
                               g.edge(e).weight});
        return r;
    }

    void drop_vertex(const std::string& id) {
        internals.erase(std::remove_if(internals.begin(), internals.end(),
                                       [&](const V& v) { return v.id == id; }),
                        internals.end());
    }
    void drop_edges_at(const std::string& id) {
        edges.erase(std::remove_if(edges.begin(), edges.end(),
                                   [&](const E& e) { return e.tail == id || e.head == id; }),
                    edges.end());
    }

    Graph build() const {
        Graph g;
        g.set_boundary_xs(boundary_xs);
        for (const auto& v : internals) g.add_internal(v.id, v.c, v.pos);
        for (const auto& e : edges) g.add_edge(e.tail, e.head, e.w);
        return g;
    }
};

int require_vertex(const Graph& g, const std::string& id) {
    auto v = g.find_vertex(id);
    if (!v) throw std::invalid_argument("unknown vertex id: " + id);
    return *v;
}

int edge_between(const Graph& g, int u, int v) {
    for (int e = 0; e < g.edge_count(); ++e)
        if ((g.edge(e).tail == u && g.edge(e).head == v) ||
            (g.edge(e).tail == v && g.edge(e).head == u))
            return e;
    return -1;
}

int directed_edge(const Graph& g, int u, int v) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).tail == u && g.edge(e).head == v) return e;
    return -1;
}

} // namespace

// --- M1 ---------------------------------------------------------------------------

SquareSite square_site(const Graph& g, const std::array<std::string, 4>& vertex_ids) {
    std::array<int, 4> vs;
    for (int i = 0; i < 4; ++i) vs[i] = require_vertex(g, vertex_ids[i]);
    for (int v : vs)
        if (g.is_boundary(v) || g.degree(v) != 3)
            throw std::invalid_argument("square move: site vertices must be internal trivalent");

    SquareSite s;
    for (int v : vs) {
        int cyc_out = 0, cyc_in = 0;
        for (int w : vs) {
            if (w == v) continue;
            if (directed_edge(g, v, w) >= 0) ++cyc_out;
            if (directed_edge(g, w, v) >= 0) ++cyc_in;
        }
        if (cyc_out == 2 && g.vertex(v).color == Color::White) s.src = v;
        else if (cyc_in == 2 && g.vertex(v).color == Color::Black) s.sink = v;
        else if (g.vertex(v).color == Color::Black) s.x = v;
        else if (g.vertex(v).color == Color::White) s.y = v;
    }
    if (s.src < 0 || s.sink < 0 || s.x < 0 || s.y < 0)
        throw std::invalid_argument(
            "square move: site is not an alternating square with source/sink corners");
    s.s_src_x = directed_edge(g, s.src, s.x);
    s.s_x_y = directed_edge(g, s.x, s.y);
    s.s_y_sink = directed_edge(g, s.y, s.sink);
    s.s_src_sink = directed_edge(g, s.src, s.sink);
    if (s.s_src_x < 0 || s.s_x_y < 0 || s.s_y_sink < 0 || s.s_src_sink < 0)
        throw std::invalid_argument("square move: missing cycle edge");
    s.alpha1 = g.edge(s.s_y_sink).weight;
    s.alpha2 = g.edge(s.s_src_sink).weight;
    s.alpha3 = g.edge(s.s_x_y).weight;
    s.alpha4 = g.edge(s.s_src_x).weight;
    s.alpha2t = s.alpha2 + s.alpha1 * s.alpha3 * s.alpha4;
    s.alpha1t = s.alpha3 * s.alpha4 / s.alpha2t;
    s.alpha3t = s.alpha2 * s.alpha3 / s.alpha2t;
    s.alpha4t = s.alpha1 * s.alpha3 / s.alpha2t;
    return s;
}

MoveRecord square_move(const Graph& g, const std::array<std::string, 4>& vertex_ids,
                       SquareSite* plan) {
    SquareSite s = square_site(g, vertex_ids);
    if (plan) *plan = s;
    Rebuild r = Rebuild::of(g);
    auto id_of = [&](int v) { return g.vertex(v).id; };
    for (auto& v : r.internals) {
        for (int sv : {s.src, s.sink, s.x, s.y})
            if (v.id == id_of(sv)) v.c = v.c == Color::White ? Color::Black : Color::White;
    }
    for (auto& e : r.edges) {
        if (e.tail == id_of(s.src) && e.head == id_of(s.x)) {
            std::swap(e.tail, e.head); // now x -> src
            e.w = s.alpha4t;
        } else if (e.tail == id_of(s.x) && e.head == id_of(s.y)) {
            e.w = s.alpha3t;
        } else if (e.tail == id_of(s.y) && e.head == id_of(s.sink)) {
            std::swap(e.tail, e.head); // now sink -> y
            e.w = s.alpha1t;
        } else if (e.tail == id_of(s.src) && e.head == id_of(s.sink)) {
            e.w = s.alpha2t;
        }
    }
    MoveRecord rec;
    rec.kind = "M1";
    rec.result = r.build();
    std::ostringstream note;
    note << "alpha~ = (" << s.alpha1t.str() << ", " << s.alpha2t.str() << ", " << s.alpha3t.str()
         << ", " << s.alpha4t.str() << ")";
    rec.notes.push_back(note.str());
    return rec;
}

// --- M2 ---------------------------------------------------------------------------

MoveRecord flip_move(const Graph& g0, const std::string& v1_id, const std::string& v2_id) {
    // v2 -> v1 on the shared edge; both the same color, trivalent.
    int v1 = require_vertex(g0, v1_id), v2 = require_vertex(g0, v2_id);
    if (g0.vertex(v1).color != g0.vertex(v2).color)
        throw std::invalid_argument("flip move: vertices must share a color");
    if (g0.degree(v1) != 3 || g0.degree(v2) != 3)
        throw std::invalid_argument("flip move: vertices must be trivalent");
    int e0 = edge_between(g0, v1, v2);
    if (e0 < 0) throw std::invalid_argument("flip move: vertices are not adjacent");

    // Gauge the shared edge to unit weight (weight gauge at its head).
    Graph g = g0;
    MoveRecord rec;
    rec.kind = "M2";
    if (!g0.edge(e0).weight.is_one()) {
        Rat t = g0.edge(e0).weight.inv();
        int head = g0.edge(e0).head;
        Rebuild rw = Rebuild::of(g0);
        for (auto& e : rw.edges) {
            if (e.head == g0.vertex(head).id) e.w *= t;
            if (e.tail == g0.vertex(head).id) e.w = e.w / t;
        }
        g = rw.build();
        rec.notes.push_back("pre-gauged shared edge to unit weight (t=" + t.str() + ")");
        v1 = require_vertex(g, v1_id);
        v2 = require_vertex(g, v2_id);
        e0 = edge_between(g, v1, v2);
    }
    // Orient so e0 = (v2 -> v1).
    if (g.edge(e0).tail == v1) std::swap(v1, v2);

    bool white = g.vertex(v1).color == Color::White;
    // v1 owns {a1, a2}; v2 owns {a3, a4} besides e0 (directions per color).
    std::vector<int> at1, at2;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == e0) continue;
        if (g.edge(e).tail == v1 || g.edge(e).head == v1) at1.push_back(e);
        if (g.edge(e).tail == v2 || g.edge(e).head == v2) at2.push_back(e);
    }
    if (at1.size() != 2 || at2.size() != 2) throw std::logic_error("flip move: bad incidences");

    // Planar regrouping: cyclic order around the contracted vertex is
    // (a1, a2, a3, a4) with {a1,a2} at v1 and {a3,a4} at v2, where a2 and a3 are
    // the edges adjacent to e0 in the two rotations. New grouping {a2,a3}|{a4,a1}.
    auto neighbors_in_rotation = [&](int v, int other_end) {
        const auto& rot = g.rotation(v);
        int pos = -1;
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == e0) pos = static_cast<int>(i);
        // successor and predecessor of e0 in ccw order at v
        return std::pair<int, int>{rot[(pos + 1) % 3], rot[(pos + 2) % 3]};
    };
    auto [succ1, pred1] = neighbors_in_rotation(v1, v2);
    auto [succ2, pred2] = neighbors_in_rotation(v2, v1);
    // Around the merged vertex counterclockwise: succ1, pred1 (at v1), then
    // succ2, pred2 (at v2).
    int a1 = succ1, a2 = pred1, a3 = succ2, a4 = pred2;

    // Rebuild: new vertices keep the ids with swapped ownership:
    // v1' owns {a2, a3} at v2's position, v2' owns {a4, a1} at v1's position.
    Rebuild r = Rebuild::of(g);
    const std::string id1 = g.vertex(v1).id, id2 = g.vertex(v2).id;
    auto reattach = [&](int edge, const std::string& from_id, const std::string& to_id) {
        int t = g.edge(edge).tail, h = g.edge(edge).head;
        std::string tid = g.vertex(t).id, hid = g.vertex(h).id;
        auto& re = r.edges[edge];
        if (tid == from_id) re.tail = to_id;
        if (hid == from_id) re.head = to_id;
    };
    // a2 stays at v1 -> moves to the vertex named id1 which now sits at v2's
    // position... simpler: swap positions, keep ids bound to edge groups.
    // New vertex A (id1) at v2's position owns {a2, a3}; new vertex B (id2) at
    // v1's position owns {a4, a1}; edge e0 runs between them.
    for (auto& v : r.internals) {
        if (v.id == id1) v.pos = g.vertex(v2).pos;
        if (v.id == id2) v.pos = g.vertex(v1).pos;
    }
    reattach(a1, id1, id2);
    reattach(a2, id1, id1); // no-op, stays
    reattach(a3, id2, id1);
    reattach(a4, id2, id2); // no-op
    // Direct e0 for perfectness: for whites, the vertex holding the external
    // incoming edge sends e0 out.
    {
        auto& re = r.edges[e0];
        auto incoming_at = [&](int a, const std::string& vid) {
            // edge a points into the group vertex?
            const auto& e = r.edges[a];
            return e.head == vid;
        };
        re.w = Rat(1);
        if (white) {
            bool a_in = incoming_at(a2, id1) || incoming_at(a3, id1);
            re.tail = a_in ? id1 : id2;
            re.head = a_in ? id2 : id1;
        } else {
            bool a_out = !incoming_at(a2, id1) || !incoming_at(a3, id1);
            re.tail = a_out ? id2 : id1;
            re.head = a_out ? id1 : id2;
        }
    }
    rec.result = r.build();
    rec.notes.push_back("flip at (" + v1_id + ", " + v2_id + ")");
    return rec;
}

// --- M3 ---------------------------------------------------------------------------

MoveRecord middle_vertex_insert(const Graph& g, int edge, Color color, const Rat& t,
                                const std::string& new_id) {
    if (edge < 0 || edge >= g.edge_count()) throw std::invalid_argument("bad edge");
    Rebuild r = Rebuild::of(g);
    const Edge& e = g.edge(edge);
    Vec2 a = g.vertex(e.tail).pos, b = g.vertex(e.head).pos;
    Vec2 mid(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t);
    r.internals.push_back({new_id, color, mid});
    Rebuild::E first{g.vertex(e.tail).id, new_id, e.weight};
    Rebuild::E second{new_id, g.vertex(e.head).id, Rat(1)};
    r.edges[edge] = first;
    r.edges.push_back(second);
    MoveRecord rec;
    rec.kind = "M3";
    rec.result = r.build();
    rec.notes.push_back("inserted bivalent " + new_id);
    return rec;
}

MoveRecord middle_vertex_remove(const Graph& g, const std::string& vertex_id) {
    int v = require_vertex(g, vertex_id);
    if (g.is_boundary(v) || g.degree(v) != 2)
        throw std::invalid_argument("middle vertex removal needs an internal bivalent vertex");
    auto io = g.bivalent_in_out(v);
    Rebuild r = Rebuild::of(g);
    std::string tail = g.vertex(g.edge(io[0]).tail).id;
    std::string head = g.vertex(g.edge(io[1]).head).id;
    Rat w = g.edge(io[0]).weight * g.edge(io[1]).weight;
    std::set<int> drop{io[0], io[1]};
    Rebuild r2;
    r2.boundary_xs = r.boundary_xs;
    for (auto& vv : r.internals)
        if (vv.id != vertex_id) r2.internals.push_back(vv);
    for (int e = 0; e < static_cast<int>(r.edges.size()); ++e)
        if (!drop.count(e)) r2.edges.push_back(r.edges[e]);
    r2.edges.push_back({tail, head, w});
    MoveRecord rec;
    rec.kind = "M3";
    rec.result = r2.build();
    rec.notes.push_back("removed bivalent " + vertex_id);
    return rec;
}

// --- R1 and its inverse -------------------------------------------------------------

MoveRecord parallel_reduction(const Graph& g, const std::string& white_id,
                              const std::string& black_id) {
    int w = require_vertex(g, white_id), b = require_vertex(g, black_id);
    if (g.vertex(w).color != Color::White || g.vertex(b).color != Color::Black)
        throw std::invalid_argument("parallel reduction: need a white and a black vertex");
    // Routes from w to b: direct edge and/or a route through one bivalent bend.
    std::vector<std::pair<Rat, std::vector<std::string>>> routes; // weight, interior ids
    int direct = directed_edge(g, w, b);
    if (direct >= 0) routes.push_back({g.edge(direct).weight, {}});
    for (int e : g.out_edges(w)) {
        int m = g.edge(e).head;
        if (g.is_boundary(m) || m == b || g.degree(m) != 2) continue;
        auto io = g.bivalent_in_out(m);
        if (g.edge(io[1]).head == b)
            routes.push_back({g.edge(e).weight * g.edge(io[1]).weight, {g.vertex(m).id}});
    }
    if (routes.size() != 2)
        throw std::invalid_argument("parallel reduction: site is not a parallel pair");
    // External edges: the one into w and the one out of b.
    int e_in = -1, e_out = -1;
    for (int e : g.in_edges(w)) e_in = e;
    for (int e : g.out_edges(b)) e_out = e;
    if (e_in < 0 || e_out < 0) throw std::invalid_argument("parallel reduction: missing externals");
    Rat w_new = g.edge(e_in).weight * (routes[0].first + routes[1].first) * g.edge(e_out).weight;

    Rebuild r = Rebuild::of(g);
    std::set<std::string> drop{white_id, black_id};
    for (auto& rt : routes)
        for (auto& id : rt.second) drop.insert(id);
    Rebuild r2;
    r2.boundary_xs = r.boundary_xs;
    for (auto& vv : r.internals)
        if (!drop.count(vv.id)) r2.internals.push_back(vv);
    for (auto& e : r.edges)
        if (!drop.count(e.tail) && !drop.count(e.head)) r2.edges.push_back(e);
    r2.edges.push_back(
        {g.vertex(g.edge(e_in).tail).id, g.vertex(g.edge(e_out).head).id, w_new});
    MoveRecord rec;
    rec.kind = "R1";
    rec.result = r2.build();
    std::ostringstream note;
    note << "removed pocket (" << white_id << ", " << black_id << "), gamma_r = "
         << (routes[1].first / (routes[0].first + routes[1].first)).str();
    rec.notes.push_back(note.str());
    return rec;
}

MoveRecord parallel_unreduction(const Graph& g, int edge, const Rat& p, const Rat& q) {
    if (p.sign() <= 0 || q.sign() <= 0)
        throw std::invalid_argument("parallel unreduction: p, q must be positive");
    const Edge& e = g.edge(edge);
    Vec2 a = g.vertex(e.tail).pos, b = g.vertex(e.head).pos;
    auto lerp = [&](const Rat& t) {
        return Vec2(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t);
    };
    // B_r at 1/3, W_r at 2/3 along the edge; the return route bends through a
    // bivalent black M displaced off the edge.
    Vec2 pb = lerp(Rat(1, 3)), pw = lerp(Rat(2, 3));
    Vec2 dirn(b.y - a.y, a.x - b.x); // left normal
    Vec2 mid = lerp(Rat(1, 2));
    Vec2 pm(mid.x + dirn.x * Rat(1, 8), mid.y + dirn.y * Rat(1, 8));
    Rebuild r = Rebuild::of(g);
    std::string tb = g.vertex(e.tail).id, hb = g.vertex(e.head).id;
    std::string br = "unr1_B", wr = "unr1_W", m = "unr1_M";
    int suffix = 0;
    while (g.find_vertex(br) || g.find_vertex(wr) || g.find_vertex(m)) {
        ++suffix;
        br = "unr1_B" + std::to_string(suffix);
        wr = "unr1_W" + std::to_string(suffix);
        m = "unr1_M" + std::to_string(suffix);
    }
    r.internals.push_back({br, Color::Black, pb});
    r.internals.push_back({wr, Color::White, pw});
    r.internals.push_back({m, Color::Black, pm});
    // tail -> B_r keeps the old weight; the exit carries (1+pq)/p.
    r.edges[edge] = {tb, br, e.weight};
    r.edges.push_back({br, wr, p});
    r.edges.push_back({wr, m, q});
    r.edges.push_back({m, br, Rat(1)});
    r.edges.push_back({wr, hb, (Rat(1) + p * q) / p});
    MoveRecord rec;
    rec.kind = "unR1";
    rec.result = r.build();
    rec.notes.push_back("inserted cyclic pocket with (p, q) = (" + p.str() + ", " + q.str() + ")");
    return rec;
}

// --- R2 / R3 ------------------------------------------------------------------------

MoveRecord dipole_reduction(const Graph& g, const std::string& u_id, const std::string& v_id) {
    int u = require_vertex(g, u_id), v = require_vertex(g, v_id);
    if (g.degree(u) != 1 || g.degree(v) != 1 || edge_between(g, u, v) < 0)
        throw std::invalid_argument("dipole reduction: need an isolated two-vertex component");
    Rebuild r = Rebuild::of(g);
    r.drop_edges_at(u_id);
    r.drop_vertex(u_id);
    r.drop_vertex(v_id);
    MoveRecord rec;
    rec.kind = "R2";
    rec.result = r.build();
    rec.notes.push_back("removed dipole (" + u_id + ", " + v_id + ")");
    return rec;
}

MoveRecord leaf_reduction(const Graph& g, const std::string& leaf_id) {
    int u = require_vertex(g, leaf_id);
    if (g.degree(u) != 1) throw std::invalid_argument("leaf reduction: vertex is not univalent");
    int e1 = g.out_edges(u).empty() ? g.in_edges(u)[0] : g.out_edges(u)[0];
    int v1 = g.edge(e1).tail == u ? g.edge(e1).head : g.edge(e1).tail;
    if (g.degree(v1) != 3) throw std::invalid_argument("leaf reduction: support is not trivalent");
    Rat w1 = g.edge(e1).weight;
    Color cu = g.vertex(u).color;

    Rebuild r = Rebuild::of(g);
    Rebuild r2;
    r2.boundary_xs = r.boundary_xs;
    const std::string v1_id = g.vertex(v1).id;
    for (auto& vv : r.internals)
        if (vv.id != leaf_id && vv.id != v1_id) r2.internals.push_back(vv);
    int fresh = 0;
    for (int e = 0; e < static_cast<int>(r.edges.size()); ++e) {
        if (e == e1) continue;
        auto edited = r.edges[e];
        bool at_v1 = edited.tail == v1_id || edited.head == v1_id;
        if (!at_v1) {
            r2.edges.push_back(edited);
            continue;
        }
        // New endpoint colored like the leaf, placed a step along the edge.
        std::string nid = leaf_id + "_s" + std::to_string(++fresh);
        int t = g.edge(e).tail, h = g.edge(e).head;
        Vec2 pa = g.vertex(t).pos, pb2 = g.vertex(h).pos;
        bool v1_is_tail = edited.tail == v1_id;
        Vec2 far = v1_is_tail ? pb2 : pa;
        Vec2 near = v1_is_tail ? pa : pb2;
        Vec2 np(near.x + (far.x - near.x) * Rat(1, 8), near.y + (far.y - near.y) * Rat(1, 8));
        r2.internals.push_back({nid, cu, np});
        if (v1_is_tail) edited.tail = nid;
        else edited.head = nid;
        edited.w *= w1; // E~ = w1 E
        r2.edges.push_back(edited);
    }
    MoveRecord rec;
    rec.kind = "R3";
    rec.result = r2.build();
    rec.notes.push_back("removed leaf " + leaf_id + " at " + v1_id);
    return rec;
}

// --- amalgamation ---------------------------------------------------------------------

MoveRecord direct_sum(const Graph& gA, const Graph& gB, bool nested, int gap_j) {
    MoveRecord rec;
    rec.kind = "sum";
    auto shifted = [](const Graph& g, const Rat& scale, const Rat& xoff, const Rat& yscale,
                      const std::string& prefix, Rebuild& out, int label_off) {
        for (int v : g.internal_vertices()) {
            Vec2 p = g.vertex(v).pos;
            out.internals.push_back(
                {prefix + g.vertex(v).id, g.vertex(v).color,
                 Vec2(p.x * scale + xoff, p.y * yscale)});
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            auto name = [&](int v) {
                if (!g.is_boundary(v)) return prefix + g.vertex(v).id;
                return std::string("b") + std::to_string(g.boundary_label(v) + label_off);
            };
            out.edges.push_back({name(g.edge(e).tail), name(g.edge(e).head), g.edge(e).weight});
        }
    };

    Rebuild r;
    const int nA = gA.n_boundary(), nB = gB.n_boundary();
    if (!nested) {
        // Labels of gA first (gB sits to the left / higher labels).
        for (int j = 1; j <= nA; ++j) r.boundary_xs.push_back(Rat(nA + nB + 1 - j));
        for (int j = 1; j <= nB; ++j) r.boundary_xs.push_back(Rat(nB + 1 - j));
        shifted(gA, Rat(1), Rat(nB), Rat(1), "A_", r, 0);
        shifted(gB, Rat(1), Rat(0), Rat(1), "B_", r, nA);
    } else {
        // gB inside gA's face between b_gap and b_{gap+1}.
        if (gap_j < 1 || gap_j >= nA)
            throw std::invalid_argument("direct_sum: nested gap out of range");
        // Host positions: spread so the gap (x in (x_{gap+1}, x_gap)) hosts gB.
        std::vector<Rat> xs;
        for (int j = 1; j <= nA; ++j) xs.push_back(Rat((nA + 1 - j) * (nB + 1)));
        Rat gap_lo = xs[gap_j] /* x_{gap+1} */, gap_hi = xs[gap_j - 1];
        std::vector<Rat> all;
        for (int j = 1; j <= gap_j; ++j) all.push_back(xs[j - 1]);
        // gB boundary inside the gap.
        Rat step = (gap_hi - gap_lo) / Rat(nB + 1);
        for (int j = 1; j <= nB; ++j) all.push_back(gap_hi - step * Rat(j));
        for (int j = gap_j + 1; j <= nA; ++j) all.push_back(xs[j - 1]);
        r.boundary_xs = all;
        // Host stretched horizontally; inner graph compressed vertically.
        shifted(gA, Rat(nB + 1), Rat(0), Rat(nB + 1), "A_", r, 0);
        // temporary: edges for gA boundary labels > gap need a shift by nB
        // (we passed label_off = 0 above; fix below).
        for (auto& e : r.edges) {
            auto fix = [&](std::string& id) {
                if (id.rfind("b", 0) == 0 && id.find('_') == std::string::npos) {
                    int lbl = std::stoi(id.substr(1));
                    if (lbl > gap_j) id = "b" + std::to_string(lbl + nB);
                }
            };
            fix(e.tail);
            fix(e.head);
        }
        size_t host_edges = r.edges.size();
        Rat in_scale = (gap_hi - gap_lo) / Rat(nB + 2);
        shifted(gB, in_scale, gap_lo + in_scale, Rat(1, 2), "B_", r, gap_j);
        (void)host_edges;
    }
    rec.result = r.build();
    rec.notes.push_back(nested ? "nested direct sum" : "adjacent direct sum");
    return rec;
}

MoveRecord defrost(const Graph& g, int j) {
    if (j < 1 || j + 1 > g.n_boundary()) throw std::invalid_argument("defrost: bad pair index");
    int bj = g.boundary_vertex(j), bj1 = g.boundary_vertex(j + 1);
    bool j_src = g.is_source(bj), j1_src = g.is_source(bj1);
    if (j_src == j1_src)
        throw std::invalid_argument("defrost: pair must be one source and one sink");
    int src = j_src ? bj : bj1, snk = j_src ? bj1 : bj;
    int e_src = g.out_edges(src)[0], e_snk = g.in_edges(snk)[0];
    int vs = g.edge(e_src).head;  // bivalent white fed by the source
    int vt = g.edge(e_snk).tail;  // bivalent white feeding the sink

    Rebuild r = Rebuild::of(g);
    Rebuild r2;
    for (int l = 1; l <= g.n_boundary(); ++l)
        if (l != j && l != j + 1) r2.boundary_xs.push_back(g.vertex(g.boundary_vertex(l)).pos.x);
    r2.internals = r.internals;
    for (int e = 0; e < static_cast<int>(r.edges.size()); ++e) {
        if (e == e_src || e == e_snk) continue;
        auto edited = r.edges[e];
        auto fix = [&](std::string& id) {
            if (id.rfind("b", 0) == 0 && id.find('_') == std::string::npos) {
                int lbl = std::stoi(id.substr(1));
                if (lbl > j + 1) id = "b" + std::to_string(lbl - 2);
            }
        };
        fix(edited.tail);
        fix(edited.head);
        r2.edges.push_back(edited);
    }
    // Glue: flow that entered the sink now feeds the old source edge.
    r2.edges.push_back({g.vertex(vt).id, g.vertex(vs).id,
                        g.edge(e_src).weight * g.edge(e_snk).weight});
    MoveRecord rec;
    rec.kind = "defrost";
    rec.result = r2.build();
    rec.notes.push_back("defrosted (b" + std::to_string(j) + ", b" + std::to_string(j + 1) + ")");
    return rec;
}

// --- site scan ------------------------------------------------------------------------

Sites find_sites(const Graph& g) {
    Sites s;
    auto id = [&](int v) { return g.vertex(v).id; };
    // Squares: alternating trivalent 4-cycles with source/sink corners.
    std::vector<int> tri;
    for (int v : g.internal_vertices())
        if (g.degree(v) == 3) tri.push_back(v);
    for (int a : tri) {
        if (g.vertex(a).color != Color::White) continue;
        for (int x : tri) {
            if (g.vertex(x).color != Color::Black || directed_edge(g, a, x) < 0) continue;
            for (int y : tri) {
                if (g.vertex(y).color != Color::White || y == a || directed_edge(g, x, y) < 0)
                    continue;
                for (int snk : tri) {
                    if (g.vertex(snk).color != Color::Black || snk == x) continue;
                    if (directed_edge(g, y, snk) < 0 || directed_edge(g, a, snk) < 0) continue;
                    s.squares.push_back({id(a), id(x), id(y), id(snk)});
                }
            }
        }
    }
    for (int v : g.internal_vertices()) {
        if (g.degree(v) == 2 && !g.is_boundary(v)) {
            bool at_boundary = false;
            for (int e : g.rotation(v)) {
                if (g.is_boundary(g.edge(e).tail) || g.is_boundary(g.edge(e).head))
                    at_boundary = true;
            }
            if (!at_boundary) s.bivalent.push_back(id(v));
        }
        if (g.degree(v) == 1) s.leaves.push_back(id(v));
    }
    for (int a : tri)
        for (int b : tri) {
            if (a >= b || g.vertex(a).color != g.vertex(b).color) continue;
            if (edge_between(g, a, b) >= 0) s.flips.push_back({id(a), id(b)});
        }
    // Parallel pairs: white feeding black via direct edge + one-bend route.
    for (int w : tri) {
        if (g.vertex(w).color != Color::White) continue;
        for (int b : tri) {
            if (g.vertex(b).color != Color::Black) continue;
            int routes = directed_edge(g, w, b) >= 0 ? 1 : 0;
            for (int e : g.out_edges(w)) {
                int m = g.edge(e).head;
                if (!g.is_boundary(m) && m != b && g.degree(m) == 2) {
                    auto io = g.bivalent_in_out(m);
                    if (g.edge(io[1]).head == b) ++routes;
                }
            }
            if (routes >= 2) s.parallel_pairs.push_back({id(w), id(b)});
        }
    }
    for (int j = 1; j + 1 <= g.n_boundary(); ++j) {
        bool a = g.is_source(g.boundary_vertex(j)), b = g.is_source(g.boundary_vertex(j + 1));
        if (a != b) s.defrost_pairs.push_back(j);
    }
    return s;
}

} // namespace plabic
