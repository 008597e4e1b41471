// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plabic {

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& i : issues) os << i.clause << ": " << i.detail << "\n";
    return os.str();
}

void Graph::set_boundary(int n) {
    std::vector<Rat> xs;
    for (int j = 1; j <= n; ++j) xs.push_back(Rat(n + 1 - j));
    set_boundary_xs(xs);
}

void Graph::set_boundary_xs(const std::vector<Rat>& xs) {
    if (!verts_.empty()) throw std::logic_error("set_boundary must be called first");
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] > xs[i + 1]))
            throw std::invalid_argument("boundary positions must strictly decrease (b_1 rightmost)");
    n_boundary_ = static_cast<int>(xs.size());
    for (int j = 1; j <= n_boundary_; ++j) {
        Vertex v;
        v.id = "b" + std::to_string(j);
        v.boundary = true;
        v.pos = Vec2(xs[j - 1], Rat(0));
        verts_.push_back(std::move(v));
    }
}

int Graph::add_internal(const std::string& id, Color color, Vec2 pos) {
    Vertex v;
    v.id = id;
    v.color = color;
    v.pos = std::move(pos);
    verts_.push_back(std::move(v));
    invalidate_caches();
    return static_cast<int>(verts_.size()) - 1;
}

std::optional<int> Graph::find_vertex(const std::string& id) const {
    for (size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].id == id) return static_cast<int>(i);
    return std::nullopt;
}

int Graph::add_edge(const std::string& tail_id, const std::string& head_id, Rat weight) {
    auto t = find_vertex(tail_id), h = find_vertex(head_id);
    if (!t || !h) throw std::invalid_argument("add_edge: unknown vertex id");
    return add_edge(*t, *h, std::move(weight));
}

int Graph::add_edge(int tail, int head, Rat weight) {
    Edge e;
    e.tail = tail;
    e.head = head;
    e.weight = std::move(weight);
    edges_.push_back(std::move(e));
    invalidate_caches();
    return static_cast<int>(edges_.size()) - 1;
}

void Graph::invalidate_caches() { adj_built_ = false; }

void Graph::build_adjacency() const {
    if (adj_built_) return;
    out_.assign(verts_.size(), {});
    in_.assign(verts_.size(), {});
    rot_.assign(verts_.size(), {});
    for (int e = 0; e < edge_count(); ++e) {
        out_[edges_[e].tail].push_back(e);
        in_[edges_[e].head].push_back(e);
        rot_[edges_[e].tail].push_back(e);
        rot_[edges_[e].head].push_back(e);
    }
    for (size_t v = 0; v < verts_.size(); ++v) {
        auto dir_from = [&](int e) {
            Vec2 d = static_cast<int>(v) == edges_[e].tail ? edge_dir(e)
                                                           : verts_[edges_[e].tail].pos - verts_[v].pos;
            // Boundary-to-boundary edges run along the axis; nudge them into the
            // upper half plane so they sort between the two boundary arcs.
            if (verts_[v].boundary && d.y.is_zero()) d = Vec2(d.x * Rat(1000), Rat(1));
            return d;
        };
        std::stable_sort(rot_[v].begin(), rot_[v].end(), [&](int a, int b) {
            return angle_less(dir_from(a), dir_from(b));
        });
    }
    adj_built_ = true;
}

const std::vector<int>& Graph::out_edges(int v) const {
    build_adjacency();
    return out_[v];
}
const std::vector<int>& Graph::in_edges(int v) const {
    build_adjacency();
    return in_[v];
}
const std::vector<int>& Graph::rotation(int v) const {
    build_adjacency();
    return rot_[v];
}
int Graph::degree(int v) const {
    build_adjacency();
    return static_cast<int>(out_[v].size() + in_[v].size());
}

std::array<int, 3> Graph::trivalent_labels(int v) const {
    const auto& rot = rotation(v);
    if (rot.size() != 3) throw std::logic_error("trivalent_labels: vertex is not trivalent");
    auto next = [&](int i) { return (i + 1) % 3; };
    int anchor = -1;
    if (verts_[v].color == Color::White) {
        for (int i = 0; i < 3; ++i)
            if (edges_[rot[i]].head == v) anchor = i; // e3 = unique incoming
        if (anchor < 0) throw std::logic_error("white vertex without incoming edge");
        return {rot[next(anchor)], rot[next(next(anchor))], rot[anchor]};
    }
    for (int i = 0; i < 3; ++i)
        if (edges_[rot[i]].tail == v) anchor = i; // e1 = unique outgoing
    if (anchor < 0) throw std::logic_error("black vertex without outgoing edge");
    return {rot[anchor], rot[next(anchor)], rot[next(next(anchor))]};
}

std::array<int, 2> Graph::bivalent_in_out(int v) const {
    build_adjacency();
    if (in_[v].size() != 1 || out_[v].size() != 1)
        throw std::logic_error("bivalent_in_out: not a 1-in 1-out vertex");
    return {in_[v][0], out_[v][0]};
}

bool Graph::is_source(int bj) const {
    build_adjacency();
    return !out_[bj].empty();
}

std::vector<int> Graph::source_labels() const {
    std::vector<int> r;
    for (int j = 1; j <= n_boundary_; ++j)
        if (is_source(boundary_vertex(j))) r.push_back(j);
    return r;
}

Graph Graph::reversed(const std::vector<int>& edges_to_flip) const {
    Graph g = *this;
    for (int e : edges_to_flip) {
        std::swap(g.edges_[e].tail, g.edges_[e].head);
        g.edges_[e].weight = g.edges_[e].weight.inv();
    }
    g.invalidate_caches();
    return g;
}

std::vector<int> Graph::internal_vertices() const {
    std::vector<int> r;
    for (int v = 0; v < vertex_count(); ++v)
        if (!verts_[v].boundary) r.push_back(v);
    return r;
}

int Graph::count_trivalent(Color c) const {
    int t = 0;
    for (int v : internal_vertices())
        if (degree(v) == 3 && verts_[v].color == c) ++t;
    return t;
}

bool Graph::orientation_is_perfect() const {
    for (int v : internal_vertices()) {
        int di = static_cast<int>(in_edges(v).size());
        int dout = static_cast<int>(out_edges(v).size());
        if (di + dout == 2) {
            if (di != 1) return false;
        } else if (di != 1 && dout != 1) {
            return false;
        }
    }
    return true;
}

bool Graph::edge_on_boundary_path(int e) const {
    build_adjacency();
    // Backward reachability from tail(e) to a boundary source.
    auto reach = [&](int start, bool backward) {
        std::vector<bool> seen(vertex_count(), false);
        std::queue<int> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (verts_[v].boundary) return true;
            for (int f : (backward ? in_[v] : out_[v])) {
                int w = backward ? edges_[f].tail : edges_[f].head;
                if (!seen[w]) { seen[w] = true; q.push(w); }
            }
        }
        return false;
    };
    return reach(edges_[e].tail, true) && reach(edges_[e].head, false);
}

bool Graph::has_directed_cycle() const {
    build_adjacency();
    std::vector<int> state(vertex_count(), 0);
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int e : out_[v]) {
            int w = edges_[e].head;
            if (state[w] == 1) return true;
            if (state[w] == 0 && dfs(w)) return true;
        }
        state[v] = 2;
        return false;
    };
    for (int v = 0; v < vertex_count(); ++v)
        if (state[v] == 0 && dfs(v)) return true;
    return false;
}

// --- faces -------------------------------------------------------------------

namespace {

// Darts of the auxiliary disk complex: graph edges plus boundary arcs.
struct Dart {
    int kind;   // 0 = graph edge, 1 = diameter arc (b_j,b_{j+1}), 2 = closing arc (b_n,b_1)
    int index;  // edge index for kind 0, j (1-based) for kind 1
    int from, to;
};

} // namespace

Graph::FaceSet Graph::enumerate_faces() const {
    build_adjacency();
    const int n = n_boundary_;
    std::vector<Dart> darts;
    // Graph edge darts: 2*e (tail->head), 2*e+1 (head->tail).
    for (int e = 0; e < edge_count(); ++e) {
        darts.push_back({0, e, edges_[e].tail, edges_[e].head});
        darts.push_back({0, e, edges_[e].head, edges_[e].tail});
    }
    int arc_base = static_cast<int>(darts.size());
    for (int j = 1; j + 1 <= n; ++j) { // diameter arc between b_j and b_{j+1}
        darts.push_back({1, j, boundary_vertex(j), boundary_vertex(j + 1)});
        darts.push_back({1, j, boundary_vertex(j + 1), boundary_vertex(j)});
    }
    int big_base = -1;
    if (n >= 2) {
        big_base = static_cast<int>(darts.size());
        darts.push_back({2, 0, boundary_vertex(1), boundary_vertex(n)});
        darts.push_back({2, 0, boundary_vertex(n), boundary_vertex(1)});
    }
    auto rev = [&](int d) { return d ^ 1; };

    // Rotation (ccw) of darts leaving each vertex. Boundary arcs are pinned:
    // the arc toward the previous boundary vertex points right (angle 0), the
    // arc toward the next points left (angle pi); the closing arc is outermost,
    // just above angle 0 at b_1 and just below pi at b_n.
    std::vector<std::vector<int>> vrot(vertex_count());
    for (int d = 0; d < static_cast<int>(darts.size()); ++d) vrot[darts[d].from].push_back(d);
    auto sort_key = [&](int d) -> std::pair<int, Vec2> {
        // Classes: 0 = angle 0 (arc right / closing arc at b_1), 1 = graph edges,
        // 2 = angle pi (arc left / closing arc at b_n). Within class 1 sort by angle.
        const Dart& dt = darts[d];
        if (dt.kind == 1) {
            const Vec2& a = verts_[dt.from].pos;
            const Vec2& b = verts_[dt.to].pos;
            return {(b.x > a.x) ? 0 : 2, Vec2(Rat(0), Rat(0))};
        }
        if (dt.kind == 2) return {dt.from == boundary_vertex(1) ? 0 : 2, Vec2(Rat(0), Rat(0))};
        Vec2 dir = verts_[dt.to].pos - verts_[dt.from].pos;
        if (verts_[dt.from].boundary && dir.y.is_zero()) dir = Vec2(dir.x * Rat(1000), Rat(1));
        return {1, dir};
    };
    for (auto& lst : vrot) {
        std::stable_sort(lst.begin(), lst.end(), [&](int a, int b) {
            auto ka = sort_key(a), kb = sort_key(b);
            if (ka.first != kb.first) return ka.first < kb.first;
            if (ka.first != 1) {
                // Closing arc sorts before the diameter arc at b_1, after it at b_n.
                if (ka.first == 0) return darts[a].kind > darts[b].kind;
                return darts[a].kind < darts[b].kind;
            }
            return angle_less(ka.second, kb.second);
        });
    }
    std::vector<int> pos_in_rot(darts.size());
    for (auto& lst : vrot)
        for (size_t i = 0; i < lst.size(); ++i) pos_in_rot[lst[i]] = static_cast<int>(i);

    // next dart in the face walk (face on the left): predecessor of rev(d) in
    // the ccw rotation at its source vertex.
    auto next_dart = [&](int d) {
        int r = rev(d);
        const auto& lst = vrot[darts[r].from];
        int i = pos_in_rot[r];
        return lst[(i + lst.size() - 1) % lst.size()];
    };

    FaceSet fs;
    std::vector<int> face_of(darts.size(), -1);
    int outside_face = -1;
    for (int d0 = 0; d0 < static_cast<int>(darts.size()); ++d0) {
        if (face_of[d0] >= 0) continue;
        int fid = static_cast<int>(fs.faces.size());
        Face face;
        std::set<int> edge_set, bset;
        int d = d0;
        do {
            face_of[d] = fid;
            const Dart& dt = darts[d];
            if (dt.kind == 0) edge_set.insert(dt.index);
            if (dt.kind == 1) face.kappa_intervals.push_back(dt.index);
            if (dt.kind == 2) face.touches_closing_arc = true;
            if (verts_[dt.from].boundary) bset.insert(dt.from);
            if (verts_[dt.to].boundary) bset.insert(dt.to);
            int nd = next_dart(d);
            const Dart& ndt = darts[nd];
            if (!verts_[ndt.from].boundary && ndt.kind == 0 && darts[d].kind == 0) {
                face.corners.push_back({ndt.from, darts[d].index, ndt.index});
            } else if (!verts_[ndt.from].boundary) {
                // corner at internal vertex against an arc never happens
            }
            d = nd;
        } while (d != d0);
        face.edges.assign(edge_set.begin(), edge_set.end());
        face.boundary_vertices.assign(bset.begin(), bset.end());
        std::sort(face.kappa_intervals.begin(), face.kappa_intervals.end());
        fs.faces.push_back(std::move(face));
    }

    // Identify and drop the outside-of-disk face: the one containing the
    // diameter arc dart b_1 -> b_2 seen from below (or, with n < 2, nothing).
    if (n >= 2) outside_face = face_of[arc_base]; // dart (b_1 -> b_2)

    // Components isolated from the boundary do not split the region they sit
    // in: merge each floating wrap face (signed area <= 0 along its own walk)
    // into the principal face that geometrically contains the component.
    std::vector<int> comp(vertex_count());
    {
        for (int v = 0; v < vertex_count(); ++v) comp[v] = v;
        std::function<int(int)> find = [&](int v) {
            while (comp[v] != v) v = comp[v] = comp[comp[v]];
            return v;
        };
        auto unite = [&](int a, int b) { comp[find(a)] = find(b); };
        for (const auto& e : edges_) unite(e.tail, e.head);
        for (int j = 1; j < n; ++j) unite(boundary_vertex(j), boundary_vertex(j + 1));
        for (int v = 0; v < vertex_count(); ++v) comp[v] = find(v);
    }
    int principal = n >= 1 ? comp[boundary_vertex(1)] : (vertex_count() ? comp[0] : -1);
    std::vector<int> merged_into(fs.faces.size(), -1);
    {
        // Face -> component (faces are component-pure), plus signed area of the
        // edge-dart polyline.
        std::vector<int> face_comp(fs.faces.size(), principal);
        std::vector<Rat> area(fs.faces.size(), Rat(0));
        std::vector<Vec2> sample(fs.faces.size(), Vec2(Rat(0), Rat(0)));
        for (int d = 0; d < static_cast<int>(darts.size()); ++d) {
            const Dart& dt = darts[d];
            int f = face_of[d];
            if (dt.kind != 0) continue;
            face_comp[f] = comp[dt.from];
            area[f] += cross(verts_[dt.from].pos, verts_[dt.to].pos);
            sample[f] = verts_[dt.from].pos;
        }
        auto contains = [&](int f, const Vec2& p) {
            // Upward-ray crossing parity over the face's edge darts (each dart
            // contributes once; doubled traversals cancel).
            int par = 0;
            for (int d = 0; d < static_cast<int>(darts.size()); ++d) {
                if (face_of[d] != f || darts[d].kind != 0) continue;
                Vec2 a = verts_[darts[d].from].pos, b = verts_[darts[d].to].pos;
                bool left_a = a.x <= p.x, left_b = b.x <= p.x;
                if (left_a == left_b) continue;
                // y at the crossing of x = p.x
                Rat t = (p.x - a.x) / (b.x - a.x);
                Rat y = a.y + (b.y - a.y) * t;
                if (y > p.y) par ^= 1;
            }
            return par == 1;
        };
        for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
            if (f == outside_face || face_comp[f] == principal) continue;
            if (area[f].sign() > 0) continue; // genuine interior face of the piece
            int target = -1;
            for (int f2 = 0; f2 < static_cast<int>(fs.faces.size()); ++f2) {
                if (f2 == f || f2 == outside_face || face_comp[f2] != principal) continue;
                if (fs.faces[f2].touches_closing_arc) continue;
                if (contains(f2, sample[f])) { target = f2; break; }
            }
            if (target < 0) {
                for (int f2 = 0; f2 < static_cast<int>(fs.faces.size()); ++f2)
                    if (f2 != outside_face && face_comp[f2] == principal &&
                        fs.faces[f2].touches_closing_arc)
                        target = f2;
            }
            if (target >= 0) {
                merged_into[f] = target;
                auto& tf = fs.faces[target];
                auto& sf = fs.faces[f];
                tf.edges.insert(tf.edges.end(), sf.edges.begin(), sf.edges.end());
                tf.corners.insert(tf.corners.end(), sf.corners.begin(), sf.corners.end());
            }
        }
    }

    std::vector<Face> kept;
    int infinite = -1;
    for (int i = 0; i < static_cast<int>(fs.faces.size()); ++i) {
        if (i == outside_face || merged_into[i] >= 0) continue;
        Face f = fs.faces[i];
        // Degenerate bigon between a boundary-to-boundary edge and its arc.
        if (f.edges.size() == 1 && f.corners.empty() && !f.kappa_intervals.empty()) {
            const Edge& e = edges_[f.edges[0]];
            if (verts_[e.tail].boundary && verts_[e.head].boundary) continue;
        }
        if (f.touches_closing_arc) {
            f.kind = FaceKind::Infinite;
            infinite = static_cast<int>(kept.size());
        } else if (!f.boundary_vertices.empty()) {
            f.kind = FaceKind::FiniteBoundary;
        } else {
            f.kind = FaceKind::Internal;
        }
        kept.push_back(std::move(f));
    }
    fs.faces = std::move(kept);
    fs.infinite = infinite;
    fs.genus = static_cast<int>(fs.faces.size()) - 1;
    return fs;
}

// --- perfect orientations ------------------------------------------------------

std::vector<std::pair<Graph, std::vector<int>>> Graph::perfect_orientations(int cap) const {
    build_adjacency();
    const int m = edge_count();
    // dir[e] = 0 keeps the stored direction, 1 flips it.
    std::vector<int> dir(m, -1);
    std::vector<int> in_cnt(vertex_count(), 0), out_cnt(vertex_count(), 0), unassigned(vertex_count(), 0);
    for (int e = 0; e < m; ++e) {
        ++unassigned[edges_[e].tail];
        ++unassigned[edges_[e].head];
    }
    auto vertex_ok = [&](int v, bool final_check) {
        if (verts_[v].boundary) return true;
        int deg = degree(v);
        int di = in_cnt[v], dout = out_cnt[v], un = unassigned[v];
        if (deg == 2) {
            if (di > 1 || dout > 1) return false;
            if (final_check || un == 0) return di == 1 && dout == 1;
            return true;
        }
        if (deg == 3) {
            if (verts_[v].color == Color::White) {
                if (di > 1) return false;
                if (un == 0 && di != 1) return false;
                if (di + un < 1) return false;
            } else {
                if (dout > 1) return false;
                if (un == 0 && dout != 1) return false;
                if (dout + un < 1) return false;
            }
            return true;
        }
        return true; // relaxed graphs: no constraint
    };

    std::vector<std::pair<Graph, std::vector<int>>> result;
    std::function<void(int)> rec = [&](int e) {
        if (cap > 0 && static_cast<int>(result.size()) >= cap) return;
        if (e == m) {
            std::vector<int> flips;
            for (int i = 0; i < m; ++i)
                if (dir[i] == 1) flips.push_back(i);
            Graph g = reversed(flips);
            auto base = g.source_labels();
            result.emplace_back(std::move(g), std::move(base));
            return;
        }
        for (int choice = 0; choice < 2; ++choice) {
            int t = edges_[e].tail, h = edges_[e].head;
            if (choice == 1) std::swap(t, h);
            dir[e] = choice;
            ++out_cnt[t];
            ++in_cnt[h];
            --unassigned[t];
            --unassigned[h];
            if (vertex_ok(t, false) && vertex_ok(h, false)) rec(e + 1);
            ++unassigned[t];
            ++unassigned[h];
            --out_cnt[t];
            --in_cnt[h];
            dir[e] = -1;
        }
    };
    rec(0);
    return result;
}

// --- validation ----------------------------------------------------------------

ValidationReport Graph::validate() const {
    build_adjacency();
    ValidationReport rep;
    auto add = [&](const std::string& clause, const std::string& detail) {
        rep.issues.push_back({clause, detail});
    };

    if (n_boundary_ < 1) add("boundary", "no boundary vertices");
    for (int e = 0; e < edge_count(); ++e)
        if (edge(e).weight.sign() <= 0)
            add("positive-weights", "edge " + std::to_string(e) + " has non-positive weight");

    // Degrees / perfectness / colors.
    for (int j = 1; j <= n_boundary_; ++j) {
        int b = boundary_vertex(j);
        if (degree(b) != 1) {
            add("boundary-degree", verts_[b].id + " has degree " + std::to_string(degree(b)));
            continue;
        }
        int e = out_[b].empty() ? in_[b][0] : out_[b][0];
        int other = edges_[e].tail == b ? edges_[e].head : edges_[e].tail;
        if (verts_[other].boundary || degree(other) != 2 || verts_[other].color != Color::White)
            add("boundary-attachment",
                verts_[b].id + " is not joined to an internal bivalent white vertex");
    }
    for (int v : internal_vertices()) {
        int deg = degree(v);
        if (deg != 2 && deg != 3) {
            add("valence", verts_[v].id + " has degree " + std::to_string(deg));
            continue;
        }
        int di = static_cast<int>(in_[v].size()), dout = static_cast<int>(out_[v].size());
        if (di != 1 && dout != 1)
            add("perfectness", verts_[v].id + " has " + std::to_string(di) + " in / " +
                                   std::to_string(dout) + " out");
        if (deg == 3) {
            if (verts_[v].color == Color::White && di != 1)
                add("white-vertex in-degree", verts_[v].id + " has in-degree " + std::to_string(di));
            if (verts_[v].color == Color::Black && dout != 1)
                add("black-vertex out-degree",
                    verts_[v].id + " has out-degree " + std::to_string(dout));
        }
        if (verts_[v].pos.y.sign() <= 0)
            add("planarity", verts_[v].id + " is not strictly inside the disk");
    }

    // Connectivity to the boundary (undirected).
    {
        std::vector<bool> seen(vertex_count(), false);
        std::queue<int> q;
        for (int j = 1; j <= n_boundary_; ++j) {
            q.push(boundary_vertex(j));
            seen[boundary_vertex(j)] = true;
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : rot_[v]) {
                int w = edges_[e].tail == v ? edges_[e].head : edges_[e].tail;
                if (!seen[w]) { seen[w] = true; q.push(w); }
            }
        }
        for (int v : internal_vertices())
            if (!seen[v]) add("connectivity", verts_[v].id + " is isolated from the boundary");
    }

    // Planarity: pairwise crossings and vertices in edge interiors.
    for (int e = 0; e < edge_count(); ++e) {
        for (int f = e + 1; f < edge_count(); ++f) {
            const Edge &a = edges_[e], &b = edges_[f];
            if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head)
                continue;
            if (segments_cross(verts_[a.tail].pos, verts_[a.head].pos, verts_[b.tail].pos,
                               verts_[b.head].pos))
                add("planarity", "edges " + std::to_string(e) + " and " + std::to_string(f) + " cross");
        }
        for (int v = 0; v < vertex_count(); ++v) {
            if (v == edges_[e].tail || v == edges_[e].head) continue;
            if (point_on_segment(verts_[v].pos, verts_[edges_[e].tail].pos, verts_[edges_[e].head].pos))
                add("planarity", verts_[v].id + " lies on edge " + std::to_string(e));
        }
    }

    // Embedding consistency: distinct angles at every vertex.
    for (int v = 0; v < vertex_count(); ++v) {
        const auto& rot = rot_[v];
        for (size_t i = 0; i + 1 < rot.size(); ++i) {
            Vec2 a = edges_[rot[i]].tail == v ? edge_dir(rot[i])
                                              : verts_[edges_[rot[i]].tail].pos - verts_[v].pos;
            Vec2 b = edges_[rot[i + 1]].tail == v ? edge_dir(rot[i + 1])
                                                  : verts_[edges_[rot[i + 1]].tail].pos - verts_[v].pos;
            if (cross(a, b).is_zero() && dot(a, b).sign() > 0)
                add("embedding", "coincident edge directions at " + verts_[v].id);
        }
    }

    // Condition (7): every internal edge on a directed boundary-to-boundary path.
    for (int e = 0; e < edge_count(); ++e) {
        if (!edge_on_boundary_path(e))
            add("condition (7)", "edge " + std::to_string(e) + " (" + verts_[edges_[e].tail].id +
                                     " -> " + verts_[edges_[e].head].id +
                                     ") lies on no boundary-to-boundary directed path");
    }

    // Internal faces must carry trivalent vertices of both colors.
    if (rep.ok()) {
        auto fs = enumerate_faces();
        for (const auto& f : fs.faces) {
            if (f.kind != FaceKind::Internal) continue;
            bool w = false, bl = false;
            for (const auto& c : f.corners) {
                if (degree(c.vertex) != 3) continue;
                (verts_[c.vertex].color == Color::White ? w : bl) = true;
            }
            if (!w || !bl) add("internal-face colors", "internal face lacks both trivalent colors");
        }
    }
    return rep;
}

} // namespace plabic
