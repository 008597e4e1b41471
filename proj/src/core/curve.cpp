// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/curve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace plabic {

namespace {

int edge_label_at(const Graph& g, int v, int e) {
    if (g.degree(v) == 3) {
        auto lab = g.trivalent_labels(v);
        for (int i = 0; i < 3; ++i)
            if (lab[i] == e) return i + 1;
        return 0;
    }
    // bivalent: outgoing edge marks zeta = 0 (label 1), incoming infinity (label 3)
    return g.edge(e).tail == v ? 1 : 3;
}

} // namespace

int ReducibleCurve::oval_of_sector(int vertex, int la, int lb) const {
    if (la > lb) std::swap(la, lb);
    auto it = sector_oval_.find({vertex, la, lb});
    return it == sector_oval_.end() ? -1 : it->second;
}

int ReducibleCurve::oval_of_interval(int j) const {
    if (j < 1 || j > static_cast<int>(interval_oval_.size())) return -1;
    return interval_oval_[j - 1];
}

ReducibleCurve build_curve(const Graph& g) {
    ReducibleCurve c;
    c.faces = g.enumerate_faces();

    CurveComponent g0;
    g0.kind = CurveComponent::Kind::Gamma0;
    g0.name = "Gamma0";
    c.components.push_back(g0);
    c.comp_of_vertex.assign(g.vertex_count(), -1);
    int nw = 0, nb = 0;
    for (int v : g.internal_vertices()) {
        CurveComponent cc;
        if (g.vertex(v).color == Color::White) {
            cc.kind = CurveComponent::Kind::White;
            cc.name = "Gamma" + std::to_string(++nw);
        } else {
            cc.kind = CurveComponent::Kind::Black;
            cc.name = "Sigma" + std::to_string(++nb);
        }
        cc.vertex = v;
        c.comp_of_vertex[v] = static_cast<int>(c.components.size());
        c.components.push_back(cc);
    }

    // Double points: one per edge, gluing the endpoint marked points.
    for (int e = 0; e < g.edge_count(); ++e) {
        auto mk = [&](int v) -> PointRef {
            if (g.is_boundary(v)) return {0, g.boundary_label(v)};
            return {c.comp_of_vertex[v], edge_label_at(g, v, e)};
        };
        c.double_points.push_back({mk(g.edge(e).tail), mk(g.edge(e).head)});
    }

    // Ovals from faces.
    c.interval_oval_.assign(std::max(0, g.n_boundary() - 1), -1);
    for (int fi = 0; fi < static_cast<int>(c.faces.faces.size()); ++fi) {
        const Face& f = c.faces.faces[fi];
        Oval ov;
        ov.face = fi;
        ov.kind = f.kind;
        for (const auto& corner : f.corners) {
            OvalArc a;
            a.component = c.comp_of_vertex[corner.vertex];
            a.label_a = edge_label_at(g, corner.vertex, corner.edge_in);
            a.label_b = edge_label_at(g, corner.vertex, corner.edge_out);
            ov.arcs.push_back(a);
            if (g.degree(corner.vertex) == 3) {
                int la = std::min(a.label_a, a.label_b), lb = std::max(a.label_a, a.label_b);
                c.sector_oval_[{corner.vertex, la, lb}] = fi;
            }
        }
        for (int j : f.kappa_intervals) {
            OvalArc a;
            a.component = 0;
            a.kappa_interval = j;
            ov.arcs.push_back(a);
            c.interval_oval_[j - 1] = fi;
        }
        if (f.touches_closing_arc) {
            OvalArc a;
            a.component = 0;
            a.closing = true;
            ov.arcs.push_back(a);
        }
        if (f.kind == FaceKind::Infinite) c.infinite_oval = fi;
        c.ovals.push_back(std::move(ov));
    }
    return c;
}

// --- network divisor ---------------------------------------------------------------

namespace {

struct HalfWave {
    // Half-edge dressed wave values at t0 for the three flags of a trivalent
    // white vertex, exact or numeric.
    bool exact;
    std::array<Rat, 3> ex;
    std::array<long double, 3> nu;
    int sign(int i, long double scale) const {
        if (exact) return ex[i].sign();
        if (std::fabs(static_cast<double>(nu[i])) <= 1e-9L * scale) return 0;
        return nu[i] > 0 ? 1 : -1;
    }
};

HalfWave half_wave_at_white(const Graph& g, const GaugedOrientation& go,
                            const EdgeVectorSystem& sys, const SolitonData& s,
                            const ReferenceTime& t0, int v) {
    auto lab = g.trivalent_labels(v);
    HalfWave hw;
    hw.exact = t0.exact;
    auto flag_vec = [&](int e) -> const RatVec& {
        return g.edge(e).tail == v ? sys.z_tail[e] : sys.z_head[e];
    };
    if (t0.exact) {
        auto w = darboux_exact_at_zero(s);
        for (int i = 0; i < 3; ++i) hw.ex[i] = dressed_pair_exact0(flag_vec(lab[i]), s, w);
        for (int i = 0; i < 3; ++i) hw.nu[i] = hw.ex[i].to_long_double();
    } else {
        Times t{t0.x0.to_long_double()};
        auto op = darboux_coefficients(s, t);
        for (int i = 0; i < 3; ++i) {
            const RatVec& zv = flag_vec(lab[i]);
            long double acc = 0;
            for (int j = 0; j < s.n(); ++j)
                if (!zv[j].is_zero())
                    acc += zv[j].to_long_double() *
                           op.char_value(s.kappa[j].to_long_double()) *
                           std::exp(theta(s, j + 1, t));
            hw.nu[i] = acc;
        }
    }
    return hw;
}

bool proportional(const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

} // namespace

std::vector<WhiteDivisorPoint> network_divisor(const GaugedOrientation& go,
                                               const EdgeVectorSystem& sys, const SolitonData& s,
                                               const ReferenceTime& t0,
                                               const ReducibleCurve& curve) {
    const Graph& g = go.graph();
    std::vector<WhiteDivisorPoint> out;
    for (int v : g.internal_vertices()) {
        if (g.degree(v) != 3 || g.vertex(v).color != Color::White) continue;
        auto lab = g.trivalent_labels(v);
        WhiteDivisorPoint p;
        p.vertex = v;
        p.component = curve.comp_of_vertex[v];
        p.trivial = proportional(sys.E[lab[0]], sys.E[lab[1]]) ||
                    proportional(sys.E[lab[2]], sys.E[lab[0]]) ||
                    proportional(sys.E[lab[2]], sys.E[lab[1]]);
        HalfWave hw = half_wave_at_white(g, go, sys, s, t0, v);
        long double scale = std::max({std::fabs((double)hw.nu[0]), std::fabs((double)hw.nu[1]),
                                      std::fabs((double)hw.nu[2])});
        if (t0.exact) {
            Rat denom = hw.ex[0] + hw.ex[1];
            p.exact = true;
            if (denom.is_zero()) {
                p.at_infinity = true;
                p.degenerate = true;
            } else {
                p.gamma = hw.ex[0] / denom;
                p.gamma_num = p.gamma.to_long_double();
                if (p.gamma.is_zero() || p.gamma.is_one()) p.degenerate = true;
            }
        } else {
            long double denom = hw.nu[0] + hw.nu[1];
            if (std::fabs((double)denom) <= 1e-9L * scale) {
                p.at_infinity = true;
                p.degenerate = true;
            } else {
                p.gamma_num = hw.nu[0] / denom;
                if (std::fabs((double)p.gamma_num) <= 1e-9L ||
                    std::fabs((double)(p.gamma_num - 1)) <= 1e-9L)
                    p.degenerate = true;
            }
        }
        if (!p.degenerate) {
            // Unique pair with positive product locates the oval.
            int s1 = hw.sign(0, scale), s2 = hw.sign(1, scale), s3 = hw.sign(2, scale);
            if (s1 == 0 || s2 == 0 || s3 == 0) {
                p.degenerate = true;
            } else if (s1 * s2 > 0) {
                p.oval = curve.oval_of_sector(v, 1, 2);
            } else if (s2 * s3 > 0) {
                p.oval = curve.oval_of_sector(v, 2, 3);
            } else {
                p.oval = curve.oval_of_sector(v, 1, 3);
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

KPDivisor place_divisor(const ReducibleCurve& curve, const GaugedOrientation& go,
                        const EdgeVectorSystem& sys, const SolitonData& s,
                        const ReferenceTime& t0) {
    KPDivisor d;
    d.white = network_divisor(go, sys, s, t0, curve);
    Times t;
    if (!t0.exact) t.push_back(t0.x0.to_long_double());
    auto sd = sato_divisor(s, t);
    long double span = (s.kappa.back() - s.kappa.front()).to_long_double();
    for (long double r : sd.roots) {
        SatoDivisorPoint p;
        p.zeta = r;
        for (int j = 1; j + 1 <= s.n(); ++j) {
            long double a = s.kappa[j - 1].to_long_double(), b = s.kappa[j].to_long_double();
            if (std::fabs((double)(r - a)) <= 1e-9L * span ||
                std::fabs((double)(r - b)) <= 1e-9L * span) {
                p.degenerate = true;
                break;
            }
            if (r > a && r < b) {
                p.interval = j;
                p.oval = curve.oval_of_interval(j);
                break;
            }
        }
        if (!p.degenerate && p.interval == 0) p.degenerate = true; // outside every interval
        d.sato.push_back(p);
    }
    return d;
}

CountReport verify_oval_count(const KPDivisor& d, const ReducibleCurve& curve,
                              const SolitonData& s, const GaugedOrientation& go,
                              const ReferenceTime& t0, const EdgeVectorSystem& sys) {
    CountReport rep;
    rep.per_oval.assign(curve.ovals.size(), 0);
    std::ostringstream detail;
    if (d.degenerate()) {
        rep.pass = rep.parity_pass = false;
        rep.detail = "degenerate divisor (point at a double point)";
        return rep;
    }
    std::vector<int> nu(curve.ovals.size(), 0);
    for (const auto& w : d.white) {
        if (w.oval >= 0) {
            ++rep.per_oval[w.oval];
            ++nu[w.oval];
        }
    }
    for (const auto& p : d.sato)
        if (p.oval >= 0) ++rep.per_oval[p.oval];

    rep.pass = true;
    for (size_t i = 0; i < curve.ovals.size(); ++i) {
        bool infinite = static_cast<int>(i) == curve.infinite_oval;
        int want = infinite ? 0 : 1;
        if (rep.per_oval[i] != want) {
            rep.pass = false;
            detail << "oval " << i << (infinite ? " (infinite)" : "") << " holds "
                   << rep.per_oval[i] << " points; ";
        }
    }

    // Parity relations. rho counts sign changes of the wave value at the
    // boundary double points (a positive multiple of the characteristic value
    // at kappa_j) over the oval's kappa intervals, detecting the Sato points
    // mod 2: internal ovals hold an odd number of white points, finite boundary
    // ovals an odd total, the infinite oval an even total.
    const int k = s.k();
    std::vector<long double> p_at_kappa(s.n());
    if (t0.exact) {
        auto w = darboux_exact_at_zero(s);
        for (int j = 0; j < s.n(); ++j) {
            Rat p(1);
            for (int i = 0; i < k; ++i) p = p * s.kappa[j] - w[i];
            p_at_kappa[j] = p.to_long_double();
        }
    } else {
        Times t{t0.x0.to_long_double()};
        auto op = darboux_coefficients(s, t);
        for (int j = 0; j < s.n(); ++j) p_at_kappa[j] = op.char_value(s.kappa[j].to_long_double());
    }
    rep.parity_pass = true;
    for (size_t i = 0; i < curve.ovals.size(); ++i) {
        int rho = 0;
        for (const auto& arc : curve.ovals[i].arcs) {
            if (arc.component != 0 || arc.closing) continue;
            int j = arc.kappa_interval;
            if (p_at_kappa[j - 1] * p_at_kappa[j] < 0) ++rho;
        }
        bool ok = true;
        if (curve.ovals[i].kind == FaceKind::Internal) ok = nu[i] % 2 == 1;
        else if (static_cast<int>(i) == curve.infinite_oval) ok = (nu[i] + rho) % 2 == 0;
        else ok = (nu[i] + rho) % 2 == 1;
        if (!ok) {
            rep.parity_pass = false;
            detail << "parity fails at oval " << i << " (nu=" << nu[i] << ", rho=" << rho << "); ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

// --- invariance -----------------------------------------------------------------

namespace {

std::string face_key(const Graph::FaceSet& fs, int fi) {
    const Face& f = fs.faces[fi];
    std::ostringstream os;
    for (int e : f.edges) os << e << ",";
    os << "|";
    for (int j : f.kappa_intervals) os << j << ",";
    os << (f.touches_closing_arc ? "*" : "");
    return os.str();
}

} // namespace

InvarianceReport verify_divisor_invariance(const Graph& g, const SolitonData& s,
                                           unsigned long seed, int n_rays, int n_orientations) {
    InvarianceReport rep;
    std::ostringstream detail;
    std::mt19937_64 rng(seed);

    Vec2 ray0 = pick_gauge_ray(g, rng);
    GaugedOrientation go0(g, ray0);
    auto sys0 = edge_vectors_linear(go0);
    auto t0 = pick_reference_time(sys0, s);
    if (!t0.ok) {
        rep.pass = false;
        rep.detail = "no admissible reference time: " + t0.reason;
        return rep;
    }
    auto curve0 = build_curve(g);
    auto div0 = place_divisor(curve0, go0, sys0, s, t0);
    if (div0.degenerate()) {
        rep.pass = false;
        rep.detail = "reference divisor degenerate";
        return rep;
    }

    auto fail = [&](const std::string& msg) {
        rep.pass = false;
        detail << msg << "; ";
    };

    auto gamma_close = [&](const WhiteDivisorPoint& a, long double want) {
        return std::fabs((double)(a.gamma_num - want)) <=
               1e-9L * std::max(1.0L, (long double)std::fabs((double)want));
    };

    // Gauge ray changes: identical coordinates and ovals.
    for (int i = 0; i < n_rays; ++i) {
        Vec2 ray = pick_gauge_ray(g, rng);
        GaugedOrientation go(g, ray);
        auto sys = edge_vectors_linear(go);
        auto div = place_divisor(curve0, go, sys, s, t0);
        for (size_t w = 0; w < div.white.size(); ++w) {
            if (div.white[w].oval != div0.white[w].oval) fail("ray change moved a divisor point");
            if (div.white[w].exact && div0.white[w].exact) {
                if (div.white[w].gamma != div0.white[w].gamma)
                    fail("ray change altered a divisor coordinate");
            } else if (!gamma_close(div.white[w], div0.white[w].gamma_num)) {
                fail("ray change altered a divisor coordinate");
            }
        }
    }

    // Weight gauge at each internal vertex in turn (a few of them).
    {
        auto internals = g.internal_vertices();
        std::uniform_int_distribution<size_t> pick(0, internals.size() - 1);
        std::uniform_int_distribution<int> tnum(2, 7);
        for (int i = 0; i < 2; ++i) {
            int v = internals[pick(rng)];
            Rat t(tnum(rng), 1);
            Graph gw;
            gw.set_boundary(g.n_boundary());
            for (int iv : g.internal_vertices())
                gw.add_internal(g.vertex(iv).id, g.vertex(iv).color, g.vertex(iv).pos);
            for (int e = 0; e < g.edge_count(); ++e) {
                Rat w = g.edge(e).weight;
                if (g.edge(e).tail == v) w *= t;
                if (g.edge(e).head == v) w = w / t;
                gw.add_edge(g.vertex(g.edge(e).tail).id, g.vertex(g.edge(e).head).id, w);
            }
            GaugedOrientation go(gw, ray0);
            auto sys = edge_vectors_linear(go);
            auto curve = build_curve(gw);
            auto div = place_divisor(curve, go, sys, s, t0);
            for (size_t w = 0; w < div.white.size(); ++w) {
                if (div.white[w].oval != div0.white[w].oval ||
                    !gamma_close(div.white[w], div0.white[w].gamma_num))
                    fail("weight gauge moved a divisor point");
            }
        }
    }

    // Vertex gauge: nudge an internal vertex, keeping the embedding valid.
    {
        for (int v : g.internal_vertices()) {
            Vec2 np = g.vertex(v).pos + Vec2(Rat(1, 37), Rat(1, 53));
            Graph gm;
            gm.set_boundary(g.n_boundary());
            for (int iv : g.internal_vertices())
                gm.add_internal(g.vertex(iv).id, g.vertex(iv).color,
                                iv == v ? np : g.vertex(iv).pos);
            for (int e = 0; e < g.edge_count(); ++e)
                gm.add_edge(g.vertex(g.edge(e).tail).id, g.vertex(g.edge(e).head).id,
                            g.edge(e).weight);
            if (!gm.validate().ok()) continue;
            bool ray_ok = true;
            try {
                GaugedOrientation go(gm, ray0);
                auto sys = edge_vectors_linear(go);
                auto curve = build_curve(gm);
                auto div = place_divisor(curve, go, sys, s, t0);
                for (size_t w = 0; w < div.white.size(); ++w) {
                    if (div.white[w].oval != div0.white[w].oval ||
                        !gamma_close(div.white[w], div0.white[w].gamma_num))
                        fail("vertex gauge moved a divisor point");
                }
            } catch (const std::invalid_argument&) {
                ray_ok = false; // ray degenerate after the move; skip this vertex
            }
            if (ray_ok) break;
        }
    }

    // Orientation changes: coordinates follow the Moebius rule per relabeling.
    auto orients = g.perfect_orientations(n_orientations + 1);
    int used = 0;
    for (auto& [g2, base2] : orients) {
        // Skip the identical orientation.
        bool same = true;
        for (int e = 0; e < g.edge_count() && same; ++e)
            same = g.edge(e).tail == g2.edge(e).tail;
        if (same) continue;
        if (used++ >= n_orientations) break;

        Vec2 ray = pick_gauge_ray(g2, rng);
        GaugedOrientation go(g2, ray);
        auto sys = edge_vectors_linear(go);
        auto curve = build_curve(g2);
        // Reference time must also be admissible in the new frame; reuse t0 and
        // tolerate sign-threshold issues by checking only nondegenerate points.
        auto div = place_divisor(curve, go, sys, s, t0);

        // Match ovals between the two face enumerations by canonical keys.
        std::map<std::string, int> key_to_new;
        for (int fi = 0; fi < static_cast<int>(curve.faces.faces.size()); ++fi)
            key_to_new[face_key(curve.faces, fi)] = fi;
        std::vector<int> oval_map(curve0.faces.faces.size(), -1);
        for (int fi = 0; fi < static_cast<int>(curve0.faces.faces.size()); ++fi) {
            auto it = key_to_new.find(face_key(curve0.faces, fi));
            if (it != key_to_new.end()) oval_map[fi] = it->second;
        }

        for (size_t w = 0; w < div.white.size(); ++w) {
            const auto& p0 = div0.white[w];
            const auto& p1 = div.white[w];
            if (p0.degenerate || p1.degenerate) continue;
            int v = p0.vertex;
            auto lab0 = g.trivalent_labels(v);
            auto lab1 = g2.trivalent_labels(v);
            int shift = -1;
            for (int sft = 0; sft < 3; ++sft) {
                bool match = true;
                for (int i = 0; i < 3; ++i) match &= lab1[(i + sft) % 3] == lab0[i];
                if (match) { shift = sft; break; }
            }
            if (shift < 0) {
                fail("edge labels at a white vertex did not rotate cyclically");
                continue;
            }
            // old label i -> new label i + shift (mod 3). The coordinate maps by
            // the Moebius transform moving the marked points accordingly; the
            // shift-by-two map is the square of 1/(1-z).
            long double gno = p0.gamma_num;
            long double want;
            int s_map = shift;
            if (s_map == 0) want = gno;
            else if (s_map == 1) want = 1.0L / (1.0L - gno);
            else want = (gno - 1.0L) / gno;
            if (!gamma_close(p1, want)) fail("orientation change broke the Moebius rule");
            if (oval_map[p0.oval] != p1.oval) fail("orientation change moved a divisor point");
        }
    }

    rep.detail = detail.str();
    return rep;
}

ZeroEdgeResolution resolve_type2_edge(const ReducibleCurve& curve, const Graph& g, int edge) {
    ZeroEdgeResolution r;
    int u = g.edge(edge).tail, v = g.edge(edge).head;
    if (g.is_boundary(u) || g.is_boundary(v) || g.degree(u) != 3 || g.degree(v) != 3 ||
        g.vertex(u).color != Color::White || g.vertex(v).color != Color::White)
        throw std::invalid_argument("resolve_type2_edge: edge must join trivalent white vertices");
    std::vector<int> sides;
    for (size_t f = 0; f < curve.faces.faces.size(); ++f)
        for (int e : curve.faces.faces[f].edges)
            if (e == edge) sides.push_back(static_cast<int>(f));
    if (sides.size() != 2 || sides[0] == sides[1])
        throw std::invalid_argument("resolve_type2_edge: edge does not bound two distinct faces");
    r.oval_a = sides[0];
    r.oval_b = sides[1];
    r.dropped_vertex = u; // either endpoint works; keep the head's point
    r.ovals_after = static_cast<int>(curve.ovals.size()) - 1;
    return r;
}

// --- wave function on the curve ---------------------------------------------------

CurveWave::CurveWave(const ReducibleCurve& curve, const GaugedOrientation& go,
                     const EdgeVectorSystem& sys, const SolitonData& s, const ReferenceTime& t0,
                     const KPDivisor& div)
    : curve_(&curve), go_(&go), sys_(&sys), s_(&s), div_(&div) {
    if (!t0.exact) t0_.push_back(t0.x0.to_long_double());
    psi0_edges_ = dressed_edge_wave(sys, s, t0_);
    half0_ = half_at(t0_);
}

std::vector<long double> CurveWave::half_at(const Times& t) const {
    // One value per flag: index 2*e for the tail flag, 2*e+1 for the head flag.
    auto op = darboux_coefficients(*s_, t);
    const int n = s_->n();
    std::vector<long double> dexp(n);
    for (int j = 1; j <= n; ++j)
        dexp[j - 1] = op.char_value(s_->kappa[j - 1].to_long_double()) *
                      std::exp(theta(*s_, j, t));
    std::vector<long double> out(2 * sys_->E.size());
    for (size_t e = 0; e < sys_->E.size(); ++e) {
        long double a = 0, b = 0;
        for (int j = 0; j < n; ++j) {
            if (!sys_->z_tail[e][j].is_zero()) a += sys_->z_tail[e][j].to_long_double() * dexp[j];
            if (!sys_->z_head[e][j].is_zero()) b += sys_->z_head[e][j].to_long_double() * dexp[j];
        }
        out[2 * e] = a;
        out[2 * e + 1] = b;
    }
    return out;
}

long double CurveWave::at_marked(int component, int label, const Times& t) const {
    const Graph& g = go_->graph();
    const CurveComponent& cc = curve_->components[component];
    if (cc.kind == CurveComponent::Kind::Gamma0) {
        // Value at kappa_label: normalized Sato wave.
        auto opt = darboux_coefficients(*s_, t);
        auto op0 = darboux_coefficients(*s_, t0_);
        long double kj = s_->kappa[label - 1].to_long_double();
        long double num = opt.char_value(kj) * std::exp(theta(*s_, label, t));
        long double den = op0.char_value(kj) * std::exp(theta(*s_, label, t0_));
        return num / den;
    }
    // Value at a marked point of an internal component = the normalized edge
    // wave of the corresponding edge.
    int v = cc.vertex;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).tail != v && g.edge(e).head != v) continue;
        if (edge_label_at(g, v, e) == label) {
            auto psi_t = dressed_edge_wave(*sys_, *s_, t);
            return psi_t[e] / psi0_edges_[e];
        }
    }
    throw std::invalid_argument("at_marked: no such marked point");
}

long double CurveWave::at_coord(int component, long double zeta, const Times& t) const {
    const Graph& g = go_->graph();
    const CurveComponent& cc = curve_->components[component];
    if (cc.kind == CurveComponent::Kind::Gamma0) {
        auto opt = darboux_coefficients(*s_, t);
        auto op0 = darboux_coefficients(*s_, t0_);
        auto th = [&](const Times& tt) {
            long double acc = 0, power = 1;
            for (size_t l = 0; l < tt.size(); ++l) {
                power *= zeta;
                acc += power * tt[l];
            }
            return acc;
        };
        return opt.char_value(zeta) * std::exp(th(t)) / (op0.char_value(zeta) * std::exp(th(t0_)));
    }
    int v = cc.vertex;
    if (g.degree(v) == 2 ||
        (g.degree(v) == 3 && g.vertex(v).color == Color::Black)) {
        // Constant in zeta: any incident edge value.
        for (int e = 0; e < g.edge_count(); ++e)
            if (g.edge(e).tail == v || g.edge(e).head == v) {
                auto psi_t = dressed_edge_wave(*sys_, *s_, t);
                return psi_t[e] / psi0_edges_[e];
            }
    }
    // Trivalent white: degree-one extension with the pole at gamma.
    const WhiteDivisorPoint* wp = nullptr;
    for (const auto& w : div_->white)
        if (w.vertex == v) wp = &w;
    if (!wp) throw std::logic_error("white component without divisor point");
    auto lab = g.trivalent_labels(v);
    auto half = half_at(t);
    auto flag_idx = [&](int e) { return g.edge(e).tail == v ? 2 * e : 2 * e + 1; };
    long double p1 = half[flag_idx(lab[0])], p2 = half[flag_idx(lab[1])];
    long double p10 = half0_[flag_idx(lab[0])], p20 = half0_[flag_idx(lab[1])];
    long double gamma = wp->gamma_num;
    return (p1 * (zeta - 1) + p2 * zeta) / ((p10 + p20) * (zeta - gamma));
}

long double CurveWave::double_point_mismatch(const Times& t) const {
    long double worst = 0;
    auto coord_of_label = [&](int label) -> long double {
        return label == 1 ? 0.0L : (label == 2 ? 1.0L : 0.0L);
    };
    for (size_t e = 0; e < curve_->double_points.size(); ++e) {
        const auto& [a, b] = curve_->double_points[e];
        long double va = at_marked(a.component, a.label, t);
        long double vb = at_marked(b.component, b.label, t);
        long double scale = std::max({std::fabs((double)va), std::fabs((double)vb), 1.0});
        worst = std::max(worst, std::fabs((double)(va - vb)) / scale);
    }
    (void)coord_of_label;
    return worst;
}

} // namespace plabic
