// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/soliton.hpp"

#include <map>
#include <string>
#include <vector>

namespace plabic {

/// Reducible rational curve dual to the network: one CP^1 per internal vertex
/// plus Gamma_0 for the boundary, glued at double points corresponding to the
/// edges. Ovals correspond to faces.
struct CurveComponent {
    enum class Kind : uint8_t { Gamma0, White, Black };
    Kind kind = Kind::Gamma0;
    int vertex = -1; // internal vertex index, -1 for Gamma0
    std::string name;
};

/// A marked point is addressed by its component and the local label:
/// on internal components labels 1,2,3 carry local coordinates 0,1,infinity
/// (bivalent vertices use labels 1 and 3); on Gamma0 label j marks kappa_j.
struct PointRef {
    int component = -1;
    int label = 0;
};

struct OvalArc {
    int component = -1;
    int label_a = 0, label_b = 0; // sector endpoints on an internal component
    int kappa_interval = 0;       // on Gamma0: arc between kappa_j and kappa_{j+1}
    bool closing = false;         // on Gamma0: the arc through P0
};

struct Oval {
    int face = -1;
    FaceKind kind = FaceKind::Internal;
    std::vector<OvalArc> arcs;
};

struct ReducibleCurve {
    Graph::FaceSet faces;
    std::vector<CurveComponent> components; // [0] is Gamma0
    std::vector<int> comp_of_vertex;        // internal vertex index -> component
    std::vector<std::pair<PointRef, PointRef>> double_points; // per edge
    std::vector<Oval> ovals;
    int infinite_oval = -1;

    /// Face id of the sector {label_a, label_b} at a trivalent internal vertex.
    int oval_of_sector(int vertex, int la, int lb) const;
    /// Oval whose Gamma0 part contains the interval (kappa_j, kappa_{j+1}).
    int oval_of_interval(int j) const;

private:
    friend ReducibleCurve build_curve(const Graph& g);
    std::map<std::tuple<int, int, int>, int> sector_oval_;
    std::vector<int> interval_oval_;
};

ReducibleCurve build_curve(const Graph& g);

/// One divisor value per trivalent white vertex, from half-edge wave ratios.
struct WhiteDivisorPoint {
    int vertex = -1;
    int component = -1;
    bool exact = false;
    Rat gamma;               // exact coordinate when exact
    long double gamma_num = 0; // numeric mirror
    bool at_infinity = false;  // denominator vanished: point at the label-3 node
    bool degenerate = false;   // coordinate at a double point (0, 1 or infinity)
    bool trivial = false;      // t-independent (proportional edge vectors)
    int oval = -1;             // -1 when degenerate
};

struct SatoDivisorPoint {
    long double zeta = 0;
    int interval = 0;  // (kappa_j, kappa_{j+1}), 1-based j; 0 when degenerate
    bool degenerate = false;
    int oval = -1;
};

struct KPDivisor {
    std::vector<WhiteDivisorPoint> white;
    std::vector<SatoDivisorPoint> sato;
    bool degenerate() const {
        for (auto& w : white)
            if (w.degenerate) return true;
        for (auto& s : sato)
            if (s.degenerate) return true;
        return false;
    }
};

/// The dressed network divisor: gamma_dr at each trivalent white vertex,
/// evaluated at the reference time. Exact when t0 = 0 with rational data.
std::vector<WhiteDivisorPoint> network_divisor(const GaugedOrientation& go,
                                               const EdgeVectorSystem& sys, const SolitonData& s,
                                               const ReferenceTime& t0, const ReducibleCurve& curve);

/// Full KP divisor: the network divisor plus the Sato points on Gamma0 placed
/// by interval location.
KPDivisor place_divisor(const ReducibleCurve& curve, const GaugedOrientation& go,
                        const EdgeVectorSystem& sys, const SolitonData& s,
                        const ReferenceTime& t0);

struct CountReport {
    std::vector<int> per_oval;
    bool pass = false;
    bool parity_pass = false;
    std::string detail;
};
/// Exactly one divisor point in each finite oval, none in the infinite one,
/// plus the intermediate parity relations.
CountReport verify_oval_count(const KPDivisor& d, const ReducibleCurve& curve,
                              const SolitonData& s, const GaugedOrientation& go,
                              const ReferenceTime& t0, const EdgeVectorSystem& sys);

struct InvarianceReport {
    bool pass = true;
    std::string detail;
};
/// Divisor invariance across gauge-ray changes, weight/vertex gauges and
/// reorientations (with the coordinate Moebius maps at relabeled vertices).
InvarianceReport verify_divisor_invariance(const Graph& g, const SolitonData& s,
                                           unsigned long seed, int n_rays = 3,
                                           int n_orientations = 2);

/// Handling for a type-2 zero component consisting of a single edge joining
/// two trivalent white vertices: the double point is removed, the two ovals on
/// its sides merge, and the trivial divisor point of one endpoint is dropped
/// so the degree matches the reduced face count.
struct ZeroEdgeResolution {
    int oval_a = -1, oval_b = -1; // ovals merged by removing the double point
    int dropped_vertex = -1;      // white vertex losing its trivial point
    int ovals_after = 0;
};
ZeroEdgeResolution resolve_type2_edge(const ReducibleCurve& curve, const Graph& g, int edge);

/// Wave function on the curve: constant on black/bivalent components, degree
/// one with the prescribed pole on trivalent white components, Sato on Gamma0.
class CurveWave {
public:
    CurveWave(const ReducibleCurve& curve, const GaugedOrientation& go,
              const EdgeVectorSystem& sys, const SolitonData& s, const ReferenceTime& t0,
              const KPDivisor& div);

    /// Value at the marked point (component, label) at time t.
    long double at_marked(int component, int label, const Times& t) const;
    /// Value at a finite local coordinate zeta on a component.
    long double at_coord(int component, long double zeta, const Times& t) const;

    /// Max relative mismatch over all double points at time t.
    long double double_point_mismatch(const Times& t) const;

private:
    const ReducibleCurve* curve_;
    const GaugedOrientation* go_;
    const EdgeVectorSystem* sys_;
    const SolitonData* s_;
    Times t0_;
    const KPDivisor* div_;
    std::vector<long double> psi0_edges_; // dressed edge wave at t0
    std::vector<long double> half_at(const Times& t) const; // per flag values; see cpp
    std::vector<long double> half0_;
};

} // namespace plabic
