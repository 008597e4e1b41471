// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/fixtures.hpp"

#include "core/moves.hpp"

namespace plabic {

namespace {
Vec2 at(long long x_num, long long x_den, long long y_num, long long y_den) {
    return Vec2(Rat(x_num, x_den), Rat(y_num, y_den));
}
} // namespace

Graph fixture_gr13(const Rat& w2, const Rat& w3) {
    Graph g;
    g.set_boundary(3);
    g.add_internal("V1", Color::White, at(3, 1, 1, 1));
    g.add_internal("V2", Color::White, at(2, 1, 1, 1));
    g.add_internal("V3", Color::White, at(1, 1, 1, 1));
    g.add_internal("W", Color::White, at(2, 1, 2, 1));
    g.add_edge("b1", "V1");
    g.add_edge("V1", "W");
    g.add_edge("W", "V2", w2);
    g.add_edge("V2", "b2");
    g.add_edge("W", "V3", w3);
    g.add_edge("V3", "b3");
    return g;
}

Graph fixture_gr24_s34(const Rat& w13, const Rat& w23, const Rat& w24) {
    Graph g;
    g.set_boundary(4);
    g.add_internal("V1", Color::White, at(4, 1, 1, 1));
    g.add_internal("V2", Color::White, at(3, 1, 1, 1));
    g.add_internal("V3", Color::White, at(2, 1, 1, 1));
    g.add_internal("V4", Color::White, at(1, 1, 1, 1));
    g.add_internal("B", Color::Black, at(7, 2, 3, 2));
    g.add_internal("W", Color::White, at(3, 2, 2, 1));
    g.add_edge("b1", "V1");
    g.add_edge("b2", "V2");
    g.add_edge("V1", "B", w13);
    g.add_edge("V2", "B", w23);
    g.add_edge("B", "W");
    g.add_edge("W", "V3");
    g.add_edge("W", "V4", w24);
    g.add_edge("V3", "b3");
    g.add_edge("V4", "b4");
    return g;
}

Graph fixture_gr24_tp(const Rat& w13, const Rat& w14, const Rat& w23, const Rat& w24) {
    Graph g;
    g.set_boundary(4);
    g.add_internal("V1", Color::White, at(4, 1, 1, 1));
    g.add_internal("V2", Color::White, at(3, 1, 1, 1));
    g.add_internal("V3", Color::White, at(2, 1, 1, 1));
    g.add_internal("V4", Color::White, at(1, 1, 1, 1));
    g.add_internal("Wa", Color::White, at(2, 1, 3, 1));
    g.add_internal("Ba", Color::Black, at(2, 1, 12, 5));
    g.add_internal("Wb", Color::White, at(2, 1, 9, 5));
    g.add_internal("Bb", Color::Black, at(1, 1, 9, 5));
    g.add_edge("b1", "V1");
    g.add_edge("V1", "Wa", w13);
    g.add_edge("b2", "V2");
    g.add_edge("V2", "Ba", w23);
    g.add_edge("Wa", "Ba");
    g.add_edge("Ba", "Wb");
    g.add_edge("Wb", "V3");
    g.add_edge("V3", "b3");
    g.add_edge("Wb", "Bb", w24);
    g.add_edge("Wa", "Bb", w14);
    g.add_edge("Bb", "V4");
    g.add_edge("V4", "b4");
    return g;
}

Graph fixture_gr25_tp(const Rat& w13, const Rat& w14, const Rat& w15, const Rat& w23,
                      const Rat& w24, const Rat& w25) {
    Graph g;
    g.set_boundary(5);
    for (int j = 1; j <= 5; ++j)
        g.add_internal("V" + std::to_string(j), Color::White, at(6 - j, 1, 1, 1));
    g.add_internal("A", Color::White, at(3, 1, 4, 1));
    g.add_internal("B", Color::White, at(2, 1, 4, 1));
    g.add_internal("C", Color::Black, at(3, 1, 3, 1));
    g.add_internal("D", Color::White, at(3, 1, 12, 5));
    g.add_internal("E", Color::Black, at(2, 1, 3, 1));
    g.add_internal("F", Color::White, at(2, 1, 12, 5));
    g.add_internal("G", Color::Black, at(1, 1, 12, 5));
    g.add_edge("b1", "V1");
    g.add_edge("V1", "A", w13);
    g.add_edge("b2", "V2");
    g.add_edge("V2", "C", w23);
    g.add_edge("A", "B", w14);
    g.add_edge("A", "C");
    g.add_edge("B", "E");
    g.add_edge("B", "G", w15);
    g.add_edge("C", "D");
    g.add_edge("D", "V3");
    g.add_edge("V3", "b3");
    g.add_edge("D", "E", w24);
    g.add_edge("E", "F");
    g.add_edge("F", "V4");
    g.add_edge("V4", "b4");
    g.add_edge("F", "G", w25);
    g.add_edge("G", "V5");
    g.add_edge("V5", "b5");
    return g;
}

Graph fixture_gr23(const Rat& w13, const Rat& w23) {
    Graph g;
    g.set_boundary(3);
    g.add_internal("V1", Color::White, at(3, 1, 1, 1));
    g.add_internal("V2", Color::White, at(2, 1, 1, 1));
    g.add_internal("V3", Color::White, at(1, 1, 1, 1));
    g.add_internal("Ka", Color::Black, at(1, 1, 3, 1)); // box (1,3)
    g.add_internal("Wa", Color::White, at(1, 1, 5, 2));
    g.add_internal("Kb", Color::Black, at(1, 1, 2, 1)); // box (2,3)
    g.add_internal("Wb", Color::White, at(1, 1, 3, 2));
    g.add_internal("C1", Color::White, at(3, 1, 3, 1));
    g.add_internal("C2", Color::White, at(2, 1, 2, 1));
    g.add_edge("b1", "V1");
    g.add_edge("V1", "C1");
    g.add_edge("C1", "Ka", w13);
    g.add_edge("Ka", "Wa");
    g.add_edge("b2", "V2");
    g.add_edge("V2", "C2");
    g.add_edge("C2", "Kb", w23);
    g.add_edge("Wa", "Kb");
    g.add_edge("Kb", "Wb");
    g.add_edge("Wb", "V3");
    g.add_edge("V3", "b3");
    return g;
}

Graph fixture_gr24_par(const Rat& w13, const Rat& w23, const Rat& w24, const Rat& p,
                       const Rat& q) {
    Graph red = fixture_gr24_s34(w13, w23, w24);
    int edge_bw = -1;
    for (int e = 0; e < red.edge_count(); ++e)
        if (red.vertex(red.edge(e).tail).id == "B" && red.vertex(red.edge(e).head).id == "W")
            edge_bw = e;
    auto rec = parallel_unreduction(red, edge_bw, p, q);
    return rec.result;
}

Graph fixture_gr12_pocket(const Rat& p, const Rat& q) {
    Graph g;
    g.set_boundary(2);
    g.add_internal("V1", Color::White, at(2, 1, 1, 1));
    g.add_internal("V2", Color::White, at(1, 1, 1, 1));
    g.add_internal("B", Color::Black, at(2, 1, 2, 1));
    g.add_internal("W", Color::White, at(3, 2, 11, 4));
    g.add_internal("M", Color::Black, at(9, 4, 13, 4));
    g.add_edge("b1", "V1");
    g.add_edge("V1", "B");
    g.add_edge("B", "W", p);
    g.add_edge("W", "M", q);
    g.add_edge("M", "B");
    g.add_edge("W", "V2");
    g.add_edge("V2", "b2");
    return g;
}

Graph fixture_gr12_cyclic(const Rat& p, const Rat& q, const Rat& s) {
    // Cycle P -> U -> Z1 -> Z2 -> W2 -> M -> P; the three-edge chain from U to
    // W2 carries a zero vector exactly when p == q (at s == 1).
    Graph g;
    g.set_boundary(2);
    Rat u = (p + q) / (p + s * q); // source compensation keeping the point fixed
    g.add_internal("V1", Color::White, at(2, 1, 1, 1));
    g.add_internal("V2", Color::White, at(1, 1, 1, 1));
    g.add_internal("P", Color::Black, at(2, 1, 2, 1));
    g.add_internal("U", Color::White, at(2, 1, 3, 1));
    g.add_internal("Z1", Color::White, at(11, 5, 63, 20));
    g.add_internal("Z2", Color::White, at(12, 5, 82, 25));
    g.add_internal("W2", Color::White, at(13, 5, 17, 5));
    g.add_internal("G", Color::Black, at(8, 5, 18, 5));
    g.add_internal("M", Color::Black, at(29, 10, 13, 5));
    g.add_internal("F", Color::Black, at(1, 1, 2, 1));
    g.add_edge("b1", "V1");
    g.add_edge("V1", "P", u);
    g.add_edge("P", "U");
    g.add_edge("U", "Z1");
    g.add_edge("Z1", "Z2");
    g.add_edge("Z2", "W2");
    g.add_edge("U", "F", p);
    g.add_edge("W2", "G", s * q);
    g.add_edge("G", "F");
    g.add_edge("W2", "M");
    g.add_edge("M", "P");
    g.add_edge("F", "V2");
    g.add_edge("V2", "b2");
    return g;
}

Graph fixture_zero_vector(const Rat& a, bool type2) {
    (void)type2;
    return fixture_gr12_cyclic(a, a, Rat(1));
}

std::vector<NamedFixture> standard_fixtures() {
    std::vector<NamedFixture> out;
    out.push_back({"gr13_tp", fixture_gr13(Rat(1), Rat(2))});
    out.push_back({"gr24_s34", fixture_gr24_s34(Rat(1), Rat(1), Rat(1))});
    out.push_back({"gr24_tp", fixture_gr24_tp(Rat(1), Rat(1), Rat(1), Rat(1))});
    out.push_back({"gr24_par", fixture_gr24_par(Rat(1), Rat(1), Rat(1), Rat(1, 2), Rat(1, 3))});
    out.push_back({"gr23_tp", fixture_gr23(Rat(1), Rat(1))});
    out.push_back({"gr12_pocket", fixture_gr12_pocket(Rat(1, 2), Rat(1, 3))});
    return out;
}

} // namespace plabic
