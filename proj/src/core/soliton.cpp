// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace plabic {

ValidationReport SolitonData::validate() const {
    ValidationReport rep;
    auto add = [&](const std::string& c, const std::string& d) { rep.issues.push_back({c, d}); };
    for (size_t i = 0; i + 1 < kappa.size(); ++i)
        if (!(kappa[i] < kappa[i + 1])) add("phases", "kappa not strictly increasing");
    if (static_cast<int>(A.empty() ? 0 : A[0].size()) != n()) add("matrix", "A is not k x n");
    for (const auto& [cols, d] : maximal_minors(A))
        if (d.sign() < 0) add("regularity", "negative maximal minor");
    // Irreducibility: no zero column, and every row has a nonzero entry besides
    // its pivot.
    for (int j = 0; j < n(); ++j) {
        bool nz = false;
        for (int i = 0; i < k(); ++i) nz |= !A[i][j].is_zero();
        if (!nz) add("irreducibility", "zero column " + std::to_string(j + 1));
    }
    for (int i = 0; i < k(); ++i) {
        int pivot = -1;
        for (int j = 0; j < n(); ++j)
            if (!A[i][j].is_zero()) { pivot = j; break; }
        int extra = 0;
        for (int j = 0; j < n(); ++j)
            if (j != pivot && !A[i][j].is_zero()) ++extra;
        if (extra == 0) add("irreducibility", "row " + std::to_string(i + 1) + " has only its pivot");
    }
    return rep;
}

long double theta(const SolitonData& s, int j, const Times& t) {
    long double kj = s.kappa[j - 1].to_long_double();
    long double acc = 0, power = 1;
    for (size_t l = 0; l < t.size(); ++l) {
        power *= kj;
        if (t[l] != 0.0L) acc += power * t[l];
    }
    return acc;
}

long double ScaledValue::value() const { return mantissa * std::exp(log_shift); }

namespace {

struct TauTerm {
    long double coeff;            // Delta_I * Vandermonde, > 0 for TNN
    long double kappa_sum;        // sum of kappas in I
    std::vector<int> labels;      // I
};

std::vector<TauTerm> tau_terms(const SolitonData& s) {
    std::vector<TauTerm> terms;
    for (const auto& [cols, d] : maximal_minors(s.A)) {
        if (d.is_zero()) continue;
        long double coeff = d.to_long_double();
        long double ks = 0;
        for (size_t a = 0; a < cols.size(); ++a) {
            ks += s.kappa[cols[a] - 1].to_long_double();
            for (size_t b = a + 1; b < cols.size(); ++b)
                coeff *= (s.kappa[cols[b] - 1] - s.kappa[cols[a] - 1]).to_long_double();
        }
        terms.push_back({coeff, ks, cols});
    }
    return terms;
}

long double theta_sum(const SolitonData& s, const std::vector<int>& labels, const Times& t) {
    long double acc = 0;
    for (int j : labels) acc += theta(s, j, t);
    return acc;
}

} // namespace

ScaledValue tau_scaled(const SolitonData& s, const Times& t) {
    auto terms = tau_terms(s);
    long double shift = -1e30L;
    std::vector<long double> th(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        th[i] = theta_sum(s, terms[i].labels, t);
        shift = std::max(shift, th[i]);
    }
    long double acc = 0;
    for (size_t i = 0; i < terms.size(); ++i) acc += terms[i].coeff * std::exp(th[i] - shift);
    return {acc, shift};
}

long double tau(const SolitonData& s, const Times& t) { return tau_scaled(s, t).value(); }

long double kp_u(const SolitonData& s, const Times& t) {
    // u = 2 (S2 S0 - S1^2) / S0^2 with S_p = sum c_I (sum kappa)^p e^{theta_I}.
    auto terms = tau_terms(s);
    long double shift = -1e30L;
    std::vector<long double> th(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        th[i] = theta_sum(s, terms[i].labels, t);
        shift = std::max(shift, th[i]);
    }
    long double s0 = 0, s1 = 0, s2 = 0;
    for (size_t i = 0; i < terms.size(); ++i) {
        long double w = terms[i].coeff * std::exp(th[i] - shift);
        s0 += w;
        s1 += w * terms[i].kappa_sum;
        s2 += w * terms[i].kappa_sum * terms[i].kappa_sum;
    }
    return 2.0L * (s2 * s0 - s1 * s1) / (s0 * s0);
}

long double DarbouxOperator::char_value(long double zeta) const {
    const int k = static_cast<int>(w.size());
    long double acc = 1;
    for (int i = 0; i < k; ++i) acc = acc * zeta - w[i];
    return acc;
}

DarbouxOperator darboux_coefficients(const SolitonData& s, const Times& t) {
    const int k = s.k(), n = s.n();
    // dx^m f_i = sum_j A_ij kappa_j^m e^{theta_j}; shift exponents per call.
    long double shift = -1e30L;
    std::vector<long double> th(n);
    for (int j = 1; j <= n; ++j) {
        th[j - 1] = theta(s, j, t);
        shift = std::max(shift, th[j - 1]);
    }
    auto fder = [&](int i, int m) {
        long double acc = 0;
        for (int j = 0; j < n; ++j) {
            long double kj = s.kappa[j].to_long_double();
            acc += s.A[i][j].to_long_double() * std::pow(kj, static_cast<long double>(m)) *
                   std::exp(th[j] - shift);
        }
        return acc;
    };
    // Solve sum_m w_m dx^{k-m} f_i = dx^k f_i.
    std::vector<std::vector<long double>> m(k, std::vector<long double>(k + 1));
    for (int i = 0; i < k; ++i) {
        for (int c = 0; c < k; ++c) m[i][c] = fder(i, k - 1 - c);
        m[i][k] = fder(i, k);
    }
    for (int c = 0; c < k; ++c) {
        int piv = c;
        for (int r = c + 1; r < k; ++r)
            if (std::fabs((double)m[r][c]) > std::fabs((double)m[piv][c])) piv = r;
        if (m[piv][c] == 0.0L) throw std::runtime_error("darboux: singular Wronskian at this time");
        std::swap(m[c], m[piv]);
        for (int r = 0; r < k; ++r) {
            if (r == c) continue;
            long double f = m[r][c] / m[c][c];
            for (int j = c; j <= k; ++j) m[r][j] -= f * m[c][j];
        }
    }
    DarbouxOperator op;
    op.w.resize(k);
    for (int c = 0; c < k; ++c) op.w[c] = m[c][k] / m[c][c];
    return op;
}

std::vector<Rat> darboux_exact_at_zero(const SolitonData& s) {
    const int k = s.k(), n = s.n();
    auto fder = [&](int i, int m) {
        Rat acc(0);
        for (int j = 0; j < n; ++j) acc += s.A[i][j] * rat_pow(s.kappa[j], m);
        return acc;
    };
    std::vector<std::vector<Rat>> mat(k, std::vector<Rat>(k + 1, Rat(0)));
    for (int i = 0; i < k; ++i) {
        for (int c = 0; c < k; ++c) mat[i][c] = fder(i, k - 1 - c);
        mat[i][k] = fder(i, k);
    }
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
            if (!mat[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("darboux: singular Wronskian at t = 0");
        std::swap(mat[c], mat[piv]);
        for (int r = 0; r < k; ++r) {
            if (r == c) continue;
            Rat f = mat[r][c] / mat[c][c];
            for (int j = c; j <= k; ++j) mat[r][j] -= f * mat[c][j];
        }
    }
    std::vector<Rat> w(k);
    for (int c = 0; c < k; ++c) w[c] = mat[c][k] / mat[c][c];
    return w;
}

std::vector<long double> real_roots(const std::vector<long double>& coeffs) {
    // Roots of a real-rooted polynomial by recursive critical-point bisection.
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d <= 0) return {};
    auto eval = [&](const std::vector<long double>& c, long double x) {
        long double acc = 0;
        for (long double ci : c) acc = acc * x + ci;
        return acc;
    };
    if (d == 1) return {-coeffs[1] / coeffs[0]};
    std::vector<long double> dcoef(d);
    for (int i = 0; i < d; ++i) dcoef[i] = coeffs[i] * (d - i);
    std::vector<long double> crit = real_roots(dcoef);
    std::sort(crit.begin(), crit.end());

    // Cauchy bound for the search interval.
    long double bound = 0;
    for (int i = 1; i <= d; ++i) bound = std::max(bound, (long double)std::fabs((double)(coeffs[i] / coeffs[0])));
    bound += 1;
    std::vector<long double> pts{-bound};
    for (long double c : crit)
        if (c > -bound && c < bound) pts.push_back(c);
    pts.push_back(bound);

    std::vector<long double> roots;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        long double a = pts[i], b = pts[i + 1];
        long double fa = eval(coeffs, a), fb = eval(coeffs, b);
        if (fa == 0.0L) { roots.push_back(a); continue; }
        if (fa * fb > 0) continue;
        for (int it = 0; it < 200; ++it) {
            long double mid = (a + b) / 2;
            long double fm = eval(coeffs, mid);
            if (fm == 0.0L) { a = b = mid; break; }
            if (fa * fm < 0) { b = mid; fb = fm; }
            else { a = mid; fa = fm; }
        }
        long double r = (a + b) / 2;
        // One Newton polish.
        long double fp = eval(dcoef, r);
        if (fp != 0.0L) r -= eval(coeffs, r) / fp;
        roots.push_back(r);
    }
    // Deduplicate near-coincident endpoints (multiple roots at critical points).
    std::sort(roots.begin(), roots.end());
    return roots;
}

SatoDivisor sato_divisor(const SolitonData& s, const Times& t0) {
    auto op = darboux_coefficients(s, t0);
    const int k = s.k();
    std::vector<long double> coeffs(k + 1);
    coeffs[0] = 1;
    for (int i = 1; i <= k; ++i) coeffs[i] = -op.w[i - 1];
    SatoDivisor d;
    d.roots = real_roots(coeffs);
    std::sort(d.roots.begin(), d.roots.end());
    long double k1 = s.kappa.front().to_long_double(), kn = s.kappa.back().to_long_double();
    long double span = kn - k1;
    if (static_cast<int>(d.roots.size()) != k) d.simple = false;
    for (size_t i = 0; i + 1 < d.roots.size(); ++i)
        if (d.roots[i + 1] - d.roots[i] <= 1e-7L * span) d.simple = false;
    for (long double r : d.roots)
        if (r < k1 - 1e-9L || r > kn + 1e-9L) d.in_range = false;
    return d;
}

std::vector<long double> dressed_edge_wave(const EdgeVectorSystem& sys, const SolitonData& s,
                                           const Times& t) {
    auto op = darboux_coefficients(s, t);
    const int n = s.n();
    std::vector<long double> dexp(n);
    for (int j = 1; j <= n; ++j)
        dexp[j - 1] = op.char_value(s.kappa[j - 1].to_long_double()) * std::exp(theta(s, j, t));
    std::vector<long double> out(sys.E.size());
    for (size_t e = 0; e < sys.E.size(); ++e) {
        long double acc = 0;
        for (int j = 0; j < n; ++j)
            if (!sys.E[e][j].is_zero()) acc += sys.E[e][j].to_long_double() * dexp[j];
        out[e] = acc;
    }
    return out;
}

Rat dressed_pair_exact0(const RatVec& v, const SolitonData& s, const std::vector<Rat>& w_exact) {
    const int k = s.k();
    Rat acc(0);
    for (int j = 0; j < s.n(); ++j) {
        if (v[j].is_zero()) continue;
        Rat p(1);
        for (int i = 0; i < k; ++i) p = p * s.kappa[j] - w_exact[i];
        acc += v[j] * p;
    }
    return acc;
}

std::vector<Rat> dressed_edge_wave_exact0(const EdgeVectorSystem& sys, const SolitonData& s,
                                          const std::vector<Rat>& w_exact) {
    std::vector<Rat> out(sys.E.size());
    for (size_t e = 0; e < sys.E.size(); ++e) out[e] = dressed_pair_exact0(sys.E[e], s, w_exact);
    return out;
}

ReferenceTime pick_reference_time(const EdgeVectorSystem& sys, const SolitonData& s) {
    ReferenceTime rt;
    std::vector<Rat> grid{Rat(0)};
    for (int i = 1; i <= 8; ++i) {
        grid.push_back(Rat(i, 4));
        grid.push_back(Rat(-i, 4));
    }
    std::ostringstream reasons;
    for (const Rat& x0 : grid) {
        bool exact = x0.is_zero();
        int bad_edge = -1;
        bool simple = true;
        if (exact) {
            try {
                auto w = darboux_exact_at_zero(s);
                auto psi = dressed_edge_wave_exact0(sys, s, w);
                for (size_t e = 0; e < psi.size() && bad_edge < 0; ++e)
                    if (psi[e].is_zero()) bad_edge = static_cast<int>(e);
            } catch (const std::exception&) {
                reasons << "x0=0: singular Wronskian; ";
                continue;
            }
        } else {
            Times t0{x0.to_long_double()};
            try {
                auto psi = dressed_edge_wave(sys, s, t0);
                long double scale = 0;
                for (long double p : psi) scale = std::max(scale, (long double)std::fabs((double)p));
                for (size_t e = 0; e < psi.size() && bad_edge < 0; ++e)
                    if (std::fabs((double)psi[e]) <= 1e-9L * scale) bad_edge = static_cast<int>(e);
            } catch (const std::exception&) {
                reasons << "x0=" << x0.str() << ": singular Wronskian; ";
                continue;
            }
        }
        if (bad_edge >= 0) {
            reasons << "x0=" << x0.str() << ": edge " << bad_edge << " vanishes; ";
            continue;
        }
        Times t0;
        if (!exact) t0.push_back(x0.to_long_double());
        auto sd = sato_divisor(s, t0);
        if (!sd.simple) {
            reasons << "x0=" << x0.str() << ": Sato roots not simple; ";
            simple = false;
        }
        if (!simple) continue;
        rt.ok = true;
        rt.x0 = x0;
        rt.exact = exact;
        return rt;
    }
    rt.reason = reasons.str();
    return rt;
}

long double kp_residual(const SolitonData& s, long double x, long double y, long double t,
                        long double h) {
    auto u = [&](long double xx, long double yy, long double tt) {
        return kp_u(s, Times{xx, yy, tt});
    };
    // G = -4 u_t + 6 u u_x + u_xxx (central differences)
    auto G = [&](long double xx) {
        long double ut = (u(xx, y, t + h) - u(xx, y, t - h)) / (2 * h);
        long double ux = (u(xx + h, y, t) - u(xx - h, y, t)) / (2 * h);
        long double uxxx = (u(xx + 2 * h, y, t) - 2 * u(xx + h, y, t) + 2 * u(xx - h, y, t) -
                            u(xx - 2 * h, y, t)) /
                           (2 * h * h * h);
        return -4 * ut + 6 * u(xx, y, t) * ux + uxxx;
    };
    long double gx = (G(x + h) - G(x - h)) / (2 * h);
    long double uyy = (u(x, y + h, t) - 2 * u(x, y, t) + u(x, y - h, t)) / (h * h);
    return gx + 3 * uyy;
}

} // namespace plabic
