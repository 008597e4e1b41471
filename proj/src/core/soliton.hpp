// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/vectors.hpp"

#include <string>
#include <vector>

namespace plabic {

/// KP times (t_1 = x, t_2 = y, t_3 = t, ...), finitely supported.
using Times = std::vector<long double>;

struct SolitonData {
    std::vector<Rat> kappa;   // strictly increasing phases
    std::vector<RatVec> A;    // k x n RREF matrix
    int k() const { return static_cast<int>(A.size()); }
    int n() const { return static_cast<int>(kappa.size()); }

    /// Checks ordering, nonnegative maximal minors, irreducibility.
    ValidationReport validate() const;
};

long double theta(const SolitonData& s, int j, const Times& t); // 1-based phase index

/// tau(t) = sum_I Delta_I prod (kappa差) e^{sum theta}; strictly positive for
/// totally nonnegative data. Computed with a per-call exponent shift; the
/// returned value is tau * exp(-shift) together with the shift.
struct ScaledValue {
    long double mantissa = 0;
    long double log_shift = 0;
    long double value() const; // may overflow for extreme times
};
ScaledValue tau_scaled(const SolitonData& s, const Times& t);
long double tau(const SolitonData& s, const Times& t);

/// u = 2 d^2/dx^2 log tau, evaluated analytically.
long double kp_u(const SolitonData& s, const Times& t);

struct DarbouxOperator {
    std::vector<long double> w; // coefficients w_1..w_k of D = dx^k - w_1 dx^{k-1} - ... - w_k
    /// D e^{theta_j} = char_value(kappa_j) e^{theta_j}.
    long double char_value(long double zeta) const;
};

/// Solves dx^k f_i = w_1 dx^{k-1} f_i + ... + w_k f_i for the heat-hierarchy
/// generators f_i built from the rows of A. Throws on singular Wronskian.
DarbouxOperator darboux_coefficients(const SolitonData& s, const Times& t);

/// Exact Darboux coefficients at t = 0 (all rational data).
std::vector<Rat> darboux_exact_at_zero(const SolitonData& s);

struct SatoDivisor {
    std::vector<long double> roots; // sorted ascending
    bool simple = true;             // pairwise gaps above tolerance
    bool in_range = true;           // within [kappa_1, kappa_n] up to 1e-9
};
/// Roots of zeta^k - w_1 zeta^{k-1} - ... - w_k at the given time.
SatoDivisor sato_divisor(const SolitonData& s, const Times& t0);

/// All real roots of the polynomial with the given coefficients
/// c[0] x^d + ... + c[d], assuming all roots are real.
std::vector<long double> real_roots(const std::vector<long double>& coeffs);

/// Dressed edge wave function Psi_e(t) = <E_e, D E_theta(t)> for every edge.
std::vector<long double> dressed_edge_wave(const EdgeVectorSystem& sys, const SolitonData& s,
                                           const Times& t);

/// Exact dressed values at t = 0: <v, D E_theta(0)> = sum_j v_j p(kappa_j).
Rat dressed_pair_exact0(const RatVec& v, const SolitonData& s, const std::vector<Rat>& w_exact);
std::vector<Rat> dressed_edge_wave_exact0(const EdgeVectorSystem& sys, const SolitonData& s,
                                          const std::vector<Rat>& w_exact);

struct ReferenceTime {
    bool ok = false;
    Rat x0;             // t0 = (x0, 0, 0, ...)
    bool exact = false; // x0 == 0 with rational inputs
    std::string reason; // failure description
    int offending_edge = -1;
};
/// Scans x0 over a small grid until every dressed edge value is nonzero and the
/// Sato roots are simple.
ReferenceTime pick_reference_time(const EdgeVectorSystem& sys, const SolitonData& s);

/// Central-difference residual of (-4u_t + 6u u_x + u_xxx)_x + 3u_yy at (x,y,t).
long double kp_residual(const SolitonData& s, long double x, long double y, long double t,
                        long double h);

} // namespace plabic
