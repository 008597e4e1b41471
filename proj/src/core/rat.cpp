// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#include "core/rat.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace plabic {

void Rat::normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    if (num_ == 0) { den_ = 1; return; }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        bool neg = !digits.empty() && digits[0] == '-';
        std::string mag = neg ? digits.substr(1) : digits;
        size_t first = mag.find_first_not_of('0');
        mag = first == std::string::npos ? "0" : mag.substr(first);
        BigInt n(mag);
        if (neg) n = -n;
        BigInt d = 1;
        for (size_t i = 0; i < frac_len; ++i) d *= 10;
        return Rat(n, d);
    }
    return Rat(BigInt(s));
}

double Rat::to_double() const { return static_cast<double>(to_long_double()); }

long double Rat::to_long_double() const {
    using F = boost::multiprecision::cpp_bin_float_quad;
    F v = F(num_) / F(den_);
    return static_cast<long double>(v);
}

std::string Rat::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rat rat_pow(const Rat& base, long long e) {
    if (e < 0) return rat_pow(base.inv(), -e);
    Rat r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace plabic
