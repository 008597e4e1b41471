// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace plabic {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always normalized: den > 0, gcd(num, den) == 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rat parse(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat operator-() const { Rat r(*this); r.num_ = -r.num_; return r; }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += -o; }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat inv() const {
        if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
        return Rat(den_, num_);
    }
    Rat abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const;
    long double to_long_double() const;

    /// "p" when den == 1, else "p/q".
    std::string str() const;

private:
    void normalize();
    BigInt num_, den_;
};

Rat rat_pow(const Rat& base, long long e);

} // namespace plabic
