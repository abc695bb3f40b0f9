#pragma once

// Exact arithmetic substrate: arbitrary-precision integers, normalized
// rationals, gcd, modular inverse and the sawtooth function ((x)).
//
// Everything downstream (Dedekind sums, Markov predicates, the solver)
// computes in Q; zero tests must be certifiable, so no floating point
// appears here.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace mdsum {

using integer = boost::multiprecision::cpp_int;

class not_coprime_error : public std::domain_error {
public:
    not_coprime_error(const integer& x, const integer& y)
        : std::domain_error("not coprime: gcd(" + x.str() + ", " + y.str() + ") != 1") {}
};

class bound_error : public std::domain_error {
public:
    explicit bound_error(const std::string& what) : std::domain_error(what) {}
};

/// Nonnegative gcd; gcd(0,0) = 0.
inline integer gcd(const integer& x, const integer& y) {
    integer g = boost::multiprecision::gcd(x, y);
    return g < 0 ? integer(-g) : g;
}

/// x reduced into [0, m) for m >= 1.
inline integer floor_mod(const integer& x, const integer& m) {
    integer r = x % m;
    if (r < 0) r += m;
    return r;
}

/// Inverse of b modulo a: the unique b' in [0, a) with b*b' = 1 (mod a).
/// mod_inverse(b, 1) = 0. Throws not_coprime_error when gcd(b, a) != 1.
inline integer mod_inverse(const integer& b, const integer& a) {
    if (a < 1) throw std::domain_error("mod_inverse: modulus must be >= 1");
    integer r0 = a, r1 = floor_mod(b, a);
    integer t0 = 0, t1 = 1;
    while (r1 != 0) {
        integer q = r0 / r1;
        integer r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        integer t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (a == 1) return 0;
    if (r0 != 1) throw not_coprime_error(b, a);
    return floor_mod(t0, a);
}

/// Exact rational, always in lowest terms with positive denominator;
/// zero is 0/1. Serializes as "p/q" ("n" when the denominator is 1).
class rat {
public:
    rat() : num_(0), den_(1) {}
    rat(integer n) : num_(std::move(n)), den_(1) {}          // NOLINT: implicit by design
    rat(long long n) : num_(n), den_(1) {}                   // NOLINT
    rat(integer n, integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// Trusted constructor: (n, d) already in lowest terms with d > 0.
    static rat from_reduced(integer n, integer d) {
        rat r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    const integer& num() const { return num_; }
    const integer& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend rat operator+(const rat& x, const rat& y) {
        return rat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend rat operator-(const rat& x, const rat& y) {
        return rat(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend rat operator*(const rat& x, const rat& y) {
        return rat(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend rat operator/(const rat& x, const rat& y) {
        if (y.num_ == 0) throw std::domain_error("rat: division by zero");
        return rat(x.num_ * y.den_, x.den_ * y.num_);
    }
    rat operator-() const { return from_reduced(-num_, den_); }

    rat& operator+=(const rat& x) { return *this = *this + x; }
    rat& operator-=(const rat& x) { return *this = *this - x; }
    rat& operator*=(const rat& x) { return *this = *this * x; }

    friend bool operator==(const rat& x, const rat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const rat& x, const rat& y) { return !(x == y); }
    friend bool operator<(const rat& x, const rat& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const rat& x, const rat& y) { return y < x; }
    friend bool operator<=(const rat& x, const rat& y) { return !(y < x); }
    friend bool operator>=(const rat& x, const rat& y) { return !(x < y); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    friend std::ostream& operator<<(std::ostream& os, const rat& x) {
        return os << x.str();
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        integer g = mdsum::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    integer num_, den_;
};

inline rat abs(const rat& x) { return x.num() < 0 ? -x : x; }

/// Sawtooth ((p/q)) = p/q - floor(p/q) - 1/2, and 0 when q | p.
/// Odd and 1-periodic; q must be >= 1.
inline rat sawtooth(const integer& p, const integer& q) {
    if (q < 1) throw std::domain_error("sawtooth: q must be >= 1");
    integer r = floor_mod(p, q);
    if (r == 0) return rat();
    return rat(2 * r - q, 2 * q);
}

/// Ordered positive-integer triple (a, b, c); the universal argument object.
struct triple {
    integer a, b, c;

    friend bool operator==(const triple& x, const triple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const triple& x, const triple& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }

    std::string str() const {
        return "[" + a.str() + ", " + b.str() + ", " + c.str() + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const triple& t) {
        return os << t.str();
    }
};

}  // namespace mdsum
