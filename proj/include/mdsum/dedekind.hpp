#pragma once

// Dedekind sums s(a;b) and Dedekind-Rademacher sums D(a;b,c), exactly.
//
// Notation: the first argument is the modulus. s(a;b) is the classical
// Dedekind sum with modulus a and multiplier b,
//
//     s(a;b) = sum_{k=1}^{a-1} ((k/a)) ((bk/a)),
//
// and D(a;b,c) = (1/a) sum_{k=1}^{a-1} cot(pi*b*k/a) cot(pi*c*k/a)
//              = 4 * sum_{k=1}^{a-1} ((bk/a)) ((ck/a)).
//
// D reduces to the two-argument sum through the inverse b' of b mod a:
// D(a;b,c) = D(a;1,b'c) = 4 s(a;b'c). The cotangent form survives only
// as a floating cross-check (rademacher_sum_float); every exact value is
// computed in Q via the sawtooth identity, since the zero conditions
// need certifiable zeros.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "mdsum/exact.hpp"

namespace mdsum {

class not_pairwise_coprime_error : public std::domain_error {
public:
    not_pairwise_coprime_error(const integer& x, const integer& y)
        : std::domain_error("not pairwise coprime: gcd(" + x.str() + ", " + y.str() +
                            ") != 1") {}
};

namespace detail {

// Arguments at or below this bound take the int64/__int128 path.
//
// Overflow budget, using den(s(a;b)) | 6a (6a*s(a;b) is an integer) and
// |s(a;b)| < a/4: every normalized partial sum of the reciprocity
// recursion equals s(a0;b0) -+ s(ai;bi), so its denominator divides
// 6*lcm(a0,ai) <= 6B^2 and its numerator is below 3B^3; the running
// common denominator divides 12*a0*ai*bi <= 12B^3 < 2^63 at B = 5*10^5,
// and cross products stay far under 2^127.
constexpr long long small_arg_limit = 500000;

constexpr long long float_arg_limit = 1000000;

inline bool fits_small(const integer& a) {
    return a <= small_arg_limit;
}

// s(a;b) for 1 <= b < a, gcd(a,b) = 1, a <= small_arg_limit.
// One Euclidean step folds s(a;b) = -s(b; a mod b) + (a^2+b^2+1-3ab)/(12ab).
inline std::pair<long long, long long> dedekind_fast_i64(long long a, long long b) {
    long long n = 0, d = 1;
    int sign = 1;
    while (b != 0) {
        long long p = a * a + b * b + 1 - 3 * a * b;
        long long q = 12 * a * b;
        if (sign < 0) p = -p;
        long long g1 = std::gcd(d, q);
        long long dq = d / g1;
        __int128 num = static_cast<__int128>(n) * (q / g1) + static_cast<__int128>(p) * dq;
        long long den = d * (q / g1);
        if (num == 0) {
            n = 0;
            d = 1;
        } else {
            unsigned __int128 mag = num < 0 ? static_cast<unsigned __int128>(-num)
                                            : static_cast<unsigned __int128>(num);
            long long g = std::gcd(static_cast<long long>(mag % den), den);
            n = static_cast<long long>(num / g);
            d = den / g;
        }
        sign = -sign;
        long long t = a % b;
        a = b;
        b = t;
    }
    return {n, d};
}

// Extended Euclid in int64; caller guarantees gcd(b, a) = 1, 0 <= b < a.
inline long long mod_inverse_i64(long long b, long long a) {
    long long r0 = a, r1 = b, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        long long t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    return t0 < 0 ? t0 + a : t0;
}

}  // namespace detail

/// s(a;b) by direct summation of sawtooth products, O(a).
/// Factoring ((k/a)) = (2k - a)/(2a) turns the sum into a single integer
/// accumulation T with s = T / (4a^2), exactly.
inline rat dedekind_sum(const integer& a, const integer& b) {
    if (a < 1) throw std::domain_error("dedekind_sum: modulus must be >= 1");
    if (gcd(a, b) != 1) throw not_coprime_error(a, b);
    if (a == 1) return rat();
    if (detail::fits_small(a)) {
        const long long m = a.convert_to<long long>();
        const long long step = floor_mod(b, a).convert_to<long long>();
        long long r = 0, acc = 0;
        for (long long k = 1; k < m; ++k) {
            r += step;
            if (r >= m) r -= m;
            acc += (2 * k - m) * (2 * r - m);
        }
        return rat(integer(acc), 4 * a * a);
    }
    integer r = 0, acc = 0;
    const integer step = floor_mod(b, a);
    for (integer k = 1; k < a; ++k) {
        r += step;
        if (r >= a) r -= a;
        acc += (2 * k - a) * (2 * r - a);
    }
    return rat(acc, 4 * a * a);
}

/// s(a;b) in O(log a) steps via the two-term reciprocity law
/// s(a;b) + s(b;a) = -1/4 + (a/b + b/a + 1/(ab))/12 and periodicity.
/// Equal to dedekind_sum on every valid input.
inline rat dedekind_sum_fast(const integer& a, const integer& b) {
    if (a < 1) throw std::domain_error("dedekind_sum_fast: modulus must be >= 1");
    if (gcd(a, b) != 1) throw not_coprime_error(a, b);
    if (a == 1) return rat();
    if (detail::fits_small(a)) {
        auto [n, d] = detail::dedekind_fast_i64(a.convert_to<long long>(),
                                                floor_mod(b, a).convert_to<long long>());
        return rat::from_reduced(integer(n), integer(d));
    }
    integer aa = a, bb = floor_mod(b, a);
    rat s;
    int sign = 1;
    while (bb != 0) {
        integer p = aa * aa + bb * bb + 1 - 3 * aa * bb;
        if (sign < 0) p = -p;
        s += rat(p, 12 * aa * bb);
        sign = -sign;
        integer t = aa % bb;
        aa = bb;
        bb = t;
    }
    return s;
}

/// D(a;b,c) via the reduction D(a;b,c) = 4 s(a; b'c), b' = inverse of b mod a.
inline rat rademacher_sum(const integer& a, const integer& b, const integer& c) {
    if (a < 1) throw std::domain_error("rademacher_sum: modulus must be >= 1");
    if (gcd(a, b) != 1) throw not_coprime_error(a, b);
    if (gcd(a, c) != 1) throw not_coprime_error(a, c);
    if (a == 1) return rat();
    if (detail::fits_small(a)) {
        const long long m = a.convert_to<long long>();
        const long long bm = floor_mod(b, a).convert_to<long long>();
        const long long cm = floor_mod(c, a).convert_to<long long>();
        const long long binv = detail::mod_inverse_i64(bm, m);
        auto [n, d] = detail::dedekind_fast_i64(m, binv * cm % m);
        // 4n/d in lowest terms: gcd(n, d) = 1, so only gcd(4, d) cancels.
        long long g = std::gcd(4LL, d);
        return rat::from_reduced(integer(4 / g * n), integer(d / g));
    }
    integer m = floor_mod(mod_inverse(b, a) * floor_mod(c, a), a);
    return rat(4) * dedekind_sum_fast(a, m);
}

/// D(a;b,c) by direct summation, 4 * sum ((bk/a))((ck/a)); O(a).
/// The test oracle for the reduction path.
inline rat rademacher_sum_naive(const integer& a, const integer& b, const integer& c) {
    if (a < 1) throw std::domain_error("rademacher_sum_naive: modulus must be >= 1");
    if (gcd(a, b) != 1) throw not_coprime_error(a, b);
    if (gcd(a, c) != 1) throw not_coprime_error(a, c);
    if (a == 1) return rat();
    if (detail::fits_small(a)) {
        const long long m = a.convert_to<long long>();
        const long long sb = floor_mod(b, a).convert_to<long long>();
        const long long sc = floor_mod(c, a).convert_to<long long>();
        long long r1 = 0, r2 = 0, acc = 0;
        for (long long k = 1; k < m; ++k) {
            r1 += sb;
            if (r1 >= m) r1 -= m;
            r2 += sc;
            if (r2 >= m) r2 -= m;
            acc += (2 * r1 - m) * (2 * r2 - m);
        }
        return rat(integer(acc), a * a);
    }
    integer r1 = 0, r2 = 0, acc = 0;
    const integer sb = floor_mod(b, a), sc = floor_mod(c, a);
    for (integer k = 1; k < a; ++k) {
        r1 += sb;
        if (r1 >= a) r1 -= a;
        r2 += sc;
        if (r2 >= a) r2 -= a;
        acc += (2 * r1 - a) * (2 * r2 - a);
    }
    return rat(acc, a * a);
}

/// Floating-point evaluation of the literal cotangent sum
/// (1/a) sum cot(pi*b*k/a) cot(pi*c*k/a); cross-validates the exact route.
inline double rademacher_sum_float(const integer& a, const integer& b, const integer& c) {
    if (a < 1) throw std::domain_error("rademacher_sum_float: modulus must be >= 1");
    if (gcd(a, b) != 1) throw not_coprime_error(a, b);
    if (gcd(a, c) != 1) throw not_coprime_error(a, c);
    if (a > detail::float_arg_limit)
        throw bound_error("rademacher_sum_float: modulus exceeds " +
                          std::to_string(detail::float_arg_limit));
    const long long m = a.convert_to<long long>();
    if (m == 1) return 0.0;
    // cot(pi r / m) table; cot(pi (m-r)/m) = -cot(pi r/m).
    std::vector<double> cot(static_cast<std::size_t>(m), 0.0);
    for (long long r = 1; 2 * r <= m; ++r) {
        double v = 1.0 / std::tan(std::numbers::pi * static_cast<double>(r) /
                                  static_cast<double>(m));
        cot[static_cast<std::size_t>(r)] = v;
        if (r != m - r) cot[static_cast<std::size_t>(m - r)] = -v;
    }
    if (m % 2 == 0) cot[static_cast<std::size_t>(m / 2)] = 0.0;
    const long long sb = floor_mod(b, a).convert_to<long long>();
    const long long sc = floor_mod(c, a).convert_to<long long>();
    long long r1 = 0, r2 = 0;
    double acc = 0.0;
    for (long long k = 1; k < m; ++k) {
        r1 += sb;
        if (r1 >= m) r1 -= m;
        r2 += sc;
        if (r2 >= m) r2 -= m;
        acc += cot[static_cast<std::size_t>(r1)] * cot[static_cast<std::size_t>(r2)];
    }
    return acc / static_cast<double>(m);
}

/// Modular test b^2 + 1 = 0 (mod a). Its equivalence with s(a;b) = 0 is a
/// verified property of the suite, not an assumption of this predicate.
inline bool s_zero_condition(const integer& a, const integer& b) {
    if (a < 1) throw std::domain_error("s_zero_condition: modulus must be >= 1");
    if (gcd(a, b) != 1) throw not_coprime_error(a, b);
    return (b * b + 1) % a == 0;
}

/// Modular test b^2 + c^2 = 0 (mod a), the zero condition for D(a;b,c).
inline bool d_zero_condition(const integer& a, const integer& b, const integer& c) {
    if (a < 1) throw std::domain_error("d_zero_condition: modulus must be >= 1");
    if (gcd(a, b) != 1) throw not_coprime_error(a, b);
    if (gcd(a, c) != 1) throw not_coprime_error(a, c);
    return (b * b + c * c) % a == 0;
}

/// D(a;b,c) + D(b;c,a) + D(c;a,b) - ((a^2+b^2+c^2)/(3abc) - 1).
/// Exactly zero for every pairwise coprime positive triple.
inline rat reciprocity_defect(const integer& a, const integer& b, const integer& c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::domain_error("reciprocity_defect: arguments must be >= 1");
    if (gcd(a, b) != 1) throw not_pairwise_coprime_error(a, b);
    if (gcd(b, c) != 1) throw not_pairwise_coprime_error(b, c);
    if (gcd(c, a) != 1) throw not_pairwise_coprime_error(c, a);
    rat lhs = rademacher_sum(a, b, c) + rademacher_sum(b, c, a) + rademacher_sum(c, a, b);
    rat rhs = rat(a * a + b * b + c * c, 3 * a * b * c) - rat(1);
    return lhs - rhs;
}

}  // namespace mdsum
