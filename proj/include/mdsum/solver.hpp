#pragma once

// Positive-integer solutions of a^2 + b^2 + c^2 = abc * f(a,b,c).
//
// Structure of the solution set: writing k = gcd(a,b,c) and
// (a,b,c) = k*(a0,b0,c0), only k = 1 and k = 3 can occur. The k = 1
// solutions are exactly the Markov triples where f evaluates to 3; the
// k = 3 solutions are exactly 3*(Markov core) where f evaluates to 1.
// solve() enumerates both branches from the Markov tree; the brute-force
// cube scan is the independent oracle.

#include <algorithm>
#include <set>
#include <vector>

#include "mdsum/exact.hpp"
#include "mdsum/markov.hpp"
#include "mdsum/poly.hpp"

namespace mdsum {

struct gcd_reduction {
    integer k;    // gcd(a, b, c)
    triple core;  // (a, b, c) / k, componentwise
};

inline gcd_reduction gcd_reduce(const triple& t) {
    detail::require_positive(t, "gcd_reduce");
    integer k = gcd(gcd(t.a, t.b), t.c);
    return {k, triple{t.a / k, t.b / k, t.c / k}};
}

enum class solve_verdict {
    provably_empty,       // f - 3 nonzero with nonnegative coefficients
    solutions_are_markov, // f == 3
    solutions_are_3x_markov,  // f == 1
    unknown,
};

inline const char* to_string(solve_verdict v) {
    switch (v) {
        case solve_verdict::provably_empty: return "ProvablyEmpty";
        case solve_verdict::solutions_are_markov: return "SolutionsAreMarkov";
        case solve_verdict::solutions_are_3x_markov: return "SolutionsAre3Markov";
        case solve_verdict::unknown: return "Unknown";
    }
    return "Unknown";
}

/// Symbolic fast path. f == 3 reduces the equation to the Markov
/// equation; f == 1 forces the k = 3 branch with every scaled core
/// admissible; and when f - 3 is nonzero with nonnegative coefficients,
/// f > 3 (and so f != 1) at every positive point, killing both branches.
inline solve_verdict precheck(const polynomial& f) {
    if (auto c = f.is_const()) {
        if (*c == 3) return solve_verdict::solutions_are_markov;
        if (*c == 1) return solve_verdict::solutions_are_3x_markov;
    }
    polynomial g = f.subtract_const(3);
    if (!g.is_zero() && g.is_nonneg_coeffs()) return solve_verdict::provably_empty;
    return solve_verdict::unknown;
}

/// The distinct permutations of t, sorted; 6, 3 or 1 of them.
inline std::vector<triple> distinct_permutations(const triple& t) {
    std::set<triple> out;
    integer v[3] = {t.a, t.b, t.c};
    std::sort(v, v + 3);
    do {
        out.insert(triple{v[0], v[1], v[2]});
    } while (std::next_permutation(v, v + 3));
    return {out.begin(), out.end()};
}

struct solve_report {
    polynomial f;
    integer bound;
    std::vector<triple> solutions;  // ordered triples, lexicographic
    std::vector<triple> branch_k1;  // Markov cores contributing gcd-1 solutions
    std::vector<triple> branch_k3;  // Markov cores contributing gcd-3 solutions
    solve_verdict precheck_verdict = solve_verdict::unknown;
};

/// All ordered triples in [1,bound]^3 solving the equation. The two
/// branches expand distinct permutations of the enumerated Markov
/// triples (f is not assumed symmetric) and filter on the exact value of
/// f; every emitted solution is re-verified against the equation.
inline solve_report solve(const polynomial& f, const integer& bound) {
    if (bound < 1) throw std::domain_error("solve: bound must be >= 1");
    solve_report rep;
    rep.f = f;
    rep.bound = bound;
    rep.precheck_verdict = precheck(f);

    std::set<triple> solutions;
    std::set<triple> k1_cores, k3_cores;

    for (const triple& m : enumerate_markov(bound)) {
        for (const triple& p : distinct_permutations(m)) {
            if (f.evaluate(p) == 3) {
                solutions.insert(p);
                k1_cores.insert(m);
            }
        }
    }
    const integer core_bound = bound / 3;
    if (core_bound >= 1) {
        for (const triple& m : enumerate_markov(core_bound)) {
            const triple scaled{3 * m.a, 3 * m.b, 3 * m.c};
            for (const triple& p : distinct_permutations(scaled)) {
                if (f.evaluate(p) == 1) {
                    solutions.insert(p);
                    k3_cores.insert(m);
                }
            }
        }
    }

    for (const triple& s : solutions) {
        if (s.a * s.a + s.b * s.b + s.c * s.c != s.a * s.b * s.c * f.evaluate(s))
            throw std::logic_error("solve: emitted solution failed re-verification");
    }

    rep.solutions.assign(solutions.begin(), solutions.end());
    rep.branch_k1.assign(k1_cores.begin(), k1_cores.end());
    rep.branch_k3.assign(k3_cores.begin(), k3_cores.end());
    return rep;
}

/// Scan of the full cube [1,bound]^3, the independent oracle. The right
/// side is divisible by abc, so abc | a^2+b^2+c^2 filters candidates
/// before f is evaluated.
inline std::vector<triple> solve_bruteforce(const polynomial& f, const integer& bound) {
    if (bound < 1) throw std::domain_error("solve_bruteforce: bound must be >= 1");
    if (bound > 500) throw bound_error("solve_bruteforce: bound must be <= 500");
    const long long n = bound.convert_to<long long>();
    std::vector<triple> out;
    for (long long a = 1; a <= n; ++a) {
        for (long long b = 1; b <= n; ++b) {
            for (long long c = 1; c <= n; ++c) {
                const long long lhs = a * a + b * b + c * c;
                if (lhs % (a * b * c) != 0) continue;
                triple t{a, b, c};
                if (integer(lhs) == integer(a) * b * c * f.evaluate(t)) out.push_back(t);
            }
        }
    }
    return out;  // loop order is already lexicographic
}

}  // namespace mdsum
