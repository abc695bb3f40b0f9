#pragma once

// Markov triples: positive solutions of a^2 + b^2 + c^2 = 3abc, the
// companion modular condition, the Vieta-jumping tree, and an exhaustive
// verifier for the equivalence between the two characterizations.

#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mdsum/dedekind.hpp"
#include "mdsum/exact.hpp"

namespace mdsum {

class not_markov_error : public std::domain_error {
public:
    explicit not_markov_error(const triple& t)
        : std::domain_error("not a Markov triple: " + t.str()) {}
};

namespace detail {

inline void require_positive(const triple& t, const char* who) {
    if (t.a < 1 || t.b < 1 || t.c < 1)
        throw std::domain_error(std::string(who) + ": components must be >= 1");
}

}  // namespace detail

/// Sorted copy, a <= b <= c. Canonical form for enumeration and dedup.
inline triple normalized(triple t) {
    if (t.a > t.b) std::swap(t.a, t.b);
    if (t.b > t.c) std::swap(t.b, t.c);
    if (t.a > t.b) std::swap(t.a, t.b);
    return t;
}

/// a^2 + b^2 + c^2 = 3abc.
inline bool is_markov(const triple& t) {
    detail::require_positive(t, "is_markov");
    return t.a * t.a + t.b * t.b + t.c * t.c == 3 * t.a * t.b * t.c;
}

/// a^2+b^2 = 0 (mod c), b^2+c^2 = 0 (mod a), c^2+a^2 = 0 (mod b).
inline bool markov_condition(const triple& t) {
    detail::require_positive(t, "markov_condition");
    return (t.a * t.a + t.b * t.b) % t.c == 0 &&
           (t.b * t.b + t.c * t.c) % t.a == 0 &&
           (t.c * t.c + t.a * t.a) % t.b == 0;
}

inline bool pairwise_coprime(const triple& t) {
    detail::require_positive(t, "pairwise_coprime");
    return gcd(t.a, t.b) == 1 && gcd(t.b, t.c) == 1 && gcd(t.c, t.a) == 1;
}

/// The three Vieta jumps (3bc-a, b, c), (a, 3ac-b, c), (a, b, 3ab-c),
/// each normalized. Every neighbor of a Markov triple is again Markov:
/// the jump replaces one coordinate by the other root of the quadratic
/// that coordinate satisfies.
inline std::array<triple, 3> vieta_neighbors(const triple& t) {
    if (!is_markov(t)) throw not_markov_error(t);
    return {normalized({3 * t.b * t.c - t.a, t.b, t.c}),
            normalized({t.a, 3 * t.a * t.c - t.b, t.c}),
            normalized({t.a, t.b, 3 * t.a * t.b - t.c})};
}

/// All normalized Markov triples with max component <= bound, by
/// breadth-first Vieta jumping from (1,1,1). Complete because the
/// parent jump strictly decreases the maximum, so every triple reaches
/// (1,1,1) through triples that stay within the bound.
inline std::set<triple> enumerate_markov(const integer& bound) {
    if (bound < 1) throw std::domain_error("enumerate_markov: bound must be >= 1");
    std::set<triple> seen;
    std::deque<triple> work;
    triple root{1, 1, 1};
    seen.insert(root);
    work.push_back(root);
    while (!work.empty()) {
        triple t = work.front();
        work.pop_front();
        for (const triple& n : vieta_neighbors(t)) {
            if (n.c <= bound && !seen.contains(n)) {
                seen.insert(n);
                work.push_back(n);
            }
        }
    }
    return seen;
}

/// Independent check of the tree: for pairs a <= b, solve
/// c^2 - 3abc + (a^2+b^2) = 0 by integer root testing and keep roots with
/// b <= c <= bound.
///
/// Range reduction: the larger root is at least 3ab/2, so it can only be
/// kept when 3ab <= 2*bound; and a kept SMALLER root forces a = b = 1
/// (for b >= 2 the smaller root drops below b). Scanning
/// {(1,1)} union {a <= b : 3ab <= 2*bound} is therefore exhaustive.
inline std::set<triple> enumerate_markov_oracle(const integer& bound) {
    if (bound < 1) throw std::domain_error("enumerate_markov_oracle: bound must be >= 1");
    std::set<triple> out;
    const integer cap = bound == 1 ? integer(3) : integer(2 * bound);
    for (integer a = 1; 3 * a * a <= cap; ++a) {
        for (integer b = a; 3 * a * b <= cap; ++b) {
            integer disc = 9 * a * a * b * b - 4 * (a * a + b * b);
            if (disc < 0) continue;
            integer s = boost::multiprecision::sqrt(disc);
            if (s * s != disc) continue;
            // disc = (3ab)^2 (mod 2), so s and 3ab share parity and both
            // roots are integers.
            for (const integer& c : {integer((3 * a * b - s) / 2), integer((3 * a * b + s) / 2)}) {
                if (b <= c && c <= bound) out.insert(triple{a, b, c});
            }
        }
    }
    return out;
}

struct verify_counterexample {
    triple t;
    std::string which;  // direction that failed
};

/// Outcome of an exhaustive equivalence sweep. Passes iff there are no
/// counterexamples and the three characterizations carve out the same set.
struct verify_report {
    integer bound;
    std::set<triple> eq1_set;    // satisfy the Markov equation
    std::set<triple> cond2_set;  // satisfy the modular condition
    std::set<triple> dzero_set;  // all three Rademacher sums vanish
    std::vector<verify_counterexample> counterexamples;
    std::uint64_t scanned = 0;    // pairwise-coprime normalized triples seen
    std::uint64_t evaluated = 0;  // triples whose D-sums were computed

    bool passed() const {
        return counterexamples.empty() && eq1_set == cond2_set && cond2_set == dzero_set;
    }
};

/// Scan all normalized pairwise-coprime triples with c <= bound. The
/// cheap predicates run on every triple; the three Rademacher sums run on
/// every interesting triple (member of eq1 or cond2) plus a fixed-seed
/// reservoir sample of the rest, since the full cubic range is decided by
/// the modular condition alone.
inline verify_report verify_equivalence(const integer& bound,
                                        std::size_t sample_size = 10000,
                                        std::uint64_t seed = 0xC0FFEE) {
    if (bound < 1) throw std::domain_error("verify_equivalence: bound must be >= 1");
    if (bound > 1000000)
        throw bound_error("verify_equivalence: bound too large for an exhaustive scan");
    const long long n = bound.convert_to<long long>();

    verify_report rep;
    rep.bound = bound;

    struct raw { long long a, b, c; };
    std::vector<raw> interesting;
    std::vector<raw> pool;  // reservoir of non-interesting scanned triples
    pool.reserve(sample_size);
    std::mt19937_64 rng(seed);
    std::uint64_t others = 0;

    for (long long a = 1; a <= n; ++a) {
        for (long long b = a; b <= n; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long long c = b; c <= n; ++c) {
                if (std::gcd(b, c) != 1 || std::gcd(a, c) != 1) continue;
                ++rep.scanned;
                const __int128 sq = static_cast<__int128>(a) * a +
                                    static_cast<__int128>(b) * b +
                                    static_cast<__int128>(c) * c;
                const bool eq1 = sq == static_cast<__int128>(3) * a * b * c;
                const bool cond2 = (a * a + b * b) % c == 0 && (b * b + c * c) % a == 0 &&
                                   (c * c + a * a) % b == 0;
                if (eq1) rep.eq1_set.insert(triple{a, b, c});
                if (cond2) rep.cond2_set.insert(triple{a, b, c});
                if (eq1 != cond2)
                    rep.counterexamples.push_back(
                        {triple{a, b, c}, eq1 ? "eq1_without_cond2" : "cond2_without_eq1"});
                if (eq1 || cond2) {
                    interesting.push_back({a, b, c});
                } else {
                    if (pool.size() < sample_size) {
                        pool.push_back({a, b, c});
                    } else if (sample_size > 0) {
                        std::uint64_t j = rng() % (others + 1);
                        if (j < sample_size) pool[static_cast<std::size_t>(j)] = {a, b, c};
                    }
                    ++others;
                }
            }
        }
    }

    auto evaluate = [&](const raw& r, bool cond2) {
        triple t{r.a, r.b, r.c};
        const bool dzero = rademacher_sum(t.a, t.b, t.c).is_zero() &&
                           rademacher_sum(t.b, t.c, t.a).is_zero() &&
                           rademacher_sum(t.c, t.a, t.b).is_zero();
        ++rep.evaluated;
        if (dzero) rep.dzero_set.insert(t);
        if (cond2 != dzero)
            rep.counterexamples.push_back(
                {t, cond2 ? "cond2_without_dzero" : "dzero_without_cond2"});
    };

    for (const raw& r : interesting)
        evaluate(r, rep.cond2_set.contains(triple{r.a, r.b, r.c}));
    for (const raw& r : pool) evaluate(r, false);

    return rep;
}

}  // namespace mdsum
