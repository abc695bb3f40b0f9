#pragma once

// Command-line surface. Exit codes: 0 success, 1 domain errors (violated
// preconditions such as non-coprime arguments), 2 usage and syntax
// errors. Output is byte-deterministic for a fixed argv: collections are
// sorted, sampling is seeded, JSON keys are ordered.

#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdsum/dedekind.hpp"
#include "mdsum/exact.hpp"
#include "mdsum/markov.hpp"
#include "mdsum/poly.hpp"
#include "mdsum/solver.hpp"

namespace mdsum::cli {

class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

using json = nlohmann::json;

inline integer parse_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw usage_error("invalid integer '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw usage_error("invalid integer '" + s + "'");
    return integer(s);
}

inline std::uint64_t parse_u64(const std::string& s) {
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(s, &pos, 0);
        if (pos != s.size()) throw usage_error("invalid count '" + s + "'");
        return v;
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("invalid count '" + s + "'");
    }
}

struct parsed {
    std::vector<std::string> positional;
    std::map<std::string, std::string> values;
    std::set<std::string> switches;

    bool has(const std::string& flag) const {
        return values.contains(flag) || switches.contains(flag);
    }
    const std::string& value(const std::string& flag) const {
        auto it = values.find(flag);
        if (it == values.end()) throw usage_error("missing required flag --" + flag);
        return it->second;
    }
};

inline parsed parse_args(const std::vector<std::string>& args, std::size_t start,
                         const std::set<std::string>& value_flags,
                         const std::set<std::string>& switch_flags) {
    parsed p;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (tok.rfind("--", 0) == 0) {
            const std::string name = tok.substr(2);
            if (value_flags.contains(name)) {
                if (i + 1 >= args.size())
                    throw usage_error("flag --" + name + " requires a value");
                p.values[name] = args[++i];
            } else if (switch_flags.contains(name)) {
                p.switches.insert(name);
            } else {
                throw usage_error("unknown flag " + tok);
            }
        } else {
            p.positional.push_back(tok);
        }
    }
    return p;
}

inline json json_int(const integer& x) {
    if (x >= std::numeric_limits<long long>::min() &&
        x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return x.str();
}

inline json json_triple(const triple& t) {
    return json::array({json_int(t.a), json_int(t.b), json_int(t.c)});
}

template <typename Range>
inline json json_triples(const Range& ts) {
    json arr = json::array();
    for (const triple& t : ts) arr.push_back(json_triple(t));
    return arr;
}

inline void expect_positionals(const parsed& p, std::size_t n, const char* usage) {
    if (p.positional.size() != n)
        throw usage_error(std::string("expected ") + std::to_string(n) +
                          " positional argument(s); usage: " + usage);
}

inline void emit_value(const rat& v, bool as_json, std::ostream& out) {
    if (as_json) {
        json j;
        j["value"] = v.str();
        out << j.dump() << "\n";
    } else {
        out << v.str() << "\n";
    }
}

inline const char* usage_text() {
    return
        "usage: mdsum <command> [args]\n"
        "\n"
        "commands:\n"
        "  dsum <a> <b> [--json]                 Dedekind sum s(a;b)\n"
        "  rsum <a> <b> <c> [--json]             Dedekind-Rademacher sum D(a;b,c)\n"
        "  defect <a> <b> <c> [--json]           three-term reciprocity defect\n"
        "  markov list --max N [--json]          normalized Markov triples with max <= N\n"
        "  markov check <a> <b> <c> [--json]     Markov equation / condition / coprimality\n"
        "  verify equivalence --max N [--sample S] [--seed X] [--json]\n"
        "                                        exhaustive equivalence sweep\n"
        "  solve --f \"<expr>\" --max N [--json]   solve a^2+b^2+c^2 = abc*f(a,b,c)\n"
        "  oracle --f \"<expr>\" --max N [--json]  brute-force cube scan (N <= 500)\n"
        "  help                                  this message\n"
        "\n"
        "polynomials use variables a, b, c with + - * ^ and parentheses,\n"
        "e.g. \"3\", \"a+b+c\", \"a^2*b - 2*c + 7\". exact rationals print as \"p/q\".\n";
}

inline int cmd_dsum(const std::vector<std::string>& args, std::ostream& out) {
    parsed p = parse_args(args, 1, {}, {"json"});
    expect_positionals(p, 2, "dsum <a> <b> [--json]");
    emit_value(dedekind_sum_fast(parse_integer(p.positional[0]), parse_integer(p.positional[1])),
               p.has("json"), out);
    return 0;
}

inline int cmd_rsum(const std::vector<std::string>& args, std::ostream& out) {
    parsed p = parse_args(args, 1, {}, {"json"});
    expect_positionals(p, 3, "rsum <a> <b> <c> [--json]");
    emit_value(rademacher_sum(parse_integer(p.positional[0]), parse_integer(p.positional[1]),
                              parse_integer(p.positional[2])),
               p.has("json"), out);
    return 0;
}

inline int cmd_defect(const std::vector<std::string>& args, std::ostream& out) {
    parsed p = parse_args(args, 1, {}, {"json"});
    expect_positionals(p, 3, "defect <a> <b> <c> [--json]");
    emit_value(reciprocity_defect(parse_integer(p.positional[0]),
                                  parse_integer(p.positional[1]),
                                  parse_integer(p.positional[2])),
               p.has("json"), out);
    return 0;
}

inline int cmd_markov(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() < 2) throw usage_error("usage: markov <list|check> ...");
    const std::string& sub = args[1];
    if (sub == "list") {
        parsed p = parse_args(args, 2, {"max"}, {"json"});
        expect_positionals(p, 0, "markov list --max N [--json]");
        const integer bound = parse_integer(p.value("max"));
        const auto triples = enumerate_markov(bound);
        if (p.has("json")) {
            json j;
            j["bound"] = json_int(bound);
            j["count"] = triples.size();
            j["triples"] = json_triples(triples);
            out << j.dump() << "\n";
        } else {
            for (const triple& t : triples) out << t.str() << "\n";
        }
        return 0;
    }
    if (sub == "check") {
        parsed p = parse_args(args, 2, {}, {"json"});
        expect_positionals(p, 3, "markov check <a> <b> <c> [--json]");
        triple t{parse_integer(p.positional[0]), parse_integer(p.positional[1]),
                 parse_integer(p.positional[2])};
        const bool eq = is_markov(t), cond = markov_condition(t), cop = pairwise_coprime(t);
        if (p.has("json")) {
            json j;
            j["triple"] = json_triple(t);
            j["is_markov"] = eq;
            j["condition"] = cond;
            j["pairwise_coprime"] = cop;
            out << j.dump() << "\n";
        } else {
            out << "triple: " << t.str() << "\n"
                << "is_markov: " << (eq ? "true" : "false") << "\n"
                << "condition: " << (cond ? "true" : "false") << "\n"
                << "pairwise_coprime: " << (cop ? "true" : "false") << "\n";
        }
        return 0;
    }
    throw usage_error("unknown markov subcommand '" + sub + "'");
}

inline int cmd_verify(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() < 2 || args[1] != "equivalence")
        throw usage_error("usage: verify equivalence --max N [--sample S] [--seed X] [--json]");
    parsed p = parse_args(args, 2, {"max", "sample", "seed"}, {"json"});
    expect_positionals(p, 0, "verify equivalence --max N [--sample S] [--seed X] [--json]");
    const integer bound = parse_integer(p.value("max"));
    const std::uint64_t sample = p.has("sample") ? parse_u64(p.value("sample")) : 10000;
    const std::uint64_t seed = p.has("seed") ? parse_u64(p.value("seed")) : 0xC0FFEE;
    const verify_report rep = verify_equivalence(bound, sample, seed);

    std::set<triple> triples = rep.eq1_set;
    triples.insert(rep.cond2_set.begin(), rep.cond2_set.end());

    if (p.has("json")) {
        json j;
        j["bound"] = json_int(rep.bound);
        j["counts"] = {{"eq1", rep.eq1_set.size()},
                       {"cond2", rep.cond2_set.size()},
                       {"dzero", rep.dzero_set.size()}};
        j["triples"] = json_triples(triples);
        json cx = json::array();
        for (const auto& c : rep.counterexamples)
            cx.push_back({{"triple", json_triple(c.t)}, {"which", c.which}});
        j["counterexamples"] = cx;
        j["scanned"] = rep.scanned;
        j["evaluated"] = rep.evaluated;
        j["passed"] = rep.passed();
        out << j.dump() << "\n";
    } else {
        out << "bound: " << rep.bound.str() << "\n"
            << "scanned: " << rep.scanned << "\n"
            << "evaluated: " << rep.evaluated << "\n"
            << "counts: eq1=" << rep.eq1_set.size() << " cond2=" << rep.cond2_set.size()
            << " dzero=" << rep.dzero_set.size() << "\n"
            << "triples: " << triples.size() << "\n";
        for (const triple& t : triples) out << t.str() << "\n";
        out << "counterexamples: " << rep.counterexamples.size() << "\n";
        for (const auto& c : rep.counterexamples)
            out << c.t.str() << " " << c.which << "\n";
        out << "equivalence: " << (rep.passed() ? "HOLDS" : "FAILED") << "\n";
    }
    return rep.passed() ? 0 : 1;
}

inline int cmd_solve(const std::vector<std::string>& args, std::ostream& out) {
    parsed p = parse_args(args, 1, {"f", "max"}, {"json"});
    expect_positionals(p, 0, "solve --f \"<expr>\" --max N [--json]");
    const polynomial f = polynomial::parse(p.value("f"));
    const integer bound = parse_integer(p.value("max"));
    const solve_report rep = solve(f, bound);

    if (p.has("json")) {
        json j;
        j["f"] = rep.f.to_string();
        j["bound"] = json_int(rep.bound);
        j["verdict"] = to_string(rep.precheck_verdict);
        j["solutions"] = json_triples(rep.solutions);
        j["branches"] = {{"k1", json_triples(rep.branch_k1)},
                         {"k3", json_triples(rep.branch_k3)}};
        out << j.dump() << "\n";
    } else {
        out << "f: " << rep.f.to_string() << "\n"
            << "bound: " << rep.bound.str() << "\n"
            << "verdict: " << to_string(rep.precheck_verdict) << "\n"
            << "solutions: " << rep.solutions.size() << "\n";
        for (const triple& t : rep.solutions) out << t.str() << "\n";
    }
    return 0;
}

inline int cmd_oracle(const std::vector<std::string>& args, std::ostream& out) {
    parsed p = parse_args(args, 1, {"f", "max"}, {"json"});
    expect_positionals(p, 0, "oracle --f \"<expr>\" --max N [--json]");
    const polynomial f = polynomial::parse(p.value("f"));
    const integer bound = parse_integer(p.value("max"));
    const auto solutions = solve_bruteforce(f, bound);

    if (p.has("json")) {
        json j;
        j["f"] = f.to_string();
        j["bound"] = json_int(bound);
        j["solutions"] = json_triples(solutions);
        out << j.dump() << "\n";
    } else {
        for (const triple& t : solutions) out << t.str() << "\n";
    }
    return 0;
}

}  // namespace detail

/// Dispatch argv (without the program name). Writes results to out,
/// diagnostics to err; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) throw usage_error("no command given");
        const std::string& cmd = args[0];
        if (cmd == "help" || cmd == "--help" || cmd == "-h") {
            out << detail::usage_text();
            return 0;
        }
        if (cmd == "dsum") return detail::cmd_dsum(args, out);
        if (cmd == "rsum") return detail::cmd_rsum(args, out);
        if (cmd == "defect") return detail::cmd_defect(args, out);
        if (cmd == "markov") return detail::cmd_markov(args, out);
        if (cmd == "verify") return detail::cmd_verify(args, out);
        if (cmd == "solve") return detail::cmd_solve(args, out);
        if (cmd == "oracle") return detail::cmd_oracle(args, out);
        throw usage_error("unknown command '" + cmd + "'");
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        err << detail::usage_text();
        return 2;
    } catch (const syntax_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mdsum::cli
