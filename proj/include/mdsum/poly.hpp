#pragma once

// Integer-coefficient polynomials in the variables a, b, c: a sparse
// term map, canonical printing, a recursive-descent parser for the
// grammar
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] atom ['^' nat]
//   atom   := nat | 'a' | 'b' | 'c' | '(' expr ')'
//
// ('^' binds tightest, then '*', then '+'/'-'; exponents are nonnegative
// integer literals; implicit multiplication is rejected), and an exact
// evaluator.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mdsum/exact.hpp"

namespace mdsum {

class syntax_error : public std::runtime_error {
public:
    syntax_error(std::size_t position, const std::string& what)
        : std::runtime_error("syntax error at position " + std::to_string(position) +
                             ": " + what),
          position_(position) {}

    std::size_t position() const { return position_; }

protected:
    syntax_error(std::size_t position, const std::string& what, int /*tag*/)
        : std::runtime_error(what), position_(position) {}

private:
    std::size_t position_;
};

class exponent_error : public syntax_error {
public:
    exponent_error(std::size_t position, const std::string& what)
        : syntax_error(position,
                       "exponent error at position " + std::to_string(position) + ": " + what,
                       0) {}
};

/// Exponents of one monomial a^ea * b^eb * c^ec.
struct exponents {
    std::uint32_t ea = 0, eb = 0, ec = 0;

    std::uint64_t total() const {
        return std::uint64_t(ea) + eb + ec;
    }
    friend bool operator==(const exponents&, const exponents&) = default;
};

/// Graded-lexicographic, highest first: sort key for canonical printing.
struct grlex_desc {
    bool operator()(const exponents& x, const exponents& y) const {
        if (x.total() != y.total()) return x.total() > y.total();
        return std::tie(x.ea, x.eb, x.ec) > std::tie(y.ea, y.eb, y.ec);
    }
};

class polynomial {
public:
    using term_map = std::map<exponents, integer, grlex_desc>;

    polynomial() = default;
    explicit polynomial(integer constant) {
        if (constant != 0) terms_[exponents{}] = std::move(constant);
    }

    static polynomial constant(integer c) { return polynomial(std::move(c)); }

    static polynomial variable(char v) {
        polynomial p;
        exponents e;
        switch (v) {
            case 'a': e.ea = 1; break;
            case 'b': e.eb = 1; break;
            case 'c': e.ec = 1; break;
            default: throw std::domain_error("polynomial: variable must be a, b or c");
        }
        p.terms_[e] = 1;
        return p;
    }

    static std::uint32_t add_exponents(std::uint32_t x, std::uint32_t y) {
        const std::uint64_t s = std::uint64_t(x) + y;
        if (s > std::numeric_limits<std::uint32_t>::max())
            throw std::overflow_error("polynomial: monomial degree overflow");
        return static_cast<std::uint32_t>(s);
    }

    /// Adds coeff * a^ea b^eb c^ec, dropping the term if it cancels.
    polynomial& add_term(std::uint32_t ea, std::uint32_t eb, std::uint32_t ec,
                         const integer& coeff) {
        if (coeff == 0) return *this;
        exponents e{ea, eb, ec};
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::uint64_t degree() const {
        return terms_.empty() ? 0 : terms_.begin()->first.total();
    }

    friend bool operator==(const polynomial& x, const polynomial& y) {
        return x.terms_ == y.terms_;
    }

    friend polynomial operator+(const polynomial& x, const polynomial& y) {
        polynomial r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e.ea, e.eb, e.ec, c);
        return r;
    }
    friend polynomial operator-(const polynomial& x, const polynomial& y) {
        polynomial r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e.ea, e.eb, e.ec, -c);
        return r;
    }
    polynomial operator-() const {
        polynomial r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend polynomial operator*(const polynomial& x, const polynomial& y) {
        polynomial r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_)
                r.add_term(add_exponents(ex.ea, ey.ea), add_exponents(ex.eb, ey.eb),
                           add_exponents(ex.ec, ey.ec), cx * cy);
        return r;
    }

    polynomial pow(std::uint32_t n) const {
        polynomial r = constant(1);
        polynomial base = *this;
        while (n > 0) {
            if (n & 1u) r = r * base;
            base = base * base;
            n >>= 1u;
        }
        return r;
    }

    /// Exact value at (t.a, t.b, t.c).
    integer evaluate(const triple& t) const {
        std::uint32_t ma = 0, mb = 0, mc = 0;
        for (const auto& [e, c] : terms_) {
            ma = std::max(ma, e.ea);
            mb = std::max(mb, e.eb);
            mc = std::max(mc, e.ec);
        }
        auto powers = [](const integer& x, std::uint32_t m) {
            std::vector<integer> p(m + 1);
            p[0] = 1;
            for (std::uint32_t i = 1; i <= m; ++i) p[i] = p[i - 1] * x;
            return p;
        };
        const auto pa = powers(t.a, ma), pb = powers(t.b, mb), pc = powers(t.c, mc);
        integer acc = 0;
        for (const auto& [e, c] : terms_) acc += c * pa[e.ea] * pb[e.eb] * pc[e.ec];
        return acc;
    }

    polynomial subtract_const(const integer& n) const {
        polynomial r = *this;
        r.add_term(0, 0, 0, -n);
        return r;
    }

    bool is_nonneg_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    /// The constant value when the polynomial is constant (0 included).
    std::optional<integer> is_const() const {
        if (terms_.empty()) return integer(0);
        if (terms_.size() == 1 && terms_.begin()->first == exponents{})
            return terms_.begin()->second;
        return std::nullopt;
    }

    /// f(k*a, k*b, k*c): each coefficient picks up k^(total degree).
    polynomial scale_vars(const integer& k) const {
        if (k < 1) throw std::domain_error("scale_vars: k must be >= 1");
        polynomial r;
        for (const auto& [e, c] : terms_)
            r.terms_[e] = c * boost::multiprecision::pow(k, static_cast<unsigned>(e.total()));
        return r;
    }

    /// Canonical form: graded-lex order, explicit '*' and '^'. Reparses
    /// to an equal polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            integer mag = neg ? integer(-c) : c;
            std::string mono;
            auto append_var = [&mono](char v, std::uint32_t exp) {
                if (exp == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (exp > 1) mono += "^" + std::to_string(exp);
            };
            append_var('a', e.ea);
            append_var('b', e.eb);
            append_var('c', e.ec);
            if (mono.empty()) {
                out += mag.str();
            } else {
                if (mag != 1) out += mag.str() + "*";
                out += mono;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const polynomial& p) {
        return os << p.to_string();
    }

    static polynomial parse(std::string_view text);

private:
    term_map terms_;
};

namespace detail {

class poly_parser {
public:
    explicit poly_parser(std::string_view text) : text_(text) {}

    polynomial run() {
        polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw syntax_error(pos_, "unexpected character '" + std::string(1, text_[pos_]) +
                                         "'");
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    polynomial parse_expr() {
        polynomial p = parse_term();
        for (;;) {
            if (consume('+')) {
                p = p + parse_term();
            } else if (consume('-')) {
                p = p - parse_term();
            } else {
                return p;
            }
        }
    }

    polynomial parse_term() {
        polynomial p = parse_factor();
        while (consume('*')) p = p * parse_factor();
        return p;
    }

    polynomial parse_factor() {
        const bool neg = consume('-');
        polynomial p = parse_atom();
        if (consume('^')) p = p.pow(parse_exponent());
        return neg ? -p : p;
    }

    polynomial parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw syntax_error(pos_, "expected a number, variable or '('");
        const char c = text_[pos_];
        if (c == 'a' || c == 'b' || c == 'c') {
            ++pos_;
            return polynomial::variable(c);
        }
        if (is_digit(c)) return polynomial::constant(parse_nat());
        if (c == '(') {
            ++pos_;
            polynomial p = parse_expr();
            skip_ws();
            if (!consume(')')) throw syntax_error(pos_, "expected ')'");
            return p;
        }
        throw syntax_error(pos_, std::string("expected a number, variable or '(', got '") +
                                     c + "'");
    }

    integer parse_nat() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        return integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::uint32_t parse_exponent() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            throw exponent_error(at, "exponent must be nonnegative");
        if (pos_ >= text_.size() || !is_digit(text_[pos_]))
            throw exponent_error(at, "exponent must be an integer literal");
        integer e = parse_nat();
        if (e > std::numeric_limits<std::uint32_t>::max())
            throw exponent_error(at, "exponent too large");
        return e.convert_to<std::uint32_t>();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline polynomial polynomial::parse(std::string_view text) {
    return detail::poly_parser(text).run();
}

}  // namespace mdsum
