// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nplc {

Poly Poly::constant(int nvars, const Q& c) {
    Poly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Poly Poly::monomial(Exponent e, const Q& c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponent& e, const Q& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: exponent length != nvars");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const Q* Poly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

std::pair<Exponent, Q> Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

std::int64_t Poly::total_degree() const {
    if (terms_.empty()) return -1;
    std::int64_t d = 0;
    for (auto x : terms_.rbegin()->first) d += x;
    return d;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Q& c = it->second;
        Q abs_c = c < 0 ? Q(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = false;
        for (auto e : it->first)
            if (e != 0) has_var = true;
        if (abs_c != 1 || !has_var) os << abs_c.str();
        bool printed = (abs_c != 1 || !has_var);
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (it->first[i] != 1) os << "^" << it->first[i];
            printed = true;
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser: expr := term (('+'|'-') term)*,
// term := factor ('*' factor)*, factor := base ('^' uint)?,
// base := rational | 'x'k | '(' expr ')'.
class Parser {
  public:
    Parser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = term();
        if (neg) p = negate(p);
        while (true) {
            skip_ws();
            if (eat('+')) {
                p = add(p, term());
            } else if (eat('-')) {
                p = sub(p, term());
            } else {
                break;
            }
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (eat('*')) p = mul(p, factor());
        return p;
    }

    Poly factor() {
        Poly base = atom();
        if (eat('^')) {
            std::int64_t e = read_uint("exponent");
            Poly r = Poly::constant(nvars_, 1);
            for (std::int64_t k = 0; k < e; ++k) r = mul(r, base);
            return r;
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            std::int64_t idx = read_uint("variable index");
            if (idx < 1 || idx > nvars_)
                fail("variable index " + std::to_string(idx) + " out of range 1.." + std::to_string(nvars_));
            Exponent e(nvars_, 0);
            e[static_cast<std::size_t>(idx - 1)] = 1;
            return Poly::monomial(e, Q(1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t num = read_uint("number");
            if (eat('/')) {
                std::int64_t den = read_uint("denominator");
                if (den == 0) fail("zero denominator");
                return Poly::constant(nvars_, Q(num, den));
            }
            return Poly::constant(nvars_, Q(num));
        }
        fail("expected coefficient, variable or '('");
    }

    std::int64_t read_uint(const std::string& what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected " + what);
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) fail(what + " too large");
            ++pos_;
        }
        return v;
    }

    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;
};

void require_same_nvars(const Poly& p, const Poly& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("nvars mismatch");
}

}  // namespace

Poly parse_poly(const std::string& text, int nvars) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    return Parser(text, nvars).run();
}

Poly add(const Poly& p, const Poly& q) {
    require_same_nvars(p, q);
    Poly r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, c);
    return r;
}

Poly sub(const Poly& p, const Poly& q) {
    require_same_nvars(p, q);
    Poly r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, Q(-c));
    return r;
}

Poly mul(const Poly& p, const Poly& q) {
    require_same_nvars(p, q);
    Poly r(p.nvars());
    Exponent e(static_cast<std::size_t>(p.nvars()));
    for (const auto& [ea, ca] : p.terms()) {
        for (const auto& [eb, cb] : q.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly scale(const Poly& p, const Q& c) {
    Poly r(p.nvars());
    if (c == 0) return r;
    for (const auto& [e, a] : p.terms()) r.add_term(e, a * c);
    return r;
}

Poly negate(const Poly& p) { return scale(p, Q(-1)); }

Z exponent_dot(const Exponent& e, const ZVec& v) {
    if (e.size() != v.size()) throw std::invalid_argument("exponent/vector dimension mismatch");
    Z s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += v[i] * e[i];
    return s;
}

Poly face_part(const Poly& p, const ZVec& v, const Z& c) {
    if (static_cast<int>(v.size()) != p.nvars()) throw std::invalid_argument("face_part: dimension mismatch");
    bool nonneg = true, nonzero = false;
    for (const Z& x : v) {
        if (x < 0) nonneg = false;
        if (x != 0) nonzero = true;
    }
    if (!nonneg || !nonzero) throw std::invalid_argument("face_part: normal must be nonnegative and nonzero");
    Poly r(p.nvars());
    for (const auto& [e, coef] : p.terms()) {
        Z s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += v[i] * e[i];
        if (s == c) r.add_term(e, coef);
    }
    return r;
}

Z support_min(const Poly& p, const ZVec& v) {
    if (p.is_zero()) throw std::invalid_argument("support_min of zero polynomial");
    bool first = true;
    Z best = 0;
    for (const auto& [e, coef] : p.terms()) {
        Z s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += v[i] * e[i];
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    return best;
}

Poly log_derivative(const Poly& p, int i) {
    if (i < 1 || i > p.nvars()) throw std::invalid_argument("log_derivative: variable index out of range");
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        std::int64_t a = e[static_cast<std::size_t>(i - 1)];
        if (a != 0) r.add_term(e, c * a);
    }
    return r;
}

bool axis_condition(const Poly& p) {
    if (p.is_zero()) return false;
    const int n = p.nvars();
    std::vector<bool> ok(static_cast<std::size_t>(n), false);
    for (const auto& [e, c] : p.terms()) {
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (e[static_cast<std::size_t>(i)] != 0) {
                if (nz >= 0) {
                    pure = false;
                    break;
                }
                nz = i;
            }
        }
        if (!pure) continue;
        if (nz < 0) return true;  // nonzero constant term restricts to every axis
        ok[static_cast<std::size_t>(nz)] = true;
    }
    for (bool b : ok)
        if (!b) return false;
    return true;
}

Poly substitute_zero(const Poly& p, int i) {
    if (i < 1 || i > p.nvars()) throw std::invalid_argument("substitute_zero: variable index out of range");
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (e[static_cast<std::size_t>(i - 1)] == 0) r.add_term(e, c);
    return r;
}

DivisionResult divide(const Poly& p, const Poly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    require_same_nvars(p, divisor);
    const auto [lde, ldc] = divisor.leading_term();
    Poly q(p.nvars()), rem(p.nvars()), cur = p;
    while (!cur.is_zero()) {
        auto [e, c] = cur.leading_term();
        bool div_ok = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < lde[i]) {
                div_ok = false;
                break;
            }
        if (div_ok) {
            Exponent qe(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) qe[i] = e[i] - lde[i];
            Q qc = c / ldc;
            q.add_term(qe, qc);
            cur = sub(cur, mul(Poly::monomial(qe, qc), divisor));
        } else {
            rem.add_term(e, c);
            Poly lt = Poly::monomial(e, c);
            cur = sub(cur, lt);
        }
    }
    return {std::move(q), std::move(rem)};
}

bool divides(const Poly& divisor, const Poly& p) { return divide(p, divisor).remainder.is_zero(); }

PolyModP mod_p_reduce(const Poly& p, std::uint32_t prime) {
    if (prime < 2) throw std::invalid_argument("mod_p_reduce: prime must be >= 2");
    PolyModP r;
    r.prime = prime;
    r.nvars = p.nvars();
    for (const auto& [e, c] : p.terms()) {
        Z num = numerator(c) % prime;
        Z den = denominator(c) % prime;
        if (den == 0) throw std::invalid_argument("mod_p_reduce: denominator divisible by prime");
        std::int64_t nn = static_cast<std::int64_t>(num);
        if (nn < 0) nn += prime;
        std::uint64_t dd = static_cast<std::uint64_t>(static_cast<std::int64_t>(den) < 0
                                                          ? static_cast<std::int64_t>(den) + prime
                                                          : static_cast<std::int64_t>(den));
        // inverse of dd mod prime
        std::uint64_t inv = 1, base = dd % prime, ex = prime - 2;
        while (ex) {
            if (ex & 1) inv = inv * base % prime;
            base = base * base % prime;
            ex >>= 1;
        }
        std::uint64_t v = static_cast<std::uint64_t>(nn) % prime * inv % prime;
        if (v != 0) r.terms.emplace_back(e, static_cast<std::uint32_t>(v));
    }
    return r;
}

}  // namespace nplc
