#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace weylkit {

// Ordered, named parameter set. Two rings are compatible iff their name lists agree.
class Ring {
public:
    explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw PreconditionError("empty parameter name");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw PreconditionError("duplicate parameter " + names_[i]);
        }
    }

    static std::shared_ptr<const Ring> make(std::vector<std::string> names) {
        return std::make_shared<const Ring>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Ring& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

class Coefficient {
public:
    using Exponents = std::vector<std::uint32_t>;
    struct Term {
        Exponents exponents;
        Rational value;
        bool operator==(const Term& o) const { return exponents == o.exponents && value == o.value; }
    };

    Coefficient() = default;
    Coefficient(int v) : Coefficient(Rational(v)) {}
    Coefficient(long v) : Coefficient(Rational(v)) {}
    // any gmp integer or rational expression
    template <class T, class U>
    Coefficient(const __gmp_expr<T, U>& e) {
        Rational v(e);
        v.canonicalize();
        if (v != 0) terms_.push_back({{}, std::move(v)});
    }

    static Coefficient parameter(const RingPtr& ring, std::string_view name) {
        if (!ring) throw PreconditionError("parameter requires a ring");
        auto idx = ring->index_of(name);
        if (!idx) throw PreconditionError("unknown parameter " + std::string(name));
        Exponents e(ring->size(), 0);
        e[*idx] = 1;
        return monomial(ring, std::move(e), 1);
    }

    static Coefficient monomial(const RingPtr& ring, Exponents e, const Rational& value) {
        Coefficient c;
        c.ring_ = ring;
        if (ring && e.size() != ring->size()) throw PreconditionError("exponent arity mismatch");
        if (!ring && std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; }))
            throw PreconditionError("monomial without ring");
        if (!ring) e.clear();
        if (value != 0) {
            c.terms_.push_back({std::move(e), value});
            c.terms_.back().value.canonicalize();
        }
        return c;
    }

    // constant in a given ring; keeps the ring attached
    static Coefficient constant(const RingPtr& ring, const Rational& value) {
        return monomial(ring, Exponents(ring ? ring->size() : 0, 0), value);
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exponents) == 0);
    }
    bool is_one() const { return is_constant() && constant_part() == 1; }

    Rational constant_part() const {
        if (terms_.empty()) return 0;
        const Term& last = terms_.back();
        return degree_of(last.exponents) == 0 ? last.value : Rational(0);
    }

    Rational constant_value() const {
        if (!is_constant()) throw PreconditionError("coefficient is not constant: " + to_string());
        return constant_part();
    }

    unsigned degree(std::string_view name) const {
        if (!ring_) return 0;
        auto idx = ring_->index_of(name);
        if (!idx) return 0;
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max<unsigned>(d, t.exponents[*idx]);
        return d;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, degree_of(t.exponents));
        return d;
    }

    Coefficient operator-() const {
        Coefficient r = *this;
        for (auto& t : r.terms_) t.value = -t.value;
        return r;
    }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) { return combine(a, b, false); }
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return combine(a, b, true); }

    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        RingPtr ring = unify(a.ring_, b.ring_);
        std::size_t n = ring ? ring->size() : 0;
        Coefficient r;
        r.ring_ = ring;
        if (a.is_zero() || b.is_zero()) return r;
        if (a.is_constant()) return b.scaled(a.constant_part(), ring);
        if (b.is_constant()) return a.scaled(b.constant_part(), ring);
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                Exponents e = pad(x.exponents, n);
                const Exponents ey = pad(y.exponents, n);
                for (std::size_t i = 0; i < n; ++i) e[i] += ey[i];
                prod.push_back({std::move(e), x.value * y.value});
            }
        std::sort(prod.begin(), prod.end(), [](const Term& l, const Term& rr) { return greater(l.exponents, rr.exponents); });
        for (auto& t : prod) {
            if (!r.terms_.empty() && r.terms_.back().exponents == t.exponents) {
                r.terms_.back().value += t.value;
                if (r.terms_.back().value == 0) r.terms_.pop_back();
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    friend Coefficient operator/(const Coefficient& a, const Rational& d) {
        if (d == 0) throw PreconditionError("division by zero");
        Rational inv = 1 / d;
        return a.scaled(inv, a.ring_);
    }

    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
    Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
    Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

    Coefficient pow(unsigned long e) const {
        Coefficient r = constant(ring_, 1);
        Coefficient base = *this;
        while (e) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    // Exact division; throws InexactDivision when the divisor does not divide.
    Coefficient divide_exact(const Coefficient& divisor) const {
        if (divisor.is_zero()) throw PreconditionError("division by zero");
        RingPtr ring = unify(ring_, divisor.ring_);
        std::size_t n = ring ? ring->size() : 0;
        Coefficient rem = *this;
        Coefficient quot = constant(ring, 0);
        const Term lead{pad(divisor.terms_.front().exponents, n), divisor.terms_.front().value};
        while (!rem.is_zero()) {
            Exponents e = pad(rem.terms_.front().exponents, n);
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] < lead.exponents[i]) throw InexactDivision("inexact division of " + to_string() + " by " + divisor.to_string());
                e[i] -= lead.exponents[i];
            }
            Coefficient step = monomial(ring, std::move(e), rem.terms_.front().value / lead.value);
            quot += step;
            rem -= step * divisor;
        }
        return quot;
    }

    Coefficient substitute(std::string_view name, const Coefficient& value) const {
        RingPtr ring = unify(ring_, value.ring_);
        if (!ring_) return *this;
        auto idx = ring_->index_of(name);
        if (!idx) return *this;
        std::size_t n = ring ? ring->size() : 0;
        std::vector<Coefficient> powers{constant(ring, 1)};
        Coefficient r = constant(ring, 0);
        for (const auto& t : terms_) {
            Exponents e = pad(t.exponents, n);
            unsigned k = e[*idx];
            e[*idx] = 0;
            while (powers.size() <= k) powers.push_back(powers.back() * value);
            r += monomial(ring, std::move(e), t.value) * powers[k];
        }
        return r;
    }

    Coefficient evaluate(std::string_view name, const Rational& value) const { return substitute(name, Coefficient(value)); }

    // Numeric evaluation; values indexed by ring position.
    double to_double(const std::vector<double>& values = {}) const {
        double s = 0;
        for (const auto& t : terms_) {
            double m = t.value.get_d();
            for (std::size_t i = 0; i < t.exponents.size(); ++i) {
                if (t.exponents[i] == 0) continue;
                if (i >= values.size()) throw PreconditionError("missing parameter value");
                for (unsigned k = 0; k < t.exponents[i]; ++k) m *= values[i];
            }
            s += m;
        }
        return s;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational mag = abs(t.value);
            bool neg = t.value < 0;
            if (first)
                out << (neg ? "-" : "");
            else
                out << (neg ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < t.exponents.size(); ++i) {
                if (t.exponents[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ring_->names()[i];
                if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
            }
            if (mono.empty())
                out << mag.get_str();
            else if (mag == 1)
                out << mono;
            else
                out << mag.get_str() << "*" << mono;
        }
        return out.str();
    }

    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        RingPtr ring = unify(a.ring_, b.ring_);
        std::size_t n = ring ? ring->size() : 0;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].value != b.terms_[i].value) return false;
            if (pad(a.terms_[i].exponents, n) != pad(b.terms_[i].exponents, n)) return false;
        }
        return true;
    }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    static RingPtr unify(const RingPtr& a, const RingPtr& b) {
        if (!a) return b;
        if (!b || a == b || *a == *b) return a;
        throw ContextMismatch("coefficients from different parameter contexts");
    }

private:
    static unsigned degree_of(const Exponents& e) {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }

    static Exponents pad(const Exponents& e, std::size_t n) {
        if (e.size() == n) return e;
        Exponents r(n, 0);
        std::copy(e.begin(), e.end(), r.begin());
        return r;
    }

    // graded lex, larger first
    static bool greater(const Exponents& a, const Exponents& b) {
        unsigned da = degree_of(a), db = degree_of(b);
        if (da != db) return da > db;
        return a > b;
    }

    Coefficient scaled(const Rational& s, const RingPtr& ring) const {
        Coefficient r;
        r.ring_ = ring;
        if (s == 0) return r;
        std::size_t n = ring ? ring->size() : 0;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({pad(t.exponents, n), t.value * s});
        return r;
    }

    static Coefficient combine(const Coefficient& a, const Coefficient& b, bool subtract) {
        RingPtr ring = unify(a.ring_, b.ring_);
        std::size_t n = ring ? ring->size() : 0;
        Coefficient r;
        r.ring_ = ring;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) {
                r.terms_.push_back({pad(a.terms_[i].exponents, n), a.terms_[i].value});
                ++i;
                continue;
            }
            Exponents eb = pad(b.terms_[j].exponents, n);
            Rational vb = subtract ? Rational(-b.terms_[j].value) : b.terms_[j].value;
            if (i == a.terms_.size()) {
                r.terms_.push_back({std::move(eb), vb});
                ++j;
                continue;
            }
            Exponents ea = pad(a.terms_[i].exponents, n);
            if (ea == eb) {
                Rational v = a.terms_[i].value + vb;
                if (v != 0) r.terms_.push_back({std::move(ea), v});
                ++i;
                ++j;
            } else if (greater(ea, eb)) {
                r.terms_.push_back({std::move(ea), a.terms_[i].value});
                ++i;
            } else {
                r.terms_.push_back({std::move(eb), vb});
                ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;  // graded lex, descending
};

inline std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

// [n]_q = 1 + q + ... + q^{n-1}
inline Coefficient q_integer(unsigned n, const Coefficient& q) {
    Coefficient r = Coefficient::constant(q.ring(), 0);
    Coefficient p = Coefficient::constant(q.ring(), 1);
    for (unsigned i = 0; i < n; ++i) {
        r += p;
        p *= q;
    }
    return r;
}

inline Coefficient q_factorial(unsigned n, const Coefficient& q) {
    Coefficient r = Coefficient::constant(q.ring(), 1);
    for (unsigned i = 1; i <= n; ++i) r *= q_integer(i, q);
    return r;
}

inline Coefficient q_binomial(unsigned n, unsigned k, const Coefficient& q) {
    if (k > n) return Coefficient::constant(q.ring(), 0);
    return q_factorial(n, q).divide_exact(q_factorial(k, q) * q_factorial(n - k, q));
}

}  // namespace weylkit
