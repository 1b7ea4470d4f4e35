#pragma once

#include <map>
#include <string>
#include <vector>

#include "coefficient.hpp"

namespace weylkit {

// c_0 .. c_N of a power series in z
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
    TruncatedSeries(std::vector<Coefficient> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw PreconditionError("series needs at least one coefficient");
    }

    static TruncatedSeries constant(const Coefficient& c, std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = c;
        return s;
    }
    // c * z
    static TruncatedSeries variable(std::size_t order, const Coefficient& c = 1) {
        TruncatedSeries s(order);
        if (order >= 1) s.c_[1] = c;
        return s;
    }
    // sum c_n z^n / n!  from exponential-type coefficients
    static TruncatedSeries from_egf(const std::vector<Coefficient>& counts) {
        TruncatedSeries s(counts.size() - 1);
        for (std::size_t n = 0; n < counts.size(); ++n) s.c_[n] = counts[n] / Rational(factorial(n));
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Coefficient& operator[](std::size_t n) const { return c_.at(n); }
    Coefficient& operator[](std::size_t n) { return c_.at(n); }
    const std::vector<Coefficient>& coefficients() const { return c_; }

    // n! c_n
    Coefficient egf(std::size_t n) const { return c_.at(n) * Coefficient(factorial(n)); }

    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order()) throw PreconditionError("cannot extend truncation order");
        return TruncatedSeries(std::vector<Coefficient>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(const Coefficient& s, const TruncatedSeries& a) {
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    TruncatedSeries operator-() const { return Coefficient(-1) * *this; }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].to_string() + ")*z^" + std::to_string(i);
        }
        return (s.empty() ? "0" : s) + " + O(z^" + std::to_string(c_.size()) + ")";
    }

private:
    std::vector<Coefficient> c_;
};

inline TruncatedSeries differentiate(const TruncatedSeries& s) {
    if (s.order() == 0) return TruncatedSeries(0);
    TruncatedSeries r(s.order() - 1);
    for (std::size_t i = 1; i <= s.order(); ++i) r[i - 1] = s[i] * Coefficient(static_cast<long>(i));
    return r;
}

// antiderivative vanishing at 0; exact through order N+1
inline TruncatedSeries integrate(const TruncatedSeries& s) {
    TruncatedSeries r(s.order() + 1);
    for (std::size_t i = 0; i <= s.order(); ++i) r[i + 1] = s[i] / Rational(static_cast<long>(i + 1));
    return r;
}

inline TruncatedSeries inverse(const TruncatedSeries& s) {
    const Coefficient& c0 = s[0];
    if (!c0.is_constant() || c0.is_zero())
        throw PreconditionError("series inverse needs an invertible constant term, got " + c0.to_string());
    Rational inv = 1 / c0.constant_value();
    TruncatedSeries r(s.order());
    r[0] = Coefficient::constant(c0.ring(), inv);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        Coefficient acc;
        for (std::size_t k = 1; k <= n; ++k)
            if (!s[k].is_zero()) acc += s[k] * r[n - k];
        r[n] = -acc * Coefficient(inv);
    }
    return r;
}

inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * inverse(b); }

inline TruncatedSeries exp(const TruncatedSeries& f) {
    if (!f[0].is_zero()) throw PreconditionError("exp needs constant term 0, got " + f[0].to_string());
    TruncatedSeries g(f.order());
    g[0] = Coefficient::constant(f[0].ring(), 1);
    // n g_n = sum k f_k g_{n-k}
    for (std::size_t n = 1; n <= f.order(); ++n) {
        Coefficient acc;
        for (std::size_t k = 1; k <= n; ++k)
            if (!f[k].is_zero()) acc += f[k] * g[n - k] * Coefficient(static_cast<long>(k));
        g[n] = acc / Rational(static_cast<long>(n));
    }
    return g;
}

inline TruncatedSeries log(const TruncatedSeries& f) {
    if (!f[0].is_one()) throw PreconditionError("log needs constant term 1, got " + f[0].to_string());
    TruncatedSeries q = differentiate(f) * inverse(f.truncated(f.order() ? f.order() - 1 : 0));
    return integrate(q).truncated(f.order());
}

// outer(inner(z)), Horner
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!inner[0].is_zero()) throw PreconditionError("compose needs inner constant term 0, got " + inner[0].to_string());
    std::size_t n = std::min(outer.order(), inner.order());
    TruncatedSeries r = TruncatedSeries::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) r = r * inner.truncated(n) + TruncatedSeries::constant(outer[k], n);
    return r;
}

// c_n -> n! c_n
inline TruncatedSeries laplace(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n) r[n] = s.egf(n);
    return r;
}

// c_n -> c_n / n!
inline TruncatedSeries borel(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n) r[n] = s[n] / Rational(factorial(n));
    return r;
}

// z -> c z
inline TruncatedSeries rescale(const TruncatedSeries& s, const Coefficient& c) {
    TruncatedSeries r(s.order());
    Coefficient p = 1;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        r[n] = s[n] * p;
        p *= c;
    }
    return r;
}

// (1 - c z)^{-a}, via (1 - cz) y' = a c y
inline TruncatedSeries binomial_series(const Coefficient& c, const Rational& a, std::size_t order) {
    TruncatedSeries y(order);
    y[0] = Coefficient::constant(c.ring(), 1);
    for (std::size_t n = 0; n < order; ++n) y[n + 1] = y[n] * c * Coefficient(Rational(a + static_cast<long>(n)) / static_cast<long>(n + 1));
    return y;
}

inline TruncatedSeries exp_series(std::size_t order, const Coefficient& c = 1) {
    return exp(TruncatedSeries::variable(order, c));
}

// ---- polynomials in one variable over Coefficient -----------------------------

class PolynomialSpec {
public:
    PolynomialSpec() = default;
    PolynomialSpec(std::vector<Coefficient> c) : c_(std::move(c)) { trim(); }
    PolynomialSpec(std::initializer_list<Coefficient> c) : c_(c) { trim(); }

    const std::vector<Coefficient>& coefficients() const { return c_; }
    std::size_t size() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }
    Coefficient operator[](std::size_t j) const { return j < c_.size() ? c_[j] : Coefficient(); }

    TruncatedSeries evaluate(const TruncatedSeries& y) const {
        TruncatedSeries r(y.order());
        for (std::size_t k = c_.size(); k-- > 0;) r = r * y + TruncatedSeries::constant(c_[k], y.order());
        return r;
    }

    Coefficient evaluate(const Coefficient& y) const {
        Coefficient r;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * y + c_[k];
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Coefficient> c_;
};

// T' = phi(u + T), T(0) = 0
inline TruncatedSeries solve_increasing_tree(const PolynomialSpec& phi, const Coefficient& u, std::size_t order) {
    TruncatedSeries t(order);
    for (std::size_t n = 0; n < order; ++n) {
        TruncatedSeries shifted = t.truncated(n);
        shifted[0] += u;
        Coefficient cn = phi.evaluate(shifted)[n];
        t[n + 1] = cn / Rational(static_cast<long>(n + 1));
    }
    return t;
}

// ---- ODE systems --------------------------------------------------------------

// polynomial in m commuting variables
using MultiPolySpec = std::map<std::vector<std::uint32_t>, Coefficient>;

struct ODESystemSpec {
    std::size_t m = 1;
    std::vector<MultiPolySpec> rhs;
    std::vector<Coefficient> shifts;  // the x_i; empty means all zero
};

inline TruncatedSeries evaluate_multi(const MultiPolySpec& p, const std::vector<TruncatedSeries>& args, std::size_t order) {
    TruncatedSeries r(order);
    for (const auto& [e, c] : p) {
        if (e.size() != args.size()) throw PreconditionError("polynomial arity mismatch");
        TruncatedSeries term = TruncatedSeries::constant(c, order);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term = term * args[i];
        r = r + term;
    }
    return r;
}

inline std::vector<TruncatedSeries> solve_ode_system(const ODESystemSpec& spec, std::size_t order) {
    if (spec.m == 0) throw PreconditionError("ODE system needs at least one unknown");
    if (spec.rhs.size() != spec.m) throw PreconditionError("one right-hand side per unknown required");
    if (!spec.shifts.empty() && spec.shifts.size() != spec.m) throw PreconditionError("shift count mismatch");
    for (const auto& p : spec.rhs)
        for (const auto& [e, c] : p)
            if (e.size() != spec.m) throw PreconditionError("polynomial arity mismatch");
    std::vector<TruncatedSeries> t(spec.m, TruncatedSeries(order));
    for (std::size_t n = 0; n < order; ++n) {
        std::vector<TruncatedSeries> args;
        for (std::size_t i = 0; i < spec.m; ++i) {
            TruncatedSeries a = t[i].truncated(n);
            if (!spec.shifts.empty()) a[0] += spec.shifts[i];
            args.push_back(std::move(a));
        }
        std::vector<Coefficient> next;
        for (std::size_t j = 0; j < spec.m; ++j) next.push_back(evaluate_multi(spec.rhs[j], args, n)[n] / Rational(static_cast<long>(n + 1)));
        for (std::size_t j = 0; j < spec.m; ++j) t[j][n + 1] = next[j];
    }
    return t;
}

}  // namespace weylkit
