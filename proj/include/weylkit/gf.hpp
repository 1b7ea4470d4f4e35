#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "formulas.hpp"
#include "series.hpp"

namespace weylkit {

// sum_n c_n (2z)^n-style trig expansions, exact
inline TruncatedSeries cos_series(std::size_t order, const Rational& scale = 1) {
    TruncatedSeries s(order);
    for (std::size_t n = 0; n <= order; n += 2) {
        Rational c = rpow(scale, n) / Rational(factorial(n));
        if ((n / 2) % 2) c = -c;
        s[n] = Coefficient(c);
    }
    return s;
}

inline TruncatedSeries sin_series(std::size_t order, const Rational& scale = 1) {
    TruncatedSeries s(order);
    for (std::size_t n = 1; n <= order; n += 2) {
        Rational c = rpow(scale, n) / Rational(factorial(n));
        if ((n / 2) % 2) c = -c;
        s[n] = Coefficient(c);
    }
    return s;
}

// A = B = tan(2z)/2, C = sec(2z) - 1, D = -log(cos 2z)/2
inline std::array<TruncatedSeries, 4> zigzag_closed_forms(std::size_t order) {
    TruncatedSeries c = cos_series(order, 2), s = sin_series(order, 2);
    TruncatedSeries a = Coefficient(Rational(1, 2)) * (s / c);
    TruncatedSeries sec = inverse(c);
    sec[0] -= 1;
    TruncatedSeries d = Coefficient(Rational(-1, 2)) * log(c);
    return {a, a, sec, d};
}

struct GfParams {
    Coefficient u = 1;
    Coefficient v = 1;
    Coefficient alpha = 1;
    Coefficient beta = 1;
    unsigned r = 2;
    PolynomialSpec phi;
    PolynomialSpec rho;
    PolynomialSpec a;
};

inline const std::vector<std::string>& gf_families() {
    static const std::vector<std::string> names{"bell",        "involution",  "geninv-d2x", "geninv-x2d", "geninv-ax-d",
                                                "geninv-ad-x", "quad-circle", "xrd-trees",  "planted-trees", "eulerian"};
    return names;
}

namespace detail {

inline TruncatedSeries poly_z(std::size_t order, std::initializer_list<std::pair<std::size_t, Coefficient>> terms) {
    TruncatedSeries s(order);
    for (const auto& [k, c] : terms)
        if (k <= order) s[k] += c;
    return s;
}

// int_0^z a(x + w) dw
inline TruncatedSeries integral_shifted(const PolynomialSpec& a, const Coefficient& x, std::size_t order) {
    TruncatedSeries w = TruncatedSeries::variable(order);
    w[0] = x;
    return integrate(a.evaluate(w.truncated(order ? order - 1 : 0))).truncated(order);
}

}  // namespace detail

inline TruncatedSeries closed_gf(std::string_view family, const GfParams& p, std::size_t order) {
    using detail::poly_z;
    const Coefficient& u = p.u;
    const Coefficient& v = p.v;
    if (family == "bell") {
        TruncatedSeries e = exp_series(order);
        e[0] = Coefficient();
        return exp(u * e);
    }
    if (family == "involution") {
        // e^{(alpha u + beta v) z + alpha beta z^2 / 2}
        return exp(poly_z(order, {{1, p.alpha * u + p.beta * v}, {2, p.alpha * p.beta / Rational(2)}}));
    }
    if (family == "geninv-d2x") {
        return exp(poly_z(order, {{3, Coefficient(Rational(1, 3))}, {1, u + v * v}, {2, v}}));
    }
    if (family == "geninv-x2d") {
        return exp(poly_z(order, {{3, Coefficient(Rational(1, 3))}, {2, u}, {1, u * u + v}}));
    }
    if (family == "geninv-ax-d") {
        if (p.a.is_zero()) throw PreconditionError("geninv-ax-d needs a nonzero polynomial a");
        return exp(detail::integral_shifted(p.a, u, order) + poly_z(order, {{1, v}}));
    }
    if (family == "geninv-ad-x") {
        if (p.a.is_zero()) throw PreconditionError("geninv-ad-x needs a nonzero polynomial a");
        return exp(detail::integral_shifted(p.a, v, order) + poly_z(order, {{1, u}}));
    }
    if (family == "quad-circle") {
        TruncatedSeries c = cos_series(order, 2), s = sin_series(order, 2);
        TruncatedSeries tan = s / c;
        TruncatedSeries sec = inverse(c);
        sec[0] -= 1;
        TruncatedSeries e = Coefficient(Rational(-1, 2)) * log(c) + ((u * u + v * v) / Rational(2)) * tan + (u * v) * sec;
        return exp(e);
    }
    if (family == "xrd-trees") {
        if (p.r < 2) throw PreconditionError("xrd-trees needs r >= 2");
        Coefficient c = Coefficient(static_cast<long>(p.r - 1)) * u.pow(p.r - 1);
        TruncatedSeries y = binomial_series(c, Rational(1, p.r - 1), order);
        y[0] -= 1;
        return exp((u * v) * y);
    }
    if (family == "planted-trees") {
        TruncatedSeries t = solve_increasing_tree(p.phi, u, order);
        TruncatedSeries shifted = t.truncated(order ? order - 1 : 0);
        shifted[0] += u;
        TruncatedSeries r = integrate(p.rho.evaluate(shifted)).truncated(order);
        return exp(r + v * t);
    }
    if (family == "eulerian") {
        // (1-u)/(1 - u e^{z(1-u)}) = 1/(1 - u E), E = sum_{n>=1} (1-u)^{n-1} z^n / n!
        Coefficient w = Coefficient::constant(u.ring(), 1) - u;
        TruncatedSeries e(order);
        Coefficient pw = Coefficient::constant(u.ring(), 1);
        for (std::size_t n = 1; n <= order; ++n) {
            e[n] = pw / Rational(factorial(n));
            pw *= w;
        }
        return inverse(TruncatedSeries::constant(Coefficient::constant(u.ring(), 1), order) - u * e);
    }
    throw PreconditionError("unknown generating-function family: " + std::string(family));
}

// sum_{a,b} c_{a,b} u^a v^b for a single-mode normal form
inline Coefficient uv_image(const NormalForm& nf, const Coefficient& u, const Coefficient& v) {
    if (nf.modes() != 1) throw PreconditionError("uv_image is single-mode");
    Coefficient s = Coefficient::constant(Coefficient::unify(u.ring(), v.ring()), 0);
    for (const auto& [m, c] : nf.terms()) s += c * u.pow(m.raise[0]) * v.pow(m.lower[0]);
    return s;
}

// the EGF sum_n N(h^n)(u, v) z^n / n!
inline TruncatedSeries egf_of(const std::vector<NormalForm>& powers, const Coefficient& u, const Coefficient& v) {
    std::vector<Coefficient> counts;
    for (const auto& nf : powers) counts.push_back(uv_image(nf, u, v));
    return TruncatedSeries::from_egf(counts);
}

// (e^x D)^n x^m against e^{nx} sum_k [n k] D^k x^m, as series in x
inline bool exp_times_derivative_check(unsigned n, unsigned m, std::size_t order) {
    if (order < static_cast<std::size_t>(m) + n) throw PreconditionError("exp_times_derivative_check: need N >= m + n");
    TruncatedSeries f(order);
    f[m] = 1;
    TruncatedSeries left = f;
    for (unsigned i = 0; i < n; ++i) {
        TruncatedSeries d = differentiate(left);
        left = exp_series(d.order()) * d;
    }
    std::size_t out = order - n;
    TruncatedSeries sum(out);
    for (unsigned k = 0; k <= n && k <= m; ++k) {
        TruncatedSeries dk(out);
        dk[m - k] = Coefficient(stirling1(n, k) * factorial(m) / factorial(m - k));
        sum = sum + dk;
    }
    TruncatedSeries right = exp_series(out, Coefficient(static_cast<long>(n))) * sum;
    return left == right;
}

}  // namespace weylkit
