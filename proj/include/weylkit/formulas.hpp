#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coefficient.hpp"
#include "series.hpp"

namespace weylkit {

struct CoefficientTable {
    std::string family;
    std::map<std::vector<long>, Coefficient> entries;

    Coefficient at(const std::vector<long>& idx) const {
        auto it = entries.find(idx);
        return it == entries.end() ? Coefficient() : it->second;
    }
};

namespace detail {
inline void check_range(bool ok, const char* what) {
    if (!ok) throw OutOfRange(what);
}
}  // namespace detail

// ---- Stirling, Bell ----------------------------------------------------------

inline Integer stirling2(unsigned n, unsigned k) {
    detail::check_range(k <= n, "stirling2: need 0 <= k <= n");
    Integer s = 0;
    for (unsigned j = 0; j <= k; ++j) {
        Integer t = binomial(k, j) * ipow(Integer(j), n);
        if ((k - j) % 2) s -= t; else s += t;
    }
    return s / factorial(k);
}

inline Integer stirling2_recurrence(unsigned n, unsigned k) {
    detail::check_range(k <= n, "stirling2: need 0 <= k <= n");
    std::vector<Integer> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1, 0);
        for (unsigned j = 1; j <= i; ++j) next[j] = row[j - 1] + (j < row.size() ? Integer(j * row[j]) : Integer(0));
        row = std::move(next);
    }
    return row[k];
}

// unsigned, from the rising factorial x(x+1)...(x+n-1)
inline Integer stirling1(unsigned n, unsigned k) {
    detail::check_range(k <= n, "stirling1: need 0 <= k <= n");
    std::vector<Integer> poly{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Integer> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] += poly[j] * i;
        }
        poly = std::move(next);
    }
    return poly[k];
}

inline Integer stirling1_recurrence(unsigned n, unsigned k) {
    detail::check_range(k <= n, "stirling1: need 0 <= k <= n");
    std::vector<Integer> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1, 0);
        for (unsigned j = 1; j <= i; ++j) next[j] = row[j - 1] + (j < row.size() ? Integer((i - 1) * row[j]) : Integer(0));
        row = std::move(next);
    }
    return row[k];
}

inline Integer bell(unsigned n) {
    Integer s = 0;
    for (unsigned k = 0; k <= n; ++k) s += stirling2(n, k);
    return s;
}

// {n,k}_{r,s}, r >= s >= 1; the coefficient of X^{n(r-s)} X^k D^k in (X^r D^s)^n
inline Integer gen_stirling_rs(unsigned n, unsigned k, unsigned r, unsigned s) {
    if (r < s) return gen_stirling_rs(n, k, s, r);
    detail::check_range(s >= 1, "gen_stirling_rs: need s >= 1");
    if (n == 0) {
        detail::check_range(k == 0, "gen_stirling_rs: n = 0 needs k = 0");
        return 1;
    }
    detail::check_range(s <= k && k <= s * n, "gen_stirling_rs: need s <= k <= s n");
    Integer sum = 0;
    for (unsigned j = s; j <= k; ++j) {
        Integer prod = 1;
        for (unsigned p = 1; p <= n; ++p) prod *= falling(Integer(j + (p - 1) * (r - s)), s);
        Integer t = binomial(k, j) * prod;
        if ((k - j) % 2) sum -= t; else sum += t;
    }
    return sum / factorial(k);
}

inline Integer gen_stirling_22(unsigned n, unsigned k) { return gen_stirling_rs(n, k, 2, 2); }

inline Integer gen_bell_22(unsigned n) {
    if (n == 0) return 1;
    Integer s = 0;
    for (unsigned k = 2; k <= 2 * n; ++k) s += gen_stirling_22(n, k);
    return s;
}

// {n,k}_h with h(x) = sum eta_l x^{falling l}
inline Coefficient gen_stirling_balanced(unsigned n, unsigned k, const PolynomialSpec& eta) {
    unsigned r = eta.size() ? static_cast<unsigned>(eta.size() - 1) : 0;
    detail::check_range(k <= r * n || (n == 0 && k == 0), "gen_stirling_balanced: need 0 <= k <= r n");
    Coefficient sum;
    for (unsigned j = 0; j <= k; ++j) {
        Coefficient h;
        for (unsigned l = 0; l < eta.size(); ++l) h += eta[l] * Coefficient(falling(Integer(j), l));
        Coefficient t = h.pow(n) * Coefficient(binomial(k, j));
        if ((k - j) % 2) sum -= t; else sum += t;
    }
    return sum / Rational(factorial(k));
}

// ---- involutions, Lah, Scherk -------------------------------------------------

// coefficient of X^l D^m in N((alpha X + beta D)^n)
inline Coefficient involution_coeff(unsigned n, unsigned l, unsigned m, const Coefficient& alpha, const Coefficient& beta) {
    if (l + m > n || (n - l - m) % 2) return Coefficient::constant(Coefficient::unify(alpha.ring(), beta.ring()), 0);
    unsigned k = (n - l - m) / 2;
    Rational c(factorial(n), ipow(2, k) * factorial(k) * factorial(l) * factorial(m));
    c.canonicalize();
    return alpha.pow(l + k) * beta.pow(k + m) * Coefficient(c);
}

// coefficient of X^{k+(r-1)n} D^k in N((X^r D)^n); corrected lower binomial index n
inline Coefficient lah_gamma(unsigned n, unsigned k, unsigned r) {
    detail::check_range(r >= 2, "lah_gamma: need r >= 2");
    detail::check_range(n >= 1 && k >= 1 && k <= n, "lah_gamma: need 1 <= k <= n");
    if (r == 2) return Coefficient(binomial(n - 1, k - 1) * factorial(n) / factorial(k));
    Rational sum = 0;
    for (unsigned l = 0; l <= k; ++l) {
        Rational top = Rational(n) + ratio(l, r - 1) - 1;
        Rational t = Rational(binomial(k, l)) * rational_binomial(top, n);
        if ((k - l) % 2) sum -= t; else sum += t;
    }
    sum *= Rational(factorial(n)) / Rational(factorial(k));
    sum *= Rational(ipow(r - 1, n));
    return Coefficient(sum);
}

// variant of the r >= 3 formula with k as the binomial lower index
inline Coefficient lah_gamma_lower_k(unsigned n, unsigned k, unsigned r) {
    Rational sum = 0;
    for (unsigned l = 0; l <= k; ++l) {
        Rational top = Rational(n) + ratio(l, r - 1) - 1;
        Rational t = Rational(binomial(k, l)) * rational_binomial(top, k);
        if ((k - l) % 2) sum -= t; else sum += t;
    }
    sum *= Rational(factorial(n)) / Rational(factorial(k));
    sum *= Rational(ipow(r - 1, n));
    return Coefficient(sum);
}

// (X^p D)^n = X^{n(p-1)} sum_k c_n^k X^k D^k
inline Integer scherk_c(unsigned n, unsigned k, unsigned p) {
    detail::check_range(p >= 1, "scherk_c: need p >= 1");
    detail::check_range(k >= 1 && k <= n, "scherk_c: need 1 <= k <= n");
    unsigned len = n - k;
    Integer total = 0;
    std::vector<unsigned> j(len, 1);
    if (len == 0) return 1;
    while (true) {
        Integer prod = 1;
        for (unsigned i = 1; i <= len; ++i) prod *= Integer((j[i - 1] + i - 1) * p) - Integer(i - 1);
        total += prod;
        // next nondecreasing sequence in [1, k]
        std::size_t pos = len;
        while (pos > 0 && j[pos - 1] == k) --pos;
        if (pos == 0) break;
        unsigned v = ++j[pos - 1];
        for (std::size_t t = pos; t < len; ++t) j[t] = v;
    }
    return total;
}

// ---- q-analogues ------------------------------------------------------------

// chord diagrams on 2n points counted by crossings
inline Coefficient touchard_riordan(unsigned n, const Coefficient& q) {
    Coefficient sum = Coefficient::constant(q.ring(), 0);
    for (long k = -static_cast<long>(n); k <= static_cast<long>(n); ++k) {
        Coefficient t = q.pow(static_cast<unsigned long>(k * (k - 1) / 2)) * Coefficient(binomial(2 * n, n + k));
        if (k % 2) sum -= t; else sum += t;
    }
    Coefficient one_minus_q = Coefficient::constant(q.ring(), 1) - q;
    for (unsigned i = 0; i < n; ++i) sum = sum.divide_exact(one_minus_q);
    return sum;
}

// ---- probabilities ------------------------------------------------------------

// [z^n] (1+z)^i (1-z)^j
inline Integer ehrenfest_lambda(unsigned n, unsigned i, unsigned j) {
    Integer s = 0;
    for (unsigned t = 0; t <= n; ++t) {
        Integer v = binomial(i, t) * binomial(j, n - t);
        if ((n - t) % 2) s -= v; else s += v;
    }
    return s;
}

inline Rational ehrenfest_prob(unsigned m, unsigned n, unsigned a0, unsigned a) {
    detail::check_range(m >= 1 && a0 <= m && a <= m, "ehrenfest_prob: need m >= 1 and 0 <= a0, a <= m");
    unsigned b0 = m - a0;
    Rational s = 0;
    for (unsigned j = 0; j <= m; ++j) {
        Rational x = Rational(static_cast<long>(m) - 2 * static_cast<long>(j), m);
        x.canonicalize();
        s += Rational(ehrenfest_lambda(j, a0, b0) * ehrenfest_lambda(m - a, m - j, j)) * rpow(x, n);
    }
    s /= Rational(ipow(2, m));
    s.canonicalize();
    return s;
}

inline Rational coupon_collector(unsigned m, unsigned n, unsigned group) {
    detail::check_range(group == 1 || group == 2, "coupon_collector: group must be 1 or 2");
    detail::check_range(m >= group, "coupon_collector: need m >= group");
    Rational p;
    if (group == 1) {
        p = Rational(factorial(m) * (n >= m ? stirling2(n, m) : Integer(0)), ipow(m, n));
    } else {
        Integer s = (n >= 1 && m <= 2 * n) ? gen_stirling_22(n, m) : Integer(n == 0 && m == 0 ? 1 : 0);
        p = Rational(factorial(m) * s, ipow(Integer(m) * (m - 1), n));
    }
    p.canonicalize();
    return p;
}

inline Rational harmonic(unsigned m) {
    Rational h = 0;
    for (unsigned i = 1; i <= m; ++i) h += Rational(1, i);
    h.canonicalize();
    return h;
}

inline Rational coupon_expected(unsigned m, unsigned group) {
    detail::check_range(group == 1 || group == 2, "coupon_expected: group must be 1 or 2");
    detail::check_range(m >= group, "coupon_expected: need m >= group");
    if (group == 1) return Rational(m) * harmonic(m);
    Rational tail = Rational(1, binomial(2 * m - 1, m + 1) * (m + 1));
    tail.canonicalize();
    if (m % 2) tail = -tail;
    Rational inner = harmonic(m) + Rational(1, 2 * m - 1) - tail;
    Rational e = Rational(m * (m - 1), 2 * m - 1) * inner;
    e.canonicalize();
    return e;
}

// ---- lattice-path numbers -----------------------------------------------------

inline Integer duchon(unsigned n) {
    Rational s = 0;
    for (unsigned i = 0; i <= n; ++i) {
        s += ratio(binomial(5 * n + 1, n - i) * binomial(5 * n + 2 * i, i), 5 * n + i + 1);
    }
    s.canonicalize();
    if (s.get_den() != 1) throw Error("duchon: non-integral sum");
    return s.get_num();
}

struct MatrixCounts {
    Integer plus_minus;
    Integer plus;
};

inline MatrixCounts matrix_counts(unsigned n) {
    Integer s = 0;
    if (n == 0) s = 1;
    for (unsigned k = 2; n > 0 && k <= 2 * n; ++k) s += factorial(k) * gen_stirling_22(n, k);
    Integer p = s / ipow(2, n);
    return {s, p};
}

// ---- tables -------------------------------------------------------------------

inline CoefficientTable stirling2_table(unsigned nmax) {
    CoefficientTable t{"stirling2", {}};
    for (unsigned n = 0; n <= nmax; ++n)
        for (unsigned k = 0; k <= n; ++k) t.entries[{long(n), long(k)}] = Coefficient(stirling2(n, k));
    return t;
}

inline CoefficientTable stirling1_table(unsigned nmax) {
    CoefficientTable t{"stirling1", {}};
    for (unsigned n = 0; n <= nmax; ++n)
        for (unsigned k = 0; k <= n; ++k) t.entries[{long(n), long(k)}] = Coefficient(stirling1(n, k));
    return t;
}

inline CoefficientTable gen_stirling_rs_table(unsigned nmax, unsigned r, unsigned s) {
    CoefficientTable t{"stirling_" + std::to_string(r) + "_" + std::to_string(s), {}};
    unsigned lo = std::min(r, s);
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned k = lo; k <= lo * n; ++k) t.entries[{long(n), long(k)}] = Coefficient(gen_stirling_rs(n, k, r, s));
    return t;
}

}  // namespace weylkit
