#pragma once

#include <functional>
#include <vector>

#include "algebra.hpp"
#include "coefficient.hpp"
#include "series.hpp"

namespace weylkit {

// Scan right to left: X climbs, D descends with weight = starting altitude.
inline Integer weyl_path_ct(const Word& w) {
    Integer weight = 1;
    Integer k = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i].mode != 0) throw PreconditionError("weyl_path_ct is single-mode");
        if (w[i].kind == LetterKind::Raise) {
            ++k;
        } else {
            if (k == 0) return 0;
            weight *= k;
            --k;
        }
    }
    return k == 0 ? weight : Integer(0);
}

struct Step {
    int amplitude = 0;
    std::function<Coefficient(unsigned)> weight;  // of the starting altitude
};

using StepSet = std::vector<Step>;

namespace detail {
inline unsigned altitude_cap(const StepSet& steps, unsigned n) {
    int up = 0;
    for (const auto& s : steps) up = std::max(up, s.amplitude);
    // a path returning to 0 never climbs above n * (largest ascent)
    return static_cast<unsigned>(up) * n;
}
}  // namespace detail

// weights of all nonnegative paths of length n from 0 ending at each altitude
inline std::vector<Coefficient> lattice_profile(const StepSet& steps, unsigned n) {
    unsigned cap = detail::altitude_cap(steps, n);
    std::vector<Coefficient> cur(cap + 1);
    cur[0] = 1;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Coefficient> next(cap + 1);
        for (unsigned k = 0; k <= cap; ++k) {
            if (cur[k].is_zero()) continue;
            for (const auto& s : steps) {
                long to = static_cast<long>(k) + s.amplitude;
                if (to < 0 || to > static_cast<long>(cap)) continue;
                Coefficient w = s.weight ? s.weight(k) : Coefficient(1);
                if (!w.is_zero()) next[static_cast<std::size_t>(to)] += cur[k] * w;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

inline Coefficient lattice_count(const StepSet& steps, unsigned n) { return lattice_profile(steps, n)[0]; }

// ascent +r weight 1, descent -s weight k(k-1)...(k-s+1)
inline StepSet grouped_steps(unsigned r, unsigned s) {
    StepSet st;
    st.push_back({static_cast<int>(r), [](unsigned) { return Coefficient(1); }});
    st.push_back({-static_cast<int>(s), [s](unsigned k) { return Coefficient(falling(Integer(k), s)); }});
    return st;
}

struct JFractionSpec {
    std::function<Coefficient(unsigned)> level;    // lambda_k
    std::function<Coefficient(unsigned)> product;  // mu_k, k >= 1
    std::size_t depth = 1;
};

// 1/(1 - l_0 z - m_1 z^2/(1 - l_1 z - m_2 z^2/...)) through z^N
inline TruncatedSeries jfraction_expand(const JFractionSpec& spec, std::size_t order) {
    if (spec.depth < 1) throw PreconditionError("continued fraction depth must be >= 1");
    if (spec.depth < order / 2 + 1) throw PreconditionError("continued fraction depth too small for the requested order");
    auto lam = [&](unsigned k) { return spec.level ? spec.level(k) : Coefficient(); };
    // F_k = P_k / Q_k, F_depth treated as 0
    TruncatedSeries p(order), q = TruncatedSeries::constant(1, order);
    TruncatedSeries z2(order);
    if (order >= 2) z2[2] = 1;
    for (std::size_t k = spec.depth; k-- > 0;) {
        unsigned kk = static_cast<unsigned>(k);
        TruncatedSeries one_minus = TruncatedSeries::constant(1, order) - TruncatedSeries::variable(order, lam(kk));
        TruncatedSeries nq = one_minus * q;
        if (k + 1 < spec.depth) nq = nq - spec.product(kk + 1) * (z2 * p);
        p = q;
        q = nq;
    }
    return p / q;
}

// mu_k = prod_i [a_i k + b_i]_q
struct QLinearFactor {
    int a = 1;
    int b = 0;
};

inline TruncatedSeries q_jfraction_expand(const std::vector<QLinearFactor>& mu_factors, const Coefficient& q, std::size_t depth, std::size_t order) {
    JFractionSpec spec;
    spec.depth = depth;
    spec.product = [mu_factors, q](unsigned k) {
        Coefficient c = Coefficient::constant(q.ring(), 1);
        for (const auto& f : mu_factors) {
            long v = static_cast<long>(f.a) * k + f.b;
            if (v < 0) throw PreconditionError("negative q-integer argument");
            c *= q_integer(static_cast<unsigned>(v), q);
        }
        return c;
    };
    return jfraction_expand(spec, order);
}

inline JFractionSpec hermite_spec(std::size_t depth) {
    return {nullptr, [](unsigned k) { return Coefficient(static_cast<long>(k)); }, depth};
}

// mu_k = (r k)^{falling r}
inline JFractionSpec fermat_spec(unsigned r, std::size_t depth) {
    return {nullptr, [r](unsigned k) { return Coefficient(falling(Integer(r * k), r)); }, depth};
}

// ascent weight 1, level lambda_k, descent from k weight mu_k
inline StepSet motzkin_steps(const JFractionSpec& spec) {
    StepSet st;
    st.push_back({1, [](unsigned) { return Coefficient(1); }});
    if (spec.level) st.push_back({0, spec.level});
    auto mu = spec.product;
    st.push_back({-1, [mu](unsigned k) { return k == 0 ? Coefficient() : mu(k); }});
    return st;
}

}  // namespace weylkit
