// Brute-force reference computations used only by the tests.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <weylkit/weylkit.hpp>

namespace oracle {

using weylkit::Coefficient;
using weylkit::Integer;
using weylkit::Rational;

// perfect matchings of 2n points, histogram of crossing counts
inline std::map<unsigned, Integer> matchings_by_crossings(unsigned n) {
    std::map<unsigned, Integer> hist;
    std::vector<int> partner(2 * n, -1);
    std::function<void()> rec = [&] {
        int first = -1;
        for (unsigned i = 0; i < 2 * n; ++i)
            if (partner[i] < 0) {
                first = static_cast<int>(i);
                break;
            }
        if (first < 0) {
            unsigned cross = 0;
            for (unsigned a = 0; a < 2 * n; ++a)
                for (unsigned b = 0; b < 2 * n; ++b) {
                    int pa = partner[a], pb = partner[b];
                    if (static_cast<int>(a) < pa && static_cast<int>(b) < pb && a < b && b < static_cast<unsigned>(pa) && pa < pb) ++cross;
                }
            ++hist[cross];
            return;
        }
        for (unsigned j = first + 1; j < 2 * n; ++j) {
            if (partner[j] >= 0) continue;
            partner[first] = static_cast<int>(j);
            partner[j] = first;
            rec();
            partner[first] = partner[j] = -1;
        }
    };
    rec();
    return hist;
}

inline Coefficient crossing_polynomial(unsigned n, const Coefficient& q) {
    Coefficient s = Coefficient::constant(q.ring(), 0);
    for (const auto& [c, cnt] : matchings_by_crossings(n)) s += q.pow(c) * Coefficient(cnt);
    return s;
}

// restricted growth strings of set partitions of {0..n-1}
inline void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> block(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
        if (i == n) {
            visit(block);
            return;
        }
        for (unsigned b = 0; b <= blocks; ++b) {
            block[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0) {
        visit(block);
        return;
    }
    block[0] = 0;
    rec(1, 1);
}

inline Integer partitions_into(unsigned n, unsigned k) {
    Integer c = 0;
    for_each_partition(n, [&](const std::vector<unsigned>& b) {
        unsigned blocks = n ? *std::max_element(b.begin(), b.end()) + 1 : 0;
        if (blocks == k) ++c;
    });
    return c;
}

inline Integer bell_recurrence(unsigned n) {
    std::vector<Integer> b{1};
    for (unsigned m = 0; m < n; ++m) {
        Integer s = 0;
        for (unsigned k = 0; k <= m; ++k) s += weylkit::binomial(m, k) * b[k];
        b.push_back(s);
    }
    return b[n];
}

// E[T] for drawing `group` distinct items per round from m, by backward solve over collected count
inline Rational coupon_markov_expected(unsigned m, unsigned group) {
    Integer total = weylkit::binomial(m, group);
    std::vector<Rational> e(m + 1, 0);
    for (unsigned c = m; c-- > 0;) {
        // E_c = 1 + sum_j P(c -> c+j) E_{c+j}
        Rational stay = weylkit::ratio(weylkit::binomial(c, group), total);
        Rational rhs = 1;
        for (unsigned j = 1; j <= group && c + j <= m; ++j) rhs += weylkit::ratio(weylkit::binomial(m - c, j) * weylkit::binomial(c, group - j), total) * e[c + j];
        e[c] = rhs / (1 - stay);
        e[c].canonicalize();
    }
    return e[0];
}

// P(T <= n) by forward propagation of the collected-count chain
inline Rational coupon_markov_cdf(unsigned m, unsigned n, unsigned group) {
    Integer total = weylkit::binomial(m, group);
    std::vector<Rational> p(m + 1, 0);
    p[0] = 1;
    for (unsigned step = 0; step < n; ++step) {
        std::vector<Rational> q(m + 1, 0);
        for (unsigned c = 0; c <= m; ++c)
            for (unsigned j = 0; j <= group && c + j <= m; ++j)
                q[c + j] += p[c] * weylkit::ratio(weylkit::binomial(m - c, j) * weylkit::binomial(c, group - j), total);
        p = q;
    }
    p[m].canonicalize();
    return p[m];
}

// urn A count distribution after n single-ball moves
inline std::vector<Rational> ehrenfest_markov(unsigned m, unsigned n, unsigned a0) {
    std::vector<Rational> p(m + 1, 0);
    p[a0] = 1;
    for (unsigned s = 0; s < n; ++s) {
        std::vector<Rational> q(m + 1, 0);
        for (unsigned a = 0; a <= m; ++a) {
            if (p[a] == 0) continue;
            if (a > 0) q[a - 1] += p[a] * weylkit::ratio(a, m);
            if (a < m) q[a + 1] += p[a] * weylkit::ratio(m - a, m);
        }
        p = q;
    }
    for (auto& x : p) x.canonicalize();
    return p;
}

inline std::vector<weylkit::Word> all_words(unsigned len) {
    std::vector<weylkit::Word> out;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        weylkit::Word w;
        for (unsigned i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? weylkit::lower() : weylkit::raise());
        out.push_back(w);
    }
    return out;
}

inline std::vector<std::vector<unsigned>> permutations(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<unsigned>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<Integer> hermite_constant_terms(unsigned n) {
    // (2k-1)!! at even indices
    std::vector<Integer> out;
    for (unsigned i = 0; i <= n; ++i) {
        if (i % 2) {
            out.push_back(0);
            continue;
        }
        Integer v = 1;
        for (unsigned j = 1; j < i; j += 2) v *= j;
        out.push_back(v);
    }
    return out;
}

}  // namespace oracle
