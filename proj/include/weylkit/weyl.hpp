#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace weylkit {

namespace detail {

// powers of q and q-integers, grown on demand
class QTable {
public:
    explicit QTable(const Coefficient& q) : q_(q), deformed_(!q.is_one()) {}

    bool deformed() const { return deformed_; }

    const Coefficient& power(std::uint32_t k) {
        if (powers_.empty()) powers_.push_back(Coefficient::constant(q_.ring(), 1));
        while (powers_.size() <= k) powers_.push_back(powers_.back() * q_);
        return powers_[k];
    }

    // [k]_q
    const Coefficient& integer(std::uint32_t k) {
        if (ints_.empty()) ints_.push_back(Coefficient::constant(q_.ring(), 0));
        while (ints_.size() <= k) {
            std::uint32_t i = static_cast<std::uint32_t>(ints_.size());
            ints_.push_back(ints_.back() + power(i - 1));
        }
        return ints_[k];
    }

private:
    Coefficient q_;
    bool deformed_;
    std::vector<Coefficient> powers_, ints_;
};

inline void left_multiply(Letter l, const NormalForm& nf, NormalForm& out, const Coefficient& scale, QTable& qt) {
    for (const auto& [m, c] : nf.terms()) {
        if (l.kind == LetterKind::Raise) {
            NormalMonomial r = m;
            ++r.raise[l.mode];
            out.add(r, c * scale);
            continue;
        }
        std::uint32_t a = m.raise[l.mode];
        Coefficient cs = c * scale;
        if (a > 0) {
            NormalMonomial r = m;
            --r.raise[l.mode];
            out.add(r, qt.deformed() ? cs * qt.integer(a) : cs * Coefficient(static_cast<long>(a)));
        }
        NormalMonomial r = m;
        ++r.lower[l.mode];
        out.add(r, qt.deformed() ? cs * qt.power(a) : cs);
    }
}

// word * nf, letters applied right to left
inline NormalForm word_times(const Word& w, const Coefficient& scale, const NormalForm& nf, QTable& qt) {
    if (w.empty()) return nf.scaled(scale);
    NormalForm cur = nf;
    for (std::size_t i = w.size(); i-- > 0;) {
        NormalForm next(nf.modes(), nf.deformation());
        left_multiply(w[i], cur, next, i == 0 ? scale : Coefficient(1), qt);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace detail

inline NormalForm normal_order(const OperatorPolynomial& p) {
    detail::QTable qt(p.deformation());
    NormalForm result(p.modes(), p.deformation());
    NormalForm one = NormalForm::identity(p.modes(), p.deformation());
    for (const auto& [w, c] : p.terms()) {
        NormalForm part = detail::word_times(w, c, one, qt);
        for (const auto& [m, k] : part.terms()) result.add(m, k);
    }
    return result;
}

inline NormalForm normal_order(const Word& w, std::size_t modes = 0, const Coefficient& deformation = 1) {
    return normal_order(OperatorPolynomial::from_word(w, modes, deformation));
}

// (X^r D^s)(X^a D^b) over every mode at once, undeformed
inline void multiply_monomials(const NormalMonomial& left, const NormalMonomial& right, const Coefficient& scale, NormalForm& out) {
    std::size_t modes = left.modes();
    std::vector<std::uint32_t> t(modes, 0);
    std::function<void(std::size_t, Integer)> rec = [&](std::size_t j, Integer weight) {
        if (j == modes) {
            NormalMonomial m = NormalMonomial::identity(modes);
            for (std::size_t i = 0; i < modes; ++i) {
                m.raise[i] = left.raise[i] + right.raise[i] - t[i];
                m.lower[i] = left.lower[i] + right.lower[i] - t[i];
            }
            out.add(m, scale * Coefficient(weight));
            return;
        }
        std::uint32_t s = left.lower[j], a = right.raise[j];
        for (std::uint32_t k = 0; k <= std::min(s, a); ++k) {
            t[j] = k;
            rec(j + 1, weight * binomial(s, k) * binomial(a, k) * factorial(k));
        }
    };
    rec(0, 1);
}

inline NormalForm multiply(const NormalForm& x, const NormalForm& y) {
    if (x.modes() != y.modes()) throw PreconditionError("mode count mismatch");
    if (x.deformation() != y.deformation()) throw PreconditionError("deformation mismatch");
    NormalForm out(x.modes(), x.deformation());
    if (!x.is_deformed()) {
        for (const auto& [ml, cl] : x.terms())
            for (const auto& [mr, cr] : y.terms()) multiply_monomials(ml, mr, cl * cr, out);
        return out;
    }
    detail::QTable qt(x.deformation());
    for (const auto& [ml, cl] : x.terms()) {
        NormalForm part = detail::word_times(ml.to_word(), cl, y, qt);
        for (const auto& [m, k] : part.terms()) out.add(m, k);
    }
    return out;
}

inline NormalForm power_normal_order(const NormalForm& h, unsigned n) {
    NormalForm r = NormalForm::identity(h.modes(), h.deformation());
    for (unsigned i = 0; i < n; ++i) r = multiply(h, r);
    return r;
}

inline std::vector<NormalForm> exp_normal_order(const NormalForm& h, unsigned order) {
    std::vector<NormalForm> out{NormalForm::identity(h.modes(), h.deformation())};
    for (unsigned i = 0; i < order; ++i) out.push_back(multiply(h, out.back()));
    return out;
}

inline Coefficient constant_term(const NormalForm& nf) { return nf.coefficient(NormalMonomial::identity(nf.modes())); }

inline OperatorPolynomial dual(const OperatorPolynomial& p) {
    if (p.is_deformed()) throw DeformationError("duality requires the undeformed relation");
    OperatorPolynomial r(p.modes(), p.deformation());
    for (const auto& [w, c] : p.terms()) {
        Word d(w.rbegin(), w.rend());
        for (auto& l : d) l.kind = l.kind == LetterKind::Raise ? LetterKind::Lower : LetterKind::Raise;
        r.add(std::move(d), c);
    }
    return r;
}

inline NormalForm dual(const NormalForm& nf) {
    if (nf.is_deformed()) throw DeformationError("duality requires the undeformed relation");
    NormalForm r(nf.modes(), nf.deformation());
    for (const auto& [m, c] : nf.terms()) r.add({m.lower, m.raise}, c);
    return r;
}

// ---- literal rewriting ------------------------------------------------------

enum class RewriteStrategy { Leftmost, Rightmost };

struct RewriteStep {
    Word word;
    std::size_t position;
    bool commutation;  // true: cross-mode swap, false: the D X -> 1 + q X D rule
};

namespace detail {

inline bool is_redex(Letter x, Letter y) {
    if (x.mode == y.mode) return x.kind == LetterKind::Lower && y.kind == LetterKind::Raise;
    return y < x;
}

}  // namespace detail

inline NormalForm rewrite_normal_order(const OperatorPolynomial& p, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                                       std::vector<RewriteStep>* trace = nullptr) {
    const Coefficient& q = p.deformation();
    std::map<Word, Coefficient> pending = p.terms();
    NormalForm result(p.modes(), q);
    auto push = [&](Word w, const Coefficient& c) {
        if (c.is_zero()) return;
        auto it = pending.find(w);
        if (it == pending.end()) {
            pending.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) pending.erase(it);
        }
    };
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Coefficient c = it->second;
        pending.erase(it);
        std::size_t pos = w.size();
        if (w.size() >= 2) {
            if (strategy == RewriteStrategy::Leftmost) {
                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                    if (detail::is_redex(w[i], w[i + 1])) {
                        pos = i;
                        break;
                    }
            } else {
                for (std::size_t i = w.size() - 1; i-- > 0;)
                    if (detail::is_redex(w[i], w[i + 1])) {
                        pos = i;
                        break;
                    }
            }
        }
        if (pos == w.size()) {
            NormalMonomial m = NormalMonomial::identity(p.modes());
            for (auto l : w) ++(l.kind == LetterKind::Raise ? m.raise : m.lower)[l.mode];
            result.add(m, c);
            continue;
        }
        bool swap_only = w[pos].mode != w[pos + 1].mode;
        if (trace) trace->push_back({w, pos, swap_only});
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        if (swap_only) {
            push(std::move(swapped), c);
            continue;
        }
        Word contracted;
        contracted.reserve(w.size() - 2);
        contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<long>(pos));
        contracted.insert(contracted.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
        push(std::move(contracted), c);
        push(std::move(swapped), c * q);
    }
    return result;
}

// ---- Wick contractions ------------------------------------------------------

inline constexpr std::size_t default_wick_bound = 14;

inline NormalForm wick_normal_order(const Word& w, std::size_t bound = default_wick_bound) {
    if (w.size() > bound)
        throw BoundExceeded("wick_normal_order: word length " + std::to_string(w.size()) + " exceeds bound " + std::to_string(bound));
    for (auto l : w)
        if (l.mode != 0) throw PreconditionError("wick_normal_order is single-mode");
    std::uint32_t nx = 0, nd = 0;
    for (auto l : w) (l.kind == LetterKind::Raise ? nx : nd)++;
    std::vector<Integer> by_pairs(std::min(nx, nd) + 1, 0);
    std::vector<bool> used(w.size(), false);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t k) {
        while (i < w.size() && w[i].kind != LetterKind::Lower) ++i;
        if (i == w.size()) {
            ++by_pairs[k];
            return;
        }
        rec(i + 1, k);
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j].kind != LetterKind::Raise || used[j]) continue;
            used[j] = true;
            rec(i + 1, k + 1);
            used[j] = false;
        }
    };
    rec(0, 0);
    NormalForm nf(1);
    for (std::uint32_t k = 0; k < by_pairs.size(); ++k) nf.add(NormalMonomial::single(nx - k, nd - k), Coefficient(by_pairs[k]));
    return nf;
}

// ---- the differential model ---------------------------------------------------

// commutative polynomial in x_0..x_{r-1}
class Polynomial {
public:
    using Exponents = std::vector<std::uint32_t>;

    explicit Polynomial(std::size_t vars = 1) : vars_(vars) {}

    static Polynomial monomial(Exponents e, const Coefficient& c = 1) {
        Polynomial p(e.size());
        p.add(std::move(e), c);
        return p;
    }

    void add(Exponents e, const Coefficient& c) {
        if (e.size() != vars_) throw PreconditionError("polynomial arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<Exponents, Coefficient>& terms() const { return terms_; }
    std::size_t vars() const { return vars_; }
    Coefficient coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coefficient() : it->second;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add(e, c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.vars_ != b.vars_) throw PreconditionError("polynomial arity mismatch");
        Polynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add(std::move(e), ca * cb);
            }
        return r;
    }
    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) s += "*x" + std::to_string(i) + "^" + std::to_string(e[i]);
        }
        return s;
    }

private:
    std::size_t vars_;
    std::map<Exponents, Coefficient> terms_;
};

// X_j multiplies by x_j; D_j differentiates (or acts as the q-difference Delta when deformed)
inline Polynomial apply_to_polynomial(const OperatorPolynomial& p, const Polynomial& f) {
    if (f.vars() != p.modes()) throw PreconditionError("variable count must equal mode count");
    detail::QTable qt(p.deformation());
    Polynomial out(f.vars());
    for (const auto& [w, c] : p.terms()) {
        Polynomial cur = f;
        for (std::size_t i = w.size(); i-- > 0;) {
            Letter l = w[i];
            Polynomial next(f.vars());
            for (const auto& [e, k] : cur.terms()) {
                Polynomial::Exponents n = e;
                if (l.kind == LetterKind::Raise) {
                    ++n[l.mode];
                    next.add(std::move(n), k);
                } else if (n[l.mode] > 0) {
                    std::uint32_t d = n[l.mode]--;
                    next.add(std::move(n), qt.deformed() ? k * qt.integer(d) : k * Coefficient(static_cast<long>(d)));
                }
            }
            cur = std::move(next);
        }
        for (const auto& [e, k] : cur.terms()) out.add(e, k * c);
    }
    return out;
}

inline Polynomial apply_to_polynomial(const NormalForm& nf, const Polynomial& f) { return apply_to_polynomial(nf.to_operator(), f); }

}  // namespace weylkit
