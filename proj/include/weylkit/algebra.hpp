#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coefficient.hpp"

namespace weylkit {

enum class LetterKind : std::uint8_t { Raise, Lower };

struct Letter {
    LetterKind kind = LetterKind::Raise;
    std::uint32_t mode = 0;
    auto operator<=>(const Letter&) const = default;
};

inline Letter raise(std::uint32_t mode = 0) { return {LetterKind::Raise, mode}; }
inline Letter lower(std::uint32_t mode = 0) { return {LetterKind::Lower, mode}; }

using Word = std::vector<Letter>;

// "XXDX" style single-mode words
inline Word word_from_string(std::string_view s) {
    Word w;
    for (char c : s) {
        if (c == 'X')
            w.push_back(raise());
        else if (c == 'D')
            w.push_back(lower());
        else if (c != ' ')
            throw PreconditionError(std::string("bad letter ") + c);
    }
    return w;
}

inline std::string word_to_string(const Word& w, bool show_modes = false) {
    std::string s;
    for (auto l : w) {
        s += l.kind == LetterKind::Raise ? 'X' : 'D';
        if (show_modes) s += std::to_string(l.mode);
    }
    return s;
}

inline std::uint32_t modes_needed(const Word& w) {
    std::uint32_t m = 1;
    for (auto l : w) m = std::max(m, l.mode + 1);
    return m;
}

class OperatorPolynomial {
public:
    explicit OperatorPolynomial(std::size_t modes = 1, Coefficient deformation = 1)
        : modes_(modes), deformation_(std::move(deformation)) {
        if (modes_ == 0) throw PreconditionError("mode count must be positive");
        if (deformation_.is_zero()) throw PreconditionError("deformation must be nonzero");
    }

    static OperatorPolynomial from_word(Word w, std::size_t modes = 0, Coefficient deformation = 1) {
        OperatorPolynomial p(modes ? modes : modes_needed(w), std::move(deformation));
        p.add(std::move(w), 1);
        return p;
    }

    void add(Word w, const Coefficient& c) {
        for (auto l : w)
            if (l.mode >= modes_) throw PreconditionError("letter mode out of range");
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<Word, Coefficient>& terms() const { return terms_; }
    std::size_t modes() const { return modes_; }
    const Coefficient& deformation() const { return deformation_; }
    bool is_deformed() const { return !deformation_.is_one(); }
    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, w.size());
        return d;
    }

    friend OperatorPolynomial operator+(const OperatorPolynomial& a, const OperatorPolynomial& b) {
        check_compatible(a, b);
        OperatorPolynomial r = a;
        for (const auto& [w, c] : b.terms_) r.add(w, c);
        return r;
    }

    friend OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b) {
        check_compatible(a, b);
        OperatorPolynomial r(a.modes_, a.deformation_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(std::move(w), ca * cb);
            }
        return r;
    }

    OperatorPolynomial scaled(const Coefficient& s) const {
        OperatorPolynomial r(modes_, deformation_);
        for (const auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }

    OperatorPolynomial pow(unsigned n) const {
        OperatorPolynomial r(modes_, deformation_);
        r.add({}, 1);
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    bool operator==(const OperatorPolynomial& o) const {
        return modes_ == o.modes_ && deformation_ == o.deformation_ && terms_ == o.terms_;
    }

private:
    static void check_compatible(const OperatorPolynomial& a, const OperatorPolynomial& b) {
        if (a.modes_ != b.modes_) throw PreconditionError("mode count mismatch");
        if (a.deformation_ != b.deformation_) throw PreconditionError("deformation mismatch");
    }

    std::size_t modes_;
    Coefficient deformation_;
    std::map<Word, Coefficient> terms_;
};

struct NormalMonomial {
    std::vector<std::uint32_t> raise;  // a_j
    std::vector<std::uint32_t> lower;  // b_j

    static NormalMonomial identity(std::size_t modes) { return {std::vector<std::uint32_t>(modes, 0), std::vector<std::uint32_t>(modes, 0)}; }
    static NormalMonomial single(std::uint32_t a, std::uint32_t b) { return {{a}, {b}}; }

    std::size_t modes() const { return raise.size(); }
    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto x : raise) d += x;
        for (auto x : lower) d += x;
        return d;
    }
    bool is_identity() const { return degree() == 0; }

    // X_0^{a_0} .. X_{r-1}^{a_{r-1}} D_0^{b_0} .. D_{r-1}^{b_{r-1}}
    Word to_word() const {
        Word w;
        for (std::size_t j = 0; j < raise.size(); ++j) w.insert(w.end(), raise[j], weylkit::raise(static_cast<std::uint32_t>(j)));
        for (std::size_t j = 0; j < lower.size(); ++j) w.insert(w.end(), lower[j], weylkit::lower(static_cast<std::uint32_t>(j)));
        return w;
    }

    std::string to_string() const {
        std::string s;
        bool multi = raise.size() > 1;
        auto emit = [&](char letter, std::size_t j, std::uint32_t e) {
            if (e == 0) return;
            if (!s.empty()) s += "*";
            s += letter;
            if (multi) s += std::to_string(j);
            if (e > 1) s += "^" + std::to_string(e);
        };
        for (std::size_t j = 0; j < raise.size(); ++j) emit('X', j, raise[j]);
        for (std::size_t j = 0; j < lower.size(); ++j) emit('D', j, lower[j]);
        return s.empty() ? "1" : s;
    }

    bool operator==(const NormalMonomial&) const = default;
};

// total degree, then raise vector, then lower vector
struct GradedLex {
    bool operator()(const NormalMonomial& x, const NormalMonomial& y) const {
        auto dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        if (x.raise != y.raise) return x.raise < y.raise;
        return x.lower < y.lower;
    }
};

class NormalForm {
public:
    using Map = std::map<NormalMonomial, Coefficient, GradedLex>;

    explicit NormalForm(std::size_t modes = 1, Coefficient deformation = 1)
        : modes_(modes), deformation_(std::move(deformation)) {
        if (modes_ == 0) throw PreconditionError("mode count must be positive");
    }

    static NormalForm identity(std::size_t modes = 1, Coefficient deformation = 1) {
        NormalForm nf(modes, std::move(deformation));
        nf.add(NormalMonomial::identity(modes), 1);
        return nf;
    }

    // single-mode polynomial from (a, b, coefficient) triples
    static NormalForm single_mode(std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, Coefficient>> terms, Coefficient deformation = 1) {
        NormalForm nf(1, std::move(deformation));
        for (const auto& [a, b, c] : terms) nf.add(NormalMonomial::single(a, b), c);
        return nf;
    }

    void add(const NormalMonomial& m, const Coefficient& c) {
        if (m.raise.size() != modes_ || m.lower.size() != modes_) throw PreconditionError("monomial arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Coefficient coefficient(const NormalMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coefficient() : it->second;
    }
    Coefficient coefficient(std::uint32_t a, std::uint32_t b) const { return coefficient(NormalMonomial::single(a, b)); }

    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    std::size_t modes() const { return modes_; }
    const Coefficient& deformation() const { return deformation_; }
    bool is_deformed() const { return !deformation_.is_one(); }

    OperatorPolynomial to_operator() const {
        OperatorPolynomial p(modes_, deformation_);
        for (const auto& [m, c] : terms_) p.add(m.to_word(), c);
        return p;
    }

    NormalForm scaled(const Coefficient& s) const {
        NormalForm r(modes_, deformation_);
        for (const auto& [m, c] : terms_) r.add(m, c * s);
        return r;
    }

    NormalForm substitute(std::string_view name, const Coefficient& value) const {
        NormalForm r(modes_, deformation_.substitute(name, value));
        for (const auto& [m, c] : terms_) r.add(m, c.substitute(name, value));
        return r;
    }

    friend NormalForm operator+(const NormalForm& a, const NormalForm& b) {
        if (a.modes_ != b.modes_) throw PreconditionError("mode count mismatch");
        NormalForm r = a;
        for (const auto& [m, c] : b.terms_) r.add(m, c);
        return r;
    }

    // coefficients only; deformation is compared separately when it matters
    bool operator==(const NormalForm& o) const {
        if (modes_ != o.modes_ || terms_.size() != o.terms_.size()) return false;
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        for (; i != terms_.end(); ++i, ++j)
            if (!(i->first == j->first) || i->second != j->second) return false;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.to_string();
            if (m.is_identity())
                s += cs;
            else if (cs == "1")
                s += m.to_string();
            else
                s += "(" + cs + ")*" + m.to_string();
        }
        return s;
    }

private:
    std::size_t modes_;
    Coefficient deformation_;
    Map terms_;
};

inline std::ostream& operator<<(std::ostream& os, const NormalForm& nf) { return os << nf.to_string(); }

}  // namespace weylkit
