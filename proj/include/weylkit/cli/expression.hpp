#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "../algebra.hpp"
#include "../weyl.hpp"
#include "../errors.hpp"

namespace weylkit::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Sum, Product, Power, Scalar, Symbol, Letter };

    Kind kind = Kind::Scalar;
    std::vector<ExprPtr> children;
    std::vector<bool> negated;  // Sum only, one flag per child
    unsigned exponent = 0;      // Power only
    Rational value;             // Scalar
    std::string name;           // Symbol
    weylkit::Letter letter;     // Letter

    std::string to_string() const {
        switch (kind) {
            case Kind::Scalar: return value.get_str();
            case Kind::Symbol: return name;
            case Kind::Letter: return std::string(letter.kind == LetterKind::Raise ? "X" : "D") + (letter.mode ? std::to_string(letter.mode) : "");
            case Kind::Power: return "power(" + children[0]->to_string() + "," + std::to_string(exponent) + ")";
            case Kind::Product:
            case Kind::Sum: {
                std::string s = kind == Kind::Sum ? "sum(" : "product(";
                for (std::size_t i = 0; i < children.size(); ++i) {
                    if (i) s += ",";
                    if (kind == Kind::Sum && negated[i]) s += "-";
                    s += children[i]->to_string();
                }
                return s + ")";
            }
        }
        return {};
    }
};

inline constexpr unsigned max_exponent = 4096;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        skip();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        ExprPtr e = expr();
        skip();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr expr() {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Sum;
        bool neg = accept('-');
        if (!neg) accept('+');
        node->children.push_back(term());
        node->negated.push_back(neg);
        while (true) {
            if (accept('+'))
                neg = false;
            else if (accept('-'))
                neg = true;
            else
                break;
            node->children.push_back(term());
            node->negated.push_back(neg);
        }
        if (node->children.size() == 1 && !node->negated[0]) return node->children[0];
        return node;
    }

    ExprPtr term() {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Product;
        node->children.push_back(factor());
        while (accept('*')) node->children.push_back(factor());
        if (node->children.size() == 1) return node->children[0];
        return node;
    }

    ExprPtr factor() {
        ExprPtr a = atom();
        if (!accept('^')) return a;
        skip();
        std::size_t at = pos_;
        std::string digits = read_digits();
        if (digits.empty()) throw ParseError("expected exponent", at);
        if (digits.size() > 9 || std::stoul(digits) > max_exponent) throw ParseError("exponent overflow", at);
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Power;
        node->exponent = static_cast<unsigned>(std::stoul(digits));
        node->children.push_back(a);
        return node;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    ExprPtr atom() {
        skip();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        auto node = std::make_shared<Expr>();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::size_t at = pos_;
                std::string den = read_digits();
                if (den.empty()) throw ParseError("expected denominator", at);
                if (Integer(den) == 0) throw ParseError("zero denominator", at);
                num += "/" + den;
            }
            node->kind = Expr::Kind::Scalar;
            node->value = Rational(num);
            node->value.canonicalize();
            return node;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            std::string id(text_.substr(start, pos_ - start));
            if ((id[0] == 'X' || id[0] == 'D') && id.find_first_not_of("0123456789", 1) == std::string::npos) {
                node->kind = Expr::Kind::Letter;
                std::uint32_t mode = 0;
                if (id.size() > 1) {
                    if (id.size() > 6) throw ParseError("mode index overflow", start + 1);
                    mode = static_cast<std::uint32_t>(std::stoul(id.substr(1)));
                }
                node->letter = {id[0] == 'X' ? LetterKind::Raise : LetterKind::Lower, mode};
                return node;
            }
            node->kind = Expr::Kind::Symbol;
            node->name = id;
            return node;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

inline void collect(const Expr& e, std::set<std::string>& symbols, std::uint32_t& modes) {
    if (e.kind == Expr::Kind::Symbol) symbols.insert(e.name);
    if (e.kind == Expr::Kind::Letter) modes = std::max(modes, e.letter.mode + 1);
    for (const auto& c : e.children) collect(*c, symbols, modes);
}

inline std::set<std::string> symbols_of(const Expr& e) {
    std::set<std::string> s;
    std::uint32_t m = 1;
    collect(e, s, m);
    return s;
}

inline std::uint32_t modes_of(const Expr& e) {
    std::set<std::string> s;
    std::uint32_t m = 1;
    collect(e, s, m);
    return m;
}

inline OperatorPolynomial to_operator(const Expr& e, const RingPtr& ring, std::size_t modes, const Coefficient& deformation) {
    OperatorPolynomial unit(modes, deformation);
    switch (e.kind) {
        case Expr::Kind::Scalar: unit.add({}, Coefficient::constant(ring, e.value)); return unit;
        case Expr::Kind::Symbol: unit.add({}, Coefficient::parameter(ring, e.name)); return unit;
        case Expr::Kind::Letter: unit.add({e.letter}, Coefficient::constant(ring, 1)); return unit;
        case Expr::Kind::Power: return to_operator(*e.children[0], ring, modes, deformation).pow(e.exponent);
        case Expr::Kind::Product: {
            OperatorPolynomial r = to_operator(*e.children[0], ring, modes, deformation);
            for (std::size_t i = 1; i < e.children.size(); ++i) r = r * to_operator(*e.children[i], ring, modes, deformation);
            return r;
        }
        case Expr::Kind::Sum: {
            OperatorPolynomial r(modes, deformation);
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                OperatorPolynomial c = to_operator(*e.children[i], ring, modes, deformation);
                r = r + (e.negated[i] ? c.scaled(-1) : c);
            }
            return r;
        }
    }
    return unit;
}

// normal form computed bottom-up, never expanding words
inline NormalForm to_normal_form(const Expr& e, const RingPtr& ring, std::size_t modes, const Coefficient& deformation) {
    switch (e.kind) {
        case Expr::Kind::Power: return power_normal_order(to_normal_form(*e.children[0], ring, modes, deformation), e.exponent);
        case Expr::Kind::Product: {
            NormalForm r = to_normal_form(*e.children[0], ring, modes, deformation);
            for (std::size_t i = 1; i < e.children.size(); ++i) r = multiply(r, to_normal_form(*e.children[i], ring, modes, deformation));
            return r;
        }
        case Expr::Kind::Sum: {
            NormalForm r(modes, deformation);
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                NormalForm c = to_normal_form(*e.children[i], ring, modes, deformation);
                r = r + (e.negated[i] ? c.scaled(-1) : c);
            }
            return r;
        }
        default: return normal_order(to_operator(e, ring, modes, deformation));
    }
}

// a scalar expression (no letters) as a coefficient
inline Coefficient to_coefficient(const Expr& e, const RingPtr& ring) {
    OperatorPolynomial p = to_operator(e, ring, 1, 1);
    Coefficient c = Coefficient::constant(ring, 0);
    for (const auto& [w, k] : p.terms()) {
        if (!w.empty()) throw PreconditionError("expected a scalar expression");
        c += k;
    }
    return c;
}

}  // namespace weylkit::cli
