#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "coefficient.hpp"

namespace weylkit {

struct Gate {
    unsigned r = 0;  // outputs
    unsigned s = 0;  // inputs
    Coefficient w = 1;
};

class GateBasis {
public:
    GateBasis() = default;
    GateBasis(std::vector<Gate> gates) : gates_(std::move(gates)) {
        for (std::size_t i = 0; i < gates_.size(); ++i) {
            if (gates_[i].r == 0 && gates_[i].s == 0) throw PreconditionError("gate (0,0) is not allowed");
            for (std::size_t j = 0; j < i; ++j)
                if (gates_[i].r == gates_[j].r && gates_[i].s == gates_[j].s) throw PreconditionError("duplicate gate type");
        }
    }
    GateBasis(std::initializer_list<std::pair<unsigned, unsigned>> types) {
        std::vector<Gate> g;
        for (auto [r, s] : types) g.push_back({r, s, 1});
        *this = GateBasis(std::move(g));
    }

    static GateBasis from_normal_form(const NormalForm& h) {
        if (h.modes() != 1) throw PreconditionError("gate basis needs a single-mode form");
        if (h.is_deformed()) throw DeformationError("gate basis needs the undeformed relation");
        std::vector<Gate> g;
        for (const auto& [m, c] : h.terms()) g.push_back({m.raise[0], m.lower[0], c});
        return GateBasis(std::move(g));
    }

    NormalForm to_normal_form() const {
        NormalForm nf(1);
        for (const auto& g : gates_) nf.add(NormalMonomial::single(g.r, g.s), g.w);
        return nf;
    }

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    const Gate& operator[](std::size_t i) const { return gates_[i]; }

    std::optional<std::size_t> find(unsigned r, unsigned s) const {
        for (std::size_t i = 0; i < gates_.size(); ++i)
            if (gates_[i].r == r && gates_[i].s == s) return i;
        return std::nullopt;
    }

private:
    std::vector<Gate> gates_;
};

using CoefficientMap = std::map<std::pair<unsigned, unsigned>, Coefficient>;

// c_{n,a,b} one gate at a time with multiplicity C(s,t) C(a,t) t!
inline CoefficientMap transfer_coefficients(const GateBasis& basis, unsigned n) {
    CoefficientMap cur{{{0u, 0u}, Coefficient(1)}};
    for (unsigned step = 0; step < n; ++step) {
        CoefficientMap next;
        for (const auto& [ab, c] : cur) {
            auto [a, b] = ab;
            for (const auto& g : basis.gates())
                for (unsigned t = 0; t <= std::min(g.s, a); ++t) {
                    Coefficient add = c * g.w * Coefficient(binomial(g.s, t) * binomial(a, t) * factorial(t));
                    auto key = std::make_pair(a + g.r - t, b + g.s - t);
                    auto it = next.find(key);
                    if (it == next.end())
                        next.emplace(key, add);
                    else
                        it->second += add;
                }
        }
        cur.clear();
        for (auto& [k, c] : next)
            if (!c.is_zero()) cur.emplace(k, std::move(c));
    }
    return cur;
}

inline CoefficientMap to_coefficient_map(const NormalForm& nf) {
    if (nf.modes() != 1) throw PreconditionError("single-mode form expected");
    CoefficientMap m;
    for (const auto& [mono, c] : nf.terms()) m.emplace(std::make_pair(mono.raise[0], mono.lower[0]), c);
    return m;
}

// ---- labelled diagrams --------------------------------------------------------

struct OutputRef {
    unsigned label = 0;  // 1-based gate position
    unsigned slot = 0;
    bool operator==(const OutputRef&) const = default;
};

struct GateInstance {
    std::size_t type = 0;
    unsigned r = 0, s = 0;
    std::vector<std::optional<OutputRef>> inputs;  // slot order
    bool operator==(const GateInstance&) const = default;
};

struct LabelledDiagram {
    std::vector<GateInstance> gates;

    unsigned free_inputs() const {
        unsigned f = 0;
        for (const auto& g : gates)
            for (const auto& in : g.inputs) f += in ? 0 : 1;
        return f;
    }
    unsigned free_outputs() const {
        unsigned total = 0, bound = 0;
        for (const auto& g : gates) {
            total += g.r;
            for (const auto& in : g.inputs) bound += in ? 1 : 0;
        }
        return total - bound;
    }
    bool operator==(const LabelledDiagram&) const = default;
};

struct EnumerationBounds {
    unsigned max_size = 6;
    std::size_t max_basis = 4;
    std::size_t max_listed = 500000;
};

namespace detail {

inline void check_bounds(const GateBasis& basis, unsigned n, const EnumerationBounds& bounds) {
    if (n > bounds.max_size)
        throw BoundExceeded("diagram enumeration: size " + std::to_string(n) + " exceeds bound " + std::to_string(bounds.max_size));
    if (basis.size() > bounds.max_basis)
        throw BoundExceeded("diagram enumeration: basis size " + std::to_string(basis.size()) + " exceeds bound " + std::to_string(bounds.max_basis));
}

class DiagramWalker {
public:
    using Visitor = std::function<void(const LabelledDiagram&, unsigned crossings)>;

    DiagramWalker(const GateBasis& basis, unsigned n, Visitor visit) : basis_(basis), n_(n), visit_(std::move(visit)) {}

    void run() { place(0); }

private:
    // dangling outputs, leftmost first; newest gate outputs enter on the left
    void place(unsigned depth) {
        if (depth == n_) {
            visit_(diagram_, crossings_);
            return;
        }
        for (std::size_t t = 0; t < basis_.size(); ++t) {
            const Gate& g = basis_[t];
            diagram_.gates.push_back({t, g.r, g.s, std::vector<std::optional<OutputRef>>(g.s)});
            bind(depth, 0);
            diagram_.gates.pop_back();
        }
    }

    void bind(unsigned depth, unsigned slot) {
        const unsigned r = diagram_.gates.back().r, s = diagram_.gates.back().s;
        if (slot == s) {
            unsigned label = depth + 1;
            std::vector<OutputRef> fresh;
            for (unsigned o = 0; o < r; ++o) fresh.push_back({label, o});
            dangling_.insert(dangling_.begin(), fresh.begin(), fresh.end());
            place(depth + 1);
            dangling_.erase(dangling_.begin(), dangling_.begin() + r);
            return;
        }
        unsigned passed = static_cast<unsigned>(dangling_.size());
        crossings_ += passed;
        diagram_.gates.back().inputs[slot].reset();
        bind(depth, slot + 1);
        crossings_ -= passed;
        for (std::size_t p = 0; p < dangling_.size(); ++p) {
            OutputRef target = dangling_[p];
            crossings_ += static_cast<unsigned>(p);
            dangling_.erase(dangling_.begin() + static_cast<long>(p));
            diagram_.gates.back().inputs[slot] = target;
            bind(depth, slot + 1);
            diagram_.gates.back().inputs[slot].reset();
            dangling_.insert(dangling_.begin() + static_cast<long>(p), target);
            crossings_ -= static_cast<unsigned>(p);
        }
    }

    const GateBasis& basis_;
    unsigned n_;
    Visitor visit_;
    LabelledDiagram diagram_;
    std::vector<OutputRef> dangling_;
    unsigned crossings_ = 0;
};

// (a, b, type counts..., crossings) -> number of diagrams
using TallyKey = std::vector<unsigned>;

inline std::map<TallyKey, Integer> tally(const GateBasis& basis, unsigned n, bool with_crossings,
                                         const std::optional<std::pair<unsigned, unsigned>>& filter) {
    std::map<TallyKey, Integer> counts;
    TallyKey key(2 + basis.size() + 1);
    DiagramWalker walker(basis, n, [&](const LabelledDiagram& d, unsigned crossings) {
        unsigned a = d.free_outputs(), b = d.free_inputs();
        if (filter && (filter->first != a || filter->second != b)) return;
        std::fill(key.begin(), key.end(), 0u);
        key[0] = a;
        key[1] = b;
        for (const auto& g : d.gates) ++key[2 + g.type];
        key.back() = with_crossings ? crossings : 0;
        ++counts[key];
    });
    walker.run();
    return counts;
}

inline Coefficient weight_of(const GateBasis& basis, const TallyKey& key) {
    Coefficient w = 1;
    for (std::size_t t = 0; t < basis.size(); ++t) w *= basis[t].w.pow(key[2 + t]);
    return w;
}

}  // namespace detail

inline void for_each_diagram(const GateBasis& basis, unsigned n, const std::function<void(const LabelledDiagram&)>& visit,
                             const EnumerationBounds& bounds = {}) {
    detail::check_bounds(basis, n, bounds);
    detail::DiagramWalker walker(basis, n, [&](const LabelledDiagram& d, unsigned) { visit(d); });
    walker.run();
}

// total weight per (a, b) over all labelled diagrams with n gates
inline CoefficientMap diagram_totals(const GateBasis& basis, unsigned n, const EnumerationBounds& bounds = {}) {
    detail::check_bounds(basis, n, bounds);
    CoefficientMap out;
    for (const auto& [key, count] : detail::tally(basis, n, false, std::nullopt)) {
        Coefficient& slot = out[{key[0], key[1]}];
        slot += detail::weight_of(basis, key) * Coefficient(count);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

struct DiagramEnumeration {
    std::vector<LabelledDiagram> diagrams;
    Coefficient total;
};

inline DiagramEnumeration enumerate_diagrams(const GateBasis& basis, unsigned n,
                                             std::optional<std::pair<unsigned, unsigned>> filter = std::nullopt,
                                             const EnumerationBounds& bounds = {}) {
    detail::check_bounds(basis, n, bounds);
    DiagramEnumeration out;
    detail::DiagramWalker walker(basis, n, [&](const LabelledDiagram& d, unsigned) {
        if (filter && (filter->first != d.free_outputs() || filter->second != d.free_inputs())) return;
        if (out.diagrams.size() >= bounds.max_listed)
            throw BoundExceeded("diagram enumeration: more than " + std::to_string(bounds.max_listed) + " diagrams");
        out.diagrams.push_back(d);
        Coefficient w = 1;
        for (const auto& g : d.gates) w *= basis[g.type].w;
        out.total += w;
    });
    walker.run();
    return out;
}

// sum over embedded diagrams of q^{crossings}
inline Coefficient crossing_weighted_count(const GateBasis& basis, unsigned n, std::pair<unsigned, unsigned> filter, const Coefficient& q,
                                           const EnumerationBounds& bounds = {}) {
    detail::check_bounds(basis, n, bounds);
    Coefficient sum = Coefficient::constant(q.ring(), 0);
    for (const auto& [key, count] : detail::tally(basis, n, true, filter))
        sum += detail::weight_of(basis, key) * q.pow(key.back()) * Coefficient(count);
    return sum;
}

inline std::string serialize_diagram(const LabelledDiagram& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.gates.size(); ++i) {
        const auto& g = d.gates[i];
        out << (i + 1) << " (" << g.r << "," << g.s << ")";
        for (std::size_t slot = 0; slot < g.inputs.size(); ++slot) {
            out << " " << slot << "<-";
            if (g.inputs[slot])
                out << g.inputs[slot]->label << "." << g.inputs[slot]->slot;
            else
                out << "free";
        }
        out << "\n";
    }
    return out.str();
}

// ---- connected components ------------------------------------------------------

struct ComponentProfile {
    unsigned gates = 0;
    unsigned free_outputs = 0;
    unsigned free_inputs = 0;
    bool operator==(const ComponentProfile&) const = default;
};

inline std::vector<ComponentProfile> components(const LabelledDiagram& d) {
    std::size_t n = d.gates.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::vector<unsigned> bound_out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& in : d.gates[i].inputs)
            if (in) {
                parent[root(i)] = root(in->label - 1);
                ++bound_out[in->label - 1];
            }
    std::map<std::size_t, ComponentProfile> by_root;
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = by_root[root(i)];
        ++c.gates;
        c.free_outputs += d.gates[i].r - bound_out[i];
        for (const auto& in : d.gates[i].inputs) c.free_inputs += in ? 0 : 1;
    }
    std::vector<ComponentProfile> out;
    for (const auto& [r, c] : by_root) out.push_back(c);
    return out;
}

// ---- Ferrers boards and rooks --------------------------------------------------

using GateSequence = std::vector<std::pair<unsigned, unsigned>>;  // (r, s) in application order

struct FerrersBoard {
    GateSequence sequence;
    std::vector<unsigned> heights;  // one column per input, application order

    static FerrersBoard from_sequence(const GateSequence& seq) {
        FerrersBoard b{seq, {}};
        unsigned h = 0;
        for (auto [r, s] : seq) {
            b.heights.insert(b.heights.end(), s, h);
            h += r;
        }
        return b;
    }

    unsigned rows() const {
        unsigned t = 0;
        for (auto [r, s] : sequence) t += r;
        return t;
    }
    unsigned columns() const { return static_cast<unsigned>(heights.size()); }

    // latest gate leftmost, pins kept between gates
    std::string contour() const {
        std::string c;
        for (std::size_t i = sequence.size(); i-- > 0;)
            c += "|X^" + std::to_string(sequence[i].first) + "D^" + std::to_string(sequence[i].second);
        return c + "|";
    }

    std::vector<std::pair<unsigned, unsigned>> cells() const {
        std::vector<std::pair<unsigned, unsigned>> out;
        for (unsigned c = 0; c < heights.size(); ++c)
            for (unsigned r = 1; r <= heights[c]; ++r) out.push_back({c, r});
        return out;
    }

    // placements of k non-attacking rooks, k = 0..min(rows, columns)
    std::vector<Integer> rook_numbers() const {
        std::vector<unsigned> h = heights;
        std::sort(h.begin(), h.end());
        std::vector<Integer> dp(h.size() + 1, 0);
        dp[0] = 1;
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = i + 1; j >= 1; --j)
                if (h[i] >= j) dp[j] += dp[j - 1] * (h[i] - (j - 1));
        return dp;
    }

    static FerrersBoard parse_contour(const std::string& text) {
        GateSequence rev;
        std::size_t pos = 0;
        auto expect = [&](char ch) {
            if (pos >= text.size() || text[pos] != ch) throw ParseError(std::string("contour: expected '") + ch + "'", pos);
            ++pos;
        };
        auto number = [&] {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw ParseError("contour: expected a number", pos);
            return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
        };
        expect('|');
        while (pos < text.size()) {
            expect('X');
            expect('^');
            unsigned r = number();
            expect('D');
            expect('^');
            unsigned s = number();
            expect('|');
            rev.push_back({r, s});
        }
        return from_sequence(GateSequence(rev.rbegin(), rev.rend()));
    }
};

inline constexpr unsigned default_rook_bound = 40;

inline Integer rook_count(const GateSequence& seq, unsigned a, unsigned b, unsigned bound = default_rook_bound) {
    FerrersBoard board = FerrersBoard::from_sequence(seq);
    if (board.rows() > bound || board.columns() > bound) throw BoundExceeded("rook_count: board exceeds bound " + std::to_string(bound));
    unsigned rows = board.rows(), cols = board.columns();
    if (a > rows || b > cols || rows - a != cols - b) return 0;
    auto rn = board.rook_numbers();
    unsigned k = rows - a;
    return k < rn.size() ? rn[k] : Integer(0);
}

// sum over all gate-type sequences of prod w * rook placements
inline CoefficientMap rook_coefficients(const GateBasis& basis, unsigned n, const EnumerationBounds& bounds = {}) {
    detail::check_bounds(basis, n, bounds);
    CoefficientMap out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        GateSequence seq;
        Coefficient w = 1;
        for (auto i : idx) {
            seq.push_back({basis[i].r, basis[i].s});
            w *= basis[i].w;
        }
        FerrersBoard board = FerrersBoard::from_sequence(seq);
        auto rn = board.rook_numbers();
        for (unsigned k = 0; k < rn.size() && k <= board.rows(); ++k)
            if (rn[k] != 0) out[{board.rows() - k, board.columns() - k}] += w * Coefficient(rn[k]);
        std::size_t p = 0;
        while (p < n && ++idx[p] == basis.size()) idx[p++] = 0;
        if (p == n) break;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// ---- scanning: diagram <-> contour + rooks ---------------------------------------

struct ScanEncoding {
    std::string contour;
    std::vector<unsigned> rooks;  // per column in scan order; 0 = empty, else row (1-based creation order)
    bool operator==(const ScanEncoding&) const = default;
};

inline ScanEncoding scan_encode(const LabelledDiagram& d) {
    GateSequence seq;
    std::vector<unsigned> first_row(d.gates.size() + 1, 0);
    unsigned row = 0;
    for (std::size_t i = 0; i < d.gates.size(); ++i) {
        seq.push_back({d.gates[i].r, d.gates[i].s});
        first_row[i] = row;
        row += d.gates[i].r;
    }
    ScanEncoding e{FerrersBoard::from_sequence(seq).contour(), {}};
    for (const auto& g : d.gates)
        for (const auto& in : g.inputs) e.rooks.push_back(in ? first_row[in->label - 1] + in->slot + 1 : 0);
    return e;
}

inline LabelledDiagram scan_decode(const ScanEncoding& e, const GateBasis& basis) {
    FerrersBoard board = FerrersBoard::parse_contour(e.contour);
    if (e.rooks.size() != board.columns()) throw PreconditionError("scan_decode: rook count does not match the contour");
    std::vector<std::pair<unsigned, unsigned>> row_owner;  // row -> (label, slot)
    LabelledDiagram d;
    std::vector<bool> used;
    std::size_t col = 0;
    for (std::size_t i = 0; i < board.sequence.size(); ++i) {
        auto [r, s] = board.sequence[i];
        auto type = basis.find(r, s);
        if (!type) throw PreconditionError("scan_decode: gate type not in basis");
        GateInstance gi{*type, r, s, {}};
        for (unsigned slot = 0; slot < s; ++slot, ++col) {
            unsigned rook = e.rooks[col];
            if (rook == 0) {
                gi.inputs.push_back(std::nullopt);
                continue;
            }
            if (rook > board.heights[col]) throw PreconditionError("scan_decode: rook outside the board");
            if (used[rook - 1]) throw PreconditionError("scan_decode: attacking rooks");
            used[rook - 1] = true;
            gi.inputs.push_back(OutputRef{row_owner[rook - 1].first, row_owner[rook - 1].second});
        }
        for (unsigned o = 0; o < r; ++o) {
            row_owner.push_back({static_cast<unsigned>(i + 1), o});
            used.push_back(false);
        }
        d.gates.push_back(std::move(gi));
    }
    return d;
}

}  // namespace weylkit
