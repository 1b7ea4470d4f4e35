#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace weylkit;

namespace {

Coefficient qsym() {
    static RingPtr r = Ring::make({"q"});
    return Coefficient::parameter(r, "q");
}

std::vector<GateBasis> six_bases() {
    return {GateBasis{{1, 1}}, GateBasis{{1, 0}, {0, 1}}, GateBasis{{2, 0}, {0, 2}},
            GateBasis{{2, 1}}, GateBasis{{2, 2}}, GateBasis{{1, 1}, {1, 0}, {0, 1}}};
}

std::string basis_name(const GateBasis& b) {
    std::string s;
    for (const auto& g : b.gates()) s += "(" + std::to_string(g.r) + "," + std::to_string(g.s) + ")";
    return s;
}

Word gate_word(unsigned r, unsigned s) {
    Word w(r, weylkit::raise());
    w.insert(w.end(), s, lower());
    return w;
}

// sum of X^r D^s over the basis, literal letters under deformation q
NormalForm q_power(const GateBasis& b, unsigned n, const Coefficient& q) {
    OperatorPolynomial p(1, q);
    for (const auto& g : b.gates()) p.add(gate_word(g.r, g.s), g.w);
    OperatorPolynomial acc(1, q);
    acc.add(Word{}, 1);
    for (unsigned i = 0; i < n; ++i) acc = acc * p;
    return normal_order(acc);
}

Integer total(const CoefficientMap& m) {
    Rational t = 0;
    for (const auto& [k, c] : m) t += c.constant_value();
    return t.get_num();
}

// Taylor coefficients of A' = 1 + 4A^2, C' = 4A(C+1), D' = 2A from zero
std::array<std::vector<Rational>, 3> zigzag_oracle(unsigned order) {
    std::vector<Rational> a(order + 1, 0), c(order + 1, 0), d(order + 1, 0);
    for (unsigned n = 0; n < order; ++n) {
        Rational sa = n == 0 ? 1 : 0, sc = 0;
        for (unsigned i = 0; i <= n; ++i) {
            sa += 4 * a[i] * a[n - i];
            sc += 4 * a[i] * c[n - i];
        }
        sc += 4 * a[n];
        a[n + 1] = sa / (n + 1);
        c[n + 1] = sc / (n + 1);
        d[n + 1] = 2 * a[n] / (n + 1);
        a[n + 1].canonicalize();
        c[n + 1].canonicalize();
        d[n + 1].canonicalize();
    }
    return {a, c, d};
}

}  // namespace

TEST(Transfer, Fixtures) {
    CoefficientMap m = transfer_coefficients(GateBasis{{1, 1}}, 3);
    EXPECT_EQ(m, (CoefficientMap{{{1, 1}, Coefficient(1)}, {{2, 2}, Coefficient(3)}, {{3, 3}, Coefficient(1)}}));
    CoefficientMap xd = transfer_coefficients(GateBasis{{1, 0}, {0, 1}}, 2);
    EXPECT_EQ(xd, (CoefficientMap{{{0, 0}, Coefficient(1)}, {{2, 0}, Coefficient(1)}, {{1, 1}, Coefficient(2)}, {{0, 2}, Coefficient(1)}}));
    for (const auto& b : six_bases()) EXPECT_EQ(transfer_coefficients(b, 0), (CoefficientMap{{{0, 0}, Coefficient(1)}}));
}

TEST(Transfer, WeightedBasis) {
    RingPtr r = Ring::make({"a", "b"});
    Coefficient a = Coefficient::parameter(r, "a"), b = Coefficient::parameter(r, "b");
    GateBasis basis(std::vector<Gate>{{2, 0, a}, {0, 2, b}, {1, 1, Coefficient(3)}});
    for (unsigned n = 0; n <= 5; ++n)
        EXPECT_EQ(transfer_coefficients(basis, n), to_coefficient_map(power_normal_order(basis.to_normal_form(), n))) << n;
}

TEST(Diagrams, ThreeWayAgreement) {
    for (const auto& b : six_bases()) {
        NormalForm h = b.to_normal_form();
        for (unsigned n = 0; n <= 9; ++n) {
            CoefficientMap t = transfer_coefficients(b, n);
            EXPECT_EQ(t, to_coefficient_map(power_normal_order(h, n))) << basis_name(b) << " n=" << n;
            if (n <= 5) { EXPECT_EQ(diagram_totals(b, n), t) << basis_name(b) << " n=" << n; }
        }
    }
}

TEST(Diagrams, EnumerationFixtures) {
    EXPECT_EQ(enumerate_diagrams(GateBasis{{2, 1}}, 2).diagrams.size(), 3u);
    auto st = enumerate_diagrams(GateBasis{{1, 1}}, 4, std::make_pair(2u, 2u));
    EXPECT_EQ(st.diagrams.size(), 7u);
    EXPECT_EQ(st.total, Coefficient(stirling2(4, 2)));
    auto empty = enumerate_diagrams(GateBasis{{1, 1}}, 0);
    ASSERT_EQ(empty.diagrams.size(), 1u);
    EXPECT_TRUE(empty.diagrams[0].gates.empty());
    EXPECT_TRUE(empty.total.is_one());
}

TEST(Diagrams, TreeCounts) {
    const long x2d[] = {1, 1, 3, 13, 73};
    for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(enumerate_diagrams(GateBasis{{2, 1}}, n).diagrams.size(), static_cast<std::size_t>(x2d[n])) << n;
    const long x3d[] = {1, 4, 25, 211};
    for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_diagrams(GateBasis{{3, 1}}, n).diagrams.size(), static_cast<std::size_t>(x3d[n - 1])) << n;
}

TEST(Diagrams, WeightedTotals) {
    RingPtr r = Ring::make({"a"});
    Coefficient a = Coefficient::parameter(r, "a");
    GateBasis basis(std::vector<Gate>{{1, 0, a}, {0, 1, Coefficient(2)}});
    for (unsigned n = 0; n <= 4; ++n) {
        CoefficientMap t = transfer_coefficients(basis, n);
        EXPECT_EQ(diagram_totals(basis, n), t);
        Coefficient sum = Coefficient::constant(r, 0), listed = enumerate_diagrams(basis, n).total;
        for (const auto& [k, c] : t) sum += c;
        EXPECT_EQ(listed, sum);
    }
}

TEST(Diagrams, BoundExceeded) {
    EXPECT_THROW((void)enumerate_diagrams(GateBasis{{1, 1}}, 7), BoundExceeded);
    EXPECT_THROW((void)diagram_totals(GateBasis{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}, 2), BoundExceeded);
    EXPECT_THROW((void)crossing_weighted_count(GateBasis{{1, 1}}, 9, {1, 1}, qsym()), BoundExceeded);
    EXPECT_THROW((void)rook_coefficients(GateBasis{{1, 1}}, 8), BoundExceeded);
    EnumerationBounds tight{3, 4, 10};
    EXPECT_THROW((void)enumerate_diagrams(GateBasis{{1, 0}, {0, 1}}, 3, std::nullopt, tight), BoundExceeded);
    EnumerationBounds wide{7, 4, 500000};
    EXPECT_NO_THROW((void)diagram_totals(GateBasis{{1, 1}}, 7, wide));
}

TEST(Diagrams, InvalidBasis) {
    EXPECT_THROW(GateBasis({{0, 0}}), PreconditionError);
    EXPECT_THROW(GateBasis({{1, 1}, {1, 1}}), PreconditionError);
    OperatorPolynomial p(1, qsym());
    p.add(word_from_string("XD"), 1);
    EXPECT_THROW((void)GateBasis::from_normal_form(normal_order(p)), DeformationError);
}

TEST(Crossings, Fixtures) {
    Coefficient q = qsym();
    EXPECT_EQ(crossing_weighted_count(GateBasis{{1, 0}, {0, 1}}, 4, {0, 0}, q), Coefficient(2) + q);
    EXPECT_EQ(crossing_weighted_count(GateBasis{{1, 1}}, 2, {1, 1}, q), Coefficient(1));
    EXPECT_EQ(crossing_weighted_count(GateBasis{{1, 1}}, 2, {2, 2}, q), q);
    EXPECT_EQ(crossing_weighted_count(GateBasis{{1, 1}}, 2, {1, 1}, q) + crossing_weighted_count(GateBasis{{1, 1}}, 2, {2, 2}, q),
              q_integer(2, q));
}

TEST(Crossings, MatchChordOracle) {
    Coefficient q = qsym();
    for (unsigned n = 0; n <= 3; ++n)
        EXPECT_EQ(crossing_weighted_count(GateBasis{{1, 0}, {0, 1}}, 2 * n, {0, 0}, q), oracle::crossing_polynomial(n, q)) << n;
}

TEST(Crossings, QConsistency) {
    Coefficient q = qsym();
    for (const auto& b : six_bases()) {
        for (unsigned n = 0; n <= 5; ++n) {
            NormalForm nf = q_power(b, n, q);
            CoefficientMap plain = transfer_coefficients(b, n);
            for (const auto& [ab, c] : plain) {
                Coefficient cw = crossing_weighted_count(b, n, ab, q);
                EXPECT_EQ(cw, nf.coefficient(ab.first, ab.second)) << basis_name(b) << " n=" << n << " (" << ab.first << "," << ab.second << ")";
                EXPECT_EQ(cw.evaluate("q", 1), c);
            }
        }
    }
}

TEST(Components, ZigzagTypes) {
    // single-component diagrams of X^2 + D^2 by free ends
    const unsigned order = 6;
    auto [a, c, d] = zigzag_oracle(order);
    GateBasis basis{{2, 0}, {0, 2}};
    for (unsigned n = 1; n <= order; ++n) {
        std::map<std::pair<unsigned, unsigned>, Integer> connected;
        for_each_diagram(basis, n, [&](const LabelledDiagram& dg) {
            auto comps = components(dg);
            if (comps.size() == 1) ++connected[{comps[0].free_outputs, comps[0].free_inputs}];
        });
        Rational nf = factorial(n);
        EXPECT_EQ(Rational(connected[std::make_pair(2u, 0u)]), a[n] * nf) << n;
        EXPECT_EQ(Rational(connected[std::make_pair(0u, 2u)]), a[n] * nf) << n;
        EXPECT_EQ(Rational(connected[std::make_pair(1u, 1u)]), c[n] * nf) << n;
        EXPECT_EQ(Rational(connected[std::make_pair(0u, 0u)]), d[n] * nf) << n;
    }
    std::map<std::pair<unsigned, unsigned>, Integer> three;
    for_each_diagram(basis, 3, [&](const LabelledDiagram& dg) {
        auto comps = components(dg);
        if (comps.size() == 1) ++three[{comps[0].free_outputs, comps[0].free_inputs}];
    });
    EXPECT_EQ(three[std::make_pair(2u, 0u)], 8);
}

TEST(Components, ProfilesPartitionDiagram) {
    for (const auto& b : six_bases())
        for_each_diagram(b, 4, [&](const LabelledDiagram& dg) {
            unsigned g = 0, fo = 0, fi = 0;
            for (const auto& c : components(dg)) {
                g += c.gates;
                fo += c.free_outputs;
                fi += c.free_inputs;
            }
            EXPECT_EQ(g, 4u);
            EXPECT_EQ(fo, dg.free_outputs());
            EXPECT_EQ(fi, dg.free_inputs());
        });
}

TEST(Scan, RoundTrip) {
    for (const auto& b : six_bases()) {
        for (unsigned n = 0; n <= 4; ++n)
            for_each_diagram(b, n, [&](const LabelledDiagram& dg) {
                ScanEncoding e = scan_encode(dg);
                EXPECT_EQ(scan_decode(e, b), dg) << serialize_diagram(dg);
                EXPECT_EQ(FerrersBoard::parse_contour(e.contour).contour(), e.contour);
            });
    }
}

TEST(Scan, RejectsBadEncodings) {
    GateBasis b{{1, 1}};
    ScanEncoding ok{"|X^1D^1|X^1D^1|", {0, 1}};
    EXPECT_NO_THROW((void)scan_decode(ok, b));
    EXPECT_THROW((void)scan_decode({"|X^1D^1|X^1D^1|", {0}}, b), PreconditionError);
    EXPECT_THROW((void)scan_decode({"|X^1D^1|X^1D^1|", {1, 0}}, b), PreconditionError);
    EXPECT_THROW((void)scan_decode({"|X^2D^1|", {0}}, b), PreconditionError);
    EXPECT_THROW((void)FerrersBoard::parse_contour("|X^1D|"), ParseError);
}

TEST(Serialization, Format) {
    LabelledDiagram d;
    d.gates.push_back({0, 1, 1, {std::nullopt}});
    d.gates.push_back({0, 1, 1, {OutputRef{1, 0}}});
    EXPECT_EQ(serialize_diagram(d), "1 (1,1) 0<-free\n2 (1,1) 0<-1.0\n");
    EXPECT_EQ(serialize_diagram(LabelledDiagram{}), "");
}

TEST(Rooks, Fixtures) {
    GateSequence xd3{{1, 1}, {1, 1}, {1, 1}};
    for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(rook_count(xd3, k, k), stirling2(3, k)) << k;
    EXPECT_EQ(rook_count({}, 0, 0), 1);
    GateSequence x2d2{{2, 2}, {2, 2}};
    Integer sum = 0;
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = 0; b <= 4; ++b) sum += rook_count(x2d2, a, b);
    EXPECT_EQ(sum, 7);
    EXPECT_EQ(FerrersBoard::from_sequence(x2d2).contour(), "|X^2D^2|X^2D^2|");
    GateSequence big(21, {2, 2});
    EXPECT_THROW((void)rook_count(big, 0, 0), BoundExceeded);
}

TEST(Rooks, AggregatesMatchTransfer) {
    for (const auto& b : {GateBasis{{1, 1}}, GateBasis{{2, 2}}, GateBasis{{1, 0}, {0, 1}}, GateBasis{{2, 1}}}) {
        for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(rook_coefficients(b, n), transfer_coefficients(b, n)) << basis_name(b) << " n=" << n;
    }
    // Bell numbers as totals over X D
    for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(total(rook_coefficients(GateBasis{{1, 1}}, n)), bell(n));
}
