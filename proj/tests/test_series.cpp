#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace weylkit;

namespace {

std::vector<Integer> egf_ints(const TruncatedSeries& s) {
    std::vector<Integer> out;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        Rational r = s.egf(n).constant_value();
        EXPECT_EQ(r.get_den(), 1) << "coefficient " << n << " not integral";
        out.push_back(r.get_num());
    }
    return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> r;
    for (long x : v) r.emplace_back(x);
    return r;
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool zero_constant) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5), keep(0, 2);
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order; ++i)
        if (keep(rng) == 0) s[i] = Coefficient(Rational(num(rng), den(rng)));
    s[0] = zero_constant ? Coefficient() : Coefficient(1);
    return s;
}

NormalForm nf_terms(std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, Coefficient>> t) { return NormalForm::single_mode(t); }

}  // namespace

TEST(SeriesOps, InvolutionEgf) {
    TruncatedSeries f(4);
    f[1] = 1;
    f[2] = Rational(1, 2);
    EXPECT_EQ(egf_ints(exp(f)), ints({1, 1, 2, 4, 10}));
}

TEST(SeriesOps, IntegrateGeometric) {
    TruncatedSeries one_minus_z(10);
    one_minus_z[0] = 1;
    one_minus_z[1] = -1;
    TruncatedSeries g = integrate(inverse(one_minus_z));
    EXPECT_EQ(g.order(), 11u);
    EXPECT_TRUE(g[0].is_zero());
    for (long n = 1; n <= 11; ++n) EXPECT_EQ(g[n], Coefficient(Rational(1, n)));
}

TEST(SeriesOps, ExpOfGeometric) {
    TruncatedSeries one_minus_z(6);
    one_minus_z[0] = 1;
    one_minus_z[1] = -1;
    TruncatedSeries inner = TruncatedSeries::variable(6) * inverse(one_minus_z);
    EXPECT_EQ(egf_ints(exp(inner)), ints({1, 1, 3, 13, 73, 501, 4051}));
    EXPECT_EQ(compose(exp_series(6), inner), exp(inner));
}

TEST(SeriesOps, Preconditions) {
    TruncatedSeries s = TruncatedSeries::constant(2, 5);
    EXPECT_THROW(exp(s), PreconditionError);
    EXPECT_THROW(log(s), PreconditionError);
    EXPECT_THROW(compose(s, s), PreconditionError);
    EXPECT_THROW(inverse(TruncatedSeries(5)), PreconditionError);
    EXPECT_THROW(s.truncated(6), PreconditionError);
}

TEST(SeriesOps, MixedOrdersTruncate) {
    TruncatedSeries a = exp_series(10), b = exp_series(4);
    EXPECT_EQ((a + b).order(), 4u);
    EXPECT_EQ((a * b).order(), 4u);
    EXPECT_EQ(a * b, exp_series(4, 2));
}

TEST(SeriesOps, RingLawsRandomized) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 24;
        TruncatedSeries a = random_series(rng, n, false), b = random_series(rng, n, true), c = random_series(rng, n, true);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(log(exp(b)), b);
        EXPECT_EQ(exp(log(a)), a);
        EXPECT_EQ(a * inverse(a), TruncatedSeries::constant(1, n));
    }
}

TEST(SeriesOps, BinomialSeriesSquares) {
    TruncatedSeries h = binomial_series(1, Rational(1, 2), 12);
    TruncatedSeries one_minus_z(12);
    one_minus_z[0] = 1;
    one_minus_z[1] = -1;
    EXPECT_EQ(h * h, inverse(one_minus_z));
    TruncatedSeries g = inverse(TruncatedSeries(std::vector<Coefficient>{1, -3, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(binomial_series(3, 2, 8), g * g);
}

TEST(SeriesOps, Rescale) {
    TruncatedSeries e = exp_series(8);
    TruncatedSeries r = rescale(e, Rational(3, 2));
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(r[n], e[n] * Coefficient(rpow(Rational(3, 2), n)));
    EXPECT_EQ(r, exp_series(8, Rational(3, 2)));
}

TEST(Laplace, Fixtures) {
    TruncatedSeries one_minus_z(9);
    one_minus_z[0] = 1;
    one_minus_z[1] = -1;
    EXPECT_EQ(laplace(exp_series(9)), inverse(one_minus_z));
    EXPECT_EQ(laplace(TruncatedSeries(5)), TruncatedSeries(5));
    // 1/sqrt(cos 2z)
    TruncatedSeries g = exp(Coefficient(Rational(-1, 2)) * log(cos_series(6, 2)));
    TruncatedSeries l = laplace(g);
    EXPECT_EQ(l[0], Coefficient(1));
    EXPECT_EQ(l[2], Coefficient(2));
    EXPECT_EQ(l[4], Coefficient(28));
    EXPECT_EQ(l[6], Coefficient(1112));
    EXPECT_EQ(borel(l), g);
}

TEST(IncreasingTree, QuadraticSymbolicU) {
    RingPtr ring = Ring::make({"u"});
    Coefficient u = Coefficient::parameter(ring, "u");
    TruncatedSeries t = solve_increasing_tree(PolynomialSpec{0, 0, 1}, u, 10);
    EXPECT_TRUE(t[0].is_zero());
    // u^2 z / (1 - u z)
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(t[n], u.pow(n + 1));
    TruncatedSeries t1 = solve_increasing_tree(PolynomialSpec{0, 0, 1}, 1, 8);
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(t1[n], Coefficient(1));
}

TEST(IncreasingTree, CubicTreesAndForests) {
    TruncatedSeries t = solve_increasing_tree(PolynomialSpec{0, 0, 0, 1}, 1, 5);
    // (1 - 2z)^{-1/2} - 1
    EXPECT_EQ(egf_ints(t), ints({0, 1, 3, 15, 105, 945}));
    auto forests = egf_ints(exp(t));
    EXPECT_EQ(std::vector<Integer>(forests.begin(), forests.begin() + 5), ints({1, 1, 4, 25, 211}));
    // row sums of (X^3 D)^n
    NormalForm h = nf_terms({{3, 1, 1}});
    for (unsigned n = 0; n <= 5; ++n) {
        Coefficient sum;
        NormalForm p = power_normal_order(h, n);
        for (const auto& [m, c] : p.terms()) sum += c;
        EXPECT_EQ(Coefficient(forests[n]), sum) << n;
    }
}

TEST(IncreasingTree, ConstantPhi) { EXPECT_EQ(solve_increasing_tree(PolynomialSpec{1}, 1, 6), TruncatedSeries::variable(6)); }

namespace {

ODESystemSpec zigzag_spec() {
    // A' = 1 + 4A^2, B' = 1 + 4B^2, C' = 4A(C + 1), D' = 2A
    ODESystemSpec s;
    s.m = 4;
    s.rhs = {{{{0, 0, 0, 0}, 1}, {{2, 0, 0, 0}, 4}},
             {{{0, 0, 0, 0}, 1}, {{0, 2, 0, 0}, 4}},
             {{{1, 0, 1, 0}, 4}, {{1, 0, 0, 0}, 4}},
             {{{1, 0, 0, 0}, 2}}};
    return s;
}

}  // namespace

TEST(OdeSystem, ZigzagMatchesClosedForms) {
    auto sol = solve_ode_system(zigzag_spec(), 12);
    auto closed = zigzag_closed_forms(12);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(sol[i], closed[i]) << i;
    EXPECT_EQ(sol[0].egf(3), Coefficient(8));
    // D = -log(cos 2z)/2
    EXPECT_EQ(sol[3], Coefficient(Rational(-1, 2)) * log(cos_series(12, 2)));
}

TEST(OdeSystem, ZeroRightHandSides) {
    ODESystemSpec s;
    s.m = 3;
    s.rhs = {{}, {}, {}};
    for (const auto& t : solve_ode_system(s, 7)) EXPECT_EQ(t, TruncatedSeries(7));
}

TEST(OdeSystem, Ehrenfest) {
    RingPtr ring = Ring::make({"x", "y"});
    Coefficient x = Coefficient::parameter(ring, "x"), y = Coefficient::parameter(ring, "y");
    // x d/dy + y d/dx: T_x' = y + T_y, T_y' = x + T_x
    ODESystemSpec s;
    s.m = 2;
    s.rhs = {{{{0, 1}, 1}}, {{{1, 0}, 1}}};
    s.shifts = {x, y};
    auto sol = solve_ode_system(s, 10);
    TruncatedSeries ch(10), sh(10);
    for (std::size_t n = 0; n <= 10; ++n) (n % 2 ? sh : ch)[n] = Coefficient(Rational(1) / Rational(factorial(n)));
    TruncatedSeries px = sol[0], py = sol[1];
    px[0] += x;
    py[0] += y;
    EXPECT_EQ(px, x * ch + y * sh);
    EXPECT_EQ(py, y * ch + x * sh);
}

TEST(ClosedGf, Bell) {
    EXPECT_EQ(egf_ints(closed_gf("bell", {}, 5)), ints({1, 1, 2, 5, 15, 52}));
    TruncatedSeries b = closed_gf("bell", {}, 12);
    for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(b.egf(n), Coefficient(oracle::bell_recurrence(n)));
}

TEST(ClosedGf, InvolutionRowSums) {
    TruncatedSeries g = closed_gf("involution", {}, 8);
    for (unsigned n = 0; n <= 8; ++n) {
        Coefficient sum;
        for (unsigned l = 0; l <= n; ++l)
            for (unsigned m = 0; l + m <= n; ++m) sum += involution_coeff(n, l, m, 1, 1);
        EXPECT_EQ(g.egf(n), sum) << n;
    }
}

TEST(ClosedGf, QuadCircleConstantTerms) {
    GfParams p;
    p.u = 0;
    p.v = 0;
    TruncatedSeries g = closed_gf("quad-circle", p, 8);
    auto rows = exp_normal_order(nf_terms({{2, 0, 1}, {0, 2, 1}}), 8);
    for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(g.egf(n), constant_term(rows[n]));
    EXPECT_EQ(g.egf(6), Coefficient(1112));
}

TEST(ClosedGf, UnknownFamily) { EXPECT_THROW(closed_gf("nope", {}, 3), PreconditionError); }

TEST(ClosedGf, InvalidParameters) {
    GfParams p;
    p.r = 1;
    EXPECT_THROW(closed_gf("xrd-trees", p, 3), PreconditionError);
    EXPECT_THROW(closed_gf("geninv-ax-d", GfParams{}, 3), PreconditionError);
}

namespace {

struct UV {
    RingPtr ring = Ring::make({"u", "v"});
    Coefficient u = Coefficient::parameter(ring, "u");
    Coefficient v = Coefficient::parameter(ring, "v");
    GfParams params() const {
        GfParams p;
        p.u = u;
        p.v = v;
        return p;
    }
};

}  // namespace

TEST(Identities, LinearFormSymbolic) {
    RingPtr ring = Ring::make({"alpha", "beta", "u", "v"});
    Coefficient a = Coefficient::parameter(ring, "alpha"), b = Coefficient::parameter(ring, "beta");
    Coefficient u = Coefficient::parameter(ring, "u"), v = Coefficient::parameter(ring, "v");
    NormalForm h(1);
    h.add(NormalMonomial::single(1, 0), a);
    h.add(NormalMonomial::single(0, 1), b);
    TruncatedSeries lhs = egf_of(exp_normal_order(h, 8), u, v);
    // e^{ab z^2/2} e^{a z u} e^{b z v}, expanded independently
    TruncatedSeries rhs = exp(TruncatedSeries(std::vector<Coefficient>{0, 0, a * b / Rational(2), 0, 0, 0, 0, 0, 0})) *
                          exp_series(8, a * u) * exp_series(8, b * v);
    EXPECT_EQ(lhs, rhs);
    GfParams p;
    p.u = u;
    p.v = v;
    p.alpha = a;
    p.beta = b;
    EXPECT_EQ(closed_gf("involution", p, 8), rhs);
}

TEST(Identities, GenInvD2PlusX) {
    UV s;
    auto rows = exp_normal_order(nf_terms({{0, 2, 1}, {1, 0, 1}}), 8);
    EXPECT_EQ(egf_of(rows, s.u, s.v), closed_gf("geninv-d2x", s.params(), 8));
}

TEST(Identities, GenInvX2PlusD) {
    UV s;
    auto rows = exp_normal_order(nf_terms({{2, 0, 1}, {0, 1, 1}}), 8);
    EXPECT_EQ(egf_of(rows, s.u, s.v), closed_gf("geninv-x2d", s.params(), 8));
}

TEST(Identities, GenInvPolynomial) {
    UV s;
    GfParams p = s.params();
    p.a = PolynomialSpec{0, 2, 0, 1};  // a(y) = 2y + y^3
    auto rows_ad = exp_normal_order(nf_terms({{1, 0, 1}, {0, 1, 2}, {0, 3, 1}}), 7);
    EXPECT_EQ(egf_of(rows_ad, s.u, s.v), closed_gf("geninv-ad-x", p, 7));
    auto rows_ax = exp_normal_order(nf_terms({{0, 1, 1}, {1, 0, 2}, {3, 0, 1}}), 7);
    EXPECT_EQ(egf_of(rows_ax, s.u, s.v), closed_gf("geninv-ax-d", p, 7));
}

TEST(Identities, QuadCircleSymbolic) {
    UV s;
    auto rows = exp_normal_order(nf_terms({{2, 0, 1}, {0, 2, 1}}), 8);
    EXPECT_EQ(egf_of(rows, s.u, s.v), closed_gf("quad-circle", s.params(), 8));
}

TEST(Identities, XrDTrees) {
    UV s;
    for (unsigned r = 2; r <= 4; ++r) {
        GfParams p = s.params();
        p.r = r;
        auto rows = exp_normal_order(nf_terms({{r, 1, 1}}), 7);
        EXPECT_EQ(egf_of(rows, s.u, s.v), closed_gf("xrd-trees", p, 7)) << r;
    }
}

TEST(Identities, PlantedTrees) {
    UV s;
    GfParams p = s.params();
    p.phi = PolynomialSpec{0, 0, 1};  // X^2 D
    p.rho = PolynomialSpec{0, 1};     // + X
    auto rows = exp_normal_order(nf_terms({{2, 1, 1}, {1, 0, 1}}), 7);
    EXPECT_EQ(egf_of(rows, s.u, s.v), closed_gf("planted-trees", p, 7));
    p.phi = PolynomialSpec{1, 1, 1};  // (1 + X + X^2) D
    p.rho = PolynomialSpec{0, 0, 3};  // + 3X^2
    rows = exp_normal_order(nf_terms({{0, 1, 1}, {1, 1, 1}, {2, 1, 1}, {2, 0, 3}}), 6);
    EXPECT_EQ(egf_of(rows, s.u, s.v), closed_gf("planted-trees", p, 6));
}

TEST(Identities, EulerianDescents) {
    RingPtr ring = Ring::make({"u"});
    Coefficient u = Coefficient::parameter(ring, "u");
    GfParams p;
    p.u = u;
    TruncatedSeries g = closed_gf("eulerian", p, 7);
    EXPECT_TRUE(g[0].is_one());
    for (unsigned n = 1; n <= 7; ++n) {
        Coefficient expect = Coefficient::constant(ring, 0);
        for (const auto& perm : oracle::permutations(n)) {
            unsigned des = 0;
            for (unsigned i = 0; i + 1 < n; ++i) des += perm[i] > perm[i + 1];
            expect += u.pow(des + 1);
        }
        EXPECT_EQ(g.egf(n), expect) << n;
    }
}

namespace {

struct PermProp {
    RingPtr ring = Ring::make({"alpha", "beta", "gamma", "u", "v"});
    Coefficient a = Coefficient::parameter(ring, "alpha"), b = Coefficient::parameter(ring, "beta"), g = Coefficient::parameter(ring, "gamma");
    Coefficient u = Coefficient::parameter(ring, "u"), v = Coefficient::parameter(ring, "v");
};

// A' = beta + 2 gamma A + 4 alpha A^2, B' = alpha + 2 gamma B + 4 beta B^2,
// C' = (gamma + 4 alpha A)(C + 1), D' = 2 alpha A
std::vector<TruncatedSeries> perm_components(const Coefficient& a, const Coefficient& b, const Coefficient& g, std::size_t order) {
    ODESystemSpec s;
    s.m = 4;
    s.rhs = {{{{0, 0, 0, 0}, b}, {{1, 0, 0, 0}, Coefficient(2) * g}, {{2, 0, 0, 0}, Coefficient(4) * a}},
             {{{0, 0, 0, 0}, a}, {{0, 1, 0, 0}, Coefficient(2) * g}, {{0, 2, 0, 0}, Coefficient(4) * b}},
             {{{0, 0, 0, 0}, g}, {{0, 0, 1, 0}, g}, {{1, 0, 0, 0}, Coefficient(4) * a}, {{1, 0, 1, 0}, Coefficient(4) * a}},
             {{{1, 0, 0, 0}, Coefficient(2) * a}}};
    return solve_ode_system(s, order);
}

TruncatedSeries perm_gf(const Coefficient& a, const Coefficient& b, const Coefficient& g, const Coefficient& u, const Coefficient& v, std::size_t order) {
    auto c = perm_components(a, b, g, order);
    return exp((u * u) * c[0] + (v * v) * c[1] + (u * v) * c[2] + c[3]);
}

double eval_at(const TruncatedSeries& s, double z) {
    double acc = 0;
    for (std::size_t n = s.order() + 1; n-- > 0;) acc = acc * z + s[n].to_double();
    return acc;
}

}  // namespace

TEST(Identities, PermPropSymbolic) {
    PermProp P;
    NormalForm h(1);
    h.add(NormalMonomial::single(0, 2), P.a);
    h.add(NormalMonomial::single(2, 0), P.b);
    h.add(NormalMonomial::single(1, 1), P.g);
    auto rows = exp_normal_order(h, 7);
    EXPECT_EQ(egf_of(rows, P.u, P.v), perm_gf(P.a, P.b, P.g, P.u, P.v, 7));
}

TEST(Identities, PermPropTrigFloat) {
    // the literal closed form carries e^{-gamma z/2}; the ODE route is authoritative
    const Rational u(3, 10), v(7, 10);
    for (auto [al, be, ga] : std::vector<std::array<double, 3>>{{1, 1, 1}, {2, 3, 1}}) {
        TruncatedSeries s = perm_gf(Rational(al), Rational(be), Rational(ga), u, v, 30);
        double delta = std::sqrt(4 * al * be - ga * ga), theta = std::atan(ga / delta);
        double ud = u.get_d(), vd = v.get_d();
        for (double z : {0.02, 0.05}) {
            double ratio = std::cos(theta) / std::cos(delta * z + theta);
            double closed = std::exp((ud * ud / (4 * al) + vd * vd / (4 * be)) * (delta * std::tan(delta * z + theta) - ga)) *
                            std::exp(ud * vd * (ratio - 1)) * std::exp(-ga * z / 2) * std::sqrt(ratio);
            EXPECT_NEAR(eval_at(s, z), closed, 1e-9) << al << "," << be << "," << ga << " z=" << z;
        }
    }
}

TEST(Dobinski, PartialSumsBracketBell) {
    // e^{-1} bracketed by alternating partial sums
    Rational e_lo = 0, e_hi = 0, term = 1;
    for (int k = 0; k <= 31; ++k) {
        if (k > 0) term /= k;
        Rational t = k % 2 ? Rational(-term) : term;
        e_hi += t;
        if (k == 30) e_lo = e_hi;
    }
    std::swap(e_lo, e_hi);
    if (e_lo > e_hi) std::swap(e_lo, e_hi);
    for (unsigned n = 0; n <= 10; ++n) {
        unsigned L = 3 * n + 20;
        Rational s = 0;
        for (unsigned l = 0; l <= L; ++l) s += ratio(ipow(l, n), factorial(l));
        // terms past L shrink by more than half each step
        Rational tail = 2 * ratio(ipow(L + 1, n), factorial(L + 1));
        Rational lo = s * e_lo, hi = (s + tail) * e_hi;
        Rational bell_n = Rational(bell(n));
        EXPECT_LE(lo, bell_n) << n;
        EXPECT_GE(hi, bell_n) << n;
        EXPECT_LT(Rational(hi - lo), Rational(1, 1000000) * bell_n) << n;
    }
}

TEST(ExpTimesDerivative, Fixtures) {
    EXPECT_TRUE(exp_times_derivative_check(1, 2, 6));
    EXPECT_TRUE(exp_times_derivative_check(2, 1, 6));
    EXPECT_TRUE(exp_times_derivative_check(3, 3, 9));
    EXPECT_THROW(exp_times_derivative_check(3, 3, 5), PreconditionError);
}

TEST(ExpTimesDerivative, Sweep) {
    for (unsigned n = 0; n <= 4; ++n)
        for (unsigned m = 0; m <= 5; ++m) EXPECT_TRUE(exp_times_derivative_check(n, m, m + n + 4)) << n << "," << m;
}

TEST(ExpTimesDerivative, DirectSeriesN2M1) {
    // (e^x D)^2 x = e^x D e^x = e^{2x}
    TruncatedSeries f(8);
    f[1] = 1;
    TruncatedSeries left = f;
    for (int i = 0; i < 2; ++i) {
        TruncatedSeries d = differentiate(left);
        left = exp_series(d.order()) * d;
    }
    EXPECT_EQ(left, exp_series(6, 2));
}
