#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsmac/coeffs.hpp"

using namespace nsmac;

namespace {

ParamMonomial mono(int64_t qe, int64_t ae, int64_t be = 0) { return {qe, ae, be}; }

CoeffFraction frac(ParamPoly num, std::vector<ParamMonomial> den = {}) {
    return CoeffFraction(std::move(num), std::move(den));
}

ParamPoly poly(std::initializer_list<std::pair<ParamMonomial, long>> ts) {
    ParamPoly p;
    for (auto& [m, c] : ts) p += ParamPoly::monomial(m, c);
    return p;
}

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed) : rng(seed) {}
    int64_t range(int64_t lo, int64_t hi) {
        return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
    }
    ParamMonomial monomial(bool nontrivial = false) {
        while (true) {
            ParamMonomial m{range(-3, 3), range(-3, 3), range(-2, 2)};
            if (!nontrivial || !m.is_one()) return m;
        }
    }
    ParamPoly poly_(int max_terms = 3) {
        ParamPoly p;
        int k = static_cast<int>(range(1, max_terms));
        for (int i = 0; i < k; ++i) p += ParamPoly::monomial(monomial(), range(-3, 3));
        return p;
    }
    CoeffFraction fraction() {
        std::vector<ParamMonomial> den;
        int k = static_cast<int>(range(0, 2));
        for (int i = 0; i < k; ++i) den.push_back(monomial(true));
        return CoeffFraction(poly_(), den);
    }
};

// exact evaluation with q^{1/m} = xq, t_s^{1/2} = xa, t_l^{1/2} = xb
mpq_class pow_q(const mpq_class& x, int64_t e) {
    mpq_class r = 1;
    mpq_class b = e >= 0 ? x : mpq_class(1 / x);
    for (int64_t i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
    return r;
}

mpq_class eval(const ParamMonomial& m, const mpq_class& xq, const mpq_class& xa, const mpq_class& xb) {
    return pow_q(xq, m.qe) * pow_q(xa, m.ae) * pow_q(xb, m.be);
}

mpq_class eval(const CoeffFraction& f, const mpq_class& xq, const mpq_class& xa, const mpq_class& xb) {
    mpq_class n = 0;
    for (const auto& t : f.num().terms()) n += mpq_class(t.c) * eval(t.m, xq, xa, xb);
    mpq_class d = 1;
    for (const auto& m : f.den()) d *= 1 - eval(m, xq, xa, xb);
    return n / d;
}

const RenderContext ctx{2, true};

}  // namespace

TEST_CASE("binomial cancellation and squares") {
    ParamMonomial m = mono(-2, -2);  // q^-1 t^-1 with m* = 2
    CoeffFraction a = frac(ParamPoly(1) - ParamPoly::monomial(m));
    CoeffFraction b = frac(ParamPoly(1), {m});
    CHECK((a * b).reduced().is_one());

    CoeffFraction s = frac(poly({{mono(0, 1), 1}, {mono(0, -1), 1}}));
    CoeffFraction sq = s * s;
    CHECK(sq == frac(poly({{mono(0, 2), 1}, {mono(0, 0), 2}, {mono(0, -2), 1}})));
    CHECK(sq.str(ctx) == "t + 2 + t^-1");
}

TEST_CASE("a fraction plus its negation is zero") {
    CoeffFraction x = frac(ParamPoly(1) - ParamPoly::monomial(mono(0, -2)), {mono(-2, -2)});
    CHECK((x + (-x)).is_zero());
    CHECK(x.str(ctx) == "(1 - t^-1)/(1 - q^-1 t^-1)");
}

TEST_CASE("limits at zero") {
    CoeffFraction x = frac(ParamPoly(1) - ParamPoly::monomial(mono(0, -2)), {mono(-2, -2)});
    CoeffFraction at_inf = x.limit_at_zero(Slot::q, -1);
    CHECK(at_inf == frac(ParamPoly(1) - ParamPoly::monomial(mono(0, -2))));
    CHECK(x.limit_at_zero(Slot::q, +1).is_zero());
    CoeffFraction c(7);
    CHECK(c.limit_at_zero(Slot::q, 1) == c);
    CHECK(c.limit_at_zero(Slot::ts, -1) == c);
    CoeffFraction pole = frac(ParamPoly::monomial(mono(2, 0)));
    CHECK_THROWS_AS(pole.limit_at_zero(Slot::q, -1), PoleAtLimit);
}

TEST_CASE("polynomiality test") {
    std::vector<Var> cone{Var::q_inv, Var::ts_inv, Var::tl_inv};
    CHECK(frac(ParamPoly(1) - ParamPoly::monomial(mono(0, -2))).is_polynomial_in(cone, 2));
    CHECK_FALSE(frac(ParamPoly(1) - ParamPoly::monomial(mono(0, -2)), {mono(-2, -2)})
                    .is_polynomial_in(cone, 2));
    CHECK(frac(ParamPoly::monomial(mono(-1, -2, -4))).is_polynomial_in(cone, 1));
    CHECK_FALSE(frac(ParamPoly::monomial(mono(-1, 0))).is_polynomial_in(cone, 2));
    CHECK_FALSE(frac(ParamPoly::monomial(mono(0, -1))).is_polynomial_in(cone, 2));
    CHECK(frac(ParamPoly::monomial(mono(-1, 0))).is_polynomial_in({Var::q_frac_inv}, 2));
}

TEST_CASE("inverse of binomial-shaped numerators") {
    Gen g(7);
    for (int i = 0; i < 200; ++i) {
        ParamMonomial u = g.monomial(true), v = g.monomial();
        CoeffFraction x = frac(ParamPoly::monomial(v, -1) + ParamPoly::monomial(v * u, 1),
                               {g.monomial(true)});
        CHECK((x * x.inv()).reduced().is_one());
    }
    CHECK_THROWS_AS(CoeffFraction().inv(), DivisionByZero);
    CHECK_THROWS_AS(CoeffFraction(2).inv(), DivisionByZero);
}

TEST_CASE("exact binomial division") {
    Gen g(11);
    for (int i = 0; i < 300; ++i) {
        ParamPoly p = g.poly_(4);
        ParamMonomial m = g.monomial(true);
        ParamPoly q;
        REQUIRE(p.mul_binomial(m).divide_binomial(m, &q));
        CHECK(q == p);
    }
    ParamPoly q;
    CHECK_FALSE((ParamPoly(1) + ParamPoly::monomial(mono(0, -2))).divide_binomial(mono(0, -2), &q));
}

TEST_CASE("ring axioms on random fractions") {
    Gen g(3);
    for (int i = 0; i < 300; ++i) {
        CoeffFraction a = g.fraction(), b = g.fraction(), c = g.fraction();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
        CHECK(a.reduced() == a);
        CHECK(a.reduced().reduced().num() == a.reduced().num());
        CHECK(a.invert_params().invert_params() == a);
    }
}

TEST_CASE("random fractions agree with exact evaluation") {
    Gen g(5);
    mpq_class xq(2, 7), xa(5, 3), xb(3, 11);
    for (int i = 0; i < 200; ++i) {
        CoeffFraction a = g.fraction(), b = g.fraction();
        CHECK(eval(a * b, xq, xa, xb) == eval(a, xq, xa, xb) * eval(b, xq, xa, xb));
        CHECK(eval(a + b, xq, xa, xb) == eval(a, xq, xa, xb) + eval(b, xq, xa, xb));
        CHECK(eval(a.invert_params(), xq, xa, xb) == eval(a, 1 / xq, 1 / xa, 1 / xb));
    }
}

TEST_CASE("limits commute with ring operations and match numeric evaluation") {
    Gen g(9);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        CoeffFraction a = g.fraction(), b = g.fraction();
        Slot s = static_cast<Slot>(g.range(0, 2));
        int dir = g.range(0, 1) ? 1 : -1;
        CoeffFraction la, lb;
        try {
            la = a.limit_at_zero(s, dir);
            lb = b.limit_at_zero(s, dir);
        } catch (const PoleAtLimit&) {
            continue;
        }
        ++checked;
        CHECK((a * b).limit_at_zero(s, dir) == la * lb);
        CHECK((a + b).limit_at_zero(s, dir) == la + lb);

        // oracle: evaluate with the slot variable at a tiny (or huge) value
        mpq_class small(1, 1000000000);
        mpq_class x[3] = {mpq_class(2, 3), mpq_class(7, 5), mpq_class(4, 9)};
        mpq_class y[3] = {x[0], x[1], x[2]};
        y[static_cast<int>(s)] = dir > 0 ? small : mpq_class(1 / small);
        mpq_class exact = eval(a, y[0], y[1], y[2]);
        mpq_class lim = eval(la, x[0], x[1], x[2]);
        mpq_class diff = exact - lim;
        if (diff < 0) diff = -diff;
        mpq_class bound = (abs(lim) + 1) / 1000;
        CHECK(diff <= bound);
    }
    CHECK(checked > 100);
}

TEST_CASE("parameter merge and evaluation at one") {
    CoeffFraction x = frac(ParamPoly::monomial(mono(0, 1, 2)) + ParamPoly(1));
    CHECK(x.merge_t() == frac(ParamPoly::monomial(mono(0, 3, 0)) + ParamPoly(1)));
    CHECK(x.eval_one(Slot::ts).eval_one(Slot::tl) == CoeffFraction(2));
    CoeffFraction y = frac(ParamPoly(1), {mono(0, -2)});
    CHECK_THROWS_AS(y.eval_one(Slot::ts), PoleAtLimit);
}
