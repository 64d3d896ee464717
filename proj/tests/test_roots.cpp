#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "nsmac/roots.hpp"

using namespace nsmac;

namespace {

const std::vector<std::pair<char, int>> kAllTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'A', 8}, {'B', 2}, {'B', 3}, {'B', 5},
    {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'D', 8}, {'E', 6}, {'E', 7},
    {'E', 8}, {'F', 4}, {'G', 2}};

size_t expected_positive_count(char t, int n) {
    switch (t) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

RootVec neg(RootVec b) {
    for (auto& x : b) x = -x;
    return b;
}

}  // namespace

TEST_CASE("rank one and two data") {
    auto a1 = build_root_system('A', 1);
    CHECK(a1.theta == RootVec{1});
    CHECK(a1.positive_roots == std::vector<RootVec>{{1}});
    CHECK(a1.fundamental_weights[0][0] == Rational(1, 2));
    CHECK(a1.m_star == 2);
    CHECK(a1.pair_roots({1}, {1}) == 2);

    auto a2 = build_root_system('A', 2);
    CHECK(a2.theta == RootVec{1, 1});
    CHECK(a2.positive_roots.size() == 3);
    CHECK(a2.pair_weights({1, 0}, {1, 0}) == Rational(2, 3));
    CHECK(a2.m_star == 3);
    CHECK(a2.pair_root_weight({1, 0}, {1, 0}) == 1);

    auto b2 = build_root_system('B', 2);
    CHECK(b2.pair_roots({1, 0}, {1, 0}) == 4);
    CHECK(b2.pair_roots({0, 1}, {0, 1}) == 2);
    CHECK(b2.positive_roots.size() == 4);
    CHECK(b2.minuscule == std::vector<Weight>{{0, 0}, {0, 1}});

    auto c3 = build_root_system('C', 3);
    CHECK(c3.minuscule == std::vector<Weight>{{0, 0, 0}, {1, 0, 0}});
}

TEST_CASE("G2 against an explicit planar realization") {
    auto g2 = build_root_system('G', 2);
    CHECK(g2.r == 3);
    CHECK(g2.positive_roots.size() == 6);
    // In coordinates of R^3 (sum zero): alpha_1 = e1 - e2 (short), alpha_2 = -2e1 + e2 + e3.
    auto embed = [](const RootVec& b) {
        std::array<int64_t, 3> v{b[0] - 2 * b[1], -b[0] + b[1], b[1]};
        return v;
    };
    auto dot = [](const std::array<int64_t, 3>& x, const std::array<int64_t, 3>& y) {
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    };
    std::set<std::array<int64_t, 3>> expected;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            std::array<int64_t, 3> s{0, 0, 0}, l{1, 1, 1};
            s[i] = 1;
            s[j] = -1;
            expected.insert(s);
            l[i] = -2;
            l[j] = 1;
            int k = 3 - i - j;
            l[k] = 1;
            expected.insert(l);
            for (auto& x : l) x = -x;
            expected.insert(l);
        }
    std::set<std::array<int64_t, 3>> got;
    for (const auto& b : g2.positive_roots) {
        got.insert(embed(b));
        got.insert(embed(neg(b)));
        CHECK(g2.root_sq(b) == dot(embed(b), embed(b)));
    }
    CHECK(got == expected);
    // highest short root: maximal height among roots of square length 2
    RootVec best;
    for (const auto& b : g2.positive_roots)
        if (dot(embed(b), embed(b)) == 2 && (best.empty() || RootSystemData::height(b) > RootSystemData::height(best)))
            best = b;
    CHECK(g2.theta == best);
    CHECK(g2.theta == RootVec{2, 1});
}

TEST_CASE("invariants across all supported types") {
    for (auto [t, n] : kAllTypes) {
        CAPTURE(t);
        CAPTURE(n);
        auto R = build_root_system(t, n);
        CHECK(R.positive_roots.size() == expected_positive_count(t, n));
        int64_t min_sq = 1000;
        for (const auto& b : R.positive_roots) min_sq = std::min(min_sq, R.root_sq(b));
        CHECK(min_sq == 2);
        CHECK(R.root_sq(R.theta) == 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Weight e = R.zero_weight();
                e[i] = 1;
                CHECK(R.coroot_pairing(e, R.simple_root(j)) == (i == j ? 1 : 0));
            }
        // closure under simple reflections
        std::set<RootVec> all;
        for (const auto& b : R.positive_roots) {
            all.insert(b);
            all.insert(neg(b));
        }
        for (const auto& b : all)
            for (int i = 0; i < n; ++i) CHECK(all.count(R.reflect_root(i, b)) == 1);
        // theta is the unique maximal short root: theta - beta is a nonnegative combination
        for (const auto& b : R.positive_roots) {
            if (R.is_long(b)) continue;
            for (int i = 0; i < n; ++i) CHECK(R.theta[i] >= b[i]);
        }
        // m_star
        int64_t m = 1;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Weight a = R.zero_weight(), b = R.zero_weight();
                a[j] = 1;
                b[k] = 1;
                m = std::lcm(m, R.pair_weights(a, b).get_den().get_si());
            }
        CHECK(R.m_star == m);
        CHECK(R.m_literal == 1);
    }
}

TEST_CASE("unsupported types") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{
             {'B', 1}, {'C', 1}, {'D', 3}, {'E', 5}, {'E', 9}, {'F', 3}, {'G', 3}, {'A', 9}, {'X', 2}, {'A', 0}})
        CHECK_THROWS_AS(build_root_system(t, n), UnsupportedType);
    CHECK_THROWS_AS(build_root_system("BC2"), UnsupportedType);
    CHECK(build_root_system("g2").type == 'G');
}

TEST_CASE("affine roots negative on a weight") {
    auto a1 = build_root_system('A', 1);
    CHECK(a1.affine_roots_negative_on({-1}) == std::vector<AffineRoot>{{{1}, 0}});
    CHECK(a1.affine_roots_negative_on({-2}) == std::vector<AffineRoot>{{{1}, 0}, {{1}, 1}});
    CHECK(a1.affine_roots_negative_on({0}).empty());
    CHECK(a1.affine_roots_negative_on({1}).empty());
    for (auto [t, n] : kAllTypes) {
        if (n > 4) continue;
        auto R = build_root_system(t, n);
        for (const auto& l : R.minuscule) CHECK(R.affine_roots_negative_on(l).empty());
    }
}

TEST_CASE("negative-on enumeration matches a brute-force scan") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'C', 3}, {'G', 2}, {'A', 3}}) {
        auto R = build_root_system(t, n);
        std::vector<Weight> box{R.zero_weight()};
        for (int i = 0; i < n; ++i) {
            std::vector<Weight> next;
            for (const auto& w : box)
                for (int c = -2; c <= 2; ++c) {
                    Weight x = w;
                    x[i] = c;
                    next.push_back(x);
                }
            box = next;
        }
        for (const auto& l : box) {
            std::vector<AffineRoot> brute;
            for (const auto& b : R.positive_roots) {
                for (const RootVec& beta : {b, neg(b)}) {
                    int64_t p = R.pair_root_weight(beta, l);
                    int64_t bound = (p < 0 ? -p : p) + 1;
                    for (int64_t k = -bound; k <= bound; ++k) {
                        AffineRoot a{beta, k};
                        if (R.is_affine_root(a) && RootSystemData::is_positive(a) && R.pair_affine(a, l) < 0)
                            brute.push_back(a);
                    }
                }
            }
            std::sort(brute.begin(), brute.end(), [](const AffineRoot& x, const AffineRoot& y) {
                return x.k != y.k ? x.k < y.k : x.beta < y.beta;
            });
            CHECK(R.affine_roots_negative_on(l) == brute);
        }
    }
}
