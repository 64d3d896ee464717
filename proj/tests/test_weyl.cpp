#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "nsmac/weyl.hpp"
#include "support.hpp"

using namespace nsmac;
using testsupport::ElementGen;
using testsupport::weight_box;

namespace {

const std::vector<std::string> kSystems = {"A1", "A2", "B2", "G2", "A3", "C3"};

RootVec neg(RootVec b) {
    for (auto& x : b) x = -x;
    return b;
}

// Number of positive affine roots sent to negative roots: the length by definition.
int64_t inversion_count(const RootSystemData& R, const ExtendedWeylElement& x) {
    int64_t bound = 2;
    for (const auto& b : R.positive_roots) {
        int64_t p = R.pair_root_weight(x.w.act_root(b), x.mu);
        bound = std::max(bound, (p < 0 ? -p : p) + 2);
    }
    int64_t count = 0;
    for (const auto& b : R.positive_roots)
        for (const RootVec& beta : {b, neg(b)})
            for (int64_t k = 0; k <= bound; ++k) {
                AffineRoot a{beta, k};
                if (!R.is_affine_root(a) || !RootSystemData::is_positive(a)) continue;
                if (!RootSystemData::is_positive(level_zero_action(R, x, a))) ++count;
            }
    return count;
}

// All positive affine roots a with x(a) < 0, by brute force.
std::set<AffineRoot> inversions(const RootSystemData& R, const ExtendedWeylElement& x, int64_t bound) {
    std::set<AffineRoot> out;
    for (const auto& b : R.positive_roots)
        for (const RootVec& beta : {b, neg(b)})
            for (int64_t k = 0; k <= bound; ++k) {
                AffineRoot a{beta, k};
                if (!R.is_affine_root(a) || !RootSystemData::is_positive(a)) continue;
                if (!RootSystemData::is_positive(level_zero_action(R, x, a))) out.insert(a);
            }
    return out;
}

ExtendedWeylElement word_element(const RootSystemData& R, const std::vector<int>& letters) {
    ExtendedWeylElement y = ext_identity(R);
    for (int a : letters) y = y * ext_simple(R, a);
    return y;
}

}  // namespace

TEST_CASE("dot and level-zero actions") {
    auto a1 = build_root_system("A1");
    CHECK(dot_action(ext_simple(a1, 0), {2}) == Weight{0});
    CHECK(dot_action(ext_simple(a1, 1), {-1}) == Weight{1});
    auto a2 = build_root_system("A2");
    AffineWord tw = reduced_word(a2, ext_translation(a2, {1, 0}));
    CHECK(affine_dot_action(a2, tw, {0, 0}) == Weight{1, 0});

    for (const auto& name : kSystems) {
        auto R = build_root_system(name);
        AffineRoot a0 = R.affine_simple_root(0);
        AffineRoot img = level_zero_action(R, ext_simple(R, 0), a0);
        CHECK(img.beta == neg(a0.beta));
        CHECK(img.k == -a0.k);
    }
    CHECK(level_zero_action(a1, ext_translation(a1, {1}), AffineRoot{{1}, 0}) == AffineRoot{{1}, -1});
    CHECK(level_zero_action(a1, ext_simple(a1, 1), a1.affine_simple_root(0)) == AffineRoot{{1}, 1});
}

TEST_CASE("length formula") {
    auto a1 = build_root_system("A1");
    CHECK(length(a1, ext_translation(a1, {1})) == 1);
    CHECK(length(a1, ext_translation(a1, {2})) == 2);
    for (const auto& name : kSystems) {
        auto R = build_root_system(name);
        for (const auto& l : R.minuscule) CHECK(length(R, omega_element(R, l)) == 0);
    }
}

TEST_CASE("reduced words") {
    auto a1 = build_root_system("A1");
    AffineWord e = reduced_word(a1, ext_identity(a1));
    CHECK(e.letters.empty());
    CHECK(e.omega == Weight{0});

    // exhaustive search over words of length <= 2 with every Omega component
    ExtendedWeylElement target2 = ext_translation(a1, {2});
    ExtendedWeylElement target1 = ext_translation(a1, {1});
    int min2 = 99, min1 = 99;
    for (const auto& om : a1.minuscule)
        for (int len = 0; len <= 2; ++len)
            for (int mask = 0; mask < (1 << len); ++mask) {
                std::vector<int> letters;
                for (int i = 0; i < len; ++i) letters.push_back((mask >> i) & 1);
                ExtendedWeylElement y = evaluate(a1, {om, letters});
                if (y == target2) min2 = std::min(min2, len);
                if (y == target1) min1 = std::min(min1, len);
            }
    AffineWord w2 = reduced_word(a1, target2);
    CHECK(static_cast<int>(w2.letters.size()) == min2);
    CHECK(min2 == 2);
    CHECK(evaluate(a1, w2) == target2);
    AffineWord w1 = reduced_word(a1, target1);
    CHECK(w1.letters.size() == 1);
    CHECK(min1 == 1);
    CHECK(w1.omega == Weight{1});
    CHECK(evaluate(a1, w1) == target1);
    CHECK(render_word(w1) == "s" + std::to_string(w1.letters[0]) + " | omega=λ_1");
}

TEST_CASE("length formula agrees with word length and inversion count on random elements") {
    for (const auto& name : kSystems) {
        auto R = build_root_system(name);
        ElementGen g(42);
        for (int i = 0; i < 200; ++i) {
            ExtendedWeylElement x = g.extended(R, 3, 8);
            int64_t l = length(R, x);
            for (TieBreak tb : {TieBreak::smallest, TieBreak::largest}) {
                AffineWord w = reduced_word(R, x, tb);
                CHECK(static_cast<int64_t>(w.letters.size()) == l);
                CHECK(evaluate(R, w) == x);
            }
            CHECK(inversion_count(R, x) == l);
        }
    }
}

TEST_CASE("group structure") {
    for (const auto& name : kSystems) {
        auto R = build_root_system(name);
        ElementGen g(7);
        for (int i = 0; i < 50; ++i) {
            FiniteWeylElement w = g.finite(R, 6);
            Weight mu = g.weight(R.rank, 3);
            ExtendedWeylElement we = ext_finite(w, R.rank);
            CHECK(we * ext_translation(R, mu) * ext_inverse(R, we) == ext_translation(R, w.act(mu)));
            ExtendedWeylElement x = g.extended(R, 2, 5), y = g.extended(R, 2, 5);
            CHECK(x * ext_inverse(R, x) == ext_identity(R));
            CHECK(ext_inverse(R, x * y) == ext_inverse(R, y) * ext_inverse(R, x));
        }
    }
}

TEST_CASE("translation lengths") {
    for (const auto& name : kSystems) {
        auto R = build_root_system(name);
        ElementGen g(5);
        for (int i = 0; i < 50; ++i) {
            Weight l = dominant_rep(R, g.weight(R.rank, 2)), m = dominant_rep(R, g.weight(R.rank, 2));
            Weight s = l;
            for (int k = 0; k < R.rank; ++k) s[k] += m[k];
            CHECK(length(R, ext_translation(R, s)) ==
                  length(R, ext_translation(R, l)) + length(R, ext_translation(R, m)));
            FiniteWeylElement w = g.finite(R, 6);
            CHECK(length(R, ext_finite(w, R.rank) * ext_translation(R, l)) ==
                  w.length(R) + length(R, ext_translation(R, l)));
            CHECK(length(R, ext_translation(R, w.act(l))) == length(R, ext_translation(R, l)));
        }
    }
}

TEST_CASE("orbit data examples") {
    auto a1 = build_root_system("A1");
    auto od = orbit_data(a1, {-1});
    CHECK(od.lambda_minus == Weight{-1});
    CHECK(od.lambda_plus == Weight{1});
    CHECK(od.lambda_tilde == Weight{1});
    CHECK(od.w_ring.empty());
    CHECK(od.w_lambda.letters == std::vector<int>{1});

    od = orbit_data(a1, {2});
    CHECK(od.lambda_tilde == Weight{0});
    CHECK(od.w_lambda.letters == std::vector<int>{0});
    CHECK(od.w_ring == std::vector<int>{1});

    auto a2 = build_root_system("A2");
    od = orbit_data(a2, {1, 0});
    CHECK(od.lambda_tilde == Weight{1, 0});
    CHECK(od.w_lambda.letters.empty());
    CHECK(od.w_ring.size() == 2);
}

TEST_CASE("orbit data invariants and coset lemmas") {
    for (const auto& name : kSystems) {
        auto R = build_root_system(name);
        FiniteWeylElement w0 = longest_element(R);
        int64_t lw0 = w0.length(R);
        for (const auto& l : weight_box(R.rank, 2)) {
            CAPTURE(name);
            CAPTURE(render_weight(l));
            auto od = orbit_data(R, l);
            FiniteWeylElement wr = FiniteWeylElement::from_word(R, od.w_ring);
            CHECK(wr.length(R) == static_cast<int64_t>(od.w_ring.size()));
            CHECK(wr.inverse(R).act(l) == od.lambda_minus);
            CHECK(RootSystemData::is_antidominant(od.lambda_minus));
            CHECK(RootSystemData::is_dominant(od.lambda_plus));
            CHECK(std::find(R.minuscule.begin(), R.minuscule.end(), od.lambda_tilde) != R.minuscule.end());
            ExtendedWeylElement wl = evaluate(R, od.w_lambda);
            CHECK(length(R, wl) == static_cast<int64_t>(od.w_lambda.letters.size()));
            CHECK(dot_action(ext_inverse(R, wl), l) == od.lambda_tilde);
            CHECK(od.v_lambda.omega == R.zero_weight());
            CHECK(od.v_lambda.letters.size() == od.w_lambda.letters.size() + lw0);
            ExtendedWeylElement om = omega_element(R, od.lambda_tilde);
            CHECK(evaluate(R, od.v_lambda) == wl * om * ext_finite(w0, R.rank) * ext_inverse(R, om));

            // Pi(ring w^{-1}) = {alpha > 0 : (lambda, alpha) > 0}
            std::set<RootVec> lhs, rhs;
            for (const auto& b : inversion_set(R, wr.inverse(R))) lhs.insert(b);
            for (const auto& b : R.positive_roots)
                if (R.pair_root_weight(b, l) > 0) rhs.insert(b);
            CHECK(lhs == rhs);

            // Pi(w^{-1}) = {alpha in R^+ : (lambda + Lambda_0, alpha) < 0}
            auto neg_on = R.affine_roots_negative_on(l);
            int64_t bound = 4;
            for (const auto& b : R.positive_roots) {
                int64_t p = R.pair_root_weight(b, l);
                bound = std::max(bound, (p < 0 ? -p : p) + 4);
            }
            CHECK(inversions(R, ext_inverse(R, wl), bound) == std::set<AffineRoot>(neg_on.begin(), neg_on.end()));

            // negative-on roots are carried into positive finite roots by ring w^{-1}
            for (const auto& a : neg_on) CHECK(RootSystemData::is_positive(wr.inverse(R).act_root(a.beta)));

            // ascents move up in the order; s_0 twists ring w by s_theta
            for (int i = 0; i <= R.rank; ++i) {
                Weight s = simple_dot(R, i, l);
                if (s == l) continue;
                auto os = orbit_data(R, s);
                FiniteWeylElement expect = (i == 0 ? reflection(R, R.theta) : FiniteWeylElement::simple(R, i)) * wr;
                CHECK(FiniteWeylElement::from_word(R, os.w_ring) == expect);
                CHECK(bruhat_leq_weights(R, l, s) == (alcove_pairing(R, i, l) > 0));
            }

            // anti-dominant lambda and mu in its orbit
            if (RootSystemData::is_antidominant(l)) {
                for (const auto& mu : finite_orbit(R, l)) {
                    auto om_ = orbit_data(R, mu);
                    FiniteWeylElement wm = FiniteWeylElement::from_word(R, om_.w_ring);
                    ExtendedWeylElement wmu = evaluate(R, om_.w_lambda);
                    CHECK(ext_finite(wm.inverse(R), R.rank) * wmu == wl);
                    CHECK(length(R, wl) == length(R, wmu) + wm.length(R));
                    ExtendedWeylElement omt = omega_element(R, om_.lambda_tilde);
                    CHECK(ext_translation(R, mu) * ext_finite(wm, R.rank) == wmu * omt);
                    CHECK(length(R, ext_translation(R, mu)) == length(R, wmu) + wm.length(R));
                }
                CHECK(wl * omega_element(R, od.lambda_tilde) == ext_translation(R, l));
            }
        }
    }
}

TEST_CASE("Bruhat order on weights") {
    auto a1 = build_root_system("A1");
    CHECK(bruhat_leq_weights(a1, {1}, {1}));
    CHECK(bruhat_leq_weights(a1, {1}, {-1}));
    CHECK_FALSE(bruhat_leq_weights(a1, {-1}, {1}));
    CHECK_FALSE(bruhat_leq_weights(a1, {-1}, {2}));

    CHECK(bruhat_interval_in_orbit(a1, {1}) == std::vector<Weight>{{-1}});
    CHECK(bruhat_interval_in_orbit(a1, {-1}) == std::vector<Weight>{{-1}, {1}});

    for (const auto& name : {"A1", "A2", "B2", "G2"}) {
        auto R = build_root_system(name);
        auto box = weight_box(R.rank, 3);
        for (const auto& l : weight_box(R.rank, 2)) {
            std::set<Weight> brute;
            for (const auto& m : box)
                if (bruhat_leq_weights(R, m, l)) brute.insert(m);
            auto li = lower_interval(R, l);
            std::set<Weight> li_set(li.begin(), li.end());
            // the scan only sees the box, so compare inside it
            for (const auto& m : brute) CHECK(li_set.count(m) == 1);
            for (const auto& m : box)
                if (li_set.count(m)) CHECK(brute.count(m) == 1);
            for (const auto& m : li) CHECK(bruhat_leq_weights(R, m, l));

            std::vector<Weight> orb;
            Weight lo = longest_element(R).act(l), hi = antidominant_rep(R, l);
            for (const auto& m : finite_orbit(R, l))
                if (bruhat_leq_weights(R, lo, m) && bruhat_leq_weights(R, m, hi)) orb.push_back(m);
            CHECK(bruhat_interval_in_orbit(R, l) == orb);
        }
    }
}

TEST_CASE("Bruhat order matches the subword criterion and lifting property") {
    for (const auto& name : {"A1", "A2", "B2"}) {
        auto R = build_root_system(name);
        ElementGen g(13);
        for (int i = 0; i < 60; ++i) {
            ExtendedWeylElement w = g.extended(R, 2, 4);
            AffineWord ww = reduced_word(R, w);
            if (ww.letters.size() > 9) continue;
            std::set<ExtendedWeylElement> sub;
            size_t L = ww.letters.size();
            for (size_t mask = 0; mask < (size_t{1} << L); ++mask) {
                std::vector<int> letters;
                for (size_t k = 0; k < L; ++k)
                    if (mask >> k & 1) letters.push_back(ww.letters[k]);
                sub.insert(evaluate(R, {ww.omega, letters}));
            }
            for (const auto& x : sub) CHECK(bruhat_leq(R, x, w));
            // elements of the same or smaller length outside the subword set
            for (int j = 0; j < 40; ++j) {
                ExtendedWeylElement x = omega_element(R, ww.omega) * word_element(R, [&] {
                    std::vector<int> letters;
                    int len = static_cast<int>(g.range(0, static_cast<int64_t>(L)));
                    for (int k = 0; k < len; ++k) letters.push_back(static_cast<int>(g.range(0, R.rank)));
                    return letters;
                }());
                CHECK(bruhat_leq(R, x, w) == (sub.count(x) == 1));
                // lifting: x <= w implies s x <= w or s x <= s w
                if (bruhat_leq(R, x, w)) {
                    for (int s = 0; s <= R.rank; ++s) {
                        ExtendedWeylElement sx = ext_simple(R, s) * x, sw = ext_simple(R, s) * w;
                        CHECK((bruhat_leq(R, sx, w) || bruhat_leq(R, sx, sw)));
                    }
                }
            }
        }
    }
}

TEST_CASE("lower sets of v_lambda are unions of cosets") {
    for (const auto& name : {"A1", "A2"}) {
        auto R = build_root_system(name);
        for (const auto& l : weight_box(R.rank, name == std::string("A1") ? 3 : 1)) {
            auto od = orbit_data(R, l);
            ExtendedWeylElement v = evaluate(R, od.v_lambda);
            size_t L = od.v_lambda.letters.size();
            if (L > 12) continue;
            std::set<ExtendedWeylElement> below;
            for (size_t mask = 0; mask < (size_t{1} << L); ++mask) {
                std::vector<int> letters;
                for (size_t k = 0; k < L; ++k)
                    if (mask >> k & 1) letters.push_back(od.v_lambda.letters[k]);
                below.insert(word_element(R, letters));
            }
            // W_{lambda_tilde} = omega W omega^{-1}
            ExtendedWeylElement om = omega_element(R, od.lambda_tilde);
            std::set<ExtendedWeylElement> stab;
            std::deque<FiniteWeylElement> todo{FiniteWeylElement::identity(R.rank)};
            std::set<FiniteWeylElement> fin{todo.front()};
            while (!todo.empty()) {
                auto x = todo.front();
                todo.pop_front();
                for (int i = 1; i <= R.rank; ++i) {
                    auto y = x * FiniteWeylElement::simple(R, i);
                    if (fin.insert(y).second) todo.push_back(y);
                }
            }
            for (const auto& f : fin) stab.insert(om * ext_finite(f, R.rank) * ext_inverse(R, om));
            std::set<ExtendedWeylElement> cosets;
            for (const auto& mu : lower_interval(R, l)) {
                ExtendedWeylElement vm = evaluate(R, orbit_data(R, mu).v_lambda);
                for (const auto& s : stab) cosets.insert(vm * s);
            }
            CHECK(below == cosets);
            CHECK(v == *std::max_element(below.begin(), below.end(), [&](const auto& a, const auto& b) {
                return length(R, a) < length(R, b);
            }));
        }
    }
}
