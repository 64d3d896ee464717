#include "nsmac/macdonald.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nsmac {

namespace {

Weight add(Weight a, const Weight& b, int64_t k = 1) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
}

CoeffFraction mono(const ParamMonomial& m) { return CoeffFraction::monomial(m); }

ParamMonomial t_inverse(const RootSystemData& R, const RootVec& beta) { return t_half_power(R.t_slot(beta), -2); }

bool in_positive_cone(const RootVec& x) {
    return std::all_of(x.begin(), x.end(), [](int64_t c) { return c >= 0; });
}

ParamPoly mul_truncated(const ParamPoly& a, const ParamPoly& b, int64_t N) {
    std::vector<ParamTerm> out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            ParamMonomial m = x.m * y.m;
            if (m.qe < -N) continue;
            out.push_back({m, x.c * y.c});
        }
    return ParamPoly::from_terms(std::move(out));
}

}  // namespace

Spec parse_spec(const std::string& s) {
    static const std::map<std::string, Spec> names = {
        {"exact", Spec::exact}, {"qinf", Spec::qinf},       {"q0", Spec::q0},
        {"tinf", Spec::tinf},   {"t0", Spec::t0},           {"inf_inf", Spec::inf_inf},
        {"zero_zero", Spec::zero_zero}};
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown specialization '" + s + "'");
    return it->second;
}

std::string spec_name(Spec s) {
    switch (s) {
        case Spec::exact: return "exact";
        case Spec::qinf: return "qinf";
        case Spec::q0: return "q0";
        case Spec::tinf: return "tinf";
        case Spec::t0: return "t0";
        case Spec::inf_inf: return "inf_inf";
        case Spec::zero_zero: return "zero_zero";
    }
    return "exact";
}

GroupAlgebraElement specialize(const GroupAlgebraElement& f, Spec s) {
    auto lim = [](std::vector<std::pair<Slot, int>> steps) {
        return [steps](const CoeffFraction& c) {
            CoeffFraction x = c.reduced();
            for (auto [slot, dir] : steps) x = x.limit_at_zero(slot, dir);
            return x;
        };
    };
    switch (s) {
        case Spec::exact: return f;
        case Spec::qinf: return f.map_coeffs(lim({{Slot::q, -1}}));
        case Spec::q0: return f.map_coeffs(lim({{Slot::q, 1}}));
        case Spec::tinf: return f.map_coeffs(lim({{Slot::ts, -1}, {Slot::tl, -1}}));
        case Spec::t0: return f.map_coeffs(lim({{Slot::ts, 1}, {Slot::tl, 1}}));
        case Spec::inf_inf: return f.map_coeffs(lim({{Slot::q, -1}, {Slot::ts, -1}, {Slot::tl, -1}}));
        case Spec::zero_zero: return f.map_coeffs(lim({{Slot::q, 1}, {Slot::ts, 1}, {Slot::tl, 1}}));
    }
    return f;
}

GroupAlgebraElement eval_t_one(const GroupAlgebraElement& f) {
    return f.map_coeffs([](const CoeffFraction& c) { return c.reduced().eval_one(Slot::ts).eval_one(Slot::tl); });
}

static std::vector<ParamMonomial> normalizer_factors(const RootSystemData& R, const Weight& lambda) {
    FiniteWeylElement rw = ring_w_element(R, lambda);
    std::vector<ParamMonomial> ms;
    for (const auto& a : R.affine_roots_negative_on(lambda)) ms.push_back(spectral_q(R, a.beta, a.k, lambda, rw));
    return ms;
}

GroupAlgebraElement MacdonaldResult::normalized() const {
    // Cancel denominators against the known factors 1 - m of e_lambda before
    // multiplying out; a generic reduce on the expanded product is much slower.
    return poly.map_coeffs([this](const CoeffFraction& c) -> CoeffFraction {
        std::vector<bool> used(e_factors.size(), false);
        ParamPoly num = c.num();
        for (const auto& d : c.den()) {
            size_t j = 0;
            for (; j < e_factors.size(); ++j) {
                if (used[j]) continue;
                ParamMonomial o = e_factors[j];
                bool flipped = orient_binomial(o);
                if (o != d) continue;
                used[j] = true;
                if (flipped) num = -num.mul_mono(e_factors[j]);  // 1 - m = -m (1 - m^{-1})
                break;
            }
            if (j == e_factors.size()) return (c * e_lambda).reduced();
        }
        for (size_t j = 0; j < e_factors.size(); ++j)
            if (!used[j]) num = num.mul_binomial(e_factors[j]);
        return CoeffFraction(num);
    });
}

MacdonaldEngine::MacdonaldEngine(const RootSystemData& R) : R_(R), P_(R) {}

ParamMonomial MacdonaldEngine::q_monomial(const AffineRoot& gamma, const Weight& lambda) const {
    return spectral_q(R_, gamma.beta, gamma.k, lambda, ring_w_element(R_, lambda));
}

ParamMonomial MacdonaldEngine::t_monomial(const RootVec& beta, const Weight& lambda) const {
    return spectral_t(R_, beta, ring_w_element(R_, lambda));
}

CoeffFraction MacdonaldEngine::normalizer_e(const Weight& lambda) const {
    ParamPoly p(1);
    for (const auto& m : normalizer_factors(R_, lambda)) p = p.mul_binomial(m);
    return CoeffFraction(p);
}

ParamMonomial MacdonaldEngine::xi_ring(const Weight& lambda) const { return chi_word(R_, ring_w_word(R_, lambda)); }

CoeffFraction MacdonaldEngine::f_normalizer(const Weight& lambda) const {
    return mono(chi_word(R_, w_lambda_word(R_, lambda)) * spectral_t_weight(R_, lambda, ring_w_element(R_, lambda)));
}

MacdonaldResult MacdonaldEngine::compute_E_with(const Weight& lambda, TieBreak tie, AffineStep step) const {
    if (static_cast<int>(lambda.size()) != R_.rank) throw std::invalid_argument("weight length does not match rank");
    MacdonaldResult res;
    res.lambda = lambda;
    res.chain.omega = R_.zero_weight();
    res.chain.letters = w_lambda_word(R_, lambda, tie);

    // E_{s.mu} = G_{i,mu} E_mu / (1 - bold-q^{-(alpha_i, mu-bar)}); reducing after
    // every step keeps the coefficients far smaller than e_mu E_mu.
    Weight mu = alcove_rep(R_, lambda);
    GroupAlgebraElement state = GroupAlgebraElement::monomial(mu);
    for (auto it = res.chain.letters.rbegin(); it != res.chain.letters.rend(); ++it) {
        int i = *it;
        AffineRoot a = R_.affine_simple_root(i);
        ParamMonomial Q = spectral_q(R_, a.beta, a.k, mu, ring_w_element(R_, mu)).inverse();
        if (i == 0 && step == AffineStep::G_tilde)
            state = P_.G_tilde0(mu, state);
        else
            state = P_.G(i, mu, state);
        state = state.scaled(CoeffFraction(ParamPoly(1), {Q})).reduced();
        mu = simple_dot(R_, i, mu);
    }
    if (mu != lambda) throw InternalSentinel("intertwiner chain did not reach " + render_weight(lambda));

    res.e_factors = normalizer_factors(R_, lambda);
    res.e_lambda = normalizer_e(lambda);
    res.poly = std::move(state);
    if (!res.poly.coefficient(lambda).is_one())
        throw InternalSentinel("leading coefficient of E" + render_weight(lambda) + " is not 1");
    res.f_lambda = f_normalizer(lambda);
    return res;
}

const MacdonaldResult& MacdonaldEngine::compute_E(const Weight& lambda) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(lambda);
        if (it != cache_.end()) return it->second;
    }
    MacdonaldResult r = compute_E_with(lambda, TieBreak::smallest, AffineStep::G_tilde);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(lambda, std::move(r)).first->second;
}

GroupAlgebraElement MacdonaldEngine::E(const Weight& lambda, Spec s) const {
    return specialize(compute_E(lambda).poly, s);
}

GroupAlgebraElement MacdonaldEngine::E_tilde(const Weight& lambda, Spec s) const {
    return specialize(compute_E(lambda).poly.scaled(mono(xi_ring(lambda).inverse())), s);
}

GroupAlgebraElement MacdonaldEngine::compute_P(const Weight& lambda) const {
    if (!RootSystemData::is_antidominant(lambda))
        throw NotAntiDominant("P requires an anti-dominant weight, got " + render_weight(lambda));
    GroupAlgebraElement P;
    for (const auto& mu : finite_orbit(R_, lambda)) {
        FiniteWeylElement rw = ring_w_element(R_, mu);
        CoeffFraction a(1);
        for (const auto& b : R_.positive_roots) {
            if (R_.pair_root_weight(b, mu) <= 0) continue;
            ParamMonomial Q = spectral_q(R_, b, 0, mu, rw).inverse();
            a *= CoeffFraction(ParamPoly::monomial(t_inverse(R_, b)) - ParamPoly::monomial(Q), {Q});
        }
        P += compute_E(mu).poly.scaled(a);
    }
    return P.reduced();
}

GroupAlgebraElement MacdonaldEngine::compute_P_normalized(const Weight& lambda) const {
    if (!RootSystemData::is_antidominant(lambda))
        throw NotAntiDominant("P requires an anti-dominant weight, got " + render_weight(lambda));
    GroupAlgebraElement P;
    for (const auto& mu : finite_orbit(R_, lambda)) {
        FiniteWeylElement rw = ring_w_element(R_, mu);
        ParamPoly b(1);
        for (const auto& beta : R_.positive_roots) {
            if (R_.pair_root_weight(beta, mu) <= 0) continue;
            ParamMonomial Q = spectral_q(R_, beta, 0, mu, rw).inverse();
            b = b * (ParamPoly::monomial(t_inverse(R_, beta)) - ParamPoly::monomial(Q));
        }
        P += compute_E(mu).normalized().scaled(CoeffFraction(b));
    }
    return P;
}

GroupAlgebraElement MacdonaldEngine::E_infinity_direct(const Weight& lambda) const {
    FiniteWeylElement x = ring_w_element(R_, lambda) * longest_element(R_);
    auto word = x.reduced_word(R_);
    return P_.T_finite(word, GroupAlgebraElement::monomial(dominant_rep(R_, lambda)))
        .scaled(mono(chi_word(R_, word).inverse()));
}

GroupAlgebraElement MacdonaldEngine::E_tilde_zero_direct(const Weight& lambda) const {
    return P_.T_finite(ring_w_word(R_, lambda), GroupAlgebraElement::monomial(antidominant_rep(R_, lambda)));
}

GroupAlgebraElement MacdonaldEngine::E_zero_zero_direct(const Weight& lambda) const {
    return P_.N_word(ring_w_word(R_, lambda), GroupAlgebraElement::monomial(antidominant_rep(R_, lambda)));
}

GroupAlgebraElement MacdonaldEngine::E_inf_inf_direct(const Weight& lambda) const {
    FiniteWeylElement x = ring_w_element(R_, lambda) * longest_element(R_);
    return P_.demazure_word(x.reduced_word(R_), GroupAlgebraElement::monomial(dominant_rep(R_, lambda)));
}

GroupAlgebraElement MacdonaldEngine::E_inf_tinv_direct(const Weight& lambda) const {
    FiniteWeylElement x = longest_element(R_) * ring_w_element(R_, lambda);
    GroupAlgebraElement g =
        P_.T_finite_inv(x.inverse(R_).reduced_word(R_), GroupAlgebraElement::monomial(antidominant_rep(R_, lambda)));
    return g.scaled(mono(chi_word(R_, x.reduced_word(R_))));
}

GroupAlgebraElement MacdonaldEngine::P_infinity_from_E(const Weight& lambda) const {
    GroupAlgebraElement s;
    for (const auto& mu : finite_orbit(R_, lambda))
        s += E(mu, Spec::qinf).scaled(mono(xi_ring(mu).pow(-2)));
    return s;
}

GroupAlgebraElement MacdonaldEngine::P_infinity_from_T(const Weight& lambda) const {
    FiniteWeylElement w0 = longest_element(R_);
    GroupAlgebraElement top = GroupAlgebraElement::monomial(dominant_rep(R_, lambda));
    GroupAlgebraElement s;
    for (const auto& mu : finite_orbit(R_, lambda)) {
        FiniteWeylElement x = ring_w_element(R_, mu) * w0;
        s += P_.T_finite(x.reduced_word(R_), top).scaled(mono(xi_ring(mu).inverse()));
    }
    return s.scaled(mono(P_.chi_w0().inverse()));
}

CoeffFraction MacdonaldEngine::degenerate_pairing_t(const GroupAlgebraElement& f,
                                                    const GroupAlgebraElement& g) const {
    GroupAlgebraElement h = f * P_.iota(g);
    // targets -nu in the positive root cone
    std::vector<std::pair<RootVec, CoeffFraction>> targets;
    RootVec bound(R_.rank, 0);
    for (const auto& [nu, c] : h.terms()) {
        auto r = R_.weight_to_root(add(R_.zero_weight(), nu, -1));
        if (!r || !in_positive_cone(*r)) continue;
        for (int i = 0; i < R_.rank; ++i) bound[i] = std::max(bound[i], (*r)[i]);
        targets.emplace_back(*r, c);
    }
    if (targets.empty()) return CoeffFraction();

    // C(inf,t) = prod (1 - e^a)/(1 - t_a^{-1} e^a) = prod (1 + sum_j u^{j-1}(u-1) e^{ja})
    std::map<RootVec, ParamPoly> series{{RootVec(R_.rank, 0), ParamPoly(1)}};
    for (const auto& a : R_.positive_roots) {
        ParamMonomial u = t_inverse(R_, a);
        std::map<RootVec, ParamPoly> next;
        for (const auto& [x, c] : series) {
            next[x] += c;
            RootVec y = x;
            ParamPoly uj(1);  // u^{j-1}
            for (int64_t j = 1;; ++j) {
                bool ok = true;
                for (int i = 0; i < R_.rank; ++i) {
                    y[i] += a[i];
                    if (y[i] > bound[i]) ok = false;
                }
                if (!ok) break;
                next[y] += (c * uj).mul_binomial(u).mul_scalar(-1);
                uj = uj.mul_mono(u);
            }
        }
        series = std::move(next);
    }
    CoeffFraction total;
    for (const auto& [r, c] : targets) {
        auto it = series.find(r);
        if (it != series.end() && !it->second.is_zero()) total += c.mul_poly(it->second);
    }
    return total.reduced();
}

ParamPoly truncate_q(const ParamPoly& p, int64_t N) {
    std::vector<ParamTerm> out;
    for (const auto& t : p.terms())
        if (t.m.qe >= -N) out.push_back(t);
    return ParamPoly::from_terms(std::move(out));
}

ParamPoly expand_in_q_inverse(const CoeffFraction& c, int64_t N) {
    int64_t top = c.num().is_zero() ? 0 : std::max<int64_t>(0, c.num().max_exponent(Slot::q));
    int64_t M = N + top;
    ParamPoly acc = c.num();
    for (ParamMonomial m : c.den()) {
        if (m.qe == 0) throw PoleAtLimit("denominator factor free of q in a q-series expansion");
        ParamPoly geo;
        if (m.qe < 0) {
            // sum_{i>=0} m^i
            ParamMonomial p;
            while (p.qe >= -M) {
                geo += ParamPoly::monomial(p);
                p = p * m;
            }
        } else {
            // -sum_{i>=1} m^{-i}
            ParamMonomial mi = m.inverse(), p = mi;
            while (p.qe >= -M) {
                geo -= ParamPoly::monomial(p);
                p = p * mi;
            }
        }
        acc = mul_truncated(acc, geo, M);
    }
    return truncate_q(acc, N);
}

ParamPoly MacdonaldEngine::cherednik_pairing(const GroupAlgebraElement& f, const GroupAlgebraElement& g,
                                             int64_t D) const {
    if (D < 1) throw TruncationTooSmall("q-pairing truncation order must be at least 1");
    GroupAlgebraElement gb = P_.bar(g);
    auto max_q = [](const GroupAlgebraElement& x) {
        int64_t m = 0;
        for (const auto& [w, c] : x.terms())
            if (!c.num().is_zero()) m = std::max(m, c.num().max_exponent(Slot::q));
        return m;
    };
    const int64_t N = D + max_q(f) + max_q(gb);

    std::map<Weight, ParamPoly> fs, gs;
    for (const auto& [w, c] : f.terms()) fs[w] = expand_in_q_inverse(c, N);
    for (const auto& [w, c] : gb.terms()) gs[w] = expand_in_q_inverse(c, N);
    std::map<Weight, ParamPoly> h;
    for (const auto& [a, ca] : fs)
        for (const auto& [b, cb] : gs) h[add(a, b)] += mul_truncated(ca, cb, N);

    // targets -nu in the root lattice
    std::vector<std::pair<RootVec, const ParamPoly*>> targets;
    std::set<RootVec> wanted{RootVec(R_.rank, 0)};
    for (const auto& [nu, c] : h) {
        if (c.is_zero()) continue;
        auto r = R_.weight_to_root(add(R_.zero_weight(), nu, -1));
        if (!r) continue;
        targets.emplace_back(*r, &c);
        wanted.insert(*r);
    }
    RootVec bound(R_.rank, 0);
    for (const auto& r : wanted)
        for (int i = 0; i < R_.rank; ++i) bound[i] = std::max(bound[i], r[i]);

    // K(q,t) = prod over positive affine roots of (1 + sum_j u^{j-1}(u-1) q^{-jk} e^{j beta})
    const int64_t ms = R_.m_star;
    std::map<RootVec, ParamPoly> K{{RootVec(R_.rank, 0), ParamPoly(1)}};
    auto apply_factor = [&](const RootVec& beta, int64_t k, bool prune) {
        ParamMonomial u = t_inverse(R_, beta);
        std::map<RootVec, ParamPoly> next;
        for (const auto& [x, c] : K) {
            next[x] += c;
            RootVec y = x;
            ParamPoly uj(1);
            for (int64_t j = 1;; ++j) {
                if (j * k * ms > N) break;
                bool ok = true;
                for (int i = 0; i < R_.rank; ++i) {
                    y[i] += beta[i];
                    if (prune && y[i] > bound[i]) ok = false;
                }
                if (!ok) break;
                ParamPoly term = (c * uj).mul_binomial(u).mul_scalar(-1).mul_mono(q_power(R_, -j * k));
                next[y] += truncate_q(term, N);
                uj = uj.mul_mono(u);
            }
        }
        K = std::move(next);
    };
    for (int64_t k = 1; k * ms <= N; ++k)
        for (const auto& b : R_.positive_roots) {
            if (R_.is_long(b) && k % R_.r != 0) continue;
            RootVec nb = b;
            for (auto& x : nb) x = -x;
            apply_factor(b, k, false);
            apply_factor(nb, k, false);
        }
    for (const auto& b : R_.positive_roots) apply_factor(b, 0, true);

    // 1/K_0 as a power series
    ParamPoly k0 = K[RootVec(R_.rank, 0)];
    ParamPoly r = ParamPoly(1) - k0, inv(1), power(1);
    while (true) {
        power = mul_truncated(power, r, N);
        if (power.is_zero()) break;
        inv += power;
    }
    ParamPoly total;
    for (const auto& [root, c] : targets) {
        auto it = K.find(root);
        if (it == K.end()) continue;
        total += mul_truncated(*c, it->second, N);
    }
    return truncate_q(mul_truncated(total, inv, N), D);
}

GroupAlgebraElement weyl_character_oracle(const RootSystemData& R, const Weight& lambda_minus) {
    if (!RootSystemData::is_antidominant(lambda_minus))
        throw NotAntiDominant("character oracle requires an anti-dominant weight");
    const int n = R.rank;
    Weight top = dominant_rep(R, lambda_minus);
    std::vector<Weight> alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(R.root_to_weight(R.simple_root(i)));
    auto dominated = [&](const Weight& mu) {
        auto c = R.weight_to_root(add(top, dominant_rep(R, mu), -1));
        return c && in_positive_cone(*c);
    };
    // weights of the representation in order of depth below the top
    std::vector<Weight> order{top};
    std::set<Weight> seen{top};
    for (size_t k = 0; k < order.size(); ++k)
        for (int i = 0; i < n; ++i) {
            Weight mu = add(order[k], alpha[i], -1);
            if (seen.count(mu) || !dominated(mu)) continue;
            seen.insert(mu);
            order.push_back(mu);
        }
    Weight rho(n, 1);
    Weight tr = add(top, rho);
    Rational norm_top = R.pair_weights(tr, tr);
    std::map<Weight, Rational> mult{{top, Rational(1)}};
    for (size_t k = 1; k < order.size(); ++k) {
        const Weight& mu = order[k];
        Rational s = 0;
        for (const auto& b : R.positive_roots) {
            Weight bw = R.root_to_weight(b);
            for (int64_t j = 1;; ++j) {
                Weight x = add(mu, bw, j);
                auto it = mult.find(x);
                if (it == mult.end()) break;
                s += it->second * R.pair_weights(x, bw);
            }
        }
        Weight mr = add(mu, rho);
        Rational m = 2 * s / (norm_top - R.pair_weights(mr, mr));
        mult[mu] = m;
    }
    GroupAlgebraElement ch;
    for (const auto& [w, m] : mult) {
        if (m.get_den() != 1) throw InternalSentinel("non-integral weight multiplicity");
        if (m != 0) ch.add_term(w, CoeffFraction(m.get_num().get_si()));
    }
    return ch;
}

}  // namespace nsmac
