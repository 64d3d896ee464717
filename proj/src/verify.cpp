#include "nsmac/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace nsmac {

using GA = GroupAlgebraElement;

namespace {

constexpr size_t kMaxFailures = 8;

std::vector<Weight> weight_box(int rank, int radius) {
    std::vector<Weight> box{Weight(rank, 0)};
    for (int i = 0; i < rank; ++i) {
        std::vector<Weight> next;
        for (const auto& w : box)
            for (int c = -radius; c <= radius; ++c) {
                Weight x = w;
                x[i] = c;
                next.push_back(x);
            }
        box = std::move(next);
    }
    return box;
}

RootVec neg(RootVec b) {
    for (auto& x : b) x = -x;
    return b;
}

CoeffFraction mono(const ParamMonomial& m) { return CoeffFraction::monomial(m); }

bool polynomial_in_inverses(const GA& f, const RootSystemData& R) {
    for (const auto& [w, c] : f.terms())
        if (!c.is_polynomial_in({Var::q_inv, Var::ts_inv, Var::tl_inv}, R.m_star)) return false;
    return true;
}

// Whether e c is a polynomial in q^{-1}, t_s^{-1}, t_l^{-1}, where e = prod (1 - m_j).
// Denominator factors of c are matched against the 1 - m_j first. Exponents of
// such polynomials form a monoid, so when the numerator and every leftover m_j
// lie in it the product does too; otherwise the product is expanded.
bool times_normalizer_is_polynomial(const CoeffFraction& c, const std::vector<ParamMonomial>& factors,
                                    const RootSystemData& R) {
    const std::vector<Var> vars{Var::q_inv, Var::ts_inv, Var::tl_inv};
    auto in_monoid = [&](const ParamMonomial& m) {
        return CoeffFraction::monomial(m).is_polynomial_in(vars, R.m_star);
    };
    CoeffFraction r = c.reduced();
    std::vector<bool> used(factors.size(), false);
    bool matched = true;
    for (const auto& d : r.den()) {
        size_t j = 0;
        for (; j < factors.size(); ++j) {
            if (used[j]) continue;
            ParamMonomial o = factors[j];
            orient_binomial(o);
            if (o == d) break;
        }
        if (j == factors.size()) {
            matched = false;
            break;
        }
        used[j] = true;
    }
    if (matched && CoeffFraction(r.num()).is_polynomial_in(vars, R.m_star) &&
        std::all_of(factors.begin(), factors.end(), in_monoid))
        return true;
    ParamPoly e(1);
    for (const auto& m : factors) e = e.mul_binomial(m);
    return r.mul_poly(e).reduced().is_polynomial_in(vars, R.m_star);
}

// Runs fn and records an escaping exception as a failed check.
template <class F>
void guarded(SystemTally& tally, const std::string& what, F&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        tally.check(false, what + ": " + e.what());
    }
}

// (T - t^{1/2})(T + t^{-1/2}) f
GA quadratic(const std::function<GA(const GA&)>& T, const GA& f, Slot s) {
    GA g = T(f) + f.scaled(mono(t_half_power(s, -1)));
    return T(g) - g.scaled(mono(t_half_power(s, 1)));
}

int braid_order(int64_t p) { return p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6; }

GA alternate(const std::function<GA(int, const GA&)>& T, int i, int j, int m, GA f) {
    for (int k = 0; k < m; ++k) f = T(k % 2 == 0 ? j : i, f);
    return f;
}

// 4 cos^2 of the angle between alpha_i and alpha_j, i, j in 0..n.
int64_t affine_cartan_product(const RootSystemData& R, int i, int j) {
    auto root = [&](int k) { return k == 0 ? R.theta : R.simple_root(k - 1); };
    int64_t a = R.pair_roots(root(i), root(j));
    return a * a * 4 / (R.root_sq(root(i)) * R.root_sq(root(j)));
}

// Positive affine roots a with x(a) < 0, by enumeration up to delta-degree bound.
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

int64_t inversion_bound(const RootSystemData& R, const ExtendedWeylElement& x) {
    int64_t bound = 2;
    for (const auto& b : R.positive_roots) {
        int64_t p = R.pair_root_weight(x.w.act_root(b), x.mu);
        bound = std::max(bound, (p < 0 ? -p : p) + 2);
    }
    return bound;
}

ExtendedWeylElement word_element(const RootSystemData& R, const std::vector<int>& letters) {
    ExtendedWeylElement y = ext_identity(R);
    for (int a : letters) y = y * ext_simple(R, a);
    return y;
}

bool nonnegative_integers(const GA& f) {
    for (const auto& [w, c] : f.terms()) {
        if (!c.is_polynomial() || !c.num().is_constant() || c.num().terms()[0].c < 0) return false;
    }
    return true;
}

Weight plus(Weight a, const Weight& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// ---------------------------------------------------------------------------

void polynomiality(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    for (const auto& l : weight_box(e.R.rank, opt.radius)) {
        std::string at = render_weight(l);
        guarded(t, "E at " + at, [&] {
            t.check(polynomial_in_inverses(e.M->compute_E(l).normalized(), e.R), "e_lambda E_lambda at " + at);
        });
        if (RootSystemData::is_antidominant(l))
            guarded(t, "P at " + at, [&] {
                const auto& factors = e.M->compute_E(l).e_factors;
                GA P = e.M->compute_P(l);
                bool ok = true;
                for (const auto& [w, c] : P.terms()) ok = ok && times_normalizer_is_polynomial(c, factors, e.R);
                t.check(ok, "e_lambda P_lambda at " + at);
            });
    }
}

void eigenvalue(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    for (const auto& l : weight_box(e.R.rank, opt.radius)) {
        std::string at = render_weight(l);
        guarded(t, "Y at " + at, [&] {
            const GA& E = e.M->compute_E(l).poly;
            for (int i = 0; i < e.R.rank; ++i) {
                RootVec a = e.R.simple_root(i);
                GA lhs = e.M->rep().Y(a, E, true);
                t.check(lhs == E.scaled(mono(e.M->q_monomial({a, 0}, l))),
                        "Y_{alpha_" + std::to_string(i + 1) + "} at " + at);
            }
        });
    }
}

void intertwiner(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    int64_t distinct_words = 0;
    for (const auto& l : weight_box(e.R.rank, opt.radius)) {
        std::string at = render_weight(l);
        guarded(t, "chains at " + at, [&] {
            const MacdonaldResult& E = e.M->compute_E(l);
            MacdonaldResult viaG = e.M->compute_E_with(l, TieBreak::smallest, AffineStep::G);
            t.check(viaG.poly == E.poly, "G and G-tilde chains at " + at);
            MacdonaldResult other = e.M->compute_E_with(l, TieBreak::largest, AffineStep::G_tilde);
            if (other.chain.letters != E.chain.letters) ++distinct_words;
            t.check(other.poly == E.poly, "two reduced words at " + at);
        });
    }
    t.notes.push_back(std::to_string(distinct_words) + " weights with two distinct reduced words of w_lambda");
}

void kappa(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    for (const auto& l : weight_box(e.R.rank, opt.radius)) {
        std::string at = render_weight(l);
        guarded(t, "kappa at " + at, [&] {
            GA x = e.M->E_tilde(l);
            t.check(e.M->rep().kappa(x) == x, "kappa(E-tilde) at " + at);
        });
    }
}

void standard_basis(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    for (const auto& l : weight_box(e.R.rank, opt.radius)) {
        std::string at = render_weight(l);
        guarded(t, "standard at " + at, [&] {
            e.K->standard_basis_checked(l);
            t.check(true, "");
        });
        guarded(t, "dual standard at " + at, [&] {
            e.K->dual_standard_basis_checked(l);
            t.check(true, "");
        });
    }
}

void demazure(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    for (const auto& l : weight_box(e.R.rank, opt.radius)) {
        std::string at = render_weight(l);
        guarded(t, "(inf,inf) at " + at, [&] {
            GA eii = e.M->E(l, Spec::inf_inf);
            t.check(eii == e.M->E_inf_inf_direct(l), "E(inf,inf) vs Demazure-Lusztig route at " + at);
            if (!RootSystemData::is_antidominant(l)) return;
            GA ch = weyl_character_oracle(e.R, l);
            t.check(eii == ch, "E(inf,inf) vs Weyl character at " + at);
            guarded(t, "canonical element at " + at, [&] {
                t.check(e.K->canonical_basis(l).element == ch, "C' vs Weyl character at " + at);
                t.check(e.K->verify_antidominant_character(l), "C' is T-invariant at " + at);
            });
        });
    }
}

void orthogonality(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    auto ws = weight_box(e.R.rank, opt.radius);
    std::map<Weight, GA> lim;
    for (const auto& l : ws) lim[l] = e.M->E_tilde(l, Spec::qinf);
    for (const auto& l : ws)
        for (const auto& mu : ws) {
            std::string at = render_weight(l) + ", " + render_weight(mu);
            guarded(t, "degenerate pairing at " + at, [&] {
                CoeffFraction p = e.M->degenerate_pairing_t(lim[l], lim[mu]);
                t.check(p == CoeffFraction(l == mu ? 1 : 0), "degenerate pairing at " + at);
            });
        }
    for (const auto& l : ws)
        for (const auto& mu : ws) {
            std::string at = render_weight(l) + ", " + render_weight(mu);
            guarded(t, "q-pairing at " + at, [&] {
                ParamPoly p = e.M->cherednik_pairing(e.M->E(l), e.M->E(mu), opt.truncation);
                t.check(l == mu ? !p.is_zero() : p.is_zero(), "q-pairing at " + at);
            });
        }
    t.notes.push_back("q-pairing truncated at D = " + std::to_string(opt.truncation));
}

void kl_checks(const KLEngine& K, const Weight& l, SystemTally& t, const std::string& tag) {
    std::string at = render_weight(l) + tag;
    const CanonicalElement& C = K.canonical_basis(l);
    for (const auto& [mu, kl] : C.coefficients) {
        std::string pair = render_weight(mu) + " below " + at;
        if (mu == l) {
            t.check(kl.pstar == ParamPoly(1), "P* = 1 at " + at);
        } else {
            t.check(in_negative_half_t_ideal(kl.pstar), "degree bound for " + pair);
        }
        t.check(in_integral_t_ring(kl.p), "P in Z[t] for " + pair);
        guarded(t, "pairing for " + pair, [&] {
            t.check(K.kl_pairing_extraction(l, mu) == kl.pstar, "pairing for " + pair);
        });
    }
}

void kl(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    auto ws = weight_box(e.R.rank, opt.radius);
    int64_t blocked = 0;
    for (const auto& l : ws) {
        try {
            kl_checks(*e.K, l, t, "");
        } catch (const RecursionFailure& ex) {
            ++blocked;
            t.check(false, std::string("recursion at ") + render_weight(l) + ": " + ex.what());
        } catch (const std::exception& ex) {
            t.check(false, std::string("at ") + render_weight(l) + ": " + ex.what());
        }
    }
    if (e.R.name() == "A1") {
        guarded(t, "rank one value", [&] {
            t.check(e.K->kl_pairing_extraction({-1}, {1}) == ParamPoly::monomial({0, -1, 0}),
                    "P* = t^(-1/2) for (lambda_1, -lambda_1)");
        });
    }
    if (blocked > 0) {
        t.notes.push_back(std::to_string(blocked) + " of " + std::to_string(ws.size()) +
                          " weights have no degree-bounded solution with independent t_s, t_l");
        SystemTally eq;
        eq.system = e.R.name();
        for (const auto& l : ws) guarded(eq, "equal parameters at " + render_weight(l), [&] {
                kl_checks(*e.K_equal, l, eq, " (t_s = t_l)");
            });
        t.notes.push_back("with t_s = t_l: " + std::to_string(eq.passed) + " checks passed, " +
                          std::to_string(eq.failed) + " failed");
    }
}

void zero_hecke(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    const RootSystemData& R = e.R;
    const PolyRep& P = e.M->rep();
    std::vector<FiniteWeylElement> all = finite_weyl_group(R);
    std::vector<std::vector<int>> words;
    for (const auto& x : all) words.push_back(x.reduced_word(R));
    auto ws = weight_box(R.rank, opt.radius);
    for (size_t w = 0; w < all.size(); ++w) {
        std::vector<size_t> below;
        for (size_t x = 0; x < all.size(); ++x)
            if (bruhat_leq(R, ext_finite(all[x], R.rank), ext_finite(all[w], R.rank))) below.push_back(x);
        for (const auto& mu : ws) {
            GA f = GA::monomial(mu), sum;
            for (size_t x : below) sum += P.N_word(words[x], f);
            t.check(P.N_prime_word(words[w], f) == sum, "N' on e^" + render_weight(mu));
        }
    }
    FiniteWeylElement w0 = longest_element(R);
    for (const auto& l : ws) {
        std::string at = render_weight(l);
        guarded(t, "(0,0) at " + at, [&] {
            GA e00 = e.M->E(l, Spec::zero_zero);
            t.check(nonnegative_integers(e00), "E(0,0) coefficients at " + at);
            GA sum;
            for (const auto& mu : bruhat_interval_in_orbit(R, l)) sum += e.M->E(mu, Spec::zero_zero);
            t.check(P.act(w0, e.M->E(l, Spec::inf_inf)) == sum, "w_o E(inf,inf) at " + at);
        });
    }
}

void relations(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    const RootSystemData& R = e.R;
    const PolyRep& P = e.M->rep();
    auto with01 = [&](int i, const GA& x) { return i == 0 ? P.T01(x) : P.T(i, x); };
    auto with03 = [&](int i, const GA& x) { return P.TX(i, x); };
    std::vector<Weight> probes;
    for (int j = 0; j < R.rank; ++j) {
        Weight w = R.zero_weight();
        w[j] = 1;
        probes.push_back(w);
        probes.push_back(neg(w));
    }
    for (const auto& mu : weight_box(R.rank, opt.relation_radius)) {
        GA f = GA::monomial(mu);
        std::string at = " on e^" + render_weight(mu);
        for (int i = 1; i <= R.rank; ++i) {
            t.check(quadratic([&](const GA& x) { return P.T(i, x); }, f, R.simple_slot(i)).is_zero(),
                    "quadratic T_" + std::to_string(i) + at);
            t.check(P.T_inv(i, P.T(i, f)) == f, "T_i inverse" + at);
        }
        t.check(quadratic([&](const GA& x) { return P.T01(x); }, f, R.simple_slot(0)).is_zero(), "quadratic T01" + at);
        t.check(quadratic([&](const GA& x) { return P.T02(x); }, f, R.simple_slot(0)).is_zero(), "quadratic T02" + at);
        t.check(quadratic([&](const GA& x) { return P.T03(x); }, f, R.simple_slot(0)).is_zero(), "quadratic T03" + at);

        for (int i = 0; i <= R.rank; ++i)
            for (int j = i + 1; j <= R.rank; ++j) {
                int64_t p = affine_cartan_product(R, i, j);
                if (p >= 4) continue;  // no braid relation at the rank-one affine node
                int m = braid_order(p);
                std::string ij = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
                t.check(alternate(with01, i, j, m, f) == alternate(with01, j, i, m, f), "braid T01" + ij + at);
                if (i == 0) t.check(alternate(with03, i, j, m, f) == alternate(with03, j, i, m, f), "braid T03" + ij + at);
            }

        GA lhs = P.T01(P.T02(P.T03(P.T_finite(P.s_theta_word(), f))));
        t.check(lhs == f.scaled(mono(q_power(R, -1))), "T01 T02 T03 T_{s_theta} = q^-1" + at);

        // (T_i X^v - X^{s_i v} T_i)(1 - e^{-alpha_i}) = (t^{1/2} - t^{-1/2})(e^v - e^{s_i v})
        for (int i = 1; i <= R.rank; ++i) {
            Slot s = R.simple_slot(i);
            CoeffFraction diff(ParamPoly::monomial(t_half_power(s, 1)) - ParamPoly::monomial(t_half_power(s, -1)));
            FiniteWeylElement si = FiniteWeylElement::simple(R, i);
            GA one_minus = GA::monomial(R.zero_weight()) - GA::monomial(neg(R.root_to_weight(R.simple_root(i - 1))));
            for (const auto& v : probes) {
                Weight sv = si.act(v);
                GA comm = P.T(i, P.X(v, f)) - P.X(sv, P.T(i, f));
                GA rhs = ((GA::monomial(v) - GA::monomial(sv)) * f).scaled(diff);
                t.check((comm * one_minus).reduced() == rhs.reduced(), "Bernstein T_" + std::to_string(i) + " X^" +
                                                                           render_weight(v) + at);
            }
        }
    }
}

void combinatorics(Workbench::Entry& e, const SuiteOptions& opt, SystemTally& t) {
    const RootSystemData& R = e.R;
    auto ws = weight_box(R.rank, opt.radius);
    std::vector<FiniteWeylElement> W = finite_weyl_group(R);
    FiniteWeylElement w0 = longest_element(R);

    // Translation lengths for dominant weights.
    std::vector<Weight> dom;
    for (const auto& l : ws)
        if (RootSystemData::is_dominant(l)) dom.push_back(l);
    for (const auto& l : dom) {
        int64_t ll = length(R, ext_translation(R, l));
        for (const auto& m : dom)
            t.check(length(R, ext_translation(R, plus(l, m))) == ll + length(R, ext_translation(R, m)),
                    "l(tau_{lambda+mu}) at " + render_weight(l) + ", " + render_weight(m));
        for (const auto& w : W) {
            t.check(length(R, ext_finite(w, R.rank) * ext_translation(R, l)) == w.length(R) + ll,
                    "l(w tau_lambda) at " + render_weight(l));
            t.check(length(R, ext_translation(R, w.act(l))) == ll, "l(tau_{w lambda}) at " + render_weight(l));
        }
    }

    for (const auto& l : ws) {
        std::string at = render_weight(l);
        WeightOrbitData od = orbit_data(R, l);
        FiniteWeylElement wr = FiniteWeylElement::from_word(R, od.w_ring);
        FiniteWeylElement wr_inv = wr.inverse(R);
        ExtendedWeylElement wl = evaluate(R, od.w_lambda);

        // Inversion sets of ring-w^{-1} and w^{-1}.
        std::set<RootVec> lhs, rhs;
        for (const auto& b : inversion_set(R, wr_inv)) lhs.insert(b);
        for (const auto& b : R.positive_roots)
            if (R.pair_root_weight(b, l) > 0) rhs.insert(b);
        t.check(lhs == rhs, "finite inversion set at " + at);
        auto neg_on = R.affine_roots_negative_on(l);
        int64_t bound = 4;
        for (const auto& b : R.positive_roots) {
            int64_t p = R.pair_root_weight(b, l);
            bound = std::max(bound, (p < 0 ? -p : p) + 4);
        }
        t.check(inversions(R, ext_inverse(R, wl), bound) == std::set<AffineRoot>(neg_on.begin(), neg_on.end()),
                "affine inversion set at " + at);

        // Roots negative on lambda + Lambda_0 go to positive roots under ring-w^{-1}.
        for (const auto& a : neg_on)
            t.check(RootSystemData::is_positive(wr_inv.act_root(a.beta)), "ring-w^{-1} positivity at " + at);

        // Simple steps.
        for (int i = 0; i <= R.rank; ++i) {
            Weight s = simple_dot(R, i, l);
            if (s == l) continue;
            FiniteWeylElement expect = (i == 0 ? reflection(R, R.theta) : FiniteWeylElement::simple(R, i)) * wr;
            t.check(FiniteWeylElement::from_word(R, ring_w_word(R, s)) == expect,
                    "ring-w after s_" + std::to_string(i) + " at " + at);
            t.check(bruhat_leq_weights(R, l, s) == (alcove_pairing(R, i, l) > 0),
                    "ascent criterion s_" + std::to_string(i) + " at " + at);
        }
        for (const auto& mu : finite_orbit(R, l)) {
            t.check(bruhat_leq_weights(R, mu, od.lambda_minus), "lambda_- is maximal in the orbit of " + at);
            t.check(bruhat_leq_weights(R, od.lambda_plus, mu), "lambda_+ is minimal in the orbit of " + at);
        }

        // Anti-dominant lambda and the weights of its orbit.
        if (RootSystemData::is_antidominant(l)) {
            for (const auto& mu : finite_orbit(R, l)) {
                WeightOrbitData om = orbit_data(R, mu);
                FiniteWeylElement wm = FiniteWeylElement::from_word(R, om.w_ring);
                ExtendedWeylElement wmu = evaluate(R, om.w_lambda);
                std::string pair = render_weight(mu) + " in the orbit of " + at;
                t.check(ext_finite(wm.inverse(R), R.rank) * wmu == wl, "w_lambda = ring-w_mu^{-1} w_mu for " + pair);
                t.check(length(R, wl) == length(R, wmu) + wm.length(R), "length of w_lambda for " + pair);
                ExtendedWeylElement omt = omega_element(R, om.lambda_tilde);
                t.check(ext_translation(R, mu) * ext_finite(wm, R.rank) == wmu * omt, "tau_mu ring-w_mu for " + pair);
                t.check(length(R, ext_translation(R, mu)) == length(R, wmu) + wm.length(R),
                        "length of tau_mu for " + pair);
            }
            t.check(wl * omega_element(R, od.lambda_tilde) == ext_translation(R, l), "w_lambda omega = tau_lambda at " + at);
        }
    }

    // Lower sets of v_lambda are unions of cosets of the stabilizer of lambda-tilde.
    // Exhaustive over subwords, so only for short v_lambda.
    if (R.rank <= 2 && R.simply_laced()) {
        int r6 = R.rank == 1 ? 3 : 1;
        for (const auto& l : weight_box(R.rank, r6)) {
            WeightOrbitData od = orbit_data(R, l);
            size_t L = od.v_lambda.letters.size();
            if (L > 12) continue;
            std::set<ExtendedWeylElement> below;
            for (size_t mask = 0; mask < (size_t{1} << L); ++mask) {
                std::vector<int> letters;
                for (size_t k = 0; k < L; ++k)
                    if (mask >> k & 1) letters.push_back(od.v_lambda.letters[k]);
                below.insert(word_element(R, letters));
            }
            ExtendedWeylElement om = omega_element(R, od.lambda_tilde);
            std::set<ExtendedWeylElement> cosets;
            for (const auto& mu : lower_interval(R, l)) {
                ExtendedWeylElement vm = evaluate(R, orbit_data(R, mu).v_lambda);
                for (const auto& f : W) cosets.insert(vm * om * ext_finite(f, R.rank) * ext_inverse(R, om));
            }
            t.check(below == cosets, "lower set of v_lambda at " + render_weight(l));
        }
        t.notes.push_back("coset decomposition of lower sets enumerated on the radius-" + std::to_string(r6) + " box");
    }

    // Length formula vs reduced words vs inversion count.
    std::mt19937_64 rng(opt.seed);
    auto range = [&](int64_t lo, int64_t hi) { return std::uniform_int_distribution<int64_t>(lo, hi)(rng); };
    for (int k = 0; k < opt.random_elements; ++k) {
        Weight mu(R.rank);
        for (auto& c : mu) c = range(-3, 3);
        std::vector<int> word;
        int len = static_cast<int>(range(0, 8));
        for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(range(1, R.rank)));
        ExtendedWeylElement x{mu, FiniteWeylElement::from_word(R, word)};
        int64_t l = length(R, x);
        AffineWord rw = reduced_word(R, x);
        std::string at = "random element " + std::to_string(k);
        t.check(static_cast<int64_t>(rw.letters.size()) == l, "length formula vs word length for " + at);
        t.check(evaluate(R, rw) == x, "reduced word evaluates back for " + at);
        t.check(static_cast<int64_t>(inversions(R, x, inversion_bound(R, x)).size()) == l,
                "length formula vs inversion count for " + at);
    }
}

using SuiteFn = void (*)(Workbench::Entry&, const SuiteOptions&, SystemTally&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s = {
        {"polynomiality", polynomiality}, {"eigenvalue", eigenvalue},         {"intertwiner", intertwiner},
        {"kappa", kappa},                 {"standard_basis", standard_basis}, {"demazure", demazure},
        {"orthogonality", orthogonality}, {"kl", kl},                         {"zero_hecke", zero_hecke},
        {"relations", relations},         {"combinatorics", combinatorics}};
    return s;
}

}  // namespace

Workbench::Entry& Workbench::get(const std::string& system) {
    auto it = entries_.find(system);
    if (it != entries_.end()) return *it->second;
    auto e = std::make_unique<Entry>();
    e->R = build_root_system(system);
    e->M = std::make_unique<MacdonaldEngine>(e->R);
    e->K = std::make_unique<KLEngine>(*e->M);
    e->K_equal = std::make_unique<KLEngine>(*e->M, ParameterMode::equal);
    return *entries_.emplace(system, std::move(e)).first->second;
}

void SystemTally::check(bool ok, const std::string& what) {
    if (ok) {
        ++passed;
        return;
    }
    ++failed;
    if (failures.size() < kMaxFailures) failures.push_back(what);
}

int64_t SuiteResult::passed() const {
    int64_t n = 0;
    for (const auto& s : systems) n += s.passed;
    return n;
}

int64_t SuiteResult::failed() const {
    int64_t n = 0;
    for (const auto& s : systems) n += s.failed;
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : suites()) v.push_back(n);
        return v;
    }();
    return names;
}

std::vector<std::string> default_systems(const std::string& suite) {
    if (suite == "orthogonality") return {"A1", "A2"};
    return {"A1", "A2", "B2", "G2", "A3"};
}

SuiteResult run_suite(Workbench& wb, const std::string& suite, const std::vector<std::string>& systems,
                      const SuiteOptions& opt) {
    const auto& all = suites();
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.first == suite; });
    if (it == all.end()) throw std::invalid_argument("unknown suite: " + suite);
    SuiteResult res;
    res.criterion = static_cast<int>(it - all.begin()) + 1;
    res.name = suite;
    for (const auto& name : systems) {
        Workbench::Entry& e = wb.get(name);
        SystemTally tally;
        tally.system = e.R.name();
        if (opt.log) opt.log(suite + " " + tally.system);
        it->second(e, opt, tally);
        res.systems.push_back(std::move(tally));
    }
    return res;
}

}  // namespace nsmac
