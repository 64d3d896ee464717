#include "nsmac/klbases.hpp"

#include <algorithm>

namespace nsmac {

namespace {

// Polynomial value of an exact coefficient that must be a Laurent polynomial.
ParamPoly as_poly(const CoeffFraction& c, const char* what) {
    CoeffFraction r = c.reduced();
    if (!r.is_polynomial()) throw InternalSentinel(std::string(what) + " is not a Laurent polynomial");
    return r.num();
}

// Monomials t_s^{a/2} t_l^{b/2} with a, b <= 0, not both zero, and no q.
bool strictly_negative_t(const ParamMonomial& m) {
    return m.qe == 0 && m.ae <= 0 && m.be <= 0 && !(m.ae == 0 && m.be == 0);
}

bool parameter_free(const GroupAlgebraElement& f) {
    for (const auto& [w, c] : f.terms()) {
        if (!c.is_polynomial() || !c.num().is_constant()) return false;
    }
    return true;
}

}  // namespace

bool in_integral_t_ring(const ParamPoly& p) {
    for (const auto& t : p.terms())
        if (t.m.qe != 0 || t.m.ae < 0 || t.m.be < 0 || t.m.ae % 2 != 0 || t.m.be % 2 != 0) return false;
    return true;
}

bool in_negative_half_t_ideal(const ParamPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const ParamTerm& t) { return strictly_negative_t(t.m); });
}

std::string basis_kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::standard: return "standard";
        case BasisKind::dual_standard: return "dual_standard";
        case BasisKind::canonical: return "canonical";
    }
    return "standard";
}

int64_t weight_length(const RootSystemData& R, const Weight& lambda) {
    return static_cast<int64_t>(w_lambda_word(R, lambda).size());
}

KLEngine::KLEngine(const MacdonaldEngine& M, ParameterMode mode) : M_(M), R_(M.system()), mode_(mode) {}

GroupAlgebraElement KLEngine::specialize_t(const GroupAlgebraElement& f) const {
    if (mode_ == ParameterMode::independent) return f;
    return f.map_coeffs([](const CoeffFraction& c) { return c.merge_t().reduced(); });
}

ParamPoly KLEngine::specialize_t(const ParamPoly& p) const {
    return mode_ == ParameterMode::independent ? p : p.merge_t();
}

ParamMonomial KLEngine::specialize_t(const ParamMonomial& m) const {
    return mode_ == ParameterMode::independent ? m : ParamMonomial{m.qe, m.ae + m.be, 0};
}

GroupAlgebraElement KLEngine::standard_basis(const Weight& lambda) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = st_cache_.find(lambda);
        if (it != st_cache_.end()) return it->second;
    }
    AffineWord w{R_.zero_weight(), w_lambda_word(R_, lambda)};
    GroupAlgebraElement base = M_.rep().omega(alcove_rep(R_, lambda), GroupAlgebraElement::monomial(R_.zero_weight()));
    GroupAlgebraElement st = specialize_t(M_.rep().Tw(w, base));
    std::lock_guard<std::mutex> lock(mutex_);
    return st_cache_.emplace(lambda, std::move(st)).first->second;
}

GroupAlgebraElement KLEngine::dual_standard_basis(const Weight& lambda) const {
    AffineWord w{R_.zero_weight(), w_lambda_word(R_, lambda)};
    GroupAlgebraElement base = M_.rep().omega(alcove_rep(R_, lambda), GroupAlgebraElement::monomial(R_.zero_weight()));
    return specialize_t(M_.rep().T_dual(w, base));
}

GroupAlgebraElement KLEngine::standard_basis_checked(const Weight& lambda) const {
    GroupAlgebraElement st = standard_basis(lambda);
    if (st != specialize_t(M_.E_tilde(lambda, Spec::qinf)))
        throw InternalSentinel("standard basis element at " + render_weight(lambda) + " differs from the q -> infinity limit");
    return st;
}

GroupAlgebraElement KLEngine::dual_standard_basis_checked(const Weight& lambda) const {
    GroupAlgebraElement du = dual_standard_basis(lambda);
    if (du != specialize_t(M_.E_tilde(lambda, Spec::q0)))
        throw InternalSentinel("dual standard basis element at " + render_weight(lambda) + " differs from the q -> 0 limit");
    return du;
}

BasisFamily KLEngine::family(BasisKind kind, const std::vector<Weight>& weights) const {
    BasisFamily fam{kind, {}};
    for (const auto& l : weights) {
        switch (kind) {
            case BasisKind::standard: fam.entries[l] = standard_basis(l); break;
            case BasisKind::dual_standard: fam.entries[l] = dual_standard_basis(l); break;
            case BasisKind::canonical: fam.entries[l] = canonical_basis(l).element; break;
        }
    }
    return fam;
}

std::map<Weight, CoeffFraction> KLEngine::expand_in_standard(const GroupAlgebraElement& f) const {
    std::map<Weight, CoeffFraction> out;
    GroupAlgebraElement rest = f.reduced();
    while (!rest.is_zero()) {
        // A Bruhat-maximal weight of the support has the longest w_lambda.
        Weight top;
        int64_t best = -1;
        for (const auto& [w, c] : rest.terms()) {
            int64_t len = weight_length(R_, w);
            if (len > best) {
                best = len;
                top = w;
            }
        }
        GroupAlgebraElement st = standard_basis(top);
        CoeffFraction lead = st.coefficient(top);
        if (lead.is_zero())
            throw InternalSentinel("standard basis element at " + render_weight(top) + " is not triangular");
        CoeffFraction c = (rest.coefficient(top) / lead).reduced();
        rest = (rest - st.scaled(c)).reduced();
        out[top] = c;
    }
    return out;
}

const std::map<Weight, ParamPoly>& KLEngine::r_polynomials(const Weight& lambda) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = r_cache_.find(lambda);
        if (it != r_cache_.end()) return it->second;
    }
    std::map<Weight, ParamPoly> r;
    for (const auto& [mu, c] : expand_in_standard(dual_standard_basis(lambda))) {
        if (!bruhat_leq_weights(R_, mu, lambda))
            throw InternalSentinel("R-polynomial at " + render_weight(mu) + " outside the lower interval of " +
                                   render_weight(lambda));
        r[mu] = as_poly(c, "R-polynomial");
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return r_cache_.emplace(lambda, std::move(r)).first->second;
}

std::map<Weight, ParamPoly> KLEngine::r_polynomials_by_pairing(const Weight& lambda) const {
    GroupAlgebraElement du = dual_standard_basis(lambda);
    std::map<Weight, ParamPoly> r;
    for (const auto& mu : lower_interval(R_, lambda)) {
        ParamPoly v = specialize_t(as_poly(M_.degenerate_pairing_t(du, standard_basis(mu)), "pairing"));
        if (!v.is_zero()) r[mu] = v;
    }
    return r;
}

ParamPoly KLEngine::r_polynomial(const Weight& mu, const Weight& lambda) const {
    const auto& r = r_polynomials(lambda);
    auto it = r.find(mu);
    return it == r.end() ? ParamPoly() : it->second;
}

const CanonicalElement& KLEngine::canonical_basis(const Weight& lambda) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = c_cache_.find(lambda);
        if (it != c_cache_.end()) return it->second;
    }
    std::vector<Weight> interval = lower_interval(R_, lambda);
    std::vector<std::pair<int64_t, Weight>> order;
    for (const auto& mu : interval) order.emplace_back(weight_length(R_, mu), mu);
    std::sort(order.rbegin(), order.rend());

    // kappa(sum P_mu st_mu) = sum bar(P_mu) R_{nu,mu} st_nu; solve top down with
    // P_nu - bar(P_nu) = sum_{nu < mu} bar(P_mu) R_{nu,mu}.
    std::map<Weight, ParamPoly> P;
    P[lambda] = ParamPoly(1);
    for (const auto& [len, nu] : order) {
        if (nu == lambda) continue;
        ParamPoly S;
        for (const auto& [mu, pm] : P) {
            if (pm.is_zero()) continue;
            ParamPoly r = r_polynomial(nu, mu);
            if (!r.is_zero()) S += pm.invert_params() * r;
        }
        std::vector<ParamTerm> low;
        for (const auto& t : S.terms())
            if (strictly_negative_t(t.m)) low.push_back(t);
        ParamPoly p = ParamPoly::from_terms(std::move(low));
        if (p - p.invert_params() != S)
            throw RecursionFailure("no degree-bounded solution at " + render_weight(nu) + " below " +
                                   render_weight(lambda) + ": " + render_poly(S, R_.render_context()));
        P[nu] = p;
    }

    CanonicalElement out;
    ParamMonomial chi_l = specialize_t(chi_word(R_, w_lambda_word(R_, lambda)));
    for (const auto& mu : interval) {
        const ParamPoly& ps = P.at(mu);
        if (!ps.is_zero()) out.element += standard_basis(mu).scaled(CoeffFraction(ps));
        ParamMonomial ratio = specialize_t(chi_word(R_, w_lambda_word(R_, mu))).inverse() * chi_l;
        out.coefficients[mu] = KLPolynomial{mu, lambda, ps, ps.mul_mono(ratio)};
    }
    out.element = out.element.reduced();
    if (specialize_t(M_.rep().kappa(out.element)) != out.element)
        throw InternalSentinel("canonical element at " + render_weight(lambda) + " is not fixed by kappa");
    std::lock_guard<std::mutex> lock(mutex_);
    return c_cache_.emplace(lambda, std::move(out)).first->second;
}

ParamPoly KLEngine::kl_pairing_extraction(const Weight& lambda, const Weight& mu) const {
    const CanonicalElement& C = canonical_basis(lambda);
    ParamPoly v = specialize_t(as_poly(M_.degenerate_pairing_t(C.element, standard_basis(mu)), "pairing"));
    auto it = C.coefficients.find(mu);
    ParamPoly expected = it == C.coefficients.end() ? ParamPoly() : it->second.pstar;
    if (v != expected)
        throw InternalSentinel("pairing and recursion disagree on P*(" + render_weight(mu) + ", " +
                               render_weight(lambda) + ")");
    return v;
}

bool KLEngine::verify_antidominant_character(const Weight& lambda) const {
    if (!RootSystemData::is_antidominant(lambda))
        throw NotAntiDominant("expected an anti-dominant weight, got " + render_weight(lambda));
    const GroupAlgebraElement& C = canonical_basis(lambda).element;
    if (!parameter_free(C)) return false;
    for (int i = 1; i <= R_.rank; ++i) {
        GroupAlgebraElement d = M_.rep().T(i, C) - C.scaled(CoeffFraction::monomial(t_simple_half(R_, i)));
        if (!specialize_t(d).reduced().is_zero()) return false;
    }
    return C == weyl_character_oracle(R_, lambda);
}

ConjectureReport KLEngine::conjecture_report(const Weight& lambda) const {
    ConjectureReport rep{lambda, {}};
    for (const auto& [mu, kl] : canonical_basis(lambda).coefficients) {
        if (kl.pstar.is_zero()) continue;
        bool nonneg = std::all_of(kl.p.terms().begin(), kl.p.terms().end(),
                                  [](const ParamTerm& t) { return t.c >= 0; });
        rep.rows.push_back({mu, kl.pstar, kl.p, kl.p.sum_coefficients(), nonneg});
    }
    return rep;
}

}  // namespace nsmac
