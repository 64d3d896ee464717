#pragma once

// Standard, dual standard and canonical bases of the maximal parabolic
// module, with the parabolic R*- and P*-polynomials.

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsmac/macdonald.hpp"

namespace nsmac {

// No solution of the self-duality recursion meets the degree bound.
struct RecursionFailure : std::logic_error {
    using std::logic_error::logic_error;
};

enum class BasisKind { standard, dual_standard, canonical };
std::string basis_kind_name(BasisKind k);

struct BasisFamily {
    BasisKind kind;
    std::map<Weight, GroupAlgebraElement> entries;
};

struct KLPolynomial {
    Weight mu, lambda;
    ParamPoly pstar;  // P*_{v_mu, v_lambda}, in the t^{-1/2}
    ParamPoly p;      // chi(w_mu)^{-1} chi(w_lambda) P*, in the t
};

struct CanonicalElement {
    GroupAlgebraElement element;               // C'_lambda
    std::map<Weight, KLPolynomial> coefficients;  // every mu <= lambda, zeros included
};

struct ConjectureRow {
    Weight mu;
    ParamPoly pstar, p;
    mpz_class p_at_one;
    bool nonnegative;
};

struct ConjectureReport {
    Weight lambda;
    std::vector<ConjectureRow> rows;
    static constexpr const char* marker = "conjectural, not asserted";
};

// independent: t_s and t_l stay separate variables. equal: every object is
// specialized to t_s = t_l before the recursion runs.
enum class ParameterMode { independent, equal };

class KLEngine {
public:
    explicit KLEngine(const MacdonaldEngine& M, ParameterMode mode = ParameterMode::independent);
    const MacdonaldEngine& macdonald() const { return M_; }
    ParameterMode mode() const { return mode_; }

    // T_{w_lambda} omega_{lambda-tilde} . 1 and T^{-1}_{w_lambda^{-1}} omega_{lambda-tilde} . 1.
    GroupAlgebraElement standard_basis(const Weight& lambda) const;
    GroupAlgebraElement dual_standard_basis(const Weight& lambda) const;
    // The same, compared against the q -> infinity and q -> 0 limits of
    // E-tilde; throws InternalSentinel on disagreement.
    GroupAlgebraElement standard_basis_checked(const Weight& lambda) const;
    GroupAlgebraElement dual_standard_basis_checked(const Weight& lambda) const;

    BasisFamily family(BasisKind kind, const std::vector<Weight>& weights) const;

    // R*_{v_mu, v_lambda} for mu <= lambda with nonzero value, by triangular
    // expansion of the dual standard element in the standard basis.
    const std::map<Weight, ParamPoly>& r_polynomials(const Weight& lambda) const;
    // The same values from the degenerate pairing.
    std::map<Weight, ParamPoly> r_polynomials_by_pairing(const Weight& lambda) const;
    ParamPoly r_polynomial(const Weight& mu, const Weight& lambda) const;

    // Expansion of f in the standard basis (f must lie in the span of the
    // standard elements below its support).
    std::map<Weight, CoeffFraction> expand_in_standard(const GroupAlgebraElement& f) const;

    const CanonicalElement& canonical_basis(const Weight& lambda) const;
    // <C'_lambda, E-tilde_mu(inf,t)>_t, checked against the recursion.
    ParamPoly kl_pairing_extraction(const Weight& lambda, const Weight& mu) const;

    // C'_lambda is parameter-free, annihilated by T_i - t_i^{1/2} and equal to
    // the Weyl character. Throws NotAntiDominant.
    bool verify_antidominant_character(const Weight& lambda) const;

    ConjectureReport conjecture_report(const Weight& lambda) const;

private:
    GroupAlgebraElement specialize_t(const GroupAlgebraElement& f) const;
    ParamPoly specialize_t(const ParamPoly& p) const;
    ParamMonomial specialize_t(const ParamMonomial& m) const;

    const MacdonaldEngine& M_;
    const RootSystemData& R_;
    ParameterMode mode_;
    mutable std::mutex mutex_;
    mutable std::map<Weight, GroupAlgebraElement> st_cache_;
    mutable std::map<Weight, std::map<Weight, ParamPoly>> r_cache_;
    mutable std::map<Weight, CanonicalElement> c_cache_;
};

// Z[t_s, t_l]: nonnegative integral exponents, no q.
bool in_integral_t_ring(const ParamPoly& p);
// Integer combination of monomials in t_s^{-1/2}, t_l^{-1/2} without constant term.
bool in_negative_half_t_ideal(const ParamPoly& p);

// Length of w_lambda; the induction order is (length, coordinates).
int64_t weight_length(const RootSystemData& R, const Weight& lambda);

}  // namespace nsmac
