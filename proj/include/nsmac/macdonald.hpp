#pragma once

// Nonsymmetric and symmetric Macdonald polynomials, their normalizers and
// specializations, and the two scalar products.

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "nsmac/heckeops.hpp"

namespace nsmac {

struct NotAntiDominant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TruncationTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computed object contradicts a proven identity.
struct InternalSentinel : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Spec { exact, qinf, q0, tinf, t0, inf_inf, zero_zero };

Spec parse_spec(const std::string& s);  // throws std::invalid_argument
std::string spec_name(Spec s);

// Coefficientwise limit; PoleAtLimit propagates.
GroupAlgebraElement specialize(const GroupAlgebraElement& f, Spec s);
// Coefficientwise substitution t_s = t_l = 1.
GroupAlgebraElement eval_t_one(const GroupAlgebraElement& f);

struct MacdonaldResult {
    Weight lambda;
    GroupAlgebraElement poly;  // E_lambda, e^lambda coefficient 1
    CoeffFraction e_lambda;
    std::vector<ParamMonomial> e_factors;  // e_lambda = prod (1 - m)
    CoeffFraction f_lambda;
    AffineWord chain;  // w_lambda

    // e_lambda E_lambda
    GroupAlgebraElement normalized() const;
};

// Which affine intertwiner drives the chain.
enum class AffineStep { G_tilde, G };

class MacdonaldEngine {
public:
    explicit MacdonaldEngine(const RootSystemData& R);
    const RootSystemData& system() const { return R_; }
    const PolyRep& rep() const { return P_; }

    // Spectral monomials bold-q^{(beta + k delta, lambda-bar)} and bold-t^{(beta, lambda-bar)}.
    ParamMonomial q_monomial(const AffineRoot& gamma, const Weight& lambda) const;
    ParamMonomial t_monomial(const RootVec& beta, const Weight& lambda) const;

    CoeffFraction normalizer_e(const Weight& lambda) const;
    CoeffFraction f_normalizer(const Weight& lambda) const;
    // xi(ring-w_lambda)
    ParamMonomial xi_ring(const Weight& lambda) const;

    // Cached, built with the smallest-index reduced word and G_tilde.
    const MacdonaldResult& compute_E(const Weight& lambda) const;
    // Uncached variant with a chosen tie-break and affine step.
    MacdonaldResult compute_E_with(const Weight& lambda, TieBreak tie, AffineStep step) const;

    GroupAlgebraElement E_tilde(const Weight& lambda, Spec s = Spec::exact) const;
    GroupAlgebraElement E(const Weight& lambda, Spec s = Spec::exact) const;

    // P_lambda = sum a_mu E_mu over the finite orbit (lambda anti-dominant).
    GroupAlgebraElement compute_P(const Weight& lambda) const;
    // e_lambda P_lambda = sum b_mu e_mu E_mu, built from normalized polynomials.
    GroupAlgebraElement compute_P_normalized(const Weight& lambda) const;

    // q -> infinity by Hecke operators: xi(ring-w w_o)^{-1} T_{ring-w w_o} e^{lambda_+}.
    GroupAlgebraElement E_infinity_direct(const Weight& lambda) const;
    // E-tilde at q = 0: T_{ring-w} e^{lambda_-}.
    GroupAlgebraElement E_tilde_zero_direct(const Weight& lambda) const;
    // E at (0,0): N_{ring-w} e^{lambda_-}.
    GroupAlgebraElement E_zero_zero_direct(const Weight& lambda) const;
    // Delta_{ring-w w_o} e^{lambda_+}
    GroupAlgebraElement E_inf_inf_direct(const Weight& lambda) const;
    // chi(w_o ring-w) T^{-1}_{(w_o ring-w)^{-1}} e^{lambda_-}, equal to w_o E_lambda(inf, t^{-1}).
    GroupAlgebraElement E_inf_tinv_direct(const Weight& lambda) const;

    // P(inf,t) as sum xi(ring-w_mu)^{-2} E_mu(inf,t).
    GroupAlgebraElement P_infinity_from_E(const Weight& lambda) const;
    // P(inf,t) as xi(w_o)^{-1} sum xi(ring-w_mu)^{-1} T_{ring-w_mu w_o} e^{lambda_+}.
    GroupAlgebraElement P_infinity_from_T(const Weight& lambda) const;

    // <f,g>_t = CT(f g^iota C(inf,t)), exact.
    CoeffFraction degenerate_pairing_t(const GroupAlgebraElement& f, const GroupAlgebraElement& g) const;
    // <f,g>_{q,t} = CT(f g-bar C(q,t)) as a series in q^{-1/m*}, keeping exponents
    // qe >= -D (units 1/m*).
    ParamPoly cherednik_pairing(const GroupAlgebraElement& f, const GroupAlgebraElement& g, int64_t D) const;

private:
    const RootSystemData& R_;
    PolyRep P_;
    mutable std::mutex mutex_;
    mutable std::map<Weight, MacdonaldResult> cache_;
};

// Character of the irreducible representation with lowest weight lambda_minus
// (Freudenthal's multiplicity formula).
GroupAlgebraElement weyl_character_oracle(const RootSystemData& R, const Weight& lambda_minus);

// Power-series expansion of c in q^{-1/m*}, keeping exponents qe >= -N.
// Throws PoleAtLimit for a denominator factor free of q.
ParamPoly expand_in_q_inverse(const CoeffFraction& c, int64_t N);
ParamPoly truncate_q(const ParamPoly& p, int64_t N);

}  // namespace nsmac
