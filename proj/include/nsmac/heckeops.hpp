#pragma once

// The group algebra of the weight lattice and the operators acting on it:
// the polynomial representation of the double affine Hecke algebra,
// intertwiners, 0-Hecke and Demazure operators, and the involutions.

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "nsmac/coeffs.hpp"
#include "nsmac/roots.hpp"
#include "nsmac/weyl.hpp"

namespace nsmac {

struct ZeroNormalizer : std::domain_error {
    using std::domain_error::domain_error;
};

class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    static GroupAlgebraElement monomial(const Weight& l, const CoeffFraction& c = CoeffFraction(1));

    const std::map<Weight, CoeffFraction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    CoeffFraction coefficient(const Weight& l) const;
    std::vector<Weight> support() const;

    void add_term(const Weight& l, const CoeffFraction& c);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement x, const GroupAlgebraElement& y) { return x += y; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement x, const GroupAlgebraElement& y) { return x -= y; }
    GroupAlgebraElement operator-() const;
    GroupAlgebraElement scaled(const CoeffFraction& c) const;
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

    // Apply fn to every coefficient; zero results are dropped.
    GroupAlgebraElement map_coeffs(const std::function<CoeffFraction(const CoeffFraction&)>& fn) const;
    // Apply fn to every weight (fn must be injective).
    GroupAlgebraElement map_weights(const std::function<Weight(const Weight&)>& fn) const;
    GroupAlgebraElement reduced() const;

    bool operator==(const GroupAlgebraElement& o) const;
    bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

    // "e[-1] + ((1 - t^-1)/(1 - q^-1 t^-1)) e[1]", weights in lexicographic order.
    std::string str(const RenderContext& ctx) const;

private:
    std::map<Weight, CoeffFraction> terms_;
};

// Monomials in the parameters.
ParamMonomial q_power(const RootSystemData& R, int64_t k);
// t_slot^{half/2}
ParamMonomial t_half_power(Slot s, int64_t half);
// t_i^{1/2} for the affine simple root alpha_i, i in 0..n.
ParamMonomial t_simple_half(const RootSystemData& R, int i);

// bold-q^{(beta + k delta, lambda-bar)} and bold-t^{(beta, lambda-bar)}; ring_w is
// ring-w_lambda.
ParamMonomial spectral_q(const RootSystemData& R, const RootVec& beta, int64_t k, const Weight& lambda,
                         const FiniteWeylElement& ring_w);
ParamMonomial spectral_t(const RootSystemData& R, const RootVec& beta, const FiniteWeylElement& ring_w);
// bold-t^{(gamma, lambda-bar)} for a weight gamma; exponents must be half-integral.
ParamMonomial spectral_t_weight(const RootSystemData& R, const Weight& gamma, const FiniteWeylElement& ring_w);
FiniteWeylElement ring_w_element(const RootSystemData& R, const Weight& lambda);

// chi and xi agree in the reduced case: product of t_i^{1/2} over the letters
// of a reduced word; Omega contributes 1.
ParamMonomial chi(const RootSystemData& R, const ExtendedWeylElement& w);
ParamMonomial chi_word(const RootSystemData& R, const std::vector<int>& letters);
inline ParamMonomial xi(const RootSystemData& R, const ExtendedWeylElement& w) { return chi(R, w); }

// Operators of the polynomial representation for one root system.
class PolyRep {
public:
    explicit PolyRep(const RootSystemData& R);
    const RootSystemData& system() const { return R_; }

    GroupAlgebraElement T(int i, const GroupAlgebraElement& f) const;      // i in 1..n
    GroupAlgebraElement T_inv(int i, const GroupAlgebraElement& f) const;  // i in 1..n
    GroupAlgebraElement T01(const GroupAlgebraElement& f) const;
    GroupAlgebraElement T01_inv(const GroupAlgebraElement& f) const;
    GroupAlgebraElement T02(const GroupAlgebraElement& f) const;
    GroupAlgebraElement T03(const GroupAlgebraElement& f) const;
    GroupAlgebraElement T03_inv(const GroupAlgebraElement& f) const;
    // Generators of H_X: letter 0 is T_03.
    GroupAlgebraElement TX(int i, const GroupAlgebraElement& f) const;
    GroupAlgebraElement TX_inv(int i, const GroupAlgebraElement& f) const;

    GroupAlgebraElement X(const Weight& mu, const GroupAlgebraElement& f) const;
    // omega_lambda for lambda minuscule or 0.
    GroupAlgebraElement omega(const Weight& lambda, const GroupAlgebraElement& f) const;
    GroupAlgebraElement omega_inv(const Weight& lambda, const GroupAlgebraElement& f) const;

    // T_w = omega T_{l_0} ... T_{l_{L-1}} for the word (omega, l).
    GroupAlgebraElement Tw(const AffineWord& w, const GroupAlgebraElement& f) const;
    GroupAlgebraElement Tw_inv(const AffineWord& w, const GroupAlgebraElement& f) const;
    GroupAlgebraElement Tw(const ExtendedWeylElement& w, const GroupAlgebraElement& f, bool inverse = false) const;
    // Finite words w = s_{a_1} ... s_{a_L}.
    GroupAlgebraElement T_finite(const std::vector<int>& word, const GroupAlgebraElement& f) const;
    GroupAlgebraElement T_finite_inv(const std::vector<int>& word, const GroupAlgebraElement& f) const;
    // T^{-1}_{w^{-1}}: inverse generators applied in the order of T_w.
    GroupAlgebraElement T_dual(const AffineWord& w, const GroupAlgebraElement& f) const;

    // Y_mu for mu in the root lattice (root coordinates). Y_a = T_{tau_a} for
    // anti-dominant a with letter 0 read as T_01; Y_mu = Y_a Y_b^{-1}.
    // reduce_steps cancels coefficient denominators after every generator,
    // which pays off on inputs with fractional coefficients.
    GroupAlgebraElement Y(const RootVec& mu, const GroupAlgebraElement& f, bool reduce_steps = false) const;

    // Intertwiners at lambda; letter 0 of G uses T_02, G_tilde uses T_03.
    GroupAlgebraElement G(int i, const Weight& lambda, const GroupAlgebraElement& f) const;
    GroupAlgebraElement G_tilde0(const Weight& lambda, const GroupAlgebraElement& f) const;
    // Normalized intertwiners; letter 0 uses G_tilde.
    GroupAlgebraElement I(int i, const Weight& lambda, const GroupAlgebraElement& f) const;

    // 0-Hecke and Demazure operators, i in 1..n.
    GroupAlgebraElement N(int i, const GroupAlgebraElement& f) const;
    GroupAlgebraElement N_prime(int i, const GroupAlgebraElement& f) const;
    GroupAlgebraElement demazure(int i, const GroupAlgebraElement& f) const;
    GroupAlgebraElement N_word(const std::vector<int>& word, const GroupAlgebraElement& f) const;
    GroupAlgebraElement N_prime_word(const std::vector<int>& word, const GroupAlgebraElement& f) const;
    GroupAlgebraElement demazure_word(const std::vector<int>& word, const GroupAlgebraElement& f) const;

    GroupAlgebraElement kappa(const GroupAlgebraElement& f) const;
    GroupAlgebraElement varsigma(const GroupAlgebraElement& f) const;
    GroupAlgebraElement iota(const GroupAlgebraElement& f) const;
    // e^lambda -> e^{-lambda} with all parameters inverted.
    GroupAlgebraElement bar(const GroupAlgebraElement& f) const;
    // Finite Weyl group acting on exponents.
    GroupAlgebraElement act(const FiniteWeylElement& w, const GroupAlgebraElement& f) const;

    const std::vector<int>& w0_word() const { return w0_word_; }
    const std::vector<int>& s_theta_word() const { return s_theta_word_; }
    ParamMonomial chi_w0() const { return chi_word(R_, w0_word_); }

private:
    // Generic simple-reflection operator: n = pairing, e^{-a} = q^{qa} e^{v}.
    GroupAlgebraElement hecke_step(const GroupAlgebraElement& f, Slot slot, const Weight& v, int64_t qa,
                                   const std::function<int64_t(const Weight&)>& pairing, bool inverse) const;
    const std::pair<AffineWord, AffineWord>& y_words(const RootVec& mu) const;

    const RootSystemData& R_;
    std::vector<Weight> alpha_w_;  // alpha_i in weight coordinates
    std::vector<int> w0_word_;
    std::vector<int> s_theta_word_;
    std::vector<std::vector<int>> omega_words_;  // w_ring of each minuscule weight
    mutable std::mutex cache_mutex_;
    mutable std::map<RootVec, std::pair<AffineWord, AffineWord>> y_cache_;
};

}  // namespace nsmac
