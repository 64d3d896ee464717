#pragma once

// Finite and extended affine Weyl groups. An extended element is stored in
// the normal form tau_mu w (translation, then finite part).

#include <string>
#include <vector>

#include "nsmac/roots.hpp"

namespace nsmac {

class FiniteWeylElement {
public:
    FiniteWeylElement() = default;
    static FiniteWeylElement identity(int n);
    static FiniteWeylElement simple(const RootSystemData& R, int i);  // i in 1..n
    static FiniteWeylElement from_word(const RootSystemData& R, const std::vector<int>& word);
    static FiniteWeylElement from_matrices(int n, std::vector<int64_t> wm, std::vector<int64_t> rm);

    int rank() const { return n_; }
    Weight act(const Weight& l) const;
    RootVec act_root(const RootVec& b) const;

    FiniteWeylElement operator*(const FiniteWeylElement& o) const;
    bool operator==(const FiniteWeylElement& o) const { return wm_ == o.wm_; }
    bool operator<(const FiniteWeylElement& o) const { return wm_ < o.wm_; }
    bool is_identity() const;

    // Letters in 1..n, w = s_{a_1} ... s_{a_L}.
    std::vector<int> reduced_word(const RootSystemData& R) const;
    int64_t length(const RootSystemData& R) const;
    FiniteWeylElement inverse(const RootSystemData& R) const;

private:
    int n_ = 0;
    std::vector<int64_t> wm_;  // on fundamental-weight coordinates
    std::vector<int64_t> rm_;  // on simple-root coordinates
};

FiniteWeylElement longest_element(const RootSystemData& R);
// Every element of the finite Weyl group, in breadth-first order of length.
std::vector<FiniteWeylElement> finite_weyl_group(const RootSystemData& R);
// Reflection in the root beta.
FiniteWeylElement reflection(const RootSystemData& R, const RootVec& beta);

struct ExtendedWeylElement {
    Weight mu;              // translation part
    FiniteWeylElement w;    // finite part; the element is tau_mu w

    bool operator==(const ExtendedWeylElement& o) const { return mu == o.mu && w == o.w; }
    bool operator<(const ExtendedWeylElement& o) const {
        return mu != o.mu ? mu < o.mu : w < o.w;
    }
};

ExtendedWeylElement operator*(const ExtendedWeylElement& x, const ExtendedWeylElement& y);
ExtendedWeylElement ext_identity(const RootSystemData& R);
ExtendedWeylElement ext_simple(const RootSystemData& R, int i);  // i in 0..n
ExtendedWeylElement ext_translation(const RootSystemData& R, const Weight& mu);
ExtendedWeylElement ext_finite(const FiniteWeylElement& w, int n);
ExtendedWeylElement ext_inverse(const RootSystemData& R, const ExtendedWeylElement& x);
// The length-zero element with translation part lambda (lambda minuscule or 0).
ExtendedWeylElement omega_element(const RootSystemData& R, const Weight& lambda);

Weight dot_action(const ExtendedWeylElement& x, const Weight& l);
AffineRoot level_zero_action(const RootSystemData& R, const ExtendedWeylElement& x,
                             const AffineRoot& a);
int64_t length(const RootSystemData& R, const ExtendedWeylElement& x);

// omega * s_{letters[0]} * ... * s_{letters[L-1]}, omega in Omega given by
// its translation part.
struct AffineWord {
    Weight omega;
    std::vector<int> letters;
    bool operator==(const AffineWord&) const = default;
};

enum class TieBreak { smallest, largest };

AffineWord reduced_word(const RootSystemData& R, const ExtendedWeylElement& x,
                        TieBreak tie = TieBreak::smallest);
ExtendedWeylElement evaluate(const RootSystemData& R, const AffineWord& word);
Weight affine_dot_action(const RootSystemData& R, const AffineWord& word, const Weight& l);
AffineRoot level_zero_action(const RootSystemData& R, const AffineWord& word, const AffineRoot& a);
std::string render_word(const AffineWord& word);

// Level-one action of s_i on weights (s_0 . x = s_theta(x) + theta).
Weight simple_dot(const RootSystemData& R, int i, const Weight& l);
// (lambda + Lambda_0, alpha_i) as an integer; the sign decides ascents.
int64_t alcove_pairing(const RootSystemData& R, int i, const Weight& l);

struct WeightOrbitData {
    Weight lambda;
    Weight lambda_minus, lambda_plus, lambda_tilde;
    std::vector<int> w_ring;  // ring-w_lambda: w_ring^{-1}(lambda) = lambda_minus
    AffineWord w_lambda;      // w_lambda . lambda_tilde = lambda
    AffineWord v_lambda;
    Weight omega_tilde;       // translation part of omega_{lambda_tilde}
};

WeightOrbitData orbit_data(const RootSystemData& R, const Weight& l,
                           TieBreak tie = TieBreak::smallest);
// The w_ring and w_lambda fields of orbit_data alone, without v_lambda.
std::vector<int> ring_w_word(const RootSystemData& R, const Weight& l, TieBreak tie = TieBreak::smallest);
std::vector<int> w_lambda_word(const RootSystemData& R, const Weight& l, TieBreak tie = TieBreak::smallest);
// w_lambda as a group element.
ExtendedWeylElement w_lambda_element(const RootSystemData& R, const Weight& l);

std::vector<Weight> finite_orbit(const RootSystemData& R, const Weight& l);
Weight dominant_rep(const RootSystemData& R, const Weight& l);
Weight antidominant_rep(const RootSystemData& R, const Weight& l);
Weight alcove_rep(const RootSystemData& R, const Weight& l);

bool bruhat_leq(const RootSystemData& R, const ExtendedWeylElement& x, const ExtendedWeylElement& w);
bool bruhat_leq_weights(const RootSystemData& R, const Weight& mu, const Weight& lambda);
// {mu : mu <= lambda}, sorted.
std::vector<Weight> lower_interval(const RootSystemData& R, const Weight& lambda);
// {mu in finite orbit of lambda : w_o(lambda) <= mu <= lambda_minus}, sorted.
std::vector<Weight> bruhat_interval_in_orbit(const RootSystemData& R, const Weight& lambda);

// Positive finite roots sent to negative roots by w.
std::vector<RootVec> inversion_set(const RootSystemData& R, const FiniteWeylElement& w);

}  // namespace nsmac
