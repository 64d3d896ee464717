#pragma once

// Finite and affine root data for the reduced irreducible types.
// Roots are stored in simple-root coordinates, weights in
// fundamental-weight coordinates. Short roots have square length 2.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsmac/coeffs.hpp"

namespace nsmac {

using Rational = mpq_class;
using Weight = std::vector<int64_t>;
using RootVec = std::vector<int64_t>;

struct UnsupportedType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// beta + k delta
struct AffineRoot {
    RootVec beta;
    int64_t k = 0;
    auto operator<=>(const AffineRoot&) const = default;
};

class RootSystemData {
public:
    char type = 'A';
    int rank = 0;
    std::vector<std::vector<int64_t>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
    std::vector<int64_t> d;                    // (alpha_i, alpha_i) / 2
    std::vector<RootVec> positive_roots;       // by height, then lexicographic
    std::vector<std::vector<Rational>> fundamental_weights;  // root coordinates
    std::vector<std::vector<Rational>> weight_gram;          // (lambda_j, lambda_k)
    RootVec theta;
    Weight theta_weight;
    int64_t r = 1;
    int64_t m_star = 1;
    int64_t m_literal = 1;  // lcm of denominators of (alpha_j, lambda_k)
    int64_t c0 = 1;
    std::vector<Weight> minuscule;  // dominant weights with (lambda, theta) <= 1, including 0

    std::string name() const { return std::string(1, type) + std::to_string(rank); }
    bool simply_laced() const { return r == 1; }
    RenderContext render_context() const { return {m_star, simply_laced()}; }

    int64_t pair_roots(const RootVec& a, const RootVec& b) const;
    int64_t pair_root_weight(const RootVec& a, const Weight& l) const;
    Rational pair_weights(const Weight& a, const Weight& b) const;
    int64_t root_sq(const RootVec& a) const { return pair_roots(a, a); }
    // (lambda, beta^vee)
    int64_t coroot_pairing(const Weight& l, const RootVec& beta) const;

    bool is_long(const RootVec& beta) const { return root_sq(beta) > 2; }
    Slot t_slot(const RootVec& beta) const { return is_long(beta) ? Slot::tl : Slot::ts; }
    Slot simple_slot(int i) const;  // i in 0..n; alpha_0 is short

    bool is_root(const RootVec& beta) const;
    static bool is_positive(const RootVec& beta);
    static int64_t height(const RootVec& beta);
    int64_t max_height() const { return height(positive_roots.back()); }

    Weight root_to_weight(const RootVec& beta) const;
    std::vector<Rational> weight_root_coords(const Weight& l) const;
    std::optional<RootVec> weight_to_root(const Weight& l) const;

    RootVec simple_root(int i) const;
    RootVec reflect_root(int i, const RootVec& beta) const;
    Weight reflect_weight(int i, const Weight& l) const;
    static bool is_dominant(const Weight& l);
    static bool is_antidominant(const Weight& l);
    Weight zero_weight() const { return Weight(rank, 0); }

    bool is_affine_root(const AffineRoot& a) const;
    static bool is_positive(const AffineRoot& a);
    // (beta + k delta, lambda + Lambda_0)
    int64_t pair_affine(const AffineRoot& a, const Weight& l) const;
    AffineRoot affine_simple_root(int i) const;

    // Positive affine roots with (alpha, lambda + Lambda_0) < 0, sorted by (k, beta).
    std::vector<AffineRoot> affine_roots_negative_on(const Weight& l) const;

private:
    std::map<RootVec, int> root_index_;
    friend RootSystemData build_root_system(char, int);
};

RootSystemData build_root_system(char type, int rank);
// "A2", "G2", ...
RootSystemData build_root_system(const std::string& name);

std::string render_weight(const Weight& l);

}  // namespace nsmac
