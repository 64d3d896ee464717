#pragma once

// Exact coefficients: Laurent polynomials in q^{1/m}, t_s^{1/2}, t_l^{1/2}
// with integer coefficients, and fractions whose denominators are products
// of binomials (1 - monomial).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsmac {

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleAtLimit : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Slot { q = 0, ts = 1, tl = 2 };

// q^{qe/m} t_s^{ae/2} t_l^{be/2}
struct ParamMonomial {
    int64_t qe = 0;
    int64_t ae = 0;
    int64_t be = 0;

    int64_t get(Slot s) const;
    void set(Slot s, int64_t v);
    bool is_one() const { return qe == 0 && ae == 0 && be == 0; }
    ParamMonomial inverse() const { return {-qe, -ae, -be}; }

    friend ParamMonomial operator*(const ParamMonomial& x, const ParamMonomial& y);
    ParamMonomial pow(int64_t k) const;
    auto operator<=>(const ParamMonomial&) const = default;
};

struct ParamTerm {
    ParamMonomial m;
    mpz_class c;
};

class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(long c);
    static ParamPoly monomial(const ParamMonomial& m, long c = 1);
    static ParamPoly from_terms(std::vector<ParamTerm> terms);  // any order, duplicates merged

    const std::vector<ParamTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    size_t size() const { return terms_.size(); }

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
    friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
    ParamPoly mul_mono(const ParamMonomial& m) const;
    ParamPoly mul_scalar(const mpz_class& c) const;
    // Multiply by (1 - m).
    ParamPoly mul_binomial(const ParamMonomial& m) const;

    bool operator==(const ParamPoly& o) const;
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // Exact division by (1 - m); returns false when (1 - m) does not divide.
    bool divide_binomial(const ParamMonomial& m, ParamPoly* quotient) const;

    int64_t min_exponent(Slot s) const;
    int64_t max_exponent(Slot s) const;
    // Terms whose exponent in slot s equals e, with that exponent cleared.
    ParamPoly coefficient_at(Slot s, int64_t e) const;
    // Set the exponent of slot s to zero (evaluation of that variable at 1).
    ParamPoly eval_one(Slot s) const;
    // Replace every monomial by its inverse.
    ParamPoly invert_params() const;
    // Move t_l exponents into t_s.
    ParamPoly merge_t() const;
    mpz_class content() const;
    mpz_class sum_coefficients() const;

private:
    void canonicalize();
    std::vector<ParamTerm> terms_;
};

// Variables for polynomiality tests: exponents must lie in the cone spanned
// by the listed generators (step 1/m for q_frac, 1 for q, 1/2 for *_half).
enum class Var {
    q, q_inv, q_frac, q_frac_inv,
    ts, ts_inv, ts_half, ts_half_inv,
    tl, tl_inv, tl_half, tl_half_inv
};

struct RenderContext {
    int64_t m_star = 1;
    bool simply_laced = true;
};

std::string render_monomial(const ParamMonomial& m, const RenderContext& ctx);
std::string render_poly(const ParamPoly& p, const RenderContext& ctx);

// num / prod_j (1 - den_j). Every den_j is nontrivial and oriented so that
// its first nonzero exponent is negative; the unit part of the denominator
// is folded into the numerator.
class CoeffFraction {
public:
    CoeffFraction() = default;
    CoeffFraction(long c) : num_(c) {}
    CoeffFraction(ParamPoly num) : num_(std::move(num)) {}
    CoeffFraction(ParamPoly num, std::vector<ParamMonomial> den);
    static CoeffFraction monomial(const ParamMonomial& m, long c = 1);

    const ParamPoly& num() const { return num_; }
    const std::vector<ParamMonomial>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_one() const { return den_.empty() && num_.is_one(); }

    CoeffFraction operator-() const;
    CoeffFraction& operator+=(const CoeffFraction& o);
    CoeffFraction& operator-=(const CoeffFraction& o);
    CoeffFraction& operator*=(const CoeffFraction& o);
    friend CoeffFraction operator+(CoeffFraction x, const CoeffFraction& y) { return x += y; }
    friend CoeffFraction operator-(CoeffFraction x, const CoeffFraction& y) { return x -= y; }
    friend CoeffFraction operator*(CoeffFraction x, const CoeffFraction& y) { return x *= y; }
    friend CoeffFraction operator/(const CoeffFraction& x, const CoeffFraction& y) { return x * y.inv(); }

    CoeffFraction mul_mono(const ParamMonomial& m) const;
    CoeffFraction mul_poly(const ParamPoly& p) const;
    // Throws DivisionByZero for 0, and also when the numerator is not a
    // signed monomial times binomials (the only invertible shapes here).
    CoeffFraction inv() const;

    // Equality as rational functions (cross multiplication).
    bool operator==(const CoeffFraction& o) const;
    bool operator!=(const CoeffFraction& o) const { return !(*this == o); }

    // Cancel every denominator factor that divides the numerator exactly.
    void reduce();
    CoeffFraction reduced() const;

    // The involution inverting q and all t.
    CoeffFraction invert_params() const;

    // Limit as x -> 0 where x = (slot variable)^dir, dir = +1 or -1.
    CoeffFraction limit_at_zero(Slot s, int dir) const;
    // Substitute 1 for the slot variable; throws PoleAtLimit on a vanishing factor.
    CoeffFraction eval_one(Slot s) const;
    CoeffFraction merge_t() const;

    bool is_polynomial_in(const std::vector<Var>& vars, int64_t m_star) const;

    std::string str(const RenderContext& ctx) const;

private:
    ParamPoly num_;
    std::vector<ParamMonomial> den_;  // sorted
};

// Orientation used for denominator factors; returns true when m was flipped.
bool orient_binomial(ParamMonomial& m);

}  // namespace nsmac
