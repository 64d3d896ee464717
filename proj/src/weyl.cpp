#include "nsmac/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace nsmac {

// ------------------------------------------------------------ finite part

FiniteWeylElement FiniteWeylElement::identity(int n) {
    FiniteWeylElement e;
    e.n_ = n;
    e.wm_.assign(n * n, 0);
    e.rm_.assign(n * n, 0);
    for (int i = 0; i < n; ++i) e.wm_[i * n + i] = e.rm_[i * n + i] = 1;
    return e;
}

FiniteWeylElement FiniteWeylElement::from_matrices(int n, std::vector<int64_t> wm,
                                                   std::vector<int64_t> rm) {
    FiniteWeylElement e;
    e.n_ = n;
    e.wm_ = std::move(wm);
    e.rm_ = std::move(rm);
    return e;
}

FiniteWeylElement FiniteWeylElement::simple(const RootSystemData& R, int i) {
    int n = R.rank, k = i - 1;
    if (k < 0 || k >= n) throw std::out_of_range("simple reflection index");
    FiniteWeylElement e = identity(n);
    for (int j = 0; j < n; ++j) e.wm_[j * n + k] -= R.cartan[j][k];
    for (int j = 0; j < n; ++j) e.rm_[k * n + j] -= R.cartan[k][j];
    return e;
}

FiniteWeylElement FiniteWeylElement::from_word(const RootSystemData& R, const std::vector<int>& word) {
    FiniteWeylElement e = identity(R.rank);
    for (int a : word) e = e * simple(R, a);
    return e;
}

Weight FiniteWeylElement::act(const Weight& l) const {
    Weight out(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += wm_[i * n_ + j] * l[j];
    return out;
}

RootVec FiniteWeylElement::act_root(const RootVec& b) const {
    RootVec out(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += rm_[i * n_ + j] * b[j];
    return out;
}

FiniteWeylElement FiniteWeylElement::operator*(const FiniteWeylElement& o) const {
    FiniteWeylElement e;
    e.n_ = n_;
    e.wm_.assign(n_ * n_, 0);
    e.rm_.assign(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            int64_t a = wm_[i * n_ + k], b = rm_[i * n_ + k];
            for (int j = 0; j < n_; ++j) {
                e.wm_[i * n_ + j] += a * o.wm_[k * n_ + j];
                e.rm_[i * n_ + j] += b * o.rm_[k * n_ + j];
            }
        }
    return e;
}

bool FiniteWeylElement::is_identity() const { return *this == identity(n_); }

std::vector<int> FiniteWeylElement::reduced_word(const RootSystemData& R) const {
    std::vector<int> word;
    FiniteWeylElement y = *this;
    while (true) {
        int found = -1;
        for (int i = 1; i <= n_ && found < 0; ++i) {
            RootVec img = y.act_root(R.simple_root(i - 1));
            if (!RootSystemData::is_positive(img)) found = i;
        }
        if (found < 0) break;
        word.push_back(found);
        y = y * simple(R, found);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

int64_t FiniteWeylElement::length(const RootSystemData& R) const {
    int64_t l = 0;
    for (const auto& b : R.positive_roots)
        if (!RootSystemData::is_positive(act_root(b))) ++l;
    return l;
}

FiniteWeylElement FiniteWeylElement::inverse(const RootSystemData& R) const {
    auto w = reduced_word(R);
    std::reverse(w.begin(), w.end());
    return from_word(R, w);
}

std::vector<FiniteWeylElement> finite_weyl_group(const RootSystemData& R) {
    std::vector<FiniteWeylElement> all{FiniteWeylElement::identity(R.rank)};
    std::set<FiniteWeylElement> seen(all.begin(), all.end());
    for (size_t k = 0; k < all.size(); ++k)
        for (int i = 1; i <= R.rank; ++i) {
            FiniteWeylElement y = all[k] * FiniteWeylElement::simple(R, i);
            if (seen.insert(y).second) all.push_back(y);
        }
    return all;
}

FiniteWeylElement longest_element(const RootSystemData& R) {
    FiniteWeylElement y = FiniteWeylElement::identity(R.rank);
    while (true) {
        int found = -1;
        for (int i = 1; i <= R.rank && found < 0; ++i)
            if (RootSystemData::is_positive(y.act_root(R.simple_root(i - 1)))) found = i;
        if (found < 0) return y;
        y = y * FiniteWeylElement::simple(R, found);
    }
}

FiniteWeylElement reflection(const RootSystemData& R, const RootVec& beta) {
    int n = R.rank;
    std::vector<int64_t> wm(n * n), rm(n * n);
    Weight bw = R.root_to_weight(beta);
    int64_t bb = R.root_sq(beta);
    for (int j = 0; j < n; ++j) {
        Weight e = R.zero_weight();
        e[j] = 1;
        int64_t p = R.coroot_pairing(e, beta);
        for (int i = 0; i < n; ++i) wm[i * n + j] = e[i] - p * bw[i];
        RootVec a = R.simple_root(j);
        int64_t q = 2 * R.pair_roots(a, beta) / bb;
        for (int i = 0; i < n; ++i) rm[i * n + j] = a[i] - q * beta[i];
    }
    return FiniteWeylElement::from_matrices(n, std::move(wm), std::move(rm));
}

std::vector<RootVec> inversion_set(const RootSystemData& R, const FiniteWeylElement& w) {
    std::vector<RootVec> out;
    for (const auto& b : R.positive_roots)
        if (!RootSystemData::is_positive(w.act_root(b))) out.push_back(b);
    return out;
}

// ---------------------------------------------------------- extended part

ExtendedWeylElement operator*(const ExtendedWeylElement& x, const ExtendedWeylElement& y) {
    Weight mu = x.w.act(y.mu);
    for (size_t i = 0; i < mu.size(); ++i) mu[i] += x.mu[i];
    return {mu, x.w * y.w};
}

ExtendedWeylElement ext_identity(const RootSystemData& R) {
    return {R.zero_weight(), FiniteWeylElement::identity(R.rank)};
}

ExtendedWeylElement ext_simple(const RootSystemData& R, int i) {
    if (i == 0) return {R.theta_weight, reflection(R, R.theta)};
    return {R.zero_weight(), FiniteWeylElement::simple(R, i)};
}

ExtendedWeylElement ext_translation(const RootSystemData& R, const Weight& mu) {
    return {mu, FiniteWeylElement::identity(R.rank)};
}

ExtendedWeylElement ext_finite(const FiniteWeylElement& w, int n) { return {Weight(n, 0), w}; }

ExtendedWeylElement ext_inverse(const RootSystemData& R, const ExtendedWeylElement& x) {
    FiniteWeylElement wi = x.w.inverse(R);
    Weight mu = wi.act(x.mu);
    for (auto& c : mu) c = -c;
    return {mu, wi};
}

ExtendedWeylElement omega_element(const RootSystemData& R, const Weight& lambda) {
    auto od = orbit_data(R, lambda);
    ExtendedWeylElement om{lambda, FiniteWeylElement::from_word(R, od.w_ring)};
    if (length(R, om) != 0) throw std::logic_error("weight " + render_weight(lambda) + " is not in O_P");
    return om;
}

Weight dot_action(const ExtendedWeylElement& x, const Weight& l) {
    Weight out = x.w.act(l);
    for (size_t i = 0; i < out.size(); ++i) out[i] += x.mu[i];
    return out;
}

AffineRoot level_zero_action(const RootSystemData& R, const ExtendedWeylElement& x,
                             const AffineRoot& a) {
    RootVec b = x.w.act_root(a.beta);
    return {b, a.k - R.pair_root_weight(b, x.mu)};
}

int64_t length(const RootSystemData& R, const ExtendedWeylElement& x) {
    Weight lam = x.w.inverse(R).act(x.mu);
    int64_t l = 0;
    for (const auto& b : R.positive_roots) {
        int64_t p = R.coroot_pairing(lam, b);
        if (!RootSystemData::is_positive(x.w.act_root(b))) ++p;
        l += p < 0 ? -p : p;
    }
    return l;
}

AffineWord reduced_word(const RootSystemData& R, const ExtendedWeylElement& x, TieBreak tie) {
    AffineWord word;
    ExtendedWeylElement y = x;
    std::vector<int> pushed;
    int n = R.rank;
    while (true) {
        int found = -1;
        for (int s = 0; s <= n && found < 0; ++s) {
            int i = tie == TieBreak::smallest ? s : n - s;
            if (!RootSystemData::is_positive(level_zero_action(R, y, R.affine_simple_root(i))))
                found = i;
        }
        if (found < 0) break;
        pushed.push_back(found);
        y = y * ext_simple(R, found);
    }
    word.omega = y.mu;
    word.letters.assign(pushed.rbegin(), pushed.rend());
    return word;
}

ExtendedWeylElement evaluate(const RootSystemData& R, const AffineWord& word) {
    ExtendedWeylElement y = omega_element(R, word.omega);
    for (int a : word.letters) y = y * ext_simple(R, a);
    return y;
}

Weight affine_dot_action(const RootSystemData& R, const AffineWord& word, const Weight& l) {
    return dot_action(evaluate(R, word), l);
}

AffineRoot level_zero_action(const RootSystemData& R, const AffineWord& word, const AffineRoot& a) {
    return level_zero_action(R, evaluate(R, word), a);
}

std::string render_word(const AffineWord& word) {
    std::string s;
    for (size_t i = 0; i < word.letters.size(); ++i)
        s += (i ? " s" : "s") + std::to_string(word.letters[i]);
    if (s.empty()) s = "id";
    s += " | omega=";
    int idx = -1;
    for (size_t i = 0; i < word.omega.size(); ++i)
        if (word.omega[i] != 0) idx = static_cast<int>(i);
    if (idx < 0) return s + "0";
    return s + "λ_" + std::to_string(idx + 1);
}

// ------------------------------------------------------------- orbit data

Weight simple_dot(const RootSystemData& R, int i, const Weight& l) {
    if (i > 0) return R.reflect_weight(i - 1, l);
    int64_t p = R.pair_root_weight(R.theta, l) - 1;
    Weight out = l;
    for (int j = 0; j < R.rank; ++j) out[j] -= p * R.theta_weight[j];
    return out;
}

int64_t alcove_pairing(const RootSystemData& R, int i, const Weight& l) {
    if (i == 0) return 1 - R.pair_root_weight(R.theta, l);
    return R.d[i - 1] * l[i - 1];
}

namespace {

std::vector<int> descend_finite(const RootSystemData& R, Weight& mu, TieBreak tie) {
    std::vector<int> pushed;
    int n = R.rank;
    while (true) {
        int found = -1;
        for (int s = 0; s < n && found < 0; ++s) {
            int k = tie == TieBreak::smallest ? s : n - 1 - s;
            if (mu[k] > 0) found = k;
        }
        if (found < 0) return pushed;
        mu = R.reflect_weight(found, mu);
        pushed.push_back(found + 1);
    }
}

std::vector<int> descend_alcove(const RootSystemData& R, Weight& mu, TieBreak tie) {
    std::vector<int> pushed;
    int n = R.rank;
    while (true) {
        int found = -1;
        for (int s = 0; s <= n && found < 0; ++s) {
            int i = tie == TieBreak::smallest ? s : n - s;
            if (alcove_pairing(R, i, mu) < 0) found = i;
        }
        if (found < 0) return pushed;
        mu = simple_dot(R, found, mu);
        pushed.push_back(found);
    }
}

}  // namespace

Weight dominant_rep(const RootSystemData& R, const Weight& l) {
    Weight mu = l;
    while (true) {
        auto it = std::find_if(mu.begin(), mu.end(), [](int64_t c) { return c < 0; });
        if (it == mu.end()) return mu;
        mu = R.reflect_weight(static_cast<int>(it - mu.begin()), mu);
    }
}

Weight antidominant_rep(const RootSystemData& R, const Weight& l) {
    Weight mu = l;
    descend_finite(R, mu, TieBreak::smallest);
    return mu;
}

Weight alcove_rep(const RootSystemData& R, const Weight& l) {
    Weight mu = l;
    descend_alcove(R, mu, TieBreak::smallest);
    return mu;
}

WeightOrbitData orbit_data(const RootSystemData& R, const Weight& l, TieBreak tie) {
    WeightOrbitData od;
    od.lambda = l;
    Weight mu = l;
    od.w_ring = descend_finite(R, mu, tie);
    od.lambda_minus = mu;
    od.lambda_plus = dominant_rep(R, l);
    mu = l;
    od.w_lambda.omega = R.zero_weight();
    od.w_lambda.letters = descend_alcove(R, mu, tie);
    od.lambda_tilde = mu;
    od.omega_tilde = mu;

    // v_lambda = w_lambda * omega w_o omega^{-1}
    Weight tmp = mu;
    ExtendedWeylElement om{mu, FiniteWeylElement::from_word(R, descend_finite(R, tmp, tie))};
    ExtendedWeylElement w0 = ext_finite(longest_element(R), R.rank);
    ExtendedWeylElement wl = ext_identity(R);
    for (int a : od.w_lambda.letters) wl = wl * ext_simple(R, a);
    od.v_lambda = reduced_word(R, wl * om * w0 * ext_inverse(R, om), tie);
    return od;
}

std::vector<int> ring_w_word(const RootSystemData& R, const Weight& l, TieBreak tie) {
    Weight mu = l;
    return descend_finite(R, mu, tie);
}

std::vector<int> w_lambda_word(const RootSystemData& R, const Weight& l, TieBreak tie) {
    Weight mu = l;
    return descend_alcove(R, mu, tie);
}

ExtendedWeylElement w_lambda_element(const RootSystemData& R, const Weight& l) {
    Weight mu = l;
    auto letters = descend_alcove(R, mu, TieBreak::smallest);
    ExtendedWeylElement y = ext_identity(R);
    for (int a : letters) y = y * ext_simple(R, a);
    return y;
}

std::vector<Weight> finite_orbit(const RootSystemData& R, const Weight& l) {
    std::set<Weight> seen{l};
    std::deque<Weight> todo{l};
    while (!todo.empty()) {
        Weight mu = todo.front();
        todo.pop_front();
        for (int k = 0; k < R.rank; ++k) {
            Weight nu = R.reflect_weight(k, mu);
            if (seen.insert(nu).second) todo.push_back(nu);
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------- Bruhat

bool bruhat_leq(const RootSystemData& R, const ExtendedWeylElement& x, const ExtendedWeylElement& w) {
    AffineWord ww = reduced_word(R, w);
    ExtendedWeylElement y = ext_inverse(R, omega_element(R, ww.omega)) * x;
    for (auto it = ww.letters.rbegin(); it != ww.letters.rend(); ++it) {
        if (!RootSystemData::is_positive(level_zero_action(R, y, R.affine_simple_root(*it))))
            y = y * ext_simple(R, *it);
    }
    return y == ext_identity(R);
}

bool bruhat_leq_weights(const RootSystemData& R, const Weight& mu, const Weight& lambda) {
    if (alcove_rep(R, mu) != alcove_rep(R, lambda)) return false;
    return bruhat_leq(R, w_lambda_element(R, mu), w_lambda_element(R, lambda));
}

std::vector<Weight> lower_interval(const RootSystemData& R, const Weight& lambda) {
    Weight mu = lambda;
    auto letters = descend_alcove(R, mu, TieBreak::smallest);
    std::set<Weight> cur{mu};
    // rebuild upward along the chain lambda_tilde -> lambda
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        std::set<Weight> next = cur;
        for (const auto& nu : cur) next.insert(simple_dot(R, *it, nu));
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

std::vector<Weight> bruhat_interval_in_orbit(const RootSystemData& R, const Weight& lambda) {
    Weight lo = longest_element(R).act(lambda);
    Weight hi = antidominant_rep(R, lambda);
    std::vector<Weight> out;
    for (const auto& mu : finite_orbit(R, lambda))
        if (bruhat_leq_weights(R, lo, mu) && bruhat_leq_weights(R, mu, hi)) out.push_back(mu);
    return out;
}

}  // namespace nsmac
