#include "nsmac/heckeops.hpp"

#include <limits>

namespace nsmac {

// ---- GroupAlgebraElement ----

GroupAlgebraElement GroupAlgebraElement::monomial(const Weight& l, const CoeffFraction& c) {
    GroupAlgebraElement e;
    e.add_term(l, c);
    return e;
}

CoeffFraction GroupAlgebraElement::coefficient(const Weight& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? CoeffFraction() : it->second;
}

std::vector<Weight> GroupAlgebraElement::support() const {
    std::vector<Weight> s;
    for (const auto& [w, c] : terms_) s.push_back(w);
    return s;
}

void GroupAlgebraElement::add_term(const Weight& l, const CoeffFraction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(l, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
    GroupAlgebraElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const CoeffFraction& c) const {
    GroupAlgebraElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.add_term(w, x * c);
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    GroupAlgebraElement r;
    for (const auto& [a, ca] : x.terms_)
        for (const auto& [b, cb] : y.terms_) {
            Weight s = a;
            for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            r.add_term(s, ca * cb);
        }
    return r;
}

GroupAlgebraElement GroupAlgebraElement::map_coeffs(
    const std::function<CoeffFraction(const CoeffFraction&)>& fn) const {
    GroupAlgebraElement r;
    for (const auto& [w, c] : terms_) r.add_term(w, fn(c));
    return r;
}

GroupAlgebraElement GroupAlgebraElement::map_weights(const std::function<Weight(const Weight&)>& fn) const {
    GroupAlgebraElement r;
    for (const auto& [w, c] : terms_) r.add_term(fn(w), c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::reduced() const {
    GroupAlgebraElement r;
    for (const auto& [w, c] : terms_) r.add_term(w, c.reduced());
    return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [w, c] : terms_) {
        if (w != it->first || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

std::string GroupAlgebraElement::str(const RenderContext& ctx) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string e = "e" + render_weight(w);
        s += c.is_one() ? e : "(" + c.str(ctx) + ") " + e;
    }
    return s;
}

// ---- parameter monomials ----

ParamMonomial q_power(const RootSystemData& R, int64_t k) { return {k * R.m_star, 0, 0}; }

ParamMonomial t_half_power(Slot s, int64_t half) {
    ParamMonomial m;
    m.set(s, half);
    return m;
}

ParamMonomial t_simple_half(const RootSystemData& R, int i) { return t_half_power(R.simple_slot(i), 1); }

FiniteWeylElement ring_w_element(const RootSystemData& R, const Weight& lambda) {
    return FiniteWeylElement::from_word(R, ring_w_word(R, lambda));
}

ParamMonomial spectral_t(const RootSystemData& R, const RootVec& beta, const FiniteWeylElement& ring_w) {
    RootVec c = ring_w.inverse(R).act_root(beta);
    ParamMonomial m;
    for (int i = 0; i < R.rank; ++i) {
        Slot s = R.simple_slot(i + 1);
        m.set(s, m.get(s) + 2 * c[i]);
    }
    return m;
}

ParamMonomial spectral_q(const RootSystemData& R, const RootVec& beta, int64_t k, const Weight& lambda,
                         const FiniteWeylElement& ring_w) {
    return q_power(R, R.pair_root_weight(beta, lambda) + k) * spectral_t(R, beta, ring_w).inverse();
}

ParamMonomial spectral_t_weight(const RootSystemData& R, const Weight& gamma, const FiniteWeylElement& ring_w) {
    auto c = R.weight_root_coords(ring_w.inverse(R).act(gamma));
    Rational es = 0, el = 0;
    for (int i = 0; i < R.rank; ++i) (R.simple_slot(i + 1) == Slot::tl ? el : es) += 2 * c[i];
    if (es.get_den() != 1 || el.get_den() != 1)
        throw std::domain_error("t-exponent is not half-integral");
    ParamMonomial m;
    m.set(Slot::ts, es.get_num().get_si());
    m.set(Slot::tl, el.get_num().get_si());
    return m;
}

ParamMonomial chi_word(const RootSystemData& R, const std::vector<int>& letters) {
    ParamMonomial m;
    for (int a : letters) m = m * t_simple_half(R, a);
    return m;
}

ParamMonomial chi(const RootSystemData& R, const ExtendedWeylElement& w) {
    return chi_word(R, reduced_word(R, w).letters);
}

// ---- PolyRep ----

namespace {

ParamPoly half_difference(Slot s) {
    return ParamPoly::monomial(t_half_power(s, 1)) - ParamPoly::monomial(t_half_power(s, -1));
}

Weight add(Weight a, const Weight& b, int64_t k = 1) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
}

}  // namespace

PolyRep::PolyRep(const RootSystemData& R) : R_(R) {
    for (int i = 0; i < R.rank; ++i) alpha_w_.push_back(R.root_to_weight(R.simple_root(i)));
    w0_word_ = longest_element(R).reduced_word(R);
    s_theta_word_ = reflection(R, R.theta).reduced_word(R);
    for (const auto& l : R.minuscule) omega_words_.push_back(ring_w_word(R, l));
}

// Adds c (e^l - q^{n qa} e^{l + n v}) / (1 - q^{qa} e^{v}) to out.
static void add_divided(GroupAlgebraElement& out, const RootSystemData& R, const Weight& l, const CoeffFraction& c,
                        int64_t n, const Weight& v, int64_t qa) {
    if (n > 0) {
        for (int64_t j = 0; j < n; ++j) out.add_term(add(l, v, j), qa ? c.mul_mono(q_power(R, j * qa)) : c);
    } else {
        for (int64_t j = 1; j <= -n; ++j) out.add_term(add(l, v, -j), -(qa ? c.mul_mono(q_power(R, -j * qa)) : c));
    }
}

GroupAlgebraElement PolyRep::hecke_step(const GroupAlgebraElement& f, Slot slot, const Weight& v, int64_t qa,
                                        const std::function<int64_t(const Weight&)>& pairing,
                                        bool inverse) const {
    GroupAlgebraElement out;
    ParamMonomial th = t_half_power(slot, 1);
    ParamPoly diff = half_difference(slot);
    for (const auto& [l, c] : f.terms()) {
        int64_t n = pairing(l);
        CoeffFraction cd = c.mul_poly(diff);
        CoeffFraction img = c.mul_mono(th);
        if (qa && n) img = img.mul_mono(q_power(R_, n * qa));
        out.add_term(add(l, v, n), img);
        add_divided(out, R_, l, cd, n, v, qa);
        if (inverse) out.add_term(l, -cd);
    }
    return out;
}

GroupAlgebraElement PolyRep::T(int i, const GroupAlgebraElement& f) const {
    Weight v = add(R_.zero_weight(), alpha_w_[i - 1], -1);
    return hecke_step(f, R_.simple_slot(i), v, 0, [i](const Weight& l) { return l[i - 1]; }, false);
}

GroupAlgebraElement PolyRep::T_inv(int i, const GroupAlgebraElement& f) const {
    Weight v = add(R_.zero_weight(), alpha_w_[i - 1], -1);
    return hecke_step(f, R_.simple_slot(i), v, 0, [i](const Weight& l) { return l[i - 1]; }, true);
}

GroupAlgebraElement PolyRep::T01(const GroupAlgebraElement& f) const {
    return hecke_step(f, Slot::ts, R_.theta_weight, 1,
                      [this](const Weight& l) { return -R_.pair_root_weight(R_.theta, l); }, false);
}

GroupAlgebraElement PolyRep::T01_inv(const GroupAlgebraElement& f) const {
    return hecke_step(f, Slot::ts, R_.theta_weight, 1,
                      [this](const Weight& l) { return -R_.pair_root_weight(R_.theta, l); }, true);
}

GroupAlgebraElement PolyRep::T02(const GroupAlgebraElement& f) const {
    return hecke_step(f, Slot::ts, R_.theta_weight, 1,
                      [this](const Weight& l) { return 1 - R_.pair_root_weight(R_.theta, l); }, false);
}

GroupAlgebraElement PolyRep::T03(const GroupAlgebraElement& f) const {
    return X(R_.theta_weight, T_finite_inv(s_theta_word_, f));
}

GroupAlgebraElement PolyRep::T03_inv(const GroupAlgebraElement& f) const {
    return T_finite(s_theta_word_, X(add(R_.zero_weight(), R_.theta_weight, -1), f));
}

GroupAlgebraElement PolyRep::TX(int i, const GroupAlgebraElement& f) const { return i == 0 ? T03(f) : T(i, f); }

GroupAlgebraElement PolyRep::TX_inv(int i, const GroupAlgebraElement& f) const {
    return i == 0 ? T03_inv(f) : T_inv(i, f);
}

GroupAlgebraElement PolyRep::X(const Weight& mu, const GroupAlgebraElement& f) const {
    return f.map_weights([&mu](const Weight& l) { return add(l, mu); });
}

static size_t minuscule_index(const RootSystemData& R, const Weight& lambda) {
    for (size_t k = 0; k < R.minuscule.size(); ++k)
        if (R.minuscule[k] == lambda) return k;
    throw std::invalid_argument("omega: weight " + render_weight(lambda) + " is not minuscule");
}

GroupAlgebraElement PolyRep::omega(const Weight& lambda, const GroupAlgebraElement& f) const {
    const auto& p = omega_words_[minuscule_index(R_, lambda)];
    GroupAlgebraElement g = f;
    for (auto it = p.rbegin(); it != p.rend(); ++it) g = T_inv(*it, g);
    return X(lambda, g);
}

GroupAlgebraElement PolyRep::omega_inv(const Weight& lambda, const GroupAlgebraElement& f) const {
    const auto& p = omega_words_[minuscule_index(R_, lambda)];
    GroupAlgebraElement g = X(add(R_.zero_weight(), lambda, -1), f);
    for (int a : p) g = T(a, g);
    return g;
}

GroupAlgebraElement PolyRep::Tw(const AffineWord& w, const GroupAlgebraElement& f) const {
    GroupAlgebraElement g = f;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) g = TX(*it, g);
    return omega(w.omega, g);
}

GroupAlgebraElement PolyRep::Tw_inv(const AffineWord& w, const GroupAlgebraElement& f) const {
    GroupAlgebraElement g = omega_inv(w.omega, f);
    for (int a : w.letters) g = TX_inv(a, g);
    return g;
}

GroupAlgebraElement PolyRep::Tw(const ExtendedWeylElement& w, const GroupAlgebraElement& f, bool inverse) const {
    AffineWord word = reduced_word(R_, w);
    return inverse ? Tw_inv(word, f) : Tw(word, f);
}

GroupAlgebraElement PolyRep::T_finite(const std::vector<int>& word, const GroupAlgebraElement& f) const {
    GroupAlgebraElement g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = T(*it, g);
    return g;
}

GroupAlgebraElement PolyRep::T_finite_inv(const std::vector<int>& word, const GroupAlgebraElement& f) const {
    GroupAlgebraElement g = f;
    for (int a : word) g = T_inv(a, g);
    return g;
}

GroupAlgebraElement PolyRep::T_dual(const AffineWord& w, const GroupAlgebraElement& f) const {
    GroupAlgebraElement g = omega(w.omega, f);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) g = TX_inv(*it, g);
    return g;
}

const std::pair<AffineWord, AffineWord>& PolyRep::y_words(const RootVec& mu) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = y_cache_.find(mu);
    if (it != y_cache_.end()) return it->second;

    Weight mw = R_.root_to_weight(mu);
    const int n = R_.rank;
    // search b = -sum m_j lambda_j in the root lattice with mu + b anti-dominant,
    // minimizing l(tau_a) + l(tau_b)
    for (int64_t bound = 0;; ++bound) {
        int64_t best = std::numeric_limits<int64_t>::max();
        Weight best_b;
        std::vector<int64_t> m(n, 0);
        while (true) {
            Weight b(n);
            bool ok = true;
            for (int j = 0; j < n; ++j) {
                b[j] = -m[j];
                if (mw[j] + b[j] > 0) ok = false;
            }
            if (ok && R_.weight_to_root(b)) {
                Weight a = add(mw, b);
                int64_t len = length(R_, ext_translation(R_, a)) + length(R_, ext_translation(R_, b));
                if (len < best) {
                    best = len;
                    best_b = b;
                }
            }
            int j = 0;
            while (j < n && m[j] == bound) m[j++] = 0;
            if (j == n) break;
            ++m[j];
        }
        if (!best_b.empty()) {
            Weight a = add(mw, best_b);
            auto res = y_cache_.emplace(
                mu, std::make_pair(reduced_word(R_, ext_translation(R_, a)), reduced_word(R_, ext_translation(R_, best_b))));
            return res.first->second;
        }
    }
}

GroupAlgebraElement PolyRep::Y(const RootVec& mu, const GroupAlgebraElement& f, bool reduce_steps) const {
    const auto& [wa, wb] = y_words(mu);
    GroupAlgebraElement g = f;
    auto tidy = [&] {
        if (reduce_steps) g = g.reduced();
    };
    for (int a : wb.letters) {
        g = a == 0 ? T01_inv(g) : T_inv(a, g);
        tidy();
    }
    for (auto it = wa.letters.rbegin(); it != wa.letters.rend(); ++it) {
        g = *it == 0 ? T01(g) : T(*it, g);
        tidy();
    }
    return g;
}

GroupAlgebraElement PolyRep::G(int i, const Weight& lambda, const GroupAlgebraElement& f) const {
    FiniteWeylElement rw = ring_w_element(R_, lambda);
    Slot s = R_.simple_slot(i);
    ParamPoly one_minus_tinv = ParamPoly(1) - ParamPoly::monomial(t_half_power(s, -2));
    if (i == 0) {
        int64_t a = 1 - R_.pair_root_weight(R_.theta, lambda);
        RootVec mt = R_.theta;
        for (auto& x : mt) x = -x;
        ParamMonomial Q = spectral_q(R_, mt, 1, lambda, rw).inverse();
        ParamMonomial qa = q_power(R_, -a);
        GroupAlgebraElement g =
            T02(f).scaled(CoeffFraction(ParamPoly::monomial(t_half_power(s, -1) * qa) -
                                        ParamPoly::monomial(t_half_power(s, -1) * Q * qa)));
        g += f.scaled(CoeffFraction(one_minus_tinv.mul_mono(Q * qa)));
        return g;
    }
    ParamMonomial Q = spectral_q(R_, R_.simple_root(i - 1), 0, lambda, rw).inverse();
    GroupAlgebraElement g = T(i, f).scaled(
        CoeffFraction(ParamPoly::monomial(t_half_power(s, -1)) - ParamPoly::monomial(t_half_power(s, -1) * Q)));
    g += f.scaled(CoeffFraction(one_minus_tinv.mul_mono(Q)));
    return g;
}

GroupAlgebraElement PolyRep::G_tilde0(const Weight& lambda, const GroupAlgebraElement& f) const {
    FiniteWeylElement rw = ring_w_element(R_, lambda);
    int64_t a = 1 - R_.pair_root_weight(R_.theta, lambda);
    ParamMonomial tt = spectral_t(R_, R_.theta, rw);
    ParamMonomial qa = q_power(R_, -a);
    ParamMonomial th = t_half_power(Slot::ts, -1);
    GroupAlgebraElement g =
        T03(f).scaled(CoeffFraction(ParamPoly::monomial(tt * th) - ParamPoly::monomial(qa * th)));
    g += f.scaled(CoeffFraction((ParamPoly(1) - ParamPoly::monomial(t_half_power(Slot::ts, -2))).mul_mono(qa)));
    return g;
}

GroupAlgebraElement PolyRep::I(int i, const Weight& lambda, const GroupAlgebraElement& f) const {
    if (i == 0) {
        // t0^{1/2} / (t - q^{-a}) = -q^a t0^{1/2} / (1 - q^a t)
        FiniteWeylElement rw = ring_w_element(R_, lambda);
        int64_t a = 1 - R_.pair_root_weight(R_.theta, lambda);
        ParamMonomial m = q_power(R_, a) * spectral_t(R_, R_.theta, rw);
        if (m.is_one()) throw ZeroNormalizer("I_0: vanishing normalizer at " + render_weight(lambda));
        CoeffFraction c(ParamPoly::monomial(q_power(R_, a) * t_half_power(Slot::ts, 1), -1), {m});
        return G_tilde0(lambda, f).scaled(c);
    }
    FiniteWeylElement rw = ring_w_element(R_, lambda);
    ParamMonomial Q = spectral_q(R_, R_.simple_root(i - 1), 0, lambda, rw).inverse();
    if (Q.is_one()) throw ZeroNormalizer("I_" + std::to_string(i) + ": vanishing normalizer at " + render_weight(lambda));
    CoeffFraction c(ParamPoly::monomial(t_simple_half(R_, i)), {Q});
    return G(i, lambda, f).scaled(c);
}

GroupAlgebraElement PolyRep::N(int i, const GroupAlgebraElement& f) const {
    GroupAlgebraElement out;
    Weight v = add(R_.zero_weight(), alpha_w_[i - 1], -1);
    for (const auto& [l, c] : f.terms()) add_divided(out, R_, l, -c, l[i - 1], v, 0);
    return out;
}

GroupAlgebraElement PolyRep::N_prime(int i, const GroupAlgebraElement& f) const { return N(i, f) + f; }

GroupAlgebraElement PolyRep::demazure(int i, const GroupAlgebraElement& f) const {
    GroupAlgebraElement out;
    Weight v = add(R_.zero_weight(), alpha_w_[i - 1], -1);
    for (const auto& [l, c] : f.terms()) {
        out.add_term(add(l, v, l[i - 1]), c);
        add_divided(out, R_, l, c, l[i - 1], v, 0);
    }
    return out;
}

GroupAlgebraElement PolyRep::N_word(const std::vector<int>& word, const GroupAlgebraElement& f) const {
    GroupAlgebraElement g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = N(*it, g);
    return g;
}

GroupAlgebraElement PolyRep::N_prime_word(const std::vector<int>& word, const GroupAlgebraElement& f) const {
    GroupAlgebraElement g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = N_prime(*it, g);
    return g;
}

GroupAlgebraElement PolyRep::demazure_word(const std::vector<int>& word, const GroupAlgebraElement& f) const {
    GroupAlgebraElement g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure(*it, g);
    return g;
}

GroupAlgebraElement PolyRep::act(const FiniteWeylElement& w, const GroupAlgebraElement& f) const {
    return f.map_weights([&w](const Weight& l) { return w.act(l); });
}

GroupAlgebraElement PolyRep::kappa(const GroupAlgebraElement& f) const {
    FiniteWeylElement w0 = longest_element(R_);
    GroupAlgebraElement g;
    for (const auto& [l, c] : f.terms()) g.add_term(w0.act(l), c.invert_params());
    return T_finite(w0_word_, g).scaled(CoeffFraction::monomial(chi_w0().inverse()));
}

GroupAlgebraElement PolyRep::varsigma(const GroupAlgebraElement& f) const {
    FiniteWeylElement w0 = longest_element(R_);
    return f.map_weights([&w0](const Weight& l) {
        Weight x = w0.act(l);
        for (auto& v : x) v = -v;
        return x;
    });
}

GroupAlgebraElement PolyRep::iota(const GroupAlgebraElement& f) const {
    return T_finite_inv(w0_word_, varsigma(f)).scaled(CoeffFraction::monomial(chi_w0()));
}

GroupAlgebraElement PolyRep::bar(const GroupAlgebraElement& f) const {
    GroupAlgebraElement g;
    for (const auto& [l, c] : f.terms()) {
        Weight x = l;
        for (auto& v : x) v = -v;
        g.add_term(x, c.invert_params());
    }
    return g;
}

}  // namespace nsmac
