#include "nsmac/coeffs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nsmac {

namespace {

int64_t checked_add(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

int64_t checked_mul(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// multiset helpers on sorted vectors
std::vector<ParamMonomial> multiset_max(const std::vector<ParamMonomial>& x,
                                        const std::vector<ParamMonomial>& y) {
    std::vector<ParamMonomial> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

std::vector<ParamMonomial> multiset_minus(const std::vector<ParamMonomial>& x,
                                          const std::vector<ParamMonomial>& y) {
    std::vector<ParamMonomial> out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

ParamPoly times_binomials(ParamPoly p, const std::vector<ParamMonomial>& fs) {
    for (const auto& f : fs) p = p.mul_binomial(f);
    return p;
}

}  // namespace

int64_t ParamMonomial::get(Slot s) const {
    switch (s) {
        case Slot::q: return qe;
        case Slot::ts: return ae;
        case Slot::tl: return be;
    }
    return 0;
}

void ParamMonomial::set(Slot s, int64_t v) {
    switch (s) {
        case Slot::q: qe = v; break;
        case Slot::ts: ae = v; break;
        case Slot::tl: be = v; break;
    }
}

ParamMonomial operator*(const ParamMonomial& x, const ParamMonomial& y) {
    return {checked_add(x.qe, y.qe), checked_add(x.ae, y.ae), checked_add(x.be, y.be)};
}

ParamMonomial ParamMonomial::pow(int64_t k) const {
    return {checked_mul(qe, k), checked_mul(ae, k), checked_mul(be, k)};
}

bool orient_binomial(ParamMonomial& m) {
    int64_t lead = m.qe != 0 ? m.qe : (m.ae != 0 ? m.ae : m.be);
    if (lead > 0) {
        m = m.inverse();
        return true;
    }
    return false;
}

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(long c) {
    if (c != 0) terms_.push_back({ParamMonomial{}, mpz_class(c)});
}

ParamPoly ParamPoly::monomial(const ParamMonomial& m, long c) {
    ParamPoly p;
    if (c != 0) p.terms_.push_back({m, mpz_class(c)});
    return p;
}

ParamPoly ParamPoly::from_terms(std::vector<ParamTerm> terms) {
    ParamPoly p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void ParamPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const ParamTerm& x, const ParamTerm& y) { return x.m < y.m; });
    std::vector<ParamTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    terms_ = std::move(out);
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

namespace {

std::vector<ParamTerm> merge_terms(const std::vector<ParamTerm>& x,
                                   const std::vector<ParamTerm>& y, int sign) {
    std::vector<ParamTerm> out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].m < y[j].m)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].m < x[i].m) {
            out.push_back({y[j].m, sign > 0 ? y[j].c : mpz_class(-y[j].c)});
            ++j;
        } else {
            mpz_class c = sign > 0 ? mpz_class(x[i].c + y[j].c) : mpz_class(x[i].c - y[j].c);
            if (c != 0) out.push_back({x[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    if (x.terms_.empty() || y.terms_.empty()) return {};
    if (x.terms_.size() == 1 && x.terms_[0].c == 1) return y.mul_mono(x.terms_[0].m);
    if (y.terms_.size() == 1 && y.terms_[0].c == 1) return x.mul_mono(y.terms_[0].m);
    std::vector<ParamTerm> prod;
    prod.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& a : x.terms_)
        for (const auto& b : y.terms_) prod.push_back({a.m * b.m, a.c * b.c});
    return ParamPoly::from_terms(std::move(prod));
}

ParamPoly ParamPoly::mul_mono(const ParamMonomial& m) const {
    ParamPoly p = *this;
    if (m.is_one()) return p;
    for (auto& t : p.terms_) t.m = t.m * m;  // order preserved: translation
    return p;
}

ParamPoly ParamPoly::mul_scalar(const mpz_class& c) const {
    if (c == 0) return {};
    ParamPoly p = *this;
    for (auto& t : p.terms_) t.c *= c;
    return p;
}

ParamPoly ParamPoly::mul_binomial(const ParamMonomial& m) const {
    return *this - mul_mono(m);
}

bool ParamPoly::operator==(const ParamPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

bool ParamPoly::divide_binomial(const ParamMonomial& m, ParamPoly* quotient) const {
    if (m.is_one()) throw DivisionByZero("division by 1 - 1");
    if (terms_.empty()) {
        if (quotient) *quotient = ParamPoly();
        return true;
    }
    Slot piv = m.qe != 0 ? Slot::q : (m.ae != 0 ? Slot::ts : Slot::tl);
    int64_t mp = m.get(piv);
    struct Item {
        ParamMonomial rep;
        int64_t k;
        const mpz_class* c;
    };
    std::vector<Item> items;
    items.reserve(terms_.size());
    for (const auto& t : terms_) {
        int64_t k = floor_div(t.m.get(piv), mp);
        items.push_back({t.m * m.pow(-k), k, &t.c});
    }
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        return x.rep < y.rep || (x.rep == y.rep && x.k < y.k);
    });
    std::vector<ParamTerm> out;
    size_t i = 0;
    while (i < items.size()) {
        size_t j = i;
        while (j < items.size() && items[j].rep == items[i].rep) ++j;
        mpz_class s = 0;
        size_t idx = i;
        for (int64_t k = items[i].k; k < items[j - 1].k; ++k) {
            if (idx < j && items[idx].k == k) s += *items[idx++].c;
            if (s != 0) out.push_back({items[i].rep * m.pow(k), s});
        }
        s += *items[j - 1].c;
        if (s != 0) return false;
        i = j;
    }
    if (quotient) *quotient = ParamPoly::from_terms(std::move(out));
    return true;
}

int64_t ParamPoly::min_exponent(Slot s) const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    int64_t v = terms_[0].m.get(s);
    for (const auto& t : terms_) v = std::min(v, t.m.get(s));
    return v;
}

int64_t ParamPoly::max_exponent(Slot s) const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    int64_t v = terms_[0].m.get(s);
    for (const auto& t : terms_) v = std::max(v, t.m.get(s));
    return v;
}

ParamPoly ParamPoly::coefficient_at(Slot s, int64_t e) const {
    std::vector<ParamTerm> out;
    for (const auto& t : terms_) {
        if (t.m.get(s) != e) continue;
        ParamMonomial m = t.m;
        m.set(s, 0);
        out.push_back({m, t.c});
    }
    return from_terms(std::move(out));
}

ParamPoly ParamPoly::eval_one(Slot s) const {
    std::vector<ParamTerm> out = terms_;
    for (auto& t : out) t.m.set(s, 0);
    return from_terms(std::move(out));
}

ParamPoly ParamPoly::invert_params() const {
    std::vector<ParamTerm> out = terms_;
    for (auto& t : out) t.m = t.m.inverse();
    return from_terms(std::move(out));
}

ParamPoly ParamPoly::merge_t() const {
    std::vector<ParamTerm> out = terms_;
    for (auto& t : out) {
        t.m.ae = checked_add(t.m.ae, t.m.be);
        t.m.be = 0;
    }
    return from_terms(std::move(out));
}

mpz_class ParamPoly::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) g = gcd(g, t.c);
    return g;
}

mpz_class ParamPoly::sum_coefficients() const {
    mpz_class s = 0;
    for (const auto& t : terms_) s += t.c;
    return s;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string render_exponent(int64_t num, int64_t den) {
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
    if (den == 1) return num == 1 ? "" : "^" + std::to_string(num);
    return "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::string render_monomial(const ParamMonomial& m, const RenderContext& ctx) {
    std::vector<std::string> parts;
    if (m.qe != 0) parts.push_back("q" + render_exponent(m.qe, ctx.m_star));
    if (ctx.simply_laced) {
        int64_t e = m.ae + m.be;
        if (e != 0) parts.push_back("t" + render_exponent(e, 2));
    } else {
        if (m.ae != 0) parts.push_back("ts" + render_exponent(m.ae, 2));
        if (m.be != 0) parts.push_back("tl" + render_exponent(m.be, 2));
    }
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
    return s;
}

std::string render_poly(const ParamPoly& p, const RenderContext& ctx) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const auto& ts = p.terms();
    bool first = true;
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        mpz_class c = it->c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mono = render_monomial(it->m, ctx);
        if (mono.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << mono;
        } else {
            os << c.get_str() << " " << mono;
        }
    }
    return os.str();
}

// ------------------------------------------------------------ CoeffFraction

CoeffFraction::CoeffFraction(ParamPoly num, std::vector<ParamMonomial> den) : num_(std::move(num)) {
    for (auto& m : den) {
        if (m.is_one()) throw DivisionByZero("denominator factor 1 - 1");
        if (orient_binomial(m)) num_ = -num_.mul_mono(m);  // 1/(1-u) = -u^{-1}/(1-u^{-1})
        den_.push_back(m);
    }
    std::sort(den_.begin(), den_.end());
    if (num_.is_zero()) den_.clear();
}

CoeffFraction CoeffFraction::monomial(const ParamMonomial& m, long c) {
    return CoeffFraction(ParamPoly::monomial(m, c));
}

CoeffFraction CoeffFraction::operator-() const {
    CoeffFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

CoeffFraction& CoeffFraction::operator+=(const CoeffFraction& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        auto l = multiset_max(den_, o.den_);
        num_ = times_binomials(num_, multiset_minus(l, den_)) +
               times_binomials(o.num_, multiset_minus(l, o.den_));
        den_ = std::move(l);
    }
    if (num_.is_zero()) den_.clear();
    return *this;
}

CoeffFraction& CoeffFraction::operator-=(const CoeffFraction& o) { return *this += -o; }

CoeffFraction& CoeffFraction::operator*=(const CoeffFraction& o) {
    if (num_.is_zero() || o.num_.is_zero()) return *this = CoeffFraction();
    num_ = num_ * o.num_;
    if (!o.den_.empty()) {
        std::vector<ParamMonomial> d;
        std::merge(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(), std::back_inserter(d));
        den_ = std::move(d);
    }
    return *this;
}

CoeffFraction CoeffFraction::mul_mono(const ParamMonomial& m) const {
    CoeffFraction r = *this;
    r.num_ = r.num_.mul_mono(m);
    return r;
}

CoeffFraction CoeffFraction::mul_poly(const ParamPoly& p) const {
    CoeffFraction r = *this;
    r.num_ = r.num_ * p;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

CoeffFraction CoeffFraction::inv() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of zero");
    ParamPoly back = times_binomials(ParamPoly(1), den_);
    const auto& ts = num_.terms();
    if (ts.size() == 1) {
        if (ts[0].c != 1 && ts[0].c != -1) throw DivisionByZero("non-unit integer coefficient");
        ParamPoly p = back.mul_mono(ts[0].m.inverse());
        if (ts[0].c < 0) p = -p;
        return CoeffFraction(p);
    }
    if (ts.size() == 2 && ts[0].c == -ts[1].c && (ts[0].c == 1 || ts[0].c == -1)) {
        // c m1 + (-c) m2 = c m1 (1 - m2/m1)
        ParamMonomial u = ts[1].m * ts[0].m.inverse();
        ParamPoly p = back.mul_mono(ts[0].m.inverse());
        if (ts[0].c < 0) p = -p;
        CoeffFraction r(p, {u});
        r.reduce();
        return r;
    }
    throw DivisionByZero("denominator is not a product of binomials");
}

bool CoeffFraction::operator==(const CoeffFraction& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    auto l = multiset_max(den_, o.den_);
    return times_binomials(num_, multiset_minus(l, den_)) ==
           times_binomials(o.num_, multiset_minus(l, o.den_));
}

void CoeffFraction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::vector<ParamMonomial> keep;
    ParamPoly q;
    for (const auto& f : den_) {
        if (num_.divide_binomial(f, &q)) {
            num_ = std::move(q);
        } else {
            keep.push_back(f);
        }
    }
    den_ = std::move(keep);
}

CoeffFraction CoeffFraction::reduced() const {
    CoeffFraction r = *this;
    r.reduce();
    return r;
}

CoeffFraction CoeffFraction::invert_params() const {
    // 1/(1 - m^{-1}) = -m/(1 - m)
    CoeffFraction r;
    r.num_ = num_.invert_params();
    for (const auto& m : den_) r.num_ = -r.num_.mul_mono(m);
    r.den_ = den_;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

CoeffFraction CoeffFraction::limit_at_zero(Slot s, int dir) const {
    if (dir != 1 && dir != -1) throw std::invalid_argument("limit direction must be +1 or -1");
    if (num_.is_zero()) return {};
    auto ord = [&](const ParamMonomial& m) { return dir * m.get(s); };
    int64_t on = ord(num_.terms()[0].m);
    for (const auto& t : num_.terms()) on = std::min(on, ord(t.m));
    int64_t od = 0;
    for (const auto& m : den_) od += std::min<int64_t>(0, ord(m));
    if (on < od) throw PoleAtLimit("coefficient has a pole at the requested limit");
    if (on > od) return {};
    std::vector<ParamTerm> lead;
    for (const auto& t : num_.terms()) {
        if (ord(t.m) != on) continue;
        ParamMonomial m = t.m;
        m.set(s, 0);
        lead.push_back({m, t.c});
    }
    ParamPoly num = ParamPoly::from_terms(std::move(lead));
    std::vector<ParamMonomial> den;
    for (const auto& m : den_) {
        int64_t o = ord(m);
        if (o > 0) continue;
        if (o == 0) {
            den.push_back(m);
            continue;
        }
        ParamMonomial rest = m;
        rest.set(s, 0);
        num = -num.mul_mono(rest.inverse());
    }
    CoeffFraction r(num, den);
    r.reduce();
    return r;
}

CoeffFraction CoeffFraction::eval_one(Slot s) const {
    CoeffFraction red = reduced();
    ParamPoly num = red.num_.eval_one(s);
    std::vector<ParamMonomial> den;
    for (auto m : red.den_) {
        m.set(s, 0);
        if (m.is_one()) throw PoleAtLimit("denominator vanishes at 1");
        den.push_back(m);
    }
    CoeffFraction r(num, den);
    r.reduce();
    return r;
}

CoeffFraction CoeffFraction::merge_t() const {
    CoeffFraction red = reduced();
    ParamPoly num = red.num_.merge_t();
    std::vector<ParamMonomial> den;
    for (auto m : red.den_) {
        m.ae += m.be;
        m.be = 0;
        if (m.is_one()) throw PoleAtLimit("denominator vanishes at equal parameters");
        den.push_back(m);
    }
    CoeffFraction r(num, den);
    r.reduce();
    return r;
}

bool CoeffFraction::is_polynomial_in(const std::vector<Var>& vars, int64_t m_star) const {
    CoeffFraction r = reduced();
    if (!r.den_.empty()) return false;
    // per slot: lattice step allowed in the positive / negative direction
    int64_t pos[3] = {0, 0, 0}, neg[3] = {0, 0, 0};
    auto allow = [](int64_t& g, int64_t step) { g = std::gcd(g, step); };
    for (Var v : vars) {
        switch (v) {
            case Var::q: allow(pos[0], m_star); break;
            case Var::q_inv: allow(neg[0], m_star); break;
            case Var::q_frac: allow(pos[0], 1); break;
            case Var::q_frac_inv: allow(neg[0], 1); break;
            case Var::ts: allow(pos[1], 2); break;
            case Var::ts_inv: allow(neg[1], 2); break;
            case Var::ts_half: allow(pos[1], 1); break;
            case Var::ts_half_inv: allow(neg[1], 1); break;
            case Var::tl: allow(pos[2], 2); break;
            case Var::tl_inv: allow(neg[2], 2); break;
            case Var::tl_half: allow(pos[2], 1); break;
            case Var::tl_half_inv: allow(neg[2], 1); break;
        }
    }
    for (const auto& t : r.num_.terms()) {
        int64_t e[3] = {t.m.qe, t.m.ae, t.m.be};
        for (int k = 0; k < 3; ++k) {
            if (e[k] == 0) continue;
            int64_t step = e[k] > 0 ? pos[k] : neg[k];
            if (step == 0 || e[k] % step != 0) return false;
        }
    }
    return true;
}

std::string CoeffFraction::str(const RenderContext& ctx) const {
    CoeffFraction r = reduced();
    if (r.den_.empty()) return render_poly(r.num_, ctx);
    std::string num = render_poly(r.num_, ctx);
    if (r.num_.size() > 1) num = "(" + num + ")";
    std::vector<std::string> fs;
    for (size_t i = 0; i < r.den_.size();) {
        size_t j = i;
        while (j < r.den_.size() && r.den_[j] == r.den_[i]) ++j;
        std::string f = "(" + render_poly(ParamPoly(1) - ParamPoly::monomial(r.den_[i]), ctx) + ")";
        if (j - i > 1) f += "^" + std::to_string(j - i);
        fs.push_back(f);
        i = j;
    }
    std::string den;
    for (const auto& f : fs) den += f;
    if (fs.size() > 1) den = "(" + den + ")";
    return num + "/" + den;
}

}  // namespace nsmac
