#include "nsmac/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace nsmac {

namespace {

using Matrix = std::vector<std::vector<int64_t>>;

Matrix cartan_matrix(char type, int n) {
    Matrix a(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;  // alpha_n short
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;  // alpha_n long
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;  // alpha_3 short
            break;
        case 'G':
            a[0][1] = -3;  // alpha_1 short
            a[1][0] = -1;
            break;
        default:
            break;
    }
    return a;
}

bool valid_type(char type, int n) {
    if (n < 1 || n > 8) return false;
    switch (type) {
        case 'A': return true;
        case 'B': return n >= 2;
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<Rational>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Rational>> a = m, inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational s = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] /= s;
            inv[c][j] /= s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

RootSystemData build_root_system(char type, int n) {
    if (!valid_type(type, n))
        throw UnsupportedType("unsupported root system " + std::string(1, type) + std::to_string(n));
    RootSystemData R;
    R.type = type;
    R.rank = n;
    R.cartan = cartan_matrix(type, n);

    // symmetrize: d_i A_ij = d_j A_ji
    std::vector<Rational> dr(n, 0);
    dr[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || R.cartan[i][j] == 0 || dr[j] != 0) continue;
            dr[j] = dr[i] * R.cartan[i][j] / R.cartan[j][i];
            queue.push_back(j);
        }
    }
    Rational mn = *std::min_element(dr.begin(), dr.end());
    R.d.resize(n);
    for (int i = 0; i < n; ++i) {
        Rational v = dr[i] / mn;
        R.d[i] = v.get_num().get_si();
    }

    // positive roots by closure under simple reflections
    std::set<RootVec> seen;
    std::deque<RootVec> todo;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        RootVec b = todo.front();
        todo.pop_front();
        for (int i = 0; i < n; ++i) {
            RootVec c = R.reflect_root(i, b);
            if (!RootSystemData::is_positive(c) || seen.count(c)) continue;
            seen.insert(c);
            todo.push_back(c);
        }
    }
    R.positive_roots.assign(seen.begin(), seen.end());
    std::stable_sort(R.positive_roots.begin(), R.positive_roots.end(),
                     [](const RootVec& x, const RootVec& y) {
                         return RootSystemData::height(x) < RootSystemData::height(y);
                     });
    for (size_t k = 0; k < R.positive_roots.size(); ++k) {
        R.root_index_[R.positive_roots[k]] = static_cast<int>(k);
        RootVec neg = R.positive_roots[k];
        for (auto& x : neg) x = -x;
        R.root_index_[neg] = -1 - static_cast<int>(k);
    }

    R.r = *std::max_element(R.d.begin(), R.d.end());
    for (auto it = R.positive_roots.rbegin(); it != R.positive_roots.rend(); ++it) {
        if (!R.is_long(*it)) {
            R.theta = *it;
            break;
        }
    }
    R.theta_weight = R.root_to_weight(R.theta);

    // lambda_j = sum_i M[j][i] alpha_i with M = (A^T)^{-1}
    std::vector<std::vector<Rational>> at(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at[i][j] = R.cartan[j][i];
    R.fundamental_weights = inverse(at);
    R.weight_gram.assign(n, std::vector<Rational>(n, 0));
    R.m_star = 1;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            R.weight_gram[j][k] = R.fundamental_weights[j][k] * R.d[k];
            R.m_star = std::lcm(R.m_star, R.weight_gram[j][k].get_den().get_si());
        }
    }
    R.m_literal = 1;  // (alpha_j, lambda_k) = d_j delta_jk

    R.minuscule.push_back(R.zero_weight());
    for (int i = 0; i < n; ++i) {
        Weight l = R.zero_weight();
        l[i] = 1;
        if (R.pair_root_weight(R.theta, l) <= 1) R.minuscule.push_back(l);
    }
    return R;
}

RootSystemData build_root_system(const std::string& name) {
    if (name.size() < 2) throw UnsupportedType("bad system name '" + name + "'");
    int n = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw UnsupportedType("bad system name '" + name + "'");
        n = n * 10 + (name[i] - '0');
        if (n > 100) throw UnsupportedType("bad system name '" + name + "'");
    }
    return build_root_system(static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))), n);
}

int64_t RootSystemData::pair_roots(const RootVec& a, const RootVec& b) const {
    int64_t s = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j) s += a[i] * b[j] * d[i] * cartan[i][j];
    }
    return s;
}

int64_t RootSystemData::pair_root_weight(const RootVec& a, const Weight& l) const {
    int64_t s = 0;
    for (int i = 0; i < rank; ++i) s += a[i] * l[i] * d[i];
    return s;
}

Rational RootSystemData::pair_weights(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (int j = 0; j < rank; ++j) {
        if (a[j] == 0) continue;
        for (int k = 0; k < rank; ++k)
            if (b[k] != 0) s += weight_gram[j][k] * (a[j] * b[k]);
    }
    return s;
}

int64_t RootSystemData::coroot_pairing(const Weight& l, const RootVec& beta) const {
    return 2 * pair_root_weight(beta, l) / root_sq(beta);
}

Slot RootSystemData::simple_slot(int i) const {
    if (i == 0) return Slot::ts;
    return d[i - 1] > 1 ? Slot::tl : Slot::ts;
}

bool RootSystemData::is_root(const RootVec& beta) const { return root_index_.count(beta) > 0; }

bool RootSystemData::is_positive(const RootVec& beta) {
    bool any = false;
    for (auto x : beta) {
        if (x < 0) return false;
        if (x > 0) any = true;
    }
    return any;
}

int64_t RootSystemData::height(const RootVec& beta) {
    return std::accumulate(beta.begin(), beta.end(), int64_t{0});
}

Weight RootSystemData::root_to_weight(const RootVec& beta) const {
    Weight c(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c[i] += cartan[i][j] * beta[j];
    return c;
}

std::vector<Rational> RootSystemData::weight_root_coords(const Weight& l) const {
    std::vector<Rational> out(rank, 0);
    for (int j = 0; j < rank; ++j) {
        if (l[j] == 0) continue;
        for (int i = 0; i < rank; ++i) out[i] += fundamental_weights[j][i] * l[j];
    }
    return out;
}

std::optional<RootVec> RootSystemData::weight_to_root(const Weight& l) const {
    RootVec out(rank);
    auto c = weight_root_coords(l);
    for (int i = 0; i < rank; ++i) {
        if (c[i].get_den() != 1) return std::nullopt;
        out[i] = c[i].get_num().get_si();
    }
    return out;
}

RootVec RootSystemData::simple_root(int i) const {
    RootVec e(rank, 0);
    e[i] = 1;
    return e;
}

RootVec RootSystemData::reflect_root(int i, const RootVec& beta) const {
    int64_t p = 0;
    for (int j = 0; j < rank; ++j) p += cartan[i][j] * beta[j];
    RootVec out = beta;
    out[i] -= p;
    return out;
}

Weight RootSystemData::reflect_weight(int i, const Weight& l) const {
    Weight out = l;
    for (int j = 0; j < rank; ++j) out[j] -= l[i] * cartan[j][i];
    return out;
}

bool RootSystemData::is_dominant(const Weight& l) {
    return std::all_of(l.begin(), l.end(), [](int64_t x) { return x >= 0; });
}

bool RootSystemData::is_antidominant(const Weight& l) {
    return std::all_of(l.begin(), l.end(), [](int64_t x) { return x <= 0; });
}

bool RootSystemData::is_affine_root(const AffineRoot& a) const {
    if (!is_root(a.beta)) return false;
    return !is_long(a.beta) || a.k % r == 0;
}

bool RootSystemData::is_positive(const AffineRoot& a) {
    return is_positive(a.beta) ? a.k >= 0 : a.k > 0;
}

int64_t RootSystemData::pair_affine(const AffineRoot& a, const Weight& l) const {
    return pair_root_weight(a.beta, l) + a.k;
}

AffineRoot RootSystemData::affine_simple_root(int i) const {
    if (i == 0) {
        RootVec b = theta;
        for (auto& x : b) x = -x;
        return {b, 1};
    }
    return {simple_root(i - 1), 0};
}

std::vector<AffineRoot> RootSystemData::affine_roots_negative_on(const Weight& l) const {
    std::vector<AffineRoot> out;
    for (const auto& pos : positive_roots) {
        RootVec neg = pos;
        for (auto& x : neg) x = -x;
        int64_t step = is_long(pos) ? r : 1;
        auto scan = [&](const RootVec& b, int64_t kmin) {
            int64_t p = pair_root_weight(b, l);
            kmin = (kmin + step - 1) / step * step;
            for (int64_t k = kmin; p + k < 0; k += step) out.push_back({b, k});
        };
        scan(pos, 0);
        scan(neg, 1);
    }
    std::sort(out.begin(), out.end(), [](const AffineRoot& x, const AffineRoot& y) {
        return x.k != y.k ? x.k < y.k : x.beta < y.beta;
    });
    return out;
}

std::string render_weight(const Weight& l) {
    std::string s = "[";
    for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + "]";
}

}  // namespace nsmac
