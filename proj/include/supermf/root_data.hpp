#pragma once

// Root-system data in the fundamental-weight basis (Bourbaki numbering):
// Cartan matrices, positive roots, the invariant form, Weyl dimension
// formula, and the partition <-> dominant weight dictionaries for the
// classical families.

#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supermf/partition.hpp"

namespace supermf {

using WeightVec = std::vector<int>;

enum class Family { A, B, C, D, G2, E6, E7 };

struct GroupType {
    Family family;
    int rank;

    auto operator<=>(const GroupType&) const = default;
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::G2: return "G2";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    return "?";
}

inline std::string to_string(const GroupType& g) {
    switch (g.family) {
        case Family::G2:
        case Family::E6:
        case Family::E7: return family_name(g.family);
        default: return family_name(g.family) + std::to_string(g.rank);
    }
}

inline GroupType make_group(Family f, int rank) {
    switch (f) {
        case Family::A:
        case Family::B:
        case Family::C:
            if (rank < 1) throw std::invalid_argument("rank must be >= 1");
            break;
        case Family::D:
            if (rank < 3) throw std::invalid_argument("type D requires rank >= 3");
            break;
        case Family::G2: rank = 2; break;
        case Family::E6: rank = 6; break;
        case Family::E7: rank = 7; break;
    }
    return GroupType{f, rank};
}

namespace detail {

struct Fraction {
    long long num = 0, den = 1;

    static long long gcd(long long a, long long b) {
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }
    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    Fraction() = default;
    Fraction(long long n, long long d = 1) : num(n), den(d) { reduce(); }
    Fraction operator+(const Fraction& o) const { return Fraction(num * o.den + o.num * den, den * o.den); }
    Fraction operator-(const Fraction& o) const { return Fraction(num * o.den - o.num * den, den * o.den); }
    Fraction operator*(const Fraction& o) const { return Fraction(num * o.num, den * o.den); }
    Fraction operator/(const Fraction& o) const { return Fraction(num * o.den, den * o.num); }
    bool is_zero() const { return num == 0; }
};

inline std::vector<std::vector<Fraction>> invert_matrix(std::vector<std::vector<Fraction>> m) {
    std::size_t n = m.size();
    std::vector<std::vector<Fraction>> inv(n, std::vector<Fraction>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Fraction(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("singular Cartan matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Fraction p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Fraction f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] = m[r][j] - f * m[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace detail

// Static tables for one simple group, all in fundamental-weight coordinates.
struct RootSystem {
    GroupType group;
    int rank;
    std::vector<std::vector<int>> cartan;        // row i = alpha_i in fund coords
    std::vector<WeightVec> positive_roots;
    std::vector<long long> symmetrizer;          // d_i, proportional to (alpha_i, alpha_i)
    std::vector<std::vector<long long>> form;    // (omega_i, omega_j) * form_den
    long long form_den = 1;
    std::vector<std::vector<long long>> root_coords;  // (C^T)^{-1} * root_coords_den
    long long root_coords_den = 1;
    std::vector<int> dual_perm;                  // -w0 as a permutation of coordinates
    WeightVec rho;

    // Scaled invariant form; all uses are ratios, so the scale cancels.
    long long dot(const WeightVec& u, const WeightVec& v) const {
        long long s = 0;
        for (int i = 0; i < rank; ++i) {
            if (u[static_cast<std::size_t>(i)] == 0) continue;
            long long row = 0;
            for (int j = 0; j < rank; ++j)
                row += form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       v[static_cast<std::size_t>(j)];
            s += u[static_cast<std::size_t>(i)] * row;
        }
        return s;
    }

    long long norm_shifted(const WeightVec& w) const {
        WeightVec s(w);
        for (int i = 0; i < rank; ++i) s[static_cast<std::size_t>(i)] += 1;
        return dot(s, s);
    }

    // True iff x lies in the nonnegative integer span of the simple roots.
    bool in_positive_root_cone(const WeightVec& x) const {
        for (int i = 0; i < rank; ++i) {
            long long y = 0;
            for (int j = 0; j < rank; ++j)
                y += root_coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     x[static_cast<std::size_t>(j)];
            if (y < 0 || y % root_coords_den != 0) return false;
        }
        return true;
    }
};

namespace detail {

inline std::vector<std::vector<int>> build_cartan(const GroupType& g) {
    int n = g.rank;
    std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto set_edge = [&](int i, int j) {
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
    };
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    switch (g.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) set_edge(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) set_edge(i, i + 1);
            if (n >= 2) c[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) set_edge(i, i + 1);
            if (n >= 2) c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) set_edge(i, i + 1);
            set_edge(n - 3, n - 1);
            break;
        case Family::G2:
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        case Family::E6: {
            int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
            for (auto& e : edges) set_edge(e[0], e[1]);
            break;
        }
        case Family::E7: {
            int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};
            for (auto& e : edges) set_edge(e[0], e[1]);
            break;
        }
    }
    return c;
}

inline std::vector<long long> build_symmetrizer(const GroupType& g) {
    int n = g.rank;
    std::vector<long long> d(static_cast<std::size_t>(n), 1);
    switch (g.family) {
        case Family::B:
            if (n >= 2) {
                for (int i = 0; i + 1 < n; ++i) d[static_cast<std::size_t>(i)] = 2;
                d[static_cast<std::size_t>(n - 1)] = 1;
            }
            break;
        case Family::C:
            if (n >= 2) d[static_cast<std::size_t>(n - 1)] = 2;
            break;
        case Family::G2:
            d[0] = 1;
            d[1] = 3;
            break;
        default: break;
    }
    return d;
}

inline std::vector<int> build_dual_perm(const GroupType& g) {
    int n = g.rank;
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    switch (g.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
            break;
        case Family::D:
            if (n % 2 == 1) std::swap(p[static_cast<std::size_t>(n - 2)], p[static_cast<std::size_t>(n - 1)]);
            break;
        case Family::E6:
            p = {5, 1, 4, 3, 2, 0};
            break;
        default: break;
    }
    return p;
}

inline std::shared_ptr<const RootSystem> build_root_system(const GroupType& g) {
    auto rs = std::make_shared<RootSystem>();
    rs->group = g;
    rs->rank = g.rank;
    rs->cartan = build_cartan(g);
    rs->symmetrizer = build_symmetrizer(g);
    rs->dual_perm = build_dual_perm(g);
    rs->rho.assign(static_cast<std::size_t>(g.rank), 1);

    // positive roots by height: beta + alpha_i is a root iff the downward
    // string length p satisfies p >= <beta, alpha_i^vee> + 1.
    std::map<WeightVec, int> seen;
    std::vector<WeightVec> level;
    for (int i = 0; i < g.rank; ++i) {
        WeightVec a(rs->cartan[static_cast<std::size_t>(i)].begin(),
                    rs->cartan[static_cast<std::size_t>(i)].end());
        seen.emplace(a, 1);
        level.push_back(a);
    }
    while (!level.empty()) {
        std::vector<WeightVec> next;
        for (const auto& beta : level) {
            for (int i = 0; i < g.rank; ++i) {
                WeightVec down = beta;
                int p = 0;
                while (true) {
                    for (int j = 0; j < g.rank; ++j)
                        down[static_cast<std::size_t>(j)] -=
                            rs->cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (seen.count(down)) ++p;
                    else break;
                }
                if (p < beta[static_cast<std::size_t>(i)] + 1) continue;
                WeightVec up = beta;
                for (int j = 0; j < g.rank; ++j)
                    up[static_cast<std::size_t>(j)] +=
                        rs->cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (seen.emplace(up, 1).second) next.push_back(up);
            }
        }
        level = std::move(next);
    }
    for (const auto& [root, tag] : seen) rs->positive_roots.push_back(root);

    // invariant form (omega_i, omega_j) = (C^{-1} D)_{ij}, exact
    int n = g.rank;
    std::vector<std::vector<detail::Fraction>> cf(static_cast<std::size_t>(n),
                                                  std::vector<detail::Fraction>(static_cast<std::size_t>(n)));
    std::vector<std::vector<detail::Fraction>> ctf = cf;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cf[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                detail::Fraction(rs->cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            ctf[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                detail::Fraction(rs->cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        }
    auto cinv = detail::invert_matrix(cf);
    auto ctinv = detail::invert_matrix(ctf);

    long long den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto v = cinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     detail::Fraction(rs->symmetrizer[static_cast<std::size_t>(j)]);
            den = std::lcm(den, v.den);
        }
    rs->form_den = den;
    rs->form.assign(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto v = cinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     detail::Fraction(rs->symmetrizer[static_cast<std::size_t>(j)]);
            rs->form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.num * (den / v.den);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            assert(rs->form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                   rs->form[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);

    long long cden = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cden = std::lcm(cden, ctinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].den);
    rs->root_coords_den = cden;
    rs->root_coords.assign(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto v = ctinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            rs->root_coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.num * (cden / v.den);
        }
    return rs;
}

}  // namespace detail

inline const RootSystem& root_system(const GroupType& g) {
    static std::map<GroupType, std::shared_ptr<const RootSystem>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, detail::build_root_system(g)).first;
    return *it->second;
}

// Applies simple reflections until all coordinates are nonnegative.
inline WeightVec dominant_rep(const RootSystem& rs, WeightVec w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rs.rank; ++i) {
            int wi = w[static_cast<std::size_t>(i)];
            if (wi < 0) {
                for (int j = 0; j < rs.rank; ++j)
                    w[static_cast<std::size_t>(j)] -=
                        wi * rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                changed = true;
            }
        }
    }
    return w;
}

inline bool is_dominant(const WeightVec& w) {
    for (int v : w)
        if (v < 0) return false;
    return true;
}

inline WeightVec dual_weight(const GroupType& g, const WeightVec& w) {
    const RootSystem& rs = root_system(g);
    WeightVec out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[static_cast<std::size_t>(rs.dual_perm[i])] = w[i];
    return out;
}

namespace detail {

// Exact product of small positive integers divided by small positive
// integers, via shared prime factorization.
class FactoredRatio {
public:
    void multiply(long long v, int exp) {
        for (long long p = 2; p * p <= v; ++p) {
            while (v % p == 0) {
                exps_[p] += exp;
                v /= p;
            }
        }
        if (v > 1) exps_[v] += exp;
    }
    unsigned long long value() const {
        unsigned long long r = 1;
        for (const auto& [p, e] : exps_) {
            if (e < 0) throw std::logic_error("non-integer dimension product");
            for (int k = 0; k < e; ++k) {
                if (r > (1ULL << 62) / static_cast<unsigned long long>(p))
                    throw std::overflow_error("dimension overflow");
                r *= static_cast<unsigned long long>(p);
            }
        }
        return r;
    }

private:
    std::map<long long, int> exps_;
};

}  // namespace detail

// Weyl dimension formula, exact.
inline long long dimension(const GroupType& g, const WeightVec& w) {
    const RootSystem& rs = root_system(g);
    if (static_cast<int>(w.size()) != rs.rank)
        throw std::invalid_argument("weight length != rank");
    if (!is_dominant(w)) throw std::invalid_argument("weight not dominant");
    WeightVec shifted = w;
    for (int i = 0; i < rs.rank; ++i) shifted[static_cast<std::size_t>(i)] += 1;
    detail::FactoredRatio prod;
    for (const auto& alpha : rs.positive_roots) {
        prod.multiply(rs.dot(shifted, alpha), 1);
        prod.multiply(rs.dot(rs.rho, alpha), -1);
    }
    return static_cast<long long>(prod.value());
}

enum class LabelFlavor { Gl, So, Sp };

// Partition label -> dominant weight under the standard epsilon-coordinate
// dictionaries. Type A performs the SL reduction when the partition has
// rank+1 rows.
inline WeightVec partition_to_weight(const GroupType& g, const Partition& p, LabelFlavor flavor) {
    int n = g.rank;
    auto part = [&](int i) { return p.row(i); };
    switch (g.family) {
        case Family::A: {
            if (flavor != LabelFlavor::Gl) throw std::invalid_argument("type A takes gl labels");
            std::vector<int> parts(p.parts());
            if (p.length() > n + 1) throw std::invalid_argument("partition too long for rank");
            if (p.length() == n + 1) {
                int last = parts.back();
                for (int& v : parts) v -= last;
            }
            WeightVec w(static_cast<std::size_t>(n), 0);
            auto get = [&](int i) {
                return i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0;
            };
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = get(i) - get(i + 1);
            return w;
        }
        case Family::B: {
            if (flavor != LabelFlavor::So) throw std::invalid_argument("type B takes so labels");
            if (p.length() > n) throw std::invalid_argument("partition too long for rank");
            WeightVec w(static_cast<std::size_t>(n), 0);
            for (int i = 0; i + 1 < n; ++i) w[static_cast<std::size_t>(i)] = part(i) - part(i + 1);
            w[static_cast<std::size_t>(n - 1)] = 2 * part(n - 1);
            return w;
        }
        case Family::C: {
            if (flavor != LabelFlavor::Sp) throw std::invalid_argument("type C takes sp labels");
            if (p.length() > n) throw std::invalid_argument("partition too long for rank");
            WeightVec w(static_cast<std::size_t>(n), 0);
            for (int i = 0; i + 1 < n; ++i) w[static_cast<std::size_t>(i)] = part(i) - part(i + 1);
            w[static_cast<std::size_t>(n - 1)] = part(n - 1);
            return w;
        }
        case Family::D: {
            if (flavor != LabelFlavor::So) throw std::invalid_argument("type D takes so labels");
            if (p.length() > n) throw std::invalid_argument("partition too long for rank");
            WeightVec w(static_cast<std::size_t>(n), 0);
            for (int i = 0; i + 2 < n; ++i) w[static_cast<std::size_t>(i)] = part(i) - part(i + 1);
            w[static_cast<std::size_t>(n - 2)] = part(n - 2) - part(n - 1);
            w[static_cast<std::size_t>(n - 1)] = part(n - 2) + part(n - 1);
            return w;
        }
        default:
            throw std::invalid_argument("partition labels apply to classical families only");
    }
}

// Inverse dictionary where it exists (non-spin weights); nullopt otherwise.
inline std::optional<Partition> weight_to_partition(const GroupType& g, const WeightVec& w,
                                                    LabelFlavor flavor) {
    int n = g.rank;
    std::vector<int> lam;
    switch (g.family) {
        case Family::A: {
            if (flavor != LabelFlavor::Gl) return std::nullopt;
            lam.assign(static_cast<std::size_t>(n + 1), 0);
            for (int i = n - 1; i >= 0; --i)
                lam[static_cast<std::size_t>(i)] =
                    lam[static_cast<std::size_t>(i + 1)] + w[static_cast<std::size_t>(i)];
            return Partition(std::move(lam));
        }
        case Family::B: {
            if (flavor != LabelFlavor::So) return std::nullopt;
            if (w[static_cast<std::size_t>(n - 1)] % 2 != 0) return std::nullopt;  // spin label
            lam.assign(static_cast<std::size_t>(n), 0);
            lam[static_cast<std::size_t>(n - 1)] = w[static_cast<std::size_t>(n - 1)] / 2;
            for (int i = n - 2; i >= 0; --i)
                lam[static_cast<std::size_t>(i)] =
                    lam[static_cast<std::size_t>(i + 1)] + w[static_cast<std::size_t>(i)];
            return Partition(std::move(lam));
        }
        case Family::C: {
            if (flavor != LabelFlavor::Sp) return std::nullopt;
            lam.assign(static_cast<std::size_t>(n), 0);
            lam[static_cast<std::size_t>(n - 1)] = w[static_cast<std::size_t>(n - 1)];
            for (int i = n - 2; i >= 0; --i)
                lam[static_cast<std::size_t>(i)] =
                    lam[static_cast<std::size_t>(i + 1)] + w[static_cast<std::size_t>(i)];
            return Partition(std::move(lam));
        }
        case Family::D: {
            if (flavor != LabelFlavor::So) return std::nullopt;
            int sum = w[static_cast<std::size_t>(n - 2)] + w[static_cast<std::size_t>(n - 1)];
            int diff = w[static_cast<std::size_t>(n - 1)] - w[static_cast<std::size_t>(n - 2)];
            if (sum % 2 != 0) return std::nullopt;  // spin label
            lam.assign(static_cast<std::size_t>(n), 0);
            lam[static_cast<std::size_t>(n - 2)] = sum / 2;
            lam[static_cast<std::size_t>(n - 1)] = diff / 2;
            if (lam[static_cast<std::size_t>(n - 1)] < 0) return std::nullopt;
            for (int i = n - 3; i >= 0; --i)
                lam[static_cast<std::size_t>(i)] =
                    lam[static_cast<std::size_t>(i + 1)] + w[static_cast<std::size_t>(i)];
            return Partition(std::move(lam));
        }
        default: return std::nullopt;
    }
}

enum class Chirality { Plus, Minus, Full };

// Spin-representation labels: Delta_{2n+1} for B_n, and the half-spin
// conventions Delta_{2n}^+ = omega_{n-1}, Delta_{2n}^- = omega_n for D_n.
inline WeightVec spin_label(const GroupType& g, Chirality c) {
    WeightVec w(static_cast<std::size_t>(g.rank), 0);
    if (g.family == Family::B && c == Chirality::Full) {
        w[static_cast<std::size_t>(g.rank - 1)] = 1;
        return w;
    }
    if (g.family == Family::D && c == Chirality::Plus) {
        w[static_cast<std::size_t>(g.rank - 2)] = 1;
        return w;
    }
    if (g.family == Family::D && c == Chirality::Minus) {
        w[static_cast<std::size_t>(g.rank - 1)] = 1;
        return w;
    }
    throw std::invalid_argument("invalid spin label request for " + to_string(g));
}

inline std::string to_string(const WeightVec& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    s += "]";
    return s;
}

}  // namespace supermf
