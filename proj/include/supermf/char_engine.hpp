#pragma once

// Exact character computations: weight systems by Freudenthal recursion,
// decomposition by highest-weight stripping, tensor products, symmetric and
// exterior powers via Newton recursions, and classical-subgroup restriction.
// Everything is integer arithmetic; every decomposition is checked against
// the Weyl dimension formula.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "supermf/partition.hpp"
#include "supermf/root_data.hpp"

namespace supermf {

struct CharError : std::runtime_error {
    explicit CharError(const std::string& what) : std::runtime_error(what) {}
};

struct VecHash {
    std::size_t operator()(const WeightVec& v) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using CharMap = std::unordered_map<WeightVec, long long, VecHash>;

// Ordered list of simple factors; weights are concatenated fundamental
// coordinates.
struct ProductGroup {
    std::vector<GroupType> factors;

    ProductGroup() = default;
    ProductGroup(std::initializer_list<GroupType> fs) : factors(fs) { init(); }
    explicit ProductGroup(std::vector<GroupType> fs) : factors(std::move(fs)) { init(); }
    explicit ProductGroup(const GroupType& g) : factors{g} { init(); }

    void init() {
        offsets.clear();
        int off = 0;
        norm_scale.clear();
        long long lcm_den = 1;
        for (const auto& f : factors) lcm_den = std::lcm(lcm_den, root_system(f).form_den);
        for (const auto& f : factors) {
            offsets.push_back(off);
            off += f.rank;
            norm_scale.push_back(lcm_den / root_system(f).form_den);
        }
        total_rank = off;
    }

    int size() const { return static_cast<int>(factors.size()); }

    WeightVec slice(const WeightVec& w, int f) const {
        auto b = w.begin() + offsets[static_cast<std::size_t>(f)];
        return WeightVec(b, b + factors[static_cast<std::size_t>(f)].rank);
    }

    void put_slice(WeightVec& w, int f, const WeightVec& part) const {
        std::copy(part.begin(), part.end(), w.begin() + offsets[static_cast<std::size_t>(f)]);
    }

    bool dominant(const WeightVec& w) const {
        for (int v : w)
            if (v < 0) return false;
        return true;
    }

    long long norm_shifted(const WeightVec& w) const {
        long long s = 0;
        for (int f = 0; f < size(); ++f)
            s += norm_scale[static_cast<std::size_t>(f)] *
                 root_system(factors[static_cast<std::size_t>(f)]).norm_shifted(slice(w, f));
        return s;
    }

    long long weight_dimension(const WeightVec& w) const;

    auto operator<=>(const ProductGroup& o) const { return factors <=> o.factors; }
    bool operator==(const ProductGroup& o) const { return factors == o.factors; }

    std::vector<int> offsets;
    std::vector<long long> norm_scale;
    int total_rank = 0;
};

inline std::string to_string(const ProductGroup& g) {
    std::string s;
    for (int f = 0; f < g.size(); ++f) {
        if (f) s += "x";
        s += to_string(g.factors[static_cast<std::size_t>(f)]);
    }
    return s;
}

// Finite weight -> multiplicity map over a fixed (product) group.
struct WeightMultiset {
    ProductGroup group;
    CharMap entries;

    long long total() const {
        long long t = 0;
        for (const auto& [w, m] : entries) t += m;
        return t;
    }
};

// Finite dominant-weight -> multiplicity map; the result type of every
// decomposition. Ordered keys keep output deterministic.
struct FormalChar {
    ProductGroup group;
    std::map<WeightVec, long long> terms;

    FormalChar() = default;
    explicit FormalChar(ProductGroup g) : group(std::move(g)) {}

    void add(const WeightVec& w, long long m) {
        if (m == 0) return;
        auto it = terms.find(w);
        if (it == terms.end())
            terms.emplace(w, m);
        else {
            it->second += m;
            if (it->second == 0) terms.erase(it);
        }
    }

    long long mult(const WeightVec& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? 0 : it->second;
    }

    long long total_dimension() const;

    bool operator==(const FormalChar& o) const { return group == o.group && terms == o.terms; }
};

namespace engine_stats {
inline std::atomic<long long>& bookkeeping_checks() {
    static std::atomic<long long> n{0};
    return n;
}
}  // namespace engine_stats

namespace detail {

inline std::string group_key(const GroupType& g) { return to_string(g); }

inline std::string vec_key(const WeightVec& w) {
    std::string s;
    for (int v : w) {
        s += std::to_string(v);
        s += ',';
    }
    return s;
}

// Full weight system of the simple-group irreducible with highest weight hw:
// BFS downward along simple roots, membership decided by reflecting into the
// dominant chamber and testing hw - dom(v) against the positive root cone.
inline std::shared_ptr<const CharMap> compute_irrep_char(const GroupType& g, const WeightVec& hw) {
    const RootSystem& rs = root_system(g);
    if (!is_dominant(hw)) throw CharError("irreducible label must be dominant");

    std::unordered_set<WeightVec, VecHash> visited;
    std::deque<WeightVec> queue;
    visited.insert(hw);
    queue.push_back(hw);
    while (!queue.empty()) {
        WeightVec v = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            WeightVec u = v;
            for (int j = 0; j < rs.rank; ++j)
                u[static_cast<std::size_t>(j)] -=
                    rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (visited.count(u)) continue;
            WeightVec ud = dominant_rep(rs, u);
            WeightVec diff(hw.size());
            for (std::size_t j = 0; j < hw.size(); ++j) diff[j] = hw[j] - ud[j];
            if (!rs.in_positive_root_cone(diff)) continue;
            visited.insert(u);
            queue.push_back(u);
        }
    }

    std::vector<WeightVec> dominants;
    for (const auto& v : visited)
        if (is_dominant(v)) dominants.push_back(v);
    std::sort(dominants.begin(), dominants.end(), [&](const WeightVec& a, const WeightVec& b) {
        long long na = rs.norm_shifted(a), nb = rs.norm_shifted(b);
        if (na != nb) return na > nb;
        return a > b;
    });

    CharMap dom_mult;
    long long top_norm = rs.norm_shifted(hw);
    for (const auto& mu : dominants) {
        if (mu == hw) {
            dom_mult[mu] = 1;
            continue;
        }
        long long num = 0;
        for (const auto& alpha : rs.positive_roots) {
            WeightVec v = mu;
            while (true) {
                for (std::size_t j = 0; j < v.size(); ++j) v[j] += alpha[j];
                auto it = dom_mult.find(dominant_rep(rs, v));
                if (it == dom_mult.end()) break;
                num += it->second * rs.dot(v, alpha);
            }
        }
        long long den = top_norm - rs.norm_shifted(mu);
        if (den <= 0 || (2 * num) % den != 0)
            throw CharError("Freudenthal recursion failed for " + to_string(g));
        dom_mult[mu] = 2 * num / den;
    }

    auto out = std::make_shared<CharMap>();
    out->reserve(visited.size());
    long long total = 0;
    for (const auto& v : visited) {
        long long m = dom_mult.at(dominant_rep(rs, v));
        (*out)[v] = m;
        total += m;
    }
    if (total != dimension(g, hw))
        throw CharError("weight multiplicities disagree with Weyl dimension for " + to_string(g));
    engine_stats::bookkeeping_checks()++;
    return out;
}

}  // namespace detail

// Memoized weight system of one simple-group irreducible.
inline std::shared_ptr<const CharMap> irrep_char(const GroupType& g, const WeightVec& hw) {
    static std::unordered_map<std::string, std::shared_ptr<const CharMap>> cache;
    static std::mutex cache_mutex;
    std::string key = detail::group_key(g) + "|" + detail::vec_key(hw);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto value = detail::compute_irrep_char(g, hw);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

inline long long dimension(const ProductGroup& g, const WeightVec& w) {
    long long d = 1;
    for (int f = 0; f < g.size(); ++f)
        d *= dimension(g.factors[static_cast<std::size_t>(f)], g.slice(w, f));
    return d;
}

inline long long ProductGroup::weight_dimension(const WeightVec& w) const {
    return dimension(*this, w);
}

inline long long FormalChar::total_dimension() const {
    long long t = 0;
    for (const auto& [w, m] : terms) t += m * dimension(group, w);
    return t;
}

namespace detail {

// Walks the cartesian product of the factor weight systems of the
// irreducible labelled by hw, calling f(weight, mult).
template <typename F>
inline void for_each_product_weight(const ProductGroup& g, const WeightVec& hw, F&& f) {
    int nf = g.size();
    std::vector<std::shared_ptr<const CharMap>> charts;
    charts.reserve(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i)
        charts.push_back(irrep_char(g.factors[static_cast<std::size_t>(i)], g.slice(hw, i)));
    WeightVec w(static_cast<std::size_t>(g.total_rank), 0);
    auto rec = [&](auto&& self, int fi, long long m) -> void {
        if (fi == nf) {
            f(w, m);
            return;
        }
        for (const auto& [part, pm] : *charts[static_cast<std::size_t>(fi)]) {
            g.put_slice(w, fi, part);
            self(self, fi + 1, m * pm);
        }
    };
    rec(rec, 0, 1);
}

}  // namespace detail

// Full weight system with multiplicities of the irreducible labelled by w.
inline WeightMultiset weight_multiplicities(const ProductGroup& g, const WeightVec& w) {
    WeightMultiset ws;
    ws.group = g;
    detail::for_each_product_weight(g, w, [&](const WeightVec& v, long long m) {
        ws.entries[v] += m;
    });
    return ws;
}

inline WeightMultiset weight_multiplicities(const GroupType& g, const WeightVec& w) {
    return weight_multiplicities(ProductGroup(g), w);
}

// Iterated highest-weight stripping. Among the remaining dominant weights the
// candidate with the largest shifted norm is an actual highest weight, so the
// loop never over-subtracts on true characters; ties are broken
// lexicographically (greatest first) for reproducibility.
inline FormalChar decompose(const WeightMultiset& ws) {
    const ProductGroup& g = ws.group;
    FormalChar out(g);
    CharMap remaining = ws.entries;
    for (auto it = remaining.begin(); it != remaining.end();) {
        if (it->second == 0)
            it = remaining.erase(it);
        else
            ++it;
    }
    long long total = 0;
    for (const auto& [w, m] : remaining) total += m;

    while (!remaining.empty()) {
        const WeightVec* best = nullptr;
        long long best_norm = 0;
        for (const auto& [w, m] : remaining) {
            if (!g.dominant(w)) continue;
            long long n = g.norm_shifted(w);
            if (best == nullptr || n > best_norm || (n == best_norm && w > *best)) {
                best = &w;
                best_norm = n;
            }
        }
        if (best == nullptr) throw CharError("not a true character");
        WeightVec hw = *best;
        long long mult = remaining.at(hw);
        if (mult < 0) throw CharError("not a true character");
        out.add(hw, mult);
        bool negative = false;
        detail::for_each_product_weight(g, hw, [&](const WeightVec& v, long long m) {
            auto it = remaining.find(v);
            if (it == remaining.end()) {
                if (m != 0) negative = true;
                return;
            }
            it->second -= mult * m;
            if (it->second == 0) remaining.erase(it);
            else if (it->second < 0) negative = true;
        });
        if (negative) throw CharError("not a true character");
    }
    if (out.total_dimension() != total)
        throw CharError("dimension bookkeeping violation in decompose");
    engine_stats::bookkeeping_checks()++;
    return out;
}

namespace detail {

// Tensor product of two irreducibles of one simple group, memoized.
inline std::shared_ptr<const std::map<WeightVec, long long>> tensor_simple(const GroupType& g,
                                                                           const WeightVec& a,
                                                                           const WeightVec& b) {
    const WeightVec& lo = a <= b ? a : b;
    const WeightVec& hi = a <= b ? b : a;
    static std::unordered_map<std::string, std::shared_ptr<const std::map<WeightVec, long long>>> cache;
    static std::mutex cache_mutex;
    std::string key = group_key(g) + "|" + vec_key(lo) + "|" + vec_key(hi);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    std::shared_ptr<std::map<WeightVec, long long>> result;
    bool lo_trivial = std::all_of(lo.begin(), lo.end(), [](int v) { return v == 0; });
    if (lo_trivial) {
        result = std::make_shared<std::map<WeightVec, long long>>();
        (*result)[hi] = 1;
    } else {
        auto ca = irrep_char(g, lo);
        auto cb = irrep_char(g, hi);
        WeightMultiset conv;
        conv.group = ProductGroup(g);
        conv.entries.reserve(ca->size() * 2);
        for (const auto& [wa, ma] : *ca)
            for (const auto& [wb, mb] : *cb) {
                WeightVec w(wa.size());
                for (std::size_t i = 0; i < wa.size(); ++i) w[i] = wa[i] + wb[i];
                conv.entries[w] += ma * mb;
            }
        result = std::make_shared<std::map<WeightVec, long long>>(decompose(conv).terms);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace detail

// Tensor product of two irreducibles of a product group, factorwise.
inline FormalChar tensor(const ProductGroup& g, const WeightVec& w1, const WeightVec& w2) {
    std::vector<std::shared_ptr<const std::map<WeightVec, long long>>> parts;
    for (int f = 0; f < g.size(); ++f)
        parts.push_back(detail::tensor_simple(g.factors[static_cast<std::size_t>(f)],
                                              g.slice(w1, f), g.slice(w2, f)));
    FormalChar out(g);
    WeightVec w(static_cast<std::size_t>(g.total_rank), 0);
    auto rec = [&](auto&& self, int fi, long long m) -> void {
        if (fi == g.size()) {
            out.add(w, m);
            return;
        }
        for (const auto& [part, pm] : *parts[static_cast<std::size_t>(fi)]) {
            g.put_slice(w, fi, part);
            self(self, fi + 1, m * pm);
        }
    };
    rec(rec, 0, 1);
    return out;
}

inline FormalChar tensor(const GroupType& g, const WeightVec& w1, const WeightVec& w2) {
    return tensor(ProductGroup(g), w1, w2);
}

// Bilinear extension of `tensor` to formal characters.
inline FormalChar tensor_chars(const FormalChar& a, const FormalChar& b) {
    if (!(a.group == b.group)) throw CharError("tensor_chars: group mismatch");
    FormalChar out(a.group);
    for (const auto& [wa, ma] : a.terms)
        for (const auto& [wb, mb] : b.terms) {
            FormalChar t = tensor(a.group, wa, wb);
            for (const auto& [w, m] : t.terms) out.add(w, ma * mb * m);
        }
    return out;
}

// Power-sum operation: scales every weight by k.
inline WeightMultiset adams(const WeightMultiset& ws, int k) {
    if (k < 1) throw std::invalid_argument("adams requires k >= 1");
    WeightMultiset out;
    out.group = ws.group;
    out.entries.reserve(ws.entries.size());
    for (const auto& [w, m] : ws.entries) {
        WeightVec v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = k * w[i];
        out.entries[v] += m;
    }
    return out;
}

inline WeightMultiset char_to_multiset(const FormalChar& c) {
    WeightMultiset ws;
    ws.group = c.group;
    for (const auto& [w, m] : c.terms)
        detail::for_each_product_weight(c.group, w, [&](const WeightVec& v, long long mm) {
            ws.entries[v] += m * mm;
        });
    return ws;
}

namespace detail {

// Newton recursions n*h_n = sum psi^k h_{n-k} and
// n*e_n = sum (-1)^{k-1} psi^k e_{n-k}, at the weight-multiset level.
inline CharMap power_multiset(const WeightMultiset& module, int n, bool exterior) {
    std::vector<CharMap> h(static_cast<std::size_t>(n) + 1);
    h[0][WeightVec(static_cast<std::size_t>(module.group.total_rank), 0)] = 1;
    for (int t = 1; t <= n; ++t) {
        CharMap acc;
        for (int k = 1; k <= t; ++k) {
            long long sign = exterior && (k % 2 == 0) ? -1 : 1;
            const CharMap& prev = h[static_cast<std::size_t>(t - k)];
            for (const auto& [wv, mv] : module.entries) {
                WeightVec scaled(wv.size());
                for (std::size_t i = 0; i < wv.size(); ++i) scaled[i] = k * wv[i];
                for (const auto& [wh, mh] : prev) {
                    WeightVec w(wh.size());
                    for (std::size_t i = 0; i < wh.size(); ++i) w[i] = scaled[i] + wh[i];
                    acc[w] += sign * mv * mh;
                }
            }
        }
        CharMap& out = h[static_cast<std::size_t>(t)];
        for (auto& [w, v] : acc) {
            if (v % t != 0) throw CharError("power recursion divisibility failure");
            long long q = v / t;
            if (q < 0) throw CharError("power recursion produced a virtual character");
            if (q != 0) out.emplace(w, q);
        }
    }
    return std::move(h[static_cast<std::size_t>(n)]);
}

}  // namespace detail

// Decomposition of the n-th symmetric power of a (possibly reducible)
// character.
inline FormalChar sym_power(const FormalChar& rep, int n) {
    if (n < 0) throw std::invalid_argument("power degree must be >= 0");
    WeightMultiset ws;
    ws.group = rep.group;
    ws.entries = detail::power_multiset(char_to_multiset(rep), n, /*exterior=*/false);
    return decompose(ws);
}

// Decomposition of the n-th exterior power; empty beyond the dimension.
inline FormalChar ext_power(const FormalChar& rep, int n) {
    if (n < 0) throw std::invalid_argument("power degree must be >= 0");
    WeightMultiset ws;
    ws.group = rep.group;
    ws.entries = detail::power_multiset(char_to_multiset(rep), n, /*exterior=*/true);
    return decompose(ws);
}

// Outer tensor product: labels concatenate, multiplicities multiply.
inline FormalChar product_char(const std::vector<FormalChar>& factors) {
    if (factors.empty()) throw std::invalid_argument("product_char needs at least one factor");
    std::vector<GroupType> types;
    for (const auto& f : factors)
        for (const auto& t : f.group.factors) types.push_back(t);
    FormalChar out(ProductGroup(std::move(types)));
    WeightVec w(static_cast<std::size_t>(out.group.total_rank), 0);
    auto rec = [&](auto&& self, std::size_t fi, int offset, long long m) -> void {
        if (fi == factors.size()) {
            out.add(w, m);
            return;
        }
        const FormalChar& f = factors[fi];
        for (const auto& [part, pm] : f.terms) {
            std::copy(part.begin(), part.end(), w.begin() + offset);
            self(self, fi + 1, offset + f.group.total_rank, m * pm);
        }
    };
    rec(rec, 0, 0, 1);
    return out;
}

enum class ClassicalTarget { So, Sp };

// Restriction of the SL_m irreducible V(lambda) to SO_m or Sp_m, computed by
// folding the torus: the subgroup torus is t = diag(t_1..t_n, [1,] t_n^-1..t_1^-1),
// so an SL weight with epsilon coordinates e restricts to e_j - e_{m+1-j}.
inline FormalChar restrict_classical(int m, ClassicalTarget target, const Partition& lambda) {
    if (lambda.length() > m) throw std::invalid_argument("partition too long for rank");
    if (target == ClassicalTarget::Sp && m % 2 != 0)
        throw std::invalid_argument("symplectic restriction requires even ambient dimension");
    GroupType src = make_group(Family::A, m - 1);
    GroupType tgt = target == ClassicalTarget::Sp
                        ? make_group(Family::C, m / 2)
                        : (m % 2 == 1 ? make_group(Family::B, (m - 1) / 2)
                                      : make_group(Family::D, m / 2));
    int n = tgt.rank;
    WeightVec hw = partition_to_weight(src, lambda, LabelFlavor::Gl);
    auto source = irrep_char(src, hw);

    WeightMultiset folded;
    folded.group = ProductGroup(tgt);
    folded.entries.reserve(source->size());
    std::vector<long long> e(static_cast<std::size_t>(m), 0);
    for (const auto& [w, mult] : *source) {
        e[static_cast<std::size_t>(m - 1)] = 0;
        for (int i = m - 2; i >= 0; --i)
            e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i + 1)] + w[static_cast<std::size_t>(i)];
        std::vector<long long> eps(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            eps[static_cast<std::size_t>(j)] =
                e[static_cast<std::size_t>(j)] - e[static_cast<std::size_t>(m - 1 - j)];
        WeightVec v(static_cast<std::size_t>(n), 0);
        for (int i = 0; i + 1 < n; ++i)
            v[static_cast<std::size_t>(i)] =
                static_cast<int>(eps[static_cast<std::size_t>(i)] - eps[static_cast<std::size_t>(i + 1)]);
        switch (tgt.family) {
            case Family::B:
                v[static_cast<std::size_t>(n - 1)] = static_cast<int>(2 * eps[static_cast<std::size_t>(n - 1)]);
                break;
            case Family::C:
                v[static_cast<std::size_t>(n - 1)] = static_cast<int>(eps[static_cast<std::size_t>(n - 1)]);
                break;
            case Family::D:
                if (n >= 2) {
                    v[static_cast<std::size_t>(n - 2)] = static_cast<int>(
                        eps[static_cast<std::size_t>(n - 2)] - eps[static_cast<std::size_t>(n - 1)]);
                    v[static_cast<std::size_t>(n - 1)] = static_cast<int>(
                        eps[static_cast<std::size_t>(n - 2)] + eps[static_cast<std::size_t>(n - 1)]);
                }
                break;
            default: break;
        }
        folded.entries[v] += mult;
    }
    return decompose(folded);
}

inline std::string to_string(const FormalChar& c) {
    if (c.terms.empty()) return "0";
    std::string out;
    for (const auto& [w, m] : c.terms) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        if (c.group.size() == 1) {
            out += to_string(w);
        } else {
            out += "(";
            for (int f = 0; f < c.group.size(); ++f) {
                if (f) out += " x ";
                out += to_string(c.group.slice(w, f));
            }
            out += ")";
        }
    }
    return out;
}

}  // namespace supermf
