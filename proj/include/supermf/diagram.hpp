#pragma once

// Representation diagrams, graded components of the super symmetric algebra,
// and the bounded super multiplicity-free decision procedure.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "supermf/cache.hpp"
#include "supermf/char_engine.hpp"
#include "supermf/formulas.hpp"
#include "supermf/root_data.hpp"

namespace supermf {

struct Submodule {
    bool odd = false;
    std::vector<WeightVec> weights;  // one per factor; all-zero slice = trivial action
    bool dual = false;
    std::string name;

    bool trivial_on(int f) const {
        for (int v : weights[static_cast<std::size_t>(f)])
            if (v != 0) return false;
        return true;
    }
};

struct RepDiagram {
    std::string name;
    std::vector<GroupType> factors;
    std::vector<std::string> factor_names;
    std::vector<Submodule> submodules;

    ProductGroup group() const { return ProductGroup(factors); }

    int factor_count() const { return static_cast<int>(factors.size()); }
    int submodule_count() const { return static_cast<int>(submodules.size()); }

    void validate() const {
        if (factors.empty()) throw std::invalid_argument("diagram needs at least one group factor");
        if (submodules.empty()) throw std::invalid_argument("at least one submodule required");
        if (!factor_names.empty() && factor_names.size() != factors.size())
            throw std::invalid_argument("factor name count mismatch");
        for (const auto& s : submodules) {
            if (static_cast<int>(s.weights.size()) != factor_count())
                throw std::invalid_argument("submodule weight count != factor count");
            bool nontrivial = false;
            for (int f = 0; f < factor_count(); ++f) {
                if (static_cast<int>(s.weights[static_cast<std::size_t>(f)].size()) !=
                    factors[static_cast<std::size_t>(f)].rank)
                    throw std::invalid_argument("weight length != rank");
                if (!s.trivial_on(f)) nontrivial = true;
            }
            if (!nontrivial) throw std::invalid_argument("submodule acts trivially on every factor");
        }
    }

    long long submodule_dimension(int s) const {
        const Submodule& sub = submodules[static_cast<std::size_t>(s)];
        long long d = 1;
        for (int f = 0; f < factor_count(); ++f)
            d *= dimension(factors[static_cast<std::size_t>(f)], sub.weights[static_cast<std::size_t>(f)]);
        return d;
    }

    bool connected() const {
        int n = factor_count() + submodule_count();
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v < factor_count()) {
                for (int s = 0; s < submodule_count(); ++s) {
                    if (!submodules[static_cast<std::size_t>(s)].trivial_on(v) &&
                        comp[static_cast<std::size_t>(factor_count() + s)] < 0) {
                        comp[static_cast<std::size_t>(factor_count() + s)] = 0;
                        stack.push_back(factor_count() + s);
                    }
                }
            } else {
                int s = v - factor_count();
                for (int f = 0; f < factor_count(); ++f) {
                    if (!submodules[static_cast<std::size_t>(s)].trivial_on(f) &&
                        comp[static_cast<std::size_t>(f)] < 0) {
                        comp[static_cast<std::size_t>(f)] = 0;
                        stack.push_back(f);
                    }
                }
            }
        }
        for (int v : comp)
            if (v < 0) return false;
        return true;
    }
};

using MultiIndex = std::vector<int>;

struct MFWitness {
    MultiIndex index;
    WeightVec label;
    long long multiplicity = 0;
};

struct MFVerdict {
    bool mf = true;  // mf_up_to_bound when true, not_mf otherwise
    int bound = 0;
    std::optional<MFWitness> witness;
};

namespace detail {

inline std::string submodule_power_key(const std::vector<GroupType>& types,
                                       const std::vector<WeightVec>& weights, bool odd, int degree) {
    std::string k = odd ? "ext|" : "sym|";
    for (std::size_t i = 0; i < types.size(); ++i) {
        k += to_string(types[i]);
        k += ':';
        k += vec_key(weights[i]);
        k += ';';
    }
    k += '#';
    k += std::to_string(degree);
    return k;
}

// Closed-form fast paths for the patterns with known plethysms: powers of
// the standard representation, of S^2 C^n and Wedge^2 C^n, Wedge^2 of
// S^p C^2, and powers of outer products of standards. Everything else goes
// through the weight-multiset oracle.
inline std::optional<FormalChar> submodule_power_closed_form(const std::vector<GroupType>& types,
                                                             const std::vector<WeightVec>& weights,
                                                             bool odd, int degree) {
    for (const auto& t : types)
        if (t.family != Family::A) return std::nullopt;
    auto is_std = [](const WeightVec& w) {
        if (w.empty() || w[0] != 1) return false;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] != 0) return false;
        return true;
    };
    if (types.size() == 2 && is_std(weights[0]) && is_std(weights[1])) {
        int n = types[0].rank + 1, m = types[1].rank + 1;
        if (!odd) return duality_sym(n, m, degree);
        if (degree > n * m) return FormalChar(ProductGroup(types));
        return duality_skew(n, m, degree);
    }
    if (types.size() != 1) return std::nullopt;
    const WeightVec& w = weights[0];
    int n = types[0].rank + 1;
    if (is_std(w)) {
        GroupType g = types[0];
        FormalChar out{ProductGroup(g)};
        if (!odd) {
            out.add(partition_to_weight(g, Partition{degree}, LabelFlavor::Gl), 1);
        } else if (degree <= n) {
            out.add(partition_to_weight(g, Partition(std::vector<int>(static_cast<std::size_t>(degree), 1)),
                                        LabelFlavor::Gl),
                    1);
        }
        return out;
    }
    bool is_s2 = w[0] == 2 && std::all_of(w.begin() + 1, w.end(), [](int v) { return v == 0; });
    if (is_s2 && n == 2 && odd && degree == 2) return ext2_symk_sl2(2);
    if (is_s2) return odd ? ext_power_S2(n, degree) : sym_power_S2(n, degree);
    if (w.size() >= 2) {
        bool is_l2 = w[0] == 0 && w[1] == 1 &&
                     std::all_of(w.begin() + 2, w.end(), [](int v) { return v == 0; });
        if (is_l2) return odd ? ext_power_L2(n, degree) : sym_power_L2(n, degree);
    }
    if (n == 2 && odd && degree == 2 && w[0] >= 3) return ext2_symk_sl2(w[0]);
    return std::nullopt;
}

// Power of one irreducible submodule over its support subgroup, with
// in-memory and optional on-disk caching.
inline FormalChar submodule_power(const std::vector<GroupType>& types,
                                  const std::vector<WeightVec>& weights, bool odd, int degree) {
    std::string key = submodule_power_key(types, weights, odd, degree);
    static std::unordered_map<std::string, std::shared_ptr<const FormalChar>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    ProductGroup support(types);
    std::shared_ptr<FormalChar> result;
    if (auto* disk = active_disk_cache()) {
        if (auto terms = disk->get(key)) {
            result = std::make_shared<FormalChar>(support);
            result->terms = std::move(*terms);
        }
    }
    if (!result) {
        if (auto fast = submodule_power_closed_form(types, weights, odd, degree)) {
            result = std::make_shared<FormalChar>(std::move(*fast));
        } else {
            FormalChar module(support);
            WeightVec hw;
            for (const auto& w : weights) hw.insert(hw.end(), w.begin(), w.end());
            module.add(hw, 1);
            FormalChar powered = odd ? ext_power(module, degree) : sym_power(module, degree);
            result = std::make_shared<FormalChar>(std::move(powered));
            if (auto* disk = active_disk_cache()) disk->put(key, result->terms);
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.emplace(std::move(key), result).first;
    return *it->second;
}

}  // namespace detail

// Exact decomposition of one graded component: symmetric powers of the even
// submodules, exterior powers of the odd ones, tensored together. Submodules
// with a dual mark contribute the dual weights.
inline FormalChar graded_component(const RepDiagram& d, const MultiIndex& idx) {
    if (static_cast<int>(idx.size()) != d.submodule_count())
        throw std::invalid_argument("multi-index length != submodule count");
    ProductGroup g = d.group();
    FormalChar acc(g);
    acc.add(WeightVec(static_cast<std::size_t>(g.total_rank), 0), 1);
    for (int s = 0; s < d.submodule_count(); ++s) {
        int deg = idx[static_cast<std::size_t>(s)];
        if (deg < 0) throw std::invalid_argument("negative degree");
        if (deg == 0) continue;
        const Submodule& sub = d.submodules[static_cast<std::size_t>(s)];
        std::vector<GroupType> support_types;
        std::vector<WeightVec> support_weights;
        std::vector<int> support_factors;
        for (int f = 0; f < d.factor_count(); ++f) {
            if (sub.trivial_on(f)) continue;
            const GroupType& gt = d.factors[static_cast<std::size_t>(f)];
            WeightVec w = sub.weights[static_cast<std::size_t>(f)];
            if (sub.dual) w = dual_weight(gt, w);
            support_types.push_back(gt);
            support_weights.push_back(std::move(w));
            support_factors.push_back(f);
        }
        FormalChar part = detail::submodule_power(support_types, support_weights, sub.odd, deg);
        // extend to the full group
        FormalChar extended(g);
        ProductGroup sp(support_types);
        for (const auto& [w, m] : part.terms) {
            WeightVec full(static_cast<std::size_t>(g.total_rank), 0);
            for (std::size_t si = 0; si < support_factors.size(); ++si)
                g.put_slice(full, support_factors[si], sp.slice(w, static_cast<int>(si)));
            extended.add(full, m);
        }
        if (extended.terms.empty()) return FormalChar(g);  // zero component
        acc = tensor_chars(acc, extended);
    }
    return acc;
}

namespace detail {

inline void enumerate_indices(const std::vector<int>& caps, int budget, MultiIndex& acc,
                              std::vector<MultiIndex>& out) {
    if (acc.size() == caps.size()) {
        out.push_back(acc);
        return;
    }
    int cap = std::min(budget, caps[acc.size()]);
    for (int v = 0; v <= cap; ++v) {
        acc.push_back(v);
        enumerate_indices(caps, budget - v, acc, out);
        acc.pop_back();
    }
}

// Lexicographically first label with multiplicity >= 2, if any.
inline std::optional<MFWitness> component_witness(const FormalChar& c, const MultiIndex& idx) {
    for (const auto& [w, m] : c.terms)
        if (m >= 2) return MFWitness{idx, w, m};
    return std::nullopt;
}

}  // namespace detail

// Checks every multi-index with total degree <= max_total_degree (exterior
// degrees additionally capped by the submodule dimension). Witness selection
// is deterministic: first failing index in lexicographic order, then the
// lexicographically greatest repeated label.
inline MFVerdict is_super_mf(const RepDiagram& d, int max_total_degree, int jobs = 1) {
    if (max_total_degree < 1) throw std::invalid_argument("degree bound must be >= 1");
    d.validate();
    std::vector<int> caps;
    for (int s = 0; s < d.submodule_count(); ++s) {
        const Submodule& sub = d.submodules[static_cast<std::size_t>(s)];
        long long dim = d.submodule_dimension(s);
        int cap = max_total_degree;
        if (sub.odd && dim < cap) cap = static_cast<int>(dim);
        caps.push_back(cap);
    }
    std::vector<MultiIndex> indices;
    MultiIndex acc;
    detail::enumerate_indices(caps, max_total_degree, acc, indices);
    std::sort(indices.begin(), indices.end());

    MFVerdict verdict;
    verdict.bound = max_total_degree;

    if (jobs <= 1) {
        for (const auto& idx : indices) {
            FormalChar c = graded_component(d, idx);
            if (auto w = detail::component_witness(c, idx)) {
                verdict.mf = false;
                verdict.witness = std::move(w);
                return verdict;
            }
        }
        return verdict;
    }

    std::mutex pick_mutex;
    std::optional<MFWitness> best;
    std::exception_ptr error;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= indices.size()) return;
            try {
                FormalChar c = graded_component(d, indices[i]);
                if (auto w = detail::component_witness(c, indices[i])) {
                    std::lock_guard<std::mutex> lock(pick_mutex);
                    if (!best || w->index < best->index) best = std::move(w);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(pick_mutex);
                if (!error) error = std::current_exception();
                next.store(indices.size());
            }
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    if (best) {
        verdict.mf = false;
        verdict.witness = std::move(best);
    }
    return verdict;
}

inline RepDiagram dual_flip(const RepDiagram& d, int submodule_index) {
    if (submodule_index < 0 || submodule_index >= d.submodule_count())
        throw std::out_of_range("submodule index out of range");
    RepDiagram out = d;
    out.submodules[static_cast<std::size_t>(submodule_index)].dual =
        !out.submodules[static_cast<std::size_t>(submodule_index)].dual;
    return out;
}

namespace detail {

inline std::string diagram_key(const RepDiagram& d) {
    std::string k;
    for (const auto& f : d.factors) {
        k += to_string(f);
        k += ';';
    }
    k += '|';
    for (const auto& s : d.submodules) {
        k += s.odd ? 'o' : 'e';
        k += s.dual ? '*' : '.';
        for (const auto& w : s.weights) {
            k += vec_key(w);
            k += ':';
        }
        k += '/';
    }
    return k;
}

}  // namespace detail

// All diagrams obtained by deleting any subset of submodules and any subset
// of factors; submodules rendered trivial are dropped, factor vertices left
// with no edges are dropped (they form their own graph components), the
// empty diagram is excluded. Disconnected results with at least one
// submodule per component are kept whole; their pieces appear separately via
// the deeper deletions.
inline std::vector<RepDiagram> subdiagrams(const RepDiagram& d) {
    std::map<std::string, RepDiagram> out;
    int nf = d.factor_count(), ns = d.submodule_count();
    for (int fmask = 1; fmask < (1 << nf); ++fmask) {
        for (int smask = 1; smask < (1 << ns); ++smask) {
            std::vector<int> fs;
            for (int f = 0; f < nf; ++f)
                if (fmask & (1 << f)) fs.push_back(f);

            std::vector<int> kept_subs;
            for (int s = 0; s < ns; ++s) {
                if (!(smask & (1 << s))) continue;
                bool nontrivial = false;
                for (int f : fs)
                    if (!d.submodules[static_cast<std::size_t>(s)].trivial_on(f)) nontrivial = true;
                if (nontrivial) kept_subs.push_back(s);
            }
            if (kept_subs.empty()) continue;

            std::vector<int> kept_factors;
            for (int f : fs) {
                bool used = false;
                for (int s : kept_subs)
                    if (!d.submodules[static_cast<std::size_t>(s)].trivial_on(f)) used = true;
                if (used) kept_factors.push_back(f);
            }

            RepDiagram cand;
            cand.name = d.name;
            for (int f : kept_factors) {
                cand.factors.push_back(d.factors[static_cast<std::size_t>(f)]);
                if (!d.factor_names.empty())
                    cand.factor_names.push_back(d.factor_names[static_cast<std::size_t>(f)]);
            }
            for (int s : kept_subs) {
                const Submodule& src = d.submodules[static_cast<std::size_t>(s)];
                Submodule sub;
                sub.odd = src.odd;
                sub.dual = src.dual;
                sub.name = src.name;
                for (int f : kept_factors)
                    sub.weights.push_back(src.weights[static_cast<std::size_t>(f)]);
                cand.submodules.push_back(std::move(sub));
            }
            out.emplace(detail::diagram_key(cand), std::move(cand));
        }
    }
    std::vector<RepDiagram> result;
    for (auto& [k, v] : out) result.push_back(std::move(v));
    return result;
}

}  // namespace supermf
