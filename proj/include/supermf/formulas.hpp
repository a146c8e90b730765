#pragma once

// Closed-form decompositions: (GL_n, GL_m) duality and skew duality, the
// symmetric/exterior power series of S^2 C^n and Wedge^2 C^n, and the
// exterior square of S^k C^2. Fast paths with oracle cross-checks in the
// test suites.

#include <vector>

#include "supermf/char_engine.hpp"
#include "supermf/lr.hpp"
#include "supermf/partition.hpp"
#include "supermf/root_data.hpp"

namespace supermf {

// Allows SL_1 as a trivial factor so the k=... edge ranks stay valid.
inline GroupType sl_group(int n) {
    if (n < 1) throw std::invalid_argument("SL rank must be >= 1");
    return GroupType{Family::A, n - 1};
}

namespace detail {

inline FormalChar paired_partition_char(int n, int m, const std::vector<std::pair<Partition, Partition>>& pairs) {
    GroupType gn = sl_group(n), gm = sl_group(m);
    FormalChar out{ProductGroup({gn, gm})};
    for (const auto& [a, b] : pairs) {
        WeightVec w = partition_to_weight(gn, a, LabelFlavor::Gl);
        WeightVec wb = partition_to_weight(gm, b, LabelFlavor::Gl);
        w.insert(w.end(), wb.begin(), wb.end());
        out.add(w, 1);
    }
    return out;
}

}  // namespace detail

// S^k(C^n (x) C^m) = sum over |lambda| = k, l(lambda) <= min(n,m) of
// V(lambda) boxtimes V(lambda).
inline std::vector<Partition> duality_sym_partitions(int n, int m, int k) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(k, std::min(n, m))) out.push_back(p);
    return out;
}

inline FormalChar duality_sym(int n, int m, int k) {
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const Partition& p : duality_sym_partitions(n, m, k)) pairs.emplace_back(p, p);
    return detail::paired_partition_char(n, m, pairs);
}

// Wedge^k(C^n (x) C^m) = sum over |lambda| = k, l(lambda) <= n, lambda_1 <= m
// of V(lambda) boxtimes V(lambda^t).
inline std::vector<Partition> duality_skew_partitions(int n, int m, int k) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(k, n, m)) out.push_back(p);
    return out;
}

inline FormalChar duality_skew(int n, int m, int k) {
    if (k > n * m) throw std::invalid_argument("exterior degree exceeds n*m");
    std::vector<std::pair<Partition, Partition>> pairs;
    for (const Partition& p : duality_skew_partitions(n, m, k)) pairs.emplace_back(p, conjugate(p));
    return detail::paired_partition_char(n, m, pairs);
}

// S^k(S^2 C^n): even-row partitions of 2k with at most n rows.
inline std::vector<Partition> sym_power_S2_partitions(int n, int k) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(2 * k, n))
        if (all_rows_even(p)) out.push_back(p);
    return out;
}

// S^k(Wedge^2 C^n): conjugates of even-row partitions of 2k, length cap n.
inline std::vector<Partition> sym_power_L2_partitions(int n, int k) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(2 * k, -1, n))
        if (all_rows_even(p)) out.push_back(conjugate(p));
    std::sort(out.begin(), out.end());
    return out;
}

// Wedge^k(S^2 C^n): nested (r+1, r-1)-hooks.
inline std::vector<Partition> ext_power_S2_partitions(int n, int k) {
    std::vector<Partition> out;
    for (const Partition& p : nested_hooks(k, HookKind::SymSkew))
        if (p.length() <= n) out.push_back(p);
    return out;
}

// Wedge^k(Wedge^2 C^n): nested (r, r)-hooks.
inline std::vector<Partition> ext_power_L2_partitions(int n, int k) {
    std::vector<Partition> out;
    for (const Partition& p : nested_hooks(k, HookKind::ExtSkew))
        if (p.length() <= n) out.push_back(p);
    return out;
}

namespace detail {

inline FormalChar partition_list_char(int n, const std::vector<Partition>& parts) {
    GroupType g = sl_group(n);
    FormalChar out{ProductGroup(g)};
    for (const Partition& p : parts) out.add(partition_to_weight(g, p, LabelFlavor::Gl), 1);
    return out;
}

}  // namespace detail

inline FormalChar sym_power_S2(int n, int k) {
    return detail::partition_list_char(n, sym_power_S2_partitions(n, k));
}
inline FormalChar sym_power_L2(int n, int k) {
    return detail::partition_list_char(n, sym_power_L2_partitions(n, k));
}
inline FormalChar ext_power_S2(int n, int k) {
    return detail::partition_list_char(n, ext_power_S2_partitions(n, k));
}
inline FormalChar ext_power_L2(int n, int k) {
    return detail::partition_list_char(n, ext_power_L2_partitions(n, k));
}

// Wedge^2(S^k C^2) = sum_{j=0..floor((k-1)/2)} V(2k - 2 - 4j).
inline FormalChar ext2_symk_sl2(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    GroupType g{Family::A, 1};
    FormalChar out{ProductGroup(g)};
    for (int j = 0; 2 * j <= k - 1; ++j) out.add({2 * k - 2 - 4 * j}, 1);
    return out;
}

}  // namespace supermf
