#pragma once

// Littlewood-Richardson coefficients and products in the ring of
// Schur-labeled formal sums.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "supermf/partition.hpp"

namespace supermf {

// Formal nonnegative-integer combination of partition labels, optionally
// truncated to labels with at most `length_cap` rows.
struct GLFormalSum {
    std::map<Partition, long long> terms;
    std::optional<int> length_cap;

    void add(const Partition& p, long long mult) {
        if (mult == 0) return;
        if (length_cap && p.length() > *length_cap) return;
        auto it = terms.find(p);
        if (it == terms.end()) {
            terms.emplace(p, mult);
        } else {
            it->second += mult;
            if (it->second == 0) terms.erase(it);
        }
    }
};

inline GLFormalSum make_gl_sum(std::initializer_list<std::pair<Partition, long long>> items,
                               std::optional<int> cap = std::nullopt) {
    GLFormalSum s;
    s.length_cap = cap;
    for (const auto& [p, m] : items) s.add(p, m);
    return s;
}

namespace detail {

inline std::string lr_key(const Partition& a, const Partition& b, const Partition& c) {
    std::string k;
    for (const Partition* p : {&a, &b, &c}) {
        for (int v : p->parts()) {
            k += std::to_string(v);
            k += ',';
        }
        k += '|';
    }
    return k;
}

// Counts LR skew tableaux of shape lambda/mu with content nu by filling the
// cells in reverse reading order (rows top to bottom, right to left), which
// makes the column-strict, row-weak and lattice constraints all depend on
// already-placed cells.
inline long long count_lr_tableaux(const Partition& lambda, const Partition& mu,
                                   const Partition& nu) {
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = lambda.row(r) - 1; c >= mu.row(r); --c) cells.push_back({r, c});

    int rows = lambda.length();
    int maxcol = lambda.row(0);
    std::vector<int> fill(static_cast<std::size_t>(rows * std::max(maxcol, 1)), 0);
    auto at = [&](int r, int c) -> int& { return fill[static_cast<std::size_t>(r * maxcol + c)]; };

    int nvals = nu.length();
    std::vector<int> need(static_cast<std::size_t>(nvals + 1), 0);
    for (int v = 1; v <= nvals; ++v) need[static_cast<std::size_t>(v)] = nu.row(v - 1);
    std::vector<int> placed(static_cast<std::size_t>(nvals + 1), 0);

    long long count = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int upper = (r > 0 && c >= mu.row(r - 1)) ? at(r - 1, c) : 0;  // cell above in skew part
        int right = (c + 1 < lambda.row(r)) ? at(r, c + 1) : nvals + 1;
        for (int v = 1; v <= nvals; ++v) {
            if (placed[static_cast<std::size_t>(v)] >= need[static_cast<std::size_t>(v)]) continue;
            if (v > right) break;          // entries weakly increase along rows
            if (v <= upper) continue;      // entries strictly increase down columns
            if (v > 1 && placed[static_cast<std::size_t>(v)] >= placed[static_cast<std::size_t>(v - 1)])
                continue;                  // lattice word in reverse reading order
            placed[static_cast<std::size_t>(v)]++;
            at(r, c) = v;
            self(self, idx + 1);
            at(r, c) = 0;
            placed[static_cast<std::size_t>(v)]--;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace detail

// c^lambda_{mu,nu}: multiplicity of V(lambda) in V(mu) (x) V(nu) for GL.
inline long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
    // symmetric in (mu, nu); enumerate against the smaller content
    const Partition& inner = nu.size() <= mu.size() ? mu : nu;
    const Partition& content = nu.size() <= mu.size() ? nu : mu;

    static std::unordered_map<std::string, long long> memo;
    static std::mutex memo_mutex;
    std::string key = detail::lr_key(lambda, inner, content);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    long long value = detail::count_lr_tableaux(lambda, inner, content);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(std::move(key), value);
    }
    return value;
}

namespace detail {

// Full expansion of {mu}·{nu}, untruncated.
inline const std::map<Partition, long long>& schur_product_terms(const Partition& mu,
                                                                 const Partition& nu) {
    static std::unordered_map<std::string, std::map<Partition, long long>> memo;
    static std::mutex memo_mutex;
    const Partition& a = mu <= nu ? mu : nu;
    const Partition& b = mu <= nu ? nu : mu;
    std::string key = lr_key(a, b, Partition());
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::map<Partition, long long> result;
    int n = a.size() + b.size();
    int max_len = a.length() + b.length();
    int max_part = a.row(0) + b.row(0);
    for (const Partition& lambda : partitions_of(n, max_len, max_part)) {
        if (!contains(lambda, a)) continue;
        long long c = lr_coeff(lambda, a, b);
        if (c > 0) result.emplace(lambda, c);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace detail

// Bilinear extension of V(mu) (x) V(nu) = sum_lambda c^lambda_{mu,nu} V(lambda),
// truncated by the common length cap.
inline GLFormalSum schur_multiply(const GLFormalSum& a, const GLFormalSum& b) {
    if (a.length_cap && b.length_cap && *a.length_cap != *b.length_cap)
        throw std::invalid_argument("schur_multiply: incompatible length caps");
    GLFormalSum out;
    out.length_cap = a.length_cap ? a.length_cap : b.length_cap;
    for (const auto& [mu, ma] : a.terms)
        for (const auto& [nu, mb] : b.terms)
            for (const auto& [lambda, c] : detail::schur_product_terms(mu, nu))
                out.add(lambda, ma * mb * c);
    return out;
}

inline bool all_rows_even(const Partition& p) {
    for (int v : p.parts())
        if (v % 2 != 0) return false;
    return true;
}

inline bool all_columns_even(const Partition& p) { return all_rows_even(conjugate(p)); }

enum class EvenMode { Rows, Columns };

// sum over beta of c^lambda_{mu,beta}, beta restricted to even rows
// (orthogonal branching) or even columns (symplectic branching).
inline long long even_branching_coeff(const Partition& lambda, const Partition& mu, EvenMode mode) {
    int rest = lambda.size() - mu.size();
    if (rest < 0 || !contains(lambda, mu)) return 0;
    if (rest % 2 != 0) return 0;  // even-row and even-column shapes have even size
    long long total = 0;
    for (const Partition& beta : partitions_of(rest, lambda.length(), lambda.row(0))) {
        bool ok = mode == EvenMode::Rows ? all_rows_even(beta) : all_columns_even(beta);
        if (!ok) continue;
        total += lr_coeff(lambda, mu, beta);
    }
    return total;
}

inline std::string to_string(const GLFormalSum& s) {
    if (s.terms.empty()) return "0";
    std::string out;
    for (const auto& [p, m] : s.terms) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        out += "{" + to_string(p).substr(1, to_string(p).size() - 2) + "}";
    }
    return out;
}

}  // namespace supermf
