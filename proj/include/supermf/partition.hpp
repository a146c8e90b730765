#pragma once

// Integer partitions and Young diagram combinatorics: conjugation,
// containment, strip addition and nested-hook families.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace supermf {

// Weakly decreasing sequence of positive integers; stored without trailing
// zeros, so equality is plain sequence equality.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Row i (0-based); 0 beyond the last row.
    int row(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Column lengths of the Young diagram.
inline Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.assign(static_cast<std::size_t>(p.row(0)), 0);
        for (int i = 0; i < p.length(); ++i)
            for (int j = 0; j < p.row(i); ++j) cols[static_cast<std::size_t>(j)]++;
    }
    return Partition(std::move(cols));
}

// True iff mu_i <= lambda_i for all i (missing parts read as 0).
inline bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.row(i) > lambda.row(i)) return false;
    return true;
}

namespace detail {

// Recursively choose new row lengths; `vertical` allows at most one added box
// per row, `horizontal` at most one added box per column (interlacing).
inline void add_strip_rec(const Partition& base, int row, int remaining, int max_length,
                          bool vertical, std::vector<int>& acc, std::set<Partition>& out) {
    if (remaining == 0) {
        // Remaining rows stay as in the base shape.
        std::vector<int> parts = acc;
        for (int i = row; i < base.length(); ++i) parts.push_back(base.row(i));
        out.insert(Partition(std::move(parts)));
        return;
    }
    if (row >= max_length) return;
    int lo = base.row(row);
    int prev = row == 0 ? std::numeric_limits<int>::max() : acc[static_cast<std::size_t>(row - 1)];
    int hi;
    if (vertical) {
        hi = std::min(lo + 1, prev);
    } else {
        // Horizontal strip: new row may not reach past the previous base row.
        int prev_base = row == 0 ? std::numeric_limits<int>::max() : base.row(row - 1);
        hi = std::min({lo + remaining, prev, prev_base});
    }
    for (int v = std::max(lo, 1); v <= hi; ++v) {
        int used = v - lo;
        if (used > remaining) break;
        acc.push_back(v);
        add_strip_rec(base, row + 1, remaining - used, max_length, vertical, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// All partitions obtained from `p` by adding `l` boxes, no two in the same
// row, with length <= max_length.
inline std::set<Partition> add_vertical_strip(const Partition& p, int l, int max_length) {
    if (l < 0) throw std::invalid_argument("strip size must be >= 0");
    std::set<Partition> out;
    if (max_length < p.length()) return out;
    std::vector<int> acc;
    detail::add_strip_rec(p, 0, l, max_length, /*vertical=*/true, acc, out);
    return out;
}

// All partitions obtained by adding `l` boxes, no two in the same column.
inline std::set<Partition> add_horizontal_strip(const Partition& p, int l, int max_length) {
    if (l < 0) throw std::invalid_argument("strip size must be >= 0");
    std::set<Partition> out;
    if (max_length < p.length()) return out;
    std::vector<int> acc;
    detail::add_strip_rec(p, 0, l, max_length, /*vertical=*/false, acc, out);
    return out;
}

enum class HookKind { SymSkew, ExtSkew };

namespace detail {

// Assemble a partition from Frobenius coordinates (arms a_i | legs b_i),
// both strictly decreasing.
inline Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
    int d = static_cast<int>(arms.size());
    std::vector<int> parts;
    for (int i = 0; i < d; ++i) parts.push_back(arms[static_cast<std::size_t>(i)] + i + 1);
    int depth = d == 0 ? 0 : legs[0] + 1;
    for (int i = d; i < depth; ++i) {
        int cnt = 0;
        for (int j = 0; j < d; ++j)
            if (legs[static_cast<std::size_t>(j)] + j + 1 > i) ++cnt;
        if (cnt == 0) break;
        parts.push_back(cnt);
    }
    return Partition(std::move(parts));
}

inline void nested_hooks_rec(int remaining, int max_r, HookKind kind,
                             std::vector<int>& rs, std::set<Partition>& out) {
    if (remaining == 0) {
        std::vector<int> arms, legs;
        for (int r : rs) {
            if (kind == HookKind::SymSkew) {
                arms.push_back(r);      // hook (r+1, r-1): arm r, leg r-1
                legs.push_back(r - 1);
            } else {
                arms.push_back(r - 1);  // hook (r, r): arm r-1, leg r
                legs.push_back(r);
            }
        }
        out.insert(from_frobenius(arms, legs));
        return;
    }
    for (int r = std::min(remaining, max_r); r >= 1; --r) {
        rs.push_back(r);
        nested_hooks_rec(remaining - r, r - 1, kind, rs, out);
        rs.pop_back();
    }
}

}  // namespace detail

// Partitions of size 2n assembled from nested hooks along the diagonal:
// SymSkew uses (r_i+1, r_i-1)-hooks, ExtSkew uses (r_i, r_i)-hooks, with the
// hook parameters summing to n.
inline std::set<Partition> nested_hooks(int n, HookKind kind) {
    if (n < 0) throw std::invalid_argument("hook total must be >= 0");
    std::set<Partition> out;
    std::vector<int> rs;
    detail::nested_hooks_rec(n, n, kind, rs, out);
    return out;
}

// All partitions of n with at most max_length rows and parts at most max_part.
inline std::vector<Partition> partitions_of(int n, int max_length = -1, int max_part = -1) {
    if (max_length < 0) max_length = n;
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int maxp, int rows_left) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        if (rows_left == 0) return;
        for (int v = std::min(remaining, maxp); v >= 1; --v) {
            acc.push_back(v);
            self(self, remaining - v, v, rows_left - 1);
            acc.pop_back();
        }
    };
    rec(rec, n, max_part, max_length);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.row(i));
    }
    s += ")";
    return s;
}

// Parses the textual form "(3,2,1)"; "()" is the empty partition.
inline Partition parse_partition(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("partition must start with '('");
    ++i;
    std::vector<int> parts;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
        std::size_t used = 0;
        int v = std::stoi(text.substr(i), &used);
        parts.push_back(v);
        i += used;
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws();
        }
    }
    if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("partition must end with ')'");
    ++i;
    skip_ws();
    if (i != text.size())
        throw std::invalid_argument("trailing characters after partition");
    return Partition(std::move(parts));
}

}  // namespace supermf
