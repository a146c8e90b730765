#pragma once

// Universal characters {lambda}, [lambda], <lambda>: Littlewood branching
// expansions and the two-column modification rule for odd orthogonal groups.

#include <map>
#include <stdexcept>
#include <string>

#include "supermf/char_engine.hpp"
#include "supermf/lr.hpp"
#include "supermf/partition.hpp"
#include "supermf/root_data.hpp"

namespace supermf {

enum class UniversalKind { Gl, Orth, Symp };

struct UniversalError : std::runtime_error {
    explicit UniversalError(const std::string& what) : std::runtime_error(what) {}
};

// Formal integer combination of universal-character labels of one kind.
// Virtual (negative) values are allowed before specialization.
struct UniversalSum {
    UniversalKind kind = UniversalKind::Gl;
    std::map<Partition, long long> terms;

    void add(const Partition& p, long long m) {
        if (m == 0) return;
        auto it = terms.find(p);
        if (it == terms.end())
            terms.emplace(p, m);
        else {
            it->second += m;
            if (it->second == 0) terms.erase(it);
        }
    }
};

// {lambda} = sum_{mu subset lambda} (sum_{beta even rows} c^lambda_{mu,beta}) [mu]
inline UniversalSum branch_to_orth(const Partition& lambda) {
    UniversalSum out;
    out.kind = UniversalKind::Orth;
    for (int k = lambda.size() % 2 == 0 ? 0 : 1; k <= lambda.size(); k += 2) {
        for (const Partition& mu : partitions_of(k, lambda.length(), lambda.row(0))) {
            if (!contains(lambda, mu)) continue;
            long long c = even_branching_coeff(lambda, mu, EvenMode::Rows);
            out.add(mu, c);
        }
    }
    return out;
}

// {lambda} = sum_{mu subset lambda} (sum_{beta even columns} c^lambda_{mu,beta}) <mu>
inline UniversalSum branch_to_symp(const Partition& lambda) {
    UniversalSum out;
    out.kind = UniversalKind::Symp;
    for (int k = lambda.size() % 2 == 0 ? 0 : 1; k <= lambda.size(); k += 2) {
        for (const Partition& mu : partitions_of(k, lambda.length(), lambda.row(0))) {
            if (!contains(lambda, mu)) continue;
            long long c = even_branching_coeff(lambda, mu, EvenMode::Columns);
            out.add(mu, c);
        }
    }
    return out;
}

// Reads each <mu> as the C_n irreducible; only valid inside the stable range.
inline FormalChar specialize_symp(const UniversalSum& s, int n) {
    if (s.kind != UniversalKind::Symp)
        throw UniversalError("specialize_symp expects a symplectic universal sum");
    GroupType g = make_group(Family::C, n);
    FormalChar out{ProductGroup(g)};
    for (const auto& [mu, m] : s.terms) {
        if (mu.length() > n)
            throw UniversalError("symplectic modification not implemented; use oracle");
        out.add(partition_to_weight(g, mu, LabelFlavor::Sp), m);
    }
    return out;
}

// True iff mu is of the form (2^c, 1^d).
inline bool is_two_column(const Partition& mu) { return mu.row(0) <= 2; }

// Modification of an over-long two-column label [2^c,1^d] for SO_m, odd m,
// with h = 2*l(mu) - m. The removed boundary strip of length h determines
// the sign: it stays inside the first column when h <= d (one column, +1)
// and wraps into the second column when h > d+1 (two columns, -1).
//   h <= d      -> +[2^c, 1^{d-h}]
//   h == d + 1  -> 0
//   h >  d + 1  -> -[2^{c-(h-d-1)}, 1^{h-d-2}]
inline std::optional<std::pair<Partition, int>> modify_two_column_orth(const Partition& mu, int m) {
    int c = 0, d = 0;
    for (int v : mu.parts()) {
        if (v == 2) ++c;
        else if (v == 1) ++d;
        else throw UniversalError("modification rule applies to two-column labels only");
    }
    int h = 2 * mu.length() - m;
    if (h <= d) {
        std::vector<int> parts(static_cast<std::size_t>(c), 2);
        parts.insert(parts.end(), static_cast<std::size_t>(d - h), 1);
        return std::make_pair(Partition(std::move(parts)), 1);
    }
    if (h == d + 1) return std::nullopt;
    int c2 = c - (h - d - 1), d2 = h - d - 2;
    if (c2 < 0) throw UniversalError("orthogonal modification beyond implemented family; use oracle");
    std::vector<int> parts(static_cast<std::size_t>(c2), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(d2), 1);
    return std::make_pair(Partition(std::move(parts)), -1);
}

// Specializes an orthogonal universal sum at odd ambient dimension m: stable
// terms pass through, over-long terms must lie in the two-column family.
inline FormalChar specialize_orth(const UniversalSum& s, int m) {
    if (s.kind != UniversalKind::Orth)
        throw UniversalError("specialize_orth expects an orthogonal universal sum");
    if (m % 2 != 1) throw UniversalError("specialize_orth handles odd ambient dimension only");
    int n = (m - 1) / 2;
    GroupType g = make_group(Family::B, n);
    FormalChar out{ProductGroup(g)};
    for (const auto& [mu, mult] : s.terms) {
        if (mu.length() <= n) {
            out.add(partition_to_weight(g, mu, LabelFlavor::So), mult);
            continue;
        }
        if (!is_two_column(mu))
            throw UniversalError("orthogonal modification beyond implemented family; use oracle");
        auto modified = modify_two_column_orth(mu, m);
        if (!modified) continue;
        if (modified->first.length() > n)
            throw UniversalError("orthogonal modification beyond implemented family; use oracle");
        out.add(partition_to_weight(g, modified->first, LabelFlavor::So), mult * modified->second);
    }
    return out;
}

// Closed form for the restriction of V(2^a, 1^b): sum_{i=0..a} [2^{a-i}, 1^b],
// with the exponent of the single-column block constant in i.
inline UniversalSum restrict_two_column_closed_form(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative block size");
    UniversalSum out;
    out.kind = UniversalKind::Orth;
    for (int i = 0; i <= a; ++i) {
        std::vector<int> parts(static_cast<std::size_t>(a - i), 2);
        parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
        out.add(Partition(std::move(parts)), 1);
    }
    return out;
}

inline std::string to_string(const UniversalSum& s) {
    if (s.terms.empty()) return "0";
    const char* open = s.kind == UniversalKind::Gl ? "{" : (s.kind == UniversalKind::Orth ? "[" : "<");
    const char* close = s.kind == UniversalKind::Gl ? "}" : (s.kind == UniversalKind::Orth ? "]" : ">");
    std::string out;
    for (const auto& [p, m] : s.terms) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        std::string body = to_string(p);
        out += open + body.substr(1, body.size() - 2) + close;
    }
    return out;
}

}  // namespace supermf
