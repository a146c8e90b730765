#include <catch2/catch_amalgamated.hpp>

#include "supermf/char_engine.hpp"

using namespace supermf;

namespace {

FormalChar irr(const ProductGroup& g, const WeightVec& w) {
    FormalChar c(g);
    c.add(w, 1);
    return c;
}

// coefficientwise check of sum_n dim S^n(rep) t^n == prod_w (1-t)^{-mult(w)}
std::vector<long long> sym_series(const FormalChar& rep, int deg) {
    std::vector<long long> out;
    for (int n = 0; n <= deg; ++n) out.push_back(sym_power(rep, n).total_dimension());
    return out;
}

}  // namespace

TEST_CASE("weight multiplicities") {
    GroupType a1 = make_group(Family::A, 1);
    for (int k : {1, 3, 5}) {
        auto ws = weight_multiplicities(a1, {k});
        CHECK(ws.total() == k + 1);
        for (int v = -k; v <= k; v += 2) CHECK(ws.entries.at({v}) == 1);
    }
    GroupType g2 = make_group(Family::G2, 2);
    auto adj = weight_multiplicities(g2, {0, 1});
    CHECK(adj.total() == 14);
    CHECK(adj.entries.at({0, 0}) == 2);
    GroupType b3 = make_group(Family::B, 3);
    auto spin = weight_multiplicities(b3, {0, 0, 1});
    CHECK(spin.total() == 8);
    for (const auto& [w, m] : spin.entries) CHECK(m == 1);

    // Weyl symmetry: reflecting through any simple root permutes the multiset
    for (const auto& [g, w] : std::vector<std::pair<GroupType, WeightVec>>{
             {g2, {1, 1}}, {b3, {1, 0, 1}}, {make_group(Family::C, 2), {2, 1}}}) {
        auto ws = weight_multiplicities(g, w);
        const RootSystem& rs = root_system(g);
        for (int i = 0; i < rs.rank; ++i) {
            CharMap reflected;
            for (const auto& [v, m] : ws.entries) {
                WeightVec r = v;
                int coeff = v[static_cast<std::size_t>(i)];
                for (int j = 0; j < rs.rank; ++j)
                    r[static_cast<std::size_t>(j)] -=
                        coeff * rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                reflected[r] += m;
            }
            CHECK(reflected == ws.entries);
        }
    }
}

TEST_CASE("decompose") {
    GroupType a2 = make_group(Family::A, 2);
    auto adj = weight_multiplicities(a2, {1, 1});
    auto dec = decompose(adj);
    CHECK(dec.terms == std::map<WeightVec, long long>{{{1, 1}, 1}});

    GroupType a1 = make_group(Family::A, 1);
    WeightMultiset ws;
    ws.group = ProductGroup(a1);
    ws.entries[{2}] = 1;
    ws.entries[{0}] = 2;
    ws.entries[{-2}] = 1;
    CHECK(decompose(ws).terms == std::map<WeightVec, long long>{{{2}, 1}, {{0}, 1}});

    // C3 standard (x) standard = <2> + <1,1> + <0>
    GroupType c3 = make_group(Family::C, 3);
    auto t = tensor(c3, {1, 0, 0}, {1, 0, 0});
    CHECK(t.terms == std::map<WeightVec, long long>{{{2, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 0}, 1}});

    // tensoring with the trivial label is the identity
    auto unit = tensor(c3, {2, 1, 0}, {0, 0, 0});
    CHECK(unit.terms == std::map<WeightVec, long long>{{{2, 1, 0}, 1}});

    // smallest Clebsch-Gordan instance
    auto cg = tensor(make_group(Family::A, 1), {1}, {1});
    CHECK(cg.terms == std::map<WeightVec, long long>{{{2}, 1}, {{0}, 1}});

    // a dominant inner weight that is lexicographically above the highest
    // weight must not confuse the stripping order
    GroupType a3 = make_group(Family::A, 3);
    auto hard = decompose(weight_multiplicities(a3, {1, 0, 2}));
    CHECK(hard.terms == std::map<WeightVec, long long>{{{1, 0, 2}, 1}});

    // virtual input is rejected with the labeled error
    WeightMultiset bad;
    bad.group = ProductGroup(a1);
    bad.entries[{2}] = 1;  // missing the rest of the V(2) string
    CHECK_THROWS_WITH(decompose(bad), Catch::Matchers::ContainsSubstring("not a true character"));
}

TEST_CASE("adams") {
    GroupType a1 = make_group(Family::A, 1);
    auto std1 = weight_multiplicities(a1, {1});
    CHECK(adams(std1, 1).entries == std1.entries);
    auto sq = adams(std1, 2);
    CHECK(sq.entries == CharMap{{{2}, 1}, {{-2}, 1}});
    GroupType a2 = make_group(Family::A, 2);
    auto tripled = adams(weight_multiplicities(a2, {1, 0}), 3);
    CHECK(tripled.entries.size() == 3);
    for (const auto& [w, m] : tripled.entries) CHECK(m == 1);
}

TEST_CASE("powers") {
    GroupType a1 = make_group(Family::A, 1);
    ProductGroup a1a1({a1, a1});

    CHECK(sym_power(irr(a1a1, {1, 1}), 0).terms ==
          std::map<WeightVec, long long>{{{0, 0}, 1}});
    CHECK(ext_power(irr(a1a1, {1, 1}), 2).terms ==
          std::map<WeightVec, long long>{{{2, 0}, 1}, {{0, 2}, 1}});
    CHECK(ext_power(irr(ProductGroup(a1), {3}), 2).terms ==
          std::map<WeightVec, long long>{{{4}, 1}, {{0}, 1}});

    // top exterior power is one dimensional; beyond it everything vanishes
    FormalChar rep = irr(ProductGroup(a1), {2});  // 3-dimensional
    CHECK(ext_power(rep, 3).total_dimension() == 1);
    CHECK(ext_power(rep, 4).terms.empty());
    CHECK(ext_power(rep, 5).terms.empty());

    // binomial bookkeeping for a product-group module
    GroupType c2 = make_group(Family::C, 2);
    ProductGroup g({c2, a1});
    FormalChar module = irr(g, {1, 0, 1});  // 4 x 2 = 8 dimensional
    for (int n = 0; n <= 4; ++n) {
        long long dim_sym = sym_power(module, n).total_dimension();
        long long dim_ext = ext_power(module, n).total_dimension();
        long long binom_sym = 1, binom_ext = 1;
        for (int i = 0; i < n; ++i) {
            binom_sym = binom_sym * (8 + i) / (i + 1);
            binom_ext = binom_ext * (8 - i) / (i + 1);
        }
        CHECK(dim_sym == binom_sym);
        CHECK(dim_ext == binom_ext);
    }

    // generating-series identity for symmetric powers up to degree 5:
    // the n-th coefficient of prod_w (1-t)^{-mult(w)} is dim S^n
    FormalChar small = irr(ProductGroup(a1), {1});
    small.add({0}, 1);  // reducible: 2 + 1 dimensional
    auto dims = sym_series(small, 5);
    std::vector<long long> poly{1, 0, 0, 0, 0, 0};
    for (int copies = 0; copies < 3; ++copies) {  // dim 3 total, each (1-t)^{-1}
        std::vector<long long> next(poly.size(), 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t j = i; j < poly.size(); ++j) next[j] += poly[i];
        poly = next;
    }
    for (std::size_t i = 0; i < dims.size(); ++i) CHECK(dims[i] == poly[i]);
}

TEST_CASE("restriction") {
    auto r = restrict_classical(3, ClassicalTarget::So, {2, 1});
    CHECK(r.terms == std::map<WeightVec, long long>{{{2}, 1}, {{4}, 1}});
    CHECK(r.total_dimension() == 8);

    for (int m : {5, 6, 7, 8}) {
        auto s = restrict_classical(m, ClassicalTarget::So, {1});
        CHECK(s.terms.size() == 1);
        CHECK(s.total_dimension() == m);
    }
    auto sp = restrict_classical(6, ClassicalTarget::Sp, {3, 2});
    GroupType c3 = make_group(Family::C, 3);
    std::map<WeightVec, long long> expect;
    for (auto p : {Partition{3, 2}, Partition{2, 1}, Partition{1}})
        expect[partition_to_weight(c3, p, LabelFlavor::Sp)] = 1;
    CHECK(sp.terms == expect);
    CHECK_THROWS_AS(restrict_classical(5, ClassicalTarget::Sp, {1}), std::invalid_argument);
}

TEST_CASE("product characters") {
    GroupType a1 = make_group(Family::A, 1);
    FormalChar x{ProductGroup(a1)};
    x.add({2}, 2);
    FormalChar y{ProductGroup(a1)};
    y.add({1}, 1);
    y.add({3}, 1);
    auto p = product_char({x, y});
    CHECK(p.group.size() == 2);
    CHECK(p.terms == std::map<WeightVec, long long>{{{2, 1}, 2}, {{2, 3}, 2}});
    CHECK(p.total_dimension() == x.total_dimension() * y.total_dimension());
}
