#include <catch2/catch_amalgamated.hpp>

#include "supermf/formulas.hpp"

using namespace supermf;

namespace {

WeightVec aw(int n, const Partition& p) {
    return partition_to_weight(sl_group(n), p, LabelFlavor::Gl);
}

WeightVec pair_w(int n, int m, const Partition& a, const Partition& b) {
    WeightVec w = aw(n, a);
    WeightVec wb = aw(m, b);
    w.insert(w.end(), wb.begin(), wb.end());
    return w;
}

}  // namespace

TEST_CASE("duality") {
    auto d = duality_sym(2, 2, 2);
    CHECK(d.terms == std::map<WeightVec, long long>{{pair_w(2, 2, {2}, {2}), 1},
                                                    {pair_w(2, 2, {1, 1}, {1, 1}), 1}});
    CHECK(duality_sym(3, 4, 0).terms ==
          std::map<WeightVec, long long>{{WeightVec(2 + 3, 0), 1}});
    CHECK(duality_sym_partitions(2, 3, 3) ==
          std::vector<Partition>{{2, 1}, {3}});

    auto s = duality_skew(2, 2, 2);
    CHECK(s.terms == std::map<WeightVec, long long>{{pair_w(2, 2, {2}, {1, 1}), 1},
                                                    {pair_w(2, 2, {1, 1}, {2}), 1}});
    // top degree: a single term V(m^n) x V(n^m)
    auto top = duality_skew(2, 3, 6);
    CHECK(top.terms == std::map<WeightVec, long long>{{pair_w(2, 3, {3, 3}, {2, 2, 2}), 1}});
    CHECK(duality_skew_partitions(2, 3, 3) ==
          std::vector<Partition>{{2, 1}, {3}});
    CHECK_THROWS_AS(duality_skew(2, 2, 5), std::invalid_argument);
}

TEST_CASE("two-row module plethysms") {
    CHECK(sym_power_S2_partitions(2, 2) == std::vector<Partition>{{2, 2}, {4}});
    CHECK(sym_power_S2(5, 0).total_dimension() == 1);
    CHECK(sym_power_L2_partitions(4, 2) == std::vector<Partition>{{1, 1, 1, 1}, {2, 2}});
    CHECK(ext_power_S2_partitions(3, 2) == std::vector<Partition>{{3, 1}});
    CHECK(ext_power_L2_partitions(4, 2) == std::vector<Partition>{{2, 1, 1}});
    CHECK(ext_power_S2(5, 0).total_dimension() == 1);
    CHECK(ext_power_L2(5, 0).total_dimension() == 1);

    // oracle spot checks: dimensions
    CHECK(ext_power_S2(3, 2).total_dimension() == 15);   // wedge^2 of S^2 C^3
    CHECK(ext_power_L2(4, 2).total_dimension() == 15);   // wedge^2 of wedge^2 C^4
}

TEST_CASE("exterior square of S^k C^2") {
    CHECK(ext2_symk_sl2(3).terms == std::map<WeightVec, long long>{{{4}, 1}, {{0}, 1}});
    CHECK(ext2_symk_sl2(1).terms == std::map<WeightVec, long long>{{{0}, 1}});
    CHECK(ext2_symk_sl2(4).terms == std::map<WeightVec, long long>{{{6}, 1}, {{2}, 1}});
    for (int k = 1; k <= 8; ++k) {
        long long total = ext2_symk_sl2(k).total_dimension();
        CHECK(total == (k + 1) * k / 2);  // C(k+1, 2)
    }
    CHECK_THROWS_AS(ext2_symk_sl2(0), std::invalid_argument);
}
