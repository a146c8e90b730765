#include <catch2/catch_amalgamated.hpp>

#include "supermf/char_engine.hpp"
#include "supermf/root_data.hpp"

using namespace supermf;

namespace {

// count semistandard Young tableaux of shape p with entries in 1..N
long long ssyt_count(const Partition& p, int N) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(p.length()));
    for (int r = 0; r < p.length(); ++r) t[static_cast<std::size_t>(r)].assign(p.row(r), 0);
    long long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == p.length()) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= p.row(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= N; ++v) {
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            self(self, nr, nc);
        }
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace

TEST_CASE("group construction") {
    CHECK_THROWS_AS(make_group(Family::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_group(Family::A, 0), std::invalid_argument);
    CHECK(make_group(Family::G2, 0).rank == 2);
    CHECK(to_string(make_group(Family::B, 3)) == "B3");
}

TEST_CASE("positive root counts") {
    CHECK(root_system(make_group(Family::A, 3)).positive_roots.size() == 6);
    CHECK(root_system(make_group(Family::B, 4)).positive_roots.size() == 16);
    CHECK(root_system(make_group(Family::C, 3)).positive_roots.size() == 9);
    CHECK(root_system(make_group(Family::D, 5)).positive_roots.size() == 20);
    CHECK(root_system(make_group(Family::G2, 2)).positive_roots.size() == 6);
    CHECK(root_system(make_group(Family::E6, 6)).positive_roots.size() == 36);
    CHECK(root_system(make_group(Family::E7, 7)).positive_roots.size() == 63);
}

TEST_CASE("dimensions") {
    for (int k = 0; k <= 6; ++k) CHECK(dimension(make_group(Family::A, 1), {k}) == k + 1);
    CHECK(dimension(make_group(Family::B, 3), {0, 0, 1}) == 8);
    CHECK(dimension(make_group(Family::G2, 2), {1, 0}) == 7);
    CHECK(dimension(make_group(Family::C, 2), partition_to_weight(make_group(Family::C, 2), {1, 1},
                                                                  LabelFlavor::Sp)) == 5);
    CHECK(dimension(make_group(Family::B, 3), partition_to_weight(make_group(Family::B, 3),
                                                                  {1, 1, 1}, LabelFlavor::So)) == 35);
    CHECK(dimension(make_group(Family::E6, 6), {0, 1, 0, 0, 0, 0}) == 78);   // adjoint
    CHECK(dimension(make_group(Family::E7, 7), {1, 0, 0, 0, 0, 0, 0}) == 133);

    // type A dimensions against the tableau-counting oracle
    for (int rank : {1, 2, 3}) {
        GroupType g = make_group(Family::A, rank);
        for (int n = 1; n <= 6; ++n)
            for (const Partition& p : partitions_of(n, rank + 1))
                CHECK(dimension(g, partition_to_weight(g, p, LabelFlavor::Gl)) ==
                      ssyt_count(p, rank + 1));
    }
}

TEST_CASE("partition dictionaries") {
    GroupType a3 = make_group(Family::A, 3);
    CHECK(partition_to_weight(a3, {1}, LabelFlavor::Gl) == WeightVec{1, 0, 0});
    CHECK(partition_to_weight(a3, {2, 1, 1, 1}, LabelFlavor::Gl) == WeightVec{1, 0, 0});
    CHECK_THROWS_AS(partition_to_weight(a3, {1, 1, 1, 1, 1}, LabelFlavor::Gl),
                    std::invalid_argument);
    CHECK_THROWS_AS(partition_to_weight(a3, {1}, LabelFlavor::So), std::invalid_argument);

    GroupType c2 = make_group(Family::C, 2);
    CHECK(partition_to_weight(c2, {1, 1}, LabelFlavor::Sp) == WeightVec{0, 1});
    GroupType b3 = make_group(Family::B, 3);
    CHECK(partition_to_weight(b3, {1, 1, 1}, LabelFlavor::So) == WeightVec{0, 0, 2});
    GroupType d4 = make_group(Family::D, 4);
    CHECK(partition_to_weight(d4, {1, 1, 1, 1}, LabelFlavor::So) == WeightVec{0, 0, 0, 2});

    // inverse dictionary round trip on non-spin labels
    for (const auto& [g, flavor] :
         std::vector<std::pair<GroupType, LabelFlavor>>{{a3, LabelFlavor::Gl},
                                                        {c2, LabelFlavor::Sp},
                                                        {b3, LabelFlavor::So},
                                                        {d4, LabelFlavor::So}}) {
        for (int n = 0; n <= 4; ++n)
            for (const Partition& p : partitions_of(n, g.rank)) {
                auto w = partition_to_weight(g, p, flavor);
                auto back = weight_to_partition(g, w, flavor);
                REQUIRE(back.has_value());
                CHECK(*back == p);
            }
    }
    CHECK_FALSE(weight_to_partition(b3, {0, 0, 1}, LabelFlavor::So).has_value());  // spin label
}

TEST_CASE("spin labels") {
    CHECK(spin_label(make_group(Family::B, 2), Chirality::Full) == WeightVec{0, 1});
    CHECK(spin_label(make_group(Family::D, 5), Chirality::Plus) == WeightVec{0, 0, 0, 1, 0});
    CHECK(spin_label(make_group(Family::D, 5), Chirality::Minus) == WeightVec{0, 0, 0, 0, 1});
    CHECK_THROWS_AS(spin_label(make_group(Family::B, 2), Chirality::Plus), std::invalid_argument);
    CHECK_THROWS_AS(spin_label(make_group(Family::A, 2), Chirality::Full), std::invalid_argument);
}

TEST_CASE("dual weights") {
    GroupType a3 = make_group(Family::A, 3);
    CHECK(dual_weight(a3, {1, 0, 0}) == WeightVec{0, 0, 1});
    GroupType d5 = make_group(Family::D, 5);
    CHECK(dual_weight(d5, spin_label(d5, Chirality::Plus)) == spin_label(d5, Chirality::Minus));
    GroupType d4 = make_group(Family::D, 4);
    CHECK(dual_weight(d4, spin_label(d4, Chirality::Plus)) == spin_label(d4, Chirality::Plus));
    GroupType e6 = make_group(Family::E6, 6);
    CHECK(dual_weight(e6, {1, 0, 0, 0, 0, 0}) == WeightVec{0, 0, 0, 0, 0, 1});
    CHECK(dual_weight(e6, {0, 1, 0, 0, 0, 0}) == WeightVec{0, 1, 0, 0, 0, 0});
}
