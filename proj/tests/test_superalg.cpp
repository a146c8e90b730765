#include <catch2/catch_amalgamated.hpp>

#include "supermf/diagram.hpp"

using namespace supermf;

namespace {

WeightVec pw(const GroupType& g, const Partition& p) {
    LabelFlavor f = g.family == Family::A ? LabelFlavor::Gl
                    : g.family == Family::C ? LabelFlavor::Sp
                                            : LabelFlavor::So;
    return partition_to_weight(g, p, f);
}

RepDiagram two_module(const GroupType& g, const WeightVec& even, const WeightVec& odd) {
    RepDiagram d;
    d.factors = {g};
    d.submodules.push_back({false, {even}, false, "U1"});
    d.submodules.push_back({true, {odd}, false, "W1"});
    return d;
}

}  // namespace

TEST_CASE("graded components") {
    GroupType c3 = make_group(Family::C, 3);
    RepDiagram d = two_module(c3, pw(c3, {1}), pw(c3, {1}));

    auto zero = graded_component(d, {0, 0});
    CHECK(zero.terms == std::map<WeightVec, long long>{{{0, 0, 0}, 1}});

    auto comp = graded_component(d, {2, 2});
    std::map<WeightVec, long long> expect{{pw(c3, {2}), 2},
                                          {pw(c3, {2, 1, 1}), 1},
                                          {pw(c3, {1, 1}), 1},
                                          {pw(c3, {3, 1}), 1}};
    CHECK(comp.terms == expect);

    // dimension bookkeeping: sum mult*dim == product of binomials
    // dim S^2(C^6) = 21, dim wedge^2(C^6) = 15
    CHECK(comp.total_dimension() == 21 * 15);

    // exterior degree above the dimension gives the zero component
    GroupType a1 = make_group(Family::A, 1);
    RepDiagram d2 = two_module(a1, {1}, {1});
    CHECK(graded_component(d2, {0, 3}).terms.empty());

    CHECK_THROWS_AS(graded_component(d, {1}), std::invalid_argument);
}

TEST_CASE("super MF verdicts") {
    GroupType g2 = make_group(Family::G2, 2);
    RepDiagram dg = two_module(g2, {1, 0}, {1, 0});
    auto v = is_super_mf(dg, 3);
    REQUIRE_FALSE(v.mf);
    CHECK(v.bound == 3);
    CHECK(v.witness->index == MultiIndex{1, 2});
    CHECK(v.witness->label == WeightVec{1, 0});
    CHECK(v.witness->multiplicity == 2);

    // parallel evaluation returns the same witness
    auto vp = is_super_mf(dg, 3, 2);
    CHECK(vp.witness->index == v.witness->index);
    CHECK(vp.witness->label == v.witness->label);

    // SL2 x SL2, even std (x) std, odd std on the second factor: MF
    GroupType a1 = make_group(Family::A, 1);
    RepDiagram db;
    db.factors = {a1, a1};
    db.submodules.push_back({false, {{1}, {1}}, false, "U1"});
    db.submodules.push_back({true, {{0}, {1}}, false, "W1"});
    CHECK(is_super_mf(db, 4).mf);

    CHECK_THROWS_AS(is_super_mf(db, 0), std::invalid_argument);
}

TEST_CASE("subdiagrams") {
    GroupType a1 = make_group(Family::A, 1);

    RepDiagram single;
    single.factors = {a1};
    single.submodules.push_back({false, {{1}}, false, "U1"});
    auto subs = subdiagrams(single);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].submodule_count() == 1);

    // two disconnected submodules: the two singletons plus the pair
    GroupType a2 = make_group(Family::A, 2);
    RepDiagram disc;
    disc.factors = {a1, a2};
    disc.submodules.push_back({false, {{1}, {0, 0}}, false, "U1"});
    disc.submodules.push_back({false, {{0}, {1, 0}}, false, "U2"});
    auto parts = subdiagrams(disc);
    REQUIRE(parts.size() == 3);
    int singletons = 0, pairs = 0;
    for (const auto& p : parts) {
        if (p.submodule_count() == 1 && p.factor_count() == 1) ++singletons;
        if (p.submodule_count() == 2 && p.factor_count() == 2) ++pairs;
    }
    CHECK(singletons == 2);
    CHECK(pairs == 1);

    // the example-graph diagram contains the SL2 x SO7 subdiagram
    GroupType a3 = make_group(Family::A, 3), b3 = make_group(Family::B, 3);
    RepDiagram ex;
    ex.factors = {a3, a1, b3};
    ex.submodules.push_back({false, {{1, 0, 0}, {1}, {0, 0, 0}}, false, "U1"});
    ex.submodules.push_back({true, {{0, 0, 0}, {1}, {1, 0, 0}}, false, "W1"});
    bool found = false;
    for (const auto& p : subdiagrams(ex)) {
        if (p.factor_count() == 2 && p.submodule_count() == 2 &&
            p.factors[0] == a1 && p.factors[1] == b3 && !p.submodules[0].odd &&
            p.submodules[1].odd)
            found = true;
    }
    CHECK(found);
    CHECK(ex.connected());
    CHECK_FALSE(disc.connected());
}

TEST_CASE("dual flips") {
    GroupType a2 = make_group(Family::A, 2);
    RepDiagram d;
    d.factors = {a2};
    d.submodules.push_back({false, {{1, 0}}, false, "U1"});
    d.submodules.push_back({true, {{1, 0}}, false, "W1"});

    auto once = dual_flip(d, 0);
    CHECK(once.submodules[0].dual);
    auto twice = dual_flip(once, 0);
    CHECK_FALSE(twice.submodules[0].dual);
    CHECK_THROWS_AS(dual_flip(d, 5), std::out_of_range);

    // flipping a self-dual module leaves every component unchanged
    GroupType c2 = make_group(Family::C, 2);
    RepDiagram ds = two_module(c2, pw(c2, {1}), pw(c2, {1}));
    auto flipped = dual_flip(ds, 1);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            CHECK(graded_component(ds, {i, j}) == graded_component(flipped, {i, j}));

    // flipping the standard of SL_n preserves the verdict
    RepDiagram db;
    db.factors = {a2, make_group(Family::A, 1)};
    db.submodules.push_back({false, {{1, 0}, {0}}, false, "U1"});
    db.submodules.push_back({true, {{1, 0}, {1}}, false, "W1"});
    CHECK(is_super_mf(db, 4).mf == is_super_mf(dual_flip(db, 0), 4).mf);
    CHECK(is_super_mf(db, 4).mf == is_super_mf(dual_flip(db, 1), 4).mf);
}

TEST_CASE("validation") {
    RepDiagram bad;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.factors = {make_group(Family::A, 1)};
    CHECK_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("at least one submodule"));
    bad.submodules.push_back({false, {{0}}, false, "U1"});
    CHECK_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("trivially"));
    bad.submodules[0].weights = {{1, 0}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
