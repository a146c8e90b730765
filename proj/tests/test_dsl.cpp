#include <catch2/catch_amalgamated.hpp>

#include "supermf/dsl.hpp"

using namespace supermf;

namespace {

const char* kExample = R"(# three factors
diagram "example-graph"
group G1 = SL(4)
group G2 = SL(2)
group G3 = SO(7)
even U1 = G1:std * G2:std
odd W1 = G2:std * G3:std
)";

}  // namespace

TEST_CASE("parse example graph") {
    RepDiagram d = parse_diagram(kExample);
    CHECK(d.name == "example-graph");
    REQUIRE(d.factor_count() == 3);
    CHECK(d.factors[0] == make_group(Family::A, 3));
    CHECK(d.factors[1] == make_group(Family::A, 1));
    CHECK(d.factors[2] == make_group(Family::B, 3));
    REQUIRE(d.submodule_count() == 2);
    CHECK_FALSE(d.submodules[0].odd);
    CHECK(d.submodules[0].weights == std::vector<WeightVec>{{1, 0, 0}, {1}, {0, 0, 0}});
    CHECK(d.submodules[1].odd);
    CHECK(d.submodules[1].weights == std::vector<WeightVec>{{0, 0, 0}, {1}, {1, 0, 0}});
    CHECK(d.connected());
}

TEST_CASE("weight forms") {
    RepDiagram d = parse_diagram(
        "diagram \"forms\"\n"
        "group A = SL(3)\n"
        "group C = Sp(4)\n"
        "even U = A:[1,1] * C:part(1,1)\n"
        "odd W = A:part(2,1) * C:triv ^*\n");
    CHECK(d.submodules[0].weights[0] == WeightVec{1, 1});
    CHECK(d.submodules[0].weights[1] == WeightVec{0, 1});
    CHECK(d.submodules[1].weights[0] == WeightVec{1, 1});
    CHECK(d.submodules[1].weights[1] == WeightVec{0, 0});
    CHECK(d.submodules[1].dual);

    // std on SO(3) is the vector representation [2]
    RepDiagram so3 = parse_diagram(
        "diagram \"so3\"\ngroup B = SO(3)\ngroup A = SL(2)\nodd W = B:std * A:std\n");
    CHECK(so3.submodules[0].weights[0] == WeightVec{2});

    // Spin groups make std the spin label; minus selects the other chirality
    RepDiagram spins = parse_diagram(
        "diagram \"spins\"\n"
        "group P = Spin(10)\n"
        "group M = Spin(10)-\n"
        "group B = Spin(7)\n"
        "even U = P:std\n"
        "even V = M:std\n"
        "odd W = B:std\n");
    CHECK(spins.submodules[0].weights[0] == WeightVec{0, 0, 0, 1, 0});
    CHECK(spins.submodules[1].weights[1] == WeightVec{0, 0, 0, 0, 1});
    CHECK(spins.submodules[2].weights[2] == WeightVec{0, 0, 1});
}

TEST_CASE("errors carry spans") {
    // missing submodules
    try {
        parse_diagram("diagram \"x\"\ngroup G = SL(2)\n");
        FAIL("expected error");
    } catch (const DslError& e) {
        CHECK(e.message() == "at least one submodule required");
    }

    // weight arity with a usable span
    std::string bad =
        "diagram \"x\"\ngroup G1 = SL(4)\neven U = G1:[1,0]\n";
    try {
        parse_diagram(bad);
        FAIL("expected error");
    } catch (const DslError& e) {
        CHECK(e.message() == "weight length 2 != rank 3");
        CHECK(e.span().line == 3);
        CHECK(e.span().byte_start < e.span().byte_end);
        CHECK(e.span().byte_end <= bad.size());
    }

    CHECK_THROWS_WITH(parse_diagram("diagram \"x\"\ngroup G = SO(4)\nodd W = G:std\n"),
                      Catch::Matchers::ContainsSubstring("SO(2n) requires n >= 3"));
    CHECK_THROWS_WITH(parse_diagram("diagram \"x\"\ngroup G = SL(2)\neven U = H:std\n"),
                      Catch::Matchers::ContainsSubstring("unknown factor name 'H'"));
    CHECK_THROWS_WITH(parse_diagram("diagram \"x\"\ngroup G = SL(2)\neven U = G:triv\n"),
                      Catch::Matchers::ContainsSubstring("acts trivially"));
    CHECK_THROWS_AS(parse_diagram("group G = SL(2)\n"), DslError);
    CHECK_THROWS_WITH(parse_diagram("diagram \"x\"\ngroup G = Spin(7)-\nodd W = G:std\n"),
                      Catch::Matchers::ContainsSubstring("chirality sign applies to Spin(2n)"));
    CHECK_THROWS_WITH(parse_diagram("diagram \"x\"\ngroup G = SL(2)\ngroup G = SL(3)\nodd W = G:std\n"),
                      Catch::Matchers::ContainsSubstring("duplicate factor name"));
    CHECK_THROWS_WITH(parse_diagram("diagram \"x\"\ngroup G = SL(2)\nodd W = G:part(1,2)\n"),
                      Catch::Matchers::ContainsSubstring("weakly decreasing"));
}

TEST_CASE("render round trip") {
    RepDiagram d = parse_diagram(kExample);
    std::string text = render_diagram(d);
    RepDiagram back = parse_diagram(text);
    CHECK(back.factors == d.factors);
    CHECK(back.factor_names == d.factor_names);
    CHECK(back.submodules.size() == d.submodules.size());
    for (std::size_t i = 0; i < d.submodules.size(); ++i) {
        CHECK(back.submodules[i].odd == d.submodules[i].odd);
        CHECK(back.submodules[i].weights == d.submodules[i].weights);
        CHECK(back.submodules[i].dual == d.submodules[i].dual);
    }
    // render(parse(render)) is idempotent
    CHECK(render_diagram(back) == text);

    // dual mark renders as trailing ^*
    RepDiagram dd = parse_diagram("diagram \"d\"\ngroup G = SL(2)\nodd W = G:std^*\n");
    CHECK(render_diagram(dd).find("G:std^*") != std::string::npos);

    // CRLF input accepted
    RepDiagram crlf = parse_diagram("diagram \"c\"\r\ngroup G = SL(2)\r\neven U = G:std\r\n");
    CHECK(crlf.factor_count() == 1);
}
