#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <thread>

#include "supermf/cache.hpp"
#include "supermf/verify.hpp"

using namespace supermf;

namespace {

std::filesystem::path temp_dir(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() / ("supermf-test-" + tag);
    std::filesystem::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("disk cache") {
    DiskCache cache(temp_dir("cache"));
    std::map<WeightVec, long long> value{{{1, 0}, 2}, {{0, 1}, 1}};

    CHECK_FALSE(cache.get("some-key").has_value());
    cache.put("some-key", value);
    auto got = cache.get("some-key");
    REQUIRE(got.has_value());
    CHECK(*got == value);

    // a different key with the same hash bucket prefix misses
    CHECK_FALSE(cache.get("other-key").has_value());

    // locate the file backing a key
    auto file_of = [&](const std::string& key) {
        for (auto& p : std::filesystem::recursive_directory_iterator(cache.dir())) {
            if (!p.is_regular_file()) continue;
            std::ifstream in(p.path());
            nlohmann::json j;
            try {
                in >> j;
            } catch (...) {
                continue;
            }
            if (j.contains("key") && j["key"] == key) return p.path();
        }
        return std::filesystem::path();
    };

    // corrupt entries read as misses
    cache.put("corrupt-me", value);
    {
        std::ofstream rw(file_of("corrupt-me"));
        rw << "{ not json";
    }
    CHECK_FALSE(cache.get("corrupt-me").has_value());

    // version mismatch invalidates
    cache.put("versioned", value);
    {
        auto path = file_of("versioned");
        std::ifstream in(path);
        nlohmann::json j;
        in >> j;
        in.close();
        j["version"] = "stale";
        std::ofstream rw(path);
        rw << j.dump();
    }
    CHECK_FALSE(cache.get("versioned").has_value());

    // concurrent readers during writes observe either a miss or the full value
    DiskCache shared(temp_dir("cache-conc"));
    std::atomic<bool> bad{false};
    std::thread writer([&] {
        for (int i = 0; i < 50; ++i) shared.put("k", value);
    });
    std::thread reader([&] {
        for (int i = 0; i < 200; ++i) {
            auto v = shared.get("k");
            if (v && *v != value) bad = true;
        }
    });
    writer.join();
    reader.join();
    CHECK_FALSE(bad.load());
}

TEST_CASE("harness reports failures with diffs") {
    // a stubbed engine that returns the degree-3 component for degree 2
    std::vector<SuiteCase> cases;
    cases.push_back({"stub-dual", "explicit formulas for the homogeneous components", [] {
                         ProductGroup g({make_group(Family::A, 1), make_group(Family::A, 1)});
                         FormalChar module(g);
                         module.add({1, 1}, 1);
                         FormalChar wrong = sym_power(module, 3);
                         CaseResult r;
                         r.expected = to_string(duality_sym(2, 2, 2));
                         r.computed = to_string(wrong);
                         r.pass = duality_sym(2, 2, 2) == wrong;
                         return r;
                     }});
    SuiteReport rep = run_cases("stubbed", cases);
    CHECK_FALSE(rep.all_pass);
    REQUIRE(rep.cases.size() == 1);
    CHECK_FALSE(rep.cases[0].pass);
    CHECK(rep.cases[0].expected != rep.cases[0].computed);
    CHECK(rep.to_text().find("FAIL") != std::string::npos);
    CHECK(rep.to_json()["overall"] == "fail");

    // exceptions inside a case are recorded, not thrown
    std::vector<SuiteCase> throwing;
    throwing.push_back({"boom", "", []() -> CaseResult { throw std::runtime_error("boom"); }});
    SuiteReport rep2 = run_cases("throwing", throwing);
    CHECK_FALSE(rep2.all_pass);
    CHECK(rep2.cases[0].computed.find("boom") != std::string::npos);
}

TEST_CASE("suite lookup") {
    CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
    CHECK(suite_names().size() == 10);
}

TEST_CASE("reports deterministic") {
    SuiteReport a = run_suite("lemma-big-mama");
    SuiteReport b = run_suite("lemma-big-mama", 2);
    CHECK(a.all_pass);
    CHECK(b.all_pass);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());

    // every case carries its anchor string
    for (const auto& c : a.cases) CHECK_FALSE(c.anchor.empty());
}

TEST_CASE("cached and uncached runs agree") {
    auto dir = temp_dir("suite-cache");
    set_disk_cache(std::make_shared<DiskCache>(dir));
    SuiteReport cold = run_suite("three-factor");
    SuiteReport warm = run_suite("three-factor");
    set_disk_cache(nullptr);
    SuiteReport off = run_suite("three-factor");
    CHECK(cold.to_json(false).dump() == warm.to_json(false).dump());
    CHECK(cold.to_json(false).dump() == off.to_json(false).dump());
}
