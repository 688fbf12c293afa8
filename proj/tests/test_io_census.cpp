#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "rzformal/census.hpp"
#include "rzformal/io.hpp"

using namespace rzformal;

namespace {

std::string joined(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines)
        out += l + "\n";
    return out;
}

}  // namespace

TEST_CASE("complex JSON round trip", "[io]") {
    auto j = Json::parse(R"({"m": 4, "facets": [[2,3],[1,2],[3,4],[1,4],[1]]})");
    auto k = complex_from_json(j);
    CHECK(k.facets().size() == 4);
    // facets sorted by bitmask: {1,2}=3, {2,3}=6, {1,4}=9, {3,4}=12
    CHECK(to_json(k).dump() == R"({"m":4,"facets":[[1,2],[2,3],[1,4],[3,4]]})");
    CHECK(complex_from_json(to_json(k)) == k);
}

TEST_CASE("graph and subgroup JSON", "[io]") {
    auto g = graph_from_json(Json::parse(R"({"m": 3, "edges": [[2,3],[1,2]]})"));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(to_json(g).dump() == R"({"m":3,"edges":[[1,2],[2,3]]})");

    auto a = subgroup_from_json(Json::parse(R"({"m": 3, "generators": ["011", "110", "101"]})"));
    CHECK(a.rank() == 2);
    CHECK(subgroup_from_json(to_json(a)) == a);
}

TEST_CASE("malformed inputs are rejected", "[io]") {
    auto bad = [](const char* text) { return Json::parse(text); };
    CHECK_THROWS_AS(complex_from_json(bad(R"({"facets": [[1]]})")), Error);
    CHECK_THROWS_AS(complex_from_json(bad(R"({"m": 2, "facets": [[1,3]]})")), Error);
    CHECK_THROWS_AS(complex_from_json(bad(R"({"m": 2, "facets": [["a"]]})")), Error);
    CHECK_THROWS_AS(complex_from_json(bad(R"({"m": -1, "facets": []})")), Error);
    CHECK_THROWS_AS(graph_from_json(bad(R"({"m": 2, "edges": [[1,1]]})")), Error);
    CHECK_THROWS_AS(graph_from_json(bad(R"({"m": 3, "edges": [[1,2,3]]})")), Error);
    CHECK_THROWS_AS(subgroup_from_json(bad(R"({"m": 3, "generators": ["10"]})")), Error);
    CHECK_THROWS_AS(subgroup_from_json(bad(R"({"m": 2, "generators": ["1x"]})")), Error);
    CHECK_THROWS_AS(read_json_file("/nonexistent/complex.json"), Error);
}

TEST_CASE("report JSON", "[io]") {
    auto k = complex_from_json(Json::parse(R"({"m": 3, "facets": [[1],[2],[3]]})"));
    auto j = to_json(flag_criterion(k, VertexSubset::of({1})));
    CHECK(j["verdict"] == "not_formal");
    CHECK(j["method"] == "flag_criterion");
    CHECK(j["witness"]["kind"] == "missing_edge");
    CHECK(j["witness"]["edge"] == Json::array({2, 3}));
    CHECK(j["witness"]["vertex"] == 1);

    auto totals = to_json(betti_sum_oracle(k, VertexSubset::of({1})));
    CHECK(totals["totals"]["fixed"] == 4);
    CHECK(totals["totals"]["ambient"] == 6);

    CHECK(to_json(hochster_real_betti(k))["dims"] == Json::array({1, 5}));
    CHECK(to_json(hochster_real_betti(k))["total"] == 6);
}

TEST_CASE("census record counts", "[census]") {
    auto flag2 = run_census(2, 2, CensusMode::flag, 1);
    CHECK(flag2.size() == 8);
    auto flag3 = run_census(3, 3, CensusMode::flag, 1);
    CHECK(flag3.size() == 64);
    auto all2 = run_census(2, 2, CensusMode::all_complexes, 1);
    CHECK(all2.size() == 8);
    for (const auto* batch : {&flag2, &flag3, &all2})
        for (const auto& line : *batch)
            REQUIRE(Json::parse(line)["agree"] == true);

    CHECK(enumerate_graphs(4).size() == 64);
    // downward-closed families with every singleton: 2, 9, 114 for m = 2, 3, 4
    CHECK(enumerate_complexes(2).size() == 2);
    CHECK(enumerate_complexes(3).size() == 9);
    CHECK(enumerate_complexes(4).size() == 114);
}

TEST_CASE("census record layout", "[census]") {
    auto lines = run_census(2, 2, CensusMode::flag, 1);
    CHECK(lines.front() ==
          R"({"m":2,"facets":[[1],[2]],"is_flag":true,"I":[],"verdict_flag":"formal",)"
          R"("verdict_general":"formal","verdict_oracle":"formal","verdict_torus":"formal",)"
          R"("betti_total_ambient":2,"betti_total_fixed":2,"agree":true})");
    auto non_flag = run_census(3, 3, CensusMode::all_complexes, 1);
    bool saw_null = false;
    for (const auto& l : non_flag) {
        auto j = Json::parse(l);
        if (!j["is_flag"].get<bool>()) {
            saw_null = true;
            REQUIRE(j["verdict_flag"].is_null());
        }
    }
    CHECK(saw_null);
}

TEST_CASE("census output does not depend on the worker count", "[census]") {
    CHECK(joined(run_census(1, 4, CensusMode::flag, 1)) == joined(run_census(1, 4, CensusMode::flag, 8)));
    CHECK(joined(run_census(3, 3, CensusMode::all_complexes, 1)) ==
          joined(run_census(3, 3, CensusMode::all_complexes, 3)));
}

TEST_CASE("census caps", "[census]") {
    CHECK_THROWS_AS(census_complexes(5, CensusMode::all_complexes), Error);
    CHECK_THROWS_AS(census_complexes(0, CensusMode::flag), Error);
}

TEST_CASE("verify", "[census]") {
    auto text = joined(run_census(3, 3, CensusMode::flag, 1));
    {
        std::istringstream in(text);
        auto r = verify_census(in);
        CHECK(r.ok());
        CHECK(r.records == 64);
    }
    {
        // flip the oracle verdict on line 5
        std::istringstream src(text);
        std::string out, line;
        for (int n = 1; std::getline(src, line); ++n) {
            if (n == 5) {
                auto j = Json::parse(line);
                j["verdict_oracle"] = j["verdict_oracle"] == "formal" ? "not_formal" : "formal";
                line = j.dump();
            }
            out += line + "\n";
        }
        std::istringstream in(out);
        auto r = verify_census(in);
        REQUIRE(r.problems.size() == 1);
        CHECK(r.problems[0].first == 5);
    }
    {
        std::istringstream in("{\"m\":2,\"facets\":[[1],[2]],\"I\":[1]}\nnot json\n");
        auto r = verify_census(in);
        REQUIRE(r.problems.size() == 2);
        CHECK(r.problems[0].first == 1);
        CHECK(r.problems[1].first == 2);
    }
    {
        std::istringstream in("");
        auto r = verify_census(in);
        CHECK(r.ok());
        CHECK(r.records == 0);
    }
}
