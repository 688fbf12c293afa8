#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rzformal/census.hpp"
#include "rzformal/formality.hpp"

using namespace rzformal;

namespace {

SimplicialComplex points(int m) {
    std::vector<std::vector<int>> f;
    for (int v = 1; v <= m; ++v)
        f.push_back({v});
    return SimplicialComplex::from_facets(m, f);
}

SimplicialComplex cycle4() {
    return SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
}

using Totals = std::pair<std::size_t, std::size_t>;

}  // namespace

TEST_CASE("flag criterion", "[formality]") {
    SECTION("4-cycle, I = {1}") {
        auto r = flag_criterion(cycle4(), VertexSubset::of({1}));
        CHECK(r.formal());
        CHECK_FALSE(r.witness);
    }
    SECTION("three points, I = {1}") {
        auto r = flag_criterion(points(3), VertexSubset::of({1}));
        CHECK_FALSE(r.formal());
        REQUIRE(r.witness);
        CHECK(std::get<MissingEdgeWitness>(*r.witness) == MissingEdgeWitness{2, 3, 1});
    }
    SECTION("simplex, every I") {
        auto k = SimplicialComplex::simplex(4);
        for_each_submask(full_mask(4), [&](Mask i) { CHECK(flag_criterion(k, VertexSubset(i)).formal()); });
    }
    SECTION("two points, I = {1,2}") {
        auto r = flag_criterion(points(2), VertexSubset::of({1, 2}));
        CHECK_FALSE(r.formal());
        CHECK(std::get<NotAFaceWitness>(*r.witness).i == VertexSubset::of({1, 2}));
    }
    SECTION("non-flag input is rejected") {
        CHECK_THROWS_WITH(flag_criterion(triangle_boundary(), VertexSubset::of({1})),
                          "flag criterion requires flag complex");
    }
}

TEST_CASE("general criterion", "[formality]") {
    CHECK(general_criterion(triangle_boundary(), VertexSubset::of({1})).formal());
    CHECK(general_criterion(triangle_boundary(), VertexSubset::of({1, 2})).formal());
    auto r = general_criterion(points(3), VertexSubset::of({1}));
    CHECK_FALSE(r.formal());
    CHECK(std::get<RestrictionWitness>(*r.witness).j == VertexSubset::of({1, 2, 3}));

    // the flag path 2-1-3 with I = {1}: formal even though K_{2,3} is disconnected
    auto path = SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}});
    CHECK(general_criterion(path, VertexSubset::of({1})).formal());
    CHECK(flag_criterion(path, VertexSubset::of({1})).formal());
    CHECK(betti_sum_oracle(path, VertexSubset::of({1})).formal());

    // an edge plus a point, I = {1,2}: every K_{J∖I} is a point or {∅}, but
    // deleting the edge from K_{1,2,3} leaves three points and the map on
    // H̃^0 survives
    auto edge_point = SimplicialComplex::from_facets(3, {{1, 2}, {3}});
    auto ep = general_criterion(edge_point, VertexSubset::of({1, 2}));
    CHECK_FALSE(ep.formal());
    CHECK(std::get<RestrictionWitness>(*ep.witness).j == VertexSubset::of({1, 2, 3}));
    CHECK(betti_sum_oracle(edge_point, VertexSubset::of({1, 2})).betti_totals == Totals{2, 4});
    CHECK_FALSE(flag_criterion(edge_point, VertexSubset::of({1, 2})).formal());
}

TEST_CASE("ghost vertices are rejected at the top level", "[formality]") {
    SimplicialComplex with_ghost(2, std::vector<Mask>{vertex_bit(1)});
    CHECK_THROWS_AS(general_criterion(with_ghost, VertexSubset()), Error);
    CHECK_THROWS_AS(betti_sum_oracle(with_ghost, VertexSubset()), Error);
    CHECK_THROWS_AS(general_criterion(points(2), VertexSubset::of({3})), Error);
}

TEST_CASE("Betti-sum oracle", "[formality]") {
    auto r = betti_sum_oracle(cycle4(), VertexSubset::of({1}));
    CHECK(r.formal());
    CHECK(r.betti_totals == Totals{4, 4});

    r = betti_sum_oracle(points(3), VertexSubset::of({1}));
    CHECK_FALSE(r.formal());
    CHECK(r.betti_totals == Totals{4, 6});
    CHECK(std::get<BettiTotalsWitness>(*r.witness) == BettiTotalsWitness{4, 6});

    for (const auto& k : {cycle4(), points(3), triangle_boundary()}) {
        r = betti_sum_oracle(k, VertexSubset());
        CHECK(r.formal());
        CHECK(r.betti_totals->first == r.betti_totals->second);
    }
}

TEST_CASE("torus oracle", "[formality]") {
    auto r = torus_oracle(triangle_boundary(), VertexSubset::of({1, 2}));
    CHECK(r.formal());
    CHECK(r.betti_totals == Totals{2, 2});

    // Z_K = S3 with no fixed points
    r = torus_oracle(points(2), VertexSubset::of({1, 2}));
    CHECK_FALSE(r.formal());
    CHECK(r.betti_totals == Totals{0, 2});

    CHECK(torus_oracle(SimplicialComplex::simplex(3), VertexSubset::full(3)).formal());
}

TEST_CASE("decide through the coordinate hull", "[formality]") {
    auto edge = SimplicialComplex::simplex(2);
    auto diagonal = Subgroup::from_strings(2, {"11"});
    auto r = decide(edge, diagonal);
    CHECK(r.formal());
    CHECK(r.hull == VertexSubset::of({1, 2}));
    CHECK(betti_sum_oracle(edge, r.hull).betti_totals == Totals{1, 1});

    r = decide(points(2), diagonal);
    CHECK_FALSE(r.formal());
    CHECK(r.hull == VertexSubset::of({1, 2}));
    CHECK(betti_sum_oracle(points(2), r.hull).betti_totals == Totals{0, 2});

    CHECK(decide(cycle4(), Subgroup(4)).formal());
    CHECK(decide(triangle_boundary(), Subgroup::from_strings(3, {"110"})).method ==
          Method::general_criterion);
    CHECK_THROWS_AS(decide(cycle4(), Subgroup(3)), Error);
}

TEST_CASE("all deciders agree on flag complexes up to 4 vertices", "[formality][exhaustive]") {
    for (int m = 1; m <= 4; ++m)
        for (const auto& g : enumerate_graphs(m)) {
            auto k = clique_complex(g);
            OracleContext ctx(k);
            for_each_submask(full_mask(m), [&](Mask bits) {
                VertexSubset i(bits);
                auto flag = flag_criterion(k, i).verdict;
                REQUIRE(general_criterion(k, i).verdict == flag);
                REQUIRE(betti_sum_oracle(ctx, i).verdict == flag);
                REQUIRE(torus_oracle(ctx, i).verdict == flag);
            });
        }
}

TEST_CASE("general criterion and oracles agree on all complexes up to 4 vertices",
          "[formality][exhaustive]") {
    for (int m = 1; m <= 4; ++m)
        for (const auto& k : enumerate_complexes(m)) {
            OracleContext ctx(k);
            for_each_submask(full_mask(m), [&](Mask bits) {
                VertexSubset i(bits);
                auto oracle = betti_sum_oracle(ctx, i);
                REQUIRE(general_criterion(k, i).verdict == oracle.verdict);
                REQUIRE(torus_oracle(ctx, i).verdict == oracle.verdict);
                if (i.empty())
                    REQUIRE(oracle.formal());
                if (!k.contains(i))
                    REQUIRE_FALSE(oracle.formal());
            });
        }
}

TEST_CASE("verdict depends only on the hull", "[formality][property]") {
    std::mt19937_64 rng(8675309);
    for (int trial = 0; trial < 150; ++trial) {
        int m = 2 + trial % 5;
        auto k = trial % 2 == 0 ? clique_complex(oracle::random_graph(m, rng))
                                : oracle::random_complex(m, rng);
        auto a = oracle::random_subgroup(m, rng);
        auto coordinate = Subgroup::coordinate(m, hull(a));
        REQUIRE(decide(k, a).verdict == decide(k, coordinate).verdict);
        REQUIRE(decide(k, a).verdict == betti_sum_oracle(k, hull(a)).verdict);
    }
}

TEST_CASE("vertexwise restatement of the missing-edge condition", "[formality][exhaustive]") {
    // For flag K: I ∈ K and, for each i ∈ I, every missing edge avoiding i has
    // both ends adjacent to i.
    for (int m = 1; m <= 4; ++m)
        for (const auto& g : enumerate_graphs(m)) {
            auto k = clique_complex(g);
            for_each_submask(full_mask(m), [&](Mask bits) {
                VertexSubset i(bits);
                bool restated = k.contains(i);
                for (int v : i.vertices())
                    for (auto [j1, j2] : missing_edges(k))
                        if (v != j1 && v != j2)
                            restated = restated && g.has_edge(v, j1) && g.has_edge(v, j2);
                REQUIRE(restated == general_criterion(k, i).formal());
            });
        }
}

TEST_CASE("witnesses come first in lexicographic order", "[formality]") {
    // six isolated points: first violation is the missing edge {2,3} with i = 1
    auto r = flag_criterion(points(6), VertexSubset::of({1}));
    CHECK(std::get<MissingEdgeWitness>(*r.witness) == MissingEdgeWitness{2, 3, 1});
    // four points, I = {4}: violations are the J ∋ 4 with |J| >= 3, and
    // {1,2,3,4} precedes {1,2,4} lexicographically
    auto g = general_criterion(points(4), VertexSubset::of({4}));
    CHECK(std::get<RestrictionWitness>(*g.witness).j == VertexSubset::of({1, 2, 3, 4}));
}
