#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rzformal/census.hpp"
#include "rzformal/group_report.hpp"
#include "rzformal/io.hpp"

using namespace rzformal;

namespace {

using Coeffs = std::vector<unsigned long long>;

Graph complete(int m) {
    Graph g(m);
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

// Multiply by 1/(1-t) r times, i.e. take partial sums r times.
Coeffs expand_by_partial_sums(const std::vector<std::size_t>& numerator, int r, int degree) {
    Coeffs c(static_cast<std::size_t>(degree + 1), 0);
    for (std::size_t s = 0; s < numerator.size() && s < c.size(); ++s)
        c[s] = numerator[s];
    for (int t = 0; t < r; ++t)
        for (std::size_t n = 1; n < c.size(); ++n)
            c[n] += c[n - 1];
    return c;
}

}  // namespace

TEST_CASE("coabelian reports", "[group_report]") {
    SECTION("complete graph, full subgroup") {
        auto rep = coabelian_report(complete(3), Subgroup::full(3));
        CHECK(rep.verdict() == Verdict::formal);
        CHECK(rep.cm_dimension == 3u);
        REQUIRE(rep.poincare);
        CHECK(rep.poincare->numerator == std::vector<std::size_t>{1});
        CHECK(rep.poincare->r == 3);
        CHECK(rep.poincare->expand(3) == Coeffs{1, 3, 6, 10});
        CHECK(rep.j.empty());
    }
    SECTION("4-cycle, rank-one coordinate subgroup") {
        auto rep = coabelian_report(cycle4(), Subgroup::from_strings(4, {"1000"}));
        CHECK(rep.verdict() == Verdict::formal);
        CHECK(rep.i == VertexSubset::of({1}));
        CHECK(rep.j == VertexSubset::of({2, 3, 4}));
        CHECK(rep.cm_dimension == 1u);
        REQUIRE(rep.poincare);
        CHECK(rep.poincare->numerator == std::vector<std::size_t>{1, 2, 1});
        CHECK(rep.poincare->r == 1);
        CHECK(rep.poincare->expand(4) == Coeffs{1, 3, 4, 4, 4});
    }
    SECTION("empty graph on two vertices, diagonal subgroup") {
        auto rep = coabelian_report(Graph(2), Subgroup::from_strings(2, {"11"}));
        CHECK(rep.verdict() == Verdict::not_formal);
        CHECK(rep.i == VertexSubset::of({1, 2}));
        CHECK_FALSE(rep.cm_dimension);
        CHECK_FALSE(rep.poincare);
        CHECK(betti_sum_oracle(clique_complex(Graph(2)), rep.i).betti_totals ==
              std::pair<std::size_t, std::size_t>{0, 2});
    }
    SECTION("mismatched ambient dimension") {
        CHECK_THROWS_AS(coabelian_report(cycle4(), Subgroup(3)), Error);
    }
}

TEST_CASE("Poincare series", "[group_report]") {
    auto simplex = poincare_series(SimplicialComplex::simplex(4), 4);
    CHECK(simplex.numerator == std::vector<std::size_t>{1});

    auto two_points = poincare_series(SimplicialComplex::from_facets(2, {{1}, {2}}), 1);
    CHECK(two_points.numerator == std::vector<std::size_t>{1, 1});
    CHECK(two_points.expand(3) == Coeffs{1, 2, 2, 2});

    auto square = poincare_series(SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), 0);
    CHECK(square.numerator == std::vector<std::size_t>{1, 2, 1});
    CHECK(square.expand(4) == Coeffs{1, 2, 1, 0, 0});

    CHECK(square.coefficient(-1) == 0);
    CHECK_THROWS_AS(poincare_series(SimplicialComplex::simplex(1), -1), Error);
}

TEST_CASE("report invariants on random graphs and subgroups", "[group_report][property]") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + trial % 6;
        auto g = oracle::random_graph(m, rng);
        auto a = oracle::random_subgroup(m, rng);
        auto rep = coabelian_report(g, a);
        auto k = clique_complex(g);

        REQUIRE(rep.i == hull(a));
        REQUIRE((rep.i | rep.j) == VertexSubset::full(m));
        REQUIRE_FALSE(rep.i.intersects(rep.j));
        REQUIRE(rep.commuting_pairs == g.edges());
        REQUIRE(rep.cm_dimension.has_value() == (rep.verdict() == Verdict::formal));
        REQUIRE(rep.poincare.has_value() == rep.cm_dimension.has_value());
        REQUIRE(rep.verdict() == betti_sum_oracle(k, rep.i).verdict);

        // Γ_I complete iff I is a face of the clique complex
        bool clique = true;
        auto iv = rep.i.vertices();
        for (std::size_t x = 0; x < iv.size(); ++x)
            for (std::size_t y = x + 1; y < iv.size(); ++y)
                clique = clique && g.has_edge(iv[x], iv[y]);
        REQUIRE(clique == k.contains(rep.i));
        if (!clique)
            REQUIRE(rep.verdict() == Verdict::not_formal);

        if (rep.cm_dimension) {
            REQUIRE(*rep.cm_dimension == a.rank());
            REQUIRE(*rep.cm_dimension == static_cast<std::size_t>(m) - corank(a));
            // numerator is the real Betti table, read off the brute-force
            // cohomology of full subcomplexes
            std::vector<std::size_t> by_scan(static_cast<std::size_t>(m) + 2, 0);
            for_each_submask(full_mask(m), [&](Mask j) {
                auto sub = full_subcomplex(k, VertexSubset(j));
                auto b = oracle::reduced_betti(sub);
                for (std::size_t d = 0; d < b.size(); ++d)
                    if (b[d] != 0)
                        by_scan[d] += b[d];  // H̃^{d-1}(K_J) lands in degree d
            });
            while (by_scan.size() > 1 && by_scan.back() == 0)
                by_scan.pop_back();
            REQUIRE(rep.poincare->numerator == by_scan);
            REQUIRE(rep.poincare->expand(8) == expand_by_partial_sums(by_scan, rep.poincare->r, 8));
        }
    }
}

TEST_CASE("report JSON keys", "[group_report][io]") {
    auto j = to_json(coabelian_report(cycle4(), Subgroup::from_strings(4, {"1000"})));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"gamma", "A", "I", "J", "presentation", "G_semidirect", "verdict",
                                           "method", "witness", "cm_dimension", "poincare"});
    CHECK(j["G_semidirect"]["normal_closure_on"] == Json::array({1}));
    CHECK(j["G_semidirect"]["commutator_on"] == Json::array({2, 3, 4}));
    CHECK(j["poincare"]["numerator"] == Json::array({1, 2, 1}));
    CHECK(j["poincare"]["r"] == 1);
    CHECK(j["cm_dimension"] == 1);

    auto bad = to_json(coabelian_report(Graph(2), Subgroup::from_strings(2, {"11"})));
    CHECK(bad["verdict"] == "not_formal");
    CHECK(bad["cm_dimension"].is_null());
    CHECK(bad["poincare"].is_null());
}
