// JSON encodings of complexes, graphs, subgroups, Betti tables and reports.
//
//   complex   {"m": 4, "facets": [[1,2],[2,3]]}       vertices 1-indexed
//   graph     {"m": 4, "edges": [[1,2],[2,3]]}
//   subgroup  {"m": 3, "generators": ["110","011"]}   char k <-> coordinate k

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "rzformal/cohomology.hpp"
#include "rzformal/f2.hpp"
#include "rzformal/formality.hpp"
#include "rzformal/group_report.hpp"
#include "rzformal/moment_angle.hpp"
#include "rzformal/simplicial.hpp"

namespace rzformal {

using Json = nlohmann::ordered_json;

namespace detail {

inline int read_m(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.at("m").is_number_integer())
        throw Error("expected an object with integer field \"m\"");
    int m = j.at("m").get<int>();
    if (m < 0 || m > kMaxVertices)
        throw Error("\"m\" out of range: " + std::to_string(m));
    return m;
}

inline std::vector<int> read_vertex_list(const Json& j, int m) {
    if (!j.is_array())
        throw Error("expected an array of vertex labels");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw Error("vertex labels must be integers");
        int x = v.get<int>();
        if (x < 1 || x > m)
            throw Error("vertex " + std::to_string(x) + " outside 1.." + std::to_string(m));
        out.push_back(x);
    }
    return out;
}

}  // namespace detail

inline Json vertex_list(VertexSubset s) { return Json(s.vertices()); }

inline VertexSubset parse_vertex_list(const Json& j, int m) {
    return VertexSubset::of(detail::read_vertex_list(j, m));
}

inline Json to_json(const SimplicialComplex& k) {
    Json facets = Json::array();
    for (Mask f : k.facets())
        facets.push_back(vertex_list(VertexSubset(f)));
    return Json{{"m", k.m()}, {"facets", facets}};
}

inline SimplicialComplex complex_from_json(const Json& j) {
    int m = detail::read_m(j);
    if (!j.contains("facets") || !j.at("facets").is_array())
        throw Error("complex needs a \"facets\" array");
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets"))
        facets.push_back(detail::read_vertex_list(f, m));
    return SimplicialComplex::from_facets(m, facets);
}

inline Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(Json::array({u, v}));
    return Json{{"m", g.m()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
    int m = detail::read_m(j);
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw Error("graph needs an \"edges\" array");
    Graph g(m);
    for (const auto& e : j.at("edges")) {
        auto ends = detail::read_vertex_list(e, m);
        if (ends.size() != 2)
            throw Error("each edge must list exactly two vertices");
        g.add_edge(ends[0], ends[1]);
    }
    return g;
}

inline Json to_json(const Subgroup& a) {
    Json gens = Json::array();
    for (const auto& r : a.basis().row_vectors())
        gens.push_back(r.to_string());
    return Json{{"m", a.m()}, {"generators", gens}};
}

inline Subgroup subgroup_from_json(const Json& j) {
    int m = detail::read_m(j);
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw Error("subgroup needs a \"generators\" array");
    std::vector<BitVector> gens;
    for (const auto& g : j.at("generators")) {
        if (!g.is_string())
            throw Error("generators must be bit strings");
        auto s = g.get<std::string>();
        if (s.size() != static_cast<std::size_t>(m))
            throw Error("generator \"" + s + "\" does not have length " + std::to_string(m));
        gens.push_back(BitVector::from_string(s));
    }
    return Subgroup(m, gens);
}

inline Json to_json(const BettiTable& t) {
    return Json{{"min_degree", t.min_degree}, {"dims", t.dims}};
}

inline Json to_json(const SpaceBettiTable& t) {
    return Json{{"min_degree", 0}, {"dims", t.dims}, {"total", t.total()}};
}

inline Json to_json(const Witness& w) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MissingEdgeWitness>)
                return Json{{"kind", "missing_edge"},
                            {"edge", Json::array({x.j1, x.j2})},
                            {"vertex", x.i}};
            else if constexpr (std::is_same_v<T, RestrictionWitness>)
                return Json{{"kind", "nontrivial_restriction"}, {"J", vertex_list(x.j)}};
            else if constexpr (std::is_same_v<T, NotAFaceWitness>)
                return Json{{"kind", "not_a_face"}, {"I", vertex_list(x.i)}};
            else
                return Json{{"kind", "betti_totals"}, {"fixed", x.fixed}, {"ambient", x.ambient}};
        },
        w);
}

inline Json to_json(const FormalityReport& r) {
    Json out{{"verdict", to_string(r.verdict)},
             {"method", to_string(r.method)},
             {"hull", vertex_list(r.hull)},
             {"witness", nullptr},
             {"totals", nullptr}};
    if (r.witness)
        out["witness"] = to_json(*r.witness);
    if (r.betti_totals)
        out["totals"] = Json{{"fixed", r.betti_totals->first}, {"ambient", r.betti_totals->second}};
    return out;
}

inline Json to_json(const PoincareSeries& p) {
    return Json{{"numerator", p.numerator}, {"r", p.r}};
}

inline Json to_json(const GroupReport& rep) {
    Json commuting = Json::array();
    for (auto [u, v] : rep.commuting_pairs)
        commuting.push_back(Json::array({u, v}));
    return Json{
        {"gamma", to_json(rep.gamma)},
        {"A", to_json(rep.a)},
        {"I", vertex_list(rep.i)},
        {"J", vertex_list(rep.j)},
        {"presentation",
         Json{{"generators", rep.gamma.m()},
              {"relations", "g_i^2 = 1 for every generator; g_i g_j = g_j g_i for each commuting pair"},
              {"commuting_pairs", commuting}}},
        {"G_semidirect",
         Json{{"normal_closure_on", vertex_list(rep.i)}, {"commutator_on", vertex_list(rep.j)}}},
        {"verdict", to_string(rep.verdict())},
        {"method", to_string(rep.formality.method)},
        {"witness", rep.formality.witness ? to_json(*rep.formality.witness) : Json(nullptr)},
        {"cm_dimension", rep.cm_dimension ? Json(*rep.cm_dimension) : Json(nullptr)},
        {"poincare", rep.poincare ? to_json(*rep.poincare) : Json(nullptr)},
    };
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(path + ": malformed JSON: " + e.what());
    }
}

}  // namespace rzformal
