// Graphs and simplicial complexes on labelled vertex sets.

#pragma once

#include <algorithm>
#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "rzformal/vertex_set.hpp"

namespace rzformal {

/// Simple graph on the vertices 1..m.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int m) : m_(m), adjacency_(static_cast<std::size_t>(std::max(m, 0)), 0) {
        if (m < 0 || m > kMaxVertices)
            throw Error("vertex count out of range: " + std::to_string(m));
    }
    Graph(int m, const std::vector<std::pair<int, int>>& edges) : Graph(m) {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    void add_edge(int u, int v) {
        if (u < 1 || u > m_ || v < 1 || v > m_)
            throw Error("edge endpoint out of range");
        if (u == v)
            throw Error("graph loops are not allowed");
        Mask& nu = adjacency_[static_cast<std::size_t>(u - 1)];
        if (nu & vertex_bit(v))
            throw Error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        nu |= vertex_bit(v);
        adjacency_[static_cast<std::size_t>(v - 1)] |= vertex_bit(u);
    }

    int m() const { return m_; }
    bool has_edge(int u, int v) const {
        return (adjacency_[static_cast<std::size_t>(u - 1)] & vertex_bit(v)) != 0;
    }
    /// Neighbourhood of v as a mask.
    Mask neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }

    /// Edges as sorted pairs (u < v), lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= m_; ++u)
            for (int v = u + 1; v <= m_; ++v)
                if (has_edge(u, v))
                    out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph&) const = default;

  private:
    int m_ = 0;
    std::vector<Mask> adjacency_;
};

/// Finite simplicial complex with faces stored as vertex masks.
///
/// The labels range over 1..m and the complex lives on an ambient vertex set
/// (a subset of 1..m; all of it for top-level complexes). An ambient vertex
/// whose singleton is not a face is a ghost vertex. The void complex has no
/// faces at all and is distinct from {∅}.
class SimplicialComplex {
  public:
    /// {∅} on the ambient set 1..m.
    SimplicialComplex() : SimplicialComplex(0, std::vector<Mask>{0}) {}

    /// Complex generated by `generators` (any faces; non-maximal ones are
    /// dropped) on ambient set 1..m.
    SimplicialComplex(int m, std::vector<Mask> generators)
        : SimplicialComplex(m, VertexSubset::full(m), std::move(generators)) {}

    SimplicialComplex(int m, VertexSubset ambient, std::vector<Mask> generators)
        : m_(m), ambient_(ambient), facets_(std::move(generators)) {
        if (m < 0 || m > kMaxVertices)
            throw Error("vertex count out of range: " + std::to_string(m));
        if (!ambient.is_subset_of(VertexSubset::full(m)))
            throw Error("ambient set exceeds 1..m");
        for (Mask f : facets_)
            if ((f & ~ambient.bits()) != 0)
                throw Error("face uses a vertex outside the ambient set");
        canonicalize();
    }

    /// Builds from 1-indexed vertex lists.
    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets) {
        std::vector<Mask> masks;
        masks.reserve(facets.size());
        for (const auto& f : facets) {
            for (int v : f)
                if (v < 1 || v > m)
                    throw Error("facet vertex out of range: " + std::to_string(v));
            masks.push_back(VertexSubset::of(f).bits());
        }
        return SimplicialComplex(m, std::move(masks));
    }

    static SimplicialComplex void_complex(int m) {
        return void_complex(m, VertexSubset::full(m));
    }
    static SimplicialComplex void_complex(int m, VertexSubset ambient) {
        return SimplicialComplex(m, ambient, {});
    }

    static SimplicialComplex simplex(int m) { return SimplicialComplex(m, {full_mask(m)}); }

    int m() const { return m_; }
    VertexSubset ambient() const { return ambient_; }
    bool is_void() const { return facets_.empty(); }

    /// Maximal faces, sorted by mask.
    const std::vector<Mask>& facets() const { return facets_; }

    /// All faces (including ∅ unless void), sorted by mask.
    const std::vector<Mask>& faces() const { return faces_; }

    bool contains(Mask face) const {
        return std::binary_search(faces_.begin(), faces_.end(), face);
    }
    bool contains(VertexSubset face) const { return contains(face.bits()); }

    /// Ambient vertices whose singleton is a face.
    VertexSubset vertices() const {
        Mask out = 0;
        for (Mask f : facets_)
            out |= f;
        return VertexSubset(out);
    }
    VertexSubset ghosts() const { return ambient_ - vertices(); }

    /// Dimension of the largest face; -1 for {∅}, -2 for the void complex.
    int dimension() const {
        int d = -2;
        for (Mask f : facets_)
            d = std::max(d, std::popcount(f) - 1);
        return d;
    }

    /// Faces of dimension d (|σ| = d + 1), sorted by mask.
    std::vector<Mask> faces_of_dimension(int d) const {
        std::vector<Mask> out;
        for (Mask f : faces_)
            if (std::popcount(f) == d + 1)
                out.push_back(f);
        return out;
    }

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && ambient_ == o.ambient_ && facets_ == o.facets_;
    }

  private:
    void canonicalize() {
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
        std::vector<Mask> maximal;
        for (Mask f : facets_) {
            bool dominated = std::any_of(facets_.begin(), facets_.end(), [f](Mask g) {
                return g != f && (f & ~g) == 0;
            });
            if (!dominated)
                maximal.push_back(f);
        }
        facets_ = std::move(maximal);

        for (Mask f : facets_)
            for_each_submask(f, [this](Mask s) { faces_.push_back(s); });
        std::sort(faces_.begin(), faces_.end());
        faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    }

    int m_ = 0;
    VertexSubset ambient_;
    std::vector<Mask> facets_;
    std::vector<Mask> faces_;
};

namespace detail {

// Bron-Kerbosch with pivoting over masks.
inline void maximal_cliques(const Graph& g, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    Mask px = p | x;
    int pivot = std::countr_zero(px) + 1;
    Mask candidates = p & ~g.neighbours(pivot);
    for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest) + 1;
        Mask nv = g.neighbours(v);
        maximal_cliques(g, r | vertex_bit(v), p & nv, x & nv, out);
        p &= ~vertex_bit(v);
        x |= vertex_bit(v);
    }
}

}  // namespace detail

/// Clique complex of g restricted to the vertex set `on` (all of 1..m by default).
inline SimplicialComplex clique_complex(const Graph& g, VertexSubset on) {
    std::vector<Mask> cliques;
    if (on.empty()) {
        cliques.push_back(0);
    } else {
        Graph restricted(g.m());
        for (auto [u, v] : g.edges())
            if (on.contains(u) && on.contains(v))
                restricted.add_edge(u, v);
        detail::maximal_cliques(restricted, 0, on.bits(), 0, cliques);
    }
    return SimplicialComplex(g.m(), std::move(cliques));
}

inline SimplicialComplex clique_complex(const Graph& g) {
    return clique_complex(g, VertexSubset::full(g.m()));
}

/// 1-skeleton of k as a graph on 1..m.
inline Graph underlying_graph(const SimplicialComplex& k) {
    Graph g(k.m());
    for (Mask f : k.faces())
        if (std::popcount(f) == 2) {
            int u = std::countr_zero(f) + 1;
            int v = 64 - std::countl_zero(f);
            g.add_edge(u, v);
        }
    return g;
}

/// K_J: faces of k contained in j, on ambient set j.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSubset j) {
    if (!j.is_subset_of(k.ambient()))
        throw Error("full subcomplex vertex set exceeds the ambient set");
    if (k.is_void())
        return SimplicialComplex::void_complex(k.m(), j);
    std::vector<Mask> restricted;
    restricted.reserve(k.facets().size());
    for (Mask f : k.facets())
        restricted.push_back(f & j.bits());
    return SimplicialComplex(k.m(), j, std::move(restricted));
}

/// lk_K(σ) on ambient set ambient(k) ∖ σ.
inline SimplicialComplex link(const SimplicialComplex& k, VertexSubset sigma) {
    if (!k.contains(sigma))
        throw Error("not a face");
    std::vector<Mask> gens;
    for (Mask f : k.facets())
        if ((sigma.bits() & ~f) == 0)
            gens.push_back(f & ~sigma.bits());
    return SimplicialComplex(k.m(), k.ambient() - sigma, std::move(gens));
}

/// Faces of k not containing sigma. Deleting ∅ leaves the void complex;
/// deleting a non-face leaves k unchanged.
inline SimplicialComplex deletion(const SimplicialComplex& k, VertexSubset sigma) {
    std::vector<Mask> keep;
    for (Mask f : k.faces())
        if ((sigma.bits() & ~f) != 0)
            keep.push_back(f);
    return SimplicialComplex(k.m(), k.ambient(), std::move(keep));
}

/// Pairs {u, v} of non-ghost vertices that are not an edge of k, lexicographic.
inline std::vector<std::pair<int, int>> missing_edges(const SimplicialComplex& k) {
    std::vector<std::pair<int, int>> out;
    const auto verts = k.vertices().vertices();
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (!k.contains(vertex_bit(verts[a]) | vertex_bit(verts[b])))
                out.emplace_back(verts[a], verts[b]);
    return out;
}

inline bool is_flag(const SimplicialComplex& k) {
    if (k.is_void())
        return true;
    SimplicialComplex cliques = clique_complex(underlying_graph(k), k.vertices());
    return cliques.faces() == k.faces();
}

}  // namespace rzformal
