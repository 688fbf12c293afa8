// Reduced simplicial cohomology over F2.
//
// Everything runs on the augmented cochain complex, so the empty face sits in
// degree -1:
//   H̃^{-1}({∅}) = F2,  H̃^*(void) = 0,  H̃^{-1}(K) = 0 once K has a vertex.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "rzformal/f2.hpp"
#include "rzformal/simplicial.hpp"

namespace rzformal {

/// Degree-indexed F2 dimensions starting at min_degree.
struct BettiTable {
    int min_degree = -1;
    std::vector<std::size_t> dims;

    std::size_t operator[](int degree) const {
        int i = degree - min_degree;
        return (i < 0 || i >= static_cast<int>(dims.size())) ? 0 : dims[static_cast<std::size_t>(i)];
    }
    int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }

    std::size_t total() const {
        std::size_t t = 0;
        for (auto d : dims)
            t += d;
        return t;
    }
    bool is_zero() const { return total() == 0; }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int d = min_degree; d <= max_degree(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>((*this)[d]);
        return chi;
    }

    bool operator==(const BettiTable&) const = default;
};

/// Augmented simplicial cochain complex of a complex over F2.
///
/// Bases in each degree are the faces of that dimension ordered by mask.
class CochainComplex {
  public:
    explicit CochainComplex(const SimplicialComplex& k) : top_(k.dimension()) {
        if (k.is_void())
            return;
        faces_.resize(static_cast<std::size_t>(top_ + 2));
        index_.resize(faces_.size());
        for (Mask f : k.faces()) {
            auto slot = static_cast<std::size_t>(std::popcount(f));
            index_[slot].emplace(f, faces_[slot].size());
            faces_[slot].push_back(f);
        }
    }

    bool is_void() const { return faces_.empty(); }

    /// Highest degree carrying cochains (-2 for the void complex).
    int top_degree() const { return top_; }

    const std::vector<Mask>& faces(int degree) const {
        static const std::vector<Mask> none;
        auto slot = degree + 1;
        if (slot < 0 || slot >= static_cast<int>(faces_.size()))
            return none;
        return faces_[static_cast<std::size_t>(slot)];
    }

    std::size_t dimension(int degree) const { return faces(degree).size(); }

    /// Index of a face of the given degree in its basis, or -1.
    long index_of(int degree, Mask face) const {
        auto slot = degree + 1;
        if (slot < 0 || slot >= static_cast<int>(index_.size()))
            return -1;
        const auto& idx = index_[static_cast<std::size_t>(slot)];
        auto it = idx.find(face);
        return it == idx.end() ? -1 : static_cast<long>(it->second);
    }

    /// Boundary matrix from degree d to d-1: row per d-face, column per
    /// (d-1)-face. Its right kernel (as a map on (d-1)-cochains) gives the
    /// (d-1)-cocycles; its columns are the coboundaries of (d-1)-faces.
    F2Matrix boundary(int degree) const {
        F2Matrix mat(dimension(degree - 1));
        for (Mask f : faces(degree)) {
            BitVector row(dimension(degree - 1));
            for (Mask rest = f; rest != 0; rest &= rest - 1) {
                Mask sub = f & ~(rest & (~rest + 1));
                row.set(static_cast<std::size_t>(index_of(degree - 1, sub)));
            }
            mat.push_row(std::move(row));
        }
        return mat;
    }

    /// Basis of the d-cocycles, as vectors over the d-faces.
    F2Matrix cocycles(int degree) const {
        if (dimension(degree) == 0)
            return F2Matrix(0);
        return kernel_basis(boundary(degree + 1));
    }

    /// Spanning set of the d-coboundaries, as vectors over the d-faces.
    F2Matrix coboundaries(int degree) const {
        if (dimension(degree) == 0)
            return F2Matrix(0);
        if (dimension(degree - 1) == 0)
            return F2Matrix(dimension(degree));
        return boundary(degree).transpose();
    }

  private:
    int top_;
    std::vector<std::vector<Mask>> faces_;
    std::vector<std::unordered_map<Mask, std::size_t>> index_;
};

/// Reduced F2 Betti numbers, degrees -1 .. dim k.
inline BettiTable reduced_betti(const SimplicialComplex& k) {
    BettiTable table;
    if (k.is_void())
        return table;
    CochainComplex cochains(k);
    const int top = cochains.top_degree();
    // rank of the boundary map out of each degree, degrees -1 .. top
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d)
        boundary_rank[static_cast<std::size_t>(d + 1)] = rank(cochains.boundary(d));
    for (int d = -1; d <= top; ++d) {
        std::size_t n = cochains.dimension(d);
        std::size_t out_rank = boundary_rank[static_cast<std::size_t>(d + 1)];
        std::size_t in_rank = boundary_rank[static_cast<std::size_t>(d + 2)];
        table.dims.push_back(n - out_rank - in_rank);
    }
    while (!table.dims.empty() && table.dims.back() == 0)
        table.dims.pop_back();
    return table;
}

/// True iff H̃^*(k) -> H̃^*(K_sub) vanishes in every degree, where K_sub is
/// the full subcomplex of k on `sub`.
/// Whether the inclusion of a subcomplex sub ⊆ k induces the zero map
/// H̃*(k) -> H̃*(sub).
inline bool inclusion_is_trivial(const SimplicialComplex& k, const SimplicialComplex& sub) {
    if (k.is_void() || sub.is_void())
        return true;
    for (Mask f : sub.faces())
        if (!k.contains(f))
            throw Error("inclusion requires a subcomplex");
    CochainComplex source(k);
    CochainComplex target(sub);
    for (int d = -1; d <= source.top_degree(); ++d) {
        if (target.dimension(d) == 0)
            continue;
        F2Matrix z = source.cocycles(d);
        if (z.rows() == 0)
            continue;
        EchelonBasis exact(target.dimension(d));
        F2Matrix b = target.coboundaries(d);
        for (const auto& row : b.row_vectors())
            exact.insert(row);
        const auto& source_faces = source.faces(d);
        for (const auto& cocycle : z.row_vectors()) {
            BitVector image(target.dimension(d));
            for (std::size_t i = 0; i < source_faces.size(); ++i) {
                if (!cocycle.test(i))
                    continue;
                long at = target.index_of(d, source_faces[i]);
                if (at >= 0)
                    image.set(static_cast<std::size_t>(at));
            }
            if (!exact.contains(image))
                return false;
        }
    }
    return true;
}

inline bool restriction_is_trivial(const SimplicialComplex& k, VertexSubset sub) {
    if (!sub.is_subset_of(k.vertices()))
        throw Error("restriction set must consist of vertices of the complex");
    return inclusion_is_trivial(k, full_subcomplex(k, sub));
}

}  // namespace rzformal
