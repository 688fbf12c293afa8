// Real and complex moment-angle complexes: Betti numbers via Hochster's
// decomposition, and an explicit cubical model of RZ_K = (D^1, S^0)^K inside
// [-1, 1]^m for direct computation.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rzformal/cohomology.hpp"
#include "rzformal/f2.hpp"
#include "rzformal/simplicial.hpp"

namespace rzformal {

/// Largest ambient vertex count accepted by the Hochster sums.
inline constexpr int kHochsterMaxVertices = 20;

/// Default largest m for building cubical models.
inline constexpr int kDefaultCubicalCap = 8;

/// Hard limit imposed by the packed cell encoding.
inline constexpr int kCubicalMaxVertices = 21;

/// Betti numbers of a space, degrees 0 .. max.
struct SpaceBettiTable {
    std::vector<std::size_t> dims;

    std::size_t operator[](int degree) const {
        return (degree < 0 || degree >= static_cast<int>(dims.size()))
                   ? 0
                   : dims[static_cast<std::size_t>(degree)];
    }
    std::size_t total() const {
        std::size_t t = 0;
        for (auto d : dims)
            t += d;
        return t;
    }
    void add(int degree, std::size_t amount) {
        if (amount == 0)
            return;
        if (degree >= static_cast<int>(dims.size()))
            dims.resize(static_cast<std::size_t>(degree + 1), 0);
        dims[static_cast<std::size_t>(degree)] += amount;
    }
    bool operator==(const SpaceBettiTable&) const = default;
};

namespace detail {

inline void require_hochster_size(const SimplicialComplex& k) {
    if (k.ambient().size() > kHochsterMaxVertices)
        throw Error("Hochster sums are limited to " + std::to_string(kHochsterMaxVertices) +
                    " ambient vertices");
}

// Sums reduced Betti numbers of every full subcomplex K_J into
// b_{shift(d, |J|)}.
template <typename Shift>
SpaceBettiTable hochster_sum(const SimplicialComplex& k, Shift shift) {
    require_hochster_size(k);
    SpaceBettiTable table;
    if (k.is_void())
        return table;
    for_each_submask(k.ambient().bits(), [&](Mask j) {
        BettiTable local = reduced_betti(full_subcomplex(k, VertexSubset(j)));
        for (int d = local.min_degree; d <= local.max_degree(); ++d)
            table.add(shift(d, std::popcount(j)), local[d]);
    });
    return table;
}

}  // namespace detail

/// b_n(RZ_K) = Σ_J dim H̃^{n-1}(K_J), J over all subsets of the ambient set.
inline SpaceBettiTable hochster_real_betti(const SimplicialComplex& k) {
    return detail::hochster_sum(k, [](int d, int) { return d + 1; });
}

/// b_n(Z_K) = Σ_J dim H̃^{n-|J|-1}(K_J).
inline SpaceBettiTable hochster_complex_betti(const SimplicialComplex& k) {
    return detail::hochster_sum(k, [](int d, int j_size) { return d + j_size + 1; });
}

/// Label of one coordinate of a cube cell.
enum class CellLabel : std::uint8_t {
    minus = 0,     // {-1}
    plus = 1,      // {+1}
    zero = 2,      // {0}, subdivided model only
    full = 3,      // [-1, 1], plain model only
    neg_half = 4,  // [-1, 0]
    pos_half = 5,  // [0, 1]
};

inline bool is_interval(CellLabel l) {
    return l == CellLabel::full || l == CellLabel::neg_half || l == CellLabel::pos_half;
}

/// Cube cell: one label per coordinate 1..m, packed 3 bits apiece.
class Cell {
  public:
    Cell() = default;
    explicit Cell(std::uint64_t code) : code_(code) {}

    CellLabel label(int v) const {
        return static_cast<CellLabel>((code_ >> (3 * (v - 1))) & 7U);
    }
    Cell with(int v, CellLabel l) const {
        std::uint64_t shift = 3 * static_cast<std::uint64_t>(v - 1);
        return Cell((code_ & ~(std::uint64_t{7} << shift)) |
                    (static_cast<std::uint64_t>(l) << shift));
    }
    std::uint64_t code() const { return code_; }

    int dimension(int m) const {
        int d = 0;
        for (int v = 1; v <= m; ++v)
            d += is_interval(label(v)) ? 1 : 0;
        return d;
    }

    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;

  private:
    std::uint64_t code_ = 0;
};

/// Image of a cell under the coordinate reflections x_i -> -x_i, i ∈ support.
inline Cell reflect(Cell c, Mask support) {
    for (Mask rest = support; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest) + 1;
        switch (c.label(v)) {
            case CellLabel::minus: c = c.with(v, CellLabel::plus); break;
            case CellLabel::plus: c = c.with(v, CellLabel::minus); break;
            case CellLabel::neg_half: c = c.with(v, CellLabel::pos_half); break;
            case CellLabel::pos_half: c = c.with(v, CellLabel::neg_half); break;
            case CellLabel::zero:
            case CellLabel::full: break;
        }
    }
    return c;
}

/// Cubical cell model of RZ_K.
///
/// Plain model: cells (σ, ε) with coordinates in σ ∈ K spanning [-1, 1] and
/// the rest at ±1. Subdivided model: every [-1, 1] split at 0, so the
/// reflection-fixed loci {x_i = 0} are subcomplexes. Coordinates outside the
/// ambient vertex set are pinned at 0 (a point factor).
class CubicalComplex {
  public:
    CubicalComplex(int m, bool subdivided, std::vector<Cell> cells)
        : m_(m), subdivided_(subdivided), cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    int m() const { return m_; }
    bool subdivided() const { return subdivided_; }
    bool empty() const { return cells_.empty(); }
    const std::vector<Cell>& cells() const { return cells_; }

    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

    /// Number of cells in each dimension.
    std::vector<std::size_t> cell_counts() const {
        std::vector<std::size_t> counts;
        for (Cell c : cells_) {
            auto d = static_cast<std::size_t>(c.dimension(m_));
            if (d >= counts.size())
                counts.resize(d + 1, 0);
            ++counts[d];
        }
        return counts;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (Cell c : cells_)
            chi += c.dimension(m_) % 2 == 0 ? 1 : -1;
        return chi;
    }

  private:
    int m_;
    bool subdivided_;
    std::vector<Cell> cells_;
};

/// Faces of a cell: the two endpoints of each interval coordinate.
inline std::vector<Cell> cell_boundary(Cell c, int m) {
    std::vector<Cell> out;
    for (int v = 1; v <= m; ++v) {
        switch (c.label(v)) {
            case CellLabel::full:
                out.push_back(c.with(v, CellLabel::minus));
                out.push_back(c.with(v, CellLabel::plus));
                break;
            case CellLabel::neg_half:
                out.push_back(c.with(v, CellLabel::minus));
                out.push_back(c.with(v, CellLabel::zero));
                break;
            case CellLabel::pos_half:
                out.push_back(c.with(v, CellLabel::zero));
                out.push_back(c.with(v, CellLabel::plus));
                break;
            default: break;
        }
    }
    return out;
}

inline CubicalComplex build_cubical(const SimplicialComplex& k, bool subdivided) {
    const int m = k.m();
    if (m > kCubicalMaxVertices)
        throw Error("cubical models are limited to " + std::to_string(kCubicalMaxVertices) +
                    " vertices");
    Cell base;
    for (int v = 1; v <= m; ++v)
        base = base.with(v, k.ambient().contains(v) ? CellLabel::minus : CellLabel::zero);

    static constexpr std::array<CellLabel, 1> plain_interval{CellLabel::full};
    static constexpr std::array<CellLabel, 3> split_interval{
        CellLabel::neg_half, CellLabel::zero, CellLabel::pos_half};
    static constexpr std::array<CellLabel, 2> endpoints{CellLabel::minus, CellLabel::plus};

    std::vector<Cell> cells;
    for (Mask sigma : k.faces()) {
        std::vector<Cell> partial{base};
        for (int v : k.ambient().vertices()) {
            std::vector<Cell> next;
            auto extend = [&](const auto& labels) {
                for (Cell c : partial)
                    for (CellLabel l : labels)
                        next.push_back(c.with(v, l));
            };
            if ((sigma & vertex_bit(v)) == 0)
                extend(endpoints);
            else if (subdivided)
                extend(split_interval);
            else
                extend(plain_interval);
            partial = std::move(next);
        }
        cells.insert(cells.end(), partial.begin(), partial.end());
    }
    return CubicalComplex(m, subdivided, std::move(cells));
}

/// F2 homology Betti numbers of a cubical complex.
inline SpaceBettiTable cubical_betti(const CubicalComplex& c) {
    SpaceBettiTable table;
    if (c.empty())
        return table;
    std::vector<std::vector<Cell>> by_dim;
    for (Cell cell : c.cells()) {
        auto d = static_cast<std::size_t>(cell.dimension(c.m()));
        if (d >= by_dim.size())
            by_dim.resize(d + 1);
        by_dim[d].push_back(cell);
    }
    std::vector<std::unordered_map<std::uint64_t, std::size_t>> index(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        for (std::size_t i = 0; i < by_dim[d].size(); ++i)
            index[d].emplace(by_dim[d][i].code(), i);

    // rank of ∂_d : C_d -> C_{d-1}
    std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        EchelonBasis basis(by_dim[d - 1].size());
        for (Cell cell : by_dim[d]) {
            BitVector row(by_dim[d - 1].size());
            for (Cell face : cell_boundary(cell, c.m())) {
                auto it = index[d - 1].find(face.code());
                if (it == index[d - 1].end())
                    throw Error("cubical complex is not closed under faces");
                row.flip(it->second);
            }
            basis.insert(std::move(row));
        }
        ranks[d] = basis.rank();
    }
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        table.add(static_cast<int>(d), by_dim[d].size() - ranks[d] - ranks[d + 1]);
    return table;
}

/// Cells of a subdivided model lying in {x_i = 0 for all i ∈ fixed}.
inline CubicalComplex fixed_subcomplex(const CubicalComplex& c, VertexSubset fixed) {
    if (!c.subdivided())
        throw Error("requires subdivided model");
    std::vector<Cell> cells;
    for (Cell cell : c.cells()) {
        bool pinned = true;
        for (int v : fixed.vertices())
            pinned = pinned && cell.label(v) == CellLabel::zero;
        if (pinned)
            cells.push_back(cell);
    }
    return CubicalComplex(c.m(), true, std::move(cells));
}

/// Cells of a subdivided model invariant under every listed reflection.
/// In the subdivided model a cell is invariant iff it is pointwise fixed.
inline CubicalComplex fixed_under(const CubicalComplex& c, const std::vector<BitVector>& generators) {
    if (!c.subdivided())
        throw Error("requires subdivided model");
    std::vector<Cell> cells;
    for (Cell cell : c.cells()) {
        bool fixed = std::all_of(generators.begin(), generators.end(), [&](const BitVector& g) {
            return reflect(cell, g.to_mask()) == cell;
        });
        if (fixed)
            cells.push_back(cell);
    }
    return CubicalComplex(c.m(), true, std::move(cells));
}

/// Betti numbers of (RZ_K)^{Z2^I} computed as RZ of lk_K(I) on the ambient
/// set minus I, with ghost vertices contributing S^0 factors; zero if I ∉ K.
inline SpaceBettiTable fixed_betti_via_link(const SimplicialComplex& k, VertexSubset fixed) {
    if (!k.contains(fixed))
        return {};
    return hochster_real_betti(link(k, fixed));
}

}  // namespace rzformal
