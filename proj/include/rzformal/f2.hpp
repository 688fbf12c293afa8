// Linear algebra over the two-element field.
//
// Rows are bit-packed into 64-bit words; elimination is XOR on whole words.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rzformal/vertex_set.hpp"

namespace rzformal {

/// Fixed-length vector over F2. Bits are 0-indexed.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    /// Coordinate vector over 1..m from a vertex mask (vertex v -> bit v-1).
    static BitVector from_mask(std::size_t size, Mask mask) {
        BitVector v(size);
        for (Mask rest = mask; rest != 0; rest &= rest - 1) {
            auto i = static_cast<std::size_t>(std::countr_zero(rest));
            if (i >= size)
                throw Error("mask exceeds bit vector length");
            v.set(i);
        }
        return v;
    }

    /// Parses "0110": character k (0-indexed from the left) is bit k.
    static BitVector from_string(std::string_view s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i);
            else if (s[i] != '0')
                throw Error("bit string may only contain '0' and '1'");
        }
        return v;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0)
                return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return size_;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.size_ != size_)
            throw Error("bit vector length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }

    /// Inner product over F2.
    bool dot(const BitVector& o) const {
        if (o.size_ != size_)
            throw Error("bit vector length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            acc ^= words_[w] & o.words_[w];
        return (std::popcount(acc) & 1) != 0;
    }

    /// Bits 0..63 as a vertex mask (bit i -> vertex i+1).
    Mask to_mask() const {
        if (size_ > 64)
            throw Error("bit vector too long for a mask");
        return words_.empty() ? 0 : words_[0];
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i))
                s[i] = '1';
        return s;
    }

    bool operator==(const BitVector&) const = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over F2 stored as rows.
class F2Matrix {
  public:
    F2Matrix() = default;
    explicit F2Matrix(std::size_t cols) : cols_(cols) {}
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static F2Matrix from_strings(const std::vector<std::string>& rows) {
        if (rows.empty())
            return F2Matrix();
        F2Matrix mat(rows.front().size());
        for (const auto& r : rows)
            mat.push_row(BitVector::from_string(r));
        return mat;
    }

    static F2Matrix identity(std::size_t n) {
        F2Matrix mat(n, n);
        for (std::size_t i = 0; i < n; ++i)
            mat.row(i).set(i);
        return mat;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    BitVector& row(std::size_t i) { return rows_[i]; }
    const BitVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<BitVector>& row_vectors() const { return rows_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c) { rows_[r].set(c); }

    void push_row(BitVector v) {
        if (v.size() != cols_)
            throw Error("row length does not match column count");
        rows_.push_back(std::move(v));
    }

    F2Matrix transpose() const {
        F2Matrix t(cols_, rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (rows_[r].test(c))
                    t.set(c, r);
        return t;
    }

    /// Matrix-vector product over F2 (v has length cols()).
    BitVector apply(const BitVector& v) const {
        BitVector out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r].dot(v))
                out.set(r);
        return out;
    }

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Incrementally built row-echelon basis keyed by lowest set bit.
///
/// Each stored row has a distinct pivot (its lowest bit), which is enough to
/// decide membership and compute rank without full back-substitution.
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t cols) : cols_(cols), pivot_row_(cols, kNone) {}

    /// Reduces v against the basis; returns the residue.
    BitVector reduce(BitVector v) const {
        for (std::size_t p = v.lowest(); p < cols_; p = v.lowest()) {
            std::size_t r = pivot_row_[p];
            if (r == kNone)
                break;
            v ^= rows_[r];
        }
        return v;
    }

    /// Adds v to the span; returns true if it was independent.
    bool insert(BitVector v) {
        if (v.size() != cols_)
            throw Error("row length does not match column count");
        v = reduce(std::move(v));
        std::size_t p = v.lowest();
        if (p >= cols_)
            return false;
        pivot_row_[p] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(const BitVector& v) const { return reduce(v).none(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<BitVector>& rows() const { return rows_; }

  private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t cols_;
    std::vector<std::size_t> pivot_row_;
    std::vector<BitVector> rows_;
};

inline std::size_t rank(const F2Matrix& mat) {
    EchelonBasis basis(mat.cols());
    for (const auto& r : mat.row_vectors())
        basis.insert(r);
    return basis.rank();
}

/// Reduced row-echelon form: pivots increase with row index and every pivot
/// column is zero outside its pivot row. Zero rows are dropped.
inline F2Matrix reduced_row_echelon(const F2Matrix& mat) {
    std::vector<BitVector> rows = mat.row_vectors();
    const std::size_t n = mat.cols();
    std::size_t top = 0;
    for (std::size_t c = 0; c < n && top < rows.size(); ++c) {
        std::size_t sel = top;
        while (sel < rows.size() && !rows[sel].test(c))
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[top], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != top && rows[r].test(c))
                rows[r] ^= rows[top];
        ++top;
    }
    rows.resize(top);
    F2Matrix out(n);
    for (auto& r : rows)
        out.push_row(std::move(r));
    return out;
}

/// Basis of the right null space {x : mat * x = 0}.
inline F2Matrix kernel_basis(const F2Matrix& mat) {
    const std::size_t n = mat.cols();
    F2Matrix rref = reduced_row_echelon(mat);
    std::vector<std::size_t> pivot_col(rref.rows());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rref.rows(); ++r) {
        pivot_col[r] = rref.row(r).lowest();
        is_pivot[pivot_col[r]] = true;
    }
    F2Matrix kernel(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        BitVector v(n);
        v.set(f);
        for (std::size_t r = 0; r < rref.rows(); ++r)
            if (rref.row(r).test(f))
                v.set(pivot_col[r]);
        kernel.push_row(std::move(v));
    }
    return kernel;
}

/// Subgroup of Z2^m, held as a reduced row-echelon basis.
class Subgroup {
  public:
    explicit Subgroup(int m) : m_(m), basis_(static_cast<std::size_t>(m)) {
        if (m < 0 || m > kMaxVertices)
            throw Error("vertex count out of range: " + std::to_string(m));
    }

    Subgroup(int m, const std::vector<BitVector>& generators) : Subgroup(m) {
        F2Matrix gens(static_cast<std::size_t>(m));
        for (const auto& g : generators) {
            if (g.size() != static_cast<std::size_t>(m))
                throw Error("generator length " + std::to_string(g.size()) +
                            " does not match m = " + std::to_string(m));
            gens.push_row(g);
        }
        basis_ = reduced_row_echelon(gens);
    }

    static Subgroup from_strings(int m, const std::vector<std::string>& generators) {
        std::vector<BitVector> gens;
        for (const auto& s : generators)
            gens.push_back(BitVector::from_string(s));
        return Subgroup(m, gens);
    }

    /// The coordinate subgroup Z2^I.
    static Subgroup coordinate(int m, VertexSubset support) {
        std::vector<BitVector> gens;
        for (int v : support.vertices())
            gens.push_back(BitVector::from_mask(static_cast<std::size_t>(m), vertex_bit(v)));
        return Subgroup(m, gens);
    }

    static Subgroup full(int m) { return coordinate(m, VertexSubset::full(m)); }

    int m() const { return m_; }
    std::size_t rank() const { return basis_.rows(); }

    /// Canonical basis: reduced row-echelon rows.
    const F2Matrix& basis() const { return basis_; }

    bool contains(const BitVector& v) const {
        EchelonBasis e(static_cast<std::size_t>(m_));
        for (const auto& r : basis_.row_vectors())
            e.insert(r);
        return e.contains(v);
    }

    /// Every element, for small ranks.
    std::vector<BitVector> elements() const {
        if (rank() > 20)
            throw Error("subgroup too large to enumerate");
        std::vector<BitVector> out;
        const std::size_t n = std::size_t{1} << rank();
        out.reserve(n);
        for (std::size_t bits = 0; bits < n; ++bits) {
            BitVector v(static_cast<std::size_t>(m_));
            for (std::size_t r = 0; r < rank(); ++r)
                if ((bits >> r) & 1U)
                    v ^= basis_.row(r);
            out.push_back(std::move(v));
        }
        return out;
    }

    bool operator==(const Subgroup& o) const {
        return m_ == o.m_ && basis_.row_vectors() == o.basis_.row_vectors();
    }

  private:
    int m_;
    F2Matrix basis_;
};

/// Coordinates on which some element of a is nonzero: hull(a) = Z2^I.
inline VertexSubset hull(const Subgroup& a) {
    Mask out = 0;
    for (const auto& r : a.basis().row_vectors())
        out |= r.to_mask();
    return VertexSubset(out);
}

/// m - rank(a).
inline std::size_t corank(const Subgroup& a) {
    return static_cast<std::size_t>(a.m()) - a.rank();
}

}  // namespace rzformal
