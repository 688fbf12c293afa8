// Bitmask vertex subsets over the labelled vertex set {1, ..., m}.
//
// Vertex v is stored at bit (v - 1). All combinatorial code in the library
// works on these masks; the 1-indexed view is only used at the API and I/O
// boundary.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rzformal {

using Mask = std::uint64_t;

/// Largest vertex count representable by a Mask.
inline constexpr int kMaxVertices = 63;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

constexpr Mask full_mask(int m) { return m <= 0 ? Mask{0} : (Mask{1} << m) - 1; }

constexpr Mask vertex_bit(int v) { return Mask{1} << (v - 1); }

class VertexSubset {
  public:
    constexpr VertexSubset() = default;
    constexpr explicit VertexSubset(Mask bits) : bits_(bits) {}

    /// Builds a subset from 1-indexed vertex labels.
    static VertexSubset of(std::initializer_list<int> vertices) {
        return of(std::vector<int>(vertices));
    }
    static VertexSubset of(const std::vector<int>& vertices) {
        Mask bits = 0;
        for (int v : vertices) {
            if (v < 1 || v > kMaxVertices)
                throw Error("vertex label out of range: " + std::to_string(v));
            bits |= vertex_bit(v);
        }
        return VertexSubset(bits);
    }
    static constexpr VertexSubset full(int m) { return VertexSubset(full_mask(m)); }

    constexpr Mask bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ & vertex_bit(v)) != 0; }
    constexpr bool is_subset_of(VertexSubset other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    constexpr bool intersects(VertexSubset other) const { return (bits_ & other.bits_) != 0; }

    /// Largest vertex label present, or 0 for the empty set.
    constexpr int max_vertex() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask rest = bits_; rest != 0; rest &= rest - 1)
            out.push_back(std::countr_zero(rest) + 1);
        return out;
    }

    constexpr VertexSubset operator|(VertexSubset o) const { return VertexSubset(bits_ | o.bits_); }
    constexpr VertexSubset operator&(VertexSubset o) const { return VertexSubset(bits_ & o.bits_); }
    constexpr VertexSubset operator-(VertexSubset o) const { return VertexSubset(bits_ & ~o.bits_); }

    constexpr bool operator==(const VertexSubset&) const = default;
    constexpr auto operator<=>(const VertexSubset&) const = default;

  private:
    Mask bits_ = 0;
};

/// Calls f(sub) for every submask of `mask`, in increasing numeric order.
template <typename F>
void for_each_submask(Mask mask, F&& f) {
    Mask sub = 0;
    while (true) {
        f(sub);
        if (sub == mask)
            break;
        sub = (sub - mask) & mask;
    }
}

/// Calls f(sub) for every submask of `mask` in lexicographic order of the
/// sorted vertex lists: {}, {1}, {1,2}, {1,2,3}, {1,3}, {2}, ...
/// Stops early and returns true as soon as f returns true.
template <typename F>
bool for_each_submask_lex(Mask mask, F&& f) {
    std::function<bool(Mask, Mask)> walk = [&](Mask current, Mask candidates) -> bool {
        if (f(current))
            return true;
        for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
            Mask bit = rest & (~rest + 1);
            // only vertices above `bit` remain available to descendants
            Mask above = candidates & ~((bit << 1) - 1);
            if (walk(current | bit, above))
                return true;
        }
        return false;
    };
    return walk(0, mask);
}

/// Lexicographic comparison of two subsets as sorted vertex lists.
inline bool lex_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
        Mask la = a & (~a + 1);
        Mask lb = b & (~b + 1);
        if (la != lb)
            return la < lb;
        a ^= la;
        b ^= lb;
    }
    return a == 0 && b != 0;
}

}  // namespace rzformal
