// Group-theoretic reading of the formality verdict for a coabelian subgroup
// G of the right-angled Coxeter group W_Γ with G/[W_Γ, W_Γ] = A ≤ Z2^m.
//
// Groups are described symbolically only: the presentation of W_Γ, the
// support pair (I, J) of G^⋊ = W̄_{Γ_I} ⋊ [W_{Γ_J}, W_{Γ_J}], and Betti data.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rzformal/f2.hpp"
#include "rzformal/formality.hpp"
#include "rzformal/moment_angle.hpp"
#include "rzformal/simplicial.hpp"

namespace rzformal {

/// numerator(t) / (1 - t)^r.
struct PoincareSeries {
    std::vector<std::size_t> numerator;
    int r = 0;

    /// Coefficient of t^n: Σ_{s ≤ n} numerator[s] · C(n - s + r - 1, r - 1).
    unsigned long long coefficient(int n) const {
        if (n < 0)
            return 0;
        unsigned long long total = 0;
        for (int s = 0; s <= n && s < static_cast<int>(numerator.size()); ++s)
            total += numerator[static_cast<std::size_t>(s)] * monomials(n - s);
        return total;
    }

    /// Coefficients of t^0 .. t^degree.
    std::vector<unsigned long long> expand(int degree) const {
        std::vector<unsigned long long> out;
        for (int n = 0; n <= degree; ++n)
            out.push_back(coefficient(n));
        return out;
    }

    bool operator==(const PoincareSeries&) const = default;

  private:
    // dimension of degree-d polynomials in r variables, C(d + r - 1, r - 1)
    unsigned long long monomials(int d) const {
        if (r == 0)
            return d == 0 ? 1 : 0;
        unsigned long long c = 1;
        for (int i = 1; i < r; ++i)
            c = c * static_cast<unsigned long long>(d + i) / static_cast<unsigned long long>(i);
        return c;
    }
};

inline PoincareSeries poincare_series(const SimplicialComplex& k, int r) {
    if (r < 0)
        throw Error("polynomial rank must be nonnegative");
    return PoincareSeries{hochster_real_betti(k).dims, r};
}

struct GroupReport {
    Graph gamma;
    Subgroup a{0};
    VertexSubset i;   // hull support
    VertexSubset j;   // complement [m] ∖ I
    std::vector<std::pair<int, int>> commuting_pairs;
    FormalityReport formality;
    std::optional<std::size_t> cm_dimension;
    std::optional<PoincareSeries> poincare;

    Verdict verdict() const { return formality.verdict; }
};

inline GroupReport coabelian_report(const Graph& g, const Subgroup& a) {
    if (a.m() != g.m())
        throw Error("subgroup ambient dimension does not match the graph");
    SimplicialComplex k = clique_complex(g);
    GroupReport rep;
    rep.gamma = g;
    rep.a = a;
    rep.i = hull(a);
    rep.j = VertexSubset::full(g.m()) - rep.i;
    rep.commuting_pairs = g.edges();
    rep.formality = decide(k, a);
    if (rep.formality.formal()) {
        rep.cm_dimension = a.rank();
        rep.poincare = poincare_series(k, static_cast<int>(a.rank()));
    }
    return rep;
}

}  // namespace rzformal
