// Deciders for equivariant formality of coordinate reflection actions on
// RZ_K (and torus actions on Z_K) over F2.
//
// Three routes decide the same question for Z2^I acting on RZ_K:
//   flag_criterion     combinatorial test on missing edges (flag K only)
//   general_criterion  maps H̃*(K_J) -> H̃*(K_J minus the faces containing I∩J)
//   betti_sum_oracle   Betti sum of the fixed set against that of RZ_K
// torus_oracle answers the companion question for T^I acting on Z_K.

#pragma once

#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rzformal/cohomology.hpp"
#include "rzformal/f2.hpp"
#include "rzformal/moment_angle.hpp"
#include "rzformal/simplicial.hpp"

namespace rzformal {

enum class Verdict { formal, not_formal };

enum class Method { flag_criterion, general_criterion, betti_sum_oracle, torus_oracle };

inline const char* to_string(Verdict v) { return v == Verdict::formal ? "formal" : "not_formal"; }

inline const char* to_string(Method m) {
    switch (m) {
        case Method::flag_criterion: return "flag_criterion";
        case Method::general_criterion: return "general_criterion";
        case Method::betti_sum_oracle: return "betti_sum_oracle";
        case Method::torus_oracle: return "torus_oracle";
    }
    return "unknown";
}

/// Missing edge {j1, j2} with a vertex i ∈ I adjacent to at most one end.
struct MissingEdgeWitness {
    int j1;
    int j2;
    int i;
    bool operator==(const MissingEdgeWitness&) const = default;
};

/// Vertex set J for which H̃*(K_J) -> H̃*(deletion of I∩J from K_J) is nonzero.
struct RestrictionWitness {
    VertexSubset j;
    bool operator==(const RestrictionWitness&) const = default;
};

/// I is not a face, so the fixed set is empty.
struct NotAFaceWitness {
    VertexSubset i;
    bool operator==(const NotAFaceWitness&) const = default;
};

/// Betti totals (fixed set, whole space) that differ.
struct BettiTotalsWitness {
    std::size_t fixed;
    std::size_t ambient;
    bool operator==(const BettiTotalsWitness&) const = default;
};

using Witness =
    std::variant<MissingEdgeWitness, RestrictionWitness, NotAFaceWitness, BettiTotalsWitness>;

struct FormalityReport {
    Verdict verdict = Verdict::formal;
    Method method = Method::general_criterion;
    VertexSubset hull;
    std::optional<Witness> witness;
    std::optional<std::pair<std::size_t, std::size_t>> betti_totals;  // (fixed, ambient)

    bool formal() const { return verdict == Verdict::formal; }
};

/// Largest m for which betti_sum_oracle recomputes the fixed set on the
/// subdivided cubical model. RZFORMAL_CUBICAL_CAP overrides the default.
inline int cubical_cap() {
    if (const char* env = std::getenv("RZFORMAL_CUBICAL_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw Error("RZFORMAL_CUBICAL_CAP must be an integer");
        }
    }
    return kDefaultCubicalCap;
}

namespace detail {

inline void require_no_ghosts(const SimplicialComplex& k) {
    if (k.is_void() || !k.ghosts().empty() || k.ambient() != VertexSubset::full(k.m()))
        throw Error("every vertex 1..m must be a face of the complex");
}

inline void require_in_range(const SimplicialComplex& k, VertexSubset i) {
    if (!i.is_subset_of(VertexSubset::full(k.m())))
        throw Error("vertex subset exceeds 1..m");
}

inline FormalityReport not_a_face(Method method, VertexSubset i) {
    FormalityReport r;
    r.verdict = Verdict::not_formal;
    r.method = method;
    r.hull = i;
    r.witness = NotAFaceWitness{i};
    return r;
}

}  // namespace detail

/// Formal iff I ∈ K and, for every missing edge {j1, j2} and every
/// i ∈ I ∖ {j1, j2}, both {i, j1} and {i, j2} are edges.
inline FormalityReport flag_criterion(const SimplicialComplex& k, VertexSubset i) {
    detail::require_no_ghosts(k);
    detail::require_in_range(k, i);
    if (!is_flag(k))
        throw Error("flag criterion requires flag complex");
    if (!k.contains(i))
        return detail::not_a_face(Method::flag_criterion, i);

    FormalityReport r;
    r.method = Method::flag_criterion;
    r.hull = i;
    for (auto [j1, j2] : missing_edges(k)) {
        for (int v : i.vertices()) {
            if (v == j1 || v == j2)
                continue;
            if (!k.contains(vertex_bit(v) | vertex_bit(j1)) ||
                !k.contains(vertex_bit(v) | vertex_bit(j2))) {
                r.verdict = Verdict::not_formal;
                r.witness = MissingEdgeWitness{j1, j2, v};
                return r;
            }
        }
    }
    return r;
}

/// Formal iff I ∈ K and, for every J meeting I, the inclusion
/// K_{J∖I} -> K_J induces zero on reduced cohomology.
inline FormalityReport general_criterion(const SimplicialComplex& k, VertexSubset i) {
    detail::require_no_ghosts(k);
    detail::require_in_range(k, i);
    if (!k.contains(i))
        return detail::not_a_face(Method::general_criterion, i);

    FormalityReport r;
    r.method = Method::general_criterion;
    r.hull = i;
    if (i.empty())
        return r;
    for_each_submask_lex(k.ambient().bits(), [&](Mask j) {
        VertexSubset js(j);
        if (!js.intersects(i))
            return false;
        auto kj = full_subcomplex(k, js);
        if (inclusion_is_trivial(kj, deletion(kj, js & i)))
            return false;
        r.verdict = Verdict::not_formal;
        r.witness = RestrictionWitness{js};
        return true;
    });
    return r;
}

/// Ambient data shared by the Betti-sum oracles for one complex, so that
/// repeated queries over many I reuse it.
class OracleContext {
  public:
    explicit OracleContext(SimplicialComplex k, std::optional<int> cap = std::nullopt)
        : k_(std::move(k)), cap_(cap.value_or(cubical_cap())) {
        detail::require_no_ghosts(k_);
    }

    const SimplicialComplex& complex() const { return k_; }

    const SpaceBettiTable& real_betti() const {
        if (!real_)
            real_ = hochster_real_betti(k_);
        return *real_;
    }
    const SpaceBettiTable& complex_betti() const {
        if (!complex_)
            complex_ = hochster_complex_betti(k_);
        return *complex_;
    }

    /// Subdivided model, or nullptr when m exceeds the cubical cap.
    const CubicalComplex* subdivided_model() const {
        if (k_.m() > cap_)
            return nullptr;
        if (!model_)
            model_ = std::make_unique<CubicalComplex>(build_cubical(k_, true));
        return model_.get();
    }

    /// Betti numbers of (RZ_K)^{Z2^I}; cross-checked against the cubical
    /// model when it is available.
    SpaceBettiTable fixed_real_betti(VertexSubset i) const {
        SpaceBettiTable via_link = fixed_betti_via_link(k_, i);
        if (const CubicalComplex* model = subdivided_model()) {
            SpaceBettiTable via_cells = cubical_betti(fixed_subcomplex(*model, i));
            if (via_cells != via_link)
                throw Error("fixed-point model disagreement");
        }
        return via_link;
    }

    /// Betti numbers of (Z_K)^{T^I} ≅ Z_{lk_K(I)}, empty if I ∉ K.
    SpaceBettiTable fixed_complex_betti(VertexSubset i) const {
        if (!k_.contains(i))
            return {};
        return hochster_complex_betti(link(k_, i));
    }

  private:
    SimplicialComplex k_;
    int cap_;
    mutable std::optional<SpaceBettiTable> real_;
    mutable std::optional<SpaceBettiTable> complex_;
    mutable std::unique_ptr<CubicalComplex> model_;
};

namespace detail {

inline FormalityReport from_totals(Method method, VertexSubset i, std::size_t fixed,
                                   std::size_t ambient) {
    FormalityReport r;
    r.method = method;
    r.hull = i;
    r.betti_totals = std::make_pair(fixed, ambient);
    if (fixed != ambient) {
        r.verdict = Verdict::not_formal;
        r.witness = BettiTotalsWitness{fixed, ambient};
    }
    return r;
}

}  // namespace detail

inline FormalityReport betti_sum_oracle(const OracleContext& ctx, VertexSubset i) {
    detail::require_in_range(ctx.complex(), i);
    std::size_t fixed = ctx.fixed_real_betti(i).total();
    return detail::from_totals(Method::betti_sum_oracle, i, fixed, ctx.real_betti().total());
}

/// Formal iff dim H*((RZ_K)^{Z2^I}) = dim H*(RZ_K).
inline FormalityReport betti_sum_oracle(const SimplicialComplex& k, VertexSubset i) {
    return betti_sum_oracle(OracleContext(k), i);
}

inline FormalityReport torus_oracle(const OracleContext& ctx, VertexSubset i) {
    detail::require_in_range(ctx.complex(), i);
    std::size_t fixed = ctx.fixed_complex_betti(i).total();
    return detail::from_totals(Method::torus_oracle, i, fixed, ctx.complex_betti().total());
}

/// Formal iff dim H*((Z_K)^{T^I}) = dim H*(Z_K).
inline FormalityReport torus_oracle(const SimplicialComplex& k, VertexSubset i) {
    return torus_oracle(OracleContext(k), i);
}

/// Decides formality of the A-action through its coordinate hull, using the
/// flag criterion when K is flag and the general criterion otherwise.
inline FormalityReport decide(const SimplicialComplex& k, const Subgroup& a) {
    if (a.m() != k.m())
        throw Error("subgroup ambient dimension does not match the complex");
    VertexSubset support = hull(a);
    FormalityReport r = is_flag(k) ? flag_criterion(k, support) : general_criterion(k, support);
    r.hull = support;
    return r;
}

/// Every applicable method for (K, I): flag (when K is flag), general,
/// Betti-sum oracle, torus oracle.
inline std::vector<FormalityReport> decide_all(const SimplicialComplex& k, VertexSubset i) {
    std::vector<FormalityReport> out;
    if (is_flag(k))
        out.push_back(flag_criterion(k, i));
    out.push_back(general_criterion(k, i));
    OracleContext ctx(k);
    out.push_back(betti_sum_oracle(ctx, i));
    out.push_back(torus_oracle(ctx, i));
    return out;
}

inline bool verdicts_agree(const std::vector<FormalityReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict != reports.front().verdict)
            return false;
    return true;
}

}  // namespace rzformal
