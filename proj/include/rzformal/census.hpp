// Exhaustive cross-validation of the formality deciders over small complexes,
// persisted as JSONL (one record per (K, I) pair).

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <istream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rzformal/formality.hpp"
#include "rzformal/io.hpp"
#include "rzformal/simplicial.hpp"

namespace rzformal {

enum class CensusMode { flag, all_complexes };

struct CensusRecord {
    SimplicialComplex complex;
    bool is_flag = false;
    VertexSubset i;
    std::optional<Verdict> verdict_flag;
    Verdict verdict_general = Verdict::formal;
    Verdict verdict_oracle = Verdict::formal;
    Verdict verdict_torus = Verdict::formal;
    std::size_t betti_total_ambient = 0;
    std::size_t betti_total_fixed = 0;

    bool agree() const {
        bool same = verdict_general == verdict_oracle && verdict_oracle == verdict_torus;
        return same && (!verdict_flag || *verdict_flag == verdict_general);
    }
};

inline Json to_json(const CensusRecord& r) {
    Json facets = to_json(r.complex).at("facets");
    return Json{{"m", r.complex.m()},
                {"facets", facets},
                {"is_flag", r.is_flag},
                {"I", vertex_list(r.i)},
                {"verdict_flag", r.verdict_flag ? Json(to_string(*r.verdict_flag)) : Json(nullptr)},
                {"verdict_general", to_string(r.verdict_general)},
                {"verdict_oracle", to_string(r.verdict_oracle)},
                {"verdict_torus", to_string(r.verdict_torus)},
                {"betti_total_ambient", r.betti_total_ambient},
                {"betti_total_fixed", r.betti_total_fixed},
                {"agree", r.agree()}};
}

/// Runs every decider on one (K, I) pair.
inline CensusRecord census_record(const OracleContext& ctx, bool flag, VertexSubset i) {
    const SimplicialComplex& k = ctx.complex();
    CensusRecord r;
    r.complex = k;
    r.is_flag = flag;
    r.i = i;
    if (flag)
        r.verdict_flag = flag_criterion(k, i).verdict;
    r.verdict_general = general_criterion(k, i).verdict;
    FormalityReport oracle = betti_sum_oracle(ctx, i);
    r.verdict_oracle = oracle.verdict;
    r.betti_total_fixed = oracle.betti_totals->first;
    r.betti_total_ambient = oracle.betti_totals->second;
    r.verdict_torus = torus_oracle(ctx, i).verdict;
    return r;
}

/// Records for all I ⊆ [m], ordered by I's bitmask.
inline std::vector<CensusRecord> census_records(const SimplicialComplex& k) {
    OracleContext ctx(k);
    const bool flag = is_flag(k);
    std::vector<CensusRecord> out;
    for_each_submask(full_mask(k.m()),
                     [&](Mask bits) { out.push_back(census_record(ctx, flag, VertexSubset(bits))); });
    return out;
}

/// All labelled graphs on m vertices, ordered by edge-set bitmask (edge
/// {u, v} with u < v takes bit index in lexicographic pair order).
inline std::vector<Graph> enumerate_graphs(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v)
            pairs.emplace_back(u, v);
    if (pairs.size() > 30)
        throw Error("too many vertices to enumerate graphs");
    std::vector<Graph> out;
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    out.reserve(count);
    for (std::uint64_t e = 0; e < count; ++e) {
        Graph g(m);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((e >> p) & 1U)
                g.add_edge(pairs[p].first, pairs[p].second);
        out.push_back(std::move(g));
    }
    return out;
}

/// All simplicial complexes on 1..m in which every vertex is a face, ordered
/// by the bitmask of their face family (bit σ set iff σ ∈ K).
inline std::vector<SimplicialComplex> enumerate_complexes(int m) {
    if (m > 6)
        throw Error("complex enumeration supports m <= 6");
    std::vector<Mask> candidates;
    for (Mask f = 1; f <= full_mask(m); ++f)
        if (std::popcount(f) >= 2)
            candidates.push_back(f);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

    // family[σ] marks membership; the empty face and singletons are always in
    std::uint64_t base = 1;
    for (int v = 1; v <= m; ++v)
        base |= std::uint64_t{1} << vertex_bit(v);

    std::vector<std::uint64_t> families;
    std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t pos,
                                                                 std::uint64_t family) {
        if (pos == candidates.size()) {
            families.push_back(family);
            return;
        }
        extend(pos + 1, family);
        Mask f = candidates[pos];
        bool closed = true;
        for (Mask rest = f; rest != 0 && closed; rest &= rest - 1) {
            Mask sub = f & ~(rest & (~rest + 1));
            closed = ((family >> sub) & 1U) != 0;
        }
        if (closed)
            extend(pos + 1, family | (std::uint64_t{1} << f));
    };
    extend(0, base);
    std::sort(families.begin(), families.end());

    std::vector<SimplicialComplex> out;
    out.reserve(families.size());
    for (std::uint64_t family : families) {
        std::vector<Mask> faces;
        for (Mask f = 0; f <= full_mask(m); ++f)
            if ((family >> f) & 1U)
                faces.push_back(f);
        out.emplace_back(m, std::move(faces));
    }
    return out;
}

inline int census_cap(CensusMode mode) {
    const char* name = mode == CensusMode::flag ? "RZFORMAL_CENSUS_FLAG_CAP" : "RZFORMAL_CENSUS_ALL_CAP";
    if (const char* env = std::getenv(name))
        return std::atoi(env);
    return mode == CensusMode::flag ? 5 : 4;
}

inline std::vector<SimplicialComplex> census_complexes(int m, CensusMode mode) {
    if (m < 1)
        throw Error("census needs at least one vertex");
    if (m > census_cap(mode))
        throw Error("m = " + std::to_string(m) + " exceeds the census cap of " +
                    std::to_string(census_cap(mode)) + " for this mode");
    if (mode == CensusMode::all_complexes)
        return enumerate_complexes(m);
    std::vector<SimplicialComplex> out;
    for (const Graph& g : enumerate_graphs(m))
        out.push_back(clique_complex(g));
    return out;
}

/// Serialized census lines for vertex counts min_m..max_m, in global order:
/// m, then complex order, then I. Independent of `jobs`.
inline std::vector<std::string> run_census(int min_m, int max_m, CensusMode mode, int jobs) {
    std::vector<SimplicialComplex> complexes;
    for (int m = min_m; m <= max_m; ++m) {
        auto batch = census_complexes(m, mode);
        complexes.insert(complexes.end(), batch.begin(), batch.end());
    }
    std::vector<std::vector<std::string>> lines(complexes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t t = next++; t < complexes.size(); t = next++) {
            try {
                for (const auto& r : census_records(complexes[t]))
                    lines[t].push_back(to_json(r).dump());
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, jobs);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    std::vector<std::string> out;
    for (auto& batch : lines)
        for (auto& l : batch)
            out.push_back(std::move(l));
    return out;
}

/// Recomputes one serialized record from its (m, facets, I) fields.
inline std::string recompute_census_line(const std::string& line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
        throw Error("corrupt record: not valid JSON");
    }
    if (!j.is_object() || !j.contains("I"))
        throw Error("corrupt record: missing fields");
    SimplicialComplex k = complex_from_json(j);
    VertexSubset i = parse_vertex_list(j.at("I"), k.m());
    OracleContext ctx(k);
    return to_json(census_record(ctx, is_flag(k), i)).dump();
}

struct VerifyResult {
    std::size_t records = 0;
    std::vector<std::pair<std::size_t, std::string>> problems;  // (line number, message)
    bool ok() const { return problems.empty(); }
};

inline VerifyResult verify_census(std::istream& in) {
    VerifyResult result;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty())
            continue;
        ++result.records;
        try {
            if (recompute_census_line(line) != line)
                result.problems.emplace_back(number, "record does not match recomputation");
        } catch (const std::exception& e) {
            result.problems.emplace_back(number, e.what());
        }
    }
    return result;
}

}  // namespace rzformal
