// rzformal: command-line front end.
//
// Exit codes: check returns 0 (formal), 1 (not formal), 2 (methods disagree);
// census/verify return 0 on success and 1 on disagreement or mismatch; every
// command returns 3 on bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "rzformal/census.hpp"
#include "rzformal/formality.hpp"
#include "rzformal/group_report.hpp"
#include "rzformal/io.hpp"

namespace {

using namespace rzformal;

constexpr int kInputError = 3;

VertexSubset parse_subset(const std::string& text, int m) {
    std::vector<int> vertices;
    std::string token;
    std::stringstream in(text);
    while (std::getline(in, token, ',')) {
        token.erase(0, token.find_first_not_of(" []"));
        token.erase(token.find_last_not_of(" []") + 1);
        if (token.empty())
            continue;
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(token, &used);
            if (used != token.size())
                throw Error("");
        } catch (const std::exception&) {
            throw Error("cannot parse vertex '" + token + "'");
        }
        if (v < 1 || v > m)
            throw Error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
        vertices.push_back(v);
    }
    return VertexSubset::of(vertices);
}

int cmd_check(const std::string& path, const std::string& subset, std::string method, bool cross_check) {
    SimplicialComplex k = complex_from_json(read_json_file(path));
    VertexSubset i = parse_subset(subset, k.m());
    if (cross_check)
        method = "all";
    if (method == "all") {
        auto reports = decide_all(k, i);
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        bool agree = verdicts_agree(reports);
        std::cout << Json{{"reports", arr}, {"agree", agree}}.dump(2) << '\n';
        if (!agree)
            return 2;
        return reports.front().formal() ? 0 : 1;
    }
    FormalityReport r;
    if (method == "flag")
        r = flag_criterion(k, i);
    else if (method == "general")
        r = general_criterion(k, i);
    else if (method == "oracle")
        r = betti_sum_oracle(k, i);
    else
        r = torus_oracle(k, i);
    std::cout << to_json(r).dump(2) << '\n';
    return r.formal() ? 0 : 1;
}

int cmd_betti(const std::string& path, const std::string& which) {
    SimplicialComplex k = complex_from_json(read_json_file(path));
    Json out = Json::object();
    if (which == "real" || which == "both")
        out["real"] = to_json(hochster_real_betti(k));
    if (which == "complex" || which == "both")
        out["complex"] = to_json(hochster_complex_betti(k));
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_hull(const std::string& path) {
    Subgroup a = subgroup_from_json(read_json_file(path));
    Json out{{"I", vertex_list(hull(a))}, {"rank", a.rank()}, {"corank", corank(a)}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_report(const std::string& graph_path, const std::string& subgroup_path) {
    Graph g = graph_from_json(read_json_file(graph_path));
    Subgroup a = subgroup_from_json(read_json_file(subgroup_path));
    std::cout << to_json(coabelian_report(g, a)).dump(2) << '\n';
    return 0;
}

int cmd_census(int max_m, int min_m, const std::string& mode_name, const std::string& out_path, int jobs) {
    CensusMode mode = mode_name == "flag" ? CensusMode::flag : CensusMode::all_complexes;
    if (min_m <= 0)
        min_m = max_m;
    if (min_m > max_m)
        throw Error("--min-vertices exceeds --max-vertices");
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + out_path);
    auto lines = run_census(min_m, max_m, mode, jobs);
    std::size_t disagreements = 0;
    for (const auto& l : lines) {
        out << l << '\n';
        if (l.find("\"agree\":false") != std::string::npos)
            ++disagreements;
    }
    out.close();
    if (!out)
        throw Error("failed writing " + out_path);
    std::cout << "census " << mode_name << " m=" << min_m << ".." << max_m << ": " << lines.size()
              << " records, " << disagreements << " disagreements\n";
    return disagreements == 0 ? 0 : 1;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    VerifyResult result = verify_census(in);
    if (result.records == 0)
        std::cerr << "warning: 0 records\n";
    for (const auto& [line, message] : result.problems)
        std::cerr << path << ":" << line << ": " << message << '\n';
    std::cout << "verified " << result.records << " records, " << result.problems.size()
              << " problems\n";
    return result.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant formality of coordinate actions on real moment-angle complexes"};
    app.require_subcommand(1);

    std::string complex_path, subset, method = "general", which = "both";
    bool cross_check = false;
    auto* check = app.add_subcommand("check", "decide formality of Z2^I on RZ_K");
    check->add_option("complex", complex_path, "complex JSON file")->required();
    check->add_option("-I,--subset", subset, "comma-separated vertices of I (default: empty)");
    check->add_option("--method", method, "decider to run")
        ->check(CLI::IsMember({"flag", "general", "oracle", "torus", "all"}));
    check->add_flag("--cross-check", cross_check, "run every method and compare");

    auto* betti = app.add_subcommand("betti", "Betti numbers of RZ_K and Z_K");
    betti->add_option("complex", complex_path, "complex JSON file")->required();
    betti->add_option("--which", which, "real, complex or both")
        ->check(CLI::IsMember({"real", "complex", "both"}));

    std::string subgroup_path;
    auto* hull_cmd = app.add_subcommand("hull", "coordinate hull of a subgroup of Z2^m");
    hull_cmd->add_option("subgroup", subgroup_path, "subgroup JSON file")->required();

    std::string graph_path;
    auto* report = app.add_subcommand("report", "group report for a coabelian subgroup of W_Γ");
    report->add_option("graph", graph_path, "graph JSON file")->required();
    report->add_option("subgroup", subgroup_path, "subgroup JSON file")->required();

    int max_m = 0, min_m = 0, jobs = 1;
    std::string mode = "flag", out_path;
    auto* census = app.add_subcommand("census", "exhaustive cross-check of all deciders");
    census->add_option("--max-vertices", max_m, "number of vertices")->required();
    census->add_option("--min-vertices", min_m, "smallest vertex count (default: max)");
    census->add_option("--mode", mode, "flag or all-complexes")
        ->check(CLI::IsMember({"flag", "all-complexes"}));
    census->add_option("--out", out_path, "JSONL output path")->required();
    census->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string census_path;
    auto* verify = app.add_subcommand("verify", "recompute a census file");
    verify->add_option("census", census_path, "JSONL census file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*check)
            return cmd_check(complex_path, subset, method, cross_check);
        if (*betti)
            return cmd_betti(complex_path, which);
        if (*hull_cmd)
            return cmd_hull(subgroup_path);
        if (*report)
            return cmd_report(graph_path, subgroup_path);
        if (*census)
            return cmd_census(max_m, min_m, mode, out_path, jobs);
        if (*verify)
            return cmd_verify(census_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
