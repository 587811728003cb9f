#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qlines/constructions.hpp"
#include "qlines/errors.hpp"
#include "qlines/io.hpp"

using namespace qlines;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExhausted = 3;

std::string read_stdin() {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int fail(const std::string& code, const std::string& message) {
    std::cerr << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
    return kExitInputError;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

QuasimetricSpace space_of_input(const ParsedInput& in) {
    if (in.space) return *in.space;
    if (in.digraph) {
        if (!is_strongly_connected(*in.digraph))
            throw ParseError("digraph is not strongly connected");
        return shortest_path_space(*in.digraph);
    }
    throw ParseError("this operation needs a digraph or a distance matrix");
}

Betweenness betweenness_of_input(const ParsedInput& in) {
    if (in.betweenness) return *in.betweenness;
    return betweenness_of(space_of_input(in));
}

int run_construct(const std::string& family, int p, int q, int r, const std::string& fmt) {
    const PartitionTriple t(p, q, r);
    WeightedDigraph g = family == "C"    ? construct_C(t)
                        : family == "D1" ? construct_D1(t)
                                         : construct_D2(t);
    if (fmt == "dot")
        std::cout << to_dot(g);
    else
        emit(digraph_to_json(g));
    return kExitOk;
}

int run_analyze(const std::string& what, const std::string& fmt) {
    const ParsedInput in = parse_any_input(read_stdin());
    if (what == "space") {
        const QuasimetricSpace s = space_of_input(in);
        if (fmt == "tsv")
            std::cout << matrix_to_tsv(s);
        else
            emit(matrix_to_json(s));
        return kExitOk;
    }
    if (what == "betweenness") {
        emit(betweenness_to_json(betweenness_of_input(in)));
        return kExitOk;
    }
    const Betweenness b = betweenness_of_input(in);
    if (what == "lines") {
        emit(lines_to_json(lines_of(b)));
    } else if (what == "geodesics") {
        emit(geodesics_to_json(maximal_geodesics(b)));
    } else if (what == "symmetric") {
        Json pairs = Json::array();
        for (const auto& [x, y] : symmetric_pairs(b)) pairs.push_back({x, y});
        emit(pairs);
    } else { // validate
        Json p1 = Json::array();
        for (const auto& v : property1_violations(b))
            p1.push_back({{"present", v.present}, {"forbidden", v.forbidden}});
        Json p2 = Json::array();
        for (const auto& v : property2_violations(b))
            p2.push_back({{"points", v.points}, {"direction", v.forward ? "forward" : "backward"}});
        Json fp = Json::array();
        for (const auto& v : validate_four_point_implications(b))
            fp.push_back({{"rule", v.rule}, {"points", v.points}, {"missing", v.missing}});
        emit(Json{{"property1", p1},
                  {"property2", p2},
                  {"four_point", fp},
                  {"ok", p1.empty() && p2.empty() && fp.empty()}});
    }
    return kExitOk;
}

int run_iso(const std::string& path_a, const std::string& path_b) {
    Json ja = Json::parse(read_file(path_a), nullptr, false);
    Json jb = Json::parse(read_file(path_b), nullptr, false);
    if (ja.is_discarded() || jb.is_discarded()) throw ParseError("malformed betweenness JSON");
    const Betweenness a = betweenness_from_json(ja);
    const Betweenness b = betweenness_from_json(jb);
    auto phi = betweenness_isomorphic(a, b);
    if (phi)
        emit(Json{{"isomorphic", true}, {"bijection", *phi}});
    else
        emit(Json{{"isomorphic", false}});
    return kExitOk;
}

int run_realize(const std::string& mode_str) {
    const auto mode = parse_mode(mode_str);
    if (!mode) throw ParseError("mode must be quasimetric or metric");
    Json j = Json::parse(read_stdin(), nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed betweenness JSON");
    emit(certificate_to_json(realize(betweenness_from_json(j), *mode)));
    return kExitOk;
}

double budget_from_env(double flag_value) {
    if (const char* env = std::getenv("QLINES_BUDGET_SECS")) {
        try {
            return std::stod(env);
        } catch (...) {
            throw ParseError("QLINES_BUDGET_SECS is not a number");
        }
    }
    return flag_value;
}

int run_classify(int n, int lines, const std::string& family, const std::string& mode_str,
                 double budget, int jobs, bool allow_universal) {
    if (!family.empty()) {
        const auto fam = parse_family(family);
        if (!fam) throw ParseError("family must be C or D");
        emit(construction_census_to_json(classify_constructions(n, *fam)));
        return kExitOk;
    }
    const auto mode = parse_mode(mode_str);
    if (!mode) throw ParseError("mode must be quasimetric or metric");
    SearchConfig cfg;
    cfg.n = n;
    if (lines > 0) cfg.target_lines = lines;
    cfg.forbid_universal = !allow_universal;
    cfg.mode = *mode;
    cfg.time_budget_secs = budget_from_env(budget);
    cfg.jobs = jobs;
    try {
        cfg.validate();
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what());
    }
    const SearchReport report = enumerate_betweennesses(cfg);
    emit(search_report_to_json(report));
    return report.complete ? kExitOk : kExitBudgetExhausted;
}

int run_census(int n, const std::string& family) {
    const auto fam = parse_family(family);
    if (!fam) throw ParseError("family must be C or D");
    emit(construction_census_to_json(classify_constructions(n, *fam)));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasimetric line structures: constructions, analysis, classification"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "emit a C/D1/D2 construction digraph");
    std::string family, emit_fmt = "json";
    int p = 1, q = 1, r = 1;
    construct->add_option("--family", family, "C, D1 or D2")
        ->required()
        ->check(CLI::IsMember({"C", "D1", "D2"}));
    construct->add_option("--p", p, "first part")->required();
    construct->add_option("--q", q, "second part")->required();
    construct->add_option("--r", r, "third part")->required();
    construct->add_option("--emit", emit_fmt, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* analyze = app.add_subcommand("analyze", "analyze a digraph, matrix, or betweenness");
    std::string what, analyze_fmt = "json";
    analyze->add_option("--what", what, "space, betweenness, lines, geodesics, symmetric, validate")
        ->required()
        ->check(CLI::IsMember({"space", "betweenness", "lines", "geodesics", "symmetric",
                               "validate"}));
    analyze->add_option("--emit", analyze_fmt, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two betweenness files");
    std::string path_a, path_b;
    iso->add_option("a", path_a, "first betweenness JSON file")->required();
    iso->add_option("b", path_b, "second betweenness JSON file")->required();

    auto* realize_cmd = app.add_subcommand("realize", "decide realizability of a betweenness");
    std::string mode_str = "quasimetric";
    realize_cmd->add_option("--mode", mode_str, "quasimetric or metric");

    auto* classify = app.add_subcommand("classify", "enumerate or census betweenness classes");
    int cls_n = 4, cls_lines = 0, jobs = 1;
    std::string cls_family, cls_mode = "quasimetric";
    double budget = 1800.0;
    bool allow_universal = false;
    classify->add_option("--n", cls_n, "point count")->required();
    classify->add_option("--lines", cls_lines, "target line count (enumeration)");
    classify->add_option("--family", cls_family, "C or D (construction census)");
    classify->add_option("--mode", cls_mode, "quasimetric or metric");
    classify->add_option("--budget", budget, "time budget in seconds");
    classify->add_option("--jobs", jobs, "worker threads");
    classify->add_flag("--allow-universal", allow_universal, "do not exclude universal lines");

    auto* census_cmd = app.add_subcommand("census", "canonical class census of a family");
    int census_n = 4;
    std::string census_family;
    census_cmd->add_option("--family", census_family, "C or D")->required();
    census_cmd->add_option("--n", census_n, "point count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("cli_error", e.what());
    }

    try {
        if (app.got_subcommand(construct)) return run_construct(family, p, q, r, emit_fmt);
        if (app.got_subcommand(analyze)) return run_analyze(what, analyze_fmt);
        if (app.got_subcommand(iso)) return run_iso(path_a, path_b);
        if (app.got_subcommand(realize_cmd)) return run_realize(mode_str);
        if (app.got_subcommand(classify))
            return run_classify(cls_n, cls_lines, cls_family, cls_mode, budget, jobs,
                                allow_universal);
        if (app.got_subcommand(census_cmd)) return run_census(census_n, census_family);
    } catch (const Error& e) {
        return fail(e.code(), e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
    return fail("cli_error", "no subcommand");
}
