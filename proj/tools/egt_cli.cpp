// Command-line front end: analyze graphs, emit extremal constructions,
// run verification suites, and search for counterexamples under relaxed
// premises. Graphs travel as graph6 lines; results as JSON.

#include "egt/cliques.hpp"
#include "egt/constructions.hpp"
#include "egt/errors.hpp"
#include "egt/harness.hpp"
#include "egt/path_cycle.hpp"
#include "egt/spectral.hpp"
#include "egt/verdicts.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using egt::CheckOptions;
using egt::ClassFilter;
using egt::Graph;
using egt::ParamMap;
using egt::PremiseRelax;
using egt::TheoremId;

std::string read_all(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_all(std::cin);
    std::ifstream file(path);
    if (!file) throw egt::DomainError("cannot open input file: " + path);
    return read_all(file);
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

ParamMap parse_params(const std::string& text) {
    ParamMap params;
    if (text.empty()) return params;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw egt::DomainError("params: expected K=V, got '" + token + "'");
        params[token.substr(0, eq)] = std::stoll(token.substr(eq + 1));
    }
    return params;
}

TheoremId parse_theorem_or_die(const std::string& text) {
    const auto id = egt::parse_theorem_id(text);
    if (!id)
        throw egt::DomainError("unknown theorem id '" + text +
                               "' (use T1..T9, T11, FACT1, L1, C1 or the long names)");
    return *id;
}

ClassFilter parse_class(const std::string& text) {
    if (text == "all") return ClassFilter::ALL;
    if (text == "connected") return ClassFilter::CONNECTED;
    if (text == "2connected") return ClassFilter::TWO_CONNECTED;
    throw egt::DomainError("class: expected all|connected|2connected");
}

PremiseRelax parse_relax(const std::string& text) {
    if (text == "none") return PremiseRelax::NONE;
    if (text == "2conn-to-conn") return PremiseRelax::TWO_CONNECTED_TO_CONNECTED;
    if (text == "drop-mindeg") return PremiseRelax::DROP_MIN_DEGREE;
    throw egt::DomainError("relax: expected none|2conn-to-conn|drop-mindeg");
}

nlohmann::ordered_json analyze_one(const Graph& g, double tol) {
    nlohmann::ordered_json j;
    j["graph6"] = egt::to_graph6(g);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["clique_profile"] = egt::clique_profile(g).to_json();
    j["path_cycle"] = egt::path_cycle_profile(g).to_json();
    if (g.vertex_count() >= 1) {
        egt::SpectralOptions opt;
        opt.tol = tol;
        const egt::SpectralResult s = egt::spectral_radius(g, opt);
        nlohmann::ordered_json spec;
        spec["mu"] = s.mu;
        spec["tolerance"] = s.tolerance;
        spec["iterations"] = s.iterations;
        j["spectral"] = std::move(spec);
    } else {
        j["spectral"] = nullptr;
    }
    return j;
}

int run_analyze(const std::string& format, const std::string& input, double tol) {
    const std::string text = read_input(input);
    bool any_error = false;
    if (format == "edgelist") {
        std::cout << analyze_one(egt::parse_edge_list(text), tol).dump() << "\n";
        return 0;
    }
    for (const std::string& line : nonempty_lines(text)) {
        try {
            std::cout << analyze_one(egt::parse_graph6(line), tol).dump() << "\n";
        } catch (const std::exception& e) {
            nlohmann::ordered_json err;
            err["graph6"] = line;
            err["error"] = e.what();
            std::cout << err.dump() << "\n";
            any_error = true;
        }
    }
    return any_error ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact extremal graph invariants, bounds and theorem verdicts"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "clique/path/cycle/spectral profile as JSON");
    std::string an_format = "g6", an_input = "-";
    double an_tol = 1e-9;
    analyze->add_option("--format", an_format, "g6 (one record per line) or edgelist")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    analyze->add_option("--input", an_input, "input file, or - for stdin");
    analyze->add_option("--tol", an_tol, "spectral tolerance");

    // construct
    auto* construct = app.add_subcommand("construct", "emit an extremal family member as graph6");
    long long co_n = 0, co_k = 0, co_c = 0, co_l = 0;
    auto* hnkc = construct->add_subcommand("hnkc", "clique core with attached outside vertices");
    hnkc->add_option("--n", co_n)->required();
    hnkc->add_option("--k", co_k)->required();
    hnkc->add_option("--c", co_c)->required();
    auto* disjoint = construct->add_subcommand("disjoint-cliques", "n/(l-1) disjoint K_{l-1}");
    disjoint->add_option("--n", co_n)->required();
    disjoint->add_option("--l", co_l)->required();
    auto* shared = construct->add_subcommand("shared-cliques", "K_{l-1} blocks through one vertex");
    shared->add_option("--n", co_n)->required();
    shared->add_option("--l", co_l)->required();
    auto* pendants = construct->add_subcommand("clique-pendants", "K_{n-2} plus two pendant edges");
    pendants->add_option("--n", co_n)->required();
    construct->require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run one theorem over a graph source");
    std::string ve_theorem, ve_params, ve_source, ve_class = "all", ve_out, ve_relax = "none";
    int ve_workers = 1;
    verify->add_option("--theorem", ve_theorem)->required();
    verify->add_option("--params", ve_params, "K=V,... (absent or 0 values sweep all valid)");
    verify->add_option("--source", ve_source, "builtin:N | g6:FILE | gnp:N,P,COUNT,SEED")->required();
    verify->add_option("--class", ve_class, "all | connected | 2connected");
    verify->add_option("--out", ve_out, "report JSON path (sidecar REPORT.violations.g6)");
    verify->add_option("--workers", ve_workers, "parallel worker count");
    verify->add_option("--relax", ve_relax, "none | 2conn-to-conn | drop-mindeg");

    // disintegrate
    auto* disintegrate = app.add_subcommand("disintegrate", "iterated low-degree vertex removal");
    long long di_alpha = 0;
    std::string di_input = "-";
    disintegrate->add_option("--alpha", di_alpha)->required();
    disintegrate->add_option("--input", di_input, "input file, or - for stdin");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "largest adjacency eigenvalue per record");
    double sp_tol = 1e-9;
    std::string sp_input = "-";
    spectral->add_option("--tol", sp_tol);
    spectral->add_option("--input", sp_input, "input file, or - for stdin");

    // search
    auto* search = app.add_subcommand("search", "hunt premise-met violations (relaxed premises)");
    std::string se_theorem, se_params, se_source, se_class = "all", se_relax = "none";
    std::uint64_t se_budget = 100;
    search->add_option("--theorem", se_theorem)->required();
    search->add_option("--params", se_params);
    search->add_option("--source", se_source)->required();
    search->add_option("--class", se_class);
    search->add_option("--relax", se_relax);
    search->add_option("--budget", se_budget, "max certificates to report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(an_format, an_input, an_tol);

        if (*construct) {
            Graph g;
            if (*hnkc)
                g = egt::build_hnkc(static_cast<int>(co_n), static_cast<int>(co_k),
                                    static_cast<int>(co_c));
            else if (*disjoint)
                g = egt::build_disjoint_cliques(static_cast<int>(co_n), static_cast<int>(co_l));
            else if (*shared)
                g = egt::build_shared_vertex_cliques(static_cast<int>(co_n), static_cast<int>(co_l));
            else
                g = egt::build_clique_plus_pendants(static_cast<int>(co_n));
            std::cout << egt::to_graph6(g) << "\n";
            return 0;
        }

        if (*verify) {
            egt::SuiteConfig cfg;
            cfg.theorems = {{parse_theorem_or_die(ve_theorem), {parse_params(ve_params)}}};
            cfg.source = egt::GraphSource::parse(ve_source);
            cfg.filter = parse_class(ve_class);
            cfg.check_options.relax = parse_relax(ve_relax);
            cfg.workers = ve_workers;
            cfg.report_path = ve_out;
            const egt::SuiteReport report = run_suite(cfg);
            if (ve_out.empty()) std::cout << report.to_json(cfg).dump(2) << "\n";
            const auto violations = report.total_violations();
            std::cerr << "graphs=" << report.graphs << " cells=" << report.cells
                      << " violations=" << violations << "\n";
            return violations == 0 ? 0 : 1;
        }

        if (*disintegrate) {
            for (const std::string& line : nonempty_lines(read_input(di_input))) {
                const auto result = egt::disintegrate(egt::parse_graph6(line),
                                                      static_cast<int>(di_alpha));
                std::cout << egt::to_graph6(result.graph) << "\n";
            }
            return 0;
        }

        if (*spectral) {
            for (const std::string& line : nonempty_lines(read_input(sp_input))) {
                egt::SpectralOptions opt;
                opt.tol = sp_tol;
                const egt::SpectralResult r = egt::spectral_radius(egt::parse_graph6(line), opt);
                nlohmann::ordered_json j;
                j["graph6"] = line;
                j["mu"] = r.mu;
                j["tolerance"] = r.tolerance;
                j["iterations"] = r.iterations;
                std::cout << j.dump() << "\n";
            }
            return 0;
        }

        if (*search) {
            CheckOptions options;
            options.relax = parse_relax(se_relax);
            const auto certificates = egt::search_counterexamples(
                parse_theorem_or_die(se_theorem), parse_params(se_params),
                egt::GraphSource::parse(se_source), parse_class(se_class), se_budget, options);
            for (const egt::Certificate& cert : certificates) {
                nlohmann::ordered_json j;
                j["graph6"] = cert.graph6;
                j["verdict"] = cert.verdict.to_json();
                std::cout << j.dump() << "\n";
            }
            std::cerr << "certificates=" << certificates.size() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
