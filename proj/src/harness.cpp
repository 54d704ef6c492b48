#include "egt/harness.hpp"

#include "egt/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace egt {

const char* class_filter_name(ClassFilter f) {
    switch (f) {
    case ClassFilter::ALL: return "all";
    case ClassFilter::CONNECTED: return "connected";
    case ClassFilter::TWO_CONNECTED: return "2connected";
    }
    return "?";
}

bool passes_filter(const Graph& g, ClassFilter f) {
    switch (f) {
    case ClassFilter::ALL: return true;
    case ClassFilter::CONNECTED: return is_connected(g);
    case ClassFilter::TWO_CONNECTED: return connectivity_profile(g).two_connected;
    }
    return false;
}

namespace {

constexpr int BUILTIN_MAX_N = 7;

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint64_t mask) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1u) {
            adj[static_cast<std::size_t>(pairs[e].first)] |= std::uint64_t(1) << pairs[e].second;
            adj[static_cast<std::size_t>(pairs[e].second)] |= std::uint64_t(1) << pairs[e].first;
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

} // namespace

void enumerate_graphs(int n, ClassFilter filter, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > BUILTIN_MAX_N)
        throw DomainError("enumerate_graphs: builtin exhaustive mode supports 1 <= n <= 7; "
                          "stream graph6 records for larger orders");
    const auto pairs = vertex_pairs(n);
    const std::uint64_t total = std::uint64_t(1) << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, pairs, mask);
        if (passes_filter(g, filter)) fn(g);
    }
}

std::uint64_t enumerate_count(int n, ClassFilter filter) {
    std::uint64_t count = 0;
    enumerate_graphs(n, filter, [&](const Graph&) { ++count; });
    return count;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || n > MAX_VERTICES) throw DomainError("sample_gnp: n outside [0, 62]");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sample_gnp: p outside [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            const std::uint64_t draw = rng.next();
            bool edge;
            if (p <= 0.0)
                edge = false;
            else if (p >= 1.0)
                edge = true;
            else
                edge = draw < static_cast<std::uint64_t>(p * 18446744073709551616.0);
            if (edge) {
                adj[static_cast<std::size_t>(i)] |= std::uint64_t(1) << j;
                adj[static_cast<std::size_t>(j)] |= std::uint64_t(1) << i;
            }
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

GraphSource GraphSource::builtin(int n) {
    GraphSource s;
    s.kind = Kind::BUILTIN;
    s.builtin_n = n;
    return s;
}

GraphSource GraphSource::graph6_file(std::string path) {
    GraphSource s;
    s.kind = Kind::GRAPH6_FILE;
    s.graph6_path = std::move(path);
    return s;
}

GraphSource GraphSource::gnp(int n, double p, int count, std::uint64_t seed) {
    GraphSource s;
    s.kind = Kind::GNP;
    s.gnp_n = n;
    s.gnp_p = p;
    s.gnp_count = count;
    s.gnp_seed = seed;
    return s;
}

GraphSource GraphSource::construction_list(std::vector<ConstructionSpec> specs) {
    GraphSource s;
    s.kind = Kind::CONSTRUCTIONS;
    s.constructions = std::move(specs);
    return s;
}

GraphSource GraphSource::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw DomainError("source: expected builtin:N, g6:FILE or gnp:N,P,COUNT,SEED");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "builtin") return builtin(std::stoi(rest));
    if (kind == "g6") return graph6_file(rest);
    if (kind == "gnp") {
        std::istringstream in(rest);
        int n = 0, count = 0;
        double p = 0.0;
        std::uint64_t seed = 0;
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(in >> n >> c1 >> p >> c2 >> count >> c3 >> seed) || c1 != ',' || c2 != ',' ||
            c3 != ',')
            throw DomainError("source: gnp expects gnp:N,P,COUNT,SEED");
        return gnp(n, p, count, seed);
    }
    throw DomainError("source: unknown kind '" + kind + "'");
}

std::string GraphSource::describe() const {
    switch (kind) {
    case Kind::BUILTIN:
        return "builtin:" + std::to_string(builtin_n);
    case Kind::GRAPH6_FILE:
        return "g6:" + graph6_path;
    case Kind::GNP: {
        std::ostringstream out;
        out << "gnp:" << gnp_n << "," << gnp_p << "," << gnp_count << "," << gnp_seed;
        return out.str();
    }
    case Kind::CONSTRUCTIONS:
        return "constructions:" + std::to_string(constructions.size());
    }
    return "?";
}

namespace {

// Index-addressable view of a source so workers can claim graphs
// independently without materializing exhaustive enumerations.
struct GraphAccessor {
    std::uint64_t count = 0;
    std::function<Graph(std::uint64_t)> get;
};

GraphAccessor make_accessor(const GraphSource& source) {
    GraphAccessor acc;
    switch (source.kind) {
    case GraphSource::Kind::BUILTIN: {
        const int n = source.builtin_n;
        if (n < 1 || n > BUILTIN_MAX_N)
            throw DomainError("builtin source supports 1 <= n <= 7");
        auto pairs = std::make_shared<std::vector<std::pair<int, int>>>(vertex_pairs(n));
        acc.count = std::uint64_t(1) << pairs->size();
        acc.get = [n, pairs](std::uint64_t idx) { return graph_from_mask(n, *pairs, idx); };
        break;
    }
    case GraphSource::Kind::GRAPH6_FILE: {
        std::ifstream in(source.graph6_path);
        if (!in) throw DomainError("cannot open graph6 file: " + source.graph6_path);
        auto lines = std::make_shared<std::vector<std::string>>();
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) lines->push_back(line);
        }
        acc.count = lines->size();
        acc.get = [lines](std::uint64_t idx) { return parse_graph6((*lines)[idx]); };
        break;
    }
    case GraphSource::Kind::GNP: {
        if (source.gnp_count < 0) throw DomainError("gnp source: negative count");
        acc.count = static_cast<std::uint64_t>(source.gnp_count);
        const int n = source.gnp_n;
        const double p = source.gnp_p;
        const std::uint64_t seed = source.gnp_seed;
        acc.get = [n, p, seed](std::uint64_t idx) { return sample_gnp(n, p, seed + idx); };
        break;
    }
    case GraphSource::Kind::CONSTRUCTIONS: {
        auto specs = std::make_shared<std::vector<ConstructionSpec>>(source.constructions);
        acc.count = specs->size();
        acc.get = [specs](std::uint64_t idx) { return build((*specs)[idx]); };
        break;
    }
    }
    return acc;
}

} // namespace

std::vector<Graph> load_graphs(const GraphSource& source) {
    GraphAccessor accessor = make_accessor(source);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(accessor.count, 1u << 20)));
    for (std::uint64_t idx = 0; idx < accessor.count; ++idx) out.push_back(accessor.get(idx));
    return out;
}

namespace {

long long cell_value(const ParamMap& cell, const char* key) {
    auto it = cell.find(key);
    return it == cell.end() ? 0 : it->second;
}

using Range = std::pair<long long, long long>; // inclusive; empty when second < first

void expand_dim(std::vector<ParamMap>& cells, const char* key, const ParamMap& cell, Range range) {
    const long long fixed = cell_value(cell, key);
    std::vector<ParamMap> out;
    for (const ParamMap& base : cells) {
        if (fixed != 0) {
            ParamMap next = base;
            next[key] = fixed;
            out.push_back(std::move(next));
        } else {
            for (long long v = range.first; v <= range.second; ++v) {
                ParamMap next = base;
                next[key] = v;
                out.push_back(std::move(next));
            }
        }
    }
    cells = std::move(out);
}

} // namespace

namespace {

const std::vector<const char*>& theorem_param_keys(TheoremId id) {
    static const std::vector<const char*> none;
    static const std::vector<const char*> just_l{"l"};
    static const std::vector<const char*> just_s{"s"};
    static const std::vector<const char*> just_k{"k"};
    static const std::vector<const char*> l_s{"l", "s"};
    static const std::vector<const char*> c_s{"c", "s"};
    static const std::vector<const char*> k_c{"k", "c"};
    static const std::vector<const char*> k_c_s{"k", "c", "s"};
    static const std::vector<const char*> k_l_s{"k", "l", "s"};
    switch (id) {
    case TheoremId::EG_CYCLE:
    case TheoremId::EG_PATH: return just_l;
    case TheoremId::EXT_EG: return just_s;
    case TheoremId::WHEEL: return just_k;
    case TheoremId::LUO_CYCLE:
    case TheoremId::LUO_PATH: return l_s;
    case TheoremId::KOPYLOV:
    case TheoremId::LUO_2CONN: return c_s;
    case TheoremId::MINDEG_CYCLE: return k_c_s;
    case TheoremId::MINDEG_PATH: return k_l_s;
    case TheoremId::WOODALL: return k_c;
    case TheoremId::FACT1:
    case TheoremId::KOPYLOV_LEMMA: return none;
    }
    return none;
}

} // namespace

std::vector<ParamMap> expand_cells(TheoremId id, GraphAnalysis& analysis, const ParamMap& cell) {
    const auto& known = theorem_param_keys(id);
    for (const auto& [key, value] : cell) {
        if (std::find_if(known.begin(), known.end(),
                         [&](const char* k) { return key == k; }) == known.end())
            throw DomainError(std::string("cell for ") + theorem_code(id) +
                              ": unknown parameter '" + key + "'");
    }
    const long long n = analysis.graph().vertex_count();
    std::vector<ParamMap> cells{{}};
    const auto omega = [&] { return static_cast<long long>(analysis.omega()); };
    const auto delta = [&] { return static_cast<long long>(analysis.min_degree()); };
    switch (id) {
    case TheoremId::EG_CYCLE:
        expand_dim(cells, "l", cell, {3, n + 1});
        break;
    case TheoremId::EG_PATH:
        expand_dim(cells, "l", cell, {2, n + 1});
        break;
    case TheoremId::EXT_EG:
        expand_dim(cells, "s", cell, {1, omega()});
        break;
    case TheoremId::WHEEL:
        expand_dim(cells, "k", cell, {2, omega()});
        break;
    case TheoremId::LUO_CYCLE:
        expand_dim(cells, "l", cell, {3, n + 1});
        expand_dim(cells, "s", cell, {2, omega()});
        break;
    case TheoremId::LUO_PATH:
        expand_dim(cells, "l", cell, {2, n + 1});
        expand_dim(cells, "s", cell, {2, omega()});
        break;
    case TheoremId::KOPYLOV:
    case TheoremId::LUO_2CONN:
        expand_dim(cells, "c", cell, {5, n});
        expand_dim(cells, "s", cell, {2, omega()});
        break;
    case TheoremId::MINDEG_CYCLE:
        expand_dim(cells, "k", cell, {2, delta()});
        expand_dim(cells, "c", cell, {5, n});
        expand_dim(cells, "s", cell, {2, omega()});
        break;
    case TheoremId::MINDEG_PATH:
        expand_dim(cells, "k", cell, {1, delta()});
        expand_dim(cells, "l", cell, {4, n});
        expand_dim(cells, "s", cell, {2, omega()});
        break;
    case TheoremId::WOODALL:
        expand_dim(cells, "k", cell, {2, delta()});
        expand_dim(cells, "c", cell, {5, n});
        break;
    case TheoremId::FACT1:
    case TheoremId::KOPYLOV_LEMMA:
        break;
    }
    return cells;
}

std::uint64_t SuiteReport::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& [code, counters] : per_theorem) total += counters.violations;
    return total;
}

nlohmann::ordered_json SuiteReport::to_json(const SuiteConfig& cfg) const {
    nlohmann::ordered_json j;
    j["schema"] = schema;
    j["generator"] = generator;

    nlohmann::ordered_json config;
    auto theorems = nlohmann::ordered_json::array();
    for (const TheoremGrid& grid : cfg.theorems) {
        nlohmann::ordered_json t;
        t["theorem_id"] = theorem_code(grid.id);
        auto cells_json = nlohmann::ordered_json::array();
        for (const ParamMap& cell : grid.cells) {
            nlohmann::ordered_json c = nlohmann::ordered_json::object();
            for (const auto& [key, value] : cell) c[key] = value;
            cells_json.push_back(std::move(c));
        }
        t["cells"] = std::move(cells_json);
        theorems.push_back(std::move(t));
    }
    config["theorems"] = std::move(theorems);
    config["source"] = cfg.source.describe();
    config["class"] = class_filter_name(cfg.filter);
    // worker count deliberately not echoed: reports must be identical
    // across serial and parallel runs
    switch (cfg.check_options.relax) {
    case PremiseRelax::NONE: config["relax"] = "none"; break;
    case PremiseRelax::TWO_CONNECTED_TO_CONNECTED: config["relax"] = "2conn-to-conn"; break;
    case PremiseRelax::DROP_MIN_DEGREE: config["relax"] = "drop-mindeg"; break;
    }
    j["config"] = std::move(config);

    j["graphs"] = graphs;
    j["cells"] = cells;

    nlohmann::ordered_json per;
    for (const auto& [code, c] : per_theorem) {
        nlohmann::ordered_json t;
        t["checked"] = c.checked;
        t["premise_met"] = c.premise_met;
        t["holds"] = c.holds;
        t["tight"] = c.tight;
        t["violations"] = c.violations;
        t["budget_errors"] = c.budget_errors;
        per[code] = std::move(t);
    }
    j["per_theorem"] = std::move(per);

    auto viol = nlohmann::ordered_json::array();
    for (const Violation& v : violations) {
        nlohmann::ordered_json entry;
        entry["graph6"] = v.graph6;
        entry["theorem_id"] = theorem_code(v.theorem_id);
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [key, value] : v.params) p[key] = value;
        entry["params"] = std::move(p);
        viol.push_back(std::move(entry));
    }
    j["violations"] = std::move(viol);
    j["wall_time_seconds"] = wall_time_seconds;
    return j;
}

namespace {

std::string params_key(const ParamMap& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        out += key;
        out += '=';
        out += std::to_string(value);
        out += ';';
    }
    return out;
}

struct Partial {
    std::map<std::string, TheoremCounters> per_theorem;
    std::vector<Violation> violations;
    std::uint64_t graphs = 0;
    std::uint64_t cells = 0;
};

void process_graph(const Graph& g, const SuiteConfig& cfg, Partial& partial,
                   std::ofstream* sidecar, std::mutex* sidecar_mutex) {
    if (!passes_filter(g, cfg.filter)) return;
    partial.graphs += 1;
    GraphAnalysis analysis(g, cfg.check_options);
    std::string g6; // filled on demand for violations
    for (const TheoremGrid& grid : cfg.theorems) {
        TheoremCounters& counters = partial.per_theorem[theorem_code(grid.id)];
        for (const ParamMap& cell : grid.cells) {
            std::vector<ParamMap> expanded;
            try {
                expanded = expand_cells(grid.id, analysis, cell);
            } catch (const BudgetError&) {
                counters.budget_errors += 1;
                continue;
            }
            for (const ParamMap& params : expanded) {
                partial.cells += 1;
                counters.checked += 1;
                Verdict verdict;
                try {
                    verdict = check(grid.id, analysis, params);
                } catch (const BudgetError&) {
                    counters.budget_errors += 1;
                    continue;
                }
                if (!verdict.premise_met) continue;
                counters.premise_met += 1;
                if (verdict.holds) {
                    counters.holds += 1;
                    if (verdict.tight) counters.tight += 1;
                } else {
                    counters.violations += 1;
                    if (g6.empty()) g6 = to_graph6(g);
                    partial.violations.push_back(Violation{g6, grid.id, params});
                    if (sidecar) {
                        // Crash-safe partial results: append as found, rewritten
                        // sorted on successful completion.
                        std::lock_guard<std::mutex> lock(*sidecar_mutex);
                        (*sidecar) << g6 << '\n' << std::flush;
                    }
                }
            }
        }
    }
}

} // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    if (cfg.workers < 1) throw DomainError("run_suite: workers must be at least 1");
    GraphAccessor accessor = make_accessor(cfg.source);

    std::ofstream sidecar;
    std::mutex sidecar_mutex;
    const std::string sidecar_path =
        cfg.report_path.empty() ? std::string() : cfg.report_path + ".violations.g6";
    if (!sidecar_path.empty()) {
        sidecar.open(sidecar_path, std::ios::trunc);
        if (!sidecar) throw DomainError("run_suite: cannot open sidecar " + sidecar_path);
    }
    std::ofstream* sidecar_ptr = sidecar_path.empty() ? nullptr : &sidecar;

    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.workers), std::max<std::uint64_t>(accessor.count, 1)));
    std::vector<Partial> partials(static_cast<std::size_t>(workers));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&](int wid) {
        try {
            for (;;) {
                const std::uint64_t idx = next.fetch_add(1);
                if (idx >= accessor.count) break;
                const Graph g = accessor.get(idx);
                process_graph(g, cfg, partials[static_cast<std::size_t>(wid)], sidecar_ptr,
                              &sidecar_mutex);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(accessor.count); // stop the other workers
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    SuiteReport report;
    for (const Partial& partial : partials) {
        report.graphs += partial.graphs;
        report.cells += partial.cells;
        for (const auto& [code, c] : partial.per_theorem) {
            TheoremCounters& merged = report.per_theorem[code];
            merged.checked += c.checked;
            merged.premise_met += c.premise_met;
            merged.holds += c.holds;
            merged.tight += c.tight;
            merged.violations += c.violations;
            merged.budget_errors += c.budget_errors;
        }
        report.violations.insert(report.violations.end(), partial.violations.begin(),
                                 partial.violations.end());
    }
    // Theorems with zero cells on every graph still deserve a row.
    for (const TheoremGrid& grid : cfg.theorems) report.per_theorem[theorem_code(grid.id)];

    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& a, const Violation& b) {
                  if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
                  const std::string ca = theorem_code(a.theorem_id);
                  const std::string cb = theorem_code(b.theorem_id);
                  if (ca != cb) return ca < cb;
                  return params_key(a.params) < params_key(b.params);
              });

    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!cfg.report_path.empty()) {
        std::ofstream out(cfg.report_path, std::ios::trunc);
        if (!out) throw DomainError("run_suite: cannot open report " + cfg.report_path);
        out << report.to_json(cfg).dump(2) << '\n';
        // Deterministic final sidecar, one line per violation.
        sidecar.close();
        std::ofstream sorted_sidecar(sidecar_path, std::ios::trunc);
        for (const Violation& v : report.violations) sorted_sidecar << v.graph6 << '\n';
    }
    return report;
}

std::vector<Certificate> search_counterexamples(TheoremId id, const ParamMap& cell,
                                                const GraphSource& source, ClassFilter filter,
                                                std::uint64_t budget, const CheckOptions& options) {
    std::vector<Certificate> certificates;
    if (budget == 0) return certificates;
    GraphAccessor accessor = make_accessor(source);
    for (std::uint64_t idx = 0; idx < accessor.count; ++idx) {
        const Graph g = accessor.get(idx);
        if (!passes_filter(g, filter)) continue;
        GraphAnalysis analysis(g, options);
        std::vector<ParamMap> expanded;
        try {
            expanded = expand_cells(id, analysis, cell);
        } catch (const BudgetError&) {
            continue;
        }
        for (const ParamMap& params : expanded) {
            Verdict verdict;
            try {
                verdict = check(id, analysis, params);
            } catch (const BudgetError&) {
                continue;
            }
            if (verdict.premise_met && !verdict.holds) {
                certificates.push_back(Certificate{to_graph6(g), params, std::move(verdict)});
                if (certificates.size() >= budget) return certificates;
            }
        }
    }
    return certificates;
}

} // namespace egt
