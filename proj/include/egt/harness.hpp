#ifndef EGT_HARNESS_HPP
#define EGT_HARNESS_HPP

#include "egt/constructions.hpp"
#include "egt/graph.hpp"
#include "egt/verdict.hpp"
#include "egt/verdicts.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace egt {

// Deterministic 64-bit generator used everywhere randomness is needed;
// the same seed reproduces the same stream on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline constexpr const char* GENERATOR_NAME = "splitmix64";

enum class ClassFilter { ALL, CONNECTED, TWO_CONNECTED };
const char* class_filter_name(ClassFilter f);

bool passes_filter(const Graph& g, ClassFilter f);

// Every labeled simple graph on n vertices (1 <= n <= 7) that passes the
// filter, visited in ascending edge-bitmask order.
void enumerate_graphs(int n, ClassFilter filter, const std::function<void(const Graph&)>& fn);
std::uint64_t enumerate_count(int n, ClassFilter filter);

// G(n, p): each pair an edge independently with probability p, driven by
// splitmix64 over pairs (0,1), (0,2), ..., in column-major order.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Graph sources a suite can run over.
struct GraphSource {
    enum class Kind { BUILTIN, GRAPH6_FILE, GNP, CONSTRUCTIONS } kind = Kind::BUILTIN;
    int builtin_n = 0;                          // BUILTIN
    std::string graph6_path;                    // GRAPH6_FILE
    int gnp_n = 0;                              // GNP: sample i uses seed + i
    double gnp_p = 0.0;
    int gnp_count = 0;
    std::uint64_t gnp_seed = 0;
    std::vector<ConstructionSpec> constructions; // CONSTRUCTIONS

    static GraphSource builtin(int n);
    static GraphSource graph6_file(std::string path);
    static GraphSource gnp(int n, double p, int count, std::uint64_t seed);
    static GraphSource construction_list(std::vector<ConstructionSpec> specs);

    // Parses "builtin:N", "g6:FILE" or "gnp:N,P,COUNT,SEED".
    static GraphSource parse(const std::string& text);
    std::string describe() const;
};

// Materializes the source; desk-scale sources fit in memory comfortably.
std::vector<Graph> load_graphs(const GraphSource& source);

// In a parameter cell, value 0 means "sweep every value valid for this
// graph" (s up to omega, c over 5..n, and so on per theorem).
struct TheoremGrid {
    TheoremId id{};
    std::vector<ParamMap> cells = {{}};
};

struct SuiteConfig {
    std::vector<TheoremGrid> theorems;
    GraphSource source;
    ClassFilter filter = ClassFilter::ALL;
    CheckOptions check_options;
    int workers = 1;
    std::string report_path; // when set, JSON report plus .violations.g6 sidecar
};

struct TheoremCounters {
    std::uint64_t checked = 0;
    std::uint64_t premise_met = 0;
    std::uint64_t holds = 0;
    std::uint64_t tight = 0;
    std::uint64_t violations = 0;
    std::uint64_t budget_errors = 0;
};

struct Violation {
    std::string graph6;
    TheoremId theorem_id{};
    ParamMap params;
};

struct SuiteReport {
    int schema = 1;
    std::string generator = GENERATOR_NAME;
    std::uint64_t graphs = 0;
    std::uint64_t cells = 0;
    std::map<std::string, TheoremCounters> per_theorem; // keyed by theorem code
    std::vector<Violation> violations;                  // sorted for determinism
    double wall_time_seconds = 0.0;

    std::uint64_t total_violations() const;
    nlohmann::ordered_json to_json(const SuiteConfig& cfg) const;
};

// Evaluates every (graph, theorem, cell); cells are independent work units,
// counters merge commutatively and violations are sorted before reporting,
// so serial and parallel runs produce identical reports.
SuiteReport run_suite(const SuiteConfig& cfg);

// Expansion of wildcard cells for one graph (exposed for tests and search).
std::vector<ParamMap> expand_cells(TheoremId id, GraphAnalysis& analysis, const ParamMap& cell);

struct Certificate {
    std::string graph6;
    ParamMap params;
    Verdict verdict;
};

// Scans the source serially and returns up to `budget` premise-met failures
// of the (possibly relaxed) check.
std::vector<Certificate> search_counterexamples(TheoremId id, const ParamMap& cell,
                                                const GraphSource& source, ClassFilter filter,
                                                std::uint64_t budget,
                                                const CheckOptions& options = {});

} // namespace egt

#endif // EGT_HARNESS_HPP
