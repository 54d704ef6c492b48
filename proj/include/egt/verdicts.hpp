#ifndef EGT_VERDICTS_HPP
#define EGT_VERDICTS_HPP

#include "egt/bounds.hpp"
#include "egt/cliques.hpp"
#include "egt/graph.hpp"
#include "egt/path_cycle.hpp"
#include "egt/verdict.hpp"

#include <optional>
#include <vector>

namespace egt {

// Premise weakenings used by counterexample search to probe which hypotheses
// carry a theorem. They never change the bound being tested.
enum class PremiseRelax {
    NONE,
    TWO_CONNECTED_TO_CONNECTED, // accept merely connected graphs where 2-connectivity is premised
    DROP_MIN_DEGREE,            // ignore the delta(G) >= k hypothesis
};

struct CheckOptions {
    CliqueBudget clique_budget{};
    PathCycleLimits path_limits{};
    PremiseRelax relax = PremiseRelax::NONE;
};

// Caches the expensive per-graph observables so parameter sweeps over one
// graph do not recompute them per cell. Not thread-shared; the graph must
// outlive the analysis.
class GraphAnalysis {
public:
    explicit GraphAnalysis(const Graph& g, const CheckOptions& options = {});

    const Graph& graph() const { return g_; }
    const CheckOptions& options() const { return options_; }

    const CliqueProfile& cliques();
    int omega();
    int longest_path_edges();
    const std::vector<int>& path_witness();
    int circumference_length();
    const std::vector<int>& spectrum();
    bool has_cycle_of_length_at_least(int l);
    // Largest t >= 2 such that every length in {3..t} is present.
    int consecutive_cycle_run();
    const ConnectivityProfile& connectivity();
    const std::optional<WheelWitness>& wheel();
    int min_degree() const { return g_.min_degree(); }

private:
    const Graph& g_;
    CheckOptions options_;
    std::optional<CliqueProfile> cliques_;
    struct PathData {
        int edges;
        std::vector<int> witness;
    };
    std::optional<PathData> path_;
    struct CycleData {
        int circumference;
        std::vector<int> spectrum;
        std::vector<int> witness;
    };
    std::optional<CycleData> cycles_;
    std::optional<ConnectivityProfile> connectivity_;
    std::optional<std::optional<WheelWitness>> wheel_;

    const CycleData& cycle_data();
};

// Evaluates one theorem on one graph: premise, exact bound, observable,
// holds and tightness flags, witness. Missing or malformed params raise
// DomainError; unmet premises yield structured verdicts instead.
Verdict check(TheoremId id, GraphAnalysis& analysis, const ParamMap& params);
Verdict check(TheoremId id, const Graph& g, const ParamMap& params,
              const CheckOptions& options = {});

} // namespace egt

#endif // EGT_VERDICTS_HPP
