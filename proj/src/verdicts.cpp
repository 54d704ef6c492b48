#include "egt/verdicts.hpp"

#include "egt/errors.hpp"

#include <algorithm>
#include <string>

namespace egt {

const char* theorem_code(TheoremId id) {
    switch (id) {
    case TheoremId::EG_CYCLE: return "T1";
    case TheoremId::EG_PATH: return "T2";
    case TheoremId::EXT_EG: return "T3";
    case TheoremId::WHEEL: return "T4";
    case TheoremId::LUO_CYCLE: return "T5";
    case TheoremId::LUO_PATH: return "T6";
    case TheoremId::KOPYLOV: return "T7";
    case TheoremId::LUO_2CONN: return "T8";
    case TheoremId::MINDEG_CYCLE: return "T9";
    case TheoremId::MINDEG_PATH: return "T11";
    case TheoremId::FACT1: return "FACT1";
    case TheoremId::KOPYLOV_LEMMA: return "L1";
    case TheoremId::WOODALL: return "C1";
    }
    return "?";
}

const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::EG_CYCLE: return "EG_CYCLE";
    case TheoremId::EG_PATH: return "EG_PATH";
    case TheoremId::EXT_EG: return "EXT_EG";
    case TheoremId::WHEEL: return "WHEEL";
    case TheoremId::LUO_CYCLE: return "LUO_CYCLE";
    case TheoremId::LUO_PATH: return "LUO_PATH";
    case TheoremId::KOPYLOV: return "KOPYLOV";
    case TheoremId::LUO_2CONN: return "LUO_2CONN";
    case TheoremId::MINDEG_CYCLE: return "MINDEG_CYCLE";
    case TheoremId::MINDEG_PATH: return "MINDEG_PATH";
    case TheoremId::FACT1: return "FACT1";
    case TheoremId::KOPYLOV_LEMMA: return "KOPYLOV_LEMMA";
    case TheoremId::WOODALL: return "WOODALL";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
    static constexpr TheoremId all[] = {
        TheoremId::EG_CYCLE,     TheoremId::EG_PATH,      TheoremId::EXT_EG,
        TheoremId::WHEEL,        TheoremId::LUO_CYCLE,    TheoremId::LUO_PATH,
        TheoremId::KOPYLOV,      TheoremId::LUO_2CONN,    TheoremId::MINDEG_CYCLE,
        TheoremId::MINDEG_PATH,  TheoremId::FACT1,        TheoremId::KOPYLOV_LEMMA,
        TheoremId::WOODALL,
    };
    for (TheoremId id : all) {
        if (text == theorem_code(id) || text == theorem_name(id)) return id;
    }
    return std::nullopt;
}

nlohmann::ordered_json Verdict::to_json() const {
    nlohmann::ordered_json j;
    j["theorem_id"] = theorem_code(theorem_id);
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) p[key] = value;
    j["params"] = std::move(p);
    j["premise_met"] = premise_met;
    j["bound"] = bound.to_string();
    j["observed"] = observed.to_string();
    j["holds"] = holds;
    j["tight"] = tight;
    j["witness"] = witness ? *witness : nlohmann::ordered_json(nullptr);
    return j;
}

GraphAnalysis::GraphAnalysis(const Graph& g, const CheckOptions& options)
    : g_(g), options_(options) {}

const CliqueProfile& GraphAnalysis::cliques() {
    if (!cliques_) cliques_ = clique_profile(g_, options_.clique_budget);
    return *cliques_;
}

int GraphAnalysis::omega() { return cliques().omega; }

int GraphAnalysis::longest_path_edges() {
    if (!path_) {
        if (g_.vertex_count() == 0) {
            path_ = PathData{0, {}};
        } else {
            auto [edges, witness] = longest_path(g_, options_.path_limits);
            path_ = PathData{edges, std::move(witness)};
        }
    }
    return path_->edges;
}

const std::vector<int>& GraphAnalysis::path_witness() {
    longest_path_edges();
    return path_->witness;
}

const GraphAnalysis::CycleData& GraphAnalysis::cycle_data() {
    if (!cycles_) {
        auto [circ, witness] = circumference(g_, options_.path_limits);
        CycleData data{circ, cycle_spectrum(g_, options_.path_limits), std::move(witness)};
        cycles_ = std::move(data);
    }
    return *cycles_;
}

int GraphAnalysis::circumference_length() { return cycle_data().circumference; }

const std::vector<int>& GraphAnalysis::spectrum() { return cycle_data().spectrum; }

bool GraphAnalysis::has_cycle_of_length_at_least(int l) {
    const auto& spec = spectrum();
    return !spec.empty() && spec.back() >= l;
}

int GraphAnalysis::consecutive_cycle_run() {
    int run = 2;
    for (int t : spectrum()) {
        if (t == run + 1)
            ++run;
        else if (t > run + 1)
            break;
    }
    return run;
}

const ConnectivityProfile& GraphAnalysis::connectivity() {
    if (!connectivity_) connectivity_ = connectivity_profile(g_);
    return *connectivity_;
}

const std::optional<WheelWitness>& GraphAnalysis::wheel() {
    if (!wheel_) wheel_ = max_wheel(g_, options_.path_limits);
    return *wheel_;
}

namespace {

long long need_param(const ParamMap& params, const char* key, TheoremId id) {
    auto it = params.find(key);
    if (it == params.end())
        throw DomainError(std::string("check(") + theorem_code(id) + "): missing parameter '" +
                          key + "'");
    return it->second;
}

Verdict base_verdict(TheoremId id, ParamMap params) {
    Verdict v;
    v.theorem_id = id;
    v.params = std::move(params);
    return v;
}

// Connectivity hypothesis with the configured weakening applied.
bool two_connected_premise(GraphAnalysis& a) {
    if (a.options().relax == PremiseRelax::TWO_CONNECTED_TO_CONNECTED)
        return a.connectivity().connected;
    return a.connectivity().two_connected;
}

bool min_degree_premise(GraphAnalysis& a, long long k) {
    if (a.options().relax == PremiseRelax::DROP_MIN_DEGREE) return true;
    return a.min_degree() >= k;
}

Verdict check_eg_cycle(GraphAnalysis& a, ParamMap params) {
    const long long l = need_param(params, "l", TheoremId::EG_CYCLE);
    Verdict v = base_verdict(TheoremId::EG_CYCLE, std::move(params));
    const int n = a.graph().vertex_count();
    if (l < 3 || n == 0 || a.has_cycle_of_length_at_least(static_cast<int>(l))) return v;
    v.premise_met = true;
    v.bound = eg_bounds(n, l).cycle_bound;
    v.observed = BigInt(a.graph().edge_count());
    v.holds = Rational(v.observed) <= v.bound;
    v.tight = v.holds && Rational(v.observed) == v.bound;
    return v;
}

Verdict check_eg_path(GraphAnalysis& a, ParamMap params) {
    const long long l = need_param(params, "l", TheoremId::EG_PATH);
    Verdict v = base_verdict(TheoremId::EG_PATH, std::move(params));
    const int n = a.graph().vertex_count();
    if (l < 2 || n == 0 || a.longest_path_edges() >= l - 1) return v;
    v.premise_met = true;
    v.bound = eg_bounds(n, l).path_bound;
    v.observed = BigInt(a.graph().edge_count());
    v.holds = Rational(v.observed) <= v.bound;
    v.tight = v.holds && Rational(v.observed) == v.bound;
    return v;
}

Verdict check_ext_eg(GraphAnalysis& a, ParamMap params) {
    const long long s = need_param(params, "s", TheoremId::EXT_EG);
    Verdict v = base_verdict(TheoremId::EXT_EG, std::move(params));
    if (s < 1 || a.graph().vertex_count() == 0 || s > a.omega()) return v;
    v.premise_met = true;
    v.bound = extended_eg_bound(a.cliques(), s);
    v.observed = BigInt(a.longest_path_edges());
    v.holds = Rational(v.observed) >= v.bound;
    v.tight = v.holds && v.observed == v.bound.ceil();
    nlohmann::ordered_json w;
    w["path"] = a.path_witness();
    v.witness = std::move(w);
    return v;
}

Verdict check_wheel(GraphAnalysis& a, ParamMap params) {
    const long long k = need_param(params, "k", TheoremId::WHEEL);
    Verdict v = base_verdict(TheoremId::WHEEL, std::move(params));
    if (k < 2 || a.graph().vertex_count() == 0 || k > a.omega()) return v;
    v.premise_met = true;
    const Rational ratio(BigInt(k + 1) * a.cliques().count(static_cast<int>(k) + 1),
                         a.cliques().count(static_cast<int>(k)));
    v.bound = ratio + Rational(BigInt(k - 1));
    const WheelWitness& wheel = *a.wheel(); // premise guarantees an edge
    v.observed = BigInt(wheel.l);
    const long long run_end = (ratio.ceil() + BigInt(k)).to_ll();
    v.holds = Rational(v.observed) >= v.bound && a.consecutive_cycle_run() >= run_end;
    v.tight = v.holds && v.observed == v.bound.ceil();
    nlohmann::ordered_json w;
    w["center"] = wheel.center;
    w["path"] = wheel.path;
    w["required_cycle_lengths_through"] = run_end;
    v.witness = std::move(w);
    return v;
}

Verdict check_luo_cycle(GraphAnalysis& a, ParamMap params) {
    const long long l = need_param(params, "l", TheoremId::LUO_CYCLE);
    const long long s = need_param(params, "s", TheoremId::LUO_CYCLE);
    Verdict v = base_verdict(TheoremId::LUO_CYCLE, std::move(params));
    const int n = a.graph().vertex_count();
    if (l < 3 || s < 2 || n == 0 || a.has_cycle_of_length_at_least(static_cast<int>(l))) return v;
    v.premise_met = true;
    v.bound = luo_bounds(n, s, l).cycle_bound;
    v.observed = a.cliques().count(static_cast<int>(s));
    v.holds = Rational(v.observed) <= v.bound;
    v.tight = v.holds && Rational(v.observed) == v.bound;
    return v;
}

Verdict check_luo_path(GraphAnalysis& a, ParamMap params) {
    const long long l = need_param(params, "l", TheoremId::LUO_PATH);
    const long long s = need_param(params, "s", TheoremId::LUO_PATH);
    Verdict v = base_verdict(TheoremId::LUO_PATH, std::move(params));
    const int n = a.graph().vertex_count();
    if (l < 2 || s < 2 || n == 0 || a.longest_path_edges() >= l - 1) return v;
    v.premise_met = true;
    v.bound = luo_bounds(n, s, l).path_bound;
    v.observed = a.cliques().count(static_cast<int>(s));
    v.holds = Rational(v.observed) <= v.bound;
    v.tight = v.holds && Rational(v.observed) == v.bound;
    return v;
}

Verdict check_mindeg_cycle(TheoremId reported_id, GraphAnalysis& a, ParamMap params,
                           long long k, bool premise_uses_min_degree) {
    const long long c = need_param(params, "c", reported_id);
    const long long s = need_param(params, "s", reported_id);
    Verdict v = base_verdict(reported_id, std::move(params));
    const int n = a.graph().vertex_count();
    const bool premise = k >= 2 && c >= 5 && s >= 2 && n >= c && two_connected_premise(a) &&
                         a.circumference_length() < c &&
                         (!premise_uses_min_degree || min_degree_premise(a, k)) &&
                         k <= c; // keeps the bound formula in domain under relaxations
    if (!premise) return v;
    v.premise_met = true;
    v.bound = Rational(kopylov_family_bound(n, k, c, s));
    v.observed = a.cliques().count(static_cast<int>(s));
    v.holds = Rational(v.observed) <= v.bound;
    v.tight = v.holds && Rational(v.observed) == v.bound;
    return v;
}

Verdict check_mindeg_path(GraphAnalysis& a, ParamMap params) {
    const long long k = need_param(params, "k", TheoremId::MINDEG_PATH);
    const long long l = need_param(params, "l", TheoremId::MINDEG_PATH);
    const long long s = need_param(params, "s", TheoremId::MINDEG_PATH);
    Verdict v = base_verdict(TheoremId::MINDEG_PATH, std::move(params));
    const int n = a.graph().vertex_count();
    const bool premise = k >= 1 && l >= 4 && s >= 2 && n >= l && a.connectivity().connected &&
                         a.longest_path_edges() < l - 1 && min_degree_premise(a, k) &&
                         k <= l - 1; // keeps the bound formula in domain under relaxations
    if (!premise) return v;
    v.premise_met = true;
    v.bound = Rational(kopylov_family_path_bound(n, k, l, s));
    v.observed = a.cliques().count(static_cast<int>(s));
    v.holds = Rational(v.observed) <= v.bound;
    v.tight = v.holds && Rational(v.observed) == v.bound;
    return v;
}

Verdict check_fact1(GraphAnalysis& a, ParamMap params) {
    Verdict v = base_verdict(TheoremId::FACT1, std::move(params));
    if (a.graph().edge_count() < 1) return v;
    v.premise_met = true;
    const Rational ratio(BigInt(3) * a.cliques().count(3), a.cliques().count(2));
    v.bound = ratio + Rational(BigInt(2));
    const long long required = v.bound.floor().to_ll(); // cycles needed through 3..required
    const int run = a.consecutive_cycle_run();
    v.observed = BigInt(run);
    v.holds = run >= required;
    v.tight = v.holds && run == required;
    nlohmann::ordered_json w;
    w["required_cycle_lengths_through"] = required;
    w["spectrum"] = a.spectrum();
    v.witness = std::move(w);
    return v;
}

Verdict check_kopylov_lemma(GraphAnalysis& a, ParamMap params) {
    Verdict v = base_verdict(TheoremId::KOPYLOV_LEMMA, std::move(params));
    if (!two_connected_premise(a) || a.graph().vertex_count() < 3) return v;
    v.premise_met = true;
    long long best_target = 0;
    std::vector<int> best_path;
    int best_dx = 0, best_dy = 0;
    for (const std::vector<int>& path : greedy_maximal_paths(a.graph())) {
        if (path.size() < 2) continue;
        std::uint64_t inpath = 0;
        for (int u : path) inpath |= std::uint64_t(1) << u;
        const int m = static_cast<int>(path.size()) - 1;
        const int dx = std::popcount(a.graph().neighbors(path.front()) & inpath);
        const int dy = std::popcount(a.graph().neighbors(path.back()) & inpath);
        const long long target = std::min<long long>(m + 1, dx + dy);
        if (target > best_target) {
            best_target = target;
            best_path = path;
            best_dx = dx;
            best_dy = dy;
        }
    }
    v.bound = Rational(BigInt(best_target));
    v.observed = BigInt(a.circumference_length());
    v.holds = Rational(v.observed) >= v.bound;
    v.tight = v.holds && v.observed == v.bound.ceil();
    nlohmann::ordered_json w;
    w["path"] = best_path;
    w["d_path_x"] = best_dx;
    w["d_path_y"] = best_dy;
    v.witness = std::move(w);
    return v;
}

} // namespace

Verdict check(TheoremId id, GraphAnalysis& a, const ParamMap& params) {
    switch (id) {
    case TheoremId::EG_CYCLE:
        return check_eg_cycle(a, params);
    case TheoremId::EG_PATH:
        return check_eg_path(a, params);
    case TheoremId::EXT_EG:
        return check_ext_eg(a, params);
    case TheoremId::WHEEL:
        return check_wheel(a, params);
    case TheoremId::LUO_CYCLE:
        return check_luo_cycle(a, params);
    case TheoremId::LUO_PATH:
        return check_luo_path(a, params);
    case TheoremId::KOPYLOV: {
        ParamMap p = params;
        Verdict v = check_mindeg_cycle(TheoremId::KOPYLOV, a, std::move(p), 2, true);
        return v;
    }
    case TheoremId::LUO_2CONN:
        return check_mindeg_cycle(TheoremId::LUO_2CONN, a, params, 2, false);
    case TheoremId::MINDEG_CYCLE:
        return check_mindeg_cycle(TheoremId::MINDEG_CYCLE, a, params,
                                  need_param(params, "k", TheoremId::MINDEG_CYCLE), true);
    case TheoremId::MINDEG_PATH:
        return check_mindeg_path(a, params);
    case TheoremId::FACT1:
        return check_fact1(a, params);
    case TheoremId::KOPYLOV_LEMMA:
        return check_kopylov_lemma(a, params);
    case TheoremId::WOODALL: {
        ParamMap p = params;
        p["s"] = 2;
        Verdict v = check_mindeg_cycle(TheoremId::WOODALL, a, std::move(p),
                                       need_param(params, "k", TheoremId::WOODALL), true);
        return v;
    }
    }
    throw DomainError("check: unknown theorem id");
}

Verdict check(TheoremId id, const Graph& g, const ParamMap& params, const CheckOptions& options) {
    GraphAnalysis analysis(g, options);
    return check(id, analysis, params);
}

} // namespace egt
