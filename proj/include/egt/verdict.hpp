#ifndef EGT_VERDICT_HPP
#define EGT_VERDICT_HPP

#include "egt/bigint.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace egt {

// One check per inequality the library certifies. Codes (T1..T11, L1, C1,
// FACT1) are the CLI-facing identifiers.
enum class TheoremId {
    EG_CYCLE,      // T1: m <= (l-1)(n-1)/2 for graphs with no cycle of length >= l
    EG_PATH,       // T2: m <= (l-2)n/2 for P_l-free graphs
    EXT_EG,        // T3: longest path >= (s+1)N_{s+1}/N_s + s - 1
    WHEEL,         // T4: P_l v K_1 subgraph with l >= (k+1)N_{k+1}/N_k + k - 1, plus cycle range
    LUO_CYCLE,     // T5: N_s <= (n-1)/(l-2) C(l-1,s) for C_{>=l}-free graphs
    LUO_PATH,      // T6: N_s <= n/(l-1) C(l-1,s) for P_l-free graphs
    KOPYLOV,       // T7: MINDEG_CYCLE at k = 2
    LUO_2CONN,     // T8: MINDEG_CYCLE bound with only 2-connectivity premised
    MINDEG_CYCLE,  // T9: N_s <= max{f_s(n,k,c), f_s(n,floor((c-1)/2),c)}
    MINDEG_PATH,   // T11: path variant of T9
    FACT1,         // cycle lengths 3..floor(3N_3/N_2 + 2) all present
    KOPYLOV_LEMMA, // L1: circumference >= min{m+1, d_P(x)+d_P(y)} for 2-connected graphs
    WOODALL,       // C1: MINDEG_CYCLE at s = 2
};

const char* theorem_code(TheoremId id); // "T1", ..., "FACT1", "L1", "C1"
const char* theorem_name(TheoremId id); // "EG_CYCLE", ...
std::optional<TheoremId> parse_theorem_id(std::string_view text); // accepts codes and names

using ParamMap = std::map<std::string, long long>;

struct Verdict {
    TheoremId theorem_id{};
    ParamMap params;
    bool premise_met = false;
    Rational bound;   // evaluated only when the premise is met
    BigInt observed;
    bool holds = false; // meaningful only when premise_met
    bool tight = false; // implies holds
    std::optional<nlohmann::ordered_json> witness;

    nlohmann::ordered_json to_json() const;
};

} // namespace egt

#endif // EGT_VERDICT_HPP
