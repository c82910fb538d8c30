/* mine.hpp -- counterexample mining over enumerated and sampled small
 * instances.  Each supported proposition has a checker; the harness
 * enumerates instances exhaustively inside the small-bounds box
 * (|X| <= 2, n <= 1, D <= 2) and samples randomly beyond, reporting zero
 * witnesses or the first (minimal in enumeration order) witness found.
 */
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mftop {

struct MineBounds {
    std::size_t max_points = 2;
    std::uint32_t max_dim = 1;
    std::uint32_t max_den = 2;
    /// 0 selects exhaustive mode when the bounds fit the small box,
    /// otherwise a default sample count; nonzero forces sampling.
    std::uint64_t samples = 0;
};

/// Deliberate fault injection for harness-sensitivity tests: DropN1
/// removes the constants completion from instance generation, so derived
/// systems violate N1 and the checkers must catch it.
enum class Mutation { None, DropN1 };

std::string to_string(Mutation mutation);
Mutation mutation_from_string(std::string_view text);

struct MineOptions {
    std::uint64_t seed = 0;
    std::optional<std::chrono::milliseconds> budget;
    Mutation mutation = Mutation::None;
};

struct MineResult {
    std::string proposition;
    MineBounds bounds;
    bool exhaustive = false;
    Mutation mutation = Mutation::None;
    std::uint64_t instances_checked = 0;
    bool complete = true; // false when the budget cut enumeration short
    std::optional<nlohmann::json> witness;

    bool ok() const { return !witness.has_value(); }
    nlohmann::json to_json() const;
};

/// Proposition ids accepted by mine_counterexamples.
const std::vector<std::string>& mined_propositions();

MineResult mine_counterexamples(const std::string& proposition, const MineBounds& bounds,
                                const MineOptions& options = {});

} // namespace mftop
