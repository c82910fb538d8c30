/* enumerate.hpp -- exhaustive grid enumeration and seeded random instance
 * generation, shared by the neighbourhood machinery, the mining harness,
 * and the test suites.
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mftop/topology.hpp"

namespace mftop {

/// Number of grid sets over the shape, (D+1)^(|X| * n); throws ValueError
/// when it exceeds the enumeration cap.
std::uint64_t grid_set_count(const SpaceShape& shape);

/// Guard for exhaustive enumeration; operations that would enumerate more
/// refuse with ValueError rather than thrash.
inline constexpr std::uint64_t kMaxGridEnumeration = std::uint64_t{1} << 22;

/// Every multi-fuzzy set over the shape, in canonical order.
SetFamily all_grid_sets(const SpaceShape& shape);

/// Every restricted-class set over the shape, in canonical order.
SetFamily all_restricted_grid_sets(const SpaceShape& shape);

/// Deterministic synthetic universe {"p0", ..}.  Sizes up to 10 keep the
/// labels in lexicographic order.
Universe synthetic_universe(std::size_t points);

using Rng = std::mt19937_64;

/// A uniformly random restricted-class set over the shape.
MultiFuzzySet random_restricted_set(Rng& rng, const SpaceShape& shape);
/// A uniformly random grid set (no class restriction).
MultiFuzzySet random_grid_set(Rng& rng, const SpaceShape& shape);

/// A random Lowen topology: up to `max_seeds` random restricted sets,
/// closed via generate.
MultiFuzzyTopology random_topology(Rng& rng, const SpaceShape& shape,
                                   std::size_t max_seeds = 3,
                                   const GenerateOptions& options = {});

/// A uniformly random total point map.
PointMap random_point_map(Rng& rng, const Universe& domain, const Universe& codomain);

/// All Lowen topologies over the shape obtainable from seed subsets of the
/// restricted grid (deduplicated, canonical order).  On finite shapes this
/// is exactly the set of all Lowen topologies.  Requires at most
/// `max_subsets` seed subsets, else throws ValueError.
std::vector<MultiFuzzyTopology> all_generated_topologies(
    const SpaceShape& shape, std::uint64_t max_subsets = std::uint64_t{1} << 20,
    const GenerateOptions& options = {});

} // namespace mftop
