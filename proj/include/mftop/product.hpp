/* product.hpp -- product spaces, projections, slice embeddings, product
 * maps, second countability, covers and compactness.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mftop/morphisms.hpp"

namespace mftop {

/// The product of two spaces: pair universe, the generating basis
/// {F x G : F open, G open} with factor bookkeeping, and the generated
/// topology.
class ProductSpace {
public:
    ProductSpace(MultiFuzzyTopology factor1, MultiFuzzyTopology factor2);

    const MultiFuzzyTopology& factor1() const { return factor1_; }
    const MultiFuzzyTopology& factor2() const { return factor2_; }
    const PairUniverse& pairs() const { return pairs_; }
    const SetFamily& basis() const { return basis_; }
    /// For each basis member, indices (into the factors' opens) of one
    /// factor pair producing it.
    const std::vector<std::pair<std::size_t, std::size_t>>& basis_factors() const {
        return basis_factors_;
    }
    const MultiFuzzyTopology& topology() const { return topology_; }

private:
    MultiFuzzyTopology factor1_;
    MultiFuzzyTopology factor2_;
    PairUniverse pairs_;
    SetFamily basis_;
    std::vector<std::pair<std::size_t, std::size_t>> basis_factors_;
    MultiFuzzyTopology topology_;
};

ProductSpace product_topology(const MultiFuzzyTopology& factor1,
                              const MultiFuzzyTopology& factor2);

/// Projection onto factor j (1 or 2), as a map of spaces.
SpaceMap projection(const ProductSpace& product, int j);

/// The product topology equals the topology generated by the projection
/// preimages of the factor opens; minimality of the product topology
/// among topologies making both projections continuous.
bool smallest_topology_check(const ProductSpace& product);

enum class SliceSide {
    Left,  // fixed point in factor 1: x2 -> (a, x2)
    Right, // fixed point in factor 2: x1 -> (x1, a)
};

SpaceMap slice_embedding(const ProductSpace& product, std::string_view fixed_label,
                         SliceSide side);

/// The pair map (x1,x2) -> (f1(x1), f2(x2)) between the product of the
/// domains and the product of the codomains.
SpaceMap product_map(const SpaceMap& m1, const SpaceMap& m2);

struct SecondCountability {
    bool second_countable; // always true on a finite grade grid
    SetFamily base;        // the minimal base witnessing it
};

SecondCountability is_second_countable(const MultiFuzzyTopology& space);

/// {b1 x b2 : b1 in base1, b2 in base2}, deduplicated; the inputs must be
/// open bases of the factors, and the result is an open base of the
/// product topology.
SetFamily product_base(const ProductSpace& product, const SetFamily& base1,
                       const SetFamily& base2);

/// A crisp subset of the universe, by labels.
using CrispSubset = std::vector<std::string>;

/// A cover instance: a family of multi-fuzzy sets against either a
/// multi-fuzzy set target (domination) or a crisp subset target (each
/// coordinate grade reaches 1 at every subset point).
struct Cover {
    std::variant<MultiFuzzySet, CrispSubset> target;
    SetFamily family;

    static Cover of_set(MultiFuzzySet target, SetFamily family);
    static Cover of_subset(CrispSubset subset, SetFamily family);
};

bool is_cover(const Cover& cover);

struct SubcoverResult {
    bool ok = false;
    SetFamily subcover;
    bool exact = false; // exhaustive minimum vs greedy approximation
    std::string failure_reason;
    std::optional<std::pair<std::string, std::uint32_t>> witness; // point label, coordinate
};

/// Extracts a covering subfamily of minimal cardinality (exhaustive for
/// families of at most 12 sets, greedy beyond).  The family must consist
/// of opens of `topology`; a non-covering input yields a failure with a
/// witness point/coordinate.
SubcoverResult find_finite_subcover(const Cover& cover, const MultiFuzzyTopology& topology);

struct CompactnessOptions {
    std::size_t max_cover_size = 4;   // exhaustive enumeration cap
    std::uint64_t sample_count = 32;  // covers sampled above the cap
    std::uint64_t seed = 0;
};

struct CompactnessReport {
    bool cover_exists = false;       // the full opens family covers the universe
    bool vacuously_compact = false;  // no open cover exists at all
    bool compact = false;
    bool exhaustive = false; // enumeration below the cap completed
    std::uint64_t covers_enumerated = 0;
    std::uint64_t covers_sampled = 0;
    std::uint64_t subcovers_found = 0;
    std::size_t largest_min_subcover = 0;
    // Product refinement pattern: every enumerated basic open cover has a
    // finite basic subcover whose factor families cover the factors.
    bool product_pattern_checked = false;
    bool product_pattern_ok = false;
    std::uint64_t basic_covers_checked = 0;
};

CompactnessReport check_compact(const MultiFuzzyTopology& space,
                                const CompactnessOptions& options = {});
/// Additionally verifies the product refinement pattern over the basis.
CompactnessReport check_compact(const ProductSpace& product,
                                const CompactnessOptions& options = {});

} // namespace mftop
