/* topology.hpp -- Lowen/Chang multi-fuzzy topologies: axiom verification,
 * closure generation from seeds, open bases, minimal bases, intersections.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "mftop/set.hpp"

namespace mftop {

enum class TopologyKind { Lowen, Chang };

std::string to_string(TopologyKind kind);
TopologyKind topology_kind_from_string(std::string_view text);

/// A finite family of opens over one shape, canonically ordered and
/// deduplicated.  Construction does not verify the axioms; callers use
/// verify_axioms (or generate) when validity matters.
class MultiFuzzyTopology {
public:
    MultiFuzzyTopology(SpaceShape shape, TopologyKind kind, SetFamily opens);

    const SpaceShape& shape() const { return shape_; }
    TopologyKind kind() const { return kind_; }
    const SetFamily& opens() const { return opens_; }
    bool contains(const MultiFuzzySet& set) const { return family_contains(opens_, set); }

    bool operator==(const MultiFuzzyTopology& other) const {
        return shape_ == other.shape_ && kind_ == other.kind_ && opens_ == other.opens_;
    }

private:
    SpaceShape shape_;
    TopologyKind kind_;
    SetFamily opens_;
};

struct AxiomViolation {
    std::string code;   // "restricted-class", "missing-member", "meet-closure", "join-closure"
    std::string detail;
    SetFamily witnesses;
};

struct AxiomReport {
    bool ok = true;
    std::vector<AxiomViolation> violations;
};

/// Checks the topology axioms on a candidate family: restricted-class
/// membership, required members (null set and every non-null constant for
/// Lowen; null and absolute set for Chang), pairwise meet closure, and
/// join closure (pairwise plus the join of the whole family).
AxiomReport verify_axioms(const SpaceShape& shape, const SetFamily& candidate,
                          TopologyKind kind);
AxiomReport verify_axioms(const MultiFuzzyTopology& topology);

struct GenerateOptions {
    /// The Lowen completion: include every non-null constant.  Disabled
    /// only by the mutation harness, never in regular operation.
    bool include_constants = true;
};

/// Smallest Lowen topology containing the seeds: closure of
/// seeds + null set + all non-null constants under pairwise meet and join.
/// Seeds must be in the restricted class.  Idempotent and monotone.
MultiFuzzyTopology generate(const SpaceShape& shape, const SetFamily& seeds,
                            const GenerateOptions& options = {});

/// True iff every open except the null set is the join of some subfamily
/// of `base` (the null set is the empty join by convention).  `base` must
/// be a subfamily of the opens.
bool is_open_base(const SetFamily& base, const MultiFuzzyTopology& topology);

/// The join-irreducible opens: G is kept iff G differs from the join of
/// all opens strictly below it.  This is an open base of minimum
/// cardinality on a finite lattice.
SetFamily minimal_base(const MultiFuzzyTopology& topology);

/// Set intersection of the opens families; inputs must agree on shape and
/// kind.  The result again satisfies the axioms (intersection theorem).
MultiFuzzyTopology intersect_topologies(std::span<const MultiFuzzyTopology> topologies);

/// True iff the complement of `set` is open.
bool is_closed(const MultiFuzzySet& set, const MultiFuzzyTopology& topology);

} // namespace mftop
