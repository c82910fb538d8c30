/* neighborhood.hpp -- multi-fuzzy neighbourhoods, neighbourhood systems
 * (axioms N1..N5), the topology<->system constructions and round trip.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mftop/topology.hpp"

namespace mftop {

/// Per-point families of neighbourhood sets over one shape.  Families are
/// canonically ordered and deduplicated.  Members need not be in the
/// restricted class (the neighbourhood definition does not require it);
/// such members simply never become open.
class NbdSystem {
public:
    NbdSystem(SpaceShape shape, std::vector<SetFamily> families);

    const SpaceShape& shape() const { return shape_; }
    const SetFamily& family_at(std::size_t point_index) const;
    const SetFamily& family_at(std::string_view label) const;
    const std::vector<SetFamily>& families() const { return families_; }

    bool operator==(const NbdSystem& other) const {
        return shape_ == other.shape_ && families_ == other.families_;
    }

private:
    SpaceShape shape_;
    std::vector<SetFamily> families_;
};

/// Neighbourhood test, literally: some open G lies below F and carries
/// F's (strictly positive) grade tuple at the point.
bool is_nbd(const MultiFuzzySet& f, std::size_t point_index, const MultiFuzzyTopology& topology);
bool is_nbd(const MultiFuzzySet& f, std::string_view label, const MultiFuzzyTopology& topology);

/// The family of all grid sets that are neighbourhoods of the point.
SetFamily nbd_family(const MultiFuzzyTopology& topology, std::size_t point_index);
SetFamily nbd_family(const MultiFuzzyTopology& topology, std::string_view label);

/// All per-point neighbourhood families at once (one grid sweep).
std::vector<SetFamily> nbd_families(const MultiFuzzyTopology& topology);

/// The neighbourhood system L_tau with L(x) = the family of all
/// neighbourhoods of x.
NbdSystem nbd_from_topology(const MultiFuzzyTopology& topology);

struct NbdViolation {
    std::string axiom; // "N1".."N5"
    std::size_t point;
    std::string detail;
    SetFamily witnesses;
};

struct NbdReport {
    bool ok = true;
    std::vector<NbdViolation> violations;
};

/// Checks N1..N5 per point.  N4 is checked in the finite-chain attainment
/// form (see n4_hypothesis_attained); the real-interval quantification of
/// the axiom reduces to it because suprema on a finite chain are attained.
NbdReport verify_nbd_axioms(const NbdSystem& system);

/// The topology tau_L: the null set plus every restricted-class grid set
/// that belongs to L(x) at each of its positive points.  By default the
/// system is verified first and an invalid one is rejected; callers that
/// derived the system from a topology themselves may skip the check.
MultiFuzzyTopology topology_from_nbd(const NbdSystem& system, bool verify = true);

/// Neighbourhood openness criterion (proposition 2.12): every positive
/// point has an open witness below the set carrying the set's tuple
/// there.  The set must be in the restricted class.  Agrees with direct
/// membership for generated topologies.
bool open_via_nbd(const MultiFuzzySet& set, const MultiFuzzyTopology& topology);

namespace detail {

/// N4 hypothesis, attainment form: for each coordinate some member below
/// `f` matches f's grade at the point in that coordinate.
bool n4_hypothesis_attained(const SetFamily& family, const MultiFuzzySet& f,
                            std::size_t point_index);

/// N4 hypothesis quantified over grid values r with 0 < r < grade:
/// for each coordinate and each such r some member below `f` exceeds r at
/// the point.  Vacuous for coordinates at grade 1/D; elsewhere equivalent
/// to the attainment form (cross-checked in tests).
bool n4_hypothesis_grid_r(const SetFamily& family, const MultiFuzzySet& f,
                          std::size_t point_index);

} // namespace detail

} // namespace mftop
