/* morphisms.hpp -- maps between multi-fuzzy topological spaces:
 * continuity (four equivalent criteria), open/closed maps,
 * homeomorphisms, composition.
 */
#pragma once

#include "mftop/neighborhood.hpp"
#include "mftop/topology.hpp"

namespace mftop {

/// A point function bundled with domain and codomain spaces.  Both spaces
/// must share dimension and grade chain.
class SpaceMap {
public:
    SpaceMap(PointMap map, MultiFuzzyTopology domain, MultiFuzzyTopology codomain);

    const PointMap& map() const { return map_; }
    const MultiFuzzyTopology& domain() const { return domain_; }
    const MultiFuzzyTopology& codomain() const { return codomain_; }

    bool operator==(const SpaceMap& other) const {
        return map_ == other.map_ && domain_ == other.domain_ && codomain_ == other.codomain_;
    }

private:
    PointMap map_;
    MultiFuzzyTopology domain_;
    MultiFuzzyTopology codomain_;
};

SpaceMap identity_map(const MultiFuzzyTopology& space);

/// Preimage of every codomain open is a domain open.
bool is_continuous(const SpaceMap& m);

enum class ContinuityCriterion {
    OpenPreimage,   // (a) preimages of opens are open
    ClosedPreimage, // (b) preimages of closed sets are closed
    NbdPullback,    // (c) preimages of neighbourhoods of f(x) are neighbourhoods of x
    NbdWitness,     // (d) a neighbourhood M of x with f(M) below N and matching grade
};

std::string to_string(ContinuityCriterion criterion);
ContinuityCriterion continuity_criterion_from_string(std::string_view text);

/// Evaluates exactly the selected criterion; the four agree on every map
/// (equivalence theorem, exercised by tests and the mining harness).
bool is_continuous_via(const SpaceMap& m, ContinuityCriterion criterion);

/// Image of every open is open.
bool is_open_map(const SpaceMap& m);
/// Image of every closed set is closed.
bool is_closed_map(const SpaceMap& m);

/// Requires bijectivity.
SpaceMap inverse(const SpaceMap& m);

/// Bijective with both directions continuous.  The equivalent
/// "continuous and open" characterization is evaluated independently and
/// any disagreement (impossible unless the library is broken) throws.
bool is_homeomorphism(const SpaceMap& m);

/// (compose(f, g))(x) = g(f(x)); f's codomain space must equal g's domain
/// space.
SpaceMap compose(const SpaceMap& f, const SpaceMap& g);

} // namespace mftop
