/* morphisms.cpp */
#include "mftop/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace mftop {

SpaceMap::SpaceMap(PointMap map, MultiFuzzyTopology domain, MultiFuzzyTopology codomain)
    : map_(std::move(map)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
    if (map_.domain() != domain_.shape().universe ||
        map_.codomain() != codomain_.shape().universe)
        throw ShapeError("point map universes do not match the spaces");
    if (domain_.shape().dim != codomain_.shape().dim ||
        domain_.shape().chain != codomain_.shape().chain)
        throw ShapeError("spaces disagree on dimension or grade chain");
}

SpaceMap identity_map(const MultiFuzzyTopology& space) {
    return SpaceMap(PointMap::identity(space.shape().universe), space, space);
}

bool is_continuous(const SpaceMap& m) {
    for (const MultiFuzzySet& open : m.codomain().opens())
        if (!m.domain().contains(preimage(m.map(), open))) return false;
    return true;
}

std::string to_string(ContinuityCriterion criterion) {
    switch (criterion) {
    case ContinuityCriterion::OpenPreimage: return "open-preimage";
    case ContinuityCriterion::ClosedPreimage: return "closed-preimage";
    case ContinuityCriterion::NbdPullback: return "nbd-pullback";
    case ContinuityCriterion::NbdWitness: return "nbd-witness";
    }
    throw std::logic_error("unreachable");
}

ContinuityCriterion continuity_criterion_from_string(std::string_view text) {
    if (text == "open-preimage") return ContinuityCriterion::OpenPreimage;
    if (text == "closed-preimage") return ContinuityCriterion::ClosedPreimage;
    if (text == "nbd-pullback") return ContinuityCriterion::NbdPullback;
    if (text == "nbd-witness") return ContinuityCriterion::NbdWitness;
    throw ValueError("unknown continuity criterion '" + std::string(text) + "'");
}

namespace {

bool tuple_equal(const MultiFuzzySet& a, const MultiFuzzySet& b, std::size_t point) {
    auto ta = a.tuple_at(point);
    auto tb = b.tuple_at(point);
    return std::equal(ta.begin(), ta.end(), tb.begin());
}

bool continuous_via_closed(const SpaceMap& m) {
    for (const MultiFuzzySet& open : m.codomain().opens()) {
        const MultiFuzzySet closed = complement(open);
        if (!is_closed(preimage(m.map(), closed), m.domain())) return false;
    }
    return true;
}

bool continuous_via_pullback(const SpaceMap& m) {
    const auto cod_families = nbd_families(m.codomain());
    for (std::size_t x = 0; x < m.domain().shape().universe.size(); ++x) {
        const std::size_t fx = m.map().apply(x);
        for (const MultiFuzzySet& n : cod_families[fx])
            if (!is_nbd(preimage(m.map(), n), x, m.domain())) return false;
    }
    return true;
}

bool continuous_via_witness(const SpaceMap& m) {
    const auto dom_families = nbd_families(m.domain());
    const auto cod_families = nbd_families(m.codomain());
    for (std::size_t x = 0; x < m.domain().shape().universe.size(); ++x) {
        const std::size_t fx = m.map().apply(x);
        for (const MultiFuzzySet& n : cod_families[fx]) {
            const MultiFuzzySet pre = preimage(m.map(), n);
            // The preimage itself is the natural candidate witness; fall
            // back to scanning the whole family.
            bool found = family_contains(dom_families[x], pre) &&
                         leq(image(m.map(), pre), n);
            for (std::size_t k = 0; !found && k < dom_families[x].size(); ++k) {
                const MultiFuzzySet& candidate = dom_families[x][k];
                found = tuple_equal(candidate, pre, x) &&
                        leq(image(m.map(), candidate), n);
            }
            if (!found) return false;
        }
    }
    return true;
}

} // namespace

bool is_continuous_via(const SpaceMap& m, ContinuityCriterion criterion) {
    switch (criterion) {
    case ContinuityCriterion::OpenPreimage: return is_continuous(m);
    case ContinuityCriterion::ClosedPreimage: return continuous_via_closed(m);
    case ContinuityCriterion::NbdPullback: return continuous_via_pullback(m);
    case ContinuityCriterion::NbdWitness: return continuous_via_witness(m);
    }
    throw std::logic_error("unreachable");
}

bool is_open_map(const SpaceMap& m) {
    for (const MultiFuzzySet& open : m.domain().opens())
        if (!m.codomain().contains(image(m.map(), open))) return false;
    return true;
}

bool is_closed_map(const SpaceMap& m) {
    for (const MultiFuzzySet& open : m.domain().opens()) {
        const MultiFuzzySet closed = complement(open);
        if (!is_closed(image(m.map(), closed), m.codomain())) return false;
    }
    return true;
}

SpaceMap inverse(const SpaceMap& m) {
    return SpaceMap(m.map().inverse(), m.codomain(), m.domain());
}

bool is_homeomorphism(const SpaceMap& m) {
    if (!m.map().is_bijective()) return false;
    const bool forward = is_continuous(m);
    const bool both_ways = forward && is_continuous(inverse(m));
    const bool open_and_continuous = forward && is_open_map(m);
    if (both_ways != open_and_continuous)
        throw std::logic_error("homeomorphism characterizations disagree");
    return both_ways;
}

SpaceMap compose(const SpaceMap& f, const SpaceMap& g) {
    if (!(f.codomain() == g.domain()))
        throw ShapeError("composition requires f's codomain space to equal g's domain space");
    return SpaceMap(g.map().compose_after(f.map()), f.domain(), g.codomain());
}

} // namespace mftop
